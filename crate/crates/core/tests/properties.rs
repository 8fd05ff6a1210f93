//! Randomized properties and brute-force oracles.

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::Index;

use kss_core::kr_crystal::{enumerate_crystal, row_insert};
use kss_core::rational::{frac, q};
use kss_core::verify::small_multiplicity_arrays;
use kss_core::{
    check_similarity, enumerate_paths, enumerate_rcs, phi, phi_inv, Direction, Letter, MultiplicityArray, Path,
    Rank, RectTableau, Tableau, TensorShape,
};

const SHAPES: [&[(usize, usize)]; 8] = [
    &[(1, 1), (1, 1), (1, 1)],
    &[(1, 2), (2, 1)],
    &[(2, 2), (1, 1)],
    &[(1, 3), (1, 1), (2, 1)],
    &[(2, 1), (2, 1), (1, 2)],
    &[(1, 1), (2, 2), (1, 1)],
    &[(3, 1), (1, 2)],
    &[(2, 3)],
];

fn rank(n: usize) -> Rank {
    Rank::new(n).unwrap()
}

fn pick_path(n: usize, factors: &[(usize, usize)], picks: &[Index]) -> Path {
    let f = factors
        .iter()
        .zip(picks)
        .map(|(&(r, s), ix)| {
            let all = enumerate_crystal(r.min(n), s, rank(n));
            ix.get(&all).clone()
        })
        .collect();
    Path::new(rank(n), f).unwrap()
}

fn any_path() -> impl Strategy<Value = Path> {
    (3usize..=4, 0..SHAPES.len(), prop::collection::vec(any::<Index>(), 3))
        .prop_map(|(n, k, picks)| pick_path(n, SHAPES[k], &picks))
}

fn any_highest_weight_path() -> impl Strategy<Value = Path> {
    (2usize..=3, 0..SHAPES.len(), any::<Index>()).prop_map(|(n, k, ix)| {
        let factors = SHAPES[k].iter().map(|&(r, s)| (r.min(n), s)).collect();
        let all = enumerate_paths(&TensorShape::new(rank(n), factors).unwrap()).unwrap();
        ix.get(&all).clone()
    })
}

/// Bracket rule on the concatenated row words: `i` is `+`, `i+1` is `-`,
/// and each `-` immediately followed by `+` cancels.
fn naive_eps_phi(word: &[Letter], i: usize) -> (i64, i64) {
    let mut stack: Vec<char> = Vec::new();
    for &x in word {
        let sign = if x as usize == i {
            '+'
        } else if x as usize == i + 1 {
            '-'
        } else {
            continue;
        };
        if sign == '+' && stack.last() == Some(&'-') {
            stack.pop();
        } else {
            stack.push(sign);
        }
    }
    let minus = stack.iter().filter(|&&c| c == '-').count() as i64;
    (minus, stack.len() as i64 - minus)
}

fn concatenated_word(b: &Path) -> Vec<Letter> {
    b.factors().iter().flat_map(|t| t.row_word()).collect()
}

/// Schensted row insertion written out directly.
fn naive_insert(word: &[Letter]) -> Vec<Vec<Letter>> {
    let mut rows: Vec<Vec<Letter>> = Vec::new();
    for &x in word {
        let mut carry = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            match row.iter().position(|&y| y > carry) {
                Some(j) => std::mem::swap(&mut row[j], &mut carry),
                None => {
                    row.push(carry);
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            rows.push(vec![carry]);
        }
    }
    rows
}

fn partitions_up_to(total: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        for part in 1..=left.min(max) {
            current.push(part);
            go(left - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, &mut Vec::new(), &mut out);
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// `|RC(L)|` from the vacancy formula over all configurations, with
/// `binom(p + m, m)` riggings for `m` rows of vacancy `p`.
fn brute_force_rc_count(l: &MultiplicityArray, n: usize) -> (u64, BTreeSet<Vec<Vec<usize>>>) {
    let mut lengths: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut boxes = 0;
    for (a, len, count) in l.entries() {
        let len = len.to_integer() as usize;
        for _ in 0..count {
            lengths[a].push(len);
        }
        boxes += a * len * count as usize;
    }
    let parts = partitions_up_to(boxes);
    let q_of = |mu: &[usize], i: usize| -> i64 { mu.iter().map(|&x| x.min(i) as i64).sum() };
    let mut count = 0;
    let mut shapes = BTreeSet::new();
    let mut choice = vec![0usize; n];
    'outer: loop {
        let nu: Vec<&Vec<usize>> = choice.iter().map(|&k| &parts[k]).collect();
        let max_len = nu.iter().flat_map(|p| p.iter()).chain(lengths.iter().flatten()).max().copied().unwrap_or(0);
        let vacancy = |a: usize, i: usize| -> i64 {
            let below = if a >= 2 { q_of(nu[a - 2], i) } else { 0 };
            let above = if a < n { q_of(nu[a], i) } else { 0 };
            q_of(&lengths[a], i) + below + above - 2 * q_of(nu[a - 1], i)
        };
        let admissible = (1..=n).all(|a| (1..=max_len + 1).all(|i| vacancy(a, i) >= 0));
        if admissible {
            let mut riggings = 1;
            for a in 1..=n {
                let distinct: BTreeSet<usize> = nu[a - 1].iter().copied().collect();
                for i in distinct {
                    let m = nu[a - 1].iter().filter(|&&x| x == i).count() as u64;
                    riggings *= binomial(vacancy(a, i) as u64 + m, m);
                }
            }
            count += riggings;
            shapes.insert(nu.iter().map(|p| (*p).clone()).collect());
        }
        for k in 0..n {
            choice[k] += 1;
            if choice[k] < parts.len() {
                continue 'outer;
            }
            choice[k] = 0;
        }
        break;
    }
    (count, shapes)
}

#[test]
fn tensor_signature_matches_bracket_rule() {
    for n in 1..=3 {
        for shape in [vec![(1, 1), (1, 2)], vec![(2, 1), (1, 1)], vec![(1, 2), (2, 2)]] {
            let shape: Vec<_> = shape.into_iter().map(|(r, s)| (r.min(n), s)).collect();
            let left = enumerate_crystal(shape[0].0, shape[0].1, rank(n));
            let right = enumerate_crystal(shape[1].0, shape[1].1, rank(n));
            for x in &left {
                for y in &right {
                    let b = Path::new(rank(n), vec![x.clone(), y.clone()]).unwrap();
                    for i in 1..=n {
                        assert_eq!(b.eps_phi(i), naive_eps_phi(&concatenated_word(&b), i), "{b} at {i}");
                    }
                }
            }
        }
    }
}

#[test]
fn enumeration_matches_filtered_product() {
    for n in 1..=3 {
        for factors in [vec![(1, 1); 4], vec![(1, 2), (2, 1), (1, 1)], vec![(2, 2), (1, 2)], vec![(1, 3), (1, 1), (1, 1)]] {
            let factors: Vec<_> = factors.into_iter().map(|(r, s)| (r.min(n), s)).collect();
            let mut all: Vec<Vec<RectTableau>> = vec![Vec::new()];
            for &(r, s) in &factors {
                let elems = enumerate_crystal(r, s, rank(n));
                all = all
                    .into_iter()
                    .flat_map(|prefix| {
                        elems.iter().map(move |e| {
                            let mut p = prefix.clone();
                            p.push(e.clone());
                            p
                        })
                    })
                    .collect();
            }
            let brute: BTreeSet<String> = all
                .into_iter()
                .map(|f| Path::new(rank(n), f).unwrap())
                .filter(|b| (1..=n).all(|i| naive_eps_phi(&concatenated_word(b), i).0 == 0))
                .map(|b| b.to_string())
                .collect();
            let shape = TensorShape::new(rank(n), factors).unwrap();
            let found: Vec<String> = enumerate_paths(&shape).unwrap().iter().map(|b| b.to_string()).collect();
            assert_eq!(found.len(), brute.len(), "{:?}", shape.factors());
            assert_eq!(found.into_iter().collect::<BTreeSet<_>>(), brute);
        }
    }
}

#[test]
fn rc_enumeration_matches_vacancy_count() {
    for n in 1..=3 {
        for l in small_multiplicity_arrays(n, 4).unwrap() {
            let (count, shapes) = brute_force_rc_count(&l, n);
            let rcs = enumerate_rcs(&l).unwrap();
            assert_eq!(rcs.len() as u64, count, "{l:?}");
            for rc in &rcs {
                let nu: Vec<Vec<usize>> =
                    (1..=n).map(|a| rc.partition(a).iter().map(|x| x.to_integer() as usize).collect()).collect();
                assert!(shapes.contains(&nu), "{rc}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn eps_phi_follows_bracket_rule(b in any_path()) {
        let word = concatenated_word(&b);
        for i in 1..=b.rank().n() {
            prop_assert_eq!(b.eps_phi(i), naive_eps_phi(&word, i));
            prop_assert_eq!(b.eps_phi(i), b.eps_phi_left_fold(i));
        }
    }

    #[test]
    fn raise_undoes_lower(b in any_path()) {
        for i in 1..=b.rank().n() {
            if let Some(c) = b.lower(i) {
                prop_assert_eq!(c.raise(i), Some(b.clone()));
                prop_assert_eq!(c.eps(i), b.eps(i) + 1);
            } else {
                prop_assert_eq!(b.phi(i), 0);
            }
            if let Some(c) = b.apply(i, Direction::Raise) {
                prop_assert_eq!(c.lower(i), Some(b.clone()));
            }
        }
    }

    #[test]
    fn insertion_matches_schensted(word in prop::collection::vec(1u8..=5, 0..24)) {
        let word: Vec<Letter> = word.into_iter().map(Letter::from).collect();
        let got = row_insert(&Tableau::empty(), &word);
        prop_assert_eq!(got.rows().to_vec(), naive_insert(&word));
    }

    #[test]
    fn bijection_round_trip(b in any_highest_weight_path()) {
        let rc = phi(&b).unwrap();
        prop_assert_eq!(rc.weight(), b.weight());
        prop_assert_eq!(phi_inv(&rc, &b.shape()).unwrap(), b);
    }

    #[test]
    fn similarity_random(b in any_highest_weight_path(), m in 2usize..=4) {
        prop_assert!(check_similarity(&b, m).unwrap());
    }

    #[test]
    fn rc_stretch_composes(b in any_highest_weight_path(), num in 1i64..=6, den in 1i64..=6) {
        let rc = phi(&b).unwrap();
        let x = frac(num, den);
        prop_assert_eq!(rc.stretch(x).stretch(frac(den, num)), rc.clone());
        prop_assert_eq!(rc.stretch(q(num)).stretch(q(den)), rc.stretch(q(num * den)));
    }
}
