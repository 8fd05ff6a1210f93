//! Tensor products of KR crystals and highest-weight paths.
//!
//! Factors are stored leftmost first. The two-factor rules are written for
//! `b2 (x) b1`; `b2` is always the factor further to the left, so folding a
//! path runs from the last stored factor towards the first.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kr_crystal::{enumerate_crystal, CoordArray, Direction, Letter, Rank, RectTableau};
use crate::rational::{denominator_lcm, q, Q};
use crate::weight::Weight;

/// Default cap on candidate prefixes visited by [`enumerate_paths`].
pub const DEFAULT_PATH_BUDGET: u64 = 10_000_000;

/// `B^{r_k,s_k} (x) ... (x) B^{r_1,s_1}` as a leftmost-first list of `(r, s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorShape {
    rank: Rank,
    factors: Vec<(usize, usize)>,
}

impl TensorShape {
    pub fn new(rank: Rank, factors: Vec<(usize, usize)>) -> Result<Self> {
        for &(r, s) in &factors {
            if r == 0 || r > rank.n() || s == 0 {
                return Err(Error::ShapeMismatch(format!(
                    "factor B^{{{r},{s}}} needs 1 <= r <= {} and s >= 1",
                    rank.n()
                )));
            }
        }
        Ok(TensorShape { rank, factors })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn factors(&self) -> &[(usize, usize)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_boxes(&self) -> usize {
        self.factors.iter().map(|&(r, s)| r * s).sum()
    }

    pub fn stretch(&self, m: usize) -> Self {
        TensorShape {
            rank: self.rank,
            factors: self.factors.iter().map(|&(r, s)| (r, s * m)).collect(),
        }
    }

    pub fn with_rank(&self, rank: Rank) -> Result<Self> {
        TensorShape::new(rank, self.factors.clone())
    }
}

/// Combines `(eps, phi)` of `b2` (left) and `b1` (right) into those of `b2 (x) b1`.
pub fn combine_eps_phi<T>(left: (T, T), right: (T, T)) -> (T, T)
where
    T: Copy + Ord + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    let (e2, p2) = left;
    let (e1, p1) = right;
    (e1.max(e1 + e2 - p1), p2.max(p1 + p2 - e2))
}

/// An element of a tensor product of KR crystals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    rank: Rank,
    factors: Vec<RectTableau>,
}

impl Path {
    pub fn new(rank: Rank, factors: Vec<RectTableau>) -> Result<Self> {
        for t in &factors {
            if t.rank() != rank {
                return Err(Error::ShapeMismatch("factor rank differs from path rank".into()));
            }
            if t.height() > rank.n() {
                return Err(Error::ShapeMismatch(format!(
                    "factor with {} rows exceeds the rank {}",
                    t.height(),
                    rank.n()
                )));
            }
        }
        Ok(Path { rank, factors })
    }

    pub fn empty(rank: Rank) -> Self {
        Path { rank, factors: Vec::new() }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn factors(&self) -> &[RectTableau] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn shape(&self) -> TensorShape {
        TensorShape {
            rank: self.rank,
            factors: self.factors.iter().map(|t| (t.height(), t.width())).collect(),
        }
    }

    pub fn with_rank(&self, rank: Rank) -> Result<Self> {
        let factors = self.factors.iter().map(|t| t.with_rank(rank)).collect::<Result<_>>()?;
        Path::new(rank, factors)
    }

    /// Concatenation of the factor row words, leftmost factor first.
    pub fn row_word(&self) -> Vec<Letter> {
        self.factors.iter().flat_map(|t| t.row_word()).collect()
    }

    fn check_index(&self, i: usize) {
        assert!(
            (1..=self.rank.n()).contains(&i),
            "classical index {i} outside 1..={}",
            self.rank.n()
        );
    }

    /// `(eps_i, phi_i)` by folding the two-factor rules from the right.
    pub fn eps_phi(&self, i: usize) -> (i64, i64) {
        self.check_index(i);
        self.factors.iter().rev().fold((0, 0), |acc, t| {
            let (e, p) = t.eps_phi(i);
            combine_eps_phi((e as i64, p as i64), acc)
        })
    }

    /// Same quantity folded from the left; agrees with [`Path::eps_phi`].
    pub fn eps_phi_left_fold(&self, i: usize) -> (i64, i64) {
        self.check_index(i);
        self.factors.iter().fold((0, 0), |acc, t| {
            let (e, p) = t.eps_phi(i);
            combine_eps_phi(acc, (e as i64, p as i64))
        })
    }

    pub fn eps(&self, i: usize) -> i64 {
        self.eps_phi(i).0
    }

    pub fn phi(&self, i: usize) -> i64 {
        self.eps_phi(i).1
    }

    /// `e_i` / `f_i` through the tensor product rule.
    pub fn apply(&self, i: usize, dir: Direction) -> Option<Self> {
        self.check_index(i);
        let k = self.factors.len();
        let local: Vec<(i64, i64)> = self
            .factors
            .iter()
            .map(|t| {
                let (e, p) = t.eps_phi(i);
                (e as i64, p as i64)
            })
            .collect();
        // suffix[j] = (eps, phi) of factors j.. ; suffix[k] is the empty product.
        let mut suffix = vec![(0i64, 0i64); k + 1];
        for j in (0..k).rev() {
            suffix[j] = combine_eps_phi(local[j], suffix[j + 1]);
        }
        let total = suffix[0];
        match dir {
            Direction::Raise if total.0 == 0 => return None,
            Direction::Lower if total.1 == 0 => return None,
            _ => {}
        }
        let mut j = 0;
        while j + 1 < k {
            let (e2, _) = local[j];
            let (_, p1) = suffix[j + 1];
            let go_right = match dir {
                Direction::Raise => e2 <= p1,
                Direction::Lower => e2 < p1,
            };
            if !go_right {
                break;
            }
            j += 1;
        }
        let mut out = self.clone();
        out.factors[j] = self.factors[j].apply_kashiwara(i, dir)?;
        Some(out)
    }

    pub fn raise(&self, i: usize) -> Option<Self> {
        self.apply(i, Direction::Raise)
    }

    pub fn lower(&self, i: usize) -> Option<Self> {
        self.apply(i, Direction::Lower)
    }

    pub fn is_highest_weight(&self) -> bool {
        (1..=self.rank.n()).all(|i| self.eps(i) == 0)
    }

    pub fn weight(&self) -> Weight {
        self.factors
            .iter()
            .fold(Weight::zero(self.rank.n()), |acc, t| &acc + &t.weight())
    }

    /// `lh`: drops a leftmost `B^{1,1}` factor, returning its letter.
    pub fn lh(&self) -> Result<(Letter, Self)> {
        match self.factors.first() {
            Some(c) if c.height() == 1 && c.width() == 1 => {
                Ok((c.get(0, 0), Path { rank: self.rank, factors: self.factors[1..].to_vec() }))
            }
            _ => Err(Error::ShapeMismatch("lh needs a leftmost B^{1,1} factor".into())),
        }
    }

    /// `lb^{(s)}`: splits the leftmost `B^{r,s}` (`r >= 2`) into its bottom row
    /// followed by the remaining rows.
    pub fn lb(&self) -> Result<Self> {
        match self.factors.first() {
            Some(c) if c.height() >= 2 => {
                let (bottom, rest) = c.split_bottom_row();
                Ok(self.replace_leftmost(vec![bottom, rest]))
            }
            _ => Err(Error::ShapeMismatch("lb needs a leftmost factor with r >= 2".into())),
        }
    }

    /// `ls^{(m)}`: splits the leftmost `B^{r,s}` into its leftmost `m`
    /// columns followed by the remaining `s - m` columns.
    pub fn ls(&self, m: usize) -> Result<Self> {
        match self.factors.first() {
            Some(c) if c.width() >= 2 && m >= 1 && m < c.width() => {
                let (left, right) = c.split_columns(m);
                Ok(self.replace_leftmost(vec![left, right]))
            }
            _ => Err(Error::ShapeMismatch(format!(
                "ls^({m}) needs a leftmost factor with s > {m} >= 1"
            ))),
        }
    }

    fn replace_leftmost(&self, head: Vec<RectTableau>) -> Self {
        let mut factors = head;
        factors.extend_from_slice(&self.factors[1..]);
        Path { rank: self.rank, factors }
    }

    /// Smallest rank in which [`Path::tr`] of this highest-weight path lives.
    pub fn transpose_rank(&self) -> Result<Rank> {
        let ones = self.row_word().iter().filter(|&&x| x == 1).count();
        let widest = self.factors.iter().map(RectTableau::width).max().unwrap_or(0);
        Rank::new(widest.max(ones.saturating_sub(1)).max(1))
    }

    /// Transpose of a highest-weight path in the smallest admissible rank.
    pub fn tr(&self) -> Result<Self> {
        if !self.is_highest_weight() {
            return Err(Error::NotHighestWeight);
        }
        self.tr_at_rank(self.transpose_rank()?)
    }

    /// Transpose of a highest-weight path: each factor is reflected through
    /// its anti-diagonal and a letter `a` becomes `k` when it is the `k`-th
    /// letter `a` of the row word counted from the right.
    pub fn tr_at_rank(&self, rank: Rank) -> Result<Self> {
        if !self.is_highest_weight() {
            return Err(Error::NotHighestWeight);
        }
        if rank < self.transpose_rank()? {
            return Err(Error::ShapeMismatch(format!(
                "rank {} is too small for the transposed path",
                rank.n()
            )));
        }
        let word = self.row_word();
        let mut seen: HashMap<Letter, usize> = HashMap::new();
        let mut relabel = vec![0 as Letter; word.len()];
        for k in (0..word.len()).rev() {
            let c = seen.entry(word[k]).or_insert(0);
            *c += 1;
            relabel[k] = *c as Letter;
        }
        let mut offset = 0;
        let mut factors = Vec::with_capacity(self.factors.len());
        for t in &self.factors {
            let (r, s) = (t.height(), t.width());
            let mut grid = vec![vec![0 as Letter; r]; s];
            for k in 0..r * s {
                let (p, c) = (r - 1 - k / s, k % s);
                grid[s - 1 - c][r - 1 - p] = relabel[offset + k];
            }
            offset += r * s;
            factors.push(RectTableau::new(grid, rank).map_err(|e| {
                Error::VerificationFailed(format!("transpose produced an invalid factor: {e}"))
            })?);
        }
        Path::new(rank, factors)
    }

    /// `S_m` applied factorwise.
    pub fn stretch(&self, m: usize) -> Self {
        Path { rank: self.rank, factors: self.factors.iter().map(|t| t.stretch(m)).collect() }
    }

    /// `S_m` for a rational factor; the result lives in coordinates.
    pub fn stretch_rational(&self, m: Q) -> RationalPath {
        RationalPath::from_path(self).stretch(m)
    }
}

impl std::fmt::Display for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" (x) "))
    }
}

/// All highest-weight elements of `shape`, sorted.
pub fn enumerate_paths(shape: &TensorShape) -> Result<Vec<Path>> {
    enumerate_paths_with_budget(shape, DEFAULT_PATH_BUDGET)
}

/// Right-to-left search using `eps_i(b2 (x) b1) = 0` iff `eps_i(b1) = 0`
/// and `eps_i(b2) <= phi_i(b1)`.
pub fn enumerate_paths_with_budget(shape: &TensorShape, budget: u64) -> Result<Vec<Path>> {
    let n = shape.rank.n();
    let mut tables: HashMap<(usize, usize), Vec<(RectTableau, Vec<i64>, Vec<i64>)>> = HashMap::new();
    for &(r, s) in &shape.factors {
        tables.entry((r, s)).or_insert_with(|| {
            enumerate_crystal(r, s, shape.rank)
                .into_iter()
                .map(|t| {
                    let (e, p): (Vec<i64>, Vec<i64>) = (1..=n)
                        .map(|i| {
                            let (e, p) = t.eps_phi(i);
                            (e as i64, p as i64)
                        })
                        .unzip();
                    (t, e, p)
                })
                .collect()
        });
    }
    let order: Vec<&Vec<(RectTableau, Vec<i64>, Vec<i64>)>> =
        shape.factors.iter().rev().map(|key| &tables[key]).collect();

    struct Search<'a> {
        order: Vec<&'a Vec<(RectTableau, Vec<i64>, Vec<i64>)>>,
        budget: u64,
        visited: u64,
        chosen: Vec<usize>,
        out: Vec<Vec<usize>>,
    }
    impl Search<'_> {
        fn go(&mut self, depth: usize, phi: &[i64]) -> Result<()> {
            if depth == self.order.len() {
                self.out.push(self.chosen.clone());
                return Ok(());
            }
            let table = self.order[depth];
            for (idx, (_, e, p)) in table.iter().enumerate() {
                self.visited += 1;
                if self.visited > self.budget {
                    return Err(Error::BudgetExceeded(self.budget));
                }
                if e.iter().zip(phi).any(|(e2, p1)| e2 > p1) {
                    continue;
                }
                let next: Vec<i64> = (0..phi.len()).map(|i| p[i].max(phi[i] + p[i] - e[i])).collect();
                self.chosen.push(idx);
                self.go(depth + 1, &next)?;
                self.chosen.pop();
            }
            Ok(())
        }
    }
    let mut search = Search { order, budget, visited: 0, chosen: Vec::new(), out: Vec::new() };
    search.go(0, &vec![0; n])?;
    let mut paths: Vec<Path> = search
        .out
        .into_iter()
        .map(|choice| {
            let factors = choice
                .iter()
                .enumerate()
                .rev()
                .map(|(depth, &idx)| search.order[depth][idx].0.clone())
                .collect();
            Path { rank: shape.rank, factors }
        })
        .collect();
    paths.sort();
    Ok(paths)
}

/// A path whose factors are rational points of the polytopes `B^{r,s}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPath {
    rank: Rank,
    factors: Vec<CoordArray>,
}

impl RationalPath {
    pub fn new(rank: Rank, factors: Vec<CoordArray>) -> Result<Self> {
        for c in &factors {
            if c.rank() != rank {
                return Err(Error::ShapeMismatch("factor rank differs from path rank".into()));
            }
            if c.height() > rank.n() {
                return Err(Error::ShapeMismatch(format!(
                    "factor with {} rows exceeds the rank {}",
                    c.height(),
                    rank.n()
                )));
            }
        }
        Ok(RationalPath { rank, factors })
    }

    pub fn from_path(b: &Path) -> Self {
        RationalPath { rank: b.rank, factors: b.factors.iter().map(|t| t.to_coords()).collect() }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn factors(&self) -> &[CoordArray] {
        &self.factors
    }

    /// Leftmost-first `(r, s)` with rational `s`.
    pub fn shape(&self) -> Vec<(usize, Q)> {
        self.factors.iter().map(|c| (c.height(), c.width())).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.factors.iter().all(|c| c.is_integral())
    }

    /// Smallest positive integer `m0` with `m0 * x` integral for every coordinate.
    pub fn scale_denominator(&self) -> i64 {
        denominator_lcm(self.factors.iter().flat_map(|c| c.values()))
    }

    pub fn to_path(&self) -> Result<Path> {
        let factors = self.factors.iter().map(|c| c.to_tableau()).collect::<Result<_>>()?;
        Path::new(self.rank, factors)
    }

    /// `S_m` for any positive rational `m`.
    pub fn stretch(&self, m: Q) -> Self {
        RationalPath { rank: self.rank, factors: self.factors.iter().map(|c| c.scale(m)).collect() }
    }

    /// `(eps_i, phi_i)` defined by `eps_i(b) = eps_i(S_m0 b) / m0`.
    pub fn eps_phi(&self, i: usize) -> (Q, Q) {
        let m0 = self.scale_denominator();
        let integral = self
            .stretch(q(m0))
            .to_path()
            .expect("scaling by the denominator lcm gives integral coordinates");
        let (e, p) = integral.eps_phi(i);
        (Q::new(e, m0), Q::new(p, m0))
    }

    pub fn is_highest_weight(&self) -> bool {
        (1..=self.rank.n()).all(|i| self.eps_phi(i).0.is_zero())
    }

    pub fn weight(&self) -> Weight {
        let n = self.rank.n();
        let mut fundamental = vec![Q::zero(); n];
        let mut lambda = vec![Q::zero(); n + 1];
        for c in &self.factors {
            fundamental[c.height() - 1] += c.width();
            for (_, j, v) in c.entries() {
                lambda[j - 1] += v;
            }
        }
        Weight::from_epsilon(fundamental, &lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn tab(rows: &[&[Letter]], n: usize) -> RectTableau {
        RectTableau::new(rows.iter().map(|r| r.to_vec()).collect(), rank(n)).unwrap()
    }

    fn path(factors: &[&[&[Letter]]], n: usize) -> Path {
        Path::new(rank(n), factors.iter().map(|f| tab(f, n)).collect()).unwrap()
    }

    fn b_star() -> Path {
        path(&[&[&[1, 1, 2], &[2, 3, 4]], &[&[2], &[3]], &[&[1, 1, 1, 3]], &[&[2]], &[&[1]]], 3)
    }

    #[test]
    fn example_path_is_highest_weight() {
        let b = b_star();
        for i in 1..=3 {
            assert_eq!(b.eps(i), 0);
            assert_eq!(b.raise(i), None);
        }
        assert!(b.is_highest_weight());
        let w = b.weight();
        assert_eq!(w.fundamental(), &[q(6), q(4), q(0)]);
        assert_eq!(w.root(), &[q(4), q(4), q(1)]);
        assert_eq!(w.epsilon(), vec![q(6), q(4), q(3), q(1)]);
    }

    #[test]
    fn two_factor_rules() {
        let p = path(&[&[&[2]], &[&[1]]], 1);
        assert_eq!(p.eps_phi(1), (0, 0));
        let p = path(&[&[&[1]], &[&[2]]], 1);
        assert_eq!(p.eps_phi(1), (1, 1));
        // f_1 on [1] (x) [1]: eps of the left factor (0) < phi of the right (1).
        let p = path(&[&[&[1]], &[&[1]]], 1);
        assert_eq!(p.lower(1), Some(path(&[&[&[1]], &[&[2]]], 1)));
        let up = p.lower(1).unwrap().raise(1).unwrap();
        assert_eq!(up, p);
    }

    #[test]
    fn highest_weight_predicate() {
        assert!(!path(&[&[&[2]]], 1).is_highest_weight());
        assert!(path(&[&[&[1, 1], &[2, 2]]], 2).is_highest_weight());
    }

    #[test]
    fn enumerate_small() {
        let shape = TensorShape::new(rank(1), vec![(1, 1), (1, 1)]).unwrap();
        let paths = enumerate_paths(&shape).unwrap();
        assert_eq!(paths, vec![path(&[&[&[1]], &[&[1]]], 1), path(&[&[&[2]], &[&[1]]], 1)]);
        let single = TensorShape::new(rank(3), vec![(2, 3)]).unwrap();
        assert_eq!(enumerate_paths(&single).unwrap().len(), 1);
        let star = b_star();
        assert!(enumerate_paths(&star.shape()).unwrap().contains(&star));
    }

    #[test]
    fn enumeration_budget() {
        let shape = TensorShape::new(rank(3), vec![(1, 1); 6]).unwrap();
        assert_eq!(enumerate_paths_with_budget(&shape, 10), Err(Error::BudgetExceeded(10)));
    }

    #[test]
    fn reduction_maps_on_example() {
        let b = b_star();
        let b1 = b.ls(1).unwrap();
        let tail: Vec<&[&[Letter]]> = vec![&[&[2], &[3]], &[&[1, 1, 1, 3]], &[&[2]], &[&[1]]];
        let mut f: Vec<&[&[Letter]]> = vec![&[&[1], &[2]], &[&[1, 2], &[3, 4]]];
        f.extend(tail.iter().copied());
        assert_eq!(b1, path(&f, 3));
        let b2 = b1.lb().unwrap();
        let mut f: Vec<&[&[Letter]]> = vec![&[&[2]], &[&[1]], &[&[1, 2], &[3, 4]]];
        f.extend(tail.iter().copied());
        assert_eq!(b2, path(&f, 3));
        let (letter, b3) = b2.lh().unwrap();
        assert_eq!(letter, 2);
        let mut f: Vec<&[&[Letter]]> = vec![&[&[1]], &[&[1, 2], &[3, 4]]];
        f.extend(tail.iter().copied());
        assert_eq!(b3, path(&f, 3));
        for p in [&b1, &b2, &b3] {
            assert!(p.is_highest_weight());
        }
        assert!(matches!(b.lh(), Err(Error::ShapeMismatch(_))));
        assert!(matches!(b3.lb(), Err(Error::ShapeMismatch(_))));
        assert!(matches!(b.ls(3), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn transpose_example() {
        let t = b_star().tr().unwrap();
        assert_eq!(t.rank().n(), 5);
        let expect = path(&[&[&[1, 3], &[3, 5], &[4, 6]], &[&[2, 2]], &[&[1], &[2], &[3], &[4]], &[&[1]], &[&[1]]], 5);
        assert_eq!(t, expect);
        assert_eq!(t.tr_at_rank(rank(3)).unwrap(), b_star());
        let one = path(&[&[&[1]]], 1);
        assert_eq!(one.tr().unwrap(), one);
        assert_eq!(path(&[&[&[1]], &[&[2]]], 1).tr(), Err(Error::NotHighestWeight));
    }

    #[test]
    fn stretch_example() {
        let s2 = b_star().stretch(2);
        let expect = path(
            &[
                &[&[1, 1, 1, 1, 2, 2], &[2, 2, 3, 3, 4, 4]],
                &[&[2, 2], &[3, 3]],
                &[&[1, 1, 1, 1, 1, 1, 3, 3]],
                &[&[2, 2]],
                &[&[1, 1]],
            ],
            3,
        );
        assert_eq!(s2, expect);
        assert!(s2.is_highest_weight());
        assert_eq!(b_star().stretch(1), b_star());
        let back = s2.stretch_rational(frac(1, 2));
        assert_eq!(back, RationalPath::from_path(&b_star()));
    }

    #[test]
    fn rational_path_scaling() {
        let half = b_star().stretch_rational(frac(1, 2));
        assert_eq!(half.scale_denominator(), 2);
        assert!(half.is_highest_weight());
        assert_eq!(half.shape()[0], (2, frac(3, 2)));
        assert_eq!(half.to_path(), Err(Error::NonIntegerCoordinates));
        assert_eq!(half.stretch(q(2)).to_path().unwrap(), b_star());
        let (_, p) = half.eps_phi(1);
        assert_eq!(p, Q::new(b_star().phi(1), 2));
        assert_eq!(half.stretch(frac(2, 3)).stretch(frac(3, 2)), half);
        let w = half.weight();
        assert_eq!(w.epsilon(), vec![q(3), q(2), frac(3, 2), frac(1, 2)]);
    }
}
