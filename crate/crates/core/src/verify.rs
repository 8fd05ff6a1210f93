//! Exhaustive and randomized property suites over small tensor products.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cli::{parse_document, serialize_document, Document, Format};
use crate::error::{Error, Result};
use crate::kr_crystal::{enumerate_crystal, Direction, Rank, RectTableau};
use crate::kss::{check_similarity, phi, phi_inv, phi_q, phi_q_inv, phi_q_with_multiplier};
use crate::r_matrix::{r_apply, r_at, RPair};
use crate::rational::{q, Q};
use crate::rigged_config::{delta_law_checks, enumerate_rcs, MultiplicityArray, RiggedConfig};
use crate::tensor_path::{enumerate_paths, Path, RationalPath, TensorShape};

/// Factor types of the battery: `B^{1,1}, B^{1,2}, B^{2,1}, B^{2,2}, B^{1,3}`.
pub const FACTOR_TYPES: [(usize, usize); 5] = [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3)];

const MAX_REPORTED: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Bijection,
    Similarity,
    Transpose,
    Rmatrix,
    Roundtrip,
    Rational,
    Diagrams,
    Lemma,
    Crystal,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Bijection,
        Suite::Similarity,
        Suite::Transpose,
        Suite::Rmatrix,
        Suite::Roundtrip,
        Suite::Rational,
        Suite::Diagrams,
        Suite::Lemma,
        Suite::Crystal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijection => "bijection",
            Suite::Similarity => "similarity",
            Suite::Transpose => "transpose",
            Suite::Rmatrix => "rmatrix",
            Suite::Roundtrip => "roundtrip",
            Suite::Rational => "rational",
            Suite::Diagrams => "diagrams",
            Suite::Lemma => "lemma",
            Suite::Crystal => "crystal",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n: usize,
    pub max_boxes: usize,
    /// Stretch factors for the similarity suite and the m-boxes lemma.
    pub m: Vec<usize>,
    pub seed: u64,
    /// Random rational paths drawn per shape.
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n: 2, max_boxes: 6, m: vec![2, 3], seed: 0, samples: 100 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub max_boxes: usize,
    pub shapes: usize,
    pub checks: u64,
    pub failures: u64,
    pub examples: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Check counter with the first few failure messages.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub checks: u64,
    pub failures: u64,
    pub examples: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(what());
        }
    }

    pub fn fail(&mut self, what: String) {
        self.failures += 1;
        if self.examples.len() < MAX_REPORTED {
            self.examples.push(what);
        }
    }

    /// Records an `Ok(true)` as a pass, anything else as a failure.
    pub fn check_result(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => {
                self.checks += 1;
                self.fail(format!("{}: {e}", what()));
            }
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures += other.failures;
        for e in other.examples {
            if self.examples.len() < MAX_REPORTED {
                self.examples.push(e);
            }
        }
        self
    }
}

fn merge_all(parts: Vec<Tally>) -> Tally {
    parts.into_iter().fold(Tally::default(), Tally::merge)
}

/// Ordered factor sequences from [`FACTOR_TYPES`] with at most `max_boxes`
/// boxes, shortest first.
pub fn battery(n: usize, max_boxes: usize) -> Result<Vec<TensorShape>> {
    let rank = Rank::new(n)?;
    let types: Vec<(usize, usize)> = FACTOR_TYPES.iter().copied().filter(|&(r, _)| r <= n).collect();
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for seq in &frontier {
            let boxes: usize = seq.iter().map(|&(r, s)| r * s).sum();
            for &t in &types {
                if boxes + t.0 * t.1 <= max_boxes {
                    let mut longer = seq.clone();
                    longer.push(t);
                    next.push(longer);
                }
            }
        }
        for seq in &next {
            out.push(TensorShape::new(rank, seq.clone())?);
        }
        frontier = next;
    }
    Ok(out)
}

fn path_cache() -> &'static Mutex<HashMap<TensorShape, Arc<Vec<Path>>>> {
    static CACHE: OnceLock<Mutex<HashMap<TensorShape, Arc<Vec<Path>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn rc_cache() -> &'static Mutex<HashMap<MultiplicityArray, Arc<Vec<RiggedConfig>>>> {
    static CACHE: OnceLock<Mutex<HashMap<MultiplicityArray, Arc<Vec<RiggedConfig>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Highest-weight paths of `shape`, memoized.
pub fn cached_paths(shape: &TensorShape) -> Result<Arc<Vec<Path>>> {
    if let Some(hit) = path_cache().lock().expect("cache lock").get(shape) {
        return Ok(hit.clone());
    }
    let paths = Arc::new(enumerate_paths(shape)?);
    path_cache().lock().expect("cache lock").insert(shape.clone(), paths.clone());
    Ok(paths)
}

/// `RC(L)`, memoized.
pub fn cached_rcs(l: &MultiplicityArray) -> Result<Arc<Vec<RiggedConfig>>> {
    if let Some(hit) = rc_cache().lock().expect("cache lock").get(l) {
        return Ok(hit.clone());
    }
    let rcs = Arc::new(enumerate_rcs(l)?);
    rc_cache().lock().expect("cache lock").insert(l.clone(), rcs.clone());
    Ok(rcs)
}

fn per_shape<F>(shapes: &[TensorShape], f: F) -> Tally
where
    F: Fn(&TensorShape, &mut Tally) -> Result<()> + Sync,
{
    let parts: Vec<Tally> = shapes
        .par_iter()
        .map(|shape| {
            let mut t = Tally::default();
            if let Err(e) = f(shape, &mut t) {
                t.checks += 1;
                t.fail(format!("{:?}: {e}", shape.factors()));
            }
            t
        })
        .collect();
    merge_all(parts)
}

/// `|P(B)| = |RC(L(B))|`, injectivity and image of `phi`, `phi_inv . phi = id`,
/// and weight preservation.
pub fn bijection_checks(shape: &TensorShape, t: &mut Tally) -> Result<()> {
    let paths = cached_paths(shape)?;
    let rcs = cached_rcs(&MultiplicityArray::from_shape(shape))?;
    t.check(paths.len() == rcs.len(), || {
        format!("{:?}: {} paths vs {} configurations", shape.factors(), paths.len(), rcs.len())
    });
    let mut images = Vec::with_capacity(paths.len());
    for b in paths.iter() {
        let rc = phi(b)?;
        t.check(rc.weight() == b.weight(), || format!("weight differs for {b}"));
        t.check_result(phi_inv(&rc, shape).map(|back| &back == b), || format!("phi_inv(phi(b)) for {b}"));
        images.push(rc);
    }
    images.sort();
    let distinct = images.windows(2).all(|w| w[0] != w[1]);
    t.check(distinct, || format!("{:?}: phi is not injective", shape.factors()));
    t.check(images == **rcs, || format!("{:?}: image differs from RC(L)", shape.factors()));
    Ok(())
}

pub fn similarity_checks(shape: &TensorShape, ms: &[usize], t: &mut Tally) -> Result<()> {
    for b in cached_paths(shape)?.iter() {
        for &m in ms {
            t.check_result(check_similarity(b, m), || format!("S_{m} for {b}"));
        }
    }
    Ok(())
}

/// `phi . tr = tr . phi` and both involutions.
pub fn transpose_checks(shape: &TensorShape, t: &mut Tally) -> Result<()> {
    let rank = shape.rank();
    for b in cached_paths(shape)?.iter() {
        let tb = b.tr()?;
        t.check_result(tb.tr_at_rank(rank).map(|x| &x == b), || format!("tr(tr(b)) for {b}"));
        let rc = phi(b)?;
        let trc = rc.transpose_at_rank(tb.rank());
        t.check_result(
            trc.clone().and_then(|x| Ok(phi(&tb)? == x)),
            || format!("phi(tr b) = tr(phi b) for {b}"),
        );
        t.check_result(
            trc.and_then(|x| Ok(x.transpose_at_rank(rank)? == rc)),
            || format!("tr(tr(rc)) for {b}"),
        );
    }
    Ok(())
}

/// `phi . R_i = phi` and `R_i . R_i = id`.
pub fn rmatrix_checks(shape: &TensorShape, t: &mut Tally) -> Result<()> {
    for b in cached_paths(shape)?.iter() {
        let rc = phi(b)?;
        for i in 1..b.len() {
            let swapped = r_at(b, i)?;
            t.check(swapped.is_highest_weight(), || format!("R_{i} of {b} is not highest weight"));
            t.check_result(phi(&swapped).map(|x| x == rc), || format!("phi(R_{i} b) for {b}"));
            t.check_result(r_at(&swapped, i).map(|x| &x == b), || format!("R_{i} twice for {b}"));
        }
    }
    Ok(())
}

/// `R(ls^{(m)} b) = ls^{(s-m)} b` over all of `B^{r,s}`.
pub fn r_split_checks(r: usize, s: usize, rank: Rank, t: &mut Tally) {
    for b in enumerate_crystal(r, s, rank) {
        for m in 1..s {
            let (l1, r1) = b.split_columns(m);
            let (l2, r2) = b.split_columns(s - m);
            let out = RPair::new(l1, r1).and_then(|p| r_apply(&p));
            t.check_result(out.map(|o| o.left == l2 && o.right == r2), || format!("R(ls^({m}) {b})"));
        }
    }
}

/// The commuting squares for `lh/delta`, `lb^{(s)}/beta^{(s)}` and `ls^{(m)}/gamma^{(m)}`.
pub fn diagram_checks(shape: &TensorShape, t: &mut Tally) -> Result<()> {
    let Some(&(r, s)) = shape.factors().first() else {
        return Ok(());
    };
    for b in cached_paths(shape)?.iter() {
        let rc = phi(b)?;
        if (r, s) == (1, 1) {
            let (letter, rest) = b.lh()?;
            t.check_result(
                rc.delta().and_then(|(d, k)| Ok(k == letter && d == phi(&rest)?)),
                || format!("delta square for {b}"),
            );
        }
        if r >= 2 {
            let lb = b.lb()?;
            t.check(lb.is_highest_weight(), || format!("lb of {b} is not highest weight"));
            t.check_result(
                rc.beta(r, q(s as i64)).and_then(|x| Ok(x == phi(&lb)?)),
                || format!("beta square for {b}"),
            );
        }
        for m in 1..s {
            let ls = b.ls(m)?;
            t.check(ls.is_highest_weight(), || format!("ls^({m}) of {b} is not highest weight"));
            t.check_result(
                rc.gamma(r, q(s as i64), q(m as i64)).and_then(|x| Ok(x == phi(&ls)?)),
                || format!("gamma^({m}) square for {b}"),
            );
        }
    }
    Ok(())
}

fn rc_roundtrips(rc: &RiggedConfig, t: &mut Tally) {
    let n = rc.rank().n();
    let l = rc.multiplicities().clone();
    if l.count(1, q(1)) > 0 {
        t.check_result(
            rc.delta().and_then(|(d, k)| Ok(d.delta_inv(k)? == *rc)),
            || format!("delta_inv(delta(rc)) for\n{rc}"),
        );
    }
    for k in 1..=(n + 1) as u8 {
        if let Ok(up) = rc.delta_inv(k) {
            t.check_result(up.delta().map(|(d, j)| j == k && d == *rc), || {
                format!("delta(delta_inv(rc, {k})) for\n{rc}")
            });
        }
    }
    for (a, len, _) in l.entries() {
        if a >= 2 {
            t.check_result(
                rc.beta(a, len).and_then(|x| Ok(x.beta_inv(a, len)? == *rc)),
                || format!("beta round trip at ({a}, {len}) for\n{rc}"),
            );
        }
        let mut m = q(1);
        while m < len {
            t.check_result(
                rc.gamma(a, len, m).and_then(|x| Ok(x.gamma_inv(a, len, m)? == *rc)),
                || format!("gamma round trip at ({a}, {len}, {m}) for\n{rc}"),
            );
            m += q(1);
        }
    }
    t.check_result(
        rc.transpose().and_then(|x| Ok(x.transpose_at_rank(rc.rank())? == *rc)),
        || format!("tr(tr(rc)) for\n{rc}"),
    );
    let doc = Document::Rc(rc.clone());
    for format in [Format::Compact, Format::Pretty] {
        let text = serialize_document(&doc, format);
        t.check(parse_document(&text).ok().as_ref() == Some(&doc), || format!("rc document round trip:\n{text}"));
    }
}

/// Inverse pairs on `RC(L(B))` and `P(B)`, plus document round trips.
pub fn roundtrip_checks(shape: &TensorShape, t: &mut Tally) -> Result<()> {
    for rc in cached_rcs(&MultiplicityArray::from_shape(shape))?.iter() {
        rc_roundtrips(rc, t);
    }
    for b in cached_paths(shape)?.iter() {
        t.check_result(b.tr().and_then(|x| Ok(x.tr_at_rank(shape.rank())? == *b)), || format!("tr(tr(b)) for {b}"));
        let doc = Document::Path(b.clone());
        let text = serialize_document(&doc, Format::Compact);
        t.check(parse_document(&text).ok().as_ref() == Some(&doc), || format!("path document round trip: {text}"));
        let rdoc = Document::RationalPath(b.stretch_rational(Q::new(1, 2)));
        let text = serialize_document(&rdoc, Format::Compact);
        t.check(parse_document(&text).ok().as_ref() == Some(&rdoc), || format!("rational document round trip: {text}"));
    }
    Ok(())
}

/// Shapes used by the rational suite.
pub fn rational_shapes(n: usize) -> Result<Vec<TensorShape>> {
    let rank = Rank::new(n)?;
    let candidates: [&[(usize, usize)]; 3] = [&[(1, 1), (1, 2)], &[(2, 1), (1, 1), (1, 1)], &[(1, 2), (2, 2)]];
    candidates
        .iter()
        .map(|f| {
            let factors: Vec<(usize, usize)> = f.iter().map(|&(r, s)| (r.min(n), s)).collect();
            TensorShape::new(rank, factors)
        })
        .collect()
}

/// A random rational highest-weight path of `shape`: a highest-weight path
/// of `S_d(shape)` shrunk by `1/d`.
pub fn random_rational_path(shape: &TensorShape, rng: &mut ChaCha8Rng) -> Result<RationalPath> {
    let d = *[1usize, 2, 3, 4].choose(rng).expect("nonempty");
    let paths = cached_paths(&shape.stretch(d))?;
    let b = paths.choose(rng).ok_or_else(|| Error::VerificationFailed("no highest-weight paths".into()))?;
    Ok(b.stretch_rational(Q::new(1, d as i64)))
}

/// `phi_q` with `m0` and `2 m0`, the inverse, and `phi_q . S_q = S_q . phi_q`.
pub fn rational_checks(shape: &TensorShape, samples: usize, seed: u64, t: &mut Tally) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rational_shape: Vec<(usize, Q)> = shape.factors().iter().map(|&(r, s)| (r, q(s as i64))).collect();
    for _ in 0..samples {
        let b = random_rational_path(shape, &mut rng)?;
        let m0 = b.scale_denominator();
        let rc = phi_q(&b)?;
        t.check_result(phi_q_with_multiplier(&b, 2 * m0).map(|x| x == rc), || format!("m0 vs 2 m0 for {b:?}"));
        t.check_result(phi_q_inv(&rc, &rational_shape).map(|x| x == b), || format!("phi_q_inv for {b:?}"));
        let factor = Q::new(rng.gen_range(1..=4), rng.gen_range(1..=4));
        t.check_result(
            phi_q(&b.stretch(factor)).map(|x| x == rc.stretch(factor)),
            || format!("phi_q . S_{factor} for {b:?}"),
        );
    }
    Ok(())
}

/// Every multiplicity array with `r <= n` and at most `max_boxes` boxes in total.
pub fn small_multiplicity_arrays(n: usize, max_boxes: usize) -> Result<Vec<MultiplicityArray>> {
    let rank = Rank::new(n)?;
    let types: Vec<(usize, usize)> = (1..=n)
        .flat_map(|r| (1..=max_boxes / r).map(move |s| (r, s)))
        .collect();
    fn go(
        types: &[(usize, usize)],
        start: usize,
        left: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        out.push(current.clone());
        for k in start..types.len() {
            let (r, s) = types[k];
            if r * s <= left {
                current.push((r, s));
                go(types, k, left - r * s, current, out);
                current.pop();
            }
        }
    }
    let mut multisets = Vec::new();
    go(&types, 0, max_boxes, &mut Vec::new(), &mut multisets);
    multisets
        .into_iter()
        .map(|f| TensorShape::new(rank, f).map(|shape| MultiplicityArray::from_shape(&shape)))
        .collect()
}

/// For `S_m(rc)`, `delta . (delta . gamma)^{m-1}` removes the `m` boxes of
/// the stretched rows chosen by `delta(rc)` and lands on `S_m(delta(rc))`.
pub fn m_boxes_check(rc: &RiggedConfig, m: usize, t: &mut Tally) {
    let result = (|| -> Result<bool> {
        let (base, trace) = rc.delta_traced()?;
        let mm = q(m as i64);
        let mut x = rc.stretch(mm);
        let mut ok = true;
        for step in 0..m {
            if step + 1 < m {
                x = x.gamma(1, q((m - step) as i64), q(1))?;
            }
            let (next, tr) = x.delta_traced()?;
            ok &= tr.rank == trace.rank;
            for (got, want) in tr.lengths.iter().zip(&trace.lengths) {
                ok &= *got == want.map(|l| l * mm - q(step as i64));
            }
            x = next;
        }
        Ok(ok && x == base.stretch(mm))
    })();
    t.check_result(result, || format!("m-boxes lemma with m = {m} for\n{rc}"));
}

/// `pr^{n+1} = id`, `S_m e_i = e_i^m S_m` for `i = 0..=n`, and the coordinate round trip.
pub fn crystal_checks(r: usize, s: usize, rank: Rank, ms: &[usize], t: &mut Tally) {
    let n = rank.n();
    for b in enumerate_crystal(r, s, rank) {
        let mut c = b.clone();
        for _ in 0..=n {
            c = c.promotion();
        }
        t.check(c == b, || format!("pr^(n+1) for {b}"));
        t.check(b.promotion().promotion_inv() == b, || format!("pr^-1 pr for {b}"));
        t.check_result(b.to_coords().to_tableau().map(|x| x == b), || format!("coordinates for {b}"));
        for &m in ms {
            let sb = b.stretch(m);
            for i in 0..=n {
                for dir in [Direction::Raise, Direction::Lower] {
                    let lhs = b.apply_operator(i, dir).map(|x| x.stretch(m));
                    let mut rhs = Some(sb.clone());
                    for _ in 0..m {
                        rhs = rhs.and_then(|x: RectTableau| x.apply_operator(i, dir));
                    }
                    t.check(lhs == rhs, || format!("S_{m} against operator {i} ({dir:?}) for {b}"));
                }
            }
        }
    }
}

/// Runs one suite and reports deterministically (inputs are processed in
/// battery order; only counts and the first failures are kept).
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<SuiteReport> {
    let rank = Rank::new(config.n)?;
    let shapes = battery(config.n, config.max_boxes)?;
    let mut shape_count = shapes.len();
    let tally = match suite {
        Suite::Bijection => per_shape(&shapes, bijection_checks),
        Suite::Similarity => per_shape(&shapes, |s, t| similarity_checks(s, &config.m, t)),
        Suite::Transpose => per_shape(&shapes, transpose_checks),
        Suite::Rmatrix => {
            let mut t = per_shape(&shapes, rmatrix_checks);
            if config.n >= 2 {
                r_split_checks(2, 3, rank, &mut t);
            }
            r_split_checks(1, 4, rank, &mut t);
            t
        }
        Suite::Roundtrip => per_shape(&shapes, roundtrip_checks),
        Suite::Diagrams => per_shape(&shapes, diagram_checks),
        Suite::Rational => {
            let shapes = rational_shapes(config.n)?;
            shape_count = shapes.len();
            let parts: Vec<Tally> = shapes
                .par_iter()
                .enumerate()
                .map(|(k, shape)| {
                    let mut t = Tally::default();
                    let seed = config.seed.wrapping_add(k as u64);
                    if let Err(e) = rational_checks(shape, config.samples, seed, &mut t) {
                        t.checks += 1;
                        t.fail(format!("{:?}: {e}", shape.factors()));
                    }
                    t
                })
                .collect();
            merge_all(parts)
        }
        Suite::Lemma => {
            let arrays = small_multiplicity_arrays(config.n, config.max_boxes)?;
            shape_count = arrays.len();
            let parts: Vec<Tally> = arrays
                .par_iter()
                .map(|l| {
                    let mut t = Tally::default();
                    if l.count(1, q(1)) == 0 {
                        return t;
                    }
                    match cached_rcs(l) {
                        Ok(rcs) => {
                            for rc in rcs.iter() {
                                for &m in &config.m {
                                    m_boxes_check(rc, m, &mut t);
                                }
                            }
                        }
                        Err(e) => t.fail(e.to_string()),
                    }
                    t
                })
                .collect();
            merge_all(parts)
        }
        Suite::Crystal => {
            let mut parts = Vec::new();
            for r in 1..=3usize.min(config.n + 1) {
                for s in 1..=3 {
                    let mut t = Tally::default();
                    crystal_checks(r, s, rank, &config.m, &mut t);
                    parts.push(t);
                }
            }
            shape_count = parts.len();
            merge_all(parts)
        }
    };
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        n: config.n,
        max_boxes: config.max_boxes,
        shapes: shape_count,
        checks: tally.checks,
        failures: tally.failures,
        examples: tally.examples,
    })
}

/// Total `delta` calls so far whose vacancy changes were verified.
pub fn vacancy_law_calls() -> u64 {
    delta_law_checks()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_sizes() {
        let shapes = battery(2, 2).unwrap();
        let names: Vec<_> = shapes.iter().map(|s| s.factors().to_vec()).collect();
        assert_eq!(names, vec![vec![(1, 1)], vec![(1, 2)], vec![(2, 1)], vec![(1, 1), (1, 1)]]);
        assert!(battery(1, 4).unwrap().iter().all(|s| s.factors().iter().all(|&(r, _)| r == 1)));
    }

    #[test]
    fn small_suites_pass() {
        let config = SuiteConfig { n: 2, max_boxes: 3, m: vec![2], seed: 7, samples: 5 };
        for suite in Suite::ALL {
            let report = run_suite(suite, &config).unwrap();
            assert!(report.passed(), "{suite}: {:?}", report.examples);
            assert!(report.checks > 0, "{suite} ran no checks");
        }
    }

    #[test]
    fn suite_names_parse() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
