//! Rigged configurations of type A_n^{(1)} over Z and Q.
//!
//! Rows are stored as `(length, rigging)` pairs, sorted at each level by
//! length and then rigging, both descending.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::kr_crystal::{Letter, Rank};
use crate::rational::{format_q, is_integral, q, to_i64, Q};
use crate::tensor_path::TensorShape;
use crate::weight::Weight;

/// Default cap on configurations and riggings visited by [`enumerate_rcs`].
pub const DEFAULT_RC_BUDGET: u64 = 10_000_000;

static DELTA_LAW_CHECKS: AtomicU64 = AtomicU64::new(0);

/// Number of `delta` calls whose vacancy changes were checked so far.
pub fn delta_law_checks() -> u64 {
    DELTA_LAW_CHECKS.load(Ordering::Relaxed)
}

/// `Q_i(mu) = sum_j min(mu_j, i)`.
pub fn q_value(mu: &[Q], i: Q) -> Q {
    mu.iter().map(|&x| x.min(i)).sum()
}

fn depth(mu: &[Q], i: i64) -> i64 {
    mu.iter().filter(|&&x| x >= q(i)).count() as i64
}

/// Counts `L_i^{(a)}` of rows of length `i` at level `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityArray {
    rank: Rank,
    entries: BTreeMap<(usize, Q), u64>,
}

impl MultiplicityArray {
    pub fn new(rank: Rank) -> Self {
        MultiplicityArray { rank, entries: BTreeMap::new() }
    }

    /// `L(B)`: one row of length `s` at level `r` per factor `B^{r,s}`.
    pub fn from_shape(shape: &TensorShape) -> Self {
        let mut l = MultiplicityArray::new(shape.rank());
        for &(r, s) in shape.factors() {
            l.add(r, q(s as i64), 1);
        }
        l
    }

    pub fn from_rational_shape(rank: Rank, factors: &[(usize, Q)]) -> Result<Self> {
        let entries: Vec<(usize, Q, u64)> = factors.iter().map(|&(r, s)| (r, s, 1)).collect();
        MultiplicityArray::from_entries(rank, &entries)
    }

    pub fn from_entries(rank: Rank, entries: &[(usize, Q, u64)]) -> Result<Self> {
        let mut l = MultiplicityArray::new(rank);
        for &(a, len, count) in entries {
            if a == 0 || a > rank.n() {
                return Err(Error::ShapeMismatch(format!("level {a} not in 1..={}", rank.n())));
            }
            if !len.is_positive() {
                return Err(Error::ConstraintViolated(format!(
                    "row length {} must be positive",
                    format_q(&len)
                )));
            }
            l.add(a, len, count);
        }
        Ok(l)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count(&self, a: usize, len: Q) -> u64 {
        self.entries.get(&(a, len)).copied().unwrap_or(0)
    }

    /// `(level, length, count)` with level ascending and length ascending.
    pub fn entries(&self) -> impl Iterator<Item = (usize, Q, u64)> + '_ {
        self.entries.iter().map(|(&(a, len), &c)| (a, len, c))
    }

    /// `L^{(a)}` as a partition, longest row first.
    pub fn rows(&self, a: usize) -> Vec<Q> {
        let mut out = Vec::new();
        for (&(b, len), &c) in self.entries.iter().rev() {
            if b == a {
                out.extend(std::iter::repeat(len).take(c as usize));
            }
        }
        out
    }

    pub fn add(&mut self, a: usize, len: Q, count: u64) {
        if count > 0 {
            *self.entries.entry((a, len)).or_insert(0) += count;
        }
    }

    pub fn remove(&mut self, a: usize, len: Q) -> bool {
        match self.entries.get_mut(&(a, len)) {
            Some(c) => {
                *c -= 1;
                if *c == 0 {
                    self.entries.remove(&(a, len));
                }
                true
            }
            None => false,
        }
    }

    pub fn q_infinity(&self, a: usize) -> Q {
        self.entries()
            .filter(|&(b, _, _)| b == a)
            .map(|(_, len, c)| len * q(c as i64))
            .sum()
    }

    pub fn scale(&self, m: Q) -> Self {
        MultiplicityArray {
            rank: self.rank,
            entries: self.entries.iter().map(|(&(a, len), &c)| ((a, len * m), c)).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.entries.keys().all(|(_, len)| is_integral(len))
    }

    pub fn max_length(&self) -> Q {
        self.entries.keys().map(|&(_, len)| len).max().unwrap_or_else(Q::zero)
    }

    pub fn with_rank(&self, rank: Rank) -> Result<Self> {
        let entries: Vec<_> = self.entries().collect();
        MultiplicityArray::from_entries(rank, &entries)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Row {
    pub length: Q,
    pub rigging: Q,
}

impl Row {
    pub fn new(length: Q, rigging: Q) -> Self {
        Row { length, rigging }
    }
}

/// Lengths `l^{(1)}, ..., l^{(n)}` selected by `delta` (`None` is infinity)
/// and the rank `rk`, which is also the emitted letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaTrace {
    pub lengths: Vec<Option<Q>>,
    pub rank: Letter,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RiggedConfig {
    l: MultiplicityArray,
    nu: Vec<Vec<Row>>,
}

fn sort_rows(rows: &mut [Row]) {
    rows.sort_by(|x, y| y.cmp(x));
}

impl RiggedConfig {
    /// Builds and validates a rigged configuration; `nu[a - 1]` holds level `a`.
    pub fn new(l: MultiplicityArray, nu: Vec<Vec<Row>>) -> Result<Self> {
        if nu.len() != l.rank().n() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} levels, got {}",
                l.rank().n(),
                nu.len()
            )));
        }
        for rows in &nu {
            if let Some(row) = rows.iter().find(|r| !r.length.is_positive()) {
                return Err(Error::ConstraintViolated(format!(
                    "row length {} must be positive",
                    format_q(&row.length)
                )));
            }
        }
        let rc = RiggedConfig::assemble(l, nu);
        rc.validate()?;
        Ok(rc)
    }

    fn assemble(l: MultiplicityArray, mut nu: Vec<Vec<Row>>) -> Self {
        for rows in &mut nu {
            sort_rows(rows);
        }
        RiggedConfig { l, nu }
    }

    pub fn empty(rank: Rank) -> Self {
        RiggedConfig { l: MultiplicityArray::new(rank), nu: vec![Vec::new(); rank.n()] }
    }

    pub fn rank(&self) -> Rank {
        self.l.rank()
    }

    pub fn multiplicities(&self) -> &MultiplicityArray {
        &self.l
    }

    /// Rows of `nu^{(a)}`; empty for `a = 0` and `a = n + 1`.
    pub fn level(&self, a: usize) -> &[Row] {
        if a == 0 || a > self.nu.len() {
            &[]
        } else {
            &self.nu[a - 1]
        }
    }

    pub fn levels(&self) -> &[Vec<Row>] {
        &self.nu
    }

    /// `nu^{(a)}` as a partition.
    pub fn partition(&self, a: usize) -> Vec<Q> {
        self.level(a).iter().map(|r| r.length).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.l.is_integral()
            && self.nu.iter().flatten().all(|r| is_integral(&r.length) && is_integral(&r.rigging))
    }

    /// `p_i^{(a)} = Q_i(L^{(a)}) + Q_i(nu^{(a-1)}) + Q_i(nu^{(a+1)}) - 2 Q_i(nu^{(a)})`.
    pub fn vacancy(&self, a: usize, i: Q) -> Q {
        q_value(&self.l.rows(a), i) + q_value(&self.partition(a - 1), i)
            + q_value(&self.partition(a + 1), i)
            - q(2) * q_value(&self.partition(a), i)
    }

    /// Vacancy number through the Cartan matrix and the multiplicities `m_j^{(b)}`.
    pub fn vacancy_cartan(&self, a: usize, i: Q) -> Q {
        let n = self.rank().n();
        let mut p: Q = self.l.entries().filter(|e| e.0 == a).map(|(_, j, c)| j.min(i) * q(c as i64)).sum();
        for b in 1..=n {
            let cartan = if a == b {
                2
            } else if a.abs_diff(b) == 1 {
                -1
            } else {
                0
            };
            if cartan != 0 {
                let mut m: BTreeMap<Q, i64> = BTreeMap::new();
                for r in self.level(b) {
                    *m.entry(r.length).or_insert(0) += 1;
                }
                for (j, c) in m {
                    p -= q(cartan) * j.min(i) * q(c);
                }
            }
        }
        p
    }

    fn breakpoints(&self) -> BTreeSet<Q> {
        let mut out: BTreeSet<Q> = self.nu.iter().flatten().map(|r| r.length).collect();
        out.extend(self.l.entries().map(|(_, len, _)| len));
        let top = out.iter().next_back().copied().unwrap_or_else(Q::zero);
        out.insert(top + q(1));
        out
    }

    /// Admissibility and rigging bounds.
    pub fn validate(&self) -> Result<()> {
        let points = self.breakpoints();
        for a in 1..=self.rank().n() {
            for &i in &points {
                if self.vacancy(a, i).is_negative() {
                    return Err(Error::NotAdmissible { level: a, length: format_q(&i) });
                }
            }
            for row in self.level(a) {
                let p = self.vacancy(a, row.length);
                if row.rigging.is_negative() || row.rigging > p {
                    return Err(Error::RiggingOutOfRange {
                        level: a,
                        length: format_q(&row.length),
                        rigging: format_q(&row.rigging),
                        vacancy: format_q(&p),
                    });
                }
            }
        }
        Ok(())
    }

    /// `sum_a Q_inf(L^{(a)}) w_a - |nu^{(a)}| alpha_a`.
    pub fn weight(&self) -> Weight {
        let n = self.rank().n();
        Weight::new(
            (1..=n).map(|a| self.l.q_infinity(a)).collect(),
            (1..=n).map(|a| self.partition(a).iter().sum()).collect(),
        )
    }

    /// The weight in epsilon coordinates, a partition with `n + 1` parts.
    pub fn lambda(&self) -> Vec<Q> {
        self.weight().epsilon()
    }

    fn is_singular(&self, a: usize, row: &Row) -> bool {
        row.rigging == self.vacancy(a, row.length)
    }

    pub fn delta(&self) -> Result<(Self, Letter)> {
        let (rc, trace) = self.delta_traced()?;
        Ok((rc, trace.rank))
    }

    /// `delta` together with the selected lengths. The vacancy-change law is
    /// checked on every call.
    pub fn delta_traced(&self) -> Result<(Self, DeltaTrace)> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        if self.l.count(1, q(1)) == 0 {
            return Err(Error::NoBoxToRemove);
        }
        let n = self.rank().n();
        let mut lengths: Vec<Option<Q>> = vec![None; n];
        let mut chosen: Vec<Option<usize>> = vec![None; n];
        let mut rk = n + 1;
        let mut lower = q(1);
        for a in 1..=n {
            let pick = self
                .level(a)
                .iter()
                .enumerate()
                .filter(|(_, r)| r.length >= lower && self.is_singular(a, r))
                .min_by_key(|(_, r)| r.length);
            match pick {
                Some((idx, r)) => {
                    lengths[a - 1] = Some(r.length);
                    chosen[a - 1] = Some(idx);
                    lower = r.length;
                }
                None => {
                    rk = a;
                    break;
                }
            }
        }
        let mut l = self.l.clone();
        l.remove(1, q(1));
        let mut nu = self.nu.clone();
        let mut marked: Vec<Vec<bool>> = nu.iter().map(|rows| vec![false; rows.len()]).collect();
        for a in 0..n {
            if let Some(idx) = chosen[a] {
                nu[a][idx].length -= q(1);
                marked[a][idx] = true;
            }
        }
        let mut shortened: Vec<Vec<Q>> = vec![Vec::new(); n];
        for a in 0..n {
            let mut kept = Vec::new();
            for (row, m) in nu[a].iter().zip(&marked[a]) {
                if row.length.is_positive() {
                    if *m {
                        shortened[a].push(row.length);
                    }
                    kept.push((*row, *m));
                }
            }
            nu[a] = kept.iter().map(|(r, _)| *r).collect();
            marked[a] = kept.iter().map(|(_, m)| *m).collect();
        }
        let mut out = RiggedConfig { l, nu };
        for a in 0..n {
            for idx in 0..out.nu[a].len() {
                if marked[a][idx] {
                    let len = out.nu[a][idx].length;
                    out.nu[a][idx].rigging = out.vacancy(a + 1, len);
                }
            }
        }
        for rows in &mut out.nu {
            sort_rows(rows);
        }
        let trace = DeltaTrace { lengths, rank: rk as Letter };
        check_vacancy_change(self, &out, &trace)?;
        Ok((out, trace))
    }

    /// Inverse of `delta` for the letter `letter`.
    pub fn delta_inv(&self, letter: Letter) -> Result<Self> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        let n = self.rank().n();
        let k = letter as usize;
        if k == 0 || k > n + 1 {
            return Err(Error::SelectionFailed(format!("letter {k} not in 1..={}", n + 1)));
        }
        let mut nu = self.nu.clone();
        let mut grown: Vec<Option<usize>> = vec![None; n];
        let mut bound: Option<Q> = None;
        for a in (1..k).rev() {
            let pick = self
                .level(a)
                .iter()
                .enumerate()
                .filter(|(_, r)| bound.map_or(true, |b| r.length < b) && self.is_singular(a, r))
                .max_by_key(|(_, r)| r.length);
            let idx = match pick {
                Some((idx, _)) => idx,
                None => {
                    nu[a - 1].push(Row::new(Q::zero(), Q::zero()));
                    nu[a - 1].len() - 1
                }
            };
            nu[a - 1][idx].length += q(1);
            bound = Some(nu[a - 1][idx].length);
            grown[a - 1] = Some(idx);
        }
        let mut l = self.l.clone();
        l.add(1, q(1), 1);
        let mut out = RiggedConfig { l, nu };
        for a in 0..n {
            if let Some(idx) = grown[a] {
                let len = out.nu[a][idx].length;
                out.nu[a][idx].rigging = out.vacancy(a + 1, len);
            }
        }
        for rows in &mut out.nu {
            sort_rows(rows);
        }
        out.validate()?;
        Ok(out)
    }

    /// `beta^{(s)}`: trades a row `s` of `L^{(r)}` for rows at levels 1 and
    /// `r - 1`, adding singular rows of length `s` at levels `1..r`.
    pub fn beta(&self, r: usize, s: Q) -> Result<Self> {
        let n = self.rank().n();
        if r < 2 || r > n {
            return Err(Error::PreconditionViolated(format!("beta needs 2 <= r <= {n}, got {r}")));
        }
        let mut l = self.l.clone();
        if !l.remove(r, s) {
            return Err(Error::PreconditionViolated(format!(
                "L^({r}) has no row of length {}",
                format_q(&s)
            )));
        }
        l.add(1, s, 1);
        l.add(r - 1, s, 1);
        let mut out = RiggedConfig { l, nu: self.nu.clone() };
        for a in 1..r {
            out.nu[a - 1].push(Row::new(s, Q::zero()));
        }
        for a in 1..r {
            let p = out.vacancy(a, s);
            out.nu[a - 1].last_mut().expect("row just added").rigging = p;
        }
        for rows in &mut out.nu {
            sort_rows(rows);
        }
        Ok(out)
    }

    pub fn beta_inv(&self, r: usize, s: Q) -> Result<Self> {
        let n = self.rank().n();
        if r < 2 || r > n {
            return Err(Error::PreconditionViolated(format!("beta^-1 needs 2 <= r <= {n}, got {r}")));
        }
        let mut l = self.l.clone();
        if !(l.remove(1, s) && l.remove(r - 1, s)) {
            return Err(Error::PreconditionViolated(format!(
                "L lacks the rows of length {} at levels 1 and {}",
                format_q(&s),
                r - 1
            )));
        }
        l.add(r, s, 1);
        let mut nu = self.nu.clone();
        for a in 1..r {
            let idx = self
                .level(a)
                .iter()
                .position(|row| row.length == s && self.is_singular(a, row))
                .ok_or_else(|| {
                    Error::PreconditionViolated(format!(
                        "level {a} has no singular row of length {}",
                        format_q(&s)
                    ))
                })?;
            nu[a - 1].remove(idx);
        }
        let out = RiggedConfig { l, nu };
        out.validate()?;
        Ok(out)
    }

    /// `gamma^{(m)}`: splits a row `s` of `L^{(r)}` into `m` and `s - m`.
    pub fn gamma(&self, r: usize, s: Q, m: Q) -> Result<Self> {
        if !m.is_positive() || m >= s {
            return Err(Error::PreconditionViolated(format!(
                "gamma needs 0 < m < s, got m = {}, s = {}",
                format_q(&m),
                format_q(&s)
            )));
        }
        let mut l = self.l.clone();
        if !l.remove(r, s) {
            return Err(Error::PreconditionViolated(format!(
                "L^({r}) has no row of length {}",
                format_q(&s)
            )));
        }
        l.add(r, m, 1);
        l.add(r, s - m, 1);
        let out = RiggedConfig { l, nu: self.nu.clone() };
        out.validate()?;
        Ok(out)
    }

    pub fn gamma_inv(&self, r: usize, s: Q, m: Q) -> Result<Self> {
        if !m.is_positive() || m >= s {
            return Err(Error::PreconditionViolated(format!(
                "gamma^-1 needs 0 < m < s, got m = {}, s = {}",
                format_q(&m),
                format_q(&s)
            )));
        }
        let mut l = self.l.clone();
        if !(l.remove(r, m) && l.remove(r, s - m)) {
            return Err(Error::PreconditionViolated(format!(
                "L^({r}) lacks rows of lengths {} and {}",
                format_q(&m),
                format_q(&(s - m))
            )));
        }
        l.add(r, s, 1);
        let out = RiggedConfig { l, nu: self.nu.clone() };
        out.validate()?;
        Ok(out)
    }

    /// `S_m`: every length and rigging multiplied by `m`.
    pub fn stretch(&self, m: Q) -> Self {
        assert!(m.is_positive(), "stretch factor must be positive");
        RiggedConfig {
            l: self.l.scale(m),
            nu: self
                .nu
                .iter()
                .map(|rows| rows.iter().map(|r| Row::new(r.length * m, r.rigging * m)).collect())
                .collect(),
        }
    }

    /// Same configuration viewed in another rank; levels beyond the new rank
    /// must be empty.
    pub fn with_rank(&self, rank: Rank) -> Result<Self> {
        let l = self.l.with_rank(rank)?;
        let n = rank.n();
        if self.nu.iter().skip(n).any(|rows| !rows.is_empty()) {
            return Err(Error::ShapeMismatch(format!("configuration needs rank above {n}")));
        }
        let mut nu = self.nu.clone();
        nu.resize(n, Vec::new());
        RiggedConfig::new(l, nu)
    }

    fn integral_lengths(&self) -> Result<()> {
        if self.is_integral() {
            Ok(())
        } else {
            Err(Error::NotIntegral)
        }
    }

    fn max_row_length(&self) -> i64 {
        let nu_max = self.nu.iter().flatten().map(|r| r.length).max().unwrap_or_else(Q::zero);
        to_i64(&nu_max.max(self.l.max_length()).ceil()).unwrap_or(0)
    }

    /// `N_{ai} = depth_i(nu^{(a-1)}) - depth_i(nu^{(a)})` for `a = 1..=n+1`
    /// and `i = 1..=` the longest row of `nu`.
    pub fn n_matrix(&self) -> Result<Vec<Vec<i64>>> {
        self.integral_lengths()?;
        let n = self.rank().n();
        let width = self.nu.iter().flatten().map(|r| to_i64(&r.length).unwrap_or(0)).max().unwrap_or(0);
        Ok((1..=n + 1)
            .map(|a| (1..=width).map(|i| self.n_entry(a, i)).collect())
            .collect())
    }

    fn n_entry(&self, a: usize, i: i64) -> i64 {
        depth(&self.partition(a - 1), i) - depth(&self.partition(a), i)
    }

    fn l_tail(&self, a: usize, i: i64) -> i64 {
        self.l
            .entries()
            .filter(|&(b, j, _)| b >= a && j >= q(i))
            .map(|(_, _, c)| c as i64)
            .sum()
    }

    fn n_tilde_entry(&self, lambda: &[i64], i: i64, a: usize) -> i64 {
        let n = self.rank().n();
        if a > n + 1 {
            return 0;
        }
        let in_lambda = i64::from(i <= lambda[a - 1]);
        -self.n_entry(a, i) + in_lambda - self.l_tail(a, i)
    }

    /// `N~_{ia}` for `i = 1..=rows`, `a = 1..=cols`.
    pub fn n_tilde_matrix(&self, rows: usize, cols: usize) -> Result<Vec<Vec<i64>>> {
        self.integral_lengths()?;
        let lambda = self.lambda_integral();
        Ok((1..=rows as i64)
            .map(|i| (1..=cols).map(|a| self.n_tilde_entry(&lambda, i, a)).collect())
            .collect())
    }

    fn lambda_integral(&self) -> Vec<i64> {
        self.lambda().iter().map(|x| to_i64(x).expect("integral weight")).collect()
    }

    /// Smallest rank in which [`RiggedConfig::transpose`] lives.
    pub fn transpose_rank(&self) -> Result<Rank> {
        self.integral_lengths()?;
        let lambda1 = self.lambda_integral()[0];
        let widest = to_i64(&self.l.max_length()).expect("integral length");
        Rank::new(widest.max(lambda1 - 1).max(1) as usize)
    }

    pub fn transpose(&self) -> Result<Self> {
        self.transpose_at_rank(self.transpose_rank()?)
    }

    /// `tr`: levels and lengths of `L` are exchanged, the configuration is
    /// rebuilt from `N~`, and each rigging block is replaced by the transpose
    /// of its complement in the `m x p` rectangle.
    pub fn transpose_at_rank(&self, rank: Rank) -> Result<Self> {
        self.integral_lengths()?;
        if rank < self.transpose_rank()? {
            return Err(Error::ShapeMismatch(format!("rank {} is too small for tr", rank.n())));
        }
        let n = self.rank().n();
        let n2 = rank.n();
        let lambda = self.lambda_integral();
        let bound = (n2 as i64).max(self.max_row_length()).max(lambda[0]) + 1;

        let mut l2 = MultiplicityArray::new(rank);
        for (a, len, c) in self.l.entries() {
            let j = to_i64(&len).expect("integral length") as usize;
            l2.add(j, q(a as i64), c);
        }

        let mut nu2: Vec<Vec<Row>> = vec![Vec::new(); n2];
        let mut cumulative = vec![0i64; n + 2];
        for i in 1..=bound {
            let mut depths = vec![0i64; n + 2];
            for a in 1..=n + 1 {
                cumulative[a] += self.n_tilde_entry(&lambda, i, a);
                depths[a] = -cumulative[a];
            }
            for a in 1..=n + 1 {
                let next = if a == n + 1 { 0 } else { depths[a + 1] };
                if depths[a] < next || depths[a] < 0 {
                    return Err(Error::VerificationFailed(format!(
                        "tr produced column depths {depths:?} at level {i}"
                    )));
                }
            }
            if i as usize > n2 {
                if depths.iter().any(|&d| d != 0) {
                    return Err(Error::VerificationFailed(format!("tr needs a level above {n2}")));
                }
                continue;
            }
            for a in 1..=n + 1 {
                let next = if a == n + 1 { 0 } else { depths[a + 1] };
                let count = depths[a] - next;
                for _ in 0..count {
                    nu2[i as usize - 1].push(Row::new(q(a as i64), Q::zero()));
                }
            }
        }

        let mut keys: BTreeSet<(usize, i64)> = BTreeSet::new();
        for (a, rows) in self.nu.iter().enumerate() {
            for r in rows {
                keys.insert((a + 1, to_i64(&r.length).expect("integral length")));
            }
        }
        for (i, rows) in nu2.iter().enumerate() {
            for r in rows {
                keys.insert((to_i64(&r.length).expect("integral length") as usize, i as i64 + 1));
            }
        }
        let mut nu2_sized: Vec<Vec<Row>> = vec![Vec::new(); n2];
        for (a, i) in keys {
            let old: Vec<i64> = self
                .level(a)
                .iter()
                .filter(|r| r.length == q(i))
                .map(|r| to_i64(&r.rigging).expect("integral rigging"))
                .collect();
            let p = if a <= n && !old.is_empty() {
                to_i64(&self.vacancy(a, q(i))).expect("integral vacancy")
            } else {
                0
            };
            let new_count = if (i as usize) <= n2 {
                nu2[i as usize - 1].iter().filter(|r| r.length == q(a as i64)).count()
            } else {
                0
            };
            let mut riggings: Vec<i64> = (1..=p).map(|k| old.iter().filter(|&&j| p - j >= k).count() as i64).collect();
            if riggings.len() > new_count {
                if riggings[new_count..].iter().any(|&x| x != 0) {
                    return Err(Error::VerificationFailed(format!(
                        "rigging block at level {a}, length {i} does not fit its transpose"
                    )));
                }
                riggings.truncate(new_count);
            }
            riggings.resize(new_count, 0);
            if new_count > 0 {
                for rig in riggings {
                    nu2_sized[i as usize - 1].push(Row::new(q(a as i64), q(rig)));
                }
            }
        }
        RiggedConfig::new(l2, nu2_sized)
            .map_err(|e| Error::VerificationFailed(format!("tr produced an invalid configuration: {e}")))
    }
}

fn check_vacancy_change(before: &RiggedConfig, after: &RiggedConfig, trace: &DeltaTrace) -> Result<()> {
    DELTA_LAW_CHECKS.fetch_add(1, Ordering::Relaxed);
    let n = before.rank().n();
    let ell = |a: usize| -> Option<Q> {
        if a == 0 {
            Some(q(1))
        } else if a > n {
            None
        } else {
            trace.lengths[a - 1]
        }
    };
    let chi = |l: Option<Q>, i: Q| i64::from(l.is_some_and(|l| l <= i));
    let mut points = before.breakpoints();
    points.extend(after.breakpoints());
    points.extend(trace.lengths.iter().flatten().copied());
    for a in 1..=n {
        for &i in &points {
            let expect = before.vacancy(a, i) - q(chi(ell(a - 1), i)) + q(2 * chi(ell(a), i))
                - q(chi(ell(a + 1), i));
            if after.vacancy(a, i) != expect {
                return Err(Error::VerificationFailed(format!(
                    "vacancy change law fails at level {a}, length {}",
                    format_q(&i)
                )));
            }
        }
    }
    Ok(())
}

impl std::fmt::Display for RiggedConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for a in 1..=self.rank().n() {
            let l: Vec<String> = self.l.rows(a).iter().map(format_q).collect();
            let rows: Vec<String> = self
                .level(a)
                .iter()
                .map(|r| format!("({},{})", format_q(&r.length), format_q(&r.rigging)))
                .collect();
            writeln!(f, "{a}: L=({}) nu={{{}}}", l.join(","), rows.join(","))?;
        }
        Ok(())
    }
}

/// All rigged configurations with multiplicity array `l`, sorted.
pub fn enumerate_rcs(l: &MultiplicityArray) -> Result<Vec<RiggedConfig>> {
    enumerate_rcs_with_budget(l, DEFAULT_RC_BUDGET)
}

fn partitions(total: i64, max_part: i64, out: &mut Vec<Vec<i64>>, prefix: &mut Vec<i64>) {
    if total == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=max_part.min(total)).rev() {
        prefix.push(part);
        partitions(total - part, part, out, prefix);
        prefix.pop();
    }
}

fn all_partitions(total: i64) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    partitions(total, total, &mut out, &mut Vec::new());
    out.into_iter().map(|p| p.into_iter().map(q).collect()).collect()
}

/// Dominant weights below `top` with the same size, as partitions with `top.len()` parts.
fn dominated(top: &[i64]) -> Vec<Vec<i64>> {
    fn go(top: &[i64], prefix: &mut Vec<i64>, left: i64, out: &mut Vec<Vec<i64>>) {
        let j = prefix.len();
        if j == top.len() {
            if left == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let cap = prefix.last().copied().unwrap_or(left).min(left);
        let top_sum: i64 = top[..=j].iter().sum();
        let sum: i64 = prefix.iter().sum();
        for x in (0..=cap).rev() {
            if sum + x > top_sum {
                continue;
            }
            if x * ((top.len() - j) as i64) < left {
                break;
            }
            prefix.push(x);
            go(top, prefix, left - x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(top, &mut Vec::new(), top.iter().sum(), &mut out);
    out
}

fn nonincreasing(m: usize, max: i64) -> Vec<Vec<i64>> {
    fn go(m: usize, max: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == m {
            out.push(prefix.clone());
            return;
        }
        let cap = prefix.last().copied().unwrap_or(max);
        for x in (0..=cap).rev() {
            prefix.push(x);
            go(m, max, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, max, &mut Vec::new(), &mut out);
    out
}

struct RcSearch<'a> {
    l: &'a MultiplicityArray,
    sizes: Vec<i64>,
    options: Vec<Vec<Vec<Q>>>,
    budget: u64,
    visited: u64,
    chosen: Vec<Vec<Q>>,
    out: Vec<Vec<Vec<Q>>>,
}

impl RcSearch<'_> {
    fn admissible_at(&self, a: usize) -> bool {
        let n = self.sizes.len();
        let get = |b: usize| -> &[Q] {
            if b == 0 || b > n {
                &[]
            } else {
                &self.chosen[b - 1]
            }
        };
        let l_rows = self.l.rows(a);
        let mut points: BTreeSet<Q> = get(a).iter().copied().collect();
        points.extend(l_rows.iter().copied());
        points.extend(get(a - 1).iter().copied());
        points.extend(get(a + 1).iter().copied());
        let top = points.iter().next_back().copied().unwrap_or_else(Q::zero);
        points.insert(top + q(1));
        points.iter().all(|&i| {
            let p = q_value(&l_rows, i) + q_value(get(a - 1), i) + q_value(get(a + 1), i)
                - q(2) * q_value(get(a), i);
            !p.is_negative()
        })
    }

    fn go(&mut self, a: usize) -> Result<()> {
        let n = self.sizes.len();
        if a > n {
            if self.admissible_at(n) {
                self.out.push(self.chosen.clone());
            }
            return Ok(());
        }
        for idx in 0..self.options[a - 1].len() {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            self.chosen.push(self.options[a - 1][idx].clone());
            if a < 2 || self.admissible_at(a - 1) {
                self.go(a + 1)?;
            }
            self.chosen.pop();
        }
        Ok(())
    }
}

pub fn enumerate_rcs_with_budget(l: &MultiplicityArray, budget: u64) -> Result<Vec<RiggedConfig>> {
    if !l.is_integral() {
        return Err(Error::NotIntegral);
    }
    let rank = l.rank();
    let n = rank.n();
    let mut top = vec![0i64; n + 1];
    for j in (1..=n).rev() {
        top[j - 1] = top[j] + to_i64(&l.q_infinity(j)).expect("integral L");
    }
    let mut configs: Vec<Vec<Vec<Q>>> = Vec::new();
    let mut visited = 0;
    for lambda in dominated(&top) {
        let mut sizes = Vec::with_capacity(n);
        let mut acc = 0;
        for a in 0..n {
            acc += top[a] - lambda[a];
            sizes.push(acc);
        }
        let options = sizes.iter().map(|&d| all_partitions(d)).collect();
        let mut search = RcSearch {
            l,
            sizes,
            options,
            budget: budget - visited.min(budget),
            visited: 0,
            chosen: Vec::new(),
            out: Vec::new(),
        };
        search.go(1).map_err(|_| Error::BudgetExceeded(budget))?;
        visited += search.visited;
        configs.extend(search.out);
    }

    let mut out = Vec::new();
    for config in configs {
        let skeleton = RiggedConfig {
            l: l.clone(),
            nu: config
                .iter()
                .map(|p| p.iter().map(|&len| Row::new(len, Q::zero())).collect())
                .collect(),
        };
        // (level, length, multiplicity, vacancy)
        let mut blocks: Vec<(usize, Q, usize, i64)> = Vec::new();
        for (a, part) in config.iter().enumerate() {
            let mut counts: BTreeMap<Q, usize> = BTreeMap::new();
            for &len in part {
                *counts.entry(len).or_insert(0) += 1;
            }
            for (len, m) in counts {
                let p = to_i64(&skeleton.vacancy(a + 1, len)).expect("integral vacancy");
                blocks.push((a + 1, len, m, p));
            }
        }
        let choices: Vec<Vec<Vec<i64>>> = blocks.iter().map(|&(_, _, m, p)| nonincreasing(m, p)).collect();
        let mut index = vec![0usize; blocks.len()];
        loop {
            visited += 1;
            if visited > budget {
                return Err(Error::BudgetExceeded(budget));
            }
            let mut nu: Vec<Vec<Row>> = vec![Vec::new(); n];
            for (b, &(a, len, _, _)) in blocks.iter().enumerate() {
                for &rig in &choices[b][index[b]] {
                    nu[a - 1].push(Row::new(len, q(rig)));
                }
            }
            out.push(RiggedConfig::assemble(l.clone(), nu));
            let mut b = 0;
            while b < blocks.len() {
                index[b] += 1;
                if index[b] < choices[b].len() {
                    break;
                }
                index[b] = 0;
                b += 1;
            }
            if b == blocks.len() {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}
