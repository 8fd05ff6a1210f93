//! Kirillov-Reshetikhin crystals `B^{r,s}` of type `A_n^{(1)}`.
//!
//! Elements are semistandard tableaux of rectangular shape `(s^r)` in the
//! letters `1..=n+1`. The classical operators `e_i, f_i` (`1 <= i <= n`)
//! act through the signature rule on the row word (bottom row first, each
//! row left to right). Under the tensor convention used throughout the crate
//! (the right factor is tested first) a letter `i+1` standing to the left of
//! a letter `i` cancels it, so the reduced signature is `i^phi (i+1)^eps`.
//! `e_i` changes the leftmost uncancelled `i+1`; `f_i` changes the rightmost
//! uncancelled `i`. The affine operators go through promotion.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{format_q, is_nonnegative, q, to_i64, Q};
use crate::weight::Weight;

pub type Letter = u8;

/// The rank `n` of `A_n^{(1)}`: letters run over `1..=n+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: usize) -> Result<Rank> {
        if n == 0 || n >= Letter::MAX as usize {
            return Err(Error::InvalidRank(n as i64));
        }
        Ok(Rank(n))
    }

    pub fn n(self) -> usize {
        self.0
    }

    pub fn max_letter(self) -> Letter {
        (self.0 + 1) as Letter
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Raise,
    Lower,
}

/// Uncancelled positions of a word with respect to the index `i`.
#[derive(Debug, Default)]
pub(crate) struct Signature {
    /// Positions of uncancelled letters `i`, left to right.
    pub lower: Vec<usize>,
    /// Positions of uncancelled letters `i+1`, left to right.
    pub upper: Vec<usize>,
}

impl Signature {
    pub fn eps(&self) -> u32 {
        self.upper.len() as u32
    }

    pub fn phi(&self) -> u32 {
        self.lower.len() as u32
    }

    /// Position changed by `e_i` (`Raise`) or `f_i` (`Lower`).
    pub fn target(&self, dir: Direction) -> Option<usize> {
        match dir {
            Direction::Raise => self.upper.first().copied(),
            Direction::Lower => self.lower.last().copied(),
        }
    }
}

pub(crate) fn signature<I: IntoIterator<Item = Letter>>(word: I, i: usize) -> Signature {
    let (lo, hi) = (i as Letter, i as Letter + 1);
    let mut sig = Signature::default();
    for (pos, x) in word.into_iter().enumerate() {
        if x == hi {
            sig.upper.push(pos);
        } else if x == lo && sig.upper.pop().is_none() {
            sig.lower.push(pos);
        }
    }
    sig
}

/// `(eps_i, phi_i)` of a word read as a tensor product of single boxes.
pub fn word_eps_phi(word: &[Letter], i: usize) -> (u32, u32) {
    let sig = signature(word.iter().copied(), i);
    (sig.eps(), sig.phi())
}

/// A semistandard tableau of arbitrary (straight) shape, used for row insertion.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau::default()
    }

    /// Accepts any semistandard tableau of partition shape.
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::NotRectangular);
            }
            for c in 0..row.len() {
                if c > 0 && row[c - 1] > row[c] {
                    return Err(Error::NotSemistandard { row: r + 1, col: c + 1 });
                }
                if r > 0 {
                    match rows[r - 1].get(c) {
                        Some(&above) if above < row[c] => {}
                        _ => return Err(Error::NotSemistandard { row: r + 1, col: c + 1 }),
                    }
                }
            }
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Schensted row insertion of one letter.
    pub fn insert(&mut self, mut x: Letter) {
        for row in self.rows.iter_mut() {
            match row.iter().position(|&y| y > x) {
                Some(k) => x = std::mem::replace(&mut row[k], x),
                None => {
                    row.push(x);
                    return;
                }
            }
        }
        self.rows.push(vec![x]);
    }
}

/// Inserts the letters of `word` into `t` from left to right.
pub fn row_insert(t: &Tableau, word: &[Letter]) -> Tableau {
    let mut out = t.clone();
    for &x in word {
        out.insert(x);
    }
    out
}

/// An element of `B^{r,s}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectTableau {
    rank: Rank,
    rows: usize,
    cols: usize,
    entries: Vec<Letter>,
}

impl RectTableau {
    /// Validating constructor; rows are listed top to bottom.
    pub fn new(rows: Vec<Vec<Letter>>, rank: Rank) -> Result<Self> {
        let r = rows.len();
        let s = rows.first().map_or(0, Vec::len);
        if r == 0 || s == 0 || rows.iter().any(|row| row.len() != s) {
            return Err(Error::NotRectangular);
        }
        if r > rank.n() + 1 {
            return Err(Error::TooManyRows { rows: r, max: rank.n() + 1 });
        }
        let max = rank.max_letter();
        for row in &rows {
            for &x in row {
                if x == 0 || x > max {
                    return Err(Error::LetterOutOfRange { letter: x as i64, max: max as i64 });
                }
            }
        }
        let t = RectTableau { rank, rows: r, cols: s, entries: rows.concat() };
        t.check_semistandard()?;
        Ok(t)
    }

    fn check_semistandard(&self) -> Result<()> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if j > 0 && self.get(i, j - 1) > x {
                    return Err(Error::NotSemistandard { row: i + 1, col: j + 1 });
                }
                if i > 0 && self.get(i - 1, j) >= x {
                    return Err(Error::NotSemistandard { row: i + 1, col: j + 1 });
                }
            }
        }
        Ok(())
    }

    fn from_parts(rank: Rank, rows: usize, cols: usize, entries: Vec<Letter>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        RectTableau { rank, rows, cols, entries }
    }

    /// The classical highest-weight element: row `i` filled with `i`.
    pub fn highest_weight(r: usize, s: usize, rank: Rank) -> Result<Self> {
        RectTableau::new((1..=r).map(|i| vec![i as Letter; s]).collect(), rank)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    /// Number of rows `r`.
    pub fn height(&self) -> usize {
        self.rows
    }

    /// Number of columns `s`.
    pub fn width(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> Letter {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Letter] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Letter>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn to_tableau(&self) -> Tableau {
        Tableau { rows: self.to_rows() }
    }

    /// Reinterprets the tableau in another rank, checking the letter range.
    pub fn with_rank(&self, rank: Rank) -> Result<Self> {
        RectTableau::new(self.to_rows(), rank)
    }

    /// Bottom row first, each row left to right.
    pub fn row_word(&self) -> Vec<Letter> {
        (0..self.rows).rev().flat_map(|i| self.row(i).iter().copied()).collect()
    }

    /// Cell (row, column) holding position `k` of the row word.
    fn word_cell(&self, k: usize) -> (usize, usize) {
        (self.rows - 1 - k / self.cols, k % self.cols)
    }

    fn check_index(&self, i: usize) {
        assert!(
            (1..=self.rank.n()).contains(&i),
            "classical index {i} outside 1..={}",
            self.rank.n()
        );
    }

    pub fn eps_phi(&self, i: usize) -> (u32, u32) {
        self.check_index(i);
        let sig = signature(self.row_word(), i);
        (sig.eps(), sig.phi())
    }

    pub fn eps(&self, i: usize) -> u32 {
        self.eps_phi(i).0
    }

    pub fn phi(&self, i: usize) -> u32 {
        self.eps_phi(i).1
    }

    /// `e_i` or `f_i`; `None` when the operator kills the element.
    pub fn apply_kashiwara(&self, i: usize, dir: Direction) -> Option<Self> {
        self.check_index(i);
        let sig = signature(self.row_word(), i);
        let k = sig.target(dir)?;
        let (row, col) = self.word_cell(k);
        let mut out = self.clone();
        out.entries[row * self.cols + col] = match dir {
            Direction::Raise => i as Letter,
            Direction::Lower => i as Letter + 1,
        };
        debug_assert!(out.check_semistandard().is_ok());
        Some(out)
    }

    pub fn raise(&self, i: usize) -> Option<Self> {
        self.apply_kashiwara(i, Direction::Raise)
    }

    pub fn lower(&self, i: usize) -> Option<Self> {
        self.apply_kashiwara(i, Direction::Lower)
    }

    /// `e_i^k` (or `f_i^k`), `None` as soon as one step is undefined.
    pub fn apply_power(&self, i: usize, dir: Direction, k: usize) -> Option<Self> {
        let mut t = self.clone();
        for _ in 0..k {
            t = t.apply_kashiwara(i, dir)?;
        }
        Some(t)
    }

    /// Schutzenberger promotion: delete the letters `n+1`, slide the rest
    /// outward into the vacated cells, add one to every entry and fill the
    /// cells freed at the top left with `1`.
    pub fn promotion(&self) -> Self {
        let top = self.rank.max_letter();
        let (r, s) = (self.rows, self.cols);
        let mut grid: Vec<Vec<Option<Letter>>> =
            (0..r).map(|i| self.row(i).iter().map(|&x| Some(x)).collect()).collect();
        let holes: Vec<usize> = (0..s).filter(|&j| grid[r - 1][j] == Some(top)).collect();
        for &j in &holes {
            grid[r - 1][j] = None;
        }
        for &start in &holes {
            let (mut i, mut j) = (r - 1, start);
            loop {
                let up = if i > 0 { grid[i - 1][j] } else { None };
                let left = if j > 0 { grid[i][j - 1] } else { None };
                let from_left = match (up, left) {
                    (None, None) => break,
                    (Some(_), None) => false,
                    (None, Some(_)) => true,
                    (Some(u), Some(l)) => l > u,
                };
                if from_left {
                    grid[i][j] = grid[i][j - 1].take();
                    j -= 1;
                } else {
                    grid[i][j] = grid[i - 1][j].take();
                    i -= 1;
                }
            }
        }
        let entries = grid.into_iter().flatten().map(|c| c.map_or(1, |x| x + 1)).collect();
        let out = RectTableau::from_parts(self.rank, r, s, entries);
        debug_assert!(out.check_semistandard().is_ok(), "promotion broke semistandardness");
        out
    }

    /// Inverse promotion: delete the letters `1`, slide inward, subtract one
    /// and fill the freed bottom-right cells with `n+1`.
    pub fn promotion_inv(&self) -> Self {
        let top = self.rank.max_letter();
        let (r, s) = (self.rows, self.cols);
        let mut grid: Vec<Vec<Option<Letter>>> =
            (0..r).map(|i| self.row(i).iter().map(|&x| Some(x)).collect()).collect();
        let holes: Vec<usize> = (0..s).filter(|&j| grid[0][j] == Some(1)).collect();
        for &j in &holes {
            grid[0][j] = None;
        }
        for &start in holes.iter().rev() {
            let (mut i, mut j) = (0, start);
            loop {
                let right = if j + 1 < s { grid[i][j + 1] } else { None };
                let down = if i + 1 < r { grid[i + 1][j] } else { None };
                let from_right = match (right, down) {
                    (None, None) => break,
                    (Some(_), None) => true,
                    (None, Some(_)) => false,
                    (Some(rt), Some(d)) => rt < d,
                };
                if from_right {
                    grid[i][j] = grid[i][j + 1].take();
                    j += 1;
                } else {
                    grid[i][j] = grid[i + 1][j].take();
                    i += 1;
                }
            }
        }
        let entries = grid.into_iter().flatten().map(|c| c.map_or(top, |x| x - 1)).collect();
        let out = RectTableau::from_parts(self.rank, r, s, entries);
        debug_assert!(out.check_semistandard().is_ok(), "inverse promotion broke semistandardness");
        out
    }

    /// `e_0 = pr^{-1} e_1 pr` and `f_0 = pr^{-1} f_1 pr`.
    pub fn apply_affine(&self, dir: Direction) -> Option<Self> {
        self.promotion().apply_kashiwara(1, dir).map(|t| t.promotion_inv())
    }

    /// Operator `e_i`/`f_i` for `i` in `0..=n`.
    pub fn apply_operator(&self, i: usize, dir: Direction) -> Option<Self> {
        if i == 0 {
            self.apply_affine(dir)
        } else {
            self.apply_kashiwara(i, dir)
        }
    }

    /// Similarity map `S_m`: each entry repeated `m` times within its row.
    pub fn stretch(&self, m: usize) -> Self {
        assert!(m >= 1, "stretch factor must be positive");
        let entries = self
            .entries
            .iter()
            .flat_map(|&x| std::iter::repeat(x).take(m))
            .collect();
        RectTableau::from_parts(self.rank, self.rows, self.cols * m, entries)
    }

    /// Letter multiplicities, indexed `0..=n` for letters `1..=n+1`.
    pub fn content(&self) -> Vec<u32> {
        let mut c = vec![0u32; self.rank.n() + 1];
        for &x in &self.entries {
            c[x as usize - 1] += 1;
        }
        c
    }

    /// Weight `s w_r - sum d_a alpha_a`; `B^{n+1,s}` is the trivial crystal
    /// and has weight zero.
    pub fn weight(&self) -> Weight {
        let n = self.rank.n();
        if self.rows == n + 1 {
            return Weight::zero(n);
        }
        let mut fundamental = vec![Q::zero(); n];
        fundamental[self.rows - 1] = q(self.cols as i64);
        let lambda: Vec<Q> = self.content().into_iter().map(|c| q(c as i64)).collect();
        Weight::from_epsilon(fundamental, &lambda)
    }

    /// Leftmost `m` columns and the remaining columns.
    pub fn split_columns(&self, m: usize) -> (Self, Self) {
        assert!(m >= 1 && m < self.cols);
        let left: Vec<Letter> = (0..self.rows).flat_map(|i| self.row(i)[..m].to_vec()).collect();
        let right: Vec<Letter> = (0..self.rows).flat_map(|i| self.row(i)[m..].to_vec()).collect();
        (
            RectTableau::from_parts(self.rank, self.rows, m, left),
            RectTableau::from_parts(self.rank, self.rows, self.cols - m, right),
        )
    }

    /// Bottom row and the tableau of the remaining rows.
    pub fn split_bottom_row(&self) -> (Self, Self) {
        assert!(self.rows >= 2);
        let bottom = self.row(self.rows - 1).to_vec();
        let rest = self.entries[..(self.rows - 1) * self.cols].to_vec();
        (
            RectTableau::from_parts(self.rank, 1, self.cols, bottom),
            RectTableau::from_parts(self.rank, self.rows - 1, self.cols, rest),
        )
    }

    /// Glues `left` and `right` side by side; fails unless the result is semistandard.
    pub fn join_columns(left: &Self, right: &Self) -> Result<Self> {
        if left.rows != right.rows || left.rank != right.rank {
            return Err(Error::ShapeMismatch("column join needs equal heights".into()));
        }
        let rows = (0..left.rows)
            .map(|i| [left.row(i), right.row(i)].concat())
            .collect();
        RectTableau::new(rows, left.rank)
    }

    /// Places `bottom` (a single row) under `top`; fails unless semistandard.
    pub fn join_rows(top: &Self, bottom: &Self) -> Result<Self> {
        if top.cols != bottom.cols || bottom.rows != 1 || top.rank != bottom.rank {
            return Err(Error::ShapeMismatch("row join needs equal widths".into()));
        }
        let mut rows = top.to_rows();
        rows.push(bottom.row(0).to_vec());
        RectTableau::new(rows, top.rank)
    }

    pub fn to_coords(&self) -> CoordArray {
        let n = self.rank.n();
        let r = self.rows;
        let x = (1..=r)
            .map(|i| {
                (i..=n + i + 1 - r)
                    .map(|j| {
                        q(self.row(i - 1).iter().filter(|&&y| y as usize == j).count() as i64)
                    })
                    .collect()
            })
            .collect();
        CoordArray { rank: self.rank, r, s: q(self.cols as i64), x }
    }
}

impl std::fmt::Display for RectTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(","))?;
        }
        write!(f, "]")
    }
}

/// Coordinates `x_{i,j}` (`1 <= i <= r`, `i <= j <= n-r+i+1`): the number of
/// letters `j` in row `i`, allowed to be any nonnegative rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoordArray {
    rank: Rank,
    r: usize,
    s: Q,
    /// `x[i-1][j-i]` holds `x_{i,j}`.
    x: Vec<Vec<Q>>,
}

impl CoordArray {
    fn row_len(rank: Rank, r: usize) -> usize {
        rank.n() - r + 2
    }

    /// Builds the array from sparse entries `(i, j, x_{i,j})`; unspecified
    /// coordinates are zero. Checks nonnegativity, row sums and interlacing.
    pub fn from_entries(rank: Rank, r: usize, s: Q, entries: &[(usize, usize, Q)]) -> Result<Self> {
        if r == 0 || r > rank.n() + 1 {
            return Err(Error::TooManyRows { rows: r, max: rank.n() + 1 });
        }
        let len = Self::row_len(rank, r);
        let mut x = vec![vec![Q::zero(); len]; r];
        for &(i, j, v) in entries {
            if i == 0 || i > r || j < i || j - i >= len {
                return Err(Error::ConstraintViolated(format!("coordinate ({i},{j}) out of range")));
            }
            x[i - 1][j - i] = v;
        }
        let c = CoordArray { rank, r, s, x };
        c.check()?;
        Ok(c)
    }

    fn check(&self) -> Result<()> {
        if self.s <= Q::zero() {
            return Err(Error::ConstraintViolated("s must be positive".into()));
        }
        for (i, row) in self.x.iter().enumerate() {
            if let Some(v) = row.iter().find(|v| !is_nonnegative(v)) {
                return Err(Error::ConstraintViolated(format!(
                    "negative coordinate {} in row {}",
                    format_q(v),
                    i + 1
                )));
            }
            let sum: Q = row.iter().sum();
            if sum != self.s {
                return Err(Error::ConstraintViolated(format!(
                    "row {} sums to {} instead of {}",
                    i + 1,
                    format_q(&sum),
                    format_q(&self.s)
                )));
            }
        }
        let len = Self::row_len(self.rank, self.r);
        for i in 1..self.r {
            // sum_{k=i}^{j} x_{i,k} >= sum_{k=i+1}^{j+1} x_{i+1,k}
            let (mut upper, mut lower) = (Q::zero(), Q::zero());
            for k in 0..len - 1 {
                upper += self.x[i - 1][k];
                lower += self.x[i][k];
                if upper < lower {
                    return Err(Error::ConstraintViolated(format!(
                        "interlacing fails between rows {} and {} at j = {}",
                        i,
                        i + 1,
                        i + k
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn height(&self) -> usize {
        self.r
    }

    pub fn width(&self) -> Q {
        self.s
    }

    /// `x_{i,j}` with 1-based indices; zero outside the index range.
    pub fn get(&self, i: usize, j: usize) -> Q {
        if i == 0 || i > self.r || j < i {
            return Q::zero();
        }
        self.x[i - 1].get(j - i).copied().unwrap_or_else(Q::zero)
    }

    /// All coordinates as `(i, j, x_{i,j})`, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Q)> + '_ {
        self.x
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(k, &v)| (i + 1, i + 1 + k, v)))
    }

    pub fn values(&self) -> impl Iterator<Item = &Q> {
        self.x.iter().flatten()
    }

    pub fn is_integral(&self) -> bool {
        self.values().all(|v| v.is_integer())
    }

    /// `S_m` on coordinates: every `x_{i,j}` (and `s`) multiplied by `m > 0`.
    pub fn scale(&self, m: Q) -> Self {
        assert!(m > Q::zero(), "scale factor must be positive");
        CoordArray {
            rank: self.rank,
            r: self.r,
            s: self.s * m,
            x: self.x.iter().map(|row| row.iter().map(|v| v * m).collect()).collect(),
        }
    }

    pub fn to_tableau(&self) -> Result<RectTableau> {
        if !self.is_integral() || !self.s.is_integer() {
            return Err(Error::NonIntegerCoordinates);
        }
        let rows = self
            .x
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .flat_map(|(k, v)| {
                        let count = to_i64(v).unwrap_or(0) as usize;
                        std::iter::repeat((i + 1 + k) as Letter).take(count)
                    })
                    .collect()
            })
            .collect();
        RectTableau::new(rows, self.rank)
    }
}

/// Alias matching the operation name used in the documentation.
pub fn from_coords(x: &CoordArray) -> Result<RectTableau> {
    x.to_tableau()
}

pub fn to_coords(t: &RectTableau) -> CoordArray {
    t.to_coords()
}

pub fn validate_tableau(rows: Vec<Vec<Letter>>, rank: Rank) -> Result<RectTableau> {
    RectTableau::new(rows, rank)
}

pub fn tableau_weight(t: &RectTableau) -> Weight {
    t.weight()
}

/// All elements of `B^{r,s}` in lexicographic order of their row-major entries.
pub fn enumerate_crystal(r: usize, s: usize, rank: Rank) -> Vec<RectTableau> {
    assert!(r >= 1 && s >= 1, "B^{{r,s}} needs r, s >= 1");
    if r > rank.n() + 1 {
        return Vec::new();
    }
    let max = rank.max_letter();
    let mut out = Vec::new();
    let mut cells = vec![0 as Letter; r * s];
    fn fill(
        k: usize,
        r: usize,
        s: usize,
        max: Letter,
        cells: &mut Vec<Letter>,
        rank: Rank,
        out: &mut Vec<RectTableau>,
    ) {
        if k == r * s {
            out.push(RectTableau::from_parts(rank, r, s, cells.clone()));
            return;
        }
        let (i, j) = (k / s, k % s);
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(cells[k - 1]);
        }
        if i > 0 {
            lo = lo.max(cells[k - s] + 1);
        }
        // Leave room for the strictly increasing column below.
        let hi = max - (r - 1 - i) as Letter;
        for x in lo..=hi {
            cells[k] = x;
            fill(k + 1, r, s, max, cells, rank, out);
        }
    }
    fill(0, r, s, max, &mut cells, rank, &mut out);
    out
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

    #[test]
    fn validation() {
        assert!(RectTableau::new(vec![vec![1, 1, 2], vec![2, 3, 4]], rank(3)).is_ok());
        assert!(RectTableau::new(vec![vec![1]], rank(1)).is_ok());
        assert_eq!(
            RectTableau::new(vec![vec![2, 1]], rank(2)),
            Err(Error::NotSemistandard { row: 1, col: 2 })
        );
        assert_eq!(RectTableau::new(vec![vec![1, 2], vec![3]], rank(2)), Err(Error::NotRectangular));
        assert_eq!(RectTableau::new(vec![], rank(2)), Err(Error::NotRectangular));
        assert_eq!(
            RectTableau::new(vec![vec![1, 5]], rank(3)),
            Err(Error::LetterOutOfRange { letter: 5, max: 4 })
        );
        assert!(matches!(
            RectTableau::new(vec![vec![1], vec![1]], rank(2)),
            Err(Error::NotSemistandard { .. })
        ));
        assert!(matches!(
            RectTableau::new(vec![vec![1], vec![2], vec![3]], rank(1)),
            Err(Error::TooManyRows { .. })
        ));
        assert!(Rank::new(0).is_err());
    }

    #[test]
    fn row_words() {
        assert_eq!(tab(&[&[1, 1, 2], &[2, 3, 4]], 3).row_word(), vec![2, 3, 4, 1, 1, 2]);
        assert_eq!(tab(&[&[1]], 1).row_word(), vec![1]);
        assert_eq!(tab(&[&[1, 2], &[3, 4]], 3).row_word(), vec![3, 4, 1, 2]);
    }

    #[test]
    fn insertion() {
        let t = Tableau::new(vec![vec![1, 2]]).unwrap();
        assert_eq!(row_insert(&t, &[1]).rows(), &[vec![1, 1], vec![2]]);
        let p = row_insert(&Tableau::empty(), &[2, 3, 4, 1, 1, 2]);
        assert_eq!(p.rows(), &[vec![1, 1, 2], vec![2, 3, 4]]);
        let one = Tableau::new(vec![vec![1]]).unwrap();
        assert_eq!(row_insert(&one, &[]), one);
    }

    #[test]
    fn eps_phi_examples() {
        assert_eq!(tab(&[&[2]], 1).eps_phi(1), (1, 0));
        assert_eq!(tab(&[&[1, 1, 1, 3]], 3).eps_phi(1), (0, 3));
        // Row word 2 3 4 1 1 2: the 3 cancels the final 2, the leading 2 is free.
        assert_eq!(tab(&[&[1, 1, 2], &[2, 3, 4]], 3).eps_phi(2), (0, 1));
    }

    #[test]
    fn kashiwara_examples() {
        assert_eq!(tab(&[&[1]], 1).lower(1), Some(tab(&[&[2]], 1)));
        assert_eq!(tab(&[&[1]], 1).raise(1), None);
        let t = tab(&[&[1, 1, 2], &[2, 3, 4]], 3);
        let f = t.lower(2).unwrap();
        assert_eq!(f, tab(&[&[1, 1, 2], &[3, 3, 4]], 3));
        assert_eq!(f.raise(2), Some(t.clone()));
        assert_eq!(t.raise(2), None);
    }

    #[test]
    fn promotion_examples() {
        assert_eq!(tab(&[&[1]], 1).promotion(), tab(&[&[2]], 1));
        assert_eq!(tab(&[&[2]], 1).promotion(), tab(&[&[1]], 1));
        let t = tab(&[&[1, 1, 2], &[2, 3, 4]], 3);
        let mut u = t.clone();
        for _ in 0..4 {
            u = u.promotion();
        }
        assert_eq!(u, t);
        assert_eq!(t.promotion().promotion_inv(), t);
    }

    #[test]
    fn promotion_shifts_content_cyclically() {
        let t = tab(&[&[1, 1, 2], &[2, 3, 4]], 3);
        let c = t.content();
        let p = t.promotion().content();
        assert_eq!(p, vec![c[3], c[0], c[1], c[2]]);
    }

    #[test]
    fn affine_operators() {
        let one = tab(&[&[1]], 1);
        assert_eq!(one.apply_affine(Direction::Raise), Some(tab(&[&[2]], 1)));
        let e0 = one.apply_affine(Direction::Raise).unwrap();
        assert_eq!(e0.apply_affine(Direction::Lower), Some(one.clone()));
        // Direct composition through promotion.
        let direct = one.promotion().raise(1).map(|t| t.promotion_inv());
        assert_eq!(one.apply_affine(Direction::Raise), direct);
    }

    #[test]
    fn stretch_examples() {
        let t = tab(&[&[1, 1, 2], &[2, 3, 4]], 3);
        assert_eq!(t.stretch(2), tab(&[&[1, 1, 1, 1, 2, 2], &[2, 2, 3, 3, 4, 4]], 3));
        assert_eq!(t.stretch(1), t);
        assert_eq!(t.stretch(3).stretch(2), t.stretch(6));
    }

    #[test]
    fn coordinates_of_example() {
        let c = tab(&[&[1, 1, 2], &[2, 3, 4]], 3).to_coords();
        let expect = [(1, 1, 2), (1, 2, 1), (1, 3, 0), (2, 2, 1), (2, 3, 1), (2, 4, 1)];
        for (i, j, v) in expect {
            assert_eq!(c.get(i, j), q(v), "x_{{{i},{j}}}");
        }
        assert_eq!(c.entries().count(), 6);
        assert_eq!(from_coords(&c).unwrap(), tab(&[&[1, 1, 2], &[2, 3, 4]], 3));
    }

    #[test]
    fn coordinate_rejections() {
        let n = rank(2);
        // Row 2 has a 2 while row 1 has no 1: interlacing fails.
        let bad = CoordArray::from_entries(n, 2, q(1), &[(1, 2, q(1)), (2, 2, q(1))]);
        assert!(matches!(bad, Err(Error::ConstraintViolated(_))));
        let sum = CoordArray::from_entries(n, 1, q(2), &[(1, 1, q(1))]);
        assert!(matches!(sum, Err(Error::ConstraintViolated(_))));
        let half = CoordArray::from_entries(n, 1, q(1), &[(1, 1, frac(1, 2)), (1, 2, frac(1, 2))]).unwrap();
        assert_eq!(half.to_tableau(), Err(Error::NonIntegerCoordinates));
        assert_eq!(half.scale(q(2)).to_tableau().unwrap(), tab(&[&[1, 2]], 2));
    }

    #[test]
    fn coordinate_round_trip_b22() {
        for t in enumerate_crystal(2, 2, rank(2)) {
            assert_eq!(from_coords(&to_coords(&t)).unwrap(), t);
        }
    }

    #[test]
    fn enumeration_counts() {
        let b11 = enumerate_crystal(1, 1, rank(2));
        assert_eq!(b11.len(), 3);
        assert_eq!(enumerate_crystal(2, 1, rank(2)).len(), 3);
        let b12 = enumerate_crystal(1, 2, rank(1));
        assert_eq!(b12, vec![tab(&[&[1, 1]], 1), tab(&[&[1, 2]], 1), tab(&[&[2, 2]], 1)]);
        // Number of SSYT of shape (2,2) in 4 letters is 20.
        assert_eq!(enumerate_crystal(2, 2, rank(3)).len(), 20);
    }

    #[test]
    fn weights() {
        let w = tab(&[&[1]], 1).weight();
        assert_eq!(w.epsilon(), vec![q(1), q(0)]);
        assert_eq!(w.fundamental(), &[q(1)]);
        let w = tab(&[&[1, 1, 2], &[2, 3, 4]], 3).weight();
        assert_eq!(w.epsilon(), vec![q(2), q(2), q(1), q(1)]);
        let t = tab(&[&[1, 2]], 2);
        let down = t.lower(1).unwrap();
        assert_eq!(down.weight(), t.weight().sub_simple_root(1));
        assert_eq!(down.raise(1).unwrap().weight(), t.weight());
    }

    #[test]
    fn unique_highest_weight_element() {
        for n in 1..=3 {
            for r in 1..=n {
                for s in 1..=3 {
                    let hw: Vec<_> = enumerate_crystal(r, s, rank(n))
                        .into_iter()
                        .filter(|t| (1..=n).all(|i| t.eps(i) == 0))
                        .collect();
                    assert_eq!(hw, vec![RectTableau::highest_weight(r, s, rank(n)).unwrap()]);
                }
            }
        }
    }
}
