//! Combinatorial R-matrix `B^{r,s} (x) B^{r',s'} -> B^{r',s'} (x) B^{r,s}`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::kr_crystal::{row_insert, Direction, Rank, RectTableau, Tableau};
use crate::tensor_path::{enumerate_paths, Path, TensorShape};
use crate::weight::Weight;

/// `b (x) b'` with `b` the left factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RPair {
    pub left: RectTableau,
    pub right: RectTableau,
}

impl RPair {
    pub fn new(left: RectTableau, right: RectTableau) -> Result<Self> {
        if left.rank() != right.rank() {
            return Err(Error::ShapeMismatch("pair factors have different ranks".into()));
        }
        Ok(RPair { left, right })
    }
}

type HwKey = (Rank, (usize, usize), (usize, usize), Weight);

fn hw_cache() -> &'static Mutex<HashMap<HwKey, Option<Path>>> {
    static CACHE: OnceLock<Mutex<HashMap<HwKey, Option<Path>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn plactic(left: &RectTableau, right: &RectTableau) -> Tableau {
    row_insert(&left.to_tableau(), &right.row_word())
}

/// Highest-weight element of `left (x) right` with the given weight, if unique.
fn matching_highest_weight(
    rank: Rank,
    left: (usize, usize),
    right: (usize, usize),
    weight: &Weight,
) -> Result<Option<Path>> {
    let key = (rank, left, right, weight.clone());
    if let Some(hit) = hw_cache().lock().expect("cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let shape = TensorShape::new(rank, vec![left, right])?;
    let mut found = enumerate_paths(&shape)?.into_iter().filter(|p| &p.weight() == weight);
    let first = found.next();
    if found.next().is_some() {
        return Err(Error::VerificationFailed(
            "several highest-weight elements share a weight".into(),
        ));
    }
    hw_cache().lock().expect("cache lock").insert(key, first.clone());
    Ok(first)
}

/// Applies `R`, returning `(b~', b~)`; the insertion identity is always checked.
pub fn r_apply(p: &RPair) -> Result<RPair> {
    let rank = p.left.rank();
    let mut current = Path::new(rank, vec![p.left.clone(), p.right.clone()])?;
    let mut ops = Vec::new();
    'raise: loop {
        for i in 1..=rank.n() {
            if let Some(next) = current.raise(i) {
                current = next;
                ops.push(i);
                continue 'raise;
            }
        }
        break;
    }
    let left_shape = (p.left.height(), p.left.width());
    let right_shape = (p.right.height(), p.right.width());
    let mut image = matching_highest_weight(rank, right_shape, left_shape, &current.weight())?
        .ok_or_else(|| Error::VerificationFailed("no matching highest-weight element".into()))?;
    for &i in ops.iter().rev() {
        image = image
            .apply(i, Direction::Lower)
            .ok_or_else(|| Error::VerificationFailed(format!("f_{i} undefined on the image")))?;
    }
    let out = RPair { left: image.factors()[0].clone(), right: image.factors()[1].clone() };
    if plactic(&p.left, &p.right) != plactic(&out.left, &out.right) {
        return Err(Error::VerificationFailed(format!(
            "insertion identity fails for {} (x) {}",
            p.left, p.right
        )));
    }
    Ok(out)
}

/// `R_i`: acts on the `(i+1)`-th and `i`-th factors, counted from the right.
pub fn r_at(b: &Path, i: usize) -> Result<Path> {
    let k = b.len();
    if i == 0 || i + 1 > k {
        return Err(Error::PositionOutOfRange { pos: i, max: k.saturating_sub(1) });
    }
    let (a, c) = (k - i - 1, k - i);
    let pair = RPair { left: b.factors()[a].clone(), right: b.factors()[c].clone() };
    let swapped = r_apply(&pair)?;
    let mut factors = b.factors().to_vec();
    factors[a] = swapped.left;
    factors[c] = swapped.right;
    Path::new(b.rank(), factors)
}
