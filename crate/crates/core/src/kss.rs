//! The bijection `Phi` between highest-weight paths and rigged
//! configurations, and its rational extension.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::kr_crystal::{Letter, Rank, RectTableau};
use crate::rational::{denominator_lcm, q, Q};
use crate::rigged_config::{MultiplicityArray, RiggedConfig};
use crate::tensor_path::{Path, RationalPath, TensorShape};

/// One reduction of the leftmost factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionStep {
    /// `ls^{(m)}` on a leftmost `B^{r,s}`.
    Ls { r: usize, s: usize, m: usize },
    /// `lb^{(s)}` on a leftmost `B^{r,s}`.
    Lb { r: usize, s: usize },
    /// `lh` on a leftmost `B^{1,1}`.
    Lh,
}

/// Leftmost `B^{1,1}` gives `lh`, otherwise `s >= 2` gives `ls^{(1)}`, otherwise `lb^{(1)}`.
pub fn reduction_schedule(shape: &TensorShape) -> Vec<ReductionStep> {
    let mut current: Vec<(usize, usize)> = shape.factors().to_vec();
    current.reverse();
    let mut steps = Vec::new();
    while let Some((r, s)) = current.pop() {
        if (r, s) == (1, 1) {
            steps.push(ReductionStep::Lh);
        } else if s >= 2 {
            steps.push(ReductionStep::Ls { r, s, m: 1 });
            current.push((r, s - 1));
            current.push((r, 1));
        } else {
            steps.push(ReductionStep::Lb { r, s });
            current.push((r - 1, s));
            current.push((1, s));
        }
    }
    steps
}

fn step_error(k: usize, step: &ReductionStep, e: Error) -> Error {
    Error::VerificationFailed(format!("step {k} ({step:?}): {e}"))
}

/// `Phi(b)`, built from the empty configuration by undoing the schedule.
pub fn phi(b: &Path) -> Result<RiggedConfig> {
    if !b.is_highest_weight() {
        return Err(Error::NotHighestWeight);
    }
    let steps = reduction_schedule(&b.shape());
    let mut letters: Vec<Letter> = Vec::new();
    let mut current = b.clone();
    for step in &steps {
        current = match *step {
            ReductionStep::Lh => {
                let (letter, rest) = current.lh()?;
                letters.push(letter);
                rest
            }
            ReductionStep::Ls { m, .. } => current.ls(m)?,
            ReductionStep::Lb { .. } => current.lb()?,
        };
    }
    let mut rc = RiggedConfig::empty(b.rank());
    for (k, step) in steps.iter().enumerate().rev() {
        rc = match *step {
            ReductionStep::Lh => rc.delta_inv(letters.pop().expect("one letter per lh")),
            ReductionStep::Ls { r, s, m } => rc.gamma_inv(r, q(s as i64), q(m as i64)),
            ReductionStep::Lb { r, s } => rc.beta_inv(r, q(s as i64)),
        }
        .map_err(|e| step_error(k, step, e))?;
    }
    Ok(rc)
}

/// `Phi^{-1}(rc)` for the tensor shape `shape`.
pub fn phi_inv(rc: &RiggedConfig, shape: &TensorShape) -> Result<Path> {
    if !rc.is_integral() {
        return Err(Error::NotIntegral);
    }
    if shape.rank() != rc.rank() || &MultiplicityArray::from_shape(shape) != rc.multiplicities() {
        return Err(Error::ShapeMismatch("multiplicity array does not match the shape".into()));
    }
    let rank = shape.rank();
    let steps = reduction_schedule(shape);
    let mut letters = Vec::new();
    let mut current = rc.clone();
    for (k, step) in steps.iter().enumerate() {
        current = match *step {
            ReductionStep::Lh => current.delta().map(|(next, letter)| {
                letters.push(letter);
                next
            }),
            ReductionStep::Ls { r, s, m } => current.gamma(r, q(s as i64), q(m as i64)),
            ReductionStep::Lb { r, s } => current.beta(r, q(s as i64)),
        }
        .map_err(|e| step_error(k, step, e))?;
    }
    let mut factors: Vec<RectTableau> = Vec::new();
    for step in steps.iter().rev() {
        match *step {
            ReductionStep::Lh => {
                let letter = letters.pop().expect("one letter per lh");
                let cell = RectTableau::new(vec![vec![letter]], rank)
                    .map_err(|e| Error::ReconstructionInvalid(e.to_string()))?;
                factors.push(cell);
            }
            ReductionStep::Ls { .. } => {
                let left = factors.pop().expect("left part");
                let right = factors.pop().expect("right part");
                let joined = RectTableau::join_columns(&left, &right)
                    .map_err(|e| Error::ReconstructionInvalid(e.to_string()))?;
                factors.push(joined);
            }
            ReductionStep::Lb { .. } => {
                let bottom = factors.pop().expect("bottom row");
                let rest = factors.pop().expect("upper rows");
                let joined = RectTableau::join_rows(&rest, &bottom)
                    .map_err(|e| Error::ReconstructionInvalid(e.to_string()))?;
                factors.push(joined);
            }
        }
    }
    factors.reverse();
    let path = Path::new(rank, factors)?;
    if !path.is_highest_weight() {
        return Err(Error::ReconstructionInvalid("reconstructed path is not highest weight".into()));
    }
    Ok(path)
}

/// `Phi(S_m b) == S_m Phi(b)`.
pub fn check_similarity(b: &Path, m: usize) -> Result<bool> {
    Ok(phi(&b.stretch(m))? == phi(b)?.stretch(q(m as i64)))
}

/// `Phi_Q = S_{1/m0} Phi S_{m0}` with `m0` the least common denominator.
pub fn phi_q(b: &RationalPath) -> Result<RiggedConfig> {
    phi_q_with_multiplier(b, b.scale_denominator())
}

/// `S_{1/m} Phi S_m` for any positive multiple `m` of the least common denominator.
pub fn phi_q_with_multiplier(b: &RationalPath, m: i64) -> Result<RiggedConfig> {
    if m <= 0 || m % b.scale_denominator() != 0 {
        return Err(Error::ConstraintViolated(format!(
            "multiplier {m} is not a positive multiple of {}",
            b.scale_denominator()
        )));
    }
    let integral = b.stretch(q(m)).to_path()?;
    if !integral.is_highest_weight() {
        return Err(Error::NotRationalHighestWeight);
    }
    Ok(phi(&integral)?.stretch(Q::new(1, m)))
}

/// Inverse of [`phi_q`] for a leftmost-first rational shape.
pub fn phi_q_inv(rc: &RiggedConfig, shape: &[(usize, Q)]) -> Result<RationalPath> {
    let rank: Rank = rc.rank();
    let mut values: Vec<Q> = shape.iter().map(|&(_, s)| s).collect();
    for rows in rc.levels() {
        for row in rows {
            values.push(row.length);
            values.push(row.rigging);
        }
    }
    if values.iter().any(|x| x.is_negative()) {
        return Err(Error::ConstraintViolated("negative length or rigging".into()));
    }
    let m0 = denominator_lcm(&values);
    let factors = shape
        .iter()
        .map(|&(r, s)| (r, (s * q(m0)).to_integer() as usize))
        .collect();
    let integral_shape = TensorShape::new(rank, factors)?;
    let path = phi_inv(&rc.stretch(q(m0)), &integral_shape)?;
    Ok(RationalPath::from_path(&path).stretch(Q::new(1, m0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kr_crystal::Letter;
    use crate::rational::frac;
    use crate::rigged_config::tests::{rc_from, rc_star};
    use crate::tensor_path::enumerate_paths;

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn path(factors: &[&[&[Letter]]], n: usize) -> Path {
        let f = factors
            .iter()
            .map(|rows| RectTableau::new(rows.iter().map(|r| r.to_vec()).collect(), rank(n)).unwrap())
            .collect();
        Path::new(rank(n), f).unwrap()
    }

    fn b_star() -> Path {
        path(&[&[&[1, 1, 2], &[2, 3, 4]], &[&[2], &[3]], &[&[1, 1, 1, 3]], &[&[2]], &[&[1]]], 3)
    }

    #[test]
    fn schedules() {
        let s = |f: Vec<(usize, usize)>| reduction_schedule(&TensorShape::new(rank(3), f).unwrap());
        assert_eq!(s(vec![(1, 1)]), vec![ReductionStep::Lh]);
        assert_eq!(
            s(vec![(2, 1)]),
            vec![ReductionStep::Lb { r: 2, s: 1 }, ReductionStep::Lh, ReductionStep::Lh]
        );
        let star = s(vec![(2, 3), (2, 1), (1, 4), (1, 1), (1, 1)]);
        assert_eq!(star.iter().filter(|x| **x == ReductionStep::Lh).count(), 14);
        assert_eq!(star[0], ReductionStep::Ls { r: 2, s: 3, m: 1 });
    }

    #[test]
    fn example_bijection() {
        assert_eq!(phi(&b_star()).unwrap(), rc_star());
        assert_eq!(phi_inv(&rc_star(), &b_star().shape()).unwrap(), b_star());
        assert_eq!(phi(&Path::empty(rank(2))).unwrap(), RiggedConfig::empty(rank(2)));
        let empty_shape = TensorShape::new(rank(2), vec![]).unwrap();
        assert_eq!(phi_inv(&RiggedConfig::empty(rank(2)), &empty_shape).unwrap(), Path::empty(rank(2)));
        assert_eq!(phi(&path(&[&[&[1]]], 2)).unwrap(), rc_from(2, &[(1, 1, 1)], &[&[], &[]]));
        assert_eq!(phi(&path(&[&[&[1]], &[&[2]]], 2)), Err(Error::NotHighestWeight));
    }

    #[test]
    fn example_chain_is_parallel() {
        let b = b_star();
        let rc = rc_star();
        let b1 = b.ls(1).unwrap();
        let rc1 = rc.gamma(2, q(3), q(1)).unwrap();
        assert_eq!(phi(&b1).unwrap(), rc1);
        let b2 = b1.lb().unwrap();
        let rc2 = rc1.beta(2, q(1)).unwrap();
        assert_eq!(phi(&b2).unwrap(), rc2);
        let (letter, b3) = b2.lh().unwrap();
        let (rc3, rk) = rc2.delta().unwrap();
        assert_eq!((letter, rk), (2, 2));
        assert_eq!(phi(&b3).unwrap(), rc3);
    }

    #[test]
    fn similarity() {
        assert!(check_similarity(&b_star(), 2).unwrap());
        assert!(check_similarity(&b_star(), 1).unwrap());
        let shape = TensorShape::new(rank(2), vec![(1, 1); 3]).unwrap();
        for b in enumerate_paths(&shape).unwrap() {
            assert!(check_similarity(&b, 3).unwrap());
        }
    }

    #[test]
    fn rational_extension() {
        let half = b_star().stretch_rational(frac(1, 2));
        let rc = phi_q(&half).unwrap();
        assert_eq!(rc, rc_star().stretch(frac(1, 2)));
        assert_eq!(phi_q_with_multiplier(&half, 4).unwrap(), rc);
        assert!(matches!(phi_q_with_multiplier(&half, 3), Err(Error::ConstraintViolated(_))));
        let integral = RationalPath::from_path(&b_star());
        assert_eq!(phi_q(&integral).unwrap(), rc_star());
        let shape: Vec<(usize, Q)> = half.shape();
        assert_eq!(phi_q_inv(&rc, &shape).unwrap(), half);
        let low = RationalPath::from_path(&path(&[&[&[1]], &[&[2]]], 2)).stretch(frac(1, 3));
        assert_eq!(phi_q(&low), Err(Error::NotRationalHighestWeight));
    }
}
