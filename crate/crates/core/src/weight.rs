//! Weights of type A_n, stored as `sum c_a w_a - sum d_a alpha_a`.
//!
//! With `w_a = e_1 + ... + e_a` and `alpha_a = e_a - e_{a+1}` the
//! epsilon coordinates are `lambda_j = sum_{a >= j} c_a - d_j + d_{j-1}`.

use crate::rational::Q;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    fundamental: Vec<Q>,
    root: Vec<Q>,
}

impl Weight {
    pub fn new(fundamental: Vec<Q>, root: Vec<Q>) -> Self {
        assert_eq!(fundamental.len(), root.len(), "weight parts must share the rank");
        Weight { fundamental, root }
    }

    pub fn zero(n: usize) -> Self {
        Weight::new(vec![Q::zero(); n], vec![Q::zero(); n])
    }

    /// Builds the weight `sum c_a w_a - sum d_a alpha_a` whose epsilon form is
    /// `lambda`, choosing `d` so that the fundamental part equals `fundamental`.
    pub fn from_epsilon(fundamental: Vec<Q>, lambda: &[Q]) -> Self {
        let n = fundamental.len();
        assert_eq!(lambda.len(), n + 1);
        let base = fundamental_to_epsilon(&fundamental);
        let mut root = Vec::with_capacity(n);
        let mut acc = Q::zero();
        for a in 0..n {
            acc += base[a] - lambda[a];
            root.push(acc);
        }
        Weight { fundamental, root }
    }

    pub fn rank(&self) -> usize {
        self.fundamental.len()
    }

    pub fn fundamental(&self) -> &[Q] {
        &self.fundamental
    }

    pub fn root(&self) -> &[Q] {
        &self.root
    }

    /// The epsilon coordinates `(lambda_1, ..., lambda_{n+1})`.
    pub fn epsilon(&self) -> Vec<Q> {
        let n = self.rank();
        let mut lambda = fundamental_to_epsilon(&self.fundamental);
        for j in 0..=n {
            if j < n {
                lambda[j] -= self.root[j];
            }
            if j > 0 {
                lambda[j] += self.root[j - 1];
            }
        }
        lambda
    }

    /// True when the epsilon coordinates are weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        self.epsilon().windows(2).all(|w| w[0] >= w[1])
    }

    pub fn sub_simple_root(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.root[i - 1] += Q::from_integer(1);
        w
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;
    fn add(self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight {
            fundamental: self
                .fundamental
                .iter()
                .zip(&other.fundamental)
                .map(|(x, y)| x + y)
                .collect(),
            root: self.root.iter().zip(&other.root).map(|(x, y)| x + y).collect(),
        }
    }
}

fn fundamental_to_epsilon(fundamental: &[Q]) -> Vec<Q> {
    let n = fundamental.len();
    let mut lambda = vec![Q::zero(); n + 1];
    let mut acc = Q::zero();
    for j in (0..n).rev() {
        acc += fundamental[j];
        lambda[j] = acc;
    }
    lambda
}
