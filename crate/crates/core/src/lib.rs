//! Rigged configurations and highest-weight paths of type A_n^{(1)}.

pub mod cli;
pub mod error;
pub mod kr_crystal;
pub mod kss;
pub mod r_matrix;
pub mod rational;
pub mod rigged_config;
pub mod tensor_path;
pub mod verify;
pub mod weight;

pub use error::{Error, Result};
pub use kr_crystal::{CoordArray, Direction, Letter, Rank, RectTableau, Tableau};
pub use kss::{check_similarity, phi, phi_inv, phi_q, phi_q_inv};
pub use r_matrix::{r_apply, r_at, RPair};
pub use rational::Q;
pub use rigged_config::{enumerate_rcs, MultiplicityArray, RiggedConfig, Row};
pub use tensor_path::{enumerate_paths, Path, RationalPath, TensorShape};
pub use weight::Weight;
