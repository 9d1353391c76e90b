//! The alpha-spectral radius: the adjacency form, its partial maps, and a
//! multi-start optimizer over the nonnegative unit alpha-sphere.

mod form;
mod linalg;
mod ops;
mod solver;
mod weights;

pub use ops::{
    deletion_bound, kkt_residual, partial, partials, symmetrize_pair, symmetry_partition, tau_slice, tau_value,
    SymmetryPartition,
};
pub use solver::{solve, Method, SolverConfig, SpectralResult};
pub use weights::WeightVector;
