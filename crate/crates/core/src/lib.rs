pub mod closed_forms;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod hypergraph;
pub mod scalar;
pub mod search;
pub mod spectral;

pub use error::{Error, Result};
pub use family::FamilySpec;
pub use hypergraph::Hypergraph;
pub use scalar::Scalar;
pub use spectral::{solve, Method, SolverConfig, SpectralResult, WeightVector};

pub type WeightVector32 = WeightVector<f32>;
pub type SolverConfig32 = SolverConfig<f32>;
pub type SpectralResult32 = SpectralResult<f32>;
