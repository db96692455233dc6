//! High precision densities near the spectrum singularity and the Fourier
//! transform of rho - 1.

pub mod density;
pub mod error;
pub mod fourier;
pub mod jet;
pub mod output;
pub mod real;
pub mod special;

pub use density::{
    density_beta2, density_beta2_series, density_beta4_q0, density_jet, kummer_symmetry_defect, DensityProfile,
    DensitySpec, FormulaId, PrecisionContext,
};
pub use error::NumericError;
pub use fourier::{fourier_transform, screening_integral, FTResult, FourierOracle, TailModel};
pub use jet::{Jet, Scalar};
pub use output::Dump;
pub use real::{Complex, Precision, Real};
