//! Zhu-algebra and Poisson-algebra presentations: dimensions, centers and
//! block decompositions.

pub mod algebra;
pub mod center;
pub mod module;
pub mod poisson;
pub mod spectral;

pub use algebra::{assemble_algebra, inequality_report, super_decomposition, AlgebraReport};
pub use center::{center_structure, CenterStructure};
pub use module::{kernel_quotient_dim, ModulePres};
pub use poisson::{poisson_dim, GradedPres, PoissonReport};
pub use spectral::{build_catalog, Catalog, Family};
