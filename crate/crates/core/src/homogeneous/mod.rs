//! Reductive homogeneous models: the Wang map, `S`/`η` extraction, intrinsic
//! torsion, divergences, harmonicity and the Laplacian cross-check.

mod analysis;
pub mod fixtures;
mod model;
mod zeroset;

pub use analysis::{Classification, Conventions, HarmonicityVerdict, HomogeneousError, LaplacianCheck, ModelAnalysis};
pub use model::{builtin_names, builtin_source, load_model, HomogeneousModel, ModelError, ModelFile, TermRecord};
pub use zeroset::{common_zero_set, Conversion, Verdict, ZeroSet};
