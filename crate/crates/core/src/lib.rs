//! Exact harmonicity analysis of spinorially defined SU(3)- and
//! G2-structures on reductive homogeneous spaces.
//!
//! Quantities depending on the scale parameter `t` live in the field Q(u)
//! with `t` tied to `u` by a per-model substitution, so every verdict is
//! decided by exact rational arithmetic.

pub mod clifford;
pub mod coeff;
mod error;
pub mod exactla;
pub mod gstruct;
pub mod homogeneous;
pub mod numeric;
pub mod report;
pub mod scalar;
pub mod verify;

pub use clifford::{MultiVector, SpinRep, Spinor};
pub use coeff::{parse_coeff, parse_scalar, CoeffError, CoeffExpr};
pub use error::{Error, Result};
pub use exactla::{Matrix, Subspace};
pub use gstruct::{GStructure, UnitSpinor};
pub use homogeneous::{load_model, HomogeneousModel, ModelAnalysis, Verdict, ZeroSet};
pub use report::{build_report, Report, ReportOptions};
pub use scalar::{Rational, Scalar, Substitution};
pub use verify::{run_all, CriterionOutcome, VerifyOptions};
