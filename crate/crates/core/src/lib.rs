//! Exact signed-measure representations of event rankings.
//!
//! A ranking of the events of a finite algebra (an [`Assessment`]) is
//! represented by a [`SignedMeasure`] when `A ≿ B ⇔ μ(A) ≥ μ(B)`. This crate
//! checks the axioms such rankings satisfy, solves for normalized
//! representations with exact rational arithmetic, decomposes them (Hahn,
//! Jordan, Bayesian prior/posterior families), builds null quotients, and
//! carries a polar-grid disk backend for the drunk-archer example.

pub mod algebra;
pub mod assessment;
pub mod decompose;
pub mod disk;
pub mod error;
pub mod json;
pub mod lp;
pub mod measure;
pub mod quotient;
pub mod rational;
pub mod repsolve;

pub use algebra::{is_antichain, Algebra, Event, EventOp};
pub use assessment::{Assessment, HahnReport, Sign, SignProfile, Violations};
pub use decompose::{BayesianRep, HahnPair, JordanPair, ZeroPolicy};
pub use disk::{ArcheryMeasures, DiskMeasure, PolarGrid, Region, SweptRegion};
pub use error::{Error, Result};
pub use measure::SignedMeasure;
pub use quotient::QuotientAlgebra;
pub use rational::Rational;
pub use repsolve::{solve_representation, RepresentationResult, RepresentationStatus};
