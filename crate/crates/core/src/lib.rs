//! Exact algebra of fuzzy-parametrized soft (FP-soft) sets, FP-soft mappings
//! and finitely presented FP-soft topologies, with exhaustive oracles over
//! finite grade lattices.
//!
//! Everything is generic over the grade [`Scalar`]; the aliases at the crate
//! root fix it to exact rationals.

pub mod compactness;
pub mod context;
pub mod error;
pub mod fuzzy;
pub mod grade;
pub mod lattice;
pub mod laws;
pub mod mapping;
pub mod operator;
pub mod oracle;
pub mod point;
pub mod scalar;
pub mod set;
pub mod text;
pub mod topology;

#[cfg(test)]
mod fixtures;

pub use compactness::{check_compactness, has_fip, CompactnessReport};
pub use context::{Context, Subset, TotalMap};
pub use error::{Error, Result};
pub use lattice::LatticeSpec;
pub use laws::{registry, run_law, LawReport, LawSpec, Verdict};
pub use mapping::{Classification, FpSoftMapping};
pub use operator::{induce_from_closure_operator, induce_from_interior_operator, OperatorTable};
pub use scalar::Scalar;
pub use set::Special;
pub use text::Document;
pub use topology::{continuity_failure, is_continuous, QTarget};

/// Default exact grade type.
pub type Rational = num_rational::Ratio<i64>;

pub type Grade = grade::Grade<Rational>;
pub type FuzzyParamSet = fuzzy::FuzzyParamSet<Rational>;
pub type FpSoftSet = set::FpSoftSet<Rational>;
pub type FpSoftPoint = point::FpSoftPoint<Rational>;
pub type FpSoftTopology = topology::FpSoftTopology<Rational>;
pub type CoverFamily = compactness::CoverFamily<Rational>;
