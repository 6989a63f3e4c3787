//! Exact order theory on finite carriers.
//!
//! Finite posets and lattices, the auxiliary relations of domain theory
//! (way-below, way-way-below, the hypercontinuity relation), the continuity
//! predicates built on them, the lattices of Scott-open and Scott-closed sets,
//! isomorphism-class enumeration, and exhaustive theorem checks that report
//! witnesses on failure.

pub mod canonical;
pub mod error;
pub mod generators;
pub mod lattice;
pub mod limits;
pub mod poset;
pub mod properties;
pub mod relations;
pub mod stone_dual;
pub mod subset;
pub mod verdict;
pub mod verifier;

pub use canonical::{canonical_form, canonical_order, certificate, is_isomorphic, Certificate};
pub use error::{OrderError, Result};
pub use lattice::{as_lattice, FiniteLattice};
pub use poset::{BuildMode, DirectedSet, FinitePoset};
pub use relations::{Method, Relation};
pub use subset::Subset;
pub use verdict::{Verdict, Witness};
pub use verifier::{run_suite, search, Expr, Suite, SuiteReport, Universe};
