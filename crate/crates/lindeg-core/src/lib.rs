//! Exact tropical linear algebra for linear degenerate flags.
//!
//! Everything here is computed over ℚ ∪ {∞} in the min-plus convention:
//! `a ⊕ b = min(a, b)`, `a ⊙ b = a + b`. There are no floating point
//! numbers anywhere in this crate, so tie detection ("the minimum is
//! achieved at least twice") is always exact.
//!
//! The main objects are
//!
//! * [`trop`] — tropical scalars, points of tropical projective space and
//!   the evaluation semantics of tropical linear forms;
//! * [`matroid`] — valuated matroids given by basis valuations, with
//!   duality, deletion and the loop-augmented projection `μ_S`;
//! * [`relations`] — Grassmann, incidence and linear degenerate Plücker
//!   relations plus Dressian membership tests;
//! * [`spaces`] — valuated circuits/cocircuits, tropical linear spaces,
//!   tropical projections and the constructive lift;
//! * [`quotient`] — valuated matroid quotients, flag predicates, induced
//!   matroids along set maps and the four-way equivalence report;
//! * [`realization`] — the field of rational-exponent Laurent monomial
//!   sums over ℚ, exact Plücker minors and randomized realizations;
//! * [`fan`] — tie-pattern enumeration of tropical prevarieties with
//!   exact f-vectors, lineality and homogeneity spaces, and poset scans;
//! * [`corpus`] — deterministic test-corpus generation and the large
//!   cross-module property suites, also exposed through the CLI.

pub mod corpus;
pub mod error;
pub mod fan;
pub mod io;
pub mod lp;
pub mod matroid;
pub mod quotient;
pub mod rat;
pub mod realization;
pub mod relations;
pub mod sets;
pub mod spaces;
pub mod trop;

pub use error::{Error, Result};
pub use fan::{FanResult, FanSummary, HomogeneitySpace, PosetReport};
pub use matroid::{Matroid, PlueckerVector, ValuatedMatroid};
pub use quotient::{FlagInstance, SetMapWithZero, TheoremAReport};
pub use rat::Rat;
pub use realization::{LaurentElement, ValuedMatrix};
pub use relations::{DegenerationType, PairMode, SignedRelation, TropicalRelation};
pub use sets::Subset;
pub use spaces::CircuitVector;
pub use trop::{TropicalLinearForm, TropicalPoint, TropicalValue};
