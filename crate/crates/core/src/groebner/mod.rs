//! Groebner enrichments: orders on `Q(x)` compatible with postcomposition.
//!
//! A partial order `⪯` on the morphisms out of an object is a Groebner
//! enrichment when
//!
//! * (G1) `φ ≺ ψ` implies `ωφ ≺ ωψ` for parallel `φ, ψ` and every `ω`, and
//! * (G2) each hom-set is totally ordered and every non-empty subset of it
//!   has a maximal element.
//!
//! For path categories the enrichment of choice is the degree-lexicographic
//! order of [`GroebnerOrder`]. [`category`] checks supplied orders on finite
//! categories given by composition tables.

pub mod axioms;
pub mod category;
mod order;

pub use axioms::{
    check_g1, check_g2, check_refinement, g1_holds, G1Counterexample, G2Violation, Outcome,
    RefinementCounterexample,
};
pub use order::{ArrowRank, GroebnerOrder, PathOrder, PlainLexOrder, ReversedDegreeOrder};
