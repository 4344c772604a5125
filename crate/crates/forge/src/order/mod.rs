//! Finite ordered structures.
//!
//! Elements are opaque string identifiers; all structure lives in explicit
//! tables, and subset meets/joins are computed by exhaustive scan. Input
//! order is the canonical element order for every enumeration.

mod downset;
mod monotone;
mod poset;
mod semilattice;

pub use downset::{downset_completion, supercompact_elements, SupercompactReport};
pub use monotone::{monotone_adjoints, MonotoneMap};
pub use poset::{detect_structure, poset_reflection, FinPoset, PreorderPresentation, StructureReport};
pub use semilattice::{FiniteFrame, HeytingAlgebra, MeetSemilattice};
