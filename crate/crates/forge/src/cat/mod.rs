//! Finite and bounded-enumerable categories.
//!
//! A [`Category`] is a capability record: deterministic budgeted object
//! enumeration, hom-sets, composition, and optional finite-limit calculators.
//! Presented categories are given by tables; virtual ones (bounded finite
//! sets, slices, categories of points, completions) compute everything on
//! demand. Limit cones carry universal-property certificates produced by
//! exhaustive competitor scans.

mod core;
mod equivalence;
mod finset;
mod functor;
mod generic_proof;
mod limits;
mod presented;
mod slice;
mod wdp;

pub use core::{Arr, CatImpl, Category, Concrete, EqualizerCone, ExponentialCone, ProductCone, PullbackCone};
pub use equivalence::equivalence_check;
pub use finset::{el_fn, el_pair, FinSet};
pub use functor::{identity_functor, validate_functor, Functor, FunctorImpl};
pub use generic_proof::{generic_proof_search, slice_generic_proof, GenericProof};
pub use limits::{limit_certificate, mediating_arrows};
pub use presented::{equivariant_category, poset_category, ActionSet, ArrRec, FinCategory};
pub use slice::slice_category;
pub use wdp::{weak_dependent_product, wdp_is_weakly_terminal, WdpDiagram};
