//! Workbench for finite doctrines and their completions.
//!
//! The crate provides finite ordered structures (`order`), bounded-enumerable
//! categories (`cat`), doctrines as indexed meet-semilattices (`doctrine`),
//! the four completions — category of points, full existential completion,
//! regular completion, exact completion of partial equivalence predicates —
//! (`completion`), geometric embeddings with closure-operator sheafification
//! (`sheaf`), and the instance library, file format and command surface
//! (`workbench`).
//!
//! Every checked law is reported as a [`cert::Certificate`]: a deterministic,
//! budget-indexed verdict with witnesses or a counterexample. Nothing is ever
//! claimed beyond the enumerated fragment.

pub mod budget;
pub mod cat;
pub mod cert;
pub mod completion;
pub mod doctrine;
pub mod order;
pub mod sheaf;
pub mod val;
pub mod workbench;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An enumeration or materialization exceeded its budget.
    #[error("budget exhausted: {0}")]
    Budget(String),
    /// A structure failed its construction invariants.
    #[error("invalid structure: {0}")]
    Invalid(String),
    /// A required piece of structure (adjoint, limit, witness) is missing.
    #[error("missing structure: {0}")]
    Missing(String),
    /// A name in an instance file or expression did not resolve.
    #[error("unresolved reference: {0}")]
    Unresolved(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
