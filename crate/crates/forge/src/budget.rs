//! Enumeration budgets.
//!
//! Virtual categories and doctrine fibres are infinite in general; every
//! enumeration is driven by a budget and every certificate records the budget
//! it was produced under.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Cap on enumerated objects of a virtual category.
    pub max_objects: usize,
    /// Cap on the size of enumerated base sets (the finset universe slice).
    pub max_set_size: usize,
    /// Cap on competitor diagrams tested in weak-terminality and search sweeps.
    pub max_competitors: usize,
    /// Nesting depth for derived objects (products of enumerated objects).
    pub max_depth: usize,
    /// Cap on materialized fibre size; larger fibres yield a budget outcome.
    pub max_fibre: usize,
    /// Seed for randomized sampling that extends systematic sweeps.
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_objects: 32,
            max_set_size: 3,
            max_competitors: 500,
            max_depth: 1,
            max_fibre: 64,
            seed: 0,
        }
    }
}

impl Budget {
    pub fn validate(&self) -> Result<()> {
        if self.max_objects == 0
            || self.max_set_size == 0
            || self.max_competitors == 0
            || self.max_depth == 0
            || self.max_fibre == 0
        {
            return Err(Error::Invalid("budget fields must be positive".into()));
        }
        Ok(())
    }

    pub fn with_objects(mut self, n: usize) -> Budget {
        self.max_objects = n;
        self
    }

    pub fn with_set_size(mut self, n: usize) -> Budget {
        self.max_set_size = n;
        self
    }

    pub fn with_fibre(mut self, n: usize) -> Budget {
        self.max_fibre = n;
        self
    }

    pub fn with_competitors(mut self, n: usize) -> Budget {
        self.max_competitors = n;
        self
    }

    pub fn with_seed(mut self, s: u64) -> Budget {
        self.seed = s;
        self
    }
}

/// A deterministic prefix of a possibly larger enumeration. `exhausted` is
/// true when the budget cut the enumeration short; certificates must record
/// it so no claim silently extends past the fragment.
#[derive(Clone, Debug)]
pub struct Enumeration<T> {
    pub items: Vec<T>,
    pub exhausted: bool,
}

impl<T> Enumeration<T> {
    pub fn complete(items: Vec<T>) -> Enumeration<T> {
        Enumeration { items, exhausted: false }
    }

    pub fn capped(items: Vec<T>, exhausted: bool) -> Enumeration<T> {
        Enumeration { items, exhausted }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_budget_is_valid() {
        Budget::default().validate().unwrap();
    }

    #[test]
    fn zero_field_rejected() {
        let b = Budget { max_objects: 0, ..Budget::default() };
        assert!(b.validate().is_err());
    }
}
