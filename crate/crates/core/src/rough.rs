//! Rough-set approximation operators of an arbitrary binary relation.
//!
//! `upper(A) = {x | x R y for some y in A}` and
//! `lower(A) = {x | y R x implies y in A}`. The pair is a Galois connection
//! on the powerset of the universe for any relation whatsoever. Successor
//! and predecessor neighbourhoods are precomputed so each query is one word
//! operation per point.

use crate::bits::{Subset, MAX_POINTS};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RoughError {
    #[error("universe has {size} elements, maximum is {max}")]
    UniverseTooLarge { size: usize, max: usize },
}

/// A finite universe with an arbitrary relation; no axioms are required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationSpace {
    universe: Vec<String>,
    succ: Vec<Subset>,
    pred: Vec<Subset>,
}

impl ApproximationSpace {
    /// `rows[x]` is the successor set `{y | x R y}`.
    pub fn new(universe: Vec<String>, rows: Vec<Subset>) -> Result<Self, RoughError> {
        let n = universe.len();
        if n > MAX_POINTS {
            return Err(RoughError::UniverseTooLarge { size: n, max: MAX_POINTS });
        }
        assert_eq!(rows.len(), n, "one relation row per universe element");
        let mut pred = vec![Subset::empty(n); n];
        for (x, row) in rows.iter().enumerate() {
            assert_eq!(row.universe(), n);
            for y in row.iter() {
                pred[y].insert(x);
            }
        }
        Ok(ApproximationSpace { universe, succ: rows, pred })
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn relation_rows(&self) -> &[Subset] {
        &self.succ
    }

    /// `A↑`: points related to something in `A`.
    pub fn upper(&self, a: Subset) -> Subset {
        let n = self.len();
        Subset::from_indices(n, (0..n).filter(|&x| self.succ[x].intersects(a)))
    }

    /// `A↓`: points all of whose predecessors lie in `A`.
    pub fn lower(&self, a: Subset) -> Subset {
        let n = self.len();
        Subset::from_indices(n, (0..n).filter(|&x| self.pred[x].is_subset_of(a)))
    }
}
