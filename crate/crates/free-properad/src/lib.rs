//! Labeled and nested ioda-graphs.
//!
//! A [`LabeledGraph`] decorates each vertex of an ioda-graph with a label of
//! matching arity. A [`Nested`] value of depth `k` is a labeled graph whose
//! labels are nested values of depth `k - 1`, bottoming out in bare labels.
//! Flattening one level substitutes the inner graphs into the outer shape;
//! together with the corolla unit this is the free-properad monad.

mod chain;
mod labeled;
mod laws;
mod nested;
pub mod sample;

pub use chain::{assemble, decompose, Chain};
pub use labeled::{substitute_labeled, LabeledGraph};
pub use laws::{check_monad_laws, Report};
pub use nested::{coarsen, eta, flatten_at_level, flatten_outer, insert_nesting_at, map_labels, Coarsening, Nested};

use graph_core::{Arity, GraphError};
use std::collections::BTreeMap;
use thiserror::Error;

pub trait HasArity {
    fn arity(&self) -> Arity;
}

/// A generator: label `id` among those of its arity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub arity: Arity,
    pub id: u32,
}

impl HasArity for Label {
    fn arity(&self) -> Arity {
        self.arity
    }
}

/// Finitely many labels per arity, numbered from zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IoSequence {
    counts: BTreeMap<Arity, u32>,
}

impl IoSequence {
    pub fn new(entries: impl IntoIterator<Item = (Arity, u32)>) -> Result<Self, NestError> {
        let mut counts = BTreeMap::new();
        for (a, n) in entries {
            if a == (0, 0) {
                return Err(NestError::ZeroArity);
            }
            if n > 0 {
                *counts.entry(a).or_insert(0) += n;
            }
        }
        Ok(IoSequence { counts })
    }

    /// One label in each of the given arities.
    pub fn singleton(arities: &[Arity]) -> Result<Self, NestError> {
        Self::new(arities.iter().map(|&a| (a, 1)))
    }

    pub fn arities(&self) -> impl Iterator<Item = Arity> + '_ {
        self.counts.keys().copied()
    }

    pub fn labels(&self, arity: Arity) -> impl Iterator<Item = Label> {
        (0..self.counts.get(&arity).copied().unwrap_or(0)).map(move |id| Label { arity, id })
    }

    pub fn all_labels(&self) -> Vec<Label> {
        self.arities().flat_map(|a| self.labels(a)).collect()
    }

    pub fn contains(&self, l: &Label) -> bool {
        self.counts.get(&l.arity).is_some_and(|&n| l.id < n)
    }

    pub fn has_arity(&self, a: Arity) -> bool {
        self.counts.contains_key(&a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NestError {
    #[error("arity (0,0) is not allowed")]
    ZeroArity,
    #[error("level {level} is out of range for depth {depth}")]
    Level { depth: usize, level: usize },
    #[error("labels have mixed nesting depths")]
    NonUniformDepth,
    #[error("label count {labels} does not match vertex count {vertices}")]
    LabelCount { vertices: usize, labels: usize },
    #[error("arity mismatch at vertex {vertex}: expected {expected:?}, found {found:?}")]
    ArityMismatch { vertex: usize, expected: Arity, found: Arity },
    #[error("label map changed arity {from:?} to {to:?}")]
    ArityBreakingMap { from: Arity, to: Arity },
    #[error("not a chain of partitions: {0}")]
    BadChain(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
