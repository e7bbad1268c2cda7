use crate::{HasArity, NestError};
use graph_core::{substitute, Arity, GraphError, IodaGraph, Substitution};

/// An ioda-graph with one label per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph<L> {
    pub shape: IodaGraph,
    pub labels: Vec<L>,
}

impl<L: HasArity> HasArity for LabeledGraph<L> {
    fn arity(&self) -> Arity {
        self.shape.arity()
    }
}

impl<L: HasArity + Clone> LabeledGraph<L> {
    /// Checks that the shape is a valid ioda-graph and every label fits its vertex.
    pub fn new(shape: IodaGraph, labels: Vec<L>) -> Result<Self, NestError> {
        shape.check()?;
        let g = LabeledGraph { shape, labels };
        g.check_labels()?;
        Ok(g)
    }

    pub fn check_labels(&self) -> Result<(), NestError> {
        if self.labels.len() != self.shape.vertex_count {
            return Err(NestError::LabelCount { vertices: self.shape.vertex_count, labels: self.labels.len() });
        }
        for (v, l) in self.labels.iter().enumerate() {
            let expected = self.shape.vertex_arity(v);
            if l.arity() != expected {
                return Err(NestError::ArityMismatch { vertex: v, expected, found: l.arity() });
            }
        }
        Ok(())
    }

    /// The corolla labeled by `x`.
    pub fn corolla(x: L) -> Result<Self, NestError> {
        let (a, b) = x.arity();
        if (a, b) == (0, 0) {
            return Err(NestError::ZeroArity);
        }
        Ok(LabeledGraph { shape: IodaGraph::corolla(a, b), labels: vec![x] })
    }

    /// Same labeled graph with vertices renumbered into canonical position.
    pub fn canonical(&self) -> Self {
        let cf = self.shape.canonical_form();
        let mut labels = self.labels.clone();
        for (v, l) in self.labels.iter().enumerate() {
            labels[cf.vertex_map[v]] = l.clone();
        }
        LabeledGraph { shape: cf.graph, labels }
    }

    pub fn map<M>(&self, f: impl FnMut(&L) -> M) -> LabeledGraph<M> {
        LabeledGraph { shape: self.shape.clone(), labels: self.labels.iter().map(f).collect() }
    }
}

/// Substitute `parts[v]` into vertex `v` of `outer`, concatenating labels.
pub fn substitute_labeled<L: Clone>(
    outer: &IodaGraph,
    parts: &[&LabeledGraph<L>],
) -> Result<(LabeledGraph<L>, Substitution), GraphError> {
    let shapes: Vec<&IodaGraph> = parts.iter().map(|p| &p.shape).collect();
    let s = substitute(outer, &shapes)?;
    let labels = s.vertex_origin.iter().map(|&(v, u)| parts[v].labels[u].clone()).collect();
    Ok((LabeledGraph { shape: s.graph.clone(), labels }, s))
}
