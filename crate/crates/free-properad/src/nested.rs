use crate::{substitute_labeled, HasArity, LabeledGraph, NestError};
use graph_core::{check_partition, collapse, Arity, Substitution};

/// A value of uniform nesting depth: a bare label at depth 0, otherwise a
/// labeled graph whose labels have depth one less.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Nested<L> {
    Leaf(L),
    Graph(LabeledGraph<Nested<L>>),
}

impl<L: HasArity> HasArity for Nested<L> {
    fn arity(&self) -> Arity {
        match self {
            Nested::Leaf(l) => l.arity(),
            Nested::Graph(g) => g.shape.arity(),
        }
    }
}

impl<L: HasArity + Clone> Nested<L> {
    /// Depth read off the first vertex at each level.
    pub fn depth(&self) -> usize {
        match self {
            Nested::Leaf(_) => 0,
            Nested::Graph(g) => 1 + g.labels.first().map_or(0, |l| l.depth()),
        }
    }

    pub fn as_graph(&self) -> Option<&LabeledGraph<Nested<L>>> {
        match self {
            Nested::Graph(g) => Some(g),
            Nested::Leaf(_) => None,
        }
    }

    pub fn into_graph(self) -> Option<LabeledGraph<Nested<L>>> {
        match self {
            Nested::Graph(g) => Some(g),
            Nested::Leaf(_) => None,
        }
    }

    pub fn as_leaf(&self) -> Option<&L> {
        match self {
            Nested::Leaf(l) => Some(l),
            Nested::Graph(_) => None,
        }
    }

    /// Checks shapes, arity coherence and uniform depth at every level.
    pub fn validate(&self) -> Result<(), NestError> {
        match self {
            Nested::Leaf(l) if l.arity() == (0, 0) => Err(NestError::ZeroArity),
            Nested::Leaf(_) => Ok(()),
            Nested::Graph(g) => {
                g.shape.check()?;
                g.check_labels()?;
                let d = g.labels[0].depth();
                for l in &g.labels {
                    if l.depth() != d {
                        return Err(NestError::NonUniformDepth);
                    }
                    l.validate()?;
                }
                Ok(())
            }
        }
    }

    /// Canonical form at every level; equal values have equal canonical forms.
    pub fn canonical(&self) -> Self {
        match self {
            Nested::Leaf(_) => self.clone(),
            Nested::Graph(g) => Nested::Graph(g.map(|l| l.canonical()).canonical()),
        }
    }

    /// All labels at depth zero, in vertex order level by level.
    pub fn leaves(&self) -> Vec<&L> {
        match self {
            Nested::Leaf(l) => vec![l],
            Nested::Graph(g) => g.labels.iter().flat_map(|l| l.leaves()).collect(),
        }
    }

    /// Number of vertices at the outermost level.
    pub fn vertex_count(&self) -> usize {
        self.as_graph().map_or(0, |g| g.shape.vertex_count)
    }
}

/// The corolla labeled by `x`, one level deeper than `x`.
pub fn eta<L: HasArity + Clone>(x: Nested<L>) -> Result<Nested<L>, NestError> {
    Ok(Nested::Graph(LabeledGraph::corolla(x)?))
}

/// Substitute every inner graph of `g` into its host vertex. The
/// substitution records where each vertex of the result came from.
pub fn flatten_outer<L: HasArity + Clone>(
    g: &LabeledGraph<Nested<L>>,
) -> Result<(LabeledGraph<Nested<L>>, Substitution), NestError> {
    let mut parts = Vec::with_capacity(g.labels.len());
    for l in &g.labels {
        match l {
            Nested::Graph(h) => parts.push(h),
            Nested::Leaf(_) => return Err(NestError::Level { depth: 1, level: 0 }),
        }
    }
    Ok(substitute_labeled(&g.shape, &parts)?)
}

/// Forget the nesting between levels `i` and `i + 1` (level 0 is outermost).
pub fn flatten_at_level<L: HasArity + Clone>(x: &Nested<L>, i: usize) -> Result<Nested<L>, NestError> {
    let depth = x.depth();
    if depth < 2 || i + 2 > depth {
        return Err(NestError::Level { depth, level: i });
    }
    Ok(flatten_unchecked(x, i)?.canonical())
}

fn flatten_unchecked<L: HasArity + Clone>(x: &Nested<L>, i: usize) -> Result<Nested<L>, NestError> {
    let g = x.as_graph().expect("depth checked");
    if i == 0 {
        let (flat, _) = flatten_outer(g)?;
        debug_assert!((0..flat.shape.vertex_count).all(|v| flat.shape.vertex_arity(v) != (0, 0)));
        return Ok(Nested::Graph(flat));
    }
    let labels = g.labels.iter().map(|l| flatten_unchecked(l, i - 1)).collect::<Result<_, _>>()?;
    Ok(Nested::Graph(LabeledGraph { shape: g.shape.clone(), labels }))
}

/// Wrap every value sitting `i + 1` levels down in a corolla, adding one
/// level of nesting. `i = 0` wraps the labels of the outermost graph.
pub fn insert_nesting_at<L: HasArity + Clone>(x: &Nested<L>, i: usize) -> Result<Nested<L>, NestError> {
    let depth = x.depth();
    if depth == 0 || i >= depth {
        return Err(NestError::Level { depth, level: i });
    }
    insert_unchecked(x, i)
}

fn insert_unchecked<L: HasArity + Clone>(x: &Nested<L>, i: usize) -> Result<Nested<L>, NestError> {
    let g = x.as_graph().expect("depth checked");
    let labels = if i == 0 {
        g.labels.iter().map(|l| eta(l.clone())).collect::<Result<_, _>>()?
    } else {
        g.labels.iter().map(|l| insert_unchecked(l, i - 1)).collect::<Result<_, _>>()?
    };
    Ok(Nested::Graph(LabeledGraph { shape: g.shape.clone(), labels }))
}

/// Relabel the depth-zero labels by `f`, which must preserve arity.
pub fn map_labels<L: HasArity, M: HasArity>(
    x: &Nested<L>,
    f: &mut dyn FnMut(&L) -> M,
) -> Result<Nested<M>, NestError> {
    match x {
        Nested::Leaf(l) => {
            let m = f(l);
            if m.arity() != l.arity() {
                return Err(NestError::ArityBreakingMap { from: l.arity(), to: m.arity() });
            }
            Ok(Nested::Leaf(m))
        }
        Nested::Graph(g) => {
            let labels = g.labels.iter().map(|l| map_labels(l, f)).collect::<Result<_, _>>()?;
            Ok(Nested::Graph(LabeledGraph { shape: g.shape.clone(), labels }))
        }
    }
}

/// Result of grouping the vertices of a labeled graph into nested regions.
#[derive(Clone, Debug)]
pub struct Coarsening<L> {
    /// Quotient graph; each label is the region it replaced.
    pub graph: LabeledGraph<Nested<L>>,
    /// Quotient vertex of each group.
    pub group_vertex: Vec<usize>,
    /// For each group, the original vertex behind each inner vertex.
    pub inner_vertices: Vec<Vec<usize>>,
}

/// Group the vertices of `g` by `groups`, adding one level of nesting. Each
/// group becomes one vertex labeled by its induced labeled subgraph, whose
/// vertices are listed in the order given.
pub fn coarsen<L: HasArity + Clone>(
    g: &LabeledGraph<Nested<L>>,
    groups: &[Vec<usize>],
) -> Result<Coarsening<L>, NestError> {
    check_partition(&g.shape, groups)?;
    let mut cur = g.shape.clone();
    let mut labels: Vec<Option<Nested<L>>> = g.labels.iter().cloned().map(Some).collect();
    let mut pos: Vec<usize> = (0..g.shape.vertex_count).collect();
    let mut group_vertex: Vec<usize> = Vec::with_capacity(groups.len());
    for h in groups {
        let hc: Vec<usize> = h.iter().map(|&v| pos[v]).collect();
        let c = collapse(&cur, &hc)?;
        let inner_labels = c.inner_vertices.iter().map(|&v| labels[v].take().expect("ungrouped")).collect();
        let mut next = vec![None; c.graph.vertex_count];
        for (v, l) in labels.into_iter().enumerate() {
            if l.is_some() {
                next[c.vertex_map[v]] = l;
            }
        }
        next[c.new_vertex] = Some(Nested::Graph(LabeledGraph { shape: c.inner, labels: inner_labels }));
        labels = next;
        for p in pos.iter_mut().chain(group_vertex.iter_mut()) {
            *p = c.vertex_map[*p];
        }
        group_vertex.push(c.new_vertex);
        cur = c.graph;
    }
    let labels = labels.into_iter().map(|l| l.expect("every vertex grouped")).collect();
    Ok(Coarsening { graph: LabeledGraph { shape: cur, labels }, group_vertex, inner_vertices: groups.to_vec() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Label;
    use graph_core::IodaGraph;

    fn lab(a: usize, b: usize) -> Nested<Label> {
        Nested::Leaf(Label { arity: (a, b), id: 0 })
    }

    fn grafted() -> LabeledGraph<Nested<Label>> {
        let shape = IodaGraph::partially_grafted((1, 2), (2, 1), &[(0, 0), (1, 1)]).unwrap();
        LabeledGraph::new(shape, vec![lab(1, 2), lab(2, 1)]).unwrap()
    }

    #[test]
    fn eta_builds_corolla() {
        let x = eta(lab(1, 2)).unwrap();
        let g = x.as_graph().unwrap();
        assert_eq!(g.shape, IodaGraph::corolla(1, 2));
        assert_eq!(x.depth(), 1);
        assert!(eta(lab(0, 0)).is_err());
    }

    #[test]
    fn flatten_of_corolla_nesting_is_identity() {
        let x = Nested::Graph(grafted());
        let y = insert_nesting_at(&x, 0).unwrap();
        assert_eq!(y.depth(), 2);
        assert_eq!(flatten_at_level(&y, 0).unwrap(), x.canonical());
        let z = eta(x.clone()).unwrap();
        assert_eq!(flatten_at_level(&z, 0).unwrap(), x.canonical());
    }

    #[test]
    fn level_out_of_range() {
        let x = Nested::Graph(grafted());
        assert!(flatten_at_level(&x, 0).is_err());
        assert!(insert_nesting_at(&x, 1).is_err());
    }

    #[test]
    fn coarsen_then_flatten() {
        let g = grafted();
        let c = coarsen(&g, &[vec![0, 1]]).unwrap();
        assert_eq!(c.graph.shape.vertex_count, 1);
        let x = Nested::Graph(c.graph);
        assert_eq!(flatten_at_level(&x, 0).unwrap(), Nested::Graph(g).canonical());
    }

    #[test]
    fn map_labels_rejects_arity_change() {
        let x = eta(lab(1, 1)).unwrap();
        let r = map_labels(&x, &mut |_| Label { arity: (2, 1), id: 0 });
        assert!(matches!(r, Err(NestError::ArityBreakingMap { .. })));
    }
}
