//! Ioda-graphs: connected, acyclic directed multigraphs with ordered input
//! and output legs and a total order on the incoming and outgoing items of
//! every vertex.
//!
//! Vertices, edges and legs are addressed by dense indices. An [`Item`] names
//! one end of something attached to a vertex: an edge, an input leg or an
//! output leg.

mod canon;
mod colored;
mod collapse;
mod enumerate;
mod iso;

pub use canon::{canonical_key, CanonicalForm};
pub use colored::canonical_labeling;
pub use collapse::{check_partition, collapse, collapse_set, is_collapsible, substitute, Collapse, Substitution};
pub use enumerate::{enumerate, enumerate_bounded, enumerate_legless, for_each_bounded, for_each_graph, EnumerationBounds};
pub use iso::{automorphism_group, find_isomorphism, GraphIso, Mode, VertexOrderedIodaGraph};

use thiserror::Error;

/// Number of inputs and outputs.
pub type Arity = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Item {
    In(usize),
    Out(usize),
    Edge(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IodaGraph {
    pub vertex_count: usize,
    /// `(source, target)` for each edge.
    pub edges: Vec<(usize, usize)>,
    /// Target vertex of each input leg, in leg order.
    pub inputs: Vec<usize>,
    /// Source vertex of each output leg, in leg order.
    pub outputs: Vec<usize>,
    pub in_order: Vec<Vec<Item>>,
    pub out_order: Vec<Vec<Item>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Diagnostic {
    #[error("directed cycle through vertices {0:?}")]
    Cycle(Vec<usize>),
    #[error("graph is disconnected: vertex {0} unreachable from vertex 0")]
    Disconnected(usize),
    #[error("io condition violated: no input or output legs")]
    NoLegs,
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex}: {detail}")]
    BadOrder { vertex: usize, detail: String },
    #[error("vertex {0} has arity (0,0)")]
    ZeroArity(usize),
    #[error("{0} refers to a missing vertex")]
    DanglingReference(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid graph: {0:?}")]
    Invalid(Vec<Diagnostic>),
    #[error("subgraph is empty or refers to missing vertices")]
    BadSubgraph,
    #[error("subgraph is disconnected")]
    DisconnectedSubgraph,
    #[error("collapse creates a directed cycle through {0:?}")]
    NotCollapsible(Vec<usize>),
    #[error("arity mismatch at vertex {vertex}: expected {expected:?}, found {found:?}")]
    ArityMismatch { vertex: usize, expected: Arity, found: Arity },
    #[error("grafting must join at least one output to an input")]
    EmptyGrafting,
    #[error("grafting pair {0:?} is out of range or repeats a slot")]
    BadGrafting((usize, usize)),
    #[error("io-violation: result would have arity (0,0)")]
    IoViolation,
}

impl IodaGraph {
    /// The one-vertex graph with `a` inputs and `b` outputs in their natural order.
    pub fn corolla(a: usize, b: usize) -> Self {
        IodaGraph {
            vertex_count: 1,
            edges: vec![],
            inputs: vec![0; a],
            outputs: vec![0; b],
            in_order: vec![(0..a).map(Item::In).collect()],
            out_order: vec![(0..b).map(Item::Out).collect()],
        }
    }

    /// Corolla whose vertex slot `k` is attached to input leg `sigma_in[k]`
    /// and output leg `sigma_out[k]`.
    pub fn permuted_corolla(sigma_in: &[usize], sigma_out: &[usize]) -> Self {
        let mut g = Self::corolla(sigma_in.len(), sigma_out.len());
        g.in_order[0] = sigma_in.iter().map(|&k| Item::In(k)).collect();
        g.out_order[0] = sigma_out.iter().map(|&k| Item::Out(k)).collect();
        g
    }

    /// Two-vertex graph grafting output slot `p` of vertex 0 (arity `a`) to
    /// input slot `q` of vertex 1 (arity `b`) for each `(p, q)` in `phi`.
    /// Inputs are those of vertex 0 then the free ones of vertex 1; outputs
    /// are the free ones of vertex 0 then those of vertex 1.
    pub fn partially_grafted(a: Arity, b: Arity, phi: &[(usize, usize)]) -> Result<Self, GraphError> {
        if phi.is_empty() {
            return Err(GraphError::EmptyGrafting);
        }
        let mut out_edge = vec![None; a.1];
        let mut in_edge = vec![None; b.0];
        for (e, &(p, q)) in phi.iter().enumerate() {
            if p >= a.1 || q >= b.0 || out_edge[p].is_some() || in_edge[q].is_some() {
                return Err(GraphError::BadGrafting((p, q)));
            }
            out_edge[p] = Some(e);
            in_edge[q] = Some(e);
        }
        if a.0 + b.0 + a.1 + b.1 == 2 * phi.len() {
            return Err(GraphError::IoViolation);
        }
        let mut g = IodaGraph {
            vertex_count: 2,
            edges: vec![(0, 1); phi.len()],
            inputs: vec![0; a.0],
            outputs: Vec::new(),
            in_order: vec![(0..a.0).map(Item::In).collect(), Vec::new()],
            out_order: vec![Vec::new(), Vec::new()],
        };
        for slot in in_edge {
            g.in_order[1].push(match slot {
                Some(e) => Item::Edge(e),
                None => {
                    g.inputs.push(1);
                    Item::In(g.inputs.len() - 1)
                }
            });
        }
        for slot in out_edge {
            g.out_order[0].push(match slot {
                Some(e) => Item::Edge(e),
                None => {
                    g.outputs.push(0);
                    Item::Out(g.outputs.len() - 1)
                }
            });
        }
        for _ in 0..b.1 {
            g.outputs.push(1);
            g.out_order[1].push(Item::Out(g.outputs.len() - 1));
        }
        Ok(g)
    }

    pub fn arity(&self) -> Arity {
        (self.inputs.len(), self.outputs.len())
    }

    pub fn vertex_arity(&self, v: usize) -> Arity {
        (self.in_order[v].len(), self.out_order[v].len())
    }

    /// Vertex on the far side of `item` as seen from `v`, if any.
    pub fn across(&self, v: usize, item: Item) -> Option<usize> {
        match item {
            Item::Edge(e) => {
                let (s, t) = self.edges[e];
                Some(if s == v { t } else { s })
            }
            _ => None,
        }
    }

    /// Position of `item` in the in-order of its target vertex.
    pub fn in_slot(&self, item: Item) -> (usize, usize) {
        let v = match item {
            Item::Edge(e) => self.edges[e].1,
            Item::In(k) => self.inputs[k],
            Item::Out(_) => panic!("output leg has no in-slot"),
        };
        let p = self.in_order[v].iter().position(|&x| x == item).expect("item in order");
        (v, p)
    }

    /// Position of `item` in the out-order of its source vertex.
    pub fn out_slot(&self, item: Item) -> (usize, usize) {
        let v = match item {
            Item::Edge(e) => self.edges[e].0,
            Item::Out(k) => self.outputs[k],
            Item::In(_) => panic!("input leg has no out-slot"),
        };
        let p = self.out_order[v].iter().position(|&x| x == item).expect("item in order");
        (v, p)
    }

    /// All diagnostics, empty iff the graph is a valid ioda-graph.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = self.structural_diagnostics();
        if self.inputs.is_empty() && self.outputs.is_empty() {
            out.push(Diagnostic::NoLegs);
        }
        out
    }

    /// Diagnostics for every invariant except the io condition.
    pub fn structural_diagnostics(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let n = self.vertex_count;
        if n == 0 {
            out.push(Diagnostic::Empty);
            return out;
        }
        if self.in_order.len() != n || self.out_order.len() != n {
            out.push(Diagnostic::BadOrder {
                vertex: n,
                detail: "order table length differs from vertex count".into(),
            });
            return out;
        }
        for (e, &(s, t)) in self.edges.iter().enumerate() {
            if s >= n || t >= n {
                out.push(Diagnostic::DanglingReference(format!("edge {e}")));
            }
        }
        for (k, &v) in self.inputs.iter().enumerate() {
            if v >= n {
                out.push(Diagnostic::DanglingReference(format!("input {k}")));
            }
        }
        for (k, &v) in self.outputs.iter().enumerate() {
            if v >= n {
                out.push(Diagnostic::DanglingReference(format!("output {k}")));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for v in 0..n {
            let mut want_in: Vec<Item> = self
                .edges
                .iter()
                .enumerate()
                .filter(|(_, &(_, t))| t == v)
                .map(|(e, _)| Item::Edge(e))
                .chain(self.inputs.iter().enumerate().filter(|(_, &t)| t == v).map(|(k, _)| Item::In(k)))
                .collect();
            let mut want_out: Vec<Item> = self
                .edges
                .iter()
                .enumerate()
                .filter(|(_, &(s, _))| s == v)
                .map(|(e, _)| Item::Edge(e))
                .chain(self.outputs.iter().enumerate().filter(|(_, &s)| s == v).map(|(k, _)| Item::Out(k)))
                .collect();
            let mut have_in = self.in_order[v].clone();
            let mut have_out = self.out_order[v].clone();
            want_in.sort();
            want_out.sort();
            have_in.sort();
            have_out.sort();
            if want_in != have_in {
                out.push(Diagnostic::BadOrder {
                    vertex: v,
                    detail: format!("in-order {:?} is not a bijection onto {:?}", self.in_order[v], want_in),
                });
            }
            if want_out != have_out {
                out.push(Diagnostic::BadOrder {
                    vertex: v,
                    detail: format!("out-order {:?} is not a bijection onto {:?}", self.out_order[v], want_out),
                });
            }
            if want_in.is_empty() && want_out.is_empty() {
                out.push(Diagnostic::ZeroArity(v));
            }
        }
        if !out.is_empty() {
            return out;
        }
        if let Some(c) = self.find_cycle() {
            out.push(Diagnostic::Cycle(c));
        }
        if let Some(v) = self.unreachable_vertex() {
            out.push(Diagnostic::Disconnected(v));
        }
        out
    }

    pub fn check(&self) -> Result<(), GraphError> {
        let d = self.validate();
        if d.is_empty() {
            Ok(())
        } else {
            Err(GraphError::Invalid(d))
        }
    }

    /// Some directed cycle, as a vertex sequence, if one exists.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        find_cycle(self.vertex_count, &self.edges)
    }

    fn unreachable_vertex(&self) -> Option<usize> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(s, t) in &self.edges {
            adj[s].push(t);
            adj[t].push(s);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    /// Vertices in a topological order (sources first).
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        topo(self.vertex_count, &self.edges)
    }

    /// Number of independent cycles of the underlying undirected graph.
    pub fn first_betti(&self) -> usize {
        self.edges.len() + 1 - self.vertex_count
    }
}

pub(crate) fn topo(n: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut adj = vec![Vec::new(); n];
    for &(s, t) in edges {
        indeg[t] += 1;
        adj[s].push(t);
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    ready.reverse();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        for &w in &adj[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

pub(crate) fn find_cycle(n: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(s, t) in edges {
        adj[s].push(t);
    }
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        state[root] = 1;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < adj[v].len() {
                let w = adj[v][*i];
                *i += 1;
                if state[w] == 1 {
                    let mut cyc = vec![w];
                    let mut u = v;
                    while u != w {
                        cyc.push(u);
                        u = parent[u];
                    }
                    cyc.reverse();
                    cyc.rotate_right(1);
                    return Some(cyc);
                }
                if state[w] == 0 {
                    state[w] = 1;
                    parent[w] = v;
                    stack.push((w, 0));
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grafting_along_both_legs() {
        let g = IodaGraph::partially_grafted((1, 2), (2, 1), &[(0, 0), (1, 1)]).unwrap();
        assert!(g.validate().is_empty());
        assert_eq!((g.vertex_count, g.edges.len(), g.arity()), (2, 2, (1, 1)));
        assert_eq!(IodaGraph::partially_grafted((0, 1), (1, 0), &[(0, 0)]), Err(GraphError::IoViolation));
        assert_eq!(IodaGraph::partially_grafted((1, 1), (1, 1), &[]), Err(GraphError::EmptyGrafting));
    }

    #[test]
    fn corolla_is_valid() {
        assert!(IodaGraph::corolla(0, 1).validate().is_empty());
        assert!(IodaGraph::corolla(2, 1).validate().is_empty());
    }

    #[test]
    fn two_cycle_reported() {
        let g = IodaGraph {
            vertex_count: 2,
            edges: vec![(0, 1), (1, 0)],
            inputs: vec![0],
            outputs: vec![],
            in_order: vec![vec![Item::In(0), Item::Edge(1)], vec![Item::Edge(0)]],
            out_order: vec![vec![Item::Edge(0)], vec![Item::Edge(1)]],
        };
        let d = g.validate();
        assert!(d.iter().any(|d| matches!(d, Diagnostic::Cycle(c) if c.len() == 2)), "{d:?}");
    }

    #[test]
    fn bare_vertex_violates_io() {
        let g = IodaGraph {
            vertex_count: 1,
            edges: vec![],
            inputs: vec![],
            outputs: vec![],
            in_order: vec![vec![]],
            out_order: vec![vec![]],
        };
        let d = g.validate();
        assert!(d.contains(&Diagnostic::NoLegs));
        assert!(d.contains(&Diagnostic::ZeroArity(0)));
    }

    #[test]
    fn legless_two_vertex_graph_reports_io() {
        let g = IodaGraph {
            vertex_count: 2,
            edges: vec![(0, 1)],
            inputs: vec![],
            outputs: vec![],
            in_order: vec![vec![], vec![Item::Edge(0)]],
            out_order: vec![vec![Item::Edge(0)], vec![]],
        };
        assert_eq!(g.validate(), vec![Diagnostic::NoLegs]);
    }

    #[test]
    fn bad_order_names_vertex() {
        let mut g = IodaGraph::corolla(2, 1);
        g.in_order[0] = vec![Item::In(0), Item::In(0)];
        let d = g.validate();
        assert!(matches!(d[0], Diagnostic::BadOrder { vertex: 0, .. }));
    }
}
