use crate::{GraphError, IodaGraph, Item};
use std::collections::VecDeque;

/// A graph relabeled into canonical position, with the maps from old to new
/// vertex and edge indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub graph: IodaGraph,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

impl IodaGraph {
    /// Renumber vertices and edges by `vmap` and `emap` (old index to new).
    pub fn relabel(&self, vmap: &[usize], emap: &[usize]) -> IodaGraph {
        let n = self.vertex_count;
        let mut edges = vec![(0, 0); self.edges.len()];
        for (e, &(s, t)) in self.edges.iter().enumerate() {
            edges[emap[e]] = (vmap[s], vmap[t]);
        }
        let map_item = |it: &Item| match *it {
            Item::Edge(e) => Item::Edge(emap[e]),
            other => other,
        };
        let mut in_order = vec![Vec::new(); n];
        let mut out_order = vec![Vec::new(); n];
        for v in 0..n {
            in_order[vmap[v]] = self.in_order[v].iter().map(map_item).collect();
            out_order[vmap[v]] = self.out_order[v].iter().map(map_item).collect();
        }
        IodaGraph {
            vertex_count: n,
            edges,
            inputs: self.inputs.iter().map(|&v| vmap[v]).collect(),
            outputs: self.outputs.iter().map(|&v| vmap[v]).collect(),
            in_order,
            out_order,
        }
    }

    /// Breadth-first numbering from `start`, visiting the items of each
    /// vertex in in-order then out-order. `None` if some vertex is unreached.
    pub(crate) fn traversal_from(&self, start: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut vmap = vec![usize::MAX; self.vertex_count];
        let mut emap = vec![usize::MAX; self.edges.len()];
        let (mut nv, mut ne) = (0, 0);
        let mut queue = VecDeque::new();
        vmap[start] = nv;
        nv += 1;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &it in self.in_order[v].iter().chain(self.out_order[v].iter()) {
                if let Item::Edge(e) = it {
                    if emap[e] == usize::MAX {
                        emap[e] = ne;
                        ne += 1;
                    }
                    let w = self.across(v, it).unwrap();
                    if vmap[w] == usize::MAX {
                        vmap[w] = nv;
                        nv += 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        (nv == self.vertex_count).then_some((vmap, emap))
    }

    /// The vertex pinned by the first leg: target of input 0, else source of output 0.
    pub fn root_vertex(&self) -> Option<usize> {
        self.inputs.first().or(self.outputs.first()).copied()
    }

    /// Canonical representative. For graphs with legs the traversal starts at
    /// the root vertex; for legless graphs the least encoding over all
    /// starting vertices is taken.
    pub fn canonical_form(&self) -> CanonicalForm {
        let starts: Vec<usize> = match self.root_vertex() {
            Some(r) => vec![r],
            None => (0..self.vertex_count).collect(),
        };
        let mut best: Option<(Vec<u8>, CanonicalForm)> = None;
        for s in starts {
            let Some((vmap, emap)) = self.traversal_from(s) else { continue };
            let graph = self.relabel(&vmap, &emap);
            let key = encode(&graph);
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, CanonicalForm { graph, vertex_map: vmap, edge_map: emap }));
            }
        }
        best.expect("connected graph").1
    }

    pub fn canonical(&self) -> IodaGraph {
        self.canonical_form().graph
    }
}

/// Byte string equal for two valid graphs iff they are isomorphic.
pub fn canonical_key(g: &IodaGraph) -> Result<Vec<u8>, GraphError> {
    let d = g.structural_diagnostics();
    if !d.is_empty() {
        return Err(GraphError::Invalid(d));
    }
    Ok(encode(&g.canonical_form().graph))
}

pub(crate) fn encode(g: &IodaGraph) -> Vec<u8> {
    let mut out = Vec::with_capacity(16 + 8 * g.edges.len());
    let mut push = |x: usize| out.extend_from_slice(&(x as u32).to_be_bytes());
    push(g.vertex_count);
    push(g.edges.len());
    push(g.inputs.len());
    push(g.outputs.len());
    for &(s, t) in &g.edges {
        push(s);
        push(t);
    }
    g.inputs.iter().for_each(|&v| push(v));
    g.outputs.iter().for_each(|&v| push(v));
    for v in 0..g.vertex_count {
        for order in [&g.in_order[v], &g.out_order[v]] {
            push(order.len());
            for it in order {
                match *it {
                    Item::In(k) => push(k),
                    Item::Out(k) => push((1 << 20) | k),
                    Item::Edge(e) => push((2 << 20) | e),
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> IodaGraph {
        // 0 -> 1, input into 0, output from 1
        IodaGraph {
            vertex_count: 2,
            edges: vec![(0, 1)],
            inputs: vec![0],
            outputs: vec![1],
            in_order: vec![vec![Item::In(0)], vec![Item::Edge(0)]],
            out_order: vec![vec![Item::Edge(0)], vec![Item::Out(0)]],
        }
    }

    #[test]
    fn relabeling_invariance() {
        let g = chain();
        let h = g.relabel(&[1, 0], &[0]);
        assert_ne!(g, h);
        assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
    }

    #[test]
    fn distinct_arities_distinct_keys() {
        let a = canonical_key(&IodaGraph::corolla(2, 1)).unwrap();
        let b = canonical_key(&IodaGraph::corolla(1, 2)).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn leg_permutation_changes_key() {
        let a = canonical_key(&IodaGraph::permuted_corolla(&[0, 1], &[0])).unwrap();
        let b = canonical_key(&IodaGraph::permuted_corolla(&[1, 0], &[0])).unwrap();
        assert_ne!(a, b);
    }
}
