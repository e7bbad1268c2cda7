use crate::{GraphError, IodaGraph, Item};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphIso {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
    pub input_map: Vec<usize>,
    pub output_map: Vec<usize>,
}

impl GraphIso {
    pub fn is_identity(&self) -> bool {
        let id = |m: &[usize]| m.iter().enumerate().all(|(i, &j)| i == j);
        id(&self.vertex_map) && id(&self.edge_map) && id(&self.input_map) && id(&self.output_map)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Ordered,
    UnorderedVertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrderedIodaGraph {
    pub base: IodaGraph,
    /// Vertices listed in their order.
    pub vertex_order: Vec<usize>,
}

impl VertexOrderedIodaGraph {
    pub fn natural(base: IodaGraph) -> Self {
        let vertex_order = (0..base.vertex_count).collect();
        VertexOrderedIodaGraph { base, vertex_order }
    }
}

/// Extend `v0 -> w0` to an isomorphism `g -> h` by following the orderings.
/// Connectedness makes the extension unique when it exists.
fn propagate(g: &IodaGraph, h: &IodaGraph, v0: usize, w0: usize) -> Option<GraphIso> {
    let mut vmap = vec![usize::MAX; g.vertex_count];
    let mut vinv = vec![usize::MAX; h.vertex_count];
    let mut emap = vec![usize::MAX; g.edges.len()];
    let mut stack = vec![(v0, w0)];
    vmap[v0] = w0;
    vinv[w0] = v0;
    while let Some((v, w)) = stack.pop() {
        if g.vertex_arity(v) != h.vertex_arity(w) {
            return None;
        }
        let pairs = g.in_order[v]
            .iter()
            .zip(&h.in_order[w])
            .chain(g.out_order[v].iter().zip(&h.out_order[w]));
        for (&a, &b) in pairs {
            match (a, b) {
                (Item::In(i), Item::In(j)) | (Item::Out(i), Item::Out(j)) if i == j => {}
                (Item::Edge(e), Item::Edge(f)) => {
                    if emap[e] == usize::MAX {
                        emap[e] = f;
                    } else if emap[e] != f {
                        return None;
                    }
                    let x = g.across(v, a).unwrap();
                    let y = h.across(w, b).unwrap();
                    if vmap[x] == usize::MAX && vinv[y] == usize::MAX {
                        vmap[x] = y;
                        vinv[y] = x;
                        stack.push((x, y));
                    } else if vmap[x] != y || vinv[y] != x {
                        return None;
                    }
                }
                _ => return None,
            }
        }
    }
    if vmap.contains(&usize::MAX) || emap.contains(&usize::MAX) {
        return None;
    }
    let mut seen = vec![false; h.edges.len()];
    for (e, &f) in emap.iter().enumerate() {
        if seen[f] || (vmap[g.edges[e].0], vmap[g.edges[e].1]) != h.edges[f] {
            return None;
        }
        seen[f] = true;
    }
    Some(GraphIso {
        vertex_map: vmap,
        edge_map: emap,
        input_map: (0..g.inputs.len()).collect(),
        output_map: (0..g.outputs.len()).collect(),
    })
}

/// Some isomorphism `g -> h` preserving incidence, leg orders and per-vertex orders.
pub fn find_isomorphism(g: &IodaGraph, h: &IodaGraph) -> Option<GraphIso> {
    if g.vertex_count != h.vertex_count
        || g.edges.len() != h.edges.len()
        || g.arity() != h.arity()
        || g.vertex_count == 0
    {
        return None;
    }
    match (g.root_vertex(), h.root_vertex()) {
        (Some(v), Some(w)) => propagate(g, h, v, w),
        _ => (0..h.vertex_count).find_map(|w| propagate(g, h, 0, w)),
    }
}

/// All automorphisms in the given mode. The io condition is not required,
/// so legless graphs can be examined too.
pub fn automorphism_group(g: &VertexOrderedIodaGraph, mode: Mode) -> Result<Vec<GraphIso>, GraphError> {
    let base = &g.base;
    let d = base.structural_diagnostics();
    if !d.is_empty() {
        return Err(GraphError::Invalid(d));
    }
    let mut pos = vec![usize::MAX; base.vertex_count];
    for (i, &v) in g.vertex_order.iter().enumerate() {
        if v >= base.vertex_count || pos[v] != usize::MAX {
            return Err(GraphError::BadSubgraph);
        }
        pos[v] = i;
    }
    if pos.contains(&usize::MAX) {
        return Err(GraphError::BadSubgraph);
    }
    let candidates: Vec<usize> = match base.root_vertex() {
        Some(r) => vec![r],
        None => (0..base.vertex_count).collect(),
    };
    let seed = base.root_vertex().unwrap_or(0);
    let mut out = Vec::new();
    for w in candidates {
        if let Some(iso) = propagate(base, base, seed, w) {
            let keep = match mode {
                Mode::UnorderedVertex => true,
                Mode::Ordered => iso.vertex_map.iter().enumerate().all(|(v, &w)| pos[v] == pos[w]),
            };
            if keep {
                out.push(iso);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corolla_has_trivial_group() {
        for mode in [Mode::Ordered, Mode::UnorderedVertex] {
            let g = VertexOrderedIodaGraph::natural(IodaGraph::corolla(2, 1));
            let auts = automorphism_group(&g, mode).unwrap();
            assert_eq!(auts.len(), 1);
            assert!(auts[0].is_identity());
        }
    }
}
