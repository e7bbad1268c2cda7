use crate::{find_cycle, GraphError, IodaGraph, Item};

/// Result of collapsing a subgraph to a single vertex.
///
/// The new vertex's in-order lists the incoming attachments of the subgraph
/// grouped by subgraph vertex, in the order the subgraph vertices are given,
/// and within a vertex in that vertex's own in-order. Out-orders likewise.
/// `inner` is the subgraph with legs in exactly these orders, so that
/// substituting it back into the new vertex recovers the original graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collapse {
    pub graph: IodaGraph,
    pub new_vertex: usize,
    /// Old vertex to quotient vertex.
    pub vertex_map: Vec<usize>,
    /// Old edge to quotient edge, `None` for edges inside the subgraph.
    pub edge_map: Vec<Option<usize>>,
    pub inner: IodaGraph,
    /// Inner vertex to old vertex.
    pub inner_vertices: Vec<usize>,
    /// Inner edge to old edge.
    pub inner_edges: Vec<usize>,
}

/// Result of substituting graphs into the vertices of an outer graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub graph: IodaGraph,
    /// New vertex to `(outer vertex, inner vertex)`.
    pub vertex_origin: Vec<(usize, usize)>,
    /// First new vertex index belonging to each outer vertex.
    pub offsets: Vec<usize>,
}

fn membership(g: &IodaGraph, h: &[usize]) -> Result<Vec<bool>, GraphError> {
    let mut in_h = vec![false; g.vertex_count];
    if h.is_empty() {
        return Err(GraphError::BadSubgraph);
    }
    for &v in h {
        if v >= g.vertex_count || in_h[v] {
            return Err(GraphError::BadSubgraph);
        }
        in_h[v] = true;
    }
    Ok(in_h)
}

fn check_connected(g: &IodaGraph, h: &[usize], in_h: &[bool]) -> Result<(), GraphError> {
    let mut seen = vec![false; g.vertex_count];
    let mut stack = vec![h[0]];
    seen[h[0]] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &(s, t) in &g.edges {
            let w = if s == v { t } else if t == v { s } else { continue };
            if in_h[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    if count != h.len() {
        return Err(GraphError::DisconnectedSubgraph);
    }
    Ok(())
}

fn quotient_vertices(g: &IodaGraph, in_h: &[bool]) -> (Vec<usize>, usize, usize) {
    let mut vmap = vec![usize::MAX; g.vertex_count];
    let mut next = 0;
    let mut new_vertex = usize::MAX;
    for v in 0..g.vertex_count {
        if in_h[v] {
            if new_vertex == usize::MAX {
                new_vertex = next;
                next += 1;
            }
            vmap[v] = new_vertex;
        } else {
            vmap[v] = next;
            next += 1;
        }
    }
    (vmap, new_vertex, next)
}

/// Ok iff the quotient `g/h` is acyclic and `h` is connected. A cycle is
/// reported first, as a directed cycle of the quotient, each quotient vertex
/// named by an original vertex (the collapsed one by `h[0]`).
pub fn is_collapsible(g: &IodaGraph, h: &[usize]) -> Result<(), GraphError> {
    let in_h = membership(g, h)?;
    let (vmap, new_vertex, n) = quotient_vertices(g, &in_h);
    let edges: Vec<(usize, usize)> = g
        .edges
        .iter()
        .filter(|&&(s, t)| !(in_h[s] && in_h[t]))
        .map(|&(s, t)| (vmap[s], vmap[t]))
        .collect();
    if let Some(c) = find_cycle(n, &edges) {
        let mut back = vec![usize::MAX; n];
        for v in (0..g.vertex_count).rev() {
            back[vmap[v]] = v;
        }
        back[new_vertex] = h[0];
        return Err(GraphError::NotCollapsible(c.into_iter().map(|q| back[q]).collect()));
    }
    check_connected(g, h, &in_h)
}

/// Ok iff `groups` partitions the vertices into connected sets whose
/// simultaneous collapse leaves an acyclic graph.
pub fn check_partition(g: &IodaGraph, groups: &[Vec<usize>]) -> Result<(), GraphError> {
    let mut block = vec![usize::MAX; g.vertex_count];
    for (b, h) in groups.iter().enumerate() {
        let in_h = membership(g, h)?;
        for &v in h {
            if block[v] != usize::MAX {
                return Err(GraphError::BadSubgraph);
            }
            block[v] = b;
        }
        check_connected(g, h, &in_h)?;
    }
    if block.contains(&usize::MAX) {
        return Err(GraphError::BadSubgraph);
    }
    let edges: Vec<(usize, usize)> =
        g.edges.iter().filter(|&&(s, t)| block[s] != block[t]).map(|&(s, t)| (block[s], block[t])).collect();
    match find_cycle(groups.len(), &edges) {
        Some(c) => Err(GraphError::NotCollapsible(c.into_iter().map(|b| groups[b][0]).collect())),
        None => Ok(()),
    }
}

/// Collapse the connected subgraph induced on `h`, whose vertex order fixes
/// the ordering convention described on [`Collapse`].
pub fn collapse(g: &IodaGraph, h: &[usize]) -> Result<Collapse, GraphError> {
    is_collapsible(g, h)?;
    let in_h = membership(g, h)?;
    let (vmap, new_vertex, n) = quotient_vertices(g, &in_h);
    let internal = |e: usize| in_h[g.edges[e].0] && in_h[g.edges[e].1];

    let mut edge_map = vec![None; g.edges.len()];
    let mut edges = Vec::new();
    let mut inner_edge_id = vec![usize::MAX; g.edges.len()];
    let mut inner_edges = Vec::new();
    for (e, &(s, t)) in g.edges.iter().enumerate() {
        if internal(e) {
            inner_edge_id[e] = inner_edges.len();
            inner_edges.push(e);
        } else {
            edge_map[e] = Some(edges.len());
            edges.push((vmap[s], vmap[t]));
        }
    }
    let qitem = |it: Item| match it {
        Item::Edge(e) => Item::Edge(edge_map[e].unwrap()),
        other => other,
    };

    // (item, position in h, position in that vertex's order)
    let mut incoming = Vec::new();
    let mut outgoing = Vec::new();
    for (i, &u) in h.iter().enumerate() {
        for (p, &it) in g.in_order[u].iter().enumerate() {
            if !matches!(it, Item::Edge(e) if internal(e)) {
                incoming.push((it, i, p));
            }
        }
        for (p, &it) in g.out_order[u].iter().enumerate() {
            if !matches!(it, Item::Edge(e) if internal(e)) {
                outgoing.push((it, i, p));
            }
        }
    }

    let mut in_order = vec![Vec::new(); n];
    let mut out_order = vec![Vec::new(); n];
    for v in 0..g.vertex_count {
        if !in_h[v] {
            in_order[vmap[v]] = g.in_order[v].iter().map(|&it| qitem(it)).collect();
            out_order[vmap[v]] = g.out_order[v].iter().map(|&it| qitem(it)).collect();
        }
    }
    in_order[new_vertex] = incoming.iter().map(|&(it, _, _)| qitem(it)).collect();
    out_order[new_vertex] = outgoing.iter().map(|&(it, _, _)| qitem(it)).collect();
    let graph = IodaGraph {
        vertex_count: n,
        edges,
        inputs: g.inputs.iter().map(|&v| vmap[v]).collect(),
        outputs: g.outputs.iter().map(|&v| vmap[v]).collect(),
        in_order,
        out_order,
    };

    // external attachments are overwritten with legs below
    let inner_item = |it: Item| match it {
        Item::Edge(e) if internal(e) => Item::Edge(inner_edge_id[e]),
        other => other,
    };
    let mut local = vec![usize::MAX; g.vertex_count];
    for (i, &u) in h.iter().enumerate() {
        local[u] = i;
    }
    let mut inner_in_order: Vec<Vec<Item>> =
        h.iter().map(|&u| g.in_order[u].iter().map(|&it| inner_item(it)).collect()).collect();
    let mut inner_out_order: Vec<Vec<Item>> =
        h.iter().map(|&u| g.out_order[u].iter().map(|&it| inner_item(it)).collect()).collect();
    let mut inner_inputs = Vec::new();
    let mut inner_outputs = Vec::new();
    for (j, &(_, i, p)) in incoming.iter().enumerate() {
        inner_in_order[i][p] = Item::In(j);
        inner_inputs.push(i);
    }
    for (j, &(_, i, p)) in outgoing.iter().enumerate() {
        inner_out_order[i][p] = Item::Out(j);
        inner_outputs.push(i);
    }
    let inner = IodaGraph {
        vertex_count: h.len(),
        edges: inner_edges.iter().map(|&e| (local[g.edges[e].0], local[g.edges[e].1])).collect(),
        inputs: inner_inputs,
        outputs: inner_outputs,
        in_order: inner_in_order,
        out_order: inner_out_order,
    };
    Ok(Collapse {
        graph,
        new_vertex,
        vertex_map: vmap,
        edge_map,
        inner,
        inner_vertices: h.to_vec(),
        inner_edges,
    })
}

/// Collapse a vertex set, ordering it by canonical traversal rank in `g`.
pub fn collapse_set(g: &IodaGraph, h: &[usize]) -> Result<Collapse, GraphError> {
    let rank = g.canonical_form().vertex_map;
    let mut h = h.to_vec();
    h.sort_by_key(|&v| rank.get(v).copied().unwrap_or(usize::MAX));
    collapse(g, &h)
}

/// Graph substitution: replace each vertex `v` of `outer` by `inners[v]`,
/// matching the legs of `inners[v]` with the items of `v` in order.
pub fn substitute(outer: &IodaGraph, inners: &[&IodaGraph]) -> Result<Substitution, GraphError> {
    if inners.len() != outer.vertex_count {
        return Err(GraphError::BadSubgraph);
    }
    for (v, h) in inners.iter().enumerate() {
        if h.arity() != outer.vertex_arity(v) {
            return Err(GraphError::ArityMismatch { vertex: v, expected: outer.vertex_arity(v), found: h.arity() });
        }
    }
    let mut offsets = Vec::with_capacity(inners.len());
    let mut vertex_origin = Vec::new();
    let mut inner_edge_base = Vec::with_capacity(inners.len());
    let mut edge_count = 0;
    for (v, h) in inners.iter().enumerate() {
        offsets.push(vertex_origin.len());
        vertex_origin.extend((0..h.vertex_count).map(|u| (v, u)));
        inner_edge_base.push(edge_count);
        edge_count += h.edges.len();
    }
    let outer_edge_base = edge_count;
    let mut edges = Vec::with_capacity(edge_count + outer.edges.len());
    for (v, h) in inners.iter().enumerate() {
        edges.extend(h.edges.iter().map(|&(s, t)| (offsets[v] + s, offsets[v] + t)));
    }
    for (e, &(s, t)) in outer.edges.iter().enumerate() {
        let (_, p) = outer.out_slot(Item::Edge(e));
        let (_, q) = outer.in_slot(Item::Edge(e));
        edges.push((offsets[s] + inners[s].outputs[p], offsets[t] + inners[t].inputs[q]));
    }
    let outer_item = |it: Item| match it {
        Item::Edge(e) => Item::Edge(outer_edge_base + e),
        other => other,
    };
    let n = vertex_origin.len();
    let mut in_order = Vec::with_capacity(n);
    let mut out_order = Vec::with_capacity(n);
    for (v, h) in inners.iter().enumerate() {
        for u in 0..h.vertex_count {
            in_order.push(
                h.in_order[u]
                    .iter()
                    .map(|&it| match it {
                        Item::Edge(ie) => Item::Edge(inner_edge_base[v] + ie),
                        Item::In(q) => outer_item(outer.in_order[v][q]),
                        Item::Out(_) => unreachable!(),
                    })
                    .collect(),
            );
            out_order.push(
                h.out_order[u]
                    .iter()
                    .map(|&it| match it {
                        Item::Edge(ie) => Item::Edge(inner_edge_base[v] + ie),
                        Item::Out(p) => outer_item(outer.out_order[v][p]),
                        Item::In(_) => unreachable!(),
                    })
                    .collect(),
            );
        }
    }
    let inputs = outer
        .inputs
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let (_, q) = outer.in_slot(Item::In(k));
            offsets[v] + inners[v].inputs[q]
        })
        .collect();
    let outputs = outer
        .outputs
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let (_, p) = outer.out_slot(Item::Out(k));
            offsets[v] + inners[v].outputs[p]
        })
        .collect();
    Ok(Substitution {
        graph: IodaGraph { vertex_count: n, edges, inputs, outputs, in_order, out_order },
        vertex_origin,
        offsets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> IodaGraph {
        IodaGraph {
            vertex_count: 3,
            edges: vec![(0, 1), (1, 2)],
            inputs: vec![0],
            outputs: vec![2],
            in_order: vec![vec![Item::In(0)], vec![Item::Edge(0)], vec![Item::Edge(1)]],
            out_order: vec![vec![Item::Edge(0)], vec![Item::Edge(1)], vec![Item::Out(0)]],
        }
    }

    #[test]
    fn chain_ends_not_collapsible() {
        match is_collapsible(&chain3(), &[0, 2]) {
            Err(GraphError::NotCollapsible(c)) => assert!(c.contains(&1), "{c:?}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn total_collapse_is_corolla() {
        let c = collapse(&chain3(), &[0, 1, 2]).unwrap();
        assert_eq!(c.graph, IodaGraph::corolla(1, 1));
    }

    #[test]
    fn partition_of_chain_ends_rejected() {
        assert!(check_partition(&chain3(), &[vec![0, 2], vec![1]]).is_err());
        assert!(check_partition(&chain3(), &[vec![0, 1], vec![2]]).is_ok());
        assert!(check_partition(&chain3(), &[vec![0, 1]]).is_err());
    }

    #[test]
    fn substitute_inverts_collapse() {
        let g = chain3();
        let c = collapse(&g, &[1, 2]).unwrap();
        let corolla = IodaGraph::corolla(1, 1);
        let parts: Vec<&IodaGraph> =
            (0..c.graph.vertex_count).map(|v| if v == c.new_vertex { &c.inner } else { &corolla }).collect();
        let s = substitute(&c.graph, &parts).unwrap();
        assert_eq!(s.graph.canonical(), g.canonical());
    }
}
