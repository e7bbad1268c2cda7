use crate::{act_sigma, Properad, ProperadError};
use free_properad::{assemble, decompose, Chain, LabeledGraph, Nested};
use graph_core::{canonical_labeling, IodaGraph, Item};

/// Color of a port-graph vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mark<E> {
    Tag(Vec<i64>),
    Elem(E),
}

/// An element seen up to the order of its legs: a colored graph with one
/// vertex per leg. Elements that differ by a leg permutation have port
/// graphs that are isomorphic by a map taking input `k` to input `σ(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PortGraph<E> {
    pub colors: Vec<Mark<E>>,
    pub adj: Vec<Vec<usize>>,
    pub inputs: Vec<usize>,
    pub outputs: Vec<usize>,
}

impl<E: Clone> PortGraph<E> {
    /// The element as an opaque body whose legs keep their positions.
    pub fn rigid(x: &E, arity: (usize, usize)) -> Self {
        let mut g = PortGraph { colors: vec![Mark::Elem(x.clone())], adj: vec![vec![]], inputs: vec![], outputs: vec![] };
        for k in 0..arity.0 {
            let p = g.add(Mark::Tag(vec![-1, k as i64]));
            g.link(0, p);
            g.inputs.push(p);
        }
        for k in 0..arity.1 {
            let p = g.add(Mark::Tag(vec![-2, k as i64]));
            g.link(0, p);
            g.outputs.push(p);
        }
        g
    }

    pub fn add(&mut self, c: Mark<E>) -> usize {
        self.colors.push(c);
        self.adj.push(Vec::new());
        self.colors.len() - 1
    }

    pub fn link(&mut self, a: usize, b: usize) {
        self.adj[a].push(b);
        self.adj[b].push(a);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Node<E> {
    Vertex,
    Port(Mark<E>),
    Edge,
    Input(usize),
    Output(usize),
    Group(usize),
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (j, &k) in p.iter().enumerate() {
        q[k] = j;
    }
    q
}

/// Canonical representative of a nested value up to renumbering at every
/// level and the symmetric action on its labels: the flattening, its
/// nesting and the port graphs of the labels are labeled canonically
/// together, each label's legs are put in the order of its ports, and the
/// nesting is rebuilt.
pub fn normal_form<P: Properad>(p: &P, x: &Nested<P::Elem>) -> Result<Nested<P::Elem>, ProperadError> {
    if x.as_leaf().is_some() {
        return Ok(x.clone());
    }
    let ch = decompose(x)?;
    let t = &ch.flat.shape;
    let mut colors: Vec<Node<P::Elem>> = Vec::new();
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut add = |colors: &mut Vec<Node<P::Elem>>, c| {
        colors.push(c);
        adj.push(Vec::new());
        colors.len() - 1
    };
    let mut vertex_node = Vec::with_capacity(t.vertex_count);
    let mut ports = Vec::with_capacity(t.vertex_count);
    let mut links: Vec<(usize, usize)> = Vec::new();
    for label in &ch.flat.labels {
        let pg = p.port_graph(label);
        let v = add(&mut colors, Node::Vertex);
        let base = colors.len();
        for c in &pg.colors {
            add(&mut colors, Node::Port(c.clone()));
        }
        for (a, ns) in pg.adj.iter().enumerate() {
            links.extend(ns.iter().filter(|&&b| a < b).map(|&b| (base + a, base + b)));
        }
        let ins: Vec<usize> = pg.inputs.iter().map(|&q| base + q).collect();
        let outs: Vec<usize> = pg.outputs.iter().map(|&q| base + q).collect();
        links.extend(ins.iter().chain(&outs).map(|&q| (v, q)));
        vertex_node.push(v);
        ports.push((ins, outs));
    }
    let mut edge_node = Vec::with_capacity(t.edges.len());
    for e in 0..t.edges.len() {
        let n = add(&mut colors, Node::Edge);
        let (s, i) = t.out_slot(Item::Edge(e));
        let (u, j) = t.in_slot(Item::Edge(e));
        links.push((n, ports[s].1[i]));
        links.push((n, ports[u].0[j]));
        edge_node.push(n);
    }
    for k in 0..t.inputs.len() {
        let n = add(&mut colors, Node::Input(k));
        let (v, j) = t.in_slot(Item::In(k));
        links.push((n, ports[v].0[j]));
    }
    for k in 0..t.outputs.len() {
        let n = add(&mut colors, Node::Output(k));
        let (v, j) = t.out_slot(Item::Out(k));
        links.push((n, ports[v].1[j]));
    }
    for (level, groups) in ch.levels.iter().enumerate().take(ch.depth() - 1) {
        for h in groups {
            let n = add(&mut colors, Node::Group(level));
            links.extend(h.iter().map(|&v| (n, vertex_node[v])));
        }
    }
    for (a, b) in links {
        adj[a].push(b);
        adj[b].push(a);
    }
    let lab = canonical_labeling(&colors, &adj);

    let mut vorder: Vec<usize> = (0..t.vertex_count).collect();
    vorder.sort_by_key(|&v| lab[vertex_node[v]]);
    let vnew = inverse(&vorder);
    let mut eorder: Vec<usize> = (0..t.edges.len()).collect();
    eorder.sort_by_key(|&e| lab[edge_node[e]]);
    let enew = inverse(&eorder);
    let rename = |item: Item| match item {
        Item::Edge(e) => Item::Edge(enew[e]),
        other => other,
    };
    let mut shape = IodaGraph {
        vertex_count: t.vertex_count,
        edges: eorder.iter().map(|&e| (vnew[t.edges[e].0], vnew[t.edges[e].1])).collect(),
        inputs: t.inputs.iter().map(|&v| vnew[v]).collect(),
        outputs: t.outputs.iter().map(|&v| vnew[v]).collect(),
        in_order: vec![Vec::new(); t.vertex_count],
        out_order: vec![Vec::new(); t.vertex_count],
    };
    let mut labels = Vec::with_capacity(t.vertex_count);
    for &v in &vorder {
        let (ins, outs) = &ports[v];
        let mut si: Vec<usize> = (0..ins.len()).collect();
        si.sort_by_key(|&k| lab[ins[k]]);
        let mut so: Vec<usize> = (0..outs.len()).collect();
        so.sort_by_key(|&k| lab[outs[k]]);
        shape.in_order[vnew[v]] = si.iter().map(|&k| rename(t.in_order[v][k])).collect();
        shape.out_order[vnew[v]] = so.iter().map(|&k| rename(t.out_order[v][k])).collect();
        labels.push(act_sigma(p, &ch.flat.labels[v], &inverse(&si), &inverse(&so))?);
    }
    let levels = ch
        .levels
        .iter()
        .map(|groups| {
            let mut gs: Vec<Vec<usize>> = groups
                .iter()
                .map(|h| {
                    let mut h: Vec<usize> = h.iter().map(|&v| vnew[v]).collect();
                    h.sort_unstable();
                    h
                })
                .collect();
            gs.sort();
            gs
        })
        .collect();
    Ok(assemble(&Chain { flat: LabeledGraph { shape, labels }, levels })?)
}
