use crate::SurfaceType;
use free_properad::LabeledGraph;
use graph_core::{IodaGraph, Item};

/// Cut `s` around every node. Vertex `c` is component `c` with one extra
/// input circle per node half, after its own inputs; vertex
/// `components + j` is a nodal annulus for node `j` whose two outputs feed
/// the two halves. A smooth type gives its own corolla.
pub fn node_cut(s: &SurfaceType) -> LabeledGraph<SurfaceType> {
    let n = s.component_count();
    if s.nodes.is_empty() {
        return LabeledGraph::corolla(s.clone()).expect("valid types have legs");
    }
    let total = n + s.nodes.len();
    let mut g = IodaGraph {
        vertex_count: total,
        edges: Vec::new(),
        inputs: s.inputs.clone(),
        outputs: s.outputs.clone(),
        in_order: vec![Vec::new(); total],
        out_order: vec![Vec::new(); total],
    };
    for (k, &c) in s.inputs.iter().enumerate() {
        g.in_order[c].push(Item::In(k));
    }
    for (k, &c) in s.outputs.iter().enumerate() {
        g.out_order[c].push(Item::Out(k));
    }
    for (j, &(a, b)) in s.nodes.iter().enumerate() {
        for c in [a, b] {
            let e = g.edges.len();
            g.edges.push((n + j, c));
            g.out_order[n + j].push(Item::Edge(e));
            g.in_order[c].push(Item::Edge(e));
        }
    }
    let mut labels: Vec<SurfaceType> = (0..n)
        .map(|c| {
            let (a, b) = (g.in_order[c].len(), g.out_order[c].len());
            let marks = s.marks.iter().filter(|m| m.0 == c).map(|m| (0, m.1));
            SurfaceType::smooth(s.genera[c], a, b).with_marks(marks).canonical()
        })
        .collect();
    labels.extend(std::iter::repeat(SurfaceType::nodal_annulus()).take(s.nodes.len()));
    LabeledGraph { shape: g, labels }
}
