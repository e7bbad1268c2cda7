use crate::json::{format_weight, Document};
use free_properad::{decompose, HasArity, Label, LabeledGraph, Nested};
use graph_core::{IodaGraph, Item};
use std::fmt::Write;
use surface_properads::SurfaceType;

const LEVEL_COLORS: [&str; 6] = ["firebrick", "royalblue", "darkgreen", "darkorange", "purple", "gray40"];

/// Short text shown inside a vertex.
pub trait Caption {
    fn caption(&self) -> String;
}

impl Caption for Label {
    fn caption(&self) -> String {
        format!("x{} {:?}", self.id, self.arity)
    }
}

impl<L: Caption> Caption for LabeledGraph<L> {
    fn caption(&self) -> String {
        let inner: Vec<String> = self.labels.iter().map(Caption::caption).collect();
        format!("[{}]", inner.join(", "))
    }
}

impl Caption for SurfaceType {
    fn caption(&self) -> String {
        let genera: Vec<String> = self.genera.iter().map(|g| g.to_string()).collect();
        let mut s = format!("g={} {:?}", genera.join("+"), self.arity());
        if !self.nodes.is_empty() {
            write!(s, " nodes={}", self.nodes.len()).unwrap();
        }
        if !self.marks.is_empty() {
            let ws: Vec<String> = self.marks.iter().map(|(_, w)| format_weight(w)).collect();
            write!(s, " marks={}", ws.join(",")).unwrap();
        }
        if self.unit {
            s.push_str(" unit");
        }
        s
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn slot(order: &[Item], item: Item) -> usize {
    order.iter().position(|&i| i == item).expect("item is in the order")
}

/// Edges, leg stubs and the ranks that put inputs on top; vertices are
/// written by the caller.
fn body(out: &mut String, g: &IodaGraph, indent: &str) {
    for (k, &v) in g.inputs.iter().enumerate() {
        writeln!(out, "{indent}in{k} [shape=point, xlabel=\"in {k}\"];").unwrap();
        writeln!(out, "{indent}in{k} -> v{v} [headlabel=\"{}\"];", slot(&g.in_order[v], Item::In(k))).unwrap();
    }
    for (k, &v) in g.outputs.iter().enumerate() {
        writeln!(out, "{indent}out{k} [shape=point, xlabel=\"out {k}\"];").unwrap();
        writeln!(out, "{indent}v{v} -> out{k} [taillabel=\"{}\"];", slot(&g.out_order[v], Item::Out(k))).unwrap();
    }
    for (e, &(s, t)) in g.edges.iter().enumerate() {
        let (tail, head) = (slot(&g.out_order[s], Item::Edge(e)), slot(&g.in_order[t], Item::Edge(e)));
        writeln!(out, "{indent}v{s} -> v{t} [label=\"e{e}\", taillabel=\"{tail}\", headlabel=\"{head}\"];").unwrap();
    }
    let stubs = |prefix: &str, n: usize| (0..n).map(|k| format!("{prefix}{k}")).collect::<Vec<_>>().join("; ");
    if !g.inputs.is_empty() {
        writeln!(out, "{indent}{{ rank=source; {}; }}", stubs("in", g.inputs.len())).unwrap();
    }
    if !g.outputs.is_empty() {
        writeln!(out, "{indent}{{ rank=sink; {}; }}", stubs("out", g.outputs.len())).unwrap();
    }
}

pub fn graph_dot(g: &IodaGraph) -> String {
    let mut out = String::from("digraph ioda {\n  rankdir=TB;\n  node [shape=circle];\n");
    for v in 0..g.vertex_count {
        writeln!(out, "  v{v} [label=\"{v}\"];").unwrap();
    }
    body(&mut out, g, "  ");
    out.push_str("}\n");
    out
}

/// The full flattening, with one cluster per vertex of every outer level.
pub fn nested_dot<L: Caption + HasArity + Clone>(x: &Nested<L>) -> String {
    let mut out = String::from("digraph nested {\n  rankdir=TB;\n  compound=true;\n  node [shape=box];\n");
    let chain = match x {
        Nested::Leaf(l) => {
            writeln!(out, "  v0 [label={}];", quote(&l.caption())).unwrap();
            out.push_str("}\n");
            return out;
        }
        Nested::Graph(_) => decompose(x).expect("valid nested value"),
    };
    let depth = chain.depth();
    let mut counter = 0;
    let all: Vec<usize> = (0..chain.flat.shape.vertex_count).collect();
    emit_level(&mut out, &chain.levels, &chain.flat.labels, 0, depth, &all, "  ", &mut counter);
    body(&mut out, &chain.flat.shape, "  ");
    out.push_str("}\n");
    out
}

#[allow(clippy::too_many_arguments)]
fn emit_level<L: Caption>(
    out: &mut String,
    levels: &[Vec<Vec<usize>>],
    labels: &[L],
    level: usize,
    depth: usize,
    within: &[usize],
    indent: &str,
    counter: &mut usize,
) {
    if level + 1 >= depth {
        for &v in within {
            writeln!(out, "{indent}v{v} [label={}];", quote(&labels[v].caption())).unwrap();
        }
        return;
    }
    let color = LEVEL_COLORS[level % LEVEL_COLORS.len()];
    for h in levels[level].iter().filter(|h| h.iter().all(|v| within.contains(v))) {
        writeln!(out, "{indent}subgraph cluster_{} {{", *counter).unwrap();
        *counter += 1;
        writeln!(out, "{indent}  style=rounded; color={color}; label=\"level {level}\";").unwrap();
        emit_level(out, levels, labels, level + 1, depth, h, &format!("{indent}  "), counter);
        writeln!(out, "{indent}}}").unwrap();
    }
}

/// The dual graph: one vertex per component, one undirected edge per
/// node, boundary stubs with inputs on top.
pub fn surface_dot(s: &SurfaceType) -> String {
    let mut out = String::from("graph surface {\n  rankdir=TB;\n  node [shape=circle];\n");
    for (c, g) in s.genera.iter().enumerate() {
        let marks: Vec<String> = s.marks.iter().filter(|m| m.0 == c).map(|(_, w)| format_weight(w)).collect();
        let mut label = format!("g={g}");
        if !marks.is_empty() {
            write!(label, "\\n{}", marks.join(" ")).unwrap();
        }
        writeln!(out, "  c{c} [label=\"{label}\"];").unwrap();
    }
    for (n, &(a, b)) in s.nodes.iter().enumerate() {
        writeln!(out, "  c{a} -- c{b} [style=dashed, label=\"node {n}\"];").unwrap();
    }
    for (k, &c) in s.inputs.iter().enumerate() {
        writeln!(out, "  in{k} [shape=point, xlabel=\"in {k}\"];\n  in{k} -- c{c};").unwrap();
    }
    for (k, &c) in s.outputs.iter().enumerate() {
        writeln!(out, "  out{k} [shape=point, xlabel=\"out {k}\"];\n  c{c} -- out{k};").unwrap();
    }
    if !s.inputs.is_empty() {
        let stubs: Vec<String> = (0..s.inputs.len()).map(|k| format!("in{k}")).collect();
        writeln!(out, "  {{ rank=source; {}; }}", stubs.join("; ")).unwrap();
    }
    if !s.outputs.is_empty() {
        let stubs: Vec<String> = (0..s.outputs.len()).map(|k| format!("out{k}")).collect();
        writeln!(out, "  {{ rank=sink; {}; }}", stubs.join("; ")).unwrap();
    }
    if s.unit {
        out.push_str("  label=\"unit\";\n");
    }
    out.push_str("}\n");
    out
}

/// DOT for the documents that have a picture.
pub fn emit_dot(doc: &Document) -> Option<String> {
    match doc {
        Document::IodaGraph(g) => Some(graph_dot(g)),
        Document::LabeledGraph(g) => Some(nested_dot(&Nested::Graph(g.map(|l| Nested::Leaf(*l))))),
        Document::NestedGraph(x) => Some(nested_dot(x)),
        Document::FreeSimplex(x) => Some(nested_dot(x)),
        Document::SurfaceType(s) => Some(surface_dot(s)),
        Document::SurfaceSimplex(x) => Some(nested_dot(x)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corolla_has_one_vertex_and_stubs() {
        let d = graph_dot(&IodaGraph::corolla(2, 1));
        assert_eq!(d.matches("[label=").count(), 1);
        assert!(d.contains("in1 -> v0") && d.contains("v0 -> out0"));
        assert!(d.contains("rank=source; in0; in1;"));
    }

    #[test]
    fn nodal_annulus_is_two_spheres_and_a_node() {
        let d = surface_dot(&SurfaceType::nodal_annulus());
        assert!(d.contains("c0 [label=\"g=0\"]") && d.contains("c1 [label=\"g=0\"]"));
        assert_eq!(d.matches(" -- c1 [style=dashed").count(), 1);
    }
}
