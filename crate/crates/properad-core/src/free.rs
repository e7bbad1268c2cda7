use crate::{Mark, PortGraph, Properad, ProperadError};
use free_properad::{substitute_labeled, IoSequence, Label, LabeledGraph};
use graph_core::Item;

/// The free properad on a finite alphabet: elements are labeled graphs in
/// canonical form, composed by substitution.
#[derive(Clone, Debug)]
pub struct FreeProperad {
    pub generators: IoSequence,
}

impl FreeProperad {
    pub fn new(generators: IoSequence) -> Self {
        FreeProperad { generators }
    }

    /// The generator `l` as an element.
    pub fn generator(&self, l: Label) -> LabeledGraph<Label> {
        LabeledGraph::corolla(l).expect("alphabet has no (0,0) labels")
    }
}

impl Properad for FreeProperad {
    type Elem = LabeledGraph<Label>;

    fn name(&self) -> String {
        "free".into()
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        x.shape.validate().is_empty()
            && x.check_labels().is_ok()
            && x.labels.iter().all(|l| self.generators.contains(l))
            && x.canonical() == *x
    }

    fn evaluate(&self, g: &LabeledGraph<Self::Elem>) -> Result<Self::Elem, ProperadError> {
        let parts: Vec<&LabeledGraph<Label>> = g.labels.iter().collect();
        let (flat, _) = substitute_labeled(&g.shape, &parts)?;
        Ok(flat.canonical())
    }

    fn expand(&self, x: &Self::Elem) -> Option<LabeledGraph<Self::Elem>> {
        (x.shape.vertex_count >= 2).then(|| x.map(|&l| self.generator(l)))
    }

    fn port_graph(&self, x: &Self::Elem) -> PortGraph<Self::Elem> {
        let t = &x.shape;
        let mut g = PortGraph { colors: Vec::new(), adj: Vec::new(), inputs: Vec::new(), outputs: Vec::new() };
        let mut slots = Vec::with_capacity(t.vertex_count);
        for (v, l) in x.labels.iter().enumerate() {
            let n = g.add(Mark::Tag(vec![0, l.arity.0 as i64, l.arity.1 as i64, i64::from(l.id)]));
            let ins: Vec<usize> = (0..t.in_order[v].len()).map(|i| g.add(Mark::Tag(vec![1, i as i64]))).collect();
            let outs: Vec<usize> = (0..t.out_order[v].len()).map(|o| g.add(Mark::Tag(vec![2, o as i64]))).collect();
            for &q in ins.iter().chain(&outs) {
                g.link(n, q);
            }
            slots.push((ins, outs));
        }
        for e in 0..t.edges.len() {
            let (s, i) = t.out_slot(Item::Edge(e));
            let (u, j) = t.in_slot(Item::Edge(e));
            g.link(slots[s].1[i], slots[u].0[j]);
        }
        for k in 0..t.inputs.len() {
            let (v, j) = t.in_slot(Item::In(k));
            let q = g.add(Mark::Tag(vec![3]));
            g.link(q, slots[v].0[j]);
            g.inputs.push(q);
        }
        for k in 0..t.outputs.len() {
            let (v, j) = t.out_slot(Item::Out(k));
            let q = g.add(Mark::Tag(vec![4]));
            g.link(q, slots[v].1[j]);
            g.outputs.push(q);
        }
        g
    }
}
