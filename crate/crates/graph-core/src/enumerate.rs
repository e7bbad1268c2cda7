use crate::canon::encode;
use crate::{Arity, IodaGraph, Item};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Bound on the total number of legs.
    pub max_legs: usize,
}

/// One canonical representative per isomorphism class of ioda-graphs of
/// arity `(n_minus, n_plus)` within the bounds, sorted by canonical key.
/// `arity_filter` restricts the admissible vertex arities.
///
/// Graphs are grown directly in canonical form: vertices are processed in
/// breadth-first order from the root, and each new edge or vertex takes the
/// next free index, so every class is produced exactly once.
pub fn enumerate(
    n_minus: usize,
    n_plus: usize,
    max_vertices: usize,
    max_edges: usize,
    arity_filter: Option<&dyn Fn(Arity) -> bool>,
) -> Vec<IodaGraph> {
    let mut found = BTreeMap::new();
    for_each_graph(n_minus, n_plus, max_vertices, max_edges, arity_filter, &mut |g| {
        found.insert(encode(&g), g);
    });
    found.into_values().collect()
}

/// Streaming form of [`enumerate`]: visits each canonical representative
/// once, in generation order rather than key order.
pub fn for_each_graph(
    n_minus: usize,
    n_plus: usize,
    max_vertices: usize,
    max_edges: usize,
    arity_filter: Option<&dyn Fn(Arity) -> bool>,
    visit: &mut dyn FnMut(IodaGraph),
) {
    if n_minus + n_plus == 0 || max_vertices == 0 {
        return;
    }
    Grow::new(n_minus, n_plus, max_vertices, max_edges, arity_filter).fill_in(0, visit);
}

struct Grow<'a> {
    max_v: usize,
    max_e: usize,
    filter: Option<&'a dyn Fn(Arity) -> bool>,
    nv: usize,
    edges: Vec<(usize, usize)>,
    in_order: Vec<Vec<Item>>,
    out_order: Vec<Vec<Item>>,
    pending_in: Vec<Vec<usize>>,
    pending_out: Vec<Vec<usize>>,
    inputs: Vec<usize>,
    outputs: Vec<usize>,
}

const UNUSED: usize = usize::MAX;

impl<'a> Grow<'a> {
    fn new(n_in: usize, n_out: usize, max_v: usize, max_e: usize, filter: Option<&'a dyn Fn(Arity) -> bool>) -> Self {
        Grow {
            max_v,
            max_e,
            filter,
            nv: 1,
            edges: Vec::new(),
            in_order: vec![Vec::new()],
            out_order: vec![Vec::new()],
            pending_in: vec![Vec::new()],
            pending_out: vec![Vec::new()],
            inputs: vec![UNUSED; n_in],
            outputs: vec![UNUSED; n_out],
        }
    }

    fn reaches(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.nv];
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            if !std::mem::replace(&mut seen[v], true) {
                stack.extend(self.edges.iter().filter(|e| e.0 == v).map(|e| e.1));
            }
        }
        false
    }

    fn add_vertex(&mut self) -> usize {
        self.nv += 1;
        self.in_order.push(Vec::new());
        self.out_order.push(Vec::new());
        self.pending_in.push(Vec::new());
        self.pending_out.push(Vec::new());
        self.nv - 1
    }

    fn drop_vertex(&mut self) {
        self.nv -= 1;
        self.in_order.pop();
        self.out_order.pop();
        self.pending_in.pop();
        self.pending_out.pop();
    }

    /// Try `src -> dst` as a new edge, recursing via `next` when acyclic.
    fn with_edge(&mut self, src: usize, dst: usize, incoming: bool, w: usize, visit: &mut dyn FnMut(IodaGraph)) {
        if self.reaches(dst, src) {
            return;
        }
        let e = self.edges.len();
        self.edges.push((src, dst));
        if incoming {
            self.pending_out[src].push(e);
            self.in_order[w].push(Item::Edge(e));
            self.fill_in(w, visit);
            self.in_order[w].pop();
            self.pending_out[src].pop();
        } else {
            self.pending_in[dst].push(e);
            self.out_order[w].push(Item::Edge(e));
            self.fill_out(w, visit);
            self.out_order[w].pop();
            self.pending_in[dst].pop();
        }
        self.edges.pop();
    }

    fn fill_in(&mut self, w: usize, visit: &mut dyn FnMut(IodaGraph)) {
        let placed = |g: &Self, e: usize| g.in_order[w].contains(&Item::Edge(e));
        if self.pending_in[w].iter().all(|&e| placed(self, e)) {
            self.fill_out(w, visit);
        }
        for i in 0..self.pending_in[w].len() {
            let e = self.pending_in[w][i];
            if !placed(self, e) {
                self.in_order[w].push(Item::Edge(e));
                self.fill_in(w, visit);
                self.in_order[w].pop();
            }
        }
        for k in 0..self.inputs.len() {
            if self.inputs[k] == UNUSED {
                self.inputs[k] = w;
                self.in_order[w].push(Item::In(k));
                self.fill_in(w, visit);
                self.in_order[w].pop();
                self.inputs[k] = UNUSED;
            }
        }
        if self.edges.len() < self.max_e {
            for u in w + 1..self.nv {
                self.with_edge(u, w, true, w, visit);
            }
            if self.nv < self.max_v {
                let u = self.add_vertex();
                self.with_edge(u, w, true, w, visit);
                self.drop_vertex();
            }
        }
    }

    fn fill_out(&mut self, w: usize, visit: &mut dyn FnMut(IodaGraph)) {
        let placed = |g: &Self, e: usize| g.out_order[w].contains(&Item::Edge(e));
        if self.pending_out[w].iter().all(|&e| placed(self, e)) {
            self.finish_vertex(w, visit);
        }
        for i in 0..self.pending_out[w].len() {
            let e = self.pending_out[w][i];
            if !placed(self, e) {
                self.out_order[w].push(Item::Edge(e));
                self.fill_out(w, visit);
                self.out_order[w].pop();
            }
        }
        for k in 0..self.outputs.len() {
            if self.outputs[k] == UNUSED {
                self.outputs[k] = w;
                self.out_order[w].push(Item::Out(k));
                self.fill_out(w, visit);
                self.out_order[w].pop();
                self.outputs[k] = UNUSED;
            }
        }
        if self.edges.len() < self.max_e {
            for u in w + 1..self.nv {
                self.with_edge(w, u, false, w, visit);
            }
            if self.nv < self.max_v {
                let u = self.add_vertex();
                self.with_edge(w, u, false, w, visit);
                self.drop_vertex();
            }
        }
    }

    fn finish_vertex(&mut self, w: usize, visit: &mut dyn FnMut(IodaGraph)) {
        let a = (self.in_order[w].len(), self.out_order[w].len());
        if a == (0, 0) || self.filter.is_some_and(|f| !f(a)) {
            return;
        }
        // the root carries input 0, or output 0 when there are no inputs
        if w == 0 {
            let rooted = if self.inputs.is_empty() { self.outputs[0] == 0 } else { self.inputs[0] == 0 };
            if !rooted {
                return;
            }
        }
        if w + 1 < self.nv {
            self.fill_in(w + 1, visit);
        } else if !self.inputs.contains(&UNUSED) && !self.outputs.contains(&UNUSED) {
            visit(IodaGraph {
                vertex_count: self.nv,
                edges: self.edges.clone(),
                inputs: self.inputs.clone(),
                outputs: self.outputs.clone(),
                in_order: self.in_order.clone(),
                out_order: self.out_order.clone(),
            });
        }
    }
}

/// All ioda-graphs within the bounds, over every arity with at least one leg.
pub fn enumerate_bounded(b: EnumerationBounds) -> Vec<IodaGraph> {
    let mut out = Vec::new();
    for legs in 1..=b.max_legs {
        for n_minus in 0..=legs {
            out.extend(enumerate(n_minus, legs - n_minus, b.max_vertices, b.max_edges, None));
        }
    }
    out
}

/// Streaming form of [`enumerate_bounded`].
pub fn for_each_bounded(b: EnumerationBounds, visit: &mut dyn FnMut(IodaGraph)) {
    for legs in 1..=b.max_legs {
        for n_minus in 0..=legs {
            for_each_graph(n_minus, legs - n_minus, b.max_vertices, b.max_edges, None, visit);
        }
    }
}

/// Connected acyclic legless graphs with exactly `vertices` vertices, one per
/// isomorphism class. These violate the io condition and exist for
/// comparison with genuine ioda-graphs.
pub fn enumerate_legless(vertices: usize, max_edges: usize) -> Vec<IodaGraph> {
    let mut found = BTreeMap::new();
    generate(vertices, max_edges, 0, 0, None, &mut |g| {
        let c = g.canonical();
        found.entry(encode(&c)).or_insert(c);
    });
    found.into_values().collect()
}

fn generate(
    nv: usize,
    max_edges: usize,
    n_in: usize,
    n_out: usize,
    filter: Option<&dyn Fn(Arity) -> bool>,
    visit: &mut dyn FnMut(IodaGraph),
) {
    let pairs: Vec<(usize, usize)> =
        (0..nv).flat_map(|i| (i + 1..nv).map(move |j| (i, j))).collect();
    let mut edge_sets = Vec::new();
    multisets(&pairs, max_edges, 0, &mut Vec::new(), &mut edge_sets);
    let ins = sequences(nv, n_in);
    let outs = sequences(nv, n_out);
    for edges in &edge_sets {
        if !connected(nv, edges) {
            continue;
        }
        for inputs in &ins {
            for outputs in &outs {
                let mut in_items = vec![Vec::new(); nv];
                let mut out_items = vec![Vec::new(); nv];
                for (e, &(s, t)) in edges.iter().enumerate() {
                    out_items[s].push(Item::Edge(e));
                    in_items[t].push(Item::Edge(e));
                }
                for (k, &v) in inputs.iter().enumerate() {
                    in_items[v].push(Item::In(k));
                }
                for (k, &v) in outputs.iter().enumerate() {
                    out_items[v].push(Item::Out(k));
                }
                let arity_ok = (0..nv).all(|v| {
                    let a = (in_items[v].len(), out_items[v].len());
                    a != (0, 0) && filter.is_none_or(|f| f(a))
                });
                if !arity_ok {
                    continue;
                }
                let choices: Vec<Vec<Vec<Item>>> = in_items
                    .iter()
                    .chain(out_items.iter())
                    .map(|items| permutations(items))
                    .collect();
                let mut idx = vec![0usize; choices.len()];
                loop {
                    let in_order = (0..nv).map(|v| choices[v][idx[v]].clone()).collect();
                    let out_order = (0..nv).map(|v| choices[nv + v][idx[nv + v]].clone()).collect();
                    visit(IodaGraph {
                        vertex_count: nv,
                        edges: edges.clone(),
                        inputs: inputs.clone(),
                        outputs: outputs.clone(),
                        in_order,
                        out_order,
                    });
                    let mut k = 0;
                    loop {
                        if k == idx.len() {
                            break;
                        }
                        idx[k] += 1;
                        if idx[k] < choices[k].len() {
                            break;
                        }
                        idx[k] = 0;
                        k += 1;
                    }
                    if k == idx.len() {
                        break;
                    }
                }
            }
        }
    }
}

fn multisets(
    pool: &[(usize, usize)],
    max: usize,
    from: usize,
    cur: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    out.push(cur.clone());
    if cur.len() == max {
        return;
    }
    for i in from..pool.len() {
        cur.push(pool[i]);
        multisets(pool, max, i, cur, out);
        cur.pop();
    }
}

fn sequences(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..n).map(move |v| {
                    let mut t = s.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut comps = n;
    for &(s, t) in edges {
        let (a, b) = (find(&mut parent, s), find(&mut parent, t));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps == 1
}

pub(crate) fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x.clone());
            out.push(p);
        }
    }
    out
}
