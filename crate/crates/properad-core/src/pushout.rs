use crate::{bidirectional_search, Properad, ProperadError, Verdict};
use free_properad::{substitute_labeled, HasArity, LabeledGraph};
use graph_core::{collapse, Arity};

/// A label from the left or the right properad.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side<A, B> {
    Left(A),
    Right(B),
}

impl<A: HasArity, B: HasArity> HasArity for Side<A, B> {
    fn arity(&self) -> Arity {
        match self {
            Side::Left(a) => a.arity(),
            Side::Right(b) => b.arity(),
        }
    }
}

/// Pushout of `P <- R -> Q`. Elements are graphs labeled by elements of
/// `P` and `Q`, identified by collapsing single-colored subgraphs to their
/// composite and by exchanging `i(r)` with `j(r)`. Elements are stored as
/// canonical representatives; equality of classes is [`PushoutProperad::equal`].
#[derive(Clone, Debug)]
pub struct PushoutProperad<P: Properad, Q: Properad> {
    pub left: P,
    pub right: Q,
    /// Pairs `(i(r), j(r))` for the chosen elements `r` of the apex.
    pub identified: Vec<(P::Elem, Q::Elem)>,
}

pub type Term<P, Q> = LabeledGraph<Side<<P as Properad>::Elem, <Q as Properad>::Elem>>;

/// Build the pushout along `i` and `j`, identifying `i(r)` with `j(r)` for
/// each `r` in `apex_elems`. Both maps are checked to preserve arity on
/// those elements and to commute with evaluation on `samples`.
pub fn pushout_construct<P, R, Q, I, J>(
    left: P,
    apex: &R,
    right: Q,
    i: I,
    j: J,
    apex_elems: &[R::Elem],
    samples: &[LabeledGraph<R::Elem>],
) -> Result<PushoutProperad<P, Q>, ProperadError>
where
    P: Properad,
    R: Properad,
    Q: Properad,
    I: Fn(&R::Elem) -> P::Elem,
    J: Fn(&R::Elem) -> Q::Elem,
{
    for r in apex_elems {
        if i(r).arity() != r.arity() || j(r).arity() != r.arity() {
            return Err(ProperadError::NotAProperadMap(format!("arity not preserved on {r:?}")));
        }
    }
    for g in samples {
        let v = apex.evaluate(g)?;
        if i(&v) != left.evaluate(&g.map(&i))? {
            return Err(ProperadError::NotAProperadMap(format!("left map fails on {g:?}")));
        }
        if j(&v) != right.evaluate(&g.map(&j))? {
            return Err(ProperadError::NotAProperadMap(format!("right map fails on {g:?}")));
        }
    }
    let identified = apex_elems.iter().map(|r| (i(r), j(r))).collect();
    Ok(PushoutProperad { left, right, identified })
}

impl<P: Properad, Q: Properad> PushoutProperad<P, Q> {
    pub fn from_left(&self, p: P::Elem) -> Result<Term<P, Q>, ProperadError> {
        Ok(LabeledGraph::corolla(Side::Left(p))?)
    }

    pub fn from_right(&self, q: Q::Elem) -> Result<Term<P, Q>, ProperadError> {
        Ok(LabeledGraph::corolla(Side::Right(q))?)
    }

    /// Every term one identification step away from `t`.
    pub fn moves(&self, t: &Term<P, Q>) -> Vec<Term<P, Q>> {
        let mut out = Vec::new();
        let n = t.shape.vertex_count;
        if n <= 16 {
            for mask in 1u32..(1 << n) {
                if mask.count_ones() < 2 {
                    continue;
                }
                let h: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
                if let Some(u) = self.collapse_move(t, &h) {
                    out.push(u);
                }
            }
        }
        for v in 0..n {
            let expanded = match &t.labels[v] {
                Side::Left(p) => self.left.expand(p).map(|h| h.map(|x| Side::Left(x.clone()))),
                Side::Right(q) => self.right.expand(q).map(|h| h.map(|x| Side::Right(x.clone()))),
            };
            if let Some(h) = expanded {
                let corollas: Vec<Term<P, Q>> =
                    t.labels.iter().map(|l| LabeledGraph::corolla(l.clone()).expect("nonzero arity")).collect();
                let parts: Vec<&Term<P, Q>> = (0..n).map(|u| if u == v { &h } else { &corollas[u] }).collect();
                if let Ok((g, _)) = substitute_labeled(&t.shape, &parts) {
                    out.push(g.canonical());
                }
            }
            for (p, q) in &self.identified {
                let swapped = match &t.labels[v] {
                    Side::Left(x) if x == p => Side::Right(q.clone()),
                    Side::Right(y) if y == q => Side::Left(p.clone()),
                    _ => continue,
                };
                let mut u = t.clone();
                u.labels[v] = swapped;
                out.push(u.canonical());
            }
        }
        out
    }

    fn collapse_move(&self, t: &Term<P, Q>, h: &[usize]) -> Option<Term<P, Q>> {
        let left = matches!(t.labels[h[0]], Side::Left(_));
        if h.iter().any(|&v| matches!(t.labels[v], Side::Left(_)) != left) {
            return None;
        }
        let c = collapse(&t.shape, h).ok()?;
        let inner = |v: usize| &t.labels[v];
        let composite = if left {
            let labels = c.inner_vertices.iter().map(|&v| match inner(v) {
                Side::Left(p) => p.clone(),
                Side::Right(_) => unreachable!(),
            });
            Side::Left(self.left.evaluate(&LabeledGraph { shape: c.inner.clone(), labels: labels.collect() }).ok()?)
        } else {
            let labels = c.inner_vertices.iter().map(|&v| match inner(v) {
                Side::Right(q) => q.clone(),
                Side::Left(_) => unreachable!(),
            });
            Side::Right(self.right.evaluate(&LabeledGraph { shape: c.inner.clone(), labels: labels.collect() }).ok()?)
        };
        let mut labels = vec![None; c.graph.vertex_count];
        for (v, l) in t.labels.iter().enumerate() {
            if !h.contains(&v) {
                labels[c.vertex_map[v]] = Some(l.clone());
            }
        }
        labels[c.new_vertex] = Some(composite);
        let labels = labels.into_iter().map(|l| l.expect("every quotient vertex labeled")).collect();
        Some(LabeledGraph { shape: c.graph, labels }.canonical())
    }

    /// Bounded decision of equality of classes.
    pub fn equal(&self, a: &Term<P, Q>, b: &Term<P, Q>, budget: usize) -> Result<Verdict, ProperadError> {
        if a.arity() != b.arity() {
            return Err(ProperadError::Evaluation(format!("arity mismatch {:?} vs {:?}", a.arity(), b.arity())));
        }
        Ok(bidirectional_search(a.canonical(), b.canonical(), budget, |t| self.moves(t)))
    }
}

impl<P: Properad, Q: Properad> Properad for PushoutProperad<P, Q> {
    type Elem = Term<P, Q>;

    fn name(&self) -> String {
        format!("pushout({}, {})", self.left.name(), self.right.name())
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        x.shape.validate().is_empty()
            && x.check_labels().is_ok()
            && x.labels.iter().all(|l| match l {
                Side::Left(p) => self.left.contains(p),
                Side::Right(q) => self.right.contains(q),
            })
            && x.canonical() == *x
    }

    fn evaluate(&self, g: &LabeledGraph<Self::Elem>) -> Result<Self::Elem, ProperadError> {
        let parts: Vec<&Term<P, Q>> = g.labels.iter().collect();
        let (flat, _) = substitute_labeled(&g.shape, &parts)?;
        Ok(flat.canonical())
    }
}
