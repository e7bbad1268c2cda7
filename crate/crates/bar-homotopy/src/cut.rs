use crate::simplicial::normalized;
use crate::{assemble, decompose, BarError, Chain, ContractionData, SimplicialHomotopy, TruncatedSimplicialObject};
use free_properad::{coarsen, eta, substitute_labeled, Label, LabeledGraph, Nested, Report};
use graph_core::collapse;
use properad_core::{evaluate_innermost, normal_form, Bar, FreeProperad, Properad};
use std::collections::BTreeMap;
use std::marker::PhantomData;

/// Splits every element into pieces, compatibly with composition.
///
/// `refine(p)` is a graph evaluating to `p` whose vertices are the pieces
/// of `p`. `factor(g)` says, for each vertex `v` of `g` and each vertex of
/// `refine(g.labels[v])`, which piece of the composite `evaluate(g)` it
/// lies in, numbering those pieces in any fixed way. Grouping the
/// vertices of the substituted refinements by these numbers and evaluating
/// each group must give `refine(evaluate(g))` up to isomorphism.
pub trait RefinementOracle<P: Properad> {
    fn name(&self) -> String;

    fn refine(&self, p: &P::Elem) -> Result<LabeledGraph<P::Elem>, BarError>;

    fn factor(&self, g: &LabeledGraph<P::Elem>) -> Result<Vec<Vec<usize>>, BarError>;

    /// The vertex of `refine(p)` that `p` stands for when `p` is itself a
    /// piece, and `None` when it is not. A piece may refine further into
    /// its core and pieces that merge into neighbours.
    fn core(&self, p: &P::Elem) -> Result<Option<usize>, BarError> {
        Ok((self.refine(p)?.shape.vertex_count == 1).then_some(0))
    }
}

/// Every element is a single piece.
#[derive(Clone, Copy, Debug, Default)]
pub struct CorollaOracle;

impl<P: Properad> RefinementOracle<P> for CorollaOracle {
    fn name(&self) -> String {
        "corolla".into()
    }

    fn refine(&self, p: &P::Elem) -> Result<LabeledGraph<P::Elem>, BarError> {
        Ok(LabeledGraph::corolla(p.clone())?)
    }

    fn factor(&self, g: &LabeledGraph<P::Elem>) -> Result<Vec<Vec<usize>>, BarError> {
        Ok(vec![vec![0]; g.shape.vertex_count])
    }
}

/// Splits an element of a free properad into its generators.
#[derive(Clone, Copy, Debug, Default)]
pub struct GeneratorOracle;

impl RefinementOracle<FreeProperad> for GeneratorOracle {
    fn name(&self) -> String {
        "generators".into()
    }

    fn refine(&self, p: &LabeledGraph<Label>) -> Result<LabeledGraph<LabeledGraph<Label>>, BarError> {
        p.labels.iter().map(|&l| LabeledGraph::corolla(l)).collect::<Result<Vec<_>, _>>().map(|labels| LabeledGraph { shape: p.shape.clone(), labels }).map_err(Into::into)
    }

    fn factor(&self, g: &LabeledGraph<LabeledGraph<Label>>) -> Result<Vec<Vec<usize>>, BarError> {
        let parts: Vec<&LabeledGraph<Label>> = g.labels.iter().collect();
        let (_, s) = substitute_labeled(&g.shape, &parts)?;
        let mut out: Vec<Vec<usize>> = g.labels.iter().map(|p| vec![0; p.shape.vertex_count]).collect();
        for (n, &(v, u)) in s.vertex_origin.iter().enumerate() {
            out[v][u] = n;
        }
        Ok(out)
    }
}

/// The element a nested value evaluates to.
pub fn composite<P: Properad>(p: &P, x: &Nested<P::Elem>) -> Result<P::Elem, BarError> {
    let mut y = x.clone();
    loop {
        match y {
            Nested::Leaf(e) => return Ok(e),
            Nested::Graph(_) => y = evaluate_innermost(p, &y)?,
        }
    }
}

/// Substitute the refinements into `g` and group the result by `factor`.
fn regroup<P: Properad, O: RefinementOracle<P>>(
    oracle: &O,
    g: &LabeledGraph<P::Elem>,
) -> Result<(LabeledGraph<P::Elem>, Vec<Vec<usize>>), BarError> {
    let refined: Vec<LabeledGraph<P::Elem>> = g.labels.iter().map(|p| oracle.refine(p)).collect::<Result<_, _>>()?;
    let fibers = oracle.factor(g)?;
    let parts: Vec<&LabeledGraph<P::Elem>> = refined.iter().collect();
    let (flat, s) = substitute_labeled(&g.shape, &parts)?;
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (n, &(v, u)) in s.vertex_origin.iter().enumerate() {
        let piece = fibers.get(v).and_then(|f| f.get(u)).ok_or_else(|| {
            BarError::Factorization(format!("no piece given for vertex {u} of the refinement at vertex {v}"))
        })?;
        groups.entry(*piece).or_default().push(n);
    }
    Ok((flat, groups.into_values().collect()))
}

/// The refinement contract on the labels of `graphs` and the factorization
/// contract on the graphs themselves.
pub fn check_oracle<P: Properad, O: RefinementOracle<P>>(p: &P, oracle: &O, graphs: &[LabeledGraph<P::Elem>]) -> Report {
    let mut report = Report::new(format!("{} refinement of {}", oracle.name(), p.name()));
    for g in graphs {
        for x in &g.labels {
            let back = oracle.refine(x).and_then(|r| Ok(p.evaluate(&r)?));
            report.record(back.as_ref() == Ok(x), || format!("refinement of {x:?} evaluates to {back:?}"));
        }
        let attempt = || -> Result<bool, BarError> {
            let (flat, groups) = regroup::<P, O>(oracle, g)?;
            let leaves = flat.map(|l| Nested::Leaf(l.clone()));
            let c = coarsen(&leaves, &groups).map_err(|e| BarError::Factorization(e.to_string()))?;
            let pieces = c.graph.labels.iter().map(|l| composite(p, l)).collect::<Result<Vec<_>, _>>()?;
            let lhs = LabeledGraph { shape: c.graph.shape, labels: pieces };
            let rhs = oracle.refine(&p.evaluate(g)?)?;
            let normal = |h: &LabeledGraph<P::Elem>| normal_form(p, &Nested::Graph(h.map(|l| Nested::Leaf(l.clone()))));
            Ok(normal(&lhs)? == normal(&rhs)?)
        };
        let r = attempt();
        report.record(r == Ok(true), || format!("factorization fails on {g:?}: {r:?}"));
    }
    report
}

/// A simplex after cutting: the flattening `T'` of the refined pieces,
/// the cut partitions `Q_k` and the lifted partitions `P_k'`.
struct Cut<L> {
    cut: Chain<L>,
    lifted: Vec<Vec<Vec<usize>>>,
}

/// The cut maps `c_r` of a refinement oracle and the homotopy `φ̃` from
/// `c` to the identity.
pub struct CutMap<'a, P: Properad, O: RefinementOracle<P>> {
    pub properad: &'a P,
    pub oracle: &'a O,
    _p: PhantomData<P>,
}

impl<'a, P: Properad, O: RefinementOracle<P>> CutMap<'a, P, O> {
    pub fn new(properad: &'a P, oracle: &'a O) -> Self {
        CutMap { properad, oracle, _p: PhantomData }
    }

    fn cut(&self, x: &Nested<P::Elem>) -> Result<Cut<P::Elem>, BarError> {
        let ch = decompose(x)?;
        let t = &ch.flat;
        let refined: Vec<LabeledGraph<P::Elem>> = t.labels.iter().map(|p| self.oracle.refine(p)).collect::<Result<_, _>>()?;
        let parts: Vec<&LabeledGraph<P::Elem>> = refined.iter().collect();
        let (flat, s) = substitute_labeled(&t.shape, &parts)?;
        let mut pieces: Vec<Vec<usize>> = refined.iter().map(|r| vec![0; r.shape.vertex_count]).collect();
        for (n, &(v, u)) in s.vertex_origin.iter().enumerate() {
            pieces[v][u] = n;
        }
        let mut levels = Vec::with_capacity(ch.depth());
        let mut lifted = Vec::with_capacity(ch.depth());
        for (k, partition) in ch.levels.iter().enumerate() {
            let mut q = Vec::new();
            let mut l = Vec::new();
            for h in partition {
                let c = collapse(&t.shape, h)?;
                let inner = LabeledGraph { shape: c.inner, labels: c.inner_vertices.iter().map(|&v| t.labels[v].clone()).collect() };
                let fibers = self.oracle.factor(&inner)?;
                let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for (i, &v) in c.inner_vertices.iter().enumerate() {
                    let f = fibers.get(i).filter(|f| f.len() == pieces[v].len()).ok_or_else(|| {
                        BarError::Factorization(format!("wrong number of pieces for vertex {v} at level {k}"))
                    })?;
                    for (u, &piece) in f.iter().enumerate() {
                        groups.entry(piece).or_default().push(pieces[v][u]);
                    }
                }
                q.extend(groups.into_values());
                l.push(c.inner_vertices.iter().flat_map(|&v| pieces[v].iter().copied()).collect());
            }
            levels.push(q);
            lifted.push(l);
        }
        Ok(Cut { cut: Chain { flat, levels }, lifted })
    }

    /// `c_r`, for `x` at any level.
    pub fn apply(&self, x: &Nested<P::Elem>) -> Result<Nested<P::Elem>, BarError> {
        Ok(normal_form(self.properad, &assemble(&self.cut(x)?.cut)?)?)
    }

    /// `φ̃_j(x) = [P_0', …, P_j', Q_j, …, Q_r]` for `x` at level `r ≥ j`.
    pub fn homotopy(&self, j: usize, x: &Nested<P::Elem>) -> Result<Nested<P::Elem>, BarError> {
        let Cut { cut, lifted } = self.cut(x)?;
        if j >= cut.depth() {
            return Err(BarError::BadChain(format!("homotopy index {j} above level {}", cut.depth() - 1)));
        }
        let levels = lifted[..=j].iter().cloned().chain(cut.levels[j..].iter().cloned()).collect();
        Ok(normal_form(self.properad, &assemble(&Chain { flat: cut.flat, levels })?)?)
    }
}

/// `c` commutes with every face and degeneracy.
pub fn check_cut_simplicial<P: Properad, O: RefinementOracle<P>>(
    bar: &Bar<P>,
    cut: &CutMap<'_, P, O>,
    samples: &[(usize, Nested<P::Elem>)],
) -> Report {
    let mut report = Report::new(format!("{} cut map is simplicial", cut.oracle.name()));
    let top = bar.truncation;
    for (n, x) in samples {
        let n = *n;
        let Some(x) = normalized(bar, &mut report, x) else { continue };
        let x = &x;
        let cx = cut.apply(x);
        for i in 0..=n {
            if n == 0 {
                break;
            }
            let lhs = bar.face(n, i, x).map_err(BarError::from).and_then(|y| cut.apply(&y));
            let rhs = cx.clone().and_then(|y| Ok(bar.face(n, i, &y)?));
            report.record(lhs.is_ok() && lhs == rhs, || format!("c d{i} = d{i} c fails on {x:?}: {lhs:?} vs {rhs:?}"));
        }
        if n < top {
            for i in 0..=n {
                let lhs = bar.degeneracy(n, i, x).map_err(BarError::from).and_then(|y| cut.apply(&y));
                let rhs = cx.clone().and_then(|y| Ok(bar.degeneracy(n, i, &y)?));
                report.record(lhs.is_ok() && lhs == rhs, || format!("c s{i} = s{i} c fails on {x:?}: {lhs:?} vs {rhs:?}"));
            }
        }
    }
    report
}

/// `φ̃` as a simplicial homotopy from `c` to the identity.
pub fn cut_homotopy<'a, P: Properad, O: RefinementOracle<P>>(cut: &'a CutMap<'a, P, O>) -> SimplicialHomotopy<'a, Nested<P::Elem>> {
    SimplicialHomotopy {
        name: format!("{} cut homotopy", cut.oracle.name()),
        h: Box::new(move |_, j, x| cut.homotopy(j, x)),
        first: Box::new(move |_, x| cut.apply(x)),
        last: Box::new(|_, x| Ok(x.clone())),
    }
}

/// Groups the outermost vertices of a simplex by the piece of its
/// composite that their core lands in. Every outermost vertex must compose
/// to a single piece, and every piece must be reached.
pub fn oracle_grouping<'a, P: Properad, O: RefinementOracle<P>>(
    p: &'a P,
    oracle: &'a O,
) -> impl Fn(usize, &Nested<P::Elem>) -> Result<Vec<Vec<usize>>, BarError> + 'a {
    move |_, x| {
        let g = x.as_graph().ok_or_else(|| BarError::NotInSubcomplex("a bare element".into()))?;
        let labels = g.labels.iter().map(|l| composite(p, l)).collect::<Result<Vec<_>, _>>()?;
        let outer = LabeledGraph { shape: g.shape.clone(), labels };
        let fibers = oracle.factor(&outer)?;
        let pieces = oracle.refine(&p.evaluate(&outer)?)?.shape.vertex_count;
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, f) in fibers.iter().enumerate() {
            match oracle.core(&outer.labels[v])? {
                Some(c) => groups.entry(f[c]).or_default().push(v),
                None => return Err(BarError::NotInSubcomplex(format!("vertex {v} of {x:?} spans {} pieces", f.len()))),
            }
        }
        if groups.len() != pieces {
            return Err(BarError::NotInSubcomplex(format!("{x:?} covers {} of {pieces} pieces", groups.len())));
        }
        Ok(groups.into_values().collect())
    }
}

/// `ψ_0 c_r = c_{r+1} ψ_0ⁿˢ` on the samples, where `ψ_0` is the extra
/// degeneracy of `grouped` and `ψ_0ⁿˢ` is `η`.
pub fn check_compatibility<P: Properad, O: RefinementOracle<P>>(
    bar: &Bar<P>,
    cut: &CutMap<'_, P, O>,
    grouped: &ContractionData<'_, Nested<P::Elem>>,
    samples: &[(usize, Nested<P::Elem>)],
) -> Report {
    let mut report = Report::new(format!("{} cut maps commute with the contractions", cut.oracle.name()));
    for (r, x) in samples {
        if *r + 1 > bar.truncation() {
            continue;
        }
        let Some(x) = normalized(bar, &mut report, x) else { continue };
        let lhs = cut.apply(&x).and_then(|y| (grouped.extra)(*r, &y));
        let rhs = eta(x.clone()).map_err(BarError::from).and_then(|y| cut.apply(&y));
        report.record(lhs.is_ok() && lhs == rhs, || format!("psi0 c = c psi0 fails at level {r} on {x:?}: {lhs:?} vs {rhs:?}"));
    }
    report
}
