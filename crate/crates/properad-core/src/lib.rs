//! Properads as algebras over the graph-substitution monad.
//!
//! A [`Properad`] evaluates any labeled ioda-graph over its elements to a
//! single element. Partial compositions and symmetric-group actions are the
//! special cases of two-vertex grafts and permuted corollas. Also here: free
//! and presented properads, pushouts decided by bounded rewriting, and the
//! bar construction.

mod bar;
mod free;
mod normal;
mod presented;
mod pushout;
mod search;

pub use bar::Bar;
pub use free::FreeProperad;
pub use normal::{normal_form, Mark, PortGraph};
pub use presented::PresentedProperad;
pub use pushout::{pushout_construct, PushoutProperad, Side};
pub use search::{bidirectional_search, Verdict};

use free_properad::{flatten_at_level, HasArity, LabeledGraph, Nested, NestError, Report};
use graph_core::{Arity, GraphError, IodaGraph};
use std::fmt::Debug;
use std::hash::Hash;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ProperadError {
    #[error("{element} is not in the carrier of {properad}")]
    NotInCarrier { properad: String, element: String },
    #[error("io-violation: composition would have arity (0,0)")]
    IoViolation,
    #[error("partial composition needs a nonempty matching")]
    EmptyMatching,
    #[error("matching pair {0:?} is out of range or repeats a slot")]
    BadMatching((usize, usize)),
    #[error("{0:?} is not a permutation of the right size")]
    BadPermutation(Vec<usize>),
    #[error("not a properad map: {0}")]
    NotAProperadMap(String),
    #[error("relation sides have arities {0:?} and {1:?}")]
    RelationArity(Arity, Arity),
    #[error("level {level} is outside the truncation at {truncation}")]
    Truncation { level: usize, truncation: usize },
    #[error("evaluation failed: {0}")]
    Evaluation(String),
    #[error(transparent)]
    Nest(#[from] NestError),
    #[error(transparent)]
    Graph(GraphError),
}

impl From<GraphError> for ProperadError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::IoViolation => ProperadError::IoViolation,
            GraphError::EmptyGrafting => ProperadError::EmptyMatching,
            GraphError::BadGrafting(p) => ProperadError::BadMatching(p),
            other => ProperadError::Graph(other),
        }
    }
}

/// An io-properad presented by its whole-graph composition.
///
/// Elements are kept in a canonical form so that `==` is equality in the
/// properad. `evaluate` must satisfy the algebra laws checked by
/// [`check_algebra_laws`].
pub trait Properad {
    type Elem: Clone + Eq + Ord + Hash + Debug + HasArity;

    fn name(&self) -> String;

    fn contains(&self, x: &Self::Elem) -> bool;

    /// Composition along the shape of `g`. Labels are assumed to be members.
    fn evaluate(&self, g: &LabeledGraph<Self::Elem>) -> Result<Self::Elem, ProperadError>;

    /// A graph with at least two vertices that evaluates to `x`, if the
    /// properad knows one. Used by rewriting searches.
    fn expand(&self, _x: &Self::Elem) -> Option<LabeledGraph<Self::Elem>> {
        None
    }

    /// The legs of `x` as ports of a colored graph, so that `x` and `σ·x`
    /// have isomorphic port graphs. The default treats `x` as rigid.
    fn port_graph(&self, x: &Self::Elem) -> PortGraph<Self::Elem> {
        PortGraph::rigid(x, x.arity())
    }
}

impl<P: Properad + ?Sized> Properad for &P {
    type Elem = P::Elem;
    fn name(&self) -> String {
        (**self).name()
    }
    fn contains(&self, x: &Self::Elem) -> bool {
        (**self).contains(x)
    }
    fn evaluate(&self, g: &LabeledGraph<Self::Elem>) -> Result<Self::Elem, ProperadError> {
        (**self).evaluate(g)
    }
    fn expand(&self, x: &Self::Elem) -> Option<LabeledGraph<Self::Elem>> {
        (**self).expand(x)
    }
    fn port_graph(&self, x: &Self::Elem) -> PortGraph<Self::Elem> {
        (**self).port_graph(x)
    }
}

/// Validate `g` against `p` and evaluate it.
pub fn evaluate<P: Properad>(p: &P, g: &LabeledGraph<P::Elem>) -> Result<P::Elem, ProperadError> {
    g.shape.check()?;
    g.check_labels()?;
    if let Some(x) = g.labels.iter().find(|x| !p.contains(x)) {
        return Err(ProperadError::NotInCarrier { properad: p.name(), element: format!("{x:?}") });
    }
    p.evaluate(g)
}

/// `p ∘_φ q`: output `a` of `p` grafted to input `b` of `q` for each `(a, b)` in `phi`.
pub fn partial_compose<P: Properad>(
    p: &P,
    x: &P::Elem,
    y: &P::Elem,
    phi: &[(usize, usize)],
) -> Result<P::Elem, ProperadError> {
    let shape = IodaGraph::partially_grafted(x.arity(), y.arity(), phi)?;
    evaluate(p, &LabeledGraph { shape, labels: vec![x.clone(), y.clone()] })
}

fn is_permutation(s: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    s.len() == n && s.iter().all(|&k| k < n && !std::mem::replace(&mut seen[k], true))
}

/// The action of `(sigma_in, sigma_out)`: input `k` of `x` becomes input
/// `sigma_in[k]` of the result, and likewise for outputs.
pub fn act_sigma<P: Properad>(
    p: &P,
    x: &P::Elem,
    sigma_in: &[usize],
    sigma_out: &[usize],
) -> Result<P::Elem, ProperadError> {
    let (a, b) = x.arity();
    if !is_permutation(sigma_in, a) {
        return Err(ProperadError::BadPermutation(sigma_in.to_vec()));
    }
    if !is_permutation(sigma_out, b) {
        return Err(ProperadError::BadPermutation(sigma_out.to_vec()));
    }
    let shape = IodaGraph::permuted_corolla(sigma_in, sigma_out);
    evaluate(p, &LabeledGraph { shape, labels: vec![x.clone()] })
}

/// Evaluate the innermost graphs of a nested value of depth at least 1,
/// lowering its depth by one.
pub fn evaluate_innermost<P: Properad>(p: &P, x: &Nested<P::Elem>) -> Result<Nested<P::Elem>, ProperadError> {
    let g = x.as_graph().ok_or(NestError::Level { depth: 0, level: 0 })?;
    if x.depth() == 1 {
        let flat = g.map(|l| l.as_leaf().expect("depth one").clone());
        return Ok(Nested::Leaf(p.evaluate(&flat)?));
    }
    let labels = g.labels.iter().map(|l| evaluate_innermost(p, l)).collect::<Result<_, _>>()?;
    Ok(Nested::Graph(LabeledGraph { shape: g.shape.clone(), labels }).canonical())
}

/// Unit law on corollas of the given elements, and the square
/// `evaluate(flatten(x)) = evaluate(evaluate inside x)` on depth-2 samples.
pub fn check_algebra_laws<P: Properad>(p: &P, elems: &[P::Elem], depth_two: &[Nested<P::Elem>]) -> Report {
    let mut report = Report::new(format!("algebra laws for {}", p.name()));
    for e in elems {
        let r = LabeledGraph::corolla(e.clone()).map_err(ProperadError::from).and_then(|g| p.evaluate(&g));
        report.record(r.as_ref() == Ok(e), || format!("unit law fails on {e:?}: {r:?}"));
    }
    for x in depth_two {
        let lhs = flatten_at_level(x, 0)
            .map_err(ProperadError::from)
            .and_then(|y| evaluate_innermost(p, &y));
        let rhs = evaluate_innermost(p, x).and_then(|y| evaluate_innermost(p, &y));
        report.record(lhs.is_ok() && lhs == rhs, || format!("algebra square fails on {x:?}: {lhs:?} vs {rhs:?}"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_check() {
        assert!(is_permutation(&[1, 0, 2], 3));
        assert!(!is_permutation(&[1, 1], 2));
        assert!(!is_permutation(&[0], 2));
    }
}
