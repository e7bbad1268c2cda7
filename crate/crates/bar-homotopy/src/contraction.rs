use crate::simplicial::normalized;
use crate::{BarError, TruncatedSimplicialObject};
use free_properad::{coarsen, eta, Nested, Report};
use properad_core::{Bar, Properad};
use std::fmt::Debug;
use std::rc::Rc;

type Map<'a, T> = Box<dyn Fn(&T) -> Result<T, BarError> + 'a>;
type LevelMap<'a, T> = Box<dyn Fn(usize, &T) -> Result<T, BarError> + 'a>;

/// An augmentation to a level −1 together with an extra degeneracy
/// `s_{-1}`. Level −1 elements are represented as level-0 simplices.
pub struct ContractionData<'a, T> {
    pub name: String,
    /// `s_{-1}` from level `r ≥ 0` to level `r + 1`.
    pub extra: LevelMap<'a, T>,
    /// `d_0` from level 0 to level −1.
    pub augment: Map<'a, T>,
    /// `s_{-1}` from level −1 to level 0.
    pub include: Map<'a, T>,
}

/// `s_{-1} = η`, wrapping the whole simplex in a corolla.
pub fn eta_contraction<'a, P: Properad>(bar: &'a Bar<P>) -> ContractionData<'a, Nested<P::Elem>> {
    ContractionData {
        name: "eta".into(),
        extra: Box::new(move |_, x: &Nested<P::Elem>| Ok(bar.normalize(&eta(x.clone())?)?)),
        augment: Box::new(move |x| Ok(bar.face(1, 1, &eta(x.clone())?)?)),
        include: Box::new(|x| Ok(x.clone())),
    }
}

/// `s_{-1}` groups the outermost vertices of a level-`r` simplex by
/// `grouping(r, x)` and adds the quotient as a new outermost level. The
/// single-group grouping gives [`eta_contraction`].
pub fn grouped_contraction<'a, P, G>(bar: &'a Bar<P>, grouping: G) -> ContractionData<'a, Nested<P::Elem>>
where
    P: Properad,
    G: Fn(usize, &Nested<P::Elem>) -> Result<Vec<Vec<usize>>, BarError> + 'a,
{
    let extra = move |r: usize, x: &Nested<P::Elem>| -> Result<Nested<P::Elem>, BarError> {
        let groups = grouping(r, x)?;
        let g = x.as_graph().ok_or_else(|| BarError::NotInSubcomplex("a bare element".into()))?;
        let c = coarsen(g, &groups).map_err(|e| BarError::NotInSubcomplex(format!("grouping does not reassemble: {e}")))?;
        Ok(bar.normalize(&Nested::Graph(c.graph))?)
    };
    let extra = Rc::new(extra);
    let e2 = Rc::clone(&extra);
    ContractionData {
        name: "grouped".into(),
        extra: Box::new(move |r, x| extra(r, x)),
        augment: Box::new(move |x| Ok(bar.face(1, 1, &e2(0, x)?)?)),
        include: Box::new(|x| Ok(x.clone())),
    }
}

fn compare<T: PartialEq + Debug>(
    report: &mut Report,
    identity: &str,
    x: &T,
    lhs: Result<T, BarError>,
    rhs: Result<T, BarError>,
) {
    let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
    report.record(ok, || format!("{identity} fails on {x:?}: {lhs:?} vs {rhs:?}"));
}

/// The extra degeneracy identities `d_0 s_{-1} = id`,
/// `d_{i+1} s_{-1} = s_{-1} d_i` and `s_{j+1} s_{-1} = s_{-1} s_j` on
/// level −1 elements `base` and on level-`r` `samples`, as far as the
/// truncation allows.
pub fn check_contraction<S: TruncatedSimplicialObject>(
    s: &S,
    data: &ContractionData<'_, S::Simplex>,
    base: &[S::Simplex],
    samples: &[(usize, S::Simplex)],
) -> Report {
    let mut report = Report::new(format!("extra degeneracy {}", data.name));
    let top = s.truncation();
    for c in base {
        let Some(c) = normalized(s, &mut report, c) else { continue };
        let c = &c;
        compare(&mut report, "d0 s-1 = id at level -1", c, (data.include)(c).and_then(|y| (data.augment)(&y)), Ok(c.clone()));
    }
    for (r, x) in samples {
        let r = *r;
        if r + 1 > top {
            continue;
        }
        let Some(x) = normalized(s, &mut report, x) else { continue };
        let x = &x;
        let up = (data.extra)(r, x);
        let first = up.clone().and_then(|y| s.face(r + 1, 0, &y));
        compare(&mut report, &format!("d0 s-1 = id at level {r}"), x, first, Ok(x.clone()));
        for i in 0..=r {
            let lhs = up.clone().and_then(|y| s.face(r + 1, i + 1, &y));
            let rhs = if r == 0 {
                (data.augment)(x).and_then(|y| (data.include)(&y))
            } else {
                s.face(r, i, x).and_then(|y| (data.extra)(r - 1, &y))
            };
            compare(&mut report, &format!("d{} s-1 = s-1 d{i} at level {r}", i + 1), x, lhs, rhs);
        }
        if r + 2 <= top {
            for j in 0..=r {
                let lhs = up.clone().and_then(|y| s.degeneracy(r + 1, j + 1, &y));
                let rhs = s.degeneracy(r, j, x).and_then(|y| (data.extra)(r + 1, &y));
                compare(&mut report, &format!("s{} s-1 = s-1 s{j} at level {r}", j + 1), x, lhs, rhs);
            }
        }
    }
    report
}

/// Maps `h_j` from level `r` to level `r + 1` for `0 ≤ j ≤ r`, with the
/// two ends `d_0 h_0` and `d_{r+1} h_r`.
pub struct SimplicialHomotopy<'a, T> {
    pub name: String,
    pub h: Box<dyn Fn(usize, usize, &T) -> Result<T, BarError> + 'a>,
    pub first: LevelMap<'a, T>,
    pub last: LevelMap<'a, T>,
}

/// The simplicial homotopy identities on level-`r` samples, as far as the
/// truncation allows.
pub fn check_homotopy<S: TruncatedSimplicialObject>(
    s: &S,
    hom: &SimplicialHomotopy<'_, S::Simplex>,
    samples: &[(usize, S::Simplex)],
) -> Report {
    let mut report = Report::new(format!("simplicial homotopy {}", hom.name));
    let top = s.truncation();
    let h = |r: usize, j: usize, x: &S::Simplex| (hom.h)(r, j, x);
    for (r, x) in samples {
        let r = *r;
        if r + 1 > top {
            continue;
        }
        let Some(x) = normalized(s, &mut report, x) else { continue };
        let x = &x;
        let hs: Vec<Result<S::Simplex, BarError>> = (0..=r).map(|j| h(r, j, x)).collect();
        compare(&mut report, "d0 h0 = first", x, hs[0].clone().and_then(|y| s.face(r + 1, 0, &y)), (hom.first)(r, x));
        compare(
            &mut report,
            &format!("d{} h{r} = last", r + 1),
            x,
            hs[r].clone().and_then(|y| s.face(r + 1, r + 1, &y)),
            (hom.last)(r, x),
        );
        for j in 0..=r {
            for i in 0..=r + 1 {
                let lhs = hs[j].clone().and_then(|y| s.face(r + 1, i, &y));
                if i < j {
                    let rhs = s.face(r, i, x).and_then(|y| h(r - 1, j - 1, &y));
                    compare(&mut report, &format!("d{i} h{j} = h{} d{i} at level {r}", j - 1), x, lhs, rhs);
                } else if i == j + 1 && j < r {
                    let rhs = hs[j + 1].clone().and_then(|y| s.face(r + 1, j + 1, &y));
                    compare(&mut report, &format!("d{i} h{j} = d{i} h{} at level {r}", j + 1), x, lhs, rhs);
                } else if i > j + 1 {
                    let rhs = s.face(r, i - 1, x).and_then(|y| h(r - 1, j, &y));
                    compare(&mut report, &format!("d{i} h{j} = h{j} d{} at level {r}", i - 1), x, lhs, rhs);
                }
            }
            if r + 2 <= top {
                for i in 0..=r + 1 {
                    let lhs = hs[j].clone().and_then(|y| s.degeneracy(r + 1, i, &y));
                    let rhs = if i <= j {
                        s.degeneracy(r, i, x).and_then(|y| h(r + 1, j + 1, &y))
                    } else {
                        s.degeneracy(r, i - 1, x).and_then(|y| h(r + 1, j, &y))
                    };
                    compare(&mut report, &format!("s{i} h{j} at level {r}"), x, lhs, rhs);
                }
            }
        }
    }
    report
}

/// Verify `data` on the samples and build `ψ_i = s_0^i s_{-1} d_0^i`, a
/// homotopy from the identity to the map through level −1.
pub fn build_contraction<'a, S: TruncatedSimplicialObject>(
    s: &'a S,
    data: ContractionData<'a, S::Simplex>,
    base: &[S::Simplex],
    samples: &[(usize, S::Simplex)],
) -> Result<SimplicialHomotopy<'a, S::Simplex>, BarError> {
    let report = check_contraction(s, &data, base, samples);
    if let Some(w) = report.counterexamples.first() {
        let (identity, witness) = w.split_once(" fails on ").unwrap_or((w.as_str(), ""));
        return Err(BarError::Contraction { identity: identity.into(), witness: witness.into() });
    }
    let data = Rc::new(data);
    let (d1, d2) = (Rc::clone(&data), Rc::clone(&data));
    let name = format!("psi from {}", data.name);
    let h = move |r: usize, i: usize, x: &S::Simplex| -> Result<S::Simplex, BarError> {
        let mut y = x.clone();
        for k in 0..i {
            y = s.face(r - k, 0, &y)?;
        }
        y = (d1.extra)(r - i, &y)?;
        for k in 0..i {
            y = s.degeneracy(r - i + 1 + k, 0, &y)?;
        }
        Ok(y)
    };
    let last = move |r: usize, x: &S::Simplex| -> Result<S::Simplex, BarError> {
        let mut y = x.clone();
        for k in 0..r {
            y = s.face(r - k, 0, &y)?;
        }
        y = (d2.include)(&(d2.augment)(&y)?)?;
        for k in 0..r {
            y = s.degeneracy(k, 0, &y)?;
        }
        Ok(y)
    };
    Ok(SimplicialHomotopy {
        name,
        h: Box::new(h),
        first: Box::new(|_, x: &S::Simplex| Ok(x.clone())),
        last: Box::new(last),
    })
}
