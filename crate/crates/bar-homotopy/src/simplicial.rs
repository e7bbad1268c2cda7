use crate::BarError;
use free_properad::{Nested, Report};
use properad_core::{Bar, Properad};
use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

/// Levels `0..=truncation()` with faces and degeneracies between them.
/// Faces `d_i` go from level `n ≥ 1` to `n - 1` for `i ≤ n`; degeneracies
/// `s_i` go from level `n` to `n + 1 ≤ truncation()` for `i ≤ n`.
pub trait TruncatedSimplicialObject {
    type Simplex: Clone + Eq + Hash + Debug;

    fn truncation(&self) -> usize;

    fn face(&self, n: usize, i: usize, x: &Self::Simplex) -> Result<Self::Simplex, BarError>;

    fn degeneracy(&self, n: usize, i: usize, x: &Self::Simplex) -> Result<Self::Simplex, BarError>;

    /// The representative that faces and degeneracies return.
    fn normalize(&self, x: &Self::Simplex) -> Result<Self::Simplex, BarError> {
        Ok(x.clone())
    }
}

impl<P: Properad> TruncatedSimplicialObject for Bar<P> {
    type Simplex = Nested<P::Elem>;

    fn truncation(&self) -> usize {
        self.truncation
    }

    fn face(&self, n: usize, i: usize, x: &Self::Simplex) -> Result<Self::Simplex, BarError> {
        Ok(Bar::face(self, n, i, x)?)
    }

    fn degeneracy(&self, n: usize, i: usize, x: &Self::Simplex) -> Result<Self::Simplex, BarError> {
        Ok(Bar::degeneracy(self, n, i, x)?)
    }

    fn normalize(&self, x: &Self::Simplex) -> Result<Self::Simplex, BarError> {
        Ok(Bar::normalize(self, x)?)
    }
}

impl<S: TruncatedSimplicialObject + ?Sized> TruncatedSimplicialObject for &S {
    type Simplex = S::Simplex;

    fn truncation(&self) -> usize {
        (**self).truncation()
    }

    fn face(&self, n: usize, i: usize, x: &Self::Simplex) -> Result<Self::Simplex, BarError> {
        (**self).face(n, i, x)
    }

    fn degeneracy(&self, n: usize, i: usize, x: &Self::Simplex) -> Result<Self::Simplex, BarError> {
        (**self).degeneracy(n, i, x)
    }

    fn normalize(&self, x: &Self::Simplex) -> Result<Self::Simplex, BarError> {
        (**self).normalize(x)
    }
}

/// `inner` with `d_0` on level `level` replaced by `d_level`.
#[derive(Clone, Debug)]
pub struct CorruptedFace<S> {
    pub inner: S,
    pub level: usize,
}

impl<S: TruncatedSimplicialObject> TruncatedSimplicialObject for CorruptedFace<S> {
    type Simplex = S::Simplex;

    fn truncation(&self) -> usize {
        self.inner.truncation()
    }

    fn face(&self, n: usize, i: usize, x: &Self::Simplex) -> Result<Self::Simplex, BarError> {
        let i = if n == self.level && i == 0 { n } else { i };
        self.inner.face(n, i, x)
    }

    fn degeneracy(&self, n: usize, i: usize, x: &Self::Simplex) -> Result<Self::Simplex, BarError> {
        self.inner.degeneracy(n, i, x)
    }

    fn normalize(&self, x: &Self::Simplex) -> Result<Self::Simplex, BarError> {
        self.inner.normalize(x)
    }
}

pub(crate) fn normalized<S: TruncatedSimplicialObject>(s: &S, report: &mut Report, x: &S::Simplex) -> Option<S::Simplex> {
    let y = s.normalize(x);
    report.record(y.is_ok(), || format!("{x:?} has no normal form: {y:?}"));
    y.ok()
}

fn same<T: PartialEq + Debug>(
    report: &mut Report,
    identity: &str,
    x: &T,
    lhs: Result<T, BarError>,
    rhs: Result<T, BarError>,
) {
    let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
    report.record(ok, || format!("{identity} fails on {x:?}: {lhs:?} vs {rhs:?}"));
}

/// Every simplicial identity that starts at one of the level-`n` samples
/// and stays within the truncation.
pub fn check_simplicial_identities<S: TruncatedSimplicialObject>(s: &S, samples: &[(usize, S::Simplex)]) -> Report {
    let mut report = Report::new("simplicial identities");
    let top = s.truncation();
    for (n, x) in samples {
        let n = *n;
        let Some(x) = normalized(s, &mut report, x) else { continue };
        let x = &x;
        for j in 1..=n {
            for i in 0..j {
                if n < 2 {
                    break;
                }
                let lhs = s.face(n, j, x).and_then(|y| s.face(n - 1, i, &y));
                let rhs = s.face(n, i, x).and_then(|y| s.face(n - 1, j - 1, &y));
                same(&mut report, &format!("d{i} d{j} = d{} d{i} at level {n}", j - 1), x, lhs, rhs);
            }
        }
        if n < top {
            for j in 0..=n {
                let up = s.degeneracy(n, j, x);
                for i in 0..=n + 1 {
                    let lhs = up.clone().and_then(|y| s.face(n + 1, i, &y));
                    let label = format!("d{i} s{j} at level {n}");
                    if i == j || i == j + 1 {
                        same(&mut report, &label, x, lhs, Ok(x.clone()));
                    } else if n >= 1 && i < j {
                        let rhs = s.face(n, i, x).and_then(|y| s.degeneracy(n - 1, j - 1, &y));
                        same(&mut report, &label, x, lhs, rhs);
                    } else if n >= 1 {
                        let rhs = s.face(n, i - 1, x).and_then(|y| s.degeneracy(n - 1, j, &y));
                        same(&mut report, &label, x, lhs, rhs);
                    }
                }
            }
        }
        if n + 2 <= top {
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = s.degeneracy(n, j, x).and_then(|y| s.degeneracy(n + 1, i, &y));
                    let rhs = s.degeneracy(n, i, x).and_then(|y| s.degeneracy(n + 1, j + 1, &y));
                    same(&mut report, &format!("s{i} s{j} = s{} s{i} at level {n}", j + 1), x, lhs, rhs);
                }
            }
        }
    }
    report
}

/// Whether the level-`n` simplex `x` lies in the image of a degeneracy,
/// decided by testing `x = s_i d_i x` for `i < n`.
pub fn is_degenerate<S: TruncatedSimplicialObject>(s: &S, n: usize, x: &S::Simplex) -> Result<bool, BarError> {
    let x = &s.normalize(x)?;
    for i in 0..n {
        let y = s.face(n, i, x)?;
        if s.degeneracy(n - 1, i, &y)? == *x {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The union of the images of all degeneracies out of level `n`, applied
/// to `simplices` (all at level `n`).
pub fn degenerate_image<S: TruncatedSimplicialObject>(
    s: &S,
    n: usize,
    simplices: &[S::Simplex],
) -> Result<HashSet<S::Simplex>, BarError> {
    let mut image = HashSet::new();
    for y in simplices {
        for i in 0..=n {
            image.insert(s.degeneracy(n, i, y)?);
        }
    }
    Ok(image)
}
