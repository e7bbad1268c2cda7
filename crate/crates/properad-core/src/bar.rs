use crate::{evaluate_innermost, normal_form, Properad, ProperadError};
use free_properad::{flatten_at_level, insert_nesting_at, Nested, NestError};

/// The bar construction truncated at level `truncation`: level `n` holds
/// nested values of depth `n + 1` over the elements of the properad.
#[derive(Clone, Debug)]
pub struct Bar<P: Properad> {
    pub properad: P,
    pub truncation: usize,
}

impl<P: Properad> Bar<P> {
    pub fn new(properad: P, truncation: usize) -> Self {
        Bar { properad, truncation }
    }

    fn check_level(&self, n: usize, x: &Nested<P::Elem>) -> Result<(), ProperadError> {
        if n > self.truncation {
            return Err(ProperadError::Truncation { level: n, truncation: self.truncation });
        }
        if x.depth() != n + 1 {
            return Err(NestError::Level { depth: x.depth(), level: n }.into());
        }
        Ok(())
    }

    /// `d_i` on level `n`: flatten nesting `i` for `i < n`, evaluate the
    /// innermost graphs for `i = n`.
    pub fn face(&self, n: usize, i: usize, x: &Nested<P::Elem>) -> Result<Nested<P::Elem>, ProperadError> {
        self.check_level(n, x)?;
        if n == 0 || i > n {
            return Err(NestError::Level { depth: n + 1, level: i }.into());
        }
        let y = if i < n { flatten_at_level(x, i)? } else { evaluate_innermost(&self.properad, x)? };
        self.normalize(&y)
    }

    /// `s_i` from level `n` to level `n + 1`.
    pub fn degeneracy(&self, n: usize, i: usize, x: &Nested<P::Elem>) -> Result<Nested<P::Elem>, ProperadError> {
        self.check_level(n, x)?;
        if n + 1 > self.truncation {
            return Err(ProperadError::Truncation { level: n + 1, truncation: self.truncation });
        }
        self.normalize(&insert_nesting_at(x, i)?)
    }

    /// The representative of `x` up to relabeling and the symmetric action.
    pub fn normalize(&self, x: &Nested<P::Elem>) -> Result<Nested<P::Elem>, ProperadError> {
        normal_form(&self.properad, x)
    }

    /// Composite of a 0-simplex, the augmentation to the properad.
    pub fn augmentation(&self, x: &Nested<P::Elem>) -> Result<P::Elem, ProperadError> {
        self.check_level(0, x)?;
        match evaluate_innermost(&self.properad, x)? {
            Nested::Leaf(p) => Ok(p),
            Nested::Graph(_) => unreachable!("depth one evaluates to a leaf"),
        }
    }
}
