use crate::{SurfaceError, Weight};

/// The step function for thresholds `0 < α₁ ≤ … ≤ α_k < 1`: weights below
/// `α₁` go to 0, weights above `α_k` go to 1, a weight between consecutive
/// thresholds goes to their midpoint, and 0 and 1 are fixed. A weight equal
/// to a threshold is an error.
pub fn rho_apply(weights: &[Weight], thresholds: &[Weight]) -> Result<Vec<Weight>, SurfaceError> {
    let zero = Weight::from_integer(0);
    let one = Weight::from_integer(1);
    if thresholds.is_empty()
        || thresholds.iter().any(|&a| a <= zero || a >= one)
        || thresholds.windows(2).any(|w| w[0] > w[1])
    {
        return Err(SurfaceError::BadThresholds);
    }
    weights
        .iter()
        .map(|&w| {
            if w < zero || w > one {
                return Err(SurfaceError::BadWeight(w));
            }
            if w == zero || w == one {
                return Ok(w);
            }
            if thresholds.contains(&w) {
                return Err(SurfaceError::OnThreshold(w));
            }
            let above = thresholds.iter().filter(|&&a| a < w).count();
            Ok(match above {
                0 => zero,
                r if r == thresholds.len() => one,
                r => (thresholds[r - 1] + thresholds[r]) / 2,
            })
        })
        .collect()
}
