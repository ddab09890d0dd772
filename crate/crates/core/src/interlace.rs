//! Cauchy interlacing checks: a child spectrum (one order smaller, from a
//! leading principal submatrix pencil) must sit between consecutive parent
//! eigenvalues, up to a numerical slack.

use crate::pencilsolve::{generalized_eigenvalues, Spectrum, DEFAULT_PD_TOLERANCE};
use crate::setmatrix::{build_gcd_matrix, build_lcm_matrix, Matrix, SetSpec};
use crate::{Error, Result};

/// The top-left k×k block of a matrix.
pub fn leading_principal_submatrix<T: Clone>(m: &Matrix<T>, k: usize) -> Result<Matrix<T>> {
    if k == 0 || k > m.order() {
        return Err(Error::InvalidParameter(format!(
            "submatrix order {k} must lie in 1..={}",
            m.order()
        )));
    }
    Ok(Matrix::from_fn(k, |i, j| m.get(i, j).clone()))
}

/// Result of an interlacing check between spectra of orders n and n−1.
#[derive(Clone, Debug, PartialEq)]
pub struct InterlaceReport {
    /// Order of the parent spectrum.
    pub order: usize,
    pub parent: Spectrum,
    pub child: Spectrum,
    pub slack: f64,
    /// (1-based position k, gap size) for every violated inequality:
    /// the child value at k must not exceed the parent at k, nor fall
    /// below the parent at k+1, by more than `slack`.
    pub violations: Vec<(usize, f64)>,
}

impl InterlaceReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check λₖ ≥ λ′ₖ ≥ λₖ₊₁ (descending order, slack-tolerant) for all k.
pub fn check_interlacing(
    parent: &Spectrum,
    child: &Spectrum,
    slack: f64,
) -> Result<InterlaceReport> {
    let n = parent.order();
    if child.order() + 1 != n {
        return Err(Error::DimensionMismatch(format!(
            "child spectrum must have order {} for a parent of order {n}, got {}",
            n.saturating_sub(1),
            child.order()
        )));
    }
    if slack < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "slack must be non-negative, got {slack}"
        )));
    }

    let p = parent.values();
    let c = child.values();
    let mut violations = Vec::new();
    for k in 0..n - 1 {
        let upper_gap = c[k] - p[k];
        if upper_gap > slack {
            violations.push((k + 1, upper_gap));
        }
        let lower_gap = p[k + 1] - c[k];
        if lower_gap > slack {
            violations.push((k + 1, lower_gap));
        }
    }

    Ok(InterlaceReport {
        order: n,
        parent: parent.clone(),
        child: child.clone(),
        slack,
        violations,
    })
}

/// Positive-eigenvalue counts of the lcm/gcd pencil on {1..n} for
/// n = 1..=t_max, verified to be non-decreasing in n.
///
/// "Positive" means exceeding
/// [`crate::pencilsolve::POSITIVE_EIGENVALUE_SLACK`], so tiny numerical
/// residue near zero never counts.
pub fn positive_count_monotone(t_max: usize) -> Result<Vec<(usize, usize)>> {
    if t_max < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least two orders to compare, got t_max = {t_max}"
        )));
    }
    let mut counts = Vec::with_capacity(t_max);
    for n in 1..=t_max {
        let t = SetSpec::consecutive(1, n as u64)?;
        let l = build_lcm_matrix(&t)?.to_real();
        let g = build_gcd_matrix(&t)?.to_real();
        let s = generalized_eigenvalues(&l, &g, DEFAULT_PD_TOLERANCE)?;
        counts.push((n, s.positive_count()));
    }
    for w in counts.windows(2) {
        let ((n_prev, c_prev), (n_next, c_next)) = (w[0], w[1]);
        if c_next < c_prev {
            return Err(Error::VerificationFailed(format!(
                "positive eigenvalue count dropped from {c_prev} at order {n_prev} \
                 to {c_next} at order {n_next}"
            )));
        }
    }
    Ok(counts)
}
