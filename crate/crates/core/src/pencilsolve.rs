//! Floating-point eigenvalues of symmetric-definite pencils (A, B):
//! Cholesky reduction to a standard symmetric problem followed by cyclic
//! Jacobi iteration, plus closed-form spectra for the structured pencils
//! this crate builds.

use num_traits::ToPrimitive;

use crate::setmatrix::{RealMatrix, SetSpec};
use crate::{Error, Result};

/// Relative pivot floor for Cholesky factorization: a pivot counts as
/// positive only if it exceeds this fraction of the largest diagonal entry.
pub const DEFAULT_PD_TOLERANCE: f64 = 1e-12;

/// Eigenvalues counted strictly above this are "positive" in sign counts.
pub const POSITIVE_EIGENVALUE_SLACK: f64 = 1e-6;

const JACOBI_MAX_SWEEPS: usize = 100;
const JACOBI_RELATIVE_TOLERANCE: f64 = 1e-12;

// --- spectra ---------------------------------------------------------------

/// Real eigenvalues in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Sort eigenvalues into the descending-order convention (stable, so
    /// exact ties keep their incoming order).
    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// How many eigenvalues exceed [`POSITIVE_EIGENVALUE_SLACK`].
    pub fn positive_count(&self) -> usize {
        self.values
            .iter()
            .filter(|&&v| v > POSITIVE_EIGENVALUE_SLACK)
            .count()
    }
}

/// Eigenvalues lying within `tolerance` of `target`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClusterReport {
    pub target: f64,
    pub tolerance: f64,
    /// 1-based positions in the descending spectrum.
    pub members: Vec<usize>,
}

impl ClusterReport {
    pub fn count(&self) -> usize {
        self.members.len()
    }
}

/// Locate all eigenvalues with |λ − target| ≤ tolerance.
pub fn cluster_count(spectrum: &Spectrum, target: f64, tolerance: f64) -> ClusterReport {
    let members = spectrum
        .values()
        .iter()
        .enumerate()
        .filter(|(_, &v)| (v - target).abs() <= tolerance)
        .map(|(i, _)| i + 1)
        .collect();
    ClusterReport {
        target,
        tolerance,
        members,
    }
}

// --- Cholesky reduction -----------------------------------------------------

/// Lower-triangular F with B = F·Fᵀ.
///
/// Fails with `NotPositiveDefinite` if any pivot drops to or below
/// `pd_tolerance` times the largest diagonal entry; fails with
/// `InvalidParameter` if the input is materially asymmetric.
pub fn cholesky_factor(b: &RealMatrix, pd_tolerance: f64) -> Result<RealMatrix> {
    let n = b.order();
    require_symmetric(b, "cholesky input")?;
    if n == 0 {
        return Ok(RealMatrix::from_fn(0, |_, _| 0.0));
    }
    let max_diag = (0..n).fold(f64::NEG_INFINITY, |m, i| m.max(*b.get(i, i)));
    if max_diag <= 0.0 {
        return Err(Error::NotPositiveDefinite(format!(
            "largest diagonal entry is {max_diag}, expected positive"
        )));
    }
    let pivot_floor = pd_tolerance * max_diag;

    let mut f = vec![0.0f64; n * n];
    for j in 0..n {
        let mut pivot = *b.get(j, j);
        for k in 0..j {
            pivot -= f[j * n + k] * f[j * n + k];
        }
        if pivot <= pivot_floor {
            return Err(Error::NotPositiveDefinite(format!(
                "pivot {pivot:.6e} at index {j} is below the floor {pivot_floor:.6e}"
            )));
        }
        let root = pivot.sqrt();
        f[j * n + j] = root;
        for i in j + 1..n {
            let mut s = *b.get(i, j);
            for k in 0..j {
                s -= f[i * n + k] * f[j * n + k];
            }
            f[i * n + j] = s / root;
        }
    }
    Ok(RealMatrix::from_fn(n, |i, j| f[i * n + j]))
}

fn require_symmetric(m: &RealMatrix, what: &str) -> Result<()> {
    let n = m.order();
    let scale = m.entries().iter().fold(1.0f64, |acc, &e| acc.max(e.abs()));
    for i in 0..n {
        for j in i + 1..n {
            if (m.get(i, j) - m.get(j, i)).abs() > 1e-12 * scale {
                return Err(Error::InvalidParameter(format!(
                    "{what} is not symmetric at ({i}, {j})"
                )));
            }
        }
    }
    Ok(())
}

/// C = F⁻¹ A F⁻ᵀ computed with two triangular solves (never an explicit
/// inverse), then symmetrized to absorb roundoff.
pub(crate) fn reduce_to_standard(
    a: &RealMatrix,
    b: &RealMatrix,
    pd_tolerance: f64,
) -> Result<RealMatrix> {
    if a.order() != b.order() {
        return Err(Error::DimensionMismatch(format!(
            "pencil matrices have orders {} and {}",
            a.order(),
            b.order()
        )));
    }
    require_symmetric(a, "first pencil matrix")?;
    let f = cholesky_factor(b, pd_tolerance)?;
    let n = a.order();

    // Forward-substitute F·W = A, one column of A at a time: W = F⁻¹A.
    let mut w = vec![0.0f64; n * n];
    for col in 0..n {
        for i in 0..n {
            let mut s = *a.get(i, col);
            for k in 0..i {
                s -= f.get(i, k) * w[k * n + col];
            }
            w[i * n + col] = s / f.get(i, i);
        }
    }

    // Forward-substitute on rows for C·Fᵀ = W, i.e. C = W·F⁻ᵀ:
    // C[i][j] = (W[i][j] − Σ_{k<j} C[i][k]·F[j][k]) / F[j][j].
    let mut c = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut s = w[i * n + j];
            for k in 0..j {
                s -= c[i * n + k] * f.get(j, k);
            }
            c[i * n + j] = s / f.get(j, j);
        }
    }

    Ok(RealMatrix::from_fn(n, |i, j| {
        0.5 * (c[i * n + j] + c[j * n + i])
    }))
}

// --- Jacobi iteration --------------------------------------------------------

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Converged when the off-diagonal Frobenius norm falls below 10⁻¹² of the
/// initial full Frobenius norm; gives up with `NoConvergence` after 100
/// sweeps (in practice a handful suffice).
fn jacobi_eigenvalues(c: &RealMatrix) -> Result<Vec<f64>> {
    let n = c.order();
    let mut a: Vec<f64> = c.entries().to_vec();
    let initial_norm = a.iter().map(|e| e * e).sum::<f64>().sqrt();
    if initial_norm == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let tolerance = JACOBI_RELATIVE_TOLERANCE * initial_norm;

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };

    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_norm(&a) <= tolerance {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                // smaller-magnitude root of t² + 2θt − 1 = 0
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let cos = 1.0 / (1.0 + t * t).sqrt();
                let sin = t * cos;

                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    a[r * n + p] = cos * arp - sin * arq;
                    a[p * n + r] = a[r * n + p];
                    a[r * n + q] = sin * arp + cos * arq;
                    a[q * n + r] = a[r * n + q];
                }
                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }

    if off_norm(&a) <= tolerance {
        Ok((0..n).map(|i| a[i * n + i]).collect())
    } else {
        Err(Error::NoConvergence(format!(
            "Jacobi iteration did not converge in {JACOBI_MAX_SWEEPS} sweeps \
             (off-diagonal norm {:.3e}, tolerance {:.3e})",
            off_norm(&a),
            tolerance
        )))
    }
}

/// Eigenvalues of the pencil (A, B): the λ with det(A − λB) = 0, for
/// symmetric A and symmetric positive-definite B.
pub fn generalized_eigenvalues(
    a: &RealMatrix,
    b: &RealMatrix,
    pd_tolerance: f64,
) -> Result<Spectrum> {
    let c = reduce_to_standard(a, b, pd_tolerance)?;
    Ok(Spectrum::from_unsorted(jacobi_eigenvalues(&c)?))
}

// --- closed-form spectra ------------------------------------------------------

/// Spectrum of the pencil (max-matrix, min-matrix) on any valid set:
/// (√(max/min), −1, …, −1, −√(max/min)), or (1) for a singleton.
pub fn maxmin_closed_form(s: &SetSpec) -> Spectrum {
    let n = s.len();
    if n == 1 {
        return Spectrum::from_unsorted(vec![1.0]);
    }
    let (min, max) = s.extremes();
    let ratio = (max / min).to_f64().expect("ratio fits in f64").sqrt();
    let mut values = Vec::with_capacity(n);
    values.push(ratio);
    values.extend(std::iter::repeat_n(-1.0, n - 2));
    values.push(-ratio);
    Spectrum::from_unsorted(values)
}

/// Spectrum of the pencil (lcm-matrix, gcd-matrix) for the two shapes with
/// a known closed form: pairs {u, v} give ±√(uv)/d with d = gcd(u, v),
/// and coprime triples {1, u, v} give (√(uv), −1, −√(uv)).
pub fn lcmgcd_small_closed_form(t: &SetSpec) -> Result<Spectrum> {
    let elems = t.integer_elements()?;
    let as_u64 = |x: &num_bigint::BigInt| x.to_u64().expect("element fits in u64");
    match elems.len() {
        2 => {
            let (u, v) = (as_u64(&elems[0]), as_u64(&elems[1]));
            let d = num_integer::gcd(u, v);
            let r = (((u / d) as f64) * ((v / d) as f64)).sqrt();
            Ok(Spectrum::from_unsorted(vec![r, -r]))
        }
        3 => {
            let mut sorted: Vec<u64> = elems.iter().map(as_u64).collect();
            sorted.sort_unstable();
            if sorted[0] != 1 {
                return Err(Error::UnsupportedSet(
                    "three-element closed form needs smallest element 1".into(),
                ));
            }
            let (u, v) = (sorted[1], sorted[2]);
            if num_integer::gcd(u, v) != 1 {
                return Err(Error::UnsupportedSet(format!(
                    "three-element closed form needs coprime larger elements, \
                     got gcd({u}, {v}) = {}",
                    num_integer::gcd(u, v)
                )));
            }
            let r = ((u as f64) * (v as f64)).sqrt();
            Ok(Spectrum::from_unsorted(vec![r, -1.0, -r]))
        }
        n => Err(Error::UnsupportedSet(format!(
            "closed form covers only pairs and {{1, u, v}} triples, got {n} elements"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setmatrix::{
        build_gcd_matrix, build_lcm_matrix, build_max_matrix, build_min_matrix, Matrix, SetSpec,
    };

    fn real(rows: &[&[f64]]) -> RealMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn lcmgcd_spectrum(set: &SetSpec) -> Spectrum {
        let l = build_lcm_matrix(set).unwrap().to_real();
        let g = build_gcd_matrix(set).unwrap().to_real();
        generalized_eigenvalues(&l, &g, DEFAULT_PD_TOLERANCE).unwrap()
    }

    fn assert_close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.iter().zip(expected) {
            assert!(
                (a - e).abs() <= tol,
                "expected {e}, got {a} (tolerance {tol})"
            );
        }
    }

    #[test]
    fn cholesky_of_two_by_two_example() {
        let f = cholesky_factor(&real(&[&[1.0, 1.0], &[1.0, 2.0]]), DEFAULT_PD_TOLERANCE).unwrap();
        assert_close(f.entries(), &[1.0, 0.0, 1.0, 1.0], 1e-15);
    }

    #[test]
    fn cholesky_reconstructs_gcd_matrix() {
        let t = SetSpec::consecutive(1, 6).unwrap();
        let g = build_gcd_matrix(&t).unwrap().to_real();
        let f = cholesky_factor(&g, DEFAULT_PD_TOLERANCE).unwrap();
        let n = g.order();
        for i in 0..n {
            for j in 0..n {
                let prod: f64 = (0..n).map(|k| f.get(i, k) * f.get(j, k)).sum();
                assert!((prod - g.get(i, j)).abs() < 1e-10);
            }
        }
        // lower triangular with positive diagonal
        for i in 0..n {
            assert!(*f.get(i, i) > 0.0);
            for j in i + 1..n {
                assert_eq!(*f.get(i, j), 0.0);
            }
        }
    }

    #[test]
    fn cholesky_rejects_indefinite_and_asymmetric_input() {
        // eigenvalues 3 and −1
        assert!(matches!(
            cholesky_factor(&real(&[&[1.0, 2.0], &[2.0, 1.0]]), DEFAULT_PD_TOLERANCE),
            Err(Error::NotPositiveDefinite(_))
        ));
        assert!(matches!(
            cholesky_factor(&real(&[&[0.0, 0.0], &[0.0, 0.0]]), DEFAULT_PD_TOLERANCE),
            Err(Error::NotPositiveDefinite(_))
        ));
        assert!(matches!(
            cholesky_factor(&real(&[&[1.0, 0.5], &[0.0, 1.0]]), DEFAULT_PD_TOLERANCE),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn identical_pencil_matrices_give_all_ones() {
        let t = SetSpec::consecutive(1, 3).unwrap();
        let g = build_gcd_matrix(&t).unwrap().to_real();
        let s = generalized_eigenvalues(&g, &g, DEFAULT_PD_TOLERANCE).unwrap();
        assert_close(s.values(), &[1.0, 1.0, 1.0], 1e-12);
    }

    #[test]
    fn consecutive_set_spectra_match_reference_roots() {
        let five = lcmgcd_spectrum(&SetSpec::consecutive(1, 5).unwrap());
        assert_close(
            five.values(),
            &[
                6.479836601662803,
                -0.6118311963837883,
                -1.0,
                -3.34892763304042,
                -4.519077772238594,
            ],
            1e-9,
        );
        let six = lcmgcd_spectrum(&SetSpec::consecutive(1, 6).unwrap());
        assert_close(
            six.values(),
            &[
                6.850082440195522,
                2.55915988187764,
                -0.7419420421091732,
                -1.37488540700793,
                -3.439601390642646,
                -5.852813482313413,
            ],
            1e-9,
        );
    }

    #[test]
    fn prime_set_spectrum_matches_reference_roots() {
        let t = SetSpec::integers([2u32, 3, 5]).unwrap();
        let s = lcmgcd_spectrum(&t);
        assert_close(
            s.values(),
            &[4.512473449091912, -2.302665509072117, -3.937080667292522],
            1e-9,
        );
    }

    #[test]
    fn maxmin_closed_form_examples() {
        let s = maxmin_closed_form(&SetSpec::integers([1u32, 4]).unwrap());
        assert_close(s.values(), &[2.0, -2.0], 1e-15);

        let s = maxmin_closed_form(&SetSpec::integers([1u32, 2, 3, 4]).unwrap());
        assert_close(s.values(), &[2.0, -1.0, -1.0, -2.0], 1e-15);

        // geometric set: ratio 27, spectrum extremes ±3√3
        let s = maxmin_closed_form(&SetSpec::integers([1u32, 3, 9, 27]).unwrap());
        assert_close(
            s.values(),
            &[5.196152422706632, -1.0, -1.0, -5.196152422706632],
            1e-12,
        );

        let s = maxmin_closed_form(&SetSpec::integers([5u32]).unwrap());
        assert_close(s.values(), &[1.0], 1e-15);
    }

    #[test]
    fn maxmin_closed_form_matches_numeric_solver() {
        let t =
            SetSpec::reals(["3/2", "2", "7/3", "9"].iter().map(|s| s.parse().unwrap())).unwrap();
        let m = build_max_matrix(&t).to_real();
        let n = build_min_matrix(&t).to_real();
        let numeric = generalized_eigenvalues(&m, &n, DEFAULT_PD_TOLERANCE).unwrap();
        let closed = maxmin_closed_form(&t);
        assert_close(numeric.values(), closed.values(), 1e-9);
    }

    #[test]
    fn lcmgcd_closed_form_pairs() {
        let s = lcmgcd_small_closed_form(&SetSpec::integers([3u32, 4]).unwrap()).unwrap();
        assert_close(s.values(), &[12f64.sqrt(), -(12f64.sqrt())], 1e-15);

        // common factor divides out: {2,4} → ±√2
        let s = lcmgcd_small_closed_form(&SetSpec::integers([2u32, 4]).unwrap()).unwrap();
        assert_close(s.values(), &[2f64.sqrt(), -(2f64.sqrt())], 1e-15);
        let numeric = lcmgcd_spectrum(&SetSpec::integers([2u32, 4]).unwrap());
        assert_close(numeric.values(), s.values(), 1e-9);

        let s = lcmgcd_small_closed_form(&SetSpec::integers([4u32, 6]).unwrap()).unwrap();
        assert_close(s.values(), &[6f64.sqrt(), -(6f64.sqrt())], 1e-12);
    }

    #[test]
    fn lcmgcd_closed_form_triples() {
        let s = lcmgcd_small_closed_form(&SetSpec::integers([1u32, 2, 3]).unwrap()).unwrap();
        assert_close(s.values(), &[6f64.sqrt(), -1.0, -(6f64.sqrt())], 1e-15);
        let numeric = lcmgcd_spectrum(&SetSpec::integers([1u32, 2, 3]).unwrap());
        assert_close(numeric.values(), s.values(), 1e-9);

        // unordered input is fine; the closed form sorts internally
        let s = lcmgcd_small_closed_form(&SetSpec::integers([7u32, 1, 4]).unwrap()).unwrap();
        assert_close(s.values(), &[28f64.sqrt(), -1.0, -(28f64.sqrt())], 1e-12);
    }

    #[test]
    fn lcmgcd_closed_form_rejects_unsupported_shapes() {
        let err = lcmgcd_small_closed_form(&SetSpec::integers([2u32, 3, 5]).unwrap());
        assert!(matches!(err, Err(Error::UnsupportedSet(_))));
        let err = lcmgcd_small_closed_form(&SetSpec::integers([1u32, 2, 4]).unwrap());
        assert!(matches!(err, Err(Error::UnsupportedSet(_))));
        let err = lcmgcd_small_closed_form(&SetSpec::integers([5u32]).unwrap());
        assert!(matches!(err, Err(Error::UnsupportedSet(_))));
        let err = lcmgcd_small_closed_form(&SetSpec::integers([1u32, 2, 3, 4]).unwrap());
        assert!(matches!(err, Err(Error::UnsupportedSet(_))));
        // fractional sets have no lcm/gcd structure at all
        let t = SetSpec::reals(["3/2", "2"].iter().map(|s| s.parse().unwrap())).unwrap();
        assert!(matches!(
            lcmgcd_small_closed_form(&t),
            Err(Error::InvalidSet(_))
        ));
    }

    #[test]
    fn cluster_report_examples() {
        let t = SetSpec::consecutive(1, 10).unwrap();
        let m = build_max_matrix(&t).to_real();
        let n = build_min_matrix(&t).to_real();
        let s = generalized_eigenvalues(&m, &n, DEFAULT_PD_TOLERANCE).unwrap();
        let report = cluster_count(&s, -1.0, 1e-8);
        assert_eq!(report.count(), 8);
        assert_eq!(report.members, (2..=9).collect::<Vec<_>>());

        let ones = Spectrum::from_unsorted(vec![1.0, 1.0, 1.0]);
        assert_eq!(cluster_count(&ones, -1.0, 1e-8).count(), 0);

        let s = lcmgcd_spectrum(&SetSpec::consecutive(1, 4).unwrap());
        let report = cluster_count(&s, -1.0, 1e-6);
        assert_eq!(report.count(), 2);
        assert_eq!(report.members, vec![2, 3]);
    }

    #[test]
    fn eigenvalue_sum_preserves_trace() {
        let t = SetSpec::consecutive(1, 8).unwrap();
        let l = build_lcm_matrix(&t).unwrap().to_real();
        let g = build_gcd_matrix(&t).unwrap().to_real();
        let c = reduce_to_standard(&l, &g, DEFAULT_PD_TOLERANCE).unwrap();
        let trace: f64 = (0..c.order()).map(|i| c.get(i, i)).sum();
        let s = generalized_eigenvalues(&l, &g, DEFAULT_PD_TOLERANCE).unwrap();
        let sum: f64 = s.values().iter().sum();
        let scale: f64 = c.entries().iter().map(|e| e * e).sum::<f64>().sqrt();
        assert!((trace - sum).abs() <= 1e-9 * scale.max(1.0));
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let a = real(&[&[1.0]]);
        let b = real(&[&[1.0, 0.0], &[0.0, 1.0]]);
        assert!(matches!(
            generalized_eigenvalues(&a, &b, DEFAULT_PD_TOLERANCE),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn asymmetric_first_matrix_is_rejected() {
        let a = real(&[&[1.0, 2.0], &[0.0, 1.0]]);
        let b = real(&[&[1.0, 0.0], &[0.0, 1.0]]);
        assert!(matches!(
            generalized_eigenvalues(&a, &b, DEFAULT_PD_TOLERANCE),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn empty_pencil_has_empty_spectrum() {
        let a: RealMatrix = Matrix::from_rows(Vec::new()).unwrap();
        let s = generalized_eigenvalues(&a, &a, DEFAULT_PD_TOLERANCE).unwrap();
        assert_eq!(s.order(), 0);
    }

    #[test]
    fn positive_count_uses_slack() {
        let s = Spectrum::from_unsorted(vec![2.0, 1e-7, -0.5]);
        assert_eq!(s.positive_count(), 1);
    }

    mod proptests {
        use super::*;
        use proptest::prelude::*;

        fn arb_symmetric_pencil() -> impl Strategy<Value = (Vec<f64>, Vec<f64>, usize)> {
            (2usize..=6).prop_flat_map(|n| {
                let a = proptest::collection::vec(-5.0f64..5.0, n * n);
                let r = proptest::collection::vec(-1.0f64..1.0, n * n);
                (a, r, Just(n))
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn solver_conserves_trace_and_respects_order((a_raw, r_raw, n) in arb_symmetric_pencil()) {
                let a = RealMatrix::from_fn(n, |i, j| 0.5 * (a_raw[i * n + j] + a_raw[j * n + i]));
                // B = RᵀR + I is symmetric positive definite
                let b = RealMatrix::from_fn(n, |i, j| {
                    let dot: f64 = (0..n).map(|k| r_raw[k * n + i] * r_raw[k * n + j]).sum();
                    dot + if i == j { 1.0 } else { 0.0 }
                });
                let s = generalized_eigenvalues(&a, &b, DEFAULT_PD_TOLERANCE).unwrap();
                prop_assert_eq!(s.order(), n);
                for w in s.values().windows(2) {
                    prop_assert!(w[0] >= w[1]);
                }
                let c = reduce_to_standard(&a, &b, DEFAULT_PD_TOLERANCE).unwrap();
                let trace: f64 = (0..n).map(|i| c.get(i, i)).sum();
                let sum: f64 = s.values().iter().sum();
                let scale: f64 = c.entries().iter().map(|e| e * e).sum::<f64>().sqrt();
                prop_assert!((trace - sum).abs() <= 1e-9 * scale.max(1.0));
            }
        }
    }
}
