//! Exact integer linear algebra: fraction-free determinants, modular
//! determinant zero-testing, and characteristic polynomials of matrix
//! pencils recovered by exact interpolation.

mod modular;
mod poly;

pub use modular::{modular_zero_test, Verdict, ZeroTestVerdict};
pub use poly::{IntPolynomial, SurdValue};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::setmatrix::BigIntMatrix;
use crate::{Error, Result};

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every interior division is exact, so intermediate entries stay minors
/// of the input rather than exploding like naive fraction arithmetic.
/// Row swaps flip the sign; the empty matrix has determinant 1.
pub fn bareiss_determinant(m: &BigIntMatrix) -> BigInt {
    let n = m.order();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<BigInt> = m.entries().to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();

    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for c in k..n {
                a.swap(k * n + c, swap * n + c);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let numerator = &pivot * &a[i * n + j] - &a[i * n + k] * &a[k * n + j];
                let (quotient, remainder) = numerator.div_rem(&prev);
                debug_assert!(
                    remainder.is_zero(),
                    "fraction-free step must divide exactly"
                );
                a[i * n + j] = quotient;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }

    let det = a[n * n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Exact characteristic polynomial p(λ) = det(A − λB) of the pencil (A, B).
///
/// det(A − λB) is a polynomial of degree ≤ n with integer coefficients, so
/// it is recovered exactly from its values at λ = 0, 1, …, n: each value is
/// a Bareiss determinant, and Lagrange interpolation on consecutive nodes
/// reduces to a single division by n! per coefficient. Any nonzero
/// remainder in that division would falsify the degree bound and is
/// reported as an internal error.
pub fn pencil_charpoly(a: &BigIntMatrix, b: &BigIntMatrix) -> Result<IntPolynomial> {
    if a.order() != b.order() {
        return Err(Error::DimensionMismatch(format!(
            "pencil matrices have orders {} and {}",
            a.order(),
            b.order()
        )));
    }
    let n = a.order();
    let values: Vec<BigInt> = (0..=n)
        .map(|k| {
            let shifted = a
                .sub_scaled(b, &BigInt::from(k))
                .expect("orders already validated");
            bareiss_determinant(&shifted)
        })
        .collect();
    interpolate_on_initial_integers(&values)
}

/// Interpolate the unique integer polynomial of degree ≤ n through the
/// points (k, values[k]) for k = 0..=n.
///
/// With consecutive integer nodes the Lagrange basis shares the common
/// denominator n!: Σₖ vₖ·(−1)^(n−k)·C(n,k)·∏_{j≠k}(λ−j) equals n!·p(λ).
fn interpolate_on_initial_integers(values: &[BigInt]) -> Result<IntPolynomial> {
    let n = values.len() - 1;

    // ∏_{j=0}^{n} (λ − j), divided down by one factor per node below.
    let mut full = IntPolynomial::from_i64(&[1]);
    for j in 0..=n {
        full = full.mul(&IntPolynomial::new(vec![
            BigInt::from(-(j as i64)),
            BigInt::one(),
        ]));
    }

    let mut binomial = BigInt::one(); // C(n, k), updated incrementally
    let mut sum = IntPolynomial::zero();
    for (k, value) in values.iter().enumerate() {
        if k > 0 {
            // C(n,k) = C(n,k−1)·(n−k+1)/k, always exact
            binomial = binomial * BigInt::from((n - k + 1) as u64) / BigInt::from(k as u64);
        }
        if value.is_zero() {
            continue;
        }
        let (basis, remainder) = full.synthetic_div(&BigInt::from(k as u64));
        debug_assert!(
            remainder.is_zero(),
            "node {k} is a root of the full product"
        );
        let mut weight = value * &binomial;
        if (n - k) % 2 == 1 {
            weight = -weight;
        }
        sum = sum.add(&basis.scale(&weight));
    }

    let mut factorial = BigInt::one();
    for j in 2..=n {
        factorial *= BigInt::from(j as u64);
    }
    let p = sum.div_exact_scalar(&factorial).map_err(|_| {
        Error::Internal(
            "pencil interpolation left a nonzero remainder; the determinant values \
             are inconsistent with an integer polynomial of the expected degree"
                .into(),
        )
    })?;
    debug_assert!(
        values
            .iter()
            .enumerate()
            .all(|(k, v)| &p.eval(&BigInt::from(k as u64)) == v),
        "interpolant must reproduce every sampled determinant"
    );
    Ok(p)
}
