//! Arbitrary-precision integer polynomials in one variable, with exact
//! synthetic division and evaluation in the quadratic ring a + b√m.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Polynomial with integer coefficients, stored in ascending order
/// (c₀, c₁, …, c_d). Canonical form: no trailing zero coefficients; the
/// zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients (c₀, …, c_d); empty for the zero polynomial.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of λᵏ (zero beyond the degree).
    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn max_abs_coefficient(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Exact Horner evaluation at an integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Floating-point Horner evaluation (coefficients rounded to f64).
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().expect("coefficient fits in f64");
        }
        acc
    }

    /// Exact Horner evaluation at √m with the reduction (√m)² = m.
    ///
    /// `m` must be positive and not a perfect square, so that the result
    /// a + b√m vanishes iff a = b = 0.
    pub fn eval_surd(&self, m: u64) -> Result<SurdValue> {
        if m == 0 {
            return Err(Error::InvalidParameter("radicand must be positive".into()));
        }
        let root = m.isqrt();
        if root * root == m {
            return Err(Error::InvalidParameter(format!(
                "radicand {m} is a perfect square ({root}²); evaluate at the integer root instead"
            )));
        }
        let big_m = BigInt::from(m);
        let mut a = BigInt::zero();
        let mut b = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            // (a + b√m)·√m + c = (b·m + c) + a√m
            let new_a = &b * &big_m + c;
            b = std::mem::replace(&mut a, new_a);
        }
        Ok(SurdValue {
            rational_part: a,
            surd_part: b,
            radicand: m,
        })
    }

    /// Divide by (λ − r); returns (quotient, remainder). Exact integer
    /// synthetic division — the remainder equals `self.eval(r)`.
    pub fn synthetic_div(&self, r: &BigInt) -> (IntPolynomial, BigInt) {
        if self.is_zero() {
            return (IntPolynomial::zero(), BigInt::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut quotient = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for k in (0..=d).rev() {
            let value = &self.coeffs[k] + &carry;
            if k == 0 {
                return (IntPolynomial::new(quotient), value);
            }
            carry = &value * r;
            quotient[k - 1] = value;
        }
        unreachable!("loop returns at k = 0");
    }

    /// Largest k with (λ − r)ᵏ dividing the polynomial, by repeated exact
    /// synthetic division.
    pub fn root_multiplicity(&self, r: &BigInt) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::InvalidParameter(
                "root multiplicity is undefined for the zero polynomial".into(),
            ));
        }
        let mut count = 0;
        let mut current = self.clone();
        loop {
            let (quotient, remainder) = current.synthetic_div(r);
            if !remainder.is_zero() {
                return Ok(count);
            }
            count += 1;
            current = quotient;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..len)
                .map(|k| self.coefficient(k) + other.coefficient(k))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divide every coefficient by `c`, which must divide exactly.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::InvalidParameter("division by zero".into()));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            let (q, r) = num_integer::Integer::div_rem(x, c);
            if !r.is_zero() {
                return Err(Error::Internal(format!(
                    "coefficient {x} is not divisible by {c}"
                )));
            }
            out.push(q);
        }
        Ok(Self::new(out))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !num_traits::One::is_one(&mag) {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "λ")?;
                    } else {
                        write!(f, "λ^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exact value a + b√m with m positive and not a perfect square, so the
/// value is zero iff a = b = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdValue {
    pub rational_part: BigInt,
    pub surd_part: BigInt,
    pub radicand: u64,
}

impl SurdValue {
    pub fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.surd_part.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.rational_part.to_f64().expect("fits in f64")
            + self.surd_part.to_f64().expect("fits in f64") * (self.radicand as f64).sqrt()
    }
}

impl fmt::Display for SurdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd_part.is_zero() {
            return write!(f, "{}", self.rational_part);
        }
        let mag = self.surd_part.abs();
        let sign = if self.surd_part.is_negative() {
            "-"
        } else {
            "+"
        };
        if self.rational_part.is_zero() {
            if self.surd_part.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{} {} ", self.rational_part, sign)?;
        }
        if num_traits::One::is_one(&mag) {
            write!(f, "√{}", self.radicand)
        } else {
            write!(f, "{}√{}", mag, self.radicand)
        }
    }
}
