//! Structured matrices on finite sets and their generalized eigenvalues.
//!
//! Given a finite set of positive values, this crate builds the four classic
//! structured matrices — MAX, MIN, LCM, GCD — and studies the matrix pencils
//! (MAX, MIN) and (LCM, GCD):
//!
//! * exact characteristic polynomials `det(A - λB)` over big integers,
//!   including evaluation in quadratic rings `a + b√m`;
//! * certified or probabilistic zero tests for exact determinants via
//!   modular elimination under a Hadamard bound;
//! * a floating-point symmetric-definite eigensolver (Cholesky reduction +
//!   cyclic Jacobi), with the known closed-form spectra as oracles;
//! * Cauchy interlacing checks between consecutive orders;
//! * an exact scan deciding for which n the pencil (LCM, GCD) on {1,…,n}
//!   has −1 as a generalized eigenvalue, compared against the binary-prefix
//!   predicate (OEIS A004754).

pub mod conjecture;
mod error;
pub mod exactdet;
pub mod interlace;
pub mod pencilsolve;
pub mod setmatrix;
pub mod verify;

pub use error::{Error, Result};

// Re-export the arbitrary-precision scalar types used throughout the API.
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
