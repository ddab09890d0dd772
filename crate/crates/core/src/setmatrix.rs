//! Set specifications, dense square matrices, and the four structured
//! constructions (MAX, MIN, LCM, GCD), plus simultaneous row/column
//! permutations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::{Error, Result};

// --- sets -------------------------------------------------------------

/// Whether a set carries real (rational) or integer elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    Real,
    Integer,
}

/// An ordered finite set of strictly positive, pairwise distinct values.
///
/// Elements are kept exact — integers for integer sets, rationals for real
/// sets — and are converted to floating point only at the numeric-solver
/// boundary. Input order is preserved; sortedness is never required.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSpec {
    values: SetValues,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum SetValues {
    Integers(Vec<BigInt>),
    Reals(Vec<BigRational>),
}

impl SetSpec {
    /// Integer set from any integer-like values, in the given order.
    pub fn integers<I, T>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let values: Vec<BigInt> = values.into_iter().map(Into::into).collect();
        if values.is_empty() {
            return Err(Error::InvalidSet("set must be non-empty".into()));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_positive()) {
            return Err(Error::InvalidSet(format!(
                "integer set elements must be >= 1, got {bad}"
            )));
        }
        check_distinct(&values)?;
        Ok(Self {
            values: SetValues::Integers(values),
        })
    }

    /// The consecutive integer set {lo, lo+1, …, hi}.
    pub fn consecutive(lo: u64, hi: u64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidSet(format!("empty range {lo}..={hi}")));
        }
        Self::integers((lo..=hi).map(BigInt::from))
    }

    /// Real set from exact rationals, in the given order.
    pub fn reals<I>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = BigRational>,
    {
        let values: Vec<BigRational> = values.into_iter().collect();
        if values.is_empty() {
            return Err(Error::InvalidSet("set must be non-empty".into()));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_positive()) {
            return Err(Error::InvalidSet(format!(
                "set elements must be strictly positive, got {bad}"
            )));
        }
        check_distinct(&values)?;
        Ok(Self {
            values: SetValues::Reals(values),
        })
    }

    pub fn kind(&self) -> SetKind {
        match &self.values {
            SetValues::Integers(_) => SetKind::Integer,
            SetValues::Reals(_) => SetKind::Real,
        }
    }

    pub fn len(&self) -> usize {
        match &self.values {
            SetValues::Integers(v) => v.len(),
            SetValues::Reals(v) => v.len(),
        }
    }

    /// Always false: empty sets are rejected at construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Elements as exact rationals (integers get denominator 1).
    pub fn rational_elements(&self) -> Vec<BigRational> {
        match &self.values {
            SetValues::Integers(v) => v
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
            SetValues::Reals(v) => v.clone(),
        }
    }

    /// Elements as exact integers, or `InvalidSet` if any element is not an
    /// integer. Integer-valued real sets qualify.
    pub fn integer_elements(&self) -> Result<Vec<BigInt>> {
        match &self.values {
            SetValues::Integers(v) => Ok(v.clone()),
            SetValues::Reals(v) => v
                .iter()
                .map(|x| {
                    if x.is_integer() {
                        Ok(x.to_integer())
                    } else {
                        Err(Error::InvalidSet(format!("element {x} is not an integer")))
                    }
                })
                .collect(),
        }
    }

    /// Elements converted to f64 (numeric-solver boundary).
    pub fn f64_elements(&self) -> Vec<f64> {
        self.rational_elements()
            .iter()
            .map(|x| x.to_f64().expect("positive rational fits in f64"))
            .collect()
    }

    /// (min, max) of the elements, exact.
    pub fn extremes(&self) -> (BigRational, BigRational) {
        let elems = self.rational_elements();
        let mut min = elems[0].clone();
        let mut max = elems[0].clone();
        for e in &elems[1..] {
            if *e < min {
                min = e.clone();
            }
            if *e > max {
                max = e.clone();
            }
        }
        (min, max)
    }
}

fn check_distinct<T: PartialEq + std::fmt::Display>(values: &[T]) -> Result<()> {
    for (i, a) in values.iter().enumerate() {
        if values[i + 1..].contains(a) {
            return Err(Error::InvalidSet(format!("duplicate element {a}")));
        }
    }
    Ok(())
}

// --- matrices ----------------------------------------------------------

/// Dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    order: usize,
    entries: Vec<T>,
}

pub type BigIntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;
pub type RealMatrix = Matrix<f64>;

impl<T> Matrix<T> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.order + j] = value;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.order.max(1))
    }
}

impl<T: Clone> Matrix<T> {
    /// Build an n×n matrix from an entry function of (row, column).
    pub fn from_fn<F>(order: usize, mut entry: F) -> Self
    where
        F: FnMut(usize, usize) -> T,
    {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(entry(i, j));
            }
        }
        Self { order, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::DimensionMismatch(
                "matrix rows must all have length equal to the row count".into(),
            ));
        }
        Ok(Self {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn map<U, F>(&self, f: F) -> Matrix<U>
    where
        F: FnMut(&T) -> U,
        U: Clone,
    {
        Matrix {
            order: self.order,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<T: PartialEq> Matrix<T> {
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.order {
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }
}

impl BigIntMatrix {
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::DimensionMismatch(format!(
                "cannot add order {} to order {}",
                self.order, other.order
            )));
        }
        Ok(Matrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// `self − k·other`, exact.
    pub fn sub_scaled(&self, other: &Self, k: &BigInt) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::DimensionMismatch(format!(
                "cannot combine order {} with order {}",
                self.order, other.order
            )));
        }
        Ok(Matrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - k * b)
                .collect(),
        })
    }

    pub fn to_real(&self) -> RealMatrix {
        self.map(|x| x.to_f64().expect("matrix entry fits in f64"))
    }
}

impl RatMatrix {
    pub fn to_real(&self) -> RealMatrix {
        self.map(|x| x.to_f64().expect("matrix entry fits in f64"))
    }

    /// Exact integer matrix, or `InvalidParameter` if an entry is fractional.
    pub fn to_bigint(&self) -> Result<BigIntMatrix> {
        if let Some(bad) = self.entries.iter().find(|x| !x.is_integer()) {
            return Err(Error::InvalidParameter(format!(
                "matrix entry {bad} is not an integer; exact paths need integer entries"
            )));
        }
        Ok(self.map(|x| x.to_integer()))
    }
}

// --- structured constructions -------------------------------------------

/// MAX matrix: entry (i,j) = max(sᵢ, sⱼ).
pub fn build_max_matrix(s: &SetSpec) -> RatMatrix {
    let e = s.rational_elements();
    Matrix::from_fn(e.len(), |i, j| e[i].clone().max(e[j].clone()))
}

/// MIN matrix: entry (i,j) = min(sᵢ, sⱼ).
pub fn build_min_matrix(s: &SetSpec) -> RatMatrix {
    let e = s.rational_elements();
    Matrix::from_fn(e.len(), |i, j| e[i].clone().min(e[j].clone()))
}

/// GCD matrix: entry (i,j) = gcd(tᵢ, tⱼ). Requires an integer-valued set.
pub fn build_gcd_matrix(t: &SetSpec) -> Result<BigIntMatrix> {
    let e = t.integer_elements()?;
    Ok(Matrix::from_fn(e.len(), |i, j| e[i].gcd(&e[j])))
}

/// LCM matrix: entry (i,j) = lcm(tᵢ, tⱼ) = tᵢ·tⱼ / gcd(tᵢ, tⱼ), exact.
pub fn build_lcm_matrix(t: &SetSpec) -> Result<BigIntMatrix> {
    let e = t.integer_elements()?;
    Ok(Matrix::from_fn(e.len(), |i, j| {
        &e[i] / e[i].gcd(&e[j]) * &e[j]
    }))
}

// --- permutations ---------------------------------------------------------

/// A permutation σ of {1,…,n}, stored as its 1-based image array
/// (σ(1), …, σ(n)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Validate and wrap a 1-based image array.
    pub fn from_one_based(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::InvalidParameter(
                "permutation image array must be non-empty".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &v in &image {
            if v < 1 || v > n {
                return Err(Error::InvalidParameter(format!(
                    "permutation value {v} outside 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidParameter(format!(
                    "permutation value {v} repeats"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            image: (1..=n).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.image.len()
    }

    /// The 1-based image array.
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// σ(i) with 0-based input and output.
    fn apply(&self, i: usize) -> usize {
        self.image[i] - 1
    }
}

/// Simultaneous row/column relabeling: entry (i,j) of the result is entry
/// (σ(i), σ(j)) of `x`. No permutation matrix is materialized.
pub fn permute_conjugate<T: Clone>(x: &Matrix<T>, sigma: &Permutation) -> Result<Matrix<T>> {
    if sigma.order() != x.order() {
        return Err(Error::DimensionMismatch(format!(
            "permutation order {} does not match matrix order {}",
            sigma.order(),
            x.order()
        )));
    }
    Ok(Matrix::from_fn(x.order(), |i, j| {
        x.get(sigma.apply(i), sigma.apply(j)).clone()
    }))
}

// ---------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> BigIntMatrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn rat_matrix_as_ints(m: &RatMatrix) -> BigIntMatrix {
        m.to_bigint().unwrap()
    }

    #[test]
    fn set_constructors_validate() {
        assert!(matches!(
            SetSpec::integers(Vec::<i64>::new()),
            Err(Error::InvalidSet(_))
        ));
        assert!(matches!(
            SetSpec::integers(vec![1, 2, 2]),
            Err(Error::InvalidSet(_))
        ));
        assert!(matches!(
            SetSpec::integers(vec![0, 1]),
            Err(Error::InvalidSet(_))
        ));
        assert!(matches!(
            SetSpec::integers(vec![-3]),
            Err(Error::InvalidSet(_))
        ));
        // Unsorted input is accepted and kept in order.
        let s = SetSpec::integers(vec![3, 1, 2]).unwrap();
        assert_eq!(s.f64_elements(), vec![3.0, 1.0, 2.0]);
        assert_eq!(s.kind(), SetKind::Integer);
    }

    #[test]
    fn real_set_rejects_nonpositive_and_duplicates() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert!(SetSpec::reals(vec![half.clone(), BigRational::from_integer(2.into())]).is_ok());
        assert!(SetSpec::reals(vec![half.clone(), half.clone()]).is_err());
        assert!(SetSpec::reals(vec![-half]).is_err());
        assert!(SetSpec::reals(Vec::new()).is_err());
    }

    #[test]
    fn max_min_small_examples() {
        let s = SetSpec::integers(vec![1, 2]).unwrap();
        assert_eq!(
            rat_matrix_as_ints(&build_max_matrix(&s)),
            int_matrix(&[&[1, 2], &[2, 2]])
        );
        assert_eq!(
            rat_matrix_as_ints(&build_min_matrix(&s)),
            int_matrix(&[&[1, 1], &[1, 2]])
        );

        let singleton = SetSpec::integers(vec![5]).unwrap();
        assert_eq!(
            rat_matrix_as_ints(&build_max_matrix(&singleton)),
            int_matrix(&[&[5]])
        );
        assert_eq!(
            rat_matrix_as_ints(&build_min_matrix(&singleton)),
            int_matrix(&[&[5]])
        );
    }

    #[test]
    fn max_min_order_four() {
        let s = SetSpec::consecutive(1, 4).unwrap();
        assert_eq!(
            rat_matrix_as_ints(&build_max_matrix(&s)),
            int_matrix(&[&[1, 2, 3, 4], &[2, 2, 3, 4], &[3, 3, 3, 4], &[4, 4, 4, 4],])
        );
        assert_eq!(
            rat_matrix_as_ints(&build_min_matrix(&s)),
            int_matrix(&[&[1, 1, 1, 1], &[1, 2, 2, 2], &[1, 2, 3, 3], &[1, 2, 3, 4],])
        );
    }

    #[test]
    fn gcd_lcm_examples() {
        let t = SetSpec::consecutive(1, 3).unwrap();
        assert_eq!(
            build_gcd_matrix(&t).unwrap(),
            int_matrix(&[&[1, 1, 1], &[1, 2, 1], &[1, 1, 3]])
        );
        assert_eq!(
            build_lcm_matrix(&t).unwrap(),
            int_matrix(&[&[1, 2, 3], &[2, 2, 6], &[3, 6, 3]])
        );

        let t = SetSpec::integers(vec![2, 3, 5]).unwrap();
        assert_eq!(
            build_gcd_matrix(&t).unwrap(),
            int_matrix(&[&[2, 1, 1], &[1, 3, 1], &[1, 1, 5]])
        );
        assert_eq!(
            build_lcm_matrix(&t).unwrap(),
            int_matrix(&[&[2, 6, 10], &[6, 3, 15], &[10, 15, 5]])
        );

        let t = SetSpec::consecutive(1, 4).unwrap();
        assert_eq!(
            build_gcd_matrix(&t).unwrap(),
            int_matrix(&[&[1, 1, 1, 1], &[1, 2, 1, 2], &[1, 1, 3, 1], &[1, 2, 1, 4],])
        );

        // Prime-power set: LCM matrix coincides with the MAX matrix.
        let t = SetSpec::integers(vec![1, 2, 4]).unwrap();
        let l = build_lcm_matrix(&t).unwrap();
        assert_eq!(l, int_matrix(&[&[1, 2, 4], &[2, 2, 4], &[4, 4, 4]]));
        assert_eq!(l, rat_matrix_as_ints(&build_max_matrix(&t)));
        assert_eq!(
            build_gcd_matrix(&t).unwrap(),
            rat_matrix_as_ints(&build_min_matrix(&t))
        );
    }

    #[test]
    fn gcd_requires_integer_values() {
        let half = BigRational::new(BigInt::from(3), BigInt::from(2));
        let s = SetSpec::reals(vec![half, BigRational::from_integer(2.into())]).unwrap();
        assert!(matches!(build_gcd_matrix(&s), Err(Error::InvalidSet(_))));
        assert!(matches!(build_lcm_matrix(&s), Err(Error::InvalidSet(_))));
        // ...but an integer-valued real set is fine.
        let s = SetSpec::reals(vec![
            BigRational::from_integer(2.into()),
            BigRational::from_integer(3.into()),
        ])
        .unwrap();
        assert!(build_gcd_matrix(&s).is_ok());
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::from_one_based(vec![2, 1]).is_ok());
        assert!(matches!(
            Permutation::from_one_based(vec![]),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            Permutation::from_one_based(vec![1, 1]),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            Permutation::from_one_based(vec![0, 1]),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            Permutation::from_one_based(vec![1, 3]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn permute_conjugate_examples() {
        let x = int_matrix(&[&[1, 2], &[2, 2]]);
        let id = Permutation::identity(2);
        assert_eq!(permute_conjugate(&x, &id).unwrap(), x);

        let swap = Permutation::from_one_based(vec![2, 1]).unwrap();
        assert_eq!(
            permute_conjugate(&x, &swap).unwrap(),
            int_matrix(&[&[2, 2], &[2, 1]])
        );

        let sigma3 = Permutation::from_one_based(vec![3, 1, 2]).unwrap();
        assert!(matches!(
            permute_conjugate(&x, &sigma3),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn extremes_and_len() {
        let s = SetSpec::integers(vec![7, 2, 9, 4]).unwrap();
        let (min, max) = s.extremes();
        assert_eq!(min, BigRational::from_integer(2.into()));
        assert_eq!(max, BigRational::from_integer(9.into()));
        assert_eq!(s.len(), 4);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_int_set() -> impl Strategy<Value = SetSpec> {
            proptest::collection::btree_set(1u64..500, 1..12)
                .prop_map(|s| SetSpec::integers(s.into_iter().map(BigInt::from)).unwrap())
        }

        proptest! {
            #[test]
            fn structured_matrices_are_symmetric_with_element_diagonal(t in arb_int_set()) {
                let e = t.integer_elements().unwrap();
                let l = build_lcm_matrix(&t).unwrap();
                let g = build_gcd_matrix(&t).unwrap();
                let m = build_max_matrix(&t).to_bigint().unwrap();
                let n = build_min_matrix(&t).to_bigint().unwrap();
                for x in [&l, &g, &m, &n] {
                    prop_assert!(x.is_symmetric());
                    for (i, ei) in e.iter().enumerate() {
                        prop_assert_eq!(x.get(i, i), ei);
                    }
                }
            }

            #[test]
            fn entrywise_duality(t in arb_int_set()) {
                let e = t.integer_elements().unwrap();
                let l = build_lcm_matrix(&t).unwrap();
                let g = build_gcd_matrix(&t).unwrap();
                let m = build_max_matrix(&t).to_bigint().unwrap();
                let n = build_min_matrix(&t).to_bigint().unwrap();
                for i in 0..e.len() {
                    for j in 0..e.len() {
                        // lcm·gcd = product, max ≥ min
                        prop_assert_eq!(l.get(i, j) * g.get(i, j), &e[i] * &e[j]);
                        prop_assert!(m.get(i, j) >= n.get(i, j));
                    }
                }
            }

            #[test]
            fn permute_conjugate_is_an_involution_for_swaps(t in arb_int_set()) {
                let l = build_lcm_matrix(&t).unwrap();
                let n = l.order();
                prop_assume!(n >= 2);
                let mut image: Vec<usize> = (1..=n).collect();
                image.swap(0, n - 1);
                let sigma = Permutation::from_one_based(image).unwrap();
                let once = permute_conjugate(&l, &sigma).unwrap();
                let twice = permute_conjugate(&once, &sigma).unwrap();
                prop_assert_eq!(twice, l);
            }
        }
    }
}
