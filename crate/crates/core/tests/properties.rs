//! End-to-end invariants spanning set-matrix construction, exact
//! elimination, and the floating-point pencil solver.

use eigenpencil::exactdet::{bareiss_determinant, pencil_charpoly};
use eigenpencil::pencilsolve::{cluster_count, generalized_eigenvalues, DEFAULT_PD_TOLERANCE};
use eigenpencil::setmatrix::{
    build_gcd_matrix, build_lcm_matrix, build_max_matrix, build_min_matrix, permute_conjugate,
    BigIntMatrix, Matrix, Permutation, RealMatrix, SetSpec,
};
use eigenpencil::BigInt;
use num_traits::ToPrimitive;
use rand::{rngs::StdRng, Rng, SeedableRng};

/// (lcm matrix, gcd matrix) for {1, …, n}.
fn consecutive_pencil(n: u64) -> (BigIntMatrix, BigIntMatrix) {
    let t = SetSpec::consecutive(1, n).expect("n >= 1");
    let l = build_lcm_matrix(&t).expect("integer set");
    let g = build_gcd_matrix(&t).expect("integer set");
    (l, g)
}

#[allow(clippy::needless_range_loop)]
fn random_symmetric_matrix(rng: &mut StdRng, n: usize) -> BigIntMatrix {
    let mut rows = vec![vec![BigInt::from(0); n]; n];
    for i in 0..n {
        for j in i..n {
            let e = BigInt::from(rng.gen_range(-9i64..=9));
            rows[i][j] = e.clone();
            rows[j][i] = e;
        }
    }
    Matrix::from_rows(rows).expect("square by construction")
}

fn random_permutation(rng: &mut StdRng, n: usize) -> Permutation {
    let mut image: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        image.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_one_based(image).expect("valid bijection")
}

fn random_integer_set(rng: &mut StdRng, n: usize, max: u64) -> Vec<u64> {
    let mut values = std::collections::BTreeSet::new();
    while values.len() < n {
        values.insert(rng.gen_range(1..=max));
    }
    values.into_iter().collect()
}

/// Naive cofactor expansion along the first row; independent of the
/// fraction-free elimination used by `bareiss_determinant`.
fn cofactor_determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut det = BigInt::from(0);
    for (j, pivot) in rows[0].iter().enumerate() {
        let minor: Vec<Vec<BigInt>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = pivot * cofactor_determinant(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

fn totient(n: u64) -> u64 {
    (1..=n).filter(|k| gcd(*k, n) == 1).count() as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn determinant_unchanged_by_permutation_conjugation() {
    // Fixed case: the sum of the lcm and gcd matrices on {1, 2, 3, 4}.
    let (l, g) = consecutive_pencil(4);
    let x = l.add(&g).expect("same order");
    let sigma = Permutation::from_one_based(vec![3, 1, 4, 2]).expect("bijection");
    let conjugated = permute_conjugate(&x, &sigma).expect("orders match");
    assert_eq!(bareiss_determinant(&conjugated), bareiss_determinant(&x));

    // Random symmetric matrices under random conjugations.
    let mut rng = StdRng::seed_from_u64(0x5EED_0001);
    for _ in 0..30 {
        let n = rng.gen_range(1..=6usize);
        let m = random_symmetric_matrix(&mut rng, n);
        let sigma = random_permutation(&mut rng, n);
        let conjugated = permute_conjugate(&m, &sigma).expect("orders match");
        assert_eq!(bareiss_determinant(&conjugated), bareiss_determinant(&m));
    }
}

#[test]
fn gcd_determinant_matches_cofactor_oracle_and_totient_product() {
    for n in 1..=8u64 {
        let t = SetSpec::consecutive(1, n).expect("n >= 1");
        let g = build_gcd_matrix(&t).expect("integer set");
        let fast = bareiss_determinant(&g);

        let rows: Vec<Vec<BigInt>> = g.rows().map(<[BigInt]>::to_vec).collect();
        assert_eq!(
            fast,
            cofactor_determinant(&rows),
            "oracle disagrees at n = {n}"
        );

        let totient_product: BigInt = (1..=n).map(totient).map(BigInt::from).product();
        assert_eq!(
            fast, totient_product,
            "totient product disagrees at n = {n}"
        );
    }
}

#[test]
fn charpoly_identical_and_spectrum_stable_under_element_reordering() {
    let original = SetSpec::integers(1..=8i64).expect("distinct");
    let shuffled = SetSpec::integers([5i64, 2, 7, 1, 8, 3, 6, 4]).expect("distinct");

    // The characteristic polynomial is exactly identical: reordering the
    // elements only conjugates both pencil members by one permutation.
    let p_original = {
        let l = build_lcm_matrix(&original).expect("integers");
        let g = build_gcd_matrix(&original).expect("integers");
        pencil_charpoly(&l, &g).expect("orders match")
    };
    let p_shuffled = {
        let l = build_lcm_matrix(&shuffled).expect("integers");
        let g = build_gcd_matrix(&shuffled).expect("integers");
        pencil_charpoly(&l, &g).expect("orders match")
    };
    assert_eq!(p_original, p_shuffled);

    // The numeric spectrum of the max/min pencil agrees to 1e-9.
    let spectrum = |s: &SetSpec| {
        let m = build_max_matrix(s).to_real();
        let n = build_min_matrix(s).to_real();
        generalized_eigenvalues(&m, &n, DEFAULT_PD_TOLERANCE).expect("definite")
    };
    let a = spectrum(&original);
    let b = spectrum(&shuffled);
    for (x, y) in a.values().iter().zip(b.values()) {
        assert!((x - y).abs() <= 1e-9, "{x} vs {y}");
    }

    // Same check for a non-integer set.
    let rational = |nums: &[(i64, i64)]| {
        SetSpec::reals(
            nums.iter()
                .map(|&(p, q)| eigenpencil::BigRational::new(BigInt::from(p), BigInt::from(q))),
        )
        .expect("distinct positive rationals")
    };
    let real_original = rational(&[(3, 2), (2, 1), (7, 3), (9, 1)]);
    let real_shuffled = rational(&[(9, 1), (3, 2), (7, 3), (2, 1)]);
    let a = spectrum(&real_original);
    let b = spectrum(&real_shuffled);
    for (x, y) in a.values().iter().zip(b.values()) {
        assert!((x - y).abs() <= 1e-9, "{x} vs {y}");
    }
}

#[test]
fn numeric_eigenvalues_are_near_roots_of_exact_charpoly() {
    let mut pencils: Vec<(BigIntMatrix, BigIntMatrix)> = (2..=6).map(consecutive_pencil).collect();
    let mut rng = StdRng::seed_from_u64(0x5EED_0002);
    for _ in 0..10 {
        let n = rng.gen_range(2..=6usize);
        let elements = random_integer_set(&mut rng, n, 40);
        let t = SetSpec::integers(elements.iter().map(|&v| BigInt::from(v))).expect("distinct");
        let l = build_lcm_matrix(&t).expect("integers");
        let g = build_gcd_matrix(&t).expect("integers");
        pencils.push((l, g));
    }

    for (l, g) in &pencils {
        let p = pencil_charpoly(l, g).expect("orders match");
        let spectrum = generalized_eigenvalues(&l.to_real(), &g.to_real(), DEFAULT_PD_TOLERANCE)
            .expect("gcd matrix is positive definite");
        let bound = 1e-6 * (1.0 + p.max_abs_coefficient().to_f64().expect("fits in f64"));
        for &lambda in spectrum.values() {
            let residual = p.eval_f64(lambda).abs();
            assert!(
                residual <= bound,
                "|p({lambda})| = {residual} exceeds {bound}"
            );
        }
    }
}

#[test]
fn spectrum_invariant_under_positive_scaling_of_both_members() {
    let scale = |m: &RealMatrix, c: f64| m.map(|e| e * c);

    let (l, g) = consecutive_pencil(6);
    let (a, b) = (l.to_real(), g.to_real());
    let reference = generalized_eigenvalues(&a, &b, DEFAULT_PD_TOLERANCE).expect("definite");
    for c in [0.25, 3.0] {
        let scaled = generalized_eigenvalues(&scale(&a, c), &scale(&b, c), DEFAULT_PD_TOLERANCE)
            .expect("scaling keeps definiteness");
        for (x, y) in reference.values().iter().zip(scaled.values()) {
            assert!(
                (x - y).abs() <= 1e-9 * x.abs().max(1.0),
                "{x} vs {y} at c = {c}"
            );
        }
    }

    // A max/min pencil behaves the same way.
    let t = SetSpec::integers([2i64, 5, 11, 13]).expect("distinct");
    let (a, b) = (
        build_max_matrix(&t).to_real(),
        build_min_matrix(&t).to_real(),
    );
    let reference = generalized_eigenvalues(&a, &b, DEFAULT_PD_TOLERANCE).expect("definite");
    let scaled =
        generalized_eigenvalues(&scale(&a, 0.125), &scale(&b, 0.125), DEFAULT_PD_TOLERANCE)
            .expect("scaling keeps definiteness");
    for (x, y) in reference.values().iter().zip(scaled.values()) {
        assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0), "{x} vs {y}");
    }
}

#[test]
fn mixed_pencil_from_shifted_set_keeps_minus_one_cluster() {
    // Pair the max matrix of {1, 2, 3, 4} with the min matrix of the set
    // shifted by a positive constant: the -1 cluster keeps exactly n - 2
    // members even though the two matrices come from different sets.
    let base = SetSpec::integers(1..=4i64).expect("distinct");
    let a = build_max_matrix(&base).to_real();
    for shift in [1i64, 5] {
        let shifted = SetSpec::integers((1..=4i64).map(|v| v + shift)).expect("distinct");
        let b = build_min_matrix(&shifted).to_real();
        let spectrum = generalized_eigenvalues(&a, &b, DEFAULT_PD_TOLERANCE).expect("definite");
        assert_eq!(spectrum.order(), 4);
        assert_eq!(
            cluster_count(&spectrum, -1.0, 1e-6).count(),
            2,
            "shift {shift}: spectrum {:?}",
            spectrum.values()
        );
    }
}

#[test]
fn exact_float_and_multiplicity_views_of_minus_one_agree() {
    for n in 1..=12u64 {
        let (l, g) = consecutive_pencil(n);

        // Exact: -1 is an eigenvalue iff det(L + G) vanishes.
        let sum = l.add(&g).expect("same order");
        let exact = bareiss_determinant(&sum) == BigInt::from(0);

        // Float: the solver places an eigenvalue within 1e-6 of -1.
        let spectrum = generalized_eigenvalues(&l.to_real(), &g.to_real(), DEFAULT_PD_TOLERANCE)
            .expect("gcd matrix is positive definite");
        let float = cluster_count(&spectrum, -1.0, 1e-6).count() >= 1;

        // Exact polynomial: root multiplicity at -1 is positive.
        let p = pencil_charpoly(&l, &g).expect("orders match");
        let multiplicity = p
            .root_multiplicity(&BigInt::from(-1))
            .expect("nonzero polynomial");

        assert_eq!(exact, float, "n = {n}: exact and float views disagree");
        assert_eq!(
            exact,
            multiplicity >= 1,
            "n = {n}: determinant and multiplicity views disagree"
        );
    }
}
