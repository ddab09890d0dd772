//! Runnable acceptance checks covering the crate's headline claims.
//!
//! Each criterion is a self-contained function returning a pass/fail
//! outcome with a human-readable detail line; [`run_all`] executes the
//! eleven of them in order. The same checks back the test suite and the
//! CLI `verify` subcommand. Reference values that originate outside this
//! crate are encoded exactly as stated, even where exact recomputation
//! shows them to be unreachable; such checks report their failure and the
//! analysis in the detail string rather than being quietly adjusted.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::conjecture::{a004754_term, binary_begins_10, scan_minus_one};
use crate::exactdet::{
    bareiss_determinant, modular_zero_test, pencil_charpoly, IntPolynomial, Verdict,
};
use crate::interlace::{check_interlacing, leading_principal_submatrix, positive_count_monotone};
use crate::pencilsolve::{
    cluster_count, generalized_eigenvalues, lcmgcd_small_closed_form, maxmin_closed_form, Spectrum,
    DEFAULT_PD_TOLERANCE,
};
use crate::setmatrix::{
    build_gcd_matrix, build_lcm_matrix, build_max_matrix, build_min_matrix, permute_conjugate,
    BigIntMatrix, Matrix, Permutation, RealMatrix, SetSpec,
};
use crate::Result;

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Tunables for the slow criteria.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Upper bound for the probabilistic scan criterion. The full sweep
    /// runs to 1000; the default of 500 keeps the routine test cycle
    /// fast on modest hardware while exercising the same code paths.
    pub probabilistic_scan_max_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            probabilistic_scan_max_n: 500,
        }
    }
}

pub const CRITERION_COUNT: usize = 11;

/// Run every acceptance criterion in order.
pub fn run_all(options: &VerifyOptions) -> Vec<CriterionOutcome> {
    (1..=CRITERION_COUNT)
        .map(|id| run_criterion(id, options).expect("ids 1..=11 are valid"))
        .collect()
}

/// Run a single criterion by id (1-based).
pub fn run_criterion(id: usize, options: &VerifyOptions) -> Result<CriterionOutcome> {
    match id {
        1 => Ok(criterion_exact_charpolys()),
        2 => Ok(criterion_surd_evaluation()),
        3 => Ok(criterion_minus_one_multiplicities()),
        4 => Ok(criterion_reference_spectra()),
        5 => Ok(criterion_maxmin_oracle()),
        6 => Ok(criterion_interlacing()),
        7 => Ok(criterion_certified_scan()),
        8 => Ok(criterion_probabilistic_scan(
            options.probabilistic_scan_max_n,
        )),
        9 => Ok(criterion_small_lcmgcd_closed_form()),
        10 => Ok(criterion_permutation_invariance()),
        11 => Ok(criterion_exact_property_suites()),
        _ => Err(crate::Error::InvalidParameter(format!(
            "criterion ids run 1..={CRITERION_COUNT}, got {id}"
        ))),
    }
}

fn consecutive_pencil(n: u64) -> (BigIntMatrix, BigIntMatrix) {
    let t = SetSpec::consecutive(1, n).expect("n ≥ 1");
    (
        build_lcm_matrix(&t).expect("integer set"),
        build_gcd_matrix(&t).expect("integer set"),
    )
}

fn consecutive_charpoly(n: u64) -> IntPolynomial {
    let (l, g) = consecutive_pencil(n);
    pencil_charpoly(&l, &g).expect("orders match")
}

// --- criterion 1 -------------------------------------------------------------

/// Characteristic polynomials of the lcm/gcd pencil on {1..n}, n = 1..5,
/// against their factored reference forms — exact integer equality.
fn criterion_exact_charpolys() -> CriterionOutcome {
    let lin = |c: i64| IntPolynomial::from_i64(&[c, 1]);
    let quad = |c: i64| IntPolynomial::from_i64(&[c, 0, 1]);
    let expected = [
        IntPolynomial::from_i64(&[1, -1]),
        IntPolynomial::from_i64(&[-2, 0, 1]),
        lin(1).mul(&quad(-6)).scale(&BigInt::from(-2)),
        lin(1).mul(&lin(1)).mul(&quad(-12)).scale(&BigInt::from(4)),
        IntPolynomial::from_i64(&[960, 2880, 2480, 528, -48, -16]),
    ];
    let mut mismatches = Vec::new();
    for (i, want) in expected.iter().enumerate() {
        let n = i as u64 + 1;
        let got = consecutive_charpoly(n);
        if got != *want {
            mismatches.push(format!("order {n}: computed {got}, expected {want}"));
        }
    }
    CriterionOutcome {
        id: 1,
        name: "exact-charpolys",
        passed: mismatches.is_empty(),
        detail: if mismatches.is_empty() {
            "orders 1..5 reproduce the reference polynomials exactly".into()
        } else {
            mismatches.join("; ")
        },
    }
}

// --- criterion 2 -------------------------------------------------------------

/// Exact radical evaluation: p₅(√42) = 20448 − 3168·√42.
fn criterion_surd_evaluation() -> CriterionOutcome {
    let p5 = consecutive_charpoly(5);
    let value = p5.eval_surd(42).expect("42 is squarefree");
    let passed = value.rational_part == BigInt::from(20448)
        && value.surd_part == BigInt::from(-3168)
        && value.radicand == 42;
    CriterionOutcome {
        id: 2,
        name: "surd-evaluation",
        passed,
        detail: format!("order-5 polynomial at √42 evaluates to {value}, expected 20448 - 3168√42"),
    }
}

// --- criterion 3 -------------------------------------------------------------

/// Multiplicity of −1 as a root of the order-n polynomial, n = 1..6.
fn criterion_minus_one_multiplicities() -> CriterionOutcome {
    let expected = [0usize, 0, 1, 2, 1, 0];
    let minus_one = BigInt::from(-1);
    let got: Vec<usize> = (1..=6)
        .map(|n| {
            consecutive_charpoly(n)
                .root_multiplicity(&minus_one)
                .expect("nonzero polynomial")
        })
        .collect();
    CriterionOutcome {
        id: 3,
        name: "minus-one-multiplicities",
        passed: got == expected,
        detail: format!("multiplicities for orders 1..6: got {got:?}, expected {expected:?}"),
    }
}

// --- criterion 4 -------------------------------------------------------------

/// Numeric spectra against 4-decimal reference displays, each entry within
/// 5·10⁻⁵ absolute.
fn criterion_reference_spectra() -> CriterionOutcome {
    const TOLERANCE: f64 = 5e-5;
    let cases: [(&str, Vec<u64>, Vec<f64>); 3] = [
        (
            "{1..5}",
            (1..=5).collect(),
            vec![6.4798, -0.6118, -1.0, -3.3489, -4.5191],
        ),
        (
            "{1..6}",
            (1..=6).collect(),
            vec![6.8501, 2.5592, -0.7419, -1.3749, -3.4396, -5.8528],
        ),
        ("{2,3,5}", vec![2, 3, 5], vec![4.5128, -2.3027, -3.9371]),
    ];

    let mut worst: Vec<String> = Vec::new();
    let mut passed = true;
    for (label, elements, reference) in &cases {
        let t = SetSpec::integers(elements.iter().map(|&e| BigInt::from(e))).expect("valid set");
        let l = build_lcm_matrix(&t).expect("integers").to_real();
        let g = build_gcd_matrix(&t).expect("integers").to_real();
        let s = generalized_eigenvalues(&l, &g, DEFAULT_PD_TOLERANCE).expect("definite pencil");
        let mut max_dev = 0.0f64;
        let mut bad_entry: Option<(f64, f64)> = None;
        for (got, want) in s.values().iter().zip(reference) {
            let dev = (got - want).abs();
            if dev > max_dev {
                max_dev = dev;
            }
            if dev > TOLERANCE && bad_entry.is_none() {
                bad_entry = Some((*got, *want));
            }
        }
        match bad_entry {
            None => worst.push(format!("{label}: max deviation {max_dev:.2e}")),
            Some((got, want)) => {
                passed = false;
                let p = pencil_charpoly(
                    &build_lcm_matrix(&t).expect("integers"),
                    &build_gcd_matrix(&t).expect("integers"),
                )
                .expect("orders match");
                worst.push(format!(
                    "{label}: reference entry {want} deviates {:.2e} from computed {got:.6} \
                     (tolerance {TOLERANCE:.0e}); the exact polynomial {p} evaluates to \
                     {:.4} at {want}, so that reference digit string is not a root \
                     correctly rounded to 4 decimals",
                    (got - want).abs(),
                    p.eval_f64(want),
                ));
            }
        }
    }
    CriterionOutcome {
        id: 4,
        name: "reference-spectra",
        passed,
        detail: worst.join(" | "),
    }
}

// --- criterion 5 -------------------------------------------------------------

/// Max/min pencil spectra match the closed form within 10⁻⁶ relative on
/// 100 random sets, with the −1 cluster count exactly n − 2.
fn criterion_maxmin_oracle() -> CriterionOutcome {
    let mut rng = StdRng::seed_from_u64(0xA5E7_0005);
    let mut failures = Vec::new();
    for case in 0..100 {
        let n = rng.gen_range(2..=50usize);
        let t = random_integer_set(&mut rng, n, 1000);
        let m = build_max_matrix(&t).to_real();
        let nn = build_min_matrix(&t).to_real();
        let numeric = match generalized_eigenvalues(&m, &nn, DEFAULT_PD_TOLERANCE) {
            Ok(s) => s,
            Err(e) => {
                failures.push(format!("case {case}: solver failed: {e}"));
                continue;
            }
        };
        let closed = maxmin_closed_form(&t);
        for (a, b) in numeric.values().iter().zip(closed.values()) {
            if (a - b).abs() > 1e-6 * b.abs().max(1.0) {
                failures.push(format!(
                    "case {case} (n = {n}): numeric {a} vs closed form {b}"
                ));
                break;
            }
        }
        let cluster = cluster_count(&numeric, -1.0, 1e-6);
        if cluster.count() != n - 2 {
            failures.push(format!(
                "case {case} (n = {n}): −1 cluster has {} members, expected {}",
                cluster.count(),
                n - 2
            ));
        }
    }
    CriterionOutcome {
        id: 5,
        name: "maxmin-oracle",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            "100 random integer sets (orders 2..50, elements ≤ 1000): closed form \
             and −1 cluster counts all match"
                .into()
        } else {
            failures.join("; ")
        },
    }
}

// --- criterion 6 -------------------------------------------------------------

/// Interlacing between consecutive orders of the structured pencil, on
/// random symmetric-definite pencils, and monotone positive counts.
fn criterion_interlacing() -> CriterionOutcome {
    let mut failures = Vec::new();

    let spectra: Vec<Spectrum> = (1..=12u64)
        .map(|n| {
            let (l, g) = consecutive_pencil(n);
            generalized_eigenvalues(&l.to_real(), &g.to_real(), DEFAULT_PD_TOLERANCE)
                .expect("definite pencil")
        })
        .collect();
    for n in 2..=12usize {
        let report = check_interlacing(&spectra[n - 1], &spectra[n - 2], 1e-6)
            .expect("orders are consecutive");
        if !report.holds() {
            failures.push(format!(
                "structured pencil order {n}: violations {:?}",
                report.violations
            ));
        }
    }

    let mut rng = StdRng::seed_from_u64(0xA5E7_0006);
    for case in 0..100 {
        let n = rng.gen_range(2..=10usize);
        let (a, b) = random_definite_pencil(&mut rng, n);
        let parent = generalized_eigenvalues(&a, &b, DEFAULT_PD_TOLERANCE).expect("definite");
        let a_child = leading_principal_submatrix(&a, n - 1).expect("in range");
        let b_child = leading_principal_submatrix(&b, n - 1).expect("in range");
        let child =
            generalized_eigenvalues(&a_child, &b_child, DEFAULT_PD_TOLERANCE).expect("definite");
        let report = check_interlacing(&parent, &child, 1e-8).expect("consecutive orders");
        if !report.holds() {
            failures.push(format!(
                "random pencil case {case} (n = {n}): violations {:?}",
                report.violations
            ));
        }
    }

    // Monotonicity is enforced inside `positive_count_monotone`; the counts
    // themselves are cross-checked against an independent oracle. The second
    // pencil member is positive definite, so by Sylvester's law the positive
    // count at order t equals the inertia of the lcm matrix, which a
    // triangular congruence reduces to #{k ≤ t : k has an even number of
    // distinct prime factors}.
    match positive_count_monotone(64) {
        Ok(counts) => {
            let mut expected = 0usize;
            for (t, count) in counts {
                if distinct_prime_factors(t as u64).is_multiple_of(2) {
                    expected += 1;
                }
                if count != expected {
                    failures.push(format!(
                        "positive count at order {t} is {count}, expected {expected}"
                    ));
                    break;
                }
            }
        }
        Err(e) => failures.push(format!("positive-count monotonicity: {e}")),
    }

    CriterionOutcome {
        id: 6,
        name: "interlacing",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            "consecutive structured orders ≤ 12 (slack 1e-6), 100 random definite \
             pencils (slack 1e-8), and monotone positive counts to order 64 all hold"
                .into()
        } else {
            failures.join("; ")
        },
    }
}

// --- criterion 7 -------------------------------------------------------------

/// Certified scan to order 200: −1 appears exactly for n ∈ {3} ∪
/// {n > 3 : binary begins 10}, with agreement everywhere in range.
fn criterion_certified_scan() -> CriterionOutcome {
    let records = match scan_minus_one(200, 16, true, 0) {
        Ok(r) => r,
        Err(e) => {
            return CriterionOutcome {
                id: 7,
                name: "certified-scan",
                passed: false,
                detail: format!("scan failed: {e}"),
            }
        }
    };
    let mut failures = Vec::new();
    let mut max_primes = 0usize;
    for r in &records {
        let expected = r.n == 3 || (r.n > 3 && binary_begins_10(r.n as u64).expect("n ≥ 1"));
        if r.has_minus_one != expected {
            failures.push(format!(
                "order {}: has −1 = {}, expected {}",
                r.n, r.has_minus_one, expected
            ));
        }
        if r.in_conjecture_range && !r.agrees {
            failures.push(format!("order {}: prediction disagrees", r.n));
        }
        if matches!(r.exact_verdict.verdict, Verdict::ProbablyZero) {
            failures.push(format!(
                "order {}: verdict is only probable despite certification",
                r.n
            ));
        }
        max_primes = max_primes.max(r.exact_verdict.primes_used);
    }
    CriterionOutcome {
        id: 7,
        name: "certified-scan",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!(
                "orders 1..200 all certified and as predicted (largest prime count {max_primes})"
            )
        } else {
            failures.join("; ")
        },
    }
}

// --- criterion 8 -------------------------------------------------------------

/// Probabilistic scan with 16 primes: membership (n ≥ 4) equals the
/// closed-form sequence restricted to the scanned range.
fn criterion_probabilistic_scan(max_n: usize) -> CriterionOutcome {
    let records = match scan_minus_one(max_n, 16, false, 0) {
        Ok(r) => r,
        Err(e) => {
            return CriterionOutcome {
                id: 8,
                name: "probabilistic-scan",
                passed: false,
                detail: format!("scan failed: {e}"),
            }
        }
    };
    let membership: Vec<u64> = records
        .iter()
        .filter(|r| r.n >= 4 && r.has_minus_one)
        .map(|r| r.n as u64)
        .collect();
    let mut expected = Vec::new();
    for index in 2u64.. {
        let term = a004754_term(index).expect("small index");
        if term > max_n as u64 {
            break;
        }
        expected.push(term);
    }
    let small_orders_ok = records[0..3.min(records.len())]
        .iter()
        .all(|r| r.has_minus_one == (r.n == 3));
    let passed = membership == expected && small_orders_ok;
    CriterionOutcome {
        id: 8,
        name: "probabilistic-scan",
        passed,
        detail: if passed {
            format!(
                "scan to {max_n}: membership matches the closed-form sequence \
                 ({} members)",
                membership.len()
            )
        } else {
            format!("scan to {max_n}: membership {membership:?} differs from expected {expected:?}")
        },
    }
}

// --- criterion 9 -------------------------------------------------------------

/// Closed forms for pairs {u,v} and triples {1,u,v}: spectra are exact
/// roots, and the polynomial equals the stated reference product.
fn criterion_small_lcmgcd_closed_form() -> CriterionOutcome {
    let mut rng = StdRng::seed_from_u64(0xA5E7_0009);
    let mut root_failures = 0usize;
    let mut pair_identity_failures = 0usize;
    let mut triple_identity_failures = 0usize;
    let mut triple_sign_note = String::new();
    let total = 50usize;

    for _ in 0..total {
        // coprime pair with u < v ≤ 50
        let (u, v) = loop {
            let u = rng.gen_range(1..=50u64);
            let v = rng.gen_range(1..=50u64);
            if u != v && num_integer::gcd(u, v) == 1 {
                break (u.min(v), u.max(v));
            }
        };
        let t = SetSpec::integers([u, v]).expect("distinct positive");
        let p = pencil_charpoly(
            &build_lcm_matrix(&t).expect("integers"),
            &build_gcd_matrix(&t).expect("integers"),
        )
        .expect("orders match");
        let product = BigInt::from(u * v);
        // (uv − 1)(λ² − uv)
        let reference = IntPolynomial::new(vec![-&product, BigInt::zero(), BigInt::one()])
            .scale(&(&product - 1));
        if p != reference {
            pair_identity_failures += 1;
        }
        if !vanishes_at_plus_minus_sqrt(&p, u * v) {
            root_failures += 1;
        }
        if !closed_form_values_are_roots(&p, &t) {
            root_failures += 1;
        }
    }

    for _ in 0..total {
        // coprime u, v ≥ 2 for the triple {1, u, v}
        let (u, v) = loop {
            let u = rng.gen_range(2..=50u64);
            let v = rng.gen_range(2..=50u64);
            if u != v && num_integer::gcd(u, v) == 1 {
                break (u.min(v), u.max(v));
            }
        };
        let t = SetSpec::integers([1, u, v]).expect("distinct positive");
        let p = pencil_charpoly(
            &build_lcm_matrix(&t).expect("integers"),
            &build_gcd_matrix(&t).expect("integers"),
        )
        .expect("orders match");
        let product = BigInt::from(u * v);
        // (u − 1)(v − 1)(λ + 1)(λ² − uv), the reference form as stated
        let reference = IntPolynomial::from_i64(&[1, 1])
            .mul(&IntPolynomial::new(vec![
                -&product,
                BigInt::zero(),
                BigInt::one(),
            ]))
            .scale(&((BigInt::from(u) - 1) * (BigInt::from(v) - 1)));
        if p != reference {
            triple_identity_failures += 1;
            if triple_sign_note.is_empty() && p == reference.scale(&BigInt::from(-1)) {
                triple_sign_note = format!(
                    " (computed polynomial is exactly the negation of the reference \
                     product — e.g. {{1,{u},{v}}} gives {p}, whose leading coefficient \
                     −(u−1)(v−1) is negative, while the reference form has leading \
                     coefficient +(u−1)(v−1); the reference factorization drops a \
                     global −1)"
                );
            }
        }
        if !vanishes_at_plus_minus_sqrt(&p, u * v)
            || !p.eval(&BigInt::from(-1)).is_zero()
            || !closed_form_values_are_roots(&p, &t)
        {
            root_failures += 1;
        }
    }

    let passed = root_failures == 0 && pair_identity_failures == 0 && triple_identity_failures == 0;
    CriterionOutcome {
        id: 9,
        name: "small-lcmgcd-closed-form",
        passed,
        detail: format!(
            "root checks failed {root_failures}/{}, pair identity failed \
             {pair_identity_failures}/{total}, triple identity failed \
             {triple_identity_failures}/{total}{triple_sign_note}",
            2 * total
        ),
    }
}

/// Closed-form spectrum values satisfy p(λ) ≈ 0 in floating point.
fn closed_form_values_are_roots(p: &IntPolynomial, t: &SetSpec) -> bool {
    let closed = lcmgcd_small_closed_form(t).expect("supported shape");
    let scale = p
        .max_abs_coefficient()
        .to_f64()
        .expect("coefficients fit in f64")
        .max(1.0);
    closed
        .values()
        .iter()
        .all(|&v| p.eval_f64(v).abs() <= 1e-6 * scale)
}

/// Exact check that p(√m) = 0 and p(−√m) = 0.
fn vanishes_at_plus_minus_sqrt(p: &IntPolynomial, m: u64) -> bool {
    let root = m.isqrt();
    if root * root == m {
        let s = BigInt::from(root);
        return p.eval(&s).is_zero() && p.eval(&(-s)).is_zero();
    }
    let reflected = IntPolynomial::new(
        p.coefficients()
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect(),
    );
    p.eval_surd(m).expect("m is not a square").is_zero()
        && reflected.eval_surd(m).expect("m is not a square").is_zero()
}

// --- criterion 10 ------------------------------------------------------------

/// Relabeling the set must not change the pencil's polynomial.
fn criterion_permutation_invariance() -> CriterionOutcome {
    let mut rng = StdRng::seed_from_u64(0xA5E7_0010);
    let mut failures = Vec::new();
    for case in 0..50 {
        let n = rng.gen_range(1..=6usize);
        let t = random_integer_set(&mut rng, n, 40);
        let sigma = random_permutation(&mut rng, n);
        let l = build_lcm_matrix(&t).expect("integers");
        let g = build_gcd_matrix(&t).expect("integers");
        let p = pencil_charpoly(&l, &g).expect("orders match");
        let p_sigma = pencil_charpoly(
            &permute_conjugate(&l, &sigma).expect("orders match"),
            &permute_conjugate(&g, &sigma).expect("orders match"),
        )
        .expect("orders match");
        if p != p_sigma {
            failures.push(format!("case {case} (n = {n}): polynomials differ"));
        }
    }
    CriterionOutcome {
        id: 10,
        name: "permutation-invariance",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            "50 random (set, permutation) pairs with n ≤ 6: polynomial unchanged".into()
        } else {
            failures.join("; ")
        },
    }
}

// --- criterion 11 ------------------------------------------------------------

/// Exact cross-checks: elimination vs cofactor expansion on random
/// symmetric matrices, the totient product determinant, pencil boundary
/// coefficients, and the entrywise lcm·gcd identity.
fn criterion_exact_property_suites() -> CriterionOutcome {
    let mut rng = StdRng::seed_from_u64(0xA5E7_0011);
    let mut failures = Vec::new();

    for case in 0..200 {
        let n = rng.gen_range(1..=6usize);
        let rows = random_symmetric_rows(&mut rng, n);
        let m = Matrix::from_rows(rows.clone()).expect("square");
        let fast = bareiss_determinant(&m);
        let slow = cofactor_determinant(&rows);
        if fast != slow {
            failures.push(format!(
                "determinant case {case} (n = {n}): elimination {fast} vs cofactor {slow}"
            ));
        }
        let verdict = modular_zero_test(&m, 2, false, case as u64).expect("num_primes ≥ 1");
        if verdict.is_zero_verdict() != fast.is_zero() {
            failures.push(format!(
                "determinant case {case}: modular verdict disagrees with exact value {fast}"
            ));
        }
    }

    for n in 1..=8u64 {
        let t = SetSpec::consecutive(1, n).expect("n ≥ 1");
        let g = build_gcd_matrix(&t).expect("integers");
        let det = bareiss_determinant(&g);
        let totient_product: BigInt = (1..=n).map(totient).map(BigInt::from).product();
        if det != totient_product {
            failures.push(format!(
                "gcd determinant at order {n}: {det} vs totient product {totient_product}"
            ));
        }
    }

    for case in 0..50 {
        let n = rng.gen_range(1..=5usize);
        let a = random_int_matrix(&mut rng, n);
        let b = random_int_matrix(&mut rng, n);
        let p = pencil_charpoly(&a, &b).expect("orders match");
        if p.coefficient(0) != bareiss_determinant(&a) {
            failures.push(format!(
                "boundary case {case}: constant term ≠ det of first member"
            ));
        }
        let det_b = bareiss_determinant(&b);
        if !det_b.is_zero() {
            let want = if n % 2 == 0 {
                det_b.clone()
            } else {
                -det_b.clone()
            };
            if p.coefficient(n) != want {
                failures.push(format!(
                    "boundary case {case}: leading term {} ≠ (−1)^{n}·det of second member {want}",
                    p.coefficient(n)
                ));
            }
        }
    }

    for case in 0..50 {
        let n = rng.gen_range(1..=8usize);
        let t = random_integer_set(&mut rng, n, 200);
        let l = build_lcm_matrix(&t).expect("integers");
        let g = build_gcd_matrix(&t).expect("integers");
        let elems = t.integer_elements().expect("integer set");
        'outer: for i in 0..n {
            for j in 0..n {
                if l.get(i, j) * g.get(i, j) != &elems[i] * &elems[j] {
                    failures.push(format!(
                        "lcm·gcd case {case}: entry ({i}, {j}) violates the product identity"
                    ));
                    break 'outer;
                }
            }
        }
    }

    CriterionOutcome {
        id: 11,
        name: "exact-property-suites",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            "200 symmetric determinant cross-checks, totient-product determinants to \
             order 8, 50 boundary-coefficient pencils, and 50 lcm·gcd product \
             identities all exact"
                .into()
        } else {
            failures.join("; ")
        },
    }
}

// --- shared helpers ----------------------------------------------------------

fn random_integer_set(rng: &mut StdRng, n: usize, max: u64) -> SetSpec {
    assert!(max as usize >= n, "not enough distinct values available");
    let mut values = BTreeSet::new();
    while values.len() < n {
        values.insert(rng.gen_range(1..=max));
    }
    SetSpec::integers(values.into_iter().map(BigInt::from)).expect("distinct positive integers")
}

#[allow(clippy::needless_range_loop)]
fn random_symmetric_rows(rng: &mut StdRng, n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::from(0); n]; n];
    for i in 0..n {
        for j in i..n {
            let e = BigInt::from(rng.gen_range(-9i64..=9));
            rows[i][j] = e.clone();
            rows[j][i] = e;
        }
    }
    rows
}

fn random_permutation(rng: &mut StdRng, n: usize) -> Permutation {
    let mut image: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        image.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_one_based(image).expect("valid bijection")
}

fn random_int_matrix(rng: &mut StdRng, n: usize) -> BigIntMatrix {
    let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-9i64..=9)).collect();
    Matrix::from_fn(n, |i, j| BigInt::from(entries[i * n + j]))
}

/// Symmetric A with entries in [−5, 5] and B = RᵀR + I (positive definite).
fn random_definite_pencil(rng: &mut StdRng, n: usize) -> (RealMatrix, RealMatrix) {
    let mut a_raw = vec![0.0f64; n * n];
    for i in 0..n {
        for j in i..n {
            let e = rng.gen_range(-5.0..5.0);
            a_raw[i * n + j] = e;
            a_raw[j * n + i] = e;
        }
    }
    let r: Vec<f64> = (0..n * n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let a = RealMatrix::from_fn(n, |i, j| a_raw[i * n + j]);
    let b = RealMatrix::from_fn(n, |i, j| {
        let dot: f64 = (0..n).map(|k| r[k * n + i] * r[k * n + j]).sum();
        dot + if i == j { 1.0 } else { 0.0 }
    });
    (a, b)
}

/// Number of distinct prime factors (ω), by trial division.
fn distinct_prime_factors(mut n: u64) -> usize {
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            count += 1;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

/// Naive cofactor expansion, independent of the elimination code path.
fn cofactor_determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for (j, top) in rows[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = top * cofactor_determinant(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Euler's totient by trial division.
fn totient(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
