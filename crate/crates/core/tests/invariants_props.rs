mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use symsig_core::arith::Field;
use symsig_core::invariants::{
    cumulative_ratio, group_closure, molien_series, sym_trace_direct, sym_trace_newton,
    trace_average, Matrix, MatrixGroup, MolienData, DEFAULT_CLOSURE_CAP,
};

/// Group generated by one or two random signed permutation matrices over `Q`.
fn signed_permutation_group(rng: &mut ChaCha8Rng, n: usize) -> MatrixGroup {
    let q = Field::Rational;
    let gens = (0..rng.gen_range(1..=2))
        .map(|_| {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(rng);
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|i| {
                    let mut row = vec![0; n];
                    row[perm[i]] = if rng.gen_bool(0.5) { 1 } else { -1 };
                    row
                })
                .collect();
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            Matrix::from_i64(&q, &refs).unwrap()
        })
        .collect();
    group_closure(&q, gens, DEFAULT_CLOSURE_CAP).unwrap()
}

/// Random unimodular-ish integer matrix, invertible over any field of char 0.
fn random_invertible(rng: &mut ChaCha8Rng, field: &Field, n: usize) -> Matrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let t = Matrix::from_i64(field, &refs).unwrap();
        if !t.determinant().is_zero() {
            return t;
        }
    }
}

fn random_group(rng: &mut ChaCha8Rng) -> MatrixGroup {
    let n = rng.gen_range(2..=3);
    if rng.gen_bool(0.5) {
        signed_permutation_group(rng, n)
    } else {
        let m = rng.gen_range(2..=12);
        let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..m)).collect();
        diagonal_cyclic(m, &exps)
    }
}

fn ratio_error(data: &MolienData, order: usize, n: usize) -> f64 {
    let target = BigRational::new(1.into(), BigInt::from(order));
    (cumulative_ratio(data, n).unwrap() - target).to_f64().unwrap().abs()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn expansion_matches_trace_averages(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_group(&mut rng);
        let m = molien_series(&g, 10).unwrap();
        let expanded = m.series.expand(11);
        for q in 0..=10usize {
            prop_assert_eq!(&expanded[q], &BigRational::from_integer(m.coefficients[q].clone()));
            prop_assert_eq!(&trace_average(&g, q, sym_trace_direct).unwrap(), &m.coefficients[q]);
            prop_assert_eq!(&trace_average(&g, q, sym_trace_newton).unwrap(), &m.coefficients[q]);
        }
        prop_assert_eq!(&m.coefficients[0], &BigInt::from(1));
        for (a, b) in m.coefficients.iter().zip(&m.ambient) {
            prop_assert!(a <= b);
        }
    }

    #[test]
    fn diagonal_groups_count_invariant_monomials(m in 2u32..=12, exps in prop::collection::vec(0u32..12, 2..=3)) {
        let exps: Vec<u32> = exps.iter().map(|e| e % m).collect();
        let g = diagonal_cyclic(m, &exps);
        let data = molien_series(&g, 8).unwrap();
        for q in 0..=8u32 {
            prop_assert_eq!(&data.coefficients[q as usize], &BigInt::from(invariant_monomial_count(m, &exps, q)));
        }
    }

    #[test]
    fn conjugation_preserves_coefficients(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_group(&mut rng);
        let t = random_invertible(&mut rng, g.field(), g.dim());
        let h = g.conjugate(&t).unwrap();
        prop_assert_eq!(molien_series(&g, 12).unwrap().coefficients, molien_series(&h, 12).unwrap().coefficients);
    }

    #[test]
    fn sym_traces_agree(seed in any::<u64>(), q in 0usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_group(&mut rng);
        for s in g.elements() {
            prop_assert_eq!(sym_trace_direct(s, q), sym_trace_newton(s, q));
        }
    }

    /// The error is a quasi-polynomial remainder, so it oscillates with the
    /// exponent of the group (the scalar group of order 6 has
    /// `err(50) < err(100)`). Checked: `< 0.05` and an `O(1/N)` envelope whose
    /// constant is fitted on degrees `10..50`.
    #[test]
    fn cumulative_ratio_converges(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_group(&mut rng);
        prop_assume!(g.order() <= 12);
        let data = molien_series(&g, 200).unwrap();
        let scaled = |n: usize| n as f64 * ratio_error(&data, g.order(), n);
        let c = (10..50).map(scaled).fold(0.0, f64::max);
        for n in [50, 100, 200] {
            prop_assert!(ratio_error(&data, g.order(), n) < 0.05);
        }
        prop_assert!((50..=200).all(|n| scaled(n) <= 2.0 * c + 1e-12), "C = {}, |G| = {}", c, g.order());
    }
}

#[test]
fn fixed_groups_match_trace_averages() {
    for g in [neg2(), swap2(), cyclic3(), quaternion(), trivial(3)] {
        let m = molien_series(&g, 10).unwrap();
        for q in 0..=10 {
            assert_eq!(trace_average(&g, q, sym_trace_direct).unwrap(), m.coefficients[q]);
        }
    }
}

#[test]
fn fixture_errors_are_nonincreasing() {
    for g in [neg2(), cyclic3(), quaternion(), trivial(3), diagonal_cyclic(5, &[1, 2, 3])] {
        let data = molien_series(&g, 200).unwrap();
        let errors: Vec<f64> = [50, 100, 200].iter().map(|&n| ratio_error(&data, g.order(), n)).collect();
        assert!(errors.windows(2).all(|w| w[1] <= w[0]), "errors {errors:?}, |G| = {}", g.order());
        assert!(errors.iter().all(|&e| e < 0.05), "errors {errors:?}");
    }
}

