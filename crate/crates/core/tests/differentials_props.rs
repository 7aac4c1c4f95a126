mod common;

use num_integer::binomial;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use symsig_core::differentials::{
    freerank_omega_column_test, freerank_positive_syzygy, hypersurface_signature, jacobian,
    omega_presentation, sym_power_presentation, FreeRankResult, SignatureOptions,
};
use symsig_core::groebner::{GroebnerOptions, Ideal};
use symsig_core::poly::Polynomial;

/// A form in `n` variables that may involve only the first `used` of them,
/// which makes free summands of `Omega` (positive free rank) common.
fn corpus_form(rng: &mut ChaCha8Rng) -> Polynomial {
    let n = rng.gen_range(3..=5);
    let used = rng.gen_range(2..=n);
    let d = rng.gen_range(2..=3);
    let small = ring_n(used);
    let (terms, diagonal) = (rng.gen_range(2..=4), rng.gen_bool(0.5));
    let f = random_form(rng, &small, d, terms, diagonal);
    poly(&ring_n(n), &f.to_string())
}

fn both_methods(f: &Polynomial) -> (FreeRankResult, FreeRankResult) {
    let i = Ideal::new(f.ring(), vec![f.clone()]);
    let opts = GroebnerOptions::default();
    let col = freerank_omega_column_test(&jacobian(&i), &opts).unwrap();
    let syz = freerank_positive_syzygy(&omega_presentation(&i), &Default::default()).unwrap();
    (col, syz)
}

fn summary(f: &Polynomial) -> (String, Option<bool>, Vec<bool>) {
    let opts = SignatureOptions {
        assume_domain: true,
        ..Default::default()
    };
    let rep = hypersurface_signature(f, &opts).unwrap();
    let checks = rep.checks.iter().map(|c| c.status.holds()).collect();
    (
        format!("{:?} {:?}", rep.verdict.status, rep.verdict.signature),
        rep.freerank_omega_positive(),
        checks,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn methods_agree_and_certificates_replay(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = corpus_form(&mut rng);
        prop_assume!(!f.is_zero());
        let (col, syz) = both_methods(&f);
        prop_assert_eq!(col.verdict, syz.verdict, "f = {}", f);
        let i = Ideal::new(f.ring(), vec![f.clone()]);
        let pres = omega_presentation(&i);
        let opts = GroebnerOptions::default();
        prop_assert!(col.verify(&pres, &opts).unwrap());
        prop_assert!(syz.verify(&pres, &opts).unwrap());
    }

    #[test]
    fn positive_sym_power_implies_positive_omega(seed in any::<u64>(), q in 2u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = corpus_form(&mut rng);
        prop_assume!(!f.is_zero());
        let i = Ideal::new(f.ring(), vec![f.clone()]);
        let sym = sym_power_presentation(&i, q).unwrap();
        let res = freerank_positive_syzygy(sym.presentation(), &Default::default()).unwrap();
        prop_assert!(res.verify(sym.presentation(), &GroebnerOptions::default()).unwrap());
        if res.is_positive() {
            let (_, syz) = both_methods(&f);
            prop_assert!(syz.is_positive(), "Sym^{} positive but Omega not, f = {}", q, f);
        }
    }

    #[test]
    fn verdicts_invariant_under_relabeling(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = corpus_form(&mut rng);
        prop_assume!(!f.is_zero() && f.ring().nvars() >= 4);
        let mut perm: Vec<usize> = (0..f.ring().nvars()).collect();
        perm.shuffle(&mut rng);
        let g = f.permute_variables(&perm);
        prop_assert_eq!(summary(&f), summary(&g), "f = {}, g = {}", f, g);
    }

    #[test]
    fn verdicts_invariant_under_scaling(seed in any::<u64>(), num in 1i64..7, den in 1i64..7, neg in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = corpus_form(&mut rng);
        prop_assume!(!f.is_zero() && f.ring().nvars() >= 4);
        let field = f.ring().field().clone();
        let c = &field.from_i64(if neg { -num } else { num }) / &field.from_i64(den);
        prop_assert_eq!(summary(&f), summary(&f.scale(&c)));
    }
}

#[test]
fn sym_power_counts_are_binomial() {
    let r = xyzw();
    let cases = [
        ideal(&r, &["x*y - z*w"]),
        ideal(&r, &["x^2 + y^2", "z*w - x*y"]),
        ideal(&r, &["x^2", "y^3", "z*w"]),
    ];
    for i in &cases {
        let (n, s) = (4u64, i.generators().len() as u64);
        for q in 1..=6u32 {
            let p = sym_power_presentation(i, q).unwrap();
            let q = u64::from(q);
            assert_eq!(p.generator_count() as u64, binomial(n + q - 1, q));
            assert_eq!(p.relation_count() as u64, s * binomial(n + q - 2, q - 1));
        }
    }
}

#[test]
fn corpus_exercises_both_verdicts() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut positive, mut zero) = (0, 0);
    for _ in 0..40 {
        let f = corpus_form(&mut rng);
        if f.is_zero() {
            continue;
        }
        let (col, syz) = both_methods(&f);
        assert_eq!(col.verdict, syz.verdict, "f = {f}");
        if syz.is_positive() {
            positive += 1;
        } else {
            zero += 1;
        }
    }
    assert!(positive >= 5 && zero >= 5, "positive {positive}, zero {zero}");
}
