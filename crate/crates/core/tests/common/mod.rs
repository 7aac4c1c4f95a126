//! Shared fixtures and random corpora for integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use symsig_core::arith::Field;
use symsig_core::groebner::Ideal;
use symsig_core::invariants::{group_closure, Matrix, MatrixGroup, DEFAULT_CLOSURE_CAP};
use symsig_core::poly::{monomials_of_degree, parse_polynomial, Monomial, MonomialOrder, PolyRing, Polynomial};

pub fn ring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(vars.iter().copied(), Field::Rational, MonomialOrder::Grevlex).unwrap()
}

pub fn ring_n(n: usize) -> Arc<PolyRing> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    PolyRing::new(names, Field::Rational, MonomialOrder::Grevlex).unwrap()
}

pub fn poly(r: &Arc<PolyRing>, s: &str) -> Polynomial {
    parse_polynomial(s, r).unwrap()
}

pub fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| poly(r, g)).collect())
}

pub fn xyzw() -> Arc<PolyRing> {
    ring(&["x", "y", "z", "w"])
}

pub fn minors_ideal() -> Ideal {
    let r = ring_n(6);
    ideal(&r, &["x1*x5 - x2*x4", "x1*x6 - x3*x4", "x2*x6 - x3*x5"])
}

/// Random homogeneous form of degree `d` with `terms` random monomials,
/// coefficients in `-3..=3`, plus `x_i^d` for each variable when `diagonal`.
pub fn random_form(
    rng: &mut ChaCha8Rng,
    r: &Arc<PolyRing>,
    d: u32,
    terms: usize,
    diagonal: bool,
) -> Polynomial {
    let field = r.field().clone();
    let n = r.nvars();
    let basis = monomials_of_degree(d, n, r.order());
    let mut out = Vec::new();
    if diagonal {
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = d;
            out.push((Monomial::from_exponents(e).unwrap(), field.one()));
        }
    }
    for _ in 0..terms {
        let m = basis[rng.gen_range(0..basis.len())].clone();
        let c = rng.gen_range(-3i64..=3);
        out.push((m, field.from_i64(c)));
    }
    Polynomial::from_terms(r, out)
}

/// Random polynomial (not necessarily homogeneous) of degree at most `d`.
pub fn random_poly(rng: &mut ChaCha8Rng, r: &Arc<PolyRing>, d: u32, terms: usize) -> Polynomial {
    let field = r.field().clone();
    let n = r.nvars();
    let out = (0..terms)
        .map(|_| {
            let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=d)).collect();
            let total: u32 = e.iter().sum();
            let e = if total > d {
                let mut e = e;
                while e.iter().sum::<u32>() > d {
                    let i = rng.gen_range(0..n);
                    e[i] = e[i].saturating_sub(1);
                }
                e
            } else {
                e
            };
            (Monomial::from_exponents(e).unwrap(), field.from_i64(rng.gen_range(-4i64..=4)))
        })
        .collect();
    Polynomial::from_terms(r, out)
}

/// Random monomial with each exponent in `0..=max`.
pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max: u32) -> Monomial {
    Monomial::from_exponents((0..n).map(|_| rng.gen_range(0..=max)).collect()).unwrap()
}

pub fn neg2() -> MatrixGroup {
    let q = Field::Rational;
    group_closure(&q, vec![Matrix::from_i64(&q, &[&[-1, 0], &[0, -1]]).unwrap()], DEFAULT_CLOSURE_CAP)
        .unwrap()
}

pub fn swap2() -> MatrixGroup {
    let q = Field::Rational;
    group_closure(&q, vec![Matrix::from_i64(&q, &[&[0, 1], &[1, 0]]).unwrap()], DEFAULT_CLOSURE_CAP)
        .unwrap()
}

pub fn trivial(n: usize) -> MatrixGroup {
    let q = Field::Rational;
    group_closure(&q, vec![Matrix::identity(&q, n)], DEFAULT_CLOSURE_CAP).unwrap()
}

/// Diagonal cyclic group generated by `diag(zeta_m^e_1, ..., zeta_m^e_n)`.
pub fn diagonal_cyclic(m: u32, exps: &[u32]) -> MatrixGroup {
    let k = Field::cyclotomic(m).unwrap();
    let g = Matrix::diagonal(&exps.iter().map(|&e| k.zeta_power(e).unwrap()).collect::<Vec<_>>());
    group_closure(&k, vec![g], DEFAULT_CLOSURE_CAP).unwrap()
}

pub fn cyclic3() -> MatrixGroup {
    diagonal_cyclic(3, &[1, 2])
}

/// A small non-abelian example: the binary dihedral group of order 8 (quaternions) in SL_2.
pub fn quaternion() -> MatrixGroup {
    let k = Field::cyclotomic(4).unwrap();
    let i = k.zeta_power(1).unwrap();
    let zero = k.zero();
    let one = k.one();
    let a = Matrix::from_rows(&k, vec![vec![i.clone(), zero.clone()], vec![zero.clone(), -&i]]).unwrap();
    let b = Matrix::from_rows(&k, vec![vec![zero.clone(), -&one], vec![one, zero]]).unwrap();
    group_closure(&k, vec![a, b], DEFAULT_CLOSURE_CAP).unwrap()
}

/// Brute-force count of degree-`q` monomials fixed by a diagonal group.
///
/// `exps[i]` is the exponent of `zeta_m` on the diagonal of the generator.
pub fn invariant_monomial_count(m: u32, exps: &[u32], q: u32) -> usize {
    monomials_of_degree(q, exps.len(), MonomialOrder::Grevlex)
        .iter()
        .filter(|mono| {
            let weight: u64 = mono
                .exponents()
                .iter()
                .zip(exps)
                .map(|(&a, &e)| u64::from(a) * u64::from(e))
                .sum();
            weight % u64::from(m) == 0
        })
        .count()
}

/// Number of degree-`q` monomials outside a monomial ideal, by enumeration.
pub fn standard_monomial_count(gens: &[Monomial], n: usize, q: u32) -> usize {
    monomials_of_degree(q, n, MonomialOrder::Grevlex)
        .iter()
        .filter(|m| !gens.iter().any(|g| g.divides(m)))
        .count()
}

/// Brute-force Krull dimension of `P/J` for a monomial ideal: the largest set
/// of variables containing no generator support.
pub fn brute_force_dimension(gens: &[Monomial], n: usize) -> i64 {
    if gens.iter().any(Monomial::is_one) {
        return -1;
    }
    (0u32..(1 << n))
        .filter(|set| {
            gens.iter()
                .all(|g| g.support().any(|i| set & (1 << i) == 0))
        })
        .map(|set| set.count_ones() as i64)
        .max()
        .unwrap_or(0)
}
