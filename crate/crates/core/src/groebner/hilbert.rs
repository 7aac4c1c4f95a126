//! Hilbert series of graded quotients `P/I` via their leading-term ideals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use super::buchberger::GroebnerOptions;
use super::ideal::Ideal;
use crate::error::{Error, Result};
use crate::poly::Monomial;

/// `H(t) = numerator(t) / (1 - t)^nvars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<BigInt>,
    nvars: usize,
}

impl HilbertSeries {
    /// Wraps a numerator (ascending coefficients) over `(1 - t)^nvars`.
    pub fn from_parts(mut numerator: Vec<BigInt>, nvars: usize) -> Self {
        while numerator.last().is_some_and(|c| c.is_zero()) {
            numerator.pop();
        }
        HilbertSeries { numerator, nvars }
    }

    /// Ascending coefficients of the numerator, trailing zeros trimmed.
    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `dim_k (P/I)_q`.
    pub fn coefficient(&self, q: u64) -> BigInt {
        let n = self.nvars as u64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|(k, _)| *k as u64 <= q)
            .map(|(k, a)| {
                let m = q - k as u64;
                let b = if n == 0 {
                    if m == 0 { BigInt::one() } else { BigInt::zero() }
                } else {
                    binomial(BigInt::from(m + n - 1), BigInt::from(n - 1))
                };
                a * b
            })
            .sum()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (k, a) in self.numerator.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = if a < &BigInt::zero() { -a } else { a.clone() };
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "t".to_string(),
                (1, false) => format!("{mag}*t"),
                (_, true) => format!("t^{k}"),
                (_, false) => format!("{mag}*t^{k}"),
            };
            let sign = a < &BigInt::zero();
            if parts.is_empty() {
                parts.push(if sign { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {body}", if sign { "-" } else { "+" }));
            }
        }
        let num = if parts.is_empty() { "0".to_string() } else { parts.join(" ") };
        write!(f, "({num})/(1 - t)^{}", self.nvars)
    }
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn add_shifted(a: &[BigInt], b: &[BigInt], shift: usize) -> Vec<BigInt> {
    let mut out = a.to_vec();
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i + shift] += y;
    }
    trim(out)
}

fn one_minus_t_pow(d: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); d + 1];
    p[0] = BigInt::one();
    p[d] -= BigInt::one();
    trim(p)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(Monomial::degree);
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `P/J` for a monomial ideal `J`.
///
/// Pivots on a variable `x`: `N(J) = N(J + (x)) + t * N(J : x)`.
pub fn hilbert_numerator(generators: &[Monomial], nvars: usize) -> Vec<BigInt> {
    numerator(minimalize(generators.to_vec()), nvars)
}

fn numerator(gens: Vec<Monomial>, nvars: usize) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for i in g.support() {
            counts[i] += 1;
        }
    }
    let (pivot, &most) = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .expect("at least one variable");
    if most <= 1 {
        return gens
            .iter()
            .fold(vec![BigInt::one()], |acc, g| mul(&acc, &one_minus_t_pow(g.degree() as usize)));
    }
    let x = Monomial::var(nvars, pivot);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !x.divides(g)).cloned().collect();
    plus.push(x.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| if x.divides(g) { g.div(&x) } else { g.clone() })
        .collect();
    let a = numerator(minimalize(plus), nvars);
    let b = numerator(minimalize(colon), nvars);
    add_shifted(&a, &b, 1)
}

/// Hilbert series of `P/I` for a homogeneous ideal `I`.
pub fn hilbert_series(ideal: &Ideal, opts: &GroebnerOptions) -> Result<HilbertSeries> {
    if !ideal.is_homogeneous() {
        return Err(Error::InvalidInput(
            "Hilbert series requires homogeneous generators".into(),
        ));
    }
    let opts = GroebnerOptions {
        degree_bound: None,
        track_cofactors: false,
        ..opts.clone()
    };
    let gb = ideal.groebner_basis(&opts)?;
    let leads: Vec<Monomial> = gb.leading_monomials().into_iter().map(|(_, m)| m).collect();
    let n = ideal.ring().nvars();
    Ok(HilbertSeries {
        numerator: hilbert_numerator(&leads, n),
        nvars: n,
    })
}
