//! Krull dimension from leading monomials.

use super::buchberger::GroebnerOptions;
use super::ideal::Ideal;
use crate::error::{Error, Result};
use crate::poly::Monomial;

/// Dimension of `k[x_1..x_n]/J` for a monomial ideal `J`; `-1` when `J` is the unit ideal.
///
/// Equals `n` minus the least number of variables meeting every generator support.
pub fn monomial_ideal_dimension(generators: &[Monomial], nvars: usize) -> Result<i64> {
    if nvars > 64 {
        return Err(Error::InvalidInput("more than 64 variables".into()));
    }
    if generators.iter().any(Monomial::is_one) {
        return Ok(-1);
    }
    let mut edges: Vec<u64> = generators
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    edges.sort_by_key(|e| e.count_ones());
    edges.dedup();
    let mut minimal: Vec<u64> = Vec::new();
    for e in edges {
        if !minimal.iter().any(|m| m & e == *m) {
            minimal.push(e);
        }
    }
    let mut best = nvars;
    min_cover(&minimal, 0, 0, &mut best);
    Ok(nvars as i64 - best as i64)
}

fn min_cover(edges: &[u64], chosen: u64, count: usize, best: &mut usize) {
    let Some(&open) = edges.iter().find(|e| *e & chosen == 0) else {
        *best = (*best).min(count);
        return;
    };
    if count + 1 >= *best {
        return;
    }
    let mut bits = open;
    while bits != 0 {
        let v = bits.trailing_zeros();
        bits &= bits - 1;
        min_cover(edges, chosen | (1 << v), count + 1, best);
    }
}

/// Krull dimension of `P/I`; `-1` for the unit ideal.
pub fn krull_dimension(ideal: &Ideal, opts: &GroebnerOptions) -> Result<i64> {
    let opts = GroebnerOptions {
        degree_bound: None,
        track_cofactors: false,
        ..opts.clone()
    };
    let gb = ideal.groebner_basis(&opts)?;
    let leads: Vec<Monomial> = gb.leading_monomials().into_iter().map(|(_, m)| m).collect();
    monomial_ideal_dimension(&leads, ideal.ring().nvars())
}
