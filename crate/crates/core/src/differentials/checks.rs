//! Hypothesis checks on the defining ideal.

use crate::error::Result;
use crate::groebner::{krull_dimension, GroebnerOptions, Ideal};
use crate::poly::Polynomial;

use super::presentation::jacobian;

fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    match m.len() {
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        k => {
            let ring = m[0][0].ring();
            let mut acc = Polynomial::zero(ring);
            for j in 0..k {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&determinant(&minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// All `c x c` minors of the Jacobian matrix of `ideal`.
pub fn jacobian_minors(ideal: &Ideal, c: usize) -> Vec<Polynomial> {
    let j = jacobian(ideal);
    let mut out = Vec::new();
    for rows in subsets(j.rows(), c) {
        for cols in subsets(j.cols(), c) {
            let sub: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&k| j.entry(r, k).clone()).collect())
                .collect();
            let d = determinant(&sub);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

/// The singular locus of `P/I` is at most the origin.
///
/// For one equation this is `dim (f, df/dx_1, ..., df/dx_n) <= 0`. With several
/// equations the singular locus is cut out by `I` and the `c x c` Jacobian
/// minors, `c = n - dim P/I`.
pub fn isolated_singularity_check(ideal: &Ideal, opts: &GroebnerOptions) -> Result<bool> {
    let n = ideal.ring().nvars();
    let s = ideal.generators().len();
    let singular = match s {
        0 => return Ok(true),
        1 => {
            let f = &ideal.generators()[0];
            ideal.extended((0..n).map(|j| f.partial_derivative(j)))
        }
        _ => {
            let dim = krull_dimension(ideal, opts)?;
            if dim < 0 {
                return Ok(true);
            }
            let c = n - dim as usize;
            if c > s {
                return Ok(dim <= 0);
            }
            ideal.extended(jacobian_minors(ideal, c))
        }
    };
    Ok(krull_dimension(&singular, opts)? <= 0)
}

/// `dim P/I = n - s` for the `s` given generators.
pub fn complete_intersection_check(ideal: &Ideal, opts: &GroebnerOptions) -> Result<bool> {
    let n = ideal.ring().nvars() as i64;
    let s = ideal.generators().len() as i64;
    Ok(krull_dimension(ideal, opts)? == n - s)
}
