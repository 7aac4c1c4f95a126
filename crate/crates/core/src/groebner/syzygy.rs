//! Syzygies of a matrix over `R = P/I` by elimination in a larger free module.
//!
//! For a `k x r` matrix `M`, a syzygy is a row vector `u` in `R^k` with
//! `u * M = 0` in `R^r`. We compute a Gröbner basis of the submodule of
//! `P^(r + k)` generated by `(M_i, e_i)` and `(g * e_j, 0)` for `g` in `I`,
//! under position-over-term with the target block first. Basis elements whose
//! target block vanishes project onto generators of the syzygy module.

use std::sync::Arc;

use super::buchberger::{groebner, GroebnerBasis, GroebnerOptions};
use super::ideal::{normal_form, Ideal, ModuleElement};
use super::vector::{FreeModule, Position, Vector};
use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

/// Options for [`syzygy_basis`].
#[derive(Clone, Debug, Default)]
pub struct SyzygyOptions {
    pub groebner: GroebnerOptions,
    /// Degrees of the domain generators `e_i` (default all zero).
    pub row_degrees: Option<Vec<i64>>,
}

/// Generators of the syzygy module, entries reduced modulo `I`.
#[derive(Clone, Debug)]
pub struct SyzygyModule {
    ring: Arc<PolyRing>,
    generators: Vec<ModuleElement>,
    degrees: Vec<Option<i64>>,
    row_degrees: Vec<i64>,
    column_degrees: Option<Vec<i64>>,
    degree_bound: Option<i64>,
    pair_reductions: u64,
}

impl SyzygyModule {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[ModuleElement] {
        &self.generators
    }

    /// Degree of each generator, `None` when it is not homogeneous.
    pub fn degrees(&self) -> &[Option<i64>] {
        &self.degrees
    }

    pub fn row_degrees(&self) -> &[i64] {
        &self.row_degrees
    }

    /// Column degrees when the matrix is graded.
    pub fn column_degrees(&self) -> Option<&[i64]> {
        self.column_degrees.as_deref()
    }

    /// Generators are complete up to this degree only.
    pub fn degree_bound(&self) -> Option<i64> {
        self.degree_bound
    }

    pub fn pair_reductions(&self) -> u64 {
        self.pair_reductions
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Column degrees making `M` a degree-zero map, if the entries allow it.
fn column_degrees(matrix: &[Vec<Polynomial>], rows: &[i64], r: usize) -> Option<Vec<i64>> {
    let mut cols: Vec<Option<i64>> = vec![None; r];
    for (i, row) in matrix.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            if !entry.is_homogeneous() {
                return None;
            }
            let w = rows[i] - entry.total_degree()? as i64;
            match cols[j] {
                None => cols[j] = Some(w),
                Some(c) if c == w => {}
                Some(_) => return None,
            }
        }
    }
    Some(cols.into_iter().map(|c| c.unwrap_or(0)).collect())
}

/// Generators of `{u in R^k : u * M = 0 in R^r}` for `R = P/ideal`.
///
/// With a degree bound in `opts.groebner`, only syzygies of degree at most the
/// bound are guaranteed; this requires a graded matrix and homogeneous ideal.
pub fn syzygy_basis(
    matrix: &[Vec<Polynomial>],
    ideal: &Ideal,
    opts: &SyzygyOptions,
) -> Result<SyzygyModule> {
    let ring = ideal.ring().clone();
    let k = matrix.len();
    if k == 0 {
        return Err(Error::InvalidInput("syzygies of an empty matrix".into()));
    }
    let r = matrix[0].len();
    if matrix.iter().any(|row| row.len() != r) {
        return Err(Error::InvalidInput("ragged matrix".into()));
    }
    let rows = match &opts.row_degrees {
        Some(v) if v.len() != k => {
            return Err(Error::InvalidInput("row degree count does not match the matrix".into()))
        }
        Some(v) => v.clone(),
        None => vec![0; k],
    };
    let graded = if ideal.is_homogeneous() {
        column_degrees(matrix, &rows, r)
    } else {
        None
    };
    if opts.groebner.degree_bound.is_some() && graded.is_none() {
        return Err(Error::InvalidInput(
            "degree-truncated syzygies need a graded matrix and homogeneous ideal".into(),
        ));
    }
    let mut shifts = graded.clone().unwrap_or_else(|| vec![0; r]);
    shifts.extend(&rows);
    let module = FreeModule::new(&ring, r + k)
        .with_shifts(shifts)
        .with_position(Position::PositionOverTerm);

    let zero = Polynomial::zero(&ring);
    let mut inputs = Vec::new();
    for (i, row) in matrix.iter().enumerate() {
        let mut comps = row.clone();
        comps.extend((0..k).map(|l| if l == i { Polynomial::one(&ring) } else { zero.clone() }));
        inputs.push(Vector::from_polys(&module, &comps));
    }
    for j in 0..r {
        for g in ideal.generators() {
            let mut comps = vec![zero.clone(); r + k];
            comps[j] = g.clone();
            inputs.push(Vector::from_polys(&module, &comps));
        }
    }
    let gb = groebner(&module, inputs, &opts.groebner)?;

    let ideal_gb: Option<GroebnerBasis> = if ideal.generators().is_empty() {
        None
    } else {
        Some(ideal.groebner_basis(&GroebnerOptions {
            degree_bound: None,
            track_cofactors: false,
            ..opts.groebner.clone()
        })?)
    };

    let mut generators: Vec<ModuleElement> = Vec::new();
    let mut degrees = Vec::new();
    for v in &gb.elements {
        let lead = v.lead().expect("basis elements are nonzero");
        if lead.comp < r {
            continue;
        }
        let polys = v.to_polys(&module);
        let projected: Vec<Polynomial> = polys[r..]
            .iter()
            .map(|p| match &ideal_gb {
                Some(b) => normal_form(p, b).remainder,
                None => p.clone(),
            })
            .collect();
        let u = ModuleElement::new(projected);
        if u.is_zero() || generators.contains(&u) {
            continue;
        }
        degrees.push(element_degree(&u, &rows));
        generators.push(u);
    }
    Ok(SyzygyModule {
        ring,
        generators,
        degrees,
        row_degrees: rows,
        column_degrees: graded,
        degree_bound: opts.groebner.degree_bound,
        pair_reductions: gb.pair_reductions(),
    })
}

fn element_degree(u: &ModuleElement, rows: &[i64]) -> Option<i64> {
    let mut deg = None;
    for (p, w) in u.components().iter().zip(rows) {
        if p.is_zero() {
            continue;
        }
        if !p.is_homogeneous() {
            return None;
        }
        let d = p.total_degree()? as i64 + w;
        match deg {
            None => deg = Some(d),
            Some(e) if e == d => {}
            Some(_) => return None,
        }
    }
    deg
}

/// True when `u * M` reduces to zero modulo `I` in every column.
pub fn is_syzygy(u: &ModuleElement, matrix: &[Vec<Polynomial>], ideal_gb: Option<&GroebnerBasis>) -> bool {
    let r = matrix.first().map_or(0, Vec::len);
    (0..r).all(|j| {
        let ring = u.components()[0].ring();
        let s = u
            .components()
            .iter()
            .zip(matrix)
            .fold(Polynomial::zero(ring), |acc, (c, row)| acc.add(&c.mul(&row[j])));
        match ideal_gb {
            Some(b) => normal_form(&s, b).remainder.is_zero(),
            None => s.is_zero(),
        }
    })
}
