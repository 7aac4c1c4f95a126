//! Jacobian matrices and graded presentations of `Sym^q` of the Kähler differentials.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{monomials_of_degree, Monomial, Polynomial};

/// The `s x n` matrix of partial derivatives `df_i/dx_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianMatrix {
    ideal: Ideal,
    entries: Vec<Vec<Polynomial>>,
}

impl JacobianMatrix {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.ideal.ring().nvars()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        self.entries.iter().map(|row| row[j].clone()).collect()
    }
}

pub fn jacobian(ideal: &Ideal) -> JacobianMatrix {
    let n = ideal.ring().nvars();
    let entries = ideal
        .generators()
        .iter()
        .map(|f| (0..n).map(|j| f.partial_derivative(j)).collect())
        .collect();
    JacobianMatrix {
        ideal: ideal.clone(),
        entries,
    }
}

/// A finitely presented graded module over `R = P/I`.
///
/// Row `k` of `relations` is the relation `sum_j relations[k][j] * g_j = 0`
/// among the generators `g_j` of degree `degrees[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatrix {
    ideal: Ideal,
    relations: Vec<Vec<Polynomial>>,
    labels: Vec<String>,
    degrees: Vec<i64>,
}

impl PresentationMatrix {
    pub fn new(
        ideal: &Ideal,
        relations: Vec<Vec<Polynomial>>,
        labels: Vec<String>,
        degrees: Vec<i64>,
    ) -> Result<Self> {
        if labels.len() != degrees.len() {
            return Err(Error::InvalidInput("one degree per generator label".into()));
        }
        if relations.iter().any(|r| r.len() != labels.len()) {
            return Err(Error::InvalidInput("relation length differs from generator count".into()));
        }
        Ok(PresentationMatrix {
            ideal: ideal.clone(),
            relations,
            labels,
            degrees,
        })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn relations(&self) -> &[Vec<Polynomial>] {
        &self.relations
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn generator_count(&self) -> usize {
        self.labels.len()
    }

    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    /// Every relation is homogeneous with respect to the generator degrees.
    pub fn is_graded(&self) -> bool {
        self.relations.iter().all(|row| {
            let mut deg = None;
            row.iter().zip(&self.degrees).all(|(p, d)| {
                if p.is_zero() {
                    return true;
                }
                if !p.is_homogeneous() {
                    return false;
                }
                let e = p.total_degree().unwrap_or(0) as i64 + d;
                *deg.get_or_insert(e) == e
            })
        })
    }
}

fn differential_names(ideal: &Ideal) -> Vec<String> {
    ideal.ring().variables().iter().map(|v| format!("d{v}")).collect()
}

/// `R^s --J^T--> R^n --> Omega --> 0` with generators `dx_j` of degree 1.
pub fn omega_presentation(ideal: &Ideal) -> PresentationMatrix {
    let j = jacobian(ideal);
    let labels = differential_names(ideal);
    let degrees = vec![1; labels.len()];
    PresentationMatrix {
        ideal: ideal.clone(),
        relations: j.entries,
        labels,
        degrees,
    }
}

/// Presentation of `Sym^q(Omega)` by the monomials `(dX)^nu`, `|nu| = q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPowerPresentation {
    q: u32,
    exponents: Vec<Monomial>,
    presentation: PresentationMatrix,
}

impl SymPowerPresentation {
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Exponent vectors `nu` of the generators, in generator order.
    pub fn exponents(&self) -> &[Monomial] {
        &self.exponents
    }

    pub fn presentation(&self) -> &PresentationMatrix {
        &self.presentation
    }

    pub fn generator_count(&self) -> usize {
        self.presentation.generator_count()
    }

    pub fn relation_count(&self) -> usize {
        self.presentation.relation_count()
    }
}

/// Relations `(dX)^mu * df_i` for `|mu| = q - 1` and every generator `f_i`.
pub fn sym_power_presentation(ideal: &Ideal, q: u32) -> Result<SymPowerPresentation> {
    if q == 0 {
        return Err(Error::InvalidInput("symmetric power must be at least 1".into()));
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    let exponents = monomials_of_degree(q, n, ring.order());
    let index: HashMap<&Monomial, usize> =
        exponents.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let names = differential_names(ideal);
    let labels = exponents.iter().map(|m| m.format_with(&names)).collect();
    let degrees = vec![q as i64; exponents.len()];

    let j = jacobian(ideal);
    let mus = monomials_of_degree(q - 1, n, ring.order());
    let zero = Polynomial::zero(ring);
    let mut relations = Vec::with_capacity(j.rows() * mus.len());
    for row in j.entries() {
        for mu in &mus {
            let mut rel = vec![zero.clone(); exponents.len()];
            for (v, partial) in row.iter().enumerate() {
                if partial.is_zero() {
                    continue;
                }
                let k = index[&mu.mul(&Monomial::var(n, v))];
                rel[k] = rel[k].add(partial);
            }
            relations.push(rel);
        }
    }
    Ok(SymPowerPresentation {
        q,
        exponents: exponents.clone(),
        presentation: PresentationMatrix {
            ideal: ideal.clone(),
            relations,
            labels,
            degrees,
        },
    })
}
