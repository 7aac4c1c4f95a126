use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::monomial::{Monomial, MonomialOrder};
use crate::arith::{Field, FieldElement};
use crate::error::{Error, Result};

/// A standard-graded polynomial ring `k[x_1, ..., x_n]` with an active order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    variables: Vec<String>,
    field: Field,
    order: MonomialOrder,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: Into<String>>(
        variables: impl IntoIterator<Item = S>,
        field: Field,
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("variable `{v}` declared twice")));
            }
        }
        if matches!(field, Field::Cyclotomic(_)) && variables.iter().any(|v| v == "z") {
            return Err(Error::InvalidRing(
                "`z` is reserved for the root of unity over a cyclotomic field".into(),
            ));
        }
        Ok(Arc::new(PolyRing {
            variables,
            field,
            order,
        }))
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing {
            variables: self.variables.clone(),
            field: self.field.clone(),
            order,
        })
    }

    /// Same variables and order, different coefficient field.
    pub fn with_field(&self, field: Field) -> Arc<Self> {
        Arc::new(PolyRing {
            variables: self.variables.clone(),
            field,
            order: self.order,
        })
    }
}

/// Sparse polynomial; terms strictly decreasing in the ring order, no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, FieldElement)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: FieldElement) -> Self {
        Self::from_terms(ring, vec![(Monomial::one(ring.nvars()), c)])
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::from_terms(ring, vec![(Monomial::var(ring.nvars(), i), ring.field().one())])
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: FieldElement) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Builds a canonical polynomial from arbitrary terms (duplicates combined).
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, FieldElement)>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, FieldElement)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|(_, c)| c.is_zero()) {
                out.pop();
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, FieldElement)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant (a unit of the polynomial ring).
    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, FieldElement)> {
        self.terms.first()
    }

    /// Maximal total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Homogeneous component of the given degree.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .cloned()
                .collect(),
        }
    }

    /// Constant coefficient.
    pub fn constant_term(&self) -> FieldElement {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.ring.field().zero(),
        }
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        self.check_ring(other);
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), if negate { -cb } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            other.terms[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })),
        );
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplication by a single term; the order is multiplicative so sorting is kept.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .fold(Self::zero(&self.ring), |acc, (m, c)| acc.add(&large.mul_term(m, c)))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.ring), |acc, _| acc.mul(self))
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Self {
        assert!(i < self.ring.nvars(), "variable index out of range");
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponents()[i] > 0)
            .filter_map(|(m, c)| {
                let e = m.exponents()[i];
                let coeff = c * &field.from_i64(e as i64);
                if coeff.is_zero() {
                    return None;
                }
                let mut exps = m.exponents().to_vec();
                exps[i] -= 1;
                Some((Monomial::from_exponents(exps).expect("smaller degree"), coeff))
            })
            .collect();
        // d/dx_i maps distinct monomials to distinct monomials, preserving the order.
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Checks the Euler identity `sum x_i df/dx_i = deg(f) f` for homogeneous `f`.
    pub fn euler_check(&self) -> Result<bool> {
        if !self.is_homogeneous() {
            return Err(Error::InvalidInput("euler_check needs a homogeneous polynomial".into()));
        }
        let Some(degree) = self.total_degree() else {
            return Ok(true);
        };
        let field = self.ring.field();
        let d = field.from_i64(degree as i64);
        if d.is_zero() {
            return Err(Error::DegreeNotInvertible {
                degree,
                characteristic: field.characteristic(),
            });
        }
        let lhs = (0..self.ring.nvars()).fold(Polynomial::zero(&self.ring), |acc, i| {
            acc.add(&Polynomial::var(&self.ring, i).mul(&self.partial_derivative(i)))
        });
        Ok(lhs == self.scale(&d))
    }

    /// Substitutes variables by a permutation: `x_i -> x_{perm[i]}`.
    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        let n = self.ring.nvars();
        assert_eq!(perm.len(), n);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0; n];
                for (i, e) in m.exponents().iter().enumerate() {
                    exps[perm[i]] = *e;
                }
                (Monomial::from_exponents(exps).expect("same degree"), c.clone())
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Reinterprets the polynomial in a ring with the same variables and field.
    pub fn in_ring(&self, ring: &Arc<PolyRing>) -> Self {
        assert_eq!(ring.variables(), self.ring.variables());
        Polynomial::from_terms(ring, self.terms.clone())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.variables();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative_literal();
            let mag = if negative { -c } else { c.clone() };
            match (k == 0, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            let coeff = if mag.is_compound() {
                format!("({mag})")
            } else {
                mag.to_string()
            };
            if m.is_one() {
                write!(f, "{coeff}")?;
            } else if mag.is_one() {
                write!(f, "{}", m.format_with(names))?;
            } else {
                write!(f, "{coeff}*{}", m.format_with(names))?;
            }
        }
        Ok(())
    }
}
