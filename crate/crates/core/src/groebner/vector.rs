//! Sparse vectors of a graded free module `P^r`, the common currency of the engine.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::arith::FieldElement;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// How components are weighed against monomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Position {
    /// Compare monomials first, break ties by component.
    #[default]
    TermOverPosition,
    /// Compare components first; lower components dominate.
    PositionOverTerm,
}

/// A graded free module `P^rank` with a module order.
///
/// Component `i` carries the degree shift `shifts[i]`; the degree of a term
/// `m * e_i` is `deg(m) + shifts[i]`. Lower component indices rank higher.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    ring: Arc<PolyRing>,
    shifts: Vec<i64>,
    position: Position,
}

impl FreeModule {
    pub fn new(ring: &Arc<PolyRing>, rank: usize) -> Self {
        FreeModule {
            ring: ring.clone(),
            shifts: vec![0; rank],
            position: Position::TermOverPosition,
        }
    }

    pub fn with_shifts(mut self, shifts: Vec<i64>) -> Self {
        assert_eq!(shifts.len(), self.shifts.len());
        self.shifts = shifts;
        self
    }

    pub fn with_position(mut self, position: Position) -> Self {
        self.position = position;
        self
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn position(&self) -> Position {
        self.position
    }

    pub fn monomial_order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn cmp(&self, ca: usize, ma: &Monomial, cb: usize, mb: &Monomial) -> Ordering {
        let order = self.ring.order();
        match self.position {
            Position::TermOverPosition => order.cmp(ma, mb).then_with(|| cb.cmp(&ca)),
            Position::PositionOverTerm => cb.cmp(&ca).then_with(|| order.cmp(ma, mb)),
        }
    }

    pub fn term_degree(&self, comp: usize, m: &Monomial) -> i64 {
        m.degree() as i64 + self.shifts[comp]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub comp: usize,
    pub mono: Monomial,
    pub coeff: FieldElement,
}

/// Terms strictly decreasing in the module order, no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// `coeff * e_comp`.
    pub fn unit(module: &FreeModule, comp: usize, coeff: FieldElement) -> Self {
        Vector {
            terms: vec![Term {
                comp,
                mono: Monomial::one(module.ring().nvars()),
                coeff,
            }],
        }
    }

    pub fn from_polys(module: &FreeModule, polys: &[Polynomial]) -> Self {
        let mut terms: Vec<Term> = polys
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| {
                p.terms().iter().map(move |(m, c)| Term {
                    comp,
                    mono: m.clone(),
                    coeff: c.clone(),
                })
            })
            .collect();
        terms.sort_by(|a, b| module.cmp(b.comp, &b.mono, a.comp, &a.mono));
        Vector { terms }
    }

    pub fn to_polys(&self, module: &FreeModule) -> Vec<Polynomial> {
        let ring = module.ring();
        let mut buckets: Vec<Vec<(Monomial, FieldElement)>> = vec![Vec::new(); module.rank()];
        for t in &self.terms {
            buckets[t.comp].push((t.mono.clone(), t.coeff.clone()));
        }
        buckets
            .into_iter()
            .map(|terms| Polynomial::from_terms(ring, terms))
            .collect()
    }

    /// Degree of the leading term; equals every term's degree when homogeneous.
    pub fn degree(&self, module: &FreeModule) -> Option<i64> {
        self.lead().map(|t| module.term_degree(t.comp, &t.mono))
    }

    /// Largest term degree (the sugar of an input element).
    pub fn max_degree(&self, module: &FreeModule) -> Option<i64> {
        self.terms
            .iter()
            .map(|t| module.term_degree(t.comp, &t.mono))
            .max()
    }

    pub fn is_homogeneous(&self, module: &FreeModule) -> bool {
        match self.degree(module) {
            None => true,
            Some(d) => self
                .terms
                .iter()
                .all(|t| module.term_degree(t.comp, &t.mono) == d),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    comp: t.comp,
                    mono: t.mono.clone(),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    pub fn monic(&self) -> (Self, FieldElement) {
        let lc = self.lead().expect("monic of zero vector").coeff.clone();
        let inv = lc.inverse().expect("nonzero leading coefficient");
        (self.scale(&inv), inv)
    }

    /// `self + c * m * other` restricted to `self.terms[from..]`.
    pub fn add_scaled_from(
        &self,
        from: usize,
        other: &[Term],
        m: &Monomial,
        c: &FieldElement,
        module: &FreeModule,
    ) -> Self {
        let a = &self.terms[from..];
        let mut out = Vec::with_capacity(a.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let mut scaled: Option<Term> = None;
        loop {
            if scaled.is_none() && j < other.len() {
                let t = &other[j];
                scaled = Some(Term {
                    comp: t.comp,
                    mono: t.mono.mul(m),
                    coeff: &t.coeff * c,
                });
                j += 1;
            }
            match (a.get(i), scaled.take()) {
                (None, None) => break,
                (Some(x), None) => {
                    out.push(x.clone());
                    i += 1;
                }
                (None, Some(y)) => out.push(y),
                (Some(x), Some(y)) => match module.cmp(x.comp, &x.mono, y.comp, &y.mono) {
                    Ordering::Greater => {
                        out.push(x.clone());
                        i += 1;
                        scaled = Some(y);
                    }
                    Ordering::Less => out.push(y),
                    Ordering::Equal => {
                        let s = &x.coeff + &y.coeff;
                        if !s.is_zero() {
                            out.push(Term {
                                comp: x.comp,
                                mono: x.mono.clone(),
                                coeff: s,
                            });
                        }
                        i += 1;
                    }
                },
            }
        }
        Vector { terms: out }
    }

    pub fn add_scaled(&self, other: &Vector, m: &Monomial, c: &FieldElement, module: &FreeModule) -> Self {
        self.add_scaled_from(0, &other.terms, m, c, module)
    }

    #[cfg(test)]
    pub fn sub(&self, other: &Vector, module: &FreeModule) -> Self {
        let one = Monomial::one(module.ring().nvars());
        let c = -module.ring().field().one();
        self.add_scaled(other, &one, &c, module)
    }

    /// `self + p * other` for a polynomial `p` given by its terms.
    pub fn add_poly_times(
        &self,
        p: &[(Monomial, FieldElement)],
        other: &Vector,
        module: &FreeModule,
    ) -> Self {
        p.iter()
            .fold(self.clone(), |acc, (m, c)| acc.add_scaled(other, m, c, module))
    }
}
