//! Ideals, module elements, normal forms and membership.

use std::sync::Arc;

use super::buchberger::{groebner, GroebnerBasis, GroebnerOptions};
use super::vector::{FreeModule, Vector};
use crate::error::Result;
use crate::poly::{PolyRing, Polynomial};

/// An ideal of `P = k[x_1..x_n]` given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    /// `I + (extra)`.
    pub fn extended(&self, extra: impl IntoIterator<Item = Polynomial>) -> Ideal {
        let mut generators = self.generators.clone();
        generators.extend(extra);
        Ideal::new(&self.ring, generators)
    }

    fn module(&self) -> FreeModule {
        FreeModule::new(&self.ring, 1)
    }

    pub fn groebner_basis(&self, opts: &GroebnerOptions) -> Result<GroebnerBasis> {
        let module = self.module();
        let inputs = self
            .generators
            .iter()
            .map(|g| Vector::from_polys(&module, std::slice::from_ref(g)))
            .collect();
        groebner(&module, inputs, opts)
    }

    pub fn contains(&self, f: &Polynomial, opts: &GroebnerOptions) -> Result<bool> {
        ideal_membership(f, self, opts)
    }
}

/// Normal form of a polynomial modulo an ideal basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub remainder: Polynomial,
    /// `f = sum quotients[k] * basis[k] + remainder`.
    pub quotients: Vec<Polynomial>,
}

pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> NormalForm {
    assert!(gb.is_ideal(), "normal_form expects an ideal basis");
    let mut nf = gb.normal_form_vector(std::slice::from_ref(f));
    NormalForm {
        remainder: nf.remainder.remove(0),
        quotients: nf.quotients,
    }
}

/// `f` in `I` iff its normal form modulo a Gröbner basis of `I` vanishes.
pub fn ideal_membership(f: &Polynomial, ideal: &Ideal, opts: &GroebnerOptions) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let gb = ideal.groebner_basis(opts)?;
    Ok(normal_form(f, &gb).remainder.is_zero())
}

/// An element of a free module `P^rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    components: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(components: Vec<Polynomial>) -> Self {
        ModuleElement { components }
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        ModuleElement::new(vec![Polynomial::zero(ring); rank])
    }

    pub fn unit(ring: &Arc<PolyRing>, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.components[i] = Polynomial::one(ring);
        v
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        ModuleElement::new(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn scale_by(&self, p: &Polynomial) -> Self {
        ModuleElement::new(self.components.iter().map(|c| c.mul(p)).collect())
    }
}

/// Result of a submodule membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub remainder: ModuleElement,
    /// Coefficients on the generators when membership holds and cofactors were tracked.
    pub cofactors: Option<Vec<Polynomial>>,
}

/// Gröbner basis of the submodule of `module` generated by `generators`.
pub fn module_groebner_basis(
    module: &FreeModule,
    generators: &[ModuleElement],
    opts: &GroebnerOptions,
) -> Result<GroebnerBasis> {
    let inputs = generators
        .iter()
        .map(|g| {
            assert_eq!(g.rank(), module.rank(), "rank mismatch");
            Vector::from_polys(module, g.components())
        })
        .collect();
    groebner(module, inputs, opts)
}

/// Decides `target` in the submodule generated by `generators`, with cofactors.
pub fn module_membership(
    target: &ModuleElement,
    generators: &[ModuleElement],
    module: &FreeModule,
    opts: &GroebnerOptions,
) -> Result<Membership> {
    let opts = opts.clone().with_cofactors();
    let gb = module_groebner_basis(module, generators, &opts)?;
    let nf = gb.normal_form_vector(target.components());
    let remainder = ModuleElement::new(nf.remainder);
    let member = remainder.is_zero();
    let cofactors = if member {
        gb.lift_to_inputs(&nf.quotients)
    } else {
        None
    };
    Ok(Membership {
        member,
        remainder,
        cofactors,
    })
}

/// Replays `target = sum cofactors[k] * generators[k]` exactly.
pub fn check_combination(
    target: &ModuleElement,
    generators: &[ModuleElement],
    cofactors: &[Polynomial],
) -> bool {
    if generators.len() != cofactors.len()
        || generators.iter().any(|g| g.rank() != target.rank())
    {
        return false;
    }
    let Some(first) = target.components().first() else {
        return true;
    };
    let ring = first.ring();
    let sum = generators
        .iter()
        .zip(cofactors)
        .fold(ModuleElement::zero(ring, target.rank()), |acc, (g, c)| {
            acc.add(&g.scale_by(c))
        });
    sum == *target
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::poly::{parse_polynomial, MonomialOrder};

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vars.iter().copied(), Field::Rational, MonomialOrder::Grevlex).unwrap()
    }

    fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_polynomial(g, r).unwrap()).collect())
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let r = ring(&["x", "y", "z"]);
        let gb = ideal(&r, &["x^2 - y*z"]).groebner_basis(&Default::default()).unwrap();
        assert_eq!(gb.polynomials(), vec![parse_polynomial("x^2 - y*z", &r).unwrap()]);
    }

    #[test]
    fn monomial_generators_kept() {
        let r = ring(&["x", "y", "z", "w"]);
        let gb = ideal(&r, &["x^3", "y^3", "z^3", "w^3"])
            .groebner_basis(&Default::default())
            .unwrap();
        let mut got: Vec<String> = gb.polynomials().iter().map(ToString::to_string).collect();
        got.sort();
        assert_eq!(got, vec!["w^3", "x^3", "y^3", "z^3"]);
    }

    #[test]
    fn redundant_generator_disappears() {
        let r = ring(&["x", "y", "z", "w"]);
        let gb = ideal(&r, &["x*y - z*w", "y", "z", "w"])
            .groebner_basis(&Default::default())
            .unwrap();
        let mut got: Vec<String> = gb.polynomials().iter().map(ToString::to_string).collect();
        got.sort();
        assert_eq!(got, vec!["w", "y", "z"]);
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x", "y", "z"]);
        let f = parse_polynomial("x^2 - y*z", &r).unwrap();
        let gb = ideal(&r, &["x^2 - y*z"]).groebner_basis(&Default::default()).unwrap();
        let nf = normal_form(&f, &gb);
        assert!(nf.remainder.is_zero());
        assert_eq!(nf.quotients, vec![Polynomial::one(&r)]);

        let gb2 = ideal(&r, &["y", "z", "x^2 - y*z"]).groebner_basis(&Default::default()).unwrap();
        let x = parse_polynomial("x", &r).unwrap();
        assert_eq!(normal_form(&x, &gb2).remainder, x);
    }

    #[test]
    fn memberships() {
        let r = ring(&["x", "y", "z", "w"]);
        let opts = GroebnerOptions::default();
        let i = ideal(&r, &["x", "z", "w", "x*y - z*w"]);
        assert!(!i.contains(&parse_polynomial("y", &r).unwrap(), &opts).unwrap());
        let r3 = ring(&["x", "y", "z"]);
        let j = ideal(&r3, &["y", "x^2 - y*z"]);
        assert!(j.contains(&parse_polynomial("x^2", &r3).unwrap(), &opts).unwrap());
        assert!(j.contains(&Polynomial::zero(&r3), &opts).unwrap());
    }

    #[test]
    fn module_membership_with_cofactors() {
        let r = ring(&["x", "y"]);
        let module = FreeModule::new(&r, 2);
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let gens = vec![
            ModuleElement::new(vec![p("x"), p("y")]),
            ModuleElement::new(vec![p("y"), p("0")]),
        ];
        let target = ModuleElement::new(vec![p("x^2 + y^2"), p("x*y")]);
        let m = module_membership(&target, &gens, &module, &Default::default()).unwrap();
        assert!(m.member);
        let cof = m.cofactors.unwrap();
        assert!(check_combination(&target, &gens, &cof));

        let outside = ModuleElement::new(vec![p("0"), p("x")]);
        let m2 = module_membership(&outside, &gens, &module, &Default::default()).unwrap();
        assert!(!m2.member);
        assert!(m2.cofactors.is_none());
    }
}
