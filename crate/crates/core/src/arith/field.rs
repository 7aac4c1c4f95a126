//! Coefficient fields and their elements.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclotomic::{CyclotomicElement, CyclotomicField};
use crate::error::{Error, Result};

/// Descriptor of a coefficient field: `Q`, `F_p` or `Q(zeta_m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Field {
    Rational,
    Prime(u64),
    Cyclotomic(Arc<CyclotomicField>),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= (1 << 32) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn cyclotomic(m: u32) -> Result<Self> {
        Ok(Field::Cyclotomic(CyclotomicField::new(m)?))
    }

    /// Field from a characteristic (0 means `Q`).
    pub fn from_characteristic(p: u64) -> Result<Self> {
        if p == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(p)
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            _ => 0,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(n.into())),
            Field::Prime(p) => FieldElement::Prime {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
            Field::Cyclotomic(k) => FieldElement::Cyclotomic(CyclotomicElement::from_rational(
                k,
                BigRational::from_integer(n.into()),
            )),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self {
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                FieldElement::Prime {
                    value: r.to_u64().expect("residue fits"),
                    modulus: *p,
                }
            }
            _ => self
                .embed_rational(&BigRational::from_integer(n.clone()))
                .expect("integers embed in characteristic zero"),
        }
    }

    /// Canonical image of a rational number.
    pub fn embed_rational(&self, q: &BigRational) -> Result<FieldElement> {
        match self {
            Field::Rational => Ok(FieldElement::Rational(q.clone())),
            Field::Cyclotomic(k) => Ok(FieldElement::Cyclotomic(
                CyclotomicElement::from_rational(k, q.clone()),
            )),
            Field::Prime(p) => {
                let den = self.from_bigint(q.denom());
                if den.is_zero() {
                    return Err(Error::NonInvertibleDenominator {
                        denominator: q.denom().to_string(),
                        characteristic: *p,
                    });
                }
                self.from_bigint(q.numer()).try_div(&den)
            }
        }
    }

    /// `zeta_m^k` in a cyclotomic field.
    pub fn zeta_power(&self, k: u32) -> Option<FieldElement> {
        match self {
            Field::Cyclotomic(f) => Some(FieldElement::Cyclotomic(CyclotomicElement::zeta_power(
                f, k,
            ))),
            _ => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Cyclotomic(k) => write!(f, "QQ(zeta_{})", k.conductor()),
        }
    }
}

/// An exact field element. Values are always in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
    Cyclotomic(CyclotomicElement),
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let mut result = 1u128;
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    result as u64
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Prime { modulus, .. } => Field::Prime(*modulus),
            FieldElement::Cyclotomic(c) => Field::Cyclotomic(c.field().clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Prime { value, .. } => *value == 0,
            FieldElement::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Prime { value, .. } => *value == 1,
            FieldElement::Cyclotomic(c) => c.is_one(),
        }
    }

    /// Rational value, when the element lies in the prime subfield `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q.clone()),
            FieldElement::Prime { .. } => None,
            FieldElement::Cyclotomic(c) => c.as_rational(),
        }
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::FieldMismatch(self.field().to_string(), other.field().to_string())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                Ok(FieldElement::Rational(a + b))
            }
            (
                FieldElement::Prime { value: a, modulus: p },
                FieldElement::Prime { value: b, modulus: q },
            ) if p == q => Ok(FieldElement::Prime {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            (FieldElement::Cyclotomic(a), FieldElement::Cyclotomic(b))
                if a.field() == b.field() =>
            {
                Ok(FieldElement::Cyclotomic(a.add(b)))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                Ok(FieldElement::Rational(a * b))
            }
            (
                FieldElement::Prime { value: a, modulus: p },
                FieldElement::Prime { value: b, modulus: q },
            ) if p == q => Ok(FieldElement::Prime {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            (FieldElement::Cyclotomic(a), FieldElement::Cyclotomic(b))
                if a.field() == b.field() =>
            {
                Ok(FieldElement::Cyclotomic(a.mul(b)))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(q) => FieldElement::Rational(q.recip()),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            },
            FieldElement::Cyclotomic(c) => {
                FieldElement::Cyclotomic(c.inverse().ok_or(Error::DivisionByZero)?)
            }
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        if self.field() != other.field() {
            return Err(self.mismatch(other));
        }
        self.try_mul(&other.inverse()?)
    }

    fn neg_ref(&self) -> Self {
        match self {
            FieldElement::Rational(q) => FieldElement::Rational(-q),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            FieldElement::Cyclotomic(c) => FieldElement::Cyclotomic(c.neg()),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = self.field().one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Multiplication by a rational scalar (characteristic zero only).
    pub fn scale_rational(&self, q: &BigRational) -> Result<Self> {
        match self {
            FieldElement::Cyclotomic(c) => Ok(FieldElement::Cyclotomic(c.scale(q))),
            _ => self.try_mul(&self.field().embed_rational(q)?),
        }
    }

    /// True when the element prints with a leading minus sign.
    pub(crate) fn is_negative_literal(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_negative(),
            FieldElement::Cyclotomic(c) => c.as_rational().is_some_and(|q| q.is_negative()),
            FieldElement::Prime { .. } => false,
        }
    }

    /// Whether the printed form needs parentheses when used as a factor.
    pub(crate) fn is_compound(&self) -> bool {
        matches!(self, FieldElement::Cyclotomic(c) if c.as_rational().is_none())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => write!(f, "{q}"),
            FieldElement::Prime { value, .. } => write!(f, "{value}"),
            FieldElement::Cyclotomic(c) => write!(f, "{c}"),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$try(rhs).expect("field operation on mismatched or invalid operands")
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldElement {
        FieldElement::Rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
    }

    #[test]
    fn prime_product() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(&f5.from_i64(3) * &f5.from_i64(4), f5.from_i64(2));
        assert_eq!(f5.from_i64(-1), f5.from_i64(4));
    }

    #[test]
    fn zeta_three_sum() {
        let k = Field::cyclotomic(3).unwrap();
        let z = k.zeta_power(1).unwrap();
        let z2 = k.zeta_power(2).unwrap();
        assert_eq!(&z + &z2, k.from_i64(-1));
    }

    #[test]
    fn embedding() {
        let k5 = Field::cyclotomic(5).unwrap();
        match k5.embed_rational(&BigRational::one()).unwrap() {
            FieldElement::Cyclotomic(c) => {
                assert!(c.coeffs()[0].is_one());
                assert!(c.coeffs()[1..].iter().all(Zero::is_zero));
                assert_eq!(c.coeffs().len(), 4);
            }
            _ => panic!("wrong variant"),
        }
        let f5 = Field::prime(5).unwrap();
        let seven_halves = BigRational::new(7.into(), 2.into());
        assert_eq!(f5.embed_rational(&seven_halves).unwrap(), f5.from_i64(1));
        let f3 = Field::prime(3).unwrap();
        let third = BigRational::new(1.into(), 3.into());
        assert!(matches!(
            f3.embed_rational(&third),
            Err(Error::NonInvertibleDenominator { .. })
        ));
    }

    #[test]
    fn errors() {
        assert_eq!(q(1, 2).try_div(&q(0, 1)), Err(Error::DivisionByZero));
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(
            q(1, 2).try_add(&f5.one()),
            Err(Error::FieldMismatch(..))
        ));
        assert!(matches!(Field::prime(6), Err(Error::NotPrime(6))));
    }

    #[test]
    fn cyclotomic_inverse() {
        let k = Field::cyclotomic(12).unwrap();
        let z = k.zeta_power(1).unwrap();
        let a = &(&z * &z) + &k.from_i64(3);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_one());
    }
}
