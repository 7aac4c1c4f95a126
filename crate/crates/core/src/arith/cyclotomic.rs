//! Cyclotomic polynomials and the fields `Q(zeta_m)`.
//!
//! Elements are dense coefficient vectors on the power basis
//! `1, z, ..., z^(phi(m)-1)`, always reduced modulo `Phi_m`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Default upper bound on accepted conductors.
pub const DEFAULT_CONDUCTOR_BOUND: u32 = 120;

/// Euler's totient by trial division.
pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer coefficients (ascending) of the `m`-th cyclotomic polynomial.
///
/// Computed by exact division of `x^m - 1` by the product of `Phi_d` over the
/// proper divisors `d` of `m`.
pub fn cyclotomic_coefficients(m: u32) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic polynomial needs m >= 1");
    let mut numerator = vec![BigInt::zero(); m as usize + 1];
    numerator[0] = -BigInt::one();
    numerator[m as usize] = BigInt::one();
    for d in (1..m).filter(|d| m % d == 0) {
        numerator = exact_monic_div(&numerator, &cyclotomic_coefficients(d));
    }
    numerator
}

// Division by a monic integer polynomial with zero remainder.
fn exact_monic_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &c * bi;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// The field `Q(zeta_m)` with its defining polynomial.
#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u32,
    degree: usize,
    modulus: Vec<BigInt>,
}

impl CyclotomicField {
    pub fn new(conductor: u32) -> Result<Arc<Self>> {
        Self::with_bound(conductor, DEFAULT_CONDUCTOR_BOUND)
    }

    pub fn with_bound(conductor: u32, bound: u32) -> Result<Arc<Self>> {
        if conductor == 0 || conductor > bound {
            return Err(Error::ConductorTooLarge { conductor, bound });
        }
        let modulus = cyclotomic_coefficients(conductor);
        Ok(Arc::new(CyclotomicField {
            conductor,
            degree: modulus.len() - 1,
            modulus,
        }))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `phi(m)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}

impl Eq for CyclotomicField {}

/// An element of `Q(zeta_m)`.
#[derive(Clone, Debug)]
pub struct CyclotomicElement {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicElement {}

impl std::hash::Hash for CyclotomicElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.conductor.hash(state);
        self.coeffs.hash(state);
    }
}

impl CyclotomicElement {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        CyclotomicElement {
            field: field.clone(),
            coeffs: vec![BigRational::zero(); field.degree],
        }
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: BigRational) -> Self {
        let mut e = Self::zero(field);
        e.coeffs[0] = q;
        e
    }

    /// `zeta^k`, reduced.
    pub fn zeta_power(field: &Arc<CyclotomicField>, k: u32) -> Self {
        let k = (k % field.conductor) as usize;
        let mut raw = vec![BigRational::zero(); k.max(field.degree - 1) + 1];
        raw[k] = BigRational::one();
        Self::from_raw(field, raw)
    }

    /// Reduces an arbitrary-length ascending coefficient vector modulo `Phi_m`.
    pub fn from_raw(field: &Arc<CyclotomicField>, mut raw: Vec<BigRational>) -> Self {
        let d = field.degree;
        if raw.len() > d {
            for k in (d..raw.len()).rev() {
                let c = std::mem::take(&mut raw[k]);
                if c.is_zero() {
                    continue;
                }
                // Cyclotomic coefficients are mostly 0 and +-1.
                for (i, mi) in field.modulus[..d].iter().enumerate() {
                    if mi.is_zero() {
                        continue;
                    } else if mi.is_one() {
                        raw[k - d + i] -= &c;
                    } else if (-mi).is_one() {
                        raw[k - d + i] += &c;
                    } else {
                        raw[k - d + i] -= &c * mi;
                    }
                }
            }
            raw.truncate(d);
        }
        raw.resize(d, BigRational::zero());
        CyclotomicElement {
            field: field.clone(),
            coeffs: raw,
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CyclotomicElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub(crate) fn neg(&self) -> Self {
        CyclotomicElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        let d = self.field.degree;
        let mut raw = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Self::from_raw(&self.field, raw)
    }

    pub(crate) fn scale(&self, q: &BigRational) -> Self {
        CyclotomicElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a * q).collect(),
        }
    }

    /// Inverse via the extended Euclidean algorithm against `Phi_m`.
    pub(crate) fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let modulus: Vec<BigRational> = self
            .field
            .modulus
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (g, s) = qpoly::ext_gcd(&qpoly::trim(self.coeffs.clone()), &modulus);
        // Phi_m is irreducible, so the gcd is a nonzero constant.
        debug_assert_eq!(g.len(), 1);
        let inv_g = g[0].recip();
        let s: Vec<BigRational> = s.into_iter().map(|c| c * &inv_g).collect();
        Some(Self::from_raw(&self.field, s))
    }
}

impl fmt::Display for CyclotomicElement {
    /// Prints the element as a polynomial in `z`, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Dense univariate helpers over `Q` (ascending coefficients).
mod qpoly {
    use num_rational::BigRational;
    use num_traits::Zero;

    pub fn trim(mut a: Vec<BigRational>) -> Vec<BigRational> {
        while a.last().is_some_and(Zero::is_zero) {
            a.pop();
        }
        a
    }

    fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let zero = BigRational::zero();
        trim(
            (0..n)
                .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut rem = a.to_vec();
        let db = b.len() - 1;
        if rem.len() < b.len() {
            return (Vec::new(), trim(rem));
        }
        let lead_inv = b[db].recip();
        let mut quot = vec![BigRational::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + db] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, bi) in b.iter().enumerate() {
                rem[k + i] -= &c * bi;
            }
            quot[k] = c;
        }
        (trim(quot), trim(rem))
    }

    /// Returns `(g, s)` with `s*a = g (mod b)`.
    pub fn ext_gcd(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![BigRational::from_integer(1.into())], Vec::new());
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s2 = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        (r0, s0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_coefficients(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_coefficients(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_coefficients(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_coefficients(4), ints(&[1, 0, 1]));
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(30), 8);
        assert_eq!(euler_phi(97), 96);
    }

    #[test]
    fn conductor_bound_enforced() {
        assert!(matches!(
            CyclotomicField::new(121),
            Err(Error::ConductorTooLarge { .. })
        ));
        assert!(CyclotomicField::with_bound(121, 200).is_ok());
    }

    #[test]
    fn zeta_powers_wrap() {
        let k = CyclotomicField::new(5).unwrap();
        let z = CyclotomicElement::zeta_power(&k, 1);
        let mut acc = CyclotomicElement::from_rational(&k, BigRational::one());
        for _ in 0..5 {
            acc = acc.mul(&z);
        }
        assert!(acc.is_one());
        // 1 + z + z^2 + z^3 + z^4 = 0
        let mut sum = CyclotomicElement::zero(&k);
        for e in 0..5 {
            sum = sum.add(&CyclotomicElement::zeta_power(&k, e));
        }
        assert!(sum.is_zero());
    }

    #[test]
    fn display_is_polynomial_in_z() {
        let k = CyclotomicField::new(3).unwrap();
        let z2 = CyclotomicElement::zeta_power(&k, 2);
        assert_eq!(z2.to_string(), "-z - 1");
        assert_eq!(CyclotomicElement::zero(&k).to_string(), "0");
    }
}
