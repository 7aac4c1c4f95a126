//! Molien series `(1/|G|) sum 1/det(I - t sigma)` of a finite matrix group.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::group::MatrixGroup;
use super::matrix::Matrix;
use crate::arith::{Field, FieldElement, UniPoly};
use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, MonomialOrder};

/// Degrees up to which the trace route double-checks the series.
pub const TRACE_CHECK_DEGREE: usize = 10;

/// A rational function in `t` with rational coefficients, `D(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub numerator: Vec<BigRational>,
    pub denominator: Vec<BigRational>,
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

impl RationalFunction {
    pub fn from_i64(numerator: &[i64], denominator: &[i64]) -> Self {
        let q = |v: &[i64]| v.iter().map(|&c| BigRational::from_integer(c.into())).collect();
        RationalFunction {
            numerator: q(numerator),
            denominator: q(denominator),
        }
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_function(&self, other: &Self) -> bool {
        qpoly_mul(&self.numerator, &other.denominator) == qpoly_mul(&other.numerator, &self.denominator)
    }

    /// Taylor coefficients up to `t^n`.
    pub fn expand(&self, n: usize) -> Vec<BigRational> {
        let d0 = &self.denominator[0];
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.numerator.get(k).cloned().unwrap_or_else(BigRational::zero);
            for j in 1..=k.min(self.denominator.len().saturating_sub(1)) {
                acc -= &self.denominator[j] * &out[k - j];
            }
            out.push(acc / d0);
        }
        out
    }
}

fn format_qpoly(p: &[BigRational]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = match (k, mag.is_one()) {
            (0, _) => mag.to_string(),
            (1, true) => "t".to_string(),
            (1, false) => format!("{mag}*t"),
            (_, true) => format!("t^{k}"),
            (_, false) => format!("{mag}*t^{k}"),
        };
        if parts.is_empty() {
            parts.push(if c.is_negative() { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", format_qpoly(&self.numerator), format_qpoly(&self.denominator))
    }
}

/// Molien data truncated at degree `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MolienData {
    pub group_order: usize,
    pub n: usize,
    pub series: RationalFunction,
    /// `a_q = dim (Sym^q F)^G`, `q = 0..=N`.
    pub coefficients: Vec<BigInt>,
    /// `b_q = C(n - 1 + q, n - 1)`.
    pub ambient: Vec<BigInt>,
}

impl MolienData {
    pub fn truncation(&self) -> usize {
        self.coefficients.len() - 1
    }
}

fn to_rational(c: &FieldElement) -> Result<BigRational> {
    c.as_rational()
        .ok_or_else(|| Error::Internal(format!("coefficient {c} is not rational")))
}

fn to_natural(q: usize, c: &FieldElement) -> Result<BigInt> {
    let err = || Error::NonIntegerCoefficient {
        degree: q,
        value: c.to_string(),
    };
    let r = c.as_rational().ok_or_else(err)?;
    if !r.is_integer() || r.is_negative() {
        return Err(err());
    }
    Ok(r.to_integer())
}

fn exact_div(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero());
    q
}

/// Distinct `det(I - t sigma)` with multiplicities, in element order.
fn grouped_denominators(group: &MatrixGroup) -> Vec<(UniPoly, usize)> {
    let mut out: Vec<(UniPoly, usize)> = Vec::new();
    for g in group.elements() {
        let d = g.det_one_minus_t();
        match out.iter_mut().find(|(p, _)| *p == d) {
            Some(entry) => entry.1 += 1,
            None => out.push((d, 1)),
        }
    }
    out
}

/// The averaged sum as a reduced fraction with `D(0) = 1`.
fn rational_form(group: &MatrixGroup, dens: &[(UniPoly, usize)]) -> Result<RationalFunction> {
    let field = group.field();
    let lcm = dens.iter().fold(UniPoly::one(field), |acc, (d, _)| {
        let g = acc.gcd(d);
        exact_div(&acc.mul(d), &g)
    });
    let mut num = UniPoly::zero(field);
    for (d, count) in dens {
        num = num.add(&exact_div(&lcm, d).scale(&field.from_i64(*count as i64)));
    }
    let order_inv = field.from_i64(group.order() as i64).inverse()?;
    num = num.scale(&order_inv);
    let g = num.gcd(&lcm);
    let (mut num, mut den) = (exact_div(&num, &g), exact_div(&lcm, &g));
    let c0 = den.coeff(0).inverse()?;
    num = num.scale(&c0);
    den = den.scale(&c0);
    Ok(RationalFunction {
        numerator: num.coeffs().iter().map(to_rational).collect::<Result<_>>()?,
        denominator: den.coeffs().iter().map(to_rational).collect::<Result<_>>()?,
    })
}

/// Molien series of `group` in characteristic 0, truncated at `max_degree`.
///
/// The coefficients come from power-series inversion of each `det(I - t sigma)`.
/// They are checked against the reduced rational form for every degree and
/// against direct averaging of `trace(Sym^q sigma)` for `q <= 10`.
pub fn molien_series(group: &MatrixGroup, max_degree: usize) -> Result<MolienData> {
    let field = group.field();
    if field.characteristic() != 0 {
        return Err(Error::InvalidInput("Molien series are computed in characteristic 0".into()));
    }
    let dens = grouped_denominators(group);
    let series = rational_form(group, &dens)?;

    let mut sums = vec![field.zero(); max_degree + 1];
    for (d, count) in &dens {
        let c = field.from_i64(*count as i64);
        for (acc, term) in sums.iter_mut().zip(d.series_inverse(max_degree)) {
            *acc = &*acc + &(&term * &c);
        }
    }
    let order_inv = field.from_i64(group.order() as i64).inverse()?;
    let coefficients = sums
        .iter()
        .enumerate()
        .map(|(q, s)| to_natural(q, &(s * &order_inv)))
        .collect::<Result<Vec<_>>>()?;

    let n = group.dim();
    let ambient: Vec<BigInt> = (0..=max_degree)
        .map(|q| binomial(BigInt::from(n - 1 + q), BigInt::from(n - 1)))
        .collect();
    if let Some(q) = (0..=max_degree).find(|&q| coefficients[q] > ambient[q]) {
        return Err(Error::Internal(format!("a_{q} exceeds b_{q}")));
    }
    let expanded = series.expand(max_degree);
    if let Some(q) = (0..=max_degree).find(|&q| expanded[q] != BigRational::from_integer(coefficients[q].clone())) {
        return Err(Error::DisagreementBetweenMethods(format!(
            "rational form and series disagree at degree {q}"
        )));
    }
    for q in 0..=max_degree.min(TRACE_CHECK_DEGREE) {
        let direct = trace_average(group, q, sym_trace_direct)?;
        if direct != coefficients[q] {
            return Err(Error::DisagreementBetweenMethods(format!(
                "trace average {direct} differs from Molien coefficient {} at degree {q}",
                coefficients[q]
            )));
        }
    }
    Ok(MolienData {
        group_order: group.order(),
        n,
        series,
        coefficients,
        ambient,
    })
}

/// `trace(Sym^q sigma)` by expanding `sigma` acting on degree-`q` monomials.
///
/// The diagonal entry at `x^nu` is the coefficient of `x^nu` in
/// `prod_j (sigma e_j)^{nu_j}`. Only divisors of `x^nu` can contribute, so the
/// product is accumulated on the dense box `0..=nu` one linear factor at a time.
pub fn sym_trace_direct(sigma: &Matrix, q: usize) -> FieldElement {
    let n = sigma.dim();
    let field = sigma.field();
    let mut trace = field.zero();
    for nu in monomials_of_degree(q as u32, n, MonomialOrder::Grevlex) {
        let nu: Vec<usize> = nu.exponents().iter().map(|&e| e as usize).collect();
        // Mixed-radix strides for the box 0..=nu.
        let mut strides = vec![1usize; n];
        for i in 1..n {
            strides[i] = strides[i - 1] * (nu[i - 1] + 1);
        }
        let size = strides[n - 1] * (nu[n - 1] + 1);
        // Absent cells are zero; cyclotomic zeros are not free to allocate.
        let mut acc: Vec<Option<FieldElement>> = vec![None; size];
        acc[0] = Some(field.one());
        for (j, &e) in nu.iter().enumerate() {
            for _ in 0..e {
                let mut next: Vec<Option<FieldElement>> = vec![None; size];
                for (idx, c) in acc.iter().enumerate() {
                    let Some(c) = c else { continue };
                    for i in 0..n {
                        let a = sigma.get(i, j);
                        if a.is_zero() || (idx / strides[i]) % (nu[i] + 1) == nu[i] {
                            continue;
                        }
                        let term = a * c;
                        let cell = &mut next[idx + strides[i]];
                        *cell = Some(match cell.take() {
                            Some(old) => &old + &term,
                            None => term,
                        });
                    }
                }
                acc = next;
            }
        }
        if let Some(c) = &acc[size - 1] {
            trace = &trace + c;
        }
    }
    trace
}

/// `trace(Sym^q sigma) = h_q(eigenvalues)` from power sums `p_k = trace(sigma^k)`
/// via `q h_q = sum_{k=1..q} p_k h_{q-k}`.
pub fn sym_trace_newton(sigma: &Matrix, q: usize) -> FieldElement {
    let field = sigma.field();
    let mut power = sigma.clone();
    let mut p = Vec::with_capacity(q);
    for _ in 0..q {
        p.push(power.trace());
        power = power.mul(sigma);
    }
    let mut h = vec![field.one()];
    for m in 1..=q {
        let s = (1..=m).fold(field.zero(), |acc, k| &acc + &(&p[k - 1] * &h[m - k]));
        h.push(&s / &field.from_i64(m as i64));
    }
    h.pop().expect("h_0 present")
}

/// `(1/|G|) sum trace(Sym^q sigma)` as a natural number, for a chosen trace route.
pub fn trace_average(
    group: &MatrixGroup,
    q: usize,
    trace: fn(&Matrix, usize) -> FieldElement,
) -> Result<BigInt> {
    let field: &Field = group.field();
    let total = group
        .elements()
        .iter()
        .fold(field.zero(), |acc, g| &acc + &trace(g, q));
    let avg = &total * &field.from_i64(group.order() as i64).inverse()?;
    to_natural(q, &avg)
}

/// `(sum_{q<=N} a_q) / (sum_{q<=N} b_q)`.
pub fn cumulative_ratio(data: &MolienData, n: usize) -> Result<BigRational> {
    if n > data.truncation() {
        return Err(Error::InvalidInput(format!(
            "degree {n} beyond the truncation {}",
            data.truncation()
        )));
    }
    let a: BigInt = data.coefficients[..=n].iter().sum();
    let b: BigInt = data.ambient[..=n].iter().sum();
    Ok(BigRational::new(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::group::{group_closure, DEFAULT_CLOSURE_CAP};

    fn neg2() -> MatrixGroup {
        let q = Field::Rational;
        group_closure(&q, vec![Matrix::from_i64(&q, &[&[-1, 0], &[0, -1]]).unwrap()], DEFAULT_CLOSURE_CAP)
            .unwrap()
    }

    fn cyclic3() -> MatrixGroup {
        let k = Field::cyclotomic(3).unwrap();
        let g = Matrix::diagonal(&[k.zeta_power(1).unwrap(), k.zeta_power(2).unwrap()]);
        group_closure(&k, vec![g], DEFAULT_CLOSURE_CAP).unwrap()
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn trivial_group() {
        let q = Field::Rational;
        let g = group_closure(&q, vec![Matrix::identity(&q, 2)], 10).unwrap();
        let m = molien_series(&g, 6).unwrap();
        assert_eq!(ints(&m.coefficients), vec![1, 2, 3, 4, 5, 6, 7]);
        assert!(m.series.same_function(&RationalFunction::from_i64(&[1], &[1, -2, 1])));
        assert_eq!(cumulative_ratio(&m, 6).unwrap(), BigRational::one());
    }

    #[test]
    fn negation_group() {
        let m = molien_series(&neg2(), 6).unwrap();
        assert_eq!(ints(&m.coefficients), vec![1, 0, 3, 0, 5, 0, 7]);
        assert!(m
            .series
            .same_function(&RationalFunction::from_i64(&[1, 0, 1], &[1, 0, -2, 0, 1])));
        assert_eq!(m.series.to_string(), "(1 + t^2)/(1 - 2*t^2 + t^4)");
        assert_eq!(
            cumulative_ratio(&m, 2).unwrap(),
            BigRational::new(2.into(), 3.into())
        );
    }

    #[test]
    fn cyclic_group_of_order_three() {
        let m = molien_series(&cyclic3(), 5).unwrap();
        assert_eq!(ints(&m.coefficients[..4]), vec![1, 0, 1, 2]);
    }

    #[test]
    fn trace_routes_agree() {
        for g in [neg2(), cyclic3()] {
            for sigma in g.elements() {
                for q in 0..8 {
                    assert_eq!(sym_trace_direct(sigma, q), sym_trace_newton(sigma, q));
                }
            }
        }
    }

    #[test]
    fn truncation_guard() {
        let m = molien_series(&neg2(), 4).unwrap();
        assert!(cumulative_ratio(&m, 5).is_err());
    }
}
