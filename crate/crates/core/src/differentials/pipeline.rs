//! Signature pipelines for hypersurfaces and complete intersections.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{GroebnerOptions, Ideal};
use crate::poly::{PolyRing, Polynomial};
use crate::report::{CheckStatus, HypothesisCheck, Verdict, VerdictStatus};

use super::checks::{complete_intersection_check, isolated_singularity_check};
use super::freerank::{
    freerank_omega_column_test, freerank_positive_syzygy, FreeRankOptions, FreeRankResult,
};
use super::presentation::{jacobian, omega_presentation, sym_power_presentation, JacobianMatrix};

pub const DEFAULT_MAX_Q: u32 = 3;

#[derive(Clone, Debug)]
pub struct SignatureOptions {
    /// Largest symmetric power checked directly.
    pub max_q: u32,
    pub assume_domain: bool,
    /// Only used by the complete-intersection pipeline.
    pub assume_reflexive: bool,
    pub groebner: GroebnerOptions,
    /// Untruncated syzygy modules in the syzygy test.
    pub full_syzygy_basis: bool,
}

impl Default for SignatureOptions {
    fn default() -> Self {
        SignatureOptions {
            max_q: DEFAULT_MAX_Q,
            assume_domain: false,
            assume_reflexive: false,
            groebner: GroebnerOptions::default(),
            full_syzygy_basis: false,
        }
    }
}

/// Direct free-rank check on one symmetric power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPowerCheck {
    pub q: u32,
    pub generators: usize,
    pub relations: usize,
    pub result: FreeRankResult,
}

/// Output of [`hypersurface_signature`] and [`ci_signature`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureReport {
    pub ideal: Ideal,
    pub checks: Vec<HypothesisCheck>,
    pub jacobian: Option<JacobianMatrix>,
    pub omega_column_test: Option<FreeRankResult>,
    pub omega_syzygy_test: Option<FreeRankResult>,
    pub sym_checks: Vec<SymPowerCheck>,
    pub verdict: Verdict,
}

pub type HypersurfaceReport = SignatureReport;

impl SignatureReport {
    pub fn check(&self, name: &str) -> Option<&HypothesisCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Agreed free-rank verdict on `Omega`, when computed.
    pub fn freerank_omega_positive(&self) -> Option<bool> {
        self.omega_syzygy_test.as_ref().map(FreeRankResult::is_positive)
    }
}

struct FreeRankData {
    jacobian: JacobianMatrix,
    column: FreeRankResult,
    syzygy: FreeRankResult,
    sym: Vec<SymPowerCheck>,
}

/// Both free-rank methods on `Omega` plus the direct checks on `Sym^q`, `q <= max_q`.
fn free_rank_data(ideal: &Ideal, opts: &SignatureOptions) -> Result<FreeRankData> {
    let fr_opts = FreeRankOptions {
        groebner: opts.groebner.clone(),
        full_basis: opts.full_syzygy_basis,
    };
    let j = jacobian(ideal);
    let column = freerank_omega_column_test(&j, &opts.groebner)?;
    let presentation = omega_presentation(ideal);
    let syzygy = freerank_positive_syzygy(&presentation, &fr_opts)?;
    if column.verdict != syzygy.verdict {
        return Err(Error::DisagreementBetweenMethods(format!(
            "column test says {:?}, syzygy test says {:?}",
            column.verdict, syzygy.verdict
        )));
    }
    for r in [&column, &syzygy] {
        if !r.verify(&presentation, &opts.groebner)? {
            return Err(Error::Internal(format!(
                "{} certificate does not replay",
                r.method.name()
            )));
        }
    }
    let mut sym = Vec::new();
    for q in 1..=opts.max_q {
        let s = sym_power_presentation(ideal, q)?;
        let result = freerank_positive_syzygy(s.presentation(), &fr_opts)?;
        if result.is_positive() && !result.verify(s.presentation(), &opts.groebner)? {
            return Err(Error::Internal(format!("Sym^{q} certificate does not replay")));
        }
        if result.is_positive() && !syzygy.is_positive() {
            return Err(Error::Internal(format!(
                "free summand in Sym^{q}(Omega) but none in Omega"
            )));
        }
        sym.push(SymPowerCheck {
            q,
            generators: s.generator_count(),
            relations: s.relation_count(),
            result,
        });
    }
    Ok(FreeRankData {
        jacobian: j,
        column,
        syzygy,
        sym,
    })
}

fn domain_check(assume: bool) -> HypothesisCheck {
    if assume {
        HypothesisCheck::new("domain", CheckStatus::Asserted, "asserted by the user")
    } else {
        HypothesisCheck::new(
            "domain",
            CheckStatus::NotAsserted,
            "irreducibility is not checked; pass --assume-domain",
        )
    }
}

fn failure_reasons(checks: &[HypothesisCheck]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| !c.status.holds() && c.status != CheckStatus::Skipped)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect()
}

/// Differential symmetric signature of `P/(f)` for a homogeneous `f`.
///
/// Emits `0` only when `n >= 4`, `deg f >= 2`, `char` does not divide `deg f`,
/// the singularity is isolated and the domain property is asserted; then
/// `Sym^q(Omega)` is reflexive and `freerank Omega = 0` forces every free rank
/// to vanish. `deg f = 1` gives a regular ring with signature 1.
pub fn hypersurface_signature(f: &Polynomial, opts: &SignatureOptions) -> Result<SignatureReport> {
    let ring: &Arc<PolyRing> = f.ring();
    if !f.is_homogeneous() {
        return Err(Error::HypothesisFailed("f must be homogeneous".into()));
    }
    let d = match f.total_degree() {
        None => return Err(Error::HypothesisFailed("f must be nonzero".into())),
        Some(0) => return Err(Error::HypothesisFailed("f must be a non-unit".into())),
        Some(d) => d,
    };
    let n = ring.nvars();
    let p = ring.field().characteristic();
    let ideal = Ideal::new(ring, vec![f.clone()]);

    let mut checks = vec![
        HypothesisCheck::from_bool(
            "n>=4",
            n >= 4,
            if n >= 4 { format!("n = {n}") } else { format!("n < 4 (n = {n})") },
        ),
        HypothesisCheck::from_bool("deg>=2", d >= 2, format!("deg f = {d}")),
    ];
    if d == 1 {
        for name in ["char-coprime-to-degree", "isolated-singularity", "n>=2s+2"] {
            checks.push(HypothesisCheck::new(name, CheckStatus::Skipped, "linear equation"));
        }
        checks.push(domain_check(opts.assume_domain));
        return Ok(SignatureReport {
            ideal,
            checks,
            jacobian: None,
            omega_column_test: None,
            omega_syzygy_test: None,
            sym_checks: Vec::new(),
            verdict: Verdict::determined(BigRational::one(), vec!["regular".into()]),
        });
    }
    let coprime = p == 0 || u64::from(d) % p != 0;
    checks.push(HypothesisCheck::from_bool(
        "char-coprime-to-degree",
        coprime,
        format!("char = {p}, deg f = {d}"),
    ));
    let isolated = isolated_singularity_check(&ideal, &opts.groebner)?;
    checks.push(HypothesisCheck::from_bool(
        "isolated-singularity",
        isolated,
        if isolated {
            "dim (f, partials) <= 0"
        } else {
            "dim (f, partials) > 0"
        },
    ));
    checks.push(domain_check(opts.assume_domain));
    checks.push(HypothesisCheck::from_bool("n>=2s+2", n >= 4, format!("n = {n}, s = 1")));

    let data = free_rank_data(&ideal, opts)?;
    let positive = data.syzygy.is_positive();
    let mut reasons = failure_reasons(&checks);
    let mut verdict = if reasons.is_empty() {
        if positive {
            return Err(Error::Internal(
                "free summand in Omega although every hypothesis holds".into(),
            ));
        }
        Verdict::determined(BigRational::zero(), vec!["theorem-hypotheses-hold".into()])
    } else {
        if positive {
            reasons.push("freerank Omega > 0".into());
        }
        Verdict::undecided(reasons)
    };
    if opts.assume_domain && verdict.status == VerdictStatus::Determined {
        verdict.warnings.push("domain assumed".into());
    }
    Ok(SignatureReport {
        ideal,
        checks,
        jacobian: Some(data.jacobian),
        omega_column_test: Some(data.column),
        omega_syzygy_test: Some(data.syzygy),
        sym_checks: data.sym,
        verdict,
    })
}

/// Signature pipeline for `P/(f_1, ..., f_s)`.
///
/// When `freerank Omega = 0` the signature is 0 as soon as every `Sym^q(Omega)`
/// is reflexive. Reflexivity is verified through the complete-intersection
/// gate (`n >= 2s+2`, isolated singularity, degrees at least 2, domain) or
/// asserted by the user; otherwise the verdict is conditional on it.
pub fn ci_signature(ideal: &Ideal, opts: &SignatureOptions) -> Result<SignatureReport> {
    if ideal.generators().is_empty() {
        return Err(Error::HypothesisFailed("no generators".into()));
    }
    if !ideal.is_homogeneous() {
        return Err(Error::HypothesisFailed("generators must be homogeneous".into()));
    }
    let n = ideal.ring().nvars();
    let s = ideal.generators().len();
    let min_deg = ideal
        .generators()
        .iter()
        .filter_map(Polynomial::total_degree)
        .min()
        .unwrap_or(0);
    let mut checks = vec![HypothesisCheck::from_bool(
        "deg>=2",
        min_deg >= 2,
        format!("smallest generator degree = {min_deg}"),
    )];
    if min_deg < 2 {
        return Ok(SignatureReport {
            ideal: ideal.clone(),
            checks,
            jacobian: None,
            omega_column_test: None,
            omega_syzygy_test: None,
            sym_checks: Vec::new(),
            verdict: Verdict::undecided(vec![format!(
                "deg>=2: a generator has degree {min_deg}"
            )]),
        });
    }
    let ci = complete_intersection_check(ideal, &opts.groebner)?;
    checks.push(HypothesisCheck::from_bool(
        "complete-intersection",
        ci,
        format!("dim should be n - s = {}", n as i64 - s as i64),
    ));
    let isolated = isolated_singularity_check(ideal, &opts.groebner)?;
    checks.push(HypothesisCheck::from_bool(
        "isolated-singularity",
        isolated,
        "Jacobian criterion",
    ));
    checks.push(HypothesisCheck::from_bool(
        "n>=2s+2",
        n >= 2 * s + 2,
        format!("n = {n}, s = {s}"),
    ));
    checks.push(domain_check(opts.assume_domain));
    let gate = checks.iter().all(|c| c.status.holds());
    let reflexive = if gate {
        HypothesisCheck::new("reflexivity", CheckStatus::Verified, "complete-intersection gate")
    } else if opts.assume_reflexive {
        HypothesisCheck::new("reflexivity", CheckStatus::Asserted, "asserted by the user")
    } else {
        HypothesisCheck::new(
            "reflexivity",
            CheckStatus::NotAsserted,
            "outside the complete-intersection gate",
        )
    };
    let reflexive_status = reflexive.status;
    checks.push(reflexive);

    let data = free_rank_data(ideal, opts)?;
    let verdict = if data.syzygy.is_positive() {
        Verdict::undecided(vec!["freerank Omega > 0".into()])
    } else {
        match reflexive_status {
            CheckStatus::Verified | CheckStatus::Asserted => {
                let mut v = Verdict::determined(
                    BigRational::from_integer(BigInt::zero()),
                    vec!["freerank Omega = 0 and Sym^q(Omega) reflexive".into()],
                );
                if reflexive_status == CheckStatus::Asserted {
                    v.warnings.push("reflexivity asserted".into());
                }
                if opts.assume_domain && gate {
                    v.warnings.push("domain assumed".into());
                }
                v
            }
            _ => Verdict {
                status: VerdictStatus::ConditionalOnReflexivity,
                signature: Some(BigRational::zero()),
                reasons: vec!["freerank Omega = 0".into()],
                warnings: vec!["reflexivity conditional: Sym^q(Omega) not verified reflexive".into()],
            },
        }
    };
    Ok(SignatureReport {
        ideal: ideal.clone(),
        checks,
        jacobian: Some(data.jacobian),
        omega_column_test: Some(data.column),
        omega_syzygy_test: Some(data.syzygy),
        sym_checks: data.sym,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::poly::{parse_polynomial, MonomialOrder};

    fn poly(vars: &[&str], f: &str) -> Polynomial {
        let r = PolyRing::new(vars.iter().copied(), Field::Rational, MonomialOrder::Grevlex).unwrap();
        parse_polynomial(f, &r).unwrap()
    }

    fn assumed() -> SignatureOptions {
        SignatureOptions {
            assume_domain: true,
            ..Default::default()
        }
    }

    #[test]
    fn quadric_cone_has_signature_zero() {
        let f = poly(&["x", "y", "z", "w"], "x*y - z*w");
        let rep = hypersurface_signature(&f, &assumed()).unwrap();
        assert_eq!(rep.verdict.status, VerdictStatus::Determined);
        assert_eq!(rep.verdict.signature, Some(BigRational::zero()));
        assert_eq!(rep.sym_checks.len(), 3);
        assert!(rep.sym_checks.iter().all(|c| !c.result.is_positive()));
    }

    #[test]
    fn without_domain_assertion_undecided() {
        let f = poly(&["x", "y", "z", "w"], "x*y - z*w");
        let rep = hypersurface_signature(&f, &Default::default()).unwrap();
        assert!(rep.verdict.is_undecided());
        assert!(rep.verdict.reasons[0].starts_with("domain"));
    }

    #[test]
    fn three_variables_undecided() {
        let f = poly(&["x", "y", "z"], "x^2 - y*z");
        let rep = hypersurface_signature(&f, &assumed()).unwrap();
        assert!(rep.verdict.is_undecided());
        assert!(rep.verdict.signature.is_none());
        assert!(rep.verdict.reasons.iter().any(|r| r.starts_with("n>=4")));
    }

    #[test]
    fn non_isolated_undecided() {
        let f = poly(&["x", "y", "z", "w"], "x^3 + y^3 + z^3");
        let rep = hypersurface_signature(&f, &assumed()).unwrap();
        assert!(rep.verdict.is_undecided());
        assert_eq!(rep.check("isolated-singularity").unwrap().status, CheckStatus::Failed);
        assert_eq!(rep.freerank_omega_positive(), Some(true));
    }

    #[test]
    fn linear_form_is_regular() {
        let f = poly(&["x", "y", "z", "w"], "x + y");
        let rep = hypersurface_signature(&f, &assumed()).unwrap();
        assert_eq!(rep.verdict.signature, Some(BigRational::one()));
        assert_eq!(rep.verdict.reasons, vec!["regular".to_string()]);
    }

    #[test]
    fn characteristic_dividing_degree() {
        let r = PolyRing::new(["x", "y", "z", "w"], Field::prime(2).unwrap(), MonomialOrder::Grevlex)
            .unwrap();
        let f = parse_polynomial("x*y + z*w", &r).unwrap();
        let rep = hypersurface_signature(&f, &assumed()).unwrap();
        assert!(rep.verdict.is_undecided());
        assert_eq!(
            rep.check("char-coprime-to-degree").unwrap().status,
            CheckStatus::Failed
        );
    }

    #[test]
    fn rejects_inhomogeneous() {
        let f = poly(&["x", "y", "z", "w"], "x*y - z");
        assert!(matches!(
            hypersurface_signature(&f, &assumed()),
            Err(Error::HypothesisFailed(_))
        ));
    }
}
