//! Two decision procedures for `freerank_R M > 0` on graded presentations.
//!
//! A degree-0 surjection `M -> R(-a)` is a vector `u` in the kernel of the
//! transposed relation matrix with a unit entry. The syzygy test looks for
//! such a `u` among homogeneous syzygy generators. The column test applies
//! only to `Omega` and asks whether a Jacobian column lies in the span of the
//! others modulo `I`.

use crate::error::{Error, Result};
use crate::groebner::{
    check_combination, is_syzygy, module_membership, syzygy_basis, FreeModule, GroebnerOptions,
    ModuleElement, SyzygyOptions,
};
use crate::poly::Polynomial;

use super::presentation::{JacobianMatrix, PresentationMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeRankVerdict {
    Positive,
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeRankMethod {
    ColumnTest,
    SyzygyTest,
}

impl FreeRankMethod {
    pub fn name(&self) -> &'static str {
        match self {
            FreeRankMethod::ColumnTest => "column-test",
            FreeRankMethod::SyzygyTest => "syzygy-test",
        }
    }
}

/// `target = sum cofactors[k] * generators[k]` over `P`.
///
/// The generators are the other Jacobian columns followed by `f_l * e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnCertificate {
    pub column: usize,
    pub target: ModuleElement,
    pub generators: Vec<ModuleElement>,
    /// Which column each generator came from, `None` for ideal multiples.
    pub sources: Vec<Option<usize>>,
    pub cofactors: Vec<Polynomial>,
}

impl ColumnCertificate {
    pub fn replay(&self) -> bool {
        check_combination(&self.target, &self.generators, &self.cofactors)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeRankCertificate {
    /// Positive: a column is a combination of the others.
    Combination(ColumnCertificate),
    /// Positive: a syzygy `u` with a nonzero scalar at `entry`.
    UnitSyzygy { syzygy: ModuleElement, entry: usize },
    /// Zero: every column membership failed.
    FailedMemberships(Vec<usize>),
    /// Zero: degrees of the homogeneous syzygy generators, none with a scalar entry.
    SyzygyDegrees {
        degrees: Vec<i64>,
        degree_bound: Option<i64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColumnOutcome {
    pub column: usize,
    pub member: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeRankResult {
    pub verdict: FreeRankVerdict,
    pub method: FreeRankMethod,
    pub certificate: FreeRankCertificate,
    /// Per-column outcomes of the column test; empty for the syzygy test.
    pub columns: Vec<ColumnOutcome>,
}

impl FreeRankResult {
    pub fn is_positive(&self) -> bool {
        self.verdict == FreeRankVerdict::Positive
    }

    /// Replays a positive certificate against `presentation`; zero verdicts pass trivially.
    pub fn verify(&self, presentation: &PresentationMatrix, opts: &GroebnerOptions) -> Result<bool> {
        match &self.certificate {
            FreeRankCertificate::Combination(c) => {
                let column: Vec<Polynomial> =
                    presentation.relations().iter().map(|row| row[c.column].clone()).collect();
                Ok(c.target.components() == column.as_slice() && c.replay())
            }
            FreeRankCertificate::UnitSyzygy { syzygy, entry } => {
                verify_unit_syzygy(presentation, syzygy, *entry, opts)
            }
            _ => Ok(true),
        }
    }
}

/// `u` kills every relation modulo `I` and has a nonzero scalar at `entry`.
pub fn verify_unit_syzygy(
    presentation: &PresentationMatrix,
    u: &ModuleElement,
    entry: usize,
    opts: &GroebnerOptions,
) -> Result<bool> {
    if u.rank() != presentation.generator_count() || entry >= u.rank() {
        return Ok(false);
    }
    if !u.components()[entry].is_nonzero_constant() {
        return Ok(false);
    }
    let ideal = presentation.ideal();
    let gb = if ideal.generators().is_empty() {
        None
    } else {
        Some(ideal.groebner_basis(&GroebnerOptions {
            degree_bound: None,
            track_cofactors: false,
            ..opts.clone()
        })?)
    };
    Ok(is_syzygy(u, &transpose(presentation), gb.as_ref()))
}

fn transpose(p: &PresentationMatrix) -> Vec<Vec<Polynomial>> {
    let g = p.generator_count();
    (0..g)
        .map(|j| p.relations().iter().map(|row| row[j].clone()).collect())
        .collect()
}

#[derive(Clone, Debug, Default)]
pub struct FreeRankOptions {
    pub groebner: GroebnerOptions,
    /// Compute the whole syzygy module instead of truncating at the top generator degree.
    pub full_basis: bool,
}

/// Positive iff a homogeneous syzygy generator of the transposed relation matrix has a scalar entry.
///
/// A scalar entry at generator `j` sits in degree `deg g_j`, so truncating the
/// computation at the largest generator degree loses nothing.
pub fn freerank_positive_syzygy(
    presentation: &PresentationMatrix,
    opts: &FreeRankOptions,
) -> Result<FreeRankResult> {
    if presentation.generator_count() == 0 {
        return Err(Error::InvalidInput("presentation without generators".into()));
    }
    if !presentation.is_graded() || !presentation.ideal().is_homogeneous() {
        return Err(Error::InvalidInput("syzygy test needs a graded presentation".into()));
    }
    let bound = if opts.full_basis {
        None
    } else {
        presentation.degrees().iter().copied().max()
    };
    let syz_opts = SyzygyOptions {
        groebner: opts.groebner.clone().with_degree_bound(bound),
        row_degrees: Some(presentation.degrees().to_vec()),
    };
    let syz = syzygy_basis(&transpose(presentation), presentation.ideal(), &syz_opts)?;
    for u in syz.generators() {
        if let Some(entry) = u.components().iter().position(Polynomial::is_nonzero_constant) {
            return Ok(FreeRankResult {
                verdict: FreeRankVerdict::Positive,
                method: FreeRankMethod::SyzygyTest,
                certificate: FreeRankCertificate::UnitSyzygy {
                    syzygy: u.clone(),
                    entry,
                },
                columns: Vec::new(),
            });
        }
    }
    let degrees = syz
        .degrees()
        .iter()
        .map(|d| d.ok_or_else(|| Error::Internal("inhomogeneous syzygy generator".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(FreeRankResult {
        verdict: FreeRankVerdict::Zero,
        method: FreeRankMethod::SyzygyTest,
        certificate: FreeRankCertificate::SyzygyDegrees {
            degrees,
            degree_bound: bound,
        },
        columns: Vec::new(),
    })
}

/// Tests every Jacobian column for membership in the span of the others plus `I * R^s`.
pub fn freerank_omega_column_test(
    jacobian: &JacobianMatrix,
    opts: &GroebnerOptions,
) -> Result<FreeRankResult> {
    let ideal = jacobian.ideal();
    let ring = ideal.ring();
    let (s, n) = (jacobian.rows(), jacobian.cols());
    let module = FreeModule::new(ring, s);
    let opts = GroebnerOptions {
        degree_bound: None,
        ..opts.clone()
    }
    .with_cofactors();

    let mut columns = Vec::with_capacity(n);
    let mut certificate = None;
    for c in 0..n {
        let target = ModuleElement::new(jacobian.column(c));
        let mut generators = Vec::new();
        let mut sources = Vec::new();
        for k in (0..n).filter(|&k| k != c) {
            generators.push(ModuleElement::new(jacobian.column(k)));
            sources.push(Some(k));
        }
        for f in ideal.generators() {
            for i in 0..s {
                generators.push(ModuleElement::unit(ring, s, i).scale_by(f));
                sources.push(None);
            }
        }
        let (member, cofactors) = if s == 0 {
            (true, vec![Polynomial::zero(ring); generators.len()])
        } else {
            let m = module_membership(&target, &generators, &module, &opts)?;
            (m.member, m.cofactors.unwrap_or_default())
        };
        columns.push(ColumnOutcome { column: c, member });
        if member && certificate.is_none() {
            certificate = Some(ColumnCertificate {
                column: c,
                target,
                generators,
                sources,
                cofactors,
            });
        }
    }
    let (verdict, certificate) = match certificate {
        Some(cert) => {
            if !cert.replay() {
                return Err(Error::Internal(format!(
                    "column {} certificate does not replay",
                    cert.column
                )));
            }
            (FreeRankVerdict::Positive, FreeRankCertificate::Combination(cert))
        }
        None => (
            FreeRankVerdict::Zero,
            FreeRankCertificate::FailedMemberships((0..n).collect()),
        ),
    };
    Ok(FreeRankResult {
        verdict,
        method: FreeRankMethod::ColumnTest,
        certificate,
        columns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::differentials::{jacobian, omega_presentation, sym_power_presentation};
    use crate::groebner::Ideal;
    use crate::poly::{parse_polynomial, MonomialOrder, PolyRing};
    use std::sync::Arc;

    fn ideal(vars: &[&str], gens: &[&str]) -> Ideal {
        let r: Arc<PolyRing> =
            PolyRing::new(vars.iter().copied(), Field::Rational, MonomialOrder::Grevlex).unwrap();
        Ideal::new(&r, gens.iter().map(|g| parse_polynomial(g, &r).unwrap()).collect())
    }

    #[test]
    fn quadric_cone_in_four_variables() {
        let i = ideal(&["x", "y", "z", "w"], &["x*y - z*w"]);
        let col = freerank_omega_column_test(&jacobian(&i), &Default::default()).unwrap();
        assert_eq!(col.verdict, FreeRankVerdict::Zero);
        assert!(col.columns.iter().all(|c| !c.member));
        let syz = freerank_positive_syzygy(&omega_presentation(&i), &Default::default()).unwrap();
        assert_eq!(syz.verdict, FreeRankVerdict::Zero);
        let full = FreeRankOptions {
            full_basis: true,
            ..Default::default()
        };
        assert_eq!(
            freerank_positive_syzygy(&omega_presentation(&i), &full).unwrap().verdict,
            FreeRankVerdict::Zero
        );
        for q in 2..=3 {
            let s = sym_power_presentation(&i, q).unwrap();
            let r = freerank_positive_syzygy(s.presentation(), &Default::default()).unwrap();
            assert_eq!(r.verdict, FreeRankVerdict::Zero);
        }
    }

    #[test]
    fn missing_variable_gives_a_free_summand() {
        let i = ideal(&["x", "y", "z", "w"], &["x^3 + y^3 + z^3"]);
        let p = omega_presentation(&i);
        let syz = freerank_positive_syzygy(&p, &Default::default()).unwrap();
        assert!(syz.is_positive());
        assert!(syz.verify(&p, &Default::default()).unwrap());
        let col = freerank_omega_column_test(&jacobian(&i), &Default::default()).unwrap();
        assert!(col.is_positive());
        assert!(col.columns[3].member);
        assert!(col.verify(&p, &Default::default()).unwrap());
    }

    #[test]
    fn polynomial_ring_is_free() {
        let i = ideal(&["x", "y"], &[]);
        let syz = freerank_positive_syzygy(&omega_presentation(&i), &Default::default()).unwrap();
        assert!(syz.is_positive());
        let col = freerank_omega_column_test(&jacobian(&i), &Default::default()).unwrap();
        assert!(col.is_positive());
    }

    #[test]
    fn forged_certificates_fail() {
        let i = ideal(&["x", "y", "z", "w"], &["x*y - z*w"]);
        let p = omega_presentation(&i);
        let r = i.ring();
        let u = ModuleElement::unit(r, 4, 0);
        assert!(!verify_unit_syzygy(&p, &u, 0, &Default::default()).unwrap());
    }
}
