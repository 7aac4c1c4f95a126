//! The JSON run report. Field order is fixed, so equal inputs give equal bytes
//! apart from `wall_time_ms`.

use serde::{Deserialize, Serialize};
use symsig_core::differentials::{
    ColumnCertificate, FreeRankCertificate, FreeRankResult, FreeRankVerdict, SignatureReport,
};
use symsig_core::groebner::ModuleElement;
use symsig_core::invariants::QuotientSignatureReport;
use symsig_core::report::{HypothesisCheck, Verdict};

use crate::input::{GroupSpec, RingSpec, Source};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub tool: Tool,
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub wall_time_ms: u64,
    pub verdict: Option<VerdictJson>,
    pub hypotheses: Vec<HypothesisJson>,
    pub result: ResultJson,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tool {
    pub name: String,
    pub version: String,
}

impl Default for Tool {
    fn default() -> Self {
        Tool {
            name: "symsig".into(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

impl From<&Source> for InputDigest {
    fn from(s: &Source) -> Self {
        InputDigest {
            name: s.name.clone(),
            sha256: s.sha256(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub status: String,
    /// Exact rational such as `0` or `1/2`.
    pub signature: Option<String>,
    pub reasons: Vec<String>,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        VerdictJson {
            status: v.status.name().into(),
            signature: v.signature.as_ref().map(ToString::to_string),
            reasons: v.reasons.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisJson {
    pub name: String,
    /// `verified`, `failed`, `asserted`, `not-asserted` or `skipped`.
    pub status: String,
    pub detail: String,
}

impl From<&HypothesisCheck> for HypothesisJson {
    fn from(c: &HypothesisCheck) -> Self {
        HypothesisJson {
            name: c.name.clone(),
            status: c.status.name().into(),
            detail: c.detail.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ResultJson {
    Hypersurface(SignatureJson),
    CiFreerank(SignatureJson),
    Quotient(QuotientJson),
    Groebner(GroebnerJson),
    Nf(NfJson),
    Dim(DimJson),
    Hilbert(HilbertJson),
    Verify(VerifyJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureJson {
    pub ring: RingSpec,
    pub generators: Vec<String>,
    pub jacobian: Option<Vec<Vec<String>>>,
    pub omega_column_test: Option<FreeRankJson>,
    pub omega_syzygy_test: Option<FreeRankJson>,
    pub sym_checks: Vec<SymCheckJson>,
}

impl SignatureJson {
    pub fn new(ring: RingSpec, rep: &SignatureReport) -> Self {
        SignatureJson {
            ring,
            generators: rep.ideal.generators().iter().map(ToString::to_string).collect(),
            jacobian: rep.jacobian.as_ref().map(|j| {
                j.entries()
                    .iter()
                    .map(|row| row.iter().map(ToString::to_string).collect())
                    .collect()
            }),
            omega_column_test: rep.omega_column_test.as_ref().map(FreeRankJson::from),
            omega_syzygy_test: rep.omega_syzygy_test.as_ref().map(FreeRankJson::from),
            sym_checks: rep
                .sym_checks
                .iter()
                .map(|c| SymCheckJson {
                    q: c.q,
                    generators: c.generators,
                    relations: c.relations,
                    freerank: FreeRankJson::from(&c.result),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymCheckJson {
    pub q: u32,
    pub generators: usize,
    pub relations: usize,
    pub freerank: FreeRankJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnJson {
    pub column: usize,
    pub member: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeRankJson {
    pub method: String,
    /// `positive` or `zero`.
    pub verdict: String,
    pub columns: Vec<ColumnJson>,
    pub certificate: CertificateJson,
}

impl FreeRankJson {
    pub fn is_positive(&self) -> bool {
        self.verdict == "positive"
    }
}

impl From<&FreeRankResult> for FreeRankJson {
    fn from(r: &FreeRankResult) -> Self {
        FreeRankJson {
            method: r.method.name().into(),
            verdict: match r.verdict {
                FreeRankVerdict::Positive => "positive".into(),
                FreeRankVerdict::Zero => "zero".into(),
            },
            columns: r
                .columns
                .iter()
                .map(|c| ColumnJson {
                    column: c.column,
                    member: c.member,
                })
                .collect(),
            certificate: CertificateJson::from(&r.certificate),
        }
    }
}

fn vector(v: &ModuleElement) -> Vec<String> {
    v.components().iter().map(ToString::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum CertificateJson {
    /// `target = sum cofactors[k] * generators[k]` in the free module over P.
    Combination {
        column: usize,
        target: Vec<String>,
        generators: Vec<Vec<String>>,
        sources: Vec<Option<usize>>,
        cofactors: Vec<String>,
    },
    /// A syzygy of the transposed relations with a nonzero scalar at `entry`.
    UnitSyzygy { syzygy: Vec<String>, entry: usize },
    FailedMemberships { columns: Vec<usize> },
    SyzygyDegrees {
        degrees: Vec<i64>,
        degree_bound: Option<i64>,
    },
}

impl From<&FreeRankCertificate> for CertificateJson {
    fn from(c: &FreeRankCertificate) -> Self {
        match c {
            FreeRankCertificate::Combination(ColumnCertificate {
                column,
                target,
                generators,
                sources,
                cofactors,
            }) => CertificateJson::Combination {
                column: *column,
                target: vector(target),
                generators: generators.iter().map(vector).collect(),
                sources: sources.clone(),
                cofactors: cofactors.iter().map(ToString::to_string).collect(),
            },
            FreeRankCertificate::UnitSyzygy { syzygy, entry } => CertificateJson::UnitSyzygy {
                syzygy: vector(syzygy),
                entry: *entry,
            },
            FreeRankCertificate::FailedMemberships(columns) => CertificateJson::FailedMemberships {
                columns: columns.clone(),
            },
            FreeRankCertificate::SyzygyDegrees {
                degrees,
                degree_bound,
            } => CertificateJson::SyzygyDegrees {
                degrees: degrees.clone(),
                degree_bound: *degree_bound,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuotientJson {
    pub group: GroupSpec,
    pub order: usize,
    pub characteristic: u64,
    pub small: bool,
    /// A pseudo-reflection when the group is not small.
    pub witness: Option<String>,
    pub coprime: bool,
    pub molien: Option<MolienJson>,
    pub table: Vec<ConvergenceJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MolienJson {
    pub rational_function: String,
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    /// `a_q` for `q = 0..=N`.
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceJson {
    pub degree: usize,
    pub ratio: String,
    pub ratio_approx: f64,
    pub error_approx: f64,
}

impl QuotientJson {
    pub fn from_report(group: GroupSpec, rep: &QuotientSignatureReport) -> Self {
        let m = &rep.molien;
        QuotientJson {
            group,
            order: rep.order,
            characteristic: rep.characteristic,
            small: rep.small,
            witness: None,
            coprime: rep.coprime,
            molien: Some(MolienJson {
                rational_function: m.series.to_string(),
                numerator: m.series.numerator.iter().map(ToString::to_string).collect(),
                denominator: m.series.denominator.iter().map(ToString::to_string).collect(),
                coefficients: m.coefficients.iter().map(ToString::to_string).collect(),
            }),
            table: rep
                .table
                .iter()
                .map(|r| ConvergenceJson {
                    degree: r.degree,
                    ratio: r.ratio.to_string(),
                    ratio_approx: r.ratio_f64(),
                    error_approx: r.error_f64(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerJson {
    pub ring: RingSpec,
    pub generators: Vec<String>,
    pub basis: Vec<String>,
    pub leading_monomials: Vec<String>,
    pub pair_reductions: u64,
    pub basis_sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NfJson {
    pub ring: RingSpec,
    pub generators: Vec<String>,
    pub target: String,
    pub remainder: String,
    pub member: bool,
    /// `target - remainder = sum cofactors[i] * generators[i]`.
    pub cofactors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimJson {
    pub ring: RingSpec,
    pub generators: Vec<String>,
    pub dimension: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertJson {
    pub ring: RingSpec,
    pub generators: Vec<String>,
    pub series: String,
    pub numerator: Vec<String>,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub report_kind: String,
    pub steps: Vec<VerifyStep>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyStep {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}
