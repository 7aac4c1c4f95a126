use num_bigint::BigInt;
use num_rational::BigRational;
use sha2::{Digest, Sha256};
use symsig_core::differentials::{ci_signature, hypersurface_signature, SignatureOptions};
use symsig_core::groebner::{hilbert_series, krull_dimension, normal_form, GroebnerOptions};
use symsig_core::invariants::{coprimality_check, is_small, quotient_signature};
use symsig_core::report::{CheckStatus, HypothesisCheck, Verdict};
use symsig_core::Error as CoreError;

use crate::args::{Command, Common, IdealInput};
use crate::error::{CliError, CliResult};
use crate::input::{load_group, load_ideal, LoadedIdeal};
use crate::report::*;

/// A finished run: the report and the process exit code.
pub struct Outcome {
    pub report: RunReport,
    pub exit_code: i32,
}

pub fn groebner_options(common: &Common) -> GroebnerOptions {
    let opts = GroebnerOptions::default();
    match common.limit_pairs {
        Some(limit) => opts.with_pair_limit(limit),
        None => opts,
    }
}

fn skeleton(command: Vec<String>, inputs: Vec<InputDigest>, result: ResultJson) -> RunReport {
    RunReport {
        schema_version: SCHEMA_VERSION,
        tool: Tool::default(),
        command,
        inputs,
        wall_time_ms: 0,
        verdict: None,
        hypotheses: Vec::new(),
        result,
        warnings: Vec::new(),
    }
}

fn generator_strings(loaded: &LoadedIdeal) -> Vec<String> {
    loaded.ideal.generators().iter().map(ToString::to_string).collect()
}

pub fn run(command: &Command, common: &Common, argv: Vec<String>) -> CliResult<Outcome> {
    let report = match command {
        Command::Hypersurface {
            input,
            assume_domain,
            max_q,
            full_syzygy_basis,
        } => {
            let loaded = load_ideal(input, common.characteristic, None)?;
            let [f] = loaded.ideal.generators() else {
                return Err(CliError::Usage(
                    "hypersurface takes exactly one nonzero polynomial; use ci-freerank for ideals".into(),
                ));
            };
            let opts = SignatureOptions {
                max_q: *max_q,
                assume_domain: *assume_domain,
                assume_reflexive: false,
                groebner: groebner_options(common),
                full_syzygy_basis: *full_syzygy_basis,
            };
            let rep = hypersurface_signature(f, &opts)?;
            signature_report(argv, &loaded, &rep, ResultJson::Hypersurface)
        }
        Command::CiFreerank {
            input,
            assume_domain,
            assume_reflexive,
            max_q,
            full_syzygy_basis,
        } => {
            let loaded = load_ideal(input, common.characteristic, None)?;
            let opts = SignatureOptions {
                max_q: *max_q,
                assume_domain: *assume_domain,
                assume_reflexive: *assume_reflexive,
                groebner: groebner_options(common),
                full_syzygy_basis: *full_syzygy_basis,
            };
            let rep = ci_signature(&loaded.ideal, &opts)?;
            signature_report(argv, &loaded, &rep, ResultJson::CiFreerank)
        }
        Command::Quotient { group, max_degree } => quotient(argv, common, group, *max_degree)?,
        Command::Groebner { input, order } => {
            let loaded = load_ideal(input, common.characteristic, order.as_deref())?;
            let gb = loaded.ideal.groebner_basis(&groebner_options(common))?;
            let names = loaded.ideal.ring().variables();
            let basis: Vec<String> = gb.polynomials().iter().map(ToString::to_string).collect();
            let digest = hex::encode(Sha256::digest(basis.join("\n").as_bytes()));
            let result = GroebnerJson {
                ring: loaded.spec.clone(),
                generators: generator_strings(&loaded),
                leading_monomials: gb
                    .leading_monomials()
                    .iter()
                    .map(|(_, m)| m.format_with(names))
                    .collect(),
                basis,
                pair_reductions: gb.pair_reductions(),
                basis_sha256: digest,
            };
            skeleton(argv, digests(&loaded), ResultJson::Groebner(result))
        }
        Command::Nf { input, target } => nf(argv, common, input, target)?,
        Command::Dim { input } => {
            let loaded = load_ideal(input, common.characteristic, None)?;
            let dimension = krull_dimension(&loaded.ideal, &groebner_options(common))?;
            let result = DimJson {
                ring: loaded.spec.clone(),
                generators: generator_strings(&loaded),
                dimension,
            };
            skeleton(argv, digests(&loaded), ResultJson::Dim(result))
        }
        Command::Hilbert { input, max_degree } => {
            let loaded = load_ideal(input, common.characteristic, None)?;
            let h = hilbert_series(&loaded.ideal, &groebner_options(common))?;
            let result = HilbertJson {
                ring: loaded.spec.clone(),
                generators: generator_strings(&loaded),
                series: h.to_string(),
                numerator: h.numerator().iter().map(ToString::to_string).collect(),
                values: (0..=*max_degree).map(|q| h.coefficient(q).to_string()).collect(),
            };
            skeleton(argv, digests(&loaded), ResultJson::Hilbert(result))
        }
        Command::Verify { report } => return crate::verify::verify_file(argv, common, report),
    };
    Ok(Outcome {
        report,
        exit_code: 0,
    })
}

fn digests(loaded: &LoadedIdeal) -> Vec<InputDigest> {
    loaded.sources.iter().map(InputDigest::from).collect()
}

fn signature_report(
    argv: Vec<String>,
    loaded: &LoadedIdeal,
    rep: &symsig_core::differentials::SignatureReport,
    wrap: fn(SignatureJson) -> ResultJson,
) -> RunReport {
    let mut report = skeleton(argv, digests(loaded), wrap(SignatureJson::new(loaded.spec.clone(), rep)));
    report.verdict = Some(VerdictJson::from(&rep.verdict));
    report.hypotheses = rep.checks.iter().map(HypothesisJson::from).collect();
    report.warnings = rep.verdict.warnings.clone();
    report
}

fn nf(argv: Vec<String>, common: &Common, input: &IdealInput, target: &str) -> CliResult<RunReport> {
    let loaded = load_ideal(input, common.characteristic, None)?;
    let ring = loaded.ideal.ring();
    let f = symsig_core::poly::parse_polynomial(target, ring)?;
    let gb = loaded.ideal.groebner_basis(&groebner_options(common).with_cofactors())?;
    let reduced = normal_form(&f, &gb);
    let cofactors = gb
        .lift_to_inputs(&reduced.quotients)
        .ok_or_else(|| CoreError::Internal("cofactors were not tracked".into()))?;
    let result = NfJson {
        ring: loaded.spec.clone(),
        generators: generator_strings(&loaded),
        target: f.to_string(),
        remainder: reduced.remainder.to_string(),
        member: reduced.remainder.is_zero(),
        cofactors: cofactors.iter().map(ToString::to_string).collect(),
    };
    let mut inputs = digests(&loaded);
    inputs.push(InputDigest::from(&crate::input::Source {
        name: "--target".into(),
        text: target.into(),
    }));
    Ok(skeleton(argv, inputs, ResultJson::Nf(result)))
}

fn quotient(
    argv: Vec<String>,
    common: &Common,
    path: &std::path::Path,
    max_degree: usize,
) -> CliResult<RunReport> {
    let loaded = load_group(path)?;
    let group = &loaded.group;
    let characteristic = common.characteristic.unwrap_or(0);
    let inputs = vec![InputDigest::from(&loaded.source)];
    let smallness = is_small(group);
    let coprime = coprimality_check(group, characteristic);
    let witness = smallness.witness.as_ref().map(ToString::to_string);
    let hypotheses = vec![
        HypothesisCheck::from_bool(
            "small",
            smallness.small,
            match &witness {
                Some(w) => format!("pseudo-reflection {w}"),
                None => "no element fixes a hyperplane".into(),
            },
        ),
        HypothesisCheck::from_bool(
            "char-coprime-to-order",
            coprime,
            format!("characteristic {characteristic}, |G| = {}", group.order()),
        ),
    ];
    let mut warnings = Vec::new();
    let (verdict, result) = match quotient_signature(group, characteristic, max_degree) {
        Ok(rep) => {
            if characteristic > 0 {
                warnings.push(format!(
                    "Molien series computed in characteristic 0; used for characteristic {characteristic}"
                ));
            }
            let verdict = Verdict::determined(
                BigRational::new(BigInt::from(1), BigInt::from(group.order())),
                vec![format!("quotient singularity by a small group of order {}", group.order())],
            );
            (verdict, QuotientJson::from_report(loaded.spec.clone(), &rep))
        }
        Err(CoreError::NotSmall { .. } | CoreError::CharacteristicDividesOrder { .. }) => {
            let reasons = hypotheses
                .iter()
                .filter(|h| h.status == CheckStatus::Failed)
                .map(|h| format!("{}: {}", h.name, h.detail))
                .collect();
            let result = QuotientJson {
                group: loaded.spec.clone(),
                order: group.order(),
                characteristic,
                small: smallness.small,
                witness: witness.clone(),
                coprime,
                molien: None,
                table: Vec::new(),
            };
            (Verdict::undecided(reasons), result)
        }
        Err(e) => return Err(e.into()),
    };
    let mut result = result;
    result.witness = witness;
    let mut report = skeleton(argv, inputs, ResultJson::Quotient(result));
    report.verdict = Some(VerdictJson::from(&verdict));
    report.hypotheses = hypotheses.iter().map(HypothesisJson::from).collect();
    report.warnings = warnings;
    Ok(report)
}
