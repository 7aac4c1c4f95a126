//! Replays the certificates stored in a report.

use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use symsig_core::differentials::{
    freerank_omega_column_test, freerank_positive_syzygy, jacobian, omega_presentation,
    sym_power_presentation, verify_unit_syzygy, FreeRankOptions, PresentationMatrix,
};
use symsig_core::groebner::{check_combination, GroebnerOptions, Ideal, ModuleElement};
use symsig_core::invariants::{is_small, sym_trace_newton, trace_average, RationalFunction};
use symsig_core::poly::{parse_polynomial, PolyRing};

use crate::args::Common;
use crate::commands::{groebner_options, Outcome};
use crate::error::{CliError, CliResult};
use crate::input::{build_group, parse_all, read, Source};
use crate::report::*;

struct Steps(Vec<VerifyStep>);

impl Steps {
    fn push(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.0.push(VerifyStep {
            name: name.into(),
            ok,
            detail: detail.into(),
        });
    }
}

pub fn verify_file(argv: Vec<String>, common: &Common, path: &Path) -> CliResult<Outcome> {
    let text = read(path)?;
    let stored: RunReport = serde_json::from_str(&text).map_err(|e| CliError::Format {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    if stored.schema_version != SCHEMA_VERSION {
        return Err(CliError::Usage(format!(
            "unsupported schema version {} (expected {SCHEMA_VERSION})",
            stored.schema_version
        )));
    }
    let opts = groebner_options(common);
    let mut steps = Steps(Vec::new());
    let kind = match &stored.result {
        ResultJson::Hypersurface(s) => {
            signature(&mut steps, s, stored.verdict.as_ref(), &opts)?;
            "hypersurface"
        }
        ResultJson::CiFreerank(s) => {
            signature(&mut steps, s, stored.verdict.as_ref(), &opts)?;
            "ci-freerank"
        }
        ResultJson::Quotient(q) => {
            quotient(&mut steps, q, stored.verdict.as_ref())?;
            "quotient"
        }
        ResultJson::Nf(nf) => {
            normal_form(&mut steps, nf)?;
            "nf"
        }
        ResultJson::Groebner(_) | ResultJson::Dim(_) | ResultJson::Hilbert(_) => {
            return Err(CliError::Usage(
                "only signature, quotient and nf reports carry certificates".into(),
            ))
        }
        ResultJson::Verify(_) => return Err(CliError::Usage("cannot verify a verify report".into())),
    };
    let ok = steps.0.iter().all(|s| s.ok);
    let report = RunReport {
        schema_version: SCHEMA_VERSION,
        tool: Tool::default(),
        command: argv,
        inputs: vec![InputDigest::from(&Source {
            name: crate::input::display(path),
            text,
        })],
        wall_time_ms: 0,
        verdict: None,
        hypotheses: Vec::new(),
        result: ResultJson::Verify(VerifyJson {
            report_kind: kind.into(),
            steps: steps.0,
            ok,
        }),
        warnings: Vec::new(),
    };
    Ok(Outcome {
        report,
        exit_code: if ok { 0 } else { 4 },
    })
}

fn vector(ring: &Arc<PolyRing>, v: &[String]) -> CliResult<ModuleElement> {
    Ok(ModuleElement::new(parse_all(ring, v)?))
}

fn signature(
    steps: &mut Steps,
    s: &SignatureJson,
    verdict: Option<&VerdictJson>,
    opts: &GroebnerOptions,
) -> CliResult<()> {
    let ring = s.ring.build()?;
    let ideal = Ideal::new(&ring, parse_all(&ring, &s.generators)?);
    let jac = jacobian(&ideal);
    if let Some(stored) = &s.jacobian {
        let recomputed: Vec<Vec<String>> = jac
            .entries()
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect();
        steps.push("jacobian", &recomputed == stored, "recomputed from the generators");
    }
    let omega = omega_presentation(&ideal);
    if let Some(col) = &s.omega_column_test {
        match &col.certificate {
            CertificateJson::Combination {
                column,
                target,
                generators,
                cofactors,
                ..
            } => {
                let target = vector(&ring, target)?;
                let gens = generators
                    .iter()
                    .map(|g| vector(&ring, g))
                    .collect::<CliResult<Vec<_>>>()?;
                let cofactors = parse_all(&ring, cofactors)?;
                let is_column = target.components() == jac.column(*column).as_slice();
                let replays = check_combination(&target, &gens, &cofactors);
                steps.push(
                    "omega-column-certificate",
                    is_column && replays && col.is_positive(),
                    format!("column {column} equals the stored combination of the others"),
                );
            }
            _ => {
                let fresh = freerank_omega_column_test(&jac, opts)?;
                let fresh = FreeRankJson::from(&fresh);
                steps.push(
                    "omega-column-memberships",
                    fresh == *col,
                    format!("{} column memberships re-reduced", fresh.columns.len()),
                );
            }
        }
    }
    if let Some(syz) = &s.omega_syzygy_test {
        check_syzygy(steps, "omega-syzygy", &ring, &omega, syz, opts)?;
    }
    for c in &s.sym_checks {
        let sym = sym_power_presentation(&ideal, c.q)?;
        let counts = sym.generator_count() == c.generators && sym.relation_count() == c.relations;
        steps.push(
            format!("sym{}-presentation", c.q),
            counts,
            format!("{} generators, {} relations", c.generators, c.relations),
        );
        check_syzygy(steps, &format!("sym{}-syzygy", c.q), &ring, sym.presentation(), &c.freerank, opts)?;
    }
    // These pipelines only ever determine the value 0.
    if let Some(sig) = verdict.and_then(|v| v.signature.as_deref()) {
        let zero = |f: &Option<FreeRankJson>| f.as_ref().is_some_and(|f| !f.is_positive());
        let consistent = sig == "0"
            && zero(&s.omega_column_test)
            && zero(&s.omega_syzygy_test)
            && s.sym_checks.iter().all(|c| !c.freerank.is_positive());
        steps.push(
            "signature-zero",
            consistent,
            "signature 0 requires freerank 0 for Omega and every checked Sym^q",
        );
    }
    Ok(())
}

fn check_syzygy(
    steps: &mut Steps,
    name: &str,
    ring: &Arc<PolyRing>,
    presentation: &PresentationMatrix,
    stored: &FreeRankJson,
    opts: &GroebnerOptions,
) -> CliResult<()> {
    match &stored.certificate {
        CertificateJson::UnitSyzygy { syzygy, entry } => {
            let u = vector(ring, syzygy)?;
            let ok = verify_unit_syzygy(presentation, &u, *entry, opts)? && stored.is_positive();
            steps.push(name, ok, format!("syzygy kills every relation modulo I, scalar at entry {entry}"));
        }
        _ => {
            // A missing degree bound means the stored run used the full module.
            let full_basis = matches!(
                stored.certificate,
                CertificateJson::SyzygyDegrees {
                    degree_bound: None,
                    ..
                }
            );
            let fresh_opts = FreeRankOptions {
                groebner: opts.clone(),
                full_basis,
            };
            let fresh = FreeRankJson::from(&freerank_positive_syzygy(presentation, &fresh_opts)?);
            steps.push(name, fresh == *stored, "syzygy module recomputed, no scalar entry");
        }
    }
    Ok(())
}

fn rationals(v: &[String]) -> CliResult<Vec<BigRational>> {
    v.iter()
        .map(|s| BigRational::from_str(s).map_err(|_| CliError::Usage(format!("bad rational `{s}`"))))
        .collect()
}

fn quotient(steps: &mut Steps, q: &QuotientJson, verdict: Option<&VerdictJson>) -> CliResult<()> {
    let group = build_group(&q.group)?;
    steps.push(
        "group-order",
        group.order() == q.order,
        format!("closure has {} elements", group.order()),
    );
    let small = is_small(&group);
    steps.push(
        "smallness",
        small.small == q.small && small.witness.as_ref().map(ToString::to_string) == q.witness,
        "rank(sigma - I) recomputed for every element",
    );
    let coprime = q.characteristic == 0 || group.order() as u64 % q.characteristic != 0;
    steps.push("coprimality", coprime == q.coprime, format!("characteristic {}", q.characteristic));
    if let Some(sig) = verdict.and_then(|v| v.signature.as_ref()) {
        let expected = BigRational::new(BigInt::from(1), BigInt::from(group.order())).to_string();
        steps.push("signature", *sig == expected, format!("1/|G| = {expected}"));
    }
    let Some(m) = &q.molien else {
        return Ok(());
    };
    let coefficients: Vec<BigInt> = m
        .coefficients
        .iter()
        .map(|s| BigInt::from_str(s).map_err(|_| CliError::Usage(format!("bad integer `{s}`"))))
        .collect::<CliResult<_>>()?;
    let Some(n) = coefficients.len().checked_sub(1) else {
        return Err(CliError::Usage("empty Molien coefficient list".into()));
    };
    let series = RationalFunction {
        numerator: rationals(&m.numerator)?,
        denominator: rationals(&m.denominator)?,
    };
    let expanded = series.expand(n);
    let matches = coefficients
        .iter()
        .zip(&expanded)
        .all(|(a, e)| BigRational::from_integer(a.clone()) == *e);
    steps.push("rational-form", matches, format!("expansion of {} up to degree {n}", m.rational_function));
    for degree in [0, n / 2, n] {
        let avg = trace_average(&group, degree, sym_trace_newton)?;
        steps.push(
            format!("molien-average-{degree}"),
            avg == coefficients[degree],
            format!("(1/|G|) sum trace(Sym^{degree} sigma) = {avg}"),
        );
    }
    Ok(())
}

fn normal_form(steps: &mut Steps, nf: &NfJson) -> CliResult<()> {
    let ring = nf.ring.build()?;
    let gens = parse_all(&ring, &nf.generators)?;
    let cofactors = parse_all(&ring, &nf.cofactors)?;
    let target = parse_polynomial(&nf.target, &ring)?;
    let remainder = parse_polynomial(&nf.remainder, &ring)?;
    let combination = gens
        .iter()
        .zip(&cofactors)
        .fold(remainder.clone(), |acc, (g, c)| acc.add(&g.mul(c)));
    steps.push(
        "cofactor-identity",
        gens.len() == cofactors.len() && combination == target,
        "target = remainder + sum cofactor_i * generator_i",
    );
    steps.push("membership", nf.member == remainder.is_zero(), "member iff the remainder is 0");
    Ok(())
}
