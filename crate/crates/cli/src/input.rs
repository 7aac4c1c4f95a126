//! TOML input files and inline polynomials.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use symsig_core::arith::{Field, FieldElement};
use symsig_core::groebner::Ideal;
use symsig_core::invariants::{group_closure, Matrix, MatrixGroup, DEFAULT_CLOSURE_CAP};
use symsig_core::poly::{parse_polynomial, MonomialOrder, PolyRing, Polynomial};

use crate::args::IdealInput;
use crate::error::{CliError, CliResult};

/// Ring header shared by ring and ideal files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub variables: Vec<String>,
    #[serde(default)]
    pub characteristic: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclotomic_order: Option<u32>,
    #[serde(default = "default_order")]
    pub order: String,
}

fn default_order() -> String {
    MonomialOrder::Grevlex.name().to_string()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealFile {
    variables: Vec<String>,
    #[serde(default)]
    characteristic: u64,
    cyclotomic_order: Option<u32>,
    #[serde(default = "default_order")]
    order: String,
    generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclotomic_order: Option<u32>,
    /// Matrices as rows of entry strings; `z` is the root of unity.
    pub generators: Vec<Vec<Vec<String>>>,
}

/// A file or inline text that contributed to a run, with its digest.
#[derive(Clone, Debug)]
pub struct Source {
    pub name: String,
    pub text: String,
}

impl Source {
    pub fn sha256(&self) -> String {
        hex::encode(Sha256::digest(self.text.as_bytes()))
    }
}

pub fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_toml<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> CliResult<T> {
    toml::from_str(text).map_err(|e| CliError::Format {
        path: path.to_path_buf(),
        message: e.message().to_string(),
    })
}

impl RingSpec {
    pub fn with_characteristic(mut self, characteristic: Option<u64>) -> Self {
        if let Some(p) = characteristic {
            self.characteristic = p;
        }
        self
    }

    pub fn field(&self) -> CliResult<Field> {
        match (self.cyclotomic_order, self.characteristic) {
            (Some(m), 0) => Ok(Field::cyclotomic(m)?),
            (Some(_), p) => Err(CliError::Usage(format!(
                "cyclotomic fields are only supported in characteristic 0, not {p}"
            ))),
            (None, p) => Ok(Field::from_characteristic(p)?),
        }
    }

    pub fn build(&self) -> CliResult<Arc<PolyRing>> {
        let order: MonomialOrder = self
            .order
            .parse()
            .map_err(|_| CliError::Usage(format!("unknown monomial order `{}`", self.order)))?;
        Ok(PolyRing::new(self.variables.iter().cloned(), self.field()?, order)?)
    }
}

/// A parsed ideal together with the sources it came from.
pub struct LoadedIdeal {
    pub spec: RingSpec,
    pub ideal: Ideal,
    pub sources: Vec<Source>,
}

pub fn load_ideal(
    input: &IdealInput,
    characteristic: Option<u64>,
    order: Option<&str>,
) -> CliResult<LoadedIdeal> {
    let mut sources = Vec::new();
    let (mut spec, mut generators) = if let Some(path) = &input.ideal {
        let text = read(path)?;
        let file: IdealFile = parse_toml(path, &text)?;
        sources.push(Source {
            name: display(path),
            text,
        });
        let spec = RingSpec {
            variables: file.variables,
            characteristic: file.characteristic,
            cyclotomic_order: file.cyclotomic_order,
            order: file.order,
        };
        (spec, file.generators)
    } else if let Some(path) = &input.ring {
        let text = read(path)?;
        let spec: RingSpec = parse_toml(path, &text)?;
        sources.push(Source {
            name: display(path),
            text,
        });
        (spec, Vec::new())
    } else {
        return Err(CliError::Usage("either --ideal or --ring is required".into()));
    };
    spec = spec.with_characteristic(characteristic);
    if let Some(o) = order {
        spec.order = o.to_string();
    }
    for p in &input.polys {
        sources.push(Source {
            name: "--poly".into(),
            text: p.clone(),
        });
        generators.push(p.clone());
    }
    if let Some(path) = &input.poly_file {
        let text = read(path)?;
        generators.extend(
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(String::from),
        );
        sources.push(Source {
            name: display(path),
            text,
        });
    }
    if generators.is_empty() {
        return Err(CliError::Usage("no generators given (use --poly, --poly-file or an ideal file)".into()));
    }
    let ring = spec.build()?;
    let polys = parse_all(&ring, &generators)?;
    Ok(LoadedIdeal {
        spec,
        ideal: Ideal::new(&ring, polys),
        sources,
    })
}

pub fn parse_all(ring: &Arc<PolyRing>, texts: &[String]) -> CliResult<Vec<Polynomial>> {
    texts
        .iter()
        .map(|t| parse_polynomial(t, ring).map_err(CliError::from))
        .collect()
}

pub struct LoadedGroup {
    pub spec: GroupSpec,
    pub group: MatrixGroup,
    pub source: Source,
}

pub fn load_group(path: &Path) -> CliResult<LoadedGroup> {
    let text = read(path)?;
    let spec: GroupSpec = parse_toml(path, &text)?;
    let group = build_group(&spec)?;
    Ok(LoadedGroup {
        spec,
        group,
        source: Source {
            name: display(path),
            text,
        },
    })
}

pub fn build_group(spec: &GroupSpec) -> CliResult<MatrixGroup> {
    let field = match spec.cyclotomic_order {
        Some(m) => Field::cyclotomic(m)?,
        None => Field::Rational,
    };
    // Entries are constants in a one-variable ring over the group's field.
    let ring = PolyRing::new(["t"], field.clone(), MonomialOrder::Grevlex)?;
    let mut matrices = Vec::new();
    for (k, rows) in spec.generators.iter().enumerate() {
        if rows.len() != spec.n || rows.iter().any(|r| r.len() != spec.n) {
            return Err(CliError::Usage(format!("generator {k} is not {0}x{0}", spec.n)));
        }
        let entries = rows
            .iter()
            .map(|row| row.iter().map(|e| constant(&ring, e)).collect::<CliResult<Vec<_>>>())
            .collect::<CliResult<Vec<_>>>()?;
        matrices.push(Matrix::from_rows(&field, entries)?);
    }
    Ok(group_closure(&field, matrices, DEFAULT_CLOSURE_CAP)?)
}

fn constant(ring: &Arc<PolyRing>, text: &str) -> CliResult<FieldElement> {
    let p = parse_polynomial(text, ring)?;
    if p.terms().iter().any(|(m, _)| !m.is_one()) {
        return Err(CliError::Usage(format!("matrix entry `{text}` is not a constant")));
    }
    Ok(p.constant_term())
}

pub fn display(path: &Path) -> String {
    PathBuf::from(path).display().to_string()
}
