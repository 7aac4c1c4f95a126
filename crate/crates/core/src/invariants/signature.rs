//! Signature of a quotient singularity `k[x_1..x_n]^G`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::group::{coprimality_check, is_small, MatrixGroup};
use super::molien::{cumulative_ratio, molien_series, MolienData};
use crate::error::{Error, Result};

/// Degrees at which the convergence table is sampled (plus the truncation degree).
pub const TABLE_DEGREES: [usize; 8] = [10, 20, 50, 100, 200, 300, 500, 1000];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub degree: usize,
    pub ratio: BigRational,
    /// `|ratio - 1/|G||`.
    pub error: BigRational,
}

impl ConvergenceRow {
    pub fn error_f64(&self) -> f64 {
        self.error.to_f64().unwrap_or(f64::NAN)
    }

    pub fn ratio_f64(&self) -> f64 {
        self.ratio.to_f64().unwrap_or(f64::NAN)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSignatureReport {
    pub dim: usize,
    pub order: usize,
    pub characteristic: u64,
    pub small: bool,
    pub coprime: bool,
    /// `1/|G|`.
    pub signature: BigRational,
    pub molien: MolienData,
    pub table: Vec<ConvergenceRow>,
}

/// `s(k[x]^G) = 1/|G|` for a small group with `char k` not dividing `|G|`.
///
/// The value is exact; the table of cumulative ratios up to `max_degree` is
/// supporting evidence only.
pub fn quotient_signature(
    group: &MatrixGroup,
    characteristic: u64,
    max_degree: usize,
) -> Result<QuotientSignatureReport> {
    if group.dim() < 2 {
        return Err(Error::InvalidInput("quotient signatures need n >= 2".into()));
    }
    let smallness = is_small(group);
    if let Some(w) = smallness.witness {
        return Err(Error::NotSmall {
            witness: w.to_string(),
        });
    }
    if !coprimality_check(group, characteristic) {
        return Err(Error::CharacteristicDividesOrder {
            characteristic,
            order: group.order(),
        });
    }
    let molien = molien_series(group, max_degree)?;
    let signature = BigRational::new(BigInt::from(1), BigInt::from(group.order()));
    let mut degrees: Vec<usize> = TABLE_DEGREES.iter().copied().filter(|&d| d < max_degree).collect();
    degrees.push(max_degree);
    let table = degrees
        .into_iter()
        .map(|degree| {
            let ratio = cumulative_ratio(&molien, degree)?;
            let error = (&ratio - &signature).abs();
            Ok(ConvergenceRow {
                degree,
                ratio,
                error,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QuotientSignatureReport {
        dim: group.dim(),
        order: group.order(),
        characteristic,
        small: true,
        coprime: true,
        signature,
        molien,
        table,
    })
}
