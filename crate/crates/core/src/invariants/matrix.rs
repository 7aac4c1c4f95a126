//! Dense square matrices over an exact field.

use std::fmt;

use crate::arith::{Field, FieldElement, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty matrix".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput(format!("matrix is not {n}x{n}")));
        }
        let entries: Vec<FieldElement> = rows.into_iter().flatten().collect();
        if let Some(bad) = entries.iter().find(|e| e.field() != *field) {
            return Err(Error::FieldMismatch(bad.field().to_string(), field.to_string()));
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_i64(field: &Field, rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        Matrix::diagonal(&vec![field.one(); n])
    }

    pub fn diagonal(diag: &[FieldElement]) -> Self {
        let n = diag.len();
        let zero = diag[0].field().zero();
        let mut entries = vec![zero; n * n];
        for (i, d) in diag.iter().enumerate() {
            entries[i * n + i] = d.clone();
        }
        Matrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.entries[0].field()
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<FieldElement>> {
        self.entries.chunks(self.n).map(<[_]>::to_vec).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let zero = self.entries[0].field().zero();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = zero.clone();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Matrix { n, entries }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn add_scalar(&self, c: &FieldElement) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.n {
            let k = i * self.n + i;
            m.entries[k] = &m.entries[k] + c;
        }
        m
    }

    pub fn trace(&self) -> FieldElement {
        (0..self.n).fold(self.field().zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let e = self.get(i, j);
                if i == j { e.is_one() } else { e.is_zero() }
            })
        })
    }

    /// Row echelon form, rank and determinant.
    fn echelon(&self) -> (Vec<Vec<FieldElement>>, usize, FieldElement) {
        let mut a = self.rows();
        let n = self.n;
        let mut det = self.field().one();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
                det = self.field().zero();
                continue;
            };
            if p != rank {
                a.swap(p, rank);
                det = -&det;
            }
            let inv = a[rank][col].inverse().expect("nonzero pivot");
            det = &det * &a[rank][col];
            for r in rank + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] * &inv;
                for c in col..n {
                    let t = &factor * &a[rank][c];
                    a[r][c] = &a[r][c] - &t;
                }
            }
            rank += 1;
        }
        (a, rank, det)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1
    }

    pub fn determinant(&self) -> FieldElement {
        self.echelon().2
    }

    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.n;
        let field = self.field();
        let mut a: Vec<Vec<FieldElement>> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
                r
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(p, col);
            let inv = a[col][col].inverse().ok()?;
            for c in 0..2 * n {
                a[col][c] = &a[col][c] * &inv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..2 * n {
                    let t = &factor * &a[col][c];
                    a[r][c] = &a[r][c] - &t;
                }
            }
        }
        let rows = a.into_iter().map(|r| r[n..].to_vec()).collect();
        Matrix::from_rows(&field, rows).ok()
    }

    /// Coefficients `c_0, ..., c_n` of `det(I - tA) = sum c_k t^k` by Faddeev-LeVerrier.
    ///
    /// Divides by `1..n`, so the field must have characteristic 0 or larger than `n`.
    pub fn det_one_minus_t(&self) -> UniPoly {
        let n = self.n;
        let field = self.field();
        // Characteristic polynomial t^n + p_1 t^(n-1) + ... + p_n; det(I - tA) has ascending coefficients p_k.
        let mut coeffs = vec![field.one()];
        let mut m = Matrix {
            n,
            entries: vec![field.zero(); n * n],
        };
        for k in 1..=n {
            m = self.mul(&m).add_scalar(&coeffs[k - 1]);
            let tr = self.mul(&m).trace();
            let kk = field.from_i64(k as i64);
            let ck = -&(&tr / &kk);
            coeffs.push(ck);
        }
        UniPoly::new(field, coeffs)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_determinant() {
        let q = Field::Rational;
        let swap = Matrix::from_i64(&q, &[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(swap.rank(), 2);
        assert_eq!(swap.determinant(), q.from_i64(-1));
        assert_eq!(swap.sub(&Matrix::identity(&q, 2)).rank(), 1);
        let neg = Matrix::from_i64(&q, &[&[-1, 0], &[0, -1]]).unwrap();
        assert_eq!(neg.sub(&Matrix::identity(&q, 2)).rank(), 2);
        assert_eq!(neg.mul(&neg), Matrix::identity(&q, 2));
    }

    #[test]
    fn inverse_round_trip() {
        let q = Field::Rational;
        let a = Matrix::from_i64(&q, &[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]).unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let singular = Matrix::from_i64(&q, &[&[1, 2], &[2, 4]]).unwrap();
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn det_one_minus_t_of_small_matrices() {
        let q = Field::Rational;
        let neg = Matrix::from_i64(&q, &[&[-1, 0], &[0, -1]]).unwrap();
        // (1 + t)^2
        assert_eq!(neg.det_one_minus_t(), UniPoly::from_i64(&q, &[1, 2, 1]));
        let swap = Matrix::from_i64(&q, &[&[0, 1], &[1, 0]]).unwrap();
        // (1 - t)(1 + t)
        assert_eq!(swap.det_one_minus_t(), UniPoly::from_i64(&q, &[1, 0, -1]));
        let k = Field::cyclotomic(3).unwrap();
        let d = Matrix::diagonal(&[k.zeta_power(1).unwrap(), k.zeta_power(2).unwrap()]);
        // (1 - z t)(1 - z^2 t) = 1 + t + t^2
        assert_eq!(d.det_one_minus_t(), UniPoly::from_i64(&k, &[1, 1, 1]));
    }

    #[test]
    fn display() {
        let q = Field::Rational;
        let a = Matrix::from_i64(&q, &[&[1, -2], &[0, 3]]).unwrap();
        assert_eq!(a.to_string(), "[[1, -2], [0, 3]]");
    }
}
