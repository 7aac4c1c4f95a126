//! Finite matrix groups given by generators.

use std::collections::{HashSet, VecDeque};

use super::matrix::Matrix;
use crate::arith::Field;
use crate::error::{Error, Result};

pub const DEFAULT_CLOSURE_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixGroup {
    n: usize,
    field: Field,
    generators: Vec<Matrix>,
    /// Identity first, then breadth-first discovery order.
    elements: Vec<Matrix>,
}

impl MatrixGroup {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `T G T^-1`.
    pub fn conjugate(&self, t: &Matrix) -> Result<MatrixGroup> {
        let inv = t
            .inverse()
            .ok_or_else(|| Error::InvalidInput("conjugating matrix is singular".into()))?;
        let conj = |g: &Matrix| t.mul(g).mul(&inv);
        Ok(MatrixGroup {
            n: self.n,
            field: self.field.clone(),
            generators: self.generators.iter().map(conj).collect(),
            elements: self.elements.iter().map(conj).collect(),
        })
    }
}

/// Closes `generators` under multiplication by breadth-first search.
///
/// In a finite group the multiplicative closure already contains all inverses.
pub fn group_closure(field: &Field, generators: Vec<Matrix>, cap: usize) -> Result<MatrixGroup> {
    let Some(first) = generators.first() else {
        return Err(Error::InvalidInput("a group needs at least one generator".into()));
    };
    let n = first.dim();
    for (index, g) in generators.iter().enumerate() {
        if g.dim() != n {
            return Err(Error::InvalidInput(format!(
                "generator {index} is {}x{}, expected {n}x{n}",
                g.dim(),
                g.dim()
            )));
        }
        if g.field() != *field {
            return Err(Error::FieldMismatch(g.field().to_string(), field.to_string()));
        }
        if g.determinant().is_zero() {
            return Err(Error::SingularGenerator { index });
        }
    }
    let identity = Matrix::identity(field, n);
    let mut seen: HashSet<Matrix> = HashSet::from([identity.clone()]);
    let mut elements = vec![identity.clone()];
    let mut queue = VecDeque::from([identity]);
    while let Some(g) = queue.pop_front() {
        for s in &generators {
            let h = g.mul(s);
            if seen.insert(h.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClosureCapExceeded { cap });
                }
                elements.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(MatrixGroup {
        n,
        field: field.clone(),
        generators,
        elements,
    })
}

/// A non-identity element fixing a hyperplane, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smallness {
    pub small: bool,
    pub witness: Option<Matrix>,
}

/// `G` is small iff no element has `rank(sigma - I) = 1`.
pub fn is_small(group: &MatrixGroup) -> Smallness {
    let identity = Matrix::identity(&group.field, group.n);
    let witness = group
        .elements
        .iter()
        .find(|g| g.sub(&identity).rank() == 1)
        .cloned();
    Smallness {
        small: witness.is_none(),
        witness,
    }
}

/// `char = 0` or `char` does not divide `|G|`.
pub fn coprimality_check(group: &MatrixGroup, characteristic: u64) -> bool {
    characteristic == 0 || group.order() as u64 % characteristic != 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let q = Field::Rational;
        let neg = group_closure(&q, vec![Matrix::from_i64(&q, &[&[-1, 0], &[0, -1]]).unwrap()], 100)
            .unwrap();
        assert_eq!(neg.order(), 2);
        assert!(is_small(&neg).small);
        assert!(coprimality_check(&neg, 0));
        assert!(!coprimality_check(&neg, 2));

        let swap = Matrix::from_i64(&q, &[&[0, 1], &[1, 0]]).unwrap();
        let s = is_small(&group_closure(&q, vec![swap.clone()], 100).unwrap());
        assert!(!s.small);
        assert_eq!(s.witness, Some(swap));

        let trivial = group_closure(&q, vec![Matrix::identity(&q, 3)], 100).unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(is_small(&trivial).small);
    }

    #[test]
    fn cyclic_of_order_three() {
        let k = Field::cyclotomic(3).unwrap();
        let g = Matrix::diagonal(&[k.zeta_power(1).unwrap(), k.zeta_power(2).unwrap()]);
        let grp = group_closure(&k, vec![g], 100).unwrap();
        assert_eq!(grp.order(), 3);
        assert!(is_small(&grp).small);
    }

    #[test]
    fn closure_errors() {
        let q = Field::Rational;
        let shear = Matrix::from_i64(&q, &[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(
            group_closure(&q, vec![shear], 50),
            Err(Error::ClosureCapExceeded { cap: 50 })
        );
        let singular = Matrix::from_i64(&q, &[&[1, 0], &[0, 0]]).unwrap();
        assert_eq!(
            group_closure(&q, vec![Matrix::identity(&q, 2), singular], 50),
            Err(Error::SingularGenerator { index: 1 })
        );
    }

    #[test]
    fn dihedral_group_of_order_eight() {
        let q = Field::Rational;
        let rot = Matrix::from_i64(&q, &[&[0, -1], &[1, 0]]).unwrap();
        let refl = Matrix::from_i64(&q, &[&[1, 0], &[0, -1]]).unwrap();
        let d4 = group_closure(&q, vec![rot, refl], 100).unwrap();
        assert_eq!(d4.order(), 8);
        assert!(!is_small(&d4).small);
    }
}
