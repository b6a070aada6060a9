//! Dense square matrices of arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (k, row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotSquare {
                    rows: order,
                    row: k + 1,
                    len: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(ExactMatrix { order, entries })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn identity(order: usize) -> Self {
        let mut m = ExactMatrix::zero(order);
        for k in 0..order {
            m.entries[k * order + k] = BigInt::one();
        }
        m
    }

    pub fn zero(order: usize) -> Self {
        ExactMatrix {
            order,
            entries: vec![BigInt::zero(); order * order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Entry at 0-based `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.order + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.entries[r * self.order + c] = value;
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .chunks(self.order.max(1))
            .take(self.order)
            .map(<[BigInt]>::to_vec)
            .collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let n = self.order;
        let mut t = ExactMatrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.order, other.order, "order mismatch");
        let n = self.order;
        let mut out = ExactMatrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = BigInt::zero();
                for k in 0..n {
                    acc += self.get(r, k) * other.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// Exact determinant by Bareiss fraction-free elimination. The empty
    /// matrix has determinant 1.
    pub fn determinant(&self) -> BigInt {
        let n = self.order;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.entries.clone();
        let mut sign_flip = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for c in 0..n {
                    a.swap(k * n + c, swap * n + c);
                }
                sign_flip = !sign_flip;
            }
            let pivot = a[k * n + k].clone();
            for r in k + 1..n {
                for c in k + 1..n {
                    let v = &pivot * &a[r * n + c] - &a[r * n + k] * &a[k * n + c];
                    // Exact by Sylvester's identity.
                    a[r * n + c] = v / &prev;
                }
                a[r * n + k] = BigInt::zero();
            }
            prev = pivot;
        }
        let det = a[n * n - 1].clone();
        if sign_flip {
            -det
        } else {
            det
        }
    }

    /// Determinant by Laplace expansion along the first row. Exponential;
    /// meant as an independent cross-check for small orders.
    pub fn determinant_by_expansion(&self) -> BigInt {
        let cols: Vec<usize> = (0..self.order).collect();
        self.expand(0, &cols)
    }

    fn expand(&self, row: usize, cols: &[usize]) -> BigInt {
        if cols.is_empty() {
            return BigInt::one();
        }
        let mut acc = BigInt::zero();
        for (k, &c) in cols.iter().enumerate() {
            let entry = self.get(row, c);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry * self.expand(row + 1, &rest);
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn determinant_examples() {
        let m = ExactMatrix::from_i64(&[&[16, 7, 2], &[6, 3, 1], &[3, 2, 1]]).unwrap();
        assert_eq!(m.determinant(), BigInt::one());
        assert_eq!(
            ExactMatrix::from_i64(&[&[1]]).unwrap().determinant(),
            BigInt::one()
        );
        let m = ExactMatrix::from_i64(&[&[16, 2], &[3, 1]]).unwrap();
        assert_eq!(m.determinant(), BigInt::from(10));
        assert_eq!(ExactMatrix::zero(0).determinant(), BigInt::one());
    }

    #[test]
    fn pivoting() {
        let m = ExactMatrix::from_i64(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(m.determinant(), BigInt::from(-1));
        let m = ExactMatrix::from_i64(&[&[0, 2, 1], &[0, 1, 1], &[3, 0, 0]]).unwrap();
        assert_eq!(m.determinant(), BigInt::from(3));
        let m = ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(m.determinant(), BigInt::zero());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(matches!(
            ExactMatrix::from_i64(&[&[1, 2], &[3]]),
            Err(Error::NotSquare { row: 2, .. })
        ));
    }

    #[test]
    fn product_and_transpose() {
        let m = ExactMatrix::from_i64(&[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(
            m.mul(&m.transpose()),
            ExactMatrix::from_i64(&[&[5, 11], &[11, 25]]).unwrap()
        );
        assert_eq!(m.mul(&ExactMatrix::identity(2)), m);
    }

    proptest! {
        #[test]
        fn bareiss_matches_expansion(n in 1usize..=5, seed in proptest::collection::vec(-9i64..=9, 25)) {
            let rows: Vec<Vec<BigInt>> = (0..n)
                .map(|r| (0..n).map(|c| BigInt::from(seed[r * 5 + c])).collect())
                .collect();
            let m = ExactMatrix::from_rows(rows).unwrap();
            prop_assert_eq!(m.determinant(), m.determinant_by_expansion());
            prop_assert_eq!(m.determinant(), m.transpose().determinant());
        }
    }
}
