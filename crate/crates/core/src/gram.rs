//! The integral orthonormal basis of the Durfee-square form.
//!
//! Let `n` be the Durfee size and `x_1..x_n` formal basis vectors with
//! `⟨x_a, x_b⟩ = D_{a,b}`. The vectors
//!
//! ```text
//! y_j = Σ_{i=j..n} (−1)^{i−j} C(λ_i − j, i − j) x_i
//! ```
//!
//! satisfy `⟨y_j, x_i⟩ = δ_ij` for `i ≥ j`. For self-conjugate shapes the
//! form is symmetric and the `y_j` are orthonormal. Everything is exact; `y_j`
//! is stored as its integer coordinate vector over `x_j..x_n`.
//!
//! For non-symmetric shapes the pairing always puts `y` on the left and `x`
//! on the right.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::closedforms::choose;
use crate::error::{Error, Result};
use crate::lgv::{enumerate_disjoint_systems, Selection};
use crate::matrix::ExactMatrix;
use crate::partition::Partition;
use crate::patharray::{path_count_array, PathCountArray};
use crate::report::{IdentityInstance, VerificationReport};

fn check_range(what: &'static str, value: usize, max: usize) -> Result<()> {
    if value == 0 || value > max {
        Err(Error::IndexOutOfRange { what, value, max })
    } else {
        Ok(())
    }
}

/// Validates `1 ≤ j ≤ i ≤ n`.
fn check_pair(shape: &Partition, i: usize, j: usize) -> Result<()> {
    let n = shape.durfee();
    check_range("i", i, n)?;
    check_range("j", j, i)
}

fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `G_k = det [D_{i,j}]` over `k ≤ i, j ≤ n`.
pub fn gram_determinant(shape: &Partition, k: usize) -> Result<BigInt> {
    check_range("k", k, shape.durfee())?;
    Ok(trailing_minor(&path_count_array(shape), k).determinant())
}

fn trailing_minor(d: &PathCountArray, k: usize) -> ExactMatrix {
    let n = d.shape().durfee();
    let idx: Vec<usize> = (k..=n).collect();
    let sel = Selection::new(d.shape(), idx.clone(), idx).expect("inside the Durfee square");
    d.submatrix(&sel)
}

/// Closed form `c_ij = C(λ_i − j, i − j)`.
pub fn basis_coefficient(shape: &Partition, i: usize, j: usize) -> Result<BigInt> {
    check_pair(shape, i, j)?;
    Ok(closed_coefficient(shape, i, j))
}

fn closed_coefficient(shape: &Partition, i: usize, j: usize) -> BigInt {
    // λ_i ≥ i ≥ j inside the Durfee square.
    choose(shape.row_len(i) - j, i - j)
}

/// The selection behind the cofactor: sinks `{j..n} \ {i}`, sources
/// `{j+1..n}`. `None` when both are empty (`i = j = n`).
pub fn cofactor_selection(shape: &Partition, i: usize, j: usize) -> Result<Option<Selection>> {
    check_pair(shape, i, j)?;
    let n = shape.durfee();
    let rows: Vec<usize> = (j..=n).filter(|&r| r != i).collect();
    let cols: Vec<usize> = (j + 1..=n).collect();
    if rows.is_empty() {
        return Ok(None);
    }
    Selection::new(shape, rows, cols).map(Some)
}

/// `c_ij` as the determinant of the path matrix with row `i` omitted.
pub fn basis_coefficient_minor(shape: &Partition, i: usize, j: usize) -> Result<BigInt> {
    let d = path_count_array(shape);
    minor_coefficient(&d, i, j)
}

fn minor_coefficient(d: &PathCountArray, i: usize, j: usize) -> Result<BigInt> {
    Ok(match cofactor_selection(d.shape(), i, j)? {
        Some(sel) => d.submatrix(&sel).determinant(),
        None => BigInt::one(),
    })
}

/// Disjoint path systems on the cofactor selection: whether all of them use
/// the identity routing, and how many there are.
pub fn cofactor_systems(
    shape: &Partition,
    i: usize,
    j: usize,
    budget: u64,
) -> Result<(bool, usize)> {
    match cofactor_selection(shape, i, j)? {
        Some(sel) => {
            let systems = enumerate_disjoint_systems(shape, sel.cols(), sel.rows(), budget)?;
            Ok((systems.iter().all(|s| s.is_identity()), systems.len()))
        }
        None => Ok((true, 1)),
    }
}

/// `y_j` as integer coefficients of `x_j..x_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisExpansion {
    pub j: usize,
    pub n: usize,
    pub coefficients: Vec<BigInt>,
}

impl BasisExpansion {
    /// Coefficient of `x_i`, zero outside `j..=n`.
    pub fn coefficient(&self, i: usize) -> BigInt {
        if i < self.j || i > self.n {
            BigInt::zero()
        } else {
            self.coefficients[i - self.j].clone()
        }
    }
}

/// `y_1 = x_1 - 3*x_2 + x_3`
impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y_{} =", self.j)?;
        let mut first = true;
        for (offset, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let i = self.j + offset;
            let magnitude = c.abs();
            let op = match (first, c.is_negative()) {
                (true, false) => " ",
                (true, true) => " -",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            f.write_str(op)?;
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "x_{i}")?;
            first = false;
        }
        if first {
            f.write_str(" 0")?;
        }
        Ok(())
    }
}

impl Serialize for BasisExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let coefficients: Vec<String> = self.coefficients.iter().map(BigInt::to_string).collect();
        let mut st = serializer.serialize_struct("BasisExpansion", 3)?;
        st.serialize_field("j", &self.j)?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("coefficients", &coefficients)?;
        st.end()
    }
}

pub fn basis_expansion(shape: &Partition, j: usize) -> Result<BasisExpansion> {
    let n = shape.durfee();
    check_range("j", j, n)?;
    let coefficients = (j..=n)
        .map(|i| sign(i - j) * closed_coefficient(shape, i, j))
        .collect();
    Ok(BasisExpansion { j, n, coefficients })
}

/// `y_1, …, y_n`.
pub fn basis(shape: &Partition) -> Vec<BasisExpansion> {
    (1..=shape.durfee())
        .map(|j| basis_expansion(shape, j).expect("j within the Durfee square"))
        .collect()
}

/// `⟨y_j, x_i⟩ = Σ_{k=j..n} (−1)^{k−j} c_kj D_{k,i}`. Only `i ≥ j` is
/// guaranteed to give `δ_ij`.
pub fn pairing(shape: &Partition, j: usize, i: usize) -> Result<BigInt> {
    let n = shape.durfee();
    check_range("j", j, n)?;
    check_range("i", i, n)?;
    Ok(pairing_with(&path_count_array(shape), j, i))
}

fn pairing_with(d: &PathCountArray, j: usize, i: usize) -> BigInt {
    let shape = d.shape();
    let n = shape.durfee();
    (j..=n)
        .map(|k| sign(k - j) * closed_coefficient(shape, k, j) * d.at(k, i))
        .sum()
}

/// The same pairing for the conjugate shape, read off the original array:
/// `Σ_{k=j..n} (−1)^{k−j} D_{i,k} C(λ'_k − j, k − j)`.
pub fn conjugate_pairing(shape: &Partition, j: usize, i: usize) -> Result<BigInt> {
    let n = shape.durfee();
    check_range("j", j, n)?;
    check_range("i", i, n)?;
    Ok(conjugate_pairing_with(&path_count_array(shape), j, i))
}

fn conjugate_pairing_with(d: &PathCountArray, j: usize, i: usize) -> BigInt {
    let shape = d.shape();
    let n = shape.durfee();
    (j..=n)
        .map(|k| sign(k - j) * d.at(i, k) * choose(shape.col_len(k) - j, k - j))
        .sum()
}

/// `Y · D_n · Yᵀ` where row `a` of `Y` holds the coordinates of `y_a` and
/// `D_n` is the Durfee block. Equals the identity for self-conjugate shapes.
pub fn basis_gram_matrix(shape: &Partition) -> ExactMatrix {
    let d = path_count_array(shape);
    basis_gram_with(&d)
}

fn basis_gram_with(d: &PathCountArray) -> ExactMatrix {
    let shape = d.shape();
    let n = shape.durfee();
    let mut y = ExactMatrix::zero(n);
    for expansion in basis(shape) {
        for i in expansion.j..=n {
            y.set(expansion.j - 1, i - 1, expansion.coefficient(i));
        }
    }
    if n == 0 {
        return y;
    }
    let durfee_block = trailing_minor(d, 1);
    y.mul(&durfee_block).mul(&y.transpose())
}

fn delta(a: usize, b: usize) -> BigInt {
    if a == b {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// Checks over `1 ≤ j ≤ i ≤ n`:
/// the pairing identity, the conjugate identity, closed form against cofactor
/// minor, and for self-conjugate shapes full orthonormality of the basis.
pub fn verify_identities(shape: &Partition) -> VerificationReport {
    let d = path_count_array(shape);
    identities_report(&d)
}

pub(crate) fn identities_report(d: &PathCountArray) -> VerificationReport {
    let shape = d.shape();
    let n = shape.durfee();
    let mut report = VerificationReport::new(Some("gram"), shape.clone());
    for j in 1..=n {
        for i in j..=n {
            let params = [("i", i as i64), ("j", j as i64)];
            report.push_identity(IdentityInstance::new(
                "pairing",
                &params,
                pairing_with(d, j, i),
                delta(i, j),
            ));
            report.push_identity(IdentityInstance::new(
                "conjugate-pairing",
                &params,
                conjugate_pairing_with(d, j, i),
                delta(i, j),
            ));
            report.push_identity(IdentityInstance::new(
                "coefficient-minor",
                &params,
                closed_coefficient(shape, i, j),
                minor_coefficient(d, i, j).expect("indices checked"),
            ));
        }
    }
    if shape.is_self_conjugate() {
        let g = basis_gram_with(d);
        for a in 1..=n {
            for b in 1..=n {
                report.push_identity(IdentityInstance::new(
                    "orthonormality",
                    &[("a", a as i64), ("b", b as i64)],
                    g.get(a - 1, b - 1).clone(),
                    delta(a, b),
                ));
            }
        }
    } else {
        report
            .skipped
            .push("orthonormality: shape is not self-conjugate".to_string());
    }
    for k in 1..=n {
        report.push_identity(IdentityInstance::new(
            "gram-determinant",
            &[("k", k as i64)],
            trailing_minor(d, k).determinant(),
            BigInt::one(),
        ));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn gram_determinants() {
        let shape = p(&[5, 4, 3, 3]);
        assert_eq!(gram_determinant(&shape, 1).unwrap(), int(1));
        assert_eq!(gram_determinant(&shape, 3).unwrap(), int(1));
        assert_eq!(gram_determinant(&p(&[4, 4, 4, 2, 1]), 1).unwrap(), int(1));
        assert!(gram_determinant(&shape, 4).is_err());
        assert!(gram_determinant(&shape, 0).is_err());
        assert!(gram_determinant(&Partition::empty(), 1).is_err());
    }

    #[test]
    fn coefficients() {
        let shape = p(&[5, 4, 3, 3]);
        assert_eq!(basis_coefficient(&shape, 2, 1).unwrap(), int(3));
        assert_eq!(basis_coefficient(&shape, 2, 2).unwrap(), int(1));
        assert_eq!(
            basis_coefficient(&p(&[4, 4, 4, 2, 1]), 3, 1).unwrap(),
            int(3)
        );
        assert!(basis_coefficient(&shape, 1, 2).is_err());
        assert!(basis_coefficient(&shape, 4, 1).is_err());
    }

    #[test]
    fn coefficients_from_minors() {
        let shape = p(&[5, 4, 3, 3]);
        assert_eq!(basis_coefficient_minor(&shape, 2, 1).unwrap(), int(3));
        assert_eq!(basis_coefficient_minor(&shape, 3, 3).unwrap(), int(1));
        assert_eq!(
            basis_coefficient_minor(&p(&[4, 4, 4, 2, 1]), 3, 1).unwrap(),
            int(3)
        );
        let sel = cofactor_selection(&shape, 2, 1).unwrap().unwrap();
        assert_eq!((sel.rows(), sel.cols()), (&[1, 3][..], &[2, 3][..]));
        assert!(cofactor_selection(&shape, 3, 3).unwrap().is_none());
    }

    #[test]
    fn cofactor_system_counts() {
        let shape = p(&[5, 4, 3, 3]);
        assert_eq!(
            cofactor_systems(&shape, 2, 1, 1_000_000).unwrap(),
            (true, 3)
        );
        assert_eq!(
            cofactor_systems(&shape, 3, 1, 1_000_000).unwrap(),
            (true, 1)
        );
    }

    #[test]
    fn expansions() {
        let shape = p(&[5, 4, 3, 3]);
        let y1 = basis_expansion(&shape, 1).unwrap();
        assert_eq!(y1.coefficients, vec![int(1), int(-3), int(1)]);
        assert_eq!(y1.to_string(), "y_1 = x_1 - 3*x_2 + x_3");
        assert_eq!(basis_expansion(&shape, 3).unwrap().to_string(), "y_3 = x_3");
        assert_eq!(
            basis_expansion(&p(&[3, 2, 1]), 1).unwrap().to_string(),
            "y_1 = x_1 - x_2"
        );
        assert!(basis_expansion(&shape, 4).is_err());
        assert_eq!(y1.coefficient(5), BigInt::zero());
    }

    #[test]
    fn display_signs() {
        let e = BasisExpansion {
            j: 2,
            n: 4,
            coefficients: vec![int(-2), int(0), int(5)],
        };
        assert_eq!(e.to_string(), "y_2 = -2*x_2 + 5*x_4");
    }

    #[test]
    fn pairing_examples() {
        let shape = p(&[5, 4, 3, 3]);
        assert_eq!(pairing(&shape, 1, 1).unwrap(), int(1));
        assert_eq!(pairing(&shape, 1, 2).unwrap(), int(0));
        assert_eq!(pairing(&shape, 2, 1).unwrap(), int(3));
        assert!(pairing(&shape, 4, 1).is_err());
        assert_eq!(conjugate_pairing(&shape, 1, 1).unwrap(), int(1));
        assert_eq!(conjugate_pairing(&shape, 1, 3).unwrap(), int(0));
    }

    #[test]
    fn identity_reports() {
        let r = verify_identities(&p(&[5, 4, 3, 3]));
        assert!(r.pass);
        assert_eq!(r.skipped.len(), 1);
        assert!(r.checks.iter().all(|c| !matches!(c,
            crate::report::Check::Identity(inst) if inst.name == "orthonormality")));

        let r = verify_identities(&p(&[4, 3, 2, 1]));
        assert!(r.pass);
        assert!(r.skipped.is_empty());
        assert_eq!(
            basis_gram_matrix(&p(&[4, 3, 2, 1])),
            ExactMatrix::identity(2)
        );

        let r = verify_identities(&Partition::empty());
        assert!(r.pass && r.checks.is_empty());
    }
}
