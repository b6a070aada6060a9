//! Binomials, Catalan numbers and the special shapes with closed-form arrays.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gram::{basis_coefficient, basis_expansion};
use crate::partition::Partition;
use crate::patharray::path_count_array;
use crate::report::{IdentityInstance, VerificationReport};

/// `C(n, k)` for natural `n`, zero when `k > n`.
pub fn choose(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for step in 0..k {
        acc *= n - step;
        acc /= step + 1;
    }
    acc
}

/// `C(a, b)`, zero when `b < 0` or `b > a`. Negative `a` is rejected.
pub fn binomial(a: i64, b: i64) -> Result<BigInt> {
    if a < 0 {
        return Err(Error::NegativeUpperIndex(a));
    }
    if b < 0 || b > a {
        return Ok(BigInt::zero());
    }
    Ok(choose(a as usize, b as usize))
}

/// Binomial for the identity sums, where the upper index is known to be
/// non-negative.
fn binom(a: i64, b: i64) -> BigInt {
    binomial(a, b).expect("upper index is non-negative")
}

pub fn catalan(m: usize) -> BigInt {
    choose(2 * m, m) / (m + 1)
}

fn sign(k: i64) -> BigInt {
    if k.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `Σ_k (−1)^{r−k} C(r,k) C(s+k, n) = C(s, n−r)`.
pub fn knuth_identity_check(r: usize, s: usize, n: usize) -> IdentityInstance {
    let (r, s, n) = (r as i64, s as i64, n as i64);
    let lhs = (0..=r)
        .map(|k| sign(r - k) * binom(r, k) * binom(s + k, n))
        .sum();
    IdentityInstance::new(
        "knuth",
        &[("r", r), ("s", s), ("n", n)],
        lhs,
        binom(s, n - r),
    )
}

/// The square-shape identity after reflecting indices:
/// `Σ_k (−1)^{k−j} C(i+k, i) C(j, j−k) = C(i, i−j)`.
pub fn reflected_square_identity_check(i: usize, j: usize) -> IdentityInstance {
    let (i, j) = (i as i64, j as i64);
    let lhs = (0..=j)
        .map(|k| sign(k - j) * binom(i + k, i) * binom(j, j - k))
        .sum();
    IdentityInstance::new(
        "reflected-square",
        &[("i", i), ("j", j)],
        lhs,
        binom(i, i - j),
    )
}

/// Staircase `λ = (2n+1, 2n, …, 1)`: Durfee entries are Catalan numbers
/// `D_ij = C_{2n+2−i−j}`, and under `i' = n+1−i` the basis reads
/// `y_{j'} = Σ_{i' ≤ j'} (−1)^{j'−i'} C(i'+j', j'−i') x_{i'}`.
pub fn staircase_check(n: usize) -> VerificationReport {
    let shape = Partition::staircase(2 * n + 1);
    let d = path_count_array(&shape);
    let size = shape.durfee();
    debug_assert_eq!(size, n + 1);
    let mut report = VerificationReport::new(Some("staircase"), shape.clone());
    for i in 1..=size {
        for j in 1..=size {
            report.push_identity(IdentityInstance::new(
                "catalan-entry",
                &[("i", i as i64), ("j", j as i64)],
                d.at(i, j).clone(),
                catalan(2 * n + 2 - i - j),
            ));
        }
    }
    for j in 1..=size {
        let y = basis_expansion(&shape, j).expect("j within the Durfee square");
        let jr = (n + 1 - j) as i64;
        for i in j..=size {
            let ir = (n + 1 - i) as i64;
            report.push_identity(IdentityInstance::new(
                "reflected-basis",
                &[("i", i as i64), ("j", j as i64)],
                y.coefficient(i),
                sign(jr - ir) * binom(ir + jr, jr - ir),
            ));
        }
    }
    report
}

/// Square `λ = (nⁿ)`: `D_ij = C(2n−i−j, n−i)`, `c_ij = C(n−j, i−j)`, and the
/// reflected identity over `0 ≤ i, j ≤ n`.
pub fn square_check(n: usize) -> VerificationReport {
    let shape = Partition::rectangle(n, n);
    let d = path_count_array(&shape);
    let mut report = VerificationReport::new(Some("square"), shape.clone());
    for i in 1..=n {
        for j in 1..=n {
            report.push_identity(IdentityInstance::new(
                "square-entry",
                &[("i", i as i64), ("j", j as i64)],
                d.at(i, j).clone(),
                choose(2 * n - i - j, n - i),
            ));
        }
    }
    for j in 1..=n {
        for i in j..=n {
            report.push_identity(IdentityInstance::new(
                "square-coefficient",
                &[("i", i as i64), ("j", j as i64)],
                basis_coefficient(&shape, i, j).expect("indices within the square"),
                choose(n - j, i - j),
            ));
        }
    }
    for i in 0..=n {
        for j in 0..=n {
            report.push_identity(reflected_square_identity_check(i, j));
        }
    }
    report
}

/// Knuth's summation over `0 ≤ r, s, n ≤ max`.
pub fn knuth_sweep(max: usize) -> VerificationReport {
    let mut report = VerificationReport::new(Some("knuth"), Partition::empty());
    for r in 0..=max {
        for s in 0..=max {
            for n in 0..=max {
                report.push_identity(knuth_identity_check(r, s, n));
            }
        }
    }
    report
}

/// `C_m = C(2m, m) − C(2m, m+1)` for `m ≤ max`.
pub fn catalan_sweep(max: usize) -> VerificationReport {
    let mut report = VerificationReport::new(Some("catalan"), Partition::empty());
    for m in 0..=max {
        report.push_identity(IdentityInstance::new(
            "catalan-difference",
            &[("m", m as i64)],
            catalan(m),
            choose(2 * m, m) - choose(2 * m, m + 1),
        ));
    }
    report
}
