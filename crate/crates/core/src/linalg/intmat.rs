//! Fraction-free (Bareiss) elimination on integer matrices.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Determinant by Bareiss elimination.
pub fn det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = false;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Solve `a x = b` for square nonsingular `a`. Returns integer numerators
/// and a common positive denominator, or `None` if `a` is singular.
pub fn solve(mut a: Vec<Vec<BigInt>>, b: Vec<BigInt>) -> Option<(Vec<BigInt>, BigInt)> {
    let n = a.len();
    for (row, rhs) in a.iter_mut().zip(b) {
        row.push(rhs);
    }
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            let r = (k + 1..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(k, r);
        }
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..=n {
                if j == k {
                    continue;
                }
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    // now a is diagonal with every diagonal entry equal to det (up to the
    // row swaps, which Gauss-Jordan Bareiss keeps consistent)
    let mut den = a[n - 1][n - 1].clone();
    let mut x: Vec<BigInt> = (0..n).map(|i| a[i][n].clone()).collect();
    if den.is_negative() {
        den = -den;
        for v in x.iter_mut() {
            *v = -std::mem::take(v);
        }
    }
    Some((x, den))
}
