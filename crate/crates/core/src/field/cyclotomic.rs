//! Roots of unity and cyclotomic polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::rational::Rationals;
use super::traits::Field;

pub fn totient(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn mobius(mut n: u64) -> i32 {
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            out = -out;
        }
        p += 1;
    }
    if n > 1 {
        out = -out;
    }
    out
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

// exact division by a monic integer polynomial
fn int_div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].clone();
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()));
    q
}

/// The `n`-th cyclotomic polynomial, coefficients from the constant term.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    let xd1 = |d: u64| {
        let mut v = vec![BigInt::zero(); d as usize + 1];
        v[0] = -BigInt::one();
        v[d as usize] = BigInt::one();
        v
    };
    let mut num = vec![BigInt::one()];
    let mut den = vec![BigInt::one()];
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = int_mul(&num, &xd1(d)),
            -1 => den = int_mul(&den, &xd1(d)),
            _ => {}
        }
    }
    int_div_monic(&num, &den)
}

/// `n` such that the monic rational polynomial `p` equals `Phi_n`.
pub fn cyclotomic_index(p: &Poly<Rationals>) -> Option<u64> {
    let e = p.degree()? as u64;
    if e == 0 || !p.is_monic() || !p.coeffs().iter().all(|c| c.is_integer()) {
        return None;
    }
    if !p.coeffs()[0].abs().is_one() {
        return None;
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.to_integer()).collect();
    // phi(n) >= sqrt(n / 2)
    (1..=2 * e * e + 2)
        .filter(|&n| totient(n) == e)
        .find(|&n| cyclotomic_poly(n) == ints)
}

/// The order of `a` if it is a root of unity.
pub fn is_root_of_unity<F: Field>(f: &F, a: &F::Elem) -> Option<u64> {
    let nf = f.number_field();
    let m = nf.min_poly(&f.to_nf(a));
    cyclotomic_index(&m)
}

/// `(q, n)` with `q > 0` rational and `a / q` a primitive `n`-th root of
/// unity, if `a` has that form.
pub fn rational_times_root_of_unity<F: Field>(f: &F, a: &F::Elem) -> Option<(BigRational, u64)> {
    if f.is_zero(a) {
        return None;
    }
    let nf = f.number_field();
    let m = nf.min_poly(&f.to_nf(a));
    let e = m.degree()? as u32;
    let c0 = m.coeffs()[0].abs();
    let rn = c0.numer().nth_root(e);
    let rd = c0.denom().nth_root(e);
    if num_traits::pow(rn.clone(), e as usize) != *c0.numer()
        || num_traits::pow(rd.clone(), e as usize) != *c0.denom()
    {
        return None;
    }
    let q = BigRational::new(rn, rd);
    // m(q x) / q^e
    let mut scale = BigRational::one();
    let mut coeffs = Vec::with_capacity(m.coeffs().len());
    for c in m.coeffs() {
        coeffs.push(c * &scale);
        scale *= &q;
    }
    let qe = scale / &q;
    let g = Poly::new(super::rational::QQ, coeffs.into_iter().map(|c| c / &qe).collect());
    cyclotomic_index(&g).map(|n| (q, n))
}
