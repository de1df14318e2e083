use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::integer::lcm_all;
use crate::field::{Field, Poly, Rationals, QQ};

use super::matrix::Matrix;

/// `det(xI - m)` via reduction to upper Hessenberg form.
pub fn hessenberg_char_poly<F: Field>(m: &Matrix<F>) -> Poly<F> {
    let f = m.field().clone();
    let n = m.rows();
    let mut h = m.clone();
    for c in 1..n.saturating_sub(1) {
        let Some(p) = (c..n).find(|&i| !f.is_zero(h.get(i, c - 1))) else {
            continue;
        };
        if p != c {
            h.swap_rows(p, c);
            for i in 0..n {
                let a = h.get(i, p).clone();
                let b = h.get(i, c).clone();
                h.set(i, p, b);
                h.set(i, c, a);
            }
        }
        let inv = f.inv(h.get(c, c - 1)).unwrap();
        for j in c + 1..n {
            if f.is_zero(h.get(j, c - 1)) {
                continue;
            }
            let u = f.mul(h.get(j, c - 1), &inv);
            for k in 0..n {
                let v = f.sub(h.get(j, k), &f.mul(&u, h.get(c, k)));
                h.set(j, k, v);
            }
            for k in 0..n {
                let v = f.add(h.get(k, c), &f.mul(&u, h.get(k, j)));
                h.set(k, c, v);
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_i t_i h_{k-i,k} p_{k-i-1}
    let x = Poly::x(f.clone());
    let mut ps: Vec<Poly<F>> = vec![Poly::one(f.clone())];
    for k in 0..n {
        let mut pk = x.sub(&Poly::constant(f.clone(), h.get(k, k).clone())).mul(&ps[k]);
        let mut t = f.one();
        for i in 1..=k {
            t = f.mul(&t, h.get(k - i + 1, k - i));
            if f.is_zero(&t) {
                break;
            }
            let c = f.mul(&t, h.get(k - i, k));
            pk = pk.sub(&ps[k - i].scale(&c));
        }
        ps.push(pk);
    }
    ps.pop().unwrap()
}

/// Division-free Berkowitz algorithm over the integers; coefficients of
/// `det(xI - a)` from the leading one down.
pub fn berkowitz(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut vect = vec![BigInt::one()];
    for r in 0..n {
        // column of the Toeplitz matrix: 1, -a_rr, -R C, -R A C, ...
        let mut col = Vec::with_capacity(r + 2);
        col.push(BigInt::one());
        col.push(-a[r][r].clone());
        let mut v: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let rc = (0..r).fold(BigInt::zero(), |acc, j| acc + &a[r][j] * &v[j]);
            col.push(-rc);
            v = (0..r)
                .map(|i| (0..r).fold(BigInt::zero(), |acc, j| acc + &a[i][j] * &v[j]))
                .collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, out) in next.iter_mut().enumerate() {
            for (j, vj) in vect.iter().enumerate() {
                if i >= j {
                    *out += &col[i - j] * vj;
                }
            }
        }
        vect = next;
    }
    vect
}

/// Characteristic polynomial of a rational matrix, computed fraction-free.
pub fn rational_char_poly(m: &Matrix<Rationals>) -> Poly<Rationals> {
    let n = m.rows();
    let d = lcm_all(m.flat().iter().map(|q| q.denom()));
    let a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| (m.get(i, j) * BigRational::from_integer(d.clone())).to_integer()).collect())
        .collect();
    // char(dA)(x) = d^n char(A)(x/d)
    let c = berkowitz(&a);
    let mut coeffs = vec![BigRational::zero(); n + 1];
    let mut scale = BigInt::one();
    for k in 0..=n {
        // c[k] multiplies x^(n-k)
        coeffs[n - k] = BigRational::new(c[k].clone(), scale.clone());
        scale *= &d;
    }
    Poly::new(QQ, coeffs)
}
