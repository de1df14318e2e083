//! Jordan–Chevalley decompositions over the base field, and the
//! logarithm of a unipotent matrix.

use crate::error::{Error, Result};
use crate::field::{Field, Poly};
use crate::linalg::Matrix;

/// `g = semisimple * unipotent` with commuting factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanPair<F: Field> {
    pub semisimple: Matrix<F>,
    pub unipotent: Matrix<F>,
}

/// The semisimple part as a polynomial in `x`, reduced modulo the minimal
/// polynomial `p`.
fn semisimple_poly<F: Field>(p: &Poly<F>) -> Poly<F> {
    let f = p.field().clone();
    let q = p.squarefree_part().monic();
    let dq = q.derivative();
    let mut s = Poly::x(f).rem(p);
    // Newton iteration for q(s) = 0 in F[t]/(p)
    loop {
        let qs = q.compose_mod(&s, p);
        if qs.is_zero() {
            return s;
        }
        let d = dq.compose_mod(&s, p).inv_mod(p).expect("derivative of the squarefree part is a unit");
        s = s.sub(&qs.mul(&d).rem(p));
    }
}

/// `x = s + n` with `s` semisimple, `n` nilpotent and `sn = ns`.
pub fn additive_jordan<F: Field>(x: &Matrix<F>) -> (Matrix<F>, Matrix<F>) {
    assert!(x.is_square(), "Jordan decomposition of a non-square matrix");
    let p = x.min_poly();
    if p.is_squarefree() {
        let zero = Matrix::zero(x.field().clone(), x.rows(), x.cols());
        return (x.clone(), zero);
    }
    let s = x.eval_poly(&semisimple_poly(&p));
    let n = x.sub(&s);
    (s, n)
}

pub fn multiplicative_jordan<F: Field>(g: &Matrix<F>) -> Result<JordanPair<F>> {
    if !g.is_invertible() {
        return Err(Error::Singular);
    }
    let p = g.min_poly();
    if p.is_squarefree() {
        return Ok(JordanPair { semisimple: g.clone(), unipotent: Matrix::identity(g.field().clone(), g.rows()) });
    }
    let sp = semisimple_poly(&p);
    let s = g.eval_poly(&sp);
    let s_inv = s.inverse().ok_or(Error::Singular)?;
    let u = s_inv.mul(g);
    debug_assert_eq!(s.mul(&u), g.clone());
    Ok(JordanPair { semisimple: s, unipotent: u })
}

pub fn is_semisimple<F: Field>(m: &Matrix<F>) -> bool {
    m.min_poly().is_squarefree()
}

pub fn is_nilpotent<F: Field>(m: &Matrix<F>) -> bool {
    m.pow(m.rows() as u64).is_zero()
}

pub fn is_unipotent<F: Field>(m: &Matrix<F>) -> bool {
    is_nilpotent(&m.sub(&Matrix::identity(m.field().clone(), m.rows())))
}

/// `log u = sum_{i >= 1} (-1)^{i-1} (u - 1)^i / i`, a finite sum.
pub fn log_unipotent<F: Field>(u: &Matrix<F>) -> Result<Matrix<F>> {
    let f = u.field().clone();
    let n = u.rows();
    let x = u.sub(&Matrix::identity(f.clone(), n));
    if !is_nilpotent(&x) {
        return Err(Error::NotUnipotent);
    }
    let mut out = Matrix::zero(f.clone(), n, n);
    let mut pw = x.clone();
    for i in 1..n.max(1) as i64 + 1 {
        if pw.is_zero() {
            break;
        }
        let c = f.div(&f.from_int(if i % 2 == 1 { 1 } else { -1 }), &f.from_int(i)).unwrap();
        out = out.add(&pw.scale(&c));
        pw = pw.mul(&x);
    }
    Ok(out)
}

/// `exp x` for nilpotent `x`.
pub fn exp_nilpotent<F: Field>(x: &Matrix<F>) -> Result<Matrix<F>> {
    if !is_nilpotent(x) {
        return Err(Error::NotUnipotent);
    }
    let f = x.field().clone();
    let n = x.rows();
    let mut out = Matrix::identity(f.clone(), n);
    let mut term = Matrix::identity(f.clone(), n);
    for k in 1..=n as i64 {
        term = term.mul(x).scale(&f.inv(&f.from_int(k)).unwrap());
        if term.is_zero() {
            break;
        }
        out = out.add(&term);
    }
    Ok(out)
}
