//! Splitting fields as absolute number fields, built one root at a time.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::embedding::Embedding;
use super::integer::lcm_all;
use super::numfield::{monic_integral, NfElem, NumberField};
use super::poly::Poly;
use super::rational::integer_poly_to_rational;
use super::trager::squarefree_norm;
use super::traits::Field;
use crate::error::{Error, Result};
use crate::linalg::intmat;

/// A number field `L` containing all roots of a polynomial over `F`.
#[derive(Clone, Debug)]
pub struct SplittingField<F: Field> {
    pub embedding: Embedding<F>,
    /// Distinct roots in `L`.
    pub roots: Vec<NfElem>,
}

impl<F: Field> SplittingField<F> {
    pub fn field(&self) -> &NumberField {
        self.embedding.target()
    }

    pub fn degree(&self) -> usize {
        self.field().degree()
    }
}

/// Splitting field of `p` over `base`, failing once the absolute degree
/// would exceed `cap`.
pub fn splitting_field<F: Field>(base: &F, p: &Poly<F>, cap: usize) -> Result<SplittingField<F>> {
    split_over(Embedding::identity(base.clone()), p, cap)
}

/// Extends the target of `emb` until `p` (over the base of `emb`) splits.
pub fn split_over<F: Field>(emb: Embedding<F>, p: &Poly<F>, cap: usize) -> Result<SplittingField<F>> {
    assert!(!p.is_zero(), "zero polynomial has no splitting field");
    let mut emb = emb;
    let l = emb.target().clone();
    let mut pending = vec![p.squarefree_part().map_field(&l, |c| emb.map(c))];
    let mut roots: Vec<NfElem> = Vec::new();
    loop {
        let l = emb.target().clone();
        let mut open = Vec::new();
        for q in &pending {
            if q.degree().unwrap_or(0) == 0 {
                continue;
            }
            for f in l.factor_squarefree(q)? {
                if f.degree() == Some(1) {
                    roots.push(l.neg(&f.coeff(0)));
                } else {
                    open.push(f);
                }
            }
        }
        let Some(f) = open.first() else {
            return Ok(SplittingField { embedding: emb, roots });
        };
        let (step, beta) = adjoin_root(&l, f, cap)?;
        let l2 = step.target().clone();
        roots = roots.iter().map(|r| step.map(r)).collect();
        roots.push(beta.clone());
        // the chosen factor loses the adjoined root
        let lin = Poly::linear(l2.clone(), &beta);
        pending = open
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let g2 = g.map_field(&l2, |c| step.map(c));
                if i == 0 {
                    g2.exact_div(&lin)
                } else {
                    g2
                }
            })
            .collect();
        emb = emb.then(&step);
    }
}

/// Adjoins a root of the irreducible `f` over `K`; returns the embedding
/// of `K` into the new field and the image of the root.
pub fn adjoin_root(k: &NumberField, f: &Poly<NumberField>, cap: usize) -> Result<(Embedding<NumberField>, NfElem)> {
    let d = k.degree();
    let e = f.degree().expect("zero polynomial");
    let total = d * e;
    if total > cap {
        return Err(Error::FieldDegreeLimit { degree: total, cap });
    }
    let f = f.monic();
    // gamma = beta + c theta has minimal polynomial `norm`
    let (c, _, norm) = squarefree_norm(k, &f);
    debug_assert_eq!(norm.len(), total + 1);
    let (mint, s) = monic_integral(&integer_poly_to_rational(&norm));
    let l = NumberField::new_monic(mint);
    let theta = k.generator();
    let c_theta = k.mul(&k.from_int(c), &theta);
    // powers of gamma in K[y]/f, as rational coordinates j * d + a
    let gamma = Poly::new(k.clone(), vec![c_theta, k.one()]);
    let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(total);
    let mut pw = Poly::one(k.clone());
    for _ in 0..total {
        let mut v = Vec::with_capacity(total);
        for j in 0..e {
            v.extend(k.coords(&pw.coeff(j)));
        }
        cols.push(v);
        pw = pw.mul(&gamma).rem(&f);
    }
    let mut rhs = vec![BigRational::zero(); total];
    for (a, x) in k.coords(&theta).into_iter().enumerate() {
        rhs[a] = x;
    }
    let x = solve_columns(&cols, &rhs).ok_or_else(|| {
        Error::InvariantViolation("powers of the primitive element are dependent".into())
    })?;
    // theta = sum x_i gamma^i with gamma = eta / s
    let eta = l.generator();
    let s_inv = BigRational::new(BigInt::one(), s);
    let mut theta_l = l.zero();
    let mut g_pow = l.one();
    let gamma_l = l.mul(&eta, &l.from_rational(&s_inv));
    for xi in &x {
        if !xi.is_zero() {
            theta_l = l.add(&theta_l, &l.mul(&g_pow, &l.from_rational(xi)));
        }
        g_pow = l.mul(&g_pow, &gamma_l);
    }
    let beta = l.sub(&gamma_l, &l.mul(&l.from_int(c), &theta_l));
    Ok((Embedding::new(k.clone(), l, theta_l), beta))
}

/// Solves `sum x_i cols[i] = rhs` fraction-free.
fn solve_columns(cols: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = rhs.len();
    let scales: Vec<BigInt> = cols.iter().map(|c| lcm_all(c.iter().map(|q| q.denom()))).collect();
    let a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..cols.len())
                .map(|j| (&cols[j][i] * BigRational::from_integer(scales[j].clone())).to_integer())
                .collect()
        })
        .collect();
    let db = lcm_all(rhs.iter().map(|q| q.denom()));
    let b: Vec<BigInt> = rhs
        .iter()
        .map(|q| (q * BigRational::from_integer(db.clone())).to_integer())
        .collect();
    let (x, den) = intmat::solve(a, b)?;
    Some(
        x.into_iter()
            .zip(&scales)
            .map(|(xi, sc)| BigRational::new(xi * sc, &den * &db))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::QQ;

    fn check_roots<F: Field>(p: &Poly<F>, sf: &SplittingField<F>) {
        let l = sf.field();
        let pl = p.map_field(l, |c| sf.embedding.map(c));
        for r in &sf.roots {
            assert!(l.is_zero(&pl.eval(r)));
        }
        assert_eq!(sf.roots.len(), p.squarefree_part().degree().unwrap());
    }

    #[test]
    fn cubic_has_degree_six() {
        let p = Poly::from_ints(QQ, &[-2, 0, 0, 1]);
        let sf = splitting_field(&QQ, &p, 64).unwrap();
        assert_eq!(sf.degree(), 6);
        check_roots(&p, &sf);
    }

    #[test]
    fn biquadratic_and_cyclotomic() {
        let p = Poly::from_ints(QQ, &[-2, 0, 1]).mul(&Poly::from_ints(QQ, &[-3, 0, 1]));
        let sf = splitting_field(&QQ, &p, 64).unwrap();
        assert_eq!(sf.degree(), 4);
        check_roots(&p, &sf);
        let c5 = Poly::from_ints(QQ, &[1, 1, 1, 1, 1]);
        let sf = splitting_field(&QQ, &c5, 64).unwrap();
        assert_eq!(sf.degree(), 4);
        check_roots(&c5, &sf);
    }

    #[test]
    fn rational_roots_stay_in_q() {
        let p = Poly::from_ints(QQ, &[2, -3, 1]).mul(&Poly::from_ints(QQ, &[2, -3, 1]));
        let sf = splitting_field(&QQ, &p, 64).unwrap();
        assert_eq!(sf.degree(), 1);
        check_roots(&p, &sf);
    }

    #[test]
    fn cap_is_enforced() {
        let p = Poly::from_ints(QQ, &[-2, 0, 0, 1]);
        assert!(matches!(splitting_field(&QQ, &p, 4), Err(Error::FieldDegreeLimit { .. })));
    }

    #[test]
    fn over_a_number_field_base() {
        let k = NumberField::from_i64(&[1, 0, 1]);
        let p = Poly::from_ints(k.clone(), &[-2, 0, 0, 0, 1]);
        let sf = splitting_field(&k, &p, 64).unwrap();
        assert_eq!(sf.degree(), 8);
        check_roots(&p, &sf);
        // the base generator still squares to -1
        let i = sf.embedding.map(&k.generator());
        let l = sf.field();
        assert_eq!(l.mul(&i, &i), l.from_int(-1));
    }
}
