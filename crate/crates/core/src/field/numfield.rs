use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::rational::{Rationals, QQ};
use super::traits::Field;
use crate::error::Result;
use crate::linalg::intmat;

/// An absolute number field `Q[x]/(m)` with `m` monic, integral and
/// irreducible. The generator is therefore an algebraic integer.
///
/// `Q` itself is the degree-one field with `m = x`.
#[derive(Clone)]
pub struct NumberField(Arc<NfData>);

struct NfData {
    modulus: Vec<BigInt>,
    degree: usize,
}

/// Element of a number field: `(num[0] + num[1]*a + ... ) / den` with
/// `den > 0` and `gcd(num, den) = 1`. Zero is `([0..], 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NfElem {
    pub(crate) num: Vec<BigInt>,
    pub(crate) den: BigInt,
}

impl NfElem {
    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }
}

impl NumberField {
    /// Field defined by a monic integer polynomial, lowest degree first.
    /// Irreducibility is the caller's responsibility.
    pub fn new_monic(modulus: Vec<BigInt>) -> Self {
        assert!(modulus.len() >= 2, "defining polynomial must have positive degree");
        assert!(modulus.last().unwrap().is_one(), "defining polynomial must be monic");
        let degree = modulus.len() - 1;
        NumberField(Arc::new(NfData { modulus, degree }))
    }

    pub fn from_i64(modulus: &[i64]) -> Self {
        Self::new_monic(modulus.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Field generated by a root of an irreducible rational polynomial.
    /// Returns the field and the element `s` with `s * (new generator)` equal
    /// to a root of `p`; the new generator is a rescaled root so that its
    /// minimal polynomial is monic and integral.
    pub fn from_rational_poly(p: &Poly<Rationals>) -> (Self, BigRational) {
        let (modulus, scale) = monic_integral(p);
        (Self::new_monic(modulus), BigRational::one() / BigRational::from_integer(scale))
    }

    pub fn rationals() -> Self {
        QQ.number_field()
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.0.modulus
    }

    pub fn modulus_poly(&self) -> Poly<Rationals> {
        super::rational::integer_poly_to_rational(&self.0.modulus)
    }

    pub fn is_rational_field(&self) -> bool {
        self.0.degree == 1
    }

    pub fn generator(&self) -> NfElem {
        let d = self.0.degree;
        if d == 1 {
            // m = x + m0, the root is -m0
            return self.from_bigint(&-self.0.modulus[0].clone());
        }
        let mut num = vec![BigInt::zero(); d];
        num[1] = BigInt::one();
        NfElem { num, den: BigInt::one() }
    }

    pub fn elem(&self, num: Vec<BigInt>, den: BigInt) -> NfElem {
        assert_eq!(num.len(), self.0.degree);
        assert!(!den.is_zero());
        normalize(num, den)
    }

    fn reduce(&self, mut prod: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.0.degree;
        let m = &self.0.modulus;
        if prod.len() > d {
            for k in (d..prod.len()).rev() {
                if prod[k].is_zero() {
                    continue;
                }
                let c = std::mem::take(&mut prod[k]);
                for i in 0..d {
                    if !m[i].is_zero() {
                        prod[k - d + i] -= &c * &m[i];
                    }
                }
            }
            prod.truncate(d);
        }
        prod.resize(d, BigInt::zero());
        prod
    }

    /// Integer matrix of multiplication by `num` in the power basis
    /// (column `j` holds `num * a^j`).
    fn int_mul_matrix(&self, num: &[BigInt]) -> Vec<Vec<BigInt>> {
        let d = self.0.degree;
        let mut cols = Vec::with_capacity(d);
        let mut cur = num.to_vec();
        for _ in 0..d {
            cols.push(cur.clone());
            let mut shifted = vec![BigInt::zero()];
            shifted.extend(cur);
            cur = self.reduce(shifted);
        }
        (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Rational matrix of multiplication by `a`.
    pub fn mul_matrix(&self, a: &NfElem) -> Vec<Vec<BigRational>> {
        self.int_mul_matrix(&a.num)
            .into_iter()
            .map(|row| row.into_iter().map(|x| BigRational::new(x, a.den.clone())).collect())
            .collect()
    }

    pub fn norm(&self, a: &NfElem) -> BigRational {
        let det = intmat::det(self.int_mul_matrix(&a.num));
        BigRational::new(det, num_traits::pow(a.den.clone(), self.0.degree))
    }

    pub fn trace(&self, a: &NfElem) -> BigRational {
        let m = self.int_mul_matrix(&a.num);
        let t = (0..self.0.degree).fold(BigInt::zero(), |acc, i| acc + &m[i][i]);
        BigRational::new(t, a.den.clone())
    }

    /// Minimal polynomial over `Q`, monic.
    pub fn min_poly(&self, a: &NfElem) -> Poly<Rationals> {
        let d = self.0.degree;
        let mut deps = crate::linalg::DependencyFinder::new(QQ, d);
        let mut cur = self.one();
        for k in 0..=d {
            if let Some(comb) = deps.add(self.coords(&cur)) {
                let mut coeffs: Vec<BigRational> = comb.into_iter().map(|c| -c).collect();
                coeffs.push(BigRational::one());
                return Poly::new(QQ, coeffs);
            }
            debug_assert!(k < d);
            cur = self.mul(&cur, a);
        }
        unreachable!("an element of a degree-d field has a minimal polynomial of degree <= d")
    }

    pub fn is_integral(&self, a: &NfElem) -> bool {
        a.den.is_one()
            || self.min_poly(a).coeffs().iter().all(|c| c.is_integer())
    }

    /// Value of a rational polynomial at `a`.
    pub fn eval_rational_poly(&self, p: &Poly<Rationals>, a: &NfElem) -> NfElem {
        p.coeffs()
            .iter()
            .rev()
            .fold(self.zero(), |acc, c| self.add(&self.mul(&acc, a), &self.from_rational(c)))
    }

    /// Image of `x` in `target` under the embedding that sends this field's
    /// generator to `gen_image`.
    pub fn embed(&self, x: &NfElem, target: &NumberField, gen_image: &NfElem) -> NfElem {
        let mut acc = target.zero();
        for c in x.num.iter().rev() {
            acc = target.mul(&acc, gen_image);
            if !c.is_zero() {
                acc = target.add(&acc, &target.from_bigint(c));
            }
        }
        if x.den.is_one() {
            acc
        } else {
            target.mul(&acc, &target.from_rational(&BigRational::new(BigInt::one(), x.den.clone())))
        }
    }

    /// Polynomial representative `sum num[i] x^i / den` as a rational
    /// polynomial.
    pub fn as_poly(&self, a: &NfElem) -> Poly<Rationals> {
        Poly::new(QQ, self.coords(a))
    }

    pub fn same(&self, other: &NumberField) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.modulus == other.0.modulus
    }
}

fn normalize(mut num: Vec<BigInt>, mut den: BigInt) -> NfElem {
    if den.is_negative() {
        den = -den;
        for c in num.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
    if num.iter().all(|c| c.is_zero()) {
        return NfElem { num, den: BigInt::one() };
    }
    if !den.is_one() {
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                *c /= &g;
            }
            den /= &g;
        }
    }
    NfElem { num, den }
}

/// Monic integral polynomial for `s * root` where `root` is a root of `p`,
/// together with the integer `s > 0`.
pub fn monic_integral(p: &Poly<Rationals>) -> (Vec<BigInt>, BigInt) {
    let p = p.monic();
    let n = p.degree().expect("zero polynomial has no roots");
    let ok = |s: &BigInt| {
        p.coeffs().iter().enumerate().take(n).all(|(i, c)| {
            (num_traits::pow(s.clone(), n - i) % c.denom()).is_zero()
        })
    };
    let mut s = super::integer::lcm_all(p.coeffs().iter().map(|c| c.denom()));
    // strip prime factors of s that are not needed
    let mut q = BigInt::from(2);
    let mut rest = s.clone();
    while &q * &q <= rest && q < BigInt::from(1_000_000) {
        if (&rest % &q).is_zero() {
            while (&rest % &q).is_zero() {
                rest /= &q;
            }
            while (&s % &q).is_zero() && ok(&(&s / &q)) {
                s /= &q;
            }
        }
        q += 1;
    }
    if rest > BigInt::one() && (&s % &rest).is_zero() && ok(&(&s / &rest)) {
        s /= &rest;
    }
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let f = c * BigRational::from_integer(num_traits::pow(s.clone(), n - i));
            debug_assert!(f.is_integer());
            f.to_integer()
        })
        .collect();
    (coeffs, s)
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", self.modulus_poly())
    }
}

impl Field for NumberField {
    type Elem = NfElem;

    fn zero(&self) -> NfElem {
        NfElem { num: vec![BigInt::zero(); self.0.degree], den: BigInt::one() }
    }

    fn one(&self) -> NfElem {
        self.from_bigint(&BigInt::one())
    }

    fn is_zero(&self, a: &NfElem) -> bool {
        a.num.iter().all(|c| c.is_zero())
    }

    fn is_one(&self, a: &NfElem) -> bool {
        a.den.is_one() && a.num[0].is_one() && a.num[1..].iter().all(|c| c.is_zero())
    }

    fn add(&self, a: &NfElem, b: &NfElem) -> NfElem {
        if a.den == b.den {
            let num = a.num.iter().zip(&b.num).map(|(x, y)| x + y).collect();
            return normalize(num, a.den.clone());
        }
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| x * &b.den + y * &a.den)
            .collect();
        normalize(num, &a.den * &b.den)
    }

    fn sub(&self, a: &NfElem, b: &NfElem) -> NfElem {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &NfElem) -> NfElem {
        NfElem { num: a.num.iter().map(|x| -x).collect(), den: a.den.clone() }
    }

    fn mul(&self, a: &NfElem, b: &NfElem) -> NfElem {
        let d = self.0.degree;
        if self.is_zero(a) || self.is_zero(b) {
            return self.zero();
        }
        if d == 1 {
            return normalize(vec![&a.num[0] * &b.num[0]], &a.den * &b.den);
        }
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        normalize(self.reduce(prod), &a.den * &b.den)
    }

    fn inv(&self, a: &NfElem) -> Option<NfElem> {
        if self.is_zero(a) {
            return None;
        }
        let d = self.0.degree;
        if d == 1 {
            return Some(normalize(vec![a.den.clone()], a.num[0].clone()));
        }
        let m = self.int_mul_matrix(&a.num);
        let mut rhs = vec![BigInt::zero(); d];
        rhs[0] = BigInt::one();
        let (sol, den) = intmat::solve(m, rhs).expect("nonzero field element is invertible");
        // (num/den_a)^{-1} = den_a * sol / den
        let num = sol.into_iter().map(|x| x * &a.den).collect();
        Some(normalize(num, den))
    }

    fn from_rational(&self, q: &BigRational) -> NfElem {
        let mut num = vec![BigInt::zero(); self.0.degree];
        num[0] = q.numer().clone();
        normalize(num, q.denom().clone())
    }

    fn degree(&self) -> usize {
        self.0.degree
    }

    fn coords(&self, a: &NfElem) -> Vec<BigRational> {
        a.num.iter().map(|x| BigRational::new(x.clone(), a.den.clone())).collect()
    }

    fn from_coords(&self, c: &[BigRational]) -> NfElem {
        assert_eq!(c.len(), self.0.degree, "coordinate vector has the wrong length");
        let (num, den) = super::integer::clear_denominators(c);
        normalize(num, den)
    }

    fn as_rational(&self, a: &NfElem) -> Option<BigRational> {
        a.num[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| BigRational::new(a.num[0].clone(), a.den.clone()))
    }

    fn number_field(&self) -> NumberField {
        self.clone()
    }

    fn format_elem(&self, a: &NfElem) -> String {
        if let Some(q) = self.as_rational(a) {
            return q.to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in a.num.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let q = BigRational::new(c.clone(), a.den.clone());
            terms.push(match i {
                0 => q.to_string(),
                1 => format!("{}*a", q),
                _ => format!("{}*a^{}", q, i),
            });
        }
        terms.join(" + ")
    }

    fn factor_squarefree(&self, p: &Poly<Self>) -> Result<Vec<Poly<Self>>> {
        super::trager::factor_squarefree(self, p)
    }

    fn to_nf(&self, a: &NfElem) -> NfElem {
        a.clone()
    }
}
