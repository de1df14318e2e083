use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::integer::{clear_denominators, gcd_all};
use super::numfield::NumberField;
use super::poly::Poly;
use super::traits::Field;
use super::zassenhaus;
use crate::error::Result;
use crate::linalg::Matrix;

/// The field `Q` of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

pub const QQ: Rationals = Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_rational(&self, q: &BigRational) -> BigRational {
        q.clone()
    }
    fn degree(&self) -> usize {
        1
    }
    fn coords(&self, a: &BigRational) -> Vec<BigRational> {
        vec![a.clone()]
    }
    fn from_coords(&self, c: &[BigRational]) -> BigRational {
        c[0].clone()
    }
    fn as_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }
    fn number_field(&self) -> NumberField {
        static RATIONAL_FIELD: OnceLock<NumberField> = OnceLock::new();
        RATIONAL_FIELD
            .get_or_init(|| NumberField::new_monic(vec![BigInt::zero(), BigInt::one()]))
            .clone()
    }
    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn factor_squarefree(&self, p: &Poly<Self>) -> Result<Vec<Poly<Self>>> {
        let (_, ints) = primitive_integer_poly(p);
        Ok(zassenhaus::factor_squarefree(&ints)
            .into_iter()
            .map(|f| integer_poly_to_rational(&f).monic())
            .collect())
    }

    fn char_poly(&self, m: &Matrix<Self>) -> Poly<Self> {
        crate::linalg::charpoly::rational_char_poly(m)
    }
}

/// Primitive integer polynomial proportional to `p`, with positive leading
/// coefficient, and the rational factor `p = scale * result`.
pub fn primitive_integer_poly(p: &Poly<Rationals>) -> (BigRational, Vec<BigInt>) {
    if p.is_zero() {
        return (BigRational::one(), vec![]);
    }
    let (num, den) = clear_denominators(p.coeffs());
    let mut g = gcd_all(num.iter());
    if num.last().unwrap().is_negative() {
        g = -g;
    }
    let ints: Vec<BigInt> = num.iter().map(|c| c / &g).collect();
    (BigRational::new(g, den), ints)
}

pub fn integer_poly_to_rational(p: &[BigInt]) -> Poly<Rationals> {
    Poly::new(QQ, p.iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

/// Irreducible factorization over `Q` with multiplicities; factors monic.
pub fn factor_over_q(p: &Poly<Rationals>) -> Vec<(Poly<Rationals>, usize)> {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let mut out = Vec::new();
    for (sf, mult) in p.squarefree_decomposition() {
        for f in QQ.factor_squarefree(&sf).expect("factorization over Q cannot fail") {
            out.push((f, mult));
        }
    }
    out
}
