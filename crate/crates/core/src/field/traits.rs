use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::numfield::{NfElem, NumberField};
use super::poly::Poly;
use crate::error::Result;
use crate::linalg::Matrix;

/// An exact field of characteristic zero: `Q` or a number field.
///
/// Field values are lightweight handles (`Rationals` is zero-sized,
/// `NumberField` is reference counted) and every operation is exact.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_rational(&self, q: &BigRational) -> Self::Elem;

    /// Absolute degree over `Q`.
    fn degree(&self) -> usize;
    /// Power-basis coordinates over `Q`; length equals `degree()`.
    fn coords(&self, a: &Self::Elem) -> Vec<BigRational>;
    fn from_coords(&self, c: &[BigRational]) -> Self::Elem;
    fn as_rational(&self, a: &Self::Elem) -> Option<BigRational>;

    /// This field as an absolute number field (`Q` is the degree-one field).
    fn number_field(&self) -> NumberField;
    fn format_elem(&self, a: &Self::Elem) -> String;

    /// Irreducible monic factors of a monic squarefree polynomial.
    fn factor_squarefree(&self, p: &Poly<Self>) -> Result<Vec<Poly<Self>>>;

    /// Characteristic polynomial `det(xI - m)`.
    fn char_poly(&self, m: &Matrix<Self>) -> Poly<Self> {
        crate::linalg::charpoly::hessenberg_char_poly(m)
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.from_rational(&BigRational::from_integer(n.clone()))
    }

    fn to_nf(&self, a: &Self::Elem) -> NfElem {
        self.number_field().from_coords(&self.coords(a))
    }

    /// `a^e` for integer `e`; `None` when `a = 0` and `e < 0`.
    fn pow(&self, a: &Self::Elem, e: i64) -> Option<Self::Elem> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        Some(acc)
    }
}
