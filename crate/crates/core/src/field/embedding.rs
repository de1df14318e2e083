use std::sync::{Arc, OnceLock};

use num_rational::BigRational;

use super::numfield::{NfElem, NumberField};
use super::rational::Rationals;
use super::traits::Field;
use crate::linalg::Matrix;

/// An embedding of a base field `F` into an absolute number field `L`,
/// given by the image of the generator of `F`.
#[derive(Clone)]
pub struct Embedding<F: Field> {
    base: F,
    target: NumberField,
    gen_image: NfElem,
    relative: Arc<OnceLock<Matrix<Rationals>>>,
}

impl<F: Field> std::fmt::Debug for Embedding<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Embedding({:?} -> {:?})", self.base, self.target)
    }
}

impl Embedding<Rationals> {
    pub fn rational(target: NumberField) -> Self {
        let z = target.zero();
        Embedding::new(Rationals, target, z)
    }
}

impl<F: Field> Embedding<F> {
    pub fn new(base: F, target: NumberField, gen_image: NfElem) -> Self {
        assert_eq!(target.degree() % base.degree(), 0, "base degree must divide target degree");
        Embedding { base, target, gen_image, relative: Arc::new(OnceLock::new()) }
    }

    /// The identity embedding of a field into its own absolute form.
    pub fn identity(base: F) -> Self {
        let nf = base.number_field();
        let g = nf.generator();
        Embedding::new(base, nf, g)
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn target(&self) -> &NumberField {
        &self.target
    }

    pub fn gen_image(&self) -> &NfElem {
        &self.gen_image
    }

    pub fn relative_degree(&self) -> usize {
        self.target.degree() / self.base.degree()
    }

    pub fn map(&self, a: &F::Elem) -> NfElem {
        let nf = self.base.number_field();
        nf.embed(&self.base.to_nf(a), &self.target, &self.gen_image)
    }

    /// Extends the target along `next`, which embeds the current target
    /// into a larger field.
    pub fn then(&self, next: &Embedding<NumberField>) -> Embedding<F> {
        let img = next.map(&self.gen_image);
        Embedding::new(self.base.clone(), next.target.clone(), img)
    }

    // Inverse of the matrix whose columns are the coordinates of
    // g^a * t^j (g the image of the base generator, t the target
    // generator), indexed by j * deg(F) + a.
    fn relative_matrix(&self) -> &Matrix<Rationals> {
        self.relative.get_or_init(|| {
            let d = self.target.degree();
            let e = self.base.degree();
            let k = d / e;
            let l = &self.target;
            let mut cols = Vec::with_capacity(d);
            let mut tj = l.one();
            let t = l.generator();
            for _ in 0..k {
                let mut ga = tj.clone();
                for _ in 0..e {
                    cols.push(l.coords(&ga));
                    ga = l.mul(&ga, &self.gen_image);
                }
                tj = l.mul(&tj, &t);
            }
            let b = Matrix::from_fn(Rationals, d, d, |i, j| cols[j][i].clone());
            b.inverse().expect("base generator and target generator do not span the target")
        })
    }

    /// Coordinates of `z` over the base field in the basis `1, t, ..., t^(k-1)`
    /// of the target generator `t`.
    pub fn relative_coords(&self, z: &NfElem) -> Vec<F::Elem> {
        let e = self.base.degree();
        let k = self.relative_degree();
        let c = self.relative_matrix().mul_vec(&self.target.coords(z));
        (0..k)
            .map(|j| {
                let block: Vec<BigRational> = c[j * e..(j + 1) * e].to_vec();
                self.base.from_coords(&block)
            })
            .collect()
    }

    /// Preimage of `z` if it lies in the base field.
    pub fn preimage(&self, z: &NfElem) -> Option<F::Elem> {
        let rel = self.relative_coords(z);
        rel[1..].iter().all(|x| self.base.is_zero(x)).then(|| rel[0].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::integer::int;

    #[test]
    fn relative_coordinates_over_subfield() {
        // L = Q(a), a^4 = 2 ; F = Q(sqrt 2) with sqrt 2 -> a^2
        let l = NumberField::from_i64(&[-2, 0, 0, 0, 1]);
        let f = NumberField::from_i64(&[-2, 0, 1]);
        let a = l.generator();
        let emb = Embedding::new(f.clone(), l.clone(), l.mul(&a, &a));
        assert_eq!(emb.relative_degree(), 2);
        // a^3 = sqrt2 * a
        let a3 = l.mul(&l.mul(&a, &a), &a);
        let rel = emb.relative_coords(&a3);
        assert!(f.is_zero(&rel[0]));
        assert_eq!(rel[1], f.generator());
        assert_eq!(emb.preimage(&l.from_int(3)), Some(f.from_int(3)));
        assert_eq!(emb.preimage(&a), None);
        let q = Embedding::rational(l.clone());
        assert_eq!(q.relative_coords(&a3), vec![int(0), int(0), int(0), int(1)]);
    }
}
