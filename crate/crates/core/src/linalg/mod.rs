//! Dense exact linear algebra over any [`Field`].

pub mod charpoly;
pub mod intmat;
mod matrix;
mod subspace;

pub use matrix::Matrix;
pub use subspace::Subspace;

use crate::error::{Error, Result};
use crate::field::{Embedding, Field, NumberField};

/// Detects the first linear dependency in a stream of vectors and reports
/// it as a combination of the earlier vectors.
pub struct DependencyFinder<F: Field> {
    field: F,
    len: usize,
    count: usize,
    rows: Vec<(Vec<F::Elem>, usize, Vec<F::Elem>)>,
}

impl<F: Field> DependencyFinder<F> {
    pub fn new(field: F, len: usize) -> Self {
        DependencyFinder { field, len, count: 0, rows: vec![] }
    }

    /// Feeds the next vector. If it lies in the span of the previous ones,
    /// returns coefficients `c` with `v = sum c_i v_i`.
    pub fn add(&mut self, v: Vec<F::Elem>) -> Option<Vec<F::Elem>> {
        assert_eq!(v.len(), self.len);
        let f = &self.field;
        let k = self.count;
        let mut vec = v;
        let mut combo = vec![f.zero(); k + 1];
        combo[k] = f.one();
        for (row, pivot, rc) in &self.rows {
            if f.is_zero(&vec[*pivot]) {
                continue;
            }
            let c = f.div(&vec[*pivot], &row[*pivot]).unwrap();
            for (x, y) in vec.iter_mut().zip(row) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
            for (x, y) in combo.iter_mut().zip(rc) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        match vec.iter().position(|x| !f.is_zero(x)) {
            None => Some(combo[..k].iter().map(|c| f.neg(c)).collect()),
            Some(p) => {
                self.rows.push((vec, p, combo));
                self.count += 1;
                None
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Coefficients expressing `target` in terms of `vectors`, if possible.
pub fn express_in_span<F: Field>(
    field: &F,
    vectors: &[Vec<F::Elem>],
    target: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    if vectors.is_empty() {
        return target.iter().all(|x| field.is_zero(x)).then(Vec::new);
    }
    let m = Matrix::from_fn(field.clone(), target.len(), vectors.len(), |i, j| vectors[j][i].clone());
    m.solve(target)
}

/// The points of `v` with coordinates in the base field of `emb`.
///
/// Each linear constraint over the extension is split into one constraint
/// per relative coordinate; the result must have the same dimension as
/// `v`, otherwise `v` is not defined over the base field.
pub fn rational_form<F: Field>(v: &Subspace<NumberField>, emb: &Embedding<F>) -> Result<Subspace<F>> {
    let base = emb.base().clone();
    let n = v.ambient_dim();
    if v.is_zero() {
        return Ok(Subspace::zero(base, n));
    }
    let k = emb.relative_degree();
    let mut rows = Vec::new();
    for w in v.annihilator().basis() {
        let rel: Vec<Option<Vec<F::Elem>>> = w
            .iter()
            .map(|x| (!emb.target().is_zero(x)).then(|| emb.relative_coords(x)))
            .collect();
        for j in 0..k {
            let row: Vec<F::Elem> = rel
                .iter()
                .map(|r| r.as_ref().map_or_else(|| base.zero(), |c| c[j].clone()))
                .collect();
            if row.iter().any(|x| !base.is_zero(x)) {
                rows.push(row);
            }
        }
    }
    let descended = if rows.is_empty() {
        Subspace::full(base.clone(), n)
    } else {
        Matrix::from_rows(base.clone(), rows).kernel()
    };
    if descended.dim() != v.dim() {
        return Err(Error::NotDefinedOverBase { descended: descended.dim(), expected: v.dim() });
    }
    Ok(descended)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::integer::{int, rat};
    use crate::field::{QQ, Rationals};

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(QQ, 3);
        let (r, rank, _) = id.rref();
        assert_eq!((r, rank), (id.clone(), 3));
        let z = Matrix::zero(QQ, 2, 2);
        assert_eq!(z.rref().1, 0);
        let m = Matrix::from_ints(QQ, &[vec![1, 2], vec![2, 4]]);
        let (r, rank, piv) = m.rref();
        assert_eq!(r, Matrix::from_ints(QQ, &[vec![1, 2], vec![0, 0]]));
        assert_eq!((rank, piv), (1, vec![0]));
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(QQ, 3).kernel().is_zero());
        assert_eq!(Matrix::zero(QQ, 2, 2).kernel().dim(), 2);
        let k = Matrix::from_ints(QQ, &[vec![1, 1]]).kernel();
        assert_eq!(k.basis(), &[vec![int(1), int(-1)]]);
    }

    #[test]
    fn min_poly_examples() {
        use crate::field::Poly;
        assert_eq!(Matrix::identity(QQ, 3).min_poly(), Poly::from_ints(QQ, &[-1, 1]));
        let rot = Matrix::from_ints(QQ, &[vec![0, -1], vec![1, 0]]);
        assert_eq!(rot.min_poly(), Poly::from_ints(QQ, &[1, 0, 1]));
        let j = Matrix::from_ints(QQ, &[vec![2, 1], vec![0, 2]]);
        assert_eq!(j.min_poly(), Poly::from_ints(QQ, &[4, -4, 1]));
    }

    #[test]
    fn dependency_finder_reports_combination() {
        let mut d = DependencyFinder::new(QQ, 2);
        assert!(d.add(vec![int(1), int(2)]).is_none());
        assert!(d.add(vec![int(0), int(1)]).is_none());
        let c = d.add(vec![int(3), int(7)]).unwrap();
        assert_eq!(c, vec![int(3), int(1)]);
    }

    #[test]
    fn rational_form_examples() {
        let k = NumberField::from_i64(&[1, 0, 1]);
        let i = k.generator();
        let emb = Embedding::<Rationals>::rational(k.clone());
        // span of diag(i, -i) over Q(i) contains diag(1, -1)
        let v = Subspace::from_vectors(k.clone(), 4, vec![vec![i.clone(), k.zero(), k.zero(), k.neg(&i)]]);
        let r = rational_form(&v, &emb).unwrap();
        assert_eq!(r.basis(), &[vec![int(1), int(0), int(0), int(-1)]]);
        // span of a rational matrix
        let w = Subspace::from_vectors(k.clone(), 2, vec![vec![k.from_rational(&rat(1, 2)), k.one()]]);
        let r = rational_form(&w, &emb).unwrap();
        assert_eq!(r.basis(), &[vec![int(1), int(2)]]);
        // a line that is not defined over Q
        let u = Subspace::from_vectors(k.clone(), 2, vec![vec![k.one(), i]]);
        assert!(matches!(rational_form(&u, &emb), Err(Error::NotDefinedOverBase { .. })));
        let z = Subspace::zero(k, 3);
        assert!(rational_form(&z, &emb).unwrap().is_zero());
    }
}
