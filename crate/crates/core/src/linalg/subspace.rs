use std::fmt;

use crate::field::Field;

use super::matrix::Matrix;

/// Subspace of `F^N` stored by its reduced row echelon basis, so equal
/// subspaces have identical representations.
///
/// Because the basis is reduced, the coordinates of a member vector are
/// simply its entries at the pivot columns.
#[derive(Clone)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}

impl<F: Field> Eq for Subspace<F> {}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Subspace { field, ambient, basis: vec![], pivots: vec![] }
    }

    pub fn full(field: F, ambient: usize) -> Self {
        let vecs = (0..ambient)
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Self::from_vectors(field, ambient, vecs)
    }

    pub fn from_vectors(field: F, ambient: usize, vecs: Vec<Vec<F::Elem>>) -> Self {
        let mut s = Self::zero(field, ambient);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the pivot coordinates.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.ambient, "vector has the wrong length");
        let f = &self.field;
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if f.is_zero(&r[p]) {
                continue;
            }
            let c = r[p].clone();
            for (x, y) in r.iter_mut().zip(b) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Coordinates with respect to `basis()`, if `v` is a member.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates of a vector known to be a member (not checked).
    pub fn coordinates_unchecked(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn combine(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if f.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o = f.add(o, &f.mul(c, x));
            }
        }
        out
    }

    /// Adds `v`, keeping the basis reduced. Returns whether the dimension
    /// grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        let f = self.field.clone();
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).unwrap();
        for x in r.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        for b in self.basis.iter_mut() {
            if f.is_zero(&b[p]) {
                continue;
            }
            let c = b[p].clone();
            for (x, y) in b.iter_mut().zip(&r) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.basis.insert(pos, r);
        true
    }

    pub fn join(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v.clone());
        }
        s
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f.clone(), self.ambient);
        }
        // solve sum a_i s_i = sum b_j o_j
        let k = self.dim() + other.dim();
        let m = Matrix::from_fn(f.clone(), self.ambient, k, |r, c| {
            if c < self.dim() {
                self.basis[c][r].clone()
            } else {
                f.neg(&other.basis[c - self.dim()][r])
            }
        });
        let ker = m.kernel();
        let vecs = ker
            .basis()
            .iter()
            .map(|sol| self.combine(&sol[..self.dim()]))
            .collect();
        Self::from_vectors(f.clone(), self.ambient, vecs)
    }

    /// Basis vectors as rows of a matrix.
    pub fn as_matrix(&self) -> Matrix<F> {
        if self.basis.is_empty() {
            return Matrix::zero(self.field.clone(), 0, self.ambient);
        }
        Matrix::from_rows(self.field.clone(), self.basis.clone())
    }

    /// Linear functionals vanishing on this subspace (as a subspace of the
    /// dual, in the same coordinates).
    pub fn annihilator(&self) -> Self {
        if self.is_zero() {
            return Self::full(self.field.clone(), self.ambient);
        }
        self.as_matrix().kernel()
    }

    pub fn map<G: Field>(&self, to: &G, f: impl Fn(&F::Elem) -> G::Elem) -> Subspace<G> {
        let vecs = self.basis.iter().map(|b| b.iter().map(&f).collect()).collect();
        Subspace::from_vectors(to.clone(), self.ambient, vecs)
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}", self.dim(), self.ambient)?;
        for b in &self.basis {
            let s: Vec<String> = b.iter().map(|x| self.field.format_elem(x)).collect();
            write!(f, "; [{}]", s.join(", "))?;
        }
        write!(f, ")")
    }
}
