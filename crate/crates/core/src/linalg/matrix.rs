use std::fmt;
use std::hash::{Hash, Hasher};

use crate::field::{Field, Poly};

use super::subspace::Subspace;
use super::DependencyFinder;

/// Dense matrix over an exact field, stored row-major.
#[derive(Clone)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> Eq for Matrix<F> {}

impl<F: Field> Hash for Matrix<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
    }
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has the wrong length");
        Matrix { field, rows, cols, data }
    }

    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn scalar(field: F, n: usize, c: &F::Elem) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, f: impl Fn(usize, usize) -> F::Elem) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(field: F, rows: &[Vec<i64>]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_int(x)).collect())
            .collect();
        Self::from_rows(field, rows)
    }

    pub fn diagonal(field: F, d: &[F::Elem]) -> Self {
        let n = d.len();
        let mut m = Self::zero(field, n, n);
        for (i, x) in d.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    /// Square matrix from a row-major flattening.
    pub fn from_flat(field: F, n: usize, v: &[F::Elem]) -> Self {
        Self::new(field, n, n, v.to_vec())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major entries.
    pub fn flat(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<F::Elem> {
        self.data
    }

    pub fn map<G: Field>(&self, to: &G, f: impl Fn(&F::Elem) -> G::Elem) -> Matrix<G> {
        Matrix {
            field: to.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.neg(a)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let f = &self.field;
        let mut data = vec![f.zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    data[idx] = f.add(&data[idx], &f.mul(a, b));
                }
            }
        }
        Matrix { field: f.clone(), rows: self.rows, cols: other.cols, data }
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field.clone(), self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> F::Elem {
        let f = &self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.field.clone(), self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let a = self.get(i, j);
                    if i == j {
                        self.field.is_one(a)
                    } else {
                        self.field.is_zero(a)
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.field.is_zero(self.get(i, j))))
    }

    pub fn diag_entries(&self) -> Vec<F::Elem> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    /// Reduced row echelon form, rank and pivot columns.
    pub fn rref(&self) -> (Self, usize, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in c..self.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..self.cols {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Right null space.
    pub fn kernel(&self) -> Subspace<F> {
        let f = &self.field;
        let (r, rank, pivots) = self.rref();
        let mut vecs = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate().take(rank) {
                v[p] = f.neg(r.get(i, free));
            }
            vecs.push(v);
        }
        Subspace::from_vectors(f.clone(), self.cols, vecs)
    }

    /// Left null space as row vectors `y` with `y * self = 0`.
    pub fn left_kernel(&self) -> Subspace<F> {
        self.transpose().kernel()
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let f = &self.field;
        let aug = Self::from_fn(f.clone(), n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                f.one()
            } else {
                f.zero()
            }
        });
        let (r, rank, pivots) = aug.rref();
        if rank < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(f.clone(), n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn det(&self) -> F::Elem {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut d = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !f.is_zero(m.get(i, c))) else {
                return f.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                d = f.neg(&d);
            }
            let piv = m.get(c, c).clone();
            d = f.mul(&d, &piv);
            let inv = f.inv(&piv).unwrap();
            for i in c + 1..n {
                if f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = f.mul(m.get(i, c), &inv);
                for j in c..n {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        d
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && !self.field.is_zero(&self.det())
    }

    /// Some solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows);
        let f = &self.field;
        let aug = Self::from_fn(f.clone(), self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, rank, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate().take(rank) {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Monic minimal polynomial.
    pub fn min_poly(&self) -> Poly<F> {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut deps = DependencyFinder::new(f.clone(), n * n);
        let mut cur = Self::identity(f.clone(), n);
        loop {
            if let Some(comb) = deps.add(cur.data.clone()) {
                let mut coeffs: Vec<F::Elem> = comb.iter().map(|c| f.neg(c)).collect();
                coeffs.push(f.one());
                return Poly::new(f.clone(), coeffs);
            }
            cur = cur.mul(self);
        }
    }

    /// `det(xI - self)`.
    pub fn char_poly(&self) -> Poly<F> {
        assert!(self.is_square());
        self.field.char_poly(self)
    }

    /// `p(self)`.
    pub fn eval_poly(&self, p: &Poly<F>) -> Self {
        let f = &self.field;
        let n = self.rows;
        let mut acc = Self::zero(f.clone(), n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = f.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        acc
    }

    pub fn block_diag(blocks: &[Self]) -> Self {
        let f = blocks[0].field.clone();
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zero(f, n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.field.format_elem(self.get(i, j)))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
