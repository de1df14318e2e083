//! Matrix Lie subalgebras of `gl(n)`: bracket closure, conjugation,
//! centralizers and Cartan subalgebras.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::jordan::additive_jordan;
use crate::linalg::{Matrix, Subspace};

/// Default number of random elements tried by [`cartan_subalgebra`].
pub const CARTAN_TRIALS: usize = 200;

/// A subspace of `n x n` matrices (flattened row-major) closed under the
/// commutator.
#[derive(Clone, PartialEq, Eq)]
pub struct LieSubalgebra<F: Field> {
    n: usize,
    space: Subspace<F>,
}

impl<F: Field> LieSubalgebra<F> {
    pub fn zero(field: F, n: usize) -> Self {
        LieSubalgebra { n, space: Subspace::zero(field, n * n) }
    }

    pub fn gl(field: F, n: usize) -> Self {
        LieSubalgebra { n, space: Subspace::full(field, n * n) }
    }

    /// Wraps a subspace without checking bracket closure.
    pub fn from_space_unchecked(n: usize, space: Subspace<F>) -> Self {
        assert_eq!(space.ambient_dim(), n * n);
        LieSubalgebra { n, space }
    }

    pub fn field(&self) -> &F {
        self.space.field()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }

    pub fn basis(&self) -> Vec<Matrix<F>> {
        self.space.basis().iter().map(|v| Matrix::from_flat(self.field().clone(), self.n, v)).collect()
    }

    pub fn contains(&self, m: &Matrix<F>) -> bool {
        self.space.contains(m.flat())
    }

    pub fn contains_algebra(&self, other: &Self) -> bool {
        self.space.contains_subspace(&other.space)
    }

    pub fn coordinates(&self, m: &Matrix<F>) -> Option<Vec<F::Elem>> {
        self.space.coordinates(m.flat())
    }

    pub fn element(&self, coords: &[F::Elem]) -> Matrix<F> {
        Matrix::from_flat(self.field().clone(), self.n, &self.space.combine(coords))
    }

    pub fn is_bracket_closed(&self) -> bool {
        let b = self.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| self.contains(&b[i].commutator(&b[j]))))
    }

    pub fn is_abelian(&self) -> bool {
        let b = self.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| b[i].commutator(&b[j]).is_zero()))
    }

    /// Matrix of `ad x` on this algebra in the basis coordinates.
    pub fn ad_matrix(&self, x: &Matrix<F>) -> Matrix<F> {
        let f = self.field().clone();
        let b = self.basis();
        let d = b.len();
        let cols: Vec<Vec<F::Elem>> = b
            .iter()
            .map(|y| self.space.coordinates(x.commutator(y).flat()).expect("ad x does not preserve the algebra"))
            .collect();
        Matrix::from_fn(f, d, d, |i, j| cols[j][i].clone())
    }

    /// Smallest bracket-closed space containing this one and `extra`.
    pub fn extend(&self, extra: &[Matrix<F>]) -> Self {
        let mut all = self.basis();
        all.extend(extra.iter().cloned());
        generated_subalgebra(self.field(), self.n, &all)
    }

    pub fn join(&self, other: &Self) -> Self {
        self.extend(&other.basis())
    }

    /// Whether `g x g^{-1}` lies in the algebra for every basis element.
    pub fn is_normalized_by(&self, g: &Matrix<F>, g_inv: &Matrix<F>) -> bool {
        self.basis().iter().all(|x| self.contains(&g.mul(x).mul(g_inv)))
    }
}

impl<F: Field> fmt::Debug for LieSubalgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieSubalgebra(n = {}, dim = {})", self.n, self.dim())
    }
}

/// Closes the span of `gens` under commutators.
pub fn generated_subalgebra<F: Field>(field: &F, n: usize, gens: &[Matrix<F>]) -> LieSubalgebra<F> {
    let mut space = Subspace::zero(field.clone(), n * n);
    let mut kept: Vec<Matrix<F>> = Vec::new();
    let mut queue: Vec<Matrix<F>> = Vec::new();
    for g in gens {
        assert_eq!((g.rows(), g.cols()), (n, n), "generator has the wrong size");
        if space.insert(g.flat().to_vec()) {
            queue.push(g.clone());
        }
    }
    while let Some(x) = queue.pop() {
        for y in kept.iter().chain(std::iter::once(&x)) {
            let c = x.commutator(y);
            if space.insert(c.flat().to_vec()) {
                queue.push(c);
            }
        }
        kept.push(x);
    }
    LieSubalgebra { n, space }
}

/// `g L g^{-1}`.
pub fn conjugate_subalgebra<F: Field>(g: &Matrix<F>, l: &LieSubalgebra<F>) -> Result<LieSubalgebra<F>> {
    let gi = g.inverse().ok_or(Error::Singular)?;
    Ok(conjugate_with_inverse(g, &gi, l))
}

pub fn conjugate_with_inverse<F: Field>(g: &Matrix<F>, g_inv: &Matrix<F>, l: &LieSubalgebra<F>) -> LieSubalgebra<F> {
    let vecs = l.basis().iter().map(|x| g.mul(x).mul(g_inv).into_flat()).collect();
    LieSubalgebra { n: l.n, space: Subspace::from_vectors(l.field().clone(), l.n * l.n, vecs) }
}

/// Elements of `l` commuting with `s`.
pub fn centralizer_in<F: Field>(l: &LieSubalgebra<F>, s: &Matrix<F>) -> LieSubalgebra<F> {
    let f = l.field().clone();
    let basis = l.basis();
    if basis.is_empty() {
        return l.clone();
    }
    let cols: Vec<Matrix<F>> = basis.iter().map(|b| s.commutator(b)).collect();
    let nn = l.n * l.n;
    let m = Matrix::from_fn(f.clone(), nn, basis.len(), |i, j| cols[j].flat()[i].clone());
    let vecs = m.kernel().basis().iter().map(|c| l.space.combine(c)).collect();
    LieSubalgebra { n: l.n, space: Subspace::from_vectors(f, nn, vecs) }
}

/// `{y in l : [y, h] in h}`.
pub fn normalizer_in<F: Field>(l: &LieSubalgebra<F>, h: &LieSubalgebra<F>) -> LieSubalgebra<F> {
    let f = l.field().clone();
    let lb = l.basis();
    let hb = h.basis();
    if lb.is_empty() {
        return l.clone();
    }
    // [y, h_k] must lie in h for every k: project onto the annihilator of h
    let ann = h.space.annihilator();
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for hk in &hb {
        let brackets: Vec<Matrix<F>> = lb.iter().map(|y| y.commutator(hk)).collect();
        for w in ann.basis() {
            rows.push(
                brackets
                    .iter()
                    .map(|b| {
                        b.flat().iter().zip(w).fold(f.zero(), |acc, (x, y)| {
                            if f.is_zero(x) || f.is_zero(y) {
                                acc
                            } else {
                                f.add(&acc, &f.mul(x, y))
                            }
                        })
                    })
                    .collect(),
            );
        }
    }
    if rows.is_empty() {
        return l.clone();
    }
    let m = Matrix::from_rows(f.clone(), rows);
    let vecs = m.kernel().basis().iter().map(|c| l.space.combine(c)).collect();
    LieSubalgebra { n: l.n, space: Subspace::from_vectors(f, l.n * l.n, vecs) }
}

/// Whether the lower central series of `l` reaches zero.
pub fn is_nilpotent_algebra<F: Field>(l: &LieSubalgebra<F>) -> bool {
    let basis = l.basis();
    let mut cur = l.space.clone();
    loop {
        if cur.is_zero() {
            return true;
        }
        let curb: Vec<Matrix<F>> =
            cur.basis().iter().map(|v| Matrix::from_flat(l.field().clone(), l.n, v)).collect();
        let mut next = Subspace::zero(l.field().clone(), l.n * l.n);
        for x in &basis {
            for y in &curb {
                next.insert(x.commutator(y).into_flat());
            }
        }
        if next.dim() == cur.dim() {
            return false;
        }
        cur = next;
    }
}

/// Generalized zero eigenspace of `ad x` on `l`.
fn fitting_null<F: Field>(l: &LieSubalgebra<F>, x: &Matrix<F>) -> LieSubalgebra<F> {
    let a = l.ad_matrix(x);
    let d = a.rows();
    let k = a.pow(d as u64).kernel();
    let vecs = k.basis().iter().map(|c| l.space.combine(c)).collect();
    LieSubalgebra { n: l.n, space: Subspace::from_vectors(l.field().clone(), l.n * l.n, vecs) }
}

/// A nilpotent self-normalizing subalgebra of `l`, found as the Fitting
/// null component of `ad x` for a random `x`.
pub fn cartan_subalgebra<F: Field>(l: &LieSubalgebra<F>, seed: u64) -> Result<LieSubalgebra<F>> {
    cartan_subalgebra_with(l, seed, CARTAN_TRIALS)
}

pub fn cartan_subalgebra_with<F: Field>(l: &LieSubalgebra<F>, seed: u64, trials: usize) -> Result<LieSubalgebra<F>> {
    if is_nilpotent_algebra(l) {
        return Ok(l.clone());
    }
    let f = l.field().clone();
    let d = l.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = usize::MAX;
    for t in 0..trials {
        let bound = 1 + (t / 10) as i64;
        let coords: Vec<F::Elem> = (0..d).map(|_| f.from_int(rng.gen_range(-bound..=bound))).collect();
        let x = l.element(&coords);
        let h = fitting_null(l, &x);
        if h.dim() > best {
            continue;
        }
        best = h.dim();
        if is_nilpotent_algebra(&h) && normalizer_in(l, &h).dim() == h.dim() {
            return Ok(h);
        }
    }
    Err(Error::SearchExhausted(trials))
}

/// Splits `h` into the spans of the semisimple and nilpotent parts of its
/// basis elements.
pub fn split_semisimple_nilpotent<F: Field>(h: &LieSubalgebra<F>) -> Result<(Subspace<F>, Subspace<F>)> {
    let f = h.field().clone();
    let nn = h.n * h.n;
    let mut t = Subspace::zero(f.clone(), nn);
    let mut u = Subspace::zero(f, nn);
    for b in h.basis() {
        let (s, nil) = additive_jordan(&b);
        t.insert(s.into_flat());
        u.insert(nil.into_flat());
    }
    if t.dim() + u.dim() != h.dim() || !h.space.contains_subspace(&t) || !h.space.contains_subspace(&u) {
        return Err(Error::NotSplit { semisimple: t.dim(), nilpotent: u.dim(), total: h.dim() });
    }
    Ok((t, u))
}
