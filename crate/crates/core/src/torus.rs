//! Toral subalgebras of diagonal matrices and their character lattices,
//! simultaneous diagonalization and torus membership.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::field::integer::clear_denominators;
use crate::field::splitting::split_over;
use crate::field::{Embedding, Field, NfElem, NumberField};
use crate::lattice::{integer_kernel, IntegerLattice};
use crate::linalg::{Matrix, Subspace};

/// A torus `T` given by `C` with `C T C^{-1}` diagonal over `K`, and the
/// lattice of characters vanishing on the diagonalized Lie algebra.
#[derive(Clone, Debug)]
pub struct DiagonalizedTorus<F: Field> {
    pub embedding: Embedding<F>,
    pub c: Matrix<NumberField>,
    pub c_inv: Matrix<NumberField>,
    /// Diagonals of the conjugated basis elements.
    pub diagonals: Vec<Vec<NfElem>>,
    pub relation_lattice: IntegerLattice,
}

impl<F: Field> DiagonalizedTorus<F> {
    pub fn field(&self) -> &NumberField {
        self.embedding.target()
    }

    pub fn n(&self) -> usize {
        self.c.rows()
    }

    /// `C m C^{-1}` for `m` over the base field.
    pub fn conjugate(&self, m: &Matrix<F>) -> Matrix<NumberField> {
        let k = self.field();
        let mk = m.map(k, |a| self.embedding.map(a));
        self.c.mul(&mk).mul(&self.c_inv)
    }
}

/// Integer vectors `e` with `sum b_i e_i = 0` for every row `b`, where the
/// `b_i` lie in any field.
fn integer_annihilator<F: Field>(field: &F, n: usize, rows: &[Vec<F::Elem>]) -> IntegerLattice {
    // each row splits into one rational constraint per coordinate
    let mut int_rows: Vec<Vec<BigInt>> = Vec::new();
    for b in rows {
        let coords: Vec<Vec<BigRational>> = b.iter().map(|x| field.coords(x)).collect();
        for a in 0..field.degree() {
            let r: Vec<BigRational> = coords.iter().map(|c| c[a].clone()).collect();
            let (ints, _) = clear_denominators(&r);
            if ints.iter().any(|x| x.sign() != num_bigint::Sign::NoSign) {
                int_rows.push(ints);
            }
        }
    }
    integer_kernel(&int_rows, n)
}

/// `{e in Z^n : sum b_i e_i = 0 for all diag(b) in t}`.
pub fn lattice_of_toral_algebra<F: Field>(field: &F, n: usize, t_basis: &[Matrix<F>]) -> IntegerLattice {
    let rows: Vec<Vec<F::Elem>> = t_basis
        .iter()
        .map(|m| {
            assert!(m.is_diagonal(), "toral basis element is not diagonal");
            m.diag_entries()
        })
        .collect();
    integer_annihilator(field, n, &rows)
}

/// Diagonal matrices `diag(b)` with `sum b_i e_i = 0` for all `e` in `l`,
/// as a subspace of flattened `n x n` matrices.
pub fn toral_algebra_of_lattice<F: Field>(field: &F, l: &IntegerLattice) -> Subspace<F> {
    let n = l.ambient_dim();
    let diag = |b: &[F::Elem]| {
        let mut v = vec![field.zero(); n * n];
        for (i, x) in b.iter().enumerate() {
            v[i * n + i] = x.clone();
        }
        v
    };
    let kernel = if l.is_zero() {
        Subspace::full(field.clone(), n)
    } else {
        Matrix::from_fn(field.clone(), l.rank(), n, |i, j| field.from_bigint(&l.basis()[i][j])).kernel()
    };
    Subspace::from_vectors(field.clone(), n * n, kernel.basis().iter().map(|b| diag(b)).collect())
}

/// Simultaneously diagonalizes commuting semisimple matrices over the
/// splitting field of their minimal polynomials.
pub fn diagonalize_toral<F: Field>(field: &F, n: usize, t_basis: &[Matrix<F>], cap: usize) -> Result<DiagonalizedTorus<F>> {
    diagonalize_over(Embedding::identity(field.clone()), n, t_basis, cap)
}

/// As [`diagonalize_toral`], starting from an existing extension of the
/// base field.
pub fn diagonalize_over<F: Field>(
    emb: Embedding<F>,
    n: usize,
    t_basis: &[Matrix<F>],
    cap: usize,
) -> Result<DiagonalizedTorus<F>> {
    // The eigenspaces of a generic combination are the common eigenspaces.
    // Each pair of distinct weights is merged by at most `dim - 1` values
    // of the parameter, so this many attempts always suffice.
    let base = emb.base().clone();
    let attempts = n * n * t_basis.len().max(1) + 1;
    for attempt in 0..attempts {
        let w = base.from_int(attempt as i64 + 1);
        let mut x = Matrix::zero(base.clone(), n, n);
        let mut c = base.one();
        for t in t_basis {
            x = x.add(&t.scale(&c));
            c = base.mul(&c, &w);
        }
        if let Some(d) = diagonalize_by(emb.clone(), n, &x, t_basis, cap)? {
            return Ok(d);
        }
    }
    Err(Error::InvariantViolation("toral basis is not simultaneously diagonalizable".into()))
}

/// Diagonalizes `t_basis` in an eigenbasis of `x`, or `None` if some
/// element is not diagonal in it.
fn diagonalize_by<F: Field>(
    emb: Embedding<F>,
    n: usize,
    x: &Matrix<F>,
    t_basis: &[Matrix<F>],
    cap: usize,
) -> Result<Option<DiagonalizedTorus<F>>> {
    let sf = split_over(emb, &x.min_poly(), cap)?;
    let k = sf.field().clone();
    let emb = sf.embedding;
    let xk = x.map(&k, |a| emb.map(a));
    let mut cols: Vec<Vec<NfElem>> = Vec::with_capacity(n);
    for lam in &sf.roots {
        let shifted = xk.sub(&Matrix::scalar(k.clone(), n, lam));
        cols.extend(shifted.kernel().basis().iter().cloned());
    }
    if cols.len() != n {
        return Err(Error::InvariantViolation("toral element is not semisimple".into()));
    }
    // a diagonal input keeps C = I
    cols.sort_by_key(|v| v.iter().position(|x| !k.is_zero(x)));
    let pm = Matrix::from_fn(k.clone(), n, n, |i, j| cols[j][i].clone());
    let c = pm.inverse().ok_or_else(|| Error::InvariantViolation("eigenvectors are dependent".into()))?;
    let mut diagonals = Vec::with_capacity(t_basis.len());
    for t in t_basis {
        let d = c.mul(&t.map(&k, |a| emb.map(a))).mul(&pm);
        if !d.is_diagonal() {
            return Ok(None);
        }
        diagonals.push(d.diag_entries());
    }
    let relation_lattice = integer_annihilator(&k, n, &diagonals);
    Ok(Some(DiagonalizedTorus { embedding: emb, c, c_inv: pm, diagonals, relation_lattice }))
}

/// `prod a_i^{e_i} = 1`, evaluated without inverting.
pub fn character_is_one<F: Field>(field: &F, a: &[F::Elem], e: &[BigInt]) -> bool {
    let mut num = field.one();
    let mut den = field.one();
    for (x, k) in a.iter().zip(e) {
        let Some(k64) = k.abs().to_i64() else {
            panic!("character exponent out of range");
        };
        if k64 == 0 {
            continue;
        }
        let p = field.pow(x, k64).unwrap();
        if k.is_negative() {
            den = field.mul(&den, &p);
        } else {
            num = field.mul(&num, &p);
        }
    }
    num == den
}

/// Whether the semisimple `s` lies in the torus: `C s C^{-1}` must be
/// diagonal over `K` and killed by every character in the lattice.
pub fn torus_contains<F: Field>(t: &DiagonalizedTorus<F>, s: &Matrix<F>) -> bool {
    let d = t.conjugate(s);
    if !d.is_diagonal() {
        return false;
    }
    let entries = d.diag_entries();
    t.relation_lattice.basis().iter().all(|e| character_is_one(t.field(), &entries, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::integer::rat;
    use crate::field::{Rationals, QQ};

    fn diag(v: &[i64]) -> Matrix<Rationals> {
        Matrix::diagonal(QQ, &v.iter().map(|&x| rat(x, 1)).collect::<Vec<_>>())
    }

    #[test]
    fn lattice_of_algebra_examples() {
        assert_eq!(lattice_of_toral_algebra(&QQ, 2, &[diag(&[1, -1])]), IntegerLattice::from_i64(2, &[vec![1, 1]]));
        assert_eq!(lattice_of_toral_algebra(&QQ, 2, &[]), IntegerLattice::full(2));
        assert_eq!(lattice_of_toral_algebra(&QQ, 2, &[diag(&[1, 2])]), IntegerLattice::from_i64(2, &[vec![2, -1]]));
    }

    #[test]
    fn algebra_of_lattice_examples() {
        let t = toral_algebra_of_lattice(&QQ, &IntegerLattice::from_i64(2, &[vec![1, 1]]));
        assert_eq!(t, Subspace::from_vectors(QQ, 4, vec![diag(&[1, -1]).into_flat()]));
        assert_eq!(toral_algebra_of_lattice(&QQ, &IntegerLattice::zero(2)).dim(), 2);
        assert!(toral_algebra_of_lattice(&QQ, &IntegerLattice::full(2)).is_zero());
    }

    #[test]
    fn diagonalize_examples() {
        let d = diagonalize_toral(&QQ, 2, &[diag(&[1, 2])], 64).unwrap();
        assert!(d.c.is_diagonal());
        let x = Matrix::from_ints(QQ, &[vec![0, 1], vec![1, 0]]);
        let d = diagonalize_toral(&QQ, 2, std::slice::from_ref(&x), 64).unwrap();
        assert!(d.conjugate(&x).is_diagonal());
        assert_eq!(d.relation_lattice, IntegerLattice::from_i64(2, &[vec![1, 1]]));
        let r = Matrix::from_ints(QQ, &[vec![0, -1], vec![1, 0]]);
        let d = diagonalize_toral(&QQ, 2, std::slice::from_ref(&r), 64).unwrap();
        assert_eq!(d.field().degree(), 2);
        let k = d.field();
        let dg = d.conjugate(&r).diag_entries();
        assert_eq!(k.mul(&dg[0], &dg[0]), k.from_int(-1));
        assert_eq!(k.add(&dg[0], &dg[1]), k.zero());
        assert_eq!(d.relation_lattice, IntegerLattice::from_i64(2, &[vec![1, 1]]));
    }

    #[test]
    fn contains_examples() {
        let t = diagonalize_toral(&QQ, 2, &[diag(&[1, -1])], 64).unwrap();
        let s = Matrix::diagonal(QQ, &[rat(2, 1), rat(1, 2)]);
        assert!(torus_contains(&t, &s));
        assert!(!torus_contains(&t, &diag(&[2, 3])));
        assert!(!torus_contains(&t, &Matrix::from_ints(QQ, &[vec![0, 1], vec![1, 0]])));
        let scal = diagonalize_toral(&QQ, 2, &[Matrix::identity(QQ, 2)], 64).unwrap();
        assert_eq!(scal.relation_lattice, IntegerLattice::from_i64(2, &[vec![1, -1]]));
        assert!(torus_contains(&scal, &diag(&[3, 3])));
    }

    #[test]
    fn rotation_torus_contains_rotations() {
        // SO(2) over Q(i): every rational rotation lies in it
        let r = Matrix::from_ints(QQ, &[vec![0, -1], vec![1, 0]]);
        let t = diagonalize_toral(&QQ, 2, &[r], 64).unwrap();
        let rot = Matrix::from_rows(QQ, vec![vec![rat(3, 5), rat(-4, 5)], vec![rat(4, 5), rat(3, 5)]]);
        assert!(torus_contains(&t, &rot));
        assert!(!torus_contains(&t, &diag(&[2, 2])));
    }
}
