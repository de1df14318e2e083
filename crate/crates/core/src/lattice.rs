//! Integer lattices in `Z^n`, stored by their row Hermite normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::integer::clear_denominators;
use crate::field::QQ;
use crate::linalg::Matrix;

/// A subgroup of `Z^n` given by its canonical row HNF basis: pivots
/// strictly increase, are positive, and entries above a pivot lie in
/// `[0, pivot)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    ambient: usize,
    basis: Vec<Vec<BigInt>>,
}

fn pivot_of(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

fn axpy(target: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    if q.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(src) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

/// Row echelon form by unimodular row operations; returns nonzero rows.
fn echelon(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut r = 0;
    for c in 0..ncols {
        if r >= rows.len() {
            break;
        }
        loop {
            // smallest nonzero entry in column c among rows r..
            let best = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let (head, tail) = rows.split_at_mut(i);
                axpy(&mut tail[0], &q, &head[r]);
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !rows[r][c].is_zero() {
            r += 1;
        }
    }
    rows.truncate(r);
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    rows
}

fn reduce_hnf(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    for i in 0..rows.len() {
        let p = pivot_of(&rows[i]).unwrap();
        if rows[i][p].is_negative() {
            for x in rows[i].iter_mut() {
                *x = -x.clone();
            }
        }
        for j in 0..i {
            let q = rows[j][p].div_floor(&rows[i][p]);
            let (head, tail) = rows.split_at_mut(i);
            axpy(&mut head[j], &q, &tail[0]);
        }
    }
    rows
}

impl IntegerLattice {
    pub fn zero(ambient: usize) -> Self {
        IntegerLattice { ambient, basis: vec![] }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        IntegerLattice { ambient, basis }
    }

    /// The lattice generated by `gens`.
    pub fn hnf(ambient: usize, gens: Vec<Vec<BigInt>>) -> Self {
        for g in &gens {
            assert_eq!(g.len(), ambient, "generator has the wrong length");
        }
        let rows = reduce_hnf(echelon(gens, ambient));
        IntegerLattice { ambient, basis: rows }
    }

    pub fn from_i64(ambient: usize, gens: &[Vec<i64>]) -> Self {
        Self::hnf(ambient, gens.iter().map(|g| g.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector has the wrong length");
        let mut r = v.to_vec();
        for b in &self.basis {
            let p = pivot_of(b).unwrap();
            let (q, rem) = r[p].div_rem(&b[p]);
            if !rem.is_zero() {
                return false;
            }
            axpy(&mut r, &q, b);
        }
        r.iter().all(|x| x.is_zero())
    }

    pub fn contains_lattice(&self, other: &Self) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn join(&self, other: &Self) -> Self {
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Self::hnf(self.ambient, gens)
    }

    /// The smallest pure lattice containing this one: its rational span
    /// intersected with `Z^n`.
    pub fn saturate(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let b = Matrix::from_fn(QQ, self.rank(), self.ambient, |i, j| {
            BigRational::from_integer(self.basis[i][j].clone())
        });
        let ann: Vec<Vec<BigInt>> = b.kernel().basis().iter().map(|w| clear_denominators(w).0).collect();
        if ann.is_empty() {
            return Self::full(self.ambient);
        }
        integer_kernel(&ann, self.ambient)
    }

    pub fn is_pure(&self) -> bool {
        self.saturate() == *self
    }

    pub fn intersect(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        // a B1 = b B2 with (a, b) in the integer kernel of [B1; -B2]^T
        let r1 = self.rank();
        let cols = r1 + other.rank();
        let m: Vec<Vec<BigInt>> = (0..self.ambient)
            .map(|j| {
                self.basis
                    .iter()
                    .map(|b| b[j].clone())
                    .chain(other.basis.iter().map(|b| -b[j].clone()))
                    .collect()
            })
            .collect();
        let k = integer_kernel(&m, cols);
        let gens = k
            .basis()
            .iter()
            .map(|ab| {
                let mut v = vec![BigInt::zero(); self.ambient];
                for (a, b) in ab[..r1].iter().zip(&self.basis) {
                    axpy(&mut v, &-a, b);
                }
                v
            })
            .collect();
        Self::hnf(self.ambient, gens)
    }

    /// Integer coordinates of a member with respect to `basis()`.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut r = v.to_vec();
        let mut out = Vec::with_capacity(self.rank());
        for b in &self.basis {
            let p = pivot_of(b).unwrap();
            let (q, rem) = r[p].div_rem(&b[p]);
            if !rem.is_zero() {
                return None;
            }
            axpy(&mut r, &q, b);
            out.push(q);
        }
        r.iter().all(|x| x.is_zero()).then_some(out)
    }

    /// Applies a coordinate permutation: entry `i` moves to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let gens = self
            .basis
            .iter()
            .map(|b| {
                let mut v = vec![BigInt::zero(); self.ambient];
                for (i, x) in b.iter().enumerate() {
                    v[perm[i]] = x.clone();
                }
                v
            })
            .collect();
        Self::hnf(self.ambient, gens)
    }
}

impl fmt::Debug for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerLattice(rank {} in Z^{}", self.rank(), self.ambient)?;
        for b in &self.basis {
            let s: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            write!(f, "; ({})", s.join(", "))?;
        }
        write!(f, ")")
    }
}

/// All `v` in `Z^ncols` with `m v = 0`.
pub fn integer_kernel(m: &[Vec<BigInt>], ncols: usize) -> IntegerLattice {
    let nrows = m.len();
    // rows (column i of m | e_i); echelon form keeps a unimodular record
    let rows: Vec<Vec<BigInt>> = (0..ncols)
        .map(|i| {
            let mut r: Vec<BigInt> = m.iter().map(|row| row[i].clone()).collect();
            r.extend((0..ncols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            r
        })
        .collect();
    let ech = echelon(rows, nrows + ncols);
    let gens = ech
        .into_iter()
        .filter(|r| r[..nrows].iter().all(|x| x.is_zero()))
        .map(|r| r[nrows..].to_vec())
        .collect();
    IntegerLattice::hnf(ncols, gens)
}

pub fn integer_kernel_i64(m: &[Vec<i64>], ncols: usize) -> IntegerLattice {
    let mb: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    integer_kernel(&mb, ncols)
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    // nearest integer to a / b, b > 0
    let two = BigInt::from(2);
    (a * &two + b).div_floor(&(b * &two))
}

/// LLL reduction (parameter 3/4) of linearly independent integer rows, in
/// exact integer arithmetic.
pub(crate) fn lll(rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let n = rows.len();
    if n <= 1 {
        return rows;
    }
    // 1-based indices as in the integral formulation
    let mut b: Vec<Vec<BigInt>> = std::iter::once(vec![]).chain(rows).collect();
    let mut d = vec![BigInt::zero(); n + 1];
    let mut lam = vec![vec![BigInt::zero(); n + 1]; n + 1];
    d[0] = BigInt::one();
    d[1] = dot(&b[1], &b[1]);
    let mut k = 2;
    let mut kmax = 1;
    let red = |b: &mut Vec<Vec<BigInt>>, lam: &mut Vec<Vec<BigInt>>, d: &[BigInt], k: usize, l: usize| {
        if (&lam[k][l] * BigInt::from(2)).abs() > d[l] {
            let q = round_div(&lam[k][l], &d[l]);
            let bl = b[l].clone();
            axpy(&mut b[k], &q, &bl);
            lam[k][l] = &lam[k][l] - &q * &d[l];
            for i in 1..l {
                let v = &lam[k][i] - &q * &lam[l][i];
                lam[k][i] = v;
            }
        }
    };
    while k <= n {
        if k > kmax {
            kmax = k;
            for j in 1..=k {
                let mut u = dot(&b[k], &b[j]);
                for i in 1..j {
                    u = (&d[i] * &u - &lam[k][i] * &lam[j][i]) / &d[i - 1];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    assert!(!u.is_zero(), "LLL input rows are dependent");
                    d[k] = u;
                }
            }
        }
        red(&mut b, &mut lam, &d, k, k - 1);
        let lhs = BigInt::from(4) * &d[k] * &d[k - 2];
        let rhs = BigInt::from(3) * &d[k - 1] * &d[k - 1] - BigInt::from(4) * &lam[k][k - 1] * &lam[k][k - 1];
        if lhs < rhs {
            b.swap(k, k - 1);
            for j in 1..k - 1 {
                let t = lam[k][j].clone();
                lam[k][j] = lam[k - 1][j].clone();
                lam[k - 1][j] = t;
            }
            let l = lam[k][k - 1].clone();
            let bb = (&d[k - 2] * &d[k] + &l * &l) / &d[k - 1];
            for i in k + 1..=kmax {
                let t = lam[i][k].clone();
                lam[i][k] = (&d[k] * &lam[i][k - 1] - &l * &t) / &d[k - 1];
                lam[i][k - 1] = (&bb * &t + &l * &lam[i][k]) / &d[k];
            }
            d[k - 1] = bb;
            if k > 2 {
                k -= 1;
            }
        } else {
            for l in (1..k - 1).rev() {
                red(&mut b, &mut lam, &d, k, l);
            }
            k += 1;
        }
    }
    b.remove(0);
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn hnf_examples() {
        assert_eq!(IntegerLattice::from_i64(2, &[vec![2, 0], vec![3, 0]]).basis(), &[v(&[1, 0])]);
        assert!(IntegerLattice::from_i64(2, &[]).is_zero());
        assert_eq!(IntegerLattice::from_i64(2, &[vec![2, 4], vec![4, 8]]).basis(), &[v(&[2, 4])]);
        let l = IntegerLattice::from_i64(2, &[vec![3, 1], vec![1, 2]]);
        assert_eq!(l.basis(), &[v(&[1, 2]), v(&[0, 5])]);
    }

    #[test]
    fn saturate_examples() {
        let l = IntegerLattice::from_i64(2, &[vec![2, 4]]);
        assert_eq!(l.saturate().basis(), &[v(&[1, 2])]);
        let l = IntegerLattice::from_i64(2, &[vec![2, 0], vec![0, 2]]);
        assert_eq!(l.saturate(), IntegerLattice::full(2));
        let p = IntegerLattice::from_i64(3, &[vec![1, 2, 3]]);
        assert_eq!(p.saturate(), p);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(integer_kernel_i64(&[vec![1, 1]], 2).basis(), &[v(&[1, -1])]);
        assert!(integer_kernel_i64(&[vec![1, 0], vec![0, 1]], 2).is_zero());
        assert_eq!(integer_kernel_i64(&[vec![2, 4]], 2).basis(), &[v(&[2, -1])]);
        assert_eq!(integer_kernel_i64(&[], 2), IntegerLattice::full(2));
    }

    #[test]
    fn contains_examples() {
        assert!(IntegerLattice::full(2).contains(&v(&[5, 7])));
        let l = IntegerLattice::from_i64(2, &[vec![1, 2]]);
        assert!(l.contains(&v(&[2, 4])));
        assert!(!l.contains(&v(&[1, 1])));
    }

    #[test]
    fn intersection() {
        let a = IntegerLattice::from_i64(2, &[vec![2, 0], vec![0, 1]]);
        let b = IntegerLattice::from_i64(2, &[vec![3, 0], vec![0, 2]]);
        assert_eq!(a.intersect(&b), IntegerLattice::from_i64(2, &[vec![6, 0], vec![0, 2]]));
    }

    #[test]
    fn lll_shortens() {
        let rows = vec![v(&[1, 0, 0, 1345]), v(&[0, 1, 0, 35]), v(&[0, 0, 1, 154])];
        let red = lll(rows.clone());
        let norm = |x: &Vec<BigInt>| dot(x, x);
        assert!(norm(&red[0]) < norm(&rows[2]));
        // same lattice
        let a = IntegerLattice::hnf(4, rows);
        let b = IntegerLattice::hnf(4, red);
        assert_eq!(a, b);
    }
}
