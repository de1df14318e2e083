//! Lattices of multiplicative relations `prod a_i^{e_i} = 1` among nonzero
//! algebraic numbers.
//!
//! Two engines. When every `a_i` is a rational number times a root of
//! unity the lattice follows exactly from valuations over a coprime base
//! and discrete logarithms in the cyclic group of roots of unity. In
//! general, relations are found by LLL on high precision logarithms of
//! all complex embeddings and verified exactly; the result is certified
//! complete once a numerical rank bound on the logarithm matrix, combined
//! with exact norm valuations, leaves no room for further relations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::field::complex::{complex_roots, eval_rational, log2_derivative_bound, Real};
use crate::field::cyclotomic::{is_root_of_unity, rational_times_root_of_unity};
use crate::field::integer::{bigint_log2, coprime_base, rational_valuations};
use crate::field::{Field, NfElem, NumberField};
use crate::lattice::{integer_kernel, lll, IntegerLattice};
use crate::torus::character_is_one;

/// Relations among `alphas`, with a flag recording whether the lattice is
/// known to be complete.
#[derive(Clone, Debug)]
pub struct RelationLattice<F: Field> {
    pub alphas: Vec<F::Elem>,
    pub lattice: IntegerLattice,
    pub certified: bool,
}

/// Precision schedule for the numerical engine, in bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultrelConfig {
    pub start_precision: u32,
    pub max_precision: u32,
}

impl Default for MultrelConfig {
    fn default() -> Self {
        MultrelConfig { start_precision: 128, max_precision: 2048 }
    }
}

pub fn relations<F: Field>(field: &F, alphas: &[F::Elem]) -> RelationLattice<F> {
    relations_with(field, alphas, &MultrelConfig::default())
}

pub fn relations_with<F: Field>(field: &F, alphas: &[F::Elem], cfg: &MultrelConfig) -> RelationLattice<F> {
    assert!(alphas.iter().all(|a| !field.is_zero(a)), "relations among zero");
    let n = alphas.len();
    // equal values only contribute e_i - e_j
    let mut distinct: Vec<F::Elem> = Vec::new();
    let mut first: Vec<usize> = Vec::new();
    let mut class = Vec::with_capacity(n);
    for (i, a) in alphas.iter().enumerate() {
        match distinct.iter().position(|b| b == a) {
            Some(j) => class.push(j),
            None => {
                class.push(distinct.len());
                first.push(i);
                distinct.push(a.clone());
            }
        }
    }
    let (ld, certified) = distinct_relations(field, &distinct, cfg);
    let mut gens: Vec<Vec<BigInt>> = ld
        .basis()
        .iter()
        .map(|b| {
            let mut v = vec![BigInt::zero(); n];
            for (j, x) in b.iter().enumerate() {
                v[first[j]] = x.clone();
            }
            v
        })
        .collect();
    for (i, &c) in class.iter().enumerate() {
        if first[c] != i {
            let mut v = vec![BigInt::zero(); n];
            v[i] = BigInt::from(1);
            v[first[c]] = BigInt::from(-1);
            gens.push(v);
        }
    }
    let lattice = IntegerLattice::hnf(n, gens);
    for e in lattice.basis() {
        assert!(character_is_one(field, alphas, e), "computed relation does not evaluate to one");
    }
    RelationLattice { alphas: alphas.to_vec(), lattice, certified }
}

/// `Some(true)` when the norms of the `alphas` have valuation vectors of
/// full rank, which rules out every relation; `None` otherwise.
pub fn is_trivial_quick<F: Field>(field: &F, alphas: &[F::Elem]) -> Option<bool> {
    let nf = field.number_field();
    let norms: Vec<BigRational> = alphas.iter().map(|a| nf.norm(&field.to_nf(a))).collect();
    rational_lattice(&norms).is_zero().then_some(true)
}

fn distinct_relations<F: Field>(field: &F, vals: &[F::Elem], cfg: &MultrelConfig) -> (IntegerLattice, bool) {
    if vals.is_empty() {
        return (IntegerLattice::zero(0), true);
    }
    if let Some(l) = rational_times_torsion(field, vals) {
        return (l, true);
    }
    numerical_relations(&field.number_field(), &vals.iter().map(|a| field.to_nf(a)).collect::<Vec<_>>(), cfg)
}

/// Relations among the absolute values of rationals: the integer kernel of
/// their valuation matrix over a coprime base.
fn rational_lattice(qs: &[BigRational]) -> IntegerLattice {
    let m = qs.len();
    let ints: Vec<BigInt> = qs.iter().flat_map(|q| [q.numer().clone(), q.denom().clone()]).collect();
    let base = coprime_base(&ints);
    if base.is_empty() {
        return IntegerLattice::full(m);
    }
    let cols: Vec<Vec<i64>> = qs.iter().map(|q| rational_valuations(q, &base)).collect();
    let rows: Vec<Vec<BigInt>> = (0..base.len()).map(|r| cols.iter().map(|c| BigInt::from(c[r])).collect()).collect();
    integer_kernel(&rows, m)
}

fn prime_powers(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut pa = 1;
            while n.is_multiple_of(p) {
                n /= p;
                pa *= p;
            }
            out.push(pa);
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `{e : prod z_i^{e_i} = 1}` for roots of unity `z_i` of the given orders.
fn torsion_kernel<F: Field>(field: &F, zetas: &[F::Elem], orders: &[u64]) -> IntegerLattice {
    let m = zetas.len();
    let big_n = orders.iter().fold(1u64, |a, &b| a.lcm(&b));
    if big_n == 1 {
        return IntegerLattice::full(m);
    }
    // the group they generate is cyclic of order big_n
    let mut omega = field.one();
    for pa in prime_powers(big_n) {
        let i = orders.iter().position(|o| o % pa == 0).expect("prime power divides some order");
        omega = field.mul(&omega, &field.pow(&zetas[i], (orders[i] / pa) as i64).unwrap());
    }
    let mut table: HashMap<F::Elem, u64> = HashMap::new();
    let mut cur = field.one();
    for k in 0..big_n {
        table.insert(cur.clone(), k);
        cur = field.mul(&cur, &omega);
    }
    assert!(field.is_one(&cur), "generator of the torsion subgroup has the wrong order");
    let mut row: Vec<BigInt> = zetas.iter().map(|z| BigInt::from(table[z])).collect();
    row.push(BigInt::from(big_n));
    let k = integer_kernel(&[row], m + 1);
    IntegerLattice::hnf(m, k.basis().iter().map(|v| v[..m].to_vec()).collect())
}

fn rational_times_torsion<F: Field>(field: &F, vals: &[F::Elem]) -> Option<IntegerLattice> {
    let parts: Vec<(BigRational, u64)> =
        vals.iter().map(|a| rational_times_root_of_unity(field, a)).collect::<Option<_>>()?;
    let qs: Vec<BigRational> = parts.iter().map(|(q, _)| q.clone()).collect();
    let orders: Vec<u64> = parts.iter().map(|(_, o)| *o).collect();
    let zetas: Vec<F::Elem> =
        vals.iter().zip(&qs).map(|(a, q)| field.div(a, &field.from_rational(q)).unwrap()).collect();
    // a positive rational equal to a root of unity is 1, so both parts vanish
    Some(rational_lattice(&qs).intersect(&torsion_kernel(field, &zetas, &orders)))
}

fn power_product(nf: &NumberField, alphas: &[NfElem], e: &[BigInt]) -> NfElem {
    let mut num = nf.one();
    let mut den = nf.one();
    for (a, k) in alphas.iter().zip(e) {
        let k64 = k.abs().to_i64().expect("exponent out of range");
        if k64 == 0 {
            continue;
        }
        let p = nf.pow(a, k64).unwrap();
        if k.is_negative() {
            den = nf.mul(&den, &p);
        } else {
            num = nf.mul(&num, &p);
        }
    }
    nf.div(&num, &den).unwrap()
}

fn log_sum_exp2(terms: impl Iterator<Item = f64>) -> f64 {
    let v: Vec<f64> = terms.filter(|x| x.is_finite()).collect();
    let Some(mx) = v.iter().cloned().reduce(f64::max) else {
        return f64::NEG_INFINITY;
    };
    mx + v.iter().map(|x| (x - mx).exp2()).sum::<f64>().log2()
}

/// `ln |sigma_j(a)|` for every element and every complex embedding, with
/// estimated absolute error below `2^-prec`.
fn embedding_logs(nf: &NumberField, alphas: &[NfElem], prec: u32) -> Option<Vec<Vec<Real>>> {
    let coords: Vec<Vec<BigRational>> = alphas.iter().map(|a| nf.coords(a)).collect();
    let mut wp = prec + 64;
    for _ in 0..6 {
        let roots = complex_roots(nf.modulus(), wp)?;
        let mut worst = f64::NEG_INFINITY;
        let mut out = Vec::with_capacity(alphas.len());
        for c in &coords {
            let mut row = Vec::with_capacity(roots.len());
            for r in &roots {
                let z = &r.center;
                let v = eval_rational(c, z);
                if v.is_zero() {
                    return None;
                }
                let az = z.log2_abs();
                let size = log_sum_exp2(c.iter().enumerate().filter(|(_, q)| !q.is_zero()).map(|(k, q)| {
                    bigint_log2(q.numer()) - bigint_log2(q.denom()) + k as f64 * az
                }));
                let rounding = size - wp as f64 + 8.0;
                let from_root = log2_derivative_bound(c, z) + r.log2_radius + 1.0;
                let rel = rounding.max(from_root) - v.log2_abs();
                worst = worst.max(rel);
                row.push(v.norm_sqr().ln().ldexp(-1));
            }
            out.push(row);
        }
        if worst <= -(prec as f64) {
            return Some(out);
        }
        wp += (worst + prec as f64).ceil().max(0.0) as u32 + 32;
    }
    None
}

/// Lower bound on the rank of a real matrix: pivots of complete-pivoting
/// elimination that exceed `2^threshold`.
fn numeric_rank(rows: &[Vec<Real>], threshold: i64) -> usize {
    let mut a: Vec<Vec<Real>> = rows.to_vec();
    let mut rank = 0;
    let nr = a.len();
    let nc = a.first().map_or(0, |r| r.len());
    let mut used_c = vec![false; nc];
    let mut used_r = vec![false; nr];
    loop {
        let mut best: Option<(usize, usize)> = None;
        for i in (0..nr).filter(|&i| !used_r[i]) {
            for j in (0..nc).filter(|&j| !used_c[j]) {
                if a[i][j].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[i][j].abs().cmp(&a[bi][bj].abs()).is_gt()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { return rank };
        if a[pi][pj].exponent().is_none_or(|e| e < threshold) {
            return rank;
        }
        used_r[pi] = true;
        used_c[pj] = true;
        rank += 1;
        let prow = a[pi].clone();
        for i in (0..nr).filter(|&i| !used_r[i]) {
            let f = a[i][pj].div(&prow[pj]);
            for j in 0..nc {
                a[i][j] = a[i][j].sub(&f.mul(&prow[j]));
            }
        }
    }
}

fn numerical_relations(nf: &NumberField, alphas: &[NfElem], cfg: &MultrelConfig) -> (IntegerLattice, bool) {
    let m = alphas.len();
    let norms: Vec<BigRational> = alphas.iter().map(|a| nf.norm(a)).collect();
    // relations up to torsion have norm +-1
    let w0 = rational_lattice(&norms);
    if w0.is_zero() {
        return (w0, true);
    }
    let k = w0.rank();
    let wb = w0.basis().to_vec();
    let mut found = IntegerLattice::zero(m);
    let mut certified = false;
    let mut prec = cfg.start_precision;
    loop {
        if let Some(logs) = embedding_logs(nf, alphas, prec) {
            let r = logs[0].len();
            let y: Vec<Vec<Real>> = wb
                .iter()
                .map(|w| {
                    (0..r)
                        .map(|j| {
                            w.iter().enumerate().fold(Real::zero(prec), |acc, (i, wi)| {
                                if wi.is_zero() {
                                    acc
                                } else {
                                    acc.add(&logs[i][j].mul(&Real::from_bigint(wi, prec)))
                                }
                            })
                        })
                        .collect()
                })
                .collect();
            let wmax = wb.iter().flatten().map(bigint_log2).fold(0.0, f64::max);
            let scale = prec as i64 - 16 - wmax.ceil() as i64 - (m as f64).log2().ceil() as i64;
            let rows: Vec<Vec<BigInt>> = y
                .iter()
                .enumerate()
                .map(|(t, yt)| {
                    let mut row: Vec<BigInt> = (0..k).map(|s| BigInt::from((s == t) as i64)).collect();
                    row.extend(yt.iter().map(|x| x.ldexp(scale).round()));
                    row
                })
                .collect();
            for red in lll(rows) {
                let mut e = vec![BigInt::zero(); m];
                for (u, w) in red[..k].iter().zip(&wb) {
                    for (ei, wi) in e.iter_mut().zip(w) {
                        *ei += u * wi;
                    }
                }
                if e.iter().all(|x| x.is_zero()) || found.contains(&e) {
                    continue;
                }
                if e.iter().any(|x| x.abs().to_i64().is_none_or(|v| v > 1 << 20)) {
                    continue;
                }
                let small = (0..r).all(|j| {
                    let s = e.iter().enumerate().fold(Real::zero(prec), |acc, (i, ei)| {
                        acc.add(&logs[i][j].mul(&Real::from_bigint(ei, prec)))
                    });
                    s.exponent().is_none_or(|x| x < -(prec as i64) / 2)
                });
                if small && is_root_of_unity(nf, &power_product(nf, alphas, &e)).is_some() {
                    found = found.join(&IntegerLattice::hnf(m, vec![e]));
                }
            }
            let rank_lb = numeric_rank(&y, -(prec as i64) / 3);
            let free_rank = found.saturate().rank();
            if free_rank + rank_lb == k {
                certified = true;
                break;
            }
        }
        if prec >= cfg.max_precision {
            break;
        }
        prec = (prec * 2).min(cfg.max_precision);
    }
    // the free part is pure, so saturating verified relations stays sound
    let free = found.saturate();
    let fb = free.basis().to_vec();
    let values: Vec<NfElem> = fb.iter().map(|f| power_product(nf, alphas, f)).collect();
    let orders: Vec<u64> = values
        .iter()
        .map(|z| is_root_of_unity(nf, z).expect("saturated relation is not torsion"))
        .collect();
    let tk = torsion_kernel(nf, &values, &orders);
    let gens = tk
        .basis()
        .iter()
        .map(|c| {
            let mut v = vec![BigInt::zero(); m];
            for (ct, f) in c.iter().zip(&fb) {
                for (vi, fi) in v.iter_mut().zip(f) {
                    *vi += ct * fi;
                }
            }
            v
        })
        .collect();
    (IntegerLattice::hnf(m, gens), certified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::integer::rat;
    use crate::field::QQ;

    #[test]
    fn rational_examples() {
        let r = relations(&QQ, &[rat(2, 1), rat(4, 1)]);
        assert_eq!(r.lattice, IntegerLattice::from_i64(2, &[vec![2, -1]]));
        assert!(r.certified);
        let r = relations(&QQ, &[rat(2, 1), rat(3, 1)]);
        assert!(r.lattice.is_zero() && r.certified);
        let r = relations(&QQ, &[rat(-2, 1), rat(-1, 2)]);
        assert_eq!(r.lattice, IntegerLattice::from_i64(2, &[vec![1, 1]]));
        let r = relations(&QQ, &[rat(-1, 1), rat(-1, 1), rat(3, 1)]);
        assert_eq!(r.lattice, IntegerLattice::from_i64(3, &[vec![2, 0, 0], vec![1, -1, 0]]));
    }

    #[test]
    fn roots_of_unity() {
        let k = NumberField::from_i64(&[1, 0, 1]);
        let i = k.generator();
        let r = relations(&k, std::slice::from_ref(&i));
        assert_eq!(r.lattice, IntegerLattice::from_i64(1, &[vec![4]]));
        assert!(r.certified);
        let r = relations(&k, &[i.clone(), k.neg(&i)]);
        // i^a (-i)^b = i^(a + 3b)
        assert_eq!(r.lattice, IntegerLattice::from_i64(2, &[vec![1, 1], vec![0, 4]]));
    }

    #[test]
    fn units_of_a_real_quadratic_field() {
        let k = NumberField::from_i64(&[-2, 0, 1]);
        let s = k.generator();
        // 1 + sqrt2 and its square times -1
        let u = k.add(&k.one(), &s);
        let v = k.neg(&k.mul(&u, &u));
        let r = relations(&k, &[u.clone(), v]);
        assert!(r.certified);
        assert_eq!(r.lattice, IntegerLattice::from_i64(2, &[vec![4, -2]]));
        let w = k.add(&k.from_int(3), &s);
        let r = relations(&k, &[u, w]);
        assert!(r.certified);
        assert!(r.lattice.is_zero());
    }

    #[test]
    fn non_unit_on_the_unit_circle() {
        // (3 + 4i)/5 has all conjugates of modulus one but infinite order
        let k = NumberField::from_i64(&[1, 0, 1]);
        let i = k.generator();
        let z = k.div(&k.add(&k.from_int(3), &k.mul(&k.from_int(4), &i)), &k.from_int(5)).unwrap();
        let r = relations(&k, &[z, i]);
        assert_eq!(r.lattice, IntegerLattice::from_i64(2, &[vec![0, 4]]));
    }

    #[test]
    fn quick_triviality() {
        assert_eq!(is_trivial_quick(&QQ, &[rat(2, 1), rat(3, 1), rat(5, 1)]), Some(true));
        assert_ne!(is_trivial_quick(&QQ, &[rat(2, 1), rat(4, 1)]), Some(true));
        assert_eq!(is_trivial_quick(&QQ, &[rat(1, 1)]), None);
    }

    #[test]
    fn rounding() {
        assert_eq!(Real::from_f64(2.5, 64).round(), BigInt::from(3));
        assert_eq!(Real::from_f64(-2.4, 64).round(), BigInt::from(-2));
        assert_eq!(Real::from_f64(-2.6, 64).round(), BigInt::from(-3));
    }
}
