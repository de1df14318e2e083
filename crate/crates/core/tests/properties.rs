//! Randomized checks of the algebraic invariants of each module against
//! direct computations done here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use zariski_core::field::{Field, NfElem, NumberField, Poly, Rationals, QQ};
use zariski_core::jordan::{multiplicative_jordan, JordanPair};
use zariski_core::liealg::{cartan_subalgebra, generated_subalgebra, is_nilpotent_algebra, normalizer_in};
use zariski_core::linalg::Matrix;
use zariski_core::{
    integer_kernel, lattice_of_toral_algebra, lie_of_semisimple, relations, toral_algebra_of_lattice, ClosureConfig,
    IntegerLattice,
};

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn ints(rows: &[Vec<i64>]) -> Matrix<Rationals> {
    Matrix::from_ints(QQ, rows)
}

// ---------------------------------------------------------------- jordan

/// Upper triangular integer matrix with diagonal drawn from a small set of
/// nonzero values, so repeated eigenvalues and nontrivial unipotent parts
/// are common.
fn triangular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (
        prop::collection::vec(prop::sample::select(vec![-2i64, -1, 1, 2, 3]), n),
        prop::collection::vec(-5i64..=5, n * n),
    )
        .prop_map(move |(d, off)| {
            (0..n)
                .map(|i| (0..n).map(|j| if i == j { d[i] } else if j > i { off[i * n + j] } else { 0 }).collect())
                .collect()
        })
}

/// Unimodular conjugator as a product of elementary matrices.
fn unimodular(n: usize) -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
    prop::collection::vec((0..n, 0..n, -2i64..=2), 0..6)
}

fn elementary_product(n: usize, ops: &[(usize, usize, i64)]) -> (Matrix<Rationals>, Matrix<Rationals>) {
    let mut p = Matrix::identity(QQ, n);
    let mut q = Matrix::identity(QQ, n);
    for &(i, j, c) in ops {
        if i == j || c == 0 {
            continue;
        }
        let mut e = vec![vec![0i64; n]; n];
        let mut f = vec![vec![0i64; n]; n];
        for k in 0..n {
            e[k][k] = 1;
            f[k][k] = 1;
        }
        e[i][j] = c;
        f[i][j] = -c;
        p = p.mul(&ints(&e));
        q = ints(&f).mul(&q);
    }
    (p, q)
}

fn random_invertible() -> impl Strategy<Value = Matrix<Rationals>> {
    (1usize..=5).prop_flat_map(|n| {
        prop_oneof![
            triangular(n).prop_map(|r| ints(&r)),
            (triangular(n), unimodular(n)).prop_map(move |(r, ops)| {
                let (p, q) = elementary_product(n, &ops);
                p.mul(&ints(&r)).mul(&q)
            }),
            prop::collection::vec(prop::collection::vec(-5i64..=5, n), n)
                .prop_map(|r| ints(&r))
                .prop_filter("singular", |m| m.is_invertible()),
        ]
    })
}

fn is_squarefree(p: &Poly<Rationals>) -> bool {
    let mut d = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate().skip(1) {
        d.push(c * BigRational::from_integer(BigInt::from(i)));
    }
    p.gcd(&Poly::new(QQ, d)).degree() == Some(0)
}

fn is_unipotent_direct(u: &Matrix<Rationals>) -> bool {
    let n = u.rows();
    u.sub(&Matrix::identity(QQ, n)).pow(n as u64).is_zero()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn jordan_decomposition(g in random_invertible()) {
        let n = g.rows();
        let JordanPair { semisimple: s, unipotent: u } = multiplicative_jordan(&g).unwrap();
        prop_assert_eq!(s.mul(&u), g.clone());
        prop_assert_eq!(s.mul(&u), u.mul(&s));
        prop_assert!(is_squarefree(&s.min_poly()));
        prop_assert!(is_unipotent_direct(&u));
        // parts commute with everything commuting with g; in particular with g
        prop_assert_eq!(s.mul(&g), g.mul(&s));
        let js = multiplicative_jordan(&s).unwrap();
        prop_assert_eq!(js.semisimple, s.clone());
        prop_assert!(js.unipotent.is_identity());
        let ju = multiplicative_jordan(&u).unwrap();
        prop_assert!(ju.semisimple.is_identity());
        prop_assert_eq!(ju.unipotent, u.clone());
        // the characteristic polynomials of g and s agree
        prop_assert_eq!(g.char_poly(), s.char_poly());
        prop_assert_eq!(s.rows(), n);
    }
}

// --------------------------------------------------------------- lattice

fn gens(ambient: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, ambient), 0..=ambient + 1)
}

fn lattice_input() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=5).prop_flat_map(|a| (Just(a), gens(a)))
}

fn rank_over_q(rows: &[Vec<i64>], ncols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_ints(QQ, rows).rank().min(ncols)
}

fn in_box(dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        let mut next = Vec::new();
        for v in &out {
            for x in -bound..=bound {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn saturation((a, g) in lattice_input()) {
        let l = IntegerLattice::from_i64(a, &g);
        let s = l.saturate();
        prop_assert_eq!(s.saturate(), s.clone());
        prop_assert!(s.is_pure());
        prop_assert_eq!(s.rank(), l.rank());
        prop_assert_eq!(l.rank(), rank_over_q(&g, a));
        prop_assert!(s.contains_lattice(&l));
        for v in &g {
            prop_assert!(l.contains(&big(v)));
        }
    }

    #[test]
    fn hnf_is_canonical((a, g) in lattice_input(), seed in any::<u64>(), c in -3i64..=3) {
        let l = IntegerLattice::from_i64(a, &g);
        let mut shuffled = g.clone();
        let k = shuffled.len();
        if k > 1 {
            let r = (seed as usize) % k;
            shuffled.rotate_left(r);
            shuffled.swap(0, k - 1);
            // add a multiple of one generator to another
            let (x, y) = (0, k - 1);
            let add: Vec<i64> = shuffled[y].iter().map(|v| v * c).collect();
            for (t, d) in shuffled[x].iter_mut().zip(add) {
                *t += d;
            }
        }
        prop_assert_eq!(IntegerLattice::from_i64(a, &shuffled), l);
    }

    #[test]
    fn kernel_matches_enumeration(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 1..=2)) {
        let k = integer_kernel(&rows.iter().map(|r| big(r)).collect::<Vec<_>>(), 3);
        let zero = |e: &[i64]| rows.iter().all(|r| r.iter().zip(e).map(|(a, b)| a * b).sum::<i64>() == 0);
        for b in k.basis() {
            let e: Vec<i64> = b.iter().map(|x| i64::try_from(x).unwrap()).collect();
            prop_assert!(zero(&e));
        }
        for e in in_box(3, 4) {
            prop_assert_eq!(zero(&e), k.contains(&big(&e)));
        }
        prop_assert!(k.is_pure());
        prop_assert_eq!(k.rank(), 3 - rank_over_q(&rows, 3));
    }

    #[test]
    fn intersection_matches_enumeration(
        g1 in prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 1..=2),
        g2 in prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 1..=2),
    ) {
        let a = IntegerLattice::from_i64(2, &g1);
        let b = IntegerLattice::from_i64(2, &g2);
        let c = a.intersect(&b);
        prop_assert!(a.contains_lattice(&c) && b.contains_lattice(&c));
        for e in in_box(2, 12) {
            let v = big(&e);
            prop_assert_eq!(c.contains(&v), a.contains(&v) && b.contains(&v));
        }
    }
}

// ----------------------------------------------------------------- torus

fn pure_lattice() -> impl Strategy<Value = IntegerLattice> {
    lattice_input().prop_map(|(a, g)| IntegerLattice::from_i64(a, &g).saturate())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn torus_lattice_round_trip(l in pure_lattice()) {
        let n = l.ambient_dim();
        let t = toral_algebra_of_lattice(&QQ, &l);
        prop_assert_eq!(t.dim(), n - l.rank());
        let basis: Vec<Matrix<Rationals>> = t.basis().iter().map(|v| Matrix::from_flat(QQ, n, v)).collect();
        for m in &basis {
            prop_assert!(m.is_diagonal());
            for e in l.basis() {
                let s: BigRational = m.diag_entries().iter().zip(e).map(|(b, x)| b * BigRational::from_integer(x.clone())).sum();
                prop_assert!(s.is_zero());
            }
        }
        prop_assert_eq!(lattice_of_toral_algebra(&QQ, n, &basis), l);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    /// `G(diag(2^a))` is the one dimensional torus `t -> diag(t^a)`.
    #[test]
    fn power_of_two_torus(a in prop::collection::vec(-3i64..=3, 1..=4)) {
        prop_assume!(a.iter().any(|&x| x != 0));
        let two = BigRational::from_integer(BigInt::from(2));
        let d: Vec<BigRational> = a.iter().map(|&x| QQ.pow(&two, x).unwrap()).collect();
        let (lie, certified) = lie_of_semisimple(&Matrix::diagonal(QQ, &d), &ClosureConfig::default()).unwrap();
        prop_assert!(certified);
        prop_assert_eq!(lie.dim(), 1);
        let da: Vec<BigRational> = a.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
        prop_assert!(lie.contains(&Matrix::diagonal(QQ, &da)));
    }
}

// --------------------------------------------------------------- multrel

const PRIMES: [i64; 3] = [2, 3, 5];

/// `q * zeta^k` with `q > 0` built from `PRIMES` with exponents `v`.
#[derive(Clone, Debug)]
struct Monomial {
    v: [i64; 3],
    k: i64,
}

fn cyclotomic(m: i64) -> NumberField {
    match m {
        2 => NumberField::rationals(),
        4 => NumberField::from_i64(&[1, 0, 1]),
        6 => NumberField::from_i64(&[1, -1, 1]),
        8 => NumberField::from_i64(&[1, 0, 0, 0, 1]),
        12 => NumberField::from_i64(&[1, 0, -1, 0, 1]),
        _ => unreachable!(),
    }
}

/// A primitive `m`-th root of unity in `cyclotomic(m)`.
fn zeta(f: &NumberField, m: i64) -> NfElem {
    if m == 2 {
        f.from_int(-1)
    } else {
        f.generator()
    }
}

fn monomial_value(f: &NumberField, m: i64, x: &Monomial) -> NfElem {
    let mut q = BigRational::one();
    for (p, &e) in PRIMES.iter().zip(&x.v) {
        let pe = num_traits::pow(BigRational::from_integer(BigInt::from(*p)), e.unsigned_abs() as usize);
        q = if e >= 0 { q * pe } else { q / pe };
    }
    f.mul(&f.from_rational(&q), &f.pow(&zeta(f, m), x.k).unwrap())
}

/// Direct test of `prod x_i^{e_i} = 1` by exponent arithmetic.
fn is_relation(m: i64, xs: &[Monomial], e: &[i64]) -> bool {
    let vals = (0..3).all(|j| xs.iter().zip(e).map(|(x, c)| x.v[j] * c).sum::<i64>() == 0);
    vals && xs.iter().zip(e).map(|(x, c)| x.k * c).sum::<i64>().rem_euclid(m) == 0
}

/// Same test by multiplying out in the field.
fn is_relation_in_field(f: &NumberField, vals: &[NfElem], e: &[BigInt]) -> bool {
    let mut p = f.one();
    for (a, x) in vals.iter().zip(e) {
        p = f.mul(&p, &f.pow(a, i64::try_from(x).unwrap()).unwrap());
    }
    f.is_one(&p)
}

fn monomials() -> impl Strategy<Value = (i64, Vec<Monomial>)> {
    (prop::sample::select(vec![2i64, 4, 6, 8, 12]), 1usize..=3).prop_flat_map(|(m, len)| {
        let mono = (prop::array::uniform3(-2i64..=2), 0..m).prop_map(|(v, k)| Monomial { v, k });
        (Just(m), prop::collection::vec(mono, len))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn multiplicative_relations((m, xs) in monomials()) {
        let f = cyclotomic(m);
        let vals: Vec<NfElem> = xs.iter().map(|x| monomial_value(&f, m, x)).collect();
        let r = relations(&f, &vals);
        prop_assert!(r.certified);
        let l = &r.lattice;
        for b in l.basis() {
            prop_assert!(is_relation_in_field(&f, &vals, b));
            let e: Vec<i64> = b.iter().map(|x| i64::try_from(x).unwrap()).collect();
            prop_assert!(is_relation(m, &xs, &e));
        }
        // relations have finite index over the rational valuation kernel
        let vrows: Vec<Vec<i64>> = (0..3).map(|j| xs.iter().map(|x| x.v[j]).collect()).collect();
        prop_assert_eq!(l.rank(), xs.len() - rank_over_q(&vrows, xs.len()));
        // and every small relation is in the lattice
        let bound = (2 * m).min(12);
        for e in in_box(xs.len(), bound) {
            prop_assert_eq!(is_relation(m, &xs, &e), l.contains(&big(&e)), "{:?}", e);
        }
    }

    #[test]
    fn relations_respect_order((m, xs) in monomials(), rot in 0usize..3) {
        let f = cyclotomic(m);
        let vals: Vec<NfElem> = xs.iter().map(|x| monomial_value(&f, m, x)).collect();
        let k = vals.len();
        let perm: Vec<usize> = (0..k).map(|i| (i + rot) % k).collect();
        let permuted: Vec<NfElem> = perm.iter().map(|&i| vals[i].clone()).collect();
        let a = relations(&f, &vals).lattice;
        let b = relations(&f, &permuted).lattice;
        // coordinate i of `b` is coordinate perm[i] of `a`
        let back: Vec<Vec<BigInt>> = b
            .basis()
            .iter()
            .map(|v| {
                let mut w = vec![BigInt::zero(); k];
                for (i, x) in v.iter().enumerate() {
                    w[perm[i]] = x.clone();
                }
                w
            })
            .collect();
        prop_assert_eq!(IntegerLattice::hnf(k, back), a);
    }
}

// ---------------------------------------------------------------- liealg

fn small_matrix(n: usize) -> impl Strategy<Value = Matrix<Rationals>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), n).prop_map(|r| ints(&r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn generated_algebra_invariants(
        gens in (2usize..=3).prop_flat_map(|n| prop::collection::vec(small_matrix(n), 1..=2)),
        seed in any::<u64>(),
    ) {
        let n = gens[0].rows();
        let l = generated_subalgebra(&QQ, n, &gens);
        for g in &gens {
            prop_assert!(l.contains(g));
        }
        let b = l.basis();
        for x in &b {
            for y in &b {
                prop_assert!(l.contains(&x.commutator(y)));
            }
        }
        prop_assert_eq!(normalizer_in(&l, &l), l.clone());
        let h = cartan_subalgebra(&l, seed).unwrap();
        prop_assert!(l.contains_algebra(&h));
        prop_assert!(is_nilpotent_algebra(&h));
        prop_assert_eq!(normalizer_in(&l, &h), h);
    }
}
