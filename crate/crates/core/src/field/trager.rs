//! Factorization over number fields by the norm method.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::integer::{bigint_log2, crt_step, invmod, is_prime_u64, lcm_all, mulmod, symmetric_mod, to_residue};
use super::modp::{self, PolyP};
use super::numfield::NumberField;
use super::poly::Poly;
use super::rational::{integer_poly_to_rational, primitive_integer_poly, Rationals, QQ};
use super::traits::Field;
use super::zassenhaus;
use crate::error::Result;

/// Irreducible factorization with multiplicities; factors are monic.
pub fn factor_over_field<F: Field>(f: &F, p: &Poly<F>) -> Result<Vec<(Poly<F>, usize)>> {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let mut out = Vec::new();
    for (sf, mult) in p.squarefree_decomposition() {
        for g in f.factor_squarefree(&sf)? {
            out.push((g, mult));
        }
    }
    Ok(out)
}

/// `g(x, y)` with integer coefficients: entry `[i][j]` multiplies `x^i y^j`.
type Bivariate = Vec<Vec<BigInt>>;

fn integer_bivariate(k: &NumberField, g: &Poly<NumberField>) -> Bivariate {
    let den = lcm_all(g.coeffs().iter().map(|c| c.denominator()));
    g.coeffs()
        .iter()
        .map(|c| {
            let s = &den / c.denominator();
            c.numerators().iter().map(|n| n * &s).collect::<Vec<_>>()
        })
        .map(|mut v| {
            v.resize(k.degree(), BigInt::zero());
            v
        })
        .collect()
}

/// `res_y(m(y), g(x, y))` modulo `p`.
fn norm_mod_p(m: &[BigInt], g: &Bivariate, p: u64) -> PolyP {
    let mp: PolyP = m.iter().map(|c| to_residue(c, p)).collect();
    let gp: Vec<Vec<u64>> = g.iter().map(|r| r.iter().map(|c| to_residue(c, p)).collect()).collect();
    let d = m.len() - 1;
    let n = g.len() - 1;
    let npts = n * d + 1;
    let xs: Vec<u64> = (0..npts as u64).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&x0| {
            let b: PolyP = (0..d)
                .map(|j| gp.iter().rev().fold(0u64, |acc, row| (mulmod(acc, x0, p) + row[j]) % p))
                .collect();
            modp::resultant(&mp, &modp::trim(b), p)
        })
        .collect();
    interpolate(&xs, &ys, p)
}

// Newton interpolation modulo p.
fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> PolyP {
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = (c[i] + p - c[i - 1]) % p;
            let den = (xs[i] + p - xs[i - j]) % p;
            c[i] = mulmod(num, invmod(den, p), p);
        }
    }
    let mut out = vec![c[n - 1]];
    for i in (0..n - 1).rev() {
        // out = out * (x - xs[i]) + c[i]
        let mut next = vec![0u64; out.len() + 1];
        for (k, &o) in out.iter().enumerate() {
            next[k + 1] = (next[k + 1] + o) % p;
            next[k] = (next[k] + p - mulmod(o, xs[i], p)) % p;
        }
        next[0] = (next[0] + c[i]) % p;
        out = next;
    }
    modp::trim(out)
}

// log2 of a bound on the coefficients of res_y(m, g).
fn norm_bound_bits(m: &[BigInt], g: &Bivariate) -> f64 {
    let d = m.len() - 1;
    let mmax = m.iter().map(bigint_log2).fold(f64::NEG_INFINITY, f64::max);
    // roots of m are bounded by 1 + max |m_i|
    let log_r = (mmax.exp2() + 1.0).log2().max(0.0);
    let mut terms = Vec::new();
    for row in g {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                terms.push(bigint_log2(c) + j as f64 * log_r);
            }
        }
    }
    let top = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let sum = top + terms.iter().map(|t| (t - top).exp2()).sum::<f64>().log2();
    d as f64 * sum
}

const PRIME_START: u64 = (1 << 61) - 1;

fn primes_below(start: u64) -> impl Iterator<Item = u64> {
    (1..=start).rev().filter(|&n| n % 2 == 1 && is_prime_u64(n))
}

/// Norm of `g` as an integer polynomial, up to the positive factor
/// `den^deg(K)` where `den` clears denominators of `g`.
fn integer_norm(k: &NumberField, g: &Bivariate) -> Vec<BigInt> {
    let m = k.modulus();
    let bits = norm_bound_bits(m, g) + 2.0;
    let mut acc: Vec<BigInt> = vec![];
    let mut modulus = BigInt::one();
    for p in primes_below(PRIME_START) {
        let np = norm_mod_p(m, g, p);
        let len = g.len().saturating_sub(1) * (m.len() - 1) + 1;
        let mut res = np.clone();
        res.resize(len, 0);
        if acc.is_empty() {
            acc = res.iter().map(|&r| BigInt::from(r)).collect();
        } else {
            acc = acc.iter().zip(&res).map(|(a, &r)| crt_step(a, &modulus, r, p)).collect();
        }
        modulus *= p;
        if bigint_log2(&modulus) > bits {
            break;
        }
    }
    let out: Vec<BigInt> = acc.iter().map(|a| symmetric_mod(a, &modulus)).collect();
    let mut out = out;
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn shift_by_theta(k: &NumberField, g: &Poly<NumberField>, c: i64) -> Poly<NumberField> {
    let a = k.mul(&k.from_int(c), &k.generator());
    g.shift(&a)
}

/// A cheap modular check that the norm of `g` is squarefree.
fn norm_squarefree_mod_p(k: &NumberField, g: &Bivariate) -> bool {
    let m = k.modulus();
    let mut tries = 0;
    for p in primes_below((1 << 31) - 1) {
        let lc = &g.last().unwrap();
        if lc.iter().all(|c| to_residue(c, p) == 0) {
            continue;
        }
        let np = norm_mod_p(m, g, p);
        let expected = (g.len() - 1) * (m.len() - 1);
        if modp::degree(&np) == Some(expected) && modp::is_squarefree(&np, p) {
            return true;
        }
        tries += 1;
        if tries >= 3 {
            return false;
        }
    }
    false
}

/// Irreducible monic factors over `K` of a squarefree polynomial.
pub fn factor_squarefree(k: &NumberField, g: &Poly<NumberField>) -> Result<Vec<Poly<NumberField>>> {
    let n = g.degree().expect("cannot factor the zero polynomial");
    if n == 0 {
        return Ok(vec![]);
    }
    let g = g.monic();
    if n == 1 {
        return Ok(vec![g]);
    }
    if k.degree() == 1 || g.coeffs().iter().all(|c| k.as_rational(c).is_some()) {
        let gq: Poly<Rationals> = g.map_field(&QQ, |c| k.as_rational(c).unwrap());
        let (_, ints) = primitive_integer_poly(&gq);
        let qf = zassenhaus::factor_squarefree(&ints);
        if k.degree() == 1 {
            return Ok(qf
                .iter()
                .map(|f| integer_poly_to_rational(f).monic().map_field(k, |c| k.from_rational(c)))
                .collect());
        }
        let mut out = Vec::new();
        for f in &qf {
            let fk = integer_poly_to_rational(f).monic().map_field(k, |c| k.from_rational(c));
            out.extend(factor_irreducible_over_q(k, &fk)?);
        }
        return Ok(out);
    }
    factor_irreducible_over_q(k, &g)
}

/// For `g` over `K`, finds `c` such that the norm `N` of
/// `g(x - c theta)` is squarefree; returns `c`, the shifted polynomial and
/// `N` as a primitive integer polynomial.
pub(crate) fn squarefree_norm(k: &NumberField, g: &Poly<NumberField>) -> (i64, Poly<NumberField>, Vec<BigInt>) {
    let mut c = 0i64;
    loop {
        let s = shift_by_theta(k, g, -c);
        let b = integer_bivariate(k, &s);
        if norm_squarefree_mod_p(k, &b) {
            let norm = integer_norm(k, &b);
            let (_, prim) = primitive_integer_poly(&integer_poly_to_rational(&norm));
            return (c, s, prim);
        }
        c = if c <= 0 { 1 - c } else { -c };
    }
}

fn factor_irreducible_over_q(k: &NumberField, g: &Poly<NumberField>) -> Result<Vec<Poly<NumberField>>> {
    if g.degree() == Some(1) {
        return Ok(vec![g.monic()]);
    }
    // shifted(x) = g(x - c theta)
    let (c, shifted, prim) = squarefree_norm(k, g);
    let factors = zassenhaus::factor_squarefree(&prim);
    if factors.len() == 1 {
        return Ok(vec![g.monic()]);
    }
    let back = k.mul(&k.from_int(c), &k.generator());
    let mut rest = shifted.clone();
    let mut out = Vec::new();
    for f in &factors {
        if rest.degree() == Some(0) {
            break;
        }
        let fk = integer_poly_to_rational(f).map_field(k, |q: &BigRational| k.from_rational(q));
        let h = rest.gcd(&fk);
        if h.degree().unwrap_or(0) == 0 {
            continue;
        }
        rest = rest.exact_div(&h);
        out.push(h.shift(&back).monic());
    }
    debug_assert!(rest.degree() == Some(0));
    Ok(out)
}
