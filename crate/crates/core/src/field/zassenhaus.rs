//! Factorization of squarefree integer polynomials: modular factorization,
//! multifactor Hensel lifting and recombination of lifted factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::integer::{gcd_all, is_prime_u64, symmetric_mod, to_residue};
use super::modp::{self, PolyP};

type ZPoly = Vec<BigInt>;

fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn zadd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect())
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect())
}

fn mulmod_m(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    reduce(&zmul(a, b), m)
}

/// Division by a monic `b` modulo `m`.
fn divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let mut r = reduce(a, m);
    let db = b.len() - 1;
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] = (&r[i + j] - &c * bj).mod_floor(m);
        }
        q[i] = c;
    }
    (trim(q), trim(r))
}

fn lift_p(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn to_p(a: &[BigInt], p: u64) -> PolyP {
    modp::trim(a.iter().map(|c| to_residue(c, p)).collect())
}

/// Lifts `f = g h (mod p)` with `f, g, h` monic to a factorization modulo
/// `p^(2^j) >= target`.
fn hensel_two(f: &ZPoly, g: &PolyP, h: &PolyP, p: u64, target: &BigInt) -> (ZPoly, ZPoly, BigInt) {
    let (one, s, t) = modp::ext_gcd(g, h, p);
    debug_assert_eq!(one, vec![1]);
    let (mut g, mut h, mut s, mut t) = (lift_p(g), lift_p(h), lift_p(&s), lift_p(&t));
    let mut m = BigInt::from(p);
    while &m < target {
        m = &m * &m;
        let e = reduce(&zsub(f, &zmul(&g, &h)), &m);
        let (q, r) = divrem_monic(&zmul(&s, &e), &h, &m);
        let g2 = reduce(&zadd(&zadd(&g, &zmul(&t, &e)), &zmul(&q, &g)), &m);
        let h2 = reduce(&zadd(&h, &r), &m);
        let b = reduce(&zsub(&zadd(&zmul(&s, &g2), &zmul(&t, &h2)), &[BigInt::one()]), &m);
        let (c, d) = divrem_monic(&zmul(&s, &b), &h2, &m);
        s = reduce(&zsub(&s, &d), &m);
        t = reduce(&zsub(&zsub(&t, &zmul(&t, &b)), &zmul(&c, &g2)), &m);
        g = g2;
        h = h2;
    }
    (g, h, m)
}

/// Monic factors modulo `p^k >= target` of a monic `f`, lifting the monic
/// modular factors `facs` by recursive halving.
fn hensel_multi(f: &ZPoly, facs: &[PolyP], p: u64, target: &BigInt) -> (Vec<ZPoly>, BigInt) {
    if facs.len() == 1 {
        let mut m = BigInt::from(p);
        while &m < target {
            m = &m * &m;
        }
        return (vec![reduce(f, &m)], m);
    }
    let (left, right) = facs.split_at(facs.len() / 2);
    let prod = |fs: &[PolyP]| fs.iter().fold(vec![1u64], |acc, x| modp::mul(&acc, x, p));
    let (g, h, m) = hensel_two(f, &prod(left), &prod(right), p, target);
    let (mut a, _) = hensel_multi(&g, left, p, &m);
    let (b, _) = hensel_multi(&h, right, p, &m);
    let a_red: Vec<ZPoly> = a.drain(..).map(|x| reduce(&x, &m)).collect();
    let mut out = a_red;
    out.extend(b.into_iter().map(|x| reduce(&x, &m)));
    (out, m)
}

fn primitive(a: &[BigInt]) -> ZPoly {
    let mut g = gcd_all(a.iter());
    if a.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}

/// Exact quotient `a / b` over the integers, if `b` divides `a`.
fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let (c, rem) = r[i + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    r.iter().all(|c| c.is_zero()).then_some(q)
}

// 2^n * ||f||_2, bounding the coefficients of any integer factor of f.
fn factor_coefficient_bound(f: &[BigInt]) -> BigInt {
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    (norm2.sqrt() + 1u32) << (f.len() - 1)
}

fn choose_prime(f: &[BigInt]) -> (u64, Vec<PolyP>) {
    let lc = f.last().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(u64, Vec<PolyP>)> = None;
    let mut tried = 0;
    let mut p = 3u64;
    while tried < 8 {
        p += 2;
        if !is_prime_u64(p) || to_residue(lc, p) == 0 {
            continue;
        }
        let fp = modp::monic(&to_p(f, p), p);
        if !modp::is_squarefree(&fp, p) {
            continue;
        }
        tried += 1;
        let facs = modp::factor_squarefree(&fp, p, &mut rng);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            let one = facs.len() == 1;
            best = Some((p, facs));
            if one {
                break;
            }
        }
    }
    best.unwrap()
}

/// Irreducible factors over `Z` of a primitive squarefree polynomial with
/// positive leading coefficient; coefficients from the constant term up.
pub fn factor_squarefree(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let f = trim(f.to_vec());
    if f.len() <= 2 {
        return vec![primitive(&f)];
    }
    let (p, facs) = choose_prime(&f);
    if facs.len() == 1 {
        return vec![primitive(&f)];
    }
    let lc = f.last().unwrap().clone();
    let target = factor_coefficient_bound(&f) * lc.abs() * 2;
    // make f monic modulo the lifting modulus
    let mut m = BigInt::from(p);
    while m < target {
        m = &m * &m;
    }
    let lc_inv = lc.modinv(&m).expect("leading coefficient is a unit");
    let fm = reduce(&f.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(), &m);
    let (lifted, m) = hensel_multi(&fm, &facs, p, &target);
    recombine(f, lifted, &m)
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, m: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut k = 1;
    while 2 * k <= lifted.len() {
        let mut found = false;
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            let lc = f.last().unwrap().clone();
            // constant term pretest
            let f0 = &f[0];
            let c0 = subset
                .iter()
                .fold(lc.clone(), |acc, &i| (acc * &lifted[i][0]).mod_floor(m));
            let pass = f0.is_zero() || {
                let c0 = symmetric_mod(&c0, m);
                !c0.is_zero() && (&lc * f0).is_multiple_of(&c0)
            };
            if pass {
                let prod = subset
                    .iter()
                    .fold(vec![lc.clone()], |acc, &i| mulmod_m(&acc, &lifted[i], m));
                let cand: ZPoly = prod.iter().map(|c| symmetric_mod(c, m)).collect();
                let g = primitive(&cand);
                if let Some(q) = exact_div(&f, &g) {
                    out.push(g);
                    f = q;
                    let mut idx = subset.clone();
                    idx.sort_unstable_by(|a, b| b.cmp(a));
                    for i in idx {
                        lifted.remove(i);
                    }
                    found = true;
                    break;
                }
            }
            if !next_subset(&mut subset, lifted.len()) {
                break;
            }
        }
        if !found {
            k += 1;
        }
    }
    if f.len() > 1 {
        out.push(primitive(&f));
    }
    out
}

fn next_subset(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    for i in (0..k).rev() {
        if s[i] < n - k + i {
            s[i] += 1;
            for j in i + 1..k {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
