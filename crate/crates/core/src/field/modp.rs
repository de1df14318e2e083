//! Dense polynomials over a prime field `F_p`, `p < 2^62`, used by the
//! modular factorization and norm computations.

use rand::Rng;

use super::integer::{invmod, mulmod};

pub type PolyP = Vec<u64>;

pub fn trim(mut a: PolyP) -> PolyP {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let n = a.len().max(b.len());
    let v = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + y) % p
        })
        .collect();
    trim(v)
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let n = a.len().max(b.len());
    let v = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(v)
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    let pp = p as u128;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] = (acc[i + j] + x as u128 * y as u128) % pp;
        }
    }
    trim(acc.into_iter().map(|v| v as u64).collect())
}

pub fn scale(a: &[u64], s: u64, p: u64) -> PolyP {
    trim(a.iter().map(|&x| mulmod(x, s, p)).collect())
}

pub fn monic(a: &[u64], p: u64) -> PolyP {
    match a.last() {
        None => vec![],
        Some(&c) => scale(a, invmod(c, p), p),
    }
}

pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (PolyP, PolyP) {
    let db = degree(b).expect("division by zero polynomial");
    if a.len() <= db {
        return (vec![], a.to_vec());
    }
    let inv = invmod(*b.last().unwrap(), p);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = mulmod(r[k + db], inv, p);
        if c == 0 {
            continue;
        }
        for (i, &bi) in b.iter().enumerate() {
            r[k + i] = (r[k + i] + p - mulmod(c, bi, p)) % p;
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> PolyP {
    divrem(a, b, p).1
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let mut a = monic(a, p);
    let mut b = monic(b, p);
    while !b.is_empty() {
        let r = monic(&rem(&a, &b, p), p);
        a = b;
        b = r;
    }
    a
}

/// `(g, s, t)` with `s*a + t*b = g` monic.
pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (PolyP, PolyP, PolyP) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = invmod(*r0.last().unwrap(), p);
    (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
}

pub fn derivative(a: &[u64], p: u64) -> PolyP {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, i as u64 % p, p))
            .collect(),
    )
}

pub fn is_squarefree(a: &[u64], p: u64) -> bool {
    let d = derivative(a, p);
    if d.is_empty() {
        return degree(a).unwrap_or(0) == 0;
    }
    degree(&gcd(a, &d, p)) == Some(0)
}

pub fn powmod_poly(base: &[u64], mut e: u128, m: &[u64], p: u64) -> PolyP {
    let mut acc = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        e >>= 1;
        if e > 0 {
            b = rem(&mul(&b, &b, p), m, p);
        }
    }
    acc
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs `(product of all irreducible factors of degree d, d)`.
pub fn distinct_degree(f: &[u64], p: u64) -> Vec<(PolyP, usize)> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0;
    while degree(&f).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = powmod_poly(&h, p as u128, &f, p);
        let g = gcd(&f, &sub(&h, &x, p), p);
        if degree(&g).unwrap_or(0) > 0 {
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((g, d));
        }
    }
    if degree(&f).unwrap_or(0) > 0 {
        let df = degree(&f).unwrap();
        out.push((f, df));
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of irreducibles of degree `d`
/// (odd `p`).
pub fn equal_degree<R: Rng>(f: &[u64], d: usize, p: u64, rng: &mut R) -> Vec<PolyP> {
    let n = degree(f).unwrap();
    if n == d {
        return vec![f.to_vec()];
    }
    let exp = (num_traits::pow(p as u128, d) - 1) / 2;
    loop {
        let a: PolyP = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if degree(&a).unwrap_or(0) == 0 {
            continue;
        }
        let g = gcd(f, &a, p);
        let g = if degree(&g).unwrap_or(0) > 0 {
            g
        } else {
            let b = powmod_poly(&a, exp, f, p);
            gcd(f, &sub(&b, &[1], p), p)
        };
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let h = divrem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&monic(&h, p), d, p, rng));
            return out;
        }
    }
}

/// Irreducible monic factors of a monic squarefree polynomial mod `p`.
pub fn factor_squarefree<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Vec<PolyP> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        out.extend(equal_degree(&g, d, p, rng));
    }
    out.sort();
    out
}

/// `res(a, b)` modulo `p` by the Euclidean remainder sequence.
pub fn resultant(a: &[u64], b: &[u64], p: u64) -> u64 {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let mut acc = 1u64;
    loop {
        let da = degree(&a).unwrap();
        let db = degree(&b).unwrap();
        if db == 0 {
            return mulmod(acc, super::integer::powmod(b[0], da as u64, p), p);
        }
        if da == 0 {
            return mulmod(acc, super::integer::powmod(a[0], db as u64, p), p);
        }
        let r = rem(&a, &b, p);
        if r.is_empty() {
            return 0;
        }
        let dr = degree(&r).unwrap();
        if (da * db) % 2 == 1 {
            acc = (p - acc) % p;
        }
        let lb = *b.last().unwrap();
        acc = mulmod(acc, super::integer::powmod(lb, (da - dr) as u64, p), p);
        a = b;
        b = r;
    }
}
