//! Integer helpers shared by the factorization and relation code.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn lcm_all<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, x| {
        if x.is_zero() {
            acc
        } else {
            acc.lcm(x)
        }
    })
}

pub fn gcd_all<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    it.into_iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Common denominator and integer numerators of a rational vector.
pub fn clear_denominators(v: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let den = lcm_all(v.iter().map(|q| q.denom()));
    let num = v
        .iter()
        .map(|q| q.numer() * (&den / q.denom()))
        .collect();
    (num, den)
}

/// Largest `k` with `b^k | n`, and the cofactor. `b > 1`, `n != 0`.
pub fn valuation(n: &BigInt, b: &BigInt) -> (u64, BigInt) {
    let mut k = 0;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(b);
        if !r.is_zero() {
            return (k, rest);
        }
        rest = q;
        k += 1;
    }
}

/// A pairwise coprime set of integers `> 1` such that every input is, up
/// to sign, a product of powers of its members. Built by gcd refinement,
/// so no integer factorization is needed.
pub fn coprime_base(values: &[BigInt]) -> Vec<BigInt> {
    let mut set: Vec<BigInt> = Vec::new();
    for v in values {
        let a = v.abs();
        if a > BigInt::one() && !set.contains(&a) {
            set.push(a);
        }
    }
    loop {
        let mut refined = None;
        'outer: for i in 0..set.len() {
            for j in (i + 1)..set.len() {
                let g = set[i].gcd(&set[j]);
                if !g.is_one() {
                    refined = Some((i, j, g));
                    break 'outer;
                }
            }
        }
        let Some((i, j, g)) = refined else { break };
        let a = set[i].clone() / &g;
        let b = set[j].clone() / &g;
        set.remove(j);
        set.remove(i);
        for x in [g, a, b] {
            if x > BigInt::one() && !set.contains(&x) {
                set.push(x);
            }
        }
    }
    set.sort();
    set
}

/// Exponent vector of a nonzero rational over a coprime base (signed
/// valuations; the sign of `q` is ignored).
pub fn rational_valuations(q: &BigRational, base: &[BigInt]) -> Vec<i64> {
    base.iter()
        .map(|b| {
            let (vn, _) = valuation(q.numer(), b);
            let (vd, _) = valuation(q.denom(), b);
            vn as i64 - vd as i64
        })
        .collect()
}

pub fn bigint_log2(n: &BigInt) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = n.bits();
    if bits <= 1000 {
        return n.abs().to_f64().unwrap_or(f64::MAX).log2();
    }
    let shift = bits - 64;
    let top: BigInt = n.abs() >> shift;
    top.to_f64().unwrap().log2() + shift as f64
}

/// Symmetric residue of `a` modulo `m` in `(-m/2, m/2]`.
pub fn symmetric_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let mut r = a.mod_floor(m);
    if &r * 2 > *m {
        r -= m;
    }
    r
}

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    powmod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn next_prime_u64(mut n: u64) -> u64 {
    loop {
        n += 1;
        if is_prime_u64(n) {
            return n;
        }
    }
}

pub fn to_residue(a: &BigInt, p: u64) -> u64 {
    let r = a.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap()
}

pub fn rational_residue(q: &BigRational, p: u64) -> Option<u64> {
    let d = to_residue(q.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mulmod(to_residue(q.numer(), p), invmod(d, p), p))
}

/// Chinese remaindering of `(r mod p)` into `(acc mod m)`; returns the new
/// residue modulo `m*p` in `[0, m*p)`.
pub fn crt_step(acc: &BigInt, m: &BigInt, r: u64, p: u64) -> BigInt {
    let acc_p = to_residue(acc, p);
    let m_p = to_residue(m, p);
    let diff = (r + p - acc_p) % p;
    let t = mulmod(diff, invmod(m_p, p), p);
    acc + m * BigInt::from(t)
}

pub fn sign_of(a: &BigInt) -> i32 {
    match a.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coprime_base_refines_shared_factors() {
        let vals: Vec<BigInt> = [12, 18, 35].iter().map(|&x| BigInt::from(x)).collect();
        let base = coprime_base(&vals);
        for i in 0..base.len() {
            for j in (i + 1)..base.len() {
                assert!(base[i].gcd(&base[j]).is_one());
            }
        }
        for v in &vals {
            let mut rest = v.clone();
            for b in &base {
                rest = valuation(&rest, b).1;
            }
            assert!(rest.abs().is_one());
        }
    }

    #[test]
    fn miller_rabin_small_cases() {
        let primes: Vec<u64> = (0..100).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(&primes[..10], &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64(561));
    }

    #[test]
    fn crt_reconstructs() {
        let x = BigInt::from(123456789012345u64);
        let primes = [1_000_000_007u64, 998_244_353];
        let mut acc = BigInt::zero();
        let mut m = BigInt::one();
        for p in primes {
            acc = crt_step(&acc, &m, to_residue(&x, p), p);
            m *= p;
        }
        assert_eq!(acc, x);
    }
}
