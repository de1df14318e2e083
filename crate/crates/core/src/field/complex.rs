//! Multiprecision binary floating point and complex roots of integer
//! polynomials, used for numerical embeddings of number fields.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// `m * 2^e` with at most `prec` significant bits.
#[derive(Clone, Debug)]
pub struct Real {
    m: BigInt,
    e: i64,
    prec: u32,
}

fn bits(n: &BigInt) -> i64 {
    n.bits() as i64
}

impl Real {
    pub fn zero(prec: u32) -> Self {
        Real { m: BigInt::zero(), e: 0, prec }
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Self {
        Real { m: n.clone(), e: 0, prec }.norm()
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::from_bigint(&BigInt::from(n), prec)
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        Self::from_bigint(q.numer(), prec).div(&Self::from_bigint(q.denom(), prec))
    }

    pub fn from_f64(x: f64, prec: u32) -> Self {
        if x == 0.0 {
            return Self::zero(prec);
        }
        let (mant, exp) = frexp(x);
        let m = (mant * (1u64 << 53) as f64) as i64;
        Real { m: BigInt::from(m), e: exp as i64 - 53, prec }.norm()
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Real { m: self.m.clone(), e: self.e, prec }.norm()
    }

    fn norm(mut self) -> Self {
        let b = bits(&self.m);
        let p = self.prec as i64;
        if b > p {
            let s = b - p;
            self.m = &self.m >> s as usize;
            self.e += s;
        }
        if self.m.is_zero() {
            self.e = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    /// `floor(log2 |x|)`, or `None` for zero.
    pub fn exponent(&self) -> Option<i64> {
        (!self.m.is_zero()).then(|| bits(&self.m) - 1 + self.e)
    }

    pub fn neg(&self) -> Self {
        Real { m: -&self.m, e: self.e, prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        Real { m: self.m.abs(), e: self.e, prec: self.prec }
    }

    pub fn is_negative(&self) -> bool {
        self.m.is_negative()
    }

    pub fn add(&self, o: &Self) -> Self {
        let prec = self.prec.max(o.prec);
        if self.m.is_zero() {
            return o.with_prec(prec);
        }
        if o.m.is_zero() {
            return self.with_prec(prec);
        }
        let (hi, lo) = if self.exponent() >= o.exponent() { (self, o) } else { (o, self) };
        let gap = hi.exponent().unwrap() - lo.exponent().unwrap();
        if gap > prec as i64 + 4 {
            return hi.with_prec(prec);
        }
        let e = hi.e.min(lo.e);
        let m = (&hi.m << (hi.e - e) as usize) + (&lo.m << (lo.e - e) as usize);
        Real { m, e, prec }.norm()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Real { m: &self.m * &o.m, e: self.e + o.e, prec: self.prec.max(o.prec) }.norm()
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        Real { m: &self.m * k, e: self.e, prec: self.prec }.norm()
    }

    /// Multiplication by `2^k`.
    pub fn ldexp(&self, k: i64) -> Self {
        Real { m: self.m.clone(), e: if self.m.is_zero() { 0 } else { self.e + k }, prec: self.prec }
    }

    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.m.is_zero(), "division by zero");
        let prec = self.prec.max(o.prec);
        let shift = prec as i64 + 2 + bits(&o.m) - bits(&self.m);
        let shift = shift.max(0);
        let m = (&self.m << shift as usize) / &o.m;
        Real { m, e: self.e - shift - o.e, prec }.norm()
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.m.is_negative(), "square root of a negative number");
        if self.m.is_zero() {
            return self.clone();
        }
        let mut shift = (2 * self.prec as i64 + 2 - bits(&self.m)).max(0);
        if (self.e - shift) % 2 != 0 {
            shift += 1;
        }
        let m = (&self.m << shift as usize).sqrt();
        Real { m, e: (self.e - shift) / 2, prec: self.prec }.norm()
    }

    /// Nearest integer (ties toward positive infinity).
    pub fn round(&self) -> BigInt {
        if self.e >= 0 {
            return &self.m << (self.e as usize);
        }
        let sh = (-self.e) as usize;
        let half = BigInt::from(1) << (sh - 1);
        (&self.m + half) >> sh
    }

    pub fn to_f64(&self) -> f64 {
        if self.m.is_zero() {
            return 0.0;
        }
        let b = bits(&self.m);
        let s = (b - 60).max(0);
        let top = (&self.m >> s as usize).to_f64().unwrap();
        let e = self.e + s;
        if e > 2000 {
            return top.signum() * f64::INFINITY;
        }
        if e < -2000 {
            return 0.0;
        }
        top * 2f64.powi(e as i32)
    }

    pub fn cmp(&self, o: &Self) -> Ordering {
        let d = self.sub(o);
        match d.m.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    pub fn max(&self, o: &Self) -> Self {
        if self.cmp(o) == Ordering::Less { o.clone() } else { self.clone() }
    }

    /// Natural logarithm of a positive number.
    pub fn ln(&self) -> Self {
        assert!(self.m.is_positive(), "logarithm of a non-positive number");
        let prec = self.prec;
        let wp = prec + 16;
        // x = y * 2^k with y in [1/2, 1)
        let b = bits(&self.m);
        let k = self.e + b;
        let y = Real { m: self.m.clone(), e: -b, prec: wp };
        let one = Real::from_i64(1, wp);
        let z = y.sub(&one).div(&y.add(&one));
        let lny = atanh_series(&z).ldexp(1);
        lny.add(&ln2(wp).mul_i64(k)).with_prec(prec)
    }
}

fn frexp(x: f64) -> (f64, i32) {
    if x == 0.0 || !x.is_finite() {
        return (x, 0);
    }
    let e = x.abs().log2().floor() as i32 + 1;
    let m = x / 2f64.powi(e);
    // correct rounding at the boundaries
    if m.abs() >= 1.0 {
        (m / 2.0, e + 1)
    } else if m.abs() < 0.5 {
        (m * 2.0, e - 1)
    } else {
        (m, e)
    }
}

// z + z^3/3 + z^5/5 + ... for |z| <= 1/3
fn atanh_series(z: &Real) -> Real {
    let prec = z.prec;
    let z2 = z.mul(z);
    let mut term = z.clone();
    let mut sum = z.clone();
    let mut k = 1i64;
    loop {
        term = term.mul(&z2);
        k += 2;
        let t = term.div(&Real::from_i64(k, prec));
        if t.is_zero() || t.exponent().unwrap() < sum.exponent().unwrap_or(0) - prec as i64 - 4 {
            break;
        }
        sum = sum.add(&t);
    }
    sum
}

fn ln2(prec: u32) -> Real {
    // ln 2 = 2 atanh(1/3)
    let third = Real::from_i64(1, prec).div(&Real::from_i64(3, prec));
    atanh_series(&third).ldexp(1)
}

#[derive(Clone, Debug)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Complex { re: Real::zero(prec), im: Real::zero(prec) }
    }

    pub fn from_real(re: Real) -> Self {
        let p = re.prec();
        Complex { re, im: Real::zero(p) }
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Complex { re: self.re.with_prec(prec), im: self.im.with_prec(prec) }
    }

    pub fn add(&self, o: &Self) -> Self {
        Complex { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Complex { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Complex {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, r: &Real) -> Self {
        Complex { re: self.re.mul(r), im: self.im.mul(r) }
    }

    pub fn norm_sqr(&self) -> Real {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn div(&self, o: &Self) -> Self {
        let d = o.norm_sqr();
        let num = self.mul(&Complex { re: o.re.clone(), im: o.im.neg() });
        Complex { re: num.re.div(&d), im: num.im.div(&d) }
    }

    /// `log2 |z|` as a float, for magnitude comparisons.
    pub fn log2_abs(&self) -> f64 {
        let r = self.norm_sqr();
        match r.exponent() {
            None => f64::NEG_INFINITY,
            Some(e) => {
                let m = r.ldexp(-e).to_f64();
                (m.log2() + e as f64) / 2.0
            }
        }
    }
}

/// Value and derivative of an integer polynomial at `z` (Horner).
pub fn eval_with_derivative(p: &[BigInt], z: &Complex) -> (Complex, Complex) {
    let prec = z.re.prec();
    let mut v = Complex::zero(prec);
    let mut d = Complex::zero(prec);
    for c in p.iter().rev() {
        d = d.mul(z).add(&v);
        v = v.mul(z).add(&Complex::from_real(Real::from_bigint(c, prec)));
    }
    (v, d)
}

/// An approximate root with a radius such that the disk contains a root.
#[derive(Clone, Debug)]
pub struct RootDisk {
    pub center: Complex,
    /// log2 of the inclusion radius.
    pub log2_radius: f64,
}

/// All complex roots of a squarefree integer polynomial, to roughly `prec`
/// bits, each with an inclusion radius `n |p(z)| / |p'(z)|`.
pub fn complex_roots(p: &[BigInt], prec: u32) -> Option<Vec<RootDisk>> {
    let n = p.len() - 1;
    if n == 0 {
        return Some(vec![]);
    }
    let low = 80;
    let lc = Real::from_bigint(p.last().unwrap(), low);
    // Cauchy bound
    let mut bound = Real::zero(low);
    for c in &p[..n] {
        bound = bound.max(&Real::from_bigint(c, low).abs().div(&lc.abs()));
    }
    let radius = bound.add(&Real::from_i64(1, low));
    let mut z: Vec<Complex> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            let r = radius.mul(&Real::from_f64(0.5, low));
            Complex::new(r.mul(&Real::from_f64(ang.cos(), low)), r.mul(&Real::from_f64(ang.sin(), low)))
        })
        .collect();
    // Aberth iteration at low precision
    let mut converged = false;
    for _ in 0..4000 {
        let mut moved = f64::NEG_INFINITY;
        for i in 0..n {
            let (v, d) = eval_with_derivative(p, &z[i]);
            if v.is_zero() {
                continue;
            }
            let ratio = v.div(&d);
            let mut s = Complex::zero(low);
            for j in 0..n {
                if j != i {
                    let diff = z[i].sub(&z[j]);
                    if diff.is_zero() {
                        continue;
                    }
                    s = s.add(&Complex::from_real(Real::from_i64(1, low)).div(&diff));
                }
            }
            let denom = Complex::from_real(Real::from_i64(1, low)).sub(&ratio.mul(&s));
            let step = if denom.is_zero() { ratio } else { ratio.div(&denom) };
            let rel = step.log2_abs() - z[i].log2_abs().max(0.0);
            moved = moved.max(rel);
            z[i] = z[i].sub(&step);
        }
        if moved < -(low as f64) + 12.0 {
            converged = true;
            break;
        }
    }
    if !converged {
        return None;
    }
    // Newton refinement to the working precision
    let mut out = Vec::with_capacity(n);
    for zi in z {
        let mut w = zi.with_prec(prec + 32);
        let mut cur = low;
        loop {
            cur = (cur * 2).min(prec + 32);
            w = w.with_prec(cur);
            for _ in 0..3 {
                let (v, d) = eval_with_derivative(p, &w);
                if v.is_zero() || d.is_zero() {
                    break;
                }
                w = w.sub(&v.div(&d));
            }
            if cur >= prec + 32 {
                break;
            }
        }
        let (v, d) = eval_with_derivative(p, &w);
        let log2_radius = if v.is_zero() {
            -(prec as f64) * 2.0 + w.log2_abs()
        } else if d.is_zero() {
            f64::INFINITY
        } else {
            (n as f64).log2() + v.log2_abs() - d.log2_abs()
        };
        out.push(RootDisk { center: w.with_prec(prec), log2_radius });
    }
    // the disks must be pairwise disjoint for the roots to be distinct
    for i in 0..n {
        for j in i + 1..n {
            let dist = out[i].center.sub(&out[j].center).log2_abs();
            let r = out[i].log2_radius.max(out[j].log2_radius) + 1.0;
            if dist <= r {
                return None;
            }
        }
    }
    Some(out)
}

/// Evaluates a polynomial with rational coefficients.
pub fn eval_rational(p: &[BigRational], z: &Complex) -> Complex {
    let prec = z.re.prec();
    let mut v = Complex::zero(prec);
    for c in p.iter().rev() {
        v = v.mul(z).add(&Complex::from_real(Real::from_rational(c, prec)));
    }
    v
}

/// Upper bound on `log2 |p'(w)|` for `|w - z| <= r` with `r <= 1`, for
/// rational `p`.
pub fn log2_derivative_bound(p: &[BigRational], z: &Complex) -> f64 {
    let az = z.log2_abs().exp2() + 1.0;
    let mut acc = 0.0f64;
    for (k, c) in p.iter().enumerate().skip(1) {
        let c = c.to_f64().unwrap_or(f64::MAX).abs();
        acc += c * k as f64 * az.powi(k as i32 - 1);
    }
    if acc == 0.0 {
        f64::NEG_INFINITY
    } else {
        acc.log2()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12 * (1.0 + b.abs())
    }

    #[test]
    fn arithmetic_and_log() {
        let p = 200;
        let two = Real::from_i64(2, p);
        assert!(close(two.sqrt().to_f64(), 2f64.sqrt()));
        assert!(close(two.ln().to_f64(), 2f64.ln()));
        let x = Real::from_f64(0.37, p);
        assert!(close(x.ln().to_f64(), 0.37f64.ln()));
        let third = Real::from_rational(&BigRational::new(1.into(), 3.into()), p);
        assert!(close(third.mul_i64(3).to_f64(), 1.0));
        // ln is additive to high precision
        let a = Real::from_i64(12345, p);
        let b = Real::from_i64(678, p);
        let lhs = a.mul(&b).ln();
        let rhs = a.ln().add(&b.ln());
        assert!(lhs.sub(&rhs).exponent().unwrap_or(-1000) < -180);
    }

    #[test]
    fn roots_of_cyclotomic_and_real() {
        let p: Vec<BigInt> = [1, 1, 1, 1, 1].iter().map(|&c| BigInt::from(c)).collect();
        let roots = complex_roots(&p, 128).unwrap();
        assert_eq!(roots.len(), 4);
        for r in &roots {
            assert!(r.center.log2_abs().abs() < 1e-30);
            assert!(r.log2_radius < -100.0);
        }
        let q: Vec<BigInt> = [-2, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        let roots = complex_roots(&q, 128).unwrap();
        let mut re: Vec<f64> = roots.iter().map(|r| r.center.re.to_f64()).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!(close(re[0], -2f64.sqrt()) && close(re[1], 2f64.sqrt()));
    }

    #[test]
    fn large_coefficients() {
        // (x - 10^30)(x + 3)
        let big = BigInt::from(10).pow(30);
        let p: Vec<BigInt> = vec![-(&big * BigInt::from(3)), BigInt::from(3) - &big, BigInt::from(1)];
        let roots = complex_roots(&p, 160).unwrap();
        let mut logs: Vec<f64> = roots.iter().map(|r| r.center.log2_abs()).collect();
        logs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((logs[0] - 3f64.log2()).abs() < 1e-9);
        assert!((logs[1] - 30.0 * 10f64.log2()).abs() < 1e-9);
    }
}
