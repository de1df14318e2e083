use std::fmt;

use super::traits::Field;

/// Dense univariate polynomial over an exact field, lowest degree first.
/// Trailing zero coefficients are always trimmed.
#[derive(Clone, PartialEq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_ints(field: F, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&x| field.from_int(x)).collect();
        Poly::new(field, c)
    }

    pub fn zero(field: F) -> Self {
        Poly { field, coeffs: vec![] }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Poly { field, coeffs: vec![one] }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Poly::new(field, vec![c])
    }

    /// `x - a`
    pub fn linear(field: F, a: &F::Elem) -> Self {
        let c = vec![field.neg(a), field.one()];
        Poly { field, coeffs: c }
    }

    pub fn monomial(field: F, c: F::Elem, k: usize) -> Self {
        let mut v = vec![field.zero(); k + 1];
        v[k] = c;
        Poly::new(field, v)
    }

    pub fn x(field: F) -> Self {
        Self::monomial(field.clone(), field.one(), 1)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| self.field.is_one(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(f.clone(), c)
    }

    pub fn neg(&self) -> Self {
        let c = self.coeffs.iter().map(|a| self.field.neg(a)).collect();
        Poly::new(self.field.clone(), c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let mut c = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(&c[i + j], &f.mul(a, b));
            }
        }
        Poly::new(f.clone(), c)
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let c = self.coeffs.iter().map(|a| self.field.mul(a, s)).collect();
        Poly::new(self.field.clone(), c)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Poly::one(self.field.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = d.degree().expect("division by the zero polynomial");
        let inv_lc = f.inv(d.lc().unwrap()).unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(f.clone()), self.clone());
        }
        let mut q = vec![f.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(&r[k + dd], &inv_lc);
            if f.is_zero(&c) {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] = f.sub(&r[k + i], &f.mul(&c, di));
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(f.clone(), q), Poly::new(f.clone(), r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact division; the caller guarantees divisibility.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(c) => self.scale(&self.field.inv(c).unwrap()),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let f = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f.clone()), Poly::zero(f.clone()));
        let (mut t0, mut t1) = (Poly::zero(f.clone()), Poly::one(f.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.lc().cloned() {
            None => (r0, s0, t0),
            Some(c) => {
                let ci = f.inv(&c).unwrap();
                (r0.scale(&ci), s0.scale(&ci), t0.scale(&ci))
            }
        }
    }

    /// Inverse of `self` modulo `m`, if they are coprime.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        (g.degree() == Some(0)).then(|| s.rem(m))
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| f.mul(a, &f.from_int(i as i64)))
            .collect();
        Poly::new(f.clone(), c)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `self(g) mod m`
    pub fn compose_mod(&self, g: &Self, m: &Self) -> Self {
        let mut acc = Poly::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(self.field.clone(), c.clone())).rem(m);
        }
        acc
    }

    /// `self(x + a)`
    pub fn shift(&self, a: &F::Elem) -> Self {
        let lin = Poly::new(self.field.clone(), vec![a.clone(), self.field.one()]);
        let mut acc = Poly::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(self.field.clone(), c.clone()));
        }
        acc
    }

    /// Product of the distinct irreducible factors (characteristic zero).
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }

    /// Yun's squarefree decomposition: monic pairwise coprime `(a_i, i)`
    /// with `self = lc * prod a_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let p = self.monic();
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        let mut b = p.exact_div(&a0);
        let mut c = dp.exact_div(&a0);
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            b = b.exact_div(&a);
            c = d.exact_div(&a);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    pub fn map_field<G: Field>(&self, to: &G, f: impl Fn(&F::Elem) -> G::Elem) -> Poly<G> {
        Poly::new(to.clone(), self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = self.field.format_elem(c);
            match i {
                0 => write!(f, "{}", cs)?,
                1 => write!(f, "({})*x", cs)?,
                _ => write!(f, "({})*x^{}", cs, i)?,
            }
        }
        Ok(())
    }
}
