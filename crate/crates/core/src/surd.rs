//! Multi-quadratic number fields ℚ(√d₁, …, √d_k) and their Gaussian
//! extension by `i`.
//!
//! A [`Surd`] is a finite sum `Σ q_s √s` over squarefree positive integers
//! `s`. Since square roots of distinct squarefree integers are linearly
//! independent over ℚ, this representation is canonical, and no ambient
//! tower has to be fixed in advance: products of surds reduce by
//! `√s·√t = g·√(st/g²)` with `g = gcd(s, t)`.

use crate::error::{Error, Result};
use crate::linalg::{Field, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Element of ℚ(√2, √3, √5, …).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Surd {
    terms: BTreeMap<u64, Q>,
}

impl Surd {
    pub fn rational(x: Q) -> Self {
        Self::term(x, 1)
    }

    /// `c·√s` for squarefree `s`.
    pub fn term(c: Q, s: u64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(s, c);
        }
        Surd { terms }
    }

    /// Exact `√x` for a non-negative rational.
    pub fn sqrt(x: &Q) -> Result<Self> {
        if x.is_negative() {
            return Err(Error::Input(format!("square root of negative rational {x}")));
        }
        if x.is_zero() {
            return Ok(Surd::default());
        }
        // √(n/d) = √(n·d) / d
        let nd = x.numer() * x.denom();
        let (outside, inside) = split_square(&nd)?;
        Ok(Surd::term(Q::new(outside, x.denom().clone()), inside))
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&s| s == 1)
    }

    /// The rational value, if there is no irrational part.
    pub fn to_rational(&self) -> Option<Q> {
        if self.is_rational() {
            Some(self.terms.get(&1).cloned().unwrap_or_else(Q::zero))
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Q)> {
        self.terms.iter().map(|(&s, c)| (s, c))
    }

    /// Floating-point value.
    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&s, c)| c.to_f64().unwrap_or(f64::NAN) * (s as f64).sqrt())
            .sum()
    }

    /// Primes occurring under some radical.
    pub fn radical_primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.terms.keys().flat_map(|&s| prime_factors(s)).collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    /// The automorphism `√p ↦ −√p`.
    fn conjugate(&self, p: u64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&s, c)| (s, if s % p == 0 { -c.clone() } else { c.clone() }))
            .collect();
        Surd { terms }
    }

    fn insert(&mut self, s: u64, c: Q) {
        let e = self.terms.entry(s).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&s);
        }
    }
}

impl Field for Surd {
    fn nil() -> Self {
        Surd::default()
    }
    fn unit() -> Self {
        Surd::rational(Q::one())
    }
    fn is_nil(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&s, c) in &other.terms {
            out.insert(s, c.clone());
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&s, c) in &other.terms {
            out.insert(s, -c.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Surd::default();
        for (&s, a) in &self.terms {
            for (&t, b) in &other.terms {
                let g = s.gcd(&t);
                out.insert((s / g) * (t / g), a * b * Q::from_integer(BigInt::from(g)));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Surd {
            terms: self.terms.iter().map(|(&s, c)| (s, -c.clone())).collect(),
        }
    }
    fn inv(&self) -> Self {
        assert!(!self.is_nil(), "inverse of zero");
        // Multiply by conjugates until the norm is rational:
        // x⁻¹ = σ(x) · (x·σ(x))⁻¹ and x·σ(x) lies in a smaller field.
        match self.radical_primes().first() {
            None => Surd::rational(self.to_rational().unwrap().recip()),
            Some(&p) => {
                let conj = self.conjugate(p);
                let norm = self.mul(&conj);
                conj.mul(&norm.inv())
            }
        }
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(&s, c)| (c, s, false)))
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Q, u64, bool)>,
) -> fmt::Result {
    let mut first = true;
    for (c, s, imag) in terms {
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
        }
        first = false;
        let mut parts = Vec::new();
        if !(mag.is_one() && (s != 1 || imag)) {
            parts.push(mag.to_string());
        }
        if s != 1 {
            parts.push(format!("√{s}"));
        }
        if imag {
            parts.push("i".to_string());
        }
        write!(f, "{}", parts.join("·"))?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// `re + im·i` with multi-quadratic real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Complex {
    pub re: Surd,
    pub im: Surd,
}

impl Complex {
    pub fn new(re: Surd, im: Surd) -> Self {
        Complex { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_nil() && self.im.is_nil()
    }

    pub fn add(&self, o: &Self) -> Self {
        Complex::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Complex::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Complex::new(
            self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        )
    }

    pub fn scale(&self, s: &Surd) -> Self {
        Complex::new(self.re.mul(s), self.im.mul(s))
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = self.re.terms.iter().map(|(&s, c)| (c, s, false));
        let im = self.im.terms.iter().map(|(&s, c)| (c, s, true));
        write_terms(f, re.chain(im))
    }
}

/// Split a positive integer as `a²·s` with `s` squarefree.
fn split_square(n: &BigInt) -> Result<(BigInt, u64)> {
    let mut rest = n.clone();
    let mut outside = BigInt::one();
    let mut inside: u64 = 1;
    let mut p: u64 = 2;
    while BigInt::from(p) * BigInt::from(p) <= rest {
        if p > 1_000_000 {
            break;
        }
        let bp = BigInt::from(p);
        let mut e = 0;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        for _ in 0..e / 2 {
            outside *= &bp;
        }
        if e % 2 == 1 {
            inside = inside
                .checked_mul(p)
                .ok_or_else(|| Error::Resource("radicand exceeds 64 bits".into()))?;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let root = rest.sqrt();
        if &root * &root == rest {
            outside *= root;
        } else {
            let r = rest
                .to_u64()
                .ok_or_else(|| Error::Resource("radicand exceeds 64 bits".into()))?;
            inside = inside
                .checked_mul(r)
                .ok_or_else(|| Error::Resource("radicand exceeds 64 bits".into()))?;
        }
    }
    Ok((outside, inside))
}

fn prime_factors(mut s: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= s {
        if s.is_multiple_of(p) {
            out.push(p);
            while s.is_multiple_of(p) {
                s /= p;
            }
        }
        p += 1;
    }
    if s > 1 {
        out.push(s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, qr};

    fn s(c: Q, r: u64) -> Surd {
        Surd::term(c, r)
    }

    #[test]
    fn sqrt_extracts_squares() {
        assert_eq!(Surd::sqrt(&q(8)).unwrap(), s(q(2), 2));
        assert_eq!(Surd::sqrt(&qr(1, 2)).unwrap(), s(qr(1, 2), 2));
        assert_eq!(Surd::sqrt(&qr(9, 4)).unwrap(), Surd::rational(qr(3, 2)));
        assert_eq!(Surd::sqrt(&qr(2, 5)).unwrap(), s(qr(1, 5), 10));
    }

    #[test]
    fn products_reduce() {
        let r6 = s(q(1), 2).mul(&s(q(1), 3));
        assert_eq!(r6, s(q(1), 6));
        assert_eq!(r6.mul(&s(q(1), 2)), s(q(2), 3));
    }

    #[test]
    fn inverse_of_mixed_element() {
        // 1 + √2 + √3
        let x = Surd::rational(q(1)).add(&s(q(1), 2)).add(&s(q(1), 3));
        assert_eq!(x.mul(&x.inv()), Surd::unit());
        let y = s(qr(3, 7), 10).add(&s(q(-2), 15));
        assert_eq!(y.mul(&y.inv()), Surd::unit());
    }

    #[test]
    fn display_matches_symbolic_form() {
        let z = Complex::new(Surd::rational(qr(3, 2)), s(qr(1, 2), 2));
        assert_eq!(z.to_string(), "3/2 + 1/2·√2·i");
        assert_eq!(Surd::default().to_string(), "0");
        assert_eq!(s(q(-1), 2).to_string(), "-√2");
        assert_eq!(Complex::new(Surd::default(), Surd::unit()).to_string(), "i");
    }

    #[test]
    fn float_value() {
        let x = s(qr(1, 2), 2);
        assert!((x.to_f64() - 0.5 * 2f64.sqrt()).abs() < 1e-15);
    }
}
