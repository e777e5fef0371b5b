//! Exact arithmetic in the number field ℚ(√2, τ), τ = (1 + √5)/2.
//!
//! Every root, versor coefficient and character value handled by this crate
//! lives in this degree-4 field. Elements are stored on the basis
//! `1, √2, τ, √2τ` with rational coefficients kept in lowest terms, so
//! structural equality is numeric equality and elements can be hashed.

mod rational;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero in Q(sqrt2, tau)")]
    DivisionByZero,
}

/// Sign of a field element under the real embedding √2 ≈ 1.414, τ ≈ 1.618.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// An element `c0 + c1·√2 + c2·τ + c3·√2·τ` of ℚ(√2, τ).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldScalar {
    c: [Rational; 4],
}

// (p, q) ↦ p + q√2
type Sqrt2Pair = (Rational, Rational);

fn q2_add(a: &Sqrt2Pair, b: &Sqrt2Pair) -> Sqrt2Pair {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn q2_sub(a: &Sqrt2Pair, b: &Sqrt2Pair) -> Sqrt2Pair {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn q2_mul(a: &Sqrt2Pair, b: &Sqrt2Pair) -> Sqrt2Pair {
    if a.1.is_zero() && b.1.is_zero() {
        return (&a.0 * &b.0, Rational::zero());
    }
    let two = Rational::from_int(2);
    (
        &(&a.0 * &b.0) + &(&two * &(&a.1 * &b.1)),
        &(&a.0 * &b.1) + &(&a.1 * &b.0),
    )
}

fn q2_is_zero(a: &Sqrt2Pair) -> bool {
    a.0.is_zero() && a.1.is_zero()
}

impl FieldScalar {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        FieldScalar { c: [c0, c1, c2, c3] }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(n, d))
    }

    pub fn from_rational(r: Rational) -> Self {
        FieldScalar {
            c: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn sqrt2() -> Self {
        FieldScalar {
            c: [Rational::zero(), Rational::one(), Rational::zero(), Rational::zero()],
        }
    }

    /// The golden ratio τ.
    pub fn tau() -> Self {
        FieldScalar {
            c: [Rational::zero(), Rational::zero(), Rational::one(), Rational::zero()],
        }
    }

    /// σ = 1 − τ, the Galois conjugate of τ.
    pub fn sigma() -> Self {
        Self::one() - Self::tau()
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Rational::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Rational::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.c[0])
    }

    fn split(&self) -> (Sqrt2Pair, Sqrt2Pair) {
        (
            (self.c[0].clone(), self.c[1].clone()),
            (self.c[2].clone(), self.c[3].clone()),
        )
    }

    fn join(a: Sqrt2Pair, b: Sqrt2Pair) -> Self {
        FieldScalar {
            c: [a.0, a.1, b.0, b.1],
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        FieldScalar {
            c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r],
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if let Some(r) = other.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return other.scale(r);
        }
        // Tower ℚ(√2)(τ): (A + Bτ)(C + Dτ) = (AC + BD) + (AD + BC + BD)τ.
        let (a, b) = self.split();
        let (c, d) = other.split();
        let ac = q2_mul(&a, &c);
        if q2_is_zero(&b) && q2_is_zero(&d) {
            return Self::join(ac, (Rational::zero(), Rational::zero()));
        }
        let bd = q2_mul(&b, &d);
        let cross = q2_sub(&q2_sub(&q2_mul(&q2_add(&a, &b), &q2_add(&c, &d)), &ac), &bd);
        Self::join(q2_add(&ac, &bd), q2_add(&cross, &bd))
    }

    /// The automorphism τ ↦ 1 − τ fixing √2.
    pub fn galois_sigma(&self) -> Self {
        FieldScalar {
            c: [
                &self.c[0] + &self.c[2],
                &self.c[1] + &self.c[3],
                -&self.c[2],
                -&self.c[3],
            ],
        }
    }

    /// The automorphism √2 ↦ −√2 fixing τ.
    pub fn galois_sqrt2(&self) -> Self {
        FieldScalar {
            c: [self.c[0].clone(), -&self.c[1], self.c[2].clone(), -&self.c[3]],
        }
    }

    /// Product of the three nontrivial conjugates.
    fn conjugate_product(&self) -> Self {
        let s = self.galois_sigma();
        let r = self.galois_sqrt2();
        let sr = s.galois_sqrt2();
        &(&s * &r) * &sr
    }

    /// Absolute field norm to ℚ: the product of all four conjugates.
    pub fn norm(&self) -> Rational {
        let n = self * &self.conjugate_product();
        debug_assert!(n.is_rational());
        n.c[0].clone()
    }

    pub fn invert(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip().expect("nonzero")));
        }
        let adj = self.conjugate_product();
        let norm = (self * &adj).c[0].clone();
        Ok(adj.scale(&norm.recip().expect("norm of a nonzero element is nonzero")))
    }

    pub fn div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self * &other.invert()?)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Exact square root, attempted for the values that arise when
    /// normalizing roots: squares of rationals and twice such squares.
    pub fn sqrt(&self) -> Option<Self> {
        let r = self.as_rational()?;
        if let Some(s) = r.sqrt_exact() {
            return Some(Self::from_rational(s));
        }
        // √q = √(q/2)·√2
        let half = r * &Rational::new(1, 2);
        half.sqrt_exact()
            .map(|s| Self::new(Rational::zero(), s, Rational::zero(), Rational::zero()))
    }

    pub fn to_f64(&self) -> f64 {
        let s2 = std::f64::consts::SQRT_2;
        let t = (1.0 + 5f64.sqrt()) / 2.0;
        self.c[0].to_f64() + self.c[1].to_f64() * s2 + self.c[2].to_f64() * t + self.c[3].to_f64() * s2 * t
    }

    pub fn sign(&self) -> Sign {
        if self.is_zero() {
            return Sign::Zero;
        }
        if let Some(r) = self.as_rational() {
            return if r.signum() < 0 { Sign::Negative } else { Sign::Positive };
        }
        // Floating estimate first; each term carries relative error well under
        // 1e-15, so a margin of 1e-12 of the total magnitude is safe.
        let s2 = std::f64::consts::SQRT_2;
        let t = (1.0 + 5f64.sqrt()) / 2.0;
        let terms = [
            self.c[0].to_f64(),
            self.c[1].to_f64() * s2,
            self.c[2].to_f64() * t,
            self.c[3].to_f64() * s2 * t,
        ];
        let est: f64 = terms.iter().sum();
        let mag: f64 = terms.iter().map(|x| x.abs()).sum();
        if est.is_finite() && mag.is_finite() && est.abs() > 1e-12 * mag {
            return if est < 0.0 { Sign::Negative } else { Sign::Positive };
        }
        let mut bits = 64;
        loop {
            let (lo, hi) = self.enclose(bits);
            if lo.is_positive() {
                return Sign::Positive;
            }
            if hi.is_negative() {
                return Sign::Negative;
            }
            bits *= 2;
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    /// Numeric comparison under the real embedding.
    pub fn numeric_cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match (self - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    /// Rational interval containing the value, from enclosures of √2 and √5
    /// accurate to `bits` binary places.
    fn enclose(&self, bits: u32) -> (BigRational, BigRational) {
        let scale = BigInt::one() << bits;
        let sqrt_enclosure = |n: u32| {
            let lo = (BigInt::from(n) * &scale * &scale).sqrt();
            let hi = &lo + BigInt::one();
            (BigRational::new(lo, scale.clone()), BigRational::new(hi, scale.clone()))
        };
        let (s2_lo, s2_hi) = sqrt_enclosure(2);
        let (s5_lo, s5_hi) = sqrt_enclosure(5);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let tau_lo = (BigRational::one() + s5_lo) * &half;
        let tau_hi = (BigRational::one() + s5_hi) * &half;
        let basis = [
            (BigRational::one(), BigRational::one()),
            (s2_lo.clone(), s2_hi.clone()),
            (tau_lo.clone(), tau_hi.clone()),
            (&s2_lo * &tau_lo, &s2_hi * &tau_hi),
        ];
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for (c, (b_lo, b_hi)) in self.c.iter().zip(basis.iter()) {
            if c.is_zero() {
                continue;
            }
            let c = c.to_big();
            if c.is_positive() {
                lo += &c * b_lo;
                hi += &c * b_hi;
            } else {
                lo += &c * b_hi;
                hi += &c * b_lo;
            }
        }
        (lo, hi)
    }

    /// Decimal rendering with `precision` bits worth of digits after the
    /// point, within one unit of the last printed digit.
    pub fn to_decimal(&self, precision: u32) -> String {
        let precision = precision.max(16);
        let digits = (precision as u64 * 30103 / 100_000).max(1) as usize;
        let ten_pow = num_traits::pow(BigInt::from(10), digits);
        // Interval width must drop below a quarter unit of the last digit.
        let target = BigRational::new(BigInt::one(), &ten_pow * BigInt::from(4));
        let mut bits = precision + 16;
        let (lo, hi) = loop {
            let (lo, hi) = self.enclose(bits);
            if &hi - &lo < target {
                break (lo, hi);
            }
            bits *= 2;
        };
        let mid = (lo + hi) / BigRational::from_integer(BigInt::from(2));
        let scaled = (mid * BigRational::from_integer(ten_pow.clone())).round().to_integer();
        let negative = scaled.is_negative();
        let abs = scaled.abs();
        let int_part = &abs / &ten_pow;
        let frac_part = &abs % &ten_pow;
        let frac = format!("{:0>width$}", frac_part.to_string(), width = digits);
        let sign = if negative { "-" } else { "" };
        format!("{sign}{int_part}.{frac}")
    }
}

impl From<i64> for FieldScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for FieldScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl Add<&FieldScalar> for &FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: &FieldScalar) -> FieldScalar {
        FieldScalar {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl Sub<&FieldScalar> for &FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: &FieldScalar) -> FieldScalar {
        FieldScalar {
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
                &self.c[3] - &rhs.c[3],
            ],
        }
    }
}

impl Mul<&FieldScalar> for &FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: &FieldScalar) -> FieldScalar {
        self.mul_impl(rhs)
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar {
            c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]],
        }
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: &FieldScalar) -> FieldScalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<FieldScalar> for &FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: FieldScalar) -> FieldScalar {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&FieldScalar> for FieldScalar {
    fn add_assign(&mut self, rhs: &FieldScalar) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            if !b.is_zero() {
                *a = &*a + b;
            }
        }
    }
}

impl SubAssign<&FieldScalar> for FieldScalar {
    fn sub_assign(&mut self, rhs: &FieldScalar) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            if !b.is_zero() {
                *a = &*a - b;
            }
        }
    }
}

impl std::iter::Sum for FieldScalar {
    fn sum<I: Iterator<Item = FieldScalar>>(iter: I) -> Self {
        let mut acc = FieldScalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

/// Renders the exact form, e.g. `-1/2 + (1/2)τ` or `√2`.
impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["", "√2", "τ", "√2τ"];
        let mut first = true;
        for (coeff, name) in self.c.iter().zip(NAMES) {
            if coeff.is_zero() {
                continue;
            }
            let negative = coeff.signum() < 0;
            let abs = coeff.abs();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if name.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(name)?;
            } else if abs.is_integer() {
                write!(f, "{abs}{name}")?;
            } else {
                write!(f, "({abs}){name}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(c: [(i64, i64); 4]) -> FieldScalar {
        FieldScalar::new(
            Rational::new(c[0].0, c[0].1),
            Rational::new(c[1].0, c[1].1),
            Rational::new(c[2].0, c[2].1),
            Rational::new(c[3].0, c[3].1),
        )
    }

    #[test]
    fn defining_relations() {
        let t = FieldScalar::tau();
        assert_eq!(&t * &t, &t + &FieldScalar::one());
        let s = FieldScalar::sqrt2();
        assert_eq!(&s * &s, FieldScalar::from_int(2));
        assert_eq!(&t * &FieldScalar::sigma(), FieldScalar::from_int(-1));
    }

    #[test]
    fn inverses() {
        let t = FieldScalar::tau();
        assert_eq!(t.invert().unwrap(), &t - &FieldScalar::one());
        assert_eq!(
            FieldScalar::from_int(2).invert().unwrap(),
            FieldScalar::from_ratio(1, 2)
        );
        let a = &FieldScalar::one() + &FieldScalar::sqrt2();
        assert_eq!(a.invert().unwrap(), &FieldScalar::sqrt2() - &FieldScalar::one());
        assert_eq!(FieldScalar::zero().invert(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn signs() {
        let t = FieldScalar::tau();
        assert_eq!((&t - &FieldScalar::one()).sign(), Sign::Positive);
        assert_eq!(FieldScalar::zero().sign(), Sign::Zero);
        assert_eq!((&FieldScalar::one() - &t).sign(), Sign::Negative);
        // 665857/470832 is a convergent of √2 lying 1.6e-12 above it, close
        // enough to force the interval refinement path.
        let near = fs([(-665857, 470832), (1, 1), (0, 1), (0, 1)]);
        assert_eq!(near.sign(), Sign::Negative);
    }

    #[test]
    fn decimal_rendering() {
        assert!(FieldScalar::tau().to_decimal(64).starts_with("1.6180339887"));
        assert!(FieldScalar::sigma().to_decimal(64).starts_with("-0.6180339887"));
        let p = &FieldScalar::sqrt2() * &FieldScalar::tau();
        assert!(p.to_decimal(64).starts_with("2.2882456"));
        assert_eq!(FieldScalar::from_ratio(1, 2).to_decimal(16), "0.5000");
        assert_eq!(FieldScalar::zero().to_decimal(16), "0.0000");
    }

    #[test]
    fn display_exact_form() {
        assert_eq!(FieldScalar::zero().to_string(), "0");
        assert_eq!(FieldScalar::sigma().to_string(), "1 - τ");
        let x = fs([(-1, 2), (0, 1), (1, 2), (3, 1)]);
        assert_eq!(x.to_string(), "-1/2 + (1/2)τ + 3√2τ");
    }

    #[test]
    fn conjugations_are_involutions() {
        let x = fs([(1, 3), (-2, 5), (7, 2), (1, 9)]);
        assert_eq!(x.galois_sigma().galois_sigma(), x);
        assert_eq!(x.galois_sqrt2().galois_sqrt2(), x);
        assert_eq!(FieldScalar::tau().galois_sigma(), FieldScalar::sigma());
    }

    #[test]
    fn square_roots() {
        assert_eq!(FieldScalar::from_int(2).sqrt(), Some(FieldScalar::sqrt2()));
        assert_eq!(
            FieldScalar::from_ratio(9, 4).sqrt(),
            Some(FieldScalar::from_ratio(3, 2))
        );
        assert_eq!(FieldScalar::from_int(3).sqrt(), None);
    }
}
