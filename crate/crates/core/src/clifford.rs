//! Multivectors of the Euclidean Clifford algebra Cl(n), n ≤ 8.
//!
//! Coefficients are stored densely, indexed by blade bitmask: bit `i` set
//! means the basis vector `e_{i+1}` is a factor, factors in ascending order.
//! Every basis vector squares to +1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::field::{FieldError, FieldScalar, Sign};
use crate::linalg::{self, Matrix, Vector};

pub const MAX_DIMENSION: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("dimension mismatch: Cl({0}) vs Cl({1})")]
    DimensionMismatch(usize, usize),
    #[error("dimension {0} outside 1..={MAX_DIMENSION}")]
    BadDimension(usize),
    #[error("expected a pure vector (grade 1)")]
    NotAVector,
    #[error("zero vector")]
    ZeroVector,
    #[error("invalid versor: {0}")]
    InvalidVersor(&'static str),
    #[error("cannot normalize a vector of squared length {0} within Q(sqrt2, tau)")]
    NotNormalizable(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Sign of `e_a e_b` relative to `e_{a^b}`: true when negative.
#[inline]
fn reorder_negative(a: usize, b: usize) -> bool {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    swaps & 1 == 1
}

#[inline]
fn grade(blade: usize) -> u32 {
    blade.count_ones()
}

/// Sign applied to a grade-k blade under reversal: (−1)^{k(k−1)/2}.
#[inline]
fn reverse_negates(k: u32) -> bool {
    (k * k.saturating_sub(1) / 2) & 1 == 1
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    dim: usize,
    coeffs: Vec<FieldScalar>,
}

impl Multivector {
    pub fn zero(dim: usize) -> Self {
        assert!((1..=MAX_DIMENSION).contains(&dim), "Cl({dim}) unsupported");
        Multivector {
            dim,
            coeffs: vec![FieldScalar::zero(); 1 << dim],
        }
    }

    pub fn scalar(dim: usize, s: FieldScalar) -> Self {
        let mut m = Self::zero(dim);
        m.coeffs[0] = s;
        m
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, FieldScalar::one())
    }

    /// The basis vector `e_i`, 1-based as in `e1, e2, …`.
    pub fn basis_vector(dim: usize, i: usize) -> Self {
        assert!((1..=dim).contains(&i), "e{i} outside Cl({dim})");
        Self::blade(dim, 1 << (i - 1), FieldScalar::one())
    }

    pub fn blade(dim: usize, mask: usize, coeff: FieldScalar) -> Self {
        let mut m = Self::zero(dim);
        m.coeffs[mask] = coeff;
        m
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<FieldScalar>) -> Result<Self, CliffordError> {
        if !(1..=MAX_DIMENSION).contains(&dim) {
            return Err(CliffordError::BadDimension(dim));
        }
        assert_eq!(coeffs.len(), 1 << dim, "coefficient array must have 2^dim entries");
        Ok(Multivector { dim, coeffs })
    }

    /// A grade-1 multivector with the given coordinates.
    pub fn vector(coords: &[FieldScalar]) -> Self {
        let mut m = Self::zero(coords.len());
        for (i, c) in coords.iter().enumerate() {
            m.coeffs[1 << i] = c.clone();
        }
        m
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[FieldScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: usize) -> &FieldScalar {
        &self.coeffs[mask]
    }

    pub fn set_coeff(&mut self, mask: usize, value: FieldScalar) {
        self.coeffs[mask] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldScalar::is_zero)
    }

    pub fn scalar_part(&self) -> &FieldScalar {
        &self.coeffs[0]
    }

    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(FieldScalar::is_zero)
    }

    /// Blade masks with nonzero coefficients, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
    }

    /// `Some(parity)` when all nonzero blades share a grade parity. Zero is even.
    pub fn parity(&self) -> Option<Parity> {
        let mut seen = None;
        for b in self.support() {
            let p = if grade(b).is_multiple_of(2) {
                Parity::Even
            } else {
                Parity::Odd
            };
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(Parity::Even))
    }

    pub fn is_vector(&self) -> bool {
        self.support().all(|b| grade(b) == 1)
    }

    /// Coordinates of a grade-1 multivector.
    pub fn vector_coords(&self) -> Result<Vector, CliffordError> {
        if !self.is_vector() {
            return Err(CliffordError::NotAVector);
        }
        Ok((0..self.dim).map(|i| self.coeffs[1 << i].clone()).collect())
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self, CliffordError> {
        if self.dim != other.dim {
            return Err(CliffordError::DimensionMismatch(self.dim, other.dim));
        }
        let mut out = vec![FieldScalar::zero(); self.coeffs.len()];
        let rhs: Vec<(usize, &FieldScalar)> = other.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for &(b, cb) in &rhs {
                let p = ca * cb;
                if reorder_negative(a, b) {
                    out[a ^ b] -= &p;
                } else {
                    out[a ^ b] += &p;
                }
            }
        }
        Ok(Multivector {
            dim: self.dim,
            coeffs: out,
        })
    }

    pub fn reverse(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, c)| if reverse_negates(grade(b)) { -c } else { c.clone() })
            .collect();
        Multivector { dim: self.dim, coeffs }
    }

    /// Keeps exactly the blades of grade `k`.
    pub fn grade_project(&self, k: u32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, c)| if grade(b) == k { c.clone() } else { FieldScalar::zero() })
            .collect();
        Multivector { dim: self.dim, coeffs }
    }

    pub fn scale(&self, s: &FieldScalar) -> Self {
        Multivector {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Scalar part of `self · reverse(self)`.
    pub fn norm_squared(&self) -> FieldScalar {
        // ⟨A Ã⟩₀ = Σ_b c_b² for a Euclidean metric.
        self.coeffs.iter().filter(|c| !c.is_zero()).map(|c| c * c).sum()
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.dim);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Flips the sign so that the first nonzero coefficient is positive.
    pub fn sign_canonical(&self) -> Self {
        match self.support().next() {
            Some(b) if self.coeffs[b].sign() == Sign::Negative => -self,
            _ => self.clone(),
        }
    }

    /// Blade name such as `e12` or `1` for the scalar.
    pub fn blade_name(mask: usize) -> String {
        if mask == 0 {
            return "1".into();
        }
        let mut s = String::from("e");
        for i in 0..MAX_DIMENSION {
            if mask & (1 << i) != 0 {
                s.push_str(&(i + 1).to_string());
            }
        }
        s
    }

    /// Numeric lexicographic order on coefficient arrays, largest first.
    pub fn cmp_desc(&self, other: &Self) -> std::cmp::Ordering {
        linalg::cmp_desc(&self.coeffs, &other.coeffs)
    }
}

/// Euclidean inner product of two grade-1 multivectors.
pub fn vector_inner(u: &Multivector, v: &Multivector) -> Result<FieldScalar, CliffordError> {
    if u.dim != v.dim {
        return Err(CliffordError::DimensionMismatch(u.dim, v.dim));
    }
    if !u.is_vector() || !v.is_vector() {
        return Err(CliffordError::NotAVector);
    }
    Ok((0..u.dim).map(|i| &u.coeffs[1 << i] * &v.coeffs[1 << i]).sum())
}

/// Reflection of `v` in the hyperplane orthogonal to `alpha`:
/// `v ↦ −α v α / (α·α)`.
pub fn reflect(alpha: &Multivector, v: &Multivector) -> Result<Multivector, CliffordError> {
    if alpha.dim != v.dim {
        return Err(CliffordError::DimensionMismatch(alpha.dim, v.dim));
    }
    if !alpha.is_vector() || !v.is_vector() {
        return Err(CliffordError::NotAVector);
    }
    if alpha.is_zero() {
        return Err(CliffordError::ZeroVector);
    }
    let inv = alpha.norm_squared().invert()?;
    let sandwiched = &(alpha * v) * alpha;
    Ok(-&sandwiched.grade_project(1).scale(&inv))
}

/// Unit-normalizes a vector, failing when the square root leaves the field.
pub fn normalize_vector(v: &Multivector) -> Result<Multivector, CliffordError> {
    if !v.is_vector() {
        return Err(CliffordError::NotAVector);
    }
    if v.is_zero() {
        return Err(CliffordError::ZeroVector);
    }
    let n2 = v.norm_squared();
    let n = n2
        .sqrt()
        .ok_or_else(|| CliffordError::NotNormalizable(n2.to_string()))?;
    Ok(v.scale(&n.invert()?))
}

/// A multivector of homogeneous parity with `A·Ã` a nonzero scalar.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Versor {
    value: Multivector,
    parity: Parity,
}

impl Versor {
    pub fn new(value: Multivector) -> Result<Self, CliffordError> {
        let parity = value
            .parity()
            .ok_or(CliffordError::InvalidVersor("mixes even and odd grades"))?;
        let n = &value * &value.reverse();
        if !n.is_scalar() {
            return Err(CliffordError::InvalidVersor("A·reverse(A) is not a scalar"));
        }
        if n.scalar_part().is_zero() {
            return Err(CliffordError::InvalidVersor("A·reverse(A) vanishes"));
        }
        Ok(Versor { value, parity })
    }

    /// The product of the given vectors, each first scaled to unit length.
    pub fn from_vectors(vectors: &[Multivector]) -> Result<Self, CliffordError> {
        let first = vectors.first().ok_or(CliffordError::InvalidVersor("empty product"))?;
        let mut acc = Multivector::one(first.dim);
        for v in vectors {
            let u = normalize_vector(v)?;
            acc = acc.geometric_product(&u)?;
        }
        Self::new(acc)
    }

    pub fn identity(dim: usize) -> Self {
        Versor {
            value: Multivector::one(dim),
            parity: Parity::Even,
        }
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn into_value(self) -> Multivector {
        self.value
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn dimension(&self) -> usize {
        self.value.dim
    }

    /// `A·Ã`, a scalar; +1 for unit versors.
    pub fn norm_squared(&self) -> FieldScalar {
        self.value.norm_squared()
    }

    pub fn is_unit(&self) -> bool {
        self.norm_squared().is_one()
    }

    pub fn neg(&self) -> Self {
        Versor {
            value: -&self.value,
            parity: self.parity,
        }
    }

    pub fn reverse(&self) -> Self {
        Versor {
            value: self.value.reverse(),
            parity: self.parity,
        }
    }

    pub fn compose(&self, other: &Self) -> Result<Self, CliffordError> {
        let value = self.value.geometric_product(&other.value)?;
        let parity = if self.parity == other.parity {
            Parity::Even
        } else {
            Parity::Odd
        };
        Ok(Versor { value, parity })
    }

    /// The orthogonal action `v ↦ ±Ã v A / (A·Ã)`, sign negative for odd `A`.
    pub fn sandwich(&self, v: &Multivector) -> Result<Multivector, CliffordError> {
        if v.dim != self.value.dim {
            return Err(CliffordError::DimensionMismatch(self.value.dim, v.dim));
        }
        if !v.is_vector() {
            return Err(CliffordError::NotAVector);
        }
        let inv = self.norm_squared().invert()?;
        let out = (&(&self.value.reverse() * v) * &self.value)
            .grade_project(1)
            .scale(&inv);
        Ok(match self.parity {
            Parity::Even => out,
            Parity::Odd => -out,
        })
    }

    /// The matrix of the sandwich action; column `j` is the image of `e_{j+1}`.
    pub fn orthogonal_matrix(&self) -> Result<Matrix, CliffordError> {
        let n = self.value.dim;
        let cols = (1..=n)
            .map(|j| self.sandwich(&Multivector::basis_vector(n, j))?.vector_coords())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_columns(cols))
    }
}

/// Checks a general multivector and applies its sandwich action, rejecting
/// anything that is not a versor.
pub fn versor_sandwich(a: &Multivector, v: &Multivector) -> Result<Multivector, CliffordError> {
    Versor::new(a.clone())?.sandwich(v)
}

impl Mul<&Multivector> for &Multivector {
    type Output = Multivector;
    /// Panics on dimension mismatch; use [`Multivector::geometric_product`]
    /// for a fallible product.
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs)
            .expect("geometric product of mismatched dimensions")
    }
}

impl Add<&Multivector> for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "sum of mismatched dimensions");
        Multivector {
            dim: self.dim,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Multivector> for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "difference of mismatched dimensions");
        Multivector {
            dim: self.dim,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

/// Signed blade sum, e.g. `-1/2 + (1/2 - (1/2)τ)e12 - ((1/2)τ)e23`.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for b in self.support() {
            let c = &self.coeffs[b];
            let text = c.to_string();
            let single = !text[1..].contains(" + ") && !text[1..].contains(" - ");
            let (negative, body) = match (single, text.strip_prefix('-')) {
                (true, Some(rest)) => (true, rest.to_string()),
                _ => (false, text.clone()),
            };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            if b == 0 {
                f.write_str(&body)?;
            } else if body == "1" {
                f.write_str(&Self::blade_name(b))?;
            } else {
                write!(f, "({body}){}", Self::blade_name(b))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({})[{}]", self.dim, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Multivector {
        Multivector::basis_vector(3, i)
    }

    #[test]
    fn basis_products() {
        assert_eq!(&e(1) * &e(1), Multivector::one(3));
        let e12 = &e(1) * &e(2);
        assert_eq!(&e(2) * &e(1), -&e12);
        assert_eq!(&e12 * &e12, -Multivector::one(3));
        let i3 = &e12 * &e(3);
        assert_eq!(&i3 * &i3, -Multivector::one(3));
    }

    #[test]
    fn reverse_and_grades() {
        assert_eq!(e(1).reverse(), e(1));
        let e12 = &e(1) * &e(2);
        assert_eq!(e12.reverse(), -&e12);
        let mixed = &(&Multivector::one(3) + &e(1)) + &e12;
        assert_eq!(mixed.grade_project(1), e(1));
        assert_eq!(mixed.parity(), None);
    }

    #[test]
    fn reflections() {
        assert_eq!(reflect(&e(1), &e(1)).unwrap(), -&e(1));
        assert_eq!(reflect(&e(1), &e(2)).unwrap(), e(2));
        let two_e1 = e(1).scale(&FieldScalar::from_int(2));
        assert_eq!(reflect(&two_e1, &e(1)).unwrap(), -&e(1));
        assert_eq!(reflect(&Multivector::zero(3), &e(1)), Err(CliffordError::ZeroVector));
        assert_eq!(reflect(&e12(), &e(1)), Err(CliffordError::NotAVector));
    }

    fn e12() -> Multivector {
        &e(1) * &e(2)
    }

    #[test]
    fn sandwich_rejects_non_versors() {
        let mixed = &Multivector::one(3) + &e(1);
        assert!(matches!(
            versor_sandwich(&mixed, &e(2)),
            Err(CliffordError::InvalidVersor(_))
        ));
        // In Cl(4), 1 + e1234 is even but A·Ã = 2 + 2e1234.
        let mut not_versor = Multivector::one(4);
        not_versor.set_coeff(0b1111, FieldScalar::one());
        let v = Multivector::basis_vector(4, 1);
        assert!(matches!(
            versor_sandwich(&not_versor, &v),
            Err(CliffordError::InvalidVersor(_))
        ));
    }

    #[test]
    fn identity_and_double_cover() {
        let one = Versor::identity(3);
        let v = Multivector::vector(&[1.into(), 2.into(), 3.into()]);
        assert_eq!(one.sandwich(&v).unwrap(), v);
        let r = Versor::from_vectors(&[e(1), Multivector::vector(&[1.into(), 1.into(), 0.into()])]).unwrap();
        assert!(r.is_unit());
        assert_eq!(r.sandwich(&v).unwrap(), r.neg().sandwich(&v).unwrap());
    }

    #[test]
    fn display() {
        let x = &Multivector::scalar(3, FieldScalar::from_ratio(-1, 2)) + &e12();
        assert_eq!(x.to_string(), "-1/2 + e12");
        assert_eq!(Multivector::zero(2).to_string(), "0");
        assert_eq!(Multivector::blade_name(0b101), "e13");
    }
}
