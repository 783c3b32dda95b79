//! Scalar domains the matrix routines are generic over.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Tag naming a scalar domain, carried into reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Boolean,
    Integer,
    Rational,
    Float,
}

/// A commutative semiring with an explicit zero test.
///
/// `bool` uses (OR, AND); the numeric types use (+, ×).
pub trait Semiring: Clone + PartialEq + fmt::Debug {
    const DOMAIN: Domain;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }
}

/// A semiring with subtraction and a magnitude, i.e. one the numeric
/// routines (inversion, Neumann sums, residuals) can run on.
pub trait Numeric: Semiring {
    fn sub(&self, rhs: &Self) -> Self;

    /// |self| rounded to the nearest `f64`.
    fn magnitude(&self) -> f64;

    fn is_negative(&self) -> bool;

    /// `1 / base^exp`.
    fn recip_pow(base: u64, exp: u32) -> Self;
}

impl Semiring for bool {
    const DOMAIN: Domain = Domain::Boolean;

    fn zero() -> Self {
        false
    }
    fn one() -> Self {
        true
    }
    fn is_zero(&self) -> bool {
        !*self
    }
    fn add(&self, rhs: &Self) -> Self {
        *self || *rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        *self && *rhs
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self |= *rhs;
    }
}

impl Semiring for f64 {
    const DOMAIN: Domain = Domain::Float;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

impl Numeric for f64 {
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn is_negative(&self) -> bool {
        *self < 0.0
    }
    fn recip_pow(base: u64, exp: u32) -> Self {
        // Not correctly rounded for large exponents.
        (base as f64).powi(-(exp as i32))
    }
}

impl Semiring for BigInt {
    const DOMAIN: Domain = Domain::Integer;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

impl Semiring for BigRational {
    const DOMAIN: Domain = Domain::Rational;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

impl Numeric for BigRational {
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn recip_pow(base: u64, exp: u32) -> Self {
        BigRational::new(<BigInt as One>::one(), num_traits::pow(BigInt::from(base), exp as usize))
    }
}
