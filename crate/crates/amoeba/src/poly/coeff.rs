use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

/// Coefficient ring abstraction shared by the floating-point and the
/// exact-rational polynomial types.
///
/// `EXACT` controls pruning: exact coefficients are dropped only when they
/// are literally zero, floating ones when their modulus falls below the
/// relative threshold of the owning polynomial.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    /// Scalar type used for positive substitution factors (`f64` for the
    /// floating coefficients, `BigRational` for the exact ones).
    type Scalar: Clone + fmt::Debug;

    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Approximate modulus, used for pruning scale and diagnostics.
    fn modulus(&self) -> f64;
    fn scale(&self, s: &Self::Scalar) -> Self;
    fn scalar_pow(s: &Self::Scalar, e: u32) -> Self::Scalar;
    fn scalar_is_positive(s: &Self::Scalar) -> bool;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

/// Coefficients with a real/imaginary decomposition, the ones realification
/// applies to.
pub trait ComplexCoeff: Coeff {
    type Real: Coeff<Scalar = Self::Scalar>;

    fn re(&self) -> Self::Real;
    fn im(&self) -> Self::Real;
    fn from_parts(re: Self::Real, im: Self::Real) -> Self;
    fn from_real(re: Self::Real) -> Self {
        Self::from_parts(re, <Self::Real as Coeff>::zero())
    }
    /// Squared modulus as an element of the real coefficient ring.
    fn norm_sq(&self) -> Self::Real {
        let r = self.re();
        let i = self.im();
        r.mul(&r).add(&i.mul(&i))
    }
}

/// Parsing hook for coefficient literals in the polynomial text grammar.
pub trait FromLiteral: Sized {
    /// Parse an unsigned decimal literal (`12`, `0.5`, `1e-3`, `3/4`).
    fn from_decimal(text: &str) -> Option<Self>;
}

impl Coeff for f64 {
    type Scalar = f64;
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn modulus(&self) -> f64 {
        self.abs()
    }
    fn scale(&self, s: &f64) -> Self {
        self * s
    }
    fn scalar_pow(s: &f64, e: u32) -> f64 {
        s.powi(e as i32)
    }
}

impl Coeff for Complex64 {
    type Scalar = f64;
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn modulus(&self) -> f64 {
        self.norm()
    }
    fn scale(&self, s: &f64) -> Self {
        self * s
    }
    fn scalar_pow(s: &f64, e: u32) -> f64 {
        s.powi(e as i32)
    }
}

impl ComplexCoeff for Complex64 {
    type Real = f64;

    fn re(&self) -> f64 {
        self.re
    }
    fn im(&self) -> f64 {
        self.im
    }
    fn from_parts(re: f64, im: f64) -> Self {
        Complex64::new(re, im)
    }
}

impl Coeff for BigRational {
    type Scalar = BigRational;
    const EXACT: bool = true;

    fn zero() -> Self {
        BigRational::zero()
    }
    fn one() -> Self {
        BigRational::from_integer(BigInt::from(1))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn modulus(&self) -> f64 {
        self.to_f64().map(f64::abs).unwrap_or(f64::MAX)
    }
    fn scale(&self, s: &BigRational) -> Self {
        self * s
    }
    fn scalar_pow(s: &BigRational, e: u32) -> BigRational {
        rational_pow(s, e)
    }
}

/// Gaussian rational: exact complex number with rational real and
/// imaginary parts.
#[derive(Clone, PartialEq, Eq)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_integers(re: i64, im: i64) -> Self {
        GaussRational {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    /// Exact modulus when the squared modulus is a perfect rational square.
    pub fn exact_modulus(&self) -> Option<BigRational> {
        rational_sqrt(&self.norm_sq())
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}+{:?}i)", self.re, self.im)
    }
}

impl Coeff for GaussRational {
    type Scalar = BigRational;
    const EXACT: bool = true;

    fn zero() -> Self {
        GaussRational::new(BigRational::zero(), BigRational::zero())
    }
    fn one() -> Self {
        GaussRational::new(Coeff::one(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, other: &Self) -> Self {
        GaussRational::new(&self.re + &other.re, &self.im + &other.im)
    }
    fn mul(&self, other: &Self) -> Self {
        GaussRational::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }
    fn neg(&self) -> Self {
        GaussRational::new(-self.re.clone(), -self.im.clone())
    }
    fn modulus(&self) -> f64 {
        let re = self.re.to_f64().unwrap_or(f64::MAX);
        let im = self.im.to_f64().unwrap_or(f64::MAX);
        re.hypot(im)
    }
    fn scale(&self, s: &BigRational) -> Self {
        GaussRational::new(&self.re * s, &self.im * s)
    }
    fn scalar_pow(s: &BigRational, e: u32) -> BigRational {
        rational_pow(s, e)
    }
}

impl ComplexCoeff for GaussRational {
    type Real = BigRational;

    fn re(&self) -> BigRational {
        self.re.clone()
    }
    fn im(&self) -> BigRational {
        self.im.clone()
    }
    fn from_parts(re: BigRational, im: BigRational) -> Self {
        GaussRational::new(re, im)
    }
}

impl FromLiteral for f64 {
    fn from_decimal(text: &str) -> Option<Self> {
        if let Some((num, den)) = text.split_once('/') {
            let n: f64 = num.parse().ok()?;
            let d: f64 = den.parse().ok()?;
            if d == 0.0 {
                return None;
            }
            return Some(n / d);
        }
        text.parse().ok()
    }
}

impl FromLiteral for BigRational {
    fn from_decimal(text: &str) -> Option<Self> {
        if let Some((num, den)) = text.split_once('/') {
            let n = rational_from_decimal(num)?;
            let d = rational_from_decimal(den)?;
            if Zero::is_zero(&d) {
                return None;
            }
            return Some(n / d);
        }
        rational_from_decimal(text)
    }
}

fn rational_from_decimal(text: &str) -> Option<BigRational> {
    let (mantissa, exp) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let digits: String = format!("{int_part}{frac_part}");
    if !digits.chars().all(|c| c.is_ascii_digit()) || digits.is_empty() {
        return None;
    }
    let numer: BigInt = digits.parse().ok()?;
    let shift = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if shift >= 0 {
        BigRational::from_integer(numer * ten.pow(shift as u32))
    } else {
        BigRational::new(numer, ten.pow((-shift) as u32))
    };
    Some(value)
}

pub fn rational_pow(s: &BigRational, e: u32) -> BigRational {
    let mut acc: BigRational = Coeff::one();
    for _ in 0..e {
        acc = &acc * s;
    }
    acc
}

/// Exact square root of a nonnegative rational, when it exists.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer().sqrt();
    let den = q.denom().sqrt();
    if &(&num * &num) == q.numer() && &(&den * &den) == q.denom() {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_rationals() {
        let half = BigRational::from_decimal("0.5").unwrap();
        assert_eq!(half, BigRational::new(BigInt::from(1), BigInt::from(2)));
        let sci = BigRational::from_decimal("25e-2").unwrap();
        assert_eq!(sci, BigRational::new(BigInt::from(1), BigInt::from(4)));
        let frac = BigRational::from_decimal("3/4").unwrap();
        assert_eq!(frac, BigRational::new(BigInt::from(3), BigInt::from(4)));
        assert!(BigRational::from_decimal("x").is_none());
    }

    #[test]
    fn gaussian_modulus() {
        let g = GaussRational::from_integers(3, 4);
        assert_eq!(
            g.exact_modulus().unwrap(),
            BigRational::from_integer(BigInt::from(5))
        );
        let g2 = GaussRational::from_integers(1, 1);
        assert!(g2.exact_modulus().is_none());
    }
}
