//! Exact arithmetic over the Gaussian rationals `Q(i)` and the floating
//! complex carrier used for numerical evaluation.
//!
//! Every exact computation in the crate (state coefficients, exact matrix
//! representations, polynomial systems) runs over [`GaussianRational`].
//! Values are stored componentwise as reduced big rationals, so structural
//! equality is field equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Double-precision complex number used for all numeric evaluation.
pub type ComplexF = Complex64;

/// Arbitrary-precision rational.
pub type Rational = BigRational;

/// Minimal ring interface shared by matrix entries and polynomial
/// coefficients.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul_ref(&i))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Ring for ComplexF {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Field for ComplexF {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(self.inv())
        }
    }
}

/// Exact element `re + im·i` of `Q(i)`.
///
/// Both components are kept in lowest terms with positive denominators
/// (guaranteed by [`BigRational`]).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        GaussianRational { re, im: Zero::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_real(Rational::from_integer(BigInt::from(v)))
    }

    /// `num/den` as a real value. Panics on a zero denominator.
    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_real(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`.
    pub fn from_fracs(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussianRational {
            re: Rational::new(BigInt::from(re_num), BigInt::from(re_den)),
            im: Rational::new(BigInt::from(im_num), BigInt::from(im_den)),
        }
    }

    pub fn i() -> Self {
        GaussianRational { re: Zero::zero(), im: One::one() }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    /// `|a|² = re² + im²`, exact.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn try_inv(&self) -> Result<Self> {
        let n = self.norm_sqr();
        if Zero::is_zero(&n) {
            return Err(Error::DivisionByZero);
        }
        Ok(GaussianRational { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.try_inv()?)
    }

    /// `self^e` for a non-negative exponent by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussianRational::from_int(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Nearest double-precision complex value, componentwise.
    pub fn to_complex(&self) -> Result<ComplexF> {
        Ok(Complex64::new(rational_to_f64(&self.re)?, rational_to_f64(&self.im)?))
    }

    /// Exact conversion of a finite double (every finite double is a dyadic
    /// rational). Fails on NaN or infinity.
    pub fn from_complex(z: ComplexF) -> Result<Self> {
        let conv = |v: f64| {
            Rational::from_float(v).ok_or_else(|| Error::Range(format!("non-finite value {v}")))
        };
        Ok(GaussianRational { re: conv(z.re)?, im: conv(z.im)? })
    }
}

fn rational_to_f64(r: &Rational) -> Result<f64> {
    let v = r
        .to_f64()
        .ok_or_else(|| Error::Range(format!("{r} is not representable as f64")))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Range(format!("{r} overflows f64")))
    }
}

/// Convenience free function mirroring [`GaussianRational::to_complex`].
pub fn to_complex(a: &GaussianRational) -> Result<ComplexF> {
    a.to_complex()
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        GaussianRational::default_zero()
    }
    fn one() -> Self {
        GaussianRational::from_real(One::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn is_one(&self) -> bool {
        One::is_one(&self.re) && Zero::is_zero(&self.im)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Field for GaussianRational {
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
}

impl GaussianRational {
    fn default_zero() -> Self {
        GaussianRational { re: Zero::zero(), im: Zero::zero() }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        if Zero::is_zero(&self.im) && Zero::is_zero(&o.im) {
            return GaussianRational::from_real(&self.re * &o.re);
        }
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

/// Panics on division by zero, like the integer types; use
/// [`GaussianRational::try_div`] for a checked variant.
impl Div<GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn div(self, o: GaussianRational) -> GaussianRational {
        self.try_div(&o).expect("division by zero")
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Textual form `p/q` for reals and `p/q+r/s*i` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = || Error::Parse(format!("invalid rational '{s}'"));
    if s.is_empty() {
        return Err(err());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if Zero::is_zero(&den) {
        return Err(Error::Parse(format!("zero denominator in '{s}'")));
    }
    Ok(Rational::new(num, den))
}

/// Parses an imaginary part written as `b*i`, `b i`, `bi`, or just `i`,
/// where `sign` has already been split off.
fn parse_imag(body: &str) -> Result<Rational> {
    let body = body.trim();
    let coef = body
        .strip_suffix('i')
        .ok_or_else(|| Error::Parse(format!("missing 'i' in imaginary part '{body}'")))?
        .trim_end();
    let coef = coef.strip_suffix('*').unwrap_or(coef).trim();
    if coef.is_empty() {
        Ok(One::one())
    } else {
        parse_rational(coef)
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts `p/q`, `p/q+r/s*i`, `p/q-r/s*i`, `r/s*i` and `i`, with
    /// optional whitespace around every token.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        if !compact.ends_with('i') {
            return Ok(GaussianRational::from_real(parse_rational(&compact)?));
        }
        // Split at the last sign that is not the leading one.
        let bytes = compact.as_bytes();
        let split = (1..bytes.len()).rev().find(|&k| bytes[k] == b'+' || bytes[k] == b'-');
        let (re_part, im_part) = match split {
            Some(k) => (&compact[..k], &compact[k..]),
            None => ("0", compact.as_str()),
        };
        let (neg, body) = match im_part.as_bytes()[0] {
            b'-' => (true, &im_part[1..]),
            b'+' => (false, &im_part[1..]),
            _ => (false, im_part),
        };
        let mut im = parse_imag(body)?;
        if neg {
            im = -im;
        }
        Ok(GaussianRational { re: parse_rational(re_part)?, im })
    }
}

impl serde::Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for GaussianRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Integer n-th root of a non-negative big integer, if exact.
fn exact_int_root(v: &BigInt, n: u32) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let r = v.nth_root(n);
    if r.pow(n) == *v {
        Some(r)
    } else {
        None
    }
}

/// Exact square root in `Q` when it exists.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    let num = exact_int_root(r.numer(), 2)?;
    let den = exact_int_root(r.denom(), 2)?;
    Some(Rational::new(num, den))
}

/// Exact principal n-th root in `Q(i)` of `t`, when the principal complex
/// root happens to lie in `Q(i)`.
///
/// The candidate is recovered from the floating principal root by bounded
/// continued-fraction rationalization and then confirmed by exact
/// exponentiation, so a `Some` result is always exact.
pub fn principal_root_exact(t: &GaussianRational, n: u32) -> Option<GaussianRational> {
    if Ring::is_zero(t) {
        return Some(GaussianRational::default_zero());
    }
    if n == 1 {
        return Some(t.clone());
    }
    // Real non-negative fast path: exact integer roots of numerator and denominator.
    if t.is_real() && !t.re.is_negative() {
        let num = exact_int_root(t.re.numer(), n)?;
        let den = exact_int_root(t.re.denom(), n)?;
        return Some(GaussianRational::from_real(Rational::new(num, den)));
    }
    let z = t.to_complex().ok()?;
    let w = z.powf(1.0 / n as f64);
    let re = rationalize(w.re, 1 << 20)?;
    let im = rationalize(w.im, 1 << 20)?;
    let cand = GaussianRational { re, im };
    if cand.pow(n) == *t {
        Some(cand)
    } else {
        None
    }
}

/// Best rational approximation with denominator at most `max_den`.
pub fn rationalize(v: f64, max_den: i64) -> Option<Rational> {
    if !v.is_finite() {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    let mut x = v;
    for _ in 0..64 {
        let a = x.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let p2 = ai * p1 + p0;
        let q2 = ai * q1 + q0;
        if q2 > max_den as i128 {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = x - a;
        if frac.abs() < 1e-12 {
            break;
        }
        x = 1.0 / frac;
    }
    if q1 == 0 {
        return None;
    }
    Some(Rational::new(BigInt::from(p1), BigInt::from(q1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_product() {
        let a = GaussianRational::from_fracs(1, 2, 1, 1);
        let b = GaussianRational::from_fracs(1, 2, -1, 1);
        assert_eq!(&a * &b, GaussianRational::from_frac(5, 4));
    }

    #[test]
    fn unit_inverse() {
        assert_eq!(GaussianRational::i().try_inv().unwrap(), -GaussianRational::i());
    }

    #[test]
    fn rational_reduction() {
        let s = &GaussianRational::from_frac(1, 3) + &GaussianRational::from_frac(1, 6);
        assert_eq!(s, GaussianRational::from_frac(1, 2));
        assert_eq!(s.re().denom(), &BigInt::from(2));
    }

    #[test]
    fn inverse_of_zero_is_error() {
        assert_eq!(GaussianRational::zero().try_inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn to_complex_values() {
        assert_eq!(GaussianRational::from_frac(1, 2).to_complex().unwrap(), Complex64::new(0.5, 0.0));
        assert_eq!(
            GaussianRational::from_frac(-1, 3).to_complex().unwrap(),
            Complex64::new(-1.0 / 3.0, 0.0)
        );
        assert_eq!(GaussianRational::i().to_complex().unwrap(), Complex64::new(0.0, 1.0));
    }

    #[test]
    fn huge_rational_overflows() {
        let big = BigInt::from(10).pow(400u32);
        let v = GaussianRational::from_real(Rational::from_integer(big));
        assert!(matches!(v.to_complex(), Err(Error::Range(_))));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(g("1/2"), GaussianRational::from_frac(1, 2));
        assert_eq!(g(" 1 / 2 + 3 / 4 * i "), GaussianRational::from_fracs(1, 2, 3, 4));
        assert_eq!(g("1/2-3/4*i"), GaussianRational::from_fracs(1, 2, -3, 4));
        assert_eq!(g("-i"), -GaussianRational::i());
        assert_eq!(g("2*i"), GaussianRational::from_fracs(0, 1, 2, 1));
        assert_eq!(g("-1/3+i"), GaussianRational::from_fracs(-1, 3, 1, 1));
        for s in ["0", "-7/3", "1/2+3/4*i", "0-1*i", "5-2/9*i"] {
            let v = g(s);
            assert_eq!(g(&v.to_string()), v);
        }
        assert_eq!(GaussianRational::from_fracs(1, 2, -3, 4).to_string(), "1/2-3/4*i");
    }

    #[test]
    fn parse_errors() {
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("".parse::<GaussianRational>().is_err());
        assert!("abc".parse::<GaussianRational>().is_err());
        assert!("1/2+3/0*i".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn exact_roots() {
        assert_eq!(principal_root_exact(&g("8/27"), 3), Some(g("2/3")));
        assert_eq!(principal_root_exact(&g("2"), 2), None);
        // (1+i)^2 = 2i
        assert_eq!(principal_root_exact(&g("2*i"), 2), Some(g("1+i")));
        assert_eq!(principal_root_exact(&g("0"), 5), Some(g("0")));
    }
}
