//! Exact complex numbers over arbitrary-precision rationals.
//!
//! [`RationalComplex`] is the coefficient field for every component matrix in
//! the crate. Rationals come from `num-rational` and are always stored
//! reduced with a positive denominator, so structural equality is numeric
//! equality.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced.
pub type Rational = num_rational::BigRational;

/// Builds a rational from a small integer fraction.
///
/// Panics if `den` is zero.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"`, `"p/q"` or a plain decimal such as `"-0.125"`.
///
/// Non-reduced input (`"2/4"`, `"1/-2"`) is normalized, never rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = |msg: &str| Error::parse(format!("rational {s:?}"), msg.to_string());
    if s.is_empty() {
        return Err(bad("empty"));
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = parse_integer(p).ok_or_else(|| bad("invalid numerator"))?;
        let q = parse_integer(q).ok_or_else(|| bad("invalid denominator"))?;
        if q.is_zero() {
            return Err(bad("zero denominator"));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['+', '-']);
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("invalid decimal fraction"));
        }
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("invalid decimal integer part"));
        }
        let digits = format!("{int_digits}{frac}");
        let num: BigInt = digits.parse().map_err(|_| bad("invalid decimal"))?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let value = Rational::new(num, den);
        return Ok(if negative { -value } else { value });
    }
    parse_integer(s)
        .map(Rational::from_integer)
        .ok_or_else(|| bad("invalid integer"))
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.strip_prefix('+').unwrap_or(s).parse().ok()
}

/// Renders a rational as `"p"` or `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Splits a signed sum of terms such as `"1/2 + -3 i1 - i1i2"` into
/// `(coefficient, unit)` pairs. `units` lists the accepted unit suffixes;
/// a term without a suffix gets unit `None`.
pub(crate) fn parse_terms(text: &str, units: &[&str]) -> Result<Vec<(Rational, Option<usize>)>> {
    let bad = |msg: String| Error::parse(format!("expression {text:?}"), msg);
    let numeric = |c: char| c.is_ascii_digit() || c == '/' || c == '.';
    let mut compact = String::with_capacity(text.len());
    let mut pending_space = false;
    for ch in text.chars() {
        if ch.is_whitespace() {
            pending_space = true;
            continue;
        }
        if pending_space && numeric(ch) && compact.chars().last().is_some_and(numeric) {
            return Err(bad("whitespace inside a number".into()));
        }
        pending_space = false;
        compact.push(ch);
    }
    if compact.is_empty() {
        return Err(bad("empty expression".into()));
    }
    // longest unit first so "i1i2" wins over "i1"
    let mut order: Vec<usize> = (0..units.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(units[i].len()));

    let bytes = compact.as_bytes();
    let mut pos = 0;
    let mut terms = Vec::new();
    while pos < bytes.len() {
        let mut negative = false;
        let mut saw_sign = false;
        while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            negative ^= bytes[pos] == b'-';
            saw_sign = true;
            pos += 1;
        }
        if !saw_sign && !terms.is_empty() {
            return Err(bad(format!("expected '+' or '-' at offset {pos}")));
        }
        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/' || bytes[pos] == b'.') {
            pos += 1;
        }
        let number = &compact[start..pos];
        let unit = order.iter().copied().find(|&i| compact[pos..].starts_with(units[i]));
        if let Some(i) = unit {
            pos += units[i].len();
        }
        let mut coeff = match (number.is_empty(), unit) {
            (true, Some(_)) => Rational::one(),
            (true, None) => return Err(bad(format!("expected a term at offset {start}"))),
            (false, _) => parse_rational(number)?,
        };
        if negative {
            coeff = -coeff;
        }
        terms.push((coeff, unit));
    }
    Ok(terms)
}

/// Complex number `re + i·im` with rational parts: an element of the field
/// of complex numbers restricted to `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RationalComplex {
    pub re: Rational,
    pub im: Rational,
}

impl RationalComplex {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(rational(re, 1), rational(im, 1))
    }

    pub fn real(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// Multiplication by `i`: `(re, im) ↦ (−im, re)`.
    pub fn mul_i(&self) -> Self {
        Self::new(-&self.im, self.re.clone())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    /// Exact multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl From<i64> for RationalComplex {
    fn from(v: i64) -> Self {
        Self::from_ints(v, 0)
    }
}

impl From<Rational> for RationalComplex {
    fn from(v: Rational) -> Self {
        Self::real(v)
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<RationalComplex> for RationalComplex {
            type Output = RationalComplex;
            fn $method(self, rhs: RationalComplex) -> RationalComplex {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&RationalComplex> for RationalComplex {
            type Output = RationalComplex;
            fn $method(self, rhs: &RationalComplex) -> RationalComplex {
                (&self).$method(rhs)
            }
        }
        impl $Trait<RationalComplex> for &RationalComplex {
            type Output = RationalComplex;
            fn $method(self, rhs: RationalComplex) -> RationalComplex {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&RationalComplex> for &RationalComplex {
    type Output = RationalComplex;
    fn add(self, rhs: &RationalComplex) -> RationalComplex {
        RationalComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&RationalComplex> for &RationalComplex {
    type Output = RationalComplex;
    fn sub(self, rhs: &RationalComplex) -> RationalComplex {
        RationalComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&RationalComplex> for &RationalComplex {
    type Output = RationalComplex;
    fn mul(self, rhs: &RationalComplex) -> RationalComplex {
        RationalComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Panics on division by zero, like the rational division it wraps.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Div<&RationalComplex> for &RationalComplex {
    type Output = RationalComplex;
    fn div(self, rhs: &RationalComplex) -> RationalComplex {
        let inv = rhs.inv().expect("division by zero complex");
        self * &inv
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&RationalComplex> for RationalComplex {
    fn add_assign(&mut self, rhs: &RationalComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&RationalComplex> for RationalComplex {
    fn sub_assign(&mut self, rhs: &RationalComplex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for RationalComplex {
    type Output = RationalComplex;
    fn neg(self) -> RationalComplex {
        RationalComplex::new(-self.re, -self.im)
    }
}

impl Neg for &RationalComplex {
    type Output = RationalComplex;
    fn neg(self) -> RationalComplex {
        RationalComplex::new(-&self.re, -&self.im)
    }
}

/// `a+bi` with rationals as `p/q`, e.g. `1/2-3i`, `0+0i`.
impl fmt::Display for RationalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}{}{}i",
            format_rational(&self.re),
            sign,
            format_rational(&self.im.abs())
        )
    }
}

impl FromStr for RationalComplex {
    type Err = Error;

    /// Accepts any signed sum of real and `i` terms: `3`, `-i`, `1/2-3i`, `2i+1`.
    fn from_str(s: &str) -> Result<Self> {
        let mut z = RationalComplex::zero();
        for (coeff, unit) in parse_terms(s, &["i"])? {
            match unit {
                None => z.re += coeff,
                Some(_) => z.im += coeff,
            }
        }
        Ok(z)
    }
}
