//! Bicomplex scalars in idempotent coordinates.
//!
//! A scalar is stored as the pair `(ξ⁻, ξ⁺)` with `ξ = ξ⁻e₁ + ξ⁺e₂`. The
//! cartesian views `z₁ + i₂z₂` and `u₁ + i₁u₂ + i₂u₃ + i₁i₂u₄` are
//! conversions, computed on demand.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::{format_rational, parse_terms, rational, Rational, RationalComplex};
use crate::error::{Error, Result};

/// Zero-divisor classification of a bicomplex scalar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalarClass {
    Zero,
    Invertible,
    /// Nonzero with exactly one vanishing idempotent component.
    ZeroDivisor,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BicomplexScalar {
    /// Coefficient of `e₁`.
    pub minus: RationalComplex,
    /// Coefficient of `e₂`.
    pub plus: RationalComplex,
}

impl BicomplexScalar {
    pub fn new(minus: RationalComplex, plus: RationalComplex) -> Self {
        Self { minus, plus }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(RationalComplex::one(), RationalComplex::one())
    }

    /// `e₁ = (1 + i₁i₂)/2`.
    pub fn e1() -> Self {
        Self::new(RationalComplex::one(), RationalComplex::zero())
    }

    /// `e₂ = (1 − i₁i₂)/2`.
    pub fn e2() -> Self {
        Self::new(RationalComplex::zero(), RationalComplex::one())
    }

    pub fn i1() -> Self {
        Self::new(RationalComplex::i(), RationalComplex::i())
    }

    pub fn i2() -> Self {
        Self::from_cartesian_pair(RationalComplex::zero(), RationalComplex::one())
    }

    /// Embeds a complex number `z` as `z·e₁ + z·e₂`.
    pub fn from_complex(z: RationalComplex) -> Self {
        Self::new(z.clone(), z)
    }

    /// `z₁ + i₂z₂ ↦ (z₁ − i₁z₂, z₁ + i₁z₂)`.
    pub fn from_cartesian_pair(z1: RationalComplex, z2: RationalComplex) -> Self {
        let rotated = z2.mul_i();
        Self::new(&z1 - &rotated, z1 + rotated)
    }

    /// Inverse of [`from_cartesian_pair`](Self::from_cartesian_pair):
    /// `z₁ = (ξ⁻ + ξ⁺)/2`, `z₂ = i₁(ξ⁻ − ξ⁺)/2`.
    pub fn to_cartesian_pair(&self) -> (RationalComplex, RationalComplex) {
        let half = rational(1, 2);
        let z1 = (&self.minus + &self.plus).scale(&half);
        let z2 = (&self.minus - &self.plus).mul_i().scale(&half);
        (z1, z2)
    }

    /// `u₁ + i₁u₂ + i₂u₃ + i₁i₂u₄`.
    pub fn from_real_quad(u1: Rational, u2: Rational, u3: Rational, u4: Rational) -> Self {
        Self::from_cartesian_pair(RationalComplex::new(u1, u2), RationalComplex::new(u3, u4))
    }

    pub fn to_real_quad(&self) -> [Rational; 4] {
        let (z1, z2) = self.to_cartesian_pair();
        [z1.re, z1.im, z2.re, z2.im]
    }

    pub fn is_zero(&self) -> bool {
        self.minus.is_zero() && self.plus.is_zero()
    }

    pub fn classify(&self) -> ScalarClass {
        match (self.minus.is_zero(), self.plus.is_zero()) {
            (true, true) => ScalarClass::Zero,
            (false, false) => ScalarClass::Invertible,
            _ => ScalarClass::ZeroDivisor,
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        match (self.minus.inv(), self.plus.inv()) {
            (Some(m), Some(p)) => Ok(Self::new(m, p)),
            _ => Err(Error::NotInvertible(self.classify())),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        Self::new(self.minus.pow(k), self.plus.pow(k))
    }

    /// Cartesian rendering `u1 + u2 i1 + u3 i2 + u4 i1i2`.
    pub fn to_cartesian_string(&self) -> String {
        let [u1, u2, u3, u4] = self.to_real_quad();
        format!(
            "{} + {} i1 + {} i2 + {} i1i2",
            format_rational(&u1),
            format_rational(&u2),
            format_rational(&u3),
            format_rational(&u4)
        )
    }

    fn parse_cartesian(s: &str) -> Result<Self> {
        let mut u: [Rational; 4] = Default::default();
        for (coeff, unit) in parse_terms(s, &["i1", "i2", "i1i2"])? {
            let slot = unit.map_or(0, |i| i + 1);
            u[slot] += coeff;
        }
        let [u1, u2, u3, u4] = u;
        Ok(Self::from_real_quad(u1, u2, u3, u4))
    }

    fn parse_idempotent(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(format!("scalar {s:?}"), "expected [minus | plus]"))?;
        let (m, p) = inner
            .split_once('|')
            .ok_or_else(|| Error::parse(format!("scalar {s:?}"), "missing '|' separator"))?;
        Ok(Self::new(m.parse()?, p.parse()?))
    }
}

impl From<RationalComplex> for BicomplexScalar {
    fn from(z: RationalComplex) -> Self {
        Self::from_complex(z)
    }
}

impl Add<&BicomplexScalar> for &BicomplexScalar {
    type Output = BicomplexScalar;
    fn add(self, rhs: &BicomplexScalar) -> BicomplexScalar {
        BicomplexScalar::new(&self.minus + &rhs.minus, &self.plus + &rhs.plus)
    }
}

impl Sub<&BicomplexScalar> for &BicomplexScalar {
    type Output = BicomplexScalar;
    fn sub(self, rhs: &BicomplexScalar) -> BicomplexScalar {
        BicomplexScalar::new(&self.minus - &rhs.minus, &self.plus - &rhs.plus)
    }
}

impl Mul<&BicomplexScalar> for &BicomplexScalar {
    type Output = BicomplexScalar;
    fn mul(self, rhs: &BicomplexScalar) -> BicomplexScalar {
        BicomplexScalar::new(&self.minus * &rhs.minus, &self.plus * &rhs.plus)
    }
}

impl Add for BicomplexScalar {
    type Output = BicomplexScalar;
    fn add(self, rhs: BicomplexScalar) -> BicomplexScalar {
        &self + &rhs
    }
}

impl Sub for BicomplexScalar {
    type Output = BicomplexScalar;
    fn sub(self, rhs: BicomplexScalar) -> BicomplexScalar {
        &self - &rhs
    }
}

impl Mul for BicomplexScalar {
    type Output = BicomplexScalar;
    fn mul(self, rhs: BicomplexScalar) -> BicomplexScalar {
        &self * &rhs
    }
}

impl Neg for &BicomplexScalar {
    type Output = BicomplexScalar;
    fn neg(self) -> BicomplexScalar {
        BicomplexScalar::new(-&self.minus, -&self.plus)
    }
}

impl Neg for BicomplexScalar {
    type Output = BicomplexScalar;
    fn neg(self) -> BicomplexScalar {
        -&self
    }
}

/// Idempotent form `[a+bi | c+di]`; use
/// [`to_cartesian_string`](BicomplexScalar::to_cartesian_string) for the
/// four-coefficient form.
impl fmt::Display for BicomplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {}]", self.minus, self.plus)
    }
}

impl FromStr for BicomplexScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('[') {
            Self::parse_idempotent(s)
        } else {
            Self::parse_cartesian(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    /// Independent oracle: multiply two numbers given by their four real
    /// coefficients over the basis (1, i₁, i₂, i₁i₂) with i₁² = i₂² = −1 and
    /// i₁i₂ = i₂i₁.
    fn quad_mul(a: &[Rational; 4], b: &[Rational; 4]) -> [Rational; 4] {
        // basis index -> (sign, index) of products; j = i1i2, j² = 1
        let table: [[(i64, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (1, 3), (-1, 0), (-1, 1)],
            [(1, 3), (-1, 2), (-1, 1), (1, 0)],
        ];
        let mut out: [Rational; 4] = Default::default();
        for p in 0..4 {
            for q in 0..4 {
                let (sign, idx) = table[p][q];
                out[idx] += &a[p] * &b[q] * rational(sign, 1);
            }
        }
        out
    }

    fn quad(u: [i64; 4], den: i64) -> [Rational; 4] {
        u.map(|x| rational(x, den))
    }

    fn c(re: i64, im: i64) -> RationalComplex {
        RationalComplex::from_ints(re, im)
    }

    #[test]
    fn cartesian_pair_examples() {
        let one = BicomplexScalar::from_cartesian_pair(c(1, 0), c(0, 0));
        assert_eq!(one, BicomplexScalar::new(c(1, 0), c(1, 0)));

        // i₂ = −i₁e₁ + i₁e₂, checked against the four-coefficient product table
        let i2 = BicomplexScalar::from_cartesian_pair(c(0, 0), c(1, 0));
        assert_eq!(i2, BicomplexScalar::new(c(0, -1), c(0, 1)));
        let e1 = quad([1, 0, 0, 1], 2);
        let e2 = quad([1, 0, 0, -1], 2);
        let neg_i1 = quad([0, -1, 0, 0], 1);
        let i1 = quad([0, 1, 0, 0], 1);
        let lhs = quad_mul(&neg_i1, &e1);
        let rhs = quad_mul(&i1, &e2);
        let sum: Vec<Rational> = lhs.iter().zip(&rhs).map(|(a, b)| a + b).collect();
        assert_eq!(sum, quad([0, 0, 1, 0], 1).to_vec());

        // i₁i₂ = e₁ − e₂
        let j = BicomplexScalar::from_cartesian_pair(c(0, 0), c(0, 1));
        assert_eq!(j, BicomplexScalar::new(c(1, 0), c(-1, 0)));
        let diff: Vec<Rational> = e1.iter().zip(&e2).map(|(a, b)| a - b).collect();
        assert_eq!(diff, quad([0, 0, 0, 1], 1).to_vec());
    }

    #[test]
    fn to_cartesian_examples() {
        assert_eq!(BicomplexScalar::one().to_cartesian_pair(), (c(1, 0), c(0, 0)));
        let half = rational(1, 2);
        assert_eq!(
            BicomplexScalar::e1().to_cartesian_pair(),
            (
                RationalComplex::real(half.clone()),
                RationalComplex::new(Rational::zero(), half)
            )
        );
        assert_eq!(
            BicomplexScalar::new(c(0, -1), c(0, 1)).to_cartesian_pair(),
            (c(0, 0), c(1, 0))
        );
    }

    #[test]
    fn real_quad_examples() {
        let q = |u: [i64; 4], d| {
            let [a, b, cc, e] = quad(u, d);
            BicomplexScalar::from_real_quad(a, b, cc, e)
        };
        assert_eq!(q([1, 0, 0, 0], 1), BicomplexScalar::one());
        assert_eq!(q([1, 0, 0, 1], 2), BicomplexScalar::e1());
        assert_eq!(q([1, 0, 0, -1], 2), BicomplexScalar::e2());
    }

    #[test]
    fn add_mul_examples() {
        let (e1, e2) = (BicomplexScalar::e1(), BicomplexScalar::e2());
        assert_eq!(&e1 + &e2, BicomplexScalar::one());
        assert_eq!(&e1 * &e2, BicomplexScalar::zero());
        assert_eq!(&e1 * &e1, e1);
        let i2 = BicomplexScalar::i2();
        assert_eq!(&i2 * &i2, -BicomplexScalar::one());
        let i1 = BicomplexScalar::i1();
        assert_eq!(&i1 * &i1, -BicomplexScalar::one());

        let a = BicomplexScalar::new(c(2, 0), c(3, 0));
        let b = BicomplexScalar::new(c(-2, 0), c(5, 0));
        let s = &a + &b;
        assert_eq!(s, BicomplexScalar::new(c(0, 0), c(8, 0)));
        assert_eq!(s.classify(), ScalarClass::ZeroDivisor);
        assert_eq!(&a + &BicomplexScalar::zero(), a);
    }

    #[test]
    fn mul_matches_cartesian_oracle() {
        let a = quad([1, -2, 3, 5], 3);
        let b = quad([-4, 1, 2, -1], 7);
        let to_s =
            |u: &[Rational; 4]| BicomplexScalar::from_real_quad(u[0].clone(), u[1].clone(), u[2].clone(), u[3].clone());
        assert_eq!(&to_s(&a) * &to_s(&b), to_s(&quad_mul(&a, &b)));
    }

    #[test]
    fn pow_examples() {
        let e1 = BicomplexScalar::e1();
        assert_eq!(e1.pow(7), e1);
        let x = BicomplexScalar::new(c(2, 0), c(3, 0));
        assert_eq!(x.pow(1), x);
        assert_eq!(x.pow(2), &x * &x);
        assert_eq!(x.pow(2), BicomplexScalar::new(c(4, 0), c(9, 0)));
        assert_eq!(x.pow(0), BicomplexScalar::one());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(BicomplexScalar::e1().classify(), ScalarClass::ZeroDivisor);
        assert_eq!(BicomplexScalar::zero().classify(), ScalarClass::Zero);
        let one_plus_i2 = BicomplexScalar::from_cartesian_pair(c(1, 0), c(1, 0));
        assert_eq!(one_plus_i2, BicomplexScalar::new(c(1, -1), c(1, 1)));
        assert_eq!(one_plus_i2.classify(), ScalarClass::Invertible);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(BicomplexScalar::one().inverse().unwrap(), BicomplexScalar::one());
        let x = BicomplexScalar::new(RationalComplex::from_ints(2, 0), RationalComplex::real(rational(1, 2)));
        let inv = x.inverse().unwrap();
        assert_eq!(
            inv,
            BicomplexScalar::new(RationalComplex::real(rational(1, 2)), RationalComplex::from_ints(2, 0))
        );
        assert_eq!(&x * &inv, BicomplexScalar::one());
        assert_eq!(
            BicomplexScalar::e1().inverse(),
            Err(Error::NotInvertible(ScalarClass::ZeroDivisor))
        );
        assert_eq!(
            BicomplexScalar::zero().inverse(),
            Err(Error::NotInvertible(ScalarClass::Zero))
        );
    }

    #[test]
    fn text_forms() {
        let e1 = BicomplexScalar::e1();
        assert_eq!(e1.to_string(), "[1+0i | 0+0i]");
        assert_eq!(e1.to_cartesian_string(), "1/2 + 0 i1 + 0 i2 + 1/2 i1i2");
        let e2 = BicomplexScalar::e2();
        assert_eq!(e2.to_cartesian_string(), "1/2 + 0 i1 + 0 i2 + -1/2 i1i2");

        for s in [
            e1.clone(),
            e2.clone(),
            BicomplexScalar::i2(),
            BicomplexScalar::new(c(3, -7), c(-1, 2)),
        ] {
            assert_eq!(s.to_string().parse::<BicomplexScalar>().unwrap(), s);
            assert_eq!(s.to_cartesian_string().parse::<BicomplexScalar>().unwrap(), s);
        }
        assert_eq!("i2".parse::<BicomplexScalar>().unwrap(), BicomplexScalar::i2());
        assert_eq!("1/2 - 1/2 i1i2".parse::<BicomplexScalar>().unwrap(), e2);
        assert!("[1+i".parse::<BicomplexScalar>().is_err());
        assert!("[1 2]".parse::<BicomplexScalar>().is_err());
        assert!("1 + 2 i3".parse::<BicomplexScalar>().is_err());
    }
}
