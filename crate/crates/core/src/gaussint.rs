//! Exact arithmetic over the Gaussian integers Z[i].
//!
//! Components are arbitrary precision [`BigInt`]s, so every ring operation is
//! exact. The textual form is `a+bi` with the real part first and an explicit
//! sign on the imaginary part (`3-4i`, `2i`, `-i`, `0`).

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Gaussian integer `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "GaussRepr", try_from = "GaussRepr")]
pub struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn real(re: impl Into<BigInt>) -> Self {
        Self::new(re, 0)
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn re(&self) -> &BigInt {
        &self.re
    }

    pub fn im(&self) -> &BigInt {
        &self.im
    }

    pub fn into_parts(self) -> (BigInt, BigInt) {
        (self.re, self.im)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// Squared absolute value `re² + im²`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    /// Multiplies by `i`; a component swap, no big-integer products.
    pub fn mul_i(&self) -> Self {
        Self {
            re: -&self.im,
            im: self.re.clone(),
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder in Z[i] or the divisor is zero.
    pub fn div_exact(&self, divisor: &GaussInt) -> Option<GaussInt> {
        let n = divisor.norm();
        if n.is_zero() {
            return None;
        }
        if n.is_one() {
            return Some(self * &divisor.conj());
        }
        let p = self * &divisor.conj();
        let (qr, rr) = p.re.div_rem(&n);
        if !rr.is_zero() {
            return None;
        }
        let (qi, ri) = p.im.div_rem(&n);
        if !ri.is_zero() {
            return None;
        }
        Some(GaussInt { re: qr, im: qi })
    }

    /// Divides by a unit; always exact.
    pub fn strip_unit(&self, unit: UnitPhase) -> GaussInt {
        unit.inverse().apply(self)
    }

    /// Number of decimal digits in the larger component (sign excluded).
    pub fn decimal_digits(&self) -> usize {
        let digits = |v: &BigInt| {
            if v.is_zero() {
                1
            } else {
                v.abs().to_str_radix(10).len()
            }
        };
        digits(&self.re).max(digits(&self.im))
    }
}

/// Sum of two Gaussian integers.
pub fn gi_add(a: &GaussInt, b: &GaussInt) -> GaussInt {
    a + b
}

/// Product of two Gaussian integers.
pub fn gi_mul(a: &GaussInt, b: &GaussInt) -> GaussInt {
    a * b
}

/// `z / u` for a unit `u`.
pub fn strip_unit(z: &GaussInt, u: UnitPhase) -> GaussInt {
    z.strip_unit(u)
}

/// Identifies which of the four units `z` is.
pub fn classify_unit(z: &GaussInt) -> Result<UnitPhase> {
    UnitPhase::ALL
        .into_iter()
        .find(|u| u.as_gauss() == *z)
        .ok_or_else(|| Error::NotAUnit(z.to_string()))
}

/// `i^k` for any integer `k`.
pub fn unit_pow_i(k: i64) -> UnitPhase {
    UnitPhase::from_exponent(k)
}

impl From<i64> for GaussInt {
    fn from(v: i64) -> Self {
        GaussInt::real(v)
    }
}

impl From<BigInt> for GaussInt {
    fn from(v: BigInt) -> Self {
        GaussInt::real(v)
    }
}

impl From<UnitPhase> for GaussInt {
    fn from(u: UnitPhase) -> Self {
        u.as_gauss()
    }
}

impl Zero for GaussInt {
    fn zero() -> Self {
        GaussInt::new(0, 0)
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussInt {
    fn one() -> Self {
        GaussInt::new(1, 0)
    }
}

impl<'a> Add<&'a GaussInt> for &GaussInt {
    type Output = GaussInt;

    fn add(self, rhs: &'a GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussInt> for &GaussInt {
    type Output = GaussInt;

    fn sub(self, rhs: &'a GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussInt> for &GaussInt {
    type Output = GaussInt;

    fn mul(self, rhs: &'a GaussInt) -> GaussInt {
        // Real operands are common (the off-diagonal ones of N(n)); skip the
        // cross terms when possible.
        if rhs.im.is_zero() {
            return self.scale(&rhs.re);
        }
        if self.im.is_zero() {
            return rhs.scale(&self.re);
        }
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $AssignTrait:ident, $assign:ident) => {
        impl $Trait<GaussInt> for GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: GaussInt) -> GaussInt {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $Trait<&'a GaussInt> for GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: &'a GaussInt) -> GaussInt {
                (&self).$method(rhs)
            }
        }

        impl $Trait<GaussInt> for &GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: GaussInt) -> GaussInt {
                self.$method(&rhs)
            }
        }

        impl $AssignTrait<GaussInt> for GaussInt {
            fn $assign(&mut self, rhs: GaussInt) {
                *self = (&*self).$method(&rhs);
            }
        }

        impl<'a> $AssignTrait<&'a GaussInt> for GaussInt {
            fn $assign(&mut self, rhs: &'a GaussInt) {
                *self = (&*self).$method(rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for GaussInt {
    type Output = GaussInt;

    fn neg(self) -> GaussInt {
        GaussInt {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;

    fn neg(self) -> GaussInt {
        GaussInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Sum for GaussInt {
    fn sum<I: Iterator<Item = GaussInt>>(iter: I) -> Self {
        iter.fold(GaussInt::zero(), |acc, z| acc + z)
    }
}

impl<'a> Sum<&'a GaussInt> for GaussInt {
    fn sum<I: Iterator<Item = &'a GaussInt>>(iter: I) -> Self {
        iter.fold(GaussInt::zero(), |acc, z| acc + z)
    }
}

impl Product for GaussInt {
    fn product<I: Iterator<Item = GaussInt>>(iter: I) -> Self {
        iter.fold(GaussInt::one(), |acc, z| acc * z)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, v: &BigInt, lead: bool| {
            let sign = if v.is_negative() {
                "-"
            } else if lead {
                ""
            } else {
                "+"
            };
            let mag = v.abs();
            if mag.is_one() {
                write!(f, "{sign}i")
            } else {
                write!(f, "{sign}{mag}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => imag(f, &self.im, true),
            (false, false) => {
                write!(f, "{}", self.re)?;
                imag(f, &self.im, false)
            }
        }
    }
}

impl fmt::Debug for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_signed(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('+').unwrap_or(s);
    if digits.is_empty() || digits.starts_with(['+']) {
        return None;
    }
    BigInt::from_str(digits).ok()
}

impl FromStr for GaussInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let Some(body) = t.strip_suffix('i') else {
            return parse_signed(&t).map(GaussInt::real).ok_or_else(err);
        };
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(p, _)| p)
            .last();
        let (re_part, im_part) = match split {
            Some(p) => (&body[..p], &body[p..]),
            None => ("0", body),
        };
        let re = parse_signed(re_part).ok_or_else(err)?;
        let im = match im_part {
            "" | "+" => BigInt::one(),
            "-" => -BigInt::one(),
            other => parse_signed(other).ok_or_else(err)?,
        };
        Ok(GaussInt { re, im })
    }
}

#[derive(Clone, Serialize, Deserialize)]
struct GaussRepr {
    re: String,
    im: String,
}

impl From<GaussInt> for GaussRepr {
    fn from(z: GaussInt) -> Self {
        GaussRepr {
            re: z.re.to_string(),
            im: z.im.to_string(),
        }
    }
}

impl TryFrom<GaussRepr> for GaussInt {
    type Error = Error;

    fn try_from(r: GaussRepr) -> Result<Self> {
        let parse = |s: &str| BigInt::from_str(s).map_err(|_| Error::Parse(s.to_string()));
        Ok(GaussInt {
            re: parse(&r.re)?,
            im: parse(&r.im)?,
        })
    }
}

/// One of the four units `1, i, -1, -i` of Z[i].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnitPhase {
    One,
    I,
    MinusOne,
    MinusI,
}

impl UnitPhase {
    pub const ALL: [UnitPhase; 4] = [
        UnitPhase::One,
        UnitPhase::I,
        UnitPhase::MinusOne,
        UnitPhase::MinusI,
    ];

    /// `e` such that `self = i^e`, in `0..4`.
    pub fn exponent(self) -> u8 {
        match self {
            UnitPhase::One => 0,
            UnitPhase::I => 1,
            UnitPhase::MinusOne => 2,
            UnitPhase::MinusI => 3,
        }
    }

    pub fn from_exponent(k: i64) -> Self {
        Self::ALL[k.rem_euclid(4) as usize]
    }

    pub fn as_gauss(self) -> GaussInt {
        match self {
            UnitPhase::One => GaussInt::new(1, 0),
            UnitPhase::I => GaussInt::new(0, 1),
            UnitPhase::MinusOne => GaussInt::new(-1, 0),
            UnitPhase::MinusI => GaussInt::new(0, -1),
        }
    }

    pub fn inverse(self) -> Self {
        Self::from_exponent(-i64::from(self.exponent()))
    }

    /// Multiplies `z` by this unit without a general product.
    pub fn apply(self, z: &GaussInt) -> GaussInt {
        match self {
            UnitPhase::One => z.clone(),
            UnitPhase::I => z.mul_i(),
            UnitPhase::MinusOne => -z,
            UnitPhase::MinusI => -z.mul_i(),
        }
    }

    /// `z · self`, with a real-valued magnitude.
    pub fn times(self, magnitude: &BigInt) -> GaussInt {
        self.apply(&GaussInt::real(magnitude.clone()))
    }
}

impl Mul for UnitPhase {
    type Output = UnitPhase;

    // Exponents add under multiplication.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: UnitPhase) -> UnitPhase {
        UnitPhase::from_exponent(i64::from(self.exponent()) + i64::from(rhs.exponent()))
    }
}

impl fmt::Display for UnitPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.as_gauss(), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(gi_add(&g(0, 2), &g(0, 2)), g(0, 4));
        assert_eq!(gi_add(&g(3, 4), &g(-3, -4)), GaussInt::zero());
        assert_eq!(gi_add(&g(-5, 0), &g(0, 0)), g(-5, 0));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(gi_mul(&g(0, 2), &g(0, 2)), g(-4, 0));
        // m = -i for n = 1 turns det N(1) = 2i into P_2 = 2.
        assert_eq!(gi_mul(&g(0, -1), &g(0, 2)), g(2, 0));
        assert_eq!(gi_mul(&g(0, 2), &g(-5, 0)), g(0, -10));
    }

    #[test]
    fn multiplication_matches_schoolbook() {
        // (a+bi)(c+di) expanded term by term, on plain i128.
        let cases = [(0, 2, -5, 0), (3, -7, 11, 2), (-4, -4, 9, -13), (1, 0, 0, 1)];
        for (a, b, c, d) in cases {
            let (a, b, c, d): (i128, i128, i128, i128) = (a, b, c, d);
            let re = a * c - b * d;
            let im = a * d + b * c;
            let got = g(a as i64, b as i64) * g(c as i64, d as i64);
            assert_eq!(got, GaussInt::new(re, im));
        }
    }

    #[test]
    fn unit_power_examples() {
        assert_eq!(unit_pow_i(0), UnitPhase::One);
        assert_eq!(unit_pow_i(2), UnitPhase::MinusOne);
        assert_eq!(unit_pow_i(-1), UnitPhase::MinusI);
        assert_eq!(unit_pow_i(4001), UnitPhase::I);
        assert_eq!(unit_pow_i(-6), UnitPhase::MinusOne);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_unit(&g(0, -1)), Ok(UnitPhase::MinusI));
        assert_eq!(classify_unit(&g(1, 0)), Ok(UnitPhase::One));
        assert!(matches!(classify_unit(&g(0, 2)), Err(Error::NotAUnit(_))));
        assert!(matches!(classify_unit(&g(0, 0)), Err(Error::NotAUnit(_))));
        assert!(matches!(classify_unit(&g(1, 1)), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn strip_unit_examples() {
        // det N(3) = -12i, and m = i; i·(-12i) = 12 = P_4.
        assert_eq!(strip_unit(&g(0, -12), UnitPhase::MinusI), g(12, 0));
        assert_eq!(strip_unit(&g(-5, 0), UnitPhase::MinusOne), g(5, 0));
        assert_eq!(strip_unit(&g(7, 3), UnitPhase::One), g(7, 3));
    }

    #[test]
    fn unit_group_table() {
        use UnitPhase::*;
        assert_eq!(I * I, MinusOne);
        assert_eq!(I * MinusI, One);
        assert_eq!(MinusOne * MinusOne, One);
        assert_eq!(MinusI * MinusI, MinusOne);
        for a in UnitPhase::ALL {
            assert_eq!(a * One, a);
            assert_eq!(a * a.inverse(), One);
            let z = a.as_gauss();
            assert_eq!(z.re().abs() + z.im().abs(), BigInt::one());
            assert_eq!(classify_unit(&z), Ok(a));
            for b in UnitPhase::ALL {
                assert_eq!((a * b).as_gauss(), a.as_gauss() * b.as_gauss());
                assert_eq!(a * b, b * a);
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(0, 0).to_string(), "0");
        assert_eq!(g(3, 0).to_string(), "3");
        assert_eq!(g(0, 1).to_string(), "i");
        assert_eq!(g(0, -1).to_string(), "-i");
        assert_eq!(g(0, 2).to_string(), "2i");
        assert_eq!(g(3, -4).to_string(), "3-4i");
        assert_eq!(g(-3, 1).to_string(), "-3+i");
        assert_eq!(g(7, 12).to_string(), "7+12i");
    }

    #[test]
    fn parse_forms() {
        let cases = [
            ("i", g(0, 1)),
            ("-i", g(0, -1)),
            ("+i", g(0, 1)),
            ("2i", g(0, 2)),
            ("3", g(3, 0)),
            ("-3", g(-3, 0)),
            ("3-4i", g(3, -4)),
            ("-3+i", g(-3, 1)),
            ("0", g(0, 0)),
            (" 5 + 2i ", g(5, 2)),
        ];
        for (s, want) in cases {
            assert_eq!(s.parse::<GaussInt>().unwrap(), want, "{s}");
        }
        for bad in ["", "abc", "3+", "ii", "3+-4i", "++3", "1.5"] {
            assert!(bad.parse::<GaussInt>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn json_uses_decimal_strings() {
        let z = GaussInt::new(BigInt::from(10).pow(40), -7);
        let json = serde_json::to_string(&z).unwrap();
        assert_eq!(json, r#"{"re":"10000000000000000000000000000000000000000","im":"-7"}"#);
        let back: GaussInt = serde_json::from_str(&json).unwrap();
        assert_eq!(back, z);
        assert!(serde_json::from_str::<GaussInt>(r#"{"re":"1.0","im":"0"}"#).is_err());
    }

    #[test]
    fn exact_division() {
        let a = g(3, -7);
        let b = g(-2, 5);
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!(g(1, 0).div_exact(&g(1, 1)), None);
        assert_eq!(g(1, 0).div_exact(&g(0, 0)), None);
    }

    fn big() -> impl Strategy<Value = BigInt> {
        prop::collection::vec(any::<u8>(), 0..=64).prop_map(|b| BigInt::from_signed_bytes_be(&b))
    }

    fn gauss() -> impl Strategy<Value = GaussInt> {
        (big(), big()).prop_map(|(re, im)| GaussInt::new(re, im))
    }

    fn unit() -> impl Strategy<Value = UnitPhase> {
        prop::sample::select(UnitPhase::ALL.to_vec())
    }

    proptest! {
        #[test]
        fn ring_axioms(a in gauss(), b in gauss(), c in gauss()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a - &a, GaussInt::zero());
            prop_assert_eq!(&a * &GaussInt::one(), a.clone());
        }

        #[test]
        fn strip_unit_inverts_multiplication(z in gauss(), u in unit()) {
            prop_assert_eq!(strip_unit(&gi_mul(&z, &u.as_gauss()), u), z.clone());
            prop_assert_eq!(u.apply(&z), &z * &u.as_gauss());
        }

        #[test]
        fn text_round_trip(z in gauss()) {
            prop_assert_eq!(z.to_string().parse::<GaussInt>().unwrap(), z);
        }

        #[test]
        fn division_inverts_product(a in gauss(), b in gauss()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }
}
