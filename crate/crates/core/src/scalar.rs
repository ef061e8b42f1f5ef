//! Coefficient rings.
//!
//! Everything in this crate is exact. The [`Scalar`] trait is the small
//! surface the algebra needs on top of `num_traits::Num`: integer embedding,
//! unit detection and the characteristic. [`Field`] marks rings where every
//! nonzero element is invertible, which the linear solvers require.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

pub trait Scalar:
    Clone + fmt::Debug + fmt::Display + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse, if `self` is a unit of the ring.
    fn try_inverse(&self) -> Option<Self>;

    fn characteristic() -> u64;

    /// Short ring tag used in reports, e.g. `z`, `q`, `f2`.
    fn ring_tag() -> String;

    fn sign(negative: bool) -> Self {
        if negative {
            -Self::one()
        } else {
            Self::one()
        }
    }
}

/// A [`Scalar`] in which every nonzero element has an inverse.
pub trait Field: Scalar {
    fn inv(&self) -> Self {
        self.try_inverse().expect("division by zero in a field")
    }
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn try_inverse(&self) -> Option<Self> {
        match *self {
            1 => Some(1),
            -1 => Some(-1),
            _ => None,
        }
    }
    fn characteristic() -> u64 {
        0
    }
    fn ring_tag() -> String {
        "z".into()
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn characteristic() -> u64 {
        0
    }
    fn ring_tag() -> String {
        "z".into()
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn characteristic() -> u64 {
        0
    }
    fn ring_tag() -> String {
        "q".into()
    }
}

impl Field for BigRational {}

/// Integers modulo a prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::<P>(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.try_inverse().expect("division by zero in F_p")
    }
}

impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, o: Self) -> Self {
        assert!(!o.is_zero(), "remainder by zero in F_p");
        Fp(0)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::new)
    }
}

impl<const P: u64> FromStr for Fp<P> {
    type Err = std::num::ParseIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim().parse::<i64>().map(Fp::new)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat; P is assumed prime.
            Some(self.pow(P - 2))
        }
    }
    fn characteristic() -> u64 {
        P
    }
    fn ring_tag() -> String {
        format!("f{P}")
    }
}

impl<const P: u64> Field for Fp<P> {}

/// Parse an exact scalar: integers, `a/b` fractions.
pub fn parse_scalar<S: Scalar>(text: &str) -> Option<S> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim().parse::<i64>().ok()?, b.trim().parse::<i64>().ok()?),
        None => (t.parse::<i64>().ok()?, 1),
    };
    if den == 0 {
        return None;
    }
    let n = S::from_i64(num);
    if den == 1 {
        return Some(n);
    }
    let d = S::from_i64(den).try_inverse()?;
    Some(n * d)
}

/// Convert a JSON number or string ("3", "-1/2") into a scalar.
pub fn scalar_from_json<S: Scalar>(v: &serde_json::Value) -> Option<S> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(S::from_i64),
        serde_json::Value::String(s) => parse_scalar(s),
        _ => None,
    }
}

/// Integer value of a rational scalar, if it is one.
pub fn rational_to_i64(q: &BigRational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_field_axioms() {
        type F5 = Fp<5>;
        for a in 0..5 {
            let x = F5::new(a);
            if a != 0 {
                assert_eq!(x * x.inv(), F5::one());
            }
            assert_eq!(x + (-x), F5::zero());
        }
        assert_eq!(F5::new(-1).value(), 4);
    }

    #[test]
    fn parse_fractions() {
        let q: BigRational = parse_scalar("-3/6").unwrap();
        assert_eq!(q, BigRational::new(BigInt::from(-1), BigInt::from(2)));
        assert_eq!(parse_scalar::<i64>("1/2"), None);
        assert_eq!(parse_scalar::<Fp<3>>("1/2"), Some(Fp::<3>::new(2)));
        assert_eq!(parse_scalar::<i64>("1/0"), None);
    }

    #[test]
    fn units_of_z() {
        assert_eq!(5i64.try_inverse(), None);
        assert_eq!((-1i64).try_inverse(), Some(-1));
    }
}
