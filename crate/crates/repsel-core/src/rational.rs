//! Exact rational arithmetic.
//!
//! Property verdicts compare fractions like `C(K,r,a)/|K|` against a
//! tolerance. Near the boundary a float comparison can flip the verdict, so
//! every comparison here cross-multiplies integers instead. Values are kept
//! reduced with a positive denominator, which makes equality structural.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// An exact rational number with 64-bit numerator and denominator.
///
/// Intermediate products are computed in 128 bits; an operation whose
/// reduced result no longer fits 64 bits panics rather than rounding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: i64,
    denom: i64, // always > 0
}

impl Rational {
    /// Builds `numer/denom`, reduced. Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "rational with zero denominator");
        Self::from_i128(numer as i128, denom as i128)
    }

    fn from_i128(numer: i128, denom: i128) -> Self {
        debug_assert!(denom != 0);
        let sign = if (numer < 0) != (denom < 0) && numer != 0 {
            -1
        } else {
            1
        };
        let n = numer.unsigned_abs();
        let d = denom.unsigned_abs();
        let g = gcd(n, d);
        let (n, d) = if g == 0 { (0, 1) } else { (n / g, d / g) };
        Rational {
            numer: i64::try_from(sign * n as i128).expect("rational numerator overflow"),
            denom: i64::try_from(d).expect("rational denominator overflow"),
        }
    }

    pub const ZERO: Rational = Rational { numer: 0, denom: 1 };
    pub const ONE: Rational = Rational { numer: 1, denom: 1 };

    pub fn from_integer(value: i64) -> Self {
        Rational {
            numer: value,
            denom: 1,
        }
    }

    /// Exact ratio of two counts, e.g. `C(K,r,a) / |K|`.
    pub fn ratio(numer: u64, denom: u64) -> Self {
        assert!(denom != 0, "rational with zero denominator");
        Self::from_i128(numer as i128, denom as i128)
    }

    pub fn numer(&self) -> i64 {
        self.numer
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn abs(self) -> Self {
        Rational {
            numer: self.numer.abs(),
            denom: self.denom,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.numer < 0
    }

    pub fn is_zero(&self) -> bool {
        self.numer == 0
    }

    /// Largest integer at most `self`.
    pub fn floor(&self) -> i64 {
        self.numer.div_euclid(self.denom)
    }

    /// Smallest integer at least `self`.
    pub fn ceil(&self) -> i64 {
        -((-*self).floor())
    }

    /// Nearest `f64`; for reporting only, never for verdicts.
    pub fn to_f64(&self) -> f64 {
        self.numer as f64 / self.denom as f64
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        let lhs = self.numer as i128 * other.denom as i128;
        let rhs = other.numer as i128 * self.denom as i128;
        lhs.cmp(&rhs)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational::from_i128(
            self.numer as i128 * rhs.denom as i128 + rhs.numer as i128 * self.denom as i128,
            self.denom as i128 * rhs.denom as i128,
        )
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational::from_i128(
            self.numer as i128 * rhs.denom as i128 - rhs.numer as i128 * self.denom as i128,
            self.denom as i128 * rhs.denom as i128,
        )
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational::from_i128(
            self.numer as i128 * rhs.numer as i128,
            self.denom as i128 * rhs.denom as i128,
        )
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(rhs.numer != 0, "rational division by zero");
        Rational::from_i128(
            self.numer as i128 * rhs.denom as i128,
            self.denom as i128 * rhs.numer as i128,
        )
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            numer: -self.numer,
            denom: self.denom,
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

/// Error parsing a rational from text.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(alloc::string::String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(alloc::string::String),
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p/q`, a plain integer, or a terminating decimal like `0.25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use alloc::string::ToString;
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        let invalid = || ParseRationalError::Invalid(s.to_string());
        if let Some((num, den)) = s.split_once('/') {
            let n: i64 = num.trim().parse().map_err(|_| invalid())?;
            let d: i64 = den.trim().parse().map_err(|_| invalid())?;
            if d == 0 {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            return Ok(Rational::new(n, d));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let negative = int_part.starts_with('-');
            let int_digits = int_part
                .strip_prefix(['-', '+'])
                .unwrap_or(int_part);
            if !int_digits.chars().all(|c| c.is_ascii_digit())
                || frac_part.is_empty()
                || frac_part.len() > 18
                || !frac_part.chars().all(|c| c.is_ascii_digit())
            {
                return Err(invalid());
            }
            let int_val: i128 = if int_digits.is_empty() {
                0
            } else {
                int_digits.parse().map_err(|_| invalid())?
            };
            let frac_val: i128 = frac_part.parse().map_err(|_| invalid())?;
            let scale = 10i128.pow(frac_part.len() as u32);
            let mut numer = int_val * scale + frac_val;
            if negative {
                numer = -numer;
            }
            return Ok(Rational::from_i128(numer, scale));
        }
        let n: i64 = s.parse().map_err(|_| invalid())?;
        Ok(Rational::from_integer(n))
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use alloc::string::ToString;
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = <alloc::string::String as serde::Deserialize>::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn reduces_on_construction() {
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
        assert_eq!(Rational::new(-3, -6), Rational::new(1, 2));
        assert_eq!(Rational::new(3, -6), Rational::new(-1, 2));
        assert_eq!(Rational::new(0, -5), Rational::ZERO);
    }

    #[test]
    fn ordering_is_exact_near_boundaries() {
        // 1/3 vs 0.333333... truncated: exact comparison must not conflate.
        let third = Rational::new(1, 3);
        let approx = "0.333333333333333".parse::<Rational>().unwrap();
        assert!(approx < third);
        assert!(Rational::new(1, 25) < Rational::new(2, 25));
        assert_eq!(Rational::new(20, 100), Rational::new(1, 5));
    }

    #[test]
    fn arithmetic() {
        let a = Rational::new(1, 6);
        let b = Rational::new(1, 3);
        assert_eq!(a + b, Rational::new(1, 2));
        assert_eq!(b - a, a);
        assert_eq!(a * b, Rational::new(1, 18));
        assert_eq!(b / a, Rational::from_integer(2));
        assert_eq!(-b, Rational::new(-1, 3));
        assert_eq!((a - b).abs(), a);
    }

    #[test]
    fn parses_fraction_integer_and_decimal() {
        assert_eq!("3/4".parse::<Rational>().unwrap(), Rational::new(3, 4));
        assert_eq!("-3/4".parse::<Rational>().unwrap(), Rational::new(-3, 4));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from_integer(7));
        assert_eq!("0.25".parse::<Rational>().unwrap(), Rational::new(1, 4));
        assert_eq!("-0.5".parse::<Rational>().unwrap(), Rational::new(-1, 2));
        assert_eq!(".5".parse::<Rational>().unwrap(), Rational::new(1, 2));
        assert_eq!("1/0".parse::<Rational>(), {
            Err(ParseRationalError::ZeroDenominator("1/0".to_string()))
        });
        assert!("abc".parse::<Rational>().is_err());
        assert!("1.2.3".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
    }

    #[test]
    fn floor_and_ceil_handle_signs() {
        assert_eq!(Rational::new(7, 2).floor(), 3);
        assert_eq!(Rational::new(7, 2).ceil(), 4);
        assert_eq!(Rational::new(-7, 2).floor(), -4);
        assert_eq!(Rational::new(-7, 2).ceil(), -3);
        assert_eq!(Rational::from_integer(5).floor(), 5);
        assert_eq!(Rational::from_integer(5).ceil(), 5);
        assert_eq!(Rational::ZERO.ceil(), 0);
    }

    #[test]
    fn display_round_trips() {
        for s in ["3/4", "-1/2", "5", "0"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), *s);
            assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
        assert_eq!("0.2".parse::<Rational>().unwrap().to_string(), "1/5");
    }
}
