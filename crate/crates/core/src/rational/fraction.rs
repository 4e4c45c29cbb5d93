use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::FractionError;

/// An exact rational number `p/q` over arbitrary-precision integers.
///
/// A `Fraction` remembers the numerator and denominator it was built from;
/// callers that care about lowest terms use [`Fraction::reduced`]. The
/// denominator is always positive. Equality and ordering compare values, so
/// `10/4 == 5/2`.
#[derive(Clone, Debug)]
pub struct Fraction {
    numer: BigInt,
    denom: BigInt,
}

impl Fraction {
    /// Builds `p/q` in lowest terms with `q >= 1`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, FractionError> {
        Ok(Self::new_raw(p, q)?.reduced())
    }

    /// Builds `p/q` without reducing. The sign is moved onto the numerator.
    pub fn new_raw(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, FractionError> {
        let (mut numer, mut denom) = (p.into(), q.into());
        if denom.is_zero() {
            return Err(FractionError::ZeroDenominator);
        }
        if denom.is_negative() {
            numer = -numer;
            denom = -denom;
        }
        Ok(Fraction { numer, denom })
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Fraction {
            numer: n.into(),
            denom: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn numer(&self) -> &BigInt {
        &self.numer
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn into_parts(self) -> (BigInt, BigInt) {
        (self.numer, self.denom)
    }

    /// Lowest-terms form. Idempotent.
    pub fn reduced(&self) -> Self {
        let g = self.numer.gcd(&self.denom);
        if g.is_one() || g.is_zero() {
            return self.clone();
        }
        Fraction {
            numer: &self.numer / &g,
            denom: &self.denom / &g,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.numer.gcd(&self.denom).is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.numer.is_multiple_of(&self.denom)
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.numer.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.numer.is_negative()
    }

    pub fn recip(&self) -> Result<Self, FractionError> {
        Self::new_raw(self.denom.clone(), self.numer.clone()).map(|f| f.reduced())
    }

    pub fn checked_div(&self, rhs: &Fraction) -> Result<Self, FractionError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn floor(&self) -> BigInt {
        self.numer.div_floor(&self.denom)
    }

    pub fn ceil(&self) -> BigInt {
        -((-&self.numer).div_floor(&self.denom))
    }

    /// Nearest `f64`, with relative error around 2^-60 before the final rounding.
    pub fn to_f64(&self) -> f64 {
        if self.numer.is_zero() {
            return 0.0;
        }
        let n = self.numer.abs();
        let shift = self.denom.bits() as i64 - n.bits() as i64 + 64;
        let scaled = if shift >= 0 {
            (n << shift as usize) / &self.denom
        } else {
            n / (&self.denom << (-shift) as usize)
        };
        let mantissa = scaled.to_f64().unwrap_or(f64::INFINITY);
        let v = scale_pow2(mantissa, -shift);
        if self.numer.is_negative() {
            -v
        } else {
            v
        }
    }
}

/// `x * 2^exp` without `std`.
fn scale_pow2(mut x: f64, mut exp: i64) -> f64 {
    const STEP: i64 = 512;
    let up = f64::from_bits(((1023 + STEP) as u64) << 52);
    let down = f64::from_bits(((1023 - STEP) as u64) << 52);
    while exp > STEP {
        x *= up;
        exp -= STEP;
    }
    while exp < -STEP {
        x *= down;
        exp += STEP;
    }
    x * f64::from_bits(((1023 + exp) as u64) << 52)
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        &self.numer * &other.denom == &other.numer * &self.denom
    }
}

impl Eq for Fraction {}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<u64> for Fraction {
    fn from(n: u64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for Fraction {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

impl Add for &Fraction {
    type Output = Fraction;
    fn add(self, rhs: &Fraction) -> Fraction {
        Fraction {
            numer: &self.numer * &rhs.denom + &rhs.numer * &self.denom,
            denom: &self.denom * &rhs.denom,
        }
        .reduced()
    }
}

impl Sub for &Fraction {
    type Output = Fraction;
    fn sub(self, rhs: &Fraction) -> Fraction {
        Fraction {
            numer: &self.numer * &rhs.denom - &rhs.numer * &self.denom,
            denom: &self.denom * &rhs.denom,
        }
        .reduced()
    }
}

impl Mul for &Fraction {
    type Output = Fraction;
    fn mul(self, rhs: &Fraction) -> Fraction {
        Fraction {
            numer: &self.numer * &rhs.numer,
            denom: &self.denom * &rhs.denom,
        }
        .reduced()
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Fraction {
            type Output = Fraction;
            fn $m(self, rhs: Fraction) -> Fraction {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Always `p/q`, including `n/1` for integers.
impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

/// Accepts `p/q` (kept unreduced), integers, and finite decimals such as
/// `-1.25` (reduced).
impl FromStr for Fraction {
    type Err = FractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || FractionError::Parse(s.to_string());
        if let Some((p, q)) = s.split_once('/') {
            let p = parse_int(p.trim()).ok_or_else(bad)?;
            let q = parse_int(q.trim()).ok_or_else(bad)?;
            return Fraction::new_raw(p, q);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int.starts_with('-');
            let int_part = match int {
                "" | "-" | "+" => BigInt::zero(),
                _ => parse_int(int).ok_or_else(bad)?,
            };
            let scale = num_traits::pow(BigInt::from(10u32), frac.len());
            let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
            let magnitude = int_part.abs() * &scale + frac_part;
            let numer = if negative { -magnitude } else { magnitude };
            return Fraction::new(numer, scale);
        }
        parse_int(s).map(Fraction::from_integer).ok_or_else(bad)
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn f(p: i64, q: i64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    #[test]
    fn reduces_and_moves_sign() {
        let x = Fraction::new(10, -4).unwrap();
        assert_eq!(x.numer(), &BigInt::from(-5));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(x.reduced().reduced().to_string(), x.reduced().to_string());
    }

    #[test]
    fn raw_keeps_common_factor() {
        let x = Fraction::new_raw(10, 4).unwrap();
        assert!(!x.is_reduced());
        assert_eq!(x.to_string(), "10/4");
        assert_eq!(x, f(5, 2));
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(Fraction::new(1, 0), Err(FractionError::ZeroDenominator));
        assert!(Fraction::zero().recip().is_err());
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(f(7, 2).floor(), BigInt::from(3));
        assert_eq!(f(7, 2).ceil(), BigInt::from(4));
        assert_eq!(f(-7, 2).floor(), BigInt::from(-4));
        assert_eq!(f(-7, 2).ceil(), BigInt::from(-3));
        assert_eq!(f(6, 2).ceil(), BigInt::from(3));
    }

    #[test]
    fn parses_forms() {
        assert_eq!("5/2".parse::<Fraction>().unwrap(), f(5, 2));
        assert_eq!(" 7 ".parse::<Fraction>().unwrap(), f(7, 1));
        assert_eq!("1.5".parse::<Fraction>().unwrap(), f(3, 2));
        assert_eq!("-0.25".parse::<Fraction>().unwrap(), f(-1, 4));
        assert_eq!(".5".parse::<Fraction>().unwrap(), f(1, 2));
        for bad in ["", "1/", "a/2", "1.", "1.2.3", "--3", "1e5"] {
            assert!(bad.parse::<Fraction>().is_err(), "{bad}");
        }
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&f(1, 2) + &f(1, 3), f(5, 6));
        assert_eq!(&f(1, 2) - &f(1, 3), f(1, 6));
        assert_eq!(&f(2, 3) * &f(9, 4), f(3, 2));
        assert_eq!(f(2, 3).checked_div(&f(4, 9)).unwrap(), f(3, 2));
        assert!(f(1, 3) < f(1, 2));
    }

    #[test]
    fn to_f64_large_and_small() {
        assert_eq!(f(1, 4).to_f64(), 0.25);
        assert_eq!(f(-99, 1).to_f64(), -99.0);
        let big = Fraction::from_integer(BigInt::from(10u32).pow(300));
        assert!((big.to_f64() / 1e300 - 1.0).abs() < 1e-15);
        let tiny = Fraction::new(BigInt::one(), BigInt::from(10u32).pow(300)).unwrap();
        assert!((tiny.to_f64() / 1e-300 - 1.0).abs() < 1e-15);
    }
}
