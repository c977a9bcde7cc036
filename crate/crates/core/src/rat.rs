//! Exact rational scalars.
//!
//! Every quantity in this crate is a `Rat`: an arbitrary-precision rational
//! kept reduced with a positive denominator. There is no floating-point mode.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Largest integer not exceeding this rational.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// The integer value, if this rational is an integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.0.is_integer() {
            Some(self.0.to_integer())
        } else {
            None
        }
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        &self / &rhs
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl fmt::Display for Rat {
    /// "p/q", or just "p" for integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Error when text does not parse as a rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational: {:?}", self.0)
    }
}

impl std::error::Error for ParseRatError {}

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || ParseRatError(s.to_string());
        match s.split_once('/') {
            Some((num, den)) => {
                let num: BigInt = num.trim().parse().map_err(|_| err())?;
                let den: BigInt = den.trim().parse().map_err(|_| err())?;
                if den.is_zero() {
                    return Err(err());
                }
                Ok(Rat(BigRational::new(num, den)))
            }
            None => {
                let num: BigInt = s.parse().map_err(|_| err())?;
                Ok(Rat(BigRational::from_integer(num)))
            }
        }
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_on_construction() {
        let r = Rat::new(2, 4);
        assert_eq!(r, Rat::new(1, 2));
        assert_eq!(r.to_string(), "1/2");
    }

    #[test]
    fn denominator_kept_positive() {
        let r = Rat::new(1, -2);
        assert_eq!(r.to_string(), "-1/2");
        assert!(r.denom() > &BigInt::from(0));
    }

    #[test]
    fn canonical_zero() {
        let z = Rat::new(0, 7);
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "5", "-3", "1/2", "-7/3", "100000000000000000001/3"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("2/4".parse::<Rat>().unwrap().to_string(), "1/2");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("a".parse::<Rat>().is_err());
        assert!("1.5".parse::<Rat>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Rat::new(1, 2);
        let b = Rat::new(1, 3);
        assert_eq!(&a + &b, Rat::new(5, 6));
        assert_eq!(&a - &b, Rat::new(1, 6));
        assert_eq!(&a * &b, Rat::new(1, 6));
        assert_eq!(&a / &b, Rat::new(3, 2));
        assert_eq!(-&a, Rat::new(-1, 2));
    }

    #[test]
    fn floor_int() {
        assert_eq!(Rat::new(7, 2).floor_int(), BigInt::from(3));
        assert_eq!(Rat::new(-7, 2).floor_int(), BigInt::from(-4));
        assert_eq!(Rat::from_int(4).floor_int(), BigInt::from(4));
    }
}
