use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Arbitrary-precision signed integer.
///
/// The canonical text form is an optional `-` followed by decimal digits
/// without leading zeros. [`Display`](fmt::Display) always emits that form
/// and [`FromStr`] accepts nothing else, so the two round-trip exactly.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactInt(BigInt);

impl ExactInt {
    pub fn zero() -> Self {
        ExactInt(BigInt::zero())
    }

    pub fn one() -> Self {
        ExactInt(BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// `self^exp`, with `0^0 = 1`.
    pub fn pow(&self, exp: u32) -> Self {
        ExactInt(num_traits::Pow::pow(&self.0, exp))
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    pub fn into_bigint(self) -> BigInt {
        self.0
    }
}

impl From<BigInt> for ExactInt {
    fn from(v: BigInt) -> Self {
        ExactInt(v)
    }
}

macro_rules! from_primitive {
    ($($t:ty),*) => {
        $(impl From<$t> for ExactInt {
            fn from(v: $t) -> Self {
                ExactInt(BigInt::from(v))
            }
        })*
    };
}

from_primitive!(i32, i64, u32, u64, usize, u128);

impl fmt::Display for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for ExactInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        let canonical = !digits.is_empty()
            && digits.bytes().all(|b| b.is_ascii_digit())
            && (digits == "0" || !digits.starts_with('0'))
            && !(digits == "0" && s.starts_with('-'));
        if !canonical {
            return Err(Error::ParseInt(s.to_string()));
        }
        BigInt::from_str(s)
            .map(ExactInt)
            .map_err(|_| Error::ParseInt(s.to_string()))
    }
}

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign_method:ident) => {
        impl $tr<ExactInt> for ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: ExactInt) -> ExactInt {
                ExactInt(self.0.$method(rhs.0))
            }
        }

        impl<'a> $tr<&'a ExactInt> for ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: &'a ExactInt) -> ExactInt {
                ExactInt(self.0.$method(&rhs.0))
            }
        }

        impl<'a> $tr<&'a ExactInt> for &'a ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: &'a ExactInt) -> ExactInt {
                ExactInt((&self.0).$method(&rhs.0))
            }
        }

        impl $assign_tr<ExactInt> for ExactInt {
            fn $assign_method(&mut self, rhs: ExactInt) {
                self.0.$assign_method(rhs.0);
            }
        }

        impl<'a> $assign_tr<&'a ExactInt> for ExactInt {
            fn $assign_method(&mut self, rhs: &'a ExactInt) {
                self.0.$assign_method(&rhs.0);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        ExactInt(-self.0)
    }
}

impl Sum for ExactInt {
    fn sum<I: Iterator<Item = ExactInt>>(iter: I) -> Self {
        iter.fold(ExactInt::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExactInt> for ExactInt {
    fn sum<I: Iterator<Item = &'a ExactInt>>(iter: I) -> Self {
        iter.fold(ExactInt::zero(), |acc, x| acc + x)
    }
}

impl Product for ExactInt {
    fn product<I: Iterator<Item = ExactInt>>(iter: I) -> Self {
        iter.fold(ExactInt::one(), |acc, x| acc * x)
    }
}
