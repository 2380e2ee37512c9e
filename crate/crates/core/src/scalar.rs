//! Coefficient fields.
//!
//! Every computation in the crate is generic over [`Scalar`], an exact field
//! of characteristic zero. Floating point types are deliberately not
//! implementors: ranks and kernels must be exact.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Num;

/// An exact field of characteristic zero.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static
{
    /// Embeds an integer.
    fn from_int(v: i64) -> Self;

    /// `v / d` for integers, `d != 0`.
    fn ratio(v: i64, d: i64) -> Self {
        Self::from_int(v) / Self::from_int(d)
    }

    /// `(-1)^k`.
    fn sign(k: usize) -> Self {
        if k.is_multiple_of(2) {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl Scalar for BigRational {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }
}

/// Fixed-width rationals. Exact, but overflow panics, so only suitable for
/// the smallest computations.
impl Scalar for Ratio<i64> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v)
    }
}

impl Scalar for Ratio<i128> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v as i128)
    }
}
