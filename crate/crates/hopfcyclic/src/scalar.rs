//! Scalar abstraction for the exact linear algebra kernel.
//!
//! All structure constants in this crate live in an exact field. The kernel
//! is generic over [`Scalar`]; the concrete field used throughout the
//! library is `num_rational::BigRational`, re-exported as [`Rat`].

use num_traits::{One, Zero};
use std::fmt::Display;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Field operations required by the elimination kernel.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Display
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Display
{
}

/// The ground field: arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Rational from numerator and denominator.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}
