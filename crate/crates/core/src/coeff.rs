use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};

/// Exact coefficient ring for [`LaurentPoly`](crate::LaurentPoly).
///
/// Implemented for the fixed-width signed integers (overflow panics in
/// checked builds), arbitrary-precision integers and rationals over either.
pub trait Coeff:
    Clone
    + Debug
    + Display
    + FromStr
    + Eq
    + Hash
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// `self / d` when the quotient lies in the ring.
    fn exact_div(&self, d: &Self) -> Option<Self>;

    /// Multiplicative inverse when it lies in the ring.
    fn try_inverse(&self) -> Option<Self> {
        Self::one().exact_div(self)
    }

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits the coefficient type")
    }
}

macro_rules! impl_integer_coeff {
    ($($t:ty),*) => {$(
        impl Coeff for $t {
            fn exact_div(&self, d: &Self) -> Option<Self> {
                if d.is_zero() {
                    return None;
                }
                let (q, r) = self.div_rem(d);
                r.is_zero().then_some(q)
            }
        }
    )*};
}

impl_integer_coeff!(i32, i64, i128, BigInt);

impl<T> Coeff for Ratio<T>
where
    T: Clone + Integer + Signed + Hash + Debug + Display + FromStr + FromPrimitive + Send + Sync + 'static,
    Ratio<T>: FromStr + FromPrimitive,
{
    fn exact_div(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self.clone() / d.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn integer_division_is_exact_only() {
        assert_eq!(6i64.exact_div(&3), Some(2));
        assert_eq!(7i64.exact_div(&3), None);
        assert_eq!(BigInt::from(5).try_inverse(), None);
        assert_eq!(BigInt::from(-1).try_inverse(), Some(BigInt::from(-1)));
        assert_eq!(1i32.exact_div(&0), None);
    }

    #[test]
    fn rationals_invert() {
        let two = BigRational::from_int(2);
        assert_eq!(two.try_inverse().unwrap() * two, BigRational::one());
    }
}
