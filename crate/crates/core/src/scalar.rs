//! Scalar abstraction shared by the centrality and closed-form code.
//!
//! Every per-node value in this crate is a ratio of two integer counts, so a
//! scalar only has to be constructible from an exact integer ratio. Floating
//! point types round once at construction; rational types keep the value
//! exact, which is what the family oracles compare against.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, ToPrimitive};

pub trait Scalar: Num + Clone + PartialOrd + Debug + Send + Sync + 'static {
    /// `num / den`, rounded at most once. `den` must be non-zero.
    fn from_ratio(num: i128, den: i128) -> Self;

    fn to_f64(&self) -> f64;

    fn from_count(count: usize) -> Self {
        Self::from_ratio(count as i128, 1)
    }
}

/// Exact rational with machine-word parts, enough for every closed form here.
pub type Rational = Ratio<i128>;

impl Scalar for f64 {
    fn from_ratio(num: i128, den: i128) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_ratio(num: i128, den: i128) -> Self {
        // rounded through the f64 quotient; counts here are far below 2^53
        (num as f64 / den as f64) as f32
    }

    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }
}

impl Scalar for Ratio<i64> {
    fn from_ratio(num: i128, den: i128) -> Self {
        let r = Ratio::<i128>::new(num, den);
        Ratio::new(
            i64::try_from(*r.numer()).expect("numerator overflows i64"),
            i64::try_from(*r.denom()).expect("denominator overflows i64"),
        )
    }

    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

impl Scalar for Ratio<i128> {
    fn from_ratio(num: i128, den: i128) -> Self {
        Ratio::new(num, den)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for BigRational {
    fn from_ratio(num: i128, den: i128) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Converts an exact `i128` ratio into any scalar at the boundary.
pub fn convert<T: Scalar>(r: &Ratio<i128>) -> T {
    T::from_ratio(*r.numer(), *r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_reduce() {
        let r = <Ratio<i64> as Scalar>::from_ratio(26, 6);
        assert_eq!(r, Ratio::new(13, 3));
        let b = <BigRational as Scalar>::from_ratio(-4, 8);
        assert_eq!(Scalar::to_f64(&b), -0.5);
    }

    #[test]
    fn floats_round_once() {
        assert_eq!(<f64 as Scalar>::from_ratio(1, 3), 1.0 / 3.0);
        assert_eq!(<f32 as Scalar>::from_ratio(1, 3), 1.0f32 / 3.0);
        assert_eq!(<f64 as Scalar>::from_count(7), 7.0);
    }
}
