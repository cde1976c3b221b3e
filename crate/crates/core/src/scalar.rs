//! Scalar types usable as membership grades.

use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::Num;

/// A number type that can carry membership grades.
///
/// The algebra only needs `0`, `1`, addition, subtraction and a total order on
/// `[0, 1]`, so any ordered ring-like type works. Exact rationals make every
/// identity an equality test; binary floats are exact only on dyadic grades.
pub trait Scalar: Num + Clone + PartialOrd + Debug + Send + Sync + 'static {
    /// Builds `numer / denom`. `denom` is never zero.
    fn from_fraction(numer: u32, denom: u32) -> Self;
}

impl Scalar for f32 {
    fn from_fraction(numer: u32, denom: u32) -> Self {
        numer as f32 / denom as f32
    }
}

impl Scalar for f64 {
    fn from_fraction(numer: u32, denom: u32) -> Self {
        f64::from(numer) / f64::from(denom)
    }
}

impl Scalar for Ratio<i64> {
    fn from_fraction(numer: u32, denom: u32) -> Self {
        Ratio::new(i64::from(numer), i64::from(denom))
    }
}

impl Scalar for Ratio<i128> {
    fn from_fraction(numer: u32, denom: u32) -> Self {
        Ratio::new(i128::from(numer), i128::from(denom))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_are_reduced() {
        let r = <Ratio<i64> as Scalar>::from_fraction(2, 10);
        assert_eq!(*r.numer(), 1);
        assert_eq!(*r.denom(), 5);
        assert_eq!(<f64 as Scalar>::from_fraction(1, 2), 0.5);
    }
}
