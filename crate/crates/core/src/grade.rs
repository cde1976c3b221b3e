use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A membership grade in `[0, 1]`.
///
/// The range check on construction also rules out unordered values such as
/// `NaN`, which is what lets `Grade` implement `Ord`.
#[derive(Clone, PartialEq)]
pub struct Grade<T>(T);

impl<T: Scalar> Grade<T> {
    pub fn new(value: T) -> Result<Self> {
        if value >= T::zero() && value <= T::one() {
            Ok(Grade(value))
        } else {
            Err(Error::GradeOutOfRange(format!("{value:?}")))
        }
    }

    /// Grade `k / q` on the resolution-`q` lattice.
    pub fn lattice(k: u32, q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::ZeroResolution);
        }
        Self::new(T::from_fraction(k, q))
    }

    pub fn zero() -> Self {
        Grade(T::zero())
    }

    pub fn one() -> Self {
        Grade(T::one())
    }

    pub fn value(&self) -> &T {
        &self.0
    }

    pub fn into_inner(self) -> T {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == T::zero()
    }

    pub fn is_one(&self) -> bool {
        self.0 == T::one()
    }

    /// `1 - self`.
    pub fn complement(&self) -> Self {
        Grade(T::one() - self.0.clone())
    }

    pub fn min(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn max(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// `self + other > 1`, the grade half of quasi-coincidence.
    pub fn exceeds_one_with(&self, other: &Self) -> bool {
        self.0.clone() + other.0.clone() > T::one()
    }
}

impl<T: PartialOrd> Eq for Grade<T> {}

impl<T: PartialOrd> PartialOrd for Grade<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: PartialOrd> Ord for Grade<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .partial_cmp(&other.0)
            .expect("grades in [0, 1] are totally ordered")
    }
}

impl<T: fmt::Debug> fmt::Debug for Grade<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    #[test]
    fn rejects_out_of_range() {
        assert!(Grade::new(Q::new(11, 10)).is_err());
        assert!(Grade::new(Q::new(-1, 10)).is_err());
        assert!(Grade::new(f64::NAN).is_err());
        assert!(Grade::<Q>::lattice(1, 0).is_err());
    }

    #[test]
    fn complement_is_involutive_on_lattice() {
        for q in 1..=12 {
            for k in 0..=q {
                let g = Grade::<Q>::lattice(k, q).unwrap();
                assert_eq!(g.complement().complement(), g);
                assert_eq!(g.complement(), Grade::lattice(q - k, q).unwrap());
            }
        }
    }

    #[test]
    fn quasi_sum() {
        let a = Grade::<Q>::lattice(5, 10).unwrap();
        let b = Grade::<Q>::lattice(4, 10).unwrap();
        assert!(!a.exceeds_one_with(&b));
        assert!(!a.exceeds_one_with(&a));
        assert!(a.exceeds_one_with(&Grade::lattice(6, 10).unwrap()));
    }
}
