use std::fmt;

use crate::context::{Context, Subset};
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::scalar::Scalar;
use crate::set::FpSoftSet;

/// An FP-soft point `e_α^f`: a single parameter `e` carrying grade `α > 0`
/// and crisp set `f(e)`.
///
/// The crisp part may be empty, in which case quasi-coincidence reduces to
/// the grade condition alone.
#[derive(Clone, PartialEq, Eq)]
pub struct FpSoftPoint<T: Scalar> {
    context: Context,
    parameter: usize,
    alpha: Grade<T>,
    crisp: Subset,
}

impl<T: Scalar> FpSoftPoint<T> {
    pub fn new(context: Context, parameter: usize, alpha: Grade<T>, crisp: Subset) -> Result<Self> {
        if parameter >= context.parameter_len() {
            return Err(Error::UnknownParameter(format!("#{parameter}")));
        }
        if alpha.is_zero() {
            return Err(Error::ZeroAlpha);
        }
        if !crisp.is_subset(context.full()) {
            return Err(Error::ElementOutOfRange {
                index: crisp.iter().max().unwrap_or(0),
                size: context.universe_len(),
            });
        }
        Ok(FpSoftPoint {
            context,
            parameter,
            alpha,
            crisp,
        })
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn parameter(&self) -> usize {
        self.parameter
    }

    pub fn alpha(&self) -> &Grade<T> {
        &self.alpha
    }

    pub fn crisp(&self) -> Subset {
        self.crisp
    }

    /// `α ≤ μ_A(e)` and `f(e) ⊆ f_A(e)`.
    pub fn belongs(&self, set: &FpSoftSet<T>) -> Result<bool> {
        self.context.ensure_same(set.context())?;
        Ok(&self.alpha <= set.grade(self.parameter) && self.crisp.is_subset(set.approx(self.parameter)))
    }

    /// `α + μ_A(e) > 1` or `f(e) ⊄ X - f_A(e)`.
    pub fn qcoincident(&self, set: &FpSoftSet<T>) -> Result<bool> {
        self.context.ensure_same(set.context())?;
        let e = self.parameter;
        let outside = set.approx(e).complement_in(self.context.full());
        Ok(self.alpha.exceeds_one_with(set.grade(e)) || !self.crisp.is_subset(outside))
    }

    /// The point as a one-parameter FP-soft set.
    pub fn to_set(&self) -> FpSoftSet<T> {
        let cells = (0..self.context.parameter_len())
            .map(|e| {
                if e == self.parameter {
                    (self.alpha.clone(), self.crisp)
                } else {
                    (Grade::zero(), Subset::EMPTY)
                }
            })
            .collect();
        FpSoftSet::from_cells(self.context.clone(), cells).expect("point cells are in range")
    }
}

impl<T: Scalar> fmt::Debug for FpSoftPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}_{:?}^{:?}",
            self.context.parameters()[self.parameter],
            self.alpha,
            self.context.element_names(self.crisp)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn pt(ctx: &Context, e: usize, k: u32, crisp: &[&str]) -> FpSoftPoint<Q> {
        FpSoftPoint::new(
            ctx.clone(),
            e,
            Grade::lattice(k, 10).unwrap(),
            ctx.subset(crisp).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn membership_examples() {
        let ctx = example_context();
        let [a1, ..] = example_sets(&ctx);
        assert!(pt(&ctx, 0, 2, &["x1"]).belongs(&a1).unwrap());
        assert!(!pt(&ctx, 0, 3, &["x1"]).belongs(&a1).unwrap());
        assert!(pt(&ctx, 2, 4, &["x2"]).belongs(&a1).unwrap());
    }

    #[test]
    fn quasi_coincidence_examples() {
        let ctx = example_context();
        let [a1, ..] = example_sets(&ctx);
        assert!(pt(&ctx, 2, 5, &["x2"]).qcoincident(&a1).unwrap());
        assert!(!pt(&ctx, 0, 2, &["x4"]).qcoincident(&a1).unwrap());
        let uni = FpSoftSet::universal(&ctx);
        for e in 0..3 {
            for k in 1..=10 {
                assert!(pt(&ctx, e, k, &[]).qcoincident(&uni).unwrap());
            }
        }
    }

    #[test]
    fn rejects_bad_points() {
        let ctx = example_context();
        assert_eq!(
            FpSoftPoint::<Q>::new(ctx.clone(), 0, Grade::zero(), Subset::EMPTY).unwrap_err(),
            Error::ZeroAlpha
        );
        assert!(FpSoftPoint::<Q>::new(ctx.clone(), 3, Grade::one(), Subset::EMPTY).is_err());
        assert!(FpSoftPoint::<Q>::new(ctx, 0, Grade::one(), Subset::from_bits(1 << 5)).is_err());
    }

    #[test]
    fn embedding_is_a_single_parameter_set() {
        let ctx = example_context();
        let p = pt(&ctx, 1, 5, &["x1"]);
        let s = p.to_set();
        assert_eq!(s.decompose_points().unwrap(), vec![p]);
    }
}
