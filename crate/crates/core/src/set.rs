//! FP-soft sets and their algebra.

use std::cmp::Ordering;
use std::fmt;

use crate::context::{Context, Subset};
use crate::error::{Error, Result};
use crate::fuzzy::FuzzyParamSet;
use crate::grade::Grade;
use crate::point::FpSoftPoint;
use crate::scalar::Scalar;

/// An FP-soft set: for every parameter `e`, a grade `μ(e)` and a crisp
/// approximation `f(e) ⊆ X`.
///
/// The representation does not require `f(e) = ∅` where `μ(e) = 0`, since
/// that condition is not preserved by [`complement`](Self::complement). Use
/// [`is_normalized`](Self::is_normalized) and [`normalize`](Self::normalize)
/// where it matters.
///
/// Equality and ordering compare cells only; mixing contexts is caught by the
/// operations, which return [`Error::ContextMismatch`].
#[derive(Clone)]
pub struct FpSoftSet<T: Scalar> {
    membership: FuzzyParamSet<T>,
    approx: Vec<Subset>,
}

/// The distinguished FP-soft sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Special<T: Scalar> {
    /// `μ ≡ 0`, `f ≡ ∅`.
    Empty,
    /// `μ ≡ 1`, `f ≡ X`.
    Universal,
    /// `μ = 1`, `f = X` on the listed parameters, `0`/`∅` elsewhere.
    AUniversal(Vec<usize>),
    /// `μ = α`, `f = X` on the listed parameters, `0`/`∅` elsewhere. `α > 0`.
    AlphaUniversal(Grade<T>, Vec<usize>),
}

impl<T: Scalar> FpSoftSet<T> {
    pub fn new(membership: FuzzyParamSet<T>, approx: Vec<Subset>) -> Result<Self> {
        let context = membership.context();
        if approx.len() != context.parameter_len() {
            return Err(Error::ParameterCount {
                expected: context.parameter_len(),
                found: approx.len(),
            });
        }
        let full = context.full();
        for a in &approx {
            if !a.is_subset(full) {
                let index = a.iter().find(|&i| !full.contains(i)).unwrap_or(0);
                return Err(Error::ElementOutOfRange {
                    index,
                    size: context.universe_len(),
                });
            }
        }
        Ok(FpSoftSet { membership, approx })
    }

    /// Builds a set from `(grade, approximation)` cells in parameter order.
    pub fn from_cells(context: Context, cells: Vec<(Grade<T>, Subset)>) -> Result<Self> {
        let (grades, approx): (Vec<_>, Vec<_>) = cells.into_iter().unzip();
        Self::new(FuzzyParamSet::new(context, grades)?, approx)
    }

    pub fn special(context: &Context, kind: Special<T>) -> Result<Self> {
        let n = context.parameter_len();
        let full = context.full();
        let on = |support: &[usize]| -> Result<Vec<bool>> {
            let mut mask = vec![false; n];
            for &e in support {
                *mask
                    .get_mut(e)
                    .ok_or_else(|| Error::UnknownParameter(format!("#{e}")))? = true;
            }
            Ok(mask)
        };
        let cells = match kind {
            Special::Empty => vec![(Grade::zero(), Subset::EMPTY); n],
            Special::Universal => vec![(Grade::one(), full); n],
            Special::AUniversal(support) => on(&support)?
                .into_iter()
                .map(|inside| {
                    if inside {
                        (Grade::one(), full)
                    } else {
                        (Grade::zero(), Subset::EMPTY)
                    }
                })
                .collect(),
            Special::AlphaUniversal(alpha, support) => {
                if alpha.is_zero() {
                    return Err(Error::ZeroAlpha);
                }
                on(&support)?
                    .into_iter()
                    .map(|inside| {
                        if inside {
                            (alpha.clone(), full)
                        } else {
                            (Grade::zero(), Subset::EMPTY)
                        }
                    })
                    .collect()
            }
        };
        Self::from_cells(context.clone(), cells)
    }

    /// `F_∅`.
    pub fn empty(context: &Context) -> Self {
        Self::special(context, Special::Empty).expect("empty set is always constructible")
    }

    /// `F_Ẽ`.
    pub fn universal(context: &Context) -> Self {
        Self::special(context, Special::Universal).expect("universal set is always constructible")
    }

    pub fn context(&self) -> &Context {
        self.membership.context()
    }

    pub fn membership(&self) -> &FuzzyParamSet<T> {
        &self.membership
    }

    pub fn grade(&self, parameter: usize) -> &Grade<T> {
        self.membership.grade(parameter)
    }

    pub fn approx(&self, parameter: usize) -> Subset {
        self.approx[parameter]
    }

    pub fn approximations(&self) -> &[Subset] {
        &self.approx
    }

    pub fn cells(&self) -> impl Iterator<Item = (&Grade<T>, Subset)> + '_ {
        self.membership.grades().iter().zip(self.approx.iter().copied())
    }

    /// Structural equality with `F_∅`.
    pub fn is_empty(&self) -> bool {
        self.cells().all(|(g, a)| g.is_zero() && a.is_empty())
    }

    pub fn is_universal(&self) -> bool {
        let full = self.context().full();
        self.cells().all(|(g, a)| g.is_one() && a == full)
    }

    /// `μ_A ≤ μ_B` and `f_A(e) ⊆ f_B(e)` for every parameter.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.context().ensure_same(other.context())?;
        Ok(self
            .cells()
            .zip(other.cells())
            .all(|((ga, fa), (gb, fb))| ga <= gb && fa.is_subset(fb)))
    }

    /// Equality after a context check.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.context().ensure_same(other.context())?;
        Ok(self == other)
    }

    /// First parameter where the two sets differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.cells().zip(other.cells()).position(|(a, b)| a != b)
    }

    pub fn union_family<'a, I>(family: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Self>,
    {
        Self::fold_family(family, Grade::max, Subset::union)
    }

    pub fn intersect_family<'a, I>(family: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Self>,
    {
        Self::fold_family(family, Grade::min, Subset::intersection)
    }

    fn fold_family<'a, I>(
        family: I,
        grade_op: fn(&Grade<T>, &Grade<T>) -> Grade<T>,
        set_op: fn(Subset, Subset) -> Subset,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Self>,
    {
        let mut iter = family.into_iter();
        let first = iter.next().ok_or(Error::EmptyFamily)?;
        let mut grades = first.membership.grades().to_vec();
        let mut approx = first.approx.clone();
        for member in iter {
            first.context().ensure_same(member.context())?;
            for (g, h) in grades.iter_mut().zip(member.membership.grades()) {
                *g = grade_op(g, h);
            }
            for (a, b) in approx.iter_mut().zip(&member.approx) {
                *a = set_op(*a, *b);
            }
        }
        Ok(FpSoftSet {
            membership: FuzzyParamSet::new(first.context().clone(), grades)?,
            approx,
        })
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        Self::union_family([self, other])
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        Self::intersect_family([self, other])
    }

    /// `μ ↦ 1 - μ`, `f(e) ↦ X - f(e)`.
    pub fn complement(&self) -> Self {
        let full = self.context().full();
        FpSoftSet {
            membership: self.membership.complement(),
            approx: self.approx.iter().map(|a| a.complement_in(full)).collect(),
        }
    }

    /// `μ(e) = 0` implies `f(e) = ∅`.
    pub fn is_normalized(&self) -> bool {
        self.first_unnormalized().is_none()
    }

    fn first_unnormalized(&self) -> Option<usize> {
        self.cells().position(|(g, a)| g.is_zero() && !a.is_empty())
    }

    /// Clears the approximation wherever the grade is zero.
    pub fn normalize(&self) -> Self {
        let approx = self
            .cells()
            .map(|(g, a)| if g.is_zero() { Subset::EMPTY } else { a })
            .collect();
        FpSoftSet {
            membership: self.membership.clone(),
            approx,
        }
    }

    /// The canonical generating points `(e, μ(e), f(e))` for `μ(e) > 0`.
    ///
    /// Their union is `self`. Requires a nonempty normalized set.
    pub fn decompose_points(&self) -> Result<Vec<FpSoftPoint<T>>> {
        if let Some(e) = self.first_unnormalized() {
            return Err(Error::NotNormalized(e));
        }
        if self.is_empty() {
            return Err(Error::EmptySet);
        }
        self.cells()
            .enumerate()
            .filter(|(_, (g, _))| !g.is_zero())
            .map(|(e, (g, a))| FpSoftPoint::new(self.context().clone(), e, g.clone(), a))
            .collect()
    }

    /// Quasi-coincidence: some parameter has `μ_A + μ_B > 1` or `f_A ∩ f_B ≠ ∅`.
    pub fn qcoincident(&self, other: &Self) -> Result<bool> {
        self.context().ensure_same(other.context())?;
        Ok(self
            .cells()
            .zip(other.cells())
            .any(|((ga, fa), (gb, fb))| ga.exceeds_one_with(gb) || !fa.intersection(fb).is_empty()))
    }
}

impl<T: Scalar> PartialEq for FpSoftSet<T> {
    fn eq(&self, other: &Self) -> bool {
        self.membership.grades() == other.membership.grades() && self.approx == other.approx
    }
}

impl<T: Scalar> Eq for FpSoftSet<T> {}

impl<T: Scalar> PartialOrd for FpSoftSet<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic over parameters, grade first, then the approximation bitset.
/// This is the enumeration order of [`crate::lattice::LatticeSpec`].
impl<T: Scalar> Ord for FpSoftSet<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cells().cmp(other.cells())
    }
}

impl<T: Scalar> fmt::Debug for FpSoftSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ctx = self.context();
        let mut map = f.debug_map();
        for (e, (g, a)) in self.cells().enumerate() {
            map.entry(&ctx.parameters()[e], &(g, ctx.element_names(a)));
        }
        map.finish()
    }
}
