//! The finite carrier `FPS_{L_q}(X, E)` of FP-soft sets whose grades lie on
//! `L_q = {0, 1/q, …, 1}`.
//!
//! Sets are indexed in canonical order: lexicographic over parameters (the
//! first parameter is most significant), and within a parameter grade-major
//! then by approximation bitset. This order coincides with `Ord` on
//! [`FpSoftSet`].

use crate::context::{Context, Subset};
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::point::FpSoftPoint;
use crate::scalar::Scalar;
use crate::set::FpSoftSet;

/// Default refusal threshold for carrier enumeration.
pub const DEFAULT_CARRIER_BOUND: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSpec {
    context: Context,
    q: u32,
}

impl LatticeSpec {
    pub fn new(context: Context, q: u32) -> Result<Self> {
        Self::with_bound(context, q, DEFAULT_CARRIER_BOUND)
    }

    pub fn with_bound(context: Context, q: u32, bound: u128) -> Result<Self> {
        if q == 0 {
            return Err(Error::ZeroResolution);
        }
        let size = carrier_size(context.universe_len(), context.parameter_len(), q);
        if size > bound {
            return Err(Error::CarrierTooLarge { size, bound });
        }
        Ok(LatticeSpec { context, q })
    }

    /// Spec over `x1..xN`, `e1..eM`.
    pub fn numbered(universe: usize, parameters: usize, q: u32) -> Result<Self> {
        Self::new(Context::numbered(universe, parameters)?, q)
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn resolution(&self) -> u32 {
        self.q
    }

    /// Number of `(grade, bitset)` cells a single parameter can take.
    pub fn cells_per_parameter(&self) -> usize {
        (self.q as usize + 1) << self.context.universe_len()
    }

    pub fn len(&self) -> usize {
        carrier_size(self.context.universe_len(), self.context.parameter_len(), self.q) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn grades<T: Scalar>(&self) -> Vec<Grade<T>> {
        (0..=self.q)
            .map(|k| Grade::lattice(k, self.q).expect("k ≤ q"))
            .collect()
    }

    /// Lattice numerator of `grade`, if it is a multiple of `1/q`.
    pub fn numerator_of<T: Scalar>(&self, grade: &Grade<T>) -> Option<u32> {
        (0..=self.q).find(|&k| Grade::<T>::lattice(k, self.q).as_ref() == Ok(grade))
    }

    /// The set at `index` in canonical order.
    pub fn set_at<T: Scalar>(&self, index: usize) -> FpSoftSet<T> {
        let width = self.cells_per_parameter();
        let nx = self.context.universe_len();
        let ne = self.context.parameter_len();
        let mut cells = vec![(Grade::zero(), Subset::EMPTY); ne];
        let mut rest = index;
        for e in (0..ne).rev() {
            let code = rest % width;
            rest /= width;
            let k = (code >> nx) as u32;
            let bits = (code & ((1usize << nx) - 1)) as u64;
            cells[e] = (Grade::lattice(k, self.q).expect("k ≤ q"), Subset::from_bits(bits));
        }
        debug_assert_eq!(rest, 0, "index out of range");
        FpSoftSet::from_cells(self.context.clone(), cells).expect("cells fit the context")
    }

    /// Canonical index of a lattice set.
    pub fn index_of<T: Scalar>(&self, set: &FpSoftSet<T>) -> Result<usize> {
        self.context.ensure_same(set.context())?;
        let width = self.cells_per_parameter();
        let nx = self.context.universe_len();
        let mut index = 0;
        for (grade, approx) in set.cells() {
            let k = self.numerator_of(grade).ok_or(Error::OffLattice(self.q))?;
            index = index * width + ((k as usize) << nx | approx.bits() as usize);
        }
        Ok(index)
    }

    /// Every lattice set, each once, in canonical order.
    pub fn sets<T: Scalar>(&self) -> impl Iterator<Item = FpSoftSet<T>> + '_ {
        (0..self.len()).map(|i| self.set_at(i))
    }

    /// Canonical lattice points: every parameter, positive lattice grade and
    /// crisp subset, ordered by parameter, grade, then bitset.
    pub fn points<T: Scalar>(&self) -> Vec<FpSoftPoint<T>> {
        let mut points = Vec::new();
        for e in 0..self.context.parameter_len() {
            for k in 1..=self.q {
                for bits in 0..1u64 << self.context.universe_len() {
                    points.push(
                        FpSoftPoint::new(
                            self.context.clone(),
                            e,
                            Grade::lattice(k, self.q).expect("k ≤ q"),
                            Subset::from_bits(bits),
                        )
                        .expect("lattice point is well formed"),
                    );
                }
            }
        }
        points
    }
}

/// `((q + 1) · 2^|X|)^|E|`, saturating.
pub fn carrier_size(universe: usize, parameters: usize, q: u32) -> u128 {
    let per = (u128::from(q) + 1)
        .checked_shl(universe as u32)
        .filter(|_| universe < 64);
    match per {
        Some(per) => {
            let mut size: u128 = 1;
            for _ in 0..parameters {
                size = size.saturating_mul(per);
            }
            size
        }
        None => u128::MAX,
    }
}
