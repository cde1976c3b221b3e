//! The vocabulary every law is written against. Two implementations exist:
//! [`LibraryModel`](super::LibraryModel) wraps the library types and
//! [`OracleModel`](crate::oracle::OracleModel) recomputes every notion from
//! its definition on a raw encoding. Laws are evaluated under both and must
//! agree instance by instance.

use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `FPS(X, E)`, symbols `x1..`, `e1..`.
    Source,
    /// `FPS(Y, K)`, symbols `y1..`, `k1..`.
    Target,
}

/// Sizes of one class of FP-soft sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    pub side: Side,
    pub universe: usize,
    pub parameters: usize,
}

impl Shape {
    pub fn source(universe: usize, parameters: usize) -> Self {
        Shape {
            side: Side::Source,
            universe,
            parameters,
        }
    }

    pub fn target(universe: usize, parameters: usize) -> Self {
        Shape {
            side: Side::Target,
            universe,
            parameters,
        }
    }
}

/// Everything a model must materialize before a scan: the resolution, the
/// shapes in play, and for some shapes the enumerated topologies as sorted
/// carrier indices.
#[derive(Clone, Debug, Default)]
pub struct Plan {
    pub q: u32,
    pub shapes: Vec<Shape>,
    pub topologies: BTreeMap<Shape, Arc<Vec<Vec<usize>>>>,
}

pub trait Model: Sync + Sized {
    type Set: Clone + Send + Sync;
    type Point: Send + Sync;
    type Map: Send + Sync;
    type Top: Send + Sync;

    fn prepare(plan: &Plan) -> Self;
    fn q(&self) -> u32;

    fn carrier_len(&self, shape: Shape) -> usize;
    /// Lattice set at `index` in canonical order.
    fn set(&self, shape: Shape, index: usize) -> &Self::Set;
    fn points_len(&self, shape: Shape) -> usize;
    fn point(&self, shape: Shape, index: usize) -> &Self::Point;
    fn top(&self, shape: Shape, index: usize) -> &Self::Top;
    fn mapping(&self, source: Shape, target: Shape, u: &[usize], p: &[usize]) -> Self::Map;

    fn empty(&self, shape: Shape) -> Self::Set;
    fn universal(&self, shape: Shape) -> Self::Set;
    /// Grade `k/q` at every parameter, crisp part `X` when `full`, else `∅`.
    fn uniform(&self, shape: Shape, k: u32, full: bool) -> Self::Set;
    fn equal(&self, a: &Self::Set, b: &Self::Set) -> bool;
    fn union(&self, a: &Self::Set, b: &Self::Set) -> Self::Set;
    fn intersection(&self, a: &Self::Set, b: &Self::Set) -> Self::Set;
    fn union_all(&self, family: &[&Self::Set]) -> Self::Set;
    fn intersection_all(&self, family: &[&Self::Set]) -> Self::Set;
    fn complement(&self, a: &Self::Set) -> Self::Set;
    fn subset(&self, a: &Self::Set, b: &Self::Set) -> bool;
    fn is_empty(&self, a: &Self::Set) -> bool;
    fn is_normalized(&self, a: &Self::Set) -> bool;
    fn normalize(&self, a: &Self::Set) -> Self::Set;
    fn qcoincident(&self, a: &Self::Set, b: &Self::Set) -> bool;

    fn belongs(&self, point: &Self::Point, a: &Self::Set) -> bool;
    fn point_qcoincident(&self, point: &Self::Point, a: &Self::Set) -> bool;
    fn point_set(&self, point: &Self::Point) -> Self::Set;
    /// Points of a nonempty normalized set whose union rebuilds it.
    fn generators(&self, a: &Self::Set) -> Vec<Self::Point>;
    /// `F_Ẽ ⊆ ∪ family`.
    fn covers(&self, family: &[&Self::Set]) -> bool;

    fn image(&self, m: &Self::Map, a: &Self::Set) -> Self::Set;
    fn preimage(&self, m: &Self::Map, b: &Self::Set) -> Self::Set;
    fn injective(&self, m: &Self::Map) -> bool;
    fn surjective(&self, m: &Self::Map) -> bool;

    fn opens(&self, t: &Self::Top) -> Vec<Self::Set>;
    fn closed_family(&self, t: &Self::Top) -> Vec<Self::Set>;
    fn is_open(&self, t: &Self::Top, a: &Self::Set) -> bool;
    fn is_closed(&self, t: &Self::Top, a: &Self::Set) -> bool;
    fn closure(&self, t: &Self::Top, a: &Self::Set) -> Self::Set;
    fn interior(&self, t: &Self::Top, a: &Self::Set) -> Self::Set;
    /// `a` is an FP-Q-neighbourhood of `point`.
    fn is_qnbd(&self, t: &Self::Top, a: &Self::Set, point: &Self::Point) -> bool;
    fn closure_contains(&self, t: &Self::Top, a: &Self::Set, point: &Self::Point) -> bool;
    /// Every FP-Q-neighbourhood of `point` is quasi-coincident with `a`.
    fn qnbds_meet(&self, t: &Self::Top, a: &Self::Set, point: &Self::Point) -> bool;
    fn is_base(&self, t: &Self::Top, base: &[Self::Set]) -> bool;
    fn continuous(&self, m: &Self::Map, source: &Self::Top, target: &Self::Top) -> bool;
    fn enriched(&self, t: &Self::Top) -> bool;
    /// Compact with the finite intersection-property form verified.
    fn compact(&self, t: &Self::Top) -> bool;
    /// The tabulated closure operator satisfies (c1)–(c4) and induces `t`.
    fn closure_round_trip(&self, t: &Self::Top) -> bool;
    /// The tabulated interior operator satisfies (i1)–(i4) and induces `t`.
    fn interior_round_trip(&self, t: &Self::Top) -> bool;
}
