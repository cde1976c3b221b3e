//! Shared unit-test fixtures: the four-set topology example over
//! `X = {x1..x4}`, `E = {e1, e2, e3}` with grades in tenths.

use num_rational::Ratio;

use crate::context::Context;
use crate::grade::Grade;
use crate::set::FpSoftSet;

pub type Q = Ratio<i64>;

pub fn example_context() -> Context {
    Context::numbered(4, 3).unwrap()
}

/// One `(tenths, approximation)` cell per parameter.
pub fn set(ctx: &Context, cells: &[(u32, &[&str])]) -> FpSoftSet<Q> {
    let cells = cells
        .iter()
        .map(|(k, xs)| (Grade::lattice(*k, 10).unwrap(), ctx.subset(xs.iter()).unwrap()))
        .collect();
    FpSoftSet::from_cells(ctx.clone(), cells).unwrap()
}

const X: &[&str] = &["x1", "x2", "x3", "x4"];

/// `[F_A1, F_A2, F_A3, F_A4]` as printed.
pub fn example_sets(ctx: &Context) -> [FpSoftSet<Q>; 4] {
    [
        set(ctx, &[(2, &["x1", "x3"]), (3, &["x1", "x4"]), (4, &["x2"])]),
        set(ctx, &[(2, &["x1", "x2", "x3"]), (5, &["x1", "x4"]), (4, &["x1", "x2"])]),
        set(ctx, &[(7, &["x1", "x3"]), (3, X), (9, &["x2", "x3"])]),
        set(ctx, &[(7, &["x1", "x2", "x3"]), (5, X), (9, &["x2", "x3"])]),
    ]
}

/// `F_A4'`, which makes the family closed under union.
pub fn corrected_a4(ctx: &Context) -> FpSoftSet<Q> {
    set(ctx, &[(7, &["x1", "x2", "x3"]), (5, X), (9, &["x1", "x2", "x3"])])
}

/// `[F_∅, F_A1, F_A2, F_A3, F_A4', F_Ẽ]`.
pub fn corrected_opens(ctx: &Context) -> Vec<FpSoftSet<Q>> {
    let [a1, a2, a3, _] = example_sets(ctx);
    vec![
        FpSoftSet::empty(ctx),
        a1,
        a2,
        a3,
        corrected_a4(ctx),
        FpSoftSet::universal(ctx),
    ]
}

/// `[F_∅, F_A1, F_A2, F_A3, F_A4, F_Ẽ]` as printed.
pub fn printed_opens(ctx: &Context) -> Vec<FpSoftSet<Q>> {
    let [a1, a2, a3, a4] = example_sets(ctx);
    vec![FpSoftSet::empty(ctx), a1, a2, a3, a4, FpSoftSet::universal(ctx)]
}
