//! Finitely presented FP-soft topologies.

use std::fmt;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::mapping::FpSoftMapping;
use crate::point::FpSoftPoint;
use crate::scalar::Scalar;
use crate::set::{FpSoftSet, Special};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `F_∅` and `F_Ẽ` are open.
    T1,
    /// Closed under binary intersection.
    T2,
    /// Closed under union.
    T3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::T1 => "T1",
            Axiom::T2 => "T2",
            Axiom::T3 => "T3",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distinguished {
    Empty,
    Universal,
}

/// One failed axiom with a concrete witness. Member indices refer to the
/// candidate list passed to [`FpSoftTopology::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Missing(Distinguished),
    NotClosed {
        axiom: Axiom,
        pair: (usize, usize),
        /// Candidate agreeing with the missing result on the most parameters.
        nearest: usize,
        /// First parameter where `nearest` and the missing result differ.
        parameter: String,
    },
}

impl Violation {
    pub fn axiom(&self) -> Axiom {
        match self {
            Violation::Missing(_) => Axiom::T1,
            Violation::NotClosed { axiom, .. } => *axiom,
        }
    }

    /// Human-readable description using caller-supplied member names.
    pub fn describe(&self, name: impl Fn(usize) -> String) -> String {
        match self {
            Violation::Missing(Distinguished::Empty) => "T1 violated: the empty set is not open".into(),
            Violation::Missing(Distinguished::Universal) => "T1 violated: the universal set is not open".into(),
            Violation::NotClosed {
                axiom,
                pair: (a, b),
                nearest,
                parameter,
            } => {
                let op = if *axiom == Axiom::T2 { "intersection" } else { "union" };
                format!(
                    "{axiom} violated: {op} of {}, {} is not open; closest member {} differs at {parameter}",
                    name(*a),
                    name(*b),
                    name(*nearest)
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn first(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom() == axiom)
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<_> = self
            .violations
            .iter()
            .map(|v| v.describe(|i| format!("#{i}")))
            .collect();
        f.write_str(&lines.join("; "))
    }
}

/// A validated topology: deduplicated open sets in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpSoftTopology<T: Scalar> {
    context: Context,
    opens: Vec<FpSoftSet<T>>,
}

impl<T: Scalar> FpSoftTopology<T> {
    /// Checks T1–T3 on an explicit finite family. Closure under pairwise
    /// union is enough for T3 once the family is finite.
    pub fn validate(context: &Context, candidates: &[FpSoftSet<T>]) -> Result<Self> {
        for c in candidates {
            context.ensure_same(c.context())?;
        }
        // first occurrence of each distinct set, keyed back to its position
        let mut unique: Vec<(usize, &FpSoftSet<T>)> = Vec::new();
        for (i, c) in candidates.iter().enumerate() {
            if !unique.iter().any(|(_, u)| *u == c) {
                unique.push((i, c));
            }
        }
        let mut sorted: Vec<&FpSoftSet<T>> = unique.iter().map(|(_, s)| *s).collect();
        sorted.sort();
        let contains = |s: &FpSoftSet<T>| sorted.binary_search(&s).is_ok();

        let mut violations = Vec::new();
        if !contains(&FpSoftSet::empty(context)) {
            violations.push(Violation::Missing(Distinguished::Empty));
        }
        if !contains(&FpSoftSet::universal(context)) {
            violations.push(Violation::Missing(Distinguished::Universal));
        }
        for (axiom, op) in [
            (Axiom::T2, FpSoftSet::intersection as fn(&_, &_) -> _),
            (Axiom::T3, FpSoftSet::union as fn(&_, &_) -> _),
        ] {
            for (x, &(i, a)) in unique.iter().enumerate() {
                for &(j, b) in &unique[x + 1..] {
                    let result: FpSoftSet<T> = op(a, b)?;
                    if !contains(&result) {
                        let (nearest, parameter) = nearest_member(&unique, &result);
                        violations.push(Violation::NotClosed {
                            axiom,
                            pair: (i, j),
                            nearest,
                            parameter: context.parameters()[parameter].clone(),
                        });
                    }
                }
            }
        }
        if !violations.is_empty() {
            return Err(Error::Violation(ViolationReport { violations }));
        }
        Ok(FpSoftTopology {
            context: context.clone(),
            opens: sorted.into_iter().cloned().collect(),
        })
    }

    /// `{F_∅, F_Ẽ}`.
    pub fn indiscrete(context: &Context) -> Self {
        FpSoftTopology {
            context: context.clone(),
            opens: vec![FpSoftSet::empty(context), FpSoftSet::universal(context)],
        }
    }

    /// Smallest topology containing `seeds`: adds `F_∅`, `F_Ẽ` and closes
    /// under pairwise union and intersection.
    pub fn generated_by(context: &Context, seeds: &[FpSoftSet<T>]) -> Result<Self> {
        for s in seeds {
            context.ensure_same(s.context())?;
        }
        let mut opens: Vec<FpSoftSet<T>> = seeds.to_vec();
        opens.push(FpSoftSet::empty(context));
        opens.push(FpSoftSet::universal(context));
        opens.sort();
        opens.dedup();
        loop {
            let mut fresh = Vec::new();
            for (i, a) in opens.iter().enumerate() {
                for b in &opens[i + 1..] {
                    for s in [a.union(b)?, a.intersection(b)?] {
                        if opens.binary_search(&s).is_err() && !fresh.contains(&s) {
                            fresh.push(s);
                        }
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            opens.extend(fresh);
            opens.sort();
        }
        Ok(FpSoftTopology {
            context: context.clone(),
            opens,
        })
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn opens(&self) -> &[FpSoftSet<T>] {
        &self.opens
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens.is_empty()
    }

    pub fn is_open(&self, set: &FpSoftSet<T>) -> Result<bool> {
        self.context.ensure_same(set.context())?;
        Ok(self.opens.binary_search(set).is_ok())
    }

    pub fn is_closed(&self, set: &FpSoftSet<T>) -> Result<bool> {
        self.is_open(&set.complement())
    }

    /// Complements of the open sets, in the order of the opens.
    pub fn closed_family(&self) -> Vec<FpSoftSet<T>> {
        self.opens.iter().map(FpSoftSet::complement).collect()
    }

    /// Intersection of all closed supersets. `F_Ẽ` always qualifies.
    pub fn closure(&self, set: &FpSoftSet<T>) -> Result<FpSoftSet<T>> {
        self.context.ensure_same(set.context())?;
        let closed = self.closed_family();
        let mut supersets = Vec::new();
        for c in &closed {
            if set.is_subset(c)? {
                supersets.push(c);
            }
        }
        FpSoftSet::intersect_family(supersets)
    }

    /// Union of all open subsets. `F_∅` always qualifies.
    pub fn interior(&self, set: &FpSoftSet<T>) -> Result<FpSoftSet<T>> {
        self.context.ensure_same(set.context())?;
        let mut subsets = Vec::new();
        for o in &self.opens {
            if o.is_subset(set)? {
                subsets.push(o);
            }
        }
        FpSoftSet::union_family(subsets)
    }

    /// Whether `set` is an FP-Q-neighbourhood of `target`: some open `F_C`
    /// with `target q F_C` and `F_C ⊆ set`.
    pub fn is_qnbd(&self, set: &FpSoftSet<T>, target: QTarget<'_, T>) -> Result<bool> {
        self.context.ensure_same(set.context())?;
        for c in &self.opens {
            let touches = match target {
                QTarget::Set(s) => s.qcoincident(c)?,
                QTarget::Point(p) => p.qcoincident(c)?,
            };
            if touches && c.is_subset(set)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `point ∈ closure(set)`.
    pub fn closure_contains_point(&self, set: &FpSoftSet<T>, point: &FpSoftPoint<T>) -> Result<bool> {
        point.belongs(&self.closure(set)?)
    }

    /// Every open Q-neighbourhood of `point` is quasi-coincident with `set`.
    /// Agrees with [`closure_contains_point`](Self::closure_contains_point)
    /// without computing the closure.
    pub fn qnbds_meet(&self, set: &FpSoftSet<T>, point: &FpSoftPoint<T>) -> Result<bool> {
        self.context.ensure_same(set.context())?;
        for c in &self.opens {
            if point.qcoincident(c)? && !c.qcoincident(set)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether every open set is the union of the members of `base` it contains.
    pub fn is_base(&self, base: &[FpSoftSet<T>]) -> Result<bool> {
        Ok(self.base_failure(base)?.is_none())
    }

    /// Index into [`opens`](Self::opens) of the first open set that `base`
    /// does not generate.
    pub fn base_failure(&self, base: &[FpSoftSet<T>]) -> Result<Option<usize>> {
        for (i, b) in base.iter().enumerate() {
            if !self.is_open(b)? {
                return Err(Error::NotOpen(i));
            }
        }
        for (i, open) in self.opens.iter().enumerate() {
            let mut parts = Vec::new();
            for b in base {
                if b.is_subset(open)? {
                    parts.push(b);
                }
            }
            let generated = match FpSoftSet::union_family(parts) {
                Ok(u) => u,
                Err(Error::EmptyFamily) => FpSoftSet::empty(&self.context),
                Err(e) => return Err(e),
            };
            if &generated != open {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Enrichment on the resolution-`q` grades: for every `α ∈ {1/q, …, 1}`
    /// both `F_α̃_E` and its complement are open.
    pub fn enriched_for(&self, q: u32) -> Result<bool> {
        let all: Vec<usize> = (0..self.context.parameter_len()).collect();
        for k in 1..=q {
            let alpha = Grade::lattice(k, q)?;
            let s = FpSoftSet::special(&self.context, Special::AlphaUniversal(alpha, all.clone()))?;
            if !self.is_open(&s)? || !self.is_open(&s.complement())? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Target of a Q-neighbourhood query.
#[derive(Clone, Copy, Debug)]
pub enum QTarget<'a, T: Scalar> {
    Set(&'a FpSoftSet<T>),
    Point(&'a FpSoftPoint<T>),
}

/// Preimage of every open set of `target` is open in `source`.
pub fn is_continuous<T: Scalar>(
    mapping: &FpSoftMapping,
    source: &FpSoftTopology<T>,
    target: &FpSoftTopology<T>,
) -> Result<bool> {
    Ok(continuity_failure(mapping, source, target)?.is_none())
}

/// Index into `target.opens()` of the first open set whose preimage is not open.
pub fn continuity_failure<T: Scalar>(
    mapping: &FpSoftMapping,
    source: &FpSoftTopology<T>,
    target: &FpSoftTopology<T>,
) -> Result<Option<usize>> {
    mapping.source().ensure_same(source.context())?;
    mapping.target().ensure_same(target.context())?;
    for (i, g) in target.opens().iter().enumerate() {
        if !source.is_open(&mapping.preimage(g)?)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

fn nearest_member<T: Scalar>(members: &[(usize, &FpSoftSet<T>)], target: &FpSoftSet<T>) -> (usize, usize) {
    let agreement = |s: &FpSoftSet<T>| s.cells().zip(target.cells()).filter(|(a, b)| a == b).count();
    let mut best = members[0];
    for &m in &members[1..] {
        if agreement(m.1) > agreement(best.1) {
            best = m;
        }
    }
    let parameter = best.1.first_difference(target).unwrap_or(0);
    (best.0, parameter)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn corrected() -> FpSoftTopology<Q> {
        let ctx = example_context();
        FpSoftTopology::validate(&ctx, &corrected_opens(&ctx)).unwrap()
    }

    #[test]
    fn indiscrete_is_valid() {
        let ctx = example_context();
        let sets = vec![FpSoftSet::<Q>::empty(&ctx), FpSoftSet::universal(&ctx)];
        let t = FpSoftTopology::validate(&ctx, &sets).unwrap();
        assert_eq!(t, FpSoftTopology::indiscrete(&ctx));
    }

    #[test]
    fn printed_example_fails_union_and_intersection() {
        let ctx = example_context();
        let Err(Error::Violation(report)) = FpSoftTopology::validate(&ctx, &printed_opens(&ctx)) else {
            panic!("printed family should not validate");
        };
        assert_eq!(
            report.first(Axiom::T3),
            Some(&Violation::NotClosed {
                axiom: Axiom::T3,
                pair: (2, 3),
                nearest: 4,
                parameter: "e3".into(),
            })
        );
        // F_A2 ∩ F_A4 has e3 approximation {x2}, which no member has
        assert_eq!(
            report.first(Axiom::T2),
            Some(&Violation::NotClosed {
                axiom: Axiom::T2,
                pair: (2, 4),
                nearest: 2,
                parameter: "e3".into(),
            })
        );
        // F_A2 ∪ F_A4 also has e3 approximation {x1,x2,x3}
        assert_eq!(
            report.violations[2],
            Violation::NotClosed {
                axiom: Axiom::T3,
                pair: (2, 4),
                nearest: 4,
                parameter: "e3".into(),
            }
        );
        assert_eq!(report.violations.len(), 3);
    }

    #[test]
    fn corrected_example_is_valid() {
        let t = corrected();
        assert_eq!(t.len(), 6);
    }

    #[test]
    fn missing_distinguished_sets() {
        let ctx = example_context();
        let [a1, ..] = example_sets(&ctx);
        let Err(Error::Violation(report)) = FpSoftTopology::validate(&ctx, &[a1]) else {
            panic!()
        };
        assert_eq!(
            report.violations,
            vec![
                Violation::Missing(Distinguished::Empty),
                Violation::Missing(Distinguished::Universal)
            ]
        );
        let other = Context::numbered(1, 1).unwrap();
        assert_eq!(
            FpSoftTopology::validate(&ctx, &[FpSoftSet::<Q>::empty(&other)]).unwrap_err(),
            Error::ContextMismatch
        );
    }

    #[test]
    fn closed_family_is_closed_under_operations() {
        let ctx = example_context();
        assert_eq!(
            FpSoftTopology::<Q>::indiscrete(&ctx).closed_family(),
            vec![FpSoftSet::universal(&ctx), FpSoftSet::empty(&ctx)]
        );
        let closed = corrected().closed_family();
        assert_eq!(closed.len(), 6);
        for a in &closed {
            for b in &closed {
                assert!(closed.contains(&a.union(b).unwrap()));
                assert!(closed.contains(&a.intersection(b).unwrap()));
            }
        }
    }

    #[test]
    fn closure_examples() {
        let ctx = example_context();
        let t = corrected();
        let empty = FpSoftSet::empty(&ctx);
        let uni = FpSoftSet::universal(&ctx);
        assert_eq!(t.closure(&uni).unwrap(), uni);
        assert_eq!(t.closure(&empty).unwrap(), empty);
        let [a1, ..] = example_sets(&ctx);
        assert_eq!(t.closure(&a1).unwrap(), uni);
        for c in t.closed_family() {
            assert_eq!(t.closure(&c).unwrap(), c);
        }
    }

    #[test]
    fn interior_examples() {
        let ctx = example_context();
        let t = corrected();
        let uni = FpSoftSet::universal(&ctx);
        assert_eq!(t.interior(&uni).unwrap(), uni);
        let [a1, ..] = example_sets(&ctx);
        assert_eq!(t.interior(&a1.complement()).unwrap(), FpSoftSet::empty(&ctx));
        for o in t.opens() {
            assert_eq!(&t.interior(o).unwrap(), o);
        }
    }

    #[test]
    fn qnbd_examples() {
        let ctx = example_context();
        let t = corrected();
        let uni = FpSoftSet::universal(&ctx);
        let [_, _, a3, _] = example_sets(&ctx);
        let pt = |e, k, xs: &[&str]| {
            FpSoftPoint::new(ctx.clone(), e, Grade::lattice(k, 10).unwrap(), ctx.subset(xs).unwrap()).unwrap()
        };
        for e in 0..3 {
            for k in 1..=10 {
                assert!(t.is_qnbd(&uni, QTarget::Point(&pt(e, k, &["x2"]))).unwrap());
            }
        }
        assert!(t.is_qnbd(&a3, QTarget::Point(&pt(0, 5, &["x1"]))).unwrap());
        let ind = FpSoftTopology::<Q>::indiscrete(&ctx);
        let empty = FpSoftSet::empty(&ctx);
        assert!(!ind.is_qnbd(&empty, QTarget::Point(&pt(0, 10, &["x1"]))).unwrap());
        assert!(t.is_qnbd(&uni, QTarget::Set(&a3)).unwrap());
        assert!(!t.is_qnbd(&uni, QTarget::Set(&empty)).unwrap());
    }

    #[test]
    fn closure_point_examples() {
        let ctx = example_context();
        let t = corrected();
        let [a1, ..] = example_sets(&ctx);
        for p in a1.decompose_points().unwrap() {
            assert!(t.closure_contains_point(&a1, &p).unwrap());
            assert!(t.qnbds_meet(&a1, &p).unwrap());
        }
        let p = FpSoftPoint::new(ctx.clone(), 0, Grade::one(), ctx.subset(["x4"]).unwrap()).unwrap();
        assert!(t.closure_contains_point(&a1, &p).unwrap());
        assert!(t.qnbds_meet(&a1, &p).unwrap());
        let ind = FpSoftTopology::<Q>::indiscrete(&ctx);
        let empty = FpSoftSet::empty(&ctx);
        assert!(!ind.closure_contains_point(&empty, &p).unwrap());
        assert!(!ind.qnbds_meet(&empty, &p).unwrap());
    }

    #[test]
    fn base_examples() {
        let ctx = example_context();
        let t = corrected();
        assert!(t.is_base(t.opens()).unwrap());
        let opens = corrected_opens(&ctx);
        let base: Vec<_> = opens.iter().filter(|s| **s != corrected_a4(&ctx)).cloned().collect();
        assert!(t.is_base(&base).unwrap());
        let without_a1: Vec<_> = base.iter().filter(|s| **s != opens[1]).cloned().collect();
        assert_eq!(
            t.base_failure(&without_a1).unwrap().map(|i| &t.opens()[i]),
            Some(&opens[1])
        );
        let ind = FpSoftTopology::<Q>::indiscrete(&ctx);
        assert!(!ind.is_base(&[FpSoftSet::empty(&ctx)]).unwrap());
        let [a1, ..] = example_sets(&ctx);
        assert_eq!(ind.is_base(&[a1]).unwrap_err(), Error::NotOpen(0));
    }

    #[test]
    fn enrichment() {
        let ctx = Context::numbered(1, 1).unwrap();
        let ind = FpSoftTopology::<Q>::indiscrete(&ctx);
        assert!(ind.enriched_for(1).unwrap());
        assert!(!ind.enriched_for(2).unwrap());
        let seeds: Vec<_> = (1..=2)
            .flat_map(|k| {
                let s = FpSoftSet::<Q>::special(&ctx, Special::AlphaUniversal(Grade::lattice(k, 2).unwrap(), vec![0]))
                    .unwrap();
                [s.complement(), s]
            })
            .collect();
        let t = FpSoftTopology::generated_by(&ctx, &seeds).unwrap();
        assert!(t.enriched_for(2).unwrap());
        // (0,∅), (1/2,∅), (1/2,X), (1,X)
        assert_eq!(t.len(), 4);
        assert!(FpSoftTopology::validate(&ctx, t.opens()).is_ok());
    }

    #[test]
    fn continuity_of_identity() {
        let t = corrected();
        let id = FpSoftMapping::identity(t.context());
        assert!(is_continuous(&id, &t, &t).unwrap());
        let ind = FpSoftTopology::indiscrete(t.context());
        assert!(is_continuous(&id, &t, &ind).unwrap());
        assert_eq!(continuity_failure(&id, &ind, &t).unwrap(), Some(1));
    }
}
