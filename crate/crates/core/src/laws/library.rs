use std::collections::BTreeMap;

use super::model::{Model, Plan, Shape, Side};
use crate::compactness::{check_compactness, CoverFamily};
use crate::context::{Context, Subset, TotalMap};
use crate::grade::Grade;
use crate::lattice::LatticeSpec;
use crate::mapping::FpSoftMapping;
use crate::operator::{induce_from_closure_operator, induce_from_interior_operator, OperatorTable};
use crate::point::FpSoftPoint;
use crate::set::FpSoftSet;
use crate::topology::{is_continuous, FpSoftTopology, QTarget};
use crate::Rational;

type Set = FpSoftSet<Rational>;
type Top = FpSoftTopology<Rational>;

struct ShapeData {
    context: Context,
    spec: LatticeSpec,
    sets: Vec<Set>,
    points: Vec<FpSoftPoint<Rational>>,
    tops: Vec<Top>,
}

/// The library's own types and composite operations.
pub struct LibraryModel {
    q: u32,
    shapes: BTreeMap<Shape, ShapeData>,
}

impl LibraryModel {
    pub fn context(&self, shape: Shape) -> &Context {
        &self.shapes[&shape].context
    }

    fn spec_of(&self, t: &Top) -> LatticeSpec {
        LatticeSpec::new(t.context().clone(), self.q).expect("carrier was enumerated already")
    }
}

pub(crate) fn context_for(shape: Shape) -> Context {
    match shape.side {
        Side::Source => Context::numbered(shape.universe, shape.parameters),
        Side::Target => Context::with_prefixes("y", shape.universe, "k", shape.parameters),
    }
    .expect("shapes are nonempty and small")
}

const SHARED: &str = "operands share a context";

impl Model for LibraryModel {
    type Set = Set;
    type Point = FpSoftPoint<Rational>;
    type Map = FpSoftMapping;
    type Top = Top;

    fn prepare(plan: &Plan) -> Self {
        let mut shapes = BTreeMap::new();
        for &shape in &plan.shapes {
            let context = context_for(shape);
            let spec = LatticeSpec::new(context.clone(), plan.q).expect("carrier within bound");
            let sets: Vec<Set> = spec.sets().collect();
            let points = spec.points();
            let tops = plan
                .topologies
                .get(&shape)
                .map(|list| {
                    list.iter()
                        .map(|indices| {
                            let opens: Vec<Set> = indices.iter().map(|&i| sets[i].clone()).collect();
                            FpSoftTopology::validate(&context, &opens).expect("enumerated topologies are valid")
                        })
                        .collect()
                })
                .unwrap_or_default();
            shapes.insert(
                shape,
                ShapeData {
                    context,
                    spec,
                    sets,
                    points,
                    tops,
                },
            );
        }
        LibraryModel { q: plan.q, shapes }
    }

    fn q(&self) -> u32 {
        self.q
    }

    fn carrier_len(&self, shape: Shape) -> usize {
        self.shapes[&shape].spec.len()
    }

    fn set(&self, shape: Shape, index: usize) -> &Set {
        &self.shapes[&shape].sets[index]
    }

    fn points_len(&self, shape: Shape) -> usize {
        self.shapes[&shape].points.len()
    }

    fn point(&self, shape: Shape, index: usize) -> &Self::Point {
        &self.shapes[&shape].points[index]
    }

    fn top(&self, shape: Shape, index: usize) -> &Top {
        &self.shapes[&shape].tops[index]
    }

    fn mapping(&self, source: Shape, target: Shape, u: &[usize], p: &[usize]) -> FpSoftMapping {
        FpSoftMapping::new(
            self.context(source).clone(),
            self.context(target).clone(),
            TotalMap::new(u.to_vec(), target.universe).expect("u is total"),
            TotalMap::new(p.to_vec(), target.parameters).expect("p is total"),
        )
        .expect("mapping matches its contexts")
    }

    fn empty(&self, shape: Shape) -> Set {
        FpSoftSet::empty(self.context(shape))
    }

    fn universal(&self, shape: Shape) -> Set {
        FpSoftSet::universal(self.context(shape))
    }

    fn uniform(&self, shape: Shape, k: u32, full: bool) -> Set {
        let context = self.context(shape);
        let grade = Grade::lattice(k, self.q).expect("k ≤ q");
        let crisp = if full { context.full() } else { Subset::EMPTY };
        FpSoftSet::from_cells(context.clone(), vec![(grade, crisp); shape.parameters]).expect("cells fit")
    }

    fn equal(&self, a: &Set, b: &Set) -> bool {
        a.equals(b).expect(SHARED)
    }

    fn union(&self, a: &Set, b: &Set) -> Set {
        a.union(b).expect(SHARED)
    }

    fn intersection(&self, a: &Set, b: &Set) -> Set {
        a.intersection(b).expect(SHARED)
    }

    fn union_all(&self, family: &[&Set]) -> Set {
        FpSoftSet::union_family(family.iter().copied()).expect(SHARED)
    }

    fn intersection_all(&self, family: &[&Set]) -> Set {
        FpSoftSet::intersect_family(family.iter().copied()).expect(SHARED)
    }

    fn complement(&self, a: &Set) -> Set {
        a.complement()
    }

    fn subset(&self, a: &Set, b: &Set) -> bool {
        a.is_subset(b).expect(SHARED)
    }

    fn is_empty(&self, a: &Set) -> bool {
        a.is_empty()
    }

    fn is_normalized(&self, a: &Set) -> bool {
        a.is_normalized()
    }

    fn normalize(&self, a: &Set) -> Set {
        a.normalize()
    }

    fn qcoincident(&self, a: &Set, b: &Set) -> bool {
        a.qcoincident(b).expect(SHARED)
    }

    fn belongs(&self, point: &Self::Point, a: &Set) -> bool {
        point.belongs(a).expect(SHARED)
    }

    fn point_qcoincident(&self, point: &Self::Point, a: &Set) -> bool {
        point.qcoincident(a).expect(SHARED)
    }

    fn point_set(&self, point: &Self::Point) -> Set {
        point.to_set()
    }

    fn generators(&self, a: &Set) -> Vec<Self::Point> {
        a.decompose_points()
            .expect("generators are requested for nonempty normalized sets")
    }

    fn covers(&self, family: &[&Set]) -> bool {
        let context = family[0].context().clone();
        let members = family.iter().map(|&s| s.clone()).collect();
        CoverFamily::new(&context, members, None).expect(SHARED).is_cover()
    }

    fn image(&self, m: &FpSoftMapping, a: &Set) -> Set {
        m.image(a).expect(SHARED)
    }

    fn preimage(&self, m: &FpSoftMapping, b: &Set) -> Set {
        m.preimage(b).expect(SHARED)
    }

    fn injective(&self, m: &FpSoftMapping) -> bool {
        m.classify().injective
    }

    fn surjective(&self, m: &FpSoftMapping) -> bool {
        m.classify().surjective
    }

    fn opens(&self, t: &Top) -> Vec<Set> {
        t.opens().to_vec()
    }

    fn closed_family(&self, t: &Top) -> Vec<Set> {
        t.closed_family()
    }

    fn is_open(&self, t: &Top, a: &Set) -> bool {
        t.is_open(a).expect(SHARED)
    }

    fn is_closed(&self, t: &Top, a: &Set) -> bool {
        t.is_closed(a).expect(SHARED)
    }

    fn closure(&self, t: &Top, a: &Set) -> Set {
        t.closure(a).expect(SHARED)
    }

    fn interior(&self, t: &Top, a: &Set) -> Set {
        t.interior(a).expect(SHARED)
    }

    fn is_qnbd(&self, t: &Top, a: &Set, point: &Self::Point) -> bool {
        t.is_qnbd(a, QTarget::Point(point)).expect(SHARED)
    }

    fn closure_contains(&self, t: &Top, a: &Set, point: &Self::Point) -> bool {
        t.closure_contains_point(a, point).expect(SHARED)
    }

    fn qnbds_meet(&self, t: &Top, a: &Set, point: &Self::Point) -> bool {
        t.qnbds_meet(a, point).expect(SHARED)
    }

    fn is_base(&self, t: &Top, base: &[Set]) -> bool {
        t.is_base(base).expect("base members are open")
    }

    fn continuous(&self, m: &FpSoftMapping, source: &Top, target: &Top) -> bool {
        is_continuous(m, source, target).expect(SHARED)
    }

    fn enriched(&self, t: &Top) -> bool {
        t.enriched_for(self.q).expect("q is positive")
    }

    fn compact(&self, t: &Top) -> bool {
        check_compactness(t)
            .map(|r| r.compact && r.fip_equivalence_verified)
            .unwrap_or(false)
    }

    fn closure_round_trip(&self, t: &Top) -> bool {
        let spec = self.spec_of(t);
        OperatorTable::closure_of(spec, t)
            .and_then(|c| induce_from_closure_operator::<Rational>(&c))
            .is_ok_and(|induced| &induced == t)
    }

    fn interior_round_trip(&self, t: &Top) -> bool {
        let spec = self.spec_of(t);
        OperatorTable::interior_of(spec, t)
            .and_then(|i| induce_from_interior_operator::<Rational>(&i))
            .is_ok_and(|induced| &induced == t)
    }
}
