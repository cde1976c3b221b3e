//! Brute-force oracle on a raw encoding.
//!
//! A set is a vector of `(numerator, bitset)` cells over a fixed resolution
//! `q`; every notion is recomputed here straight from its definition without
//! touching the library's set, mapping or topology code. The oracle also
//! enumerates all topologies on a small lattice carrier.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::{carrier_size, LatticeSpec};
use crate::laws::model::{Model, Plan, Shape};
use crate::scalar::Scalar;
use crate::topology::FpSoftTopology;

/// Largest carrier whose subsets are searched for topologies.
pub const TOPOLOGY_CARRIER_BOUND: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RawSet {
    full: u64,
    cells: Vec<(u32, u64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RawPoint {
    universe: usize,
    parameters: usize,
    parameter: usize,
    alpha: u32,
    crisp: u64,
}

#[derive(Clone, Debug)]
pub struct RawMap {
    u: Vec<usize>,
    p: Vec<usize>,
    target_universe: usize,
    target_parameters: usize,
}

#[derive(Clone, Debug)]
pub struct RawTop {
    /// Sorted and distinct.
    opens: Vec<RawSet>,
    shape: Shape,
}

fn full_mask(universe: usize) -> u64 {
    if universe == 64 {
        u64::MAX
    } else {
        (1u64 << universe) - 1
    }
}

/// Decodes a canonical carrier index: the first parameter is the most
/// significant digit, each digit is `k · 2^|X| + bits`.
pub fn decode(universe: usize, parameters: usize, q: u32, index: usize) -> RawSet {
    let width = (q as usize + 1) << universe;
    let mut cells = vec![(0, 0); parameters];
    let mut rest = index;
    for cell in cells.iter_mut().rev() {
        let digit = rest % width;
        rest /= width;
        *cell = ((digit >> universe) as u32, (digit & ((1 << universe) - 1)) as u64);
    }
    RawSet {
        full: full_mask(universe),
        cells,
    }
}

pub fn encode(set: &RawSet, universe: usize, q: u32) -> usize {
    let width = (q as usize + 1) << universe;
    set.cells
        .iter()
        .fold(0, |acc, &(k, b)| acc * width + ((k as usize) << universe | b as usize))
}

impl RawSet {
    fn uniform(parameters: usize, full: u64, k: u32, bits: u64) -> Self {
        RawSet {
            full,
            cells: vec![(k, bits); parameters],
        }
    }

    fn zip(&self, other: &Self, f: impl Fn((u32, u64), (u32, u64)) -> (u32, u64)) -> Self {
        RawSet {
            full: self.full,
            cells: self.cells.iter().zip(&other.cells).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    fn union(&self, other: &Self) -> Self {
        self.zip(other, |(ka, a), (kb, b)| (ka.max(kb), a | b))
    }

    fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |(ka, a), (kb, b)| (ka.min(kb), a & b))
    }

    fn complement(&self, q: u32) -> Self {
        RawSet {
            full: self.full,
            cells: self.cells.iter().map(|&(k, b)| (q - k, self.full & !b)).collect(),
        }
    }

    fn subset(&self, other: &Self) -> bool {
        self.cells
            .iter()
            .zip(&other.cells)
            .all(|(&(ka, a), &(kb, b))| ka <= kb && a & !b == 0)
    }

    fn is_empty(&self) -> bool {
        self.cells.iter().all(|&c| c == (0, 0))
    }

    fn qcoincident(&self, other: &Self, q: u32) -> bool {
        self.cells
            .iter()
            .zip(&other.cells)
            .any(|(&(ka, a), &(kb, b))| ka + kb > q || a & b != 0)
    }
}

impl RawPoint {
    fn belongs(&self, a: &RawSet) -> bool {
        let (k, b) = a.cells[self.parameter];
        self.alpha <= k && self.crisp & !b == 0
    }

    /// `α + μ(e) > 1`, or `f(e)` is not inside `X - f_A(e)`.
    fn qcoincident(&self, a: &RawSet, q: u32) -> bool {
        let (k, b) = a.cells[self.parameter];
        let outside = a.full & !b;
        self.alpha + k > q || self.crisp & !outside != 0
    }
}

fn union_all(family: &[&RawSet]) -> RawSet {
    let mut acc = family[0].clone();
    for s in &family[1..] {
        acc = acc.union(s);
    }
    acc
}

fn intersection_all(family: &[&RawSet]) -> RawSet {
    let mut acc = family[0].clone();
    for s in &family[1..] {
        acc = acc.intersection(s);
    }
    acc
}

/// Every topology on the resolution-`q` carrier over `|X| = universe`,
/// `|E| = parameters`, each as its sorted carrier indices, listed in
/// lexicographic order of those index lists.
///
/// Backtracking over carrier indices in order: each undecided set is either
/// excluded, or included together with everything its inclusion forces
/// under pairwise union and intersection. A branch dies as soon as a forced
/// set was excluded earlier, so each topology is produced exactly once.
pub fn topology_indices(universe: usize, parameters: usize, q: u32) -> Result<Vec<Vec<usize>>> {
    if q == 0 {
        return Err(Error::ZeroResolution);
    }
    let size = carrier_size(universe, parameters, q);
    if size > TOPOLOGY_CARRIER_BOUND as u128 {
        return Err(Error::CarrierTooLarge {
            size,
            bound: TOPOLOGY_CARRIER_BOUND as u128,
        });
    }
    let n = size as usize;
    let sets: Vec<RawSet> = (0..n).map(|i| decode(universe, parameters, q, i)).collect();
    let join: Vec<Vec<usize>> = sets
        .iter()
        .map(|a| sets.iter().map(|b| encode(&a.union(b), universe, q)).collect())
        .collect();
    let meet: Vec<Vec<usize>> = sets
        .iter()
        .map(|a| sets.iter().map(|b| encode(&a.intersection(b), universe, q)).collect())
        .collect();

    let close = |mut members: u64| -> u64 {
        loop {
            let mut grown = members;
            for i in (0..n).filter(|i| members >> i & 1 == 1) {
                for j in (i + 1..n).filter(|j| members >> j & 1 == 1) {
                    grown |= 1 << join[i][j] | 1 << meet[i][j];
                }
            }
            if grown == members {
                return members;
            }
            members = grown;
        }
    };

    fn search(next: usize, n: usize, included: u64, excluded: u64, close: &dyn Fn(u64) -> u64, out: &mut Vec<u64>) {
        if next == n {
            out.push(included);
            return;
        }
        if (included | excluded) >> next & 1 == 1 {
            search(next + 1, n, included, excluded, close, out);
            return;
        }
        search(next + 1, n, included, excluded | 1 << next, close, out);
        let grown = close(included | 1 << next);
        if grown & excluded == 0 {
            search(next + 1, n, grown, excluded, close, out);
        }
    }

    let bottom = 0;
    let top = n - 1;
    let mut found = Vec::new();
    search(0, n, close(1 << bottom | 1 << top), 0, &close, &mut found);
    let mut lists: Vec<Vec<usize>> = found
        .into_iter()
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    lists.sort_unstable();
    Ok(lists)
}

/// Every topology on the lattice carrier of `spec`, as validated library
/// topologies in the order of [`topology_indices`].
pub fn enumerate_topologies<T: Scalar>(spec: &LatticeSpec) -> Result<Vec<FpSoftTopology<T>>> {
    let ctx = spec.context();
    topology_indices(ctx.universe_len(), ctx.parameter_len(), spec.resolution())?
        .into_iter()
        .map(|indices| {
            let opens: Vec<_> = indices.iter().map(|&i| spec.set_at(i)).collect();
            FpSoftTopology::validate(ctx, &opens)
        })
        .collect()
}

/// The from-definitions model.
pub struct OracleModel {
    q: u32,
    sets: BTreeMap<Shape, Vec<RawSet>>,
    points: BTreeMap<Shape, Vec<RawPoint>>,
    tops: BTreeMap<Shape, Vec<RawTop>>,
}

impl OracleModel {
    fn top_of(&self, shape: Shape, opens: Vec<RawSet>) -> RawTop {
        let mut opens = opens;
        opens.sort();
        opens.dedup();
        RawTop { opens, shape }
    }

    fn carrier(&self, shape: Shape) -> &[RawSet] {
        &self.sets[&shape]
    }

    fn shape_of(&self, a: &RawSet) -> (usize, usize) {
        (a.full.count_ones() as usize, a.cells.len())
    }

    fn lattice_points(&self, a: &RawSet) -> Vec<RawPoint> {
        let (nx, ne) = self.shape_of(a);
        let mut out = Vec::new();
        for parameter in 0..ne {
            for alpha in 1..=self.q {
                for crisp in 0..1u64 << nx {
                    out.push(RawPoint {
                        universe: nx,
                        parameters: ne,
                        parameter,
                        alpha,
                        crisp,
                    });
                }
            }
        }
        out
    }

    fn closure_table(&self, t: &RawTop) -> Vec<RawSet> {
        self.carrier(t.shape).iter().map(|a| self.closure(t, a)).collect()
    }

    fn interior_table(&self, t: &RawTop) -> Vec<RawSet> {
        self.carrier(t.shape).iter().map(|a| self.interior(t, a)).collect()
    }
}

impl Model for OracleModel {
    type Set = RawSet;
    type Point = RawPoint;
    type Map = RawMap;
    type Top = RawTop;

    fn prepare(plan: &Plan) -> Self {
        let q = plan.q;
        let mut sets = BTreeMap::new();
        let mut points = BTreeMap::new();
        for &shape in &plan.shapes {
            let n = carrier_size(shape.universe, shape.parameters, q) as usize;
            sets.insert(
                shape,
                (0..n).map(|i| decode(shape.universe, shape.parameters, q, i)).collect(),
            );
            let mut pts = Vec::new();
            for parameter in 0..shape.parameters {
                for alpha in 1..=q {
                    for crisp in 0..1u64 << shape.universe {
                        pts.push(RawPoint {
                            universe: shape.universe,
                            parameters: shape.parameters,
                            parameter,
                            alpha,
                            crisp,
                        });
                    }
                }
            }
            points.insert(shape, pts);
        }
        let mut model = OracleModel {
            q,
            sets,
            points,
            tops: BTreeMap::new(),
        };
        for (&shape, list) in &plan.topologies {
            let built = list
                .iter()
                .map(|indices| {
                    let opens = indices.iter().map(|&i| model.sets[&shape][i].clone()).collect();
                    model.top_of(shape, opens)
                })
                .collect();
            model.tops.insert(shape, built);
        }
        model
    }

    fn q(&self) -> u32 {
        self.q
    }

    fn carrier_len(&self, shape: Shape) -> usize {
        self.sets[&shape].len()
    }

    fn set(&self, shape: Shape, index: usize) -> &RawSet {
        &self.sets[&shape][index]
    }

    fn points_len(&self, shape: Shape) -> usize {
        self.points[&shape].len()
    }

    fn point(&self, shape: Shape, index: usize) -> &RawPoint {
        &self.points[&shape][index]
    }

    fn top(&self, shape: Shape, index: usize) -> &RawTop {
        &self.tops[&shape][index]
    }

    fn mapping(&self, _source: Shape, target: Shape, u: &[usize], p: &[usize]) -> RawMap {
        RawMap {
            u: u.to_vec(),
            p: p.to_vec(),
            target_universe: target.universe,
            target_parameters: target.parameters,
        }
    }

    fn empty(&self, shape: Shape) -> RawSet {
        RawSet::uniform(shape.parameters, full_mask(shape.universe), 0, 0)
    }

    fn universal(&self, shape: Shape) -> RawSet {
        let full = full_mask(shape.universe);
        RawSet::uniform(shape.parameters, full, self.q, full)
    }

    fn uniform(&self, shape: Shape, k: u32, full: bool) -> RawSet {
        let mask = full_mask(shape.universe);
        RawSet::uniform(shape.parameters, mask, k, if full { mask } else { 0 })
    }

    fn equal(&self, a: &RawSet, b: &RawSet) -> bool {
        a == b
    }

    fn union(&self, a: &RawSet, b: &RawSet) -> RawSet {
        a.union(b)
    }

    fn intersection(&self, a: &RawSet, b: &RawSet) -> RawSet {
        a.intersection(b)
    }

    fn union_all(&self, family: &[&RawSet]) -> RawSet {
        union_all(family)
    }

    fn intersection_all(&self, family: &[&RawSet]) -> RawSet {
        intersection_all(family)
    }

    fn complement(&self, a: &RawSet) -> RawSet {
        a.complement(self.q)
    }

    fn subset(&self, a: &RawSet, b: &RawSet) -> bool {
        a.subset(b)
    }

    fn is_empty(&self, a: &RawSet) -> bool {
        a.is_empty()
    }

    fn is_normalized(&self, a: &RawSet) -> bool {
        a.cells.iter().all(|&(k, b)| k > 0 || b == 0)
    }

    fn normalize(&self, a: &RawSet) -> RawSet {
        RawSet {
            full: a.full,
            cells: a
                .cells
                .iter()
                .map(|&(k, b)| if k == 0 { (0, 0) } else { (k, b) })
                .collect(),
        }
    }

    fn qcoincident(&self, a: &RawSet, b: &RawSet) -> bool {
        a.qcoincident(b, self.q)
    }

    fn belongs(&self, point: &RawPoint, a: &RawSet) -> bool {
        point.belongs(a)
    }

    fn point_qcoincident(&self, point: &RawPoint, a: &RawSet) -> bool {
        point.qcoincident(a, self.q)
    }

    fn point_set(&self, point: &RawPoint) -> RawSet {
        let mut cells = vec![(0, 0); point.parameters];
        cells[point.parameter] = (point.alpha, point.crisp);
        RawSet {
            full: full_mask(point.universe),
            cells,
        }
    }

    /// All lattice points belonging to `a`.
    fn generators(&self, a: &RawSet) -> Vec<RawPoint> {
        self.lattice_points(a).into_iter().filter(|p| p.belongs(a)).collect()
    }

    fn covers(&self, family: &[&RawSet]) -> bool {
        let u = union_all(family);
        u.cells.iter().all(|&(k, b)| k == self.q && b == u.full)
    }

    fn image(&self, m: &RawMap, a: &RawSet) -> RawSet {
        let mut cells = vec![(0, 0); m.target_parameters];
        for (e, &(k, bits)) in a.cells.iter().enumerate() {
            let target = &mut cells[m.p[e]];
            target.0 = target.0.max(k);
            for x in (0..m.u.len()).filter(|x| bits >> x & 1 == 1) {
                target.1 |= 1 << m.u[x];
            }
        }
        RawSet {
            full: full_mask(m.target_universe),
            cells,
        }
    }

    fn preimage(&self, m: &RawMap, b: &RawSet) -> RawSet {
        let cells =
            m.p.iter()
                .map(|&k| {
                    let (grade, bits) = b.cells[k];
                    let back = (0..m.u.len())
                        .filter(|&x| bits >> m.u[x] & 1 == 1)
                        .fold(0, |acc, x| acc | 1 << x);
                    (grade, back)
                })
                .collect();
        RawSet {
            full: full_mask(m.u.len()),
            cells,
        }
    }

    fn injective(&self, m: &RawMap) -> bool {
        let distinct = |v: &[usize]| (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]));
        distinct(&m.u) && distinct(&m.p)
    }

    fn surjective(&self, m: &RawMap) -> bool {
        (0..m.target_universe).all(|y| m.u.contains(&y)) && (0..m.target_parameters).all(|k| m.p.contains(&k))
    }

    fn opens(&self, t: &RawTop) -> Vec<RawSet> {
        t.opens.clone()
    }

    fn closed_family(&self, t: &RawTop) -> Vec<RawSet> {
        t.opens.iter().map(|o| o.complement(self.q)).collect()
    }

    fn is_open(&self, t: &RawTop, a: &RawSet) -> bool {
        t.opens.iter().any(|o| o == a)
    }

    fn is_closed(&self, t: &RawTop, a: &RawSet) -> bool {
        t.opens.iter().any(|o| o.complement(self.q) == *a)
    }

    /// Meet of every closed superset.
    fn closure(&self, t: &RawTop, a: &RawSet) -> RawSet {
        let supersets: Vec<RawSet> = self.closed_family(t).into_iter().filter(|c| a.subset(c)).collect();
        intersection_all(&supersets.iter().collect::<Vec<_>>())
    }

    /// Join of every open subset.
    fn interior(&self, t: &RawTop, a: &RawSet) -> RawSet {
        let subsets: Vec<&RawSet> = t.opens.iter().filter(|o| o.subset(a)).collect();
        union_all(&subsets)
    }

    fn is_qnbd(&self, t: &RawTop, a: &RawSet, point: &RawPoint) -> bool {
        t.opens.iter().any(|c| point.qcoincident(c, self.q) && c.subset(a))
    }

    fn closure_contains(&self, t: &RawTop, a: &RawSet, point: &RawPoint) -> bool {
        point.belongs(&self.closure(t, a))
    }

    /// Scans every lattice set that is a Q-neighbourhood of the point.
    fn qnbds_meet(&self, t: &RawTop, a: &RawSet, point: &RawPoint) -> bool {
        self.carrier(t.shape)
            .iter()
            .filter(|n| self.is_qnbd(t, n, point))
            .all(|n| n.qcoincident(a, self.q))
    }

    /// Every open set is the join of some subfamily of `base`: search all
    /// subfamilies of the base members it contains.
    fn is_base(&self, t: &RawTop, base: &[RawSet]) -> bool {
        let empty = self.empty(t.shape);
        t.opens.iter().all(|open| {
            let inside: Vec<&RawSet> = base.iter().filter(|b| b.subset(open)).collect();
            (0..1u64 << inside.len()).any(|mask| {
                let picked: Vec<&RawSet> = (0..inside.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| inside[i])
                    .collect();
                let joined = if picked.is_empty() {
                    empty.clone()
                } else {
                    union_all(&picked)
                };
                joined == *open
            })
        })
    }

    fn continuous(&self, m: &RawMap, source: &RawTop, target: &RawTop) -> bool {
        target.opens.iter().all(|g| self.is_open(source, &self.preimage(m, g)))
    }

    fn enriched(&self, t: &RawTop) -> bool {
        let (nx, ne) = (t.shape.universe, t.shape.parameters);
        let full = full_mask(nx);
        (1..=self.q).all(|k| {
            let alpha = RawSet::uniform(ne, full, k, full);
            let co = RawSet::uniform(ne, full, self.q - k, 0);
            self.is_open(t, &alpha) && self.is_open(t, &co)
        })
    }

    /// Every open cover of `F_Ẽ` from `τ` has a finite subcover (its own
    /// members, found by search), and every subfamily of closed sets with
    /// the FIP, checked over all its finite subfamilies, meets.
    fn compact(&self, t: &RawTop) -> bool {
        let n = t.opens.len();
        let subfamilies = |fam: &[RawSet], mask: u64| -> Vec<RawSet> {
            (0..fam.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| fam[i].clone())
                .collect()
        };
        for mask in 1..1u64 << n {
            let cover = subfamilies(&t.opens, mask);
            if self.covers(&cover.iter().collect::<Vec<_>>()) {
                let has_finite = (1..=mask)
                    .any(|sub| sub & !mask == 0 && self.covers(&subfamilies(&t.opens, sub).iter().collect::<Vec<_>>()));
                if !has_finite {
                    return false;
                }
            }
        }
        let closed = self.closed_family(t);
        for mask in 1..1u64 << n {
            let fip = (1..=mask).filter(|sub| sub & !mask == 0).all(|sub| {
                let fam = subfamilies(&closed, sub);
                !intersection_all(&fam.iter().collect::<Vec<_>>()).is_empty()
            });
            let fam = subfamilies(&closed, mask);
            if fip && intersection_all(&fam.iter().collect::<Vec<_>>()).is_empty() {
                return false;
            }
        }
        true
    }

    fn closure_round_trip(&self, t: &RawTop) -> bool {
        let carrier = self.carrier(t.shape);
        let c = self.closure_table(t);
        let index = |s: &RawSet| {
            carrier
                .iter()
                .position(|x| x == s)
                .expect("closure stays on the lattice")
        };
        let empty = self.empty(t.shape);
        let c1 = c[index(&empty)] == empty;
        let c2 = carrier.iter().zip(&c).all(|(a, ca)| a.subset(ca));
        let c3 = carrier.iter().enumerate().all(|(i, a)| {
            carrier
                .iter()
                .enumerate()
                .all(|(j, b)| c[index(&a.union(b))] == c[i].union(&c[j]))
        });
        let c4 = c.iter().all(|ca| c[index(ca)] == *ca);
        let induced: Vec<RawSet> = carrier
            .iter()
            .zip(&c)
            .filter(|(a, ca)| a == ca)
            .map(|(a, _)| a.complement(self.q))
            .collect();
        c1 && c2 && c3 && c4 && self.top_of(t.shape, induced).opens == t.opens
    }

    fn interior_round_trip(&self, t: &RawTop) -> bool {
        let carrier = self.carrier(t.shape);
        let i = self.interior_table(t);
        let index = |s: &RawSet| {
            carrier
                .iter()
                .position(|x| x == s)
                .expect("interior stays on the lattice")
        };
        let universal = self.universal(t.shape);
        let i1 = i[index(&universal)] == universal;
        let i2 = carrier.iter().zip(&i).all(|(a, ia)| ia.subset(a));
        let i3 = carrier.iter().enumerate().all(|(x, a)| {
            carrier
                .iter()
                .enumerate()
                .all(|(y, b)| i[index(&a.intersection(b))] == i[x].intersection(&i[y]))
        });
        let i4 = i.iter().all(|ia| i[index(ia)] == *ia);
        let induced: Vec<RawSet> = carrier
            .iter()
            .zip(&i)
            .filter(|(a, ia)| a == ia)
            .map(|(a, _)| a.clone())
            .collect();
        i1 && i2 && i3 && i4 && self.top_of(t.shape, induced).opens == t.opens
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Q;

    #[test]
    fn smallest_carrier_has_four_topologies() {
        let tops = topology_indices(1, 1, 1).unwrap();
        assert_eq!(tops, vec![vec![0, 1, 2, 3], vec![0, 1, 3], vec![0, 2, 3], vec![0, 3]]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (nx, ne, q) in [(1, 1, 1), (1, 1, 2), (2, 1, 1), (1, 1, 3)] {
            let n = carrier_size(nx, ne, q) as usize;
            let sets: Vec<RawSet> = (0..n).map(|i| decode(nx, ne, q, i)).collect();
            let mut brute = Vec::new();
            for mask in 0..1u64 << n {
                let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let has = |s: &RawSet| members.iter().any(|&i| sets[i] == *s);
                let ok = has(&sets[0])
                    && has(&sets[n - 1])
                    && members.iter().all(|&i| {
                        members
                            .iter()
                            .all(|&j| has(&sets[i].union(&sets[j])) && has(&sets[i].intersection(&sets[j])))
                    });
                if ok {
                    brute.push(members);
                }
            }
            brute.sort();
            assert_eq!(topology_indices(nx, ne, q).unwrap(), brute, "({nx}, {ne}, {q})");
        }
    }

    #[test]
    fn library_accepts_every_enumerated_topology() {
        for (nx, ne, q) in [(1, 1, 1), (1, 1, 2), (2, 1, 1)] {
            let spec = LatticeSpec::numbered(nx, ne, q).unwrap();
            let tops = enumerate_topologies::<Q>(&spec).unwrap();
            assert_eq!(tops.len(), topology_indices(nx, ne, q).unwrap().len());
        }
    }

    #[test]
    fn encode_inverts_decode() {
        for i in 0..144 {
            assert_eq!(encode(&decode(2, 2, 2, i), 2, 2), i);
        }
    }

    #[test]
    fn enumeration_bound() {
        assert!(matches!(topology_indices(2, 2, 1), Err(Error::CarrierTooLarge { .. })));
    }
}
