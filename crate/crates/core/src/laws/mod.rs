//! The law registry and its exhaustive runner.
//!
//! A law is a predicate over a small instance: some lattice sets, families,
//! points, topologies and possibly a mapping. The runner scans every
//! instance of a [`LawSpec`] in canonical order under both models and
//! reports the first instance where the law fails or where the two models
//! disagree.

mod library;
pub mod model;
mod registry;
mod witness;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

pub use library::LibraryModel;
pub use model::{Model, Plan, Shape, Side};
pub use registry::registry;

use crate::error::{Error, Result};
use crate::oracle::{topology_indices, OracleModel};

/// Sizes a law is scanned at: `|X|`, `|E|` and the grade resolution `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LawSpec {
    pub universe: usize,
    pub parameters: usize,
    pub resolution: u32,
}

impl LawSpec {
    pub const fn new(universe: usize, parameters: usize, resolution: u32) -> Self {
        LawSpec {
            universe,
            parameters,
            resolution,
        }
    }
}

impl fmt::Display for LawSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|X|={} |E|={} q={}", self.universe, self.parameters, self.resolution)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    /// The scan is expected to find a counterexample.
    Counterexample,
}

/// One quantified variable of a law.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    /// A lattice set over the source.
    Set,
    /// A lattice set over the target.
    TargetSet,
    /// A nonempty multiset of at most this many source sets.
    Family(usize),
    TargetFamily(usize),
    /// A lattice point over the source.
    Point,
    Top,
    TargetTop,
    /// A subfamily of the opens of the first source topology. Must directly
    /// follow that topology's slot.
    Base,
}

/// Which source and target sizes a law ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shapes {
    /// Source of exactly the spec's sizes, no target.
    Single,
    /// Source and target both of exactly the spec's sizes.
    Paired,
    /// Every source and target with `1 ≤ |X|, |Y| ≤ N` and `1 ≤ |E|, |K| ≤ M`.
    UpTo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Maps {
    None,
    All,
    Constant,
}

#[derive(Clone, Copy, Debug)]
pub struct Domain {
    pub shapes: Shapes,
    pub maps: Maps,
    pub slots: &'static [Slot],
}

type Check<M> = for<'a> fn(&Env<'a, M>) -> bool;

pub struct Law {
    pub id: &'static str,
    pub statement: &'static str,
    pub expectation: Expectation,
    pub default_spec: LawSpec,
    pub domain: Domain,
    library: Check<LibraryModel>,
    oracle: Check<OracleModel>,
}

impl fmt::Debug for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Law").field("id", &self.id).finish_non_exhaustive()
    }
}

/// The `(u, p)` pair of a mapping as images of `x1..` and `e1..`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpec {
    pub u: Vec<usize>,
    pub p: Vec<usize>,
}

impl MapSpec {
    pub fn is_constant(&self) -> bool {
        self.u.windows(2).all(|w| w[0] == w[1]) && self.p.windows(2).all(|w| w[0] == w[1])
    }
}

/// A scanned instance: the shapes in play, the mapping, and one value per
/// slot (an index into the corresponding enumeration).
#[derive(Clone, Debug)]
pub struct Instance {
    pub source: Shape,
    pub target: Shape,
    pub map: Option<Arc<MapSpec>>,
    pub values: Vec<usize>,
}

type FamilyTable = Arc<Vec<Vec<usize>>>;

#[derive(Default)]
struct Tables {
    families: HashMap<(Shape, usize), FamilyTable>,
    /// Opens of each enumerated topology, as carrier indices.
    topologies: HashMap<Shape, Arc<Vec<Vec<usize>>>>,
}

/// What a law body sees: one model and one instance.
pub struct Env<'a, M: Model> {
    pub m: &'a M,
    instance: &'a Instance,
    slots: &'static [Slot],
    tables: &'a Tables,
}

impl<'a, M: Model> Env<'a, M> {
    fn nth(&self, pred: impl Fn(Slot) -> bool, k: usize) -> (Slot, usize) {
        self.slots
            .iter()
            .zip(&self.instance.values)
            .filter(|(s, _)| pred(**s))
            .map(|(s, v)| (*s, *v))
            .nth(k)
            .expect("law body matches its slots")
    }

    pub fn source(&self) -> Shape {
        self.instance.source
    }

    pub fn target(&self) -> Shape {
        self.instance.target
    }

    pub fn set(&self, k: usize) -> &'a M::Set {
        let (_, v) = self.nth(|s| s == Slot::Set, k);
        self.m.set(self.instance.source, v)
    }

    pub fn target_set(&self, k: usize) -> &'a M::Set {
        let (_, v) = self.nth(|s| s == Slot::TargetSet, k);
        self.m.set(self.instance.target, v)
    }

    pub fn family(&self, k: usize) -> Vec<&'a M::Set> {
        let (slot, v) = self.nth(|s| matches!(s, Slot::Family(_)), k);
        let Slot::Family(max) = slot else { unreachable!() };
        self.members(self.instance.source, max, v)
    }

    pub fn target_family(&self, k: usize) -> Vec<&'a M::Set> {
        let (slot, v) = self.nth(|s| matches!(s, Slot::TargetFamily(_)), k);
        let Slot::TargetFamily(max) = slot else { unreachable!() };
        self.members(self.instance.target, max, v)
    }

    fn members(&self, shape: Shape, max: usize, v: usize) -> Vec<&'a M::Set> {
        let table = &self.tables.families[&(shape, max)];
        table[v].iter().map(|&i| self.m.set(shape, i)).collect()
    }

    pub fn point(&self, k: usize) -> &'a M::Point {
        let (_, v) = self.nth(|s| s == Slot::Point, k);
        self.m.point(self.instance.source, v)
    }

    pub fn top(&self, k: usize) -> &'a M::Top {
        let (_, v) = self.nth(|s| s == Slot::Top, k);
        self.m.top(self.instance.source, v)
    }

    pub fn target_top(&self, k: usize) -> &'a M::Top {
        let (_, v) = self.nth(|s| s == Slot::TargetTop, k);
        self.m.top(self.instance.target, v)
    }

    /// The base subfamily, in the order of the topology's opens.
    pub fn base(&self) -> Vec<M::Set> {
        let (_, top) = self.nth(|s| s == Slot::Top, 0);
        let (_, mask) = self.nth(|s| s == Slot::Base, 0);
        let opens = &self.tables.topologies[&self.instance.source][top];
        opens
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &i)| self.m.set(self.instance.source, i).clone())
            .collect()
    }

    pub fn map(&self) -> M::Map {
        let spec = self.instance.map.as_ref().expect("law ranges over mappings");
        self.m
            .mapping(self.instance.source, self.instance.target, &spec.u, &spec.p)
    }

    /// Every lattice set over the source, for laws quantifying over all of them.
    pub fn all_sets(&self) -> impl Iterator<Item = &'a M::Set> + 'a {
        let (m, shape) = (self.m, self.instance.source);
        (0..m.carrier_len(shape)).map(move |i| m.set(shape, i))
    }

    pub fn all_target_sets(&self) -> impl Iterator<Item = &'a M::Set> + 'a {
        let (m, shape) = (self.m, self.instance.target);
        (0..m.carrier_len(shape)).map(move |i| m.set(shape, i))
    }

    pub fn all_points(&self) -> impl Iterator<Item = &'a M::Point> + 'a {
        let (m, shape) = (self.m, self.instance.source);
        (0..m.points_len(shape)).map(move |i| m.point(shape, i))
    }
}

/// Nonempty nondecreasing index tuples of length at most `max` over `0..n`,
/// shorter tuples first, each length in lexicographic order.
fn multisets(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for len in 1..=max {
        let mut tuple = vec![0; len];
        loop {
            out.push(tuple.clone());
            let Some(pos) = (0..len).rev().find(|&i| tuple[i] + 1 < n) else {
                break;
            };
            let next = tuple[pos] + 1;
            tuple[pos..].fill(next);
        }
    }
    out
}

fn all_maps(source: Shape, target: Shape) -> Vec<MapSpec> {
    let tuples = |len: usize, base: usize| -> Vec<Vec<usize>> {
        let total = base.pow(len as u32);
        (0..total)
            .map(|mut code| {
                let mut t = vec![0; len];
                for slot in t.iter_mut().rev() {
                    *slot = code % base;
                    code /= base;
                }
                t
            })
            .collect()
    };
    let us = tuples(source.universe, target.universe);
    let ps = tuples(source.parameters, target.parameters);
    us.iter()
        .flat_map(|u| {
            ps.iter().map(move |p| MapSpec {
                u: u.clone(),
                p: p.clone(),
            })
        })
        .collect()
}

struct Group {
    source: Shape,
    target: Shape,
    map: Option<Arc<MapSpec>>,
    fixed_top: Option<usize>,
    radices: Vec<usize>,
    size: u64,
}

struct Scan {
    slots: &'static [Slot],
    plan: Plan,
    tables: Tables,
    groups: Vec<Group>,
    /// `starts[g]` is the global index of the first instance of group `g`.
    starts: Vec<u64>,
    total: u64,
}

fn shape_pairs(domain: &Domain, spec: LawSpec) -> Vec<(Shape, Shape)> {
    let (n, m) = (spec.universe, spec.parameters);
    match domain.shapes {
        Shapes::Single | Shapes::Paired => vec![(Shape::source(n, m), Shape::target(n, m))],
        Shapes::UpTo => {
            let mut out = Vec::new();
            for nx in 1..=n {
                for ne in 1..=m {
                    for ny in 1..=n {
                        for nk in 1..=m {
                            out.push((Shape::source(nx, ne), Shape::target(ny, nk)));
                        }
                    }
                }
            }
            out
        }
    }
}

fn plan_scan(law: &Law, spec: LawSpec) -> Result<Scan> {
    if spec.resolution == 0 {
        return Err(Error::ZeroResolution);
    }
    if spec.universe == 0 {
        return Err(Error::EmptyUniverse);
    }
    if spec.parameters == 0 {
        return Err(Error::EmptyParameters);
    }
    let q = spec.resolution;
    let domain = &law.domain;
    let slots = domain.slots;
    let uses_target = domain.shapes != Shapes::Single;
    let pairs = shape_pairs(domain, spec);
    let mut plan = Plan { q, ..Plan::default() };
    let mut tables = Tables::default();

    let need = |shape: Shape, plan: &mut Plan| -> Result<()> {
        if !plan.shapes.contains(&shape) {
            crate::lattice::LatticeSpec::new(crate::laws::library::context_for(shape), q)?;
            plan.shapes.push(shape);
        }
        Ok(())
    };
    for &(source, target) in &pairs {
        need(source, &mut plan)?;
        if uses_target {
            need(target, &mut plan)?;
        }
        for slot in slots {
            let (shape, max) = match *slot {
                Slot::Family(k) => (source, k),
                Slot::TargetFamily(k) => (target, k),
                Slot::Top | Slot::Base => {
                    topologies_for(source, &mut plan, &mut tables)?;
                    continue;
                }
                Slot::TargetTop => {
                    topologies_for(target, &mut plan, &mut tables)?;
                    continue;
                }
                _ => continue,
            };
            let n = crate::lattice::carrier_size(shape.universe, shape.parameters, q) as usize;
            tables
                .families
                .entry((shape, max))
                .or_insert_with(|| Arc::new(multisets(n, max)));
        }
    }

    let mut groups = Vec::new();
    for &(source, target) in &pairs {
        let maps: Vec<Option<Arc<MapSpec>>> = match domain.maps {
            Maps::None => vec![None],
            Maps::All => all_maps(source, target)
                .into_iter()
                .map(|m| Some(Arc::new(m)))
                .collect(),
            Maps::Constant => all_maps(source, target)
                .into_iter()
                .filter(MapSpec::is_constant)
                .map(|m| Some(Arc::new(m)))
                .collect(),
        };
        let fixed_tops: Vec<Option<usize>> = if slots.contains(&Slot::Base) {
            (0..tables.topologies[&source].len()).map(Some).collect()
        } else {
            vec![None]
        };
        for map in &maps {
            for &fixed_top in &fixed_tops {
                let radices: Vec<usize> = slots
                    .iter()
                    .map(|slot| {
                        let n = |s: Shape| crate::lattice::carrier_size(s.universe, s.parameters, q) as usize;
                        match *slot {
                            Slot::Set => n(source),
                            Slot::TargetSet => n(target),
                            Slot::Family(k) => tables.families[&(source, k)].len(),
                            Slot::TargetFamily(k) => tables.families[&(target, k)].len(),
                            Slot::Point => source.parameters * q as usize * (1 << source.universe),
                            Slot::Top if fixed_top.is_some() => 1,
                            Slot::Top => tables.topologies[&source].len(),
                            Slot::TargetTop => tables.topologies[&target].len(),
                            Slot::Base => 1 << tables.topologies[&source][fixed_top.unwrap()].len(),
                        }
                    })
                    .collect();
                let size = radices.iter().map(|&r| r as u64).product();
                groups.push(Group {
                    source,
                    target,
                    map: map.clone(),
                    fixed_top,
                    radices,
                    size,
                });
            }
        }
    }
    let mut starts = Vec::with_capacity(groups.len());
    let mut total = 0u64;
    for g in &groups {
        starts.push(total);
        total += g.size;
    }
    Ok(Scan {
        slots,
        plan,
        tables,
        groups,
        starts,
        total,
    })
}

fn topologies_for(shape: Shape, plan: &mut Plan, tables: &mut Tables) -> Result<()> {
    if let std::collections::hash_map::Entry::Vacant(slot) = tables.topologies.entry(shape) {
        let list = Arc::new(topology_indices(shape.universe, shape.parameters, plan.q)?);
        plan.topologies.insert(shape, list.clone());
        slot.insert(list);
    }
    Ok(())
}

impl Scan {
    fn instance(&self, index: u64) -> Instance {
        let g = self.starts.partition_point(|&s| s <= index) - 1;
        let group = &self.groups[g];
        let mut rest = index - self.starts[g];
        let mut values = vec![0; group.radices.len()];
        for (v, &r) in values.iter_mut().zip(&group.radices).rev() {
            *v = (rest % r as u64) as usize;
            rest /= r as u64;
        }
        if let Some(top) = group.fixed_top {
            let pos = self
                .slots
                .iter()
                .position(|&s| s == Slot::Top)
                .expect("base follows a topology");
            values[pos] = top;
        }
        Instance {
            source: group.source,
            target: group.target,
            map: group.map.clone(),
            values,
        }
    }

    fn env<'a, M: Model>(&'a self, m: &'a M, law: &Law, instance: &'a Instance) -> Env<'a, M> {
        Env {
            m,
            instance,
            slots: law.domain.slots,
            tables: &self.tables,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Position of the instance in the canonical scan order.
    pub index: u64,
    /// The instance in the text grammar, with `#` comments for the parts the
    /// grammar has no statement for.
    pub document: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Counterexample(Witness),
    /// The library and the oracle evaluated the law differently.
    Disagreement {
        witness: Witness,
        library: bool,
        oracle: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub id: &'static str,
    pub spec: LawSpec,
    pub expectation: Expectation,
    /// Instances evaluated under both models.
    pub instances: u64,
    pub verdict: Verdict,
}

impl LawReport {
    pub fn matches_expectation(&self) -> bool {
        matches!(
            (self.expectation, &self.verdict),
            (Expectation::Holds, Verdict::Pass) | (Expectation::Counterexample, Verdict::Counterexample(_))
        )
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// One-line summary: `pass`, `counterexample #N` or `disagreement #N`.
    pub fn summary(&self) -> String {
        match &self.verdict {
            Verdict::Pass => "pass".to_string(),
            Verdict::Counterexample(w) => format!("counterexample #{}", w.index),
            Verdict::Disagreement {
                witness,
                library,
                oracle,
            } => format!("disagreement #{} (library {library}, oracle {oracle})", witness.index),
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        match &self.verdict {
            Verdict::Pass => Ok(()),
            Verdict::Counterexample(w) | Verdict::Disagreement { witness: w, .. } => write!(f, "{}", w.document),
        }
    }
}

pub fn find_law(id: &str) -> Result<&'static Law> {
    registry()
        .iter()
        .find(|l| l.id == id)
        .ok_or_else(|| Error::UnknownLaw(id.to_string()))
}

/// Runs one law at `spec` (its default when `None`) on `jobs` worker
/// threads. The reported instance is the first in canonical order whatever
/// the thread count.
pub fn run_law(id: &str, spec: Option<LawSpec>, jobs: usize) -> Result<LawReport> {
    let law = find_law(id)?;
    let spec = spec.unwrap_or(law.default_spec);
    let scan = plan_scan(law, spec)?;
    let library = LibraryModel::prepare(&scan.plan);
    let oracle = OracleModel::prepare(&scan.plan);
    let evaluate = |index: u64| {
        let instance = scan.instance(index);
        let lib = (law.library)(&scan.env(&library, law, &instance));
        let orc = (law.oracle)(&scan.env(&oracle, law, &instance));
        (lib, orc)
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let first = |from: u64, interesting: &(dyn Fn(bool, bool) -> bool + Sync)| {
        pool.install(|| {
            (from..scan.total).into_par_iter().find_first(|&i| {
                let (lib, orc) = evaluate(i);
                interesting(lib, orc)
            })
        })
    };
    let witness = |index: u64| Witness {
        index,
        document: witness::render(law, &library, &scan.instance(index), &scan.tables),
    };
    let verdict = match first(0, &|lib, orc| lib != orc || !lib) {
        None => Verdict::Pass,
        Some(index) => {
            let (lib, orc) = evaluate(index);
            if lib != orc {
                Verdict::Disagreement {
                    witness: witness(index),
                    library: lib,
                    oracle: orc,
                }
            } else {
                // keep checking agreement on the rest of the scan
                match first(index + 1, &|lib, orc| lib != orc) {
                    None => Verdict::Counterexample(witness(index)),
                    Some(d) => {
                        let (library, oracle) = evaluate(d);
                        Verdict::Disagreement {
                            witness: witness(d),
                            library,
                            oracle,
                        }
                    }
                }
            }
        }
    };
    Ok(LawReport {
        id: law.id,
        spec,
        expectation: law.expectation,
        instances: scan.total,
        verdict,
    })
}
