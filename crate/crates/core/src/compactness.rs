//! Covers, subcovers, the finite intersection property and compactness of
//! finitely presented spaces.

use itertools::Itertools;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::set::FpSoftSet;
use crate::topology::FpSoftTopology;

/// Largest family scanned subset by subset.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverFamily<T: Scalar> {
    context: Context,
    members: Vec<FpSoftSet<T>>,
    target: FpSoftSet<T>,
}

impl<T: Scalar> CoverFamily<T> {
    /// `target` defaults to `F_Ẽ`.
    pub fn new(context: &Context, members: Vec<FpSoftSet<T>>, target: Option<FpSoftSet<T>>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for m in &members {
            context.ensure_same(m.context())?;
        }
        let target = match target {
            Some(t) => {
                context.ensure_same(t.context())?;
                t
            }
            None => FpSoftSet::universal(context),
        };
        Ok(CoverFamily {
            context: context.clone(),
            members,
            target,
        })
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn members(&self) -> &[FpSoftSet<T>] {
        &self.members
    }

    pub fn target(&self) -> &FpSoftSet<T> {
        &self.target
    }

    /// `target ⊆ ∪ members`.
    pub fn is_cover(&self) -> bool {
        self.covered_by(&(0..self.members.len()).collect::<Vec<_>>())
    }

    fn covered_by(&self, picks: &[usize]) -> bool {
        let union =
            FpSoftSet::union_family(picks.iter().map(|&i| &self.members[i])).expect("nonempty family over one context");
        self.target.is_subset(&union).expect("shared context")
    }

    /// Positions of the first occurrence of each distinct member.
    fn distinct(&self) -> Vec<usize> {
        let mut keep: Vec<usize> = Vec::new();
        for (i, m) in self.members.iter().enumerate() {
            if !keep.iter().any(|&k| &self.members[k] == m) {
                keep.push(i);
            }
        }
        keep
    }

    /// A minimum-cardinality covering subfamily, as member positions.
    ///
    /// Exact: subfamilies are tried by increasing size, and within a size in
    /// lexicographic order of member positions, so the first hit is also the
    /// tie-break winner. Duplicates keep their first occurrence. `None` means
    /// the members do not cover the target.
    pub fn minimal_subcover(&self) -> Result<Option<Vec<usize>>> {
        let distinct = self.distinct();
        if distinct.len() > DEFAULT_EXHAUSTIVE_CAP {
            return Err(Error::FamilyTooLarge {
                size: distinct.len(),
                cap: DEFAULT_EXHAUSTIVE_CAP,
            });
        }
        if !self.covered_by(&distinct) {
            return Ok(None);
        }
        for k in 1..=distinct.len() {
            if let Some(found) = distinct.iter().copied().combinations(k).find(|c| self.covered_by(c)) {
                return Ok(Some(found));
            }
        }
        unreachable!("the full distinct family covers")
    }

    /// Approximate fast path: repeatedly adds the member that removes the
    /// most remaining deficit, ties to the earliest. Not guaranteed minimal.
    pub fn greedy_subcover(&self) -> Option<Vec<usize>> {
        if !self.is_cover() {
            return None;
        }
        let distinct = self.distinct();
        let mut picks: Vec<usize> = Vec::new();
        while picks.is_empty() || !self.covered_by(&picks) {
            let best = distinct
                .iter()
                .copied()
                .filter(|i| !picks.contains(i))
                .min_by_key(|&i| {
                    let mut trial = picks.clone();
                    trial.push(i);
                    self.deficit(&trial)
                })
                .expect("a cover always has an unpicked useful member");
            picks.push(best);
        }
        picks.sort_unstable();
        Some(picks)
    }

    /// Parameters whose grade still falls short plus uncovered elements.
    fn deficit(&self, picks: &[usize]) -> usize {
        let union = FpSoftSet::union_family(picks.iter().map(|&i| &self.members[i])).expect("nonempty");
        self.target
            .cells()
            .zip(union.cells())
            .map(|((tg, ta), (ug, ua))| usize::from(tg > ug) + ua.complement_in(ta).len())
            .sum()
    }
}

/// Every nonempty subfamily has intersection different from `F_∅`, checked
/// over all `2^n - 1` subfamilies.
pub fn has_fip<T: Scalar>(family: &[FpSoftSet<T>]) -> Result<bool> {
    if family.len() > DEFAULT_EXHAUSTIVE_CAP {
        return Err(Error::FamilyTooLarge {
            size: family.len(),
            cap: DEFAULT_EXHAUSTIVE_CAP,
        });
    }
    let Some(first) = family.first() else {
        return Ok(true);
    };
    for m in family {
        first.context().ensure_same(m.context())?;
    }
    Ok(subfamily_emptiness(family).iter().skip(1).all(|empty| !empty))
}

/// `empty[mask]` is whether the intersection of the members selected by
/// `mask` is `F_∅`. Entry 0 (the empty selection) is `false`.
fn subfamily_emptiness<T: Scalar>(family: &[FpSoftSet<T>]) -> Vec<bool> {
    fn walk<T: Scalar>(family: &[FpSoftSet<T>], next: usize, mask: usize, acc: &FpSoftSet<T>, out: &mut [bool]) {
        for i in next..family.len() {
            let inter = acc.intersection(&family[i]).expect("shared context");
            let m = mask | 1 << i;
            out[m] = inter.is_empty();
            walk(family, i + 1, m, &inter, out);
        }
    }
    let mut out = vec![false; 1 << family.len()];
    if let Some(first) = family.first() {
        let top = FpSoftSet::universal(first.context());
        walk(family, 0, 0, &top, &mut out);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactnessReport {
    pub compact: bool,
    pub fip_equivalence_verified: bool,
    pub justification: String,
    /// Number of open covers of `F_Ẽ` drawn from `τ`, when enumerated.
    pub open_covers: Option<usize>,
}

/// Largest `τ` whose open covers are enumerated as a double check.
pub const COVER_ENUMERATION_CAP: usize = 12;

/// Compactness of an explicitly finite space. Every open cover drawn from a
/// finite `τ` is itself finite, so the space is compact. The finite form of
/// the intersection-property theorem is then verified over all subfamilies
/// of the closed sets: a subfamily with the FIP has nonempty intersection.
pub fn check_compactness<T: Scalar>(topology: &FpSoftTopology<T>) -> Result<CompactnessReport> {
    let n = topology.len();
    if n > DEFAULT_EXHAUSTIVE_CAP {
        return Err(Error::FamilyTooLarge {
            size: n,
            cap: DEFAULT_EXHAUSTIVE_CAP,
        });
    }
    let closed = topology.closed_family();
    let empty = subfamily_emptiness(&closed);
    // fip[mask]: every nonempty sub-selection of mask has nonempty intersection
    let mut fip = vec![true; 1 << n];
    let mut verified = true;
    for mask in 1..1usize << n {
        fip[mask] = !empty[mask] && (0..n).filter(|b| mask >> b & 1 == 1).all(|b| fip[mask ^ 1 << b]);
        if fip[mask] && empty[mask] {
            verified = false;
        }
    }

    let open_covers = (n <= COVER_ENUMERATION_CAP).then(|| {
        let ctx = topology.context();
        let universal = FpSoftSet::universal(ctx);
        let opens = topology.opens();
        (1..1usize << n)
            .filter(|mask| {
                let picked = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| &opens[b]);
                let union = FpSoftSet::union_family(picked).expect("nonempty");
                universal.is_subset(&union).expect("shared context")
            })
            .count()
    });

    Ok(CompactnessReport {
        compact: true,
        fip_equivalence_verified: verified,
        justification: format!("tau has {n} open sets, so every open cover is finite and is its own finite subcover"),
        open_covers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::grade::Grade;
    use crate::lattice::LatticeSpec;
    use crate::set::Special;

    #[test]
    fn cover_examples() {
        let ctx = example_context();
        let uni = FpSoftSet::<Q>::universal(&ctx);
        assert!(CoverFamily::new(&ctx, vec![uni.clone()], None).unwrap().is_cover());
        let [a1, a2, a3, _] = example_sets(&ctx);
        let c = CoverFamily::new(&ctx, vec![a1, a2.clone(), a3.clone()], None).unwrap();
        assert!(!c.is_cover());
        assert_eq!(c.minimal_subcover().unwrap(), None);
        assert_eq!(c.greedy_subcover(), None);
        let a4 = corrected_a4(&ctx);
        let c = CoverFamily::new(&ctx, vec![a4.clone(), uni.clone()], None).unwrap();
        assert!(c.is_cover());
        assert_eq!(c.minimal_subcover().unwrap(), Some(vec![1]));
        assert!(CoverFamily::<Q>::new(&ctx, vec![], None).is_err());
    }

    #[test]
    fn subcover_tie_breaks() {
        let ctx = example_context();
        let uni = FpSoftSet::<Q>::universal(&ctx);
        let c = CoverFamily::new(&ctx, vec![uni.clone(), uni], None).unwrap();
        assert_eq!(c.minimal_subcover().unwrap(), Some(vec![0]));
        let [_, a2, a3, _] = example_sets(&ctx);
        let a4 = corrected_a4(&ctx);
        let c = CoverFamily::new(&ctx, vec![a2, a3, a4.clone()], Some(a4)).unwrap();
        assert_eq!(c.minimal_subcover().unwrap(), Some(vec![2]));
        assert_eq!(c.greedy_subcover(), Some(vec![2]));
    }

    #[test]
    fn subcover_soundness_is_exhaustive() {
        // every sub-list of a 12-element lattice slice, target F_Ẽ
        let spec = LatticeSpec::numbered(1, 2, 1).unwrap();
        let sets: Vec<FpSoftSet<Q>> = spec.sets().collect();
        let pool: Vec<_> = sets.iter().skip(4).take(12).cloned().collect();
        assert_eq!(pool.len(), 12);
        for mask in 1..1u32 << 12 {
            let members: Vec<_> = (0..12)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| pool[b].clone())
                .collect();
            let c = CoverFamily::new(spec.context(), members.clone(), None).unwrap();
            let Some(best) = c.minimal_subcover().unwrap() else {
                assert!(!c.is_cover());
                continue;
            };
            let sub =
                CoverFamily::new(spec.context(), best.iter().map(|&i| members[i].clone()).collect(), None).unwrap();
            assert!(sub.is_cover());
            for smaller in (0..members.len()).combinations(best.len() - 1) {
                if smaller.is_empty() {
                    continue;
                }
                let s = CoverFamily::new(
                    spec.context(),
                    smaller.iter().map(|&i| members[i].clone()).collect(),
                    None,
                )
                .unwrap();
                assert!(!s.is_cover());
            }
            let greedy = c.greedy_subcover().unwrap();
            assert!(greedy.len() >= best.len());
        }
    }

    #[test]
    fn fip_examples() {
        let ctx = example_context();
        let [a1, a2, ..] = example_sets(&ctx);
        let fam = [a1.complement(), a2.complement()];
        assert!(has_fip(&fam).unwrap());
        assert_eq!(
            fam[0].intersection(&fam[1]).unwrap(),
            set(&ctx, &[(8, &["x4"]), (5, &["x2", "x3"]), (6, &["x3", "x4"])])
        );
        let small = Context::numbered(1, 1).unwrap();
        let half =
            FpSoftSet::<Q>::special(&small, Special::AlphaUniversal(Grade::lattice(1, 2).unwrap(), vec![0])).unwrap();
        assert!(has_fip(&[half.clone(), half.complement()]).unwrap());
        assert!(!has_fip(&[FpSoftSet::<Q>::empty(&ctx)]).unwrap());
        let big = vec![FpSoftSet::<Q>::universal(&ctx); 21];
        assert!(matches!(has_fip(&big), Err(Error::FamilyTooLarge { .. })));
    }

    #[test]
    fn fip_matches_total_intersection() {
        let spec = LatticeSpec::numbered(1, 1, 1).unwrap();
        let sets: Vec<FpSoftSet<Q>> = spec.sets().collect();
        for mask in 1..1u32 << sets.len() {
            let fam: Vec<_> = (0..sets.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| sets[b].clone())
                .collect();
            let total = FpSoftSet::intersect_family(&fam).unwrap();
            assert_eq!(has_fip(&fam).unwrap(), !total.is_empty());
        }
    }

    #[test]
    fn compactness_reports() {
        let ctx = example_context();
        let r = check_compactness(&FpSoftTopology::<Q>::indiscrete(&ctx)).unwrap();
        assert!(r.compact && r.fip_equivalence_verified);
        assert_eq!(r.open_covers, Some(2));
        let t = FpSoftTopology::validate(&ctx, &corrected_opens(&ctx)).unwrap();
        let r = check_compactness(&t).unwrap();
        assert!(r.compact && r.fip_equivalence_verified);
        assert_eq!(r.open_covers, Some(32));
    }
}
