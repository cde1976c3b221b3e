//! Closure and interior operators tabulated over a finite lattice carrier,
//! and the topologies they induce.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::LatticeSpec;
use crate::scalar::Scalar;
use crate::set::FpSoftSet;
use crate::topology::FpSoftTopology;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorAxiom {
    /// `c(F_∅) = F_∅`
    C1,
    /// `F ⊆ c(F)`
    C2,
    /// `c(F ∪ G) = c(F) ∪ c(G)`
    C3,
    /// `c(c(F)) = c(F)`
    C4,
    /// `i(F_Ẽ) = F_Ẽ`
    I1,
    /// `i(F) ⊆ F`
    I2,
    /// `i(F ∩ G) = i(F) ∩ i(G)`
    I3,
    /// `i(i(F)) = i(F)`
    I4,
}

impl fmt::Display for OperatorAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OperatorAxiom::C1 => "c1",
            OperatorAxiom::C2 => "c2",
            OperatorAxiom::C3 => "c3",
            OperatorAxiom::C4 => "c4",
            OperatorAxiom::I1 => "i1",
            OperatorAxiom::I2 => "i2",
            OperatorAxiom::I3 => "i3",
            OperatorAxiom::I4 => "i4",
        };
        write!(f, "({s})")
    }
}

/// First failing axiom with the lattice indices of the offending sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorViolation {
    pub axiom: OperatorAxiom,
    pub witnesses: Vec<usize>,
}

impl fmt::Display for OperatorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.witnesses.iter().map(|w| format!("#{w}")).collect();
        write!(f, "{} fails at lattice sets {}", self.axiom, ws.join(", "))
    }
}

/// A total map on the lattice carrier, stored by canonical index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorTable {
    spec: LatticeSpec,
    table: Vec<usize>,
}

impl OperatorTable {
    pub fn from_indices(spec: LatticeSpec, table: Vec<usize>) -> Result<Self> {
        let n = spec.len();
        if table.len() != n {
            return Err(Error::InvalidMap(format!(
                "operator table has {} entries, carrier has {n}",
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&j| j >= n) {
            return Err(Error::InvalidMap(format!("operator output #{bad} outside the carrier")));
        }
        Ok(OperatorTable { spec, table })
    }

    /// Tabulates `f` on every lattice set. Outputs must stay on the lattice.
    pub fn from_fn<T: Scalar>(spec: LatticeSpec, f: impl Fn(&FpSoftSet<T>) -> FpSoftSet<T>) -> Result<Self> {
        let table = spec
            .sets::<T>()
            .map(|s| spec.index_of(&f(&s)))
            .collect::<Result<Vec<_>>>()?;
        Ok(OperatorTable { spec, table })
    }

    pub fn identity(spec: LatticeSpec) -> Self {
        let table = (0..spec.len()).collect();
        OperatorTable { spec, table }
    }

    /// The closure operator of a topology over the carrier's context.
    pub fn closure_of<T: Scalar>(spec: LatticeSpec, topology: &FpSoftTopology<T>) -> Result<Self> {
        spec.context().ensure_same(topology.context())?;
        let sets: Vec<FpSoftSet<T>> = spec.sets().collect();
        let table = sets
            .iter()
            .map(|s| spec.index_of(&topology.closure(s)?))
            .collect::<Result<_>>()?;
        Ok(OperatorTable { spec, table })
    }

    pub fn interior_of<T: Scalar>(spec: LatticeSpec, topology: &FpSoftTopology<T>) -> Result<Self> {
        spec.context().ensure_same(topology.context())?;
        let sets: Vec<FpSoftSet<T>> = spec.sets().collect();
        let table = sets
            .iter()
            .map(|s| spec.index_of(&topology.interior(s)?))
            .collect::<Result<_>>()?;
        Ok(OperatorTable { spec, table })
    }

    pub fn spec(&self) -> &LatticeSpec {
        &self.spec
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply_index(&self, index: usize) -> usize {
        self.table[index]
    }

    pub fn apply<T: Scalar>(&self, set: &FpSoftSet<T>) -> Result<FpSoftSet<T>> {
        Ok(self.spec.set_at(self.table[self.spec.index_of(set)?]))
    }

    /// Checks (c1)–(c4), reporting the first failure.
    pub fn check_closure_axioms<T: Scalar>(&self) -> std::result::Result<(), OperatorViolation> {
        self.check::<T>(true)
    }

    /// Checks (i1)–(i4), reporting the first failure.
    pub fn check_interior_axioms<T: Scalar>(&self) -> std::result::Result<(), OperatorViolation> {
        self.check::<T>(false)
    }

    fn check<T: Scalar>(&self, closure: bool) -> std::result::Result<(), OperatorViolation> {
        use OperatorAxiom::*;
        let (a1, a2, a3, a4) = if closure { (C1, C2, C3, C4) } else { (I1, I2, I3, I4) };
        let fail = |axiom, witnesses| Err(OperatorViolation { axiom, witnesses });
        let sets: Vec<FpSoftSet<T>> = self.spec.sets().collect();
        let ctx = self.spec.context();
        let anchor: FpSoftSet<T> = if closure {
            FpSoftSet::empty(ctx)
        } else {
            FpSoftSet::universal(ctx)
        };
        let anchor_index = self.spec.index_of(&anchor).expect("anchor is on the lattice");
        if self.table[anchor_index] != anchor_index {
            return fail(a1, vec![anchor_index]);
        }
        for (i, s) in sets.iter().enumerate() {
            let image = &sets[self.table[i]];
            let ok = if closure {
                s.is_subset(image)
            } else {
                image.is_subset(s)
            };
            if !ok.expect("shared context") {
                return fail(a2, vec![i]);
            }
        }
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                let combined = if closure {
                    sets[i].union(&sets[j])
                } else {
                    sets[i].intersection(&sets[j])
                }
                .expect("shared context");
                let (ci, cj) = (&sets[self.table[i]], &sets[self.table[j]]);
                let rhs = if closure { ci.union(cj) } else { ci.intersection(cj) }.expect("shared context");
                let lhs = self.table[self.spec.index_of(&combined).expect("lattice is closed")];
                if sets[lhs] != rhs {
                    return fail(a3, vec![i, j]);
                }
            }
        }
        for i in 0..sets.len() {
            if self.table[self.table[i]] != self.table[i] {
                return fail(a4, vec![i]);
            }
        }
        Ok(())
    }
}

/// `τ = {F^c : c(F) = F}`, validated, with `closure(τ, F) = c(F)` verified on
/// every lattice set.
pub fn induce_from_closure_operator<T: Scalar>(c: &OperatorTable) -> Result<FpSoftTopology<T>> {
    c.check_closure_axioms::<T>().map_err(Error::OperatorAxiom)?;
    let spec = c.spec();
    let sets: Vec<FpSoftSet<T>> = spec.sets().collect();
    let opens: Vec<FpSoftSet<T>> = sets
        .iter()
        .enumerate()
        .filter(|&(i, _)| c.table[i] == i)
        .map(|(_, s)| s.complement())
        .collect();
    let topology = FpSoftTopology::validate(spec.context(), &opens)?;
    for (i, s) in sets.iter().enumerate() {
        if spec.index_of(&topology.closure(s)?)? != c.table[i] {
            return Err(Error::OperatorMismatch(i));
        }
    }
    Ok(topology)
}

/// `τ = {F : i(F) = F}`, validated, with `interior(τ, F) = i(F)` verified.
pub fn induce_from_interior_operator<T: Scalar>(i: &OperatorTable) -> Result<FpSoftTopology<T>> {
    i.check_interior_axioms::<T>().map_err(Error::OperatorAxiom)?;
    let spec = i.spec();
    let sets: Vec<FpSoftSet<T>> = spec.sets().collect();
    let opens: Vec<FpSoftSet<T>> = sets
        .iter()
        .enumerate()
        .filter(|&(k, _)| i.table[k] == k)
        .map(|(_, s)| s.clone())
        .collect();
    let topology = FpSoftTopology::validate(spec.context(), &opens)?;
    for (k, s) in sets.iter().enumerate() {
        if spec.index_of(&topology.interior(s)?)? != i.table[k] {
            return Err(Error::OperatorMismatch(k));
        }
    }
    Ok(topology)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Q;

    fn spec() -> LatticeSpec {
        LatticeSpec::numbered(1, 1, 1).unwrap()
    }

    #[test]
    fn identity_induces_discrete() {
        let t: FpSoftTopology<Q> = induce_from_closure_operator(&OperatorTable::identity(spec())).unwrap();
        assert_eq!(t.len(), 4);
        let t: FpSoftTopology<Q> = induce_from_interior_operator(&OperatorTable::identity(spec())).unwrap();
        assert_eq!(t.len(), 4);
    }

    #[test]
    fn trivial_operators_induce_indiscrete() {
        let ctx = spec().context().clone();
        let c = OperatorTable::from_fn::<Q>(spec(), |s| {
            if s.is_empty() {
                s.clone()
            } else {
                FpSoftSet::universal(&ctx)
            }
        })
        .unwrap();
        let t: FpSoftTopology<Q> = induce_from_closure_operator(&c).unwrap();
        assert_eq!(t, FpSoftTopology::indiscrete(&ctx));
        let i = OperatorTable::from_fn::<Q>(spec(), |s| {
            if s.is_universal() {
                s.clone()
            } else {
                FpSoftSet::empty(&ctx)
            }
        })
        .unwrap();
        let t: FpSoftTopology<Q> = induce_from_interior_operator(&i).unwrap();
        assert_eq!(t, FpSoftTopology::indiscrete(&ctx));
    }

    #[test]
    fn axiom_failures_carry_witnesses() {
        let ctx = spec().context().clone();
        let everything = OperatorTable::from_fn::<Q>(spec(), |_| FpSoftSet::universal(&ctx)).unwrap();
        assert_eq!(
            everything.check_closure_axioms::<Q>(),
            Err(OperatorViolation {
                axiom: OperatorAxiom::C1,
                witnesses: vec![0]
            })
        );
        let nothing = OperatorTable::from_fn::<Q>(spec(), |_| FpSoftSet::empty(&ctx)).unwrap();
        assert_eq!(
            nothing.check_closure_axioms::<Q>(),
            Err(OperatorViolation {
                axiom: OperatorAxiom::C2,
                witnesses: vec![1]
            })
        );
        assert!(matches!(
            induce_from_interior_operator::<Q>(&everything),
            Err(Error::OperatorAxiom(OperatorViolation {
                axiom: OperatorAxiom::I2,
                ..
            }))
        ));
        // at q=2, |X|=1 lift (1/2,X) to (1,X) and fix everything else:
        // extensive and idempotent but c((0,X) ∪ (1/2,∅)) ≠ (0,X) ∪ (1/2,∅)
        let fine = LatticeSpec::numbered(1, 1, 2).unwrap();
        let lifted = OperatorTable::from_indices(fine, vec![0, 1, 2, 5, 4, 5]).unwrap();
        assert_eq!(
            lifted.check_closure_axioms::<Q>(),
            Err(OperatorViolation {
                axiom: OperatorAxiom::C3,
                witnesses: vec![1, 2]
            })
        );
    }

    #[test]
    fn rejects_malformed_tables() {
        assert!(OperatorTable::from_indices(spec(), vec![0, 1]).is_err());
        assert!(OperatorTable::from_indices(spec(), vec![0, 1, 2, 7]).is_err());
    }
}
