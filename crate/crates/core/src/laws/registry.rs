//! Every law, one entry per proposition or theorem part. Laws stated with
//! a hypothesis come with a hypothesis-free variant that is expected to
//! fail, confirming the hypothesis is needed.

use std::sync::OnceLock;

use super::library::LibraryModel;
use super::model::Model;
use super::{Domain, Env, Expectation, Law, LawSpec, Maps, Shapes, Slot};
use crate::oracle::OracleModel;

use Slot::*;

macro_rules! law {
    ($id:literal, $expect:ident, $spec:expr, $domain:expr, $statement:literal, |$e:ident| $body:expr) => {{
        fn check<M: Model>($e: &Env<'_, M>) -> bool {
            $body
        }
        Law {
            id: $id,
            statement: $statement,
            expectation: Expectation::$expect,
            default_spec: $spec,
            domain: $domain,
            library: check::<LibraryModel>,
            oracle: check::<OracleModel>,
        }
    }};
}

const ALGEBRA: LawSpec = LawSpec::new(2, 2, 2);
const MAPPING: LawSpec = LawSpec::new(2, 2, 2);
const TOPOLOGY: LawSpec = LawSpec::new(1, 1, 1);
const ENRICHED: LawSpec = LawSpec::new(1, 1, 2);

const fn sets(slots: &'static [Slot]) -> Domain {
    Domain {
        shapes: Shapes::Single,
        maps: Maps::None,
        slots,
    }
}

const fn mapped(slots: &'static [Slot]) -> Domain {
    Domain {
        shapes: Shapes::UpTo,
        maps: Maps::All,
        slots,
    }
}

const fn spaces(slots: &'static [Slot]) -> Domain {
    Domain {
        shapes: Shapes::Single,
        maps: Maps::None,
        slots,
    }
}

const fn continuous_maps(slots: &'static [Slot]) -> Domain {
    Domain {
        shapes: Shapes::Paired,
        maps: Maps::All,
        slots,
    }
}

/// `a ⇒ b`
fn implies(a: bool, b: impl FnOnce() -> bool) -> bool {
    !a || b()
}

fn complements<M: Model>(m: &M, family: &[&M::Set]) -> Vec<M::Set> {
    family.iter().map(|s| m.complement(s)).collect()
}

fn refs<T>(v: &[T]) -> Vec<&T> {
    v.iter().collect()
}

/// The base criterion's right-hand side: for every lattice point and every
/// open Q-neighbourhood `A` of it, some base member `B` has `pt q B ⊆ A`.
fn base_criterion<M: Model>(e: &Env<'_, M>) -> bool {
    let m = e.m;
    let t = e.top(0);
    let base = e.base();
    let opens = m.opens(t);
    e.all_points().all(|pt| {
        opens
            .iter()
            .filter(|a| m.is_qnbd(t, a, pt))
            .all(|a| base.iter().any(|b| m.point_qcoincident(pt, b) && m.subset(b, a)))
    })
}

/// Whether the constant maps into `t2` are forced continuous because `t1`
/// holds every uniform set.
fn saturated<M: Model>(e: &Env<'_, M>) -> bool {
    let m = e.m;
    let t = e.top(0);
    (0..=m.q()).all(|k| m.is_open(t, &m.uniform(e.source(), k, true)) && m.is_open(t, &m.uniform(e.source(), k, false)))
}

pub fn registry() -> &'static [Law] {
    static REGISTRY: OnceLock<Vec<Law>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

fn build() -> Vec<Law> {
    vec![
        // operations on sets
        law!(
            "p7-1",
            Holds,
            ALGEBRA,
            sets(&[Set, Set]),
            "(A ∪ B)^c = A^c ∩ B^c",
            |e| {
                let (m, a, b) = (e.m, e.set(0), e.set(1));
                m.equal(
                    &m.complement(&m.union(a, b)),
                    &m.intersection(&m.complement(a), &m.complement(b)),
                )
            }
        ),
        law!(
            "p7-2",
            Holds,
            ALGEBRA,
            sets(&[Set, Set]),
            "(A ∩ B)^c = A^c ∪ B^c",
            |e| {
                let (m, a, b) = (e.m, e.set(0), e.set(1));
                m.equal(
                    &m.complement(&m.intersection(a, b)),
                    &m.union(&m.complement(a), &m.complement(b)),
                )
            }
        ),
        law!(
            "p7-3",
            Holds,
            ALGEBRA,
            sets(&[Set]),
            "A ∩ A = A and A ∪ A = A",
            |e| {
                let (m, a) = (e.m, e.set(0));
                m.equal(&m.intersection(a, a), a) && m.equal(&m.union(a, a), a)
            }
        ),
        law!(
            "p7-4",
            Holds,
            ALGEBRA,
            sets(&[Set]),
            "A ∩ F_∅ = F_∅ and A ∩ F_Ẽ = A",
            |e| {
                let (m, a, s) = (e.m, e.set(0), e.source());
                let empty = m.empty(s);
                m.equal(&m.intersection(a, &empty), &empty) && m.equal(&m.intersection(a, &m.universal(s)), a)
            }
        ),
        law!(
            "p7-5",
            Holds,
            ALGEBRA,
            sets(&[Set, Set]),
            "A ∩ B = B ∩ A and A ∪ B = B ∪ A",
            |e| {
                let (m, a, b) = (e.m, e.set(0), e.set(1));
                m.equal(&m.intersection(a, b), &m.intersection(b, a)) && m.equal(&m.union(a, b), &m.union(b, a))
            }
        ),
        law!(
            "p7-6",
            Holds,
            ALGEBRA,
            sets(&[Set, Set, Set]),
            "∩ and ∪ are associative",
            |e| {
                let (m, a, b, c) = (e.m, e.set(0), e.set(1), e.set(2));
                m.equal(
                    &m.intersection(a, &m.intersection(b, c)),
                    &m.intersection(&m.intersection(a, b), c),
                ) && m.equal(&m.union(a, &m.union(b, c)), &m.union(&m.union(a, b), c))
            }
        ),
        law!(
            "p7-7",
            Holds,
            ALGEBRA,
            sets(&[Set]),
            "A ∪ F_∅ = A and A ∪ F_Ẽ = F_Ẽ",
            |e| {
                let (m, a, s) = (e.m, e.set(0), e.source());
                let full = m.universal(s);
                m.equal(&m.union(a, &m.empty(s)), a) && m.equal(&m.union(a, &full), &full)
            }
        ),
        law!(
            "de-morgan-family",
            Holds,
            ALGEBRA,
            sets(&[Family(3)]),
            "(∪ Aᵢ)^c = ∩ Aᵢ^c and (∩ Aᵢ)^c = ∪ Aᵢ^c",
            |e| {
                let (m, f) = (e.m, e.family(0));
                let c = complements(m, &f);
                m.equal(&m.complement(&m.union_all(&f)), &m.intersection_all(&refs(&c)))
                    && m.equal(&m.complement(&m.intersection_all(&f)), &m.union_all(&refs(&c)))
            }
        ),
        law!(
            "complement-involution",
            Holds,
            ALGEBRA,
            sets(&[Set]),
            "(A^c)^c = A",
            |e| {
                let (m, a) = (e.m, e.set(0));
                m.equal(&m.complement(&m.complement(a)), a)
            }
        ),
        law!(
            "equal-mutual-subset",
            Holds,
            ALGEBRA,
            sets(&[Set, Set]),
            "A = B iff A ⊆ B and B ⊆ A",
            |e| {
                let (m, a, b) = (e.m, e.set(0), e.set(1));
                m.equal(a, b) == (m.subset(a, b) && m.subset(b, a))
            }
        ),
        law!(
            "normalize-idempotent",
            Holds,
            ALGEBRA,
            sets(&[Set]),
            "normalize is idempotent and yields a normalized set",
            |e| {
                let (m, a) = (e.m, e.set(0));
                let n = m.normalize(a);
                m.is_normalized(&n) && m.equal(&m.normalize(&n), &n)
            }
        ),
        law!(
            "point-decomposition",
            Holds,
            ALGEBRA,
            sets(&[Set]),
            "a nonempty normalized set is the union of points belonging to it",
            |e| {
                let (m, a) = (e.m, e.set(0));
                implies(!m.is_empty(a) && m.is_normalized(a), || {
                    let points = m.generators(a);
                    let parts: Vec<M::Set> = points.iter().map(|p| m.point_set(p)).collect();
                    points.iter().all(|p| m.belongs(p, a)) && m.equal(&m.union_all(&refs(&parts)), a)
                })
            }
        ),
        law!(
            "pc-1",
            Holds,
            ALGEBRA,
            sets(&[Set, Set]),
            "A ⊆ B iff A q̄ B^c",
            |e| {
                let (m, a, b) = (e.m, e.set(0), e.set(1));
                m.subset(a, b) == !m.qcoincident(a, &m.complement(b))
            }
        ),
        law!(
            "pc-2",
            Holds,
            ALGEBRA,
            sets(&[Set, Set]),
            "A q B implies A ∩ B ≠ F_∅",
            |e| {
                let (m, a, b) = (e.m, e.set(0), e.set(1));
                implies(m.qcoincident(a, b), || !m.is_empty(&m.intersection(a, b)))
            }
        ),
        law!(
            "pc-2-converse",
            Counterexample,
            ALGEBRA,
            sets(&[Set, Set]),
            "A ∩ B ≠ F_∅ implies A q B",
            |e| {
                let (m, a, b) = (e.m, e.set(0), e.set(1));
                implies(!m.is_empty(&m.intersection(a, b)), || m.qcoincident(a, b))
            }
        ),
        law!("pc-3", Holds, ALGEBRA, sets(&[Set]), "A q̄ A^c", |e| {
            let (m, a) = (e.m, e.set(0));
            !m.qcoincident(a, &m.complement(a))
        }),
        law!(
            "pc-4",
            Holds,
            ALGEBRA,
            sets(&[Set, Set]),
            "for nonempty normalized A: A q B iff some point of A is quasi-coincident with B",
            |e| {
                let (m, a, b) = (e.m, e.set(0), e.set(1));
                implies(!m.is_empty(a) && m.is_normalized(a), || {
                    m.qcoincident(a, b) == m.generators(a).iter().any(|p| m.point_qcoincident(p, b))
                })
            }
        ),
        law!(
            "pc-4-unnormalized",
            Counterexample,
            ALGEBRA,
            sets(&[Set, Set]),
            "A q B iff some lattice point belonging to A is quasi-coincident with B",
            |e| {
                let (m, a, b) = (e.m, e.set(0), e.set(1));
                m.qcoincident(a, b) == e.all_points().any(|p| m.belongs(p, a) && m.point_qcoincident(p, b))
            }
        ),
        law!(
            "pc-5",
            Holds,
            ALGEBRA,
            sets(&[Point, Set]),
            "pt ∈ A^c iff pt q̄ A",
            |e| {
                let (m, p, a) = (e.m, e.point(0), e.set(0));
                m.belongs(p, &m.complement(a)) == !m.point_qcoincident(p, a)
            }
        ),
        law!(
            "pc-6",
            Holds,
            ALGEBRA,
            sets(&[Set, Set, Point]),
            "A ⊆ B and pt q A imply pt q B",
            |e| {
                let (m, a, b, p) = (e.m, e.set(0), e.set(1), e.point(0));
                implies(m.subset(a, b) && m.point_qcoincident(p, a), || {
                    m.point_qcoincident(p, b)
                })
            }
        ),
        law!(
            "q-union-family",
            Holds,
            ALGEBRA,
            sets(&[Family(3)]),
            "for every lattice point: pt q ∪ Aᵢ iff pt q Aᵢ for some i",
            |e| {
                let (m, f) = (e.m, e.family(0));
                let u = m.union_all(&f);
                e.all_points()
                    .all(|p| m.point_qcoincident(p, &u) == f.iter().any(|a| m.point_qcoincident(p, a)))
            }
        ),
        law!(
            "cover-duality",
            Holds,
            ALGEBRA,
            sets(&[Family(3)]),
            "C covers F_Ẽ iff ∩ of the complements is F_∅",
            |e| {
                let (m, f) = (e.m, e.family(0));
                m.covers(&f) == m.is_empty(&m.intersection_all(&refs(&complements(m, &f))))
            }
        ),
        // mappings
        law!(
            "fo-1",
            Holds,
            MAPPING,
            mapped(&[Set, Set]),
            "A ⊆ B implies f(A) ⊆ f(B)",
            |e| {
                let (m, f, a, b) = (e.m, e.map(), e.set(0), e.set(1));
                implies(m.subset(a, b), || m.subset(&m.image(&f, a), &m.image(&f, b)))
            }
        ),
        law!(
            "fo-2",
            Holds,
            MAPPING,
            mapped(&[TargetSet, TargetSet]),
            "G ⊆ H implies f⁻¹(G) ⊆ f⁻¹(H)",
            |e| {
                let (m, f, g, h) = (e.m, e.map(), e.target_set(0), e.target_set(1));
                implies(m.subset(g, h), || m.subset(&m.preimage(&f, g), &m.preimage(&f, h)))
            }
        ),
        law!("fo-3", Holds, MAPPING, mapped(&[Set]), "A ⊆ f⁻¹(f(A))", |e| {
            let (m, f, a) = (e.m, e.map(), e.set(0));
            m.subset(a, &m.preimage(&f, &m.image(&f, a)))
        }),
        law!(
            "fo-3-injective",
            Holds,
            MAPPING,
            mapped(&[Set]),
            "f injective implies A = f⁻¹(f(A))",
            |e| {
                let (m, f, a) = (e.m, e.map(), e.set(0));
                implies(m.injective(&f), || m.equal(a, &m.preimage(&f, &m.image(&f, a))))
            }
        ),
        law!(
            "fo-3-equality-without-injectivity",
            Counterexample,
            MAPPING,
            mapped(&[Set]),
            "A = f⁻¹(f(A))",
            |e| {
                let (m, f, a) = (e.m, e.map(), e.set(0));
                m.equal(a, &m.preimage(&f, &m.image(&f, a)))
            }
        ),
        law!(
            "fo-4",
            Holds,
            MAPPING,
            mapped(&[TargetSet]),
            "f(f⁻¹(G)) ⊆ G",
            |e| {
                let (m, f, g) = (e.m, e.map(), e.target_set(0));
                m.subset(&m.image(&f, &m.preimage(&f, g)), g)
            }
        ),
        law!(
            "fo-4-surjective",
            Holds,
            MAPPING,
            mapped(&[TargetSet]),
            "f surjective implies f(f⁻¹(G)) = G",
            |e| {
                let (m, f, g) = (e.m, e.map(), e.target_set(0));
                implies(m.surjective(&f), || m.equal(&m.image(&f, &m.preimage(&f, g)), g))
            }
        ),
        law!(
            "fo-4-equality-without-surjectivity",
            Counterexample,
            MAPPING,
            mapped(&[TargetSet]),
            "f(f⁻¹(G)) = G",
            |e| {
                let (m, f, g) = (e.m, e.map(), e.target_set(0));
                m.equal(&m.image(&f, &m.preimage(&f, g)), g)
            }
        ),
        law!(
            "fo-5",
            Holds,
            MAPPING,
            mapped(&[Family(2)]),
            "f(∪ Aᵢ) = ∪ f(Aᵢ)",
            |e| {
                let (m, f, fam) = (e.m, e.map(), e.family(0));
                let images: Vec<M::Set> = fam.iter().map(|a| m.image(&f, a)).collect();
                m.equal(&m.image(&f, &m.union_all(&fam)), &m.union_all(&refs(&images)))
            }
        ),
        law!(
            "fo-6",
            Holds,
            MAPPING,
            mapped(&[Family(2)]),
            "f(∩ Aᵢ) ⊆ ∩ f(Aᵢ)",
            |e| {
                let (m, f, fam) = (e.m, e.map(), e.family(0));
                let images: Vec<M::Set> = fam.iter().map(|a| m.image(&f, a)).collect();
                m.subset(
                    &m.image(&f, &m.intersection_all(&fam)),
                    &m.intersection_all(&refs(&images)),
                )
            }
        ),
        law!(
            "fo-6-injective",
            Holds,
            MAPPING,
            mapped(&[Family(2)]),
            "f injective implies f(∩ Aᵢ) = ∩ f(Aᵢ)",
            |e| {
                let (m, f, fam) = (e.m, e.map(), e.family(0));
                implies(m.injective(&f), || {
                    let images: Vec<M::Set> = fam.iter().map(|a| m.image(&f, a)).collect();
                    m.equal(
                        &m.image(&f, &m.intersection_all(&fam)),
                        &m.intersection_all(&refs(&images)),
                    )
                })
            }
        ),
        law!(
            "fo-6-equality-without-injectivity",
            Counterexample,
            MAPPING,
            mapped(&[Family(2)]),
            "f(∩ Aᵢ) = ∩ f(Aᵢ)",
            |e| {
                let (m, f, fam) = (e.m, e.map(), e.family(0));
                let images: Vec<M::Set> = fam.iter().map(|a| m.image(&f, a)).collect();
                m.equal(
                    &m.image(&f, &m.intersection_all(&fam)),
                    &m.intersection_all(&refs(&images)),
                )
            }
        ),
        law!(
            "fo-7",
            Holds,
            MAPPING,
            mapped(&[TargetFamily(2)]),
            "f⁻¹(∪ Gᵢ) = ∪ f⁻¹(Gᵢ)",
            |e| {
                let (m, f, fam) = (e.m, e.map(), e.target_family(0));
                let pre: Vec<M::Set> = fam.iter().map(|g| m.preimage(&f, g)).collect();
                m.equal(&m.preimage(&f, &m.union_all(&fam)), &m.union_all(&refs(&pre)))
            }
        ),
        law!(
            "fo-8",
            Holds,
            MAPPING,
            mapped(&[TargetFamily(2)]),
            "f⁻¹(∩ Gᵢ) = ∩ f⁻¹(Gᵢ)",
            |e| {
                let (m, f, fam) = (e.m, e.map(), e.target_family(0));
                let pre: Vec<M::Set> = fam.iter().map(|g| m.preimage(&f, g)).collect();
                m.equal(
                    &m.preimage(&f, &m.intersection_all(&fam)),
                    &m.intersection_all(&refs(&pre)),
                )
            }
        ),
        law!(
            "fo-9",
            Holds,
            MAPPING,
            mapped(&[TargetSet]),
            "f⁻¹(G)^c = f⁻¹(G^c)",
            |e| {
                let (m, f, g) = (e.m, e.map(), e.target_set(0));
                m.equal(&m.complement(&m.preimage(&f, g)), &m.preimage(&f, &m.complement(g)))
            }
        ),
        law!(
            "fo-10",
            Counterexample,
            MAPPING,
            mapped(&[Set]),
            "f(A)^c ⊆ f(A^c), as printed",
            |e| {
                let (m, f, a) = (e.m, e.map(), e.set(0));
                m.subset(&m.complement(&m.image(&f, a)), &m.image(&f, &m.complement(a)))
            }
        ),
        law!(
            "fo-10-surjective",
            Holds,
            MAPPING,
            mapped(&[Set]),
            "f surjective implies f(A)^c ⊆ f(A^c)",
            |e| {
                let (m, f, a) = (e.m, e.map(), e.set(0));
                implies(m.surjective(&f), || {
                    m.subset(&m.complement(&m.image(&f, a)), &m.image(&f, &m.complement(a)))
                })
            }
        ),
        law!(
            "fo-10-converse",
            Counterexample,
            MAPPING,
            mapped(&[Set]),
            "f(A^c) ⊆ f(A)^c",
            |e| {
                let (m, f, a) = (e.m, e.map(), e.set(0));
                m.subset(&m.image(&f, &m.complement(a)), &m.complement(&m.image(&f, a)))
            }
        ),
        law!("fo-11", Holds, MAPPING, mapped(&[]), "f⁻¹(G_K̃) = F_Ẽ", |e| {
            let (m, f) = (e.m, e.map());
            m.equal(&m.preimage(&f, &m.universal(e.target())), &m.universal(e.source()))
        }),
        law!("fo-12", Holds, MAPPING, mapped(&[]), "f⁻¹(G_∅) = F_∅", |e| {
            let (m, f) = (e.m, e.map());
            m.equal(&m.preimage(&f, &m.empty(e.target())), &m.empty(e.source()))
        }),
        law!("fo-13", Holds, MAPPING, mapped(&[]), "f(F_Ẽ) ⊆ G_K̃", |e| {
            let (m, f) = (e.m, e.map());
            m.subset(&m.image(&f, &m.universal(e.source())), &m.universal(e.target()))
        }),
        law!(
            "fo-13-surjective",
            Holds,
            MAPPING,
            mapped(&[]),
            "f surjective implies f(F_Ẽ) = G_K̃",
            |e| {
                let (m, f) = (e.m, e.map());
                implies(m.surjective(&f), || {
                    m.equal(&m.image(&f, &m.universal(e.source())), &m.universal(e.target()))
                })
            }
        ),
        law!(
            "fo-13-equality-without-surjectivity",
            Counterexample,
            MAPPING,
            mapped(&[]),
            "f(F_Ẽ) = G_K̃",
            |e| {
                let (m, f) = (e.m, e.map());
                m.equal(&m.image(&f, &m.universal(e.source())), &m.universal(e.target()))
            }
        ),
        law!("fo-14", Holds, MAPPING, mapped(&[]), "f(F_∅) = G_∅", |e| {
            let (m, f) = (e.m, e.map());
            m.equal(&m.image(&f, &m.empty(e.source())), &m.empty(e.target()))
        }),
        // topologies
        law!(
            "closed-family",
            Holds,
            TOPOLOGY,
            spaces(&[Top]),
            "the closed sets contain F_∅ and F_Ẽ and are closed under ∪ and ∩",
            |e| {
                let (m, t, s) = (e.m, e.top(0), e.source());
                let closed = m.closed_family(t);
                let has = |x: &M::Set| closed.iter().any(|c| m.equal(c, x));
                has(&m.empty(s))
                    && has(&m.universal(s))
                    && closed.iter().all(|c| m.is_closed(t, c))
                    && closed
                        .iter()
                        .all(|a| closed.iter().all(|b| has(&m.union(a, b)) && has(&m.intersection(a, b))))
            }
        ),
        law!(
            "kap-oz-1",
            Holds,
            TOPOLOGY,
            spaces(&[Top]),
            "cl(F_∅) = F_∅ and cl(F_Ẽ) = F_Ẽ",
            |e| {
                let (m, t, s) = (e.m, e.top(0), e.source());
                let (empty, full) = (m.empty(s), m.universal(s));
                m.equal(&m.closure(t, &empty), &empty) && m.equal(&m.closure(t, &full), &full)
            }
        ),
        law!("kap-oz-2", Holds, TOPOLOGY, spaces(&[Top, Set]), "A ⊆ cl(A)", |e| {
            let (m, t, a) = (e.m, e.top(0), e.set(0));
            m.subset(a, &m.closure(t, a))
        }),
        law!(
            "kap-oz-3",
            Holds,
            TOPOLOGY,
            spaces(&[Top, Set]),
            "cl(cl(A)) = cl(A)",
            |e| {
                let (m, t, a) = (e.m, e.top(0), e.set(0));
                let c = m.closure(t, a);
                m.equal(&m.closure(t, &c), &c)
            }
        ),
        law!(
            "kap-oz-4",
            Holds,
            TOPOLOGY,
            spaces(&[Top, Set, Set]),
            "A ⊆ B implies cl(A) ⊆ cl(B)",
            |e| {
                let (m, t, a, b) = (e.m, e.top(0), e.set(0), e.set(1));
                implies(m.subset(a, b), || m.subset(&m.closure(t, a), &m.closure(t, b)))
            }
        ),
        law!(
            "kap-oz-5",
            Holds,
            TOPOLOGY,
            spaces(&[Top, Set]),
            "A is closed iff A = cl(A)",
            |e| {
                let (m, t, a) = (e.m, e.top(0), e.set(0));
                m.is_closed(t, a) == m.equal(a, &m.closure(t, a))
            }
        ),
        law!(
            "kap-oz-6",
            Holds,
            TOPOLOGY,
            spaces(&[Top, Set, Set]),
            "cl(A ∪ B) = cl(A) ∪ cl(B)",
            |e| {
                let (m, t, a, b) = (e.m, e.top(0), e.set(0), e.set(1));
                m.equal(
                    &m.closure(t, &m.union(a, b)),
                    &m.union(&m.closure(t, a), &m.closure(t, b)),
                )
            }
        ),
        law!(
            "ic-oz-1",
            Holds,
            TOPOLOGY,
            spaces(&[Top]),
            "int(F_∅) = F_∅ and int(F_Ẽ) = F_Ẽ",
            |e| {
                let (m, t, s) = (e.m, e.top(0), e.source());
                let (empty, full) = (m.empty(s), m.universal(s));
                m.equal(&m.interior(t, &empty), &empty) && m.equal(&m.interior(t, &full), &full)
            }
        ),
        law!("ic-oz-2", Holds, TOPOLOGY, spaces(&[Top, Set]), "int(A) ⊆ A", |e| {
            let (m, t, a) = (e.m, e.top(0), e.set(0));
            m.subset(&m.interior(t, a), a)
        }),
        law!(
            "ic-oz-3",
            Holds,
            TOPOLOGY,
            spaces(&[Top, Set]),
            "int(int(A)) = int(A)",
            |e| {
                let (m, t, a) = (e.m, e.top(0), e.set(0));
                let i = m.interior(t, a);
                m.equal(&m.interior(t, &i), &i)
            }
        ),
        law!(
            "ic-oz-4",
            Holds,
            TOPOLOGY,
            spaces(&[Top, Set, Set]),
            "A ⊆ B implies int(A) ⊆ int(B)",
            |e| {
                let (m, t, a, b) = (e.m, e.top(0), e.set(0), e.set(1));
                implies(m.subset(a, b), || m.subset(&m.interior(t, a), &m.interior(t, b)))
            }
        ),
        law!(
            "ic-oz-5",
            Holds,
            TOPOLOGY,
            spaces(&[Top, Set]),
            "A is open iff A = int(A)",
            |e| {
                let (m, t, a) = (e.m, e.top(0), e.set(0));
                m.is_open(t, a) == m.equal(a, &m.interior(t, a))
            }
        ),
        law!(
            "ic-oz-6",
            Holds,
            TOPOLOGY,
            spaces(&[Top, Set, Set]),
            "int(A ∩ B) = int(A) ∩ int(B)",
            |e| {
                let (m, t, a, b) = (e.m, e.top(0), e.set(0), e.set(1));
                m.equal(
                    &m.interior(t, &m.intersection(a, b)),
                    &m.intersection(&m.interior(t, a), &m.interior(t, b)),
                )
            }
        ),
        law!(
            "ik-1",
            Holds,
            TOPOLOGY,
            spaces(&[Top, Set]),
            "int(A)^c = cl(A^c)",
            |e| {
                let (m, t, a) = (e.m, e.top(0), e.set(0));
                m.equal(&m.complement(&m.interior(t, a)), &m.closure(t, &m.complement(a)))
            }
        ),
        law!(
            "ik-2",
            Holds,
            TOPOLOGY,
            spaces(&[Top, Set]),
            "cl(A)^c = int(A^c)",
            |e| {
                let (m, t, a) = (e.m, e.top(0), e.set(0));
                m.equal(&m.complement(&m.closure(t, a)), &m.interior(t, &m.complement(a)))
            }
        ),
        law!(
            "qnbd-closure",
            Holds,
            TOPOLOGY,
            spaces(&[Top, Set, Point]),
            "pt ∈ cl(A) iff every Q-neighbourhood of pt is quasi-coincident with A",
            |e| {
                let (m, t, a, p) = (e.m, e.top(0), e.set(0), e.point(0));
                m.closure_contains(t, a, p) == m.qnbds_meet(t, a, p)
            }
        ),
        law!(
            "base-qnbd-criterion",
            Holds,
            TOPOLOGY,
            spaces(&[Top, Base]),
            "B is a base iff each open Q-neighbourhood A of each point pt has some B in the base with pt q B ⊆ A",
            |e| e.m.is_base(e.top(0), &e.base()) == base_criterion(e)
        ),
        law!(
            "base-qnbd-criterion-forward",
            Holds,
            TOPOLOGY,
            spaces(&[Top, Base]),
            "a base satisfies the Q-neighbourhood criterion",
            |e| implies(e.m.is_base(e.top(0), &e.base()), || base_criterion(e))
        ),
        law!(
            "continuity-equivalence",
            Holds,
            TOPOLOGY,
            continuous_maps(&[Top, TargetTop]),
            "continuity, closed preimages, f(cl A) ⊆ cl f(A), cl f⁻¹(G) ⊆ f⁻¹(cl G) and f⁻¹(int G) ⊆ int f⁻¹(G) agree",
            |e| {
                let (m, f, t1, t2) = (e.m, e.map(), e.top(0), e.target_top(0));
                let c1 = m.continuous(&f, t1, t2);
                let c2 = m.closed_family(t2).iter().all(|g| m.is_closed(t1, &m.preimage(&f, g)));
                let c3 = e
                    .all_sets()
                    .all(|a| m.subset(&m.image(&f, &m.closure(t1, a)), &m.closure(t2, &m.image(&f, a))));
                let c4 = e
                    .all_target_sets()
                    .all(|g| m.subset(&m.closure(t1, &m.preimage(&f, g)), &m.preimage(&f, &m.closure(t2, g))));
                let c5 = e
                    .all_target_sets()
                    .all(|g| m.subset(&m.preimage(&f, &m.interior(t2, g)), &m.interior(t1, &m.preimage(&f, g))));
                c1 == c2 && c1 == c3 && c1 == c4 && c1 == c5
            }
        ),
        law!(
            "base-continuity",
            Holds,
            TOPOLOGY,
            continuous_maps(&[Top, TargetTop]),
            "for every base of τ2: f is continuous iff preimages of base members are open",
            |e| {
                let (m, f, t1, t2) = (e.m, e.map(), e.top(0), e.target_top(0));
                let opens = m.opens(t2);
                let continuous = m.continuous(&f, t1, t2);
                (0..1u64 << opens.len()).all(|mask| {
                    let base: Vec<M::Set> = (0..opens.len())
                        .filter(|b| mask >> b & 1 == 1)
                        .map(|b| opens[b].clone())
                        .collect();
                    implies(m.is_base(t2, &base), || {
                        continuous == base.iter().all(|b| m.is_open(t1, &m.preimage(&f, b)))
                    })
                })
            }
        ),
        law!(
            "kap-op",
            Holds,
            TOPOLOGY,
            spaces(&[Top]),
            "the closure operator satisfies (c1)-(c4) and induces the topology back",
            |e| e.m.closure_round_trip(e.top(0))
        ),
        law!(
            "ic-op",
            Holds,
            TOPOLOGY,
            spaces(&[Top]),
            "the interior operator satisfies (i1)-(i4) and induces the topology back",
            |e| e.m.interior_round_trip(e.top(0))
        ),
        law!(
            "compact-fip",
            Holds,
            TOPOLOGY,
            spaces(&[Top]),
            "compact, and every closed family with the FIP has nonempty intersection",
            |e| e.m.compact(e.top(0))
        ),
        law!(
            "compact-image",
            Holds,
            TOPOLOGY,
            continuous_maps(&[Top, TargetTop]),
            "a continuous surjective image of a compact space is compact",
            |e| {
                let (m, f, t1, t2) = (e.m, e.map(), e.top(0), e.target_top(0));
                implies(m.compact(t1) && m.continuous(&f, t1, t2) && m.surjective(&f), || {
                    m.compact(t2)
                })
            }
        ),
        law!(
            "constant-map-enriched",
            Holds,
            ENRICHED,
            Domain {
                shapes: Shapes::Paired,
                maps: Maps::Constant,
                slots: &[Top, TargetTop]
            },
            "a constant map out of an enriched space is continuous",
            |e| {
                let (m, f, t1, t2) = (e.m, e.map(), e.top(0), e.target_top(0));
                implies(m.enriched(t1), || m.continuous(&f, t1, t2))
            }
        ),
        law!(
            "constant-map-saturated",
            Holds,
            ENRICHED,
            Domain {
                shapes: Shapes::Paired,
                maps: Maps::Constant,
                slots: &[Top, TargetTop]
            },
            "a constant map is continuous when the source space holds every uniform set (α, X) and (α, ∅)",
            |e| {
                let (m, f, t1, t2) = (e.m, e.map(), e.top(0), e.target_top(0));
                implies(saturated(e), || m.continuous(&f, t1, t2))
            }
        ),
    ]
}
