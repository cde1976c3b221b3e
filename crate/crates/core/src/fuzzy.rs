//! Fuzzy sets over the parameter set (the membership half of an FP-soft set).

use crate::context::{Context, TotalMap};
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::scalar::Scalar;

/// A total map from the parameters of a [`Context`] to grades.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzyParamSet<T: Scalar> {
    context: Context,
    grades: Vec<Grade<T>>,
}

impl<T: Scalar> FuzzyParamSet<T> {
    pub fn new(context: Context, grades: Vec<Grade<T>>) -> Result<Self> {
        if grades.len() != context.parameter_len() {
            return Err(Error::ParameterCount {
                expected: context.parameter_len(),
                found: grades.len(),
            });
        }
        Ok(FuzzyParamSet { context, grades })
    }

    pub fn constant(context: Context, grade: Grade<T>) -> Self {
        let grades = vec![grade; context.parameter_len()];
        FuzzyParamSet { context, grades }
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn grades(&self) -> &[Grade<T>] {
        &self.grades
    }

    pub fn grade(&self, parameter: usize) -> &Grade<T> {
        &self.grades[parameter]
    }

    /// Parameters with a positive grade.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.grades
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(i, _)| i)
    }

    /// `e ↦ 1 - A(e)`.
    pub fn complement(&self) -> Self {
        FuzzyParamSet {
            context: self.context.clone(),
            grades: self.grades.iter().map(Grade::complement).collect(),
        }
    }

    /// Pointwise `A ≤ B`.
    pub fn is_below(&self, other: &Self) -> Result<bool> {
        self.context.ensure_same(&other.context)?;
        Ok(self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b))
    }

    /// Pointwise supremum of a nonempty family.
    pub fn sup_family<'a, I>(family: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Self>,
    {
        Self::fold_family(family, Grade::max)
    }

    /// Pointwise infimum of a nonempty family.
    pub fn inf_family<'a, I>(family: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Self>,
    {
        Self::fold_family(family, Grade::min)
    }

    fn fold_family<'a, I>(family: I, op: fn(&Grade<T>, &Grade<T>) -> Grade<T>) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Self>,
    {
        let mut iter = family.into_iter();
        let mut acc = iter.next().ok_or(Error::EmptyFamily)?.clone();
        for member in iter {
            acc.context.ensure_same(&member.context)?;
            for (a, b) in acc.grades.iter_mut().zip(&member.grades) {
                *a = op(a, b);
            }
        }
        Ok(acc)
    }

    /// Sup-extension along `p`: `k ↦ max{A(e) : p(e) = k}`, and `0` on empty fibers.
    pub fn image(&self, p: &TotalMap, target: &Context) -> Result<Self> {
        check_map(p, self.context.parameter_len(), target.parameter_len())?;
        let mut grades = vec![Grade::zero(); target.parameter_len()];
        for (e, g) in self.grades.iter().enumerate() {
            let k = p.apply(e);
            grades[k] = grades[k].clone().max(g.clone());
        }
        Ok(FuzzyParamSet {
            context: target.clone(),
            grades,
        })
    }

    /// Pullback along `p`: `e ↦ S(p(e))`.
    pub fn preimage(&self, p: &TotalMap, source: &Context) -> Result<Self> {
        check_map(p, source.parameter_len(), self.context.parameter_len())?;
        Ok(FuzzyParamSet {
            context: source.clone(),
            grades: (0..source.parameter_len())
                .map(|e| self.grades[p.apply(e)].clone())
                .collect(),
        })
    }
}

pub(crate) fn check_map(map: &TotalMap, domain: usize, codomain: usize) -> Result<()> {
    if map.domain() != domain || map.codomain() != codomain {
        return Err(Error::InvalidMap(format!(
            "expected {domain} -> {codomain}, got {} -> {}",
            map.domain(),
            map.codomain()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn ctx(params: usize) -> Context {
        Context::numbered(1, params).unwrap()
    }

    fn tenths(context: &Context, ks: &[u32]) -> FuzzyParamSet<Q> {
        let grades = ks.iter().map(|&k| Grade::lattice(k, 10).unwrap()).collect();
        FuzzyParamSet::new(context.clone(), grades).unwrap()
    }

    fn lattice_sets(context: &Context, q: u32) -> Vec<FuzzyParamSet<Q>> {
        (0..context.parameter_len())
            .map(|_| 0..=q)
            .multi_cartesian_product()
            .map(|ks| {
                let grades = ks.iter().map(|&k| Grade::lattice(k, q).unwrap()).collect();
                FuzzyParamSet::new(context.clone(), grades).unwrap()
            })
            .collect()
    }

    fn all_maps(domain: usize, codomain: usize) -> Vec<TotalMap> {
        (0..domain)
            .map(|_| 0..codomain)
            .multi_cartesian_product()
            .map(|images| TotalMap::new(images, codomain).unwrap())
            .collect()
    }

    #[test]
    fn complement_examples() {
        let c = ctx(3);
        let zero = FuzzyParamSet::<Q>::constant(c.clone(), Grade::zero());
        assert_eq!(zero.complement(), FuzzyParamSet::constant(c.clone(), Grade::one()));
        let a = tenths(&c, &[2, 3, 4]);
        assert_eq!(a.complement(), tenths(&c, &[8, 7, 6]));
        assert_eq!(a.complement().complement(), a);
    }

    #[test]
    fn sup_and_inf_examples() {
        let c = ctx(1);
        let a = tenths(&c, &[2]);
        assert_eq!(FuzzyParamSet::sup_family([&a]).unwrap(), a);
        assert_eq!(FuzzyParamSet::inf_family([&a]).unwrap(), a);
        let b = tenths(&c, &[7]);
        assert_eq!(FuzzyParamSet::sup_family([&a, &b]).unwrap(), b);
        let c2 = ctx(2);
        let x = tenths(&c2, &[0, 5]);
        let y = tenths(&c2, &[0, 3]);
        assert_eq!(FuzzyParamSet::inf_family([&x, &y]).unwrap().grade(1), y.grade(1));
        let one = FuzzyParamSet::constant(c2.clone(), Grade::one());
        assert_eq!(FuzzyParamSet::inf_family([&x, &one]).unwrap(), x);
        assert_eq!(
            FuzzyParamSet::<Q>::sup_family(std::iter::empty()).unwrap_err(),
            Error::EmptyFamily
        );
        assert_eq!(FuzzyParamSet::sup_family([&a, &x]).unwrap_err(), Error::ContextMismatch);
    }

    #[test]
    fn sup_with_complement_is_at_least_half() {
        let c = ctx(2);
        let half = FuzzyParamSet::constant(c.clone(), Grade::lattice(1, 2).unwrap());
        for a in lattice_sets(&c, 6) {
            let s = FuzzyParamSet::sup_family([&a, &a.complement()]).unwrap();
            assert!(half.is_below(&s).unwrap());
        }
    }

    #[test]
    fn sup_inf_lattice_laws_exhaustive() {
        let c = ctx(2);
        let sets = lattice_sets(&c, 4);
        for a in &sets {
            assert_eq!(&FuzzyParamSet::sup_family([a, a]).unwrap(), a);
            assert_eq!(&FuzzyParamSet::inf_family([a, a]).unwrap(), a);
            for b in &sets {
                assert_eq!(
                    FuzzyParamSet::sup_family([a, b]).unwrap(),
                    FuzzyParamSet::sup_family([b, a]).unwrap()
                );
                assert_eq!(
                    FuzzyParamSet::inf_family([a, b]).unwrap(),
                    FuzzyParamSet::inf_family([b, a]).unwrap()
                );
            }
        }
        let small = lattice_sets(&c, 2);
        for (a, b, d) in small.iter().tuple_combinations() {
            let ab = FuzzyParamSet::sup_family([a, b]).unwrap();
            let bd = FuzzyParamSet::sup_family([b, d]).unwrap();
            assert_eq!(
                FuzzyParamSet::sup_family([&ab, d]).unwrap(),
                FuzzyParamSet::sup_family([a, &bd]).unwrap()
            );
            let ab = FuzzyParamSet::inf_family([a, b]).unwrap();
            let bd = FuzzyParamSet::inf_family([b, d]).unwrap();
            assert_eq!(
                FuzzyParamSet::inf_family([&ab, d]).unwrap(),
                FuzzyParamSet::inf_family([a, &bd]).unwrap()
            );
        }
    }

    #[test]
    fn image_and_preimage_examples() {
        let e = ctx(2);
        let k = Context::with_prefixes("y", 1, "k", 2).unwrap();
        let id = TotalMap::identity(2);
        let a = tenths(&e, &[3, 2]);
        assert_eq!(a.image(&id, &e).unwrap(), a);
        assert_eq!(a.preimage(&id, &e).unwrap(), a);

        let p = TotalMap::new(vec![1, 0], 2).unwrap();
        assert_eq!(a.image(&p, &k).unwrap(), tenths(&k, &[2, 3]));
        assert_eq!(tenths(&k, &[2, 3]).preimage(&p, &e).unwrap(), a);
        assert!(a.image(&TotalMap::identity(3), &k).is_err());
    }

    #[test]
    fn image_under_constant_map_matches_brute_force() {
        let e = ctx(3);
        let k = Context::with_prefixes("y", 1, "k", 3).unwrap();
        for target in 0..3 {
            let p = TotalMap::constant(3, target, 3).unwrap();
            for a in lattice_sets(&e, 3) {
                let img = a.image(&p, &k).unwrap();
                for kk in 0..3 {
                    let expected = if kk == target {
                        a.grades().iter().max().unwrap().clone()
                    } else {
                        Grade::zero()
                    };
                    assert_eq!(img.grade(kk), &expected);
                }
            }
        }
    }

    #[test]
    fn preimage_image_round_trips_exhaustive() {
        for ne in 1..=3 {
            for nk in 1..=3 {
                let e = ctx(ne);
                let k = Context::with_prefixes("y", 1, "k", nk).unwrap();
                let maps = all_maps(ne, nk);
                let q = if ne == 3 && nk == 3 { 2 } else { 4 };
                let src = lattice_sets(&e, q);
                let tgt = lattice_sets(&k, q);
                for p in &maps {
                    for a in &src {
                        let back = a.image(p, &k).unwrap().preimage(p, &e).unwrap();
                        assert!(a.is_below(&back).unwrap());
                    }
                    if p.is_surjective() {
                        for s in &tgt {
                            let back = s.preimage(p, &e).unwrap().image(p, &k).unwrap();
                            assert_eq!(&back, s);
                        }
                    }
                }
            }
        }
    }
}
