//! Universes, parameter sets, crisp subsets and total maps between symbol sets.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest universe a [`Subset`] can index.
pub const MAX_UNIVERSE: usize = 64;

#[derive(Debug, PartialEq, Eq)]
struct ContextData {
    universe: Vec<String>,
    parameters: Vec<String>,
}

/// The pair (universe `X`, parameter set `E`) every FP-soft object lives over.
///
/// Cheap to clone. Two contexts are equal when their symbol lists are equal.
#[derive(Clone)]
pub struct Context(Arc<ContextData>);

impl Context {
    pub fn new<U, P>(universe: U, parameters: P) -> Result<Self>
    where
        U: IntoIterator,
        U::Item: Into<String>,
        P: IntoIterator,
        P::Item: Into<String>,
    {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        let parameters: Vec<String> = parameters.into_iter().map(Into::into).collect();
        if universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if parameters.is_empty() {
            return Err(Error::EmptyParameters);
        }
        if universe.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(universe.len()));
        }
        check_unique(&universe)?;
        check_unique(&parameters)?;
        Ok(Context(Arc::new(ContextData { universe, parameters })))
    }

    /// Context with universe `{prefix_x}1..` and parameters `{prefix_e}1..`.
    pub fn numbered(universe: usize, parameters: usize) -> Result<Self> {
        Self::with_prefixes("x", universe, "e", parameters)
    }

    pub fn with_prefixes(
        element_prefix: &str,
        universe: usize,
        parameter_prefix: &str,
        parameters: usize,
    ) -> Result<Self> {
        Self::new(
            (1..=universe).map(|i| format!("{element_prefix}{i}")),
            (1..=parameters).map(|i| format!("{parameter_prefix}{i}")),
        )
    }

    pub fn universe(&self) -> &[String] {
        &self.0.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.0.parameters
    }

    pub fn universe_len(&self) -> usize {
        self.0.universe.len()
    }

    pub fn parameter_len(&self) -> usize {
        self.0.parameters.len()
    }

    pub fn element_index(&self, symbol: &str) -> Result<usize> {
        self.0
            .universe
            .iter()
            .position(|s| s == symbol)
            .ok_or_else(|| Error::NotInUniverse(symbol.to_string()))
    }

    pub fn parameter_index(&self, symbol: &str) -> Result<usize> {
        self.0
            .parameters
            .iter()
            .position(|s| s == symbol)
            .ok_or_else(|| Error::UnknownParameter(symbol.to_string()))
    }

    /// The whole universe as a subset.
    pub fn full(&self) -> Subset {
        Subset::full(self.universe_len())
    }

    /// Subset from element symbols.
    pub fn subset<I, S>(&self, symbols: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = Subset::EMPTY;
        for s in symbols {
            bits = bits.with(self.element_index(s.as_ref())?);
        }
        Ok(bits)
    }

    pub fn element_names(&self, subset: Subset) -> Vec<&str> {
        subset.iter().map(|i| self.0.universe[i].as_str()).collect()
    }

    pub(crate) fn ensure_same(&self, other: &Context) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }
}

fn check_unique(symbols: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for s in symbols {
        if !seen.insert(s.as_str()) {
            return Err(Error::DuplicateSymbol(s.clone()));
        }
    }
    Ok(())
}

impl PartialEq for Context {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Context {}

impl fmt::Debug for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Context {{ universe: {:?}, parameters: {:?} }}",
            self.0.universe, self.0.parameters
        )
    }
}

/// A crisp subset of a universe of at most 64 elements, stored as a bitset.
///
/// Ordering is numeric on the bit pattern, with element `i` at bit `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn full(len: usize) -> Self {
        if len >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << len) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(Subset::EMPTY, Subset::with)
    }

    pub fn with(self, index: usize) -> Self {
        Subset(self.0 | (1u64 << index))
    }

    pub fn contains(self, index: usize) -> bool {
        index < 64 && self.0 & (1u64 << index) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    /// Complement relative to `universe`.
    pub fn complement_in(self, universe: Subset) -> Subset {
        Subset(universe.0 & !self.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits & (1u64 << i) != 0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A total function between two finite index sets `0..domain` and `0..codomain`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TotalMap {
    images: Vec<usize>,
    codomain: usize,
}

impl TotalMap {
    pub fn new(images: Vec<usize>, codomain: usize) -> Result<Self> {
        if let Some(bad) = images.iter().find(|&&k| k >= codomain) {
            return Err(Error::InvalidMap(format!(
                "image {bad} outside a codomain of {codomain}"
            )));
        }
        Ok(TotalMap { images, codomain })
    }

    pub fn identity(len: usize) -> Self {
        TotalMap {
            images: (0..len).collect(),
            codomain: len,
        }
    }

    pub fn constant(domain: usize, value: usize, codomain: usize) -> Result<Self> {
        Self::new(vec![value; domain], codomain)
    }

    pub fn domain(&self) -> usize {
        self.images.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, index: usize) -> usize {
        self.images[index]
    }

    /// Indices mapped to `target`, in increasing order.
    pub fn fiber(&self, target: usize) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(move |(_, &k)| k == target)
            .map(|(i, _)| i)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain];
        self.images.iter().all(|&k| !std::mem::replace(&mut seen[k], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain];
        for &k in &self.images {
            hit[k] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_constant(&self) -> bool {
        self.images.windows(2).all(|w| w[0] == w[1])
    }

    /// Forward image of a crisp subset of the domain.
    pub fn image_of(&self, subset: Subset) -> Subset {
        subset.iter().fold(Subset::EMPTY, |acc, i| acc.with(self.images[i]))
    }

    /// Preimage of a crisp subset of the codomain.
    pub fn preimage_of(&self, subset: Subset) -> Subset {
        Subset::from_indices(
            self.images
                .iter()
                .enumerate()
                .filter(|(_, &k)| subset.contains(k))
                .map(|(i, _)| i),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_validation() {
        assert_eq!(
            Context::new(Vec::<String>::new(), ["e1"]).unwrap_err(),
            Error::EmptyUniverse
        );
        assert_eq!(
            Context::new(["x1"], Vec::<String>::new()).unwrap_err(),
            Error::EmptyParameters
        );
        assert_eq!(
            Context::new(["x1", "x1"], ["e1"]).unwrap_err(),
            Error::DuplicateSymbol("x1".into())
        );
        assert!(Context::numbered(65, 1).is_err());
        assert!(Context::numbered(64, 1).is_ok());
    }

    #[test]
    fn contexts_compare_by_value() {
        let a = Context::numbered(2, 2).unwrap();
        let b = Context::new(["x1", "x2"], ["e1", "e2"]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, Context::numbered(2, 3).unwrap());
    }

    #[test]
    fn subset_ops() {
        let ctx = Context::numbered(4, 1).unwrap();
        let a = ctx.subset(["x1", "x3"]).unwrap();
        assert_eq!(a.complement_in(ctx.full()), ctx.subset(["x2", "x4"]).unwrap());
        assert!(a.is_subset(ctx.full()));
        assert_eq!(ctx.element_names(a), vec!["x1", "x3"]);
        assert_eq!(ctx.subset(["x9"]).unwrap_err(), Error::NotInUniverse("x9".into()));
        assert_eq!(Subset::full(64).len(), 64);
    }

    #[test]
    fn total_map_classification() {
        let id = TotalMap::identity(3);
        assert!(id.is_injective() && id.is_surjective() && !id.is_constant());
        let c = TotalMap::constant(3, 1, 2).unwrap();
        assert!(!c.is_injective() && !c.is_surjective() && c.is_constant());
        assert!(TotalMap::new(vec![0, 2], 2).is_err());
        let u = TotalMap::new(vec![1, 0, 2], 3).unwrap();
        let s = Subset::from_indices([1, 2]);
        assert_eq!(u.image_of(s), Subset::from_indices([0, 2]));
        assert_eq!(u.preimage_of(Subset::from_indices([0, 2])), s);
        assert_eq!(u.fiber(0).collect::<Vec<_>>(), vec![1]);
    }
}
