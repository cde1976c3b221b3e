//! FP-soft mappings `f_up : FPS(X, E) → FPS(Y, K)`.

use crate::context::{Context, Subset, TotalMap};
use crate::error::{Error, Result};
use crate::fuzzy::check_map;
use crate::scalar::Scalar;
use crate::set::FpSoftSet;

/// A pair of total maps `u : X → Y` and `p : E → K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpSoftMapping {
    source: Context,
    target: Context,
    u: TotalMap,
    p: TotalMap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub injective: bool,
    pub surjective: bool,
    pub constant: bool,
}

impl FpSoftMapping {
    pub fn new(source: Context, target: Context, u: TotalMap, p: TotalMap) -> Result<Self> {
        check_map(&u, source.universe_len(), target.universe_len())?;
        check_map(&p, source.parameter_len(), target.parameter_len())?;
        Ok(FpSoftMapping { source, target, u, p })
    }

    /// Builds a mapping from `(from, to)` symbol pairs. Every source symbol
    /// must be mapped exactly once.
    pub fn from_symbols<'a, U, P>(source: Context, target: Context, u: U, p: P) -> Result<Self>
    where
        U: IntoIterator<Item = (&'a str, &'a str)>,
        P: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut u_images = vec![None; source.universe_len()];
        for (x, y) in u {
            let i = source.element_index(x)?;
            let j = target.element_index(y)?;
            if u_images[i].replace(j).is_some() {
                return Err(Error::InvalidMap(format!("{x} is mapped twice")));
            }
        }
        let mut p_images = vec![None; source.parameter_len()];
        for (e, k) in p {
            let i = source.parameter_index(e)?;
            let j = target.parameter_index(k)?;
            if p_images[i].replace(j).is_some() {
                return Err(Error::InvalidMap(format!("{e} is mapped twice")));
            }
        }
        let collect = |images: Vec<Option<usize>>, names: &[String]| -> Result<Vec<usize>> {
            images
                .into_iter()
                .enumerate()
                .map(|(i, j)| j.ok_or_else(|| Error::InvalidMap(format!("{} has no image", names[i]))))
                .collect()
        };
        let u = TotalMap::new(collect(u_images, source.universe())?, target.universe_len())?;
        let p = TotalMap::new(collect(p_images, source.parameters())?, target.parameter_len())?;
        Self::new(source, target, u, p)
    }

    pub fn identity(context: &Context) -> Self {
        FpSoftMapping {
            source: context.clone(),
            target: context.clone(),
            u: TotalMap::identity(context.universe_len()),
            p: TotalMap::identity(context.parameter_len()),
        }
    }

    pub fn source(&self) -> &Context {
        &self.source
    }

    pub fn target(&self) -> &Context {
        &self.target
    }

    pub fn u(&self) -> &TotalMap {
        &self.u
    }

    pub fn p(&self) -> &TotalMap {
        &self.p
    }

    pub fn classify(&self) -> Classification {
        Classification {
            injective: self.u.is_injective() && self.p.is_injective(),
            surjective: self.u.is_surjective() && self.p.is_surjective(),
            constant: self.u.is_constant() && self.p.is_constant(),
        }
    }

    /// Image: grades by sup-extension along `p`; `g(k)` is the union of
    /// `u(f_A(e))` over the fiber `p⁻¹(k)`, empty when the fiber is.
    pub fn image<T: Scalar>(&self, set: &FpSoftSet<T>) -> Result<FpSoftSet<T>> {
        self.source.ensure_same(set.context())?;
        let membership = set.membership().image(&self.p, &self.target)?;
        let mut approx = vec![Subset::EMPTY; self.target.parameter_len()];
        for (e, a) in set.approximations().iter().enumerate() {
            let k = self.p.apply(e);
            approx[k] = approx[k].union(self.u.image_of(*a));
        }
        FpSoftSet::new(membership, approx)
    }

    /// Preimage: `μ_A(e) = μ_S(p(e))`, `f_A(e) = u⁻¹(g_S(p(e)))`.
    pub fn preimage<T: Scalar>(&self, set: &FpSoftSet<T>) -> Result<FpSoftSet<T>> {
        self.target.ensure_same(set.context())?;
        let membership = set.membership().preimage(&self.p, &self.source)?;
        let approx = (0..self.source.parameter_len())
            .map(|e| self.u.preimage_of(set.approx(self.p.apply(e))))
            .collect();
        FpSoftSet::new(membership, approx)
    }
}
