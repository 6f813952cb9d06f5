use serde::{Deserialize, Serialize};

use crate::curve::{BundleOnC, CurveContext};
use crate::error::{self, Error, Result};
use crate::invariants::Invariants;

/// A vector bundle `𝔼` on `C_n`, known through its restriction `𝔼|C` of
/// rank `r` and degree `δ`. Both canonical filtrations have graded pieces
/// `(E, E⊗L, ..., E⊗L^(n-1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "VbRepr", into = "VbRepr")]
pub struct VectorBundleCn {
    ctx: CurveContext,
    restriction: BundleOnC,
}

#[derive(Serialize, Deserialize)]
struct VbRepr {
    ctx: CurveContext,
    restriction: BundleOnC,
}

impl From<VectorBundleCn> for VbRepr {
    fn from(v: VectorBundleCn) -> Self {
        VbRepr {
            ctx: v.ctx,
            restriction: v.restriction,
        }
    }
}

impl TryFrom<VbRepr> for VectorBundleCn {
    type Error = Error;
    fn try_from(r: VbRepr) -> Result<Self> {
        VectorBundleCn::new(r.ctx, r.restriction)
    }
}

impl VectorBundleCn {
    pub fn new(ctx: CurveContext, restriction: BundleOnC) -> Result<Self> {
        if restriction.rank() < 1 {
            return Err(Error::InvalidInput(
                "restriction rank must be >= 1".into(),
            ));
        }
        Ok(VectorBundleCn { ctx, restriction })
    }

    pub fn ctx(&self) -> &CurveContext {
        &self.ctx
    }

    pub fn restriction(&self) -> BundleOnC {
        self.restriction
    }

    /// Generalized invariants: R = n·r, Deg = n·δ + n(n−1)/2 · r·l, equal to
    /// the degree sum of the graded list `(E⊗L^i)` for 0 <= i < n.
    pub fn invariants(&self) -> Result<Invariants> {
        let n = self.ctx.n();
        let r = self.restriction.rank();
        let delta = self.restriction.deg();
        let big_r = error::mul(n, r)?;
        let half = error::div_exact(error::mul(n, n - 1)?, 2)?;
        let deg = error::add(
            error::mul(n, delta)?,
            error::mul(half, error::mul(r, self.ctx.l())?)?,
        )?;
        Invariants::new(big_r, deg)
    }

    /// The common graded pieces `(E, E⊗L, ..., E⊗L^(n-1))`.
    pub fn graded(&self) -> Result<Vec<BundleOnC>> {
        (0..self.ctx.n())
            .map(|i| self.restriction.twist(i, self.ctx.l()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_examples() {
        let ctx = CurveContext::new(3, 2, -1).unwrap();
        let v = VectorBundleCn::new(ctx, BundleOnC::new(2, 1).unwrap()).unwrap();
        let inv = v.invariants().unwrap();
        assert_eq!((inv.r(), inv.deg()), (6, -3));

        let ctx = CurveContext::new(2, 2, -2).unwrap();
        let v = VectorBundleCn::new(ctx, BundleOnC::new(1, 0).unwrap()).unwrap();
        let inv = v.invariants().unwrap();
        assert_eq!((inv.r(), inv.deg()), (2, -2));
    }

    #[test]
    fn closed_form_matches_graded_sum() {
        for n in 2..=5 {
            for l in -4..0 {
                for r in 1..=3 {
                    for delta in -4..=4 {
                        let ctx = CurveContext::new(n, 2, l).unwrap();
                        let v =
                            VectorBundleCn::new(ctx, BundleOnC::new(r, delta).unwrap()).unwrap();
                        let inv = v.invariants().unwrap();
                        let graded = v.graded().unwrap();
                        let dsum: i64 = graded.iter().map(|b| b.deg()).sum();
                        let rsum: i64 = graded.iter().map(|b| b.rank()).sum();
                        assert_eq!((rsum, dsum), (inv.r(), inv.deg()));
                    }
                }
            }
        }
    }
}
