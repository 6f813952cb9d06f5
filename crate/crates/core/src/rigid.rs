use serde::{Deserialize, Serialize};

use crate::curve::{BundleOnC, CurveContext};
use crate::error::{self, Error, Result};
use crate::invariants::{ExactSeqWitness, Invariants};

/// A quasi locally free sheaf of rigid type on `C_n`, locally isomorphic to
/// `a O_n ⊕ O_k` with `a >= 1`, `1 <= k < n`, described by the bundles
/// `E = 𝓔|C` (rank a+1) and `F = 𝓔_k|C ⊗ L^{-k}` (rank a) on the reduced
/// curve. The third associated bundle `V` is derived, not stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RigidRepr", into = "RigidRepr")]
pub struct RigidSheaf {
    ctx: CurveContext,
    a: i64,
    k: i64,
    e: BundleOnC,
    f: BundleOnC,
}

#[derive(Serialize, Deserialize)]
struct RigidRepr {
    ctx: CurveContext,
    a: i64,
    k: i64,
    deg_e: i64,
    deg_f: i64,
}

impl From<RigidSheaf> for RigidRepr {
    fn from(s: RigidSheaf) -> Self {
        RigidRepr {
            ctx: s.ctx,
            a: s.a,
            k: s.k,
            deg_e: s.e.deg(),
            deg_f: s.f.deg(),
        }
    }
}

impl TryFrom<RigidRepr> for RigidSheaf {
    type Error = Error;
    fn try_from(r: RigidRepr) -> Result<Self> {
        RigidSheaf::new(r.ctx, r.a, r.k, r.deg_e, r.deg_f)
    }
}

impl RigidSheaf {
    pub fn new(ctx: CurveContext, a: i64, k: i64, deg_e: i64, deg_f: i64) -> Result<Self> {
        if a < 1 {
            return Err(Error::InvalidInput(format!("a must be >= 1, got {a}")));
        }
        if k < 1 || k >= ctx.n() {
            return Err(Error::InvalidInput(format!(
                "k must satisfy 1 <= k < n = {}, got {k}",
                ctx.n()
            )));
        }
        Ok(RigidSheaf {
            ctx,
            a,
            k,
            e: BundleOnC::new(error::add(a, 1)?, deg_e)?,
            f: BundleOnC::new(a, deg_f)?,
        })
    }

    pub fn ctx(&self) -> &CurveContext {
        &self.ctx
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// `E = 𝓔|C`, of rank a+1.
    pub fn e(&self) -> BundleOnC {
        self.e
    }

    /// `F`, of rank a.
    pub fn f(&self) -> BundleOnC {
        self.f
    }

    /// `V = (𝓔^(k))|C ⊗ L^(k-n)`: rank a+1, degree deg(E) - (n-k)·l.
    pub fn v(&self) -> Result<BundleOnC> {
        let nk = error::sub(self.ctx.n(), self.k)?;
        BundleOnC::new(
            error::add(self.a, 1)?,
            error::sub(self.e.deg(), error::mul(nk, self.ctx.l())?)?,
        )
    }

    /// Generalized (R, Deg) of the sheaf:
    /// R = a·n + k, Deg = k·deg(E) + (n−k)·deg(F) + (n(n−1)a + k(k−1))·l/2.
    /// The coefficient of l is always even, so Deg is an exact integer.
    pub fn invariants(&self) -> Result<Invariants> {
        let n = self.ctx.n();
        let l = self.ctx.l();
        let r = error::add(error::mul(self.a, n)?, self.k)?;
        let coeff = error::add(
            error::mul(error::mul(n, n - 1)?, self.a)?,
            error::mul(self.k, self.k - 1)?,
        )?;
        let deg = error::add(
            error::add(
                error::mul(self.k, self.e.deg())?,
                error::mul(n - self.k, self.f.deg())?,
            )?,
            error::div_exact(error::mul(coeff, l)?, 2)?,
        )?;
        Invariants::new(r, deg)
    }

    /// Graded pieces (G_0, ..., G_{n-1}) of the first canonical filtration,
    /// 0-indexed: `E ⊗ L^i` for i < k, then `F ⊗ L^i` for k <= i < n.
    pub fn first_graded(&self) -> Result<Vec<BundleOnC>> {
        let l = self.ctx.l();
        (0..self.ctx.n())
            .map(|i| {
                if i < self.k {
                    self.e.twist(i, l)
                } else {
                    self.f.twist(i, l)
                }
            })
            .collect()
    }

    /// Graded pieces of the second canonical filtration, returned in the
    /// order (G^(n), ..., G^(1)): `F ⊗ L^i` for 0 <= i < n-k, then
    /// `V ⊗ L^i` for n-k <= i < n.
    pub fn second_graded(&self) -> Result<Vec<BundleOnC>> {
        let l = self.ctx.l();
        let nk = self.ctx.n() - self.k;
        let v = self.v()?;
        (0..self.ctx.n())
            .map(|i| {
                if i < nk {
                    self.f.twist(i, l)
                } else {
                    v.twist(i, l)
                }
            })
            .collect()
    }

    /// The canonical four-term sequence
    /// 0 → F⊗L^(n−k) → V⊗L^(n−k) → E → F → 0
    /// as an invariant-level witness over `C`.
    pub fn star_sequence(&self) -> Result<ExactSeqWitness> {
        let l = self.ctx.l();
        let nk = self.ctx.n() - self.k;
        ExactSeqWitness::new(vec![
            self.f.twist(nk, l)?.invariants(),
            self.v()?.twist(nk, l)?.invariants(),
            self.e.invariants(),
            self.f.invariants(),
        ])
    }
}
