//! Moduli-space bookkeeping: invariants of the loci of stable sheaves, the
//! dimension formula, the non-emptiness band, grid scans, and a Riemann-Roch
//! extension-dimension helper.
//!
//! Non-emptiness is reported only when the sufficient criterion holds; a
//! `false` answer means "not certified by the criterion", never "the moduli
//! space is empty". The loci N(a,k,δ,ε) are known to be smooth and
//! irreducible of the displayed dimension; that is recorded here as
//! documentation, not computed.

use serde::{Deserialize, Serialize};

use crate::curve::{BundleOnC, CurveContext};
use crate::error::{self, Error, Result};
use crate::invariants::Invariants;
use crate::rational::Rational;

/// A point of the rigid-type moduli bookkeeping: the discrete data
/// `(a, k, deg E = ε, deg F = δ)` over a curve context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ModuliRepr", into = "ModuliRepr")]
pub struct ModuliPoint {
    ctx: CurveContext,
    a: i64,
    k: i64,
    epsilon: i64,
    delta: i64,
}

#[derive(Serialize, Deserialize)]
struct ModuliRepr {
    ctx: CurveContext,
    a: i64,
    k: i64,
    epsilon: i64,
    delta: i64,
}

impl From<ModuliPoint> for ModuliRepr {
    fn from(p: ModuliPoint) -> Self {
        ModuliRepr {
            ctx: p.ctx,
            a: p.a,
            k: p.k,
            epsilon: p.epsilon,
            delta: p.delta,
        }
    }
}

impl TryFrom<ModuliRepr> for ModuliPoint {
    type Error = Error;
    fn try_from(r: ModuliRepr) -> Result<Self> {
        ModuliPoint::new(r.ctx, r.a, r.k, r.epsilon, r.delta)
    }
}

impl ModuliPoint {
    pub fn new(ctx: CurveContext, a: i64, k: i64, epsilon: i64, delta: i64) -> Result<Self> {
        if a < 1 {
            return Err(Error::InvalidInput(format!("a must be >= 1, got {a}")));
        }
        if k < 1 || k >= ctx.n() {
            return Err(Error::InvalidInput(format!(
                "k must satisfy 1 <= k < n = {}, got {k}",
                ctx.n()
            )));
        }
        Ok(ModuliPoint {
            ctx,
            a,
            k,
            epsilon,
            delta,
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
    pub fn epsilon(&self) -> i64 {
        self.epsilon
    }
    pub fn delta(&self) -> i64 {
        self.delta
    }
}

/// Generalized (R, d) of the locus N(a,k,δ,ε):
/// `R = a·n + k`, `d = k·ε + (n−k)·δ + (n(n−1)a + k(k−1))·l/2`.
pub fn moduli_rd(p: &ModuliPoint) -> Result<Invariants> {
    let n = p.ctx.n();
    let l = p.ctx.l();
    let r = error::add(error::mul(p.a, n)?, p.k)?;
    let coeff = error::add(
        error::mul(error::mul(n, n - 1)?, p.a)?,
        error::mul(p.k, p.k - 1)?,
    )?;
    let d = error::add(
        error::add(
            error::mul(p.k, p.epsilon)?,
            error::mul(n - p.k, p.delta)?,
        )?,
        error::div_exact(error::mul(coeff, l)?, 2)?,
    )?;
    Invariants::new(r, d)
}

/// Dimension of N(a,k,δ,ε):
/// `1 − (n(n−1)/2·a² + k(n−1)a + k(k−1)/2)·l + (g−1)(na² + k(2a+1))`.
pub fn moduli_dim(ctx: &CurveContext, a: i64, k: i64) -> Result<i64> {
    if a < 1 {
        return Err(Error::InvalidInput(format!("a must be >= 1, got {a}")));
    }
    if k < 1 || k >= ctx.n() {
        return Err(Error::InvalidInput(format!(
            "k must satisfy 1 <= k < n = {}, got {k}",
            ctx.n()
        )));
    }
    let n = ctx.n();
    let a2 = error::mul(a, a)?;
    // n(n-1)a^2 and k(k-1) are both even, so each half is an exact integer.
    let coeff = error::add(
        error::add(
            error::div_exact(error::mul(error::mul(n, n - 1)?, a2)?, 2)?,
            error::mul(error::mul(k, n - 1)?, a)?,
        )?,
        error::div_exact(error::mul(k, k - 1)?, 2)?,
    )?;
    let genus_term = error::mul(
        ctx.g() - 1,
        error::add(error::mul(n, a2)?, error::mul(k, error::add(error::mul(2, a)?, 1)?)?)?,
    )?;
    error::add(error::sub(1, error::mul(coeff, ctx.l())?)?, genus_term)
}

/// Sufficient non-emptiness criterion for N(a,k,δ,ε):
/// `ε/(a+1) < δ/a < (ε − (n−k)·l)/(a+1)`, both strict, in exact rationals.
///
/// The underlying existence result needs genus at least 2; smaller genus is
/// rejected rather than silently asserting existence.
pub fn moduli_nonempty(p: &ModuliPoint) -> Result<bool> {
    if p.ctx.g() < 2 {
        return Err(Error::GenusTooSmall(p.ctx.g()));
    }
    let a1 = (p.a + 1) as i128;
    let left = Rational::new(p.epsilon as i128, a1)?;
    let mid = Rational::new(p.delta as i128, p.a as i128)?;
    let nk = p.ctx.n() - p.k;
    let right = Rational::new(
        p.epsilon as i128 - (nk as i128) * (p.ctx.l() as i128),
        a1,
    )?;
    Ok(left < mid && mid < right)
}

/// Generalized (R, d) of the vector-bundle locus U(R,d):
/// `R = n·r`, `d = n·δ + n(n−1)/2·r·l`. The stable locus is known to be
/// non-empty, smooth and irreducible for every such (r, δ).
pub fn vb_moduli_rd(ctx: &CurveContext, r: i64, delta: i64) -> Result<Invariants> {
    let vb = crate::vector_bundle::VectorBundleCn::new(*ctx, BundleOnC::new(r, delta)?)?;
    vb.invariants()
}

/// Riemann-Roch extension-dimension helper on the smooth curve `C`:
/// `dim Ext^1(source, target) = hom_dim − χ` with
/// `χ = r_s·d_t − r_t·d_s + r_s·r_t·(1−g)`.
///
/// `hom_dim = dim Hom(source, target)` is supplied by the caller (it is 0
/// when both bundles are semi-stable with `μ(target) < μ(source)`). A
/// negative result means the inputs contradict each other.
pub fn ext_dim_rr(g: i64, source: BundleOnC, target: BundleOnC, hom_dim: i64) -> Result<i64> {
    if g < 0 {
        return Err(Error::InvalidInput(format!("genus must be >= 0, got {g}")));
    }
    if source.rank() < 1 || target.rank() < 1 {
        return Err(Error::InvalidInput("ranks must be >= 1".into()));
    }
    if hom_dim < 0 {
        return Err(Error::InvalidInput(format!(
            "hom_dim must be >= 0, got {hom_dim}"
        )));
    }
    let chi = error::add(
        error::sub(
            error::mul(source.rank(), target.deg())?,
            error::mul(target.rank(), source.deg())?,
        )?,
        error::mul(error::mul(source.rank(), target.rank())?, 1 - g)?,
    )?;
    let ext = error::sub(hom_dim, chi)?;
    if ext < 0 {
        return Err(Error::InconsistentInput(format!(
            "negative Ext dimension {ext}; hom_dim or the bundle data is wrong"
        )));
    }
    Ok(ext)
}

/// One cell of a non-emptiness scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionRow {
    pub delta: i64,
    pub epsilon: i64,
    #[serde(rename = "R")]
    pub r: i64,
    pub d: i64,
    pub nonempty: bool,
    pub dim: i64,
}

const DEFAULT_SCAN_CAP: u128 = 1_000_000;

/// Tabulates the non-emptiness criterion over a (δ, ε) grid. Rows are
/// emitted in row-major order, ε outer and δ inner, so output is stable
/// across runs.
pub fn scan(
    ctx: &CurveContext,
    a: i64,
    k: i64,
    delta_range: (i64, i64),
    epsilon_range: (i64, i64),
) -> Result<Vec<RegionRow>> {
    scan_with_cap(ctx, a, k, delta_range, epsilon_range, DEFAULT_SCAN_CAP)
}

pub fn scan_with_cap(
    ctx: &CurveContext,
    a: i64,
    k: i64,
    delta_range: (i64, i64),
    epsilon_range: (i64, i64),
    cap: u128,
) -> Result<Vec<RegionRow>> {
    let (dlo, dhi) = delta_range;
    let (elo, ehi) = epsilon_range;
    if dlo > dhi || elo > ehi {
        return Err(Error::InvalidInput("scan ranges must be non-empty".into()));
    }
    let size = (dhi - dlo + 1) as u128 * (ehi - elo + 1) as u128;
    if size > cap {
        return Err(Error::BudgetExceeded { size, cap });
    }
    let dim = moduli_dim(ctx, a, k)?;
    let mut rows = Vec::with_capacity(size as usize);
    for epsilon in elo..=ehi {
        for delta in dlo..=dhi {
            let p = ModuliPoint::new(*ctx, a, k, epsilon, delta)?;
            let rd = moduli_rd(&p)?;
            rows.push(RegionRow {
                delta,
                epsilon,
                r: rd.r(),
                d: rd.deg(),
                nonempty: moduli_nonempty(&p)?,
                dim,
            });
        }
    }
    Ok(rows)
}
