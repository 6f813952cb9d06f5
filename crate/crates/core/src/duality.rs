use serde::{Deserialize, Serialize};

use crate::curve::CurveContext;
use crate::error::{self, Error, Result};
use crate::invariants::Invariants;
use crate::rational::Rational;

/// The invariant data of one step of the first canonical filtration of a
/// torsion-free sheaf `𝓔` on `C_n`: the invariants of `𝓔` itself, of the
/// subsheaf `𝓔_k`, and the torsion length `t_k = h^0(Σ_k(𝓔))` of `𝓔|C_k`.
///
/// Both `𝓔_k` and the quotient `𝓔^(k)` must be nonzero, so that all slope
/// comparisons downstream are defined; enforced here once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SliceRepr", into = "SliceRepr")]
pub struct FiltrationSlice {
    ctx: CurveContext,
    total: Invariants,
    sub: Invariants,
    k: i64,
    t_k: i64,
}

#[derive(Serialize, Deserialize)]
struct SliceRepr {
    ctx: CurveContext,
    total: Invariants,
    sub: Invariants,
    k: i64,
    t_k: i64,
}

impl From<FiltrationSlice> for SliceRepr {
    fn from(s: FiltrationSlice) -> Self {
        SliceRepr {
            ctx: s.ctx,
            total: s.total,
            sub: s.sub,
            k: s.k,
            t_k: s.t_k,
        }
    }
}

impl TryFrom<SliceRepr> for FiltrationSlice {
    type Error = Error;
    fn try_from(r: SliceRepr) -> Result<Self> {
        FiltrationSlice::new(r.ctx, r.total, r.sub, r.k, r.t_k)
    }
}

impl FiltrationSlice {
    pub fn new(
        ctx: CurveContext,
        total: Invariants,
        sub: Invariants,
        k: i64,
        t_k: i64,
    ) -> Result<Self> {
        if k < 1 || k >= ctx.n() {
            return Err(Error::InvalidSlice(format!(
                "k must satisfy 1 <= k < n = {}, got {k}",
                ctx.n()
            )));
        }
        if sub.r() == 0 || sub.r() >= total.r() {
            return Err(Error::InvalidSlice(format!(
                "need 0 < R(sub) < R(total), got R(sub) = {}, R(total) = {}",
                sub.r(),
                total.r()
            )));
        }
        if t_k < 0 {
            return Err(Error::InvalidSlice(format!(
                "torsion length must be >= 0, got {t_k}"
            )));
        }
        Ok(FiltrationSlice {
            ctx,
            total,
            sub,
            k,
            t_k,
        })
    }

    pub fn ctx(&self) -> &CurveContext {
        &self.ctx
    }

    pub fn total(&self) -> Invariants {
        self.total
    }

    pub fn sub(&self) -> Invariants {
        self.sub
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn t_k(&self) -> i64 {
        self.t_k
    }
}

/// Invariants of the dual sheaf:
/// `R(𝓔^∨) = R(𝓔)` and `Deg(𝓔^∨) = −Deg(𝓔) + R(𝓔)(n−1)·deg(L) + h^0(T(𝓔))`.
pub fn dual_invariants(
    inv: Invariants,
    torsion_len: i64,
    ctx: &CurveContext,
) -> Result<Invariants> {
    if torsion_len < 0 {
        return Err(Error::InvalidInput(format!(
            "torsion length must be >= 0, got {torsion_len}"
        )));
    }
    let twist = error::mul(inv.r(), error::mul(ctx.n() - 1, ctx.l())?)?;
    let deg = error::add(error::add(-inv.deg(), twist)?, torsion_len)?;
    Invariants::new(inv.r(), deg)
}

/// Invariants of all sheaves associated to a filtration slice: the twisted
/// subsheaf, the quotient `𝓔^(k)`, the restriction `𝓔|C_k` and its bidual,
/// the kernel `𝓔[k]`, and the dual counterparts of each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceDerived {
    /// `𝓔_k ⊗ Λ^{-k}`
    pub e_k_twist: Invariants,
    /// `𝓔^(k)`
    pub e_up_k: Invariants,
    /// `𝓔|C_k`
    pub restriction: Invariants,
    /// `𝓔[k]`
    pub bracket: Invariants,
    /// `(𝓔|C_k)^∨∨`
    pub bidual_restriction: Invariants,
    /// `𝓔^∨`
    pub dual_total: Invariants,
    /// `(𝓔^∨)_k`
    pub dual_sub: Invariants,
    /// `(𝓔^∨)[k]`
    pub dual_bracket: Invariants,
    /// `(𝓔^∨)^(k) = (𝓔|C_k)^∨`
    pub dual_up_k: Invariants,
    /// `((𝓔^∨)|C_k)^∨∨`
    pub dual_bidual_restriction: Invariants,
}

pub fn slice_derived(sl: &FiltrationSlice) -> Result<SliceDerived> {
    let ctx = sl.ctx();
    let (r_e, d_e) = (sl.total().r(), sl.total().deg());
    let (r_k, d_k) = (sl.sub().r(), sl.sub().deg());
    let t = sl.t_k();
    let k = sl.k();
    let n = ctx.n();
    let l = ctx.l();

    let e_k_twist = Invariants::new(r_k, error::sub(d_k, error::mul(k, error::mul(l, r_k)?)?)?)?;
    let e_up_k = Invariants::new(error::sub(r_e, r_k)?, error::sub(d_e, e_k_twist.deg())?)?;
    let restriction = Invariants::new(error::sub(r_e, r_k)?, error::sub(d_e, d_k)?)?;
    let bracket = Invariants::new(r_k, error::add(d_k, t)?)?;
    let bidual_restriction = Invariants::new(
        error::sub(r_e, r_k)?,
        error::sub(error::sub(d_e, d_k)?, t)?,
    )?;

    let dual_total = dual_invariants(sl.total(), 0, ctx)?;
    // Deg((𝓔^∨)_k) = -Deg(𝓔_k) + (n+k-1) R(𝓔_k) deg(L) - h^0(Σ_k(𝓔))
    let dual_sub = Invariants::new(
        r_k,
        error::sub(
            error::add(-d_k, error::mul(error::add(n, k - 1)?, error::mul(r_k, l)?)?)?,
            t,
        )?,
    )?;
    // The torsion quotient Σ_k(𝓔^∨) has the same length t.
    let dual_bracket = Invariants::new(r_k, error::add(dual_sub.deg(), t)?)?;
    let dual_up_k = dual_invariants(restriction, t, ctx)?;
    let dual_bidual_restriction = Invariants::new(
        error::sub(r_e, r_k)?,
        error::sub(dual_total.deg(), dual_bracket.deg())?,
    )?;

    Ok(SliceDerived {
        e_k_twist,
        e_up_k,
        restriction,
        bracket,
        bidual_restriction,
        dual_total,
        dual_sub,
        dual_bracket,
        dual_up_k,
        dual_bidual_restriction,
    })
}

/// Verifies the slope identity relating the dual slice to the original:
///
/// `μ((𝓔^∨)|C_k) − μ((𝓔^∨)_k)`
/// `= μ(𝓔_k⊗Λ^{-k}) − μ(𝓔^(k)) + t·(1/R(𝓔^(k)) + 1/R(𝓔_k))`
///
/// Always true for valid slices; a `false` return signals an implementation
/// bug.
pub fn cor2_check(sl: &FiltrationSlice) -> Result<bool> {
    let d = slice_derived(sl)?;
    let dual_restriction = d.dual_total.minus(&d.dual_sub)?;
    let lhs = dual_restriction.slope()? - d.dual_sub.slope()?;
    let t = Rational::from_int(sl.t_k());
    let correction = t
        * (Rational::new(1, d.e_up_k.r() as i128)? + Rational::new(1, sl.sub().r() as i128)?);
    let rhs = d.e_k_twist.slope()? - d.e_up_k.slope()? + correction;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(r: i64, d: i64) -> Invariants {
        Invariants::new(r, d).unwrap()
    }

    #[test]
    fn dual_invariants_examples() {
        let ctx = CurveContext::new(3, 2, -2).unwrap();
        let d = dual_invariants(inv(3, 5), 0, &ctx).unwrap();
        assert_eq!((d.r(), d.deg()), (3, -17));
        let d = dual_invariants(inv(3, 5), 2, &ctx).unwrap();
        assert_eq!((d.r(), d.deg()), (3, -15));
        // involution on torsion-free invariants
        let dd = dual_invariants(dual_invariants(inv(3, 5), 0, &ctx).unwrap(), 0, &ctx).unwrap();
        assert_eq!(dd, inv(3, 5));
    }

    #[test]
    fn slice_derived_example() {
        // A rank-1 vector bundle on C_2 with restriction (1, 1).
        let ctx = CurveContext::new(2, 2, -2).unwrap();
        let sl = FiltrationSlice::new(ctx, inv(2, 0), inv(1, -1), 1, 0).unwrap();
        let d = slice_derived(&sl).unwrap();
        assert_eq!(d.e_up_k, inv(1, -1));
        assert_eq!(d.restriction, inv(1, 1));
        assert_eq!(d.bracket, inv(1, -1));
        assert_eq!(d.bidual_restriction, inv(1, 1));
        assert_eq!(d.dual_total, inv(2, -4));
        assert_eq!(d.dual_up_k, inv(1, -3));
        // t = 0: bracket = sub and bidual = restriction.
        assert_eq!(d.bracket, sl.sub());
        assert_eq!(d.bidual_restriction, d.restriction);
    }

    #[test]
    fn dual_sub_example() {
        let ctx = CurveContext::new(3, 2, -1).unwrap();
        let sl = FiltrationSlice::new(ctx, inv(3, 0), inv(1, -2), 1, 1).unwrap();
        let d = slice_derived(&sl).unwrap();
        assert_eq!(d.dual_sub, inv(1, -2));
    }

    #[test]
    fn cor2_examples() {
        let ctx = CurveContext::new(2, 2, -2).unwrap();
        let sl = FiltrationSlice::new(ctx, inv(2, 0), inv(1, -1), 1, 0).unwrap();
        assert!(cor2_check(&sl).unwrap());

        let ctx = CurveContext::new(3, 2, -1).unwrap();
        let sl = FiltrationSlice::new(ctx, inv(3, 0), inv(1, -2), 1, 1).unwrap();
        assert!(cor2_check(&sl).unwrap());
    }

    #[test]
    fn slice_validation() {
        let ctx = CurveContext::new(2, 2, -2).unwrap();
        assert!(FiltrationSlice::new(ctx, inv(2, 0), inv(2, 0), 1, 0).is_err());
        assert!(FiltrationSlice::new(ctx, inv(2, 0), inv(0, 0), 1, 0).is_err());
        assert!(FiltrationSlice::new(ctx, inv(2, 0), inv(1, 0), 2, 0).is_err());
        assert!(FiltrationSlice::new(ctx, inv(2, 0), inv(1, 0), 1, -1).is_err());
    }

    #[test]
    fn rank_bookkeeping() {
        let ctx = CurveContext::new(4, 1, -3).unwrap();
        let sl = FiltrationSlice::new(ctx, inv(5, 3), inv(2, -4), 2, 3).unwrap();
        let d = slice_derived(&sl).unwrap();
        assert_eq!(d.e_up_k.r() + sl.sub().r(), sl.total().r());
        assert_eq!(d.bracket.r(), sl.sub().r());
        assert_eq!(d.bidual_restriction.r(), sl.total().r() - sl.sub().r());
        assert_eq!(d.dual_total.r(), sl.total().r());
        // torsion bookkeeping
        assert_eq!(d.bracket.deg() - sl.sub().deg(), sl.t_k());
        assert_eq!(d.restriction.deg() - d.bidual_restriction.deg(), sl.t_k());
        assert_eq!(d.dual_bracket.deg() - d.dual_sub.deg(), sl.t_k());
    }
}
