use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};
use crate::invariants::Invariants;
use crate::rational::Rational;

/// The ambient data of a primitive multiple curve: the multiplicity `n`, the
/// genus `g` of the reduced curve `C`, and the degree `l` of the associated
/// line bundle `L` on `C`.
///
/// Throughout, `n >= 2` and `deg L < 0`. Both are enforced at construction;
/// there is no override.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CurveContextRepr", into = "CurveContextRepr")]
pub struct CurveContext {
    n: i64,
    g: i64,
    l: i64,
}

#[derive(Serialize, Deserialize)]
struct CurveContextRepr {
    n: i64,
    g: i64,
    l: i64,
}

impl From<CurveContext> for CurveContextRepr {
    fn from(c: CurveContext) -> Self {
        CurveContextRepr { n: c.n, g: c.g, l: c.l }
    }
}

impl TryFrom<CurveContextRepr> for CurveContext {
    type Error = Error;
    fn try_from(r: CurveContextRepr) -> Result<Self> {
        CurveContext::new(r.n, r.g, r.l)
    }
}

impl CurveContext {
    pub fn new(n: i64, g: i64, l: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!(
                "multiplicity must be >= 2, got {n}"
            )));
        }
        if g < 0 {
            return Err(Error::InvalidInput(format!("genus must be >= 0, got {g}")));
        }
        if l >= 0 {
            return Err(Error::InvalidInput(format!(
                "deg(L) must be negative, got {l}"
            )));
        }
        Ok(CurveContext { n, g, l })
    }

    /// Multiplicity of the curve.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// Genus of the reduced curve `C`.
    pub fn g(&self) -> i64 {
        self.g
    }

    /// Degree of the associated line bundle `L` (always negative).
    pub fn l(&self) -> i64 {
        self.l
    }
}

/// A vector bundle on the reduced curve `C`, known through its rank and
/// degree only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BundleRepr", into = "BundleRepr")]
pub struct BundleOnC {
    rank: i64,
    deg: i64,
}

#[derive(Serialize, Deserialize)]
struct BundleRepr {
    rank: i64,
    deg: i64,
}

impl From<BundleOnC> for BundleRepr {
    fn from(b: BundleOnC) -> Self {
        BundleRepr { rank: b.rank, deg: b.deg }
    }
}

impl TryFrom<BundleRepr> for BundleOnC {
    type Error = Error;
    fn try_from(r: BundleRepr) -> Result<Self> {
        BundleOnC::new(r.rank, r.deg)
    }
}

impl BundleOnC {
    pub fn new(rank: i64, deg: i64) -> Result<Self> {
        if rank < 0 {
            return Err(Error::InvalidInput(format!("rank must be >= 0, got {rank}")));
        }
        Ok(BundleOnC { rank, deg })
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn deg(&self) -> i64 {
        self.deg
    }

    /// Slope `deg/rank`; defined only for positive rank.
    pub fn slope(&self) -> Result<Rational> {
        if self.rank == 0 {
            return Err(Error::ZeroRank);
        }
        Rational::new(self.deg as i128, self.rank as i128)
    }

    /// Twist by `L^i`: the degree shifts by `rank * i * l`.
    pub fn twist(&self, i: i64, l: i64) -> Result<BundleOnC> {
        let shift = error::mul(error::mul(self.rank, i)?, l)?;
        Ok(BundleOnC {
            rank: self.rank,
            deg: error::add(self.deg, shift)?,
        })
    }

    /// The bundle's (rank, degree) as generalized invariants on `C`.
    pub fn invariants(&self) -> Invariants {
        Invariants::new(self.rank, self.deg).expect("rank >= 0 by construction")
    }
}
