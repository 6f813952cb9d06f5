use serde::{Deserialize, Serialize};

use crate::curve::CurveContext;
use crate::error::{self, Error, Result};

/// The local type `(m_1, ..., m_n)` of a quasi locally free sheaf: the sheaf
/// is locally isomorphic to ⊕ m_i O_i.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QlfType {
    m: Vec<i64>,
}

/// Classification of a quasi-locally-free type against the rigid pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RigidClass {
    /// Locally free of rank `a`: all weight at level `n`.
    LocallyFree { a: i64 },
    /// Locally isomorphic to `a O_n ⊕ O_k` with `1 <= k < n`.
    Rigid { a: i64, k: i64 },
    NotRigid,
}

impl QlfType {
    pub fn new(ctx: &CurveContext, m: Vec<i64>) -> Result<Self> {
        if m.len() as i64 != ctx.n() {
            return Err(Error::InvalidInput(format!(
                "type length {} does not match multiplicity {}",
                m.len(),
                ctx.n()
            )));
        }
        if m.iter().any(|&mi| mi < 0) {
            return Err(Error::InvalidInput("type entries must be >= 0".into()));
        }
        if m.iter().all(|&mi| mi == 0) {
            return Err(Error::InvalidInput("type entries must not all be zero".into()));
        }
        Ok(QlfType { m })
    }

    pub fn entries(&self) -> &[i64] {
        &self.m
    }

    /// Generalized rank of the type: Σ i·m_i (1-based weights).
    pub fn rank(&self) -> Result<i64> {
        let mut total = 0i64;
        for (idx, &mi) in self.m.iter().enumerate() {
            total = error::add(total, error::mul(idx as i64 + 1, mi)?)?;
        }
        Ok(total)
    }

    /// Matches the type against the rigid pattern: locally free (all weight
    /// at level n), or `m_n = a >= 1` with a single `m_k = 1` below it.
    pub fn classify(&self) -> RigidClass {
        let n = self.m.len();
        let a = self.m[n - 1];
        let below: Vec<(usize, i64)> = self.m[..n - 1]
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, mi)| mi != 0)
            .collect();
        match below.as_slice() {
            [] if a >= 1 => RigidClass::LocallyFree { a },
            [(idx, 1)] if a >= 1 => RigidClass::Rigid {
                a,
                k: *idx as i64 + 1,
            },
            _ => RigidClass::NotRigid,
        }
    }
}
