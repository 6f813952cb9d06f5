use serde::{Deserialize, Serialize};

use crate::curve::CurveContext;
use crate::error::{Error, Result};

/// A torsion sheaf on `C_n`, modeled up to the lengths of its first-filtration
/// graded pieces: `t_i = h^0(G_i(T))` for `i = 0..n-1`. Finer module
/// structure is invisible to every formula in scope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionLengths {
    t: Vec<i64>,
}

impl TorsionLengths {
    pub fn new(ctx: &CurveContext, t: Vec<i64>) -> Result<Self> {
        if t.len() as i64 != ctx.n() {
            return Err(Error::InvalidInput(format!(
                "torsion length vector of size {} does not match multiplicity {}",
                t.len(),
                ctx.n()
            )));
        }
        if t.iter().any(|&ti| ti < 0) {
            return Err(Error::InvalidInput("torsion lengths must be >= 0".into()));
        }
        Ok(TorsionLengths { t })
    }

    pub fn lengths(&self) -> &[i64] {
        &self.t
    }

    /// Total length `h^0(T) = Σ t_i`.
    pub fn total(&self) -> i64 {
        self.t.iter().sum()
    }

    /// The graded lengths of the dual torsion sheaf `D_n(T)`.
    ///
    /// At this level of modeling duality is the identity: each graded piece of
    /// the dual has the length of the corresponding piece of the original, and
    /// the total length is preserved. The functor is an involution.
    pub fn dual(&self) -> TorsionLengths {
        self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_preserves_lengths_and_total() {
        let ctx = CurveContext::new(3, 0, -1).unwrap();
        let t = TorsionLengths::new(&ctx, vec![2, 1, 0]).unwrap();
        let d = t.dual();
        assert_eq!(d.lengths(), &[2, 1, 0]);
        assert_eq!(d.total(), 3);
        // involution
        assert_eq!(d.dual(), t);
    }

    #[test]
    fn zero_sheaf_is_fixed() {
        let ctx = CurveContext::new(4, 0, -1).unwrap();
        let t = TorsionLengths::new(&ctx, vec![0, 0, 0, 0]).unwrap();
        assert_eq!(t.dual(), t);
        assert_eq!(t.total(), 0);
    }

    #[test]
    fn validation() {
        let ctx = CurveContext::new(3, 0, -1).unwrap();
        assert!(TorsionLengths::new(&ctx, vec![1, 2]).is_err());
        assert!(TorsionLengths::new(&ctx, vec![1, -1, 0]).is_err());
    }
}
