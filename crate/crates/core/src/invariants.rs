use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};
use crate::rational::Rational;

/// The pair (generalized rank, generalized degree) of a coherent sheaf on a
/// primitive multiple curve: the rank and degree of the graded object of the
/// first canonical filtration, computed on the reduced curve `C`.
///
/// Both quantities are additive in exact sequences and invariant under
/// deformation, which is what makes purely numerical certificates possible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "InvariantsRepr", into = "InvariantsRepr")]
pub struct Invariants {
    r: i64,
    deg: i64,
}

#[derive(Serialize, Deserialize)]
struct InvariantsRepr {
    #[serde(rename = "R")]
    r: i64,
    #[serde(rename = "Deg")]
    deg: i64,
}

impl From<Invariants> for InvariantsRepr {
    fn from(i: Invariants) -> Self {
        InvariantsRepr { r: i.r, deg: i.deg }
    }
}

impl TryFrom<InvariantsRepr> for Invariants {
    type Error = Error;
    fn try_from(r: InvariantsRepr) -> Result<Self> {
        Invariants::new(r.r, r.deg)
    }
}

impl Invariants {
    pub fn new(r: i64, deg: i64) -> Result<Self> {
        if r < 0 {
            return Err(Error::InvalidInput(format!(
                "generalized rank must be >= 0, got {r}"
            )));
        }
        Ok(Invariants { r, deg })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn deg(&self) -> i64 {
        self.deg
    }

    /// The slope `Deg/R` as a normalized exact rational.
    pub fn slope(&self) -> Result<Rational> {
        if self.r == 0 {
            return Err(Error::ZeroRank);
        }
        Rational::new(self.deg as i128, self.r as i128)
    }

    /// Componentwise sum (invariants of an extension of the two arguments).
    pub fn plus(&self, other: &Invariants) -> Result<Invariants> {
        Invariants::new(error::add(self.r, other.r)?, error::add(self.deg, other.deg)?)
    }

    /// Componentwise difference; fails if the rank would go negative.
    pub fn minus(&self, other: &Invariants) -> Result<Invariants> {
        Invariants::new(error::sub(self.r, other.r)?, error::sub(self.deg, other.deg)?)
    }
}

/// An ordered complex of at least three terms, asserted exact at the
/// invariant level. The witness carries no maps; only the alternating-sum
/// consistency of (R, Deg) is checkable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WitnessRepr", into = "WitnessRepr")]
pub struct ExactSeqWitness {
    terms: Vec<Invariants>,
}

#[derive(Serialize, Deserialize)]
struct WitnessRepr {
    terms: Vec<Invariants>,
}

impl From<ExactSeqWitness> for WitnessRepr {
    fn from(w: ExactSeqWitness) -> Self {
        WitnessRepr { terms: w.terms }
    }
}

impl TryFrom<WitnessRepr> for ExactSeqWitness {
    type Error = Error;
    fn try_from(r: WitnessRepr) -> Result<Self> {
        ExactSeqWitness::new(r.terms)
    }
}

impl ExactSeqWitness {
    pub fn new(terms: Vec<Invariants>) -> Result<Self> {
        if terms.len() < 3 {
            return Err(Error::InvalidInput(format!(
                "exact sequence witness needs >= 3 terms, got {}",
                terms.len()
            )));
        }
        Ok(ExactSeqWitness { terms })
    }

    pub fn terms(&self) -> &[Invariants] {
        &self.terms
    }
}

/// True iff the alternating sums of both R and Deg over the terms vanish.
///
/// For a short exact sequence 0 → A → B → C → 0 written as [A, B, C] this is
/// exactly additivity: R(B) = R(A) + R(C) and Deg(B) = Deg(A) + Deg(C).
pub fn additivity_check(w: &ExactSeqWitness) -> bool {
    let mut r_sum: i128 = 0;
    let mut d_sum: i128 = 0;
    for (i, t) in w.terms().iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        r_sum += sign * t.r() as i128;
        d_sum += sign * t.deg() as i128;
    }
    r_sum == 0 && d_sum == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_examples() {
        // mu(I_P) at deg L = -1: (R=2, Deg=l-1) -> -1
        let ideal = Invariants::new(2, -2).unwrap();
        assert_eq!(ideal.slope().unwrap(), Rational::from_int(-1));

        let flat = Invariants::new(5, 0).unwrap();
        assert_eq!(flat.slope().unwrap(), Rational::from_int(0));

        let degenerate = Invariants::new(0, 3).unwrap();
        assert_eq!(degenerate.slope(), Err(Error::ZeroRank));
    }

    #[test]
    fn additivity_short_exact() {
        let w = ExactSeqWitness::new(vec![
            Invariants::new(1, 2).unwrap(),
            Invariants::new(3, 5).unwrap(),
            Invariants::new(2, 3).unwrap(),
        ])
        .unwrap();
        assert!(additivity_check(&w));

        let bad = ExactSeqWitness::new(vec![
            Invariants::new(1, 2).unwrap(),
            Invariants::new(3, 5).unwrap(),
            Invariants::new(2, 2).unwrap(),
        ])
        .unwrap();
        assert!(!additivity_check(&bad));
    }

    #[test]
    fn witness_needs_three_terms() {
        assert!(ExactSeqWitness::new(vec![
            Invariants::new(1, 0).unwrap(),
            Invariants::new(1, 0).unwrap(),
        ])
        .is_err());
    }
}
