//! Exact-arithmetic invariants of coherent sheaves on primitive multiple
//! curves, with inequality-based (semi-)stability certificates and
//! moduli-space bookkeeping.
//!
//! Everything is computed over exact integers and rationals; there is no
//! floating point anywhere in this crate. All types are immutable values and
//! all operations are pure functions, so the API is safe for unrestricted
//! concurrent use.

pub mod curve;
pub mod duality;
pub mod error;
pub mod invariants;
pub mod moduli;
pub mod qlf;
pub mod rational;
pub mod rigid;
pub mod stability;
pub mod torsion;
pub mod vector_bundle;

pub use curve::{BundleOnC, CurveContext};
pub use duality::{cor2_check, dual_invariants, slice_derived, FiltrationSlice, SliceDerived};
pub use error::{Error, Result};
pub use invariants::{additivity_check, ExactSeqWitness, Invariants};
pub use qlf::{QlfType, RigidClass};
pub use rational::Rational;
pub use rigid::RigidSheaf;
pub use stability::{
    equcc3_check, eqx_check, hn_analysis, lemma_oracle, lemma_slopes, theo1_certify,
    theo2_certify, theo3_certify, theo5_certify, Certificate, Check, EquCc3Report, EqxReport,
    HnReport, LemmaInstance, LemmaReport, Premise, PremiseOrigin, Relation, StabilityStatus,
};
pub use torsion::TorsionLengths;
pub use vector_bundle::VectorBundleCn;
