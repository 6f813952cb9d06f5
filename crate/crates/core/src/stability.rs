//! Certificate inference for (semi-)stability on primitive multiple curves.
//!
//! Each rule encodes a sufficient criterion as exact inequality checks over
//! declared premises. Rules never conclude instability: when a criterion
//! fails the verdict is `Unknown`.

use serde::{Deserialize, Serialize};

use crate::curve::{BundleOnC, CurveContext};
use crate::duality::{slice_derived, FiltrationSlice};
use crate::error::{self, Error, Result};
use crate::invariants::Invariants;
use crate::rational::Rational;
use crate::rigid::RigidSheaf;
use crate::vector_bundle::VectorBundleCn;

/// Verdict lattice: `Stable` implies `Semistable`; `Unknown` is the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StabilityStatus {
    Unknown,
    Semistable,
    Stable,
}

impl StabilityStatus {
    pub fn at_least_semistable(self) -> bool {
        self >= StabilityStatus::Semistable
    }

    pub fn is_stable(self) -> bool {
        self == StabilityStatus::Stable
    }
}

/// How a premise status was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PremiseOrigin {
    /// Asserted by the caller.
    Declared,
    /// Automatic: a rank-1 bundle on `C` is always stable.
    RankOne,
    /// Produced by another rule in this crate.
    Inferred,
}

/// A stability assumption about one of the associated sheaves of a rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Premise {
    pub subject: String,
    pub status: StabilityStatus,
    pub origin: PremiseOrigin,
}

impl Premise {
    pub fn declared(subject: impl Into<String>, status: StabilityStatus) -> Self {
        Premise {
            subject: subject.into(),
            status,
            origin: PremiseOrigin::Declared,
        }
    }

    /// The one automatic upgrade: line bundles on `C` are stable. Only valid
    /// when the subject really is a rank-1 bundle on the reduced curve.
    pub fn rank_one(subject: impl Into<String>) -> Self {
        Premise {
            subject: subject.into(),
            status: StabilityStatus::Stable,
            origin: PremiseOrigin::RankOne,
        }
    }

    pub fn unknown(subject: impl Into<String>) -> Self {
        Premise {
            subject: subject.into(),
            status: StabilityStatus::Unknown,
            origin: PremiseOrigin::Declared,
        }
    }
}

/// Comparison operator of an evaluated inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Le,
    Lt,
    Ge,
    Gt,
    Eq,
}

impl Relation {
    fn eval(self, left: Rational, right: Rational) -> bool {
        match self {
            Relation::Le => left <= right,
            Relation::Lt => left < right,
            Relation::Ge => left >= right,
            Relation::Gt => left > right,
            Relation::Eq => left == right,
        }
    }
}

/// One evaluated inequality of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub description: String,
    pub left: Rational,
    pub relation: Relation,
    pub right: Rational,
    pub holds: bool,
}

impl Check {
    fn new(description: impl Into<String>, left: Rational, relation: Relation, right: Rational) -> Self {
        Check {
            holds: relation.eval(left, right),
            description: description.into(),
            left,
            relation,
            right,
        }
    }
}

/// The output of a rule: a verdict together with the premises consumed and
/// the inequalities evaluated. A non-`Unknown` conclusion implies every
/// listed check holds and every premise status sufficed for the rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub conclusion: StabilityStatus,
    pub rule: String,
    pub premises: Vec<Premise>,
    pub checks: Vec<Check>,
}

/// The six-sheaf configuration of the slope lemma: quotients A'', B'', E'' of
/// A, B, E with `R(E) = R(A) + R(B)`, `Deg(E) = Deg(A) + Deg(B)` and
/// likewise for the double-primed terms. All six ranks are positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LemmaRepr", into = "LemmaRepr")]
pub struct LemmaInstance {
    a: Invariants,
    a2: Invariants,
    b: Invariants,
    b2: Invariants,
    e: Invariants,
    e2: Invariants,
}

#[derive(Serialize, Deserialize)]
struct LemmaRepr {
    a: Invariants,
    a2: Invariants,
    b: Invariants,
    b2: Invariants,
}

impl From<LemmaInstance> for LemmaRepr {
    fn from(i: LemmaInstance) -> Self {
        LemmaRepr {
            a: i.a,
            a2: i.a2,
            b: i.b,
            b2: i.b2,
        }
    }
}

impl TryFrom<LemmaRepr> for LemmaInstance {
    type Error = Error;
    fn try_from(r: LemmaRepr) -> Result<Self> {
        LemmaInstance::new(r.a, r.a2, r.b, r.b2)
    }
}

impl LemmaInstance {
    /// Builds the instance from A, A'', B, B''; E and E'' are the sums.
    pub fn new(a: Invariants, a2: Invariants, b: Invariants, b2: Invariants) -> Result<Self> {
        for inv in [&a, &a2, &b, &b2] {
            if inv.r() == 0 {
                return Err(Error::InvalidInput(
                    "lemma instance requires positive ranks".into(),
                ));
            }
        }
        Ok(LemmaInstance {
            a,
            a2,
            b,
            b2,
            e: a.plus(&b)?,
            e2: a2.plus(&b2)?,
        })
    }

    pub fn a(&self) -> Invariants {
        self.a
    }
    pub fn a2(&self) -> Invariants {
        self.a2
    }
    pub fn b(&self) -> Invariants {
        self.b
    }
    pub fn b2(&self) -> Invariants {
        self.b2
    }
    pub fn e(&self) -> Invariants {
        self.e
    }
    pub fn e2(&self) -> Invariants {
        self.e2
    }
}

/// Evaluation of the slope lemma on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub hypotheses_hold: bool,
    pub strict_hypothesis: bool,
    pub conclusion_holds: bool,
    pub strict_conclusion: bool,
}

/// Hypotheses: `μ(B) >= μ(A)`, `μ(A'') >= μ(A)`, `μ(B'') >= μ(B)` and the
/// rank-ratio bound `R(E'')/R(E) >= R(A'')/R(A)`. Conclusion:
/// `μ(E'') >= μ(E)`, strict when one of the middle hypotheses is strict.
pub fn lemma_slopes(inst: &LemmaInstance) -> LemmaReport {
    let mu = |i: Invariants| i.slope().expect("ranks positive by construction");
    let ratio = |num: i64, den: i64| {
        Rational::new(num as i128, den as i128).expect("ranks positive by construction")
    };

    let hyp = mu(inst.b) >= mu(inst.a)
        && mu(inst.a2) >= mu(inst.a)
        && mu(inst.b2) >= mu(inst.b)
        && ratio(inst.e2.r(), inst.e.r()) >= ratio(inst.a2.r(), inst.a.r());
    let strict_hyp = hyp && (mu(inst.a2) > mu(inst.a) || mu(inst.b2) > mu(inst.b));

    LemmaReport {
        hypotheses_hold: hyp,
        strict_hypothesis: strict_hyp,
        conclusion_holds: mu(inst.e2) >= mu(inst.e),
        strict_conclusion: mu(inst.e2) > mu(inst.e),
    }
}

const DEFAULT_ENUM_CAP: u128 = 100_000_000;

/// Exhaustive counterexample search for the slope lemma over all instances
/// with ranks in `[1, rank_max]` and degrees in `[-deg_max, deg_max]`.
/// Returns the instances where the hypotheses hold but the conclusion fails
/// (non-strict or strict form). Expected empty: the lemma is a theorem, so a
/// non-empty result means the slope comparator is buggy.
pub fn lemma_oracle(rank_max: i64, deg_max: i64) -> Result<Vec<LemmaInstance>> {
    lemma_oracle_with_cap(rank_max, deg_max, DEFAULT_ENUM_CAP)
}

pub fn lemma_oracle_with_cap(
    rank_max: i64,
    deg_max: i64,
    cap: u128,
) -> Result<Vec<LemmaInstance>> {
    if !(1..=4).contains(&rank_max) {
        return Err(Error::InvalidInput(format!(
            "rank_max must be in [1, 4], got {rank_max}"
        )));
    }
    if !(0..=6).contains(&deg_max) {
        return Err(Error::InvalidInput(format!(
            "deg_max must be in [0, 6], got {deg_max}"
        )));
    }
    let deg_span = (2 * deg_max + 1) as u128;
    let size = (rank_max as u128).pow(4) * deg_span.pow(4);
    if size > cap {
        return Err(Error::BudgetExceeded { size, cap });
    }

    let ranks: Vec<i64> = (1..=rank_max).collect();
    let degs: Vec<i64> = (-deg_max..=deg_max).collect();
    let mut violations = Vec::new();
    for &ra in &ranks {
        for &da in &degs {
            for &rb in &ranks {
                for &db in &degs {
                    for &ra2 in &ranks {
                        for &da2 in &degs {
                            for &rb2 in &ranks {
                                for &db2 in &degs {
                                    let inst = LemmaInstance::new(
                                        Invariants::new(ra, da)?,
                                        Invariants::new(ra2, da2)?,
                                        Invariants::new(rb, db)?,
                                        Invariants::new(rb2, db2)?,
                                    )?;
                                    let rep = lemma_slopes(&inst);
                                    if (rep.hypotheses_hold && !rep.conclusion_holds)
                                        || (rep.strict_hypothesis && !rep.strict_conclusion)
                                    {
                                        violations.push(inst);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(violations)
}

/// The two slope inequalities gating the filtration-slice rule:
/// `μ(𝓔^(k)) <= μ(𝓔)` and `μ((𝓔^∨)^(k)) <= μ(𝓔^∨)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqxReport {
    pub first: bool,
    pub second: bool,
    pub first_strict: bool,
    pub second_strict: bool,
}

pub fn eqx_check(sl: &FiltrationSlice) -> Result<EqxReport> {
    let d = slice_derived(sl)?;
    let mu_total = sl.total().slope()?;
    let mu_up = d.e_up_k.slope()?;
    let mu_dual_total = d.dual_total.slope()?;
    let mu_dual_up = d.dual_up_k.slope()?;
    Ok(EqxReport {
        first: mu_up <= mu_total,
        second: mu_dual_up <= mu_dual_total,
        first_strict: mu_up < mu_total,
        second_strict: mu_dual_up < mu_dual_total,
    })
}

fn conclude(
    semistable_ok: bool,
    stable_ok: bool,
    premises: &[&Premise],
    stable_premises_ok: bool,
) -> StabilityStatus {
    let all_semistable = premises.iter().all(|p| p.status.at_least_semistable());
    if stable_ok && all_semistable && stable_premises_ok {
        StabilityStatus::Stable
    } else if semistable_ok && all_semistable {
        StabilityStatus::Semistable
    } else {
        StabilityStatus::Unknown
    }
}

/// Filtration-slice rule. If both gate inequalities hold and the four
/// associated sheaves `𝓔[k]`, `(𝓔|C_k)^∨∨`, `(𝓔^∨)[k]`,
/// `((𝓔^∨)|C_k)^∨∨` are semi-stable, `𝓔` is semi-stable. With both
/// inequalities strict, the stable verdict requires all four premises stable
/// by default; `relaxed` accepts one stable member of each pair instead (the
/// others still semi-stable).
pub fn theo1_certify(
    sl: &FiltrationSlice,
    p_bracket: &Premise,
    p_bidual: &Premise,
    p_dual_bracket: &Premise,
    p_dual_bidual: &Premise,
    relaxed: bool,
) -> Result<Certificate> {
    let eqx = eqx_check(sl)?;
    let d = slice_derived(sl)?;

    let stable_premises_ok = if relaxed {
        (p_bracket.status.is_stable() || p_bidual.status.is_stable())
            && (p_dual_bracket.status.is_stable() || p_dual_bidual.status.is_stable())
    } else {
        [p_bracket, p_bidual, p_dual_bracket, p_dual_bidual]
            .iter()
            .all(|p| p.status.is_stable())
    };

    let premises = [p_bracket, p_bidual, p_dual_bracket, p_dual_bidual];
    let conclusion = conclude(
        eqx.first && eqx.second,
        eqx.first_strict && eqx.second_strict,
        &premises,
        stable_premises_ok,
    );

    let mut checks = vec![
        Check::new(
            "mu(E^(k)) <= mu(E)",
            d.e_up_k.slope()?,
            Relation::Le,
            sl.total().slope()?,
        ),
        Check::new(
            "mu((E^v)^(k)) <= mu(E^v)",
            d.dual_up_k.slope()?,
            Relation::Le,
            d.dual_total.slope()?,
        ),
    ];
    if conclusion == StabilityStatus::Stable {
        checks.push(Check::new(
            "mu(E^(k)) < mu(E)",
            d.e_up_k.slope()?,
            Relation::Lt,
            sl.total().slope()?,
        ));
        checks.push(Check::new(
            "mu((E^v)^(k)) < mu(E^v)",
            d.dual_up_k.slope()?,
            Relation::Lt,
            d.dual_total.slope()?,
        ));
    }

    Ok(Certificate {
        conclusion,
        rule: if relaxed { "theo1-relaxed" } else { "theo1" }.into(),
        premises: premises.into_iter().cloned().collect(),
        checks,
    })
}

/// Vector-bundle rule: a vector bundle on `C_n` inherits the (semi-)stability
/// of its restriction to `C`. The gate inequalities hold automatically since
/// the graded slopes `μ(E) + i·l` strictly decrease (l < 0); the checks
/// record that chain.
pub fn theo2_certify(v: &VectorBundleCn, p_restriction: &Premise) -> Result<Certificate> {
    let graded = v.graded()?;
    let mut checks = Vec::new();
    for i in 0..graded.len() - 1 {
        checks.push(Check::new(
            format!("mu(E*L^{}) > mu(E*L^{})", i, i + 1),
            graded[i].slope()?,
            Relation::Gt,
            graded[i + 1].slope()?,
        ));
    }
    Ok(Certificate {
        conclusion: p_restriction.status,
        rule: "theo2".into(),
        premises: vec![p_restriction.clone()],
        checks,
    })
}

/// The slope-band inequalities gating the rigid-type rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquCc3Report {
    /// `μ(V) + (n/2)·l <= μ(F) <= μ(E) − (n/2)·l`
    pub holds: bool,
    pub strict: bool,
    /// `μ(E) <= μ(F) <= μ(E) − (n−k)·l/(a+1)`, the equivalent combined band
    /// once the forced inequalities `μ(E) <= μ(F) <= μ(V)` are added.
    pub combined: bool,
    pub combined_strict: bool,
}

pub fn equcc3_check(s: &RigidSheaf) -> Result<EquCc3Report> {
    let mu_e = s.e().slope()?;
    let mu_f = s.f().slope()?;
    let mu_v = s.v()?.slope()?;
    let half_nl = Rational::new(s.ctx().n() as i128, 2)? * Rational::from_int(s.ctx().l());

    let lo = mu_v + half_nl;
    let hi = mu_e - half_nl;
    let holds = lo <= mu_f && mu_f <= hi;
    let strict = lo < mu_f && mu_f < hi;

    // mu(V) = mu(E) - (n-k)l/(a+1), so the combined upper bound is mu(V).
    let combined = mu_e <= mu_f && mu_f <= mu_v;
    let combined_strict = mu_e < mu_f && mu_f < mu_v;

    Ok(EquCc3Report {
        holds,
        strict,
        combined,
        combined_strict,
    })
}

/// Rigid-type rule: a quasi locally free sheaf of rigid type whose slope band
/// holds and whose three associated bundles E, F, V are semi-stable is
/// semi-stable; strict band and stable premises give stability.
pub fn theo3_certify(
    s: &RigidSheaf,
    p_e: &Premise,
    p_f: &Premise,
    p_v: &Premise,
) -> Result<Certificate> {
    let rep = equcc3_check(s)?;
    let mu_e = s.e().slope()?;
    let mu_f = s.f().slope()?;
    let mu_v = s.v()?.slope()?;
    let half_nl = Rational::new(s.ctx().n() as i128, 2)? * Rational::from_int(s.ctx().l());

    let premises = [p_e, p_f, p_v];
    let conclusion = conclude(rep.holds, rep.strict, &premises, premises.iter().all(|p| p.status.is_stable()));

    let strict = conclusion == StabilityStatus::Stable;
    let rel = if strict { Relation::Lt } else { Relation::Le };
    let op = if strict { "<" } else { "<=" };
    let checks = vec![
        Check::new(
            format!("mu(V) + (n/2) degL {op} mu(F)"),
            mu_v + half_nl,
            rel,
            mu_f,
        ),
        Check::new(
            format!("mu(F) {op} mu(E) - (n/2) degL"),
            mu_f,
            rel,
            mu_e - half_nl,
        ),
    ];

    Ok(Certificate {
        conclusion,
        rule: "theo3".into(),
        premises: premises.into_iter().cloned().collect(),
        checks,
    })
}

/// Kernel-of-point-map rule: for `𝓔_φ = ker(𝔼 → O_Z)` with `z = h^0(O_Z)`,
/// the bound `z <= -rank(E)·deg(L)` together with semi-stability of `E` and
/// `E_φ` gives semi-stability of `𝓔_φ` (strict bound and stable premises
/// give stability). The checks also record the invariants of `𝓔_φ`.
pub fn theo5_certify(
    ctx: &CurveContext,
    restriction: BundleOnC,
    z: i64,
    p_e: &Premise,
    p_ephi: &Premise,
) -> Result<Certificate> {
    if restriction.rank() < 1 {
        return Err(Error::InvalidInput("restriction rank must be >= 1".into()));
    }
    if z < 0 {
        return Err(Error::InvalidInput(format!("z must be >= 0, got {z}")));
    }
    let bound = error::mul(-restriction.rank(), ctx.l())?;
    let vb = VectorBundleCn::new(*ctx, restriction)?;
    let vb_inv = vb.invariants()?;
    // additivity on 0 -> E_phi -> E -> O_Z -> 0
    let ephi_inv = Invariants::new(vb_inv.r(), error::sub(vb_inv.deg(), z)?)?;

    let premises = [p_e, p_ephi];
    let conclusion = conclude(
        z <= bound,
        z < bound,
        &premises,
        premises.iter().all(|p| p.status.is_stable()),
    );

    let strict = conclusion == StabilityStatus::Stable;
    let mut checks = vec![Check::new(
        if strict {
            "z < -rank(E) degL"
        } else {
            "z <= -rank(E) degL"
        },
        Rational::from_int(z),
        if strict { Relation::Lt } else { Relation::Le },
        Rational::from_int(bound),
    )];
    checks.push(Check::new(
        "R(E_phi)",
        Rational::from_int(ephi_inv.r()),
        Relation::Eq,
        Rational::from_int(ephi_inv.r()),
    ));
    checks.push(Check::new(
        "Deg(E_phi) = Deg(E) - z",
        Rational::from_int(ephi_inv.deg()),
        Relation::Eq,
        Rational::from_int(ephi_inv.deg()),
    ));

    Ok(Certificate {
        conclusion,
        rule: "theo5".into(),
        premises: premises.into_iter().cloned().collect(),
        checks,
    })
}

/// Slope arithmetic of the rank-2 extension `0 → I_P⊗𝔻 → 𝔼 → I_P → 0` on a
/// double curve, with `d_D = deg(𝔻|C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HnReport {
    /// Slope of the subsheaf `I_P ⊗ 𝔻`.
    pub mu_sub: Rational,
    /// Slope of `𝔼`.
    pub mu_total: Rational,
    /// Degree of `𝔼|C`.
    pub delta_restriction: i64,
    /// True iff the subsheaf destabilizes `𝔼` (equivalently d_D > 0).
    pub destabilizes: bool,
    /// True iff the two slopes tie (d_D = 0).
    pub semistable_boundary: bool,
}

/// Hard-coded rank-2, n = 2 example calculator: `μ(I_P) = (l−1)/2`, the
/// subsheaf slope shifts by `d_D`, the total slope by `d_D/2`.
pub fn hn_analysis(ctx: &CurveContext, d_d: i64) -> Result<HnReport> {
    if ctx.n() != 2 {
        return Err(Error::WrongMultiplicity(ctx.n()));
    }
    let mu_ideal = Rational::new(ctx.l() as i128 - 1, 2)?;
    let mu_sub = mu_ideal + Rational::from_int(d_d);
    let mu_total = mu_ideal + Rational::new(d_d as i128, 2)?;
    Ok(HnReport {
        mu_sub,
        mu_total,
        delta_restriction: error::sub(d_d, 1)?,
        destabilizes: mu_sub > mu_total,
        semistable_boundary: d_d == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(r: i64, d: i64) -> Invariants {
        Invariants::new(r, d).unwrap()
    }

    fn stable(s: &str) -> Premise {
        Premise::declared(s, StabilityStatus::Stable)
    }

    fn semistable(s: &str) -> Premise {
        Premise::declared(s, StabilityStatus::Semistable)
    }

    #[test]
    fn lemma_slopes_examples() {
        let i = LemmaInstance::new(inv(1, 0), inv(1, 0), inv(1, 1), inv(1, 2)).unwrap();
        let rep = lemma_slopes(&i);
        assert!(rep.hypotheses_hold && rep.strict_hypothesis);
        assert!(rep.conclusion_holds && rep.strict_conclusion);
        assert_eq!(i.e(), inv(2, 1));
        assert_eq!(i.e2(), inv(2, 2));

        // identity case: hypotheses hold non-strictly, slopes tie
        let i = LemmaInstance::new(inv(1, 0), inv(1, 0), inv(1, 1), inv(1, 1)).unwrap();
        let rep = lemma_slopes(&i);
        assert!(rep.hypotheses_hold && !rep.strict_hypothesis);
        assert!(rep.conclusion_holds && !rep.strict_conclusion);

        // rank-ratio test fails: R(E'')/R(E) = 3/2 < R(A'')/R(A) = 2
        let i = LemmaInstance::new(inv(1, 0), inv(2, 0), inv(1, 1), inv(1, 1)).unwrap();
        assert!(!lemma_slopes(&i).hypotheses_hold);
    }

    #[test]
    fn lemma_oracle_small() {
        assert!(lemma_oracle(2, 3).unwrap().is_empty());
        assert!(lemma_oracle(0, 3).is_err());
    }

    #[test]
    fn lemma_oracle_budget() {
        assert!(matches!(
            lemma_oracle_with_cap(2, 2, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    fn vb_slice() -> FiltrationSlice {
        let ctx = CurveContext::new(2, 2, -2).unwrap();
        FiltrationSlice::new(ctx, inv(2, 0), inv(1, -1), 1, 0).unwrap()
    }

    #[test]
    fn eqx_example() {
        let rep = eqx_check(&vb_slice()).unwrap();
        // first: -1 <= 0, second: -3 <= -2
        assert!(rep.first && rep.second);
        assert!(rep.first_strict && rep.second_strict);
    }

    #[test]
    fn eqx_tie_case() {
        // total = (2, l), sub = (1, l) with k = 1, t = 0 on C_2:
        // e_up_k = (1, l - (l - l)) ... constructed so slopes tie.
        let ctx = CurveContext::new(2, 2, -2).unwrap();
        // mu(e_up_k) = mu(total) requires Deg(e_up_k)/1 = Deg/2.
        // total = (2, -2), sub = (1, -3): e_k_twist = (1, -1), e_up_k = (1, -1).
        let sl = FiltrationSlice::new(ctx, inv(2, -2), inv(1, -3), 1, 0).unwrap();
        let rep = eqx_check(&sl).unwrap();
        assert!(rep.first && !rep.first_strict);
    }

    #[test]
    fn theo1_examples() {
        let sl = vb_slice();
        let cert = theo1_certify(
            &sl,
            &stable("bracket"),
            &stable("bidual_restriction"),
            &stable("dual_bracket"),
            &stable("dual_bidual_restriction"),
            false,
        )
        .unwrap();
        assert_eq!(cert.conclusion, StabilityStatus::Stable);
        assert!(cert.checks.iter().all(|c| c.holds));

        let cert = theo1_certify(
            &sl,
            &Premise::unknown("bracket"),
            &stable("bidual_restriction"),
            &stable("dual_bracket"),
            &stable("dual_bidual_restriction"),
            false,
        )
        .unwrap();
        assert_eq!(cert.conclusion, StabilityStatus::Unknown);
    }

    #[test]
    fn theo1_relaxed_vs_strict_premises() {
        let sl = vb_slice();
        let p = [
            stable("bracket"),
            semistable("bidual_restriction"),
            stable("dual_bracket"),
            semistable("dual_bidual_restriction"),
        ];
        let strict_form = theo1_certify(&sl, &p[0], &p[1], &p[2], &p[3], false).unwrap();
        assert_eq!(strict_form.conclusion, StabilityStatus::Semistable);
        let relaxed_form = theo1_certify(&sl, &p[0], &p[1], &p[2], &p[3], true).unwrap();
        assert_eq!(relaxed_form.conclusion, StabilityStatus::Stable);
    }

    #[test]
    fn theo2_examples() {
        let ctx = CurveContext::new(3, 2, -1).unwrap();
        let v = VectorBundleCn::new(ctx, BundleOnC::new(2, 1).unwrap()).unwrap();
        let cert = theo2_certify(&v, &stable("restriction")).unwrap();
        assert_eq!(cert.conclusion, StabilityStatus::Stable);
        // graded slopes 1/2, -1/2, -3/2
        assert_eq!(cert.checks.len(), 2);
        assert!(cert.checks.iter().all(|c| c.holds));
        assert_eq!(cert.checks[0].left, Rational::new(1, 2).unwrap());
        assert_eq!(cert.checks[1].right, Rational::new(-3, 2).unwrap());

        // rank-1 restriction: stable without declaration
        let v = VectorBundleCn::new(ctx, BundleOnC::new(1, 0).unwrap()).unwrap();
        let cert = theo2_certify(&v, &Premise::rank_one("restriction")).unwrap();
        assert_eq!(cert.conclusion, StabilityStatus::Stable);

        let cert = theo2_certify(&v, &Premise::unknown("restriction")).unwrap();
        assert_eq!(cert.conclusion, StabilityStatus::Unknown);
    }

    #[test]
    fn equcc3_example() {
        let ctx = CurveContext::new(2, 2, -3).unwrap();
        let s = RigidSheaf::new(ctx, 1, 1, 0, 1).unwrap();
        let rep = equcc3_check(&s).unwrap();
        assert!(rep.holds && rep.strict);
        assert!(rep.combined && rep.combined_strict);

        // boundary tie: mu(F) = mu(E) = 0
        let s = RigidSheaf::new(ctx, 1, 1, 0, 0).unwrap();
        let rep = equcc3_check(&s).unwrap();
        assert!(rep.combined && !rep.combined_strict);
    }

    #[test]
    fn theo3_examples() {
        let ctx = CurveContext::new(2, 2, -3).unwrap();
        let s = RigidSheaf::new(ctx, 1, 1, 0, 1).unwrap();
        let cert = theo3_certify(&s, &stable("E"), &stable("F"), &stable("V")).unwrap();
        assert_eq!(cert.conclusion, StabilityStatus::Stable);

        // band fails: delta far above it
        let s = RigidSheaf::new(ctx, 1, 1, 0, 10).unwrap();
        let cert = theo3_certify(&s, &stable("E"), &stable("F"), &stable("V")).unwrap();
        assert_eq!(cert.conclusion, StabilityStatus::Unknown);

        // semistable premises, non-strict band
        let s = RigidSheaf::new(ctx, 1, 1, 0, 0).unwrap();
        let cert =
            theo3_certify(&s, &semistable("E"), &semistable("F"), &semistable("V")).unwrap();
        assert_eq!(cert.conclusion, StabilityStatus::Semistable);
    }

    #[test]
    fn theo5_examples() {
        let ctx = CurveContext::new(2, 2, -3).unwrap();
        let e = BundleOnC::new(2, 1).unwrap();
        let cert =
            theo5_certify(&ctx, e, 6, &semistable("E"), &semistable("E_phi")).unwrap();
        assert_eq!(cert.conclusion, StabilityStatus::Semistable);

        let cert = theo5_certify(&ctx, e, 7, &semistable("E"), &semistable("E_phi")).unwrap();
        assert_eq!(cert.conclusion, StabilityStatus::Unknown);

        // z = 0 reduces to the vector-bundle rule conclusion
        let cert = theo5_certify(&ctx, e, 0, &stable("E"), &stable("E_phi")).unwrap();
        assert_eq!(cert.conclusion, StabilityStatus::Stable);
        let vb = VectorBundleCn::new(ctx, e).unwrap();
        let theo2 = theo2_certify(&vb, &stable("restriction")).unwrap();
        assert_eq!(cert.conclusion, theo2.conclusion);
    }

    #[test]
    fn hn_examples() {
        let ctx = CurveContext::new(2, 2, -2).unwrap();
        let rep = hn_analysis(&ctx, 2).unwrap();
        assert_eq!(rep.mu_sub, Rational::new(1, 2).unwrap());
        assert_eq!(rep.mu_total, Rational::new(-1, 2).unwrap());
        assert_eq!(rep.delta_restriction, 1);
        assert!(rep.destabilizes);

        let ctx = CurveContext::new(2, 2, -1).unwrap();
        let rep = hn_analysis(&ctx, 0).unwrap();
        assert_eq!(rep.mu_sub, rep.mu_total);
        assert!(rep.semistable_boundary && !rep.destabilizes);
        // mu(I_P) at l = -1 is -1
        assert_eq!(rep.mu_sub, Rational::from_int(-1));

        let ctx = CurveContext::new(3, 2, -1).unwrap();
        assert_eq!(hn_analysis(&ctx, 0), Err(Error::WrongMultiplicity(3)));
    }

    #[test]
    fn certificates_are_monotone_in_premises() {
        let sl = vb_slice();
        let statuses = [
            StabilityStatus::Unknown,
            StabilityStatus::Semistable,
            StabilityStatus::Stable,
        ];
        for &s0 in &statuses {
            for &s1 in &statuses {
                let weak = theo1_certify(
                    &sl,
                    &Premise::declared("bracket", s0),
                    &Premise::declared("bidual_restriction", s1),
                    &stable("dual_bracket"),
                    &stable("dual_bidual_restriction"),
                    false,
                )
                .unwrap();
                let strong = theo1_certify(
                    &sl,
                    &stable("bracket"),
                    &Premise::declared("bidual_restriction", s1),
                    &stable("dual_bracket"),
                    &stable("dual_bidual_restriction"),
                    false,
                )
                .unwrap();
                assert!(weak.conclusion <= strong.conclusion);
            }
        }
    }
}
