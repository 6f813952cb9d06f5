use clap::{Args, Parser, Subcommand};
use serde_json::json;

use multicurve::{
    hn_analysis, lemma_oracle, moduli, theo1_certify, theo2_certify, theo3_certify,
    theo5_certify, BundleOnC, Certificate, CurveContext, Error, FiltrationSlice, Invariants,
    Premise, RigidSheaf, StabilityStatus, VectorBundleCn,
};

use crate::output::{self, Envelope, Format};
use crate::selftest;

#[derive(Debug)]
pub enum CliError {
    /// Malformed invocation: exit 2.
    Usage(String),
    /// Library-level failure (Overflow, GenusTooSmall, ...): exit 1.
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// Exact invariants and stability certificates for sheaves on primitive
/// multiple curves.
#[derive(Parser)]
#[command(name = "multicurve", version, disable_help_subcommand = true)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute generalized invariants of a sheaf.
    Invariants {
        #[command(subcommand)]
        kind: InvariantsKind,
    },
    /// Apply a stability rule and emit a certificate.
    Certify {
        #[command(subcommand)]
        rule: CertifyRule,
    },
    /// Moduli-space bookkeeping.
    Moduli {
        #[command(subcommand)]
        op: ModuliOp,
    },
    /// Tabulate the non-emptiness criterion over a (delta, epsilon) grid.
    Scan {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        delta_min: i64,
        #[arg(long, allow_hyphen_values = true)]
        delta_max: i64,
        #[arg(long, allow_hyphen_values = true)]
        epsilon_min: i64,
        #[arg(long, allow_hyphen_values = true)]
        epsilon_max: i64,
    },
    /// Exhaustively search for counterexamples to the slope lemma.
    VerifyLemma {
        #[arg(long)]
        rank_max: i64,
        #[arg(long)]
        deg_max: i64,
    },
    /// Slope arithmetic of the rank-2 ideal-sheaf extension on a double curve.
    Hn {
        #[arg(long)]
        g: i64,
        #[arg(long = "degL", allow_hyphen_values = true)]
        deg_l: i64,
        #[arg(long = "dD", allow_hyphen_values = true)]
        d_d: i64,
    },
    /// Run the randomized property suites (reproducible via --seed).
    #[command(hide = true)]
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: u64,
    },
}

#[derive(Subcommand)]
pub enum InvariantsKind {
    /// A quasi locally free sheaf of rigid type (a, k, deg E, deg F).
    Rigid {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        k: i64,
        #[arg(long = "degE", allow_hyphen_values = true)]
        deg_e: i64,
        #[arg(long = "degF", allow_hyphen_values = true)]
        deg_f: i64,
    },
    /// A vector bundle with restriction of rank r and degree delta.
    Vb {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
    },
}

#[derive(Subcommand)]
pub enum CertifyRule {
    /// Filtration-slice rule over a torsion-free sheaf.
    /// Premise subjects: bracket, bidual, dual_bracket, dual_bidual.
    Theo1 {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long = "totalR")]
        total_r: i64,
        #[arg(long = "totalDeg", allow_hyphen_values = true)]
        total_deg: i64,
        #[arg(long = "subR")]
        sub_r: i64,
        #[arg(long = "subDeg", allow_hyphen_values = true)]
        sub_deg: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, default_value_t = 0)]
        t: i64,
        /// One-of-each-pair reading of the stable case.
        #[arg(long)]
        relaxed: bool,
        #[arg(long = "premise")]
        premises: Vec<String>,
    },
    /// Vector-bundle rule. Premise subject: restriction.
    Theo2 {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
        #[arg(long = "premise")]
        premises: Vec<String>,
    },
    /// Rigid-type rule. Premise subjects: E, F, V.
    Theo3 {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        k: i64,
        #[arg(long = "degE", allow_hyphen_values = true)]
        deg_e: i64,
        #[arg(long = "degF", allow_hyphen_values = true)]
        deg_f: i64,
        #[arg(long = "premise")]
        premises: Vec<String>,
    },
    /// Kernel-of-point-map rule. Premise subjects: E, E_phi.
    Theo5 {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
        #[arg(long)]
        z: i64,
        #[arg(long = "premise")]
        premises: Vec<String>,
    },
}

#[derive(Subcommand)]
pub enum ModuliOp {
    /// Generalized (R, d) of the rigid-type locus N(a,k,delta,epsilon).
    Rd {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: i64,
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
    },
    /// Dimension of N(a,k,delta,epsilon).
    Dim {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        k: i64,
    },
    /// Sufficient non-emptiness criterion (needs genus >= 2).
    Nonempty {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: i64,
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
    },
    /// Generalized (R, d) of the vector-bundle locus U(R,d).
    VbRd {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
    },
    /// Riemann-Roch Ext^1 dimension between two bundles on C.
    ExtDim {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        source_rank: i64,
        #[arg(long, allow_hyphen_values = true)]
        source_deg: i64,
        #[arg(long)]
        target_rank: i64,
        #[arg(long, allow_hyphen_values = true)]
        target_deg: i64,
        #[arg(long, default_value_t = 0)]
        hom_dim: i64,
    },
}

/// The ambient curve parameters shared by most commands.
#[derive(Args, Clone, Copy)]
pub struct CtxArgs {
    /// Multiplicity of the curve (>= 2).
    #[arg(long)]
    pub n: i64,
    /// Genus of the reduced curve.
    #[arg(long)]
    pub g: i64,
    /// Degree of the associated line bundle L (negative).
    #[arg(long = "degL", allow_hyphen_values = true)]
    pub deg_l: i64,
}

impl CtxArgs {
    fn build(&self) -> CliResult<CurveContext> {
        Ok(CurveContext::new(self.n, self.g, self.deg_l)?)
    }

    fn echo(&self) -> serde_json::Value {
        json!({ "n": self.n, "g": self.g, "degL": self.deg_l })
    }
}

fn parse_premises(specs: &[String], subjects: &[&str]) -> CliResult<Vec<Premise>> {
    let mut out: Vec<Premise> = subjects.iter().map(|s| Premise::unknown(*s)).collect();
    for spec in specs {
        let (subject, status) = spec.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("premise '{spec}' is not of the form SUBJECT=STATUS"))
        })?;
        let status = match status {
            "stable" => StabilityStatus::Stable,
            "semistable" => StabilityStatus::Semistable,
            "unknown" => StabilityStatus::Unknown,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown status '{other}' (expected stable, semistable or unknown)"
                )))
            }
        };
        let slot = out
            .iter_mut()
            .find(|p| p.subject == subject)
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown premise subject '{subject}' (expected one of {})",
                    subjects.join(", ")
                ))
            })?;
        *slot = Premise::declared(subject, status);
    }
    Ok(out)
}

fn premises_echo(premises: &[Premise]) -> serde_json::Value {
    json!(premises)
}

pub fn run(cli: &Cli) -> CliResult<String> {
    let format = cli.format;
    match &cli.command {
        Command::Invariants { kind } => invariants_cmd(kind, format),
        Command::Certify { rule } => certify_cmd(rule, format),
        Command::Moduli { op } => moduli_cmd(op, format),
        Command::Scan {
            ctx,
            a,
            k,
            delta_min,
            delta_max,
            epsilon_min,
            epsilon_max,
        } => {
            let context = ctx.build()?;
            let rows = moduli::scan(
                &context,
                *a,
                *k,
                (*delta_min, *delta_max),
                (*epsilon_min, *epsilon_max),
            )?;
            if format == Format::Csv {
                return Ok(output::emit_csv(&rows));
            }
            let env = Envelope::new(
                "scan",
                json!({
                    "ctx": ctx.echo(), "a": a, "k": k,
                    "delta": [delta_min, delta_max],
                    "epsilon": [epsilon_min, epsilon_max],
                }),
                json!({ "rows": rows }),
            );
            match format {
                Format::Json => env.to_json(),
                _ => Ok(output::scan_table(&rows)),
            }
        }
        Command::VerifyLemma { rank_max, deg_max } => {
            let counterexamples = lemma_oracle(*rank_max, *deg_max)?;
            let env = Envelope::new(
                "verify-lemma",
                json!({ "rank_max": rank_max, "deg_max": deg_max }),
                json!({ "counterexamples": counterexamples }),
            );
            match format {
                Format::Json => env.to_json(),
                Format::Csv => Err(CliError::Usage("csv output is only available for scan".into())),
                Format::Table => Ok(format!(
                    "slope lemma: {} counterexample(s) over ranks <= {rank_max}, |deg| <= {deg_max}\n",
                    counterexamples.len()
                )),
            }
        }
        Command::Hn { g, deg_l, d_d } => {
            let ctx = CurveContext::new(2, *g, *deg_l)?;
            let rep = hn_analysis(&ctx, *d_d)?;
            let env = Envelope::new(
                "hn",
                json!({ "n": 2, "g": g, "degL": deg_l, "dD": d_d }),
                json!(rep),
            );
            match format {
                Format::Json => env.to_json(),
                Format::Csv => Err(CliError::Usage("csv output is only available for scan".into())),
                Format::Table => Ok(format!(
                    "mu(sub) = {}\nmu(total) = {}\ndeg(E|C) = {}\ndestabilizes: {}\nsemistable boundary: {}\n",
                    rep.mu_sub, rep.mu_total, rep.delta_restriction, rep.destabilizes,
                    rep.semistable_boundary
                )),
            }
        }
        Command::Selftest { seed, cases } => {
            let report = selftest::run(*seed, *cases);
            if report.failures == 0 {
                Ok(report.text)
            } else {
                Err(CliError::Domain(Error::InconsistentInput(format!(
                    "selftest: {} failure(s)\n{}",
                    report.failures, report.text
                ))))
            }
        }
    }
}

fn invariants_cmd(kind: &InvariantsKind, format: Format) -> CliResult<String> {
    match kind {
        InvariantsKind::Rigid {
            ctx,
            a,
            k,
            deg_e,
            deg_f,
        } => {
            let context = ctx.build()?;
            let sheaf = RigidSheaf::new(context, *a, *k, *deg_e, *deg_f)?;
            let inv = sheaf.invariants()?;
            let first = sheaf.first_graded()?;
            let second = sheaf.second_graded()?;
            let v = sheaf.v()?;
            let env = Envelope::new(
                "invariants rigid",
                json!({
                    "ctx": ctx.echo(), "a": a, "k": k, "degE": deg_e, "degF": deg_f,
                }),
                json!({
                    "invariants": inv,
                    "slope": inv.slope()?,
                    "E": sheaf.e(), "F": sheaf.f(), "V": v,
                    "first_graded": first,
                    "second_graded": second,
                }),
            );
            match format {
                Format::Json => env.to_json(),
                Format::Csv => Err(CliError::Usage("csv output is only available for scan".into())),
                Format::Table => {
                    let mut s = String::new();
                    s.push_str(&format!("R = {}\nDeg = {}\nslope = {}\n", inv.r(), inv.deg(), inv.slope()?));
                    s.push_str(&format!(
                        "E = (rank {}, deg {})  F = (rank {}, deg {})  V = (rank {}, deg {})\n",
                        sheaf.e().rank(), sheaf.e().deg(), sheaf.f().rank(), sheaf.f().deg(),
                        v.rank(), v.deg()
                    ));
                    s.push_str(&output::bundle_list("first graded", &first));
                    s.push_str(&output::bundle_list("second graded", &second));
                    Ok(s)
                }
            }
        }
        InvariantsKind::Vb { ctx, r, delta } => {
            let context = ctx.build()?;
            let vb = VectorBundleCn::new(context, BundleOnC::new(*r, *delta)?)?;
            let inv = vb.invariants()?;
            let graded = vb.graded()?;
            let env = Envelope::new(
                "invariants vb",
                json!({ "ctx": ctx.echo(), "r": r, "delta": delta }),
                json!({ "invariants": inv, "slope": inv.slope()?, "graded": graded }),
            );
            match format {
                Format::Json => env.to_json(),
                Format::Csv => Err(CliError::Usage("csv output is only available for scan".into())),
                Format::Table => {
                    let mut s = format!("R = {}\nDeg = {}\nslope = {}\n", inv.r(), inv.deg(), inv.slope()?);
                    s.push_str(&output::bundle_list("graded", &graded));
                    Ok(s)
                }
            }
        }
    }
}

fn certificate_out(
    command: &str,
    inputs: serde_json::Value,
    cert: &Certificate,
    format: Format,
) -> CliResult<String> {
    let env = Envelope::with_checks(
        command,
        inputs,
        json!({
            "conclusion": cert.conclusion,
            "rule": cert.rule,
            "premises": cert.premises,
        }),
        json!(cert.checks),
    );
    match format {
        Format::Json => env.to_json(),
        Format::Csv => Err(CliError::Usage("csv output is only available for scan".into())),
        Format::Table => Ok(output::certificate_table(cert)),
    }
}

fn certify_cmd(rule: &CertifyRule, format: Format) -> CliResult<String> {
    match rule {
        CertifyRule::Theo1 {
            ctx,
            total_r,
            total_deg,
            sub_r,
            sub_deg,
            k,
            t,
            relaxed,
            premises,
        } => {
            let context = ctx.build()?;
            let slice = FiltrationSlice::new(
                context,
                Invariants::new(*total_r, *total_deg)?,
                Invariants::new(*sub_r, *sub_deg)?,
                *k,
                *t,
            )?;
            let p = parse_premises(premises, &["bracket", "bidual", "dual_bracket", "dual_bidual"])?;
            let cert = theo1_certify(&slice, &p[0], &p[1], &p[2], &p[3], *relaxed)?;
            certificate_out(
                "certify theo1",
                json!({
                    "ctx": ctx.echo(),
                    "total": { "R": total_r, "Deg": total_deg },
                    "sub": { "R": sub_r, "Deg": sub_deg },
                    "k": k, "t": t, "relaxed": relaxed,
                    "premises": premises_echo(&p),
                }),
                &cert,
                format,
            )
        }
        CertifyRule::Theo2 {
            ctx,
            r,
            delta,
            premises,
        } => {
            let context = ctx.build()?;
            let vb = VectorBundleCn::new(context, BundleOnC::new(*r, *delta)?)?;
            let mut p = parse_premises(premises, &["restriction"])?;
            // line bundles on C are stable without declaration
            if *r == 1 && p[0].status == StabilityStatus::Unknown {
                p[0] = Premise::rank_one("restriction");
            }
            let cert = theo2_certify(&vb, &p[0])?;
            certificate_out(
                "certify theo2",
                json!({
                    "ctx": ctx.echo(), "r": r, "delta": delta,
                    "premises": premises_echo(&p),
                }),
                &cert,
                format,
            )
        }
        CertifyRule::Theo3 {
            ctx,
            a,
            k,
            deg_e,
            deg_f,
            premises,
        } => {
            let context = ctx.build()?;
            let sheaf = RigidSheaf::new(context, *a, *k, *deg_e, *deg_f)?;
            let p = parse_premises(premises, &["E", "F", "V"])?;
            let cert = theo3_certify(&sheaf, &p[0], &p[1], &p[2])?;
            certificate_out(
                "certify theo3",
                json!({
                    "ctx": ctx.echo(), "a": a, "k": k, "degE": deg_e, "degF": deg_f,
                    "premises": premises_echo(&p),
                }),
                &cert,
                format,
            )
        }
        CertifyRule::Theo5 {
            ctx,
            r,
            delta,
            z,
            premises,
        } => {
            let context = ctx.build()?;
            let restriction = BundleOnC::new(*r, *delta)?;
            let p = parse_premises(premises, &["E", "E_phi"])?;
            let cert = theo5_certify(&context, restriction, *z, &p[0], &p[1])?;
            certificate_out(
                "certify theo5",
                json!({
                    "ctx": ctx.echo(), "r": r, "delta": delta, "z": z,
                    "premises": premises_echo(&p),
                }),
                &cert,
                format,
            )
        }
    }
}

fn moduli_cmd(op: &ModuliOp, format: Format) -> CliResult<String> {
    match op {
        ModuliOp::Rd {
            ctx,
            a,
            k,
            epsilon,
            delta,
        } => {
            let context = ctx.build()?;
            let p = moduli::ModuliPoint::new(context, *a, *k, *epsilon, *delta)?;
            let rd = moduli::moduli_rd(&p)?;
            let env = Envelope::new(
                "moduli rd",
                json!({ "ctx": ctx.echo(), "a": a, "k": k, "epsilon": epsilon, "delta": delta }),
                json!({ "invariants": rd }),
            );
            match format {
                Format::Json => env.to_json(),
                Format::Csv => Err(CliError::Usage("csv output is only available for scan".into())),
                Format::Table => Ok(format!("R = {}\nd = {}\n", rd.r(), rd.deg())),
            }
        }
        ModuliOp::Dim { ctx, a, k } => {
            let context = ctx.build()?;
            let dim = moduli::moduli_dim(&context, *a, *k)?;
            let env = Envelope::new(
                "moduli dim",
                json!({ "ctx": ctx.echo(), "a": a, "k": k }),
                json!({ "dim": dim }),
            );
            match format {
                Format::Json => env.to_json(),
                Format::Csv => Err(CliError::Usage("csv output is only available for scan".into())),
                Format::Table => Ok(format!("dim = {dim}\n")),
            }
        }
        ModuliOp::Nonempty {
            ctx,
            a,
            k,
            epsilon,
            delta,
        } => {
            let context = ctx.build()?;
            let p = moduli::ModuliPoint::new(context, *a, *k, *epsilon, *delta)?;
            let nonempty = moduli::moduli_nonempty(&p)?;
            let env = Envelope::new(
                "moduli nonempty",
                json!({ "ctx": ctx.echo(), "a": a, "k": k, "epsilon": epsilon, "delta": delta }),
                json!({ "nonempty": nonempty }),
            );
            match format {
                Format::Json => env.to_json(),
                Format::Csv => Err(CliError::Usage("csv output is only available for scan".into())),
                Format::Table => Ok(format!(
                    "nonempty criterion: {}\n",
                    if nonempty { "holds" } else { "fails (not certified)" }
                )),
            }
        }
        ModuliOp::VbRd { ctx, r, delta } => {
            let context = ctx.build()?;
            let rd = moduli::vb_moduli_rd(&context, *r, *delta)?;
            let env = Envelope::new(
                "moduli vb-rd",
                json!({ "ctx": ctx.echo(), "r": r, "delta": delta }),
                json!({ "invariants": rd }),
            );
            match format {
                Format::Json => env.to_json(),
                Format::Csv => Err(CliError::Usage("csv output is only available for scan".into())),
                Format::Table => Ok(format!("R = {}\nd = {}\n", rd.r(), rd.deg())),
            }
        }
        ModuliOp::ExtDim {
            g,
            source_rank,
            source_deg,
            target_rank,
            target_deg,
            hom_dim,
        } => {
            let source = BundleOnC::new(*source_rank, *source_deg)?;
            let target = BundleOnC::new(*target_rank, *target_deg)?;
            let ext = moduli::ext_dim_rr(*g, source, target, *hom_dim)?;
            let env = Envelope::new(
                "moduli ext-dim",
                json!({
                    "g": g, "source": source, "target": target, "hom_dim": hom_dim,
                }),
                json!({ "ext_dim": ext }),
            );
            match format {
                Format::Json => env.to_json(),
                Format::Csv => Err(CliError::Usage("csv output is only available for scan".into())),
                Format::Table => Ok(format!("dim Ext^1 = {ext}\n")),
            }
        }
    }
}
