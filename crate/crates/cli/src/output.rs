use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use multicurve::moduli::RegionRow;
use multicurve::{BundleOnC, Certificate};

use crate::commands::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub const SCHEMA_VERSION: &str = "1";

/// Machine-readable result wrapper. Field order is fixed so that emitted JSON
/// round-trips byte-identically through parse + re-serialize.
#[derive(Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Value>,
}

impl Envelope {
    pub fn new(command: &str, inputs: Value, result: Value) -> Self {
        Envelope {
            schema_version: SCHEMA_VERSION.into(),
            command: command.into(),
            inputs,
            result,
            checks: None,
        }
    }

    pub fn with_checks(command: &str, inputs: Value, result: Value, checks: Value) -> Self {
        Envelope {
            checks: Some(checks),
            ..Envelope::new(command, inputs, result)
        }
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let mut s = serde_json::to_string(self).map_err(|e| {
            CliError::Domain(multicurve::Error::InconsistentInput(format!(
                "serialization failed: {e}"
            )))
        })?;
        s.push('\n');
        Ok(s)
    }
}

/// Fixed CSV schema for scan rows: `delta,epsilon,R,d,nonempty,dim`, decimal
/// integers, `true`/`false`, LF endings, header always present.
pub fn emit_csv(rows: &[RegionRow]) -> String {
    let mut out = String::from("delta,epsilon,R,d,nonempty,dim\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.delta, row.epsilon, row.r, row.d, row.nonempty, row.dim
        ));
    }
    out
}


pub fn scan_table(rows: &[RegionRow]) -> String {
    let mut out = String::from("delta  epsilon  R  d  nonempty  dim\n");
    for row in rows {
        out.push_str(&format!(
            "{:<5}  {:<7}  {}  {}  {:<8}  {}\n",
            row.delta, row.epsilon, row.r, row.d, row.nonempty, row.dim
        ));
    }
    out
}

pub fn bundle_list(label: &str, bundles: &[BundleOnC]) -> String {
    let items: Vec<String> = bundles
        .iter()
        .map(|b| format!("({}, {})", b.rank(), b.deg()))
        .collect();
    format!("{label}: [{}]\n", items.join(", "))
}

pub fn certificate_table(cert: &Certificate) -> String {
    let mut s = format!("rule: {}\nconclusion: {:?}\n", cert.rule, cert.conclusion);
    s.push_str("premises:\n");
    for p in &cert.premises {
        s.push_str(&format!("  {} = {:?} ({:?})\n", p.subject, p.status, p.origin));
    }
    s.push_str("checks:\n");
    for c in &cert.checks {
        s.push_str(&format!(
            "  {}: {} {} {} -> {}\n",
            c.description,
            c.left,
            match c.relation {
                multicurve::Relation::Le => "<=",
                multicurve::Relation::Lt => "<",
                multicurve::Relation::Ge => ">=",
                multicurve::Relation::Gt => ">",
                multicurve::Relation::Eq => "=",
            },
            c.right,
            c.holds
        ));
    }
    s
}
