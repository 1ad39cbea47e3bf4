//! Machine-readable report documents and their human rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use homdef::exactlin::rational;
use homdef::report::{Report, Witness};

pub const TOOL: &str = "homdef";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessDoc {
    pub order: Option<usize>,
    pub indices: Vec<i64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    pub residual: Vec<String>,
}

impl WitnessDoc {
    pub fn from_witness(w: &Witness, labels: &[String]) -> Self {
        WitnessDoc {
            order: w.order,
            indices: w.indices.iter().map(|&i| i as i64).collect(),
            labels: w.indices.iter().filter_map(|&i| labels.get(i).cloned()).collect(),
            residual: w.residual.iter().map(rational::format).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckDoc {
    pub name: String,
    pub status: Status,
    pub witness: Option<WitnessDoc>,
    pub notes: Vec<String>,
}

impl CheckDoc {
    pub fn from_report(r: &Report, labels: &[String]) -> Self {
        CheckDoc {
            name: r.name.clone(),
            status: if r.passed { Status::Pass } else { Status::Fail },
            witness: r.witness.as_ref().map(|w| WitnessDoc::from_witness(w, labels)),
            notes: r.notes.clone(),
        }
    }

    pub fn error(name: impl Into<String>, message: impl Into<String>) -> Self {
        CheckDoc {
            name: name.into(),
            status: Status::Error,
            witness: None,
            notes: vec![message.into()],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub status: Status,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input_digest: String,
    pub checks: Vec<CheckDoc>,
    pub facts: BTreeMap<String, Value>,
    pub summary: Summary,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

impl ReportDocument {
    pub fn new(command: &str, input: &[u8]) -> Self {
        ReportDocument {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: command.into(),
            input_digest: digest(input),
            checks: Vec::new(),
            facts: BTreeMap::new(),
            summary: Summary {
                status: Status::Pass,
                total: 0,
                passed: 0,
                failed: 0,
                errors: 0,
            },
        }
    }

    pub fn push(&mut self, check: CheckDoc) {
        self.checks.push(check);
    }

    pub fn fact(&mut self, key: &str, value: impl Into<Value>) {
        self.facts.insert(key.into(), value.into());
    }

    /// Sorts checks by name and recomputes the summary.
    pub fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        let count = |s: Status| self.checks.iter().filter(|c| c.status == s).count();
        let (passed, failed, errors) = (count(Status::Pass), count(Status::Fail), count(Status::Error));
        self.summary = Summary {
            status: if errors > 0 {
                Status::Error
            } else if failed > 0 {
                Status::Fail
            } else {
                Status::Pass
            },
            total: self.checks.len(),
            passed,
            failed,
            errors,
        };
        self
    }

    pub fn exit_code(&self) -> i32 {
        match self.summary.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }

    pub fn to_json(&self) -> String {
        crate::files::to_canonical(self)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let _ = write!(s, "{}: {}", c.name, c.status.as_str());
            if let Some(w) = &c.witness {
                if let Some(o) = w.order {
                    let _ = write!(s, " at order {o}");
                }
                let idx: Vec<String> = w.indices.iter().map(i64::to_string).collect();
                let _ = write!(s, " indices ({})", idx.join(","));
                if !w.labels.is_empty() {
                    let _ = write!(s, " = ({})", w.labels.join(","));
                }
                let _ = write!(s, " residual [{}]", w.residual.join(", "));
            }
            s.push('\n');
            for n in &c.notes {
                let _ = writeln!(s, "  {n}");
            }
        }
        for (k, v) in &self.facts {
            let rendered = render_value(v);
            let sep = if rendered.starts_with('\n') { ":" } else { ": " };
            let _ = writeln!(s, "{k}{sep}{rendered}");
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "summary: {} ({} checks, {} passed, {} failed, {} errors)",
            m.status.as_str(),
            m.total,
            m.passed,
            m.failed,
            m.errors
        );
        s
    }
}

/// Top-level lists print one item per line; nested values print inline.
fn render_value(v: &Value) -> String {
    match v {
        Value::Array(items) if items.iter().all(Value::is_number) => render_inline(v),
        Value::Array(items) => items.iter().map(|x| format!("\n  {}", render_inline(x))).collect(),
        Value::Object(map) if map.values().all(Value::is_object) => map
            .iter()
            .map(|(k, x)| format!("\n  {k}: {}", render_inline(x)))
            .collect(),
        other => render_inline(other),
    }
}

fn render_inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(render_inline).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => map
            .iter()
            .map(|(k, x)| format!("{k}={}", render_inline(x)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}
