//! The report envelope every subcommand emits.
//!
//! Reports are byte-deterministic for a fixed command line: details are
//! kept in a sorted map, witnesses in insertion order, and `elapsed_ms`
//! stays `null` unless `--timing` is passed (wall time is the one field
//! that cannot be reproducible).

use serde::Serialize;
use serde_json::{Map, Value};

pub fn sha256_hex(bytes: &[u8]) -> String {
    use sha2::Digest;
    format!("{:x}", sha2::Sha256::digest(bytes))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not_applicable",
        }
    }
}

/// One witness line: a label and the flattened identifier tuple.
#[derive(Debug, Clone, Serialize)]
pub struct ReportWitness {
    pub label: String,
    pub parts: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    /// SHA-256 digests of the input files, in argument order.
    pub inputs: Vec<String>,
    pub verdict: Verdict,
    pub details: Map<String, Value>,
    pub witnesses: Vec<ReportWitness>,
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            inputs: Vec::new(),
            verdict: Verdict::Pass,
            details: Map::new(),
            witnesses: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn digest_input(&mut self, bytes: &[u8]) {
        self.inputs.push(sha256_hex(bytes));
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_owned(), value.into());
    }

    pub fn witness(&mut self, label: impl Into<String>, parts: Vec<String>) {
        self.witnesses.push(ReportWitness { label: label.into(), parts });
    }

    pub fn fail(&mut self) {
        self.verdict = Verdict::Fail;
    }

    pub fn not_applicable(&mut self) {
        self.verdict = Verdict::NotApplicable;
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Fail => 1,
            Verdict::Pass | Verdict::NotApplicable => 0,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self)
                    .expect("report serialization cannot fail");
                s.push('\n');
                s
            }
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for digest in &self.inputs {
            out.push_str(&format!("input: {digest}\n"));
        }
        for (key, value) in &self.details {
            out.push_str(&format!("{key}: {}\n", render_value(value)));
        }
        for w in &self.witnesses {
            out.push_str(&format!("witness {}: {}\n", w.label, w.parts.join(", ")));
        }
        out.push_str(&format!("verdict: {}\n", self.verdict.label()));
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed_ms: {ms}\n"));
        }
        out
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "null".to_owned(),
        other => other.to_string(),
    }
}
