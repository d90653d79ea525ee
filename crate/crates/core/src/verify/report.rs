use serde::Serialize;
use std::fmt::Write;

/// One named check with its parameters and, on failure, a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub params: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    checks: Vec<Check>,
}

impl VerifyReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: &str, params: impl Into<String>, outcome: Result<(), String>) {
        let (pass, witness) = match outcome {
            Ok(()) => (true, None),
            Err(w) => (false, Some(w)),
        };
        self.checks.push(Check { name: name.to_string(), params: params.into(), pass, witness });
    }

    pub fn merge(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }

    /// Checks sorted by name, then parameters.
    pub fn checks(&self) -> Vec<&Check> {
        let mut v: Vec<&Check> = self.checks.iter().collect();
        v.sort_by(|a, b| (&a.name, &a.params).cmp(&(&b.name, &b.params)));
        v
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in self.checks() {
            let verdict = if c.pass { "pass" } else { "FAIL" };
            if c.params.is_empty() {
                write!(s, "{}: {verdict}", c.name).unwrap();
            } else {
                write!(s, "{} [{}]: {verdict}", c.name, c.params).unwrap();
            }
            if let Some(w) = &c.witness {
                write!(s, "\n    witness: {w}").unwrap();
            }
            s.push('\n');
        }
        writeln!(s, "overall: {}", if self.passed() { "pass" } else { "FAIL" }).unwrap();
        s
    }

    /// One JSON object per line.
    pub fn to_records(&self) -> String {
        let mut s = String::new();
        for c in self.checks() {
            s.push_str(&serde_json::to_string(c).unwrap());
            s.push('\n');
        }
        s
    }
}
