use crate::Format;
use braidkit::verify::VerifyReport;
use serde_json::json;

enum Item {
    Note(String),
    Entry { kind: &'static str, lhs: String, rhs: String },
    Report(VerifyReport),
    Summary { name: String, pass: bool },
}

/// Collected output of one command, rendered once at the end.
#[derive(Default)]
pub struct Output {
    items: Vec<Item>,
}

impl Output {
    pub fn note(&mut self, s: impl Into<String>) {
        self.items.push(Item::Note(s.into()));
    }

    pub fn entry(&mut self, kind: &'static str, lhs: impl Into<String>, rhs: impl Into<String>) {
        self.items.push(Item::Entry { kind, lhs: lhs.into(), rhs: rhs.into() });
    }

    pub fn report(&mut self, r: VerifyReport) {
        self.items.push(Item::Report(r));
    }

    /// A one-line verdict over every report so far.
    pub fn summary(&mut self, name: impl Into<String>) {
        let pass = self.passed();
        self.items.push(Item::Summary { name: name.into(), pass });
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| match i {
            Item::Report(r) => r.passed(),
            Item::Summary { pass, .. } => *pass,
            _ => true,
        })
    }

    pub fn render(&self, format: Format) -> String {
        let mut s = String::new();
        for item in &self.items {
            match (item, format) {
                (Item::Note(n), Format::Text) => {
                    s.push_str(n);
                    s.push('\n');
                }
                (Item::Note(n), Format::Records) => line(&mut s, json!({ "note": n })),
                (Item::Entry { lhs, rhs, .. }, Format::Text) => {
                    s.push_str(&format!("{lhs} = {rhs}\n"));
                }
                (Item::Entry { kind, lhs, rhs }, Format::Records) => {
                    line(&mut s, json!({ "kind": kind, "lhs": lhs, "rhs": rhs }))
                }
                (Item::Report(r), Format::Text) => {
                    for c in r.checks() {
                        let verdict = if c.pass { "pass" } else { "FAIL" };
                        if c.params.is_empty() {
                            s.push_str(&format!("{}: {verdict}\n", c.name));
                        } else {
                            s.push_str(&format!("{} [{}]: {verdict}\n", c.name, c.params));
                        }
                        if let Some(w) = &c.witness {
                            s.push_str(&format!("    witness: {w}\n"));
                        }
                    }
                }
                (Item::Report(r), Format::Records) => s.push_str(&r.to_records()),
                (Item::Summary { name, pass }, Format::Text) => {
                    s.push_str(&format!("{name}: {}\n", if *pass { "pass" } else { "FAIL" }));
                }
                (Item::Summary { name, pass }, Format::Records) => {
                    line(&mut s, json!({ "summary": name, "pass": pass }))
                }
            }
        }
        s
    }
}

fn line(s: &mut String, v: serde_json::Value) {
    s.push_str(&v.to_string());
    s.push('\n');
}
