//! Structured run reports: one versioned JSON document per invocation,
//! with text and quiet renderers. Reports are deterministic — the same
//! input always serializes to the same bytes, so no timestamps or wall
//! times appear in the structured form.

use serde::{Deserialize, Serialize};

pub const REPORT_VERSION: u32 = 1;

/// One named check with its verdict and, on failure, a short witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// True when a negative-control expectation marks this check as one
    /// that must fail; the item then passes overall iff the check fails.
    #[serde(default, skip_serializing_if = "is_false")]
    pub expected_failure: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Check {
            name: name.into(),
            pass,
            expected_failure: false,
            witness: None,
        }
    }

    /// Did this check come out as it should (pass, or fail-as-expected)?
    pub fn ok(&self) -> bool {
        self.pass != self.expected_failure
    }
}

/// A sparse representative cocycle: `(coordinate, exact value)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseVector {
    pub dim: usize,
    pub entries: Vec<(usize, String)>,
}

/// A cohomology dimension table with representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTable {
    /// `"hc"` or `"hp"`.
    pub theory: String,
    pub window: usize,
    /// For `hc`, indexed by total degree; for `hp`, `[even, odd]`.
    pub dims: Vec<usize>,
    pub representatives: Vec<Vec<SparseVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilization: Option<bool>,
}

/// One report item: a declaration or builtin that was checked or built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Item {
    pub subject: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<CohomologyTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Item {
    pub fn new(subject: impl Into<String>, kind: impl Into<String>) -> Self {
        Item {
            subject: subject.into(),
            kind: kind.into(),
            checks: Vec::new(),
            dim: None,
            cohomology: None,
            error: None,
        }
    }

    pub fn ok(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(Check::ok)
    }
}

/// The full report for one invocation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    /// The command line that produced this report, echoed back.
    pub command: String,
    pub items: Vec<Item>,
    pub ok: bool,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            version: REPORT_VERSION,
            command: command.into(),
            items: Vec::new(),
            ok: true,
        }
    }

    pub fn push(&mut self, item: Item) {
        self.ok &= item.ok();
        self.items.push(item);
    }

    /// The structured (JSON) form: a single versioned document.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Read a structured report back (round-trips with `to_json`).
    pub fn from_json(s: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// The verdict-only line printed under `--quiet`.
    pub fn verdict_line(&self) -> String {
        let (pass, total) = self.counts();
        format!(
            "{}: {pass}/{total} items ok",
            if self.ok { "PASS" } else { "FAIL" }
        )
    }

    fn counts(&self) -> (usize, usize) {
        let total = self.items.len();
        let pass = self.items.iter().filter(|i| i.ok()).count();
        (pass, total)
    }

    /// The human-readable text rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {}\n", self.command));
        for item in &self.items {
            out.push_str(&format!(
                "{} {} [{}]\n",
                if item.ok() { "ok  " } else { "FAIL" },
                item.subject,
                item.kind
            ));
            if let Some(d) = item.dim {
                out.push_str(&format!("     dim {d}\n"));
            }
            for c in &item.checks {
                let verdict = match (c.pass, c.expected_failure) {
                    (true, false) => "pass",
                    (false, true) => "fails as expected",
                    (false, false) => "FAIL",
                    (true, true) => "PASSES but was expected to fail",
                };
                out.push_str(&format!("     {}: {verdict}\n", c.name));
                if let Some(w) = &c.witness {
                    out.push_str(&format!("       witness: {w}\n"));
                }
            }
            if let Some(t) = &item.cohomology {
                out.push_str(&format!(
                    "     {} (window {}):\n",
                    t.theory.to_uppercase(),
                    t.window
                ));
                for (n, d) in t.dims.iter().enumerate() {
                    let label = if t.theory == "hp" {
                        if n == 0 { "even".to_string() } else { "odd".to_string() }
                    } else {
                        format!("degree {n}")
                    };
                    out.push_str(&format!("       {label}: {d}\n"));
                    for rep in &t.representatives[n] {
                        let body: Vec<String> = rep
                            .entries
                            .iter()
                            .map(|(i, v)| format!("{v}·e{i}"))
                            .collect();
                        out.push_str(&format!("         [{}]\n", body.join(" + ")));
                    }
                }
                if let Some(s) = t.stabilization {
                    out.push_str(&format!(
                        "       stabilized: {}\n",
                        if s { "yes" } else { "no" }
                    ));
                }
            }
            if let Some(e) = &item.error {
                out.push_str(&format!("     error: {e}\n"));
            }
        }
        out.push_str(&self.verdict_line());
        out.push('\n');
        out
    }
}

/// Convert an exact matrix column into its sparse report form.
pub fn sparse_vector(m: &crate::Mat) -> SparseVector {
    let mut entries: Vec<(usize, String)> = m
        .iter()
        .map(|(r, _, v)| (r, v.to_string()))
        .collect();
    entries.sort();
    SparseVector {
        dim: m.rows(),
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("check example");
        let mut item = Item::new("H", "hopf");
        item.dim = Some(4);
        item.checks.push(Check::new("coassociativity", true));
        item.checks.push(Check {
            name: "antipode-left".into(),
            pass: false,
            expected_failure: true,
            witness: Some("mutated entry".into()),
        });
        r.push(item);
        assert!(r.ok);
        let s = r.to_json();
        let back = Report::from_json(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), s);
    }

    #[test]
    fn unexpected_pass_fails_item() {
        let mut item = Item::new("x", "hopf");
        item.checks.push(Check {
            name: "a".into(),
            pass: true,
            expected_failure: true,
            witness: None,
        });
        assert!(!item.ok());
    }

    #[test]
    fn verdict_line_counts() {
        let mut r = Report::new("corpus");
        r.push(Item::new("a", "hopf"));
        let mut bad = Item::new("b", "lie");
        bad.error = Some("boom".into());
        r.push(bad);
        assert_eq!(r.verdict_line(), "FAIL: 1/2 items ok");
    }
}
