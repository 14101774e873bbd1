//! Report model and renderers. Reports are pure functions of the run
//! configuration: no timestamps or timing data enter the rendered bytes,
//! so identical configurations produce byte-identical reports regardless
//! of thread count.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub status: String,
}

pub fn check(claim: &str, expected: impl Display, computed: impl Display) -> Check {
    let expected = expected.to_string();
    let computed = computed.to_string();
    let status = if expected == computed { "pass" } else { "fail" };
    Check {
        claim: claim.to_string(),
        expected,
        computed,
        status: status.to_string(),
    }
}

/// One result row of a search or enumeration command; keys render in
/// sorted order.
pub type Record = BTreeMap<String, String>;

#[derive(Debug, Serialize)]
pub struct Report {
    pub tool_version: String,
    /// All integers as decimal strings.
    pub config: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<Check>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub results: Option<Vec<Record>>,
    pub status: String,
}

impl Report {
    pub fn from_checks(config: BTreeMap<String, String>, checks: Vec<Check>) -> Report {
        let status = if checks.iter().all(|c| c.status == "pass") {
            "pass"
        } else {
            "fail"
        };
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            checks: Some(checks),
            results: None,
            status: status.to_string(),
        }
    }

    pub fn from_results(
        config: BTreeMap<String, String>,
        results: Vec<Record>,
        status: &str,
    ) -> Report {
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            checks: None,
            results: Some(results),
            status: status.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        if let Some(checks) = &self.checks {
            out.push_str("claim,expected,computed,status\n");
            for c in checks {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    csv_field(&c.claim),
                    csv_field(&c.expected),
                    csv_field(&c.computed),
                    csv_field(&c.status)
                ));
            }
        }
        if let Some(results) = &self.results {
            let mut keys: Vec<&String> = Vec::new();
            for r in results {
                for k in r.keys() {
                    if !keys.contains(&k) {
                        keys.push(k);
                    }
                }
            }
            keys.sort();
            out.push_str(
                &keys
                    .iter()
                    .map(|k| csv_field(k))
                    .collect::<Vec<_>>()
                    .join(","),
            );
            out.push('\n');
            for r in results {
                let row: Vec<String> = keys
                    .iter()
                    .map(|k| csv_field(r.get(*k).map(String::as_str).unwrap_or("")))
                    .collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
        out.push_str(&format!("status,{}\n", self.status));
        out
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.config {
            out.push_str(&format!("{}: {}\n", k, v));
        }
        out.push('\n');
        if let Some(checks) = &self.checks {
            let wc = checks.iter().map(|c| c.claim.len()).max().unwrap_or(5).max(5);
            let we = checks.iter().map(|c| c.expected.len()).max().unwrap_or(8).max(8);
            let wm = checks.iter().map(|c| c.computed.len()).max().unwrap_or(8).max(8);
            out.push_str(&format!(
                "{:<wc$}  {:<we$}  {:<wm$}  status\n",
                "claim", "expected", "computed"
            ));
            for c in checks {
                out.push_str(&format!(
                    "{:<wc$}  {:<we$}  {:<wm$}  {}\n",
                    c.claim, c.expected, c.computed, c.status
                ));
            }
        }
        if let Some(results) = &self.results {
            for (i, r) in results.iter().enumerate() {
                out.push_str(&format!("result {}\n", i + 1));
                let w = r.keys().map(|k| k.len()).max().unwrap_or(0);
                for (k, v) in r {
                    out.push_str(&format!("  {:<w$}  {}\n", k, v));
                }
            }
        }
        out.push_str(&format!("\nstatus: {}\n", self.status));
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
