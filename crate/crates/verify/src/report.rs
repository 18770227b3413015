//! Serialisable reports. Rationals are written as `p/q` strings.

use std::collections::BTreeMap;

use sdcov_core::catalog::{CheckResult, Verdict, Witness};
use sdcov_core::exact::Scalar;
use serde::Serialize;

use crate::config::{Format, Mode, RunConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub entries: Vec<String>,
    pub overrides: BTreeMap<String, i64>,
    pub seed: u64,
    pub mode: Mode,
    pub samples: usize,
    pub format: Format,
    pub negative_controls: bool,
}

impl From<&RunConfig> for ConfigEcho {
    fn from(c: &RunConfig) -> Self {
        ConfigEcho {
            entries: c.entry_ids.clone(),
            overrides: c.overrides.clone(),
            seed: c.seed,
            mode: c.mode,
            samples: c.samples,
            format: c.format,
            negative_controls: c.negative_controls,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub point: Vec<String>,
    pub component: Option<usize>,
    pub value: Option<String>,
    pub note: String,
}

impl From<&Witness> for WitnessRecord {
    fn from(w: &Witness) -> Self {
        WitnessRecord {
            point: w.point.iter().map(Scalar::to_ratio_string).collect(),
            component: w.component,
            value: w.value.as_ref().map(Scalar::to_ratio_string),
            note: w.note.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub verdict: &'static str,
    /// `fails` for checks whose passing outcome is a counterexample.
    pub expect: &'static str,
    pub detail: String,
    pub witness: Option<WitnessRecord>,
    pub runtime_ms: Option<u64>,
}

impl CheckRecord {
    pub fn new(r: &CheckResult, runtime_ms: Option<u64>) -> Self {
        CheckRecord {
            name: r.name.clone(),
            verdict: r.verdict.as_str(),
            expect: r.expect.as_str(),
            detail: r.detail.clone(),
            witness: r.witness.as_ref().map(WitnessRecord::from),
            runtime_ms,
        }
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail.as_str()
    }
}

/// One printed table value against the value computed for the entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableComparison {
    pub row: String,
    pub field: String,
    pub printed: String,
    pub computed: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub title: String,
    pub provenance: String,
    pub parameters: BTreeMap<String, i64>,
    /// `exact` or `sampled`: the mode the checks ran in. Auto mode samples
    /// above the entry's exact ceiling.
    pub mode: &'static str,
    pub group: String,
    pub module: String,
    pub checks: Vec<CheckRecord>,
    pub table_row_comparison: Vec<TableComparison>,
}

impl EntryReport {
    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.is_fail())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub config: ConfigEcho,
    pub entries: Vec<EntryReport>,
}

impl Report {
    pub fn has_failures(&self) -> bool {
        self.entries.iter().any(|e| e.failures().next().is_some())
    }

    pub fn entry(&self, id: &str) -> Option<&EntryReport> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    /// Per entry: a header in the column order of the tables (G, V, dim V,
    /// dim V//G, q(V//G), dim h), then one line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for e in &self.entries {
            let params: Vec<String> = e.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!("{} [{}] ({}): {}\n", e.id, params.join(", "), e.mode, e.title));
            out.push_str(&format!("  G = {} | V = {}\n", e.group, e.module));
            let mut last_row = "";
            for t in &e.table_row_comparison {
                if t.row != last_row {
                    out.push_str(&format!("  {}:", t.row));
                    last_row = &t.row;
                }
                let mark = if t.matches { "=" } else { "!=" };
                out.push_str(&format!(" {} {} {} {} |", t.field, t.printed, mark, t.computed));
                if e.table_row_comparison.iter().filter(|x| x.row == t.row).last() == Some(t) {
                    out.push('\n');
                }
            }
            for c in &e.checks {
                *counts.entry(c.verdict).or_default() += 1;
                let expect = if c.expect == "fails" { " (expected to fail)" } else { "" };
                out.push_str(&format!("  {:<12} {}{}: {}\n", c.verdict, c.name, expect, c.detail));
                if let Some(w) = &c.witness {
                    if c.is_fail() || !w.point.is_empty() {
                        let value = w.value.as_deref().map_or(String::new(), |v| format!(" value {v}"));
                        let comp = w.component.map_or(String::new(), |c| format!(" component {c}"));
                        out.push_str(&format!("               witness:{comp}{value} {}", w.note));
                        if !w.point.is_empty() {
                            out.push_str(&format!(" at ({})", w.point.join(", ")));
                        }
                        out.push('\n');
                    }
                }
            }
        }
        let summary: Vec<String> = counts.iter().map(|(k, v)| format!("{v} {k}")).collect();
        out.push_str(&format!("summary: {}\n", summary.join(", ")));
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}
