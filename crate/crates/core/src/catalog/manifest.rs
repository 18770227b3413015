//! The catalog manifest: entry descriptions and table rows, with expected
//! values stored as integer expressions in the entry parameters.

use std::collections::BTreeMap;

use evalexpr::{
    eval_boolean_with_context, eval_int_with_context, ContextWithMutableVariables, DefaultNumericTypes,
    HashMapContext, Value,
};
use serde::Deserialize;

use crate::{Error, Result};

const MANIFEST: &str = include_str!("manifest.toml");

/// Integer parameters of an entry, e.g. `n`, `m`, `k`.
pub type Params = BTreeMap<String, i64>;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub entry: Vec<EntrySpec>,
    pub table: Vec<TableRow>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamSpec {
    pub default: i64,
    pub min: i64,
    pub max: i64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntrySpec {
    pub id: String,
    #[serde(default)]
    pub aliases: Vec<String>,
    pub builder: String,
    pub title: String,
    pub provenance: String,
    /// Boolean expression; outside it, auto mode samples instead of expanding.
    #[serde(default)]
    pub exact_ceiling: Option<String>,
    #[serde(default)]
    pub params: BTreeMap<String, ParamSpec>,
    #[serde(default)]
    pub options: BTreeMap<String, String>,
    pub expected: ExpectedSpec,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedSpec {
    pub dim_v: String,
    pub dim_g: String,
    pub l: String,
    pub family_degrees: Vec<String>,
    pub invariant_degrees: Vec<String>,
    pub invariant_degrees_display: String,
    /// Closed form for `q(V//G)`; must agree with the sum of the degree list.
    pub q: String,
    #[serde(default)]
    pub audit_surplus: Option<String>,
    #[serde(default)]
    pub dim_vg: Option<String>,
    pub scope: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableRow {
    pub id: String,
    pub group: String,
    pub module: String,
    #[serde(default)]
    pub dim_v: Option<String>,
    #[serde(default)]
    pub dim_vg: Option<String>,
    #[serde(default)]
    pub q: Option<String>,
    pub h: String,
    #[serde(default)]
    pub fa: Option<String>,
    #[serde(default)]
    pub eq: Option<String>,
    #[serde(default)]
    pub theta: Option<String>,
    #[serde(default)]
    pub grading: Option<String>,
    #[serde(default)]
    pub remark: Option<String>,
    #[serde(default)]
    pub realised_by: Option<String>,
    /// Condition on the realising entry's parameters.
    #[serde(default)]
    pub when: Option<String>,
}

/// Expected values of an entry at concrete parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub dim_v: usize,
    pub dim_g: usize,
    pub l: usize,
    pub family_degrees: Vec<u32>,
    pub invariant_degrees: Vec<u32>,
    pub q: u64,
    /// `q` from the closed form, kept to cross-check the degree list.
    pub q_closed_form: u64,
    pub audit_surplus: u64,
    pub dim_vg: Option<usize>,
}

/// Expected values of a table row at concrete parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableValues {
    pub dim_v: Option<usize>,
    pub dim_vg: Option<usize>,
    pub q: Option<u64>,
    pub h: usize,
}

impl Manifest {
    pub fn builtin() -> Result<Self> {
        Self::parse(MANIFEST)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let m: Manifest = toml::from_str(text).map_err(|e| Error::Manifest(e.to_string()))?;
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = std::collections::BTreeSet::new();
        for e in &self.entry {
            for name in std::iter::once(&e.id).chain(&e.aliases) {
                if !seen.insert(name.clone()) {
                    return Err(Error::Manifest(format!("duplicate entry name `{name}`")));
                }
            }
            for (p, s) in &e.params {
                if !(s.min <= s.default && s.default <= s.max) {
                    return Err(Error::Manifest(format!("{}: default of `{p}` outside its range", e.id)));
                }
            }
            // Every expression must evaluate at the defaults.
            e.expected_at(&e.default_params())?;
        }
        for t in &self.table {
            if !seen.insert(t.id.clone()) {
                return Err(Error::Manifest(format!("duplicate table row `{}`", t.id)));
            }
            if let Some(r) = &t.realised_by {
                let e = self
                    .entry
                    .iter()
                    .find(|e| &e.id == r)
                    .ok_or_else(|| Error::Manifest(format!("{}: unknown entry `{r}`", t.id)))?;
                let p = e.default_params();
                t.values_at(&p)?;
                t.applies_to(&p)?;
            }
        }
        Ok(())
    }

    pub fn entry(&self, name: &str) -> Result<&EntrySpec> {
        self.entry
            .iter()
            .find(|e| e.id == name || e.aliases.iter().any(|a| a == name))
            .ok_or_else(|| Error::UnknownEntry(name.to_string()))
    }

    pub fn table_row(&self, id: &str) -> Result<&TableRow> {
        self.table.iter().find(|t| t.id == id).ok_or_else(|| Error::UnknownEntry(id.to_string()))
    }

    /// Table rows realised by `entry` at parameters `p`.
    pub fn rows_for(&self, entry: &EntrySpec, p: &Params) -> Result<Vec<&TableRow>> {
        let mut out = Vec::new();
        for t in &self.table {
            if t.realised_by.as_deref() == Some(entry.id.as_str()) && t.applies_to(p)? {
                out.push(t);
            }
        }
        Ok(out)
    }
}

impl EntrySpec {
    pub fn default_params(&self) -> Params {
        self.params.iter().map(|(k, s)| (k.clone(), s.default)).collect()
    }

    /// Defaults overridden by `overrides` for the parameters this entry has.
    /// Errors when an override is outside the supported range.
    pub fn resolve_params(&self, overrides: &Params) -> Result<Params> {
        let mut p = self.default_params();
        for (k, v) in overrides {
            if let Some(s) = self.params.get(k) {
                if *v < s.min || *v > s.max {
                    return Err(Error::InvalidParams(format!(
                        "{}: {k} = {v} outside supported range {}..={}",
                        self.id, s.min, s.max
                    )));
                }
                p.insert(k.clone(), *v);
            }
        }
        Ok(p)
    }

    pub fn option(&self, key: &str) -> Option<&str> {
        self.options.get(key).map(String::as_str)
    }

    /// Whether parameters are within the exact-mode ceiling.
    pub fn within_exact_ceiling(&self, p: &Params) -> Result<bool> {
        match &self.exact_ceiling {
            None => Ok(true),
            Some(c) => eval_bool(c, p),
        }
    }

    pub fn expected_at(&self, p: &Params) -> Result<Expected> {
        let x = &self.expected;
        let invariant_degrees = eval_list(&x.invariant_degrees, p)?;
        Ok(Expected {
            dim_v: eval_usize(&x.dim_v, p)?,
            dim_g: eval_usize(&x.dim_g, p)?,
            l: eval_usize(&x.l, p)?,
            family_degrees: eval_list(&x.family_degrees, p)?,
            q: invariant_degrees.iter().map(|&d| u64::from(d)).sum(),
            invariant_degrees,
            q_closed_form: eval_usize(&x.q, p)? as u64,
            audit_surplus: match &x.audit_surplus {
                Some(s) => eval_usize(s, p)? as u64,
                None => 0,
            },
            dim_vg: x.dim_vg.as_deref().map(|s| eval_usize(s, p)).transpose()?,
        })
    }
}

impl TableRow {
    pub fn is_executable(&self) -> bool {
        self.realised_by.is_some()
    }

    pub fn applies_to(&self, p: &Params) -> Result<bool> {
        match &self.when {
            None => Ok(true),
            Some(c) => eval_bool(c, p),
        }
    }

    pub fn values_at(&self, p: &Params) -> Result<TableValues> {
        Ok(TableValues {
            dim_v: self.dim_v.as_deref().map(|s| eval_usize(s, p)).transpose()?,
            dim_vg: self.dim_vg.as_deref().map(|s| eval_usize(s, p)).transpose()?,
            q: self.q.as_deref().map(|s| eval_usize(s, p).map(|x| x as u64)).transpose()?,
            h: eval_usize(&self.h, p)?,
        })
    }
}

fn context(p: &Params) -> Result<HashMapContext<DefaultNumericTypes>> {
    let mut ctx = HashMapContext::<DefaultNumericTypes>::new();
    for (k, v) in p {
        ctx.set_value(k.clone(), Value::from_int(*v)).map_err(|e| Error::Manifest(e.to_string()))?;
    }
    Ok(ctx)
}

pub fn eval_int(expr: &str, p: &Params) -> Result<i64> {
    eval_int_with_context(expr, &context(p)?).map_err(|e| Error::Manifest(format!("`{expr}`: {e}")))
}

fn eval_usize(expr: &str, p: &Params) -> Result<usize> {
    let v = eval_int(expr, p)?;
    usize::try_from(v).map_err(|_| Error::Manifest(format!("`{expr}` is negative ({v})")))
}

fn eval_bool(expr: &str, p: &Params) -> Result<bool> {
    eval_boolean_with_context(expr, &context(p)?).map_err(|e| Error::Manifest(format!("`{expr}`: {e}")))
}

/// Expands `EXPR [for i in A..B] [when COND]` items into a list.
pub fn eval_list(items: &[String], p: &Params) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    for item in items {
        let (body, cond) = match item.split_once(" when ") {
            Some((b, c)) => (b, Some(c)),
            None => (item.as_str(), None),
        };
        if let Some(c) = cond {
            if !eval_bool(c, p)? {
                continue;
            }
        }
        let (expr, range) = match body.split_once(" for ") {
            Some((e, r)) => (e, Some(r)),
            None => (body, None),
        };
        let push = |out: &mut Vec<u32>, q: &Params| -> Result<()> {
            let v = eval_int(expr, q)?;
            out.push(u32::try_from(v).map_err(|_| Error::Manifest(format!("`{expr}` = {v} is not a degree")))?);
            Ok(())
        };
        match range {
            None => push(&mut out, p)?,
            Some(r) => {
                let r = r.trim();
                let rest = r
                    .strip_prefix("i in ")
                    .ok_or_else(|| Error::Manifest(format!("bad range `{r}`")))?;
                let (a, b) = rest.split_once("..").ok_or_else(|| Error::Manifest(format!("bad range `{r}`")))?;
                let (a, b) = (eval_int(a, p)?, eval_int(b, p)?);
                let mut q = p.clone();
                for i in a..=b {
                    q.insert("i".into(), i);
                    push(&mut out, &q)?;
                }
            }
        }
    }
    Ok(out)
}
