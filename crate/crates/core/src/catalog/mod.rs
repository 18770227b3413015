//! Executable examples of covariant families and the tables of
//! representations with toral generic stabilisers.

mod builders;
mod check;
mod entry;
mod manifest;

pub use builders::{cubic_combination, minor_matrix};
pub use check::{CheckResult, Expect, Verdict, Witness};
pub use entry::{BuiltEntry, Construction, ExtraCheck, Scope, WeightCheck};
pub use manifest::{eval_list, EntrySpec, Expected, ExpectedSpec, Manifest, ParamSpec, Params, TableRow, TableValues};

use crate::{Error, Result};

/// The parsed manifest together with the builders.
#[derive(Clone, Debug)]
pub struct Catalog {
    manifest: Manifest,
}

impl Catalog {
    pub fn load() -> Result<Self> {
        Ok(Catalog { manifest: Manifest::builtin()? })
    }

    pub fn manifest(&self) -> &Manifest {
        &self.manifest
    }

    pub fn entries(&self) -> &[EntrySpec] {
        &self.manifest.entry
    }

    pub fn tables(&self) -> &[TableRow] {
        &self.manifest.table
    }

    pub fn entry(&self, name: &str) -> Result<&EntrySpec> {
        self.manifest.entry(name)
    }

    /// Builds an entry by id or alias. Parameters not used by the entry are
    /// ignored; out-of-range ones are an error.
    pub fn build(&self, name: &str, overrides: &Params) -> Result<BuiltEntry> {
        let mut spec = self.manifest.entry(name)?;
        let mut params = spec.resolve_params(overrides)?;
        // n = 2 of the triple product is the cubic case.
        if spec.builder == "tri_sl" && params.get("n") == Some(&2) {
            spec = self.manifest.entry("ex5.2/cubic")?;
            params = Params::new();
        }
        let c = builders::build(spec, &params)?;
        let expected = spec.expected_at(&params)?;
        let mut table_rows = Vec::new();
        for t in self.manifest.rows_for(spec, &params)? {
            table_rows.push((t.clone(), t.values_at(&params)?));
        }
        let scope = c.scope.unwrap_or_else(|| Scope::full(&c.rep));
        Ok(BuiltEntry {
            id: spec.id.clone(),
            title: spec.title.clone(),
            provenance: spec.provenance.clone(),
            exact_ok: spec.within_exact_ceiling(&params)?,
            params,
            expected,
            rep: c.rep,
            family: c.family,
            labels: c.labels,
            scope,
            fails_beyond: c.fails_beyond,
            weights: c.weights,
            stable_under: c.stable_under,
            extras: c.extras,
            negative_controls: c.negative_controls,
            table_rows,
        })
    }

    /// One line per entry and table row, with executable or metadata status.
    pub fn list(&self) -> String {
        let mut out = String::new();
        for e in self.entries() {
            let aliases = if e.aliases.is_empty() { String::new() } else { format!(" [{}]", e.aliases.join(", ")) };
            out.push_str(&format!("{} (executable){aliases}: {}\n    {}\n", e.id, e.title, e.provenance));
        }
        for t in self.tables() {
            let status = if t.is_executable() { "executable" } else { "metadata" };
            let by = t.realised_by.as_ref().map_or(String::new(), |r| {
                format!(" via {r}{}", t.when.as_ref().map_or(String::new(), |w| format!(" when {w}")))
            });
            out.push_str(&format!("{} ({status}): {} on {}{by}\n", t.id, t.group, t.module));
        }
        out
    }

    /// Description of an entry or table row.
    pub fn show(&self, name: &str) -> Result<String> {
        if let Ok(e) = self.manifest.entry(name) {
            let x = &e.expected;
            let mut out = format!("{} (executable)\n  title: {}\n  provenance: {}\n", e.id, e.title, e.provenance);
            if !e.aliases.is_empty() {
                out.push_str(&format!("  aliases: {}\n", e.aliases.join(", ")));
            }
            for (k, s) in &e.params {
                out.push_str(&format!("  parameter {k}: default {}, range {}..={}\n", s.default, s.min, s.max));
            }
            for (k, v) in &e.options {
                out.push_str(&format!("  {k}: {v}\n"));
            }
            if let Some(c) = &e.exact_ceiling {
                out.push_str(&format!("  exact ceiling: {c}\n"));
            }
            out.push_str(&format!("  dim V = {}\n  dim g = {}\n  l = dim h = {}\n", x.dim_v, x.dim_g, x.l));
            out.push_str(&format!("  covariant degrees: {}\n", x.family_degrees.join(", ")));
            out.push_str(&format!("  invariant degrees: {}\n", x.invariant_degrees_display));
            out.push_str(&format!("  q(V//G) = {}\n", x.q));
            if let Some(s) = &x.audit_surplus {
                out.push_str(&format!("  degree surplus: {s}\n"));
            }
            if let Some(d) = &x.dim_vg {
                out.push_str(&format!("  dim V//G = {d}\n"));
            }
            out.push_str(&format!("  equivariance scope: {}\n", x.scope));
            let rows: Vec<&str> = self
                .tables()
                .iter()
                .filter(|t| t.realised_by.as_deref() == Some(e.id.as_str()))
                .map(|t| t.id.as_str())
                .collect();
            if !rows.is_empty() {
                out.push_str(&format!("  table rows: {}\n", rows.join(", ")));
            }
            let p = e.default_params();
            let v = e.expected_at(&p)?;
            let degs: Vec<String> = v.invariant_degrees.iter().map(u32::to_string).collect();
            out.push_str(&format!("  at defaults {p:?}: invariant degrees {}, q = {}\n", degs.join(", "), v.q));
            return Ok(out);
        }
        let t = self.manifest.table_row(name).map_err(|_| Error::UnknownEntry(name.to_string()))?;
        let status = if t.is_executable() { "executable" } else { "metadata" };
        let mut out = format!("{} ({status})\n  G = {}\n  V = {}\n", t.id, t.group, t.module);
        let fields = [
            ("dim V", &t.dim_v),
            ("dim V//G", &t.dim_vg),
            ("q(V//G)", &t.q),
            ("FA", &t.fa),
            ("Eq", &t.eq),
            ("theta", &t.theta),
            ("grading", &t.grading),
            ("remark", &t.remark),
            ("realised by", &t.realised_by),
            ("when", &t.when),
        ];
        out.push_str(&format!("  dim h = {}\n", t.h));
        for (k, v) in fields {
            if let Some(v) = v {
                out.push_str(&format!("  {k}: {v}\n"));
            }
        }
        Ok(out)
    }
}
