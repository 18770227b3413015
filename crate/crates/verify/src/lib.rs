//! Batch verification of the covariant catalog: builds entries, runs the
//! check suite on each and assembles deterministic reports.

pub mod config;
pub mod report;
pub mod suite;

use rayon::prelude::*;
use sdcov_core::catalog::Catalog;
use thiserror::Error as ThisError;

pub use config::{Format, Hook, Mode, RunConfig};
pub use report::{CheckRecord, ConfigEcho, EntryReport, Report, TableComparison, WitnessRecord};

#[derive(Debug, ThisError)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] sdcov_core::Error),
    #[error("thread pool: {0}")]
    Pool(String),
    #[error("writing report: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Runs the suite on the selected entries. Unknown ids are an error; entries
/// whose parameters are out of range are reported as skipped. Entries run in
/// parallel and the report is sorted by id and parameters.
pub fn run_suite(config: &RunConfig) -> Result<Report> {
    let catalog = Catalog::load()?;
    let names: Vec<String> = if config.entry_ids.is_empty() {
        catalog.entries().iter().map(|e| e.id.clone()).collect()
    } else {
        config.entry_ids.clone()
    };
    for n in &names {
        catalog.entry(n)?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Pool(e.to_string()))?;
    let mut entries: Vec<EntryReport> = pool.install(|| {
        names
            .par_iter()
            .map(|name| {
                let spec = catalog.entry(name).expect("checked above");
                match catalog.build(name, &config.overrides) {
                    Ok(mut built) => {
                        if let Some(hook) = &config.hook {
                            hook(&mut built);
                        }
                        suite::run_entry(
                            &built,
                            config.mode.check_mode(),
                            config.seed,
                            config.samples,
                            config.negative_controls,
                            config.timings,
                        )
                    }
                    Err(e) => suite::skipped_entry(&spec.id, &spec.title, e.to_string()),
                }
            })
            .collect()
    });
    entries.sort_by(|a, b| (&a.id, &a.parameters).cmp(&(&b.id, &b.parameters)));
    entries.dedup_by(|a, b| a.id == b.id && a.parameters == b.parameters);
    Ok(Report { config: ConfigEcho::from(config), entries })
}
