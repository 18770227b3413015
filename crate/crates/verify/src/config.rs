//! Run configuration shared by the library and the command line.

use std::fmt;
use std::sync::Arc;

use sdcov_core::catalog::{BuiltEntry, Params};
use sdcov_core::exact::CheckMode;
use serde::Serialize;

/// Called on each built entry before the suite runs; used to inject faults.
pub type Hook = Arc<dyn Fn(&mut BuiltEntry) + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Sampled,
    #[default]
    Auto,
}

impl Mode {
    pub fn check_mode(self) -> CheckMode {
        match self {
            Mode::Exact => CheckMode::Exact,
            Mode::Sampled => CheckMode::Sampled,
            Mode::Auto => CheckMode::Auto,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone)]
pub struct RunConfig {
    /// Entry ids or aliases; empty means every executable entry.
    pub entry_ids: Vec<String>,
    /// Values for `n`, `m`, `k`; entries ignore parameters they do not have.
    pub overrides: Params,
    pub seed: u64,
    pub mode: Mode,
    pub samples: usize,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    pub format: Format,
    pub negative_controls: bool,
    /// Records wall-clock time per check. Off by default so that reports
    /// are byte-identical across runs.
    pub timings: bool,
    pub hook: Option<Hook>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            entry_ids: Vec::new(),
            overrides: Params::new(),
            seed: 0,
            mode: Mode::Auto,
            samples: 20,
            jobs: 0,
            format: Format::Json,
            negative_controls: false,
            timings: false,
            hook: None,
        }
    }
}

impl fmt::Debug for RunConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RunConfig")
            .field("entry_ids", &self.entry_ids)
            .field("overrides", &self.overrides)
            .field("seed", &self.seed)
            .field("mode", &self.mode)
            .field("samples", &self.samples)
            .field("jobs", &self.jobs)
            .field("format", &self.format)
            .field("negative_controls", &self.negative_controls)
            .field("timings", &self.timings)
            .field("hook", &self.hook.is_some())
            .finish()
    }
}

impl RunConfig {
    pub fn entries(mut self, ids: &[&str]) -> Self {
        self.entry_ids = ids.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn param(mut self, key: &str, value: i64) -> Self {
        self.overrides.insert(key.to_string(), value);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_hook(mut self, hook: impl Fn(&mut BuiltEntry) + Send + Sync + 'static) -> Self {
        self.hook = Some(Arc::new(hook));
        self
    }
}
