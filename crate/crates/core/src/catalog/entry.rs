use std::fmt;
use std::sync::Arc;

use super::check::CheckResult;
use super::manifest::{Expected, Params, TableRow, TableValues};
use crate::covariant::Covariant;
use crate::exact::{CheckConfig, Scalar};
use crate::lie::Representation;
use crate::Result;

/// A set of basis elements of `g`, e.g. the basis of one factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scope {
    pub name: String,
    pub indices: Vec<usize>,
}

impl Scope {
    pub fn full(rep: &Representation) -> Self {
        Scope { name: rep.algebra().name().to_string(), indices: (0..rep.algebra().dim()).collect() }
    }
}

/// `x * F_member = weight F_member` for a fixed `x` in `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCheck {
    pub name: String,
    pub x: Vec<Scalar>,
    pub member: usize,
    pub weight: Scalar,
}

type CheckFn = Box<dyn Fn(&CheckConfig) -> Result<CheckResult> + Send + Sync>;

/// An entry-specific check.
pub struct ExtraCheck {
    pub name: String,
    run: CheckFn,
}

impl fmt::Debug for ExtraCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtraCheck({})", self.name)
    }
}

impl ExtraCheck {
    pub fn new(
        name: impl Into<String>,
        run: impl Fn(&CheckConfig) -> Result<CheckResult> + Send + Sync + 'static,
    ) -> Self {
        ExtraCheck { name: name.into(), run: Box::new(run) }
    }

    /// Runs the check; the result always carries this check's name.
    pub fn run(&self, cfg: &CheckConfig) -> CheckResult {
        match (self.run)(&cfg.derive(&self.name)) {
            Ok(r) => r.named(self.name.clone()),
            Err(e) => CheckResult::from_error(self.name.clone(), &e),
        }
    }
}

/// Everything a builder produces for one set of parameters.
#[derive(Debug)]
pub struct Construction {
    pub rep: Arc<Representation>,
    pub family: Vec<Covariant>,
    pub labels: Vec<String>,
    /// Where equivariance is asserted; `None` means all of `g`.
    pub scope: Option<Scope>,
    /// A larger algebra on which equivariance is expected to fail.
    pub fails_beyond: Option<Scope>,
    pub weights: Vec<WeightCheck>,
    /// An algebra under which the span of the family must be stable even
    /// though single members need not be equivariant.
    pub stable_under: Option<Scope>,
    pub extras: Vec<ExtraCheck>,
    pub negative_controls: Vec<ExtraCheck>,
}

impl Construction {
    pub fn new(rep: Arc<Representation>, family: Vec<Covariant>, labels: Vec<String>) -> Self {
        Construction {
            rep,
            family,
            labels,
            scope: None,
            fails_beyond: None,
            weights: Vec::new(),
            stable_under: None,
            extras: Vec::new(),
            negative_controls: Vec::new(),
        }
    }
}

/// A catalog entry built at concrete parameters.
#[derive(Debug)]
pub struct BuiltEntry {
    pub id: String,
    pub title: String,
    pub provenance: String,
    pub params: Params,
    pub expected: Expected,
    /// Whether the parameters are within the exact-mode ceiling.
    pub exact_ok: bool,
    pub rep: Arc<Representation>,
    pub family: Vec<Covariant>,
    pub labels: Vec<String>,
    pub scope: Scope,
    pub fails_beyond: Option<Scope>,
    pub weights: Vec<WeightCheck>,
    pub stable_under: Option<Scope>,
    pub extras: Vec<ExtraCheck>,
    pub negative_controls: Vec<ExtraCheck>,
    pub table_rows: Vec<(TableRow, TableValues)>,
}
