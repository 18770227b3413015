//! Outcomes of individual verification checks.

use std::fmt;

use crate::exact::{Identity, Scalar};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    SampledPass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::SampledPass => "sampled-pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }

    pub fn is_pass(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::SampledPass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether the checked statement is expected to hold or to fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Expect {
    Holds,
    Fails,
}

impl Expect {
    pub fn as_str(self) -> &'static str {
        match self {
            Expect::Holds => "holds",
            Expect::Fails => "fails",
        }
    }
}

/// A counterexample or certificate attached to a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub point: Vec<Scalar>,
    pub component: Option<usize>,
    pub value: Option<Scalar>,
    pub note: String,
}

impl Witness {
    pub fn note(note: impl Into<String>) -> Self {
        Witness { point: Vec::new(), component: None, value: None, note: note.into() }
    }

    pub fn at(point: Vec<Scalar>, note: impl Into<String>) -> Self {
        Witness { point, component: None, value: None, note: note.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub verdict: Verdict,
    pub expect: Expect,
    pub witness: Option<Witness>,
    pub detail: String,
}

impl CheckResult {
    /// Verdict for a polynomial identity. With `Expect::Fails` a failing
    /// point is the certificate and the check passes.
    pub fn from_identity(name: impl Into<String>, expect: Expect, id: &Identity) -> Self {
        let name = name.into();
        match (id, expect) {
            (Identity::Proved, Expect::Holds) => Self::pass(name, "proved by expansion"),
            (Identity::SampledHolds { trials }, Expect::Holds) => CheckResult {
                name,
                verdict: Verdict::SampledPass,
                expect,
                witness: None,
                detail: format!("vanishes at {trials} random integer points"),
            },
            (Identity::Fails { point, component, value }, _) => CheckResult {
                name,
                verdict: if expect == Expect::Fails { Verdict::Pass } else { Verdict::Fail },
                expect,
                witness: Some(Witness {
                    point: point.clone(),
                    component: Some(*component),
                    value: Some(value.clone()),
                    note: "nonzero value".into(),
                }),
                detail: format!("component {component} equals {value} at the witness point"),
            },
            (Identity::Proved, Expect::Fails) => CheckResult {
                name,
                verdict: Verdict::Fail,
                expect,
                witness: Some(Witness::note("identity proved by expansion")),
                detail: "expected a failure but the identity holds".into(),
            },
            (Identity::SampledHolds { trials }, Expect::Fails) => CheckResult {
                name,
                verdict: Verdict::Fail,
                expect,
                witness: Some(Witness::note(format!("no nonzero value in {trials} samples"))),
                detail: "expected a failure but every sample vanished".into(),
            },
        }
    }

    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), verdict: Verdict::Pass, expect: Expect::Holds, witness: None, detail: detail.into() }
    }

    pub fn sampled_pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            verdict: Verdict::SampledPass,
            expect: Expect::Holds,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            verdict: Verdict::Fail,
            expect: Expect::Holds,
            witness: Some(witness),
            detail: detail.into(),
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            verdict: Verdict::Skipped,
            expect: Expect::Holds,
            witness: None,
            detail: reason.into(),
        }
    }

    /// Pass if `ok`, otherwise fail with `witness`.
    pub fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>, witness: impl FnOnce() -> Witness) -> Self {
        if ok {
            Self::pass(name, detail)
        } else {
            Self::fail(name, witness(), detail)
        }
    }

    /// An equality of computed and expected values.
    pub fn equal<T: PartialEq + fmt::Debug>(name: impl Into<String>, computed: T, expected: T) -> Self {
        let detail = format!("computed {computed:?}, expected {expected:?}");
        let ok = computed == expected;
        Self::check(name, ok, detail.clone(), || Witness::note(detail))
    }

    /// Errors while running a check: refusals of exact mode become skips,
    /// everything else a failure.
    pub fn from_error(name: impl Into<String>, e: &Error) -> Self {
        match e {
            Error::ExactRefused(_) | Error::InvalidParams(_) => Self::skipped(name, e.to_string()),
            _ => Self::fail(name, Witness::note(e.to_string()), "error while checking"),
        }
    }

    /// Renames, keeping everything else.
    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Marks the check as expected to fail; the verdict is unchanged.
    pub fn expecting(mut self, expect: Expect) -> Self {
        self.expect = expect;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::s;

    #[test]
    fn identity_polarities() {
        let bad = Identity::Fails { point: vec![s(1)], component: 0, value: s(2) };
        assert_eq!(CheckResult::from_identity("x", Expect::Holds, &bad).verdict, Verdict::Fail);
        assert_eq!(CheckResult::from_identity("x", Expect::Fails, &bad).verdict, Verdict::Pass);
        assert_eq!(CheckResult::from_identity("x", Expect::Fails, &Identity::Proved).verdict, Verdict::Fail);
        let sampled = Identity::SampledHolds { trials: 5 };
        assert_eq!(CheckResult::from_identity("x", Expect::Holds, &sampled).verdict, Verdict::SampledPass);
        assert!(CheckResult::from_identity("x", Expect::Holds, &bad).witness.is_some());
    }

    #[test]
    fn refusal_is_a_skip() {
        let r = CheckResult::from_error("x", &Error::ExactRefused("big".into()));
        assert_eq!(r.verdict, Verdict::Skipped);
        let r = CheckResult::from_error("x", &Error::NotSubalgebra);
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.witness.is_some());
    }
}
