use std::fmt;

use cp3_algebra::RatFn;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Computed and reported without an expected value to compare to.
    Recorded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Recorded => "recorded",
        }
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: String,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, witness: impl Into<String>) -> Check {
        Check { name: name.into(), status, witness: witness.into() }
    }

    pub fn pass(name: impl Into<String>, witness: impl Into<String>) -> Check {
        Check::new(name, Status::Pass, witness)
    }

    pub fn recorded(name: impl Into<String>, witness: impl Into<String>) -> Check {
        Check::new(name, Status::Recorded, witness)
    }

    /// Pass iff every residual is zero; the witness lists the nonzero ones.
    pub fn residuals(name: impl Into<String>, labels: &[&str], residuals: &[RatFn]) -> Check {
        let bad: Vec<String> = labels
            .iter()
            .zip(residuals)
            .filter(|(_, r)| !r.is_zero())
            .map(|(l, r)| format!("{l}: {r}"))
            .collect();
        if bad.is_empty() {
            Check::pass(name, format!("{} zero residuals", residuals.len()))
        } else {
            Check::new(name, Status::Fail, bad.join("; "))
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| !c.is_fail())
}
