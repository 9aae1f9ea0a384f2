//! Pass/fail bookkeeping for identity sweeps.

use serde::Serialize;

use crate::Rational;

pub const DEFAULT_FAILURE_CAP: usize = 100;

/// One violated case. Values are kept as `num/den` strings so the report
/// serializes without loss.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of an identity sweep. Only the first `cap` failures are stored;
/// `failure_count` always holds the full number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub suite: String,
    pub cases: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    cap: usize,
}

impl IdentityReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self::with_cap(suite, DEFAULT_FAILURE_CAP)
    }

    pub fn with_cap(suite: impl Into<String>, cap: usize) -> Self {
        Self {
            suite: suite.into(),
            cases: 0,
            failure_count: 0,
            failures: Vec::new(),
            cap,
        }
    }

    /// Records one case; a failure is logged when `lhs != rhs`.
    pub fn check(&mut self, case: impl FnOnce() -> String, lhs: &Rational, rhs: &Rational) -> bool {
        self.cases += 1;
        if lhs == rhs {
            return true;
        }
        self.push_failure(case(), lhs.to_string(), rhs.to_string());
        false
    }

    /// Records one case whose outcome is a plain predicate.
    pub fn check_that(
        &mut self,
        case: impl FnOnce() -> String,
        holds: bool,
        detail: impl FnOnce() -> (String, String),
    ) -> bool {
        self.cases += 1;
        if !holds {
            let (lhs, rhs) = detail();
            self.push_failure(case(), lhs, rhs);
        }
        holds
    }

    fn push_failure(&mut self, case: String, lhs: String, rhs: String) {
        self.failure_count += 1;
        if self.failures.len() < self.cap {
            self.failures.push(Failure { case, lhs, rhs });
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Folds another report into this one, keeping this report's name.
    pub fn absorb(&mut self, other: IdentityReport) {
        self.cases += other.cases;
        self.failure_count += other.failure_count;
        let room = self.cap.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }

    pub fn cap(&self) -> usize {
        self.cap
    }
}
