//! Mechanical verification of the identities tying the sequences and
//! matrices together.
//!
//! Every check compares exact polynomials in `x` and `λ`; there is no
//! sampling and no tolerance. A check fails iff some residual is a nonzero
//! polynomial, and the first such residual is reported.
//!
//! Checks fall into two groups: internal consistency (always run) and
//! comparison with the transcribed printed values (undisputed entries always,
//! disputed ones on request).

mod identities;
pub mod printed;

use serde::Serialize;

use crate::algebra::BiPoly;

pub use identities::*;
pub use printed::{check_printed_matrices, check_printed_tables, Transcription};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one identity check over an index range.
///
/// `status` is `Fail` exactly when `residual` is present, and a present
/// residual is never the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    check_id: String,
    /// Inclusive.
    n_range: [usize; 2],
    status: Status,
    residual: Option<BiPoly>,
    /// Index of the residual, when failed.
    failed_at: Option<usize>,
    anchor: String,
}

impl CheckResult {
    /// Evaluates `residual(n)` for every `n` in `lo..=hi`, stopping at the
    /// first nonzero one.
    pub fn over_range(
        check_id: impl Into<String>,
        anchor: impl Into<String>,
        lo: usize,
        hi: usize,
        mut residual: impl FnMut(usize) -> BiPoly,
    ) -> Self {
        let failure = (lo..=hi)
            .map(|n| (n, residual(n)))
            .find(|(_, r)| !r.is_zero());
        CheckResult {
            check_id: check_id.into(),
            n_range: [lo, hi],
            status: if failure.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            failed_at: failure.as_ref().map(|(n, _)| *n),
            residual: failure.map(|(_, r)| r),
            anchor: anchor.into(),
        }
    }

    /// A single-index check.
    pub fn from_residual(
        check_id: impl Into<String>,
        anchor: impl Into<String>,
        n: usize,
        residual: BiPoly,
    ) -> Self {
        let mut residual = Some(residual);
        CheckResult::over_range(check_id, anchor, n, n, |_| {
            residual.take().unwrap_or_default()
        })
    }

    pub fn check_id(&self) -> &str {
        &self.check_id
    }

    pub fn n_range(&self) -> [usize; 2] {
        self.n_range
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn residual(&self) -> Option<&BiPoly> {
        self.residual.as_ref()
    }

    pub fn failed_at(&self) -> Option<usize> {
        self.failed_at
    }

    pub fn anchor(&self) -> &str {
        &self.anchor
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub n_max: usize,
    /// Also compare the disputed printed entries.
    pub include_paper_tables: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    n_max: usize,
    include_paper_tables: bool,
    all_pass: bool,
    checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(options: SuiteOptions, checks: Vec<CheckResult>) -> Self {
        VerificationReport {
            n_max: options.n_max,
            include_paper_tables: options.include_paper_tables,
            all_pass: checks.iter().all(CheckResult::passed),
            checks,
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn include_paper_tables(&self) -> bool {
        self.include_paper_tables
    }

    pub fn all_pass(&self) -> bool {
        self.all_pass
    }

    pub fn checks(&self) -> &[CheckResult] {
        &self.checks
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, check_id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check_id == check_id)
    }
}

/// Runs every check in a fixed order.
pub fn run_all(options: SuiteOptions) -> VerificationReport {
    let n_max = options.n_max;
    let transcription = Transcription::load().expect("embedded transcription is valid");
    let mut checks = Vec::new();
    checks.push(check_degenerate_binomial(n_max));
    checks.extend(check_dual_routes(n_max));
    checks.extend(check_boundary_and_relations(n_max));
    checks.extend(check_seidel_transforms(n_max));
    checks.push(check_bernoulli_shift(n_max));
    checks.push(check_euler_shift(n_max));
    checks.push(check_genocchi_shift(n_max));
    checks.extend(check_final_sequences(n_max));
    checks.extend(check_classical_degeneration(n_max));
    checks.extend(check_printed_tables(
        &transcription,
        n_max,
        options.include_paper_tables,
    ));
    checks.extend(check_printed_matrices(
        &transcription,
        options.include_paper_tables,
    ));
    VerificationReport::new(options, checks)
}
