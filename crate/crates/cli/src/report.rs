use std::fmt;

use gframe_core::{FrameBounds, GFrame};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrameSummary {
    pub n: usize,
    pub counts: Vec<usize>,
    pub lower: f64,
    pub upper: f64,
    pub epsilon: Option<f64>,
}

impl FrameSummary {
    pub fn new(frame: &GFrame, bounds: &FrameBounds) -> Self {
        Self {
            n: frame.dim(),
            counts: frame.counts(),
            lower: bounds.lower,
            upper: bounds.upper,
            epsilon: bounds.epsilon,
        }
    }
}

impl fmt::Display for FrameSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n        {}", self.n)?;
        writeln!(f, "counts   {:?}", self.counts)?;
        writeln!(f, "A        {}", self.lower)?;
        writeln!(f, "B        {}", self.upper)?;
        match self.epsilon {
            Some(e) => writeln!(f, "epsilon  {e}"),
            None => writeln!(f, "epsilon  n/a"),
        }
    }
}

/// One row of a verification report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Check {
    fn with_residual(name: &str, lhs: f64, rhs: f64, residual: f64, tolerance: f64) -> Self {
        let finite = lhs.is_finite() && rhs.is_finite() && residual.is_finite();
        Self {
            name: name.to_string(),
            lhs,
            rhs,
            residual: if finite { residual } else { f64::MAX },
            tolerance,
            passed: finite && residual <= tolerance,
            error: (!finite).then(|| "non-finite value".to_string()),
        }
    }

    /// `|lhs - rhs| <= tolerance`
    pub fn equal(name: &str, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self::with_residual(name, lhs, rhs, (lhs - rhs).abs(), tolerance)
    }

    /// `lhs <= rhs + tolerance`
    pub fn at_most(name: &str, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self::with_residual(name, lhs, rhs, (lhs - rhs).max(0.0), tolerance)
    }

    /// `lhs >= rhs - tolerance`
    pub fn at_least(name: &str, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self::with_residual(name, lhs, rhs, (rhs - lhs).max(0.0), tolerance)
    }

    pub fn failed(name: &str, error: impl ToString) -> Self {
        Self {
            name: name.to_string(),
            lhs: 0.0,
            rhs: 0.0,
            residual: 0.0,
            tolerance: 0.0,
            passed: false,
            error: Some(error.to_string()),
        }
    }

    /// How far into (or past) its tolerance band the row sits.
    fn severity(&self) -> f64 {
        if !self.passed {
            f64::INFINITY
        } else if self.tolerance > 0.0 {
            self.residual / self.tolerance
        } else {
            0.0
        }
    }
}

/// Folds repeated trials of one check into the single worst row.
#[derive(Debug, Default)]
pub struct Worst {
    row: Option<Check>,
}

impl Worst {
    pub fn push(&mut self, check: Check) {
        let replace = match &self.row {
            None => true,
            Some(current) => check.severity() > current.severity(),
        };
        if replace {
            self.row = Some(check);
        }
    }

    pub fn finish(self, name: &str) -> Check {
        self.row
            .unwrap_or_else(|| Check::failed(name, "no trials were run"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub frame: FrameSummary,
    pub suite: String,
    pub trials: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn new(frame: FrameSummary, suite: &str, trials: usize, seed: u64, checks: Vec<Check>) -> Self {
        let overall = checks.iter().all(|c| c.passed);
        Self {
            frame,
            suite: suite.to_string(),
            trials,
            seed,
            checks,
            overall,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.frame)?;
        writeln!(f, "suite    {} (trials {}, seed {})", self.suite, self.trials, self.seed)?;
        writeln!(f)?;
        writeln!(
            f,
            "{:<44} {:>13} {:>13} {:>10} {:>10}  status",
            "check", "lhs", "rhs", "residual", "tolerance"
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<44} {:>13.6e} {:>13.6e} {:>10.2e} {:>10.2e}  {}",
                c.name,
                c.lhs,
                c.rhs,
                c.residual,
                c.tolerance,
                if c.passed { "pass" } else { "FAIL" }
            )?;
            if let Some(e) = &c.error {
                writeln!(f, "    error: {e}")?;
            }
        }
        writeln!(f)?;
        writeln!(f, "overall  {}", if self.overall { "PASS" } else { "FAIL" })
    }
}
