//! Report types shared by the duality checks, the identity harness, and the
//! CLI. Rationals are carried as canonical "p/q" strings so that serialized
//! output is byte-deterministic.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::rational::{format_rat, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Holds,
    Fails,
    Skipped,
}

impl Verdict {
    pub fn holds_or_skipped(&self) -> bool {
        !matches!(self, Verdict::Fails)
    }
}

/// The first point (or index) where a residual failed to vanish.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureWitness {
    /// Where: an index like "n=3" or a grid point like "x=1/2, y=-3".
    pub location: String,
    /// The exact nonzero residual at that point.
    pub residual: String,
}

/// Outcome of one identity check: parameters, exact residuals, verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    pub verdict: Verdict,
    /// Number of grid points or indices evaluated.
    pub points: usize,
    /// Exact residual (LHS - RHS) per evaluated point, in evaluation order.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub residuals: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<FailureWitness>,
    /// True when the grid is large enough that zero-on-grid proves the
    /// polynomial identity at its degree bounds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid_certifies: Option<bool>,
    /// Set when the printed form of the identity required a sign
    /// reinterpretation to hold; `verdict` then refers to the repaired form.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed_form: Option<PrintedForm>,
    /// Free-form remark, e.g. why a check was skipped.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Status of the form exactly as displayed in the source, for identities
/// whose printed form needed repair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrintedForm {
    pub verdict: Verdict,
    pub note: String,
}

impl IdentityReport {
    pub fn new(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            params: BTreeMap::new(),
            verdict: Verdict::Holds,
            points: 0,
            residuals: Vec::new(),
            first_failure: None,
            grid_certifies: None,
            printed_form: None,
            note: None,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// Folds a stream of (location, residual) pairs into the report.
    pub fn record_residuals<I>(mut self, it: I) -> Self
    where
        I: IntoIterator<Item = (String, Rat)>,
    {
        use num_traits::Zero;
        for (location, residual) in it {
            self.points += 1;
            if !residual.is_zero() && self.first_failure.is_none() {
                self.first_failure =
                    Some(FailureWitness { location, residual: format_rat(&residual) });
            }
            self.residuals.push(format_rat(&residual));
        }
        if self.first_failure.is_some() {
            self.verdict = Verdict::Fails;
        }
        self
    }

    pub fn skipped(mut self, note: impl Into<String>) -> Self {
        self.verdict = Verdict::Skipped;
        self.note = Some(note.into());
        self
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}
