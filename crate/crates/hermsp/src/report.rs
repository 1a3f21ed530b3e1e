//! Verification reports rendered as plain tables.

use std::fmt::Write as _;

use hermsp_core::parametrization::{
    adaptedness_residual, equivariance_residual, verify_maximal, FramedRepresentation, LocalSystem, CLOSURE_FACTOR,
};
use hermsp_core::surface::FundamentalPolygon;
use serde::Serialize;

use crate::experiments::{Census, RealizationSweep};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub value: String,
    pub bound: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub title: String,
    pub facts: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self { title: title.into(), ..Self::default() }
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.facts.push((key.into(), value.to_string()));
        self
    }

    /// `value <= bound`.
    pub fn below(&mut self, name: &str, value: f64, bound: f64) -> &mut Self {
        self.checks.push(Check {
            name: name.into(),
            value: format!("{value:.3e}"),
            bound: format!("<= {bound:.1e}"),
            passed: value <= bound,
        });
        self
    }

    pub fn equal<T: PartialEq + ToString>(&mut self, name: &str, value: T, expected: T) -> &mut Self {
        self.checks.push(Check {
            name: name.into(),
            value: value.to_string(),
            bound: format!("= {}", expected.to_string()),
            passed: value == expected,
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<String> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect()
    }

    pub fn into_result(self) -> Result<Self> {
        if self.passed() {
            Ok(self)
        } else {
            Err(Error::Verification { failed: self.failed() })
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.title);
        let key_width =
            self.facts.iter().map(|(k, _)| k.len()).chain(self.checks.iter().map(|c| c.name.len())).max().unwrap_or(0);
        for (k, v) in &self.facts {
            let _ = writeln!(out, "  {k:<key_width$}  {v}");
        }
        for c in &self.checks {
            let status = if c.passed { "ok" } else { "FAILED" };
            let _ = writeln!(out, "  {:<key_width$}  {:<12} {:<12} {status}", c.name, c.value, c.bound);
        }
        out
    }
}

/// Membership of every generator, cycle closure, adaptedness, equivariance
/// and maximality of the framing.
pub fn synthesis_checks(
    report: &mut Report,
    p: &FundamentalPolygon,
    ls: &LocalSystem,
    fr: &FramedRepresentation,
) -> Result<()> {
    let tol = fr.algebra.tol();
    let membership = fr.generators.iter().map(|g| g.residual()).fold(0.0, f64::max);
    report
        .below("sp2 membership", membership, tol)
        .below("cycle closure", ls.closure_residual(), CLOSURE_FACTOR * tol)
        .below("adaptedness", adaptedness_residual(ls, fr)?, CLOSURE_FACTOR * tol)
        .below("equivariance", equivariance_residual(fr, p)?, CLOSURE_FACTOR * tol)
        .equal("maximal triples", verify_maximal(fr, p), true);
    Ok(())
}

fn label_string(label: &[i32]) -> String {
    let parts: Vec<String> = label.iter().map(|x| format!("{x:+}")).collect();
    format!("({})", parts.join(","))
}

pub fn census_report(report: &mut Report, c: &Census) {
    report.fact("samples", c.samples);
    for (label, count) in &c.labels {
        report.fact(format!("label {}", label_string(label)), count);
    }
    report.equal("distinct labels", c.observed() as u64, c.expected);
}

pub fn realization_report(report: &mut Report, s: &RealizationSweep, tol: f64) {
    report
        .fact("form", format!("{:?}", s.form))
        .fact("samples", s.samples)
        .fact("worst member residual", format!("{:.3e}", s.worst_member_residual))
        .fact("best perturbed residual", format!("{:.3e}", s.best_perturbed_residual))
        .fact("tolerance", format!("{tol:.1e}"))
        .equal("members preserving", s.members_preserving, s.samples)
        .equal("perturbations rejected", s.perturbed_rejected, s.samples)
        .equal("compact and preserving", s.compact_preserving, s.samples);
}
