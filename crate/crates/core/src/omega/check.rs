use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::Polynomial;

use super::{
    omega_closed_form, omega_lagrange, omega_series_oracle, OmegaError, OmegaProblem, OmegaResult,
};

/// Outcome of one pairwise comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub name: String,
    pub passed: bool,
    /// Number of terms in the object that was compared (cross-multiplied
    /// numerator or truncated series).
    pub terms: usize,
}

/// Summary of a successful three-way comparison.
#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    pub n: usize,
    pub m: usize,
    pub k: u32,
    pub truncation: u32,
    pub comparisons: Vec<Comparison>,
    pub numerator_terms: NumeratorTerms,
    #[serde(skip)]
    pub timings: Timings,
}

#[derive(Clone, Debug, Serialize)]
pub struct NumeratorTerms {
    pub schur: usize,
    pub lagrange: usize,
    pub series: usize,
}

#[derive(Clone, Debug, Default)]
pub struct Timings {
    pub schur: Duration,
    pub lagrange: Duration,
    pub series: Duration,
}

impl CrossCheckReport {
    pub fn all_passed(&self) -> bool {
        self.comparisons.iter().all(|c| c.passed)
    }
}

impl fmt::Display for CrossCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "cross-check n={} m={} k={} D={}",
            self.n, self.m, self.k, self.truncation
        )?;
        for c in &self.comparisons {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "  {status}  {} ({} terms)", c.name, c.terms)?;
        }
        writeln!(
            f,
            "  numerator terms: schur={} lagrange={} series={}",
            self.numerator_terms.schur, self.numerator_terms.lagrange, self.numerator_terms.series
        )?;
        writeln!(
            f,
            "  timings: schur={:?} lagrange={:?} series={:?}",
            self.timings.schur, self.timings.lagrange, self.timings.series
        )?;
        write!(
            f,
            "{}",
            if self.all_passed() {
                "all-pass"
            } else {
                "FAILED"
            }
        )
    }
}

/// Runs all three evaluators (concurrently) and compares them: the Schur
/// and Lagrange forms must be equal as rational functions, and the Schur
/// form expanded to total degree `max_degree` must equal the series oracle.
pub fn cross_check(p: &OmegaProblem, max_degree: u32) -> Result<CrossCheckReport, OmegaError> {
    let (schur, lagrange, series) = std::thread::scope(|s| {
        let schur = s.spawn(|| timed(|| omega_closed_form(p)));
        let lagrange = s.spawn(|| timed(|| omega_lagrange(p)));
        let series = timed(|| Ok(omega_series_oracle(p, max_degree)));
        (
            schur.join().expect("schur evaluator panicked"),
            lagrange.join().expect("lagrange evaluator panicked"),
            series,
        )
    });
    let timings = Timings {
        schur: schur.1,
        lagrange: lagrange.1,
        series: series.1,
    };
    let mut report = compare_results(p, max_degree, &schur.0?, &lagrange.0?, &series.0?)?;
    report.timings = timings;
    Ok(report)
}

fn timed<T>(f: impl FnOnce() -> Result<T, OmegaError>) -> (Result<T, OmegaError>, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// Comparison stage of [`cross_check`] on already computed results.
///
/// Fails with [`OmegaError::MethodDisagreement`] naming the smallest
/// monomial at which the two sides differ.
pub fn compare_results(
    p: &OmegaProblem,
    max_degree: u32,
    schur: &OmegaResult,
    lagrange: &OmegaResult,
    series: &OmegaResult,
) -> Result<CrossCheckReport, OmegaError> {
    let mut comparisons = Vec::new();

    let (lhs, rhs) = schur.value.cross_multiplied(&lagrange.value);
    disagreement("schur vs lagrange (rational equality)", &lhs, &rhs)?;
    comparisons.push(Comparison {
        name: "schur vs lagrange (rational equality)".into(),
        passed: true,
        terms: lhs.len(),
    });

    let d = max_degree as i64;
    let expanded = schur.value.series_expansion(d)?;
    let oracle = series.value.series_expansion(d)?;
    let name = format!("schur series vs oracle (degree <= {max_degree})");
    disagreement(&name, &expanded, &oracle)?;
    comparisons.push(Comparison {
        name,
        passed: true,
        terms: oracle.len(),
    });

    Ok(CrossCheckReport {
        n: p.n(),
        m: p.m(),
        k: p.k(),
        truncation: max_degree,
        comparisons,
        numerator_terms: NumeratorTerms {
            schur: schur.value.numerator().len(),
            lagrange: lagrange.value.numerator().len(),
            series: series.value.numerator().len(),
        },
        timings: Timings::default(),
    })
}

fn disagreement(name: &str, lhs: &Polynomial, rhs: &Polynomial) -> Result<(), OmegaError> {
    let diff = lhs - rhs;
    let Some((m, _)) = diff.terms().next() else {
        return Ok(());
    };
    Err(OmegaError::MethodDisagreement {
        comparison: name.to_string(),
        monomial: m.to_string(),
        left: lhs.coefficient(m).to_string(),
        right: rhs.coefficient(m).to_string(),
    })
}
