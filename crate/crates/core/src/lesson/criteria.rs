//! Six checks a reconstruction of the lesson has to meet, evaluated from a
//! lesson report, the method trace of the same run, and a step budget.

use std::fmt;

use crate::arith::Natural;
use crate::error::{Error, Result};
use crate::theodorus::{naive_boys_tree, MethodTrace};

use super::{LessonReport, StopReason};

const EXPECTED_START: u64 = 3;
const EXPECTED_STOP: u64 = 17;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub evidence: String,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "pass" } else { "FAIL" };
        write!(f, "c{} {mark} {}: {}", self.id, self.name, self.evidence)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriteriaReport {
    pub criteria: [Criterion; 6],
}

impl CriteriaReport {
    pub fn all_passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }

    pub fn get(&self, id: u8) -> &Criterion {
        &self.criteria[usize::from(id - 1)]
    }
}

impl fmt::Display for CriteriaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.criteria {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn criteria_check(report: &LessonReport, trace: &MethodTrace, budget: usize) -> Result<CriteriaReport> {
    check_same_run(report, trace)?;

    let first = report.examined.first().map(|e| &e.n);
    let c1 = Criterion {
        id: 1,
        name: "starts at 3",
        passed: first == Some(&Natural::from(EXPECTED_START)),
        evidence: match first {
            Some(n) => format!("first examined n = {n}"),
            None => "nothing examined".to_owned(),
        },
    };

    let foreign = trace
        .cases()
        .iter()
        .find_map(|case| case.steps.iter().find(|s| s.subject != case.n).map(|s| (&case.n, &s.subject)));
    let c2 = Criterion {
        id: 2,
        name: "case by case",
        passed: foreign.is_none(),
        evidence: match foreign {
            None => format!("{} cases, every step on its own n", trace.cases().len()),
            Some((n, other)) => format!("case {n} charges a step to {other}"),
        },
    };

    let stop_17 = report.stop_reason == StopReason::FirstInconclusive
        && report.stop.as_ref() == Some(&Natural::from(EXPECTED_STOP));
    let c3 = Criterion {
        id: 3,
        name: "accounts for the stop at 17",
        passed: stop_17,
        evidence: match (&report.stop, report.stop_reason) {
            (Some(n), StopReason::FirstInconclusive) => format!("stopped at {n}, first inconclusive case"),
            (Some(n), StopReason::RangeExhausted) => format!("ran out of range at {n} with nothing left open"),
            (None, _) => "nothing examined".to_owned(),
        },
    };

    let outside: Vec<_> = trace
        .cases()
        .iter()
        .flat_map(|c| &c.steps)
        .filter(|s| !s.kind.is_ancient())
        .collect();
    let c4 = Criterion {
        id: 4,
        name: "period-appropriate knowledge",
        passed: outside.is_empty(),
        evidence: match outside.first() {
            None => "all steps are subtraction, parity, remainder by 8, square test or reduction".to_owned(),
            Some(step) => format!("{} steps outside the whitelist, first {:?}", outside.len(), step.kind),
        },
    };

    let c5 = Criterion {
        id: 5,
        name: "fits in one lesson",
        passed: report.total_steps <= budget,
        evidence: format!("{} steps against a budget of {budget}", report.total_steps),
    };

    let c6 = match &report.stop {
        Some(stop) => {
            let (verdict, asserted) = naive_boys_tree(stop)?;
            Criterion {
                id: 6,
                name: "invites an unproved generalization",
                passed: asserted,
                evidence: if asserted {
                    format!("on {stop} the naive rule asserts {verdict} without proof")
                } else {
                    format!("on {stop} the naive rule has a proof ({verdict})")
                },
            }
        }
        None => Criterion {
            id: 6,
            name: "invites an unproved generalization",
            passed: false,
            evidence: "no stop case".to_owned(),
        },
    };

    Ok(CriteriaReport {
        criteria: [c1, c2, c3, c4, c5, c6],
    })
}

fn check_same_run(report: &LessonReport, trace: &MethodTrace) -> Result<()> {
    let cases = trace.cases();
    if report.examined.len() != cases.len() {
        return Err(Error::MismatchedTrace(format!(
            "{} examined integers but {} traced cases",
            report.examined.len(),
            cases.len()
        )));
    }
    for (e, c) in report.examined.iter().zip(cases) {
        if e.n != c.n || e.verdict != c.verdict {
            return Err(Error::MismatchedTrace(format!("report has {} where trace has {}", e.n, c.n)));
        }
    }
    if report.total_steps != trace.total_steps() {
        return Err(Error::MismatchedTrace(format!(
            "report counts {} steps, trace {}",
            report.total_steps,
            trace.total_steps()
        )));
    }
    Ok(())
}
