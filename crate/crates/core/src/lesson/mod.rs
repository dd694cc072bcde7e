//! Replays the lesson on odd integers, one case at a time, and collects
//! the remainder table, stopping point and step counts.

mod coverage;
mod criteria;
mod render;

pub use coverage::{coverage_stats, CoverageStats, LIMITING_CONCLUSIVE_DENSITY};
pub use criteria::{criteria_check, CriteriaReport, Criterion};
pub use render::{render_coverage, render_table, Format};

use crate::anthyphairesis;
use crate::arith::{mod8, Mod8Class, Natural};
use crate::error::{Error, Result};
use crate::theodorus::{self, MethodTrace, TraceCase, Verdict, DEFAULT_CASE_BUDGET};

pub const DEFAULT_START: u64 = 3;
pub const DEFAULT_LIMIT: u64 = 99;
pub const DEFAULT_BUDGET: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Remainder by 8 with the even reduction.
    Theodorus,
    /// Reciprocal subtraction on `(sqrt(n), 1)`.
    Anthyphairesis { max_states: usize },
}

impl Method {
    fn classify(self, n: &Natural) -> Result<(Verdict, TraceCase)> {
        match self {
            Method::Theodorus => theodorus::classify(n),
            Method::Anthyphairesis { max_states } => anthyphairesis::classify(n, max_states),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopRule {
    UntilInconclusive,
    Exhaust,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    FirstInconclusive,
    RangeExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LessonConfig {
    pub start: Natural,
    pub limit: Natural,
    pub stop_rule: StopRule,
    pub method: Method,
    pub case_budget: usize,
}

impl Default for LessonConfig {
    fn default() -> Self {
        LessonConfig {
            start: Natural::from(DEFAULT_START),
            limit: Natural::from(DEFAULT_LIMIT),
            stop_rule: StopRule::UntilInconclusive,
            method: Method::Theodorus,
            case_budget: DEFAULT_CASE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Examined {
    pub n: Natural,
    pub remainder: Mod8Class,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LessonReport {
    pub examined: Vec<Examined>,
    pub start: Natural,
    /// Last examined integer; `None` when nothing was examined.
    pub stop: Option<Natural>,
    pub stop_reason: StopReason,
    pub total_steps: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lesson {
    pub report: LessonReport,
    pub trace: MethodTrace,
}

/// Walks the odd integers from `config.start` to `config.limit`.
pub fn run_lesson(config: &LessonConfig) -> Result<Lesson> {
    if config.start.is_even() || config.start < Natural::from(DEFAULT_START) {
        return Err(Error::InvalidStart(config.start.clone()));
    }
    let limit = config.limit.clone();
    let odds = std::iter::successors(Some(config.start.clone()), |n| Some(n + 2))
        .take_while(move |n| *n <= limit);
    drive(config.start.clone(), odds, config)
}

/// Runs the lesson over an arbitrary sequence, with no check on where it
/// starts or on parity. `start` and `limit` of the config are ignored; the
/// report's start is the first element (zero for an empty sequence).
pub fn replay(sequence: &[Natural], config: &LessonConfig) -> Result<Lesson> {
    let start = sequence.first().cloned().unwrap_or_default();
    drive(start, sequence.iter().cloned(), config)
}

fn drive(start: Natural, ns: impl Iterator<Item = Natural>, config: &LessonConfig) -> Result<Lesson> {
    let mut trace = MethodTrace::new(config.case_budget);
    let mut examined = Vec::new();
    let mut stop_reason = StopReason::RangeExhausted;
    for n in ns {
        let (verdict, case) = config.method.classify(&n)?;
        trace.push(case)?;
        let inconclusive = verdict.is_inconclusive();
        examined.push(Examined {
            remainder: mod8(&n),
            n,
            verdict,
        });
        if inconclusive && config.stop_rule == StopRule::UntilInconclusive {
            stop_reason = StopReason::FirstInconclusive;
            break;
        }
    }
    let report = LessonReport {
        stop: examined.last().map(|e| e.n.clone()),
        examined,
        start,
        stop_reason,
        total_steps: trace.total_steps(),
    };
    Ok(Lesson { report, trace })
}
