//! The remainder-by-8 method for deciding whether `sqrt(n)` is rational.
//!
//! An odd square always leaves remainder 1 on division by 8. If `sqrt(n)`
//! were a ratio `p/q` of odd integers then `n q^2 = p^2`, and since `q^2`
//! is `8k + 1` the left side has the same remainder as `n`, while the right
//! side has remainder 1. So an odd `n` whose remainder is 3, 5 or 7 has an
//! irrational root. Remainder 1 leaves two cases: `n` is a perfect square
//! (rational), or it is not and the method says nothing. Even `n` are first
//! stripped of factors of 4; a core that is twice an odd number is `2 mod 4`
//! and cannot be a square.

use std::fmt;

use crate::arith::{isqrt, mod8, Mod8Class, Natural};
use crate::error::{Error, Result};

/// Per-case step budget used when none is given.
pub const DEFAULT_CASE_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Verdict {
    ProvedRational { root: Natural },
    ProvedIrrational(Reason),
    Inconclusive,
}

impl Verdict {
    /// `Some(true)` for a rational verdict, `Some(false)` for irrational,
    /// `None` when no claim is made.
    pub fn claims_rational(&self) -> Option<bool> {
        match self {
            Verdict::ProvedRational { .. } => Some(true),
            Verdict::ProvedIrrational(_) => Some(false),
            Verdict::Inconclusive => None,
        }
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Verdict::Inconclusive)
    }

    pub fn slug(&self) -> &'static str {
        match self {
            Verdict::ProvedRational { .. } => "proved_rational",
            Verdict::ProvedIrrational(_) => "proved_irrational",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::ProvedRational { root } => write!(f, "rational (root {root})"),
            Verdict::ProvedIrrational(reason) => write!(f, "irrational ({reason})"),
            Verdict::Inconclusive => {
                write!(f, "inconclusive (remainder 1, not a perfect square)")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Reason {
    /// Odd core with remainder 3, 5 or 7.
    OddRemainderNot1(Mod8Class),
    /// Core is `2 * odd`, hence `2 mod 4`.
    TwiceOddCore,
    /// `n = factor^2 * core`; `reason` applies to the core.
    ReducedTo {
        core: Natural,
        factor: Natural,
        reason: Box<Reason>,
    },
    /// Reciprocal subtraction on `(sqrt(n), 1)` reached a repeated state.
    PeriodicAnthyphairesis { period: usize },
    /// Remainder 1 and not a square, taken as irrational with no argument.
    NotAPerfectSquare,
}

impl Reason {
    /// Machine-readable tag; contains no commas so it can sit in a CSV cell.
    pub fn slug(&self) -> String {
        match self {
            Reason::OddRemainderNot1(_) => "odd_remainder_not_1".to_owned(),
            Reason::TwiceOddCore => "twice_odd_core".to_owned(),
            Reason::ReducedTo { core, factor, reason } => {
                format!("reduced_to_{core}_by_{factor}:{}", reason.slug())
            }
            Reason::PeriodicAnthyphairesis { period } => {
                format!("periodic_anthyphairesis_{period}")
            }
            Reason::NotAPerfectSquare => "not_a_perfect_square".to_owned(),
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::OddRemainderNot1(r) => write!(f, "remainder {r} by 8, not 1"),
            Reason::TwiceOddCore => write!(f, "twice an odd number, 2 mod 4"),
            Reason::ReducedTo { core, factor, reason } => {
                write!(f, "{factor}^2 x {core}; {core}: {reason}")
            }
            Reason::PeriodicAnthyphairesis { period } => {
                write!(f, "reciprocal subtraction repeats with period {period}")
            }
            Reason::NotAPerfectSquare => write!(f, "not a perfect square, asserted"),
        }
    }
}

/// Elementary operations a method may charge to a case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimitiveStep {
    Subtract,
    ParityCheck,
    Mod8Check,
    SquareTest,
    Reduce,
    /// Appeal to a result proved for all integers at once.
    GeneralTheorem,
}

/// Operations available to a teacher of the period.
pub const ANCIENT_WHITELIST: [PrimitiveStep; 5] = [
    PrimitiveStep::Subtract,
    PrimitiveStep::ParityCheck,
    PrimitiveStep::Mod8Check,
    PrimitiveStep::SquareTest,
    PrimitiveStep::Reduce,
];

impl PrimitiveStep {
    pub fn is_ancient(self) -> bool {
        ANCIENT_WHITELIST.contains(&self)
    }
}

/// One charged operation; `subject` is the integer whose case required it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub kind: PrimitiveStep,
    pub subject: Natural,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceCase {
    pub n: Natural,
    pub steps: Vec<Step>,
    pub verdict: Verdict,
}

impl TraceCase {
    pub fn new(n: Natural, verdict: Verdict) -> Self {
        TraceCase {
            n,
            steps: Vec::new(),
            verdict,
        }
    }

    pub(crate) fn charge(&mut self, kind: PrimitiveStep) {
        self.steps.push(Step {
            kind,
            subject: self.n.clone(),
        });
    }

    pub(crate) fn charge_many(&mut self, kind: PrimitiveStep, times: usize) {
        for _ in 0..times {
            self.charge(kind);
        }
    }
}

/// Ordered per-integer record of what a method did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodTrace {
    cases: Vec<TraceCase>,
    case_budget: usize,
}

impl Default for MethodTrace {
    fn default() -> Self {
        MethodTrace::new(DEFAULT_CASE_BUDGET)
    }
}

impl MethodTrace {
    pub fn new(case_budget: usize) -> Self {
        MethodTrace {
            cases: Vec::new(),
            case_budget,
        }
    }

    pub fn push(&mut self, case: TraceCase) -> Result<()> {
        if case.steps.len() > self.case_budget {
            return Err(Error::CaseBudgetExceeded {
                n: case.n,
                steps: case.steps.len(),
                budget: self.case_budget,
            });
        }
        self.cases.push(case);
        Ok(())
    }

    pub fn cases(&self) -> &[TraceCase] {
        &self.cases
    }

    pub fn case_budget(&self) -> usize {
        self.case_budget
    }

    pub fn total_steps(&self) -> usize {
        self.cases.iter().map(|c| c.steps.len()).sum()
    }
}

/// `n = factor^2 * core` with `core` not divisible by 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub core: Natural,
    pub factor: Natural,
}

impl Reduction {
    /// Number of factors of 4 removed.
    pub fn strips(&self) -> u64 {
        self.factor.trailing_zeros().unwrap_or(0)
    }
}

pub fn reduce_even(n: &Natural) -> Result<Reduction> {
    let twos = n.trailing_zeros().ok_or(Error::Zero("reduce_even"))?;
    let strips = twos / 2;
    Ok(Reduction {
        core: n.shr(2 * strips),
        factor: Natural::from(num_bigint::BigUint::from(1u32) << strips),
    })
}

pub fn classify(n: &Natural) -> Result<(Verdict, TraceCase)> {
    let reduction = reduce_even(n).map_err(|_| Error::Zero("classify"))?;
    let mut case = TraceCase::new(n.clone(), Verdict::Inconclusive);
    case.charge_many(PrimitiveStep::Reduce, reduction.strips() as usize);

    let core = &reduction.core;
    case.charge(PrimitiveStep::ParityCheck);
    let verdict = if core.is_even() {
        // core/2 is odd because 4 no longer divides core
        case.charge(PrimitiveStep::ParityCheck);
        wrap(&reduction, Reason::TwiceOddCore)
    } else {
        case.charge(PrimitiveStep::Mod8Check);
        let remainder = mod8(core);
        if !remainder.is_one() {
            wrap(&reduction, Reason::OddRemainderNot1(remainder))
        } else {
            case.charge(PrimitiveStep::SquareTest);
            let sqrt = isqrt(core);
            if sqrt.exact {
                Verdict::ProvedRational {
                    root: &reduction.factor * &sqrt.root,
                }
            } else {
                Verdict::Inconclusive
            }
        }
    };
    case.verdict = verdict.clone();
    Ok((verdict, case))
}

fn wrap(reduction: &Reduction, reason: Reason) -> Verdict {
    if reduction.factor == 1 {
        Verdict::ProvedIrrational(reason)
    } else {
        Verdict::ProvedIrrational(Reason::ReducedTo {
            core: reduction.core.clone(),
            factor: reduction.factor.clone(),
            reason: Box::new(reason),
        })
    }
}

/// The two-level alternative a student would draw from the lesson: either
/// the remainder settles it, or the number is a square (rational) or not
/// (declared irrational). Returns whether the verdict was asserted without
/// any argument behind it.
pub fn naive_boys_tree(n: &Natural) -> Result<(Verdict, bool)> {
    let (verdict, _) = classify(n).map_err(|_| Error::Zero("naive_boys_tree"))?;
    if !verdict.is_inconclusive() {
        return Ok((verdict, false));
    }
    let reduction = reduce_even(n)?;
    Ok((wrap(&reduction, Reason::NotAPerfectSquare), true))
}

/// Cancels the common powers of 2 of the fraction `p/q`, leaving at most
/// one of the two terms even.
pub fn odd_witness_reduction(p: &Natural, q: &Natural) -> Result<(Natural, Natural)> {
    let tq = q.trailing_zeros().ok_or(Error::Zero("odd_witness_reduction (q)"))?;
    let tp = p.trailing_zeros().ok_or(Error::Zero("odd_witness_reduction (p)"))?;
    let common = tp.min(tq);
    Ok((p.shr(common), q.shr(common)))
}
