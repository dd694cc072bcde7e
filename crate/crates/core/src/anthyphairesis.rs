//! Reciprocal subtraction (anthyphairesis): remove the smaller magnitude
//! from the larger as many times as it fits, then repeat with the smaller
//! magnitude and the remainder.
//!
//! On a pair of integers the process always ends, and the last nonzero
//! remainder is their greatest common measure. On the pair `(sqrt(n), 1)`
//! it ends exactly when `n` is a perfect square; otherwise it runs forever,
//! and the run is captured finitely by the first repeated state. States are
//! kept exact as `(sqrt(n) + P) / Q` with integer `P`, `Q`.

use std::collections::HashMap;

use num_integer::Integer;

use crate::arith::{isqrt, Natural};
use crate::error::{Error, Result};
use crate::theodorus::{PrimitiveStep, Reason, TraceCase, Verdict};

pub const DEFAULT_MAX_STATES: usize = 10_000;

/// `larger = times * smaller + remainder`, recorded as one step of
/// `times` single subtractions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtractionStep {
    pub larger: Natural,
    pub smaller: Natural,
    pub times: Natural,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtractionRun {
    pub initial: (Natural, Natural),
    pub steps: Vec<SubtractionStep>,
    /// Last nonzero magnitude: the common measure.
    pub gcd: Natural,
}

pub fn anthyphairesis_int(a: &Natural, b: &Natural) -> Result<SubtractionRun> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Zero("anthyphairesis_int"));
    }
    let (mut larger, mut smaller) = if a >= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let mut steps = Vec::new();
    loop {
        let (times, rest) = larger.as_biguint().div_rem(smaller.as_biguint());
        steps.push(SubtractionStep {
            larger: larger.clone(),
            smaller: smaller.clone(),
            times: times.into(),
        });
        if rest == num_bigint::BigUint::ZERO {
            return Ok(SubtractionRun {
                initial: (a.clone(), b.clone()),
                steps,
                gcd: smaller,
            });
        }
        larger = std::mem::replace(&mut smaller, rest.into());
    }
}

/// Two integers always share the unit as a measure, so reciprocal
/// subtraction on them terminates; this returns whether the run ended on a
/// magnitude measuring both.
pub fn commensurable(a: &Natural, b: &Natural) -> Result<bool> {
    let run = anthyphairesis_int(a, b)?;
    Ok((a % &run.gcd).is_zero() && (b % &run.gcd).is_zero())
}

/// The magnitude `(sqrt(n) + p) / q` together with how many units fit in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdState {
    pub p: Natural,
    pub q: Natural,
    pub quotient: Natural,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurdOutcome {
    TerminatesAsInteger(Natural),
    Periodic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdRun {
    pub n: Natural,
    pub prefix: Vec<Natural>,
    pub period: Vec<Natural>,
    pub outcome: SurdOutcome,
    /// States visited, in order, up to (not including) the first repeat.
    pub states: Vec<SurdState>,
}

impl SurdRun {
    pub fn is_periodic(&self) -> bool {
        self.outcome == SurdOutcome::Periodic
    }

    /// Partial quotients: the prefix, then the period repeated forever.
    pub fn quotients(&self) -> impl Iterator<Item = &Natural> + '_ {
        self.prefix.iter().chain(self.period.iter().cycle())
    }

    /// Single subtractions performed before the repeat is seen.
    pub fn subtraction_count(&self) -> Natural {
        self.prefix
            .iter()
            .chain(&self.period)
            .fold(Natural::zero(), |acc, a| acc + a)
    }

    /// First `count` convergents `p/q` of the expansion. For a terminating
    /// run only the single exact value is available.
    pub fn convergents(&self, count: usize) -> Vec<(Natural, Natural)> {
        let terms = if self.is_periodic() {
            count
        } else {
            count.min(self.prefix.len())
        };
        let (mut p_prev, mut p) = (Natural::zero(), Natural::one());
        let (mut q_prev, mut q) = (Natural::one(), Natural::zero());
        let mut out = Vec::with_capacity(terms);
        for a in self.quotients().take(terms) {
            let p_next = a * &p + &p_prev;
            let q_next = a * &q + &q_prev;
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
            out.push((p.clone(), q.clone()));
        }
        out
    }
}

pub fn anthyphairesis_surd(n: &Natural, max_states: usize) -> Result<SurdRun> {
    if n.is_zero() {
        return Err(Error::Zero("anthyphairesis_surd"));
    }
    let floor = isqrt(n);
    if floor.exact {
        return Ok(SurdRun {
            n: n.clone(),
            prefix: vec![floor.root.clone()],
            period: Vec::new(),
            outcome: SurdOutcome::TerminatesAsInteger(floor.root),
            states: Vec::new(),
        });
    }
    let a0 = floor.root;
    let mut seen: HashMap<(Natural, Natural), usize> = HashMap::new();
    let mut states: Vec<SurdState> = Vec::new();
    let (mut p, mut q) = (Natural::zero(), Natural::one());
    loop {
        if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
            let quotients: Vec<Natural> = states.iter().map(|s| s.quotient.clone()).collect();
            return Ok(SurdRun {
                n: n.clone(),
                prefix: quotients[..start].to_vec(),
                period: quotients[start..].to_vec(),
                outcome: SurdOutcome::Periodic,
                states,
            });
        }
        if states.len() >= max_states {
            return Err(Error::BudgetExceeded {
                n: n.clone(),
                max_states,
            });
        }
        seen.insert((p.clone(), q.clone()), states.len());
        let quotient = (&a0 + &p) / &q;
        // 0 < p' <= a0 for every state reached from (0, 1)
        let p_next = (&quotient * &q)
            .checked_sub(&p)
            .expect("numerator offset stays nonnegative");
        let q_next = n
            .checked_sub(&p_next.square())
            .expect("offset never exceeds floor(sqrt(n))")
            / &q;
        states.push(SurdState { p, q, quotient });
        p = p_next;
        q = q_next;
    }
}

/// Decides `sqrt(n)` by reciprocal subtraction and charges one `Subtract`
/// per single subtraction and one `SquareTest` per comparison that ends a
/// run of subtractions (plus the initial comparison with the unit).
pub fn classify(n: &Natural, max_states: usize) -> Result<(Verdict, TraceCase)> {
    let run = anthyphairesis_surd(n, max_states)?;
    let verdict = match &run.outcome {
        SurdOutcome::TerminatesAsInteger(root) => Verdict::ProvedRational { root: root.clone() },
        SurdOutcome::Periodic => Verdict::ProvedIrrational(Reason::PeriodicAnthyphairesis {
            period: run.period.len(),
        }),
    };
    let mut case = TraceCase::new(n.clone(), verdict.clone());
    case.charge(PrimitiveStep::SquareTest);
    for a in run.prefix.iter().chain(&run.period) {
        let times = a.to_u64().expect("partial quotient fits in u64") as usize;
        case.charge_many(PrimitiveStep::Subtract, times);
        if run.is_periodic() {
            case.charge(PrimitiveStep::SquareTest);
        }
    }
    Ok((verdict, case))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn nats(vs: &[u64]) -> Vec<Natural> {
        vs.iter().copied().map(nat).collect()
    }

    fn step(larger: u64, smaller: u64, times: u64) -> SubtractionStep {
        SubtractionStep { larger: nat(larger), smaller: nat(smaller), times: nat(times) }
    }

    #[test]
    fn integer_examples() {
        let run = anthyphairesis_int(&nat(12), &nat(8)).unwrap();
        assert_eq!(run.gcd, nat(4));
        assert_eq!(run.steps, vec![step(12, 8, 1), step(8, 4, 2)]);

        let run = anthyphairesis_int(&nat(17), &nat(1)).unwrap();
        assert_eq!(run.gcd, nat(1));
        assert_eq!(run.steps, vec![step(17, 1, 17)]);

        let run = anthyphairesis_int(&nat(5), &nat(5)).unwrap();
        assert_eq!(run.gcd, nat(5));
        assert_eq!(run.steps.len(), 1);
    }

    #[test]
    fn integer_order_does_not_matter() {
        let run = anthyphairesis_int(&nat(8), &nat(12)).unwrap();
        assert_eq!(run.initial, (nat(8), nat(12)));
        assert_eq!(run.gcd, nat(4));
        assert_eq!(run.steps[0], step(12, 8, 1));
    }

    #[test]
    fn integer_rejects_zero() {
        assert!(anthyphairesis_int(&nat(0), &nat(3)).is_err());
        assert!(anthyphairesis_int(&nat(3), &nat(0)).is_err());
        assert!(commensurable(&nat(0), &nat(3)).is_err());
    }

    #[test]
    fn commensurable_examples() {
        assert!(commensurable(&nat(4), &nat(6)).unwrap());
        assert!(commensurable(&nat(1), &nat(1_000_000_000)).unwrap());
        assert!(commensurable(&nat(7), &nat(7)).unwrap());
    }

    #[test]
    fn surd_examples() {
        let run = anthyphairesis_surd(&nat(9), DEFAULT_MAX_STATES).unwrap();
        assert_eq!(run.outcome, SurdOutcome::TerminatesAsInteger(nat(3)));

        let run = anthyphairesis_surd(&nat(2), DEFAULT_MAX_STATES).unwrap();
        assert_eq!((run.prefix, run.period), (nats(&[1]), nats(&[2])));

        let run = anthyphairesis_surd(&nat(3), DEFAULT_MAX_STATES).unwrap();
        assert_eq!((run.prefix, run.period), (nats(&[1]), nats(&[1, 2])));

        let run = anthyphairesis_surd(&nat(17), DEFAULT_MAX_STATES).unwrap();
        assert_eq!((run.prefix, run.period), (nats(&[4]), nats(&[8])));
    }

    #[test]
    fn surd_budget() {
        // sqrt(13) = [3; 1, 1, 1, 1, 6] visits six states
        assert!(matches!(
            anthyphairesis_surd(&nat(13), 5),
            Err(Error::BudgetExceeded { max_states: 5, .. })
        ));
        assert!(anthyphairesis_surd(&nat(13), 6).unwrap().is_periodic());
        assert!(anthyphairesis_surd(&nat(16), 0).is_ok());
        assert!(anthyphairesis_surd(&nat(0), 10).is_err());
    }

    #[test]
    fn sqrt2_convergents_alternate_around_two() {
        let run = anthyphairesis_surd(&nat(2), DEFAULT_MAX_STATES).unwrap();
        let conv = run.convergents(6);
        let expected = [(1, 1), (3, 2), (7, 5), (17, 12), (41, 29), (99, 70)];
        assert_eq!(conv, expected.iter().map(|&(p, q)| (nat(p), nat(q))).collect::<Vec<_>>());
        for (p, q) in conv {
            let lhs = p.square();
            let rhs = q.square() * 2u64;
            assert!(lhs == &rhs + &nat(1) || rhs == &lhs + &nat(1));
        }
    }

    #[test]
    fn terminating_run_has_one_convergent() {
        let run = anthyphairesis_surd(&nat(49), DEFAULT_MAX_STATES).unwrap();
        assert_eq!(run.convergents(5), vec![(nat(7), nat(1))]);
    }

    #[test]
    fn charging_counts_single_subtractions() {
        let (verdict, case) = classify(&nat(17), DEFAULT_MAX_STATES).unwrap();
        assert_eq!(verdict, Verdict::ProvedIrrational(Reason::PeriodicAnthyphairesis { period: 1 }));
        let subtracts = case.steps.iter().filter(|s| s.kind == PrimitiveStep::Subtract).count();
        assert_eq!(subtracts, 4 + 8);
        assert_eq!(case.steps.len(), 1 + 12 + 2);

        let (verdict, case) = classify(&nat(9), DEFAULT_MAX_STATES).unwrap();
        assert_eq!(verdict, Verdict::ProvedRational { root: nat(3) });
        assert_eq!(case.steps.len(), 4);
    }
}
