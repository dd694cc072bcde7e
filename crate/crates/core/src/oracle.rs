//! Ground truth: `sqrt(n)` is rational exactly when `n` is a perfect square.
//!
//! `oracle_classify` takes the theorem as given. `falsification_search`
//! looks for an actual fraction with `n q^2 = p^2`, which gives finite
//! evidence independent of the theorem.

use crate::arith::{isqrt, Natural};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OracleVerdict {
    Rational { root: Natural },
    Irrational,
}

impl OracleVerdict {
    pub fn is_rational(&self) -> bool {
        matches!(self, OracleVerdict::Rational { .. })
    }
}

pub fn oracle_classify(n: &Natural) -> Result<OracleVerdict> {
    if n.is_zero() {
        return Err(Error::Zero("oracle_classify"));
    }
    let sqrt = isqrt(n);
    Ok(if sqrt.exact {
        OracleVerdict::Rational { root: sqrt.root }
    } else {
        OracleVerdict::Irrational
    })
}

/// Smallest `q <= bound` for which `n q^2` is a perfect square `p^2`.
pub fn falsification_search(n: &Natural, bound: &Natural) -> Option<(Natural, Natural)> {
    let mut q = Natural::one();
    while &q <= bound {
        let sqrt = isqrt(&(n * &q.square()));
        if sqrt.exact {
            return Some((sqrt.root, q));
        }
        q = q + 1;
    }
    None
}

/// Whether `sqrt(n)` is an integer and whether it is rational. For natural
/// `n` the two always coincide; that coincidence is the theorem, not a
/// tautology.
pub fn distinct_from_integrality(n: &Natural) -> Result<(bool, bool)> {
    let is_integer_root = isqrt(n).exact;
    let is_rational_root = oracle_classify(n)?.is_rational();
    Ok((is_integer_root, is_rational_root))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn classify_examples() {
        assert_eq!(oracle_classify(&nat(9)).unwrap(), OracleVerdict::Rational { root: nat(3) });
        assert_eq!(oracle_classify(&nat(17)).unwrap(), OracleVerdict::Irrational);
        assert_eq!(oracle_classify(&nat(1)).unwrap(), OracleVerdict::Rational { root: nat(1) });
        assert!(oracle_classify(&nat(0)).is_err());
    }

    #[test]
    fn search_examples() {
        assert_eq!(falsification_search(&nat(9), &nat(10)), Some((nat(3), nat(1))));
        assert_eq!(falsification_search(&nat(17), &nat(1000)), None);
        assert_eq!(falsification_search(&nat(2), &nat(1000)), None);
        assert_eq!(falsification_search(&nat(4), &nat(0)), None);
    }

    #[test]
    fn integrality_examples() {
        assert_eq!(distinct_from_integrality(&nat(16)).unwrap(), (true, true));
        assert_eq!(distinct_from_integrality(&nat(10)).unwrap(), (false, false));
        assert_eq!(distinct_from_integrality(&nat(49)).unwrap(), (true, true));
    }

    #[test]
    fn square_density() {
        for max in [100u64, 10_000] {
            let rational = (1..=max)
                .filter(|&n| oracle_classify(&nat(n)).unwrap().is_rational())
                .count() as u64;
            assert_eq!(nat(rational), isqrt(&nat(max)).root);
        }
    }
}
