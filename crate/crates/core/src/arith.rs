//! Exact integer primitives: square roots, residues mod 2 and mod 8,
//! triangular numbers and the gnomon decomposition of odd squares.
//!
//! Everything here is computed on arbitrary-precision naturals. No
//! floating-point value is ever formed.

use std::fmt;
use std::ops::{Add, Div, Mul, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision nonnegative integer.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

impl Natural {
    pub fn zero() -> Self {
        Natural(BigUint::zero())
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_even(&self) -> bool {
        !self.0.bit(0)
    }

    pub fn is_odd(&self) -> bool {
        self.0.bit(0)
    }

    pub fn square(&self) -> Natural {
        Natural(&self.0 * &self.0)
    }

    /// Number of trailing zero bits; `None` for zero.
    pub fn trailing_zeros(&self) -> Option<u64> {
        self.0.trailing_zeros()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    /// `self - rhs`, or `None` when the result would be negative.
    pub fn checked_sub(&self, rhs: &Natural) -> Option<Natural> {
        if self.0 >= rhs.0 {
            Some(Natural(&self.0 - &rhs.0))
        } else {
            None
        }
    }

    /// Divides by `2^bits`.
    pub fn shr(&self, bits: u64) -> Natural {
        Natural(&self.0 >> bits)
    }
}

impl From<BigUint> for Natural {
    fn from(value: BigUint) -> Self {
        Natural(value)
    }
}

impl From<u64> for Natural {
    fn from(value: u64) -> Self {
        Natural(BigUint::from(value))
    }
}

impl From<u32> for Natural {
    fn from(value: u32) -> Self {
        Natural(BigUint::from(value))
    }
}

impl From<usize> for Natural {
    fn from(value: usize) -> Self {
        Natural(BigUint::from(value))
    }
}

impl PartialEq<u64> for Natural {
    fn eq(&self, other: &u64) -> bool {
        self.0.to_u64() == Some(*other)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Accepts plain decimal digits only: no sign, no whitespace, no radix prefix.
impl FromStr for Natural {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(s.to_owned()));
        }
        BigUint::from_str(s)
            .map(Natural)
            .map_err(|_| Error::Parse(s.to_owned()))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a Natural> for &'a Natural {
            type Output = Natural;
            fn $method(self, rhs: &'a Natural) -> Natural {
                Natural($trait::$method(&self.0, &rhs.0))
            }
        }

        impl $trait<Natural> for Natural {
            type Output = Natural;
            fn $method(self, rhs: Natural) -> Natural {
                Natural($trait::$method(self.0, rhs.0))
            }
        }

        impl<'a> $trait<&'a Natural> for Natural {
            type Output = Natural;
            fn $method(self, rhs: &'a Natural) -> Natural {
                Natural($trait::$method(self.0, &rhs.0))
            }
        }

        impl $trait<u64> for &Natural {
            type Output = Natural;
            fn $method(self, rhs: u64) -> Natural {
                Natural($trait::$method(&self.0, rhs))
            }
        }

        impl $trait<u64> for Natural {
            type Output = Natural;
            fn $method(self, rhs: u64) -> Natural {
                Natural($trait::$method(self.0, rhs))
            }
        }
    };
}

forward_binop!(Add, add);
// Panics on underflow, like `BigUint`; use `checked_sub` when that can happen.
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);
forward_binop!(Rem, rem);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

pub fn parity(n: &Natural) -> Parity {
    if n.is_odd() {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// Remainder of division by 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mod8Class(u8);

impl Mod8Class {
    pub fn remainder(self) -> u8 {
        self.0
    }

    pub fn is_one(self) -> bool {
        self.0 == 1
    }
}

impl fmt::Display for Mod8Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

pub fn mod8(n: &Natural) -> Mod8Class {
    let low = n.0.iter_u32_digits().next().unwrap_or(0);
    Mod8Class((low & 7) as u8)
}

/// Floor square root together with whether it is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareRoot {
    pub root: Natural,
    pub exact: bool,
}

/// Integer square root by Newton iteration, starting above the root so
/// the iterates decrease monotonically to `floor(sqrt(n))`.
pub fn isqrt(n: &Natural) -> SquareRoot {
    let root = match n.0.to_u64() {
        Some(small) => BigUint::from(isqrt_u64(small)),
        None => isqrt_big(&n.0),
    };
    let exact = &root * &root == n.0;
    SquareRoot {
        root: Natural(root),
        exact,
    }
}

fn isqrt_u64(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let bits = 64 - n.leading_zeros();
    let mut x: u64 = 1 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

fn isqrt_big(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    let mut x = BigUint::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// `k(k+1)/2`.
pub fn triangular(k: &Natural) -> Natural {
    Natural((&k.0 * (&k.0 + 1u32)) >> 1)
}

/// `(2k+1)^2` written as `8 * eights + unit`.
///
/// Growing the unit square to side `2k+1` adds `k` gnomons; the `j`-th
/// has area `8j`, so it straightens into a width-8 rectangle of length `j`
/// and together they cover `8 * triangular(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gnomon {
    pub eights: Natural,
    pub unit: Natural,
}

impl Gnomon {
    pub fn value(&self) -> Natural {
        &self.eights * 8 + &self.unit
    }
}

pub fn gnomon_decompose(k: &Natural) -> Gnomon {
    Gnomon {
        eights: triangular(k),
        unit: Natural::one(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&nat(9)), SquareRoot { root: nat(3), exact: true });
        assert_eq!(isqrt(&nat(17)), SquareRoot { root: nat(4), exact: false });
        assert_eq!(isqrt(&nat(0)), SquareRoot { root: nat(0), exact: true });
        assert_eq!(isqrt(&nat(1)), SquareRoot { root: nat(1), exact: true });
    }

    #[test]
    fn isqrt_u64_extremes() {
        let r = isqrt(&nat(u64::MAX));
        assert_eq!(r.root, nat(u32::MAX as u64));
        assert!(!r.exact);
        let sq = nat(u32::MAX as u64).square();
        assert_eq!(isqrt(&sq), SquareRoot { root: nat(u32::MAX as u64), exact: true });
    }

    #[test]
    fn isqrt_beyond_u64() {
        let root: Natural = "123456789012345678901234567890".parse().unwrap();
        let sq = root.square();
        assert_eq!(isqrt(&sq), SquareRoot { root: root.clone(), exact: true });
        let above = &sq + &nat(1);
        assert_eq!(isqrt(&above), SquareRoot { root: root.clone(), exact: false });
        let below = sq.checked_sub(&nat(1)).unwrap();
        assert_eq!(isqrt(&below).root, root - nat(1));
    }

    #[test]
    fn mod8_examples() {
        assert_eq!(mod8(&nat(3)).remainder(), 3);
        assert_eq!(mod8(&nat(9)).remainder(), 1);
        assert_eq!(mod8(&nat(8 * 1_000_000 + 5)).remainder(), 5);
        assert_eq!(mod8(&nat(0)).remainder(), 0);
    }

    #[test]
    fn parity_matches_mod2() {
        assert_eq!(parity(&nat(0)), Parity::Even);
        assert_eq!(parity(&nat(7)), Parity::Odd);
        assert_eq!(parity(&"340282366920938463463374607431768211457".parse().unwrap()), Parity::Odd);
    }

    #[test]
    fn triangular_examples() {
        assert_eq!(triangular(&nat(0)), nat(0));
        assert_eq!(triangular(&nat(1)), nat(1));
        assert_eq!(triangular(&nat(10)), nat((1..=10).sum()));
    }

    #[test]
    fn gnomon_examples() {
        assert_eq!(gnomon_decompose(&nat(1)), Gnomon { eights: nat(1), unit: nat(1) });
        assert_eq!(gnomon_decompose(&nat(0)), Gnomon { eights: nat(0), unit: nat(1) });
        let g = gnomon_decompose(&nat(4));
        assert_eq!(g, Gnomon { eights: nat(10), unit: nat(1) });
        assert_eq!(g.value(), nat(81));
    }

    #[test]
    fn parse_rejects_non_digits() {
        for bad in ["", "-3", "+3", " 3", "0x10", "1e3", "3.0"] {
            assert!(bad.parse::<Natural>().is_err(), "{bad:?}");
        }
        assert_eq!("007".parse::<Natural>().unwrap(), nat(7));
    }
}
