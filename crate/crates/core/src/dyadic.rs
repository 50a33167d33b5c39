// SPDX-License-Identifier: Apache-2.0

//! Exact dyadic rationals `numerator / 2^exponent`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dyadic rational in canonical form: the numerator is odd, or zero with
/// exponent zero.
///
/// Arithmetic panics on `i128` overflow. Values arising from Boolean
/// functions within the configured caps stay far below that bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: i128,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };

    pub fn new(num: i128, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        d.normalize();
        d
    }

    pub fn from_int(n: i128) -> Self {
        Self::new(n, 0)
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    fn normalize(&mut self) {
        if self.num == 0 {
            self.exp = 0;
            return;
        }
        let shift = self.num.trailing_zeros().min(self.exp);
        self.num >>= shift;
        self.exp -= shift;
    }

    /// Numerator scaled to denominator `2^exp`, for `exp >= self.exp`.
    fn scaled_to(&self, exp: u32) -> i128 {
        let shift = exp - self.exp;
        assert!(shift < 127, "dyadic arithmetic overflow");
        self.num.checked_mul(1i128 << shift).expect("dyadic arithmetic overflow")
    }

    pub fn pow(self, k: u32) -> Dyadic {
        (0..k).fold(Dyadic::ONE, |acc, _| acc * self)
    }

    /// Divides by `2^k` exactly.
    pub fn halve(self, k: u32) -> Dyadic {
        Dyadic::new(self.num, self.exp.checked_add(k).expect("dyadic arithmetic overflow"))
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let exp = self.exp.max(rhs.exp);
        let num = self.scaled_to(exp).checked_add(rhs.scaled_to(exp)).expect("dyadic arithmetic overflow");
        Dyadic::new(num, exp)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + -rhs
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -self.num, exp: self.exp }
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        let num = self.num.checked_mul(rhs.num).expect("dyadic arithmetic overflow");
        let exp = self.exp.checked_add(rhs.exp).expect("dyadic arithmetic overflow");
        Dyadic::new(num, exp)
    }
}

impl std::iter::Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::ZERO, Add::add)
    }
}

impl std::iter::Product for Dyadic {
    fn product<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::ONE, Mul::mul)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        self.scaled_to(exp).cmp(&other.scaled_to(exp))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else if self.exp < 127 {
            write!(f, "{}/{}", self.num, 1i128 << self.exp)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_int(n as i128)
    }
}
