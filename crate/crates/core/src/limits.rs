// SPDX-License-Identifier: Apache-2.0

//! Resource caps shared by the enumeration routines.
//!
//! Every exhaustive routine checks its instance size against these caps up
//! front and returns an error instead of truncating.

use crate::boolfn::DEFAULT_ARITY_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest arity accepted for user-supplied functions and symbol universes.
    pub arity_cap: usize,
    /// Largest matrix `m·n` swept by the normal-pair check.
    pub matrix_cap: usize,
    /// Largest candidate space any enumeration may visit.
    pub enumeration_budget: u64,
    /// Largest number of profiles `|U_X|^n` a consistency sweep may visit.
    pub profile_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { arity_cap: DEFAULT_ARITY_CAP, matrix_cap: 25, enumeration_budget: 10_000_000, profile_cap: 10_000_000 }
    }
}

/// `base^exp`, or `None` past `u64::MAX`.
pub(crate) fn checked_pow(base: u64, exp: u64) -> Option<u64> {
    let exp = u32::try_from(exp).ok()?;
    base.checked_pow(exp)
}

/// `2^(2^n)`, the number of Boolean functions of arity `n`.
pub(crate) fn function_count(arity: usize) -> Option<u64> {
    if arity >= 6 {
        None
    } else {
        Some(1u64 << (1u32 << arity))
    }
}
