// SPDX-License-Identifier: Apache-2.0

//! Exact Fourier expansion of Boolean functions on the ±1 cube.
//!
//! True is encoded as `+1` and false as `-1`, and
//! `f̂(R) = 2^-n · Σ_x F(x) · Π_{i∈R} x_i`. Subsets `R ⊆ [n]` are bitmasks in
//! the same bit order as [`BoolFn`] inputs.
//!
//! Under this encoding the parity function (odd number of trues) of arity
//! `n` has the single coefficient `f̂([n]) = (-1)^(n+1)`.

use rayon::prelude::*;
use thiserror::Error;

use crate::boolfn::BoolFn;
use crate::dyadic::Dyadic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FourierError {
    #[error("expected 2^{arity} coefficients, got {len}")]
    WrongLength { arity: usize, len: usize },
    #[error("coefficients do not describe a Boolean function: value {value} at input {point}")]
    NonBoolean { point: usize, value: Dyadic },
    #[error("rectangle sides must be nonempty")]
    EmptyRectangle,
    #[error("matrix of {cells} cells exceeds the cap of {cap}")]
    MatrixTooLarge { cells: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FourierSpectrum {
    arity: usize,
    coefficients: Vec<Dyadic>,
}

/// Both sides of an identity, evaluated exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub lhs: Dyadic,
    pub rhs: Dyadic,
}

impl IdentityCheck {
    fn new(lhs: Dyadic, rhs: Dyadic) -> Self {
        IdentityCheck { holds: lhs == rhs, lhs, rhs }
    }
}

/// In-place unnormalized Walsh-Hadamard transform:
/// `out[R] = Σ_x in[x] · (-1)^|R ∧ x|`.
fn walsh_hadamard(values: &mut [i128]) {
    let mut h = 1;
    while h < values.len() {
        for block in values.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

fn parity_sign(mask: usize) -> i128 {
    if mask.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl FourierSpectrum {
    pub fn from_coefficients(arity: usize, coefficients: Vec<Dyadic>) -> Result<Self, FourierError> {
        if coefficients.len() != 1 << arity {
            return Err(FourierError::WrongLength { arity, len: coefficients.len() });
        }
        Ok(FourierSpectrum { arity, coefficients })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `f̂(R)` for the subset encoded by `mask`.
    pub fn coefficient(&self, mask: usize) -> Dyadic {
        self.coefficients[mask]
    }

    /// Coefficients indexed by subset bitmask.
    pub fn coefficients(&self) -> &[Dyadic] {
        &self.coefficients
    }

    /// `Σ_R f̂(R)^2`, which is exactly 1 for a Boolean function.
    pub fn parseval_sum(&self) -> Dyadic {
        self.coefficients.iter().map(|c| *c * *c).sum()
    }

    /// `Σ_{S'⊇S} f̂(S') · base^|S'∖S|`.
    fn superset_sum(&self, subset: usize, base: Dyadic) -> Dyadic {
        let full = (1usize << self.arity) - 1;
        let rest = full & !subset;
        let mut total = Dyadic::ZERO;
        let mut extra = rest;
        loop {
            total = total + self.coefficients[subset | extra] * base.pow(extra.count_ones());
            if extra == 0 {
                break;
            }
            extra = (extra - 1) & rest;
        }
        total
    }
}

/// Exact spectrum through an integer Walsh-Hadamard transform.
pub fn spectrum(f: &BoolFn) -> FourierSpectrum {
    let n = f.arity();
    let mut values: Vec<i128> = (0..f.len()).map(|x| if f.value(x) { 1 } else { -1 }).collect();
    walsh_hadamard(&mut values);
    let coefficients =
        values.iter().enumerate().map(|(mask, &w)| Dyadic::new(parity_sign(mask) * w, n as u32)).collect();
    FourierSpectrum { arity: n, coefficients }
}

/// Inverse transform. Fails unless every reconstructed value is exactly ±1.
pub fn reconstruct(spec: &FourierSpectrum) -> Result<BoolFn, FourierError> {
    let scale = spec.coefficients.iter().map(Dyadic::exponent).max().unwrap_or(0);
    // F(x) · 2^scale = Σ_R c(R) · (-1)^|R| · (-1)^|R ∧ x|
    let mut values: Vec<i128> = spec
        .coefficients
        .iter()
        .enumerate()
        .map(|(mask, c)| parity_sign(mask) * c.numerator() * (1i128 << (scale - c.exponent())))
        .collect();
    walsh_hadamard(&mut values);
    let unit = 1i128 << scale;
    if let Some((point, &v)) = values.iter().enumerate().find(|(_, v)| v.abs() != unit) {
        return Err(FourierError::NonBoolean { point, value: Dyadic::new(v, scale) });
    }
    BoolFn::from_fn(spec.arity, |x| values[x] > 0)
        .map_err(|_| FourierError::WrongLength { arity: spec.arity, len: spec.coefficients.len() })
}

/// Coefficient identities for a candidate pair `(g, f)` with `g` of arity
/// `m` applied down columns and `f` of arity `n` applied along rows.
///
/// A cell set `U ⊆ [m]×[n]` is a bitmask with cell `(r, s)` at bit `r·n + s`.
pub struct PairIdentities {
    g: FourierSpectrum,
    f: FourierSpectrum,
}

impl PairIdentities {
    pub fn new(g: &BoolFn, f: &BoolFn) -> Result<Self, FourierError> {
        let cells = g.arity() * f.arity();
        if cells > 63 {
            return Err(FourierError::MatrixTooLarge { cells, cap: 63 });
        }
        Ok(PairIdentities { g: spectrum(g), f: spectrum(f) })
    }

    fn dims(&self) -> (usize, usize) {
        (self.g.arity, self.f.arity)
    }

    /// Both sides of the coefficient identity for `M_U`:
    ///
    /// `(Σ_{S'⊇S_U} f̂(S') ĝ(∅)^|S'−S_U|) Π_{s∈S_U} ĝ(X_s)
    ///  = (Σ_{R'⊇R_U} ĝ(R') f̂(∅)^|R'−R_U|) Π_{r∈R_U} f̂(Y_r)`
    ///
    /// where `X_s` is column `s` of `U`, `Y_r` is row `r`, and `R_U`, `S_U`
    /// are the rows and columns `U` touches.
    #[allow(clippy::needless_range_loop)]
    pub fn cell_set(&self, u: u64) -> IdentityCheck {
        let (m, n) = self.dims();
        let mut columns = vec![0usize; n];
        let mut rows = vec![0usize; m];
        for r in 0..m {
            for s in 0..n {
                if u >> (r * n + s) & 1 == 1 {
                    columns[s] |= 1 << r;
                    rows[r] |= 1 << s;
                }
            }
        }
        let touched =
            |sets: &[usize]| sets.iter().enumerate().filter(|(_, x)| **x != 0).fold(0usize, |acc, (i, _)| acc | 1 << i);
        let s_u = touched(&columns);
        let r_u = touched(&rows);
        let g_empty = self.g.coefficient(0);
        let f_empty = self.f.coefficient(0);
        let lhs = self.f.superset_sum(s_u, g_empty)
            * columns.iter().filter(|x| **x != 0).map(|&x| self.g.coefficient(x)).product();
        let rhs = self.g.superset_sum(r_u, f_empty)
            * rows.iter().filter(|y| **y != 0).map(|&y| self.f.coefficient(y)).product();
        IdentityCheck::new(lhs, rhs)
    }

    /// The rectangle form `U = R × S`:
    ///
    /// `(Σ_{S'⊇S} f̂(S') ĝ(∅)^|S'−S|) ĝ(R)^|S| = (Σ_{R'⊇R} ĝ(R') f̂(∅)^|R'−R|) f̂(S)^|R|`
    pub fn rectangle(&self, rows: usize, cols: usize) -> Result<IdentityCheck, FourierError> {
        if rows == 0 || cols == 0 {
            return Err(FourierError::EmptyRectangle);
        }
        let (m, n) = self.dims();
        assert!(rows < 1 << m && cols < 1 << n, "rectangle outside the matrix");
        let lhs = self.f.superset_sum(cols, self.g.coefficient(0)) * self.g.coefficient(rows).pow(cols.count_ones());
        let rhs = self.g.superset_sum(rows, self.f.coefficient(0)) * self.f.coefficient(cols).pow(rows.count_ones());
        Ok(IdentityCheck::new(lhs, rhs))
    }

    /// Every cell set `U` whose identity fails, ascending.
    pub fn failing_cell_sets(&self) -> Vec<u64> {
        let (m, n) = self.dims();
        let total = 1u64 << (m * n);
        let mut failing: Vec<u64> = (0..total).into_par_iter().filter(|&u| !self.cell_set(u).holds).collect();
        failing.sort_unstable();
        failing
    }

    /// Every nonempty rectangle `(R, S)` whose identity fails, ascending.
    pub fn failing_rectangles(&self) -> Vec<(usize, usize)> {
        let (m, n) = self.dims();
        (1..1usize << m)
            .flat_map(|r| (1..1usize << n).map(move |s| (r, s)))
            .filter(|&(r, s)| !self.rectangle(r, s).expect("nonempty").holds)
            .collect()
    }
}

/// One-shot form of [`PairIdentities::cell_set`].
pub fn check_cell_identity(g: &BoolFn, f: &BoolFn, u: u64) -> Result<IdentityCheck, FourierError> {
    Ok(PairIdentities::new(g, f)?.cell_set(u))
}

/// One-shot form of [`PairIdentities::rectangle`].
pub fn check_rectangle_identity(
    g: &BoolFn,
    f: &BoolFn,
    rows: usize,
    cols: usize,
) -> Result<IdentityCheck, FourierError> {
    PairIdentities::new(g, f)?.rectangle(rows, cols)
}
