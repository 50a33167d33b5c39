// SPDX-License-Identifier: Apache-2.0

//! Total Boolean functions stored as bit-packed truth tables.
//!
//! Bit `i` of the table holds the output for the input whose coordinate `j`
//! is bit `j` of `i`: input 0 is the least-significant selector bit and
//! toggles fastest. Bit value 1 means true. Indices in this API are 0-based;
//! the textual spec format and [`FnClass`]'s `Display` use 1-based positions.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not};

use thiserror::Error;

use crate::formula::{Formula, Symbol};

/// Largest arity any table may have (8 MiB of bits).
pub const MAX_ARITY: usize = 26;

/// Default cap applied to user-supplied function specs.
pub const DEFAULT_ARITY_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoolFnError {
    #[error("arity {arity} exceeds the cap of {cap}")]
    ArityTooLarge { arity: usize, cap: usize },
    #[error("{what} requires arity at least {min}, got {arity}")]
    ArityTooSmall { what: &'static str, arity: usize, min: usize },
    #[error("index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("table bits do not fit in 2^{arity} entries")]
    TableOutOfRange { arity: usize },
    #[error("symbol {0} is missing from the symbol order")]
    SymbolNotInOrder(Symbol),
    #[error("function is constant")]
    Constant,
    #[error("index {index} is free, so the function is not forceful")]
    NotForceful { index: usize },
    #[error("invalid function spec {spec:?}: {reason}")]
    InvalidSpec { spec: String, reason: String },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolFn {
    arity: usize,
    words: Vec<u64>,
}

/// Named constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Named {
    And,
    Or,
    /// Odd parity of true inputs.
    Xor,
    /// Even parity of true inputs.
    Nxor,
    Const(bool),
    /// Projection onto the given 0-based input.
    Dictator(usize),
    /// True iff at least half of the inputs are true (ties go to true).
    Majority,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FnClass {
    Constant(bool),
    Dictator(usize),
    AntiDictator(usize),
    And,
    Or,
    Xor,
    Nxor,
    Other,
}

impl FnClass {
    /// Short machine label: `and`, `dictator`, `const`, ...
    pub fn label(&self) -> &'static str {
        match self {
            FnClass::Constant(_) => "const",
            FnClass::Dictator(_) => "dictator",
            FnClass::AntiDictator(_) => "anti-dictator",
            FnClass::And => "and",
            FnClass::Or => "or",
            FnClass::Xor => "xor",
            FnClass::Nxor => "nxor",
            FnClass::Other => "other",
        }
    }
}

impl fmt::Display for FnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FnClass::Constant(v) => write!(f, "const({})", if *v { 'T' } else { 'F' }),
            FnClass::Dictator(i) => write!(f, "dictator({})", i + 1),
            FnClass::AntiDictator(i) => write!(f, "anti-dictator({})", i + 1),
            other => f.write_str(other.label()),
        }
    }
}

/// Classification of a function restricted to its relevant inputs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelevantClass {
    /// Relevant input indices, ascending.
    pub support: Vec<usize>,
    /// Class of the restriction. Dictator indices refer to the original inputs.
    pub class: FnClass,
}

/// `f` forces `output` whenever the input at this index equals `input`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Forcing {
    pub input: bool,
    pub output: bool,
}

/// A ±1 sign; `Plus` corresponds to true.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Signs `c0, c1..cn` of the product form
/// `f(r) = -c0 + c0 / 2^(n-1) * (1 + c1 r1) ... (1 + cn rn)` in the ±1 encoding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForcefulDecomposition {
    pub c0: Sign,
    pub coefficients: Vec<Sign>,
}

impl ForcefulDecomposition {
    /// Evaluates the product form on every input in exact integer arithmetic.
    pub fn reexpand(&self) -> BoolFn {
        let n = self.coefficients.len();
        let half = 1i64 << (n - 1);
        let c0 = self.c0.value();
        BoolFn::from_fn(n, |idx| {
            let product: i64 = self
                .coefficients
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let r = if idx >> i & 1 == 1 { 1 } else { -1 };
                    1 + c.value() * r
                })
                .product();
            // value * 2^(n-1), which is ±2^(n-1) for every input
            let scaled = -c0 * half + c0 * product;
            debug_assert_eq!(scaled.abs(), half);
            scaled > 0
        })
        .expect("arity came from a valid function")
    }
}

fn words_for(arity: usize) -> usize {
    if arity <= 6 {
        1
    } else {
        1 << (arity - 6)
    }
}

fn last_mask(arity: usize) -> u64 {
    if arity >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << arity)) - 1
    }
}

impl BoolFn {
    fn check_arity(arity: usize) -> Result<(), BoolFnError> {
        if arity > MAX_ARITY {
            Err(BoolFnError::ArityTooLarge { arity, cap: MAX_ARITY })
        } else {
            Ok(())
        }
    }

    pub fn from_fn(arity: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self, BoolFnError> {
        Self::check_arity(arity)?;
        let mut words = vec![0u64; words_for(arity)];
        for idx in 0..1usize << arity {
            if f(idx) {
                words[idx >> 6] |= 1 << (idx & 63);
            }
        }
        Ok(BoolFn { arity, words })
    }

    /// Table given as an integer for arity at most 6.
    pub fn from_bits(arity: usize, bits: u64) -> Result<Self, BoolFnError> {
        if arity > 6 {
            return Err(BoolFnError::ArityTooLarge { arity, cap: 6 });
        }
        if bits & !last_mask(arity) != 0 {
            return Err(BoolFnError::TableOutOfRange { arity });
        }
        Ok(BoolFn { arity, words: vec![bits] })
    }

    /// The table as an integer, when it fits in 64 bits.
    pub fn bits(&self) -> Option<u64> {
        (self.arity <= 6).then(|| self.words[0])
    }

    /// Every function of the given arity, in ascending table order.
    pub fn all(arity: usize) -> impl Iterator<Item = BoolFn> {
        assert!(arity <= 5, "enumerating all functions of arity {arity} is infeasible");
        (0..1u64 << (1 << arity)).map(move |bits| BoolFn { arity, words: vec![bits] })
    }

    pub fn constant(arity: usize, value: bool) -> Result<Self, BoolFnError> {
        Self::from_fn(arity, |_| value)
    }

    pub fn projection(arity: usize, index: usize) -> Result<Self, BoolFnError> {
        if index >= arity {
            return Err(BoolFnError::IndexOutOfRange { index, arity });
        }
        Self::from_fn(arity, |idx| idx >> index & 1 == 1)
    }

    pub fn named(kind: Named, arity: usize) -> Result<Self, BoolFnError> {
        if arity == 0 && !matches!(kind, Named::Const(_)) {
            return Err(BoolFnError::ArityTooSmall { what: "a non-constant function", arity, min: 1 });
        }
        let ones = |idx: usize| idx.count_ones() as usize;
        match kind {
            Named::And => Self::from_fn(arity, |idx| ones(idx) == arity),
            Named::Or => Self::from_fn(arity, |idx| idx != 0),
            Named::Xor => Self::from_fn(arity, |idx| ones(idx) % 2 == 1),
            Named::Nxor => Self::from_fn(arity, |idx| ones(idx) % 2 == 0),
            Named::Const(v) => Self::constant(arity, v),
            Named::Dictator(i) => Self::projection(arity, i),
            Named::Majority => Self::from_fn(arity, |idx| 2 * ones(idx) >= arity),
        }
    }

    /// Truth table of `formula` with input `i` bound to `order[i]`.
    pub fn from_formula(formula: &Formula, order: &[Symbol]) -> Result<Self, BoolFnError> {
        Self::check_arity(order.len())?;
        let arity = order.len();
        fn build(f: &Formula, order: &[Symbol], arity: usize) -> Result<BoolFn, BoolFnError> {
            Ok(match f {
                Formula::Atom(s) => {
                    let pos =
                        order.iter().position(|o| o == s).ok_or_else(|| BoolFnError::SymbolNotInOrder(s.clone()))?;
                    BoolFn::projection(arity, pos)?
                }
                Formula::Not(inner) => !&build(inner, order, arity)?,
                Formula::And(xs) => fold(xs, order, arity, |a, b| &a & &b)?,
                Formula::Or(xs) => fold(xs, order, arity, |a, b| &a | &b)?,
                Formula::Xor(xs) => fold(xs, order, arity, |a, b| &a ^ &b)?,
            })
        }
        fn fold(
            xs: &[Formula],
            order: &[Symbol],
            arity: usize,
            op: impl Fn(BoolFn, BoolFn) -> BoolFn,
        ) -> Result<BoolFn, BoolFnError> {
            let mut acc = build(&xs[0], order, arity)?;
            for x in &xs[1..] {
                acc = op(acc, build(x, order, arity)?);
            }
            Ok(acc)
        }
        build(formula, order, arity)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of table entries, `2^arity`.
    pub fn len(&self) -> usize {
        1 << self.arity
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Output at the input encoded by `idx`.
    #[inline]
    pub fn value(&self, idx: usize) -> bool {
        debug_assert!(idx < self.len());
        self.words[idx >> 6] >> (idx & 63) & 1 == 1
    }

    pub fn eval(&self, inputs: &[bool]) -> bool {
        assert_eq!(inputs.len(), self.arity, "input length must equal the arity");
        self.value(input_index(inputs))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `Some(v)` if the function is constantly `v`.
    pub fn constant_value(&self) -> Option<bool> {
        match self.count_ones() {
            0 => Some(false),
            n if n == self.len() => Some(true),
            _ => None,
        }
    }

    pub fn is_pivotal(&self, index: usize, point: usize) -> bool {
        assert!(index < self.arity, "index {index} out of range");
        self.value(point) != self.value(point ^ (1 << index))
    }

    pub fn is_relevant(&self, index: usize) -> bool {
        (0..self.len()).filter(|p| p >> index & 1 == 0).any(|p| self.is_pivotal(index, p))
    }

    pub fn relevant_indices(&self) -> Vec<usize> {
        (0..self.arity).filter(|&i| self.is_relevant(i)).collect()
    }

    pub fn all_relevant(&self) -> bool {
        (0..self.arity).all(|i| self.is_relevant(i))
    }

    /// `flip(f)(s) = !f(!s)`.
    pub fn flip(&self) -> BoolFn {
        let mask = self.len() - 1;
        Self::from_fn(self.arity, |idx| !self.value(idx ^ mask)).expect("same arity")
    }

    /// Whether the output depends only on the number of true inputs.
    pub fn is_symmetric(&self) -> bool {
        let mut by_weight: Vec<Option<bool>> = vec![None; self.arity + 1];
        (0..self.len()).all(|idx| {
            let slot = &mut by_weight[idx.count_ones() as usize];
            let v = self.value(idx);
            *slot.get_or_insert(v) == v
        })
    }

    /// For each index, the forcing witness if one exists. True inputs are
    /// tried before false ones.
    pub fn forceable_indices(&self) -> Vec<Option<Forcing>> {
        (0..self.arity)
            .map(|i| {
                [true, false].into_iter().find_map(|input| {
                    let mut points = (0..self.len()).filter(|p| (p >> i & 1 == 1) == input);
                    let first = self.value(points.next().expect("non-empty half-cube"));
                    points.all(|p| self.value(p) == first).then_some(Forcing { input, output: first })
                })
            })
            .collect()
    }

    pub fn is_forceful(&self) -> bool {
        self.forceable_indices().iter().all(Option::is_some)
    }

    /// Product-form signs of a non-constant forceful function with arity > 1.
    ///
    /// The product form equals `c0` at the single input `r = (c1, .., cn)` and
    /// `-c0` elsewhere, so `c0` is the negated forced output and `ci` the
    /// negated forcing input at index `i`.
    pub fn forceful_decomposition(&self) -> Result<ForcefulDecomposition, BoolFnError> {
        if self.arity < 2 {
            return Err(BoolFnError::ArityTooSmall { what: "a forceful decomposition", arity: self.arity, min: 2 });
        }
        if self.constant_value().is_some() {
            return Err(BoolFnError::Constant);
        }
        let forcings = self
            .forceable_indices()
            .into_iter()
            .enumerate()
            .map(|(index, f)| f.ok_or(BoolFnError::NotForceful { index }))
            .collect::<Result<Vec<_>, _>>()?;
        let output = forcings[0].output;
        // Two indices forcing different outputs would contradict each other
        // on an input that carries both forcing values.
        assert!(forcings.iter().all(|f| f.output == output));
        Ok(ForcefulDecomposition {
            c0: -Sign::from_bool(output),
            coefficients: forcings.iter().map(|f| -Sign::from_bool(f.input)).collect(),
        })
    }

    /// Classifies the function on all declared inputs.
    ///
    /// Projections take precedence over the named families, which only
    /// matters at arity 1 where AND, OR and XOR coincide with the identity.
    pub fn classify(&self) -> FnClass {
        if let Some(v) = self.constant_value() {
            return FnClass::Constant(v);
        }
        for i in 0..self.arity {
            let proj = Self::projection(self.arity, i).expect("index in range");
            if *self == proj {
                return FnClass::Dictator(i);
            }
            if *self == !&proj {
                return FnClass::AntiDictator(i);
            }
        }
        let is = |kind| *self == Self::named(kind, self.arity).expect("arity >= 1");
        if is(Named::And) {
            FnClass::And
        } else if is(Named::Or) {
            FnClass::Or
        } else if is(Named::Xor) {
            FnClass::Xor
        } else if is(Named::Nxor) {
            FnClass::Nxor
        } else {
            FnClass::Other
        }
    }

    /// Classifies the restriction of `self` to its relevant inputs.
    pub fn classify_on_relevant(&self) -> RelevantClass {
        let support = self.relevant_indices();
        let class = match self.restrict(&support).classify() {
            FnClass::Dictator(k) => FnClass::Dictator(support[k]),
            FnClass::AntiDictator(k) => FnClass::AntiDictator(support[k]),
            other => other,
        };
        RelevantClass { support, class }
    }

    /// The function of `indices` obtained by fixing every other input to false.
    /// Exact when the dropped inputs are irrelevant.
    pub fn restrict(&self, indices: &[usize]) -> BoolFn {
        Self::from_fn(indices.len(), |sub| {
            let full =
                indices.iter().enumerate().filter(|(j, _)| sub >> j & 1 == 1).fold(0usize, |acc, (_, &i)| acc | 1 << i);
            self.value(full)
        })
        .expect("arity does not grow")
    }

    /// Canonical textual spec. Named forms are preferred over raw tables.
    pub fn spec_string(&self) -> String {
        let n = self.arity;
        match self.classify() {
            FnClass::Constant(v) => format!("const:{n}:{}", if v { 'T' } else { 'F' }),
            FnClass::Dictator(i) => format!("dictator:{n}:{}", i + 1),
            FnClass::And => format!("and:{n}"),
            FnClass::Or => format!("or:{n}"),
            FnClass::Xor => format!("xor:{n}"),
            FnClass::Nxor => format!("nxor:{n}"),
            FnClass::AntiDictator(_) | FnClass::Other => format!("tt:{n}:{}", self.to_hex()),
        }
    }

    /// The table as a big-endian hex integer whose bit `i` is entry `i`.
    pub fn to_hex(&self) -> String {
        let digits = if self.arity < 2 { 1 } else { 1 << (self.arity - 2) };
        (0..digits)
            .rev()
            .map(|d| {
                let nibble = (0..4)
                    .filter(|b| {
                        let idx = 4 * d + b;
                        idx < self.len() && self.value(idx)
                    })
                    .fold(0u32, |acc, b| acc | 1 << b);
                char::from_digit(nibble, 16).expect("nibble < 16")
            })
            .collect()
    }

    /// Parses `and:3`, `or:2`, `xor:4`, `nxor:2`, `maj:3`, `const:2:T`,
    /// `dictator:3:1` (1-based) or `tt:<n>:<hex>`.
    pub fn parse_spec(spec: &str, arity_cap: usize) -> Result<Self, BoolFnError> {
        let bad = |reason: &str| BoolFnError::InvalidSpec { spec: spec.to_owned(), reason: reason.to_owned() };
        let parts: Vec<&str> = spec.trim().split(':').collect();
        let arity: usize = parts
            .get(1)
            .ok_or_else(|| bad("missing arity"))?
            .parse()
            .map_err(|_| bad("arity is not a non-negative integer"))?;
        let cap = arity_cap.min(MAX_ARITY);
        if arity > cap {
            return Err(BoolFnError::ArityTooLarge { arity, cap });
        }
        let expect_len = |len: usize| {
            if parts.len() == len {
                Ok(())
            } else {
                Err(bad(&format!("expected {len} colon-separated fields")))
            }
        };
        let kind = match parts[0] {
            "and" => Named::And,
            "or" => Named::Or,
            "xor" => Named::Xor,
            "nxor" => Named::Nxor,
            "maj" => Named::Majority,
            "const" => {
                expect_len(3)?;
                match parts[2] {
                    "T" | "t" | "1" => Named::Const(true),
                    "F" | "f" | "0" => Named::Const(false),
                    _ => return Err(bad("constant value must be T or F")),
                }
            }
            "dictator" => {
                expect_len(3)?;
                let i: usize = parts[2].parse().map_err(|_| bad("dictator index is not an integer"))?;
                if i == 0 || i > arity {
                    return Err(bad("dictator index must be in 1..=arity"));
                }
                Named::Dictator(i - 1)
            }
            "tt" => {
                expect_len(3)?;
                return Self::from_hex(arity, parts[2]).map_err(|e| match e {
                    BoolFnError::TableOutOfRange { .. } => bad("table has bits beyond 2^arity entries"),
                    other => other,
                });
            }
            _ => return Err(bad("unknown function kind")),
        };
        if !matches!(kind, Named::Const(_) | Named::Dictator(_)) {
            expect_len(2)?;
        }
        Self::named(kind, arity)
    }

    fn from_hex(arity: usize, hex: &str) -> Result<Self, BoolFnError> {
        let bad = || BoolFnError::InvalidSpec { spec: hex.to_owned(), reason: "invalid hex table".to_owned() };
        if hex.is_empty() {
            return Err(bad());
        }
        let nibbles: Vec<u32> = hex.chars().rev().map(|c| c.to_digit(16).ok_or_else(bad)).collect::<Result<_, _>>()?;
        let len = 1usize << arity;
        for (d, nib) in nibbles.iter().enumerate() {
            for b in 0..4 {
                if nib >> b & 1 == 1 && 4 * d + b >= len {
                    return Err(BoolFnError::TableOutOfRange { arity });
                }
            }
        }
        Self::from_fn(arity, |idx| nibbles.get(idx / 4).is_some_and(|n| n >> (idx % 4) & 1 == 1))
    }
}

/// Index of the input tuple `(b1, .., bn)`, with `b1` least significant.
pub fn input_index(inputs: &[bool]) -> usize {
    inputs.iter().enumerate().fold(0, |acc, (i, &b)| acc | (b as usize) << i)
}

/// Inverse of [`input_index`].
pub fn input_tuple(idx: usize, arity: usize) -> Vec<bool> {
    (0..arity).map(|i| idx >> i & 1 == 1).collect()
}

impl fmt::Debug for BoolFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoolFn({})", self.spec_string())
    }
}

impl fmt::Display for BoolFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

impl Not for &BoolFn {
    type Output = BoolFn;
    fn not(self) -> BoolFn {
        let mask = last_mask(self.arity);
        BoolFn { arity: self.arity, words: self.words.iter().map(|w| !w & mask).collect() }
    }
}

macro_rules! bitwise {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &BoolFn {
            type Output = BoolFn;
            /// Pointwise combination. Panics if the arities differ.
            fn $method(self, rhs: &BoolFn) -> BoolFn {
                assert_eq!(self.arity, rhs.arity, "arity mismatch");
                BoolFn {
                    arity: self.arity,
                    words: self.words.iter().zip(&rhs.words).map(|(a, b)| a $op b).collect(),
                }
            }
        }
    };
}

bitwise!(BitAnd, bitand, &);
bitwise!(BitOr, bitor, |);
bitwise!(BitXor, bitxor, ^);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use proptest::prelude::*;

    fn syms(names: &[&str]) -> Vec<Symbol> {
        names.iter().map(|n| Symbol::new(*n).unwrap()).collect()
    }

    fn named(kind: Named, n: usize) -> BoolFn {
        BoolFn::named(kind, n).unwrap()
    }

    fn tt(s: &str) -> BoolFn {
        let f = parse(s).unwrap();
        let order: Vec<Symbol> = f.symbols().into_iter().collect();
        BoolFn::from_formula(&f, &order).unwrap()
    }

    #[test]
    fn from_formula_and_table() {
        let f = BoolFn::from_formula(&parse("P & Q").unwrap(), &syms(&["P", "Q"])).unwrap();
        assert_eq!(f.bits(), Some(0b1000));
        assert_eq!(f, named(Named::And, 2));
    }

    #[test]
    fn from_formula_or3() {
        let f = BoolFn::from_formula(&parse("P | Q | R").unwrap(), &syms(&["P", "Q", "R"])).unwrap();
        assert_eq!(f, named(Named::Or, 3));
    }

    #[test]
    fn from_formula_projection_has_irrelevant_input() {
        let f = BoolFn::from_formula(&parse("P").unwrap(), &syms(&["P", "Q"])).unwrap();
        assert_eq!(f.classify(), FnClass::Dictator(0));
        assert_eq!(f.relevant_indices(), vec![0]);
    }

    #[test]
    fn from_formula_missing_symbol() {
        let err = BoolFn::from_formula(&parse("P & Z").unwrap(), &syms(&["P", "Q"])).unwrap_err();
        assert_eq!(err, BoolFnError::SymbolNotInOrder(Symbol::new("Z").unwrap()));
    }

    #[test]
    fn named_examples() {
        let or2 = named(Named::Or, 2);
        assert!(or2.eval(&[true, true]) && or2.eval(&[true, false]) && or2.eval(&[false, true]));
        assert!(!or2.eval(&[false, false]));
        assert!(named(Named::Xor, 3).eval(&[true, true, true]));
        assert!(named(Named::Dictator(1), 3).eval(&[false, true, false]));
        assert!(BoolFn::named(Named::And, 0).is_err());
        assert_eq!(named(Named::Const(true), 0).constant_value(), Some(true));
    }

    #[test]
    fn pivotal_examples() {
        let and2 = named(Named::And, 2);
        assert!(and2.is_pivotal(0, input_index(&[true, true])));
        let or2 = named(Named::Or, 2);
        assert!(!or2.is_pivotal(0, input_index(&[false, true])));
    }

    #[test]
    fn xor3_pivotal_everywhere() {
        let x = named(Named::Xor, 3);
        for i in 0..3 {
            for p in 0..8 {
                // brute force: recompute parity directly
                let flipped = p ^ (1 << i);
                let parity = |q: usize| q.count_ones() % 2 == 1;
                assert_ne!(parity(p), parity(flipped));
                assert!(x.is_pivotal(i, p));
            }
        }
    }

    #[test]
    fn relevance_examples() {
        assert_eq!(named(Named::Dictator(0), 3).relevant_indices(), vec![0]);
        assert!(named(Named::Const(true), 2).relevant_indices().is_empty());
        let g = BoolFn::from_formula(&parse("(P & !P) | Q | R").unwrap(), &syms(&["P", "Q", "R"])).unwrap();
        assert_eq!(g.relevant_indices(), vec![1, 2]);
    }

    #[test]
    fn flip_examples() {
        assert_eq!(named(Named::And, 2).flip(), named(Named::Or, 2));
        // flip(XOR2)(s) = !XOR2(!s) = !XOR2(s), i.e. NXOR2
        let x = named(Named::Xor, 2);
        let direct = BoolFn::from_fn(2, |i| !x.value(i ^ 3)).unwrap();
        assert_eq!(direct, named(Named::Nxor, 2));
        assert_eq!(x.flip(), direct);
    }

    #[test]
    fn flip_is_involution_exhaustive() {
        for n in 0..=4 {
            for f in BoolFn::all(n) {
                assert_eq!(f.flip().flip(), f);
            }
        }
    }

    #[test]
    fn forceable_examples() {
        let or3 = named(Named::Or, 3).forceable_indices();
        assert!(or3.iter().all(|f| *f == Some(Forcing { input: true, output: true })));
        assert!(named(Named::Xor, 2).forceable_indices().iter().all(Option::is_none));
        let and2 = named(Named::And, 2).forceable_indices();
        assert!(and2.iter().all(|f| *f == Some(Forcing { input: false, output: false })));
    }

    /// Brute force over all sign vectors: keep those whose re-expansion equals `f`.
    fn decompositions_by_search(f: &BoolFn) -> Vec<ForcefulDecomposition> {
        let n = f.arity();
        (0..1usize << (n + 1))
            .map(|bits| ForcefulDecomposition {
                c0: Sign::from_bool(bits & 1 == 1),
                coefficients: (0..n).map(|i| Sign::from_bool(bits >> (i + 1) & 1 == 1)).collect(),
            })
            .filter(|d| d.reexpand() == *f)
            .collect()
    }

    #[test]
    fn decomposition_examples() {
        use Sign::*;
        // 1 - 2^(1-n) (1 - r1)..(1 - rn): c0 = -1, ci = -1
        for n in 2..=4 {
            let d = named(Named::Or, n).forceful_decomposition().unwrap();
            assert_eq!(d, ForcefulDecomposition { c0: Minus, coefficients: vec![Minus; n] });
            let d = named(Named::And, n).forceful_decomposition().unwrap();
            assert_eq!(d, ForcefulDecomposition { c0: Plus, coefficients: vec![Plus; n] });
        }
        let f = BoolFn::from_formula(&parse("!P & Q").unwrap(), &syms(&["P", "Q"])).unwrap();
        let found = decompositions_by_search(&f);
        assert_eq!(found, vec![ForcefulDecomposition { c0: Plus, coefficients: vec![Minus, Plus] }]);
        assert_eq!(f.forceful_decomposition().unwrap(), found[0]);
    }

    #[test]
    fn decomposition_errors() {
        assert_eq!(named(Named::Const(true), 3).forceful_decomposition(), Err(BoolFnError::Constant));
        assert!(matches!(named(Named::Xor, 3).forceful_decomposition(), Err(BoolFnError::NotForceful { index: 0 })));
        assert!(matches!(
            named(Named::Dictator(0), 1).forceful_decomposition(),
            Err(BoolFnError::ArityTooSmall { .. })
        ));
    }

    #[test]
    fn forceful_decomposition_matches_search_exhaustive() {
        for n in 2..=4 {
            for f in BoolFn::all(n) {
                if f.constant_value().is_some() || !f.is_forceful() {
                    continue;
                }
                let outputs: Vec<bool> = f.forceable_indices().iter().map(|x| x.unwrap().output).collect();
                assert!(outputs.iter().all(|&o| o == outputs[0]), "forced outputs differ for {f}");
                let d = f.forceful_decomposition().unwrap();
                assert_eq!(d.reexpand(), f);
                assert_eq!(decompositions_by_search(&f), vec![d]);
            }
        }
    }

    #[test]
    fn pivotal_symmetric_under_flip_exhaustive() {
        for n in 1..=4 {
            for f in BoolFn::all(n) {
                for i in 0..n {
                    for p in 0..f.len() {
                        assert_eq!(f.is_pivotal(i, p), f.is_pivotal(i, p ^ (1 << i)));
                    }
                }
            }
        }
    }

    #[test]
    fn everywhere_pivotal_means_parity_exhaustive() {
        for n in 1..=4 {
            for f in BoolFn::all(n) {
                let everywhere = (0..n).all(|i| (0..f.len()).all(|p| f.is_pivotal(i, p)));
                let parity = f == named(Named::Xor, n) || f == named(Named::Nxor, n);
                assert_eq!(everywhere, parity, "{f}");
            }
        }
    }

    #[test]
    fn classify_named() {
        for n in 2..=4 {
            assert_eq!(named(Named::And, n).classify(), FnClass::And);
            assert_eq!(named(Named::Or, n).classify(), FnClass::Or);
            assert_eq!(named(Named::Xor, n).classify(), FnClass::Xor);
            assert_eq!(named(Named::Nxor, n).classify(), FnClass::Nxor);
            for v in [false, true] {
                assert_eq!(named(Named::Const(v), n).classify(), FnClass::Constant(v));
            }
            for i in 0..n {
                assert_eq!(named(Named::Dictator(i), n).classify(), FnClass::Dictator(i));
            }
        }
        // arity 1: the identity is a dictator before it is AND/OR/XOR
        for kind in [Named::And, Named::Or, Named::Xor, Named::Dictator(0)] {
            assert_eq!(named(kind, 1).classify(), FnClass::Dictator(0));
        }
        assert_eq!(named(Named::Nxor, 1).classify(), FnClass::AntiDictator(0));
    }

    #[test]
    fn classify_is_total_and_exclusive_at_arity_3() {
        let mut counts = std::collections::BTreeMap::new();
        for f in BoolFn::all(3) {
            *counts.entry(f.classify().label()).or_insert(0) += 1;
        }
        assert_eq!(counts["const"], 2);
        assert_eq!(counts["dictator"], 3);
        assert_eq!(counts["anti-dictator"], 3);
        for k in ["and", "or", "xor", "nxor"] {
            assert_eq!(counts[k], 1);
        }
        assert_eq!(counts["other"], 256 - 2 - 6 - 4);
    }

    #[test]
    fn classify_on_relevant_finds_subsets() {
        let f = tt("P | Q & R");
        assert_eq!(f.classify(), FnClass::Other);
        let p = BoolFn::from_formula(&parse("P").unwrap(), &syms(&["P", "Q", "R"])).unwrap();
        assert_eq!(p.classify_on_relevant(), RelevantClass { support: vec![0], class: FnClass::Dictator(0) });
        let q = BoolFn::from_formula(&parse("R").unwrap(), &syms(&["P", "Q", "R"])).unwrap();
        assert_eq!(q.classify_on_relevant().class, FnClass::Dictator(2));
        let or = BoolFn::from_formula(&parse("P | Q").unwrap(), &syms(&["P", "Q", "R"])).unwrap();
        assert_eq!(or.classify(), FnClass::Other);
        assert_eq!(or.classify_on_relevant(), RelevantClass { support: vec![0, 1], class: FnClass::Or });
        assert_eq!(or.restrict(&[0, 1]), named(Named::Or, 2));
    }

    #[test]
    fn spec_parsing() {
        let cap = DEFAULT_ARITY_CAP;
        assert_eq!(BoolFn::parse_spec("and:3", cap).unwrap(), named(Named::And, 3));
        assert_eq!(BoolFn::parse_spec("const:2:T", cap).unwrap(), named(Named::Const(true), 2));
        assert_eq!(BoolFn::parse_spec("dictator:3:1", cap).unwrap(), named(Named::Dictator(0), 3));
        assert_eq!(BoolFn::parse_spec("tt:2:8", cap).unwrap(), named(Named::And, 2));
        assert_eq!(BoolFn::parse_spec("tt:2:e", cap).unwrap(), named(Named::Or, 2));
        assert_eq!(BoolFn::parse_spec("tt:3:80", cap).unwrap(), named(Named::And, 3));
        assert_eq!(BoolFn::parse_spec("maj:3", cap).unwrap().bits(), Some(0b1110_1000));
        for bad in
            ["", "and", "and:x", "foo:2", "dictator:3:0", "dictator:3:4", "tt:1:4", "tt:2:g", "and:2:1", "const:2"]
        {
            assert!(BoolFn::parse_spec(bad, cap).is_err(), "{bad:?} should fail");
        }
        assert!(matches!(BoolFn::parse_spec("and:21", cap), Err(BoolFnError::ArityTooLarge { .. })));
    }

    #[test]
    fn spec_strings_are_canonical() {
        assert_eq!(named(Named::And, 1).spec_string(), "dictator:1:1");
        assert_eq!(named(Named::Nxor, 2).spec_string(), "nxor:2");
        assert_eq!(named(Named::Nxor, 1).spec_string(), "tt:1:1");
        assert_eq!(tt("!P & Q").spec_string(), "tt:2:4");
        assert_eq!(named(Named::Majority, 3).spec_string(), "tt:3:e8");
    }

    proptest! {
        #[test]
        fn spec_round_trip(n in 0usize..=8, seed in any::<u64>()) {
            let mut state = seed;
            let f = BoolFn::from_fn(n, |_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                state >> 63 == 1
            }).unwrap();
            prop_assert_eq!(BoolFn::parse_spec(&f.spec_string(), DEFAULT_ARITY_CAP).unwrap(), f);
        }

        #[test]
        fn from_formula_agrees_with_evaluate(f in crate::formula::tests::arb_formula()) {
            let order = syms(&["P", "Q", "R", "S_1"]);
            let table = BoolFn::from_formula(&f, &order).unwrap();
            for idx in 0..16usize {
                let env = order.iter().enumerate().map(|(i, s)| (s.clone(), idx >> i & 1 == 1)).collect();
                prop_assert_eq!(table.value(idx), f.evaluate(&env).unwrap());
            }
        }
    }
}
