// SPDX-License-Identifier: Apache-2.0

//! Propositional formulas over named symbols.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr  := or
//! or    := xor ('|' xor)*
//! xor   := and ('^' and)*
//! and   := unary ('&' unary)*
//! unary := '!' unary | atom
//! atom  := IDENT | '(' expr ')'
//! ```
//!
//! `IDENT` matches `[A-Za-z_][A-Za-z0-9_]*`. Whitespace is ignored. Nested
//! nodes of the same n-ary operator are flattened on construction, so
//! `(P & Q) & R` and `P & (Q & R)` both parse to `And([P, Q, R])`.
//!
//! A k-ary `^` is true iff an odd number of its arguments are true.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// A logical symbol. Ordering is lexicographic on the name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(String);

impl Symbol {
    pub fn new(name: impl Into<String>) -> Result<Self, FormulaError> {
        let name = name.into();
        if is_identifier(&name) {
            Ok(Symbol(name))
        } else {
            Err(FormulaError::InvalidSymbol(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(Symbol),
    Not(Box<Formula>),
    /// At least two operands.
    And(Vec<Formula>),
    /// At least two operands.
    Or(Vec<Formula>),
    /// At least two operands; odd parity.
    Xor(Vec<Formula>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("invalid symbol name {0:?}")]
    InvalidSymbol(String),
    #[error("symbol {0} has no value in the assignment")]
    MissingSymbol(Symbol),
    #[error("an n-ary connective needs at least two operands")]
    TooFewOperands,
}

/// Syntax error with the byte offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    And,
    Or,
    Xor,
}

impl Formula {
    pub fn atom(name: &str) -> Result<Self, FormulaError> {
        Symbol::new(name).map(Formula::Atom)
    }

    /// `Not(inner)` without cancelling double negation. See [`Formula::negate`].
    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: Formula) -> Self {
        Formula::Not(Box::new(inner))
    }

    pub fn and(operands: Vec<Formula>) -> Result<Self, FormulaError> {
        Self::nary(Op::And, operands)
    }

    pub fn or(operands: Vec<Formula>) -> Result<Self, FormulaError> {
        Self::nary(Op::Or, operands)
    }

    pub fn xor(operands: Vec<Formula>) -> Result<Self, FormulaError> {
        Self::nary(Op::Xor, operands)
    }

    fn nary(op: Op, operands: Vec<Formula>) -> Result<Self, FormulaError> {
        if operands.len() < 2 {
            return Err(FormulaError::TooFewOperands);
        }
        let mut flat = Vec::with_capacity(operands.len());
        for operand in operands {
            match (op, operand) {
                (Op::And, Formula::And(inner)) | (Op::Or, Formula::Or(inner)) | (Op::Xor, Formula::Xor(inner)) => {
                    flat.extend(inner)
                }
                (_, other) => flat.push(other),
            }
        }
        Ok(match op {
            Op::And => Formula::And(flat),
            Op::Or => Formula::Or(flat),
            Op::Xor => Formula::Xor(flat),
        })
    }

    /// Negation with double-negation elimination: `negate(!p) == p`.
    pub fn negate(&self) -> Formula {
        match self {
            Formula::Not(inner) => (**inner).clone(),
            other => Formula::not(other.clone()),
        }
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut BTreeSet<Symbol>) {
        match self {
            Formula::Atom(s) => {
                out.insert(s.clone());
            }
            Formula::Not(inner) => inner.collect_symbols(out),
            Formula::And(xs) | Formula::Or(xs) | Formula::Xor(xs) => {
                for x in xs {
                    x.collect_symbols(out);
                }
            }
        }
    }

    pub fn evaluate(&self, assignment: &BTreeMap<Symbol, bool>) -> Result<bool, FormulaError> {
        self.evaluate_with(&|s: &Symbol| assignment.get(s).copied())
    }

    /// Evaluates against any symbol lookup.
    pub fn evaluate_with<F>(&self, lookup: &F) -> Result<bool, FormulaError>
    where
        F: Fn(&Symbol) -> Option<bool>,
    {
        Ok(match self {
            Formula::Atom(s) => lookup(s).ok_or_else(|| FormulaError::MissingSymbol(s.clone()))?,
            Formula::Not(inner) => !inner.evaluate_with(lookup)?,
            Formula::And(xs) => {
                let mut acc = true;
                for x in xs {
                    acc &= x.evaluate_with(lookup)?;
                }
                acc
            }
            Formula::Or(xs) => {
                let mut acc = false;
                for x in xs {
                    acc |= x.evaluate_with(lookup)?;
                }
                acc
            }
            Formula::Xor(xs) => {
                let mut acc = false;
                for x in xs {
                    acc ^= x.evaluate_with(lookup)?;
                }
                acc
            }
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Or(_) => 1,
            Formula::Xor(_) => 2,
            Formula::And(_) => 3,
            Formula::Not(_) | Formula::Atom(_) => 4,
        }
    }

    fn fmt_operand(&self, parent: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.precedence() <= parent {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (xs, sep) = match self {
            Formula::Atom(s) => return write!(f, "{s}"),
            Formula::Not(inner) => {
                f.write_str("!")?;
                // Unary binds tightest; only compound operands need parentheses.
                return inner.fmt_operand(3, f);
            }
            Formula::And(xs) => (xs, " & "),
            Formula::Or(xs) => (xs, " | "),
            Formula::Xor(xs) => (xs, " ^ "),
        };
        let prec = self.precedence();
        for (i, x) in xs.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            x.fmt_operand(prec, f)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Bang,
    Amp,
    Caret,
    Pipe,
    LParen,
    RParen,
    Bad(char),
    End,
}

impl Tok<'_> {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Bang => "`!`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Bad(c) => format!("character {c:?}"),
            Tok::End => "end of input".into(),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    tok: Tok<'a>,
    tok_start: usize,
}

const OPERAND: &[&str] = &["identifier", "`!`", "`(`"];

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let mut p = Parser { src, pos: 0, tok: Tok::End, tok_start: 0 };
        p.bump();
        p
    }

    fn bump(&mut self) {
        let rest = &self.src[self.pos..];
        let trimmed = rest.trim_start();
        self.pos += rest.len() - trimmed.len();
        self.tok_start = self.pos;
        let Some(c) = trimmed.chars().next() else {
            self.tok = Tok::End;
            return;
        };
        let single = |t| (t, c.len_utf8());
        let (tok, len) = match c {
            '!' => single(Tok::Bang),
            '&' => single(Tok::Amp),
            '^' => single(Tok::Caret),
            '|' => single(Tok::Pipe),
            '(' => single(Tok::LParen),
            ')' => single(Tok::RParen),
            c if c.is_ascii_alphabetic() || c == '_' => {
                let len = trimmed.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(trimmed.len());
                (Tok::Ident(&trimmed[..len]), len)
            }
            other => single(Tok::Bad(other)),
        };
        self.tok = tok;
        self.pos += len;
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError { offset: self.tok_start, expected: expected.to_vec(), found: self.tok.describe() }
    }

    fn binary(
        &mut self,
        op: Op,
        tok: Tok<'static>,
        next: fn(&mut Self) -> Result<Formula, ParseError>,
    ) -> Result<Formula, ParseError> {
        let first = next(self)?;
        if self.tok != tok {
            return Ok(first);
        }
        let mut operands = vec![first];
        while self.tok == tok {
            self.bump();
            operands.push(next(self)?);
        }
        Ok(Formula::nary(op, operands).expect("at least two operands"))
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        self.binary(Op::Or, Tok::Pipe, Self::xor)
    }

    fn xor(&mut self) -> Result<Formula, ParseError> {
        self.binary(Op::Xor, Tok::Caret, Self::and)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        self.binary(Op::And, Tok::Amp, Self::unary)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.tok.clone() {
            Tok::Bang => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Atom(Symbol(name.to_owned())))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.or()?;
                if self.tok != Tok::RParen {
                    return Err(self.error(&["`)`", "`&`", "`^`", "`|`"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(OPERAND)),
        }
    }
}

/// Parses a formula. Empty or whitespace-only input is an error.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text);
    let formula = p.or()?;
    if p.tok != Tok::End {
        return Err(p.error(&["`&`", "`^`", "`|`", "end of input"]));
    }
    Ok(formula)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(name: &str) -> Formula {
        Formula::atom(name).unwrap()
    }

    fn assign(pairs: &[(&str, bool)]) -> BTreeMap<Symbol, bool> {
        pairs.iter().map(|(n, v)| (Symbol::new(*n).unwrap(), *v)).collect()
    }

    #[test]
    fn parses_single_operator() {
        assert_eq!(parse("P & Q").unwrap(), Formula::And(vec![a("P"), a("Q")]));
    }

    #[test]
    fn parentheses_override_precedence() {
        let expected = Formula::And(vec![Formula::Or(vec![a("P"), a("Q")]), a("R")]);
        assert_eq!(parse("(P | Q) & R").unwrap(), expected);
    }

    #[test]
    fn negation_binds_tighter_than_and() {
        let expected = Formula::And(vec![Formula::not(a("P")), a("Q")]);
        assert_eq!(parse("!P & Q").unwrap(), expected);
    }

    #[test]
    fn precedence_ladder() {
        // `&` > `^` > `|`
        let parsed = parse("A | B ^ C & D").unwrap();
        let expected = Formula::Or(vec![a("A"), Formula::Xor(vec![a("B"), Formula::And(vec![a("C"), a("D")])])]);
        assert_eq!(parsed, expected);
    }

    #[test]
    fn nested_same_operator_flattens() {
        let flat = Formula::And(vec![a("P"), a("Q"), a("R")]);
        assert_eq!(parse("P & Q & R").unwrap(), flat);
        assert_eq!(parse("(P & Q) & R").unwrap(), flat);
        assert_eq!(parse("P & (Q & R)").unwrap(), flat);
    }

    #[test]
    fn syntax_errors_report_offset() {
        let err = parse("").unwrap_err();
        assert_eq!(err.offset, 0);
        assert_eq!(err.expected, OPERAND);

        let err = parse("   ").unwrap_err();
        assert_eq!(err.offset, 3);

        let err = parse("P & ").unwrap_err();
        assert_eq!(err.offset, 4);
        assert_eq!(err.found, "end of input");

        let err = parse("(P | Q").unwrap_err();
        assert_eq!(err.offset, 6);
        assert!(err.expected.contains(&"`)`"));

        let err = parse("P Q").unwrap_err();
        assert_eq!(err.offset, 2);

        let err = parse("P & é").unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(err.found.contains('é'));
    }

    #[test]
    fn evaluate_examples() {
        let or = parse("P | Q").unwrap();
        assert!(or.evaluate(&assign(&[("P", false), ("Q", true)])).unwrap());

        let f = parse("(P | Q) & R").unwrap();
        assert!(!f.evaluate(&assign(&[("P", true), ("Q", false), ("R", false)])).unwrap());

        let x = parse("P ^ Q ^ R").unwrap();
        assert!(x.evaluate(&assign(&[("P", true), ("Q", true), ("R", true)])).unwrap());
        assert!(!x.evaluate(&assign(&[("P", true), ("Q", true), ("R", false)])).unwrap());
    }

    #[test]
    fn evaluate_missing_symbol() {
        let f = parse("P & Q").unwrap();
        let err = f.evaluate(&assign(&[("P", true)])).unwrap_err();
        assert_eq!(err, FormulaError::MissingSymbol(Symbol::new("Q").unwrap()));
    }

    #[test]
    fn symbols_are_ordered_and_deduplicated() {
        let names = |f: &str| -> Vec<String> { parse(f).unwrap().symbols().iter().map(|s| s.to_string()).collect() };
        assert_eq!(names("P & Q"), ["P", "Q"]);
        assert_eq!(names("P"), ["P"]);
        assert_eq!(names("P | (P & Q)"), ["P", "Q"]);
        assert_eq!(names("b & a & B"), ["B", "a", "b"]);
    }

    #[test]
    fn negate_examples() {
        assert_eq!(a("P").negate().to_string(), "!P");
        assert_eq!(parse("!P").unwrap().negate(), a("P"));
        assert_eq!(parse("P & Q").unwrap().negate().to_string(), "!(P & Q)");
    }

    #[test]
    fn printer_uses_minimal_parentheses() {
        for src in ["(P | Q) & R", "!(P ^ Q) | R & S", "!!P", "A ^ (B | C)", "!P & Q"] {
            assert_eq!(parse(src).unwrap().to_string(), src);
        }
    }

    #[test]
    fn symbol_validation() {
        assert!(Symbol::new("_x1").is_ok());
        assert!(Symbol::new("").is_err());
        assert!(Symbol::new("1x").is_err());
        assert!(Symbol::new("a-b").is_err());
    }

    pub(crate) fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![Just("P"), Just("Q"), Just("R"), Just("S_1")].prop_map(|n| Formula::atom(n).unwrap());
        leaf.prop_recursive(4, 32, 4, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                prop::collection::vec(inner.clone(), 2..4).prop_map(|v| Formula::and(v).unwrap()),
                prop::collection::vec(inner.clone(), 2..4).prop_map(|v| Formula::or(v).unwrap()),
                prop::collection::vec(inner, 2..4).prop_map(|v| Formula::xor(v).unwrap()),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(f in arb_formula()) {
            prop_assert_eq!(parse(&f.to_string()).unwrap(), f);
        }

        #[test]
        fn negate_is_involution(f in arb_formula()) {
            // a leading double negation is cancelled, so compare with it stripped
            let mut g = &f;
            while let Formula::Not(inner) = g {
                match inner.as_ref() {
                    Formula::Not(x) => g = x,
                    _ => break,
                }
            }
            prop_assert_eq!(&f.negate().negate(), g);
        }

        #[test]
        fn negate_flips_value(f in arb_formula(), bits in 0u8..16) {
            let names = ["P", "Q", "R", "S_1"];
            let pairs: Vec<_> = names.iter().enumerate()
                .map(|(i, n)| (*n, bits >> i & 1 == 1)).collect();
            let env = assign(&pairs);
            prop_assert_eq!(f.negate().evaluate(&env).unwrap(), !f.evaluate(&env).unwrap());
        }
    }
}
