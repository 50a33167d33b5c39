// SPDX-License-Identifier: Apache-2.0

//! Agendas: a basis of propositions over a symbol universe, its fully
//! rational judgments, and the structural predicates used by the
//! aggregation theorems.
//!
//! Every proposition is stored with its truth table over the sorted symbol
//! universe, so logical questions reduce to table comparisons.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use petgraph::algo::kosaraju_scc;
use petgraph::graph::UnGraph;
use thiserror::Error;

use crate::boolfn::{BoolFn, BoolFnError};
use crate::formula::{self, Formula, ParseError, Symbol};
use crate::limits::Limits;

/// Largest basis accepted; judgments are packed into a `u64`.
pub const MAX_BASIS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AgendaError {
    #[error("an agenda needs at least one proposition")]
    Empty,
    #[error("`{second}` is logically equivalent to `{first}`")]
    DuplicateProposition { first: String, second: String },
    #[error("`{second}` is logically equivalent to the negation of `{first}`")]
    NegationDuplicate { first: String, second: String },
    #[error("`{formula}` is a {}", if *.tautology { "tautology" } else { "contradiction" })]
    DegenerateProposition { formula: String, tautology: bool },
    #[error("{count} propositions exceed the maximum of {MAX_BASIS}")]
    TooManyPropositions { count: usize },
    #[error("{count} symbols exceed the cap of {cap}")]
    SymbolCapExceeded { count: usize, cap: usize },
    #[error("`{0}` is atomic; closure needs a compound proposition")]
    AtomicProposition(String),
    #[error("position {position} is out of range for a basis of {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("position {0} cannot be both the target and part of the determining set")]
    TargetInSet(usize),
    #[error("symbol `{symbol}` of position {position} has no atomic proposition in the agenda")]
    NotSymbolClosed { position: usize, symbol: String },
    #[error("line {line}: {error}")]
    Parse { line: usize, error: ParseError },
}

/// A judgment restricted to the basis: bit `p` is the value of position `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Judgment {
    bits: u64,
    len: usize,
}

impl Judgment {
    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!(len <= MAX_BASIS, "judgment too long");
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        Judgment { bits: bits & mask, len }
    }

    pub fn from_values(values: &[bool]) -> Self {
        let bits = values.iter().enumerate().fold(0u64, |acc, (i, &v)| acc | (v as u64) << i);
        Self::from_bits(bits, values.len())
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn value(&self, position: usize) -> bool {
        assert!(position < self.len, "position out of range");
        self.bits >> position & 1 == 1
    }

    pub fn values(&self) -> Vec<bool> {
        (0..self.len).map(|p| self.value(p)).collect()
    }

    /// The sub-judgment on `positions`, in the order given.
    pub fn project(&self, positions: &[usize]) -> Judgment {
        let bits = positions.iter().enumerate().fold(0u64, |acc, (k, &p)| acc | (self.value(p) as u64) << k);
        Judgment::from_bits(bits, positions.len())
    }

    /// Key whose ascending order is lexicographic with `T` before `F`.
    fn order_key(&self) -> u64 {
        (0..self.len).fold(0u64, |acc, p| acc << 1 | !self.value(p) as u64)
    }
}

impl Ord for Judgment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| self.order_key().cmp(&other.order_key()))
    }
}

impl PartialOrd for Judgment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.values() {
            f.write_str(if v { "T" } else { "F" })?;
        }
        Ok(())
    }
}

/// The fully rational judgments of an agenda, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSet {
    judgments: Vec<Judgment>,
    /// Smallest symbol assignment inducing each judgment; bit `i` is the
    /// value of universe symbol `i`.
    witnesses: Vec<u64>,
    members: HashSet<u64>,
}

impl RationalSet {
    pub fn judgments(&self) -> &[Judgment] {
        &self.judgments
    }

    pub fn witnesses(&self) -> &[u64] {
        &self.witnesses
    }

    pub fn len(&self) -> usize {
        self.judgments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.judgments.is_empty()
    }

    pub fn contains(&self, judgment: &Judgment) -> bool {
        self.members.contains(&judgment.bits)
    }

    pub fn contains_bits(&self, bits: u64) -> bool {
        self.members.contains(&bits)
    }
}

/// An atomic proposition: a universe symbol, possibly negated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    pub symbol: usize,
    pub negated: bool,
}

/// Basis propositions as vertices, joined when they share a relevant symbol.
#[derive(Debug, Clone)]
pub struct SymbolGraph {
    graph: UnGraph<usize, ()>,
}

impl SymbolGraph {
    pub fn vertex_count(&self) -> usize {
        self.graph.node_count()
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .graph
            .edge_indices()
            .filter_map(|e| self.graph.edge_endpoints(e))
            .map(|(a, b)| (a.index().min(b.index()), a.index().max(b.index())))
            .collect();
        out.sort_unstable();
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = kosaraju_scc(&self.graph)
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|v| v.index()).collect();
                c.sort_unstable();
                c
            })
            .collect();
        out.sort();
        out
    }
}

/// A compound proposition written as a function of the atomic propositions
/// carrying its relevant symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompoundFunction {
    /// Basis positions of the atomic inputs, input `k` at `atoms[k]`.
    pub atoms: Vec<usize>,
    pub function: BoolFn,
}

#[derive(Debug, Clone)]
pub struct Agenda {
    basis: Vec<Formula>,
    universe: Vec<Symbol>,
    tables: Vec<BoolFn>,
    literals: Vec<Option<Literal>>,
    rational: RationalSet,
}

impl PartialEq for Agenda {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for Agenda {}

/// Validates a basis and builds its agenda.
pub fn build_agenda(formulas: Vec<Formula>, limits: &Limits) -> Result<Agenda, AgendaError> {
    if formulas.is_empty() {
        return Err(AgendaError::Empty);
    }
    if formulas.len() > MAX_BASIS {
        return Err(AgendaError::TooManyPropositions { count: formulas.len() });
    }
    let universe: Vec<Symbol> =
        formulas.iter().flat_map(|f| f.symbols()).collect::<BTreeSet<_>>().into_iter().collect();
    let cap = limits.arity_cap.min(crate::boolfn::MAX_ARITY);
    if universe.len() > cap {
        return Err(AgendaError::SymbolCapExceeded { count: universe.len(), cap });
    }
    let tables: Vec<BoolFn> = formulas
        .iter()
        .map(|f| BoolFn::from_formula(f, &universe))
        .collect::<Result<_, BoolFnError>>()
        .expect("universe covers every symbol and respects the arity cap");
    for (i, table) in tables.iter().enumerate() {
        if let Some(tautology) = table.constant_value() {
            return Err(AgendaError::DegenerateProposition { formula: formulas[i].to_string(), tautology });
        }
        for j in 0..i {
            let pair = || (formulas[j].to_string(), formulas[i].to_string());
            if tables[j] == *table {
                let (first, second) = pair();
                return Err(AgendaError::DuplicateProposition { first, second });
            }
            if tables[j] == !table {
                let (first, second) = pair();
                return Err(AgendaError::NegationDuplicate { first, second });
            }
        }
    }
    let literals = tables.iter().map(literal_of).collect();
    let rational = rational_set(&tables, universe.len());
    Ok(Agenda { basis: formulas, universe, tables, literals, rational })
}

fn literal_of(table: &BoolFn) -> Option<Literal> {
    let relevant = table.relevant_indices();
    let &[symbol] = relevant.as_slice() else { return None };
    let proj = BoolFn::projection(table.arity(), symbol).expect("index in range");
    Some(Literal { symbol, negated: *table != proj })
}

fn rational_set(tables: &[BoolFn], symbols: usize) -> RationalSet {
    let mut first: HashMap<u64, u64> = HashMap::new();
    for assignment in 0..1u64 << symbols {
        let bits = tables.iter().enumerate().fold(0u64, |acc, (p, t)| acc | (t.value(assignment as usize) as u64) << p);
        first.entry(bits).or_insert(assignment);
    }
    let mut entries: Vec<(Judgment, u64)> =
        first.into_iter().map(|(bits, w)| (Judgment::from_bits(bits, tables.len()), w)).collect();
    entries.sort();
    let members = entries.iter().map(|(j, _)| j.bits).collect();
    let (judgments, witnesses) = entries.into_iter().unzip();
    RationalSet { judgments, witnesses, members }
}

/// Parses an agenda file: one formula per line, `#` starts a comment.
pub fn parse_agenda(text: &str) -> Result<Vec<Formula>, AgendaError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        out.push(formula::parse(content).map_err(|error| AgendaError::Parse { line: i + 1, error })?);
    }
    Ok(out)
}

/// The compound `g` together with its symbols as atomic propositions.
pub fn closure(g: &Formula, limits: &Limits) -> Result<Agenda, AgendaError> {
    let symbols: Vec<Symbol> = g.symbols().into_iter().collect();
    if symbols.len() <= limits.arity_cap.min(crate::boolfn::MAX_ARITY) {
        let table = BoolFn::from_formula(g, &symbols).expect("symbols cover g");
        if table.constant_value().is_none() && literal_of(&table).is_some() {
            return Err(AgendaError::AtomicProposition(g.to_string()));
        }
    }
    let mut basis: Vec<Formula> = symbols.into_iter().map(Formula::Atom).collect();
    basis.push(g.clone());
    build_agenda(basis, limits)
}

impl Agenda {
    /// Parses an agenda file and validates it.
    pub fn from_text(text: &str, limits: &Limits) -> Result<Agenda, AgendaError> {
        build_agenda(parse_agenda(text)?, limits)
    }

    pub fn basis(&self) -> &[Formula] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Sorted union of the symbols of every basis proposition.
    pub fn universe(&self) -> &[Symbol] {
        &self.universe
    }

    /// Truth table of a basis proposition over the universe.
    pub fn table(&self, position: usize) -> &BoolFn {
        &self.tables[position]
    }

    pub fn rational_judgments(&self) -> &RationalSet {
        &self.rational
    }

    fn check_position(&self, position: usize) -> Result<(), AgendaError> {
        if position < self.len() {
            Ok(())
        } else {
            Err(AgendaError::PositionOutOfRange { position, len: self.len() })
        }
    }

    /// The literal a basis proposition is equivalent to, if it is atomic.
    pub fn literal(&self, position: usize) -> Option<Literal> {
        self.literals[position]
    }

    pub fn is_atomic(&self, position: usize) -> bool {
        self.literals[position].is_some()
    }

    pub fn atomic_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&p| self.is_atomic(p)).collect()
    }

    pub fn compound_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&p| !self.is_atomic(p)).collect()
    }

    /// Universe indices of the symbols a proposition actually depends on.
    pub fn relevant_symbols(&self, position: usize) -> Vec<usize> {
        self.tables[position].relevant_indices()
    }

    fn atom_for_symbol(&self, symbol: usize) -> Option<usize> {
        self.literals.iter().position(|l| l.is_some_and(|l| l.symbol == symbol))
    }

    /// Every universe symbol has an atomic proposition in the basis.
    pub fn is_symbol_complete(&self) -> bool {
        (0..self.universe.len()).all(|s| self.atom_for_symbol(s).is_some())
    }

    /// Every symbol of `g` has an atomic proposition in the basis.
    pub fn is_symbol_closed(&self, g: &Formula) -> bool {
        g.symbols()
            .iter()
            .all(|s| self.universe.iter().position(|u| u == s).is_some_and(|i| self.atom_for_symbol(i).is_some()))
    }

    pub fn symbol_graph(&self) -> SymbolGraph {
        let symbols: Vec<BTreeSet<usize>> =
            (0..self.len()).map(|p| self.relevant_symbols(p).into_iter().collect()).collect();
        let mut graph = UnGraph::with_capacity(self.len(), 0);
        let nodes: Vec<_> = (0..self.len()).map(|p| graph.add_node(p)).collect();
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if !symbols[a].is_disjoint(&symbols[b]) {
                    graph.add_edge(nodes[a], nodes[b], ());
                }
            }
        }
        SymbolGraph { graph }
    }

    pub fn is_symbol_connected(&self) -> bool {
        self.symbol_graph().components().len() <= 1
    }

    /// The sub-agendas on each connected component of the symbol graph.
    pub fn components(&self) -> Vec<Agenda> {
        self.symbol_graph().components().iter().map(|c| self.sub_agenda(c).expect("valid positions")).collect()
    }

    /// The agenda on the given positions, in the order given.
    pub fn sub_agenda(&self, positions: &[usize]) -> Result<Agenda, AgendaError> {
        for &p in positions {
            self.check_position(p)?;
        }
        let basis = positions.iter().map(|&p| self.basis[p].clone()).collect();
        build_agenda(basis, &Limits { arity_cap: self.universe.len().max(1), ..Limits::default() })
    }

    /// `Cons(S)`: distinct restrictions of the rational judgments to `subset`.
    pub fn cons(&self, subset: &[usize]) -> Result<Vec<Judgment>, AgendaError> {
        for &p in subset {
            self.check_position(p)?;
        }
        let set: BTreeSet<Judgment> = self.rational.judgments.iter().map(|j| j.project(subset)).collect();
        Ok(set.into_iter().collect())
    }

    /// Whether the value of `target` is a function of the values on `subset`
    /// across the rational judgments.
    pub fn is_determined_by(&self, target: usize, subset: &[usize]) -> Result<bool, AgendaError> {
        self.check_position(target)?;
        for &p in subset {
            self.check_position(p)?;
        }
        if subset.contains(&target) {
            return Err(AgendaError::TargetInSet(target + 1));
        }
        let mut seen: HashMap<u64, bool> = HashMap::new();
        for j in &self.rational.judgments {
            let key = j.project(subset).bits();
            if *seen.entry(key).or_insert(j.value(target)) != j.value(target) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `target` is determined by every other basis proposition.
    pub fn is_determined_by_rest(&self, target: usize) -> Result<bool, AgendaError> {
        let rest: Vec<usize> = (0..self.len()).filter(|&p| p != target).collect();
        self.is_determined_by(target, &rest)
    }

    /// Whether `y` depends on `x`: two rational judgments differ exactly on
    /// `x` and `y`.
    pub fn depends_on(&self, y: usize, x: usize) -> Result<bool, AgendaError> {
        self.check_position(x)?;
        self.check_position(y)?;
        if x == y {
            return Ok(false);
        }
        let toggle = 1u64 << x | 1u64 << y;
        Ok(self.rational.judgments.iter().any(|j| self.rational.contains_bits(j.bits ^ toggle)))
    }

    /// A compound proposition as a function of the atomic propositions
    /// carrying its relevant symbols, in ascending position order.
    pub fn compound_function(&self, position: usize) -> Result<CompoundFunction, AgendaError> {
        self.check_position(position)?;
        let mut atoms = Vec::new();
        for s in self.relevant_symbols(position) {
            let atom = self.atom_for_symbol(s).ok_or_else(|| AgendaError::NotSymbolClosed {
                position: position + 1,
                symbol: self.universe[s].to_string(),
            })?;
            atoms.push(atom);
        }
        atoms.sort_unstable();
        let table = &self.tables[position];
        let function = BoolFn::from_fn(atoms.len(), |idx| {
            let assignment = atoms.iter().enumerate().fold(0usize, |acc, (k, &a)| {
                let lit = self.literals[a].expect("atomic");
                let symbol_value = (idx >> k & 1 == 1) != lit.negated;
                acc | (symbol_value as usize) << lit.symbol
            });
            table.value(assignment)
        })
        .expect("arity within cap");
        Ok(CompoundFunction { atoms, function })
    }

    /// The same agenda with the propositions at `positions` replaced by
    /// their negations.
    pub fn with_negated(&self, positions: &[usize]) -> Result<Agenda, AgendaError> {
        for &p in positions {
            self.check_position(p)?;
        }
        let basis = self
            .basis
            .iter()
            .enumerate()
            .map(|(p, f)| if positions.contains(&p) { f.negate() } else { f.clone() })
            .collect();
        build_agenda(basis, &Limits { arity_cap: self.universe.len().max(1), ..Limits::default() })
    }
}

impl fmt::Display for Agenda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}
