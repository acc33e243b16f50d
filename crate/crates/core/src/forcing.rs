//! Forcing rules, closures, and the forcing/immune predicates.
//!
//! A step fires on an edge `E` with a nonempty black trigger `X = E ∩ B`
//! when `E` still has white vertices and the rule's side condition holds;
//! every white vertex of `E` then turns black. Only the maximal trigger
//! `E ∩ B` is examined: both hypergraph conditions only get easier as the
//! trigger grows, since fewer edges contain it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    /// Graph zero forcing: a black vertex with exactly one white neighbour
    /// forces it.
    R0,
    /// A black subset `X` of `E` forces `E` when no white vertex outside `E`
    /// is adjacent to `X`.
    R1,
    /// A black subset `X` of `E` forces `E` when no other edge containing
    /// `X` has a white vertex.
    R2,
}

impl Rule {
    pub const ALL: [Rule; 3] = [Rule::R0, Rule::R1, Rule::R2];
    pub const HYPERGRAPH: [Rule; 2] = [Rule::R1, Rule::R2];

    pub fn name(self) -> &'static str {
        match self {
            Rule::R0 => "r0",
            Rule::R1 => "r1",
            Rule::R2 => "r2",
        }
    }

    pub fn applies_to(self, h: &Hypergraph) -> bool {
        self != Rule::R0 || h.is_graph()
    }

    pub fn check(self, h: &Hypergraph) -> Result<()> {
        if self.applies_to(h) {
            Ok(())
        } else {
            Err(Error::RuleNotApplicable { rule: self.name() })
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "r0" | "0" => Ok(Rule::R0),
            "r1" | "1" => Ok(Rule::R1),
            "r2" | "2" => Ok(Rule::R2),
            other => Err(format!("unknown rule `{other}` (expected r0, r1 or r2)")),
        }
    }
}

/// An edge that can fire, with the black trigger it fires from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Firing {
    pub edge: VertexSet,
    pub trigger: VertexSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ForcingStep {
    pub edge: VertexSet,
    pub trigger: VertexSet,
    pub newly_black: VertexSet,
}

/// Steps fired by a closure, in order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ForcingTrace {
    steps: Vec<ForcingStep>,
}

impl ForcingTrace {
    pub fn steps(&self) -> &[ForcingStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Union of every step's newly blackened vertices.
    pub fn blackened(&self) -> VertexSet {
        self.steps
            .iter()
            .fold(VertexSet::EMPTY, |acc, s| acc | s.newly_black)
    }
}

/// A hypergraph paired with a rule already checked to apply to it.
#[derive(Clone, Debug)]
pub struct Forcer<'a> {
    h: &'a Hypergraph,
    rule: Rule,
    // graph neighbourhoods, R0 only
    neighbours: Vec<VertexSet>,
}

impl<'a> Forcer<'a> {
    pub fn new(h: &'a Hypergraph, rule: Rule) -> Result<Self> {
        rule.check(h)?;
        let neighbours = if rule == Rule::R0 {
            (1..=h.n()).map(|v| h.neighbours(v)).collect()
        } else {
            Vec::new()
        };
        Ok(Forcer {
            h,
            rule,
            neighbours,
        })
    }

    pub fn hypergraph(&self) -> &'a Hypergraph {
        self.h
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    /// Whether `edge` fires when `black` is the current black set.
    pub fn fires(&self, edge: VertexSet, black: VertexSet) -> bool {
        let trigger = edge & black;
        if trigger.is_empty() || edge.is_subset(black) {
            return false;
        }
        match self.rule {
            Rule::R0 => {
                // exactly one endpoint black, and the other endpoint is its
                // only white neighbour
                if trigger.len() != 1 {
                    return false;
                }
                let b = trigger.min_vertex().expect("nonempty trigger");
                let white = edge - black;
                self.neighbours[b - 1] - black == white
            }
            Rule::R1 => self
                .h
                .superedges_iter(trigger)
                .all(|other| ((other - black) - edge).is_empty()),
            Rule::R2 => self
                .h
                .superedges_iter(trigger)
                .all(|other| other == edge || other.is_subset(black)),
        }
    }

    pub fn fireable(&self, black: VertexSet) -> Vec<Firing> {
        self.h
            .edges()
            .iter()
            .filter(|e| self.fires(**e, black))
            .map(|&edge| Firing {
                edge,
                trigger: edge & black,
            })
            .collect()
    }

    /// Fixed point, recomputing the fireable list after every step and
    /// firing the one picked by `choose`.
    pub fn closure_with<F>(&self, start: VertexSet, mut choose: F) -> (VertexSet, ForcingTrace)
    where
        F: FnMut(&[Firing]) -> usize,
    {
        let mut black = start;
        let mut trace = ForcingTrace::default();
        loop {
            let options = self.fireable(black);
            if options.is_empty() {
                return (black, trace);
            }
            let pick = options[choose(&options)];
            trace.steps.push(ForcingStep {
                edge: pick.edge,
                trigger: pick.trigger,
                newly_black: pick.edge - black,
            });
            black = black | pick.edge;
        }
    }

    /// Fixed point firing the first fireable edge in canonical order.
    pub fn closure(&self, start: VertexSet) -> (VertexSet, ForcingTrace) {
        self.closure_with(start, |_| 0)
    }

    /// Fixed point only, by repeated sweeps over the edge list. Same result
    /// as [`Forcer::closure`] since the rules are order-independent.
    pub fn closure_set(&self, start: VertexSet) -> VertexSet {
        let mut black = start;
        loop {
            let before = black;
            for &e in self.h.edges() {
                if self.fires(e, black) {
                    black = black | e;
                }
            }
            if black == before {
                return black;
            }
        }
    }

    pub fn is_forcing_unchecked(&self, f: VertexSet) -> bool {
        self.closure_set(f) == self.h.ground()
    }

    pub fn is_immune_unchecked(&self, i: VertexSet) -> bool {
        let rest = self.h.ground() - i;
        self.closure_set(rest) == rest
    }
}

fn check_subset(h: &Hypergraph, s: VertexSet) -> Result<()> {
    if s.max_vertex() > h.n() {
        Err(Error::VertexOutOfRange {
            vertex: s.max_vertex(),
            n: h.n(),
        })
    } else {
        Ok(())
    }
}

fn check_nonempty_subset(h: &Hypergraph, s: VertexSet) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    check_subset(h, s)
}

pub fn fireable(h: &Hypergraph, rule: Rule, black: VertexSet) -> Result<Vec<Firing>> {
    check_subset(h, black)?;
    Ok(Forcer::new(h, rule)?.fireable(black))
}

pub fn closure(h: &Hypergraph, rule: Rule, black: VertexSet) -> Result<(VertexSet, ForcingTrace)> {
    check_subset(h, black)?;
    Ok(Forcer::new(h, rule)?.closure(black))
}

pub fn is_forcing(h: &Hypergraph, rule: Rule, f: VertexSet) -> Result<bool> {
    check_nonempty_subset(h, f)?;
    Ok(Forcer::new(h, rule)?.is_forcing_unchecked(f))
}

/// `I` stays white when everything else starts black.
pub fn is_immune(h: &Hypergraph, rule: Rule, i: VertexSet) -> Result<bool> {
    check_nonempty_subset(h, i)?;
    Ok(Forcer::new(h, rule)?.is_immune_unchecked(i))
}

fn check_edge(h: &Hypergraph, a: VertexSet) -> Result<()> {
    if h.has_edge(a) {
        Ok(())
    } else {
        Err(Error::NotAnEdge(a))
    }
}

/// Edges through `A \ X` that reach a vertex of `X` outside `A`.
pub fn sigma1(h: &Hypergraph, x: VertexSet, a: VertexSet) -> Result<Vec<VertexSet>> {
    check_edge(h, a)?;
    Ok(h.superedges_iter(a - x)
        .filter(|other| !((*other & x) - a).is_empty())
        .collect())
}

/// Edges through `A \ X` that meet `X`.
pub fn sigma2(h: &Hypergraph, x: VertexSet, a: VertexSet) -> Result<Vec<VertexSet>> {
    check_edge(h, a)?;
    Ok(h.superedges_iter(a - x)
        .filter(|other| other.intersects(x))
        .collect())
}

/// Immunity decided from neighbourhoods alone, with no forcing process.
///
/// Every edge `A` straddling `X` (meeting both `X` and its complement) must
/// have `|Σ1(X, A)| >= 1` under R1 and `|Σ2(X, A)| >= 2` under R2. Under R0 no
/// vertex outside `X` may have exactly one neighbour in `X`.
pub fn is_immune_nbhd(h: &Hypergraph, rule: Rule, x: VertexSet) -> Result<bool> {
    check_nonempty_subset(h, x)?;
    rule.check(h)?;
    let straddling = || {
        h.edges()
            .iter()
            .copied()
            .filter(move |a| a.intersects(x) && !a.is_subset(x))
    };
    let immune = match rule {
        Rule::R0 => (h.ground() - x)
            .iter()
            .all(|v| (h.neighbours(v) & x).len() != 1),
        Rule::R1 => straddling().all(|a| {
            h.superedges_iter(a - x)
                .any(|other| !((other & x) - a).is_empty())
        }),
        Rule::R2 => straddling().all(|a| {
            h.superedges_iter(a - x)
                .filter(|other| other.intersects(x))
                .nth(1)
                .is_some()
        }),
    };
    Ok(immune)
}

/// Size of a smallest forcing set. `Ω` itself always forces, so the answer
/// is at most `n`.
pub fn forcing_number(h: &Hypergraph, rule: Rule) -> Result<usize> {
    forcing_number_bounded(h, rule, crate::families::DEFAULT_SEARCH_BOUND)
}

pub fn forcing_number_bounded(h: &Hypergraph, rule: Rule, bound: usize) -> Result<usize> {
    let n = h.n();
    if n == 0 {
        return Err(Error::EmptySet);
    }
    if n > bound {
        return Err(Error::SearchBoundExceeded { n, bound });
    }
    let forcer = Forcer::new(h, rule)?;
    for k in 1..n {
        if crate::vertex_set::k_subsets(n, k)
            .into_iter()
            .any(|f| forcer.is_forcing_unchecked(f))
        {
            return Ok(k);
        }
    }
    Ok(n)
}
