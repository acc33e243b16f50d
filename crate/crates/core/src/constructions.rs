//! Complete hypergraphs and realizations of uniform clutters as minimal
//! forcing or minimal immune families.

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{k_subsets, VertexSet};

fn check_range(n: usize, k: usize) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            expected: format!("1 <= k <= n = {n}"),
        });
    }
    Ok(())
}

/// Edges are all `k`-subsets of `{1..n}`. `k = 2` is the complete graph.
pub fn complete_hypergraph(n: usize, k: usize) -> Result<Hypergraph> {
    check_range(n, k)?;
    Hypergraph::try_from(Clutter::uniform(n, k)?)
}

pub fn complete_graph(n: usize) -> Result<Hypergraph> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            expected: "n >= 2".into(),
        });
    }
    complete_hypergraph(n, 2)
}

pub fn edgeless_graph(n: usize) -> Hypergraph {
    Hypergraph::edgeless(n)
}

/// R1 realization with minimal forcing family `U(k, n)`: the complete
/// hypergraph of rank `n - k + 1`.
pub fn r1_forcing_realization(n: usize, k: usize) -> Result<Hypergraph> {
    check_range(n, k)?;
    complete_hypergraph(n, n - k + 1)
}

/// R1 realization with minimal immune family `U(k, n)`.
pub fn r1_immune_realization(n: usize, k: usize) -> Result<Hypergraph> {
    complete_hypergraph(n, k)
}

/// R2 realization with minimal forcing family `U(k, n)`.
///
/// `k = 1` gives the single edge `Ω`, `k = n` the singletons. Otherwise the
/// edges are `Ω \ {1}` together with `{1} ∪ A` for every `(k-1)`-subset `A`
/// of `{2..n}`, which is `C(n-1, k-1) + 1` edges.
pub fn r2_forcing_realization(n: usize, k: usize) -> Result<Hypergraph> {
    check_range(n, k)?;
    if k == 1 {
        return Hypergraph::new(n, [VertexSet::full(n)]);
    }
    if k == n {
        return complete_hypergraph(n, 1);
    }
    let one = VertexSet::singleton(1);
    let rest = VertexSet::full(n) - one;
    let spokes = k_subsets(n - 1, k - 1)
        .into_iter()
        // shift {1..n-1} onto {2..n}
        .map(|a| VertexSet::from_bits(a.bits() << 1) | one);
    Hypergraph::new(n, std::iter::once(rest).chain(spokes))
}

/// R2 realization with minimal immune family `U(k, n)`: the forcing
/// construction for `n - k + 1`.
pub fn r2_immune_realization(n: usize, k: usize) -> Result<Hypergraph> {
    check_range(n, k)?;
    r2_forcing_realization(n, n - k + 1)
}

/// Graph whose minimal immune family is `U(k, n)`; exists only for `k <= 2`.
pub fn graph_immune_realization(n: usize, k: usize) -> Result<Hypergraph> {
    check_range(n, k)?;
    match k {
        1 => Ok(edgeless_graph(n)),
        2 => complete_graph(n),
        _ => Err(Error::NotRealizable {
            n,
            k,
            what: "graph-immune",
        }),
    }
}

/// Graph whose minimal forcing family is `U(k, n)`; exists only for
/// `k >= n - 1`.
pub fn graph_forcing_realization(n: usize, k: usize) -> Result<Hypergraph> {
    check_range(n, k)?;
    if k == n {
        Ok(edgeless_graph(n))
    } else if k + 1 == n {
        complete_graph(n)
    } else {
        Err(Error::NotRealizable {
            n,
            k,
            what: "graph-forcing",
        })
    }
}

/// Named constructions, as exposed on the CLI and the C API.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    Complete,
    R1Forcing,
    R1Immune,
    R2Forcing,
    R2Immune,
    GraphForcing,
    GraphImmune,
}

impl Construction {
    pub const ALL: [Construction; 7] = [
        Construction::Complete,
        Construction::R1Forcing,
        Construction::R1Immune,
        Construction::R2Forcing,
        Construction::R2Immune,
        Construction::GraphForcing,
        Construction::GraphImmune,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::Complete => "complete",
            Construction::R1Forcing => "r1-forcing",
            Construction::R1Immune => "r1-immune",
            Construction::R2Forcing => "r2-forcing",
            Construction::R2Immune => "r2-immune",
            Construction::GraphForcing => "graph-forcing",
            Construction::GraphImmune => "graph-immune",
        }
    }

    pub fn build(self, n: usize, k: usize) -> Result<Hypergraph> {
        match self {
            Construction::Complete => complete_hypergraph(n, k),
            Construction::R1Forcing => r1_forcing_realization(n, k),
            Construction::R1Immune => r1_immune_realization(n, k),
            Construction::R2Forcing => r2_forcing_realization(n, k),
            Construction::R2Immune => r2_immune_realization(n, k),
            Construction::GraphForcing => graph_forcing_realization(n, k),
            Construction::GraphImmune => graph_immune_realization(n, k),
        }
    }
}

impl std::str::FromStr for Construction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Construction::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown construction `{s}`"))
    }
}
