//! Hypergraphs on `{1..n}` whose edges form a clutter.

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A ground set `{1..n}` and an antichain of nonempty hyperedges.
///
/// Edges are deduplicated and kept in canonical order (size ascending, then
/// lexicographic). Vertices covered by no edge are allowed; the edgeless
/// hypergraph is a valid value. A graph is the case where every edge has two
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Checks the clutter property and canonicalizes the edge list.
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: usize, raw_edges: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut edges: Vec<VertexSet> = raw_edges.into_iter().collect();
        for e in &edges {
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
            if e.max_vertex() > n {
                return Err(Error::VertexOutOfRange {
                    vertex: e.max_vertex(),
                    n,
                });
            }
        }
        edges.sort_unstable();
        edges.dedup();
        // after sorting, a containing edge is never earlier than its subset
        for (i, &inner) in edges.iter().enumerate() {
            if let Some(&outer) = edges[i + 1..].iter().find(|o| inner.is_subset(**o)) {
                return Err(Error::NotAClutter { inner, outer });
            }
        }
        Ok(Hypergraph { n, edges })
    }

    /// Convenience constructor from 1-based vertex lists.
    pub fn from_lists(n: usize, lists: &[&[usize]]) -> Result<Self> {
        let mut edges = Vec::with_capacity(lists.len());
        for list in lists {
            edges.push(checked_set(n, list.iter().copied())?);
        }
        Hypergraph::new(n, edges)
    }

    pub fn edgeless(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Hypergraph {
            n,
            edges: Vec::new(),
        }
    }

    /// Builds without validation; the caller guarantees a canonical clutter.
    pub(crate) fn from_canonical_unchecked(n: usize, edges: Vec<VertexSet>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Hypergraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    /// Whether every vertex lies in some edge.
    pub fn is_covering(&self) -> bool {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc | e) == self.ground()
    }

    /// `X` and `Y` lie in a common edge.
    pub fn adjacent(&self, x: VertexSet, y: VertexSet) -> bool {
        let xy = x | y;
        self.edges.iter().any(|e| xy.is_subset(*e))
    }

    /// Edges containing `b`.
    pub fn superedges(&self, b: VertexSet) -> Vec<VertexSet> {
        self.superedges_iter(b).collect()
    }

    pub(crate) fn superedges_iter(&self, b: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
        self.edges.iter().copied().filter(move |e| b.is_subset(*e))
    }

    /// Open neighbourhood: the sets `B'` disjoint from `b` with `b ∪ B'` an edge.
    pub fn open_neighbourhood(&self, b: VertexSet) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self.superedges_iter(b).map(|e| e - b).collect();
        out.sort_unstable();
        out
    }

    /// Graph neighbours of `v`: vertices sharing an edge with it.
    pub fn neighbours(&self, v: usize) -> VertexSet {
        let s = VertexSet::singleton(v);
        self.superedges_iter(s)
            .fold(VertexSet::EMPTY, |acc, e| acc | e)
            .without(v)
    }
}

/// Range-checks 1-based labels against `n`.
pub fn checked_set<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<VertexSet> {
    let mut set = VertexSet::EMPTY;
    for v in vertices {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        set = set.with(v);
    }
    Ok(set)
}
