//! Canonical forms and isomorphism for small hypergraphs, by trying every
//! relabeling of the ground set.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Default ceiling on `n` for canonical labeling (`n!` relabelings).
pub const CANONICAL_MAX_N: usize = 10;

/// Lexicographically least canonically-sorted edge list over all
/// relabelings of `{1..n}`.
pub fn canonical_edges(n: usize, edges: &[VertexSet]) -> Result<Vec<VertexSet>> {
    canonical_edges_bounded(n, edges, CANONICAL_MAX_N)
}

pub fn canonical_edges_bounded(
    n: usize,
    edges: &[VertexSet],
    max_n: usize,
) -> Result<Vec<VertexSet>> {
    if n > max_n {
        return Err(Error::GroundSetTooLarge { n, max: max_n });
    }
    let mut best: Vec<VertexSet> = edges.to_vec();
    best.sort_unstable();
    if n <= 1 || edges.is_empty() {
        return Ok(best);
    }
    let mut scratch = best.clone();
    for_each_permutation(n, |perm| {
        for (slot, e) in scratch.iter_mut().zip(edges) {
            *slot = e.relabel(perm);
        }
        scratch.sort_unstable();
        if scratch < best {
            best.copy_from_slice(&scratch);
        }
    });
    Ok(best)
}

pub fn canonical_form(h: &Hypergraph) -> Result<Hypergraph> {
    let edges = canonical_edges(h.n(), h.edges())?;
    Ok(Hypergraph::from_canonical_unchecked(h.n(), edges))
}

pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    if a.n() != b.n() || !same_size_profile(a.edges(), b.edges()) {
        // still honour the size guard so the error contract is uniform
        for n in [a.n(), b.n()] {
            if n > CANONICAL_MAX_N {
                return Err(Error::GroundSetTooLarge {
                    n,
                    max: CANONICAL_MAX_N,
                });
            }
        }
        return Ok(false);
    }
    Ok(canonical_edges(a.n(), a.edges())? == canonical_edges(b.n(), b.edges())?)
}

fn same_size_profile(a: &[VertexSet], b: &[VertexSet]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut sa: Vec<usize> = a.iter().map(|e| e.len()).collect();
    let mut sb: Vec<usize> = b.iter().map(|e| e.len()).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    sa == sb
}

/// Heap's algorithm over `0..n`, calling `f` once per permutation.
pub(crate) fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
