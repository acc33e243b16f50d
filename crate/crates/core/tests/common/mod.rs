//! Independent oracles for the integration tests. Everything here works on
//! raw `u64` masks straight from the rule definitions and shares no code
//! with the crate beyond the types used to hand results back.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use zeroforce::{Clutter, Hypergraph, Rule, VertexSet};

pub fn masks(sets: &[VertexSet]) -> Vec<u64> {
    sets.iter().map(|s| s.bits()).collect()
}

fn submasks(m: u64) -> impl Iterator<Item = u64> {
    // nonempty submasks, descending
    let mut cur = m;
    let mut done = m == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        cur = (cur - 1) & m;
        if cur == 0 {
            done = true;
        }
        Some(out)
    })
}

/// One literal firing test with an explicit trigger `x ⊆ e ∩ black`.
fn fires_with(edges: &[u64], rule: Rule, e: u64, x: u64, black: u64) -> bool {
    match rule {
        Rule::R0 => {
            // x is the single black endpoint, the other endpoint is white
            if x.count_ones() != 1 || e.count_ones() != 2 {
                return false;
            }
            let white_nbrs = edges
                .iter()
                .filter(|&&f| f & x != 0)
                .fold(0, |acc, f| acc | f)
                & !black;
            white_nbrs == e & !black
        }
        Rule::R1 => {
            let reach = edges
                .iter()
                .filter(|&&f| f & x == x)
                .fold(0, |acc, f| acc | f);
            (reach & !black) & !e == 0
        }
        Rule::R2 => edges
            .iter()
            .filter(|&&f| f != e && f & x == x)
            .all(|&f| f & !black == 0),
    }
}

/// Closure where every edge is tried with every nonempty black trigger.
pub fn oracle_closure(edges: &[u64], rule: Rule, start: u64) -> u64 {
    let mut black = start;
    loop {
        let mut grown = black;
        for &e in edges {
            if e & black == 0 || e & !black == 0 {
                continue;
            }
            if submasks(e & black).any(|x| fires_with(edges, rule, e, x, black)) {
                grown |= e;
            }
        }
        if grown == black {
            return black;
        }
        black = grown;
    }
}

fn minimal_only(mut family: Vec<u64>) -> Vec<u64> {
    family.sort_unstable_by_key(|m| (m.count_ones(), *m));
    family.dedup();
    let mut out: Vec<u64> = Vec::new();
    for m in family {
        if !out.iter().any(|&k| k & !m == 0) {
            out.push(m);
        }
    }
    out
}

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v
}

/// Minimal forcing and minimal immune sets by scanning every subset.
pub fn oracle_families(n: usize, edges: &[u64], rule: Rule) -> (Vec<u64>, Vec<u64>) {
    let ground = (1u64 << n) - 1;
    let mut forcing = Vec::new();
    let mut immune = Vec::new();
    for s in 1..=ground {
        if oracle_closure(edges, rule, s) == ground {
            forcing.push(s);
        }
        let rest = ground & !s;
        if oracle_closure(edges, rule, rest) == rest {
            immune.push(s);
        }
    }
    (sorted(minimal_only(forcing)), sorted(minimal_only(immune)))
}

/// Minimal hitting sets by scanning every subset.
pub fn oracle_transversal(n: usize, family: &[u64]) -> Vec<u64> {
    let ground = (1u64 << n) - 1;
    let hitting = (0..=ground).filter(|&s| family.iter().all(|&m| m & s != 0));
    sorted(minimal_only(hitting.collect()))
}

pub fn clutter_masks(c: &Clutter) -> Vec<u64> {
    sorted(masks(c.members()))
}

pub fn uniform_masks(n: usize, k: usize) -> Vec<u64> {
    (0..1u64 << n)
        .filter(|m| m.count_ones() as usize == k)
        .collect()
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> u64 {
    rng.gen_range(0..1u64 << n)
}

/// A random clutter on `n` vertices: random sets reduced either to their
/// inclusion-minimal or inclusion-maximal members.
pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize) -> Hypergraph {
    let count = rng.gen_range(0..=2 * n);
    let raw: Vec<u64> = (0..count)
        .map(|_| random_subset(rng, n))
        .filter(|&m| m != 0)
        .collect();
    let kept = if rng.gen_bool(0.5) {
        minimal_only(raw)
    } else {
        let mut by_size = raw;
        by_size.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
        let mut out: Vec<u64> = Vec::new();
        for m in by_size {
            if !out.iter().any(|&k| k & m == m) {
                out.push(m);
            }
        }
        out
    };
    Hypergraph::new(n, kept.into_iter().map(VertexSet::from_bits)).expect("antichain")
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize) -> Hypergraph {
    let p = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push(VertexSet::from_vertices([u, v]));
            }
        }
    }
    Hypergraph::new(n, edges).expect("graph")
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Hypergraph> {
    let pairs: Vec<VertexSet> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| VertexSet::from_vertices([u, v])))
        .collect();
    (0..1u64 << pairs.len())
        .map(|pick| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .map(|(_, e)| *e);
            Hypergraph::new(n, edges).expect("graph")
        })
        .collect()
}

/// Every clutter (antichain of nonempty sets) on `n` vertices.
pub fn all_clutters(n: usize) -> Vec<Vec<u64>> {
    fn grow(pool: &[u64], from: usize, chosen: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        out.push(chosen.clone());
        for i in from..pool.len() {
            let s = pool[i];
            if chosen.iter().all(|&c| c & s != c && c & s != s) {
                chosen.push(s);
                grow(pool, i + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    let pool: Vec<u64> = (1..1u64 << n).collect();
    let mut out = Vec::new();
    grow(&pool, 0, &mut Vec::new(), &mut out);
    out
}

pub fn shuffled_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

pub fn worked_example() -> Hypergraph {
    Hypergraph::from_lists(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4]]).unwrap()
}

pub fn triangle_with_pendant() -> Hypergraph {
    Hypergraph::from_lists(4, &[&[1, 2], &[1, 3], &[2, 3], &[3, 4]]).unwrap()
}

pub fn eight_vertex_graph() -> Hypergraph {
    Hypergraph::from_lists(
        8,
        &[
            &[1, 2],
            &[2, 3],
            &[3, 4],
            &[4, 5],
            &[5, 6],
            &[6, 7],
            &[7, 8],
            &[6, 8],
            &[2, 6],
            &[2, 4],
            &[5, 7],
            &[1, 3],
            &[3, 7],
        ],
    )
    .unwrap()
}

pub fn vs(labels: &[usize]) -> VertexSet {
    VertexSet::from_vertices(labels.iter().copied())
}
