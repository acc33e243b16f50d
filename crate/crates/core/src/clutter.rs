//! Clutters (antichains of vertex sets) and their transversals.

use crate::canon::canonical_edges;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{k_subsets, VertexSet, MAX_VERTICES};

/// An antichain of subsets of `{1..n}` in canonical member order.
///
/// The ground-set size is stored even when some vertices appear in no
/// member, since the transversal of a uniform clutter depends on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clutter {
    n: usize,
    members: Vec<VertexSet>,
}

impl Clutter {
    /// Validates an antichain. The empty set is accepted (as the sole member).
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: usize, members: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut members: Vec<VertexSet> = members.into_iter().collect();
        if let Some(m) = members.iter().find(|m| m.max_vertex() > n) {
            return Err(Error::VertexOutOfRange {
                vertex: m.max_vertex(),
                n,
            });
        }
        members.sort_unstable();
        members.dedup();
        for (i, &inner) in members.iter().enumerate() {
            if let Some(&outer) = members[i + 1..].iter().find(|o| inner.is_subset(**o)) {
                return Err(Error::NotAClutter { inner, outer });
            }
        }
        Ok(Clutter { n, members })
    }

    pub fn empty(n: usize) -> Self {
        Clutter {
            n,
            members: Vec::new(),
        }
    }

    /// Inclusion-minimal members of an arbitrary family, deduplicated.
    pub fn minimize<I: IntoIterator<Item = VertexSet>>(n: usize, family: I) -> Self {
        let mut all: Vec<VertexSet> = family.into_iter().collect();
        all.sort_unstable();
        all.dedup();
        let mut kept: Vec<VertexSet> = Vec::with_capacity(all.len());
        for s in all {
            if !kept.iter().any(|k| k.is_subset(s)) {
                kept.push(s);
            }
        }
        // sorted input keeps `kept` sorted
        Clutter { n, members: kept }
    }

    /// `U(k, n)`: every `k`-subset of `{1..n}`.
    pub fn uniform(n: usize, k: usize) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::OutOfRange {
                what: "k",
                value: k,
                expected: format!("1 <= k <= n = {n}"),
            });
        }
        if n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Clutter {
            n,
            members: k_subsets(n, k),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    /// Union of all members.
    pub fn support(&self) -> VertexSet {
        self.members
            .iter()
            .fold(VertexSet::EMPTY, |acc, &m| acc | m)
    }

    /// `s` meets every member.
    pub fn is_blocked_by(&self, s: VertexSet) -> bool {
        self.members.iter().all(|m| m.intersects(s))
    }

    /// Minimal blocking sets.
    ///
    /// Members are folded in one at a time: each partial blocker that misses
    /// the new member is extended by each of its vertices, then the family is
    /// minimized. The empty clutter maps to the empty clutter.
    pub fn transversal(&self) -> Result<Clutter> {
        if self.members.is_empty() {
            return Ok(Clutter::empty(self.n));
        }
        if self.members.iter().any(|m| m.is_empty()) {
            return Err(Error::EmptyMember);
        }
        let mut blockers = vec![VertexSet::EMPTY];
        for &member in &self.members {
            let mut next = Vec::with_capacity(blockers.len() * member.len());
            for b in blockers {
                if b.intersects(member) {
                    next.push(b);
                } else {
                    next.extend(member.iter().map(|v| b.with(v)));
                }
            }
            blockers = Clutter::minimize(self.n, next).members;
        }
        Ok(Clutter {
            n: self.n,
            members: blockers,
        })
    }

    /// `Some(k)` exactly when this clutter is `U(k, n)` with `k >= 1`.
    pub fn as_uniform(&self) -> Option<usize> {
        let k = self.members.first()?.len();
        if k == 0 || self.members.iter().any(|m| m.len() != k) {
            return None;
        }
        // distinct k-subsets of {1..n}; the count alone decides equality
        (self.members.len() as u128 == binomial(self.n, k)).then_some(k)
    }

    /// Isomorphic as clutters on the same ground set.
    pub fn isomorphic(&self, other: &Clutter) -> Result<bool> {
        if self.n != other.n || self.members.len() != other.members.len() {
            return Ok(false);
        }
        Ok(canonical_edges(self.n, &self.members)? == canonical_edges(other.n, &other.members)?)
    }

    /// The same clutter relabeled onto its support `{1..m}`, keeping the
    /// relative order of vertices. Families are compared this way when they
    /// do not cover the ground set.
    pub fn restricted_to_support(&self) -> Clutter {
        let support = self.support();
        let mut map = [0usize; MAX_VERTICES];
        for (i, v) in support.iter().enumerate() {
            map[v - 1] = i;
        }
        let members = self.members.iter().map(|m| m.relabel(&map));
        Clutter::new(support.len(), members).expect("relabeling preserves the antichain")
    }

    pub fn into_members(self) -> Vec<VertexSet> {
        self.members
    }
}

impl From<Hypergraph> for Clutter {
    fn from(h: Hypergraph) -> Self {
        Clutter {
            n: h.n(),
            members: h.edges().to_vec(),
        }
    }
}

impl From<&Hypergraph> for Clutter {
    fn from(h: &Hypergraph) -> Self {
        Clutter {
            n: h.n(),
            members: h.edges().to_vec(),
        }
    }
}

impl TryFrom<Clutter> for Hypergraph {
    type Error = Error;

    fn try_from(c: Clutter) -> Result<Hypergraph> {
        if c.members.iter().any(|m| m.is_empty()) {
            return Err(Error::EmptyEdge);
        }
        Ok(Hypergraph::from_canonical_unchecked(c.n, c.members))
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn cl(n: usize, lists: &[&[usize]]) -> Clutter {
        Clutter::new(n, lists.iter().map(|l| vs(l))).unwrap()
    }

    /// Minimal hitting sets by scanning the whole power set.
    fn brute_transversal(c: &Clutter) -> Clutter {
        let hitting = VertexSet::full(c.n())
            .subsets()
            .filter(|s| c.is_blocked_by(*s));
        Clutter::minimize(c.n(), hitting)
    }

    #[test]
    fn minimize_drops_supersets() {
        let m = Clutter::minimize(3, [vs(&[1, 2]), vs(&[1, 2, 3]), vs(&[3])]);
        assert_eq!(m, cl(3, &[&[1, 2], &[3]]));
        let anti = cl(4, &[&[1, 2], &[2, 3], &[4]]);
        assert_eq!(Clutter::minimize(4, anti.members().iter().copied()), anti);
    }

    #[test]
    fn minimize_upper_sets_gives_uniform() {
        for n in 1..=6 {
            for k in 1..=n {
                let upper = VertexSet::full(n).subsets().filter(|s| s.len() >= k);
                assert_eq!(Clutter::minimize(n, upper), Clutter::uniform(n, k).unwrap());
            }
        }
    }

    #[test]
    fn transversal_small_example() {
        let c = cl(3, &[&[1, 2], &[1, 3]]);
        let oracle = brute_transversal(&c);
        assert_eq!(oracle, cl(3, &[&[1], &[2, 3]]));
        assert_eq!(c.transversal().unwrap(), oracle);
    }

    #[test]
    fn transversal_of_uniform() {
        for n in 1..=7 {
            for k in 1..=n {
                let tr = Clutter::uniform(n, k).unwrap().transversal().unwrap();
                assert_eq!(tr, Clutter::uniform(n, n - k + 1).unwrap(), "n={n} k={k}");
            }
        }
        let k4 = Clutter::uniform(4, 2).unwrap();
        assert_eq!(k4.transversal().unwrap(), Clutter::uniform(4, 3).unwrap());
    }

    #[test]
    fn transversal_edge_cases() {
        assert_eq!(Clutter::empty(3).transversal().unwrap(), Clutter::empty(3));
        let with_empty = Clutter::new(3, [VertexSet::EMPTY]).unwrap();
        assert_eq!(with_empty.transversal().unwrap_err(), Error::EmptyMember);
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(
            Clutter::uniform(4, 4).unwrap().members(),
            &[VertexSet::full(4)]
        );
        assert_eq!(Clutter::uniform(3, 1).unwrap(), cl(3, &[&[1], &[2], &[3]]));
        assert_eq!(Clutter::uniform(4, 2).unwrap().len(), 6);
        assert!(matches!(
            Clutter::uniform(3, 0),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            Clutter::uniform(3, 4),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn as_uniform_examples() {
        assert_eq!(Clutter::uniform(4, 2).unwrap().as_uniform(), Some(2));
        assert_eq!(cl(4, &[&[1, 2], &[3, 4]]).as_uniform(), None);
        assert_eq!(Clutter::empty(4).as_uniform(), None);
        assert_eq!(cl(3, &[&[1, 2, 3]]).as_uniform(), Some(3));
        assert_eq!(cl(4, &[&[1, 2, 3]]).as_uniform(), None);
    }

    #[test]
    fn isomorphism_and_support() {
        let a = cl(3, &[&[1], &[3]]);
        let b = cl(2, &[&[1], &[2]]);
        assert_eq!(a.restricted_to_support(), b);
        assert!(a.isomorphic(&cl(3, &[&[1], &[2]])).unwrap());
        assert!(!a.isomorphic(&cl(3, &[&[1, 2]])).unwrap());
        assert_eq!(a, a.clone());
    }

    #[test]
    fn new_rejects_non_antichain() {
        assert!(matches!(
            Clutter::new(3, [vs(&[1]), vs(&[1, 2])]),
            Err(Error::NotAClutter { .. })
        ));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }
}
