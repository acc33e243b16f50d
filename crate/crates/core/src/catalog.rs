//! Exhaustive census of small hypergraphs up to isomorphism, with their
//! minimal forcing and immune families and the inverse realization map.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_edges;
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::families::{minimal_forcing_family_with, SearchOptions};
use crate::forcing::Rule;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Largest ground set the catalog will enumerate.
pub const CATALOG_MAX_N: usize = 5;

/// `(n, j)`: the `j`-th class (1-based) on `n` vertices in catalog order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassIndex {
    pub n: usize,
    pub j: usize,
}

impl ClassIndex {
    pub fn new(n: usize, j: usize) -> Self {
        ClassIndex { n, j }
    }
}

impl fmt::Display for ClassIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{},{}", self.n, self.j)
    }
}

impl std::str::FromStr for ClassIndex {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let body = s.trim().trim_start_matches('H');
        let (n, j) = body
            .split_once(',')
            .ok_or_else(|| format!("bad class index `{s}`"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad class index `{s}`"))
        };
        Ok(ClassIndex::new(parse(n)?, parse(j)?))
    }
}

/// The four families tabulated per hypergraph, in column order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    F1,
    F2,
    I1,
    I2,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::F1,
        FamilyKind::F2,
        FamilyKind::I1,
        FamilyKind::I2,
    ];

    pub fn rule(self) -> Rule {
        match self {
            FamilyKind::F1 | FamilyKind::I1 => Rule::R1,
            FamilyKind::F2 | FamilyKind::I2 => Rule::R2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::F1 => "F1",
            FamilyKind::F2 => "F2",
            FamilyKind::I1 => "I1",
            FamilyKind::I2 => "I2",
        }
    }
}

fn check_catalog_n(n: usize) -> Result<()> {
    if n > CATALOG_MAX_N {
        Err(Error::GroundSetTooLarge {
            n,
            max: CATALOG_MAX_N,
        })
    } else {
        Ok(())
    }
}

/// Every antichain of nonempty subsets of `{1..n}`, as member lists.
fn antichains(n: usize) -> Vec<Vec<VertexSet>> {
    fn extend(
        pool: &[VertexSet],
        start: usize,
        chosen: &mut Vec<VertexSet>,
        out: &mut Vec<Vec<VertexSet>>,
    ) {
        out.push(chosen.clone());
        for i in start..pool.len() {
            let s = pool[i];
            if chosen.iter().all(|c| !c.is_subset(s) && !s.is_subset(*c)) {
                chosen.push(s);
                extend(pool, i + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    let pool: Vec<VertexSet> = VertexSet::full(n).subsets().skip(1).collect();
    let mut out = Vec::new();
    extend(&pool, 0, &mut Vec::new(), &mut out);
    out
}

/// Clutters on `{1..n}` whose members cover the ground set, one canonical
/// representative per isomorphism class, ordered by canonical encoding.
pub fn enumerate_covering_clutters(n: usize) -> Result<Vec<Hypergraph>> {
    check_catalog_n(n)?;
    let ground = VertexSet::full(n);
    let mut classes = BTreeSet::new();
    for members in antichains(n) {
        let covered = members.iter().fold(VertexSet::EMPTY, |acc, &m| acc | m);
        if covered == ground && !members.is_empty() {
            classes.insert(canonical_edges(n, &members)?);
        }
    }
    Ok(classes
        .into_iter()
        .map(|edges| Hypergraph::from_canonical_unchecked(n, edges))
        .collect())
}

/// All simple graphs on `{1..n}` up to isomorphism, isolated vertices
/// allowed. Built by adding one vertex at a time to each class on `n - 1`
/// vertices with every possible neighbourhood; deleting a vertex from any
/// graph lands in some smaller class, so nothing is missed.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Hypergraph>> {
    if n > crate::canon::CANONICAL_MAX_N {
        return Err(Error::GroundSetTooLarge {
            n,
            max: crate::canon::CANONICAL_MAX_N,
        });
    }
    let mut level: BTreeSet<Vec<VertexSet>> = BTreeSet::from([Vec::new()]);
    for m in 1..=n {
        let mut next = BTreeSet::new();
        for edges in &level {
            for nbrs in VertexSet::full(m - 1).subsets() {
                let mut grown = edges.clone();
                grown.extend(nbrs.iter().map(|u| VertexSet::from_vertices([u, m])));
                next.insert(canonical_edges(m, &grown)?);
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|edges| Hypergraph::from_canonical_unchecked(n, edges))
        .collect())
}

/// Covering clutters on `1..=n_max` vertices with their class indices.
#[derive(Clone, Debug)]
pub struct Catalog {
    classes: Vec<(ClassIndex, Hypergraph)>,
    lookup: HashMap<(usize, Vec<VertexSet>), ClassIndex>,
}

impl Catalog {
    pub fn build(n_max: usize) -> Result<Self> {
        check_catalog_n(n_max)?;
        let mut classes = Vec::new();
        let mut lookup = HashMap::new();
        for n in 1..=n_max {
            for (j, h) in enumerate_covering_clutters(n)?.into_iter().enumerate() {
                let idx = ClassIndex::new(n, j + 1);
                lookup.insert((n, h.edges().to_vec()), idx);
                classes.push((idx, h));
            }
        }
        Ok(Catalog { classes, lookup })
    }

    pub fn classes(&self) -> &[(ClassIndex, Hypergraph)] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn get(&self, idx: ClassIndex) -> Option<&Hypergraph> {
        self.classes.iter().find(|(i, _)| *i == idx).map(|(_, h)| h)
    }

    /// Class of a clutter viewed as an edge set over its own support.
    pub fn classify(&self, c: &Clutter) -> Result<Option<ClassIndex>> {
        let on_support = c.restricted_to_support();
        if on_support.n() > CATALOG_MAX_N {
            return Ok(None);
        }
        let key = (
            on_support.n(),
            canonical_edges(on_support.n(), on_support.members())?,
        );
        Ok(self.lookup.get(&key).copied())
    }
}

/// One row of the census: a hypergraph and its four families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub index: ClassIndex,
    pub hypergraph: Hypergraph,
    /// F1, F2, I1, I2.
    pub families: [Clutter; 4],
    pub family_indices: [ClassIndex; 4],
}

impl CatalogEntry {
    pub fn family(&self, kind: FamilyKind) -> &Clutter {
        &self.families[kind as usize]
    }

    pub fn family_index(&self, kind: FamilyKind) -> ClassIndex {
        self.family_indices[kind as usize]
    }
}

fn entry_for(catalog: &Catalog, index: ClassIndex, h: &Hypergraph) -> Result<CatalogEntry> {
    let opts = SearchOptions::default();
    let f1 = minimal_forcing_family_with(h, Rule::R1, &opts)?;
    let f2 = minimal_forcing_family_with(h, Rule::R2, &opts)?;
    let i1 = f1.transversal()?;
    let i2 = f2.transversal()?;
    let families = [f1, f2, i1, i2];
    let mut family_indices = [index; 4];
    for (slot, fam) in family_indices.iter_mut().zip(&families) {
        // families are nonempty clutters covering their support, and the
        // support is no larger than the ground set
        *slot = catalog
            .classify(fam)?
            .expect("every family of a catalog hypergraph is itself in the catalog");
    }
    Ok(CatalogEntry {
        index,
        hypergraph: h.clone(),
        families,
        family_indices,
    })
}

pub fn build_table1(n_max: usize) -> Result<Vec<CatalogEntry>> {
    let catalog = Catalog::build(n_max)?;
    table1_for(&catalog, 1)
}

/// Families for every catalog class; `jobs > 1` fans out per entry and the
/// result keeps catalog order.
pub fn table1_for(catalog: &Catalog, jobs: usize) -> Result<Vec<CatalogEntry>> {
    if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            catalog
                .classes()
                .par_iter()
                .map(|(idx, h)| entry_for(catalog, *idx, h))
                .collect()
        })
    } else {
        catalog
            .classes()
            .iter()
            .map(|(idx, h)| entry_for(catalog, *idx, h))
            .collect()
    }
}

/// Realizations of one catalog clutter, per family kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizationRow {
    pub delta: ClassIndex,
    /// Hypergraph classes whose F1, F2, I1, I2 is isomorphic to `delta`.
    pub realizations: [Vec<ClassIndex>; 4],
}

impl RealizationRow {
    pub fn of(&self, kind: FamilyKind) -> &[ClassIndex] {
        &self.realizations[kind as usize]
    }

    pub fn has_none(&self) -> bool {
        self.realizations.iter().all(Vec::is_empty)
    }
}

/// Inverse image of the census: for each class, who realizes it.
pub fn invert_table1(entries: &[CatalogEntry]) -> Vec<RealizationRow> {
    let mut rows: Vec<RealizationRow> = entries
        .iter()
        .map(|e| RealizationRow {
            delta: e.index,
            realizations: Default::default(),
        })
        .collect();
    let position: HashMap<ClassIndex, usize> = entries
        .iter()
        .enumerate()
        .map(|(i, e)| (e.index, i))
        .collect();
    for e in entries {
        for kind in FamilyKind::ALL {
            let target = position[&e.family_index(kind)];
            rows[target].realizations[kind as usize].push(e.index);
        }
    }
    rows
}

pub fn build_table2(n_max: usize) -> Result<Vec<RealizationRow>> {
    Ok(invert_table1(&build_table1(n_max)?))
}

/// Inline edge list, e.g. `{{1,2},{1,3}}`.
pub fn inline_edges(edges: &[VertexSet]) -> String {
    let parts: Vec<String> = edges
        .iter()
        .map(|e| {
            let labels: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", labels.join(","))
        })
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// Tab-separated census, one row per class. Family cells are class indices,
/// or inline edge lists when `inline` is set.
pub fn table1_tsv(entries: &[CatalogEntry], inline: bool) -> String {
    let mut out = String::from("index\tedges\tF1\tF2\tI1\tI2\n");
    for e in entries {
        out.push_str(&format!(
            "{}\t{}",
            e.index,
            inline_edges(e.hypergraph.edges())
        ));
        for kind in FamilyKind::ALL {
            let cell = if inline {
                inline_edges(e.family(kind).members())
            } else {
                e.family_index(kind).to_string()
            };
            out.push('\t');
            out.push_str(&cell);
        }
        out.push('\n');
    }
    out
}

pub fn table2_tsv(rows: &[RealizationRow]) -> String {
    let mut out = String::from("delta\tF1\tF2\tI1\tI2\n");
    for row in rows {
        out.push_str(&row.delta.to_string());
        for list in &row.realizations {
            out.push('\t');
            if list.is_empty() {
                out.push('-');
            } else {
                let cells: Vec<String> = list.iter().map(|c| c.to_string()).collect();
                out.push_str(&cells.join(" "));
            }
        }
        out.push('\n');
    }
    out
}

/// Structured mirror of a census row.
#[derive(Clone, Debug, Serialize)]
pub struct Table1Json {
    pub index: ClassIndex,
    pub vertices: usize,
    pub edges: Vec<Vec<usize>>,
    pub f1: FamilyJson,
    pub f2: FamilyJson,
    pub i1: FamilyJson,
    pub i2: FamilyJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyJson {
    pub class: ClassIndex,
    pub members: Vec<Vec<usize>>,
}

pub fn table1_json(entries: &[CatalogEntry]) -> Vec<Table1Json> {
    let fam = |e: &CatalogEntry, k: FamilyKind| FamilyJson {
        class: e.family_index(k),
        members: e.family(k).members().iter().map(|m| m.to_vec()).collect(),
    };
    entries
        .iter()
        .map(|e| Table1Json {
            index: e.index,
            vertices: e.hypergraph.n(),
            edges: e.hypergraph.edges().iter().map(|m| m.to_vec()).collect(),
            f1: fam(e, FamilyKind::F1),
            f2: fam(e, FamilyKind::F2),
            i1: fam(e, FamilyKind::I1),
            i2: fam(e, FamilyKind::I2),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, lists: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_lists(n, lists).unwrap()
    }

    #[test]
    fn antichain_counts_match_dedekind_numbers() {
        // antichains of nonempty sets = Dedekind number minus {∅}
        let counts: Vec<usize> = (0..=4).map(|n| antichains(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 19, 167]);
    }

    #[test]
    fn small_covering_clutters() {
        assert_eq!(enumerate_covering_clutters(1).unwrap().len(), 1);
        let two = enumerate_covering_clutters(2).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.contains(&h(2, &[&[1, 2]])));
        assert!(two.contains(&h(2, &[&[1], &[2]])));
        assert_eq!(enumerate_covering_clutters(3).unwrap().len(), 5);
        assert!(matches!(
            enumerate_covering_clutters(6),
            Err(Error::GroundSetTooLarge { n: 6, max: 5 })
        ));
    }

    #[test]
    fn covering_clutter_counts() {
        // consecutive differences of the counts of inequivalent monotone
        // Boolean functions: 2, 3, 5, 10, 30, 210
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_covering_clutters(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 20, 180]);
    }

    #[test]
    fn covering_clutters_on_three_vertices_are_the_listed_five() {
        let listed = [
            h(3, &[&[1, 2, 3]]),
            h(3, &[&[1, 2], &[1, 3], &[2, 3]]),
            h(3, &[&[1, 2], &[1, 3]]),
            h(3, &[&[1, 2], &[3]]),
            h(3, &[&[1], &[2], &[3]]),
        ];
        let generated = enumerate_covering_clutters(3).unwrap();
        for g in &listed {
            let matches = generated
                .iter()
                .filter(|c| crate::canon::is_isomorphic(c, g).unwrap())
                .count();
            assert_eq!(matches, 1);
        }
    }

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn classify_uses_support() {
        let catalog = Catalog::build(3).unwrap();
        let f = Clutter::new(3, [VertexSet::singleton(1), VertexSet::singleton(3)]).unwrap();
        let idx = catalog.classify(&f).unwrap().unwrap();
        assert_eq!(catalog.get(idx).unwrap(), &h(2, &[&[1], &[2]]));
    }

    #[test]
    fn table2_inverts_table1() {
        let entries = build_table1(3).unwrap();
        let rows = invert_table1(&entries);
        for e in &entries {
            for kind in FamilyKind::ALL {
                let row = rows
                    .iter()
                    .find(|r| r.delta == e.family_index(kind))
                    .unwrap();
                assert!(row.of(kind).contains(&e.index));
            }
        }
        let total: usize = rows
            .iter()
            .map(|r| r.realizations.iter().map(Vec::len).sum::<usize>())
            .sum();
        assert_eq!(total, 4 * entries.len());
    }

    #[test]
    fn class_index_text() {
        let idx = ClassIndex::new(4, 13);
        assert_eq!(idx.to_string(), "H4,13");
        assert_eq!("H4,13".parse::<ClassIndex>().unwrap(), idx);
        assert_eq!("4,13".parse::<ClassIndex>().unwrap(), idx);
        assert!("4".parse::<ClassIndex>().is_err());
    }

    #[test]
    fn tsv_shapes() {
        let entries = build_table1(2).unwrap();
        let t1 = table1_tsv(&entries, false);
        assert_eq!(t1.lines().count(), 4);
        assert!(t1.lines().skip(1).all(|l| l.split('\t').count() == 6));
        let inline = table1_tsv(&entries, true);
        assert!(inline.contains("{{1,2}}"));
        let t2 = table2_tsv(&invert_table1(&entries));
        assert_eq!(t2.lines().count(), 4);
    }
}
