//! The published census of hypergraphs on at most four vertices, shipped as
//! a fixture, and the comparison of regenerated tables against it.
//!
//! Class indices differ between any two listings; what must agree is the
//! isomorphism class. Each reference row names its hypergraph explicitly, so
//! classifying those hypergraphs fixes one global bijection between
//! reference and generated indices. Every family cell and realization list
//! is then compared through that bijection.

use std::collections::{BTreeMap, BTreeSet};

use crate::catalog::{Catalog, CatalogEntry, ClassIndex, FamilyKind, RealizationRow};
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const REFERENCE_TABLES: &str = include_str!("../fixtures/reference_tables.tsv");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceEntry {
    pub class: ClassIndex,
    pub hypergraph: Hypergraph,
    /// F1, F2, I1, I2.
    pub families: [ClassIndex; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceRealizations {
    pub delta: ClassIndex,
    pub realizations: [BTreeSet<ClassIndex>; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceTables {
    pub table1: Vec<ReferenceEntry>,
    pub table2: Vec<ReferenceRealizations>,
}

impl ReferenceTables {
    pub fn shipped() -> Self {
        parse_reference(REFERENCE_TABLES).expect("shipped fixture parses")
    }
}

fn parse_index(s: &str, line: usize) -> Result<ClassIndex> {
    s.parse().map_err(|message| Error::Parse { line, message })
}

fn parse_list(s: &str, line: usize) -> Result<BTreeSet<ClassIndex>> {
    if s.trim() == "-" {
        return Ok(BTreeSet::new());
    }
    s.split_whitespace().map(|t| parse_index(t, line)).collect()
}

pub fn parse_reference(text: &str) -> Result<ReferenceTables> {
    let mut table1 = Vec::new();
    let mut table2 = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = raw.split('\t').collect();
        let bad = |message: &str| Error::Parse {
            line,
            message: message.to_string(),
        };
        match cols.first().copied() {
            Some("T1") => {
                if cols.len() != 8 {
                    return Err(bad("T1 rows have 8 columns"));
                }
                let class = parse_index(cols[1], line)?;
                let n: usize = cols[2].parse().map_err(|_| bad("bad vertex count"))?;
                let mut edges = Vec::new();
                for token in cols[3].split_whitespace() {
                    let labels = token
                        .chars()
                        .map(|c| c.to_digit(10).map(|d| d as usize))
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(|| bad("edge labels are single digits"))?;
                    edges.push(crate::hypergraph::checked_set(n, labels)?);
                }
                let hypergraph = Hypergraph::new(n, edges)?;
                let mut families = [class; 4];
                for (slot, col) in families.iter_mut().zip(&cols[4..8]) {
                    *slot = parse_index(col, line)?;
                }
                table1.push(ReferenceEntry {
                    class,
                    hypergraph,
                    families,
                });
            }
            Some("T2") => {
                if cols.len() != 6 {
                    return Err(bad("T2 rows have 6 columns"));
                }
                let delta = parse_index(cols[1], line)?;
                let realizations = [
                    parse_list(cols[2], line)?,
                    parse_list(cols[3], line)?,
                    parse_list(cols[4], line)?,
                    parse_list(cols[5], line)?,
                ];
                table2.push(ReferenceRealizations {
                    delta,
                    realizations,
                });
            }
            _ => return Err(bad("rows start with T1 or T2")),
        }
    }
    Ok(ReferenceTables { table1, table2 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct ReferenceCheck {
    /// Reference index to generated index.
    pub bijection: BTreeMap<ClassIndex, ClassIndex>,
    pub lines: Vec<CheckLine>,
}

impl ReferenceCheck {
    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| !l.pass)
    }

    pub fn report(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            let verdict = if l.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{verdict}\t{}", l.label));
            if !l.detail.is_empty() {
                out.push('\t');
                out.push_str(&l.detail);
            }
            out.push('\n');
        }
        out
    }
}

/// Compares generated tables with the reference through the bijection
/// induced by the reference rows' own edge lists.
pub fn check_against_reference(
    reference: &ReferenceTables,
    catalog: &Catalog,
    table1: &[CatalogEntry],
    table2: &[RealizationRow],
) -> Result<ReferenceCheck> {
    let mut lines = Vec::new();
    let mut bijection = BTreeMap::new();
    let mut unmatched = Vec::new();
    for row in &reference.table1 {
        match catalog.classify(&Clutter::from(&row.hypergraph))? {
            Some(idx) if row.hypergraph.is_covering() => {
                bijection.insert(row.class, idx);
            }
            _ => unmatched.push(row.class),
        }
    }
    let images: BTreeSet<ClassIndex> = bijection.values().copied().collect();
    let generated: BTreeSet<ClassIndex> = table1
        .iter()
        .map(|e| e.index)
        .filter(|i| i.n <= reference_max_n(reference))
        .collect();
    let bijective = unmatched.is_empty() && images.len() == bijection.len() && images == generated;
    lines.push(CheckLine {
        label: "class bijection".into(),
        pass: bijective,
        detail: format!(
            "{} reference classes, {} generated, {} matched{}",
            reference.table1.len(),
            generated.len(),
            images.len(),
            if unmatched.is_empty() {
                String::new()
            } else {
                format!(", unmatched {unmatched:?}")
            }
        ),
    });
    let inverse: BTreeMap<ClassIndex, ClassIndex> =
        bijection.iter().map(|(r, g)| (*g, *r)).collect();
    let back = |g: ClassIndex| inverse.get(&g).copied();

    for row in &reference.table1 {
        let label = format!("table1 {}", row.class);
        let Some(entry) = bijection
            .get(&row.class)
            .and_then(|g| table1.iter().find(|e| e.index == *g))
        else {
            lines.push(CheckLine {
                label,
                pass: false,
                detail: "no generated entry".into(),
            });
            continue;
        };
        let mut mismatches = Vec::new();
        for kind in FamilyKind::ALL {
            let got = back(entry.family_index(kind));
            let want = row.families[kind as usize];
            if got != Some(want) {
                mismatches.push(format!("{} expected {want} got {got:?}", kind.name()));
            }
        }
        lines.push(CheckLine {
            label,
            pass: mismatches.is_empty(),
            detail: mismatches.join("; "),
        });
    }

    for row in &reference.table2 {
        let label = format!("table2 {}", row.delta);
        let Some(generated_row) = bijection
            .get(&row.delta)
            .and_then(|g| table2.iter().find(|r| r.delta == *g))
        else {
            lines.push(CheckLine {
                label,
                pass: false,
                detail: "no generated row".into(),
            });
            continue;
        };
        let mut mismatches = Vec::new();
        for kind in FamilyKind::ALL {
            let got: BTreeSet<Option<ClassIndex>> =
                generated_row.of(kind).iter().map(|g| back(*g)).collect();
            let want: BTreeSet<Option<ClassIndex>> = row.realizations[kind as usize]
                .iter()
                .map(|c| Some(*c))
                .collect();
            if got != want {
                mismatches.push(format!("{} expected {want:?} got {got:?}", kind.name()));
            }
        }
        lines.push(CheckLine {
            label,
            pass: mismatches.is_empty(),
            detail: mismatches.join("; "),
        });
    }
    Ok(ReferenceCheck { bijection, lines })
}

fn reference_max_n(reference: &ReferenceTables) -> usize {
    reference
        .table1
        .iter()
        .map(|r| r.class.n)
        .max()
        .unwrap_or(0)
}

/// Reference hypergraph for a reference class, if listed.
pub fn reference_hypergraph(reference: &ReferenceTables, class: ClassIndex) -> Option<&Hypergraph> {
    reference
        .table1
        .iter()
        .find(|r| r.class == class)
        .map(|r| &r.hypergraph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::VertexSet;

    fn vs(labels: &[usize]) -> VertexSet {
        VertexSet::from_vertices(labels.iter().copied())
    }

    #[test]
    fn shipped_fixture_parses() {
        let r = ReferenceTables::shipped();
        assert_eq!(r.table1.len(), 28);
        assert_eq!(r.table2.len(), 28);
        let h413 = reference_hypergraph(&r, ClassIndex::new(4, 13)).unwrap();
        assert_eq!(
            h413.edges(),
            &[vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 4]), vs(&[3, 4])]
        );
    }

    #[test]
    fn malformed_rows_are_rejected() {
        assert!(parse_reference("T1\t1,1\t1\n").is_err());
        assert!(parse_reference("X\t1\n").is_err());
        assert!(parse_reference("T2\t1,1\tz\t-\t-\t-\n").is_err());
    }

    #[test]
    fn tampered_reference_fails_the_check() {
        let mut r = ReferenceTables::shipped();
        let catalog = Catalog::build(4).unwrap();
        let t1 = crate::catalog::table1_for(&catalog, 1).unwrap();
        let t2 = crate::catalog::invert_table1(&t1);
        assert!(check_against_reference(&r, &catalog, &t1, &t2)
            .unwrap()
            .all_pass());
        r.table1[10].families[0] = ClassIndex::new(4, 1);
        let check = check_against_reference(&r, &catalog, &t1, &t2).unwrap();
        assert_eq!(check.failures().count(), 1);
    }
}
