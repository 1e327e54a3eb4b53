//! Edge partitions by endpoint degree or endpoint neighbour-degree sum,
//! and comparison against the published tables.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::construct::Family;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{rat_int, Poly};
use crate::tables;

/// Canonicalized unordered pair of positive integers, lo <= hi.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairKey {
    lo: u64,
    hi: u64,
}

impl PairKey {
    pub fn new(x: u64, y: u64) -> Self {
        if x <= y {
            PairKey { lo: x, hi: y }
        } else {
            PairKey { lo: y, hi: x }
        }
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }
}

impl fmt::Display for PairKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// Whether edges are classified by endpoint degrees or by endpoint
/// neighbour-degree sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionMode {
    Degree,
    DegreeSum,
}

impl PartitionMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            PartitionMode::Degree => "degree",
            PartitionMode::DegreeSum => "degree-sum",
        }
    }
}

impl fmt::Display for PartitionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Multiset of unordered pairs with counts. Zero-count classes are never
/// stored; the total always equals the number of classified edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Partition {
    counts: BTreeMap<PairKey, u64>,
    total: u64,
}

impl Partition {
    pub fn from_counts(counts: BTreeMap<PairKey, u64>) -> Self {
        let counts: BTreeMap<PairKey, u64> =
            counts.into_iter().filter(|&(_, c)| c > 0).collect();
        let total = counts.values().sum();
        Partition { counts, total }
    }

    pub fn counts(&self) -> &BTreeMap<PairKey, u64> {
        &self.counts
    }

    pub fn count(&self, key: &PairKey) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn class_count(&self) -> usize {
        self.counts.len()
    }
}

fn partition_by(g: &Graph, values: &[u64]) -> Partition {
    let mut counts = BTreeMap::new();
    for (i, j) in g.edges_dense() {
        let key = PairKey::new(values[i as usize], values[j as usize]);
        *counts.entry(key).or_insert(0u64) += 1;
    }
    Partition::from_counts(counts)
}

/// Partition of the edges of `g` by endpoint degrees.
pub fn degree_partition(g: &Graph) -> Partition {
    let degrees: Vec<u64> = g.degree_vec().iter().map(|&d| d as u64).collect();
    partition_by(g, &degrees)
}

/// Partition of the edges of `g` by endpoint neighbour-degree sums.
pub fn sum_partition(g: &Graph) -> Partition {
    partition_by(g, g.degree_sums())
}

pub fn partition(g: &Graph, mode: PartitionMode) -> Partition {
    match mode {
        PartitionMode::Degree => degree_partition(g),
        PartitionMode::DegreeSum => sum_partition(g),
    }
}

/// A published table: per pair class, the claimed edge count as a
/// polynomial in r.
#[derive(Debug, Clone)]
pub struct ExpectedTable {
    pub family: Family,
    pub mode: PartitionMode,
    rows: Vec<(PairKey, Poly)>,
}

impl ExpectedTable {
    fn from_raw(family: Family, mode: PartitionMode, raw: &[tables::RawRow]) -> Self {
        let rows = raw
            .iter()
            .map(|&(lo, hi, coeffs, den)| {
                (PairKey::new(lo, hi), Poly::from_ints_over(&coeffs, den))
            })
            .collect();
        ExpectedTable { family, mode, rows }
    }

    /// The table published for this family and mode.
    pub fn get(family: Family, mode: PartitionMode) -> &'static ExpectedTable {
        static TABLES: OnceLock<Vec<ExpectedTable>> = OnceLock::new();
        let all = TABLES.get_or_init(|| {
            vec![
                ExpectedTable::from_raw(Family::Hdn3, PartitionMode::Degree, tables::HDN3_DEGREE),
                ExpectedTable::from_raw(
                    Family::Hdn3,
                    PartitionMode::DegreeSum,
                    tables::HDN3_DEGREE_SUM,
                ),
                ExpectedTable::from_raw(Family::Thdn3, PartitionMode::Degree, tables::THDN3_DEGREE),
                ExpectedTable::from_raw(
                    Family::Thdn3,
                    PartitionMode::DegreeSum,
                    tables::THDN3_DEGREE_SUM,
                ),
                ExpectedTable::from_raw(Family::Rhdn3, PartitionMode::Degree, tables::RHDN3_DEGREE),
                ExpectedTable::from_raw(
                    Family::Rhdn3,
                    PartitionMode::DegreeSum,
                    tables::RHDN3_DEGREE_SUM,
                ),
            ]
        });
        all.iter()
            .find(|t| t.family == family && t.mode == mode)
            .expect("all six tables are registered")
    }

    pub fn rows(&self) -> &[(PairKey, Poly)] {
        &self.rows
    }

    /// Sum of all row polynomials; for a correct table this is the edge
    /// count of the family.
    pub fn total_poly(&self) -> Poly {
        let mut acc = Poly::zero();
        for (_, p) in &self.rows {
            acc += p;
        }
        acc
    }

    /// All rows evaluate to nonnegative integers at this r. Degree tables
    /// are additionally stated only for r >= 4.
    pub fn is_applicable(&self, r: u32) -> bool {
        if self.mode == PartitionMode::Degree && r < 4 {
            return false;
        }
        self.rows.iter().all(|(_, p)| {
            let v = p.eval(r as i64);
            v >= rat_int(0) && v.is_integer()
        })
    }

    /// Smallest r such that the table applies at every r' >= r (checked up
    /// to r = 64).
    pub fn min_admissible_r(&self) -> u32 {
        let mut min = 65;
        for r in (2..=64u32).rev() {
            if self.is_applicable(r) {
                min = r;
            } else {
                break;
            }
        }
        min
    }
}

/// Evaluate a table at r, dropping zero rows. Fails if any row is negative
/// (or the table is outside its stated range), naming the offending row.
pub fn expected_partition(table: &ExpectedTable, r: u32) -> Result<Partition> {
    if table.mode == PartitionMode::Degree && r < 4 {
        return Err(Error::TableNotApplicable {
            r,
            detail: format!(
                "degree table for {} is stated for r >= 4",
                table.family
            ),
        });
    }
    let mut counts = BTreeMap::new();
    for (key, poly) in table.rows() {
        let v = poly.eval(r as i64);
        if v < rat_int(0) {
            return Err(Error::TableNotApplicable {
                r,
                detail: format!("row {key} = {poly} evaluates to {}", v),
            });
        }
        if !v.is_integer() {
            return Err(Error::TableNotApplicable {
                r,
                detail: format!("row {key} = {poly} evaluates to non-integer {}", v),
            });
        }
        let c = *v.numer() as u64;
        if c > 0 {
            *counts.entry(*key).or_insert(0) += c;
        }
    }
    Ok(Partition::from_counts(counts))
}

/// One class whose computed and expected counts disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Discrepancy {
    pub key: PairKey,
    pub actual: u64,
    pub expected: u64,
}

/// All classes on which the two partitions disagree (a missing class
/// counts as zero), in key order. Empty means exact agreement.
pub fn compare_partitions(actual: &Partition, expected: &Partition) -> Vec<Discrepancy> {
    let mut keys: Vec<PairKey> = actual.counts().keys().copied().collect();
    keys.extend(expected.counts().keys().copied());
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .filter_map(|key| {
            let (a, e) = (actual.count(&key), expected.count(&key));
            (a != e).then_some(Discrepancy {
                key,
                actual: a,
                expected: e,
            })
        })
        .collect()
}
