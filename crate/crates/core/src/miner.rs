//! Enumeration of the frequent interval patterns closed over the positives.
//!
//! The search starts from the closure of the most generic pattern and
//! specializes one bound at a time by a single modality step. Bounds are
//! numbered `0..2n`: `2i` is the lower bound of feature `i`, `2i + 1` its
//! upper bound. A node remembers the bound it was produced by and only
//! changes bounds at or after that position. A child is kept when its
//! closure leaves every earlier bound untouched, so each closed pattern has
//! exactly one parent.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::discretizer::DiscretizedTask;
use crate::error::{Error, Result};
use crate::pattern::{Interval, IntervalPattern, PatternRecord};

/// A support threshold given either as an absolute count or as a
/// percentage of a population size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Threshold {
    Count(usize),
    Percent(f64),
}

impl Threshold {
    /// Resolves the threshold against a population of `total` examples.
    /// Percentages round up.
    pub fn to_count(self, total: usize) -> usize {
        match self {
            Threshold::Count(c) => c,
            Threshold::Percent(pct) => {
                let exact = pct * total as f64 / 100.0;
                // absorb representation error such as 0.1 * 30 = 3.0000000000000004
                (exact - 1e-9 * exact.max(1.0)).ceil().max(0.0) as usize
            }
        }
    }
}

impl FromStr for Threshold {
    type Err = Error;

    /// `"3"` is a count, `"10%"` a percentage.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidThreshold(s.to_string());
        if let Some(pct) = s.strip_suffix('%') {
            let v: f64 = pct.trim().parse().map_err(|_| bad())?;
            if !v.is_finite() || v < 0.0 {
                return Err(bad());
            }
            Ok(Threshold::Percent(v))
        } else {
            s.parse().map(Threshold::Count).map_err(|_| bad())
        }
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Count(c) => write!(f, "{c}"),
            Threshold::Percent(p) => write!(f, "{p}%"),
        }
    }
}

/// Thresholds are strict: a rule `X` is kept when `supp⁺(X) > minsup` and
/// `supp⁻(X) < maxfp`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MiningParams {
    /// Relative to |P|.
    pub minsup: Threshold,
    /// Relative to |N|.
    pub maxfp: Threshold,
    pub eqmod: usize,
}

impl Default for MiningParams {
    fn default() -> Self {
        MiningParams {
            minsup: Threshold::Count(0),
            maxfp: Threshold::Percent(10.0),
            eqmod: 10,
        }
    }
}

impl MiningParams {
    pub fn minsup_count(&self, n_pos: usize) -> usize {
        self.minsup.to_count(n_pos)
    }

    pub fn maxfp_count(&self, n_neg: usize) -> usize {
        self.maxfp.to_count(n_neg)
    }
}

type Bounds = Vec<(u32, u32)>;

/// Per-feature, per-modality bit sets: `ge[i][m]` holds the examples whose
/// code on feature `i` is at least `m`, `le[i][m]` those at most `m`.
struct CodeIndex {
    ge: Vec<Vec<FixedBitSet>>,
    le: Vec<Vec<FixedBitSet>>,
}

impl CodeIndex {
    fn build(codes: &[Vec<u32>], modality_counts: &[usize]) -> Self {
        let len = codes.len();
        let mut ge = Vec::with_capacity(modality_counts.len());
        let mut le = Vec::with_capacity(modality_counts.len());
        for (i, &m) in modality_counts.iter().enumerate() {
            let mut exact = vec![FixedBitSet::with_capacity(len); m];
            for (row, c) in codes.iter().enumerate() {
                exact[c[i] as usize].insert(row);
            }
            let mut ge_i = exact.clone();
            for k in (0..m.saturating_sub(1)).rev() {
                let (head, tail) = ge_i.split_at_mut(k + 1);
                head[k].union_with(&tail[0]);
            }
            let mut le_i = exact;
            for k in 1..m {
                let (head, tail) = le_i.split_at_mut(k);
                tail[0].union_with(&head[k - 1]);
            }
            ge.push(ge_i);
            le.push(le_i);
        }
        CodeIndex { ge, le }
    }

    fn extent(&self, bounds: &[(u32, u32)], len: usize) -> FixedBitSet {
        let mut ext = FixedBitSet::with_capacity(len);
        ext.insert_range(..);
        for (i, &(l, u)) in bounds.iter().enumerate() {
            ext.intersect_with(&self.ge[i][l as usize]);
            ext.intersect_with(&self.le[i][u as usize]);
        }
        ext
    }
}

struct Search<'a> {
    task: &'a DiscretizedTask,
    /// Positive codes by feature, then row.
    columns: Vec<Vec<u32>>,
    pos: CodeIndex,
    minsup: usize,
}

struct Node {
    bounds: Bounds,
    extent: FixedBitSet,
    last_change: usize,
}

impl<'a> Search<'a> {
    fn new(task: &'a DiscretizedTask, minsup: usize) -> Self {
        let counts: Vec<usize> = task.modalities().features().iter().map(Vec::len).collect();
        let columns = (0..task.n_features())
            .map(|i| task.pos_codes().iter().map(|r| r[i]).collect())
            .collect();
        Search {
            task,
            columns,
            pos: CodeIndex::build(task.pos_codes(), &counts),
            minsup,
        }
    }

    /// Bounding box of a non-empty positive extent, in codes.
    fn close(&self, extent: &FixedBitSet) -> Bounds {
        self.columns
            .iter()
            .map(|col| {
                extent
                    .ones()
                    .map(|r| col[r])
                    .fold((u32::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)))
            })
            .collect()
    }

    fn root(&self) -> Option<Node> {
        let n_pos = self.task.n_pos();
        if n_pos <= self.minsup {
            return None;
        }
        let mut extent = FixedBitSet::with_capacity(n_pos);
        extent.insert_range(..);
        Some(Node {
            bounds: self.close(&extent),
            extent,
            last_change: 0,
        })
    }

    /// Canonical children of `node`, in change order.
    fn children(&self, node: &Node) -> Vec<Node> {
        let mut out = Vec::new();
        for change in node.last_change..2 * node.bounds.len() {
            let feature = change / 2;
            let (l, u) = node.bounds[feature];
            if l == u {
                continue;
            }
            let mut extent = node.extent.clone();
            if change % 2 == 0 {
                extent.intersect_with(&self.pos.ge[feature][l as usize + 1]);
            } else {
                extent.intersect_with(&self.pos.le[feature][u as usize - 1]);
            }
            if extent.count_ones(..) <= self.minsup {
                continue;
            }
            let bounds = self.close(&extent);
            if !preserves_prefix(&node.bounds, &bounds, change) {
                continue;
            }
            out.push(Node {
                bounds,
                extent,
                last_change: change,
            });
        }
        out
    }

    /// Depth-first enumeration of the subtree under `start`.
    fn explore(&self, start: Node, out: &mut Vec<(Bounds, FixedBitSet)>) {
        let mut seen: HashSet<Bounds> = HashSet::new();
        let mut stack = vec![start];
        while let Some(node) = stack.pop() {
            if !seen.insert(node.bounds.clone()) {
                continue;
            }
            let mut kids = self.children(&node);
            kids.reverse();
            stack.extend(kids);
            out.push((node.bounds, node.extent));
        }
    }

    fn to_records(&self, found: Vec<(Bounds, FixedBitSet)>) -> Vec<PatternRecord> {
        let counts: Vec<usize> = self.task.modalities().features().iter().map(Vec::len).collect();
        let neg = CodeIndex::build(self.task.neg_codes(), &counts);
        let n_neg = self.task.n_neg();
        let mut records: Vec<PatternRecord> = found
            .into_iter()
            .map(|(bounds, tp)| {
                let fp = neg.extent(&bounds, n_neg);
                PatternRecord::new(self.decode(&bounds), tp, fp)
            })
            .collect();
        records.sort();
        records.dedup();
        records
    }

    fn decode(&self, bounds: &[(u32, u32)]) -> IntervalPattern {
        let m = self.task.modalities();
        IntervalPattern::from_intervals(
            bounds
                .iter()
                .enumerate()
                .map(|(i, &(l, u))| Interval {
                    lower: m.feature(i)[l as usize],
                    upper: m.feature(i)[u as usize],
                })
                .collect(),
        )
    }
}

/// True when `child` agrees with `parent` on every bound numbered below
/// `change`.
fn preserves_prefix(parent: &[(u32, u32)], child: &[(u32, u32)], change: usize) -> bool {
    let feature = change / 2;
    if parent[..feature] != child[..feature] {
        return false;
    }
    change.is_multiple_of(2) || parent[feature].0 == child[feature].0
}

/// All patterns closed over the positives with `supp⁺ > minsup`, sorted
/// canonically, each with its TP and FP sets.
pub fn min_int_change(task: &DiscretizedTask, minsup: usize) -> Vec<PatternRecord> {
    let search = Search::new(task, minsup);
    let mut found = Vec::new();
    if let Some(root) = search.root() {
        search.explore(root, &mut found);
    }
    search.to_records(found)
}

/// Same result as [`min_int_change`], with the first-level subtrees mined
/// on the rayon pool.
pub fn min_int_change_parallel(task: &DiscretizedTask, minsup: usize) -> Vec<PatternRecord> {
    let search = Search::new(task, minsup);
    let Some(root) = search.root() else {
        return Vec::new();
    };
    let subtrees = search.children(&root);
    let mut found = vec![(root.bounds, root.extent)];
    let parts: Vec<Vec<(Bounds, FixedBitSet)>> = subtrees
        .into_par_iter()
        .map(|node| {
            let mut out = Vec::new();
            search.explore(node, &mut out);
            out
        })
        .collect();
    found.extend(parts.into_iter().flatten());
    search.to_records(found)
}

/// Rules with `supp⁻ < maxfp`, order preserved.
pub fn accuracy_filter(records: &[PatternRecord], maxfp: usize) -> Vec<PatternRecord> {
    records.iter().filter(|r| r.supp_neg < maxfp).cloned().collect()
}
