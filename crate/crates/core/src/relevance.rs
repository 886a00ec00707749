//! Pruning of dominated rules: a pattern is dropped when another candidate
//! has the same false-positive set and strictly larger intervals.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::pattern::{leq, PatternRecord};

/// A pruned pattern together with a kept pattern that dominates it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Removal {
    pub removed: PatternRecord,
    pub witness: PatternRecord,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelevantSet {
    /// Survivors, canonically sorted.
    pub kept: Vec<PatternRecord>,
    /// Sorted by the removed pattern.
    pub removals: Vec<Removal>,
}

impl RelevantSet {
    pub fn len(&self) -> usize {
        self.kept.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kept.is_empty()
    }
}

fn strictly_inside(y: &PatternRecord, x: &PatternRecord) -> bool {
    y.pattern != x.pattern && leq(&y.pattern, &x.pattern).expect("candidates share arity")
}

/// Keeps, within every group of candidates sharing a false-positive set,
/// the patterns not strictly contained in another member of the group.
pub fn relevance_filter(candidates: &[PatternRecord]) -> RelevantSet {
    let mut groups: HashMap<&FixedBitSet, Vec<&PatternRecord>> = HashMap::new();
    for rec in candidates {
        groups.entry(&rec.fp_set).or_default().push(rec);
    }

    let per_group: Vec<(Vec<PatternRecord>, Vec<Removal>)> = groups
        .into_par_iter()
        .map(|(_, members)| prune_group(&members))
        .collect();

    let mut out = RelevantSet::default();
    for (kept, removals) in per_group {
        out.kept.extend(kept);
        out.removals.extend(removals);
    }
    out.kept.sort();
    out.kept.dedup();
    out.removals.sort_by(|a, b| a.removed.cmp(&b.removed));
    out
}

fn prune_group(members: &[&PatternRecord]) -> (Vec<PatternRecord>, Vec<Removal>) {
    let (kept, dominated): (Vec<&PatternRecord>, Vec<&PatternRecord>) = members
        .iter()
        .copied()
        .partition(|y| !members.iter().any(|x| strictly_inside(y, x)));
    // Containment is a finite partial order, so every dominated pattern
    // lies inside some maximal one.
    let removals = dominated
        .into_iter()
        .map(|y| Removal {
            removed: y.clone(),
            witness: kept
                .iter()
                .find(|x| strictly_inside(y, x))
                .map(|x| (*x).clone())
                .expect("a maximal dominator exists"),
        })
        .collect();
    (kept.into_iter().cloned().collect(), removals)
}
