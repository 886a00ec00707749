//! Exhaustive reference computations for small instances.
//!
//! Nothing here shares code with the depth-first miner: closed patterns are
//! found by closing every syntactically valid box, and relevance pruning is
//! an all-pairs scan.

use std::collections::BTreeSet;

use crate::discretizer::DiscretizedTask;
use crate::error::{Error, Result};
use crate::pattern::{bounding_box, close_pos, extent, strictly_leq, supports, IntervalPattern, PatternRecord};

pub const DEFAULT_CAP: u128 = 10_000_000;

/// Number of boxes `∏ |M_i|(|M_i|+1)/2`.
pub fn box_count(task: &DiscretizedTask) -> u128 {
    task.modalities()
        .features()
        .iter()
        .map(|m| {
            let k = m.len() as u128;
            k * (k + 1) / 2
        })
        .product()
}

/// Every Γ⁺-closed pattern of the task (no support threshold), with records,
/// canonically sorted.
pub fn enumerate_all_closed_bruteforce(task: &DiscretizedTask, cap: u128) -> Result<Vec<PatternRecord>> {
    let boxes = box_count(task);
    if boxes > cap {
        return Err(Error::CapExceeded { boxes, cap });
    }
    let per_feature: Vec<Vec<(f64, f64)>> = task
        .modalities()
        .features()
        .iter()
        .map(|m| {
            let mut pairs = Vec::new();
            for (a, &l) in m.iter().enumerate() {
                for &u in &m[a..] {
                    pairs.push((l, u));
                }
            }
            pairs
        })
        .collect();

    let mut closed = BTreeSet::new();
    let mut digits = vec![0usize; per_feature.len()];
    'odometer: loop {
        let candidate = IntervalPattern::new(digits.iter().zip(&per_feature).map(|(&d, pairs)| pairs[d]))?;
        match close_pos(&candidate, task) {
            Ok(c) => {
                closed.insert(c);
            }
            Err(Error::EmptyExtent) => {}
            Err(e) => return Err(e),
        }
        for (d, pairs) in digits.iter_mut().zip(&per_feature) {
            *d += 1;
            if *d < pairs.len() {
                continue 'odometer;
            }
            *d = 0;
        }
        break;
    }

    closed.into_iter().map(|p| supports(&p, task)).collect()
}

/// Second route to the same set: bounding boxes of every positive subset
/// whose box covers exactly that subset. Limited to 20 positives.
pub fn closed_by_subsets(task: &DiscretizedTask) -> Result<Vec<IntervalPattern>> {
    let pos = task.positives();
    if pos.len() > 20 {
        return Err(Error::CapExceeded {
            boxes: 1u128 << pos.len(),
            cap: 1 << 20,
        });
    }
    let mut out = BTreeSet::new();
    for mask in 1u32..(1u32 << pos.len()) {
        let chosen = (0..pos.len()).filter(|i| mask & (1 << i) != 0);
        let bbox = bounding_box(chosen.map(|i| &pos[i])).expect("mask is non-zero");
        let ext = extent(&bbox, pos)?;
        let covers_exactly = ext.ones().all(|i| mask & (1 << i) != 0);
        if covers_exactly {
            out.insert(bbox);
        }
    }
    Ok(out.into_iter().collect())
}

/// Every stage of the rule-mining pipeline, computed naively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub all_closed: Vec<PatternRecord>,
    /// `supp⁺ > minsup`.
    pub closed: Vec<PatternRecord>,
    /// ... and `supp⁻ < maxfp`.
    pub rules: Vec<PatternRecord>,
    /// ... and not dominated.
    pub relevant: Vec<PatternRecord>,
}

impl OracleResult {
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.closed.len(), self.rules.len(), self.relevant.len())
    }
}

/// Drops every `y` for which some `x` in the set has the same FP set and
/// `y ⊏ x`.
pub fn naive_relevance(rules: &[PatternRecord]) -> Vec<PatternRecord> {
    rules
        .iter()
        .filter(|y| {
            !rules.iter().any(|x| {
                x.fp_set == y.fp_set && strictly_leq(&y.pattern, &x.pattern).expect("same arity")
            })
        })
        .cloned()
        .collect()
}

pub fn reference_pipeline(task: &DiscretizedTask, minsup: usize, maxfp: usize, cap: u128) -> Result<OracleResult> {
    let all_closed = enumerate_all_closed_bruteforce(task, cap)?;
    Ok(from_closed(all_closed, minsup, maxfp))
}

/// Re-applies thresholds to an already enumerated closed set.
pub fn from_closed(all_closed: Vec<PatternRecord>, minsup: usize, maxfp: usize) -> OracleResult {
    let closed: Vec<PatternRecord> = all_closed.iter().filter(|r| r.supp_pos > minsup).cloned().collect();
    let rules: Vec<PatternRecord> = closed.iter().filter(|r| r.supp_neg < maxfp).cloned().collect();
    let relevant = naive_relevance(&rules);
    OracleResult {
        all_closed,
        closed,
        rules,
        relevant,
    }
}
