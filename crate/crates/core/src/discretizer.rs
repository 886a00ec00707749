//! Modality sets (the allowed interval endpoints per feature) and snapping
//! of example values onto them.

use serde::Serialize;

use crate::dataset::BinaryTask;
use crate::error::{Error, Result};

/// Per-feature strictly ascending endpoint vocabularies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModalitySets {
    features: Vec<Vec<f64>>,
    /// Requested cap, `None` when every distinct value is a modality.
    eqmod: Option<usize>,
}

impl ModalitySets {
    /// Wraps explicit modality lists. Each list is sorted and deduplicated.
    pub fn new(features: Vec<Vec<f64>>) -> Result<Self> {
        let features = features
            .into_iter()
            .map(|mut m| {
                if m.is_empty() {
                    return Err(Error::Empty("empty modality set"));
                }
                if let Some(v) = m.iter().find(|v| !v.is_finite()) {
                    return Err(Error::InvalidInterval { lower: *v, upper: *v });
                }
                normalize(&mut m);
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ModalitySets { features, eqmod: None })
    }

    pub fn features(&self) -> &[Vec<f64>] {
        &self.features
    }

    pub fn feature(&self, i: usize) -> &[f64] {
        &self.features[i]
    }

    pub fn n_features(&self) -> usize {
        self.features.len()
    }

    pub fn eqmod(&self) -> Option<usize> {
        self.eqmod
    }

    /// Position of `v` in `M_i`, if it is a modality.
    pub fn code_of(&self, i: usize, v: f64) -> Option<u32> {
        self.features[i]
            .binary_search_by(|m| m.total_cmp(&v))
            .ok()
            .map(|c| c as u32)
    }

    /// Smallest modality of feature `i` that is `>= v`.
    pub fn snap_value(&self, i: usize, v: f64) -> Result<(u32, f64)> {
        let m = &self.features[i];
        let pos = m.partition_point(|&x| x < v);
        match m.get(pos) {
            Some(&snapped) => Ok((pos as u32, snapped)),
            None => Err(Error::OutOfRange { feature: i, value: v }),
        }
    }
}

fn normalize(m: &mut Vec<f64>) {
    for v in m.iter_mut() {
        *v += 0.0;
    }
    m.sort_by(f64::total_cmp);
    m.dedup();
}

/// Every distinct value of each feature over P ∪ N.
pub fn all_values_modalities(task: &BinaryTask) -> ModalitySets {
    let features = (0..task.n_features())
        .map(|i| {
            let mut m: Vec<f64> = task.column(i).collect();
            normalize(&mut m);
            m
        })
        .collect();
    ModalitySets { features, eqmod: None }
}

/// Equal-frequency cut points over the positive values, plus the global
/// minimum and maximum over all examples.
///
/// For `k = 1..eqmod-1` the cut is the sorted positive value at 0-based
/// index `ceil(k·|P|/eqmod) − 1`.
pub fn equiprobable_modalities(task: &BinaryTask, eqmod: usize) -> Result<ModalitySets> {
    if eqmod == 0 {
        return Err(Error::InvalidEqmod);
    }
    let n_pos = task.positives().len();
    if n_pos == 0 {
        return Err(Error::EmptyPositives);
    }
    let features = (0..task.n_features())
        .map(|i| {
            let mut pos: Vec<f64> = task.positives().iter().map(|r| r[i]).collect();
            pos.sort_by(f64::total_cmp);
            let (lo, hi) = task
                .column(i)
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
            let mut m: Vec<f64> = (1..eqmod)
                .map(|k| pos[(k * n_pos).div_ceil(eqmod) - 1])
                .collect();
            m.push(lo);
            m.push(hi);
            normalize(&mut m);
            m
        })
        .collect();
    Ok(ModalitySets {
        features,
        eqmod: Some(eqmod),
    })
}

/// A binary task whose values all lie on modalities, together with their
/// modality codes (positions within `M_i`).
#[derive(Debug, Clone)]
pub struct DiscretizedTask {
    task: BinaryTask,
    modalities: ModalitySets,
    pos_codes: Vec<Vec<u32>>,
    neg_codes: Vec<Vec<u32>>,
}

/// Replaces each value by the smallest modality `>=` it.
pub fn snap(task: &BinaryTask, modalities: &ModalitySets) -> Result<DiscretizedTask> {
    let n = task.n_features();
    if modalities.n_features() != n {
        return Err(Error::Arity {
            expected: n,
            found: modalities.n_features(),
        });
    }
    type Snapped = (Vec<Vec<f64>>, Vec<Vec<u32>>);
    let snap_rows = |rows: &[Vec<f64>]| -> Result<Snapped> {
        let mut values = Vec::with_capacity(rows.len());
        let mut codes = Vec::with_capacity(rows.len());
        for row in rows {
            let (c, v): (Vec<u32>, Vec<f64>) = row
                .iter()
                .enumerate()
                .map(|(i, &x)| modalities.snap_value(i, x))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .unzip();
            values.push(v);
            codes.push(c);
        }
        Ok((values, codes))
    };
    let (pos, pos_codes) = snap_rows(task.positives())?;
    let (neg, neg_codes) = snap_rows(task.negatives())?;
    let snapped = BinaryTask::new(
        task.feature_names().to_vec(),
        pos,
        neg,
        task.positive_label().to_string(),
    )?;
    Ok(DiscretizedTask {
        task: snapped,
        modalities: modalities.clone(),
        pos_codes,
        neg_codes,
    })
}

impl DiscretizedTask {
    pub fn task(&self) -> &BinaryTask {
        &self.task
    }

    pub fn modalities(&self) -> &ModalitySets {
        &self.modalities
    }

    pub fn positives(&self) -> &[Vec<f64>] {
        self.task.positives()
    }

    pub fn negatives(&self) -> &[Vec<f64>] {
        self.task.negatives()
    }

    pub fn n_features(&self) -> usize {
        self.task.n_features()
    }

    pub fn n_pos(&self) -> usize {
        self.task.positives().len()
    }

    pub fn n_neg(&self) -> usize {
        self.task.negatives().len()
    }

    pub(crate) fn pos_codes(&self) -> &[Vec<u32>] {
        &self.pos_codes
    }

    pub(crate) fn neg_codes(&self) -> &[Vec<u32>] {
        &self.neg_codes
    }
}
