//! End-to-end mining: discretize, enumerate, filter by false positives,
//! prune dominated rules.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::dataset::BinaryTask;
use crate::discretizer::{all_values_modalities, equiprobable_modalities, snap, DiscretizedTask};
use crate::error::{Error, Result};
use crate::miner::{accuracy_filter, min_int_change_parallel};
use crate::pattern::PatternRecord;
use crate::relevance::{relevance_filter, RelevantSet};

/// How modality sets are derived from the data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModalityMode {
    #[default]
    Equiprobable,
    AllValues,
}

impl FromStr for ModalityMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "equiprobable" => Ok(ModalityMode::Equiprobable),
            "all-values" => Ok(ModalityMode::AllValues),
            other => Err(Error::UnknownModalityMode(other.to_string())),
        }
    }
}

impl fmt::Display for ModalityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModalityMode::Equiprobable => "equiprobable",
            ModalityMode::AllValues => "all-values",
        })
    }
}

pub fn discretize(task: &BinaryTask, mode: ModalityMode, eqmod: usize) -> Result<DiscretizedTask> {
    let modalities = match mode {
        ModalityMode::Equiprobable => equiprobable_modalities(task, eqmod)?,
        ModalityMode::AllValues => all_values_modalities(task),
    };
    snap(task, &modalities)
}

#[derive(Debug, Clone)]
pub struct MiningOutcome {
    /// Positive-closed patterns with `supp⁺ > minsup`.
    pub closed: Vec<PatternRecord>,
    /// Those with `supp⁻ < maxfp`.
    pub rules: Vec<PatternRecord>,
    pub relevant: RelevantSet,
    /// Wall time of enumeration and filtering.
    pub elapsed: Duration,
}

impl MiningOutcome {
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.closed.len(), self.rules.len(), self.relevant.len())
    }
}

pub fn mine_rules(task: &DiscretizedTask, minsup: usize, maxfp: usize) -> MiningOutcome {
    let start = Instant::now();
    let closed = min_int_change_parallel(task, minsup);
    let rules = accuracy_filter(&closed, maxfp);
    let relevant = relevance_filter(&rules);
    MiningOutcome {
        closed,
        rules,
        relevant,
        elapsed: start.elapsed(),
    }
}
