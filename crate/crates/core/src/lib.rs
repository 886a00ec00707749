//! Mining of relevant interval rules from labeled numerical data.
//!
//! The pipeline turns a labeled dataset into a two-class task, reduces each
//! feature to a finite set of modalities, enumerates the interval patterns
//! closed over the positive examples, keeps those with enough positive
//! support and few enough false positives, and finally drops every pattern
//! whose false positives are matched by a pattern with strictly larger
//! intervals.
//!
//! ```
//! use interval_rules::{mine_rules, discretize, BinaryTask, ModalityMode};
//!
//! let task = BinaryTask::from_rows(
//!     vec![vec![1.0, 1.0], vec![2.0, 3.0], vec![3.0, 2.0]],
//!     vec![vec![2.0, 2.0], vec![4.0, 1.0]],
//! )
//! .unwrap();
//! let task = discretize(&task, ModalityMode::AllValues, 10).unwrap();
//! let outcome = mine_rules(&task, 0, 3);
//! assert_eq!(outcome.counts(), (7, 7, 4));
//! ```

pub mod dataset;
pub mod discretizer;
pub mod error;
pub mod miner;
pub mod oracle;
pub mod pattern;
pub mod pipeline;
pub mod relevance;
pub mod synth;

pub use dataset::{load_csv, read_csv, BinaryTask, ClassColumn, Dataset};
pub use discretizer::{all_values_modalities, equiprobable_modalities, snap, DiscretizedTask, ModalitySets};
pub use error::{Error, Result};
pub use miner::{accuracy_filter, min_int_change, min_int_change_parallel, MiningParams, Threshold};
pub use pattern::{
    close_neg, close_pos, covers, extent, hull, leq, more_relevant, strictly_leq, supports, Interval,
    IntervalPattern, NegClosure, PatternRecord,
};
pub use pipeline::{discretize, mine_rules, MiningOutcome, ModalityMode};
pub use relevance::{relevance_filter, RelevantSet, Removal};
