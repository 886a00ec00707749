//! Seeded random small tasks for cross-checking the miner against the
//! oracle.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dataset::BinaryTask;
use crate::discretizer::{all_values_modalities, equiprobable_modalities, snap, DiscretizedTask};

#[derive(Debug, Clone, Copy)]
pub struct RandomTaskShape {
    pub max_features: usize,
    pub max_modalities: usize,
    pub max_pos: usize,
    pub max_neg: usize,
}

impl Default for RandomTaskShape {
    fn default() -> Self {
        RandomTaskShape {
            max_features: 3,
            max_modalities: 6,
            max_pos: 15,
            max_neg: 15,
        }
    }
}

/// A random task plus thresholds drawn for it.
#[derive(Debug, Clone)]
pub struct RandomCase {
    pub seed: u64,
    pub task: DiscretizedTask,
    pub minsup: usize,
    pub maxfp: usize,
}

/// Values are drawn from a per-feature grid of at most `max_modalities`
/// points. Half of the cases use equal-frequency modalities, so snapping
/// is exercised too.
pub fn random_case(seed: u64, shape: RandomTaskShape) -> RandomCase {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=shape.max_features);
    let grid: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=shape.max_modalities)).collect();
    let n_pos = rng.gen_range(1..=shape.max_pos);
    let n_neg = rng.gen_range(0..=shape.max_neg);
    let mut draw = |count: usize| -> Vec<Vec<f64>> {
        (0..count)
            .map(|_| grid.iter().map(|&k| rng.gen_range(0..k) as f64 * 0.5).collect())
            .collect()
    };
    let pos = draw(n_pos);
    let neg = draw(n_neg);
    let task = BinaryTask::from_rows(pos, neg).expect("generated rows are well formed");
    let modalities = if rng.gen_bool(0.5) {
        all_values_modalities(&task)
    } else {
        let eqmod = rng.gen_range(1..=shape.max_modalities.saturating_sub(1).max(1));
        equiprobable_modalities(&task, eqmod).expect("eqmod >= 1")
    };
    let task = snap(&task, &modalities).expect("modalities span the data");
    let minsup = rng.gen_range(0..=n_pos.min(4));
    let maxfp = rng.gen_range(0..=n_neg + 1);
    RandomCase {
        seed,
        task,
        minsup,
        maxfp,
    }
}
