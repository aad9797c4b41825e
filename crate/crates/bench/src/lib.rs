//! Input generators shared by the benchmarks.

use flawshift::{recover_origin, LatticePath, Step};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

/// Uniformly random balanced path with `2k` steps.
pub fn random_balanced(k: usize, seed: u64) -> LatticePath {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut steps: Vec<Step> = (0..2 * k).map(|i| if i < k { Step::Up } else { Step::Down }).collect();
    steps.shuffle(&mut rng);
    LatticePath::from_steps(steps)
}

/// Random Dyck path without flaws with `2k` steps.
pub fn random_dyck(k: usize, seed: u64) -> LatticePath {
    recover_origin(&random_balanced(k, seed)).expect("balanced").origin
}
