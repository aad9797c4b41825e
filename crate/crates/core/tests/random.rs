use flawshift::verify::{
    column_violation, flip_order_violation, min_change_violation, origin_violation,
};
use flawshift::{recover_origin, LatticePath, Step};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

const SAMPLES: usize = 1000;

fn random_balanced(k: usize, rng: &mut StdRng) -> LatticePath {
    let mut steps: Vec<Step> = (0..2 * k).map(|i| if i < k { Step::Up } else { Step::Down }).collect();
    steps.shuffle(rng);
    LatticePath::from_steps(steps)
}

fn check(k: usize, seed: u64) {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..SAMPLES {
        let x = random_balanced(k, &mut rng);
        assert_eq!(origin_violation(&x).unwrap(), None);
        let x0 = recover_origin(&x).unwrap().origin;
        assert_eq!(flip_order_violation(&x0).unwrap(), None);
        if x.flaws().unwrap() < k {
            assert_eq!(min_change_violation(&x).unwrap(), None);
        }
    }
}

#[test]
fn random_fifty() {
    check(50, 50);
}

#[test]
fn random_two_hundred() {
    check(200, 200);
}

#[test]
fn random_columns_fifty() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let x = random_balanced(50, &mut rng);
        assert_eq!(column_violation(&x).unwrap(), None);
    }
}
