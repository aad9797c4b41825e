use flawshift::verify::{
    column_violation, flip_order_violation, min_change_violation, origin_violation,
    subpath_violation,
};
use flawshift::{
    apply_f, apply_f_inverse, recover_origin, sawtooth_enumerate_with, Encoding, LatticePath,
    LexPaths, Step,
};
use proptest::prelude::*;

fn balanced(max_k: usize) -> impl Strategy<Value = LatticePath> {
    (0..=max_k).prop_flat_map(|k| {
        proptest::sample::subsequence((0..2 * k).collect::<Vec<_>>(), k).prop_map(move |ups| {
            let mut steps = vec![Step::Down; 2 * k];
            for i in ups {
                steps[i] = Step::Up;
            }
            LatticePath::from_steps(steps)
        })
    })
}

proptest! {
    #[test]
    fn text_round_trip(x in balanced(40)) {
        prop_assert_eq!(x.format(Encoding::Letters).parse::<LatticePath>().unwrap(), x.clone());
        prop_assert_eq!(x.format(Encoding::Bits).parse::<LatticePath>().unwrap(), x);
    }

    #[test]
    fn mirror_swaps_flaws(x in balanced(40)) {
        prop_assert_eq!(x.mirror().mirror(), x.clone());
        prop_assert_eq!(x.rev_complement().rev_complement(), x.clone());
        prop_assert_eq!(x.mirror().flaws().unwrap(), x.k() - x.flaws().unwrap());
    }

    #[test]
    fn step_counts_per_line(x in balanced(40)) {
        let lo = x.min_height() - 1;
        let ups: usize = (lo..=x.k() as i64).map(|c| x.count_up_at(c)).sum();
        let downs: usize = (lo..=x.k() as i64).map(|c| x.count_down_at(c)).sum();
        prop_assert_eq!((ups, downs), (x.k(), x.k()));
    }

    #[test]
    fn f_round_trip(x in balanced(40)) {
        let e = x.flaws().unwrap();
        if e < x.k() {
            prop_assert_eq!(min_change_violation(&x).unwrap(), None);
        }
        if e > 0 {
            let back = apply_f_inverse(&x).unwrap().path;
            prop_assert_eq!(apply_f(&back).unwrap().path, x);
        }
    }

    #[test]
    fn origin_and_column(x in balanced(40)) {
        prop_assert_eq!(origin_violation(&x).unwrap(), None);
        prop_assert_eq!(column_violation(&x).unwrap(), None);
    }

    #[test]
    fn flip_order(x in balanced(30)) {
        let x0 = recover_origin(&x).unwrap().origin;
        prop_assert_eq!(flip_order_violation(&x0).unwrap(), None);
    }

    #[test]
    fn subpath_blocks(x in balanced(12)) {
        let x0 = recover_origin(&x).unwrap().origin;
        prop_assert_eq!(subpath_violation(&x0).unwrap(), None);
    }

    #[test]
    fn decomposition_round_trip(x in balanced(30)) {
        let x0 = recover_origin(&x).unwrap().origin;
        if x0.k() > 0 {
            let d = x0.canonical_decomposition().unwrap();
            prop_assert_eq!(d.reassemble(), x0);
            prop_assert!(d.inner.is_dyck() && d.tail.is_dyck());
        }
    }
}

#[test]
fn sawtooth_with_reversed_rows() {
    for k in 0..=6 {
        let mut rows: Vec<LatticePath> = LexPaths::dyck(k).collect();
        rows.reverse();
        let all: std::collections::HashSet<_> =
            sawtooth_enumerate_with(k, rows).map(|s| s.unwrap().path).collect();
        assert_eq!(all.len(), LexPaths::balanced(k).count());
    }
}
