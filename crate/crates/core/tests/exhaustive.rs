use std::collections::HashSet;

use flawshift::oracle::{partition_by_flaws, DEFAULT_ENUMERATION_CAP};
use flawshift::verify::property;
use flawshift::{
    apply_f, catalan, enumerate_column, enumerate_lattice_paths, pi_direct, pi_recursive,
    run_suite, sawtooth_enumerate, LatticePath,
};

fn p(s: &str) -> LatticePath {
    s.parse().unwrap()
}

#[test]
fn suite_passes_up_to_eight() {
    for k in 0..=8 {
        for row in run_suite(k, DEFAULT_ENUMERATION_CAP, 1).unwrap() {
            assert!(row.passed(), "{row}");
        }
    }
}

#[test]
fn subpath_blocks_up_to_six() {
    let row = property("subpath-pi").unwrap();
    for k in 0..=6 {
        let out = row.run(k, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(out.passed(), "{out}");
    }
}

#[test]
fn flip_orders_of_length_six() {
    let cases = [
        ("UUUDDD", "(6,2,4,3,5,1)"),
        ("UUDUDD", "(6,4,5,2,3,1)"),
        ("UUDDUD", "(4,2,3,1,6,5)"),
        ("UDUDUD", "(2,1,4,3,6,5)"),
        ("UDUUDD", "(2,1,6,4,5,3)"),
    ];
    for (x, pi) in cases {
        assert_eq!(pi_direct(&p(x)).unwrap().to_string(), pi, "{x}");
        assert_eq!(pi_recursive(&p(x)).unwrap().to_string(), pi, "{x}");
    }
}

#[test]
fn f_maps_classes_onto_next() {
    for k in 1..=8 {
        let part = partition_by_flaws(k, DEFAULT_ENUMERATION_CAP).unwrap();
        for e in 0..k {
            let image: HashSet<_> =
                part.classes[e].iter().map(|x| apply_f(x).unwrap().path).collect();
            let next: HashSet<_> = part.classes[e + 1].iter().cloned().collect();
            assert_eq!(image, next, "k = {k}, e = {e}");
        }
    }
}

#[test]
fn columns_partition_all_paths() {
    for k in 1..=7 {
        let mut seen = HashSet::new();
        let mut columns = 0;
        for x0 in flawshift::LexPaths::dyck(k) {
            let col = enumerate_column(&x0).unwrap();
            assert_eq!(col.len(), k + 1);
            assert_eq!(col[k], x0.mirror());
            seen.extend(col);
            columns += 1;
        }
        assert_eq!(columns as u64, catalan(k).unwrap());
        assert_eq!(seen.len(), enumerate_lattice_paths(k).unwrap().len());
    }
}

#[test]
fn sawtooth_covers_ten() {
    let mut seen = HashSet::new();
    for step in sawtooth_enumerate(10) {
        assert!(seen.insert(step.unwrap().path));
    }
    assert_eq!(seen.len(), 184756);
}
