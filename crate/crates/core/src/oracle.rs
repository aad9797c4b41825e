//! Brute-force ground truth: exhaustive enumeration, exact counting and
//! literal constructions that the fast paths are checked against.

use crate::bijection::{apply_f, apply_g, apply_h};
use crate::error::{Error, PathClass, Result};
use crate::factor::{path_to_set, FactorCycle, VertexSet};
use crate::path::{LatticePath, LexPaths, Step};

/// Largest `k` enumerated exhaustively unless raised explicitly
/// (`binomial(20, 10) = 184756` paths).
pub const DEFAULT_ENUMERATION_CAP: usize = 10;

/// Exact `binomial(n, r)`; errors instead of wrapping when it exceeds `u64`.
pub fn binomial(n: usize, r: usize) -> Result<u64> {
    if r > n {
        return Ok(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        // acc * (n - i) / (i + 1) is exact at every step
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::Overflow { k: n });
        }
    }
    Ok(acc as u64)
}

/// Catalan number `binomial(2k, k) / (k + 1)`.
pub fn catalan(k: usize) -> Result<u64> {
    // C(i+1) = C(i) * 2(2i+1) / (i+2), exact at every step
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * (2 * (2 * i as u128 + 1)) / (i as u128 + 2);
        if c > u64::MAX as u128 {
            return Err(Error::Overflow { k });
        }
    }
    Ok(c as u64)
}

pub fn check_cap(k: usize, cap: usize) -> Result<()> {
    if k > cap {
        Err(Error::CapExceeded { k, cap })
    } else {
        Ok(())
    }
}

/// All of `L(2k, k)` in lexicographic order, subject to the default cap.
pub fn enumerate_lattice_paths(k: usize) -> Result<Vec<LatticePath>> {
    enumerate_lattice_paths_capped(k, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_lattice_paths_capped(k: usize, cap: usize) -> Result<Vec<LatticePath>> {
    check_cap(k, cap)?;
    Ok(LexPaths::balanced(k).collect())
}

/// All of `L(2k, k+1)`.
pub fn enumerate_raised_paths_capped(k: usize, cap: usize) -> Result<Vec<LatticePath>> {
    check_cap(k, cap)?;
    Ok(LexPaths::raised(k).collect())
}

/// Dyck paths without flaws, lexicographic.
pub fn enumerate_dyck_paths_capped(k: usize, cap: usize) -> Result<Vec<LatticePath>> {
    check_cap(k, cap)?;
    Ok(LexPaths::dyck(k).collect())
}

/// `L(2k, k)` split by number of flaws; `classes[e]` holds the paths with
/// `e` flaws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlawPartition {
    pub k: usize,
    pub classes: Vec<Vec<LatticePath>>,
}

impl FlawPartition {
    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChungFellerCheck {
    pub partition: FlawPartition,
    pub catalan: u64,
    pub passed: bool,
}

pub fn partition_by_flaws(k: usize, cap: usize) -> Result<FlawPartition> {
    let mut classes = vec![Vec::new(); k + 1];
    for x in enumerate_lattice_paths_capped(k, cap)? {
        let e = x.flaws()?;
        classes[e].push(x);
    }
    Ok(FlawPartition { k, classes })
}

/// Partitions `L(2k, k)` by flaws and checks every class has `C_k` members.
pub fn verify_chung_feller(k: usize) -> Result<ChungFellerCheck> {
    verify_chung_feller_capped(k, DEFAULT_ENUMERATION_CAP)
}

pub fn verify_chung_feller_capped(k: usize, cap: usize) -> Result<ChungFellerCheck> {
    let partition = partition_by_flaws(k, cap)?;
    let catalan = catalan(k)?;
    let passed = partition.classes.len() == k + 1
        && partition.classes.iter().all(|c| c.len() as u64 == catalan)
        && partition.total() as u64 == binomial(2 * k, k)?;
    Ok(ChungFellerCheck { partition, catalan, passed })
}

pub fn hamming(x: &LatticePath, y: &LatticePath) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    Ok(x.steps().iter().zip(y.steps()).filter(|(a, b)| a != b).count())
}

/// Positions where `x` and `y` differ, ascending.
pub fn differing_positions(x: &LatticePath, y: &LatticePath) -> Vec<usize> {
    (1..=x.len().min(y.len())).filter(|&i| x.step(i) != y.step(i)).collect()
}

/// `f^n(x)` by literal application.
pub fn f_power(x: &LatticePath, n: usize) -> Result<LatticePath> {
    let mut cur = x.clone();
    for _ in 0..n {
        cur = apply_f(&cur)?.path;
    }
    Ok(cur)
}

/// The odd-graph cycle of `x`, built by applying `g` and `h` literally and
/// converting every intermediate path to a set.
pub fn odd_cycle_by_maps(x: &LatticePath) -> Result<FactorCycle> {
    x.require(PathClass::NonEmptyDyck)?;
    let apex = x.len() as u32 + 1;
    let mut vertices = vec![path_to_set(x)];
    let mut cur = x.clone();
    for _ in 0..x.k() {
        let raised = apply_g(&cur)?.path;
        vertices.push(VertexSet::new(
            raised
                .steps()
                .iter()
                .enumerate()
                .filter(|(_, &s)| s == Step::Down)
                .map(|(i, _)| i as u32 + 1)
                .chain([apex]),
        ));
        cur = apply_h(&raised)?.path;
        vertices.push(path_to_set(&cur));
    }
    Ok(FactorCycle { vertices })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    /// Pascal's triangle, independent of the multiplicative formulas.
    fn pascal(n: usize) -> Vec<Vec<u128>> {
        let mut rows = vec![vec![1u128]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1u128; i + 1];
            for j in 1..i {
                row[j] = prev[j - 1] + prev[j];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomials_match_pascal() {
        let t = pascal(66);
        for n in 0..=66 {
            for r in 0..=n {
                assert_eq!(binomial(n, r).unwrap() as u128, t[n][r], "({n} {r})");
            }
        }
        assert_eq!(binomial(3, 5), Ok(0));
        assert!(binomial(68, 34).is_err());
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), Ok(1));
        assert_eq!(catalan(1), Ok(1));
        assert_eq!(catalan(3), Ok(5));
        assert_eq!(catalan(8), Ok(1430));
        let t = pascal(72);
        for k in 0..=36 {
            assert_eq!(catalan(k).unwrap() as u128, t[2 * k][k] / (k as u128 + 1), "k = {k}");
        }
        assert_eq!(catalan(37), Err(Error::Overflow { k: 37 }));
    }

    #[test]
    fn enumeration() {
        let one: Vec<String> = enumerate_lattice_paths(1).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(one, ["UD", "DU"]);
        assert_eq!(enumerate_lattice_paths(2).unwrap().len(), 6);
        assert_eq!(enumerate_lattice_paths(3).unwrap().len(), 20);
        assert_eq!(enumerate_lattice_paths(11), Err(Error::CapExceeded { k: 11, cap: 10 }));
        assert_eq!(enumerate_lattice_paths_capped(11, 11).unwrap().len(), 705432);
    }

    #[test]
    fn enumeration_counts_match_binomial() {
        for k in 0..=10 {
            let all = enumerate_lattice_paths(k).unwrap();
            assert_eq!(all.len() as u64, binomial(2 * k, k).unwrap());
            let distinct: std::collections::HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|x| x.is_balanced() && x.len() == 2 * k));
        }
    }

    #[test]
    fn chung_feller_small() {
        let c = verify_chung_feller(3).unwrap();
        assert!(c.passed);
        assert_eq!(c.partition.class_sizes(), vec![5, 5, 5, 5]);
        let c = verify_chung_feller(1).unwrap();
        assert_eq!(c.partition.classes, vec![vec![p("UD")], vec![p("DU")]]);
        let c = verify_chung_feller(8).unwrap();
        assert_eq!(c.partition.class_sizes(), vec![1430; 9]);
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming(&p("UUUDDD"), &p("UDUDDU")), Ok(2));
        assert_eq!(hamming(&p("UDUD"), &p("UDUD")), Ok(0));
        assert_eq!(hamming(&p("UDUD"), &p("DUUD")), Ok(2));
        assert_eq!(hamming(&p("DUUUDD"), &p("UDDDUU")), Ok(6));
        assert_eq!(hamming(&p("UD"), &p("UDUD")), Err(Error::LengthMismatch { left: 2, right: 4 }));
        assert_eq!(differing_positions(&p("UUUDDD"), &p("UDUDDU")), vec![2, 6]);
    }
}
