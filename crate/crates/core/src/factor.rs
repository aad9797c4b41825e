//! Cycle factors of the odd graph `O(2k+1)` and the middle levels graph
//! `M(2k+1)` built from the columns of the flaw grid.
//!
//! A path is read as the set of positions of its up-steps. Walking one column
//! `x⁰, y⁰, x¹, …, y^(k-1), x^k` (alternating `g` and `h`) and replacing every
//! raised path `yⁱ` by `([2k] \ yⁱ) ∪ {2k+1}` gives a cycle of `2k + 1`
//! pairwise-disjoint neighbours in the odd graph. The columns of all Dyck paths
//! without flaws partition the vertex set. Doubling each odd cycle by
//! alternating sets and complements gives the factor of the middle levels
//! graph.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use crate::error::{Error, PathClass, Result};
use crate::flip::{pi_from_hills, HillMatching};
use crate::path::{LatticePath, LexPaths, Step};

/// Coverage is tracked with one slot per vertex, so only for moderate `k`.
pub const COVERAGE_MAX_K: usize = 12;

/// Sorted, duplicate-free subset of `{1, …, 2k+1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    elems: Vec<u32>,
    /// Bit `e - 1` set for each element, when every element is at most 64.
    mask: Option<u64>,
}

impl VertexSet {
    pub fn new(elems: impl IntoIterator<Item = u32>) -> VertexSet {
        let mut elems: Vec<u32> = elems.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        let mask = elems
            .iter()
            .try_fold(0u64, |m, &e| (1..=64).contains(&e).then(|| m | 1 << (e - 1)));
        VertexSet { elems, mask }
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.elems.binary_search(&e).is_ok()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        match (self.mask, other.mask) {
            (Some(a), Some(b)) => a & b == 0,
            _ => {
                let (mut i, mut j) = (0, 0);
                while i < self.elems.len() && j < other.elems.len() {
                    match self.elems[i].cmp(&other.elems[j]) {
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => return false,
                    }
                }
                true
            }
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        match (self.mask, other.mask) {
            (Some(a), Some(b)) => a & !b == 0,
            _ => self.elems.iter().all(|&e| other.contains(e)),
        }
    }

    pub fn is_strict_subset(&self, other: &VertexSet) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    /// `{1, …, ground} \ self`.
    pub fn complement(&self, ground: u32) -> VertexSet {
        VertexSet::new((1..=ground).filter(|&e| !self.contains(e)))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Positions of the up-steps of `x`.
pub fn path_to_set(x: &LatticePath) -> VertexSet {
    VertexSet::new(x.up_positions().map(|i| i as u32))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Odd,
    MiddleLevels,
}

impl GraphKind {
    /// Number of vertices of the graph for parameter `k`.
    pub fn order(self, k: usize) -> Result<u64> {
        let level = crate::oracle::binomial(2 * k + 1, k)?;
        match self {
            GraphKind::Odd => Ok(level),
            GraphKind::MiddleLevels => level.checked_mul(2).ok_or(Error::Overflow { k }),
        }
    }

    /// Whether two vertices are joined by an edge.
    pub fn adjacent(self, a: &VertexSet, b: &VertexSet) -> bool {
        match self {
            GraphKind::Odd => a.is_disjoint(b),
            GraphKind::MiddleLevels => a.is_strict_subset(b) || b.is_strict_subset(a),
        }
    }

    fn valid_size(self, size: usize, k: usize) -> bool {
        match self {
            GraphKind::Odd => size == k,
            GraphKind::MiddleLevels => size == k || size == k + 1,
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::Odd => "odd",
            GraphKind::MiddleLevels => "middle-levels",
        })
    }
}

/// Cyclic sequence of vertices; the last one is adjacent to the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorCycle {
    pub vertices: Vec<VertexSet>,
}

impl FactorCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Space-separated sets, the line format of the factor commands.
impl fmt::Display for FactorCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleFactor {
    pub kind: GraphKind,
    pub k: usize,
    pub cycles: Vec<FactorCycle>,
}

fn complement_of_raised(steps: &[Step], apex: u32) -> VertexSet {
    VertexSet::new(
        steps
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Step::Down)
            .map(|(i, _)| i as u32 + 1)
            .chain(std::iter::once(apex)),
    )
}

fn set_of(steps: &[Step]) -> VertexSet {
    VertexSet::new(
        steps.iter().enumerate().filter(|(_, &s)| s == Step::Up).map(|(i, _)| i as u32 + 1),
    )
}

/// The cycle of length `2k + 1` in `O(2k+1)` obtained from the column of a
/// non-empty Dyck path `x` without flaws.
pub fn odd_cycle(x: &LatticePath) -> Result<FactorCycle> {
    x.require(PathClass::NonEmptyDyck)?;
    let (perm, _) = pi_from_hills(&HillMatching::new(x)?);
    let apex = x.len() as u32 + 1;
    let mut working = x.steps().to_vec();
    let mut vertices = Vec::with_capacity(x.len() + 1);
    vertices.push(set_of(&working));
    for i in 1..=x.k() {
        let (down_flip, up_flip) = perm.pair(i);
        working[down_flip - 1] = Step::Up;
        vertices.push(complement_of_raised(&working, apex));
        working[up_flip - 1] = Step::Down;
        vertices.push(set_of(&working));
    }
    Ok(FactorCycle { vertices })
}

fn require_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::OutOfRange { what: "k", value: k, expected: "at least 1" });
    }
    Ok(())
}

/// Cycles of the `C(2k+1)`-factor of `O(2k+1)`, one per Dyck path without
/// flaws, in lexicographic order of those paths.
pub fn odd_cycles(k: usize) -> Result<impl Iterator<Item = FactorCycle>> {
    require_k(k)?;
    Ok(LexPaths::dyck(k).map(|x| odd_cycle(&x).expect("lexicographic Dyck paths are valid")))
}

pub fn odd_factor(k: usize) -> Result<CycleFactor> {
    Ok(CycleFactor { kind: GraphKind::Odd, k, cycles: odd_cycles(k)?.collect() })
}

/// Turns a cycle `(x¹, …, x^ℓ)` of odd length `ℓ >= 3` in the odd graph on
/// `{1, …, ground}` into the cycle `(x¹, x̄², x³, …, x^ℓ, x̄¹, x², …, x̄^ℓ)` of
/// length `2ℓ` in the middle levels graph, where `x̄` is the complement.
pub fn middle_levels_double(c: &FactorCycle, ground: u32) -> Result<FactorCycle> {
    let len = c.len();
    if len < 3 || len.is_multiple_of(2) {
        return Err(Error::OutOfRange {
            what: "cycle length",
            value: len,
            expected: "odd and at least 3",
        });
    }
    let vertices = (0..2 * len)
        .map(|j| {
            let v = &c.vertices[j % len];
            if j % 2 == 0 {
                v.clone()
            } else {
                v.complement(ground)
            }
        })
        .collect();
    Ok(FactorCycle { vertices })
}

pub fn middle_cycles(k: usize) -> Result<impl Iterator<Item = FactorCycle>> {
    let ground = 2 * k as u32 + 1;
    Ok(odd_cycles(k)?
        .map(move |c| middle_levels_double(&c, ground).expect("odd cycles have odd length")))
}

pub fn middle_factor(k: usize) -> Result<CycleFactor> {
    Ok(CycleFactor { kind: GraphKind::MiddleLevels, k, cycles: middle_cycles(k)?.collect() })
}

/// First problem found by [`FactorVerifier`]. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    BadVertex { cycle: usize, index: usize, vertex: VertexSet },
    NotAdjacent { cycle: usize, index: usize, from: VertexSet, to: VertexSet },
    RepeatedInCycle { cycle: usize, vertex: VertexSet },
    SharedVertex { vertex: VertexSet, first_cycle: usize, second_cycle: usize },
    WrongLength { cycle: usize, len: usize, expected: usize },
    Uncovered { covered: u64, order: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadVertex { cycle, index, vertex } => {
                write!(f, "cycle {cycle}, vertex {index}: {vertex} is not a vertex of the graph")
            }
            Violation::NotAdjacent { cycle, index, from, to } => {
                write!(f, "cycle {cycle}, edge {index}: {from} and {to} are not adjacent")
            }
            Violation::RepeatedInCycle { cycle, vertex } => {
                write!(f, "cycle {cycle} visits {vertex} more than once")
            }
            Violation::SharedVertex { vertex, first_cycle, second_cycle } => {
                write!(f, "vertex {vertex} lies on cycles {first_cycle} and {second_cycle}")
            }
            Violation::WrongLength { cycle, len, expected } => {
                write!(f, "cycle {cycle} has length {len}, expected {expected}")
            }
            Violation::Uncovered { covered, order } => {
                write!(f, "only {covered} of {order} vertices covered")
            }
        }
    }
}

/// Outcome of verifying a cycle factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub kind: GraphKind,
    pub k: usize,
    pub cycles: usize,
    /// Common cycle length, if any cycle was seen.
    pub cycle_length: Option<usize>,
    /// Total vertex visits over all cycles.
    pub visits: u64,
    pub order: u64,
    /// Whether cross-cycle disjointness and full coverage were checked.
    pub coverage_checked: bool,
    pub violations: usize,
    pub first_violation: Option<Violation>,
}

impl FactorReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for FactorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{status}: {} graph, k = {}, {} cycles", self.kind, self.k, self.cycles)?;
        if let Some(len) = self.cycle_length {
            write!(f, " of length {len}")?;
        }
        if self.coverage_checked {
            write!(f, ", coverage {}/{}", self.visits, self.order)?;
        } else {
            write!(
                f,
                ", {} visits for {} vertices (disjointness and coverage not checked above k = {COVERAGE_MAX_K})",
                self.visits, self.order
            )?;
        }
        if let Some(v) = &self.first_violation {
            write!(f, "; {} violation(s), first: {v}", self.violations)?;
        }
        Ok(())
    }
}

/// Incremental checker, fed one cycle at a time so that factors can be
/// streamed.
pub struct FactorVerifier {
    kind: GraphKind,
    k: usize,
    ground: u32,
    binom: Vec<Vec<u64>>,
    /// Cycle index owning each vertex rank, `u32::MAX` when free.
    owner: Option<Vec<u32>>,
    level_size: u64,
    order: u64,
    cycles: usize,
    cycle_length: Option<usize>,
    visits: u64,
    violations: usize,
    first_violation: Option<Violation>,
}

impl FactorVerifier {
    pub fn new(kind: GraphKind, k: usize) -> Result<FactorVerifier> {
        require_k(k)?;
        let order = kind.order(k)?;
        let level_size = crate::oracle::binomial(2 * k + 1, k)?;
        let n = 2 * k + 1;
        let (binom, owner) = if k <= COVERAGE_MAX_K {
            let mut binom = vec![vec![0u64; n + 2]; n + 1];
            for (i, row) in binom.iter_mut().enumerate() {
                row[0] = 1;
                for j in 1..=i.min(n + 1) {
                    row[j] = crate::oracle::binomial(i, j)?;
                }
            }
            (binom, Some(vec![u32::MAX; order as usize]))
        } else {
            (Vec::new(), None)
        };
        Ok(FactorVerifier {
            kind,
            k,
            ground: n as u32,
            binom,
            owner,
            level_size,
            order,
            cycles: 0,
            cycle_length: None,
            visits: 0,
            violations: 0,
            first_violation: None,
        })
    }

    fn violate(&mut self, v: Violation) {
        self.violations += 1;
        if self.first_violation.is_none() {
            self.first_violation = Some(v);
        }
    }

    /// Colex rank among sets of the same size, offset past the k-sets for
    /// (k+1)-sets.
    fn rank(&self, v: &VertexSet) -> usize {
        let within: u64 =
            v.elems().iter().enumerate().map(|(i, &e)| self.binom[e as usize - 1][i + 1]).sum();
        let offset = if v.len() == self.k { 0 } else { self.level_size };
        (offset + within) as usize
    }

    pub fn push(&mut self, cycle: &FactorCycle) {
        let idx = self.cycles;
        self.cycles += 1;
        let len = cycle.len();
        match self.cycle_length {
            None => self.cycle_length = Some(len),
            Some(expected) if expected != len => {
                self.violate(Violation::WrongLength { cycle: idx, len, expected })
            }
            Some(_) => {}
        }
        let mut seen = HashSet::with_capacity(len);
        for (i, v) in cycle.vertices.iter().enumerate() {
            self.visits += 1;
            let in_ground = v.elems().iter().all(|&e| (1..=self.ground).contains(&e));
            if !in_ground || !self.kind.valid_size(v.len(), self.k) {
                self.violate(Violation::BadVertex { cycle: idx, index: i, vertex: v.clone() });
                continue;
            }
            let next = &cycle.vertices[(i + 1) % len];
            if len > 1 && !self.kind.adjacent(v, next) {
                self.violate(Violation::NotAdjacent {
                    cycle: idx,
                    index: i,
                    from: v.clone(),
                    to: next.clone(),
                });
            }
            if !seen.insert(v) {
                self.violate(Violation::RepeatedInCycle { cycle: idx, vertex: v.clone() });
                continue;
            }
            if self.owner.is_some() {
                let r = self.rank(v);
                let owner = self.owner.as_mut().expect("checked above");
                let prev = owner[r];
                if prev == u32::MAX {
                    owner[r] = idx as u32;
                } else {
                    self.violate(Violation::SharedVertex {
                        vertex: v.clone(),
                        first_cycle: prev as usize,
                        second_cycle: idx,
                    });
                }
            }
        }
    }

    pub fn finish(mut self) -> FactorReport {
        let coverage_checked = self.owner.is_some();
        if let Some(owner) = &self.owner {
            let covered = owner.iter().filter(|&&o| o != u32::MAX).count() as u64;
            if covered != self.order {
                self.violate(Violation::Uncovered { covered, order: self.order });
            }
        }
        FactorReport {
            kind: self.kind,
            k: self.k,
            cycles: self.cycles,
            cycle_length: self.cycle_length,
            visits: self.visits,
            order: self.order,
            coverage_checked,
            violations: self.violations,
            first_violation: self.first_violation,
        }
    }
}

pub fn verify_factor(fac: &CycleFactor) -> Result<FactorReport> {
    let mut v = FactorVerifier::new(fac.kind, fac.k)?;
    for c in &fac.cycles {
        v.push(c);
    }
    Ok(v.finish())
}

const PALETTE: [&str; 10] = [
    "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan", "gold", "gray40",
];

/// Graphviz description: one node per visited vertex, cycle edges colored by
/// cycle index.
pub fn to_dot(fac: &CycleFactor) -> String {
    let name = match fac.kind {
        GraphKind::Odd => "odd",
        GraphKind::MiddleLevels => "middle_levels",
    };
    let id = |v: &VertexSet| format!("\"{v}\"");
    let mut out = String::new();
    let _ = writeln!(out, "graph {name}_{} {{", 2 * fac.k + 1);
    let _ = writeln!(out, "  node [shape=box, fontsize=10];");
    for c in &fac.cycles {
        for v in &c.vertices {
            let _ = writeln!(out, "  {};", id(v));
        }
    }
    for (ci, c) in fac.cycles.iter().enumerate() {
        let color = PALETTE[ci % PALETTE.len()];
        for (i, v) in c.vertices.iter().enumerate() {
            let w = &c.vertices[(i + 1) % c.len()];
            let _ = writeln!(out, "  {} -- {} [color={color}];", id(v), id(w));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    fn set(v: &[u32]) -> VertexSet {
        VertexSet::new(v.iter().copied())
    }

    fn sets(c: &FactorCycle) -> Vec<Vec<u32>> {
        c.vertices.iter().map(|v| v.elems().to_vec()).collect()
    }

    #[test]
    fn path_sets() {
        assert_eq!(path_to_set(&p("UDUD")), set(&[1, 3]));
        assert_eq!(path_to_set(&p("UUUD")), set(&[1, 2, 3]));
        assert!(path_to_set(&p("DDDD")).is_empty());
    }

    #[test]
    fn vertex_set_relations() {
        assert!(set(&[1, 3]).is_disjoint(&set(&[2, 4])));
        assert!(!set(&[1, 3]).is_disjoint(&set(&[3])));
        assert!(set(&[1]).is_strict_subset(&set(&[1, 2])));
        assert!(!set(&[1, 2]).is_strict_subset(&set(&[1, 2])));
        assert_eq!(set(&[1, 3]).complement(4), set(&[2, 4]));
        assert_eq!(set(&[3, 1, 3]).to_string(), "{1,3}");
        // large elements fall back to the merge
        assert!(set(&[70, 90]).is_disjoint(&set(&[71])));
        assert!(set(&[70]).is_strict_subset(&set(&[70, 90])));
    }

    #[test]
    fn odd_cycle_examples() {
        assert_eq!(
            sets(&odd_cycle(&p("UDUD")).unwrap()),
            vec![vec![1, 3], vec![4, 5], vec![2, 3], vec![1, 5], vec![2, 4]]
        );
        assert_eq!(sets(&odd_cycle(&p("UD")).unwrap()), vec![vec![1], vec![3], vec![2]]);
        let c = odd_cycle(&p("UUDD")).unwrap();
        assert_eq!(c.len(), 5);
        for i in 0..5 {
            assert!(c.vertices[i].is_disjoint(&c.vertices[(i + 1) % 5]));
        }
        assert!(odd_cycle(&p("")).is_err());
        assert!(odd_cycle(&p("DU")).is_err());
    }

    #[test]
    fn odd_factor_shapes() {
        for (k, cycles) in [(1, 1), (2, 2), (3, 5)] {
            let f = odd_factor(k).unwrap();
            assert_eq!(f.cycles.len(), cycles);
            assert!(f.cycles.iter().all(|c| c.len() == 2 * k + 1));
        }
        assert!(odd_factor(0).is_err());
    }

    #[test]
    fn doubling() {
        let c = FactorCycle { vertices: vec![set(&[1]), set(&[3]), set(&[2])] };
        let d = middle_levels_double(&c, 3).unwrap();
        assert_eq!(
            sets(&d),
            vec![vec![1], vec![1, 2], vec![2], vec![2, 3], vec![3], vec![1, 3]]
        );
        for i in 0..6 {
            assert!(GraphKind::MiddleLevels.adjacent(&d.vertices[i], &d.vertices[(i + 1) % 6]));
        }
        let even = FactorCycle { vertices: vec![set(&[1]), set(&[2])] };
        assert!(middle_levels_double(&even, 3).is_err());
        let five = odd_factor(2).unwrap().cycles.remove(0);
        assert_eq!(middle_levels_double(&five, 5).unwrap().len(), 10);
    }

    #[test]
    fn middle_factor_shapes() {
        assert_eq!(middle_factor(1).unwrap().cycles[0].len(), 6);
        let f = middle_factor(2).unwrap();
        assert_eq!((f.cycles.len(), f.cycles[0].len()), (2, 10));
        let f = middle_factor(4).unwrap();
        assert_eq!((f.cycles.len(), f.cycles[0].len()), (14, 18));
    }

    #[test]
    fn verifier_passes_constructions() {
        let r = verify_factor(&odd_factor(2).unwrap()).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!((r.cycles, r.cycle_length, r.visits, r.order), (2, Some(5), 10, 10));
        let r = verify_factor(&middle_factor(3).unwrap()).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!((r.cycles, r.cycle_length, r.visits, r.order), (5, Some(14), 70, 70));
    }

    #[test]
    fn verifier_names_shared_vertex() {
        let mut f = odd_factor(2).unwrap();
        f.cycles[1] = f.cycles[0].clone();
        let r = verify_factor(&f).unwrap();
        assert!(!r.passed());
        let first = f.cycles[0].vertices[0].clone();
        assert_eq!(
            r.first_violation,
            Some(Violation::SharedVertex { vertex: first.clone(), first_cycle: 0, second_cycle: 1 })
        );
        assert!(r.to_string().contains(&format!("{first} lies on cycles 0 and 1")), "{r}");

        let mut v = FactorVerifier::new(GraphKind::Odd, 2).unwrap();
        v.push(&odd_factor(2).unwrap().cycles[0]);
        v.push(&FactorCycle { vertices: vec![set(&[2, 4])] });
        assert_eq!(
            v.finish().first_violation,
            Some(Violation::WrongLength { cycle: 1, len: 1, expected: 5 })
        );
    }

    #[test]
    fn verifier_detects_each_kind() {
        let base = odd_factor(2).unwrap();

        let mut f = base.clone();
        f.cycles[1].vertices.swap(0, 1);
        let r = verify_factor(&f).unwrap();
        assert!(matches!(r.first_violation, Some(Violation::NotAdjacent { cycle: 1, .. })));

        let mut f = base.clone();
        f.cycles.pop();
        let r = verify_factor(&f).unwrap();
        assert_eq!(r.first_violation, Some(Violation::Uncovered { covered: 5, order: 10 }));

        let mut f = base.clone();
        f.cycles[0].vertices[0] = set(&[1, 9]);
        let r = verify_factor(&f).unwrap();
        assert!(matches!(r.first_violation, Some(Violation::BadVertex { cycle: 0, index: 0, .. })));

        let mut f = base;
        let dup = f.cycles[0].vertices[0].clone();
        f.cycles[0].vertices[2] = dup;
        let r = verify_factor(&f).unwrap();
        assert!(r.violations >= 1);
    }

    #[test]
    fn dot_output() {
        let dot = to_dot(&odd_factor(1).unwrap());
        assert!(dot.starts_with("graph odd_3 {"));
        assert!(dot.contains("\"{1}\" -- \"{3}\" [color=red];"));
        assert!(dot.trim_end().ends_with('}'));
    }
}
