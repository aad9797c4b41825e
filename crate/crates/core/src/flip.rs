//! Flip order of a column.
//!
//! Starting from a Dyck path `x` without flaws, applying `f` k times flips
//! every step exactly once. `π(x)` records the flipped positions, two per
//! application (the down-step changed by `g` first, then the up-step changed
//! by `h`).
//!
//! [`pi_direct`] obtains `π(x)` by applying `g` and `h` literally and serves
//! as the reference. [`pi_recursive`] computes the same sequence in linear
//! time from the hill structure of `x`: each hill `U u D` is emitted as its
//! closing step, then the inside in reverse reading direction, then its
//! opening step, followed by the siblings to its right in the current
//! direction.

use std::fmt;

use crate::bijection::{apply_g, apply_h};
use crate::error::{Error, PathClass, Result};
use crate::path::{LatticePath, Step};

/// A permutation of `1..=2k` listing the positions flipped by repeated `f`.
/// Entries `2i - 1` and `2i` (1-based) are the down- and up-flip of the
/// `i`-th application.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FlipPermutation(Vec<usize>);

impl FlipPermutation {
    /// Validates that `entries` is a permutation of `1..=n` with `n` even.
    pub fn new(entries: Vec<usize>) -> Result<FlipPermutation> {
        if !entries.len().is_multiple_of(2) {
            return Err(Error::OutOfRange {
                what: "permutation length",
                value: entries.len(),
                expected: "even",
            });
        }
        let mut seen = vec![false; entries.len()];
        for &e in &entries {
            if e == 0 || e > entries.len() || std::mem::replace(&mut seen[e - 1], true) {
                return Err(Error::OutOfRange {
                    what: "permutation entry",
                    value: e,
                    expected: "each of 1..=n exactly once",
                });
            }
        }
        Ok(FlipPermutation(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(down_flip, up_flip)` of the `i`-th application of `f`, 1-based.
    #[inline]
    pub fn pair(&self, i: usize) -> (usize, usize) {
        (self.0[2 * i - 2], self.0[2 * i - 1])
    }

    pub fn is_alternating(&self) -> bool {
        is_alternating(&self.0)
    }
}

impl fmt::Display for FlipPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for FlipPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FlipPermutation{self}")
    }
}

/// Descent into every even (1-based) index, ascent into every odd index
/// from 3 on.
pub fn is_alternating(seq: &[usize]) -> bool {
    (2..=seq.len()).all(|i| {
        let (prev, cur) = (seq[i - 2], seq[i - 1]);
        if i % 2 == 0 {
            prev > cur
        } else {
            prev < cur
        }
    })
}

/// Partner of every step of a Dyck path: an up-step and the down-step that
/// first returns to its starting level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HillMatching {
    partner: Vec<u32>,
}

/// Positions are stored as `u32`, so paths may have at most this many steps.
pub const MAX_STEPS: usize = u32::MAX as usize;

pub(crate) fn check_steps(len: usize) -> Result<()> {
    if len > MAX_STEPS {
        return Err(Error::OutOfRange { what: "path length", value: len, expected: "at most 2^32 - 1" });
    }
    Ok(())
}

impl HillMatching {
    pub fn new(x: &LatticePath) -> Result<HillMatching> {
        x.require(PathClass::Dyck)?;
        check_steps(x.len())?;
        Ok(HillMatching::from_steps(x.steps()))
    }

    /// `steps` must form a Dyck path of at most [`MAX_STEPS`] steps.
    pub(crate) fn from_steps(steps: &[Step]) -> HillMatching {
        // partner[0] is unused so positions index directly
        let mut partner = vec![0u32; steps.len() + 1];
        let mut open: Vec<u32> = Vec::new();
        for (i, &s) in steps.iter().enumerate() {
            let pos = i as u32 + 1;
            match s {
                Step::Up => open.push(pos),
                Step::Down => {
                    let j = open.pop().expect("Dyck path");
                    partner[pos as usize] = j;
                    partner[j as usize] = pos;
                }
            }
        }
        HillMatching { partner }
    }

    #[inline]
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i] as usize
    }

    pub fn len(&self) -> usize {
        self.partner.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Reference computation of `π(x)` by literal application of `g` and `h`.
/// Quadratic in `k`.
pub fn pi_direct(x: &LatticePath) -> Result<FlipPermutation> {
    x.require(PathClass::Dyck)?;
    let mut entries = Vec::with_capacity(x.len());
    let mut cur = x.clone();
    for _ in 0..x.k() {
        let raised = apply_g(&cur)?;
        let lowered = apply_h(&raised.path)?;
        entries.push(raised.position);
        entries.push(lowered.position);
        cur = lowered.path;
    }
    Ok(FlipPermutation(entries))
}

/// Work done by one run of [`pi_recursive_counted`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RecursionStats {
    /// Non-empty subpaths decomposed.
    pub frames: usize,
    /// Stack pushes, including emitted positions.
    pub pushes: usize,
    pub max_stack: usize,
}

impl RecursionStats {
    pub fn total_work(&self) -> usize {
        self.frames + self.pushes
    }
}

/// Linear-time `π(x)`; agrees with [`pi_direct`].
pub fn pi_recursive(x: &LatticePath) -> Result<FlipPermutation> {
    pi_recursive_counted(x).map(|(p, _)| p)
}

/// Pending work over original positions `lo..=hi`, read forward, or
/// reversed and complemented; either way a Dyck path. `EMIT` outputs `lo`.
#[derive(Clone, Copy)]
struct Task {
    lo: u32,
    hi: u32,
    kind: u8,
}

const EMIT: u8 = 0;
const FORWARD: u8 = 1;
const REVERSED: u8 = 2;

pub fn pi_recursive_counted(x: &LatticePath) -> Result<(FlipPermutation, RecursionStats)> {
    let hills = HillMatching::new(x)?;
    Ok(pi_from_hills(&hills))
}

pub(crate) fn pi_from_hills(hills: &HillMatching) -> (FlipPermutation, RecursionStats) {
    let (order, stats) = flip_order(hills);
    (FlipPermutation(order.into_iter().map(|v| v as usize).collect()), stats)
}

/// `π` as `u32` positions.
pub(crate) fn flip_order(hills: &HillMatching) -> (Vec<u32>, RecursionStats) {
    let n = hills.len() as u32;
    let partner = &hills.partner;
    let mut order = Vec::with_capacity(n as usize);
    let mut stats = RecursionStats::default();
    let mut stack = Vec::new();
    if n > 0 {
        stack.push(Task { lo: 1, hi: n, kind: FORWARD });
    }
    while let Some(Task { lo, hi, kind }) = stack.pop() {
        if kind == EMIT {
            order.push(lo);
            continue;
        }
        stats.frames += 1;
        // `first` opens the hill in reading direction and `split` closes
        // it; inside and rest are in original coordinates
        let reversed = kind == REVERSED;
        let (first, split, inner, rest) = if reversed {
            let split = partner[hi as usize];
            (hi, split, (split + 1, hi - 1), (lo, split - 1))
        } else {
            let split = partner[lo as usize];
            (lo, split, (lo + 1, split - 1), (split + 1, hi))
        };
        order.push(split);
        let before = stack.len();
        if rest.0 <= rest.1 {
            stack.push(Task { lo: rest.0, hi: rest.1, kind });
        }
        stack.push(Task { lo: first, hi: first, kind: EMIT });
        if inner.0 <= inner.1 {
            let flipped = if reversed { FORWARD } else { REVERSED };
            stack.push(Task { lo: inner.0, hi: inner.1, kind: flipped });
        }
        stats.pushes += stack.len() - before + 1;
        stats.max_stack = stats.max_stack.max(stack.len());
    }
    (order, stats)
}

/// The zero-flaw path `origin` with `f^e(origin) = x`, together with the
/// positions where the two differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OriginWitness {
    /// Up-steps of `x` ending on or below `y = 0`.
    pub up_set: Vec<usize>,
    /// Down-steps of `x` starting on or below `y = -1`, plus the first `d_0(x)`
    /// down-steps touching `y = 0`.
    pub down_set: Vec<usize>,
    pub origin: LatticePath,
}

impl OriginWitness {
    pub fn flaws(&self) -> usize {
        self.up_set.len()
    }
}

pub fn recover_origin(x: &LatticePath) -> Result<OriginWitness> {
    x.require(PathClass::Balanced)?;
    let mut up_set = Vec::new();
    let mut deep_downs = Vec::new();
    let mut touching_downs = Vec::new();
    let mut d0 = 0;
    for i in 1..=x.len() {
        let (before, after) = (x.height(i - 1), x.height(i));
        match x.step(i) {
            Step::Up if after <= 0 => up_set.push(i),
            Step::Up => {}
            Step::Down => {
                if before <= -1 {
                    deep_downs.push(i);
                }
                if before == 0 {
                    d0 += 1;
                }
                if before == 0 || after == 0 {
                    touching_downs.push(i);
                }
            }
        }
    }
    touching_downs.truncate(d0);
    // disjoint: a down-step starting at or below -1 never touches 0
    let mut down_set = deep_downs;
    down_set.extend(touching_downs);
    down_set.sort_unstable();
    let mut steps = x.steps().to_vec();
    for &i in up_set.iter().chain(&down_set) {
        steps[i - 1] = steps[i - 1].flip();
    }
    Ok(OriginWitness { up_set, down_set, origin: LatticePath::from_steps(steps) })
}

/// Steps of the origin of a balanced path and its flaw count, in one pass
/// without the witness sets.
pub(crate) fn origin_steps(x: &LatticePath) -> (Vec<Step>, usize) {
    let steps = x.steps();
    let mut height = 0i64;
    let mut d0_left = 0usize;
    for &s in steps {
        if s == Step::Down && height == 0 {
            d0_left += 1;
        }
        height += s.delta();
    }
    let mut flaws = 0;
    height = 0;
    let origin = steps
        .iter()
        .map(|&s| {
            let before = height;
            height += s.delta();
            let flip = match s {
                Step::Up => height <= 0,
                Step::Down => {
                    if before <= 0 {
                        flaws += 1;
                    }
                    if (before == 0 || height == 0) && d0_left > 0 {
                        d0_left -= 1;
                        true
                    } else {
                        before <= -1
                    }
                }
            };
            if flip {
                s.flip()
            } else {
                s
            }
        })
        .collect();
    (origin, flaws)
}

/// A Dyck subpath occupying positions `start..=end` that starts and ends on
/// `y = level` and never goes below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckSubpath {
    pub start: usize,
    pub end: usize,
    pub level: i64,
}

impl DyckSubpath {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Every non-empty Dyck subpath of a Dyck path, i.e. every run of
/// consecutive sibling hills, ordered by `(start, end)`.
pub fn dyck_subpaths(x: &LatticePath) -> Result<Vec<DyckSubpath>> {
    let hills = HillMatching::new(x)?;
    let mut out = Vec::new();
    for start in 1..=x.len() {
        if x.step(start) != Step::Up {
            continue;
        }
        let level = x.height(start - 1);
        let mut end = hills.partner(start);
        loop {
            out.push(DyckSubpath { start, end, level });
            if end < x.len() && x.step(end + 1) == Step::Up {
                end = hills.partner(end + 1);
            } else {
                break;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    fn perm(v: &[usize]) -> FlipPermutation {
        FlipPermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn direct_matches_fixtures() {
        assert_eq!(pi_direct(&p("UUUDDD")).unwrap(), perm(&[6, 2, 4, 3, 5, 1]));
        assert_eq!(pi_direct(&p("UDUDUD")).unwrap(), perm(&[2, 1, 4, 3, 6, 5]));
        assert_eq!(pi_direct(&p("UUDDUD")).unwrap(), perm(&[4, 2, 3, 1, 6, 5]));
    }

    #[test]
    fn recursive_matches_fixtures() {
        assert_eq!(pi_recursive(&p("UUDUDD")).unwrap(), perm(&[6, 4, 5, 2, 3, 1]));
        assert_eq!(pi_recursive(&p("UDUUDD")).unwrap(), perm(&[2, 1, 6, 4, 5, 3]));
        assert_eq!(pi_recursive(&p("UD")).unwrap(), perm(&[2, 1]));
        assert_eq!(pi_recursive(&p("")).unwrap(), perm(&[]));
    }

    #[test]
    fn pi_rejects_flawed_paths() {
        assert!(pi_direct(&p("DU")).is_err());
        assert!(pi_recursive(&p("UDDU")).is_err());
    }

    #[test]
    fn alternation() {
        assert!(is_alternating(&[6, 2, 4, 3, 5, 1]));
        assert!(is_alternating(&[2, 1]));
        assert!(!is_alternating(&[1, 2]));
        assert!(!is_alternating(&[2, 1, 0, 3]));
    }

    #[test]
    fn permutation_validation() {
        assert!(FlipPermutation::new(vec![1, 1]).is_err());
        assert!(FlipPermutation::new(vec![1, 2, 3]).is_err());
        assert!(FlipPermutation::new(vec![0, 1]).is_err());
        assert_eq!(perm(&[6, 2, 4, 3, 5, 1]).to_string(), "(6,2,4,3,5,1)");
        assert_eq!(perm(&[6, 2, 4, 3, 5, 1]).pair(2), (4, 3));
    }

    #[test]
    fn hills() {
        let h = HillMatching::new(&p("UUDDUD")).unwrap();
        let partners: Vec<usize> = (1..=6).map(|i| h.partner(i)).collect();
        assert_eq!(partners, [4, 3, 2, 1, 6, 5]);
        assert!(HillMatching::new(&p("DU")).is_err());
    }

    #[test]
    fn origin_examples() {
        let w = recover_origin(&p("UDUDDU")).unwrap();
        assert_eq!((w.up_set, w.down_set, w.origin), (vec![6], vec![2], p("UUUDDD")));
        let w = recover_origin(&p("UUUDDD")).unwrap();
        assert_eq!((w.up_set.len(), w.down_set.len(), w.origin), (0, 0, p("UUUDDD")));
        let w = recover_origin(&p("DDDUUU")).unwrap();
        assert_eq!((w.up_set, w.down_set, w.origin), (vec![4, 5, 6], vec![1, 2, 3], p("UUUDDD")));
        assert!(recover_origin(&p("UU")).is_err());
    }

    #[test]
    fn subpath_examples() {
        let s = dyck_subpaths(&p("UUDD")).unwrap();
        assert!(s.contains(&DyckSubpath { start: 2, end: 3, level: 1 }));
        assert!(s.contains(&DyckSubpath { start: 1, end: 4, level: 0 }));
        assert_eq!(s.len(), 2);
        let s = dyck_subpaths(&p("UDUD")).unwrap();
        assert_eq!(
            s,
            vec![
                DyckSubpath { start: 1, end: 2, level: 0 },
                DyckSubpath { start: 1, end: 4, level: 0 },
                DyckSubpath { start: 3, end: 4, level: 0 },
            ]
        );
        assert!(dyck_subpaths(&p("")).unwrap().is_empty());
    }
}
