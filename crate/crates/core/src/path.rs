//! Lattice paths made of up- and down-steps.
//!
//! A path with `2k` steps is stored together with its height profile, so
//! `height(i)` is a constant-time lookup. Positions are 1-based throughout the
//! public API: step `i` goes from `height(i - 1)` to `height(i)`, and
//! `height(0) = 0`.
//!
//! Paths are immutable values. Operations that change steps return a new path.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, PathClass, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    #[inline]
    pub fn flip(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    #[inline]
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }

    pub fn bit(self) -> char {
        match self {
            Step::Up => '1',
            Step::Down => '0',
        }
    }

    /// Accepts `U`/`D` and the bit encoding `1`/`0` (up = 1).
    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'U' | '1' => Some(Step::Up),
            'D' | '0' => Some(Step::Down),
            _ => None,
        }
    }
}

/// Text encoding used when printing paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Encoding {
    #[default]
    Letters,
    Bits,
}

impl Encoding {
    pub fn char_of(self, step: Step) -> char {
        match self {
            Encoding::Letters => step.letter(),
            Encoding::Bits => step.bit(),
        }
    }
}

/// Writes `steps` in the given encoding. Shared by [`LatticePath`] and the
/// mutable working buffers of the generators.
pub fn format_steps(steps: &[Step], encoding: Encoding) -> String {
    steps.iter().map(|&s| encoding.char_of(s)).collect()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
    heights: Vec<i64>,
}

impl LatticePath {
    pub fn from_steps(steps: Vec<Step>) -> LatticePath {
        let mut heights = Vec::with_capacity(steps.len() + 1);
        let mut h = 0;
        heights.push(h);
        for s in &steps {
            h += s.delta();
            heights.push(h);
        }
        LatticePath { steps, heights }
    }

    pub fn empty() -> LatticePath {
        LatticePath::from_steps(Vec::new())
    }

    /// `U^k D^k`, the single mountain.
    pub fn nested(k: usize) -> LatticePath {
        let mut steps = vec![Step::Up; k];
        steps.resize(2 * k, Step::Down);
        LatticePath::from_steps(steps)
    }

    /// `(UD)^k`.
    pub fn flat(k: usize) -> LatticePath {
        LatticePath::from_steps([Step::Up, Step::Down].repeat(k))
    }

    pub fn parse(text: &str) -> Result<LatticePath> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(i, c)| Step::from_char(c).ok_or(Error::Parse { index: i + 1, found: c }))
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePath::from_steps(steps))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Half the length. For balanced paths this is the number of up-steps.
    #[inline]
    pub fn k(&self) -> usize {
        self.steps.len() / 2
    }

    #[inline]
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    /// Step at 1-based position `i`.
    #[inline]
    pub fn step(&self, i: usize) -> Step {
        self.steps[i - 1]
    }

    /// Height after the first `i` steps, `0 <= i <= len`.
    #[inline]
    pub fn height(&self, i: usize) -> i64 {
        self.heights[i]
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn end_height(&self) -> i64 {
        self.heights[self.len()]
    }

    pub fn ups(&self) -> usize {
        // ups - downs = end height, ups + downs = len
        ((self.len() as i64 + self.end_height()) / 2) as usize
    }

    pub fn min_height(&self) -> i64 {
        self.heights.iter().copied().min().unwrap_or(0)
    }

    /// In `L(2k, k)`: even length and ends on `y = 0`.
    pub fn is_balanced(&self) -> bool {
        self.len().is_multiple_of(2) && self.end_height() == 0
    }

    /// In `L(2k, k+1)`: even length and ends on `y = 2`.
    pub fn is_raised(&self) -> bool {
        self.len().is_multiple_of(2) && self.end_height() == 2
    }

    /// Balanced with zero flaws.
    pub fn is_dyck(&self) -> bool {
        self.is_balanced() && self.min_height() >= 0
    }

    pub(crate) fn require(&self, class: PathClass) -> Result<()> {
        let ok = match class {
            PathClass::Balanced => self.is_balanced(),
            PathClass::Raised => self.is_raised(),
            PathClass::Dyck => self.is_dyck(),
            PathClass::NonEmptyDyck => self.is_dyck() && !self.is_empty(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain { expected: class, len: self.len() })
        }
    }

    /// Number of down-steps that start on or below `y = 0`.
    pub fn flaws(&self) -> Result<usize> {
        self.require(PathClass::Balanced)?;
        Ok(self.count_flaws())
    }

    pub(crate) fn count_flaws(&self) -> usize {
        self.steps
            .iter()
            .zip(&self.heights)
            .filter(|&(&s, &h)| s == Step::Down && h <= 0)
            .count()
    }

    /// `u_c`: up-steps starting on the line `y = c`.
    pub fn count_up_at(&self, c: i64) -> usize {
        self.count_starting_at(Step::Up, c)
    }

    /// `d_c`: down-steps starting on the line `y = c`.
    pub fn count_down_at(&self, c: i64) -> usize {
        self.count_starting_at(Step::Down, c)
    }

    fn count_starting_at(&self, kind: Step, c: i64) -> usize {
        self.steps
            .iter()
            .zip(&self.heights)
            .filter(|&(&s, &h)| s == kind && h == c)
            .count()
    }

    /// Ascending positions of steps of the given kind that start or end on
    /// the line `y = c`.
    pub fn touching_positions(&self, kind: Step, c: i64) -> Vec<usize> {
        self.touching_iter(kind, c).collect()
    }

    pub(crate) fn touching_iter(&self, kind: Step, c: i64) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).filter(move |&i| {
            self.steps[i - 1] == kind && (self.heights[i - 1] == c || self.heights[i] == c)
        })
    }

    /// Reflection at the line `y = 0`: every step flipped.
    pub fn mirror(&self) -> LatticePath {
        LatticePath::from_steps(self.steps.iter().map(|s| s.flip()).collect())
    }

    /// Reflection at the vertical line through the midpoint: reverse the
    /// steps and flip each one.
    pub fn rev_complement(&self) -> LatticePath {
        LatticePath::from_steps(self.steps.iter().rev().map(|s| s.flip()).collect())
    }

    /// Copy with the steps at the given 1-based positions flipped.
    pub fn flipped(&self, positions: &[usize]) -> LatticePath {
        let mut steps = self.steps.clone();
        for &i in positions {
            steps[i - 1] = steps[i - 1].flip();
        }
        LatticePath::from_steps(steps)
    }

    /// Steps at positions `lo..=hi` as a path of its own, re-based at the
    /// origin. Empty when `lo > hi`.
    pub fn subpath(&self, lo: usize, hi: usize) -> LatticePath {
        if lo > hi {
            return LatticePath::empty();
        }
        LatticePath::from_steps(self.steps[lo - 1..hi].to_vec())
    }

    pub fn concat(parts: &[&LatticePath]) -> LatticePath {
        LatticePath::from_steps(parts.iter().flat_map(|p| p.steps.iter().copied()).collect())
    }

    /// Splits a non-empty Dyck path as `U u D v` at its first down-step
    /// touching `y = 0`.
    pub fn canonical_decomposition(&self) -> Result<CanonicalDecomposition> {
        self.require(PathClass::NonEmptyDyck)?;
        let split = (1..=self.len())
            .find(|&i| self.steps[i - 1] == Step::Down && self.heights[i] == 0)
            .expect("a non-empty Dyck path returns to y = 0");
        Ok(CanonicalDecomposition {
            split,
            inner: self.subpath(2, split - 1),
            tail: self.subpath(split + 1, self.len()),
        })
    }

    /// 1-based positions of up-steps, ascending.
    pub fn up_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Step::Up)
            .map(|(i, _)| i + 1)
    }

    pub fn format(&self, encoding: Encoding) -> String {
        format_steps(&self.steps, encoding)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(Encoding::Letters))
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticePath({self})")
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<LatticePath> {
        LatticePath::parse(s)
    }
}

/// `x = U ∘ inner ∘ D ∘ tail`, where the `D` sits at position `split`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    pub split: usize,
    pub inner: LatticePath,
    pub tail: LatticePath,
}

impl CanonicalDecomposition {
    pub fn reassemble(&self) -> LatticePath {
        let up = LatticePath::from_steps(vec![Step::Up]);
        let down = LatticePath::from_steps(vec![Step::Down]);
        LatticePath::concat(&[&up, &self.inner, &down, &self.tail])
    }
}

/// Parses the line-oriented path format: one path per line, `#` starts a
/// comment line, blank lines are skipped.
pub fn read_paths(text: &str) -> Result<Vec<LatticePath>> {
    text.lines()
        .enumerate()
        .map(|(n, line)| (n + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
        .map(|(n, line)| {
            LatticePath::parse(line).map_err(|e| Error::AtLine { line: n, source: Box::new(e) })
        })
        .collect()
}

pub fn write_paths<'a>(paths: impl IntoIterator<Item = &'a LatticePath>, encoding: Encoding) -> String {
    let mut out = String::new();
    for p in paths {
        out.push_str(&p.format(encoding));
        out.push('\n');
    }
    out
}

/// Lexicographic enumeration (`U < D`) of step sequences with a fixed
/// number of up-steps, optionally restricted to those never going below
/// `y = 0`.
#[derive(Debug, Clone)]
pub struct LexPaths {
    ups: usize,
    dyck_only: bool,
    current: Option<Vec<Step>>,
}

impl LexPaths {
    /// All paths with `len` steps of which `ups` are up-steps.
    pub fn with_ups(len: usize, ups: usize) -> LexPaths {
        let current = (ups <= len).then(|| {
            let mut steps = vec![Step::Up; ups];
            steps.resize(len, Step::Down);
            steps
        });
        LexPaths { ups, dyck_only: false, current }
    }

    /// `L(2k, k)`.
    pub fn balanced(k: usize) -> LexPaths {
        LexPaths::with_ups(2 * k, k)
    }

    /// `L(2k, k+1)`.
    pub fn raised(k: usize) -> LexPaths {
        LexPaths::with_ups(2 * k, k + 1)
    }

    /// Dyck paths with `2k` steps and no flaws.
    pub fn dyck(k: usize) -> LexPaths {
        LexPaths { dyck_only: true, ..LexPaths::balanced(k) }
    }

    /// Advances `steps` to its lexicographic successor; false at the end.
    fn successor(steps: &mut [Step], ups: usize, dyck_only: bool) -> bool {
        let n = steps.len();
        let mut suffix_ups = 0usize;
        for i in (1..=n).rev() {
            if steps[i - 1] == Step::Up {
                let prefix_ups = ups - suffix_ups - 1;
                let prefix_height = 2 * prefix_ups as i64 - (i as i64 - 1);
                let remaining = n - i;
                let ups_needed = ups - prefix_ups;
                if ups_needed <= remaining && (!dyck_only || prefix_height >= 1) {
                    steps[i - 1] = Step::Down;
                    for (j, s) in steps[i..].iter_mut().enumerate() {
                        *s = if j < ups_needed { Step::Up } else { Step::Down };
                    }
                    return true;
                }
                suffix_ups += 1;
            }
        }
        false
    }
}

impl Iterator for LexPaths {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        let steps = self.current.take()?;
        let mut succ = steps.clone();
        if LexPaths::successor(&mut succ, self.ups, self.dyck_only) {
            self.current = Some(succ);
        }
        Some(LatticePath::from_steps(steps))
    }
}
