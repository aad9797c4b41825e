//! Loopless generation along a column `x, f(x), f²(x), …` and the saw-tooth
//! traversal of all balanced paths.
//!
//! [`ColumnIterator`] does `O(k)` work up front (origin recovery and the flip
//! permutation of the origin) and then moves one step along the column by
//! flipping two entries of a single working buffer. No per-step work depends
//! on `k`.

use crate::error::{Error, PathClass, Result};
use crate::flip::{check_steps, flip_order, origin_steps, FlipPermutation, HillMatching};
use crate::path::{format_steps, Encoding, LatticePath, LexPaths, Step};

/// The two positions changed by one step along a column. On the lower-flaw
/// side `up_flip` holds an up-step and `down_flip` a down-step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlipDelta {
    pub up_flip: usize,
    pub down_flip: usize,
    /// Flaws of the path after the move.
    pub resulting_flaws: usize,
}

/// Cursor over one column of the flaw grid, able to move down (`f`) and up
/// (`f⁻¹`).
#[derive(Debug, Clone)]
pub struct ColumnIterator {
    working: Vec<Step>,
    /// Flip order of the origin; pair `i` occupies entries `2i - 2, 2i - 1`.
    order: Vec<u32>,
    /// 1-based index of the pair that the next downward move applies.
    next_pair: usize,
    flaws: usize,
    last_ops: u32,
    max_ops: u32,
}

impl ColumnIterator {
    pub fn new(x: &LatticePath) -> Result<ColumnIterator> {
        x.require(PathClass::Balanced)?;
        check_steps(x.len())?;
        let (origin, flaws) = origin_steps(x);
        let (order, _) = flip_order(&HillMatching::from_steps(&origin));
        drop(origin);
        Ok(ColumnIterator {
            working: x.steps().to_vec(),
            order,
            next_pair: flaws + 1,
            flaws,
            last_ops: 0,
            max_ops: 0,
        })
    }

    pub fn k(&self) -> usize {
        self.working.len() / 2
    }

    pub fn flaws(&self) -> usize {
        self.flaws
    }

    /// Downward moves left before the bottom row.
    pub fn remaining(&self) -> usize {
        self.k() - self.flaws
    }

    /// Flip order of the column's top element; `O(k)`.
    pub fn permutation(&self) -> FlipPermutation {
        FlipPermutation::new(self.order.iter().map(|&v| v as usize).collect())
            .expect("flip order is a permutation")
    }

    #[inline]
    fn pair(&self, i: usize) -> (usize, usize) {
        (self.order[2 * i - 2] as usize, self.order[2 * i - 1] as usize)
    }

    /// Read-only view of the current path.
    pub fn path(&self) -> &[Step] {
        &self.working
    }

    /// Owned copy of the current path; `O(k)`.
    pub fn snapshot(&self) -> LatticePath {
        LatticePath::from_steps(self.working.clone())
    }

    pub fn format(&self, encoding: Encoding) -> String {
        format_steps(&self.working, encoding)
    }

    /// Basic operations performed by the most recent move.
    pub fn last_ops(&self) -> u32 {
        self.last_ops
    }

    /// Largest per-move operation count seen so far.
    pub fn max_ops(&self) -> u32 {
        self.max_ops
    }

    fn record(&mut self, ops: u32) {
        self.last_ops = ops;
        self.max_ops = self.max_ops.max(ops);
    }

    /// Moves to `f` of the current path.
    pub fn advance(&mut self) -> Option<FlipDelta> {
        let mut ops = 1;
        if self.next_pair > self.k() {
            self.record(ops);
            return None;
        }
        let (down_flip, up_flip) = self.pair(self.next_pair);
        ops += 2;
        self.working[down_flip - 1] = Step::Up;
        self.working[up_flip - 1] = Step::Down;
        ops += 2;
        self.next_pair += 1;
        self.flaws += 1;
        ops += 2;
        self.record(ops);
        Some(FlipDelta { up_flip, down_flip, resulting_flaws: self.flaws })
    }

    /// Like [`advance`](Self::advance), also handing out the updated path.
    pub fn advance_with_path(&mut self) -> Option<(FlipDelta, &[Step])> {
        let delta = self.advance()?;
        Some((delta, &self.working))
    }

    /// Moves to `f⁻¹` of the current path by undoing the previous pair.
    pub fn retreat(&mut self) -> Option<FlipDelta> {
        let mut ops = 1;
        if self.next_pair == 1 {
            self.record(ops);
            return None;
        }
        self.next_pair -= 1;
        let (down_flip, up_flip) = self.pair(self.next_pair);
        ops += 3;
        self.working[down_flip - 1] = Step::Down;
        self.working[up_flip - 1] = Step::Up;
        ops += 2;
        self.flaws -= 1;
        ops += 1;
        self.record(ops);
        Some(FlipDelta { up_flip, down_flip, resulting_flaws: self.flaws })
    }
}

impl Iterator for ColumnIterator {
    type Item = FlipDelta;

    fn next(&mut self) -> Option<FlipDelta> {
        self.advance()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining(), Some(self.remaining()))
    }
}

impl ExactSizeIterator for ColumnIterator {}

/// `[x0, f(x0), …, f^k(x0)]` for a Dyck path `x0` without flaws.
pub fn enumerate_column(x0: &LatticePath) -> Result<Vec<LatticePath>> {
    x0.require(PathClass::Dyck)?;
    let mut it = ColumnIterator::new(x0)?;
    let mut out = Vec::with_capacity(x0.k() + 1);
    out.push(x0.clone());
    while it.advance().is_some() {
        out.push(it.snapshot());
    }
    Ok(out)
}

/// One element of the saw-tooth stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridStep {
    pub path: LatticePath,
    /// 0-based index of the column (row-order element) being traversed.
    pub column: usize,
    /// The move that produced `path`; `None` for the first path of a column,
    /// which is reached by a row transition without a change bound.
    pub delta: Option<FlipDelta>,
}

/// All balanced paths with `2k` steps: even-numbered columns are walked top
/// to bottom with `f`, odd-numbered ones bottom to top with `f⁻¹`, and
/// consecutive columns are joined along the bottom or top row.
pub struct Sawtooth<R> {
    k: usize,
    rows: R,
    current: Option<ColumnIterator>,
    column: usize,
    started: bool,
}

/// Saw-tooth enumeration with the columns in lexicographic order of their
/// top elements.
pub fn sawtooth_enumerate(k: usize) -> Sawtooth<LexPaths> {
    sawtooth_enumerate_with(k, LexPaths::dyck(k))
}

/// Saw-tooth enumeration with a caller-supplied row order. Every element of
/// `rows` must be a distinct Dyck path with `2k` steps and no flaws.
pub fn sawtooth_enumerate_with<I>(k: usize, rows: I) -> Sawtooth<I::IntoIter>
where
    I: IntoIterator<Item = LatticePath>,
{
    Sawtooth { k, rows: rows.into_iter(), current: None, column: 0, started: false }
}

impl<R: Iterator<Item = LatticePath>> Sawtooth<R> {
    fn open_column(&mut self) -> Option<Result<GridStep>> {
        let top = self.rows.next()?;
        if top.len() != 2 * self.k || !top.is_dyck() {
            self.current = None;
            return Some(Err(Error::Domain { expected: PathClass::Dyck, len: top.len() }));
        }
        let column = if self.started { self.column + 1 } else { 0 };
        self.started = true;
        self.column = column;
        let entry = if column % 2 == 0 { top } else { top.mirror() };
        match ColumnIterator::new(&entry) {
            Ok(it) => self.current = Some(it),
            Err(e) => return Some(Err(e)),
        }
        Some(Ok(GridStep { path: entry, column, delta: None }))
    }
}

impl<R: Iterator<Item = LatticePath>> Iterator for Sawtooth<R> {
    type Item = Result<GridStep>;

    fn next(&mut self) -> Option<Result<GridStep>> {
        if let Some(it) = self.current.as_mut() {
            let delta = if self.column.is_multiple_of(2) { it.advance() } else { it.retreat() };
            if let Some(delta) = delta {
                let path = it.snapshot();
                return Some(Ok(GridStep { path, column: self.column, delta: Some(delta) }));
            }
        }
        self.open_column()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::format_steps;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    fn column(x: &str) -> Vec<String> {
        let mut it = ColumnIterator::new(&p(x)).unwrap();
        let mut out = Vec::new();
        while let Some((_, view)) = it.advance_with_path() {
            out.push(format_steps(view, Encoding::Letters));
        }
        out
    }

    #[test]
    fn column_from_top() {
        assert_eq!(column("UUUDDD"), ["UDUDDU", "UDDUDU", "DDDUUU"]);
    }

    #[test]
    fn column_from_middle() {
        assert_eq!(column("UDUDDU"), ["UDDUDU", "DDDUUU"]);
        assert!(column("DDDUUU").is_empty());
        assert!(column("").is_empty());
    }

    #[test]
    fn deltas_follow_permutation() {
        let mut it = ColumnIterator::new(&p("UUUDDD")).unwrap();
        assert_eq!(it.next(), Some(FlipDelta { up_flip: 2, down_flip: 6, resulting_flaws: 1 }));
        assert_eq!(it.next(), Some(FlipDelta { up_flip: 3, down_flip: 4, resulting_flaws: 2 }));
        assert_eq!(it.next(), Some(FlipDelta { up_flip: 1, down_flip: 5, resulting_flaws: 3 }));
        assert_eq!(it.next(), None);
        assert_eq!(it.next(), None);
    }

    #[test]
    fn retreat_undoes_advance() {
        let start = p("UDUDDU");
        let mut it = ColumnIterator::new(&start).unwrap();
        assert_eq!(it.retreat().unwrap().resulting_flaws, 0);
        assert_eq!(it.snapshot(), p("UUUDDD"));
        assert_eq!(it.retreat(), None);
        it.advance();
        assert_eq!(it.snapshot(), start);
    }

    #[test]
    fn rejects_unbalanced() {
        assert!(ColumnIterator::new(&p("UUU")).is_err());
    }

    #[test]
    fn column_lists() {
        let c = |s: &str| -> Vec<String> {
            enumerate_column(&p(s)).unwrap().iter().map(|x| x.to_string()).collect()
        };
        assert_eq!(c("UD"), ["UD", "DU"]);
        assert_eq!(c("UUDD"), ["UUDD", "UDDU", "DDUU"]);
        assert_eq!(c("UUUDDD").len(), 4);
        assert_eq!(c("UUUDDD").last().unwrap(), "DDDUUU");
        assert!(enumerate_column(&p("UDDU")).is_err());
    }

    #[test]
    fn sawtooth_small() {
        let k1: Vec<String> =
            sawtooth_enumerate(1).map(|s| s.unwrap().path.to_string()).collect();
        assert_eq!(k1, ["UD", "DU"]);
        let k2: Vec<String> =
            sawtooth_enumerate(2).map(|s| s.unwrap().path.to_string()).collect();
        assert_eq!(k2, ["UUDD", "UDDU", "DDUU", "DUDU", "DUUD", "UDUD"]);
        assert_eq!(sawtooth_enumerate(3).count(), 20);
    }

    #[test]
    fn sawtooth_rejects_bad_rows() {
        let mut s = sawtooth_enumerate_with(2, vec![p("UDDU")]);
        assert!(matches!(s.next(), Some(Err(Error::Domain { .. }))));
        let mut s = sawtooth_enumerate_with(2, vec![p("UD")]);
        assert!(matches!(s.next(), Some(Err(Error::Domain { .. }))));
    }
}
