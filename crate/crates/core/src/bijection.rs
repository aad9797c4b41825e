//! The single-flip maps `g`, `g'`, `h`, `h'` and the two-flip bijection
//! `f = h ∘ g` between flaw classes, plus the classic swap bijection used as
//! a baseline.
//!
//! | map  | domain                  | flips                                        |
//! |------|-------------------------|----------------------------------------------|
//! | `g`  | balanced, `e < k`       | the `(d_0 + 1)`-th down-step touching `y = 0` |
//! | `g'` | balanced, `e >= 1`      | the `d_0`-th down-step touching `y = 0`       |
//! | `h`  | raised                  | the `u_1`-th up-step touching `y = 1`         |
//! | `h'` | raised                  | the `(u_1 + 1)`-th up-step touching `y = 1`   |
//!
//! `h'` inverts `g` and `g'` inverts `h`, so `f⁻¹ = h' ∘ g'`.

use crate::error::{Error, PathClass, Result};
use crate::path::{LatticePath, Step};

/// Image of a single-flip map and the 1-based position that changed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipResult {
    pub path: LatticePath,
    pub position: usize,
}

/// Image of `f` or `f⁻¹`. The two paths differ exactly at `up_flip` and
/// `down_flip`, named after the step kinds on the lower-flaw side, and
/// `up_flip < down_flip`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FStepResult {
    pub path: LatticePath,
    pub up_flip: usize,
    pub down_flip: usize,
}

fn flip_nth_touching(x: &LatticePath, kind: Step, line: i64, n: usize) -> FlipResult {
    let position = x
        .touching_iter(kind, line)
        .nth(n)
        .expect("map is well-defined on its domain");
    FlipResult { path: x.flipped(&[position]), position }
}

pub fn apply_g(x: &LatticePath) -> Result<FlipResult> {
    x.require(PathClass::Balanced)?;
    if x.count_flaws() == x.k() {
        return Err(Error::NoSuccessor);
    }
    Ok(flip_nth_touching(x, Step::Down, 0, x.count_down_at(0)))
}

pub fn apply_g_prime(x: &LatticePath) -> Result<FlipResult> {
    x.require(PathClass::Balanced)?;
    if x.count_flaws() == 0 {
        return Err(Error::NoPredecessor);
    }
    Ok(flip_nth_touching(x, Step::Down, 0, x.count_down_at(0) - 1))
}

pub fn apply_h(x: &LatticePath) -> Result<FlipResult> {
    x.require(PathClass::Raised)?;
    Ok(flip_nth_touching(x, Step::Up, 1, x.count_up_at(1) - 1))
}

pub fn apply_h_prime(x: &LatticePath) -> Result<FlipResult> {
    x.require(PathClass::Raised)?;
    Ok(flip_nth_touching(x, Step::Up, 1, x.count_up_at(1)))
}

/// `f(x) = h(g(x))`: one more flaw, exactly two steps changed.
pub fn apply_f(x: &LatticePath) -> Result<FStepResult> {
    let raised = apply_g(x)?;
    let lowered = apply_h(&raised.path)?;
    Ok(FStepResult {
        path: lowered.path,
        up_flip: lowered.position,
        down_flip: raised.position,
    })
}

/// `f⁻¹(x) = h'(g'(x))`.
pub fn apply_f_inverse(x: &LatticePath) -> Result<FStepResult> {
    let raised = apply_g_prime(x)?;
    let lowered = apply_h_prime(&raised.path)?;
    Ok(FStepResult {
        path: lowered.path,
        up_flip: raised.position,
        down_flip: lowered.position,
    })
}

/// The classic bijection: writing `x = u U v D w`, where `U` is the first
/// step rising above `y = 0` and `D` the first later step returning to it,
/// the image is `v D u U w`. Adds one flaw but may change every position.
pub fn apply_f_classic(x: &LatticePath) -> Result<LatticePath> {
    x.require(PathClass::Balanced)?;
    if x.count_flaws() == x.k() {
        return Err(Error::NoSuccessor);
    }
    let n = x.len();
    // heights before `a` are all <= 0, so the first time the path reaches 1
    let a = (1..=n)
        .find(|&i| x.height(i) == 1)
        .expect("fewer than k flaws means the path rises above y = 0");
    let b = (a + 1..=n)
        .find(|&i| x.step(i) == Step::Down && x.height(i) == 0)
        .expect("a balanced path returns to y = 0");
    let steps = x.steps();
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&steps[a..b - 1]);
    out.push(Step::Down);
    out.extend_from_slice(&steps[..a - 1]);
    out.push(Step::Up);
    out.extend_from_slice(&steps[b..]);
    Ok(LatticePath::from_steps(out))
}
