//! Property suite: every structural claim about `f`, `π`, the column
//! iterator and the cycle factors, checked exhaustively for one `k` against
//! the brute-force oracles.

use std::collections::HashSet;
use std::fmt;

use crate::bijection::{
    apply_f, apply_f_classic, apply_f_inverse, apply_g, apply_g_prime, apply_h, apply_h_prime,
};
use crate::error::Result;
use crate::factor::{
    middle_factor, odd_cycle, odd_factor, verify_factor, CycleFactor, GraphKind,
};
use crate::flip::{
    dyck_subpaths, pi_direct, pi_recursive_counted, recover_origin, FlipPermutation,
};
use crate::generator::{sawtooth_enumerate, ColumnIterator};
use crate::oracle::{
    binomial, catalan, differing_positions, enumerate_dyck_paths_capped,
    enumerate_lattice_paths_capped, enumerate_raised_paths_capped, f_power, hamming,
    odd_cycle_by_maps, partition_by_flaws, verify_chung_feller_capped,
};
use crate::path::{LatticePath, Step};

/// Upper bound on the basic operations of one column move, for every `k`.
pub const COLUMN_OPS_BOUND: u32 = 8;

/// Upper bound on `work / k` for the linear-time flip order.
pub const RECURSION_WORK_PER_HILL: usize = 5;

/// Result of one suite row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub id: &'static str,
    pub title: &'static str,
    pub k: usize,
    /// Individual assertions evaluated.
    pub checked: u64,
    pub violations: u64,
    pub first_violation: Option<String>,
    pub note: Option<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for PropertyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<4} {:<22} k={:<3} checked={:<9} violations={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.k,
            self.checked,
            self.violations
        )?;
        if let Some(v) = &self.first_violation {
            write!(f, " first: {v}")?;
        }
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

/// One row of the suite.
#[derive(Clone, Copy)]
pub struct Property {
    pub id: &'static str,
    pub title: &'static str,
    run: fn(&mut Tally, usize, usize) -> Result<()>,
}

impl fmt::Debug for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Property").field("id", &self.id).finish()
    }
}

impl Property {
    /// Runs the row for paths with `2k` steps, refusing `k > cap` where the
    /// row enumerates exhaustively.
    pub fn run(&self, k: usize, cap: usize) -> Result<PropertyOutcome> {
        let mut t = Tally::default();
        (self.run)(&mut t, k, cap)?;
        Ok(PropertyOutcome {
            id: self.id,
            title: self.title,
            k,
            checked: t.checked,
            violations: t.violations,
            first_violation: t.first,
            note: t.note,
        })
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    violations: u64,
    first: Option<String>,
    note: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn absorb(&mut self, problem: Option<String>) {
        self.check(problem.is_none(), || problem.unwrap_or_default());
    }
}

pub const PROPERTIES: &[Property] = &[
    Property { id: "chung-feller", title: "all flaw classes have C_k paths", run: chung_feller },
    Property { id: "g-inverse", title: "h' inverts g", run: g_inverse },
    Property { id: "h-inverse", title: "g' inverts h; h never lands in D^0", run: h_inverse },
    Property { id: "g-h-positions", title: "h flips left of g, no up-step touching 1 between", run: g_h_positions },
    Property { id: "h-g-positions", title: "g flips right of h, no down-step touching 0 between", run: h_g_positions },
    Property { id: "flaw-increment", title: "f adds exactly one flaw", run: flaw_increment },
    Property { id: "min-change", title: "f is a two-flip bijection D^e -> D^(e+1)", run: min_change },
    Property { id: "origin", title: "origin recovery reproduces every path", run: origin },
    Property { id: "alternating", title: "pi is alternating; f^k is the mirror", run: alternating },
    Property { id: "recursive-pi", title: "linear-time pi equals literal pi", run: recursive_pi },
    Property { id: "subpath-pi", title: "Dyck subpaths are contiguous blocks of pi", run: subpath_pi },
    Property { id: "loopless-column", title: "column iterator replays f in bounded work", run: loopless_column },
    Property { id: "sawtooth", title: "saw-tooth emits every path once", run: sawtooth },
    Property { id: "odd-factor", title: "odd graph cycle factor", run: odd_graph },
    Property { id: "middle-factor", title: "middle levels cycle factor", run: middle_levels },
    Property { id: "classic-contrast", title: "classic bijection is not minimum-change", run: classic },
];

pub fn property(id: &str) -> Option<&'static Property> {
    PROPERTIES.iter().find(|p| p.id == id)
}

/// Runs every row, spreading rows over `jobs` threads; results keep the
/// table order.
pub fn run_suite(k: usize, cap: usize, jobs: usize) -> Result<Vec<PropertyOutcome>> {
    let jobs = jobs.clamp(1, PROPERTIES.len());
    if jobs == 1 {
        return PROPERTIES.iter().map(|p| p.run(k, cap)).collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<Result<PropertyOutcome>>> = vec![None; PROPERTIES.len()];
    let results = std::thread::scope(|s| {
        let workers: Vec<_> = (0..jobs)
            .map(|_| {
                s.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        let Some(p) = PROPERTIES.get(i) else { break };
                        done.push((i, p.run(k, cap)));
                    }
                    done
                })
            })
            .collect();
        workers
            .into_iter()
            .flat_map(|w| w.join().expect("suite worker panicked"))
            .collect::<Vec<_>>()
    });
    for (i, r) in results {
        slots[i] = Some(r);
    }
    slots.into_iter().map(|s| s.expect("every row ran")).collect()
}

fn chung_feller(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    let check = verify_chung_feller_capped(k, cap)?;
    for (e, class) in check.partition.classes.iter().enumerate() {
        t.check(class.len() as u64 == check.catalan, || {
            format!("class {e} has {} paths, expected {}", class.len(), check.catalan)
        });
    }
    let total = check.partition.total() as u64;
    let expected = binomial(2 * k, k)?;
    t.check(total == expected, || format!("{total} paths, expected {expected}"));
    Ok(())
}

fn g_inverse(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    for x in enumerate_lattice_paths_capped(k, cap)? {
        if x.flaws()? == k {
            continue;
        }
        let back = apply_h_prime(&apply_g(&x)?.path)?.path;
        t.check(back == x, || format!("h'(g({x})) = {back}"));
    }
    Ok(())
}

fn h_inverse(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    if k == 0 {
        t.note = Some("no raised paths for k = 0".into());
        return Ok(());
    }
    for y in enumerate_raised_paths_capped(k, cap)? {
        let down = apply_h(&y)?.path;
        let e = down.flaws()?;
        t.check(e >= 1, || format!("h({y}) = {down} has no flaws"));
        if e >= 1 {
            let back = apply_g_prime(&down)?.path;
            t.check(back == y, || format!("g'(h({y})) = {back}"));
        }
    }
    Ok(())
}

fn up_touching_one_between(x: &LatticePath, a: usize, b: usize) -> Option<usize> {
    x.touching_positions(Step::Up, 1).into_iter().find(|&i| a < i && i < b)
}

fn g_h_positions(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    for x in enumerate_lattice_paths_capped(k, cap)? {
        if x.flaws()? == k {
            continue;
        }
        let g = apply_g(&x)?;
        let b = g.position;
        let a = apply_h(&g.path)?.position;
        t.check(a < b, || format!("{x}: h flips {a}, g flips {b}"));
        for (name, p) in [("x", &x), ("g(x)", &g.path)] {
            let bad = up_touching_one_between(p, a, b);
            t.check(bad.is_none(), || {
                format!("{x}: {name} has an up-step touching 1 at {} between {a} and {b}", bad.unwrap())
            });
        }
    }
    Ok(())
}

fn h_g_positions(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    if k == 0 {
        t.note = Some("no raised paths for k = 0".into());
        return Ok(());
    }
    let mut excluded = 0u64;
    for x in enumerate_raised_paths_capped(k, cap)? {
        let h = apply_h(&x)?;
        if h.path.flaws()? == k {
            excluded += 1;
            continue;
        }
        let a = h.position;
        let b = apply_g(&h.path)?.position;
        t.check(a < b, || format!("{x}: h flips {a}, g flips {b}"));
        let bad = h
            .path
            .touching_positions(Step::Down, 0)
            .into_iter()
            .find(|&i| a < i && i < b);
        t.check(bad.is_none(), || {
            format!("{x}: h(x) has a down-step touching 0 at {} between {a} and {b}", bad.unwrap())
        });
    }
    t.note = Some(format!("{excluded} inputs with h(x) in D^k excluded"));
    Ok(())
}

fn flaw_increment(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    for x in enumerate_lattice_paths_capped(k, cap)? {
        let e = x.flaws()?;
        if e == k {
            continue;
        }
        let y = apply_f(&x)?.path;
        let e2 = y.flaws()?;
        t.check(e2 == e + 1, || format!("f({x}) = {y} has {e2} flaws, expected {}", e + 1));
    }
    Ok(())
}

/// Problems with one application of `f` to `x`, which must have fewer than
/// `k` flaws.
pub fn min_change_violation(x: &LatticePath) -> Result<Option<String>> {
    let r = apply_f(x)?;
    let y = &r.path;
    if r.up_flip >= r.down_flip {
        return Ok(Some(format!("f({x}): up flip {} not left of down flip {}", r.up_flip, r.down_flip)));
    }
    let diff = differing_positions(x, y);
    if diff != [r.up_flip, r.down_flip] {
        return Ok(Some(format!("f({x}) = {y} differs at {diff:?}")));
    }
    if x.step(r.up_flip) != Step::Up || x.step(r.down_flip) != Step::Down {
        return Ok(Some(format!("f({x}) flips the wrong step kinds")));
    }
    if let Some(i) = (0..=x.len()).find(|&i| y.height(i) > x.height(i)) {
        return Ok(Some(format!("f({x}) = {y} raises the path at {i}")));
    }
    let back = apply_f_inverse(y)?;
    if back.path != *x || (back.up_flip, back.down_flip) != (r.up_flip, r.down_flip) {
        return Ok(Some(format!("f^-1(f({x})) = {}", back.path)));
    }
    Ok(None)
}

fn min_change(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    let partition = partition_by_flaws(k, cap)?;
    for e in 0..k {
        let mut image = HashSet::with_capacity(partition.classes[e].len());
        for x in &partition.classes[e] {
            t.absorb(min_change_violation(x)?);
            let y = apply_f(x)?.path;
            t.check(hamming(x, &y)? == 2, || format!("hamming({x}, f(x)) != 2"));
            image.insert(y);
        }
        let from = partition.classes[e].len();
        t.check(image.len() == from, || format!("f is not injective on class {e}"));
        let target: HashSet<_> = partition.classes[e + 1].iter().cloned().collect();
        t.check(image == target, || format!("f(class {e}) != class {}", e + 1));
    }
    Ok(())
}

/// Problems with [`recover_origin`] on a balanced path.
pub fn origin_violation(x: &LatticePath) -> Result<Option<String>> {
    let w = recover_origin(x)?;
    let e = x.flaws()?;
    if w.up_set.len() != e || w.down_set.len() != e {
        return Ok(Some(format!(
            "{x}: |U| = {}, |D| = {}, flaws = {e}",
            w.up_set.len(),
            w.down_set.len()
        )));
    }
    if !w.origin.is_dyck() {
        return Ok(Some(format!("{x}: origin {} has flaws", w.origin)));
    }
    let mut flipped: Vec<usize> = w.up_set.iter().chain(&w.down_set).copied().collect();
    flipped.sort_unstable();
    if differing_positions(x, &w.origin) != flipped {
        return Ok(Some(format!("{x}: origin {} differs outside U and D", w.origin)));
    }
    let replay = f_power(&w.origin, e)?;
    if replay != *x {
        return Ok(Some(format!("{x}: f^{e}({}) = {replay}", w.origin)));
    }
    Ok(None)
}

fn origin(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    for x in enumerate_lattice_paths_capped(k, cap)? {
        t.absorb(origin_violation(&x)?);
    }
    Ok(())
}

/// Problems with `π(x0)` for a path without flaws: permutation shape,
/// alternation, `f^k(x0)` equal to the mirror, and agreement of the
/// linear-time construction with the literal one.
pub fn flip_order_violation(x0: &LatticePath) -> Result<Option<String>> {
    let direct = pi_direct(x0)?;
    if FlipPermutation::new(direct.entries().to_vec()).is_err() {
        return Ok(Some(format!("pi({x0}) = {direct} is not a permutation")));
    }
    if !direct.is_alternating() {
        return Ok(Some(format!("pi({x0}) = {direct} is not alternating")));
    }
    let (fast, stats) = pi_recursive_counted(x0)?;
    if fast != direct {
        return Ok(Some(format!("pi({x0}): linear {fast}, literal {direct}")));
    }
    if stats.total_work() > RECURSION_WORK_PER_HILL * x0.k() {
        return Ok(Some(format!("pi({x0}): work {} above {}", stats.total_work(), RECURSION_WORK_PER_HILL * x0.k())));
    }
    let last = f_power(x0, x0.k())?;
    if last != x0.mirror() {
        return Ok(Some(format!("f^k({x0}) = {last}, not the mirror")));
    }
    Ok(None)
}

fn alternating(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    for x0 in enumerate_dyck_paths_capped(k, cap)? {
        let pi = pi_direct(&x0)?;
        t.check(pi.is_alternating(), || format!("pi({x0}) = {pi} is not alternating"));
        t.check(FlipPermutation::new(pi.entries().to_vec()).is_ok(), || {
            format!("pi({x0}) = {pi} is not a permutation")
        });
        let last = f_power(&x0, k)?;
        t.check(last == x0.mirror(), || format!("f^k({x0}) = {last}"));
    }
    Ok(())
}

fn recursive_pi(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    let mut worst = 0;
    for x0 in enumerate_dyck_paths_capped(k, cap)? {
        let direct = pi_direct(&x0)?;
        let (fast, stats) = pi_recursive_counted(&x0)?;
        t.check(fast == direct, || format!("pi({x0}): linear {fast}, literal {direct}"));
        let work = stats.total_work();
        worst = worst.max(work);
        t.check(work <= RECURSION_WORK_PER_HILL * k, || format!("pi({x0}): work {work}"));
    }
    t.note = Some(format!("max work {worst} <= {}k", RECURSION_WORK_PER_HILL));
    Ok(())
}

/// Problems with the block of `π(x0)` belonging to each Dyck subpath.
pub fn subpath_violation(x0: &LatticePath) -> Result<Option<String>> {
    let pi = pi_direct(x0)?;
    let entries = pi.entries();
    for s in dyck_subpaths(x0)? {
        let idx: Vec<usize> = (0..entries.len())
            .filter(|&i| (s.start..=s.end).contains(&entries[i]))
            .collect();
        if idx.len() != s.len() || idx[idx.len() - 1] - idx[0] + 1 != s.len() {
            return Ok(Some(format!("{x0}: positions {}..{} not contiguous in {pi}", s.start, s.end)));
        }
        let block: Vec<usize> = idx.iter().map(|&i| entries[i] + 1 - s.start).collect();
        let sub = x0.subpath(s.start, s.end);
        let expected: Vec<usize> = if s.level % 2 == 0 {
            pi_direct(&sub)?.into_entries()
        } else {
            pi_direct(&sub.rev_complement())?
                .into_entries()
                .into_iter()
                .map(|v| s.len() + 1 - v)
                .collect()
        };
        if block != expected {
            return Ok(Some(format!(
                "{x0}: block of {}..{} (level {}) is {block:?}, expected {expected:?}",
                s.start, s.end, s.level
            )));
        }
    }
    Ok(None)
}

fn subpath_pi(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    for x0 in enumerate_dyck_paths_capped(k, cap)? {
        t.absorb(subpath_violation(&x0)?);
    }
    Ok(())
}

/// Problems with the column iterator started at a balanced path `x`:
/// every yield must equal literal `f`, the path view must match, and no
/// move may exceed [`COLUMN_OPS_BOUND`].
pub fn column_violation(x: &LatticePath) -> Result<Option<String>> {
    let mut it = ColumnIterator::new(x)?;
    let mut cur = x.clone();
    let mut yields = 0;
    while let Some(delta) = it.advance() {
        yields += 1;
        let r = apply_f(&cur)?;
        if (delta.up_flip, delta.down_flip) != (r.up_flip, r.down_flip) {
            return Ok(Some(format!(
                "{x}: yield {yields} flips ({}, {}), f flips ({}, {})",
                delta.up_flip, delta.down_flip, r.up_flip, r.down_flip
            )));
        }
        if it.path() != r.path.steps() || delta.resulting_flaws != r.path.flaws()? {
            return Ok(Some(format!("{x}: yield {yields} is {}, f gives {}", it.snapshot(), r.path)));
        }
        if it.last_ops() > COLUMN_OPS_BOUND {
            return Ok(Some(format!("{x}: move took {} operations", it.last_ops())));
        }
        cur = r.path;
    }
    let e = x.flaws()?;
    if yields != x.k() - e {
        return Ok(Some(format!("{x}: {yields} yields, expected {}", x.k() - e)));
    }
    Ok(None)
}

fn loopless_column(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    let mut max_ops = 0;
    for x in enumerate_lattice_paths_capped(k, cap)? {
        t.absorb(column_violation(&x)?);
        let mut it = ColumnIterator::new(&x)?;
        while it.advance().is_some() {}
        while it.retreat().is_some() {}
        max_ops = max_ops.max(it.max_ops());
        t.check(it.snapshot() == recover_origin(&x)?.origin, || {
            format!("{x}: retreating to the top does not reach the origin")
        });
    }
    t.note = Some(format!("max ops per move {max_ops} <= {COLUMN_OPS_BOUND}"));
    Ok(())
}

fn sawtooth(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    crate::oracle::check_cap(k, cap)?;
    let mut seen = HashSet::new();
    let mut prev: Option<LatticePath> = None;
    for step in sawtooth_enumerate(k) {
        let step = step?;
        if let (Some(d), Some(p)) = (step.delta, &prev) {
            let diff = differing_positions(p, &step.path);
            let mut expected = [d.up_flip, d.down_flip];
            expected.sort_unstable();
            t.check(diff == expected, || {
                format!("column {}: {p} -> {} differs at {diff:?}", step.column, step.path)
            });
            t.check(step.path.flaws()? == d.resulting_flaws, || {
                format!("column {}: {} has wrong flaw count", step.column, step.path)
            });
        }
        let fresh = seen.insert(step.path.clone());
        t.check(fresh, || format!("{} emitted twice", step.path));
        prev = Some(step.path);
    }
    let expected = binomial(2 * k, k)?;
    t.check(seen.len() as u64 == expected, || format!("{} paths emitted, expected {expected}", seen.len()));
    Ok(())
}

fn factor_checks(t: &mut Tally, k: usize, fac: &CycleFactor, len: usize) -> Result<()> {
    let report = verify_factor(fac)?;
    t.check(report.passed(), || format!("{}", report.first_violation.clone().unwrap()));
    let c = catalan(k)?;
    t.check(fac.cycles.len() as u64 == c, || format!("{} cycles, expected {c}", fac.cycles.len()));
    t.check(fac.cycles.iter().all(|cy| cy.len() == len), || format!("cycle length differs from {len}"));
    let order = fac.kind.order(k)?;
    t.check(report.visits == order, || format!("{} visits, graph order {order}", report.visits));
    t.note = Some(if report.coverage_checked {
        format!("{} cycles of length {len}, coverage {}/{order}", fac.cycles.len(), report.visits)
    } else {
        format!("{} cycles of length {len}, coverage not checked above k = 12", fac.cycles.len())
    });
    Ok(())
}

fn odd_graph(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    crate::oracle::check_cap(k, cap)?;
    if k == 0 {
        t.note = Some("requires k >= 1".into());
        return Ok(());
    }
    let c = catalan(k)?;
    t.check((2 * k as u64 + 1) * c == binomial(2 * k + 1, k)?, || "(2k+1)C_k != binomial(2k+1, k)".into());
    let fac = odd_factor(k)?;
    for x0 in enumerate_dyck_paths_capped(k, cap)? {
        let fast = odd_cycle(&x0)?;
        let slow = odd_cycle_by_maps(&x0)?;
        t.check(fast == slow, || format!("cycle of {x0}: {fast} vs literal {slow}"));
        let ground: Vec<u32> = (1..=2 * k as u32).collect();
        let complement = crate::factor::VertexSet::new(
            ground.into_iter().filter(|e| !slow.vertices[0].contains(*e)),
        );
        t.check(slow.vertices[2 * k] == complement, || format!("cycle of {x0} does not end at the complement"));
    }
    factor_checks(t, k, &fac, 2 * k + 1)
}

fn middle_levels(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    crate::oracle::check_cap(k, cap)?;
    if k == 0 {
        t.note = Some("requires k >= 1".into());
        return Ok(());
    }
    let fac = middle_factor(k)?;
    for cy in &fac.cycles {
        let sizes_alternate = cy
            .vertices
            .iter()
            .enumerate()
            .all(|(i, v)| v.len() == if i % 2 == 0 { k } else { k + 1 });
        t.check(sizes_alternate, || format!("cycle {cy} does not alternate sizes"));
        let n = cy.len();
        let nested = (0..n).all(|i| GraphKind::MiddleLevels.adjacent(&cy.vertices[i], &cy.vertices[(i + 1) % n]));
        t.check(nested, || format!("cycle {cy} breaks containment"));
    }
    factor_checks(t, k, &fac, 4 * k + 2)
}

fn classic(t: &mut Tally, k: usize, cap: usize) -> Result<()> {
    let partition = partition_by_flaws(k, cap)?;
    let mut widest = 0;
    for e in 0..k {
        let mut image = HashSet::with_capacity(partition.classes[e].len());
        for x in &partition.classes[e] {
            let y = apply_f_classic(x)?;
            widest = widest.max(hamming(x, &y)?);
            let e2 = y.flaws()?;
            t.check(e2 == e + 1, || format!("f'({x}) = {y} has {e2} flaws"));
            image.insert(y);
        }
        let target: HashSet<_> = partition.classes[e + 1].iter().cloned().collect();
        t.check(image.len() == partition.classes[e].len() && image == target, || {
            format!("f' is not a bijection from class {e} to class {}", e + 1)
        });
    }
    // with 4 steps the swapped parts cannot both be non-empty
    if k >= 3 {
        t.check(widest > 2, || format!("largest change of f' is {widest}"));
    }
    t.note = Some(format!("largest change {widest} positions"));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let ids: HashSet<_> = PROPERTIES.iter().map(|p| p.id).collect();
        assert_eq!(ids.len(), PROPERTIES.len());
        assert!(property("origin").is_some());
        assert!(property("nope").is_none());
    }

    #[test]
    fn suite_passes_small() {
        for k in 0..=4 {
            for out in run_suite(k, 10, 1).unwrap() {
                assert!(out.passed(), "{out}");
            }
        }
    }

    #[test]
    fn parallel_matches_serial() {
        assert_eq!(run_suite(3, 10, 4).unwrap(), run_suite(3, 10, 1).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(property("origin").unwrap().run(5, 4).is_err());
    }

    #[test]
    fn h_g_exclusions_reported() {
        let out = property("h-g-positions").unwrap().run(3, 10).unwrap();
        assert!(out.passed());
        assert!(out.note.unwrap().contains("excluded"));
    }

    #[test]
    fn classic_contrast_widens() {
        let out = property("classic-contrast").unwrap().run(2, 10).unwrap();
        assert!(out.passed(), "{out}");
        assert_eq!(out.note.unwrap(), "largest change 2 positions");
        let out = property("classic-contrast").unwrap().run(3, 10).unwrap();
        assert!(out.passed(), "{out}");
        assert_eq!(out.note.unwrap(), "largest change 6 positions");
    }

    #[test]
    fn per_input_checks() {
        let x: LatticePath = "UUDUDD".parse().unwrap();
        assert_eq!(flip_order_violation(&x).unwrap(), None);
        assert_eq!(subpath_violation(&x).unwrap(), None);
        assert_eq!(column_violation(&"DUUD".parse().unwrap()).unwrap(), None);
        assert_eq!(origin_violation(&"UDUDDU".parse().unwrap()).unwrap(), None);
        assert_eq!(min_change_violation(&"UUDD".parse().unwrap()).unwrap(), None);
    }
}
