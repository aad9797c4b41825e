use std::hint::black_box;
use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use flawshift::verify::PROPERTIES;
use flawshift::{
    apply_f_classic, odd_factor, pi_recursive, recover_origin, run_suite, to_dot, ColumnIterator,
    Encoding, GraphKind, LatticePath, VertexSet,
    DEFAULT_ENUMERATION_CAP,
};

/// Minimum-change Chung-Feller bijection: columns, flip orders and cycle
/// factors.
#[derive(Parser)]
#[command(name = "flawshift", version)]
struct Cli {
    /// Cap on k for exhaustive enumeration.
    #[arg(long, global = true, env = "FLAWSHIFT_MAX_K", default_value_t = DEFAULT_ENUMERATION_CAP)]
    max_k: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct StreamFlags {
    /// Print "up down" flip positions instead of full paths.
    #[arg(long)]
    delta: bool,
    /// Write paths as 1/0 instead of U/D.
    #[arg(long)]
    bits: bool,
}

impl StreamFlags {
    fn encoding(self) -> Encoding {
        if self.bits {
            Encoding::Bits
        } else {
            Encoding::Letters
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print x, f(x), f^2(x), ... down to the last flaw class.
    Column {
        /// Path as U/D or 1/0 letters; `-` reads it from standard input.
        path: String,
        #[command(flatten)]
        flags: StreamFlags,
    },
    /// Print every path with 2k steps in saw-tooth order.
    Grid {
        k: usize,
        #[command(flatten)]
        flags: StreamFlags,
    },
    /// Print the flip order of a Dyck path without flaws.
    Pi { path: String },
    /// Print the flip sets and the zero-flaw origin of a path.
    Origin {
        path: String,
        /// Write the origin as 1/0 instead of U/D.
        #[arg(long)]
        bits: bool,
    },
    /// Print the cycle factor of the odd graph, one cycle per line.
    Oddfactor {
        k: usize,
        /// Emit a Graphviz description instead.
        #[arg(long)]
        dot: bool,
    },
    /// Print the cycle factor of the middle levels graph, one cycle per line.
    Middlefactor {
        k: usize,
        /// Emit a Graphviz description instead.
        #[arg(long)]
        dot: bool,
    },
    /// Run the property suite and print one row per property.
    Verify {
        k: usize,
        /// Run every k from 1 up to the given one.
        #[arg(long)]
        sweep: bool,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Time column generation against the classic bijection.
    Bench { k: usize, reps: usize },
}

/// Step budget for timing the classic bijection, whose applications each
/// cost O(k); at most k applications are timed per rep.
const CLASSIC_WORK: usize = 10_000_000;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<io::Error>())
        .any(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

/// Parses a path argument; `-` reads the path from standard input.
fn parse_path(text: &str) -> Result<LatticePath> {
    if text == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("cannot read standard input")?;
        return LatticePath::parse(buf.trim()).context("cannot read path from standard input");
    }
    LatticePath::parse(text).with_context(|| format!("cannot read path {text:?}"))
}

fn check_k(k: usize, cap: usize, min: usize) -> Result<()> {
    if k < min {
        bail!("k must be at least {min}");
    }
    if k > cap {
        bail!("k = {k} exceeds the enumeration cap {cap}; raise it with --max-k or FLAWSHIFT_MAX_K");
    }
    Ok(())
}

/// Returns whether the command succeeded in the sense of its exit status.
fn run(cli: &Cli, out: &mut impl Write) -> Result<bool> {
    match &cli.command {
        Command::Column { path, flags } => column(&parse_path(path)?, *flags, out)?,
        Command::Grid { k, flags } => {
            check_k(*k, cli.max_k, 0)?;
            grid(*k, *flags, out)?
        }
        Command::Pi { path } => writeln!(out, "{}", pi_recursive(&parse_path(path)?)?)?,
        Command::Origin { path, bits } => origin(&parse_path(path)?, *bits, out)?,
        Command::Oddfactor { k, dot } => {
            check_k(*k, cli.max_k, 1)?;
            factor(GraphKind::Odd, *k, *dot, out)?
        }
        Command::Middlefactor { k, dot } => {
            check_k(*k, cli.max_k, 1)?;
            factor(GraphKind::MiddleLevels, *k, *dot, out)?
        }
        Command::Verify { k, sweep, jobs } => {
            check_k(*k, cli.max_k, 0)?;
            return verify(*k, *sweep, *jobs, cli.max_k, out);
        }
        Command::Bench { k, reps } => {
            if *k == 0 || *reps == 0 {
                bail!("bench needs k >= 1 and reps >= 1");
            }
            bench(*k, *reps, out)?
        }
    }
    Ok(true)
}

fn column(x: &LatticePath, flags: StreamFlags, out: &mut impl Write) -> Result<()> {
    let mut it = ColumnIterator::new(x)?;
    let encoding = flags.encoding();
    writeln!(out, "{}", x.format(encoding))?;
    while let Some(d) = it.advance() {
        if flags.delta {
            writeln!(out, "{} {}", d.up_flip, d.down_flip)?;
        } else {
            writeln!(out, "{}", it.format(encoding))?;
        }
    }
    Ok(())
}

fn grid(k: usize, flags: StreamFlags, out: &mut impl Write) -> Result<()> {
    let encoding = flags.encoding();
    for step in flawshift::sawtooth_enumerate(k) {
        let step = step?;
        match step.delta {
            Some(d) if flags.delta => writeln!(out, "{} {}", d.up_flip, d.down_flip)?,
            _ => writeln!(out, "{}", step.path.format(encoding))?,
        }
    }
    Ok(())
}

fn origin(x: &LatticePath, bits: bool, out: &mut impl Write) -> Result<()> {
    let w = recover_origin(x)?;
    let set = |s: &[usize]| VertexSet::new(s.iter().map(|&i| i as u32));
    writeln!(out, "up {}", set(&w.up_set))?;
    writeln!(out, "down {}", set(&w.down_set))?;
    let encoding = if bits { Encoding::Bits } else { Encoding::Letters };
    writeln!(out, "origin {}", w.origin.format(encoding))?;
    Ok(())
}

fn factor(kind: GraphKind, k: usize, dot: bool, out: &mut impl Write) -> Result<()> {
    if dot {
        let fac = match kind {
            GraphKind::Odd => odd_factor(k)?,
            GraphKind::MiddleLevels => flawshift::middle_factor(k)?,
        };
        write!(out, "{}", to_dot(&fac))?;
        return Ok(());
    }
    match kind {
        GraphKind::Odd => {
            for c in flawshift::factor::odd_cycles(k)? {
                writeln!(out, "{c}")?;
            }
        }
        GraphKind::MiddleLevels => {
            for c in flawshift::factor::middle_cycles(k)? {
                writeln!(out, "{c}")?;
            }
        }
    }
    Ok(())
}

fn verify(k: usize, sweep: bool, jobs: usize, cap: usize, out: &mut impl Write) -> Result<bool> {
    let ks: Vec<usize> = if sweep { (1..=k).collect() } else { vec![k] };
    let mut all = true;
    for k in ks {
        let start = Instant::now();
        let rows = run_suite(k, cap, jobs)?;
        let failed = rows.iter().filter(|r| !r.passed()).count();
        for row in &rows {
            writeln!(out, "{row}")?;
        }
        writeln!(
            out,
            "k={k}: {}/{} properties pass in {:.3}s",
            rows.len() - failed,
            PROPERTIES.len(),
            start.elapsed().as_secs_f64()
        )?;
        all &= failed == 0;
    }
    Ok(all)
}

struct Summary {
    min: f64,
    median: f64,
    max: f64,
}

fn summarize(mut v: Vec<f64>) -> Summary {
    v.sort_by(f64::total_cmp);
    Summary { min: v[0], median: v[v.len() / 2], max: v[v.len() - 1] }
}

fn emit(out: &mut impl Write, name: &str, s: &Summary) -> io::Result<()> {
    writeln!(out, "{name}_min {:.3}", s.min)?;
    writeln!(out, "{name}_median {:.3}", s.median)?;
    writeln!(out, "{name}_max {:.3}", s.max)
}

fn bench(k: usize, reps: usize, out: &mut impl Write) -> Result<()> {
    let top = LatticePath::nested(k);
    let mut init_ms = Vec::with_capacity(reps);
    let mut yield_ns = Vec::with_capacity(reps);
    let mut max_ops = 0;
    for _ in 0..reps {
        let t = Instant::now();
        let mut it = ColumnIterator::new(black_box(&top))?;
        init_ms.push(t.elapsed().as_secs_f64() * 1e3);
        let t = Instant::now();
        let mut yields = 0usize;
        while let Some(d) = it.advance() {
            black_box(d);
            yields += 1;
        }
        yield_ns.push(t.elapsed().as_secs_f64() * 1e9 / yields as f64);
        max_ops = max_ops.max(it.max_ops());
    }
    let steps = (CLASSIC_WORK / k).clamp(1, k);
    let mut classic_ns = Vec::with_capacity(reps);
    for _ in 0..reps {
        let mut cur = top.clone();
        let t = Instant::now();
        for _ in 0..steps {
            cur = apply_f_classic(black_box(&cur))?;
        }
        classic_ns.push(t.elapsed().as_secs_f64() * 1e9 / steps as f64);
    }
    writeln!(out, "k {k}")?;
    writeln!(out, "reps {reps}")?;
    emit(out, "init_ms", &summarize(init_ms))?;
    emit(out, "yield_ns", &summarize(yield_ns))?;
    writeln!(out, "yield_ops_max {max_ops}")?;
    writeln!(out, "classic_steps {steps}")?;
    emit(out, "classic_ns", &summarize(classic_ns))?;
    Ok(())
}

