//! Command-line front end for `oddcolor-core`.
//!
//! `color` routes by k: trees go to the exact oracle with 3 colors, 2- and
//! 3-trees to their constructive colorings, k in 4..=6 to the oracle with
//! `min(2k+1, k+2⌊log₂k⌋+3)` colors, and k ≥ 7 to the k-tree reduction.
//! Every coloring is verified before it is written.

use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;
use std::time::Instant;

use oddcolor_core::graph::floor_log2;
use oddcolor_core::oracle::{
    canonical_form, enumerate_small_ktrees, exists_odd_coloring, odd_chromatic_exact, probe_instance,
    probe_instances, random_ktree, ExactResult, GenSpec, ProbeMode, ProbeReport, SearchConfig, SearchOutcome,
};
use oddcolor_core::{good_addition_ordering, ktree, recognize_ktree, threetree, twotree, verify_odd, verify_proper};
use oddcolor_core::{Coloring, Error, Graph};
use serde::Serialize;

pub mod args;
pub mod format;

pub use args::{Cli, Command};
use format::{ordering_line, parse_coloring, parse_graph, write_graph};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("input: {0}")]
    Format(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Format(_) | CliError::Io(_) => 2,
            CliError::Core(e) if e.is_internal() => 3,
            CliError::Core(Error::NotKTree { .. } | Error::TooSmall { .. }) => 1,
            CliError::Core(_) => 2,
        }
    }
}

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    /// NOT-K-TREE, INFEASIBLE, or a failed verification.
    Negative,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::Negative => 1,
        }
    }
}

/// How `color` handles a given k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Twotree,
    Threetree,
    Ktree,
}

/// Routed method and the palette it guarantees.
pub fn route(k: usize) -> (Method, u32) {
    let k32 = k as u32;
    match k {
        0 | 1 => (Method::Oracle, 3),
        2 => (Method::Twotree, 4),
        3 => (Method::Threetree, 5),
        4..=6 => (Method::Oracle, (2 * k32 + 1).min(k32 + 2 * floor_log2(k) as u32 + 3)),
        _ => (Method::Ktree, ktree::ColorBudget::new(k).palette as u32),
    }
}

/// The unique k with `m = k(k+1)/2 + (n-k-1)k`, if any.
pub fn edge_count_k(n: usize, m: usize) -> Option<usize> {
    (1..n).find(|&k| k * (k + 1) / 2 + (n - k - 1) * k == m)
}

/// Reads the input (file or stdin), runs the command and writes its output.
pub fn run(cli: &Cli) -> Result<Status, CliError> {
    let mut out = String::new();
    let status = execute(cli, &mut || read_input(&cli.input), &mut out)?;
    match &cli.output {
        Some(p) => std::fs::write(p, &out)?,
        None => print!("{out}"),
    }
    Ok(status)
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))
    }
}

/// Runs `cli` with `input` supplying the graph text; output goes to `out`.
pub fn execute(
    cli: &Cli,
    input: &mut dyn FnMut() -> Result<String, CliError>,
    out: &mut String,
) -> Result<Status, CliError> {
    let mut graph = || -> Result<Graph, CliError> {
        let (g, dup) = parse_graph(&input()?)?;
        if dup {
            eprintln!("warning: duplicate edges collapsed");
        }
        Ok(g)
    };
    match &cli.command {
        Command::Recognize => recognize(&graph()?, cli.k, out),
        Command::Order => order(&graph()?, cli.k, out),
        Command::Color { node_budget } => color(&graph()?, cli, *node_budget, out),
        Command::Verify { coloring } => verify(&graph()?, coloring, out),
        Command::Oracle { max_colors, node_budget, no_symmetry_breaking } => {
            let cfg = SearchConfig {
                max_colors: max_colors.or(cli.palette).unwrap_or(SearchConfig::default().max_colors),
                node_budget: *node_budget,
                symmetry_breaking: !no_symmetry_breaking,
            };
            oracle(&graph()?, &cfg, out)
        }
        Command::Random { n, bias } => {
            let k = need_k(cli, "random")?;
            let (g, _) = random_ktree(&GenSpec { n: *n, k, seed: cli.seed, attachment_bias: *bias })?;
            let _ = writeln!(out, "# random {k}-tree n={n} seed={} bias={bias}", cli.seed);
            write_graph(&g, out);
            Ok(Status::Success)
        }
        Command::Enumerate { n } => {
            let k = need_k(cli, "enumerate")?;
            for (i, g) in enumerate_small_ktrees(*n, k).iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                let _ = writeln!(out, "# {i} {}", canonical_form(g).to_text());
                write_graph(g, out);
            }
            Ok(Status::Success)
        }
        Command::Probe { n_max, trials, bias, node_budget, workers } => {
            let k = need_k(cli, "probe")?;
            let mode = match trials {
                Some(t) => ProbeMode::Sampled { trials: *t, seed: cli.seed, attachment_bias: *bias },
                None => ProbeMode::Exhaustive,
            };
            let cfg = SearchConfig { node_budget: *node_budget, ..SearchConfig::default() };
            probe(k, *n_max, mode, &cfg, *workers, out)
        }
        Command::Bench { ks, sizes, trials, workers } => bench(ks, sizes, *trials, cli.seed, *workers, out),
    }
}

fn need_k(cli: &Cli, cmd: &str) -> Result<usize, CliError> {
    match cli.k {
        Some(k) if k >= 1 => Ok(k),
        Some(_) => Err(CliError::Usage(format!("{cmd}: --k must be at least 1"))),
        None => Err(CliError::Usage(format!("{cmd}: --k is required"))),
    }
}

/// Given or detected k, with recognition; `Err(reason)` when not a k-tree.
fn ktree_k(g: &Graph, k: Option<usize>) -> Result<Result<usize, String>, CliError> {
    let k = match k.or_else(|| edge_count_k(g.order(), g.edge_count())) {
        Some(k) => k,
        None => return Ok(Err(format!("{} edges on {} vertices fits no k", g.edge_count(), g.order()))),
    };
    if k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    match recognize_ktree(g, k) {
        Ok(_) => Ok(Ok(k)),
        Err(e @ (Error::NotKTree { .. } | Error::TooSmall { .. })) => Ok(Err(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn recognize(g: &Graph, k: Option<usize>, out: &mut String) -> Result<Status, CliError> {
    match ktree_k(g, k)? {
        Ok(k) => {
            let ord = recognize_ktree(g, k)?;
            let _ = writeln!(out, "K-TREE {k}");
            let _ = writeln!(out, "{}", ordering_line(ord.order()));
            Ok(Status::Success)
        }
        Err(reason) => {
            let _ = writeln!(out, "NOT-K-TREE {reason}");
            Ok(Status::Negative)
        }
    }
}

fn order(g: &Graph, k: Option<usize>, out: &mut String) -> Result<Status, CliError> {
    match ktree_k(g, k)? {
        Ok(k) => {
            let ord = good_addition_ordering(g, k)?;
            let _ = writeln!(out, "{}", ordering_line(ord.order()));
            Ok(Status::Success)
        }
        Err(reason) => {
            let _ = writeln!(out, "NOT-K-TREE {reason}");
            Ok(Status::Negative)
        }
    }
}

#[derive(Serialize)]
struct ColorReport<'a> {
    k: usize,
    method: Method,
    status: &'static str,
    palette: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    colors: Option<&'a [u32]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    colors_used: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<serde_json::Value>,
}

/// Result of the routed coloring step.
pub struct Colored {
    pub method: Method,
    pub palette: u32,
    pub outcome: Result<Coloring, &'static str>,
    pub trace: Option<serde_json::Value>,
}

fn to_value<T: Serialize>(t: &T) -> serde_json::Value {
    serde_json::to_value(t).expect("traces serialize")
}

/// Colors a k-tree by the routing table, or by the oracle with `palette`.
pub fn color_routed(g: &Graph, k: usize, palette: Option<u32>, node_budget: Option<u64>) -> Result<Colored, CliError> {
    let (method, bound) = match palette {
        Some(p) => (Method::Oracle, p),
        None => route(k),
    };
    let (outcome, trace) = match method {
        Method::Oracle => {
            let cfg = SearchConfig { node_budget, ..SearchConfig::default() };
            match exists_odd_coloring(g, bound, &cfg) {
                SearchOutcome::Feasible(c) => (Ok(c), None),
                SearchOutcome::Infeasible => (Err("infeasible"), None),
                SearchOutcome::BudgetExceeded => (Err("budget-exceeded"), None),
            }
        }
        Method::Twotree => {
            let (c, t) = twotree::color_2tree_traced(g)?;
            (Ok(c), Some(to_value(&t)))
        }
        Method::Threetree => {
            let (c, t) = threetree::color_3tree_traced(g)?;
            (Ok(c), Some(to_value(&t)))
        }
        Method::Ktree => {
            let (c, t) = ktree::color_ktree_traced(g, k)?;
            (Ok(c), Some(to_value(&t)))
        }
    };
    Ok(Colored { method, palette: bound, outcome, trace })
}

fn color(g: &Graph, cli: &Cli, node_budget: Option<u64>, out: &mut String) -> Result<Status, CliError> {
    let k = match ktree_k(g, cli.k)? {
        Ok(k) => k,
        Err(reason) => {
            let _ = writeln!(out, "NOT-K-TREE {reason}");
            return Ok(Status::Negative);
        }
    };
    let colored = color_routed(g, k, cli.palette, node_budget)?;
    let mut report = ColorReport {
        k,
        method: colored.method,
        status: "ok",
        palette: colored.palette,
        colors: None,
        colors_used: None,
        verified: None,
        trace: if cli.trace { colored.trace } else { None },
    };
    let status = match &colored.outcome {
        Ok(c) => {
            let odd = verify_odd(g, c).map(|r| r.all_odd).unwrap_or(false);
            if !odd || c.colors().iter().any(|&x| x > colored.palette) {
                return Err(Error::Internal(format!("{:?} produced a coloring that fails verification", colored.method)).into());
            }
            report.colors = Some(c.colors());
            report.colors_used = Some(c.distinct_colors());
            report.verified = Some(true);
            Status::Success
        }
        Err(s) => {
            report.status = s;
            Status::Negative
        }
    };
    out.push_str(&serde_json::to_string_pretty(&report).expect("report serializes"));
    out.push('\n');
    Ok(status)
}

#[derive(Serialize)]
struct VerifyReport {
    proper: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    conflict: Option<(usize, usize)>,
    odd: bool,
    failing: Vec<usize>,
}

fn verify(g: &Graph, path: &Path, out: &mut String) -> Result<Status, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let c = parse_coloring(&text)?;
    let report = match verify_proper(g, &c)? {
        Some(edge) => VerifyReport { proper: false, conflict: Some(edge), odd: false, failing: Vec::new() },
        None => {
            let r = verify_odd(g, &c)?;
            VerifyReport { proper: true, conflict: None, odd: r.all_odd, failing: r.failing() }
        }
    };
    out.push_str(&serde_json::to_string_pretty(&report).expect("report serializes"));
    out.push('\n');
    Ok(if report.proper && report.odd { Status::Success } else { Status::Negative })
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
enum OracleReport<'a> {
    Exact { chi: u32, colors: &'a [u32] },
    /// No odd coloring with at most `max_colors` colors.
    Infeasible { max_colors: u32 },
    /// Budget ran out: `lo <= chi <= hi`.
    Interval { lo: u32, hi: Option<u32>, colors: Option<&'a [u32]> },
}

fn oracle(g: &Graph, cfg: &SearchConfig, out: &mut String) -> Result<Status, CliError> {
    if g.order() == 0 {
        return Err(CliError::Usage("oracle: empty graph".into()));
    }
    let res = odd_chromatic_exact(g, cfg);
    let (report, status) = match &res {
        ExactResult::Known { chi, witness } => (OracleReport::Exact { chi: *chi, colors: witness.colors() }, Status::Success),
        ExactResult::Interval { lo, hi: None, .. } if *lo > cfg.max_colors => {
            (OracleReport::Infeasible { max_colors: cfg.max_colors }, Status::Negative)
        }
        ExactResult::Interval { lo, hi, witness } => (
            OracleReport::Interval { lo: *lo, hi: *hi, colors: witness.as_ref().map(|w| w.colors()) },
            if hi.is_some() { Status::Success } else { Status::Negative },
        ),
    };
    out.push_str(&serde_json::to_string_pretty(&report).expect("report serializes"));
    out.push('\n');
    Ok(status)
}

/// Runs `f` over `0..jobs` on `workers` threads; results in index order.
fn parallel<T: Send>(jobs: usize, workers: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    let workers = workers.clamp(1, jobs.max(1));
    let mut slots: Vec<Option<T>> = (0..jobs).map(|_| None).collect();
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let f = &f;
                s.spawn(move || (w..jobs).step_by(workers).map(|i| (i, f(i))).collect::<Vec<_>>())
            })
            .collect();
        for h in handles {
            for (i, t) in h.join().expect("worker panicked") {
                slots[i] = Some(t);
            }
        }
    });
    slots.into_iter().map(|t| t.expect("every job ran")).collect()
}

fn probe(k: usize, n_max: usize, mode: ProbeMode, cfg: &SearchConfig, workers: usize, out: &mut String) -> Result<Status, CliError> {
    let inst = probe_instances(k, n_max, mode);
    let results = parallel(inst.len(), workers, |i| probe_instance(&inst[i].0, k, inst[i].1, cfg));
    let report = ProbeReport::new(k, n_max, results);
    out.push_str(&serde_json::to_string_pretty(&report).expect("report serializes"));
    out.push('\n');
    Ok(if report.counterexamples.is_empty() { Status::Success } else { Status::Negative })
}

fn bench(ks: &[usize], sizes: &[usize], trials: usize, seed: u64, workers: usize, out: &mut String) -> Result<Status, CliError> {
    let mut jobs = Vec::new();
    for &k in ks {
        for &n in sizes.iter().filter(|&&n| n > k) {
            for t in 0..trials {
                jobs.push((k, n, seed.wrapping_add(t as u64)));
            }
        }
    }
    let rows = parallel(jobs.len(), workers, |i| -> Result<String, CliError> {
        let (k, n, s) = jobs[i];
        let (g, _) = random_ktree(&GenSpec::new(n, k, s))?;
        let start = Instant::now();
        let colored = color_routed(&g, k, None, None)?;
        let micros = start.elapsed().as_micros();
        let c = colored.outcome.map_err(|e| Error::Internal(format!("bench k={k} n={n} seed={s}: {e}")))?;
        let ok = verify_odd(&g, &c).map(|r| r.all_odd).unwrap_or(false);
        if !ok {
            return Err(Error::Internal(format!("bench k={k} n={n} seed={s}: coloring fails verification")).into());
        }
        let m = serde_json::to_value(colored.method).expect("method serializes");
        Ok(format!(
            "{k},{n},{s},{},{},{},{micros}",
            m.as_str().unwrap_or(""),
            colored.palette,
            c.distinct_colors()
        ))
    });
    out.push_str("k,n,seed,method,palette,colors_used,micros\n");
    for r in rows {
        out.push_str(&r?);
        out.push('\n');
    }
    Ok(Status::Success)
}
