//! Subcommand bodies. Each returns the process exit status; errors that
//! escape are input errors if they are [`InputError`], anything else otherwise.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use serde_json::json;
use tangle_core::feasibility::{decide, verify_conjecture};
use tangle_core::instances::{gen_e, gen_hardness, gen_ln, gen_random, ThreePartitionInstance};
use tangle_core::render::{render, Format, RenderSpec};
use tangle_core::{
    is_consistent_from_identity, solve_baseline_with, solve_general_with, solve_simple_with, Algo, BaselineOptions,
    Budget, GeneralOptions, SolveReport, SwapList, Verdict,
};

use crate::bench::{run_bench, summarize, write_records, write_summary, BenchConfig};
use crate::formats::{parse_list, parse_tangle, tangle_value, write_list, write_list_matrix, write_tangle, InputError};

/// Process exit statuses.
pub mod exit {
    /// Success: feasible, consistent, conjecture holds, file written.
    pub const OK: u8 = 0;
    /// A negative answer: infeasible, inconsistent, separable, counterexample found.
    pub const NEGATIVE: u8 = 1;
    pub const TIMEOUT: u8 = 2;
    pub const MEMOUT: u8 = 3;
    /// Unreadable or malformed input, or bad arguments.
    pub const INPUT: u8 = 4;
    pub const OTHER: u8 = 5;
}

pub fn verdict_status(v: Verdict) -> u8 {
    match v {
        Verdict::Feasible => exit::OK,
        Verdict::Infeasible => exit::NEGATIVE,
        Verdict::Timeout => exit::TIMEOUT,
        Verdict::Memout => exit::MEMOUT,
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())).into())
}

pub fn read_list(path: &Path) -> anyhow::Result<SwapList> {
    let text = read(path)?;
    parse_list(&text).map_err(|e| InputError(format!("{}: {}", path.display(), e.0)).into())
}

fn emit(output: Option<&Path>, text: &str, stdout: &mut dyn Write) -> anyhow::Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

pub fn solve(list: &SwapList, algo: Algo, budget: Budget) -> anyhow::Result<SolveReport> {
    Ok(match algo {
        Algo::Simple => solve_simple_with(list, budget)?,
        Algo::General => solve_general_with(list, GeneralOptions { budget, ..Default::default() }),
        Algo::Baseline => solve_baseline_with(list, BaselineOptions { budget, dedup: true })?.report,
    })
}

pub struct SolveArgs {
    pub input: PathBuf,
    pub algo: Algo,
    pub budget: Budget,
    /// Where to write the tangle file; the report always goes to stdout.
    pub output: Option<PathBuf>,
}

pub fn cmd_solve(args: &SolveArgs, stdout: &mut dyn Write) -> anyhow::Result<u8> {
    let list = read_list(&args.input)?;
    let report = solve(&list, args.algo, args.budget)?;
    if let (Some(path), Some(t)) = (&args.output, &report.tangle) {
        fs::write(path, write_tangle(t)).with_context(|| format!("writing {}", path.display()))?;
    }
    let doc = json!({
        "algo": report.algo,
        "verdict": report.verdict,
        "height": report.height(),
        "states_explored": report.states_explored,
        "elapsed_ms": report.elapsed.as_secs_f64() * 1e3,
        "tangle": report.tangle.as_ref().map(tangle_value),
    });
    writeln!(stdout, "{doc}")?;
    Ok(verdict_status(report.verdict))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Consistency,
    Feasibility,
    NonSeparability,
}

pub fn cmd_check(input: &Path, mode: CheckMode, stdout: &mut dyn Write) -> anyhow::Result<u8> {
    let list = read_list(input)?;
    let (ok, yes, no) = match mode {
        CheckMode::Consistency => (is_consistent_from_identity(&list), "consistent", "inconsistent"),
        CheckMode::Feasibility => (decide(&list).feasible, "feasible", "infeasible"),
        CheckMode::NonSeparability => (list.is_non_separable(), "non-separable", "separable"),
    };
    writeln!(stdout, "{}", if ok { yes } else { no })?;
    Ok(if ok { exit::OK } else { exit::NEGATIVE })
}

#[derive(Debug, Clone)]
pub enum Family {
    Ln {
        n: usize,
    },
    E {
        n: usize,
    },
    Random {
        n: usize,
        total: u64,
        seed: u64,
        max_rounds: usize,
    },
    /// Either explicit 3-Partition values or a seeded yes-instance.
    Hardness {
        values: Option<Vec<u64>>,
        m: usize,
        target: u64,
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListFormat {
    Json,
    Matrix,
}

pub fn generate(family: &Family) -> anyhow::Result<SwapList> {
    let bad = |e: tangle_core::TangleError| anyhow::Error::from(InputError(e.to_string()));
    Ok(match family {
        Family::Ln { n } => gen_ln(*n).map_err(bad)?,
        Family::E { n } => gen_e(*n).map_err(bad)?,
        Family::Random { n, total, seed, max_rounds } => gen_random(*n, *total, *seed, *max_rounds)?,
        Family::Hardness { values, m, target, seed } => {
            let inst = match values {
                Some(v) => ThreePartitionInstance::new(v.clone(), false).map_err(bad)?,
                None => ThreePartitionInstance::random_yes(*m, *target, *seed).map_err(bad)?,
            };
            gen_hardness(&inst)?.list
        }
    })
}

pub fn cmd_gen(
    family: &Family,
    format: ListFormat,
    output: Option<&Path>,
    stdout: &mut dyn Write,
) -> anyhow::Result<u8> {
    let list = generate(family)?;
    let text = match format {
        ListFormat::Json => write_list(&list),
        ListFormat::Matrix => write_list_matrix(&list),
    };
    emit(output, &text, stdout)?;
    Ok(exit::OK)
}

pub fn cmd_render(
    input: &Path,
    spec: &RenderSpec,
    output: Option<&Path>,
    stdout: &mut dyn Write,
) -> anyhow::Result<u8> {
    let text = read(input)?;
    let tangle = parse_tangle(&text).map_err(|e| InputError(format!("{}: {}", input.display(), e.0)))?;
    let drawing = render(&tangle, spec).map_err(|e| InputError(e.to_string()))?;
    emit(output, &drawing, stdout)?;
    Ok(exit::OK)
}

pub fn default_spec(format: Format) -> RenderSpec {
    match format {
        Format::Svg => RenderSpec::svg(),
        Format::Ascii => RenderSpec::ascii(),
    }
}

/// List files in `dir` (`*.json`, `*.txt`, `*.list`), sorted by name; the
/// instance id is the file stem.
pub fn load_instances(dir: &Path) -> anyhow::Result<Vec<(String, SwapList)>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| InputError(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && matches!(p.extension().and_then(|e| e.to_str()), Some("json" | "txt" | "list")))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let id = p.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_string();
            Ok((id, read_list(p)?))
        })
        .collect()
}

pub struct BenchArgs {
    pub input: PathBuf,
    pub config: BenchConfig,
    pub output: Option<PathBuf>,
    pub summary: Option<PathBuf>,
}

/// Records go to `output` (or stdout); the summary goes to `summary` (or
/// stderr).
pub fn cmd_bench(args: &BenchArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<u8> {
    let instances = load_instances(&args.input)?;
    let records = run_bench(&instances, &args.config)?;
    let mut buf = Vec::new();
    write_records(&records, &mut buf)?;
    emit(args.output.as_deref(), std::str::from_utf8(&buf)?, stdout)?;
    let mut buf = Vec::new();
    write_summary(&summarize(&records), &mut buf)?;
    match &args.summary {
        Some(p) => fs::write(p, &buf).with_context(|| format!("writing {}", p.display()))?,
        None => stderr.write_all(&buf)?,
    }
    Ok(exit::OK)
}

pub fn cmd_verify_conjecture(
    n: usize,
    bound: u32,
    workers: usize,
    output: Option<&Path>,
    stdout: &mut dyn Write,
) -> anyhow::Result<u8> {
    let report = verify_conjecture(n, bound, workers).map_err(|e| InputError(e.to_string()))?;
    let doc = json!({
        "n": report.n,
        "entry_bound": report.entry_bound,
        "lists_enumerated": report.lists_enumerated,
        "separable": report.separable,
        "checked": report.checked,
        "counterexamples": report.counterexamples.iter().map(|l| serde_json::from_str::<serde_json::Value>(&write_list(l)).expect("own output")).collect::<Vec<_>>(),
        "holds": report.holds(),
    });
    emit(output, &format!("{doc}\n"), stdout)?;
    Ok(if report.holds() { exit::OK } else { exit::NEGATIVE })
}

/// Maps an escaped error to its exit status.
pub fn error_status(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<InputError>().is_some() {
        exit::INPUT
    } else {
        exit::OTHER
    }
}
