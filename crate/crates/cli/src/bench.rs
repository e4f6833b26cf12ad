//! Benchmark harness: every (instance, algorithm) pair, repeated, under a
//! per-run budget.
//!
//! Record columns, in order: `instance_id, n, L_size, algo, repeat, verdict,
//! height, elapsed_ms, states_explored`. `height` is empty unless the verdict
//! is `feasible`. A run that cannot start (for instance the simple solver on
//! a non-simple list) is recorded with verdict `error`.

use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use tangle_core::{
    solve_baseline_with, solve_general_with, solve_simple_with, Algo, BaselineOptions, Budget, GeneralOptions,
    SwapList, Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RunVerdict {
    Feasible,
    Infeasible,
    Timeout,
    Memout,
    Error,
}

impl From<Verdict> for RunVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Feasible => RunVerdict::Feasible,
            Verdict::Infeasible => RunVerdict::Infeasible,
            Verdict::Timeout => RunVerdict::Timeout,
            Verdict::Memout => RunVerdict::Memout,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub instance_id: String,
    pub n: usize,
    #[serde(rename = "L_size")]
    pub l_size: u64,
    pub algo: Algo,
    pub repeat: u32,
    pub verdict: RunVerdict,
    pub height: Option<usize>,
    pub elapsed_ms: f64,
    pub states_explored: u64,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub algos: Vec<Algo>,
    pub budget: Budget,
    pub repeats: u32,
    pub workers: usize,
    /// Deduplicate states in the baseline search.
    pub baseline_dedup: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            algos: vec![Algo::General, Algo::Baseline],
            budget: Budget::unlimited(),
            repeats: 1,
            workers: 1,
            baseline_dedup: true,
        }
    }
}

pub fn run_once(id: &str, list: &SwapList, algo: Algo, repeat: u32, config: &BenchConfig) -> BenchRecord {
    let outcome = match algo {
        Algo::Simple => solve_simple_with(list, config.budget),
        Algo::General => Ok(solve_general_with(list, GeneralOptions { budget: config.budget, ..Default::default() })),
        Algo::Baseline => {
            solve_baseline_with(list, BaselineOptions { budget: config.budget, dedup: config.baseline_dedup })
                .map(|run| run.report)
        }
    };
    let base = BenchRecord {
        instance_id: id.to_string(),
        n: list.n(),
        l_size: list.length(),
        algo,
        repeat,
        verdict: RunVerdict::Error,
        height: None,
        elapsed_ms: 0.0,
        states_explored: 0,
    };
    match outcome {
        Ok(report) => BenchRecord {
            verdict: report.verdict.into(),
            height: report.height(),
            elapsed_ms: report.elapsed.as_secs_f64() * 1e3,
            states_explored: report.states_explored,
            ..base
        },
        Err(_) => base,
    }
}

/// Runs the whole batch and returns records ordered by
/// `(n, L_size, instance_id, algo, repeat)`, whatever the completion order.
pub fn run_bench(instances: &[(String, SwapList)], config: &BenchConfig) -> anyhow::Result<Vec<BenchRecord>> {
    let jobs: Vec<(usize, Algo, u32)> = instances
        .iter()
        .enumerate()
        .flat_map(|(k, _)| config.algos.iter().flat_map(move |&a| (0..config.repeats).map(move |r| (k, a, r))))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(config.workers.max(1)).build()?;
    let mut records: Vec<BenchRecord> = pool.install(|| {
        jobs.par_iter().map(|&(k, algo, r)| run_once(&instances[k].0, &instances[k].1, algo, r, config)).collect()
    });
    records.sort_by(|a, b| {
        (a.n, a.l_size, &a.instance_id, a.algo, a.repeat).cmp(&(b.n, b.l_size, &b.instance_id, b.algo, b.repeat))
    });
    Ok(records)
}

pub fn write_records<W: Write>(records: &[BenchRecord], out: W) -> anyhow::Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_records(text: &str) -> anyhow::Result<Vec<BenchRecord>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    Ok(r.deserialize().collect::<Result<_, _>>()?)
}

/// Arithmetic means over the repeats of each (instance, algorithm).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub instance_id: String,
    pub n: usize,
    #[serde(rename = "L_size")]
    pub l_size: u64,
    pub algo: Algo,
    pub runs: u32,
    /// The common verdict of all runs, or `mixed`.
    pub verdict: String,
    pub height: Option<usize>,
    pub mean_elapsed_ms: f64,
    pub mean_states_explored: f64,
}

pub fn summarize(records: &[BenchRecord]) -> Vec<SummaryRow> {
    let mut groups: BTreeMap<(usize, u64, &str, Algo), Vec<&BenchRecord>> = BTreeMap::new();
    for r in records {
        groups.entry((r.n, r.l_size, &r.instance_id, r.algo)).or_default().push(r);
    }
    groups
        .into_iter()
        .map(|((n, l_size, id, algo), rs)| {
            let k = rs.len() as f64;
            let first = rs[0].verdict;
            let verdict = if rs.iter().all(|r| r.verdict == first) {
                serde_json::to_value(first).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default()
            } else {
                "mixed".into()
            };
            SummaryRow {
                instance_id: id.to_string(),
                n,
                l_size,
                algo,
                runs: rs.len() as u32,
                verdict,
                height: rs.iter().find_map(|r| r.height),
                mean_elapsed_ms: rs.iter().map(|r| r.elapsed_ms).sum::<f64>() / k,
                mean_states_explored: rs.iter().map(|r| r.states_explored as f64).sum::<f64>() / k,
            }
        })
        .collect()
}

pub fn write_summary<W: Write>(rows: &[SummaryRow], out: W) -> anyhow::Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(id: &str, n: usize, s: &str) -> (String, SwapList) {
        (id.into(), SwapList::from_notation(n, s).unwrap())
    }

    #[test]
    fn order_is_deterministic() {
        let instances = vec![inst("b", 4, "12 34"), inst("a", 3, "12 13 23"), inst("c", 3, "13")];
        let config = BenchConfig { repeats: 2, workers: 3, ..Default::default() };
        let records = run_bench(&instances, &config).unwrap();
        assert_eq!(records.len(), 3 * 2 * 2);
        let ids: Vec<&str> = records.iter().map(|r| r.instance_id.as_str()).collect();
        assert_eq!(ids, ["c", "c", "c", "c", "a", "a", "a", "a", "b", "b", "b", "b"]);
        assert_eq!(records[0].algo, Algo::General);
        assert_eq!((records[0].repeat, records[1].repeat), (0, 1));
    }

    #[test]
    fn height_iff_feasible() {
        let instances = vec![inst("e3", 3, "12 13 23"), inst("bad", 3, "13"), inst("twice", 3, "12 12")];
        let config = BenchConfig { algos: vec![Algo::Simple, Algo::General, Algo::Baseline], ..Default::default() };
        for r in run_bench(&instances, &config).unwrap() {
            assert_eq!(r.height.is_some(), r.verdict == RunVerdict::Feasible, "{r:?}");
        }
    }

    #[test]
    fn simple_on_general_list_is_an_error_row() {
        let r = run_once("x", &SwapList::from_notation(3, "12 12").unwrap(), Algo::Simple, 0, &BenchConfig::default());
        assert_eq!(r.verdict, RunVerdict::Error);
    }

    #[test]
    fn csv_round_trip_and_means() {
        let instances = vec![inst("e3", 3, "12 13 23")];
        let records = run_bench(&instances, &BenchConfig { repeats: 3, ..Default::default() }).unwrap();
        let mut buf = Vec::new();
        write_records(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("instance_id,n,L_size,algo,repeat,verdict,height,elapsed_ms,states_explored\n"));
        assert!(!text.contains('\r'));
        assert_eq!(read_records(&text).unwrap(), records);
        let summary = summarize(&records);
        assert_eq!(summary.len(), 2);
        for s in &summary {
            let rows: Vec<&BenchRecord> = records.iter().filter(|r| r.algo == s.algo).collect();
            let mean = rows.iter().map(|r| r.elapsed_ms).sum::<f64>() / rows.len() as f64;
            assert_eq!(s.mean_elapsed_ms, mean);
            assert_eq!(s.runs, 3);
            assert_eq!(s.verdict, "feasible");
            assert_eq!(s.height, Some(4));
        }
    }
}
