use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use proptest::prelude::*;
use tangle_cli::bench::read_records;
use tangle_cli::{exit, parse_list, parse_tangle, write_list, write_list_matrix, write_tangle};
use tangle_core::feasibility::connect_wang;
use tangle_core::{Permutation, SwapList};

fn tangle(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tangle")).args(args).current_dir(dir).output().unwrap()
}

fn code(o: &Output) -> u8 {
    o.status.code().unwrap() as u8
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_l5_reports_height_11() {
    let dir = tempfile::tempdir().unwrap();
    let gen = tangle(&["gen", "--family", "ln", "--n", "5", "--output", "l5.json"], dir.path());
    assert_eq!(code(&gen), exit::OK);
    for algo in ["general", "baseline"] {
        let out = tangle(&["solve", "--input", "l5.json", "--algo", algo, "--output", "t.json"], dir.path());
        assert_eq!(code(&out), exit::OK);
        let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(report["height"], 11);
        assert_eq!(report["verdict"], "feasible");
        let t = parse_tangle(&fs::read_to_string(dir.path().join("t.json")).unwrap()).unwrap();
        assert_eq!(t.height(), 11);
    }
}

#[test]
fn solve_statuses() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.json"), r#"{"n":3,"swaps":[[1,3,1]]}"#).unwrap();
    fs::write(dir.path().join("empty.json"), r#"{"n":4,"swaps":[]}"#).unwrap();
    fs::write(dir.path().join("broken.json"), "{\"n\":3,\n\"swaps\":[[1,3]]}").unwrap();

    assert_eq!(code(&tangle(&["solve", "--input", "bad.json"], dir.path())), exit::NEGATIVE);

    let out = tangle(&["solve", "--input", "empty.json"], dir.path());
    assert_eq!(code(&out), exit::OK);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["height"], 1);

    let out = tangle(&["solve", "--input", "broken.json"], dir.path());
    assert_eq!(code(&out), exit::INPUT);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    assert_eq!(code(&tangle(&["solve", "--input", "missing.json"], dir.path())), exit::INPUT);
    assert_eq!(code(&tangle(&["solve", "--input", "empty.json", "--algo", "nope"], dir.path())), exit::INPUT);

    tangle(&["gen", "--family", "ln", "--n", "7", "--output", "l7.json"], dir.path());
    let out = tangle(&["solve", "--input", "l7.json", "--algo", "baseline", "--mem-limit", "0"], dir.path());
    assert_eq!(code(&out), exit::MEMOUT);
    let out = tangle(&["solve", "--input", "l7.json", "--algo", "baseline", "--time-limit", "0"], dir.path());
    assert_eq!(code(&out), exit::TIMEOUT);
}

#[test]
fn check_modes() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("{\"n\":3,\"swaps\":[[1,2,1],[1,3,1],[2,3,1]]}", "consistency", "consistent", exit::OK),
        ("{\"n\":3,\"swaps\":[[1,3,2]]}", "feasibility", "infeasible", exit::NEGATIVE),
        ("{\"n\":3,\"swaps\":[[1,3,2]]}", "non-separability", "separable", exit::NEGATIVE),
        ("{\"n\":3,\"swaps\":[[1,2,1],[2,3,1]]}", "non-separability", "non-separable", exit::OK),
    ];
    for (k, (list, mode, word, status)) in cases.iter().enumerate() {
        let file = format!("c{k}.json");
        fs::write(dir.path().join(&file), list).unwrap();
        let out = tangle(&["check", "--input", &file, "--mode", mode], dir.path());
        assert_eq!(stdout(&out).trim(), *word, "{list} {mode}");
        assert_eq!(code(&out), *status);
    }
}

#[test]
fn gen_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["gen", "--family", "random", "--n", "5", "--total", "8", "--seed", "1"];
    let a = stdout(&tangle(&args, dir.path()));
    assert_eq!(a, stdout(&tangle(&args, dir.path())));
    let list = parse_list(&a).unwrap();
    assert_eq!(list.length(), 8);
    let e3 = parse_list(&stdout(&tangle(&["gen", "--family", "e", "--n", "3"], dir.path()))).unwrap();
    assert_eq!(e3, SwapList::from_notation(3, "12 13 23").unwrap());
    let h = tangle(&["gen", "--family", "hardness", "--values", "7,7,6", "--format", "matrix"], dir.path());
    assert_eq!(code(&h), exit::OK);
    assert_eq!(parse_list(&stdout(&h)).unwrap().n(), 14);
    assert_eq!(code(&tangle(&["gen", "--family", "ln", "--n", "3"], dir.path())), exit::INPUT);
}

#[test]
fn render_outputs() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("t.json"), r#"{"n":2,"rows":[[1,2],[2,1]]}"#).unwrap();
    let out =
        tangle(&["render", "--input", "t.json", "--format", "ascii", "--column-width", "1", "--no-labels"], dir.path());
    assert_eq!(stdout(&out), "\\/\n/\\\n");
    let svg = stdout(&tangle(&["render", "--input", "t.json"], dir.path()));
    assert!(svg.contains("<svg") && svg.matches("<polyline").count() == 2);
    fs::write(dir.path().join("bad.json"), r#"{"n":3,"rows":[[1,2,3],[3,2,1]]}"#).unwrap();
    assert_eq!(code(&tangle(&["render", "--input", "bad.json"], dir.path())), exit::INPUT);
}

#[test]
fn bench_rows_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst");
    fs::create_dir(&inst).unwrap();
    for seed in 0..3 {
        let out =
            tangle(&["gen", "--family", "random", "--n", "5", "--total", "7", "--seed", &seed.to_string()], dir.path());
        fs::write(inst.join(format!("r{seed}.json")), stdout(&out)).unwrap();
    }
    fs::write(inst.join("bad.json"), r#"{"n":3,"swaps":[[1,3,1]]}"#).unwrap();
    let out = tangle(
        &["bench", "--input", "inst", "--repeats", "2", "--workers", "2", "--time-limit", "60", "--summary", "s.csv"],
        dir.path(),
    );
    assert_eq!(code(&out), exit::OK);
    let records = read_records(&stdout(&out)).unwrap();
    assert_eq!(records.len(), 4 * 2 * 2);
    assert!(records.iter().filter(|r| r.instance_id == "bad").all(|r| r.height.is_none()));
    let bad: Vec<_> = records.iter().filter(|r| r.instance_id == "bad").map(|r| format!("{:?}", r.verdict)).collect();
    assert_eq!(bad, ["Infeasible"; 4]);
    let summary = fs::read_to_string(dir.path().join("s.csv")).unwrap();
    assert_eq!(summary.lines().count(), 1 + 4 * 2);

    let l7 = tangle(&["gen", "--family", "ln", "--n", "7"], dir.path());
    let hard = dir.path().join("hard");
    fs::create_dir(&hard).unwrap();
    fs::write(hard.join("l7.json"), stdout(&l7)).unwrap();
    let out =
        tangle(&["bench", "--input", "hard", "--algo", "baseline", "--time-limit", "0.001", "--no-dedup"], dir.path());
    let records = read_records(&stdout(&out)).unwrap();
    assert_eq!(format!("{:?}", records[0].verdict), "Timeout");
}

#[test]
fn verify_conjecture_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = tangle(&["verify-conjecture", "--n", "4", "--workers", "2"], dir.path());
    assert_eq!(code(&out), exit::OK);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["lists_enumerated"], 64);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
    let out = tangle(&["verify-conjecture", "--n", "3", "--bound", "0"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["lists_enumerated"], 1);
    assert_eq!(code(&tangle(&["verify-conjecture", "--n", "3", "--bound", "3"], dir.path())), exit::INPUT);
}

fn any_list() -> impl Strategy<Value = SwapList> {
    (1usize..=7).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(prop_oneof![3 => Just(0u32), 2 => 1u32..5, 1 => 5u32..100_000], m).prop_map(
            move |counts| {
                let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                SwapList::from_counts(n, pairs.zip(counts).map(|((i, j), c)| (i, j, c))).unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn list_round_trip(l in any_list()) {
        prop_assert_eq!(parse_list(&write_list(&l)).unwrap(), l.clone());
        prop_assert_eq!(parse_list(&write_list_matrix(&l)).unwrap(), l);
    }

    #[test]
    fn tangle_round_trip(w in (1usize..=8).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())) {
        let n = w.len();
        let t = connect_wang(&Permutation::identity(n), &Permutation::from_wires(w).unwrap()).unwrap();
        prop_assert_eq!(parse_tangle(&write_tangle(&t)).unwrap(), t);
    }
}
