use std::path::Path;
use std::process::{Command, Output};

use mstci_cli::cli::parse_m_range;
use mstci_cli::sweep::{run_sweep, to_csv, Samples, SweepConfig, CSV_HEADER};
use mstci_cli::verify::{l_hat, run_verify, VerifyMode, VerifyScope};
use mstci_core::graph::{read_graph, universal_vertices};

fn mstci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mstci"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn solve_reports() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let o = mstci(&["solve", "-i", &k4]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("intersection_number: 3\n"));
    assert!(text.contains("\nl: 0\n"));
    assert!(text.contains("\nl_hat: 3\n"));
    assert!(text.contains("method: star-fast-path"));

    let p4 = write(dir.path(), "p4", "4 3\n0 1\n1 2\n2 3\n");
    assert!(stdout(&mstci(&["solve", "-i", &p4])).contains("intersection_number: 0\n"));

    let split = write(dir.path(), "split", "4 2\n0 1\n2 3\n");
    let o = mstci(&["solve", "-i", &split]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("graph is not connected"));

    let bad = write(dir.path(), "bad", "3 1\n0 3\n");
    let o = mstci(&["solve", "-i", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = mstci(&["solve", "-i", &dir.path().join("missing").to_string_lossy()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_flag_is_enforced() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write(dir.path(), "c6", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    let o = mstci(&["solve", "-i", &c6, "--budget", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds the budget"));
    assert!(mstci(&["solve", "-i", &c6, "--budget", "6"])
        .status
        .success());
}

#[test]
fn bounds_lines() {
    let first = |n: &str, m: &str| {
        stdout(&mstci(&["bounds", "-n", n, "-m", m]))
            .lines()
            .next()
            .unwrap()
            .to_string()
    };
    assert_eq!(first("9", "20"), "nu=12 q=3 r=0 l=3 l_hat=24");
    assert_eq!(first("5", "7"), "nu=3 q=1 r=2 l=-3/8 l_hat=2");
    assert_eq!(first("4", "3"), "nu=0 q=0 r=0 l=0 l_hat=0");
    let text = stdout(&mstci(&["bounds", "-n", "5", "-m", "7"]));
    assert!(text.contains("l_decimal=-0.375000 l_clamped=0"));
    assert_eq!(
        mstci(&["bounds", "-n", "4", "-m", "7"]).status.code(),
        Some(2)
    );
}

#[test]
fn generators() {
    let g = read_graph(&stdout(&mstci(&[
        "gen",
        "nu-regular",
        "-n",
        "5",
        "-m",
        "7",
    ])))
    .unwrap();
    assert_eq!(g.m(), 7);
    assert!(!universal_vertices(&g).is_empty());

    let g = read_graph(&stdout(&mstci(&[
        "gen",
        "regular-family",
        "-k",
        "4",
        "-n",
        "9",
    ])))
    .unwrap();
    assert_eq!(g.m(), 20);

    let a = stdout(&mstci(&["gen", "random", "-n", "9", "--seed", "7"]));
    let b = stdout(&mstci(&["gen", "random", "-n", "9", "--seed", "7"]));
    assert_eq!(a, b);
    assert_eq!(read_graph(&a).unwrap().n(), 9);

    let o = mstci(&["gen", "regular-family", "-k", "4", "-n", "8"]);
    assert_eq!(o.status.code(), Some(2));
    let o = mstci(&["gen", "nu-regular", "-n", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn trees_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let text = stdout(&mstci(&["trees", "-i", &k4, "--list"]));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("spanning_trees: 16"));
    assert_eq!(lines.count(), 16);
}

#[test]
fn verify_exhaustive_scopes() {
    let o = mstci(&["verify", "-n", "5", "--mode", "exhaustive-canonical"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("graphs_checked: 21\n"));
    assert!(text.contains("violations: 0\n"));

    let scope = VerifyScope {
        n: 6,
        m_range: None,
        mode: VerifyMode::ExhaustiveLabeled,
        samples: 0,
        seed: 0,
    };
    let report = run_verify(&scope, 2, l_hat).unwrap();
    assert_eq!(report.graphs_checked, 26704);
    assert!(report.holds());
    assert!(report.universal_checked > 0);

    let o = mstci(&["verify", "-n", "8", "--mode", "exhaustive-labeled"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sampled"));
}

fn corrupted(n: u64, m: u64) -> u64 {
    l_hat(n, m) + 1
}

#[test]
fn verify_catches_a_corrupted_bound() {
    for mode in [
        VerifyMode::ExhaustiveLabeled,
        VerifyMode::ExhaustiveCanonical,
    ] {
        let scope = VerifyScope {
            n: 5,
            m_range: None,
            mode,
            samples: 0,
            seed: 0,
        };
        let report = run_verify(&scope, 1, corrupted).unwrap();
        assert!(!report.holds());
        assert!(!report.violations.is_empty());
        assert!(report.render().contains("result: VIOLATED"));
    }
    let scope = VerifyScope {
        n: 8,
        m_range: Some(26..=28),
        mode: VerifyMode::Sample,
        samples: 20,
        seed: 3,
    };
    assert!(run_verify(&scope, 1, l_hat).unwrap().holds());
    let report = run_verify(&scope, 1, corrupted).unwrap();
    assert!(!report.violations.is_empty());
    assert_eq!(report.graphs_checked, 60);
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let o = mstci(&[
        "verify",
        "-n",
        "7",
        "--samples",
        "50",
        "--seed",
        "2",
        "--jobs",
        "2",
        "-o",
        &path.to_string_lossy(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&o));
}

#[test]
fn small_sweep_rows() {
    let cfg = SweepConfig {
        n: 4,
        m_range: 3..=6,
        samples: Samples::All,
        seed: 1,
    };
    let csv = to_csv(&run_sweep(&cfg, 1).unwrap()).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[2], "4,4,15,15,,,,");
    assert_eq!(lines[4], "4,6,1,0,0.000000,0.000000,1.000000,0.000000");
}

#[test]
fn sweep_is_reproducible_and_charted() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    let svg = dir.path().join("chart.svg");
    let run = |out: &Path, jobs: &str| {
        let o = mstci(&[
            "sweep",
            "-n",
            "7",
            "-m",
            "6..21",
            "--samples",
            "30",
            "--seed",
            "4",
            "--jobs",
            jobs,
            "-o",
            &out.to_string_lossy(),
            "--svg",
            &svg.to_string_lossy(),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    };
    run(&a, "1");
    run(&b, "3");
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert_eq!(text.lines().count(), 17);
    let last = text.lines().last().unwrap();
    assert_eq!(last, "7,21,30,0,0.187500,0.000000,1.000000,0.000000");

    let xml = std::fs::read_to_string(&svg).unwrap();
    let doc = roxmltree::Document::parse(&xml).unwrap();
    let count = |tag: &str| doc.descendants().filter(|n| n.has_tag_name(tag)).count();
    assert_eq!(count("polyline"), 2);
    assert_eq!(count("polygon"), 2);
    assert_eq!(doc.root_element().tag_name().name(), "svg");
}

#[test]
fn m_ranges() {
    assert_eq!(parse_m_range("8..36"), Ok(8..=36));
    assert_eq!(parse_m_range("8..=36"), Ok(8..=36));
    assert_eq!(parse_m_range("20"), Ok(20..=20));
    assert!(parse_m_range("9..3").is_err());
    assert!(parse_m_range("x").is_err());
}
