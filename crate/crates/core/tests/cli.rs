mod common;

use common::{check_goldens, run};

#[test]
fn goldens_match() {
    let problems = check_goldens();
    assert!(problems.is_empty(), "{}", problems.join("\n"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["embed", "--model", "interval"], &[]).exit, 2);
    assert_eq!(run(&["frobnicate"], &[]).exit, 2);
    assert_eq!(
        run(
            &["surject", "--kind", "block", "--swap-halves", "--domain-blocks", "0"],
            &[]
        )
        .exit,
        2
    );
    assert_eq!(run(&["fintop", "sweep", "--points", "9"], &[]).exit, 2);
}

#[test]
fn csv_rows_match_json_leaves() {
    let args = ["chaos", "periodic", "--system", "doubling", "--word", "011"];
    let json = run(&args, &[]);
    let mut csv_args = args.to_vec();
    csv_args.extend(["--format", "csv"]);
    let csv = run(&csv_args, &[]);
    assert_eq!((json.exit, csv.exit), (0, 0));
    let doc: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    let leaves = primchaos::cli::render::flatten(&doc);
    let mut reader = csv::Reader::from_reader(csv.stdout.as_bytes());
    let rows: Vec<(String, String)> = reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            (r[0].to_string(), r[1].to_string())
        })
        .collect();
    assert_eq!(rows, leaves);
}

#[test]
fn out_file_holds_document_and_stdout_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("doc.json");
    let p = path.to_str().unwrap();
    let r = run(
        &["chaos", "realize", "--system", "doubling", "--word", "01", "--out", p],
        &[],
    );
    assert_eq!(r.exit, 0);
    assert!(r.stdout.contains("checks: 2 passed, 0 failed, 2 total"), "{}", r.stdout);
    let direct = run(&["chaos", "realize", "--system", "doubling", "--word", "01"], &[]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct.stdout);
}

#[test]
fn failing_check_exits_1_and_lists_failures() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("doc.json");
    let r = run(
        &[
            "fintop",
            "verify-lemma7",
            "--space",
            "chain3",
            "--codomain",
            "discrete2",
            "--map",
            "a=a,b=b,c=b",
            "--out",
            path.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(r.exit, 1);
    assert!(r.stdout.contains("FAIL "), "{}", r.stdout);
}
