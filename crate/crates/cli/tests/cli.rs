//! End-to-end runs of the `ggl` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use ggl_cli::{ReportDocument, ScanRow, CSV_HEADER};

fn ggl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ggl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn golden_classification_documents() {
    for (gens, file) in [
        (&["5", "6", "8"][..], "classify_5_6_8.json"),
        (&["5", "18", "26", "34", "42"], "classify_5_18_26_34_42.json"),
        (&["4", "7", "9", "10"], "classify_4_7_9_10.json"),
    ] {
        let mut args = vec!["classify"];
        args.extend_from_slice(gens);
        args.extend_from_slice(&["--format", "json"]);
        let o = ggl(&args);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), golden(file), "{file}");
    }
}

#[test]
fn documents_round_trip() {
    for args in [
        &["classify", "5", "6", "8"][..],
        &["classify", "1"],
        &["verify", "3", "7", "8", "--format", "json"],
        &["ulrich", "3", "7", "8", "--enumerate"],
        &["ulrich", "6", "7", "8", "9", "--ideal", "6,9"],
        &["herzog", "4", "9", "15"],
        &["chain", "3", "7", "8"],
        &["idealize", "3", "7", "8", "--full-closure"],
        &["idealize", "3", "7", "8", "--overring-index", "5"],
    ] {
        let o = ggl(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let text = stdout(&o);
        let doc: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(doc.command, args.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
        let reparsed: ReportDocument = serde_json::from_str(&again).unwrap();
        assert_eq!(reparsed, doc);
    }
}

#[test]
fn classify_examples() {
    let o = ggl(&["classify", "1"]);
    let doc: ReportDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(doc.semigroups[0].classification.as_ref().unwrap().gorenstein);

    let o = ggl(&["classify", "4", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("generators have gcd 2"));
}

#[test]
fn verify_exit_codes() {
    for gens in [&["3", "7", "8"][..], &["4", "7", "9", "10"], &["2", "3"]] {
        let mut args = vec!["verify"];
        args.extend_from_slice(gens);
        assert_eq!(ggl(&args).status.code(), Some(0), "{gens:?}");
    }
}

#[test]
fn wrapped_commands() {
    let doc = |args: &[&str]| -> ReportDocument { serde_json::from_str(&stdout(&ggl(args))).unwrap() };

    let u = doc(&["ulrich", "3", "7", "8", "--enumerate"]);
    let certs = u.semigroups[0].ulrich.as_ref().unwrap();
    let gens: Vec<Vec<i64>> = certs.iter().map(|c| c.generators.clone()).collect();
    assert_eq!(gens, vec![vec![3, 7, 8], vec![6, 7, 8]]);

    let h = doc(&["herzog", "4", "9", "15"]);
    let hz = h.semigroups[0].herzog.as_ref().unwrap();
    assert_eq!(hz.data.exponents(), [3, 1, 1, 3, 1, 2]);
    assert!(hz.ggl.direct_ggl);

    let c = doc(&["chain", "3", "7", "8"]);
    let records = c.semigroups[0].chain.as_ref().unwrap();
    assert_eq!(records.len(), 3);
    assert!(records.last().unwrap().gorenstein);
    assert!(c.route_consistency.consistent);

    let i = doc(&["idealize", "3", "7", "8", "--full-closure"]);
    assert!(i.semigroups[0].idealization.as_ref().unwrap().verdict);
    // <3,5,7> does not contain K.
    let o = ggl(&["idealize", "3", "7", "8", "--overring-index", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("canonical ideal"));
}

#[test]
fn scan_output_is_independent_of_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for jobs in ["1", "2", "4", "8"] {
        for format in ["csv", "jsonl"] {
            let path = dir.path().join(format!("scan_{jobs}.{format}"));
            let o = ggl(&[
                "scan", "--three-gen", "--max", "25", "--format", format, "--jobs", jobs,
                "--out", path.to_str().unwrap(),
            ]);
            assert_eq!(o.status.code(), Some(0));
            assert!(o.stdout.is_empty());
            outputs.push((format, std::fs::read(&path).unwrap()));
        }
    }
    for (format, bytes) in &outputs {
        let first = &outputs.iter().find(|(f, _)| f == format).unwrap().1;
        assert_eq!(bytes, first, "{format}");
    }
}

#[test]
fn scan_csv_content() {
    let o = ggl(&["scan", "--three-gen", "--max", "15", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.iter().any(|r| r.starts_with("3,7,8;3;3;2;5;4;2;4;2;false;false;true;")
        && r.ends_with(";false;true;6|7|8;true;true")));
    let keys: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.split(';').next().unwrap().split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    // Symmetric triples are listed as well.
    assert!(rows.iter().any(|r| r.starts_with("3,4,5;")) && rows.iter().any(|r| r.starts_with("4,5,6;")));
}

#[test]
fn scan_jsonl_rows_parse() {
    let o = ggl(&["scan", "--three-gen", "--max", "12", "--format", "jsonl"]);
    for line in stdout(&o).lines() {
        let row: ScanRow = serde_json::from_str(line).unwrap();
        assert!(row.route_consistent);
        assert_eq!(serde_json::to_string(&row).unwrap(), line);
    }
}

#[test]
fn scan_gens_file() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "").unwrap();
    let o = ggl(&["scan", "--gens-file", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());

    let list = dir.path().join("list.txt");
    std::fs::write(&list, "# mixed\n5,6,8\n3 7 8\n4,7,9,10\n").unwrap();
    let o = ggl(&["scan", "--gens-file", list.to_str().unwrap()]);
    let text = stdout(&o);
    let firsts: Vec<&str> = text.lines().skip(1).map(|l| l.split(';').next().unwrap()).collect();
    assert_eq!(firsts, ["3,7,8", "4,7,9,10", "5,6,8"]);

    let missing = dir.path().join("missing.txt");
    assert_eq!(ggl(&["scan", "--gens-file", missing.to_str().unwrap()]).status.code(), Some(2));

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "4,6\n").unwrap();
    let o = ggl(&["scan", "--gens-file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn scan_at_forty_is_consistent() {
    let o = ggl(&["scan", "--three-gen", "--max", "40", "--jobs", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with(";true")));
}
