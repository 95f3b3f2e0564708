use std::process::{Command, Output};

use qlehmer::cli::{ListEntry, VerifyJson};

fn qlehmer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlehmer"))
        .args(args)
        .env_remove("QLEHMER_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_examples() {
    for (args, want) in [
        (&["eval", "fib", "--st", "3,-2", "--n", "4"][..], "15"),
        (&["eval", "central-fibonomial", "--st", "1,1", "--n", "2"][..], "6"),
        (&["eval", "qpochhammer", "--a", "0.3", "--q", "0.5", "--n", "0"][..], "1"),
        (&["eval", "qbinomial", "--n", "4", "--k", "2", "--q", "1/2"][..], "2.1875"),
        (&["eval", "catalan", "--family", "fibonacci", "--n", "3"][..], "20"),
        (&["eval", "fibonomial", "--st", "1/2,1/3", "--n", "3", "--k", "1"][..], "0.5833333333"),
    ] {
        let o = qlehmer(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).trim().starts_with(want), "{args:?} gave {}", stdout(&o));
    }
}

#[test]
fn eval_series_functions() {
    // 1phi0(q; -; q, z) = 1/(1 - z)
    let o = qlehmer(&["eval", "phi", "--upper", "1/2", "--q", "1/2", "--z", "-1/3"]);
    assert!(stdout(&o).starts_with("0.75"), "{}", stdout(&o));
    // e_q(z, 0) = 1 + z/(1 - q)
    let o = qlehmer(&["eval", "qexp", "--z", "0.3", "--u", "0", "--q", "0.5"]);
    assert_eq!(stdout(&o).trim(), "1.6");
    for f in ["Phi", "R-alpha"] {
        let o = qlehmer(&["eval", f, "--upper", "0.3", "--u", "0.5", "--z", "0.2", "--alpha", "1.5", "--x", "0.1"]);
        assert_eq!(o.status.code(), Some(0), "{f}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["list", "--format", "bogus"][..],
        &["verify", "unknown-id"][..],
        &["verify"][..],
        &["eval", "fib"][..],
        &["eval", "nonsense"][..],
        &["list", "--precision", "32"][..],
        &["verify", "thm5.6", "--tol", "0"][..],
        &["verify", "thm5.6", "--st", "1,-2"][..],
    ] {
        assert_eq!(qlehmer(args).status.code(), Some(2), "{args:?}");
    }
    let o = qlehmer(&["verify", "unknown-id"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown identity"));
}

#[test]
fn precision_env_var() {
    let o = Command::new(env!("CARGO_BIN_EXE_qlehmer"))
        .args(["list"])
        .env("QLEHMER_PRECISION", "16")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_qlehmer"))
        .args(["eval", "qexp", "--z", "0.3", "--u", "0", "--q", "0.5", "--format", "json"])
        .env("QLEHMER_PRECISION", "128")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["precision"], 128);
}

#[test]
fn list_formats() {
    let text = stdout(&qlehmer(&["list"]));
    assert!(text.lines().count() >= 34);
    let entries: Vec<ListEntry> = serde_json::from_str(&stdout(&qlehmer(&["list", "--format", "json"]))).unwrap();
    assert_eq!(entries.len(), text.lines().count());
    assert!(entries.iter().any(|e| e.id == "thm5.6"));
    let csv = stdout(&qlehmer(&["list", "--format", "csv"]));
    assert!(csv.starts_with("id,title,anchor,formula\n"));
}

#[test]
fn verify_json_round_trips_and_is_deterministic() {
    let args = ["verify", "thm5.6", "thm5.9", "--family", "mersenne", "--format", "json"];
    let a = qlehmer(&args);
    assert_eq!(a.status.code(), Some(0));
    let mut ra: VerifyJson = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(serde_json::from_str::<VerifyJson>(&serde_json::to_string(&ra).unwrap()).unwrap(), ra);
    assert_eq!(ra.results.len(), 2);
    assert_eq!(ra.run.precision, 256);
    let p = &ra.results[0].points[0];
    // 256 bits carry 78 significant digits
    assert!(p.lhs.as_ref().unwrap().replace(['-', '.'], "").len() >= 78);

    let mut rb: VerifyJson = serde_json::from_slice(&qlehmer(&args).stdout).unwrap();
    ra.run.timestamp = 0;
    rb.run.timestamp = 0;
    assert_eq!(ra, rb);
}

#[test]
fn verify_csv_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let o = qlehmer(&["verify", "--all", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    let mut rdr = csv::Reader::from_reader(body.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert!(rows.len() >= 34);
    assert!(rows.iter().all(|r| r[3] == *"true"));
}

#[test]
fn failing_verification_exits_1() {
    // A budget too small for the series to converge.
    let o = qlehmer(&["verify", "thm5.6", "--max-terms", "3"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
}
