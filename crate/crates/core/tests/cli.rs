//! Runs the binary and compares stdout with `tests/golden`.
//! Set `BLESS=1` to rewrite the golden files.

use std::path::{Path, PathBuf};
use std::process::Command;

use distgraph::WitnessRecord;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_distgraph"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn check_golden(name: &str, args: &[&str], code: i32) {
    let (got_code, stdout) = run(args);
    assert_eq!(got_code, code, "{args:?}: {stdout}");
    let path = golden_dir().join(format!("{name}.json"));
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, &stdout).unwrap();
    }
    let want =
        std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(stdout, want, "{args:?}");
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn golden_outputs() {
    check_golden("chi_1_4_5_6_7", &["chi", "1,4,5,6,7"], 0);
    check_golden("chi_2_8_10_12_14", &["chi", "2,8,10,12,14"], 0);
    check_golden("chi_1", &["chi", "1"], 0);
    check_golden("chi_1_2_4", &["chi", "1,2,4"], 0);
    check_golden("chi_1_2_3_5_8", &["chi", "1,2,3,5,8"], 0);
    check_golden("omega_1_4_5_6_7", &["omega", "1,4,5,6,7"], 0);
    check_golden("omega_1_2_3", &["omega", "1,2,3"], 0);
    check_golden("omega_2_3_5", &["omega", "2,3,5"], 0);
    check_golden("classify_1_4_5_6_7", &["classify", "1,4,5,6,7"], 0);
    check_golden("classify_1_2", &["classify", "1,2"], 0);
    check_golden(
        "verify_clique",
        &[
            "verify",
            golden_dir()
                .join("clique_1_4_5_6_7.jsonl")
                .to_str()
                .unwrap(),
        ],
        0,
    );
}

#[test]
fn documented_values() {
    let chi = |s: &str| json(&run(&["chi", s]).1)["chi"].as_u64().unwrap();
    assert_eq!(chi("1,4,5,6,7"), 6);
    assert_eq!(chi("2,8,10,12,14"), 6);
    assert_eq!(chi("1"), 2);
    let scaled = json(&run(&["chi", "2,8,10,12,14"]).1);
    assert_eq!(scaled["scale"], 2);

    let omega = json(&run(&["omega", "1,4,5,6,7"]).1);
    assert_eq!(omega["omega"], 4);
    assert_eq!(
        omega["witness"]["vertices"],
        serde_json::json!([0, 1, 5, 6])
    );
    assert_eq!(json(&run(&["omega", "1,2,3"]).1)["omega"], 4);
    assert_eq!(json(&run(&["omega", "2,3,5"]).1)["omega"], 3);

    let report = json(&run(&["classify", "1,4,5,6,7"]).1);
    assert_eq!(report["report"]["kmPattern"], serde_json::Value::Null);
    assert_eq!(report["report"]["thm1Set"], true);
    let pair = json(&run(&["classify", "1,2"]).1);
    assert!(pair["report"].get("zhu3Chi").is_none());
    assert_eq!(pair["report"]["parityChi2"], false);
    assert_eq!(pair["chiLowerBound"], 3);
}

/// Every certificate printed by `chi` and `omega` is accepted by `verify`.
#[test]
fn printed_certificates_verify() {
    let dir = tempfile::tempdir().unwrap();
    for set in [
        "1,4,5,6,7",
        "1,3,5",
        "1,2,4",
        "1,2,3",
        "2,3,5",
        "1,2,3,5,8",
        "6,10,15",
    ] {
        let chi = json(&run(&["chi", set]).1);
        let omega = json(&run(&["omega", set]).1);
        let lines: Vec<String> = [&chi["upper"], &chi["lower"], &omega["witness"]]
            .iter()
            .map(|v| WitnessRecord::parse(&v.to_string()).unwrap().to_line())
            .collect();
        let path = dir.path().join("w.jsonl");
        std::fs::write(&path, lines.join("\n")).unwrap();
        let (code, out) = run(&["verify", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{set}: {out}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["chi", "0,3"]).0, 1);
    assert_eq!(run(&["chi", "a,b"]).0, 1);
    assert_eq!(run(&["chi"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    let (code, out) = run(&[
        "chi",
        "1,4,5,6,7",
        "--max-states",
        "5",
        "--max-interval",
        "1",
    ]);
    assert_eq!(code, 2);
    assert_eq!(json(&out)["error"], "undecided");
    assert_eq!(run(&["verify", "/nonexistent/witness.jsonl"]).0, 3);
    assert_eq!(run(&["--help"]).0, 0);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.jsonl");
    std::fs::write(
        &bad,
        r#"{"kind":"clique","distances":[1,4,5,6,7],"vertices":[0,1,2]}"#,
    )
    .unwrap();
    let (code, out) = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(
        (code, json(&out)["valid"].clone()),
        (1, serde_json::json!(false))
    );
    let weak = dir.path().join("weak.jsonl");
    std::fs::write(
        &weak,
        r#"{"kind":"interval","distances":[1,4,5,6,7],"colors":6,"length":40}"#,
    )
    .unwrap();
    assert_eq!(run(&["verify", weak.to_str().unwrap()]).0, 1);
    let garbled = dir.path().join("garbled.jsonl");
    std::fs::write(&garbled, "{").unwrap();
    assert_eq!(run(&["verify", garbled.to_str().unwrap()]).0, 1);
}

#[test]
fn survey_command_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    let args = [
        "survey",
        "--cardinality",
        "3",
        "--max-distance",
        "9",
        "--workers",
        "2",
        "--out",
        out.to_str().unwrap(),
    ];
    let (code, summary) = run(&args);
    assert_eq!(code, 0, "{summary}");
    let summary = json(&summary);
    assert_eq!(summary["records"], 79);
    assert_eq!(summary["counterexamples"], serde_json::json!([]));
    let first = std::fs::read_to_string(&out).unwrap();

    let checkpoint = dir.path().join("r.jsonl.checkpoint");
    assert_eq!(std::fs::read_to_string(&checkpoint).unwrap().trim(), "79");
    std::fs::write(&checkpoint, "30\n").unwrap();
    let mut resumed = args.to_vec();
    resumed.push("--resume");
    let (code, summary) = run(&resumed);
    assert_eq!(code, 0);
    assert_eq!(json(&summary)["written"], 49);
    let untimed = |text: &str| -> Vec<String> {
        text.lines()
            .map(|l| {
                distgraph::survey::SurveyRecord::parse(l)
                    .unwrap()
                    .untimed_line()
            })
            .collect()
    };
    assert_eq!(
        untimed(&std::fs::read_to_string(&out).unwrap()),
        untimed(&first)
    );

    let mut audit = args.to_vec();
    audit.push("--audit");
    let (code, report) = run(&audit);
    assert_eq!(code, 0, "{report}");

    assert_eq!(
        run(&[
            "survey",
            "--cardinality",
            "4",
            "--max-distance",
            "3",
            "--out",
            out.to_str().unwrap()
        ])
        .0,
        1
    );
}
