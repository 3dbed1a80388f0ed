use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symseq"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/ucr")
}

/// Class "up" has a positive bump in the middle, class "down" a negative one.
fn toy_ts(labeled: bool, n: usize) -> String {
    let mut out = String::from(if labeled {
        "@classLabel true up down\n@data\n"
    } else {
        "@classLabel false\n@data\n"
    });
    for i in 0..n {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        let values: Vec<String> = (0..48)
            .map(|t| {
                let bump = if (16..32).contains(&t) {
                    4.0 * sign
                } else {
                    0.0
                };
                format!("{:.4}", bump + ((t * (i + 2)) as f64 * 0.9).sin() * 0.2)
            })
            .collect();
        out.push_str(&values.join(","));
        if labeled {
            out.push_str(if i % 2 == 0 { ":up" } else { ":down" });
        }
        out.push('\n');
    }
    out
}

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        let ws = Workspace {
            dir: tempfile::tempdir().unwrap(),
        };
        ws.write("toy.ts", &toy_ts(true, 12));
        ws.write("toy_unlabeled.ts", &toy_ts(false, 4));
        ws
    }

    fn path(&self, name: &str) -> String {
        self.dir.path().join(name).to_string_lossy().into_owned()
    }

    fn write(&self, name: &str, text: &str) {
        fs::write(self.dir.path().join(name), text).unwrap();
    }

    fn fit(&self, extra: &[&str]) -> Output {
        let (train, out) = (self.path("toy.ts"), self.path("model.json"));
        let mut args = vec![
            "fit",
            "--train",
            &train,
            "--out",
            &out,
            "--k",
            "1",
            "--features",
            "40",
        ];
        args.extend_from_slice(extra);
        run(&args)
    }
}

#[test]
fn fit_then_predict_separable_toy() {
    let ws = Workspace::new();
    let o = ws.fit(&[]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(
        text.lines()
            .next()
            .unwrap()
            .starts_with("config: transform=sfa"),
        "{text}"
    );
    assert!(text.contains("training accuracy: 1.000000"), "{text}");

    let o = run(&[
        "predict",
        "--model",
        &ws.path("model.json"),
        "--test",
        &ws.path("toy.ts"),
        "--out",
        &ws.path("p.csv"),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("accuracy: 1.000000"));
    let csv = fs::read_to_string(ws.path("p.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("index,predicted_label,prob_class_up,prob_class_down")
    );
    assert_eq!(lines.next().unwrap().split(',').nth(1), Some("up"));
    assert_eq!(csv.lines().count(), 13);
}

#[test]
fn unlabeled_test_has_no_accuracy() {
    let ws = Workspace::new();
    assert!(ws.fit(&[]).status.success());
    let o = run(&[
        "predict",
        "--model",
        &ws.path("model.json"),
        "--test",
        &ws.path("toy_unlabeled.ts"),
        "--out",
        &ws.path("p.csv"),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(!stdout(&o).contains("accuracy"));
    assert_eq!(
        fs::read_to_string(ws.path("p.csv"))
            .unwrap()
            .lines()
            .count(),
        5
    );
}

#[test]
fn missing_model_is_runtime_error() {
    let ws = Workspace::new();
    let o = run(&[
        "predict",
        "--model",
        &ws.path("nope.json"),
        "--test",
        &ws.path("toy.ts"),
        "--out",
        &ws.path("p.csv"),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("nope.json"), "{err}");
    assert_eq!(err.trim().lines().count(), 1);
}

#[test]
fn corrupt_model_is_runtime_error() {
    let ws = Workspace::new();
    ws.write("bad.json", "{\"version\": 1, \"seed\": ");
    let o = run(&[
        "predict",
        "--model",
        &ws.path("bad.json"),
        "--test",
        &ws.path("toy.ts"),
        "--out",
        &ws.path("p.csv"),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("parse"));
}

#[test]
fn usage_errors_exit_2() {
    let ws = Workspace::new();
    assert_eq!(ws.fit(&["--selection", "best"]).status.code(), Some(2));
    assert_eq!(ws.fit(&["--transform", "fft"]).status.code(), Some(2));
    assert_eq!(ws.fit(&["--features", "0"]).status.code(), Some(2));
    assert_eq!(run(&["fit"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn help_lists_defaults() {
    let o = run(&["fit", "--help"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for needle in [
        "[default: sfa]",
        "[default: 5]",
        "[default: rs]",
        "[default: 500]",
        "[default: 42]",
        "--drop-dc",
        "--no-numerosity-reduction",
    ] {
        assert!(text.contains(needle), "missing {needle}:\n{text}");
    }
}

#[test]
fn both_transforms_double_the_count() {
    let ws = Workspace::new();
    let o = ws.fit(&["--transform", "both", "--sax-k", "1", "--sfa-k", "1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    // ceil(log2(48)) = 6 per transform.
    assert!(stdout(&o).contains("representations: 12"), "{}", stdout(&o));
}

#[test]
fn coffee_defaults_use_41_representations() {
    let ws = Workspace::new();
    let train = data_dir().join("Coffee_TRAIN.ts");
    let o = run(&[
        "fit",
        "--train",
        train.to_str().unwrap(),
        "--out",
        &ws.path("coffee.json"),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("representations: 41"), "{}", stdout(&o));
}

#[test]
fn csv_training_input() {
    let ws = Workspace::new();
    let mut csv = String::new();
    for line in toy_ts(true, 12).lines().skip(2) {
        let (values, label) = line.rsplit_once(':').unwrap();
        csv.push_str(&format!("{label},{values}\n"));
    }
    ws.write("toy.csv", &csv);
    let o = run(&[
        "fit",
        "--train",
        &ws.path("toy.csv"),
        "--out",
        &ws.path("m.json"),
        "--k",
        "1",
        "--features",
        "40",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("training accuracy: 1.000000"));
}

fn benchmark(ws: &Workspace, out: &str, jobs: &str) -> Output {
    run(&[
        "benchmark",
        "--dir",
        &ws.path("bench"),
        "--datasets",
        &ws.path("list.txt"),
        "--out",
        &ws.path(out),
        "--jobs",
        jobs,
        "--k",
        "1",
        "--features",
        "40",
    ])
}

#[test]
fn benchmark_records_failures_and_continues() {
    let ws = Workspace::new();
    fs::create_dir(ws.dir.path().join("bench")).unwrap();
    ws.write("bench/Toy_TRAIN.ts", &toy_ts(true, 12));
    ws.write("bench/Toy_TEST.ts", &toy_ts(true, 8));
    ws.write("bench/Broken_TRAIN.ts", "@data\n1,2,3:a\n1,2:b\n");
    ws.write("bench/Broken_TEST.ts", &toy_ts(true, 8));
    ws.write("list.txt", "Toy\n# comment\nBroken\n");

    let o = benchmark(&ws, "r1.csv", "1");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = fs::read_to_string(ws.path("r1.csv")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "name,n_train,n_test,length,classes,accuracy,fit_seconds,predict_seconds,error"
    );
    assert_eq!(lines.len(), 3);
    assert!(
        lines[1].starts_with("Toy,12,8,48,2,1.000000,"),
        "{}",
        lines[1]
    );
    assert!(lines[1].ends_with(','));
    assert!(lines[2].starts_with("Broken,,,,,,,,"), "{}", lines[2]);

    let o = benchmark(&ws, "r2.csv", "2");
    assert!(o.status.success());
    let accuracy = |name: &str| -> Vec<String> {
        let text = fs::read_to_string(ws.path(name)).unwrap();
        text.lines()
            .map(|l| l.split(',').take(6).collect::<Vec<_>>().join(","))
            .collect()
    };
    assert_eq!(accuracy("r1.csv"), accuracy("r2.csv"));
}

#[test]
fn benchmark_unreadable_directory() {
    let ws = Workspace::new();
    ws.write("list.txt", "Toy\n");
    let o = benchmark(&ws, "r.csv", "1");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("bench"));
}
