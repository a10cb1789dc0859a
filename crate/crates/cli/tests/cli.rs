use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn interp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_interp")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON report on stdout")
}

fn csv_rows(o: &Output) -> Vec<Vec<String>> {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn analyze_examples() {
    let o = interp(&["analyze", "--set", "kind=ap a=3 b=0", "--n", "1000", "--syndetic", "g=3"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["verdicts"][0]["detail"]["verdict"], "holds-at-scale");

    let o = interp(&["analyze", "--set", "kind=ap a=1 b=0", "--n", "1000", "--pw-syndetic", "g=1", "L=10"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["verdicts"][0]["holds"], true);

    let o = interp(&["analyze", "--set", "kind=powers base=2", "--n", "1048576", "--banach", "--gaps"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    let last = r["results"]["banach"]["points"].as_array().unwrap().last().unwrap().clone();
    let d = num(last["count"].as_str().unwrap()) / num(last["n"].as_str().unwrap());
    assert!(d < 1e-4);
    assert_eq!(r["results"]["gaps"]["count"], "19");
}

#[test]
fn analyze_failures_and_usage() {
    let o = interp(&["analyze", "--set", "kind=powers base=2", "--n", "1000", "--syndetic", "10"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["verdicts"][0]["detail"]["verdict"], "fails-at-scale");
    assert_eq!(code(&interp(&["analyze", "--set", "kind=ap a=3", "--n", "100"])), 2);
    assert_eq!(code(&interp(&["analyze", "--set", "kind=ap a=3 b=0"])), 2);
    assert_eq!(code(&interp(&["analyze", "--set", "kind=ap a=3 b=0", "--n", "100", "--syndetic", "g=x"])), 2);
}

#[test]
fn count_profiles() {
    let o = interp(&["count", "--m", "10,50,100,200", "--delta", "1/2", "--k", "2"]);
    assert_eq!(code(&o), 0);
    let head = String::from_utf8(o.stdout.clone()).unwrap();
    assert!(head.starts_with("m,count,log_rate,analytic_limit,inf_so_far\n"));
    let rows = csv_rows(&o);
    assert_eq!(rows[0][1], "638");
    let rates: Vec<f64> = rows.iter().map(|r| num(&r[2])).collect();
    assert!(rates.windows(2).all(|w| w[0] < w[1]));
    assert!(rates.iter().all(|&r| r < std::f64::consts::LN_2));

    let o = interp(&["count", "--m", "1..=20", "--delta", "0", "--k", "5"]);
    assert!(csv_rows(&o).iter().all(|r| r[1] == "1" && num(&r[2]) == 0.0));

    let o = interp(&["count", "--m", "400", "--delta", "1/4", "--k", "3"]);
    let r = &csv_rows(&o)[0];
    assert!((num(&r[2]) - num(&r[3])).abs() < 0.03);
}

#[test]
fn count_oracle() {
    let o = interp(&["count", "--m", "1..=10", "--delta", "1/3", "--k", "3", "--oracle"]);
    assert_eq!(code(&o), 0);
    assert!(csv_rows(&o).iter().all(|r| r[5] == r[1] && r[6] == "true"));
    let o = interp(&["count", "--m", "14", "--delta", "1/2", "--k", "4", "--oracle"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("refuses"));
    assert_eq!(code(&interp(&["count", "--m", "10", "--delta", "3/4", "--k", "2"])), 2);
}

#[test]
fn verify_f_examples() {
    let o = interp(&["verify-f", "--n", "1000000", "--depth", "2", "--shifts", "1"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    let checked: Vec<&str> = r["verdicts"][2]["detail"]["checked"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(checked, ["10", "1000", "1010", "100000", "100010", "101000"]);
    assert!(r["parameters"]["index_family"].as_str().unwrap().starts_with("dyadic"));

    let o = interp(&["verify-f", "--n", "9999", "--depth", "3", "--shifts", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["verdicts"][2]["detail"]["checked"].as_array().unwrap().len(), 0);

    let o = interp(&["verify-f", "--n", "10000000", "--depth", "1", "--shifts", "2"]);
    let r = json(&o);
    assert_eq!(r["verdicts"][2]["detail"]["checked"], serde_json::json!(["100", "1000000"]));
    assert_eq!(r["verdicts"][1]["name"], "sum-free");
    assert_eq!(r["verdicts"][1]["holds"], true);
}

#[test]
fn construct_zero_and_sturmian() {
    let dir = tempfile::tempdir().unwrap();
    let sq = write(dir.path(), "sq.json", r#"{"set": "kind=monomial exp=2", "k": 3, "bound": 10000, "f": {"random": "uniform"}}"#);
    let out = dir.path().join("z");
    let o = interp(&["construct", "--kind", "zero", "--problem", &sq, "--out-dir", out.to_str().unwrap(), "--seed", "7", "--n-max", "64"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let word = fs::read_to_string(out.join("x.word")).unwrap();
    assert!(word.starts_with("k=3\n"));
    assert_eq!(word.lines().nth(1).unwrap().len(), 10_000);

    let no_seed = interp(&["construct", "--kind", "zero", "--problem", &sq, "--out-dir", out.to_str().unwrap(), "--n-max", "8"]);
    assert_eq!(code(&no_seed), 2);

    let st = write(dir.path(), "st.json", r#"{"set": "kind=sturmian cf=0,2,2,2,2,2,2,2,2", "k": 2, "bound": 5000, "f": {"constant": 1}}"#);
    let out = dir.path().join("s");
    let o = interp(&["construct", "--kind", "sturmian", "--problem", &st, "--out-dir", out.to_str().unwrap(), "--n-max", "20"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r: Value = serde_json::from_slice(&fs::read(out.join("report.json")).unwrap()).unwrap();
    let names: Vec<&str> = r["verdicts"].as_array().unwrap().iter().map(|v| v["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["restriction", "zero-off-S", "factor-bound"]);
}

#[test]
fn construct_mixing_refuses_syndetic_sets() {
    let dir = tempfile::tempdir().unwrap();
    let evens = write(dir.path(), "e.json", r#"{"set": "kind=ap a=2 b=0", "k": 2, "bound": 4096, "f": {"constant": 1}}"#);
    let out = dir.path().join("m");
    let o = interp(&["construct", "--kind", "mixing", "--problem", &evens, "--out-dir", out.to_str().unwrap(), "--order", "4"]);
    assert_eq!(code(&o), 1);
    let refusal: Value = serde_json::from_slice(&fs::read(out.join("refusal.json")).unwrap()).unwrap();
    assert_eq!(refusal["predicate"], "syndetic");
    assert_eq!(refusal["scale"]["g"], "2");

    let pw = write(dir.path(), "p.json", r#"{"set": "kind=powers base=2", "k": 2, "bound": 4096, "f": {"random": "uniform"}}"#);
    let out = dir.path().join("p");
    let o = interp(&["construct", "--kind", "mixing", "--problem", &pw, "--out-dir", out.to_str().unwrap(), "--order", "4", "--seed", "3"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn construct_ergodic_with_bad_problem_files() {
    let dir = tempfile::tempdir().unwrap();
    let cubes = write(dir.path(), "c.json", r#"{"set": "kind=monomial exp=3", "k": 2, "bound": 100000, "f": {"cyclic": true}}"#);
    let out = dir.path().join("e");
    let o = interp(&["construct", "--kind", "ergodic", "--problem", &cubes, "--out-dir", out.to_str().unwrap(), "--seed", "9"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let trace: Value = serde_json::from_slice(&fs::read(out.join("trace.json")).unwrap()).unwrap();
    let ms: Vec<&str> = trace["levels"].as_array().unwrap().iter().map(|l| l["m"].as_str().unwrap()).collect();
    assert_eq!(ms, ["1", "6", "168"]);

    let dense = write(dir.path(), "d.json", r#"{"set": "kind=ap a=2 b=0", "k": 2, "bound": 1000, "f": {"constant": 1}}"#);
    let o = interp(&["construct", "--kind", "ergodic", "--problem", &dense, "--out-dir", out.to_str().unwrap(), "--seed", "9"]);
    assert_eq!(code(&o), 1);

    let bad = write(dir.path(), "b.json", r#"{"set": "kind=ap a=2 b=0", "k": 2, "bound": 1000, "f": {"pairs": [[2, 1]]}}"#);
    let o = interp(&["construct", "--kind", "zero", "--problem", &bad, "--out-dir", out.to_str().unwrap(), "--n-max", "4"]);
    assert_eq!(code(&o), 2);
    let junk = write(dir.path(), "j.json", r#"{"set": "kind=ap a=2 b=0", "k": 2}"#);
    let o = interp(&["construct", "--kind", "zero", "--problem", &junk, "--out-dir", out.to_str().unwrap(), "--n-max", "4"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let pw = write(dir.path(), "p.json", r#"{"set": "kind=powers base=2", "k": 2, "bound": 100000, "f": {"random": "uniform"}}"#);
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = interp(&[
            "construct", "--kind", "minimal", "--problem", &pw, "--out-dir", out.to_str().unwrap(),
            "--seed", "5", "--levels", "1", "--faults", "2",
        ]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        out
    };
    let (a, b) = (run("a"), run("b"));
    let mut names: Vec<_> = fs::read_dir(&a).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert!(names.iter().any(|n| n == "report.json"));
    for n in &names {
        assert_eq!(fs::read(a.join(n)).unwrap(), fs::read(b.join(n)).unwrap(), "{n:?} differs");
    }

    let csv = |name: &str| {
        let p = dir.path().join(name);
        let o = interp(&["count", "--m", "1..=12", "--delta", "1/4", "--k", "3", "--oracle", "--out", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        fs::read(p).unwrap()
    };
    assert_eq!(csv("a.csv"), csv("b.csv"));
}

#[test]
fn word_stats_on_mechanical_words() {
    let o = interp(&["word-stats", "--mechanical", "5/12", "--len", "600", "--n-max", "30", "--balanced"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["verdicts"][0]["holds"], true);
    let counts = r["results"]["profile"]["counts"].as_array().unwrap();
    assert_eq!(counts.last().unwrap(), "12");

    let dir = tempfile::tempdir().unwrap();
    let w = write(dir.path(), "w.word", "k=2\n0110100110010110\n");
    let o = interp(&["word-stats", "--word", &w, "--n-max", "8", "--balanced"]);
    assert_eq!(code(&o), 1);
    assert_eq!(code(&interp(&["word-stats", "--n-max", "3"])), 2);
}
