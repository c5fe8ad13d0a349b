use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ice20v")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch_dir(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("ice20v-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn seq_examples() {
    let o = run(&["seq", "--family", "A", "--max-n", "6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{\"family\":\"A\",\"values\":[\"1\",\"3\",\"23\",\"433\",\"19705\",\"2151843\"]}\n");
    let o = run(&["seq", "--family", "B", "--max-n", "4", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,value\n1,\"1\"\n2,\"3\"\n3,\"29\"\n4,\"901\"\n");
    let o = run(&["seq", "--family", "A", "--max-n", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{\"family\":\"A\",\"values\":[]}\n");
    let o = run(&["seq", "--family", "N", "--max-n", "4", "--b", "2", "--c", "1"]);
    assert_eq!(stdout(&o), "{\"family\":\"N\",\"values\":[\"5\",\"23\",\"103\",\"456\"]}\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["seq", "--family", "Q", "--max-n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["seq", "--family", "A", "--max-n", "99"]).status.code(), Some(2));
    assert_eq!(run(&["seq", "--family", "p", "--max-n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["det", "--builder", "t4"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn det_examples() {
    let o = run(&["det", "--builder", "t4", "--n", "3", "--dump"]);
    assert_eq!(stdout(&o), "matrix: [[1,0,0],[2,3,2],[4,8,13]]\ndet: 23\n");
    let o = run(&["det", "--builder", "t4-refined", "--type", "2", "--n", "4"]);
    assert_eq!(stdout(&o), "det: 122 + 182τ + 106τ^2 + 23τ^3\n");
    let o = run(&["det", "--builder", "ik", "--n", "2"]);
    assert_eq!(stdout(&o), "det: 3\n");
    let o = run(&["det", "--builder", "lgv-triangle", "--n", "4"]);
    assert_eq!(stdout(&o), "det: 901\n");
}

#[test]
fn verify_reports() {
    let o = run(&["verify", "--suite", "z20t4", "--max-n", "5"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["id"] == "count_20v(DWBC1, 5) = t4_count(5)"));

    let o = run(&["verify", "--suite", "yang-baxter"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let xf = v["expected_failures"].as_array().unwrap();
    assert!(!xf.is_empty() && xf.iter().all(|c| c["pass"] == false));

    let o = run(&["verify", "--suite", "dwbc3", "--max-n", "5"]);
    assert!(o.status.success());

    let o = run(&["verify", "--suite", "all", "--max-n", "4", "--jobs", "2"]);
    assert!(o.status.success());
    let again = run(&["verify", "--suite", "all", "--max-n", "4", "--jobs", "1"]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn render_paths_and_tilings() {
    let d = scratch_dir("render");
    let one = d.join("one.svg");
    let o = run(&["render", "--boundary", "DWBC1", "--n", "1", "--out", one.to_str().unwrap()]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(&one).unwrap();
    let steps: usize = svg
        .match_indices("data-steps=\"")
        .map(|(i, m)| svg[i + m.len()..].split('"').next().unwrap().parse::<usize>().unwrap())
        .sum();
    assert_eq!(steps, 4);

    let three = d.join("three.svg");
    let o = run(&["render", "--boundary", "DWBC1", "--n", "3", "--all", "--out", three.to_str().unwrap()]);
    assert!(o.status.success());
    for k in 0..23 {
        let svg = std::fs::read_to_string(d.join(format!("three-{k}.svg"))).unwrap();
        assert_eq!(svg.matches("class=\"path\"").count(), 6);
    }

    let region = d.join("t2.json");
    std::fs::write(&region, r####"{"region":["#..","#..","###","###"]}"####).unwrap();
    let t2 = d.join("t2.svg");
    let o = run(&["render", "--input", region.to_str().unwrap(), "--all", "--out", t2.to_str().unwrap()]);
    assert!(o.status.success());
    let files: std::collections::BTreeSet<String> =
        (0..3).map(|k| std::fs::read_to_string(d.join(format!("t2-{k}.svg"))).unwrap()).collect();
    assert_eq!(files.len(), 3);
    assert!(!d.join("t2-3.svg").exists());

    let bad = d.join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(run(&["render", "--input", bad.to_str().unwrap()]).status.code(), Some(2));
    let _ = std::fs::remove_dir_all(&d);
}
