use std::path::Path;
use std::process::{Command, Output};

fn sptg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sptg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn family_generate_solve_query() {
    let dir = tempfile::tempdir().unwrap();
    let game = path(dir.path(), "fam.json");
    assert!(sptg(&["generate", "exp-family", "3", "-o", &game]).status.success());

    let v = sptg(&["value", &game, "--state", "vl3", "--time", "0"]);
    assert_eq!(stdout(&v).trim(), "7/8");
    let v = sptg(&["value", &game, "--state", "vr0", "--time", "1/3", "--decimal"]);
    assert_eq!(stdout(&v).trim(), "2/3 (0.666666666667)");

    let yes = sptg(&["decide", &game, "--state", "vl3", "--threshold", "7/8"]);
    assert_eq!(yes.status.code(), Some(0));
    let no = sptg(&["decide", &game, "--state", "vl3", "--threshold", "15/16"]);
    assert_eq!((no.status.code(), stdout(&no).trim()), (Some(1), "false"));

    let ok = sptg(&["verify", &game, "--family", "3"]);
    assert!(ok.status.success(), "{}", stdout(&ok));
    let wrong = sptg(&["verify", &game, "--family", "2"]);
    assert_eq!(wrong.status.code(), Some(1));

    let stats = stdout(&sptg(&["stats", &game]));
    assert!(stats.contains("event_points 8"), "{stats}");
    assert!(stats.contains("  vl3 8"), "{stats}");
}

#[test]
fn solve_formats_and_render() {
    let dir = tempfile::tempdir().unwrap();
    let game = path(dir.path(), "fam.json");
    sptg(&["generate", "exp-family", "2", "-o", &game]);
    let json = path(dir.path(), "values.json");
    let csv = path(dir.path(), "values.csv");
    assert!(sptg(&["solve", &game, "-o", &json]).status.success());
    assert!(sptg(&["solve", &game, "--format", "csv", "-o", &csv]).status.success());
    assert!(std::fs::read_to_string(&csv).unwrap().starts_with("state,t,v"));
    let vi = stdout(&sptg(&["solve", &game, "--method", "vi"]));
    assert_eq!(vi, std::fs::read_to_string(&json).unwrap());

    let a = stdout(&sptg(&["render", &json, "--states", "vl2,vr2"]));
    let b = stdout(&sptg(&["render", &csv, "--states", "vl2,vr2"]));
    assert_eq!(a, b);
    assert_eq!(a.matches("<polyline").count(), 2);
    let from_game = stdout(&sptg(&["render", &game, "--relative", "1/2"]));
    assert!(from_game.contains("v + 1/2*t"));
    assert!(!sptg(&["render", &json, "--states", "nope"]).status.success());
}

#[test]
fn reductions_carry_their_thresholds() {
    let dir = tempfile::tempdir().unwrap();
    let sat = path(dir.path(), "sat.json");
    let unsat = path(dir.path(), "unsat.json");
    assert!(sptg(&["generate", "np", "(or x1 x2)", "-o", &sat]).status.success());
    assert!(sptg(&["generate", "np", "(and x1 (not x1))", "-o", &unsat]).status.success());
    assert_eq!(stdout(&sptg(&["value", &sat])).trim(), "33/16");
    assert_eq!(sptg(&["decide", &sat]).status.code(), Some(0));
    assert_eq!(sptg(&["decide", &unsat]).status.code(), Some(1));

    let conp = path(dir.path(), "conp.json");
    sptg(&["generate", "conp", "x1", "-o", &conp]);
    assert_eq!(stdout(&sptg(&["value", &conp])).trim(), "15/8");

    let cnf = path(dir.path(), "f.cnf");
    std::fs::write(&cnf, "p cnf 2 2\n1 0\n-1 2 0\n").unwrap();
    let dimacs = path(dir.path(), "dimacs.json");
    assert!(sptg(&["generate", "np", "--dimacs", &cnf, "-o", &dimacs]).status.success());
    assert_eq!(sptg(&["decide", &dimacs]).status.code(), Some(0));

    let qbf = path(dir.path(), "qbf.json");
    let text = "(forall (x1) (exists (x2) (or (and x1 x2) (and (not x1) (not x2)))))";
    assert!(sptg(&["generate", "tqbf", text, "-o", &qbf]).status.success());
    assert_eq!(sptg(&["decide", &qbf]).status.code(), Some(0));
}

#[test]
fn transforms() {
    let dir = tempfile::tempdir().unwrap();
    let game = path(dir.path(), "fam.json");
    sptg(&["generate", "exp-family", "2", "-o", &game]);
    let big = path(dir.path(), "big.json");
    assert!(sptg(&["generate", "rescale", &game, "2", "-o", &big]).status.success());
    assert_eq!(stdout(&sptg(&["value", &big, "--state", "vr0", "--time", "2"])).trim(), "2");
    let d3 = path(dir.path(), "d3.json");
    assert!(sptg(&["generate", "degree3", &game, "-o", &d3]).status.success());
    assert_eq!(stdout(&sptg(&["value", &d3, "--state", "vl2", "--time", "0"])).trim(), "3/4");
    assert!(sptg(&["verify", &d3]).status.success());
}

#[test]
fn bad_input_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let game = path(dir.path(), "bad.json");
    std::fs::write(&game, r#"{"states": [{"id": "a", "owner": "min"}], "edges": [{"from": "a", "to": "b", "cost": "1"}]}"#).unwrap();
    let out = sptg(&["stats", &game]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("edges[0].to"));
    assert_eq!(sptg(&["value", &game]).status.code(), Some(2));
}
