use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};
use tempfile::TempDir;

fn bondkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bondkit"))
        .args(args)
        .output()
        .expect("run bondkit")
}

fn ok_json(args: &[&str]) -> Value {
    let out = bondkit(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn lines(args: &[&str]) -> Vec<Value> {
    let out = bondkit(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn gen(dir: &TempDir, name: &str, args: &[&str]) -> String {
    let p = dir.path().join(name);
    let ps = p.to_str().unwrap().to_string();
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend(["--out", &ps]);
    assert!(bondkit(&all).status.success());
    ps
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn solve_weighted_square() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.txt", "4 4\n0 1 3\n1 2 1\n2 3 2\n3 0 5\n");
    for mode in ["auto", "oracle", "k5e"] {
        let v = ok_json(&["solve", &g, "--mode", mode]);
        assert_eq!(v["value"], 8);
        assert_eq!(v["edges"], serde_json::json!([0, 3]));
        assert_eq!(v["mode"], mode);
    }
    let neg = write(&dir, "neg.txt", "3 3\n0 1 -1\n1 2 -4\n0 2 -2\n");
    let v = ok_json(&["solve", &neg]);
    assert_eq!(v["value"], 0);
    assert_eq!(v["edges"], serde_json::json!([]));
}

#[test]
fn k5e_mode_rejects_wagner_block() {
    let dir = TempDir::new().unwrap();
    let v8 = gen(&dir, "v8.txt", &["wagner", "8"]);
    let text = std::fs::read_to_string(&v8).unwrap();
    // a disjoint triangle on nodes 8..10 next to the Wagner graph
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).skip(1).collect();
    let g = write(
        &dir,
        "split.txt",
        &format!("11 15\n{}\n8 9\n9 10\n8 10\n", body.join("\n")),
    );
    let out = bondkit(&["solve", &g, "--mode", "k5e"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("K5-e"));
    assert_eq!(ok_json(&["solve", &g])["value"], ok_json(&["solve", &g, "--mode", "oracle"])["value"]);
}

#[test]
fn wagner_generalized_cycle_bound_is_a_facet() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "v8.txt", &["wagner", "8"]);
    let v = ok_json(&["polytope", "check", &g, "--ineq", "gen-cycle-sum:outer:2"]);
    assert_eq!(v["facet"], true);
    assert_eq!(v["face_dim"], 11);
}

#[test]
fn five_cycle_has_eleven_facets() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "c5.txt", &["cycle", "5"]);
    let facets = lines(&["polytope", "facets", &g]);
    assert_eq!(facets.len(), 11);
    // every streamed facet reads back as a facet
    let f = write(&dir, "f.json", &serde_json::to_string(&facets[3]).unwrap());
    assert_eq!(ok_json(&["polytope", "check", &g, "--ineq", &f])["facet"], true);
    let all = write(
        &dir,
        "all.jsonl",
        &facets.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("\n"),
    );
    let d = ok_json(&["polytope", "verify-description", &g, "--description", &all]);
    assert_eq!(d["equal"], true);
    assert_eq!(ok_json(&["polytope", "verify-description", &g, "--family", "cycle"])["equal"], true);
}

#[test]
fn classify_hex_fixtures() {
    let dir = TempDir::new().unwrap();
    let h = gen(&dir, "h.txt", &["hex-facet"]);
    let hp = gen(&dir, "hp.txt", &["hex-facet-plus-edge"]);
    for method in ["bonds", "paths"] {
        let a = ok_json(&["cycle", "classify", &h, "--cycle", "outer", "--method", method]);
        assert_eq!(a["classification"], "non-interleaved");
        let b = ok_json(&["cycle", "classify", &hp, "--cycle", "outer", "--method", method]);
        assert_eq!(b["classification"], "interleaved");
        assert!(b["witness"].is_object());
    }
    let k = ok_json(&["oracle", "cycle-intersect", &hp, "--cycle", "outer"]);
    assert_eq!(k["max_intersection"], 4);
}

#[test]
fn lift_round_trip_through_files() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "c4.txt", &["cycle", "4"]);
    let up_g = dir.path().join("up.txt");
    let up_i = dir.path().join("up.json");
    let (ug, ui) = (up_g.to_str().unwrap(), up_i.to_str().unwrap());
    let v = ok_json(&[
        "polytope", "lift", "subdivide", &g, "--ineq", "cycle-homog:outer:0", "--edge", "2", "--pieces", "3",
        "--out-graph", ug, "--out-ineq", ui,
    ]);
    assert_eq!(v["verified"], "facet");
    let down = ok_json(&["polytope", "lift", "contract-path", ug, "--ineq", ui, "--path", "2,4,5,3"]);
    assert_eq!(down["verified"], "facet");
    let orig = ok_json(&["polytope", "check", &g, "--ineq", "cycle-homog:outer:0"]);
    assert_eq!(down["inequality"]["coeffs"], orig["inequality"]["coeffs"]);
    let out = bondkit(&["polytope", "lift", "contract-path", &g, "--ineq", "cycle-sum:outer", "--path", "0,1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn other_lifts_and_switch() {
    let dir = TempDir::new().unwrap();
    let w4 = gen(&dir, "w4.txt", &["wheel", "4"]);
    let a = ok_json(&["polytope", "lift", "node-split", &w4, "--ineq", "cycle-sum:outer", "--node", "0", "--groups", "0,4;3"]);
    assert_eq!(a["verified"], "facet");
    let c4 = gen(&dir, "c4.txt", &["cycle", "4"]);
    let b = ok_json(&["polytope", "lift", "triangle", &c4, "--ineq", "cycle-sum:outer", "--node", "1", "--groups", "0;1;"]);
    assert_eq!(b["verified"], "facet");
    assert_eq!(b["omegas"].as_array().unwrap().len(), 3);
    let s = ok_json(&["polytope", "switch", &c4, "--ineq", "cycle-sum:outer", "--side", "0"]);
    assert_eq!(s["text"], "-x0 + x1 + x2 - x3 <= 0");
    let f = write(&dir, "s.json", &s.to_string());
    let back = ok_json(&["polytope", "switch", &c4, "--ineq", &f, "--side", "0"]);
    assert_eq!(back["text"], "x0 + x1 + x2 + x3 <= 2");
    let loose = ok_json(&["polytope", "check", &c4, "--ineq", "upper:0"]);
    assert_eq!((loose["valid"].clone(), loose["facet"].clone()), (true.into(), false.into()));
}

#[test]
fn gen_round_trips_every_family() {
    let dir = TempDir::new().unwrap();
    let specs: &[&[&str]] = &[
        &["cycle", "6"],
        &["wheel", "5"],
        &["wagner", "6"],
        &["complete", "5"],
        &["prism"],
        &["k3"],
        &["k33"],
        &["k5-e"],
        &["hex-facet"],
        &["hex-facet-plus-edge"],
        &["two-squares"],
    ];
    for (i, s) in specs.iter().enumerate() {
        let p = gen(&dir, &format!("g{i}.txt"), s);
        let text = std::fs::read_to_string(&p).unwrap();
        let v = bondkit(&["solve", &p]);
        assert!(v.status.success(), "{s:?}");
        // generation is deterministic
        let mut args = vec!["gen"];
        args.extend_from_slice(s);
        let again = bondkit(&args);
        assert_eq!(String::from_utf8(again.stdout).unwrap(), text);
    }
}

#[test]
fn spqr_and_oracle_outputs() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", "# two squares sharing an edge\n6 7\n0 1\n1 2\n2 3\n3 0\n1 4\n4 5\n5 2\n");
    let t = ok_json(&["spqr", &g]);
    let kinds: Vec<&str> = t["skeletons"].as_array().unwrap().iter().map(|s| s["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds.len(), 3);
    assert_eq!(kinds.iter().filter(|k| **k == "S").count(), 2);
    assert_eq!(kinds.iter().filter(|k| **k == "P").count(), 1);
    assert_eq!(t["links"].as_array().unwrap().len(), 2);
    let bonds = lines(&["oracle", "bonds", &g]);
    let threaded = lines(&["--threads", "4", "oracle", "bonds", &g]);
    assert_eq!(bonds, threaded);
    assert!(bonds.iter().all(|b| b["side"].is_array() && b["weight"].is_i64()));
    let m = ok_json(&["oracle", "max", &g, "--forced-out", "1"]);
    let s = ok_json(&["solve", &g]);
    assert!(m["value"].as_i64().unwrap() <= s["value"].as_i64().unwrap());
}

#[test]
fn exit_codes_and_errors() {
    let dir = TempDir::new().unwrap();
    assert_eq!(bondkit(&["--version"]).status.code(), Some(0));
    assert!(String::from_utf8(bondkit(&["--version"]).stdout).unwrap().contains("graph format 1"));
    assert_eq!(bondkit(&["--help"]).status.code(), Some(0));
    assert_eq!(bondkit(&["solve"]).status.code(), Some(1));
    assert_eq!(bondkit(&["solve", "missing.txt"]).status.code(), Some(1));
    assert_eq!(bondkit(&["--threads", "0", "suite"]).status.code(), Some(1));
    let bad = write(&dir, "bad.txt", "3 2\n0 1\n1 1\n");
    assert_eq!(bondkit(&["solve", &bad]).status.code(), Some(1));
    let g = gen(&dir, "c5.txt", &["cycle", "5"]);
    assert_eq!(bondkit(&["polytope", "check", &g, "--ineq", "cycle-sum:nope"]).status.code(), Some(1));
    let loose = write(&dir, "l.json", r#"{"coeffs": {"0-1": 1}, "rhs": "5/2"}"#);
    let out = bondkit(&["polytope", "lift", "subdivide", &g, "--ineq", &loose, "--edge", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let big = gen(&dir, "k6.txt", &["complete", "6"]);
    assert_eq!(bondkit(&["polytope", "facets", &big]).status.code(), Some(2));
    assert_eq!(bondkit(&["--node-cap", "4", "oracle", "bonds", &g]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_tables_render() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "w5.txt", &["wheel", "5"]);
    let a = bondkit(&["polytope", "facets", &g]);
    let b = bondkit(&["polytope", "facets", &g]);
    assert_eq!(a.stdout, b.stdout);
    let t = bondkit(&["--table", "polytope", "facets", &g]);
    let text = String::from_utf8(t.stdout).unwrap();
    assert_eq!(text.lines().count(), 27);
    assert!(text.starts_with("coeffs"));
    assert!(Path::new(&g).exists());
}

#[test]
fn suite_filter_runs_one_check() {
    let out = bondkit(&["suite", "--filter", "cycle-facets"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["number"], 2);
    assert_eq!(rows[0]["passed"], true);
    assert_eq!(bondkit(&["suite", "--filter", "no-such-check"]).status.code(), Some(1));
}
