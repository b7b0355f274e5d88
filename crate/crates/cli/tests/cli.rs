use std::process::{Command, Output};

fn absorder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_absorder")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn non_modular_subgroup_reports_witness() {
    let o = absorder(&["modular", "--group", "S4", "--subgroup", "(1 2);(3 4)"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("modular: no"));
    assert!(s.contains("witness: coset (1 3)(2 4)H has no minimum; minimal elements (1 3)(2 4), (1 4)(2 3)"), "{s}");
}

#[test]
fn modular_subgroup_exits_cleanly() {
    let o = absorder(&["modular", "-g", "S4", "-s", "(1 2);(2 3)", "--out", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["modular"], true);
    assert_eq!(v["cosets"].as_array().unwrap().len(), 4);
    assert!(v["witness"].is_null());
}

#[test]
fn matching_bijection_report() {
    let o = absorder(&["matchings", "--n", "3", "--check-bijection"]);
    let s = stdout(&o);
    assert!(s.contains("matchings: 15"));
    assert!(s.contains("round trip matching -> element -> matching: ok"));
    assert!(s.contains("rank polynomial: 1 + 6q + 8q^2"));
    // The flip graph has more edges than the reflection graph.
    assert!(s.contains("flip graph edges: 45, reflection graph edges: 30"));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn poset_exports_are_byte_stable() {
    let a = absorder(&["poset", "--group", "S4", "--action", "self", "--out", "dot"]);
    let b = absorder(&["--threads", "2", "poset", "--group", "S4", "--action", "self", "--out", "dot"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert!(s.starts_with("digraph \"Abs(S4)\""));
    assert_eq!(s.matches(" [label=").count(), 24);
    assert_eq!(s.matches(" -> ").count(), 72);
}

#[test]
fn poset_json_schema() {
    let o = absorder(&["poset", "-g", "S4", "-s", "(1 2);(3 4)", "--out", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let elements = v["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 6);
    assert_eq!(elements[0]["label"], "()H");
    assert_eq!(elements[0]["rank"], 0);
    assert_eq!(v["covers"].as_array().unwrap().len(), 8);
}

#[test]
fn polynomials_and_quasi_modularity() {
    let s = stdout(&absorder(&["poly", "-g", "B3"]));
    assert_eq!(s, "W_T(q) = 1 + 9q + 23q^2 + 15q^3\n");
    let o = absorder(&["quasi", "-g", "S6", "--embed", "b-in-s"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("quasi-modular: yes") && s.contains("modular: no"), "{s}");
}

#[test]
fn lattice_outputs() {
    let s = stdout(&absorder(&["lattice", "-g", "S4"]));
    assert!(s.starts_with("15 flats, rank 3"));
    assert!(s.contains("characteristic polynomial: -6 + 11q - 6q^2 + q^3"), "{s}");
    let o = absorder(&["lattice", "-g", "B3", "-s", "(1 -1);((1 2))"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all agree: yes"));
    let o = absorder(&["lattice", "-g", "S4", "--out", "dot"]);
    assert!(stdout(&o).starts_with("digraph \"L(S4)\""));
}

#[test]
fn alternating_alias_and_checks() {
    let o = absorder(&["alt", "--group", "B3", "--s0", "(1 -1)", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("rank polynomial: 1 + 8q + 15q^2"), "{s}");
    assert!(s.contains("R0 order ideal: yes (24 of 48 elements)"));
    let o = absorder(&["alternating", "-g", "S4", "--s0", "(1 3)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn chain_table() {
    let o = absorder(&["chains", "-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 1 + 6);
    assert!(s.lines().last().unwrap().ends_with("yes"));
    let row = stdout(&absorder(&["chains", "-n", "5", "-k", "3", "--out", "json"]));
    let v: serde_json::Value = serde_json::from_str(&row).unwrap();
    assert_eq!(v[0]["formula"], 300);
    assert_eq!(v[0]["brute_force"], 300);
}

#[test]
fn verify_selected_criteria() {
    let o = absorder(&["verify", "4", "6", "--level", "desk"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("PASS [ 4]") && s.contains("PASS [ 6]"));
    assert!(s.ends_with("2 of 2 criteria passed\n"));
    assert_eq!(absorder(&["verify", "15"]).status.code(), Some(2));
}

#[test]
fn search_reports_hits() {
    let o = absorder(&["search", "maximum-element", "-g", "S4", "--out", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], "maximum-element");
    assert_eq!(v["classes_examined"], 11);
    assert!(v["hits"].as_array().unwrap().iter().any(|h| h["order"] == 4 && h["modular"] == false));
    assert_eq!(absorder(&["search", "non-graded", "-g", "S5", "--max-order", "24"]).status.code(), Some(2));
}

#[test]
fn parse_errors_exit_with_usage() {
    for args in [
        vec!["poset", "--group", "Q4"],
        vec!["modular", "--group", "S4", "--subgroup", "(1 9)"],
        vec!["modular", "--group", "S4"],
        vec!["frobnicate"],
        vec!["poly", "-g", "S4", "--out", "dot"],
    ] {
        let o = absorder(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"), "{args:?}");
    }
}
