//! End-to-end tests of the trmap binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn trmap(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trmap"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn trmap");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("trmap run")
}

fn stdout_of(args: &[&str], stdin: &str) -> String {
    let out = trmap(args, stdin);
    assert!(
        out.status.success(),
        "trmap {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn gen_shuffles_size_one() {
    assert_eq!(stdout_of(&["gen", "shuffles", "-n", "1"], ""), "aA\nbB\n");
}

#[test]
fn gen_counts() {
    assert_eq!(stdout_of(&["gen", "ncps", "-n", "3"], "").lines().count(), 5);
    assert_eq!(stdout_of(&["gen", "trees", "-n", "3"], "").lines().count(), 5);
    assert_eq!(
        stdout_of(&["gen", "binary-trees", "-n", "4"], "").lines().count(),
        14
    );
    assert_eq!(
        stdout_of(&["gen", "shuffles", "-n", "3"], "").lines().count(),
        70
    );
}

#[test]
fn gen_maps_size_zero() {
    let out = stdout_of(&["gen", "maps", "-n", "0"], "");
    assert_eq!(out.lines().count(), 1);
    let json: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(json["h"], 1);
    assert_eq!(json["tree"], serde_json::json!([]));
}

#[test]
fn convert_shuffle_map_round_trip() {
    let words = stdout_of(&["gen", "shuffles", "-n", "3"], "");
    let maps = stdout_of(&["convert", "--from", "shuffle", "--to", "map"], &words);
    let back = stdout_of(&["convert", "--from", "map", "--to", "shuffle"], &maps);
    assert_eq!(back, words);
}

#[test]
fn convert_cdv_round_trip_sampled() {
    // Every 55th word of the 5544 size-5 shuffles: about a hundred samples.
    let all = stdout_of(&["gen", "shuffles", "-n", "5"], "");
    let sample: Vec<&str> = all.lines().step_by(55).collect();
    assert!(sample.len() >= 100);
    let input = sample.join("\n");
    let pairs = stdout_of(&["convert", "--from", "shuffle", "--to", "pair-cdv"], &input);
    let back = stdout_of(&["convert", "--from", "pair-cdv", "--to", "shuffle"], &pairs);
    assert_eq!(back.trim_end(), input);
}

#[test]
fn convert_walk_fixture() {
    let walk = stdout_of(
        &["convert", "--from", "shuffle", "--to", "walk"],
        "abbAbaaBBAAB\n",
    );
    assert_eq!(walk, "NEESENNWWSSW\n");
    let back = stdout_of(&["convert", "--from", "walk", "--to", "shuffle"], &walk);
    assert_eq!(back, "abbAbaaBBAAB\n");
}

#[test]
fn figure_pipeline_agrees_with_theta_route() {
    // Through the map: shuffle -> map -> (tree, partition).
    let map = stdout_of(&["convert", "--from", "shuffle", "--to", "map"], "baAaBA\n");
    let pair = stdout_of(&["convert", "--from", "map", "--to", "pair"], &map);
    let pair_json: serde_json::Value = serde_json::from_str(pair.trim()).unwrap();

    // Through the codes: shuffle -> (tree, binary) -> Theta(binary).
    let cdv = stdout_of(
        &["convert", "--from", "shuffle", "--to", "pair-cdv"],
        "baAaBA\n",
    );
    let cdv_json: serde_json::Value = serde_json::from_str(cdv.trim()).unwrap();
    assert_eq!(pair_json["tree"], cdv_json["tree"]);

    let binary = format!("{}\n", cdv_json["binary"].as_str().unwrap());
    let ncp = stdout_of(&["convert", "--from", "binary-tree", "--to", "ncp"], &binary);
    let ncp_json: serde_json::Value = serde_json::from_str(ncp.trim()).unwrap();
    assert_eq!(pair_json["partition"], ncp_json);

    // And back through the inverse bijection.
    let map_back = stdout_of(&["convert", "--from", "pair", "--to", "map"], &pair);
    let word_back = stdout_of(&["convert", "--from", "map", "--to", "shuffle"], &map_back);
    assert_eq!(word_back, "baAaBA\n");
}

#[test]
fn verify_counts_suite() {
    let out = trmap(&["verify", "-n", "2", "--suite", "counts"], "");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS counting"), "{text}");
    assert!(text.contains("1, 2, 10"), "{text}");
}

#[test]
fn verify_all_small() {
    let out = trmap(&["verify", "-n", "2", "--suite", "all"], "");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = trmap(&["verify", "--suite", "bogus"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn convert_reports_line_numbers() {
    let out = trmap(&["convert", "--from", "shuffle", "--to", "map"], "aA\nxx\n");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn render_is_deterministic() {
    let map = stdout_of(&["convert", "--from", "shuffle", "--to", "map"], "baAaBA\n");
    let dot1 = stdout_of(&["render", "--kind", "map", "--format", "dot"], &map);
    let dot2 = stdout_of(&["render", "--kind", "map"], &map);
    assert_eq!(dot1, dot2);
    assert!(dot1.contains("penwidth=2"), "tree edges are bold");
    assert!(dot1.contains("root ->"), "root arrow present");
}

#[test]
fn render_loop_map() {
    let map = stdout_of(&["convert", "--from", "shuffle", "--to", "map"], "bB\n");
    let dot = stdout_of(&["render", "--kind", "map"], &map);
    assert_eq!(dot.matches("v0 -> v0").count(), 1);
}

#[test]
fn render_all_figure_objects() {
    // The full pipeline of the three-edge figure word renders all four
    // object kinds.
    let map = stdout_of(&["convert", "--from", "shuffle", "--to", "map"], "baAaBA\n");
    assert!(stdout_of(&["render", "--kind", "map"], &map).starts_with("digraph"));

    let pair = stdout_of(&["convert", "--from", "map", "--to", "pair"], &map);
    let pair_json: serde_json::Value = serde_json::from_str(pair.trim()).unwrap();
    let tree = format!("{}\n", pair_json["tree"].as_str().unwrap());
    assert!(stdout_of(&["render", "--kind", "tree"], &tree).starts_with("digraph"));
    let ncp = format!("{}\n", pair_json["partition"]);
    assert!(stdout_of(&["render", "--kind", "ncp"], &ncp).starts_with("graph"));

    let cdv = stdout_of(
        &["convert", "--from", "shuffle", "--to", "pair-cdv"],
        "baAaBA\n",
    );
    let cdv_json: serde_json::Value = serde_json::from_str(cdv.trim()).unwrap();
    let binary = format!("{}\n", cdv_json["binary"].as_str().unwrap());
    let dot = stdout_of(&["render", "--kind", "binary-tree"], &binary);
    assert!(dot.contains("shape=square"));
}
