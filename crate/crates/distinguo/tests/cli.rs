mod common;

use common::{distinguo, distinguo_env, validated};
use distinguo::graph6::emit_graph6;
use distinguo_core::graph::{make_family, Family};

#[test]
fn solve_c9_gentle() {
    let r = distinguo(&["solve", "--family", "cycle:9", "--d", "2", "--first", "gentle"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc = validated(&r.stdout);
    assert_eq!(doc["value"], "Gentle");
    assert_eq!(doc["status"], "solved");
    assert_eq!(doc["d"], 2);
    assert_eq!(doc["first_player"], "Gentle");
    assert!(doc["nodes_expanded"].as_u64().unwrap() > 0);
}

#[test]
fn solve_with_threads_agrees() {
    for threads in ["1", "3"] {
        let r = distinguo(&["solve", "--family", "cycle:7", "--d", "2", "--first", "gentle", "--threads", threads]);
        assert_eq!(r.code, 0);
        assert_eq!(validated(&r.stdout)["value"], "Rascal");
    }
    let a = distinguo(&["solve", "--family", "hypercube:3", "--d", "3", "--first", "rascal", "--threads", "4"]);
    let b = distinguo(&["solve", "--family", "hypercube:3", "--d", "3", "--first", "rascal", "--threads", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(validated(&a.stdout)["value"], "Gentle");
}

/// Least number of colors of a distinguishing coloring of `C_n`, by trying
/// every coloring against every rotation and reflection.
fn brute_force_cycle_dnum(n: usize) -> usize {
    let maps: Vec<Vec<usize>> = (0..n)
        .flat_map(|r| [(0..n).map(|i| (i + r) % n).collect(), (0..n).map(|i| (r + n - i) % n).collect()])
        .filter(|m: &Vec<usize>| m.iter().enumerate().any(|(i, &j)| i != j))
        .collect();
    (1..=n)
        .find(|&d| {
            (0..d.pow(n as u32)).any(|code| {
                let c: Vec<usize> = (0..n).map(|i| code / d.pow(i as u32) % d).collect();
                maps.iter().all(|m| (0..n).any(|i| c[m[i]] != c[i]))
            })
        })
        .unwrap()
}

#[test]
fn dnum_from_graph6() {
    let c5 = emit_graph6(&make_family(Family::Cycle, 5).unwrap());
    let r = distinguo(&["dnum", "--graph6", &c5]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc = validated(&r.stdout);
    assert_eq!(doc["value"].as_u64().unwrap() as usize, brute_force_cycle_dnum(5));
    assert_eq!(doc["value"], 3);
    let text = distinguo(&["dnum", "--graph6", &c5, "--format", "text"]);
    assert_eq!(text.stdout.trim(), "3");
}

#[test]
fn verify_c8_exhaustive() {
    let r = distinguo(&["verify", "--strategy", "c8", "--mode", "exhaustive"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc = validated(&r.stdout);
    assert_eq!(doc["verified"], true);
    assert_eq!(doc["leaf_count"], 6144);
    assert_eq!(doc["failure_count"], 0);
}

#[test]
fn printed_c10_fails_and_failures_replay() {
    let r = distinguo(&["verify", "--strategy", "c10-as-printed"]);
    assert_eq!(r.code, 1);
    let doc = validated(&r.stdout);
    assert_eq!(doc["verified"], false);
    assert!(doc["failure_count"].as_u64().unwrap() > 0);
    let first = serde_json::to_string(&doc["failures"][0]).unwrap();
    let replay = distinguo(&["replay", "--family", "cycle:10", "--d", "2", "--first", "rascal", "--moves", &first]);
    assert_eq!(replay.code, 0, "{}", replay.stderr);
    let rd = validated(&replay.stdout);
    assert_eq!(rd["terminal"], true);
    assert_eq!(rd["winner"], "Rascal");
}

#[test]
fn replay_partial_game() {
    let r = distinguo(&["replay", "--family", "cycle:4", "--d", "2", "--first", "gentle", "--moves", "0:1,2:1"]);
    assert_eq!(r.code, 0);
    let doc = validated(&r.stdout);
    assert_eq!(doc["terminal"], false);
    assert_eq!(doc["to_move"], "Gentle");
    assert_eq!(doc["colors"], serde_json::json!([1, 0, 1, 0]));
    let illegal = distinguo(&["replay", "--family", "cycle:4", "--d", "2", "--first", "gentle", "--moves", "0:1,0:2"]);
    assert_eq!(illegal.code, 2);
}

#[test]
fn verify_random_is_reproducible() {
    let args = ["verify", "--strategy", "prime-cycle", "--family", "cycle:11", "--mode", "random", "--trials", "200", "--seed", "5"];
    let a = distinguo(&args);
    let b = distinguo(&args);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    let doc = validated(&a.stdout);
    assert_eq!(doc["games_played"], 200);
    assert_eq!(doc["seed"], 5);
}

#[test]
fn gen_and_aut() {
    let r = distinguo(&["gen", "--family", "hypercube:3"]);
    let doc = validated(&r.stdout);
    assert_eq!(doc["n"], 8);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 12);
    let text = distinguo(&["gen", "--family", "cycle:5", "--format", "text"]);
    assert_eq!(text.stdout.trim(), "Dhc");

    let aut = validated(&distinguo(&["aut", "--family", "hypercube:3"]).stdout);
    assert_eq!(aut["order"], 48);
    assert_eq!(aut["orbits"].as_array().unwrap().len(), 1);
    let p4 = validated(&distinguo(&["aut", "--family", "path:4"]).stdout);
    assert_eq!(p4["order"], 2);
    assert_eq!(p4["generators"], serde_json::json!([[3, 2, 1, 0]]));
}

#[test]
fn gnum_values() {
    let inf = distinguo(&["gnum", "--family", "cycle:6", "--first", "gentle"]);
    let doc = validated(&inf.stdout);
    assert_eq!(doc["value"], "inf(order2-certificate)");
    assert_eq!(doc["certificate"]["order"], 2);
    let text = distinguo(&["gnum", "--family", "cycle:6", "--first", "gentle", "--format", "text"]);
    assert!(text.stdout.contains("inf(order2-certificate)"));

    let k2 = validated(&distinguo(&["gnum", "--family", "disjoint_k2:3", "--first", "rascal", "--dmax", "6"]).stdout);
    assert_eq!(k2["value"], 4);
    let c7 = validated(&distinguo(&["gnum", "--family", "cycle:7", "--first", "gentle", "--dmax", "2"]).stdout);
    assert_eq!(c7["status"], "unknown");
    assert_eq!(c7["unknown_at_least"], 3);
}

#[test]
fn resource_outcomes_are_not_values() {
    let r = distinguo(&["solve", "--family", "hypercube:5", "--d", "2", "--first", "rascal", "--work-budget", "10000000"]);
    assert_eq!(r.code, 3);
    let doc = validated(&r.stdout);
    assert_eq!(doc["status"], "resource-bounded");
    assert!(doc.get("value").is_none());

    let env = distinguo_env(&["solve", "--family", "cycle:9", "--d", "2", "--first", "gentle"], &[("DISTINGUO_MEMO_BUDGET", "10")]);
    assert_eq!(env.code, 3);
    assert_eq!(validated(&env.stdout)["status"], "resource-bounded");

    let flag = distinguo_env(
        &["solve", "--family", "cycle:9", "--d", "2", "--first", "gentle", "--memo-budget", "1000000"],
        &[("DISTINGUO_MEMO_BUDGET", "10")],
    );
    assert_eq!(flag.code, 0);

    let g = distinguo(&["gnum", "--family", "cycle:9", "--first", "gentle", "--node-budget", "50"]);
    assert_eq!(g.code, 3);
    assert_eq!(validated(&g.stdout)["status"], "resource-bounded");

    let v = distinguo(&["verify", "--strategy", "involutive-bar", "--mode", "exhaustive"]);
    assert_eq!(v.code, 3);
    assert_eq!(validated(&v.stdout)["status"], "resource-bounded");
}

#[test]
fn probe_reports() {
    let empty = distinguo(&["probe"]);
    assert_eq!(empty.code, 0);
    let doc = validated(&empty.stdout);
    assert!(doc["primes"].as_array().unwrap().is_empty());
    assert!(doc["candidates"].as_array().unwrap().is_empty());
    assert!(doc["disclaimer"].as_str().unwrap().contains("not a proof"));

    let r = validated(&distinguo(&["probe", "--primes", "7,11"]).stdout);
    assert_eq!(r["primes"][0]["outcome"], "Rascal");
    assert_eq!(r["primes"][1]["outcome"], "Gentle");

    let capped = validated(&distinguo(&["probe", "--primes", "13", "--node-budget", "100"]).stdout);
    assert_eq!(capped["primes"][0]["outcome"], "resource-bounded");

    // the rigid 6-vertex graph and C5
    let rigid = "EhD_";
    let c = validated(&distinguo(&["probe", "--graph6", rigid, "--graph6", "Dhc"]).stdout);
    assert_eq!(c["candidates"][0]["candidate"], true);
    assert_eq!(c["candidates"][0]["values"][0]["outcome"], "1");
    assert_eq!(c["candidates"][1]["candidate"], false);
}

#[test]
fn usage_errors() {
    let both = distinguo(&["solve", "--family", "cycle:5", "--graph6", "Dhc", "--d", "2", "--first", "gentle"]);
    assert_eq!(both.code, 2);
    let none = distinguo(&["aut"]);
    assert_eq!(none.code, 2);
    let bad = distinguo(&["aut", "--graph6", "D?"]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("byte 2"), "{}", bad.stderr);
    assert_eq!(distinguo(&["verify", "--strategy", "nope"]).code, 2);
    assert_eq!(distinguo(&["verify", "--strategy", "c8", "--family", "cycle:9"]).code, 2);
    assert_eq!(distinguo(&["solve", "--family", "cycle:2", "--d", "2", "--first", "gentle"]).code, 2);
    assert_eq!(distinguo(&["solve", "--family", "cycle:5", "--d", "2", "--first", "nobody"]).code, 2);
    assert_eq!(distinguo(&["solve", "--family", "cycle:5", "--d", "2", "--first", "gentle", "--threads", "0"]).code, 2);
    assert_eq!(distinguo(&["frobnicate"]).code, 2);
}

#[test]
fn reproduce_subset_is_deterministic() {
    let args = ["reproduce", "--only", "C6,Q3,C3"];
    let a = distinguo(&args);
    let b = distinguo(&args);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    let doc = validated(&a.stdout);
    let rows = doc["rows"].as_array().unwrap();
    let find = |inst: &str, q: &str| rows.iter().find(|r| r["instance"] == inst && r["quantity"] == q).unwrap();
    assert_eq!(find("C6", "D_R")["status"], "MATCH");
    assert_eq!(find("C6", "D_R")["computed"], "3");
    assert_eq!(find("Q3", "D_R")["status"], "MATCH");
    assert_eq!(find("C3", "D_R")["computed"], "inf(order2-certificate)");
    assert_eq!(find("C3", "D_G")["status"], "CONSISTENT");
    let text = distinguo(&["reproduce", "--only", "C6", "--format", "text"]);
    assert!(text.stdout.lines().any(|l| l.starts_with("C6") && l.contains("D_R") && l.ends_with("MATCH")), "{}", text.stdout);
}

#[test]
fn strategies_listing() {
    let r = distinguo(&["strategies"]);
    assert_eq!(r.code, 0);
    for name in ["c8", "c10", "c9", "k4k2", "q4", "k2-union", "mirror", "involutive-bar"] {
        assert!(r.stdout.lines().any(|l| l.split_whitespace().next() == Some(name)), "{name}");
    }
}
