//! Report formats, determinism across thread counts and edge-list files.

mod common;

use std::fs;

use common::run;
use graph_energy::input::{load_subject, read_edge_list, write_edge_list};
use graph_energy::report::{from_json, to_json, Item};
use graph_energy::{main_with, ExitStatus, RunReport};
use graph_energy_core::Graph;
use proptest::prelude::*;

fn in_process(args: &[&str]) -> (ExitStatus, String) {
    let mut argv = vec!["graph-energy".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let status = main_with(argv, &mut out, &mut err);
    (status, String::from_utf8(out).unwrap())
}

fn json_report(args: &[&str]) -> RunReport {
    let mut a = args.to_vec();
    a.push("--json");
    let (status, out) = in_process(&a);
    assert_eq!(status, ExitStatus::Success, "{args:?}");
    from_json(&out).unwrap()
}

/// Strips the fields that legitimately vary between runs.
fn stable(mut r: RunReport) -> RunReport {
    r.wall_time_s = 0.0;
    r.command.clear();
    for item in &mut r.items {
        if let Item::Certificate(c) = item {
            c.timestamp.clear();
        }
    }
    r
}

#[test]
fn json_round_trips_for_every_item_kind() {
    for args in [
        &["energy", "p6:12", "--xcheck"][..],
        &["compare", "cycle:18", "p6:18"],
        &["verify-theorem", "8", "70"],
        &["certify", "all", "--grid-points", "32", "--scan", "40"],
        &["quasi-order", "cycle:8", "p6:8"],
        &["exhaustive-small", "7"],
        &["paper-constants"],
    ] {
        let r = json_report(args);
        assert!(!r.items.is_empty());
        let again = from_json(&to_json(&r).unwrap()).unwrap();
        assert_eq!(again, r, "{args:?}");
    }
}

#[test]
fn certificate_json_carries_required_fields() {
    let (_, out) = in_process(&["certify", "1mod4", "--grid-points", "16", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let cert = v["items"]
        .as_array()
        .unwrap()
        .iter()
        .find(|i| i["kind"] == "certificate")
        .unwrap();
    for key in ["case_tag", "grid_spec", "min_margin", "identities", "timestamp"] {
        assert!(!cert[key].is_null(), "missing {key}");
    }
    assert_eq!(cert["case_tag"], "n≡1 mod 4");
    assert!(cert["min_margin"].as_f64().unwrap() > 0.0);
}

#[test]
fn verdicts_do_not_depend_on_thread_count() {
    let base = ["verify-theorem", "8", "90", "--xcheck"];
    let one = stable(json_report(&[&base[..], &["--threads", "1"]].concat()));
    let four = stable(json_report(&[&base[..], &["--threads", "4"]].concat()));
    assert_eq!(one, four);
    let one = stable(json_report(&["exhaustive-small", "7", "--threads", "1"]));
    let three = stable(json_report(&["exhaustive-small", "7", "--threads", "3"]));
    assert_eq!(one, three);
}

#[test]
fn rows_come_back_in_n_order() {
    let r = json_report(&["verify-theorem", "8", "120", "--threads", "8"]);
    let ns: Vec<usize> = r
        .items
        .iter()
        .map(|i| match i {
            Item::TheoremRow(row) => row.n,
            other => panic!("{other:?}"),
        })
        .collect();
    assert_eq!(ns, (8..=120).collect::<Vec<_>>());
}

#[test]
fn text_and_csv_use_six_decimals() {
    let (_, text) = in_process(&["compare", "cycle:18", "p6:18"]);
    assert!(text.contains("-0.037523"), "{text}");
    let (_, csv) = in_process(&["compare", "cycle:18", "p6:18", "--csv"]);
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(csv.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(&rows[0][0], "table");
    assert_eq!(&rows[1][0], "comparison");
    assert_eq!(&rows[1][6], "-0.037523");
}

#[test]
fn csv_and_json_flags_conflict() {
    assert_eq!(run(&["energy", "cycle:6", "--csv", "--json"]).code, 2);
}

#[test]
fn excluded_orders_are_noted() {
    let (status, text) = in_process(&["verify-theorem", "8", "16"]);
    assert_eq!(status, ExitStatus::Success);
    assert!(text.contains("excluded-reversed") && text.contains("note:"), "{text}");
}

#[test]
fn file_spec_matches_family_spec() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p6_12.edges");
    write_edge_list(&path, &Graph::p6(12).unwrap()).unwrap();
    let spec = format!("file:{}", path.display());
    let a = json_report(&["energy", &spec]);
    let b = json_report(&["energy", "p6:12"]);
    let energy = |r: &RunReport| match &r.items[0] {
        Item::Energy(e) => e.energy,
        other => panic!("{other:?}"),
    };
    assert!((energy(&a) - energy(&b)).abs() < 1e-12);
    let k2 = dir.path().join("k2.edges");
    fs::write(&k2, "n 2\n0 1").unwrap();
    let s = load_subject(&format!("file:{}", k2.display())).unwrap();
    assert_eq!(s.graph, Graph::path(2).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn edge_list_files_round_trip(seed in any::<u64>(), n in 4usize..30) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_unicyclic_bipartite(&mut rng, n);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.edges");
        write_edge_list(&path, &g).unwrap();
        let back = read_edge_list(&path).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_edge_list(), fs::read_to_string(&path).unwrap());
    }
}
