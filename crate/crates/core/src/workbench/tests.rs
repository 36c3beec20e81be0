use super::*;
use crate::error::Error;

fn corpus(name: &str) -> Instance {
    parse_instance(format!("{}/../../corpus/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn opts(n: usize, sub: &str) -> RunOptions {
    RunOptions { n: Some(n), seed: 0, subcategory: sub.parse().unwrap(), timings: false }
}

#[test]
fn corpus_round_trips() {
    for name in ["a2.json", "auslander_a2.json", "semisimple2.json", "a3.json", "auslander_a2_p2.json"] {
        let inst = corpus(name);
        let text = inst.emit().unwrap();
        let again = Instance::parse_str(&text, "emitted").unwrap();
        assert_eq!(again.file, inst.file, "{name}");
        assert_eq!(again.emit().unwrap(), text);
    }
}

#[test]
fn invalid_instances_are_located() {
    let err = |name: &str| match parse_instance(format!("{}/../../corpus/invalid/{name}", env!("CARGO_MANIFEST_DIR"))) {
        Err(Error::Parse { location, message }) => (location, message),
        other => panic!("{name}: expected a parse error, got {other:?}"),
    };
    let (loc, msg) = err("p4.json");
    assert_eq!(loc, "field.p");
    assert!(msg.contains("modulus not prime"), "{msg}");
    assert_eq!(err("dangling_arrow.json").0, "quiver");
    assert_eq!(err("cycle_without_relations.json").0, "relations");
    let bad = Instance::parse_str("{\"schema\": \"hiaus-instance/1\",\n \"name\": 3}", "inline");
    assert!(matches!(bad, Err(Error::Parse { location, .. }) if location.starts_with("inline:2:")));
    let text = corpus("a2.json").emit().unwrap().replace("hiaus-instance/1", "hiaus-instance/9");
    assert!(matches!(Instance::parse_str(&text, "x"), Err(Error::Parse { location, .. }) if location == "schema"));
}

#[test]
fn verify_a2() {
    let out = run(Command::VerifyAuslander, &corpus("a2.json"), &opts(1, "auto"), &mut Cache::disabled()).unwrap();
    assert!(out.pass);
    let r = &out.report;
    assert_eq!(r["schema"], REPORT_SCHEMA);
    assert_eq!(r["result"]["gamma"]["dim"], 5);
    assert_eq!(r["result"]["effaceable"]["effaceable_simples"], serde_json::json!(["S[S1]"]));
    assert!(out.text().contains("verdict: PASS"));
}

#[test]
fn find_ct_auslander_a2() {
    let out = run(Command::FindCt, &corpus("auslander_a2.json"), &opts(2, "auto"), &mut Cache::disabled()).unwrap();
    assert!(out.pass);
    assert_eq!(out.report["result"]["count"], 1);
    assert_eq!(out.report["result"]["found"][0]["size"], 4);
}

#[test]
fn whole_a2_is_not_two_abelian() {
    let out = run(Command::CheckAxioms, &corpus("a2.json"), &opts(2, "all"), &mut Cache::disabled()).unwrap();
    assert!(!out.pass);
    assert!(out.text().contains("witness:"));
}

#[test]
fn named_subcategory_resolution() {
    let inst = corpus("auslander_a2.json");
    let out = run(Command::CheckAxioms, &inst, &opts(2, "ct"), &mut Cache::disabled()).unwrap();
    assert!(out.pass);
    let missing = run(Command::CheckAxioms, &inst, &opts(2, "nope"), &mut Cache::disabled());
    assert!(matches!(missing, Err(Error::Parse { .. })));
}

#[test]
fn no_cluster_tilting_under_auto() {
    let out = run(Command::VerifyAuslander, &corpus("a2.json"), &opts(2, "auto"), &mut Cache::disabled()).unwrap();
    assert!(!out.pass);
    assert!(out.report["result"]["reason"].as_str().unwrap().contains("no 2-cluster tilting"));
}

#[test]
fn reports_are_deterministic_and_cache_transparent() {
    let inst = corpus("auslander_a2.json");
    let o = opts(2, "auto");
    let plain = run(Command::Report, &inst, &o, &mut Cache::disabled()).unwrap().json();
    assert_eq!(plain, run(Command::Report, &inst, &o, &mut Cache::disabled()).unwrap().json());
    let dir = tempfile::tempdir().unwrap();
    let mut cold = Cache::at(dir.path(), 1);
    assert_eq!(run(Command::Report, &inst, &o, &mut cold).unwrap().json(), plain);
    assert_eq!(cold.stats.misses, 1);
    for seed in 0..8 {
        let mut warm = Cache::at(dir.path(), seed);
        assert_eq!(run(Command::Report, &inst, &o, &mut warm).unwrap().json(), plain);
        assert_eq!(warm.stats.hits, 1);
    }
}

#[test]
fn tampered_cache_is_caught() {
    let inst = corpus("a2.json");
    let dir = tempfile::tempdir().unwrap();
    run(Command::CheckAxioms, &inst, &opts(1, "all"), &mut Cache::at(dir.path(), 0)).unwrap();
    let file = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let text = std::fs::read_to_string(&file).unwrap();
    std::fs::write(&file, text.replace("\"complete\": true", "\"complete\": false")).unwrap();
    let mut caught = false;
    for seed in 0..16 {
        match run(Command::CheckAxioms, &inst, &opts(1, "all"), &mut Cache::at(dir.path(), seed)) {
            Err(Error::InvariantViolation(_)) => caught = true,
            Ok(_) => {}
            Err(e) => panic!("{e}"),
        }
    }
    assert!(caught);
}

#[test]
fn timings_only_on_request() {
    let inst = corpus("semisimple2.json");
    let mut o = opts(1, "auto");
    assert!(run(Command::CheckAxioms, &inst, &o, &mut Cache::disabled()).unwrap().report.get("timings_ms").is_none());
    o.timings = true;
    assert!(run(Command::CheckAxioms, &inst, &o, &mut Cache::disabled()).unwrap().report.get("timings_ms").is_some());
}

#[test]
fn small_prime_spot_check() {
    let out = run(Command::Report, &corpus("auslander_a2_p2.json"), &opts(2, "auto"), &mut Cache::disabled()).unwrap();
    assert!(out.pass, "{}", out.text());
    assert_eq!(out.report["result"]["find_ct"]["count"], 1);
}

#[test]
fn canonical_keys_are_sorted() {
    let v = serde_json::json!({"b": 1, "a": {"d": 2, "c": [ {"z": 0, "y": 1} ]}});
    assert_eq!(to_canonical_json(&v).unwrap().replace([' ', '\n'], ""), r#"{"a":{"c":[{"y":1,"z":0}],"d":2},"b":1}"#);
}
