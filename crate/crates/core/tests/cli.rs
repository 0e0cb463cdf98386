use std::path::PathBuf;

use hopfk::cli::main_with_args;
use hopfk::heegaard::{lens_diagram, lens_pq_diagram, s1_x_s2_diagram};
use hopfk::hopf::{build_function_hopf, build_kac_paljutkin};
use hopfk::io::{algebra_from_json, diagram_from_json, parse_group_spec, parse_phi_spec};
use hopfk::{GroupHom, GroupTable};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = main_with_args(std::iter::once("hopfk").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn read(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

#[test]
fn data_files_match_builtins() {
    let kp = algebra_from_json(&read("kac_paljutkin.json")).unwrap();
    assert_eq!(kp.parts(), build_kac_paljutkin().parts());
    let sign3 = build_function_hopf(&GroupHom::sign(3).unwrap()).unwrap();
    assert_eq!(algebra_from_json(&read("function_sign3.json")).unwrap().parts(), sign3.parts());
    assert_eq!(parse_group_spec(&data("s3.json")).unwrap(), GroupTable::symmetric(3).unwrap());
    assert_eq!(parse_phi_spec(&data("sign3_hom.json")).unwrap(), GroupHom::sign(3).unwrap());
    assert_eq!(diagram_from_json(&read("lens_5_2.json")).unwrap().0, lens_pq_diagram(5, 2).unwrap());
    assert_eq!(diagram_from_json(&read("s1xs2.json")).unwrap().0, s1_x_s2_diagram());
    let (rp3, colors) = diagram_from_json(&read("rp3_colored.json")).unwrap();
    assert_eq!(rp3, lens_diagram(2).unwrap());
    assert_eq!(colors, Some(vec!["1".to_string()]));
}

#[test]
fn invariant_from_files() {
    let (code, out, _) = run(&["invariant", "--algebra", &data("function_sign3.json"), "--diagram", &data("rp3_colored.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("K = 3"), "{out}");
    let (code, out, _) = run(&["--json", "invariant", "--algebra", "kac-paljutkin", "--diagram", "lens:2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["K"], "4");
    assert_eq!(v["genus"], 1);
}

#[test]
fn invalid_coloring_is_a_failure() {
    let (code, _, err) = run(&["invariant", "--algebra", "kac-paljutkin", "--diagram", "lens:3", "--colors", "1"]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn unreadable_input_exits_2() {
    let (code, _, err) = run(&["invariant", "--algebra", "/no/such/file.json", "--diagram", "lens:2"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot read"));
    let (code, _, _) = run(&["invariant", "--algebra"]);
    assert_eq!(code, 2);
}

#[test]
fn validate_algebra_passes_for_builtins() {
    for a in ["kac-paljutkin", "function:sign3", "op:kac-paljutkin", &data("kac_paljutkin.json")] {
        let (code, out, _) = run(&["validate-algebra", a]);
        assert_eq!(code, 0, "{a}: {out}");
        assert!(out.ends_with("PASS\n"));
    }
}

#[test]
fn colorings_of_rp3_over_s3() {
    let (code, out, _) = run(&["--json", "colorings", "--diagram", "lens:2", "--group", &data("s3.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    // The identity and the three transpositions square to one.
    assert_eq!(v["colorings"].as_array().unwrap().len(), 4);
}

#[test]
fn lens_table_rows() {
    let (code, out, _) = run(&["--json", "lens-table", "--algebra", "kac-paljutkin", "--max-n", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    // p = 1..4: odd p admits only color 0.
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);
}

#[test]
fn oracle_compare_passes() {
    let (code, out, _) = run(&["oracle-compare", "--phi", &data("sign3_hom.json"), "--diagram", "lens:4", "--colors", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("lifts = 3") && out.ends_with("PASS\n"), "{out}");
}

#[test]
fn move_fuzz_is_seeded() {
    let args = ["move-fuzz", "--algebra", "kac-paljutkin", "--diagram", "lens:6", "--colors", "1", "--steps", "5", "--seed", "9"];
    let (code, out, _) = run(&args);
    assert_eq!(code, 0);
    assert!(out.starts_with("seed 9\n") && out.ends_with("PASS\n"), "{out}");
    assert_eq!(run(&args).1, out);
    let (code, out, _) = run(&["move-fuzz", "--algebra", "kac-paljutkin", "--diagram", "s1xs2", "--steps", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("baseline K = ") && out.ends_with("PASS\n"));
}
