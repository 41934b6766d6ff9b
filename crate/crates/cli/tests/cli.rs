use std::process::{Command, Output};

fn affinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affinv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn atoms_of_a_single_translation() {
    let o = affinv(&["atoms", "--z", "[-4,2,3,9]", "--n", "4", "--check"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let windows: Vec<&str> = out.lines().collect();
    assert_eq!(windows, vec!["[-3,3,4,6]", "[-2,1,4,7]", "[-1,1,2,8]"]);
}

#[test]
fn poset_dot_has_one_node_per_atom() {
    let o = affinv(&["poset", "--z", "[cycles (1,12),(2,11),(3,4)]", "--n", "6", "--dot"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("label=").count(), 29);
}

#[test]
fn poset_json_record() {
    let o = affinv(&["poset", "--z", "(1,12)(2,11)(3,4)", "--n", "6", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["atoms"].as_array().unwrap().len(), 29);
    assert_eq!(v["ranks"].as_array().unwrap().iter().filter_map(|r| r.as_u64()).max(), Some(10));
}

#[test]
fn counts_csv_matches_enumeration() {
    let o = affinv(&["counts", "--n", "6", "--max-m", "10", "--check"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = stdout(&o);
    assert_eq!(csv.lines().next(), Some("n,m,k,N,Nhat"));
    let enumerated = stdout(&affinv(&["enumerate", "--n", "6", "--max-hat", "10", "--json"]));
    for line in csv.lines().skip(1) {
        let f: Vec<u64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        let (m, k, n_len) = (f[1], f[2], f[3]);
        let got = enumerated
            .lines()
            .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
            .filter(|v| v["length"] == m && v["absolute_length"] == k)
            .count() as u64;
        assert_eq!(got, n_len, "row {line}");
    }
}

#[test]
fn verify_all_small_ranks_passes() {
    let o = affinv(&["verify", "all", "--n", "4", "--max-hat", "4", "--max-weight", "4"]);
    let out = stdout(&o);
    assert!(o.status.success(), "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS") || l.starts_with("REPORT")));
}

#[test]
fn verify_output_does_not_depend_on_thread_count() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_affinv"))
            .args(["verify", "covering-property", "--n", "4", "--max-hat", "3", "--json"])
            .env("AFFINV_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn winding_svg_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for p in [&a, &b] {
        let o = affinv(&["winding", "--z", "(1,12)(7,10)(3,6)", "--n", "8", "--svg", "--out", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    let svg = std::fs::read_to_string(&a).unwrap();
    assert_eq!(svg, std::fs::read_to_string(&b).unwrap());
    assert_eq!(svg.matches(r#"class="arc""#).count(), 3);
    for w in ["1", "-1", "0"] {
        assert!(svg.contains(&format!(">{w}</text>")), "missing winding {w}");
    }
}

#[test]
fn winding_of_identity_has_no_arcs() {
    let o = affinv(&["winding", "--z", "id", "--n", "5", "--svg"]);
    let svg = stdout(&o);
    assert_eq!(svg.matches(r#"class="vertex""#).count(), 5);
    assert!(!svg.contains(r#"class="arc""#));
}

#[test]
fn standardisation_example() {
    let o = affinv(&["standardize", "--w", "(1,3)(2,12)(6,8)", "--n", "8", "--e", "2,4,6,7,8"]);
    assert!(o.status.success());
    let z = affinv_core::io::parse_involution(stdout(&o).trim(), None).unwrap();
    assert_eq!(z.canonical_cycles(), vec![(1, 7), (3, 5)]);
}

#[test]
fn tau_example() {
    let o = affinv(&["tau", "--z", "(1,3)(5,7)", "--n", "8", "--i", "3", "--j", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let z: affinv_core::AffineInvolution = serde_json::from_value(v["z"].clone()).unwrap();
    assert_eq!(z.canonical_cycles(), vec![(1, 4), (5, 7)]);
    assert_eq!(v["increment"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(affinv(&["atoms", "--z", "(1,5)", "--n", "4"]).status.code(), Some(2));
    assert_eq!(affinv(&["atoms", "--z", "(1,2)"]).status.code(), Some(2));
    assert_eq!(affinv(&["enumerate", "--n", "3", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(affinv(&["enumerate", "--n", "8", "--max-hat", "9", "--limit", "10"]).status.code(), Some(3));
}
