use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidkit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn normal_form_of_quantum_plane() {
    let o = run(&["normalform", "catalog:aq2", "y*x"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "q*x*y\n");
}

#[test]
fn verify_quantum_plane() {
    let o = run(&["verify", "catalog:aq2", "--degree", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "braided Hopf axioms: pass"));
}

#[test]
fn braiding_table() {
    let o = run(&["braid", "catalog:bglq2", "catalog:aq2", "--pairs"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.lines().any(|l| l == "Ψ(c⊗x) = q*x⊗c"), "{s}");
    assert!(s.lines().any(|l| l == "Ψ(a⊗y) = y⊗a"), "{s}");
}

#[test]
fn transmute_and_reconcile() {
    let o = run(&["transmute", "catalog:glq2", "--degree", "3", "--reconcile", "catalog:bglq2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("transmuted relation [b a = q^2 a b]: pass"));
    assert!(s.ends_with("transmutation: pass\n"));
}

#[test]
fn bosonised_braided_line() {
    let o = run(&["bosonise", "catalog:braided_line"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("theta*g = (-q-1)*g*theta"));
    assert!(s.contains("Hopf axioms: pass"));
}

#[test]
fn biproduct_and_automorphism() {
    let o = run(&["biproduct", "catalog:aq2", "--degree", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = run(&["automorphism", "catalog:aq2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("xbeta = 1/q*beta⊗x"));
}

#[test]
fn colour_twists() {
    let o = run(&["colour-twist", "catalog:group_bichar(3,2,[[0,1],[-1,0]])"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("twisted bicharacter is q^beta0 [81 pairs]: pass"));
    let o = run(&["colour-twist", "catalog:group_bichar(4,2,[[0,1],[-1,0]])"]);
    assert!(stdout(&o).starts_with("no square-root decomposition"));
}

#[test]
fn derived_normalisation() {
    let o = run(&["derive-rmatrix", "catalog:glq2", "catalog:aq2"]);
    assert!(stdout(&o).lines().any(|l| l == "R(C⊗C) = q^6"));
}

#[test]
fn records_are_json_lines() {
    let o = run(&["verify", "catalog:z2prime", "--format", "records"]);
    assert!(o.status.success());
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.is_object());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["braid", "catalog:bglq2", "catalog:aq2", "--pairs"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn failing_verification_exits_nonzero() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("bad_antipode.txt");
    std::fs::write(
        &path,
        "[field]\ntranscendental\n\n[generators]\ng\n\n[relations]\ng^2 = 1\n\n\
         [coproduct]\ng = (g)%(g)\n\n[counit]\ng = 1\n\n[antipode]\ng = -g\n",
    )
    .unwrap();
    let o = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("antipode [degree ≤ 4]: FAIL"));
    assert!(s.contains("witness:"));
}

#[test]
fn bad_input_is_an_error() {
    assert_eq!(run(&["normalform", "catalog:nope", "x"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "catalog:aq2", "--field", "nonsense"]).status.code(), Some(2));
    let o = run(&["normalform", "catalog:aq2", "y*"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn out_flag_writes_file() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("catalog.txt");
    let o = run(&["catalog", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(std::fs::read_to_string(&path).unwrap().contains("catalog:glq2"));
}
