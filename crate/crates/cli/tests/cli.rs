use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_momentlab");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout_of(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gaussian_to_classical_golden() {
    let catalog = stdout_of(&run(&["catalog", "gaussian-hermite", "--order", "6"]));
    let out = stdout_of(&run_with_stdin(&["transform", "--to", "classical"], &catalog));
    assert_eq!(
        out,
        "{\"v\":1,\"kind\":\"classical\",\"order\":6,\"symbolic\":false,\"values\":[\"0\",\"1\",\"0\",\"0\",\"0\",\"0\"]}\n"
    );
}

#[test]
fn semicircle_to_free_golden() {
    let catalog = stdout_of(&run(&["catalog", "semicircle", "--order", "8"]));
    let out = stdout_of(&run_with_stdin(&["transform", "--to", "free"], &catalog));
    assert_eq!(
        out,
        "{\"v\":1,\"kind\":\"free\",\"order\":8,\"symbolic\":false,\"values\":[\"0\",\"1\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\"]}\n"
    );
}

#[test]
fn catalog_moments_golden() {
    let out = stdout_of(&run(&["catalog", "gaussian-hermite", "--order", "6"]));
    assert_eq!(
        out,
        "{\"v\":1,\"kind\":\"moments\",\"order\":6,\"symbolic\":false,\"values\":[\"1\",\"0\",\"1\",\"0\",\"3\",\"0\",\"15\"]}\n"
    );
    let free_poisson = stdout_of(&run(&["catalog", "free-poisson", "--order", "3", "--t", "2"]));
    assert_eq!(
        free_poisson,
        "{\"v\":1,\"kind\":\"moments\",\"order\":3,\"symbolic\":false,\"values\":[\"1\",\"2\",\"6\",\"22\"]}\n"
    );
}

#[test]
fn jacobi_round_trip_through_documents() {
    let gaussian = stdout_of(&run(&["catalog", "gaussian-hermite", "--order", "8"]));
    let jacobi = stdout_of(&run_with_stdin(&["jacobi", "from-moments"], &gaussian));
    assert_eq!(
        jacobi,
        "{\"v\":1,\"kind\":\"jacobi\",\"order\":3,\"symbolic\":false,\"a\":[\"0\",\"0\",\"0\",\"0\"],\"lambda\":[\"1\",\"2\",\"3\"]}\n"
    );
    let moments = stdout_of(&run_with_stdin(&["jacobi", "to-moments", "--order", "6"], &jacobi));
    assert_eq!(
        moments,
        "{\"v\":1,\"kind\":\"moments\",\"order\":6,\"symbolic\":false,\"values\":[\"1\",\"0\",\"1\",\"0\",\"3\",\"0\",\"15\"]}\n"
    );
}

#[test]
fn path_counts_and_listing() {
    let count = stdout_of(&run(&["paths", "--n", "5", "--count"]));
    assert_eq!(count, "21\n");
    let catalan = stdout_of(&run(&["paths", "--n", "6", "--discipline", "lukasiewicz", "--count"]));
    assert_eq!(catalan, "132\n");
    let irreducible = stdout_of(&run(&["paths", "--n", "4", "--irreducible"]));
    assert_eq!(irreducible, "0,1,2,1,0\n0,1,1,1,0\n");
}

#[test]
fn minor_det_and_gv_agree() {
    let det = stdout_of(&run(&[
        "minor", "--rows", "0,1,2", "--cols", "0,1,2", "--method", "det", "--scheme", "motzkin",
    ]));
    assert!(det.contains("\"value\":\"lam_1^2*lam_2\""), "{det}");
    let gv = stdout_of(&run(&[
        "minor", "--rows", "0,1,2", "--cols", "0,1,2", "--method", "gv", "--scheme", "motzkin",
    ]));
    assert!(gv.contains("\"value\":\"lam_1^2*lam_2\""), "{gv}");
    assert!(gv.contains("\"configurations\":1"), "{gv}");
}

#[test]
fn explosion_guard_env_override() {
    let out = Command::new(BIN)
        .args(["minor", "--rows", "0,1,2", "--cols", "0,1,2", "--method", "gv"])
        .env("MOMENTLAB_MAX_CONFIGS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("\"kind\":\"ExplosionGuard\""), "{err}");
}

#[test]
fn singular_hankel_is_a_structured_error() {
    let point = stdout_of(&run(&["catalog", "point-mass", "--order", "4"]));
    let out = run_with_stdin(&["jacobi", "from-moments"], &point);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("\"kind\":\"SingularHankel\""), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["transform", "--to", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes_and_filtering() {
    let out = run(&["verify", "--depth", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().count() >= 10);
    assert!(text.lines().all(|l| l.starts_with("PASS")));

    let filtered = run(&["verify", "--depth", "2", "--identity", "delta-product"]);
    assert_eq!(filtered.status.code(), Some(0));
    let text = String::from_utf8(filtered.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("PASS delta-product"));

    let unknown = run(&["verify", "--identity", "nonsense"]);
    assert_eq!(unknown.status.code(), Some(1));
}

#[test]
fn documents_pipe_between_kinds() {
    // moments -> boolean -> moments is the identity on documents
    let m = stdout_of(&run(&["catalog", "free-poisson", "--order", "6", "--t", "1/2"]));
    let h = stdout_of(&run_with_stdin(&["transform", "--to", "boolean"], &m));
    let back = stdout_of(&run_with_stdin(&["transform", "--to", "moments"], &h));
    assert_eq!(m, back);
}

#[test]
fn float_rendering_is_display_only() {
    let out = stdout_of(&run(&["catalog", "point-mass", "--order", "2", "--t", "1/2", "--float"]));
    assert!(out.contains("\"values\":[\"1\",\"0.5\",\"0.25\"]"), "{out}");
}
