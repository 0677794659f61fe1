//! End-to-end checks of the `spin-coherence` binary.

use std::path::Path;
use std::process::{Command, Output};

use spin_coherence::cli::sweep::{read_csv, run_sweep, Method, SweepSpec};
use spin_coherence::Scenario;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spin-coherence"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(key))
        .unwrap_or_else(|| panic!("no `{key}` in\n{text}"))
        .trim()
        .parse()
        .unwrap()
}

#[test]
fn exit_code_success() {
    let o = bin(&[
        "coherence",
        "--scenario",
        "single",
        "--theta",
        "0.7853982",
        "--beta",
        "0.95",
        "--sigma",
        "100",
        "--mass",
        "939.36",
        "--n",
        "2",
        "--method",
        "perturbative",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!((field(&text, "c_F") - 0.995051).abs() < 1e-6);
    assert!((field(&text, "c_l1") - 1.0).abs() < 1e-12);
}

#[test]
fn exit_code_usage_and_domain() {
    let negative_n = bin(&["coherence", "--beta", "0.9", "--sigma", "100", "--n", "-1"]);
    assert_eq!(negative_n.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&negative_n.stderr).contains("n > -1/2"));

    for args in [
        &["coherence", "--beta", "1.0", "--sigma", "100"][..],
        &["coherence", "--beta", "0.5", "--sigma", "1000"],
        &["coherence", "--beta", "0.5", "--sigma", "100", "--n", "300"],
        &["wigner", "--beta", "-0.2", "--p-over-m", "1"],
        &[
            "sweep",
            "--betas",
            "0.5",
            "--sigma-min",
            "1",
            "--sigma-max",
            "2",
            "--steps",
            "1",
            "--out",
            "x.csv",
        ],
        &["frobnicate"],
        &["figure", "fig3", "--out", "x.csv"],
    ] {
        assert_eq!(bin(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn exit_code_tolerance() {
    let o = bin(&[
        "coherence",
        "--beta",
        "0.95",
        "--sigma",
        "400",
        "--n",
        "6",
        "--method",
        "quadrature",
        "--max-order",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn wigner_values() {
    let o = bin(&["wigner", "--beta", "0.95", "--p-over-m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!((field(&text, "cos^2(phi/2)") - 0.917497).abs() < 1e-6);
    assert!((field(&text, "sin^2(phi/2)") - 0.082503).abs() < 1e-6);
    assert!((field(&text, "sin(phi/2)cos(phi/2)") - 0.275129).abs() < 1e-6);
}

#[test]
fn sweep_writes_csv_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep.csv");
    let o = bin(&[
        "sweep",
        "--scenario",
        "dual",
        "--betas",
        "0.3:0.8,0.95",
        "--sigma-min",
        "1",
        "--sigma-max",
        "2",
        "--steps",
        "2",
        "--methods",
        "perturbative,exact-eig",
        "--theta",
        "0.5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = read_csv(&out).unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows
        .iter()
        .all(|r| r.c_f_quadrature.is_none() && r.c_f_exact_eig.is_some()));

    let spec = SweepSpec {
        scenario: Scenario::Dual,
        theta: 0.5,
        n: 2,
        mass: 939.36,
        sigma_min: 1.0,
        sigma_max: 2.0,
        steps: 2,
        betas: vec![(0.3, Some(0.8)), (0.95, Some(0.95))],
        methods: vec![Method::Perturbative, Method::ExactEig],
    };
    assert_eq!(rows, run_sweep(&spec).unwrap());
    for r in &rows {
        let bound = 3.0 * (r.f1 + r.f2.unwrap()).powi(2);
        assert!((r.c_f_perturbative.unwrap() - r.c_f_exact_eig.unwrap()).abs() <= bound);
    }
}

#[test]
fn sweep_with_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cfg.csv");
    let cfg = dir.path().join("sweep.cfg");
    std::fs::write(
        &cfg,
        format!(
            "# two widths, one speed\nbetas = 0.8\nsigma_min = 10\nsigma_max = 20\nsteps = 3\nout = {}\n",
            out.display()
        ),
    )
    .unwrap();
    let o = bin(&["sweep", "--config", cfg.to_str().unwrap(), "--steps", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(read_csv(&out).unwrap().len(), 2);
}

#[test]
fn failed_sweep_leaves_no_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bad.csv");
    let o = bin(&[
        "sweep",
        "--betas",
        "0.5",
        "--sigma-min",
        "1",
        "--sigma-max",
        "900",
        "--steps",
        "3",
        "--n",
        "5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());
    let missing_dir = dir.path().join("no/such/dir/out.csv");
    let o = bin(&[
        "sweep",
        "--betas",
        "0.5",
        "--sigma-min",
        "1",
        "--sigma-max",
        "2",
        "--steps",
        "2",
        "--out",
        missing_dir.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!missing_dir.exists());
}

fn figure_bytes(name: &str, path: &Path) -> Vec<u8> {
    let o = bin(&["figure", name, "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::read(path).unwrap()
}

#[test]
fn figures_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["fig1", "fig2"] {
        let a = figure_bytes(name, &dir.path().join(format!("{name}-a.csv")));
        let b = figure_bytes(name, &dir.path().join(format!("{name}-b.csv")));
        assert_eq!(a, b);
        let rows = read_csv(&dir.path().join(format!("{name}-a.csv"))).unwrap();
        assert_eq!(rows.len(), 4 * 256);
    }
}
