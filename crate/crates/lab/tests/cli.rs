//! End-to-end runs of the `porism-lab` binary.

use std::path::Path;
use std::process::{Command, Output};

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_porism-lab")).args(args).output().expect("spawn porism-lab")
}

fn code(args: &[&str]) -> i32 {
    lab(args).status.code().expect("exit code")
}

fn out_arg(dir: &Path) -> String {
    dir.to_str().unwrap().to_string()
}

#[test]
fn verify_defaults_pass_and_write_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = out_arg(dir.path());
    let o = lab(&["verify", "--out", &out]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap()).unwrap();
    for key in ["version", "config", "reports", "checks", "skipped", "pass"] {
        assert!(json.get(key).is_some(), "{key}");
    }
    let invariant = json["reports"].as_array().unwrap().iter().filter(|r| r["verdict"] == "Invariant").count();
    assert!((18..=22).contains(&invariant), "{invariant}");
    let csv = std::fs::read_to_string(dir.path().join("report.csv")).unwrap();
    assert!(csv.starts_with("kind,name,samples,"));
    assert!(!csv.contains('\r'));
}

#[test]
fn exit_codes_for_bad_config() {
    assert_eq!(code(&["verify", "--rho", "0.6"]), 2);
    assert_eq!(code(&["verify", "--t-samples", "2"]), 2);
    assert_eq!(code(&["verify", "--tol", "0.5"]), 2);
    assert_eq!(code(&["verify", "--R", "1"]), 2);
    assert_eq!(code(&["verify", "--rho", "0.3", "--R", "1", "--r", "0.3"]), 2);
    assert_eq!(code(&["explode"]), 2);
    assert_eq!(code(&["verify", "--config", "/nonexistent/lab.conf"]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn radii_pair_matches_rho() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    assert_eq!(code(&["sweep", "--R", "2", "--r", "0.5", "--quantities", "ratio_e9", "--out", &out_arg(a.path())]), 0);
    assert_eq!(code(&["sweep", "--rho", "0.25", "--quantities", "ratio_e9", "--out", &out_arg(b.path())]), 0);
    let read = |d: &Path| std::fs::read_to_string(d.join("sweep.csv")).unwrap();
    // ratios are scale-free: same column for (R, r) = (2, 1/2) and ρ = 1/4
    let col = |s: String| s.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse::<f64>().unwrap()).collect::<Vec<_>>();
    for (x, y) in col(read(a.path())).iter().zip(col(read(b.path()))) {
        assert!((x - y).abs() < 1e-12);
    }
}

#[test]
fn verify_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let out = out_arg(dir.path());
    let args = ["verify", "--rho", "0.2", "--seed", "4", "--out", out.as_str()];
    let mut runs = Vec::new();
    for _ in 0..2 {
        assert_eq!(code(&args), 0);
        runs.push(["report.json", "report.csv"].map(|f| std::fs::read(dir.path().join(f)).unwrap()));
    }
    assert_eq!(runs[0], runs[1]);
}

#[test]
fn perturbed_sample_fails_verify() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&["verify", "--rho", "0.2", "--perturb-sample", "3", "--out", &out_arg(dir.path())]), 1);
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap()).unwrap();
    assert_eq!(json["pass"], false);
}

#[test]
fn perimeter_sweep_extremes_at_zero_and_pi() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&["sweep", "--rho", "0.36266", "--quantities", "perimeter", "--out", &out_arg(dir.path())]), 0);
    let text = std::fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,perimeter"));
    let rows: Vec<(f64, f64)> = lines
        .map(|l| {
            let (t, v) = l.split_once(',').unwrap();
            (t.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 720);
    // oracle: dense scan of the vertex-sum perimeter over the same family
    let cfg = porism_core::family::PoristicConfig::from_rho(0.36266).unwrap();
    let n = 20_000;
    let dense: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            (t, porism_core::family::sample(&cfg, t).unwrap().perimeter)
        })
        .collect();
    let arg = |better: fn(f64, f64) -> bool| {
        dense.iter().copied().fold(dense[0], |m, r| if better(r.1, m.1) { r } else { m })
    };
    let (dmin, dmax) = (arg(|a, b| a < b), arg(|a, b| a > b));
    let step = 2.0 * std::f64::consts::PI / n as f64;
    for (t, _) in [dmin, dmax] {
        assert!(t.abs() < 2.0 * step || (t - std::f64::consts::PI).abs() < 2.0 * step, "dense extreme at {t}");
    }
    let (tmin, lmin) = rows.iter().copied().fold((0.0, f64::INFINITY), |m, r| if r.1 < m.1 { r } else { m });
    let (tmax, lmax) = rows.iter().copied().fold((0.0, f64::NEG_INFINITY), |m, r| if r.1 > m.1 { r } else { m });
    assert!(lmin < lmax);
    let extremes = [tmin, tmax];
    assert!(extremes.contains(&0.0) && extremes.iter().any(|t| (t - std::f64::consts::PI).abs() < 1e-12), "{extremes:?}");
    assert!((lmin - dmin.1).abs() < 1e-12 * lmin && (lmax - dmax.1).abs() < 1e-12 * lmax);
}

#[test]
fn ratio_i3x_is_a_constant_column() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&["sweep", "--rho", "0.2", "--quantities", "ratio_i3x,theta", "--out", &out_arg(dir.path())]), 0);
    let text = std::fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
    let d = (1.0f64 - 0.4).sqrt();
    let want = (1.0 + d) / (1.0 - d);
    for line in text.lines().skip(1) {
        let v: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        assert!((v - want).abs() < 1e-9 * want);
        // 17 significant digits
        assert_eq!(line.split(',').nth(1).unwrap().split('e').next().unwrap().replace(['.', '-'], "").len(), 17);
    }
}

#[test]
fn empty_quantity_list_gives_header_only() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&["sweep", "--quantities", "", "--out", &out_arg(dir.path())]), 0);
    assert_eq!(std::fs::read_to_string(dir.path().join("sweep.csv")).unwrap(), "t\n");
}

#[test]
fn skipped_values_are_empty_and_logged() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&["sweep", "--rho", "0.3", "--t-samples", "8", "--quantities", "focal_ratio", "--out", &out_arg(dir.path())]), 0);
    let text = std::fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
    // t = 0 and t = π are isosceles
    let empty = text.lines().skip(1).filter(|l| l.ends_with(',')).count();
    assert_eq!(empty, 2);
    let log = std::fs::read_to_string(dir.path().join("sweep_skipped.csv")).unwrap();
    assert_eq!(log.lines().count(), 3);
    assert!(log.contains("near-isosceles"));
}

#[test]
fn unknown_names_exit_2_and_list_valid_ones() {
    let dir = tempfile::tempdir().unwrap();
    let o = lab(&["sweep", "--quantities", "perimeter,bogus", "--out", &out_arg(dir.path())]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("bogus") && err.contains("ratio_i5x"), "{err}");
    let o = lab(&["figure", "--figure", "fig99", "--out", &out_arg(dir.path())]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cb-plots"));
}

#[test]
fn figures_are_byte_identical_across_runs() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        assert_eq!(code(&["figure", "--rho", "0.3627", "--out", &out_arg(d.path())]), 0);
    }
    for id in ["obtuse", "odehnal", "inconics", "circumX10", "cb-focus-locus", "cb-poristic", "cb-plots", "circumhyps"] {
        let f = format!("{id}.svg");
        let x = std::fs::read(a.path().join(&f)).unwrap();
        assert_eq!(x, std::fs::read(b.path().join(&f)).unwrap(), "{id}");
        let text = String::from_utf8(x).unwrap();
        assert!(text.contains(r#"version="1.1""#), "{id}");
    }
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("lab.conf");
    std::fs::write(&conf, "# sweep setup\nrho = 0.2\nt_samples = 5\nquantities = perimeter\n").unwrap();
    let out = out_arg(dir.path());
    assert_eq!(code(&["sweep", "--config", conf.to_str().unwrap(), "--t-samples", "7", "--out", &out]), 0);
    let text = std::fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
    assert_eq!(text.lines().count(), 1 + 7);
    std::fs::write(&conf, "rho = 0.9\n").unwrap();
    assert_eq!(code(&["sweep", "--config", conf.to_str().unwrap(), "--out", &out]), 2);
}
