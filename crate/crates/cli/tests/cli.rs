//! Binary-level behavior: flags, exit codes, formats, determinism.

mod common;

use std::process::Command;

use common::{argmax, run, Table};
use genlogistic::SQRT_2_OVER_PI;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_genlogistic"))
}

#[test]
fn time_domain_standard_column_is_sech2() {
    let (text, status) = run(&["time-domain", "--curve", "1,2,1"]);
    assert_eq!(status, 0);
    let t = Table::parse(&text);
    assert_eq!(t.rows(), 1201);
    let ts = t.column("t");
    let f = t.column("f[k=1;beta=2;nu=1]");
    for (&x, &v) in ts.iter().zip(f) {
        let c = x.cosh();
        assert!((v - 1.0 / (c * c)).abs() < 1e-15, "t={x}");
    }
}

#[test]
fn time_domain_two_point_grid() {
    let (text, _) = run(&["time-domain", "-n", "2"]);
    let t = Table::parse(&text);
    assert_eq!(t.rows(), 2);
    assert_eq!(t.column("t"), &[-6.0, 6.0]);
}

#[test]
fn time_domain_curve_option() {
    let (text, _) = run(&[
        "time-domain",
        "--which",
        "curve",
        "--curve",
        "1,2,1",
        "-n",
        "5",
        "--t-min",
        "-1",
        "--t-max",
        "1",
    ]);
    let t = Table::parse(&text);
    for (&x, &y) in t.column("t").iter().zip(t.column("y[k=1;beta=2;nu=1]")) {
        assert!((y - x.tanh()).abs() < 2e-15);
    }
}

#[test]
fn shape_twelve_peak_location() {
    let (text, _) = run(&["time-domain", "--curve", "1,2,12"]);
    let t = Table::parse(&text);
    let ts = t.column("t");
    let i = argmax(t.column("f[k=1;beta=2;nu=12]"));
    let predicted = (1.0f64 / 12.0).ln() / 2.0;
    assert!((predicted + 1.2425).abs() < 1e-4);
    assert!((ts[i] - predicted).abs() <= 0.5 * (ts[1] - ts[0]) + 1e-12);
}

#[test]
fn spectrum_columns_and_dc_row() {
    let (text, _) = run(&["spectrum"]);
    let t = Table::parse(&text);
    assert_eq!(t.header.len(), 1 + 4 * 7);
    let omega = t.column("omega");
    let dc = omega.iter().position(|&w| w == 0.0).expect("grid contains 0");
    for (_, mag) in t.family("magnitude") {
        assert!((mag[dc] - SQRT_2_OVER_PI).abs() < 1e-15);
    }
    for &v in t.column("im[k=1;beta=2;nu=1]") {
        assert!(v.abs() < 1e-13);
    }
    for (name, mag) in t.family("magnitude") {
        for w in dc..omega.len() - 1 {
            assert!(mag[w + 1] < mag[w], "{name} at omega={}", omega[w]);
        }
    }
}

#[test]
fn parametric_traces() {
    let (text, _) = run(&["parametric"]);
    let t = Table::parse(&text);
    let omega = t.column("omega");
    assert!(omega.windows(2).all(|w| w[0] < w[1]));
    let dc = omega.iter().position(|&w| w == 0.0).unwrap();
    for ((_, re), (_, im)) in t.family("re").into_iter().zip(t.family("im")) {
        assert!((re[dc] - SQRT_2_OVER_PI).abs() < 1e-15);
        assert_eq!(im[dc], 0.0);
    }
    assert!(t.column("im[k=1;beta=2;nu=1]").iter().all(|v| v.abs() < 1e-13));
    // neighbours in 1/nu stay close
    let re8 = t.column("re[k=1;beta=2;nu=8]");
    let im8 = t.column("im[k=1;beta=2;nu=8]");
    let re9 = t.column("re[k=1;beta=2;nu=9]");
    let im9 = t.column("im[k=1;beta=2;nu=9]");
    let gap = 1.0 / 8.0 - 1.0 / 9.0;
    for i in 0..omega.len() {
        let d = ((re8[i] - re9[i]).powi(2) + (im8[i] - im9[i]).powi(2)).sqrt();
        assert!(d < 4.0 * gap);
    }
}

#[test]
fn json_formats() {
    let (text, _) = run(&["spectrum", "--format", "json", "-n", "5", "--curve", "2,1,0.5"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["subcommand"], "spectrum");
    assert_eq!(v["curves"][0]["params"]["k"], 2.0);
    assert_eq!(v["curves"][0]["params"]["nu"], 0.5);
    assert_eq!(v["omega"].as_array().unwrap().len(), 5);
    for key in ["re", "im", "magnitude", "phase"] {
        assert_eq!(v["curves"][0][key].as_array().unwrap().len(), 5);
    }
    assert!(!text.contains("NaN") && !text.contains("Infinity") && !text.contains("null"));

    let (text, _) = run(&["time-domain", "--format", "json", "-n", "3"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["subcommand"], "time-domain");
    assert_eq!(v["which"], "derivative");
    assert_eq!(v["curves"].as_array().unwrap().len(), 7);

    let (text, _) = run(&["parametric", "--format", "json", "-n", "3"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["subcommand"], "parametric");
    assert!(v["curves"][0].get("magnitude").is_none());
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let status = bin()
            .args(["spectrum", "--curve", "1.5,2,4", "--curve", "1,2,1/8", "-o"])
            .arg(path)
            .status()
            .unwrap();
        assert!(status.success());
    }
    let a = std::fs::read(a).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, std::fs::read(b).unwrap());
}

#[test]
fn csv_is_locale_independent() {
    let out = bin()
        .args(["time-domain", "-n", "3", "--curve", "1,2,1"])
        .env("LC_ALL", "de_DE.UTF-8")
        .env("LC_NUMERIC", "de_DE.UTF-8")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines().nth(2).unwrap(),
        "0.0000000000000000e0,1.0000000000000000e0"
    );
}

#[test]
fn exit_codes() {
    let usage = bin().args(["spectrum", "--curve", "1,2"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let usage = bin()
        .args(["time-domain", "--t-min", "1", "--t-max", "0"])
        .output()
        .unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let usage = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let io = bin()
        .args(["time-domain", "-o", "/nonexistent-dir/out.csv"])
        .output()
        .unwrap();
    assert_eq!(io.status.code(), Some(1));
}

#[test]
fn verify_passes_and_reports_json() {
    let out = bin().args(["verify", "--json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 10);
    for c in checks {
        assert!(c["max_residual"].as_f64().unwrap() < c["threshold"].as_f64().unwrap());
    }
}

#[test]
fn verify_detects_injected_phase_fault() {
    let out = bin()
        .args(["verify", "--json", "--inject-fault", "phase-sign"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let shift = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "shift-identity")
        .unwrap();
    let r = shift["max_residual"].as_f64().unwrap();
    assert!(r > 0.1 && r <= 2.0 + 1e-12, "{r}");
    assert_eq!(shift["passed"], false);
}

#[test]
fn verify_text_report_lists_every_check() {
    let out = bin().arg("verify").output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    for name in [
        "standard-reduction",
        "closed-vs-quadrature",
        "substituted-integral",
        "shift-identity",
        "polynomial-relation",
        "gamma-reflection",
        "grad-spot-check",
    ] {
        assert!(text.contains(name), "{name}");
    }
    assert!(text.trim_end().ends_with("overall: pass"));
}
