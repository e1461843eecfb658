//! Self-verification: every closed-form identity against an independent
//! route, each reduced to one maximum residual and compared to a fixed gate.

use std::f64::consts::PI;
use std::fmt::Write as _;

use genlogistic::quadrature_oracle::{
    fourier_numeric, grad_substitution, i_integral_numeric, spectral_energy, time_energy, verify_grad_formula,
};
use genlogistic::special_functions::gamma;
use genlogistic::spectral::{
    fourier_closed_form, fourier_standard_logistic, fourier_via_beta_series, i_integral_closed_form,
    polynomial_multiplier, shift_phase,
};
use genlogistic::{ComplexValue, QuadratureConfig, SigmoidParams, SQRT_2_OVER_PI};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{exit, figure_curves, Format, Rendered, RunConfig, FIGURE_SHAPES};

/// Deliberate defects for exercising the failure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    /// Conjugates the shift phase in the shift-identity check.
    PhaseSign,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub description: &'static str,
    /// `None` when the check itself errored.
    pub max_residual: Option<f64>,
    pub threshold: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub subcommand: &'static str,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<22} {:>12} {:>10}  status", "check", "max residual", "gate");
        for c in &self.checks {
            let residual = c
                .max_residual
                .map_or_else(|| "error".to_string(), |r| format!("{r:.3e}"));
            let _ = writeln!(
                out,
                "{:<22} {:>12} {:>10.1e}  {}",
                c.name,
                residual,
                c.threshold,
                if c.passed { "pass" } else { "FAIL" }
            );
            if let Some(e) = &c.error {
                let _ = writeln!(out, "  error: {e}");
            }
        }
        let _ = writeln!(out, "overall: {}", if self.passed { "pass" } else { "FAIL" });
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("report is serializable");
        s.push('\n');
        s
    }
}

type Residual = genlogistic::Result<f64>;

fn run_check(
    name: &'static str,
    description: &'static str,
    threshold: f64,
    body: impl FnOnce() -> Residual,
) -> CheckResult {
    match body() {
        Ok(r) if r.is_finite() => CheckResult {
            name,
            description,
            max_residual: Some(r),
            threshold,
            passed: r < threshold,
            error: None,
        },
        Ok(_) => CheckResult {
            name,
            description,
            max_residual: None,
            threshold,
            passed: false,
            error: Some("non-finite residual".into()),
        },
        Err(e) => CheckResult {
            name,
            description,
            max_residual: None,
            threshold,
            passed: false,
            error: Some(e.to_string()),
        },
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}

fn rel(a: ComplexValue, b: ComplexValue) -> f64 {
    (a - b).norm() / b.norm()
}

fn random_params(rng: &mut ChaCha8Rng) -> SigmoidParams {
    SigmoidParams::new(
        rng.gen_range(0.05..20.0),
        rng.gen_range(0.2..5.0),
        rng.gen_range(0.08..12.5),
    )
    .expect("sampled parameters are positive")
}

/// Standard-logistic reduction over ω ∈ [-30, 30].
pub fn standard_reduction() -> Residual {
    let s = SigmoidParams::standard();
    let mut worst = 0.0f64;
    for w in linspace(-30.0, 30.0, 1201) {
        worst = worst.max((fourier_closed_form(&s, w)? - fourier_standard_logistic(w)).norm());
    }
    Ok(worst)
}

/// Closed form vs. quadrature of the defining integral, figure parameter
/// sets, 64 points in [-20, 20].
pub fn closed_form_vs_quadrature(cfg: &QuadratureConfig) -> Residual {
    let mut worst = 0.0f64;
    for p in figure_curves(&FIGURE_SHAPES) {
        for w in linspace(-20.0, 20.0, 64) {
            worst = worst.max((fourier_closed_form(&p, w)? - fourier_numeric(&p, w, cfg)?).norm());
        }
    }
    Ok(worst)
}

const SUBSTITUTION_POINTS: [(f64, f64, f64, f64); 3] =
    [(0.5, 2.0, 1.0, 2.0), (0.8, 1.0, 0.7, 1.0), (1.5, 2.0, 4.0, 3.0)];

/// Γ form of the substituted integral vs. its quadrature.
pub fn substituted_integral(cfg: &QuadratureConfig) -> Residual {
    let mut worst = 0.0f64;
    let mut points: Vec<(f64, f64, f64, f64)> = SUBSTITUTION_POINTS.to_vec();
    points.extend([(1.0, 2.0, 1.0, 2.0), (2.0, 1.0, 1.0, 1.0), (3.0, 1.5, 0.7, 5.0)]);
    for (k, beta, nu, w) in points {
        let p = SigmoidParams::new(k, beta, nu)?;
        worst = worst.max((i_integral_closed_form(&p, w)? - i_integral_numeric(&p, w, cfg)?).norm());
    }
    Ok(worst)
}

/// Beta × ₂F₁ route vs. the collapsed Γ form, where the series converges.
pub fn beta_series_route() -> Residual {
    let mut worst = 0.0f64;
    for (k, beta, nu, _) in SUBSTITUTION_POINTS {
        let p = SigmoidParams::new(k, beta, nu)?;
        for w in linspace(-10.0, 10.0, 41) {
            worst = worst.max((fourier_via_beta_series(&p, w)? - fourier_closed_form(&p, w)?).norm());
        }
    }
    Ok(worst)
}

/// Relative residual of `F(k) = phase · F(1)` over 1000 random draws.
pub fn shift_identity(fault: Fault) -> Residual {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let p = random_params(&mut rng);
        let w = rng.gen_range(-20.0..20.0);
        let phase = match fault {
            Fault::None => shift_phase(&p, w),
            Fault::PhaseSign => shift_phase(&p, w).conj(),
        };
        let full = fourier_closed_form(&p, w)?;
        worst = worst.max(rel(phase * fourier_closed_form(&p.unshifted(), w)?, full));
    }
    Ok(worst)
}

/// `F(ω; 1, β, 1/n) = multiplier · F(ω; 1, β, 1)` for n = 2..12, β ∈ {1, 2}.
pub fn polynomial_relation() -> Residual {
    let mut worst = 0.0f64;
    for n in 2..=12u32 {
        for beta in [1.0, 2.0] {
            let unit = SigmoidParams::new(1.0, beta, 1.0)?;
            let recip = SigmoidParams::new(1.0, beta, 1.0 / f64::from(n))?;
            for w in linspace(-20.0, 20.0, 201) {
                let lhs = fourier_closed_form(&recip, w)?;
                let rhs = polynomial_multiplier(n, beta, w)? * fourier_closed_form(&unit, w)?;
                worst = worst.max(rel(rhs, lhs));
            }
        }
    }
    Ok(worst)
}

/// `F(0) = √(2/π)` for 100 random parameter sets.
pub fn dc_normalization() -> Residual {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let p = random_params(&mut rng);
        worst = worst.max((fourier_closed_form(&p, 0.0)? - SQRT_2_OVER_PI).norm());
    }
    Ok(worst)
}

fn strip_point(rng: &mut ChaCha8Rng) -> ComplexValue {
    loop {
        let z = ComplexValue::new(rng.gen_range(-10.0..10.0), rng.gen_range(-50.0..50.0));
        let near_int = |x: f64| (x - x.round()).abs() < 1e-6;
        if z.im.abs() > 1e-6 || !near_int(z.re) {
            return z;
        }
    }
}

/// `Γ(z)Γ(1-z) = π / sin(πz)`, relative, 1000 random points.
pub fn gamma_reflection() -> Residual {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let z = strip_point(&mut rng);
        let lhs = gamma(z)? * gamma(1.0 - z)?;
        worst = worst.max(rel(lhs, PI / (z * PI).sin()));
    }
    Ok(worst)
}

/// `Γ(z+1) = zΓ(z)`, relative, 1000 random points.
pub fn gamma_recurrence() -> Residual {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let z = strip_point(&mut rng);
        let next = gamma(z + 1.0)?;
        worst = worst.max(rel(z * gamma(z)?, next));
    }
    Ok(worst)
}

/// Beta × ₂F₁ evaluation of the integral at the substitution points.
pub fn grad_spot_check(cfg: &QuadratureConfig) -> Residual {
    let mut worst = 0.0f64;
    for (k, beta, nu, w) in SUBSTITUTION_POINTS {
        let (lambda, eta, mu, alpha) = grad_substitution(&SigmoidParams::new(k, beta, nu)?, w);
        worst = worst.max(verify_grad_formula(lambda, eta, mu, alpha, cfg)?);
    }
    Ok(worst)
}

/// Relative gap between time-domain and frequency-domain energy.
pub fn energy_balance(cfg: &QuadratureConfig) -> Residual {
    let mut worst = 0.0f64;
    for p in figure_curves(&FIGURE_SHAPES) {
        let time = time_energy(&p, cfg)?;
        let freq = spectral_energy(&p, cfg)?;
        worst = worst.max(((time - freq) / time).abs());
    }
    Ok(worst)
}

/// Runs every check.
pub fn run(fault: Fault) -> VerifyReport {
    let q = QuadratureConfig::default();
    let checks = vec![
        run_check(
            "standard-reduction",
            "k=1, beta=2, nu=1 transform equals the sech^2 transform",
            1e-12,
            standard_reduction,
        ),
        run_check(
            "closed-vs-quadrature",
            "Gamma-form F(omega) against quadrature of the defining integral",
            1e-8,
            || closed_form_vs_quadrature(&q),
        ),
        run_check(
            "substituted-integral",
            "Gamma form of I(omega) against quadrature in log coordinates",
            1e-8,
            || substituted_integral(&q),
        ),
        run_check(
            "beta-series-route",
            "Beta x 2F1 route against the collapsed Gamma form",
            1e-12,
            beta_series_route,
        ),
        run_check(
            "shift-identity",
            "k enters only through the phase exp(-i ln(k) omega / beta)",
            1e-13,
            || shift_identity(fault),
        ),
        run_check(
            "polynomial-relation",
            "nu = 1/n transform is a polynomial multiple of the nu = 1 transform",
            1e-10,
            polynomial_relation,
        ),
        run_check("dc-normalization", "F(0) = sqrt(2/pi)", 1e-14, dc_normalization),
        run_check(
            "gamma-reflection",
            "Gamma(z) Gamma(1-z) = pi / sin(pi z)",
            1e-11,
            gamma_reflection,
        ),
        run_check("gamma-recurrence", "Gamma(z+1) = z Gamma(z)", 1e-12, gamma_recurrence),
        run_check(
            "grad-spot-check",
            "Beta x 2F1 closed form of the Mellin-type integral at the substitution points",
            1e-8,
            || grad_spot_check(&q),
        ),
        run_check(
            "energy-balance",
            "time-domain and frequency-domain energies agree (relative)",
            1e-6,
            || energy_balance(&q),
        ),
    ];
    VerifyReport {
        subcommand: "verify",
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

pub fn cmd_verify(cfg: &RunConfig) -> Rendered {
    let report = run(cfg.fault);
    let text = match cfg.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_text(),
    };
    Rendered {
        text,
        status: if report.passed() { exit::OK } else { exit::VERIFY_FAILED },
    }
}
