//! Direct numerical evaluation of the defining integrals.
//!
//! Nothing here goes through Γ except the right-hand side of
//! [`verify_grad_formula`] and the frequency side of the energy balance,
//! which are the closed forms being checked. The integrals are truncated to
//! a window chosen from rigorous tail bounds and then handed to adaptive
//! composite Gauss–Legendre quadrature whose panels are never wider than an
//! eighth of one oscillation period.

use core::f64::consts::PI;

use crate::gauss_legendre::{integrate, GaussLegendre, Integral};
use crate::logistic_model::{derivative, peak_time, SigmoidParams};
use crate::special_functions::{beta, hyp2f1};
use crate::spectral::fourier_closed_form;
use crate::{ComplexValue, Error, Result};

const SQRT_2PI: f64 = 2.506_628_274_631_000_7;
const RULE_POINTS: usize = 16;
const PANELS_PER_PERIOD: f64 = 8.0;

/// Tolerances and budget for the oracle integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Largest mass allowed in each discarded tail.
    pub tail_tol: f64,
    /// Panel budget for one integral.
    pub max_panels: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            tail_tol: 1e-12,
            max_panels: 1 << 20,
        }
    }
}

impl QuadratureConfig {
    pub fn new(abs_tol: f64, rel_tol: f64, tail_tol: f64, max_panels: usize) -> Result<Self> {
        let cfg = Self {
            abs_tol,
            rel_tol,
            tail_tol,
            max_panels,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let pos = |v: f64| v.is_finite() && v > 0.0;
        if !(pos(self.abs_tol) && pos(self.rel_tol) && pos(self.tail_tol)) {
            return Err(Error::Argument("quadrature tolerances must be positive"));
        }
        if self.max_panels < 8 {
            return Err(Error::Argument("max_panels must be at least 8"));
        }
        Ok(())
    }
}

fn rule() -> GaussLegendre {
    GaussLegendre::new(RULE_POINTS)
}

/// Panel width: the smooth-feature cap, tightened so that one period of
/// `e^{i·freq·x}` spans at least eight panels.
fn panel_cap(smooth_cap: f64, freq: f64) -> f64 {
    if freq == 0.0 {
        smooth_cap
    } else {
        smooth_cap.min(2.0 * PI / freq.abs() / PANELS_PER_PERIOD)
    }
}

/// Runs the adaptive rule against `max(abs_tol, rel_tol·|estimate|)`, the
/// estimate coming from the unrefined initial partition.
fn integrate_to_config<F>(f: F, lo: f64, hi: f64, cap: f64, cfg: &QuadratureConfig) -> Result<Integral>
where
    F: Fn(f64) -> ComplexValue,
{
    let rule = rule();
    let panels = libm::ceil((hi - lo) / cap).max(1.0) as usize;
    if panels > cfg.max_panels {
        return Err(Error::NoConvergence {
            what: "oracle panel partition",
            budget: cfg.max_panels,
        });
    }
    let width = (hi - lo) / panels as f64;
    let mut estimate = ComplexValue::new(0.0, 0.0);
    for i in 0..panels {
        let a = lo + width * i as f64;
        estimate += rule.panel(&f, a, a + width);
    }
    let target = cfg.abs_tol.max(cfg.rel_tol * estimate.norm());
    integrate(&rule, f, lo, hi, cap, target, cfg.max_panels)
}

/// Time scale of the pulse's narrowest flank.
fn time_cap(params: &SigmoidParams) -> f64 {
    0.5 * params.nu().min(1.0) / params.beta()
}

/// `(1/√(2π)) ∫ f(t) e^{-iωt} dt` over the tail-bounded window.
pub fn fourier_numeric(params: &SigmoidParams, omega: f64, cfg: &QuadratureConfig) -> Result<ComplexValue> {
    cfg.validate()?;
    let (lo, hi) = params.support(cfg.tail_tol);
    fourier_numeric_on(params, omega, cfg, lo, hi)
}

/// As [`fourier_numeric`] on an explicit window `[lo, hi]`.
pub fn fourier_numeric_on(
    params: &SigmoidParams,
    omega: f64,
    cfg: &QuadratureConfig,
    lo: f64,
    hi: f64,
) -> Result<ComplexValue> {
    cfg.validate()?;
    if !omega.is_finite() {
        return Err(Error::Argument("omega must be finite"));
    }
    let p = *params;
    let integrand = move |t: f64| {
        let phase = -omega * t;
        ComplexValue::new(libm::cos(phase), libm::sin(phase)) * derivative(&p, t)
    };
    let cap = panel_cap(time_cap(params), omega);
    let r = integrate_to_config(integrand, lo, hi, cap, cfg)?;
    Ok(r.value / SQRT_2PI)
}

/// `ln(1 + e^x)` without overflow.
fn softplus(x: f64) -> f64 {
    if x > 0.0 {
        x + libm::log1p(libm::exp(-x))
    } else {
        libm::log1p(libm::exp(x))
    }
}

/// `I(ω) = (1/β) ∫₀^∞ u^{iω/β} (1 + ku)^{-1/ν-1} du`, integrated in
/// `s = ln u` where both tails decay exponentially and the oscillation
/// `e^{i(ω/β)s}` has constant period.
pub fn i_integral_numeric(params: &SigmoidParams, omega: f64, cfg: &QuadratureConfig) -> Result<ComplexValue> {
    cfg.validate()?;
    if !omega.is_finite() {
        return Err(Error::Argument("omega must be finite"));
    }
    let (k, b, nu) = (params.k(), params.beta(), params.nu());
    let y = omega / b;
    let power = 1.0 / nu + 1.0;
    let ln_k = libm::log(k);
    let tol = cfg.tail_tol;
    // left:  |integrand| <= e^s / β
    // right: |integrand| <= k^{-p} e^{-s/ν} / β
    let lo = libm::log(b * tol).min(-ln_k - 1.0);
    let hi = (nu * (libm::log(nu / (b * tol)) - power * ln_k)).max(-ln_k + 1.0);
    let integrand = move |s: f64| {
        let magnitude = libm::exp(s - power * softplus(ln_k + s));
        ComplexValue::new(libm::cos(y * s), libm::sin(y * s)) * magnitude
    };
    let cap = panel_cap(0.5 * nu.min(1.0), y);
    let r = integrate_to_config(integrand, lo, hi, cap, cfg)?;
    Ok(r.value / b)
}

/// Numerically integrated `∫₀^∞ x^{λ-1} (1+x)^η (1+αx)^μ dx`.
///
/// Requires `-Re(μ+η) > Re λ > 0` and `α > 0`.
pub fn grad_integral_numeric(
    lambda: ComplexValue,
    eta: ComplexValue,
    mu: ComplexValue,
    alpha: f64,
    cfg: &QuadratureConfig,
) -> Result<ComplexValue> {
    cfg.validate()?;
    check_grad_region(lambda, eta, mu, alpha)?;
    let rate_left = lambda.re;
    let rate_right = -(lambda.re + eta.re + mu.re);
    let const_left = libm::pow(2.0, eta.re.abs()) * libm::pow(1.0 + alpha, mu.re.abs());
    let const_right = (if eta.re >= 0.0 { libm::pow(2.0, eta.re) } else { 1.0 })
        * if mu.re >= 0.0 {
            libm::pow(1.0 + alpha, mu.re)
        } else {
            libm::pow(alpha, mu.re)
        };
    let tol = cfg.tail_tol;
    let lo = (libm::log(tol * rate_left / const_left) / rate_left).min(-1.0);
    let hi = (libm::log(const_right / (tol * rate_right)) / rate_right).max(1.0);
    let ln_alpha = libm::log(alpha);
    // x = e^s, dx = e^s ds
    let integrand = move |s: f64| {
        let log = lambda * s + eta * softplus(s) + mu * softplus(ln_alpha + s);
        log.exp()
    };
    let freq = lambda.im.abs() + eta.im.abs() + mu.im.abs();
    let cap = panel_cap(0.5, freq);
    Ok(integrate_to_config(integrand, lo, hi, cap, cfg)?.value)
}

fn check_grad_region(lambda: ComplexValue, eta: ComplexValue, mu: ComplexValue, alpha: f64) -> Result<()> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::Domain("alpha must be a positive real"));
    }
    if !(lambda.re > 0.0 && -(mu.re + eta.re) > lambda.re) {
        return Err(Error::Domain("need -Re(mu + eta) > Re(lambda) > 0"));
    }
    Ok(())
}

/// `B(λ, -η-μ-λ) · ₂F₁(-μ, λ; -μ-η; 1-α)`.
pub fn grad_closed_form(lambda: ComplexValue, eta: ComplexValue, mu: ComplexValue, alpha: f64) -> Result<ComplexValue> {
    check_grad_region(lambda, eta, mu, alpha)?;
    if (1.0 - alpha).abs() >= 1.0 {
        return Err(Error::Domain("need |1 - alpha| < 1 for the series"));
    }
    let b = beta(lambda, -eta - mu - lambda)?;
    let series = hyp2f1(-mu, lambda, -mu - eta, ComplexValue::new(1.0 - alpha, 0.0))?;
    Ok(b * series)
}

/// Spot check of the Beta × ₂F₁ evaluation of
/// `∫₀^∞ x^{λ-1} (1+x)^η (1+αx)^μ dx`: returns
/// `|numeric - closed form|`.
pub fn verify_grad_formula(
    lambda: ComplexValue,
    eta: ComplexValue,
    mu: ComplexValue,
    alpha: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let rhs = grad_closed_form(lambda, eta, mu, alpha)?;
    let lhs = grad_integral_numeric(lambda, eta, mu, alpha, cfg)?;
    Ok((lhs - rhs).norm())
}

/// The Grad parameters that turn the integral into `β·I(ω)`:
/// `λ = 1 + iω/β`, `η = 0`, `μ = -1/ν - 1`, `α = k`.
pub fn grad_substitution(params: &SigmoidParams, omega: f64) -> (ComplexValue, ComplexValue, ComplexValue, f64) {
    (
        ComplexValue::new(1.0, omega / params.beta()),
        ComplexValue::new(0.0, 0.0),
        ComplexValue::new(-1.0 / params.nu() - 1.0, 0.0),
        params.k(),
    )
}

/// `∫ f(t)² dt` by quadrature over the tail-bounded window.
pub fn time_energy(params: &SigmoidParams, cfg: &QuadratureConfig) -> Result<f64> {
    cfg.validate()?;
    // Each tail holds at most f_max · tail_tol of the squared pulse.
    let (lo, hi) = params.support(cfg.tail_tol);
    let p = *params;
    let r = integrate_to_config(
        move |t| {
            let f = derivative(&p, t);
            ComplexValue::new(f * f, 0.0)
        },
        lo,
        hi,
        time_cap(params),
        cfg,
    )?;
    Ok(r.value.re)
}

/// Half-width `Ω` of the band outside which `∫|F|² dω` is below `tol`.
///
/// Uses `|F(ω)|² <= (2/π) |Γ(1 + iω/β)|² = (2/π) πy / sinh(πy)`.
pub fn spectral_band(params: &SigmoidParams, tol: f64) -> f64 {
    let mut y = 1.0;
    let lead = 2.0 * (2.0 / PI) * params.beta() * (2.0 * PI / (1.0 - libm::exp(-2.0 * PI)));
    while lead * libm::exp(-PI * y) * (y / PI + 1.0 / (PI * PI)) >= tol {
        y += 0.5;
    }
    params.beta() * y
}

/// `∫ |F(ω)|² dω` from the closed form.
pub fn spectral_energy(params: &SigmoidParams, cfg: &QuadratureConfig) -> Result<f64> {
    cfg.validate()?;
    let band = spectral_band(params, cfg.tail_tol);
    let p = *params;
    let integrand = move |w: f64| {
        let v = fourier_closed_form(&p, w).map(|f| f.norm_sqr()).unwrap_or(f64::NAN);
        ComplexValue::new(v, 0.0)
    };
    let cap = 0.25 * params.beta();
    let r = integrate_to_config(integrand, -band, band, cap, cfg)?;
    if !r.value.re.is_finite() {
        return Err(Error::NonFinite("spectral_energy"));
    }
    Ok(r.value.re)
}

/// Area under the pulse over `[-T₁, T₂]`; should be 2 up to the tails.
pub fn pulse_area(params: &SigmoidParams, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(fourier_numeric(params, 0.0, cfg)?.re * SQRT_2PI)
}

/// Location of the pulse maximum found by a coarse scan over the support
/// followed by a dense scan with step `step` around the coarse winner.
pub fn scan_peak(params: &SigmoidParams, step: f64) -> f64 {
    let (lo, hi) = params.support(1e-6);
    let coarse = step * 100.0;
    let argmax = |a: f64, b: f64, h: f64| {
        let n = libm::ceil((b - a) / h) as usize;
        let mut best = (a, derivative(params, a));
        for i in 1..=n {
            let t = a + h * i as f64;
            let v = derivative(params, t);
            if v > best.1 {
                best = (t, v);
            }
        }
        best.0
    };
    let rough = argmax(lo, hi, coarse);
    argmax(rough - coarse, rough + coarse, step)
}

/// Peak sits at `ln(k/ν)/β`; exposed for symmetry with [`scan_peak`].
pub fn predicted_peak(params: &SigmoidParams) -> f64 {
    peak_time(params)
}
