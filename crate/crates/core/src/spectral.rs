//! Closed-form Fourier transform of the logistic pulse and its special cases.
//!
//! Convention: `F(ω) = (1/√(2π)) ∫ f(t) e^{-iωt} dt`. With `y = ω/β`,
//!
//! ```text
//! F(ω) = √(2/π) · e^{-i (ln k / β) ω} · Γ(1 + iy) Γ(1/ν - iy) / Γ(1/ν)
//! ```
//!
//! `k` only contributes a pure phase: it translates the pulse by `ln k / β`.
//!
//! For `ν = 1/n` the Γ recurrence gives
//! `F(ω; 1, β, 1/n) = (1/Γ(n)) ∏_{j=1}^{n-1} (j - iω/β) · F(ω; 1, β, 1)`.
//! The factors carry `iω/β`; the bare `iω` form only holds at `β = 1`.

use alloc::vec::Vec;

use crate::logistic_model::{uniform_grid, SigmoidParams};
use crate::special_functions::{beta, hyp2f1, ln_gamma};
use crate::{ComplexValue, Error, Result, SQRT_2_OVER_PI};

const SQRT_2PI: f64 = 2.506_628_274_631_000_7;

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

/// `e^{-i (ln k/β) ω}`: the phase contributed by `k`.
pub fn shift_phase(params: &SigmoidParams, omega: f64) -> ComplexValue {
    let theta = omega * libm::log(params.k()) / params.beta();
    c(libm::cos(theta), -libm::sin(theta))
}

/// Transform of the `k = 1` pulse with the given rate and shape.
fn unshifted_transform(beta: f64, nu: f64, omega: f64) -> Result<ComplexValue> {
    let y = omega / beta;
    let shape = 1.0 / nu;
    // Shape ratio first so that ω = 0 cancels exactly.
    let log = (ln_gamma(c(shape, -y))? - ln_gamma(c(shape, 0.0))?) + ln_gamma(c(1.0, y))?;
    Ok(log.exp() * SQRT_2_OVER_PI)
}

/// `F(ω)` for the pulse with parameters `params`.
pub fn fourier_closed_form(params: &SigmoidParams, omega: f64) -> Result<ComplexValue> {
    if !omega.is_finite() {
        return Err(Error::Argument("omega must be finite"));
    }
    let base = unshifted_transform(params.beta(), params.nu(), omega)?;
    Ok(shift_phase(params, omega) * base)
}

/// `√(2/π) (πω/2) / sinh(πω/2)`, the transform of `sech² t`.
pub fn fourier_standard_logistic(omega: f64) -> ComplexValue {
    let x = 0.5 * core::f64::consts::PI * omega;
    let ratio = if x.abs() < 1e-8 {
        1.0 - x * x / 6.0
    } else {
        x / libm::sinh(x)
    };
    c(SQRT_2_OVER_PI * ratio, 0.0)
}

/// `(1/Γ(n)) ∏_{j=1}^{n-1} (j - iω/β)`, so that
/// `F(ω; 1, β, 1/n) = polynomial_multiplier(n, β, ω) · F(ω; 1, β, 1)`.
pub fn polynomial_multiplier(n: u32, beta: f64, omega: f64) -> Result<ComplexValue> {
    if n < 2 {
        return Err(Error::Argument("polynomial multiplier needs n >= 2"));
    }
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::Argument("beta must be finite and > 0"));
    }
    let y = omega / beta;
    let mut acc = c(1.0, 0.0);
    for j in 1..n {
        let jf = f64::from(j);
        acc *= c(1.0, -y / jf);
    }
    Ok(acc)
}

/// Transform of the `n`-th time derivative of the pulse, `(iω)^n F(ω)`.
pub fn nth_derivative_spectrum(params: &SigmoidParams, n: u32, omega: f64) -> Result<ComplexValue> {
    let f = fourier_closed_form(params, omega)?;
    let mut factor = c(1.0, 0.0);
    for _ in 0..n {
        factor *= c(0.0, omega);
    }
    let value = factor * f;
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite("nth_derivative_spectrum"))
    }
}

/// The substituted integral `I(ω) = (1/β) ∫₀^∞ u^{iω/β} (1+ku)^{-1/ν-1} du`
/// in Γ form: `(1/β) Γ(1+iy) Γ(1/ν-iy) / Γ(1+1/ν) · k^{-1-iy}`.
pub fn i_integral_closed_form(params: &SigmoidParams, omega: f64) -> Result<ComplexValue> {
    let y = omega / params.beta();
    let shape = 1.0 / params.nu();
    let log = ln_gamma(c(1.0, y))? + ln_gamma(c(shape, -y))? - ln_gamma(c(1.0 + shape, 0.0))?
        + c(-1.0, -y) * libm::log(params.k());
    Ok(log.exp() / params.beta())
}

/// `F(ω)` through the Beta function and the Gauss series, the route taken
/// before the series collapses to a power of `k`:
///
/// `I(ω) = (1/β) B(1+iy, 1/ν-iy) · ₂F₁(1/ν+1, 1+iy; 1/ν+1; 1-k)`.
///
/// Only available where the series converges, `|1 - k| < 1 - 1e-3`.
pub fn fourier_via_beta_series(params: &SigmoidParams, omega: f64) -> Result<ComplexValue> {
    let y = omega / params.beta();
    let shape = 1.0 / params.nu();
    let lambda = c(1.0, y);
    let b = beta(lambda, c(shape, -y))?;
    let a = c(shape + 1.0, 0.0);
    let series = hyp2f1(a, lambda, a, c(1.0 - params.k(), 0.0))?;
    let i_integral = b * series / params.beta();
    Ok(i_integral * (2.0 * params.k() * params.beta() / params.nu() / SQRT_2PI))
}

/// Uniform sampling of `ω`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyGrid {
    omega_min: f64,
    omega_max: f64,
    n: usize,
}

impl FrequencyGrid {
    pub fn new(omega_min: f64, omega_max: f64, n: usize) -> Result<Self> {
        if !(omega_min.is_finite() && omega_max.is_finite() && omega_min < omega_max) {
            return Err(Error::Argument("frequency grid needs finite omega_min < omega_max"));
        }
        if n < 2 {
            return Err(Error::Argument("frequency grid needs at least two points"));
        }
        Ok(Self {
            omega_min,
            omega_max,
            n,
        })
    }

    /// `[-omega_max, omega_max]` with `n` points.
    pub fn symmetric(omega_max: f64, n: usize) -> Result<Self> {
        Self::new(-omega_max, omega_max, n)
    }

    pub fn omega_min(&self) -> f64 {
        self.omega_min
    }

    pub fn omega_max(&self) -> f64 {
        self.omega_max
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_symmetric(&self) -> bool {
        self.omega_min == -self.omega_max
    }

    /// Grid points. A symmetric grid is mirrored exactly, so `ω_i = -ω_{n-1-i}`.
    pub fn points(&self) -> Result<Vec<f64>> {
        let mut pts = uniform_grid(self.omega_min, self.omega_max, self.n)?;
        if self.is_symmetric() {
            let n = pts.len();
            for i in 0..n / 2 {
                pts[n - 1 - i] = -pts[i];
            }
            if n % 2 == 1 {
                pts[n / 2] = 0.0;
            }
        }
        Ok(pts)
    }
}

/// Samples `(ω, F(ω))` of one parameter set.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTable {
    omega: Vec<f64>,
    values: Vec<ComplexValue>,
    params: SigmoidParams,
}

impl SpectrumTable {
    pub fn new(omega: Vec<f64>, values: Vec<ComplexValue>, params: SigmoidParams) -> Result<Self> {
        if omega.len() != values.len() {
            return Err(Error::Argument("omega and value arrays differ in length"));
        }
        Ok(Self { omega, values, params })
    }

    pub fn omega(&self) -> &[f64] {
        &self.omega
    }

    pub fn values(&self) -> &[ComplexValue] {
        &self.values
    }

    pub fn params(&self) -> &SigmoidParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }

    pub fn magnitudes(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().map(|v| v.norm())
    }

    /// Phase in `(-π, π]`.
    pub fn phases(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().map(|v| libm::atan2(v.im, v.re))
    }

    /// Largest `|F(-ω) - conj F(ω)|` over mirrored grid points, or `None`
    /// when the grid is not symmetric about zero.
    pub fn conjugate_asymmetry(&self) -> Option<f64> {
        let n = self.omega.len();
        let mut worst = 0.0f64;
        for i in 0..n {
            let j = n - 1 - i;
            if self.omega[i] != -self.omega[j] {
                return None;
            }
            worst = worst.max((self.values[j] - self.values[i].conj()).norm());
        }
        Some(worst)
    }
}

/// Evaluates [`fourier_closed_form`] on every grid point.
pub fn sample_spectrum(params: &SigmoidParams, grid: &FrequencyGrid) -> Result<SpectrumTable> {
    let omega = grid.points()?;
    let values = omega
        .iter()
        .map(|&w| fourier_closed_form(params, w))
        .collect::<Result<Vec<_>>>()?;
    SpectrumTable::new(omega, values, *params)
}
