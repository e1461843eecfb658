//! Complex Γ, B, Pochhammer symbol and the Gauss hypergeometric series.
//!
//! Γ uses the Lanczos approximation with `g = 7` and nine coefficients,
//! valid for `Re z >= 1/2`; the left half-plane is reached through the
//! reflection formula `Γ(z)Γ(1-z) = π / sin(πz)`. [`ln_gamma`] reaches the
//! left half-plane by upward recurrence instead, so it never forms
//! `sin(πz)` and stays finite on tall vertical lines.

use core::f64::consts::PI;

use crate::{ComplexValue, Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln √(2π)`
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Absolute distance from a non-positive integer treated as a pole.
pub const POLE_TOL: f64 = 1e-14;

/// Distance from the unit circle below which the Gauss series is refused.
pub const SERIES_GUARD: f64 = 1e-3;

/// Relative size of the last accepted term of the Gauss series.
pub const SERIES_REL_TOL: f64 = 1e-16;

/// Term budget for the Gauss series.
pub const SERIES_MAX_TERMS: usize = 10_000;

/// Second parameter used by [`gauss_degenerate_identity_residual`].
pub const DEGENERATE_B: ComplexValue = ComplexValue::new(1.5, 0.25);

fn ensure_finite(z: ComplexValue, what: &'static str) -> Result<ComplexValue> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what))
    }
}

fn is_nonpositive_integer(z: ComplexValue) -> bool {
    if z.im.abs() >= POLE_TOL || z.re > POLE_TOL {
        return false;
    }
    (z.re - libm::round(z.re)).abs() < POLE_TOL
}

fn check_pole(z: ComplexValue) -> Result<()> {
    if is_nonpositive_integer(z) {
        Err(Error::Pole { re: z.re, im: z.im })
    } else {
        Ok(())
    }
}

/// `(sin πx, cos πx)` with exact argument reduction, so values near the
/// integers keep full relative accuracy.
pub(crate) fn sincos_pi(x: f64) -> (f64, f64) {
    let r = x - 2.0 * libm::round(0.5 * x);
    let (sign, r) = if r < 0.0 { (-1.0, -r) } else { (1.0, r) };
    let (s, c) = if r <= 0.25 {
        (libm::sin(PI * r), libm::cos(PI * r))
    } else if r <= 0.75 {
        let d = 0.5 - r;
        (libm::cos(PI * d), libm::sin(PI * d))
    } else {
        let d = 1.0 - r;
        (libm::sin(PI * d), -libm::cos(PI * d))
    };
    (sign * s, c)
}

/// `sin(πz)` for complex `z`.
pub(crate) fn sin_pi(z: ComplexValue) -> ComplexValue {
    let (s, c) = sincos_pi(z.re);
    let y = PI * z.im;
    ComplexValue::new(s * libm::cosh(y), c * libm::sinh(y))
}

/// Lanczos partial-fraction sum and the shifted argument `t`, for `Re z >= 1/2`.
fn lanczos_parts(z: ComplexValue) -> (ComplexValue, ComplexValue) {
    let zm1 = z - 1.0;
    let mut series = ComplexValue::new(LANCZOS_COEF[0], 0.0);
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series += c / (zm1 + i as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    (series, t)
}

fn ln_gamma_right(z: ComplexValue) -> ComplexValue {
    let (series, t) = lanczos_parts(z);
    (z - 0.5) * t.ln() - t + LN_SQRT_2PI + series.ln()
}

fn gamma_right(z: ComplexValue) -> ComplexValue {
    let (series, t) = lanczos_parts(z);
    ((z - 0.5) * t.ln() - t + LN_SQRT_2PI).exp() * series
}

/// Γ(z) for complex `z`.
///
/// Accurate to about `1e-13` relative for `|Re z| <= 20`, `|Im z| <= 100`.
/// Fails with [`Error::Pole`] within [`POLE_TOL`] of `0, -1, -2, ...`.
pub fn gamma(z: ComplexValue) -> Result<ComplexValue> {
    ensure_finite(z, "gamma argument")?;
    check_pole(z)?;
    let value = if z.re < 0.5 {
        PI / (sin_pi(z) * gamma_right(1.0 - z))
    } else {
        gamma_right(z)
    };
    ensure_finite(value, "gamma")
}

/// A logarithm of Γ(z).
///
/// The imaginary part is not reduced to the principal branch; only
/// `exp(ln_gamma(z)) = Γ(z)` is guaranteed. Use this where Γ itself would
/// underflow or overflow.
pub fn ln_gamma(z: ComplexValue) -> Result<ComplexValue> {
    ensure_finite(z, "ln_gamma argument")?;
    check_pole(z)?;
    if z.re >= 0.5 {
        return ensure_finite(ln_gamma_right(z), "ln_gamma");
    }
    // Γ(z) = Γ(z + m) / [z (z+1) ... (z+m-1)]
    let shift = libm::ceil(0.5 - z.re) as usize;
    let mut log_product = ComplexValue::new(0.0, 0.0);
    for j in 0..shift {
        log_product += (z + j as f64).ln();
    }
    ensure_finite(ln_gamma_right(z + shift as f64) - log_product, "ln_gamma")
}

/// B(x, y) = Γ(x)Γ(y)/Γ(x+y) for `Re x > 0`, `Re y > 0`.
pub fn beta(x: ComplexValue, y: ComplexValue) -> Result<ComplexValue> {
    if !(x.re > 0.0 && y.re > 0.0) {
        return Err(Error::Domain("beta requires Re x > 0 and Re y > 0"));
    }
    let log = ln_gamma(x)? + ln_gamma(y)? - ln_gamma(x + y)?;
    ensure_finite(log.exp(), "beta")
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: ComplexValue, n: u32) -> Result<ComplexValue> {
    let mut acc = ComplexValue::new(1.0, 0.0);
    for j in 0..n {
        acc *= x + f64::from(j);
    }
    ensure_finite(acc, "pochhammer")
}

/// Gauss series `₂F₁(a, b; c; z) = Σ (a)_n (b)_n / (c)_n · zⁿ/n!` on `|z| < 1 - δ`.
///
/// Summation stops once two consecutive terms fall below
/// [`SERIES_REL_TOL`] times the running sum, or a term vanishes exactly
/// (terminating series).
pub fn hyp2f1(a: ComplexValue, b: ComplexValue, c: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    for v in [a, b, c, z] {
        ensure_finite(v, "hyp2f1 argument")?;
    }
    if z.norm() >= 1.0 - SERIES_GUARD {
        return Err(Error::Domain("hyp2f1 series needs |z| < 1 - 1e-3"));
    }
    if is_nonpositive_integer(c) {
        return Err(Error::Domain("hyp2f1 needs c off the non-positive integers"));
    }

    let mut term = ComplexValue::new(1.0, 0.0);
    let mut sum = term;
    let mut small_run = 0;
    for n in 0..SERIES_MAX_TERMS {
        let nf = n as f64;
        term = term * (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
        if term.re == 0.0 && term.im == 0.0 {
            return ensure_finite(sum, "hyp2f1");
        }
        if term.norm() < SERIES_REL_TOL * sum.norm() {
            small_run += 1;
            if small_run == 2 {
                return ensure_finite(sum, "hyp2f1");
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NoConvergence {
        what: "hyp2f1 series",
        budget: SERIES_MAX_TERMS,
    })
}

/// Principal-branch `(1 - z)^{-a}`.
pub fn one_minus_pow(z: ComplexValue, a: ComplexValue) -> ComplexValue {
    (-a * (1.0 - z).ln()).exp()
}

/// `|₂F₁(a, b; b; z) - (1-z)^{-a}|` for the fixed regular `b` [`DEGENERATE_B`].
pub fn gauss_degenerate_identity_residual(a: ComplexValue, z: ComplexValue) -> Result<f64> {
    gauss_degenerate_identity_residual_with(a, DEGENERATE_B, z)
}

/// As [`gauss_degenerate_identity_residual`] with an explicit `b`.
pub fn gauss_degenerate_identity_residual_with(a: ComplexValue, b: ComplexValue, z: ComplexValue) -> Result<f64> {
    let series = hyp2f1(a, b, b, z)?;
    Ok((series - one_minus_pow(z, a)).norm())
}
