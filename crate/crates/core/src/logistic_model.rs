//! Time-domain side of the generalized logistic family.

use alloc::vec::Vec;

use crate::{Error, Result};

/// Below this value of `βt` the pulse is evaluated in log space, since
/// `e^{-βt}` overflows near `βt ≈ -709`.
const LOG_SPACE_BELOW: f64 = -30.0;

/// Parameters `(k, β, ν)` of one generalized logistic curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmoidParams {
    k: f64,
    beta: f64,
    nu: f64,
}

impl SigmoidParams {
    pub fn new(k: f64, beta: f64, nu: f64) -> Result<Self> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if !ok(k) {
            return Err(Error::Argument("k must be finite and > 0"));
        }
        if !ok(beta) {
            return Err(Error::Argument("beta must be finite and > 0"));
        }
        if !ok(nu) {
            return Err(Error::Argument("nu must be finite and > 0"));
        }
        Ok(Self { k, beta, nu })
    }

    /// `k = 1, β = 2, ν = 1`: `y = tanh t`, `y' = sech² t`.
    pub fn standard() -> Self {
        Self {
            k: 1.0,
            beta: 2.0,
            nu: 1.0,
        }
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Same rate and shape with `k = 1`.
    pub fn unshifted(&self) -> Self {
        Self { k: 1.0, ..*self }
    }

    /// Interval `[lo, hi]` outside of which each tail of the pulse carries
    /// less than `tol` of its area (equivalently, `y` is within `tol` of
    /// its asymptote).
    ///
    /// Uses the bounds `f(t) <= (2kβ/ν) e^{-βt}` on the right and
    /// `f(t) <= (2β/ν) k^{-1/ν} e^{βt/ν}` on the left. The interval always
    /// contains the peak with at least one time unit `1/β` to spare.
    pub fn support(&self, tol: f64) -> (f64, f64) {
        let Self { k, beta, nu } = *self;
        let right = libm::log(2.0 * k / (nu * tol)) / beta;
        let left = (nu * libm::log(2.0 / tol) - libm::log(k)) / beta;
        let peak = peak_time(self);
        ((-left).min(peak - 1.0 / beta), right.max(peak + 1.0 / beta))
    }
}

/// `y(t) = -1 + 2 [1 + k e^{-βt}]^{-1/ν}`.
pub fn curve(params: &SigmoidParams, t: f64) -> f64 {
    let SigmoidParams { k, beta, nu } = *params;
    let bt = beta * t;
    let log_base = if bt < LOG_SPACE_BELOW {
        libm::log(k) - bt + libm::log1p(libm::exp(bt) / k)
    } else {
        libm::log1p(k * libm::exp(-bt))
    };
    -1.0 + 2.0 * libm::exp(-log_base / nu)
}

/// `f(t) = y'(t) = (2kβ/ν) [1 + k e^{-βt}]^{-1/ν - 1} e^{-βt}`.
pub fn derivative(params: &SigmoidParams, t: f64) -> f64 {
    if params.beta * t < LOG_SPACE_BELOW {
        derivative_log_space(params, t)
    } else {
        derivative_direct(params, t)
    }
}

fn derivative_direct(params: &SigmoidParams, t: f64) -> f64 {
    let SigmoidParams { k, beta, nu } = *params;
    let u = libm::exp(-beta * t);
    2.0 * k * beta / nu * u * libm::exp(-(1.0 / nu + 1.0) * libm::log1p(k * u))
}

// ln f = ln(2β/ν) - (ln k)/ν + βt/ν - (1/ν + 1) ln(1 + e^{βt}/k)
fn derivative_log_space(params: &SigmoidParams, t: f64) -> f64 {
    let SigmoidParams { k, beta, nu } = *params;
    let bt = beta * t;
    let log_f =
        libm::log(2.0 * beta / nu) - libm::log(k) / nu + bt / nu - (1.0 / nu + 1.0) * libm::log1p(libm::exp(bt) / k);
    libm::exp(log_f)
}

/// `d^order f / dt^order` by Richardson-extrapolated central differences
/// of [`derivative`]. `order = 0` returns `f` itself.
pub fn higher_derivative(params: &SigmoidParams, t: f64, order: u32) -> f64 {
    if order == 0 {
        return derivative(params, t);
    }
    let n = order as i32;
    let h = libm::pow(f64::EPSILON, 1.0 / f64::from(n + 4)) / params.beta;
    let central = |h: f64| {
        let mut acc = 0.0;
        let mut binom = 1.0;
        for j in 0..=n {
            let offset = (f64::from(n) / 2.0 - f64::from(j)) * h;
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * binom * derivative(params, t + offset);
            binom = binom * f64::from(n - j) / f64::from(j + 1);
        }
        acc / libm::pow(h, f64::from(n))
    };
    let coarse = central(h);
    let fine = central(0.5 * h);
    (4.0 * fine - coarse) / 3.0
}

/// Location `ln(k/ν)/β` of the maximum of the pulse.
pub fn peak_time(params: &SigmoidParams) -> f64 {
    libm::log(params.k / params.nu) / params.beta
}

/// Which function a [`TimeSeries`] samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Curve,
    Derivative,
}

impl Which {
    pub fn eval(self, params: &SigmoidParams, t: f64) -> f64 {
        match self {
            Which::Curve => curve(params, t),
            Which::Derivative => derivative(params, t),
        }
    }
}

/// Samples of the curve or its derivative on a strictly increasing grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    t: Vec<f64>,
    values: Vec<f64>,
    params: SigmoidParams,
    which: Which,
}

impl TimeSeries {
    pub fn new(t: Vec<f64>, values: Vec<f64>, params: SigmoidParams, which: Which) -> Result<Self> {
        if t.len() != values.len() {
            return Err(Error::Argument("time and value arrays differ in length"));
        }
        if t.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::Argument("time grid must be strictly increasing"));
        }
        Ok(Self {
            t,
            values,
            params,
            which,
        })
    }

    pub fn t(&self) -> &[f64] {
        &self.t
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn params(&self) -> &SigmoidParams {
        &self.params
    }

    pub fn which(&self) -> Which {
        self.which
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    /// Index of the largest value (first one on ties).
    pub fn argmax(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, &v) in self.values.iter().enumerate() {
            if best.is_none_or(|b| v > self.values[b]) {
                best = Some(i);
            }
        }
        best
    }
}

/// `n` equally spaced points on `[lo, hi]`, both endpoints included exactly.
pub fn uniform_grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Argument("grid needs finite bounds with min < max"));
    }
    if n < 2 {
        return Err(Error::Argument("grid needs at least two points"));
    }
    let step = (hi - lo) / (n - 1) as f64;
    let grid: Vec<f64> = (0..n)
        .map(|i| if i + 1 == n { hi } else { lo + step * i as f64 })
        .collect();
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::Argument("grid spacing below floating-point resolution"));
    }
    Ok(grid)
}

/// Evaluates `which` on `n` uniform points of `[t_min, t_max]`.
pub fn sample_time_domain(
    params: &SigmoidParams,
    t_min: f64,
    t_max: f64,
    n: usize,
    which: Which,
) -> Result<TimeSeries> {
    let t = uniform_grid(t_min, t_max, n)?;
    let values = t.iter().map(|&x| which.eval(params, x)).collect();
    TimeSeries::new(t, values, *params, which)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sech2(t: f64) -> f64 {
        let c = libm::cosh(t);
        1.0 / (c * c)
    }

    fn p(k: f64, beta: f64, nu: f64) -> SigmoidParams {
        SigmoidParams::new(k, beta, nu).unwrap()
    }

    #[test]
    fn params_reject_nonpositive_and_non_finite() {
        assert!(SigmoidParams::new(0.0, 1.0, 1.0).is_err());
        assert!(SigmoidParams::new(1.0, -2.0, 1.0).is_err());
        assert!(SigmoidParams::new(1.0, 1.0, 0.0).is_err());
        assert!(SigmoidParams::new(f64::NAN, 1.0, 1.0).is_err());
        assert!(SigmoidParams::new(1.0, f64::INFINITY, 1.0).is_err());
    }

    #[test]
    fn curve_reduces_to_tanh() {
        let s = SigmoidParams::standard();
        assert_eq!(curve(&s, 0.0), 0.0);
        assert!((curve(&s, 1.0) - 0.761_594_155_955_764_9).abs() < 1e-15);
        for i in -40..=40 {
            let t = f64::from(i) * 0.1;
            assert!((curve(&s, t) - libm::tanh(t)).abs() < 2e-15, "t={t}");
        }
    }

    #[test]
    fn curve_reaches_asymptotes_outside_support() {
        for params in [p(1.0, 2.0, 1.0), p(3.0, 0.5, 12.0), p(0.2, 4.0, 1.0 / 12.0)] {
            let (lo, hi) = params.support(1e-12);
            for t in [hi, hi + 1.0, hi + 1e3] {
                assert!(1.0 - curve(&params, t) <= 1e-12 + 2.0 * f64::EPSILON);
            }
            for t in [lo, lo - 1.0, lo - 1e3] {
                assert!(curve(&params, t) + 1.0 <= 1e-12 + 2.0 * f64::EPSILON);
            }
        }
    }

    #[test]
    fn derivative_reduces_to_sech2() {
        let s = SigmoidParams::standard();
        assert_eq!(derivative(&s, 0.0), 1.0);
        assert!((derivative(&s, 1.0) - 0.419_974_341_614_026_07).abs() < 1e-15);
        for i in -60..=60 {
            let t = f64::from(i) * 0.1;
            let want = sech2(t);
            assert!((derivative(&s, t) - want).abs() <= 4e-16 + 1e-14 * want, "t={t}");
        }
    }

    #[test]
    fn derivative_log_space_branch_is_continuous() {
        for params in [p(1.0, 2.0, 1.0), p(5.0, 1.0, 0.3), p(0.1, 3.0, 7.0)] {
            for bt in [LOG_SPACE_BELOW, -5.0, 0.0] {
                let t = bt / params.beta;
                let direct = derivative_direct(&params, t);
                let logged = derivative_log_space(&params, t);
                assert!((direct - logged).abs() <= 1e-13 * direct, "{params:?} bt={bt}");
            }
        }
    }

    #[test]
    fn derivative_survives_extreme_times() {
        let params = p(2.0, 3.0, 0.5);
        for t in [-1e6, -500.0, -250.0, 250.0, 1e6] {
            let v = derivative(&params, t);
            assert!(v.is_finite() && v >= 0.0);
            assert!(curve(&params, t).is_finite());
        }
        // left tail behaves like (2β/ν) k^{-1/ν} e^{βt/ν}
        let t = -100.0;
        let asym = 2.0 * 3.0 / 0.5 * libm::pow(2.0, -2.0) * libm::exp(3.0 * t / 0.5);
        assert!((derivative(&params, t) / asym - 1.0).abs() < 1e-12);
    }

    #[test]
    fn derivative_matches_finite_difference_of_curve() {
        let s = SigmoidParams::standard();
        let h = 1e-6;
        let fd = (curve(&s, 1.0 + h) - curve(&s, 1.0 - h)) / (2.0 * h);
        assert!((derivative(&s, 1.0) - fd).abs() < 1e-9);
    }

    #[test]
    fn higher_derivative_of_standard_pulse() {
        // d/dt sech² t = -2 sech² t tanh t
        let s = SigmoidParams::standard();
        for t in [-2.0, -0.3, 0.0, 0.7, 3.0] {
            let want = -2.0 * sech2(t) * libm::tanh(t);
            assert!((higher_derivative(&s, t, 1) - want).abs() < 1e-10, "t={t}");
            // d²/dt² sech² t = 4 sech² t - 6 sech⁴ t
            let want2 = 4.0 * sech2(t) - 6.0 * sech2(t) * sech2(t);
            assert!((higher_derivative(&s, t, 2) - want2).abs() < 1e-7, "t={t}");
        }
        assert_eq!(higher_derivative(&s, 0.4, 0), derivative(&s, 0.4));
    }

    #[test]
    fn peak_time_examples() {
        assert_eq!(peak_time(&SigmoidParams::standard()), 0.0);
        assert_eq!(peak_time(&p(3.5, 0.7, 3.5)), 0.0);
        let tm = peak_time(&p(1.0, 2.0, 4.0));
        assert!((tm + core::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn peak_time_matches_dense_argmax() {
        let params = p(1.0, 2.0, 4.0);
        let series = sample_time_domain(&params, -3.0, 2.0, 500_001, Which::Derivative).unwrap();
        let i = series.argmax().unwrap();
        assert!((series.t()[i] - peak_time(&params)).abs() <= 1e-5);
    }

    #[test]
    fn pulse_is_unimodal_around_peak() {
        let params = p(1.0, 2.0, 4.0);
        let series = sample_time_domain(&params, -6.0, 6.0, 1201, Which::Derivative).unwrap();
        let v = series.values();
        let sign_changes = v
            .windows(3)
            .filter(|w| (w[1] - w[0]) > 0.0 && (w[2] - w[1]) <= 0.0)
            .count();
        assert_eq!(sign_changes, 1);
    }

    #[test]
    fn sample_time_domain_examples() {
        let s = SigmoidParams::standard();
        let ts = sample_time_domain(&s, -5.0, 5.0, 3, Which::Derivative).unwrap();
        assert_eq!(ts.t(), &[-5.0, 0.0, 5.0]);
        assert!((ts.values()[0] - sech2(-5.0)).abs() < 1e-18);
        assert_eq!(ts.values()[1], 1.0);
        assert!((ts.values()[2] - 1.815_832_309_438_066_8e-4).abs() < 1e-17);

        let ts = sample_time_domain(&s, -1.25, 7.5, 2, Which::Curve).unwrap();
        assert_eq!(ts.t(), &[-1.25, 7.5]);

        let wide = sample_time_domain(&p(1.0, 2.0, 12.0), -10.0, 10.0, 2001, Which::Derivative).unwrap();
        assert!(wide.t()[wide.argmax().unwrap()] < 0.0);
    }

    #[test]
    fn sample_time_domain_errors() {
        let s = SigmoidParams::standard();
        assert!(sample_time_domain(&s, 1.0, 1.0, 5, Which::Curve).is_err());
        assert!(sample_time_domain(&s, 2.0, 1.0, 5, Which::Curve).is_err());
        assert!(sample_time_domain(&s, 0.0, 1.0, 1, Which::Curve).is_err());
        assert!(sample_time_domain(&s, 0.0, f64::NAN, 4, Which::Curve).is_err());
    }

    #[test]
    fn time_series_validates_shape() {
        let s = SigmoidParams::standard();
        assert!(TimeSeries::new(alloc::vec![0.0, 1.0], alloc::vec![0.0], s, Which::Curve).is_err());
        assert!(TimeSeries::new(alloc::vec![1.0, 1.0], alloc::vec![0.0, 0.0], s, Which::Curve).is_err());
    }
}
