//! Composite Gauss–Legendre quadrature with bisection error control.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::{ComplexValue, Error, Result};

/// Nodes and weights of an n-point Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the rule by Newton iteration on `P_n`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = alloc::vec![0.0; n];
        let mut weights = alloc::vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            // Tricomi initial guess for the i-th largest root.
            let mut x = libm::cos(PI * (i as f64 + 0.75) / (nf + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Applies the rule once on `[a, b]`.
    pub fn panel<F>(&self, f: &F, a: f64, b: f64) -> ComplexValue
    where
        F: Fn(f64) -> ComplexValue,
    {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = ComplexValue::new(0.0, 0.0);
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += f(mid + half * x) * w;
        }
        acc * half
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct Integral {
    pub value: ComplexValue,
    /// Sum of the accepted bisection differences.
    pub error_estimate: f64,
    /// Panels evaluated, counting both halves of every bisection.
    pub panels: usize,
}

/// Integrates `f` over `[a, b]`, starting from equal panels no wider than
/// `max_width` and bisecting any panel whose halves disagree with it by
/// more than its width-proportional share of `abs_target`.
pub fn integrate<F>(
    rule: &GaussLegendre,
    f: F,
    a: f64,
    b: f64,
    max_width: f64,
    abs_target: f64,
    max_panels: usize,
) -> Result<Integral>
where
    F: Fn(f64) -> ComplexValue,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Argument("integration bounds must be finite with a < b"));
    }
    if !(max_width > 0.0) || !(abs_target > 0.0) {
        return Err(Error::Argument("panel width and target must be positive"));
    }
    let length = b - a;
    let initial = libm::ceil(length / max_width).max(1.0) as usize;
    if initial > max_panels {
        return Err(Error::NoConvergence {
            what: "initial panel partition",
            budget: max_panels,
        });
    }
    let step = length / initial as f64;

    let mut pending: Vec<(f64, f64, ComplexValue)> = Vec::with_capacity(initial);
    for i in (0..initial).rev() {
        let lo = a + step * i as f64;
        let hi = if i + 1 == initial { b } else { a + step * (i + 1) as f64 };
        pending.push((lo, hi, rule.panel(&f, lo, hi)));
    }
    let mut panels = initial;
    let mut value = ComplexValue::new(0.0, 0.0);
    let mut error_estimate = 0.0;
    let scale = a.abs().max(b.abs()).max(1.0);

    while let Some((lo, hi, whole)) = pending.pop() {
        let mid = 0.5 * (lo + hi);
        let left = rule.panel(&f, lo, mid);
        let right = rule.panel(&f, mid, hi);
        panels += 2;
        let refined = left + right;
        let diff = (refined - whole).norm();
        let share = abs_target * (hi - lo) / length;
        if diff <= share || (hi - lo) <= 64.0 * f64::EPSILON * scale {
            value += refined;
            error_estimate += diff;
            continue;
        }
        if panels > max_panels {
            return Err(Error::NoConvergence {
                what: "adaptive quadrature",
                budget: max_panels,
            });
        }
        pending.push((mid, hi, right));
        pending.push((lo, mid, left));
    }

    Ok(Integral {
        value,
        error_estimate,
        panels,
    })
}
