//! Generalized logistic growth curves and the closed-form Fourier transform
//! of their first derivative.
//!
//! The three-parameter family
//!
//! ```text
//! y(t) = -1 + 2 / [1 + k e^{-βt}]^{1/ν},     k, β, ν > 0
//! ```
//!
//! rises from -1 to 1. Its derivative `f = y'` is a localized pulse with
//! area 2, and under the unitary convention (kernel `e^{-iωt}`, `1/√(2π)`)
//! its transform is
//!
//! ```text
//! F(ω) = √(2/π) · k^{-iω/β} · Γ(1 + iω/β) Γ(1/ν - iω/β) / Γ(1/ν).
//! ```
//!
//! The crate is split into:
//!
//! * [`special_functions`]: complex Γ, B, Pochhammer symbol and the Gauss
//!   series for ₂F₁.
//! * [`logistic_model`]: the curve, its derivative and the peak location.
//! * [`spectral`]: the closed-form transform and its special cases.
//! * [`quadrature_oracle`]: direct numerical evaluation of the defining
//!   integrals, used to check every closed form without touching Γ.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled.

#![cfg_attr(not(feature = "std"), no_std)]
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod error;
pub mod gauss_legendre;
pub mod logistic_model;
pub mod quadrature_oracle;
pub mod special_functions;
pub mod spectral;

pub use error::{Error, Result};
pub use logistic_model::{SigmoidParams, TimeSeries, Which};
pub use quadrature_oracle::QuadratureConfig;
pub use spectral::{FrequencyGrid, SpectrumTable};

/// Complex scalar used for every Γ/₂F₁/F value.
pub type ComplexValue = num_complex::Complex64;

/// `√(2/π)`, the transform of the unit-area-2 pulse at `ω = 0`.
pub const SQRT_2_OVER_PI: f64 = 0.797_884_560_802_865_4;
