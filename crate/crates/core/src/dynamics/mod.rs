//! Heisenberg dynamics of the standard, quaternionic (non-associative) and
//! extended biquaternionic qubit models.
//!
//! The component equations, with `ε` the Levi-Civita symbol:
//!
//! * standard qubit:  `ṡ_k = ε_{ijk} ω_i s_j`, i.e. `ṡ = ω × s`
//! * NA qubit:        `ṡ_k = −ε_{mnk} ω_m s_n`, i.e. `ṡ = −ω × s`
//! * extended model:  `ṡ = −n₁ ω₁ × l`, `l̇ = n₂ ω₂ × s`
//!
//! [`operator_rhs`] evaluates the same right-hand sides through the ternary
//! bracket on algebra elements and projects the result back to components.

mod analytic;
mod integrate;
mod operator;
mod qubit;

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

pub use analytic::{analytic_extended, analytic_rotation, RotationModel};
pub use integrate::{integrate, integrate_model, rk4_step, OdeState, Trajectory};
pub use operator::{operator_rhs, ModelState};
pub use qubit::{pauli_observable, pauli_relations_check, sigma, spinor_norm_and_inner, Mat2, QubitSpinor};

pub type Vec3 = [f64; 3];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error("time step must be positive and finite, got {0}")]
    InvalidStep(f64),
    #[error("t_max ({t_max}) must be finite and at least dt ({dt})")]
    InvalidHorizon { t_max: f64, dt: f64 },
    #[error("state became non-finite at t = {time}")]
    NonFinite { time: f64 },
    #[error("projection residual {residual:e} exceeds tolerance {tolerance:e}")]
    ProjectionResidual { residual: f64, tolerance: f64 },
    #[error("sign must be +1 or -1, got {0}")]
    InvalidSign(i64),
    #[error("model {model} does not evolve a {state} state")]
    StateMismatch {
        model: &'static str,
        state: &'static str,
    },
    #[error("unknown dynamics model `{0}`")]
    UnknownModel(String),
}

/// Interaction sign `n₁` / `n₂`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = DynamicsError;

    fn try_from(v: i64) -> Result<Self, Self::Error> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(DynamicsError::InvalidSign(other)),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct SpinState {
    pub s: Vec3,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct ExtendedState {
    pub s: Vec3,
    pub l: Vec3,
}

impl SpinState {
    pub fn new(s: Vec3) -> Self {
        Self { s }
    }

    pub fn norm_sq(&self) -> f64 {
        dot(&self.s, &self.s)
    }
}

impl ExtendedState {
    pub fn new(s: Vec3, l: Vec3) -> Self {
        Self { s, l }
    }

    /// `|s|² − |l|²`, conserved when `n₁ω₁ = n₂ω₂`.
    pub fn hyperbolic_norm(&self) -> f64 {
        dot(&self.s, &self.s) - dot(&self.l, &self.l)
    }
}

/// Field configuration. `omega` drives the single-field models; `omega1`,
/// `omega2`, `n1`, `n2` drive the extended model.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FieldConfig {
    pub omega: Vec3,
    pub omega1: Vec3,
    pub omega2: Vec3,
    pub n1: Sign,
    pub n2: Sign,
}

impl FieldConfig {
    pub fn single(omega: Vec3) -> Self {
        Self {
            omega,
            ..Self::default()
        }
    }

    pub fn extended(omega1: Vec3, omega2: Vec3, n1: Sign, n2: Sign) -> Self {
        Self {
            omega: [0.0; 3],
            omega1,
            omega2,
            n1,
            n2,
        }
    }
}

/// Unit field along z for every slot, both signs positive.
impl Default for FieldConfig {
    fn default() -> Self {
        let z = [0.0, 0.0, 1.0];
        Self {
            omega: z,
            omega1: z,
            omega2: z,
            n1: Sign::Plus,
            n2: Sign::Plus,
        }
    }
}

/// Which component system to evolve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DynamicsModel {
    StandardQubit,
    NaQubit,
    Extended,
}

impl DynamicsModel {
    pub fn name(self) -> &'static str {
        match self {
            Self::StandardQubit => "standard",
            Self::NaQubit => "na-qubit",
            Self::Extended => "extended",
        }
    }
}

impl fmt::Display for DynamicsModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DynamicsModel {
    type Err = DynamicsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "standard" | "standard-qubit" => Ok(Self::StandardQubit),
            "na-qubit" | "na" | "quaternionic" => Ok(Self::NaQubit),
            "extended" | "biquaternionic" => Ok(Self::Extended),
            _ => Err(DynamicsError::UnknownModel(s.to_string())),
        }
    }
}

pub(crate) fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn scaled(v: Vec3, c: f64) -> Vec3 {
    v.map(|x| c * x)
}

/// `ṡ_k = ε_{ijk} ω_i s_j`
pub fn standard_qubit_rhs(state: &SpinState, field: &FieldConfig) -> SpinState {
    SpinState::new(cross(&field.omega, &state.s))
}

/// `ṡ_k = −ε_{mnk} ω_m s_n`
pub fn na_qubit_rhs(state: &SpinState, field: &FieldConfig) -> SpinState {
    SpinState::new(scaled(cross(&field.omega, &state.s), -1.0))
}

/// `ṡ_k = −n₁ ε_{mnk} ω₁_m l_n`, `l̇_k = n₂ ε_{mnk} ω₂_m s_n`
pub fn extended_rhs(state: &ExtendedState, field: &FieldConfig) -> ExtendedState {
    ExtendedState::new(
        scaled(cross(&field.omega1, &state.l), -field.n1.value()),
        scaled(cross(&field.omega2, &state.s), field.n2.value()),
    )
}
