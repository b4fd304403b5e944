use num_complex::Complex64;
use serde::Serialize;

use super::{DynamicsError, ExtendedState, FieldConfig, SpinState, Vec3};
use crate::basis::BasisUnit;
use crate::brackets::{
    hamiltonian_factor, l_operator, na_bracket, spin_operator, ModelId, PhysicalConstants,
};
use crate::element::{Element, FLOAT_TOLERANCE};

/// State of either operator model.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum ModelState {
    Spin(SpinState),
    Extended(ExtendedState),
}

impl ModelState {
    pub fn kind_name(&self) -> &'static str {
        match self {
            ModelState::Spin(_) => "spin",
            ModelState::Extended(_) => "extended",
        }
    }

    pub fn as_spin(&self) -> &SpinState {
        match self {
            ModelState::Spin(s) => s,
            ModelState::Extended(_) => panic!("expected a spin state"),
        }
    }

    pub fn as_extended(&self) -> &ExtendedState {
        match self {
            ModelState::Extended(x) => x,
            ModelState::Spin(_) => panic!("expected an extended state"),
        }
    }
}

impl From<SpinState> for ModelState {
    fn from(s: SpinState) -> Self {
        ModelState::Spin(s)
    }
}

impl From<ExtendedState> for ModelState {
    fn from(x: ExtendedState) -> Self {
        ModelState::Extended(x)
    }
}

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `Σ_k v_k·op_k`
fn operator_vector(
    v: &Vec3,
    consts: &PhysicalConstants,
    op: fn(i64, &PhysicalConstants) -> Result<Element, crate::brackets::BracketError>,
) -> Element {
    (1..=3)
        .map(|k| op(k, consts).expect("k in range").scale(Complex64::new(v[k as usize - 1], 0.0)))
        .sum()
}

/// The coupling `−sign·(B·μ) = −sign·Σ_m ω_m h_{m+4}`.
fn coupling(model: ModelId, omega: &Vec3, sign: f64, consts: &PhysicalConstants) -> Element {
    (1..=3)
        .map(|m| {
            hamiltonian_factor(model, m, consts)
                .expect("m in range")
                .scale(Complex64::new(-sign * omega[m as usize - 1], 0.0))
        })
        .sum()
}

/// Projects `x` onto `Σ_k c_k·u_k·(Iħ/2)` with real `c_k`, returning `c` and
/// the largest discarded magnitude.
fn project(x: &Element, units: [BasisUnit; 3], consts: &PhysicalConstants) -> (Vec3, f64) {
    let scale = consts.half_action();
    let mut out = [0.0; 3];
    let mut residual: f64 = 0.0;
    for (k, u) in units.iter().enumerate() {
        let c = x.coeff(*u) / scale;
        out[k] = c.re;
        residual = residual.max(c.im.abs());
    }
    for (u, c) in x.support() {
        if !units.contains(&u) {
            residual = residual.max(c.norm());
        }
    }
    (out, residual)
}

fn check_residual(residual: f64, magnitude: f64) -> Result<(), DynamicsError> {
    let tolerance = FLOAT_TOLERANCE * magnitude.max(1.0);
    if residual > tolerance {
        Err(DynamicsError::ProjectionResidual {
            residual,
            tolerance,
        })
    } else {
        Ok(())
    }
}

const SPIN_UNITS: [BasisUnit; 3] = [BasisUnit::I1, BasisUnit::I2, BasisUnit::I3];
const L_UNITS: [BasisUnit; 3] = [BasisUnit::E1, BasisUnit::E2, BasisUnit::E3];

/// Right-hand side computed on algebra elements.
///
/// Quaternionic: `dŜ/dt = I·[h4, −Σ ω_m h_{m+4}, Ŝ]` with `Ŝ = Σ s_k Ŝ_k`.
/// Biquaternionic: `dŜ/dt = −I·[h4, −n₁ Σ ω₁_m h_{m+4}, L̂]` and
/// `dL̂/dt = −I·[h4, −n₂ Σ ω₂_m h_{m+4}, Ŝ]`.
///
/// The expansion carries one factor of ħ̃, so the result equals the
/// component right-hand side times ħ̃ (exactly equal at ħ̃ = 1).
pub fn operator_rhs(
    model: ModelId,
    state: &ModelState,
    field: &FieldConfig,
    consts: &PhysicalConstants,
) -> Result<ModelState, DynamicsError> {
    match (model, state) {
        (ModelId::Quaternionic, ModelState::Spin(s)) => {
            let h4 = hamiltonian_factor(model, 0, consts).expect("m in range");
            let spin = operator_vector(&s.s, consts, spin_operator);
            let ds = na_bracket(&h4, &coupling(model, &field.omega, 1.0, consts), &spin).scale(I);
            let (v, residual) = project(&ds, SPIN_UNITS, consts);
            check_residual(residual, v.iter().fold(0.0, |a: f64, x| a.max(x.abs())))?;
            Ok(ModelState::Spin(SpinState::new(v)))
        }
        (ModelId::Biquaternionic, ModelState::Extended(x)) => {
            let h4 = hamiltonian_factor(model, 0, consts).expect("m in range");
            let spin = operator_vector(&x.s, consts, spin_operator);
            let ang = operator_vector(&x.l, consts, l_operator);
            let c1 = coupling(model, &field.omega1, field.n1.value(), consts);
            let c2 = coupling(model, &field.omega2, field.n2.value(), consts);
            let ds = na_bracket(&h4, &c1, &ang).scale(-I);
            let dl = na_bracket(&h4, &c2, &spin).scale(-I);
            let (vs, rs) = project(&ds, SPIN_UNITS, consts);
            let (vl, rl) = project(&dl, L_UNITS, consts);
            let mag = vs.iter().chain(&vl).fold(0.0, |a: f64, x| a.max(x.abs()));
            check_residual(rs.max(rl), mag)?;
            Ok(ModelState::Extended(ExtendedState::new(vs, vl)))
        }
        (ModelId::Quaternionic, other) => Err(DynamicsError::StateMismatch {
            model: "quaternionic",
            state: other.kind_name(),
        }),
        (ModelId::Biquaternionic, other) => Err(DynamicsError::StateMismatch {
            model: "biquaternionic",
            state: other.kind_name(),
        }),
    }
}
