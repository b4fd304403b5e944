//! Commutator, associator and the ternary non-associative bracket, plus the
//! scaled operators used by the qubit models.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::basis::BasisUnit;
use crate::element::{multiply, Element, Scalar};

/// `xy − yx`
pub fn commutator<T: Scalar>(x: &Element<T>, y: &Element<T>) -> Element<T> {
    multiply(x, y) - multiply(y, x)
}

/// `(xy)z − x(yz)`
pub fn associator<T: Scalar>(x: &Element<T>, y: &Element<T>, z: &Element<T>) -> Element<T> {
    multiply(&multiply(x, y), z) - multiply(x, &multiply(y, z))
}

/// The ternary bracket `[a, b, c] = a(bc) − (ca)b`.
///
/// With `c = 1` it reduces to `ab − ab = 0`; when all three arguments lie in
/// an associative subalgebra it is the ordinary commutator `[ab, c]`.
pub fn na_bracket<T: Scalar>(a: &Element<T>, b: &Element<T>, c: &Element<T>) -> Element<T> {
    multiply(a, &multiply(b, c)) - multiply(&multiply(c, a), b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ModelId {
    /// Quaternion observables, octonion Hamiltonian factors.
    Quaternionic,
    /// Biquaternion observables, sedenion Hamiltonian factors.
    Biquaternionic,
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Quaternionic => "QUATERNIONIC",
            Self::Biquaternionic => "BIQUATERNIONIC",
        })
    }
}

impl FromStr for ModelId {
    type Err = BracketError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "quaternionic" | "quaternion" => Ok(Self::Quaternionic),
            "biquaternionic" | "biquaternion" => Ok(Self::Biquaternionic),
            _ => Err(BracketError::UnknownModel(s.to_string())),
        }
    }
}

/// Which unit the `m = 0` biquaternionic factor is built on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FirstFactor {
    /// `h4 = i4·√(Iħ/2)`. Every biquaternionic bracket identity puts `i4`
    /// in the first slot, and the scaled identities hold with this choice.
    #[default]
    I4,
    /// `h4 = e4·√(Iħ/2)`, the literal reading of the biquaternionic factor
    /// family. The scaled identities do not hold with it.
    E4,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BracketError {
    #[error("hamiltonian factor index m = {0} out of range 0..=3")]
    FactorIndex(i64),
    #[error("operator index k = {0} out of range 1..=3")]
    OperatorIndex(i64),
    #[error("hbar_tilde must be positive and finite, got {0}")]
    NonPositiveHbar(f64),
    #[error("unknown model `{0}`")]
    UnknownModel(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PhysicalConstants {
    hbar_tilde: f64,
    pub mu: f64,
}

impl PhysicalConstants {
    pub fn new(hbar_tilde: f64, mu: f64) -> Result<Self, BracketError> {
        if !(hbar_tilde > 0.0 && hbar_tilde.is_finite()) {
            return Err(BracketError::NonPositiveHbar(hbar_tilde));
        }
        Ok(Self { hbar_tilde, mu })
    }

    pub fn with_hbar(hbar_tilde: f64) -> Result<Self, BracketError> {
        Self::new(hbar_tilde, 1.0)
    }

    pub fn hbar_tilde(&self) -> f64 {
        self.hbar_tilde
    }

    /// `Iħ/2`, the scale of the spin and L operators.
    pub fn half_action(&self) -> Complex64 {
        Complex64::new(0.0, self.hbar_tilde / 2.0)
    }

    /// Principal square root of `Iħ/2`.
    pub fn factor_scale(&self) -> Complex64 {
        self.half_action().sqrt()
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            hbar_tilde: 1.0,
            mu: 1.0,
        }
    }
}

fn im_unit(n: i64) -> BasisUnit {
    BasisUnit::im(n as u8).expect("index checked by caller")
}

fn eps_unit(n: i64) -> BasisUnit {
    BasisUnit::eps(n as u8).expect("index checked by caller")
}

/// `h_{m+4}`: `i_{m+4}·√(Iħ/2)` (quaternionic) or `e_{m+4}·√(Iħ/2)`
/// (biquaternionic, m ≥ 1), with `h4 = i4·√(Iħ/2)` in both models.
pub fn hamiltonian_factor(
    model: ModelId,
    m: i64,
    consts: &PhysicalConstants,
) -> Result<Element, BracketError> {
    hamiltonian_factor_with(model, m, consts, FirstFactor::default())
}

pub fn hamiltonian_factor_with(
    model: ModelId,
    m: i64,
    consts: &PhysicalConstants,
    first: FirstFactor,
) -> Result<Element, BracketError> {
    if !(0..=3).contains(&m) {
        return Err(BracketError::FactorIndex(m));
    }
    let unit = match (model, m) {
        (ModelId::Quaternionic, _) => im_unit(m + 4),
        (ModelId::Biquaternionic, 0) => match first {
            FirstFactor::I4 => BasisUnit::I4,
            FirstFactor::E4 => BasisUnit::E4,
        },
        (ModelId::Biquaternionic, _) => eps_unit(m + 4),
    };
    Ok(Element::scaled_basis(consts.factor_scale(), unit))
}

/// `Ŝ_k = i_k·(Iħ/2)`
pub fn spin_operator(k: i64, consts: &PhysicalConstants) -> Result<Element, BracketError> {
    if !(1..=3).contains(&k) {
        return Err(BracketError::OperatorIndex(k));
    }
    Ok(Element::scaled_basis(consts.half_action(), im_unit(k)))
}

/// `L̂_k = e_k·(Iħ/2)`
pub fn l_operator(k: i64, consts: &PhysicalConstants) -> Result<Element, BracketError> {
    if !(1..=3).contains(&k) {
        return Err(BracketError::OperatorIndex(k));
    }
    Ok(Element::scaled_basis(consts.half_action(), eps_unit(k)))
}

/// Levi-Civita symbol on indices 1..=3.
pub fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{ExactElement, Gaussian, FLOAT_TOLERANCE};
    use BasisUnit as U;

    fn b(u: BasisUnit) -> ExactElement {
        ExactElement::basis(u)
    }

    fn g(re: i64) -> Gaussian {
        Gaussian::new(re, 0)
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(commutator(&b(U::I1), &b(U::I2)), b(U::I3).scale(g(2)));
        let x = b(U::E5) + b(U::I2).scale(Gaussian::new(1, 3));
        assert!(commutator(&x, &x).is_zero());
        assert!(commutator(&b(U::I3), &b(U::E3)).is_zero());
    }

    #[test]
    fn associator_examples() {
        assert_eq!(associator(&b(U::I1), &b(U::I2), &b(U::I4)), b(U::I7).scale(g(2)));
        assert!(associator(&b(U::I1), &b(U::I2), &b(U::I3)).is_zero());
        assert!(associator(&ExactElement::one(), &b(U::E6), &b(U::I5)).is_zero());
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(na_bracket(&b(U::I4), &b(U::I5), &b(U::I2)), b(U::I3).scale(g(-2)));
        assert_eq!(na_bracket(&b(U::I4), &b(U::E5), &b(U::I2)), b(U::E3).scale(g(-2)));
        assert_eq!(na_bracket(&b(U::I4), &b(U::E5), &b(U::E2)), b(U::I3).scale(g(2)));
        let a = b(U::E6) + b(U::I1);
        assert!(na_bracket(&a, &b(U::I7), &ExactElement::one()).is_zero());
    }

    #[test]
    fn factor_examples() {
        let two = PhysicalConstants::with_hbar(2.0).unwrap();
        let sqrt_i = Complex64::new(0.0, 1.0).sqrt();
        let h = hamiltonian_factor(ModelId::Quaternionic, 0, &two).unwrap();
        assert!(h.approx_eq(&Element::scaled_basis(sqrt_i, U::I4), FLOAT_TOLERANCE));
        let h = hamiltonian_factor(ModelId::Biquaternionic, 1, &two).unwrap();
        assert!(h.approx_eq(&Element::scaled_basis(sqrt_i, U::E5), FLOAT_TOLERANCE));
        let h = hamiltonian_factor(ModelId::Biquaternionic, 0, &two).unwrap();
        assert!(h.approx_eq(&Element::scaled_basis(sqrt_i, U::I4), FLOAT_TOLERANCE));
        let h = hamiltonian_factor_with(ModelId::Biquaternionic, 0, &two, FirstFactor::E4).unwrap();
        assert_eq!(h.coeff(U::E4), sqrt_i);
        assert_eq!(
            hamiltonian_factor(ModelId::Quaternionic, 4, &two),
            Err(BracketError::FactorIndex(4))
        );
        // principal branch: e^{Iπ/4}
        assert!((sqrt_i - Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4)).norm() < 1e-15);
    }

    #[test]
    fn operator_examples() {
        let two = PhysicalConstants::with_hbar(2.0).unwrap();
        let one = PhysicalConstants::with_hbar(1.0).unwrap();
        let i = Complex64::new(0.0, 1.0);
        assert_eq!(spin_operator(1, &two).unwrap(), Element::scaled_basis(i, U::I1));
        assert_eq!(spin_operator(3, &one).unwrap(), Element::scaled_basis(i * 0.5, U::I3));
        assert_eq!(spin_operator(0, &one), Err(BracketError::OperatorIndex(0)));
        assert_eq!(l_operator(2, &two).unwrap(), Element::scaled_basis(i, U::E2));
        assert_eq!(l_operator(1, &one).unwrap(), Element::scaled_basis(i * 0.5, U::E1));
        assert_eq!(l_operator(4, &one), Err(BracketError::OperatorIndex(4)));
    }

    #[test]
    fn constants_validation() {
        assert!(PhysicalConstants::with_hbar(0.0).is_err());
        assert!(PhysicalConstants::with_hbar(-1.0).is_err());
        assert!(PhysicalConstants::with_hbar(f64::NAN).is_err());
    }

    #[test]
    fn levi_civita_values() {
        assert_eq!(levi_civita(1, 2, 3), 1);
        assert_eq!(levi_civita(2, 1, 3), -1);
        assert_eq!(levi_civita(1, 1, 3), 0);
    }
}
