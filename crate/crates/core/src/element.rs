//! Complex linear combinations of basis units.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::{Complex, Complex64};
use num_traits::{Num, One};

use crate::basis::{basis_product, BasisUnit};

/// Gaussian integer; the exact coefficient ring used by the identity suites.
pub type Gaussian = Complex<i64>;

/// Absolute tolerance for comparing floating-point elements.
pub const FLOAT_TOLERANCE: f64 = 1e-12;

/// Coefficient type of an [`Element`].
pub trait Scalar: Copy + PartialEq + fmt::Debug + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Copy + PartialEq + fmt::Debug + Num + Neg<Output = T> {}

/// An element of the sedenion algebra: 16 coefficients indexed by
/// [`BasisUnit::index`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Element<T = Complex64> {
    coeffs: [T; 16],
}

pub type ExactElement = Element<Gaussian>;

impl<T: Scalar> Element<T> {
    pub fn zero() -> Self {
        Self {
            coeffs: [T::zero(); 16],
        }
    }

    pub fn one() -> Self {
        Self::basis(BasisUnit::ONE)
    }

    pub fn from_coeffs(coeffs: [T; 16]) -> Self {
        Self { coeffs }
    }

    pub fn basis(unit: BasisUnit) -> Self {
        Self::scaled_basis(T::one(), unit)
    }

    pub fn scaled_basis(coeff: T, unit: BasisUnit) -> Self {
        let mut e = Self::zero();
        e.coeffs[unit.index()] = coeff;
        e
    }

    /// The scalar `c·1`.
    pub fn scalar(c: T) -> Self {
        Self::scaled_basis(c, BasisUnit::ONE)
    }

    pub fn coeffs(&self) -> &[T; 16] {
        &self.coeffs
    }

    pub fn coeff(&self, unit: BasisUnit) -> T {
        self.coeffs[unit.index()]
    }

    pub fn set_coeff(&mut self, unit: BasisUnit, c: T) {
        self.coeffs[unit.index()] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Units with a nonzero coefficient, in canonical order.
    pub fn support(&self) -> impl Iterator<Item = (BasisUnit, T)> + '_ {
        BasisUnit::ALL
            .into_iter()
            .zip(self.coeffs.iter().copied())
            .filter(|(_, c)| !c.is_zero())
    }

    /// True when every nonzero coefficient sits on a unit in `units`.
    pub fn lies_in(&self, units: &[BasisUnit]) -> bool {
        self.support().all(|(u, _)| units.contains(&u))
    }

    pub fn scale(&self, c: T) -> Self {
        Self {
            coeffs: self.coeffs.map(|x| c * x),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> Element<U> {
        Element {
            coeffs: self.coeffs.map(f),
        }
    }
}

impl Element<Gaussian> {
    pub fn to_float(&self) -> Element<Complex64> {
        self.map(|c| Complex64::new(c.re as f64, c.im as f64))
    }
}

impl Element<Complex64> {
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

/// Bilinear extension of [`basis_product`].
pub fn multiply<T: Scalar>(x: &Element<T>, y: &Element<T>) -> Element<T> {
    let mut out = Element::zero();
    for (a, xa) in x.support() {
        for (b, yb) in y.support() {
            let p = basis_product(a, b);
            let term = xa * yb;
            let slot = &mut out.coeffs[p.unit().index()];
            *slot = if p.is_negative() {
                *slot - term
            } else {
                *slot + term
            };
        }
    }
    out
}

/// Weighted sum `Σ cᵢ·xᵢ`; the empty sum is zero.
pub fn linear_combine<'a, T, I>(terms: I) -> Element<T>
where
    T: Scalar + 'a,
    I: IntoIterator<Item = (T, &'a Element<T>)>,
{
    terms
        .into_iter()
        .fold(Element::zero(), |acc, (c, x)| acc + x.scale(c))
}

impl<T: Scalar> Default for Element<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> From<BasisUnit> for Element<T> {
    fn from(unit: BasisUnit) -> Self {
        Self::basis(unit)
    }
}

impl<T: Scalar> Add for Element<T> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<T: Scalar> AddAssign for Element<T> {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a = *a + b;
        }
    }
}

impl<T: Scalar> Sub for Element<T> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a = *a - b;
        }
        self
    }
}

impl<T: Scalar> Neg for Element<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            coeffs: self.coeffs.map(|c| -c),
        }
    }
}

impl<T: Scalar> Mul for Element<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        multiply(&self, &rhs)
    }
}

impl<T: Scalar> std::iter::Sum for Element<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

/// Coefficient rendering used by the canonical text form.
pub trait CoeffFormat: Scalar {
    /// `Some(r)` when the coefficient is real.
    fn real_part_if_real(&self) -> Option<String>;
    fn is_negative_real(&self) -> bool;
    fn complex_repr(&self) -> String;
}

fn fmt_f64(x: f64) -> String {
    // Display never uses exponent notation, so the text re-lexes as a plain number.
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x}")
}

impl CoeffFormat for Complex64 {
    fn real_part_if_real(&self) -> Option<String> {
        (self.im == 0.0).then(|| fmt_f64(self.re))
    }

    fn is_negative_real(&self) -> bool {
        self.im == 0.0 && self.re < 0.0
    }

    fn complex_repr(&self) -> String {
        let im = if self.im == 0.0 { 0.0 } else { self.im };
        let sign = if im.is_sign_negative() { '-' } else { '+' };
        format!("({}{sign}{}I)", fmt_f64(self.re), fmt_f64(im.abs()))
    }
}

impl CoeffFormat for Gaussian {
    fn real_part_if_real(&self) -> Option<String> {
        (self.im == 0).then(|| self.re.to_string())
    }

    fn is_negative_real(&self) -> bool {
        self.im == 0 && self.re < 0
    }

    fn complex_repr(&self) -> String {
        let sign = if self.im < 0 { '-' } else { '+' };
        format!("({}{sign}{}I)", self.re, self.im.unsigned_abs())
    }
}

/// Canonical form: terms in table order, zero terms omitted, real
/// coefficients inline (`-2*i3`, `i1 - e2`), complex ones as `(a+bI)*u`.
/// The zero element prints as `0`.
impl<T: CoeffFormat> fmt::Display for Element<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (unit, c) in self.support() {
            let negative = c.is_negative_real();
            let mag = if negative { -c } else { c };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;

            let coeff = match mag.real_part_if_real() {
                Some(r) => r,
                None => mag.complex_repr(),
            };
            if unit == BasisUnit::ONE {
                f.write_str(&coeff)?;
            } else if One::is_one(&mag) {
                f.write_str(unit.token())?;
            } else {
                write!(f, "{coeff}*{unit}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use BasisUnit as U;

    fn g(re: i64, im: i64) -> Gaussian {
        Gaussian::new(re, im)
    }

    #[test]
    fn multiply_expands_bilinearly() {
        // (i1 + i2)·i2 = i1·i2 + i2·i2 = i3 − 1
        let x = ExactElement::basis(U::I1) + ExactElement::basis(U::I2);
        let got = multiply(&x, &ExactElement::basis(U::I2));
        let want = ExactElement::basis(U::I3) - ExactElement::one();
        assert_eq!(got, want);
    }

    #[test]
    fn zero_annihilates() {
        let x = ExactElement::basis(U::E4).scale(g(3, -2));
        assert!(multiply(&ExactElement::zero(), &x).is_zero());
        assert!(multiply(&x, &ExactElement::zero()).is_zero());
    }

    #[test]
    fn scalar_imaginary_unit_factors_out() {
        let x = ExactElement::scaled_basis(g(0, 1), U::I1);
        let got = multiply(&x, &ExactElement::basis(U::I1));
        assert_eq!(got, ExactElement::scalar(g(0, -1)));
    }

    #[test]
    fn linear_combine_cases() {
        let i1 = ExactElement::basis(U::I1);
        let e1 = ExactElement::basis(U::E1);
        assert_eq!(linear_combine([(g(2, 0), &i1), (g(-1, 0), &i1)]), i1);
        let mut want = i1;
        want.set_coeff(U::E1, g(0, 1));
        assert_eq!(linear_combine([(g(1, 0), &i1), (g(0, 1), &e1)]), want);
        assert!(linear_combine::<Gaussian, _>(std::iter::empty()).is_zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(ExactElement::scaled_basis(g(-2, 0), U::I3).to_string(), "-2*i3");
        assert_eq!(ExactElement::zero().to_string(), "0");
        let mut x = ExactElement::basis(U::I1);
        x.set_coeff(U::E1, g(0, 1));
        assert_eq!(x.to_string(), "i1 + (0+1I)*e1");
        assert_eq!(ExactElement::scaled_basis(g(-1, 0), U::E1).to_string(), "-e1");
        let y = ExactElement::basis(U::I3) - ExactElement::one();
        assert_eq!(y.to_string(), "-1 + i3");
        let z = ExactElement::scaled_basis(g(2, -3), U::E2);
        assert_eq!(z.to_string(), "(2-3I)*e2");
        let w = Element::<Complex64>::scaled_basis(Complex64::new(0.5, 0.0), U::I7);
        assert_eq!(w.to_string(), "0.5*i7");
    }

    #[test]
    fn float_comparison() {
        let a = Element::<Complex64>::basis(U::I1);
        let b = a + Element::scalar(Complex64::new(1e-13, 0.0));
        assert!(a.approx_eq(&b, FLOAT_TOLERANCE));
        assert!(!a.approx_eq(&b, 0.0));
    }
}
