//! Reference two-level system: spinors, Pauli matrices, observables.

use std::fmt;
use std::ops::{Mul, Sub};

use num_complex::Complex64;

use crate::brackets::levi_civita;
use crate::verification::{Tally, VerificationReport};

/// `ψ = c₊ψ₊ + c₋ψ₋`
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QubitSpinor {
    pub c_plus: Complex64,
    pub c_minus: Complex64,
}

impl QubitSpinor {
    pub fn new(c_plus: Complex64, c_minus: Complex64) -> Self {
        Self { c_plus, c_minus }
    }

    pub fn up() -> Self {
        Self::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
    }

    pub fn down() -> Self {
        Self::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
    }
}

/// `(‖ψ‖², ⟨ψ, φ⟩)` with `⟨ψ, φ⟩ = c₊* d₊ + c₋* d₋`.
pub fn spinor_norm_and_inner(psi: &QubitSpinor, phi: &QubitSpinor) -> (f64, Complex64) {
    let norm_sq = psi.c_plus.norm_sqr() + psi.c_minus.norm_sqr();
    let inner = psi.c_plus.conj() * phi.c_plus + psi.c_minus.conj() * phi.c_minus;
    (norm_sq, inner)
}

/// 2×2 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

const fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

impl Mat2 {
    pub const ZERO: Self = Mat2([[c(0.0, 0.0); 2]; 2]);
    pub const IDENTITY: Self = Mat2([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);

    pub fn scale(&self, k: Complex64) -> Self {
        Mat2(self.0.map(|row| row.map(|x| x * k)))
    }

    pub fn is_hermitian(&self) -> bool {
        (0..2).all(|i| (0..2).all(|j| self.0[i][j] == self.0[j][i].conj()))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }
}

impl Mul for Mat2 {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let a = self.0;
        let b = rhs.0;
        Mat2(std::array::from_fn(|i| {
            std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j])
        }))
    }
}

impl Sub for Mat2 {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Mat2(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j] - rhs.0[i][j])))
    }
}

impl std::ops::Add for Mat2 {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Mat2(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j] + rhs.0[i][j])))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [cc, d]] = self.0;
        write!(f, "[[{a}, {b}], [{cc}, {d}]]")
    }
}

/// Pauli matrix σ_k, k = 1..=3.
pub fn sigma(k: usize) -> Mat2 {
    let (o, z, i) = (c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0));
    match k {
        1 => Mat2([[z, o], [o, z]]),
        2 => Mat2([[z, -i], [i, z]]),
        3 => Mat2([[o, z], [z, -o]]),
        _ => panic!("Pauli index {k} out of range 1..=3"),
    }
}

/// `½(a₀·1 + Σ a_k σ_k)`
pub fn pauli_observable(a0: f64, a1: f64, a2: f64, a3: f64) -> Mat2 {
    Mat2([
        [c((a0 + a3) / 2.0, 0.0), c(a1 / 2.0, -a2 / 2.0)],
        [c(a1 / 2.0, a2 / 2.0), c((a0 - a3) / 2.0, 0.0)],
    ])
}

/// `[σ_i, σ_j] = 2I ε_{ijk} σ_k` and `[Ŝ_i, Ŝ_j] = I ε_{ijk} Ŝ_k` with
/// `Ŝ = σ/2` (ħ = 1), for all nine ordered pairs. All entries are dyadic
/// rationals, so equality is exact.
pub fn pauli_relations_check() -> VerificationReport {
    let mut t = Tally::default();
    let spin = |k: usize| sigma(k).scale(c(0.5, 0.0));
    let levi_sum = |i: usize, j: usize, f: &dyn Fn(usize) -> Mat2, coeff: Complex64| {
        (1..=3).fold(Mat2::ZERO, |acc, k| {
            acc + f(k).scale(coeff * levi_civita(i, j, k) as f64)
        })
    };
    for i in 1..=3 {
        for j in 1..=3 {
            let sig = sigma(i).commutator(&sigma(j));
            let sig_want = levi_sum(i, j, &sigma, c(0.0, 2.0));
            let s = spin(i).commutator(&spin(j));
            let s_want = levi_sum(i, j, &spin, c(0.0, 1.0));
            t.record(
                sig == sig_want && s == s_want,
                || format!("[sigma{i},sigma{j}]"),
                format!("{sig_want} ; {s_want}"),
                format!("{sig} ; {s}"),
            );
        }
    }
    t.finish("PAULI_RELATIONS")
}
