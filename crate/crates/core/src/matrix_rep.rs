//! 3×3 complex matrix representation of the commutative subalgebra
//! A = span{1, i3, e3, i0}. All entries lie in {0, ±1, ±I}, so everything
//! here is computed over Gaussian integers.

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

use crate::basis::{basis_product, BasisUnit};
use crate::element::Gaussian;
use crate::subalgebra::SubalgebraId;
use crate::verification::{Tally, VerificationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{0} is not in the commutative subalgebra span{{1, i3, e3, i0}}")]
pub struct NotInCommutativeSubalgebra(pub BasisUnit);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub entries: [[Gaussian; 3]; 3],
}

/// One of the standard basis vectors ξ₁, ξ₂, ξ₃ (the "generation" index is
/// `index + 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenerationVector {
    pub components: [Gaussian; 3],
}

const fn g(re: i64, im: i64) -> Gaussian {
    Gaussian::new(re, im)
}

impl RepMatrix {
    pub fn diagonal(d: [Gaussian; 3]) -> Self {
        let z = g(0, 0);
        let mut entries = [[z; 3]; 3];
        for (i, v) in d.into_iter().enumerate() {
            entries[i][i] = v;
        }
        Self { entries }
    }

    pub fn identity() -> Self {
        Self::diagonal([g(1, 0); 3])
    }

    pub fn scale(&self, c: Gaussian) -> Self {
        Self {
            entries: self.entries.map(|row| row.map(|x| x * c)),
        }
    }

    pub fn apply(&self, v: &GenerationVector) -> GenerationVector {
        let mut out = [g(0, 0); 3];
        for (i, row) in self.entries.iter().enumerate() {
            out[i] = row.iter().zip(v.components).map(|(a, b)| a * b).sum();
        }
        GenerationVector { components: out }
    }
}

impl Mul for RepMatrix {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut entries = [[g(0, 0); 3]; 3];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.entries[i][k] * rhs.entries[k][j]).sum();
            }
        }
        Self { entries }
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|c| format!("{c}")).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl GenerationVector {
    /// ξ_k for k = 1..=3.
    pub fn xi(k: usize) -> Self {
        assert!((1..=3).contains(&k), "generation index {k} out of range 1..=3");
        let mut components = [g(0, 0); 3];
        components[k - 1] = g(1, 0);
        Self { components }
    }

    pub fn scale(&self, c: Gaussian) -> Self {
        Self {
            components: self.components.map(|x| x * c),
        }
    }
}

pub fn rep(unit: BasisUnit) -> Result<RepMatrix, NotInCommutativeSubalgebra> {
    let i = g(0, 1);
    match unit {
        BasisUnit::ONE => Ok(RepMatrix::identity()),
        BasisUnit::I3 => Ok(RepMatrix::diagonal([g(-1, 0), g(1, 0), g(1, 0)]).scale(i)),
        BasisUnit::E3 => Ok(RepMatrix::diagonal([g(1, 0), g(-1, 0), g(1, 0)])),
        BasisUnit::I0 => Ok(RepMatrix::diagonal([g(-1, 0), g(-1, 0), g(1, 0)]).scale(i)),
        other => Err(NotInCommutativeSubalgebra(other)),
    }
}

/// `rep(a)·rep(b) = sign·rep(unit)` for all 16 ordered pairs, where
/// `a·b = sign·unit` in the multiplication table.
pub fn homomorphism_check() -> VerificationReport {
    let mut t = Tally::default();
    let units = SubalgebraId::CommutativeA.units();
    for &a in units {
        for &b in units {
            let p = basis_product(a, b);
            let lhs = rep(a).expect("unit in A") * rep(b).expect("unit in A");
            let rhs = match rep(p.unit()) {
                Ok(m) => m.scale(g(p.sign() as i64, 0)),
                Err(e) => {
                    t.record(false, || format!("rep({a})*rep({b})"), e, lhs);
                    continue;
                }
            };
            t.record(lhs == rhs, || format!("rep({a})*rep({b})"), rhs, lhs);
        }
    }
    t.finish("MATRIX_HOMOMORPHISM")
}

/// Eigenpairs (ξ_k, λ_k), k = 1..=3, with `rep(unit)·ξ_k = λ_k·ξ_k`.
pub fn eigen_decomposition(
    unit: BasisUnit,
) -> Result<Vec<(GenerationVector, Gaussian)>, NotInCommutativeSubalgebra> {
    let m = rep(unit)?;
    Ok((1..=3)
        .map(|k| {
            let xi = GenerationVector::xi(k);
            let image = m.apply(&xi);
            let lambda = image.components[k - 1];
            debug_assert_eq!(image, xi.scale(lambda));
            (xi, lambda)
        })
        .collect())
}
