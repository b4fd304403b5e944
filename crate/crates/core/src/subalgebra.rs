use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::basis::{basis_product, BasisUnit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SubalgebraId {
    /// span{1, i1, i2, i3}
    Quaternion,
    /// span{1, i0, i1, i2, i3, e1, e2, e3}
    Biquaternion,
    /// span{1, i1..i7}; i0 is left out because i0·i1 = −e1.
    Octonion,
    /// span{1, i3, e3, i0}
    CommutativeA,
    Full,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubalgebraError {
    #[error("unit set must contain the identity 1")]
    MissingIdentity,
    #[error("unknown subalgebra `{0}`")]
    Unknown(String),
}

use BasisUnit as U;

const QUATERNION: [BasisUnit; 4] = [U::ONE, U::I1, U::I2, U::I3];
const BIQUATERNION: [BasisUnit; 8] = [U::ONE, U::I1, U::I2, U::I3, U::I0, U::E1, U::E2, U::E3];
const OCTONION: [BasisUnit; 8] = [U::ONE, U::I1, U::I2, U::I3, U::I4, U::I5, U::I6, U::I7];
const COMMUTATIVE_A: [BasisUnit; 4] = [U::ONE, U::I3, U::I0, U::E3];

impl SubalgebraId {
    pub const ALL: [Self; 5] = [
        Self::Quaternion,
        Self::Biquaternion,
        Self::Octonion,
        Self::CommutativeA,
        Self::Full,
    ];

    /// Spanning units in canonical order.
    pub fn units(self) -> &'static [BasisUnit] {
        match self {
            Self::Quaternion => &QUATERNION,
            Self::Biquaternion => &BIQUATERNION,
            Self::Octonion => &OCTONION,
            Self::CommutativeA => &COMMUTATIVE_A,
            Self::Full => &BasisUnit::ALL,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Quaternion => "QUATERNION",
            Self::Biquaternion => "BIQUATERNION",
            Self::Octonion => "OCTONION",
            Self::CommutativeA => "COMMUTATIVE_A",
            Self::Full => "FULL",
        }
    }
}

impl fmt::Display for SubalgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SubalgebraId {
    type Err = SubalgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|id| id.name() == norm)
            .ok_or_else(|| SubalgebraError::Unknown(s.to_string()))
    }
}

pub fn subalgebra_units(id: SubalgebraId) -> &'static [BasisUnit] {
    id.units()
}

/// Whether every pairwise product of `units` stays inside the set.
pub fn closure_check(units: &[BasisUnit]) -> Result<bool, SubalgebraError> {
    if !units.contains(&BasisUnit::ONE) {
        return Err(SubalgebraError::MissingIdentity);
    }
    Ok(units
        .iter()
        .all(|&a| units.iter().all(|&b| units.contains(&basis_product(a, b).unit()))))
}
