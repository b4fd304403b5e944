//! Basis units of the 16-dimensional sedenion algebra and their signed
//! multiplication table.
//!
//! Units are indexed in table order: `1, i1..i7, i0, e1..e7`, so the index
//! of a unit is also its row/column in the multiplication table. `eN` is the
//! ASCII spelling of the split unit εₙ (εₙ² = +1).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One of the 16 basis symbols `1`, `i0..i7`, `e1..e7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisUnit(u8);

/// Decoded form of a [`BasisUnit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitKind {
    One,
    /// `iₙ`, n = 0..=7, squares to −1.
    Im(u8),
    /// `εₙ`, n = 1..=7, squares to +1.
    Eps(u8),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown basis unit token `{0}`")]
pub struct UnknownUnit(pub String);

impl BasisUnit {
    pub const COUNT: usize = 16;

    pub const ONE: Self = Self(0);
    pub const I1: Self = Self(1);
    pub const I2: Self = Self(2);
    pub const I3: Self = Self(3);
    pub const I4: Self = Self(4);
    pub const I5: Self = Self(5);
    pub const I6: Self = Self(6);
    pub const I7: Self = Self(7);
    pub const I0: Self = Self(8);
    pub const E1: Self = Self(9);
    pub const E2: Self = Self(10);
    pub const E3: Self = Self(11);
    pub const E4: Self = Self(12);
    pub const E5: Self = Self(13);
    pub const E6: Self = Self(14);
    pub const E7: Self = Self(15);

    /// All units in canonical (table) order.
    pub const ALL: [Self; 16] = [
        Self::ONE,
        Self::I1,
        Self::I2,
        Self::I3,
        Self::I4,
        Self::I5,
        Self::I6,
        Self::I7,
        Self::I0,
        Self::E1,
        Self::E2,
        Self::E3,
        Self::E4,
        Self::E5,
        Self::E6,
        Self::E7,
    ];

    pub const fn from_index(index: usize) -> Option<Self> {
        if index < 16 {
            Some(Self(index as u8))
        } else {
            None
        }
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// `iₙ` for n in 0..=7.
    pub const fn im(n: u8) -> Option<Self> {
        match n {
            0 => Some(Self::I0),
            1..=7 => Some(Self(n)),
            _ => None,
        }
    }

    /// `εₙ` for n in 1..=7.
    pub const fn eps(n: u8) -> Option<Self> {
        match n {
            1..=7 => Some(Self(8 + n)),
            _ => None,
        }
    }

    pub const fn kind(self) -> UnitKind {
        match self.0 {
            0 => UnitKind::One,
            1..=7 => UnitKind::Im(self.0),
            8 => UnitKind::Im(0),
            n => UnitKind::Eps(n - 8),
        }
    }

    /// Surface token: `1`, `i0`..`i7`, `e1`..`e7`.
    pub fn token(self) -> &'static str {
        const TOKENS: [&str; 16] = [
            "1", "i1", "i2", "i3", "i4", "i5", "i6", "i7", "i0", "e1", "e2", "e3", "e4", "e5",
            "e6", "e7",
        ];
        TOKENS[self.index()]
    }

    /// Sign of the square of this unit: +1 for `1` and `εₙ`, −1 for `iₙ`.
    pub fn square_sign(self) -> i8 {
        match self.kind() {
            UnitKind::Im(_) => -1,
            _ => 1,
        }
    }
}

impl fmt::Display for BasisUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for BasisUnit {
    type Err = UnknownUnit;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BasisUnit::ALL
            .into_iter()
            .find(|u| u.token() == s)
            .ok_or_else(|| UnknownUnit(s.to_string()))
    }
}

/// A basis unit carrying a sign; the value of every basis product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedUnit {
    negative: bool,
    unit: BasisUnit,
}

impl SignedUnit {
    pub const fn pos(unit: BasisUnit) -> Self {
        Self {
            negative: false,
            unit,
        }
    }

    pub const fn neg(unit: BasisUnit) -> Self {
        Self {
            negative: true,
            unit,
        }
    }

    /// Always +1 or −1.
    pub const fn sign(self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub const fn unit(self) -> BasisUnit {
        self.unit
    }

    pub const fn is_negative(self) -> bool {
        self.negative
    }
}

impl std::ops::Neg for SignedUnit {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            negative: !self.negative,
            unit: self.unit,
        }
    }
}

/// Formats as `+i3`, `-e7`, `+1`, `-1`.
impl fmt::Display for SignedUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { '-' } else { '+' };
        write!(f, "{sign}{}", self.unit)
    }
}

impl FromStr for SignedUnit {
    type Err = UnknownUnit;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (negative, rest) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let unit = rest.parse().map_err(|_| UnknownUnit(s.to_string()))?;
        Ok(Self { negative, unit })
    }
}

macro_rules! cell {
    (+ $u:ident) => {
        SignedUnit::pos(BasisUnit::$u)
    };
    (- $u:ident) => {
        SignedUnit::neg(BasisUnit::$u)
    };
}

macro_rules! row {
    ($($s:tt $u:ident)*) => {
        [$(cell!($s $u)),*]
    };
}

/// Row `a`, column `b` holds the product `a·b`. Rows and columns in table order.
#[rustfmt::skip]
pub const TABLE: [[SignedUnit; 16]; 16] = [
    row!(+ONE +I1  +I2  +I3  +I4  +I5  +I6  +I7  +I0  +E1  +E2  +E3  +E4  +E5  +E6  +E7),
    row!(+I1  -ONE +I3  -I2  +I5  -I4  -I7  +I6  -E1  +I0  +E3  -E2  +E5  -E4  -E7  +E6),
    row!(+I2  -I3  -ONE +I1  +I6  +I7  -I4  -I5  -E2  -E3  +I0  +E1  +E6  +E7  -E4  -E5),
    row!(+I3  +I2  -I1  -ONE +I7  -I6  +I5  -I4  -E3  +E2  -E1  +I0  +E7  -E6  +E5  -E4),
    row!(+I4  -I5  -I6  -I7  -ONE +I1  +I2  +I3  -E4  -E5  -E6  -E7  +I0  +E1  +E2  +E3),
    row!(+I5  +I4  -I7  +I6  -I1  -ONE -I3  +I2  -E5  +E4  -E7  +E6  -E1  +I0  -E3  +E2),
    row!(+I6  +I7  +I4  -I5  -I2  +I3  -ONE -I1  -E6  +E7  +E4  -E5  -E2  +E3  +I0  -E1),
    row!(+I7  -I6  +I5  +I4  -I3  -I2  +I1  -ONE -E7  -E6  +E5  +E4  -E3  -E2  +E1  +I0),
    row!(+I0  -E1  -E2  -E3  -E4  -E5  -E6  -E7  -ONE +I1  +I2  +I3  +I4  +I5  +I6  +I7),
    row!(+E1  +I0  +E3  -E2  +E5  -E4  -E7  +E6  +I1  +ONE -I3  +I2  -I5  +I4  +I7  -I6),
    row!(+E2  -E3  +I0  +E1  +E6  +E7  -E4  -E5  +I2  +I3  +ONE -I1  -I6  -I7  +I4  +I5),
    row!(+E3  +E2  -E1  +I0  +E7  -E6  +E5  -E4  +I3  -I2  +I1  +ONE -I7  +I6  -I5  +I4),
    row!(+E4  -E5  -E6  -E7  +I0  +E1  +E2  +E3  +I4  +I5  +I6  +I7  +ONE -I1  -I2  -I3),
    row!(+E5  +E4  -E7  +E6  -E1  +I0  -E3  +E2  +I5  -I4  +I7  -I6  +I1  +ONE +I3  -I2),
    row!(+E6  +E7  +E4  -E5  -E2  +E3  +I0  -E1  +I6  -I7  -I4  +I5  +I2  -I3  +ONE +I1),
    row!(+E7  -E6  +E5  +E4  -E3  -E2  +E1  +I0  +I7  +I6  -I5  -I4  +I3  +I2  -I1  +ONE),
];

/// Product of two basis units.
#[inline]
pub fn basis_product(a: BasisUnit, b: BasisUnit) -> SignedUnit {
    TABLE[a.index()][b.index()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_is_bijective() {
        for (i, u) in BasisUnit::ALL.iter().enumerate() {
            assert_eq!(u.index(), i);
            assert_eq!(BasisUnit::from_index(i), Some(*u));
            assert_eq!(u.token().parse::<BasisUnit>().unwrap(), *u);
        }
        assert_eq!(BasisUnit::from_index(16), None);
    }

    #[test]
    fn constructors() {
        assert_eq!(BasisUnit::im(0), Some(BasisUnit::I0));
        assert_eq!(BasisUnit::im(7), Some(BasisUnit::I7));
        assert_eq!(BasisUnit::im(8), None);
        assert_eq!(BasisUnit::eps(0), None);
        assert_eq!(BasisUnit::eps(3), Some(BasisUnit::E3));
        assert_eq!(BasisUnit::I0.kind(), UnitKind::Im(0));
        assert_eq!(BasisUnit::E7.kind(), UnitKind::Eps(7));
    }

    #[test]
    fn documented_products() {
        assert_eq!(basis_product(BasisUnit::I1, BasisUnit::I2), SignedUnit::pos(BasisUnit::I3));
        assert_eq!(basis_product(BasisUnit::ONE, BasisUnit::E5), SignedUnit::pos(BasisUnit::E5));
        assert_eq!(basis_product(BasisUnit::I4, BasisUnit::E7), SignedUnit::pos(BasisUnit::E3));
        assert_eq!(basis_product(BasisUnit::I0, BasisUnit::I1), SignedUnit::neg(BasisUnit::E1));
    }

    #[test]
    fn unit_squares_and_identity() {
        for u in BasisUnit::ALL {
            let sq = basis_product(u, u);
            assert_eq!(sq.unit(), BasisUnit::ONE);
            assert_eq!(sq.sign(), u.square_sign(), "{u}");
            assert_eq!(basis_product(BasisUnit::ONE, u), SignedUnit::pos(u));
            assert_eq!(basis_product(u, BasisUnit::ONE), SignedUnit::pos(u));
        }
    }

    #[test]
    fn every_row_is_a_signed_permutation() {
        for a in BasisUnit::ALL {
            let mut seen = [false; 16];
            for b in BasisUnit::ALL {
                seen[basis_product(a, b).unit().index()] = true;
            }
            assert!(seen.iter().all(|&s| s), "row {a}");
        }
    }

    #[test]
    fn signed_unit_tokens() {
        assert_eq!(SignedUnit::neg(BasisUnit::E7).to_string(), "-e7");
        assert_eq!(SignedUnit::pos(BasisUnit::ONE).to_string(), "+1");
        assert_eq!("-i3".parse::<SignedUnit>().unwrap(), SignedUnit::neg(BasisUnit::I3));
        assert!("+x3".parse::<SignedUnit>().is_err());
    }
}
