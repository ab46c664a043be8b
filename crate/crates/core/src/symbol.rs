//! The alphabet `K = {0, a, b, c}` of the Kleinian four-group.
//!
//! Each symbol is a bit pair `(p, q)`: `0 = (0,0)`, `a = (1,0)`, `b = (0,1)`,
//! `c = (1,1)`. Addition is XOR of the pairs and the scalar product is the
//! symplectic form `p_x q_y + q_x p_y`, which is `1` exactly when both
//! symbols are nonzero and distinct.

use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum KSymbol {
    #[default]
    Zero,
    A,
    B,
    C,
}

impl KSymbol {
    pub const ALL: [KSymbol; 4] = [KSymbol::Zero, KSymbol::A, KSymbol::B, KSymbol::C];
    pub const NONZERO: [KSymbol; 3] = [KSymbol::A, KSymbol::B, KSymbol::C];

    /// Builds a symbol from its `(p, q)` bit pair.
    pub fn from_bits(p: bool, q: bool) -> Self {
        match (p, q) {
            (false, false) => KSymbol::Zero,
            (true, false) => KSymbol::A,
            (false, true) => KSymbol::B,
            (true, true) => KSymbol::C,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            KSymbol::Zero => (false, false),
            KSymbol::A => (true, false),
            KSymbol::B => (false, true),
            KSymbol::C => (true, true),
        }
    }

    /// Index `p + 2q`, so `0, a, b, c` map to `0, 1, 2, 3`.
    pub fn index(self) -> u8 {
        let (p, q) = self.bits();
        p as u8 | (q as u8) << 1
    }

    pub fn from_index(i: u8) -> Self {
        Self::from_bits(i & 1 != 0, i & 2 != 0)
    }

    pub fn is_zero(self) -> bool {
        self == KSymbol::Zero
    }

    pub fn to_char(self) -> char {
        match self {
            KSymbol::Zero => '0',
            KSymbol::A => 'a',
            KSymbol::B => 'b',
            KSymbol::C => 'c',
        }
    }

    pub fn from_char(ch: char) -> Result<Self> {
        match ch {
            '0' => Ok(KSymbol::Zero),
            'a' => Ok(KSymbol::A),
            'b' => Ok(KSymbol::B),
            'c' => Ok(KSymbol::C),
            _ => Err(Error::Parse {
                line: 0,
                column: 0,
                message: format!("invalid symbol `{ch}`"),
            }),
        }
    }
}

impl Add for KSymbol {
    type Output = KSymbol;

    fn add(self, rhs: KSymbol) -> KSymbol {
        KSymbol::from_index(self.index() ^ rhs.index())
    }
}

impl fmt::Display for KSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// The symmetric bilinear dot product on `K`.
pub fn dot(x: KSymbol, y: KSymbol) -> bool {
    let (px, qx) = x.bits();
    let (py, qy) = y.bits();
    (px & qy) ^ (qx & py)
}
