//! Linear codes over the Kleinian four-group `K = Z2 x Z2`.

pub mod canon;
pub mod classify;
pub mod code;
pub mod construct;
pub mod design;
pub mod enumerator;
pub mod error;
pub mod extremal;
pub mod group;
pub mod io;
pub mod lex;
pub mod orbits;
pub mod poly;
pub mod standard;
pub mod symbol;
pub mod word;

pub use code::KCode;
pub use enumerator::{RationalWE, WeightEnum, WeightEnumerator};
pub use group::GroupElement;
pub use error::{Error, Result};
pub use symbol::{dot, KSymbol};
pub use word::KWord;
