//! Extended group orders and the arithmetic that combines factor sets.
//!
//! Every factor in the product formula is the cardinality of a pointed
//! mapping set, so it is a positive integer, infinite, or simply not
//! determined by any rule or table entry. `ExtOrder` models exactly those
//! three cases and multiplication folds them together.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::ser::{Serialize, SerializeMap, Serializer};

/// Order of a group or pointed mapping set.
///
/// `Finite(1)` is the trivial group. `Finite(0)` never occurs: every mapping
/// set contains the constant class, so every factor set is nonempty. That
/// nonemptiness is also why `Infinite` absorbs `Unknown` under
/// multiplication — an unknown factor cannot shrink an infinite product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtOrder {
    Finite(BigUint),
    Infinite,
    Unknown,
}

impl ExtOrder {
    /// Order 1, the multiplicative identity.
    pub fn one() -> Self {
        ExtOrder::Finite(BigUint::one())
    }

    /// Finite order from a machine integer. Panics on 0.
    pub fn finite(n: u64) -> Self {
        assert!(n >= 1, "mapping sets are nonempty, order 0 cannot occur");
        ExtOrder::Finite(BigUint::from(n))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, ExtOrder::Finite(n) if n.is_one())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtOrder::Finite(_))
    }

    /// Multiply two extended orders.
    ///
    /// Finite values multiply exactly; `Infinite` absorbs everything
    /// (including `Unknown`); `Unknown` absorbs the remaining finite cases.
    pub fn mul(&self, other: &ExtOrder) -> ExtOrder {
        use ExtOrder::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (Unknown, _) | (_, Unknown) => Unknown,
            (Finite(a), Finite(b)) => Finite(a * b),
        }
    }
}

/// Product of a sequence of orders. The empty product is `Finite(1)`.
pub fn product<'a, I>(orders: I) -> ExtOrder
where
    I: IntoIterator<Item = &'a ExtOrder>,
{
    orders
        .into_iter()
        .fold(ExtOrder::one(), |acc, x| ExtOrder::mul(&acc, x))
}

impl fmt::Display for ExtOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtOrder::Finite(n) => write!(f, "{n}"),
            ExtOrder::Infinite => write!(f, "infinite"),
            ExtOrder::Unknown => write!(f, "unknown"),
        }
    }
}

impl Serialize for ExtOrder {
    /// JSON form: `{"finite": N}` with N an exact integer, or the strings
    /// `"infinite"` / `"unknown"`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtOrder::Finite(n) => {
                let num = serde_json::Number::from_str(&n.to_string())
                    .map_err(serde::ser::Error::custom)?;
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("finite", &num)?;
                map.end()
            }
            ExtOrder::Infinite => serializer.serialize_str("infinite"),
            ExtOrder::Unknown => serializer.serialize_str("unknown"),
        }
    }
}
