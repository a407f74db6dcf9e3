//! Extended natural numbers: the naturals plus a single point at infinity.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

/// Unbounded natural number used for costs, depths and distances.
pub type Nat = BigUint;

/// A natural number or infinity.
///
/// The derived order puts every `Finite` value below `Infinity` and compares
/// finite values numerically, which is exactly `<=_e` on `N ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Finite(Nat),
    Infinity,
}

impl ExtNat {
    pub fn zero() -> Self {
        ExtNat::Finite(Nat::zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtNat::Infinity)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    /// The finite value, if any.
    pub fn value(&self) -> Option<&Nat> {
        match self {
            ExtNat::Finite(v) => Some(v),
            ExtNat::Infinity => None,
        }
    }

    /// `self +_e k`: infinity absorbs, finite values add exactly.
    pub fn plus(&self, k: &Nat) -> ExtNat {
        match self {
            ExtNat::Finite(v) => ExtNat::Finite(v + k),
            ExtNat::Infinity => ExtNat::Infinity,
        }
    }

    pub fn succ(&self) -> ExtNat {
        match self {
            ExtNat::Finite(v) => ExtNat::Finite(v + 1u32),
            ExtNat::Infinity => ExtNat::Infinity,
        }
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Finite(Nat::from(v))
    }
}

impl From<Nat> for ExtNat {
    fn from(v: Nat) -> Self {
        ExtNat::Finite(v)
    }
}

impl From<Option<u64>> for ExtNat {
    fn from(v: Option<u64>) -> Self {
        v.map_or(ExtNat::Infinity, ExtNat::from)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Infinity => f.write_str("INF"),
        }
    }
}
