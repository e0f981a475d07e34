use std::fmt;

use num_bigint::BigInt;

/// A greatest dividing exponent: a valuation that is infinite for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GdeValue {
    Finite(u64),
    Infinite,
}

impl GdeValue {
    pub fn finite(self) -> Option<u64> {
        match self {
            GdeValue::Finite(e) => Some(e),
            GdeValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, GdeValue::Infinite)
    }
}

impl PartialOrd for GdeValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GdeValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (GdeValue::Finite(a), GdeValue::Finite(b)) => a.cmp(b),
            (GdeValue::Finite(_), GdeValue::Infinite) => Less,
            (GdeValue::Infinite, GdeValue::Finite(_)) => Greater,
            (GdeValue::Infinite, GdeValue::Infinite) => Equal,
        }
    }
}

impl fmt::Display for GdeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GdeValue::Finite(e) => write!(f, "{e}"),
            GdeValue::Infinite => f.write_str("inf"),
        }
    }
}

/// 2-adic valuation of an integer.
pub fn gde_base2(n: &BigInt) -> GdeValue {
    match n.trailing_zeros() {
        Some(t) => GdeValue::Finite(t),
        None => GdeValue::Infinite,
    }
}
