//! Vertex labels: unbounded natural numbers.
//!
//! Most labels fit in a machine word, but the arithmetic construction
//! produces witnesses such as `2^2311 + ...`, so a label falls back to a
//! shared big integer when it does not fit. The representation is canonical
//! (a value that fits in `u64` is always `Small`), which keeps the derived
//! comparisons numeric.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(u64),
    Big(Arc<BigUint>),
}

/// A vertex label, a positive natural number of arbitrary size.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vertex(Repr);

impl Vertex {
    /// Builds a label from a big integer. Zero is rejected: labels are 1-based.
    pub fn from_biguint(n: BigUint) -> Result<Self, Error> {
        if n.is_zero() {
            return Err(Error::InvalidInput("vertex labels start at 1".into()));
        }
        Ok(Self::from_nonzero_big(n))
    }

    fn from_nonzero_big(n: BigUint) -> Self {
        match n.to_u64() {
            Some(s) => Vertex(Repr::Small(s)),
            None => Vertex(Repr::Big(Arc::new(n))),
        }
    }

    /// The label as a `u64`, if it fits.
    pub fn as_u64(&self) -> Option<u64> {
        match &self.0 {
            Repr::Small(s) => Some(*s),
            Repr::Big(_) => None,
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        match &self.0 {
            Repr::Small(s) => BigUint::from(*s),
            Repr::Big(b) => (**b).clone(),
        }
    }

    /// Number of significant binary digits.
    pub fn bits(&self) -> u64 {
        match &self.0 {
            Repr::Small(s) => 64 - u64::from(s.leading_zeros()),
            Repr::Big(b) => b.bits(),
        }
    }

    /// Coefficient of `2^index` in the binary expansion.
    pub fn bit(&self, index: u64) -> bool {
        match &self.0 {
            Repr::Small(s) => index < 64 && (s >> index) & 1 == 1,
            Repr::Big(b) => b.bit(index),
        }
    }

    /// `self + 1` as a big integer; used for prime lower bounds.
    pub(crate) fn succ_big(&self) -> BigUint {
        self.to_biguint() + BigUint::one()
    }
}

impl From<u64> for Vertex {
    /// # Panics
    /// Panics on zero.
    fn from(v: u64) -> Self {
        assert!(v > 0, "vertex labels start at 1");
        Vertex(Repr::Small(v))
    }
}

impl From<u32> for Vertex {
    fn from(v: u32) -> Self {
        Vertex::from(u64::from(v))
    }
}

impl From<i32> for Vertex {
    fn from(v: i32) -> Self {
        assert!(v > 0, "vertex labels start at 1");
        Vertex(Repr::Small(v as u64))
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            (Repr::Small(_), Repr::Big(_)) => Ordering::Less,
            (Repr::Big(_), Repr::Small(_)) => Ordering::Greater,
            (Repr::Big(a), Repr::Big(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(s) => write!(f, "{s}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidInput(format!("not a decimal vertex label: {s:?}")));
        }
        let n = BigUint::parse_bytes(t.as_bytes(), 10)
            .ok_or_else(|| Error::InvalidInput(format!("not a decimal vertex label: {s:?}")))?;
        Vertex::from_biguint(n)
    }
}

impl TryFrom<BigUint> for Vertex {
    type Error = Error;

    fn try_from(n: BigUint) -> Result<Self, Error> {
        Vertex::from_biguint(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_and_big_order_numerically() {
        let big: Vertex = "18446744073709551616".parse().unwrap(); // 2^64
        let max = Vertex::from(u64::MAX);
        assert!(max < big);
        assert_eq!(big.bits(), 65);
        assert!(big.bit(64));
        assert!(!big.bit(0));
    }

    #[test]
    fn canonical_form_from_biguint() {
        let v = Vertex::from_biguint(BigUint::from(12u32)).unwrap();
        assert_eq!(v, Vertex::from(12u64));
        assert_eq!(v.as_u64(), Some(12));
    }

    #[test]
    fn parse_rejects_zero_and_junk() {
        assert!("0".parse::<Vertex>().is_err());
        assert!("-3".parse::<Vertex>().is_err());
        assert!("".parse::<Vertex>().is_err());
        assert_eq!("007".parse::<Vertex>().unwrap(), Vertex::from(7u64));
    }

    #[test]
    fn bits_of_small() {
        let v = Vertex::from(4u64);
        assert_eq!(v.bits(), 3);
        assert!(v.bit(2));
        assert!(!v.bit(1));
        assert!(!v.bit(200));
    }
}
