//! Exact dyadic rationals (`p / 2^q`).
//!
//! Transfer insertion assigns the new endpoints the time
//! `(min(t(w'), t(a')) + t(a)) / 2`, so starting from integer levels every
//! time ever produced is a dyadic rational. Keeping them exact avoids any
//! floating-point tie ambiguity when ordering first appearances or walking
//! donor edges. Chains of stacked insertions halve repeatedly, so the
//! numerator is arbitrary precision.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

/// An exact rational with a power-of-two denominator: `num / 2^exp`.
///
/// Normalized so that `exp == 0` or `num` is odd (and zero is `0/2^0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    num: BigInt,
    exp: u64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic { num: BigInt::from(0), exp: 0 }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Dyadic { num: n.into(), exp: 0 }
    }

    /// `num / 2^exp`, normalizing the representation.
    pub fn new(num: impl Into<BigInt>, exp: u64) -> Self {
        let mut d = Dyadic { num: num.into(), exp };
        d.normalize();
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num == BigInt::from(0)
    }

    fn normalize(&mut self) {
        if self.num == BigInt::from(0) {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0);
        let shift = tz.min(self.exp);
        if shift > 0 {
            self.num >>= shift;
            self.exp -= shift;
        }
    }

    /// `(a + b) / 2` — the only arithmetic the completion algorithm needs.
    pub fn average(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let exp = a.exp.max(b.exp);
        let an = &a.num << (exp - a.exp) as usize;
        let bn = &b.num << (exp - b.exp) as usize;
        Dyadic::new(an + bn, exp + 1)
    }

    pub fn min(a: &Dyadic, b: &Dyadic) -> Dyadic {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        let a = &self.num << (exp - self.exp) as usize;
        let b = &other.num << (exp - other.exp) as usize;
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.num, self.exp)
    }
}

/// Error parsing a `p/2^q` string.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid dyadic rational {input:?}: expected the form p/2^q")]
pub struct DyadicParseError {
    pub input: String,
}

impl FromStr for Dyadic {
    type Err = DyadicParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || DyadicParseError { input: s.to_string() };
        let (num, exp) = s.split_once("/2^").ok_or_else(err)?;
        let num = BigInt::from_str(num).map_err(|_| err())?;
        let exp = u64::from_str(exp).map_err(|_| err())?;
        Ok(Dyadic::new(num, exp))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_equality() {
        assert_eq!(Dyadic::new(4, 2), Dyadic::from_integer(1));
        assert_eq!(Dyadic::new(6, 1), Dyadic::from_integer(3));
        assert_eq!(Dyadic::new(0, 7), Dyadic::zero());
        assert_eq!(Dyadic::new(3, 2).to_string(), "3/2^2");
    }

    #[test]
    fn averages_halve_exactly() {
        let a = Dyadic::from_integer(3);
        let b = Dyadic::from_integer(0);
        let m = Dyadic::average(&a, &b);
        assert_eq!(m.to_string(), "3/2^1");
        let m2 = Dyadic::average(&m, &b);
        assert_eq!(m2.to_string(), "3/2^2");
        assert!(m2 < m && m < a);
        assert!(Dyadic::zero() < m2);
    }

    #[test]
    fn ordering_across_exponents() {
        // 5/4 < 3/2 < 2
        let a = Dyadic::new(5, 2);
        let b = Dyadic::new(3, 1);
        let c = Dyadic::from_integer(2);
        assert!(a < b && b < c);
        assert_eq!(Dyadic::min(&b, &a), a);
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0/2^0", "3/2^2", "-7/2^1", "12345678901234567890123456789/2^97"] {
            let d: Dyadic = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert!(Dyadic::from_str("1.5").is_err());
        assert!(Dyadic::from_str("3/4").is_err());
    }

    #[test]
    fn deep_halving_chain_stays_exact() {
        let mut t = Dyadic::from_integer(1);
        let zero = Dyadic::zero();
        for _ in 0..300 {
            t = Dyadic::average(&t, &zero);
        }
        assert_eq!(t.to_string(), "1/2^300");
        assert!(t > zero);
    }
}
