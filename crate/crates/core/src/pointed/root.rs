use core::fmt;
use core::ops::Mul;
use core::str::FromStr;

use crate::num::gcd;
use crate::Error;

/// `exp(2πi·p/q)` stored as a reduced exponent `p/q` with `0 ≤ p < q`.
///
/// Multiplication adds exponents modulo 1 and the order is `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    p: u64,
    q: u64,
}

impl RootOfUnity {
    pub const ONE: Self = Self { p: 0, q: 1 };
    pub const MINUS_ONE: Self = Self { p: 1, q: 2 };
    pub const I: Self = Self { p: 1, q: 4 };
    pub const MINUS_I: Self = Self { p: 3, q: 4 };

    /// `exp(2πi·num/den)`; `den` must be nonzero.
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den > 0, "root of unity with zero denominator");
        let p = i128::from(num).rem_euclid(i128::from(den)) as u64;
        let g = gcd(p, den);
        if p == 0 {
            Self::ONE
        } else {
            Self { p: p / g, q: den / g }
        }
    }

    /// The primitive root `exp(2πi/n)`.
    pub fn primitive(n: u64) -> Self {
        Self::new(1, n)
    }

    pub fn numerator(self) -> u64 {
        self.p
    }

    pub fn denominator(self) -> u64 {
        self.q
    }

    pub fn order(self) -> u64 {
        self.q
    }

    pub fn is_one(self) -> bool {
        self.p == 0
    }

    pub fn inv(self) -> Self {
        Self::new(-(self.p as i64), self.q)
    }

    pub fn pow(self, k: i64) -> Self {
        let e = (i128::from(k) * i128::from(self.p)).rem_euclid(i128::from(self.q));
        Self::new(e as i64, self.q)
    }

    /// All `n`-th roots of unity in order of exponent `k/n`.
    pub fn all_nth(n: u64) -> impl Iterator<Item = Self> {
        (0..n).map(move |k| Self::new(k as i64, n))
    }
}

impl Mul for RootOfUnity {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let l = self.q / gcd(self.q, o.q) * o.q;
        let num = u128::from(self.p) * u128::from(l / self.q) + u128::from(o.p) * u128::from(l / o.q);
        Self::new((num % u128::from(l)) as i64, l)
    }
}

impl Default for RootOfUnity {
    fn default() -> Self {
        Self::ONE
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for RootOfUnity {
    type Err = Error;

    /// Accepts `p/q` (any integer `p`, positive `q`) and the shorthands
    /// `1`, `-1`, `i`, `-i`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::InvalidParameter(alloc::format!("cannot parse root of unity {s:?}"));
        match s {
            "1" => return Ok(Self::ONE),
            "-1" => return Ok(Self::MINUS_ONE),
            "i" => return Ok(Self::I),
            "-i" => return Ok(Self::MINUS_I),
            _ => {}
        }
        let (num, den) = s.split_once('/').ok_or_else(bad)?;
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: u64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ok(Self::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn reduces_and_multiplies() {
        assert_eq!(RootOfUnity::new(2, 8), RootOfUnity::I);
        assert_eq!(RootOfUnity::new(-1, 4), RootOfUnity::MINUS_I);
        assert_eq!(RootOfUnity::I * RootOfUnity::I, RootOfUnity::MINUS_ONE);
        assert_eq!(RootOfUnity::new(1, 6) * RootOfUnity::new(1, 3), RootOfUnity::MINUS_ONE);
        assert_eq!(RootOfUnity::primitive(8).pow(4), RootOfUnity::MINUS_ONE);
        assert_eq!(RootOfUnity::primitive(8).pow(-1), RootOfUnity::new(7, 8));
        assert_eq!(RootOfUnity::new(3, 3), RootOfUnity::ONE);
        assert_eq!(RootOfUnity::new(5, 12).order(), 12);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("1/2".parse::<RootOfUnity>().unwrap(), RootOfUnity::MINUS_ONE);
        assert_eq!("-i".parse::<RootOfUnity>().unwrap(), RootOfUnity::new(3, 4));
        assert_eq!("6/8".parse::<RootOfUnity>().unwrap().to_string(), "3/4");
        assert_eq!(RootOfUnity::ONE.to_string(), "0/1");
        assert!("1/0".parse::<RootOfUnity>().is_err());
        assert!("x".parse::<RootOfUnity>().is_err());
    }
}
