//! The standard 3-cocycles `ω_ζ` on `Z_M` and the braidings `σ_ξ`.

use alloc::vec::Vec;

use super::{QuadraticForm, RootOfUnity};
use crate::group::FiniteAbelianGroup;
use crate::num::gcd;
use crate::{Error, Result};

/// `ω_ζ(i, j, ℓ) = 1` if `j + ℓ < M`, else `ζ^i`, for `ζ^M = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicCocycle {
    m: u64,
    zeta: RootOfUnity,
}

impl CyclicCocycle {
    pub fn new(m: u64, zeta: RootOfUnity) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("modulus must be positive".into()));
        }
        if !zeta.pow(m as i64).is_one() {
            return Err(Error::InvalidParameter(alloc::format!("ζ = {zeta} is not an {m}-th root of unity")));
        }
        Ok(Self { m, zeta })
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn zeta(&self) -> RootOfUnity {
        self.zeta
    }

    pub fn omega(&self, i: u64, j: u64, l: u64) -> Result<RootOfUnity> {
        if i >= self.m || j >= self.m || l >= self.m {
            return Err(Error::InvalidParameter(alloc::format!(
                "residues ({i}, {j}, {l}) out of range for M = {}",
                self.m
            )));
        }
        Ok(self.omega_unchecked(i, j, l))
    }

    fn omega_unchecked(&self, i: u64, j: u64, l: u64) -> RootOfUnity {
        if j + l < self.m {
            RootOfUnity::ONE
        } else {
            self.zeta.pow(i as i64)
        }
    }

    /// First quadruple where
    /// `ω(b,c,d) ω(a,b+c,d) ω(a,b,c) = ω(a+b,c,d) ω(a,b,c+d)` fails.
    pub fn cocycle_defect(&self) -> Option<(u64, u64, u64, u64)> {
        let m = self.m;
        let w = |i, j, l| self.omega_unchecked(i, j, l);
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    for d in 0..m {
                        let lhs = w(b, c, d) * w(a, (b + c) % m, d) * w(a, b, c);
                        let rhs = w((a + b) % m, c, d) * w(a, b, (c + d) % m);
                        if lhs != rhs {
                            return Some((a, b, c, d));
                        }
                    }
                }
            }
        }
        None
    }
}

/// `σ_ξ(i, j) = ξ^{ij}` on `Z_M`, paired with `ω_{ξ^M}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicBraiding {
    m: u64,
    xi: RootOfUnity,
}

impl CyclicBraiding {
    /// Requires `ξ^{2M} = 1` and `ξ^{M²} = 1`.
    pub fn new(m: u64, xi: RootOfUnity) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("modulus must be positive".into()));
        }
        if !xi.pow(2 * m as i64).is_one() || !xi.pow((m * m) as i64).is_one() {
            return Err(Error::InvalidParameter(alloc::format!(
                "ξ = {xi} must satisfy ξ^(2M) = ξ^(M²) = 1 for M = {m}"
            )));
        }
        Ok(Self { m, xi })
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn xi(&self) -> RootOfUnity {
        self.xi
    }

    /// `ζ = ξ^M`, always `±1`.
    pub fn zeta(&self) -> RootOfUnity {
        self.xi.pow(self.m as i64)
    }

    pub fn cocycle(&self) -> CyclicCocycle {
        CyclicCocycle { m: self.m, zeta: self.zeta() }
    }

    pub fn sigma(&self, i: u64, j: u64) -> RootOfUnity {
        self.xi.pow((i * j) as i64)
    }

    /// `q(j) = ξ^{j²}` on `Z_M`.
    pub fn quadratic_form(&self) -> QuadraticForm {
        let group = FiniteAbelianGroup::cyclic(self.m);
        let xi = self.xi;
        QuadraticForm::from_fn(group.clone(), |g| {
            let j = group.residues(g).first().copied().unwrap_or(0);
            xi.pow((j * j) as i64)
        })
    }

    /// Both hexagon identities of the pair `(ω_{ξ^M}, σ_ξ)`:
    /// `ω(b,c,a) σ(a,b+c) ω(a,b,c) = σ(a,b) ω(b,a,c) σ(a,c)` and
    /// `ω(c,a,b) σ(a+b,c) ω(a,b,c) = σ(a,c) ω(a,c,b) σ(b,c)`.
    pub fn satisfies_hexagons(&self) -> bool {
        let m = self.m;
        let w = self.cocycle();
        let w = |i, j, l| w.omega_unchecked(i, j, l);
        let s = |i, j| self.sigma(i, j);
        (0..m).all(|a| {
            (0..m).all(|b| {
                (0..m).all(|c| {
                    let first = w(b, c, a) * s(a, (b + c) % m) * w(a, b, c) == s(a, b) * w(b, a, c) * s(a, c);
                    let second = w(c, a, b) * s((a + b) % m, c) * w(a, b, c) == s(a, c) * w(a, c, b) * s(b, c);
                    first && second
                })
            })
        })
    }
}

/// `q(j) = ξ^{j²}` for a braiding on `Z_M`.
pub fn quadratic_from_xi(braiding: &CyclicBraiding) -> QuadraticForm {
    braiding.quadratic_form()
}

/// Every braiding of `(Z_M, ω_ζ)`: the `ξ` with `ξ^{gcd(M², 2M)} = 1` and
/// `ξ^M = ζ`, by increasing exponent.
pub fn enumerate_braidings(m: u64, zeta: RootOfUnity) -> Result<Vec<CyclicBraiding>> {
    if m == 0 {
        return Err(Error::InvalidParameter("modulus must be positive".into()));
    }
    let d = gcd(m * m, 2 * m);
    Ok(RootOfUnity::all_nth(d)
        .filter(|xi| xi.pow(m as i64) == zeta)
        .map(|xi| CyclicBraiding { m, xi })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_branches() {
        let c = CyclicCocycle::new(4, RootOfUnity::I).unwrap();
        assert_eq!(c.omega(1, 2, 1).unwrap(), RootOfUnity::ONE);
        assert_eq!(c.omega(1, 2, 2).unwrap(), RootOfUnity::I);
        assert!(c.omega(4, 0, 0).is_err());
        assert!(CyclicCocycle::new(4, RootOfUnity::primitive(8)).is_err());
    }

    #[test]
    fn braidings_satisfy_hexagons() {
        for m in 1..=8 {
            for zeta in [RootOfUnity::ONE, RootOfUnity::MINUS_ONE] {
                for b in enumerate_braidings(m, zeta).unwrap() {
                    assert!(b.satisfies_hexagons(), "M = {m}, ξ = {}", b.xi());
                }
            }
        }
    }
}
