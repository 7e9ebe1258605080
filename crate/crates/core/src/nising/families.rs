use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::group::FiniteAbelianGroup;
use crate::pointed::RootOfUnity;
use crate::ring::{FusionRing, Grading};
use crate::{Error, Result};

/// The Ising fusion ring on `1, δ, Z` with `Z ⊗ Z = 1 ⊕ δ`.
pub fn build_ising() -> FusionRing {
    let labels = ["1", "δ", "Z"].iter().map(|s| s.to_string()).collect();
    FusionRing::from_rule(labels, 0, vec![0, 1, 2], |a, b| match (a, b) {
        (2, 2) => vec![(0, 1), (1, 1)],
        (2, _) | (_, 2) => vec![(2, 1)],
        _ => vec![(a ^ b, 1)],
    })
}

/// Index bookkeeping for the `C_M` basis: invertibles `δ^i ⊠ 2j` at
/// `2j + i`, then `Z_j = Z ⊠ (2j+1)` at `M + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CmBasis {
    m: u64,
}

impl CmBasis {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 || !m.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!("M must be even and at least 2, got {m}")));
        }
        Ok(Self { m })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn half(&self) -> u64 {
        self.m / 2
    }

    pub fn rank(&self) -> usize {
        (self.m + self.m / 2) as usize
    }

    /// `δ^i ⊠ 2j`, `j` taken mod `M/2`.
    pub fn invertible(&self, i: u64, j: u64) -> usize {
        (2 * (j % self.half()) + (i % 2)) as usize
    }

    /// `Z_j = Z ⊠ (2j+1)`, `j` taken mod `M/2`.
    pub fn z(&self, j: u64) -> usize {
        (self.m + j % self.half()) as usize
    }

    /// The simple `Y ⊠ k` for `Y ∈ {1, δ, Z}` encoded as 0, 1, 2, or `None`
    /// when it is not in `C_M` (wrong parity).
    pub fn simple(&self, y: u8, k: u64) -> Option<usize> {
        let k = k % self.m;
        match (y, k % 2) {
            (0 | 1, 0) => Some(self.invertible(u64::from(y), k / 2)),
            (2, 1) => Some(self.z((k - 1) / 2)),
            _ => None,
        }
    }

    /// Inverse of [`CmBasis::simple`]: `(Y, k)` with `Y` coded 0, 1, 2.
    pub fn decode(&self, x: usize) -> (u8, u64) {
        let x = x as u64;
        if x < self.m {
            ((x % 2) as u8, 2 * (x / 2))
        } else {
            (2, 2 * (x - self.m) + 1)
        }
    }

    pub fn is_z(&self, x: usize) -> bool {
        x as u64 >= self.m
    }
}

/// `C_M` with its `Z_M`-grading `deg(δ^i ⊠ 2j) = 2j`, `deg Z_j = 2j + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmRing {
    pub basis: CmBasis,
    pub ring: FusionRing,
    pub grading: Grading,
}

/// The fusion ring of the subcategory of `Ising ⊠ vec_{Z_M}` generated by
/// `Z ⊠ 1`, for even `M`. Fusion rules:
/// invertibles multiply as `Z_2 × Z_{M/2}`, `(δ^i ⊠ 2j) ⊗ Z_ℓ = Z_{j+ℓ}`, and
/// `Z_j ⊗ Z_ℓ = a^{j+ℓ+1} ⊕ δ a^{j+ℓ+1}` with `a = 1 ⊠ 2`.
pub fn build_cm(m: u64) -> Result<CmRing> {
    let basis = CmBasis::new(m)?;
    let r = basis.rank();
    let labels: Vec<String> = (0..r)
        .map(|x| {
            let (y, k) = basis.decode(x);
            format!("{}⊠{k}", ["1", "δ", "Z"][y as usize])
        })
        .collect();
    let dual: Vec<usize> = (0..r)
        .map(|x| {
            let (y, k) = basis.decode(x);
            basis.simple(y, m - k).expect("duals keep parity")
        })
        .collect();
    let ring = FusionRing::from_rule(labels, 0, dual, |a, b| {
        let (ya, ka) = basis.decode(a);
        let (yb, kb) = basis.decode(b);
        let k = (ka + kb) % m;
        match (ya, yb) {
            (2, 2) => vec![(basis.simple(0, k).unwrap(), 1), (basis.simple(1, k).unwrap(), 1)],
            (2, _) | (_, 2) => vec![(basis.simple(2, k).unwrap(), 1)],
            _ => vec![(basis.simple(ya ^ yb, k).unwrap(), 1)],
        }
    });
    let group = FiniteAbelianGroup::cyclic(m);
    let degree = (0..r).map(|x| group.index_of(&[basis.decode(x).1])).collect();
    Ok(CmRing {
        basis,
        ring,
        grading: Grading::new(group, degree),
    })
}

/// Parameters of `I_{N,ζ}`: `N ≥ 1` and a `2^N`-th root of unity `ζ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NIsingSpec {
    n: u32,
    zeta: RootOfUnity,
}

/// Largest `N` accepted; keeps `2^{N+1}` and every exponent in range.
pub const MAX_N: u32 = 20;

impl NIsingSpec {
    pub fn new(n: u32, zeta: RootOfUnity) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidParameter(format!("N must be in 1..={MAX_N}, got {n}")));
        }
        if !zeta.pow(1i64 << n).is_one() {
            return Err(Error::InvalidParameter(format!("ζ = {zeta} is not a 2^{n}-th root of unity")));
        }
        Ok(Self { n, zeta })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn zeta(&self) -> RootOfUnity {
        self.zeta
    }

    /// `2^N`, the order of the universal grading group.
    pub fn modulus(&self) -> u64 {
        1 << self.n
    }
}

/// `I_{N,ζ}`: the ring of `C_{2^N}` with the twist `ζ` carried alongside.
/// The twist never changes the fusion rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NIsing {
    pub spec: NIsingSpec,
    pub cm: CmRing,
}

impl NIsing {
    pub fn ring(&self) -> &FusionRing {
        &self.cm.ring
    }
}

pub fn build_nising(spec: NIsingSpec) -> NIsing {
    let cm = build_cm(spec.modulus()).expect("2^N is even");
    NIsing { spec, cm }
}

/// Indices `j` with `Z_j* = Z_j` in `C_M`.
pub fn self_dual_noninvertibles(m: u64) -> Result<Vec<u64>> {
    let cm = build_cm(m)?;
    Ok((0..cm.basis.half())
        .filter(|&j| {
            let z = cm.basis.z(j);
            cm.ring.is_self_dual(z)
        })
        .collect())
}

/// A rank-6 ring with invertibles `Z_4 = ⟨a⟩` and two non-invertibles
/// `σ, σ'` (the Fermionic Moore–Read fusion rules): `a σ = σ'`,
/// `σ ⊗ σ = σ' ⊗ σ' = a ⊕ a³`, `σ ⊗ σ' = 1 ⊕ a²`.
pub fn build_moore_read() -> FusionRing {
    let labels = ["1", "a", "a²", "a³", "σ", "σ'"].iter().map(|s| s.to_string()).collect();
    FusionRing::from_rule(labels, 0, vec![0, 3, 2, 1, 5, 4], |x, y| match (x, y) {
        (4, 4) | (5, 5) => vec![(1, 1), (3, 1)],
        (4, 5) | (5, 4) => vec![(0, 1), (2, 1)],
        (g, s) | (s, g) if g < 4 && s >= 4 => vec![(if g % 2 == 0 { s } else { 9 - s }, 1)],
        (g, h) => vec![((g + h) % 4, 1)],
    })
}
