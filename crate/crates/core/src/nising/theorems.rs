//! Ring-level checks of the factorization `C_M ≅ I_N ⊠ pointed(Z_m)` and of
//! the subring structure of `I_N`.

use alloc::format;
use alloc::vec::Vec;

use super::families::{build_cm, build_nising, NIsingSpec};
use crate::group::FiniteAbelianGroup;
use crate::num::split_two_power;
use crate::pointed::RootOfUnity;
use crate::ring::{deligne_product, pointed_ring, ring_isomorphic, subring_generated, subring_lattice, Limits, Subring};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactCmReport {
    pub m_total: u64,
    pub n: u32,
    pub m: u64,
    /// Bijection from `I_N ⊠ pointed(Z_m)` onto `C_M`.
    pub witness: Option<Vec<usize>>,
}

impl FactCmReport {
    pub fn holds(&self) -> bool {
        self.witness.is_some()
    }
}

/// Writes `M = 2^N m` with `m` odd and searches for an isomorphism
/// `I_N ⊠ pointed(Z_m) → C_M`.
pub fn verify_fact_cm(m_total: u64, limits: &Limits) -> Result<FactCmReport> {
    if m_total < 2 || !m_total.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("M must be even and at least 2, got {m_total}")));
    }
    let (n, m) = split_two_power(m_total);
    let spec = NIsingSpec::new(n, RootOfUnity::ONE)?;
    let product = deligne_product(build_nising(spec).ring(), &pointed_ring(&FiniteAbelianGroup::cyclic(m)));
    let cm = build_cm(m_total)?;
    let witness = ring_isomorphic(&product, &cm.ring, limits)?;
    Ok(FactCmReport { m_total, n, m, witness })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NofactReport {
    pub n: u32,
    pub lattice_size: usize,
    pub proper: usize,
    /// Proper subrings that are not pointed.
    pub nonpointed_proper: Vec<Subring>,
    pub noninvertibles: usize,
    /// Non-invertible simples that do not generate the whole ring.
    pub nonfaithful: Vec<usize>,
}

impl NofactReport {
    pub fn holds(&self) -> bool {
        self.nonpointed_proper.is_empty() && self.nonfaithful.is_empty()
    }
}

pub fn verify_nofact(n: u32, limits: &Limits) -> Result<NofactReport> {
    let ni = build_nising(NIsingSpec::new(n, RootOfUnity::ONE)?);
    let ring = ni.ring();
    let lattice = subring_lattice(ring, limits)?;
    let nonpointed_proper = lattice.proper().filter(|s| !s.is_pointed(ring)).cloned().collect();
    let noninvertible: Vec<usize> = (0..ring.rank()).filter(|&x| !ring.is_invertible(x)).collect();
    let mut nonfaithful = Vec::new();
    for &x in &noninvertible {
        if !subring_generated(ring, &[x])?.is_whole() {
            nonfaithful.push(x);
        }
    }
    Ok(NofactReport {
        n,
        lattice_size: lattice.len(),
        proper: lattice.proper().count(),
        nonpointed_proper,
        noninvertibles: noninvertible.len(),
        nonfaithful,
    })
}
