//! Recognition of generalized Tambara–Yamagami rings.

use alloc::vec;
use alloc::vec::Vec;

use super::{adjoint_subring, invertibles, universal_grading, FusionRing};
use crate::{Error, Result};

/// Structural data of a ring whose non-invertible simples multiply into
/// sums of invertibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GtyReport {
    /// Every product of two non-invertible simples is a sum of invertibles.
    pub is_gty: bool,
    /// Number of non-invertible simples.
    pub n: usize,
    pub invertible_count: usize,
    pub adjoint_rank: usize,
    /// `|U(C)|`, absent when the fusion rules are not commutative.
    pub universal_order: Option<usize>,
    /// `G(C)` acts transitively on non-invertibles by left multiplication.
    pub action_transitive: bool,
    /// The nontrivial invertible in `X ⊗ X*` for a non-invertible `X`.
    pub delta: Option<usize>,
    /// `⟨δ⟩` is normal in `G(C)`.
    pub delta_normal: bool,
}

impl GtyReport {
    /// All structural consequences hold: `2n` invertibles, adjoint rank 2,
    /// `|U(C)| = 2n`, a transitive action and a normal `⟨δ⟩`.
    pub fn consistent(&self) -> bool {
        self.is_gty
            && self.invertible_count == 2 * self.n
            && self.adjoint_rank == 2
            && self.universal_order == Some(2 * self.n)
            && self.action_transitive
            && self.delta_normal
    }
}

pub fn gty_structure(ring: &FusionRing) -> Result<GtyReport> {
    if ring.is_pointed() {
        return Err(Error::PointedInput);
    }
    let r = ring.rank();
    let inv: Vec<bool> = (0..r).map(|x| ring.is_invertible(x)).collect();
    let non: Vec<usize> = (0..r).filter(|&x| !inv[x]).collect();
    let is_gty = non
        .iter()
        .all(|&x| non.iter().all(|&y| ring.product(x, y).iter().all(|&(c, _)| inv[c])));

    let group = invertibles(ring)?;
    let adjoint_rank = adjoint_subring(ring).len();
    let universal_order = match universal_grading(ring) {
        Ok(g) => Some(g.group.order()),
        Err(Error::NotCommutative { .. }) | Err(Error::InconsistentGrading(_)) => None,
        Err(e) => return Err(e),
    };

    let mut orbit = vec![false; r];
    let start = non[0];
    for &g in &group.elements {
        for &(c, _) in ring.product(g, start) {
            orbit[c] = true;
        }
    }
    let action_transitive = non.iter().all(|&x| orbit[x]);

    let delta = ring
        .product(start, ring.dual(start))
        .iter()
        .map(|&(c, _)| c)
        .find(|&c| c != ring.unit() && inv[c]);
    let delta_normal = match delta {
        Some(d) => group.elements.iter().all(|&g| {
            let conj = ring
                .simple_product(g, d)
                .and_then(|gd| ring.simple_product(gd, ring.dual(g)));
            conj == Some(d) || conj == Some(ring.unit())
        }),
        None => false,
    };

    Ok(GtyReport {
        is_gty,
        n: non.len(),
        invertible_count: group.order(),
        adjoint_rank,
        universal_order,
        action_transitive,
        delta,
        delta_normal,
    })
}
