//! The group of invertible simples and stabilizers `G[X]`.

use alloc::vec;
use alloc::vec::Vec;

use super::{subring_generated, FusionRing, Subring};
use crate::group::{AbelianDecomposition, CayleyTable, FiniteAbelianGroup};
use crate::{Error, Result};

/// `G(C)`: the invertible simples under tensor product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvertibleGroup {
    /// Ring indices of the invertibles, ascending. Table position `k`
    /// corresponds to `elements[k]`.
    pub elements: Vec<usize>,
    pub table: CayleyTable,
    /// Present exactly when the group is abelian.
    pub decomposition: Option<AbelianDecomposition>,
    pub pointed_subring: Subring,
}

impl InvertibleGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn group(&self) -> Option<&FiniteAbelianGroup> {
        self.decomposition.as_ref().map(AbelianDecomposition::group)
    }

    /// Table position of a ring index.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// Ring index of the element with the given concrete group index.
    pub fn element_of(&self, group_index: usize) -> Option<usize> {
        self.decomposition
            .as_ref()
            .map(|d| self.elements[d.from_group(group_index)])
    }

    /// Concrete group index of an invertible ring simple.
    pub fn group_index(&self, x: usize) -> Option<usize> {
        let d = self.decomposition.as_ref()?;
        self.position(x).map(|p| d.to_group(p))
    }
}

/// Collects the invertible simples, their multiplication table and, when
/// abelian, the invariant factors.
pub fn invertibles(ring: &FusionRing) -> Result<InvertibleGroup> {
    let elements = ring.invertible_indices();
    let n = elements.len();
    let mut pos = vec![usize::MAX; ring.rank()];
    for (k, &x) in elements.iter().enumerate() {
        pos[x] = k;
    }
    let mut table = Vec::with_capacity(n * n);
    for &x in &elements {
        for &y in &elements {
            let z = ring
                .simple_product(x, y)
                .filter(|&z| pos[z] != usize::MAX)
                .ok_or_else(|| {
                    Error::Precondition(alloc::format!("product of invertibles {x} and {y} is not invertible"))
                })?;
            table.push(pos[z]);
        }
    }
    let table = CayleyTable::new(n, pos[ring.unit()], table)?;
    let decomposition = table.abelian_decomposition();
    let pointed_subring = subring_generated(ring, &elements)?;
    Ok(InvertibleGroup {
        elements,
        table,
        decomposition,
        pointed_subring,
    })
}

/// `G[X]` and the split of `X ⊗ X*` into its invertible and non-invertible
/// constituents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerDecomposition {
    pub object: usize,
    /// `{g invertible : g ⊗ X ≅ X}`, ascending.
    pub stabilizer: Vec<usize>,
    /// Constituents of `X ⊗ X*` that are not invertible.
    pub noninvertible_part: Vec<(usize, u32)>,
    /// The invertible constituents of `X ⊗ X*` are exactly the stabilizer,
    /// each with multiplicity one.
    pub consistent: bool,
}

pub fn stabilizer_decomposition(ring: &FusionRing, x: usize) -> Result<StabilizerDecomposition> {
    if x >= ring.rank() {
        return Err(Error::Malformed(alloc::format!("simple {x} out of range")));
    }
    let stabilizer: Vec<usize> = ring
        .invertible_indices()
        .into_iter()
        .filter(|&g| ring.simple_product(g, x) == Some(x))
        .collect();
    let xx = ring.product(x, ring.dual(x));
    let invertible_part: Vec<(usize, u32)> = xx.iter().copied().filter(|&(c, _)| ring.is_invertible(c)).collect();
    let noninvertible_part = xx.iter().copied().filter(|&(c, _)| !ring.is_invertible(c)).collect();
    let consistent = invertible_part.len() == stabilizer.len()
        && invertible_part.iter().all(|&(c, n)| n == 1 && stabilizer.contains(&c));
    Ok(StabilizerDecomposition {
        object: x,
        stabilizer,
        noninvertible_part,
        consistent,
    })
}
