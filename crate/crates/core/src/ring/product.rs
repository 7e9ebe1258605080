//! Ring constructors: the trivial ring, pointed rings of abelian groups and
//! Deligne products.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::FusionRing;
use crate::group::FiniteAbelianGroup;

/// The rank-one ring.
pub fn trivial_ring() -> FusionRing {
    FusionRing::from_rule(vec!["1".to_string()], 0, vec![0], |_, _| vec![(0, 1)])
}

/// Label of a group element: the residue for a cyclic group, a tuple
/// otherwise.
pub(crate) fn element_label(group: &FiniteAbelianGroup, g: usize) -> String {
    let r = group.residues(g);
    match r.len() {
        0 => "0".to_string(),
        1 => r[0].to_string(),
        _ => {
            let parts: Vec<String> = r.iter().map(u64::to_string).collect();
            format!("({})", parts.join(","))
        }
    }
}

/// The group ring `Z[G]` of a finite abelian group as a pointed fusion
/// ring. Simple `g` is the group element with index `g`.
pub fn pointed_ring(group: &FiniteAbelianGroup) -> FusionRing {
    let labels = group.elements().map(|g| element_label(group, g)).collect();
    let dual = group.elements().map(|g| group.neg(g)).collect();
    FusionRing::from_rule(labels, group.identity(), dual, |a, b| vec![(group.add(a, b), 1)])
}

/// `R1 ⊠ R2`: simple `(i, j)` has index `i * rank(R2) + j`, coefficients
/// multiply.
pub fn deligne_product(r1: &FusionRing, r2: &FusionRing) -> FusionRing {
    let n2 = r2.rank();
    let mut labels = Vec::with_capacity(r1.rank() * n2);
    let mut dual = Vec::with_capacity(r1.rank() * n2);
    for i in 0..r1.rank() {
        for j in 0..n2 {
            labels.push(format!("{}⊠{}", r1.label(i), r2.label(j)));
            dual.push(r1.dual(i) * n2 + r2.dual(j));
        }
    }
    let unit = r1.unit() * n2 + r2.unit();
    FusionRing::from_rule(labels, unit, dual, |a, b| {
        let (a1, a2) = (a / n2, a % n2);
        let (b1, b2) = (b / n2, b % n2);
        let mut out = Vec::new();
        for &(c1, m1) in r1.product(a1, b1) {
            for &(c2, m2) in r2.product(a2, b2) {
                out.push((c1 * n2 + c2, m1 * m2));
            }
        }
        out
    })
}
