//! Gradings by finite abelian groups and the universal grading.

use alloc::vec;
use alloc::vec::Vec;

use super::{adjoint_subring, FusionRing};
use crate::group::{CayleyTable, FiniteAbelianGroup};
use crate::{Error, Result};

/// A degree map from simples to a finite abelian group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    pub group: FiniteAbelianGroup,
    /// Group element index of each simple.
    pub degree: Vec<usize>,
    pub faithful: bool,
}

impl Grading {
    /// Builds a grading and computes faithfulness. Does not check that the
    /// degree map is compatible with a ring; see [`Grading::respects`].
    pub fn new(group: FiniteAbelianGroup, degree: Vec<usize>) -> Self {
        let mut hit = vec![false; group.order()];
        for &d in &degree {
            hit[d] = true;
        }
        let faithful = hit.iter().all(|&h| h);
        Self { group, degree, faithful }
    }

    /// Simples of degree `g`, ascending.
    pub fn component(&self, g: usize) -> Vec<usize> {
        (0..self.degree.len()).filter(|&x| self.degree[x] == g).collect()
    }

    pub fn trivial_component(&self) -> Vec<usize> {
        self.component(self.group.identity())
    }

    /// `N_{ab}^c > 0` implies `deg c = deg a + deg b`.
    pub fn respects(&self, ring: &FusionRing) -> bool {
        ring.rank() == self.degree.len()
            && ring
                .triples()
                .all(|(a, b, c, _)| self.degree[c] == self.group.add(self.degree[a], self.degree[b]))
    }
}

/// The universal grading: simples `X`, `Y` share a degree iff some
/// constituent of `X ⊗ Y*` lies in the adjoint subring.
///
/// The class multiplication is read off the fusion rules and its group
/// structure is found by [`CayleyTable::abelian_decomposition`].
pub fn universal_grading(ring: &FusionRing) -> Result<Grading> {
    ring.require_commutative()?;
    let r = ring.rank();
    let adjoint = adjoint_subring(ring);

    let mut parent: Vec<usize> = (0..r).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for x in 0..r {
        for y in x + 1..r {
            if ring.product(x, ring.dual(y)).iter().any(|&(c, _)| adjoint.contains(c)) {
                let (px, py) = (find(&mut parent, x), find(&mut parent, y));
                if px != py {
                    parent[px.max(py)] = px.min(py);
                }
            }
        }
    }
    // classes numbered by smallest member
    let mut class = vec![usize::MAX; r];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..r {
        let root = find(&mut parent, x);
        if class[root] == usize::MAX {
            class[root] = reps.len();
            reps.push(x);
        }
        class[x] = class[root];
    }
    let k = reps.len();
    let mut table = vec![usize::MAX; k * k];
    for a in 0..r {
        for b in 0..r {
            for &(c, _) in ring.product(a, b) {
                let slot = &mut table[class[a] * k + class[b]];
                if *slot == usize::MAX {
                    *slot = class[c];
                } else if *slot != class[c] {
                    return Err(Error::InconsistentGrading(alloc::format!(
                        "{} ⊗ {} meets two classes",
                        ring.label(a),
                        ring.label(b)
                    )));
                }
            }
        }
    }
    let table = CayleyTable::new(k, class[ring.unit()], table)
        .map_err(|e| Error::InconsistentGrading(alloc::format!("class table is not a group: {e}")))?;
    if !table.is_associative() {
        return Err(Error::InconsistentGrading("class multiplication is not associative".into()));
    }
    let decomposition = table
        .abelian_decomposition()
        .ok_or_else(|| Error::InconsistentGrading("class group is not abelian".into()))?;
    let degree = (0..r).map(|x| decomposition.to_group(class[x])).collect();
    Ok(Grading::new(decomposition.group().clone(), degree))
}
