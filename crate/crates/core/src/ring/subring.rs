//! Subrings: sets of simples closed under tensor constituents and duals.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{FusionRing, Limits};
use crate::{Error, Result};

/// A fusion subring, stored as the sorted simples of its parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subring {
    simples: Vec<usize>,
    parent_rank: usize,
}

impl Subring {
    pub fn simples(&self) -> &[usize] {
        &self.simples
    }

    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    pub fn parent_rank(&self) -> usize {
        self.parent_rank
    }

    pub fn contains(&self, x: usize) -> bool {
        self.simples.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subring) -> bool {
        self.simples.iter().all(|&x| other.contains(x))
    }

    pub fn is_trivial(&self) -> bool {
        self.simples.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.simples.len() == self.parent_rank
    }

    pub fn is_pointed(&self, parent: &FusionRing) -> bool {
        self.simples.iter().all(|&x| parent.is_invertible(x))
    }

    /// The subring as a standalone ring, simples renumbered in sorted order.
    pub fn to_ring(&self, parent: &FusionRing) -> FusionRing {
        parent
            .restrict(&self.simples)
            .expect("a subring is closed by construction")
    }
}

/// Closes `seed` under duals and tensor constituents. `seed` need not be
/// sorted; the unit is always added.
fn close(ring: &FusionRing, seed: &[usize]) -> Vec<usize> {
    let mut member = vec![false; ring.rank()];
    let mut members = Vec::new();
    let mut push = |x: usize, members: &mut Vec<usize>| {
        if !core::mem::replace(&mut member[x], true) {
            members.push(x);
        }
    };
    push(ring.unit(), &mut members);
    for &s in seed {
        push(s, &mut members);
    }
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        push(ring.dual(x), &mut members);
        for j in 0..=i {
            let y = members[j];
            for &(c, _) in ring.product(x, y).iter().chain(ring.product(y, x)) {
                push(c, &mut members);
            }
        }
        i += 1;
    }
    members.sort_unstable();
    members
}

fn check_indices(ring: &FusionRing, set: &[usize]) -> Result<()> {
    match set.iter().find(|&&x| x >= ring.rank()) {
        Some(x) => Err(Error::Malformed(alloc::format!("simple {x} out of range"))),
        None => Ok(()),
    }
}

/// The smallest subring containing `set`.
pub fn subring_generated(ring: &FusionRing, set: &[usize]) -> Result<Subring> {
    check_indices(ring, set)?;
    Ok(Subring {
        simples: close(ring, set),
        parent_rank: ring.rank(),
    })
}

/// The subring generated by all constituents of `X ⊗ X*`.
pub fn adjoint_subring(ring: &FusionRing) -> Subring {
    let mut seed = Vec::new();
    for x in 0..ring.rank() {
        seed.extend(ring.product(x, ring.dual(x)).iter().map(|&(c, _)| c));
    }
    seed.sort_unstable();
    seed.dedup();
    Subring {
        simples: close(ring, &seed),
        parent_rank: ring.rank(),
    }
}

/// All subrings with their inclusion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubringLattice {
    /// Sorted by size, then lexicographically by simples; index 0 is the
    /// trivial subring and the last entry is the whole ring.
    pub subrings: Vec<Subring>,
    /// Covering pairs `(i, j)`: `subrings[i] ⊂ subrings[j]` with nothing in
    /// between.
    pub covers: Vec<(usize, usize)>,
}

impl SubringLattice {
    pub fn len(&self) -> usize {
        self.subrings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subrings.is_empty()
    }

    pub fn position(&self, s: &Subring) -> Option<usize> {
        self.subrings.iter().position(|t| t == s)
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.subrings[i].is_subset_of(&self.subrings[j])
    }

    /// Index of the smallest subring containing both.
    pub fn join(&self, i: usize, j: usize) -> usize {
        (0..self.subrings.len())
            .find(|&k| self.contains(i, k) && self.contains(j, k))
            .expect("the whole ring contains everything")
    }

    /// Proper subrings: everything except the whole ring.
    pub fn proper(&self) -> impl Iterator<Item = &Subring> {
        self.subrings.iter().filter(|s| !s.is_whole())
    }
}

/// Enumerates every subring by growing closed sets one simple at a time.
///
/// Every subring is the closure of some chain of single additions starting
/// from the trivial subring, so the search from the trivial subring reaches
/// all of them.
pub fn subring_lattice(ring: &FusionRing, limits: &Limits) -> Result<SubringLattice> {
    if ring.rank() > limits.lattice_rank {
        return Err(Error::BoundExceeded {
            what: "rank",
            value: ring.rank(),
            bound: limits.lattice_rank,
        });
    }
    let r = ring.rank();
    let trivial = close(ring, &[]);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(trivial.clone());
    let mut queue = vec![trivial];
    let mut i = 0;
    while i < queue.len() {
        let base = queue[i].clone();
        for x in 0..r {
            if base.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = base.clone();
            seed.push(x);
            let next = close(ring, &seed);
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
        i += 1;
    }
    let mut subrings: Vec<Subring> = queue
        .into_iter()
        .map(|simples| Subring { simples, parent_rank: r })
        .collect();
    subrings.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.simples.cmp(&b.simples)));

    let n = subrings.len();
    let mut covers = Vec::new();
    for j in 0..n {
        for i in 0..n {
            if i == j || subrings[i].len() >= subrings[j].len() || !subrings[i].is_subset_of(&subrings[j]) {
                continue;
            }
            let between = (0..n).any(|k| {
                k != i
                    && k != j
                    && subrings[i].len() < subrings[k].len()
                    && subrings[k].len() < subrings[j].len()
                    && subrings[i].is_subset_of(&subrings[k])
                    && subrings[k].is_subset_of(&subrings[j])
            });
            if !between {
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();
    Ok(SubringLattice { subrings, covers })
}
