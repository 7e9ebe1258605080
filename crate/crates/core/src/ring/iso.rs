//! Isomorphism search between fusion rings.
//!
//! A bijection of bases must preserve the unit, duals and every structure
//! constant. The search assigns simples one at a time and propagates:
//! once `a ↦ a'` and `b ↦ b'` are fixed, every constituent `c` of `a ⊗ b`
//! with multiplicity `n` can only go to a constituent of `a' ⊗ b'` with the
//! same multiplicity. Candidate sets start from per-simple fingerprints and
//! the variable with the fewest candidates is branched on first.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{fp_dims, stabilizer_decomposition, universal_grading, ExactDim, FusionRing, Limits};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Fingerprint {
    dim: (i64, i64, i64),
    invertible: bool,
    self_dual: bool,
    stabilizer: usize,
    degree_order: u64,
    power_order: u64,
    square: (usize, u32, usize),
    adjoint: (usize, u32),
}

fn dim_key(d: ExactDim) -> (i64, i64, i64) {
    match d {
        ExactDim::Exact(z) => (z.a, z.b, 0),
        ExactDim::Approx(x) => (0, 0, crate::num::round_i64(x * 1e8)),
    }
}

fn profile(p: &[(usize, u32)], ring: &FusionRing) -> (usize, u32, usize) {
    (
        p.len(),
        p.iter().map(|&(_, n)| n).sum(),
        p.iter().filter(|&&(c, _)| ring.is_invertible(c)).count(),
    )
}

fn fingerprints(ring: &FusionRing, dims: &[ExactDim]) -> Result<Vec<Fingerprint>> {
    let grading = universal_grading(ring).ok();
    let r = ring.rank();
    (0..r)
        .map(|x| {
            let invertible = ring.is_invertible(x);
            let power_order = if invertible {
                let mut k = 1;
                let mut y = x;
                while y != ring.unit() && k <= r as u64 {
                    y = ring.simple_product(y, x).unwrap_or(ring.unit());
                    k += 1;
                }
                k
            } else {
                0
            };
            let adj = profile(ring.product(x, ring.dual(x)), ring);
            Ok(Fingerprint {
                dim: dim_key(dims[x]),
                invertible,
                self_dual: ring.is_self_dual(x),
                stabilizer: stabilizer_decomposition(ring, x)?.stabilizer.len(),
                degree_order: grading
                    .as_ref()
                    .map_or(0, |g| g.group.element_order(g.degree[x])),
                power_order,
                square: profile(ring.product(x, x), ring),
                adjoint: (adj.0, adj.1),
            })
        })
        .collect()
}

/// Simples sorted by (dimension, invertible first, label).
pub fn canonical_order(ring: &FusionRing) -> Result<Vec<usize>> {
    let dims = fp_dims(ring)?;
    let mut order: Vec<usize> = (0..ring.rank()).collect();
    order.sort_by(|&x, &y| {
        dims.dims[x]
            .partial_cmp(&dims.dims[y])
            .unwrap_or(Ordering::Equal)
            .then_with(|| ring.is_invertible(y).cmp(&ring.is_invertible(x)))
            .then_with(|| ring.label(x).cmp(ring.label(y)))
            .then_with(|| x.cmp(&y))
    });
    Ok(order)
}

/// Checks that `phi` (simple `i` of `r1` ↦ `phi[i]` of `r2`) is a ring
/// isomorphism.
pub fn verify_isomorphism(r1: &FusionRing, r2: &FusionRing, phi: &[usize]) -> bool {
    let r = r1.rank();
    if r2.rank() != r || phi.len() != r {
        return false;
    }
    let mut seen = vec![false; r];
    if phi.iter().any(|&p| p >= r || core::mem::replace(&mut seen[p], true)) {
        return false;
    }
    if phi[r1.unit()] != r2.unit() || (0..r).any(|a| phi[r1.dual(a)] != r2.dual(phi[a])) {
        return false;
    }
    let mut mapped = Vec::new();
    (0..r).all(|a| {
        (0..r).all(|b| {
            mapped.clear();
            mapped.extend(r1.product(a, b).iter().map(|&(c, n)| (phi[c], n)));
            mapped.sort_unstable();
            mapped.as_slice() == r2.product(phi[a], phi[b])
        })
    })
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
    fn intersect(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= b;
        }
    }
}

const UNSET: usize = usize::MAX;

#[derive(Clone)]
struct State {
    phi: Vec<usize>,
    used: Vec<bool>,
    assigned: Vec<usize>,
    dom: Vec<Bits>,
}

struct Search<'a> {
    r1: &'a FusionRing,
    r2: &'a FusionRing,
    order1: Vec<usize>,
    order2: Vec<usize>,
    nodes: usize,
    budget: usize,
}

impl Search<'_> {
    fn propagate(&self, s: &mut State, mut pending: Vec<(usize, usize)>) -> bool {
        let r = self.r1.rank();
        let mut mask = Bits::empty(r);
        while let Some((a, b)) = pending.pop() {
            if s.phi[a] == b {
                continue;
            }
            if s.phi[a] != UNSET || s.used[b] || !s.dom[a].has(b) {
                return false;
            }
            s.phi[a] = b;
            s.used[b] = true;
            s.assigned.push(a);
            s.dom[a] = Bits::empty(r);
            s.dom[a].set(b);
            for x in 0..r {
                if s.phi[x] == UNSET && s.dom[x].has(b) {
                    s.dom[x].remove(b);
                    match s.dom[x].count() {
                        0 => return false,
                        1 => pending.push((x, s.dom[x].first().unwrap())),
                        _ => {}
                    }
                }
            }
            let (ad, bd) = (self.r1.dual(a), self.r2.dual(b));
            if !s.dom[ad].has(bd) {
                return false;
            }
            if s.phi[ad] == UNSET {
                pending.push((ad, bd));
            }
            for k in 0..s.assigned.len() {
                let y = s.assigned[k];
                let y2 = s.phi[y];
                for (p, q, p2, q2) in [(a, y, b, y2), (y, a, y2, b)] {
                    let lhs = self.r1.product(p, q);
                    let rhs = self.r2.product(p2, q2);
                    if lhs.len() != rhs.len() {
                        return false;
                    }
                    for &(c, n) in lhs {
                        mask.0.iter_mut().for_each(|w| *w = 0);
                        let mut any = false;
                        for &(d, m) in rhs {
                            if m == n {
                                mask.set(d);
                                any = true;
                            }
                        }
                        if !any {
                            return false;
                        }
                        s.dom[c].intersect(&mask);
                        match s.dom[c].count() {
                            0 => return false,
                            1 if s.phi[c] == UNSET => pending.push((c, s.dom[c].first().unwrap())),
                            _ => {}
                        }
                    }
                }
            }
        }
        true
    }

    fn search(&mut self, state: State) -> Result<Option<Vec<usize>>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BoundExceeded {
                what: "isomorphism search nodes",
                value: self.nodes,
                bound: self.budget,
            });
        }
        let pick = self
            .order1
            .iter()
            .copied()
            .filter(|&x| state.phi[x] == UNSET)
            .min_by_key(|&x| state.dom[x].count());
        let Some(x) = pick else {
            return Ok(verify_isomorphism(self.r1, self.r2, &state.phi).then(|| state.phi.clone()));
        };
        for k in 0..self.order2.len() {
            let d = self.order2[k];
            if !state.dom[x].has(d) {
                continue;
            }
            let mut next = state.clone();
            if self.propagate(&mut next, vec![(x, d)]) {
                if let Some(found) = self.search(next)? {
                    return Ok(Some(found));
                }
            }
        }
        Ok(None)
    }
}

/// Finds a basis bijection `phi` with `phi[i]` the image in `r2` of simple
/// `i` of `r1`, or `None` if the rings are not isomorphic.
///
/// Deterministic: variables are tried in the canonical order of `r1` and
/// candidates in the canonical order of `r2`.
pub fn ring_isomorphic(r1: &FusionRing, r2: &FusionRing, limits: &Limits) -> Result<Option<Vec<usize>>> {
    let combined = r1.rank() + r2.rank();
    if combined > limits.isomorphism_rank {
        return Err(Error::BoundExceeded {
            what: "combined rank",
            value: combined,
            bound: limits.isomorphism_rank,
        });
    }
    if r1.rank() != r2.rank() {
        return Ok(None);
    }
    let r = r1.rank();
    let (d1, d2) = (fp_dims(r1)?, fp_dims(r2)?);
    let f1 = fingerprints(r1, &d1.dims)?;
    let f2 = fingerprints(r2, &d2.dims)?;
    let (mut s1, mut s2) = (f1.clone(), f2.clone());
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return Ok(None);
    }
    let dom = (0..r)
        .map(|x| {
            let mut b = Bits::empty(r);
            for y in 0..r {
                if f1[x] == f2[y] {
                    b.set(y);
                }
            }
            b
        })
        .collect();
    let mut state = State {
        phi: vec![UNSET; r],
        used: vec![false; r],
        assigned: Vec::new(),
        dom,
    };
    let mut search = Search {
        r1,
        r2,
        order1: canonical_order(r1)?,
        order2: canonical_order(r2)?,
        nodes: 0,
        budget: limits.search_nodes,
    };
    if !search.propagate(&mut state, vec![(r1.unit(), r2.unit())]) {
        return Ok(None);
    }
    search.search(state)
}
