//! Quadratic forms on finite abelian groups.

use alloc::vec;
use alloc::vec::Vec;

use super::RootOfUnity;
use crate::group::{CayleyTable, FiniteAbelianGroup};
use crate::num::gcd;
use crate::ring::Limits;
use crate::{Error, Result};

/// A map `q: G → μ_∞`, indexed by group element. Whether it is actually
/// quadratic is checked by [`QuadraticForm::is_quadratic`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    group: FiniteAbelianGroup,
    values: Vec<RootOfUnity>,
}

/// Müger-center type of a premetric group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CenterClass {
    /// Trivial radical.
    NonDegenerate,
    /// Radical `{0, u}` with `q(u) = -1`.
    SlightlyDegenerate { u: usize },
    /// Some nonzero radical element `g` has `q(g) = 1`.
    ContainsTannakian { witness: usize },
    SymmetricOther,
}

impl QuadraticForm {
    pub fn new(group: FiniteAbelianGroup, values: Vec<RootOfUnity>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::Malformed(alloc::format!(
                "{} values for a group of order {}",
                values.len(),
                group.order()
            )));
        }
        Ok(Self { group, values })
    }

    pub fn from_fn(group: FiniteAbelianGroup, f: impl Fn(usize) -> RootOfUnity) -> Self {
        let values = group.elements().map(f).collect();
        Self { group, values }
    }

    /// The form identically 1.
    pub fn trivial(group: FiniteAbelianGroup) -> Self {
        Self::from_fn(group, |_| RootOfUnity::ONE)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn values(&self) -> &[RootOfUnity] {
        &self.values
    }

    pub fn value(&self, g: usize) -> RootOfUnity {
        self.values[g]
    }

    /// `β(a, b) = q(a + b) q(a)⁻¹ q(b)⁻¹`.
    pub fn beta(&self, a: usize, b: usize) -> RootOfUnity {
        self.values[self.group.add(a, b)] * self.values[a].inv() * self.values[b].inv()
    }

    /// `q(g) = q(-g)` everywhere and `β` is additive in each argument.
    pub fn is_quadratic(&self) -> bool {
        let g = &self.group;
        let n = g.order();
        if (0..n).any(|a| self.values[a] != self.values[g.neg(a)]) {
            return false;
        }
        let sums: Vec<usize> = (0..n * n).map(|ab| g.add(ab / n, ab % n)).collect();
        let beta = |a: usize, b: usize| self.values[sums[a * n + b]] * self.values[a].inv() * self.values[b].inv();
        // symmetric by construction; additivity in the first slot suffices
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = sums[a * n + b];
                (0..n).all(|c| beta(ab, c) == beta(a, c) * beta(b, c))
            })
        })
    }

    /// `{g : β(g, h) = 1 for all h}`, ascending.
    pub fn radical(&self) -> Vec<usize> {
        let n = self.group.order();
        (0..n).filter(|&g| (0..n).all(|h| self.beta(g, h).is_one())).collect()
    }

    pub fn classify_center(&self) -> CenterClass {
        let radical = self.radical();
        if radical.len() == 1 {
            return CenterClass::NonDegenerate;
        }
        if let Some(&witness) = radical.iter().skip(1).find(|&&g| self.values[g].is_one()) {
            return CenterClass::ContainsTannakian { witness };
        }
        if radical.len() == 2 && self.values[radical[1]] == RootOfUnity::MINUS_ONE {
            return CenterClass::SlightlyDegenerate { u: radical[1] };
        }
        CenterClass::SymmetricOther
    }

    /// `q ∘ phi`, where `phi` maps element indices to element indices.
    pub fn pullback(&self, phi: &[usize]) -> Self {
        Self::from_fn(self.group.clone(), |g| self.values[phi[g]])
    }

    /// Restriction to a subgroup given by its elements. Returns the form on
    /// the subgroup's invariant-factor group together with the embedding
    /// (subgroup element index ↦ element of this group).
    pub fn restrict(&self, subgroup: &[usize]) -> Result<(QuadraticForm, Vec<usize>)> {
        let k = subgroup.len();
        let mut pos = vec![usize::MAX; self.group.order()];
        for (i, &x) in subgroup.iter().enumerate() {
            pos[x] = i;
        }
        let mut table = Vec::with_capacity(k * k);
        for &x in subgroup {
            for &y in subgroup {
                let z = pos[self.group.add(x, y)];
                if z == usize::MAX {
                    return Err(Error::Precondition("set is not a subgroup".into()));
                }
                table.push(z);
            }
        }
        let identity = pos[self.group.identity()];
        if identity == usize::MAX {
            return Err(Error::Precondition("set is not a subgroup".into()));
        }
        let dec = CayleyTable::new(k, identity, table)?
            .abelian_decomposition()
            .expect("subgroups of abelian groups are abelian");
        let embedding: Vec<usize> = dec.group().elements().map(|i| subgroup[dec.from_group(i)]).collect();
        let form = Self::from_fn(dec.group().clone(), |i| self.values[embedding[i]]);
        Ok((form, embedding))
    }
}

/// Canonical generator images determine an endomorphism; this expands
/// them to a full element map.
fn expand(group: &FiniteAbelianGroup, images: &[usize]) -> Vec<usize> {
    group
        .elements()
        .map(|g| {
            group
                .residues(g)
                .iter()
                .zip(images)
                .fold(group.identity(), |acc, (&x, &img)| group.add(acc, group.scale(x as i64, img)))
        })
        .collect()
}

fn check_order(group: &FiniteAbelianGroup, limits: &Limits) -> Result<()> {
    if group.order() > limits.group_order {
        return Err(Error::BoundExceeded {
            what: "group order",
            value: group.order(),
            bound: limits.group_order,
        });
    }
    Ok(())
}

/// Backtracking over images of the canonical generators. `accept(i, img,
/// images)` prunes partial assignments; full assignments are kept when
/// bijective.
struct AutSearch<'a> {
    group: &'a FiniteAbelianGroup,
    candidates: Vec<Vec<usize>>,
    accept: &'a dyn Fn(usize, usize, &[usize]) -> bool,
    first_only: bool,
    nodes: usize,
    budget: usize,
    images: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl AutSearch<'_> {
    fn run(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BoundExceeded {
                what: "automorphism search nodes",
                value: self.nodes,
                bound: self.budget,
            });
        }
        let i = self.images.len();
        if i == self.candidates.len() {
            let map = expand(self.group, &self.images);
            let mut seen = vec![false; map.len()];
            if map.iter().all(|&x| !core::mem::replace(&mut seen[x], true)) {
                self.out.push(map);
            }
            return Ok(());
        }
        for k in 0..self.candidates[i].len() {
            let img = self.candidates[i][k];
            if !(self.accept)(i, img, &self.images) {
                continue;
            }
            self.images.push(img);
            self.run()?;
            self.images.pop();
            if self.first_only && !self.out.is_empty() {
                return Ok(());
            }
        }
        Ok(())
    }
}

fn search_automorphisms(
    group: &FiniteAbelianGroup,
    limits: &Limits,
    accept: &dyn Fn(usize, usize, &[usize]) -> bool,
    first_only: bool,
) -> Result<Vec<Vec<usize>>> {
    // candidate images of e_i: elements whose order divides d_i
    let candidates = group
        .factors()
        .iter()
        .map(|&d| group.elements().filter(|&g| d % group.element_order(g) == 0).collect())
        .collect();
    let mut search = AutSearch {
        group,
        candidates,
        accept,
        first_only,
        nodes: 0,
        budget: limits.search_nodes,
        images: Vec::new(),
        out: Vec::new(),
    };
    search.run()?;
    Ok(search.out)
}

/// All automorphisms of `G` as element maps, in lexicographic order of
/// generator images.
pub fn automorphisms(group: &FiniteAbelianGroup, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    check_order(group, limits)?;
    search_automorphisms(group, limits, &|_, _, _| true, false)
}

/// An automorphism `φ` with `q2 ∘ φ = q1`, or `None`.
pub fn premetric_equivalent(q1: &QuadraticForm, q2: &QuadraticForm, limits: &Limits) -> Result<Option<Vec<usize>>> {
    if q1.group != q2.group {
        return Err(Error::Precondition("forms live on different groups".into()));
    }
    let group = &q1.group;
    check_order(group, limits)?;
    let gens: Vec<usize> = (0..group.rank()).map(|i| group.generator(i)).collect();
    let accept = |i: usize, img: usize, images: &[usize]| {
        q2.value(img) == q1.value(gens[i])
            && images
                .iter()
                .enumerate()
                .all(|(j, &prev)| q2.beta(prev, img) == q1.beta(gens[j], gens[i]))
    };
    let found = search_automorphisms(group, limits, &accept, true)?;
    Ok(found
        .into_iter()
        .find(|phi| group.elements().all(|g| q2.value(phi[g]) == q1.value(g))))
}

/// Every quadratic form on `G`.
///
/// A form is determined by `q(e_i)`, of order dividing `gcd(d_i², 2d_i)`,
/// and `β(e_i, e_j)` for `i < j`, of order dividing `gcd(d_i, d_j)`, via
/// `q(Σ x_i e_i) = Π q(e_i)^{x_i²} Π_{i<j} β(e_i, e_j)^{x_i x_j}`. Each
/// candidate is re-checked with [`QuadraticForm::is_quadratic`].
pub fn enumerate_quadratic_forms(group: &FiniteAbelianGroup, limits: &Limits) -> Result<Vec<QuadraticForm>> {
    check_order(group, limits)?;
    let d = group.factors();
    let r = d.len();
    let mut slots: Vec<u64> = d.iter().map(|&di| gcd(di * di, 2 * di)).collect();
    let mut pairs = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            slots.push(gcd(d[i], d[j]));
            pairs.push((i, j));
        }
    }
    let total: u128 = slots.iter().map(|&s| u128::from(s)).product();
    if total > limits.search_nodes as u128 {
        return Err(Error::BoundExceeded {
            what: "quadratic form count",
            value: usize::try_from(total).unwrap_or(usize::MAX),
            bound: limits.search_nodes,
        });
    }
    let residues: Vec<Vec<u64>> = group.elements().map(|g| group.residues(g)).collect();
    let mut out = Vec::with_capacity(total as usize);
    let mut choice = vec![0u64; slots.len()];
    loop {
        let q = QuadraticForm::from_fn(group.clone(), |g| {
            let x = &residues[g];
            let mut v = RootOfUnity::ONE;
            for i in 0..r {
                v = v * RootOfUnity::new((choice[i] * x[i] * x[i]) as i64, slots[i]);
            }
            for (k, &(i, j)) in pairs.iter().enumerate() {
                v = v * RootOfUnity::new((choice[r + k] * x[i] * x[j]) as i64, slots[r + k]);
            }
            v
        });
        if q.is_quadratic() {
            out.push(q);
        }
        // odometer over the slot choices
        let mut k = 0;
        loop {
            if k == slots.len() {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < slots[k] {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// A splitting `(G, q) ≅ (⟨u⟩, q|) × (H, q|)` with `q(u) = -1`, `u` in the
/// radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvectSplit {
    pub u: usize,
    /// Elements of the complement `H`, ascending.
    pub complement: Vec<usize>,
    /// `q` restricted to `H`, on the invariant-factor group of `H`.
    pub restricted: QuadraticForm,
    /// Element of `restricted.group()` ↦ element of `G`.
    pub embedding: Vec<usize>,
}

/// Splits off a copy of the super-vector-space form: a radical element `u`
/// of order 2 with `q(u) = -1` and an index-2 complement `H` of `⟨u⟩`.
/// Candidates `u` are tried in ascending order and complements in a fixed
/// order; the first split that re-verifies is returned.
pub fn split_svect_factor(q: &QuadraticForm) -> Option<SvectSplit> {
    let group = &q.group;
    let decomposition = group.cayley().abelian_decomposition()?;
    for u in q.radical() {
        if group.element_order(u) != 2 || q.value(u) != RootOfUnity::MINUS_ONE {
            continue;
        }
        // table elements of the Cayley table are the group's own indices
        for complement in decomposition.index_two_subgroups_avoiding(u) {
            let reconstitutes = complement.iter().all(|&h| q.value(group.add(u, h)) == q.value(u) * q.value(h));
            if !reconstitutes {
                continue;
            }
            let Ok((restricted, embedding)) = q.restrict(&complement) else {
                continue;
            };
            return Some(SvectSplit {
                u,
                complement,
                restricted,
                embedding,
            });
        }
    }
    None
}
