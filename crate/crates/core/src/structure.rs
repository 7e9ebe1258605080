//! Recovering `I_N ⊠ B` from a fusion ring with simple dimensions `{1, √2}`.
//!
//! The procedure mirrors the classification argument step by step: grade,
//! pick a non-invertible generator `Z`, translate the other non-invertible
//! components onto `Z`, split `⟨δ⟩` off the pointed part, check that `⟨Z⟩`
//! and the complement factor the ring, and identify `⟨Z⟩` with some `C_M`.
//! Every step re-checks what it relies on, so a ring that is not the fusion
//! ring of a braided category may fail at a named step.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::group::FiniteAbelianGroup;
use crate::nising::{build_cm, build_nising, verify_fact_cm, NIsingSpec};
use crate::pointed::RootOfUnity;
use crate::ring::{
    canonical_order, cd_set, deligne_product, gty_structure, invertibles, pointed_ring, require_valid,
    ring_isomorphic, subring_generated, universal_grading, ExactDim, FusionRing, Limits, Subring,
};
use crate::{Error, Result};

/// The step of [`decompose_gty`] that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecompositionStep {
    /// A generator component is neither one non-invertible nor two
    /// invertibles.
    Components,
    /// The invertibles do not act transitively on the non-invertibles.
    Transitivity,
    /// `Z_{i_1} ⊗ Z_{i_ℓ}*` does not have the shape `g ⊕ δg`.
    Translations,
    /// No complement of `⟨δ⟩` in `B̃`.
    Complement,
    /// No complement gives an exact factorization with `⟨Z⟩`.
    Factorization,
    /// `⟨Z⟩` is not `C_M` for the order `M` of its degree.
    CyclicPart,
    /// `I_N ⊠ B` is not isomorphic to the input.
    Reassembly,
}

impl DecompositionStep {
    pub fn name(self) -> &'static str {
        match self {
            Self::Components => "components",
            Self::Transitivity => "transitivity",
            Self::Translations => "translations",
            Self::Complement => "complement",
            Self::Factorization => "factorization",
            Self::CyclicPart => "cyclic-part",
            Self::Reassembly => "reassembly",
        }
    }
}

impl fmt::Display for DecompositionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The component `C_{e_i}` of a generator of the universal grading group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorBlock {
    /// One non-invertible simple `Z_i`.
    NonInvertible { index: usize, z: usize },
    /// Two invertibles `a_j`, `b_j` in canonical order.
    Invertible { index: usize, a: usize, b: usize },
}

impl GeneratorBlock {
    pub fn index(&self) -> usize {
        match *self {
            Self::NonInvertible { index, .. } | Self::Invertible { index, .. } => index,
        }
    }
}

/// Everything [`decompose_gty`] computed on the way; each field can be
/// re-checked against the input ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTrace {
    /// Invariant factors `d_1 | … | d_r` of the universal grading group.
    pub universal_factors: Vec<u64>,
    /// Degree of every simple in the universal grading group.
    pub degree: Vec<usize>,
    /// `e_1, …, e_r` as group element indices.
    pub generators: Vec<usize>,
    pub blocks: Vec<GeneratorBlock>,
    /// `Z = Z_{i_1}`.
    pub z: usize,
    /// The nontrivial invertible in `Z ⊗ Z*`.
    pub delta: usize,
    /// `g_1 = δ, g_2, …`, one per non-invertible block; `g_ℓ ⊗ Z_{i_ℓ} ≅ Z`.
    pub translations: Vec<usize>,
    /// Generators of `B̃`: the `a_j`, `b_j` and `g_ℓ`.
    pub b_tilde_generators: Vec<usize>,
    pub b_tilde: Vec<usize>,
    /// `B_0`, a complement of `⟨δ⟩` in `B̃`.
    pub complement: Vec<usize>,
    pub complement_factors: Vec<u64>,
    /// Simples of `⟨Z⟩`.
    pub z_subring: Vec<usize>,
    /// Order `M` of the degree of `Z`.
    pub cyclic_order: u64,
    /// Isomorphism `⟨Z⟩ → C_M`.
    pub cm_witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposed {
    pub trace: DecompositionTrace,
    pub n: u32,
    /// Odd part of `M`.
    pub m: u64,
    /// `G(B) ≅ Z_m × B_0`.
    pub b_group: FiniteAbelianGroup,
    pub b: FusionRing,
    /// Isomorphism `I_N ⊠ B → R`.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    Decomposed(Box<Decomposed>),
    NotDecomposable { step: DecompositionStep, reason: String },
}

impl Decomposition {
    pub fn decomposed(&self) -> Option<&Decomposed> {
        match self {
            Self::Decomposed(d) => Some(&**d),
            Self::NotDecomposable { .. } => None,
        }
    }
}

fn fail(step: DecompositionStep, reason: String) -> Result<Decomposition> {
    Ok(Decomposition::NotDecomposable { step, reason })
}

/// Checks the admission conditions: valid, commutative, not pointed, and
/// simple dimensions exactly `{1, √2}`.
fn admit(ring: &FusionRing) -> Result<()> {
    require_valid(ring)?;
    ring.require_commutative()?;
    if ring.is_pointed() {
        return Err(Error::PointedInput);
    }
    let cd = cd_set(ring)?;
    if cd != [ExactDim::ONE, ExactDim::SQRT2] {
        return Err(Error::Precondition(format!(
            "simple dimensions must be {{1, √2}}, got {{{}}}",
            cd.iter().map(|d| format!("{d}")).collect::<Vec<_>>().join(", ")
        )));
    }
    Ok(())
}

/// Decomposes `R` as `I_N ⊠ B` with `B` pointed, or names the step where
/// the construction breaks down.
///
/// Errors are reserved for inputs outside the admitted class: invalid,
/// non-commutative, pointed, or with simple dimensions other than `{1, √2}`.
pub fn decompose_gty(ring: &FusionRing, limits: &Limits) -> Result<Decomposition> {
    use DecompositionStep::*;
    admit(ring)?;
    let order = canonical_order(ring)?;
    let mut rank_of = vec![0; ring.rank()];
    for (k, &x) in order.iter().enumerate() {
        rank_of[x] = k;
    }
    let first = |xs: &mut dyn Iterator<Item = usize>| xs.min_by_key(|&x| rank_of[x]);

    // (a) universal grading and its generators
    let grading = universal_grading(ring)?;
    let group = grading.group.clone();
    let generators: Vec<usize> = (0..group.rank()).map(|i| group.generator(i)).collect();

    // (b) generator components
    let mut blocks = Vec::new();
    for (i, &e) in generators.iter().enumerate() {
        let comp = grading.component(e);
        let block = match *comp.as_slice() {
            [z] if !ring.is_invertible(z) => GeneratorBlock::NonInvertible { index: i, z },
            [x, y] if ring.is_invertible(x) && ring.is_invertible(y) => {
                let (a, b) = if rank_of[x] <= rank_of[y] { (x, y) } else { (y, x) };
                GeneratorBlock::Invertible { index: i, a, b }
            }
            _ => {
                return fail(
                    Components,
                    format!("component of generator e_{} has {} simples of the wrong kind", i + 1, comp.len()),
                )
            }
        };
        blocks.push(block);
    }
    let zs: Vec<usize> = blocks
        .iter()
        .filter_map(|b| match *b {
            GeneratorBlock::NonInvertible { z, .. } => Some(z),
            GeneratorBlock::Invertible { .. } => None,
        })
        .collect();
    let Some(&z) = zs.first() else {
        return fail(Components, "no generator component is non-invertible".into());
    };

    if !gty_structure(ring)?.action_transitive {
        return fail(Transitivity, "invertibles do not act transitively on non-invertibles".into());
    }

    // (c) translations g_ℓ with Z_{i_1} ⊗ Z_{i_ℓ}* = g_ℓ ⊕ δ g_ℓ
    let zz = ring.product(z, ring.dual(z));
    let delta = match zz {
        &[(c1, 1), (c2, 1)] if c1 == ring.unit() || c2 == ring.unit() => {
            if c1 == ring.unit() {
                c2
            } else {
                c1
            }
        }
        _ => return fail(Translations, format!("{} ⊗ {}* is not 1 ⊕ δ", ring.label(z), ring.label(z))),
    };
    let mut translations = vec![delta];
    for &zl in &zs[1..] {
        let prod = ring.product(z, ring.dual(zl));
        let shape_ok = prod.len() == 2
            && prod.iter().all(|&(c, n)| n == 1 && ring.is_invertible(c))
            && ring.simple_product(delta, prod[0].0) == Some(prod[1].0);
        if !shape_ok {
            return fail(
                Translations,
                format!("{} ⊗ {}* is not g ⊕ δg", ring.label(z), ring.label(zl)),
            );
        }
        let g = first(&mut prod.iter().map(|&(c, _)| c)).expect("two constituents");
        if ring.simple_product(g, zl) != Some(z) {
            return fail(
                Translations,
                format!("{} ⊗ {} is not {}", ring.label(g), ring.label(zl), ring.label(z)),
            );
        }
        translations.push(g);
    }

    // (d) B̃
    let mut b_tilde_generators: Vec<usize> = blocks
        .iter()
        .flat_map(|b| match *b {
            GeneratorBlock::Invertible { a, b, .. } => vec![a, b],
            GeneratorBlock::NonInvertible { .. } => vec![],
        })
        .collect();
    b_tilde_generators.extend(&translations);
    let b_tilde = subring_generated(ring, &b_tilde_generators)?;

    // (e) complements of ⟨δ⟩ in B̃
    let b_ring = b_tilde.to_ring(ring);
    let b_inv = invertibles(&b_ring)?;
    let Some(b_dec) = b_inv.decomposition.as_ref().filter(|_| b_inv.order() == b_ring.rank()) else {
        return fail(Complement, "B̃ is not a pointed abelian ring".into());
    };
    let delta_local = b_tilde.simples().binary_search(&delta).expect("δ generates B̃");
    let delta_pos = b_inv.position(delta_local).expect("δ is invertible");
    let complements = b_dec.index_two_subgroups_avoiding(delta_pos);
    if complements.is_empty() {
        return fail(Complement, "⟨δ⟩ has no complement in B̃".into());
    }

    // (f) exact factorization with ⟨Z⟩
    let z_subring = subring_generated(ring, &[z])?;
    let mut chosen = None;
    for kernel in &complements {
        let simples: Vec<usize> = kernel.iter().map(|&p| b_tilde.simples()[b_inv.elements[p]]).collect();
        let candidate = subring_generated(ring, &simples)?;
        if exact_factorization_check(ring, &z_subring, &candidate).holds() {
            chosen = Some(candidate);
            break;
        }
    }
    let Some(complement) = chosen else {
        return fail(
            Factorization,
            format!("none of the {} complements factors the ring with ⟨Z⟩", complements.len()),
        );
    };
    let complement_group = invertibles(&complement.to_ring(ring))?
        .group()
        .cloned()
        .expect("a subgroup of an abelian group is abelian");

    // (g) ⟨Z⟩ ≅ C_M ≅ I_N ⊠ pointed(Z_m)
    let cyclic_order = group.element_order(grading.degree[z]);
    if cyclic_order % 2 != 0 {
        return fail(CyclicPart, format!("degree of Z has odd order {cyclic_order}"));
    }
    let z_ring = z_subring.to_ring(ring);
    let cm = build_cm(cyclic_order)?;
    let Some(cm_witness) = ring_isomorphic(&z_ring, &cm.ring, limits)? else {
        return fail(CyclicPart, format!("⟨Z⟩ is not isomorphic to C_{cyclic_order}"));
    };
    let fact = verify_fact_cm(cyclic_order, limits)?;
    if !fact.holds() {
        return fail(CyclicPart, format!("C_{cyclic_order} does not split off I_{}", fact.n));
    }
    let (n, m) = (fact.n, fact.m);

    let mut orders = vec![m];
    orders.extend(complement_group.factors());
    let b_group = FiniteAbelianGroup::from_cyclic_orders(&orders);
    let b = pointed_ring(&b_group);
    let spec = NIsingSpec::new(n, RootOfUnity::ONE)?;
    let assembled = deligne_product(build_nising(spec).ring(), &b);
    let Some(witness) = ring_isomorphic(&assembled, ring, limits)? else {
        return fail(Reassembly, format!("I_{n} ⊠ pointed({b_group}) is not isomorphic to the input"));
    };

    Ok(Decomposition::Decomposed(Box::new(Decomposed {
        trace: DecompositionTrace {
            universal_factors: group.factors().to_vec(),
            degree: grading.degree.clone(),
            generators,
            blocks,
            z,
            delta,
            translations,
            b_tilde_generators,
            b_tilde: b_tilde.simples().to_vec(),
            complement: complement.simples().to_vec(),
            complement_factors: complement_group.factors().to_vec(),
            z_subring: z_subring.simples().to_vec(),
            cyclic_order,
            cm_witness,
        },
        n,
        m,
        b_group,
        b,
        witness,
    })))
}

/// Why `(X, g) ↦ X ⊗ g` fails to be a bijection onto the simples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorizationFailure {
    /// `g` is not invertible.
    NotPointed { g: usize },
    /// `X ⊗ g` is not simple.
    NotSimple { x: usize, g: usize },
    /// Two pairs land on the same simple.
    Collision { first: (usize, usize), second: (usize, usize), simple: usize },
    /// No pair reaches this simple.
    Unreached { simple: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationCheck {
    pub counterexample: Option<FactorizationFailure>,
}

impl FactorizationCheck {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Whether every simple of `R` is `X ⊗ g` for exactly one `X ∈ A` and one
/// `g ∈ B`, with `B` pointed.
pub fn exact_factorization_check(ring: &FusionRing, a: &Subring, b: &Subring) -> FactorizationCheck {
    let check = |counterexample| FactorizationCheck { counterexample };
    if let Some(&g) = b.simples().iter().find(|&&g| !ring.is_invertible(g)) {
        return check(Some(FactorizationFailure::NotPointed { g }));
    }
    let mut hit: Vec<Option<(usize, usize)>> = vec![None; ring.rank()];
    for &x in a.simples() {
        for &g in b.simples() {
            let Some(y) = ring.simple_product(x, g) else {
                return check(Some(FactorizationFailure::NotSimple { x, g }));
            };
            if let Some(prev) = hit[y] {
                return check(Some(FactorizationFailure::Collision {
                    first: prev,
                    second: (x, g),
                    simple: y,
                }));
            }
            hit[y] = Some((x, g));
        }
    }
    check(hit.iter().position(Option::is_none).map(|simple| FactorizationFailure::Unreached { simple }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CyclicFamily {
    /// `R ≅ C_M`; `witness` maps simples of `R` to simples of `C_M`.
    Cm { witness: Vec<usize> },
    Unknown {
        /// `G(R)` is cyclic of order `M`, which rules out `C_M` and marks
        /// the ring as one that carries no braiding.
        invertibles_cyclic: bool,
        not_braidable: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicIdentification {
    /// Order of the universal grading group.
    pub m: u64,
    pub family: CyclicFamily,
}

/// Identifies a ring with simple dimensions `{1, √2}` and cyclic universal
/// grading of order `M` as `C_M` when possible.
pub fn cyclic_extension_identify(ring: &FusionRing, limits: &Limits) -> Result<CyclicIdentification> {
    admit(ring)?;
    let grading = universal_grading(ring)?;
    if !grading.group.is_cyclic() {
        return Err(Error::Precondition(format!(
            "universal grading group {} is not cyclic",
            grading.group
        )));
    }
    let m = grading.group.order() as u64;
    if !m.is_multiple_of(2) {
        return Err(Error::Precondition(format!("universal grading has odd order {m}")));
    }
    let cm = build_cm(m)?;
    let family = match ring_isomorphic(ring, &cm.ring, limits)? {
        Some(witness) => CyclicFamily::Cm { witness },
        None => {
            let inv = invertibles(ring)?;
            let invertibles_cyclic = inv.group().is_some_and(|g| g.is_cyclic() && g.order() as u64 == m);
            CyclicFamily::Unknown {
                invertibles_cyclic,
                not_braidable: invertibles_cyclic,
            }
        }
    };
    Ok(CyclicIdentification { m, family })
}
