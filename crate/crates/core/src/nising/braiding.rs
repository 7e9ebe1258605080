//! Braidings on `I_N` induced from `Ising ⊠ vec^ζ_{Z_{2^N}}`, tracked only
//! through squared-braiding scalars and quadratic forms.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::families::{build_ising, build_nising, CmBasis, NIsingSpec};
use crate::group::FiniteAbelianGroup;
use crate::pointed::{enumerate_braidings, quadratic_from_xi, CenterClass, QuadraticForm, RootOfUnity};
use crate::ring::{fp_dims, subring_generated, subring_lattice, Limits};
use crate::{Error, Result};

const DELTA: u8 = 1;
const Z: u8 = 2;

/// Squared-braiding invariants of a non-degenerate Ising braiding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IsingPairing {
    /// `c_{Z,δ} c_{δ,Z}` as a scalar.
    pub s_delta_z: RootOfUnity,
    /// `q(δ)`; the pointed part of an Ising category is super-vector spaces.
    pub q_delta: RootOfUnity,
}

impl IsingPairing {
    /// Computes `s_delta_z` by a centralizer count.
    ///
    /// In a non-degenerate braided category `FPdim(D) FPdim(D') = FPdim(C)`,
    /// so `⟨δ⟩'` is a subring of Frobenius–Perron dimension `4 / 2 = 2`.
    /// The Ising ring has exactly one such subring and it does not contain
    /// `Z`, hence `Z` does not centralize `δ`. Since `δ ⊗ δ = 1` the scalar
    /// squares to 1, which leaves `-1`.
    pub fn derive() -> Result<Self> {
        let ising = build_ising();
        let (delta, z) = (1, 2);
        let dims = fp_dims(&ising)?;
        let total = dims.total.as_exact().ok_or_else(|| Error::Precondition("Ising dimension is not exact".into()))?;
        let generated = subring_generated(&ising, &[delta])?;
        let d = dims
            .total_of(generated.simples())
            .as_exact()
            .expect("exact dims give exact totals");
        let lattice = subring_lattice(&ising, &Limits::default())?;
        let candidates: Vec<_> = lattice
            .subrings
            .iter()
            .filter(|s| dims.total_of(s.simples()).as_exact().map(|t| t * d) == Some(total))
            .collect();
        let [centralizer] = candidates.as_slice() else {
            return Err(Error::Precondition(format!(
                "expected one candidate centralizer, found {}",
                candidates.len()
            )));
        };
        let square_is_trivial = ising.simple_product(delta, delta) == Some(ising.unit());
        let s_delta_z = if centralizer.contains(z) {
            RootOfUnity::ONE
        } else if square_is_trivial {
            RootOfUnity::MINUS_ONE
        } else {
            return Err(Error::Precondition("δ ⊗ δ is not the unit".into()));
        };
        Ok(Self {
            s_delta_z,
            q_delta: RootOfUnity::MINUS_ONE,
        })
    }

    /// Squared braiding between Ising simples coded 0 (1), 1 (δ), 2 (Z).
    /// `(Z, Z)` is not a scalar and is reported as 1 at the grading level.
    pub fn s(&self, y: u8, y2: u8) -> RootOfUnity {
        match (y, y2) {
            (DELTA, Z) | (Z, DELTA) => self.s_delta_z,
            _ => RootOfUnity::ONE,
        }
    }

    pub fn q(&self, y: u8) -> RootOfUnity {
        if y == DELTA {
            self.q_delta
        } else {
            RootOfUnity::ONE
        }
    }
}

/// Squared-braiding data of `I_N` inside `Ising ⊠ vec^ζ_{Z_{2^N}}`, with the
/// pointed factor braided by `σ_ξ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InducedBraiding {
    n: u32,
    pub ising: IsingPairing,
    pub xi: RootOfUnity,
}

impl InducedBraiding {
    /// Requires `ξ^{2^{N+1}} = 1`; then `ζ = ξ^{2^N}` is `±1`.
    pub fn new(n: u32, ising: IsingPairing, xi: RootOfUnity) -> Result<Self> {
        NIsingSpec::new(n, RootOfUnity::ONE)?;
        if !xi.pow(1i64 << (n + 1)).is_one() {
            return Err(Error::InvalidParameter(format!("ξ = {xi} is not a 2^{}-th root of unity", n + 1)));
        }
        Ok(Self { n, ising, xi })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        1 << self.n
    }

    pub fn zeta(&self) -> RootOfUnity {
        self.xi.pow(self.modulus() as i64)
    }

    fn basis(&self) -> CmBasis {
        CmBasis::new(self.modulus()).expect("2^N is even")
    }

    /// `s(Y, Y') ξ^{2ij}` for `Y ⊠ i`, `Y' ⊠ j`.
    pub fn squared_braiding(&self, y: u8, i: u64, y2: u8, j: u64) -> RootOfUnity {
        let m = self.modulus();
        self.ising.s(y, y2) * self.xi.pow(((2 * (i % m) * (j % m)) % (2 * m)) as i64)
    }

    /// `q(Y ⊠ i) = q_I(Y) ξ^{i²}` on invertibles.
    pub fn q(&self, y: u8, i: u64) -> RootOfUnity {
        let m = self.modulus();
        let i = i % m;
        self.ising.q(y) * self.xi.pow(((i * i) % (2 * m)) as i64)
    }

    /// The group `G(I_N) = Z_2 × Z_{2^{N-1}}`, element `(e, j)` standing for
    /// `δ^e ⊠ 2j`, with the induced quadratic form and the map from group
    /// elements to simples of `I_N`.
    pub fn pointed_form(&self) -> (QuadraticForm, Vec<usize>) {
        let basis = self.basis();
        let group = FiniteAbelianGroup::from_cyclic_orders(&[2, basis.half()]);
        let coords = |g: usize| -> (u64, u64) {
            let r = group.residues(g);
            (r[0], r.get(1).copied().unwrap_or(0))
        };
        let form = QuadraticForm::from_fn(group.clone(), |g| {
            let (e, j) = coords(g);
            self.q(e as u8, 2 * j)
        });
        let simples = group
            .elements()
            .map(|g| {
                let (e, j) = coords(g);
                basis.invertible(e, j)
            })
            .collect();
        (form, simples)
    }
}

/// One entry of the squared-braiding table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquaredBraidingEntry {
    pub value: RootOfUnity,
    /// Both simples are non-invertible: the double braiding is not a
    /// scalar and `value` is the grading-level pairing only.
    pub projective_only: bool,
}

/// Squared braidings over all pairs of simples of `I_N`, indexed like the
/// ring from `build_nising`.
pub fn squared_braiding_table(br: &InducedBraiding) -> Vec<Vec<SquaredBraidingEntry>> {
    let basis = br.basis();
    let r = basis.rank();
    (0..r)
        .map(|x| {
            let (y, i) = basis.decode(x);
            (0..r)
                .map(|x2| {
                    let (y2, j) = basis.decode(x2);
                    SquaredBraidingEntry {
                        value: br.squared_braiding(y, i, y2, j),
                        projective_only: y == Z && y2 == Z,
                    }
                })
                .collect()
        })
        .collect()
}

/// Müger center of `I_N` with an induced braiding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedCenter {
    /// Simples of the center, ascending.
    pub center: Vec<usize>,
    /// Witness indices refer to simples of `I_N`.
    pub class: CenterClass,
    /// `q(δ ⊠ 0) = -1`: the adjoint subring carries the super-vector-space
    /// form.
    pub adjoint_is_svect: bool,
    /// The radical of the induced form on the pointed part equals
    /// `⟨δ ⊠ 0⟩ ∨ center`.
    pub radical_matches: bool,
}

/// The center is read off from the generator: an invertible lies in the
/// center iff its squared braiding with `Z ⊠ 1` is 1, because `Z ⊠ 1`
/// generates the ring and the center is pointed.
pub fn induced_center(br: &InducedBraiding) -> Result<InducedCenter> {
    let basis = br.basis();
    let (form, simples) = br.pointed_form();
    let group = form.group().clone();
    let center_elems: Vec<usize> = group
        .elements()
        .filter(|&g| {
            let (y, i) = basis.decode(simples[g]);
            br.squared_braiding(y, i, Z, 1).is_one()
        })
        .collect();
    let (restricted, embedding) = form.restrict(&center_elems)?;
    let to_simple = |h: usize| simples[embedding[h]];
    let class = match restricted.classify_center() {
        CenterClass::SlightlyDegenerate { u } => CenterClass::SlightlyDegenerate { u: to_simple(u) },
        CenterClass::ContainsTannakian { witness } => CenterClass::ContainsTannakian {
            witness: to_simple(witness),
        },
        other => other,
    };

    let delta0 = simples.iter().position(|&s| s == basis.invertible(1, 0)).expect("δ ⊠ 0 is pointed");
    let adjoint_is_svect = form.value(delta0) == RootOfUnity::MINUS_ONE;
    let mut generated = vec![false; group.order()];
    generated[group.identity()] = true;
    let mut members = vec![group.identity()];
    let gens: Vec<usize> = center_elems.iter().copied().chain([delta0]).collect();
    let mut k = 0;
    while k < members.len() {
        for &g in &gens {
            let h = group.add(members[k], g);
            if !core::mem::replace(&mut generated[h], true) {
                members.push(h);
            }
        }
        k += 1;
    }
    members.sort_unstable();
    let radical_matches = form.radical() == members;

    let mut center: Vec<usize> = center_elems.iter().map(|&g| simples[g]).collect();
    center.sort_unstable();
    Ok(InducedCenter {
        center,
        class,
        adjoint_is_svect,
        radical_matches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyRow {
    pub xi: RootOfUnity,
    pub class: CenterClass,
    pub slightly_degenerate: bool,
    /// The form `ξ^{j²}` on `Z_{2^N}` has trivial radical.
    pub pointed_nondegenerate: bool,
}

impl DegeneracyRow {
    pub fn agrees(&self) -> bool {
        self.slightly_degenerate == self.pointed_nondegenerate
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyTable {
    pub n: u32,
    pub zeta: RootOfUnity,
    pub rows: Vec<DegeneracyRow>,
    /// The equivalence is claimed only for `N > 2`.
    pub asserted: bool,
}

impl DegeneracyTable {
    pub fn holds(&self) -> bool {
        !self.asserted || self.rows.iter().all(DegeneracyRow::agrees)
    }
}

/// For every `ξ` with `ξ^{2^N} = ζ`, compares "the induced braiding on
/// `I_N` is slightly degenerate" with "the braiding `σ_ξ` on `Z_{2^N}` is
/// non-degenerate".
pub fn degeneracy_criterion(n: u32, zeta: RootOfUnity, pairing: IsingPairing) -> Result<DegeneracyTable> {
    if zeta != RootOfUnity::ONE && zeta != RootOfUnity::MINUS_ONE {
        return Err(Error::InvalidParameter(format!("ζ must be ±1, got {zeta}")));
    }
    let spec = NIsingSpec::new(n, zeta)?;
    let mut rows = Vec::new();
    for b in enumerate_braidings(spec.modulus(), zeta)? {
        let br = InducedBraiding::new(n, pairing, b.xi())?;
        let center = induced_center(&br)?;
        rows.push(DegeneracyRow {
            xi: b.xi(),
            class: center.class,
            slightly_degenerate: matches!(center.class, CenterClass::SlightlyDegenerate { .. }),
            pointed_nondegenerate: quadratic_from_xi(&b).radical().len() == 1,
        });
    }
    Ok(DegeneracyTable {
        n,
        zeta,
        rows,
        asserted: n > 2,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwistVerdict {
    Admits,
    RuledOut { reason: String },
    Unknown,
}

/// Whether `I_{N,ζ}` can carry a braiding, from the obstructions on its
/// pointed part.
pub fn twist_obstruction(spec: NIsingSpec) -> Result<TwistVerdict> {
    let zeta = spec.zeta();
    if zeta == RootOfUnity::ONE || zeta == RootOfUnity::MINUS_ONE {
        return Ok(TwistVerdict::Admits);
    }
    // the twist restricted to ⟨1 ⊠ 2⟩ ≅ Z_{2^{N-1}} is ω_{ζ²}
    let sub = spec.modulus() / 2;
    let square = zeta * zeta;
    let restricted = enumerate_braidings(sub, square)?;
    if restricted.is_empty() {
        return Ok(TwistVerdict::RuledOut {
            reason: format!("ω_{{ζ²}} with ζ² = {square} on Z_{sub} admits no braiding"),
        });
    }
    if spec.n() == 2 {
        let all_nondegenerate = restricted.iter().all(|b| quadratic_from_xi(b).radical().len() == 1);
        if all_nondegenerate {
            return Ok(TwistVerdict::RuledOut {
                reason: format!(
                    "every braiding of ⟨1⊠2⟩ with twist {square} is non-degenerate, contradicting primeness"
                ),
            });
        }
    }
    Ok(TwistVerdict::Unknown)
}

/// Every braided `I_N` from an induced braiding contains no non-trivial
/// pointed subring on which the induced form is non-degenerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimenessReport {
    pub n: u32,
    pub braidings_checked: usize,
    pub subrings_checked: usize,
    /// First `(ξ, subring simples)` carrying a non-degenerate form.
    pub counterexample: Option<(RootOfUnity, Vec<usize>)>,
    /// Non-pointed subrings other than the whole ring.
    pub proper_nonpointed: usize,
}

impl PrimenessReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none() && self.proper_nonpointed == 0
    }
}

pub fn verify_primeness(n: u32, pairing: IsingPairing, limits: &Limits) -> Result<PrimenessReport> {
    let spec = NIsingSpec::new(n, RootOfUnity::ONE)?;
    let ni = build_nising(spec);
    let ring = ni.ring();
    let lattice = subring_lattice(ring, limits)?;
    let proper_nonpointed = lattice.proper().filter(|s| !s.is_pointed(ring)).count();
    let pointed: Vec<_> = lattice
        .subrings
        .iter()
        .filter(|s| !s.is_trivial() && s.is_pointed(ring))
        .collect();
    let mut report = PrimenessReport {
        n,
        braidings_checked: 0,
        subrings_checked: 0,
        counterexample: None,
        proper_nonpointed,
    };
    for zeta in [RootOfUnity::ONE, RootOfUnity::MINUS_ONE] {
        for b in enumerate_braidings(spec.modulus(), zeta)? {
            let br = InducedBraiding::new(n, pairing, b.xi())?;
            let (form, simples) = br.pointed_form();
            report.braidings_checked += 1;
            for s in &pointed {
                let elems: Vec<usize> = s
                    .simples()
                    .iter()
                    .map(|x| simples.iter().position(|y| y == x).expect("pointed simples are in G"))
                    .collect();
                let (restricted, _) = form.restrict(&elems)?;
                report.subrings_checked += 1;
                if report.counterexample.is_none() && restricted.radical().len() == 1 {
                    report.counterexample = Some((b.xi(), s.simples().to_vec()));
                }
            }
        }
    }
    Ok(report)
}
