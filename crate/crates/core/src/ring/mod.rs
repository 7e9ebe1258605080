//! Fusion rings: based rings with a unit, a duality involution and
//! nonnegative integer structure constants `N_{ab}^c`.
//!
//! Products are stored sparsely per ordered pair `(a, b)` as a sorted list of
//! `(c, N_{ab}^c)` with nonzero multiplicity. Construction only checks that
//! the data is well formed; the ring axioms are checked by
//! [`FusionRing::validate`], so that axiom-violating rings can still be built
//! and reported on.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

mod dims;
mod grading;
mod gty;
mod invertible;
mod iso;
mod product;
mod subring;

pub use dims::{cd_set, fp_dims, ExactDim, FpDims, ZSqrt2};
pub use grading::{universal_grading, Grading};
pub use gty::{gty_structure, GtyReport};
pub use invertible::{invertibles, stabilizer_decomposition, InvertibleGroup, StabilizerDecomposition};
pub use iso::{canonical_order, ring_isomorphic, verify_isomorphism};
pub use product::{deligne_product, pointed_ring, trivial_ring};
pub use subring::{adjoint_subring, subring_generated, subring_lattice, Subring, SubringLattice};

/// Size bounds for the exhaustive searches in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest rank accepted by [`subring_lattice`].
    pub lattice_rank: usize,
    /// Largest combined rank of the two rings handed to [`ring_isomorphic`].
    pub isomorphism_rank: usize,
    /// Largest group order for automorphism and quadratic-form enumeration.
    pub group_order: usize,
    /// Node budget for backtracking searches.
    pub search_nodes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            lattice_rank: 64,
            isomorphism_rank: 1024,
            group_order: 256,
            search_nodes: 50_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    products: Vec<Vec<(usize, u32)>>,
}

impl FusionRing {
    /// Builds a ring from `(a, b, c, N)` triples; omitted triples are zero.
    ///
    /// Returns [`Error::Malformed`] for out-of-range indices, negative or
    /// oversized coefficients, repeated triples, or a label/dual list whose
    /// length does not match the rank.
    pub fn new<I>(labels: Vec<String>, unit: usize, dual: Vec<usize>, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, i64)>,
    {
        let rank = labels.len();
        if rank == 0 {
            return Err(Error::Malformed("rank must be at least 1".into()));
        }
        if unit >= rank {
            return Err(Error::Malformed(alloc::format!("unit {unit} out of range for rank {rank}")));
        }
        if dual.len() != rank {
            return Err(Error::Malformed(alloc::format!(
                "dual has {} entries for rank {rank}",
                dual.len()
            )));
        }
        if let Some(&d) = dual.iter().find(|&&d| d >= rank) {
            return Err(Error::Malformed(alloc::format!("dual index {d} out of range")));
        }
        let mut products = vec![Vec::new(); rank * rank];
        for (a, b, c, n) in triples {
            if a >= rank || b >= rank || c >= rank {
                return Err(Error::Malformed(alloc::format!(
                    "triple ({a}, {b}, {c}) out of range for rank {rank}"
                )));
            }
            if n < 0 {
                return Err(Error::Malformed(alloc::format!(
                    "negative coefficient {n} at ({a}, {b}, {c})"
                )));
            }
            let n = u32::try_from(n)
                .map_err(|_| Error::Malformed(alloc::format!("coefficient {n} too large")))?;
            let entry: &mut Vec<(usize, u32)> = &mut products[a * rank + b];
            if entry.iter().any(|&(x, _)| x == c) {
                return Err(Error::Malformed(alloc::format!("triple ({a}, {b}, {c}) given twice")));
            }
            if n > 0 {
                entry.push((c, n));
            }
        }
        for p in products.iter_mut() {
            p.sort_unstable();
        }
        Ok(Self {
            labels,
            unit,
            dual,
            products,
        })
    }

    /// Internal constructor for family builders: products come from a
    /// closure returning the constituents of `a ⊗ b`.
    pub(crate) fn from_rule<F>(labels: Vec<String>, unit: usize, dual: Vec<usize>, rule: F) -> Self
    where
        F: Fn(usize, usize) -> Vec<(usize, u32)>,
    {
        let rank = labels.len();
        let mut products = Vec::with_capacity(rank * rank);
        for a in 0..rank {
            for b in 0..rank {
                let mut p: Vec<(usize, u32)> = Vec::new();
                for (c, n) in rule(a, b) {
                    if n == 0 {
                        continue;
                    }
                    match p.iter_mut().find(|(x, _)| *x == c) {
                        Some(slot) => slot.1 += n,
                        None => p.push((c, n)),
                    }
                }
                p.sort_unstable();
                products.push(p);
            }
        }
        Self {
            labels,
            unit,
            dual,
            products,
        }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, a: usize) -> usize {
        self.dual[a]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    /// Constituents of `a ⊗ b` with multiplicities, sorted by index.
    #[inline]
    pub fn product(&self, a: usize, b: usize) -> &[(usize, u32)] {
        &self.products[a * self.rank() + b]
    }

    pub fn coeff(&self, a: usize, b: usize, c: usize) -> u32 {
        self.product(a, b)
            .iter()
            .find(|&&(x, _)| x == c)
            .map_or(0, |&(_, n)| n)
    }

    /// All nonzero `(a, b, c, N)` in lexicographic order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize, u32)> + '_ {
        let r = self.rank();
        (0..r * r).flat_map(move |ab| {
            self.products[ab]
                .iter()
                .map(move |&(c, n)| (ab / r, ab % r, c, n))
        })
    }

    /// The constituent of `a ⊗ b` when it is a single simple with multiplicity one.
    pub fn simple_product(&self, a: usize, b: usize) -> Option<usize> {
        match self.product(a, b) {
            [(c, 1)] => Some(*c),
            _ => None,
        }
    }

    pub fn is_invertible(&self, a: usize) -> bool {
        self.product(a, self.dual[a]) == [(self.unit, 1)]
    }

    pub fn invertible_indices(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&a| self.is_invertible(a)).collect()
    }

    pub fn is_pointed(&self) -> bool {
        (0..self.rank()).all(|a| self.is_invertible(a))
    }

    pub fn is_self_dual(&self, a: usize) -> bool {
        self.dual[a] == a
    }

    /// First non-commuting pair, if any.
    pub fn commutativity_defect(&self) -> Option<(usize, usize)> {
        let r = self.rank();
        (0..r)
            .flat_map(|a| (a + 1..r).map(move |b| (a, b)))
            .find(|&(a, b)| self.product(a, b) != self.product(b, a))
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_defect().is_none()
    }

    pub(crate) fn require_commutative(&self) -> Result<()> {
        match self.commutativity_defect() {
            Some((a, b)) => Err(Error::NotCommutative { a, b }),
            None => Ok(()),
        }
    }

    /// The same ring with simple `i` renamed to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let r = self.rank();
        let mut seen = vec![false; r];
        if perm.len() != r || perm.iter().any(|&p| p >= r || core::mem::replace(&mut seen[p], true)) {
            return Err(Error::Malformed("not a permutation of the basis".into()));
        }
        let mut labels = vec![String::new(); r];
        let mut dual = vec![0; r];
        for i in 0..r {
            labels[perm[i]] = self.labels[i].clone();
            dual[perm[i]] = perm[self.dual[i]];
        }
        let triples: Vec<_> = self
            .triples()
            .map(|(a, b, c, n)| (perm[a], perm[b], perm[c], n as i64))
            .collect();
        Self::new(labels, perm[self.unit], dual, triples)
    }

    /// The ring spanned by a closed set of simples, relabeled `0..k` in the
    /// order given.
    pub fn restrict(&self, simples: &[usize]) -> Result<Self> {
        let mut pos = vec![usize::MAX; self.rank()];
        for (i, &s) in simples.iter().enumerate() {
            if s >= self.rank() {
                return Err(Error::Malformed(alloc::format!("simple {s} out of range")));
            }
            pos[s] = i;
        }
        if pos[self.unit] == usize::MAX {
            return Err(Error::Precondition("restriction must contain the unit".into()));
        }
        let mut triples = Vec::new();
        for &a in simples {
            if pos[self.dual[a]] == usize::MAX {
                return Err(Error::Precondition(alloc::format!("set is not closed under the dual of {a}")));
            }
            for &b in simples {
                for &(c, n) in self.product(a, b) {
                    if pos[c] == usize::MAX {
                        return Err(Error::Precondition(alloc::format!(
                            "set is not closed: {c} appears in {a} ⊗ {b}"
                        )));
                    }
                    triples.push((pos[a], pos[b], pos[c], n as i64));
                }
            }
        }
        let labels = simples.iter().map(|&s| self.labels[s].clone()).collect();
        let dual = simples.iter().map(|&s| pos[self.dual[s]]).collect();
        Self::new(labels, pos[self.unit], dual, triples)
    }

    /// Checks the four ring axioms: dual involution, unit, rigidity and
    /// associativity.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let r = self.rank();
        let u = self.unit;
        for a in 0..r {
            if self.dual[self.dual[a]] != a {
                report.push(Violation::DualNotInvolution { a });
            }
        }
        for a in 0..r {
            for c in 0..r {
                let expected = u32::from(a == c);
                let left = self.coeff(u, a, c);
                if left != expected {
                    report.push(Violation::Unit { a, c, unit_on_left: true, value: left });
                }
                let right = self.coeff(a, u, c);
                if right != expected {
                    report.push(Violation::Unit { a, c, unit_on_left: false, value: right });
                }
            }
        }
        for a in 0..r {
            for b in 0..r {
                let value = self.coeff(a, b, u);
                if value != u32::from(b == self.dual[a]) {
                    report.push(Violation::Rigidity { a, b, value });
                }
            }
        }
        // (a⊗b)⊗c against a⊗(b⊗c), accumulated densely per triple
        let mut diff = vec![0i64; r];
        let mut touched: Vec<usize> = Vec::new();
        for a in 0..r {
            for b in 0..r {
                let ab = self.product(a, b);
                for c in 0..r {
                    for &(e, n1) in ab {
                        for &(d, n2) in self.product(e, c) {
                            if diff[d] == 0 {
                                touched.push(d);
                            }
                            diff[d] += i64::from(n1) * i64::from(n2);
                        }
                    }
                    for &(f, n1) in self.product(b, c) {
                        for &(d, n2) in self.product(a, f) {
                            if diff[d] == 0 {
                                touched.push(d);
                            }
                            diff[d] -= i64::from(n1) * i64::from(n2);
                        }
                    }
                    for &d in &touched {
                        if diff[d] != 0 {
                            let left = self.left_assoc(a, b, c, d);
                            let right = left - diff[d];
                            report.push(Violation::Associativity { a, b, c, d, left, right });
                            diff[d] = 0;
                        }
                    }
                    touched.clear();
                }
            }
        }
        report
    }

    // N_{(a⊗b)⊗c}^d, recomputed only when reporting a violation
    fn left_assoc(&self, a: usize, b: usize, c: usize, d: usize) -> i64 {
        self.product(a, b)
            .iter()
            .map(|&(e, n)| i64::from(n) * i64::from(self.coeff(e, c, d)))
            .sum()
    }
}

/// A single failed ring axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DualNotInvolution { a: usize },
    /// `N_{1a}^c` (or `N_{a1}^c`) differs from `[a = c]`.
    Unit { a: usize, c: usize, unit_on_left: bool, value: u32 },
    /// `N_{ab}^1` differs from `[b = a*]`.
    Rigidity { a: usize, b: usize, value: u32 },
    /// `Σ_e N_{ab}^e N_{ec}^d ≠ Σ_f N_{bc}^f N_{af}^d`.
    Associativity { a: usize, b: usize, c: usize, d: usize, left: i64, right: i64 },
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            Violation::DualNotInvolution { a } => write!(f, "dual is not an involution at {a}"),
            Violation::Unit { a, c, unit_on_left, value } => {
                if unit_on_left {
                    write!(f, "unit axiom: N(1,{a};{c}) = {value}")
                } else {
                    write!(f, "unit axiom: N({a},1;{c}) = {value}")
                }
            }
            Violation::Rigidity { a, b, value } => write!(f, "rigidity: N({a},{b};1) = {value}"),
            Violation::Associativity { a, b, c, d, left, right } => write!(
                f,
                "associativity at ({a},{b},{c}) -> {d}: {left} vs {right}"
            ),
        }
    }
}

/// Result of [`FusionRing::validate`]. Keeps the first
/// [`ValidationReport::KEEP`] violations and counts the rest.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub total: usize,
}

impl ValidationReport {
    pub const KEEP: usize = 64;

    fn push(&mut self, v: Violation) {
        if self.violations.len() < Self::KEEP {
            self.violations.push(v);
        }
        self.total += 1;
    }

    pub fn is_valid(&self) -> bool {
        self.total == 0
    }

    pub fn has_associativity_violation(&self) -> bool {
        self.violations
            .iter()
            .any(|v| matches!(v, Violation::Associativity { .. }))
    }
}

/// Errors out with [`Error::Precondition`] unless the ring validates.
pub(crate) fn require_valid(ring: &FusionRing) -> Result<()> {
    let report = ring.validate();
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(Error::Precondition(alloc::format!(
            "ring fails {} axiom check(s), first: {v}",
            report.total
        ))),
    }
}
