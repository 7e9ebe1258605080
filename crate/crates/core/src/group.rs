//! Finite abelian groups.
//!
//! Two representations live here. [`FiniteAbelianGroup`] is the concrete
//! `Z_{d_1} ⊕ … ⊕ Z_{d_r}` with `d_j | d_{j+1}`, elements encoded as indices
//! in lexicographic order of their residue tuples. [`CayleyTable`] is an
//! abstract finite group given by its multiplication table, which is what
//! falls out of a fusion ring (invertible objects, grading classes).
//! [`CayleyTable::abelian_decomposition`] connects the two by brute-force
//! element-order analysis.

use alloc::vec;
use alloc::vec::Vec;

use crate::num::{factorize, lcm};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    /// Builds the group from invariant factors; each must be at least 2 and
    /// divide the next.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        for (i, &d) in factors.iter().enumerate() {
            if d < 2 {
                return Err(Error::Malformed(alloc::format!(
                    "invariant factor {d} at position {i} is below 2"
                )));
            }
            if let Some(&next) = factors.get(i + 1) {
                if next % d != 0 {
                    return Err(Error::Malformed(alloc::format!(
                        "invariant factor {d} does not divide {next}"
                    )));
                }
            }
        }
        Ok(Self { factors })
    }

    pub fn trivial() -> Self {
        Self { factors: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_cyclic_orders(&[n])
    }

    /// Normalizes a product of cyclic groups of arbitrary orders (1 allowed)
    /// into invariant-factor form.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        // p-primary parts, collected per prime
        let mut parts: Vec<(u64, Vec<u64>)> = Vec::new();
        for &n in orders {
            for (p, e) in factorize(n) {
                let q = p.pow(e);
                match parts.iter_mut().find(|(prime, _)| *prime == p) {
                    Some((_, v)) => v.push(q),
                    None => parts.push((p, vec![q])),
                }
            }
        }
        let rank = parts.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        for (_, v) in parts.iter_mut() {
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
        let mut factors: Vec<u64> = (0..rank)
            .map(|t| {
                parts
                    .iter()
                    .map(|(_, v)| v.get(t).copied().unwrap_or(1))
                    .product()
            })
            .collect();
        factors.reverse();
        Self { factors }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product::<u64>() as usize
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn residues(&self, mut index: usize) -> Vec<u64> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (index as u64) % d;
            index /= d as usize;
        }
        out
    }

    /// Index of a residue tuple; residues are reduced modulo their factor.
    pub fn index_of(&self, residues: &[u64]) -> usize {
        debug_assert_eq!(residues.len(), self.factors.len());
        residues
            .iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&r, &d)| acc * d as usize + (r % d) as usize)
    }

    /// Index of a signed residue tuple.
    pub fn index_of_signed(&self, residues: &[i64]) -> usize {
        let reduced: Vec<u64> = residues
            .iter()
            .zip(&self.factors)
            .map(|(&r, &d)| r.rem_euclid(d as i64) as u64)
            .collect();
        self.index_of(&reduced)
    }

    /// Canonical generator `e_i`.
    pub fn generator(&self, i: usize) -> usize {
        let mut r = vec![0; self.factors.len()];
        r[i] = 1;
        self.index_of(&r)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.residues(a), self.residues(b));
        let sum: Vec<u64> = ra
            .iter()
            .zip(&rb)
            .zip(&self.factors)
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect();
        self.index_of(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let r: Vec<u64> = self
            .residues(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &d)| (d - x) % d)
            .collect();
        self.index_of(&r)
    }

    pub fn scale(&self, k: i64, a: usize) -> usize {
        let r: Vec<i64> = self
            .residues(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &d)| (k.rem_euclid(d as i64) * x as i64) % d as i64)
            .collect();
        self.index_of_signed(&r)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.residues(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &d)| d / crate::num::gcd(x, d))
            .fold(1, lcm)
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order()
    }

    pub fn cayley(&self) -> CayleyTable {
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(self.add(a, b));
            }
        }
        CayleyTable {
            n,
            identity: 0,
            table,
        }
    }
}

impl core::fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, d) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" × ")?;
            }
            write!(f, "Z_{d}")?;
        }
        Ok(())
    }
}

/// A finite group on `0..n` given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    identity: usize,
    table: Vec<usize>,
}

impl CayleyTable {
    /// Wraps a multiplication table. Checks closure, the identity and the
    /// existence of inverses; associativity is the caller's responsibility
    /// (see [`CayleyTable::is_associative`]).
    pub fn new(n: usize, identity: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != n * n || identity >= n.max(1) {
            return Err(Error::Malformed("Cayley table has the wrong shape".into()));
        }
        if table.iter().any(|&x| x >= n) {
            return Err(Error::Malformed("Cayley table entry out of range".into()));
        }
        let t = Self { n, identity, table };
        for a in 0..n {
            if t.op(identity, a) != a || t.op(a, identity) != a {
                return Err(Error::Malformed("identity axiom fails".into()));
            }
            if !(0..n).any(|b| t.op(a, b) == identity && t.op(b, a) == identity) {
                return Err(Error::Malformed(alloc::format!("element {a} has no inverse")));
            }
        }
        Ok(t)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.n)
            .find(|&b| self.op(a, b) == self.identity)
            .expect("group element without inverse")
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.identity;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.op(acc, base);
            }
            base = self.op(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn order_of(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn is_associative(&self) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| {
                let ab = self.op(a, b);
                (0..self.n).all(|c| self.op(ab, c) == self.op(a, self.op(b, c)))
            })
        })
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.n];
        member[self.identity] = true;
        let mut members = vec![self.identity];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.op(x, g);
                if !member[y] {
                    member[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    /// Invariant factors with explicit generators, or `None` for a
    /// non-abelian table.
    ///
    /// Each p-primary part is split greedily: pick an element whose image in
    /// the quotient by the summands found so far has maximal order `p^k`,
    /// then correct it by an element of those summands so that its own
    /// order is `p^k`. The primary parts are recombined into invariant
    /// factors and the resulting coordinate map is checked to be bijective.
    pub fn abelian_decomposition(&self) -> Option<AbelianDecomposition> {
        if !self.is_abelian() {
            return None;
        }
        let n = self.n;
        let orders: Vec<u64> = (0..n).map(|a| self.order_of(a)).collect();
        // per prime: generators with their orders, descending
        let mut primary: Vec<Vec<(usize, u64)>> = Vec::new();
        for (p, _) in factorize(n as u64) {
            let in_part: Vec<usize> = (0..n).filter(|&a| is_power_of(orders[a], p)).collect();
            let mut sub = vec![false; n];
            sub[self.identity] = true;
            let mut sub_elems = vec![self.identity];
            let mut basis: Vec<(usize, u64)> = Vec::new();
            while sub_elems.len() < in_part.len() {
                // element of maximal order modulo the current summand
                let mut best: Option<(usize, u64)> = None;
                for &x in &in_part {
                    let mut q = 1u64;
                    let mut y = x;
                    while !sub[y] {
                        y = self.pow(y, p);
                        q *= p;
                    }
                    if best.is_none_or(|(_, bq)| q > bq) {
                        best = Some((x, q));
                    }
                }
                let (x, q) = best?;
                let target = self.pow(x, q);
                let correction = sub_elems.iter().copied().find(|&h| self.pow(h, q) == target)?;
                let g = self.op(x, self.inverse(correction));
                basis.push((g, q));
                let mut next = Vec::with_capacity(sub_elems.len() * q as usize);
                let mut gk = self.identity;
                for _ in 0..q {
                    for &h in &sub_elems {
                        next.push(self.op(gk, h));
                    }
                    gk = self.op(gk, g);
                }
                for &y in &next {
                    sub[y] = true;
                }
                sub_elems = next;
            }
            primary.push(basis);
        }
        let rank = primary.iter().map(Vec::len).max().unwrap_or(0);
        let mut factors = Vec::with_capacity(rank);
        let mut generators = Vec::with_capacity(rank);
        for t in (0..rank).rev() {
            let mut d = 1;
            let mut g = self.identity;
            for basis in &primary {
                if let Some(&(x, q)) = basis.get(t) {
                    d *= q;
                    g = self.op(g, x);
                }
            }
            factors.push(d);
            generators.push(g);
        }
        let group = FiniteAbelianGroup::new(factors).ok()?;
        let mut to_group = vec![usize::MAX; n];
        let mut from_group = vec![usize::MAX; n];
        for idx in group.elements() {
            let r = group.residues(idx);
            let mut x = self.identity;
            for (&g, &t) in generators.iter().zip(&r) {
                x = self.op(x, self.pow(g, t));
            }
            if to_group[x] != usize::MAX {
                return None;
            }
            to_group[x] = idx;
            from_group[idx] = x;
        }
        Some(AbelianDecomposition {
            group,
            generators,
            to_group,
            from_group,
        })
    }
}

fn is_power_of(mut x: u64, p: u64) -> bool {
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

/// An isomorphism between a [`CayleyTable`] and a concrete
/// [`FiniteAbelianGroup`], with the table elements realizing the canonical
/// generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianDecomposition {
    group: FiniteAbelianGroup,
    generators: Vec<usize>,
    to_group: Vec<usize>,
    from_group: Vec<usize>,
}

impl AbelianDecomposition {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// Table elements `e_1, …, e_r` corresponding to the canonical generators.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Group index of a table element.
    pub fn to_group(&self, element: usize) -> usize {
        self.to_group[element]
    }

    /// Table element of a group index.
    pub fn from_group(&self, index: usize) -> usize {
        self.from_group[index]
    }

    pub fn coordinates(&self, element: usize) -> Vec<u64> {
        self.group.residues(self.to_group[element])
    }

    /// Subgroups of index 2 not containing `u`, each sorted, in a fixed
    /// order. Every such subgroup is a complement of `⟨u⟩` when `u` has
    /// order 2.
    pub fn index_two_subgroups_avoiding(&self, u: usize) -> Vec<Vec<usize>> {
        let even: Vec<usize> = (0..self.group.rank())
            .filter(|&i| self.group.factors()[i].is_multiple_of(2))
            .collect();
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << even.len()) {
            let character = |x: usize| -> u64 {
                let r = self.coordinates(x);
                even.iter()
                    .enumerate()
                    .filter(|(bit, _)| mask >> bit & 1 == 1)
                    .map(|(_, &i)| r[i])
                    .sum::<u64>()
                    % 2
            };
            if character(u) != 1 {
                continue;
            }
            let mut kernel: Vec<usize> = (0..self.to_group.len()).filter(|&x| character(x) == 0).collect();
            kernel.sort_unstable();
            out.push(kernel);
        }
        out
    }
}
