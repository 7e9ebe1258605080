//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use fusionkit_core::nising::{build_cm, build_ising, build_moore_read, build_nising, NIsingSpec};
use fusionkit_core::ring::{deligne_product, pointed_ring, trivial_ring};
use fusionkit_core::{FiniteAbelianGroup, FusionRing, RootOfUnity};

pub fn nising(n: u32) -> FusionRing {
    build_nising(NIsingSpec::new(n, RootOfUnity::ONE).unwrap()).ring().clone()
}

pub fn pointed(orders: &[u64]) -> FusionRing {
    pointed_ring(&FiniteAbelianGroup::from_cyclic_orders(orders))
}

/// Named family rings of rank at most 9.
pub fn small_family() -> Vec<(String, FusionRing)> {
    let mut out = vec![
        ("trivial".to_string(), trivial_ring()),
        ("Ising".to_string(), build_ising()),
        ("C_4".to_string(), build_cm(4).unwrap().ring),
        ("C_6".to_string(), build_cm(6).unwrap().ring),
        ("MooreRead".to_string(), build_moore_read()),
        ("Ising⊠Z_2".to_string(), deligne_product(&build_ising(), &pointed(&[2]))),
        ("Ising⊠Ising".to_string(), deligne_product(&build_ising(), &build_ising())),
    ];
    for orders in [&[2u64][..], &[3], &[4], &[2, 2], &[5], &[6], &[7], &[8], &[2, 4], &[2, 2, 2]] {
        out.push((format!("pointed{orders:?}"), pointed(orders)));
    }
    out
}

/// Tries every bijection fixing the unit; returns the first that preserves
/// duals and all structure constants.
pub fn brute_isomorphism(r1: &FusionRing, r2: &FusionRing) -> Option<Vec<usize>> {
    let r = r1.rank();
    if r2.rank() != r {
        return None;
    }
    let rest1: Vec<usize> = (0..r).filter(|&x| x != r1.unit()).collect();
    let mut rest2: Vec<usize> = (0..r).filter(|&x| x != r2.unit()).collect();
    let check = |images: &[usize]| -> Option<Vec<usize>> {
        let mut phi = vec![0; r];
        phi[r1.unit()] = r2.unit();
        for (&x, &y) in rest1.iter().zip(images) {
            phi[x] = y;
        }
        let ok = (0..r).all(|a| phi[r1.dual(a)] == r2.dual(phi[a]))
            && (0..r).all(|a| {
                (0..r).all(|b| (0..r).all(|c| r1.coeff(a, b, c) == r2.coeff(phi[a], phi[b], phi[c])))
            });
        ok.then_some(phi)
    };
    // Heap's algorithm
    let n = rest2.len();
    let mut c = vec![0; n];
    if let Some(phi) = check(&rest2) {
        return Some(phi);
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                rest2.swap(0, i);
            } else {
                rest2.swap(c[i], i);
            }
            if let Some(phi) = check(&rest2) {
                return Some(phi);
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    None
}

/// Orbit of a non-invertible simple under left multiplication by
/// invertibles, found by breadth-first search.
pub fn brute_orbit_transitive(ring: &FusionRing) -> bool {
    let r = ring.rank();
    let inv: Vec<usize> = (0..r).filter(|&x| ring.is_invertible(x)).collect();
    let non: Vec<usize> = (0..r).filter(|&x| !ring.is_invertible(x)).collect();
    let Some(&start) = non.first() else { return true };
    let mut seen = vec![false; r];
    seen[start] = true;
    let mut queue = vec![start];
    while let Some(x) = queue.pop() {
        for &g in &inv {
            for &(y, _) in ring.product(g, x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
    }
    non.iter().all(|&x| seen[x])
}

/// Order of an invertible simple by repeated multiplication.
pub fn power_order(ring: &FusionRing, x: usize) -> u64 {
    let mut y = x;
    let mut k = 1;
    while y != ring.unit() {
        y = ring.simple_product(y, x).expect("invertible");
        k += 1;
    }
    k
}

/// Sorted element-order profile of the invertibles.
pub fn order_profile(ring: &FusionRing) -> Vec<u64> {
    let mut v: Vec<u64> = (0..ring.rank())
        .filter(|&x| ring.is_invertible(x))
        .map(|x| power_order(ring, x))
        .collect();
    v.sort_unstable();
    v
}

/// Sorted element-order profile of a concrete group.
pub fn group_profile(g: &FiniteAbelianGroup) -> Vec<u64> {
    let mut v: Vec<u64> = g.elements().map(|x| g.element_order(x)).collect();
    v.sort_unstable();
    v
}
