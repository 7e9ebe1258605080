#![allow(clippy::needless_range_loop)]
use fusionkit_core::nising::*;
use fusionkit_core::pointed::{enumerate_braidings, CenterClass};
use fusionkit_core::ring::{fp_dims, invertibles, subring_lattice, universal_grading};
use fusionkit_core::{Limits, RootOfUnity, ZSqrt2};

fn pairing() -> IsingPairing {
    IsingPairing::derive().unwrap()
}

fn label_set(ring: &fusionkit_core::FusionRing, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| ring.label(x).to_string()).collect()
}

#[test]
fn family_shapes() {
    for n in 1..=6 {
        let ni = build_nising(NIsingSpec::new(n, RootOfUnity::ONE).unwrap());
        let ring = ni.ring();
        assert!(ring.validate().is_valid());
        let dims = fp_dims(ring).unwrap();
        assert_eq!(dims.total.as_exact(), Some(ZSqrt2::int(1 << (n + 1))));
        let non: Vec<_> = (0..ring.rank()).filter(|&x| !ring.is_invertible(x)).collect();
        assert_eq!(non.len(), 1 << (n - 1));
        assert!(non.iter().all(|&x| dims.exact(x) == Some(ZSqrt2::SQRT2)));
        let g = invertibles(ring).unwrap();
        let expect: Vec<u64> = if n == 1 { vec![2] } else { vec![2, 1 << (n - 1)] };
        assert_eq!(g.group().unwrap().factors(), expect.as_slice());
        let u = universal_grading(ring).unwrap();
        assert_eq!(u.group.factors(), &[1u64 << n]);
        assert!(ni.cm.grading.respects(ring));
    }
}

#[test]
fn zeta_must_divide() {
    assert!(NIsingSpec::new(2, RootOfUnity::primitive(8)).is_err());
    assert!(NIsingSpec::new(3, RootOfUnity::primitive(8)).is_ok());
    assert!(NIsingSpec::new(0, RootOfUnity::ONE).is_err());
}

#[test]
fn self_duality_by_parity() {
    for m in (2..=64).step_by(2) {
        let sd = self_dual_noninvertibles(m).unwrap();
        assert_eq!(!sd.is_empty(), (m / 2) % 2 == 1, "M = {m}");
        // dual of Z_j is Z_{M/2-1-j}
        let half = m / 2;
        for j in 0..half {
            assert_eq!(sd.contains(&j), (half - 1 - j) == j);
        }
    }
}

#[test]
fn squared_braidings() {
    let xi = RootOfUnity::primitive(16);
    let br = InducedBraiding::new(3, pairing(), xi).unwrap();
    let cm = build_cm(8).unwrap();
    let table = squared_braiding_table(&br);
    let (d0, z1, a4) = (cm.basis.invertible(1, 0), cm.basis.z(0), cm.basis.invertible(0, 2));
    assert_eq!(table[d0][z1].value, RootOfUnity::MINUS_ONE);
    assert_eq!(table[a4][z1].value, xi.pow(8));
    assert!(table[z1][z1].projective_only);
    assert!(!table[d0][z1].projective_only);
    assert!(table[0].iter().all(|e| e.value.is_one()));
    for x in 0..table.len() {
        for y in 0..table.len() {
            assert_eq!(table[x][y], table[y][x]);
        }
    }
}

#[test]
fn centers_of_induced_braidings() {
    for n in 3..=5u32 {
        let cm = build_cm(1 << n).unwrap();
        let br = InducedBraiding::new(n, pairing(), RootOfUnity::primitive(1 << (n + 1))).unwrap();
        assert_eq!(br.zeta(), RootOfUnity::MINUS_ONE);
        let c = induced_center(&br).unwrap();
        let u = cm.basis.invertible(1, 1 << (n - 2));
        assert_eq!(c.center, vec![0, u], "N = {n}");
        assert_eq!(c.class, CenterClass::SlightlyDegenerate { u });
        assert_eq!(br.q(1, 1 << (n - 1)), RootOfUnity::MINUS_ONE);
        assert!(c.adjoint_is_svect && c.radical_matches);
    }
    let cm = build_cm(4).unwrap();
    let c = induced_center(&InducedBraiding::new(2, pairing(), RootOfUnity::primitive(8)).unwrap()).unwrap();
    assert_eq!(label_set(&cm.ring, &c.center), ["1⊠0", "δ⊠2"]);
    assert_eq!(c.class, CenterClass::ContainsTannakian { witness: cm.basis.invertible(1, 1) });
    for xi in [RootOfUnity::ONE, RootOfUnity::MINUS_ONE, RootOfUnity::I, RootOfUnity::MINUS_I] {
        let c = induced_center(&InducedBraiding::new(1, pairing(), xi).unwrap()).unwrap();
        assert_eq!(c.class, CenterClass::NonDegenerate);
    }
}

#[test]
fn radical_and_adjoint_for_all_braidings() {
    for n in 1..=5u32 {
        for zeta in [RootOfUnity::ONE, RootOfUnity::MINUS_ONE] {
            for b in enumerate_braidings(1 << n, zeta).unwrap() {
                let c = induced_center(&InducedBraiding::new(n, pairing(), b.xi()).unwrap()).unwrap();
                assert!(c.adjoint_is_svect && c.radical_matches, "N = {n}, ξ = {}", b.xi());
            }
        }
    }
}

#[test]
fn degeneracy_tables() {
    for n in 1..=5 {
        for zeta in [RootOfUnity::ONE, RootOfUnity::MINUS_ONE] {
            let t = degeneracy_criterion(n, zeta, pairing()).unwrap();
            assert_eq!(t.rows.len(), 1 << n);
            assert!(t.holds(), "N = {n}, ζ = {zeta}");
        }
    }
    let t = degeneracy_criterion(3, RootOfUnity::MINUS_ONE, pairing()).unwrap();
    let sd: Vec<_> = t.rows.iter().filter(|r| r.slightly_degenerate).map(|r| r.xi).collect();
    assert!(sd.iter().all(|xi| xi.order() == 16));
    // every ξ with ξ^8 = -1 is primitive of order 16, and there are 8 of them
    assert_eq!(sd.len(), 8);
    let t = degeneracy_criterion(2, RootOfUnity::MINUS_ONE, pairing()).unwrap();
    assert!(t.rows.iter().all(|r| !r.slightly_degenerate));
    assert!(degeneracy_criterion(3, RootOfUnity::I, pairing()).is_err());
}

#[test]
fn twists() {
    let spec = |n, z| NIsingSpec::new(n, z).unwrap();
    assert!(matches!(twist_obstruction(spec(2, RootOfUnity::I)).unwrap(), TwistVerdict::RuledOut { .. }));
    assert!(matches!(twist_obstruction(spec(2, RootOfUnity::MINUS_I)).unwrap(), TwistVerdict::RuledOut { .. }));
    assert_eq!(twist_obstruction(spec(3, RootOfUnity::ONE)).unwrap(), TwistVerdict::Admits);
    assert_eq!(twist_obstruction(spec(1, RootOfUnity::MINUS_ONE)).unwrap(), TwistVerdict::Admits);
    assert!(matches!(
        twist_obstruction(spec(3, RootOfUnity::primitive(8))).unwrap(),
        TwistVerdict::RuledOut { .. }
    ));
    assert_eq!(twist_obstruction(spec(3, RootOfUnity::I)).unwrap(), TwistVerdict::Unknown);
    assert_eq!(twist_obstruction(spec(5, RootOfUnity::MINUS_I)).unwrap(), TwistVerdict::Unknown);
}

#[test]
fn fact_cm() {
    for m in [2u64, 4, 6, 8, 10, 12, 20, 24] {
        let r = verify_fact_cm(m, &Limits::default()).unwrap();
        assert!(r.holds(), "M = {m}");
        assert_eq!(1u64 << r.n, m / r.m);
        assert_eq!(r.m % 2, 1);
    }
    let r = verify_fact_cm(12, &Limits::default()).unwrap();
    assert_eq!((r.n, r.m), (2, 3));
    // m = 1: the product with the trivial ring keeps the basis order
    let r = verify_fact_cm(8, &Limits::default()).unwrap();
    let w = r.witness.unwrap();
    let cm = build_cm(8).unwrap();
    let product = fusionkit_core::ring::deligne_product(&cm.ring, &fusionkit_core::ring::trivial_ring());
    assert!(fusionkit_core::ring::verify_isomorphism(&product, &cm.ring, &w));
    assert!(verify_fact_cm(7, &Limits::default()).is_err());
}

#[test]
fn nofact_and_primeness() {
    for n in 1..=4 {
        let r = verify_nofact(n, &Limits::default()).unwrap();
        assert!(r.holds(), "N = {n}");
        assert_eq!(r.noninvertibles, 1 << (n - 1));
        let p = verify_primeness(n, pairing(), &Limits::default()).unwrap();
        assert!(p.holds(), "N = {n}: {:?}", p.counterexample);
        assert_eq!(p.braidings_checked, 1 << (n + 1));
    }
    let r = verify_nofact(1, &Limits::default()).unwrap();
    assert_eq!((r.lattice_size, r.proper), (3, 2));
}

#[test]
fn ising_lattice_is_a_chain() {
    let ring = build_ising();
    let l = subring_lattice(&ring, &Limits::default()).unwrap();
    let sizes: Vec<_> = l.subrings.iter().map(|s| s.len()).collect();
    assert_eq!(sizes, [1, 2, 3]);
}

#[test]
fn moore_read_is_gty_with_cyclic_group() {
    let ring = build_moore_read();
    assert!(ring.validate().is_valid());
    let g = invertibles(&ring).unwrap();
    assert_eq!(g.group().unwrap().factors(), &[4]);
    assert_eq!(universal_grading(&ring).unwrap().group.factors(), &[4]);
}
