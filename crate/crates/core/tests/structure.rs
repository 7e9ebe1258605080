use fusionkit_core::nising::{build_cm, build_ising, build_moore_read, build_nising, NIsingSpec};
use fusionkit_core::ring::{deligne_product, pointed_ring, ring_isomorphic, subring_generated, verify_isomorphism};
use fusionkit_core::structure::*;
use fusionkit_core::{Error, FiniteAbelianGroup, FusionRing, Limits, RootOfUnity};

fn nising(n: u32) -> FusionRing {
    build_nising(NIsingSpec::new(n, RootOfUnity::ONE).unwrap()).ring().clone()
}

fn decompose(ring: &FusionRing) -> Decomposed {
    match decompose_gty(ring, &Limits::default()).unwrap() {
        Decomposition::Decomposed(d) => *d,
        Decomposition::NotDecomposable { step, reason } => panic!("failed at {step}: {reason}"),
    }
}

fn check_trace(ring: &FusionRing, d: &Decomposed) {
    let t = &d.trace;
    assert_eq!(t.translations[0], t.delta);
    for (g, b) in t.translations.iter().skip(1).zip(
        t.blocks
            .iter()
            .filter_map(|b| match *b {
                GeneratorBlock::NonInvertible { z, .. } => Some(z),
                _ => None,
            })
            .skip(1),
    ) {
        assert_eq!(ring.simple_product(*g, b), Some(t.z));
    }
    let a = subring_generated(ring, &[t.z]).unwrap();
    let b0 = subring_generated(ring, &t.complement).unwrap();
    assert!(exact_factorization_check(ring, &a, &b0).holds());
    let assembled = deligne_product(
        build_nising(NIsingSpec::new(d.n, RootOfUnity::ONE).unwrap()).ring(),
        &d.b,
    );
    assert!(verify_isomorphism(&assembled, ring, &d.witness));
    assert_eq!(t.cyclic_order, (1u64 << d.n) * d.m);
}

#[test]
fn cm_rings() {
    for m in (2..=48).step_by(2) {
        let ring = build_cm(m).unwrap().ring;
        let d = decompose(&ring);
        let (n, odd) = (m.trailing_zeros(), m >> m.trailing_zeros());
        assert_eq!((d.n, d.m), (n, odd), "M = {m}");
        assert_eq!(d.b_group.order() as u64, odd);
        check_trace(&ring, &d);
    }
}

#[test]
fn ising_is_its_own_factor() {
    let ring = build_ising();
    let d = decompose(&ring);
    assert_eq!(d.n, 1);
    assert_eq!(d.b_group.order(), 1);
}

#[test]
fn round_trip_with_z2_z5() {
    let a = FiniteAbelianGroup::from_cyclic_orders(&[2, 5]);
    let ring = deligne_product(&nising(2), &pointed_ring(&a));
    let d = decompose(&ring);
    assert_eq!(d.n, 2);
    assert_eq!(d.b_group.order(), 10);
    check_trace(&ring, &d);
}

#[test]
fn round_trips_over_small_groups() {
    let groups: [&[u64]; 8] = [&[1], &[2], &[4], &[2, 2], &[3], &[2, 4], &[2, 2, 2], &[4, 4]];
    for n in 1..=3 {
        for orders in groups {
            let a = FiniteAbelianGroup::from_cyclic_orders(orders);
            let ring = deligne_product(&nising(n), &pointed_ring(&a));
            let d = decompose(&ring);
            assert_eq!(d.n, n, "N = {n}, A = {a}");
            assert_eq!(d.b_group, a, "N = {n}");
            check_trace(&ring, &d);
        }
    }
}

#[test]
fn preconditions() {
    let pointed = pointed_ring(&FiniteAbelianGroup::cyclic(4));
    assert_eq!(decompose_gty(&pointed, &Limits::default()), Err(Error::PointedInput));
    let fib = FusionRing::new(
        vec!["1".into(), "τ".into()],
        0,
        vec![0, 1],
        [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)],
    )
    .unwrap();
    assert!(matches!(decompose_gty(&fib, &Limits::default()), Err(Error::Precondition(_))));
}

#[test]
fn moore_read_fails_at_the_cyclic_part() {
    let ring = build_moore_read();
    match decompose_gty(&ring, &Limits::default()).unwrap() {
        Decomposition::NotDecomposable { step, .. } => assert_eq!(step, DecompositionStep::CyclicPart),
        Decomposition::Decomposed(_) => panic!("Moore–Read rules decomposed"),
    }
    let id = cyclic_extension_identify(&ring, &Limits::default()).unwrap();
    assert_eq!(id.m, 4);
    assert_eq!(
        id.family,
        CyclicFamily::Unknown {
            invertibles_cyclic: true,
            not_braidable: true
        }
    );
}

#[test]
fn cyclic_identification() {
    for m in [6, 8] {
        let ring = build_cm(m).unwrap().ring;
        let id = cyclic_extension_identify(&ring, &Limits::default()).unwrap();
        assert_eq!(id.m, m);
        assert!(matches!(id.family, CyclicFamily::Cm { .. }));
    }
    let two = deligne_product(&build_ising(), &pointed_ring(&FiniteAbelianGroup::cyclic(2)));
    assert!(matches!(cyclic_extension_identify(&two, &Limits::default()), Err(Error::Precondition(_))));
}

#[test]
fn factorization_examples() {
    let c6 = build_cm(6).unwrap();
    let b = c6.basis;
    let ising = subring_generated(&c6.ring, &[b.simple(2, 3).unwrap()]).unwrap();
    assert_eq!(ising.len(), 3);
    let pointed = subring_generated(&c6.ring, &[b.simple(0, 2).unwrap()]).unwrap();
    assert!(exact_factorization_check(&c6.ring, &ising, &pointed).holds());

    let whole = subring_generated(&c6.ring, &[b.z(0)]).unwrap();
    let trivial = subring_generated(&c6.ring, &[]).unwrap();
    assert!(exact_factorization_check(&c6.ring, &whole, &trivial).holds());

    let c8 = build_cm(8).unwrap();
    let b = c8.basis;
    let delta = subring_generated(&c8.ring, &[b.invertible(1, 0)]).unwrap();
    let a = subring_generated(&c8.ring, &[b.invertible(0, 1)]).unwrap();
    let check = exact_factorization_check(&c8.ring, &delta, &a);
    assert!(matches!(check.counterexample, Some(FactorizationFailure::Unreached { .. })));
    let check = exact_factorization_check(&c8.ring, &delta, &whole_of(&c8.ring));
    assert!(matches!(check.counterexample, Some(FactorizationFailure::NotPointed { .. })));
}

fn whole_of(ring: &FusionRing) -> fusionkit_core::Subring {
    subring_generated(ring, &(0..ring.rank()).collect::<Vec<_>>()).unwrap()
}

#[test]
fn decomposition_is_deterministic() {
    let ring = deligne_product(&nising(2), &pointed_ring(&FiniteAbelianGroup::from_cyclic_orders(&[2, 2])));
    assert_eq!(decompose(&ring), decompose(&ring));
    let other = deligne_product(&nising(2), &pointed_ring(&FiniteAbelianGroup::cyclic(4)));
    assert_eq!(ring_isomorphic(&ring, &other, &Limits::default()).unwrap(), None);
}
