//! Acceptance criteria 1–10. Runs as a plain binary and prints one line per
//! criterion; exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use fusionkit_core::nising::*;
use fusionkit_core::pointed::{enumerate_braidings, enumerate_quadratic_forms, CenterClass, QuadraticForm};
use fusionkit_core::ring::{
    deligne_product, fp_dims, gty_structure, invertibles, ring_isomorphic, universal_grading, verify_isomorphism,
};
use fusionkit_core::structure::{decompose_gty, Decomposition};
use fusionkit_core::{FiniteAbelianGroup, FusionRing, Limits, RootOfUnity, ZSqrt2};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn family_invariants() -> Outcome {
    for n in 1..=6u32 {
        let ring = nising(n);
        let dims = fp_dims(&ring).map_err(|e| e.to_string())?;
        ensure(dims.total.as_exact() == Some(ZSqrt2::int(1 << (n + 1))), || {
            format!("N={n}: FPdim {}", dims.total)
        })?;
        let non: Vec<usize> = (0..ring.rank()).filter(|&x| !ring.is_invertible(x)).collect();
        ensure(non.len() == 1 << (n - 1), || format!("N={n}: {} non-invertibles", non.len()))?;
        ensure(non.iter().all(|&x| dims.exact(x) == Some(ZSqrt2::SQRT2)), || {
            format!("N={n}: a non-invertible is not √2")
        })?;
        let expect = FiniteAbelianGroup::from_cyclic_orders(&[2, 1 << (n - 1)]);
        let g = invertibles(&ring).map_err(|e| e.to_string())?;
        ensure(g.group() == Some(&expect), || format!("N={n}: G(C) = {:?}", g.group()))?;
        ensure(order_profile(&ring) == group_profile(&expect), || format!("N={n}: order profile of G(C)"))?;
        let u = universal_grading(&ring).map_err(|e| e.to_string())?;
        ensure(u.group.factors() == [1u64 << n], || format!("N={n}: U(C) = {}", u.group))?;
        ensure(u.respects(&ring) && u.faithful, || format!("N={n}: grading"))?;
    }
    Ok("N = 1..6 exact".into())
}

fn fact_cm() -> Outcome {
    let limits = Limits::default();
    for m in [2u64, 4, 6, 8, 10, 12, 20, 24, 40, 48] {
        let r = verify_fact_cm(m, &limits).map_err(|e| e.to_string())?;
        let w = r.witness.as_ref().ok_or(format!("M={m}: no isomorphism"))?;
        let product = deligne_product(&nising(r.n), &pointed(&[r.m]));
        let cm = build_cm(m).unwrap().ring;
        ensure(verify_isomorphism(&product, &cm, w), || format!("M={m}: witness rejected"))?;
        ensure((1u64 << r.n) * r.m == m && r.m % 2 == 1, || format!("M={m}: split {} {}", r.n, r.m))?;
    }
    Ok("10 values of M, witnesses re-verified".into())
}

fn nofact_and_primeness() -> Outcome {
    let limits = Limits::default();
    let pairing = IsingPairing::derive().map_err(|e| e.to_string())?;
    for n in 1..=5 {
        let r = verify_nofact(n, &limits).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("N={n}: {:?}", r))?;
    }
    let mut braidings = 0;
    for n in 1..=4 {
        let p = verify_primeness(n, pairing, &limits).map_err(|e| e.to_string())?;
        ensure(p.holds(), || format!("N={n}: {:?}", p.counterexample))?;
        braidings += p.braidings_checked;
    }
    Ok(format!("N = 1..5 lattices, {braidings} induced braidings"))
}

fn braiding_counts() -> Outcome {
    let limits = Limits::default();
    for m in 1..=12u64 {
        let expected_total = num_gcd(m * m, 2 * m);
        let mut total = 0;
        for zeta in RootOfUnity::all_nth(m) {
            let count = enumerate_braidings(m, zeta).map_err(|e| e.to_string())?.len() as u64;
            let admissible = zeta.is_one() || (m % 2 == 0 && zeta == RootOfUnity::MINUS_ONE);
            ensure(count == if admissible { m } else { 0 }, || format!("M={m}, ζ={zeta}: {count}"))?;
            total += count;
        }
        ensure(total == expected_total, || format!("M={m}: total {total}"))?;
        // independent count: q(1) = c with c^{2M} = c^{M²} = 1 over μ_{2M²}
        let naive: Vec<RootOfUnity> = RootOfUnity::all_nth(2 * m * m)
            .filter(|c| c.pow(2 * m as i64).is_one() && c.pow((m * m) as i64).is_one())
            .collect();
        ensure(naive.len() as u64 == total, || format!("M={m}: naive {}", naive.len()))?;
        let forms = enumerate_quadratic_forms(&FiniteAbelianGroup::cyclic(m), &limits).map_err(|e| e.to_string())?;
        ensure(forms.len() as u64 == total, || format!("M={m}: {} forms", forms.len()))?;
        let mut from_braidings: Vec<QuadraticForm> = RootOfUnity::all_nth(m)
            .flat_map(|z| enumerate_braidings(m, z).unwrap())
            .map(|b| b.quadratic_form())
            .collect();
        from_braidings.sort_by_key(|q| format!("{:?}", q.values()));
        let mut forms = forms;
        forms.sort_by_key(|q| format!("{:?}", q.values()));
        ensure(from_braidings == forms, || format!("M={m}: forms differ"))?;
    }
    Ok("M = 1..12".into())
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn braided_z4() -> Outcome {
    let xi = RootOfUnity::primitive(8);
    let b = enumerate_braidings(4, xi.pow(4))
        .map_err(|e| e.to_string())?
        .into_iter()
        .find(|b| b.xi() == xi)
        .ok_or("ξ not enumerated")?;
    let q = b.quadratic_form();
    ensure(q.radical() == [0], || format!("radical {:?}", q.radical()))?;
    ensure(q.value(2) == RootOfUnity::MINUS_ONE, || format!("q(2) = {}", q.value(2)))?;
    Ok(format!("ξ = {xi}, q(2) = -1"))
}

fn sd_induced() -> Outcome {
    let pairing = IsingPairing::derive().map_err(|e| e.to_string())?;
    for n in 3..=5u32 {
        let xi = RootOfUnity::primitive(1 << (n + 1));
        let br = InducedBraiding::new(n, pairing, xi).map_err(|e| e.to_string())?;
        ensure(br.zeta() == RootOfUnity::MINUS_ONE, || format!("N={n}: ζ"))?;
        let c = induced_center(&br).map_err(|e| e.to_string())?;
        let cm = build_cm(1 << n).unwrap();
        let u = cm.basis.simple(1, 1 << (n - 1)).unwrap();
        ensure(c.center == [0, u], || format!("N={n}: center {:?}", c.center))?;
        ensure(c.class == CenterClass::SlightlyDegenerate { u }, || format!("N={n}: {:?}", c.class))?;
    }
    let br = InducedBraiding::new(2, pairing, RootOfUnity::primitive(8)).map_err(|e| e.to_string())?;
    let c = induced_center(&br).map_err(|e| e.to_string())?;
    let cm = build_cm(4).unwrap();
    let witness = cm.basis.simple(1, 2).unwrap();
    ensure(c.class == CenterClass::ContainsTannakian { witness }, || format!("N=2: {:?}", c.class))?;
    ensure(cm.ring.label(witness) == "δ⊠2", || "N=2: witness label".into())?;
    Ok("N = 3,4,5 slightly degenerate; N = 2 Tannakian at δ⊠2".into())
}

fn degeneracy_equivalence() -> Outcome {
    let pairing = IsingPairing::derive().map_err(|e| e.to_string())?;
    let mut rows = 0;
    for n in [3, 4] {
        for zeta in [RootOfUnity::ONE, RootOfUnity::MINUS_ONE] {
            let t = degeneracy_criterion(n, zeta, pairing).map_err(|e| e.to_string())?;
            ensure(t.asserted && t.holds(), || format!("N={n}, ζ={zeta}"))?;
            ensure(t.rows.len() == 1 << n, || format!("N={n}, ζ={zeta}: {} rows", t.rows.len()))?;
            rows += t.rows.len();
        }
    }
    Ok(format!("{rows} rows"))
}

/// A random abelian group of order at most 16, as cyclic orders.
fn random_group(rng: &mut ChaCha8Rng) -> Vec<u64> {
    let mut orders = Vec::new();
    let mut order = 1;
    loop {
        let choices: Vec<u64> = (2..=16).filter(|&k| order * k <= 16).collect();
        if choices.is_empty() || rng.gen_bool(0.4) {
            return orders;
        }
        let k = *choices.choose(rng).unwrap();
        orders.push(k);
        order *= k;
    }
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1515);
    let limits = Limits::default();
    let mut passed = 0;
    for _ in 0..20 {
        let n = rng.gen_range(1..=4u32);
        let orders = random_group(&mut rng);
        let a = FiniteAbelianGroup::from_cyclic_orders(&orders);
        let ring = deligne_product(&nising(n), &pointed(&orders));
        let d = match decompose_gty(&ring, &limits).map_err(|e| e.to_string())? {
            Decomposition::Decomposed(d) => d,
            Decomposition::NotDecomposable { step, reason } => {
                return Err(format!("N={n}, A={a}: {step}: {reason}"))
            }
        };
        ensure(d.n == n && d.b_group.order() == a.order(), || {
            format!("N={n}, A={a}: got N={}, |B|={}", d.n, d.b_group.order())
        })?;
        let assembled = deligne_product(&nising(d.n), &d.b);
        let phi = ring_isomorphic(&assembled, &ring, &limits)
            .map_err(|e| e.to_string())?
            .ok_or(format!("N={n}, A={a}: reassembly not isomorphic"))?;
        ensure(verify_isomorphism(&assembled, &ring, &phi), || "witness rejected".into())?;
        passed += 1;
    }
    Ok(format!("{passed}/20"))
}

fn oracle_equivalence() -> Outcome {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut rings: Vec<(String, FusionRing)> = small_family().into_iter().filter(|(_, r)| r.rank() <= 8).collect();
    // relabeled copies so that positive pairs are not just equal rings
    let copies: Vec<(String, FusionRing)> = rings
        .iter()
        .map(|(name, r)| {
            let mut perm: Vec<usize> = (0..r.rank()).collect();
            perm.shuffle(&mut rng);
            (format!("{name}'"), r.permuted(&perm).unwrap())
        })
        .collect();
    rings.extend(copies);
    let (mut pairs, mut isomorphic) = (0, 0);
    for (n1, r1) in &rings {
        for (n2, r2) in &rings {
            let fast = ring_isomorphic(r1, r2, &limits).map_err(|e| e.to_string())?;
            let slow = brute_isomorphism(r1, r2);
            ensure(fast.is_some() == slow.is_some(), || format!("{n1} vs {n2}"))?;
            if let Some(phi) = &fast {
                ensure(verify_isomorphism(r1, r2, phi), || format!("{n1} vs {n2}: bad witness"))?;
                isomorphic += 1;
            }
            pairs += 1;
        }
    }
    let mut gty = 0;
    let mut extra = vec![
        ("I_3".to_string(), nising(3)),
        ("C_12".to_string(), build_cm(12).unwrap().ring),
        ("I_2⊠Z_3".to_string(), deligne_product(&nising(2), &pointed(&[3]))),
    ];
    extra.extend(small_family());
    for (name, r) in &extra {
        if r.is_pointed() {
            continue;
        }
        let report = gty_structure(r).map_err(|e| e.to_string())?;
        ensure(report.action_transitive == brute_orbit_transitive(r), || format!("{name}: transitivity"))?;
        gty += 1;
    }
    Ok(format!("{pairs} pairs ({isomorphic} isomorphic), {gty} transitivity checks"))
}

/// One random edit of the structure constants, duals or unit.
fn mutate(ring: &FusionRing, rng: &mut ChaCha8Rng) -> Option<FusionRing> {
    let r = ring.rank();
    let labels = ring.labels().to_vec();
    let mut unit = ring.unit();
    let mut dual = ring.duals().to_vec();
    let mut triples: Vec<(usize, usize, usize, i64)> = ring.triples().map(|(a, b, c, n)| (a, b, c, n as i64)).collect();
    match rng.gen_range(0..5) {
        0 => {
            let (a, b, c) = (rng.gen_range(0..r), rng.gen_range(0..r), rng.gen_range(0..r));
            match triples.iter_mut().find(|t| (t.0, t.1, t.2) == (a, b, c)) {
                Some(t) => t.3 += 1,
                None => triples.push((a, b, c, 1)),
            }
        }
        1 => {
            let k = rng.gen_range(0..triples.len());
            triples[k].3 -= 1;
        }
        2 => {
            let k = rng.gen_range(0..triples.len());
            let c = (triples[k].2 + rng.gen_range(1..r)) % r;
            if triples.iter().any(|t| (t.0, t.1, t.2) == (triples[k].0, triples[k].1, c)) {
                return None;
            }
            triples[k].2 = c;
        }
        3 => {
            let (a, b) = (rng.gen_range(0..r), rng.gen_range(0..r));
            if dual[a] == dual[b] {
                return None;
            }
            dual.swap(a, b);
        }
        _ => unit = (unit + rng.gen_range(1..r)) % r,
    }
    FusionRing::new(labels, unit, dual, triples).ok()
}

fn mutations() -> Outcome {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let bases: Vec<FusionRing> = vec![
        build_ising(),
        build_cm(4).unwrap().ring,
        build_cm(6).unwrap().ring,
        nising(3),
        build_moore_read(),
        pointed(&[4]),
        pointed(&[2, 2]),
        deligne_product(&build_ising(), &pointed(&[2])),
    ];
    let (mut done, mut caught_by_axioms) = (0, 0);
    while done < 200 {
        let base = &bases[done % bases.len()];
        let Some(m) = mutate(base, &mut rng) else { continue };
        if m == *base {
            continue;
        }
        done += 1;
        if !m.validate().is_valid() {
            caught_by_axioms += 1;
            continue;
        }
        let same = ring_isomorphic(base, &m, &limits).map_err(|e| e.to_string())?.is_some();
        ensure(!same, || format!("mutation {done} accepted silently"))?;
    }
    Ok(format!("200 mutations, {caught_by_axioms} caught by axioms, rest change class"))
}

type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "family invariants", Duration::from_secs(1), family_invariants),
        (2, "C_M factorization", Duration::from_secs(30), fact_cm),
        (3, "proper subrings pointed, primeness", Duration::from_secs(60), nofact_and_primeness),
        (4, "cyclic braiding counts", Duration::from_secs(5), braiding_counts),
        (5, "braided Z_4", Duration::from_secs(1), braided_z4),
        (6, "induced centers", Duration::from_secs(5), sd_induced),
        (7, "degeneracy equivalence", Duration::from_secs(10), degeneracy_equivalence),
        (8, "decomposition round trip", Duration::from_secs(60), round_trip),
        (9, "oracle equivalence", Duration::from_secs(60), oracle_equivalence),
        (10, "mutations detected", Duration::from_secs(60), mutations),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= budget => format!("PASS  {detail}"),
            Ok(detail) => format!("FAIL  over budget {budget:?}: {detail}"),
            Err(e) => format!("FAIL  {e}"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!("criterion {id:>2} [{name}] {verdict} ({:.2}s)", elapsed.as_secs_f64());
    }
    if failed == 0 {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
