//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measured detail (run with `--nocapture` to see the transcript).
//!
//! Every tolerance here is exact; the whole calculus is integer/rational
//! arithmetic; and the stated runtime budgets are asserted directly.

use geo4::geography::{
    self, certs::Pi1Fixture, decompose, decompose_exhaustive, in_region, scan, validate, Bounds,
    LatticePoint, PlanOutcome,
};
use geo4::grouppres::{
    coset_enumeration, smith_normal_form, snf_divisors_naive, CosetResult, FpGroup, Word,
};
use geo4::invariants::{
    chars_from, classify, lantern_chars, z2_table_chars, CharNumbers, Irreducibility,
    StandardModel, Z2Kind,
};
use geo4::lefschetz::{build_family, h1_of_total_space, total_space_chars, FamilyName};
use geo4::matrix::IntMat;
use geo4::mcg::{evaluate, lantern_substitute, twist_image, MappingClassWord, SurfaceModel};
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use std::time::Instant;

#[test]
fn criterion_1_conversion_table() {
    let start = Instant::now();
    let mut rng = rand::rngs::StdRng::seed_from_u64(41);
    let mut checked = 0u32;
    while checked < 10_000 {
        let b2p = rng.random_range(0..=200i64);
        let b2m = rng.random_range(0..=200i64);
        let e = 2 + b2p + b2m;
        let sigma = b2p - b2m;
        let c = chars_from(e, sigma, 0).unwrap();
        let chih = c.chih();
        let c1 = c.c1sq();
        // the six simultaneous identities of the conversion table
        assert_eq!(c.b2plus(), Some((e - 2 + sigma) / 2));
        assert_eq!(Rational64::from_integer(b2p), chih * 2 - Rational64::from_integer(1));
        assert_eq!(
            Rational64::from_integer(b2m),
            chih * 10 - Rational64::from_integer(c1) - Rational64::from_integer(1)
        );
        assert_eq!(c1, 2 * e + 3 * sigma);
        assert_eq!(c1, 4 + 5 * b2p - b2m);
        assert_eq!(chih, Rational64::new(e + sigma, 4));
        assert_eq!(chih, Rational64::new(1 + b2p, 2));
        assert_eq!(Rational64::from_integer(e), chih * 12 - Rational64::from_integer(c1));
        assert_eq!(e, 2 + b2p + b2m);
        assert_eq!(Rational64::from_integer(sigma), Rational64::from_integer(c1) - chih * 8);
        assert_eq!(sigma, b2p - b2m);
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "conversion property run took {elapsed:?}");
    println!("PASS criterion 1: conversion table on {checked} pairs in {elapsed:?}");
}

#[test]
fn criterion_2_z2_table_coherence() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(42);
    let mut checked = 0u32;
    for g in 0..=5i64 {
        for _ in 0..500 {
            let e = rng.random_range(-30..=60i64);
            let sigma = rng.random_range(-30..=30i64);
            let a = CharNumbers::with_unknown_b1(e, sigma);
            let d = z2_table_chars(a, g, Z2Kind::Double).unwrap();
            let q = z2_table_chars(d, g, Z2Kind::Quotient).unwrap();
            let z = z2_table_chars(a, g, Z2Kind::Z2Construction).unwrap();
            // all columns: e, σ and the derived c₁², χ_h agree exactly
            assert_eq!(q, z, "g={g} e={e} sigma={sigma}");
            assert_eq!(q.c1sq(), z.c1sq());
            assert_eq!(q.chih(), z.chih());
            checked += 1;
        }
    }
    // the genus-2 specialization: (c, χ) ↦ (c + 4, χ + 1/2)
    let a = chars_from(16, -12, 0).unwrap();
    let z = z2_table_chars(a, 2, Z2Kind::Z2Construction).unwrap();
    assert_eq!(z.c1sq(), a.c1sq() + 4);
    assert_eq!(z.chih(), a.chih() + Rational64::new(1, 2));
    println!("PASS criterion 2: double/quotient coherence on {checked} samples, g in 0..=5");
}

#[test]
fn criterion_3_word_identities() {
    let start = Instant::now();
    for g in 2..=5usize {
        let s = SurfaceModel::standard(g);
        let h = geo4::lefschetz::chain_word(g);
        assert_eq!(evaluate(&s, &h).unwrap().mat, IntMat::identity(2 * g).neg(), "g = {g}");
        assert!(evaluate(&s, &h.repeat(2)).unwrap().mat.is_identity(), "g = {g}");
    }
    for g in 2..=3usize {
        let s = SurfaceModel::standard(g);
        let v = build_family(FamilyName::Vg { g }).unwrap();
        assert!(evaluate(&s, &v.word).unwrap().mat.is_identity(), "g = {g}");
    }
    {
        let s = SurfaceModel::standard(2);
        let w = MappingClassWord::of_twists(&["c2", "a", "b", "c", "d", "c4"]);
        let before = evaluate(&s, &w).unwrap();
        let substituted = lantern_substitute(&w, 1).unwrap();
        assert_eq!(substituted.len(), w.len() - 1);
        assert_eq!(evaluate(&s, &substituted).unwrap(), before);

        let ty = MappingClassWord::of_twists(&["y"]);
        let lhs = twist_image(&s, &ty, "z").unwrap();
        let rhs = s.reflection().unwrap().mat.apply(&s.curve("z").unwrap().homology);
        assert_eq!(lhs, rhs);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "word identity suite took {elapsed:?}");
    println!("PASS criterion 3: word identities exact in {elapsed:?}");
}

#[test]
fn criterion_4_quotient_family_table() {
    // calculus path on the full grid
    for g in 2..=10i64 {
        for k in 0..=4i64 {
            let x = CharNumbers::with_unknown_b1(4 * g + 8, -4 * g - 4);
            let mut d = z2_table_chars(x, g, Z2Kind::Double).unwrap();
            for _ in 0..2 * k {
                d = lantern_chars(d);
            }
            let y = z2_table_chars(d, g, Z2Kind::Quotient).unwrap().with_b1(0).unwrap();
            assert_eq!((y.e, y.sigma), (6 * g + 6 - k, -4 - 4 * g + k), "g={g} k={k}");
            assert_eq!(y.b2plus(), Some(g), "g={g} k={k}");
            assert_eq!(y.b2minus(), Some(5 * g + 4 - k), "g={g} k={k}");
        }
    }
    // cycle-count path at genus two (the hyperelliptic case): the doubled
    // word and its lantern reductions give the same numbers
    for k in 0..=3i64 {
        let pf = build_family(FamilyName::Vg2k { g: 2, k: k as usize }).unwrap();
        let dx = total_space_chars(&pf).unwrap();
        assert_eq!((dx.e, dx.sigma), (36 - 2 * k, -24 + 2 * k), "k={k}");
        let y = z2_table_chars(dx, 2, Z2Kind::Quotient).unwrap().with_b1(0).unwrap();
        assert_eq!((y.e, y.sigma), (6 * 2 + 6 - k, -4 - 8 + k));
        assert_eq!((y.b2plus(), y.b2minus()), (Some(2), Some(14 - k)));
    }
    // the word-length Euler count agrees wherever the word exists
    for g in 2..=5usize {
        for k in 0..=(4usize).min(g + 1) {
            let pf = build_family(FamilyName::Vg2k { g, k }).unwrap();
            let e = geo4::lefschetz::total_space_euler(&pf);
            assert_eq!(e, 12 * g as i64 + 12 - 2 * k as i64, "g={g} k={k}");
        }
    }
    println!("PASS criterion 4: quotient-family table exact, g in 2..=10, k in 0..=4 (both paths at g = 2)");
}

#[test]
fn criterion_5_pi1_certificates() {
    let budget = std::time::Duration::from_secs(1);
    // telescoping pipeline: index 2 and divisors [2]
    let t = Instant::now();
    let g = FpGroup::parse_gens_relators(&["a1", "b2"], &[&[1, 2, -1, -2][..]]);
    let g = g.surgery_quotient(&Word::empty(), &Word::gen(0), 1, 1).unwrap();
    let g = g.surgery_quotient(&Word::empty(), &Word::gen(1), 1, 2).unwrap();
    assert_eq!(coset_enumeration(&g, &[], 100_000), CosetResult::Finite(2));
    assert_eq!(g.abelianization().divisors, vec![2]);
    assert!(t.elapsed() < budget, "telescoping pipeline took {:?}", t.elapsed());

    // 1/n variants give ℤ_n for n = 0..6
    let t = Instant::now();
    for n in 0..=6 {
        let g = FpGroup::parse_gens_relators(&["a1", "b2"], &[&[1, 2, -1, -2][..]]);
        let g = g.surgery_quotient(&Word::empty(), &Word::gen(0), 1, 1).unwrap();
        let g = g.surgery_quotient(&Word::empty(), &Word::gen(1), 1, n).unwrap();
        assert!(g.abelianization().is_cyclic_of_order(n as u32), "n = {n}");
    }
    assert!(t.elapsed() < budget);

    // the doubled six-lantern word at genus two has trivial first homology
    let t = Instant::now();
    let pf = build_family(FamilyName::Vg2k { g: 2, k: 3 }).unwrap();
    assert!(h1_of_total_space(&pf).unwrap().is_trivial());
    assert!(t.elapsed() < budget, "relator-matrix certificate took {:?}", t.elapsed());

    // the scheduled-surgery certificate closes to the trivial group
    for k in 1..=3usize {
        let t = Instant::now();
        let class = geography::certs::run_pi1_fixture(Pi1Fixture::SurgeryScheduleSigma3 { base_genus: k })
            .unwrap();
        assert_eq!(class, geo4::invariants::Pi1Class::Trivial, "k = {k}");
        assert!(t.elapsed() < budget, "schedule k={k} took {:?}", t.elapsed());
    }

    // the amalgamated identification certificate has index two
    let t = Instant::now();
    let class = geography::certs::run_pi1_fixture(Pi1Fixture::AmalgamHalfTwistSquare).unwrap();
    assert_eq!(class, geo4::invariants::Pi1Class::Z2);
    assert!(t.elapsed() < budget, "amalgam took {:?}", t.elapsed());

    println!("PASS criterion 5: fundamental-group certificates, each under 1 s at cap 100000");
}

#[test]
fn criterion_6_decomposition_oracle() {
    let mut disagreements = 0u32;
    let mut cells = 0u32;
    for chi in 1..=40i64 {
        for halfc in 0..=4 * chi + 2 {
            cells += 1;
            if decompose(halfc, chi) != decompose_exhaustive(halfc, chi) {
                disagreements += 1;
            }
        }
    }
    assert_eq!(disagreements, 0);
    println!("PASS criterion 6: decomposition matches exhaustive search on {cells} cells, chi <= 40");
}

#[test]
fn criterion_7_coverage_reproduction() {
    let start = Instant::now();
    let fifteen = scan(Bounds::square(1, 15)).unwrap();
    let markers = fifteen.figure_markers();
    assert_eq!(markers.len(), 31, "{markers:?}");
    let listed = [(2, 5), (2, 7), (2, 9), (4, 13), (4, 15), (1, 4), (1, 6), (1, 8), (1, 9)];
    for (m, n) in listed {
        assert!(markers.contains(&LatticePoint::new(m, n)), "({m},{n})");
        assert!(markers.contains(&LatticePoint::new(n, m)), "mirror ({n},{m})");
    }
    for d in 1..=7 {
        assert!(markers.contains(&LatticePoint::new(d, d)), "diagonal ({d},{d})");
    }

    let sixty = scan(Bounds::square(1, 60)).unwrap();
    assert_eq!(sixty.open.len(), 7);
    for p in &sixty.open {
        assert!(p.m == p.n && p.m <= 7, "unexpected open point {p:?}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "scan took {elapsed:?}");
    println!(
        "PASS criterion 7: figure pattern (31 markers) and [1,60]² coverage ({} realized) in {elapsed:?}",
        sixty.realized.len()
    );
}

#[test]
fn criterion_8_end_to_end_validation() {
    let start = Instant::now();
    let report = scan(Bounds::square(1, 30)).unwrap();
    let mut mismatches = 0u32;
    let mut validated = 0u32;
    for (p, recipe) in &report.realized {
        match validate(recipe) {
            Ok(d) => {
                validated += 1;
                assert_eq!(
                    classify(&d).unwrap(),
                    StandardModel::Rab(p.m, p.n),
                    "({}, {}) via {}",
                    p.m,
                    p.n,
                    recipe.rule
                );
                let Irreducibility::Yes(anchor) = &d.irreducible else {
                    panic!("({}, {}) via {} lacks an irreducibility chain", p.m, p.n, recipe.rule);
                };
                assert!(!anchor.is_empty());
            }
            Err(geography::GeoError::InvariantMismatch { .. }) => mismatches += 1,
            Err(e) => panic!("({}, {}) via {}: {e}", p.m, p.n, recipe.rule),
        }
    }
    assert_eq!(mismatches, 0);
    // every in-region point of the box is accounted for
    for m in 1..=30 {
        for n in 1..=30 {
            let p = LatticePoint::new(m, n);
            if in_region(p) {
                assert!(report.status_of(p).is_some());
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "regression suite took {elapsed:?}");
    println!("PASS criterion 8: {validated} recipes validated and classified in {elapsed:?}");
}

#[test]
fn criterion_9_snf_oracle() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(1729);
    for trial in 0..1000 {
        let rows = rng.random_range(1..=8);
        let cols = rng.random_range(1..=8);
        let data: Vec<Vec<i128>> =
            (0..rows).map(|_| (0..cols).map(|_| rng.random_range(-9..=9)).collect()).collect();
        let m = IntMat::from_rows(&data);
        let snf = smith_normal_form(&m);
        assert!(snf.verify(&m), "certificate failed on trial {trial}: {m:?}");
        assert_eq!(snf.divisors, snf_divisors_naive(&m), "oracle mismatch on trial {trial}: {m:?}");
    }
    println!("PASS criterion 9: Smith normal form matches the elimination oracle on 1000 matrices");
}

/// Not a numbered criterion: the planner and validator stay coherent under
/// the orientation symmetry and never emit a negative-Chern recipe.
#[test]
fn planner_symmetry_and_chern_bound() {
    let report = scan(Bounds::square(1, 20)).unwrap();
    for (p, recipe) in &report.realized {
        let mirror = LatticePoint::new(p.n, p.m);
        assert!(
            matches!(geography::plan(mirror).unwrap(), PlanOutcome::Realized(_)),
            "mirror of ({}, {}) not realized",
            p.m,
            p.n
        );
        let d = validate(recipe).unwrap();
        assert!(d.chars.c1sq() >= 0, "negative Chern number at ({}, {})", p.m, p.n);
        assert!(in_region(*p));
    }
}
