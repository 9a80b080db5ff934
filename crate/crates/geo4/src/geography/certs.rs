//! Re-runnable fundamental-group certificates.
//!
//! Each fixture names a bounded computation (coset enumeration,
//! abelianization, homology of a shipped word) whose outcome certifies the
//! fundamental-group class a recipe node claims. The validator re-runs the
//! fixture on every validation pass; a failed certificate is an error, never
//! a silently weaker claim.

use super::blocks::{m11_presentation, n0_fiber_relators, zpp_presentation};
use super::GeoError;
use crate::grouppres::{
    coset_enumeration, product_complement_presentation, AmalgamDescription, CosetResult, EdgeGen,
    FpGroup, Word, DEFAULT_COSET_CAP,
};
use crate::invariants::Pi1Class;
use crate::lefschetz::{build_family, h1_of_total_space, FamilyName};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pi1Fixture {
    /// Telescoping pair ⟨a₁, b₂ | [a₁, b₂]⟩ with trivial meridians; a
    /// (1,1)-surgery along a₁ and a (1,q)-surgery along b₂ leave ℤ_q.
    TelescopingSurgery { second_coeff: i32 },
    /// After summing with an elliptic block along the first torus the group
    /// is free on b₂; the (1,2)-surgery leaves ℤ₂.
    FreeThenHalf,
    /// The σ = −3 surgery schedule on the genus-2 bundle over Σ_k kills the
    /// fiber-complement group (so the double is simply connected).
    SurgeryScheduleSigma3 { base_genus: usize },
    /// First homology of the doubled lantern word vanishes (consistency
    /// check for the attested simple connectivity of the double).
    DoubleWordH1 { g: usize, k: usize },
    /// Amalgam of the twice-surgered blocks with the square identification;
    /// the result is ℤ₂ (the order-two small fill).
    AmalgamHalfTwistSquare,
    /// Same amalgam with both factors unsurgered on the relevant handle; the
    /// result is trivial (complement certificate for the quotient fill).
    AmalgamUnitSquare,
    /// Free-abelian factor against the (1/2, 1)-surgered block, swept over
    /// the four sign identifications; every choice yields ℤ₂.
    AmalgamRankTwoHalf,
    /// Free-abelian factor against the (1,1)-surgered block, swept over
    /// signs; every choice is trivial (complement certificate).
    AmalgamRankTwoUnit,
    /// Commutator presentation of the once-surgered block with the three
    /// surface generators killed; trivial (the genus-two-sum fill).
    ZprimeSurfaceKill,
    /// Four sign-swept commutator surgeries on the genus-2 fibration over a
    /// genus-2 base kill everything.
    LuttingerKillGenusTwoBase,
    /// Two sign-swept commutator surgeries on the genus-2 fibration over the
    /// torus kill everything.
    LuttingerKillTorusBase,
    /// ⟨t⟩ free with a (1,2)-surgery along a surjective torus: ℤ₂.
    HalfTwistOnFreeCyclic,
}

fn expect_index(g: &FpGroup, want: usize, what: &str) -> Result<(), GeoError> {
    match coset_enumeration(g, &[], DEFAULT_COSET_CAP) {
        CosetResult::Finite(n) if n == want => Ok(()),
        CosetResult::Finite(n) => Err(GeoError::CertificateFailed {
            fixture: what.into(),
            detail: format!("expected index {want}, enumerated {n}"),
        }),
        CosetResult::Exceeded => Err(GeoError::CertificateFailed {
            fixture: what.into(),
            detail: "coset enumeration exceeded its cap".into(),
        }),
    }
}

/// The four sign-swept commutator relators `{u, v}·w`; the certificate must
/// hold for each.
fn sign_swept(u: &Word, v: &Word, w: &Word) -> Vec<Word> {
    Word::commutator_sign_variants(u, v).into_iter().map(|c| c.concat(w)).collect()
}

fn cartesian(choices: &[Vec<Word>]) -> Vec<Vec<Word>> {
    let mut out: Vec<Vec<Word>> = vec![Vec::new()];
    for c in choices {
        let mut next = Vec::with_capacity(out.len() * c.len());
        for prefix in &out {
            for w in c {
                let mut row = prefix.clone();
                row.push(w.clone());
                next.push(row);
            }
        }
        out = next;
    }
    out
}

/// Runs a fixture; on success returns the certified class of the group the
/// fixture speaks about (for complement certificates this is the class of
/// the complement's over-group).
pub fn run_pi1_fixture(f: Pi1Fixture) -> Result<Pi1Class, GeoError> {
    match f {
        Pi1Fixture::TelescopingSurgery { second_coeff } => {
            let g = FpGroup::parse_gens_relators(&["a1", "b2"], &[&[1, 2, -1, -2][..]]);
            let mu = Word::empty();
            let g = g.surgery_quotient(&mu, &Word::gen(0), 1, 1).unwrap();
            let g = g.surgery_quotient(&mu, &Word::gen(1), 1, second_coeff).unwrap();
            let ab = g.abelianization();
            if !ab.is_cyclic_of_order(second_coeff.unsigned_abs()) {
                return Err(GeoError::CertificateFailed {
                    fixture: "telescoping-surgery".into(),
                    detail: format!("abelianization {ab:?} is not cyclic of order {second_coeff}"),
                });
            }
            match second_coeff {
                0 => Ok(Pi1Class::FreeAbelian(1)),
                1 => {
                    expect_index(&g, 1, "telescoping-surgery")?;
                    Ok(Pi1Class::Trivial)
                }
                2 => {
                    expect_index(&g, 2, "telescoping-surgery")?;
                    Ok(Pi1Class::Z2)
                }
                n => {
                    expect_index(&g, n.unsigned_abs() as usize, "telescoping-surgery")?;
                    Ok(Pi1Class::Zn(n.unsigned_abs()))
                }
            }
        }
        Pi1Fixture::FreeThenHalf => {
            let g = FpGroup::parse_gens_relators(&["b2"], &[]);
            let g = g.surgery_quotient(&Word::empty(), &Word::gen(0), 1, 2).unwrap();
            expect_index(&g, 2, "free-then-half")?;
            Ok(Pi1Class::Z2)
        }
        Pi1Fixture::HalfTwistOnFreeCyclic => {
            let g = FpGroup::parse_gens_relators(&["t"], &[]);
            let g = g.surgery_quotient(&Word::empty(), &Word::gen(0), 1, 2).unwrap();
            expect_index(&g, 2, "half-twist-on-free-cyclic")?;
            Ok(Pi1Class::Z2)
        }
        Pi1Fixture::SurgeryScheduleSigma3 { base_genus } => {
            let k = base_genus;
            let (mut g, boundary) = product_complement_presentation(k, true);
            // vanishing-cycle relators of the genus-2 fiber, rebased to the
            // product generators a1, b1, a2, b2
            let off = 2 * k;
            for rel in n0_fiber_relators() {
                let shifted = Word(rel.0.iter().map(|&l| l + (off as i32) * l.signum()).collect());
                g.add_relator(shifted).unwrap();
            }
            // surgery schedule: each line adds μ_T · m_T
            for torus in ["J1", "J2"] {
                let t = boundary.iter().find(|t| t.torus == torus).unwrap();
                g = g.surgery_quotient(&t.meridian, &t.pushoff_m, 1, 1).unwrap();
            }
            for i in 1..=k {
                for torus in [format!("T{i}"), format!("L{i}")] {
                    let t = boundary.iter().find(|t| t.torus == torus).unwrap();
                    g = g.surgery_quotient(&t.meridian, &t.pushoff_m, 1, 1).unwrap();
                }
            }
            if !g.abelianization().is_trivial() {
                return Err(GeoError::CertificateFailed {
                    fixture: "sigma3-schedule".into(),
                    detail: "abelianization is non-trivial".into(),
                });
            }
            expect_index(&g, 1, "sigma3-schedule")?;
            Ok(Pi1Class::Trivial)
        }
        Pi1Fixture::DoubleWordH1 { g, k } => {
            let pf = build_family(FamilyName::Vg2k { g, k }).map_err(GeoError::Lf)?;
            let ab = h1_of_total_space(&pf).map_err(GeoError::Lf)?;
            if !ab.is_trivial() {
                return Err(GeoError::CertificateFailed {
                    fixture: "double-word-h1".into(),
                    detail: format!("H₁ of the doubled word is {ab:?}"),
                });
            }
            Ok(Pi1Class::Trivial)
        }
        Pi1Fixture::AmalgamHalfTwistSquare | Pi1Fixture::AmalgamUnitSquare => {
            let half = matches!(f, Pi1Fixture::AmalgamHalfTwistSquare);
            let m_side = if half { m11_presentation(1, 2) } else { m11_presentation(1, 1) };
            let z_side = zpp_presentation(1, 1);
            let fixture = if half { "amalgam-half-twist-square" } else { "amalgam-unit-square" };
            // surface identifications α_i = β_i (i ≠ 3), α₃² = β₃
            let edges = vec![
                edge("a1", Word::gen(0), Word::gen(0)),
                edge("b1", Word::gen(1), Word::gen(1)),
                edge("a2", Word::gen(2), Word::gen(2).pow(2)),
                edge("b2", Word::gen(3), Word::gen(3)),
            ];
            let amalgam = AmalgamDescription { g1: m_side, g2: z_side.clone(), edges };
            let total = amalgam.evaluate();
            let want = if half { 2 } else { 1 };
            expect_index(&total, want, fixture)?;
            if half && !total.abelianization().is_cyclic_of_order(2) {
                return Err(GeoError::CertificateFailed {
                    fixture: fixture.into(),
                    detail: "abelianization is not of order two".into(),
                });
            }
            // conjugate relators [α₃, α₄]^w are redundant once [α₃, α₄]
            // itself dies, whatever the conjugator
            let off = 4;
            let comm = Word::commutator(&Word::gen(off + 2), &Word::gen(off + 3));
            if !total.certifies_trivial(&comm, 60_000) {
                return Err(GeoError::CertificateFailed {
                    fixture: fixture.into(),
                    detail: "commutator of the surgered pair not certified trivial".into(),
                });
            }
            Ok(if half { Pi1Class::Z2 } else { Pi1Class::Trivial })
        }
        Pi1Fixture::AmalgamRankTwoHalf | Pi1Fixture::AmalgamRankTwoUnit => {
            let half = matches!(f, Pi1Fixture::AmalgamRankTwoHalf);
            let fixture = if half { "amalgam-rank-two-half" } else { "amalgam-rank-two-unit" };
            let free_ab = FpGroup::parse_gens_relators(&["x", "y"], &[&[1, 2, -1, -2][..]]);
            let z_side = if half { zpp_presentation(2, 1) } else { zpp_presentation(1, 1) };
            let want = if half { 2 } else { 1 };
            // x = α₁ = α₃^{±1}, y = α₂ = α₄^{±1}: all four sign choices must
            // certify the same class
            for s1 in [1i32, -1] {
                for s2 in [1i32, -1] {
                    let edges = vec![
                        edge("e1", Word::gen(0), Word::gen(0)),
                        edge("e2", Word::gen(0), Word::gen(2).pow(s1)),
                        edge("e3", Word::gen(1), Word::gen(1)),
                        edge("e4", Word::gen(1), Word::gen(3).pow(s2)),
                    ];
                    let amalgam = AmalgamDescription { g1: free_ab.clone(), g2: z_side.clone(), edges };
                    let total = amalgam.evaluate();
                    expect_index(&total, want, fixture)?;
                }
            }
            Ok(if half { Pi1Class::Z2 } else { Pi1Class::Trivial })
        }
        Pi1Fixture::ZprimeSurfaceKill => {
            // the surface generators map onto α₁, α₂, α₄ and die in the sum
            let mut g = zpp_presentation(1, 1);
            for i in [0usize, 1, 3] {
                g.add_relator(Word::gen(i)).unwrap();
            }
            expect_index(&g, 1, "zprime-surface-kill")?;
            Ok(Pi1Class::Trivial)
        }
        Pi1Fixture::LuttingerKillGenusTwoBase => {
            // generators a1 b1 a2 b2 (base) and c1 d1 c2 d2 (fiber); the
            // fiber group dies through the vanishing cycles and the four
            // surgeries kill the base, for every commutator sign choice
            let gens = ["a1", "b1", "a2", "b2", "c1", "d1", "c2", "d2"];
            let base = FpGroup::new(gens.iter().map(|s| s.to_string()).collect(), Vec::new()).unwrap();
            let a1 = Word::gen(0);
            let b1 = Word::gen(1);
            let a2 = Word::gen(2);
            let b2 = Word::gen(3);
            let d1 = Word::gen(5);
            let fiber_kill: Vec<Word> = (4..8).map(Word::gen).collect();
            let choices = [
                sign_swept(&b1, &d1, &a1),
                sign_swept(&a1, &d1, &b1),
                sign_swept(&b2, &d1, &a2),
                sign_swept(&a2, &d1, &b2),
            ];
            for combo in cartesian(&choices) {
                let mut g = base.clone();
                for w in fiber_kill.iter().chain(combo.iter()) {
                    g.add_relator(w.clone()).unwrap();
                }
                expect_index(&g, 1, "luttinger-kill-genus-two-base")?;
            }
            Ok(Pi1Class::Trivial)
        }
        Pi1Fixture::LuttingerKillTorusBase => {
            let gens = ["a", "b", "c1", "d1", "c2", "d2"];
            let base = FpGroup::new(gens.iter().map(|s| s.to_string()).collect(), Vec::new()).unwrap();
            let a = Word::gen(0);
            let b = Word::gen(1);
            let d1 = Word::gen(3);
            let d2 = Word::gen(5);
            let fiber_kill: Vec<Word> = (2..6).map(Word::gen).collect();
            let choices = [sign_swept(&d1, &b, &a), sign_swept(&d2, &a, &b)];
            for combo in cartesian(&choices) {
                let mut g = base.clone();
                for w in fiber_kill.iter().chain(combo.iter()) {
                    g.add_relator(w.clone()).unwrap();
                }
                expect_index(&g, 1, "luttinger-kill-torus-base")?;
            }
            Ok(Pi1Class::Trivial)
        }
    }
}

fn edge(name: &str, phi1: Word, phi2: Word) -> EdgeGen {
    EdgeGen { name: name.into(), phi1, phi2 }
}
