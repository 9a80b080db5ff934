//! Curated building blocks for the planner.
//!
//! Every block carries its characteristic numbers (recomputed from
//! sub-block arithmetic where the block is assembled from products, blow-ups
//! and fiber sums; never hard-coded for those), its fundamental-group
//! class, and the attested certificates the validator is allowed to
//! propagate. Each certificate names its anchor in the rule/literature
//! registry.

use crate::invariants::{blow_up_chars, fiber_sum_chars, CharNumbers, Pi1Class};
use crate::lefschetz::{build_family, total_space_chars, FamilyName};
use crate::grouppres::{FpGroup, Word};
use serde::{Deserialize, Serialize};

/// Identifiers for the planner's building blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockId {
    /// Telescoping blocks assembled from the sub-blocks below.
    B,
    C,
    D,
    Bg(i64),
    /// Surgered product (Σ₂ × Σ_g) with 2g Luttinger surgeries.
    Zg(i64),
    /// Plain product Σ_{g1} × Σ_{g2}.
    SurfaceProduct(i64, i64),
    /// Elliptic surface with fiber sum index k, and its one/two torus
    /// surgeries.
    Ek(i64),
    Ek2(i64),
    Ek22(i64),
    /// Nucleus variant whose fiber sum with `S11` is simply connected.
    Eprime(i64),
    /// Simply connected blocks with a square-zero torus of trivial meridian.
    S11,
    X312,
    P58,
    /// Infinite-cyclic blocks on the σ = −3 line, k ≥ 2.
    Pk(i64),
    /// One Luttinger surgery on T⁴ # CP̄²; π₁ has the three-generator
    /// commutator presentation.
    Zprime,
    /// Two Luttinger surgeries on T⁴ # CP̄² with coefficients (1/q, 1/r).
    Zpp(i64, i64),
    /// Two Luttinger surgeries on T⁴ # 2CP̄² with coefficients (1/r, 1/q).
    M11(i64, i64),
    /// Sub-blocks: blown-up torus bundles and the genus-2 product.
    W1,
    W2,
    M,
    /// Genus-2 fibration with seven critical points (word cited, not shipped).
    N0,
    /// σ = −3 block: fiber sum of `N0` with the trivial genus-2 bundle over
    /// Σ_{k+1}, carrying the four-line surgery schedule.
    Nk(i64),
    /// Total space of the genus-g chain-word fibration.
    XgLF(i64),
    /// Cited genus-2 fibration totals (simply connected).
    Bk4,
    Bk8,
    Bk9,
    Bk12,
    Bk14,
    /// Cited genus-2 fibration totals with order-two fundamental group.
    R18LF,
    R19LF,
    R312LF,
    R314LF,
    /// Gompf's genus-2 sum with both-sided sphere sections, 3CP² # 16CP̄².
    Q1P2,
}

/// Attestable facts with their anchors; the validator propagates them, it
/// never proves them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertKind {
    /// The designated gluing/quotient surface has trivial meridian in its
    /// complement.
    MeridianTrivial,
    /// The complement of the designated surface is simply connected.
    ComplementSimplyConnected,
    SimplyConnected,
    Pi1IsZ2,
    /// (X, designated surface) is a relatively minimal pair.
    RelativelyMinimalPair,
    /// The block is minimal.
    Minimal,
    /// An embedded surface of odd self-intersection survives away from the
    /// designated surfaces and tori.
    OddSurfaceDisjoint,
    /// The manifold (or the double, for quotient steps) is known non-spin.
    NonSpin,
    /// A representative-level involution commuting with the monodromy exists
    /// (fiber-reversing doubles).
    InvolutionCommutes,
    /// A fundamental-group certificate the validator re-runs.
    ComputedPi1(super::certs::Pi1Fixture),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cert {
    pub kind: CertKind,
    pub anchor: String,
}

impl Cert {
    pub fn new(kind: CertKind, anchor: &str) -> Cert {
        Cert { kind, anchor: anchor.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockData {
    pub label: String,
    pub chars: CharNumbers,
    pub pi1: Pi1Class,
    pub symplectic: bool,
    pub certs: Vec<Cert>,
    /// How the characteristic numbers were obtained.
    pub derivation: String,
}

fn product_chars(g1: i64, g2: i64) -> CharNumbers {
    CharNumbers::with_unknown_b1((2 - 2 * g1) * (2 - 2 * g2), 0)
}

/// π₁ presentation of the once-surgered T⁴ # CP̄².
pub fn zprime_presentation() -> FpGroup {
    FpGroup::parse_gens_relators(&["a1", "a2", "a4"], &[&[1, 2, -1, -2][..], &[2, 3, -2, -3]])
}

/// π₁ presentations of the twice-surgered T⁴ # CP̄² (generators α₁..α₄).
/// The coefficient pair selects which defining relator carries the square.
pub fn zpp_presentation(q: i64, r: i64) -> FpGroup {
    let a1 = Word::gen(0);
    let a3 = Word::gen(2);
    let a4 = Word::gen(3);
    // α₃^q = [α₁⁻¹, α₄⁻¹], α₄^r = [α₁, α₃⁻¹]
    let r1 = a3.pow(q as i32).inverse().concat(&Word::commutator(&a1.inverse(), &a4.inverse()));
    let r2 = a4.pow(r as i32).inverse().concat(&Word::commutator(&a1, &a3.inverse()));
    let comm = |i: usize, j: usize| Word::commutator(&Word::gen(i), &Word::gen(j));
    FpGroup::new(
        vec!["al1".into(), "al2".into(), "al3".into(), "al4".into()],
        vec![r1, r2, comm(0, 1), comm(1, 2), comm(1, 3), comm(2, 3)],
    )
    .unwrap()
}

/// π₁ presentations of the twice-surgered T⁴ # 2CP̄² (generators β₁..β₄).
pub fn m11_presentation(r: i64, q: i64) -> FpGroup {
    let b1 = Word::gen(0);
    let b2 = Word::gen(1);
    let b4 = Word::gen(3);
    // β₁^r = [β₂⁻¹, β₄⁻¹], β₂^q = [β₁⁻¹, β₄]
    let r1 = b1.pow(r as i32).inverse().concat(&Word::commutator(&b2.inverse(), &b4.inverse()));
    let r2 = b2.pow(q as i32).inverse().concat(&Word::commutator(&b1.inverse(), &b4));
    let comm = |i: usize, j: usize| Word::commutator(&Word::gen(i), &Word::gen(j));
    FpGroup::new(
        vec!["be1".into(), "be2".into(), "be3".into(), "be4".into()],
        vec![r1, r2, comm(0, 2), comm(1, 2), comm(0, 1), comm(2, 3)],
    )
    .unwrap()
}

/// The two vanishing-cycle relators of the seven-critical-point genus-2
/// fibration, over generators (a1, b1, a2, b2) of the fiber group.
pub fn n0_fiber_relators() -> Vec<Word> {
    let a1 = Word::gen(0);
    let b1 = Word::gen(1);
    let a2 = Word::gen(2);
    let b2 = Word::gen(3);
    vec![b1.concat(&b2), a1.concat(&a2.pow(2)).concat(&b2.pow(4))]
}

pub fn block_data(id: BlockId) -> BlockData {
    use BlockId::*;
    let anchor_telescoping = "telescoping-triple-blocks";
    match id {
        W1 => BlockData {
            label: "W1".into(),
            chars: blow_up_chars(product_chars(1, 0), 4),
            pi1: Pi1Class::FreeAbelian(2),
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::MeridianTrivial, "exceptional-sphere-meets-surface-once"),
                Cert::new(CertKind::RelativelyMinimalPair, anchor_telescoping),
                Cert::new(CertKind::OddSurfaceDisjoint, "odd-torus-proper-transform"),
            ],
            derivation: "T²×S² blown up four times; genus-2 surface from resolved bisection".into(),
        },
        W2 => BlockData {
            label: "W2".into(),
            chars: blow_up_chars(product_chars(1, 1), 2),
            pi1: Pi1Class::FreeAbelian(4),
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::MeridianTrivial, "exceptional-sphere-meets-surface-once"),
                Cert::new(CertKind::RelativelyMinimalPair, anchor_telescoping),
                Cert::new(CertKind::OddSurfaceDisjoint, "odd-torus-proper-transform"),
            ],
            derivation: "T⁴ blown up twice; genus-2 surface from resolved diagonal pair".into(),
        },
        M => BlockData {
            label: "M".into(),
            chars: product_chars(1, 2),
            pi1: Pi1Class::FreeAbelian(6),
            symplectic: true,
            certs: vec![Cert::new(CertKind::RelativelyMinimalPair, anchor_telescoping)],
            derivation: "product T² × Σ₂".into(),
        },
        Zg(g) => BlockData {
            label: format!("Z{g}"),
            chars: product_chars(2, g),
            pi1: Pi1Class::Unknown,
            symplectic: true,
            certs: vec![Cert::new(CertKind::RelativelyMinimalPair, anchor_telescoping)],
            derivation: format!("(Σ₂ × Σ_{g}) after 2·{g} torus surgeries (surgery preserves e, σ)"),
        },
        SurfaceProduct(g1, g2) => BlockData {
            label: format!("Sigma{g1}xSigma{g2}"),
            chars: product_chars(g1, g2),
            pi1: Pi1Class::Unknown,
            symplectic: true,
            certs: vec![Cert::new(CertKind::RelativelyMinimalPair, "product-of-surfaces")],
            derivation: format!("product Σ_{g1} × Σ_{g2}"),
        },
        B => BlockData {
            label: "B".into(),
            chars: telescoping_chars(W2),
            pi1: Pi1Class::FreeAbelian(2),
            symplectic: true,
            certs: telescoping_certs("meridian-dies-after-block-surgeries"),
            derivation: "W2 fiber-summed with T²×Σ₂ along genus-2 surfaces, then four surgeries".into(),
        },
        C => BlockData {
            label: "C".into(),
            chars: telescoping_chars(W1),
            pi1: Pi1Class::FreeAbelian(2),
            symplectic: true,
            certs: telescoping_certs("meridian-commutator-killed-by-surgery"),
            derivation: "W1 fiber-summed with T²×Σ₂ along genus-2 surfaces, then two surgeries".into(),
        },
        D => BlockData {
            label: "D".into(),
            chars: fiber_sum_chars(block_data(W1).chars, block_data(W2).chars, 2),
            pi1: Pi1Class::FreeAbelian(2),
            symplectic: true,
            certs: telescoping_certs("exceptional-sphere-meets-surface-once"),
            derivation: "fiber sum of W1 and W2 along their genus-2 surfaces".into(),
        },
        Bg(g) => BlockData {
            label: format!("B{g}"),
            chars: fiber_sum_chars(block_data(B).chars, block_data(Zg(g)).chars, 2),
            pi1: Pi1Class::FreeAbelian(2),
            symplectic: true,
            certs: telescoping_certs("parallel-surface-meridian-transfer"),
            derivation: format!("fiber sum of B with the surgered product Z{g} along genus-2 surfaces"),
        },
        Ek(k) => BlockData {
            label: format!("E({k})"),
            chars: elliptic_chars(k),
            pi1: Pi1Class::Trivial,
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::MeridianTrivial, "elliptic-surface-section"),
                Cert::new(CertKind::RelativelyMinimalPair, "elliptic-fibration-relatively-minimal"),
                Cert::new(CertKind::SimplyConnected, "elliptic-surface-simply-connected"),
            ],
            derivation: format!("elliptic word of length 12·{k} over the torus"),
        },
        Ek2(k) => BlockData {
            label: format!("E({k})_2"),
            chars: elliptic_chars(k),
            pi1: Pi1Class::Trivial,
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::SimplyConnected, "gompf-nuclei-multiplicity-two"),
                Cert::new(CertKind::Minimal, "gompf-nuclei-multiplicity-two"),
                Cert::new(CertKind::OddSurfaceDisjoint, "gompf-nuclei-odd-surface"),
                Cert::new(CertKind::MeridianTrivial, "essential-torus-meets-sphere-once"),
                Cert::new(CertKind::RelativelyMinimalPair, "essential-torus-away-from-nucleus"),
            ],
            derivation: format!("one multiplicity-2 torus surgery on E({k}); e, σ unchanged"),
        },
        Ek22(k) => BlockData {
            label: format!("E({k})_2,2"),
            chars: elliptic_chars(k),
            pi1: Pi1Class::Z2,
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::Pi1IsZ2, "double-multiplicity-two-surgeries"),
                Cert::new(CertKind::Minimal, "double-multiplicity-two-surgeries"),
                Cert::new(CertKind::RelativelyMinimalPair, "fiber-sum-with-elliptic-detects-sphere"),
                Cert::new(CertKind::MeridianTrivial, "fiber-meridian-product-of-generators"),
            ],
            derivation: format!("two multiplicity-2 torus surgeries on E({k}); e, σ unchanged"),
        },
        Eprime(k) => BlockData {
            label: format!("E'({k})"),
            chars: elliptic_chars(k),
            pi1: Pi1Class::Unknown,
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::MeridianTrivial, "gompf-nuclei-variant"),
                Cert::new(CertKind::RelativelyMinimalPair, "gompf-nuclei-variant"),
            ],
            derivation: format!("nucleus variant of E({k}); e, σ as for E({k})"),
        },
        S11 => BlockData {
            label: "S11".into(),
            chars: chars_from_c_chi(1, 2),
            pi1: Pi1Class::Trivial,
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::SimplyConnected, "gompf-sum-s11"),
                Cert::new(CertKind::Minimal, "gompf-sum-s11"),
                Cert::new(CertKind::MeridianTrivial, "gompf-sum-s11"),
                Cert::new(CertKind::ComplementSimplyConnected, "gompf-sum-s11-two-surfaces"),
                Cert::new(CertKind::RelativelyMinimalPair, "gompf-sum-s11"),
            ],
            derivation: "Chern number 1, holomorphic Euler characteristic 2".into(),
        },
        X312 => BlockData {
            label: "X312".into(),
            chars: chars_from_c_chi(7, 2),
            pi1: Pi1Class::Trivial,
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::SimplyConnected, "telescoping-family-x312"),
                Cert::new(CertKind::Minimal, "telescoping-family-x312"),
                Cert::new(CertKind::MeridianTrivial, "telescoping-family-x312"),
                Cert::new(CertKind::RelativelyMinimalPair, "telescoping-family-x312"),
            ],
            derivation: "Chern number 7, holomorphic Euler characteristic 2".into(),
        },
        P58 => BlockData {
            label: "P58".into(),
            chars: chars_from_c_chi(21, 3),
            pi1: Pi1Class::FreeAbelian(1),
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::Minimal, "telescoping-family-p58"),
                Cert::new(CertKind::MeridianTrivial, "telescoping-family-p58"),
                Cert::new(CertKind::RelativelyMinimalPair, "telescoping-family-p58"),
            ],
            derivation: "Chern number 21, holomorphic Euler characteristic 3".into(),
        },
        Pk(k) => BlockData {
            label: format!("P{k}"),
            chars: CharNumbers::from_betti(1 + 2 * k, 4 + 2 * k),
            pi1: Pi1Class::FreeAbelian(1),
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::Minimal, "telescoping-family-pk"),
                Cert::new(CertKind::MeridianTrivial, "telescoping-family-pk"),
                Cert::new(CertKind::RelativelyMinimalPair, "telescoping-family-pk"),
            ],
            derivation: format!("b₂± = (1+2·{k}, 4+2·{k}), σ = −3 family with surjective torus inclusion"),
        },
        Zprime => BlockData {
            label: "Z'".into(),
            chars: super::surgery_of(blow_up_chars(product_chars(1, 1), 1)),
            pi1: Pi1Class::Presented(zprime_presentation()),
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::MeridianTrivial, "surface-inclusion-surjective"),
                Cert::new(CertKind::RelativelyMinimalPair, "akhmedov-park-small-exotic"),
            ],
            derivation: "one Luttinger surgery on T⁴ # CP̄²".into(),
        },
        Zpp(q, r) => BlockData {
            label: format!("Z''(1/{q},1/{r})"),
            chars: super::surgery_of(blow_up_chars(product_chars(1, 1), 1)),
            pi1: Pi1Class::Presented(zpp_presentation(q, r)),
            symplectic: true,
            certs: vec![Cert::new(CertKind::RelativelyMinimalPair, "akhmedov-park-small-exotic")],
            derivation: format!("two Luttinger surgeries (1/{q}, 1/{r}) on T⁴ # CP̄²"),
        },
        M11(r, q) => BlockData {
            label: format!("M(1/{r},1/{q})"),
            chars: super::surgery_of(blow_up_chars(product_chars(1, 1), 2)),
            pi1: Pi1Class::Presented(m11_presentation(r, q)),
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::MeridianTrivial, "meridian-trivial-in-surgered-complement"),
                Cert::new(CertKind::RelativelyMinimalPair, "akhmedov-park-small-exotic"),
            ],
            derivation: format!("two Luttinger surgeries (1/{r}, 1/{q}) on T⁴ # 2CP̄²"),
        },
        N0 => BlockData {
            label: "N0".into(),
            chars: CharNumbers::with_unknown_b1(3, -3),
            pi1: Pi1Class::Unknown,
            symplectic: true,
            certs: vec![Cert::new(CertKind::RelativelyMinimalPair, "seven-chart-genus-two-fibration")],
            derivation: "genus-2 fibration with seven critical points; word cited, chars only".into(),
        },
        Nk(k) => BlockData {
            label: format!("N{k}"),
            chars: fiber_sum_chars(
                block_data(N0).chars,
                block_data(SurfaceProduct(2, k + 1)).chars,
                2,
            ),
            pi1: Pi1Class::Unknown,
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::Minimal, "relatively-minimal-over-positive-genus"),
                Cert::new(CertKind::RelativelyMinimalPair, "regular-fiber-of-relatively-minimal"),
            ],
            derivation: format!("fiber sum of N0 with the trivial genus-2 bundle over Σ_{}", k + 1),
        },
        XgLF(g) => BlockData {
            label: format!("X{g}"),
            chars: chain_fibration_chars(g),
            pi1: Pi1Class::Trivial,
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::SimplyConnected, "chain-word-kills-fiber-group"),
                Cert::new(CertKind::MeridianTrivial, "hyperelliptic-fibration-section"),
                Cert::new(CertKind::ComplementSimplyConnected, "chain-word-kills-fiber-group"),
                Cert::new(CertKind::RelativelyMinimalPair, "untwisted-self-sum-is-elliptic"),
            ],
            derivation: format!("genus-{g} chain-word fibration; e, σ from the cycle counts"),
        },
        Bk4 => cited_simply_connected("Bk4", 1, 4, "small-genus-two-fibration-four"),
        Bk8 => cited_simply_connected("Bk8", 1, 8, "small-genus-two-fibration-eight"),
        Bk9 => cited_simply_connected("Bk9", 1, 9, "small-genus-two-fibration-nine"),
        Bk12 => cited_simply_connected("Bk12", 3, 12, "matched-pair-fibration-twelve"),
        Bk14 => cited_simply_connected("Bk14", 3, 14, "matched-pair-fibration-fourteen"),
        R18LF => cited_order_two("R18LF", 1, 8, "reindexed-conjugate-fibration"),
        R19LF => cited_order_two("R19LF", 1, 9, "reindexed-conjugate-fibration"),
        R312LF => cited_order_two("R312LF", 3, 12, "reindexed-conjugate-fibration"),
        R314LF => cited_order_two("R314LF", 3, 14, "reindexed-conjugate-fibration"),
        Q1P2 => BlockData {
            label: "Q1P2".into(),
            chars: CharNumbers::from_betti(3, 16),
            pi1: Pi1Class::Trivial,
            symplectic: true,
            certs: vec![
                Cert::new(CertKind::SimplyConnected, "gompf-sum-p2-q1"),
                Cert::new(CertKind::Minimal, "gompf-sum-p2-q1"),
                Cert::new(CertKind::MeridianTrivial, "immersed-spheres-both-sides"),
                Cert::new(CertKind::ComplementSimplyConnected, "immersed-spheres-both-sides"),
                Cert::new(CertKind::RelativelyMinimalPair, "gompf-sum-p2-q1"),
            ],
            derivation: "genus-2 sum of P₂ and Q₁, b₂± = (3, 16)".into(),
        },
    }
}

fn telescoping_chars(w_side: BlockId) -> CharNumbers {
    // (W_i fiber-summed with T²×Σ₂ along genus-2 surfaces); surgeries
    // preserve e and σ.
    super::surgery_of(fiber_sum_chars(block_data(w_side).chars, block_data(BlockId::M).chars, 2))
}

fn telescoping_certs(meridian_anchor: &str) -> Vec<Cert> {
    vec![
        Cert::new(CertKind::MeridianTrivial, meridian_anchor),
        Cert::new(CertKind::OddSurfaceDisjoint, "odd-torus-proper-transform"),
        Cert::new(CertKind::RelativelyMinimalPair, "telescoping-triple-blocks"),
        Cert::new(CertKind::Minimal, "telescoping-triple-blocks"),
    ]
}

fn elliptic_chars(k: i64) -> CharNumbers {
    // word-derived for small k, closed form beyond
    if (1..=6).contains(&k) {
        let pf = build_family(FamilyName::En { n: k as usize }).expect("elliptic family");
        total_space_chars(&pf).expect("elliptic signature")
    } else {
        CharNumbers::with_unknown_b1(12 * k, -8 * k)
    }
}

fn chain_fibration_chars(g: i64) -> CharNumbers {
    if (2..=8).contains(&g) {
        let pf = build_family(FamilyName::Wg { g: g as usize }).expect("chain family");
        let mut pf = pf;
        pf.hyperelliptic = true; // chain words are hyperelliptic at every genus
        total_space_chars(&pf).expect("chain signature")
    } else {
        CharNumbers::with_unknown_b1(4 * g + 8, -4 * g - 4)
    }
}

/// e = 12χ_h − c₁², σ = c₁² − 8χ_h.
fn chars_from_c_chi(c: i64, chi: i64) -> CharNumbers {
    CharNumbers::with_unknown_b1(12 * chi - c, c - 8 * chi)
}

fn cited_simply_connected(label: &str, b2p: i64, b2m: i64, anchor: &str) -> BlockData {
    BlockData {
        label: label.into(),
        chars: CharNumbers::from_betti(b2p, b2m),
        pi1: Pi1Class::Trivial,
        symplectic: true,
        certs: vec![
            Cert::new(CertKind::SimplyConnected, anchor),
            Cert::new(CertKind::Minimal, anchor),
            Cert::new(CertKind::MeridianTrivial, "genus-two-fibration-section"),
            Cert::new(CertKind::ComplementSimplyConnected, "genus-two-fibration-section"),
            Cert::new(CertKind::RelativelyMinimalPair, anchor),
        ],
        derivation: format!("cited genus-2 fibration total space with b₂± = ({b2p}, {b2m})"),
    }
}

fn cited_order_two(label: &str, b2p: i64, b2m: i64, anchor: &str) -> BlockData {
    BlockData {
        label: label.into(),
        chars: CharNumbers::from_betti(b2p, b2m),
        pi1: Pi1Class::Z2,
        symplectic: true,
        certs: vec![
            Cert::new(CertKind::Pi1IsZ2, anchor),
            Cert::new(CertKind::Minimal, anchor),
            Cert::new(CertKind::NonSpin, "separating-vanishing-cycle-odd-form"),
        ],
        derivation: format!("cited genus-2 fibration total space with b₂± = ({b2p}, {b2m})"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sub_block_arithmetic() {
        assert_eq!((block_data(BlockId::W1).chars.e, block_data(BlockId::W1).chars.sigma), (4, -4));
        assert_eq!((block_data(BlockId::W2).chars.e, block_data(BlockId::W2).chars.sigma), (2, -2));
        assert_eq!((block_data(BlockId::M).chars.e, block_data(BlockId::M).chars.sigma), (0, 0));
        let b = block_data(BlockId::B).chars;
        assert_eq!((b.e, b.sigma), (6, -2));
        let c = block_data(BlockId::C).chars;
        assert_eq!((c.e, c.sigma), (8, -4));
        let d = block_data(BlockId::D).chars;
        assert_eq!((d.e, d.sigma), (10, -6));
        assert_eq!(d.c1sq() / 2, 1);
        for g in 1..=4 {
            let bg = block_data(BlockId::Bg(g)).chars;
            assert_eq!((bg.e, bg.sigma), (4 * g + 6, -2), "g = {g}");
            // half-Chern number 4g + 3 at holomorphic Euler characteristic g + 1
            assert_eq!(bg.c1sq() / 2, 4 * g + 3);
        }
    }

    #[test]
    fn cited_block_tables() {
        let s11 = block_data(BlockId::S11).chars;
        assert_eq!((s11.e, s11.sigma), (23, -15));
        assert_eq!(s11.with_b1(0).unwrap().b2plus(), Some(3));
        let x = block_data(BlockId::X312).chars.with_b1(0).unwrap();
        assert_eq!((x.b2plus(), x.b2minus()), (Some(3), Some(12)));
        let p = block_data(BlockId::P58).chars.with_b1(0).unwrap();
        assert_eq!((p.b2plus(), p.b2minus()), (Some(5), Some(8)));
        let zp = block_data(BlockId::Zprime).chars;
        assert_eq!((zp.e, zp.sigma), (1, -1));
        let m11 = block_data(BlockId::M11(1, 1)).chars;
        assert_eq!((m11.e, m11.sigma), (2, -2));
        for k in 1..=4 {
            let nk = block_data(BlockId::Nk(k)).chars;
            assert_eq!((nk.e, nk.sigma), (4 * k + 7, -3), "k = {k}");
        }
        for g in 2..=4 {
            let x = block_data(BlockId::XgLF(g)).chars;
            assert_eq!((x.e, x.sigma), (4 * g + 8, -4 * g - 4));
        }
        for k in 1..=3 {
            let e = block_data(BlockId::Ek(k)).chars;
            assert_eq!((e.e, e.sigma), (12 * k, -8 * k));
        }
    }

    #[test]
    fn presentations_certify() {
        use crate::grouppres::{coset_enumeration, CosetResult};
        let zp = zprime_presentation();
        assert_eq!(zp.abelianization().rank, 3);
        // the surgered Z'' groups have perfect-commutator defining relators
        let z = zpp_presentation(1, 1);
        assert_eq!(z.gens.len(), 4);
        // adding α₁ = α₂ = α₄ = 1 collapses the group
        let mut g = z.clone();
        for i in [0usize, 1, 3] {
            g.add_relator(Word::gen(i)).unwrap();
        }
        assert_eq!(coset_enumeration(&g, &[], 10_000), CosetResult::Finite(1));
    }
}
