//! Construction trees and the end-to-end validator.
//!
//! A recipe node records the operation performed, the expected (e, σ) of its
//! output, the certificates attached at that stage, and its children. The
//! validator folds characteristic numbers through the exact invariant
//! calculus, re-runs every computed fundamental-group certificate, and
//! propagates minimality/irreducibility/parity only along anchored rules.
//! Any disagreement between a node's expectation and the folded value is an
//! `InvariantMismatch`: the core regression guard.

use super::blocks::{block_data, BlockId, Cert, CertKind};
use super::certs::run_pi1_fixture;
use super::GeoError;
use crate::invariants::{
    blow_up_chars, fiber_sum_chars, lantern_chars, reverse_orientation_chars, z2_table_chars,
    CharNumbers, Irreducibility, ManifoldDescriptor, Minimality, Parity, Pi1Class, Z2Kind,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum NodeKind {
    Block(BlockId),
    FiberSum { genus: i64, note: String },
    Luttinger { torus: String, curve: String, p: i32, q: i32 },
    TorusSurgery { p: i32, q: i32 },
    BlowUp { count: i64 },
    /// One column of the double/quotient/both table, along a genus-g surface.
    Z2Construction { genus: i64, mode: Z2Kind },
    LanternSub { count: i64 },
    FiberReversingDouble { genus: i64 },
    OrientationReversal,
    ExternalReference { key: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecipeNode {
    pub kind: NodeKind,
    pub expected_e: i64,
    pub expected_sigma: i64,
    pub certs: Vec<Cert>,
    pub children: Vec<RecipeNode>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Recipe {
    /// Planner rule that produced the recipe (sporadic fills keep a
    /// `sporadic` prefix; mirrored recipes keep their source tag).
    pub rule: String,
    pub root: RecipeNode,
}

impl RecipeNode {
    pub fn new(kind: NodeKind, chars: CharNumbers, children: Vec<RecipeNode>) -> RecipeNode {
        RecipeNode { kind, expected_e: chars.e, expected_sigma: chars.sigma, certs: Vec::new(), children }
    }

    pub fn with_certs(mut self, certs: Vec<Cert>) -> RecipeNode {
        self.certs.extend(certs);
        self
    }

    fn label(&self) -> String {
        match &self.kind {
            NodeKind::Block(id) => format!("Block({})", block_data(*id).label),
            NodeKind::FiberSum { genus, .. } => format!("FiberSum(g={genus})"),
            NodeKind::Luttinger { torus, .. } => format!("Luttinger({torus})"),
            NodeKind::TorusSurgery { p, q } => format!("TorusSurgery({p}/{q})"),
            NodeKind::BlowUp { count } => format!("BlowUp({count})"),
            NodeKind::Z2Construction { genus, mode } => format!("Z2({mode:?}, g={genus})"),
            NodeKind::LanternSub { count } => format!("LanternSub({count})"),
            NodeKind::FiberReversingDouble { genus } => format!("Double(g={genus})"),
            NodeKind::OrientationReversal => "Reverse".into(),
            NodeKind::ExternalReference { key } => format!("External({key})"),
        }
    }
}

/// Intermediate folded state of a construction.
#[derive(Debug, Clone)]
pub struct FoldState {
    pub chars: CharNumbers,
    pub pi1: Pi1Class,
    pub parity: Parity,
    pub symplectic: bool,
    pub minimal: Minimality,
    pub irreducible: Irreducibility,
    /// The designated gluing/quotient surface has trivial meridian in the
    /// complement.
    pub meridian_trivial: bool,
    /// Complement of the designated surface is simply connected.
    pub complement_simply_connected: bool,
    /// (X, designated surface) is relatively minimal.
    pub rel_min_pair: bool,
    /// An odd-self-intersection surface survives away from the designated
    /// loci.
    pub odd_surface: bool,
    /// The manifold is attested non-spin.
    pub non_spin: bool,
    /// A representative-level commuting involution is attested (doubles).
    pub involution: bool,
}

impl FoldState {
    fn from_chars(chars: CharNumbers) -> FoldState {
        FoldState {
            chars,
            pi1: Pi1Class::Unknown,
            parity: Parity::Unknown,
            symplectic: false,
            minimal: Minimality::Unknown,
            irreducible: Irreducibility::Unknown,
            meridian_trivial: false,
            complement_simply_connected: false,
            rel_min_pair: false,
            odd_surface: false,
            non_spin: false,
            involution: false,
        }
    }

    /// Parity derivations, one-directional:
    /// odd/nonspin certificates, σ ≢ 0 (mod 8) (even unimodular forms have
    /// signature divisible by eight), and the spin-signature rule for
    /// simply-connected manifolds.
    fn derive_parity(&mut self) {
        if self.parity != Parity::Unknown {
            return;
        }
        if self.odd_surface || self.non_spin {
            self.parity = Parity::Odd;
        } else if self.chars.sigma.rem_euclid(8) != 0 {
            self.parity = Parity::Odd;
        } else if self.pi1 == Pi1Class::Trivial && self.chars.sigma.rem_euclid(16) != 0 {
            self.parity = Parity::Odd;
        }
    }
}

fn apply_certs(state: &mut FoldState, certs: &[Cert], at: &str) -> Result<(), GeoError> {
    for cert in certs {
        if cert.anchor.trim().is_empty() {
            return Err(GeoError::AnchorMissing { at: at.into() });
        }
        match &cert.kind {
            CertKind::MeridianTrivial => state.meridian_trivial = true,
            CertKind::ComplementSimplyConnected => {
                state.meridian_trivial = true;
                state.complement_simply_connected = true;
            }
            CertKind::SimplyConnected => state.pi1 = Pi1Class::Trivial,
            CertKind::Pi1IsZ2 => state.pi1 = Pi1Class::Z2,
            CertKind::RelativelyMinimalPair => state.rel_min_pair = true,
            CertKind::Minimal => state.minimal = Minimality::Yes(cert.anchor.clone()),
            CertKind::OddSurfaceDisjoint => state.odd_surface = true,
            CertKind::NonSpin => state.non_spin = true,
            CertKind::InvolutionCommutes => state.involution = true,
            CertKind::ComputedPi1(fixture) => {
                let class = run_pi1_fixture(*fixture)?;
                match class {
                    Pi1Class::Trivial => {
                        state.pi1 = Pi1Class::Trivial;
                        // a certified-trivial over-group of the complement
                        // group also settles the meridian
                        state.meridian_trivial = true;
                        state.complement_simply_connected = true;
                    }
                    other => state.pi1 = other,
                }
            }
        }
    }
    Ok(())
}

/// Folds a recipe bottom-up into a manifold descriptor. Every node's
/// expectation is compared against the computed characteristic numbers.
pub fn validate(recipe: &Recipe) -> Result<ManifoldDescriptor, GeoError> {
    let state = fold(&recipe.root)?;
    let mut descriptor = ManifoldDescriptor::new(state.chars);
    descriptor.pi1 = state.pi1.clone();
    descriptor.parity = state.parity;
    descriptor.symplectic = state.symplectic;
    descriptor.minimal = state.minimal.clone();
    descriptor.irreducible = state.irreducible.clone();
    if descriptor.pi1.is_finite() {
        descriptor.chars = descriptor.chars.with_b1(0).map_err(GeoError::Char)?;
    }
    // minimal symplectic manifolds with residually finite π₁ are irreducible
    if descriptor.irreducible == Irreducibility::Unknown {
        if let Ok(upgraded) = crate::invariants::hk_irreducible(descriptor.clone()) {
            descriptor = upgraded;
        }
    }
    descriptor.normalize().map_err(GeoError::Char)
}

fn fold(node: &RecipeNode) -> Result<FoldState, GeoError> {
    let children: Vec<FoldState> = node.children.iter().map(fold).collect::<Result<_, _>>()?;
    let at = node.label();
    let mut state = match &node.kind {
        NodeKind::Block(id) => {
            let data = block_data(*id);
            let mut s = FoldState::from_chars(data.chars);
            s.pi1 = data.pi1.clone();
            s.symplectic = data.symplectic;
            apply_certs(&mut s, &data.certs, &at)?;
            s
        }
        NodeKind::FiberSum { genus, .. } => {
            let [left, right] = children.as_slice() else {
                return Err(GeoError::Malformed { at, detail: "fiber sum needs two children".into() });
            };
            let mut s = FoldState::from_chars(fiber_sum_chars(left.chars, right.chars, *genus));
            s.symplectic = left.symplectic && right.symplectic;
            // positive-genus sum of relatively minimal pairs, neither a
            // sphere bundle: the sum is minimal
            if *genus > 0 && left.rel_min_pair && right.rel_min_pair {
                s.minimal = Minimality::Yes("usher-fiber-sum-trichotomy".into());
            }
            s.odd_surface = left.odd_surface || right.odd_surface;
            s
        }
        NodeKind::Luttinger { .. } => {
            let [child] = children.as_slice() else {
                return Err(GeoError::Malformed { at, detail: "surgery needs one child".into() });
            };
            let mut s = child.clone();
            s.chars = crate::invariants::surgery_chars(s.chars);
            s.pi1 = Pi1Class::Unknown; // surgeries change π₁; certs restore it
            if let Minimality::Yes(_) = child.minimal {
                s.minimal = Minimality::Yes("luttinger-surgery-preserves-minimality".into());
            }
            s
        }
        NodeKind::TorusSurgery { .. } => {
            let [child] = children.as_slice() else {
                return Err(GeoError::Malformed { at, detail: "surgery needs one child".into() });
            };
            let mut s = child.clone();
            s.chars = crate::invariants::surgery_chars(s.chars);
            s.pi1 = Pi1Class::Unknown;
            // multiplicity surgeries preserve neither minimality nor the
            // symplectic structure by default; certificates restore them
            s.minimal = Minimality::Unknown;
            s.symplectic = false;
            s
        }
        NodeKind::BlowUp { count } => {
            let [child] = children.as_slice() else {
                return Err(GeoError::Malformed { at, detail: "blow-up needs one child".into() });
            };
            let mut s = child.clone();
            s.chars = blow_up_chars(s.chars, *count);
            if *count > 0 {
                s.parity = Parity::Odd;
                s.odd_surface = true;
                s.minimal = Minimality::No("exceptional-sphere".into());
                s.rel_min_pair = false; // proper transforms need re-attestation
            }
            s
        }
        NodeKind::Z2Construction { genus, mode } => {
            let [child] = children.as_slice() else {
                return Err(GeoError::Malformed { at, detail: "quotient step needs one child".into() });
            };
            let chars = z2_table_chars(child.chars, *genus, *mode).map_err(GeoError::Char)?;
            let mut s = FoldState::from_chars(chars);
            match mode {
                Z2Kind::Z2Construction => {
                    if child.pi1 == Pi1Class::Trivial && child.meridian_trivial {
                        s.pi1 = Pi1Class::Z2;
                    }
                    s.odd_surface = child.odd_surface;
                    if child.rel_min_pair && child.symplectic && *genus >= 1 {
                        s.irreducible = Irreducibility::Yes("double-cover-of-relatively-minimal-pair".into());
                        s.minimal = Minimality::Yes("irreducible-implies-minimal".into());
                    }
                }
                Z2Kind::Quotient => {
                    // quotient of a simply-connected double by the attested
                    // free involution
                    if child.pi1 == Pi1Class::Trivial && child.involution {
                        s.pi1 = Pi1Class::Z2;
                    }
                    s.non_spin = child.non_spin;
                    if let Minimality::Yes(_) = child.minimal {
                        s.irreducible = Irreducibility::Yes("minimal-double-cover-quotient".into());
                        s.minimal = Minimality::Yes("irreducible-implies-minimal".into());
                    }
                }
                Z2Kind::Double => {
                    s.symplectic = child.symplectic;
                }
            }
            s
        }
        NodeKind::LanternSub { count } => {
            let [child] = children.as_slice() else {
                return Err(GeoError::Malformed { at, detail: "lantern step needs one child".into() });
            };
            let mut s = child.clone();
            for _ in 0..*count {
                s.chars = lantern_chars(s.chars);
            }
            if let Minimality::Yes(_) = child.minimal {
                s.minimal = Minimality::Yes("lantern-substitution-is-symplectic-blowdown".into());
            }
            s.pi1 = Pi1Class::Unknown; // re-certified per word
            s
        }
        NodeKind::FiberReversingDouble { genus } => {
            let [child] = children.as_slice() else {
                return Err(GeoError::Malformed { at, detail: "double needs one child".into() });
            };
            let chars = z2_table_chars(child.chars, *genus, Z2Kind::Double).map_err(GeoError::Char)?;
            let mut s = FoldState::from_chars(chars);
            s.symplectic = child.symplectic;
            if child.rel_min_pair && child.symplectic && *genus >= 1 {
                s.minimal = Minimality::Yes("usher-fiber-sum-trichotomy".into());
            }
            s
        }
        NodeKind::OrientationReversal => {
            let [child] = children.as_slice() else {
                return Err(GeoError::Malformed { at, detail: "reversal needs one child".into() });
            };
            let mut s = child.clone();
            s.chars = reverse_orientation_chars(s.chars);
            s.symplectic = false;
            if matches!(child.irreducible, Irreducibility::Yes(_)) {
                s.irreducible = Irreducibility::Yes("irreducibility-is-orientation-free".into());
                s.minimal = Minimality::Yes("irreducible-implies-minimal".into());
            } else {
                s.minimal = Minimality::Unknown;
            }
            s
        }
        NodeKind::ExternalReference { key } => {
            let mut s = FoldState::from_chars(CharNumbers::with_unknown_b1(node.expected_e, node.expected_sigma));
            s.pi1 = Pi1Class::Z2;
            s.parity = Parity::Odd;
            s.irreducible = Irreducibility::Yes(format!("external:{key}"));
            s.minimal = Minimality::Yes(format!("external:{key}"));
            s
        }
    };
    apply_certs(&mut state, &node.certs, &at)?;
    state.derive_parity();
    // minimal symplectic with residually finite π₁ is irreducible; derive it
    // here so downstream nodes (orientation reversal in particular) see it
    if state.irreducible == Irreducibility::Unknown
        && matches!(state.minimal, Minimality::Yes(_))
        && state.symplectic
        && state.pi1.residually_finite()
    {
        state.irreducible = Irreducibility::Yes("hamilton-kotschick-2006".into());
    }
    // the regression guard: the folded numbers must equal the recorded ones
    if (state.chars.e, state.chars.sigma) != (node.expected_e, node.expected_sigma) {
        return Err(GeoError::InvariantMismatch {
            at,
            expected: (node.expected_e, node.expected_sigma),
            got: (state.chars.e, state.chars.sigma),
        });
    }
    // the finite-π₁ classes pin the first Betti number
    if state.pi1.is_finite() {
        state.chars = state.chars.with_b1(0).map_err(GeoError::Char)?;
    }
    Ok(state)
}
