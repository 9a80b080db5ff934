//! Exact arithmetic of characteristic numbers and the rule engine for
//! homeomorphism type, minimality, and irreducibility.
//!
//! A [`CharNumbers`] value is determined by the Euler characteristic `e`,
//! the signature `σ`, and (when known) the first Betti number `b₁`; every
//! other coordinate is derived from the conversion identities
//!
//! ```text
//! b₂± = (e − 2 + 2b₁ ± σ)/2      c₁² = 2e + 3σ      χ_h = (e + σ)/4
//! ```
//!
//! so internal consistency holds by construction. `χ_h` is kept as an exact
//! rational: quotient constructions produce half-integral values
//! mid-computation and integrality is only meaningful at classification
//! time.

use num_rational::Rational64;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grouppres::FpGroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("parity mismatch: e − 2 + 2b₁ ± σ must both be even (e={e}, sigma={sigma}, b1={b1:?})")]
    ParityMismatch { e: i64, sigma: i64, b1: Option<i64> },
    #[error("negative Betti number: b₂{sign} = {value} < 0")]
    NegativeBetti { sign: char, value: i64 },
    #[error("quotient parity fails: need e, σ even and b₂± odd (e={e}, sigma={sigma})")]
    IndivisibleQuotient { e: i64, sigma: i64 },
    #[error("transformation table requires b₁ = 0 but b₁ = {0}")]
    NonzeroB1(i64),
    #[error("classification requires known parity and π₁ certificates")]
    InsufficientCertificates,
    #[error("rejected by Rokhlin rule: π₁ trivial, even form, σ = {0} not divisible by 16")]
    RokhlinViolation(i64),
    #[error("rule not applicable: {0}")]
    RuleNotApplicable(String),
}

/// The tuple (e, σ, b₂⁺, b₂⁻, c₁², χ_h, b₁) with b₁ optional.
///
/// `b₁` is deliberately `Option`: fiber sums do not determine it, so it
/// propagates as unknown unless a π₁ certificate supplies it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CharNumbers {
    pub e: i64,
    pub sigma: i64,
    pub b1: Option<i64>,
}

impl CharNumbers {
    /// Builds a consistent tuple from (e, σ, b₁), rejecting parity and
    /// negativity violations.
    pub fn from_e_sigma_b1(e: i64, sigma: i64, b1: i64) -> Result<Self, CharError> {
        if (e - 2 + 2 * b1 + sigma).rem_euclid(2) != 0 {
            return Err(CharError::ParityMismatch { e, sigma, b1: Some(b1) });
        }
        let plus = (e - 2 + 2 * b1 + sigma) / 2;
        let minus = (e - 2 + 2 * b1 - sigma) / 2;
        if plus < 0 {
            return Err(CharError::NegativeBetti { sign: '+', value: plus });
        }
        if minus < 0 {
            return Err(CharError::NegativeBetti { sign: '-', value: minus });
        }
        Ok(CharNumbers { e, sigma, b1: Some(b1) })
    }

    /// Tuple with unknown b₁ (no Betti-number data derivable).
    pub fn with_unknown_b1(e: i64, sigma: i64) -> Self {
        CharNumbers { e, sigma, b1: None }
    }

    /// Attaches a first Betti number supplied by a π₁ certificate.
    pub fn with_b1(self, b1: i64) -> Result<Self, CharError> {
        Self::from_e_sigma_b1(self.e, self.sigma, b1)
    }

    /// Builds from the lattice coordinates (b₂⁺, b₂⁻) assuming b₁ = 0.
    pub fn from_betti(b2plus: i64, b2minus: i64) -> Self {
        CharNumbers { e: 2 + b2plus + b2minus, sigma: b2plus - b2minus, b1: Some(0) }
    }

    pub fn b2plus(&self) -> Option<i64> {
        self.b1.map(|b1| (self.e - 2 + 2 * b1 + self.sigma) / 2)
    }

    pub fn b2minus(&self) -> Option<i64> {
        self.b1.map(|b1| (self.e - 2 + 2 * b1 - self.sigma) / 2)
    }

    pub fn c1sq(&self) -> i64 {
        2 * self.e + 3 * self.sigma
    }

    pub fn chih(&self) -> Rational64 {
        Rational64::new(self.e + self.sigma, 4)
    }
}

impl Serialize for CharNumbers {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let chih = self.chih();
        let mut st = serializer.serialize_struct("CharNumbers", 7)?;
        st.serialize_field("e", &self.e)?;
        st.serialize_field("sigma", &self.sigma)?;
        st.serialize_field("b1", &self.b1)?;
        st.serialize_field("b2plus", &self.b2plus())?;
        st.serialize_field("b2minus", &self.b2minus())?;
        st.serialize_field("c1sq", &self.c1sq())?;
        st.serialize_field("chih", &format!("{}/{}", chih.numer(), chih.denom()))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for CharNumbers {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            e: i64,
            sigma: i64,
            #[serde(default)]
            b1: Option<i64>,
        }
        let raw = Raw::deserialize(deserializer)?;
        match raw.b1 {
            Some(b1) => CharNumbers::from_e_sigma_b1(raw.e, raw.sigma, b1).map_err(serde::de::Error::custom),
            None => Ok(CharNumbers::with_unknown_b1(raw.e, raw.sigma)),
        }
    }
}

/// `chars_from` of the conversion table: (e, σ, b₁) → full tuple.
pub fn chars_from(e: i64, sigma: i64, b1: i64) -> Result<CharNumbers, CharError> {
    CharNumbers::from_e_sigma_b1(e, sigma, b1)
}

/// Fiber sum along a genus-g surface: e = e₁ + e₂ + 4g − 4, σ additive.
/// b₁ of the sum is not determined by the inputs and is left unknown.
pub fn fiber_sum_chars(a: CharNumbers, b: CharNumbers, g: i64) -> CharNumbers {
    assert!(g >= 0, "fiber sum genus must be non-negative");
    CharNumbers::with_unknown_b1(a.e + b.e + 4 * g - 4, a.sigma + b.sigma)
}

/// Blow-up: e += n, σ −= n (b₂⁻ grows by n); the enclosing descriptor
/// becomes odd, which is the caller's concern.
pub fn blow_up_chars(a: CharNumbers, n: i64) -> CharNumbers {
    assert!(n >= 0, "blow-up count must be non-negative");
    CharNumbers { e: a.e + n, sigma: a.sigma - n, b1: a.b1 }
}

/// Torus surgery preserves e and σ (and b₂± when b₁ is unchanged).
pub fn surgery_chars(a: CharNumbers) -> CharNumbers {
    a
}

/// Column selector for the double / quotient / both transformation table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Z2Kind {
    Double,
    Quotient,
    Z2Construction,
}

/// The invariant transformation table for doubling along a genus-g surface,
/// quotienting by the free involution, or the combined construction:
///
/// ```text
/// Double:   σ ↦ 2σ,   e ↦ 2e + 4g − 4
/// Quotient: σ ↦ σ/2,  e ↦ e/2
/// Both:     σ ↦ σ,    e ↦ e + 2g − 2
/// ```
///
/// The derived columns (c₁², χ_h, b₂±) then transform exactly as the table
/// prescribes. The table is stated for b₁ = 0; a known non-zero b₁ is
/// rejected.
pub fn z2_table_chars(a: CharNumbers, g: i64, kind: Z2Kind) -> Result<CharNumbers, CharError> {
    assert!(g >= 0, "surface genus must be non-negative");
    if let Some(b1) = a.b1 {
        if b1 != 0 {
            return Err(CharError::NonzeroB1(b1));
        }
    }
    match kind {
        Z2Kind::Double => Ok(CharNumbers { e: 2 * a.e + 4 * g - 4, sigma: 2 * a.sigma, b1: a.b1 }),
        Z2Kind::Quotient => {
            if a.e % 2 != 0 || a.sigma % 2 != 0 {
                return Err(CharError::IndivisibleQuotient { e: a.e, sigma: a.sigma });
            }
            if a.b1 == Some(0) {
                // b₂± must be odd so that (b₂± − 1)/2 is an integer.
                let plus = (a.e - 2 + a.sigma) / 2;
                let minus = (a.e - 2 - a.sigma) / 2;
                if plus % 2 == 0 || minus % 2 == 0 {
                    return Err(CharError::IndivisibleQuotient { e: a.e, sigma: a.sigma });
                }
            }
            Ok(CharNumbers { e: a.e / 2, sigma: a.sigma / 2, b1: a.b1 })
        }
        Z2Kind::Z2Construction => Ok(CharNumbers { e: a.e + 2 * g - 2, sigma: a.sigma, b1: a.b1 }),
    }
}

/// A lantern substitution on a positive factorization trades four twists for
/// three: word length (hence e) drops by one and σ increases by one.
pub fn lantern_chars(a: CharNumbers) -> CharNumbers {
    CharNumbers { e: a.e - 1, sigma: a.sigma + 1, b1: a.b1 }
}

/// Orientation reversal: e fixed, σ negated, b₂± swapped.
pub fn reverse_orientation_chars(a: CharNumbers) -> CharNumbers {
    CharNumbers { e: a.e, sigma: -a.sigma, b1: a.b1 }
}

// ---------------------------------------------------------------------------
// Descriptors and the classification rules
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pi1Class {
    Trivial,
    Z2,
    Zn(u32),
    FreeAbelian(u32),
    Presented(FpGroup),
    Unknown,
}

impl Pi1Class {
    /// Residual finiteness for the classes this workbench certifies.
    pub fn residually_finite(&self) -> bool {
        matches!(self, Pi1Class::Trivial | Pi1Class::Z2 | Pi1Class::Zn(_) | Pi1Class::FreeAbelian(_))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Pi1Class::Trivial | Pi1Class::Z2 | Pi1Class::Zn(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Odd,
    Even,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum W2Type {
    TypeI,
    TypeII,
    TypeIII,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Minimality {
    Yes(String),
    No(String),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Irreducibility {
    Yes(String),
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    Standard,
    Reversed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifoldDescriptor {
    pub chars: CharNumbers,
    pub pi1: Pi1Class,
    pub parity: Parity,
    pub w2type: W2Type,
    pub minimal: Minimality,
    pub irreducible: Irreducibility,
    pub symplectic: bool,
    pub orientation: Orientation,
}

impl ManifoldDescriptor {
    pub fn new(chars: CharNumbers) -> Self {
        ManifoldDescriptor {
            chars,
            pi1: Pi1Class::Unknown,
            parity: Parity::Unknown,
            w2type: W2Type::Unknown,
            minimal: Minimality::Unknown,
            irreducible: Irreducibility::Unknown,
            symplectic: false,
            orientation: Orientation::Standard,
        }
    }

    /// One-directional derivations: odd form with π₁ = ℤ₂ forces w₂-type (i);
    /// a trivial π₁ with even form and σ not divisible by 16 is rejected
    /// outright (spin signatures are divisible by 16).
    pub fn normalize(mut self) -> Result<Self, CharError> {
        if self.pi1 == Pi1Class::Trivial
            && self.parity == Parity::Even
            && self.chars.sigma.rem_euclid(16) != 0
        {
            return Err(CharError::RokhlinViolation(self.chars.sigma));
        }
        if self.parity == Parity::Odd && self.pi1 == Pi1Class::Z2 {
            self.w2type = W2Type::TypeI;
        }
        Ok(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum StandardModel {
    /// Odd form, π₁ = ℤ₂: the standard order-two model with b₂± = (a, b).
    Rab(i64, i64),
    /// Odd form, simply connected: a CP² # b CP̄².
    CPsum(i64, i64),
    OtherSpin,
    Unclassified(String),
}

/// Homeomorphism classifier. Reads only b₂±, π₁ class, and parity.
pub fn classify(d: &ManifoldDescriptor) -> Result<StandardModel, CharError> {
    if d.pi1 == Pi1Class::Unknown || d.parity == Parity::Unknown {
        return Err(CharError::InsufficientCertificates);
    }
    let (Some(plus), Some(minus)) = (d.chars.b2plus(), d.chars.b2minus()) else {
        return Err(CharError::InsufficientCertificates);
    };
    Ok(match (&d.pi1, d.parity) {
        (Pi1Class::Z2, Parity::Odd) => StandardModel::Rab(plus, minus),
        (Pi1Class::Trivial, Parity::Odd) => StandardModel::CPsum(plus, minus),
        (_, Parity::Even) => StandardModel::OtherSpin,
        (pi1, _) => StandardModel::Unclassified(format!("no rule for π₁ class {pi1:?} with odd form")),
    })
}

// ---------------------------------------------------------------------------
// Minimality of fiber sums and the irreducibility rule
// ---------------------------------------------------------------------------

/// Per-summand data for the fiber-sum minimality trichotomy.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberSumSide {
    /// The complement of the gluing surface contains no embedded symplectic
    /// (−1)-sphere.
    pub relatively_minimal: Option<bool>,
    /// The summand is an S²-bundle over a genus-g surface with the gluing
    /// surface a section.
    pub sphere_bundle_with_section: bool,
    /// Absolute minimality of the summand (used only in the bundle case).
    pub minimal: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberSumMeta {
    pub genus: i64,
    pub sides: [FiberSumSide; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinimalityVerdict {
    Minimal,
    NotMinimal,
    Unknown,
}

/// Fiber-sum minimality trichotomy for positive-genus sums:
/// (i) a (−1)-sphere in either complement kills minimality; (ii) in the
/// sphere-bundle-with-section case the sum is minimal iff the partner is;
/// (iii) in all other cases the sum is minimal.
pub fn usher_minimality(meta: &FiberSumMeta) -> MinimalityVerdict {
    if meta.genus <= 0 {
        return MinimalityVerdict::Unknown;
    }
    if meta.sides.iter().any(|s| s.relatively_minimal == Some(false)) {
        return MinimalityVerdict::NotMinimal;
    }
    if meta.sides.iter().any(|s| s.relatively_minimal.is_none()) {
        return MinimalityVerdict::Unknown;
    }
    for (i, side) in meta.sides.iter().enumerate() {
        if side.sphere_bundle_with_section {
            let other = &meta.sides[1 - i];
            return match other.minimal {
                Some(true) => MinimalityVerdict::Minimal,
                Some(false) => MinimalityVerdict::NotMinimal,
                None => MinimalityVerdict::Unknown,
            };
        }
    }
    MinimalityVerdict::Minimal
}

/// Minimal symplectic manifolds with residually finite π₁ are irreducible.
pub fn hk_irreducible(mut d: ManifoldDescriptor) -> Result<ManifoldDescriptor, CharError> {
    let minimal = matches!(d.minimal, Minimality::Yes(_));
    if !minimal || !d.symplectic || !d.pi1.residually_finite() {
        return Err(CharError::RuleNotApplicable(
            "irreducibility rule needs minimal + symplectic + residually finite π₁".into(),
        ));
    }
    d.irreducible = Irreducibility::Yes("hamilton-kotschick-2006".into());
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp2() -> CharNumbers {
        // e = 3, σ = 1, simply connected
        chars_from(3, 1, 0).unwrap()
    }

    #[test]
    fn chars_from_examples() {
        // Blow-up calculus oracle: CP² blown up 13 times.
        let oracle = blow_up_chars(cp2(), 13);
        assert_eq!((oracle.e, oracle.sigma), (16, -12));
        let c = chars_from(16, -12, 0).unwrap();
        assert_eq!(c.b2plus(), Some(1));
        assert_eq!(c.b2minus(), Some(13));
        assert_eq!(c.c1sq(), -4);
        assert_eq!(c.chih(), Rational64::from_integer(1));
        assert_eq!(c, oracle.with_b1(0).unwrap());

        // g = 3, k = 2 entry of the quotient-family table.
        let c = chars_from(6 * 3 + 6 - 2, -4 - 4 * 3 + 2, 0).unwrap();
        assert_eq!((c.b2plus(), c.b2minus()), (Some(3), Some(17)));

        let c = chars_from(4, 0, 0).unwrap();
        assert_eq!((c.b2plus(), c.b2minus()), (Some(1), Some(1)));
        assert_eq!(c.c1sq(), 8);
        assert_eq!(c.chih(), Rational64::from_integer(1));
    }

    #[test]
    fn chars_from_errors() {
        assert!(matches!(chars_from(3, 0, 0), Err(CharError::ParityMismatch { .. })));
        assert!(matches!(chars_from(2, 2, 0), Err(CharError::NegativeBetti { .. })));
    }

    #[test]
    fn fiber_sum_examples() {
        // Torus sum: plain additivity.
        let a = chars_from(12, -8, 0).unwrap();
        let b = chars_from(6, -2, 0).unwrap();
        let s = fiber_sum_chars(a, b, 1);
        assert_eq!((s.e, s.sigma), (18, -10));
        assert_eq!(s.b1, None);

        // Genus-2 sum of a 7-letter genus-2 fibration block with trivial
        // bundles over Σ_k: e = 3 + (4k − 4) + 4 = 4k + 3.
        for k in 1..=5 {
            let n0 = CharNumbers::with_unknown_b1(3, -3);
            let bundle = CharNumbers::with_unknown_b1(4 * k - 4, 0);
            let nk = fiber_sum_chars(n0, bundle, 2);
            assert_eq!((nk.e, nk.sigma), (4 * k + 3, -3));
        }

        // Genus-2 sum with (e, σ) = (4, −4) and (2, −2): the one-per-χ block.
        let d = fiber_sum_chars(
            CharNumbers::with_unknown_b1(4, -4),
            CharNumbers::with_unknown_b1(2, -2),
            2,
        );
        assert_eq!((d.e, d.sigma), (10, -6));
        assert_eq!(d.c1sq() / 2, 1);
        assert_eq!(d.chih(), Rational64::from_integer(1));
    }

    #[test]
    fn blow_up_examples() {
        let a = CharNumbers::with_unknown_b1(4, 0);
        assert_eq!(blow_up_chars(a, 4), CharNumbers::with_unknown_b1(8, -4));
        assert_eq!(blow_up_chars(a, 0), a);
        // T⁴ blown up twice.
        let t4 = CharNumbers::with_unknown_b1(0, 0);
        assert_eq!(blow_up_chars(t4, 2), CharNumbers::with_unknown_b1(2, -2));
    }

    #[test]
    fn z2_table_examples() {
        // Genus-2 column: c₁² ↦ c₁² + 4 and χ_h ↦ χ_h + 1/2.
        let a = chars_from(16, -12, 0).unwrap();
        let z = z2_table_chars(a, 2, Z2Kind::Z2Construction).unwrap();
        assert_eq!(z.c1sq(), a.c1sq() + 4);
        assert_eq!(z.chih(), a.chih() + Rational64::new(1, 2));

        // g = 1 is the identity on every column.
        let z1 = z2_table_chars(a, 1, Z2Kind::Z2Construction).unwrap();
        assert_eq!(z1, a);

        // Double at g = 2 of (16, −12).
        let d = z2_table_chars(a, 2, Z2Kind::Double).unwrap();
        assert_eq!((d.e, d.sigma), (36, -24));
        assert_eq!(d.chih(), a.chih() * 2 + Rational64::from_integer(1));

        // Quotient parity gate.
        assert!(matches!(
            z2_table_chars(chars_from(5, -1, 0).unwrap(), 2, Z2Kind::Quotient),
            Err(CharError::IndivisibleQuotient { .. })
        ));
    }

    #[test]
    fn double_then_quotient_is_z2_construction() {
        for g in 0..=5 {
            for (e, sigma) in [(16i64, -12i64), (4, 0), (12, -8), (23, -15), (7, -3)] {
                let a = CharNumbers::with_unknown_b1(e, sigma);
                let d = z2_table_chars(a, g, Z2Kind::Double).unwrap();
                let q = z2_table_chars(d, g, Z2Kind::Quotient).unwrap();
                let z = z2_table_chars(a, g, Z2Kind::Z2Construction).unwrap();
                assert_eq!(q, z, "g={g} e={e} sigma={sigma}");
            }
        }
    }

    #[test]
    fn lantern_examples() {
        let a = CharNumbers::with_unknown_b1(36, -24);
        let l = lantern_chars(a);
        assert_eq!((l.e, l.sigma), (35, -23));
        assert_eq!(l.c1sq(), a.c1sq() + 1);
        assert_eq!(l.chih(), a.chih());
        // Eight lanterns on the doubled genus-g fibration, then quotient:
        // b₂⁻ = 5g. Checked at g = 4.
        let g = 4i64;
        let mut x = z2_table_chars(CharNumbers::with_unknown_b1(4 * g + 8, -4 * g - 4), g, Z2Kind::Double).unwrap();
        for _ in 0..8 {
            x = lantern_chars(x);
        }
        let y = z2_table_chars(x, g, Z2Kind::Quotient).unwrap().with_b1(0).unwrap();
        assert_eq!(y.b2minus(), Some(5 * g));
    }

    #[test]
    fn classify_examples() {
        let mut d = ManifoldDescriptor::new(CharNumbers::from_betti(2, 5));
        d.pi1 = Pi1Class::Z2;
        d.parity = Parity::Odd;
        let d = d.normalize().unwrap();
        assert_eq!(d.w2type, W2Type::TypeI);
        assert_eq!(classify(&d).unwrap(), StandardModel::Rab(2, 5));

        let mut d = ManifoldDescriptor::new(CharNumbers::from_betti(1, 9));
        d.pi1 = Pi1Class::Trivial;
        d.parity = Parity::Odd;
        assert_eq!(classify(&d).unwrap(), StandardModel::CPsum(1, 9));

        let mut d = ManifoldDescriptor::new(CharNumbers::from_betti(2, 5));
        d.pi1 = Pi1Class::Z2;
        assert_eq!(classify(&d), Err(CharError::InsufficientCertificates));
    }

    #[test]
    fn rokhlin_rejection() {
        let mut d = ManifoldDescriptor::new(CharNumbers::from_betti(3, 11));
        d.pi1 = Pi1Class::Trivial;
        d.parity = Parity::Even;
        assert!(matches!(d.normalize(), Err(CharError::RokhlinViolation(-8))));
    }

    #[test]
    fn usher_cases() {
        let both_minimal = FiberSumMeta {
            genus: 2,
            sides: [
                FiberSumSide { relatively_minimal: Some(true), ..Default::default() },
                FiberSumSide { relatively_minimal: Some(true), ..Default::default() },
            ],
        };
        assert_eq!(usher_minimality(&both_minimal), MinimalityVerdict::Minimal);

        let sphere_in_complement = FiberSumMeta {
            genus: 2,
            sides: [
                FiberSumSide { relatively_minimal: Some(false), ..Default::default() },
                FiberSumSide { relatively_minimal: Some(true), ..Default::default() },
            ],
        };
        assert_eq!(usher_minimality(&sphere_in_complement), MinimalityVerdict::NotMinimal);

        let bundle_with_nonminimal_partner = FiberSumMeta {
            genus: 1,
            sides: [
                FiberSumSide {
                    relatively_minimal: Some(true),
                    sphere_bundle_with_section: true,
                    minimal: None,
                },
                FiberSumSide {
                    relatively_minimal: Some(true),
                    minimal: Some(false),
                    ..Default::default()
                },
            ],
        };
        assert_eq!(usher_minimality(&bundle_with_nonminimal_partner), MinimalityVerdict::NotMinimal);

        let missing = FiberSumMeta { genus: 2, sides: [Default::default(), Default::default()] };
        assert_eq!(usher_minimality(&missing), MinimalityVerdict::Unknown);
    }

    #[test]
    fn hk_rule() {
        let mut d = ManifoldDescriptor::new(CharNumbers::from_betti(2, 5));
        d.pi1 = Pi1Class::Z2;
        d.symplectic = true;
        d.minimal = Minimality::Yes("test".into());
        let d = hk_irreducible(d).unwrap();
        assert!(matches!(d.irreducible, Irreducibility::Yes(_)));

        let mut bad = ManifoldDescriptor::new(CharNumbers::from_betti(2, 5));
        bad.pi1 = Pi1Class::Trivial;
        bad.symplectic = true;
        assert!(hk_irreducible(bad).is_err());
    }

    #[test]
    fn serialization_round_trip() {
        let c = chars_from(16, -12, 0).unwrap();
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["chih"], "1/1");
        assert_eq!(json["b2minus"], 13);
        let back: CharNumbers = serde_json::from_value(json).unwrap();
        assert_eq!(back, c);
    }
}
