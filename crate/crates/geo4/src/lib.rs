//! Deterministic workbench for the geography of closed oriented 4-manifolds
//! with order-two fundamental group and odd intersection form.
//!
//! The crate is organized around five concerns:
//!
//! * [`invariants`]: exact arithmetic of characteristic numbers
//!   (`e`, `σ`, `b₂±`, `c₁²`, `χ_h`) and the rule engine for homeomorphism
//!   type, minimality, and irreducibility.
//! * [`mcg`]: Dehn-twist words over named curve alphabets on `Σ_g`,
//!   evaluated exactly in the integral symplectic representation.
//! * [`lefschetz`]: positive factorizations as Lefschetz-fibration
//!   monodromy data: total-space invariants, homology certificates,
//!   fiber sums, lantern families, and fiber-reversing doubles.
//! * [`grouppres`]: finitely presented groups: Smith normal form,
//!   bounded coset enumeration, Tietze simplification, surgery quotients,
//!   and amalgam evaluation.
//! * [`geography`]: the lattice-point planner: region membership, block
//!   decomposition, recipe synthesis, end-to-end validation, and coverage
//!   reports.
//!
//! Everything is pure and deterministic; all arithmetic is exact (integers
//! and rationals, no floating point anywhere in the calculus).

pub mod geography;
pub mod grouppres;
pub mod invariants;
pub mod lefschetz;
pub mod matrix;
pub mod mcg;
pub mod verify;

pub use invariants::{CharNumbers, ManifoldDescriptor, Parity, Pi1Class, StandardModel};
pub use matrix::IntMat;
