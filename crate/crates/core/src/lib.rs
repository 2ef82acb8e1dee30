//! # crosscap-core
//!
//! An exact-arithmetic library for **crossed group-graded Frobenius algebras with
//! crosscap structure** and the invariants of unoriented surfaces they define.
//!
//! The central object is a finite-rank algebra `L = ⊕_α L_α` graded by an elementary
//! abelian 2-group `π = (ℤ/2)^k`, equipped with
//!
//! * a non-degenerate pairing `η` supported on `L_α ⊗ L_α` (every grade is its own
//!   inverse, so complementary grades coincide),
//! * a `π`-action `φ` by pairing-preserving algebra automorphisms,
//! * a family of *crosscap elements* `θ_α ∈ L_1`, one per grade label, and
//! * an involution `Φ` that reverses products, fixes every `θ_α`, and commutes with `φ`.
//!
//! Such a tuple is exactly the algebraic shadow of a (1+1)-dimensional homotopy
//! quantum field theory on unoriented surfaces whose circles carry `π`-labels:
//! multiplication is the pair of pants, `η` the bent cylinder, `φ` the holonomy
//! cylinder, `Φ` the orientation-reversing cylinder, and `θ_α` the labeled Möbius
//! band. The library makes that dictionary executable:
//!
//! | module        | contents                                                            |
//! |---------------|---------------------------------------------------------------------|
//! | [`ring`]      | exact coefficient rings ℤ, ℚ, ℤ/n and their scalars                 |
//! | [`group`]     | the grading group `(ℤ/2)^k` as k-bit labels                         |
//! | [`linalg`]    | exact dense vectors/matrices, Kronecker products, adjugate inverses |
//! | [`algebra`]   | the structure-constant data type and derived operations (counit, comultiplication, copairing, handle element, crosscap elements) |
//! | [`axioms`]    | the three-tier axiom verifier with itemized violation reports       |
//! | [`cobordism`] | the generator language for labeled unoriented cobordisms, its typechecker and evaluator, closed-surface invariants, and the relation suite |
//! | [`census`]    | brute-force enumeration of all such algebras over a small finite ring, with isomorphism deduplication |
//! | [`codec`]     | canonical JSON formats for algebras, words, surfaces, and reports   |
//!
//! ## Design principles
//!
//! * **Exact arithmetic only.** Scalars are arbitrary-precision integers, reduced
//!   fractions, or residues; equality of maps is entrywise scalar equality. There is
//!   no tolerance parameter anywhere.
//! * **Units gate every inversion.** Over ℤ/n with composite n (and over ℤ) a
//!   determinant may be nonzero yet fail to be a unit; all solvers check unit-ness
//!   and report degeneracy instead of dividing through.
//! * **Free modules with chosen bases.** Every graded piece is free of finite rank
//!   with a fixed ordered basis, so every structure map is a concrete matrix and
//!   every identity is decidable by evaluation.
//! * **Fixed tensor convention.** In all Kronecker products the left factor varies
//!   slowest; every operation that builds or consumes a tensor product states its
//!   factor order.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod algebra;
pub mod axioms;
pub mod census;
pub mod cobordism;
pub mod codec;
pub mod group;
pub mod linalg;
pub mod ring;

pub use algebra::{AlgebraData, AlgebraError, GradedElement};
pub use axioms::{AxiomReport, ReportKind, Tier, Violation};
pub use census::{CensusError, CensusQuery};
pub use cobordism::{
    BoundarySignature, CobordismError, CobordismWord, Generator, LinearMap, SurfaceSpec,
};
pub use codec::CodecError;
pub use group::{GroupElement, GroupError};
pub use linalg::{LinalgError, Matrix, Vector};
pub use ring::{RingDesc, RingError, Scalar};
