//! Incidence algebras `I(X,K)` of finite connected posets over exact fields,
//! with the full toolkit for their Lie automorphisms: verification
//! predicates, the inner/elementary semidirect decomposition, construction
//! of elementary automorphisms from admissible triples, and the properness
//! decision.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`] — exact scalars: arbitrary-precision rationals and `GF(p)`;
//! * [`poset`] — finite connected posets from cover relations, with
//!   intervals, chains, walks and cycles;
//! * [`linalg`] — exact row reduction, rank, span and kernel computations;
//! * [`algebra`] — elements of `I(X,K)`, products, commutators, the radical
//!   filtration, level spaces, centres and generated ideals;
//! * [`maps`] — linear self-maps of `I(X,K)`: automorphism predicates, inner
//!   units, the levelwise leading-term projection and the properness test;
//! * [`elementary`] — admissible basis bijections, sigma systems, the
//!   `tau_{theta,sigma,c}` construction and its unique decomposition;
//! * [`io`] — the line-oriented poset/map/triple text formats.

pub mod algebra;
pub mod elementary;
pub mod field;
pub mod io;
pub mod linalg;
pub mod maps;
pub mod poset;

pub use algebra::{
    center_of_radical, ideal_generated, level_basis, radical_power_basis, AlgebraElement,
    AlgebraError, BasisVector,
};
pub use elementary::{
    build_tau, decompose_elementary, enumerate_theta, enumerate_theta_with_limit, BasisBijection,
    BuilderError, CoefficientVector, ElementaryTriple, Monotonicity, SigmaMap, StCounters,
    DEFAULT_THETA_LIMIT,
};
pub use field::{Field, FieldError, Scalar};
pub use maps::{InnerUnit, LinearMap, MapError, ProperKind, ProperWitness};
pub use poset::{Cycle, FinitePoset, PosetError, Walk};
