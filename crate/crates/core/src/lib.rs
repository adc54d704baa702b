//! Finite-ring toolkit for denominator sets, Ore localization and strong
//! quotient rings.
//!
//! Rings are given by explicit addition/multiplication tables over dense
//! element indices. On top of that representation the crate provides:
//!
//! * construction and axiom validation of finite unital rings
//!   ([`ring`], [`construct`]),
//! * multiplicative-set calculus: monoid closures, left/right Ore and
//!   denominator checks, exhaustive enumeration of denominator sets and
//!   their maximal elements ([`ore`]),
//! * Ore localization `S⁻¹R` realized as `R/ass(S)` with verified unit
//!   witnesses and induced maps ([`localize`]),
//! * the strong quotient profile: the set of strongly localizable elements,
//!   the largest strong denominator set `T`, the strong localization radical,
//!   the strong quotient ring, and an executable suite of identities these
//!   objects satisfy ([`strong`]),
//! * closed-form predictions for triangular matrix rings and for the
//!   idempotent analysis of finite rings, cross-checked against the
//!   brute-force pipeline ([`closed_form`]),
//! * a plain-text ring file format, a small constructor DSL and the standard
//!   test corpus ([`ringfile`], [`corpus`]).
//!
//! Everything is exhaustively checkable at desk scale: rings are capped at
//! 256 elements, and full denominator-set enumeration is intended for rings
//! of at most a few dozen elements.

pub mod classify;
pub mod closed_form;
pub mod construct;
pub mod corpus;
pub mod elemset;
pub mod error;
pub mod ideal;
pub mod localize;
pub mod map;
pub mod ore;
pub mod ring;
pub mod ringfile;
pub mod strong;

pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use ideal::Ideal;
pub use localize::LocalizedRing;
pub use map::RingMap;
pub use ore::{DenominatorCatalog, LatticeCache, MultSet};
pub use ring::{FiniteRing, Side};
pub use strong::{StrongProfile, Verdict};

/// Default bound on ring size for exhaustive denominator-set enumeration.
///
/// Chosen so that the whole standard corpus up to 27 elements (e.g. 2×2
/// triangular matrices over a 3-element field) enumerates in seconds;
/// larger rings need an explicit cap.
pub const DEFAULT_ENUM_CAP: usize = 27;
