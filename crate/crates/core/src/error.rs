//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A ring must have at least two elements (0 ≠ 1).
    #[error("ring must have at least 2 elements, got {0}")]
    RingTooSmall(usize),

    /// Hard representation limit (element sets are 256-bit).
    #[error("ring of size {0} exceeds the representable maximum of {max}", max = crate::elemset::MAX_RING_SIZE)]
    RingTooLarge(usize),

    /// A table entry is not a valid element index.
    #[error("{table} table entry [{row}][{col}] = {value} is out of range for size {size}")]
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },

    /// A ring axiom failed; `witness` holds the offending element indices.
    #[error("ring axiom violated: {axiom} (witness {witness:?})")]
    AxiomViolation { axiom: &'static str, witness: Vec<u16> },

    /// Direct products need at least two factors.
    #[error("direct product needs at least 2 factors, got {0}")]
    ProductArity(usize),

    /// A requested construction or enumeration exceeds the configured cap.
    #[error("size {size} exceeds the cap of {cap}: {what}")]
    Capacity {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    /// A member set fails the ideal axioms for the declared sidedness.
    #[error("not a {sided} ideal: {reason} (witness {witness:?})")]
    NotAnIdeal {
        sided: &'static str,
        reason: &'static str,
        witness: Vec<u16>,
    },

    /// Quotients require proper ideals.
    #[error("ideal is not proper: it contains the multiplicative identity")]
    ImproperIdeal,

    /// A claimed ring homomorphism fails one of its axioms.
    #[error("not a ring map: {reason} (witness {witness:?})")]
    NotARingMap { reason: &'static str, witness: Vec<u16> },

    /// Maps can only be composed/compared when endpoints agree.
    #[error("ring mismatch: {0}")]
    RingMismatch(&'static str),

    /// The monoid closure of a generating set absorbed zero, so no
    /// multiplicative set (hence no denominator set) contains it.
    #[error("monoid closure absorbs zero: {a} * {b} = 0")]
    ZeroAbsorbed { a: u16, b: u16 },

    /// A set handed to multiplicative-set machinery is not one.
    #[error("not a multiplicative set: {reason} (witness {witness:?})")]
    NotMultiplicative { reason: &'static str, witness: Vec<u16> },

    /// Operation requires an Ore set and the argument is not one.
    #[error("set is not a left Ore set: no solution to S*{r} ∩ R*{s}")]
    NotOre { r: u16, s: u16 },

    /// Operation requires a denominator set and the argument is not one.
    #[error("set is not a denominator set: {reason} (witness {witness:?})")]
    NotDenominator { reason: &'static str, witness: Vec<u16> },

    /// No catalog member has the requested ass ideal.
    #[error("no denominator set has the requested ass ideal")]
    NoSuchAssIdeal,

    /// The operation needs an exhaustive catalog and the cap forbids one.
    #[error("exhaustive denominator catalog unavailable: ring size {size} exceeds cap {cap}")]
    NotExhaustive { size: usize, cap: usize },

    /// Universal property violated: the smaller denominator set is not
    /// contained in the larger one.
    #[error("no induced map: element {witness} of the source set is missing from the target set")]
    NoInducedMap { witness: u16 },

    /// A fact guaranteed by the theory failed on a concrete instance.
    /// This is always a bug (in the implementation or in the input tables)
    /// and aborts the computation.
    #[error("internal consistency failure: {context} (witness {witness:?})")]
    InternalConsistency { context: String, witness: Vec<u16> },

    /// A constructor was called with an argument outside its domain.
    #[error("invalid constructor argument: {0}")]
    InvalidArgument(String),

    /// Ring-file or constructor-DSL syntax error.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn internal(context: impl Into<String>, witness: &[u16]) -> Self {
        Error::InternalConsistency {
            context: context.into(),
            witness: witness.to_vec(),
        }
    }
}
