//! Finite unital rings given by explicit operation tables.

use std::sync::{Arc, OnceLock};

use sha2::{Digest, Sha256};

use crate::elemset::{ElemSet, MAX_RING_SIZE};
use crate::error::{Error, Result};

/// Handedness of a ring-theoretic notion (ideals, Ore sets, profiles).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub fn word(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.word())
    }
}

/// A finite ring with 1, as addition/multiplication tables over the element
/// indices `0..size`. Immutable after construction; derived invariants
/// (units, radical, digest, ...) are computed once on demand.
pub struct FiniteRing {
    label: String,
    size: usize,
    zero: u16,
    one: u16,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    derived: Derived,
}

#[derive(Default)]
pub(crate) struct Derived {
    pub(crate) units: OnceLock<ElemSet>,
    pub(crate) regular: OnceLock<ElemSet>,
    pub(crate) left_regular: OnceLock<ElemSet>,
    pub(crate) radical: OnceLock<ElemSet>,
    pub(crate) idempotents: OnceLock<ElemSet>,
    pub(crate) inverses: OnceLock<Vec<Option<u16>>>,
    digest: OnceLock<[u8; 32]>,
}

impl Clone for FiniteRing {
    fn clone(&self) -> Self {
        FiniteRing {
            label: self.label.clone(),
            size: self.size,
            zero: self.zero,
            one: self.one,
            add: self.add.clone(),
            mul: self.mul.clone(),
            neg: self.neg.clone(),
            derived: Derived::default(),
        }
    }
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteRing({} size {})", self.label, self.size)
    }
}

impl FiniteRing {
    /// Builds a ring from raw tables and validates every ring axiom.
    ///
    /// `add` and `mul` are row-major `size × size` tables; entry `[i][j]`
    /// is the index of `i + j` resp. `i * j`.
    pub fn from_tables(
        label: impl Into<String>,
        size: usize,
        zero: u16,
        one: u16,
        add: Vec<u16>,
        mul: Vec<u16>,
    ) -> Result<Self> {
        if size < 2 {
            return Err(Error::RingTooSmall(size));
        }
        if size > MAX_RING_SIZE {
            return Err(Error::RingTooLarge(size));
        }
        for (name, table) in [("add", &add), ("mul", &mul)] {
            if table.len() != size * size {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("{name} table has {} entries, need {}", table.len(), size * size),
                });
            }
            for (k, &v) in table.iter().enumerate() {
                if usize::from(v) >= size {
                    return Err(Error::EntryOutOfRange {
                        table: name,
                        row: k / size,
                        col: k % size,
                        value: usize::from(v),
                        size,
                    });
                }
            }
        }
        if usize::from(zero) >= size || usize::from(one) >= size {
            return Err(Error::EntryOutOfRange {
                table: "zero/one",
                row: 0,
                col: 0,
                value: usize::from(zero.max(one)),
                size,
            });
        }

        let mut ring = FiniteRing {
            label: label.into(),
            size,
            zero,
            one,
            add,
            mul,
            neg: Vec::new(),
            derived: Derived::default(),
        };
        ring.neg = ring.compute_negatives()?;
        ring.validate_axioms()?;
        Ok(ring)
    }

    fn compute_negatives(&self) -> Result<Vec<u16>> {
        let mut neg = vec![u16::MAX; self.size];
        for i in self.elements() {
            for j in self.elements() {
                if self.add(i, j) == self.zero {
                    neg[usize::from(i)] = j;
                }
            }
            if neg[usize::from(i)] == u16::MAX {
                return Err(Error::AxiomViolation {
                    axiom: "additive inverse exists",
                    witness: vec![i],
                });
            }
        }
        Ok(neg)
    }

    /// Checks every [`FiniteRing`] invariant, reporting the first violated
    /// axiom together with witness elements.
    pub fn validate_axioms(&self) -> Result<()> {
        let n = self.size;
        let fail = |axiom, witness: &[u16]| {
            Err(Error::AxiomViolation {
                axiom,
                witness: witness.to_vec(),
            })
        };
        if self.zero == self.one {
            return fail("zero differs from one", &[self.zero]);
        }
        for a in self.elements() {
            if self.add(a, self.zero) != a {
                return fail("zero is additive identity", &[a]);
            }
            if self.mul(a, self.one) != a || self.mul(self.one, a) != a {
                return fail("one is a two-sided multiplicative identity", &[a]);
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                if self.add(a, b) != self.add(b, a) {
                    return fail("addition commutes", &[a, b]);
                }
            }
        }
        for a in 0..n as u16 {
            for b in 0..n as u16 {
                let ab = self.add(a, b);
                let ab_mul = self.mul(a, b);
                for c in 0..n as u16 {
                    if self.add(ab, c) != self.add(a, self.add(b, c)) {
                        return fail("addition associates", &[a, b, c]);
                    }
                    if self.mul(ab_mul, c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplication associates", &[a, b, c]);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("left distributivity", &[a, b, c]);
                    }
                    if self.mul(self.add(b, c), a) != self.add(self.mul(b, a), self.mul(c, a)) {
                        return fail("right distributivity", &[a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> u16 {
        self.zero
    }

    pub fn one(&self) -> u16 {
        self.one
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[usize::from(a) * self.size + usize::from(b)]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[usize::from(a) * self.size + usize::from(b)]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[usize::from(a)]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> + Clone {
        0..self.size as u16
    }

    pub fn element_set(&self) -> ElemSet {
        ElemSet::full(self.size)
    }

    /// Sum of a sequence of elements.
    pub fn sum(&self, items: impl IntoIterator<Item = u16>) -> u16 {
        items.into_iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub(crate) fn derived(&self) -> &Derived {
        &self.derived
    }

    pub fn raw_add_table(&self) -> &[u16] {
        &self.add
    }

    pub fn raw_mul_table(&self) -> &[u16] {
        &self.mul
    }

    /// SHA-256 of the canonical table serialization (size, zero, one, add,
    /// mul). The label is deliberately excluded so that structurally equal
    /// rings share cache entries and corpus rebuilds are digest-stable.
    pub fn digest(&self) -> [u8; 32] {
        *self.derived.digest.get_or_init(|| {
            let mut h = Sha256::new();
            h.update((self.size as u64).to_le_bytes());
            h.update(self.zero.to_le_bytes());
            h.update(self.one.to_le_bytes());
            for &v in self.add.iter().chain(self.mul.iter()) {
                h.update(v.to_le_bytes());
            }
            h.finalize().into()
        })
    }

    pub fn digest_hex(&self) -> String {
        self.digest().iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Structural equality: same tables, labels ignored.
    pub fn same_tables(&self, other: &FiniteRing) -> bool {
        self.size == other.size
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }

    pub fn shared(self) -> Arc<FiniteRing> {
        Arc::new(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::make_cyclic_ring;

    #[test]
    fn corrupted_associativity_is_reported_with_witness() {
        let z6 = make_cyclic_ring(6).unwrap();
        let mut mul = z6.raw_mul_table().to_vec();
        mul[2 * 6 + 3] = 1; // 2*3 = 1 breaks associativity/distributivity
        let err = FiniteRing::from_tables("bad", 6, 0, 1, z6.raw_add_table().to_vec(), mul)
            .unwrap_err();
        match err {
            Error::AxiomViolation { witness, .. } => assert!(!witness.is_empty()),
            other => panic!("expected axiom violation, got {other}"),
        }
    }

    #[test]
    fn out_of_range_entry_is_located() {
        let z4 = make_cyclic_ring(4).unwrap();
        let mut add = z4.raw_add_table().to_vec();
        add[5] = 9;
        let err =
            FiniteRing::from_tables("bad", 4, 0, 1, add, z4.raw_mul_table().to_vec()).unwrap_err();
        match err {
            Error::EntryOutOfRange { table, row, col, value, .. } => {
                assert_eq!((table, row, col, value), ("add", 1, 1, 9));
            }
            other => panic!("expected range error, got {other}"),
        }
    }

    #[test]
    fn zero_ring_is_rejected() {
        assert!(matches!(
            FiniteRing::from_tables("triv", 1, 0, 0, vec![0], vec![0]),
            Err(Error::RingTooSmall(1))
        ));
    }

    #[test]
    fn digest_ignores_label() {
        let a = make_cyclic_ring(6).unwrap();
        let b = make_cyclic_ring(6).unwrap().with_label("other");
        assert_eq!(a.digest(), b.digest());
        assert_ne!(a.digest(), make_cyclic_ring(4).unwrap().digest());
    }
}
