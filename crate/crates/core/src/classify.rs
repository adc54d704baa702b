//! Elementary invariants of a finite ring: units, regular elements, the
//! Jacobson radical, idempotents, semiprimeness.

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

impl FiniteRing {
    /// Two-sided invertible elements.
    pub fn units(&self) -> ElemSet {
        *self.derived().units.get_or_init(|| {
            self.elements()
                .filter(|&u| self.inverse_of(u).is_some())
                .collect()
        })
    }

    /// The two-sided inverse of `u`, if any.
    pub fn inverse_of(&self, u: u16) -> Option<u16> {
        self.derived()
            .inverses
            .get_or_init(|| {
                self.elements()
                    .map(|a| {
                        self.elements()
                            .find(|&b| self.mul(a, b) == self.one() && self.mul(b, a) == self.one())
                    })
                    .collect()
            })[usize::from(u)]
    }

    /// Elements that are zero divisors on neither side.
    pub fn regular_elements(&self) -> ElemSet {
        *self.derived().regular.get_or_init(|| {
            self.elements()
                .filter(|&c| {
                    self.elements().all(|x| {
                        x == self.zero()
                            || (self.mul(x, c) != self.zero() && self.mul(c, x) != self.zero())
                    })
                })
                .collect()
        })
    }

    /// Elements `c` with trivial kernel of the right-multiplication map
    /// `r ↦ rc`.
    pub fn left_regular_elements(&self) -> ElemSet {
        *self.derived().left_regular.get_or_init(|| {
            self.elements()
                .filter(|&c| {
                    self.elements()
                        .all(|x| x == self.zero() || self.mul(x, c) != self.zero())
                })
                .collect()
        })
    }

    /// Elements `c` with trivial kernel of the left-multiplication map
    /// `r ↦ cr`; the mirror of [`FiniteRing::left_regular_elements`].
    pub fn right_regular_elements(&self) -> ElemSet {
        self.elements()
            .filter(|&c| {
                self.elements()
                    .all(|x| x == self.zero() || self.mul(c, x) != self.zero())
            })
            .collect()
    }

    /// In a finite ring, units, regular and left regular elements coincide
    /// (pigeonhole). The coincidence is cheap to check, so callers that rely
    /// on it assert it per instance instead of assuming it.
    pub fn check_regularity_coincidence(&self) -> Result<()> {
        let u = self.units();
        let r = self.regular_elements();
        let l = self.left_regular_elements();
        if u != r || r != l {
            let bad = r.minus(&u).union(&l.minus(&r));
            return Err(Error::internal(
                format!("units/regular/left-regular differ in {}", self.label()),
                &bad.to_vec(),
            ));
        }
        Ok(())
    }

    /// The Jacobson radical, via the finite-ring criterion: `x` is in the
    /// radical iff `1 - r*x` is invertible for every `r`.
    pub fn jacobson_radical(&self) -> ElemSet {
        *self.derived().radical.get_or_init(|| {
            let units = self.units();
            self.elements()
                .filter(|&x| {
                    self.elements()
                        .all(|r| units.contains(self.sub(self.one(), self.mul(r, x))))
                })
                .collect()
        })
    }

    pub fn idempotents(&self) -> ElemSet {
        *self.derived().idempotents.get_or_init(|| {
            self.elements().filter(|&e| self.mul(e, e) == e).collect()
        })
    }

    pub fn central_idempotents(&self) -> ElemSet {
        self.idempotents()
            .iter()
            .filter(|&e| self.elements().all(|r| self.mul(e, r) == self.mul(r, e)))
            .collect()
    }

    /// No nonzero ideal squares to zero. Decided by the radical criterion
    /// and confirmed by a direct scan over principal two-sided ideals; the
    /// two routes must agree.
    pub fn is_semiprime(&self) -> bool {
        let via_radical = self.jacobson_radical().len() == 1;
        let via_scan = !self.elements().any(|x| {
            if x == self.zero() {
                return false;
            }
            let ideal = crate::ideal::principal_two_sided(self, x);
            ideal
                .iter()
                .all(|a| ideal.iter().all(|b| self.mul(a, b) == self.zero()))
        });
        assert_eq!(
            via_radical,
            via_scan,
            "semiprimeness routes disagree on {}",
            self.label()
        );
        via_scan
    }

    /// For finite (hence Artinian) rings: trivial Jacobson radical.
    pub fn is_semisimple(&self) -> bool {
        self.jacobson_radical().len() == 1
    }
}

#[cfg(test)]
mod tests {
    use crate::construct::{make_cyclic_ring, make_gf, make_matrix_ring, MatrixShape};

    fn vec_of(s: crate::ElemSet) -> Vec<u16> {
        s.to_vec()
    }

    #[test]
    fn units_of_small_cyclic_rings() {
        let z6 = make_cyclic_ring(6).unwrap();
        assert_eq!(vec_of(z6.units()), vec![1, 5]);
        assert_eq!(vec_of(z6.regular_elements()), vec![1, 5]);
        assert_eq!(vec_of(z6.left_regular_elements()), vec![1, 5]);
        z6.check_regularity_coincidence().unwrap();

        let z4 = make_cyclic_ring(4).unwrap();
        assert_eq!(vec_of(z4.units()), vec![1, 3]);
    }

    #[test]
    fn matrix_ring_units_count() {
        let f2 = make_gf(2).unwrap();
        let m2 = make_matrix_ring(&f2, 2, MatrixShape::Full).unwrap();
        assert_eq!(m2.ring.size(), 16);
        assert_eq!(m2.ring.units().len(), 6);
        m2.ring.check_regularity_coincidence().unwrap();
    }

    #[test]
    fn field_units_are_all_nonzero() {
        for q in [2usize, 3, 4] {
            let f = make_gf(q).unwrap();
            assert_eq!(f.units().len(), q - 1);
            assert!(!f.units().contains(f.zero()));
        }
    }

    #[test]
    fn radical_examples() {
        let z4 = make_cyclic_ring(4).unwrap();
        assert_eq!(vec_of(z4.jacobson_radical()), vec![0, 2]);

        let f2 = make_gf(2).unwrap();
        let l2 = make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap();
        let rad = l2.ring.jacobson_radical();
        assert_eq!(rad.len(), 2);
        // strictly lower triangular: zero on the whole diagonal
        for x in rad.iter() {
            let m = l2.decode(x);
            assert_eq!(m[0][0], f2.zero());
            assert_eq!(m[1][1], f2.zero());
        }

        let m2 = make_matrix_ring(&f2, 2, MatrixShape::Full).unwrap();
        assert_eq!(m2.ring.jacobson_radical().len(), 1);
    }

    #[test]
    fn semiprime_and_semisimple() {
        let z6 = make_cyclic_ring(6).unwrap();
        assert!(z6.is_semiprime() && z6.is_semisimple());

        let z4 = make_cyclic_ring(4).unwrap();
        assert!(!z4.is_semiprime() && !z4.is_semisimple());

        let f2 = make_gf(2).unwrap();
        let l2 = make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap();
        assert!(!l2.ring.is_semiprime() && !l2.ring.is_semisimple());
    }

    #[test]
    fn units_form_a_group() {
        for ring in [make_cyclic_ring(12).unwrap(), make_gf(4).unwrap()] {
            let u = ring.units();
            for a in u.iter() {
                assert!(u.contains(ring.inverse_of(a).unwrap()));
                for b in u.iter() {
                    assert!(u.contains(ring.mul(a, b)));
                }
            }
        }
    }
}
