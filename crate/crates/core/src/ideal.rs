//! One- and two-sided ideals as verified element subsets.

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ring::{FiniteRing, Side};

/// An ideal of a finite ring, with its sidedness recorded. Construction
/// verifies additive closure and the absorption law for the declared sides.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    members: ElemSet,
    side: Side,
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal({} {} of {})", self.side, self.members, self.ring.label())
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.side == other.side
    }
}
impl Eq for Ideal {}

impl Ideal {
    pub fn verified(ring: Arc<FiniteRing>, members: ElemSet, side: Side) -> Result<Self> {
        let fail = |reason, witness: &[u16]| {
            Err(Error::NotAnIdeal {
                sided: side.word(),
                reason,
                witness: witness.to_vec(),
            })
        };
        if !members.contains(ring.zero()) {
            return fail("does not contain zero", &[ring.zero()]);
        }
        for a in members.iter() {
            if !members.contains(ring.neg(a)) {
                return fail("not closed under negation", &[a]);
            }
            for b in members.iter() {
                if !members.contains(ring.add(a, b)) {
                    return fail("not closed under addition", &[a, b]);
                }
            }
            for r in ring.elements() {
                if matches!(side, Side::Left | Side::TwoSided) && !members.contains(ring.mul(r, a))
                {
                    return fail("does not absorb left multiplication", &[r, a]);
                }
                if matches!(side, Side::Right | Side::TwoSided) && !members.contains(ring.mul(a, r))
                {
                    return fail("does not absorb right multiplication", &[a, r]);
                }
            }
        }
        Ok(Ideal { ring, members, side })
    }

    pub fn zero(ring: Arc<FiniteRing>) -> Self {
        let members = ElemSet::singleton(ring.zero());
        Ideal {
            ring,
            members,
            side: Side::TwoSided,
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always contains zero
    }

    pub fn contains(&self, x: u16) -> bool {
        self.members.contains(x)
    }

    pub fn is_proper(&self) -> bool {
        !self.members.contains(self.ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }
}

/// Additive closure of a set of elements.
pub fn additive_closure(ring: &FiniteRing, seed: ElemSet) -> ElemSet {
    let mut members = seed;
    members.insert(ring.zero());
    let mut frontier: Vec<u16> = members.to_vec();
    while let Some(a) = frontier.pop() {
        let n = ring.neg(a);
        if members.insert(n) {
            frontier.push(n);
        }
        for b in members.to_vec() {
            let s = ring.add(a, b);
            if members.insert(s) {
                frontier.push(s);
            }
        }
    }
    members
}

/// The smallest ideal of the given sidedness containing `gens`.
pub fn ideal_generated_by(ring: &Arc<FiniteRing>, gens: &ElemSet, side: Side) -> Ideal {
    let mut seed = ElemSet::empty();
    for g in gens.iter() {
        match side {
            Side::Left => {
                for r in ring.elements() {
                    seed.insert(ring.mul(r, g));
                }
            }
            Side::Right => {
                for r in ring.elements() {
                    seed.insert(ring.mul(g, r));
                }
            }
            Side::TwoSided => {
                for r in ring.elements() {
                    for s in ring.elements() {
                        seed.insert(ring.mul(ring.mul(r, g), s));
                    }
                }
            }
        }
    }
    let members = additive_closure(ring, seed);
    Ideal::verified(ring.clone(), members, side)
        .expect("generated set closed by construction")
}

/// Member set of the principal two-sided ideal (x), without the `Ideal`
/// wrapper; used by hot scans.
pub fn principal_two_sided(ring: &FiniteRing, x: u16) -> ElemSet {
    let mut seed = ElemSet::empty();
    for r in ring.elements() {
        for s in ring.elements() {
            seed.insert(ring.mul(ring.mul(r, x), s));
        }
    }
    additive_closure(ring, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_cyclic_ring, make_gf, make_matrix_ring, MatrixShape};

    #[test]
    fn verified_ideal_of_z4() {
        let z4 = make_cyclic_ring(4).unwrap().shared();
        let i = Ideal::verified(z4.clone(), [0u16, 2].into_iter().collect(), Side::TwoSided)
            .unwrap();
        assert!(i.is_proper());
        assert_eq!(i.len(), 2);

        let bad = Ideal::verified(z4, [0u16, 1].into_iter().collect(), Side::TwoSided);
        assert!(bad.is_err(), "{{0,1}} is not additively closed in Z/4");
    }

    #[test]
    fn one_sided_absorption_is_checked() {
        let f2 = make_gf(2).unwrap();
        let l2 = make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap();
        let ring = l2.ring.clone();
        // {a : a11 = 0} is two-sided in the lower triangular ring
        let members: ElemSet = ring
            .elements()
            .filter(|&x| l2.decode(x)[0][0] == f2.zero())
            .collect();
        assert!(Ideal::verified(ring.clone(), members, Side::TwoSided).is_ok());

        // the row space of E11 is right but not left
        let e11 = l2.unit(0, 0).unwrap();
        let right: ElemSet = ring.elements().map(|r| ring.mul(e11, r)).collect();
        let right = additive_closure(&ring, right);
        assert_eq!(right.to_vec(), vec![ring.zero(), e11]);
        assert!(Ideal::verified(ring.clone(), right, Side::Right).is_ok());
        assert!(Ideal::verified(ring, right, Side::Left).is_err());
    }

    #[test]
    fn generated_ideal_is_smallest() {
        let z6 = make_cyclic_ring(6).unwrap().shared();
        let i = ideal_generated_by(&z6, &ElemSet::singleton(2), Side::TwoSided);
        assert_eq!(i.members().to_vec(), vec![0, 2, 4]);
    }
}
