//! Verified ring homomorphisms between finite rings.

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

/// A unital ring homomorphism, stored as an element-indexed image array.
/// Construction checks every axiom, so a held `RingMap` is always valid.
#[derive(Clone)]
pub struct RingMap {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    image: Vec<u16>,
}

impl std::fmt::Debug for RingMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RingMap({} -> {})",
            self.source.label(),
            self.target.label()
        )
    }
}

impl RingMap {
    pub fn verified(
        source: Arc<FiniteRing>,
        target: Arc<FiniteRing>,
        image: Vec<u16>,
    ) -> Result<Self> {
        if image.len() != source.size() {
            return Err(Error::NotARingMap {
                reason: "image array length differs from source size",
                witness: vec![image.len() as u16],
            });
        }
        if let Some(&v) = image.iter().find(|&&v| usize::from(v) >= target.size()) {
            return Err(Error::NotARingMap {
                reason: "image out of range",
                witness: vec![v],
            });
        }
        let f = |x: u16| image[usize::from(x)];
        if f(source.zero()) != target.zero() {
            return Err(Error::NotARingMap {
                reason: "zero not preserved",
                witness: vec![source.zero()],
            });
        }
        if f(source.one()) != target.one() {
            return Err(Error::NotARingMap {
                reason: "one not preserved",
                witness: vec![source.one()],
            });
        }
        for a in source.elements() {
            for b in source.elements() {
                if f(source.add(a, b)) != target.add(f(a), f(b)) {
                    return Err(Error::NotARingMap {
                        reason: "addition not preserved",
                        witness: vec![a, b],
                    });
                }
                if f(source.mul(a, b)) != target.mul(f(a), f(b)) {
                    return Err(Error::NotARingMap {
                        reason: "multiplication not preserved",
                        witness: vec![a, b],
                    });
                }
            }
        }
        Ok(RingMap { source, target, image })
    }

    pub fn identity(ring: Arc<FiniteRing>) -> Self {
        let image = ring.elements().collect();
        RingMap {
            source: ring.clone(),
            target: ring,
            image,
        }
    }

    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: u16) -> u16 {
        self.image[usize::from(x)]
    }

    pub fn image_of_set(&self, set: &ElemSet) -> ElemSet {
        set.iter().map(|x| self.apply(x)).collect()
    }

    pub fn preimage_of_set(&self, set: &ElemSet) -> ElemSet {
        self.source
            .elements()
            .filter(|&x| set.contains(self.apply(x)))
            .collect()
    }

    pub fn kernel(&self) -> ElemSet {
        self.source
            .elements()
            .filter(|&x| self.apply(x) == self.target.zero())
            .collect()
    }

    pub fn image_set(&self) -> ElemSet {
        self.source.elements().map(|x| self.apply(x)).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.image_set().len() == self.source.size()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set().len() == self.target.size()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.size() == self.target.size() && self.is_injective()
    }

    /// `other ∘ self` (apply `self` first).
    pub fn then(&self, other: &RingMap) -> Result<RingMap> {
        if !Arc::ptr_eq(&self.target, &other.source) && !self.target.same_tables(&other.source) {
            return Err(Error::RingMismatch("composition endpoints differ"));
        }
        let image = self.image.iter().map(|&x| other.apply(x)).collect();
        Ok(RingMap {
            source: self.source.clone(),
            target: other.target.clone(),
            image,
        })
    }

    /// Inverse map, available exactly for bijections (finite rings, so a
    /// bijective ring map is an isomorphism).
    pub fn inverse(&self) -> Option<RingMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut image = vec![0u16; self.target.size()];
        for x in self.source.elements() {
            image[usize::from(self.apply(x))] = x;
        }
        Some(RingMap {
            source: self.target.clone(),
            target: self.source.clone(),
            image,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::make_cyclic_ring;

    #[test]
    fn identity_and_kernel() {
        let z6 = make_cyclic_ring(6).unwrap().shared();
        let id = RingMap::identity(z6.clone());
        assert!(id.is_bijective());
        assert_eq!(id.kernel().to_vec(), vec![0]);
    }

    #[test]
    fn reduction_map_z6_to_z3() {
        let z6 = make_cyclic_ring(6).unwrap().shared();
        let z3 = make_cyclic_ring(3).unwrap().shared();
        let image: Vec<u16> = (0..6).map(|x| x % 3).collect();
        let f = RingMap::verified(z6.clone(), z3.clone(), image).unwrap();
        assert_eq!(f.kernel().to_vec(), vec![0, 3]);
        assert!(f.is_surjective() && !f.is_injective());
        assert!(f.inverse().is_none());

        // a non-map is rejected with a witness
        let bad: Vec<u16> = (0..6).map(|x| if x == 5 { 0 } else { x % 3 }).collect();
        assert!(RingMap::verified(z6, z3, bad).is_err());
    }
}
