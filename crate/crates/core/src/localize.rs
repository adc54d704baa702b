//! Ore localization of a finite ring at a denominator set.
//!
//! For a finite ring the localization S⁻¹R is realized concretely as
//! R/ass(S): the images of S are regular in that quotient, regular elements
//! of a finite ring are units, and the universal property then holds on the
//! nose. Instead of assuming this, [`localize`] verifies it — every member
//! of S gets an explicit inverse witness in the carrier, and the kernel and
//! coverage conditions are checked elementwise.

use std::sync::Arc;

use crate::construct::quotient_ring;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::map::RingMap;
use crate::ore::{left_ore_witness, DenominatorCatalog, LatticeCache, MultSet};
use crate::ring::FiniteRing;

/// S⁻¹R together with the canonical map and inversion witnesses.
#[derive(Clone)]
pub struct LocalizedRing {
    source: Arc<FiniteRing>,
    denominators: MultSet,
    carrier: Arc<FiniteRing>,
    map: RingMap,
    inverses: Vec<(u16, u16)>,
}

impl std::fmt::Debug for LocalizedRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "LocalizedRing({} at {} -> size {})",
            self.source.label(),
            self.denominators.members(),
            self.carrier.size()
        )
    }
}

impl LocalizedRing {
    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }

    pub fn denominator_set(&self) -> &MultSet {
        &self.denominators
    }

    pub fn carrier(&self) -> &Arc<FiniteRing> {
        &self.carrier
    }

    /// The canonical map σ_S : R → S⁻¹R.
    pub fn canonical_map(&self) -> &RingMap {
        &self.map
    }

    /// For s ∈ S, the recorded inverse of σ(s) in the carrier.
    pub fn inverse_witness(&self, s: u16) -> Option<u16> {
        self.inverses
            .iter()
            .find(|&&(m, _)| m == s)
            .map(|&(_, inv)| inv)
    }

    pub fn inverted_witnesses(&self) -> &[(u16, u16)] {
        &self.inverses
    }
}

/// Localizes `ring` at the denominator set `s` (left structure; right-sided
/// localizations go through the opposite ring).
pub fn localize(ring: &Arc<FiniteRing>, s: &MultSet) -> Result<LocalizedRing> {
    if !ring.same_tables(s.ring()) {
        return Err(Error::RingMismatch("denominator set of a different ring"));
    }
    if !s.is_denominator() {
        return Err(Error::NotDenominator {
            reason: "localization requires a denominator set",
            witness: s.members().to_vec(),
        });
    }
    let ass = s.ass_ideal()?;
    let q = quotient_ring(ring, &ass)?;
    let (carrier, map) = (q.ring, q.projection);

    if map.kernel() != ass.members() {
        return Err(Error::internal(
            "kernel of the canonical map differs from ass(S)",
            &map.kernel().to_vec(),
        ));
    }

    let mut inverses = Vec::with_capacity(s.len());
    for m in s.members().iter() {
        match carrier.inverse_of(map.apply(m)) {
            Some(inv) => inverses.push((m, inv)),
            None => {
                return Err(Error::internal(
                    format!(
                        "image of denominator {} is not a unit of the carrier of {}",
                        m,
                        ring.label()
                    ),
                    &[m],
                ))
            }
        }
    }

    // every carrier element is σ(s)⁻¹σ(r): with s = 1 this is surjectivity,
    // checked against the explicit witnesses
    for q in carrier.elements() {
        let covered = inverses.iter().any(|&(_, inv)| {
            ring.elements()
                .any(|r| carrier.mul(inv, map.apply(r)) == q)
        });
        if !covered {
            return Err(Error::internal("carrier element not of the form s⁻¹r", &[q]));
        }
    }

    Ok(LocalizedRing {
        source: ring.clone(),
        denominators: s.clone(),
        carrier,
        map,
        inverses,
    })
}

/// The localization at the largest regular Ore set S₀ (the union of the
/// ass-0 class). For finite rings S₀ is exactly the unit group, so the
/// carrier reproduces the ring; both facts are asserted, and applying the
/// construction to the carrier must be a fixed point.
pub fn largest_quotient(
    catalog: &DenominatorCatalog,
    cap: usize,
    cache: &LatticeCache,
) -> Result<LocalizedRing> {
    largest_quotient_inner(catalog, cap, cache, true)
}

fn largest_quotient_inner(
    catalog: &DenominatorCatalog,
    cap: usize,
    cache: &LatticeCache,
    recheck: bool,
) -> Result<LocalizedRing> {
    let ring = catalog.ring();
    let zero_ideal = ElemSet::singleton(ring.zero());
    let s0 = catalog.largest_with_ass(&zero_ideal)?;
    if s0.members() != ring.units() {
        return Err(Error::internal(
            format!("largest regular Ore set of {} differs from the unit group", ring.label()),
            &s0.members().minus(&ring.units()).to_vec(),
        ));
    }
    let loc = localize(ring, &s0)?;
    if !loc.carrier().same_tables(ring) {
        return Err(Error::internal(
            "localization at the regular Ore set changed the ring",
            &[],
        ));
    }
    if recheck {
        // idempotence: the construction applied to the carrier is a fixed point
        let carrier_catalog =
            crate::ore::denominator_catalog(loc.carrier(), catalog.side(), cap, cache)?;
        let again = largest_quotient_inner(&carrier_catalog, cap, cache, false)?;
        if !again.carrier().same_tables(loc.carrier()) {
            return Err(Error::internal("largest quotient is not idempotent", &[]));
        }
    }
    Ok(loc)
}

/// Outcome of the classical quotient construction at the regular elements.
#[derive(Debug)]
pub enum ClassicalQuotient {
    Exists(LocalizedRing),
    /// The regular elements fail the left Ore condition at this pair, so the
    /// classical left quotient ring does not exist.
    NotOre { r: u16, s: u16 },
}

/// Attempts to localize at the set of regular elements. Finite rings always
/// succeed (regular = unit), but the check is definitional: the Ore
/// condition is tested, not assumed.
pub fn classical_left_quotient(ring: &Arc<FiniteRing>) -> Result<ClassicalQuotient> {
    let regeln = ring.regular_elements();
    if let Some((r, s)) = left_ore_witness(ring, &regeln) {
        return Ok(ClassicalQuotient::NotOre { r, s });
    }
    let s = MultSet::new_closed(ring.clone(), regeln, crate::ring::Side::Left).map_err(|_| {
        Error::internal("regular elements are not multiplicatively closed", &[])
    })?;
    if !s.is_denominator() {
        return Err(Error::internal(
            "regular Ore set fails the denominator condition",
            &[],
        ));
    }
    Ok(ClassicalQuotient::Exists(localize(ring, &s)?))
}

/// The unique map S⁻¹R → T⁻¹R over R, available when S ⊆ T. Built by
/// lifting along coset representatives and verified exhaustively, including
/// commutation with both canonical maps.
pub fn induced_map(from: &LocalizedRing, to: &LocalizedRing) -> Result<RingMap> {
    if !from.source().same_tables(to.source()) {
        return Err(Error::RingMismatch("localizations of different rings"));
    }
    if let Some(missing) = from
        .denominator_set()
        .members()
        .iter()
        .find(|&m| !to.denominator_set().contains(m))
    {
        return Err(Error::NoInducedMap { witness: missing });
    }

    let src = from.source();
    let mut image = vec![u16::MAX; from.carrier().size()];
    for x in from.carrier().elements() {
        let rep = src
            .elements()
            .find(|&r| from.canonical_map().apply(r) == x)
            .expect("canonical map is surjective");
        image[usize::from(x)] = to.canonical_map().apply(rep);
    }
    let map = RingMap::verified(from.carrier().clone(), to.carrier().clone(), image)?;
    for r in src.elements() {
        if map.apply(from.canonical_map().apply(r)) != to.canonical_map().apply(r) {
            return Err(Error::internal(
                "induced map does not commute with the canonical maps",
                &[r],
            ));
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_cyclic_ring, make_gf, make_matrix_ring, MatrixShape};
    use crate::ore::denominator_catalog;
    use crate::ring::Side;
    use crate::DEFAULT_ENUM_CAP;

    fn set(items: &[u16]) -> ElemSet {
        items.iter().copied().collect()
    }

    #[test]
    fn localize_z6_at_even_class() {
        let z6 = make_cyclic_ring(6).unwrap().shared();
        let s = MultSet::new_closed(z6.clone(), set(&[1, 2, 4]), Side::Left).unwrap();
        let loc = localize(&z6, &s).unwrap();
        assert_eq!(loc.carrier().size(), 3, "Z/6 over ass = {{0,3}}");
        assert_eq!(loc.canonical_map().kernel(), set(&[0, 3]));
        for m in s.members().iter() {
            let inv = loc.inverse_witness(m).unwrap();
            let img = loc.canonical_map().apply(m);
            assert_eq!(loc.carrier().mul(img, inv), loc.carrier().one());
        }
    }

    #[test]
    fn localize_at_one_is_identity() {
        let z6 = make_cyclic_ring(6).unwrap().shared();
        let s = MultSet::new_closed(z6.clone(), ElemSet::singleton(1), Side::Left).unwrap();
        let loc = localize(&z6, &s).unwrap();
        assert!(loc.carrier().same_tables(&z6));
        assert!((0..6u16).all(|x| loc.canonical_map().apply(x) == x));
    }

    #[test]
    fn localize_triangular_at_corner_units() {
        let f2 = make_gf(2).unwrap();
        let l2 = make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap();
        let t: ElemSet = l2
            .ring
            .elements()
            .filter(|&x| l2.entry(x, 0, 0) != f2.zero())
            .collect();
        let s = MultSet::new_closed(l2.ring.clone(), t, Side::Left).unwrap();
        let loc = localize(&l2.ring, &s).unwrap();
        assert_eq!(loc.carrier().size(), 2);
        assert_eq!(loc.canonical_map().kernel().len(), 4);
    }

    #[test]
    fn non_denominator_input_is_rejected() {
        let f2 = make_gf(2).unwrap();
        let m2 = make_matrix_ring(&f2, 2, MatrixShape::Full).unwrap();
        let e11 = m2.unit(0, 0).unwrap();
        let s = MultSet::new_closed(m2.ring.clone(), set(&[m2.ring.one(), e11]), Side::Left)
            .unwrap();
        assert!(matches!(
            localize(&m2.ring, &s),
            Err(Error::NotDenominator { .. })
        ));
    }

    #[test]
    fn largest_quotient_fixes_finite_rings() {
        let cache = LatticeCache::new();
        for ring in [
            make_cyclic_ring(4).unwrap().shared(),
            make_gf(4).unwrap().shared(),
            make_matrix_ring(&make_gf(2).unwrap(), 2, MatrixShape::Lower)
                .unwrap()
                .ring,
        ] {
            let cat = denominator_catalog(&ring, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
            let loc = largest_quotient(&cat, DEFAULT_ENUM_CAP, &cache).unwrap();
            assert!(loc.carrier().same_tables(&ring));
            assert_eq!(loc.denominator_set().members(), ring.units());
        }
    }

    #[test]
    fn classical_quotient_exists_for_finite_rings() {
        for ring in [
            make_cyclic_ring(6).unwrap().shared(),
            make_matrix_ring(&make_gf(2).unwrap(), 2, MatrixShape::Full)
                .unwrap()
                .ring,
        ] {
            match classical_left_quotient(&ring).unwrap() {
                ClassicalQuotient::Exists(loc) => {
                    assert!(loc.carrier().same_tables(&ring));
                }
                ClassicalQuotient::NotOre { r, s } => {
                    panic!("finite ring {} failed Ore at ({r}, {s})", ring.label())
                }
            }
        }
    }

    #[test]
    fn induced_maps_and_theta_kernel() {
        let f2 = make_gf(2).unwrap();
        let l2 = make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap();
        let ring = &l2.ring;
        let e11 = l2.unit(0, 0).unwrap();

        let small = MultSet::new_closed(ring.clone(), set(&[ring.one(), e11]), Side::Left)
            .unwrap();
        let t_members: ElemSet = ring
            .elements()
            .filter(|&x| l2.entry(x, 0, 0) != f2.zero())
            .collect();
        let t = MultSet::new_closed(ring.clone(), t_members, Side::Left).unwrap();

        let from = localize(ring, &small).unwrap();
        let to = localize(ring, &t).unwrap();
        let f = induced_map(&from, &to).unwrap();
        assert!(f.is_bijective(), "same ass ideal, so the induced map is an iso");

        // identity when endpoints coincide
        let id = induced_map(&to, &to).unwrap();
        assert!(to.carrier().elements().all(|x| id.apply(x) == x));

        // the canonical comparison map out of the regular-element
        // localization has the 4-element corner ideal as kernel
        let units = MultSet::new_closed(ring.clone(), ring.units(), Side::Left).unwrap();
        let ql = localize(ring, &units).unwrap();
        let theta = induced_map(&ql, &to).unwrap();
        assert_eq!(theta.kernel().len(), 4);

        // inclusion failure is reported with the missing element
        assert!(matches!(
            induced_map(&to, &ql),
            Err(Error::NoInducedMap { .. })
        ));
    }
}
