//! Multiplicative-set calculus: monoid closures, Ore/denominator checks,
//! products of denominator sets, and exhaustive enumeration of the
//! denominator sets of a finite ring.
//!
//! Enumeration works on the lattice of multiplicative submonoids (subsets
//! containing 1, avoiding 0, closed under the product). Submonoids are
//! discovered by breadth-first closure of generator extensions: every
//! submonoid arises from a smaller one by adjoining a single generator and
//! closing, so visiting each closed set once reaches all of them without
//! scanning the power set. Branches whose closure absorbs 0 are pruned
//! immediately; by definition they support no multiplicative set.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{FiniteRing, Side};

/// A multiplicatively closed subset (1 ∈ S, 0 ∉ S) with side-tagged Ore and
/// denominator status, computed on first use.
pub struct MultSet {
    ring: Arc<FiniteRing>,
    members: ElemSet,
    side: Side,
    ore: OnceLock<bool>,
    den: OnceLock<bool>,
    ass: OnceLock<ElemSet>,
}

impl Clone for MultSet {
    fn clone(&self) -> Self {
        MultSet {
            ring: self.ring.clone(),
            members: self.members,
            side: self.side,
            ore: self.ore.clone(),
            den: self.den.clone(),
            ass: self.ass.clone(),
        }
    }
}

impl std::fmt::Debug for MultSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MultSet({} {} in {})", self.side, self.members, self.ring.label())
    }
}

impl PartialEq for MultSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.side == other.side
    }
}
impl Eq for MultSet {}

impl MultSet {
    /// Wraps an already-closed member set, re-verifying the multiplicative
    /// set axioms.
    pub fn new_closed(ring: Arc<FiniteRing>, members: ElemSet, side: Side) -> Result<Self> {
        if !members.contains(ring.one()) {
            return Err(Error::NotMultiplicative {
                reason: "does not contain 1",
                witness: vec![ring.one()],
            });
        }
        if members.contains(ring.zero()) {
            return Err(Error::NotMultiplicative {
                reason: "contains 0",
                witness: vec![ring.zero()],
            });
        }
        for a in members.iter() {
            for b in members.iter() {
                if !members.contains(ring.mul(a, b)) {
                    return Err(Error::NotMultiplicative {
                        reason: "not closed under multiplication",
                        witness: vec![a, b],
                    });
                }
            }
        }
        Ok(MultSet {
            ring,
            members,
            side,
            ore: OnceLock::new(),
            den: OnceLock::new(),
            ass: OnceLock::new(),
        })
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
        false // always contains 1
    }

    pub fn contains(&self, x: u16) -> bool {
        self.members.contains(x)
    }

    pub fn is_ore(&self) -> bool {
        *self.ore.get_or_init(|| match self.side {
            Side::Left => is_left_ore(&self.ring, &self.members),
            Side::Right => is_right_ore(&self.ring, &self.members),
            Side::TwoSided => {
                is_left_ore(&self.ring, &self.members) && is_right_ore(&self.ring, &self.members)
            }
        })
    }

    pub fn is_denominator(&self) -> bool {
        *self.den.get_or_init(|| match self.side {
            Side::Left => is_left_denominator(&self.ring, &self.members),
            Side::Right => is_right_denominator(&self.ring, &self.members),
            Side::TwoSided => {
                is_left_denominator(&self.ring, &self.members)
                    && is_right_denominator(&self.ring, &self.members)
            }
        })
    }

    /// ass(S): the elements killed by some member of S (on the side that
    /// matches the tag). Refuses non-Ore input; for two-sided denominator
    /// sets the left and right versions must agree.
    pub fn ass_members(&self) -> Result<ElemSet> {
        if let Some(v) = self.ass.get() {
            return Ok(*v);
        }
        if !self.is_ore() {
            let (r, s) = match self.side {
                Side::Right => right_ore_witness(&self.ring, &self.members),
                _ => left_ore_witness(&self.ring, &self.members),
            }
            .expect("non-Ore set has a witness");
            return Err(Error::NotOre { r, s });
        }
        let value = match self.side {
            Side::Left => ass_left(&self.ring, &self.members),
            Side::Right => ass_right(&self.ring, &self.members),
            Side::TwoSided => {
                let l = ass_left(&self.ring, &self.members);
                let r = ass_right(&self.ring, &self.members);
                if self.is_denominator() && l != r {
                    return Err(Error::internal(
                        format!(
                            "two-sided denominator set with asymmetric ass in {}",
                            self.ring.label()
                        ),
                        &l.minus(&r).union(&r.minus(&l)).to_vec(),
                    ));
                }
                l
            }
        };
        let _ = self.ass.set(value);
        Ok(value)
    }

    /// ass(S) as a verified two-sided ideal; requires a denominator set.
    pub fn ass_ideal(&self) -> Result<Ideal> {
        if !self.is_denominator() {
            return Err(Error::NotDenominator {
                reason: "ass ideal only exists for denominator sets",
                witness: vec![],
            });
        }
        let members = self.ass_members()?;
        Ideal::verified(self.ring.clone(), members, Side::TwoSided).map_err(|_| {
            Error::internal(
                format!("ass of a denominator set is not a two-sided ideal in {}", self.ring.label()),
                &members.to_vec(),
            )
        })
    }

    pub fn with_side(&self, side: Side) -> MultSet {
        MultSet {
            ring: self.ring.clone(),
            members: self.members,
            side,
            ore: OnceLock::new(),
            den: OnceLock::new(),
            ass: OnceLock::new(),
        }
    }
}

/// Incremental closure: `base` is already closed, adjoin `x` and close.
/// Returns the witnessing pair on zero absorption.
fn close_extend(
    ring: &FiniteRing,
    base: &ElemSet,
    base_list: &[u16],
    x: u16,
) -> std::result::Result<(ElemSet, Vec<u16>), (u16, u16)> {
    let zero = ring.zero();
    if x == zero {
        return Err((ring.one(), zero));
    }
    let mut set = *base;
    let mut list = base_list.to_vec();
    let mut queue = Vec::new();
    if set.insert(x) {
        list.push(x);
        queue.push(x);
    }
    while let Some(a) = queue.pop() {
        let mut k = 0;
        while k < list.len() {
            let b = list[k];
            k += 1;
            for (p, q) in [(a, b), (b, a)] {
                let m = ring.mul(p, q);
                if m == zero {
                    return Err((p, q));
                }
                if set.insert(m) {
                    list.push(m);
                    queue.push(m);
                }
            }
        }
    }
    Ok((set, list))
}

/// Closure of an arbitrary generating set together with 1.
fn close(ring: &FiniteRing, gens: &ElemSet) -> std::result::Result<ElemSet, (u16, u16)> {
    let mut set = ElemSet::singleton(ring.one());
    let mut list = vec![ring.one()];
    for g in gens.iter() {
        let (s, l) = close_extend(ring, &set, &list, g)?;
        set = s;
        list = l;
    }
    Ok(set)
}

/// Smallest multiplicative set containing `generators`; fails with the
/// offending product when 0 lands in the closure, which means no
/// denominator set can contain the generators.
pub fn monoid_closure(
    ring: &Arc<FiniteRing>,
    generators: &ElemSet,
    side: Side,
) -> Result<MultSet> {
    if generators.is_empty() {
        return Err(Error::InvalidArgument("closure needs at least one generator".into()));
    }
    match close(ring, generators) {
        Ok(set) => MultSet::new_closed(ring.clone(), set, side),
        Err((a, b)) => Err(Error::ZeroAbsorbed { a, b }),
    }
}

/// A failing pair (r, s) of the left Ore condition S·r ∩ R·s ≠ ∅, if any.
pub fn left_ore_witness(ring: &FiniteRing, s: &ElemSet) -> Option<(u16, u16)> {
    let rs_masks: Vec<(u16, ElemSet)> = s
        .iter()
        .map(|sv| (sv, ring.elements().map(|r| ring.mul(r, sv)).collect()))
        .collect();
    for r in ring.elements() {
        let sr: ElemSet = s.iter().map(|sv| ring.mul(sv, r)).collect();
        for (sv, rs) in &rs_masks {
            if !sr.intersects(rs) {
                return Some((r, *sv));
            }
        }
    }
    None
}

pub fn is_left_ore(ring: &FiniteRing, s: &ElemSet) -> bool {
    left_ore_witness(ring, s).is_none()
}

/// A failing pair of the right Ore condition r·S ∩ s·R ≠ ∅, if any.
pub fn right_ore_witness(ring: &FiniteRing, s: &ElemSet) -> Option<(u16, u16)> {
    let sr_masks: Vec<(u16, ElemSet)> = s
        .iter()
        .map(|sv| (sv, ring.elements().map(|r| ring.mul(sv, r)).collect()))
        .collect();
    for r in ring.elements() {
        let rs: ElemSet = s.iter().map(|sv| ring.mul(r, sv)).collect();
        for (sv, sr) in &sr_masks {
            if !rs.intersects(sr) {
                return Some((r, *sv));
            }
        }
    }
    None
}

pub fn is_right_ore(ring: &FiniteRing, s: &ElemSet) -> bool {
    right_ore_witness(ring, s).is_none()
}

/// {r ∈ R : t·r = 0 for some t ∈ S}.
pub fn ass_left(ring: &FiniteRing, s: &ElemSet) -> ElemSet {
    ring.elements()
        .filter(|&r| s.iter().any(|t| ring.mul(t, r) == ring.zero()))
        .collect()
}

/// {r ∈ R : r·t = 0 for some t ∈ S}.
pub fn ass_right(ring: &FiniteRing, s: &ElemSet) -> ElemSet {
    ring.elements()
        .filter(|&r| s.iter().any(|t| ring.mul(r, t) == ring.zero()))
        .collect()
}

/// Left Ore plus the kill condition: r·s = 0 for s ∈ S forces t·r = 0 for
/// some t ∈ S.
pub fn is_left_denominator(ring: &FiniteRing, s: &ElemSet) -> bool {
    if !is_left_ore(ring, s) {
        return false;
    }
    let killed = ass_left(ring, s);
    ring.elements().all(|r| {
        killed.contains(r) || s.iter().all(|sv| ring.mul(r, sv) != ring.zero())
    })
}

pub fn is_right_denominator(ring: &FiniteRing, s: &ElemSet) -> bool {
    if !is_right_ore(ring, s) {
        return false;
    }
    let killed = ass_right(ring, s);
    ring.elements().all(|r| {
        killed.contains(r) || s.iter().all(|sv| ring.mul(sv, r) != ring.zero())
    })
}

/// The submonoid generated by two denominator sets. When 0 stays out, the
/// result is again a denominator set; that fact is re-verified rather than
/// assumed, and a violation aborts.
pub fn denominator_product(s: &MultSet, t: &MultSet) -> Result<MultSet> {
    if !s.ring().same_tables(t.ring()) {
        return Err(Error::RingMismatch("denominator product across different rings"));
    }
    if s.side() != t.side() {
        return Err(Error::RingMismatch("denominator product across different sides"));
    }
    for (name, m) in [("left", s), ("right", t)] {
        if !m.is_denominator() {
            return Err(Error::NotDenominator {
                reason: if name == "left" {
                    "first factor is not a denominator set"
                } else {
                    "second factor is not a denominator set"
                },
                witness: vec![],
            });
        }
    }
    let product = monoid_closure(s.ring(), &s.members().union(&t.members()), s.side())?;
    if !product.is_denominator() {
        return Err(Error::internal(
            format!(
                "product of denominator sets avoids zero but is not a denominator set in {}",
                s.ring().label()
            ),
            &product.members().to_vec(),
        ));
    }
    Ok(product)
}

/// Least upper bound of a family of denominator sets: the closure of the
/// union. Fails with zero absorption when no upper bound exists.
pub fn join(sets: &[&MultSet]) -> Result<MultSet> {
    let first = sets
        .first()
        .ok_or_else(|| Error::InvalidArgument("join of an empty family".into()))?;
    let mut union = ElemSet::empty();
    for s in sets {
        union = union.union(&s.members());
    }
    let joined = monoid_closure(first.ring(), &union, first.side())?;
    if sets.iter().all(|s| s.is_denominator()) && !joined.is_denominator() {
        return Err(Error::internal(
            "join of denominator sets avoids zero but is not a denominator set",
            &joined.members().to_vec(),
        ));
    }
    Ok(joined)
}

/// All multiplicative submonoids of the ring (1 ∈ S, 0 ∉ S), in canonical
/// order. `exhaustive` is false when the ring is larger than the cap; then
/// only closures of the unit group, singletons and pairs are listed.
pub struct SubmonoidLattice {
    pub sets: Vec<ElemSet>,
    pub exhaustive: bool,
}

pub fn enumerate_submonoids(ring: &FiniteRing, cap: usize) -> SubmonoidLattice {
    let exhaustive = ring.size() <= cap;
    let mut seen: HashSet<ElemSet> = HashSet::new();

    if exhaustive {
        let start = ElemSet::singleton(ring.one());
        seen.insert(start);
        let mut frontier = vec![start];
        while !frontier.is_empty() {
            let discovered: Vec<Vec<ElemSet>> = frontier
                .par_iter()
                .map(|c| {
                    let list = c.to_vec();
                    ring.elements()
                        .filter(|&x| x != ring.zero() && !c.contains(x))
                        .filter_map(|x| close_extend(ring, c, &list, x).ok().map(|(s, _)| s))
                        .collect()
                })
                .collect();
            let mut next = Vec::new();
            for batch in discovered {
                for s in batch {
                    if seen.insert(s) {
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
    } else {
        let mut push = |gens: ElemSet| {
            if let Ok(s) = close(ring, &gens) {
                seen.insert(s);
            }
        };
        push(ring.units());
        for x in ring.elements().filter(|&x| x != ring.zero()) {
            push(ElemSet::singleton(x));
            for y in ring.elements().filter(|&y| y > x && y != ring.zero()) {
                push([x, y].into_iter().collect());
            }
        }
    }

    let mut sets: Vec<ElemSet> = seen.into_iter().collect();
    sets.sort_unstable();
    SubmonoidLattice { sets, exhaustive }
}

/// Memo of submonoid lattices and denominator catalogs, keyed by ring table
/// digest, side and enumeration mode. Profile computations revisit the same
/// quotient rings many times (carriers of trivial localizations reproduce
/// the ring bit-for-bit), so both layers are shared. Keys ignore ring
/// identity on purpose: structurally equal rings answer identically.
#[derive(Default)]
pub struct LatticeCache {
    lattices: Mutex<HashMap<([u8; 32], bool), Arc<SubmonoidLattice>>>,
    catalogs: Mutex<HashMap<([u8; 32], Side, bool), Arc<DenominatorCatalog>>>,
}

impl LatticeCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get_or_build(&self, ring: &FiniteRing, cap: usize) -> Arc<SubmonoidLattice> {
        let key = (ring.digest(), ring.size() <= cap);
        if let Some(hit) = self.lattices.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let built = Arc::new(enumerate_submonoids(ring, cap));
        self.lattices
            .lock()
            .unwrap()
            .entry(key)
            .or_insert(built)
            .clone()
    }

    /// Seeds the cache with an externally stored lattice (disk cache).
    pub fn insert(&self, digest: [u8; 32], lattice: SubmonoidLattice) {
        self.lattices
            .lock()
            .unwrap()
            .insert((digest, lattice.exhaustive), Arc::new(lattice));
    }
}

/// Every denominator set of the ring on one side, canonically ordered, with
/// the ⊆-maximal members marked. Exhaustive exactly when the lattice was.
pub struct DenominatorCatalog {
    ring: Arc<FiniteRing>,
    side: Side,
    pub sets: Vec<MultSet>,
    pub maximal: Vec<usize>,
    pub exhaustive: bool,
}

impl DenominatorCatalog {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// The maximal denominator sets; refuses non-exhaustive catalogs since
    /// maximality cannot be certified from a partial list.
    pub fn max_sets(&self) -> Result<Vec<&MultSet>> {
        if !self.exhaustive {
            return Err(Error::NotExhaustive {
                size: self.ring.size(),
                cap: 0,
            });
        }
        Ok(self.maximal.iter().map(|&i| &self.sets[i]).collect())
    }

    pub fn member_families(&self) -> Vec<ElemSet> {
        self.sets.iter().map(|s| s.members()).collect()
    }

    /// All distinct ass ideals over the catalog.
    pub fn ass_family(&self) -> Result<Vec<ElemSet>> {
        let mut out: Vec<ElemSet> = Vec::new();
        for s in &self.sets {
            let a = s.ass_members()?;
            if !out.contains(&a) {
                out.push(a);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// The largest denominator set with the prescribed ass ideal: the union
    /// of all members with that ass, re-verified to be a denominator set
    /// with the same ass.
    pub fn largest_with_ass(&self, target: &ElemSet) -> Result<MultSet> {
        if !self.exhaustive {
            return Err(Error::NotExhaustive {
                size: self.ring.size(),
                cap: 0,
            });
        }
        let mut union = ElemSet::empty();
        let mut found = false;
        for s in &self.sets {
            if s.ass_members()? == *target {
                union = union.union(&s.members());
                found = true;
            }
        }
        if !found {
            return Err(Error::NoSuchAssIdeal);
        }
        let set = MultSet::new_closed(self.ring.clone(), union, self.side).map_err(|_| {
            Error::internal(
                "union over an ass class is not multiplicatively closed",
                &union.to_vec(),
            )
        })?;
        if !set.is_denominator() || set.ass_members()? != *target {
            return Err(Error::internal(
                "union over an ass class is not the largest denominator set for it",
                &union.to_vec(),
            ));
        }
        Ok(set)
    }
}

/// Enumerates the denominator sets of `ring` on `side`.
///
/// With `|R| ≤ cap` the catalog is exhaustive: every denominator set appears
/// exactly once. Each ⊆-maximal member is additionally re-certified by the
/// independent criterion: for every member T ⊄ S the product set ST must
/// absorb 0. Beyond the cap the catalog degrades to generator probes and
/// carries `exhaustive = false`.
pub fn denominator_catalog(
    ring: &Arc<FiniteRing>,
    side: Side,
    cap: usize,
    cache: &LatticeCache,
) -> Result<Arc<DenominatorCatalog>> {
    let key = (ring.digest(), side, ring.size() <= cap);
    if let Some(hit) = cache.catalogs.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let lattice = cache.get_or_build(ring, cap);
    let candidates: Vec<MultSet> = lattice
        .sets
        .par_iter()
        .filter_map(|&members| {
            let m = MultSet::new_closed(ring.clone(), members, side).ok()?;
            m.is_denominator().then_some(m)
        })
        .collect();

    let mut maximal = Vec::new();
    if lattice.exhaustive {
        for (i, s) in candidates.iter().enumerate() {
            let is_max = candidates
                .iter()
                .all(|t| !s.members().is_strict_subset(&t.members()));
            if is_max {
                maximal.push(i);
            }
        }
        if maximal.is_empty() {
            return Err(Error::internal(
                "no maximal denominator set found; {1} is always one",
                &[],
            ));
        }
        // Independent certification of maximality: 0 ∈ ST for every member
        // T not inside S.
        for &i in &maximal {
            let s = &candidates[i];
            for t in &candidates {
                if t.members().is_subset(&s.members()) {
                    continue;
                }
                if close(ring, &s.members().union(&t.members())).is_ok() {
                    return Err(Error::internal(
                        format!(
                            "maximality criterion failed in {}: ST avoids zero for a non-subset T",
                            ring.label()
                        ),
                        &t.members().to_vec(),
                    ));
                }
            }
        }
    }

    let catalog = Arc::new(DenominatorCatalog {
        ring: ring.clone(),
        side,
        sets: candidates,
        maximal,
        exhaustive: lattice.exhaustive,
    });
    cache
        .catalogs
        .lock()
        .unwrap()
        .insert(key, catalog.clone());
    Ok(catalog)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{
        direct_product, make_cyclic_ring, make_gf, make_matrix_ring, opposite_ring, MatrixShape,
    };
    use crate::DEFAULT_ENUM_CAP;

    fn z6() -> Arc<FiniteRing> {
        make_cyclic_ring(6).unwrap().shared()
    }

    fn l2f2() -> (Arc<FiniteRing>, crate::construct::MatrixRing) {
        let f2 = make_gf(2).unwrap();
        let m = make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap();
        (m.ring.clone(), m)
    }

    fn set(items: &[u16]) -> ElemSet {
        items.iter().copied().collect()
    }

    #[test]
    fn closure_examples() {
        let z6 = z6();
        let s = monoid_closure(&z6, &ElemSet::singleton(5), Side::Left).unwrap();
        assert_eq!(s.members(), set(&[1, 5]));

        let z4 = make_cyclic_ring(4).unwrap().shared();
        match monoid_closure(&z4, &ElemSet::singleton(2), Side::Left) {
            Err(Error::ZeroAbsorbed { a: 2, b: 2 }) => {}
            other => panic!("expected 2*2=0 absorption, got {other:?}"),
        }

        let (ring, l2) = l2f2();
        let e11 = l2.unit(0, 0).unwrap();
        let s = monoid_closure(&ring, &ElemSet::singleton(e11), Side::Left).unwrap();
        assert_eq!(s.members(), set(&[ring.one(), e11]));
    }

    #[test]
    fn ore_holds_automatically_when_commutative() {
        let z12 = make_cyclic_ring(12).unwrap().shared();
        let lattice = enumerate_submonoids(&z12, DEFAULT_ENUM_CAP);
        assert!(lattice.exhaustive);
        for members in &lattice.sets {
            assert!(is_left_ore(&z12, members));
            assert!(is_right_ore(&z12, members));
        }
    }

    #[test]
    fn triangular_idempotent_set_is_denominator() {
        let (ring, l2) = l2f2();
        let e11 = l2.unit(0, 0).unwrap();
        let s = set(&[ring.one(), e11]);
        assert!(is_left_ore(&ring, &s));
        assert!(is_left_denominator(&ring, &s));
        let ass = ass_left(&ring, &s);
        assert_eq!(ass.len(), 4);
        for x in ass.iter() {
            assert_eq!(l2.entry(x, 0, 0), l2.base().zero());
        }
    }

    #[test]
    fn full_matrix_ring_rejects_singular_ore_sets() {
        let f2 = make_gf(2).unwrap();
        let m2 = make_matrix_ring(&f2, 2, MatrixShape::Full).unwrap();
        let e11 = m2.unit(0, 0).unwrap();
        let s = set(&[m2.ring.one(), e11]);
        assert!(!is_left_ore(&m2.ring, &s));
    }

    #[test]
    fn ass_examples_in_z6() {
        let z6 = z6();
        let s = MultSet::new_closed(z6.clone(), set(&[1, 2, 4]), Side::Left).unwrap();
        assert!(s.is_denominator());
        assert_eq!(s.ass_members().unwrap(), set(&[0, 3]));
        assert!(s.ass_ideal().unwrap().is_proper());

        let trivial = MultSet::new_closed(z6, ElemSet::singleton(1), Side::Left).unwrap();
        assert_eq!(trivial.ass_members().unwrap(), set(&[0]));
    }

    #[test]
    fn denominator_products() {
        let z6 = z6();
        let s = MultSet::new_closed(z6.clone(), set(&[1, 5]), Side::Left).unwrap();
        let t = MultSet::new_closed(z6.clone(), set(&[1, 2, 4]), Side::Left).unwrap();

        let st = denominator_product(&s, &s).unwrap();
        assert_eq!(st.members(), s.members(), "closure is idempotent");

        let st = denominator_product(&s, &t).unwrap();
        assert_eq!(st.members(), set(&[1, 2, 4, 5]));

        let u = MultSet::new_closed(z6, set(&[1, 3]), Side::Left).unwrap();
        assert!(matches!(
            denominator_product(&t, &u),
            Err(Error::ZeroAbsorbed { .. })
        ));
    }

    /// Independent oracle: filter the full power set. Only feasible for tiny
    /// rings, which is exactly what makes it a cross-check of the
    /// closure-BFS enumeration.
    fn powerset_denominator_sets(ring: &Arc<FiniteRing>) -> Vec<ElemSet> {
        let n = ring.size();
        assert!(n <= 16);
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let members: ElemSet = (0..n as u16).filter(|&i| mask & (1 << i) != 0).collect();
            if !members.contains(ring.one()) || members.contains(ring.zero()) {
                continue;
            }
            let closed = members
                .iter()
                .all(|a| members.iter().all(|b| members.contains(ring.mul(a, b))));
            if closed && is_left_denominator(ring, &members) {
                out.push(members);
            }
        }
        out.sort_unstable();
        out
    }

    #[test]
    fn catalog_agrees_with_powerset_oracle() {
        let f2 = make_gf(2).unwrap();
        let rings: Vec<Arc<FiniteRing>> = vec![
            make_cyclic_ring(4).unwrap().shared(),
            z6(),
            make_cyclic_ring(8).unwrap().shared(),
            l2f2().0,
            make_matrix_ring(&f2, 2, MatrixShape::Upper).unwrap().ring,
            make_matrix_ring(&f2, 2, MatrixShape::Full).unwrap().ring,
            direct_product(&[&f2, &f2]).unwrap().ring,
        ];
        let cache = LatticeCache::new();
        for ring in rings {
            let catalog = denominator_catalog(&ring, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
            let expected = powerset_denominator_sets(&ring);
            let got = catalog.member_families();
            assert_eq!(got, expected, "catalog mismatch for {}", ring.label());
        }
    }

    #[test]
    fn z4_catalog_and_maximal() {
        let z4 = make_cyclic_ring(4).unwrap().shared();
        let cache = LatticeCache::new();
        let cat = denominator_catalog(&z4, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        assert_eq!(cat.member_families(), vec![set(&[1]), set(&[1, 3])]);
        let max = cat.max_sets().unwrap();
        assert_eq!(max.len(), 1);
        assert_eq!(max[0].members(), set(&[1, 3]));
    }

    #[test]
    fn z6_catalog_and_maximal() {
        let cache = LatticeCache::new();
        let cat = denominator_catalog(&z6(), Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        assert_eq!(
            cat.member_families(),
            vec![
                set(&[1]),
                set(&[1, 3]),
                set(&[1, 4]),
                set(&[1, 5]),
                set(&[1, 2, 4]),
                set(&[1, 3, 5]),
                set(&[1, 2, 4, 5]),
            ]
        );
        let max: Vec<ElemSet> = cat.max_sets().unwrap().iter().map(|s| s.members()).collect();
        assert_eq!(max, vec![set(&[1, 3, 5]), set(&[1, 2, 4, 5])]);
    }

    #[test]
    fn field_catalog_is_trivial_monoid_tower() {
        let f2 = make_gf(2).unwrap().shared();
        let cache = LatticeCache::new();
        let cat = denominator_catalog(&f2, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        assert_eq!(cat.member_families(), vec![ElemSet::singleton(1)]);
    }

    #[test]
    fn matrix_ring_maximal_sets() {
        let f2 = make_gf(2).unwrap();
        let m2 = make_matrix_ring(&f2, 2, MatrixShape::Full).unwrap();
        let cache = LatticeCache::new();
        let cat = denominator_catalog(&m2.ring, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        let max = cat.max_sets().unwrap();
        assert_eq!(max.len(), 1);
        assert_eq!(max[0].members(), m2.ring.units());

        let (ring, l2) = l2f2();
        let cat = denominator_catalog(&ring, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        let max = cat.max_sets().unwrap();
        assert_eq!(max.len(), 1);
        let expected: ElemSet = ring
            .elements()
            .filter(|&x| l2.entry(x, 0, 0) != l2.base().zero())
            .collect();
        assert_eq!(max[0].members(), expected);
        assert_eq!(max[0].members().len(), 4);
    }

    #[test]
    fn largest_set_for_an_ass_ideal() {
        let cache = LatticeCache::new();
        let cat = denominator_catalog(&z6(), Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        let s0 = cat.largest_with_ass(&ElemSet::singleton(0)).unwrap();
        assert_eq!(s0.members(), set(&[1, 5]));
        assert_eq!(s0.members(), cat.ring().units());

        assert!(matches!(
            cat.largest_with_ass(&ElemSet::full(6)),
            Err(Error::NoSuchAssIdeal)
        ));
    }

    #[test]
    fn right_catalog_matches_opposite_left_catalog() {
        let (ring, l2) = l2f2();
        let cache = LatticeCache::new();
        let right = denominator_catalog(&ring, Side::Right, DEFAULT_ENUM_CAP, &cache).unwrap();
        let op = opposite_ring(&ring).shared();
        let op_left = denominator_catalog(&op, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        assert_eq!(right.member_families(), op_left.member_families());

        // the unique maximal right denominator set of the lower triangular
        // ring lives at the other corner
        let max = right.max_sets().unwrap();
        assert_eq!(max.len(), 1);
        let expected: ElemSet = ring
            .elements()
            .filter(|&x| l2.entry(x, 1, 1) != l2.base().zero())
            .collect();
        assert_eq!(max[0].members(), expected);
    }

    #[test]
    fn join_is_an_upper_bound() {
        let cache = LatticeCache::new();
        let cat = denominator_catalog(&z6(), Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        let a = &cat.sets[0]; // {1}
        let b = cat
            .sets
            .iter()
            .find(|s| s.members() == set(&[1, 5]))
            .unwrap();
        let j = join(&[a, b]).unwrap();
        assert!(a.members().is_subset(&j.members()));
        assert!(b.members().is_subset(&j.members()));
        assert_eq!(j.members(), set(&[1, 5]));
    }

    #[test]
    fn non_exhaustive_catalog_refuses_maximality() {
        let z6 = z6();
        let cache = LatticeCache::new();
        let cat = denominator_catalog(&z6, Side::Left, 4, &cache).unwrap();
        assert!(!cat.exhaustive);
        assert!(matches!(cat.max_sets(), Err(Error::NotExhaustive { .. })));
    }
}
