//! Strong quotient profiles and the executable identity suite.
//!
//! For a finite ring and a side, the profile collects the maximal
//! denominator sets, the set of strongly localizable elements (their
//! intersection), the weak regular element sets, the largest strong
//! denominator set `T` (the union of all denominator sets inside the
//! intersection), the radicals `ass(T)` and `∩ ass(S)`, and the strong
//! quotient ring `T⁻¹R`.
//!
//! Profile construction is self-checking: `T` must agree with three
//! independent characterizations (the largest set of its ass class, the
//! preimage of the strong quotient's units, and the largest denominator set
//! inside the weak regular elements), and a disagreement is a hard error,
//! not a report entry. On top of that, [`analyze`] evaluates a battery of
//! identities relating the profile of `R` to the profiles of its quotients
//! and localizations, returning one named verdict per identity.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::construct::{opposite_ring, direct_product, ProductRing};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::localize::{
    classical_left_quotient, induced_map, largest_quotient, localize, ClassicalQuotient,
    LocalizedRing,
};
use crate::map::RingMap;
use crate::ore::{denominator_catalog, DenominatorCatalog, LatticeCache, MultSet};
use crate::ring::{FiniteRing, Side};

/// Outcome of one checked identity: pass/fail plus a witness description on
/// failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    pub detail: String,
}

impl Verdict {
    fn ok() -> Self {
        Verdict { pass: true, detail: String::new() }
    }

    fn from(pass: bool, detail: impl FnOnce() -> String) -> Self {
        if pass {
            Verdict::ok()
        } else {
            Verdict { pass: false, detail: detail() }
        }
    }
}

pub type VerdictMap = BTreeMap<String, Verdict>;

pub fn all_pass(verdicts: &VerdictMap) -> bool {
    verdicts.values().all(|v| v.pass)
}

/// The complete localization profile of a finite ring on one side.
pub struct StrongProfile {
    ring: Arc<FiniteRing>,
    side: Side,
    pub catalog: Arc<DenominatorCatalog>,
    pub maximal_localizations: Vec<LocalizedRing>,
    /// Intersection of the maximal denominator sets.
    pub strongly_localizable: ElemSet,
    /// Elements regular in every maximal localization.
    pub weak_regular: ElemSet,
    /// Elements one-sided-regular in every maximal localization.
    pub weak_left_regular: ElemSet,
    /// The largest strong denominator set `T`.
    pub strong_set: MultSet,
    /// `ass(T)`.
    pub strong_radical: Ideal,
    /// Intersection of the ass ideals of the maximal denominator sets.
    pub localization_radical: Ideal,
    /// `T⁻¹R`, realized on `R/ass(T)`.
    pub strong_quotient: LocalizedRing,
}

impl StrongProfile {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Canonical map onto the strong quotient carrier (the projection
    /// modulo the strong radical).
    pub fn sigma(&self) -> &RingMap {
        self.strong_quotient.canonical_map()
    }

    pub fn maximal_members(&self) -> Vec<ElemSet> {
        self.maximal_localizations
            .iter()
            .map(|l| l.denominator_set().members())
            .collect()
    }
}

fn one_sided_regular(carrier: &FiniteRing, side: Side) -> ElemSet {
    match side {
        Side::Left | Side::TwoSided => carrier.left_regular_elements(),
        Side::Right => carrier.right_regular_elements(),
    }
}

/// Computes the strong profile; requires an exhaustive catalog.
pub fn strong_profile(
    ring: &Arc<FiniteRing>,
    side: Side,
    cap: usize,
    cache: &LatticeCache,
) -> Result<StrongProfile> {
    if ring.size() > cap {
        return Err(Error::NotExhaustive { size: ring.size(), cap });
    }
    let catalog = denominator_catalog(ring, side, cap, cache)?;
    let maximal: Vec<MultSet> = catalog.max_sets()?.into_iter().cloned().collect();
    let localizations: Vec<LocalizedRing> = maximal
        .iter()
        .map(|s| localize(ring, s))
        .collect::<Result<_>>()?;

    let mut cls = ring.element_set();
    for s in &maximal {
        cls = cls.intersect(&s.members());
    }
    // independent characterization: exactly the elements that become units
    // in every maximal localization
    let cls_via_units: ElemSet = ring
        .elements()
        .filter(|&c| {
            localizations.iter().all(|l| {
                l.carrier().units().contains(l.canonical_map().apply(c))
            })
        })
        .collect();
    if cls != cls_via_units {
        return Err(Error::internal(
            format!("strongly localizable set of {} fails its unit characterization", ring.label()),
            &cls.minus(&cls_via_units).union(&cls_via_units.minus(&cls)).to_vec(),
        ));
    }

    let weak_regular: ElemSet = ring
        .elements()
        .filter(|&c| {
            localizations.iter().all(|l| {
                l.carrier()
                    .regular_elements()
                    .contains(l.canonical_map().apply(c))
            })
        })
        .collect();
    let weak_left_regular: ElemSet = ring
        .elements()
        .filter(|&c| {
            localizations.iter().all(|l| {
                one_sided_regular(l.carrier(), side).contains(l.canonical_map().apply(c))
            })
        })
        .collect();

    // T: union of the denominator sets inside the strongly localizable set
    let mut t_members = ElemSet::empty();
    for s in &catalog.sets {
        if s.members().is_subset(&cls) {
            t_members = t_members.union(&s.members());
        }
    }
    let strong_set = MultSet::new_closed(ring.clone(), t_members, side).map_err(|_| {
        Error::internal(
            format!("union of strong denominator sets of {} is not closed", ring.label()),
            &t_members.to_vec(),
        )
    })?;
    if !strong_set.is_denominator() {
        return Err(Error::internal(
            format!("union of strong denominator sets of {} is not a denominator set", ring.label()),
            &t_members.to_vec(),
        ));
    }

    let strong_radical = strong_set.ass_ideal()?;
    let strong_quotient = localize(ring, &strong_set)?;

    // cross-check 1: T is the largest denominator set in its ass class
    let via_ass_class = catalog.largest_with_ass(&strong_radical.members())?;
    // cross-check 2: T is the preimage of the strong quotient's units
    let via_units = strong_quotient
        .canonical_map()
        .preimage_of_set(&strong_quotient.carrier().units());
    // cross-check 3: T is the largest denominator set inside the weak
    // one-sided-regular elements (and inside the weak regular elements)
    let mut via_weak = ElemSet::empty();
    let mut via_weak_reg = ElemSet::empty();
    for s in &catalog.sets {
        if s.members().is_subset(&weak_left_regular) {
            via_weak = via_weak.union(&s.members());
        }
        if s.members().is_subset(&weak_regular) {
            via_weak_reg = via_weak_reg.union(&s.members());
        }
    }
    for (what, other) in [
        ("ass-class", via_ass_class.members()),
        ("unit-preimage", via_units),
        ("weak-one-sided-regular", via_weak),
        ("weak-regular", via_weak_reg),
    ] {
        if other != t_members {
            return Err(Error::internal(
                format!(
                    "characterizations of the strong denominator set of {} disagree ({what})",
                    ring.label()
                ),
                &other.minus(&t_members).union(&t_members.minus(&other)).to_vec(),
            ));
        }
    }

    // chain T ⊆ CL^s ⊆ C^w ⊆ 'C^w
    if !(t_members.is_subset(&cls)
        && cls.is_subset(&weak_regular)
        && weak_regular.is_subset(&weak_left_regular))
    {
        return Err(Error::internal(
            format!("containment chain broken in {}", ring.label()),
            &[],
        ));
    }

    let mut loc_radical = ring.element_set();
    for l in &localizations {
        loc_radical = loc_radical.intersect(&l.denominator_set().ass_members()?);
    }
    let localization_radical =
        Ideal::verified(ring.clone(), loc_radical, Side::TwoSided).map_err(|_| {
            Error::internal("localization radical is not a two-sided ideal", &loc_radical.to_vec())
        })?;
    if !strong_radical.members().is_subset(&loc_radical) {
        return Err(Error::internal(
            "strong radical exceeds the localization radical",
            &strong_radical.members().minus(&loc_radical).to_vec(),
        ));
    }

    // unit description of the strong quotient: every unit is σ(s)⁻¹σ(t)
    let carrier = strong_quotient.carrier();
    let mut described = ElemSet::empty();
    for s in strong_set.members().iter() {
        let inv = strong_quotient
            .inverse_witness(s)
            .expect("denominators invert in the carrier");
        for t in strong_set.members().iter() {
            described.insert(carrier.mul(inv, strong_quotient.canonical_map().apply(t)));
        }
    }
    if described != carrier.units() {
        return Err(Error::internal(
            format!("units of the strong quotient of {} are not all of the form s⁻¹t", ring.label()),
            &described.minus(&carrier.units()).union(&carrier.units().minus(&described)).to_vec(),
        ));
    }

    Ok(StrongProfile {
        ring: ring.clone(),
        side,
        catalog,
        maximal_localizations: localizations,
        strongly_localizable: cls,
        weak_regular,
        weak_left_regular,
        strong_set,
        strong_radical,
        localization_radical,
        strong_quotient,
    })
}

/// Joint report of the two semisimplicity criteria.
///
/// `strong`: the four equivalent statements tied to the strong quotient
/// (strong quotient semisimple; R mod strong radical semiprime; largest
/// quotient of that ring semisimple; classical quotient of that ring
/// semisimple). `classical`: the three statements tied to the classical
/// quotient (classical quotient semisimple; largest quotient semisimple;
/// strong quotient semisimple with zero strong radical).
#[derive(Debug, Clone)]
pub struct SemisimplicityReport {
    pub side: Side,
    pub strong: [bool; 4],
    pub strong_coherent: bool,
    /// When the strong statements hold: T equals the preimage of the
    /// quotient's regular elements, and T of the quotient equals them.
    pub strong_consequences: Option<bool>,
    pub classical: [bool; 3],
    pub classical_coherent: bool,
    /// When the classical statements hold: regular elements, T and the
    /// strongly localizable set all coincide.
    pub classical_consequences: Option<bool>,
}

impl SemisimplicityReport {
    pub fn coherent(&self) -> bool {
        self.strong_coherent
            && self.classical_coherent
            && self.strong_consequences.unwrap_or(true)
            && self.classical_consequences.unwrap_or(true)
    }
}

pub fn semisimplicity_criterion(
    profile: &StrongProfile,
    cap: usize,
    cache: &LatticeCache,
) -> Result<SemisimplicityReport> {
    let ring = profile.ring();
    let side = profile.side();
    let quotient = profile.strong_quotient.carrier();

    let qcat = denominator_catalog(quotient, side, cap, cache)?;
    let q_largest = largest_quotient(&qcat, cap, cache)?;

    let s1 = quotient.is_semisimple();
    let s2 = quotient.is_semiprime();
    let s3 = q_largest.carrier().is_semisimple();
    let s4 = match classical_left_quotient(quotient)? {
        ClassicalQuotient::Exists(loc) => loc.carrier().is_semisimple(),
        ClassicalQuotient::NotOre { .. } => false,
    };
    let strong = [s1, s2, s3, s4];
    let strong_coherent = strong.iter().all(|&b| b == s1);

    let strong_consequences = if strong_coherent && s1 {
        let pi = profile.sigma();
        let regular_q = quotient.regular_elements();
        let preimage_ok = pi.preimage_of_set(&regular_q) == profile.strong_set.members();
        let qprofile = strong_profile(quotient, side, cap, cache)?;
        let transport_ok = qprofile.strong_set.members() == regular_q;
        Some(preimage_ok && transport_ok)
    } else {
        None
    };

    let rcat = &profile.catalog;
    let r_largest = largest_quotient(rcat, cap, cache)?;
    let c1 = match classical_left_quotient(ring)? {
        ClassicalQuotient::Exists(loc) => loc.carrier().is_semisimple(),
        ClassicalQuotient::NotOre { .. } => false,
    };
    let c2 = r_largest.carrier().is_semisimple();
    let c3 = s1 && profile.strong_radical.is_zero();
    let classical = [c1, c2, c3];
    let classical_coherent = classical.iter().all(|&b| b == c1);

    let classical_consequences = if classical_coherent && c1 {
        let regular = ring.regular_elements();
        Some(
            regular == profile.strong_set.members()
                && regular == profile.strongly_localizable,
        )
    } else {
        None
    };

    Ok(SemisimplicityReport {
        side,
        strong,
        strong_coherent,
        strong_consequences,
        classical,
        classical_coherent,
        classical_consequences,
    })
}

/// Everything [`analyze`] computes for one ring.
pub struct Analysis {
    pub ring: Arc<FiniteRing>,
    pub left: StrongProfile,
    pub right: StrongProfile,
    pub two_sided: StrongProfile,
    pub semisimplicity: SemisimplicityReport,
    pub two_sided_semisimplicity: SemisimplicityReport,
    pub verdicts: VerdictMap,
}

fn family(sets: impl IntoIterator<Item = ElemSet>) -> Vec<ElemSet> {
    let mut v: Vec<ElemSet> = sets.into_iter().collect();
    v.sort_unstable();
    v
}

fn set_diff(a: &ElemSet, b: &ElemSet) -> Vec<u16> {
    a.minus(b).union(&b.minus(a)).to_vec()
}

/// Shifts a set by an ideal elementwise: {s + a}.
fn translate(ring: &FiniteRing, set: &ElemSet, by: &ElemSet) -> ElemSet {
    let mut out = ElemSet::empty();
    for s in set.iter() {
        for a in by.iter() {
            out.insert(ring.add(s, a));
        }
    }
    out
}

/// The identity suite for one side; tag names get `prefix` prepended so the
/// left and two-sided runs coexist in one verdict map.
fn side_suite(
    profile: &StrongProfile,
    cap: usize,
    cache: &LatticeCache,
    prefix: &str,
    out: &mut VerdictMap,
) -> Result<()> {
    let ring = profile.ring();
    let side = profile.side();
    let mut record = |name: &str, v: Verdict| {
        out.insert(format!("{prefix}{name}"), v);
    };

    let t = profile.strong_set.members();
    let cls = profile.strongly_localizable;
    let ell = profile.localization_radical.members();
    let ell_s = profile.strong_radical.members();
    let sigma = profile.sigma();
    let carrier = profile.strong_quotient.carrier();

    // containment chain and radical inclusion
    record(
        "chain_containment",
        Verdict::from(
            t.is_subset(&cls)
                && cls.is_subset(&profile.weak_regular)
                && profile.weak_regular.is_subset(&profile.weak_left_regular),
            || format!("T={t} CLs={cls} Cw={} Cwl={}", profile.weak_regular, profile.weak_left_regular),
        ),
    );
    record(
        "radical_inclusion",
        Verdict::from(ell_s.is_subset(&ell), || format!("ass(T)={ell_s} not inside {ell}")),
    );

    // units ⊆ largest regular Ore set ⊆ T
    let s0 = profile.catalog.largest_with_ass(&ElemSet::singleton(ring.zero()))?;
    record(
        "units_chain",
        Verdict::from(
            ring.units().is_subset(&s0.members()) && s0.members().is_subset(&t),
            || format!("units={} S0={} T={t}", ring.units(), s0.members()),
        ),
    );

    // saturation: T + ass(T) = T, CLs + rad ⊆ CLs, S + ass(S) = S for maximal S
    record(
        "t_saturated_by_strong_radical",
        Verdict::from(translate(ring, &t, &ell_s) == t, || {
            format!("T + ass(T) = {}", translate(ring, &t, &ell_s))
        }),
    );
    record(
        "cls_saturated_by_radical",
        Verdict::from(translate(ring, &cls, &ell).is_subset(&cls), || {
            format!("CLs + rad = {}", translate(ring, &cls, &ell))
        }),
    );
    {
        let mut pass = true;
        let mut detail = String::new();
        for l in &profile.maximal_localizations {
            let s = l.denominator_set().members();
            let shifted = translate(ring, &s, &l.denominator_set().ass_members()?);
            if shifted != s {
                pass = false;
                detail = format!("S={s} saturates to {shifted}");
                break;
            }
        }
        record("maximal_sets_saturated", Verdict::from(pass, || detail));
    }

    // S0 sits inside every maximal denominator set
    record(
        "regular_ore_in_every_maximal",
        Verdict::from(
            profile
                .maximal_localizations
                .iter()
                .all(|l| s0.members().is_subset(&l.denominator_set().members())),
            || "S0 escapes a maximal denominator set".into(),
        ),
    );

    // CLs is exactly the elements inverted by every maximal localization
    let cls_units: ElemSet = ring
        .elements()
        .filter(|&c| {
            profile.maximal_localizations.iter().all(|l| {
                l.carrier().units().contains(l.canonical_map().apply(c))
            })
        })
        .collect();
    record(
        "cls_unit_characterization",
        Verdict::from(cls_units == cls, || format!("difference {:?}", set_diff(&cls_units, &cls))),
    );

    // the four characterizations of T
    let via_ass = profile.catalog.largest_with_ass(&ell_s)?.members();
    let via_units = sigma.preimage_of_set(&carrier.units());
    let mut via_weak = ElemSet::empty();
    for s in &profile.catalog.sets {
        if s.members().is_subset(&profile.weak_left_regular) {
            via_weak = via_weak.union(&s.members());
        }
    }
    record(
        "t_quadruple_agreement",
        Verdict::from(via_ass == t && via_units == t && via_weak == t, || {
            format!("ass-class {via_ass}, unit-preimage {via_units}, weak {via_weak}, union {t}")
        }),
    );

    // every strong denominator set lies in T, and T is one of them
    let strong_family: Vec<&MultSet> = profile
        .catalog
        .sets
        .iter()
        .filter(|s| s.members().is_subset(&cls))
        .collect();
    record(
        "strong_den_sets_below_t",
        Verdict::from(
            strong_family.iter().all(|s| s.members().is_subset(&t))
                && strong_family.iter().any(|s| s.members() == t),
            || "a strong denominator set escapes T".into(),
        ),
    );

    // profile of the quotient modulo the strong radical
    let q_ring = carrier;
    let q_profile = strong_profile(q_ring, side, cap, cache)?;
    let q_cat = &q_profile.catalog;

    record(
        "strong_radical_vanishes_in_quotient",
        Verdict::from(q_profile.strong_radical.is_zero(), || {
            format!("residual radical {}", q_profile.strong_radical.members())
        }),
    );
    record(
        "t_of_quotient_is_units",
        Verdict::from(q_profile.strong_set.members() == q_ring.units(), || {
            format!("T of quotient = {}", q_profile.strong_set.members())
        }),
    );
    record(
        "strong_quotient_idempotent",
        Verdict::from(
            q_profile.strong_quotient.carrier().same_tables(q_ring),
            || "second strong quotient moved the carrier".into(),
        ),
    );
    record(
        "t_quotient_transport",
        Verdict::from(
            sigma.image_of_set(&t) == q_profile.strong_set.members()
                && sigma.preimage_of_set(&q_profile.strong_set.members()) == t,
            || {
                format!(
                    "π(T) = {}, T of quotient = {}",
                    sigma.image_of_set(&t),
                    q_profile.strong_set.members()
                )
            },
        ),
    );
    record(
        "cls_quotient_transport",
        Verdict::from(
            sigma.image_of_set(&cls) == q_profile.strongly_localizable
                && sigma.preimage_of_set(&q_profile.strongly_localizable) == cls,
            || {
                format!(
                    "π(CLs) = {}, CLs of quotient = {}",
                    sigma.image_of_set(&cls),
                    q_profile.strongly_localizable
                )
            },
        ),
    );
    let q_s0 = q_cat.largest_with_ass(&ElemSet::singleton(q_ring.zero()))?;
    record(
        "t_of_quotient_is_regular_ore",
        Verdict::from(q_profile.strong_set.members() == q_s0.members(), || {
            format!("T = {}, S0 = {}", q_profile.strong_set.members(), q_s0.members())
        }),
    );
    record(
        "t_preimage_of_regular_ore",
        Verdict::from(sigma.preimage_of_set(&q_s0.members()) == t, || {
            format!("preimage {}", sigma.preimage_of_set(&q_s0.members()))
        }),
    );
    let q_largest = largest_quotient(q_cat, cap, cache)?;
    record(
        "strong_quotient_of_quotient_is_largest",
        Verdict::from(
            q_profile.strong_quotient.carrier().same_tables(q_largest.carrier()),
            || "strong and largest quotient of the residue ring differ".into(),
        ),
    );

    // bijection between the maximal denominator sets of R and of R/ass(T)
    let image_family = family(
        profile
            .maximal_localizations
            .iter()
            .map(|l| sigma.image_of_set(&l.denominator_set().members())),
    );
    let q_family = family(q_profile.maximal_members());
    let preimages_match = profile.maximal_localizations.iter().all(|l| {
        let s = l.denominator_set().members();
        sigma.preimage_of_set(&sigma.image_of_set(&s)) == s
    });
    record(
        "max_den_bijection",
        Verdict::from(image_family == q_family && preimages_match, || {
            format!("images {image_family:?}, quotient family {q_family:?}")
        }),
    );

    // per-localization identities and the kernel sequence
    let mut per_local_units = true;
    let mut per_local_preimage = true;
    let mut kernels_match = true;
    let mut kernel_meet = carrier.element_set();
    let mut local_carriers = Vec::new();
    let mut comparison_maps = Vec::new();
    for l in &profile.maximal_localizations {
        let s = l.denominator_set();
        let a = s.ass_members()?;
        // π(S) equals the regular Ore set (= units) of R/ass(S)
        let lcat = denominator_catalog(l.carrier(), side, cap, cache)?;
        let l_s0 = lcat.largest_with_ass(&ElemSet::singleton(l.carrier().zero()))?;
        let image = l.canonical_map().image_of_set(&s.members());
        if image != l_s0.members() || image != l.carrier().units() {
            per_local_units = false;
        }
        // S is recovered as the preimage of the carrier units
        if l.canonical_map().preimage_of_set(&l.carrier().units()) != s.members() {
            per_local_preimage = false;
        }
        // kernel of the comparison map out of the strong quotient
        let comparison = induced_map(&profile.strong_quotient, l)?;
        let expected_kernel = sigma.image_of_set(&a);
        if comparison.kernel() != expected_kernel {
            kernels_match = false;
        }
        kernel_meet = kernel_meet.intersect(&comparison.kernel());
        local_carriers.push(l.carrier().clone());
        comparison_maps.push(comparison);
    }
    record(
        "maximal_localization_units",
        Verdict::from(per_local_units, || "π(S) differs from the carrier units".into()),
    );
    record(
        "maximal_localization_preimage",
        Verdict::from(per_local_preimage, || "S is not the unit preimage".into()),
    );
    record(
        "kernel_into_each_maximal",
        Verdict::from(kernels_match, || "a comparison kernel differs from the pushed ass".into()),
    );
    record(
        "kernel_into_product",
        Verdict::from(kernel_meet == sigma.image_of_set(&ell), || {
            format!("joint kernel {kernel_meet}, pushed radical {}", sigma.image_of_set(&ell))
        }),
    );

    // finite rings have an Artinian classical quotient, so T is the whole
    // intersection and the strong quotient splits into the maximal
    // localizations via an explicit product map
    record(
        "t_is_whole_intersection",
        Verdict::from(t == cls, || format!("T = {t} but the intersection is {cls}")),
    );
    {
        let refs: Vec<&FiniteRing> = local_carriers.iter().map(|c| c.as_ref()).collect();
        let verdict = if refs.len() == 1 {
            Verdict::from(comparison_maps[0].is_bijective(), || {
                "single comparison map is not an isomorphism".into()
            })
        } else {
            let product = direct_product(&refs)?;
            let image: Vec<u16> = carrier
                .elements()
                .map(|q| {
                    let comps: Vec<u16> =
                        comparison_maps.iter().map(|m| m.apply(q)).collect();
                    product.encode(&comps)
                })
                .collect();
            match RingMap::verified(carrier.clone(), product.ring.clone(), image) {
                Ok(m) => Verdict::from(m.is_bijective(), || {
                    "product comparison map is not bijective".into()
                }),
                Err(e) => Verdict { pass: false, detail: format!("not a ring map: {e}") },
            }
        };
        record("strong_quotient_product_decomposition", verdict);
    }

    // sub-quotients attached to ass ideals below the strong radical map
    // into T
    {
        let mut pass = true;
        let mut detail = String::new();
        for a in profile.catalog.ass_family()? {
            if a.is_subset(&ell_s) {
                let s_a = profile.catalog.largest_with_ass(&a)?;
                if !s_a.members().is_subset(&t) {
                    pass = false;
                    detail = format!("class of {a} escapes T: {}", s_a.members());
                    break;
                }
            }
        }
        record("ass_classes_below_radical_in_t", Verdict::from(pass, || detail));
    }

    // comparison with the largest quotient: the three equivalent shapes of
    // triviality, and transport along it
    let ql = largest_quotient(&profile.catalog, cap, cache)?;
    let theta = induced_map(&ql, &profile.strong_quotient)?;
    {
        let eq_sets = s0.members() == t;
        let iso = theta.is_bijective();
        let zero_rad = ell_s.len() == 1;
        record(
            "theta_criterion",
            Verdict::from(eq_sets == iso && iso == zero_rad, || {
                format!("S0=T: {eq_sets}, theta iso: {iso}, zero radical: {zero_rad}")
            }),
        );
    }
    record(
        "largest_quotient_idempotent",
        Verdict::from(ql.carrier().same_tables(ring), || {
            "largest quotient moved a finite ring".into()
        }),
    );
    {
        // transport along the largest quotient: its carrier is the ring
        // itself, so the strong data must be reproduced verbatim, and T is
        // already saturated under unit multiples
        let lq_profile = strong_profile(ql.carrier(), side, cap, cache)?;
        let unit_saturation =
            crate::ore::monoid_closure(ring, &ring.units().union(&t), side)?;
        record(
            "largest_quotient_t_transport",
            Verdict::from(
                lq_profile.strong_set.members() == t
                    && lq_profile.strong_radical.members() == ell_s
                    && unit_saturation.members() == t
                    && lq_profile
                        .strong_quotient
                        .carrier()
                        .same_tables(carrier),
                || "strong data of the largest quotient differ from the ring's".into(),
            ),
        );
    }

    // the classical quotient of a finite ring exists and changes nothing
    record(
        "classical_quotient_exists",
        match classical_left_quotient(ring)? {
            ClassicalQuotient::Exists(loc) => Verdict::from(
                loc.carrier().same_tables(ring),
                || "classical quotient moved a finite ring".into(),
            ),
            ClassicalQuotient::NotOre { r, s } => Verdict {
                pass: false,
                detail: format!("regular elements fail Ore at ({r}, {s})"),
            },
        },
    );

    // regularity coincidence on the ring and on every carrier in sight
    {
        let mut pass = ring.check_regularity_coincidence().is_ok();
        for l in &profile.maximal_localizations {
            pass &= l.carrier().check_regularity_coincidence().is_ok();
        }
        pass &= carrier.check_regularity_coincidence().is_ok();
        record(
            "finite_regularity_coincidence",
            Verdict::from(pass, || "units/regular/one-sided-regular split apart".into()),
        );
    }

    Ok(())
}

/// Computes the full analysis: left, right and two-sided profiles, the
/// identity suite on the left and two-sided structures, the agreement of
/// the right-side data with the opposite ring, and both semisimplicity
/// criteria.
pub fn analyze(ring: &Arc<FiniteRing>, cap: usize, cache: &LatticeCache) -> Result<Analysis> {
    let left = strong_profile(ring, Side::Left, cap, cache)?;
    let right = strong_profile(ring, Side::Right, cap, cache)?;
    let two_sided = strong_profile(ring, Side::TwoSided, cap, cache)?;

    let mut verdicts = VerdictMap::new();
    side_suite(&left, cap, cache, "", &mut verdicts)?;
    side_suite(&two_sided, cap, cache, "ts_", &mut verdicts)?;

    // right-side data must agree with the left-side data of the opposite ring
    {
        let op = opposite_ring(ring).shared();
        let op_left = strong_profile(&op, Side::Left, cap, cache)?;
        let agreement = right.catalog.member_families() == op_left.catalog.member_families()
            && family(right.maximal_members()) == family(op_left.maximal_members())
            && right.strong_set.members() == op_left.strong_set.members()
            && right.strong_radical.members() == op_left.strong_radical.members()
            && right.strongly_localizable == op_left.strongly_localizable;
        verdicts.insert(
            "right_via_opposite_agreement".into(),
            Verdict::from(agreement, || {
                format!(
                    "right T = {}, opposite-left T = {}",
                    right.strong_set.members(),
                    op_left.strong_set.members()
                )
            }),
        );
    }

    // the two-sided strong set is compared against the intersection of the
    // one-sided ones; inclusions are reported, neither is asserted
    {
        let meet = left.strong_set.members().intersect(&right.strong_set.members());
        let ts = two_sided.strong_set.members();
        let detail = if ts == meet {
            format!("T_two_sided = T_left ∩ T_right = {ts}")
        } else if ts.is_subset(&meet) {
            format!("strict inclusion: T_two_sided = {ts} ⊂ {meet} = T_left ∩ T_right")
        } else if meet.is_subset(&ts) {
            format!("strict inclusion: T_left ∩ T_right = {meet} ⊂ {ts} = T_two_sided")
        } else {
            format!("incomparable: T_two_sided = {ts}, T_left ∩ T_right = {meet}")
        };
        verdicts.insert(
            "two_sided_vs_one_sided_observation".into(),
            Verdict { pass: true, detail },
        );
    }

    let semisimplicity = semisimplicity_criterion(&left, cap, cache)?;
    verdicts.insert(
        "semisimple_equivalences_strong".into(),
        Verdict::from(semisimplicity.strong_coherent, || {
            format!("statements {:?}", semisimplicity.strong)
        }),
    );
    verdicts.insert(
        "semisimple_equivalences_classical".into(),
        Verdict::from(semisimplicity.classical_coherent, || {
            format!("statements {:?}", semisimplicity.classical)
        }),
    );
    verdicts.insert(
        "semisimple_consequences".into(),
        Verdict::from(
            semisimplicity.strong_consequences.unwrap_or(true)
                && semisimplicity.classical_consequences.unwrap_or(true),
            || "side conditions of a satisfied criterion failed".into(),
        ),
    );

    let two_sided_semisimplicity = semisimplicity_criterion(&two_sided, cap, cache)?;
    verdicts.insert(
        "ts_semisimple_equivalences".into(),
        Verdict::from(
            two_sided_semisimplicity.strong_coherent
                && two_sided_semisimplicity.classical_coherent,
            || {
                format!(
                    "statements {:?} / {:?}",
                    two_sided_semisimplicity.strong, two_sided_semisimplicity.classical
                )
            },
        ),
    );

    Ok(Analysis {
        ring: ring.clone(),
        left,
        right,
        two_sided,
        semisimplicity,
        two_sided_semisimplicity,
        verdicts,
    })
}

/// The identity suite alone; a failed verdict is visible in the map, hard
/// errors (capacity, inconsistent tables) abort.
pub fn verify_theorem_suite(
    ring: &Arc<FiniteRing>,
    cap: usize,
    cache: &LatticeCache,
) -> Result<VerdictMap> {
    analyze(ring, cap, cache).map(|a| a.verdicts)
}

/// Checks that the strong data of a direct product factor through the
/// components: the maximal denominator sets are the cylinder lifts, their
/// ass ideals and localizations come from the factors, and the strongly
/// localizable set, T and the strong quotient are componentwise.
pub fn verify_product_laws(
    product: &ProductRing,
    side: Side,
    cap: usize,
    cache: &LatticeCache,
) -> Result<VerdictMap> {
    let mut out = VerdictMap::new();
    let p_profile = strong_profile(&product.ring, side, cap, cache)?;
    let factor_profiles: Vec<StrongProfile> = product
        .factors
        .iter()
        .map(|f| strong_profile(f, side, cap, cache))
        .collect::<Result<_>>()?;

    // max.Den(product) = disjoint union of cylinder lifts
    let mut expected_max = Vec::new();
    for (k, fp) in factor_profiles.iter().enumerate() {
        for s in fp.maximal_members() {
            expected_max.push(product.cylinder(k, &s));
        }
    }
    let expected_max = family(expected_max);
    let got_max = family(p_profile.maximal_members());
    out.insert(
        "product_max_den_coproduct".into(),
        Verdict::from(expected_max == got_max, || {
            format!("expected {expected_max:?}, got {got_max:?}")
        }),
    );

    // ass of a lifted set fills the other components completely
    {
        let mut pass = true;
        let mut detail = String::new();
        'outer: for (k, fp) in factor_profiles.iter().enumerate() {
            for l in &fp.maximal_localizations {
                let lifted = product.cylinder(k, &l.denominator_set().members());
                let lifted_set = MultSet::new_closed(product.ring.clone(), lifted, side)
                    .map_err(|_| Error::internal("cylinder lift is not closed", &[]))?;
                if !lifted_set.is_denominator() {
                    pass = false;
                    detail = format!("lift of a maximal set of factor {k} is not a denominator set");
                    break 'outer;
                }
                let mut comps: Vec<ElemSet> = product
                    .factors
                    .iter()
                    .map(|f| f.element_set())
                    .collect();
                comps[k] = l.denominator_set().ass_members()?;
                let expected_ass = product.product_set(&comps);
                if lifted_set.ass_members()? != expected_ass {
                    pass = false;
                    detail = format!("ass of the lift of factor {k} differs from the cylinder");
                    break 'outer;
                }
                // localization of the product at the lift is the factor's
                // localization, via the projection-induced map
                let p_loc = localize(&product.ring, &lifted_set)?;
                let mut image = vec![u16::MAX; p_loc.carrier().size()];
                for x in p_loc.carrier().elements() {
                    let rep = product
                        .ring
                        .elements()
                        .find(|&r| p_loc.canonical_map().apply(r) == x)
                        .expect("projection is surjective");
                    image[usize::from(x)] =
                        l.canonical_map().apply(product.projections[k].apply(rep));
                }
                match RingMap::verified(p_loc.carrier().clone(), l.carrier().clone(), image) {
                    Ok(m) if m.is_bijective() => {}
                    _ => {
                        pass = false;
                        detail = format!("localization at the lift of factor {k} is not the factor's");
                        break 'outer;
                    }
                }
            }
        }
        out.insert("product_localizations_factor".into(), Verdict::from(pass, || detail));
    }

    // componentwise strong data
    let cls_parts: Vec<ElemSet> = factor_profiles.iter().map(|f| f.strongly_localizable).collect();
    out.insert(
        "product_cls_componentwise".into(),
        Verdict::from(
            p_profile.strongly_localizable == product.product_set(&cls_parts),
            || format!("CLs = {}", p_profile.strongly_localizable),
        ),
    );
    let t_parts: Vec<ElemSet> = factor_profiles.iter().map(|f| f.strong_set.members()).collect();
    out.insert(
        "product_t_componentwise".into(),
        Verdict::from(
            p_profile.strong_set.members() == product.product_set(&t_parts),
            || format!("T = {}", p_profile.strong_set.members()),
        ),
    );
    let rad_parts: Vec<ElemSet> =
        factor_profiles.iter().map(|f| f.strong_radical.members()).collect();
    out.insert(
        "product_radical_componentwise".into(),
        Verdict::from(
            p_profile.strong_radical.members() == product.product_set(&rad_parts),
            || format!("ass(T) = {}", p_profile.strong_radical.members()),
        ),
    );

    // strong quotient of the product ≅ product of the strong quotients
    {
        let carriers: Vec<&FiniteRing> = factor_profiles
            .iter()
            .map(|f| f.strong_quotient.carrier().as_ref())
            .collect();
        let q_product = direct_product(&carriers)?;
        let carrier = p_profile.strong_quotient.carrier();
        let mut image = vec![u16::MAX; carrier.size()];
        for x in carrier.elements() {
            let rep = product
                .ring
                .elements()
                .find(|&r| p_profile.sigma().apply(r) == x)
                .expect("sigma is surjective");
            let comps: Vec<u16> = factor_profiles
                .iter()
                .enumerate()
                .map(|(k, f)| f.sigma().apply(product.projections[k].apply(rep)))
                .collect();
            image[usize::from(x)] = q_product.encode(&comps);
        }
        let verdict = match RingMap::verified(carrier.clone(), q_product.ring.clone(), image) {
            Ok(m) => Verdict::from(m.is_bijective(), || {
                "componentwise comparison is not bijective".into()
            }),
            Err(e) => Verdict { pass: false, detail: format!("not a ring map: {e}") },
        };
        out.insert("product_strong_quotient_componentwise".into(), verdict);
    }

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_cyclic_ring, make_gf, make_matrix_ring, MatrixShape};
    use crate::DEFAULT_ENUM_CAP;

    fn set(items: &[u16]) -> ElemSet {
        items.iter().copied().collect()
    }

    #[test]
    fn z6_left_profile() {
        let z6 = make_cyclic_ring(6).unwrap().shared();
        let cache = LatticeCache::new();
        let p = strong_profile(&z6, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        assert_eq!(p.strongly_localizable, set(&[1, 5]));
        assert_eq!(p.strong_set.members(), set(&[1, 5]));
        assert_eq!(p.strong_radical.members(), set(&[0]));
        assert_eq!(p.localization_radical.members(), set(&[0]));
        assert_eq!(p.strong_quotient.carrier().size(), 6);
        assert_eq!(p.weak_regular, set(&[1, 5]));
        assert_eq!(p.weak_left_regular, set(&[1, 5]));
    }

    #[test]
    fn z4_left_profile() {
        let z4 = make_cyclic_ring(4).unwrap().shared();
        let cache = LatticeCache::new();
        let p = strong_profile(&z4, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        assert_eq!(p.strong_set.members(), set(&[1, 3]));
        assert_eq!(p.strong_radical.members(), set(&[0]));
        assert_eq!(p.strong_quotient.carrier().size(), 4);
    }

    #[test]
    fn lower_triangular_left_profile() {
        let f2 = make_gf(2).unwrap();
        let l2 = make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap();
        let cache = LatticeCache::new();
        let p = strong_profile(&l2.ring, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();

        let corner_units: ElemSet = l2
            .ring
            .elements()
            .filter(|&x| l2.entry(x, 0, 0) != f2.zero())
            .collect();
        assert_eq!(p.maximal_localizations.len(), 1);
        assert_eq!(p.strong_set.members(), corner_units);
        assert_eq!(p.strong_set.members().len(), 4);
        assert_eq!(p.strongly_localizable, corner_units);
        assert_eq!(p.strong_radical.members().len(), 4);
        assert_eq!(p.strong_quotient.carrier().size(), 2);
    }

    #[test]
    fn upper_triangular_mirror() {
        let f2 = make_gf(2).unwrap();
        let u2 = make_matrix_ring(&f2, 2, MatrixShape::Upper).unwrap();
        let cache = LatticeCache::new();
        let p = strong_profile(&u2.ring, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        let expected: ElemSet = u2
            .ring
            .elements()
            .filter(|&x| u2.entry(x, 1, 1) != f2.zero())
            .collect();
        assert_eq!(p.strong_set.members(), expected);
    }

    #[test]
    fn two_sided_profile_of_triangular_ring_is_unit_bound() {
        let f2 = make_gf(2).unwrap();
        let l2 = make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap();
        let cache = LatticeCache::new();
        let p = strong_profile(&l2.ring, Side::TwoSided, DEFAULT_ENUM_CAP, &cache).unwrap();
        assert_eq!(p.strong_set.members(), l2.ring.units());
        assert!(p.strong_radical.is_zero());
        assert_eq!(p.strong_quotient.carrier().size(), 8);
    }

    #[test]
    fn product_of_fields_profile() {
        let f2 = make_gf(2).unwrap();
        let prod = direct_product(&[&f2, &f2]).unwrap();
        let cache = LatticeCache::new();
        let p = strong_profile(&prod.ring, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        assert_eq!(p.maximal_localizations.len(), 2);
        assert_eq!(p.strongly_localizable, set(&[prod.encode(&[1, 1])]));
        assert_eq!(p.strong_set.members(), prod.ring.units());
        assert!(p.strong_radical.is_zero());
        assert_eq!(p.strong_quotient.carrier().size(), 4);
    }

    #[test]
    fn suite_passes_on_small_rings() {
        let cache = LatticeCache::new();
        let f2 = make_gf(2).unwrap();
        let rings = vec![
            make_cyclic_ring(4).unwrap().shared(),
            make_cyclic_ring(6).unwrap().shared(),
            make_gf(4).unwrap().shared(),
            make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap().ring,
            direct_product(&[&f2, &f2]).unwrap().ring,
        ];
        for ring in rings {
            let verdicts = verify_theorem_suite(&ring, DEFAULT_ENUM_CAP, &cache).unwrap();
            let failures: Vec<_> = verdicts.iter().filter(|(_, v)| !v.pass).collect();
            assert!(failures.is_empty(), "{}: {failures:?}", ring.label());
        }
    }

    #[test]
    fn semisimplicity_instances() {
        let cache = LatticeCache::new();
        let z6 = make_cyclic_ring(6).unwrap().shared();
        let p = strong_profile(&z6, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        let r = semisimplicity_criterion(&p, DEFAULT_ENUM_CAP, &cache).unwrap();
        assert!(r.strong.iter().all(|&b| b) && r.classical.iter().all(|&b| b));
        assert_eq!(r.strong_consequences, Some(true));
        assert_eq!(r.classical_consequences, Some(true));

        let z4 = make_cyclic_ring(4).unwrap().shared();
        let p = strong_profile(&z4, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        let r = semisimplicity_criterion(&p, DEFAULT_ENUM_CAP, &cache).unwrap();
        assert!(r.strong.iter().all(|&b| !b) && r.classical.iter().all(|&b| !b));

        let f2 = make_gf(2).unwrap();
        let l2 = make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap();
        let p = strong_profile(&l2.ring, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        let r = semisimplicity_criterion(&p, DEFAULT_ENUM_CAP, &cache).unwrap();
        assert!(r.strong.iter().all(|&b| b), "residue field makes the strong criterion true");
        assert!(r.classical.iter().all(|&b| !b), "nonzero strong radical blocks the classical one");
    }

    #[test]
    fn product_laws_on_small_products() {
        let cache = LatticeCache::new();
        let f2 = make_gf(2).unwrap();
        let prod = direct_product(&[&f2, &f2]).unwrap();
        let verdicts = verify_product_laws(&prod, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        assert!(all_pass(&verdicts), "{verdicts:?}");

        let z2 = make_cyclic_ring(2).unwrap();
        let z3 = make_cyclic_ring(3).unwrap();
        let prod = direct_product(&[&z2, &z3]).unwrap();
        let verdicts = verify_product_laws(&prod, Side::Left, DEFAULT_ENUM_CAP, &cache).unwrap();
        assert!(all_pass(&verdicts), "{verdicts:?}");
    }
}
