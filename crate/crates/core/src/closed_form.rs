//! Closed-form predictions for the strong quotient data, cross-validated
//! against the brute-force profile.
//!
//! Three prediction paths, each matching a structural hypothesis that every
//! finite ring in the corpus satisfies or visibly fails:
//!
//! * triangular matrix rings over a finite field: the strong denominator
//!   set is cut out by one corner entry and the strong quotient is the
//!   base field,
//! * arbitrary finite rings (always Artinian): lift the component
//!   identities of R/rad to orthogonal idempotents, filter the admissible
//!   sums `e` with `eR(1-e) = 0`, and read the maximal denominator sets,
//!   the radical `(1-e)R` and the product decomposition off the minimal
//!   admissible idempotents,
//! * semiprime rings: the strong denominator set is the set of regular
//!   elements and the strong quotient is the classical one.
//!
//! [`compare_closed_form`] renders the agreement (or any discrepancy) as an
//! explicit diff; nothing is reconciled silently.

use std::sync::Arc;

use crate::construct::{
    direct_product, make_gf, make_matrix_ring_capped, quotient_ring, MatrixRing, MatrixShape,
    QuotientRing,
};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::localize::{classical_left_quotient, ClassicalQuotient};
use crate::map::RingMap;
use crate::ore::{ass_left, is_left_denominator, monoid_closure};
use crate::ring::{FiniteRing, Side};
use crate::strong::StrongProfile;

/// Closed-form strong quotient data of a triangular matrix ring over 𝔽_q.
/// Cardinalities are always predicted; the concrete ring and element sets
/// are materialized only within the construction cap.
pub struct TriangularPrediction {
    pub q: usize,
    pub n: usize,
    pub shape: MatrixShape,
    pub ring_size: usize,
    pub t_count: usize,
    pub radical_count: usize,
    pub quotient_size: usize,
    pub max_den_count: usize,
    pub concrete: Option<TriangularConcrete>,
}

pub struct TriangularConcrete {
    pub matrix: MatrixRing,
    pub t_set: ElemSet,
    pub strong_radical: ElemSet,
    pub corner: (usize, usize),
}

/// Predicts the strong quotient data of the n×n lower/upper triangular
/// matrices over 𝔽_q: the elements with nonzero entry in the leading
/// (lower) resp. trailing (upper) corner form the unique maximal and the
/// largest strong denominator set, the complementary corner condition is
/// the strong radical, and the strong quotient is 𝔽_q itself.
pub fn triangular_strong_quotient(
    q: usize,
    n: usize,
    shape: MatrixShape,
    cap: usize,
) -> Result<TriangularPrediction> {
    if shape == MatrixShape::Full {
        return Err(Error::InvalidArgument(
            "corner predictions only apply to triangular shapes".into(),
        ));
    }
    let base = make_gf(q)?;
    let entries = n * (n + 1) / 2;
    let ring_size = q.checked_pow(entries as u32).ok_or(Error::RingTooLarge(usize::MAX))?;
    let t_count = (q - 1) * ring_size / q;
    let radical_count = ring_size / q;

    let concrete = match make_matrix_ring_capped(&base, n, shape, cap) {
        Ok(matrix) => {
            let corner = match shape {
                MatrixShape::Lower => (0, 0),
                MatrixShape::Upper => (n - 1, n - 1),
                MatrixShape::Full => unreachable!(),
            };
            let t_set: ElemSet = matrix
                .ring
                .elements()
                .filter(|&x| matrix.entry(x, corner.0, corner.1) != base.zero())
                .collect();
            let strong_radical: ElemSet = matrix
                .ring
                .elements()
                .filter(|&x| matrix.entry(x, corner.0, corner.1) == base.zero())
                .collect();
            Some(TriangularConcrete { matrix, t_set, strong_radical, corner })
        }
        Err(Error::Capacity { .. }) | Err(Error::RingTooLarge(_)) => None,
        Err(e) => return Err(e),
    };

    Ok(TriangularPrediction {
        q,
        n,
        shape,
        ring_size,
        t_count,
        radical_count,
        quotient_size: q,
        max_den_count: 1,
        concrete,
    })
}

/// Orthogonal idempotent lifts of the component identities of R/rad.
pub struct IdempotentLifting {
    pub quotient: QuotientRing,
    /// Minimal nonzero central idempotents of R/rad, ascending.
    pub component_identities: Vec<u16>,
    /// Lexicographically least system of orthogonal idempotents of R with
    /// the prescribed images and sum 1.
    pub lifts: Vec<u16>,
    /// The next valid system in the same order, when one exists; used to
    /// check that the predictions do not depend on the choice.
    pub alternative: Option<Vec<u16>>,
}

impl IdempotentLifting {
    pub fn component_count(&self) -> usize {
        self.component_identities.len()
    }
}

fn lifting_search(
    ring: &FiniteRing,
    candidates: &[Vec<u16>],
    chosen: &mut Vec<u16>,
    found: &mut Vec<Vec<u16>>,
    limit: usize,
) {
    if found.len() >= limit {
        return;
    }
    let depth = chosen.len();
    if depth == candidates.len() {
        if ring.sum(chosen.iter().copied()) == ring.one() {
            found.push(chosen.clone());
        }
        return;
    }
    for &e in &candidates[depth] {
        if chosen
            .iter()
            .all(|&f| ring.mul(e, f) == ring.zero() && ring.mul(f, e) == ring.zero())
        {
            chosen.push(e);
            lifting_search(ring, candidates, chosen, found, limit);
            chosen.pop();
        }
    }
}

/// Finds orthogonal idempotents of R mapping onto the component identities
/// of R/rad and summing to 1, by exhaustive search over the idempotents.
pub fn lift_idempotents(ring: &Arc<FiniteRing>) -> Result<IdempotentLifting> {
    let rad = Ideal::verified(ring.clone(), ring.jacobson_radical(), Side::TwoSided)
        .map_err(|_| Error::internal("radical is not a two-sided ideal", &[]))?;
    let quotient = quotient_ring(ring, &rad)?;
    let qr = &quotient.ring;
    if !qr.is_semisimple() {
        return Err(Error::internal("ring modulo its radical keeps a radical", &[]));
    }

    let centrals = qr.central_idempotents();
    let nonzero: Vec<u16> = centrals.iter().filter(|&e| e != qr.zero()).collect();
    let mut identities: Vec<u16> = nonzero
        .iter()
        .copied()
        .filter(|&e| {
            !nonzero
                .iter()
                .any(|&g| g != e && qr.mul(g, e) == g)
        })
        .collect();
    identities.sort_unstable();
    if qr.sum(identities.iter().copied()) != qr.one() {
        return Err(Error::internal(
            "minimal central idempotents of the semisimple quotient do not sum to 1",
            &identities,
        ));
    }
    for (i, &a) in identities.iter().enumerate() {
        for &b in &identities[i + 1..] {
            if qr.mul(a, b) != qr.zero() {
                return Err(Error::internal(
                    "minimal central idempotents are not orthogonal",
                    &[a, b],
                ));
            }
        }
    }

    let idempotents = ring.idempotents();
    let candidates: Vec<Vec<u16>> = identities
        .iter()
        .map(|&target| {
            idempotents
                .iter()
                .filter(|&e| quotient.projection.apply(e) == target)
                .collect()
        })
        .collect();

    let mut found = Vec::new();
    lifting_search(ring, &candidates, &mut Vec::new(), &mut found, 2);
    let mut it = found.into_iter();
    let lifts = it.next().ok_or_else(|| {
        Error::internal(
            format!("no orthogonal idempotent lifting exists in {}", ring.label()),
            &identities,
        )
    })?;

    Ok(IdempotentLifting {
        quotient,
        component_identities: identities,
        lifts,
        alternative: it.next(),
    })
}

/// The idempotent analysis of a finite ring: admissible idempotent sums,
/// their minimal elements, and the predicted localization data.
pub struct ArtinianAnalysis {
    pub ring: Arc<FiniteRing>,
    pub radical: Ideal,
    pub lifting: IdempotentLifting,
    /// Index subsets I (bitmask over components) with e_I R (1-e_I) = 0.
    pub admissible: Vec<u32>,
    pub minimal_admissible: Vec<u32>,
    /// Sum of the minimal admissible idempotents.
    pub e_star: u16,
    /// (1-e_star)R; predicted to be both localization radicals.
    pub predicted_radical: ElemSet,
    /// Predicted maximal denominator sets: unit preimages modulo (1-e')R.
    pub predicted_max_den: Vec<ElemSet>,
    pub component_quotients: Vec<QuotientRing>,
    /// ∏ R/(1-e')R over the minimal admissible idempotents.
    pub predicted_quotient: Arc<FiniteRing>,
    /// Verified isomorphism R/(1-e_star)R → predicted quotient.
    pub quotient_iso: RingMap,
}

impl ArtinianAnalysis {
    pub fn component_count(&self) -> usize {
        self.lifting.component_count()
    }

    /// (|max.Den|, s) as predicted by the idempotent analysis.
    pub fn max_den_count_vs_components(&self) -> (usize, usize) {
        (self.predicted_max_den.len(), self.component_count())
    }

    /// Intersection of the predicted maximal denominator sets.
    pub fn predicted_t_set(&self) -> ElemSet {
        let mut t = self.ring.element_set();
        for s in &self.predicted_max_den {
            t = t.intersect(s);
        }
        t
    }
}

struct Predictions {
    admissible: Vec<u32>,
    minimal: Vec<u32>,
    e_star: u16,
    radical_set: ElemSet,
    max_den: Vec<ElemSet>,
    quotients: Vec<QuotientRing>,
}

fn right_multiples(ring: &FiniteRing, e: u16) -> ElemSet {
    ring.elements().map(|r| ring.mul(e, r)).collect()
}

fn predictions_from(ring: &Arc<FiniteRing>, lifts: &[u16]) -> Result<Predictions> {
    let s = lifts.len();
    assert!(s <= 16, "component count bounded by the ring size cap");
    let e_of = |mask: u32| ring.sum((0..s).filter(|&i| mask & (1 << i) != 0).map(|i| lifts[i]));

    let mut admissible = Vec::new();
    for mask in 1u32..(1 << s) {
        let e = e_of(mask);
        let co = ring.sub(ring.one(), e);
        let ok = ring
            .elements()
            .all(|r| ring.mul(ring.mul(e, r), co) == ring.zero());
        if ok {
            admissible.push(mask);
        }
    }
    if !admissible.contains(&((1 << s) - 1)) {
        return Err(Error::internal("the full idempotent sum 1 is always admissible", &[]));
    }
    let minimal: Vec<u32> = admissible
        .iter()
        .copied()
        .filter(|&m| !admissible.iter().any(|&j| j != m && j & m == j))
        .collect();

    let union_mask = minimal.iter().fold(0u32, |acc, m| acc | m);
    let e_star = e_of(union_mask);
    let elementwise_sum = ring.sum(minimal.iter().map(|&m| e_of(m)));
    if e_star != elementwise_sum {
        return Err(Error::internal(
            "minimal admissible idempotents overlap: union and sum disagree",
            &[e_star, elementwise_sum],
        ));
    }
    if !admissible.contains(&union_mask) {
        return Err(Error::internal(
            "union of minimal admissible index sets is not admissible",
            &[e_star],
        ));
    }

    let radical_set = right_multiples(ring, ring.sub(ring.one(), e_star));
    let radical_ideal = Ideal::verified(ring.clone(), radical_set, Side::TwoSided)
        .map_err(|_| Error::internal("(1-e)R is not two-sided", &radical_set.to_vec()))?;

    // {1, e} is a denominator set with ass = (1-e)R
    let s_e = monoid_closure(ring, &ElemSet::singleton(e_star), Side::Left)?;
    if !is_left_denominator(ring, &s_e.members())
        || ass_left(ring, &s_e.members()) != radical_ideal.members()
    {
        return Err(Error::internal(
            "{1, e} is not a denominator set with ass (1-e)R",
            &[e_star],
        ));
    }

    let mut max_den = Vec::new();
    let mut quotients = Vec::new();
    for &m in &minimal {
        let e = e_of(m);
        let ideal_set = right_multiples(ring, ring.sub(ring.one(), e));
        let ideal = Ideal::verified(ring.clone(), ideal_set, Side::TwoSided)
            .map_err(|_| Error::internal("(1-e')R is not two-sided", &[e]))?;
        let q = quotient_ring(ring, &ideal)?;
        max_den.push(q.projection.preimage_of_set(&q.ring.units()));
        quotients.push(q);
    }
    let order: Vec<usize> = {
        let mut idx: Vec<usize> = (0..max_den.len()).collect();
        idx.sort_by_key(|&i| max_den[i]);
        idx
    };
    let max_den: Vec<ElemSet> = order.iter().map(|&i| max_den[i]).collect();
    let quotients: Vec<QuotientRing> = {
        let mut tagged: Vec<(usize, QuotientRing)> = quotients.into_iter().enumerate().collect();
        tagged.sort_by_key(|(i, _)| order.iter().position(|&o| o == *i).unwrap());
        tagged.into_iter().map(|(_, q)| q).collect()
    };
    let minimal: Vec<u32> = order.iter().map(|&i| minimal[i]).collect();

    Ok(Predictions {
        admissible,
        minimal,
        e_star,
        radical_set,
        max_den,
        quotients,
    })
}

/// Runs the idempotent analysis. The final predictions are recomputed with
/// an alternative idempotent lifting when one exists; the predicted sets
/// must be identical (the chosen lift `e` itself may differ).
pub fn artinian_analysis(ring: &Arc<FiniteRing>) -> Result<ArtinianAnalysis> {
    let lifting = lift_idempotents(ring)?;
    let radical = Ideal::verified(ring.clone(), ring.jacobson_radical(), Side::TwoSided)
        .map_err(|_| Error::internal("radical is not a two-sided ideal", &[]))?;

    let primary = predictions_from(ring, &lifting.lifts)?;
    if let Some(alt) = &lifting.alternative {
        let second = predictions_from(ring, alt)?;
        if second.radical_set != primary.radical_set
            || second.max_den != primary.max_den
            || second.quotients.len() != primary.quotients.len()
        {
            return Err(Error::internal(
                "idempotent analysis depends on the chosen lifting",
                &[primary.e_star, second.e_star],
            ));
        }
    }

    // assemble the product decomposition with a verified isomorphism
    let base_ideal = Ideal::verified(ring.clone(), primary.radical_set, Side::TwoSided)
        .expect("checked in predictions_from");
    let base_quotient = quotient_ring(ring, &base_ideal)?;
    let (predicted_quotient, quotient_iso) = if primary.quotients.len() == 1 {
        let target = primary.quotients[0].ring.clone();
        let image: Vec<u16> = base_quotient
            .ring
            .elements()
            .map(|x| {
                let rep = ring
                    .elements()
                    .find(|&r| base_quotient.projection.apply(r) == x)
                    .expect("projection is surjective");
                primary.quotients[0].projection.apply(rep)
            })
            .collect();
        let iso = RingMap::verified(base_quotient.ring.clone(), target.clone(), image)?;
        (target, iso)
    } else {
        let carriers: Vec<&FiniteRing> =
            primary.quotients.iter().map(|q| q.ring.as_ref()).collect();
        let product = direct_product(&carriers)?;
        let image: Vec<u16> = base_quotient
            .ring
            .elements()
            .map(|x| {
                let rep = ring
                    .elements()
                    .find(|&r| base_quotient.projection.apply(r) == x)
                    .expect("projection is surjective");
                let comps: Vec<u16> = primary
                    .quotients
                    .iter()
                    .map(|q| q.projection.apply(rep))
                    .collect();
                product.encode(&comps)
            })
            .collect();
        let iso = RingMap::verified(base_quotient.ring.clone(), product.ring.clone(), image)?;
        (product.ring, iso)
    };
    if !quotient_iso.is_bijective() {
        return Err(Error::internal(
            "predicted quotient does not decompose into the component quotients",
            &[],
        ));
    }

    Ok(ArtinianAnalysis {
        ring: ring.clone(),
        radical,
        lifting,
        admissible: primary.admissible,
        minimal_admissible: primary.minimal,
        e_star: primary.e_star,
        predicted_radical: primary.radical_set,
        predicted_max_den: primary.max_den,
        component_quotients: primary.quotients,
        predicted_quotient,
        quotient_iso,
    })
}

#[derive(Debug, Clone)]
pub struct DiffEntry {
    pub component: String,
    pub matched: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct DiffReport {
    pub entries: Vec<DiffEntry>,
}

impl DiffReport {
    pub fn is_clean(&self) -> bool {
        self.entries.iter().all(|e| e.matched)
    }

    fn push(&mut self, component: &str, matched: bool, detail: String) {
        self.entries.push(DiffEntry {
            component: component.to_string(),
            matched,
            detail,
        });
    }
}

/// Elementwise comparison of every applicable closed-form prediction
/// against the brute-force left profile. Mismatches are reported verbatim.
pub fn compare_closed_form(
    profile: &StrongProfile,
    triangular: Option<&TriangularPrediction>,
) -> Result<DiffReport> {
    let ring = profile.ring();
    let mut diff = DiffReport::default();
    let family = |mut v: Vec<ElemSet>| {
        v.sort_unstable();
        v
    };

    let analysis = artinian_analysis(ring)?;
    let s = analysis.component_count();

    let predicted = family(analysis.predicted_max_den.clone());
    let actual = family(profile.maximal_members());
    diff.push(
        "max_den_sets",
        predicted == actual,
        format!("predicted {predicted:?}, brute force {actual:?}"),
    );
    diff.push(
        "strong_radical",
        analysis.predicted_radical == profile.strong_radical.members(),
        format!(
            "predicted {}, brute force {}",
            analysis.predicted_radical,
            profile.strong_radical.members()
        ),
    );
    diff.push(
        "localization_radical",
        analysis.predicted_radical == profile.localization_radical.members(),
        format!(
            "predicted {}, brute force {}",
            analysis.predicted_radical,
            profile.localization_radical.members()
        ),
    );
    diff.push(
        "t_set",
        analysis.predicted_t_set() == profile.strong_set.members(),
        format!(
            "predicted {}, brute force {}",
            analysis.predicted_t_set(),
            profile.strong_set.members()
        ),
    );
    {
        let carrier = profile.strong_quotient.carrier();
        let same_base = carrier.same_tables(analysis.quotient_iso.source());
        diff.push(
            "strong_quotient_carrier",
            same_base && analysis.quotient_iso.is_bijective(),
            format!(
                "carrier size {}, predicted product size {}",
                carrier.size(),
                analysis.predicted_quotient.size()
            ),
        );
    }
    diff.push(
        "max_den_count_bound",
        profile.maximal_localizations.len() <= s,
        format!("{} maximal sets, {} components", profile.maximal_localizations.len(), s),
    );

    if ring.is_semiprime() {
        let regular = ring.regular_elements();
        diff.push(
            "semiprime_t_is_regular",
            profile.strong_set.members() == regular,
            format!("T = {}, regular = {regular}", profile.strong_set.members()),
        );
        diff.push(
            "semiprime_radical_zero",
            profile.strong_radical.is_zero(),
            format!("ass(T) = {}", profile.strong_radical.members()),
        );
        let classical_ok = match classical_left_quotient(ring)? {
            ClassicalQuotient::Exists(loc) => profile
                .strong_quotient
                .carrier()
                .same_tables(loc.carrier()),
            ClassicalQuotient::NotOre { .. } => false,
        };
        diff.push(
            "semiprime_quotient_is_classical",
            classical_ok,
            "strong and classical quotients must coincide".into(),
        );
    }

    if let Some(tri) = triangular {
        match &tri.concrete {
            Some(c) if c.matrix.ring.digest() == ring.digest() => {
                diff.push(
                    "triangular_t_set",
                    c.t_set == profile.strong_set.members(),
                    format!("predicted {}, brute force {}", c.t_set, profile.strong_set.members()),
                );
                diff.push(
                    "triangular_radical",
                    c.strong_radical == profile.strong_radical.members(),
                    format!(
                        "predicted {}, brute force {}",
                        c.strong_radical,
                        profile.strong_radical.members()
                    ),
                );
                diff.push(
                    "triangular_max_den_count",
                    profile.maximal_localizations.len() == tri.max_den_count,
                    format!("{} maximal sets", profile.maximal_localizations.len()),
                );
                // the carrier is the base field, via the corner entry of any
                // coset representative
                let carrier = profile.strong_quotient.carrier();
                let base = c.matrix.base().clone().shared();
                let image: Vec<u16> = carrier
                    .elements()
                    .map(|x| {
                        let rep = ring
                            .elements()
                            .find(|&r| profile.sigma().apply(r) == x)
                            .expect("sigma is surjective");
                        c.matrix.entry(rep, c.corner.0, c.corner.1)
                    })
                    .collect();
                let iso_ok = RingMap::verified(carrier.clone(), base, image)
                    .map(|m| m.is_bijective())
                    .unwrap_or(false);
                diff.push(
                    "triangular_quotient_is_base_field",
                    iso_ok && carrier.size() == tri.quotient_size,
                    format!("carrier size {}, field size {}", carrier.size(), tri.quotient_size),
                );
            }
            _ => diff.push(
                "triangular_prediction_applicability",
                false,
                "prediction has no concrete ring matching the profile".into(),
            ),
        }
    }

    Ok(diff)
}
