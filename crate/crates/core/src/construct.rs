//! Ring constructors: cyclic rings, finite fields, matrix rings, direct
//! products, quotients and opposite rings.

use std::sync::Arc;

use crate::elemset::MAX_RING_SIZE;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::map::RingMap;
use crate::ring::{FiniteRing, Side};
use crate::DEFAULT_ENUM_CAP;

/// ℤ/n with the canonical tables (element `i` is the residue `i`).
pub fn make_cyclic_ring(n: usize) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::RingTooSmall(n));
    }
    if n > MAX_RING_SIZE {
        return Err(Error::RingTooLarge(n));
    }
    let add = (0..n)
        .flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u16))
        .collect();
    let mul = (0..n)
        .flat_map(|i| (0..n).map(move |j| ((i * j) % n) as u16))
        .collect();
    FiniteRing::from_tables(format!("z{n}"), n, 0, 1, add, mul)
}

fn prime_power(q: usize) -> Option<(u16, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut m = q;
    let mut k = 0;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p as u16, k))
}

fn poly_mul(a: &[u16], b: &[u16], p: u16) -> Vec<u16> {
    let mut out = vec![0u16; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn poly_deg(a: &[u16]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

/// Remainder of `r` modulo the monic polynomial `d`.
fn poly_rem(mut r: Vec<u16>, d: &[u16], p: u16) -> Vec<u16> {
    let dd = poly_deg(d).expect("monic divisor");
    while let Some(rd) = poly_deg(&r) {
        if rd < dd {
            break;
        }
        let c = r[rd];
        let shift = rd - dd;
        for (i, &dc) in d.iter().enumerate() {
            let sub = (c * dc) % p;
            r[i + shift] = (r[i + shift] + p - sub) % p;
        }
    }
    r.truncate(dd);
    r.resize(dd, 0);
    r
}

fn monic_polys(deg: usize, p: u16) -> impl Iterator<Item = Vec<u16>> {
    let count = (p as usize).pow(deg as u32);
    (0..count).map(move |mut i| {
        let mut coeffs = vec![0u16; deg + 1];
        for c in coeffs.iter_mut().take(deg) {
            *c = (i % p as usize) as u16;
            i /= p as usize;
        }
        coeffs[deg] = 1;
        coeffs
    })
}

fn is_irreducible(f: &[u16], p: u16) -> bool {
    let k = poly_deg(f).unwrap();
    (1..=k / 2).all(|d| {
        monic_polys(d, p).all(|g| poly_deg(&poly_rem(f.to_vec(), &g, p)).is_some())
    })
}

/// The field with `q` elements, `q` a prime power. For `q = p^k` with
/// `k > 1`, elements are polynomials over 𝔽_p modulo the first monic
/// irreducible of degree `k` (index `i` has base-`p` digits as coefficients).
pub fn make_gf(q: usize) -> Result<FiniteRing> {
    let (p, k) =
        prime_power(q).ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
    if q > MAX_RING_SIZE {
        return Err(Error::RingTooLarge(q));
    }
    if k == 1 {
        return Ok(make_cyclic_ring(q)?.with_label(format!("f{q}")));
    }
    let modulus = monic_polys(k as usize, p)
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists");

    let digits = |mut i: usize| -> Vec<u16> {
        let mut d = vec![0u16; k as usize];
        for c in d.iter_mut() {
            *c = (i % p as usize) as u16;
            i /= p as usize;
        }
        d
    };
    let index = |d: &[u16]| -> u16 {
        d.iter()
            .rev()
            .fold(0usize, |acc, &c| acc * p as usize + c as usize) as u16
    };

    let mut add = Vec::with_capacity(q * q);
    let mut mul = Vec::with_capacity(q * q);
    for i in 0..q {
        let di = digits(i);
        for j in 0..q {
            let dj = digits(j);
            let sum: Vec<u16> = di.iter().zip(&dj).map(|(&a, &b)| (a + b) % p).collect();
            add.push(index(&sum));
            let prod = poly_rem(poly_mul(&di, &dj, p), &modulus, p);
            mul.push(index(&prod));
        }
    }
    let field = FiniteRing::from_tables(format!("f{q}"), q, 0, 1, add, mul)?;
    if field.units().len() != q - 1 {
        return Err(Error::internal("field has a non-invertible nonzero element", &[]));
    }
    Ok(field)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixShape {
    Full,
    Lower,
    Upper,
}

impl MatrixShape {
    fn admits(self, i: usize, j: usize) -> bool {
        match self {
            MatrixShape::Full => true,
            MatrixShape::Lower => i >= j,
            MatrixShape::Upper => i <= j,
        }
    }

    fn letter(self) -> char {
        match self {
            MatrixShape::Full => 'm',
            MatrixShape::Lower => 'l',
            MatrixShape::Upper => 'u',
        }
    }
}

/// An n×n (full or triangular) matrix ring over a finite base ring,
/// together with the encoding of matrices as element indices.
pub struct MatrixRing {
    pub ring: Arc<FiniteRing>,
    base: FiniteRing,
    n: usize,
    shape: MatrixShape,
    positions: Vec<(usize, usize)>,
}

impl MatrixRing {
    pub fn base(&self) -> &FiniteRing {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> MatrixShape {
        self.shape
    }

    /// Full n×n entry matrix of the element `x` (zero outside the shape).
    pub fn decode(&self, x: u16) -> Vec<Vec<u16>> {
        let b = self.base.size();
        let mut m = vec![vec![self.base.zero(); self.n]; self.n];
        let mut rest = usize::from(x);
        for &(i, j) in &self.positions {
            m[i][j] = (rest % b) as u16;
            rest /= b;
        }
        m
    }

    /// Index of the matrix `m`; `None` if an entry outside the shape is
    /// nonzero or out of range.
    pub fn encode(&self, m: &[Vec<u16>]) -> Option<u16> {
        let b = self.base.size();
        for i in 0..self.n {
            for j in 0..self.n {
                if usize::from(m[i][j]) >= b {
                    return None;
                }
                if !self.shape.admits(i, j) && m[i][j] != self.base.zero() {
                    return None;
                }
            }
        }
        let mut idx = 0usize;
        for &(i, j) in self.positions.iter().rev() {
            idx = idx * b + usize::from(m[i][j]);
        }
        Some(idx as u16)
    }

    /// The matrix unit E_ij, when the position lies in the shape.
    pub fn unit(&self, i: usize, j: usize) -> Option<u16> {
        if i >= self.n || j >= self.n || !self.shape.admits(i, j) {
            return None;
        }
        let mut m = vec![vec![self.base.zero(); self.n]; self.n];
        m[i][j] = self.base.one();
        self.encode(&m)
    }

    /// Entry (i, j) of element `x`.
    pub fn entry(&self, x: u16, i: usize, j: usize) -> u16 {
        self.decode(x)[i][j]
    }
}

/// Builds the matrix ring with the default construction cap; see
/// [`make_matrix_ring_capped`] to override.
pub fn make_matrix_ring(base: &FiniteRing, n: usize, shape: MatrixShape) -> Result<MatrixRing> {
    make_matrix_ring_capped(base, n, shape, DEFAULT_ENUM_CAP)
}

pub fn make_matrix_ring_capped(
    base: &FiniteRing,
    n: usize,
    shape: MatrixShape,
    cap: usize,
) -> Result<MatrixRing> {
    if n < 1 {
        return Err(Error::InvalidArgument("matrix dimension must be >= 1".into()));
    }
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| shape.admits(i, j))
        .collect();
    let mut size = 1usize;
    for _ in 0..positions.len() {
        size = size.saturating_mul(base.size());
        if size > MAX_RING_SIZE {
            return Err(Error::RingTooLarge(size));
        }
    }
    if size > cap {
        return Err(Error::Capacity {
            what: "matrix ring construction",
            size,
            cap,
        });
    }

    let label = format!("{}{}_{}", shape.letter(), n, base.label());
    let mut proto = MatrixRing {
        // placeholder; replaced after the tables are built
        ring: Arc::new(make_cyclic_ring(2)?),
        base: base.clone(),
        n,
        shape,
        positions,
    };

    let zero_m = vec![vec![base.zero(); n]; n];
    let mut one_m = zero_m.clone();
    for (d, row) in one_m.iter_mut().enumerate() {
        row[d] = base.one();
    }
    let zero = proto.encode(&zero_m).unwrap();
    let one = proto.encode(&one_m).unwrap();

    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    let decoded: Vec<Vec<Vec<u16>>> = (0..size as u16).map(|x| proto.decode(x)).collect();
    for a in &decoded {
        for b in &decoded {
            let mut s = zero_m.clone();
            let mut p = zero_m.clone();
            for i in 0..n {
                for j in 0..n {
                    s[i][j] = base.add(a[i][j], b[i][j]);
                    let mut acc = base.zero();
                    for (k, a_row_k) in a[i].iter().enumerate() {
                        acc = base.add(acc, base.mul(*a_row_k, b[k][j]));
                    }
                    p[i][j] = acc;
                }
            }
            add.push(proto.encode(&s).expect("sum stays in shape"));
            mul.push(proto.encode(&p).expect("triangular shapes are closed under products"));
        }
    }

    proto.ring = Arc::new(FiniteRing::from_tables(label, size, zero, one, add, mul)?);
    Ok(proto)
}

/// A direct product of rings, with component encodings, the (non-unital)
/// component embeddings and the verified projection maps.
pub struct ProductRing {
    pub ring: Arc<FiniteRing>,
    pub factors: Vec<Arc<FiniteRing>>,
    strides: Vec<usize>,
    /// `injections[k][x]` is the product element (0, .., x, .., 0). These are
    /// not unital ring maps (1 ↦ e_k), so they are exposed as plain index
    /// maps rather than as [`RingMap`]s.
    pub injections: Vec<Vec<u16>>,
    pub projections: Vec<RingMap>,
}

impl ProductRing {
    pub fn encode(&self, comps: &[u16]) -> u16 {
        comps
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| usize::from(c) * s)
            .sum::<usize>() as u16
    }

    pub fn decode(&self, x: u16) -> Vec<u16> {
        let mut rest = usize::from(x);
        self.strides
            .iter()
            .zip(&self.factors)
            .map(|(&s, f)| {
                let c = rest / s;
                rest %= s;
                debug_assert!(c < f.size());
                c as u16
            })
            .collect()
    }

    /// Lifts one factor's subset along the injection, filling the other
    /// components with the whole factor: S_k ↦ R_1 × .. × S_k × .. × R_n.
    pub fn cylinder(&self, k: usize, subset: &crate::ElemSet) -> crate::ElemSet {
        self.ring
            .elements()
            .filter(|&x| subset.contains(self.decode(x)[k]))
            .collect()
    }

    /// The product set ∏ S_k of per-factor subsets.
    pub fn product_set(&self, subsets: &[crate::ElemSet]) -> crate::ElemSet {
        self.ring
            .elements()
            .filter(|&x| {
                self.decode(x)
                    .iter()
                    .zip(subsets)
                    .all(|(&c, s)| s.contains(c))
            })
            .collect()
    }
}

pub fn direct_product(factors: &[&FiniteRing]) -> Result<ProductRing> {
    if factors.len() < 2 {
        return Err(Error::ProductArity(factors.len()));
    }
    let mut size = 1usize;
    for f in factors {
        size = size.saturating_mul(f.size());
        if size > MAX_RING_SIZE {
            return Err(Error::RingTooLarge(size));
        }
    }
    let mut strides = vec![1usize; factors.len()];
    for k in (0..factors.len() - 1).rev() {
        strides[k] = strides[k + 1] * factors[k + 1].size();
    }
    let decode = |x: usize| -> Vec<u16> {
        let mut rest = x;
        strides
            .iter()
            .map(|&s| {
                let c = rest / s;
                rest %= s;
                c as u16
            })
            .collect()
    };
    let encode = |comps: &[u16]| -> usize {
        comps
            .iter()
            .zip(&strides)
            .map(|(&c, &s)| usize::from(c) * s)
            .sum()
    };

    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for x in 0..size {
        let dx = decode(x);
        for y in 0..size {
            let dy = decode(y);
            let s: Vec<u16> = dx
                .iter()
                .zip(&dy)
                .zip(factors)
                .map(|((&a, &b), f)| f.add(a, b))
                .collect();
            let p: Vec<u16> = dx
                .iter()
                .zip(&dy)
                .zip(factors)
                .map(|((&a, &b), f)| f.mul(a, b))
                .collect();
            add.push(encode(&s) as u16);
            mul.push(encode(&p) as u16);
        }
    }
    let zeros: Vec<u16> = factors.iter().map(|f| f.zero()).collect();
    let ones: Vec<u16> = factors.iter().map(|f| f.one()).collect();
    let label = factors
        .iter()
        .map(|f| f.label().to_string())
        .collect::<Vec<_>>()
        .join("x");
    let ring = Arc::new(FiniteRing::from_tables(
        label,
        size,
        encode(&zeros) as u16,
        encode(&ones) as u16,
        add,
        mul,
    )?);

    let factor_arcs: Vec<Arc<FiniteRing>> = factors.iter().map(|f| Arc::new((*f).clone())).collect();
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    for (k, f) in factor_arcs.iter().enumerate() {
        let inj: Vec<u16> = f
            .elements()
            .map(|x| {
                let mut comps = zeros.clone();
                comps[k] = x;
                encode(&comps) as u16
            })
            .collect();
        injections.push(inj);
        let proj_image: Vec<u16> = (0..size).map(|x| decode(x)[k]).collect();
        projections.push(RingMap::verified(ring.clone(), f.clone(), proj_image)?);
    }

    Ok(ProductRing {
        ring,
        factors: factor_arcs,
        strides,
        injections,
        projections,
    })
}

/// A quotient ring together with its verified projection.
pub struct QuotientRing {
    pub ring: Arc<FiniteRing>,
    pub projection: RingMap,
}

/// R/I for a proper two-sided ideal. Coset representatives are the minimal
/// element indices, ordered ascending, so quotienting by the zero ideal
/// reproduces the original tables exactly.
pub fn quotient_ring(ring: &Arc<FiniteRing>, ideal: &Ideal) -> Result<QuotientRing> {
    if ideal.side() != Side::TwoSided {
        return Err(Error::NotAnIdeal {
            sided: "two-sided",
            reason: "quotients need a two-sided ideal",
            witness: vec![],
        });
    }
    if !ideal.ring().same_tables(ring) {
        return Err(Error::RingMismatch("ideal belongs to a different ring"));
    }
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }

    let n = ring.size();
    let mut rep = vec![u16::MAX; n];
    for x in ring.elements() {
        let r = ideal
            .members()
            .iter()
            .map(|i| ring.add(x, i))
            .min()
            .expect("ideal contains zero");
        rep[usize::from(x)] = r;
    }
    let mut reps: Vec<u16> = ring.elements().filter(|&x| rep[usize::from(x)] == x).collect();
    reps.sort_unstable();
    let index_of = |r: u16| reps.binary_search(&r).unwrap() as u16;

    let size = reps.len();
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for &a in &reps {
        for &b in &reps {
            add.push(index_of(rep[usize::from(ring.add(a, b))]));
            mul.push(index_of(rep[usize::from(ring.mul(a, b))]));
        }
    }
    let quotient = Arc::new(FiniteRing::from_tables(
        format!("{}_mod{}", ring.label(), ideal.len()),
        size,
        index_of(rep[usize::from(ring.zero())]),
        index_of(rep[usize::from(ring.one())]),
        add,
        mul,
    )?);

    let image: Vec<u16> = ring.elements().map(|x| index_of(rep[usize::from(x)])).collect();
    let projection = RingMap::verified(ring.clone(), quotient.clone(), image)?;
    if projection.kernel() != ideal.members() {
        return Err(Error::internal(
            "projection kernel differs from the ideal",
            &projection.kernel().minus(&ideal.members()).to_vec(),
        ));
    }
    if !projection.is_surjective() {
        return Err(Error::internal("projection not surjective", &[]));
    }
    Ok(QuotientRing {
        ring: quotient,
        projection,
    })
}

/// Same additive group, reversed multiplication.
pub fn opposite_ring(ring: &FiniteRing) -> FiniteRing {
    let n = ring.size();
    let mut mul = vec![0u16; n * n];
    for a in ring.elements() {
        for b in ring.elements() {
            mul[usize::from(a) * n + usize::from(b)] = ring.mul(b, a);
        }
    }
    let label = match ring.label().strip_suffix("_op") {
        Some(base) => base.to_string(),
        None => format!("{}_op", ring.label()),
    };
    FiniteRing::from_tables(label, n, ring.zero(), ring.one(), ring.raw_add_table().to_vec(), mul)
        .expect("opposite of a valid ring is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elemset::ElemSet;

    #[test]
    fn cyclic_ring_basics() {
        let z6 = make_cyclic_ring(6).unwrap();
        assert_eq!(z6.size(), 6);
        assert_eq!(z6.units().to_vec(), vec![1, 5]);
        assert!(matches!(make_cyclic_ring(1), Err(Error::RingTooSmall(1))));
    }

    #[test]
    fn gf4_is_a_field_but_z4_is_not() {
        let f4 = make_gf(4).unwrap();
        assert_eq!(f4.units().len(), 3);
        let z4 = make_cyclic_ring(4).unwrap();
        assert_ne!(f4.digest(), z4.digest());
        assert!(make_gf(6).is_err());
    }

    #[test]
    fn matrix_ring_shapes_and_sizes() {
        let f2 = make_gf(2).unwrap();
        let f3 = make_gf(3).unwrap();
        assert_eq!(make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap().ring.size(), 8);
        assert_eq!(make_matrix_ring(&f2, 2, MatrixShape::Full).unwrap().ring.size(), 16);
        assert_eq!(make_matrix_ring(&f3, 2, MatrixShape::Upper).unwrap().ring.size(), 27);
        // above the default cap, an explicit override is needed
        assert!(matches!(
            make_matrix_ring(&f3, 2, MatrixShape::Full),
            Err(Error::Capacity { .. })
        ));
        assert!(make_matrix_ring_capped(&f3, 2, MatrixShape::Full, 100).is_ok());
    }

    #[test]
    fn matrix_units_multiply_correctly() {
        let f2 = make_gf(2).unwrap();
        let l2 = make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap();
        let e11 = l2.unit(0, 0).unwrap();
        let e21 = l2.unit(1, 0).unwrap();
        let e22 = l2.unit(1, 1).unwrap();
        assert!(l2.unit(0, 1).is_none(), "E12 is outside the lower shape");
        let r = &l2.ring;
        assert_eq!(r.mul(e11, e11), e11);
        assert_eq!(r.mul(e21, e11), e21);
        assert_eq!(r.mul(e11, e21), r.zero());
        assert_eq!(r.mul(e22, e21), e21);
        assert_eq!(r.add(e11, e22), r.one());
    }

    #[test]
    fn product_of_z2_z3_is_z6_under_crt() {
        let z2 = make_cyclic_ring(2).unwrap();
        let z3 = make_cyclic_ring(3).unwrap();
        let prod = direct_product(&[&z2, &z3]).unwrap();
        assert_eq!(prod.ring.size(), 6);

        let z6 = make_cyclic_ring(6).unwrap().shared();
        let image: Vec<u16> = (0..6u16).map(|x| prod.encode(&[x % 2, x % 3])).collect();
        let crt = RingMap::verified(z6, prod.ring.clone(), image).unwrap();
        assert!(crt.is_bijective());
    }

    #[test]
    fn product_units_and_projections() {
        let f2 = make_gf(2).unwrap();
        let prod = direct_product(&[&f2, &f2]).unwrap();
        assert_eq!(prod.ring.size(), 4);
        assert_eq!(prod.ring.units().to_vec(), vec![prod.encode(&[1, 1])]);
        for (k, proj) in prod.projections.iter().enumerate() {
            assert!(proj.is_surjective());
            for x in f2.elements() {
                assert_eq!(proj.apply(prod.injections[k][usize::from(x)]), x);
            }
        }
        assert!(matches!(direct_product(&[&f2]), Err(Error::ProductArity(1))));
        assert!(matches!(direct_product(&[]), Err(Error::ProductArity(0))));
    }

    #[test]
    fn quotient_of_z4() {
        let z4 = make_cyclic_ring(4).unwrap().shared();
        let i = Ideal::verified(z4.clone(), [0u16, 2].into_iter().collect(), Side::TwoSided)
            .unwrap();
        let q = quotient_ring(&z4, &i).unwrap();
        assert_eq!(q.ring.size(), 2);
        assert_eq!(q.projection.kernel().to_vec(), vec![0, 2]);

        let full = Ideal::verified(z4.clone(), ElemSet::full(4), Side::TwoSided).unwrap();
        assert!(matches!(quotient_ring(&z4, &full), Err(Error::ImproperIdeal)));
    }

    #[test]
    fn quotient_by_zero_ideal_reproduces_tables() {
        let z6 = make_cyclic_ring(6).unwrap().shared();
        let q = quotient_ring(&z6, &Ideal::zero(z6.clone())).unwrap();
        assert!(q.ring.same_tables(&z6));
    }

    #[test]
    fn lower_triangular_quotient_by_corner_ideal() {
        let f2 = make_gf(2).unwrap();
        let l2 = make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap();
        let members: ElemSet = l2
            .ring
            .elements()
            .filter(|&x| l2.entry(x, 0, 0) == f2.zero())
            .collect();
        let ideal = Ideal::verified(l2.ring.clone(), members, Side::TwoSided).unwrap();
        let q = quotient_ring(&l2.ring, &ideal).unwrap();
        assert_eq!(q.ring.size(), 2);
        assert_eq!(q.ring.units().len(), 1);
    }

    #[test]
    fn opposite_is_an_involution_and_commutative_fixed_point() {
        let z6 = make_cyclic_ring(6).unwrap();
        assert!(opposite_ring(&z6).same_tables(&z6));

        let f2 = make_gf(2).unwrap();
        let l2 = make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap();
        let op = opposite_ring(&l2.ring);
        assert!(!op.same_tables(&l2.ring));
        assert!(opposite_ring(&op).same_tables(&l2.ring));
    }

    #[test]
    fn opposite_of_lower_is_upper_via_transpose() {
        let f2 = make_gf(2).unwrap();
        let l2 = make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap();
        let u2 = make_matrix_ring(&f2, 2, MatrixShape::Upper).unwrap();
        let op = opposite_ring(&l2.ring).shared();
        let image: Vec<u16> = op
            .elements()
            .map(|x| {
                let m = l2.decode(x);
                let t: Vec<Vec<u16>> = (0..2)
                    .map(|i| (0..2).map(|j| m[j][i]).collect())
                    .collect();
                u2.encode(&t).unwrap()
            })
            .collect();
        let iso = RingMap::verified(op, u2.ring.clone(), image).unwrap();
        assert!(iso.is_bijective());
    }
}
