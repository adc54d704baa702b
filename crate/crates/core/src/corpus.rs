//! The standard test corpus: every ring the verification battery runs on.

use crate::construct::{
    direct_product, make_cyclic_ring, make_gf, make_matrix_ring, MatrixShape,
};
use crate::error::Result;
use crate::ring::FiniteRing;

/// Builds the corpus in its canonical order. Deterministic: rebuilding
/// yields identical tables (and hence identical digests) every time.
pub fn standard_corpus() -> Result<Vec<FiniteRing>> {
    let f2 = make_gf(2)?;
    let f3 = make_gf(3)?;
    let z2 = make_cyclic_ring(2)?;
    let z3 = make_cyclic_ring(3)?;
    let l2_f2 = make_matrix_ring(&f2, 2, MatrixShape::Lower)?;

    let mut corpus = vec![
        make_cyclic_ring(4)?,
        make_cyclic_ring(6)?,
        make_cyclic_ring(8)?,
        make_cyclic_ring(9)?,
        make_cyclic_ring(12)?,
        f2.clone(),
        f3.clone(),
        make_gf(4)?,
        direct_product(&[&f2, &f2])?.ring.as_ref().clone(),
        direct_product(&[&z2, &z3])?.ring.as_ref().clone(),
        make_matrix_ring(&f2, 2, MatrixShape::Full)?.ring.as_ref().clone(),
        l2_f2.ring.as_ref().clone(),
        make_matrix_ring(&f2, 2, MatrixShape::Upper)?.ring.as_ref().clone(),
        make_matrix_ring(&f3, 2, MatrixShape::Lower)?.ring.as_ref().clone(),
    ];
    corpus.push(
        direct_product(&[l2_f2.ring.as_ref(), l2_f2.ring.as_ref()])?
            .ring
            .as_ref()
            .clone(),
    );
    Ok(corpus)
}

/// Smallest cap that makes every corpus ring exhaustively enumerable.
pub fn corpus_cap() -> usize {
    64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_inventory() {
        let corpus = standard_corpus().unwrap();
        let inventory: Vec<(String, usize)> = corpus
            .iter()
            .map(|r| (r.label().to_string(), r.size()))
            .collect();
        assert_eq!(
            inventory,
            vec![
                ("z4".into(), 4),
                ("z6".into(), 6),
                ("z8".into(), 8),
                ("z9".into(), 9),
                ("z12".into(), 12),
                ("f2".into(), 2),
                ("f3".into(), 3),
                ("f4".into(), 4),
                ("f2xf2".into(), 4),
                ("z2xz3".into(), 6),
                ("m2_f2".into(), 16),
                ("l2_f2".into(), 8),
                ("u2_f2".into(), 8),
                ("l2_f3".into(), 27),
                ("l2_f2xl2_f2".into(), 64),
            ]
        );
        assert!(corpus.iter().all(|r| r.size() <= corpus_cap()));
    }

    #[test]
    fn rebuild_is_digest_stable() {
        let a = standard_corpus().unwrap();
        let b = standard_corpus().unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.digest(), y.digest(), "{}", x.label());
        }
    }
}
