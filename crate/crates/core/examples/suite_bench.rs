use std::time::Instant;
use strongquot::construct::{direct_product, make_gf, make_matrix_ring, MatrixShape};
use strongquot::ore::LatticeCache;
use strongquot::strong::{analyze, all_pass};

fn main() {
    let cache = LatticeCache::new();
    let f3 = make_gf(3).unwrap();
    let l2f3 = make_matrix_ring(&f3, 2, MatrixShape::Lower).unwrap();
    let t = Instant::now();
    let a = analyze(&l2f3.ring, 27, &cache).unwrap();
    println!("l2_f3 suite: {} verdicts, all pass: {}, in {:?}", a.verdicts.len(), all_pass(&a.verdicts), t.elapsed());
    for (k, v) in &a.verdicts { if !v.pass { println!("  FAIL {k}: {}", v.detail); } }

    let f2 = make_gf(2).unwrap();
    let l2f2 = make_matrix_ring(&f2, 2, MatrixShape::Lower).unwrap();
    let prod = direct_product(&[l2f2.ring.as_ref(), l2f2.ring.as_ref()]).unwrap();
    let t = Instant::now();
    let a = analyze(&prod.ring, 64, &cache).unwrap();
    println!("l2_f2^2 suite: {} verdicts, all pass: {}, in {:?}", a.verdicts.len(), all_pass(&a.verdicts), t.elapsed());
    for (k, v) in &a.verdicts { if !v.pass { println!("  FAIL {k}: {}", v.detail); } }
}
