//! Independent oracles and random corpora shared by the integration and
//! acceptance tests. Everything here works by direct enumeration so it
//! can check the rank- and formula-based library paths.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use poset_codes::{Budget, Ideal, LinearCode, Matrix, Poset, PrimeField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random full-rank `k x n` generator.
pub fn random_code(poset: &Poset, q: u32, k: usize, rng: &mut ChaCha8Rng) -> LinearCode {
    let n = poset.len();
    let f = PrimeField::new(q).unwrap();
    loop {
        let rows: Vec<Vec<u32>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect()).collect();
        let g = Matrix::from_rows(f, n, &rows).unwrap();
        if g.rank() == k {
            return LinearCode::new(poset.clone(), g).unwrap();
        }
    }
}

/// Random order on `n` elements: each pair `i < j` related with probability `p`.
pub fn random_poset(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Poset {
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                rel.push((i, j));
            }
        }
    }
    Poset::from_covers(n, &rel).unwrap()
}

/// Size of the smallest ideal containing the support.
pub fn weight(code: &LinearCode, x: &[u32]) -> usize {
    let bits = x.iter().enumerate().filter(|(_, &v)| v != 0).fold(0u64, |a, (i, _)| a | 1 << i);
    code.poset().closure_len(bits)
}

/// `d_t` as the smallest ideal holding a `t`-dimensional subcode, with the
/// subcode dimension found by counting codewords supported in the ideal.
pub fn generalized_weights_by_counting(code: &LinearCode) -> Vec<usize> {
    let words = code.codewords(&Budget::unlimited()).unwrap();
    let q = code.q() as u64;
    let mut best = vec![usize::MAX; code.k() + 1];
    for ideal in code.poset().ideals() {
        let inside = words
            .iter()
            .filter(|w| w.iter().enumerate().all(|(i, &v)| v == 0 || ideal.contains(i)))
            .count() as u64;
        let dim = (0..=code.k()).rev().find(|&t| q.pow(t as u32) <= inside).unwrap();
        for t in 1..=dim {
            best[t] = best[t].min(ideal.len());
        }
    }
    best[1..].to_vec()
}

/// Minimum distance by enumeration.
pub fn min_distance_by_counting(code: &LinearCode) -> usize {
    code.codewords(&Budget::unlimited())
        .unwrap()
        .iter()
        .filter(|w| w.iter().any(|&v| v != 0))
        .map(|w| weight(code, w))
        .min()
        .unwrap()
}

/// `A_s` by enumeration.
pub fn distribution_by_counting(code: &LinearCode) -> Vec<u64> {
    let mut a = vec![0u64; code.n() + 1];
    for w in code.codewords(&Budget::unlimited()).unwrap() {
        a[weight(code, &w)] += 1;
    }
    a
}

/// Codewords whose support closure is exactly `J`, for every ideal `J` of size `size`.
pub fn support_counts_by_counting(code: &LinearCode, size: usize) -> BTreeMap<Ideal, BigInt> {
    let words = code.codewords(&Budget::unlimited()).unwrap();
    let mut out = BTreeMap::new();
    for j in code.poset().ideals_of_size(size) {
        let count = words
            .iter()
            .filter(|w| {
                let bits = w.iter().enumerate().filter(|(_, &v)| v != 0).fold(0u64, |a, (i, _)| a | 1 << i);
                bits != 0 && code.poset().closure(poset_codes::CoordSet(bits)) == j
            })
            .count();
        out.insert(j, BigInt::from(count));
    }
    out
}

/// `#{ I : |I| = s, I \ Ω(I) ⊆ J ⊆ I }` by scanning all ideals.
pub fn n_s_by_counting(poset: &Poset, j: &Ideal, s: usize) -> usize {
    poset
        .ideals_of_size(s)
        .filter(|i| {
            let (_, tilde) = poset.maximal_elements(i);
            tilde.is_subset(j) && j.is_subset(i)
        })
        .count()
}

/// `d + d⊥ = n` with both distances by enumeration.
pub fn nmds_by_duality(code: &LinearCode) -> bool {
    min_distance_by_counting(code) + min_distance_by_counting(&code.dual()) == code.n()
}
