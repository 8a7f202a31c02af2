//! Weight distributions of poset codes.
//!
//! The brute-force path buckets every codeword by its left-adjusted support.
//! The analytic paths compute the distribution of an NMDS code from the
//! counts at the minimum distance alone (per ideal, per shape, or the single
//! Hamming count), using exact signed integers throughout.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::budget::{checked_pow, Budget};
use crate::code::{support, LinearCode};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ordered::{binom, OrderedSpace, Shape};
use crate::poset::{CoordSet, Ideal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    /// `A_s` for `s = 0..=n`.
    pub by_size: Vec<BigInt>,
    /// Nonzero `A_I`, keyed by left-adjusted support.
    pub by_ideal: BTreeMap<Ideal, BigInt>,
    /// Nonzero `A_e` (chain-product posets only).
    pub by_shape: BTreeMap<Shape, BigInt>,
}

impl WeightDistribution {
    fn zeros(len: usize) -> Self {
        let mut by_size = vec![BigInt::zero(); len + 1];
        by_size[0] = BigInt::one();
        Self { by_size, by_ideal: BTreeMap::new(), by_shape: BTreeMap::new() }
    }

    pub fn len(&self) -> usize {
        self.by_size.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn a(&self, s: usize) -> BigInt {
        self.by_size.get(s).cloned().unwrap_or_default()
    }

    /// `Σ_s A_s`, which equals `q^k` for a genuine code.
    pub fn total(&self) -> BigInt {
        self.by_size.iter().sum()
    }
}

fn q_pow(q: u32, e: usize) -> BigInt {
    BigInt::from(q).pow(e as u32)
}

fn sign(e: usize) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `Σ_{l=0}^{s-d-1} (-1)^l C(m, l) (q^{s-d-l} - 1)`.
fn alternating_term(m: usize, s: usize, d: usize, q: u32) -> BigInt {
    (0..s - d)
        .map(|l| sign(l) * binom(m as i64, l as i64) * (q_pow(q, s - d - l) - 1))
        .sum()
}

/// Exact distribution by full codeword enumeration.
pub fn weight_dist_bruteforce(code: &LinearCode, budget: &Budget) -> Result<WeightDistribution> {
    let poset = code.poset();
    let mut by_size = vec![0u64; code.n() + 1];
    let mut by_ideal: BTreeMap<u64, u64> = BTreeMap::new();
    code.for_each_codeword(budget, |w| {
        let ideal = poset.closure(CoordSet(support(w)));
        by_size[ideal.len()] += 1;
        *by_ideal.entry(ideal.set().bits()).or_default() += 1;
    })?;
    let mut dist = WeightDistribution {
        by_size: by_size.into_iter().map(BigInt::from).collect(),
        by_ideal: BTreeMap::new(),
        by_shape: BTreeMap::new(),
    };
    let space = OrderedSpace::recognize(poset, code.q());
    for (bits, count) in by_ideal {
        let ideal = poset.ideal(CoordSet(bits))?;
        if let Some(space) = &space {
            *dist.by_shape.entry(space.shape_of(&ideal)?).or_default() += count;
        }
        dist.by_ideal.insert(ideal, BigInt::from(count));
    }
    Ok(dist)
}

/// For every ideal `J` of the given size, the number of codewords whose
/// left-adjusted support is exactly `J`. Only vectors supported inside each
/// `J` (the kernel of `H[J]`) are enumerated, never the whole code. Every
/// ideal of that size appears in the result, zeros included.
pub fn support_counts(code: &LinearCode, size: usize, budget: &Budget) -> Result<BTreeMap<Ideal, BigInt>> {
    let poset = code.poset();
    let field = code.field();
    let h = code.parity_check();
    let mut out = BTreeMap::new();
    for ideal in poset.ideals_of_size(size) {
        let cols: Vec<usize> = ideal.set().iter().collect();
        let kernel: Matrix = h.select_columns(&cols).null_space();
        let dim = kernel.rows();
        budget.check("vectors supported on an ideal", checked_pow(field.order() as u64, dim))?;
        let mut count = 0u64;
        let mut digits = vec![0u32; dim];
        loop {
            let local = kernel.combine_rows(&digits);
            let bits = local
                .iter()
                .zip(&cols)
                .filter(|(&v, _)| v != 0)
                .fold(0u64, |acc, (_, &c)| acc | (1u64 << c));
            if bits != 0 && poset.closure_len(bits) == size {
                count += 1;
            }
            let mut i = 0;
            while i < dim {
                digits[i] += 1;
                if digits[i] < field.order() {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == dim {
                break;
            }
        }
        out.insert(ideal, BigInt::from(count));
    }
    Ok(out)
}

/// Aggregate per-ideal counts into per-shape counts. Every shape of the
/// seeds' weight appears, zeros included.
pub fn shape_counts(space: &OrderedSpace, by_ideal: &BTreeMap<Ideal, BigInt>) -> Result<BTreeMap<Shape, BigInt>> {
    let mut out = BTreeMap::new();
    let mut weights = by_ideal.keys().map(|i| i.len());
    if let Some(w) = weights.next() {
        if weights.any(|x| x != w) {
            return Err(Error::Usage("per-ideal counts mix several ideal sizes".into()));
        }
        for e in space.shapes(w) {
            out.insert(e, BigInt::zero());
        }
    }
    for (ideal, count) in by_ideal {
        *out.entry(space.shape_of(ideal)?).or_insert_with(BigInt::zero) += count;
    }
    Ok(out)
}

/// Distribution of an NMDS poset code from the per-ideal counts `A_J`,
/// `|J| = d`:
///
/// `A_s = Σ_{|I|=s} Σ_{l<s-d} (-1)^l C(|Ω(I)|, l)(q^{s-d-l} - 1)
///      + (-1)^{s-d} Σ_{|I|=s} Σ_{Ĩ ⊆ J ⊆ I, |J|=d} A_J`.
pub fn weight_dist_nmds_poset(
    code: &LinearCode,
    seed: &BTreeMap<Ideal, BigInt>,
    budget: &Budget,
) -> Result<WeightDistribution> {
    let info = code.classify(budget)?;
    if !info.class.is_nmds() {
        return Err(Error::Precondition(format!(
            "analytic distribution needs an NMDS code, this one is {}",
            info.class
        )));
    }
    let poset = code.poset();
    let (n, d, q) = (code.n(), info.d, code.q());
    if let Some(bad) = seed.keys().find(|j| j.len() != d || !poset.is_ideal(j.set())) {
        return Err(Error::Usage(format!("seed entry {bad} is not an ideal of size d={d}")));
    }
    let mut visited = 0u64;
    for j in poset.ideals_of_size(d) {
        visited += 1;
        if !seed.contains_key(&j) {
            return Err(Error::Usage(format!("seed is missing A_J for J={j}")));
        }
    }

    let mut dist = WeightDistribution::zeros(n);
    dist.by_size[d] = seed.values().sum();
    for s in d + 1..=n {
        let mut by_omega: BTreeMap<usize, BigInt> = BTreeMap::new();
        let mut nested = BigInt::zero();
        for ideal in poset.ideals_of_size(s) {
            visited += 1;
            if visited > budget.max_enum {
                return Err(budget.exceeded("ideals", format!("more than {}", budget.max_enum)));
            }
            let (omega, tilde) = poset.maximal_elements(&ideal);
            *by_omega.entry(omega.len()).or_insert_with(BigInt::zero) += 1;
            for j in poset.ideals_of_size_within(d, &ideal) {
                if tilde.is_subset(&j) {
                    nested += &seed[&j];
                }
            }
        }
        let first: BigInt = by_omega
            .iter()
            .map(|(&m, count)| count * alternating_term(m, s, d, q))
            .sum();
        dist.by_size[s] = first + sign(s - d) * nested;
    }
    dist.by_ideal = seed.iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (*k, v.clone())).collect();
    if let Some(space) = OrderedSpace::recognize(poset, q) {
        dist.by_shape = shape_counts(&space, seed)?.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    }
    Ok(dist)
}

/// Distribution of an ordered `[nr, k, d]` NMDS code from the per-shape
/// counts `A_e`, `|e|' = d`:
///
/// `A_s = Σ_{l<s-d} (-1)^l (Σ_{|e|'=s} C(|e|, l) C(n; e_0..e_r)) (q^{s-d-l} - 1)
///      + (-1)^{s-d} Σ_{|e|'=d} N_s(e) A_e`.
pub fn weight_dist_nmds_ordered(
    space: &OrderedSpace,
    k: usize,
    d: usize,
    seed: &BTreeMap<Shape, BigInt>,
) -> Result<WeightDistribution> {
    let total = space.len();
    if k == 0 || k >= total || d + k != total {
        return Err(Error::Precondition(format!(
            "[{total},{k},{d}] are not NMDS parameters (need d = nr - k, 1 <= k < nr)"
        )));
    }
    if let Some(bad) = seed.keys().find(|e| e.weight() != d || e.counts().len() != space.r || e.size() > space.n) {
        return Err(Error::Usage(format!("seed shape {bad} does not have ordered weight d={d}")));
    }
    let shapes_d = space.shapes(d);
    if let Some(missing) = shapes_d.iter().find(|e| !seed.contains_key(*e)) {
        return Err(Error::Usage(format!("seed is missing A_e for e={missing}")));
    }
    let q = space.q;
    let mut dist = WeightDistribution::zeros(total);
    dist.by_size[d] = seed.values().sum();
    for s in d + 1..=total {
        let shapes_s = space.shapes(s);
        let first: BigInt = (0..s - d)
            .map(|l| {
                let weighted: BigInt = shapes_s
                    .iter()
                    .map(|e| binom(e.size() as i64, l as i64) * e.multiplicity())
                    .sum();
                sign(l) * weighted * (q_pow(q, s - d - l) - 1)
            })
            .sum();
        let mut nested = BigInt::zero();
        for e in &shapes_d {
            nested += space.count_n_s(e, s)? * &seed[e];
        }
        dist.by_size[s] = first + sign(s - d) * nested;
    }
    dist.by_shape = seed.iter().filter(|(_, v)| !v.is_zero()).map(|(e, v)| (e.clone(), v.clone())).collect();
    Ok(dist)
}

/// Hamming-metric NMDS distribution from `A_d` alone:
///
/// `A_s = Σ_{l<s-d} (-1)^l C(s, l) C(n, s)(q^{s-d-l} - 1) + (-1)^{s-d} C(n-d, s-d) A_d`.
pub fn weight_dist_nmds_hamming(n: usize, k: usize, d: usize, q: u32, a_d: BigInt) -> Result<WeightDistribution> {
    if k == 0 || k >= n || d + k != n {
        return Err(Error::Precondition(format!(
            "[{n},{k},{d}] are not NMDS parameters (need d = n - k, 1 <= k < n)"
        )));
    }
    let mut dist = WeightDistribution::zeros(n);
    for s in d + 1..=n {
        let first: BigInt = (0..s - d)
            .map(|l| {
                sign(l)
                    * binom(s as i64, l as i64)
                    * binom(n as i64, s as i64)
                    * (q_pow(q, s - d - l) - 1)
            })
            .sum();
        dist.by_size[s] = first + sign(s - d) * binom((n - d) as i64, (s - d) as i64) * &a_d;
    }
    dist.by_size[d] = a_d;
    Ok(dist)
}
