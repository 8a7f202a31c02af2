//! Linear codes over GF(q) whose weights are measured in a poset metric.
//!
//! The dual code is always bound to the dual poset, so weights of
//! `code.dual()` are right-adjusted weights of the original coordinates.

use std::collections::HashMap;
use std::fmt;

use crate::budget::{checked_pow, Budget};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::poset::{CoordSet, Ideal, Poset};

/// Bitmask of the nonzero positions of `x`.
#[inline]
pub fn support(x: &[u32]) -> u64 {
    x.iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .fold(0u64, |acc, (i, _)| acc | (1u64 << i))
}

/// Size of the smallest ideal of `poset` containing the support of `x`.
pub fn poset_weight(x: &[u32], poset: &Poset) -> Result<usize> {
    if x.len() != poset.len() {
        return Err(Error::Usage(format!(
            "vector of length {} against a poset on {} elements",
            x.len(),
            poset.len()
        )));
    }
    Ok(poset.closure_len(support(x)))
}

/// `poset_weight(x - y)`.
pub fn poset_distance(x: &[u32], y: &[u32], poset: &Poset, field: PrimeField) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::Usage("vectors of different lengths".into()));
    }
    let diff: Vec<u32> = x.iter().zip(y).map(|(&a, &b)| field.sub(a, b)).collect();
    poset_weight(&diff, poset)
}

/// Generalized weights `d_1 < d_2 < ... < d_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    weights: Vec<usize>,
}

impl WeightProfile {
    pub fn new(weights: Vec<usize>) -> Self {
        Self { weights }
    }

    /// `d_t`, with `t` starting at 1.
    pub fn d(&self, t: usize) -> Option<usize> {
        t.checked_sub(1).and_then(|i| self.weights.get(i).copied())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] < w[1]) && self.weights.first().map_or(true, |&d| d > 0)
    }

    /// `d_t <= n - k + t` for every `t`, and `d_k <= n`.
    pub fn satisfies_singleton(&self, n: usize) -> bool {
        let k = self.weights.len();
        self.weights
            .iter()
            .enumerate()
            .all(|(i, &d)| d + k <= n + i + 1 && d <= n)
    }
}

/// Strength and index of a linear orthogonal array.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrthogonalArrayCertificate {
    pub strength: usize,
    pub index: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeClass {
    Mds,
    Nmds,
    /// `k = 1`: no second generalized weight exists, so only `d + d⊥ = n` applies.
    NmdsDegenerate,
    /// `d = n - k` without `d_2 = n - k + 2`.
    AlmostMds,
    Other,
}

impl CodeClass {
    pub fn is_nmds(&self) -> bool {
        matches!(self, CodeClass::Nmds | CodeClass::NmdsDegenerate)
    }
}

impl fmt::Display for CodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeClass::Mds => "MDS",
            CodeClass::Nmds => "NMDS",
            CodeClass::NmdsDegenerate => "NMDS (degenerate k=1)",
            CodeClass::AlmostMds => "AMDS-not-NMDS",
            CodeClass::Other => "other",
        })
    }
}

/// Classification verdict together with the parameters it was derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub class: CodeClass,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d2: Option<usize>,
    pub dual_d: usize,
    pub profile: WeightProfile,
    pub dual_profile: WeightProfile,
    /// Whether `d + d⊥ = n`.
    pub duality_criterion: bool,
}

/// A code obtained from another by deleting one coordinate.
#[derive(Debug, Clone)]
pub struct DerivedCode {
    /// 0-based index of the deleted coordinate in the parent code.
    pub deleted: usize,
    pub code: LinearCode,
}

#[derive(Debug, Clone)]
pub struct DerivedCodes {
    /// `[n-1, k-1, d]`, from deleting a parity-check column.
    pub shortened: DerivedCode,
    /// `[n-1, k, d-1]`, from deleting a generator column. An NMDS code of
    /// length `n-1` and dimension `k` has distance `n-1-k`, one less than
    /// the parent.
    pub punctured: DerivedCode,
}

#[derive(Debug, Clone)]
pub struct LinearCode {
    poset: Poset,
    generator: Matrix,
    parity_check: Matrix,
}

impl PartialEq for LinearCode {
    /// Equal as sets of codewords over the same poset.
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset && self.generator.same_row_space(&other.generator)
    }
}

impl LinearCode {
    /// The generator must have full row rank and one column per poset element.
    pub fn new(poset: Poset, generator: Matrix) -> Result<Self> {
        if generator.cols() != poset.len() {
            return Err(Error::Usage(format!(
                "generator has {} columns but the poset has {} elements",
                generator.cols(),
                poset.len()
            )));
        }
        let rank = generator.rank();
        if rank != generator.rows() {
            return Err(Error::Usage(format!(
                "generator has {} rows but rank {rank}",
                generator.rows()
            )));
        }
        let parity_check = generator.null_space();
        Ok(Self { poset, generator, parity_check })
    }

    /// Code spanned by the rows of `rows`, dropping dependent rows.
    pub fn spanned_by(poset: Poset, rows: &Matrix) -> Result<Self> {
        let (basis, _) = rows.rref();
        Self::new(poset, basis)
    }

    pub fn field(&self) -> PrimeField {
        self.generator.field()
    }

    pub fn q(&self) -> u32 {
        self.field().order()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.parity_check
    }

    /// The same codewords measured in a different poset.
    pub fn with_poset(&self, poset: Poset) -> Result<Self> {
        Self::new(poset, self.generator.clone())
    }

    /// `q^k`, or None on overflow.
    pub fn codeword_count(&self) -> Option<u128> {
        checked_pow(self.q() as u64, self.k())
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        let f = self.field();
        x.len() == self.n()
            && (0..self.parity_check.rows()).all(|r| {
                self.parity_check
                    .row(r)
                    .iter()
                    .zip(x)
                    .fold(0u32, |acc, (&h, &v)| f.add(acc, f.mul(h, v)))
                    == 0
            })
    }

    /// Visit every codeword once, odometer-style over the message digits.
    /// Every digit step (including a wrap from q-1 to 0) adds one generator row.
    pub fn for_each_codeword<F: FnMut(&[u32])>(&self, budget: &Budget, mut visit: F) -> Result<()> {
        budget.check("codewords", self.codeword_count())?;
        let f = self.field();
        let q = self.q();
        let (k, n) = (self.k(), self.n());
        let mut digits = vec![0u32; k];
        let mut word = vec![0u32; n];
        loop {
            visit(&word);
            let mut i = 0;
            loop {
                if i == k {
                    return Ok(());
                }
                for (w, &g) in word.iter_mut().zip(self.generator.row(i)) {
                    *w = f.add(*w, g);
                }
                digits[i] += 1;
                if digits[i] < q {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    pub fn codewords(&self, budget: &Budget) -> Result<Vec<Vec<u32>>> {
        let mut out = Vec::new();
        self.for_each_codeword(budget, |w| out.push(w.to_vec()))?;
        Ok(out)
    }

    /// `C⊥` with weights in the dual poset. Its generator is this code's parity check.
    pub fn dual(&self) -> LinearCode {
        Self {
            poset: self.poset.dual(),
            generator: self.parity_check.clone(),
            parity_check: self.generator.clone(),
        }
    }

    /// Minimum poset weight of a nonzero codeword, by enumeration.
    pub fn min_distance(&self, budget: &Budget) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::Precondition("minimum distance of the zero code".into()));
        }
        let mut best = usize::MAX;
        self.for_each_codeword(budget, |w| {
            let s = support(w);
            if s != 0 {
                best = best.min(self.poset.closure_len(s));
            }
        })?;
        Ok(best)
    }

    /// `|I| - rank(H[I])`: dimension of the subcode supported inside `ideal`.
    pub fn corank(&self, ideal: &Ideal) -> usize {
        let cols = self.parity_check.columns_in(ideal.set());
        ideal.len() - cols.rank()
    }

    /// Generalized weights from the rank criterion:
    /// `d_t = min { |I| : I ideal, |I| - rank(H[I]) >= t }`.
    pub fn generalized_weights(&self, budget: &Budget) -> Result<WeightProfile> {
        let (n, k) = (self.n(), self.k());
        let mut best = vec![0usize; n + 1];
        let mut visited: u64 = 0;
        for ideal in self.poset.ideals() {
            visited += 1;
            if visited > budget.max_enum {
                return Err(budget.exceeded("ideals", format!("more than {}", budget.max_enum)));
            }
            let s = ideal.len();
            if best[s] < s {
                best[s] = best[s].max(self.corank(&ideal));
            }
        }
        let mut weights = Vec::with_capacity(k);
        let mut running = 0;
        for (s, &c) in best.iter().enumerate() {
            running = running.max(c);
            while weights.len() < running.min(k) {
                weights.push(s);
            }
        }
        if weights.len() != k {
            return Err(Error::Internal(format!(
                "rank scan found {} generalized weights for a {k}-dimensional code",
                weights.len()
            )));
        }
        Ok(WeightProfile::new(weights))
    }

    /// Checks that `{d_t(C)}` and `n + 1 - {d_t(C⊥)}` partition `1..=n`.
    pub fn wei_duality_check(&self, budget: &Budget) -> Result<bool> {
        let (n, k) = (self.n(), self.k());
        if k == 0 || k >= n {
            return Err(Error::Precondition(format!("duality check needs 1 <= k <= n-1, got k={k}, n={n}")));
        }
        let own = self.generalized_weights(budget)?;
        let dual = self.dual().generalized_weights(budget)?;
        let mut seen = vec![false; n + 1];
        let values = own.as_slice().iter().copied().chain(dual.as_slice().iter().map(|&d| n + 1 - d));
        for v in values {
            if v == 0 || v > n || seen[v] {
                return Ok(false);
            }
            seen[v] = true;
        }
        Ok(seen[1..].iter().all(|&b| b))
    }

    /// Largest `t` such that the codewords, restricted to any ideal of size
    /// `t`, take every pattern in GF(q)^t equally often. Counted exhaustively.
    pub fn oa_strength(&self, budget: &Budget) -> Result<OrthogonalArrayCertificate> {
        let words = self.codewords(budget)?;
        let q = self.q() as usize;
        let k = self.k();
        let mut strength = 0;
        'sizes: for t in 1..=self.n().min(k) {
            let expected = words.len() / q.pow(t as u32);
            for ideal in self.poset.ideals_of_size(t) {
                let cols: Vec<usize> = ideal.set().iter().collect();
                let mut counts = vec![0usize; q.pow(t as u32)];
                for w in &words {
                    let key = cols.iter().fold(0usize, |acc, &c| acc * q + w[c] as usize);
                    counts[key] += 1;
                }
                if counts.iter().any(|&c| c != expected) {
                    break 'sizes;
                }
            }
            strength = t;
        }
        Ok(OrthogonalArrayCertificate {
            strength,
            index: checked_pow(q as u64, k - strength).expect("index fits"),
        })
    }

    /// MDS / NMDS / almost-MDS from `(d_1, d_2)`, cross-checked against
    /// `d + d⊥ = n`. Disagreement between the two is an internal error.
    pub fn classify(&self, budget: &Budget) -> Result<Classification> {
        let (n, k) = (self.n(), self.k());
        if k == 0 || k == n {
            return Err(Error::Unsupported(format!(
                "classification of the degenerate [{n},{k}] code"
            )));
        }
        let profile = self.generalized_weights(budget)?;
        let dual_profile = self.dual().generalized_weights(budget)?;
        let d = profile.as_slice()[0];
        let d2 = profile.d(2);
        let dual_d = dual_profile.as_slice()[0];
        let duality_criterion = d + dual_d == n;

        let class = if k == 1 {
            if d == n {
                CodeClass::Mds
            } else if duality_criterion {
                CodeClass::NmdsDegenerate
            } else {
                CodeClass::Other
            }
        } else if d == n - k + 1 {
            CodeClass::Mds
        } else if d == n - k && d2 == Some(n - k + 2) {
            CodeClass::Nmds
        } else if d == n - k {
            CodeClass::AlmostMds
        } else {
            CodeClass::Other
        };
        let by_definition = if k == 1 { d + 1 == n } else { class == CodeClass::Nmds };
        if by_definition != duality_criterion {
            return Err(Error::Internal(format!(
                "NMDS verdicts disagree: d={d}, d2={d2:?}, d_dual={dual_d}, n={n}, k={k}"
            )));
        }
        Ok(Classification { class, n, k, d, d2, dual_d, profile, dual_profile, duality_criterion })
    }

    /// Search coordinate deletions for a shortened `[n-1, k-1, d]` and a
    /// punctured `[n-1, k, d-1]` NMDS code. Survivors keep the induced order.
    pub fn derive_codes(&self, budget: &Budget) -> Result<DerivedCodes> {
        let info = self.classify(budget)?;
        let (n, k) = (self.n(), self.k());
        if info.class != CodeClass::Nmds || k < 2 || n - k < 2 {
            return Err(Error::Precondition(format!(
                "derived codes need an NMDS code with k >= 2 and n-k >= 2, got [{n},{k},{}] classified {}",
                info.d, info.class
            )));
        }
        let target_d = info.d;
        let accept = |code: &LinearCode, want_k: usize, want_d: usize| -> Result<bool> {
            if code.k() != want_k {
                return Ok(false);
            }
            let c = code.classify(budget)?;
            Ok(c.class.is_nmds() && c.d == want_d)
        };

        let mut shortened = None;
        for c in 0..n {
            let h = self.parity_check.remove_column(c);
            if h.rank() != n - k {
                continue;
            }
            let code = LinearCode::new(self.poset.without(c)?, h.null_space())?;
            if accept(&code, k - 1, target_d)? {
                shortened = Some(DerivedCode { deleted: c, code });
                break;
            }
        }
        let mut punctured = None;
        for c in 0..n {
            let g = self.generator.remove_column(c);
            if g.rank() != k {
                continue;
            }
            let code = LinearCode::new(self.poset.without(c)?, g)?;
            if accept(&code, k, target_d - 1)? {
                punctured = Some(DerivedCode { deleted: c, code });
                break;
            }
        }
        match (shortened, punctured) {
            (Some(shortened), Some(punctured)) => Ok(DerivedCodes { shortened, punctured }),
            (s, p) => {
                let mut missing = Vec::new();
                if s.is_none() {
                    missing.push(format!("[{},{},{target_d}]", n - 1, k - 1));
                }
                if p.is_none() {
                    missing.push(format!("[{},{k},{}]", n - 1, target_d - 1));
                }
                Err(Error::ConstructionFailure(format!(
                    "no single-coordinate deletion yields an NMDS {} code",
                    missing.join(" or ")
                )))
            }
        }
    }

    /// Restrictions of codewords to `cols`, grouped: pattern -> multiplicity.
    pub fn restriction_counts(&self, cols: CoordSet, budget: &Budget) -> Result<HashMap<Vec<u32>, usize>> {
        let idx: Vec<usize> = cols.iter().collect();
        let mut counts = HashMap::new();
        self.for_each_codeword(budget, |w| {
            let key: Vec<u32> = idx.iter().map(|&c| w[c]).collect();
            *counts.entry(key).or_insert(0) += 1;
        })?;
        Ok(counts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    fn code(q: u32, poset: Poset, rows: &[Vec<u32>]) -> LinearCode {
        let n = poset.len();
        LinearCode::new(poset, Matrix::from_rows(gf(q), n, rows).unwrap()).unwrap()
    }

    fn ordered_2x2() -> Poset {
        Poset::from_covers(4, &[(0, 1), (2, 3)]).unwrap()
    }

    fn self_dual_422() -> LinearCode {
        code(2, Poset::antichain(4).unwrap(), &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]])
    }

    fn ordered_422() -> LinearCode {
        code(2, ordered_2x2(), &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]])
    }

    fn full_space(q: u32, poset: Poset) -> LinearCode {
        let n = poset.len();
        LinearCode::new(poset, Matrix::identity(gf(q), n)).unwrap()
    }

    #[test]
    fn weight_examples() {
        let a = Poset::antichain(4).unwrap();
        assert_eq!(poset_weight(&[1, 0, 2, 0], &a).unwrap(), 2);
        let c = Poset::chain(3).unwrap();
        assert_eq!(poset_weight(&[1, 1, 0], &c).unwrap(), 2);
        assert_eq!(poset_weight(&[0, 1, 1, 0], &ordered_2x2()).unwrap(), 3);
        assert!(poset_weight(&[1, 0], &c).is_err());
    }

    #[test]
    fn dual_examples() {
        let full = full_space(2, Poset::chain(3).unwrap());
        assert_eq!(full.dual().k(), 0);

        let sd = self_dual_422();
        assert_eq!(sd.dual(), sd);

        let c = code(2, Poset::chain(3).unwrap(), &[vec![1, 0, 0], vec![0, 0, 1]]);
        let dual = c.dual();
        let expect = code(2, Poset::chain(3).unwrap().dual(), &[vec![0, 1, 0]]);
        assert_eq!(dual, expect);
        assert_eq!(dual.dual(), c);
        assert!(c.generator().mul(&c.parity_check().transpose()).unwrap().is_zero());
    }

    #[test]
    fn min_distance_examples() {
        let b = Budget::default();
        assert_eq!(self_dual_422().min_distance(&b).unwrap(), 2);
        assert_eq!(ordered_422().min_distance(&b).unwrap(), 2);
        assert_eq!(full_space(3, ordered_2x2()).min_distance(&b).unwrap(), 1);
        assert!(matches!(
            self_dual_422().min_distance(&Budget::new(3)),
            Err(Error::Resource { bound: 3, .. })
        ));
    }

    #[test]
    fn generalized_weight_examples() {
        let b = Budget::default();
        let full = full_space(2, Poset::chain(5).unwrap());
        assert_eq!(full.generalized_weights(&b).unwrap().as_slice(), &[1, 2, 3, 4, 5]);
        assert_eq!(self_dual_422().generalized_weights(&b).unwrap().as_slice(), &[2, 4]);
        assert_eq!(ordered_422().generalized_weights(&b).unwrap().as_slice(), &[2, 4]);
    }

    #[test]
    fn wei_duality_examples() {
        let b = Budget::default();
        assert!(self_dual_422().wei_duality_check(&b).unwrap());
        let c = code(2, Poset::chain(3).unwrap(), &[vec![0, 1, 0]]);
        assert_eq!(c.generalized_weights(&b).unwrap().as_slice(), &[2]);
        assert_eq!(c.dual().generalized_weights(&b).unwrap().as_slice(), &[1, 3]);
        assert!(c.wei_duality_check(&b).unwrap());
        assert!(full_space(2, Poset::chain(3).unwrap()).wei_duality_check(&b).is_err());
    }

    #[test]
    fn oa_examples() {
        let b = Budget::default();
        let full = full_space(2, Poset::antichain(2).unwrap());
        assert_eq!(full.oa_strength(&b).unwrap(), OrthogonalArrayCertificate { strength: 2, index: 1 });
        let in_dual = ordered_422().with_poset(ordered_2x2().dual()).unwrap();
        assert_eq!(in_dual.oa_strength(&b).unwrap(), OrthogonalArrayCertificate { strength: 1, index: 2 });
    }

    #[test]
    fn oa_of_dual_rows_has_strength_d_minus_one() {
        // [5,2,3]-ish binary code over the antichain: d = 3
        let c = code(2, Poset::antichain(5).unwrap(), &[vec![1, 1, 1, 0, 0], vec![0, 0, 1, 1, 1]]);
        let b = Budget::default();
        let d = c.min_distance(&b).unwrap();
        assert_eq!(d, 3);
        let rows = c.dual().with_poset(c.poset().clone()).unwrap();
        assert_eq!(rows.oa_strength(&b).unwrap().strength, d - 1);
    }

    #[test]
    fn classify_examples() {
        let b = Budget::default();
        let c = self_dual_422().classify(&b).unwrap();
        assert_eq!(c.class, CodeClass::Nmds);
        assert_eq!((c.d, c.d2, c.dual_d), (2, Some(4), 2));

        let c = ordered_422().classify(&b).unwrap();
        assert_eq!(c.class, CodeClass::Nmds);
        assert!(c.duality_criterion);

        // chain n=3, span{(0,1,0)}: d=2=n-k, dual distance 1
        let c = code(2, Poset::chain(3).unwrap(), &[vec![0, 1, 0]]).classify(&b).unwrap();
        assert_eq!(c.class, CodeClass::NmdsDegenerate);
        assert_eq!((c.d, c.dual_d), (2, 1));

        let full = full_space(2, Poset::chain(3).unwrap());
        assert!(matches!(full.classify(&b), Err(Error::Unsupported(_))));

        // repetition code over the antichain is MDS
        let rep = code(3, Poset::antichain(3).unwrap(), &[vec![1, 1, 1]]);
        assert_eq!(rep.classify(&b).unwrap().class, CodeClass::Mds);
    }

    #[test]
    fn derive_examples() {
        let b = Budget::default();
        for parent in [ordered_422(), self_dual_422()] {
            let derived = parent.derive_codes(&b).unwrap();
            let s = &derived.shortened.code;
            assert_eq!((s.n(), s.k()), (3, 1));
            assert_eq!(s.min_distance(&b).unwrap(), 2);
            assert!(s.classify(&b).unwrap().class.is_nmds());
            let p = &derived.punctured.code;
            assert_eq!((p.n(), p.k()), (3, 2));
            assert_eq!(p.min_distance(&b).unwrap(), 1);
            assert!(p.classify(&b).unwrap().class.is_nmds());
        }
        let rep = code(3, Poset::antichain(3).unwrap(), &[vec![1, 1, 1]]);
        assert!(matches!(rep.derive_codes(&b), Err(Error::Precondition(_))));
    }

    #[test]
    fn rejects_rank_deficient_generator() {
        let g = Matrix::from_rows(gf(2), 3, &[vec![1, 1, 0], vec![1, 1, 0]]).unwrap();
        assert!(LinearCode::new(Poset::antichain(3).unwrap(), g).is_err());
        let g = Matrix::from_rows(gf(2), 3, &[vec![1, 1, 0]]).unwrap();
        assert!(LinearCode::new(Poset::antichain(4).unwrap(), g).is_err());
    }

    #[test]
    fn codeword_enumeration_covers_the_span() {
        let c = code(3, Poset::antichain(4).unwrap(), &[vec![1, 2, 0, 1], vec![0, 1, 1, 2]]);
        let words = c.codewords(&Budget::default()).unwrap();
        assert_eq!(words.len(), 9);
        let mut sorted = words.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 9);
        assert!(words.iter().all(|w| c.contains(w)));
    }
}
