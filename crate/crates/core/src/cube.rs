//! Ordered codes as point sets in the unit cube `[0,1)^n`.
//!
//! A codeword block `(c_1, ..., c_r)` becomes the coordinate
//! `Σ_j c_j q^{j-r-1}`, stored exactly as the numerator `Σ_j c_j q^{j-1}` over
//! `q^r`. The top of each chain is the most significant digit, so an
//! elementary interval of resolution `d_i` in dimension `i` looks at the top
//! `d_i` coordinates of block `i`. All membership tests are integer division.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::budget::{checked_pow, Budget};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ordered::OrderedSpace;
use crate::poset::{CoordSet, Ideal};

/// Enumerate all of GF(q)^n for the perfect-cover check only up to this size.
pub const COVER_ENUMERATION_LIMIT: u128 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    space: OrderedSpace,
    denominator: u64,
    points: Vec<Vec<u64>>,
}

impl PointSet {
    /// Points given by their numerators over `q^r`.
    pub fn new(space: OrderedSpace, points: Vec<Vec<u64>>) -> Result<Self> {
        let denominator = denominator(&space)?;
        for p in &points {
            if p.len() != space.n {
                return Err(Error::Usage(format!("point of dimension {} in U^{}", p.len(), space.n)));
            }
            if let Some(&bad) = p.iter().find(|&&x| x >= denominator) {
                return Err(Error::Usage(format!("numerator {bad} is not below {denominator}")));
            }
        }
        Ok(Self { space, denominator, points })
    }

    pub fn space(&self) -> &OrderedSpace {
        &self.space
    }

    /// `q^r`.
    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn points(&self) -> &[Vec<u64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// CSV with header `x1,...,xn`; each cell is `num/den` and the value to
    /// 12 decimal places, separated by a space.
    pub fn to_csv(&self) -> String {
        let header: Vec<String> = (1..=self.space.n).map(|i| format!("x{i}")).collect();
        let mut out = header.join(",");
        out.push('\n');
        for p in &self.points {
            let cells: Vec<String> = p
                .iter()
                .map(|&num| format!("{num}/{} {}", self.denominator, decimal12(num, self.denominator)))
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn denominator(space: &OrderedSpace) -> Result<u64> {
    checked_pow(space.q as u64, space.r)
        .filter(|&d| d <= u64::MAX as u128)
        .map(|d| d as u64)
        .ok_or_else(|| Error::Unsupported(format!("q^r = {}^{} does not fit in 64 bits", space.q, space.r)))
}

/// `num / den` rounded half-up to 12 decimals, using integers only.
fn decimal12(num: u64, den: u64) -> String {
    const SCALE: u128 = 1_000_000_000_000;
    let scaled = (2 * num as u128 * SCALE + den as u128) / (2 * den as u128);
    format!("{}.{:012}", scaled / SCALE, scaled % SCALE)
}

/// Numerator of one block: `Σ_j c_j q^{j-1}` (`j` 1-based).
pub fn block_numerator(block: &[u32], q: u32) -> u64 {
    block.iter().rev().fold(0u64, |acc, &c| acc * q as u64 + c as u64)
}

/// Map every codeword of an ordered code to its point.
pub fn code_to_points(code: &LinearCode, budget: &Budget) -> Result<PointSet> {
    let space = ordered_space_of(code)?;
    let den = denominator(&space)?;
    let mut points = Vec::new();
    code.for_each_codeword(budget, |w| {
        points.push(w.chunks(space.r).map(|b| block_numerator(b, space.q)).collect());
    })?;
    Ok(PointSet { space, denominator: den, points })
}

fn ordered_space_of(code: &LinearCode) -> Result<OrderedSpace> {
    OrderedSpace::recognize(code.poset(), code.q())
        .ok_or_else(|| Error::Usage("the code's poset is not a product of equal chains".into()))
}

/// `Π_i [a_i / q^{d_i}, (a_i + 1) / q^{d_i})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryInterval {
    pub resolutions: Vec<usize>,
    pub indices: Vec<u64>,
}

impl ElementaryInterval {
    pub fn new(resolutions: Vec<usize>, indices: Vec<u64>) -> Result<Self> {
        if resolutions.len() != indices.len() {
            return Err(Error::Usage("resolution and index vectors differ in length".into()));
        }
        Ok(Self { resolutions, indices })
    }

    /// `Π_i [0, q^{-l_i})`.
    pub fn anchored(levels: &[usize]) -> Self {
        Self { resolutions: levels.to_vec(), indices: vec![0; levels.len()] }
    }

    /// Volume is `q^{-volume_exponent}`.
    pub fn volume_exponent(&self) -> usize {
        self.resolutions.iter().sum()
    }

    pub fn display(&self, q: u32) -> String {
        let parts: Vec<String> = self
            .resolutions
            .iter()
            .zip(&self.indices)
            .map(|(&d, &a)| {
                if d == 0 {
                    "[0,1)".to_string()
                } else {
                    let den = (q as u128).pow(d as u32);
                    format!("[{a}/{den},{}/{den})", a + 1)
                }
            })
            .collect();
        parts.join("x")
    }
}

/// Number of points inside `interval`.
pub fn interval_count(ps: &PointSet, interval: &ElementaryInterval) -> Result<u64> {
    let space = &ps.space;
    if interval.resolutions.len() != space.n {
        return Err(Error::Usage(format!(
            "interval of dimension {} for points in U^{}",
            interval.resolutions.len(),
            space.n
        )));
    }
    let mut divisors = Vec::with_capacity(space.n);
    for (&d, &a) in interval.resolutions.iter().zip(&interval.indices) {
        if d > space.r {
            return Err(Error::Unsupported(format!(
                "resolution {d} exceeds the point resolution r={}",
                space.r
            )));
        }
        if (a as u128) >= (space.q as u128).pow(d as u32) {
            return Err(Error::Usage(format!("index {a} out of range for resolution {d}")));
        }
        divisors.push((space.q as u64).pow((space.r - d) as u32));
    }
    Ok(ps
        .points
        .iter()
        .filter(|p| p.iter().zip(&divisors).zip(&interval.indices).all(|((&x, &div), &a)| x / div == a))
        .count() as u64)
}

/// All `(d_1..d_n)` with `0 <= d_i <= cap` and `Σ d_i = total`, lexicographic.
fn compositions(total: usize, parts: usize, cap: usize) -> Vec<Vec<usize>> {
    fn go(pos: usize, left: usize, parts: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == parts {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let room = cap * (parts - pos - 1);
        for d in 0..=left.min(cap) {
            if left - d > room {
                continue;
            }
            cur.push(d);
            go(pos + 1, left - d, parts, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, total, parts, cap, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// An interval whose count differs from the required one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalFailure {
    pub interval: ElementaryInterval,
    pub count: u64,
    pub expected: u64,
}

/// Outcome of checking that every elementary interval of one volume holds
/// the same number of points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformityReport {
    pub volume_exponent: usize,
    pub expected: u64,
    pub holds: bool,
    pub failure: Option<IntervalFailure>,
    pub intervals_checked: u128,
    /// Some intervals of this volume need resolution above `r` and were not checked.
    pub unrepresentable_skipped: bool,
}

fn check_uniform(ps: &PointSet, total: usize, expected: u64) -> UniformityReport {
    let space = &ps.space;
    let q = space.q as u64;
    let mut report = UniformityReport {
        volume_exponent: total,
        expected,
        holds: true,
        failure: None,
        intervals_checked: 0,
        unrepresentable_skipped: space.n > 0 && total > space.r,
    };
    let per_vector = (space.q as u128).pow(total as u32);
    for res in compositions(total, space.n, space.r) {
        report.intervals_checked += per_vector;
        let divisors: Vec<u64> = res.iter().map(|&d| q.pow((space.r - d) as u32)).collect();
        let mut buckets: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
        for p in &ps.points {
            let key: Vec<u64> = p.iter().zip(&divisors).map(|(&x, &div)| x / div).collect();
            *buckets.entry(key).or_default() += 1;
        }
        if let Some((key, &count)) = buckets.iter().find(|(_, &c)| c != expected) {
            report.holds = false;
            report.failure = Some(IntervalFailure {
                interval: ElementaryInterval { resolutions: res.clone(), indices: key.clone() },
                count,
                expected,
            });
            return report;
        }
        if expected > 0 && (buckets.len() as u128) < per_vector {
            let missing = first_missing_index(&res, q, &buckets);
            report.holds = false;
            report.failure = Some(IntervalFailure {
                interval: ElementaryInterval { resolutions: res.clone(), indices: missing },
                count: 0,
                expected,
            });
            return report;
        }
    }
    report
}

/// Smallest (lexicographic) index vector absent from `present`.
fn first_missing_index(res: &[usize], q: u64, present: &BTreeMap<Vec<u64>, u64>) -> Vec<u64> {
    let limits: Vec<u64> = res.iter().map(|&d| q.pow(d as u32)).collect();
    let mut idx = vec![0u64; res.len()];
    loop {
        if !present.contains_key(&idx) {
            return idx;
        }
        let mut i = res.len();
        loop {
            if i == 0 {
                return idx;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < limits[i] {
                break;
            }
            idx[i] = 0;
        }
    }
}

/// Whether `ps` is a `(t, m, n)`-net in base q over the representable intervals.
pub fn verify_net(ps: &PointSet, t: usize, m: usize) -> Result<UniformityReport> {
    let q = ps.space.q as u128;
    if t > m {
        return Err(Error::Usage(format!("net parameters need t <= m (got t={t}, m={m})")));
    }
    if checked_pow(q as u64, m) != Some(ps.len() as u128) {
        return Err(Error::Usage(format!("a (t,{m},n)-net has q^{m} points, this set has {}", ps.len())));
    }
    let expected = (q as u64).pow(t as u32);
    Ok(check_uniform(ps, m - t, expected))
}

/// Whether every elementary interval of volume `q^{-k}` holds exactly one point.
pub fn verify_optimal_distribution(ps: &PointSet, k: usize) -> Result<UniformityReport> {
    if checked_pow(ps.space.q as u64, k) != Some(ps.len() as u128) {
        return Err(Error::Usage(format!("an [nr,{k}] distribution has q^{k} points, this set has {}", ps.len())));
    }
    Ok(check_uniform(ps, k, 1))
}

/// Points in the anchored box for one level vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchoredCount {
    pub levels: Vec<usize>,
    pub count: u64,
}

/// Checks for the two conditions characterizing ordered NMDS codes:
/// (1) every elementary interval of volume `q^{-(k-1)}` holds exactly `q`
/// points; (2) some anchored box `Π[0, q^{-l_i})` of volume `q^{-k}` holds
/// exactly `q` points and no anchored box of smaller volume does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionReport {
    pub q: u32,
    pub k: usize,
    /// `k = 1`: condition (1) concerns only the whole cube.
    pub degenerate: bool,
    pub part1: UniformityReport,
    /// Every anchored box of volume `q^{-k}` with its count.
    pub anchored_at_k: Vec<AnchoredCount>,
    /// First anchored box of volume below `q^{-k}` holding exactly `q` points.
    pub smaller_with_q: Option<AnchoredCount>,
    pub part2: bool,
    pub passed: bool,
}

fn anchored_count(ps: &PointSet, levels: &[usize]) -> u64 {
    let space = &ps.space;
    let limits: Vec<u64> = levels.iter().map(|&l| (space.q as u64).pow((space.r - l) as u32)).collect();
    ps.points.iter().filter(|p| p.iter().zip(&limits).all(|(&x, &lim)| x < lim)).count() as u64
}

pub fn verify_nmds_distribution(code: &LinearCode, budget: &Budget) -> Result<DistributionReport> {
    let k = code.k();
    if k == 0 {
        return Err(Error::Unsupported("distribution check of the zero code".into()));
    }
    let ps = code_to_points(code, budget)?;
    let space = *ps.space();
    let q = space.q as u64;
    let part1 = check_uniform(&ps, k - 1, q);
    let anchored_at_k: Vec<AnchoredCount> = compositions(k, space.n, space.r)
        .into_iter()
        .map(|levels| {
            let count = anchored_count(&ps, &levels);
            AnchoredCount { levels, count }
        })
        .collect();
    let mut smaller_with_q = None;
    'outer: for total in k + 1..=space.len() {
        for levels in compositions(total, space.n, space.r) {
            let count = anchored_count(&ps, &levels);
            if count == q {
                smaller_with_q = Some(AnchoredCount { levels, count });
                break 'outer;
            }
        }
    }
    let part2 = anchored_at_k.iter().any(|a| a.count == q) && smaller_with_q.is_none();
    Ok(DistributionReport {
        q: space.q,
        k,
        degenerate: k == 1,
        passed: part1.holds && part2,
        part1,
        anchored_at_k,
        smaller_with_q,
        part2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverCheck {
    /// Every vector of GF(q)^n was visited.
    Enumerated,
    /// Disjoint neighborhoods of size `q^|I|` each, counted against `q^n`.
    Counted,
}

/// The partition of a code into cosets of its subcode supported in `ideal`,
/// with the neighborhood properties of the parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    pub ideal: Ideal,
    /// Cosets, each a list of codewords, ordered by canonical representative.
    pub parts: Vec<Vec<Vec<u32>>>,
    /// Dimension of the subcode supported in `ideal`.
    pub kernel_dim: usize,
    /// Neighborhoods of distinct parts never meet.
    pub disjoint: bool,
    /// `q^{k-1}` equal parts with disjoint neighborhoods.
    pub is_tiling: bool,
    /// A tiling whose neighborhoods cover GF(q)^n.
    pub perfect: bool,
    pub cover_check: CoverCheck,
    /// Why the tiling or perfect property fails, if it does.
    pub note: Option<String>,
}

struct CodeCache {
    words: Vec<Vec<u32>>,
}

/// Partition `code` by the cosets of `C ∩ B_I` and test the neighborhoods.
pub fn verify_tiling(code: &LinearCode, ideal: &Ideal, budget: &Budget) -> Result<Tiling> {
    if code.k() < 2 {
        return Err(Error::Unsupported(format!(
            "tilings of a {}-dimensional code are degenerate (need k >= 2)",
            code.k()
        )));
    }
    let cache = CodeCache { words: code.codewords(budget)? };
    tiling_with(code, &cache, ideal, budget)
}

fn tiling_with(code: &LinearCode, cache: &CodeCache, ideal: &Ideal, budget: &Budget) -> Result<Tiling> {
    let poset = code.poset();
    let ideal = poset.ideal(ideal.set())?;
    let (n, k, q) = (code.n(), code.k(), code.q());
    let f = code.field();

    // Subcode supported in I, embedded in full length and row-reduced.
    let cols: Vec<usize> = ideal.set().iter().collect();
    let local = code.parity_check().select_columns(&cols).null_space();
    let mut embedded = Matrix::zeros(f, local.rows(), n);
    for r in 0..local.rows() {
        for (j, &c) in cols.iter().enumerate() {
            embedded.set(r, c, local.get(r, j));
        }
    }
    let (kernel, pivots) = embedded.rref();
    let kernel_dim = kernel.rows();

    let mut cosets: BTreeMap<Vec<u32>, Vec<Vec<u32>>> = BTreeMap::new();
    for w in &cache.words {
        let mut rep = w.clone();
        for (r, &p) in pivots.iter().enumerate() {
            let factor = rep[p];
            if factor != 0 {
                for (x, &kv) in rep.iter_mut().zip(kernel.row(r)) {
                    *x = f.sub(*x, f.mul(factor, kv));
                }
            }
        }
        cosets.entry(rep).or_default().push(w.clone());
    }
    let parts: Vec<Vec<Vec<u32>>> = cosets.into_values().collect();

    // Neighborhood of a part = all vectors agreeing with one of its words off I.
    let outside: Vec<usize> = CoordSet::full(n).difference(ideal.set()).iter().collect();
    let mut owner: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut note = None;
    let mut disjoint = true;
    for (idx, part) in parts.iter().enumerate() {
        for w in part {
            let key: Vec<u32> = outside.iter().map(|&c| w[c]).collect();
            match owner.get(&key) {
                Some(&other) if other != idx => {
                    if disjoint {
                        note = Some(format!("neighborhoods of parts {} and {} share {:?} off the ideal", other + 1, idx + 1, key));
                    }
                    disjoint = false;
                }
                Some(_) => {}
                None => {
                    owner.insert(key, idx);
                }
            }
        }
    }
    let wanted_parts = checked_pow(q as u64, k - 1).unwrap_or(u128::MAX);
    let equal = parts.iter().all(|p| p.len() == parts[0].len());
    let is_tiling = disjoint && equal && parts.len() as u128 == wanted_parts;
    if disjoint && !is_tiling {
        note = Some(format!(
            "subcode supported in the ideal has dimension {kernel_dim}, giving {} parts instead of q^(k-1) = {wanted_parts}",
            parts.len()
        ));
    }

    let space_size = checked_pow(q as u64, n);
    let (covers, cover_check) = match space_size {
        Some(total) if total <= COVER_ENUMERATION_LIMIT && total <= budget.max_enum as u128 => {
            let mut v = vec![0u32; n];
            let mut all_once = true;
            'vectors: loop {
                let key: Vec<u32> = outside.iter().map(|&c| v[c]).collect();
                // each key has one owner; with overlapping neighborhoods the
                // disjointness flag already fails
                if !owner.contains_key(&key) {
                    all_once = false;
                    break 'vectors;
                }
                let mut i = 0;
                loop {
                    if i == n {
                        break 'vectors;
                    }
                    v[i] += 1;
                    if v[i] < q {
                        break;
                    }
                    v[i] = 0;
                    i += 1;
                }
            }
            (all_once, CoverCheck::Enumerated)
        }
        _ => {
            let reach = checked_pow(q as u64, ideal.len()).map(|b| b * owner.len() as u128);
            (reach.is_some() && reach == space_size, CoverCheck::Counted)
        }
    };
    let perfect = is_tiling && covers;
    if is_tiling && !covers {
        note = Some("neighborhoods do not cover GF(q)^n".into());
    }
    Ok(Tiling { ideal, parts, kernel_dim, disjoint, is_tiling, perfect, cover_check, note })
}

/// Checks for the tiling characterization of NMDS codes: (1) a perfect
/// tiling for every ideal of size `n-k+1`; (2) a tiling for some ideal of
/// size `n-k` and for no smaller ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingReport {
    pub imperfect: Option<Ideal>,
    pub witness: Option<Ideal>,
    pub smaller: Option<Ideal>,
    pub part1: bool,
    pub part2: bool,
    pub holds: bool,
}

pub fn tiling_characterization(code: &LinearCode, budget: &Budget) -> Result<TilingReport> {
    let (n, k) = (code.n(), code.k());
    if k < 2 || k >= n {
        return Err(Error::Unsupported(format!("tiling characterization needs 2 <= k < n, got k={k}, n={n}")));
    }
    let cache = CodeCache { words: code.codewords(budget)? };
    let poset = code.poset();
    let mut imperfect = None;
    for ideal in poset.ideals_of_size(n - k + 1) {
        if !tiling_with(code, &cache, &ideal, budget)?.perfect {
            imperfect = Some(ideal);
            break;
        }
    }
    let mut witness = None;
    for ideal in poset.ideals_of_size(n - k) {
        if tiling_with(code, &cache, &ideal, budget)?.is_tiling {
            witness = Some(ideal);
            break;
        }
    }
    let mut smaller = None;
    'sizes: for s in 0..n - k {
        for ideal in poset.ideals_of_size(s) {
            if tiling_with(code, &cache, &ideal, budget)?.is_tiling {
                smaller = Some(ideal);
                break 'sizes;
            }
        }
    }
    let part1 = imperfect.is_none();
    let part2 = witness.is_some() && smaller.is_none();
    Ok(TilingReport { imperfect, witness, smaller, part1, part2, holds: part1 && part2 })
}

impl fmt::Display for CoverCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverCheck::Enumerated => "enumerated",
            CoverCheck::Counted => "counted",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ordered::chain_product_poset;
    use crate::poset::Poset;

    fn code(q: u32, poset: Poset, rows: &[Vec<u32>]) -> LinearCode {
        let n = poset.len();
        LinearCode::new(poset, Matrix::from_rows(PrimeField::new(q).unwrap(), n, rows).unwrap()).unwrap()
    }

    fn ordered_422() -> LinearCode {
        code(2, chain_product_poset(2, 2).unwrap(), &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]])
    }

    fn diagonal_points() -> PointSet {
        code_to_points(&ordered_422(), &Budget::default()).unwrap()
    }

    #[test]
    fn point_map_examples() {
        assert_eq!(block_numerator(&[1, 1], 2), 3);
        assert_eq!(block_numerator(&[0, 1, 2], 3), 3 + 2 * 9);
        let ps = diagonal_points();
        assert_eq!(ps.denominator(), 4);
        let mut pts = ps.points().to_vec();
        pts.sort();
        assert_eq!(pts, vec![vec![0, 0], vec![1, 1], vec![2, 2], vec![3, 3]]);
        assert!(ps.points().contains(&vec![0, 0]));
    }

    #[test]
    fn interval_count_examples() {
        let ps = diagonal_points();
        assert_eq!(interval_count(&ps, &ElementaryInterval::anchored(&[1, 1])).unwrap(), 2);
        assert_eq!(interval_count(&ps, &ElementaryInterval::anchored(&[0, 0])).unwrap(), 4);
        assert_eq!(interval_count(&ps, &ElementaryInterval::anchored(&[2, 0])).unwrap(), 1);
        let e = ElementaryInterval::new(vec![1, 1], vec![1, 1]).unwrap();
        assert_eq!(interval_count(&ps, &e).unwrap(), 2);
        assert!(matches!(
            interval_count(&ps, &ElementaryInterval::anchored(&[3, 0])),
            Err(Error::Unsupported(_))
        ));
        assert!(interval_count(&ps, &ElementaryInterval::new(vec![1, 0], vec![2, 0]).unwrap()).is_err());
    }

    #[test]
    fn interval_mass_is_conserved() {
        let ps = diagonal_points();
        for res in compositions(2, 2, 2) {
            let mut total = 0;
            for a0 in 0..2u64.pow(res[0] as u32) {
                for a1 in 0..2u64.pow(res[1] as u32) {
                    let e = ElementaryInterval::new(res.clone(), vec![a0, a1]).unwrap();
                    total += interval_count(&ps, &e).unwrap();
                }
            }
            assert_eq!(total, 4);
        }
    }

    #[test]
    fn compositions_respect_cap() {
        assert_eq!(compositions(2, 2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(compositions(3, 2, 1), Vec::<Vec<usize>>::new());
        assert_eq!(compositions(0, 3, 2), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn nmds_distribution_example() {
        let report = verify_nmds_distribution(&ordered_422(), &Budget::default()).unwrap();
        assert!(report.part1.holds);
        assert_eq!(report.part1.intervals_checked, 4);
        let counts: Vec<(Vec<usize>, u64)> = report.anchored_at_k.iter().map(|a| (a.levels.clone(), a.count)).collect();
        assert_eq!(counts, vec![(vec![0, 2], 1), (vec![1, 1], 2), (vec![2, 0], 1)]);
        assert!(report.smaller_with_q.is_none());
        assert!(report.passed);
    }

    #[test]
    fn optimal_distribution_and_nets() {
        let ps = diagonal_points();
        let opt = verify_optimal_distribution(&ps, 2).unwrap();
        assert!(!opt.holds);
        let fail = opt.failure.unwrap();
        assert_eq!(fail.count, 2);

        // ordered [4,2,3] MDS code
        let mds = code(2, chain_product_poset(2, 2).unwrap(), &[vec![1, 0, 0, 1], vec![0, 1, 1, 0]]);
        assert_eq!(mds.classify(&Budget::default()).unwrap().class, crate::code::CodeClass::Mds);
        let ps = code_to_points(&mds, &Budget::default()).unwrap();
        assert!(verify_optimal_distribution(&ps, 2).unwrap().holds);
        let report = verify_nmds_distribution(&mds, &Budget::default()).unwrap();
        assert!(!report.part2 && !report.passed);

        let single = PointSet::new(OrderedSpace::new(2, 2, 2).unwrap(), vec![vec![1, 3]]).unwrap();
        assert!(verify_net(&single, 0, 0).unwrap().holds);
        assert!(verify_optimal_distribution(&single, 0).unwrap().holds);

        let lumpy = PointSet::new(OrderedSpace::new(2, 2, 2).unwrap(), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]).unwrap();
        let net = verify_net(&lumpy, 0, 2).unwrap();
        assert!(!net.holds);
        assert!(net.failure.is_some());
        assert!(verify_net(&lumpy, 0, 3).is_err());
    }

    #[test]
    fn tiling_examples() {
        let b = Budget::default();
        let c = code(2, Poset::antichain(4).unwrap(), &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]);
        let i = c.poset().ideal(CoordSet::from_labels(&[1, 2, 3])).unwrap();
        let t = verify_tiling(&c, &i, &b).unwrap();
        assert_eq!(t.parts, vec![vec![vec![0, 0, 0, 0], vec![1, 1, 0, 0]], vec![vec![0, 0, 1, 1], vec![1, 1, 1, 1]]]);
        assert!(t.is_tiling && t.perfect);
        assert_eq!(t.cover_check, CoverCheck::Enumerated);

        let i = c.poset().ideal(CoordSet::from_labels(&[1])).unwrap();
        let t = verify_tiling(&c, &i, &b).unwrap();
        assert!(!t.is_tiling && !t.perfect);

        let o = ordered_422();
        for i in o.poset().ideals_of_size(3) {
            assert!(verify_tiling(&o, &i, &b).unwrap().perfect, "ideal {i}");
        }
        assert!(tiling_characterization(&o, &b).unwrap().holds);
        assert!(tiling_characterization(&c, &b).unwrap().holds);
    }

    #[test]
    fn tiling_rejects_k1() {
        let c = code(2, Poset::chain(3).unwrap(), &[vec![0, 1, 0]]);
        let i = c.poset().ideal(CoordSet::from_labels(&[1, 2])).unwrap();
        assert!(matches!(verify_tiling(&c, &i, &Budget::default()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn csv_export() {
        let ps = diagonal_points();
        let csv = ps.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("x1,x2"));
        assert_eq!(lines.next(), Some("0/4 0.000000000000,0/4 0.000000000000"));
        assert!(csv.contains("3/4 0.750000000000,3/4 0.750000000000"));
        assert_eq!(decimal12(1, 3), "0.333333333333");
        assert_eq!(decimal12(2, 3), "0.666666666667");
    }
}
