//! The ordered Hamming (NRT) space: `n` disjoint chains of length `r`.
//!
//! Coordinate `(i, j)` (block `i`, height `j`, both 1-based, `j = 1` at the
//! bottom of the chain) has label `(i - 1) * r + j`, i.e. 0-based index
//! `(i - 1) * r + (j - 1)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poset::{CoordSet, Ideal, Poset, MAX_ELEMS};

/// Binomial coefficient, zero when `b < 0` or `b > a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// `total! / (parts[0]! * parts[1]! * ...)`; zero if the parts do not sum to `total`.
pub fn multinomial(total: usize, parts: &[usize]) -> BigInt {
    if parts.iter().sum::<usize>() != total {
        return BigInt::zero();
    }
    let mut remaining = total as i64;
    let mut acc = BigInt::one();
    for &p in parts {
        acc *= binom(remaining, p as i64);
        remaining -= p as i64;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrderedSpace {
    pub n: usize,
    pub r: usize,
    pub q: u32,
}

impl OrderedSpace {
    pub fn new(n: usize, r: usize, q: u32) -> Result<Self> {
        if n == 0 || r == 0 {
            return Err(Error::Usage(format!("ordered space needs n, r >= 1 (got n={n}, r={r})")));
        }
        if n * r > MAX_ELEMS {
            return Err(Error::Resource {
                what: "coordinates".into(),
                needed: (n * r).to_string(),
                bound: MAX_ELEMS as u64,
            });
        }
        Ok(Self { n, r, q })
    }

    /// Total number of coordinates, `n * r`.
    pub fn len(&self) -> usize {
        self.n * self.r
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 0-based index of block `block` (0-based), height `height` (1-based).
    pub fn index(&self, block: usize, height: usize) -> usize {
        block * self.r + height - 1
    }

    pub fn poset(&self) -> Poset {
        chain_product_poset(self.n, self.r).expect("dimensions checked at construction")
    }

    /// Detect whether `poset` is exactly a chain product under the fixed labeling.
    pub fn recognize(poset: &Poset, q: u32) -> Option<OrderedSpace> {
        let total = poset.len();
        (1..=total)
            .filter(|r| total % r == 0)
            .find(|&r| chain_product_poset(total / r, r).map_or(false, |p| &p == poset))
            .map(|r| OrderedSpace { n: total / r, r, q })
    }

    /// Height of the ideal inside each block.
    fn block_heights(&self, set: CoordSet) -> Result<Vec<usize>> {
        let block_mask = if self.r >= 64 { u64::MAX } else { (1u64 << self.r) - 1 };
        (0..self.n)
            .map(|b| {
                let bits = (set.bits() >> (b * self.r)) & block_mask;
                let h = bits.count_ones() as usize;
                let prefix = if h >= 64 { u64::MAX } else { (1u64 << h) - 1 };
                if bits != prefix {
                    return Err(Error::Usage(format!(
                        "{set} is not an ideal of the {}x{} chain product",
                        self.n, self.r
                    )));
                }
                Ok(h)
            })
            .collect()
    }

    pub fn shape_of(&self, ideal: &Ideal) -> Result<Shape> {
        self.shape_of_set(ideal.set())
    }

    /// Shape of an arbitrary coordinate set, which must be downward closed.
    pub fn shape_of_set(&self, set: CoordSet) -> Result<Shape> {
        if !set.is_subset(&CoordSet::full(self.len())) {
            return Err(Error::Usage(format!("{set} exceeds {} coordinates", self.len())));
        }
        let mut counts = vec![0usize; self.r];
        for h in self.block_heights(set)? {
            if h > 0 {
                counts[h - 1] += 1;
            }
        }
        Ok(Shape { counts, n: self.n })
    }

    /// Shape of a vector: per block, the height of its top nonzero entry.
    pub fn shape_of_vector(&self, x: &[u32]) -> Result<Shape> {
        if x.len() != self.len() {
            return Err(Error::Usage(format!("vector length {} != {}", x.len(), self.len())));
        }
        let mut counts = vec![0usize; self.r];
        for block in x.chunks(self.r) {
            if let Some(top) = block.iter().rposition(|&v| v != 0) {
                counts[top] += 1;
            }
        }
        Ok(Shape { counts, n: self.n })
    }

    /// All shapes of ordered weight `s`, largest `e_1` first (reverse
    /// lexicographic on `(e_1, ..., e_r)`).
    pub fn shapes(&self, s: usize) -> Vec<Shape> {
        let mut out = Vec::new();
        let mut counts = vec![0usize; self.r];
        self.fill_shapes(0, s, self.n, &mut counts, &mut out);
        out
    }

    fn fill_shapes(&self, pos: usize, weight_left: usize, blocks_left: usize, counts: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if pos == self.r {
            if weight_left == 0 {
                out.push(Shape { counts: counts.clone(), n: self.n });
            }
            return;
        }
        let height = pos + 1;
        let max = blocks_left.min(weight_left / height);
        for c in (0..=max).rev() {
            counts[pos] = c;
            self.fill_shapes(pos + 1, weight_left - c * height, blocks_left - c, counts, out);
        }
        counts[pos] = 0;
    }

    /// Number of ideals `I` with `|I| = s` and `I \ Ω(I) ⊆ J ⊆ I` for any
    /// fixed ideal `J` of shape `e`, as the product-of-binomials sum over
    /// shapes `f` with `|f|' = s`.
    pub fn count_n_s(&self, e: &Shape, s: usize) -> Result<BigInt> {
        if e.counts.len() != self.r || e.n != self.n {
            return Err(Error::Usage(format!("shape {e} does not belong to this space")));
        }
        if s < e.weight() || s > self.len() {
            return Err(Error::Usage(format!(
                "target size {s} outside {}..={}",
                e.weight(),
                self.len()
            )));
        }
        let r = self.r;
        let mut total = BigInt::zero();
        for f in self.shapes(s) {
            let mut term = BigInt::one();
            let (mut f_tail, mut e_tail) = (0i64, 0i64);
            // level j: blocks of height j in J that grow to height j + 1 in I
            for j in (0..r).rev() {
                f_tail += f.counts[j] as i64;
                e_tail += e.counts[j] as i64;
                let available = if j == 0 { e.e0() } else { e.counts[j - 1] } as i64;
                term *= binom(available, f_tail - e_tail);
                if term.is_zero() {
                    break;
                }
            }
            total += term;
        }
        Ok(total)
    }
}

/// Block counts `(e_1, ..., e_r)`: `e_j` blocks whose top nonzero height is `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    counts: Vec<usize>,
    n: usize,
}

impl Shape {
    pub fn new(counts: Vec<usize>, n: usize) -> Result<Self> {
        if counts.iter().sum::<usize>() > n {
            return Err(Error::Usage(format!("shape {counts:?} has more than {n} blocks")));
        }
        Ok(Self { counts, n })
    }

    pub fn zero(space: &OrderedSpace) -> Self {
        Self { counts: vec![0; space.r], n: space.n }
    }

    /// `(e_1, ..., e_r)`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `e_0 = n - |e|`, the empty blocks.
    pub fn e0(&self) -> usize {
        self.n - self.size()
    }

    /// `|e|`: number of nonempty blocks.
    pub fn size(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `|e|' = Σ j e_j`: the ordered weight.
    pub fn weight(&self) -> usize {
        self.counts.iter().enumerate().map(|(j, &c)| (j + 1) * c).sum()
    }

    /// Number of ideals with this shape: `n! / (e_0! e_1! ... e_r!)`.
    pub fn multiplicity(&self) -> BigInt {
        let mut parts = vec![self.e0()];
        parts.extend_from_slice(&self.counts);
        multinomial(self.n, &parts)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Disjoint union of `n` chains of length `r` under the block-major labeling.
pub fn chain_product_poset(n: usize, r: usize) -> Result<Poset> {
    if n == 0 || r == 0 {
        return Err(Error::Usage(format!("chain product needs n, r >= 1 (got n={n}, r={r})")));
    }
    if n * r > MAX_ELEMS {
        return Err(Error::Resource {
            what: "coordinates".into(),
            needed: (n * r).to_string(),
            bound: MAX_ELEMS as u64,
        });
    }
    let relations: Vec<_> = (0..n)
        .flat_map(|b| (1..r).map(move |j| (b * r + j - 1, b * r + j)))
        .collect();
    Poset::from_covers(n * r, &relations)
}
