//! Finite posets on the coordinate set, with bitset ideals.
//!
//! Coordinates are 0-based indices in the library API and 1-based labels in
//! every text format and in `Display` output. A poset has at most 64
//! elements so that every subset of coordinates fits in one `u64`.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on the number of coordinates.
pub const MAX_ELEMS: usize = 64;

/// A set of coordinates, bit `i` standing for coordinate `i` (label `i + 1`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordSet(pub u64);

impl CoordSet {
    pub const EMPTY: CoordSet = CoordSet(0);

    pub fn full(n: usize) -> Self {
        CoordSet(low_mask(n))
    }

    pub fn singleton(i: usize) -> Self {
        CoordSet(1u64 << i)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        CoordSet(indices.iter().fold(0u64, |acc, &i| acc | (1u64 << i)))
    }

    /// Build from 1-based labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        CoordSet(labels.iter().fold(0u64, |acc, &l| acc | (1u64 << (l - 1))))
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn union(self, other: Self) -> Self {
        CoordSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        CoordSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        CoordSet(self.0 & !other.0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn labels(&self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, l) in self.labels().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A downward-closed set of coordinates. Only obtainable through a [`Poset`],
/// which checks closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal(CoordSet);

impl Ideal {
    pub fn set(&self) -> CoordSet {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A partial order on coordinates `0..n`, stored as dense down-sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// `down[i]` = { j : j <= i }, including `i`.
    down: Vec<u64>,
    up: Vec<u64>,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Reflexive-transitive closure of the given relations `(lo, hi)`, meaning
    /// `lo < hi`. Indices are 0-based. The pairs need not be covers.
    pub fn from_covers(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ELEMS {
            return Err(Error::Unsupported(format!(
                "posets are limited to {MAX_ELEMS} elements, got {n}"
            )));
        }
        let mut down: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for &(lo, hi) in relations {
            if lo >= n || hi >= n {
                return Err(Error::Usage(format!(
                    "relation {} < {} uses a label outside 1..={n}",
                    lo + 1,
                    hi + 1
                )));
            }
            if lo == hi {
                return Err(Error::InvalidPoset(format!(
                    "relation {} < {} is a cycle",
                    lo + 1,
                    hi + 1
                )));
            }
            down[hi] |= 1u64 << lo;
        }
        for k in 0..n {
            let dk = down[k];
            for d in down.iter_mut() {
                if *d >> k & 1 == 1 {
                    *d |= dk;
                }
            }
        }
        for i in 0..n {
            let others = down[i] & !(1u64 << i);
            for j in CoordSet(others).iter() {
                if down[j] >> i & 1 == 1 {
                    return Err(Error::InvalidPoset(format!(
                        "relations contain a cycle through {} and {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self::from_down_sets(down))
    }

    /// `down` must already be a valid reflexive, transitive, antisymmetric relation.
    fn from_down_sets(down: Vec<u64>) -> Self {
        let n = down.len();
        let mut up = vec![0u64; n];
        for (i, &d) in down.iter().enumerate() {
            for j in CoordSet(d).iter() {
                up[j] |= 1u64 << i;
            }
        }
        let mut covers = Vec::new();
        for hi in 0..n {
            for lo in CoordSet(down[hi] & !(1u64 << hi)).iter() {
                let between = down[hi] & up[lo] & !(1u64 << hi) & !(1u64 << lo);
                if between == 0 {
                    covers.push((lo, hi));
                }
            }
        }
        covers.sort_unstable();
        Self { n, down, up, covers }
    }

    /// `n` pairwise incomparable coordinates (the Hamming order).
    pub fn antichain(n: usize) -> Result<Self> {
        Self::from_covers(n, &[])
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Result<Self> {
        let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_covers(n, &rel)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `i <= j` in this order.
    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.down[j] >> i & 1 == 1
    }

    #[inline]
    pub fn down_set(&self, i: usize) -> CoordSet {
        CoordSet(self.down[i])
    }

    #[inline]
    pub fn up_set(&self, i: usize) -> CoordSet {
        CoordSet(self.up[i])
    }

    /// Hasse diagram edges `(lo, hi)`, 0-based, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_antichain(&self) -> bool {
        self.covers.is_empty()
    }

    /// Smallest ideal containing `set`.
    pub fn closure(&self, set: CoordSet) -> Ideal {
        let mut acc = 0u64;
        for i in set.iter() {
            acc |= self.down[i];
        }
        Ideal(CoordSet(acc))
    }

    /// Size of the smallest ideal containing `set`, without building it.
    #[inline]
    pub fn closure_len(&self, set: u64) -> usize {
        let mut acc = 0u64;
        let mut bits = set;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            acc |= self.down[i];
            bits &= bits - 1;
        }
        acc.count_ones() as usize
    }

    pub fn is_ideal(&self, set: CoordSet) -> bool {
        set.is_subset(&CoordSet::full(self.n)) && set.iter().all(|i| self.down[i] & !set.0 == 0)
    }

    pub fn ideal(&self, set: CoordSet) -> Result<Ideal> {
        if !set.is_subset(&CoordSet::full(self.n)) {
            return Err(Error::Usage(format!("{set} is not a subset of 1..={}", self.n)));
        }
        if !self.is_ideal(set) {
            return Err(Error::Usage(format!("{set} is not downward closed")));
        }
        Ok(Ideal(set))
    }

    pub fn full_ideal(&self) -> Ideal {
        Ideal(CoordSet::full(self.n))
    }

    /// The same coordinates with every relation reversed.
    pub fn dual(&self) -> Poset {
        Self::from_down_sets(self.up.clone())
    }

    /// Maximal elements of `ideal` and the ideal left after removing them.
    pub fn maximal_elements(&self, ideal: &Ideal) -> (CoordSet, Ideal) {
        let members = ideal.0;
        let omega = members
            .iter()
            .filter(|&i| self.up[i] & members.0 == 1u64 << i)
            .fold(0u64, |acc, i| acc | (1u64 << i));
        (CoordSet(omega), Ideal(CoordSet(members.0 & !omega)))
    }

    /// Every ideal, in increasing order of its bitset value.
    pub fn ideals(&self) -> Ideals<'_> {
        Ideals::new(self, None, CoordSet::full(self.n))
    }

    /// Every ideal of cardinality `size`, in increasing bitset order.
    pub fn ideals_of_size(&self, size: usize) -> Ideals<'_> {
        Ideals::new(self, Some(size), CoordSet::full(self.n))
    }

    /// Ideals of cardinality `size` contained in `within`.
    pub fn ideals_of_size_within(&self, size: usize, within: &Ideal) -> Ideals<'_> {
        Ideals::new(self, Some(size), within.0)
    }

    /// The induced order on all coordinates except `coord`; survivors are
    /// renumbered keeping their relative order.
    pub fn without(&self, coord: usize) -> Result<Poset> {
        if coord >= self.n {
            return Err(Error::Usage(format!("coordinate {} out of range", coord + 1)));
        }
        let down = (0..self.n)
            .filter(|&i| i != coord)
            .map(|i| remove_bit(self.down[i], coord))
            .collect();
        Ok(Self::from_down_sets(down))
    }

    /// Parse the poset text format: `n=<int>` then one `<lo> < <hi>` per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut relations = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            match n {
                None => {
                    let value = line
                        .strip_prefix("n=")
                        .ok_or_else(|| Error::parse(line_no, "expected `n=<int>`"))?;
                    let parsed: usize = value
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(line_no, format!("bad element count `{value}`")))?;
                    if parsed > MAX_ELEMS {
                        return Err(Error::parse(
                            line_no,
                            format!("n={parsed} exceeds the {MAX_ELEMS}-element cap"),
                        ));
                    }
                    n = Some(parsed);
                }
                Some(n) => {
                    let (lo, hi) = line
                        .split_once('<')
                        .ok_or_else(|| Error::parse(line_no, "expected `<lo> < <hi>`"))?;
                    let parse_label = |s: &str| -> Result<usize> {
                        let v: usize = s
                            .trim()
                            .parse()
                            .map_err(|_| Error::parse(line_no, format!("bad label `{}`", s.trim())))?;
                        if v == 0 || v > n {
                            return Err(Error::parse(
                                line_no,
                                format!("label {v} outside 1..={n}"),
                            ));
                        }
                        Ok(v - 1)
                    };
                    relations.push((parse_label(lo)?, parse_label(hi)?));
                }
            }
        }
        let n = n.ok_or_else(|| Error::parse(1, "missing `n=<int>` header"))?;
        Self::from_covers(n, &relations)
    }

    /// Render in the poset text format (Hasse edges only).
    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for &(lo, hi) in &self.covers {
            out.push_str(&format!("{} < {}\n", lo + 1, hi + 1));
        }
        out
    }
}

#[inline]
pub(crate) fn remove_bit(x: u64, bit: usize) -> u64 {
    let low = x & low_mask(bit);
    let high = if bit >= 63 { 0 } else { (x >> (bit + 1)) << bit };
    low | high
}

/// Depth-first ideal generator. At each step the highest undecided coordinate
/// is excluded first, then included, so ideals come out in increasing bitset
/// order. Including a coordinate forces its down-set in, excluding forces its
/// up-set out.
pub struct Ideals<'a> {
    poset: &'a Poset,
    target: Option<usize>,
    universe: u64,
    stack: Vec<(u64, u64)>,
}

impl<'a> Ideals<'a> {
    fn new(poset: &'a Poset, target: Option<usize>, within: CoordSet) -> Self {
        let universe = low_mask(poset.n);
        let excluded = universe & !within.0;
        let stack = match target {
            Some(s) if s > within.len() => Vec::new(),
            _ => vec![(0u64, excluded)],
        };
        Self { poset, target, universe, stack }
    }
}

impl Iterator for Ideals<'_> {
    type Item = Ideal;

    fn next(&mut self) -> Option<Ideal> {
        while let Some((inc, exc)) = self.stack.pop() {
            let included = inc.count_ones() as usize;
            if let Some(s) = self.target {
                let available = self.poset.n - exc.count_ones() as usize;
                if included > s || available < s {
                    continue;
                }
            }
            let undecided = self.universe & !(inc | exc);
            if undecided == 0 {
                if self.target.map_or(true, |s| s == included) {
                    return Some(Ideal(CoordSet(inc)));
                }
                continue;
            }
            let i = 63 - undecided.leading_zeros() as usize;
            let with = inc | self.poset.down[i];
            if with & exc == 0 {
                self.stack.push((with, exc));
            }
            let without = exc | self.poset.up[i];
            if without & inc == 0 {
                self.stack.push((inc, without));
            }
        }
        None
    }
}
