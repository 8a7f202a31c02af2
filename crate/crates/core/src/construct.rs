//! Explicit NMDS generator matrices in the ordered Hamming space for
//! `n = 1, 2, 3`, and a seeded random search for NMDS codes in any poset.
//!
//! Block column `j` (1-based) is height `j` in its chain, so a vector of
//! l.a. weight `w` has its last nonzero entry at column `w`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::Budget;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::ordered::chain_product_poset;
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    N1,
    N2,
    N3,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n1" => Ok(Family::N1),
            "n2" => Ok(Family::N2),
            "n3" => Ok(Family::N3),
            other => Err(Error::Usage(format!("unknown family {other:?} (expected n1, n2 or n3)"))),
        }
    }
}

/// Parameters of one explicit construction. Free entries (the matrix `M`
/// and the low entries of `x`, `u`, `v`, `w`) are zero and the prescribed
/// pivots are 1 unless a seed is given, in which case free entries are
/// uniform and pivots uniform nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub family: Family,
    pub q: u32,
    pub r: usize,
    /// Dimension for `n1`.
    pub k: usize,
    /// Block dimensions for `n2`.
    pub k1: usize,
    pub k2: usize,
    pub seed: Option<u64>,
}

impl ConstructionSpec {
    pub fn n1(q: u32, r: usize, k: usize) -> Self {
        Self { family: Family::N1, q, r, k, k1: 0, k2: 0, seed: None }
    }

    pub fn n2(q: u32, r: usize, k1: usize, k2: usize) -> Self {
        Self { family: Family::N2, q, r, k: k1 + k2, k1, k2, seed: None }
    }

    pub fn n3(q: u32, r: usize) -> Self {
        Self { family: Family::N3, q, r, k: 6, k1: 0, k2: 0, seed: None }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn build(&self, budget: &Budget) -> Result<LinearCode> {
        let field = PrimeField::new(self.q)?;
        let mut fill = Filler::new(field, self.seed);
        match self.family {
            Family::N1 => {
                if self.k == 0 || self.k >= self.r {
                    return Err(Error::Unsupported(format!("n1 needs 1 <= k <= r-1, got k={}, r={}", self.k, self.r)));
                }
                let d = self.r - self.k;
                let x = fill.vector(d, d);
                let m = fill.matrix(self.k - 1, d);
                construct_n1(self.q, self.r, self.k, &x, &m, budget)
            }
            Family::N2 => {
                check_n2(self.r, self.k1, self.k2)?;
                let u = fill.vector(self.r, self.r - self.k1);
                let v = fill.vector(self.r, self.r - self.k2);
                construct_n2(self.q, self.r, self.k1, self.k2, &u, &v, budget)
            }
            Family::N3 => {
                check_n3(self.q, self.r)?;
                let u = fill.vector(self.r, self.r - 2);
                let v = fill.vector(self.r, self.r - 2);
                let w = fill.vector(self.r, self.r - 2);
                construct_n3(self.q, self.r, &u, &v, &w, budget)
            }
        }
    }
}

struct Filler {
    field: PrimeField,
    rng: Option<ChaCha8Rng>,
}

impl Filler {
    fn new(field: PrimeField, seed: Option<u64>) -> Self {
        Self { field, rng: seed.map(ChaCha8Rng::seed_from_u64) }
    }

    fn free(&mut self) -> u32 {
        let q = self.field.order();
        self.rng.as_mut().map_or(0, |g| g.gen_range(0..q))
    }

    fn pivot(&mut self) -> u32 {
        let q = self.field.order();
        self.rng.as_mut().map_or(1, |g| g.gen_range(1..q))
    }

    /// Length `len`, l.a. weight exactly `weight`.
    fn vector(&mut self, len: usize, weight: usize) -> Vec<u32> {
        let mut v = vec![0; len];
        if weight > 0 {
            for x in &mut v[..weight - 1] {
                *x = self.free();
            }
            v[weight - 1] = self.pivot();
        }
        v
    }

    fn matrix(&mut self, rows: usize, cols: usize) -> Vec<Vec<u32>> {
        (0..rows).map(|_| (0..cols).map(|_| self.free()).collect()).collect()
    }
}

/// Last nonzero position (1-based), 0 for the zero vector.
fn la_weight(x: &[u32]) -> usize {
    x.iter().rposition(|&c| c != 0).map_or(0, |p| p + 1)
}

fn expect_vector(name: &str, x: &[u32], len: usize, weight: usize) -> Result<()> {
    if x.len() != len {
        return Err(Error::Usage(format!("{name} has length {}, expected {len}", x.len())));
    }
    let got = la_weight(x);
    if got != weight {
        return Err(Error::Usage(format!("{name} has l.a. weight {got}, expected {weight}")));
    }
    Ok(())
}

/// `k x r` generator
/// ```text
/// [ x_1 .. x_d  0  0       ]
/// [ M           0  I_{k-1} ]
/// ```
/// with `d = r - k`, `x_d != 0` and `M` any `(k-1) x d` matrix.
pub fn construct_n1(q: u32, r: usize, k: usize, x: &[u32], m: &[Vec<u32>], budget: &Budget) -> Result<LinearCode> {
    let field = PrimeField::new(q)?;
    if k == 0 || k >= r {
        return Err(Error::Unsupported(format!("n1 needs 1 <= k <= r-1, got k={k}, r={r}")));
    }
    let d = r - k;
    expect_vector("x", x, d, d)?;
    if m.len() != k - 1 || m.iter().any(|row| row.len() != d) {
        return Err(Error::Usage(format!("M must be {}x{d}", k - 1)));
    }
    let mut g = Matrix::zeros(field, k, r);
    for (j, &c) in x.iter().enumerate() {
        g.set(0, j, field.reduce(c as i64));
    }
    for i in 1..k {
        for (j, &c) in m[i - 1].iter().enumerate() {
            g.set(i, j, field.reduce(c as i64));
        }
        g.set(i, d + i, 1);
    }
    finish(chain_product_poset(1, r)?, g, "n1", budget)
}

/// Rows of `E_r(i, j)`: an `(i-1) x (r-j-1)` matrix holding an
/// inverse-diagonal block, top-aligned when `i + j > r`, right-aligned otherwise.
fn e_block(r: usize, i: usize, j: usize) -> Vec<Vec<u32>> {
    let (rows, cols) = (i - 1, r - j - 1);
    let mut e = vec![vec![0u32; cols]; rows];
    if i + j > r {
        // D_{cols} on top of (i+j-r) zero rows
        for (a, row) in e.iter_mut().enumerate().take(cols) {
            row[cols - 1 - a] = 1;
        }
    } else {
        // [0 | D_{i-1}], the zero block having r-i-j columns
        let off = r - i - j;
        for (a, row) in e.iter_mut().enumerate() {
            row[off + rows - 1 - a] = 1;
        }
    }
    e
}

fn check_n2(r: usize, k1: usize, k2: usize) -> Result<()> {
    // each block is (r-k-1) + 1 + 1 + (k-1) = r columns wide, and E_r(k1,k2)
    // needs r-k2-1 >= 0 columns (symmetrically for k1)
    for (name, k) in [("k1", k1), ("k2", k2)] {
        if k == 0 {
            return Err(Error::Unsupported(format!("n2 needs {name} >= 1")));
        }
        if k + 1 > r {
            return Err(Error::Unsupported(format!(
                "n2 needs {name} <= r-1 so that every block has width r-{name}-1 >= 0 (got {name}={k}, r={r})"
            )));
        }
    }
    Ok(())
}

/// `K x 2r` generator, `K = k1 + k2`:
/// ```text
/// [ u_1..u_{r-k1}  0  0        | v_1..v_{r-k2}  0  0        ]
/// [ 0              1  0        | 0              1  0        ]
/// [ 0              0  I_{k1-1} | E_r(k1,k2)     0  0        ]
/// [ E_r(k2,k1)     0  0        | 0              0  I_{k2-1} ]
/// ```
pub fn construct_n2(
    q: u32,
    r: usize,
    k1: usize,
    k2: usize,
    u: &[u32],
    v: &[u32],
    budget: &Budget,
) -> Result<LinearCode> {
    let field = PrimeField::new(q)?;
    check_n2(r, k1, k2)?;
    expect_vector("u", u, r, r - k1)?;
    expect_vector("v", v, r, r - k2)?;
    let big_k = k1 + k2;
    let mut g = Matrix::zeros(field, big_k, 2 * r);
    for j in 0..r {
        g.set(0, j, field.reduce(u[j] as i64));
        g.set(0, r + j, field.reduce(v[j] as i64));
    }
    g.set(1, r - k1, 1);
    g.set(1, r + r - k2, 1);
    let e12 = e_block(r, k1, k2);
    for a in 0..k1 - 1 {
        let row = 2 + a;
        g.set(row, r - k1 + 1 + a, 1);
        for (j, &c) in e12[a].iter().enumerate() {
            g.set(row, r + j, c);
        }
    }
    let e21 = e_block(r, k2, k1);
    for a in 0..k2 - 1 {
        let row = 1 + k1 + a;
        for (j, &c) in e21[a].iter().enumerate() {
            g.set(row, j, c);
        }
        g.set(row, r + r - k2 + 1 + a, 1);
    }
    let code = finish(chain_product_poset(2, r)?, g, "n2", budget)?;
    let d = code.classify(budget)?.d;
    if d != 2 * r - big_k {
        return Err(Error::Internal(format!(
            "n2 code has d={d}, expected 2r-K={}\n{}",
            2 * r - big_k,
            code.generator()
        )));
    }
    Ok(code)
}

/// Rows 2..6 of each block over its last six columns; row 1 is
/// `(u_1..u_{r-2}, 0, 0)`.
const N3_BLOCKS: [[[u32; 6]; 5]; 3] = [
    [[0, 0, 0, 0, 1, 0], [0, 1, 0, 0, 1, 0], [1, 0, 0, 0, 0, 1], [0, 1, 0, 0, 0, 1], [0, 0, 1, 0, 0, 0]],
    [[0, 0, 0, 0, 1, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 1, 0, 0, 0, 1], [1, 0, 0, 0, 0, 1]],
    [[0, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0], [0, 1, 0, 0, 0, 1], [0, 0, 1, 0, 0, 0], [1, 0, 0, 0, 0, 1]],
];

fn check_n3(q: u32, r: usize) -> Result<()> {
    if q < 3 {
        return Err(Error::Unsupported(format!("n3 needs q >= 3, got q={q}")));
    }
    if r < 6 {
        return Err(Error::Unsupported(format!("n3 needs r >= 6, got r={r}")));
    }
    Ok(())
}

/// `6 x 3r` generator from three fixed blocks; `u`, `v`, `w` have l.a.
/// weight `r - 2`. The distance is computed, not assumed.
pub fn construct_n3(q: u32, r: usize, u: &[u32], v: &[u32], w: &[u32], budget: &Budget) -> Result<LinearCode> {
    let field = PrimeField::new(q)?;
    check_n3(q, r)?;
    let mut g = Matrix::zeros(field, 6, 3 * r);
    for (b, (name, top)) in [("u", u), ("v", v), ("w", w)].into_iter().enumerate() {
        expect_vector(name, top, r, r - 2)?;
        for (j, &c) in top.iter().enumerate() {
            g.set(0, b * r + j, field.reduce(c as i64));
        }
        for (a, row) in N3_BLOCKS[b].iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                g.set(1 + a, b * r + r - 6 + j, c);
            }
        }
    }
    finish(chain_product_poset(3, r)?, g, "n3", budget)
}

/// Self-check: the generator has full rank and the code is NMDS.
fn finish(poset: Poset, g: Matrix, family: &str, budget: &Budget) -> Result<LinearCode> {
    let dump = |why: String, g: &Matrix| Error::Internal(format!("{family} construction {why}\n{g}"));
    let code = match LinearCode::new(poset, g.clone()) {
        Ok(c) => c,
        Err(e) => return Err(dump(format!("produced a singular generator ({e})"), &g)),
    };
    let class = code.classify(budget)?.class;
    if !class.is_nmds() {
        return Err(dump(format!("is {class}, not NMDS"), &g));
    }
    Ok(code)
}

/// Uniformly random `k x n` generators (seeded ChaCha8) until one is NMDS.
/// Rank-deficient draws count as trials.
pub fn search_random_nmds(
    poset: &Poset,
    q: u32,
    k: usize,
    seed: u64,
    max_trials: u64,
    budget: &Budget,
) -> Result<LinearCode> {
    let field = PrimeField::new(q)?;
    let n = poset.len();
    if k == 0 || k >= n {
        return Err(Error::Usage(format!("search needs 1 <= k <= n-1, got k={k}, n={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_trials {
        let rows: Vec<Vec<u32>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect()).collect();
        let g = Matrix::from_rows(field, n, &rows)?;
        if g.rank() < k {
            continue;
        }
        let code = LinearCode::new(poset.clone(), g)?;
        if code.classify(budget)?.class.is_nmds() {
            return Ok(code);
        }
    }
    Err(Error::NotFound { what: format!("NMDS [{n},{k}] code over GF({q})"), trials: max_trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CodeClass;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn n1_examples() {
        let c = construct_n1(2, 3, 1, &[0, 1], &[], &b()).unwrap();
        let words = c.codewords(&b()).unwrap();
        assert_eq!(words, vec![vec![0, 0, 0], vec![0, 1, 0]]);
        assert_eq!(c.classify(&b()).unwrap().class, CodeClass::NmdsDegenerate);

        let c = construct_n1(2, 3, 2, &[1], &[vec![0]], &b()).unwrap();
        assert_eq!(c.generator().to_rows(), vec![vec![1, 0, 0], vec![0, 0, 1]]);
        let info = c.classify(&b()).unwrap();
        assert_eq!((info.d, info.dual_d), (1, 2));

        let c = ConstructionSpec::n1(3, 4, 2).with_seed(11).build(&b()).unwrap();
        assert_eq!(c.classify(&b()).unwrap().class, CodeClass::Nmds);
    }

    #[test]
    fn n1_rejects_bad_x() {
        assert!(matches!(construct_n1(2, 3, 1, &[1, 0], &[], &b()), Err(Error::Usage(_))));
        assert!(matches!(construct_n1(2, 3, 3, &[], &[], &b()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn e_blocks() {
        // i + j > r: D_{r-j-1} over zero rows
        assert_eq!(e_block(4, 3, 2), vec![vec![1], vec![0]]);
        // i + j <= r: [0 | D_{i-1}]
        assert_eq!(e_block(5, 3, 1), vec![vec![0, 0, 1], vec![0, 1, 0]]);
        assert_eq!(e_block(3, 2, 1), vec![vec![1]]);
        assert_eq!(e_block(3, 1, 2), Vec::<Vec<u32>>::new());
    }

    #[test]
    fn n2_examples() {
        let c = construct_n2(2, 2, 1, 1, &[1, 0], &[1, 0], &b()).unwrap();
        assert_eq!(c.generator().to_rows(), vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]]);
        let info = c.classify(&b()).unwrap();
        assert_eq!((info.n, info.k, info.d, info.d2), (4, 2, 2, Some(4)));

        let c = construct_n2(3, 3, 1, 2, &[2, 1, 0], &[1, 0, 0], &b()).unwrap();
        assert_eq!(c.classify(&b()).unwrap().d, 3);

        let c = ConstructionSpec::n2(2, 3, 2, 2).build(&b()).unwrap();
        let info = c.classify(&b()).unwrap();
        assert_eq!((info.d, info.dual_d), (2, 4));
    }

    #[test]
    fn n2_rejects_ill_formed() {
        assert!(matches!(ConstructionSpec::n2(2, 3, 3, 1).build(&b()), Err(Error::Unsupported(_))));
        assert!(matches!(ConstructionSpec::n2(2, 3, 0, 1).build(&b()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn n3_small() {
        let c = ConstructionSpec::n3(3, 6).build(&b()).unwrap();
        assert_eq!((c.n(), c.k()), (18, 6));
        assert_eq!(c.min_distance(&b()).unwrap(), 12);
        assert!(matches!(ConstructionSpec::n3(2, 6).build(&b()), Err(Error::Unsupported(_))));
        assert!(matches!(ConstructionSpec::n3(3, 5).build(&b()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn seeded_builds_are_deterministic() {
        let a = ConstructionSpec::n2(5, 4, 2, 3).with_seed(3).build(&b()).unwrap();
        let c = ConstructionSpec::n2(5, 4, 2, 3).with_seed(3).build(&b()).unwrap();
        assert_eq!(a.generator(), c.generator());
    }

    #[test]
    fn random_search() {
        let p = Poset::antichain(4).unwrap();
        let c = search_random_nmds(&p, 2, 2, 7, 1000, &b()).unwrap();
        assert_eq!(c.classify(&b()).unwrap().d, 2);
        let again = search_random_nmds(&p, 2, 2, 7, 1000, &b()).unwrap();
        assert_eq!(c.generator(), again.generator());

        let chain = Poset::chain(3).unwrap();
        let c = search_random_nmds(&chain, 2, 1, 1, 1000, &b()).unwrap();
        assert!(c.classify(&b()).unwrap().class.is_nmds());

        let e = search_random_nmds(&Poset::antichain(2).unwrap(), 2, 1, 5, 3, &b());
        let e2 = search_random_nmds(&Poset::antichain(2).unwrap(), 2, 1, 5, 3, &b());
        assert_eq!(e.is_ok(), e2.is_ok());
        if let Err(err) = e {
            assert!(matches!(err, Error::NotFound { trials: 3, .. }));
        }
    }
}
