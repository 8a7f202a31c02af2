//! Fixtures shared by the benchmarks.

use poset_codes::{Budget, ConstructionSpec, LinearCode};

/// The `[2r, k1+k2]` ordered NMDS code with zero free entries.
pub fn n2_code(q: u32, r: usize, k1: usize, k2: usize) -> LinearCode {
    ConstructionSpec::n2(q, r, k1, k2).build(&Budget::default()).expect("admissible parameters")
}

/// The `[3r, 6]` code over GF(q), q >= 3, r >= 6.
pub fn n3_code(q: u32, r: usize) -> LinearCode {
    ConstructionSpec::n3(q, r).build(&Budget::default()).expect("admissible parameters")
}
