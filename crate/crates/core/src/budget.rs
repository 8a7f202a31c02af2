/// Default bound on exhaustive scans (codewords, ideals, vectors): 2^22.
pub const DEFAULT_MAX_ENUM: u64 = 1 << 22;

use crate::error::{Error, Result};

/// Upper bound on the number of items any single exhaustive scan may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_enum: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_enum: DEFAULT_MAX_ENUM }
    }
}

impl Budget {
    pub fn new(max_enum: u64) -> Self {
        Self { max_enum }
    }

    pub fn unlimited() -> Self {
        Self { max_enum: u64::MAX }
    }

    /// Fails with a resource error when `count` (None = overflowed) exceeds the bound.
    pub fn check(&self, what: &str, count: Option<u128>) -> Result<()> {
        match count {
            Some(c) if c <= self.max_enum as u128 => Ok(()),
            Some(c) => Err(self.exceeded(what, c.to_string())),
            None => Err(self.exceeded(what, "more than 2^128".into())),
        }
    }

    pub(crate) fn exceeded(&self, what: &str, needed: String) -> Error {
        Error::Resource { what: what.to_string(), needed, bound: self.max_enum }
    }
}

/// `base^exp` as u128, or None on overflow.
pub fn checked_pow(base: u64, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}
