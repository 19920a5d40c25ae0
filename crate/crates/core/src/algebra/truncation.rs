use std::fmt;

use crate::{HurwitzError, Result};

/// Bounds that make every series finite.
///
/// `n` caps the total `x`-degree, `k` the largest `p`-index kept, `g` the
/// `z`-degree, and `r` the number of `u`-orders the cut-and-join stepper
/// produces. Monomials beyond a bound are dropped, never rounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Truncation {
    n: u32,
    k: u32,
    g: u32,
    r: u32,
}

impl Truncation {
    /// Builds a truncation with the default `u`-order `R = 2N + 2G - 2`,
    /// the largest factorization length reachable with `n ≤ N`, `g ≤ G`.
    pub fn new(n: u32, k: u32, g: u32) -> Result<Self> {
        let r = (2 * n + 2 * g).saturating_sub(2);
        Self::with_r(n, k, g, r)
    }

    pub fn with_r(n: u32, k: u32, g: u32, r: u32) -> Result<Self> {
        if n < 1 || k < 1 {
            return Err(HurwitzError::Usage(format!(
                "truncation needs N >= 1 and K >= 1 (got N={n}, K={k})"
            )));
        }
        if k < n {
            return Err(HurwitzError::Usage(format!(
                "truncation needs K >= N for exact coefficients (got N={n}, K={k})"
            )));
        }
        Ok(Truncation { n, k, g, r })
    }

    /// Maximum total `x`-degree.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Maximum `p`-index.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Maximum `z`-degree.
    pub fn g(&self) -> u32 {
        self.g
    }

    /// Maximum `u`-order.
    pub fn r(&self) -> u32 {
        self.r
    }

    /// Largest grade `x`-degree + `z`-degree a stored monomial can have.
    pub(crate) fn max_grade(&self) -> u32 {
        self.n + self.g
    }
}

impl Default for Truncation {
    fn default() -> Self {
        Truncation::new(8, 8, 1).expect("default truncation is valid")
    }
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} K={} G={} R={}", self.n, self.k, self.g, self.r)
    }
}
