//! Exact computation of genus-0 and genus-1 Hurwitz numbers.
//!
//! Three independent routes produce the counts `c_g(α)` of transitive
//! transposition factorizations:
//!
//! * [`oracle`] enumerates factorizations directly, or counts walks in the
//!   Cayley graph of `S_n` and sieves out the intransitive ones;
//! * [`cutjoin`] steps the cut-and-join differential equation order by order;
//! * [`closedform`] evaluates the explicit genus-0 and genus-1 formulas.
//!
//! [`verify`] machine-checks the algebraic identities that connect the
//! generating series of the genus-1 numbers to the cut-and-join equation,
//! including the exact polynomial vanishing of the symmetrized remainders.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod algebra;
pub mod cli;
pub mod closedform;
pub mod cutjoin;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod verify;

pub use algebra::{Rational, Truncation};
pub use error::{HurwitzError, Result};
pub use partitions::Partition;

use num_bigint::BigInt;

/// Which of the three independent methods computes a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Oracle,
    CutJoin,
    Closed,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::CutJoin => "cutjoin",
            Method::Closed => "closed",
        }
    }
}

/// Factorization length `r = n + m + 2(g - 1)` for a partition and genus.
///
/// Returns `None` when the length would be negative (only the empty
/// partition at genus 0).
pub fn factorization_length(alpha: &Partition, genus: u32) -> Option<u32> {
    let r = alpha.n() as i64 + alpha.len() as i64 + 2 * (genus as i64 - 1);
    u32::try_from(r).ok()
}

/// Computes `c_g(α)` with the requested method and wraps it in a record.
pub fn hurwitz_number(
    alpha: &Partition,
    genus: u32,
    method: Method,
) -> Result<closedform::HurwitzRecord> {
    if alpha.is_empty() {
        return Err(HurwitzError::Usage("the empty partition has no Hurwitz number".into()));
    }
    let c: BigInt = match method {
        Method::Oracle => oracle::count_transitive(alpha, genus)?,
        Method::CutJoin => {
            let n = alpha.n();
            let trunc = Truncation::new(n, n, genus)?;
            let state = cutjoin::CutJoinState::run(trunc)?;
            state.extract_c(alpha, genus)?
        }
        Method::Closed => closedform::predicted_c(alpha, genus)?,
    };
    closedform::HurwitzRecord::from_count(alpha.clone(), genus, c)
}
