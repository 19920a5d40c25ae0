//! Integer partitions and the statistics the Hurwitz formulas are built from.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{factorial, rat_pow, Monomial, PSeries, Rational, Truncation};
use crate::{HurwitzError, Result};

/// A partition `α = (α_1 ≥ α_2 ≥ ... ≥ α_m ≥ 1)`. The empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Accepts parts already in weakly decreasing order.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(HurwitzError::Usage(format!("partition parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(HurwitzError::Usage(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts into canonical order first.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Size `n = Σ α_i`.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Length `m`.
    pub fn len(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(i, m_i)` for every part size `i` that occurs, ascending in `i`.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((i, m)) if *i == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `p_α` as a monomial carrying `x^n`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_parts(self.n(), 0, &self.parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = HurwitzError;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl FromStr for Partition {
    type Err = HurwitzError;

    /// Parses `"3,2,2"` or `"(3,2,2)"`; parts may come in any order.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| HurwitzError::Parse(format!("bad partition literal {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if parts.contains(&0) {
            return Err(HurwitzError::Parse(format!("zero part in partition literal {s:?}")));
        }
        Partition::from_unsorted(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `ϑ(α) = Π_i i^{m_i} m_i!`.
pub fn theta(alpha: &Partition) -> BigInt {
    alpha
        .multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (i, m)| acc * BigInt::from(i).pow(m) * factorial(m))
}

/// Size of the conjugacy class of cycle type `α` in `S_n`, `n!/ϑ(α)`.
pub fn class_size(alpha: &Partition) -> BigInt {
    factorial(alpha.n()) / theta(alpha)
}

/// Elementary symmetric function `e_k(α_1, ..., α_m)`, read off from
/// `Π_j (1 + α_j t)`.
pub fn elem_sym(alpha: &Partition, k: u32) -> BigInt {
    let k = k as usize;
    if k > alpha.parts.len() {
        return BigInt::zero();
    }
    let mut e = vec![BigInt::zero(); k + 1];
    e[0] = BigInt::one();
    for &part in &alpha.parts {
        for j in (1..=k).rev() {
            let prev = e[j - 1].clone();
            e[j] += prev * part;
        }
    }
    e.swap_remove(k)
}

/// `a_r = r^r / (r - 1)!`.
pub fn a_coeff(r: u32) -> Result<Rational> {
    if r < 1 {
        return Err(HurwitzError::Usage("a_r is defined for r >= 1".into()));
    }
    Ok(Rational::new(BigInt::from(r).pow(r), factorial(r - 1)))
}

/// `ψ_i(x, p) = Σ_{r ≥ 1} r^{i-1} a_r p_r x^r`, truncated.
pub fn psi(i: i32, trunc: Truncation) -> PSeries {
    let top = trunc.n().min(trunc.k());
    let terms = (1..=top).map(|r| {
        let weight = rat_pow(&Rational::from_integer(BigInt::from(r)), i as i64 - 1);
        let c = weight * a_coeff(r).expect("r >= 1");
        (Monomial::from_parts(r, 0, &[r]), c)
    });
    PSeries::from_terms(trunc, terms).expect("indices within K")
}

/// The `p`-power-sum side of the elementary-symmetric extraction identity:
/// `(ϑ(λ)/k!) [p_λ] (p_1 + p_2 + ...)^k · exp(Σ_i p_i/i)`,
/// evaluated with every `p_i` weighted by `x^i`.
pub fn elem_sym_by_extraction(lambda: &Partition, k: u32, trunc: Truncation) -> Result<Rational> {
    let power_sum = power_sum_series(trunc)?;
    let extraction = power_sum.pow(k)?.mul(&exp_power_sums(trunc)?)?;
    finish_extraction(lambda, k, &extraction)
}

fn power_sum_series(trunc: Truncation) -> Result<PSeries> {
    let top = trunc.n().min(trunc.k());
    PSeries::from_terms(
        trunc,
        (1..=top).map(|i| (Monomial::from_parts(i, 0, &[i]), Rational::one())),
    )
}

fn exp_power_sums(trunc: Truncation) -> Result<PSeries> {
    let top = trunc.n().min(trunc.k());
    PSeries::from_terms(
        trunc,
        (1..=top).map(|i| {
            (Monomial::from_parts(i, 0, &[i]), Rational::new(BigInt::one(), BigInt::from(i)))
        }),
    )?
    .exp()
}

fn finish_extraction(lambda: &Partition, k: u32, extraction: &PSeries) -> Result<Rational> {
    let c = extraction.coeff(lambda.n(), 0, lambda)?;
    Ok(c * Rational::new(theta(lambda), factorial(k)))
}

/// Checks the extraction identity for every `λ ⊢ n ≤ n_max` and
/// `0 ≤ k ≤ m`. Returns the first failing `(λ, k)` if any.
pub fn check_elem_sym_extraction(n_max: u32) -> Result<Option<(Partition, u32)>> {
    let trunc = Truncation::new(n_max.max(1), n_max.max(1), 0)?;
    let e = exp_power_sums(trunc)?;
    let ps = power_sum_series(trunc)?;
    let mut power = PSeries::one(trunc);
    for k in 0..=n_max {
        let extraction = power.mul(&e)?;
        for n in 0..=n_max {
            for lambda in partitions_of(n) {
                if k > lambda.len() {
                    continue;
                }
                let lhs = Rational::from_integer(elem_sym(&lambda, k));
                if finish_extraction(&lambda, k, &extraction)? != lhs {
                    return Ok(Some((lambda, k)));
                }
            }
        }
        power = power.mul(&ps)?;
    }
    Ok(None)
}
