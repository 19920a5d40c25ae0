//! Ground-truth counts of transposition factorizations in `S_n`.
//!
//! [`count_naive`] walks every sequence of transpositions (pruned by the
//! distance still to cover) and tests transitivity directly. [`count_walks`]
//! counts all factorizations by repeated multiplication in the group algebra,
//! and [`count_transitive`] removes the intransitive ones with a sieve over
//! set partitions of the cycles of the target.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::binomial;
use crate::partitions::Partition;
use crate::{factorization_length, HurwitzError, Result};

/// Largest `n` accepted by [`count_naive`].
pub const NAIVE_MAX_N: u32 = 5;
/// Largest factorization length accepted by [`count_naive`].
pub const NAIVE_MAX_R: u32 = 10;
/// Largest `n` accepted by the walk counter (vectors of size `n!`).
pub const WALK_MAX_N: u32 = 7;

/// A permutation of `{0, ..., n-1}` stored by images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(HurwitzError::Usage(format!("not a bijection: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    /// The canonical element of the class `C_α`: cycles on consecutive
    /// symbols, largest part first.
    pub fn canonical(alpha: &Partition) -> Self {
        let n = alpha.n() as usize;
        let mut images = vec![0u8; n];
        let mut start = 0usize;
        for &part in alpha.parts() {
            let len = part as usize;
            for i in 0..len {
                images[start + i] = (start + (i + 1) % len) as u8;
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Permutation { images }
    }

    /// `σ ∘ self ∘ σ⁻¹`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Permutation {
        sigma.compose(self).compose(&sigma.inverse())
    }

    fn cycle_lengths(&self) -> Vec<u32> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_lengths().len()
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycle_lengths()).expect("cycle lengths are positive")
    }

    /// Rank in `0..n!` by Lehmer code.
    fn rank(&self) -> usize {
        let n = self.images.len();
        let mut rank = 0usize;
        for i in 0..n {
            let smaller = self.images[i + 1..].iter().filter(|&&v| v < self.images[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    fn unrank(n: usize, mut rank: usize) -> Permutation {
        let mut digits = vec![0usize; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<u8> = (0..n as u8).collect();
        let images = digits.into_iter().map(|d| pool.remove(d)).collect();
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation on symbols `1..=n`, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = self.images[i] as usize;
            }
            write!(f, "({})", cycle.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// All transpositions of `S_n` as symbol pairs `a < b`.
fn transposition_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Length and genus of a factorization problem for `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationProblem {
    pub alpha: Partition,
    pub genus: u32,
    pub r: u32,
}

impl FactorizationProblem {
    pub fn new(alpha: &Partition, genus: u32) -> Result<Self> {
        if alpha.is_empty() {
            return Err(HurwitzError::Usage("factorizations need n >= 1".into()));
        }
        let r = factorization_length(alpha, genus).expect("n, m >= 1 keeps r >= 0");
        Ok(FactorizationProblem { alpha: alpha.clone(), genus, r })
    }
}

/// `c_g(α)` by exhaustive enumeration of transposition sequences.
pub fn count_naive(alpha: &Partition, genus: u32) -> Result<BigInt> {
    let problem = FactorizationProblem::new(alpha, genus)?;
    count_naive_for(&Permutation::canonical(alpha), problem.r).map(BigInt::from)
}

/// Counts transitive factorizations of `target` into `r` transpositions.
pub fn count_naive_for(target: &Permutation, r: u32) -> Result<u64> {
    let n = target.degree();
    if n as u32 > NAIVE_MAX_N || r > NAIVE_MAX_R {
        return Err(HurwitzError::Size(format!(
            "naive enumeration limited to n <= {NAIVE_MAX_N}, r <= {NAIVE_MAX_R} (got n={n}, r={r})"
        )));
    }
    let pairs = transposition_pairs(n);
    let mut search = NaiveSearch {
        n,
        pairs: &pairs,
        target,
        chosen: Vec::with_capacity(r as usize),
        count: 0,
    };
    search.descend(&Permutation::identity(n), r);
    Ok(search.count)
}

struct NaiveSearch<'a> {
    n: usize,
    pairs: &'a [(usize, usize)],
    target: &'a Permutation,
    chosen: Vec<(usize, usize)>,
    count: u64,
}

impl NaiveSearch<'_> {
    fn descend(&mut self, prefix: &Permutation, remaining: u32) {
        // the rest of the word must multiply to prefix⁻¹·target
        let gap = prefix.inverse().compose(self.target);
        let distance = (self.n - gap.cycle_count()) as u32;
        if distance > remaining || (remaining - distance) % 2 == 1 {
            return;
        }
        if remaining == 0 {
            if self.is_transitive() {
                self.count += 1;
            }
            return;
        }
        for &(a, b) in self.pairs {
            self.chosen.push((a, b));
            let next = prefix.compose(&Permutation::transposition(self.n, a, b));
            self.descend(&next, remaining - 1);
            self.chosen.pop();
        }
    }

    fn is_transitive(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for &(a, b) in &self.chosen {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let root = find(&mut parent, 0);
        (1..self.n).all(|i| find(&mut parent, i) == root)
    }
}

/// Cayley graph of `S_n` with respect to all transpositions, by rank.
struct WalkTable {
    n: usize,
    /// `step[rank * T + t]` is the rank of `perm ∘ t`.
    step: Vec<u32>,
    transpositions: usize,
}

impl WalkTable {
    fn new(n: usize) -> Self {
        let pairs = transposition_pairs(n);
        let size: usize = (1..=n).product();
        let mut step = Vec::with_capacity(size * pairs.len());
        for rank in 0..size {
            let perm = Permutation::unrank(n, rank);
            for &(a, b) in &pairs {
                let mut images = perm.images.clone();
                images.swap(a, b);
                step.push(Permutation { images }.rank() as u32);
            }
        }
        WalkTable { n, step, transpositions: pairs.len() }
    }

    /// Number of words of length `r` (for every `r ≤ r_max`) multiplying to `target`.
    fn counts(&self, target: &Permutation, r_max: u32) -> Result<Vec<u128>> {
        let size: usize = (1..=self.n).product();
        let goal = target.rank();
        let mut current = vec![0u128; size];
        current[Permutation::identity(self.n).rank()] = 1;
        let mut out = vec![current[goal]];
        for _ in 0..r_max {
            let mut next = vec![0u128; size];
            for (rank, &weight) in current.iter().enumerate() {
                if weight == 0 {
                    continue;
                }
                let row = &self.step[rank * self.transpositions..(rank + 1) * self.transpositions];
                for &to in row {
                    let slot = &mut next[to as usize];
                    *slot = slot.checked_add(weight).ok_or_else(|| {
                        HurwitzError::Size("walk count overflowed 128 bits".into())
                    })?;
                }
            }
            current = next;
            out.push(current[goal]);
        }
        Ok(out)
    }
}

/// Number of all (not necessarily transitive) factorizations of the
/// canonical element of `C_α` into `r` transpositions.
pub fn count_walks(alpha: &Partition, r: u32) -> Result<BigInt> {
    let counts = walk_counts_for(&Permutation::canonical(alpha), r)?;
    Ok(BigInt::from(counts[r as usize]))
}

/// Walk counts to `target` for every length `0..=r_max`.
pub fn walk_counts_for(target: &Permutation, r_max: u32) -> Result<Vec<u128>> {
    let n = target.degree();
    if n as u32 > WALK_MAX_N {
        return Err(HurwitzError::Size(format!(
            "walk counting limited to n <= {WALK_MAX_N} (got n={n})"
        )));
    }
    WalkTable::new(n).counts(target, r_max)
}

/// `c_g(α)` from walk counts with the intransitive factorizations sieved out.
pub fn count_transitive(alpha: &Partition, genus: u32) -> Result<BigInt> {
    let problem = FactorizationProblem::new(alpha, genus)?;
    count_transitive_r(alpha, problem.r)
}

/// Transitive factorizations of the canonical element of `C_α` into `r`
/// transpositions, for any `r`.
pub fn count_transitive_r(alpha: &Partition, r: u32) -> Result<BigInt> {
    if alpha.n() > WALK_MAX_N {
        return Err(HurwitzError::Size(format!(
            "walk counting limited to n <= {WALK_MAX_N} (got n={})",
            alpha.n()
        )));
    }
    let mut sieve = Sieve::new(r);
    let profile = sieve.transitive_profile(alpha)?;
    Ok(profile[r as usize].clone())
}

/// Memoized inclusion-exclusion over the orbit structure.
///
/// A factorization of `π` generates a group whose orbits are unions of the
/// cycles of `π`, so the walk count splits over set partitions `B` of the
/// cycle set: `W(α, r) = Σ_B Σ_{Σ r_b = r} multinomial(r; r_b) Π_b T(α_b, r_b)`.
/// The single-block term is the transitive count `T(α, r)`.
struct Sieve {
    r_max: u32,
    tables: HashMap<usize, WalkTable>,
    profiles: HashMap<Partition, Vec<BigInt>>,
}

impl Sieve {
    fn new(r_max: u32) -> Self {
        Sieve { r_max, tables: HashMap::new(), profiles: HashMap::new() }
    }

    fn walks(&mut self, alpha: &Partition) -> Result<Vec<BigInt>> {
        let n = alpha.n() as usize;
        let table = self.tables.entry(n).or_insert_with(|| WalkTable::new(n));
        let counts = table.counts(&Permutation::canonical(alpha), self.r_max)?;
        Ok(counts.into_iter().map(BigInt::from).collect())
    }

    /// `T(α, r)` for all `r ≤ r_max`.
    fn transitive_profile(&mut self, alpha: &Partition) -> Result<Vec<BigInt>> {
        if let Some(p) = self.profiles.get(alpha) {
            return Ok(p.clone());
        }
        let mut profile = self.walks(alpha)?;
        let cycles = alpha.parts().to_vec();
        for blocks in set_partitions(cycles.len()) {
            if blocks.len() < 2 {
                continue;
            }
            let mut combined = vec![BigInt::zero(); self.r_max as usize + 1];
            combined[0] = BigInt::one();
            for block in &blocks {
                let sub = Partition::from_unsorted(block.iter().map(|&i| cycles[i]).collect())?;
                let part = self.transitive_profile(&sub)?;
                combined = shuffle_product(&combined, &part);
            }
            for (slot, c) in profile.iter_mut().zip(&combined) {
                *slot -= c;
            }
        }
        self.profiles.insert(alpha.clone(), profile.clone());
        Ok(profile)
    }
}

/// Counts of interleavings: `out[t] = Σ_s binom(t, s) a[t-s] b[s]`.
fn shuffle_product(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let len = a.len();
    let mut out = vec![BigInt::zero(); len];
    for t in 0..len {
        for s in 0..=t {
            if a[t - s].is_zero() || b[s].is_zero() {
                continue;
            }
            out[t] += binomial(t as u32, s as u32) * &a[t - s] * &b[s];
        }
    }
    out
}

/// All set partitions of `{0, ..., m-1}` as lists of blocks.
fn set_partitions(m: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, m: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == m {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            go(i + 1, m, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        go(i + 1, m, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(0, m, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn canonical_representatives() {
        let pi = Permutation::canonical(&part(&[3, 2]));
        assert_eq!(pi.to_string(), "(1 2 3)(4 5)");
        assert_eq!(pi.cycle_type(), part(&[3, 2]));
        assert_eq!(Permutation::canonical(&part(&[1, 1])).to_string(), "()");
    }

    #[test]
    fn ranking_is_a_bijection() {
        for n in 0..=5usize {
            let size: usize = (1..=n).product();
            for rank in 0..size {
                assert_eq!(Permutation::unrank(n, rank).rank(), rank);
            }
        }
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![1, 0]).is_ok());
    }

    #[test]
    fn naive_examples() {
        assert_eq!(count_naive(&part(&[1]), 0).unwrap(), BigInt::from(1));
        assert_eq!(count_naive(&part(&[2]), 1).unwrap(), BigInt::from(1));
        assert_eq!(count_naive(&part(&[3]), 0).unwrap(), BigInt::from(3));
        assert_eq!(count_naive(&part(&[2, 1]), 0).unwrap(), BigInt::from(8));
    }

    #[test]
    fn naive_refuses_large_problems() {
        assert!(matches!(count_naive(&part(&[6]), 0), Err(HurwitzError::Size(_))));
        // (1^5) at genus 2 needs r = 12
        assert!(matches!(count_naive(&part(&[1, 1, 1, 1, 1]), 2), Err(HurwitzError::Size(_))));
    }

    #[test]
    fn walk_examples() {
        assert_eq!(count_walks(&part(&[1, 1]), 2).unwrap(), BigInt::from(1));
        assert_eq!(count_walks(&part(&[3]), 4).unwrap(), BigInt::from(27));
        assert_eq!(count_walks(&part(&[2]), 2).unwrap(), BigInt::from(0));
        assert!(matches!(count_walks(&part(&[8]), 1), Err(HurwitzError::Size(_))));
    }

    /// Character-sum count of length-r transposition words equal to a fixed
    /// element of class `target` in `S_3`: `Σ_χ (|C_t| χ(t)/χ(1))^r χ(π) χ(1) / |G|`.
    fn s3_character_count(target: usize, r: u32) -> i64 {
        // classes: identity, transposition, 3-cycle; trivial, sign, standard
        let table: [[i64; 3]; 3] = [[1, 1, 1], [1, -1, 1], [2, 0, -1]];
        let mut total = num_rational::BigRational::from_integer(0.into());
        for chi in &table {
            let ratio = num_rational::BigRational::new((3 * chi[1]).into(), chi[0].into());
            let term = num_traits::pow(ratio, r as usize)
                * num_rational::BigRational::from_integer((chi[target] * chi[0]).into());
            total += term;
        }
        let total = total / num_rational::BigRational::from_integer(6.into());
        assert!(total.is_integer());
        i64::try_from(total.to_integer()).unwrap()
    }

    #[test]
    fn walks_match_character_sums_in_s3() {
        for r in 0..=8 {
            for (class, alpha) in [(0, part(&[1, 1, 1])), (1, part(&[2, 1])), (2, part(&[3]))] {
                assert_eq!(
                    count_walks(&alpha, r).unwrap(),
                    BigInt::from(s3_character_count(class, r)),
                    "{alpha} r={r}"
                );
            }
        }
    }

    #[test]
    fn sieve_examples() {
        assert_eq!(count_transitive(&part(&[1, 1]), 1).unwrap(), BigInt::from(1));
        assert_eq!(count_transitive(&part(&[2, 1]), 0).unwrap(), BigInt::from(8));
        assert_eq!(count_transitive(&part(&[3]), 1).unwrap(), BigInt::from(27));
    }

    #[test]
    fn naive_agrees_with_sieve() {
        for n in 1..=4 {
            for alpha in partitions_of(n) {
                for g in 0..=1 {
                    assert_eq!(
                        count_naive(&alpha, g).unwrap(),
                        count_transitive(&alpha, g).unwrap(),
                        "{alpha} g={g}"
                    );
                }
            }
        }
    }

    #[test]
    fn parity_obstruction() {
        for n in 1..=5 {
            for alpha in partitions_of(n) {
                let counts = walk_counts_for(&Permutation::canonical(&alpha), 8).unwrap();
                for (r, c) in counts.iter().enumerate() {
                    if (r as u32 + n + alpha.len()) % 2 == 1 {
                        assert_eq!(*c, 0, "{alpha} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn full_cycles_are_always_transitive() {
        for n in 1..=6 {
            let alpha = part(&[n]);
            for r in 0..=8 {
                assert_eq!(count_transitive_r(&alpha, r).unwrap(), count_walks(&alpha, r).unwrap());
            }
        }
    }

    #[test]
    fn set_partition_counts_are_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for (m, &b) in bell.iter().enumerate() {
            assert_eq!(set_partitions(m).len(), b);
        }
    }
}
