use std::fmt;

/// A monomial `x^a z^b p_1^{e_1} p_2^{e_2} ...`.
///
/// The exponent vector `p` is indexed from `p_1` and never carries trailing
/// zeros, so equal monomials compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    x: u32,
    z: u32,
    p: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { x: 0, z: 0, p: Vec::new() }
    }

    pub fn new(x: u32, z: u32, mut p: Vec<u32>) -> Self {
        while p.last() == Some(&0) {
            p.pop();
        }
        Monomial { x, z, p }
    }

    /// `x^x z^z p_α` for the multiset of parts `α`.
    pub fn from_parts(x: u32, z: u32, parts: &[u32]) -> Self {
        let mut p = Vec::new();
        for &part in parts {
            assert!(part >= 1, "p-indices start at 1");
            let idx = part as usize - 1;
            if p.len() <= idx {
                p.resize(idx + 1, 0);
            }
            p[idx] += 1;
        }
        Monomial { x, z, p }
    }

    pub fn x(&self) -> u32 {
        self.x
    }

    pub fn z(&self) -> u32 {
        self.z
    }

    /// Exponent of `p_k` (`k ≥ 1`).
    pub fn p_exp(&self, k: u32) -> u32 {
        k.checked_sub(1)
            .and_then(|i| self.p.get(i as usize))
            .copied()
            .unwrap_or(0)
    }

    /// Exponent vector starting at `p_1`.
    pub fn p_exps(&self) -> &[u32] {
        &self.p
    }

    /// Largest `p`-index with a nonzero exponent (0 if none).
    pub fn max_p_index(&self) -> u32 {
        self.p.len() as u32
    }

    /// Number of `p` factors counted with multiplicity.
    pub fn p_degree(&self) -> u32 {
        self.p.iter().sum()
    }

    /// Weighted `p`-degree `Σ k·e_k`.
    pub fn p_weight(&self) -> u32 {
        self.p.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e).sum()
    }

    /// Parts of the partition encoded by the `p` exponents, largest first.
    pub fn parts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.p_degree() as usize);
        for (i, &e) in self.p.iter().enumerate().rev() {
            out.extend(std::iter::repeat_n(i as u32 + 1, e as usize));
        }
        out
    }

    pub(crate) fn grade(&self) -> u32 {
        self.x + self.z
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.p.len() >= other.p.len() {
            (&self.p, &other.p)
        } else {
            (&other.p, &self.p)
        };
        let mut p = long.clone();
        for (slot, e) in p.iter_mut().zip(short) {
            *slot += e;
        }
        Monomial { x: self.x + other.x, z: self.z + other.z, p }
    }

    pub(crate) fn with_x(&self, x: u32) -> Monomial {
        Monomial { x, z: self.z, p: self.p.clone() }
    }

    /// Returns the monomial with one power of `p_k` removed, together with
    /// the exponent it had, or `None` when `p_k` does not occur.
    pub(crate) fn remove_p(&self, k: u32) -> Option<(Monomial, u32)> {
        let e = self.p_exp(k);
        if e == 0 {
            return None;
        }
        let mut p = self.p.clone();
        p[k as usize - 1] -= 1;
        Some((Monomial::new(self.x, self.z, p), e))
    }

    /// `[[index, exponent], ...]` pairs for the nonzero exponents.
    pub fn p_pairs(&self) -> Vec<[u32; 2]> {
        self.p
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| [i as u32 + 1, e])
            .collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        match self.x {
            0 => {}
            1 => factors.push("x".to_string()),
            e => factors.push(format!("x^{e}")),
        }
        match self.z {
            0 => {}
            1 => factors.push("z".to_string()),
            e => factors.push(format!("z^{e}")),
        }
        for [k, e] in self.p_pairs() {
            if e == 1 {
                factors.push(format!("p{k}"));
            } else {
                factors.push(format!("p{k}^{e}"));
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parts_round_trip() {
        let m = Monomial::from_parts(7, 1, &[3, 2, 1, 1]);
        assert_eq!(m.parts(), vec![3, 2, 1, 1]);
        assert_eq!(m.p_weight(), 7);
        assert_eq!(m.p_degree(), 4);
        assert_eq!(m.to_string(), "x^7*z*p1^2*p2*p3");
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(Monomial::new(1, 0, vec![1, 0, 0]), Monomial::from_parts(1, 0, &[1]));
        let (m, e) = Monomial::from_parts(2, 0, &[2]).remove_p(2).unwrap();
        assert_eq!(e, 1);
        assert_eq!(m, Monomial::new(2, 0, vec![]));
    }
}
