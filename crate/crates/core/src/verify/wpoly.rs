use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::Rational;

/// Sparse polynomial in three variables over the rationals.
///
/// With `cap = None` it is an exact polynomial in `w_1, w_2, w_3`. With
/// `cap = Some(M)` every exponent is bounded by `M` and the value is a
/// truncated power series in `x_1, x_2, x_3`; products drop anything past
/// the box, which is closed under taking divisors, so truncation commutes
/// with multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WPoly {
    cap: Option<u32>,
    terms: BTreeMap<[u32; 3], Rational>,
}

impl WPoly {
    pub fn zero(cap: Option<u32>) -> Self {
        WPoly { cap, terms: BTreeMap::new() }
    }

    pub fn constant(cap: Option<u32>, c: Rational) -> Self {
        let mut p = Self::zero(cap);
        p.add_term([0, 0, 0], c);
        p
    }

    pub fn one(cap: Option<u32>) -> Self {
        Self::constant(cap, Rational::one())
    }

    /// The variable with index `var` (0-based).
    pub fn var(cap: Option<u32>, var: usize) -> Self {
        let mut e = [0; 3];
        e[var] = 1;
        let mut p = Self::zero(cap);
        p.add_term(e, Rational::one());
        p
    }

    /// A series in one variable given by its coefficients `c_0, c_1, ...`.
    pub fn univariate(cap: Option<u32>, var: usize, coeffs: &[Rational]) -> Self {
        let mut p = Self::zero(cap);
        for (d, c) in coeffs.iter().enumerate() {
            let mut e = [0; 3];
            e[var] = d as u32;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Rational)> {
        self.terms.iter()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: [u32; 3]) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    fn fits(&self, e: &[u32; 3]) -> bool {
        self.cap.is_none_or(|m| e.iter().all(|&d| d <= m))
    }

    pub(crate) fn add_term(&mut self, e: [u32; 3], c: Rational) {
        if c.is_zero() || !self.fits(&e) {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn same_cap(&self, other: &WPoly) {
        assert_eq!(self.cap, other.cap, "mixing exact polynomials and truncated series");
    }

    pub fn add(&self, other: &WPoly) -> WPoly {
        self.same_cap(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WPoly) -> WPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> WPoly {
        WPoly {
            cap: self.cap,
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> WPoly {
        if c.is_zero() {
            return WPoly::zero(self.cap);
        }
        WPoly { cap: self.cap, terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn mul(&self, other: &WPoly) -> WPoly {
        self.same_cap(other);
        let mut acc: BTreeMap<[u32; 3], Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                if !self.fits(&e) {
                    continue;
                }
                *acc.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        WPoly { cap: self.cap, terms: acc }
    }

    pub fn pow(&self, k: u32) -> WPoly {
        let mut out = WPoly::one(self.cap);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    fn letter(&self) -> char {
        if self.cap.is_some() {
            'x'
        } else {
            'w'
        }
    }

    /// The lowest nonzero term, rendered for error reports.
    pub fn witness(&self) -> Option<String> {
        self.terms.iter().next().map(|(e, c)| format!("({c})*{}", render_exponents(e, self.letter())))
    }
}

fn render_exponents(e: &[u32; 3], letter: char) -> String {
    let factors: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 0)
        .map(|(i, &d)| if d == 1 { format!("{letter}{}", i + 1) } else { format!("{letter}{}^{d}", i + 1) })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

impl fmt::Display for WPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(e, c)| format!("({c})*{}", render_exponents(e, self.letter()))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn difference_of_squares() {
        let a = WPoly::var(None, 0);
        let b = WPoly::var(None, 1);
        let lhs = a.add(&b).mul(&a.sub(&b));
        let rhs = a.pow(2).sub(&b.pow(2));
        assert_eq!(lhs, rhs);
        assert!(lhs.sub(&rhs).is_zero());
        assert_eq!(lhs.witness().unwrap(), "(-1)*w2^2");
    }

    #[test]
    fn box_truncation() {
        let x = WPoly::var(Some(2), 0);
        let one = WPoly::one(Some(2));
        let p = one.add(&x).pow(4);
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff([2, 0, 0]), int(6));
        assert_eq!(p.witness().unwrap(), "(1)*1");
        assert_eq!(x.to_string(), "(1)*x1");
    }
}
