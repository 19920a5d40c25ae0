use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{factorial, parse_rational, Monomial, Rational, Truncation};
use crate::partitions::Partition;
use crate::{HurwitzError, Result};

/// Sparse truncated series in `x`, `z` and `p_1 .. p_K` with rational
/// coefficients.
///
/// Terms are kept in canonical form: no zero coefficients and no monomial
/// outside the truncation bounds. Binary operations require both operands to
/// carry the same [`Truncation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PSeries {
    trunc: Truncation,
    terms: BTreeMap<Monomial, Rational>,
}

impl PSeries {
    pub fn zero(trunc: Truncation) -> Self {
        PSeries { trunc, terms: BTreeMap::new() }
    }

    pub fn one(trunc: Truncation) -> Self {
        Self::constant(trunc, Rational::one())
    }

    pub fn constant(trunc: Truncation, c: Rational) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(Monomial::one(), c);
        s
    }

    /// The single-term series `c·m`; terms outside the truncation give zero.
    pub fn monomial(trunc: Truncation, m: Monomial, c: Rational) -> Result<Self> {
        if m.max_p_index() > trunc.k() {
            return Err(HurwitzError::Usage(format!(
                "monomial {m} uses p_{} beyond K={}",
                m.max_p_index(),
                trunc.k()
            )));
        }
        let mut s = Self::zero(trunc);
        s.add_term(m, c);
        Ok(s)
    }

    pub fn x(trunc: Truncation) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(Monomial::new(1, 0, vec![]), Rational::one());
        s
    }

    pub fn z(trunc: Truncation) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(Monomial::new(0, 1, vec![]), Rational::one());
        s
    }

    /// The indeterminate `p_k`.
    pub fn p(trunc: Truncation, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(HurwitzError::Usage("p-indices start at 1".into()));
        }
        Self::monomial(trunc, Monomial::from_parts(0, 0, &[k]), Rational::one())
    }

    /// Builds a series from terms, summing duplicates and dropping anything
    /// beyond the truncation.
    pub fn from_terms<I>(trunc: Truncation, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut s = Self::zero(trunc);
        for (m, c) in terms {
            if m.max_p_index() > trunc.k() {
                return Err(HurwitzError::Usage(format!(
                    "monomial {m} uses p_{} beyond K={}",
                    m.max_p_index(),
                    trunc.k()
                )));
            }
            s.add_term(m, c);
        }
        Ok(s)
    }

    pub fn trunc(&self) -> Truncation {
        self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest `x`-degree present, or `None` for the zero series.
    pub fn min_x_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::x).min()
    }

    fn in_bounds(&self, m: &Monomial) -> bool {
        m.x() <= self.trunc.n() && m.z() <= self.trunc.g() && m.max_p_index() <= self.trunc.k()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() || !self.in_bounds(&m) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &PSeries) -> Result<()> {
        if self.trunc != other.trunc {
            return Err(HurwitzError::TruncationMismatch {
                left: self.trunc.to_string(),
                right: other.trunc.to_string(),
            });
        }
        Ok(())
    }

    /// Restricts the series to a smaller truncation. Widening is refused
    /// since it would pretend to know dropped coefficients.
    pub fn narrow_to(&self, trunc: Truncation) -> Result<PSeries> {
        if trunc.n() > self.trunc.n() || trunc.k() > self.trunc.k() || trunc.g() > self.trunc.g() {
            return Err(HurwitzError::Usage(format!(
                "cannot widen a series from {} to {}",
                self.trunc, trunc
            )));
        }
        let mut out = PSeries::zero(trunc);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn add(&self, other: &PSeries) -> Result<PSeries> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PSeries) -> Result<PSeries> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> PSeries {
        PSeries {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> PSeries {
        if c.is_zero() {
            return PSeries::zero(self.trunc);
        }
        PSeries {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies every term by the monomial `c·m` (dropping overflow).
    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> PSeries {
        let mut out = PSeries::zero(self.trunc);
        for (k, v) in &self.terms {
            out.add_term(k.mul(m), v * c);
        }
        out
    }

    pub fn mul(&self, other: &PSeries) -> Result<PSeries> {
        self.check_same(other)?;
        let n = self.trunc.n();
        let g = self.trunc.g();
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        // terms are ordered by x-degree first, so the inner loop can stop early
        for (ma, ca) in &self.terms {
            if ma.x() > n {
                break;
            }
            for (mb, cb) in &other.terms {
                if ma.x() + mb.x() > n {
                    break;
                }
                if ma.z() + mb.z() > g {
                    continue;
                }
                let prod = ca * cb;
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += prod;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(PSeries { trunc: self.trunc, terms: acc })
    }

    pub fn pow(&self, e: u32) -> Result<PSeries> {
        let mut out = PSeries::one(self.trunc);
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Splits the series by grade (`x`-degree + `z`-degree).
    fn graded(&self) -> Vec<PSeries> {
        let mut pieces = vec![PSeries::zero(self.trunc); self.trunc.max_grade() as usize + 1];
        for (m, c) in &self.terms {
            pieces[m.grade() as usize].terms.insert(m.clone(), c.clone());
        }
        pieces
    }

    fn require_no_constant(&self, op: &str) -> Result<()> {
        if let Some((m, _)) = self.terms.iter().find(|(m, _)| m.grade() == 0) {
            return Err(HurwitzError::Domain(format!(
                "{op} needs a series without constant term, found {m}"
            )));
        }
        Ok(())
    }

    fn sum_graded(trunc: Truncation, pieces: Vec<PSeries>) -> PSeries {
        let mut out = PSeries::zero(trunc);
        for piece in pieces {
            out.terms.extend(piece.terms);
        }
        out
    }

    /// Exponential of a series with zero constant term, by the graded
    /// recurrence `d·h_d = Σ_{j=1}^{d} j·f_j·h_{d-j}`.
    pub fn exp(&self) -> Result<PSeries> {
        self.require_no_constant("exp")?;
        let f = self.graded();
        let top = f.len();
        let mut h = Vec::with_capacity(top);
        h.push(PSeries::one(self.trunc));
        for d in 1..top {
            let mut acc = PSeries::zero(self.trunc);
            for j in 1..=d {
                if f[j].is_zero() || h[d - j].is_zero() {
                    continue;
                }
                let term = f[j].mul(&h[d - j])?.scale(&Rational::from_integer(BigInt::from(j)));
                acc = acc.add(&term)?;
            }
            h.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(d))));
        }
        Ok(Self::sum_graded(self.trunc, h))
    }

    /// `log(1 + f)` for `f` with zero constant term.
    pub fn log1(&self) -> Result<PSeries> {
        self.require_no_constant("log1")?;
        let f = self.graded();
        let top = f.len();
        let mut l: Vec<PSeries> = Vec::with_capacity(top);
        l.push(PSeries::zero(self.trunc));
        for d in 1..top {
            let mut acc = PSeries::zero(self.trunc);
            for j in 1..d {
                if l[j].is_zero() || f[d - j].is_zero() {
                    continue;
                }
                let term = l[j].mul(&f[d - j])?.scale(&Rational::from_integer(BigInt::from(j)));
                acc = acc.add(&term)?;
            }
            let piece = f[d].sub(&acc.scale(&Rational::new(BigInt::one(), BigInt::from(d))))?;
            l.push(piece);
        }
        Ok(Self::sum_graded(self.trunc, l))
    }

    /// Multiplicative inverse of a series whose constant part is a nonzero
    /// rational.
    pub fn recip(&self) -> Result<PSeries> {
        let f = self.graded();
        let c0 = match f[0].terms.iter().next() {
            Some((m, c)) if f[0].len() == 1 && *m == Monomial::one() => c.clone(),
            _ => {
                return Err(HurwitzError::Domain(
                    "recip needs a nonzero rational constant term and no other grade-0 terms".into(),
                ))
            }
        };
        let inv0 = c0.recip();
        let top = f.len();
        let mut h: Vec<PSeries> = Vec::with_capacity(top);
        h.push(PSeries::constant(self.trunc, inv0.clone()));
        for d in 1..top {
            let mut acc = PSeries::zero(self.trunc);
            for j in 1..=d {
                if f[j].is_zero() || h[d - j].is_zero() {
                    continue;
                }
                acc = acc.add(&f[j].mul(&h[d - j])?)?;
            }
            h.push(acc.scale(&-inv0.clone()));
        }
        Ok(Self::sum_graded(self.trunc, h))
    }

    /// `1 / (1 - self)` for `self` with zero constant term.
    pub fn inv_one_minus(&self) -> Result<PSeries> {
        self.require_no_constant("inv_one_minus")?;
        PSeries::one(self.trunc).sub(self)?.recip()
    }

    /// Formal partial derivative with respect to `p_k`.
    pub fn pdiff(&self, k: u32) -> Result<PSeries> {
        if k == 0 || k > self.trunc.k() {
            return Err(HurwitzError::Usage(format!(
                "pdiff index {k} outside 1..={}",
                self.trunc.k()
            )));
        }
        let mut out = PSeries::zero(self.trunc);
        for (m, c) in &self.terms {
            if let Some((rest, e)) = m.remove_p(k) {
                out.add_term(rest, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        Ok(out)
    }

    /// Euler operator `x ∂/∂x`.
    pub fn xdiff(&self) -> PSeries {
        let mut out = PSeries::zero(self.trunc);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * Rational::from_integer(BigInt::from(m.x())));
        }
        out
    }

    /// Coefficient of `z^g` as a series without `z`.
    pub fn z_slice(&self, g: u32) -> PSeries {
        let mut out = PSeries::zero(self.trunc);
        for (m, c) in &self.terms {
            if m.z() == g {
                out.add_term(Monomial::new(m.x(), 0, m.p_exps().to_vec()), c.clone());
            }
        }
        out
    }

    /// Replaces `x` by `s`. Every term of `s` must have positive `x`-degree.
    pub fn subst_x(&self, s: &PSeries) -> Result<PSeries> {
        self.check_same(s)?;
        if let Some((m, _)) = s.terms.iter().find(|(m, _)| m.x() == 0) {
            return Err(HurwitzError::Domain(format!(
                "substituted series must have zero constant term in x, found {m}"
            )));
        }
        let mut by_degree: BTreeMap<u32, PSeries> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_degree
                .entry(m.x())
                .or_insert_with(|| PSeries::zero(self.trunc))
                .add_term(m.with_x(0), c.clone());
        }
        let mut out = PSeries::zero(self.trunc);
        let mut power = PSeries::one(self.trunc);
        let mut at = 0;
        for (d, coeff) in by_degree {
            while at < d {
                power = power.mul(s)?;
                at += 1;
            }
            if power.is_zero() {
                break;
            }
            out = out.add(&coeff.mul(&power)?)?;
        }
        Ok(out)
    }

    /// Coefficient of `x^n z^g p_α`.
    pub fn coeff(&self, x_deg: u32, z_deg: u32, alpha: &Partition) -> Result<Rational> {
        let max_part = alpha.parts().first().copied().unwrap_or(0);
        if x_deg > self.trunc.n() || z_deg > self.trunc.g() || max_part > self.trunc.k() {
            return Err(HurwitzError::Usage(format!(
                "coefficient of x^{x_deg} z^{z_deg} p{alpha} lies outside {}",
                self.trunc
            )));
        }
        Ok(self.coeff_of(&Monomial::from_parts(x_deg, z_deg, alpha.parts())))
    }

    /// Coefficient of an arbitrary monomial (zero if absent).
    pub fn coeff_of(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Solves `s = builder(s)` by iterating `N` times from zero, then checks
    /// that one more application changes nothing.
    pub fn solve_fixed_point<F>(trunc: Truncation, builder: F) -> Result<PSeries>
    where
        F: Fn(&PSeries) -> Result<PSeries>,
    {
        let mut s = PSeries::zero(trunc);
        for _ in 0..trunc.n() {
            s = builder(&s)?;
        }
        let again = builder(&s)?;
        if again != s {
            let witness = again.sub(&s)?;
            let (m, _) = witness.terms.iter().next().expect("nonzero difference");
            return Err(HurwitzError::Convergence(format!(
                "builder is not an x-adic contraction; iterate still moves at {m}"
            )));
        }
        if s.terms.keys().any(|m| m.grade() == 0) {
            return Err(HurwitzError::Convergence("fixed point has a constant term".into()));
        }
        Ok(s)
    }

    /// JSON list of `{"x", "z", "p": [[index, exponent], ...], "c": "num/den"}`
    /// sorted by `(x, z, p)`.
    pub fn to_json(&self) -> Value {
        let mut rows: Vec<(u32, u32, Vec<[u32; 2]>, &Rational)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.x(), m.z(), m.p_pairs(), c))
            .collect();
        rows.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
        Value::Array(
            rows.into_iter()
                .map(|(x, z, p, c)| json!({"x": x, "z": z, "p": p, "c": c.to_string()}))
                .collect(),
        )
    }

    pub fn from_json(trunc: Truncation, value: &Value) -> Result<PSeries> {
        let bad = |what: &str| HurwitzError::Parse(format!("series JSON: {what}"));
        let rows = value.as_array().ok_or_else(|| bad("expected a list"))?;
        let mut terms = Vec::with_capacity(rows.len());
        for row in rows {
            let x = row["x"].as_u64().ok_or_else(|| bad("missing x"))? as u32;
            let z = row["z"].as_u64().ok_or_else(|| bad("missing z"))? as u32;
            let c = parse_rational(row["c"].as_str().ok_or_else(|| bad("missing c"))?)?;
            let mut p = Vec::new();
            for pair in row["p"].as_array().ok_or_else(|| bad("missing p"))? {
                let idx = pair[0].as_u64().filter(|&i| i >= 1).ok_or_else(|| bad("p index"))?;
                let exp = pair[1].as_u64().ok_or_else(|| bad("p exponent"))?;
                let idx = idx as usize - 1;
                if p.len() <= idx {
                    p.resize(idx + 1, 0);
                }
                p[idx] += exp as u32;
            }
            terms.push((Monomial::new(x, z, p), c));
        }
        PSeries::from_terms(trunc, terms)
    }
}

impl fmt::Display for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if *m == Monomial::one() {
                    c.to_string()
                } else if c.is_one() {
                    m.to_string()
                } else {
                    format!("({c})*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Σ_r Φ_r u^r / r!` stored as the list `Φ_0, Φ_1, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct USeries {
    trunc: Truncation,
    coeffs: Vec<PSeries>,
}

impl USeries {
    pub fn new(trunc: Truncation) -> Self {
        USeries { trunc, coeffs: Vec::new() }
    }

    pub fn trunc(&self) -> Truncation {
        self.trunc
    }

    pub fn push(&mut self, phi: PSeries) -> Result<()> {
        if phi.trunc() != self.trunc {
            return Err(HurwitzError::TruncationMismatch {
                left: self.trunc.to_string(),
                right: phi.trunc().to_string(),
            });
        }
        if self.coeffs.len() > self.trunc.r() as usize {
            return Err(HurwitzError::Usage(format!("u-order beyond R={}", self.trunc.r())));
        }
        self.coeffs.push(phi);
        Ok(())
    }

    /// `Φ_r`, the coefficient of `u^r / r!`.
    pub fn get(&self, r: u32) -> Option<&PSeries> {
        self.coeffs.get(r as usize)
    }

    pub fn orders(&self) -> &[PSeries] {
        &self.coeffs
    }

    /// Number of stored orders (`r` runs over `0..len()`).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The series at `u = 1`: `Σ_r Φ_r / r!`.
    pub fn at_u_one(&self) -> Result<PSeries> {
        let mut out = PSeries::zero(self.trunc);
        for (r, phi) in self.coeffs.iter().enumerate() {
            let w = Rational::new(BigInt::one(), factorial(r as u32));
            out = out.add(&phi.scale(&w))?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn t(n: u32) -> Truncation {
        Truncation::new(n, n.max(3), 1).unwrap()
    }

    fn xp1(tr: Truncation) -> PSeries {
        PSeries::monomial(tr, Monomial::from_parts(1, 0, &[1]), int(1)).unwrap()
    }

    #[test]
    fn monomial_products() {
        let tr = t(4);
        let a = xp1(tr);
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq.len(), 1);
        assert_eq!(sq.coeff_of(&Monomial::from_parts(2, 0, &[1, 1])), int(1));
        assert!(a.mul(&PSeries::zero(tr)).unwrap().is_zero());
    }

    #[test]
    fn product_drops_beyond_n() {
        let tr = Truncation::new(1, 1, 0).unwrap();
        let one = PSeries::one(tr);
        let x = PSeries::x(tr);
        let prod = one.add(&x).unwrap().mul(&one.sub(&x).unwrap()).unwrap();
        assert_eq!(prod, one);
    }

    #[test]
    fn mismatched_truncations_are_rejected() {
        let a = PSeries::x(t(3));
        let b = PSeries::x(t(4));
        assert!(matches!(a.add(&b), Err(HurwitzError::TruncationMismatch { .. })));
        assert!(matches!(a.mul(&b), Err(HurwitzError::TruncationMismatch { .. })));
    }

    #[test]
    fn exp_examples() {
        let tr = Truncation::new(2, 2, 0).unwrap();
        assert_eq!(PSeries::zero(tr).exp().unwrap(), PSeries::one(tr));
        let e = xp1(tr).exp().unwrap();
        let expected = PSeries::from_terms(
            tr,
            vec![
                (Monomial::one(), int(1)),
                (Monomial::from_parts(1, 0, &[1]), int(1)),
                (Monomial::from_parts(2, 0, &[1, 1]), rat(1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(e, expected);
        let tr3 = Truncation::new(3, 3, 0).unwrap();
        let e3 = xp1(tr3).exp().unwrap();
        assert_eq!(e3.coeff(3, 0, &Partition::new(vec![1, 1, 1]).unwrap()).unwrap(), rat(1, 6));
    }

    #[test]
    fn exp_rejects_constant_term() {
        let tr = t(3);
        let f = PSeries::one(tr).add(&PSeries::x(tr)).unwrap();
        assert!(matches!(f.exp(), Err(HurwitzError::Domain(_))));
        assert!(matches!(f.log1(), Err(HurwitzError::Domain(_))));
        let pure_p = PSeries::p(tr, 2).unwrap();
        assert!(matches!(pure_p.exp(), Err(HurwitzError::Domain(_))));
    }

    #[test]
    fn z_only_terms_are_graded() {
        let tr = Truncation::new(2, 2, 2).unwrap();
        let e = PSeries::z(tr).exp().unwrap();
        assert_eq!(e.coeff_of(&Monomial::new(0, 2, vec![])), rat(1, 2));
    }

    #[test]
    fn derivative_examples() {
        let tr = t(4);
        let f = PSeries::monomial(tr, Monomial::from_parts(4, 0, &[2, 2]), int(1)).unwrap();
        let d = f.pdiff(2).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.coeff_of(&Monomial::from_parts(4, 0, &[2])), int(2));
        let g = PSeries::monomial(tr, Monomial::from_parts(3, 0, &[3]), int(1)).unwrap();
        assert_eq!(g.xdiff(), g.scale(&int(3)));
        assert!(matches!(f.pdiff(tr.k() + 1), Err(HurwitzError::Usage(_))));
        assert!(matches!(f.pdiff(0), Err(HurwitzError::Usage(_))));
    }

    #[test]
    fn substitution_examples() {
        let tr = t(3);
        let x = PSeries::x(tr);
        let s = x.add(&x.mul(&x).unwrap()).unwrap();
        assert_eq!(x.subst_x(&s).unwrap(), s);
        let x2 = x.mul(&x).unwrap();
        let got = x2.subst_x(&s).unwrap();
        let expected = x2.add(&x2.mul(&x).unwrap().scale(&int(2))).unwrap();
        assert_eq!(got, expected);
        let bad = s.add(&PSeries::one(tr)).unwrap();
        assert!(matches!(x.subst_x(&bad), Err(HurwitzError::Domain(_))));
    }

    #[test]
    fn fixed_point_without_p_dependence() {
        let tr = t(5);
        let s = PSeries::solve_fixed_point(tr, |_| Ok(PSeries::x(tr))).unwrap();
        assert_eq!(s, PSeries::x(tr));
    }

    #[test]
    fn fixed_point_detects_non_contraction() {
        let tr = t(3);
        // s -> x + 2s never settles
        let err = PSeries::solve_fixed_point(tr, |s| PSeries::x(tr).add(&s.scale(&int(2))))
            .unwrap_err();
        assert!(matches!(err, HurwitzError::Convergence(_)));
    }

    #[test]
    fn tree_function_coefficients() {
        let tr = Truncation::new(10, 10, 0).unwrap();
        let x = PSeries::x(tr);
        let w = PSeries::solve_fixed_point(tr, |w| x.mul(&w.exp()?)).unwrap();
        for n in 1..=10u32 {
            let expected = Rational::new(BigInt::from(n).pow(n - 1), factorial(n));
            assert_eq!(w.coeff_of(&Monomial::new(n, 0, vec![])), expected, "n = {n}");
        }
    }

    #[test]
    fn coeff_out_of_range() {
        let tr = t(3);
        let f = xp1(tr);
        assert_eq!(f.coeff(1, 0, &Partition::new(vec![1]).unwrap()).unwrap(), int(1));
        assert!(PSeries::zero(tr).coeff(2, 1, &Partition::new(vec![2]).unwrap()).unwrap().is_zero());
        assert!(f.coeff(4, 0, &Partition::new(vec![1]).unwrap()).is_err());
        assert!(f.coeff(1, 2, &Partition::new(vec![1]).unwrap()).is_err());
        assert!(f.coeff(1, 0, &Partition::new(vec![4]).unwrap()).is_err());
    }

    #[test]
    fn recip_and_geometric_inverse() {
        let tr = t(5);
        let x = PSeries::x(tr);
        let g = x.inv_one_minus().unwrap();
        for n in 0..=5 {
            assert_eq!(g.coeff_of(&Monomial::new(n, 0, vec![])), int(1));
        }
        let f = PSeries::constant(tr, int(3)).add(&x).unwrap();
        assert_eq!(f.mul(&f.recip().unwrap()).unwrap(), PSeries::one(tr));
    }

    #[test]
    fn json_layout_and_round_trip() {
        let tr = t(3);
        let f = PSeries::from_terms(
            tr,
            vec![
                (Monomial::from_parts(3, 0, &[2, 1]), rat(3, 2)),
                (Monomial::from_parts(1, 0, &[1]), int(1)),
                (Monomial::new(0, 1, vec![]), int(-2)),
            ],
        )
        .unwrap();
        let text = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(
            text,
            r#"[{"c":"-2","p":[],"x":0,"z":1},{"c":"1","p":[[1,1]],"x":1,"z":0},{"c":"3/2","p":[[1,1],[2,1]],"x":3,"z":0}]"#
        );
        assert_eq!(PSeries::from_json(tr, &f.to_json()).unwrap(), f);
    }

    #[test]
    fn useries_at_one() {
        let tr = Truncation::new(2, 2, 0).unwrap();
        let mut u = USeries::new(tr);
        u.push(PSeries::x(tr)).unwrap();
        u.push(PSeries::x(tr)).unwrap();
        u.push(PSeries::x(tr).scale(&int(2))).unwrap();
        assert_eq!(u.at_u_one().unwrap(), PSeries::x(tr).scale(&int(3)));
        let other = Truncation::new(3, 3, 0).unwrap();
        assert!(u.push(PSeries::x(other)).is_err());
    }
}
