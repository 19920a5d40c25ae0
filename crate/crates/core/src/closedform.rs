//! Explicit formulas: genus-0 and genus-1 Hurwitz numbers, the genus-1
//! generating series `G_1` (term by term and in closed form through the
//! series `s = x·exp(ψ_0(s, p))`), the genus-0 derivatives used by the
//! verifier, and the tree function `w = x·e^w`.
//!
//! The first `p`-derivative of `F_0` (see [`f0_pdiff`]) is taken as known
//! input from the transitive-factorization literature; it is checked here
//! only against `F_0` assembled from the genus-0 formula.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{as_integer, factorial, rat_pow, Monomial, PSeries, Rational, Truncation};
use crate::partitions::{a_coeff, class_size, elem_sym, partitions_of, psi, Partition};
use crate::{factorization_length, HurwitzError, Result};

/// One Hurwitz number together with the count it comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzRecord {
    pub alpha: Partition,
    pub genus: u32,
    /// `μ_m^{(g)}(α)`
    pub mu: Rational,
    /// `c_g(α)`
    pub c: BigInt,
    pub r: u32,
}

impl HurwitzRecord {
    /// Builds the record from `c_g(α)`, setting `μ = |C_α| c / n!`.
    pub fn from_count(alpha: Partition, genus: u32, c: BigInt) -> Result<Self> {
        let r = factorization_length(&alpha, genus)
            .ok_or_else(|| HurwitzError::Usage("empty partition at genus 0".into()))?;
        let mu = Rational::new(class_size(&alpha) * &c, factorial(alpha.n()));
        Ok(HurwitzRecord { alpha, genus, mu, c, r })
    }
}

fn require_nonempty(alpha: &Partition) -> Result<()> {
    if alpha.is_empty() {
        return Err(HurwitzError::Usage("Hurwitz formulas need a nonempty partition".into()));
    }
    Ok(())
}

fn a_product(alpha: &Partition) -> Rational {
    alpha
        .parts()
        .iter()
        .map(|&p| a_coeff(p).expect("parts are positive"))
        .fold(Rational::one(), |acc, a| acc * a)
}

fn class_fraction(alpha: &Partition) -> Rational {
    Rational::new(class_size(alpha), factorial(alpha.n()))
}

fn ratint(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Genus-0 Hurwitz number
/// `(|C_α|/n!) (n+m-2)! n^{m-3} Π α_i^{α_i}/(α_i-1)!`.
pub fn mu0(alpha: &Partition) -> Result<Rational> {
    require_nonempty(alpha)?;
    let n = alpha.n();
    let m = alpha.len();
    Ok(class_fraction(alpha)
        * ratint(factorial(n + m - 2))
        * rat_pow(&ratint(n), m as i64 - 3)
        * a_product(alpha))
}

/// `n^m - n^{m-1} - Σ_{i=2}^{m} (i-2)! e_i n^{m-i}`.
fn genus_one_bracket(alpha: &Partition) -> BigInt {
    let n = BigInt::from(alpha.n());
    let m = alpha.len();
    let mut acc = n.pow(m) - n.pow(m - 1);
    for i in 2..=m {
        acc -= factorial(i - 2) * elem_sym(alpha, i) * n.pow(m - i);
    }
    acc
}

/// Genus-1 Hurwitz number
/// `(|C_α|/(24 n!)) (n+m)! (Π α_i^{α_i}/(α_i-1)!) · bracket(α)`.
pub fn mu1(alpha: &Partition) -> Result<Rational> {
    require_nonempty(alpha)?;
    let n = alpha.n();
    let m = alpha.len();
    Ok(class_fraction(alpha) / ratint(24)
        * ratint(factorial(n + m))
        * a_product(alpha)
        * ratint(genus_one_bracket(alpha)))
}

/// The closed-form `μ` for genus 0 or 1.
pub fn predicted_mu(alpha: &Partition, genus: u32) -> Result<Rational> {
    match genus {
        0 => mu0(alpha),
        1 => mu1(alpha),
        g => Err(HurwitzError::Usage(format!("closed forms exist for genus 0 and 1 only (got {g})"))),
    }
}

/// `c_g(α) = μ·n!/|C_α|`, which must be a nonnegative integer.
pub fn predicted_c(alpha: &Partition, genus: u32) -> Result<BigInt> {
    let mu = predicted_mu(alpha, genus)?;
    let c = mu / class_fraction(alpha);
    match as_integer(&c) {
        Some(v) if v >= BigInt::zero() => Ok(v),
        _ => Err(HurwitzError::Integrality(format!("c_{genus}{alpha} predicted as {c}"))),
    }
}

/// `F_0 = Σ μ_0(α)/(n+m-2)! x^n p_α`, assembled from the genus-0 formula.
pub fn f0_from_formula(trunc: Truncation) -> Result<PSeries> {
    let mut terms = Vec::new();
    for n in 1..=trunc.n() {
        for alpha in partitions_of(n) {
            let w = mu0(&alpha)? / ratint(factorial(n + alpha.len() - 2));
            terms.push((alpha.monomial(), w));
        }
    }
    PSeries::from_terms(trunc, terms)
}

/// `G_1` term by term:
/// `(1/24) Σ |C_α| (Π a_{α_i}) bracket(α) x^n/n! p_α`.
pub fn g1_defn(trunc: Truncation) -> Result<PSeries> {
    let mut terms = Vec::new();
    for n in 1..=trunc.n() {
        for alpha in partitions_of(n) {
            let w = class_fraction(&alpha) / ratint(24)
                * a_product(&alpha)
                * ratint(genus_one_bracket(&alpha));
            terms.push((alpha.monomial(), w));
        }
    }
    PSeries::from_terms(trunc, terms)
}

/// The series `s` and the compositions `ψ_i(s, p)`.
#[derive(Debug, Clone)]
pub struct SSeries {
    trunc: Truncation,
    s: PSeries,
    psis: BTreeMap<i32, PSeries>,
    inv: PSeries,
}

impl SSeries {
    /// Solves `s = x·exp(ψ_0(s, p))` and precomputes `ψ_{-1} .. ψ_3` at `s`.
    pub fn new(trunc: Truncation) -> Result<Self> {
        let x = PSeries::x(trunc);
        let psi0 = psi(0, trunc);
        let s = PSeries::solve_fixed_point(trunc, |s| x.mul(&psi0.subst_x(s)?.exp()?))?;
        let mut psis = BTreeMap::new();
        for i in -1..=3 {
            psis.insert(i, psi(i, trunc).subst_x(&s)?);
        }
        let inv = psis[&1].inv_one_minus()?;
        Ok(SSeries { trunc, s, psis, inv })
    }

    pub fn trunc(&self) -> Truncation {
        self.trunc
    }

    pub fn s(&self) -> &PSeries {
        &self.s
    }

    /// `ψ_i(s, p)`.
    pub fn psi(&self, i: i32) -> Result<PSeries> {
        match self.psis.get(&i) {
            Some(v) => Ok(v.clone()),
            None => psi(i, self.trunc).subst_x(&self.s),
        }
    }

    /// `1/(1 - ψ_1(s, p))`, expanded as a series.
    pub fn inv_one_minus_psi1(&self) -> &PSeries {
        &self.inv
    }

    pub fn s_pow(&self, k: u32) -> Result<PSeries> {
        self.s.pow(k)
    }
}

/// `G_1 = (1/24) log (1-ψ_1)^{-1} - (1/24) ψ_0` with `ψ_i` at `s`.
pub fn g1_closed(trunc: Truncation) -> Result<PSeries> {
    g1_closed_from(&SSeries::new(trunc)?)
}

pub fn g1_closed_from(ctx: &SSeries) -> Result<PSeries> {
    let log_inv = ctx.psi(1)?.neg().log1()?.neg();
    let twenty_fourth = Rational::new(BigInt::one(), BigInt::from(24));
    Ok(log_inv.sub(&ctx.psi(0)?)?.scale(&twenty_fourth))
}

/// `∂F_0/∂p_k = (a_k/k³) s^k - (a_k/k²) Σ_{r≥1} a_r p_r s^{k+r}/(k+r)`.
pub fn f0_pdiff(k: u32, ctx: &SSeries) -> Result<PSeries> {
    let trunc = ctx.trunc();
    if k == 0 || k > trunc.k() {
        return Err(HurwitzError::Usage(format!("p-index {k} outside 1..={}", trunc.k())));
    }
    let ak = a_coeff(k)?;
    let kk = ratint(k);
    let mut out = ctx.s_pow(k)?.scale(&(ak.clone() / (&kk * &kk * &kk)));
    let lead = ak / (&kk * &kk);
    let mut power = ctx.s_pow(k + 1)?;
    for r in 1..=trunc.n().min(trunc.k()) {
        if power.is_zero() {
            break;
        }
        let pr = PSeries::p(trunc, r)?;
        let c = &lead * a_coeff(r)? / ratint(k + r);
        out = out.sub(&pr.mul(&power)?.scale(&c))?;
        power = power.mul(ctx.s())?;
    }
    Ok(out)
}

/// `∂²F_0/∂p_i∂p_j = (a_i a_j/(ij)) s^{i+j}/(i+j)`.
pub fn f0_second(i: u32, j: u32, ctx: &SSeries) -> Result<PSeries> {
    let c = a_coeff(i)? * a_coeff(j)? / ratint(i * j) / ratint(i + j);
    Ok(ctx.s_pow(i + j)?.scale(&c))
}

/// The tree function `w = x·e^w` and `w^{(j)} = (x d/dx)^j w` for `j = 1, 2, 3`.
#[derive(Debug, Clone)]
pub struct TreeSeries {
    pub w: PSeries,
    pub derivs: [PSeries; 3],
}

impl TreeSeries {
    /// `w^{(j)}` for `j = 0..=3`.
    pub fn order(&self, j: usize) -> &PSeries {
        match j {
            0 => &self.w,
            1..=3 => &self.derivs[j - 1],
            _ => panic!("tree derivatives are kept up to order 3"),
        }
    }
}

pub fn tree(trunc: Truncation) -> Result<TreeSeries> {
    let x = PSeries::x(trunc);
    let w = PSeries::solve_fixed_point(trunc, |w| x.mul(&w.exp()?))?;
    let d1 = w.xdiff();
    let d2 = d1.xdiff();
    let d3 = d2.xdiff();
    Ok(TreeSeries { w, derivs: [d1, d2, d3] })
}

/// Residuals of the derivative identities that feed the genus-1 proof.
/// Every returned series is zero when the identity holds to order `N`.
pub mod identities {
    use super::*;

    fn c24() -> Rational {
        Rational::new(BigInt::one(), BigInt::from(24))
    }

    /// `x ∂s/∂x · (1 - ψ_1) - s`.
    pub fn eq7(ctx: &SSeries) -> Result<PSeries> {
        let one_minus = PSeries::one(ctx.trunc()).sub(&ctx.psi(1)?)?;
        ctx.s().xdiff().mul(&one_minus)?.sub(ctx.s())
    }

    /// `k (1 - ψ_1) ∂s/∂p_k - a_k s^{k+1}`.
    pub fn eq8(k: u32, ctx: &SSeries) -> Result<PSeries> {
        let one_minus = PSeries::one(ctx.trunc()).sub(&ctx.psi(1)?)?;
        let lhs = ctx.s().pdiff(k)?.mul(&one_minus)?.scale(&ratint(k));
        lhs.sub(&ctx.s_pow(k + 1)?.scale(&a_coeff(k)?))
    }

    /// `∂ψ_j/∂p_k - k^{j-1} a_k s^k - (a_k/k) ψ_{j+1} s^k/(1 - ψ_1)`.
    pub fn eq9(j: i32, k: u32, ctx: &SSeries) -> Result<PSeries> {
        let ak = a_coeff(k)?;
        let sk = ctx.s_pow(k)?;
        let direct = sk.scale(&(rat_pow(&ratint(k), j as i64 - 1) * &ak));
        let chain = ctx
            .psi(j + 1)?
            .mul(&sk)?
            .mul(ctx.inv_one_minus_psi1())?
            .scale(&(ak / ratint(k)));
        ctx.psi(j)?.pdiff(k)?.sub(&direct)?.sub(&chain)
    }

    /// `∂F_0/∂p_k` from the genus-0 formula minus the `s`-expression.
    pub fn eq10(k: u32, f0: &PSeries, ctx: &SSeries) -> Result<PSeries> {
        f0.pdiff(k)?.sub(&f0_pdiff(k, ctx)?)
    }

    /// `∂/∂p_j` of the `s`-expression for `∂F_0/∂p_i` minus the closed second derivative.
    pub fn eq11(i: u32, j: u32, ctx: &SSeries) -> Result<PSeries> {
        f0_pdiff(i, ctx)?.pdiff(j)?.sub(&f0_second(i, j, ctx)?)
    }

    /// `(x ∂/∂x)² F_0 - ψ_0`.
    pub fn euler_f0(f0: &PSeries, ctx: &SSeries) -> Result<PSeries> {
        f0.xdiff().xdiff().sub(&ctx.psi(0)?)
    }

    /// `x ∂G_1/∂x - (1/24)(ψ_2/(1-ψ_1)² - ψ_1/(1-ψ_1))`.
    pub fn eq12(g1: &PSeries, ctx: &SSeries) -> Result<PSeries> {
        let inv = ctx.inv_one_minus_psi1();
        let rhs = ctx
            .psi(2)?
            .mul(&inv.mul(inv)?)?
            .sub(&ctx.psi(1)?.mul(inv)?)?
            .scale(&c24());
        g1.xdiff().sub(&rhs)
    }

    /// `∂G_1/∂p_k - (1/24) a_k s^k/(1-ψ_1) - (1/24)(a_k/k) s^k (ψ_2/(1-ψ_1)² - 1/(1-ψ_1))`.
    pub fn eq13(k: u32, g1: &PSeries, ctx: &SSeries) -> Result<PSeries> {
        let inv = ctx.inv_one_minus_psi1();
        let ak = a_coeff(k)?;
        let sk = ctx.s_pow(k)?;
        let first = sk.mul(inv)?.scale(&(c24() * &ak));
        let bracket = ctx.psi(2)?.mul(&inv.mul(inv)?)?.sub(inv)?;
        let second = sk.mul(&bracket)?.scale(&(c24() * ak / ratint(k)));
        g1.pdiff(k)?.sub(&first)?.sub(&second)
    }

    /// `w^{(1)}(1-w) - w`, `w^{(2)}(1-w)³ - w`, `w^{(3)}(1-w)⁵ - (w + 2w²)`.
    pub fn tree_derivatives(t: &TreeSeries) -> Result<[PSeries; 3]> {
        let trunc = t.w.trunc();
        let one_minus = PSeries::one(trunc).sub(&t.w)?;
        let w2 = t.w.mul(&t.w)?;
        Ok([
            t.derivs[0].mul(&one_minus)?.sub(&t.w)?,
            t.derivs[1].mul(&one_minus.pow(3)?)?.sub(&t.w)?,
            t.derivs[2]
                .mul(&one_minus.pow(5)?)?
                .sub(&t.w.add(&w2.scale(&ratint(2)))?)?,
        ])
    }
}

/// Coefficient of `x^n` in a series in `x` alone.
pub fn x_coeff(f: &PSeries, n: u32) -> Rational {
    f.coeff_of(&Monomial::new(n, 0, vec![]))
}
