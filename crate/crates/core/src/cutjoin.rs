//! The generating series `Φ` of all `c_g(α)`, built order by order in `u`
//! from the cut-and-join equation
//!
//! ```text
//! ∂Φ/∂u = ½ Σ_{i,j≥1} ( ij p_{i+j} z ∂²Φ/∂p_i∂p_j
//!                      + ij p_{i+j} (∂Φ/∂p_i)(∂Φ/∂p_j)
//!                      + (i+j) p_i p_j ∂Φ/∂p_{i+j} ).
//! ```
//!
//! `Φ = Σ_r Φ_r u^r/r!` is stored as the list of `Φ_r`. Reading the equation
//! at `u^r/r!` gives
//! `Φ_{r+1} = L(Φ_r) + Σ_{s=0}^{r} binom(r, s) J(Φ_s, Φ_{r-s})`
//! where `L` collects the two linear operator families and `J` is the
//! bilinear join across two components.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::algebra::{as_integer, binomial, factorial, Monomial, PSeries, Rational, Truncation, USeries};
use crate::partitions::{class_size, partitions_of, Partition};
use crate::{factorization_length, HurwitzError, Result};

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

fn int(n: u32) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `½ Σ_{i,j} ( ij p_{i+j} z ∂²f/∂p_i∂p_j + (i+j) p_i p_j ∂f/∂p_{i+j} )`.
pub fn linear_part(f: &PSeries) -> Result<PSeries> {
    let trunc = f.trunc();
    let k_max = trunc.k();
    let derivs: Vec<PSeries> = (1..=k_max).map(|i| f.pdiff(i)).collect::<Result<_>>()?;
    let mut acc = PSeries::zero(trunc);
    for i in 1..k_max {
        for j in 1..=(k_max - i) {
            // join with a handle: raises the genus by one
            if trunc.g() >= 1 {
                let second = derivs[i as usize - 1].pdiff(j)?;
                if !second.is_zero() {
                    let m = Monomial::from_parts(0, 1, &[i + j]);
                    acc = acc.add(&second.mul_monomial(&m, &(half() * int(i * j))))?;
                }
            }
            // cut an (i+j)-cycle into an i-cycle and a j-cycle
            let d = &derivs[(i + j) as usize - 1];
            if !d.is_zero() {
                let m = Monomial::from_parts(0, 0, &[i, j]);
                acc = acc.add(&d.mul_monomial(&m, &(half() * int(i + j))))?;
            }
        }
    }
    Ok(acc)
}

/// `½ Σ_{i,j} ij p_{i+j} (∂f/∂p_i)(∂g/∂p_j)` from precomputed first derivatives.
fn join_from_derivs(trunc: Truncation, df: &[PSeries], dg: &[PSeries]) -> Result<PSeries> {
    let k_max = trunc.k();
    let mut acc = PSeries::zero(trunc);
    for i in 1..k_max {
        let a = &df[i as usize - 1];
        let Some(amin) = a.min_x_degree() else { continue };
        for j in 1..=(k_max - i) {
            let b = &dg[j as usize - 1];
            let Some(bmin) = b.min_x_degree() else { continue };
            if amin + bmin > trunc.n() {
                continue;
            }
            let m = Monomial::from_parts(0, 0, &[i + j]);
            acc = acc.add(&a.mul(b)?.mul_monomial(&m, &(half() * int(i * j))))?;
        }
    }
    Ok(acc)
}

fn first_derivs(f: &PSeries) -> Result<Vec<PSeries>> {
    (1..=f.trunc().k()).map(|i| f.pdiff(i)).collect()
}

/// The bilinear join across `f` and `g`.
pub fn join_across(f: &PSeries, g: &PSeries) -> Result<PSeries> {
    if f.trunc() != g.trunc() {
        return Err(HurwitzError::TruncationMismatch {
            left: f.trunc().to_string(),
            right: g.trunc().to_string(),
        });
    }
    join_from_derivs(f.trunc(), &first_derivs(f)?, &first_derivs(g)?)
}

/// Right side of the cut-and-join equation with the quadratic term taken
/// bilinearly on `(f, g_partner)`.
pub fn rhs(f: &PSeries, g_partner: &PSeries) -> Result<PSeries> {
    linear_part(f)?.add(&join_across(f, g_partner)?)
}

/// `Φ_0, ..., Φ_r` together with their first `p`-derivatives.
#[derive(Debug, Clone)]
pub struct CutJoinState {
    phi: USeries,
    derivs: Vec<Vec<PSeries>>,
}

impl CutJoinState {
    /// The state holding only `Φ_0 = x p_1`, the empty factorization of the
    /// identity of `S_1`.
    pub fn initial(trunc: Truncation) -> Result<Self> {
        let phi0 = PSeries::monomial(trunc, Monomial::from_parts(1, 0, &[1]), Rational::from_integer(1.into()))?;
        let mut phi = USeries::new(trunc);
        let derivs = vec![first_derivs(&phi0)?];
        phi.push(phi0)?;
        Ok(CutJoinState { phi, derivs })
    }

    pub fn trunc(&self) -> Truncation {
        self.phi.trunc()
    }

    pub fn phi(&self) -> &USeries {
        &self.phi
    }

    /// Highest `u`-order computed so far.
    pub fn order(&self) -> u32 {
        self.phi.len() as u32 - 1
    }

    /// Appends `Φ_{r+1}`.
    pub fn step(&mut self) -> Result<()> {
        let trunc = self.trunc();
        let r = self.order();
        if r >= trunc.r() {
            return Err(HurwitzError::Usage(format!("stepper already at R={}", trunc.r())));
        }
        let mut next = linear_part(self.phi.get(r).expect("order r stored"))?;
        // J is symmetric, so pair s with r - s
        for s in 0..=(r / 2) {
            let t = r - s;
            let mut weight = Rational::from_integer(binomial(r, s));
            if s != t {
                weight *= int(2);
            }
            let joined = join_from_derivs(trunc, &self.derivs[s as usize], &self.derivs[t as usize])?;
            next = next.add(&joined.scale(&weight))?;
        }
        self.derivs.push(first_derivs(&next)?);
        self.phi.push(next)
    }

    /// Steps from `Φ_0` up to `Φ_R`.
    pub fn run(trunc: Truncation) -> Result<Self> {
        let mut state = Self::initial(trunc)?;
        while state.order() < trunc.r() {
            state.step()?;
        }
        Ok(state)
    }

    /// `c_g(α) = [x^n z^g p_α] Φ_r · n!/|C_α|`.
    pub fn extract_c(&self, alpha: &Partition, genus: u32) -> Result<BigInt> {
        let trunc = self.trunc();
        let r = factorization_length(alpha, genus)
            .ok_or_else(|| HurwitzError::Usage("empty partition at genus 0".into()))?;
        if alpha.is_empty() || alpha.n() > trunc.n() || genus > trunc.g() || r > self.order() {
            return Err(HurwitzError::Usage(format!(
                "c_{genus}{alpha} needs r={r} and lies outside the computed range ({trunc}, order {})",
                self.order()
            )));
        }
        let phi = self.phi.get(r).expect("order checked");
        let coeff = phi.coeff(alpha.n(), genus, alpha)?;
        let c = coeff * Rational::new(factorial(alpha.n()), class_size(alpha));
        as_integer(&c).ok_or_else(|| {
            HurwitzError::Integrality(format!("c_{genus}{alpha} extracted as {c}"))
        })
    }

    /// Every `c_g(α)` with `1 ≤ n ≤ N`, `g ≤ G` that fits in the computed orders.
    pub fn table(&self) -> Result<BTreeMap<(Partition, u32), BigInt>> {
        let trunc = self.trunc();
        let mut out = BTreeMap::new();
        for n in 1..=trunc.n() {
            for alpha in partitions_of(n) {
                for g in 0..=trunc.g() {
                    if factorization_length(&alpha, g).is_some_and(|r| r <= self.order()) {
                        let c = self.extract_c(&alpha, g)?;
                        out.insert((alpha.clone(), g), c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `F_g = [z^g] Φ(1, x, z, p)`.
    pub fn genus_slice(&self, genus: u32) -> Result<PSeries> {
        Ok(self.phi.at_u_one()?.z_slice(genus))
    }
}

/// Computes every `c_g(α)` with `n ≤ N`, `g ≤ G`.
pub fn run(trunc: Truncation) -> Result<BTreeMap<(Partition, u32), BigInt>> {
    CutJoinState::run(trunc)?.table()
}

/// Checks the shape of every stored `Φ_r`: each monomial `x^n z^g p_α` must
/// satisfy `n + m = r + 2 - 2g` with `n` equal to the weight of `α`.
pub fn check_shape(state: &CutJoinState) -> Option<(u32, Monomial)> {
    for (r, phi) in state.phi().orders().iter().enumerate() {
        for (m, _) in phi.terms() {
            let lhs = (m.x() + m.p_degree()) as i64;
            let rhs = r as i64 + 2 - 2 * m.z() as i64;
            if lhs != rhs || m.x() != m.p_weight() {
                return Some((r as u32, m.clone()));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn xp(tr: Truncation, x: u32, parts: &[u32], c: Rational) -> PSeries {
        PSeries::monomial(tr, Monomial::from_parts(x, 0, parts), c).unwrap()
    }

    #[test]
    fn first_orders_by_hand() {
        let tr = Truncation::new(3, 3, 1).unwrap();
        let mut state = CutJoinState::initial(tr).unwrap();
        state.step().unwrap();
        assert_eq!(state.phi().get(1).unwrap(), &xp(tr, 2, &[2], rat(1, 2)));
        state.step().unwrap();
        // (1,1) at genus 0 and (3) at genus 0, both at r = 2
        let expected = xp(tr, 2, &[1, 1], rat(1, 2)).add(&xp(tr, 3, &[3], rat(1, 1))).unwrap();
        assert_eq!(state.phi().get(2).unwrap(), &expected);
    }

    #[test]
    fn rhs_examples() {
        let tr = Truncation::new(3, 3, 1).unwrap();
        let phi0 = xp(tr, 1, &[1], rat(1, 1));
        assert_eq!(rhs(&phi0, &phi0).unwrap(), xp(tr, 2, &[2], rat(1, 2)));
        let zero = PSeries::zero(tr);
        assert!(rhs(&zero, &phi0).unwrap().is_zero());
        let other = Truncation::new(4, 4, 1).unwrap();
        assert!(rhs(&phi0, &PSeries::zero(other)).is_err());
    }

    #[test]
    fn small_counts() {
        let tr = Truncation::new(3, 3, 1).unwrap();
        let state = CutJoinState::run(tr).unwrap();
        assert_eq!(state.extract_c(&part(&[1]), 0).unwrap(), BigInt::from(1));
        assert_eq!(state.extract_c(&part(&[2]), 0).unwrap(), BigInt::from(1));
        assert_eq!(state.extract_c(&part(&[2]), 1).unwrap(), BigInt::from(1));
        assert_eq!(state.extract_c(&part(&[3]), 0).unwrap(), BigInt::from(3));
        assert_eq!(state.extract_c(&part(&[2, 1]), 1).unwrap(), BigInt::from(80));
        assert!(state.extract_c(&part(&[4]), 0).is_err());
        assert!(state.extract_c(&part(&[1]), 2).is_err());
    }

    #[test]
    fn orders_have_the_right_shape() {
        let state = CutJoinState::run(Truncation::new(5, 5, 1).unwrap()).unwrap();
        assert_eq!(check_shape(&state), None);
    }

    #[test]
    fn stepping_past_r_is_refused() {
        let tr = Truncation::with_r(2, 2, 0, 1).unwrap();
        let mut state = CutJoinState::run(tr).unwrap();
        assert!(state.step().is_err());
    }
}
