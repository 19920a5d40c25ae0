//! Polynomials in `y_k = p_k s^k`, kept as ordinary series in which `y_k` is
//! the monomial `x^k p_k`, and their symmetrization.

use super::forms::Form;
use super::WPoly;
use crate::algebra::{Monomial, PSeries, Rational, Truncation};
use crate::partitions::{a_coeff, psi};
use crate::{HurwitzError, Result};

/// Truncation holding every `y`-monomial of total weight at most `weight`.
pub fn y_trunc(weight: u32) -> Result<Truncation> {
    Truncation::new(weight, weight, 0)
}

/// `ψ_m` as a linear polynomial in the `y_k`.
pub fn psi_y(m: i32, trunc: Truncation) -> PSeries {
    psi(m, trunc)
}

/// `y_k`, that is `x^k p_k`.
pub fn y_var(trunc: Truncation, k: u32) -> Result<PSeries> {
    PSeries::monomial(trunc, Monomial::from_parts(k, 0, &[k]), Rational::from_integer(1.into()))
}

fn ratint(n: u32) -> Rational {
    Rational::from_integer(n.into())
}

/// One of the auxiliary series, with `p_k s^k` replaced by `y_k`:
///
/// ```text
/// A = Σ_{i,j} a_i a_j/(i+j) y_{i+j}
/// B = Σ_{i,j} i a_i a_j/j² y_{i+j}
/// C = Σ_{i,j,m} i a_i a_j a_m/(j(j+m)) y_{i+j} y_m - ½ Σ_{i,j} (i+j) a_{i+j} y_i y_j
/// D = Σ_{i,j} a_i a_j/j² y_{i+j}
/// E = Σ_{i,j,m} a_i a_j a_m/(j(j+m)) y_{i+j} y_m - ½ Σ_{i,j} a_{i+j} y_i y_j
/// ```
pub fn form_y(form: Form, trunc: Truncation) -> Result<PSeries> {
    let top = trunc.n().min(trunc.k());
    let a: Vec<Rational> = (0..=top)
        .map(|r| if r == 0 { Rational::from_integer(0.into()) } else { a_coeff(r).expect("r >= 1") })
        .collect();
    let y = |k: u32| y_var(trunc, k);
    let mut acc = PSeries::zero(trunc);
    match form {
        Form::A | Form::B | Form::D => {
            for i in 1..top {
                for j in 1..=(top - i) {
                    let base = &a[i as usize] * &a[j as usize];
                    let c = match form {
                        Form::A => base / ratint(i + j),
                        Form::B => base * ratint(i) / ratint(j * j),
                        _ => base / ratint(j * j),
                    };
                    acc = acc.add(&y(i + j)?.scale(&c))?;
                }
            }
        }
        Form::C | Form::E => {
            for i in 1..top {
                for j in 1..=(top - i) {
                    for m in 1..=(top - i - j) {
                        let mut c = &a[i as usize] * &a[j as usize] * &a[m as usize] / ratint(j * (j + m));
                        if form == Form::C {
                            c *= ratint(i);
                        }
                        acc = acc.add(&y(i + j)?.mul(&y(m)?)?.scale(&c))?;
                    }
                    let mut c = a[(i + j) as usize].clone() / ratint(2);
                    if form == Form::C {
                        c *= ratint(i + j);
                    }
                    acc = acc.sub(&y(i)?.mul(&y(j)?)?.scale(&c))?;
                }
            }
        }
    }
    Ok(acc)
}

/// `U_1 = ψ_2 - ψ_0 - 12A - B + D`.
pub fn u1_y(trunc: Truncation) -> Result<PSeries> {
    let twelve = ratint(12);
    psi_y(2, trunc)
        .sub(&psi_y(0, trunc))?
        .sub(&form_y(Form::A, trunc)?.scale(&twelve))?
        .sub(&form_y(Form::B, trunc)?)?
        .add(&form_y(Form::D, trunc)?)
}

/// `U_2 = ψ_0(ψ_1+ψ_2) + 24ψ_1 A + ψ_1 B + C - (ψ_1+ψ_2) D - E`.
pub fn u2_y(trunc: Truncation) -> Result<PSeries> {
    let p1p2 = psi_y(1, trunc).add(&psi_y(2, trunc))?;
    let psi1 = psi_y(1, trunc);
    psi_y(0, trunc)
        .mul(&p1p2)?
        .add(&psi1.mul(&form_y(Form::A, trunc)?)?.scale(&ratint(24)))?
        .add(&psi1.mul(&form_y(Form::B, trunc)?)?)?
        .add(&form_y(Form::C, trunc)?)?
        .sub(&p1p2.mul(&form_y(Form::D, trunc)?)?)?
        .sub(&form_y(Form::E, trunc)?)
}

/// `U_3 = -12ψ_1² A - ψ_1 C + (ψ_1+ψ_2) E`.
pub fn u3_y(trunc: Truncation) -> Result<PSeries> {
    let psi1 = psi_y(1, trunc);
    let p1p2 = psi1.add(&psi_y(2, trunc))?;
    psi1.mul(&psi1)?
        .mul(&form_y(Form::A, trunc)?)?
        .scale(&ratint(12))
        .neg()
        .sub(&psi1.mul(&form_y(Form::C, trunc)?)?)?
        .add(&p1p2.mul(&form_y(Form::E, trunc)?)?)
}

const ORBITS: [&[[usize; 3]]; 4] = [
    &[[0, 0, 0]],
    &[[0, 0, 0]],
    &[[0, 1, 0], [1, 0, 0]],
    &[[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]],
];

/// `y_{α_1} ⋯ y_{α_d} ↦ Σ_{π ∈ S_d} x_{π(1)}^{α_1} ⋯ x_{π(d)}^{α_d}`, extended
/// linearly. With `cap = Some(M)` exponents above `M` are dropped.
pub fn symmetrize(f: &PSeries, degree: usize, cap: Option<u32>) -> Result<WPoly> {
    if !(1..=3).contains(&degree) {
        return Err(HurwitzError::Usage(format!("symmetrization degree {degree} outside 1..=3")));
    }
    let mut out = WPoly::zero(cap);
    for (m, c) in f.terms() {
        if m.p_degree() as usize != degree || m.z() != 0 {
            return Err(HurwitzError::Usage(format!(
                "term {m} is not homogeneous of degree {degree} in the y-variables"
            )));
        }
        let parts = m.parts();
        for pi in ORBITS[degree] {
            let mut e = [0u32; 3];
            for (k, &part) in parts.iter().enumerate() {
                e[pi[k]] += part;
            }
            out.add_term(e, c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn y_mono(tr: Truncation, parts: &[u32]) -> PSeries {
        let w: u32 = parts.iter().sum();
        PSeries::monomial(tr, Monomial::from_parts(w, 0, parts), rat(1, 1)).unwrap()
    }

    #[test]
    fn symmetrize_small_monomials() {
        let tr = y_trunc(6).unwrap();
        let s = symmetrize(&y_mono(tr, &[2]), 1, None).unwrap();
        assert_eq!(s.to_string(), "(1)*w1^2");
        let s = symmetrize(&y_mono(tr, &[2, 1]), 2, None).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.coeff([1, 2, 0]), rat(1, 1));
        assert_eq!(s.coeff([2, 1, 0]), rat(1, 1));
        // a repeated part doubles up
        let s = symmetrize(&y_mono(tr, &[1, 1]), 2, None).unwrap();
        assert_eq!(s.coeff([1, 1, 0]), rat(2, 1));
    }

    #[test]
    fn symmetrize_rejects_mixed_degrees() {
        let tr = y_trunc(6).unwrap();
        let f = y_mono(tr, &[2]).add(&y_mono(tr, &[1, 1])).unwrap();
        assert!(symmetrize(&f, 1, None).is_err());
        assert!(symmetrize(&f, 4, None).is_err());
    }

    #[test]
    fn a_form_low_terms() {
        // A = Σ_k y_k/k Σ_{i+j=k} a_i a_j; a_1 = 1, a_2 = 4
        let tr = y_trunc(3).unwrap();
        let a = form_y(Form::A, tr).unwrap();
        assert_eq!(a.coeff_of(&Monomial::from_parts(2, 0, &[2])), rat(1, 2));
        assert_eq!(a.coeff_of(&Monomial::from_parts(3, 0, &[3])), rat(8, 3));
    }

    #[test]
    fn u_polynomials_vanish() {
        let tr = y_trunc(7).unwrap();
        assert!(u1_y(tr).unwrap().is_zero());
        assert!(u2_y(tr).unwrap().is_zero());
        assert!(u3_y(tr).unwrap().is_zero());
    }
}
