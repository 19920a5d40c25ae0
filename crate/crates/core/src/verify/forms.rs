//! Symmetrized images of `ψ_m` and of the five auxiliary series `A .. E`,
//! and the symmetrized `U_1, U_2, U_3` built from them.

use std::fmt;

use super::SymExpr;
use crate::algebra::{rat, Rational};

/// The five auxiliary series appearing in the genus-one residual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Form {
    A,
    B,
    C,
    D,
    E,
}

impl Form {
    pub const ALL: [Form; 5] = [Form::A, Form::B, Form::C, Form::D, Form::E];

    /// Number of `y`-variables in each monomial.
    pub fn degree(self) -> usize {
        match self {
            Form::A | Form::B | Form::D => 1,
            Form::C | Form::E => 2,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Form::A => "A",
            Form::B => "B",
            Form::C => "C",
            Form::D => "D",
            Form::E => "E",
        };
        f.write_str(s)
    }
}

/// Coefficients of the closed forms, term by term:
///
/// ```text
/// ϖ(A)_i   = c0 (1-w_i) w_i''' + c1 w_i w_i'' + c2 w_i'
/// ϖ(B)_i   = c0 w_i''' w_i
/// ϖ(C)_ij  = c0 w_i''' w_j' + c1 w_i' w_j''' + (c2 w_i''' w_j' + c3 w_i' w_j''')/(w_i - w_j)
/// ϖ(D)_i   = c0 w_i'' w_i
/// ϖ(E)_ij  = same as C with w'' in place of w'''
/// ```
///
/// Primes count applications of `x d/dx`. Perturbing a coefficient is how
/// the checks are shown to be able to fail.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForms {
    coeffs: [Vec<Rational>; 5],
}

impl Default for ClosedForms {
    fn default() -> Self {
        let twelfth = rat(1, 12);
        let m = || rat(-1, 1);
        ClosedForms {
            coeffs: [
                vec![twelfth.clone(), twelfth.clone(), -twelfth],
                vec![rat(1, 1)],
                vec![m(), m(), m(), rat(1, 1)],
                vec![rat(1, 1)],
                vec![m(), m(), m(), rat(1, 1)],
            ],
        }
    }
}

impl ClosedForms {
    pub fn term_count(form: Form) -> usize {
        ClosedForms::default().coeffs[form.index()].len()
    }

    pub fn coeff(&self, form: Form, term: usize) -> &Rational {
        &self.coeffs[form.index()][term]
    }

    /// Adds `delta` to one coefficient.
    pub fn perturbed(&self, form: Form, term: usize, delta: &Rational) -> Self {
        let mut out = self.clone();
        out.coeffs[form.index()][term] += delta;
        out
    }

    fn c(&self, form: Form, term: usize) -> SymExpr {
        SymExpr::constant(self.coeff(form, term).clone())
    }

    /// `ϖ(f)` on the variables `vars` (one index for degree-one forms, two
    /// for `C` and `E`).
    pub fn image(&self, form: Form, vars: &[usize]) -> SymExpr {
        assert_eq!(vars.len(), form.degree(), "{form} takes {} variables", form.degree());
        let w = SymExpr::w;
        match form {
            Form::A => {
                let i = vars[0];
                self.c(form, 0) * SymExpr::one_minus(i) * w(i, 3)
                    + self.c(form, 1) * w(i, 0) * w(i, 2)
                    + self.c(form, 2) * w(i, 1)
            }
            Form::B => self.c(form, 0) * w(vars[0], 3) * w(vars[0], 0),
            Form::D => self.c(form, 0) * w(vars[0], 2) * w(vars[0], 0),
            Form::C | Form::E => {
                let top = if form == Form::C { 3 } else { 2 };
                let (i, j) = (vars[0], vars[1]);
                let quotient = (self.c(form, 2) * w(i, top) * w(j, 1)
                    + self.c(form, 3) * w(i, 1) * w(j, top))
                .over_diff(i, j);
                self.c(form, 0) * w(i, top) * w(j, 1) + self.c(form, 1) * w(i, 1) * w(j, top) + quotient
            }
        }
    }
}

/// `ϖ(ψ_m)` on variable `i`.
pub fn psi_image(m: i32, i: usize) -> SymExpr {
    assert!((-1..=2).contains(&m), "ψ_m images are tabulated for -1 <= m <= 2");
    SymExpr::w(i, (m + 1) as u8)
}

/// `ϖ(fg) = ϖ_1(f) ϖ_2(g) + ϖ_2(f) ϖ_1(g)` for degree-one `f`, `g`.
fn pair(f: impl Fn(usize) -> SymExpr, g: impl Fn(usize) -> SymExpr) -> SymExpr {
    f(0) * g(1) + f(1) * g(0)
}

/// `ϖ(fq)` for degree-one `f` and degree-two `q`, on variables 0, 1, 2.
fn single_pair(f: impl Fn(usize) -> SymExpr, q: impl Fn(usize, usize) -> SymExpr) -> SymExpr {
    f(0) * q(1, 2) + f(1) * q(0, 2) + f(2) * q(0, 1)
}

/// `ϖ(fgh)` for degree-one factors: the sum over all six assignments.
fn triple(
    f: impl Fn(usize) -> SymExpr,
    g: impl Fn(usize) -> SymExpr,
    h: impl Fn(usize) -> SymExpr,
) -> SymExpr {
    const ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    ORDERS
        .iter()
        .map(|[a, b, c]| f(*a) * g(*b) * h(*c))
        .fold(SymExpr::int(0), |acc, t| acc + t)
}

/// `ϖ(U_1)` assembled from `U_1 = ψ_2 - ψ_0 - 12A - B + D`.
pub fn u1_assembled(forms: &ClosedForms) -> SymExpr {
    psi_image(2, 0) - psi_image(0, 0) - SymExpr::int(12) * forms.image(Form::A, &[0])
        - forms.image(Form::B, &[0])
        + forms.image(Form::D, &[0])
}

/// `ϖ(U_2)` assembled from
/// `U_2 = ψ_0(ψ_1+ψ_2) + 24ψ_1 A + ψ_1 B + C - (ψ_1+ψ_2) D - E`.
pub fn u2_assembled(forms: &ClosedForms) -> SymExpr {
    let psi = |m| move |i| psi_image(m, i);
    let f = |form| move |i| forms.image(form, &[i]);
    pair(psi(0), psi(1))
        + pair(psi(0), psi(2))
        + SymExpr::int(24) * pair(psi(1), f(Form::A))
        + pair(psi(1), f(Form::B))
        + forms.image(Form::C, &[0, 1])
        - pair(psi(1), f(Form::D))
        - pair(psi(2), f(Form::D))
        - forms.image(Form::E, &[0, 1])
}

/// `ϖ(U_3)` assembled from `U_3 = -12ψ_1² A - ψ_1 C + (ψ_1+ψ_2) E`.
pub fn u3_assembled(forms: &ClosedForms) -> SymExpr {
    let psi = |m| move |i| psi_image(m, i);
    let a = |i| forms.image(Form::A, &[i]);
    let q = |form| move |i, j| forms.image(form, &[i, j]);
    SymExpr::int(-12) * triple(psi(1), psi(1), a) - single_pair(psi(1), q(Form::C))
        + single_pair(psi(1), q(Form::E))
        + single_pair(psi(2), q(Form::E))
}

/// The rearranged one-variable form:
/// `w''' - w' - ((1-w) w''' + w w'' - w') - w''' w + w'' w`.
pub fn u1_displayed() -> SymExpr {
    let w = SymExpr::w;
    w(0, 3) - w(0, 1) - (SymExpr::one_minus(0) * w(0, 3) + w(0, 0) * w(0, 2) - w(0, 1))
        - w(0, 3) * w(0, 0)
        + w(0, 2) * w(0, 0)
}

/// The rearranged two-variable form:
/// `(w_1'' w_2''' + w_1''' w_2'')(2 - w_1 - w_2) + w_1'' w_2'' (w_1 + w_2)
///  - (w_1''' w_2' - w_1' w_2''')/(w_1 - w_2) + (w_1'' w_2' - w_1' w_2'')/(w_1 - w_2)`.
pub fn u2_displayed() -> SymExpr {
    let w = SymExpr::w;
    (w(0, 2) * w(1, 3) + w(0, 3) * w(1, 2)) * (SymExpr::int(2) - w(0, 0) - w(1, 0))
        + w(0, 2) * w(1, 2) * (w(0, 0) + w(1, 0))
        - (w(0, 3) * w(1, 1) - w(0, 1) * w(1, 3)).over_diff(0, 1)
        + (w(0, 2) * w(1, 1) - w(0, 1) * w(1, 2)).over_diff(0, 1)
}

/// The rearranged three-variable form: three fractions over `w_j - w_k`,
/// one for each variable `i` left outside, followed by the polynomial tail
/// `-2 Σ w_i'' w_j'' w_k''' (1 - w_k) - 2 w_1'' w_2'' w_3'' (w_1 + w_2 + w_3)`.
pub fn u3_displayed() -> SymExpr {
    let w = SymExpr::w;
    let fraction = |i: usize, j: usize, k: usize| {
        (w(i, 2) * (w(j, 3) * w(k, 1) - w(j, 1) * w(k, 3))
            - (w(i, 2) + w(i, 3)) * (w(j, 2) * w(k, 1) - w(j, 1) * w(k, 2)))
        .over_diff(j, k)
    };
    let tail = |i: usize, j: usize, k: usize| {
        SymExpr::int(-2) * w(i, 2) * w(j, 2) * w(k, 3) * SymExpr::one_minus(k)
    };
    fraction(0, 1, 2) + fraction(1, 0, 2) + fraction(2, 0, 1) + tail(0, 1, 2) + tail(0, 2, 1) + tail(1, 2, 0)
        - SymExpr::int(2) * w(0, 2) * w(1, 2) * w(2, 2) * (w(0, 0) + w(1, 0) + w(2, 0))
}
