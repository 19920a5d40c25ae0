//! Machine checks of the genus-one proof: the residual of the linear
//! equation characterizing `F_1` vanishes on the closed form, and the
//! symmetrized degree-one, -two and -three parts of that residual are zero
//! as exact polynomials in `w_1, w_2, w_3`.

pub mod forms;
mod symexpr;
mod wpoly;
pub mod ypoly;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

pub use forms::{ClosedForms, Form};
pub use symexpr::{clear_uniform, uniform_clearing, Frac, Interpretation, SymExpr};
pub use wpoly::WPoly;
pub use ypoly::symmetrize;

use crate::algebra::{PSeries, Rational, Truncation};
use crate::closedform::{self, identities, SSeries, TreeSeries};
use crate::cutjoin::CutJoinState;
use crate::partitions::check_elem_sym_extraction;
use crate::{HurwitzError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one check. A failure carries the first offending term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass(name: impl Into<String>) -> Self {
        Verdict { name: name.into(), status: Status::Pass, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Verdict { name: name.into(), status: Status::Fail, witness: Some(witness.into()) }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Passes iff every residual is the zero series; the witness is the
    /// lowest term of the first nonzero one, prefixed by its label.
    pub fn from_residuals<'a>(
        name: impl Into<String>,
        residuals: impl IntoIterator<Item = (String, &'a PSeries)>,
    ) -> Self {
        for (label, r) in residuals {
            if let Some((m, c)) = r.terms().next() {
                let prefix = if label.is_empty() { String::new() } else { format!("{label}: ") };
                return Verdict::fail(name, format!("{prefix}({c})*{m}"));
            }
        }
        Verdict::pass(name)
    }

    fn from_residual(name: impl Into<String>, r: &PSeries) -> Self {
        Verdict::from_residuals(name, [(String::new(), r)])
    }
}

/// A deliberate error, used to show the checks can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Add one to a single closed-form coefficient.
    ClosedForm { form: Form, term: usize },
    /// Add `x² p_2` to the genus-one series before taking the residual.
    GenusOneShift,
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fault::ClosedForm { form, term } => write!(f, "{form}{term}"),
            Fault::GenusOneShift => write!(f, "g1"),
        }
    }
}

impl FromStr for Fault {
    type Err = HurwitzError;

    /// `g1`, or a form letter followed by a term index such as `A0` or `C3`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || HurwitzError::Parse(format!("unknown fault '{s}' (expected g1 or A0..E3)"));
        if s.eq_ignore_ascii_case("g1") {
            return Ok(Fault::GenusOneShift);
        }
        let mut chars = s.chars();
        let form = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Form::A,
            Some('B') => Form::B,
            Some('C') => Form::C,
            Some('D') => Form::D,
            Some('E') => Form::E,
            _ => return Err(bad()),
        };
        let term: usize = chars.as_str().parse().map_err(|_| bad())?;
        if term >= ClosedForms::term_count(form) {
            return Err(bad());
        }
        Ok(Fault::ClosedForm { form, term })
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub trunc: Truncation,
    /// Per-variable order of the series checks on the five closed forms.
    pub series_order: u32,
    /// Per-variable order of the series route for the symmetrized `U_i`.
    pub u_series_order: u32,
    pub faults: Vec<Fault>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { trunc: Truncation::default(), series_order: 10, u_series_order: 6, faults: Vec::new() }
    }
}

impl VerifyOptions {
    pub fn closed_forms(&self) -> ClosedForms {
        self.faults.iter().fold(ClosedForms::default(), |acc, f| match f {
            Fault::ClosedForm { form, term } => acc.perturbed(*form, *term, &Rational::from_integer(1.into())),
            Fault::GenusOneShift => acc,
        })
    }

    fn shifts_g1(&self) -> bool {
        self.faults.contains(&Fault::GenusOneShift)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportConfig {
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(rename = "K")]
    pub k: u32,
    #[serde(rename = "G")]
    pub g: u32,
    #[serde(rename = "R")]
    pub r: u32,
    pub series_order: u32,
    pub u_series_order: u32,
    pub faults: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Verdict>,
    pub config: ReportConfig,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Verdict::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.checks.iter().filter(|v| !v.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `T_0 G - T_1` where
///
/// ```text
/// T_0 = x∂/∂x + Σ p_i ∂/∂p_i - Σ ij p_{i+j} (∂F_0/∂p_i) ∂/∂p_j - ½ Σ (i+j) p_i p_j ∂/∂p_{i+j}
/// T_1 = ½ Σ ij p_{i+j} ∂²F_0/∂p_i∂p_j
/// ```
///
/// with the derivatives of `F_0` taken from their expressions in `s`.
pub fn residual_t(g: &PSeries, ctx: &SSeries) -> Result<PSeries> {
    let trunc = ctx.trunc();
    if g.trunc() != trunc {
        return Err(HurwitzError::TruncationMismatch { left: g.trunc().to_string(), right: trunc.to_string() });
    }
    let k_max = trunc.k();
    let dg: Vec<PSeries> = (1..=k_max).map(|j| g.pdiff(j)).collect::<Result<_>>()?;
    let df: Vec<PSeries> = (1..=k_max).map(|i| closedform::f0_pdiff(i, ctx)).collect::<Result<_>>()?;
    let half = Rational::new(1.into(), 2.into());
    let int = |n: u32| Rational::from_integer(BigInt::from(n));

    let mut acc = g.xdiff();
    for i in 1..=k_max {
        acc = acc.add(&PSeries::p(trunc, i)?.mul(&dg[i as usize - 1])?)?;
    }
    for i in 1..k_max {
        for j in 1..=(k_max - i) {
            let p = PSeries::p(trunc, i + j)?;
            let join = p.mul(&df[i as usize - 1].mul(&dg[j as usize - 1])?)?.scale(&int(i * j));
            let cut = PSeries::p(trunc, i)?
                .mul(&PSeries::p(trunc, j)?)?
                .mul(&dg[(i + j) as usize - 1])?
                .scale(&(&half * int(i + j)));
            let inhomogeneous =
                p.mul(&closedform::f0_second(i, j, ctx)?)?.scale(&(&half * int(i * j)));
            acc = acc.sub(&join)?.sub(&cut)?.sub(&inhomogeneous)?;
        }
    }
    Ok(acc)
}

/// The residual evaluated on the closed form of `G_1`.
pub fn residual_t_closed(trunc: Truncation) -> Result<PSeries> {
    let ctx = SSeries::new(trunc)?;
    residual_t(&closedform::g1_closed_from(&ctx)?, &ctx)
}

/// The expansion of `24(1-ψ_1)² (T_0 G_1 - T_1)` in `ψ_i` and `A .. E`,
/// minus the directly computed left side.
pub fn residual_expansion(residual: &PSeries, ctx: &SSeries) -> Result<PSeries> {
    let trunc = ctx.trunc();
    let one = PSeries::one(trunc);
    let psi = |i| ctx.psi(i);
    let at_s = |form| ypoly::form_y(form, trunc)?.subst_x(ctx.s());
    let one_minus = one.sub(&psi(1)?)?;
    let lhs = one_minus.mul(&one_minus)?.mul(residual)?.scale(&Rational::from_integer(24.into()));
    let p12m1 = psi(1)?.add(&psi(2)?)?.sub(&one)?;
    let rhs = psi(2)?
        .mul(&one.add(&psi(0)?)?)?
        .sub(&psi(0)?.mul(&one_minus)?)?
        .sub(&one_minus.mul(&one_minus)?.mul(&at_s(Form::A)?)?.scale(&Rational::from_integer(12.into())))?
        .sub(&one_minus.mul(&at_s(Form::B)?)?)?
        .add(&one_minus.mul(&at_s(Form::C)?)?)?
        .sub(&p12m1.mul(&at_s(Form::D)?)?)?
        .add(&p12m1.mul(&at_s(Form::E)?)?)?;
    lhs.sub(&rhs)
}

/// Clears denominators uniformly and reports the first surviving monomial.
fn exact_zero(expr: &SymExpr, arity: usize) -> std::result::Result<(), String> {
    let interp = Interpretation::exact();
    let frac = expr.eval(&interp);
    match clear_uniform(&frac, arity, &interp) {
        None => Err(format!(
            "denominator exponents {:?}/{:?} exceed the clearing factor",
            frac.one_minus, frac.diff
        )),
        Some(p) => match p.witness() {
            None => Ok(()),
            Some(w) => Err(w),
        },
    }
}

fn exact_u_verdict(name: &str, displayed: &SymExpr, assembled: &SymExpr, arity: usize) -> Verdict {
    let d = exact_zero(displayed, arity);
    let a = exact_zero(assembled, arity);
    match (d, a) {
        (Ok(()), Ok(())) => Verdict::pass(name),
        (Err(w), Ok(())) => Verdict::fail(name, format!("displayed form nonzero, assembled form zero: {w}")),
        (Ok(()), Err(w)) => Verdict::fail(name, format!("assembled form nonzero, displayed form zero: {w}")),
        (Err(w), Err(_)) => Verdict::fail(name, format!("both forms nonzero: {w}")),
    }
}

/// `ϖ(U_1) = 0` as an exact polynomial, both as displayed and as assembled
/// from the closed forms.
pub fn check_u1(forms: &ClosedForms) -> Verdict {
    exact_u_verdict("u1_exact", &forms::u1_displayed(), &forms::u1_assembled(forms), 1)
}

pub fn check_u2(forms: &ClosedForms) -> Verdict {
    exact_u_verdict("u2_exact", &forms::u2_displayed(), &forms::u2_assembled(forms), 2)
}

pub fn check_u3(forms: &ClosedForms) -> Verdict {
    exact_u_verdict("u3_exact", &forms::u3_displayed(), &forms::u3_assembled(forms), 3)
}

/// `a - b` in a series interpretation; zero iff they agree inside the box.
fn series_difference(a: &Frac, b: &Frac, interp: &Interpretation) -> Option<String> {
    a.sub(b, interp).num.witness()
}

/// The closed form of `ϖ(form)` against the symmetrization of the form's
/// defining sum, both expanded to `order` in each variable.
pub fn check_form_series(form: Form, forms: &ClosedForms, tree: &TreeSeries, order: u32) -> Result<Verdict> {
    let name = format!("symmetrized_{form}");
    let degree = form.degree();
    let y = ypoly::form_y(form, ypoly::y_trunc(order * degree as u32)?)?;
    let direct = Frac::from_poly(symmetrize(&y, degree, Some(order))?);
    let interp = Interpretation::series(tree, order);
    let vars: Vec<usize> = (0..degree).collect();
    let closed = forms.image(form, &vars).eval(&interp);
    Ok(match series_difference(&closed, &direct, &interp) {
        None => Verdict::pass(name),
        Some(w) => Verdict::fail(name, format!("closed form minus series: {w}")),
    })
}

/// Series route for `ϖ(U_i)`: the `y`-polynomial `U_i` itself, and both the
/// displayed and the assembled symmetrized forms, expanded to `order` per
/// variable, must all vanish.
pub fn check_u_series(which: usize, forms: &ClosedForms, tree: &TreeSeries, order: u32) -> Result<Verdict> {
    let name = format!("u{which}_series");
    let trunc = ypoly::y_trunc(order * which as u32)?;
    let (u, displayed, assembled) = match which {
        1 => (ypoly::u1_y(trunc)?, forms::u1_displayed(), forms::u1_assembled(forms)),
        2 => (ypoly::u2_y(trunc)?, forms::u2_displayed(), forms::u2_assembled(forms)),
        3 => (ypoly::u3_y(trunc)?, forms::u3_displayed(), forms::u3_assembled(forms)),
        _ => return Err(HurwitzError::Usage(format!("no U_{which}"))),
    };
    let direct = Frac::from_poly(symmetrize(&u, which, Some(order))?);
    if let Some(w) = direct.num.witness() {
        return Ok(Verdict::fail(name, format!("y-polynomial nonzero: {w}")));
    }
    let interp = Interpretation::series(tree, order);
    for (label, expr) in [("displayed", displayed), ("assembled", assembled)] {
        if let Some(w) = series_difference(&expr.eval(&interp), &direct, &interp) {
            return Ok(Verdict::fail(name, format!("{label} form nonzero: {w}")));
        }
    }
    Ok(Verdict::pass(name))
}

/// Every identity the genus-one argument uses, at the given truncation.
pub fn identity_checks(trunc: Truncation, ctx: &SSeries, f0: &PSeries, g1: &PSeries) -> Result<Vec<Verdict>> {
    let ks: Vec<u32> = (1..=trunc.k()).collect();
    let mut out = Vec::new();
    out.push(Verdict::from_residual("s_x_derivative", &identities::eq7(ctx)?));

    let r: Vec<(String, PSeries)> =
        ks.iter().map(|&k| Ok((format!("k={k}"), identities::eq8(k, ctx)?))).collect::<Result<_>>()?;
    out.push(Verdict::from_residuals("s_p_derivatives", r.iter().map(|(l, s)| (l.clone(), s))));

    let mut r = Vec::new();
    for j in -1..=2 {
        for &k in &ks {
            r.push((format!("j={j} k={k}"), identities::eq9(j, k, ctx)?));
        }
    }
    out.push(Verdict::from_residuals("psi_p_derivatives", r.iter().map(|(l, s)| (l.clone(), s))));

    let r: Vec<(String, PSeries)> =
        ks.iter().map(|&k| Ok((format!("k={k}"), identities::eq10(k, f0, ctx)?))).collect::<Result<_>>()?;
    out.push(Verdict::from_residuals("f0_first_derivatives", r.iter().map(|(l, s)| (l.clone(), s))));

    let mut r = Vec::new();
    for &i in &ks {
        for &j in &ks {
            if i + j <= trunc.k() {
                r.push((format!("i={i} j={j}"), identities::eq11(i, j, ctx)?));
            }
        }
    }
    out.push(Verdict::from_residuals("f0_second_derivatives", r.iter().map(|(l, s)| (l.clone(), s))));

    out.push(Verdict::from_residual("f0_euler", &identities::euler_f0(f0, ctx)?));
    out.push(Verdict::from_residual("g1_x_derivative", &identities::eq12(g1, ctx)?));

    let r: Vec<(String, PSeries)> =
        ks.iter().map(|&k| Ok((format!("k={k}"), identities::eq13(k, g1, ctx)?))).collect::<Result<_>>()?;
    out.push(Verdict::from_residuals("g1_p_derivatives", r.iter().map(|(l, s)| (l.clone(), s))));

    let tree = closedform::tree(Truncation::new(trunc.n(), trunc.n(), 0)?)?;
    let r = identities::tree_derivatives(&tree)?;
    out.push(Verdict::from_residuals(
        "tree_derivatives",
        r.iter().enumerate().map(|(j, s)| (format!("order {}", j + 1), s)),
    ));
    Ok(out)
}

/// Runs every check and collects the verdicts in a fixed order.
pub fn run_all(opts: &VerifyOptions) -> Result<VerifyReport> {
    let trunc = opts.trunc;
    let forms = opts.closed_forms();
    let ctx = SSeries::new(trunc)?;
    let f0 = closedform::f0_from_formula(trunc)?;
    let mut g1 = closedform::g1_closed_from(&ctx)?;
    if opts.shifts_g1() && trunc.n() >= 2 && trunc.k() >= 2 {
        let shift = PSeries::monomial(
            trunc,
            crate::algebra::Monomial::from_parts(2, 0, &[2]),
            Rational::from_integer(1.into()),
        )?;
        g1 = g1.add(&shift)?;
    }
    let g1_defn = closedform::g1_defn(trunc)?;
    let mut checks = Vec::new();

    let residual = residual_t(&g1, &ctx)?;
    checks.push(Verdict::from_residual("residual_closed", &residual));
    checks.push(Verdict::from_residual("residual_defn", &residual_t(&g1_defn, &ctx)?));
    checks.push(Verdict::from_residual("g1_routes_agree", &g1.sub(&g1_defn)?));
    if trunc.g() >= 1 {
        let stepped = CutJoinState::run(trunc)?.genus_slice(0)?;
        checks.push(Verdict::from_residual("f0_routes_agree", &stepped.sub(&f0)?));
    }
    checks.push(Verdict::from_residual("residual_expansion", &residual_expansion(&residual, &ctx)?));
    checks.extend(identity_checks(trunc, &ctx, &f0, &g1)?);
    checks.push(match check_elem_sym_extraction(trunc.n())? {
        None => Verdict::pass("elementary_symmetric_extraction"),
        Some((lambda, k)) => Verdict::fail("elementary_symmetric_extraction", format!("lambda={lambda} k={k}")),
    });

    let series_cap = opts.series_order.max(opts.u_series_order);
    let tree = closedform::tree(Truncation::new(series_cap, series_cap, 0)?)?;
    for form in Form::ALL {
        checks.push(check_form_series(form, &forms, &tree, opts.series_order)?);
    }
    checks.push(check_u1(&forms));
    checks.push(check_u2(&forms));
    checks.push(check_u3(&forms));
    for which in 1..=3 {
        checks.push(check_u_series(which, &forms, &tree, opts.u_series_order)?);
    }

    Ok(VerifyReport {
        checks,
        config: ReportConfig {
            n: trunc.n(),
            k: trunc.k(),
            g: trunc.g(),
            r: trunc.r(),
            series_order: opts.series_order,
            u_series_order: opts.u_series_order,
            faults: opts.faults.iter().map(Fault::to_string).collect(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn exact_u_checks_pass() {
        let forms = ClosedForms::default();
        assert!(check_u1(&forms).passed());
        assert!(check_u2(&forms).passed(), "{:?}", check_u2(&forms));
        assert!(check_u3(&forms).passed(), "{:?}", check_u3(&forms));
    }

    #[test]
    fn closed_forms_match_series() {
        let tree = closedform::tree(Truncation::new(8, 8, 0).unwrap()).unwrap();
        let forms = ClosedForms::default();
        for form in Form::ALL {
            let v = check_form_series(form, &forms, &tree, 8).unwrap();
            assert!(v.passed(), "{v:?}");
        }
    }

    #[test]
    fn a_by_integrating_the_squared_derivative() {
        // ϖ(A) = Σ_k (x^k/k) [x^k] (w'')², to order 10
        let tr = Truncation::new(10, 10, 0).unwrap();
        let tree = closedform::tree(tr).unwrap();
        let sq = tree.order(2).mul(tree.order(2)).unwrap();
        let coeffs: Vec<Rational> = (0..=10)
            .map(|k| if k == 0 { rat(0, 1) } else { closedform::x_coeff(&sq, k) / rat(k as i64, 1) })
            .collect();
        let interp = Interpretation::series(&tree, 10);
        let direct = Frac::from_poly(WPoly::univariate(Some(10), 0, &coeffs));
        let closed = ClosedForms::default().image(Form::A, &[0]).eval(&interp);
        assert!(series_difference(&closed, &direct, &interp).is_none());
    }

    #[test]
    fn residual_vanishes_at_small_truncation() {
        let tr = Truncation::new(5, 5, 1).unwrap();
        assert!(residual_t_closed(tr).unwrap().is_zero());
    }

    #[test]
    fn shifted_genus_one_is_caught() {
        let tr = Truncation::new(5, 5, 1).unwrap();
        let ctx = SSeries::new(tr).unwrap();
        let shift =
            PSeries::monomial(tr, crate::algebra::Monomial::from_parts(2, 0, &[2]), rat(1, 1)).unwrap();
        let g = closedform::g1_closed_from(&ctx).unwrap().add(&shift).unwrap();
        assert!(!residual_t(&g, &ctx).unwrap().is_zero());
    }

    #[test]
    fn fault_parsing() {
        assert_eq!("g1".parse::<Fault>().unwrap(), Fault::GenusOneShift);
        assert_eq!("c3".parse::<Fault>().unwrap(), Fault::ClosedForm { form: Form::C, term: 3 });
        assert!("B1".parse::<Fault>().is_err());
        assert!("Z0".parse::<Fault>().is_err());
        assert_eq!(Fault::ClosedForm { form: Form::A, term: 2 }.to_string(), "A2");
    }

    #[test]
    fn verdict_json_shape() {
        let v = Verdict::fail("x", "(1)*w1");
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"name":"x","status":"fail","witness":"(1)*w1"}"#);
        let v = Verdict::pass("y");
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"name":"y","status":"pass"}"#);
    }
}
