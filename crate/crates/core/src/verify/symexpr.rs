//! Symbolic expressions in the atoms `w_i^{(j)}` and their evaluation to
//! fractions whose denominators are products of `(1 - w_i)` and `(w_i - w_j)`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::WPoly;
use crate::algebra::Rational;
use crate::closedform::TreeSeries;

/// An expression over `w_i^{(j)}` (`i` in `0..3`, `j` in `0..=3`), with
/// division allowed only by `(w_i - w_j)` and powers of `(1 - w_i)`.
#[derive(Debug, Clone, PartialEq)]
pub enum SymExpr {
    Const(Rational),
    /// `w_var^{(order)}`
    W { var: usize, order: u8 },
    Sum(Vec<SymExpr>),
    Product(Vec<SymExpr>),
    /// `num / (w_i - w_j)`
    OverDiff { num: Box<SymExpr>, i: usize, j: usize },
    /// `num / (1 - w_var)^power`
    OverOneMinus { num: Box<SymExpr>, var: usize, power: u32 },
}

impl SymExpr {
    pub fn constant(c: Rational) -> Self {
        SymExpr::Const(c)
    }

    pub fn int(n: i64) -> Self {
        SymExpr::Const(Rational::from_integer(n.into()))
    }

    pub fn w(var: usize, order: u8) -> Self {
        assert!(var < 3 && order <= 3, "atoms are w_i^(j) with i < 3, j <= 3");
        SymExpr::W { var, order }
    }

    /// `1 - w_var`.
    pub fn one_minus(var: usize) -> Self {
        SymExpr::int(1) - SymExpr::w(var, 0)
    }

    pub fn over_diff(self, i: usize, j: usize) -> Self {
        assert!(i != j && i < 3 && j < 3);
        SymExpr::OverDiff { num: Box::new(self), i, j }
    }

    pub fn over_one_minus(self, var: usize, power: u32) -> Self {
        SymExpr::OverOneMinus { num: Box::new(self), var, power }
    }

    /// Highest variable index used, plus one.
    pub fn arity(&self) -> usize {
        match self {
            SymExpr::Const(_) => 0,
            SymExpr::W { var, .. } => var + 1,
            SymExpr::Sum(v) | SymExpr::Product(v) => v.iter().map(SymExpr::arity).max().unwrap_or(0),
            SymExpr::OverDiff { num, i, j } => num.arity().max(i + 1).max(j + 1),
            SymExpr::OverOneMinus { num, var, .. } => num.arity().max(var + 1),
        }
    }

    pub fn eval(&self, interp: &Interpretation) -> Frac {
        match self {
            SymExpr::Const(c) => Frac::from_poly(WPoly::constant(interp.cap, c.clone())),
            SymExpr::W { var, order } => interp.atoms[*var][*order as usize].clone(),
            SymExpr::Sum(v) => v
                .iter()
                .fold(Frac::from_poly(WPoly::zero(interp.cap)), |acc, e| acc.add(&e.eval(interp), interp)),
            SymExpr::Product(v) => v
                .iter()
                .fold(Frac::from_poly(WPoly::one(interp.cap)), |acc, e| acc.mul(&e.eval(interp))),
            SymExpr::OverDiff { num, i, j } => num.eval(interp).over_diff(*i, *j),
            SymExpr::OverOneMinus { num, var, power } => {
                let mut f = num.eval(interp);
                f.one_minus[*var] += power;
                f
            }
        }
    }
}

impl Add for SymExpr {
    type Output = SymExpr;
    fn add(self, rhs: SymExpr) -> SymExpr {
        match self {
            SymExpr::Sum(mut v) => {
                v.push(rhs);
                SymExpr::Sum(v)
            }
            lhs => SymExpr::Sum(vec![lhs, rhs]),
        }
    }
}

impl Neg for SymExpr {
    type Output = SymExpr;
    fn neg(self) -> SymExpr {
        match self {
            SymExpr::Const(c) => SymExpr::Const(-c),
            e => SymExpr::Product(vec![SymExpr::int(-1), e]),
        }
    }
}

impl Sub for SymExpr {
    type Output = SymExpr;
    fn sub(self, rhs: SymExpr) -> SymExpr {
        self + (-rhs)
    }
}

impl Mul for SymExpr {
    type Output = SymExpr;
    fn mul(self, rhs: SymExpr) -> SymExpr {
        match self {
            SymExpr::Product(mut v) => {
                v.push(rhs);
                SymExpr::Product(v)
            }
            lhs => SymExpr::Product(vec![lhs, rhs]),
        }
    }
}

impl Mul<SymExpr> for Rational {
    type Output = SymExpr;
    fn mul(self, rhs: SymExpr) -> SymExpr {
        SymExpr::Const(self) * rhs
    }
}

/// Index of the unordered pair `{i, j}` among `(0,1), (0,2), (1,2)`.
fn pair_index(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (0, 1) => 0,
        (0, 2) => 1,
        (1, 2) => 2,
        _ => panic!("no pair ({i}, {j})"),
    }
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// `num / (Π (1 - w_i)^{one_minus[i]} · Π_{i<j} (w_i - w_j)^{diff[pair]})`.
#[derive(Debug, Clone, PartialEq)]
pub struct Frac {
    pub num: WPoly,
    pub one_minus: [u32; 3],
    pub diff: [u32; 3],
}

impl Frac {
    pub fn from_poly(num: WPoly) -> Self {
        Frac { num, one_minus: [0; 3], diff: [0; 3] }
    }

    fn over_diff(mut self, i: usize, j: usize) -> Self {
        if i > j {
            self.num = self.num.neg();
        }
        self.diff[pair_index(i, j)] += 1;
        self
    }

    pub fn mul(&self, other: &Frac) -> Frac {
        let mut out = Frac::from_poly(self.num.mul(&other.num));
        for i in 0..3 {
            out.one_minus[i] = self.one_minus[i] + other.one_minus[i];
            out.diff[i] = self.diff[i] + other.diff[i];
        }
        out
    }

    pub fn add(&self, other: &Frac, interp: &Interpretation) -> Frac {
        let mut one_minus = [0; 3];
        let mut diff = [0; 3];
        for i in 0..3 {
            one_minus[i] = self.one_minus[i].max(other.one_minus[i]);
            diff[i] = self.diff[i].max(other.diff[i]);
        }
        let a = self.raise(one_minus, diff, interp).expect("raising to the max never lowers");
        let b = other.raise(one_minus, diff, interp).expect("raising to the max never lowers");
        Frac { num: a.add(&b), one_minus, diff }
    }

    pub fn neg(&self) -> Frac {
        Frac { num: self.num.neg(), one_minus: self.one_minus, diff: self.diff }
    }

    pub fn sub(&self, other: &Frac, interp: &Interpretation) -> Frac {
        self.add(&other.neg(), interp)
    }

    /// Numerator after rewriting over the denominator `(one_minus, diff)`;
    /// `None` if that denominator does not contain the current one.
    pub fn raise(&self, one_minus: [u32; 3], diff: [u32; 3], interp: &Interpretation) -> Option<WPoly> {
        let mut num = self.num.clone();
        for i in 0..3 {
            let extra = one_minus[i].checked_sub(self.one_minus[i])?;
            if extra > 0 {
                num = num.mul(&interp.one_minus(i).pow(extra));
            }
            let extra = diff[i].checked_sub(self.diff[i])?;
            if extra > 0 {
                let (a, b) = PAIRS[i];
                num = num.mul(&interp.difference(a, b).pow(extra));
            }
        }
        Some(num)
    }
}

/// Values assigned to the atoms: either the exact rational functions of
/// `w_i` from the tree-function derivative identities, or truncated series
/// in `x_i`.
#[derive(Debug, Clone)]
pub struct Interpretation {
    cap: Option<u32>,
    w: [WPoly; 3],
    atoms: [[Frac; 4]; 3],
}

impl Interpretation {
    /// `w^{(1)} = w/(1-w)`, `w^{(2)} = w/(1-w)³`, `w^{(3)} = (w+2w²)/(1-w)⁵`.
    pub fn exact() -> Self {
        let w: [WPoly; 3] = std::array::from_fn(|i| WPoly::var(None, i));
        let atoms = std::array::from_fn(|i| {
            let wi = w[i].clone();
            let two = Rational::from_integer(2.into());
            let top3 = wi.add(&wi.mul(&wi).scale(&two));
            let with = |num: WPoly, power: u32| {
                let mut f = Frac::from_poly(num);
                f.one_minus[i] = power;
                f
            };
            [with(wi.clone(), 0), with(wi.clone(), 1), with(wi.clone(), 3), with(top3, 5)]
        });
        Interpretation { cap: None, w, atoms }
    }

    /// Atoms as truncated series in `x_1, x_2, x_3`, each exponent at most
    /// `cap`, with `w^{(j)}` taken from the tree series directly.
    pub fn series(tree: &TreeSeries, cap: u32) -> Self {
        let coeffs = |f: &crate::algebra::PSeries| -> Vec<Rational> {
            (0..=cap).map(|d| crate::closedform::x_coeff(f, d)).collect()
        };
        let orders: Vec<Vec<Rational>> = (0..4).map(|j| coeffs(tree.order(j))).collect();
        let w = std::array::from_fn(|i| WPoly::univariate(Some(cap), i, &orders[0]));
        let atoms = std::array::from_fn(|i| {
            std::array::from_fn(|j| Frac::from_poly(WPoly::univariate(Some(cap), i, &orders[j])))
        });
        Interpretation { cap: Some(cap), w, atoms }
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    /// `1 - w_i`.
    pub fn one_minus(&self, i: usize) -> WPoly {
        WPoly::one(self.cap).sub(&self.w[i])
    }

    /// `w_i - w_j`.
    pub fn difference(&self, i: usize, j: usize) -> WPoly {
        self.w[i].sub(&self.w[j])
    }
}

/// `Π_{i<arity} (1 - w_i)^5 · Π_{i<j<arity} (w_i - w_j)`.
pub fn uniform_clearing(arity: usize) -> ([u32; 3], [u32; 3]) {
    let one_minus = std::array::from_fn(|i| if i < arity { 5 } else { 0 });
    let diff = std::array::from_fn(|k| if PAIRS[k].1 < arity { 1 } else { 0 });
    (one_minus, diff)
}

/// Multiplies `f` through by the uniform clearing factor and returns the
/// resulting polynomial, or `None` if `f` has a denominator the factor does
/// not cover.
pub fn clear_uniform(f: &Frac, arity: usize, interp: &Interpretation) -> Option<WPoly> {
    let (one_minus, diff) = uniform_clearing(arity);
    f.raise(one_minus, diff, interp)
}

impl Zero for SymExpr {
    fn zero() -> Self {
        SymExpr::int(0)
    }

    fn is_zero(&self) -> bool {
        matches!(self, SymExpr::Const(c) if c.is_zero())
    }
}

impl One for SymExpr {
    fn one() -> Self {
        SymExpr::int(1)
    }
}
