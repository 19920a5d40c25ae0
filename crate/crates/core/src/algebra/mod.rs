//! Exact rationals and truncated formal power series in `x`, `z` and the
//! power-sum indeterminates `p_1, p_2, ...`.

mod monomial;
mod series;
mod truncation;

pub use monomial::Monomial;
pub use series::{PSeries, USeries};
pub use truncation::Truncation;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `base^exp` for a possibly negative exponent. `0^e` with `e < 0` is a usage bug and panics.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        assert!(!base.is_zero(), "zero raised to a negative power");
        num_traits::pow(base.recip(), exp.unsigned_abs() as usize)
    }
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Returns the integer value of `q`, or `None` if `q` is not integral.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Parses the `"num/den"` (or bare `"num"`) serialization of a rational.
pub fn parse_rational(text: &str) -> crate::Result<Rational> {
    let bad = || crate::HurwitzError::Parse(format!("not a rational: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() || den.is_negative() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}
