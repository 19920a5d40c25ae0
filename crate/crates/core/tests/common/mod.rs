use num_bigint::BigInt;

use hurwitz::algebra::{factorial, Rational};
use hurwitz::partitions::a_coeff;
use hurwitz::Partition;

/// `[x^n p_λ] s = (1/n) Π_r (n a_r / r)^{m_r} / m_r!` for `λ ⊢ n-1`, read off
/// `[t^{n-1}] exp(n ψ_0(t))` by Lagrange inversion.
pub fn lagrange_coefficient(n: u32, lambda: &Partition) -> Rational {
    let mut c = Rational::new(BigInt::from(1), BigInt::from(n));
    for (r, m) in lambda.multiplicities() {
        let base = Rational::from_integer(BigInt::from(n)) * a_coeff(r).unwrap() / Rational::from_integer(BigInt::from(r));
        for _ in 0..m {
            c *= &base;
        }
        c /= Rational::from_integer(factorial(m));
    }
    c
}
