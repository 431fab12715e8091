use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{binomial, harmonic_number, Rational};
use crate::bernoulli::divided_bernoulli_exact;

/// Both sides of Miki's identity at even `n`:
/// `sum b_i b_{n-i} = sum C(n, i) b_i b_{n-i} + 2 H_n b_n`, sums over `2 <= i <= n-2`.
pub fn miki_sides(n: usize) -> (Rational, Rational) {
    assert!(n >= 4 && n % 2 == 0, "Miki's identity is stated for even n >= 4");
    let mut lhs = Rational::zero();
    let mut rhs = Rational::zero();
    for i in 2..=n - 2 {
        let prod = divided_bernoulli_exact(i) * divided_bernoulli_exact(n - i);
        rhs += &prod * Rational::from_integer(binomial(n as u64, i as u64));
        lhs += prod;
    }
    rhs += Rational::from_integer(BigInt::from(2))
        * harmonic_number(n as u64)
        * divided_bernoulli_exact(n);
    (lhs, rhs)
}
