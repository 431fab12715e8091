//! Exact integer/rational arithmetic and the modular kernels everything else
//! is built from.
//!
//! Exact values are [`Rational`]s (always in lowest terms, positive
//! denominator). Reductions modulo prime powers are [`Residue`]s, which carry
//! their modulus so that residues of different moduli can never be mixed.

mod montgomery;
mod powersum;
mod residue;

pub use montgomery::Montgomery;
pub use powersum::{power_sums, power_sums_seq, PowerSums};
#[cfg(feature = "parallel")]
pub use powersum::power_sums_par;
pub use residue::Residue;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction.
pub type Rational = num_rational::BigRational;

/// Build a rational `n/d` from machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Build an integral rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p^e` as a big integer.
pub fn prime_power(p: u64, e: u32) -> BigUint {
    BigUint::from(p).pow(e)
}

/// `p^e` as a machine word, when it fits below 2^63.
pub fn prime_power_u64(p: u64, e: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(p)?;
    }
    (acc < 1 << 63).then_some(acc)
}

/// Reduce a signed integer into `[0, m)`.
pub fn reduce_int(a: &BigInt, m: &BigUint) -> BigUint {
    let m = BigInt::from_biguint(Sign::Plus, m.clone());
    a.mod_floor(&m).to_biguint().expect("mod_floor is nonnegative")
}

/// `base^exp mod m`, always in `[0, m)`.
pub fn mod_pow(base: &BigInt, exp: &BigUint, m: &BigUint) -> Residue {
    assert!(!m.is_zero(), "modulus must be positive");
    let b = reduce_int(base, m);
    Residue::new(b.modpow(exp, m), m.clone())
}

/// Inverse of `a` modulo `m`.
pub fn mod_inv(a: &BigInt, m: &BigUint) -> Result<Residue> {
    assert!(!m.is_zero(), "modulus must be positive");
    let mi = BigInt::from_biguint(Sign::Plus, m.clone());
    let ext = a.mod_floor(&mi).extended_gcd(&mi);
    if !ext.gcd.is_one() {
        return Err(Error::NotInvertible {
            value: a.to_string(),
            modulus: m.to_string(),
        });
    }
    Ok(Residue::new(reduce_int(&ext.x, m), m.clone()))
}

/// Reduce a p-integral rational modulo `p^e`.
pub fn rat_reduce(q: &Rational, p: u64, e: u32) -> Result<Residue> {
    let m = prime_power(p, e);
    if q.denom().is_multiple_of(&BigInt::from(p)) {
        return Err(Error::DenominatorDivisible {
            value: q.to_string(),
            p,
        });
    }
    let inv = mod_inv(q.denom(), &m)?;
    let num = reduce_int(q.numer(), &m);
    Ok(Residue::new((num * inv.value()) % &m, m))
}

/// Multiplicity of `p` in a nonzero integer.
pub fn int_valuation(n: &BigInt, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// p-adic valuation of a nonzero rational.
pub fn valuation(q: &Rational, p: u64) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(int_valuation(q.numer(), p) as i64 - int_valuation(q.denom(), p) as i64)
}

/// Deterministic primality by trial division. Adequate for desk-scale primes.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes in the closed interval `[lo, hi]`.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// Binomial coefficient `C(n, k)` as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Generalized binomial `C(n, k)` for signed `n` (`n (n-1) ... (n-k+1) / k!`).
pub fn binomial_signed(n: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        acc *= n - i;
    }
    for i in 1..=k {
        acc /= i;
    }
    acc
}

/// Exact harmonic number `1 + 1/2 + ... + 1/k`.
pub fn harmonic_number(k: u64) -> Rational {
    (1..=k).fold(Rational::zero(), |acc, j| acc + rat(1, j as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn mod_pow_examples() {
        assert_eq!(mod_pow(&big(2), &4u32.into(), &5u32.into()).to_u64(), 1);
        assert_eq!(mod_pow(&big(7), &0u32.into(), &13u32.into()).to_u64(), 1);
        // Repeated multiplication oracle.
        let m = prime_power(19, 4);
        let mut acc = BigUint::one();
        for _ in 0..19 {
            acc = (acc * 10u32) % &m;
        }
        assert_eq!(mod_pow(&big(10), &19u32.into(), &m).value(), &acc);
        assert_eq!(mod_pow(&big(-2), &3u32.into(), &5u32.into()).to_u64(), 2);
    }

    #[test]
    fn mod_inv_examples() {
        assert_eq!(mod_inv(&big(6), &49u32.into()).unwrap().to_u64(), 41);
        assert_eq!(mod_inv(&big(1), &1000u32.into()).unwrap().to_u64(), 1);
        assert!(matches!(
            mod_inv(&big(5), &25u32.into()),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn rat_reduce_examples() {
        assert_eq!(rat_reduce(&rat(1, 6), 7, 2).unwrap().to_u64(), 41);
        assert_eq!(rat_reduce(&rat(-1, 120), 7, 1).unwrap().to_u64(), 6);
        assert_eq!(rat_reduce(&int(3), 5, 2).unwrap().to_u64(), 3);
        assert!(matches!(
            rat_reduce(&rat(1, 14), 7, 2),
            Err(Error::DenominatorDivisible { .. })
        ));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&int(50), 5).unwrap(), 2);
        assert_eq!(valuation(&rat(1, 3), 3).unwrap(), -1);
        assert_eq!(valuation(&int(10), 7).unwrap(), 0);
        assert_eq!(valuation(&int(0), 7), Err(Error::ZeroInput));
    }

    #[test]
    fn small_helpers() {
        assert_eq!(primes_in(1, 20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(!is_prime(4) && !is_prime(1) && is_prime(10037));
        assert_eq!(binomial(24, 12), big(2704156));
        assert_eq!(binomial_signed(-1, 2), big(1));
        assert_eq!(binomial_signed(3, 2), big(3));
        assert_eq!(harmonic_number(4), rat(25, 12));
        assert_eq!(prime_power_u64(10037, 4), Some(10148823427994161));
        assert_eq!(prime_power_u64(10037, 5), None);
    }

    proptest! {
        #[test]
        fn inverse_is_inverse(a in -10_000i64..10_000, m in 2u64..100_000) {
            let mb = BigUint::from(m);
            match mod_inv(&big(a), &mb) {
                Ok(x) => {
                    let prod = reduce_int(&(big(a) * BigInt::from(x.value().clone())), &mb);
                    prop_assert!(prod.is_one() || m == 1);
                }
                Err(_) => prop_assert!(!big(a).gcd(&BigInt::from(m)).is_one()),
            }
        }

        #[test]
        fn reduction_is_additive(a in -500i64..500, b in 1i64..500, c in -500i64..500, d in 1i64..500) {
            let p = 7;
            let (q1, q2) = (rat(a, b), rat(c, d));
            if let (Ok(r1), Ok(r2), Ok(r12)) =
                (rat_reduce(&q1, p, 3), rat_reduce(&q2, p, 3), rat_reduce(&(&q1 + &q2), p, 3))
            {
                prop_assert_eq!(&r1 + &r2, r12);
            }
        }

        #[test]
        fn valuation_is_additive(a in 1i64..5000, b in 1i64..5000, c in 1i64..5000, d in 1i64..5000) {
            let (q1, q2) = (rat(a, b), rat(-c, d));
            let p = 5;
            prop_assert_eq!(
                valuation(&(&q1 * &q2), p).unwrap(),
                valuation(&q1, p).unwrap() + valuation(&q2, p).unwrap()
            );
        }
    }
}
