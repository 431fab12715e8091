//! Direct computation of the sequences the congruences talk about. Nothing
//! here touches Bernoulli numbers, so these are the oracle side of most
//! checks.

mod context;

pub use context::{PrimeContext, ORACLE_LIMIT};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{mod_inv, prime_power, Residue};
use crate::error::{Error, Result};
use crate::padic::fermat_quotient;

/// Largest `p` for which [`stirling_exact`] builds full integers.
pub const STIRLING_EXACT_LIMIT: u64 = 2000;

/// `1^k + 2^k + ... + (p-1)^k mod p^e`.
pub fn sum_powers(p: u64, k: u64, e: u32) -> Residue {
    let m = prime_power(p, e);
    let mut acc = BigUint::zero();
    for a in 1..p {
        acc += BigUint::from(a).modpow(&BigUint::from(k), &m);
    }
    Residue::new(acc % &m, m)
}

/// Inverses of `1..p-1` modulo `m` (index 0 unused), sharing one inversion
/// through prefix products.
fn inverses(p: u64, m: &BigUint) -> Vec<BigUint> {
    let n = (p - 1) as usize;
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(BigUint::one());
    for a in 1..p {
        let next = prefix.last().unwrap() * BigUint::from(a) % m;
        prefix.push(next);
    }
    let mut inv_all = mod_inv(&BigInt::from(prefix[n].clone()), m)
        .expect("(p-1)! is a unit")
        .value()
        .clone();
    let mut out = vec![BigUint::zero(); n + 1];
    for a in (1..=n).rev() {
        out[a] = &inv_all * &prefix[a - 1] % m;
        inv_all = inv_all * BigUint::from(a as u64) % m;
    }
    out
}

/// `H_{p-1,k} = sum_{a<p} a^{-k} mod p^e`.
pub fn harmonic(p: u64, k: u64, e: u32) -> Residue {
    let m = prime_power(p, e);
    let inv = inverses(p, &m);
    let mut acc = BigUint::zero();
    for x in &inv[1..] {
        acc += x.modpow(&BigUint::from(k), &m);
    }
    Residue::new(acc % &m, m)
}

/// `H_{p-1,k} mod p^e` for every `k` in `0..=kmax`.
pub fn harmonic_all(p: u64, kmax: usize, e: u32) -> Vec<BigUint> {
    let m = prime_power(p, e);
    let inv = inverses(p, &m);
    let mut acc = vec![BigUint::zero(); kmax + 1];
    for x in &inv[1..] {
        let mut cur = BigUint::one();
        for slot in acc.iter_mut() {
            *slot += &cur;
            cur = cur * x % &m;
        }
    }
    acc.into_iter().map(|v| v % &m).collect()
}

/// Elementary symmetric polynomials `e_0..e_{n}` of the given values mod `m`.
fn elementary_mod(values: impl IntoIterator<Item = BigUint>, n: usize, m: &BigUint) -> Vec<BigUint> {
    let mut e = vec![BigUint::zero(); n + 1];
    e[0] = BigUint::one();
    for (count, x) in values.into_iter().enumerate() {
        for k in (1..=(count + 1).min(n)).rev() {
            let t = &e[k - 1] * &x;
            e[k] = (&e[k] + t) % m;
        }
    }
    e
}

/// `A_k = e_k(1, ..., p-1)`, the unsigned Stirling number `c(p, p-k)`.
pub fn stirling_exact(p: u64, k: u64) -> Result<BigInt> {
    if k == 0 || k >= p {
        return Err(Error::InvalidArgument(format!("Stirling index {k} outside 1..{p}")));
    }
    Ok(stirling_exact_all(p)?.swap_remove(k as usize))
}

/// `A_0..A_{p-1}` as exact integers.
pub fn stirling_exact_all(p: u64) -> Result<Vec<BigInt>> {
    if p > STIRLING_EXACT_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "exact Stirling numbers are limited to p <= {STIRLING_EXACT_LIMIT}; use the modular variant"
        )));
    }
    let n = (p - 1) as usize;
    let mut e = vec![BigInt::zero(); n + 1];
    e[0] = BigInt::one();
    for a in 1..p {
        for k in (1..=a as usize).rev() {
            let t = &e[k - 1] * a;
            e[k] += t;
        }
    }
    Ok(e)
}

/// `A_0..A_{p-1} mod p^e`.
pub fn stirling_mod_all(p: u64, e: u32) -> Vec<BigUint> {
    let m = prime_power(p, e);
    elementary_mod((1..p).map(BigUint::from), (p - 1) as usize, &m)
}

/// `A*_0..A*_{p-1} mod p^e`: elementary symmetric polynomials in `1/a`.
pub fn mhs_all(p: u64, e: u32) -> Vec<BigUint> {
    let m = prime_power(p, e);
    let inv = inverses(p, &m);
    elementary_mod(inv.into_iter().skip(1), (p - 1) as usize, &m)
}

/// The multiple harmonic sum `A*_k mod p^e`.
pub fn mhs(p: u64, k: u64, e: u32) -> Result<Residue> {
    if k == 0 || k >= p {
        return Err(Error::InvalidArgument(format!("harmonic sum index {k} outside 1..{p}")));
    }
    let all = mhs_all(p, e);
    Ok(Residue::new(all[k as usize].clone(), prime_power(p, e)))
}

/// `(p-1)! mod p^e` by direct product.
pub fn factorial_mod(p: u64, e: u32) -> BigUint {
    let m = prime_power(p, e);
    if let Some(mw) = crate::arith::prime_power_u64(p, e) {
        let mw = mw as u128;
        let mut acc = 1u128;
        for a in 1..p as u128 {
            acc = acc * a % mw;
        }
        return BigUint::from(acc);
    }
    (1..p).fold(BigUint::one(), |acc, a| acc * BigUint::from(a) % &m)
}

/// `w_p = ((p-1)! + 1) / p mod p^e`.
pub fn wilson_quotient_mod(p: u64, e: u32) -> BigUint {
    let f = factorial_mod(p, e + 1);
    ((f + 1u32) % prime_power(p, e + 1)) / BigUint::from(p)
}

/// `q_a` for `a = 0..p-1`; index 0 is unused and holds 0.
pub fn fermat_quotients(p: u64) -> Vec<u64> {
    (0..p)
        .map(|a| if a == 0 { 0 } else { fermat_quotient(a, p) })
        .collect()
}

/// Newton's identities at index `k`: exact for `(A_j, S_j)`, and modulo
/// `p^e` for `(A*_j, H_j)`. Returns the two alternating sums; both vanish
/// when the identity holds.
pub fn newton_sums(p: u64, k: usize, e: u32) -> Result<(BigInt, BigUint)> {
    if k == 0 || k as u64 >= p {
        return Err(Error::InvalidArgument(format!("Newton index {k} outside 1..{p}")));
    }
    Ok(newton_residuals(p, e)?.swap_remove(k - 1))
}

/// [`newton_sums`] for every `k` in `1..p`, sharing the sequences.
pub fn newton_residuals(p: u64, e: u32) -> Result<Vec<(BigInt, BigUint)>> {
    let a = stirling_exact_all(p)?;
    let n = p as usize - 1;
    let mut s = vec![BigInt::zero(); n + 1];
    for x in 1..p {
        let mut pw = BigInt::one();
        for sj in s.iter_mut() {
            *sj += &pw;
            pw *= x;
        }
    }
    let m = prime_power(p, e);
    let astar = mhs_all(p, e);
    let h = harmonic_all(p, n, e);
    let out = (1..=n)
        .map(|k| {
            // S_k - A_1 S_{k-1} + ... + (-1)^{k-1} A_{k-1} S_1 + (-1)^k k A_k
            let mut exact = BigInt::zero();
            let mut modular = BigUint::zero();
            for j in 0..=k {
                let (t, u) = if j == k {
                    (&a[k] * BigInt::from(k), &astar[k] * BigUint::from(k) % &m)
                } else {
                    (&a[j] * &s[k - j], &astar[j] * &h[k - j] % &m)
                };
                if j % 2 == 0 {
                    exact += t;
                    modular = (modular + u) % &m;
                } else {
                    exact -= t;
                    modular = (modular + &m - u) % &m;
                }
            }
            (exact, modular)
        })
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(sum_powers(5, 1, 2).to_u64(), 10);
        assert_eq!(sum_powers(7, 0, 1).to_u64(), 6);
        assert_eq!(harmonic(5, 1, 2).to_u64(), 0);
        assert_eq!(harmonic(7, 2, 1).to_u64(), 0);
        assert_eq!(stirling_exact(5, 2).unwrap(), BigInt::from(35));
        assert_eq!(stirling_exact(13, 12).unwrap(), BigInt::from(479001600));
        assert_eq!(mhs(11, 6, 4).unwrap().to_u64(), 2068);
        assert_eq!(mhs(11, 8, 4).unwrap().to_u64(), 5456);
        assert_eq!(factorial_mod(19, 4), BigUint::from(93175u32));
    }

    #[test]
    fn stirling_first_and_last() {
        for p in [7u64, 11, 13, 31] {
            assert_eq!(stirling_exact(p, 1).unwrap(), BigInt::from(p * (p - 1) / 2));
            let m = prime_power(p, 4);
            let exact = stirling_exact_all(p).unwrap();
            let modular = stirling_mod_all(p, 4);
            for k in 0..p as usize {
                assert_eq!(crate::arith::reduce_int(&exact[k], &m), modular[k]);
            }
            // Reciprocal products: A*_{p-1} (p-1)! = 1.
            let prod = &mhs_all(p, 4)[(p - 1) as usize] * factorial_mod(p, 4) % &m;
            assert_eq!(prod, BigUint::one());
        }
        assert!(stirling_exact(2003, 1).is_err());
    }

    #[test]
    fn harmonic_batch_matches_single() {
        let p = 23;
        let all = harmonic_all(p, 22, 4);
        for k in 1..=22 {
            assert_eq!(all[k], *harmonic(p, k as u64, 4).value());
        }
        assert_eq!(all[0], BigUint::from(22u32));
    }

    #[test]
    fn wilson_quotient() {
        assert_eq!(wilson_quotient_mod(5, 2), BigUint::from(5u32));
        assert_eq!(wilson_quotient_mod(7, 1), BigUint::from(5u32));
        assert_eq!(wilson_quotient_mod(13, 1), BigUint::zero());
    }

    #[test]
    fn newton() {
        for (p, k) in [(7u64, 3usize), (11, 10), (13, 1), (29, 17)] {
            let (exact, modular) = newton_sums(p, k, 4).unwrap();
            assert!(exact.is_zero() && modular.is_zero(), "p={p} k={k}");
        }
    }
}
