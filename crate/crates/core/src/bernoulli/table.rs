use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::arith::{mod_inv, power_sums, prime_power, Residue};
use crate::error::{Error, Result};

/// Highest `e` the four-term descent supports: the dropped tail terms carry
/// a factor `p^5`.
pub const MAX_TABLE_PRECISION: u32 = 5;

/// `p * B_k mod p^e` for `k = 0..=nmax`.
///
/// Built from `S_k = sum_{a<p} a^k` by peeling the Faulhaber expansion
/// `S_k = sum_j C(k, j)/(j+1) p^{j+1} B_{k-j}` back to its leading term,
/// which needs only the four previous entries when `p >= 7`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliTable {
    p: u64,
    e: u32,
    modulus: BigUint,
    entries: Vec<BigUint>,
}

impl BernoulliTable {
    pub fn build(p: u64, nmax: usize, e: u32) -> Result<Self> {
        if p < 7 || !crate::arith::is_prime(p) {
            return Err(Error::InvalidArgument(format!(
                "Bernoulli tables need a prime p >= 7, got {p}"
            )));
        }
        if e == 0 || e > MAX_TABLE_PRECISION {
            return Err(Error::InsufficientPrecision(format!(
                "table precision p^{e} is outside 1..={MAX_TABLE_PRECISION}"
            )));
        }
        let m = prime_power(p, e);
        let sums = power_sums(p, e, nmax, 2);
        let pb = BigUint::from(p);

        // c[j] = p^j / (j+1) mod p^e for j = 1..4.
        let c: Vec<BigUint> = (0..=4u32)
            .map(|j| {
                let inv = mod_inv(&BigInt::from(j + 1), &m).expect("p >= 7");
                (pb.pow(j) * inv.value()) % &m
            })
            .collect();

        let mut entries = Vec::with_capacity(nmax + 1);
        entries.push(&pb % &m);
        if nmax >= 1 {
            // p * (-1/2)
            let half = mod_inv(&BigInt::from(2), &m).expect("p odd");
            entries.push((&m - (&pb * half.value()) % &m) % &m);
        }
        for k in 2..=nmax {
            if k % 2 == 1 {
                entries.push(BigUint::zero());
                continue;
            }
            let mut tail = BigUint::zero();
            let mut binom = BigUint::from(1u32);
            for j in 1..=4usize.min(k) {
                binom = binom * BigUint::from(k + 1 - j) / BigUint::from(j);
                let prev = &entries[k - j];
                if !prev.is_zero() {
                    tail += (&binom % &m) * &c[j] % &m * prev;
                }
            }
            let tail = tail % &m;
            let s = sums.get(k) % &m;
            entries.push((s + &m - tail) % &m);
        }
        Ok(Self {
            p,
            e,
            modulus: m,
            entries,
        })
    }

    pub(crate) fn from_parts(p: u64, e: u32, entries: Vec<BigUint>) -> Self {
        Self {
            p,
            e,
            modulus: prime_power(p, e),
            entries,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.e
    }

    pub fn nmax(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn raw(&self, k: usize) -> &BigUint {
        &self.entries[k]
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// `p * B_k mod p^e`.
    pub fn entry(&self, k: usize) -> Result<Residue> {
        self.entries
            .get(k)
            .map(|v| Residue::new(v.clone(), self.modulus.clone()))
            .ok_or_else(|| {
                Error::InvalidArgument(format!("k = {k} exceeds table bound {}", self.nmax()))
            })
    }

    /// The same table at a lower precision and/or shorter length.
    pub fn restrict(&self, nmax: usize, e: u32) -> Result<Self> {
        if e > self.e || nmax > self.nmax() {
            return Err(Error::InsufficientPrecision(format!(
                "cannot widen a (p^{}, k <= {}) table to (p^{e}, k <= {nmax})",
                self.e,
                self.nmax()
            )));
        }
        let m = prime_power(self.p, e);
        let entries = self.entries[..=nmax].iter().map(|v| v % &m).collect();
        Ok(Self {
            p: self.p,
            e,
            modulus: m,
            entries,
        })
    }

    /// `p * B_k mod p^e` as a small integer when the modulus fits a word.
    pub fn entry_u64(&self, k: usize) -> Option<u64> {
        self.entries.get(k).and_then(|v| v.to_u64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_reduce;
    use crate::bernoulli::bernoulli_exact;
    use crate::arith::Rational;

    fn oracle(p: u64, k: usize, e: u32) -> BigUint {
        let q = Rational::from_integer(BigInt::from(p)) * bernoulli_exact(k);
        rat_reduce(&q, p, e).unwrap().value().clone()
    }

    #[test]
    fn matches_exact_rationals() {
        for p in [7u64, 11, 13, 29, 31] {
            for e in 1..=5 {
                let t = BernoulliTable::build(p, 3 * (p as usize), e).unwrap();
                for k in 0..=t.nmax() {
                    assert_eq!(t.raw(k), &oracle(p, k, e), "p={p} e={e} k={k}");
                }
            }
        }
    }

    #[test]
    fn von_staudt_residues() {
        let p = 37u64;
        let t = BernoulliTable::build(p, 4 * 36, 1).unwrap();
        for k in 1..=t.nmax() {
            let expect = if k % 2 == 0 && k % 36 == 0 { p - 1 } else { 0 };
            if k == 1 {
                continue;
            }
            assert_eq!(t.entry_u64(k), Some(expect), "k = {k}");
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(
            BernoulliTable::build(11, 20, 6),
            Err(Error::InsufficientPrecision(_))
        ));
        assert!(matches!(
            BernoulliTable::build(5, 20, 2),
            Err(Error::InvalidArgument(_))
        ));
        assert!(BernoulliTable::build(15, 20, 2).is_err());
    }

    #[test]
    fn restrict_reduces() {
        let t = BernoulliTable::build(13, 40, 5).unwrap();
        let r = t.restrict(30, 2).unwrap();
        assert_eq!(r, BernoulliTable::build(13, 30, 2).unwrap());
        assert!(r.restrict(31, 2).is_err());
    }
}
