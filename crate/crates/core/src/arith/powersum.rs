//! Batched power sums `S_k = 1^k + 2^k + ... + (p-1)^k mod p^e`.
//!
//! This is the O(p * kmax) inner loop behind every Bernoulli table. The
//! word-sized path runs in Montgomery form; moduli of 2^63 and above fall
//! back to big integers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{prime_power, prime_power_u64, Montgomery};

/// `S_k` for `k = 0, step, 2*step, ..., <= kmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSums {
    pub step: usize,
    pub modulus: BigUint,
    pub sums: Vec<BigUint>,
}

impl PowerSums {
    /// `S_k`; `k` must be a multiple of the step.
    pub fn get(&self, k: usize) -> &BigUint {
        assert!(k % self.step == 0, "power sum for k = {k} not computed");
        &self.sums[k / self.step]
    }
}

fn len_for(kmax: usize, step: usize) -> usize {
    kmax / step + 1
}

fn accumulate_word(mg: &Montgomery, a: u64, step: usize, acc: &mut [u64]) {
    let base = mg.to_mont(a);
    let mut x = base;
    for _ in 1..step {
        x = mg.mul(x, base);
    }
    let mut cur = mg.one();
    for slot in acc.iter_mut() {
        *slot = mg.add(*slot, cur);
        cur = mg.mul(cur, x);
    }
}

fn accumulate_big(m: &BigUint, a: u64, step: usize, acc: &mut [BigUint]) {
    let x = BigUint::from(a).pow(step as u32) % m;
    let mut cur = BigUint::one();
    for slot in acc.iter_mut() {
        *slot += &cur;
        if &*slot >= m {
            *slot -= m;
        }
        cur = (cur * &x) % m;
    }
}

fn finish_word(mg: &Montgomery, acc: Vec<u64>, step: usize, modulus: BigUint) -> PowerSums {
    PowerSums {
        step,
        modulus,
        sums: acc.into_iter().map(|v| BigUint::from(mg.from_mont(v))).collect(),
    }
}

/// Single-threaded power sums.
pub fn power_sums_seq(p: u64, e: u32, kmax: usize, step: usize) -> PowerSums {
    assert!(step >= 1);
    let n = len_for(kmax, step);
    let modulus = prime_power(p, e);
    match prime_power_u64(p, e).filter(|m| m % 2 == 1) {
        Some(m) => {
            let mg = Montgomery::new(m);
            let mut acc = vec![0u64; n];
            for a in 1..p {
                accumulate_word(&mg, a, step, &mut acc);
            }
            finish_word(&mg, acc, step, modulus)
        }
        None => {
            let mut acc = vec![BigUint::zero(); n];
            for a in 1..p {
                accumulate_big(&modulus, a, step, &mut acc);
            }
            PowerSums { step, modulus, sums: acc }
        }
    }
}

/// Power sums with the `a` range split across the rayon pool.
#[cfg(feature = "parallel")]
pub fn power_sums_par(p: u64, e: u32, kmax: usize, step: usize) -> PowerSums {
    use rayon::prelude::*;

    assert!(step >= 1);
    let n = len_for(kmax, step);
    let modulus = prime_power(p, e);
    match prime_power_u64(p, e).filter(|m| m % 2 == 1) {
        Some(m) => {
            let mg = Montgomery::new(m);
            let acc = (1..p)
                .into_par_iter()
                .fold(
                    || vec![0u64; n],
                    |mut acc, a| {
                        accumulate_word(&mg, a, step, &mut acc);
                        acc
                    },
                )
                .reduce(
                    || vec![0u64; n],
                    |mut x, y| {
                        for (s, t) in x.iter_mut().zip(y) {
                            *s = mg.add(*s, t);
                        }
                        x
                    },
                );
            finish_word(&mg, acc, step, modulus)
        }
        None => {
            let acc = (1..p)
                .into_par_iter()
                .fold(
                    || vec![BigUint::zero(); n],
                    |mut acc, a| {
                        accumulate_big(&modulus, a, step, &mut acc);
                        acc
                    },
                )
                .reduce(
                    || vec![BigUint::zero(); n],
                    |mut x, y| {
                        for (s, t) in x.iter_mut().zip(y) {
                            *s = (&*s + t) % &modulus;
                        }
                        x
                    },
                );
            PowerSums { step, modulus, sums: acc }
        }
    }
}

/// Power sums on whichever backend the build enables.
pub fn power_sums(p: u64, e: u32, kmax: usize, step: usize) -> PowerSums {
    #[cfg(feature = "parallel")]
    {
        power_sums_par(p, e, kmax, step)
    }
    #[cfg(not(feature = "parallel"))]
    {
        power_sums_seq(p, e, kmax, step)
    }
}
