//! Bernoulli numbers, exactly and as per-prime residue tables.
//!
//! Two independent routes exist on purpose. [`bernoulli_exact`] runs the
//! classical recurrence over rationals and is only feasible for indices in
//! the low hundreds. [`BernoulliTable`] recovers `p * B_k mod p^e` for every
//! `k <= nmax` from power sums, and is what the formulas consume.
//!
//! Convention: `B_1 = -1/2`.

mod cache;
mod table;

pub use cache::{cache_file_name, load_or_build, read_table, write_table};
pub use table::{BernoulliTable, MAX_TABLE_PRECISION};

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{is_prime, rat, Rational};

fn memo() -> &'static Mutex<Vec<Rational>> {
    static MEMO: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(vec![Rational::one(), rat(-1, 2)]))
}

/// `B_n` as an exact rational, memoized process-wide.
pub fn bernoulli_exact(n: usize) -> Rational {
    if n > 1 && n % 2 == 1 {
        return Rational::zero();
    }
    let mut b = memo().lock().expect("bernoulli memo poisoned");
    while b.len() <= n {
        let m = b.len();
        if m % 2 == 1 {
            b.push(Rational::zero());
            continue;
        }
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j, skipping the zero odd terms.
        let mut binom = BigInt::one(); // C(m+1, j)
        let mut sum = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            if j > 0 {
                binom = binom * BigInt::from(m + 2 - j) / BigInt::from(j);
            }
            if !bj.is_zero() {
                sum += bj * Rational::from_integer(binom.clone());
            }
        }
        let bm = -sum / Rational::from_integer(BigInt::from(m + 1));
        b.push(bm);
    }
    b[n].clone()
}

/// The divided Bernoulli number `B_n / n`.
pub fn divided_bernoulli_exact(n: usize) -> Rational {
    assert!(n >= 1, "divided Bernoulli numbers start at index 1");
    bernoulli_exact(n) / Rational::from_integer(BigInt::from(n))
}

/// Product of the primes `q` with `(q - 1) | n`: the denominator of `B_n`
/// for even `n >= 2`.
pub fn von_staudt_denominator(n: u64) -> u64 {
    assert!(n >= 2 && n % 2 == 0, "von Staudt denominator needs even n >= 2");
    (1..=n)
        .filter(|d| n % d == 0 && is_prime(d + 1))
        .map(|d| d + 1)
        .product()
}
