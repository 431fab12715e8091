use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::bernoulli::BernoulliTable;
use crate::error::{Error, Result};
use crate::formulas::Bern;
use crate::padic::{agoh_giuga_from, Qp};

use super::{
    factorial_mod, fermat_quotients, harmonic_all, mhs_all, stirling_mod_all, wilson_quotient_mod,
};

/// Largest prime for which exact-rational oracles are evaluated.
pub const ORACLE_LIMIT: u64 = 101;

/// Exponent of the direct sequences cached in a context.
const DIRECT_E: u32 = 4;

/// Everything the checks need about one prime, built once and then shared
/// read-only. The quadratic-cost sequences are filled in on first use.
pub struct PrimeContext {
    p: u64,
    table: BernoulliTable,
    fermat: Vec<u64>,
    factorial: BigUint,
    wilson: BigUint,
    wilson_digits: (u64, u64),
    agoh_giuga: u64,
    harmonic: OnceLock<Vec<BigUint>>,
    stirling: OnceLock<Vec<BigUint>>,
    mhs: OnceLock<Vec<BigUint>>,
    terms: OnceLock<Bern>,
    exact: OnceLock<Bern>,
}

impl PrimeContext {
    pub fn new(p: u64, nmax: usize, e: u32) -> Result<Self> {
        Self::from_table(BernoulliTable::build(p, nmax, e)?)
    }

    pub fn from_table(table: BernoulliTable) -> Result<Self> {
        let p = table.p();
        let e = table.precision();
        if e < 2 || table.nmax() < p as usize - 1 {
            return Err(Error::InvalidArgument(format!(
                "a prime context needs p B_{{p-1}} mod p^2; table has e = {e}, nmax = {}",
                table.nmax()
            )));
        }
        let pb = Qp::from_residue(p, table.raw(p as usize - 1), e as i32);
        let agoh_giuga = agoh_giuga_from(&pb)?;
        let wilson = wilson_quotient_mod(p, DIRECT_E);
        let w = Qp::from_residue(p, &wilson, DIRECT_E as i32);
        let wilson_digits = (w.digit(0)?, w.digit(1)?);
        Ok(PrimeContext {
            p,
            fermat: fermat_quotients(p),
            factorial: factorial_mod(p, DIRECT_E),
            wilson,
            wilson_digits,
            agoh_giuga,
            table,
            harmonic: OnceLock::new(),
            stirling: OnceLock::new(),
            mhs: OnceLock::new(),
            terms: OnceLock::new(),
            exact: OnceLock::new(),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Precision of the Bernoulli table.
    pub fn precision(&self) -> u32 {
        self.table.precision()
    }

    pub fn nmax(&self) -> usize {
        self.table.nmax()
    }

    pub fn table(&self) -> &BernoulliTable {
        &self.table
    }

    /// Fermat quotient `q_a`, `1 <= a < p`.
    pub fn fermat_quotient(&self, a: u64) -> u64 {
        self.fermat[a as usize]
    }

    /// `(p-1)! mod p^4`.
    pub fn factorial(&self) -> &BigUint {
        &self.factorial
    }

    /// `w_p mod p^4`.
    pub fn wilson_quotient(&self) -> &BigUint {
        &self.wilson
    }

    /// `((w_p)_0, (w_p)_1)`.
    pub fn wilson_digits(&self) -> (u64, u64) {
        self.wilson_digits
    }

    /// `(p B_{p-1})_1` in the `-1 + p x` convention.
    pub fn agoh_giuga(&self) -> u64 {
        self.agoh_giuga
    }

    /// `H_{p-1,k} mod p^4`, `0 <= k <= p-1`.
    pub fn harmonic(&self, k: usize) -> &BigUint {
        &self
            .harmonic
            .get_or_init(|| harmonic_all(self.p, self.p as usize - 1, DIRECT_E))[k]
    }

    /// `A_k mod p^4`.
    pub fn stirling(&self, k: usize) -> &BigUint {
        &self.stirling.get_or_init(|| stirling_mod_all(self.p, DIRECT_E))[k]
    }

    /// `A*_k mod p^4`.
    pub fn mhs(&self, k: usize) -> &BigUint {
        &self.mhs.get_or_init(|| mhs_all(self.p, DIRECT_E))[k]
    }

    /// Divided Bernoulli numbers and convolutions read from the table.
    pub fn terms(&self) -> &Bern {
        self.terms.get_or_init(|| Bern::from_table(&self.table))
    }

    /// The same quantities from exact rationals; only for small primes.
    pub fn exact_terms(&self) -> Result<&Bern> {
        if self.p > ORACLE_LIMIT {
            return Err(Error::InvalidArgument(format!(
                "exact oracles are limited to p <= {ORACLE_LIMIT}"
            )));
        }
        Ok(self.exact.get_or_init(|| Bern::exact(self.p, self.nmax())))
    }

    /// `w_p` as a p-adic integer known mod `p^4`.
    pub fn w(&self) -> Qp {
        Qp::from_residue(self.p, &self.wilson, DIRECT_E as i32)
    }
}
