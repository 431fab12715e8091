//! Closed forms of the congruences, evaluated as p-adic numbers over a
//! [`PrimeContext`](crate::sequences::PrimeContext).
//!
//! Each function returns the formula side only. Values carry their own
//! precision, so asking for a residue the inputs cannot support fails with
//! [`Error::InsufficientPrecision`](crate::Error::InsufficientPrecision)
//! instead of returning garbage.

mod appendix;
mod derived;
mod harmonic;
mod kummer;
mod mhs;
mod miki;
mod stirling;
mod terms;
mod wilson;

pub use appendix::{appendix_terms, AppendixTerms};
pub use derived::*;
pub use harmonic::*;
pub use kummer::*;
pub use mhs::*;
pub use miki::miki_sides;
pub use stirling::*;
pub use terms::Bern;
pub use wilson::*;

use crate::arith::{prime_power, Residue};
use crate::error::Result;

/// A convolution of divided Bernoulli numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvolutionKind {
    /// `CB(n) = sum_{i=2}^{n-2} b_i b_{n-i}`.
    Full(usize),
    /// `BBB(n)`, the three-factor analogue.
    Triple(usize),
    /// `sum_{i=lo}^{hi} b_i b_{total-i}`.
    Truncated { lo: usize, hi: usize, total: usize },
}

/// A convolution reduced mod `p^e`.
pub fn convolution(kind: ConvolutionKind, t: &Bern, e: u32) -> Result<Residue> {
    let v = match kind {
        ConvolutionKind::Full(n) => t.cb(n),
        ConvolutionKind::Triple(n) => t.bbb(n),
        ConvolutionKind::Truncated { lo, hi, total } => t.tcb(lo, hi, total),
    };
    Ok(Residue::new(v.residue(e)?, prime_power(t.p(), e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::Qp;
    use crate::sequences::{mhs_all, PrimeContext};
    use num_bigint::BigUint;

    fn ctx(p: u64) -> PrimeContext {
        PrimeContext::new(p, 4 * (p as usize - 1), 5).unwrap()
    }

    #[test]
    fn triple_convolution_examples() {
        let c11 = ctx(11);
        let c13 = ctx(13);
        assert_eq!(convolution(ConvolutionKind::Triple(8), c11.terms(), 1).unwrap().to_u64(), 3);
        assert_eq!(convolution(ConvolutionKind::Triple(10), c13.terms(), 1).unwrap().to_u64(), 2);
        assert_eq!(triple_p_minus_3(&c11).unwrap().residue(1).unwrap(), BigUint::from(3u32));
        assert_eq!(triple_p_minus_3(&c13).unwrap().residue(1).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn mhs_spot_values() {
        let c = ctx(11);
        let v = |k, var| mhs_formula(&c, k, 4, var).unwrap().residue(4).unwrap();
        assert_eq!(v(6, MhsVariant::Closed), BigUint::from(2068u32));
        assert_eq!(v(8, MhsVariant::Closed), BigUint::from(5456u32));
        assert_eq!(mhs_all(11, 4)[6], BigUint::from(2068u32));
    }

    #[test]
    fn stirling_examples() {
        let c = ctx(11);
        let t = c.terms();
        let p = 11i64;
        let a2 = Qp::rat(11, p * (1 - 2 * p) * (5 * p - 2), 24);
        assert!((stirling_formula(t, 2, 4).unwrap() - a2).is_zero());
        let c13 = ctx(13);
        let exact = crate::sequences::stirling_exact(13, 6).unwrap();
        let m = prime_power(13, 4);
        assert_eq!(
            stirling_formula(c13.terms(), 6, 4).unwrap().residue(4).unwrap(),
            crate::arith::reduce_int(&exact, &m)
        );
    }

    #[test]
    fn wilson_goldens() {
        for (p, v) in [(19u64, 93175u64), (47, 2266715), (61, 6504002)] {
            let c = PrimeContext::new(p, 3 * (p as usize - 1), 4).unwrap();
            assert_eq!(wilson_formula(&c, 4).unwrap(), BigUint::from(v), "p = {p}");
        }
        let c = ctx(13);
        let direct = crate::sequences::factorial_mod(13, 2);
        assert_eq!(wilson_formula(&c, 2).unwrap(), direct);
    }

    #[test]
    fn harmonic_dispatch() {
        let c = ctx(11);
        let t = c.terms();
        assert!(matches!(
            harmonic_formula(t, 9, 4),
            Err(crate::Error::Unsupported { k: 9, e: 4, .. })
        ));
        assert_eq!(
            harmonic_residue(t, 8, 4).unwrap(),
            crate::sequences::harmonic(11, 8, 4).value().clone()
        );
        let c13 = ctx(13);
        assert_eq!(
            harmonic_residue(c13.terms(), 10, 3).unwrap(),
            crate::sequences::harmonic(13, 10, 3).value().clone()
        );
    }

    #[test]
    fn appendix_hat_differs_by_o1_and_o2() {
        let c = ctx(19);
        let a = appendix_terms(&c).unwrap();
        let diff = &a.o - &a.o_hat - (&a.parts[1] - &a.o1_hat) - &a.parts[2];
        assert!(diff.is_zero());
    }

    #[test]
    fn miki_small() {
        for n in [6, 8, 10] {
            let (l, r) = miki_sides(n);
            assert_eq!(l, r);
        }
    }
}
