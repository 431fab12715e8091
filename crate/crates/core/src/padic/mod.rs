//! Hensel digits `(x)_i` of rationals with valuation at least `-1`.
//!
//! Digits are the greedy base-`p` expansion with every digit in `[0, p)`.
//! A nested bracket such as `[6 (x)_1]_1` is evaluated inside-out: the inner
//! digit becomes an ordinary integer before the outer one is read.

mod qp;

pub use qp::{Qp, EXACT_DIGITS};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{mod_pow, prime_power, valuation, Rational};
use crate::bernoulli::{bernoulli_exact, BernoulliTable};
use crate::error::{Error, Result};

/// The digits `d_{-1}, d_0, ..., d_{count-2}` of a rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QpDigits {
    pub p: u64,
    /// `digits[0]` is the coefficient of `1/p`.
    pub digits: Vec<u64>,
}

impl QpDigits {
    /// Coefficient of `p^i`, for `i >= -1`.
    pub fn get(&self, i: i32) -> u64 {
        self.digits[(i + 1) as usize]
    }

    /// `d_{-1}/p + sum d_i p^i` as an exact rational.
    pub fn reconstruct(&self) -> Rational {
        let p = BigInt::from(self.p);
        let mut acc = Rational::zero();
        let mut scale = Rational::new(BigInt::from(1), p.clone());
        for &d in &self.digits {
            acc += &scale * Rational::from_integer(BigInt::from(d));
            scale *= Rational::from_integer(p.clone());
        }
        acc
    }
}

fn checked(q: &Rational, p: u64) -> Result<i32> {
    if q.is_zero() {
        return Ok(0);
    }
    let v = valuation(q, p)?;
    if v < -1 {
        return Err(Error::ValuationTooLow { p, valuation: v });
    }
    Ok(v as i32)
}

/// The first `count` digits of `q`, starting at the `1/p` coordinate.
pub fn digits(q: &Rational, p: u64, count: usize) -> Result<QpDigits> {
    let v = checked(q, p)?;
    let x = Qp::from_rational(p, q, count as i32 + 1 - v.min(0));
    let digits = (0..count as i32)
        .map(|j| x.digit(j - 1))
        .collect::<Result<_>>()?;
    Ok(QpDigits { p, digits })
}

/// The single coordinate `(q)_i`.
pub fn residue_at(q: &Rational, p: u64, i: i32) -> Result<u64> {
    if i < -1 {
        return Err(Error::InvalidArgument(format!("digit index {i} is below -1")));
    }
    let v = checked(q, p)?;
    Qp::from_rational(p, q, i + 2 - v.min(0)).digit(i)
}

/// The Agoh-Giuga coordinate: the `x` in `[0, p)` with
/// `p B_{p-1} = -1 + p x (mod p^2)`. Not the canonical digit of `p B_{p-1}`.
pub fn agoh_giuga_q1(p: u64) -> u64 {
    assert!(p >= 5, "Agoh-Giuga coordinate needs p >= 5");
    let pb = Rational::from_integer(BigInt::from(p)) * bernoulli_exact(p as usize - 1);
    agoh_giuga_from(&Qp::from_rational(p, &pb, 2)).expect("two digits are known")
}

/// Agoh-Giuga coordinate from `p B_{p-1}` known mod `p^2`.
pub fn agoh_giuga_from(pb: &Qp) -> Result<u64> {
    ((pb + 1).shl(-1)).digit(0)
}

/// `(w_p)_0` and `(w_p)_1` from the factorial, checked against the
/// Bernoulli-number formulas for both coordinates.
pub fn wilson_quotient_residues(p: u64) -> Result<(u64, u64)> {
    if p < 5 || !crate::arith::is_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "Wilson quotient coordinates need a prime p >= 5, got {p}"
        )));
    }
    let direct = wilson_quotient_direct(p);
    let (pb1, pb2) = if p >= 7 {
        let t = BernoulliTable::build(p, 2 * (p as usize - 1), 3)?;
        (
            Qp::from_residue(p, t.raw(p as usize - 1), 3),
            Qp::from_residue(p, t.raw(2 * (p as usize - 1)), 3),
        )
    } else {
        let exact = |k: usize| {
            let pb = Rational::from_integer(BigInt::from(p)) * bernoulli_exact(k);
            Qp::from_rational(p, &pb, 3)
        };
        (exact(p as usize - 1), exact(2 * (p as usize - 1)))
    };
    let formula = wilson_quotient_formula(&pb1, &pb2)?;
    if direct != formula {
        return Err(Error::FormulaMismatch {
            what: format!("Wilson quotient coordinates at p = {p}"),
            left: format!("{direct:?}"),
            right: format!("{formula:?}"),
        });
    }
    Ok(direct)
}

/// `((w_p)_0, (w_p)_1)` straight from `(p-1)! mod p^3`.
pub fn wilson_quotient_direct(p: u64) -> (u64, u64) {
    let m = prime_power(p, 3);
    let f = (1..p).fold(BigInt::from(1), |acc, a| acc * a % BigInt::from(m.clone()));
    let w = (f + 1) / BigInt::from(p);
    let w = Qp::from_bigint(p, &w, 2);
    (w.digit(0).expect("known"), w.digit(1).expect("known"))
}

/// The two coordinates of `w_p` from `p B_{p-1}` and `p B_{2(p-1)}`, each
/// known mod `p^3`.
pub fn wilson_quotient_formula(pb1: &Qp, pb2: &Qp) -> Result<(u64, u64)> {
    let p = pb1.p();
    let pq = Qp::int(p, p as i64);
    // (w_p)_0 = ((p B_{p-1} + 1) / p)_0 - 1
    let w0 = (agoh_giuga_from(pb1)? + p - 1) % p;
    // (w_p)_1 is digit 2 of the expression below.
    let x = Qp::int(p, 1) + &pq / 2 - Qp::rat(p, 3, 2) * &pq * &pq + (2 * &pq + 1) * pb1
        - pb2 / 2
        - pb1 * pb1 / 2;
    Ok((w0, x.digit(2)?))
}

/// `a^{p-1} = 1 + p q_a (mod p^2)`; the Fermat quotient `q_a` in `[0, p)`.
pub fn fermat_quotient(a: u64, p: u64) -> u64 {
    let m = prime_power(p, 2);
    let r = mod_pow(&BigInt::from(a), &(p - 1).into(), &m);
    let v = r.to_u64();
    ((v + p * p - 1) % (p * p)) / p
}

/// `1/2` as the repeating expansion `(p+1)/2, (p-1)/2, (p-1)/2, ...`.
pub fn half_digits(p: u64, count: usize) -> Vec<u64> {
    (0..count)
        .map(|i| if i == 0 { (p + 1) / 2 } else { (p - 1) / 2 })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::arith::int;
    use crate::bernoulli::divided_bernoulli_exact as db;
    use num_integer::Integer;

    #[test]
    fn half_expansions() {
        let h = digits(&rat(1, 2), 5, 4).unwrap();
        assert_eq!(h.digits, vec![0, 3, 2, 2]);
        assert_eq!(digits(&rat(-1, 2), 5, 4).unwrap().digits, vec![0, 2, 2, 2]);
        assert_eq!(residue_at(&rat(1, 2), 5, 1).unwrap(), 2);
        assert_eq!(residue_at(&int(17), 5, 1).unwrap(), 3);
        assert_eq!(&half_digits(5, 3)[..], &h.digits[1..]);
    }

    #[test]
    fn divided_bernoulli_pole() {
        let q = db(6);
        let d = digits(&q, 7, 3).unwrap();
        assert_eq!(d.get(-1), 1);
        let rest = q - rat(1, 7);
        assert_eq!(d.get(0), residue_at(&rest, 7, 0).unwrap());
        assert!(matches!(
            digits(&rat(1, 49), 7, 3),
            Err(Error::ValuationTooLow { p: 7, valuation: -2 })
        ));
    }

    #[test]
    fn agoh_giuga_examples() {
        assert_eq!(agoh_giuga_q1(5), 1);
        for p in [7u64, 11, 13, 17, 19, 23] {
            let pb = Rational::from_integer(BigInt::from(p)) * bernoulli_exact(p as usize - 1);
            let lhs = (BigInt::from(p) * agoh_giuga_q1(p) - BigInt::from(1))
                .mod_floor(&BigInt::from(p * p));
            let rhs = crate::arith::rat_reduce(&pb, p, 2).unwrap();
            assert_eq!(lhs, BigInt::from(rhs.value().clone()), "p = {p}");
        }
    }

    #[test]
    fn wilson_quotients() {
        assert_eq!(wilson_quotient_residues(13).unwrap().0, 0);
        assert_eq!(wilson_quotient_residues(5).unwrap(), (0, 1));
        assert_eq!(wilson_quotient_residues(7).unwrap().0, 5);
        for p in crate::arith::primes_in(5, 200) {
            wilson_quotient_residues(p).unwrap();
        }
        assert!(wilson_quotient_residues(9).is_err());
    }

    #[test]
    fn fermat_quotients() {
        for p in [5u64, 7, 11, 101] {
            for a in 1..p {
                let q = fermat_quotient(a, p);
                assert!(q < p);
                let lhs = BigInt::from(a).pow(p as u32 - 1) % BigInt::from(p * p);
                assert_eq!(lhs, BigInt::from((1 + p * q) % (p * p)));
            }
        }
    }
}
