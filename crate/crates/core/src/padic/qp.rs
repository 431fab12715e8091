//! Elements of `Q_p` known to a fixed absolute precision.
//!
//! A value is `p^shift * unit` modulo `p^prec`, with `unit` prime to `p`.
//! Precision follows the usual rules: sums keep the smaller absolute
//! precision, products lose whatever the valuations of the factors cost.
//! Reading a digit or residue beyond the known precision is an error rather
//! than a silently wrong answer.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::arith::{int_valuation, mod_inv, prime_power, reduce_int, Rational};
use crate::error::{Error, Result};

/// Relative precision given to exact constants.
pub const EXACT_DIGITS: i32 = 12;

/// Absolute precision of an exact zero; large enough to never bind.
const EXACT_ZERO: i32 = 1 << 20;

#[derive(Clone, PartialEq, Eq)]
pub struct Qp {
    p: u64,
    shift: i32,
    prec: i32,
    unit: BigUint,
}

/// Enough relative digits to hold `n` exactly, and never fewer than
/// [`EXACT_DIGITS`].
fn digits_needed(p: u64, n: &BigInt) -> i32 {
    let d = (n.bits() as f64 / (p as f64).log2()).ceil() as i32 + 1;
    d.max(EXACT_DIGITS)
}

fn pw(p: u64, k: i32) -> BigUint {
    prime_power(p, k.max(0) as u32)
}

impl Qp {
    /// Zero known modulo `p^prec`.
    pub fn zero(p: u64, prec: i32) -> Self {
        Qp {
            p,
            shift: prec,
            prec,
            unit: BigUint::zero(),
        }
    }

    pub fn exact_zero(p: u64) -> Self {
        Self::zero(p, EXACT_ZERO)
    }

    /// `p^shift * n` known modulo `p^prec`, normalized.
    fn make(p: u64, shift: i32, prec: i32, n: BigUint) -> Self {
        if shift >= prec || n.is_zero() {
            return Self::zero(p, prec);
        }
        let pb = BigUint::from(p);
        let mut shift = shift;
        let mut n = n % pw(p, prec - shift);
        while !n.is_zero() && (&n % &pb).is_zero() {
            n /= &pb;
            shift += 1;
        }
        if n.is_zero() || shift >= prec {
            return Self::zero(p, prec);
        }
        Qp {
            p,
            shift,
            prec,
            unit: n,
        }
    }

    /// An integer residue known modulo `p^prec`.
    pub fn from_residue(p: u64, value: &BigUint, prec: i32) -> Self {
        Self::make(p, 0, prec, value.clone())
    }

    pub fn from_bigint(p: u64, n: &BigInt, prec: i32) -> Self {
        Self::make(p, 0, prec, reduce_int(n, &pw(p, prec)))
    }

    /// A nonnegative integer of any size, exactly.
    pub fn exact_uint(p: u64, n: &BigUint) -> Self {
        if n.is_zero() {
            return Self::exact_zero(p);
        }
        let n = BigInt::from(n.clone());
        let v = int_valuation(&n, p) as i32;
        Self::from_bigint(p, &n, v + digits_needed(p, &n))
    }

    /// An exact integer.
    pub fn int(p: u64, n: i64) -> Self {
        if n == 0 {
            return Self::exact_zero(p);
        }
        let n = BigInt::from(n);
        let v = int_valuation(&n, p) as i32;
        Self::from_bigint(p, &n, v + digits_needed(p, &n))
    }

    /// An exact rational `n / d`.
    pub fn rat(p: u64, n: i64, d: i64) -> Self {
        Self::from_rational(p, &crate::arith::rat(n, d), EXACT_DIGITS)
    }

    /// `q` to `rel` digits beyond its valuation.
    pub fn from_rational(p: u64, q: &Rational, rel: i32) -> Self {
        if q.is_zero() {
            return Self::exact_zero(p);
        }
        let vn = int_valuation(q.numer(), p) as i32;
        let vd = int_valuation(q.denom(), p) as i32;
        let pv = |k: i32| BigInt::from(pw(p, k));
        let num = q.numer() / pv(vn);
        let den = q.denom() / pv(vd);
        let m = pw(p, rel);
        let inv = mod_inv(&den, &m).expect("unit denominator");
        let u = reduce_int(&num, &m) * inv.value() % &m;
        let shift = vn - vd;
        Self::make(p, shift, shift + rel, u)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Absolute precision: the value is known modulo `p^precision`.
    pub fn precision(&self) -> i32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.shift >= self.prec
    }

    /// Valuation, or `None` if the value is zero to the known precision.
    pub fn valuation(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.shift)
    }

    /// Drop precision to at most `prec`.
    pub fn truncate(&self, prec: i32) -> Self {
        if prec >= self.prec {
            return self.clone();
        }
        Self::make(self.p, self.shift, prec, self.unit.clone())
    }

    /// Multiply by `p^k`; exact.
    pub fn shl(&self, k: i32) -> Self {
        Qp {
            p: self.p,
            shift: self.shift + k,
            prec: self.prec + k,
            unit: self.unit.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InsufficientPrecision(format!(
                "cannot invert a value known only to be 0 mod {}^{}",
                self.p, self.prec
            )));
        }
        let rel = self.prec - self.shift;
        let m = pw(self.p, rel);
        let u = mod_inv(&BigInt::from(self.unit.clone()), &m)?;
        Ok(Self::make(self.p, -self.shift, rel - self.shift, u.value().clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Qp::int(self.p, 1), |acc, _| acc * self)
    }

    /// The coefficient of `p^i` in the greedy expansion with digits in `[0, p)`.
    pub fn digit(&self, i: i32) -> Result<u64> {
        if i >= self.prec {
            return Err(Error::InsufficientPrecision(format!(
                "digit {i} requested of a value known mod {}^{}",
                self.p, self.prec
            )));
        }
        if i < self.shift {
            return Ok(0);
        }
        let d = (&self.unit / pw(self.p, i - self.shift)) % BigUint::from(self.p);
        Ok(d.to_u64().expect("digit below p"))
    }

    /// The digit as a new exact integer; the building block of nested brackets.
    pub fn dig(&self, i: i32) -> Result<Self> {
        Ok(Qp::int(self.p, self.digit(i)? as i64))
    }

    /// Canonical residue modulo `p^e`.
    pub fn residue(&self, e: u32) -> Result<BigUint> {
        let e = e as i32;
        if self.prec < e {
            return Err(Error::InsufficientPrecision(format!(
                "value known mod {}^{} but needed mod {}^{e}",
                self.p, self.prec, self.p
            )));
        }
        if self.is_zero() || self.shift >= e {
            return Ok(BigUint::zero());
        }
        if self.shift < 0 {
            return Err(Error::DenominatorDivisible {
                value: format!("{self:?}"),
                p: self.p,
            });
        }
        Ok(&self.unit * pw(self.p, self.shift) % pw(self.p, e))
    }

    /// Rational with the same expansion up to the known precision.
    pub fn to_rational(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let u = Rational::from_integer(BigInt::from(self.unit.clone()));
        let scale = Rational::from_integer(BigInt::from(pw(self.p, self.shift.abs())));
        if self.shift >= 0 {
            u * scale
        } else {
            u / scale
        }
    }

    /// Sum over an iterator; `p` fixes the zero of an empty sum.
    pub fn sum<I: IntoIterator<Item = Qp>>(p: u64, items: I) -> Qp {
        items.into_iter().fold(Qp::exact_zero(p), |a, b| a + b)
    }

    fn add_ref(&self, o: &Qp) -> Qp {
        assert_eq!(self.p, o.p, "p-adic values for different primes cannot be combined");
        let prec = self.prec.min(o.prec);
        let s = self.shift.min(o.shift);
        if s >= prec {
            return Qp::zero(self.p, prec);
        }
        let m = pw(self.p, prec - s);
        let term = |x: &Qp| {
            if x.shift >= prec {
                BigUint::zero()
            } else {
                &x.unit * pw(x.p, x.shift - s)
            }
        };
        Qp::make(self.p, s, prec, (term(self) + term(o)) % m)
    }

    fn neg_ref(&self) -> Qp {
        if self.is_zero() {
            return self.clone();
        }
        let m = pw(self.p, self.prec - self.shift);
        Qp {
            unit: &m - &self.unit,
            ..self.clone()
        }
    }

    fn mul_ref(&self, o: &Qp) -> Qp {
        assert_eq!(self.p, o.p, "p-adic values for different primes cannot be combined");
        let prec = (self.shift + o.prec).min(o.shift + self.prec);
        let shift = self.shift + o.shift;
        if self.is_zero() || o.is_zero() {
            return Qp::zero(self.p, prec.min(EXACT_ZERO));
        }
        Qp::make(self.p, shift, prec, &self.unit * &o.unit)
    }
}

impl fmt::Debug for Qp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "O({}^{})", self.p, self.prec)
        } else {
            write!(
                f,
                "{}*{}^{} + O({}^{})",
                self.unit, self.p, self.shift, self.p, self.prec
            )
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Qp> for &Qp {
            type Output = Qp;
            fn $m(self, o: &Qp) -> Qp {
                $body(self, o)
            }
        }
        impl $tr<Qp> for Qp {
            type Output = Qp;
            fn $m(self, o: Qp) -> Qp {
                $body(&self, &o)
            }
        }
        impl $tr<&Qp> for Qp {
            type Output = Qp;
            fn $m(self, o: &Qp) -> Qp {
                $body(&self, o)
            }
        }
        impl $tr<Qp> for &Qp {
            type Output = Qp;
            fn $m(self, o: Qp) -> Qp {
                $body(self, &o)
            }
        }
        impl $tr<i64> for Qp {
            type Output = Qp;
            fn $m(self, o: i64) -> Qp {
                $body(&self, &Qp::int(self.p, o))
            }
        }
        impl $tr<i64> for &Qp {
            type Output = Qp;
            fn $m(self, o: i64) -> Qp {
                $body(self, &Qp::int(self.p, o))
            }
        }
        impl $tr<Qp> for i64 {
            type Output = Qp;
            fn $m(self, o: Qp) -> Qp {
                $body(&Qp::int(o.p, self), &o)
            }
        }
        impl $tr<&Qp> for i64 {
            type Output = Qp;
            fn $m(self, o: &Qp) -> Qp {
                $body(&Qp::int(o.p, self), o)
            }
        }
    };
}

binop!(Add, add, |a: &Qp, b: &Qp| a.add_ref(b));
binop!(Sub, sub, |a: &Qp, b: &Qp| a.add_ref(&b.neg_ref()));
binop!(Mul, mul, |a: &Qp, b: &Qp| a.mul_ref(b));

impl Neg for Qp {
    type Output = Qp;
    fn neg(self) -> Qp {
        self.neg_ref()
    }
}

impl Neg for &Qp {
    type Output = Qp;
    fn neg(self) -> Qp {
        self.neg_ref()
    }
}

/// Division by a nonzero integer constant.
impl Div<i64> for Qp {
    type Output = Qp;
    fn div(self, d: i64) -> Qp {
        &self / d
    }
}

impl Div<i64> for &Qp {
    type Output = Qp;
    fn div(self, d: i64) -> Qp {
        assert!(d != 0, "division by zero");
        self.mul_ref(&Qp::rat(self.p, 1, d))
    }
}

impl From<&Qp> for Rational {
    fn from(q: &Qp) -> Rational {
        q.to_rational()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, valuation};
    use proptest::prelude::*;

    fn close(q: &Qp, r: &Rational) -> bool {
        let d = r - q.to_rational();
        d.is_zero() || valuation(&d, q.p()).unwrap() >= q.precision() as i64
    }

    #[test]
    fn precision_rules() {
        let p = 7;
        let a = Qp::from_residue(p, &BigUint::from(3u32), 4);
        let b = Qp::rat(p, 1, 7);
        let ab = &a * &b;
        assert_eq!(ab.valuation(), Some(-1));
        assert_eq!(ab.precision(), 3);
        let c = Qp::from_residue(p, &BigUint::from(49u32), 4);
        assert_eq!((&c * &b).precision(), 3);
        assert_eq!((a.clone() + c.clone()).precision(), 4);
        assert_eq!((&c * &c).precision(), 6);
        assert!(matches!(b.residue(1), Err(Error::DenominatorDivisible { .. })));
        assert!(matches!(ab.digit(3), Err(Error::InsufficientPrecision(_))));
        assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn digits_of_half() {
        let h = Qp::rat(5, 1, 2);
        assert_eq!(
            (0..4).map(|i| h.digit(i).unwrap()).collect::<Vec<_>>(),
            vec![3, 2, 2, 2]
        );
        let m = Qp::rat(5, -1, 2);
        assert_eq!(m.digit(1).unwrap(), 2);
        assert_eq!(Qp::int(5, 17).digit(1).unwrap(), 3);
    }

    #[test]
    fn inverse_and_pole() {
        let p = 11;
        let x = Qp::from_rational(p, &rat(22, 3), 5);
        let y = x.inv().unwrap();
        assert!(close(&y, &rat(3, 22)));
        assert_eq!((x * y).residue(4).unwrap(), BigUint::from(1u32));
        assert!(Qp::zero(p, 3).inv().is_err());
    }

    proptest! {
        #[test]
        fn field_ops_track_rationals(
            n1 in -5000i64..5000, d1 in 1i64..500, n2 in -5000i64..5000, d2 in 1i64..500,
            pi in 0usize..4,
        ) {
            let p = [3u64, 5, 7, 11][pi];
            let (r1, r2) = (rat(n1, d1), rat(n2, d2));
            let (q1, q2) = (Qp::from_rational(p, &r1, 6), Qp::from_rational(p, &r2, 6));
            prop_assert!(close(&(&q1 + &q2), &(&r1 + &r2)));
            prop_assert!(close(&(&q1 - &q2), &(&r1 - &r2)));
            prop_assert!(close(&(&q1 * &q2), &(&r1 * &r2)));
            if !q2.is_zero() {
                prop_assert!(close(&(&q1 * q2.inv().unwrap()), &(&r1 / &r2)));
            }
        }
    }
}
