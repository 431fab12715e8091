//! Closed forms for digits of convolutions and related identities.

use super::appendix::di;
use super::{stirling_formula, Bern};
use crate::error::Result;
use crate::padic::Qp;
use crate::sequences::PrimeContext;

/// `BBB(p-3) mod p` from digits of divided Bernoulli numbers.
pub fn triple_p_minus_3(ctx: &PrimeContext) -> Result<Qp> {
    let t = ctx.terms();
    let p = t.p();
    let pu = p as usize;
    let b = |i: usize| t.b(i);
    let (w0, w1) = ctx.wilson_digits();
    let (w0, w1) = (w0 as i64, w1 as i64);
    let q = |n: i64| Qp::int(p, n);
    let dq = |x: &Qp, i: i32| x.digit(i).map(|v| v as i64);
    let dn = |n: i64, i: i32| di(p, &q(n), i);

    let e1 = dq(&(b(pu - 3) - b(2 * pu - 4)), 1)?;
    let e2 = dq(&(b(2 * pu - 4) - b(pu - 3)), 1)?;
    let inner = dq(&(2 * e2 + 2 * w0 * b(pu - 3)), 0)?;
    let m6 = dq(&(-6 * b(pu - 3)), 0)?;
    let r = 3 * t.cb(pu - 3).dig(1)? - t.rat(11, 4) * b(pu - 5)
        + 6 * dq(&(b(3 * pu - 5) - 3 * b(2 * pu - 4) + 2 * b(pu - 3)), 2)?
        + dn(6 * e1, 1)?
        + dn(3 * inner, 1)?
        + w1 * m6
        + w0 * dq(&(6 * (b(2 * pu - 4) - 2 * b(pu - 3))), 1)?
        + dn(w0 * m6, 1)?
        + dn(dn(6 * e1, 0)? + dq(&(-6 * w0 * b(pu - 3)), 0)? + dn(3 * inner, 0)?, 1)?;
    Ok(r)
}

/// `BBB(p-5) mod p` from digits of divided Bernoulli numbers.
pub fn triple_p_minus_5(ctx: &PrimeContext) -> Result<Qp> {
    let t = ctx.terms();
    let p = t.p();
    let pu = p as usize;
    let b = |i: usize| t.b(i);
    let (w0, w1) = ctx.wilson_digits();
    let (w0, w1) = (w0 as i64, w1 as i64);
    let q = |n: i64| Qp::int(p, n);
    let dq = |x: &Qp, i: i32| x.digit(i).map(|v| v as i64);
    let dn = |n: i64, i: i32| di(p, &q(n), i);

    let inner = 2 * w0 * b(pu - 5) + 2 * dq(&(b(2 * pu - 6) - b(pu - 5)), 1)? - b(pu - 3) * b(pu - 3);
    let i0 = dq(&inner, 0)?;
    let s0 = dq(&b(pu - 3), 0)?;
    let f1 = dq(&(b(pu - 5) - b(2 * pu - 6)), 1)?;
    let m6 = |i| dq(&(-6 * b(pu - 5)), i);
    let r = 3 * t.cb(pu - 5).dig(1)? - t.rat(15, 4) * b(pu - 7)
        + dn(3 * s0 * s0, 1)?
        + 6 * b(pu - 3) * dq(&(2 * b(pu - 3) - b(2 * pu - 4)), 1)?
        + 6 * dq(&(b(3 * pu - 7) - 3 * b(2 * pu - 6) + 2 * b(pu - 5)), 2)?
        + dn(6 * f1, 1)?
        + w0 * m6(1)?
        + w1 * m6(0)?
        + dn(w0 * m6(0)?, 1)?
        + dq(&(-6 * w0 * w0 * b(pu - 5)), 0)?
        + dn(3 * w0 * i0, 0)?
        + dn(3 * i0, 1)?
        + dn(
            dn(3 * s0 * s0, 0)? + dn(6 * f1, 0)? + dn(-6 * w0 * dq(&b(pu - 5), 0)?, 0)? + dn(3 * i0, 0)?,
            1,
        )?;
    Ok(r)
}

/// `p^2/2 TCB(p+1-2n, p-3)` as a full convolution, mod `p^3`.
pub fn truncated_convolution(ctx: &PrimeContext, k: usize) -> Qp {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let ag = ctx.agoh_giuga() as i64;
    -t.pp(2) / 2 * t.cb(p - 1 - k) + pi * (t.b(2 * (p - 1) - k) - t.b(p - 1 - k))
        + t.pp(2) * (ag - 1) * t.b(p - 1 - k)
}

/// `p^2 sum_{i=4}^{p-3} b_i b_{p+1-i}` mod `p^3`.
pub fn convolution_p_plus_1(t: &Bern) -> Qp {
    let p = t.p() as usize;
    let pi = t.p() as i64;
    2 * pi * t.b(p + 1) + t.pp(2) * t.b(2) + 2 * pi * t.b(2) * t.pb(p - 1)
}

/// `p^2 sum_{i=6}^{p-3} b_i b_{p+3-i}` mod `p^3`.
pub fn convolution_p_plus_3(t: &Bern) -> Qp {
    let p = t.p() as usize;
    let pi = t.p() as i64;
    t.rat(7, 720) * t.pp(2) + 2 * pi * t.b(p + 3) + 2 * pi * t.b(4) * t.pb(p - 1)
}

/// `p^2 CB(p-1)` mod `p^3`.
pub fn full_convolution_p_minus_1(t: &Bern) -> Qp {
    let p = t.p() as usize;
    let pi = t.p() as i64;
    2 * pi * t.b(2 * (p - 1)) - t.pp(2) * t.b(p - 1) * t.b(p - 1)
}

/// `CB(p-3) mod p`.
pub fn full_convolution_p_minus_3(ctx: &PrimeContext) -> Result<Qp> {
    let t = ctx.terms();
    let p = t.p() as usize;
    Ok(2 * ctx.w() * t.b(p - 3) + 2 * (t.b(2 * p - 4) - t.b(p - 3)).dig(1)?)
}

/// `CB(p-5) mod p`.
pub fn full_convolution_p_minus_5(ctx: &PrimeContext) -> Result<Qp> {
    let t = ctx.terms();
    let p = t.p() as usize;
    Ok(2 * ctx.w() * t.b(p - 5) + 2 * (t.b(2 * (p - 3)) - t.b(p - 5)).dig(1)?
        - t.b(p - 3) * t.b(p - 3))
}

/// `-p^3/3 BBB(p-1) + p^3 (CB(p-1))_1` mod `p^4`, through `A_{p-1}`.
pub fn triple_p_minus_1_combination(ctx: &PrimeContext) -> Result<Qp> {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let a = stirling_formula(t, p - 1, 4)?;
    Ok(2 * a - t.pp(2) * t.cb(p - 1).dig(0)? + 2 * pi * t.b(p - 1) + t.rat(5, 4) * t.pp(3) * t.b(p - 3))
}

/// `p^3 BBB(p-1)` mod `p^4`, through `A_{p-1}`.
pub fn triple_p_minus_1(ctx: &PrimeContext) -> Result<Qp> {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let cb = t.cb(p - 1);
    let a = stirling_formula(t, p - 1, 4)?;
    Ok(3 * cb.dig(1)? * t.pp(3) - 6 * a + 3 * t.pp(2) * cb.dig(0)? - 6 * pi * t.b(p - 1)
        - t.rat(15, 4) * t.pp(3) * t.b(p - 3))
}
