use super::{appendix_terms, stirling_formula, Bern};
use crate::error::{Error, Result};
use crate::padic::Qp;
use crate::sequences::PrimeContext;

/// `A*_k` mod `p^3` for `1 <= k <= p-1`.
pub fn mhs_mod_p3(t: &Bern, ag: u64, k: usize) -> Qp {
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let p2 = t.pp(2);
    let ag = ag as i64;
    let b = |i: usize| t.b(i);
    if k % 2 == 1 && k + 4 <= p {
        t.rat(k as i64 + 1, 2) * &p2 * b(p - 2 - k)
    } else if k == p - 2 {
        t.rat(pi, 2) - &p2 + t.rat(ag, 2) * &p2
    } else if k % 2 == 0 && k + 5 <= p {
        pi * (2 * b(p - 1 - k) - b(2 * (p - 1) - k)) + &p2 / 2 * t.tcb(p + 1 - k, p - 3, 2 * (p - 1) - k)
    } else if k == p - 3 {
        t.rat(pi, 12) - t.rat(11, 24) * &p2 + t.rat(ag, 12) * &p2
    } else {
        inverse_factorial_mod_p3(t)
    }
}

/// `1/(p-1)!` mod `p^3`.
pub fn inverse_factorial_mod_p3(t: &Bern) -> Qp {
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let pb1 = pi * t.b(p - 1);
    3 * (&pb1 - 1) - pi * t.b(2 * (p - 1)) - &pb1 * &pb1 / 2
}

/// Even `A*_{2n}` mod `p^4` for `4 <= 2n <= p-7`, through `A_{p-1-2n}`.
pub fn mhs_via_stirling(ctx: &PrimeContext, k: usize) -> Result<Qp> {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let w = ctx.w();
    let a = stirling_formula(t, p - 1 - k, 4)?;
    Ok(-a + t.pp(2) * &w * (1 + pi * &w) * t.b(p - 1 - k) - t.pp(3) * &w / 2 * t.cb(p - 1 - k))
}

/// `A*_2` mod `p^4`.
pub fn mhs_2(ctx: &PrimeContext) -> Result<Qp> {
    let t = ctx.terms();
    let p = t.p() as usize;
    let a = stirling_formula(t, p - 3, 4)?;
    Ok(-a + t.pp(2) * ctx.w() * (2 * t.b(p - 3) - t.b(2 * p - 4)))
}

/// `A*_{p-5}` mod `p^4`.
pub fn mhs_p_minus_5(ctx: &PrimeContext) -> Qp {
    let t = ctx.terms();
    let pi = t.p() as i64;
    let ag = ctx.agoh_giuga() as i64;
    let p2 = t.pp(2);
    (t.rat(5, 4) * t.pp(3) - t.rat(pi, 15) - &p2 / 36) / 8
        + pi * ctx.w() / 120 * (t.rat(7, 12) * &p2 - pi * (1 + pi * ag))
}

/// `A*_{p-3}` mod `p^4`, closed form.
pub fn mhs_p_minus_3(ctx: &PrimeContext) -> Qp {
    let t = ctx.terms();
    let pi = t.p() as i64;
    let ag = ctx.agoh_giuga() as i64;
    let p2 = t.pp(2);
    (t.int(pi) * (2 * pi - 1) * (5 * pi - 2) + pi * ctx.w() * (2 * pi - 11 * &p2 + 2 * ag * &p2)) / 24
}

/// `A*_{p-1}` mod `p^4` from the Wilson quotient.
pub fn mhs_p_minus_1(ctx: &PrimeContext) -> Qp {
    let t = ctx.terms();
    let pi = t.p() as i64;
    -1 + pi * ctx.w() * inverse_factorial_mod_p3(t)
}

/// The three sums over `r = 4..=top` shared by the even `A*` expansions:
/// `(coef(r) p^2 (b_{hi(r)} - 2 b_{lo(r)}) b_{p-1-r}, coef(r) p^3/2 CB(p-1-r) b_{lo(r)},
///   coef(r) b_{lo(r)} b_{p-1-r})`.
fn shared_sums(
    t: &Bern,
    top: usize,
    coef: impl Fn(usize) -> i64,
    hi: impl Fn(usize) -> usize,
    lo: impl Fn(usize) -> usize,
) -> (Qp, Qp, Qp) {
    let p = t.p() as usize;
    let b = |i: usize| t.b(i);
    let mut s1 = t.zero();
    let mut s2 = t.zero();
    let mut s3 = t.zero();
    for r in 4..=top {
        let c = coef(r);
        s1 = s1 + c * (b(hi(r)) - 2 * b(lo(r))) * b(p - 1 - r);
        s2 = s2 + c * t.cb(p - 1 - r) * b(lo(r));
        s3 = s3 + c * b(lo(r)) * b(p - 1 - r);
    }
    (t.pp(2) * s1, t.pp(3) / 2 * s2, s3)
}

/// Even `A*_{2n}` mod `p^4` for `2 <= 2n <= p-5`, expanded form.
pub fn mhs_expanded(ctx: &PrimeContext, k: usize) -> Qp {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let kk = k as i64;
    let b = |i: usize| t.b(i);
    let (s1, s2, s3) = shared_sums(
        t,
        k.saturating_sub(2),
        |r| kk - r as i64,
        |r| 2 * (p - 1) - k + r,
        |r| p - 1 - k + r,
    );
    let r = -kk * pi * (b(3 * p - 3 - k) - 3 * b(2 * p - 2 - k) + 3 * b(p - 1 - k))
        - (kk + 2) * (kk + 1) * kk / 6 * t.pp(3) * b(p - 3 - k)
        + (kk - 2) * t.pp(2) * (2 * b(p - 3) - b(2 * p - 4)) * (b(2 * p - k) - 2 * b(p + 1 - k))
        + s1
        + s2
        - t.pp(3) * ctx.w() * s3;
    -r / kk
}

/// `b_i + B_i`, with the index-0 value taken as 0.
fn bb(t: &Bern, i: usize) -> Qp {
    if i == 0 {
        t.zero()
    } else {
        t.b(i) + t.big(i)
    }
}

/// `1/a^i` for `a` in `1..p` and `i <= imax`.
fn inverse_powers(t: &Bern, imax: usize) -> Vec<Vec<Qp>> {
    let p = t.p();
    (0..p)
        .map(|a| {
            if a == 0 {
                return Vec::new();
            }
            let inv = t.rat(1, a as i64);
            let mut row = Vec::with_capacity(imax + 1);
            row.push(t.int(1));
            for i in 1..=imax {
                let next = &row[i - 1] * &inv;
                row.push(next);
            }
            row
        })
        .collect()
}

/// Even `A*_{2n}` mod `p^4` for `2 <= 2n <= p-5`, through triple convolutions
/// and Fermat quotients.
pub fn mhs_fermat(ctx: &PrimeContext, k: usize) -> Qp {
    mhs_fermat_batch(ctx, &[k]).pop().expect("one value")
}

/// [`mhs_fermat`] for several `k`, sharing the inverse-power table.
pub fn mhs_fermat_batch(ctx: &PrimeContext, ks: &[usize]) -> Vec<Qp> {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let b = |i: usize| t.b(i);
    let inv = inverse_powers(t, p);
    let p2 = t.pp(2);
    let p3 = t.pp(3);
    let w = ctx.w();
    let tail2 = &p3 / 2 * (t.tcb(4, p - 3, p + 1) + 2 * b(2) * b(p - 1)) - &p2 * b(2);
    let tail4 = &p3 / 2 * (t.tcb(6, p - 3, p + 3) + 2 * b(4) * b(p - 1) + b(2) * b(2)) - &p2 * b(4);
    let cbp = t.cb(p - 1);
    ks.iter()
        .map(|&k| {
            let n = (k / 2) as i64;
            let kk = k as i64;
            let total = 2 * (p - 1) - k;
            let mut inner = t.zero();
            for a in 1..p {
                let q = ctx.fermat_quotient(a as u64) as i64;
                if q == 0 {
                    continue;
                }
                let row = &inv[a];
                let mut s = t.zero();
                for i in (p + 1 - k..=p - 5).filter(|i| i % 2 == 0) {
                    s = s + ((2 * n + 1) * b(i) + t.big(i)) * &row[i];
                }
                for i in (2..=(p - 7).saturating_sub(k)).filter(|i| i % 2 == 0) {
                    s = s + bb(t, i) * &row[i];
                }
                inner = inner + q * q * &row[k] * s;
            }
            let r = &p3 / 2
                * (t.rat(kk - 1, 3) * (t.bbb(total) - t.bbb(p - 1 - k)) - t.rat(kk, 3) * t.bbb(p - 1 - k))
                - &p3 / 2 * inner
                - kk * pi * (b(3 * p - 3 - k) - 3 * b(2 * p - 2 - k) + 3 * b(p - 1 - k))
                - (kk + 2) * (kk + 1) * kk / 6 * &p3 * b(p - 3 - k)
                + 2 * (n - 1) * &p2 * b(p - 3) * (b(2 * p - k) - b(p + 1 - k))
                - &p2 * n * (1 + pi * &w) * t.tcb(p + 1 - k, p - 3, total)
                - t.rat(kk - 1, 2) * &p2 * t.cb(p - 1 - k)
                + &p3 / 2 * &cbp * bb(t, p - 1 - k)
                + &tail2 * bb(t, p - 3 - k)
                + &tail4 * bb(t, p - 5 - k);
            -r / kk
        })
        .collect()
}

/// The `p^4` expansion shared by the two `A*_{p-3}` forms.
fn p3_common(ctx: &PrimeContext) -> Qp {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let b = |i: usize| t.b(i);
    let p2 = t.pp(2);
    super::harmonic::harmonic_p_minus_3(t)
        + &p2 * (pi - 5) * (b(p + 3) - 2 * b(4)) * (2 * b(p - 3) - b(2 * p - 4))
        + 2 * pi * (b(2 * p - 4) - 2 * b(p - 3)) * r10_pair(t)
}

/// `p (2 b_4 - b_{p+3}) + (7/720 p^2 + 2p b_{p+3} + 2p b_4 pB_{p-1}) / 2`.
fn r10_pair(t: &Bern) -> Qp {
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let b = |i: usize| t.b(i);
    pi * (2 * b(4) - b(p + 3))
        + (t.rat(7, 720) * t.pp(2) + 2 * pi * b(p + 3) + 2 * pi * b(4) * t.pb(p - 1)) / 2
}

/// `A*_{p-3}` mod `p^4`, expanded form.
pub fn mhs_p_minus_3_expanded(ctx: &PrimeContext) -> Qp {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let (s1, s2, s3) = shared_sums(t, p - 7, |r| pi - 3 - r as i64, |r| p + 1 + r, |r| r + 2);
    -(p3_common(ctx) + s1 + s2 - t.pp(3) * ctx.w() * s3) / (pi - 3)
}

/// The `H_{p-1}` part of the `A*_{p-1}` expansions.
fn p1_tail(ctx: &PrimeContext) -> Qp {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let b = |i: usize| t.b(i);
    super::harmonic::harmonic_p_minus_1(t)
        + pi * (2 * b(p - 3) - b(2 * p - 4)) * ((t.rat(1, 2) - 3 * t.big(p + 1)) * pi - t.rat(4, 3) * t.pp(2))
}

fn p1_mid(ctx: &PrimeContext) -> Qp {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let ag = ctx.agoh_giuga() as i64;
    let b = |i: usize| t.b(i);
    let p2 = t.pp(2);
    2 * pi * (b(2 * p - 4) - 2 * b(p - 3)) * (t.rat(pi, 12) - t.rat(11, 24) * &p2 + t.rat(ag, 12) * &p2)
        + 4 * pi * (b(2 * p - 6) - 2 * b(p - 5)) * r10_pair(t)
}

/// `A*_{p-1}` mod `p^4`, expanded form.
pub fn mhs_p_minus_1_expanded(ctx: &PrimeContext) -> Qp {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let (s1, s2, s3) = shared_sums(t, p - 7, |r| pi - 1 - r as i64, |r| p - 1 + r, |r| r);
    -(p1_tail(ctx) + t.pp(3) / 2 * t.b(p - 3) + p1_mid(ctx) + s1 + s2 - t.pp(3) * ctx.w() * s3)
        / (pi - 1)
}

/// `sum_a c(a) sum_{i=lo..=hi} f(i) / a^i`.
fn fermat_sum(ctx: &PrimeContext, lo: usize, hi: usize, weight: impl Fn(u64) -> Qp, f: impl Fn(usize) -> Qp) -> Qp {
    let t = ctx.terms();
    let p = t.p();
    let terms: Vec<(usize, Qp)> = (lo..=hi).filter(|i| i % 2 == 0).map(|i| (i, f(i))).collect();
    let mut acc = t.zero();
    for a in 1..p {
        let inv = t.rat(1, a as i64);
        let mut s = t.zero();
        let mut pw = t.int(1);
        let mut at = 0;
        for (i, v) in &terms {
            while at < *i {
                pw = pw * &inv;
                at += 1;
            }
            s = s + v * &pw;
        }
        acc = acc + weight(a) * s;
    }
    acc
}

/// `A*_{p-3}` mod `p^4` through `BBB(p+1)`.
pub fn mhs_p_minus_3_convolution(ctx: &PrimeContext) -> Qp {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let b = |i: usize| t.b(i);
    let p3 = t.pp(3);
    let sum = fermat_sum(
        ctx,
        6,
        p - 5,
        |a| {
            let aq = (a * ctx.fermat_quotient(a)) as i64;
            t.int(aq * aq)
        },
        |i| t.big(i) - 2 * b(i),
    );
    -(p3_common(ctx)
        - &p3 / 2
            * (t.rat(4, 3) * t.bbb(p + 1)
                - t.cb(p - 1) * bb(t, 2)
                - t.cb(p - 3) * bb(t, 4)
                - b(2) * b(2) * bb(t, p - 3))
        + t.pp(2) * (1 + pi * ctx.w()) * t.rat(pi - 3, 2) * (2 * b(4) * b(p - 3) - t.tcb(4, p - 3, p + 1))
        - &p3 / 2 * sum)
        / (pi - 3)
}

/// `A*_{p-1}` mod `p^4` through `BBB(p-1)` and digits of `CB(p-1)`.
pub fn mhs_p_minus_1_convolution(ctx: &PrimeContext) -> Result<Qp> {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let b = |i: usize| t.b(i);
    let p2 = t.pp(2);
    let p3 = t.pp(3);
    let w = ctx.w();
    let sum = fermat_sum(
        ctx,
        6,
        p - 5,
        |a| {
            let q = ctx.fermat_quotient(a) as i64;
            t.int(q * q)
        },
        |i| t.big(i),
    );
    let x = 2 * pi * b(2 * (p - 1)) - &p2 * b(p - 1) * b(p - 1);
    let r = -&p3 / 3 * t.bbb(p - 1)
        + &p3 / 4 * (&w * b(p - 3) + (b(2 * p - 4) - b(p - 3)).dig(1)?)
        - &p3 / 72 * b(p - 5)
        + t.rat(7, 12) * &p3 * b(p - 3)
        + &p3 / 2 * t.cb(p - 1).dig(1)?
        + t.rat(1 - pi, 2) * (1 + pi * &w) * &p2 * x.dig(2)?
        - &p2 / 6 * (1 + pi * &w) * (b(p - 3) / 2 + b(p - 5) / 5)
        - &p3 / 2 * sum
        + p1_tail(ctx)
        + p1_mid(ctx);
    Ok(-r / (pi - 1))
}

/// `-p^3/2 sum_a q_a^2 sum_{i=2}^{p-5} B_i / a^i`, the Fermat-quotient sum
/// whose closed form involves the appendix term `O`.
pub fn fermat_bernoulli_sum(ctx: &PrimeContext, t: &Bern) -> Qp {
    let p = t.p() as usize;
    let sum = {
        let mut acc = t.zero();
        for a in 1..p as u64 {
            let q = ctx.fermat_quotient(a) as i64;
            let inv = t.rat(1, a as i64);
            let mut pw = t.int(1);
            let mut s = t.zero();
            for i in 1..=p - 5 {
                pw = pw * &inv;
                if i >= 2 && i % 2 == 0 {
                    s = s + t.big(i) * &pw;
                }
            }
            acc = acc + q * q * s;
        }
        acc
    };
    -t.pp(3) / 2 * sum
}

/// Closed form of [`fermat_bernoulli_sum`].
pub fn fermat_bernoulli_sum_formula(ctx: &PrimeContext) -> Result<Qp> {
    let t = ctx.terms();
    let o = appendix_terms(ctx)?;
    let p3 = t.pp(3);
    Ok(&p3 / 2 * t.cb(t.p() as usize - 1).dig(1)? + &p3 / 2 * o.o)
}

/// `A*_{p-1}` mod `p^4` through the appendix terms.
pub fn mhs_p_minus_1_appendix(ctx: &PrimeContext) -> Result<Qp> {
    let t = ctx.terms();
    let p = t.p() as usize;
    let o = appendix_terms(ctx)?;
    let p3 = t.pp(3);
    Ok(-&p3 / 3 * t.bbb(p - 1) + &p3 * t.cb(p - 1).dig(1)? + &p3 / 2 * o.o + o.o_prime)
}

/// Which closed form to use for `A*_k` mod `p^4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MhsVariant {
    /// Through `A_{p-1-k}` and the Wilson quotient (`4 <= k <= p-7`, `k = 2`).
    Stirling,
    /// Closed forms for `k` in `{p-5, p-3, p-1}`.
    Closed,
    /// Expanded sums (`2 <= k <= p-5`, `k` in `{p-3, p-1}`).
    Expanded,
    /// Triple convolutions and Fermat quotients (`2 <= k <= p-5`, `k` in `{p-3, p-1}`).
    Convolution,
}

/// `A*_k mod p^e`; `e <= 3` uses the mod-`p^3` forms for any `k`.
pub fn mhs_formula(ctx: &PrimeContext, k: usize, e: u32, variant: MhsVariant) -> Result<Qp> {
    let t = ctx.terms();
    let p = t.p() as usize;
    let unsupported = || Error::Unsupported {
        what: "mhs_formula",
        k: k as i64,
        e,
    };
    if k == 0 || k >= p {
        return Err(unsupported());
    }
    if e <= 3 {
        return Ok(mhs_mod_p3(t, ctx.agoh_giuga(), k));
    }
    if e > 4 || k % 2 == 1 {
        return Err(unsupported());
    }
    use MhsVariant::*;
    match variant {
        Stirling if k == 2 => mhs_2(ctx),
        Stirling if k >= 4 && k + 7 <= p => mhs_via_stirling(ctx, k),
        Closed if k + 5 == p => Ok(mhs_p_minus_5(ctx)),
        Closed if k + 3 == p => Ok(mhs_p_minus_3(ctx)),
        Closed if k + 1 == p => Ok(mhs_p_minus_1(ctx)),
        Expanded if k + 5 <= p => Ok(mhs_expanded(ctx, k)),
        Expanded if k + 3 == p => Ok(mhs_p_minus_3_expanded(ctx)),
        Expanded if k + 1 == p => Ok(mhs_p_minus_1_expanded(ctx)),
        Convolution if k + 5 <= p => Ok(mhs_fermat(ctx, k)),
        Convolution if k + 3 == p => Ok(mhs_p_minus_3_convolution(ctx)),
        Convolution if k + 1 == p => mhs_p_minus_1_convolution(ctx),
        _ => Err(unsupported()),
    }
}
