use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::cases::Cases;
use crate::arith::{binomial, harmonic_number, rat, Rational};
use crate::bernoulli::{bernoulli_exact, von_staudt_denominator};
use crate::error::Result;
use crate::formulas::*;
use crate::padic::{digits, residue_at, wilson_quotient_formula, Qp};
use crate::sequences::{harmonic, newton_residuals, sum_powers, PrimeContext, ORACLE_LIMIT};

/// Bernoulli table shape a check needs: precision `e` and `nmax = multiple * (p-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Needs {
    pub precision: u32,
    pub nmax_multiple: usize,
}

impl Needs {
    pub const FULL: Needs = Needs {
        precision: 5,
        nmax_multiple: 4,
    };
    pub const WILSON: Needs = Needs {
        precision: 4,
        nmax_multiple: 3,
    };

    pub fn nmax(self, p: u64) -> usize {
        self.nmax_multiple * (p as usize - 1)
    }

    pub fn max(self, other: Needs) -> Needs {
        Needs {
            precision: self.precision.max(other.precision),
            nmax_multiple: self.nmax_multiple.max(other.nmax_multiple),
        }
    }
}

#[derive(Clone, Copy)]
pub(crate) enum Eval {
    /// Needs only `p`; runs below the table's lower bound of 7.
    Plain(fn(u64, &mut Cases) -> Result<()>),
    Context(Needs, fn(&PrimeContext, &mut Cases) -> Result<()>),
    /// An identity that does not involve a prime.
    Free(fn(&mut Cases) -> Result<()>),
}

/// A registered congruence: an evaluator that produces both sides, the
/// modulus exponent they are compared at, and the smallest prime it covers.
pub struct CongruenceCheck {
    pub id: &'static str,
    pub summary: &'static str,
    pub min_prime: u64,
    /// `None` for exact identities.
    pub modulus_exponent: Option<u32>,
    pub(crate) eval: Eval,
}

impl CongruenceCheck {
    pub fn is_prime_free(&self) -> bool {
        matches!(self.eval, Eval::Free(_))
    }

    /// Table shape for context-based checks.
    pub fn needs(&self) -> Option<Needs> {
        match self.eval {
            Eval::Context(n, _) => Some(n),
            _ => None,
        }
    }
}

type CtxFn = fn(&PrimeContext, &mut Cases) -> Result<()>;

const fn ctx(id: &'static str, summary: &'static str, min_prime: u64, e: u32, f: CtxFn) -> CongruenceCheck {
    CongruenceCheck {
        id,
        summary,
        min_prime,
        modulus_exponent: Some(e),
        eval: Eval::Context(Needs::FULL, f),
    }
}

const fn wilson(id: &'static str, summary: &'static str, min_prime: u64, e: u32, f: CtxFn) -> CongruenceCheck {
    CongruenceCheck {
        id,
        summary,
        min_prime,
        modulus_exponent: Some(e),
        eval: Eval::Context(Needs::WILSON, f),
    }
}

const fn plain(
    id: &'static str,
    summary: &'static str,
    min_prime: u64,
    e: Option<u32>,
    f: fn(u64, &mut Cases) -> Result<()>,
) -> CongruenceCheck {
    CongruenceCheck {
        id,
        summary,
        min_prime,
        modulus_exponent: e,
        eval: Eval::Plain(f),
    }
}

const fn free(id: &'static str, summary: &'static str, f: fn(&mut Cases) -> Result<()>) -> CongruenceCheck {
    CongruenceCheck {
        id,
        summary,
        min_prime: 2,
        modulus_exponent: None,
        eval: Eval::Free(f),
    }
}

/// Every registered check, in report order.
pub static REGISTRY: &[CongruenceCheck] = &[
    plain("NEWTON", "Newton's identities for 1..p-1 (exact) and their reciprocals (mod p^4)", 5, Some(4), newton),
    plain("R1", "Newton's identity for A_k and S_k, exact", 5, None, newton_exact),
    ctx("R2", "p B_k mod p is -1 exactly when p-1 divides k", 7, 1, table_von_staudt),
    free("VSC", "denominator of B_n is the product of primes q with q-1 | n, n <= 40", von_staudt),
    ctx("R3", "S_k from Bernoulli numbers mod p^4, 2 <= k <= 3(p-1)", 7, 4, sums_of_powers),
    plain("R4.wolstenholme1", "H_1 = 0 mod p^2", 5, Some(2), wolstenholme1),
    plain("R4.wolstenholme2", "H_2 = 0 mod p", 5, Some(1), wolstenholme2),
    ctx("R5", "H_k mod p^2", 7, 2, harmonic_p2),
    ctx("R6", "H_k mod p^3", 7, 3, harmonic_p3),
    ctx("R7", "H_k mod p^4 for k <= p-5", 7, 4, harmonic_p4),
    ctx("R8", "A_k mod p^3", 7, 3, stirling_p3),
    ctx("R9", "A*_k mod p^3", 7, 3, mhs_p3),
    ctx("R10.i", "truncated convolution p^2/2 TCB(p+1-2n, p-3) mod p^3", 7, 3, truncated),
    ctx("R10.ii", "p^2 sum b_i b_{p+1-i} mod p^3", 7, 3, conv_p_plus_1),
    ctx("R10.iii", "p^2 sum b_i b_{p+3-i} mod p^3", 11, 3, conv_p_plus_3),
    ctx("R11.1", "p^2 CB(p-1) mod p^3", 7, 3, full_conv_1),
    ctx("R11.2", "CB(p-3) mod p", 7, 1, full_conv_3),
    ctx("R11.3", "CB(p-5) mod p", 11, 1, full_conv_5),
    ctx("K1", "Kummer congruence mod p", 7, 1, kummer1),
    ctx("K2", "Kummer congruence mod p^2", 7, 2, kummer2),
    ctx("K3", "Kummer congruence mod p^3", 7, 3, kummer3),
    ctx("EM", "b_{p-1+n} - b_n through Fermat quotients mod p^2", 7, 2, ernvall),
    ctx("S2", "p B_{k(p-1)} mod p^2", 7, 2, multiple2),
    ctx("S3", "p B_{k(p-1)} mod p^3", 7, 3, multiple3),
    ctx("S4", "p B_{k(p-1)} mod p^4", 7, 4, multiple4),
    ctx("R15", "1/(p-1)! mod p^3", 7, 3, inverse_factorial),
    ctx("P1.i", "A_{2n} mod p^4, expanded, 6 <= 2n <= p-1", 7, 4, stirling_exp),
    ctx("P1.ii", "A_4 mod p^4", 7, 4, stirling_4),
    ctx("P1.iii", "A_2 mod p^4", 7, 4, stirling_2),
    ctx("T1", "A_{2n} mod p^4 through CB and BBB", 7, 4, stirling_conv),
    ctx("T2.i", "A*_{2n} mod p^4 through A_{p-1-2n}", 7, 4, mhs_stirling),
    ctx("T2.ii", "A*_2 mod p^4", 7, 4, mhs_two),
    ctx("T2.iii", "A*_{p-5} mod p^4", 7, 4, mhs_pm5),
    ctx("T2.iv", "A*_{p-3} mod p^4", 7, 4, mhs_pm3),
    ctx("T2.v", "A*_{p-1} mod p^4", 7, 4, mhs_pm1),
    ctx("P2.i", "A*_{2n} mod p^4, expanded, 2 <= 2n <= p-5", 7, 4, mhs_exp),
    ctx("P2.ii", "A*_{p-3} mod p^4, expanded", 11, 4, mhs_exp_pm3),
    ctx("P2.iii", "A*_{p-1} mod p^4, expanded", 11, 4, mhs_exp_pm1),
    ctx("T3", "A*_{2n} mod p^4 through BBB and Fermat quotients", 7, 4, mhs_fermat_all),
    ctx("T3.R9", "the Fermat-quotient form of A*_{2n} reduces to the mod p^3 form", 7, 3, mhs_fermat_vs_p3),
    ctx("T4", "A*_{p-3} mod p^4 through convolutions", 11, 4, mhs_conv_pm3),
    ctx("T5", "A*_{p-1} mod p^4 through convolutions", 11, 4, mhs_conv_pm1),
    ctx("T6", "Fermat-quotient Bernoulli sum mod p^4", 13, 4, fermat_sum),
    ctx("MT1.i", "BBB(p-3) mod p", 7, 1, triple_3),
    ctx("MT1.ii", "BBB(p-5) mod p", 11, 1, triple_5),
    ctx("MT2.Hp3", "H_{p-3} mod p^4", 7, 4, harmonic_pm3),
    ctx("MT2.Hp1", "H_{p-1} mod p^4", 7, 4, harmonic_pm1),
    wilson("WQ", "first two digits of the Wilson quotient", 7, 2, wilson_quotient),
    wilson("W2", "(p-1)! mod p^2", 7, 2, wilson2),
    wilson("W3", "(p-1)! mod p^3", 7, 3, wilson3),
    wilson("MT3", "(p-1)! mod p^4", 13, 4, wilson4),
    ctx("EQ83", "A*_{p-1} mod p^4 through the appendix terms", 13, 4, mhs_appendix),
    ctx("EQ84", "-p^3/3 BBB(p-1) + p^3 (CB(p-1))_1 mod p^4", 7, 4, triple_combination),
    ctx("EQ89", "(p-1)! mod p^4 through the full appendix term", 13, 4, wilson_appendix),
    ctx("EQ90", "p^3 BBB(p-1) mod p^4", 7, 4, triple_1),
    plain("L1", "C(p-1, k) = (-1)^k (1 - p H_k) mod p^2", 5, Some(2), binomial_harmonic),
    plain("L2", "p-adic expansions of 1/2 and -1/2", 3, Some(4), halves),
    plain("C1", "2 (1/2)_0 = p + 1", 3, Some(2), half_digit0),
    plain("C2", "2 (-1/2)_1 = p - 1", 3, Some(2), minus_half_digit1),
    plain("EQ60", "C(2(p-1), i)_1 = -2 sum (H_k)_0 mod p", 7, Some(1), central_digit),
    plain("EQ70", "C(2(p-1), p-1) = 0 mod p", 5, Some(1), central_p),
    plain("EQ73", "C(2p-2, p-1) = -4p^3 - 2p^2 - p mod p^4", 5, Some(4), central_p4),
    plain("WB", "C(2p-1, p-1) = 1 mod p^3", 5, Some(3), wolstenholme_binomial),
    free("MIKI", "Miki's identity for even 6 <= n <= 40", miki),
];

/// Looks a check up by id.
pub fn find(id: &str) -> Option<&'static CongruenceCheck> {
    REGISTRY.iter().find(|c| c.id == id)
}

fn oracle<'a>(ctx: &'a PrimeContext, c: &mut Cases) -> Option<&'a Bern> {
    match ctx.exact_terms() {
        Ok(x) => Some(x),
        Err(_) => {
            c.skip(format!("exact Bernoulli oracle covers p <= {ORACLE_LIMIT}"));
            None
        }
    }
}

fn evens(lo: usize, hi_exclusive: usize) -> impl Iterator<Item = usize> {
    (lo..hi_exclusive.max(lo)).step_by(2)
}

fn newton(p: u64, c: &mut Cases) -> Result<()> {
    if p > ORACLE_LIMIT {
        c.skip(format!("exact Stirling oracle covers p <= {ORACLE_LIMIT}"));
        return Ok(());
    }
    for (i, (exact, modular)) in newton_residuals(p, 4)?.into_iter().enumerate() {
        let k = i + 1;
        c.exact(format!("exact k={k}"), Rational::from(exact), Rational::zero());
        c.uint(format!("reciprocal k={k}"), modular, BigUint::zero())?;
    }
    Ok(())
}

fn newton_exact(p: u64, c: &mut Cases) -> Result<()> {
    if p > ORACLE_LIMIT {
        c.skip(format!("exact Stirling oracle covers p <= {ORACLE_LIMIT}"));
        return Ok(());
    }
    for (i, (exact, _)) in newton_residuals(p, 1)?.into_iter().enumerate() {
        c.exact(format!("k={}", i + 1), Rational::from(exact), Rational::zero());
    }
    Ok(())
}

fn table_von_staudt(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let p = ctx.p();
    let table = ctx.table();
    for k in 1..=table.nmax() {
        let expect = if k % 2 == 0 && k as u64 % (p - 1) == 0 { p - 1 } else { 0 };
        c.uint(format!("k={k}"), table.raw(k) % p, BigUint::from(expect))?;
    }
    Ok(())
}

fn von_staudt(c: &mut Cases) -> Result<()> {
    for n in evens(2, 41) {
        let denom = bernoulli_exact(n).denom().clone();
        c.exact(
            format!("n={n}"),
            Rational::from(denom),
            Rational::from(BigInt::from(von_staudt_denominator(n as u64))),
        );
    }
    Ok(())
}

fn sums_of_powers(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    let p = ctx.p();
    for k in 2..=3 * (p as usize - 1) {
        c.res(format!("k={k}"), sum_powers(p, k as u64, 4).value(), &sum_powers_formula(x, k))?;
    }
    Ok(())
}

fn wolstenholme1(p: u64, c: &mut Cases) -> Result<()> {
    c.uint("", harmonic(p, 1, 2).value().clone(), BigUint::zero())
}

fn wolstenholme2(p: u64, c: &mut Cases) -> Result<()> {
    c.uint("", harmonic(p, 2, 1).value().clone(), BigUint::zero())
}

fn harmonic_range(
    ctx: &PrimeContext,
    c: &mut Cases,
    ks: impl Iterator<Item = usize>,
    f: fn(&Bern, usize) -> Qp,
) -> Result<()> {
    for k in ks {
        c.res(format!("k={k}"), ctx.harmonic(k), &f(ctx.terms(), k))?;
    }
    Ok(())
}

fn harmonic_p2(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    harmonic_range(ctx, c, 1..ctx.p() as usize, harmonic_mod_p2)
}

fn harmonic_p3(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    harmonic_range(ctx, c, 1..ctx.p() as usize, harmonic_mod_p3)
}

fn harmonic_p4(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    harmonic_range(ctx, c, 1..ctx.p() as usize - 4, harmonic_mod_p4_small)
}

fn stirling_p3(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    for k in 1..ctx.p() as usize {
        c.res(format!("k={k}"), ctx.stirling(k), &stirling_mod_p3(ctx.terms(), k))?;
    }
    Ok(())
}

fn mhs_p3(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    for k in 1..ctx.p() as usize {
        c.res(format!("k={k}"), ctx.mhs(k), &mhs_mod_p3(ctx.terms(), ctx.agoh_giuga(), k))?;
    }
    Ok(())
}

fn truncated(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    let p = ctx.p() as usize;
    for k in evens(4, p - 6) {
        let lhs = x.pp(2) / 2 * x.tcb(p + 1 - k, p - 3, 2 * (p - 1) - k);
        c.qp(format!("2n={k}"), &lhs, &truncated_convolution(ctx, k))?;
    }
    Ok(())
}

fn conv_p_plus_1(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    let p = ctx.p() as usize;
    c.qp("", &(x.pp(2) * x.tcb(4, p - 3, p + 1)), &convolution_p_plus_1(ctx.terms()))
}

fn conv_p_plus_3(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    let p = ctx.p() as usize;
    c.qp("", &(x.pp(2) * x.tcb(6, p - 3, p + 3)), &convolution_p_plus_3(ctx.terms()))
}

fn full_conv_1(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    let p = ctx.p() as usize;
    c.qp("", &(x.pp(2) * x.cb(p - 1)), &full_convolution_p_minus_1(ctx.terms()))
}

fn full_conv_3(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    c.qp("", &x.cb(ctx.p() as usize - 3), &full_convolution_p_minus_3(ctx)?)
}

fn full_conv_5(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    c.qp("", &x.cb(ctx.p() as usize - 5), &full_convolution_p_minus_5(ctx)?)
}

fn kummer(ctx: &PrimeContext, c: &mut Cases, family: KummerFamily) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    let p = ctx.p() as usize;
    for b in evens(2, p - 1) {
        for k in 1..=3i64 {
            let n = k as usize * (p - 1) + b;
            c.qp(format!("b={b} k={k}"), &x.b(n), &kummer_rhs(ctx.terms(), family, b, k))?;
        }
    }
    Ok(())
}

fn kummer1(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    kummer(ctx, c, KummerFamily::K1)
}

fn kummer2(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    kummer(ctx, c, KummerFamily::K2)
}

fn kummer3(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    kummer(ctx, c, KummerFamily::K3)
}

fn ernvall(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    let p = ctx.p() as usize;
    for n in evens(4, p - 2) {
        c.qp(format!("n={n}"), &x.b(p - 1 + n), &ernvall_metsankyla(ctx, n))?;
    }
    Ok(())
}

fn multiple(ctx: &PrimeContext, c: &mut Cases, e: u32) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    let p = ctx.p() as usize;
    for k in 1..=4usize {
        c.qp(format!("k={k}"), &x.pb(k * (p - 1)), &multiple_index(ctx.terms(), k as i64, e))?;
    }
    Ok(())
}

fn multiple2(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    multiple(ctx, c, 2)
}

fn multiple3(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    multiple(ctx, c, 3)
}

fn multiple4(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    multiple(ctx, c, 4)
}

fn inverse_factorial(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let direct = Qp::from_residue(ctx.p(), ctx.factorial(), 4).inv()?;
    c.qp("", &direct, &inverse_factorial_mod_p3(ctx.terms()))
}

fn stirling_exp(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    for k in evens(6, ctx.p() as usize) {
        c.res(format!("2n={k}"), ctx.stirling(k), &stirling_expanded(ctx.terms(), k))?;
    }
    Ok(())
}

fn stirling_4(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.stirling(4), &stirling_a4(ctx.terms()))
}

fn stirling_2(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.stirling(2), &stirling_a2(ctx.terms()))
}

fn stirling_conv(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    for k in evens(6, ctx.p() as usize) {
        c.res(format!("2n={k}"), ctx.stirling(k), &stirling_convolution(ctx.terms(), k))?;
    }
    Ok(())
}

fn mhs_stirling(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    for k in evens(4, ctx.p() as usize - 6) {
        c.res(format!("2n={k}"), ctx.mhs(k), &mhs_via_stirling(ctx, k)?)?;
    }
    Ok(())
}

fn mhs_two(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.mhs(2), &mhs_2(ctx)?)
}

fn mhs_pm5(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.mhs(ctx.p() as usize - 5), &mhs_p_minus_5(ctx))
}

fn mhs_pm3(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.mhs(ctx.p() as usize - 3), &mhs_p_minus_3(ctx))
}

fn mhs_pm1(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.mhs(ctx.p() as usize - 1), &mhs_p_minus_1(ctx))
}

fn mhs_exp(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    for k in evens(2, ctx.p() as usize - 4) {
        c.res(format!("2n={k}"), ctx.mhs(k), &mhs_expanded(ctx, k))?;
    }
    Ok(())
}

fn mhs_exp_pm3(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.mhs(ctx.p() as usize - 3), &mhs_p_minus_3_expanded(ctx))
}

fn mhs_exp_pm1(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.mhs(ctx.p() as usize - 1), &mhs_p_minus_1_expanded(ctx))
}

fn mhs_fermat_all(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let ks: Vec<usize> = evens(2, ctx.p() as usize - 4).collect();
    for (k, v) in ks.iter().zip(mhs_fermat_batch(ctx, &ks)) {
        c.res(format!("2n={k}"), ctx.mhs(*k), &v)?;
    }
    Ok(())
}

fn mhs_fermat_vs_p3(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let ks: Vec<usize> = evens(2, ctx.p() as usize - 4).collect();
    for (k, v) in ks.iter().zip(mhs_fermat_batch(ctx, &ks)) {
        c.qp(format!("2n={k}"), &v, &mhs_mod_p3(ctx.terms(), ctx.agoh_giuga(), *k))?;
    }
    Ok(())
}

fn mhs_conv_pm3(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.mhs(ctx.p() as usize - 3), &mhs_p_minus_3_convolution(ctx))
}

fn mhs_conv_pm1(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.mhs(ctx.p() as usize - 1), &mhs_p_minus_1_convolution(ctx)?)
}

fn fermat_sum(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    c.qp("", &fermat_bernoulli_sum(ctx, x), &fermat_bernoulli_sum_formula(ctx)?)
}

fn triple_3(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    c.qp("", &x.bbb(ctx.p() as usize - 3), &triple_p_minus_3(ctx)?)
}

fn triple_5(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    c.qp("", &x.bbb(ctx.p() as usize - 5), &triple_p_minus_5(ctx)?)
}

fn harmonic_pm3(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.harmonic(ctx.p() as usize - 3), &harmonic_p_minus_3(ctx.terms()))
}

fn harmonic_pm1(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.harmonic(ctx.p() as usize - 1), &harmonic_p_minus_1(ctx.terms()))
}

fn wilson_quotient(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let p = ctx.p();
    let t = ctx.terms();
    let (w0, w1) = ctx.wilson_digits();
    let (f0, f1) = wilson_quotient_formula(&t.pb(p as usize - 1), &t.pb(2 * (p as usize - 1)))?;
    c.uint("", BigUint::from(w0 + p * w1), BigUint::from(f0 + p * f1))
}

fn wilson2(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.factorial(), &wilson_mod_p2(ctx.terms()))
}

fn wilson3(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.factorial(), &wilson_mod_p3(ctx.terms()))
}

fn wilson4(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.factorial(), &wilson_mod_p4(ctx)?)
}

fn mhs_appendix(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.mhs(ctx.p() as usize - 1), &mhs_p_minus_1_appendix(ctx)?)
}

fn triple_combination(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    let p = ctx.p() as usize;
    let lhs = -x.pp(3) / 3 * x.bbb(p - 1) + x.pp(3) * x.cb(p - 1).dig(1)?;
    c.qp("", &lhs, &triple_p_minus_1_combination(ctx)?)
}

fn wilson_appendix(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    c.res("", ctx.factorial(), &wilson_via_appendix(ctx)?)
}

fn triple_1(ctx: &PrimeContext, c: &mut Cases) -> Result<()> {
    let Some(x) = oracle(ctx, c) else { return Ok(()) };
    let p = ctx.p() as usize;
    c.qp("", &(x.pp(3) * x.bbb(p - 1)), &triple_p_minus_1(ctx)?)
}

fn binomial_harmonic(p: u64, c: &mut Cases) -> Result<()> {
    let pr = Rational::from(BigInt::from(p));
    for k in 1..p {
        let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        let rhs = sign * (Rational::one() - &pr * harmonic_number(k));
        c.rationals(format!("k={k}"), &Rational::from(binomial(p - 1, k)), &rhs)?;
    }
    Ok(())
}

fn halves(p: u64, c: &mut Cases) -> Result<()> {
    let half = (p - 1) / 2;
    for (name, q, first) in [("1/2", rat(1, 2), half + 1), ("-1/2", rat(-1, 2), half)] {
        let d = digits(&q, p, 5)?;
        let mut got = BigUint::zero();
        let mut want = BigUint::zero();
        let mut pw = BigUint::one();
        for i in 0..4 {
            got += &pw * d.get(i);
            want += &pw * if i == 0 { first } else { half };
            pw *= p;
        }
        c.uint(format!("{name} d_-1"), BigUint::from(d.get(-1)), BigUint::zero())?;
        c.uint(name, got, want)?;
    }
    Ok(())
}

fn half_digit0(p: u64, c: &mut Cases) -> Result<()> {
    let d = residue_at(&rat(1, 2), p, 0)?;
    c.uint("", BigUint::from(2 * d), BigUint::from(p + 1))
}

fn minus_half_digit1(p: u64, c: &mut Cases) -> Result<()> {
    let d = residue_at(&rat(-1, 2), p, 1)?;
    c.uint("", BigUint::from(2 * d), BigUint::from(p - 1))
}

fn central_digit(p: u64, c: &mut Cases) -> Result<()> {
    let mut digit_sum = BigInt::zero();
    let mut k = 0;
    for i in evens(2, p as usize - 2) {
        while k < i {
            k += 1;
            digit_sum += residue_at(&harmonic_number(k as u64), p, 0)?;
        }
        let lhs = residue_at(&Rational::from(binomial(2 * (p - 1), i as u64)), p, 1)?;
        c.ints(format!("i={i}"), &BigInt::from(lhs), &(-2 * &digit_sum))?;
    }
    Ok(())
}

fn central_p(p: u64, c: &mut Cases) -> Result<()> {
    c.ints("", &binomial(2 * (p - 1), p - 1), &BigInt::zero())
}

fn central_p4(p: u64, c: &mut Cases) -> Result<()> {
    let q = BigInt::from(p);
    let rhs = -4 * q.pow(3) - 2 * q.pow(2) - &q;
    c.ints("", &binomial(2 * p - 2, p - 1), &rhs)
}

fn wolstenholme_binomial(p: u64, c: &mut Cases) -> Result<()> {
    c.ints("", &binomial(2 * p - 1, p - 1), &BigInt::one())
}

fn miki(c: &mut Cases) -> Result<()> {
    for n in evens(6, 41) {
        let (l, r) = miki_sides(n);
        c.exact(format!("n={n}"), l, r);
    }
    Ok(())
}
