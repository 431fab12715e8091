use super::Bern;
use crate::padic::Qp;
use crate::sequences::PrimeContext;

/// Which Kummer-type congruence to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KummerFamily {
    /// `b_{k(p-1)+b} = b_b (mod p)`.
    K1,
    /// The mod `p^2` refinement.
    K2,
    /// The mod `p^3` refinement.
    K3,
}

impl KummerFamily {
    pub fn modulus_exponent(self) -> u32 {
        match self {
            KummerFamily::K1 => 1,
            KummerFamily::K2 => 2,
            KummerFamily::K3 => 3,
        }
    }
}

/// Right-hand side for `b_{k(p-1)+b}`, `b` even in `2..=p-3`.
pub fn kummer_rhs(t: &Bern, family: KummerFamily, b: usize, k: i64) -> Qp {
    let p = t.p() as usize;
    let bb = |i: usize| t.b(i);
    let defect = 1 - t.pp(b as i32 - 1);
    match family {
        KummerFamily::K1 => bb(b),
        KummerFamily::K2 => k * bb(p - 1 + b) - (k - 1) * defect * bb(b),
        KummerFamily::K3 => {
            k * (k - 1) / 2 * bb(2 * (p - 1) + b) - k * (k - 2) * bb(p - 1 + b)
                + (k - 1) * (k - 2) / 2 * defect * bb(b)
        }
    }
}

/// `b_n - p/2 sum_a q_a^2 a^n` mod `p^2`, for `b_{p-1+n}`.
pub fn ernvall_metsankyla(ctx: &PrimeContext, n: usize) -> Qp {
    let t = ctx.terms();
    let p = t.p();
    let m = (p * p) as u128;
    let mut s = 0u128;
    for a in 1..p {
        let q = ctx.fermat_quotient(a) as u128;
        let mut an = 1u128;
        for _ in 0..n {
            an = an * a as u128 % m;
        }
        s = (s + q * q % m * an) % m;
    }
    t.b(n) - t.int(p as i64) / 2 * Qp::from_residue(p, &(s as u64).into(), 2)
}

/// `p B_{k(p-1)}` for `k = 1..4` in terms of the first three, mod `p^e`
/// (`e` in `{2, 3, 4}`).
pub fn multiple_index(t: &Bern, k: i64, e: u32) -> Qp {
    let p = t.p() as usize;
    let pm = t.p() as i64 - 1;
    let b1 = t.pb(p - 1);
    let b2 = t.pb(2 * (p - 1));
    let b3 = t.pb(3 * (p - 1));
    match e {
        2 => -(k - 1) * pm + k * b1,
        3 => t.int((k - 2) * (k - 1) / 2 * pm) - k * (k - 2) * b1 + k * (k - 1) / 2 * b2,
        _ => {
            t.int(-(k - 1) * (k - 2) * (k - 3) / 6 * pm) + (k - 2) * (k - 3) / 2 * k * b1
                - k * (k - 1) * (k - 3) / 2 * b2
                + k * (k - 1) * (k - 2) / 6 * b3
        }
    }
}
