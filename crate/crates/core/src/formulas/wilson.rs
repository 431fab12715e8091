use num_bigint::BigUint;

use super::appendix::{coordinates, di};
use super::{appendix_terms, inverse_factorial_mod_p3, Bern};
use crate::error::{Error, Result};
use crate::padic::Qp;
use crate::sequences::PrimeContext;

/// `(p-1)! = p B_{p-1} - p (mod p^2)`.
pub fn wilson_mod_p2(t: &Bern) -> Qp {
    t.pb(t.p() as usize - 1) - t.p() as i64
}

/// `(p-1)! mod p^3` from `p B_{p-1}` and `p B_{2(p-1)}`.
pub fn wilson_mod_p3(t: &Bern) -> Qp {
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let x = t.pb(p - 1) / (pi - 1);
    -&x + t.pb(2 * (p - 1)) / (2 * (pi - 1)) - &x * &x / 2
}

/// Integer representative in `[0, p^3)` of a p-adic integer, exactly.
fn low3(v: &Qp) -> Result<Qp> {
    Ok(Qp::exact_uint(v.p(), &v.residue(3)?))
}

/// `(p-1)! mod p^4` by the `p^4` expansion of Wilson's theorem.
pub fn wilson_mod_p4(ctx: &PrimeContext) -> Result<Qp> {
    let t = ctx.terms();
    let p = t.p();
    let pu = p as usize;
    let pi = p as i64;
    let c = coordinates(ctx)?;
    let (z, u, dd, dz, du, ddd, x2) = (c.z, c.u, c.dd, c.dz, c.du, c.ddd, c.x2);
    let q = |n: i64| Qp::int(p, n);
    let d0 = |n: i64| di(p, &q(n), 0);
    let d1 = |n: i64| di(p, &q(n), 1);
    let d2 = |n: i64| di(p, &q(n), 2);
    let half = |num: i64| t.rat(num, 2);

    let o0 = d1(2 * x2 + z * z + 2 * u + d1(2 * z)?)?;
    let o1 = d0(2 * u * z + 2 * dd)?;
    let o3 = d0(-2 * di(p, &(half(pi - 1) * x2), 1)?
        - d1(2 * di(p, &(half(pi + 1) * x2), 0)?)?
        - 2 * d1(2 * di(p, &(half(pi - 1) * x2), 0)?)?)?;
    let carry = d1(2 * (1 + dz))? + 1 + 2 * (1 + dz + du);
    let o4 = d0(-d1(carry)? - d2(2 * (1 + dz))? - 2 * (1 + du + ddd + 2 * (1 + dz)))?;
    let o5 = d0(d1(3 + 2 * z)? + 5 + 4 * z + z * z + 2 * u)?;
    let o6 = d0(-d1(x2 + d0(-3 - 2 * z)? + d0(carry)?)?)?;
    let o_hat = d0(o0 + o1 + o3 + o4 + o5 + o6)?;

    let d1v = t.b(pu - 1);
    let d2v = t.b(2 * (pu - 1));
    let d3v = t.b(3 * (pu - 1));
    let ag = ctx.agoh_giuga() as i64;
    let p2 = t.pp(2);
    let p3 = t.pp(3);
    let inv2_p2 = (pi * pi + 1) / 2;
    let inv2_p = (pi + 1) / 2;
    let pd1 = pi * &d1v;
    let r = -&p3 * t.b(pu - 3) + &p2 * inv2_p2 * x2 * (3 - pi * (1 + ag)) - &p3 * inv2_p * o_hat + 4
        - 10 * &pd1
        + 8 * pi * &d2v
        - 3 * pi * &d3v
        + (&pd1 * low3(&c.x)? - &p2 * &d1v * &d1v + 1)
            * low3(&(3 * (&pd1 - 1) - pi * &d2v - &p2 * &d1v * &d1v / 2))?;
    Ok(r / 3)
}

/// `(p-1)! mod p^4` through the full appendix term `O` and `O'`.
pub fn wilson_via_appendix(ctx: &PrimeContext) -> Result<Qp> {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let a = appendix_terms(ctx)?;
    let c = coordinates(ctx)?;
    let d1 = t.b(p - 1);
    let p2 = t.pp(2);
    let p3 = t.pp(3);
    let r = 2 * &p2 * c.x2 - 4 * pi * &d1 - t.rat(5, 4) * &p3 * t.b(p - 3) - &p3 / 2 * &a.o - &a.o_prime
        - (-pi * &d1 * low3(&c.x)? + &p2 * &d1 * &d1 - 1) * low3(&inverse_factorial_mod_p3(t))?;
    Ok(r / 3)
}

/// `(p-1)! mod p^e` for `e` in `{2, 3, 4}`.
pub fn wilson_formula(ctx: &PrimeContext, e: u32) -> Result<BigUint> {
    let t = ctx.terms();
    let v = match e {
        2 => wilson_mod_p2(t),
        3 => wilson_mod_p3(t),
        4 => wilson_mod_p4(ctx)?,
        _ => {
            return Err(Error::Unsupported {
                what: "wilson_formula",
                k: t.p() as i64 - 1,
                e,
            })
        }
    };
    v.residue(e)
}
