use num_bigint::BigUint;

use crate::error::Result;
use crate::padic::Qp;
use crate::sequences::PrimeContext;

/// The correction terms `O_0..O_6`, their sums `O` and `Ô`, and `O'`.
///
/// `O` and `Ô` only matter mod `p`; `O'` is kept mod `p^4`.
#[derive(Clone, Debug)]
pub struct AppendixTerms {
    pub parts: [Qp; 7],
    /// `Ô_1`, the part of `O_1` that survives in `Ô`.
    pub o1_hat: Qp,
    pub o: Qp,
    pub o_hat: Qp,
    pub o_prime: Qp,
}

impl AppendixTerms {
    /// `(O_0..O_6, O, Ô)` reduced mod `p`, and `O' mod p^4`.
    pub fn digits(&self) -> Result<([u64; 7], u64, u64, BigUint)> {
        let mut parts = [0u64; 7];
        for (slot, v) in parts.iter_mut().zip(&self.parts) {
            *slot = v.digit(0)?;
        }
        Ok((parts, self.o.digit(0)?, self.o_hat.digit(0)?, self.o_prime.residue(4)?))
    }
}

/// Digits of `B_{p-1}/(p-1)` and `B_{2(p-1)}/(2(p-1))` plus the second
/// digit of `2p b_{2(p-1)} - p^2 b_{p-1}^2`.
pub(crate) struct Coordinates {
    pub z: i64,
    pub u: i64,
    pub dd: i64,
    pub dz: i64,
    pub du: i64,
    pub ddd: i64,
    pub x: Qp,
    pub x2: i64,
}

pub(crate) fn coordinates(ctx: &PrimeContext) -> Result<Coordinates> {
    let t = ctx.terms();
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let d1 = t.b(p - 1);
    let d2 = t.b(2 * (p - 1));
    let x = 2 * pi * &d2 - t.pp(2) * &d1 * &d1;
    let g = |v: &Qp, i| v.digit(i).map(|d| d as i64);
    Ok(Coordinates {
        z: g(&d1, 0)?,
        u: g(&d1, 1)?,
        dd: g(&d1, 2)?,
        dz: g(&d2, 0)?,
        du: g(&d2, 1)?,
        ddd: g(&d2, 2)?,
        x2: g(&x, 2)?,
        x,
    })
}

/// `(n)_i` of an integer, as an integer.
pub(crate) fn di(p: u64, n: &Qp, i: i32) -> Result<i64> {
    let _ = p;
    n.digit(i).map(|d| d as i64)
}

pub fn appendix_terms(ctx: &PrimeContext) -> Result<AppendixTerms> {
    let t = ctx.terms();
    let p = t.p();
    let pu = p as usize;
    let pi = p as i64;
    let c = coordinates(ctx)?;
    let (z, u, dd, dz, du, ddd, x2) = (c.z, c.u, c.dd, c.dz, c.du, c.ddd, c.x2);
    let q = |n: i64| Qp::int(p, n);
    let d = |n: i64, i: i32| di(p, &q(n), i);
    let half = |num: i64| t.rat(num, 2);

    let o0 = d(2 * x2 + z * z + 2 * u + d(2 * z, 1)?, 1)?;
    let o1_hat = q(2 * u * z + 2 * dd);
    let o1 = &o1_hat - 6 * t.b(pu - 3) * (t.b(2).digit(1)? as i64 - t.b(pu + 1).digit(1)? as i64);
    let o2 = 2 * x2;
    let o3 = -d(2 * di(p, &(half(pi + 1) * x2), 0)?, 1)?
        - 2 * di(p, &(half(pi - 1) * x2), 1)?
        - 2 * d(2 * di(p, &(half(pi - 1) * x2), 0)?, 1)?;
    let carry = d(2 * (1 + dz), 1)? + 1 + 2 * (1 + dz + du);
    let o4 = -d(carry, 1)? - d(2 * (1 + dz), 2)? - 2 * (1 + du + ddd + 2 * (1 + dz));
    let o5 = d(3 + 2 * z, 1)? + 5 + 4 * z + z * z + 2 * u;
    let o6 = -d(x2 + d(-3 - 2 * z, 0)? + d(carry, 0)?, 1)?;

    let parts = [q(o0), o1, q(o2), q(o3), q(o4), q(o5), q(o6)];
    let o = Qp::sum(p, parts.iter().cloned());
    let o_hat = Qp::sum(
        p,
        [q(o0), o1_hat.clone(), q(o3), q(o4), q(o5), q(o6)],
    );

    let ag = ctx.agoh_giuga() as i64;
    let p2 = t.pp(2);
    let o_prime = &p2 / 2 * (1 + pi * (ag - 1)) * x2 - 4 + 6 * pi * t.b(pu - 1) - 8 * pi * t.b(2 * (pu - 1))
        + 3 * pi * t.b(3 * (pu - 1))
        + &p2
            * t.b(pu - 3)
            * (t.rat(1, 4)
                - 3 * t.b(2).digit(0)? as i64
                - pi * (t.rat(1, 4) + 3 * t.b(pu + 1).digit(1)? as i64));
    Ok(AppendixTerms {
        parts,
        o1_hat,
        o,
        o_hat,
        o_prime,
    })
}
