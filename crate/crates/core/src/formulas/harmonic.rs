use num_bigint::BigUint;

use super::Bern;
use crate::error::{Error, Result};
use crate::padic::Qp;

/// `S_k` from the four leading Faulhaber terms, mod `p^4`.
pub fn sum_powers_formula(t: &Bern, k: usize) -> Qp {
    let kk = k as i64;
    let mut r = t.pb(k) + t.pp(2) / 2 * kk * t.big(k - 1);
    if k >= 2 {
        r = r + t.pp(3) / 6 * (kk * (kk - 1)) * t.big(k - 2);
    }
    if k >= 3 {
        r = r + t.rat(kk * (kk - 1) * (kk - 2), 24) * t.pp(4) * t.big(k - 3);
    }
    r
}

/// `H_{p-1,k}` mod `p^2` for `1 <= k <= p-1`.
pub fn harmonic_mod_p2(t: &Bern, k: usize) -> Qp {
    let p = t.p() as usize;
    let pi = t.p() as i64;
    if k < p - 1 {
        t.rat(k as i64, k as i64 + 1) * t.pb(p - 1 - k)
    } else {
        -t.pb(p - 1) + 2 * (pi - 1)
    }
}

/// `H_{p-1,k}` mod `p^3` for `1 <= k <= p-1`.
pub fn harmonic_mod_p3(t: &Bern, k: usize) -> Qp {
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let kk = k as i64;
    let b = |i: usize| t.b(i);
    if k + 4 <= p {
        if k % 2 == 1 {
            kk * (kk + 1) / 2 * b(p - 2 - k) * t.pp(2)
        } else {
            kk * (b(2 * p - 2 - k) - 2 * b(p - 1 - k)) * pi
        }
    } else if k == p - 3 {
        (t.rat(1, 2) - 3 * t.big(p + 1)) * pi - t.rat(4, 3) * t.pp(2)
    } else if k == p - 2 {
        -(2 + t.pb(p - 1)) * pi + t.rat(5, 2) * t.pp(2)
    } else {
        t.pb(2 * p - 2) - 3 * t.pb(p - 1) + 3 * (pi - 1)
    }
}

/// `H_{p-1,k}` mod `p^4` for `1 <= k <= p-5`.
pub fn harmonic_mod_p4_small(t: &Bern, k: usize) -> Qp {
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let kk = k as i64;
    let b = |i: usize| t.b(i);
    if k % 2 == 0 {
        -kk * (b(3 * p - 3 - k) - 3 * b(2 * p - 2 - k) + 3 * b(p - 1 - k)) * pi
            - (kk + 2) * (kk + 1) * kk / 6 * t.pp(3) * b(p - 3 - k)
    } else {
        -((kk + 1) * kk / 2) * (b(2 * p - 3 - k) - 2 * b(p - 2 - k)) * t.pp(2)
    }
}

/// `H_{p-1,p-3}` mod `p^4`.
pub fn harmonic_p_minus_3(t: &Bern) -> Qp {
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let p3 = t.pp(3);
    t.rat(37, 12) * &p3 - 3 * t.pp(2) + t.rat(3 * pi, 4)
        - t.pp(2) * t.pb(p - 1)
        + 3 * pi * (pi - 3) * t.b(p + 1)
        - (pi - 3 + t.rat(11, 2) * &p3) / 2 * t.big(2 * p)
}

/// `H_{p-1,p-1}` mod `p^4`.
pub fn harmonic_p_minus_1(t: &Bern) -> Qp {
    let p = t.p() as usize;
    let pi = t.p() as i64;
    let p3 = t.pp(3);
    (13 * &p3 + 12 * pi - 12) / 3
        + (19 * &p3 - 12) / 2 * t.pb(p - 1)
        + (4 - 7 * &p3) * t.pb(2 * (p - 1))
        + (11 * &p3 - 6) / 6 * t.pb(3 * (p - 1))
}

/// `H_{p-1,k} mod p^e`, choosing the closed form that covers `(k, e)`.
pub fn harmonic_formula(t: &Bern, k: usize, e: u32) -> Result<Qp> {
    let p = t.p() as usize;
    let unsupported = || Error::Unsupported {
        what: "harmonic_formula",
        k: k as i64,
        e,
    };
    if k == 0 || k >= p {
        return Err(unsupported());
    }
    match e {
        1 | 2 => Ok(harmonic_mod_p2(t, k)),
        3 => Ok(harmonic_mod_p3(t, k)),
        4 if k + 5 <= p => Ok(harmonic_mod_p4_small(t, k)),
        4 if k == p - 3 => Ok(harmonic_p_minus_3(t)),
        4 if k == p - 1 => Ok(harmonic_p_minus_1(t)),
        _ => Err(unsupported()),
    }
}

/// Residue form of [`harmonic_formula`].
pub fn harmonic_residue(t: &Bern, k: usize, e: u32) -> Result<BigUint> {
    harmonic_formula(t, k, e)?.residue(e)
}
