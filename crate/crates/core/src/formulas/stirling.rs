use super::Bern;
use crate::error::{Error, Result};
use crate::padic::Qp;

/// `A_k` mod `p^3` for `1 <= k <= p-1`.
pub fn stirling_mod_p3(t: &Bern, k: usize) -> Qp {
    let pi = t.p() as i64;
    let p2 = t.pp(2);
    match k {
        1 => t.int(pi * (pi - 1) / 2),
        2 => (-t.rat(pi, 6) + t.rat(3, 4) * &p2) / 2,
        k if k % 2 == 1 => {
            let j = (k - 1) as i64;
            &p2 / 2 * t.rat(j + 1, j) * t.big(k - 1)
        }
        k => {
            let conv = Qp::sum(
                t.p(),
                (1..k / 2).map(|r| t.big(2 * r) * t.big(k - 2 * r) / (2 * r as i64)),
            );
            -(t.pb(k) - &p2 * conv) / k as i64
        }
    }
}

/// Even `A_{2n}` mod `p^4` for `6 <= 2n <= p-1`, in its expanded form.
pub fn stirling_expanded(t: &Bern, k: usize) -> Qp {
    let n = (k / 2) as i64;
    let p3 = t.pp(3);
    let tail = Qp::sum(t.p(), (4..=k - 4).map(|r| t.big(k - r) * t.cb(r)));
    -(t.pb(k) + t.rat(n * (16 * n * n - 12 * n + 5), 24 * (n - 1)) * &p3 * t.big(k - 2)
        - t.pp(2) * n * t.cb(k)
        + &p3 / 12 * t.cb(k - 2)
        + &p3 / 2 * tail)
        / k as i64
}

/// `A_4` mod `p^4`.
pub fn stirling_a4(t: &Bern) -> Qp {
    let pi = t.p() as i64;
    (t.rat(pi, 15) + t.pp(2) / 36 - t.rat(5, 4) * t.pp(3)) / 8
}

/// `A_2` mod `p^4`.
pub fn stirling_a2(t: &Bern) -> Qp {
    let pi = t.p() as i64;
    t.int(pi) * (1 - 2 * pi) * (5 * pi - 2) / 24
}

/// Even `A_{2n}` mod `p^4` for `6 <= 2n <= p-1`, through the convolutions.
pub fn stirling_convolution(t: &Bern, k: usize) -> Qp {
    let n = (k / 2) as i64;
    let p3 = t.pp(3);
    t.pp(2) / 2 * t.cb(k) - t.int(t.p() as i64) * t.b(k) - &p3 / 6 * t.bbb(k)
        - t.rat(16 * n * n - 12 * n + 5, 24) * &p3 * t.b(k - 2)
}

/// `A_k mod p^e`: any `k` at `e <= 3`, even `k` at `e = 4`.
pub fn stirling_formula(t: &Bern, k: usize, e: u32) -> Result<Qp> {
    let p = t.p() as usize;
    let unsupported = || Error::Unsupported {
        what: "stirling_formula",
        k: k as i64,
        e,
    };
    if k == 0 || k >= p {
        return Err(unsupported());
    }
    match (e, k) {
        (1..=3, _) => Ok(stirling_mod_p3(t, k)),
        (4, 2) => Ok(stirling_a2(t)),
        (4, 4) => Ok(stirling_a4(t)),
        (4, k) if k % 2 == 0 => Ok(stirling_convolution(t, k)),
        _ => Err(unsupported()),
    }
}
