use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::arith::Rational;
use crate::bernoulli::{bernoulli_exact, BernoulliTable};
use crate::padic::Qp;

/// Relative precision of values sourced from exact rationals.
const EXACT_REL: i32 = 10;

/// Bernoulli-derived quantities for one prime as p-adic numbers.
///
/// Built either from a [`BernoulliTable`] or from exact rationals; the
/// formulas are evaluated the same way over both, so the two sources check
/// each other.
pub struct Bern {
    p: u64,
    pb: Vec<Qp>,
    db: Vec<Qp>,
    cb: OnceLock<Vec<Qp>>,
    bbb: OnceLock<Vec<Qp>>,
}

impl Bern {
    pub fn from_table(t: &BernoulliTable) -> Self {
        let p = t.p();
        let e = t.precision() as i32;
        Self::from_pb(p, (0..=t.nmax()).map(|k| Qp::from_residue(p, t.raw(k), e)))
    }

    pub fn exact(p: u64, nmax: usize) -> Self {
        let pr = Rational::from_integer(BigInt::from(p));
        Self::from_pb(
            p,
            (0..=nmax).map(|k| Qp::from_rational(p, &(&pr * bernoulli_exact(k)), EXACT_REL)),
        )
    }

    fn from_pb(p: u64, values: impl Iterator<Item = Qp>) -> Self {
        let pb: Vec<Qp> = values
            .enumerate()
            .map(|(k, v)| match k {
                0 => Qp::int(p, p as i64),
                1 => Qp::rat(p, -(p as i64), 2),
                k if k % 2 == 1 => Qp::exact_zero(p),
                _ => v,
            })
            .collect();
        let db = pb
            .iter()
            .enumerate()
            .map(|(k, v)| {
                if k == 0 {
                    Qp::exact_zero(p)
                } else {
                    v.shl(-1) / k as i64
                }
            })
            .collect();
        Bern {
            p,
            pb,
            db,
            cb: OnceLock::new(),
            bbb: OnceLock::new(),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nmax(&self) -> usize {
        self.pb.len() - 1
    }

    /// `p B_k`.
    pub fn pb(&self, k: usize) -> Qp {
        self.pb[k].clone()
    }

    /// `B_k`.
    pub fn big(&self, k: usize) -> Qp {
        self.pb[k].shl(-1)
    }

    /// `B_k / k` for `k >= 1`; index 0 reads as zero.
    pub fn b(&self, k: usize) -> Qp {
        self.db[k].clone()
    }

    pub fn int(&self, n: i64) -> Qp {
        Qp::int(self.p, n)
    }

    pub fn rat(&self, n: i64, d: i64) -> Qp {
        Qp::rat(self.p, n, d)
    }

    /// `p^k`, exact.
    pub fn pp(&self, k: i32) -> Qp {
        Qp::int(self.p, 1).shl(k)
    }

    pub fn zero(&self) -> Qp {
        Qp::exact_zero(self.p)
    }

    fn conv_cap(&self) -> usize {
        (self.nmax() + 2).min(2 * self.p as usize + 4)
    }

    /// Full convolution `sum_{i=2}^{n-2} b_i b_{n-i}`; empty sums are zero.
    pub fn cb(&self, n: usize) -> Qp {
        let all = self.cb.get_or_init(|| {
            (0..=self.conv_cap())
                .map(|n| self.tcb(2, n.saturating_sub(2), n))
                .collect()
        });
        all[n].clone()
    }

    /// Triple convolution `sum b_i b_j b_k` over `i + j + k = n`, all `>= 2`.
    pub fn bbb(&self, n: usize) -> Qp {
        let all = self.bbb.get_or_init(|| {
            (0..=self.conv_cap())
                .map(|n| {
                    Qp::sum(
                        self.p,
                        (2..=n.saturating_sub(4))
                            .filter(|i| i % 2 == 0)
                            .map(|i| &self.db[i] * self.cb(n - i)),
                    )
                })
                .collect()
        });
        all[n].clone()
    }

    /// Truncated convolution `sum_{i=lo}^{hi} b_i b_{total-i}`.
    pub fn tcb(&self, lo: usize, hi: usize, total: usize) -> Qp {
        Qp::sum(
            self.p,
            (lo.max(1)..=hi)
                .filter(|&i| i <= total && (i % 2 == 0 || i == 1) && (total - i) % 2 == 0)
                .map(|i| &self.db[i] * &self.db[total - i]),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::bernoulli::divided_bernoulli_exact;

    #[test]
    fn table_and_exact_sources_agree() {
        let p = 13;
        let t = BernoulliTable::build(p, 48, 5).unwrap();
        let (a, b) = (Bern::from_table(&t), Bern::exact(p, 48));
        for k in 1..=48 {
            let d = a.b(k) - b.b(k);
            assert!(d.is_zero(), "k = {k}: {d:?}");
        }
        for n in 4..=28 {
            assert!((a.cb(n) - b.cb(n)).is_zero(), "CB({n})");
            assert!((a.bbb(n) - b.bbb(n)).is_zero(), "BBB({n})");
        }
    }

    #[test]
    fn small_convolutions() {
        let b = Bern::exact(11, 40);
        let one_144 = Qp::from_rational(11, &rat(1, 144), 10);
        assert!((b.cb(4) - one_144).is_zero());
        assert!(b.cb(3).is_zero() && b.bbb(5).is_zero());
        let b2 = divided_bernoulli_exact(2);
        let direct = &b2 * &b2 * divided_bernoulli_exact(4) * rat(3, 1);
        assert!((b.bbb(8) - Qp::from_rational(11, &direct, 10)).is_zero());
    }
}
