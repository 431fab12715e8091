/// Montgomery multiplication modulo an odd `m < 2^63`, `R = 2^64`.
///
/// Elements handed to [`Montgomery::mul`] must be in Montgomery form and
/// below `m`; results stay below `m`.
#[derive(Clone, Copy, Debug)]
pub struct Montgomery {
    m: u64,
    /// `-m^{-1} mod 2^64`
    m_neg_inv: u64,
    /// `R^2 mod m`
    r2: u64,
}

impl Montgomery {
    pub fn new(m: u64) -> Self {
        assert!(m % 2 == 1 && m < 1 << 63, "Montgomery needs an odd modulus below 2^63");
        // Newton iteration for the inverse modulo 2^64.
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(m.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % m as u128) as u64;
        let r2 = ((r as u128 * r as u128) % m as u128) as u64;
        Montgomery {
            m,
            m_neg_inv: inv.wrapping_neg(),
            r2,
        }
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.m
    }

    #[inline]
    fn redc(&self, t: u128) -> u64 {
        let k = (t as u64).wrapping_mul(self.m_neg_inv);
        let s = (t + k as u128 * self.m as u128) >> 64;
        let s = s as u64;
        if s >= self.m {
            s - self.m
        } else {
            s
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.m {
            s - self.m
        } else {
            s
        }
    }

    #[inline]
    pub fn to_mont(&self, a: u64) -> u64 {
        self.mul(a % self.m, self.r2)
    }

    #[inline]
    pub fn from_mont(&self, a: u64) -> u64 {
        self.redc(a as u128)
    }

    /// The Montgomery form of 1.
    #[inline]
    pub fn one(&self) -> u64 {
        self.to_mont(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn agrees_with_u128(a in 0u64..1 << 62, b in 0u64..1 << 62, m in (1u64..1 << 61).prop_map(|x| 2 * x + 1)) {
            let mg = Montgomery::new(m);
            let got = mg.from_mont(mg.mul(mg.to_mont(a), mg.to_mont(b)));
            prop_assert_eq!(got as u128, (a as u128 % m as u128) * (b as u128 % m as u128) % m as u128);
        }
    }

    #[test]
    fn large_prime_power() {
        let m = 10037u64.pow(4);
        let mg = Montgomery::new(m);
        let x = mg.to_mont(m - 1);
        assert_eq!(mg.from_mont(mg.mul(x, x)), 1);
        assert_eq!(mg.from_mont(mg.one()), 1);
    }
}
