use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use super::reduce_int;

/// A canonical representative in `[0, modulus)`.
///
/// Combining residues with different moduli is a bug in the caller and
/// panics; there is no implicit coercion between `p^e` and `p^f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    value: BigUint,
    modulus: BigUint,
}

impl Residue {
    pub fn new(value: BigUint, modulus: BigUint) -> Self {
        assert!(!modulus.is_zero(), "modulus must be positive");
        let value = value % &modulus;
        Residue { value, modulus }
    }

    pub fn from_int(value: &BigInt, modulus: BigUint) -> Self {
        let value = reduce_int(value, &modulus);
        Residue { value, modulus }
    }

    pub fn from_u64(value: u64, modulus: u64) -> Self {
        Residue::new(value.into(), modulus.into())
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    /// Value as a machine word. Panics if it does not fit.
    pub fn to_u64(&self) -> u64 {
        self.value.to_u64().expect("residue fits in u64")
    }

    /// Re-reduce into a smaller modulus that divides the current one.
    pub fn reduce_to(&self, modulus: &BigUint) -> Residue {
        assert!(
            (&self.modulus % modulus).is_zero(),
            "{modulus} does not divide {}",
            self.modulus
        );
        Residue::new(&self.value % modulus, modulus.clone())
    }

    fn check(&self, other: &Residue) {
        assert_eq!(
            self.modulus, other.modulus,
            "residues with different moduli cannot be combined"
        );
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for &Residue {
    type Output = Residue;
    fn add(self, rhs: &Residue) -> Residue {
        self.check(rhs);
        Residue::new(&self.value + &rhs.value, self.modulus.clone())
    }
}

impl Sub for &Residue {
    type Output = Residue;
    fn sub(self, rhs: &Residue) -> Residue {
        self.check(rhs);
        Residue::new(
            &self.value + &self.modulus - &rhs.value,
            self.modulus.clone(),
        )
    }
}

impl Mul for &Residue {
    type Output = Residue;
    fn mul(self, rhs: &Residue) -> Residue {
        self.check(rhs);
        Residue::new(&self.value * &rhs.value, self.modulus.clone())
    }
}

impl Neg for &Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue::new(&self.modulus - &self.value, self.modulus.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        let m = 49u64;
        let minus_one = -&Residue::from_u64(1, m);
        assert_eq!(minus_one.to_u64(), 48);
        assert_eq!((&minus_one + &Residue::from_u64(1, m)).to_u64(), 0);
        assert_eq!((&Residue::from_u64(3, m) - &Residue::from_u64(5, m)).to_u64(), 47);
        assert_eq!((&Residue::from_u64(8, m) * &Residue::from_u64(7, m)).to_u64(), 7);
        assert_eq!(Residue::from_int(&BigInt::from(-1), 25u32.into()).to_u64(), 24);
        assert_eq!(Residue::from_u64(48, 49).reduce_to(&7u32.into()).to_u64(), 6);
    }

    #[test]
    #[should_panic(expected = "different moduli")]
    fn mismatched_moduli_panic() {
        let _ = &Residue::from_u64(1, 49) + &Residue::from_u64(1, 343);
    }
}
