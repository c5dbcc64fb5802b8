//! Fractions with denominator a power of a fixed base `n`, i.e. elements
//! of the ring `Z[1/n]`. The base is contextual (carried by the group that
//! owns the value) and passed to every operation.

use alloc::string::String;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

/// A value `numerator / n^denominator_exponent` for a contextual base `n >= 2`.
///
/// Normalized: either the exponent is zero or `n` does not divide the
/// numerator; zero is always `(0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NAdicFraction {
    numerator: BigInt,
    denominator_exponent: u32,
}

impl NAdicFraction {
    pub fn zero() -> Self {
        NAdicFraction {
            numerator: BigInt::zero(),
            denominator_exponent: 0,
        }
    }

    /// An ordinary integer, seen as `k / n^0`.
    pub fn from_integer(k: impl Into<BigInt>) -> Self {
        NAdicFraction {
            numerator: k.into(),
            denominator_exponent: 0,
        }
    }

    pub fn new(numerator: BigInt, denominator_exponent: u32, base: u64) -> Self {
        let mut f = NAdicFraction {
            numerator,
            denominator_exponent,
        };
        f.normalize(base);
        f
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn denominator_exponent(&self) -> u32 {
        self.denominator_exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// True when the value lies in `Z`, i.e. the exponent normalized to 0.
    pub fn is_integer(&self) -> bool {
        self.denominator_exponent == 0
    }

    fn normalize(&mut self, base: u64) {
        debug_assert!(base >= 2);
        if self.numerator.is_zero() {
            self.denominator_exponent = 0;
            return;
        }
        let b = BigInt::from(base);
        while self.denominator_exponent > 0 && (&self.numerator % &b).is_zero() {
            self.numerator /= &b;
            self.denominator_exponent -= 1;
        }
    }

    pub fn add(&self, other: &Self, base: u64) -> Self {
        let e = self.denominator_exponent.max(other.denominator_exponent);
        let b = BigInt::from(base);
        let lhs = &self.numerator * b.pow(e - self.denominator_exponent);
        let rhs = &other.numerator * b.pow(e - other.denominator_exponent);
        NAdicFraction::new(lhs + rhs, e, base)
    }

    pub fn neg(&self) -> Self {
        NAdicFraction {
            numerator: -&self.numerator,
            denominator_exponent: self.denominator_exponent,
        }
    }

    pub fn sub(&self, other: &Self, base: u64) -> Self {
        self.add(&other.neg(), base)
    }

    pub fn mul(&self, other: &Self, base: u64) -> Self {
        NAdicFraction::new(
            &self.numerator * &other.numerator,
            self.denominator_exponent + other.denominator_exponent,
            base,
        )
    }

    /// Multiply by `n^k` (k may be negative).
    pub fn scale_by_base_power(&self, k: i64, base: u64) -> Self {
        if self.numerator.is_zero() {
            return NAdicFraction::zero();
        }
        let b = BigInt::from(base);
        if k >= 0 {
            NAdicFraction::new(
                &self.numerator * b.pow(k as u32),
                self.denominator_exponent,
                base,
            )
        } else {
            NAdicFraction::new(
                self.numerator.clone(),
                self.denominator_exponent + (-k) as u32,
                base,
            )
        }
    }

    /// True when the value is an integer divisible by `base`.
    pub fn is_multiple_of_base(&self, base: u64) -> bool {
        self.is_integer() && (&self.numerator % BigInt::from(base)).is_zero()
    }

    pub fn to_display(&self, base: u64) -> String {
        let mut s = String::new();
        if self.denominator_exponent == 0 {
            let _ = write!(s, "{}", self.numerator);
        } else {
            let _ = write!(
                s,
                "{}/{}^{}",
                self.numerator, base, self.denominator_exponent
            );
        }
        s
    }

    /// Canonical byte encoding, used as a dedup key.
    pub fn push_key(&self, out: &mut alloc::vec::Vec<u8>) {
        out.extend_from_slice(&self.denominator_exponent.to_le_bytes());
        let bytes = self.numerator.to_signed_bytes_le();
        out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
        out.extend_from_slice(&bytes);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn frac(num: i64, exp: u32, base: u64) -> NAdicFraction {
        NAdicFraction::new(BigInt::from(num), exp, base)
    }

    #[test]
    fn normalization() {
        let f = frac(4, 2, 2); // 4/4 = 1
        assert_eq!(f, NAdicFraction::from_integer(1));
        assert_eq!(frac(0, 3, 2), NAdicFraction::zero());
        assert_eq!(frac(6, 1, 2), NAdicFraction::from_integer(3));
        assert_eq!(frac(3, 1, 2).denominator_exponent(), 1);
    }

    #[test]
    fn add_and_scale() {
        let half = frac(1, 1, 2);
        let one = half.add(&half, 2);
        assert_eq!(one, NAdicFraction::from_integer(1));
        assert_eq!(half.scale_by_base_power(1, 2), NAdicFraction::from_integer(1));
        assert_eq!(
            NAdicFraction::from_integer(1).scale_by_base_power(-2, 2),
            frac(1, 2, 2)
        );
    }

    #[test]
    fn random_ring_laws() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let base = *[2u64, 3, 5].iter().nth(rng.gen_range(0..3)).unwrap();
            let r = |rng: &mut StdRng| frac(rng.gen_range(-50..50), rng.gen_range(0..4), base);
            let (a, b, c) = (r(&mut rng), r(&mut rng), r(&mut rng));
            // associativity and commutativity of addition
            assert_eq!(a.add(&b, base).add(&c, base), a.add(&b.add(&c, base), base));
            assert_eq!(a.add(&b, base), b.add(&a, base));
            // additive inverse
            assert_eq!(a.add(&a.neg(), base), NAdicFraction::zero());
            // distributivity
            assert_eq!(
                a.mul(&b.add(&c, base), base),
                a.mul(&b, base).add(&a.mul(&c, base), base)
            );
            // normalization idempotent: re-normalizing changes nothing
            let renorm = NAdicFraction::new(
                a.numerator().clone(),
                a.denominator_exponent(),
                base,
            );
            assert_eq!(renorm, a);
            // keys injective on samples
            let mut k1 = Vec::new();
            let mut k2 = Vec::new();
            a.push_key(&mut k1);
            b.push_key(&mut k2);
            assert_eq!(a == b, k1 == k2);
        }
    }
}
