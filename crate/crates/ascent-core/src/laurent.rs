//! Laurent polynomials over `Z`: finitely supported integer coefficients
//! indexed by integer exponents of `t`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Element of `Z[t, t^-1]`.
///
/// Stored as `(exponent, coefficient)` pairs with strictly increasing
/// exponents and no zero coefficients; the zero polynomial is the empty
/// list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPolynomial::term(0, BigInt::one())
    }

    /// The monomial `c * t^e` (zero if `c = 0`).
    pub fn term(exponent: i64, coefficient: impl Into<BigInt>) -> Self {
        let c = coefficient.into();
        if c.is_zero() {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial {
            terms: alloc::vec![(exponent, c)],
        }
    }

    /// Build from arbitrary (exponent, coefficient) pairs, combining
    /// duplicates and dropping zeros.
    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = LaurentPolynomial::zero();
        for (e, c) in pairs {
            p = p.add(&LaurentPolynomial::term(e, c));
        }
        p
    }

    /// Polynomial `sum coeffs[i] * t^(low + i)`.
    pub fn from_coeff_window(low: i64, coeffs: &[BigInt]) -> Self {
        LaurentPolynomial::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (low + i as i64, c.clone())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        match self.terms.binary_search_by_key(&exponent, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = match (self.terms.get(i), other.terms.get(j)) {
                (Some((e1, _)), Some((e2, _))) => {
                    if e1 == e2 {
                        let c = &self.terms[i].1 + &other.terms[j].1;
                        if !c.is_zero() {
                            terms.push((*e1, c));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                    e1 < e2
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => unreachable!(),
            };
            if take_left {
                terms.push(self.terms[i].clone());
                i += 1;
            } else {
                terms.push(other.terms[j].clone());
                j += 1;
            }
        }
        LaurentPolynomial { terms }
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = LaurentPolynomial::zero();
        for (e1, c1) in &self.terms {
            let partial: Vec<(i64, BigInt)> = other
                .terms
                .iter()
                .map(|(e2, c2)| (e1 + e2, c1 * c2))
                .collect();
            acc = acc.add(&LaurentPolynomial { terms: partial });
        }
        acc
    }

    /// Multiply by the Laurent unit `sign * t^shift` (`sign` must be ±1).
    pub fn mul_unit(&self, sign: i8, shift: i64) -> Self {
        assert!(sign == 1 || sign == -1);
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, if sign == 1 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// Evaluate at an integer point. Exact rational result; negative
    /// exponents contribute `1/x^|e|`. Errors on `x = 0` with negative
    /// exponents present.
    pub fn evaluate(&self, x: &BigInt) -> Result<BigRational, EvalError> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                BigRational::from(x.pow(*e as u32))
            } else {
                if x.is_zero() {
                    return Err(EvalError::NegativeExponentAtZero);
                }
                BigRational::new(BigInt::one(), x.pow((-e) as u32))
            };
            acc += BigRational::from(c.clone()) * p;
        }
        Ok(acc)
    }

    /// Evaluate a genuine polynomial (min exponent >= 0) at an integer.
    pub fn evaluate_integer(&self, x: &BigInt) -> Option<BigInt> {
        if self.min_exponent().map_or(false, |e| e < 0) {
            return None;
        }
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            acc += c * x.pow(*e as u32);
        }
        Some(acc)
    }

    /// Unit-normalized form: multiply by `±t^k` so the lowest exponent is 0
    /// and the leading coefficient is positive. Returns `(f0, shift, sign)`
    /// with `self = sign * t^shift * f0`. Zero maps to zero.
    pub fn unit_normalize(&self) -> (LaurentPolynomial, i64, i8) {
        if self.is_zero() {
            return (LaurentPolynomial::zero(), 0, 1);
        }
        let low = self.min_exponent().unwrap();
        let sign = if self.leading_coefficient().unwrap().is_negative() {
            -1
        } else {
            1
        };
        (self.mul_unit(sign, -low), low, sign)
    }

    /// Degree of a unit-normalized polynomial (max exponent; zero for
    /// constants). Panics on zero.
    pub fn degree(&self) -> i64 {
        self.max_exponent().expect("degree of zero polynomial")
    }

    /// Exact division test in `Q[t]`: whether `self` divides `other` with
    /// quotient in `Z[t]`. Both inputs must be genuine polynomials
    /// (min exponent >= 0) and `self` nonzero.
    pub fn divides_in_z(&self, other: &Self) -> bool {
        assert!(!self.is_zero());
        assert!(self.min_exponent().unwrap() >= 0);
        if other.is_zero() {
            return true;
        }
        assert!(other.min_exponent().unwrap() >= 0);
        let d = self.degree();
        let lc = BigRational::from(self.leading_coefficient().unwrap().clone());
        // dense rational remainder
        let deg_o = other.degree();
        let mut rem: Vec<BigRational> = alloc::vec![BigRational::zero(); (deg_o + 1) as usize];
        for (e, c) in &other.terms {
            rem[*e as usize] = BigRational::from(c.clone());
        }
        let mut quot: Vec<BigRational> = alloc::vec![BigRational::zero(); (deg_o + 1) as usize];
        let mut top = deg_o;
        while top >= d {
            let q = &rem[top as usize] / &lc;
            if !q.is_zero() {
                quot[(top - d) as usize] = q.clone();
                for (e, c) in &self.terms {
                    let idx = (top - d + e) as usize;
                    let delta = &q * BigRational::from(c.clone());
                    rem[idx] -= delta;
                }
            }
            if top == 0 {
                break;
            }
            top -= 1;
        }
        rem.iter().all(|c| c.is_zero()) && quot.iter().all(|c| c.is_integer())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalError {
    NegativeExponentAtZero,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot evaluate negative exponents at t = 0")
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Human form, descending exponents: `t^2 - t - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            match (*e, unit_coeff) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{} t", mag)?,
                (_, true) => write!(f, "t^{}", e)?,
                (_, false) => write!(f, "{} t^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

impl LaurentPolynomial {
    pub fn to_string_human(&self) -> String {
        alloc::format!("{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn poly(pairs: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(pairs.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    #[test]
    fn product_of_conjugates() {
        // (t - 2)(t + 2) = t^2 - 4
        let p = poly(&[(1, 1), (0, -2)]);
        let q = poly(&[(1, 1), (0, 2)]);
        assert_eq!(p.mul(&q), poly(&[(2, 1), (0, -4)]));
    }

    #[test]
    fn additive_identity() {
        let p = poly(&[(-1, 3), (2, 5)]);
        assert_eq!(p.add(&LaurentPolynomial::zero()), p);
    }

    #[test]
    fn evaluation() {
        // t^2 - t - 1 at t = 2 is 1
        let p = poly(&[(2, 1), (1, -1), (0, -1)]);
        assert_eq!(
            p.evaluate_integer(&BigInt::from(2)),
            Some(BigInt::from(1))
        );
        let l = poly(&[(-1, 1)]);
        assert_eq!(
            l.evaluate(&BigInt::from(2)).unwrap(),
            BigRational::new(BigInt::one(), BigInt::from(2))
        );
        assert!(l.evaluate(&BigInt::zero()).is_err());
    }

    #[test]
    fn unit_normalization() {
        let p = poly(&[(-2, -1), (0, 2)]); // -t^-2 + 2
        let (f0, shift, sign) = p.unit_normalize();
        assert_eq!(f0, poly(&[(0, -1), (2, 2)]));
        assert_eq!((shift, sign), (-2, 1));
        assert_eq!(f0.mul_unit(sign, shift), p); // self = sign * t^shift * f0
        let m = poly(&[(1, -2), (3, -1)]); // -2t - t^3, negative leading
        let (f0, shift, sign) = m.unit_normalize();
        assert_eq!(f0, poly(&[(0, 2), (2, 1)]));
        assert_eq!((shift, sign), (1, -1));
        assert_eq!(f0.mul_unit(sign, shift), m);
    }

    #[test]
    fn divisibility() {
        let f = poly(&[(1, 1), (0, -2)]); // t - 2
        assert!(f.divides_in_z(&poly(&[(2, 1), (0, -4)]))); // t^2 - 4
        assert!(!f.divides_in_z(&poly(&[(0, 1)]))); // 1
        let g = poly(&[(1, 2), (0, -2)]); // 2t - 2
        assert!(!g.divides_in_z(&poly(&[(1, 1), (0, -1)]))); // t - 1 = g/2
        assert!(g.divides_in_z(&poly(&[(2, 2), (0, 2), (1, -4)]))); // (t-1)(2t-2)
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[(2, 1), (1, -1), (0, -1)]).to_string_human(), "t^2 - t - 1");
        assert_eq!(poly(&[(1, -2), (0, 1)]).to_string_human(), "-2 t + 1");
        assert_eq!(poly(&[]).to_string_human(), "0");
        assert_eq!(poly(&[(1, 1)]).to_string_human(), "t");
    }

    #[test]
    fn random_ring_laws() {
        let mut rng = StdRng::seed_from_u64(11);
        let rand_poly = |rng: &mut StdRng| {
            let n = rng.gen_range(0..5);
            LaurentPolynomial::from_terms(
                (0..n).map(|_| (rng.gen_range(-4..5), BigInt::from(rng.gen_range(-6..7)))),
            )
        };
        for _ in 0..300 {
            let (a, b, c) = (rand_poly(&mut rng), rand_poly(&mut rng), rand_poly(&mut rng));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            assert_eq!(a.add(&b), b.add(&a));
            assert_eq!(a.sub(&a), LaurentPolynomial::zero());
            // normalization invariants
            for w in [(&a, &b), (&b, &c)] {
                let s = w.0.add(w.1);
                let mut last = i64::MIN;
                for (e, coeff) in s.terms() {
                    assert!(*e > last);
                    assert!(!coeff.is_zero());
                    last = *e;
                }
            }
        }
    }
}
