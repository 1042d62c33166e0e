use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Dense polynomial in `x` with nonnegative big-integer coefficients.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has no
/// coefficients and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BettiPolynomial {
    coeffs: Vec<BigUint>,
}

impl BettiPolynomial {
    pub fn new(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![BigUint::one()],
        }
    }

    /// `[p]_x = 1 + x + ... + x^(p-1)`; `[0]_x = 0`.
    pub fn q_int(p: usize) -> Self {
        Self {
            coeffs: vec![BigUint::one(); p],
        }
    }

    /// `[m]_x! = [1]_x [2]_x ... [m]_x`.
    pub fn q_factorial(m: usize) -> Self {
        (1..=m).fold(Self::one(), |acc, p| &acc * &Self::q_int(p))
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `x^m` (zero beyond the degree).
    pub fn coeff(&self, m: usize) -> BigUint {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> BigUint {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigUint) -> BigUint {
        self.coeffs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * x + c)
    }

    /// Sum of the coefficients.
    pub fn eval_at_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Coefficients reversed relative to degree `d`: entry `m` is the coefficient of
    /// `x^(d-m)`. Requires `d >= degree`.
    pub fn reversed(&self, d: usize) -> Vec<BigUint> {
        assert!(self.degree().is_none_or(|deg| deg <= d));
        (0..=d).map(|m| self.coeff(d - m)).collect()
    }

    pub fn scale(&self, k: &BigUint) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add<&BettiPolynomial> for &BettiPolynomial {
    type Output = BettiPolynomial;

    fn add(self, rhs: &BettiPolynomial) -> BettiPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&BettiPolynomial> for BettiPolynomial {
    fn add_assign(&mut self, rhs: &BettiPolynomial) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigUint::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Mul<&BettiPolynomial> for &BettiPolynomial {
    type Output = BettiPolynomial;

    fn mul(self, rhs: &BettiPolynomial) -> BettiPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return BettiPolynomial::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BettiPolynomial { coeffs }
    }
}

impl std::iter::Sum for BettiPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for BettiPolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Display for BettiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let show_coeff = m == 0 || !c.is_one();
            if show_coeff {
                write!(f, "{c}")?;
            }
            match m {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(c: &[u64]) -> BettiPolynomial {
        BettiPolynomial::from_u64s(c)
    }

    #[test]
    fn q_integers() {
        assert_eq!(BettiPolynomial::q_int(3), poly(&[1, 1, 1]));
        assert_eq!(BettiPolynomial::q_int(1), BettiPolynomial::one());
        assert_eq!(BettiPolynomial::q_int(0), BettiPolynomial::zero());
        for p in 0..10usize {
            assert_eq!(BettiPolynomial::q_int(p).eval_at_one(), BigUint::from(p));
        }
        assert_eq!(BettiPolynomial::q_factorial(3), poly(&[1, 2, 2, 1]));
        assert_eq!(BettiPolynomial::q_factorial(0), BettiPolynomial::one());
    }

    #[test]
    fn display() {
        assert_eq!(
            poly(&[5, 11, 9, 4, 1]).to_string(),
            "5 + 11x + 9x^2 + 4x^3 + x^4"
        );
        assert_eq!(poly(&[0, 1]).to_string(), "x");
        assert_eq!(BettiPolynomial::zero().to_string(), "0");
        assert_eq!(BettiPolynomial::one().to_string(), "1");
    }

    #[test]
    fn normalization_and_reversal() {
        assert_eq!(poly(&[1, 2, 0, 0]), poly(&[1, 2]));
        assert_eq!(
            poly(&[5, 11, 9, 4, 1]).reversed(4),
            poly(&[1, 4, 9, 11, 5]).coeffs()
        );
        assert_eq!(poly(&[2, 1]).reversed(3), poly(&[0, 0, 1, 2]).coeffs());
    }

    prop_compose! {
        fn arb_poly()(c in prop::collection::vec(0u64..50, 0..6)) -> BettiPolynomial {
            BettiPolynomial::from_u64s(&c)
        }
    }

    proptest! {
        #[test]
        fn product_evaluates_pointwise(a in arb_poly(), b in arb_poly(), x in 0u64..5) {
            let x = BigUint::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }

        #[test]
        fn multiplication_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }
    }
}
