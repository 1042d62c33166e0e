//! Closed formulas for `chi` on a few families of diagrams, used as references.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::BettiPolynomial;
use crate::error::{Error, Result};
use crate::tableau::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `(n)`
    SingleRow { n: usize },
    /// `(1^n)`
    Column { n: usize },
    /// `(s, 1)`
    OneBoxSecondRow { s: usize },
    /// `(2, 1^(r-1))`
    TwoColumnHook { r: usize },
    /// `(s, 1^(r-1))` with `s >= 2`
    Hook { s: usize, r: usize },
    /// `(s, t)` with `t <= s`
    TwoRow { s: usize, t: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::SingleRow { .. } => "single-row",
            Family::Column { .. } => "column",
            Family::OneBoxSecondRow { .. } => "one-box-second-row",
            Family::TwoColumnHook { .. } => "two-column-hook",
            Family::Hook { .. } => "hook",
            Family::TwoRow { .. } => "two-row",
        }
    }

    /// Builds a family from its name and positional parameters.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Self> {
        let family = match (name, params) {
            ("single-row", &[n]) => Family::SingleRow { n },
            ("column", &[n]) => Family::Column { n },
            ("one-box-second-row", &[s]) => Family::OneBoxSecondRow { s },
            ("two-column-hook", &[r]) => Family::TwoColumnHook { r },
            ("hook", &[s, r]) => Family::Hook { s, r },
            ("two-row", &[s, t]) => Family::TwoRow { s, t },
            ("single-row" | "column" | "one-box-second-row" | "two-column-hook", _) => {
                return Err(params_error(name, "expected one parameter"))
            }
            ("hook" | "two-row", _) => return Err(params_error(name, "expected two parameters")),
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        family.validate()?;
        Ok(family)
    }

    fn validate(&self) -> Result<()> {
        let fail = |reason: &str| Err(params_error(self.name(), reason));
        match *self {
            Family::SingleRow { n } | Family::Column { n } if n == 0 => fail("n must be positive"),
            Family::OneBoxSecondRow { s: 0 } => fail("s must be positive"),
            Family::TwoColumnHook { r: 0 } => fail("r must be positive"),
            Family::Hook { s, r } if s < 2 || r == 0 => fail("requires s >= 2 and r >= 1"),
            Family::TwoRow { s, t } if s == 0 || t > s => fail("requires 1 <= s and t <= s"),
            _ => Ok(()),
        }
    }

    pub fn shape(&self) -> Partition {
        let parts = match *self {
            Family::SingleRow { n } => vec![n],
            Family::Column { n } => vec![1; n],
            Family::OneBoxSecondRow { s } => vec![s, 1],
            Family::TwoColumnHook { r } => std::iter::once(2).chain(vec![1; r - 1]).collect(),
            Family::Hook { s, r } => std::iter::once(s).chain(vec![1; r - 1]).collect(),
            Family::TwoRow { s, t } => [s, t].into_iter().filter(|&x| x > 0).collect(),
        };
        Partition::new(parts).expect("family shapes are partitions")
    }

    /// Evaluates the family's formula.
    pub fn evaluate(&self) -> Result<BettiPolynomial> {
        self.validate()?;
        let q = BettiPolynomial::q_int;
        let qf = BettiPolynomial::q_factorial;
        let k = |v: usize| BigUint::from(v);
        Ok(match *self {
            Family::SingleRow { .. } => BettiPolynomial::one(),
            Family::Column { n } => qf(n),
            Family::OneBoxSecondRow { s } => BettiPolynomial::new(vec![k(s), BigUint::one()]),
            // [r-1]! * sum_{p=0}^{r-1} (r-p) x^p
            Family::TwoColumnHook { r } => {
                let sum = BettiPolynomial::new((0..r).map(|p| k(r - p)).collect());
                &qf(r - 1) * &sum
            }
            // [r-1]! * sum_{p=0}^{r-1} C(s+p-2, p) [r-p]
            Family::Hook { s, r } => {
                let sum: BettiPolynomial = (0..r)
                    .map(|p| q(r - p).scale(&binomial(s + p - 2, p)))
                    .sum();
                &qf(r - 1) * &sum
            }
            // [2]^t + sum_{p=1}^t C(s+p-1, p-1) (s-p)/p [2]^(t-p)
            Family::TwoRow { s, t } => {
                let mut total = q(2).pow(t);
                for p in 1..=t {
                    let numerator = binomial(s + p - 1, p - 1) * k(s - p);
                    debug_assert!(
                        (&numerator % p).is_zero(),
                        "two-row coefficient is integral"
                    );
                    let coeff = numerator / p;
                    total += &q(2).pow(t - p).scale(&coeff);
                }
                total
            }
        })
    }
}

fn params_error(family: &str, reason: &str) -> Error {
    Error::FamilyParameters {
        family: family.to_string(),
        reason: reason.to_string(),
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Evaluates a named family at the given parameters.
pub fn closed_form(family: &str, params: &[usize]) -> Result<BettiPolynomial> {
    Family::from_name(family, params)?.evaluate()
}
