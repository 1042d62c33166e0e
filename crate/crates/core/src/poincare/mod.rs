//! Poincaré polynomials and Betti numbers of Springer fibers.
//!
//! `chi(x)` is indexed by codimension: the coefficient of `x^m` counts row-standard
//! tableaux with `m` inversions, and the Betti number `b_m` is the coefficient of
//! `x^(d - m)` where `d` is the fiber dimension. Three independent routes compute it:
//!
//! * [`chi_enumeration`] counts inversions over every row-standard tableau;
//! * [`chi_sum`] adds the per-class products `prod [p_i]_x` over standard tableaux;
//! * [`chi_recursive`] removes corners, `chi(Y) = sum_c [p_c]_x chi(Y \ c)`.

mod closed_form;
mod poly;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

pub use closed_form::{closed_form, Family};
pub use poly::BettiPolynomial;

use crate::error::{Error, Result};
use crate::kappa::pq_statistics;
use crate::tableau::{enumerate_row_standard, enumerate_standard, Partition, StandardTableau};

/// `prod_i [p_i]_x` for the statistics of `t`.
pub fn chi_t(t: &StandardTableau) -> BettiPolynomial {
    pq_statistics(t)
        .p
        .into_iter()
        .map(BettiPolynomial::q_int)
        .product()
}

/// Sum of [`chi_t`] over the standard tableaux of `shape`.
pub fn chi_sum(shape: &Partition, cap: u64) -> Result<BettiPolynomial> {
    Ok(enumerate_standard(shape, cap)?.map(|t| chi_t(&t)).sum())
}

/// Inversion-count histogram over all row-standard tableaux of `shape`.
pub fn chi_enumeration(shape: &Partition, cap: u64) -> Result<BettiPolynomial> {
    let mut counts = vec![0u64; shape.springer_dimension() + 1];
    for t in enumerate_row_standard(shape, cap)? {
        counts[t.n_inv()] += 1;
    }
    Ok(BettiPolynomial::from_u64s(&counts))
}

/// Corner recursion, memoized on the partition.
pub fn chi_recursive(shape: &Partition) -> BettiPolynomial {
    fn go(shape: &Partition, memo: &mut HashMap<Partition, BettiPolynomial>) -> BettiPolynomial {
        if shape.is_empty() {
            return BettiPolynomial::one();
        }
        if let Some(hit) = memo.get(shape) {
            return hit.clone();
        }
        let mut total = BettiPolynomial::zero();
        for (row, col) in shape.corners() {
            let p_c = shape.rows_of_length(col + 1);
            let smaller = shape.remove_box(row).expect("corners are removable");
            total += &(&BettiPolynomial::q_int(p_c) * &go(&smaller, memo));
        }
        memo.insert(shape.clone(), total.clone());
        total
    }
    go(shape, &mut HashMap::new())
}

/// `prod_q [mu_q]_x!` over the column lengths of `shape`.
pub fn chi_tmin(shape: &Partition) -> BettiPolynomial {
    shape
        .conjugate()
        .parts()
        .iter()
        .map(|&mu| BettiPolynomial::q_factorial(mu))
        .product()
}

/// Which route(s) [`betti_numbers`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Enumeration,
    ProductSum,
    Recursion,
    All,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Enumeration => "enumeration",
            Method::ProductSum => "product-sum",
            Method::Recursion => "recursion",
            Method::All => "all",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enumeration" => Ok(Method::Enumeration),
            "product-sum" => Ok(Method::ProductSum),
            "recursion" => Ok(Method::Recursion),
            "all" => Ok(Method::All),
            _ => Err(Error::Parse {
                what: "method",
                input: s.to_string(),
                reason: "expected enumeration, product-sum, recursion or all".into(),
            }),
        }
    }
}

/// Betti numbers of the Springer fiber of one Jordan type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub shape: Partition,
    /// Fiber dimension `d`.
    pub dim: usize,
    /// `chi(x)`: coefficient of `x^m` = number of cells of codimension `m`.
    pub poincare_by_codim: BettiPolynomial,
    /// `b_0, ..., b_d` with `b_m = dim H^{2m}`.
    pub betti: Vec<BigUint>,
    pub num_standard: BigUint,
    pub num_row_standard: BigUint,
    pub method: Method,
    /// `Some(true)` when all three routes were computed and agree.
    pub agreement: Option<bool>,
}

pub fn betti_numbers(shape: &Partition, method: Method, cap: u64) -> Result<BettiTable> {
    let (chi, agreement) = match method {
        Method::Enumeration => (chi_enumeration(shape, cap)?, None),
        Method::ProductSum => (chi_sum(shape, cap)?, None),
        Method::Recursion => (chi_recursive(shape), None),
        Method::All => {
            let by_enumeration = chi_enumeration(shape, cap)?;
            let by_sum = chi_sum(shape, cap)?;
            let by_recursion = chi_recursive(shape);
            if by_enumeration != by_sum || by_sum != by_recursion {
                return Err(Error::MethodDisagreement {
                    shape: shape.to_string(),
                    detail: format!(
                        "enumeration {by_enumeration}; product-sum {by_sum}; recursion {by_recursion}"
                    ),
                });
            }
            (by_recursion, Some(true))
        }
    };
    let dim = shape.springer_dimension();
    if chi.degree() != Some(dim) {
        return Err(Error::MethodDisagreement {
            shape: shape.to_string(),
            detail: format!("degree of {chi} differs from the dimension {dim}"),
        });
    }
    Ok(BettiTable {
        shape: shape.clone(),
        dim,
        betti: chi.reversed(dim),
        poincare_by_codim: chi,
        num_standard: shape.num_standard(),
        num_row_standard: shape.multinomial(),
        method,
        agreement,
    })
}
