//! Codes for the row-standard tableaux sharing a standardization.
//!
//! Fix a standard tableau `T`. Every row-standard `tau` with `st(tau) = T` is
//! `delta_n^{k_n} ... delta_1^{k_1}(T)` for a unique vector with `0 <= k_i < p_i`,
//! and `n_inv(tau) = k_1 + ... + k_n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::moves::delta;
use crate::tableau::{RowStandardTableau, StandardTableau};

/// Per-entry statistics of a standard tableau.
///
/// `q[i - 1]` is the column (1-based) of entry `i`; `p[i - 1]` is the number of rows
/// of length `q_i` in the subtableau of entries `1..=i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PQStatistics {
    pub p: Vec<usize>,
    pub q: Vec<usize>,
}

pub fn pq_statistics(t: &StandardTableau) -> PQStatistics {
    let mut lengths = vec![0usize; t.shape().len()];
    let mut p = Vec::with_capacity(t.n());
    let mut q = Vec::with_capacity(t.n());
    for e in 1..=t.n() {
        let (row, col) = t.position(e);
        lengths[row] += 1;
        let len = col + 1;
        q.push(len);
        p.push(lengths.iter().filter(|&&l| l == len).count());
    }
    PQStatistics { p, q }
}

/// Exponent vector `(k_1, ..., k_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KappaCode(pub Vec<usize>);

impl KappaCode {
    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Checks `k_i <= p_i - 1` for every `i`.
    pub fn check_bounds(&self, stats: &PQStatistics) -> Result<()> {
        if self.0.len() != stats.p.len() {
            return Err(Error::KappaLength {
                expected: stats.p.len(),
                found: self.0.len(),
            });
        }
        for (idx, (&value, &p)) in self.0.iter().zip(&stats.p).enumerate() {
            if value >= p {
                return Err(Error::KappaOutOfBounds {
                    index: idx + 1,
                    value,
                    bound: p - 1,
                });
            }
        }
        Ok(())
    }

    /// Every code inside the box `prod {0..p_i - 1}`, last coordinate fastest.
    pub fn all_in_box(stats: &PQStatistics) -> Vec<KappaCode> {
        let mut out = vec![Vec::with_capacity(stats.p.len())];
        for &p in &stats.p {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..p).map(move |k| {
                        let mut v = prefix.clone();
                        v.push(k);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(KappaCode).collect()
    }
}

impl fmt::Display for KappaCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for KappaCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(KappaCode(Vec::new()));
        }
        s.split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|e| Error::Parse {
                    what: "kappa code",
                    input: s.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(KappaCode)
    }
}

/// Applies `delta_1^{k_1}`, then `delta_2^{k_2}`, ..., then `delta_n^{k_n}` to `t`.
pub fn decode(t: &StandardTableau, code: &KappaCode) -> Result<RowStandardTableau> {
    code.check_bounds(&pq_statistics(t))?;
    let mut current = t.as_row_standard().clone();
    for (idx, &k) in code.0.iter().enumerate() {
        for _ in 0..k {
            current = delta(&current, idx + 1)?;
        }
    }
    Ok(current)
}

/// Recovers `(st(tau), k)` by peeling entries from `n` down to `1`.
///
/// `k_i` is the number of smaller entries below `i` once `i+1..=n` have been put back
/// in their standardized places; each of those is undone by a move at the entry
/// directly below `i`.
pub fn encode(tau: &RowStandardTableau) -> (StandardTableau, KappaCode) {
    let target = tau.standardize();
    let n = tau.n();
    let mut current = tau.clone();
    let mut code = vec![0; n];
    for i in (1..=n).rev() {
        let (row, col) = current.position(i);
        let smaller_below = current
            .column(col)
            .into_iter()
            .skip(row + 1)
            .filter(|&k| k < i)
            .count();
        for _ in 0..smaller_below {
            let below = current.below(i).expect("entry below exists");
            current = delta(&current, below).expect("peeling move applies");
        }
        code[i - 1] = smaller_below;
    }
    debug_assert_eq!(current, *target);
    (target, KappaCode(code))
}

/// `count[m]` = number of codes in the box with coordinate sum `m`, i.e. the number of
/// row-standard tableaux standardizing to `t` with `m` inversions.
pub fn inversion_distribution(t: &StandardTableau) -> Vec<BigUint> {
    let mut counts = vec![BigUint::one()];
    for p in pq_statistics(t).p {
        // convolve with p ones
        let mut next = vec![BigUint::zero(); counts.len() + p - 1];
        for (m, c) in counts.iter().enumerate() {
            for slot in &mut next[m..m + p] {
                *slot += c;
            }
        }
        counts = next;
    }
    counts
}
