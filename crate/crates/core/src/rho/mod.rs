//! Nested interval chains `rho = (i_k, j_k)_{k=0..n}` and the relabeling of standard
//! tableaux they induce through jeu de taquin.

mod jdt;

use std::fmt;
use std::str::FromStr;

pub use jdt::{jdt_rectify, relabel_component, SkewTableau};

use crate::error::{Error, Result};

/// Which defining condition of a rho sequence fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoRule {
    /// The sequence has no terms.
    Empty,
    /// `j_k - i_k != k`.
    Width,
    /// Not `0 <= i_k <= j_k <= n`.
    Bounds,
    /// `i_k > i_{k-1}`.
    LeftIncreases,
    /// `j_k < j_{k-1}`.
    RightDecreases,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RhoViolation {
    pub index: usize,
    pub rule: RhoRule,
}

impl fmt::Display for RhoViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.index;
        match self.rule {
            RhoRule::Empty => write!(f, "sequence is empty"),
            RhoRule::Width => write!(f, "k={k}: j_k - i_k must equal k"),
            RhoRule::Bounds => write!(f, "k={k}: need 0 <= i_k <= j_k <= n"),
            RhoRule::LeftIncreases => write!(f, "k={k}: i_k exceeds i_(k-1)"),
            RhoRule::RightDecreases => write!(f, "k={k}: j_k is below j_(k-1)"),
        }
    }
}

/// A validated sequence `(i_0, j_0), ..., (i_n, j_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RhoSequence {
    pairs: Vec<(usize, usize)>,
}

/// Checks every condition and reports all violations at once.
pub fn validate_rho(pairs: Vec<(usize, usize)>) -> Result<RhoSequence> {
    if pairs.is_empty() {
        return Err(Error::InvalidRho(vec![RhoViolation {
            index: 0,
            rule: RhoRule::Empty,
        }]));
    }
    let n = pairs.len() - 1;
    let mut violations = Vec::new();
    let mut flag = |index, rule| violations.push(RhoViolation { index, rule });
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if j < i || j > n {
            flag(k, RhoRule::Bounds);
        } else if j - i != k {
            flag(k, RhoRule::Width);
        }
        if k > 0 {
            let (pi, pj) = pairs[k - 1];
            if i > pi {
                flag(k, RhoRule::LeftIncreases);
            }
            if j < pj {
                flag(k, RhoRule::RightDecreases);
            }
        }
    }
    if violations.is_empty() {
        Ok(RhoSequence { pairs })
    } else {
        Err(Error::InvalidRho(violations))
    }
}

impl RhoSequence {
    pub fn n(&self) -> usize {
        self.pairs.len() - 1
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `(0, k)`: the chain of initial segments.
    pub fn spaltenstein(n: usize) -> Self {
        Self {
            pairs: (0..=n).map(|k| (0, k)).collect(),
        }
    }

    /// `(n - k, n)`: the chain of final segments.
    pub fn dual_chain(n: usize) -> Self {
        Self {
            pairs: (0..=n).map(|k| (n - k, n)).collect(),
        }
    }

    /// `i*_k = n - j_k`, `j*_k = n - i_k`.
    pub fn star(&self) -> Self {
        let n = self.n();
        Self {
            pairs: self.pairs.iter().map(|&(i, j)| (n - j, n - i)).collect(),
        }
    }

    /// Every sequence of length `n + 1`: a start point `(i_0, i_0)` followed by steps
    /// that extend the interval left or right. Ordered by `i_0`, then left-first.
    pub fn enumerate(n: usize) -> Vec<RhoSequence> {
        fn go(n: usize, pairs: &mut Vec<(usize, usize)>, out: &mut Vec<RhoSequence>) {
            let &(i, j) = pairs.last().unwrap();
            if pairs.len() == n + 1 {
                out.push(RhoSequence {
                    pairs: pairs.clone(),
                });
                return;
            }
            if i > 0 {
                pairs.push((i - 1, j));
                go(n, pairs, out);
                pairs.pop();
            }
            if j < n {
                pairs.push((i, j + 1));
                go(n, pairs, out);
                pairs.pop();
            }
        }
        let mut out = Vec::new();
        for start in 0..=n {
            go(n, &mut vec![(start, start)], &mut out);
        }
        out
    }
}

impl fmt::Display for RhoSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(i, j)| format!("{i}-{j}")).collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for RhoSequence {
    type Err = Error;

    /// Parses `"2-2;1-2;1-3;0-3"`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            what: "rho sequence",
            input: s.to_string(),
            reason,
        };
        let pairs = s
            .trim()
            .split(';')
            .map(|pair| {
                let (i, j) = pair
                    .trim()
                    .split_once('-')
                    .ok_or_else(|| err(format!("expected i-j, found {pair:?}")))?;
                let num = |v: &str| v.trim().parse::<usize>().map_err(|e| err(e.to_string()));
                Ok((num(i)?, num(j)?))
            })
            .collect::<Result<Vec<_>>>()?;
        validate_rho(pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_chains_are_valid() {
        for n in 0..=6 {
            let s = RhoSequence::spaltenstein(n);
            let d = RhoSequence::dual_chain(n);
            assert_eq!(validate_rho(s.pairs().to_vec()), Ok(s.clone()));
            assert_eq!(validate_rho(d.pairs().to_vec()), Ok(d.clone()));
            assert_eq!(s.star(), d);
            assert_eq!(d.star(), s);
        }
    }

    #[test]
    fn width_violation() {
        let err = validate_rho(vec![(0, 0), (0, 1), (0, 1), (0, 3)]).unwrap_err();
        let Error::InvalidRho(v) = err else { panic!() };
        assert_eq!(
            v,
            vec![RhoViolation {
                index: 2,
                rule: RhoRule::Width
            }]
        );
    }

    #[test]
    fn monotonicity_violations() {
        // i goes back up at k = 2
        let err = validate_rho(vec![(1, 1), (0, 1), (1, 3), (0, 3)]).unwrap_err();
        let Error::InvalidRho(v) = err else { panic!() };
        assert!(v.contains(&RhoViolation {
            index: 2,
            rule: RhoRule::LeftIncreases
        }));
        let err = validate_rho(vec![(0, 0), (1, 2), (0, 2)]).unwrap_err();
        let Error::InvalidRho(v) = err else { panic!() };
        assert!(v.contains(&RhoViolation {
            index: 1,
            rule: RhoRule::LeftIncreases
        }));
        assert!(validate_rho(Vec::new()).is_err());
        assert!(matches!(
            validate_rho(vec![(0, 0), (1, 0)]),
            Err(Error::InvalidRho(v)) if v[0].rule == RhoRule::Bounds
        ));
    }

    #[test]
    fn parse_and_display() {
        let rho: RhoSequence = "2-2;1-2;1-3;0-3".parse().unwrap();
        assert_eq!(rho.n(), 3);
        assert_eq!(rho.to_string(), "2-2;1-2;1-3;0-3");
        assert!("2-2;1-2;1-4;0-3".parse::<RhoSequence>().is_err());
        assert!(matches!(
            "2-2;1,2".parse::<RhoSequence>(),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn self_dual_midpoint_chain() {
        // n = 4: start at (2,2), alternate left and right extensions.
        let rho: RhoSequence = "2-2;1-2;1-3;0-3;0-4".parse().unwrap();
        assert_ne!(rho.star(), rho);
        let symmetric: Vec<bool> = rho.pairs().iter().map(|&(i, j)| i == 4 - j).collect();
        assert_eq!(symmetric, vec![true, false, true, false, true]);
        // Fixed points of star are exactly the sequences with i_k = n - j_k for all k,
        // which forces every k to have n - k even: impossible for n >= 1.
        for n in 1..=5 {
            assert!(RhoSequence::enumerate(n).iter().all(|r| r.star() != *r));
        }
        assert_eq!(
            RhoSequence::enumerate(0)[0].star(),
            RhoSequence::enumerate(0)[0]
        );
    }

    #[test]
    fn enumeration() {
        let counts: Vec<usize> = (0..=6).map(|n| RhoSequence::enumerate(n).len()).collect();
        // regression values from the generator
        assert_eq!(counts, vec![1, 2, 4, 8, 16, 32, 64]);
        for n in 0..=5 {
            let all = RhoSequence::enumerate(n);
            for rho in &all {
                assert_eq!(validate_rho(rho.pairs().to_vec()).as_ref(), Ok(rho));
                assert_eq!(rho.star().star(), *rho);
                assert!(all.contains(&rho.star()));
            }
            assert!(all.contains(&RhoSequence::spaltenstein(n)));
        }
    }
}
