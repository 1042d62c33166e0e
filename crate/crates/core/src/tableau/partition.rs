//! Integer partitions (Young diagrams) and compositions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
///
/// Used both for the row lengths of a Young diagram and, via [`Partition::conjugate`],
/// for its column lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for (index, &part) in parts.iter().enumerate() {
            if part == 0 {
                return Err(Error::InvalidPartition {
                    index,
                    part,
                    reason: "is zero",
                });
            }
            if index > 0 && part > parts[index - 1] {
                return Err(Error::InvalidPartition {
                    index,
                    part,
                    reason: "is larger than the preceding part",
                });
            }
        }
        Ok(Self { parts })
    }

    /// Builds a partition from a sequence with zeros allowed at the tail, dropping them.
    pub(crate) fn from_row_lengths(mut lengths: Vec<usize>) -> Result<Self> {
        while lengths.last() == Some(&0) {
            lengths.pop();
        }
        Self::new(lengths)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The column lengths, i.e. the transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|q| self.parts.iter().take_while(|&&p| p >= q).count())
            .collect();
        Partition { parts }
    }

    /// Number of rows of length exactly `q`.
    pub fn rows_of_length(&self, q: usize) -> usize {
        self.parts.iter().filter(|&&p| p == q).count()
    }

    /// Dimension of the Springer fiber with this Jordan type: the sum of
    /// `mu * (mu - 1) / 2` over column lengths `mu`.
    pub fn springer_dimension(&self) -> usize {
        self.conjugate()
            .parts
            .iter()
            .map(|&mu| mu * (mu - 1) / 2)
            .sum()
    }

    /// Removable boxes as 0-based `(row, column)` pairs, top to bottom.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (0..self.parts.len())
            .filter(|&row| row + 1 == self.parts.len() || self.parts[row + 1] < self.parts[row])
            .map(|row| (row, self.parts[row] - 1))
            .collect()
    }

    /// The partition with the box at the end of `row` removed.
    pub fn remove_box(&self, row: usize) -> Result<Partition> {
        let mut lengths = self.parts.clone();
        match lengths.get_mut(row) {
            Some(len) => *len -= 1,
            None => {
                return Err(Error::InvalidPartition {
                    index: row,
                    part: 0,
                    reason: "does not exist",
                })
            }
        }
        Partition::from_row_lengths(lengths)
    }

    /// Whether every row of `self` fits inside the corresponding row of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Number of row-standard fillings, `n! / prod(lambda_p!)`.
    pub fn multinomial(&self) -> BigUint {
        let mut result = factorial(self.size());
        for &part in &self.parts {
            result /= factorial(part);
        }
        result
    }

    /// Number of standard fillings, by the hook length formula.
    pub fn num_standard(&self) -> BigUint {
        let conj = self.conjugate();
        let mut hooks = BigUint::one();
        for (row, &len) in self.parts.iter().enumerate() {
            for col in 0..len {
                let arm = len - col - 1;
                let leg = conj.parts[col] - row - 1;
                hooks *= arm + leg + 1;
            }
        }
        factorial(self.size()) / hooks
    }

    /// All partitions of `n`, in reverse lexicographic order: `(n)` first, `(1^n)` last.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=max.min(remaining)).rev() {
                prefix.push(part);
                go(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,2,2"`; the empty string (or `"()"`) is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let trimmed = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed)
            .trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|e| Error::Parse {
                    what: "partition",
                    input: s.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A sequence of nonnegative integers of fixed length, not necessarily decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    entries: Vec<usize>,
}

impl Composition {
    pub fn new(entries: Vec<usize>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    /// Sorts the entries decreasingly and drops zeros.
    pub fn ord(&self) -> Partition {
        let mut sorted = self.entries.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_row_lengths(sorted).expect("sorted lengths form a partition")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 2, 2]).conjugate(), p(&[3, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1, 1, 1, 1, 1]).conjugate(), p(&[5]));
    }

    #[test]
    fn conjugate_is_involutive() {
        for n in 0..=9 {
            for shape in Partition::all_of(n) {
                assert_eq!(shape.conjugate().conjugate(), shape);
            }
        }
    }

    #[test]
    fn springer_dimension_examples() {
        assert_eq!(p(&[2, 2, 1]).springer_dimension(), 4);
        assert_eq!(p(&[7]).springer_dimension(), 0);
        assert_eq!(p(&[1; 6]).springer_dimension(), 15);
        assert_eq!(Partition::empty().springer_dimension(), 0);
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(matches!(
            Partition::new(vec![2, 3]),
            Err(Error::InvalidPartition { index: 1, .. })
        ));
        assert!(matches!(
            Partition::new(vec![2, 0]),
            Err(Error::InvalidPartition { index: 1, .. })
        ));
        assert!("2,x".parse::<Partition>().is_err());
    }

    #[test]
    fn parse_and_display() {
        let shape: Partition = "3,2,2".parse().unwrap();
        assert_eq!(shape, p(&[3, 2, 2]));
        assert_eq!(shape.to_string(), "3,2,2");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let five: Vec<String> = Partition::all_of(5).iter().map(|p| p.to_string()).collect();
        assert_eq!(
            five,
            vec!["5", "4,1", "3,2", "3,1,1", "2,2,1", "2,1,1,1", "1,1,1,1,1"]
        );
    }

    #[test]
    fn counting_formulas() {
        assert_eq!(p(&[2, 2, 1]).multinomial(), BigUint::from(30u32));
        assert_eq!(p(&[2, 2, 1]).num_standard(), BigUint::from(5u32));
        assert_eq!(p(&[3, 2]).num_standard(), BigUint::from(5u32));
        assert_eq!(Partition::empty().multinomial(), BigUint::one());
        assert_eq!(Partition::empty().num_standard(), BigUint::one());
    }

    #[test]
    fn corners_and_removal() {
        let shape = p(&[2, 2, 1]);
        assert_eq!(shape.corners(), vec![(1, 1), (2, 0)]);
        assert_eq!(shape.remove_box(1).unwrap(), p(&[2, 1, 1]));
        assert_eq!(shape.remove_box(2).unwrap(), p(&[2, 2]));
        assert!(shape.rows_of_length(2) == 2 && shape.rows_of_length(1) == 1);
    }

    #[test]
    fn composition_ord() {
        let c = Composition::new(vec![0, 2, 1, 2]);
        assert_eq!(c.ord(), p(&[2, 2, 1]));
        assert_eq!(c.total(), 5);
        assert!(!c.is_weakly_decreasing());
    }
}
