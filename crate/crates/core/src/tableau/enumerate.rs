use num_bigint::BigUint;

use super::{Partition, RowStandardTableau, StandardTableau};
use crate::error::{Error, Result};

/// Default bound on the number of tableaux a single enumeration may produce.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// Streams tableaux of a fixed shape in lexicographic order of their row words
/// (`w_k` = row receiving entry `k`).
#[derive(Debug, Clone)]
pub struct TableauIter {
    shape: Partition,
    standard_only: bool,
    word: Vec<usize>,
    counts: Vec<usize>,
    started: bool,
    done: bool,
}

impl TableauIter {
    fn new(shape: &Partition, standard_only: bool) -> Self {
        Self {
            shape: shape.clone(),
            standard_only,
            word: Vec::with_capacity(shape.size()),
            counts: vec![0; shape.len()],
            started: false,
            done: false,
        }
    }

    fn allowed(&self, row: usize) -> bool {
        self.counts[row] < self.shape.parts()[row]
            && (!self.standard_only || row == 0 || self.counts[row - 1] > self.counts[row])
    }

    fn push(&mut self, row: usize) {
        self.counts[row] += 1;
        self.word.push(row);
    }

    /// Extends the current prefix greedily with the smallest admissible rows.
    fn fill(&mut self) {
        while self.word.len() < self.shape.size() {
            let row = (0..self.shape.len())
                .find(|&r| self.allowed(r))
                .expect("an admissible prefix always extends");
            self.push(row);
        }
    }

    /// Moves to the lexicographic successor; false when exhausted.
    fn advance(&mut self) -> bool {
        while let Some(last) = self.word.pop() {
            self.counts[last] -= 1;
            if let Some(row) = (last + 1..self.shape.len()).find(|&r| self.allowed(r)) {
                self.push(row);
                self.fill();
                return true;
            }
        }
        false
    }
}

impl Iterator for TableauIter {
    type Item = RowStandardTableau;

    fn next(&mut self) -> Option<RowStandardTableau> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(RowStandardTableau::from_row_word(&self.shape, &self.word))
    }
}

fn check_cap(count: BigUint, cap: u64) -> Result<()> {
    if count > BigUint::from(cap) {
        Err(Error::CapExceeded { count, cap })
    } else {
        Ok(())
    }
}

/// All row-standard tableaux of `shape`; fails up front if there are more than `cap`.
pub fn enumerate_row_standard(shape: &Partition, cap: u64) -> Result<TableauIter> {
    check_cap(shape.multinomial(), cap)?;
    Ok(TableauIter::new(shape, false))
}

/// All standard tableaux of `shape`, in the same order as they appear among the
/// row-standard ones.
pub fn enumerate_standard(
    shape: &Partition,
    cap: u64,
) -> Result<impl Iterator<Item = StandardTableau>> {
    check_cap(shape.num_standard(), cap)?;
    Ok(TableauIter::new(shape, true)
        .map(|t| StandardTableau::try_from(t).expect("lattice words give standard tableaux")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn listing(s: &str) -> Vec<String> {
        enumerate_row_standard(&shape(s), DEFAULT_CAP)
            .unwrap()
            .map(|t| t.to_string())
            .collect()
    }

    #[test]
    fn two_one_listing() {
        assert_eq!(listing("2,1"), vec!["1,2/3", "1,3/2", "2,3/1"]);
    }

    #[test]
    fn counts() {
        assert_eq!(listing("5").len(), 1);
        assert_eq!(listing("2,2,1").len(), 30);
        assert_eq!(listing("").len(), 1);
        let standard = |s: &str| enumerate_standard(&shape(s), DEFAULT_CAP).unwrap().count();
        assert_eq!(standard("2,2,1"), 5);
        assert_eq!(standard("1,1,1,1"), 1);
        assert_eq!(standard("2,2"), 2);
        assert_eq!(standard(""), 1);
    }

    #[test]
    fn order_is_lexicographic_on_row_words() {
        for n in 0..=6 {
            for sh in Partition::all_of(n) {
                let words: Vec<Vec<usize>> = enumerate_row_standard(&sh, DEFAULT_CAP)
                    .unwrap()
                    .map(|t| t.row_word())
                    .collect();
                assert!(words.windows(2).all(|w| w[0] < w[1]), "{sh}");
                assert_eq!(BigUint::from(words.len()), sh.multinomial());
            }
        }
    }

    #[test]
    fn standard_matches_filter() {
        for n in 0..=7 {
            for sh in Partition::all_of(n) {
                let filtered: Vec<RowStandardTableau> = enumerate_row_standard(&sh, DEFAULT_CAP)
                    .unwrap()
                    .filter(|t| t.n_inv() == 0)
                    .collect();
                let direct: Vec<RowStandardTableau> = enumerate_standard(&sh, DEFAULT_CAP)
                    .unwrap()
                    .map(StandardTableau::into_row_standard)
                    .collect();
                assert_eq!(filtered, direct, "{sh}");
                assert_eq!(BigUint::from(direct.len()), sh.num_standard());
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_row_standard(&shape("2,2,1"), 29).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                count: BigUint::from(30u32),
                cap: 29
            }
        );
        assert!(enumerate_row_standard(&shape("2,2,1"), 30).is_ok());
        assert!(enumerate_standard(&shape("2,2,1"), 4).is_err());
    }
}
