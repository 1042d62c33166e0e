//! Row-standard and standard tableaux, the inversion statistic and standardization.
//!
//! Entries are `1..=n`. Rows and columns are stored 0-based internally; the text
//! format lists rows top to bottom, e.g. `"2,4,8/3,6,7/1,5"`.

mod dominance;
mod enumerate;
mod partition;

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

pub use enumerate::{enumerate_row_standard, enumerate_standard, TableauIter, DEFAULT_CAP};
pub use partition::{Composition, Partition};

use crate::error::{Error, Result};

/// A pair `small < large` of entries in one column forming an inversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InversionPair {
    pub small: usize,
    pub large: usize,
}

impl InversionPair {
    pub fn new(small: usize, large: usize) -> Self {
        debug_assert!(small < large);
        Self { small, large }
    }
}

impl fmt::Display for InversionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.small, self.large)
    }
}

/// A filling of a Young diagram by `1..=n` with rows increasing to the right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowStandardTableau {
    rows: Vec<Vec<usize>>,
    shape: Partition,
    // positions[e - 1] = (row, column) of entry e
    positions: Vec<(usize, usize)>,
}

impl RowStandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lengths.contains(&0) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        let shape = Partition::new(lengths)?;
        let n = shape.size();
        let mut positions = vec![None; n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e == 0 || e > n {
                    return Err(Error::InvalidTableau(format!(
                        "entry {e} is outside 1..={n}"
                    )));
                }
                if positions[e - 1].replace((r, c)).is_some() {
                    return Err(Error::InvalidTableau(format!("entry {e} appears twice")));
                }
                if c > 0 && row[c - 1] >= e {
                    return Err(Error::InvalidTableau(format!(
                        "row {} is not increasing",
                        r + 1
                    )));
                }
            }
        }
        let positions = positions.into_iter().map(Option::unwrap).collect();
        Ok(Self {
            rows,
            shape,
            positions,
        })
    }

    /// Builds the tableau whose entry `k` sits in row `word[k - 1]` (0-based rows).
    pub(crate) fn from_row_word(shape: &Partition, word: &[usize]) -> Self {
        let mut rows: Vec<Vec<usize>> = shape
            .parts()
            .iter()
            .map(|&l| Vec::with_capacity(l))
            .collect();
        let mut positions = Vec::with_capacity(word.len());
        for (k, &r) in word.iter().enumerate() {
            positions.push((r, rows[r].len()));
            rows[r].push(k + 1);
        }
        debug_assert!(rows
            .iter()
            .zip(shape.parts())
            .all(|(row, &l)| row.len() == l));
        Self {
            rows,
            shape: shape.clone(),
            positions,
        }
    }

    fn from_rows_unchecked(rows: Vec<Vec<usize>>, shape: Partition) -> Self {
        let n = shape.size();
        let mut positions = vec![(0, 0); n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                positions[e - 1] = (r, c);
            }
        }
        let t = Self {
            rows,
            shape,
            positions,
        };
        debug_assert!(Self::new(t.rows.clone()).is_ok(), "not row-standard: {t}");
        t
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.positions.len()
    }

    /// 0-based `(row, column)` of entry `e`.
    ///
    /// Panics if `e` is not in `1..=n`.
    pub fn position(&self, e: usize) -> (usize, usize) {
        self.positions[e - 1]
    }

    pub fn entry_at(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    pub fn right_neighbor(&self, e: usize) -> Option<usize> {
        let (r, c) = self.position(e);
        self.entry_at(r, c + 1)
    }

    pub fn above(&self, e: usize) -> Option<usize> {
        let (r, c) = self.position(e);
        r.checked_sub(1).and_then(|r| self.entry_at(r, c))
    }

    pub fn below(&self, e: usize) -> Option<usize> {
        let (r, c) = self.position(e);
        self.entry_at(r + 1, c)
    }

    /// Entries of column `col`, top to bottom.
    pub fn column(&self, col: usize) -> Vec<usize> {
        self.rows
            .iter()
            .map_while(|row| row.get(col).copied())
            .collect()
    }

    /// Row index (0-based) of each entry `1..=n`: the word used for enumeration order.
    pub fn row_word(&self) -> Vec<usize> {
        self.positions.iter().map(|&(r, _)| r).collect()
    }

    /// Whether the same-column pair `{a, b}` is an inversion.
    ///
    /// With `i < j`, the pair is an inversion when either one of them ends its row and
    /// `i` lies below `j`, or both have right neighbours `i'`, `j'` with `i' > j'`.
    /// Returns `false` for entries in different columns.
    pub fn is_inversion(&self, a: usize, b: usize) -> bool {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        let (ri, ci) = self.position(i);
        let (rj, cj) = self.position(j);
        if ci != cj || i == j {
            return false;
        }
        match (self.entry_at(ri, ci + 1), self.entry_at(rj, cj + 1)) {
            (Some(i_right), Some(j_right)) => i_right > j_right,
            _ => ri > rj,
        }
    }

    /// All inversions, sorted.
    pub fn inversions(&self) -> Vec<InversionPair> {
        let width = self.shape.parts().first().copied().unwrap_or(0);
        let mut out = Vec::new();
        for col in 0..width {
            let column = self.column(col);
            for (x, &a) in column.iter().enumerate() {
                for &b in &column[x + 1..] {
                    if self.is_inversion(a, b) {
                        out.push(InversionPair::new(a.min(b), a.max(b)));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Number of inversions.
    pub fn n_inv(&self) -> usize {
        let width = self.shape.parts().first().copied().unwrap_or(0);
        let mut count = 0;
        for col in 0..width {
            let column = self.column(col);
            for (x, &a) in column.iter().enumerate() {
                count += column[x + 1..]
                    .iter()
                    .filter(|&&b| self.is_inversion(a, b))
                    .count();
            }
        }
        count
    }

    pub fn is_standard(&self) -> bool {
        let width = self.shape.parts().first().copied().unwrap_or(0);
        (0..width).all(|col| self.column(col).windows(2).all(|w| w[0] < w[1]))
    }

    /// Sorts every column increasingly downward.
    pub fn standardize(&self) -> StandardTableau {
        let mut rows = self.rows.clone();
        let width = self.shape.parts().first().copied().unwrap_or(0);
        for col in 0..width {
            let mut column = self.column(col);
            column.sort_unstable();
            for (row, e) in rows.iter_mut().zip(column) {
                row[col] = e;
            }
        }
        StandardTableau(Self::from_rows_unchecked(rows, self.shape.clone()))
    }

    /// `pi^(0), ..., pi^(n)` where `pi^(i)[p]` counts entries `<= i` in row `p`.
    pub fn prefix_composition_chain(&self) -> Vec<Composition> {
        let mut counts = vec![0; self.shape.len()];
        let mut chain = Vec::with_capacity(self.n() + 1);
        chain.push(Composition::new(counts.clone()));
        for &(r, _) in &self.positions {
            counts[r] += 1;
            chain.push(Composition::new(counts.clone()));
        }
        chain
    }

    /// Swaps the first `len` entries of rows `upper` and `upper + 1`.
    pub(crate) fn swap_row_prefixes(&self, upper: usize, len: usize) -> Self {
        let mut rows = self.rows.clone();
        let (top, bottom) = rows.split_at_mut(upper + 1);
        top[upper][..len].swap_with_slice(&mut bottom[0][..len]);
        let mut positions = self.positions.clone();
        for r in [upper, upper + 1] {
            for (c, &e) in rows[r][..len].iter().enumerate() {
                positions[e - 1] = (r, c);
            }
        }
        Self {
            rows,
            shape: self.shape.clone(),
            positions,
        }
    }

    /// Compact digit form (`"248/367/15"`), only meaningful when `n <= 9`.
    pub fn to_compact_string(&self) -> String {
        self.rows
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect::<String>())
            .collect::<Vec<_>>()
            .join("/")
    }
}

impl fmt::Display for RowStandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("/")?;
            }
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses `"2,4,8/3,6,7/1,5"`, or the digit shorthand `"248/367/15"` when the string
/// contains no comma.
pub(crate) fn parse_rows(s: &str, what: &'static str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let err = |reason: String| Error::Parse {
        what,
        input: s.to_string(),
        reason,
    };
    let shorthand = !s.contains(',');
    s.split('/')
        .map(|row| {
            let row = row.trim();
            if row.is_empty() {
                return Err(err("empty row".into()));
            }
            if shorthand {
                row.chars()
                    .map(|ch| {
                        ch.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| err(format!("unexpected character {ch:?}")))
                    })
                    .collect()
            } else {
                row.split(',')
                    .map(|tok| tok.trim().parse::<usize>().map_err(|e| err(e.to_string())))
                    .collect()
            }
        })
        .collect()
}

impl FromStr for RowStandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = parse_rows(s, "tableau")?;
        if !s.contains(',') && rows.iter().map(Vec::len).sum::<usize>() > 9 {
            return Err(Error::Parse {
                what: "tableau",
                input: s.to_string(),
                reason: "digit shorthand requires n <= 9; separate entries with commas".into(),
            });
        }
        Self::new(rows)
    }
}

/// A row-standard tableau whose columns also increase downward.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau(RowStandardTableau);

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::try_from(RowStandardTableau::new(rows)?)
    }

    /// The tableau whose entries `i+1..` fill the boxes of `shapes[i+1] \ shapes[i]`,
    /// for a chain of partitions growing one box at a time from the empty one.
    pub fn from_chain(chain: &[Partition]) -> Result<Self> {
        let broken = |k| Error::BrokenChain { k };
        let Some(last) = chain.last() else {
            return Err(broken(0));
        };
        if !chain[0].is_empty() {
            return Err(broken(0));
        }
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); last.len()];
        for k in 1..chain.len() {
            let (prev, next) = (&chain[k - 1], &chain[k]);
            if next.size() != prev.size() + 1 || !prev.is_contained_in(next) {
                return Err(broken(k));
            }
            let row = (0..next.len())
                .find(|&r| prev.parts().get(r).copied().unwrap_or(0) != next.parts()[r])
                .ok_or(broken(k))?;
            rows[row].push(k);
        }
        Self::new(rows).map_err(|_| broken(chain.len() - 1))
    }

    pub fn as_row_standard(&self) -> &RowStandardTableau {
        &self.0
    }

    pub fn into_row_standard(self) -> RowStandardTableau {
        self.0
    }

    /// Shape of the subtableau of entries `1..=i`.
    pub fn prefix_shape(&self, i: usize) -> Partition {
        let mut lengths = vec![0; self.shape().len()];
        for e in 1..=i.min(self.n()) {
            lengths[self.position(e).0] += 1;
        }
        Partition::from_row_lengths(lengths).expect("prefixes of a standard tableau are partitions")
    }
}

impl TryFrom<RowStandardTableau> for StandardTableau {
    type Error = Error;

    fn try_from(t: RowStandardTableau) -> Result<Self> {
        if t.is_standard() {
            Ok(Self(t))
        } else {
            Err(Error::InvalidTableau(format!(
                "{t} has a column that does not increase downward"
            )))
        }
    }
}

impl Deref for StandardTableau {
    type Target = RowStandardTableau;

    fn deref(&self) -> &RowStandardTableau {
        &self.0
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::try_from(s.parse::<RowStandardTableau>()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> RowStandardTableau {
        s.parse().unwrap()
    }

    fn pairs(v: &[(usize, usize)]) -> Vec<InversionPair> {
        v.iter().map(|&(a, b)| InversionPair::new(a, b)).collect()
    }

    #[test]
    fn four_inversions_example() {
        let tau = t("2,4,8/3,6,7/1,5");
        assert_eq!(tau.inversions(), pairs(&[(1, 2), (4, 6), (5, 6), (7, 8)]));
        assert_eq!(tau.n_inv(), 4);
    }

    #[test]
    fn single_column_inversions() {
        let tau = t("3/1/2");
        assert_eq!(tau.inversions(), pairs(&[(1, 3), (2, 3)]));
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(t("3,4/1,2/5").standardize().to_string(), "1,2/3,4/5");
        assert_eq!(
            t("2,4,8/3,6,7/1,5").standardize().to_string(),
            "1,4,7/2,5,8/3,6"
        );
        let standard = t("1,3/2,4");
        assert_eq!(*standard.standardize(), standard);
    }

    #[test]
    fn composition_chain() {
        let chain = t("1,2/3").prefix_composition_chain();
        assert_eq!(chain.len(), 4);
        assert_eq!(chain[0].entries(), &[0, 0]);
        assert_eq!(chain[2].entries(), &[2, 0]);
        assert_eq!(chain[3].entries(), &[2, 1]);

        let standard = t("1,2/3,4/5").prefix_composition_chain();
        assert!(standard.iter().all(Composition::is_weakly_decreasing));
        let other = t("3,4/1,2/5").prefix_composition_chain();
        assert!(!other.iter().all(Composition::is_weakly_decreasing));
    }

    #[test]
    fn text_formats() {
        assert_eq!(t("248/367/15"), t("2,4,8/3,6,7/1,5"));
        assert_eq!(t("2,4,8/3,6,7/1,5").to_compact_string(), "248/367/15");
        let big = t("1,2,3,4,5,6,7,8,9,10");
        assert_eq!(big.n(), 10);
        assert_eq!(big.to_string(), "1,2,3,4,5,6,7,8,9,10");
        assert_eq!(t("").n(), 0);
    }

    #[test]
    fn rejects_malformed() {
        assert!("2,1".parse::<RowStandardTableau>().is_err());
        assert!("1,2/2".parse::<RowStandardTableau>().is_err());
        assert!("1/2,3".parse::<RowStandardTableau>().is_err());
        assert!("1,4/2".parse::<RowStandardTableau>().is_err());
        assert!("1,a".parse::<RowStandardTableau>().is_err());
        assert!("2/1".parse::<StandardTableau>().is_err());
    }

    #[test]
    fn from_chain_roundtrip() {
        let tab: StandardTableau = "1,3,4/2,6/5".parse().unwrap();
        let chain: Vec<Partition> = (0..=tab.n()).map(|i| tab.prefix_shape(i)).collect();
        assert_eq!(StandardTableau::from_chain(&chain).unwrap(), tab);
        let bad = vec![Partition::empty(), "2".parse().unwrap()];
        assert_eq!(
            StandardTableau::from_chain(&bad),
            Err(Error::BrokenChain { k: 1 })
        );
    }
}
