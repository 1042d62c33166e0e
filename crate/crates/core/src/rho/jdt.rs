use std::fmt;

use super::RhoSequence;
use crate::error::{Error, Result};
use crate::tableau::{Partition, RowStandardTableau, StandardTableau};

/// A standard filling of the skew diagram `outer / inner` by distinct positive
/// integers, increasing along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewTableau {
    outer: Partition,
    inner: Partition,
    // rows[r] has outer[r] slots; the first inner[r] are None
    rows: Vec<Vec<Option<usize>>>,
}

impl SkewTableau {
    /// Builds from rows listing only the skew cells of each row.
    pub fn new(inner: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let invalid = |msg: String| Error::InvalidSkewTableau(msg);
        let lengths: Vec<usize> = rows
            .iter()
            .enumerate()
            .map(|(r, row)| row.len() + inner.parts().get(r).copied().unwrap_or(0))
            .collect();
        if inner.len() > lengths.len() {
            return Err(invalid("inner shape has more rows than the tableau".into()));
        }
        let outer = Partition::new(lengths)
            .map_err(|e| invalid(format!("outer shape is not a partition: {e}")))?;
        let grid: Vec<Vec<Option<usize>>> = rows
            .into_iter()
            .enumerate()
            .map(|(r, row)| {
                let skip = inner.parts().get(r).copied().unwrap_or(0);
                std::iter::repeat_n(None, skip)
                    .chain(row.into_iter().map(Some))
                    .collect()
            })
            .collect();
        let s = Self {
            outer,
            inner,
            rows: grid,
        };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidSkewTableau(msg));
        if !self.inner.is_contained_in(&self.outer) {
            return invalid(format!("{} is not inside {}", self.inner, self.outer));
        }
        let mut seen = std::collections::HashSet::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                let Some(e) = *cell else { continue };
                if e == 0 || !seen.insert(e) {
                    return invalid(format!("entry {e} is zero or repeated"));
                }
                if let Some(Some(left)) = c.checked_sub(1).map(|c| row[c]) {
                    if left >= e {
                        return invalid(format!("row {} does not increase", r + 1));
                    }
                }
                if let Some(Some(up)) = r.checked_sub(1).map(|r| self.rows[r][c]) {
                    if up >= e {
                        return invalid(format!("column {} does not increase", c + 1));
                    }
                }
            }
        }
        Ok(())
    }

    /// The subtableau of `t` holding the entries `lo+1..=hi`.
    pub fn interval(t: &StandardTableau, lo: usize, hi: usize) -> Self {
        assert!(lo <= hi && hi <= t.n());
        let inner = t.prefix_shape(lo);
        let outer = t.prefix_shape(hi);
        let rows = (0..outer.len())
            .map(|r| {
                (0..outer.parts()[r])
                    .map(|c| {
                        let e = t.entry_at(r, c).expect("prefix cells lie in the tableau");
                        (e > lo).then_some(e)
                    })
                    .collect()
            })
            .collect();
        Self { outer, inner, rows }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn num_cells(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Filled cells as `(row, column, entry)`, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(c, cell)| cell.map(|e| (r, c, e)))
        })
    }

    /// Cells of the inner shape that can be slid into, top to bottom.
    pub fn inner_corners(&self) -> Vec<(usize, usize)> {
        self.inner.corners()
    }

    /// Slides the empty inner corner `(row, col)` outward.
    pub fn slide(&mut self, row: usize, col: usize) -> Result<()> {
        if !self.inner_corners().contains(&(row, col)) {
            return Err(Error::InvalidSkewTableau(format!(
                "({}, {}) is not an inner corner",
                row + 1,
                col + 1
            )));
        }
        let (mut r, mut c) = (row, col);
        loop {
            let right = self.rows[r].get(c + 1).copied().flatten();
            let below = self
                .rows
                .get(r + 1)
                .and_then(|next| next.get(c))
                .copied()
                .flatten();
            let from = match (right, below) {
                (Some(a), Some(b)) if b < a => (r + 1, c),
                (Some(_), _) => (r, c + 1),
                (None, Some(_)) => (r + 1, c),
                (None, None) => break,
            };
            self.rows[r][c] = self.rows[from.0][from.1].take();
            (r, c) = from;
        }
        debug_assert_eq!(self.rows[r].len(), c + 1);
        self.rows[r].pop();
        if self.rows[r].is_empty() {
            self.rows.pop();
        }
        self.outer = Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("a slide leaves a partition");
        self.inner = self
            .inner
            .remove_box(row)
            .expect("inner corner is removable");
        Ok(())
    }

    /// Rectifies, letting `choose` pick which inner corner to slide at each step.
    pub fn rectify_with(&self, mut choose: impl FnMut(&[(usize, usize)]) -> usize) -> SkewTableau {
        let mut current = self.clone();
        while !current.inner.is_empty() {
            let corners = current.inner_corners();
            let (r, c) = corners[choose(&corners)];
            current.slide(r, c).expect("chosen cell is an inner corner");
        }
        current
    }

    /// Rectifies, always sliding the lexicographically last inner corner.
    pub fn rectify(&self) -> SkewTableau {
        self.rectify_with(|corners| corners.len() - 1)
    }

    /// Shape of the rectification.
    pub fn rectified_shape(&self) -> Partition {
        self.rectify().outer
    }

    /// For a straight-shape tableau, relabels the entries by rank as `1..=m`.
    pub fn to_standard(&self) -> Result<StandardTableau> {
        if !self.inner.is_empty() {
            return Err(Error::InvalidSkewTableau("inner shape is not empty".into()));
        }
        let mut entries: Vec<usize> = self.cells().map(|(_, _, e)| e).collect();
        entries.sort_unstable();
        let rank = |e: usize| entries.binary_search(&e).unwrap() + 1;
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|cell| rank(cell.unwrap())).collect())
            .collect();
        StandardTableau::try_from(RowStandardTableau::new(rows)?)
    }
}

impl fmt::Display for SkewTableau {
    /// Inner cells print as `.`, e.g. `".,2/1"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| cell.map_or(".".to_string(), |e| e.to_string()))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

/// Jeu de taquin rectification, with entries renumbered `1..=m` by rank.
pub fn jdt_rectify(s: &SkewTableau) -> StandardTableau {
    s.rectify()
        .to_standard()
        .expect("rectification of a standard skew tableau is standard")
}

/// The standard tableau `S` attached to `t` by `rho`: entry `k` of `S` occupies the box
/// added from `Y^(k-1)` to `Y^(k)`, where `Y^(k)` is the shape of the rectified
/// subtableau of entries `i_k+1..=j_k`.
pub fn relabel_component(t: &StandardTableau, rho: &RhoSequence) -> Result<StandardTableau> {
    if rho.n() != t.n() {
        return Err(Error::ShapeMismatch {
            left: format!("tableau of size {}", t.n()),
            right: format!("rho sequence for n = {}", rho.n()),
        });
    }
    let chain: Vec<Partition> = rho
        .pairs()
        .iter()
        .map(|&(i, j)| SkewTableau::interval(t, i, j).rectified_shape())
        .collect();
    StandardTableau::from_chain(&chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{enumerate_standard, DEFAULT_CAP};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn shape(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Row insertion of the reading word (rows bottom to top, left to right).
    fn insertion_oracle(s: &SkewTableau) -> Vec<Vec<usize>> {
        let mut word: Vec<usize> = Vec::new();
        let mut cells: Vec<(usize, usize, usize)> = s.cells().collect();
        cells.sort_by_key(|&(r, c, _)| (std::cmp::Reverse(r), c));
        word.extend(cells.into_iter().map(|(_, _, e)| e));
        let mut p: Vec<Vec<usize>> = Vec::new();
        for x in word {
            let mut bump = x;
            let mut row = 0;
            loop {
                if row == p.len() {
                    p.push(vec![bump]);
                    break;
                }
                match p[row].iter().position(|&y| y > bump) {
                    Some(pos) => {
                        bump = std::mem::replace(&mut p[row][pos], bump);
                        row += 1;
                    }
                    None => {
                        p[row].push(bump);
                        break;
                    }
                }
            }
        }
        p
    }

    #[test]
    fn straight_shape_is_fixed() {
        let s = SkewTableau::new(Partition::empty(), vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(s.rectify(), s);
        assert_eq!(jdt_rectify(&s).to_string(), "1,3/2");
    }

    #[test]
    fn two_cell_rectification() {
        // . 2
        // 1
        let s = SkewTableau::new(shape("1"), vec![vec![2], vec![1]]).unwrap();
        assert_eq!(s.to_string(), ".,2/1");
        assert_eq!(jdt_rectify(&s).to_string(), "1,2");
        assert_eq!(insertion_oracle(&s), vec![vec![1, 2]]);
        // . 1
        // 2
        let s = SkewTableau::new(shape("1"), vec![vec![1], vec![2]]).unwrap();
        assert_eq!(jdt_rectify(&s).to_string(), "1/2");
    }

    #[test]
    fn rejects_non_standard_skew() {
        assert!(SkewTableau::new(shape("1"), vec![vec![3, 2]]).is_err());
        assert!(SkewTableau::new(shape("1"), vec![vec![1], vec![2, 3]]).is_ok());
        assert!(SkewTableau::new(shape("1"), vec![vec![3], vec![1, 2]]).is_err());
        assert!(SkewTableau::new(shape("2"), vec![vec![1], vec![2]]).is_ok());
        assert!(SkewTableau::new(shape("1,1"), vec![vec![5]]).is_err());
        let s = SkewTableau::new(shape("1"), vec![vec![2], vec![1]]).unwrap();
        assert!(s.clone().slide(1, 0).is_err());
    }

    #[test]
    fn rectification_matches_insertion_and_any_slide_order() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for n in 1..=7 {
            for sh in Partition::all_of(n) {
                for t in enumerate_standard(&sh, DEFAULT_CAP).unwrap() {
                    for lo in 0..=n {
                        for hi in lo..=n {
                            let skew = SkewTableau::interval(&t, lo, hi);
                            let straight = skew.rectify();
                            assert_eq!(straight.num_cells(), hi - lo);
                            let rows: Vec<Vec<usize>> = straight
                                .rows
                                .iter()
                                .map(|r| r.iter().map(|c| c.unwrap()).collect())
                                .collect();
                            assert_eq!(rows, insertion_oracle(&skew), "{skew}");
                            let random = skew.rectify_with(|c| rng.gen_range(0..c.len()));
                            assert_eq!(random, straight);
                            let first = skew.rectify_with(|_| 0);
                            assert_eq!(first, straight);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn spaltenstein_chain_is_identity() {
        for n in 0..=6 {
            let rho = RhoSequence::spaltenstein(n);
            for sh in Partition::all_of(n) {
                for t in enumerate_standard(&sh, DEFAULT_CAP).unwrap() {
                    assert_eq!(relabel_component(&t, &rho).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn single_row_is_fixed() {
        let t: StandardTableau = "1,2,3,4".parse().unwrap();
        for rho in RhoSequence::enumerate(4) {
            assert_eq!(relabel_component(&t, &rho).unwrap(), t);
        }
    }

    #[test]
    fn size_mismatch() {
        let t: StandardTableau = "1,2,3".parse().unwrap();
        assert!(matches!(
            relabel_component(&t, &RhoSequence::spaltenstein(4)),
            Err(Error::ShapeMismatch { .. })
        ));
    }
}
