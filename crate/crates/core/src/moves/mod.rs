//! Elementary moves `delta_i` between row-standard tableaux and the graph they span.
//!
//! A move at entry `i` swaps the row prefix ending at `i` with the equally long prefix
//! of the row directly above. Each applicable move changes the inversion count by
//! exactly one, and every tableau reaches its standardization in `n_inv` moves.

mod graph;

use std::collections::{HashMap, VecDeque};

pub use graph::{Edge, MoveGraph};

use crate::error::{Error, Result};
use crate::tableau::RowStandardTableau;

/// Reason the move at an entry is undefined, or `None` when it applies.
fn blocking_condition(t: &RowStandardTableau, i: usize) -> Option<&'static str> {
    let Some(j) = t.above(i) else {
        return Some("entry is in the first row");
    };
    if let Some(i_right) = t.right_neighbor(i) {
        if j >= i_right {
            return Some("entry above is not smaller than the right neighbour");
        }
    }
    if let Some(j_right) = t.right_neighbor(j) {
        if i >= j_right {
            return Some("entry is not smaller than the right neighbour of the entry above");
        }
    }
    let (lo, hi) = (i.min(j), i.max(j));
    let col = t.position(i).1;
    let between_ok = t
        .column(col)
        .into_iter()
        .filter(|&k| lo < k && k < hi)
        .all(|k| t.is_inversion(lo, k) != t.is_inversion(k, hi));
    if !between_ok {
        return Some("an intermediate entry of the column breaks the exclusive-inversion rule");
    }
    None
}

fn check_entry(t: &RowStandardTableau, i: usize) -> Result<()> {
    if i == 0 || i > t.n() {
        Err(Error::EntryOutOfRange { entry: i, n: t.n() })
    } else {
        Ok(())
    }
}

/// Whether `delta_i` is defined on `t`.
pub fn is_applicable(t: &RowStandardTableau, i: usize) -> Result<bool> {
    check_entry(t, i)?;
    Ok(blocking_condition(t, i).is_none())
}

/// Applies `delta_i`: swaps the prefix of the row of `i`, up to and including `i`,
/// with the prefix of the same length of the row above.
pub fn delta(t: &RowStandardTableau, i: usize) -> Result<RowStandardTableau> {
    check_entry(t, i)?;
    if let Some(reason) = blocking_condition(t, i) {
        return Err(Error::NotApplicable { entry: i, reason });
    }
    let (row, col) = t.position(i);
    Ok(t.swap_row_prefixes(row - 1, col + 1))
}

/// Every tableau reachable from `t` by one move, with the entry realizing it,
/// in increasing entry order.
pub fn neighbors(t: &RowStandardTableau) -> Vec<(usize, RowStandardTableau)> {
    (1..=t.n())
        .filter(|&i| blocking_condition(t, i).is_none())
        .map(|i| {
            let (row, col) = t.position(i);
            (i, t.swap_row_prefixes(row - 1, col + 1))
        })
        .collect()
}

/// The reduction sequence obtained by repeatedly taking the largest entry not yet in
/// its standardized place and moving its below-neighbour.
///
/// Applying the returned entries in order turns `t` into its standardization, and the
/// sequence has length `n_inv(t)`.
pub fn greedy_reduction(t: &RowStandardTableau) -> Vec<usize> {
    let target = t.standardize();
    let mut current = t.clone();
    let mut steps = Vec::new();
    while let Some(m) = (1..=current.n())
        .rev()
        .find(|&m| current.position(m) != target.position(m))
    {
        let i = current
            .below(m)
            .expect("the largest misplaced entry has an entry below it");
        current = delta(&current, i).expect("the move below the largest misplaced entry applies");
        steps.push(i);
    }
    steps
}

/// Shortest move sequence from `t` to its standardization, by breadth-first search.
///
/// Neighbours are expanded in increasing entry order, so the witness path is
/// reproducible. Fails once more than `cap` tableaux have been visited.
pub fn geodesic_path(t: &RowStandardTableau, cap: u64) -> Result<Vec<usize>> {
    let target = t.standardize().into_row_standard();
    let mut parent: HashMap<RowStandardTableau, Option<(RowStandardTableau, usize)>> =
        HashMap::new();
    parent.insert(t.clone(), None);
    let mut queue = VecDeque::from([t.clone()]);
    while let Some(current) = queue.pop_front() {
        if current == target {
            let mut path = Vec::new();
            let mut node = &current;
            while let Some((prev, label)) = &parent[node] {
                path.push(*label);
                node = prev;
            }
            path.reverse();
            return Ok(path);
        }
        for (label, next) in neighbors(&current) {
            if !parent.contains_key(&next) {
                if parent.len() as u64 >= cap {
                    return Err(Error::CapExceeded {
                        count: (parent.len() + 1).into(),
                        cap,
                    });
                }
                parent.insert(next.clone(), Some((current.clone(), label)));
                queue.push_back(next);
            }
        }
    }
    unreachable!("standardization is reachable from every row-standard tableau")
}

/// Move-graph distance from `t` to its standardization.
pub fn geodesic_to_standard(t: &RowStandardTableau, cap: u64) -> Result<usize> {
    geodesic_path(t, cap).map(|p| p.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{enumerate_row_standard, Partition, DEFAULT_CAP};

    fn t(s: &str) -> RowStandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn applicability_examples() {
        assert!(is_applicable(&t("3,4/1,2/5"), 2).unwrap());
        assert!(!is_applicable(&t("1,2/3,4/5"), 1).unwrap());
        assert!(is_applicable(&t("1,2/3,4/5"), 4).unwrap());
        assert_eq!(
            is_applicable(&t("1,2/3,4/5"), 6),
            Err(Error::EntryOutOfRange { entry: 6, n: 5 })
        );
        assert_eq!(
            is_applicable(&t("1,2/3,4/5"), 0),
            Err(Error::EntryOutOfRange { entry: 0, n: 5 })
        );
    }

    #[test]
    fn delta_examples() {
        let a = t("3,4/1,2/5");
        let b = t("1,2/3,4/5");
        assert_eq!(delta(&a, 2).unwrap(), b);
        assert_eq!(delta(&b, 4).unwrap(), a);
        assert_eq!(a.n_inv(), 1);
        assert_eq!(b.n_inv(), 0);
        assert!(matches!(
            delta(&b, 1),
            Err(Error::NotApplicable { entry: 1, .. })
        ));
    }

    #[test]
    fn right_neighbour_condition_blocks() {
        // 3 sits below 1; 3's right neighbour 4 is fine, but 1's right neighbour 2 < 3.
        assert!(!is_applicable(&t("1,2/3,4"), 3).unwrap());
    }

    #[test]
    fn geodesic_examples() {
        assert_eq!(
            geodesic_to_standard(&t("1,2/3,4/5"), DEFAULT_CAP).unwrap(),
            0
        );
        assert_eq!(
            geodesic_to_standard(&t("3,4/1,2/5"), DEFAULT_CAP).unwrap(),
            1
        );
        assert_eq!(
            geodesic_to_standard(&t("2,5/3,4/1"), DEFAULT_CAP).unwrap(),
            4
        );
        assert_eq!(t("2,5/3,4/1").n_inv(), 4);
    }

    #[test]
    fn geodesic_cap() {
        assert!(matches!(
            geodesic_to_standard(&t("2,5/3,4/1"), 3),
            Err(Error::CapExceeded { cap: 3, .. })
        ));
    }

    #[test]
    fn greedy_examples() {
        assert!(greedy_reduction(&t("1,2/3,4/5")).is_empty());
        assert_eq!(greedy_reduction(&t("3,4/1,2/5")), vec![2]);
    }

    #[test]
    fn unit_inversion_change_and_greedy_exhaustive() {
        for n in 0..=6 {
            for shape in Partition::all_of(n) {
                for tau in enumerate_row_standard(&shape, DEFAULT_CAP).unwrap() {
                    let inv = tau.n_inv();
                    for (i, next) in neighbors(&tau) {
                        let j = tau.above(i).unwrap();
                        let expected = if tau.is_inversion(i, j) {
                            inv - 1
                        } else {
                            inv + 1
                        };
                        assert_eq!(next.n_inv(), expected, "{tau} i={i}");
                        assert_eq!(next.standardize(), tau.standardize());
                        assert_eq!(delta(&next, j).unwrap(), tau);
                    }
                    let steps = greedy_reduction(&tau);
                    assert_eq!(steps.len(), inv);
                    let end = steps
                        .iter()
                        .fold(tau.clone(), |acc, &i| delta(&acc, i).unwrap());
                    assert_eq!(end, *tau.standardize());
                }
            }
        }
    }
}
