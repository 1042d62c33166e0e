use super::{Partition, RowStandardTableau, StandardTableau};
use crate::error::{Error, Result};

impl StandardTableau {
    /// The column-by-column filling: `1..=mu_1` down the first column, and so on.
    pub fn t_min(shape: &Partition) -> StandardTableau {
        let mut rows: Vec<Vec<usize>> = shape
            .parts()
            .iter()
            .map(|&l| Vec::with_capacity(l))
            .collect();
        let mut next = 1;
        for &height in shape.conjugate().parts() {
            for row in rows.iter_mut().take(height) {
                row.push(next);
                next += 1;
            }
        }
        let t = RowStandardTableau::new(rows).expect("column filling is row-standard");
        StandardTableau::try_from(t).expect("column filling is standard")
    }

    /// Dominance order: `self ⪯ other` when, for every prefix `1..=i` and every `q`,
    /// the prefix of `self` has at least as many boxes in its first `q` columns.
    pub fn dominance_leq(&self, other: &StandardTableau) -> Result<bool> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                left: self.shape().to_string(),
                right: other.shape().to_string(),
            });
        }
        let width = self.shape().parts().first().copied().unwrap_or(0);
        let mut mine = vec![0usize; width];
        let mut theirs = vec![0usize; width];
        for e in 1..=self.n() {
            mine[self.position(e).1] += 1;
            theirs[other.position(e).1] += 1;
            let (mut a, mut b) = (0, 0);
            for q in 0..width {
                a += mine[q];
                b += theirs[q];
                if a < b {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{enumerate_standard, DEFAULT_CAP};

    fn st(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn t_min_examples() {
        let shape = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(StandardTableau::t_min(&shape("3,2,2")), st("1,4,7/2,5/3,6"));
        assert_eq!(StandardTableau::t_min(&shape("4")), st("1,2,3,4"));
        assert_eq!(StandardTableau::t_min(&shape("2,2,1")), st("1,4/2,5/3"));
    }

    #[test]
    fn two_by_two() {
        let low = st("1,3/2,4");
        let high = st("1,2/3,4");
        assert!(low.dominance_leq(&high).unwrap());
        assert!(!high.dominance_leq(&low).unwrap());
        assert!(high.dominance_leq(&high).unwrap());
    }

    #[test]
    fn shape_mismatch() {
        assert!(matches!(
            st("1,2").dominance_leq(&st("1/2")),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn partial_order_axioms_exhaustive() {
        for n in 0..=6 {
            for shape in Partition::all_of(n) {
                let all: Vec<StandardTableau> =
                    enumerate_standard(&shape, DEFAULT_CAP).unwrap().collect();
                let tmin = StandardTableau::t_min(&shape);
                let leq = |a: &StandardTableau, b: &StandardTableau| a.dominance_leq(b).unwrap();
                for a in &all {
                    assert!(leq(a, a));
                    assert!(leq(&tmin, a));
                    for b in &all {
                        if a != b {
                            assert!(!(leq(a, b) && leq(b, a)), "{a} {b}");
                        }
                        for c in &all {
                            if leq(a, b) && leq(b, c) {
                                assert!(leq(a, c));
                            }
                        }
                    }
                }
            }
        }
    }
}
