//! Exact integer row reduction for rank and pivot bookkeeping.
//!
//! Rows are reduced fraction-free: incoming rational vectors are scaled to
//! integers, and each elimination step cross-multiplies then divides by the
//! content gcd, so no rounding ever occurs. The pivot of a row is its
//! highest nonzero column; the pivot set of the final reducer depends only
//! on the row space, not on insertion order. With columns listed in
//! canonical tree order this pushes pivots toward canonically large trees,
//! leaving the canonically least trees as the non-pivot complement.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub(crate) struct RowReducer {
    width: usize,
    rows: BTreeMap<usize, Vec<BigInt>>,
}

impl RowReducer {
    pub fn new(width: usize) -> Self {
        RowReducer {
            width,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Columns without a pivot, in increasing order.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.width)
            .filter(|c| !self.rows.contains_key(c))
            .collect()
    }

    /// Clears denominators and inserts; true if the rank grew.
    pub fn insert_rational(&mut self, row: &[BigRational]) -> bool {
        let lcm = row
            .iter()
            .filter(|c| !c.is_zero())
            .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let ints = row.iter().map(|c| (c * &lcm).to_integer()).collect();
        self.insert(ints)
    }

    /// Reduces the row against the stored rows and keeps it if independent;
    /// true if the rank grew.
    pub fn insert(&mut self, mut row: Vec<BigInt>) -> bool {
        assert_eq!(row.len(), self.width);
        loop {
            let Some(p) = row.iter().rposition(|c| !c.is_zero()) else {
                return false;
            };
            let Some(existing) = self.rows.get(&p) else {
                content_reduce(&mut row);
                if row[p].is_negative() {
                    for c in row.iter_mut() {
                        *c = -std::mem::take(c);
                    }
                }
                self.rows.insert(p, row);
                return true;
            };
            // Cross-multiplied elimination keeps everything integral.
            let a = existing[p].clone();
            let b = std::mem::replace(&mut row[p], BigInt::zero());
            for c in 0..p {
                if !existing[c].is_zero() || !row[c].is_zero() {
                    row[c] = &row[c] * &a - &existing[c] * &b;
                }
            }
            content_reduce(&mut row);
        }
    }
}

/// Divides every entry by the gcd of the row, keeping magnitudes small
/// between elimination steps.
fn content_reduce(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for c in row.iter() {
        if !c.is_zero() {
            g = g.gcd(c);
        }
    }
    if g.is_zero() || g == BigInt::from(1) {
        return;
    }
    for c in row.iter_mut() {
        if !c.is_zero() {
            *c /= &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(vals: &[i64]) -> Vec<BigInt> {
        vals.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn rank_of_identity() {
        let mut r = RowReducer::new(3);
        assert!(r.insert(row(&[1, 0, 0])));
        assert!(r.insert(row(&[0, 1, 0])));
        assert!(r.insert(row(&[0, 0, 1])));
        assert!(!r.insert(row(&[1, 1, 1])));
        assert_eq!(r.rank(), 3);
        assert!(r.non_pivots().is_empty());
    }

    #[test]
    fn dependent_rows_rejected() {
        let mut r = RowReducer::new(3);
        assert!(r.insert(row(&[1, 2, 3])));
        assert!(!r.insert(row(&[2, 4, 6])));
        assert!(r.insert(row(&[0, 1, 1])));
        assert!(!r.insert(row(&[1, 3, 4])));
        assert_eq!(r.rank(), 2);
    }

    #[test]
    fn pivots_prefer_high_columns() {
        let mut r = RowReducer::new(4);
        r.insert(row(&[1, 0, 1, 1]));
        r.insert(row(&[0, 1, 1, 0]));
        let pivots: Vec<usize> = r.pivots().collect();
        assert_eq!(pivots, [2, 3]);
        assert_eq!(r.non_pivots(), [0, 1]);
    }

    #[test]
    fn pivot_set_ignores_insertion_order() {
        let rows = [
            row(&[1, 1, 0, 2]),
            row(&[0, 3, 1, 0]),
            row(&[1, 4, 1, 2]),
            row(&[2, 0, 5, 1]),
        ];
        let mut orders = vec![
            vec![0, 1, 2, 3],
            vec![3, 2, 1, 0],
            vec![2, 0, 3, 1],
            vec![1, 3, 0, 2],
        ];
        let mut seen: Option<Vec<usize>> = None;
        for order in orders.drain(..) {
            let mut r = RowReducer::new(4);
            for i in order {
                r.insert(rows[i].clone());
            }
            let pivots: Vec<usize> = r.pivots().collect();
            match &seen {
                None => seen = Some(pivots),
                Some(first) => assert_eq!(&pivots, first),
            }
        }
    }

    #[test]
    fn rational_rows_cleared_exactly() {
        let mut r = RowReducer::new(2);
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        assert!(r.insert_rational(&[half.clone(), third.clone()]));
        // 1/2 x + 1/3 y spans the same line as 3x + 2y.
        assert!(!r.insert(row(&[3, 2])));
        assert!(!r.insert_rational(&[half, third]));
    }
}
