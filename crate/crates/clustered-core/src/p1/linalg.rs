//! Exact matrix rank over the integers, for the graded section maps.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Rank of an integer matrix (rows of equal length), by fraction-free
/// Gaussian elimination. Entry growth is kept down by dividing each updated
/// row by its content.
pub(crate) fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = match rows.first() {
        Some(r) => r.len(),
        None => return 0,
    };
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        let (above, below) = rows.split_at_mut(rank + 1);
        let prow = &above[rank];
        for row in below {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for c in col..ncols {
                let updated = &row[c] * &pivot - &prow[c] * &factor;
                row[c] = updated;
            }
            let content = row_content(&row[col..]);
            if !content.is_zero() {
                for v in row[col..].iter_mut() {
                    let reduced = &*v / &content;
                    *v = reduced;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

fn row_content(row: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for v in row {
        if !v.is_zero() {
            g = g.gcd(v);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(entries: &[&[i64]]) -> Vec<Vec<BigInt>> {
        entries
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(integer_rank(vec![]), 0);
        assert_eq!(integer_rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(integer_rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(integer_rank(m(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(integer_rank(m(&[&[0, 1, 0], &[0, 0, 5], &[0, 2, 3]])), 2);
    }

    #[test]
    fn rank_bounded_by_shape() {
        assert_eq!(integer_rank(m(&[&[1, 0, 0], &[0, 1, 0]])), 2);
        assert_eq!(integer_rank(m(&[&[1], &[2], &[3]])), 1);
    }

    #[test]
    fn rank_of_vandermonde_like() {
        // rows (1, a, a^2) for distinct a are independent
        let rows = m(&[&[1, 2, 4], &[1, 3, 9], &[1, 5, 25]]);
        assert_eq!(integer_rank(rows), 3);
    }
}
