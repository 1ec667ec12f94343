//! Small exact linear-algebra helpers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rootsys::{invert, Q};

/// Rank over Q of an integer matrix (fraction-free Bareiss elimination).
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let p = m[rank][col].clone();
        for r in rank + 1..nrows {
            if m[r][col].is_zero() {
                for c in col + 1..ncols {
                    if !m[r][c].is_zero() {
                        m[r][c] = &m[r][c] * &p / &prev;
                    }
                }
                continue;
            }
            let f = m[r][col].clone();
            for c in col + 1..ncols {
                let v = &m[r][c] * &p - &m[rank][c] * &f;
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}

/// Left inverse `(CᵀC)⁻¹Cᵀ` of a full-column-rank integer matrix `c`
/// (rows × cols); `None` if the columns are dependent.
pub fn left_inverse(c: &[Vec<i64>]) -> Option<Vec<Vec<Q>>> {
    let rows = c.len();
    let cols = c.first().map_or(0, |r| r.len());
    if cols == 0 {
        return Some(Vec::new());
    }
    let ctc: Vec<Vec<Q>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| Q::from_integer((0..rows).map(|k| c[k][i] * c[k][j]).sum()))
                .collect()
        })
        .collect();
    let inv = invert(&ctc)?;
    Some(
        (0..cols)
            .map(|i| {
                (0..rows)
                    .map(|k| (0..cols).map(|j| inv[i][j] * c[k][j]).sum())
                    .collect()
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(rank_i64(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_i64(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_i64(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]), 3);
        assert_eq!(rank_i64(&[vec![0, 1], vec![0, 3], vec![1, 0]]), 2);
        assert_eq!(rank_i64(&[]), 0);
    }

    #[test]
    fn left_inverse_recovers() {
        let c = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, 0, 1], vec![0, -2, 1]];
        let l = left_inverse(&c).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let v: Q = (0..4).map(|k| l[i][k] * c[k][j]).sum();
                assert_eq!(v, Q::from_integer((i == j) as i64));
            }
        }
        assert!(left_inverse(&[vec![1, 2], vec![2, 4]]).is_none());
    }
}
