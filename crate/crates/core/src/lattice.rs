//! Exact rank of integer matrices.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result};

/// Rank over `Q` by Bareiss fraction-free elimination in arbitrary precision.
///
/// Every intermediate entry is a minor of the input, and each division by
/// the previous pivot is exact.
pub fn integer_rank<R: AsRef<[i64]>>(rows: &[R]) -> Result<usize> {
    let Some(first) = rows.first() else {
        return Ok(0);
    };
    let cols = first.as_ref().len();
    for (row, r) in rows.iter().enumerate() {
        let len = r.as_ref().len();
        if len != cols {
            return Err(Error::RaggedMatrix { row, len, expected: cols });
        }
    }
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect()).collect();
    let n_rows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        if rank == n_rows {
            break;
        }
        let Some(pivot) = (rank..n_rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..n_rows {
            for c in col + 1..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    Ok(rank)
}
