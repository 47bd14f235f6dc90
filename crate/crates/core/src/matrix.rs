//! Exact integer rank via fraction-free elimination.

use num_bigint::BigInt;
use num_traits::Zero;

/// Dense row-major integer matrix used for boundary ranks.
#[derive(Debug, Clone)]
pub(crate) struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl DenseMatrix {
    pub(crate) fn new(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: i64) {
        self.data[row * self.cols + col] = value;
    }

    /// Rank over the rationals, computed by Bareiss elimination in `i64`
    /// with a transparent retry over arbitrary-precision integers if any
    /// intermediate product overflows.
    pub(crate) fn rank(&self) -> usize {
        match self.rank_i64() {
            Some(r) => r,
            None => self.rank_bigint(),
        }
    }

    fn rank_i64(&self) -> Option<usize> {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let at = |a: &[i64], r: usize, c: usize| a[r * cols + c];
        let mut rank = 0usize;
        let mut prev = 1i64;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| at(&a, r, col) != 0) else {
                continue;
            };
            if pivot != rank {
                for c in 0..cols {
                    a.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let lead = at(&a, rank, col);
            for r in (rank + 1)..rows {
                let factor = at(&a, r, col);
                for c in (col + 1)..cols {
                    let left = lead.checked_mul(at(&a, r, c))?;
                    let right = factor.checked_mul(at(&a, rank, c))?;
                    a[r * cols + c] = left.checked_sub(right)? / prev;
                }
                a[r * cols + col] = 0;
            }
            prev = lead;
            rank += 1;
        }
        Some(rank)
    }

    fn rank_bigint(&self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut a: Vec<BigInt> = self.data.iter().map(|&v| BigInt::from(v)).collect();
        let mut rank = 0usize;
        let mut prev = BigInt::from(1);
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
                continue;
            };
            if pivot != rank {
                for c in 0..cols {
                    a.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let lead = a[rank * cols + col].clone();
            for r in (rank + 1)..rows {
                let factor = a[r * cols + col].clone();
                for c in (col + 1)..cols {
                    let value = (&lead * &a[r * cols + c] - &factor * &a[rank * cols + c]) / &prev;
                    a[r * cols + c] = value;
                }
                a[r * cols + col] = BigInt::zero();
            }
            prev = lead;
            rank += 1;
        }
        rank
    }
}
