//! Dense matrices over exact rationals, with rank and determinant by
//! fraction-free Bareiss elimination on a denominator-cleared integer copy.

use num::rational::BigRational;
use num::{BigInt, Integer, One, Zero};

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &BigRational) {
        let idx = r * self.cols + c;
        self.data[idx] = &self.data[idx] + v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_to(i, j, &(a * b));
                }
            }
        }
        Ok(out)
    }

    /// Integer copy with each row scaled by the lcm of its denominators
    /// (row scaling preserves rank; the scales feed the determinant).
    fn cleared(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut rows = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut l = BigInt::one();
            for c in 0..self.cols {
                l = l.lcm(self.get(r, c).denom());
            }
            let row: Vec<BigInt> = (0..self.cols)
                .map(|c| {
                    let v = self.get(r, c);
                    v.numer() * (&l / v.denom())
                })
                .collect();
            rows.push(row);
            scales.push(l);
        }
        (rows, scales)
    }

    /// Exact rank by Bareiss elimination.
    pub fn rank(&self) -> usize {
        let (mut m, _) = self.cleared();
        bareiss_rank(&mut m)
    }

    /// Exact determinant (square matrices).
    pub fn det(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return BigRational::one();
        }
        let (mut m, scales) = self.cleared();
        let d = bareiss_det(&mut m);
        let scale = scales.into_iter().fold(BigInt::one(), |acc, s| acc * s);
        BigRational::new(d, scale)
    }
}

/// Fraction-free Bareiss elimination; returns the number of pivots.
#[allow(clippy::needless_range_loop)]
fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    let mut pivot_row = 0usize;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(found) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, found);
        let pivot = m[pivot_row][col].clone();
        for r in (pivot_row + 1)..rows {
            let factor = m[r][col].clone();
            for c in (col + 1)..cols {
                let v = &pivot * &m[r][c] - &factor * &m[pivot_row][c];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[r][c] = q;
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot;
        pivot_row += 1;
        rank += 1;
    }
    rank
}

/// Fraction-free Bareiss determinant of a square integer matrix.
fn bareiss_det(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n {
        let Some(found) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if found != k {
            m.swap(k, found);
            sign = -sign;
        }
        for r in (k + 1)..n {
            for c in (k + 1)..n {
                let v = &m[k][k] * &m[r][c] - &m[r][k] * &m[k][c];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[r][c] = q;
            }
            m[r][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}
