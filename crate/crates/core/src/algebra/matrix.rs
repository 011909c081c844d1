use std::fmt;

use super::{AlgebraError, ModRing};

/// Dense row-major matrix over `Z/n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixZn {
    ring: ModRing,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl MatrixZn {
    pub fn zeros(ring: ModRing, rows: usize, cols: usize) -> Self {
        Self {
            ring,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(ring: ModRing, size: usize) -> Self {
        let mut m = Self::zeros(ring, size, size);
        for i in 0..size {
            m.data[i * size + i] = 1;
        }
        m
    }

    /// Build from row-major data; entries are reduced into `[0, n)`.
    pub fn from_data(
        ring: ModRing,
        rows: usize,
        cols: usize,
        data: Vec<u32>,
    ) -> Result<Self, AlgebraError> {
        if data.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        let n = ring.modulus();
        let data = data.into_iter().map(|x| x % n).collect();
        Ok(Self {
            ring,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(ring: ModRing, cols: usize, rows: &[Vec<u32>]) -> Result<Self, AlgebraError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(AlgebraError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Self::from_data(ring, rows.len(), cols, data)
    }

    pub fn from_i64_rows(ring: ModRing, rows: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let converted: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| ring.reduce(x)).collect())
            .collect();
        Self::from_rows(ring, cols, &converted)
    }

    pub fn ring(&self) -> ModRing {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.ring.modulus();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ring, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.rows || self.ring != other.ring {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let n = self.ring.modulus() as u64;
        let mut out = Self::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![0u64; other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (j, slot) in acc.iter_mut().enumerate() {
                    *slot = (*slot + a * other.get(k, j) as u64) % n;
                }
            }
            for (j, v) in acc.into_iter().enumerate() {
                out.data[i * other.cols + j] = v as u32;
            }
        }
        Ok(out)
    }

    /// `self * x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[u32]) -> Result<Vec<u32>, AlgebraError> {
        if x.len() != self.cols {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        let n = self.ring.modulus() as u64;
        Ok((0..self.rows)
            .map(|r| {
                (self
                    .row(r)
                    .iter()
                    .zip(x)
                    .map(|(&a, &b)| a as u64 * b as u64 % n)
                    .sum::<u64>()
                    % n) as u32
            })
            .collect())
    }

    /// `x * self` for a row vector `x`.
    pub fn vec_mul(&self, x: &[u32]) -> Result<Vec<u32>, AlgebraError> {
        if x.len() != self.rows {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.rows,
                found: x.len(),
            });
        }
        Ok(combine_rows(self.ring, self.cols, x, |r| self.row(r)))
    }
}

/// `sum_r coeffs[r] * row(r)` over `Z/n`.
pub(crate) fn combine_rows<'a, F>(ring: ModRing, width: usize, coeffs: &[u32], row: F) -> Vec<u32>
where
    F: Fn(usize) -> &'a [u32],
{
    let n = ring.modulus() as u64;
    let mut acc = vec![0u64; width];
    for (r, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for (slot, &v) in acc.iter_mut().zip(row(r)) {
            *slot = (*slot + c as u64 * v as u64) % n;
        }
    }
    acc.into_iter().map(|v| v as u32).collect()
}

impl fmt::Debug for MatrixZn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "MatrixZn(n={}, {}x{})",
            self.ring.modulus(),
            self.rows,
            self.cols
        )?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let r = ModRing::new(5).unwrap();
        let a = MatrixZn::from_i64_rows(r, &[vec![1, 2], vec![3, 4]]).unwrap();
        let b = MatrixZn::from_i64_rows(r, &[vec![0, 1], vec![1, 0]]).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.row_vecs(), vec![vec![2, 1], vec![4, 3]]);
        assert_eq!(a.transpose().row_vecs(), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(a.mul_vec(&[1, 1]).unwrap(), vec![3, 2]);
        assert_eq!(a.vec_mul(&[1, 1]).unwrap(), vec![4, 1]);
    }

    #[test]
    fn entry_count_is_checked() {
        let r = ModRing::new(3).unwrap();
        assert!(MatrixZn::from_data(r, 2, 2, vec![0; 3]).is_err());
    }
}
