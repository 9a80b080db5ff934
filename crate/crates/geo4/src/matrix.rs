//! Dense integer matrices with checked arithmetic.
//!
//! Everything downstream (symplectic representations, Smith normal form,
//! relator matrices) needs exact integer linear algebra on small dense
//! matrices. Entries are `i128`; products use checked arithmetic so an
//! overflow aborts loudly instead of wrapping.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat { rows: r, cols: c, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[i128] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = IntMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a.checked_mul(rhs[(k, j)]).expect("integer overflow in matrix product");
                    out[(i, j)] = out[(i, j)].checked_add(prod).expect("integer overflow in matrix product");
                }
            }
        }
        out
    }

    pub fn neg(&self) -> IntMat {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = -*v;
        }
        out
    }

    pub fn apply(&self, v: &[i128]) -> Vec<i128> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(0i128, |acc, j| {
                    acc.checked_add(self[(i, j)].checked_mul(v[j]).expect("overflow")).expect("overflow")
                })
            })
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i128 {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut m = self.clone();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[(k, k)] == 0 {
                let Some(p) = (k + 1..n).find(|&i| m[(i, k)] != 0) else {
                    return 0;
                };
                for j in 0..n {
                    let tmp = m[(k, j)];
                    m[(k, j)] = m[(p, j)];
                    m[(p, j)] = tmp;
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(k, k)].checked_mul(m[(i, j)]).expect("overflow")
                        - m[(i, k)].checked_mul(m[(k, j)]).expect("overflow");
                    m[(i, j)] = num / prev;
                }
                m[(i, k)] = 0;
            }
            prev = m[(k, k)];
        }
        sign * m[(n - 1, n - 1)]
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == IntMat::identity(self.rows)
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_identity() {
        let a = IntMat::from_rows(&[vec![1, 2], vec![3, 4]]);
        let id = IntMat::identity(2);
        assert_eq!(a.mul(&id), a);
        assert_eq!(id.mul(&a), a);
        let b = IntMat::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), IntMat::from_rows(&[vec![2, 1], vec![4, 3]]));
    }

    #[test]
    fn determinant() {
        let a = IntMat::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(a.det(), 6);
        let b = IntMat::from_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(b.det(), 0);
        let c = IntMat::from_rows(&[vec![0, 1], vec![-1, 0]]);
        assert_eq!(c.det(), 1);
    }

    #[test]
    fn apply_vector() {
        let a = IntMat::from_rows(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(a.apply(&[2, 3]), vec![5, 3]);
    }
}
