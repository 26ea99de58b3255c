//! Dense exact matrices over the rationals with rank/kernel computations.
//!
//! Everything here is plain fraction-based Gaussian elimination. Matrices in
//! this crate are tiny (at most a few dozen rows), so clarity wins over
//! asymptotics; what matters is that ranks and kernels are exact.

use crate::rat::Rat;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatQ {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl MatQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatQ { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatQ::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        MatQ { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        MatQ::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rat::rat_int(v)).collect())
                .collect(),
        )
    }

    pub fn transpose(&self) -> MatQ {
        let mut t = MatQ::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &MatQ) -> MatQ {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = MatQ::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    /// Row-reduces in place to reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self[(row, col)].recip();
            for j in col..self.cols {
                let v = &self[(row, j)] * &inv;
                self[(row, j)] = v;
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let factor = self[(r, col)].clone();
                    for j in col..self.cols {
                        let v = &self[(r, j)] - &factor * &self[(row, j)];
                        self[(r, j)] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel {v : A v = 0}, one column vector per basis element.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// True when every column of `other` lies in the column span of `self`.
    pub fn column_span_contains(&self, other: &MatQ) -> bool {
        assert_eq!(self.rows, other.rows);
        let joint = self.hstack(other);
        self.rank() == joint.rank()
    }

    pub fn hstack(&self, other: &MatQ) -> MatQ {
        assert_eq!(self.rows, other.rows);
        let mut out = MatQ::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    pub fn from_columns(cols: Vec<Vec<Rat>>, rows: usize) -> MatQ {
        let mut out = MatQ::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for i in 0..rows {
                out[(i, j)] = col[i].clone();
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for MatQ {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for MatQ {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn rank_and_kernel_of_singular_matrix() {
        // rows: (1,2,3), (2,4,6), (1,0,1) -> rank 2, kernel spanned by (-1,-1,1)
        let m = MatQ::from_int_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn product_matches_hand_computation() {
        let a = MatQ::from_int_rows(&[vec![1, 2], vec![3, 4]]);
        let b = MatQ::from_int_rows(&[vec![0, 1], vec![1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab, MatQ::from_int_rows(&[vec![2, 1], vec![4, 3]]));
    }

    #[test]
    fn span_containment() {
        let a = MatQ::from_int_rows(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let b = MatQ::from_rows(vec![vec![rat(1, 2)], vec![rat(1, 2)], vec![rat_int(1)]]);
        assert!(a.column_span_contains(&b));
        let c = MatQ::from_int_rows(&[vec![0], vec![0], vec![1]]);
        assert!(!a.column_span_contains(&c));
    }
}
