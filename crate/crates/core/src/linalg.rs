//! Dense exact linear algebra over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Row-major dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<BigRational>,
}

impl QMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        QMatrix { nrows, ncols, data: vec![BigRational::zero(); nrows * ncols] }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        QMatrix { nrows, ncols, data: rows.into_iter().flatten().collect() }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.ncols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.ncols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.ncols..(r + 1) * self.ncols]
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.echelonize().0
    }

    pub fn is_nonsingular(&self) -> bool {
        self.nrows == self.ncols && self.rank() == self.nrows
    }

    pub fn determinant(&self) -> BigRational {
        assert_eq!(self.nrows, self.ncols, "determinant of non-square matrix");
        let mut m = self.clone();
        let (rank, swaps, pivot_product) = m.echelonize();
        if rank < m.nrows {
            return BigRational::zero();
        }
        if swaps % 2 == 0 {
            pivot_product
        } else {
            -pivot_product
        }
    }

    /// Unique solution of `self * x = rhs` for a nonsingular square matrix.
    pub fn solve(&self, rhs: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(self.nrows, self.ncols, "solve requires a square matrix");
        assert_eq!(rhs.len(), self.nrows, "rhs length mismatch");
        let n = self.nrows;
        let w = n + 1;
        let mut aug = vec![BigRational::zero(); n * w];
        for r in 0..n {
            aug[r * w..r * w + n].clone_from_slice(self.row(r));
            aug[r * w + n] = rhs[r].clone();
        }
        // forward elimination with first-nonzero pivoting
        let mut pivot_row = 0;
        let mut pivot_cols = Vec::with_capacity(n);
        for col in 0..n {
            let Some(hit) = (pivot_row..n).find(|&r| !aug[r * w + col].is_zero()) else {
                return None;
            };
            if hit != pivot_row {
                for c in 0..w {
                    aug.swap(hit * w + c, pivot_row * w + c);
                }
            }
            let inv = aug[pivot_row * w + col].recip();
            for c in col..w {
                let v = &aug[pivot_row * w + c] * &inv;
                aug[pivot_row * w + c] = v;
            }
            for r in 0..n {
                if r != pivot_row && !aug[r * w + col].is_zero() {
                    let factor = aug[r * w + col].clone();
                    for c in col..w {
                        let v = &aug[r * w + c] - &factor * &aug[pivot_row * w + c];
                        aug[r * w + c] = v;
                    }
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        Some((0..n).map(|r| aug[r * w + n].clone()).collect())
    }

    /// In-place row echelon; returns (rank, row swaps, product of pivots).
    fn echelonize(&mut self) -> (usize, usize, BigRational) {
        let (n, m) = (self.nrows, self.ncols);
        let mut rank = 0;
        let mut swaps = 0;
        let mut pivot_product = BigRational::one();
        for col in 0..m {
            if rank == n {
                break;
            }
            let Some(hit) = (rank..n).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if hit != rank {
                for c in 0..m {
                    self.data.swap(hit * m + c, rank * m + c);
                }
                swaps += 1;
            }
            pivot_product *= self.get(rank, col);
            let inv = self.get(rank, col).recip();
            for c in col..m {
                let v = self.get(rank, c) * &inv;
                self.set(rank, c, v);
            }
            for r in rank + 1..n {
                if !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for c in col..m {
                        let v = self.get(r, c) - &factor * self.get(rank, c);
                        self.set(r, c, v);
                    }
                }
            }
            rank += 1;
        }
        (rank, swaps, pivot_product)
    }
}

/// Outcome of inserting a vector into a [`SpanTracker`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inserted {
    /// Vector enlarged the span.
    Independent,
    /// Vector already lies in the span; the payload expresses it as a
    /// combination of the previously inserted vectors, in insertion order.
    Dependent(Vec<BigRational>),
}

/// Incrementally row-reduced span of vectors in Q^dim.
///
/// Tracks, for every echelon row, its expression over the original inserted
/// vectors so that dependencies come back with exact coordinates.
#[derive(Debug, Clone)]
pub struct SpanTracker {
    dim: usize,
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
    exprs: Vec<Vec<BigRational>>,
    inserted: usize,
}

impl SpanTracker {
    pub fn new(dim: usize) -> Self {
        SpanTracker { dim, rows: Vec::new(), pivots: Vec::new(), exprs: Vec::new(), inserted: 0 }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Cheap dependence test that leaves the tracker untouched.
    pub fn is_independent(&self, v: &[BigRational]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut residual = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !residual[p].is_zero() {
                let factor = residual[p].clone();
                for (r, x) in residual.iter_mut().zip(row) {
                    *r -= &factor * x;
                }
            }
        }
        residual.iter().any(|x| !x.is_zero())
    }

    pub fn insert(&mut self, v: Vec<BigRational>) -> Inserted {
        assert_eq!(v.len(), self.dim);
        let mut residual = v;
        let mut combo = vec![BigRational::zero(); self.inserted];
        for ((row, &p), expr) in self.rows.iter().zip(&self.pivots).zip(&self.exprs) {
            if !residual[p].is_zero() {
                let factor = residual[p].clone();
                for (r, x) in residual.iter_mut().zip(row) {
                    *r -= &factor * x;
                }
                for (c, e) in combo.iter_mut().zip(expr) {
                    *c += &factor * e;
                }
            }
        }
        let Some(pivot) = residual.iter().position(|x| !x.is_zero()) else {
            return Inserted::Dependent(combo);
        };
        // normalize the new echelon row to pivot 1 and record its expression
        // over the inserted vectors: row = (v_new - sum combo_j v_j) / pivot
        let inv = residual[pivot].recip();
        for r in residual.iter_mut() {
            *r *= &inv;
        }
        let mut expr = vec![BigRational::zero(); self.inserted + 1];
        for (e, c) in expr.iter_mut().zip(&combo) {
            *e = -c * &inv;
        }
        expr[self.inserted] = inv;
        self.rows.push(residual);
        self.pivots.push(pivot);
        self.exprs.push(expr);
        self.inserted += 1;
        Inserted::Independent
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_int as q;

    #[test]
    fn rank_det_solve() {
        let m = QMatrix::from_rows(vec![
            vec![q(1), q(2)],
            vec![q(3), q(4)],
        ]);
        assert_eq!(m.rank(), 2);
        assert!(m.is_nonsingular());
        assert_eq!(m.determinant(), q(-2));
        let x = m.solve(&[q(5), q(11)]).unwrap();
        assert_eq!(x, vec![q(1), q(2)]);

        let s = QMatrix::from_rows(vec![
            vec![q(1), q(1)],
            vec![q(1), q(1)],
        ]);
        assert_eq!(s.rank(), 1);
        assert_eq!(s.determinant(), q(0));
        assert!(s.solve(&[q(1), q(2)]).is_none());
    }

    #[test]
    fn span_tracker_reports_dependencies() {
        let mut t = SpanTracker::new(3);
        assert_eq!(t.insert(vec![q(1), q(0), q(1)]), Inserted::Independent);
        assert_eq!(t.insert(vec![q(0), q(1), q(1)]), Inserted::Independent);
        assert!(!t.is_independent(&[q(2), q(3), q(5)]));
        // 2*(1,0,1) + 3*(0,1,1) = (2,3,5)
        match t.insert(vec![q(2), q(3), q(5)]) {
            Inserted::Dependent(combo) => assert_eq!(combo, vec![q(2), q(3)]),
            other => panic!("expected dependency, got {other:?}"),
        }
        assert!(t.is_independent(&[q(0), q(0), q(1)]));
        assert_eq!(t.rank(), 2);
    }
}
