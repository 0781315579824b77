//! Exact rational linear-programming feasibility.
//!
//! The one question asked here: does some w >= 0 satisfy row.w >= 1 for
//! every row? (Strict cone membership reduces to this by scaling.) It is
//! answered by running a two-phase primal simplex with Bland's rule on the
//! *dual* of the margin-maximization LP, whose row count is the small
//! dimension k+1 rather than the constraint count. Everything is exact; a
//! feasible answer carries an explicit w and an infeasible answer carries a
//! Gordan certificate y >= 0, sum y = 1, with y^T rows <= 0 componentwise.

use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A witness w >= 0 with row.w >= 1 for every row.
    Feasible(Vec<BigRational>),
    /// Convex multipliers y over the rows with y^T rows <= 0: no such w exists.
    Infeasible(Vec<BigRational>),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Decide existence of w >= 0 with `row . w >= 1` for all rows.
pub fn feasible_nonneg(rows: &[Vec<BigRational>], dim: usize) -> Feasibility {
    assert!(dim > 0, "dimension must be positive");
    assert!(rows.iter().all(|r| r.len() == dim), "row dimension mismatch");
    if rows.is_empty() {
        return Feasibility::Feasible(vec![BigRational::zero(); dim]);
    }
    let m = rows.len();
    // Dual form, k+1 equality rows over variables (y_1..y_m, s_1..s_k, mu+, mu-):
    //   sum_i D_ij y_i + s_j - mu+ + mu- = 0   (j = 1..k)
    //   sum_i y_i = 1
    // minimizing mu+ - mu-. The optimum equals the best margin t* in
    // max{t : Dw >= t.1, w >= 0, sum w = 1}; the row prices recover w.
    let ncols = m + dim + 2;
    let mut a = vec![vec![BigRational::zero(); ncols]; dim + 1];
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            a[j][i] = v.clone();
        }
        a[dim][i] = BigRational::one();
    }
    for j in 0..dim {
        a[j][m + j] = BigRational::one(); // slack s_j
        a[j][m + dim] = -BigRational::one(); // mu+
        a[j][m + dim + 1] = BigRational::one(); // mu-
    }
    let mut b = vec![BigRational::zero(); dim + 1];
    b[dim] = BigRational::one();
    let mut c = vec![BigRational::zero(); ncols];
    c[m + dim] = BigRational::one();
    c[m + dim + 1] = -BigRational::one();

    let solution = simplex_min(&a, &b, &c).expect("margin LP is feasible and bounded");
    let margin = solution.value;
    if margin > BigRational::zero() {
        // w_j = -pi_j / margin satisfies D w >= 1, w >= 0
        let w: Vec<BigRational> = solution.duals[..dim]
            .iter()
            .map(|p| -p / &margin)
            .collect();
        debug_assert!(w.iter().all(|x| *x >= BigRational::zero()));
        debug_assert!(rows.iter().all(|row| dot(row, &w) >= BigRational::one()));
        Feasibility::Feasible(w)
    } else {
        let y = solution.x[..m].to_vec();
        debug_assert!(y.iter().all(|v| *v >= BigRational::zero()));
        debug_assert!((0..dim).all(|j| {
            let mut acc = BigRational::zero();
            for (i, row) in rows.iter().enumerate() {
                acc += &y[i] * &row[j];
            }
            acc <= BigRational::zero()
        }));
        Feasibility::Infeasible(y)
    }
}

pub(crate) fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    let mut acc = BigRational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

struct SimplexSolution {
    value: BigRational,
    /// Structural variables at the optimum.
    x: Vec<BigRational>,
    /// Row prices pi with pi^T B = c_B.
    duals: Vec<BigRational>,
}

/// Two-phase dense simplex: min c.x subject to A x = b, x >= 0, b >= 0.
/// Bland's rule throughout, exact arithmetic; returns `None` if infeasible
/// or unbounded.
fn simplex_min(
    a: &[Vec<BigRational>],
    b: &[BigRational],
    c: &[BigRational],
) -> Option<SimplexSolution> {
    let nrows = a.len();
    let ncols = c.len();
    assert!(b.iter().all(|v| *v >= BigRational::zero()), "rhs must be non-negative");
    let width = ncols + nrows; // structural + artificial
    // tableau rows: [structural | artificial | rhs]
    let mut t: Vec<Vec<BigRational>> = (0..nrows)
        .map(|i| {
            let mut row = Vec::with_capacity(width + 1);
            row.extend(a[i].iter().cloned());
            for j in 0..nrows {
                row.push(if j == i { BigRational::one() } else { BigRational::zero() });
            }
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (ncols..width).collect();

    // phase 1: minimize the artificial sum
    let phase1_cost: Vec<BigRational> = (0..width)
        .map(|j| if j >= ncols { BigRational::one() } else { BigRational::zero() })
        .collect();
    run_simplex(&mut t, &mut basis, &phase1_cost, width, None)?;
    let phase1_value: BigRational = basis
        .iter()
        .zip(t.iter())
        .map(|(&bi, row)| &phase1_cost[bi] * &row[width])
        .sum();
    if !phase1_value.is_zero() {
        return None; // original system infeasible
    }

    // phase 2: real costs, artificials barred from entering
    let phase2_cost: Vec<BigRational> = (0..width)
        .map(|j| if j < ncols { c[j].clone() } else { BigRational::zero() })
        .collect();
    run_simplex(&mut t, &mut basis, &phase2_cost, width, Some(ncols))?;

    let mut x = vec![BigRational::zero(); ncols];
    for (i, &bi) in basis.iter().enumerate() {
        if bi < ncols {
            x[bi] = t[i][width].clone();
        }
    }
    let value: BigRational = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();

    // duals: solve B^T pi = c_B over the original columns (artificial
    // column i is the unit vector e_i)
    let btrans_rows: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|&bi| {
            (0..nrows)
                .map(|r| {
                    if bi < ncols {
                        a[r][bi].clone()
                    } else if bi - ncols == r {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let cb: Vec<BigRational> = basis.iter().map(|&bi| phase2_cost[bi].clone()).collect();
    let duals = crate::linalg::QMatrix::from_rows(btrans_rows)
        .solve(&cb)
        .expect("basis matrix is nonsingular");
    Some(SimplexSolution { value, x, duals })
}

/// Bland-rule pivoting until no reduced cost is negative. `barred_from`
/// excludes columns >= that index from entering. Returns `None` on an
/// unbounded ray.
fn run_simplex(
    t: &mut [Vec<BigRational>],
    basis: &mut [usize],
    cost: &[BigRational],
    width: usize,
    barred_from: Option<usize>,
) -> Option<()> {
    let nrows = t.len();
    loop {
        // reduced costs via current prices: z_j = c_j - sum_i c_basis_i t_ij
        let cb: Vec<&BigRational> = basis.iter().map(|&bi| &cost[bi]).collect();
        let mut entering = None;
        for j in 0..width {
            if let Some(bar) = barred_from {
                if j >= bar {
                    continue;
                }
            }
            if basis.contains(&j) {
                continue;
            }
            let mut z = cost[j].clone();
            for i in 0..nrows {
                if !cb[i].is_zero() && !t[i][j].is_zero() {
                    z -= cb[i] * &t[i][j];
                }
            }
            if z < BigRational::zero() {
                entering = Some(j); // Bland: first index wins
                break;
            }
        }
        let Some(enter) = entering else {
            return Some(());
        };
        // ratio test with Bland tie-break on the smallest basis index
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..nrows {
            if t[i][enter] > BigRational::zero() {
                let ratio = &t[i][width] / &t[i][enter];
                match &leave {
                    None => leave = Some((i, ratio)),
                    Some((best_i, best)) => {
                        if ratio < *best || (ratio == *best && basis[i] < basis[*best_i]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let Some((row, _)) = leave else {
            return None; // unbounded
        };
        pivot(t, row, enter, width);
        basis[row] = enter;
    }
}

fn pivot(t: &mut [Vec<BigRational>], row: usize, col: usize, width: usize) {
    let inv = t[row][col].recip();
    for j in 0..=width {
        if !t[row][j].is_zero() {
            let v = &t[row][j] * &inv;
            t[row][j] = v;
        }
    }
    for i in 0..t.len() {
        if i != row && !t[i][col].is_zero() {
            let factor = t[i][col].clone();
            for j in 0..=width {
                if !t[row][j].is_zero() {
                    let v = &t[i][j] - &factor * &t[row][j];
                    t[i][j] = v;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_int as q;

    fn rows(data: &[&[i64]]) -> Vec<Vec<BigRational>> {
        data.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn trivially_feasible() {
        match feasible_nonneg(&rows(&[&[1, 0]]), 2) {
            Feasibility::Feasible(w) => {
                assert!(w[0] >= q(1));
            }
            other => panic!("expected feasible, got {other:?}"),
        }
        assert!(feasible_nonneg(&[], 3).is_feasible());
    }

    #[test]
    fn sign_constrained_infeasibility() {
        // -w1 - w2 >= 1 cannot hold with w >= 0
        match feasible_nonneg(&rows(&[&[-1, -1]]), 2) {
            Feasibility::Infeasible(y) => assert_eq!(y, vec![q(1)]),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn contradictory_margins() {
        // w1 - w2 >= 1 and w2 - 2 w1 >= 1 force -w1 >= 2
        let f = feasible_nonneg(&rows(&[&[1, -1], &[-2, 1]]), 2);
        assert!(!f.is_feasible());
        // dropping the second row restores feasibility
        let f = feasible_nonneg(&rows(&[&[1, -1]]), 2);
        assert!(f.is_feasible());
    }

    #[test]
    fn zero_row_is_infeasible() {
        assert!(!feasible_nonneg(&rows(&[&[0, 0], &[1, 1]]), 2).is_feasible());
    }

    #[test]
    fn witness_satisfies_margins() {
        let system = rows(&[&[-1, 1, 0], &[0, -5, 6], &[1, 0, -1], &[2, 3, 1]]);
        match feasible_nonneg(&system, 3) {
            Feasibility::Feasible(w) => {
                for row in &system {
                    assert!(dot(row, &w) >= q(1));
                }
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn larger_infeasible_cycle() {
        // w1 > w2 > w3 > w1 is impossible
        let f = feasible_nonneg(&rows(&[&[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]]), 3);
        assert!(!f.is_feasible());
    }
}
