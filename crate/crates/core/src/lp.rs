//! Exact rational linear algebra: nullspaces and linear feasibility.
//!
//! Everything is computed over `BigRational`, so there is no tolerance
//! anywhere. Feasibility uses a phase-one simplex with Bland's rule, which
//! cannot cycle.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Basis of `{x : rows · x = 0}`.
///
/// Columns are eliminated in `column_order`; a different order yields a
/// different (but equivalent) basis. Each basis vector has a `1` in one free
/// column and zeros in the other free columns.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize, column_order: &[usize]) -> Vec<Vec<Rational>> {
    debug_assert_eq!(column_order.len(), ncols);
    let mut m: Vec<Vec<Rational>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next_row = 0;
    for &col in column_order {
        if next_row == m.len() {
            break;
        }
        let Some(found) = (next_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(next_row, found);
        let inv = m[next_row][col].recip();
        for x in m[next_row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[next_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == next_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push((next_row, col));
        next_row += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    column_order
        .iter()
        .copied()
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for &(r, c) in &pivots {
                v[c] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// Finds some free `x` with `rows[i] · x >= rhs[i]` for every `i`, or `None`
/// if the system is infeasible.
pub fn find_feasible_point(rows: &[Vec<Rational>], rhs: &[Rational], dim: usize) -> Option<Vec<Rational>> {
    assert_eq!(rows.len(), rhs.len());
    let m = rows.len();
    if m == 0 {
        return Some(vec![Rational::zero(); dim]);
    }
    // Columns: x+ (dim), x- (dim), surplus (m), artificial (m), then the rhs.
    let n_struct = 2 * dim + m;
    let width = n_struct + m + 1;
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, (row, b)) in rows.iter().zip(rhs).enumerate() {
        let flip = b.is_negative();
        let sign = |x: &Rational| if flip { -x.clone() } else { x.clone() };
        let mut t = vec![Rational::zero(); width];
        for j in 0..dim {
            t[j] = sign(&row[j]);
            t[dim + j] = -t[j].clone();
        }
        t[2 * dim + i] = sign(&-Rational::one());
        t[n_struct + i] = Rational::one();
        t[width - 1] = b.abs();
        tab.push(t);
    }
    let mut basis: Vec<usize> = (0..m).map(|i| n_struct + i).collect();

    // Phase-one objective: minimize the sum of artificials. Reduced costs of
    // the non-artificial columns are minus the column sums.
    let mut cost = vec![Rational::zero(); width];
    for t in &tab {
        for j in 0..n_struct {
            cost[j] -= &t[j];
        }
        cost[width - 1] -= &t[width - 1];
    }

    while let Some(enter) = (0..n_struct + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let r = &tab[i][width - 1] / &tab[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => r < *b || (r == *b && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(r);
                    leave = Some(i);
                }
            }
        }
        // Phase one is bounded below by zero, so some row always limits.
        let leave = leave.expect("phase-one simplex is bounded");
        pivot(&mut tab, &mut cost, leave, enter);
        basis[leave] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); dim];
    for (i, &var) in basis.iter().enumerate() {
        let value = &tab[i][width - 1];
        if var < dim {
            x[var] += value;
        } else if var < 2 * dim {
            x[var - dim] -= value;
        }
    }
    Some(x)
}

fn pivot(tab: &mut [Vec<Rational>], cost: &mut [Rational], row: usize, col: usize) {
    let inv = tab[row][col].recip();
    for x in tab[row].iter_mut() {
        *x *= &inv;
    }
    let pivot_row = tab[row].clone();
    let eliminate = |target: &mut [Rational]| {
        let factor = target[col].clone();
        if factor.is_zero() {
            return;
        }
        for (x, p) in target.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= &factor * p;
            }
        }
    };
    for (r, t) in tab.iter_mut().enumerate() {
        if r != row {
            eliminate(t);
        }
    }
    eliminate(cost);
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
