//! Exact Gaussian elimination over rationals.

use num_traits::{One, Zero};

use crate::dim::Rational;

/// Reduces `rows` to reduced row-echelon form in place, choosing pivots only
/// among the first `pivot_cols` columns. Each row carries a label that moves
/// with it. Returns the pivot column of each leading row, in row order.
pub(crate) fn rref<L>(rows: &mut [(Vec<Rational>, L)], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].0[col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r].0[col].recip();
        for x in rows[r].0.iter_mut() {
            *x *= inv;
        }
        let pivot_row = rows[r].0.clone();
        for (i, (row, _)) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col];
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= factor * *p;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Basis of the right nullspace of `matrix` (`rows x ncols`), one vector per
/// free column in increasing column order.
pub(crate) fn nullspace(matrix: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<(Vec<Rational>, ())> = matrix.iter().map(|r| (r.clone(), ())).collect();
    let pivots = rref(&mut rows, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (row_idx, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row_idx].0[free];
            }
            v
        })
        .collect()
}
