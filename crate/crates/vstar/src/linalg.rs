//! Dense Gaussian elimination over GF(2^k).
//!
//! Vectors are `Vec<Fe>`; pivoting is deterministic in column order so
//! kernel bases and span membership certificates are reproducible.

use crate::gf2k::{Fe, FieldSpec};

/// Row-reduces `rows` in place; returns the pivot column of each surviving
/// row, in order.
fn row_reduce(field: &FieldSpec, rows: &mut Vec<Vec<Fe>>) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != Fe(0)) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(rows[r][col]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != Fe(0) {
                let factor = rows[i][col];
                for c in 0..width {
                    let sub = field.mul(factor, rows[r][c]);
                    rows[i][c] = field.add(rows[i][c], sub);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(field: &FieldSpec, rows: &[Vec<Fe>]) -> usize {
    let mut work = rows.to_vec();
    row_reduce(field, &mut work).len()
}

/// If `target` lies in the span of `basis`, returns coordinates c with
/// `sum c_i * basis_i = target`.
pub fn in_span(field: &FieldSpec, basis: &[Vec<Fe>], target: &[Fe]) -> Option<Vec<Fe>> {
    // Augment each basis row with a unit coordinate vector and reduce; the
    // trailing columns then carry the change of basis.
    let m = basis.len();
    let width = target.len();
    let mut rows: Vec<Vec<Fe>> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| {
            assert_eq!(b.len(), width, "basis vector width mismatch");
            let mut row = b.clone();
            row.extend((0..m).map(|j| if i == j { Fe(1) } else { Fe(0) }));
            row
        })
        .collect();
    let pivots = row_reduce(field, &mut rows);

    let mut residual = target.to_vec();
    let mut coords = vec![Fe(0); m];
    for (row, &col) in rows.iter().zip(pivots.iter()) {
        if col >= width {
            break; // reduced row lives entirely in the bookkeeping columns
        }
        let coeff = residual[col];
        if coeff == Fe(0) {
            continue;
        }
        for c in 0..width {
            residual[c] = field.add(residual[c], field.mul(coeff, row[c]));
        }
        for j in 0..m {
            coords[j] = field.add(coords[j], field.mul(coeff, row[width + j]));
        }
    }
    if residual.iter().all(|&x| x == Fe(0)) {
        Some(coords)
    } else {
        None
    }
}

/// Basis of the solution space of the homogeneous system `rows * x = 0`
/// with `unknowns` variables.
pub fn kernel_basis(field: &FieldSpec, rows: &[Vec<Fe>], unknowns: usize) -> Vec<Vec<Fe>> {
    let mut work = rows.to_vec();
    let pivots = row_reduce(field, &mut work);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..unknowns {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Fe(0); unknowns];
        v[free] = Fe(1);
        for (row, &p) in work.iter().zip(pivots.iter()) {
            // x_p = -row[free] (characteristic two: same as row[free])
            v[p] = row[free];
        }
        basis.push(v);
    }
    basis
}
