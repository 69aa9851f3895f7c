//! Exact Gaussian elimination over [`Scalar`] rows.
//!
//! Pivoting picks the first nonzero entry; there are no tolerances. Used for
//! bijectivity (rank) checks, map inversion, span comparison and kernel
//! computation.

use crate::field::{Field, Scalar};

/// Reduces `rows` to reduced row echelon form in place and returns the rank.
pub fn row_reduce(rows: &mut [Vec<Scalar>]) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(pr) = (pivot_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, pr);
        let inv = rows[pivot_row][col]
            .inverse()
            .expect("pivot entry is nonzero");
        for c in col..ncols {
            rows[pivot_row][c] = &rows[pivot_row][c] * &inv;
        }
        for r in 0..nrows {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = &factor * &rows[pivot_row][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    pivot_row
}

pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    row_reduce(&mut rows)
}

/// Whether two row families span the same subspace.
pub fn same_span(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> bool {
    let ra = rank(a.to_vec());
    let rb = rank(b.to_vec());
    if ra != rb {
        return false;
    }
    let mut stacked = a.to_vec();
    stacked.extend_from_slice(b);
    rank(stacked) == ra
}

/// Whether `v` lies in the row span of `span`.
pub fn in_span(span: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    let r = rank(span.to_vec());
    let mut stacked = span.to_vec();
    stacked.push(v.to_vec());
    rank(stacked) == r
}

/// Inverse of a square matrix, or `None` when singular.
pub fn invert(field: &Field, m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { field.one() } else { field.zero() });
            }
            r
        })
        .collect();
    row_reduce(&mut aug);
    // Invertible iff the reduced left block is the identity.
    for (i, row) in aug.iter().enumerate() {
        for (j, entry) in row[..n].iter().enumerate() {
            let ok = if i == j {
                entry.is_one()
            } else {
                entry.is_zero()
            };
            if !ok {
                return None;
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// A basis of the null space `{v : m v = 0}` of an `r x c` matrix.
pub fn kernel(field: &Field, m: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if m.is_empty() {
        return Vec::new();
    }
    let ncols = m[0].len();
    let mut reduced = m.to_vec();
    row_reduce(&mut reduced);
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    for (r, row) in reduced.iter().enumerate() {
        if let Some(col) = row.iter().position(|e| !e.is_zero()) {
            pivot_of_col[col] = Some(r);
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (col, pivot) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pivot {
                v[col] = -&reduced[*r][free];
            }
        }
        basis.push(v);
    }
    basis
}
