//! Small dense linear algebra over the rationals: exact Gaussian elimination
//! for solving, rank, and consistency checks. Everything here is
//! deterministic; pivots are chosen by first nonzero entry.

use num_traits::Zero;

use crate::laurent::Rat;

/// Reduce an augmented matrix (rows of length `cols + extra`) to row echelon
/// form in place; returns the pivot column of each pivot row.
fn echelonize(rows: &mut [Vec<Rat>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let inv = rows[row][col].clone();
        for x in rows[row].iter_mut() {
            if !x.is_zero() {
                *x = &*x / &inv;
            }
        }
        for r in 0..rows.len() {
            if r != row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                let (lead, rest) = split_rows(rows, row, r);
                for (x, y) in rest.iter_mut().zip(lead.iter()) {
                    if !y.is_zero() {
                        *x = &*x - &(&factor * y);
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    pivots
}

fn split_rows<'a>(rows: &'a mut [Vec<Rat>], a: usize, b: usize) -> (&'a [Rat], &'a mut [Rat]) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = rows.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}

/// Rank of a rational matrix.
pub fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    echelonize(&mut rows, cols).len()
}

/// Solve `A x = b` for square `A`; `None` when `A` is singular.
pub fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n));
    assert_eq!(b.len(), n);
    let mut rows: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelonize(&mut rows, n);
    if pivots.len() < n {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = rows[r][n].clone();
    }
    Some(x)
}

/// Solve a possibly overdetermined system `A x = b` that is expected to have
/// a unique solution. Returns `Ok(None)` when inconsistent, an error when the
/// solution is not unique.
pub fn solve_unique(a: &[Vec<Rat>], b: &[Rat]) -> crate::Result<Option<Vec<Rat>>> {
    let m = a.len();
    assert_eq!(b.len(), m);
    let cols = if m == 0 { 0 } else { a[0].len() };
    let mut rows: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelonize(&mut rows, cols);
    // inconsistent iff some row is (0 ... 0 | nonzero)
    for r in &rows {
        if r[..cols].iter().all(|x| x.is_zero()) && !r[cols].is_zero() {
            return Ok(None);
        }
    }
    if pivots.len() < cols {
        return Err(crate::Error::SingularEvaluation);
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = rows[r][cols].clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{rat_frac, rat_int};

    #[test]
    fn solve_and_rank() {
        let a = vec![
            vec![rat_int(2), rat_int(1)],
            vec![rat_int(1), rat_int(3)],
        ];
        let b = vec![rat_int(5), rat_int(10)];
        let x = solve_square(&a, &b).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(3)]);
        assert_eq!(rank(a.clone()), 2);

        let singular = vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ];
        assert!(solve_square(&singular, &b).is_none());
        assert_eq!(rank(singular), 1);
    }

    #[test]
    fn overdetermined_consistency() {
        let a = vec![
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(1)],
        ];
        let b = vec![rat_frac(1, 2), rat_int(2), rat_frac(5, 2)];
        let x = solve_unique(&a, &b).unwrap().unwrap();
        assert_eq!(x, vec![rat_frac(1, 2), rat_int(2)]);

        let bad = vec![rat_frac(1, 2), rat_int(2), rat_int(4)];
        assert!(solve_unique(&a, &bad).unwrap().is_none());
    }
}
