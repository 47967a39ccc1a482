//! Gaussian-elimination kernels shared by `rank` and `orthocomplement_basis`.
//!
//! Exact elimination works over complex rationals and is deterministic.
//! Float elimination normalizes every row to unit length up front and treats
//! entries of magnitude at most [`crate::linalg::ORTHO_EPS`] as zero when
//! selecting pivots.

use num_complex::Complex64;

use super::exact::ExactComplex;
use super::ORTHO_EPS;

pub(crate) fn rank_exact(mut rows: Vec<Vec<ExactComplex>>) -> usize {
    let dim = match rows.first() {
        Some(r) => r.len(),
        None => return 0,
    };
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip().expect("pivot is nonzero");
        for i in rank + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = &rows[i][col] * &inv;
            for c in col..dim {
                let delta = &factor * &rows[rank][c];
                rows[i][c] = &rows[i][c] - &delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub(crate) fn rank_float(rows: Vec<Vec<Complex64>>) -> usize {
    let dim = match rows.first() {
        Some(r) => r.len(),
        None => return 0,
    };
    let mut rows: Vec<Vec<Complex64>> = rows.into_iter().filter_map(normalize_row).collect();
    let mut rank = 0;
    for col in 0..dim {
        let mut best = rank;
        let mut best_mag = 0.0;
        for i in rank..rows.len() {
            let mag = rows[i][col].norm();
            if mag > best_mag {
                best_mag = mag;
                best = i;
            }
        }
        if best_mag <= ORTHO_EPS {
            continue;
        }
        rows.swap(rank, best);
        let inv = rows[rank][col].finv();
        for i in rank + 1..rows.len() {
            let factor = rows[i][col] * inv;
            for c in col..dim {
                let delta = factor * rows[rank][c];
                rows[i][c] -= delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn normalize_row(row: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let norm = row.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 {
        return None;
    }
    Some(row.into_iter().map(|z| z / norm).collect())
}

/// Basis of `{x : sum_l conj(v_l) x_l = 0 for every row v}`.
///
/// The rows passed in are the raw vectors; conjugation happens here so that
/// the returned basis is orthogonal to the inputs under the sesquilinear
/// inner product.
pub(crate) fn nullspace_exact(rows: &[Vec<ExactComplex>], dim: usize) -> Vec<Vec<ExactComplex>> {
    let mut mat: Vec<Vec<ExactComplex>> = rows
        .iter()
        .map(|r| r.iter().map(ExactComplex::conj).collect())
        .collect();

    // Reduced row echelon form with unit pivots.
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut r = 0;
    for col in 0..dim {
        let Some(p) = (r..mat.len()).find(|&i| !mat[i][col].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][col].recip().expect("pivot is nonzero");
        for c in col..dim {
            mat[r][c] = &mat[r][c] * &inv;
        }
        for i in 0..mat.len() {
            if i == r || mat[i][col].is_zero() {
                continue;
            }
            let factor = mat[i][col].clone();
            for c in col..dim {
                let delta = &factor * &mat[r][c];
                mat[i][c] = &mat[i][c] - &delta;
            }
        }
        pivots.push((r, col));
        r += 1;
        if r == mat.len() {
            break;
        }
    }

    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in (0..dim).filter(|c| !pivot_cols.contains(c)) {
        let mut x = vec![ExactComplex::zero(); dim];
        x[free] = ExactComplex::one();
        for &(row, col) in &pivots {
            x[col] = -&mat[row][free];
        }
        basis.push(x);
    }
    basis
}

pub(crate) fn nullspace_float(rows: &[Vec<Complex64>], dim: usize) -> Vec<Vec<Complex64>> {
    let mut mat: Vec<Vec<Complex64>> = rows
        .iter()
        .cloned()
        .filter_map(normalize_row)
        .map(|r| r.iter().map(|z| z.conj()).collect())
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for col in 0..dim {
        let mut best = r;
        let mut best_mag = 0.0;
        for i in r..mat.len() {
            let mag = mat[i][col].norm();
            if mag > best_mag {
                best_mag = mag;
                best = i;
            }
        }
        if best_mag <= ORTHO_EPS {
            continue;
        }
        mat.swap(r, best);
        let inv = mat[r][col].finv();
        for c in col..dim {
            mat[r][c] *= inv;
        }
        for i in 0..mat.len() {
            if i == r {
                continue;
            }
            let factor = mat[i][col];
            for c in col..dim {
                let delta = factor * mat[r][c];
                mat[i][c] -= delta;
            }
        }
        pivots.push((r, col));
        r += 1;
        if r == mat.len() {
            break;
        }
    }

    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in (0..dim).filter(|c| !pivot_cols.contains(c)) {
        let mut x = vec![Complex64::new(0.0, 0.0); dim];
        x[free] = Complex64::new(1.0, 0.0);
        for &(row, col) in &pivots {
            x[col] = -mat[row][free];
        }
        basis.push(x);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(xs: &[i64]) -> Vec<ExactComplex> {
        xs.iter().map(|&x| ExactComplex::from_ints(x, 0)).collect()
    }

    #[test]
    fn exact_rank_dependent_rows() {
        assert_eq!(rank_exact(vec![ev(&[1, 0]), ev(&[0, 1]), ev(&[1, 1])]), 2);
        assert_eq!(rank_exact(vec![]), 0);
        assert_eq!(rank_exact(vec![ev(&[0, 0, 0])]), 0);
    }

    #[test]
    fn exact_nullspace_dimensions() {
        let basis = nullspace_exact(&[ev(&[1, 1, 1]), ev(&[1, 1, -2])], 3);
        assert_eq!(basis.len(), 1);
        // Orthogonal to both rows.
        for row in [ev(&[1, 1, 1]), ev(&[1, 1, -2])] {
            let mut acc = ExactComplex::zero();
            for (a, b) in row.iter().zip(&basis[0]) {
                acc = &acc + &(&a.conj() * b);
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn float_rank_with_noise() {
        let rows = vec![
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            vec![Complex64::new(1.0, 0.0), Complex64::new(1e-14, 0.0)],
        ];
        assert_eq!(rank_float(rows), 1);
    }

    #[test]
    fn float_nullspace_orthogonality() {
        let rows = vec![vec![
            Complex64::new(1.0, 2.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(3.0, 0.0),
        ]];
        let basis = nullspace_float(&rows, 3);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            let ip: Complex64 = rows[0].iter().zip(b).map(|(a, x)| a.conj() * x).sum();
            assert!(ip.norm() < 1e-12);
        }
    }
}
