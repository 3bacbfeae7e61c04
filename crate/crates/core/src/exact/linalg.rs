//! Exact Gaussian elimination over ℚ(i).

use super::Scalar;

/// Reduced row echelon form of a dense matrix, with pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Rref {
    pub fn new(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> Self {
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..ncols {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][col].inv().unwrap();
            for v in rows[r].iter_mut() {
                *v = &*v * &inv;
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        Rref { rows, pivots, ncols }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// A basis of the null space.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.ncols];
                v[f] = Scalar::one();
                for (r, &p) in self.pivots.iter().enumerate() {
                    v[p] = -&self.rows[r][f];
                }
                v
            })
            .collect()
    }
}

/// Solves `A x = b`, returning the solution with all free variables zero, or
/// `None` if the system is inconsistent.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = a.first().map_or(0, Vec::len);
    let aug: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let rref = Rref::new(aug, n + 1);
    if rref.pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Scalar::zero(); n];
    for (r, &p) in rref.pivots.iter().enumerate() {
        x[p] = rref.rows[r][n].clone();
    }
    Some(x)
}

/// Null space of `A`.
pub fn nullspace(a: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    Rref::new(a.to_vec(), ncols).nullspace()
}

pub fn mat_vec(a: &[Vec<Scalar>], x: &[Scalar]) -> Vec<Scalar> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(r, v)| r * v).sum())
        .collect()
}
