//! Integer lattice algebra: diagonalization with unimodular transforms,
//! exact linear system solving, kernels and generated-lattice bases.
//!
//! Matrices are dense row-major `Vec<Vec<BigInt>>`; everything here is
//! desk-scale (a handful of generators), so no effort is spent on sparsity.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, x: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(r, v)| r * v).sum())
        .collect()
}

/// Result of `u * a * v = d` with `u`, `v` unimodular and `d` diagonal.
pub struct Diagonalized {
    pub d: Matrix,
    pub u: Matrix,
    pub v: Matrix,
    pub rank: usize,
}

fn swap_rows(a: &mut Matrix, i: usize, j: usize) {
    a.swap(i, j);
}

fn swap_cols(a: &mut Matrix, i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn negate_row(a: &mut Matrix, i: usize) {
    for x in a[i].iter_mut() {
        *x = -std::mem::take(x);
    }
}

/// row[i] -= q * row[t]
fn row_sub(a: &mut Matrix, i: usize, t: usize, q: &BigInt) {
    let row_t: Vec<BigInt> = a[t].clone();
    for (x, rt) in a[i].iter_mut().zip(row_t) {
        *x -= q * rt;
    }
}

/// col[j] -= q * col[t]
fn col_sub(a: &mut Matrix, j: usize, t: usize, q: &BigInt) {
    for row in a.iter_mut() {
        let vt = row[t].clone();
        row[j] -= q * vt;
    }
}

/// Diagonalize an integer matrix by elementary row and column operations.
pub fn diagonalize(a: &Matrix) -> Diagonalized {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut d = a.clone();
    let mut u = identity(m);
    let mut v = identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // pick the entry of least magnitude in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !d[i][j].is_zero() {
                    match &pivot {
                        Some((pi, pj)) if d[*pi][*pj].abs() <= d[i][j].abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut d, t, pi);
        swap_rows(&mut u, t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);
        if d[t][t].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if !d[i][t].is_zero() {
                    let q = d[i][t].div_floor(&d[t][t]);
                    row_sub(&mut d, i, t, &q);
                    row_sub(&mut u, i, t, &q);
                    if !d[i][t].is_zero() {
                        swap_rows(&mut d, t, i);
                        swap_rows(&mut u, t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if !d[t][j].is_zero() {
                    let q = d[t][j].div_floor(&d[t][t]);
                    col_sub(&mut d, j, t, &q);
                    col_sub(&mut v, j, t, &q);
                    if !d[t][j].is_zero() {
                        swap_cols(&mut d, t, j);
                        swap_cols(&mut v, t, j);
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
            if d[t][t].is_negative() {
                negate_row(&mut d, t);
                negate_row(&mut u, t);
            }
        }
        t += 1;
    }
    let rank = (0..m.min(n)).filter(|&i| !d[i][i].is_zero()).count();
    Diagonalized { d, u, v, rank }
}

/// One integer solution of `a x = b`, if any.
pub fn solve(a: &Matrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    assert_eq!(b.len(), m, "rhs length mismatch");
    let dg = diagonalize(a);
    let ub = mat_vec(&dg.u, b);
    let mut y = vec![BigInt::zero(); n];
    for i in 0..m {
        let di = if i < n { dg.d[i][i].clone() } else { BigInt::zero() };
        if di.is_zero() {
            if !ub[i].is_zero() {
                return None;
            }
        } else {
            let (q, r) = ub[i].div_rem(&di);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(mat_vec(&dg.v, &y))
}

/// Basis of the integer kernel of `a`.
pub fn kernel(a: &Matrix) -> Vec<Vec<BigInt>> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    if n == 0 {
        return vec![];
    }
    let dg = diagonalize(a);
    let mut basis = Vec::new();
    for j in 0..n {
        let zero_diag = j >= m || dg.d[j][j].is_zero();
        if zero_diag {
            basis.push(dg.v.iter().map(|row| row[j].clone()).collect());
        }
    }
    basis
}

pub fn rank(a: &Matrix) -> usize {
    diagonalize(a).rank
}

/// Basis of the lattice generated by the given vectors (column echelon form
/// by gcd elimination). The projection of a lattice is spanned by the
/// projections of its generators, so this also serves for projected kernels.
pub fn lattice_basis(gens: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if gens.is_empty() {
        return vec![];
    }
    let m = gens[0].len();
    // columns = generators
    let mut cols: Vec<Vec<BigInt>> = gens.to_vec();
    let n = cols.len();
    let mut t = 0;
    for r in 0..m {
        if t >= n {
            break;
        }
        loop {
            // minimal nonzero entry at row r among columns >= t
            let mut best: Option<usize> = None;
            for (j, col) in cols.iter().enumerate().skip(t) {
                if !col[r].is_zero() {
                    match best {
                        Some(b) if cols[b][r].abs() <= col[r].abs() => {}
                        _ => best = Some(j),
                    }
                }
            }
            let Some(bj) = best else { break };
            cols.swap(t, bj);
            let mut any = false;
            for j in t + 1..n {
                if !cols[j][r].is_zero() {
                    let q = cols[j][r].div_floor(&cols[t][r]);
                    let col_t = cols[t].clone();
                    for (x, ct) in cols[j].iter_mut().zip(&col_t) {
                        *x -= &q * ct;
                    }
                    if !cols[j][r].is_zero() {
                        any = true;
                    }
                }
            }
            if !any {
                // pivot settled at (r, t)
                if cols[t][r].is_negative() {
                    for x in cols[t].iter_mut() {
                        *x = -std::mem::take(x);
                    }
                }
                t += 1;
                break;
            }
        }
    }
    cols.into_iter()
        .filter(|c| c.iter().any(|x| !x.is_zero()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| bi(x)).collect())
            .collect()
    }

    #[test]
    fn diagonalize_transforms_agree() {
        let a = mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let dg = diagonalize(&a);
        // check u * a * v == d
        let m = a.len();
        let n = a[0].len();
        for i in 0..m {
            for j in 0..n {
                let mut s = BigInt::zero();
                for k in 0..m {
                    for l in 0..n {
                        s += &dg.u[i][k] * &a[k][l] * &dg.v[l][j];
                    }
                }
                assert_eq!(s, dg.d[i][j]);
                if i != j {
                    assert!(dg.d[i][j].is_zero());
                }
            }
        }
    }

    #[test]
    fn solve_simple() {
        // 3x + 6y = 9 has integer solutions; 3x + 6y = 8 does not
        let a = mat(&[&[3, 6]]);
        let x = solve(&a, &[bi(9)]).unwrap();
        assert_eq!(&x[0] * bi(3) + &x[1] * bi(6), bi(9));
        assert!(solve(&a, &[bi(8)]).is_none());
    }

    #[test]
    fn solve_system() {
        let a = mat(&[&[2, 0], &[0, 3]]);
        assert_eq!(solve(&a, &[bi(4), bi(9)]), Some(vec![bi(2), bi(3)]));
        assert!(solve(&a, &[bi(3), bi(9)]).is_none());
    }

    #[test]
    fn kernel_of_projection() {
        // kernel of (1 3) is generated by (3, -1) or (-3, 1)
        let a = mat(&[&[1, 3]]);
        let k = kernel(&a);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!(&v[0] + bi(3) * &v[1], bi(0));
        assert!(!v[0].is_zero());
    }

    #[test]
    fn kernel_brute_force_cross_check() {
        // every small combination is in the kernel iff it is generated by
        // the reported basis
        let a = mat(&[&[2, 4, 6], &[1, 2, 3]]);
        let k = kernel(&a);
        assert_eq!(k.len(), 2);
        for x in -3i64..=3 {
            for y in -3i64..=3 {
                for z in -3i64..=3 {
                    let v = vec![bi(x), bi(y), bi(z)];
                    let in_kernel = mat_vec(&a, &v).iter().all(|e| e.is_zero());
                    // membership in span of k: solve k^T c = v
                    let kt: Matrix = (0..3)
                        .map(|i| k.iter().map(|b| b[i].clone()).collect())
                        .collect();
                    let spanned = solve(&kt, &v).is_some();
                    assert_eq!(in_kernel, spanned, "at ({x},{y},{z})");
                }
            }
        }
    }

    #[test]
    fn generated_lattice_basis() {
        let basis = lattice_basis(&[vec![bi(4), bi(0)], vec![bi(6), bi(0)], vec![bi(0), bi(5)]]);
        assert_eq!(basis.len(), 2);
        // the lattice is 2Z x 5Z
        let bt: Matrix = (0..2)
            .map(|i| basis.iter().map(|b| b[i].clone()).collect())
            .collect();
        assert!(solve(&bt, &[bi(2), bi(0)]).is_some());
        assert!(solve(&bt, &[bi(1), bi(0)]).is_none());
        assert!(solve(&bt, &[bi(0), bi(5)]).is_some());
        assert!(solve(&bt, &[bi(0), bi(1)]).is_none());
    }

    #[test]
    fn rank_counts() {
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&mat(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank(&mat(&[&[0, 0], &[0, 0]])), 0);
    }
}
