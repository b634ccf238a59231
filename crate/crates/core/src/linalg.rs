//! Dense exact linear algebra over a [`Field`]. Matrices are row-major `Vec<Vec<F>>`.

use crate::scalar::Field;

pub type Mat<F> = Vec<Vec<F>>;

pub fn zeros<F: Field>(r: usize, c: usize) -> Mat<F> {
    vec![vec![F::zero(); c]; r]
}

pub fn identity<F: Field>(n: usize) -> Mat<F> {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = F::one();
    }
    m
}

pub fn transpose<F: Field>(m: &Mat<F>) -> Mat<F> {
    if m.is_empty() {
        return vec![];
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_mul<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = F::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            s = s + row[k].clone() * b[k][j].clone();
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<F: Field>(a: &Mat<F>, v: &[F]) -> Vec<F> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(F::zero(), |s, (x, y)| s + x.clone() * y.clone()))
        .collect()
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: Field>(m: &mut Mat<F>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = F::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    if !m[r][j].is_zero() {
                        let t = m[r][j].clone() * f.clone();
                        m[i][j] = m[i][j].clone() - t;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &Mat<F>) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace<F: Field>(m: &Mat<F>, cols: usize) -> Vec<Vec<F>> {
    let mut a = m.clone();
    let piv = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![F::zero(); cols];
            x[f] = F::one();
            for (r, &p) in piv.iter().enumerate() {
                x[p] = -a[r][f].clone();
            }
            x
        })
        .collect()
}

/// Some solution of `m x = b`, if one exists.
pub fn solve<F: Field>(m: &Mat<F>, b: &[F], cols: usize) -> Option<Vec<F>> {
    let mut aug: Mat<F> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.contains(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (r, &p) in piv.iter().enumerate() {
        x[p] = aug[r][cols].clone();
    }
    Some(x)
}

pub fn det<F: Field>(m: &Mat<F>) -> F {
    let n = m.len();
    let mut a = m.clone();
    let mut d = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return F::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d = d * a[c][c].clone();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() / a[c][c].clone();
            for j in c..n {
                let t = a[c][j].clone() * f.clone();
                a[i][j] = a[i][j].clone() - t;
            }
        }
    }
    d
}

pub fn inverse<F: Field>(m: &Mat<F>) -> Option<Mat<F>> {
    let n = m.len();
    let mut aug: Mat<F> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Sign of definiteness of a symmetric matrix via leading principal minors:
/// `Some(1)` positive definite, `Some(-1)` negative definite, `None` otherwise.
pub fn definiteness<F: Field>(h: &Mat<F>) -> Option<i32> {
    let n = h.len();
    if n == 0 {
        return Some(1);
    }
    let mut pos = true;
    let mut neg = true;
    for k in 1..=n {
        let sub: Mat<F> = h[..k].iter().map(|r| r[..k].to_vec()).collect();
        let s = det(&sub).signum_exact();
        if s == 0 {
            return None;
        }
        pos &= s > 0;
        neg &= s == if k % 2 == 0 { 1 } else { -1 };
    }
    if pos {
        Some(1)
    } else if neg {
        Some(-1)
    } else {
        None
    }
}

/// Congruence diagonalisation of a symmetric matrix: returns `(p, d)` with
/// `p h pᵀ = diag(d)` and `p` invertible.
pub fn diagonalize_congruence<F: Field>(h: &Mat<F>) -> (Mat<F>, Vec<F>) {
    let n = h.len();
    let mut a = h.clone();
    let mut p: Mat<F> = identity(n);
    for k in 0..n {
        if a[k][k].is_zero() {
            // find a nonzero diagonal to swap in, else create one from an off-diagonal
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                swap_sym(&mut a, &mut p, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // row_k += row_j: new a_kk = 2 a_kj
                add_sym(&mut a, &mut p, k, j, F::one());
            } else {
                continue;
            }
        }
        let piv = a[k][k].clone();
        for j in k + 1..n {
            if a[j][k].is_zero() {
                continue;
            }
            let f = -(a[j][k].clone() / piv.clone());
            add_sym(&mut a, &mut p, j, k, f);
        }
    }
    let d = (0..n).map(|i| a[i][i].clone()).collect();
    (p, d)
}

fn swap_sym<F: Field>(a: &mut Mat<F>, p: &mut Mat<F>, i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
    p.swap(i, j);
}

/// row_i += f row_j and col_i += f col_j.
fn add_sym<F: Field>(a: &mut Mat<F>, p: &mut Mat<F>, i: usize, j: usize, f: F) {
    let n = a.len();
    for c in 0..n {
        let t = a[j][c].clone() * f.clone();
        a[i][c] = a[i][c].clone() + t;
    }
    for r in 0..n {
        let t = a[r][j].clone() * f.clone();
        a[r][i] = a[r][i].clone() + t;
    }
    for c in 0..n {
        let t = p[j][c].clone() * f.clone();
        p[i][c] = p[i][c].clone() + t;
    }
}

pub fn map_mat<F, G>(m: &Mat<F>, f: impl Fn(&F) -> G) -> Mat<G> {
    m.iter().map(|r| r.iter().map(&f).collect()).collect()
}
