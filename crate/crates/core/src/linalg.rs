//! Dense complex-matrix helpers shared by every module.
//!
//! Thin layer over `nalgebra`; rank and null-space decisions go through
//! SVD with a relative singular-value threshold.

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type CMat = DMatrix<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn ident(n: usize) -> CMat {
    CMat::identity(n, n)
}

/// Entrywise max modulus.
pub fn max_norm(m: &CMat) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

pub fn adjoint(m: &CMat) -> CMat {
    m.adjoint()
}

pub fn commutator(a: &CMat, b: &CMat) -> CMat {
    a * b - b * a
}

pub fn anticommutator(a: &CMat, b: &CMat) -> CMat {
    a * b + b * a
}

pub fn trace(m: &CMat) -> Complex64 {
    m.diagonal().iter().sum()
}

/// tr(A† B), the Frobenius pairing.
pub fn frobenius(a: &CMat, b: &CMat) -> Complex64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// Column-major vectorization (nalgebra's native storage order).
pub fn vectorize(m: &CMat) -> CMat {
    CMat::from_column_slice(m.len(), 1, m.as_slice())
}

pub fn unvectorize(v: &CMat, rows: usize, cols: usize) -> CMat {
    CMat::from_column_slice(rows, cols, v.as_slice())
}

pub fn kronecker(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

/// Matrix of the map X -> L·X on column-major vectorized matrices.
pub fn left_mul_operator(l: &CMat) -> CMat {
    let d = l.nrows();
    ident(d).kronecker(l)
}

/// Matrix of the map X -> X·R on column-major vectorized matrices.
pub fn right_mul_operator(r: &CMat) -> CMat {
    let d = r.nrows();
    r.transpose().kronecker(&ident(d))
}

/// Numeric rank with singular values below `rel_tol * sigma_max` treated as zero.
pub fn rank(m: &CMat, rel_tol: f64) -> usize {
    let svd = m.clone().svd(false, false);
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    if smax == 0.0 {
        return 0;
    }
    svd.singular_values
        .iter()
        .filter(|&&s| s > rel_tol * smax)
        .count()
}

/// Orthonormal basis (as columns) of the null space of `m`.
///
/// Columns are the right singular vectors whose singular values fall
/// below `rel_tol * sigma_max`; an all-zero map returns the full space.
pub fn null_space(m: &CMat, rel_tol: f64) -> CMat {
    let cols = m.ncols();
    let svd = m.clone().svd(false, true);
    let v_t = svd.v_t.expect("svd with v_t requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let mut keep: Vec<usize> = Vec::new();
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if smax == 0.0 || s <= rel_tol * smax {
            keep.push(i);
        }
    }
    // v_t may be economy-sized; indices past its rows span the cokernel too.
    let mut basis = CMat::zeros(cols, keep.len() + cols.saturating_sub(v_t.nrows()));
    let mut col = 0;
    for &i in &keep {
        basis.set_column(col, &v_t.row(i).adjoint());
        col += 1;
    }
    if v_t.nrows() < cols {
        // complete with the orthogonal complement of the row space of v_t
        let mut proj = ident(cols) - v_t.adjoint() * &v_t;
        let extra = orthonormal_columns(&mut proj, rel_tol);
        for c in 0..extra.ncols() {
            basis.set_column(col, &extra.column(c));
            col += 1;
        }
    }
    basis.columns(0, col).into_owned()
}

/// Orthonormal basis of the column span of `m` (columns of the returned matrix).
pub fn orthonormal_columns(m: &CMat, rel_tol: f64) -> CMat {
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("svd with u requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    if smax == 0.0 {
        return CMat::zeros(m.nrows(), 0);
    }
    let r = svd
        .singular_values
        .iter()
        .filter(|&&s| s > rel_tol * smax)
        .count();
    u.columns(0, r).into_owned()
}

/// Matrix exponential by scaling and squaring with a Taylor kernel.
/// Fine for the small, well-scaled matrices used here.
pub fn expm(m: &CMat) -> CMat {
    let n = m.nrows();
    let norm = max_norm(m) * n as f64;
    let s = norm.log2().ceil().max(0.0) as u32 + 1;
    let scaled = m.map(|c| c / Complex64::new(2f64.powi(s as i32), 0.0));
    let mut term = ident(n);
    let mut sum = ident(n);
    for k in 1..24 {
        term = &term * &scaled / Complex64::new(k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

/// Span matrix whose columns are the vectorized input matrices.
pub fn span_matrix(mats: &[CMat]) -> CMat {
    assert!(!mats.is_empty());
    let len = mats[0].len();
    let mut m = CMat::zeros(len, mats.len());
    for (j, x) in mats.iter().enumerate() {
        m.set_column(j, &vectorize(x).column(0));
    }
    m
}

/// Residual of `target` after least-squares projection onto the column
/// span of `basis` (both vectorized), in max norm.
pub fn projection_residual(basis: &CMat, target: &CMat) -> f64 {
    let q = orthonormal_columns(basis, 1e-12);
    let v = vectorize(target);
    let resid = &v - &q * (q.adjoint() * &v);
    max_norm(&resid)
}
