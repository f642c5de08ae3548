//! Exact rational linear algebra: dense matrices, reduced echelon forms,
//! canonical subspaces with exact membership tests, and definiteness
//! certificates via symmetric elimination. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact scalar used throughout the crate.
pub type Rat = BigRational;

/// Shorthand for an integer-valued `Rat`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Extracts an integer, panicking if the value is not integral.
/// Used where integrality is a structural guarantee (structure constants,
/// coroot coordinates), so a fractional value indicates a bug.
pub fn expect_int(r: &Rat) -> i64 {
    assert!(r.is_integer(), "expected integer, got {r}");
    let n = r.numer();
    i64::try_from(n.clone()).unwrap_or_else(|_| panic!("integer {n} out of i64 range"))
}

/// Sparse vector: sorted by index, no zero entries.
pub type SparseVec = Vec<(usize, Rat)>;

/// Adds `scale * b` into sparse vector `a` (both sorted), returning a sorted result.
pub fn sparse_add_scaled(a: &SparseVec, b: &SparseVec, scale: &Rat) -> SparseVec {
    if scale.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ia, va)), Some((ib, vb))) if ia == ib => {
                let v = va + vb * scale;
                if !v.is_zero() {
                    out.push((*ia, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ia, va)), Some((ib, _))) if ia < ib => {
                out.push((*ia, va.clone()));
                i += 1;
            }
            (Some(_), Some((ib, vb))) => {
                let v = vb * scale;
                if !v.is_zero() {
                    out.push((*ib, v));
                }
                j += 1;
            }
            (Some((ia, va)), None) => {
                out.push((*ia, va.clone()));
                i += 1;
            }
            (None, Some((ib, vb))) => {
                let v = vb * scale;
                if !v.is_zero() {
                    out.push((*ib, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub fn sparse_from_dense(v: &[Rat]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Dense row-major matrix over `Rat`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + a * b;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn scaled(&self, s: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }
}

/// In-place Gauss–Jordan reduction. Returns the pivot columns.
#[allow(clippy::needless_range_loop)]
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..ncols {
                    let v = &rows[i][j] - &f * &rows[r][j];
                    rows[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A subspace of `ℚ^ambient_dim` held in reduced row echelon form.
///
/// The representation is canonical: two subspaces are equal as sets iff
/// their row matrices are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    /// RREF basis rows, stored sparse, ordered by pivot column.
    rows: Vec<SparseVec>,
    /// pivot column of each row
    pivots: Vec<usize>,
    /// pivot column -> row index
    pivot_row: Vec<Option<usize>>,
}

impl Subspace {
    pub fn from_spanning(ambient_dim: usize, vecs: Vec<Vec<Rat>>) -> Self {
        let mut rows: Vec<Vec<Rat>> = vecs;
        for v in &rows {
            assert_eq!(v.len(), ambient_dim, "spanning vector length mismatch");
        }
        let pivots = rref(&mut rows);
        let sparse_rows: Vec<SparseVec> = rows.iter().map(|r| sparse_from_dense(r)).collect();
        let mut pivot_row = vec![None; ambient_dim];
        for (i, &p) in pivots.iter().enumerate() {
            pivot_row[p] = Some(i);
        }
        Subspace {
            ambient_dim,
            rows: sparse_rows,
            pivots,
            pivot_row,
        }
    }

    pub fn from_sparse_spanning(ambient_dim: usize, vecs: Vec<SparseVec>) -> Self {
        Self::from_spanning(
            ambient_dim,
            vecs.iter()
                .map(|v| sparse_to_dense(v, ambient_dim))
                .collect(),
        )
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace::from_spanning(ambient_dim, Vec::new())
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace::from_spanning(
            ambient_dim,
            (0..ambient_dim)
                .map(|i| {
                    let mut v = vec![Rat::zero(); ambient_dim];
                    v[i] = Rat::one();
                    v
                })
                .collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis_rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn basis_row_dense(&self, i: usize) -> Vec<Rat> {
        sparse_to_dense(&self.rows[i], self.ambient_dim)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the
    /// subspace.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut cur = v.clone();
        loop {
            let hit = cur
                .iter()
                .find_map(|(c, x)| self.pivot_row[*c].map(|r| (r, x.clone())));
            match hit {
                Some((r, coeff)) => {
                    let neg = -coeff;
                    cur = sparse_add_scaled(&cur, &self.rows[r], &neg);
                }
                None => return cur,
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains_dense(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        self.contains(&sparse_from_dense(v))
    }

    /// Coordinates of `v` in the basis rows, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let mut cur = sparse_from_dense(v);
        let mut coords = vec![Rat::zero(); self.rows.len()];
        loop {
            let hit = cur
                .iter()
                .find_map(|(c, x)| self.pivot_row[*c].map(|r| (r, x.clone())));
            match hit {
                Some((r, coeff)) => {
                    coords[r] = coeff.clone();
                    let neg = -coeff;
                    cur = sparse_add_scaled(&cur, &self.rows[r], &neg);
                }
                None => {
                    return if cur.is_empty() { Some(coords) } else { None };
                }
            }
        }
    }
}

/// Null space of a square matrix, as a canonical subspace.
pub fn kernel(m: &Matrix) -> Subspace {
    let mut rows: Vec<Vec<Rat>> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    let pivots = rref(&mut rows);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rat::zero(); m.cols];
        v[f] = Rat::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -rows[r][f].clone();
        }
        basis.push(v);
    }
    Subspace::from_spanning(m.cols, basis)
}

/// Decides whether a symmetric matrix is negative definite, by exact
/// symmetric elimination on its negation: positive definite iff every
/// pivot encountered is positive (no pivoting needed in the definite case).
#[allow(clippy::needless_range_loop)]
pub fn is_negative_definite(m: &Matrix) -> Result<bool> {
    if m.rows != m.cols {
        return Err(Error::NotSquare);
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = m.rows;
    if n == 0 {
        return Ok(false);
    }
    // work on -m
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|i| m.row(i).iter().map(|x| -x.clone()).collect())
        .collect();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return Ok(false);
        }
        for i in (k + 1)..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let v = &a[i][j] - &f * &a[k][j];
                a[i][j] = v;
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    #[test]
    fn rref_is_canonical() {
        let a = Subspace::from_spanning(3, dense(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]));
        let b = Subspace::from_spanning(3, dense(&[&[1, 3, 4], &[3, 7, 10]]));
        assert_eq!(a.dim(), 2);
        assert_eq!(a, b);
    }

    #[test]
    fn membership_and_reduce() {
        let s = Subspace::from_spanning(4, dense(&[&[1, 0, 2, 0], &[0, 1, -1, 0]]));
        assert!(s.contains_dense(&[rat(2), rat(3), rat(1), rat(0)]));
        assert!(!s.contains_dense(&[rat(0), rat(0), rat(0), rat(1)]));
        let coords = s
            .coordinates(&[rat(2), rat(3), rat(1), rat(0)])
            .expect("in span");
        assert_eq!(coords, vec![rat(2), rat(3)]);
    }

    #[test]
    fn kernel_of_projector() {
        // A - I for A = diag(1, -1, 1) has kernel spanned by e1, e3.
        let mut a = Matrix::zeros(3, 3);
        a.set(1, 1, rat(-2));
        let k = kernel(&a);
        assert_eq!(k.dim(), 2);
        assert!(k.contains_dense(&[rat(1), rat(0), rat(0)]));
        assert!(!k.contains_dense(&[rat(0), rat(1), rat(0)]));
    }

    #[test]
    fn definiteness_pivots() {
        let neg = Matrix::from_rows(dense(&[&[-8, 0], &[0, -8]]));
        assert!(is_negative_definite(&neg).unwrap());
        let indef = Matrix::from_rows(dense(&[&[8, 0], &[0, -8]]));
        assert!(!is_negative_definite(&indef).unwrap());
        let zero = Matrix::zeros(2, 2);
        assert!(!is_negative_definite(&zero).unwrap());
        let nonsym = Matrix::from_rows(dense(&[&[1, 2], &[0, 1]]));
        assert!(matches!(
            is_negative_definite(&nonsym),
            Err(Error::NotSymmetric)
        ));
    }

    #[test]
    fn definiteness_with_offdiagonal() {
        // -(Cartan matrix of A2) is negative definite.
        let m = Matrix::from_rows(dense(&[&[-2, 1], &[1, -2]]));
        assert!(is_negative_definite(&m).unwrap());
    }
}
