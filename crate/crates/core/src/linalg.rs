//! Exact linear algebra over the rationals.
//!
//! Every linear map in the crate is a dense [`Matrix`] acting on column
//! vectors: a map `K^n -> K^m` is an `m x n` matrix. Tensor products of
//! basis vectors are indexed lexicographically with the left factor major,
//! so `e_i ⊗ f_j` has index `i * dim(F) + j`.
//!
//! Subspaces are stored by a basis in reduced row echelon form, which makes
//! them canonical: two subspaces are equal iff their stored bases are equal.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;
pub type Vector = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("map does not descend to the quotient: {0}")]
    NotWellDefined(String),
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"` or `"p/q"` with `q != 0`.
pub fn parse_rational(s: &str) -> Result<Rational, LinalgError> {
    let bad = || LinalgError::MalformedRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Rational], coeff: &Rational, v: &[Rational]) {
    if coeff.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += coeff * x;
        }
    }
}

pub fn vector_sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Rational, v: &[Rational]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

/// Kronecker product of vectors, left factor major.
pub fn tensor_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    /// Builds a matrix whose columns are the given vectors of length `dim`.
    pub fn from_columns(dim: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(dim, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), dim, "column length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Rational) {
        if !v.is_zero() {
            self.data[i * self.cols + j] += v;
        }
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| c * x).collect() }
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "apply: vector length {} vs {} columns", v.len(), self.cols);
        let nz: Vec<usize> = (0..v.len()).filter(|&j| !v[j].is_zero()).collect();
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut s = Rational::zero();
                for &j in &nz {
                    if !row[j].is_zero() {
                        s += &row[j] * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                for (j, b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product acting on the lexicographic tensor basis.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.eliminate(true);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate(false).len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place Gauss-Jordan elimination. With `full == false` only rows below
    /// each pivot are cleared, which is enough for the rank.
    fn eliminate(&mut self, full: bool) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            self.swap_rows(p, r);
            let inv = self.data[r * cols + c].recip();
            let mut nz = Vec::new();
            for j in c..cols {
                let x = &mut self.data[r * cols + j];
                if !x.is_zero() {
                    *x *= &inv;
                    nz.push(j);
                }
            }
            let pivot_row: Vec<(usize, Rational)> = nz.iter().map(|&j| (j, self.data[r * cols + j].clone())).collect();
            let start = if full { 0 } else { r + 1 };
            for i in start..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c].clone();
                if f.is_zero() {
                    continue;
                }
                for (j, x) in &pivot_row {
                    self.data[i * cols + j] -= &f * x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Null space of the map, as a subspace of the domain.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vecs = Vec::new();
        for f in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = zero_vector(self.cols);
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            vecs.push(v);
        }
        Subspace::span(self.cols, vecs)
    }

    /// Column space, as a subspace of the codomain.
    pub fn image(&self) -> Subspace {
        Subspace::from_matrix_rows(&self.transpose())
    }

    /// One solution of `self * x = rhs`.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Vector, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "solve: {} rows, rhs of length {}",
                self.rows,
                rhs.len()
            )));
        }
        let aug = self.hstack(&Matrix::from_columns(self.rows, &[rhs.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(LinalgError::Inconsistent);
        }
        let mut x = zero_vector(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Ok(x)
    }

    /// Solves `self * X = rhs` column by column.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if rhs.rows != self.rows {
            return Err(LinalgError::DimensionMismatch("solve_matrix".into()));
        }
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Err(LinalgError::Inconsistent);
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, r.get(i, self.cols + j).clone());
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve_matrix(&Matrix::identity(self.rows)).ok()?;
        (self * &x).is_identity().then_some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).fold(Rational::zero(), |a, b| a + b)
    }

    /// Entry of largest absolute value, used only for diagnostics.
    pub fn max_abs(&self) -> Rational {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product dimension mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&int(-1))
    }
}

/// Column-wise sparse view: entry `j` lists the nonzero `(row, value)` pairs of column `j`.
pub type SparseColumns = Vec<Vec<(usize, Rational)>>;

impl Matrix {
    pub fn sparse_columns(&self) -> SparseColumns {
        let mut out = vec![Vec::new(); self.cols];
        for i in 0..self.rows {
            for (j, x) in self.row(i).iter().enumerate() {
                if !x.is_zero() {
                    out[j].push((i, x.clone()));
                }
            }
        }
        out
    }

    pub fn from_sparse_columns(rows: usize, cols: &SparseColumns) -> Matrix {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col {
                m.add_at(*i, j, x);
            }
        }
        m
    }
}

/// The flip `K^m ⊗ K^n -> K^n ⊗ K^m`.
pub fn swap_matrix(m: usize, n: usize) -> Matrix {
    let mut s = Matrix::zeros(m * n, m * n);
    for i in 0..m {
        for j in 0..n {
            s.set(j * m + i, i * n + j, Rational::one());
        }
    }
    s
}

/// Kronecker product, as a free function.
pub fn tensor_product(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b)
}

/// A linear subspace of `K^n` with a basis in reduced row echelon form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let rows: Vec<Vector> = vectors.into_iter().collect();
        Self::from_matrix_rows(&Matrix::from_rows(ambient, rows))
    }

    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vector(&self, i: usize) -> &[Rational] {
        self.basis.row(i)
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    /// `ambient x dim` matrix sending coordinates to ambient vectors.
    pub fn inclusion(&self) -> Matrix {
        self.basis.transpose()
    }

    /// Remainder of `v` after clearing the pivot coordinates.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                add_scaled(&mut r, &c, self.basis.row(i));
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "contains: wrong ambient");
        is_zero_vector(&self.reduce(v))
    }

    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// `dim x ambient` matrix reading coordinates of vectors that lie in the subspace.
    pub fn coordinate_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.ambient);
        for (i, &p) in self.pivots.iter().enumerate() {
            m.set(i, p, Rational::one());
        }
        m
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.row_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch("subspace sum".into()));
        }
        Ok(Self::from_matrix_rows(&self.basis.vstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch("subspace intersection".into()));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let m = self.inclusion().hstack(&-&other.inclusion());
        let k = m.kernel();
        let d = self.dim();
        let vecs = k.basis_vectors().into_iter().map(|c| self.inclusion().apply(&c[..d]));
        Ok(Subspace::span(self.ambient, vecs))
    }

    pub fn image_under(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient, "image_under: domain mismatch");
        Subspace::span(map.rows(), self.basis.row_vectors().iter().map(|v| map.apply(v)))
    }

    pub fn preimage_under(&self, map: &Matrix) -> Subspace {
        let q = quotient_by(self);
        (&q.projection * map).kernel()
    }

    pub fn is_invariant_under(&self, map: &Matrix) -> bool {
        self.basis.row_vectors().iter().all(|v| self.contains(&map.apply(v)))
    }

    /// Matrix of `map` restricted to the subspace, in its own coordinates.
    pub fn restrict(&self, map: &Matrix) -> Result<Matrix, LinalgError> {
        if !self.is_invariant_under(map) {
            return Err(LinalgError::NotWellDefined("subspace is not invariant".into()));
        }
        Ok(&(&self.coordinate_matrix() * map) * &self.inclusion())
    }
}

/// `ambient / relations`, with representatives given by the non-pivot
/// coordinates of the relations' echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientSpace {
    pub ambient: usize,
    pub relations: Subspace,
    pub projection: Matrix,
    pub section: Matrix,
    pub representatives: Vec<usize>,
}

pub fn quotient_by(sub: &Subspace) -> QuotientSpace {
    let n = sub.ambient_dim();
    let mut is_pivot = vec![false; n];
    for &p in sub.pivots() {
        is_pivot[p] = true;
    }
    let reps: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
    let q = reps.len();
    let mut projection = Matrix::zeros(q, n);
    let mut section = Matrix::zeros(n, q);
    for (k, &j) in reps.iter().enumerate() {
        projection.set(k, j, Rational::one());
        section.set(j, k, Rational::one());
    }
    for (i, &p) in sub.pivots().iter().enumerate() {
        let row = sub.basis_vector(i);
        for (k, &j) in reps.iter().enumerate() {
            if !row[j].is_zero() {
                projection.set(k, p, -row[j].clone());
            }
        }
    }
    QuotientSpace { ambient: n, relations: sub.clone(), projection, section, representatives: reps }
}

impl QuotientSpace {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn project(&self, v: &[Rational]) -> Vector {
        self.projection.apply(v)
    }

    pub fn lift(&self, c: &[Rational]) -> Vector {
        self.section.apply(c)
    }

    /// Matrix of the map induced by `map: ambient -> target.ambient` on quotients.
    pub fn descend(&self, map: &Matrix, target: &QuotientSpace) -> Result<Matrix, LinalgError> {
        if map.cols() != self.ambient || map.rows() != target.ambient {
            return Err(LinalgError::DimensionMismatch("descend".into()));
        }
        for v in self.relations.basis_vectors() {
            if !target.relations.contains(&map.apply(&v)) {
                return Err(LinalgError::NotWellDefined("relations are not mapped into relations".into()));
            }
        }
        Ok(&(&target.projection * map) * &self.section)
    }

    /// Matrix of `map: ambient -> W` on the quotient, if it kills the relations.
    pub fn factor(&self, map: &Matrix) -> Result<Matrix, LinalgError> {
        for v in self.relations.basis_vectors() {
            if !is_zero_vector(&map.apply(&v)) {
                return Err(LinalgError::NotWellDefined("map does not kill the relations".into()));
            }
        }
        Ok(map * &self.section)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    #[test]
    fn rref_examples() {
        let (r, p) = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
        let (r, p) = Matrix::identity(3).rref();
        assert!(r.is_identity());
        assert_eq!(p, vec![0, 1, 2]);
        let (r, _) = m(&[&[0, 1], &[1, 0]]).rref();
        assert!(r.is_identity());
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::zeros(2, 2).kernel(), Subspace::full(2));
        assert!(Matrix::identity(3).kernel().is_zero());
        let k = m(&[&[1, 1]]).kernel();
        assert_eq!(k, Subspace::span(2, vec![vec![int(1), int(-1)]]));
    }

    #[test]
    fn solve_and_tensor_examples() {
        let v = vec![int(3), frac(1, 2), int(-7)];
        assert_eq!(Matrix::identity(3).solve(&v).unwrap(), v);
        assert!(tensor_product(&Matrix::identity(2), &Matrix::identity(3)).is_identity());
        assert_eq!(m(&[&[1, 1], &[1, 1]]).solve(&[int(1), int(2)]), Err(LinalgError::Inconsistent));
        assert!(matches!(Matrix::identity(2).solve(&[int(1)]), Err(LinalgError::DimensionMismatch(_))));
    }

    #[test]
    fn quotient_example() {
        let q = quotient_by(&Subspace::span(2, vec![vec![int(1), int(0)]]));
        assert_eq!(q.dim(), 1);
        assert_eq!(q.projection, m(&[&[0, 1]]));
        assert_eq!(q.project(&[int(5), int(3)]), vec![int(3)]);
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&frac(4, -6)), "-2/3");
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(3, vec![vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)]]);
        let b = Subspace::span(3, vec![vec![int(0), int(1), int(1)], vec![int(0), int(0), int(1)]]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Subspace::span(3, vec![unit_vector(3, 1)]));
        assert!(a.sum(&b).unwrap().is_full());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| Matrix::from_fn(r, c, |i, j| int(v[i * c + j])))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in small_matrix()) {
            prop_assert_eq!(a.kernel().dim() + a.rank(), a.cols());
            for v in a.kernel().basis_vectors() {
                prop_assert!(is_zero_vector(&a.apply(&v)));
            }
        }

        #[test]
        fn rref_idempotent(a in small_matrix()) {
            let (r, p) = a.rref();
            let (r2, p2) = r.rref();
            prop_assert_eq!(r, r2);
            prop_assert_eq!(p, p2);
        }

        #[test]
        fn quotient_section_is_right_inverse(a in small_matrix()) {
            let q = quotient_by(&Subspace::from_matrix_rows(&a));
            prop_assert!((&q.projection * &q.section).is_identity());
            let back = &(&q.section * &q.projection) - &Matrix::identity(a.cols());
            prop_assert!(q.relations.contains_subspace(&back.image()));
            prop_assert!((&q.projection * &q.relations.inclusion()).is_zero());
        }

        #[test]
        fn kron_acts_on_pure_tensors(a in small_matrix(), b in small_matrix()) {
            let k = a.kron(&b);
            for i in 0..a.cols() {
                for j in 0..b.cols() {
                    let x = unit_vector(a.cols(), i);
                    let y = unit_vector(b.cols(), j);
                    prop_assert_eq!(
                        k.apply(&tensor_vectors(&x, &y)),
                        tensor_vectors(&a.apply(&x), &b.apply(&y))
                    );
                }
            }
        }
    }
}
