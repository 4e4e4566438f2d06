//! Dense exact matrices over F_p with Gaussian elimination.
//!
//! Vectors are rows; a group element g acts on the right, v -> v * A_g.

use crate::error::{Error, Result};
use crate::scalar::mod_inv;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn new(p: u64, rows: usize, cols: usize, data: Vec<u64>) -> FpMatrix {
        assert_eq!(data.len(), rows * cols);
        let data = data.into_iter().map(|x| x % p).collect();
        FpMatrix { p, rows, cols, data }
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> FpMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|x| x % p));
        }
        FpMatrix { p, rows: r, cols: c, data }
    }

    pub fn zero(p: u64, rows: usize, cols: usize) -> FpMatrix {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> FpMatrix {
        let mut m = FpMatrix::zero(p, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == FpMatrix::identity(self.p, self.rows)
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zero(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn multiply(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.p, other.p);
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = FpMatrix::zero(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = (out[(i, j)] + a * other[(k, j)]) % self.p;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a + b) % self.p)
            .collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u64) -> FpMatrix {
        let c = c % self.p;
        let data = self.data.iter().map(|a| a * c % self.p).collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn inverse(&self) -> Result<FpMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of non-square".into()));
        }
        let n = self.rows;
        let p = self.p;
        let mut a = self.clone();
        let mut inv = FpMatrix::identity(p, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[(r, col)] != 0).ok_or(Error::SingularMatrix)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let f = mod_inv(a[(col, col)], p);
            a.scale_row(col, f);
            inv.scale_row(col, f);
            for r in 0..n {
                if r != col && a[(r, col)] != 0 {
                    let f = a[(r, col)];
                    a.sub_scaled_row(r, col, f);
                    inv.sub_scaled_row(r, col, f);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn scale_row(&mut self, i: usize, f: u64) {
        for c in 0..self.cols {
            self[(i, c)] = self[(i, c)] * f % self.p;
        }
    }

    fn sub_scaled_row(&mut self, dst: usize, src: usize, f: u64) {
        for c in 0..self.cols {
            let s = self[(src, c)] * f % self.p;
            self[(dst, c)] = (self[(dst, c)] + self.p - s) % self.p;
        }
    }
}

impl std::ops::Index<(usize, usize)> for FpMatrix {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FpMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }
}

/// v * M for a row vector v.
pub fn row_times_matrix(p: u64, v: &[u64], m: &FpMatrix) -> Vec<u64> {
    assert_eq!(v.len(), m.rows);
    let mut out = vec![0u64; m.cols];
    for (k, &a) in v.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for j in 0..m.cols {
            out[j] = (out[j] + a * m[(k, j)]) % p;
        }
    }
    out
}

pub fn vec_add(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
}

pub fn vec_scale(p: u64, a: &[u64], c: u64) -> Vec<u64> {
    a.iter().map(|x| x * (c % p) % p).collect()
}

/// Row space in reduced row-echelon form; the canonical basis of a subspace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowSpace {
    pub p: u64,
    pub ambient_dim: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(p: u64, ambient_dim: usize, vectors: &[Vec<u64>]) -> RowSpace {
        let mut s = RowSpace::empty(p, ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim);
            s.insert(v);
        }
        s
    }

    pub fn empty(p: u64, ambient_dim: usize) -> RowSpace {
        RowSpace { p, ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Inserts a vector, keeping reduced echelon form. Returns true if the
    /// rank grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut v = self.reduce(v);
        let Some(col) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = mod_inv(v[col], self.p);
        v = vec_scale(self.p, &v, f);
        // clear this column from existing rows
        for r in 0..self.rows.len() {
            let c = self.rows[r][col];
            if c != 0 {
                let sub = vec_scale(self.p, &v, c);
                self.rows[r] = self
                    .rows[r]
                    .iter()
                    .zip(&sub)
                    .map(|(a, b)| (a + self.p - b) % self.p)
                    .collect();
            }
        }
        let pos = self.pivots.iter().position(|&q| q > col).unwrap_or(self.pivots.len());
        self.pivots.insert(pos, col);
        self.rows.insert(pos, v);
        true
    }

    /// Residue of v modulo the row space (pivot columns cleared).
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let mut v: Vec<u64> = v.iter().map(|x| x % self.p).collect();
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            let c = v[col];
            if c != 0 {
                for j in 0..self.ambient_dim {
                    v[j] = (v[j] + self.p - row[j] * c % self.p) % self.p;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_space(&self, other: &RowSpace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Non-pivot column indices: coordinates of the quotient space.
    pub fn complement_columns(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// Basis of {x : M x = 0} (column null space), as row vectors of length cols.
pub fn null_space(m: &FpMatrix) -> Vec<Vec<u64>> {
    let p = m.p;
    let space = RowSpace::new(p, m.cols, &(0..m.rows).map(|i| m.row(i).to_vec()).collect::<Vec<_>>());
    let pivots = space.pivots();
    let free: Vec<usize> = space.complement_columns();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![0u64; m.cols];
        v[fc] = 1;
        for (row, &pc) in space.rows().iter().zip(pivots) {
            // x_pc = -row[fc]
            v[pc] = (p - row[fc]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Basis of {v : v M = 0} (left null space), as row vectors of length rows.
pub fn left_null_space(m: &FpMatrix) -> Vec<Vec<u64>> {
    null_space(&m.transpose())
}
