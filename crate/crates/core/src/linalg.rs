//! Dense exact linear algebra over a [`Field`].

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vec(k: Field, n: usize) -> Vector {
    vec![k.zero(); n]
}

pub fn unit_vec(k: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(k, n);
    v[i] = k.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += &(c * b);
        }
    }
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vector]) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_cols(field: Field, rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut r = Matrix::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(l, j);
                    if !b.is_zero() {
                        let idx = i * r.cols + j;
                        r.data[idx] += &(a * b);
                    }
                }
            }
        }
        r
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        let mut out = zero_vec(self.field, self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        let mut r = self.clone();
        for (a, b) in r.data.iter_mut().zip(&o.data) {
            *a += b;
        }
        r
    }

    pub fn scaled(&self, c: &Scalar) -> Matrix {
        let mut r = self.clone();
        for a in r.data.iter_mut() {
            *a = &*a * c;
        }
        r
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().unwrap();
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let b = m.get(r, j);
                    if !b.is_zero() {
                        let x = m.get(i, j) - &(&f * b);
                        m.set(i, j, x);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (m, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = zero_vec(self.field, self.cols);
            v[free] = self.field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m.get(r, free);
            }
            out.push(v);
        }
        out
    }

    /// Some solution of `self * x = b`.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "shape mismatch");
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.field, self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = m.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(self.field, 0, 0));
        }
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, m.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// Incrementally built span that remembers how its echelon rows combine the inserted vectors.
#[derive(Clone, Debug)]
pub struct Span {
    field: Field,
    dim: usize,
    rows: Vec<(usize, Vector, Vector)>,
    basis: Vec<Vector>,
}

impl Span {
    pub fn new(field: Field, dim: usize) -> Self {
        Span {
            field,
            dim,
            rows: Vec::new(),
            basis: Vec::new(),
        }
    }

    pub fn from_vectors(field: Field, dim: usize, vs: &[Vector]) -> Self {
        let mut s = Span::new(field, dim);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Independent vectors accepted so far, in insertion order.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Residual of `v` and coefficients `c` with `v = residual + sum c_i basis_i`.
    pub fn reduce(&self, v: &[Scalar]) -> (Vector, Vector) {
        let mut r = v.to_vec();
        let mut c = zero_vec(self.field, self.basis.len());
        for (p, row, combo) in &self.rows {
            if r[*p].is_zero() {
                continue;
            }
            let f = r[*p].clone();
            add_scaled(&mut r, &-&f, row);
            for (ci, x) in c.iter_mut().zip(combo) {
                if !x.is_zero() {
                    *ci += &(&f * x);
                }
            }
        }
        (r, c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v).0)
    }

    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        let (r, c) = self.reduce(v);
        is_zero_vec(&r).then_some(c)
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        let (r, c) = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().unwrap();
        let row = scale(&inv, &r);
        let mut combo: Vector = c.iter().map(|x| -&(x * &inv)).collect();
        combo.push(inv);
        for (_, _, old) in self.rows.iter_mut() {
            old.push(self.field.zero());
        }
        self.rows.push((p, row, combo));
        self.basis.push(v.to_vec());
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let k = Field::Rationals;
        let vs: Vec<Vector> = rows.iter().map(|r| r.iter().map(|&x| k.int(x)).collect()).collect();
        Matrix::from_rows(k, rows[0].len(), &vs)
    }

    #[test]
    fn rank_and_nullspace() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(is_zero_vec(&m.mul_vec(&ns[0])));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = q(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Field::Rationals, 2));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn span_coordinates() {
        let k = Field::prime(3).unwrap();
        let a = vec![k.int(1), k.int(2), k.int(0)];
        let b = vec![k.int(0), k.int(1), k.int(1)];
        let s = Span::from_vectors(k, 3, &[a.clone(), b.clone(), a.clone()]);
        assert_eq!(s.rank(), 2);
        let mut v = scale(&k.int(2), &a);
        add_scaled(&mut v, &k.int(1), &b);
        assert_eq!(s.coords(&v), Some(vec![k.int(2), k.int(1)]));
        assert!(s.coords(&[k.int(0), k.int(0), k.int(1)]).is_none());
    }
}
