//! Row-sparse matrices over any `Ring`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, PartialEq, Debug)]
pub struct SparseMatrix<R> {
    nrows: usize,
    ncols: usize,
    rows: Vec<BTreeMap<usize, R>>,
}

impl<R: Ring> SparseMatrix<R> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![BTreeMap::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, R::one())
    }

    pub fn scalar(n: usize, c: R) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for i in 0..n {
                m.rows[i].insert(i, c.clone());
            }
        }
        m
    }

    pub fn from_dense(rows: Vec<Vec<R>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut m = Self::zeros(nrows, ncols);
        for (i, r) in rows.into_iter().enumerate() {
            assert_eq!(r.len(), ncols, "ragged dense matrix");
            for (j, x) in r.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        self.rows[i].get(&j).cloned().unwrap_or_else(R::zero)
    }

    pub fn get_ref(&self, i: usize, j: usize) -> Option<&R> {
        self.rows[i].get(&j)
    }

    pub fn set(&mut self, i: usize, j: usize, x: R) {
        assert!(i < self.nrows && j < self.ncols, "index out of range");
        if x.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, x);
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &R) {
        let cur = self.get(i, j);
        self.set(i, j, cur.add(x));
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, R> {
        &self.rows[i]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    fn check_same_shape(&self, o: &Self) -> Result<()> {
        if self.nrows != o.nrows || self.ncols != o.ncols {
            return Err(Error::DimensionMismatch(format!("{}x{} vs {}x{}", self.nrows, self.ncols, o.nrows, o.ncols)));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_same_shape(o)?;
        let mut out = self.clone();
        for (i, j, x) in o.entries() {
            out.add_at(i, j, x);
        }
        Ok(out)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }

    pub fn add(&self, o: &Self) -> Self {
        self.try_add(o).expect("matrix shapes differ")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.try_sub(o).expect("matrix shapes differ")
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.ncols != o.nrows {
            return Err(Error::DimensionMismatch(format!(
                "product {}x{} by {}x{}",
                self.nrows, self.ncols, o.nrows, o.ncols
            )));
        }
        let mut out = Self::zeros(self.nrows, o.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, R> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &o.rows[*k] {
                    let p = a.mul(b);
                    match acc.get_mut(j) {
                        Some(v) => *v = v.add(&p),
                        None => {
                            acc.insert(*j, p);
                        }
                    }
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.rows[i] = acc;
        }
        Ok(out)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("matrix shapes differ")
    }

    /// c * M, with the scalar on the left.
    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| c.mul(x))
    }

    /// M * c, with the scalar on the right.
    pub fn scale_right(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn map<S: Ring, F: Fn(&R) -> S>(&self, f: F) -> SparseMatrix<S> {
        let mut out = SparseMatrix::zeros(self.nrows, self.ncols);
        for (i, j, x) in self.entries() {
            out.set(i, j, f(x));
        }
        out
    }

    pub fn try_map<S: Ring, E, F: Fn(&R) -> std::result::Result<S, E>>(
        &self,
        f: F,
    ) -> std::result::Result<SparseMatrix<S>, E> {
        let mut out = SparseMatrix::zeros(self.nrows, self.ncols);
        for (i, j, x) in self.entries() {
            out.set(i, j, f(x)?);
        }
        Ok(out)
    }

    /// Kronecker product; left factor entries multiply on the left.
    pub fn kron(&self, o: &Self) -> Self {
        let mut out = Self::zeros(self.nrows * o.nrows, self.ncols * o.ncols);
        for (i, j, a) in self.entries() {
            for (k, l, b) in o.entries() {
                out.set(i * o.nrows + k, j * o.ncols + l, a.mul(b));
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.ncols, self.nrows);
        for (i, j, x) in self.entries() {
            out.set(j, i, x.clone());
        }
        out
    }

    pub fn trace(&self) -> R {
        let mut acc = R::zero();
        for i in 0..self.nrows.min(self.ncols) {
            if let Some(x) = self.rows[i].get(&i) {
                acc = acc.add(x);
            }
        }
        acc
    }

    /// AB - BA.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// c1 AB - c2 BA.
    pub fn twisted_commutator(&self, o: &Self, c1: &R, c2: &R) -> Self {
        self.mul(o).scale(c1).sub(&o.mul(self).scale(c2))
    }

    /// Restriction to a set of rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, i) in rows.iter().enumerate() {
            for (b, j) in cols.iter().enumerate() {
                if let Some(x) = self.rows[*i].get(j) {
                    out.set(a, b, x.clone());
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<R>> {
        (0..self.nrows).map(|i| (0..self.ncols).map(|j| self.get(i, j)).collect()).collect()
    }

    /// Inverse of I + N for nilpotent N, as the finite geometric series.
    pub fn unipotent_inverse(&self) -> Result<Self> {
        let n = self.nrows;
        let nil = self.sub(&Self::identity(n)).neg();
        let mut out = Self::identity(n);
        let mut p = Self::identity(n);
        for _ in 0..n {
            p = p.mul(&nil);
            if p.is_zero() {
                return Ok(out);
            }
            out = out.add(&p);
        }
        Err(Error::RankDeficient("matrix is not unipotent".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn m(rows: &[&[i64]]) -> SparseMatrix<BigRational> {
        SparseMatrix::from_dense(
            rows.iter().map(|r| r.iter().map(|x| BigRational::from_integer((*x).into())).collect()).collect(),
        )
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let a = SparseMatrix::<BigRational>::identity(2);
        let b = SparseMatrix::<BigRational>::identity(3);
        assert_eq!(a.kron(&b), SparseMatrix::identity(6));
    }

    #[test]
    fn mixed_product_property() {
        let a = m(&[&[1, 2], &[0, 3]]);
        let b = m(&[&[0, 1], &[1, 1]]);
        let c = m(&[&[2, 0], &[5, 1]]);
        let d = m(&[&[1, -1], &[0, 4]]);
        assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn unipotent_inverse_works() {
        let u = m(&[&[1, 2, 3], &[0, 1, 4], &[0, 0, 1]]);
        let inv = u.unipotent_inverse().unwrap();
        assert_eq!(u.mul(&inv), SparseMatrix::identity(3));
    }
}
