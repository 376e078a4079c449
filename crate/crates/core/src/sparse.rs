//! Sparse rational matrices.

use crate::linalg::{Field, Q};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Row-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BTreeMap<usize, Q>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::from_integer(1.into()));
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.data[r].get(&c).cloned().unwrap_or_else(Q::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        if v.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Q) {
        let e = self.data[r].entry(c).or_insert_with(Q::zero);
        *e += v;
        if e.is_zero() {
            self.data[r].remove(&c);
        }
    }

    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, &Q)> {
        self.data[r].iter().map(|(&c, v)| (c, v))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            for (&k, a) in row {
                for (&c, b) in &other.data[k] {
                    out.add_to(r, c, &(a * b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_to(r, c, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_to(r, c, &-v);
        }
        out
    }

    pub fn scale(&self, s: &Q) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for (r, c, v) in self.entries() {
            out.set(r, c, v * s);
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for (r, c, v) in self.entries() {
            out.set(c, r, v.clone());
        }
        out
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Kronecker product `A ⊗ B`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for (r, c, a) in self.entries() {
            for (rr, cc, b) in other.entries() {
                out.set(r * other.rows + rr, c * other.cols + cc, a * b);
            }
        }
        out
    }

    /// Matrix-vector product over any field containing the rationals.
    pub fn apply<F: Field>(&self, v: &[F], embed: impl Fn(&Q) -> F) -> Vec<F> {
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(F::nil(), |acc, (&c, a)| if v[c].is_nil() { acc } else { acc.add(&embed(a).mul(&v[c])) })
            })
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c)).collect())
            .collect()
    }
}
