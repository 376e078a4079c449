//! Exact dense linear algebra over a field.
//!
//! Everything here is generic over [`Field`] so the same elimination code
//! runs over the rationals and over [`Surd`](crate::surd::Surd) numbers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;

/// Exact rational scalar.
pub type Q = BigRational;
/// Rational vector.
pub type QVec = Vec<Q>;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The rational `n / d`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Rational vector from integers.
pub fn qvec(xs: &[i64]) -> QVec {
    xs.iter().map(|&x| q(x)).collect()
}

/// Minimal field interface needed by the elimination routines.
pub trait Field: Clone + PartialEq + Debug {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; the caller guarantees `self != 0`.
    fn inv(&self) -> Self;
}

impl Field for Q {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Reduce `m` (row-major, `ncols` columns) to reduced row echelon form in
/// place. Returns the pivot columns; rows past the rank are zero.
pub fn rref<F: Field>(m: &mut [Vec<F>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_nil()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv();
        for x in m[row].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_nil() {
                continue;
            }
            let f = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_nil() {
                    *x = x.sub(&f.mul(p));
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank of a matrix given by rows.
pub fn rank<F: Field>(rows: &[Vec<F>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : M x = 0}` where `M` has `ncols` columns. The basis is the
/// standard one attached to the free columns of the RREF.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F::nil(); ncols];
        v[free] = F::unit();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = m[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Some solution of `M x = b`, or `None` if the system is inconsistent.
pub fn solve<F: Field>(rows: &[Vec<F>], b: &[F], ncols: usize) -> Option<Vec<F>> {
    let mut aug: Vec<Vec<F>> = rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![F::nil(); ncols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][ncols].clone();
    }
    Some(x)
}

/// Canonical (RREF) basis of the span of `vectors`.
pub fn row_basis<F: Field>(vectors: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m = vectors.to_vec();
    let r = rref(&mut m, ncols).len();
    m.truncate(r);
    m
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse<F: Field>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { F::unit() } else { F::nil() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_nil())
                        .fold(F::nil(), |acc, (x, brow)| acc.add(&x.mul(&brow[j])))
                })
                .collect()
        })
        .collect()
}

pub fn transpose<F: Field>(a: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    (0..ncols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vadd(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vsub(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vscale(s: &Q, a: &[Q]) -> QVec {
    a.iter().map(|x| s * x).collect()
}

pub fn is_zero_vec(a: &[Q]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Orthogonal projection matrix onto the span of `basis` (standard dot
/// product on `dim`-space). An empty basis gives the zero matrix.
pub fn projection(basis: &[QVec], dim: usize) -> Vec<QVec> {
    let b = row_basis(basis, dim);
    if b.is_empty() {
        return vec![vec![<Q as Zero>::zero(); dim]; dim];
    }
    let gram: Vec<QVec> = b
        .iter()
        .map(|u| b.iter().map(|v| dot(u, v)).collect())
        .collect();
    let ginv = inverse(&gram).expect("basis vectors are independent");
    // P = Bᵀ G⁻¹ B
    let bt = transpose(&b, dim);
    mat_mul(&mat_mul(&bt, &ginv), &b)
}

pub fn mat_vec(m: &[QVec], v: &[Q]) -> QVec {
    m.iter().map(|r| dot(r, v)).collect()
}

/// Basis of the intersection of two subspaces of `dim`-space.
pub fn intersect(a: &[QVec], b: &[QVec], dim: usize) -> Vec<QVec> {
    // Orthogonal complement of a subspace = nullspace of its basis rows;
    // the intersection is the nullspace of both complements stacked.
    let mut rows = nullspace(a, dim);
    rows.extend(nullspace(b, dim));
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    row_basis(&nullspace(&rows, dim), dim)
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[QVec], v: &[Q], dim: usize) -> bool {
    let mut rows = basis.to_vec();
    let r = rank(&rows, dim);
    rows.push(v.to_vec());
    rank(&rows, dim) == r
}

/// Affine independence of a finite point set.
pub fn affinely_independent(points: &[QVec], dim: usize) -> bool {
    let Some((first, rest)) = points.split_first() else {
        return true;
    };
    let diffs: Vec<QVec> = rest.iter().map(|p| vsub(p, first)).collect();
    rank(&diffs, dim) == diffs.len()
}

/// Barycentric coordinates of `p` with respect to affinely independent
/// `points`, or `None` if `p` is outside their affine span.
pub fn barycentric(points: &[QVec], p: &[Q], dim: usize) -> Option<QVec> {
    // Unknowns b_k with Σ b_k P_k = p and Σ b_k = 1.
    let n = points.len();
    let mut rows: Vec<QVec> = (0..dim)
        .map(|i| points.iter().map(|pt| pt[i].clone()).collect())
        .collect();
    rows.push(vec![<Q as One>::one(); n]);
    let mut rhs = p.to_vec();
    rhs.push(<Q as One>::one());
    solve(&rows, &rhs, n)
}

pub fn is_positive(x: &Q) -> bool {
    x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_rank_one() {
        let m = vec![qvec(&[1, 2, 3])];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(Zero::is_zero(&dot(&m[0], v)));
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = vec![qvec(&[1, 1]), qvec(&[2, 2])];
        assert!(solve(&m, &qvec(&[1, 3]), 2).is_none());
        let x = solve(&m, &qvec(&[1, 2]), 2).unwrap();
        assert_eq!(&x[0] + &x[1], q(1));
    }

    #[test]
    fn projection_onto_diagonal() {
        let p = projection(&[qvec(&[1, 1])], 2);
        assert_eq!(p, vec![vec![qr(1, 2), qr(1, 2)], vec![qr(1, 2), qr(1, 2)]]);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![qvec(&[2, 1]), qvec(&[1, 1])];
        let inv = inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), vec![qvec(&[1, 0]), qvec(&[0, 1])]);
        assert!(inverse(&[qvec(&[1, 2]), qvec(&[2, 4])]).is_none());
    }

    #[test]
    fn intersection_of_planes() {
        let a = vec![qvec(&[1, 0, 0]), qvec(&[0, 1, 0])];
        let b = vec![qvec(&[0, 1, 0]), qvec(&[0, 0, 1])];
        let i = intersect(&a, &b, 3);
        assert_eq!(i, vec![qvec(&[0, 1, 0])]);
    }

    #[test]
    fn barycentric_midpoint() {
        let pts = vec![qvec(&[2, 0]), qvec(&[0, 2])];
        let b = barycentric(&pts, &qvec(&[1, 1]), 2).unwrap();
        assert_eq!(b, vec![qr(1, 2), qr(1, 2)]);
        assert!(barycentric(&pts, &qvec(&[1, 0]), 2).is_none());
    }
}
