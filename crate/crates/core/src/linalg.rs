//! Dense exact linear algebra: row reduction, kernels and subspaces.
//!
//! A [`Subspace`] is stored by its reduced row echelon basis, which is unique,
//! so equality of subspaces is plain equality of the stored rows.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalars::{FieldSpec, Scalar};

/// A dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    cols: usize,
    rows: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn new(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "matrix rows must have equal length");
        Matrix { field, cols, rows }
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, cols, rows: alloc::vec![alloc::vec![field.zero(); cols]; rows] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.rows[i][i] = field.one();
        }
        m
    }

    pub fn from_i64(field: FieldSpec, entries: &[&[i64]]) -> Self {
        let cols = entries.first().map_or(0, |r| r.len());
        let rows = entries.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::new(field, cols, rows)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.rows[r][c]
    }

    /// Reduced row echelon form and rank. Zero rows are kept at the bottom so
    /// the shape is preserved.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut rows = self.rows.clone();
        let pivots = rref_in_place(&mut rows, self.cols);
        let rank = pivots.len();
        rows.resize(self.rows.len(), alloc::vec![self.field.zero(); self.cols]);
        (Matrix { field: self.field, cols: self.cols, rows }, rank)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        rref_in_place(&mut rows, self.cols).len()
    }

    /// Basis of the right null space `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Subspace {
        let mut rows = self.rows.clone();
        let pivots = rref_in_place(&mut rows, self.cols);
        let mut is_pivot = alloc::vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = alloc::vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -&row[free];
            }
            basis.push(v);
        }
        Subspace::span(self.field, self.cols, basis)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(v).fold(self.field.zero(), |acc, (a, b)| if a.is_zero() || b.is_zero() { acc } else { &acc + &(a * b) }))
            .collect()
    }
}

/// Row-reduces `rows` in place, dropping zero rows. Returns pivot columns.
pub(crate) fn rref_in_place(rows: &mut Vec<Vec<Scalar>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().expect("row r exists");
        for other in head.iter_mut().chain(rest.iter_mut()) {
            eliminate(other, pivot_row, c);
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// `row -= row[c] * pivot_row`, assuming `pivot_row[c] == 1` and that
/// `pivot_row` vanishes left of `c`.
fn eliminate(row: &mut [Scalar], pivot_row: &[Scalar], c: usize) {
    if row[c].is_zero() {
        return;
    }
    let f = row[c].clone();
    for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
        if !p.is_zero() {
            *x = &*x - &(&f * p);
        }
    }
}

/// A subspace of `k^ambient` given by its RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let m = Matrix::identity(field, ambient);
        Subspace { field, ambient, basis: m.rows, pivots: (0..ambient).collect() }
    }

    pub fn span(field: FieldSpec, ambient: usize, mut vectors: Vec<Vec<Scalar>>) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector length must match ambient dimension");
        let pivots = rref_in_place(&mut vectors, ambient);
        Subspace { field, ambient, basis: vectors, pivots }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// RREF basis rows.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is a member.
    fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            eliminate(v, row, p);
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, v.len()));
        }
        let mut w = v.to_vec();
        self.reduce(&mut w);
        Ok(w.iter().all(Scalar::is_zero))
    }

    /// Adds `v` to the subspace, keeping the basis in RREF. Returns whether
    /// the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        self.insert_reduced(v).is_some()
    }

    /// Like [`Self::insert`], returning `v` reduced against the previous
    /// basis and scaled to a leading 1 when it was new.
    pub fn insert_reduced(&mut self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector length must match ambient dimension");
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let p = w.iter().position(|x| !x.is_zero())?;
        let inv = w[p].inv().expect("nonzero pivot");
        for x in w[p..].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.basis.iter_mut() {
            eliminate(row, &w, p);
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, w.clone());
        Some(w)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for v in &other.basis {
            out.insert(v);
        }
        Ok(out)
    }

    /// Intersection by the Zassenhaus algorithm: row-reduce `[u | u]` stacked
    /// on `[v | 0]`; rows whose left half vanishes carry the intersection.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        let n = self.ambient;
        let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.basis {
            let mut r = u.clone();
            r.extend_from_slice(u);
            rows.push(r);
        }
        for v in &other.basis {
            let mut r = v.clone();
            r.extend(core::iter::repeat_n(self.field.zero(), n));
            rows.push(r);
        }
        let pivots = rref_in_place(&mut rows, 2 * n);
        let inter: Vec<Vec<Scalar>> = rows.into_iter().zip(pivots).filter(|(_, p)| *p >= n).map(|(r, _)| r[n..].to_vec()).collect();
        Ok(Subspace::span(self.field, n, inter))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Keeps the coordinates in `range`; assumes the subspace lies in the
    /// coordinate subspace spanned by them.
    pub(crate) fn restrict_coordinates(&self, range: core::ops::Range<usize>) -> Subspace {
        let rows = self.basis.iter().map(|r| r[range.clone()].to_vec()).collect();
        Subspace::span(self.field, range.len(), rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = alloc::vec![field.zero(); n];
        v[i] = field.one();
        v
    }

    #[test]
    fn rref_examples() {
        let q = FieldSpec::Rationals;
        let id = Matrix::identity(q, 3);
        assert_eq!(id.rref(), (id.clone(), 3));
        let z = Matrix::zeros(q, 2, 3);
        assert_eq!(z.rref(), (z.clone(), 0));
        let m = Matrix::from_i64(q, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rref(), (Matrix::from_i64(q, &[&[1, 2], &[0, 0]]), 1));
    }

    #[test]
    fn kernel_examples() {
        let q = FieldSpec::Rationals;
        assert!(Matrix::identity(q, 3).kernel_basis().is_zero());
        assert!(Matrix::zeros(q, 2, 3).kernel_basis().is_full());
        let f5 = FieldSpec::prime(5).unwrap();
        let k = Matrix::from_i64(f5, &[&[1, 1]]).kernel_basis();
        assert_eq!(k.basis(), &[alloc::vec![f5.one(), f5.from_i64(4)]]);
    }

    #[test]
    fn intersection_examples() {
        let q = FieldSpec::Rationals;
        let s = |vs: &[usize]| Subspace::span(q, 3, vs.iter().map(|&i| e(q, 3, i)).collect());
        let u = s(&[0, 1]);
        assert_eq!(u.intersection(&u).unwrap(), u);
        assert!(s(&[0]).intersection(&s(&[1])).unwrap().is_zero());
        assert_eq!(s(&[0, 1]).intersection(&s(&[1, 2])).unwrap(), s(&[1]));
        let other = Subspace::zero(q, 4);
        assert_eq!(u.intersection(&other), Err(Error::AmbientMismatch(3, 4)));
    }

    #[test]
    fn insert_keeps_canonical_form() {
        let f = FieldSpec::prime(7).unwrap();
        let vs: Vec<Vec<Scalar>> =
            [[1i64, 2, 3], [2, 4, 6], [0, 1, 5], [3, 0, 1]].iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
        let mut inc = Subspace::zero(f, 3);
        for v in &vs {
            inc.insert(v);
        }
        assert_eq!(inc, Subspace::span(f, 3, vs));
    }
}
