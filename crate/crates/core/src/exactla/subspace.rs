use std::cmp::Ordering;
use std::fmt;

use super::matrix::{rref, Matrix};
use super::scalar::{Field, Scalar};
use super::vector::{self, Vector};
use crate::error::{Error, Result};

/// Incremental row-echelon basis. Every row has a leading one and zeros in
/// all other rows' pivot columns, so membership is a single reduction pass.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    field: Field,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub(crate) fn new(field: Field, ambient: usize) -> Echelon {
        Echelon {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn from_subspace(s: &Subspace) -> Echelon {
        Echelon {
            field: s.field,
            ambient: s.ambient,
            rows: s.basis.row_vectors().map(|r| r.to_vec()).collect(),
            pivots: s.pivots.clone(),
        }
    }

    pub(crate) fn dim(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = -&v[p];
                vector::axpy(v, &f, row);
            }
        }
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub(crate) fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        vector::normalize(&mut w);
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = -&row[p];
                vector::axpy_from(row, &f, &w, p);
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }

    pub(crate) fn into_subspace(self) -> Subspace {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        let mut rows = self.rows;
        let data: Vec<Scalar> = order
            .iter()
            .flat_map(|&i| std::mem::take(&mut rows[i]))
            .collect();
        let basis = Matrix::new(self.field, pivots.len(), self.ambient, data).expect("uniform field");
        Subspace {
            ambient: self.ambient,
            field: self.field,
            basis,
            pivots,
        }
    }
}

/// A subspace of `field^ambient`, stored canonically as an RREF basis with
/// no zero rows. Equal subspaces compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            field,
            basis: Matrix::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            field,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn span<V: AsRef<[Scalar]>>(field: Field, ambient: usize, vectors: &[V]) -> Result<Subspace> {
        let mut e = Echelon::new(field, ambient);
        for v in vectors {
            let v = v.as_ref();
            check_vector(field, ambient, v)?;
            e.insert(v);
        }
        Ok(e.into_subspace())
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Subspace {
        let (r, rank) = rref(m);
        let rows: Vec<&[Scalar]> = r.row_vectors().take(rank).collect();
        let pivots = rows
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero row"))
            .collect();
        let data = rows.into_iter().flat_map(|r| r.iter().cloned()).collect();
        Subspace {
            ambient: m.cols(),
            field: m.field(),
            basis: Matrix::new(m.field(), rank, m.cols(), data).expect("uniform"),
            pivots,
        }
    }

    /// Column space (image) of a linear map.
    pub fn image(m: &Matrix) -> Subspace {
        Subspace::row_space(&m.transpose())
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
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

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        self.basis.row_vectors()
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// `x` minus its projection along the basis onto pivot coordinates.
    pub fn residual(&self, x: &[Scalar]) -> Result<Vector> {
        check_vector(self.field, self.ambient, x)?;
        let mut v = x.to_vec();
        for (row, &p) in self.basis.row_vectors().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = -&v[p];
                vector::axpy(&mut v, &f, row);
            }
        }
        Ok(v)
    }

    pub fn contains(&self, x: &[Scalar]) -> Result<bool> {
        Ok(vector::is_zero(&self.residual(x)?))
    }

    /// Coefficients of `x` in the RREF basis, or `None` if `x` is outside.
    pub fn coordinates(&self, x: &[Scalar]) -> Result<Option<Vector>> {
        if !self.contains(x)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| x[p].clone()).collect()))
    }

    /// Linear combination of basis rows.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vector {
        assert_eq!(coeffs.len(), self.dim());
        let mut v = vector::zeros(self.field, self.ambient);
        for (c, row) in coeffs.iter().zip(self.basis.row_vectors()) {
            vector::axpy(&mut v, c, row);
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let mut e = Echelon::from_subspace(self);
        for row in other.basis_vectors() {
            e.insert(row);
        }
        Ok(e.into_subspace())
    }

    /// Intersection via the kernel of the stacked-basis relation
    /// `Σ αᵢuᵢ − Σ βⱼvⱼ = 0`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        let du = self.dim();
        let mut columns: Vec<Vector> = self.basis_vectors().map(|r| r.to_vec()).collect();
        columns.extend(other.basis_vectors().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        let rel = Matrix::from_columns(self.field, self.ambient, &columns)?;
        let k = kernel(&rel);
        let vecs: Vec<Vector> = k
            .basis_vectors()
            .map(|alpha| self.combine(&alpha[..du]))
            .collect();
        Subspace::span(self.field, self.ambient, &vecs)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.compatible(other)?;
        for row in self.basis_vectors() {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Indices not used as pivots; the cosets of these unit vectors form the
    /// standard basis of `ambient / self`.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut used = vec![false; self.ambient];
        for &p in &self.pivots {
            used[p] = true;
        }
        (0..self.ambient).filter(|&i| !used[i]).collect()
    }

    /// Coordinates of the coset `x + self` in the complement basis.
    pub fn quotient_coordinates(&self, x: &[Scalar]) -> Result<Vector> {
        let r = self.residual(x)?;
        Ok(self.complement_indices().into_iter().map(|i| r[i].clone()).collect())
    }

    /// Matrix of the projection `ambient → ambient / self`.
    pub fn quotient_map(&self) -> Matrix {
        let comp = self.complement_indices();
        let n = self.ambient;
        let cols: Vec<Vector> = (0..n)
            .map(|j| {
                self.quotient_coordinates(&vector::unit(self.field, n, j))
                    .expect("unit vector")
            })
            .collect();
        Matrix::from_columns(self.field, comp.len(), &cols).expect("shapes")
    }

    /// Image of this subspace under a linear map (column convention).
    pub fn map(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: m.cols(),
            });
        }
        let imgs: Vec<Vector> = self
            .basis_vectors()
            .map(|r| m.apply(r))
            .collect::<Result<_>>()?;
        Subspace::span(m.field(), m.rows(), &imgs)
    }

    /// `{x : m x ∈ self}`.
    pub fn preimage(&self, m: &Matrix) -> Result<Subspace> {
        if m.rows() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: m.rows(),
            });
        }
        // x ↦ (m x + self) in the quotient; preimage is its kernel.
        let q = self.quotient_map().mul(m)?;
        Ok(kernel(&q))
    }

    /// Deterministic total order used for canonical listings.
    pub fn canonical_cmp(&self, other: &Subspace) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.pivots.cmp(&other.pivots))
            .then_with(|| {
                let a = self.basis.entries().iter().map(Scalar::sort_key);
                let b = other.basis.entries().iter().map(Scalar::sort_key);
                a.cmp(b)
            })
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, row) in self.basis_vectors().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn check_vector(field: Field, ambient: usize, x: &[Scalar]) -> Result<()> {
    if x.len() != ambient {
        return Err(Error::AmbientMismatch {
            left: ambient,
            right: x.len(),
        });
    }
    if let Some(bad) = x.iter().find(|s| s.field() != field) {
        return Err(Error::FieldMismatch {
            left: field,
            right: bad.field(),
        });
    }
    Ok(())
}

/// Null space `{x : m x = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, rank) = rref(m);
    let n = m.cols();
    let field = m.field();
    let mut pivot_cols = Vec::with_capacity(rank);
    for i in 0..rank {
        pivot_cols.push(r.row(i).iter().position(|x| !x.is_zero()).expect("pivot"));
    }
    let mut is_pivot = vec![false; n];
    for &p in &pivot_cols {
        is_pivot[p] = true;
    }
    let mut vecs = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vector::zeros(field, n);
        v[free] = field.one();
        for (i, &p) in pivot_cols.iter().enumerate() {
            v[p] = -r.get(i, free);
        }
        vecs.push(v);
    }
    Subspace::span(field, n, &vecs).expect("kernel vectors are well formed")
}

pub fn sum_spaces(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    u.sum(v)
}

pub fn intersect_spaces(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    u.intersect(v)
}

pub fn contains(u: &Subspace, x: &[Scalar]) -> Result<bool> {
    u.contains(x)
}
