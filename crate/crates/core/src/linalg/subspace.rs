use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

use super::matrix::Matrix;

/// A subspace of `F^ambient`, stored as the nonzero rows of a reduced
/// row-echelon matrix (equivalently, a reduced column-echelon basis of column
/// vectors). The representation is canonical, so equal subspaces compare
/// equal with `==`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Self::span(field, ambient, &Matrix::identity(field, ambient).to_rows())
    }

    /// Span of arbitrary vectors of length `ambient`. Panics on a length
    /// mismatch; use [`Subspace::try_span`] for unchecked input.
    pub fn span(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        Self::try_span(field, ambient, vectors).expect("vector length")
    }

    pub fn try_span(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                got: v.len(),
            });
        }
        if vectors.is_empty() {
            return Ok(Self::zero(field, ambient));
        }
        let m = Matrix::from_rows(field, vectors.to_vec())?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Ok(Subspace {
            field,
            ambient,
            basis,
            pivots,
        })
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        let cols: Vec<_> = (0..m.cols()).map(|j| m.column(j)).collect();
        Self::span(m.field(), m.rows(), &cols)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![self.field.zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in rebuilt.iter_mut().zip(b) {
                *r += &(c * x);
            }
        }
        (rebuilt == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient && self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::span(self.field, self.ambient, &vs)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field, self.ambient);
        }
        // Solve sum a_i u_i = sum b_j w_j.
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| w.iter().map(|x| -x).collect()));
        let m = Matrix::from_columns(self.field, self.ambient, &cols);
        let ker = super::kernel(&m);
        let vs: Vec<Vec<Scalar>> = ker
            .basis()
            .iter()
            .map(|sol| combine(self.field, self.ambient, &self.basis, &sol[..self.dim()]))
            .collect();
        Self::span(self.field, self.ambient, &vs)
    }

    /// Image of the subspace under `m`.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let vs: Vec<_> = self.basis.iter().map(|b| m.mul_vec(b)).collect();
        Self::span(self.field, m.rows(), &vs)
    }

    /// Extends `self` (assumed to lie inside `within`) to `within` by greedily
    /// adding basis vectors of `within` in echelon order. Returns only the
    /// added vectors, which span a complement of `self` in `within`.
    pub fn complement_in(&self, within: &Subspace) -> Vec<Vec<Scalar>> {
        let mut acc = self.clone();
        let mut added = Vec::new();
        for b in within.basis() {
            if !acc.contains(b) {
                added.push(b.clone());
                acc = acc.sum(&Self::span(
                    self.field,
                    self.ambient,
                    std::slice::from_ref(b),
                ));
            }
        }
        added
    }

    /// Standard basis vectors completing `self` to the whole space,
    /// lowest index first.
    pub fn standard_complement(&self) -> Vec<Vec<Scalar>> {
        self.complement_in(&Self::full(self.field, self.ambient))
    }
}

/// `sum c_i v_i`.
pub fn combine(
    field: FieldSpec,
    len: usize,
    vectors: &[Vec<Scalar>],
    coeffs: &[Scalar],
) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += &(c * x);
        }
    }
    out
}
