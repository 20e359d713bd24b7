use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Matrix, Subspace};

/// A linear map `F e0 ⋉ F^m → F e0' ⋉ F^n'` split as
/// `[[α, βᵀ], [γ, Δ]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomBlock {
    pub alpha: Scalar,
    /// Functional on the source `V`, length `m`.
    pub beta: Vec<Scalar>,
    /// Image of `e0` in the target `V`, length `n'`.
    pub gamma: Vec<Scalar>,
    /// `n' × m`.
    pub delta: Matrix,
}

impl HomBlock {
    pub fn new(
        alpha: Scalar,
        beta: Vec<Scalar>,
        gamma: Vec<Scalar>,
        delta: Matrix,
    ) -> Result<Self> {
        if beta.len() != delta.cols() || gamma.len() != delta.rows() {
            return Err(Error::SizeMismatch(format!(
                "beta {} / gamma {} against Delta {}x{}",
                beta.len(),
                gamma.len(),
                delta.rows(),
                delta.cols()
            )));
        }
        Ok(HomBlock {
            alpha,
            beta,
            gamma,
            delta,
        })
    }

    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        if m.rows() == 0 || m.cols() == 0 {
            return Err(Error::SizeMismatch("empty map".into()));
        }
        let (r, c) = (m.rows(), m.cols());
        Ok(HomBlock {
            alpha: m[(0, 0)].clone(),
            beta: m.row(0)[1..].to_vec(),
            gamma: m.column(0)[1..].to_vec(),
            delta: m.submatrix(1..r, 1..c),
        })
    }

    pub fn to_matrix(&self) -> Matrix {
        let f = self.field();
        let (r, c) = (self.target_n(), self.source_n());
        let mut m = Matrix::zeros(f, r + 1, c + 1);
        m[(0, 0)] = self.alpha.clone();
        for (j, b) in self.beta.iter().enumerate() {
            m[(0, j + 1)] = b.clone();
        }
        for (i, g) in self.gamma.iter().enumerate() {
            m[(i + 1, 0)] = g.clone();
        }
        m.set_block(1, 1, &self.delta);
        m
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Self::from_matrix(&Matrix::identity(field, n + 1)).expect("nonempty")
    }

    pub fn zero(field: FieldSpec, target_n: usize, source_n: usize) -> Self {
        Self::from_matrix(&Matrix::zeros(field, target_n + 1, source_n + 1)).expect("nonempty")
    }

    pub fn field(&self) -> FieldSpec {
        self.alpha.field()
    }

    pub fn source_n(&self) -> usize {
        self.delta.cols()
    }

    pub fn target_n(&self) -> usize {
        self.delta.rows()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &HomBlock) -> Result<HomBlock> {
        HomBlock::from_matrix(&self.to_matrix().checked_mul(&other.to_matrix())?)
    }
}

impl fmt::Display for HomBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_matrix())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapSpaceKind {
    Derivations,
    /// `Δ` with `Δ T = α T Δ`; only the `Δ` block is populated.
    TwistedAut(Scalar),
    Inner,
}

/// A linear space of maps given by a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpace {
    pub kind: MapSpaceKind,
    pub basis: Vec<HomBlock>,
}

impl MapSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrices(&self) -> Vec<Matrix> {
        self.basis.iter().map(HomBlock::to_matrix).collect()
    }

    pub(crate) fn from_subspace(
        kind: MapSpaceKind,
        s: &Subspace,
        rows: usize,
        cols: usize,
    ) -> Self {
        let basis = s
            .basis()
            .iter()
            .map(|v| {
                HomBlock::from_matrix(&Matrix::unflatten(s.field(), rows, cols, v))
                    .expect("nonempty")
            })
            .collect();
        MapSpace { kind, basis }
    }

    /// The span as a subspace of flattened matrices.
    pub fn span(&self, field: FieldSpec, rows: usize, cols: usize) -> Subspace {
        let vs: Vec<_> = self.basis.iter().map(|b| b.to_matrix().flatten()).collect();
        Subspace::span(field, rows * cols, &vs)
    }

    pub fn contains(&self, phi: &HomBlock) -> bool {
        let m = phi.to_matrix();
        self.span(phi.field(), m.rows(), m.cols())
            .contains(&m.flatten())
    }
}
