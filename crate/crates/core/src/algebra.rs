//! The almost Abelian Lie algebra `L = F e0 ⋉ V` given by the operator
//! `T = ad_e0` on `V = F^n`, in the fixed basis `(e0, e1, ..., en)`.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    operator: Matrix,
}

impl Algebra {
    /// Validates `T` (square, `n ≥ 1`, nonzero) and builds the algebra.
    pub fn new(operator: Matrix) -> Result<Self> {
        let n = operator.require_square()?;
        if n == 0 {
            return Err(Error::EmptyOperator);
        }
        if operator.is_zero() {
            return Err(Error::ZeroOperator);
        }
        Ok(Algebra { operator })
    }

    /// Convenience constructor from integer rows.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Result<Self> {
        Self::new(Matrix::from_i64(field, rows))
    }

    pub fn field(&self) -> FieldSpec {
        self.operator.field()
    }

    /// `dim V`.
    pub fn n(&self) -> usize {
        self.operator.rows()
    }

    /// `dim L = 1 + n`.
    pub fn dim(&self) -> usize {
        self.n() + 1
    }

    /// `ad_e0` as a matrix on `V`.
    pub fn operator(&self) -> &Matrix {
        &self.operator
    }

    pub fn zero(&self) -> Element {
        Element {
            t: self.field().zero(),
            v: vec![self.field().zero(); self.n()],
        }
    }

    /// Basis element `e_i`; `i = 0` is `e0`.
    pub fn basis_element(&self, i: usize) -> Element {
        let mut x = self.zero();
        if i == 0 {
            x.t = self.field().one();
        } else {
            x.v[i - 1] = self.field().one();
        }
        x
    }

    pub fn basis(&self) -> Vec<Element> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    fn check(&self, x: &Element) -> Result<()> {
        if x.v.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: x.v.len(),
            });
        }
        if x.t.field() != self.field() || x.v.iter().any(|s| s.field() != self.field()) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// `[X, Y] = (0, t_X T v_Y - t_Y T v_X)`.
    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        let tvy = self.operator.mul_vec(&y.v);
        let tvx = self.operator.mul_vec(&x.v);
        let v = tvy
            .iter()
            .zip(&tvx)
            .map(|(a, b)| &(&x.t * a) - &(&y.t * b))
            .collect();
        Ok(Element {
            t: self.field().zero(),
            v,
        })
    }

    /// Bracket on coordinate vectors of length `1 + n`.
    pub fn bracket_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.bracket(&Element::from_vec(x), &Element::from_vec(y))
            .expect("coordinate length")
            .to_vec()
    }

    /// Matrix of `ad_X` in the basis `(e0, e1, ..., en)`:
    /// `[[0, 0], [-T v, t T]]`.
    pub fn adjoint_matrix(&self, x: &Element) -> Result<Matrix> {
        self.check(x)?;
        let n = self.n();
        let mut m = Matrix::zeros(self.field(), n + 1, n + 1);
        let tv = self.operator.mul_vec(&x.v);
        for (i, s) in tv.iter().enumerate() {
            m[(i + 1, 0)] = -s;
        }
        m.set_block(1, 1, &self.operator.scale(&x.t));
        Ok(m)
    }

    /// Faithful representation on `F ⊕ V`: `[[0, 0], [v, t T]]`.
    pub fn faithful_rep(&self, x: &Element) -> Result<Matrix> {
        self.check(x)?;
        let n = self.n();
        let mut m = Matrix::zeros(self.field(), n + 1, n + 1);
        for (i, s) in x.v.iter().enumerate() {
            m[(i + 1, 0)] = s.clone();
        }
        m.set_block(1, 1, &self.operator.scale(&x.t));
        Ok(m)
    }
}

/// `X = (t, v) ∈ F ⊕ V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub t: Scalar,
    pub v: Vec<Scalar>,
}

impl Element {
    pub fn new(t: Scalar, v: Vec<Scalar>) -> Self {
        Element { t, v }
    }

    /// From coordinates `(t, v_1, ..., v_n)`.
    pub fn from_vec(coords: &[Scalar]) -> Self {
        Element {
            t: coords[0].clone(),
            v: coords[1..].to_vec(),
        }
    }

    pub fn to_vec(&self) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(self.v.len() + 1);
        out.push(self.t.clone());
        out.extend(self.v.iter().cloned());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_zero() && self.v.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element {
            t: &self.t + &other.t,
            v: self.v.iter().zip(&other.v).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element {
            t: &self.t * s,
            v: self.v.iter().map(|a| a * s).collect(),
        }
    }
}

/// The named test algebras.
pub mod named {
    use super::*;

    /// `ax+b`: `T = [1]` on a one-dimensional `V`.
    pub fn axb(field: FieldSpec) -> Algebra {
        Algebra::from_i64(field, &[&[1]]).expect("valid")
    }

    /// Heisenberg: `[e0, e2] = e1`.
    pub fn heisenberg(field: FieldSpec) -> Algebra {
        Algebra::from_i64(field, &[&[0, 1], &[0, 0]]).expect("valid")
    }

    /// Bianchi VII_0: `T` is the rotation `[[0, -1], [1, 0]]`.
    pub fn bianchi_vii0(field: FieldSpec) -> Algebra {
        Algebra::from_i64(field, &[&[0, -1], &[1, 0]]).expect("valid")
    }

    /// Heisenberg plus a one-dimensional Abelian summand.
    pub fn heisenberg_plus_line(field: FieldSpec) -> Algebra {
        Algebra::from_i64(field, &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]).expect("valid")
    }
}
