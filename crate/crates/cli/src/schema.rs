//! JSON input and output shapes. Scalars travel as strings so rationals stay
//! exact.

use aalie::{Algebra, Error, FieldSpec, HomBlock, Matrix, Scalar, Subspace};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldJson {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl FieldJson {
    pub fn to_spec(&self) -> Result<FieldSpec, Error> {
        match self {
            FieldJson::Named(s) if s == "Q" => Ok(FieldSpec::Rational),
            FieldJson::Named(s) => Err(Error::ParseScalar(format!("unknown field {s:?}"))),
            FieldJson::Prime { fp } => FieldSpec::prime(*fp),
        }
    }

    pub fn from_spec(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rational => FieldJson::Named("Q".into()),
            FieldSpec::Prime(p) => FieldJson::Prime { fp: p },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub field: FieldJson,
    pub ad: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub matrix: Vec<Vec<String>>,
}

/// A subspace of `L` by spanning vectors in the basis `(e0, e1, ...)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceSpec {
    pub basis: Vec<Vec<String>>,
}

pub fn parse_matrix(f: FieldSpec, rows: &[Vec<String>]) -> Result<Matrix, Error> {
    let parsed = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| f.parse_scalar(s))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(first) = parsed.first() {
        if parsed.iter().any(|r| r.len() != first.len()) {
            return Err(Error::SizeMismatch("ragged matrix rows".into()));
        }
    }
    Matrix::from_rows(f, parsed)
}

impl AlgebraSpec {
    pub fn to_algebra(&self) -> Result<Algebra, Error> {
        let f = self.field.to_spec()?;
        Algebra::new(parse_matrix(f, &self.ad)?)
    }

    pub fn from_algebra(l: &Algebra) -> Self {
        AlgebraSpec {
            field: FieldJson::from_spec(l.field()),
            ad: matrix_strings(l.operator()),
        }
    }
}

impl MapSpec {
    pub fn to_block(&self, f: FieldSpec) -> Result<HomBlock, Error> {
        HomBlock::from_matrix(&parse_matrix(f, &self.matrix)?)
    }
}

impl SubspaceSpec {
    pub fn to_subspace(&self, f: FieldSpec, ambient: usize) -> Result<Subspace, Error> {
        let vs = self
            .basis
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| f.parse_scalar(s))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Subspace::try_span(f, ambient, &vs)
    }
}

pub fn scalar_string(s: &Scalar) -> String {
    s.to_string()
}

pub fn vector_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(scalar_string).collect()
}

pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| vector_strings(r)).collect()
}
