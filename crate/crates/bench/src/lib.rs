//! Deterministic operators shared by the benchmarks.

use aalie::{Algebra, FieldSpec, Matrix};

/// A dense operator with small entries `(3i + 5j + 1) mod 7 - 3`.
pub fn dense_operator(field: FieldSpec, n: usize) -> Matrix {
    let data = (0..n * n)
        .map(|k| {
            let (i, j) = ((k / n) as i64, (k % n) as i64);
            field.from_i64((3 * i + 5 * j + 1).rem_euclid(7) - 3)
        })
        .collect();
    Matrix::new(field, n, n, data).expect("square")
}

/// Jordan-style operator: eigenvalue `i % 3` on the diagonal, ones above it.
pub fn jordan_operator(field: FieldSpec, n: usize) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    for i in 0..n {
        m[(i, i)] = field.from_i64((i % 3) as i64);
        if i + 1 < n {
            m[(i, i + 1)] = field.one();
        }
    }
    m
}

/// `dense_operator` conjugated by a unipotent matrix and scaled by 2.
pub fn scaled_conjugate(t: &Matrix) -> Matrix {
    let f = t.field();
    let n = t.rows();
    let mut p = Matrix::identity(f, n);
    for i in 0..n.saturating_sub(1) {
        p[(i, i + 1)] = f.one();
    }
    let p_inv = p.inverse().expect("unipotent");
    p.mul(t).mul(&p_inv).scale(&f.from_i64(2))
}

pub fn algebra(t: Matrix) -> Algebra {
    Algebra::new(t).expect("nonzero operator")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        for n in 1..6 {
            let t = dense_operator(FieldSpec::Rational, n);
            assert!(!t.is_zero());
            assert_eq!(scaled_conjugate(&t).rows(), n);
            algebra(jordan_operator(FieldSpec::Prime(5), n.max(2)));
        }
    }
}
