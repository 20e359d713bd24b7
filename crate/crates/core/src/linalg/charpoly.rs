use crate::error::Result;
use crate::field::Scalar;

use super::matrix::Matrix;
use super::poly::Poly;

/// `det(xI - T)` by Berkowitz's algorithm. Uses only ring operations, so it
/// is valid in every characteristic.
pub fn char_poly(t: &Matrix) -> Result<Poly> {
    let n = t.require_square()?;
    let f = t.field();
    // coefficients, highest degree first
    let mut coeffs: Vec<Scalar> = vec![f.one()];
    for r in 0..n {
        let a = &t[(r, r)];
        let row: Vec<Scalar> = (0..r).map(|j| t[(r, j)].clone()).collect();
        let mut col: Vec<Scalar> = (0..r).map(|i| t[(i, r)].clone()).collect();
        let lead = t.submatrix(0..r, 0..r);

        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(f.one());
        toeplitz.push(-a);
        for _ in 0..r {
            let dot = row
                .iter()
                .zip(&col)
                .fold(f.zero(), |acc, (x, y)| &acc + &(x * y));
            toeplitz.push(-dot);
            col = lead.mul_vec(&col);
        }

        let next: Vec<Scalar> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(f.zero(), |acc, j| &acc + &(&toeplitz[i - j] * &coeffs[j]))
            })
            .collect();
        coeffs = next;
    }
    coeffs.reverse();
    Ok(Poly::new(f, coeffs))
}
