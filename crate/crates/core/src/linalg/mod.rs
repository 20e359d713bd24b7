//! Exact dense linear algebra: elimination, kernels, characteristic
//! polynomials, invariant factors and (scalar) similarity.

mod charpoly;
mod matrix;
mod poly;
mod smith;
mod subspace;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use charpoly::char_poly;
pub use matrix::Matrix;
pub use poly::Poly;
pub use smith::{invariant_factors, smith_diagonal};
pub use subspace::{combine, Subspace};

use crate::error::{Error, Result};
use crate::field::Scalar;

/// Output of [`rref_kernel_image`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub rank: usize,
    pub kernel: Subspace,
    pub image: Subspace,
    pub rref: Matrix,
}

pub fn rref_kernel_image(m: &Matrix) -> Reduction {
    let (rref, pivots) = m.rref();
    let kernel = kernel_from_rref(&rref, &pivots);
    let image = Subspace::column_space(m);
    debug_assert_eq!(pivots.len() + kernel.dim(), m.cols(), "rank-nullity");
    debug_assert_eq!(image.dim(), pivots.len());
    Reduction {
        rank: pivots.len(),
        kernel,
        image,
        rref,
    }
}

pub fn kernel(m: &Matrix) -> Subspace {
    let (rref, pivots) = m.rref();
    kernel_from_rref(&rref, &pivots)
}

fn kernel_from_rref(rref: &Matrix, pivots: &[usize]) -> Subspace {
    let f = rref.field();
    let cols = rref.cols();
    let vectors: Vec<Vec<Scalar>> = (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![f.zero(); cols];
            v[free] = f.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&rref[(row, free)];
            }
            v
        })
        .collect();
    Subspace::span(f, cols, &vectors)
}

/// `[rank T, rank T^2, ..., rank T^n]`.
pub fn rank_sequence(t: &Matrix) -> Vec<usize> {
    let mut p = t.clone();
    let mut out = Vec::with_capacity(t.rows());
    for _ in 0..t.rows() {
        out.push(p.rank());
        p = p.mul(t);
    }
    out
}

pub fn is_nilpotent(t: &Matrix) -> bool {
    t.pow(t.rows() as u32).is_zero()
}

fn check_pair(t1: &Matrix, t2: &Matrix) -> Result<usize> {
    let n = t1.require_square()?;
    t2.require_square()?;
    if t1.field() != t2.field() {
        return Err(Error::FieldMismatch);
    }
    if t2.rows() != n {
        return Err(Error::SizeMismatch(format!(
            "{n}x{n} vs {0}x{0}",
            t2.rows()
        )));
    }
    Ok(n)
}

/// Similarity of two operators, decided by their invariant factors.
pub fn similar(t1: &Matrix, t2: &Matrix) -> Result<bool> {
    check_pair(t1, t2)?;
    Ok(invariant_factors(t1)? == invariant_factors(t2)?)
}

/// Finds `λ ≠ 0` with `T1 ~ λ·T2`, reporting the canonically smallest one.
///
/// For nilpotent operators the similarity class is fixed by the rank sequence,
/// which scaling does not change, so `λ = 1` is the only candidate needed.
/// Otherwise the coefficients of the characteristic polynomials must satisfy
/// `a_i = λ^(n-i) b_i`; the lowest nonzero `b_i` yields finitely many
/// candidates through exact `k`-th roots, which are filtered against the other
/// coefficients and then confirmed by a full similarity test.
pub fn scalar_similar(t1: &Matrix, t2: &Matrix) -> Result<Option<Scalar>> {
    let n = check_pair(t1, t2)?;
    if t1.is_zero() || t2.is_zero() {
        return Err(Error::ZeroOperator);
    }
    let f = t1.field();
    let c1 = char_poly(t1)?;
    let c2 = char_poly(t2)?;
    let nil1 = (0..n).all(|i| c1.coeff(i).is_zero());
    let nil2 = (0..n).all(|i| c2.coeff(i).is_zero());
    match (nil1, nil2) {
        (true, true) => {
            let found = rank_sequence(t1) == rank_sequence(t2);
            debug_assert_eq!(found, similar(t1, t2)?);
            return Ok(found.then(|| f.one()));
        }
        (false, false) => {}
        _ => return Ok(None),
    }
    if (0..n).any(|i| c1.coeff(i).is_zero() != c2.coeff(i).is_zero()) {
        return Ok(None);
    }
    let i0 = (0..n)
        .find(|&i| !c2.coeff(i).is_zero())
        .expect("not nilpotent");
    let ratio = &c1.coeff(i0) / &c2.coeff(i0);
    let candidates = ratio.kth_roots((n - i0) as u32)?;
    for lambda in candidates {
        let consistent = (0..n).all(|i| {
            let b = c2.coeff(i);
            b.is_zero() || &lambda.pow((n - i) as u64) * &b == c1.coeff(i)
        });
        if consistent && similar(t1, &t2.scale(&lambda))? {
            return Ok(Some(lambda));
        }
    }
    Ok(None)
}

/// Which linear matrix equation [`twisted_commutant`] solves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommutantMode {
    /// `Δ T - α T Δ = 0` for a fixed `α`; unknowns are the `n²` entries of
    /// `Δ` (row-major).
    Automorphism(Scalar),
    /// `(Δ - α I) T - T Δ = 0` with `α` unknown as well; the solution vectors
    /// have length `1 + n²` with `α` first, then `Δ` row-major.
    Derivation,
}

/// Solution space of the twisted commutation equation selected by `mode`.
pub fn twisted_commutant(t: &Matrix, mode: &CommutantMode) -> Result<Subspace> {
    let n = t.require_square()?;
    let f = t.field();
    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    if *mode == CommutantMode::Derivation {
        columns.push(t.neg().flatten());
    }
    for i in 0..n {
        for j in 0..n {
            let mut e = Matrix::zeros(f, n, n);
            e[(i, j)] = f.one();
            let image = match mode {
                CommutantMode::Automorphism(alpha) => e.mul(t).sub(&t.mul(&e).scale(alpha)),
                CommutantMode::Derivation => e.mul(t).sub(&t.mul(&e)),
            };
            columns.push(image.flatten());
        }
    }
    let system = Matrix::from_columns(f, n * n, &columns);
    Ok(kernel(&system))
}

/// Solutions `X` of `X T1 = λ T2 X`, as row-major vectors of length `n²`.
pub fn intertwiners(t1: &Matrix, t2: &Matrix, lambda: &Scalar) -> Result<Subspace> {
    let n = check_pair(t1, t2)?;
    let f = t1.field();
    let lt2 = t2.scale(lambda);
    let mut columns = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut e = Matrix::zeros(f, n, n);
            e[(i, j)] = f.one();
            columns.push(e.mul(t1).sub(&lt2.mul(&e)).flatten());
        }
    }
    Ok(kernel(&Matrix::from_columns(f, n * n, &columns)))
}

/// Looks for an invertible member of `span(basis)`.
///
/// Tries the sum of the basis, then each basis element, then random
/// coefficient vectors (small integers over `Q`, residues over `F_p`; when the
/// whole span is small enough it is enumerated instead). `None` means no
/// witness was found within `attempts`, not that none exists.
pub fn sample_invertible(basis: &[Matrix], attempts: usize, seed: u64) -> Option<Matrix> {
    let first = basis.first()?;
    let f = first.field();
    let d = basis.len();
    let combo = |coeffs: &[Scalar]| -> Matrix {
        coeffs.iter().zip(basis).fold(
            Matrix::zeros(f, first.rows(), first.cols()),
            |acc, (c, b)| {
                if c.is_zero() {
                    acc
                } else {
                    acc.add(&b.scale(c))
                }
            },
        )
    };
    let try_one = |coeffs: &[Scalar]| -> Option<Matrix> {
        let m = combo(coeffs);
        m.is_invertible().then_some(m)
    };

    let ones = vec![f.one(); d];
    if let Some(m) = try_one(&ones) {
        return Some(m);
    }
    for k in 0..d {
        let mut unit = vec![f.zero(); d];
        unit[k] = f.one();
        if let Some(m) = try_one(&unit) {
            return Some(m);
        }
    }

    if let Some(elements) = f.elements() {
        let p = elements.len();
        let total = (p as u128).checked_pow(d as u32);
        if total.is_some_and(|t| t <= attempts as u128) {
            let mut idx = vec![0usize; d];
            loop {
                // advance a base-p counter; all-zero is skipped
                let mut k = 0;
                while k < d {
                    idx[k] += 1;
                    if idx[k] < p {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == d {
                    return None;
                }
                let coeffs: Vec<Scalar> = idx.iter().map(|&i| elements[i].clone()).collect();
                if let Some(m) = try_one(&coeffs) {
                    return Some(m);
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in (d + 1)..attempts {
        let coeffs: Vec<Scalar> = (0..d).map(|_| f.random(&mut rng, 3)).collect();
        if let Some(m) = try_one(&coeffs) {
            return Some(m);
        }
    }
    None
}

/// Basis of a subspace of `n x n` matrices (row-major vectors) as matrices.
pub fn as_matrices(s: &Subspace, n: usize) -> Vec<Matrix> {
    s.basis()
        .iter()
        .map(|v| Matrix::unflatten(s.field(), n, n, v))
        .collect()
}
