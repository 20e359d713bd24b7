//! Explicit descriptions of automorphisms, derivations and Lie orthogonal
//! operators, used to cross-check the generic solvers and to sample members.
//!
//! Heisenberg forms are stated in the frame `(e0, T v2, v2)` where `v2` is the
//! first standard vector outside `ker T`; there `T = [[0, 1], [0, 0]]`.
//! Decomposable algebras are handled blockwise in the coordinates of
//! [`decompose`].

use rand::Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{self, CommutantMode, Matrix, Subspace};
use crate::structure::{decompose, recognize_core, CoreKind, Decomposition};

use super::block::HomBlock;
use super::MapKind;

const BOUND: i64 = 4;

/// Change of basis from the Heisenberg frame to the given coordinates.
pub fn heisenberg_frame(core: &Algebra) -> Result<Matrix> {
    if recognize_core(core)? != CoreKind::Heisenberg {
        return Err(Error::WrongAlgebraClass("Heisenberg core required"));
    }
    let f = core.field();
    let t = core.operator();
    let k = (0..core.n())
        .find(|&k| t.column(k).iter().any(|s| !s.is_zero()))
        .expect("T is nonzero");
    let mut v2 = vec![f.zero(); core.n()];
    v2[k] = f.one();
    let v1 = t.column(k);
    Ok(Matrix::identity(f, 1).direct_sum(&Matrix::from_columns(f, core.n(), &[v1, v2])))
}

fn into_frame(q: &Matrix, phi: &Matrix) -> Matrix {
    q.inverse().expect("frame").mul(phi).mul(q)
}

fn out_of_frame(q: &Matrix, phi: &Matrix) -> Matrix {
    q.mul(phi).mul(&q.inverse().expect("frame"))
}

fn heis_shape(phi: &Matrix) -> bool {
    phi[(0, 1)].is_zero() && phi[(2, 1)].is_zero()
}

/// `αΔ22 - β2γ2` in the Heisenberg frame.
fn heis_minor(phi: &Matrix) -> Scalar {
    &(&phi[(0, 0)] * &phi[(2, 2)]) - &(&phi[(0, 2)] * &phi[(2, 0)])
}

pub fn heisenberg_aut_form(phi: &Matrix) -> bool {
    let minor = heis_minor(phi);
    heis_shape(phi) && !minor.is_zero() && phi[(1, 1)] == minor
}

pub fn heisenberg_der_form(phi: &Matrix) -> bool {
    heis_shape(phi) && phi[(1, 1)] == &phi[(0, 0)] + &phi[(2, 2)]
}

pub fn heisenberg_lo_form(phi: &Matrix) -> bool {
    heis_shape(phi) && heis_minor(phi).is_one()
}

/// Parameters `α, β2, γ1, γ2, Δ12, Δ22` of the Heisenberg derivations.
pub fn heisenberg_der_basis(f: FieldSpec) -> Vec<Matrix> {
    const FORMS: [[[i64; 3]; 3]; 6] = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 0]],
        [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
        [[0, 0, 0], [1, 0, 0], [0, 0, 0]],
        [[0, 0, 0], [0, 0, 0], [1, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, 0, 0]],
        [[0, 0, 0], [0, 1, 0], [0, 0, 1]],
    ];
    FORMS
        .iter()
        .map(|m| Matrix::from_i64(f, &[&m[0], &m[1], &m[2]]))
        .collect()
}

fn core_kind(core: &Algebra) -> CoreKind {
    recognize_core(core).expect("core is indecomposable")
}

/// Automorphism form for an indecomposable algebra.
pub fn aut_form_indecomposable(core: &Algebra, phi: &Matrix) -> Result<bool> {
    if core_kind(core) == CoreKind::Heisenberg {
        let q = heisenberg_frame(core)?;
        return Ok(heisenberg_aut_form(&into_frame(&q, phi)));
    }
    let b = HomBlock::from_matrix(phi)?;
    let t = core.operator();
    Ok(b.beta.iter().all(Scalar::is_zero)
        && !b.alpha.is_zero()
        && b.delta.is_invertible()
        && b.delta.mul(t) == t.mul(&b.delta).scale(&b.alpha))
}

/// Derivation equations for an indecomposable algebra:
/// `βᵀ T = 0`, `(βᵀv) T v' = (βᵀv') T v`, `(Δ - α) T = T Δ`, and `β = 0`
/// unless the algebra is Heisenberg.
pub fn der_form_indecomposable(core: &Algebra, phi: &Matrix) -> Result<bool> {
    let b = HomBlock::from_matrix(phi)?;
    let t = core.operator();
    let n = core.n();
    let f = core.field();
    let beta_row = Matrix::from_rows(f, vec![b.beta.clone()])?;
    if !beta_row.mul(t).is_zero() {
        return Ok(false);
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs: Vec<Scalar> = t.column(j).iter().map(|x| &b.beta[i] * x).collect();
            let rhs: Vec<Scalar> = t.column(i).iter().map(|x| &b.beta[j] * x).collect();
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    let shifted = b.delta.sub(&Matrix::identity(f, n).scale(&b.alpha));
    if shifted.mul(t) != t.mul(&b.delta) {
        return Ok(false);
    }
    Ok(core_kind(core) == CoreKind::Heisenberg || b.beta.iter().all(Scalar::is_zero))
}

/// Lie orthogonal form for an indecomposable algebra.
pub fn lo_form_indecomposable(core: &Algebra, phi: &Matrix) -> Result<bool> {
    match core_kind(core) {
        CoreKind::AxB => Ok(phi.det()?.is_one()),
        CoreKind::Heisenberg => {
            let q = heisenberg_frame(core)?;
            Ok(heisenberg_lo_form(&into_frame(&q, phi)))
        }
        CoreKind::Other => {
            let b = HomBlock::from_matrix(phi)?;
            if !b.beta.iter().all(Scalar::is_zero) || b.alpha.is_zero() {
                return Ok(false);
            }
            let n = core.n();
            let z = b
                .delta
                .sub(&Matrix::identity(core.field(), n).scale(&b.alpha.inv()?));
            Ok(core.operator().mul(&z).is_zero())
        }
    }
}

struct Blocks {
    dec: Decomposition,
    n0: usize,
}

impl Blocks {
    fn of(l: &Algebra) -> Self {
        let dec = decompose(l);
        let n0 = dec.core.n();
        Blocks { dec, n0 }
    }

    fn w(&self) -> usize {
        self.dec.w_dim
    }

    fn core(&self) -> &Algebra {
        &self.dec.core
    }

    /// Columns `W → L0` of a map in split coordinates land in `Z(L0)`.
    fn upper_right_central(&self, phi: &Matrix) -> bool {
        let n0 = self.n0;
        let t0 = self.core().operator();
        (0..self.w()).all(|j| {
            let col = phi.column(1 + n0 + j);
            col[0].is_zero() && t0.mul_vec(&col[1..1 + n0]).iter().all(Scalar::is_zero)
        })
    }
}

/// Automorphism form, or `None` for decomposable algebras where no closed
/// form is used.
pub fn aut_closed_form(l: &Algebra, phi: &Matrix) -> Result<Option<bool>> {
    let blocks = Blocks::of(l);
    if blocks.w() > 0 {
        return Ok(None);
    }
    aut_form_indecomposable(l, phi).map(Some)
}

/// Lie orthogonal form: the core block is Lie orthogonal for `L0` and
/// `W` maps into `Z(L0)` inside `L0`; the remaining blocks are free.
pub fn lo_closed_form(l: &Algebra, phi: &Matrix) -> Result<bool> {
    let blocks = Blocks::of(l);
    let p = blocks.dec.conjugate(phi);
    let k = 1 + blocks.n0;
    Ok(
        lo_form_indecomposable(blocks.core(), &p.submatrix(0..k, 0..k))?
            && blocks.upper_right_central(&p),
    )
}

/// Derivations of an indecomposable algebra, as full matrices.
fn core_der_basis(core: &Algebra) -> Result<Vec<Matrix>> {
    let f = core.field();
    let n = core.n();
    if core_kind(core) == CoreKind::Heisenberg {
        let q = heisenberg_frame(core)?;
        return Ok(heisenberg_der_basis(f)
            .iter()
            .map(|m| out_of_frame(&q, m))
            .collect());
    }
    let mut out = Vec::new();
    for v in linalg::twisted_commutant(core.operator(), &CommutantMode::Derivation)?.basis() {
        let mut m = Matrix::zeros(f, n + 1, n + 1);
        m[(0, 0)] = v[0].clone();
        m.set_block(1, 1, &Matrix::unflatten(f, n, n, &v[1..]));
        out.push(m);
    }
    for k in 0..n {
        let mut m = Matrix::zeros(f, n + 1, n + 1);
        m[(k + 1, 0)] = f.one();
        out.push(m);
    }
    Ok(out)
}

/// The derivation algebra assembled from the block description:
/// `φ00 ∈ Der(L0)`, `φ01 W ⊆ Z(L0)`, `[L0, L0] ⊆ ker φ10`, `φ11` free.
pub fn der_closed_form_space(l: &Algebra) -> Result<Subspace> {
    let f = l.field();
    let n = l.n();
    let blocks = Blocks::of(l);
    let (n0, w) = (blocks.n0, blocks.w());
    let t0 = blocks.core().operator();
    let mut split: Vec<Matrix> = Vec::new();
    for m in core_der_basis(blocks.core())? {
        let mut big = Matrix::zeros(f, n + 1, n + 1);
        big.set_block(0, 0, &m);
        split.push(big);
    }
    let center0 = linalg::kernel(t0);
    let derived_rows: Vec<Vec<Scalar>> = Subspace::column_space(t0)
        .basis()
        .iter()
        .map(|v| std::iter::once(f.zero()).chain(v.iter().cloned()).collect())
        .collect();
    let annihilator = linalg::kernel(&Matrix::from_rows(f, derived_rows)?);
    for j in 0..w {
        for z in center0.basis() {
            let mut big = Matrix::zeros(f, n + 1, n + 1);
            for (i, s) in z.iter().enumerate() {
                big[(1 + i, 1 + n0 + j)] = s.clone();
            }
            split.push(big);
        }
        for a in annihilator.basis() {
            let mut big = Matrix::zeros(f, n + 1, n + 1);
            for (c, s) in a.iter().enumerate() {
                big[(1 + n0 + j, c)] = s.clone();
            }
            split.push(big);
        }
        for k in 0..w {
            let mut big = Matrix::zeros(f, n + 1, n + 1);
            big[(1 + n0 + j, 1 + n0 + k)] = f.one();
            split.push(big);
        }
    }
    let vectors: Vec<Vec<Scalar>> = split
        .iter()
        .map(|m| blocks.dec.unconjugate(m).flatten())
        .collect();
    Ok(Subspace::span(f, (n + 1) * (n + 1), &vectors))
}

/// `dim Der(L0) + w·dim Z(L0) + w·(1 + n0 - rank T0) + w²`.
pub fn der_dim_formula(l: &Algebra) -> Result<usize> {
    let blocks = Blocks::of(l);
    let core = blocks.core();
    let (n0, w) = (blocks.n0, blocks.w());
    let core_dim = match core_kind(core) {
        CoreKind::Heisenberg => 6,
        _ => linalg::twisted_commutant(core.operator(), &CommutantMode::Derivation)?.dim() + n0,
    };
    let rank = core.operator().rank();
    Ok(core_dim + w * (n0 - rank) + w * (1 + n0 - rank) + w * w)
}

/// Short tag naming the description a membership test is checked against.
pub fn clause(l: &Algebra, kind: MapKind) -> &'static str {
    let blocks = Blocks::of(l);
    let decomposable = blocks.w() > 0;
    let core = core_kind(blocks.core());
    match (kind, decomposable, core) {
        (MapKind::Hom, _, _) => "hom/bracket-on-basis-pairs",
        (MapKind::Aut, true, _) => "aut/decomposable-direct-check",
        (MapKind::Aut, false, CoreKind::Heisenberg) => "aut/heisenberg-form",
        (MapKind::Aut, false, _) => "aut/beta-zero-twisted-commutant",
        (MapKind::Der, true, _) => "der/block-form",
        (MapKind::Der, false, CoreKind::Heisenberg) => "der/heisenberg-form",
        (MapKind::Der, false, _) => "der/beta-zero-shifted-commutant",
        (MapKind::Lo, true, _) => "lo/block-form",
        (MapKind::Lo, false, CoreKind::AxB) => "lo/sl2",
        (MapKind::Lo, false, CoreKind::Heisenberg) => "lo/heisenberg-form",
        (MapKind::Lo, false, CoreKind::Other) => "lo/inverse-alpha-plus-central",
    }
}

fn random_matrix<R: Rng + ?Sized>(f: FieldSpec, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    let data = (0..rows * cols).map(|_| f.random(rng, BOUND)).collect();
    Matrix::new(f, rows, cols, data).expect("sizes")
}

fn random_in<R: Rng + ?Sized>(s: &Subspace, rng: &mut R) -> Vec<Scalar> {
    let coeffs: Vec<Scalar> = (0..s.dim()).map(|_| s.field().random(rng, BOUND)).collect();
    linalg::combine(s.field(), s.ambient(), s.basis(), &coeffs)
}

/// A random member of the Heisenberg automorphism form, in the frame.
pub fn sample_heisenberg_aut<R: Rng + ?Sized>(f: FieldSpec, rng: &mut R) -> Matrix {
    loop {
        let mut m = random_matrix(f, 3, 3, rng);
        m[(0, 1)] = f.zero();
        m[(2, 1)] = f.zero();
        let minor = heis_minor(&m);
        if !minor.is_zero() {
            m[(1, 1)] = minor;
            return m;
        }
    }
}

/// A random automorphism of an indecomposable algebra drawn from its
/// closed-form description.
pub fn sample_aut<R: Rng + ?Sized>(core: &Algebra, rng: &mut R) -> Result<Matrix> {
    let f = core.field();
    let n = core.n();
    if core_kind(core) == CoreKind::Heisenberg {
        let q = heisenberg_frame(core)?;
        return Ok(out_of_frame(&q, &sample_heisenberg_aut(f, rng)));
    }
    let t = core.operator();
    let pick = |alpha: &Scalar, rng: &mut R| -> Result<Option<Matrix>> {
        let space = linalg::twisted_commutant(t, &CommutantMode::Automorphism(alpha.clone()))?;
        for _ in 0..64 {
            let d = Matrix::unflatten(f, n, n, &random_in(&space, rng));
            if d.is_invertible() {
                return Ok(Some(d));
            }
        }
        Ok(linalg::sample_invertible(
            &linalg::as_matrices(&space, n),
            64,
            rng.gen(),
        ))
    };
    let mut chosen = None;
    for _ in 0..8 {
        let alpha = f.random_nonzero(rng, BOUND);
        if let Some(d) = pick(&alpha, rng)? {
            chosen = Some((alpha, d));
            break;
        }
    }
    let (alpha, delta) = match chosen {
        Some(c) => c,
        None => {
            let d = pick(&f.one(), rng)?.expect("the identity commutes with T");
            (f.one(), d)
        }
    };
    let gamma: Vec<Scalar> = (0..n).map(|_| f.random(rng, BOUND)).collect();
    Ok(HomBlock::new(alpha, vec![f.zero(); n], gamma, delta)?.to_matrix())
}

fn sample_core_lo<R: Rng + ?Sized>(core: &Algebra, rng: &mut R) -> Result<Matrix> {
    let f = core.field();
    let n = core.n();
    match core_kind(core) {
        CoreKind::AxB => loop {
            let mut m = random_matrix(f, 2, 2, rng);
            let det = m.det()?;
            if det.is_zero() {
                continue;
            }
            let s = det.inv()?;
            for j in 0..2 {
                m[(0, j)] = &m[(0, j)] * &s;
            }
            return Ok(m);
        },
        CoreKind::Heisenberg => {
            let q = heisenberg_frame(core)?;
            let mut m = random_matrix(f, 3, 3, rng);
            m[(0, 1)] = f.zero();
            m[(2, 1)] = f.zero();
            let alpha = f.random_nonzero(rng, BOUND);
            m[(0, 0)] = alpha.clone();
            m[(2, 2)] = &(&f.one() + &(&m[(2, 0)] * &m[(0, 2)])) / &alpha;
            Ok(out_of_frame(&q, &m))
        }
        CoreKind::Other => {
            let alpha = f.random_nonzero(rng, BOUND);
            let center = linalg::kernel(core.operator());
            let z_cols: Vec<Vec<Scalar>> = (0..n).map(|_| random_in(&center, rng)).collect();
            let z = Matrix::from_columns(f, n, &z_cols);
            let delta = Matrix::identity(f, n).scale(&alpha.inv()?).add(&z);
            let gamma = (0..n).map(|_| f.random(rng, BOUND)).collect();
            Ok(HomBlock::new(alpha, vec![f.zero(); n], gamma, delta)?.to_matrix())
        }
    }
}

/// A random Lie orthogonal operator drawn from the closed-form description.
pub fn sample_lo<R: Rng + ?Sized>(l: &Algebra, rng: &mut R) -> Result<Matrix> {
    let f = l.field();
    let n = l.n();
    let blocks = Blocks::of(l);
    let (n0, w) = (blocks.n0, blocks.w());
    let mut m = random_matrix(f, n + 1, n + 1, rng);
    m.set_block(0, 0, &sample_core_lo(blocks.core(), rng)?);
    let center0 = linalg::kernel(blocks.core().operator());
    for j in 0..w {
        let z = random_in(&center0, rng);
        m[(0, 1 + n0 + j)] = f.zero();
        for (i, s) in z.into_iter().enumerate() {
            m[(1 + i, 1 + n0 + j)] = s;
        }
    }
    Ok(blocks.dec.unconjugate(&m))
}

/// A random derivation drawn from the closed-form description.
pub fn sample_der<R: Rng + ?Sized>(l: &Algebra, rng: &mut R) -> Result<Matrix> {
    let n = l.n();
    let v = random_in(&der_closed_form_space(l)?, rng);
    Ok(Matrix::unflatten(l.field(), n + 1, n + 1, &v))
}

/// Number of free parameters of `Hom(V0, ker T0)`.
pub fn z_space_dim(core: &Algebra) -> usize {
    core.n() * linalg::kernel(core.operator()).dim()
}
