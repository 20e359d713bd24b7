//! Homomorphisms, automorphisms, derivations and Lie orthogonal operators,
//! and the isomorphism decision.
//!
//! Every membership test runs the direct bracket check and, where an explicit
//! description is available, checks it against [`closed`]; a disagreement is
//! reported as [`Error::InternalCrossCheckFailure`].

mod block;
pub mod closed;

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use block::{HomBlock, MapSpace, MapSpaceKind};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, CommutantMode, Matrix, Subspace};
use crate::structure::{center, decompose, is_indecomposable, recognize_core, CoreKind};

/// Sampling budget for isomorphism witnesses.
pub const WITNESS_ATTEMPTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    Hom,
    Aut,
    Lo,
    Der,
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapKind::Hom => "hom",
            MapKind::Aut => "aut",
            MapKind::Lo => "lo",
            MapKind::Der => "der",
        })
    }
}

fn check_shape(src: &Algebra, dst: &Algebra, phi: &Matrix) -> Result<()> {
    if phi.rows() != dst.dim() || phi.cols() != src.dim() {
        return Err(Error::SizeMismatch(format!(
            "map is {}x{}, expected {}x{}",
            phi.rows(),
            phi.cols(),
            dst.dim(),
            src.dim()
        )));
    }
    if phi.field() != src.field() || dst.field() != src.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

fn basis_vecs(l: &Algebra) -> Vec<Vec<Scalar>> {
    l.basis().iter().map(|e| e.to_vec()).collect()
}

fn basis_pairs(dim: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..dim).flat_map(move |i| (i + 1..dim).map(move |j| (i, j)))
}

/// `φ[X, Y] = [φX, φY]` on all basis pairs.
pub fn is_homomorphism(src: &Algebra, dst: &Algebra, phi: &HomBlock) -> Result<bool> {
    let m = phi.to_matrix();
    check_shape(src, dst, &m)?;
    let e = basis_vecs(src);
    let images: Vec<Vec<Scalar>> = e.iter().map(|x| m.mul_vec(x)).collect();
    Ok(basis_pairs(src.dim()).all(|(i, j)| {
        m.mul_vec(&src.bracket_vec(&e[i], &e[j])) == dst.bracket_vec(&images[i], &images[j])
    }))
}

/// `D[X, Y] - [DX, Y] - [X, DY]` over all basis pairs, concatenated.
fn leibniz_residual(l: &Algebra, d: &Matrix) -> Vec<Scalar> {
    let e = basis_vecs(l);
    let images: Vec<Vec<Scalar>> = e.iter().map(|x| d.mul_vec(x)).collect();
    basis_pairs(l.dim())
        .flat_map(|(i, j)| {
            let lhs = d.mul_vec(&l.bracket_vec(&e[i], &e[j]));
            let a = l.bracket_vec(&images[i], &e[j]);
            let b = l.bracket_vec(&e[i], &images[j]);
            lhs.into_iter()
                .zip(a.into_iter().zip(b))
                .map(|(x, (y, z))| &(&x - &y) - &z)
                .collect::<Vec<_>>()
        })
        .collect()
}

fn is_derivation_direct(l: &Algebra, d: &Matrix) -> bool {
    leibniz_residual(l, d).iter().all(Scalar::is_zero)
}

fn is_lie_orthogonal_direct(l: &Algebra, phi: &Matrix) -> bool {
    let e = basis_vecs(l);
    let images: Vec<Vec<Scalar>> = e.iter().map(|x| phi.mul_vec(x)).collect();
    basis_pairs(l.dim())
        .all(|(i, j)| l.bracket_vec(&images[i], &images[j]) == l.bracket_vec(&e[i], &e[j]))
}

fn cross_check(what: &str, direct: bool, closed: bool, phi: &Matrix) -> Result<bool> {
    if direct != closed {
        return Err(Error::InternalCrossCheckFailure(format!(
            "{what}: direct check {direct}, closed form {closed} for {phi}"
        )));
    }
    Ok(direct)
}

pub fn is_automorphism(l: &Algebra, phi: &HomBlock) -> Result<bool> {
    let direct = is_homomorphism(l, l, phi)? && phi.to_matrix().is_invertible();
    let m = phi.to_matrix();
    match closed::aut_closed_form(l, &m)? {
        Some(c) => cross_check("automorphism", direct, c, &m),
        None => Ok(direct),
    }
}

pub fn is_derivation(l: &Algebra, phi: &HomBlock) -> Result<bool> {
    let m = phi.to_matrix();
    check_shape(l, l, &m)?;
    let closed = closed::der_closed_form_space(l)?.contains(&m.flatten());
    cross_check("derivation", is_derivation_direct(l, &m), closed, &m)
}

pub fn is_lie_orthogonal(l: &Algebra, phi: &HomBlock) -> Result<bool> {
    let m = phi.to_matrix();
    check_shape(l, l, &m)?;
    let closed = closed::lo_closed_form(l, &m)?;
    cross_check(
        "Lie orthogonal",
        is_lie_orthogonal_direct(l, &m),
        closed,
        &m,
    )
}

/// Dispatches a membership test by kind; `target` is only used for `Hom`.
pub fn check_map(
    l: &Algebra,
    target: Option<&Algebra>,
    kind: MapKind,
    phi: &HomBlock,
) -> Result<bool> {
    match kind {
        MapKind::Hom => is_homomorphism(l, target.unwrap_or(l), phi),
        MapKind::Aut => is_automorphism(l, phi),
        MapKind::Lo => is_lie_orthogonal(l, phi),
        MapKind::Der => is_derivation(l, phi),
    }
}

/// The `Δ` blocks of automorphisms with a given `α`; together with a free
/// `γ` and invertible `Δ` they make up the automorphism group.
pub fn automorphism_component_space(l: &Algebra, alpha: &Scalar) -> Result<MapSpace> {
    if alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    if !is_indecomposable(l) {
        return Err(Error::WrongAlgebraClass("indecomposable algebra required"));
    }
    if recognize_core(l)? == CoreKind::Heisenberg {
        return Err(Error::WrongAlgebraClass(
            "Heisenberg automorphisms have their own form",
        ));
    }
    let n = l.n();
    let f = l.field();
    let space =
        linalg::twisted_commutant(l.operator(), &CommutantMode::Automorphism(alpha.clone()))?;
    let basis = linalg::as_matrices(&space, n)
        .into_iter()
        .map(|d| HomBlock::new(f.zero(), vec![f.zero(); n], vec![f.zero(); n], d).expect("sizes"))
        .collect();
    Ok(MapSpace {
        kind: MapSpaceKind::TwistedAut(alpha.clone()),
        basis,
    })
}

/// All derivations, from the Leibniz equations on basis pairs.
pub fn derivation_space(l: &Algebra) -> Result<MapSpace> {
    let f = l.field();
    let d = l.dim();
    let columns: Vec<Vec<Scalar>> = (0..d * d)
        .map(|k| {
            let mut e = Matrix::zeros(f, d, d);
            e[(k / d, k % d)] = f.one();
            leibniz_residual(l, &e)
        })
        .collect();
    let rows = columns.first().map_or(0, Vec::len);
    let generic = if rows == 0 {
        Subspace::full(f, d * d)
    } else {
        linalg::kernel(&Matrix::from_columns(f, rows, &columns))
    };
    let expected = closed::der_dim_formula(l)?;
    if generic.dim() != expected {
        return Err(Error::InternalCrossCheckFailure(format!(
            "derivation dimension {} vs closed form {expected}",
            generic.dim()
        )));
    }
    if generic != closed::der_closed_form_space(l)? {
        return Err(Error::InternalCrossCheckFailure(
            "derivation space differs from its block description".into(),
        ));
    }
    Ok(MapSpace::from_subspace(
        MapSpaceKind::Derivations,
        &generic,
        d,
        d,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerDerivations {
    pub space: MapSpace,
    pub derivation_dim: usize,
    pub outer_exist: bool,
}

pub fn inner_derivations(l: &Algebra) -> Result<InnerDerivations> {
    let f = l.field();
    let d = l.dim();
    let vectors: Vec<Vec<Scalar>> = l
        .basis()
        .iter()
        .map(|x| l.adjoint_matrix(x).map(|m| m.flatten()))
        .collect::<Result<_>>()?;
    let span = Subspace::span(f, d * d, &vectors);
    let expected = d - center(l).dim();
    if span.dim() != expected {
        return Err(Error::InternalCrossCheckFailure(format!(
            "inner derivation dimension {} vs dim L - dim Z(L) = {expected}",
            span.dim()
        )));
    }
    let derivation_dim = derivation_space(l)?.dim();
    Ok(InnerDerivations {
        space: MapSpace::from_subspace(MapSpaceKind::Inner, &span, d, d),
        derivation_dim,
        outer_exist: span.dim() < derivation_dim,
    })
}

/// `φL + Z(L) = L`.
pub fn image_plus_center_is_whole(l: &Algebra, phi: &Matrix) -> bool {
    let f = l.field();
    let mut vectors: Vec<Vec<Scalar>> = (0..l.dim()).map(|j| phi.column(j)).collect();
    for z in center(l).basis() {
        vectors.push(std::iter::once(f.zero()).chain(z.iter().cloned()).collect());
    }
    Subspace::span(f, l.dim(), &vectors).dim() == l.dim()
}

/// Parameterised description of the Lie orthogonal operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoDescription {
    pub core_kind: CoreKind,
    pub w_dim: usize,
    /// Number of scalar parameters before the constraints are imposed.
    pub parameters: usize,
    pub constraints: Vec<String>,
    /// `dim Hom(V0, ker T0)` when the core is neither `ax+b` nor Heisenberg.
    pub z_space_dim: usize,
    pub samples: Vec<HomBlock>,
}

/// Describes the Lie orthogonal operators and checks sampled members against
/// the direct definition and against `φL + Z(L) = L`.
pub fn lie_orthogonal_space(l: &Algebra, samples: usize, seed: u64) -> Result<LoDescription> {
    let dec = decompose(l);
    let core = &dec.core;
    let kind = recognize_core(core)?;
    let (n0, w) = (core.n(), dec.w_dim);
    let (mut parameters, mut constraints, z_space_dim) = match kind {
        CoreKind::AxB => (4, vec!["det(phi00) = 1".to_string()], 0),
        CoreKind::Heisenberg => (
            7,
            vec!["alpha*Delta22 - gamma2*beta2 = 1 in the Heisenberg frame".to_string()],
            0,
        ),
        CoreKind::Other => {
            let z = closed::z_space_dim(core);
            (
                1 + n0 + z,
                vec![
                    "beta = 0".to_string(),
                    "alpha != 0".to_string(),
                    "Delta = (1/alpha) I + Z with T Z = 0".to_string(),
                ],
                z,
            )
        }
    };
    if w > 0 {
        let kernel0 = linalg::kernel(core.operator()).dim();
        parameters += w * kernel0 + w * (1 + n0) + w * w;
        constraints.push("phi01 maps W into Z(L0)".to_string());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        let m = closed::sample_lo(l, &mut rng)?;
        if !is_lie_orthogonal_direct(l, &m) {
            return Err(Error::InternalCrossCheckFailure(format!(
                "sampled operator {m} is not Lie orthogonal"
            )));
        }
        if !image_plus_center_is_whole(l, &m) {
            return Err(Error::InternalCrossCheckFailure(format!(
                "phi L + Z(L) != L for {m}"
            )));
        }
        out.push(HomBlock::from_matrix(&m)?);
    }
    Ok(LoDescription {
        core_kind: kind,
        w_dim: w,
        parameters,
        constraints,
        z_space_dim,
        samples: out,
    })
}

/// `λ` with `T1 ~ λ T2` on the cores, and an explicit isomorphism when
/// one was found within [`WITNESS_ATTEMPTS`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub lambda: Scalar,
    pub witness: Option<HomBlock>,
}

pub fn isomorphic(l1: &Algebra, l2: &Algebra, seed: u64) -> Result<Option<Isomorphism>> {
    if l1.field() != l2.field() {
        return Err(Error::FieldMismatch);
    }
    if l1.n() != l2.n() {
        return Ok(None);
    }
    let d1 = decompose(l1);
    let d2 = decompose(l2);
    if d1.w_dim != d2.w_dim {
        return Ok(None);
    }
    let (t1, t2) = (d1.core.operator(), d2.core.operator());
    let Some(lambda) = linalg::scalar_similar(t1, t2)? else {
        return Ok(None);
    };
    let f = l1.field();
    let n0 = d1.core.n();
    let space = linalg::intertwiners(t1, t2, &lambda)?;
    let candidates = linalg::as_matrices(&space, n0);
    let witness = match linalg::sample_invertible(&candidates, WITNESS_ATTEMPTS, seed) {
        None => None,
        Some(phi) => {
            let block = Matrix::identity(f, 1)
                .scale(&lambda)
                .direct_sum(&phi)
                .direct_sum(&Matrix::identity(f, d1.w_dim));
            let full = d2.new_basis.mul(&block).mul(&d1.change_of_basis);
            let hb = HomBlock::from_matrix(&full)?;
            if !(is_homomorphism(l1, l2, &hb)? && full.is_invertible()) {
                return Err(Error::InternalCrossCheckFailure(format!(
                    "assembled witness {full} is not an isomorphism"
                )));
            }
            Some(hb)
        }
    };
    Ok(Some(Isomorphism { lambda, witness }))
}
