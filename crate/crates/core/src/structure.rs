//! Center, series, subalgebras and ideals, the core/central-extension
//! decomposition, core recognition and quotients.

use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, Matrix, Subspace};

/// Isomorphism type of an indecomposable core.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoreKind {
    AxB,
    Heisenberg,
    Other,
}

impl fmt::Display for CoreKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoreKind::AxB => "AxB",
            CoreKind::Heisenberg => "Heisenberg",
            CoreKind::Other => "Other",
        })
    }
}

/// Kernel of `T`, i.e. the center of `L` seen inside `V`.
pub fn center(l: &Algebra) -> Subspace {
    linalg::kernel(l.operator())
}

/// Image of `T`, i.e. the derived algebra `[L, L]` inside `V`.
pub fn derived_algebra(l: &Algebra) -> Subspace {
    Subspace::column_space(l.operator())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub center: Subspace,
    /// `[L, L]` and then `[[L, L], [L, L]] = 0`.
    pub derived: Vec<Subspace>,
    /// `im T, im T^2, ...` until the sequence stabilises.
    pub lower_central: Vec<Subspace>,
    pub nilpotent: bool,
    pub nilpotency_class: Option<usize>,
    pub solvable: bool,
    pub nilradical_is_whole: bool,
    pub indecomposable: bool,
    pub core_kind: CoreKind,
    pub central_extension_dim: usize,
}

pub fn series_and_flags(l: &Algebra) -> StructureReport {
    let t = l.operator();
    let image = derived_algebra(l);
    let mut lower_central = vec![image.clone()];
    loop {
        let next = lower_central.last().unwrap().image_under(t);
        if next == *lower_central.last().unwrap() {
            break;
        }
        lower_central.push(next);
    }
    let nilpotent = lower_central.last().unwrap().is_zero();
    let nilpotency_class = nilpotent.then_some(lower_central.len());
    let derived = vec![image, Subspace::zero(l.field(), l.n())];
    let dec = decompose(l);
    StructureReport {
        center: center(l),
        derived,
        lower_central,
        nilpotent,
        nilpotency_class,
        solvable: true,
        nilradical_is_whole: nilpotent,
        indecomposable: is_indecomposable(l),
        core_kind: recognize_core(&dec.core).expect("core is indecomposable"),
        central_extension_dim: dec.w_dim,
    }
}

pub fn is_nilpotent(l: &Algebra) -> bool {
    linalg::is_nilpotent(l.operator())
}

/// `ker T ⊆ im T`.
pub fn is_indecomposable(l: &Algebra) -> bool {
    center(l).is_subspace_of(&derived_algebra(l))
}

/// Rank criteria on `T` for an indecomposable algebra.
pub fn recognize_core(l: &Algebra) -> Result<CoreKind> {
    if !is_indecomposable(l) {
        return Err(Error::NotIndecomposable);
    }
    let image = derived_algebra(l);
    Ok(if image.dim() != 1 {
        CoreKind::Other
    } else if image.is_subspace_of(&center(l)) {
        CoreKind::Heisenberg
    } else {
        CoreKind::AxB
    })
}

/// `false` exactly when `L ≅ H ⊕ W`, the only case with several
/// codimension-one Abelian ideals.
pub fn codim1_abelian_ideal_unique(l: &Algebra) -> bool {
    let core = decompose(l).core;
    recognize_core(&core).expect("core is indecomposable") != CoreKind::Heisenberg
}

/// `L = L0 ⊕ W` with `L0` indecomposable and `W` central.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub core: Algebra,
    pub w_dim: usize,
    /// Maps old coordinates `(t, v)` to new ones `(t, v0, w)`.
    pub change_of_basis: Matrix,
    /// Columns are the new basis `(e0, V0 basis, W basis)` in old coordinates.
    pub new_basis: Matrix,
}

impl Decomposition {
    /// Dimension of the core's `V0`.
    pub fn core_n(&self) -> usize {
        self.core.n()
    }

    /// Re-expresses an endomorphism of `L` in the new coordinates.
    pub fn conjugate(&self, phi: &Matrix) -> Matrix {
        self.change_of_basis.mul(phi).mul(&self.new_basis)
    }

    /// Inverse of [`Decomposition::conjugate`].
    pub fn unconjugate(&self, phi: &Matrix) -> Matrix {
        self.new_basis.mul(phi).mul(&self.change_of_basis)
    }
}

/// Splits off the central summand `W`, a complement of `ker T ∩ im T` in
/// `ker T`. Complements are chosen greedily from echelon bases so the result
/// is deterministic; an indecomposable input is returned unchanged.
pub fn decompose(l: &Algebra) -> Decomposition {
    let f = l.field();
    let n = l.n();
    let t = l.operator();
    let kernel = center(l);
    let image = derived_algebra(l);
    let w_basis = kernel.intersection(&image).complement_in(&kernel);
    let full_id = Matrix::identity(f, n + 1);
    if w_basis.is_empty() {
        return Decomposition {
            core: l.clone(),
            w_dim: 0,
            change_of_basis: full_id.clone(),
            new_basis: full_id,
        };
    }
    let w = Subspace::span(f, n, &w_basis);
    let mut v0_basis: Vec<Vec<Scalar>> = image.basis().to_vec();
    v0_basis.extend(image.sum(&w).standard_complement());
    let n0 = v0_basis.len();
    let mut cols = v0_basis;
    cols.extend(w_basis.iter().cloned());
    let p = Matrix::from_columns(f, n, &cols);
    let p_inv = p.inverse().expect("basis");
    let t_new = p_inv.mul(t).mul(&p);
    debug_assert!(t_new.submatrix(n0..n, 0..n).is_zero());
    debug_assert!(t_new.submatrix(0..n, n0..n).is_zero());
    let core = Algebra::new(t_new.submatrix(0..n0, 0..n0)).expect("core operator is nonzero");
    let one = Matrix::identity(f, 1);
    Decomposition {
        core,
        w_dim: w_basis.len(),
        change_of_basis: one.direct_sum(&p_inv),
        new_basis: one.direct_sum(&p),
    }
}

/// The forms a subspace of `L` can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubspaceClass {
    NotSubalgebra,
    /// `W ⊆ V`, not `T`-invariant.
    AbelianSubalgebraInV,
    /// `F e1 ⊕ W`, `e1 ∈ e0 + V`, `W ⊆ ker T`.
    AbelianSubalgebraWithE0,
    /// `F e1 ⋉ W`, `W` `T`-invariant, `W ⊄ ker T`.
    AlmostAbelianSubalgebra,
    /// `T`-invariant `W ⊆ V`.
    AbelianIdealInV,
    /// `F e1 ⊕ W` with `im T ⊆ W ⊆ ker T`.
    AbelianIdealWithE0,
    /// `F e1 ⋉ W` with `im T ⊆ W ⊄ ker T`.
    AlmostAbelianIdeal,
}

impl SubspaceClass {
    pub fn is_subalgebra(&self) -> bool {
        *self != SubspaceClass::NotSubalgebra
    }

    pub fn is_ideal(&self) -> bool {
        matches!(
            self,
            SubspaceClass::AbelianIdealInV
                | SubspaceClass::AbelianIdealWithE0
                | SubspaceClass::AlmostAbelianIdeal
        )
    }

    /// Short tag naming the structural clause that decided the class.
    pub fn clause(&self) -> &'static str {
        match self {
            SubspaceClass::NotSubalgebra => "not-subalgebra/T-W-not-in-W",
            SubspaceClass::AbelianSubalgebraInV => "subalgebra/abelian-in-V",
            SubspaceClass::AbelianSubalgebraWithE0 => "subalgebra/abelian-with-e0",
            SubspaceClass::AlmostAbelianSubalgebra => "subalgebra/almost-abelian",
            SubspaceClass::AbelianIdealInV => "ideal/abelian-in-V",
            SubspaceClass::AbelianIdealWithE0 => "ideal/abelian-with-e0",
            SubspaceClass::AlmostAbelianIdeal => "ideal/almost-abelian",
        }
    }
}

impl fmt::Display for SubspaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubspaceClass::NotSubalgebra => "NotSubalgebra",
            SubspaceClass::AbelianSubalgebraInV => "AbelianSubalgebra_inV",
            SubspaceClass::AbelianSubalgebraWithE0 => "AbelianSubalgebra_withE0",
            SubspaceClass::AlmostAbelianSubalgebra => "AlmostAbelianSubalgebra",
            SubspaceClass::AbelianIdealInV => "AbelianIdeal_inV",
            SubspaceClass::AbelianIdealWithE0 => "AbelianIdeal_withE0",
            SubspaceClass::AlmostAbelianIdeal => "AlmostAbelianIdeal",
        })
    }
}

/// Splits a subspace `S ⊆ L` into its `V`-part `W` and, if `S ⊄ V`, the
/// normalised element `e1 = e0 + u ∈ S`.
fn split(l: &Algebra, s: &Subspace) -> Result<(Option<Vec<Scalar>>, Subspace)> {
    if s.ambient() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            got: s.ambient(),
        });
    }
    // In reduced echelon form a vector with nonzero e0-coordinate can only be
    // the first basis vector, with pivot 1 at position 0.
    let has_e0 = s.pivots().first() == Some(&0);
    let rest = if has_e0 { &s.basis()[1..] } else { s.basis() };
    let w_vecs: Vec<Vec<Scalar>> = rest.iter().map(|b| b[1..].to_vec()).collect();
    let w = Subspace::span(l.field(), l.n(), &w_vecs);
    let e1 = has_e0.then(|| s.basis()[0][1..].to_vec());
    Ok((e1, w))
}

pub fn classify_subspace(l: &Algebra, s: &Subspace) -> Result<SubspaceClass> {
    let (e1, w) = split(l, s)?;
    let t = l.operator();
    let invariant = w.image_under(t).is_subspace_of(&w);
    let image = derived_algebra(l);
    Ok(match e1 {
        None if invariant => SubspaceClass::AbelianIdealInV,
        None => SubspaceClass::AbelianSubalgebraInV,
        Some(_) if !invariant => SubspaceClass::NotSubalgebra,
        Some(_) => {
            let abelian = w.is_subspace_of(&center(l));
            let ideal = image.is_subspace_of(&w);
            match (abelian, ideal) {
                (true, true) => SubspaceClass::AbelianIdealWithE0,
                (true, false) => SubspaceClass::AbelianSubalgebraWithE0,
                (false, true) => SubspaceClass::AlmostAbelianIdeal,
                (false, false) => SubspaceClass::AlmostAbelianSubalgebra,
            }
        }
    })
}

/// `L / I` for an ideal `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Quotient {
    Abelian(usize),
    AlmostAbelian(Algebra),
}

impl Quotient {
    pub fn dim(&self) -> usize {
        match self {
            Quotient::Abelian(d) => *d,
            Quotient::AlmostAbelian(a) => a.dim(),
        }
    }
}

/// The quotient by an ideal, expressed in the basis `(e0, C)` where `C` is
/// the standard-vector complement of the ideal's `V`-part.
pub fn quotient_by_ideal(l: &Algebra, ideal: &Subspace) -> Result<Quotient> {
    let class = classify_subspace(l, ideal)?;
    if !class.is_ideal() {
        return Err(Error::NotAnIdeal);
    }
    let quotient_dim = l.dim() - ideal.dim();
    let (e1, w) = split(l, ideal)?;
    if e1.is_some() {
        // e0 is congruent to an element of V and all brackets land in im T ⊆ I
        return Ok(Quotient::Abelian(quotient_dim));
    }
    let f = l.field();
    let n = l.n();
    let complement = w.standard_complement();
    if complement.is_empty() {
        return Ok(Quotient::Abelian(quotient_dim));
    }
    let mut cols: Vec<Vec<Scalar>> = w.basis().to_vec();
    cols.extend(complement.iter().cloned());
    let p = Matrix::from_columns(f, n, &cols);
    let t_new = p.inverse()?.mul(l.operator()).mul(&p);
    let k = w.dim();
    let induced = t_new.submatrix(k..n, k..n);
    if induced.is_zero() {
        Ok(Quotient::Abelian(quotient_dim))
    } else {
        Ok(Quotient::AlmostAbelian(Algebra::new(induced)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::named::*;
    use crate::field::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rational;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    fn sub(ambient: usize, vs: &[&[i64]]) -> Subspace {
        let vs: Vec<_> = vs.iter().map(|x| v(x)).collect();
        Subspace::span(Q, ambient, &vs)
    }

    #[test]
    fn centers() {
        let h = heisenberg(Q);
        assert_eq!(center(&h), sub(2, &[&[1, 0]]));
        // cross-check: e1 brackets to zero with the whole basis
        let e = h.basis();
        assert!(e.iter().all(|y| h.bracket(&e[1], y).unwrap().is_zero()));
        assert!(center(&bianchi_vii0(Q)).is_zero());
        assert!(center(&axb(Q)).is_zero());
    }

    #[test]
    fn series() {
        let r = series_and_flags(&heisenberg(Q));
        assert_eq!(
            r.lower_central,
            vec![sub(2, &[&[1, 0]]), Subspace::zero(Q, 2)]
        );
        assert!(r.nilpotent);
        assert_eq!(r.nilpotency_class, Some(2));
        assert_eq!(r.core_kind, CoreKind::Heisenberg);
        assert!(r.nilradical_is_whole);

        let r = series_and_flags(&axb(Q));
        assert_eq!(r.lower_central, vec![Subspace::full(Q, 1)]);
        assert!(!r.nilpotent);
        assert!(r.solvable);
        assert_eq!(r.derived[1], Subspace::zero(Q, 1));

        let r = series_and_flags(&bianchi_vii0(Q));
        assert!(!r.nilpotent);
        assert_eq!(r.lower_central[0], Subspace::full(Q, 2));
        assert_eq!(r.core_kind, CoreKind::Other);
    }

    #[test]
    fn classification_examples() {
        let h = heisenberg(Q);
        assert_eq!(
            classify_subspace(&h, &sub(3, &[&[1, 0, 0], &[0, 1, 0]])).unwrap(),
            SubspaceClass::AbelianIdealWithE0
        );
        assert_eq!(
            classify_subspace(&h, &sub(3, &[&[0, 0, 1]])).unwrap(),
            SubspaceClass::AbelianSubalgebraInV
        );
        for l in [h.clone(), axb(Q), bianchi_vii0(Q)] {
            let vspace = Subspace::span(
                Q,
                l.dim(),
                &(1..l.dim())
                    .map(|i| l.basis_element(i).to_vec())
                    .collect::<Vec<_>>(),
            );
            assert_eq!(
                classify_subspace(&l, &vspace).unwrap(),
                SubspaceClass::AbelianIdealInV
            );
        }
        // T e1 = e2 leaves span{e1}
        let b = bianchi_vii0(Q);
        assert_eq!(
            classify_subspace(&b, &sub(3, &[&[1, 0, 1], &[0, 1, 0]])).unwrap(),
            SubspaceClass::NotSubalgebra
        );
        assert!(classify_subspace(&b, &sub(2, &[&[1, 0]])).is_err());
    }

    #[test]
    fn decompositions() {
        let hf = heisenberg_plus_line(Q);
        let d = decompose(&hf);
        assert_eq!(d.core, heisenberg(Q));
        assert_eq!(d.w_dim, 1);
        assert!(!is_indecomposable(&hf));
        assert_eq!(recognize_core(&hf), Err(Error::NotIndecomposable));

        let d = decompose(&heisenberg(Q));
        assert_eq!((d.core, d.w_dim), (heisenberg(Q), 0));
        let d = decompose(&axb(Q));
        assert_eq!((d.core, d.w_dim), (axb(Q), 0));
        assert!(is_indecomposable(&heisenberg(Q)));
        assert!(is_indecomposable(&bianchi_vii0(Q)));
    }

    #[test]
    fn decomposition_with_scrambled_basis() {
        // T = diag(1, 0) conjugated: core AxB, one central direction
        let l = Algebra::from_i64(Q, &[&[1, 1], &[0, 0]]).unwrap();
        let d = decompose(&l);
        assert_eq!(d.w_dim, 1);
        assert_eq!(recognize_core(&d.core).unwrap(), CoreKind::AxB);
        assert_eq!(d.change_of_basis.mul(&d.new_basis), Matrix::identity(Q, 3));
    }

    #[test]
    fn core_recognition() {
        assert_eq!(recognize_core(&axb(Q)).unwrap(), CoreKind::AxB);
        assert_eq!(
            recognize_core(&heisenberg(Q)).unwrap(),
            CoreKind::Heisenberg
        );
        assert_eq!(recognize_core(&bianchi_vii0(Q)).unwrap(), CoreKind::Other);
        assert!(!codim1_abelian_ideal_unique(&heisenberg(Q)));
        assert!(!codim1_abelian_ideal_unique(&heisenberg_plus_line(Q)));
        assert!(codim1_abelian_ideal_unique(&axb(Q)));
        assert!(codim1_abelian_ideal_unique(&bianchi_vii0(Q)));
    }

    #[test]
    fn quotients() {
        let h = heisenberg(Q);
        assert_eq!(
            quotient_by_ideal(&h, &sub(3, &[&[0, 1, 0]])).unwrap(),
            Quotient::Abelian(2)
        );
        let a = axb(Q);
        assert_eq!(
            quotient_by_ideal(&a, &sub(2, &[&[0, 1]])).unwrap(),
            Quotient::Abelian(1)
        );
        let hf = heisenberg_plus_line(Q);
        assert_eq!(
            quotient_by_ideal(&hf, &sub(4, &[&[0, 0, 0, 1]])).unwrap(),
            Quotient::AlmostAbelian(heisenberg(Q))
        );
        assert_eq!(
            quotient_by_ideal(&h, &sub(3, &[&[0, 0, 1]])),
            Err(Error::NotAnIdeal)
        );
        // ideal containing e0 + e2: {e0+e2, e1} in HEIS
        assert_eq!(
            quotient_by_ideal(&h, &sub(3, &[&[1, 0, 1], &[0, 1, 0]])).unwrap(),
            Quotient::Abelian(1)
        );
    }

    fn all_vectors(f: FieldSpec, len: usize) -> Vec<Vec<Scalar>> {
        let elems = f.elements().unwrap();
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v: Vec<Scalar>| {
                    elems.iter().map(move |e| {
                        let mut w = v.clone();
                        w.push(e.clone());
                        w
                    })
                })
                .collect();
        }
        out
    }

    fn all_subspaces(f: FieldSpec, len: usize) -> Vec<Subspace> {
        let vecs = all_vectors(f, len);
        let mut found = vec![Subspace::zero(f, len)];
        let mut frontier = found.clone();
        while !frontier.is_empty() {
            let mut next = vec![];
            for s in &frontier {
                for v in &vecs {
                    if s.contains(v) {
                        continue;
                    }
                    let mut b = s.basis().to_vec();
                    b.push(v.clone());
                    let t = Subspace::span(f, len, &b);
                    if !found.contains(&t) {
                        found.push(t.clone());
                        next.push(t);
                    }
                }
            }
            frontier = next;
        }
        found
    }

    fn oracle(l: &Algebra, s: &Subspace) -> SubspaceClass {
        let sb = s.basis();
        let lb: Vec<_> = l.basis().iter().map(|e| e.to_vec()).collect();
        let closed = sb
            .iter()
            .all(|x| sb.iter().all(|y| s.contains(&l.bracket_vec(x, y))));
        let ideal = sb
            .iter()
            .all(|x| lb.iter().all(|y| s.contains(&l.bracket_vec(x, y))));
        let abelian = sb.iter().all(|x| {
            sb.iter()
                .all(|y| l.bracket_vec(x, y).iter().all(Scalar::is_zero))
        });
        let with_e0 = sb.iter().any(|x| !x[0].is_zero());
        match (closed, ideal, with_e0, abelian) {
            (false, _, _, _) => SubspaceClass::NotSubalgebra,
            (_, true, false, _) => SubspaceClass::AbelianIdealInV,
            (_, false, false, _) => SubspaceClass::AbelianSubalgebraInV,
            (_, true, true, true) => SubspaceClass::AbelianIdealWithE0,
            (_, false, true, true) => SubspaceClass::AbelianSubalgebraWithE0,
            (_, true, true, false) => SubspaceClass::AlmostAbelianIdeal,
            (_, false, true, false) => SubspaceClass::AlmostAbelianSubalgebra,
        }
    }

    #[test]
    fn classification_matches_brute_force_over_f2() {
        let f2 = FieldSpec::Prime(2);
        let ops: Vec<&[&[i64]]> = vec![
            &[&[1, 0], &[0, 0]],
            &[&[0, 1], &[0, 0]],
            &[&[1, 1], &[0, 1]],
            &[&[0, 1], &[1, 1]],
            &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]],
            &[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]],
            &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]],
        ];
        for rows in ops {
            let l = Algebra::from_i64(f2, rows).unwrap();
            for s in all_subspaces(f2, l.dim()) {
                let c = classify_subspace(&l, &s).unwrap();
                assert_eq!(
                    c,
                    oracle(&l, &s),
                    "T = {}, S = {:?}",
                    l.operator(),
                    s.basis()
                );
                if c.is_ideal() {
                    let q = quotient_by_ideal(&l, &s).unwrap();
                    assert_eq!(q.dim(), l.dim() - s.dim());
                }
            }
        }
    }

    #[test]
    fn decomposition_invariants_over_f2() {
        let f2 = FieldSpec::Prime(2);
        for bits in 1u32..512 {
            let t = Matrix::new(
                f2,
                3,
                3,
                (0..9)
                    .map(|k| f2.from_i64(((bits >> k) & 1) as i64))
                    .collect(),
            )
            .unwrap();
            let l = Algebra::new(t).unwrap();
            let d = decompose(&l);
            assert!(is_indecomposable(&d.core));
            assert_eq!(d.core.n() + d.w_dim, l.n());
            // conjugating ad_e0 gives the block operator
            let blocks = d.core.adjoint_matrix(&d.core.basis_element(0)).unwrap();
            let blocks = blocks.direct_sum(&Matrix::zeros(f2, d.w_dim, d.w_dim));
            let ad0 = l.adjoint_matrix(&l.basis_element(0)).unwrap();
            assert_eq!(d.conjugate(&ad0), blocks);
            assert_eq!(is_indecomposable(&l), d.w_dim == 0);
        }
    }
}
