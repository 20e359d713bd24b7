//! The universal enveloping algebra in PBW form `Σ x0^m P_m(x1, ..., xn)`,
//! and its center up to a degree bound.
//!
//! Monomials in `x1..xn` are ordered graded lexicographically with
//! `x1 > x2 > ...`, so degree two reads `x1^2, x1*x2, x2^2`. Kernel bases are
//! echelonised in that order. Over `F_p` the kernels can be larger than in
//! characteristic zero (`ad(x^p) = p x^(p-1) ad(x) = 0`); nothing is special
//! cased.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{self, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    /// `x_{i+1}`.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut m = Monomial::one(n);
        m.exponents[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// Larger means earlier in the graded lexicographic listing.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => format!("x{}", i + 1),
                _ => format!("x{}^{e}", i + 1),
            })
            .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// Monomials of total degree `k` in `n` variables, in listing order.
pub fn monomials_of_degree(n: usize, k: u32) -> Vec<Monomial> {
    fn rec(n: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(k);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=k).rev() {
            prefix.push(e);
            rec(n, k - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, k, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// A commutative polynomial in `x1..xn`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: FieldSpec,
    n: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Polynomial {
            field,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: FieldSpec, n: usize, c: Scalar) -> Self {
        Self::monomial(field, n, Monomial::one(n), c)
    }

    pub fn monomial(field: FieldSpec, n: usize, m: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero(field, n);
        p.add_term(m, c);
        p
    }

    /// `x_{i+1}`.
    pub fn variable(field: FieldSpec, n: usize, i: usize) -> Self {
        Self::monomial(field, n, Monomial::variable(n, i), field.one())
    }

    /// Sum of `coeffs[c] * basis[c]`.
    pub fn from_coordinates(
        field: FieldSpec,
        n: usize,
        basis: &[Monomial],
        coeffs: &[Scalar],
    ) -> Self {
        let mut p = Self::zero(field, n);
        for (m, c) in basis.iter().zip(coeffs) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the last monomial in listing order to the first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Coefficients against `basis`, ignoring monomials outside it.
    pub fn coordinates(&self, basis: &[Monomial]) -> Vec<Scalar> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-&self.field.one()))
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        let mut out = Self::zero(self.field, self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Self::zero(self.field, self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

fn is_negative(c: &Scalar) -> bool {
    c.as_rational()
        .is_some_and(|r| r < &num_rational::BigRational::from_integer(0.into()))
}

/// Writes `c*m` terms joined by ` + ` / ` - `, first term first.
fn render_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Scalar)>,
) -> fmt::Result {
    let mut first = true;
    for (mono, c) in terms {
        let negative = is_negative(c);
        let abs = if negative { -c } else { c.clone() };
        let body = match (mono.as_str(), abs.is_one()) {
            ("1", _) => abs.to_string(),
            (m, true) => m.to_string(),
            (m, false) => format!("{abs}*{m}"),
        };
        match (first, negative) {
            (true, false) => write!(f, "{body}")?,
            (true, true) => write!(f, "-{body}")?,
            (false, false) => write!(f, " + {body}")?,
            (false, true) => write!(f, " - {body}")?,
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(f, self.terms.iter().rev().map(|(m, c)| (m.to_string(), c)))
    }
}

fn check_vars(l: &Algebra, p: &Polynomial) -> Result<()> {
    if p.n != l.n() {
        return Err(Error::VariableCountMismatch {
            expected: l.n(),
            got: p.n,
        });
    }
    if p.field != l.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// The derivation extending `ad_e0`: `ad(x_i) = Σ_j T_ji x_j`, then Leibniz.
pub fn extended_ad(l: &Algebra, p: &Polynomial) -> Result<Polynomial> {
    check_vars(l, p)?;
    let f = l.field();
    let n = l.n();
    let t = l.operator();
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            let mut q = Polynomial::zero(f, n);
            for j in 0..n {
                q.add_term(Monomial::variable(n, j), t[(j, i)].clone());
            }
            q
        })
        .collect();
    let mut out = Polynomial::zero(f, n);
    for (m, c) in &p.terms {
        for i in 0..n {
            let e = m.exponents[i];
            if e == 0 {
                continue;
            }
            let mut rest = m.clone();
            rest.exponents[i] -= 1;
            let factor = c * &f.from_i64(e as i64);
            let partial = Polynomial::monomial(f, n, rest, factor);
            out = out.add(&partial.mul(&images[i]));
        }
    }
    Ok(out)
}

/// Matrix of [`extended_ad`] on the degree-`k` monomials, in listing order.
pub fn ad_matrix_on_degree(l: &Algebra, k: u32) -> Matrix {
    let f = l.field();
    let n = l.n();
    let basis = monomials_of_degree(n, k);
    let columns: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|m| {
            let p = Polynomial::monomial(f, n, m.clone(), f.one());
            extended_ad(l, &p)
                .expect("same variables")
                .coordinates(&basis)
        })
        .collect();
    Matrix::from_columns(f, basis.len(), &columns)
}

/// Central polynomials of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterDegree {
    pub degree: u32,
    pub basis: Vec<Polynomial>,
}

/// Bases of `ker ad` in degrees `1..=max_degree`; complete only up to that
/// bound. Constants are central and left out.
pub fn uea_center_basis(l: &Algebra, max_degree: u32) -> Vec<CenterDegree> {
    let f = l.field();
    let n = l.n();
    (1..=max_degree)
        .map(|k| {
            let monos = monomials_of_degree(n, k);
            let kernel = linalg::kernel(&ad_matrix_on_degree(l, k));
            let basis = kernel
                .basis()
                .iter()
                .map(|v| Polynomial::from_coordinates(f, n, &monos, v))
                .collect();
            CenterDegree { degree: k, basis }
        })
        .collect()
}

/// `Σ x0^m P_m` with every stored `P_m` nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwElement {
    field: FieldSpec,
    n: usize,
    parts: BTreeMap<u32, Polynomial>,
}

impl PbwElement {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        PbwElement {
            field,
            n,
            parts: BTreeMap::new(),
        }
    }

    pub fn one(field: FieldSpec, n: usize) -> Self {
        Self::from_parts(field, n, [(0, Polynomial::constant(field, n, field.one()))])
    }

    pub fn x0(field: FieldSpec, n: usize) -> Self {
        Self::from_parts(field, n, [(1, Polynomial::constant(field, n, field.one()))])
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let (field, n) = (p.field, p.n);
        Self::from_parts(field, n, [(0, p)])
    }

    /// `x0^m P`.
    pub fn x0_pow_times(m: u32, p: Polynomial) -> Self {
        let (field, n) = (p.field, p.n);
        Self::from_parts(field, n, [(m, p)])
    }

    pub fn from_parts(
        field: FieldSpec,
        n: usize,
        parts: impl IntoIterator<Item = (u32, Polynomial)>,
    ) -> Self {
        let mut out = Self::zero(field, n);
        for (m, p) in parts {
            out.add_part(m, &p);
        }
        out
    }

    pub fn part(&self, m: u32) -> Polynomial {
        self.parts
            .get(&m)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.field, self.n))
    }

    pub fn parts(&self) -> impl Iterator<Item = (&u32, &Polynomial)> {
        self.parts.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    fn add_part(&mut self, m: u32, p: &Polynomial) {
        let sum = self.part(m).add(p);
        if sum.is_zero() {
            self.parts.remove(&m);
        } else {
            self.parts.insert(m, sum);
        }
    }

    pub fn add(&self, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        for (m, p) in &other.parts {
            out.add_part(*m, p);
        }
        out
    }

    pub fn sub(&self, other: &PbwElement) -> PbwElement {
        self.add(&other.scale(&-&self.field.one()))
    }

    pub fn scale(&self, s: &Scalar) -> PbwElement {
        Self::from_parts(
            self.field,
            self.n,
            self.parts.iter().map(|(m, p)| (*m, p.scale(s))),
        )
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.parts.iter().rev().flat_map(|(&m, p)| {
            p.terms.iter().rev().map(move |(mono, c)| {
                let x0 = match m {
                    0 => None,
                    1 => Some("x0".to_string()),
                    _ => Some(format!("x0^{m}")),
                };
                let rest = mono.to_string();
                let label = match (x0, rest.as_str()) {
                    (None, _) => rest,
                    (Some(x), "1") => x,
                    (Some(x), _) => format!("{x}*{rest}"),
                };
                (label, c)
            })
        });
        render_terms(f, terms)
    }
}

/// `C(k, j)` computed over the integers, then mapped into the field.
fn binomial(f: FieldSpec, k: u32, j: u32) -> Scalar {
    let mut c = num_bigint::BigInt::from(1);
    for i in 0..j {
        c = c * (k - i) / (i + 1);
    }
    f.from_bigint(&c)
}

/// Normal-ordered product, using `P x0^k = Σ_j C(k, j) x0^(k-j) (-ad)^j P`.
pub fn pbw_multiply(l: &Algebra, a: &PbwElement, b: &PbwElement) -> Result<PbwElement> {
    let f = l.field();
    let n = l.n();
    if a.n != n || b.n != n {
        return Err(Error::VariableCountMismatch {
            expected: n,
            got: if a.n != n { a.n } else { b.n },
        });
    }
    if a.field != f || b.field != f {
        return Err(Error::FieldMismatch);
    }
    let minus_one = -&f.one();
    let mut out = PbwElement::zero(f, n);
    for (&m, p) in &a.parts {
        for (&k, q) in &b.parts {
            let mut ad_power = p.clone();
            for j in 0..=k {
                if ad_power.is_zero() {
                    break;
                }
                let coeff = binomial(f, k, j);
                let term = ad_power.mul(q).scale(&coeff);
                out.add_part(m + k - j, &term);
                ad_power = extended_ad(l, &ad_power)?.scale(&minus_one);
            }
        }
    }
    Ok(out)
}

/// Commutes with `x0` and with every `x_i`.
pub fn is_central_pbw(l: &Algebra, a: &PbwElement) -> Result<bool> {
    let f = l.field();
    let n = l.n();
    let mut generators = vec![PbwElement::x0(f, n)];
    generators.extend((0..n).map(|i| PbwElement::from_polynomial(Polynomial::variable(f, n, i))));
    for g in &generators {
        if pbw_multiply(l, a, g)? != pbw_multiply(l, g, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::named::*;
    use proptest::prelude::*;
    use std::collections::HashMap;

    const Q: FieldSpec = FieldSpec::Rational;

    fn x(l: &Algebra, i: usize) -> Polynomial {
        Polynomial::variable(l.field(), l.n(), i)
    }

    #[test]
    fn monomial_order() {
        let m: Vec<String> = monomials_of_degree(2, 2)
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(m, ["x1^2", "x1*x2", "x2^2"]);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert!(Monomial::new(vec![2, 0]) > Monomial::new(vec![1, 1]));
        assert!(Monomial::new(vec![0, 2]) > Monomial::new(vec![1, 0]));
    }

    #[test]
    fn rendering() {
        let l = heisenberg(Q);
        let p = x(&l, 0)
            .mul(&x(&l, 0))
            .add(&x(&l, 1).scale(&Q.from_i64(-3)));
        assert_eq!(p.to_string(), "x1^2 - 3*x2");
        let p = p.add(&Polynomial::constant(Q, 2, Q.ratio(1, 2).unwrap()));
        assert_eq!(p.to_string(), "x1^2 - 3*x2 + 1/2");
        assert_eq!(Polynomial::zero(Q, 2).to_string(), "0");
    }

    #[test]
    fn ad_examples() {
        let b = bianchi_vii0(Q);
        let c = x(&b, 0).mul(&x(&b, 0)).add(&x(&b, 1).mul(&x(&b, 1)));
        assert!(extended_ad(&b, &c).unwrap().is_zero());
        let h = heisenberg(Q);
        assert_eq!(extended_ad(&h, &x(&h, 1)).unwrap(), x(&h, 0));
        assert!(extended_ad(&h, &x(&h, 0)).unwrap().is_zero());
        let one = Polynomial::constant(Q, 2, Q.one());
        assert!(extended_ad(&h, &one).unwrap().is_zero());
        assert!(matches!(
            extended_ad(&axb(Q), &x(&h, 0)),
            Err(Error::VariableCountMismatch { .. })
        ));
    }

    #[test]
    fn ad_matrices() {
        let h = heisenberg(Q);
        assert_eq!(ad_matrix_on_degree(&h, 1), *h.operator());
        let b = bianchi_vii0(Q);
        let m = ad_matrix_on_degree(&b, 2);
        // ad(x1^2) = 2 x1 x2, ad(x1 x2) = x2^2 - x1^2, ad(x2^2) = -2 x1 x2
        assert_eq!(
            m,
            Matrix::from_i64(Q, &[&[0, -1, 0], &[2, 0, -2], &[0, 1, 0]])
        );
        assert_eq!(linalg::kernel(&m).dim(), 1);
        let k = linalg::kernel(&ad_matrix_on_degree(&h, 2));
        assert!(k.contains(&[Q.one(), Q.zero(), Q.zero()]));
    }

    #[test]
    fn center_examples() {
        let r = uea_center_basis(&bianchi_vii0(Q), 2);
        assert!(r[0].basis.is_empty());
        let d2: Vec<String> = r[1].basis.iter().map(|p| p.to_string()).collect();
        assert_eq!(d2, ["x1^2 + x2^2"]);
        let r = uea_center_basis(&heisenberg(Q), 2);
        let all: Vec<String> = r
            .iter()
            .flat_map(|d| d.basis.iter().map(|p| p.to_string()))
            .collect();
        assert_eq!(all, ["x1", "x1^2"]);
        assert!(uea_center_basis(&axb(Q), 3)
            .iter()
            .all(|d| d.basis.is_empty()));
    }

    #[test]
    fn characteristic_two_has_more_central_squares() {
        let f2 = FieldSpec::Prime(2);
        let r = uea_center_basis(&axb(f2), 2);
        // ad(x1^2) = 2 x1^2 = 0
        assert_eq!(r[1].basis.len(), 1);
        assert!(is_central_pbw(
            &axb(f2),
            &PbwElement::from_polynomial(r[1].basis[0].clone())
        )
        .unwrap());
    }

    #[test]
    fn pbw_examples() {
        let h = heisenberg(Q);
        let x0 = PbwElement::x0(Q, 2);
        let x1 = PbwElement::from_polynomial(x(&h, 0));
        let x2 = PbwElement::from_polynomial(x(&h, 1));
        assert_eq!(
            pbw_multiply(&h, &x1, &x0).unwrap(),
            pbw_multiply(&h, &x0, &x1).unwrap()
        );
        let prod = pbw_multiply(&h, &x2, &x0).unwrap();
        assert_eq!(prod.to_string(), "x0*x2 - x1");
        let one = PbwElement::one(Q, 2);
        assert_eq!(pbw_multiply(&h, &prod, &one).unwrap(), prod);
        assert!(is_central_pbw(&h, &x1).unwrap());
        assert!(!is_central_pbw(&h, &x2).unwrap());
        for l in [h.clone(), axb(Q), bianchi_vii0(Q)] {
            assert!(!is_central_pbw(&l, &PbwElement::x0(Q, l.n())).unwrap());
        }
    }

    /// Independent reference: words in the generators, normal-ordered by
    /// `x_i x0 = x0 x_i - ad(x_i)` and commuting the `x_i`.
    fn normal_order(l: &Algebra, words: HashMap<Vec<usize>, Scalar>) -> PbwElement {
        let f = l.field();
        let n = l.n();
        let t = l.operator();
        let mut todo: Vec<(Vec<usize>, Scalar)> = words.into_iter().collect();
        let mut out = PbwElement::zero(f, n);
        while let Some((w, c)) = todo.pop() {
            if c.is_zero() {
                continue;
            }
            // first occurrence of some x_i (i ≥ 1) directly before x0
            match (1..w.len()).find(|&k| w[k] == 0 && w[k - 1] != 0) {
                Some(k) => {
                    let i = w[k - 1] - 1;
                    let mut swapped = w.clone();
                    swapped.swap(k - 1, k);
                    todo.push((swapped, c.clone()));
                    for j in 0..n {
                        let tji = &t[(j, i)];
                        if tji.is_zero() {
                            continue;
                        }
                        let mut rewritten = w[..k - 1].to_vec();
                        rewritten.push(j + 1);
                        rewritten.extend_from_slice(&w[k + 1..]);
                        todo.push((rewritten, -&(&c * tji)));
                    }
                }
                None => {
                    let m = w.iter().filter(|&&s| s == 0).count() as u32;
                    let mut exps = vec![0u32; n];
                    for &s in w.iter().filter(|&&s| s != 0) {
                        exps[s - 1] += 1;
                    }
                    let p = Polynomial::monomial(f, n, Monomial::new(exps), c);
                    out = out.add(&PbwElement::x0_pow_times(m, p));
                }
            }
        }
        out
    }

    fn as_words(a: &PbwElement) -> HashMap<Vec<usize>, Scalar> {
        let mut out = HashMap::new();
        for (&m, p) in a.parts() {
            for (mono, c) in p.terms() {
                let mut w = vec![0usize; m as usize];
                for (i, &e) in mono.exponents().iter().enumerate() {
                    w.extend(std::iter::repeat_n(i + 1, e as usize));
                }
                out.insert(w, c.clone());
            }
        }
        out
    }

    fn word_product(l: &Algebra, a: &PbwElement, b: &PbwElement) -> PbwElement {
        let mut words = HashMap::new();
        for (wa, ca) in as_words(a) {
            for (wb, cb) in as_words(b) {
                let mut w = wa.clone();
                w.extend(&wb);
                let e = words.entry(w).or_insert_with(|| l.field().zero());
                *e += &(&ca * &cb);
            }
        }
        normal_order(l, words)
    }

    fn corpus() -> Vec<Algebra> {
        vec![
            axb(Q),
            heisenberg(Q),
            bianchi_vii0(Q),
            Algebra::from_i64(Q, &[&[1, 2, 0], &[0, -1, 1], &[3, 0, 0]]).unwrap(),
            axb(FieldSpec::Prime(3)),
            bianchi_vii0(FieldSpec::Prime(5)),
        ]
    }

    fn small_pbw(l: &Algebra, seeds: &[i64]) -> PbwElement {
        let f = l.field();
        let n = l.n();
        let mut a = PbwElement::zero(f, n);
        for (k, &s) in seeds.iter().enumerate() {
            if s == 0 {
                continue;
            }
            let m = (k % 3) as u32;
            let exps: Vec<u32> = (0..n).map(|i| ((k + i) % 2) as u32).collect();
            let p = Polynomial::monomial(f, n, Monomial::new(exps), f.from_i64(s));
            a = a.add(&PbwElement::x0_pow_times(m, p));
        }
        a
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn multiplication_matches_word_rewriting(
            which in 0usize..6,
            sa in proptest::collection::vec(-2i64..=2, 1..4),
            sb in proptest::collection::vec(-2i64..=2, 1..4),
        ) {
            let l = &corpus()[which];
            let a = small_pbw(l, &sa);
            let b = small_pbw(l, &sb);
            prop_assert_eq!(pbw_multiply(l, &a, &b).unwrap(), word_product(l, &a, &b));
        }

        #[test]
        fn multiplication_is_associative(
            which in 0usize..6,
            sa in proptest::collection::vec(-2i64..=2, 1..3),
            sb in proptest::collection::vec(-2i64..=2, 1..3),
            sc in proptest::collection::vec(-2i64..=2, 1..3),
        ) {
            let l = &corpus()[which];
            let (a, b, c) = (small_pbw(l, &sa), small_pbw(l, &sb), small_pbw(l, &sc));
            let left = pbw_multiply(l, &pbw_multiply(l, &a, &b).unwrap(), &c).unwrap();
            let right = pbw_multiply(l, &a, &pbw_multiply(l, &b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            // bilinearity in the first slot
            let sum = pbw_multiply(l, &a.add(&b), &c).unwrap();
            let parts = pbw_multiply(l, &a, &c).unwrap().add(&pbw_multiply(l, &b, &c).unwrap());
            prop_assert_eq!(sum, parts);
        }

        #[test]
        fn extended_ad_is_a_derivation(
            which in 0usize..6,
            sa in proptest::collection::vec(-3i64..=3, 1..5),
            sb in proptest::collection::vec(-3i64..=3, 1..5),
        ) {
            let l = &corpus()[which];
            let p = small_pbw(l, &sa).part(0).add(&small_pbw(l, &sa).part(1));
            let q = small_pbw(l, &sb).part(0).add(&small_pbw(l, &sb).part(2));
            let lhs = extended_ad(l, &p.mul(&q)).unwrap();
            let rhs = extended_ad(l, &p).unwrap().mul(&q).add(&p.mul(&extended_ad(l, &q).unwrap()));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn center_basis_passes_commutation_oracle() {
        for l in corpus() {
            for d in uea_center_basis(&l, 3) {
                for p in d.basis {
                    assert!(is_central_pbw(&l, &PbwElement::from_polynomial(p)).unwrap());
                }
            }
        }
    }
}
