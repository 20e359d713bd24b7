//! Exact scalar fields: the rationals and small prime fields.
//!
//! Every [`Scalar`] carries its field tag so that mixing fields is caught at
//! runtime. Rationals are kept in lowest terms by `num-rational`, prime field
//! elements are reduced residues, so `==` is structural equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// An exact field: `Q` or `F_p` for a word-sized prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// `F_p`, checking primality by trial division.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Scalar::Prime {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            FieldSpec::Prime(p) => {
                let m = BigInt::from(p);
                let r = ((v % &m) + &m) % &m;
                Scalar::Prime {
                    value: r.to_u64().expect("residue fits"),
                    modulus: p,
                }
            }
        }
    }

    /// Rational `num/den`. Over `F_p` the denominator is inverted.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// Parses the textual scalar format: a decimal integer, or `a/b` over `Q`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::ParseScalar(text.to_string());
        let t = text.trim();
        match self {
            FieldSpec::Rational => {
                let (num, den) = match t.split_once('/') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (t, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            FieldSpec::Prime(_) => {
                let v: BigInt = t.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&v))
            }
        }
    }

    /// All field elements, for prime fields only.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match *self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(
                (0..p)
                    .map(|value| Scalar::Prime { value, modulus: p })
                    .collect(),
            ),
        }
    }

    /// A random element: uniform residue over `F_p`, an integer in
    /// `[-bound, bound]` over `Q`.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Scalar {
        match *self {
            FieldSpec::Rational => self.from_i64(rng.gen_range(-bound..=bound)),
            FieldSpec::Prime(p) => Scalar::Prime {
                value: rng.gen_range(0..p),
                modulus: p,
            },
        }
    }

    /// A random nonzero element.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Scalar {
        loop {
            let s = self.random(rng, bound);
            if !s.is_zero() {
                return s;
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut k: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Total order used whenever a canonical choice among scalars is needed.
    ///
    /// Over `Q`: zero, then positive values by magnitude, then negative values
    /// by magnitude. Over `F_p`: by residue.
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => {
                let key = |r: &BigRational| (r.is_negative(), r.abs());
                key(a).cmp(&key(b))
            }
            (Scalar::Prime { value: a, .. }, Scalar::Prime { value: b, .. }) => a.cmp(b),
            (Scalar::Rational(_), Scalar::Prime { .. }) => Ordering::Less,
            (Scalar::Prime { .. }, Scalar::Rational(_)) => Ordering::Greater,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Prime { .. } => None,
        }
    }

    /// All `λ` with `λ^k = self`, in canonical order.
    pub fn kth_roots(&self, k: u32) -> Result<Vec<Scalar>> {
        if self.is_zero() {
            return Err(Error::ZeroBase);
        }
        if k == 0 {
            return Err(Error::SizeMismatch("root index must be positive".into()));
        }
        let mut roots = match self {
            Scalar::Rational(c) => {
                let num = exact_root(&c.numer().abs(), k);
                let den = exact_root(c.denom(), k);
                match (num, den) {
                    (Some(n), Some(d)) => {
                        let r = BigRational::new(n, d);
                        if c.is_negative() {
                            if k % 2 == 1 {
                                vec![Scalar::Rational(-r)]
                            } else {
                                vec![]
                            }
                        } else if k % 2 == 1 {
                            vec![Scalar::Rational(r)]
                        } else {
                            vec![Scalar::Rational(r.clone()), Scalar::Rational(-r)]
                        }
                    }
                    _ => vec![],
                }
            }
            Scalar::Prime { modulus, .. } => (1..*modulus)
                .map(|value| Scalar::Prime {
                    value,
                    modulus: *modulus,
                })
                .filter(|l| l.pow(k as u64) == *self)
                .collect(),
        };
        roots.sort_by(|a, b| a.canonical_cmp(b));
        Ok(roots)
    }
}

fn exact_root(x: &BigInt, k: u32) -> Option<BigInt> {
    debug_assert!(x.sign() != Sign::Minus);
    let r = x.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *x {
        Some(r)
    } else {
        None
    }
}

fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1 % m as u128;
    let mut base = b as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m as u128;
        }
        base = base * base % m as u128;
        e >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

// Operator impls panic on a field mismatch: matrices and algebras validate
// their field once at construction, after which mixing cannot occur.

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("field mismatch")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("field mismatch")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("field mismatch")
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs)
            .expect("division by zero or field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        FieldSpec::Rational.ratio(n, d).unwrap()
    }

    #[test]
    fn rational_sum_is_canonical() {
        assert_eq!(q(1, 3) + q(1, 6), q(1, 2));
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(2, 4).to_string(), "1/2");
        assert_eq!(q(-6, 3).to_string(), "-2");
    }

    #[test]
    fn prime_inverse() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.from_i64(3).inv().unwrap(), f7.from_i64(5));
        assert_eq!(f7.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(f7.from_i64(-1).to_string(), "6");
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(q(1, 2).checked_add(&f5.one()), Err(Error::FieldMismatch));
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1).is_err());
    }

    #[test]
    fn characteristic_two_has_no_two() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(f2.from_i64(2).is_zero());
        assert_eq!(f2.one() + f2.one(), f2.zero());
    }

    #[test]
    fn parse_formats() {
        let qf = FieldSpec::Rational;
        assert_eq!(qf.parse_scalar("-3/6").unwrap(), q(-1, 2));
        assert_eq!(qf.parse_scalar(" 4 ").unwrap(), q(4, 1));
        assert!(qf.parse_scalar("1/0").is_err());
        assert!(qf.parse_scalar("x").is_err());
        let f5 = FieldSpec::Prime(5);
        assert_eq!(f5.parse_scalar("7").unwrap(), f5.from_i64(2));
        assert!(f5.parse_scalar("1/2").is_err());
    }

    #[test]
    fn kth_roots_over_q() {
        assert_eq!(q(8, 27).kth_roots(3).unwrap(), vec![q(2, 3)]);
        assert!(q(2, 1).kth_roots(2).unwrap().is_empty());
        assert_eq!(q(4, 9).kth_roots(2).unwrap(), vec![q(2, 3), q(-2, 3)]);
        assert_eq!(q(-8, 1).kth_roots(3).unwrap(), vec![q(-2, 1)]);
        assert!(q(-4, 1).kth_roots(2).unwrap().is_empty());
        assert_eq!(q(0, 1).kth_roots(2), Err(Error::ZeroBase));
    }

    #[test]
    fn kth_roots_over_f7_match_enumeration() {
        let f7 = FieldSpec::Prime(7);
        // squares mod 7: 1,4,2,2,4,1 for residues 1..6; 2 = 3^2 = 4^2
        assert_eq!(
            f7.from_i64(2).kth_roots(2).unwrap(),
            vec![f7.from_i64(3), f7.from_i64(4)]
        );
        for c in 1..7 {
            for k in 1..7u32 {
                let c = f7.from_i64(c);
                let roots = c.kth_roots(k).unwrap();
                for l in f7.elements().unwrap().into_iter().skip(1) {
                    assert_eq!(roots.contains(&l), l.pow(k as u64) == c);
                }
            }
        }
    }

    fn rational() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..30).prop_map(|(n, d)| q(n, d))
    }

    fn residue() -> impl Strategy<Value = Scalar> {
        (0i64..13).prop_map(|v| FieldSpec::Prime(13).from_i64(v))
    }

    fn check_axioms(a: &Scalar, b: &Scalar, c: &Scalar) {
        assert_eq!(&(a + b) + c, a + &(b + c));
        assert_eq!(&(a * b) * c, a * &(b * c));
        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        assert_eq!(a + b, b + a);
        assert_eq!(a * b, b * a);
        assert!((a + &-a).is_zero());
        if !a.is_zero() {
            assert!((a * &a.inv().unwrap()).is_one());
        }
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
            check_axioms(&a, &b, &c);
        }

        #[test]
        fn prime_field_axioms(a in residue(), b in residue(), c in residue()) {
            check_axioms(&a, &b, &c);
        }

        #[test]
        fn rational_roots_are_roots(a in rational(), k in 1u32..5) {
            prop_assume!(!a.is_zero());
            let c = a.pow(k as u64);
            let roots = c.kth_roots(k).unwrap();
            prop_assert!(roots.contains(&a));
            for r in roots {
                prop_assert_eq!(r.pow(k as u64), c.clone());
            }
        }
    }
}
