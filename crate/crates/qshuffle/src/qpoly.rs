//! Laurent polynomials in `q` with exact rational coefficients.
//!
//! Values are kept in canonical form: no stored coefficient is zero, so
//! structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

/// Builds the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `v` as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Formats a rational as `"num/den"`, always including the denominator.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Formats a rational compactly: `"3"`, `"-1/2"`.
pub fn rational_compact(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"7"`, `"-3/4"` or `"7/5"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// `q0^k` for any integer `k`; `q0` must be nonzero when `k < 0`.
pub fn rational_pow(q0: &Rational, k: i32) -> Rational {
    if k >= 0 {
        num_traits::pow(q0.clone(), k as usize)
    } else {
        num_traits::pow(q0.recip(), (-k) as usize)
    }
}

/// `[m]_{q0}` evaluated directly.
pub fn qint_at(m: i64, q0: &Rational) -> Rational {
    let mut acc = Rational::zero();
    if m > 0 {
        for k in 0..m {
            acc += rational_pow(q0, k as i32);
        }
    } else if m < 0 {
        for k in m..0 {
            acc -= rational_pow(q0, k as i32);
        }
    }
    acc
}

/// A Laurent polynomial `Σ c_k q^k` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(int(c))
    }

    /// `c q^k`.
    pub fn monomial(c: Rational, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Self::monomial(Rational::one(), k)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, &c);
        }
        p
    }

    /// The q-integer `[m]_q`.
    pub fn qint(m: i64) -> Self {
        let m = m as i32;
        if m > 0 {
            Self::from_terms((0..m).map(|k| (k, Rational::one())))
        } else if m < 0 {
            Self::from_terms((m..0).map(|k| (k, -Rational::one())))
        } else {
            Self::zero()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Highest exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent, `None` for the zero polynomial.
    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, k: i32) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, k: i32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&k) {
            Some(e) => {
                *e += c;
                e.is_zero()
            }
            None => {
                self.terms.insert(k, c.clone());
                false
            }
        };
        if remove {
            self.terms.remove(&k);
        }
    }

    /// Adds `c · q^shift · other` in place.
    pub fn add_scaled(&mut self, other: &Self, c: &Rational, shift: i32) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k + shift, &(v * c));
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at `q0`.
    pub fn eval(&self, q0: &Rational) -> Result<Rational> {
        if q0.is_zero() {
            if self.min_exponent().is_some_and(|k| k < 0) {
                return Err(Error::ZeroEvaluationPoint);
            }
            return Ok(self.coeff(0));
        }
        let mut acc = Rational::zero();
        for (k, c) in &self.terms {
            acc += c * rational_pow(q0, *k);
        }
        Ok(acc)
    }

    /// True when every coefficient is a nonnegative integer and no exponent is negative.
    pub fn is_nonneg_integer_poly(&self) -> bool {
        self.terms
            .iter()
            .all(|(k, c)| *k >= 0 && c.is_integer() && !c.is_negative())
    }

    /// Renders in descending powers using `var` as the variable name.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let power = match *k {
                0 => String::new(),
                1 => var.to_string(),
                k => format!("{var}^{k}"),
            };
            if power.is_empty() {
                out.push_str(&rational_compact(&mag));
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&rational_compact(&mag));
                out.push('*');
                out.push_str(&power);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl From<i64> for LaurentPoly {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<Rational> for LaurentPoly {
    fn from(v: Rational) -> Self {
        Self::constant(v)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, &-c);
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        Self {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -(self.clone())
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k, c) in &self.terms {
            out.add_scaled(rhs, c, *k);
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<(i32, String)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, rational_to_string(c)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for (k, c) in raw.terms {
            terms.push((k, parse_rational(&c).map_err(de::Error::custom)?));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(k, c)| (k, int(c))))
    }

    #[test]
    fn qint_cases() {
        assert_eq!(LaurentPoly::qint(3), poly(&[(0, 1), (1, 1), (2, 1)]));
        assert!(LaurentPoly::qint(0).is_zero());
        assert_eq!(LaurentPoly::qint(-2), poly(&[(-1, -1), (-2, -1)]));
        assert_eq!(LaurentPoly::qint(1), LaurentPoly::one());
    }

    #[test]
    fn products() {
        let q2 = LaurentPoly::qint(2);
        assert_eq!(&q2 * &q2, poly(&[(0, 1), (1, 2), (2, 1)]));
        assert_eq!(
            &LaurentPoly::qint(1) * &LaurentPoly::qint(4),
            poly(&[(0, 1), (1, 1), (2, 1), (3, 1)])
        );
        assert!((&LaurentPoly::qint(5) * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(LaurentPoly::qint(3).eval(&int(1)).unwrap(), int(3));
        assert_eq!(LaurentPoly::qint(-2).eval(&int(2)).unwrap(), rat(-3, 4));
        assert_eq!(LaurentPoly::qint(2).pow(2).eval(&int(3)).unwrap(), int(16));
        assert_eq!(
            LaurentPoly::qint(-1).eval(&int(0)),
            Err(Error::ZeroEvaluationPoint)
        );
        assert_eq!(LaurentPoly::qint(3).eval(&int(0)).unwrap(), int(1));
    }

    #[test]
    fn string_forms() {
        assert_eq!(
            poly(&[(5, 1), (3, 1), (1, 2), (0, 1)]).to_string(),
            "q^5 + q^3 + 2*q + 1"
        );
        assert_eq!(LaurentPoly::qint(-2).to_string(), "-q^-1 - q^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::constant(rat(-1, 2)).to_string(), "-1/2");
        assert_eq!(LaurentPoly::monomial(rat(3, 2), 2).to_string(), "3/2*q^2");
    }

    #[test]
    fn json_roundtrip() {
        let p = LaurentPoly::from_terms([(2, rat(1, 3)), (-1, int(-2))]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"terms":[[-1,"-2/1"],[2,"1/3"]]}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("7/5").unwrap(), rat(7, 5));
        assert_eq!(parse_rational(" -3 ").unwrap(), int(-3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn qint_addition_rule() {
        for m in -8..=8i64 {
            for n in -8..=8i64 {
                let lhs = LaurentPoly::qint(m + n);
                let rhs = &LaurentPoly::qint(m) + &LaurentPoly::qint(n).shift(m as i32);
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn qint_at_matches_eval() {
        for m in -6..=6 {
            for q0 in [int(2), rat(1, 2), rat(7, 5), int(-3)] {
                assert_eq!(qint_at(m, &q0), LaurentPoly::qint(m).eval(&q0).unwrap());
            }
        }
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i32..5, -5i64..6, 1i64..4), 0..5)
            .prop_map(|v| LaurentPoly::from_terms(v.into_iter().map(|(k, n, d)| (k, rat(n, d)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn canonical_form(a in arb_poly(), b in arb_poly()) {
            let s = &a + &b;
            prop_assert!(s.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn eval_is_homomorphism(a in arb_poly(), b in arb_poly(), n in 1i64..6, d in 1i64..6) {
            let q0 = rat(n, d);
            prop_assert_eq!((&a * &b).eval(&q0).unwrap(), a.eval(&q0).unwrap() * b.eval(&q0).unwrap());
            prop_assert_eq!((&a + &b).eval(&q0).unwrap(), a.eval(&q0).unwrap() + b.eval(&q0).unwrap());
        }
    }
}
