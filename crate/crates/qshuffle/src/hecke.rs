//! The Iwahori–Hecke algebra `H_n(q)` with Laurent polynomial coefficients.
//!
//! Elements are finite sums `Σ c_w(q) T_w`. Multiplication goes one generator
//! at a time along reduced words using
//! `T_w T_{s_i} = T_{ws_i}` when `w(i) < w(i+1)`, and
//! `T_w T_{s_i} = q T_{ws_i} + (q-1) T_w` otherwise.
//!
//! [`RightAction`] abstracts any right module given by generator actions on
//! dense rational vectors; the regular representation at a rational point is
//! [`RegularRep`].

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{add_assign_scaled, Matrix, Vector};
use crate::qpoly::{LaurentPoly, Rational};
use crate::symmetric::{min_coset_reps, young_subgroup, Composition, Permutation, MAX_N};

#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, LaurentPoly>,
}

fn q_minus_one() -> LaurentPoly {
    LaurentPoly::from_terms([(1, Rational::one()), (0, -Rational::one())])
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_N);
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    /// `T_w`.
    pub fn basis(w: Permutation) -> Self {
        Self::monomial(w, LaurentPoly::one())
    }

    pub fn monomial(w: Permutation, c: LaurentPoly) -> Self {
        let mut e = Self::zero(w.n());
        e.add_term(w, &c);
        e
    }

    /// `T_{s_i}`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Ok(Self::basis(Permutation::generator(n, i)?))
    }

    /// `c · 1`.
    pub fn scalar(n: usize, c: LaurentPoly) -> Self {
        Self::monomial(Permutation::identity(n), c)
    }

    /// Product `T_{s_{a_1}} ⋯ T_{s_{a_k}}` of generators (not necessarily reduced).
    pub fn from_gen_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut e = Self::one(n);
        for &i in word {
            e = e.mul_gen(i)?;
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, LaurentPoly> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    fn add_term(&mut self, w: Permutation, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_insert_with(LaurentPoly::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&LaurentPoly::from_int(-1))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (w, d) in &self.terms {
            out.add_term(*w, &(d * c));
        }
        out
    }

    /// Right multiplication by `T_{s_i}`.
    pub fn mul_gen(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        let mut out = Self::zero(self.n);
        let qm1 = q_minus_one();
        for (w, c) in &self.terms {
            let ws = w.swap_positions(i);
            if w.ascends_at(i) {
                out.add_term(ws, c);
            } else {
                out.add_term(ws, &c.shift(1));
                out.add_term(*w, &(c * &qm1));
            }
        }
        Ok(out)
    }

    /// Right multiplication by `T_v`.
    pub fn mul_basis(&self, v: &Permutation) -> Self {
        let mut out = self.clone();
        for i in v.reduced_word() {
            out = out.mul_gen(i).expect("reduced word letters are in range");
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = Self::zero(self.n);
        for (v, d) in &other.terms {
            let prod = self.mul_basis(v);
            for (w, c) in &prod.terms {
                out.add_term(*w, &(c * d));
            }
        }
        Ok(out)
    }

    /// Image under the inclusion `H_n(q) ⊂ H_m(q)`.
    pub fn embed(&self, m: usize) -> Self {
        let mut out = Self::zero(m);
        for (w, c) in &self.terms {
            out.add_term(w.embed(m), c);
        }
        out
    }

    /// The anti-involution `T_w ↦ T_{w⁻¹}`.
    pub fn star(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.inverse(), c);
        }
        out
    }

    /// The automorphism `T_{s_i} ↦ T_{s_{n-i}}`, i.e. conjugation by `w_0`.
    pub fn tau(&self) -> Self {
        let w0 = Permutation::longest(self.n);
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w0.compose(w).compose(&w0), c);
        }
        out
    }

    /// Coefficients evaluated at `q0`, dropping those that vanish there.
    pub fn eval(&self, q0: &Rational) -> Result<Vec<(Permutation, Rational)>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (w, c) in &self.terms {
            let v = c.eval(q0)?;
            if !v.is_zero() {
                out.push((*w, v));
            }
        }
        Ok(out)
    }

    /// Evaluation at `q = 1`, where `H_n(1)` is the group algebra.
    pub fn at_one(&self) -> BTreeMap<Permutation, Rational> {
        self.eval(&Rational::one())
            .expect("q = 1 is nonzero")
            .into_iter()
            .collect()
    }
}

impl std::fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c})*T{w}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for HeckeElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            perm: &'a Permutation,
            coeff: &'a LaurentPoly,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(perm, coeff)| Term { perm, coeff })
            .collect();
        let mut st = s.serialize_struct("HeckeElement", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for HeckeElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            perm: Permutation,
            coeff: LaurentPoly,
        }
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            terms: Vec<Term>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.n > MAX_N {
            return Err(de::Error::custom(format!("n = {} exceeds {MAX_N}", raw.n)));
        }
        let mut e = HeckeElement::zero(raw.n);
        for t in raw.terms {
            if t.perm.n() != raw.n {
                return Err(de::Error::custom("permutation size differs from n"));
            }
            e.add_term(t.perm, &t.coeff);
        }
        Ok(e)
    }
}

/// `B_n(q) = Σ_{i=1}^n T_{s_{n-1}} ⋯ T_{s_i}`, bottom-to-random.
pub fn b2r(n: usize) -> HeckeElement {
    let mut out = HeckeElement::zero(n);
    for i in 1..=n {
        let word: Vec<usize> = (i..n).rev().collect();
        out = out
            .add(&HeckeElement::from_gen_word(n, &word).unwrap())
            .unwrap();
    }
    out
}

/// `B*_n(q) = Σ_{j=1}^n T_{s_j} ⋯ T_{s_{n-1}}`, random-to-bottom.
pub fn r2b(n: usize) -> HeckeElement {
    let mut out = HeckeElement::zero(n);
    for j in 1..=n {
        let word: Vec<usize> = (j..n).collect();
        out = out
            .add(&HeckeElement::from_gen_word(n, &word).unwrap())
            .unwrap();
    }
    out
}

/// `R_n(q) = B*_n(q) B_n(q)`.
pub fn r2r(n: usize) -> HeckeElement {
    r2b(n).mul(&b2r(n)).unwrap()
}

/// `(T_n(q), T*_n(q))`: top-to-random `Σ T_{s_1}⋯T_{s_{i-1}}` and
/// random-to-top `Σ T_{s_{i-1}}⋯T_{s_1}`.
pub fn top_ops(n: usize) -> (HeckeElement, HeckeElement) {
    let mut t = HeckeElement::zero(n);
    let mut t_star = HeckeElement::zero(n);
    for i in 1..=n {
        let up: Vec<usize> = (1..i).collect();
        let down: Vec<usize> = (1..i).rev().collect();
        t = t
            .add(&HeckeElement::from_gen_word(n, &up).unwrap())
            .unwrap();
        t_star = t_star
            .add(&HeckeElement::from_gen_word(n, &down).unwrap())
            .unwrap();
    }
    (t, t_star)
}

/// The transposition `(i, k)`, `i < k`, via `(i,k) = s_{k-1} (i,k-1) s_{k-1}`.
pub fn transposition(n: usize, i: usize, k: usize) -> Permutation {
    assert!(1 <= i && i < k && k <= n);
    if k == i + 1 {
        return Permutation::generator(n, i).unwrap();
    }
    let s = Permutation::generator(n, k - 1).unwrap();
    s.compose(&transposition(n, i, k - 1)).compose(&s)
}

/// `q^k J_k(q) = Σ_{i<k} q^i T_{(i,k)}`.
pub fn jucys_murphy_scaled(n: usize, k: usize) -> Result<HeckeElement> {
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    let mut out = HeckeElement::zero(n);
    for i in 1..k {
        out.add_term(transposition(n, i, k), &LaurentPoly::q_pow(i as i32));
    }
    Ok(out)
}

fn sum_of_basis<I: IntoIterator<Item = Permutation>>(n: usize, perms: I) -> HeckeElement {
    let mut out = HeckeElement::zero(n);
    for w in perms {
        out.add_term(w, &LaurentPoly::one());
    }
    out
}

/// `m_α = Σ_{w ∈ S_α} T_w`.
pub fn m_alpha(alpha: &Composition) -> HeckeElement {
    sum_of_basis(alpha.n(), young_subgroup(alpha))
}

/// `x_α = Σ_{w ∈ X_α} T_w`.
pub fn x_alpha(alpha: &Composition) -> HeckeElement {
    sum_of_basis(alpha.n(), min_coset_reps(alpha))
}

/// `C_j^{(n)} = B_{j+1}(q) ⋯ B_n(q)`, with each `B_k` embedded in `H_n(q)`.
pub fn c_op(j: usize, n: usize) -> Result<HeckeElement> {
    if j > n {
        return Err(Error::SizeMismatch { left: j, right: n });
    }
    let mut out = HeckeElement::one(n);
    for k in j + 1..=n {
        out = out.mul(&b2r(k).embed(n))?;
    }
    Ok(out)
}

/// Composition `(1^j, n-j)`, dropping a trailing zero part.
pub fn ones_then_rest(j: usize, n: usize) -> Composition {
    let mut parts = vec![1; j];
    if n > j {
        parts.push(n - j);
    }
    Composition::new(parts).unwrap()
}

/// Composition `(j, 1^{n-j})`, dropping a leading zero part.
pub fn block_then_ones(j: usize, n: usize) -> Composition {
    let mut parts = Vec::new();
    if j > 0 {
        parts.push(j);
    }
    parts.extend(std::iter::repeat_n(1, n - j));
    Composition::new(parts).unwrap()
}

/// Composition `(j, n-j)`, dropping zero parts.
pub fn two_blocks(j: usize, n: usize) -> Composition {
    let parts: Vec<usize> = [j, n - j].into_iter().filter(|&p| p > 0).collect();
    Composition::new(parts).unwrap()
}

/// `C_j^{(n)} = m_{(1^j,n-j)} x_{(j,n-j)} = x_{(j,1^{n-j})}`.
pub fn c_factorization_check(j: usize, n: usize) -> Result<bool> {
    let c = c_op(j, n)?;
    let lhs = m_alpha(&ones_then_rest(j, n)).mul(&x_alpha(&two_blocks(j, n)))?;
    let rhs = x_alpha(&block_then_ones(j, n));
    Ok(c == lhs && c == rhs)
}

/// `B_n R_n = (q R_{n-1} + [n]_q + q^n J_n) B_n`.
pub fn recursion_check(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::UnsupportedSize(format!(
            "recursion needs n ≥ 2, got {n}"
        )));
    }
    let b = b2r(n);
    let lhs = b.mul(&r2r(n))?;
    let mid = r2r(n - 1)
        .embed(n)
        .scale(&LaurentPoly::q_pow(1))
        .add(&HeckeElement::scalar(n, LaurentPoly::qint(n as i64)))?
        .add(&jucys_murphy_scaled(n, n)?)?;
    Ok(lhs == mid.mul(&b)?)
}

/// `B_n B*_n = B*_{n-1} T_{s_{n-1}} B_{n-1} + [n]_q + q^n J_n`.
pub fn recursion_intermediate_check(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::UnsupportedSize(format!(
            "recursion needs n ≥ 2, got {n}"
        )));
    }
    let lhs = b2r(n).mul(&r2b(n))?;
    let rhs = r2b(n - 1)
        .embed(n)
        .mul_gen(n - 1)?
        .mul(&b2r(n - 1).embed(n))?
        .add(&HeckeElement::scalar(n, LaurentPoly::qint(n as i64)))?
        .add(&jucys_murphy_scaled(n, n)?)?;
    Ok(lhs == rhs)
}

/// `B*_{n-1} T_{s_{n-1}} B_{n-1} B_n = q R_{n-1} B_n`.
pub fn lemma_b_absorption_check(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::UnsupportedSize(format!("needs n ≥ 2, got {n}")));
    }
    let b = b2r(n);
    let lhs = r2b(n - 1)
        .embed(n)
        .mul_gen(n - 1)?
        .mul(&b2r(n - 1).embed(n))?
        .mul(&b)?;
    let rhs = r2r(n - 1).embed(n).scale(&LaurentPoly::q_pow(1)).mul(&b)?;
    Ok(lhs == rhs)
}

/// `Π_{j ∈ [0,n] ∖ {1}} (a − [n−j]_q) = 0` symbolically.
pub fn annihilator_check(a: &HeckeElement) -> Result<bool> {
    let n = a.n();
    let mut acc = HeckeElement::one(n);
    for j in (0..=n).filter(|&j| j != 1) {
        let factor = a.sub(&HeckeElement::scalar(n, LaurentPoly::qint((n - j) as i64)))?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc.is_zero())
}

/// A right `H_n(q0)`-module on `Q^dim`, given by the action of each generator
/// on row vectors. The provided methods derive the action of basis elements,
/// arbitrary Hecke elements and the shuffle operators from it.
pub trait RightAction {
    fn n(&self) -> usize;
    fn dim(&self) -> usize;
    fn q0(&self) -> &Rational;
    /// `v · T_{s_i}`.
    fn act_gen(&self, v: &[Rational], i: usize) -> Vector;

    fn unit(&self, k: usize) -> Vector {
        let mut v = vec![Rational::zero(); self.dim()];
        v[k] = Rational::one();
        v
    }

    fn act_perm(&self, v: &[Rational], w: &Permutation) -> Vector {
        let mut out = v.to_vec();
        for i in w.reduced_word() {
            out = self.act_gen(&out, i);
        }
        out
    }

    fn act_element(&self, v: &[Rational], a: &HeckeElement) -> Result<Vector> {
        if a.n() != self.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: a.n(),
            });
        }
        let mut acc = vec![Rational::zero(); self.dim()];
        for (w, c) in a.eval(self.q0())? {
            add_assign_scaled(&mut acc, &self.act_perm(v, &w), &c);
        }
        Ok(acc)
    }

    /// `v · B_m(q0)` for `m ≤ n`.
    fn act_b(&self, v: &[Rational], m: usize) -> Vector {
        if m == 0 {
            return vec![Rational::zero(); v.len()];
        }
        let mut cur = v.to_vec();
        let mut sum = v.to_vec();
        for k in (1..m).rev() {
            cur = self.act_gen(&cur, k);
            add_assign_scaled(&mut sum, &cur, &Rational::one());
        }
        sum
    }

    /// `v · B*_m(q0)` for `m ≤ n`, by Horner's rule.
    fn act_bstar(&self, v: &[Rational], m: usize) -> Vector {
        if m == 0 {
            return vec![Rational::zero(); v.len()];
        }
        let mut acc = v.to_vec();
        for k in 1..m {
            acc = self.act_gen(&acc, k);
            add_assign_scaled(&mut acc, v, &Rational::one());
        }
        acc
    }

    /// `v · R_m(q0) = v · B*_m · B_m`.
    fn act_r2r(&self, v: &[Rational], m: usize) -> Vector {
        self.act_b(&self.act_bstar(v, m), m)
    }

    /// `v · C_j^{(n)}`.
    fn act_c(&self, v: &[Rational], j: usize) -> Vector {
        let mut cur = v.to_vec();
        for m in j + 1..=self.n() {
            cur = self.act_b(&cur, m);
        }
        cur
    }

    /// `v · J_m(q0)`, via `J_{m+1} = q^{-1}(T_{s_m} J_m T_{s_m} + T_{s_m})`.
    fn act_jm(&self, v: &[Rational], m: usize) -> Vector {
        if m <= 1 {
            return vec![Rational::zero(); self.dim()];
        }
        let t = self.act_gen(v, m - 1);
        let mut inner = self.act_gen(&self.act_jm(&t, m - 1), m - 1);
        add_assign_scaled(&mut inner, &t, &Rational::one());
        let qinv = Rational::one() / self.q0();
        inner.iter().map(|x| x * &qinv).collect()
    }

    /// Matrix whose row `k` is `e_k · f`.
    fn matrix_from<F: Fn(&[Rational]) -> Vector>(&self, f: F) -> Matrix
    where
        Self: Sized,
    {
        Matrix::from_rows((0..self.dim()).map(|k| f(&self.unit(k))).collect())
    }

    fn gen_matrix(&self, i: usize) -> Matrix
    where
        Self: Sized,
    {
        self.matrix_from(|v| self.act_gen(v, i))
    }

    fn matrix_of(&self, a: &HeckeElement) -> Result<Matrix>
    where
        Self: Sized,
    {
        let rows = (0..self.dim())
            .map(|k| self.act_element(&self.unit(k), a))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(rows))
    }

    /// Checks the quadratic, commutation and braid relations on the generator
    /// matrices; returns a description of the first failure.
    fn check_relations(&self) -> std::result::Result<(), String>
    where
        Self: Sized,
    {
        let n = self.n();
        let q = self.q0().clone();
        let id = Matrix::identity(self.dim());
        let gens: Vec<Matrix> = (1..n).map(|i| self.gen_matrix(i)).collect();
        for (a, m) in gens.iter().enumerate() {
            let sq = m.mul(m).unwrap();
            let rhs = m.scale(&(&q - Rational::one())).add(&id.scale(&q));
            if sq != rhs {
                return Err(format!("quadratic relation fails for s_{}", a + 1));
            }
        }
        for a in 0..gens.len() {
            for b in a + 1..gens.len() {
                let ab = gens[a].mul(&gens[b]).unwrap();
                let ba = gens[b].mul(&gens[a]).unwrap();
                if b == a + 1 {
                    if ab.mul(&gens[a]).unwrap() != ba.mul(&gens[b]).unwrap() {
                        return Err(format!("braid relation fails for s_{}, s_{}", a + 1, b + 1));
                    }
                } else if ab != ba {
                    return Err(format!("s_{} and s_{} do not commute", a + 1, b + 1));
                }
            }
        }
        Ok(())
    }
}

/// The right regular representation of `H_n(q0)` on the `T_w` basis, ordered
/// by Lehmer rank.
#[derive(Clone, Debug)]
pub struct RegularRep {
    n: usize,
    q0: Rational,
    /// `next[rank(w)][i-1] = rank(w s_i)`.
    next: Vec<Vec<usize>>,
    ascends: Vec<Vec<bool>>,
}

impl RegularRep {
    pub fn new(n: usize, q0: Rational) -> Result<Self> {
        if q0.is_zero() {
            return Err(Error::ZeroEvaluationPoint);
        }
        let perms = Permutation::all(n);
        let next = perms
            .iter()
            .map(|w| (1..n).map(|i| w.swap_positions(i).rank()).collect())
            .collect();
        let ascends = perms
            .iter()
            .map(|w| (1..n).map(|i| w.ascends_at(i)).collect())
            .collect();
        Ok(Self {
            n,
            q0,
            next,
            ascends,
        })
    }
}

impl RightAction for RegularRep {
    fn n(&self) -> usize {
        self.n
    }

    fn dim(&self) -> usize {
        self.next.len()
    }

    fn q0(&self) -> &Rational {
        &self.q0
    }

    fn act_gen(&self, v: &[Rational], i: usize) -> Vector {
        let mut out = vec![Rational::zero(); v.len()];
        let qm1 = &self.q0 - Rational::one();
        for (r, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = self.next[r][i - 1];
            if self.ascends[r][i - 1] {
                out[s] += c;
            } else {
                out[s] += c * &self.q0;
                out[r] += c * &qm1;
            }
        }
        out
    }
}

/// Coordinates of a Hecke element on the `T_w` basis at `q0`.
pub fn to_vector(a: &HeckeElement, q0: &Rational) -> Result<Vector> {
    let mut v = vec![Rational::zero(); crate::symmetric::factorial(a.n())];
    for (w, c) in a.eval(q0)? {
        v[w.rank()] = c;
    }
    Ok(v)
}

/// The matrix of right multiplication by `a` on `H_n(q0)`:
/// `M[rank(w)][rank(u)]` is the coefficient of `T_u` in `T_w · a`.
pub fn regular_rep_matrix(a: &HeckeElement, q0: &Rational) -> Result<Matrix> {
    RegularRep::new(a.n(), q0.clone())?.matrix_of(a)
}
