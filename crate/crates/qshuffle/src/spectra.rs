//! The spectrum of random-to-random `R_n(q)` and of `B_n(q)`, `B*_n(q)`:
//! closed forms indexed by horizontal strips, brute-force characteristic
//! polynomial oracles, and the explicit eigenbasis of each `S^λ`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::{
    b2r, m_alpha, ones_then_rest, r2b, r2r, regular_rep_matrix, to_vector, HeckeElement,
    RegularRep, RightAction,
};
use crate::linalg::{
    is_zero_vector, poly_from_roots, rank_of, rational_roots, serialize_rational, serialize_vector,
    Matrix, Vector,
};
use crate::qpoly::{qint_at, rational_pow, LaurentPoly, Rational};
use crate::seminormal::{apply_central_idempotent, phi_map, AdmissibleQ, SpechtRep, WordModuleRep};
use crate::symmetric::{binomial, derangement_count, Permutation};
use crate::tableaux::{
    count_syt, desarrangement_count, enumerate_syt, horizontal_strips, Partition, SkewShape,
    StandardTableau,
};

/// One eigenvalue family `𝓔_{λ∖μ}(q)` of `R_n(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub lambda: Partition,
    pub mu: Partition,
    pub eigenvalue: LaurentPoly,
    /// Multiplicity in `S^λ`.
    pub d_mu: usize,
    pub f_lambda: usize,
    /// Multiplicity in `H_n(q)`, `d^μ f^λ`.
    pub multiplicity: usize,
}

impl SpectrumRow {
    /// Contents of the cells of `λ∖μ`, in the row reading order of `𝔱^{λ∖μ}`.
    pub fn strip_contents(&self) -> Vec<i64> {
        let t = strip_tableau(&self.lambda, &self.mu).expect("rows are horizontal strips");
        (t.first_entry()..=t.n()).map(|k| t.content(k)).collect()
    }
}

/// The row-filled tableau `𝔱^{λ∖μ}` of a horizontal strip.
pub fn strip_tableau(lambda: &Partition, mu: &Partition) -> Result<StandardTableau> {
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    if !shape.is_horizontal_strip() {
        return Err(Error::NotAHorizontalStrip {
            outer: lambda.to_string(),
            inner: mu.to_string(),
        });
    }
    Ok(StandardTableau::row_filled(&shape))
}

/// `𝓔_{λ∖μ}(q) = q^n 𝔠_{λ∖μ}(q) + Σ_{k=|μ|+1}^n q^{n-k} [k]_q`.
pub fn eigenvalue_formula(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    let t = strip_tableau(lambda, mu)?;
    let n = lambda.size();
    let mut out = t.shape().q_content().shift(n as i32);
    for k in mu.size() + 1..=n {
        out += &LaurentPoly::qint(k as i64).shift((n - k) as i32);
    }
    Ok(out)
}

/// `Σ_{k=|μ|+1}^n q^{n-k} [𝔠_{𝔱,k} + k]_q` with `𝔱 = 𝔱^{λ∖μ}`; equal to
/// [`eigenvalue_formula`] and visibly in `ℤ≥0[q]`.
pub fn eigenvalue_positive_form(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    let t = strip_tableau(lambda, mu)?;
    let n = lambda.size();
    let mut out = LaurentPoly::zero();
    for k in mu.size() + 1..=n {
        out += &LaurentPoly::qint(t.content(k) + k as i64).shift((n - k) as i32);
    }
    Ok(out)
}

/// One row per horizontal strip `λ∖μ`, `λ ⊢ n`, including rows with `d^μ = 0`.
/// Shapes in [`Partition::all`] order, strips largest `μ` first.
pub fn spectrum_table(n: usize) -> Vec<SpectrumRow> {
    let mut rows = Vec::new();
    for lambda in Partition::all(n) {
        let f_lambda = count_syt(&lambda);
        for mu in horizontal_strips(&lambda) {
            let d_mu = desarrangement_count(&mu);
            rows.push(SpectrumRow {
                eigenvalue: eigenvalue_formula(&lambda, &mu).expect("horizontal strip"),
                lambda: lambda.clone(),
                mu,
                d_mu,
                f_lambda,
                multiplicity: d_mu * f_lambda,
            });
        }
    }
    rows
}

/// Rows grouped by equal eigenvalue, dropping multiplicity zero, in order of
/// first appearance.
pub fn aggregate(rows: &[SpectrumRow]) -> Vec<(LaurentPoly, usize)> {
    let mut out: Vec<(LaurentPoly, usize)> = Vec::new();
    for row in rows.iter().filter(|r| r.multiplicity > 0) {
        match out.iter_mut().find(|(e, _)| *e == row.eigenvalue) {
            Some((_, m)) => *m += row.multiplicity,
            None => out.push((row.eigenvalue.clone(), row.multiplicity)),
        }
    }
    out
}

fn check_table_size(n: usize) -> Result<()> {
    if n > 8 {
        return Err(Error::UnsupportedSize(format!(
            "factored char polys are tabulated for n ≤ 8, got {n}"
        )));
    }
    Ok(())
}

/// `∏ (y − 𝓔_{λ∖μ}(q))^{f^λ d^μ}` as distinct eigenvalue/exponent pairs.
pub fn r2r_charpoly_factored(n: usize) -> Result<Vec<(LaurentPoly, usize)>> {
    check_table_size(n)?;
    Ok(aggregate(&spectrum_table(n)))
}

/// `∏_{j=0}^n (y − [n−j]_q)^{C(n,j) d_j}`, every `j` listed (the `j = 1`
/// exponent is zero).
pub fn b_charpoly_factored(n: usize) -> Result<Vec<(LaurentPoly, usize)>> {
    check_table_size(n)?;
    Ok((0..=n)
        .map(|j| {
            (
                LaurentPoly::qint((n - j) as i64),
                binomial(n, j) * derangement_count(j) as usize,
            )
        })
        .collect())
}

/// Evaluates factored eigenvalues at `q0` and multiplies out the char poly.
pub fn evaluate_factored(factors: &[(LaurentPoly, usize)], q0: &Rational) -> Result<LaurentPoly> {
    let roots = factors
        .iter()
        .map(|(e, m)| Ok((e.eval(q0)?, *m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(poly_from_roots(roots.iter().map(|(r, m)| (r, *m))))
}

/// Eigenvalues of `R_n(q0)` on `H_n(q0)` from the closed form, merged by
/// value, in decreasing order.
pub fn evaluated_spectrum(n: usize, q0: &Rational) -> Result<Vec<(Rational, usize)>> {
    let mut map: BTreeMap<Rational, usize> = BTreeMap::new();
    for (e, m) in r2r_charpoly_factored(n)? {
        *map.entry(e.eval(q0)?).or_default() += m;
    }
    Ok(map.into_iter().rev().collect())
}

/// `[n−2]_q [n+1]_q`, the second largest eigenvalue.
pub fn second_eigenvalue(n: usize) -> LaurentPoly {
    &LaurentPoly::qint(n as i64 - 2) * &LaurentPoly::qint(n as i64 + 1)
}

/// Characteristic polynomial of the regular-representation matrix of `op`.
pub fn bruteforce_charpoly(op: &HeckeElement, q0: &Rational) -> Result<LaurentPoly> {
    AdmissibleQ::new(q0.clone(), op.n())?;
    if op.n() > 5 {
        return Err(Error::UnsupportedSize(format!(
            "brute-force char polys need n ≤ 5, got {}",
            op.n()
        )));
    }
    regular_rep_matrix(op, q0)?.modular_charpoly()
}

/// The three shuffle operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShuffleOp {
    RandomToRandom,
    BottomToRandom,
    RandomToBottom,
}

impl ShuffleOp {
    pub fn element(self, n: usize) -> HeckeElement {
        match self {
            ShuffleOp::RandomToRandom => r2r(n),
            ShuffleOp::BottomToRandom => b2r(n),
            ShuffleOp::RandomToBottom => r2b(n),
        }
    }

    pub fn act<R: RightAction>(self, rep: &R, v: &[Rational]) -> Vector {
        let n = rep.n();
        match self {
            ShuffleOp::RandomToRandom => rep.act_r2r(v, n),
            ShuffleOp::BottomToRandom => rep.act_b(v, n),
            ShuffleOp::RandomToBottom => rep.act_bstar(v, n),
        }
    }

    pub fn matrix<R: RightAction>(self, rep: &R) -> Matrix {
        rep.matrix_from(|v| self.act(rep, v))
    }

    /// The closed-form factorization of this operator's char poly on `H_n(q)`.
    pub fn factored(self, n: usize) -> Result<Vec<(LaurentPoly, usize)>> {
        match self {
            ShuffleOp::RandomToRandom => r2r_charpoly_factored(n),
            _ => b_charpoly_factored(n),
        }
    }
}

/// Char poly of `op` on `S^λ` in the seminormal basis.
pub fn specht_charpoly(op: ShuffleOp, lambda: &Partition, q0: &Rational) -> Result<LaurentPoly> {
    let rep = SpechtRep::new(lambda, q0)?;
    op.matrix(&rep).charpoly()
}

/// `∏_λ charpoly(op|_{S^λ})^{f^λ}`, the char poly on `H_n(q0)` through the
/// Wedderburn decomposition.
pub fn specht_route_charpoly(op: ShuffleOp, n: usize, q0: &Rational) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::one();
    for lambda in Partition::all(n) {
        let p = specht_charpoly(op, &lambda, q0)?;
        out = &out * &p.pow(count_syt(&lambda) as u32);
    }
    Ok(out)
}

/// Eigenvalues of `R_n(q0)` on `S^λ`, extracted from its char poly.
pub fn specht_spectrum(lambda: &Partition, q0: &Rational) -> Result<Vec<(Rational, usize)>> {
    let p = specht_charpoly(ShuffleOp::RandomToRandom, lambda, q0)?;
    rational_roots(&p)?.ok_or_else(|| {
        Error::DegenerateBasis(format!(
            "R on S^{lambda} has a non-rational eigenvalue at q0 = {q0}"
        ))
    })
}

/// `{eval(𝓔_{λ∖μ}, q0) with multiplicity d^μ}` merged by value, decreasing.
pub fn expected_specht_spectrum(
    lambda: &Partition,
    q0: &Rational,
) -> Result<Vec<(Rational, usize)>> {
    let mut map: BTreeMap<Rational, usize> = BTreeMap::new();
    for mu in horizontal_strips(lambda) {
        let d = desarrangement_count(&mu);
        if d > 0 {
            *map.entry(eigenvalue_formula(lambda, &mu)?.eval(q0)?)
                .or_default() += d;
        }
    }
    Ok(map.into_iter().rev().collect())
}

/// Coordinates (in the seminormal basis) of a basis of `ker R_{|λ|}(q0)` on `S^λ`.
fn kernel_coords(rep: &SpechtRep) -> Vec<Vector> {
    ShuffleOp::RandomToRandom.matrix(rep).left_kernel()
}

/// `κ_λ`: a basis of `ker R_{|λ|}(q0)|_{S^λ}`, as vectors of `W^λ`, taken from
/// deterministic fraction-free elimination.
pub fn kernel_basis(lambda: &Partition, q0: &Rational) -> Result<Vec<Vector>> {
    let rep = SpechtRep::new(lambda, q0)?;
    Ok(kernel_coords(&rep)
        .iter()
        .map(|c| rep.to_word_module(c))
        .collect())
}

/// A vector of the eigenbasis `𝔅_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenvectorRecord {
    pub lambda: Partition,
    pub mu: Partition,
    /// Index into `κ_μ`.
    pub source_index: usize,
    /// Coordinates on the word basis of `W^λ`.
    #[serde(serialize_with = "serialize_vector")]
    pub vector: Vector,
    #[serde(serialize_with = "serialize_rational")]
    pub eigenvalue_at_q0: Rational,
}

fn check_positive(q0: &Rational) -> Result<()> {
    if !q0.is_positive() {
        return Err(Error::InadmissibleQ(format!(
            "the eigenbasis construction needs q0 > 0, got {q0}"
        )));
    }
    Ok(())
}

/// `u Φ_𝔱 C_{|μ|}^{(n)} p_λ` in `W^λ`.
fn lift(
    small: &WordModuleRep,
    big: &WordModuleRep,
    t: &StandardTableau,
    u: &[Rational],
) -> Result<Vector> {
    let phi = phi_map(small, big, t)?;
    let x = big.act_c(&phi.apply(u), small.lambda().size());
    apply_central_idempotent(big, &x, big.lambda())
}

/// `𝔅_λ = { u Φ_{𝔱^{λ∖μ}} C_{|μ|}^{(n)} p_λ : λ∖μ a horizontal strip, u ∈ κ_μ }`,
/// each vector checked to be an `R_n(q0)`-eigenvector with eigenvalue
/// `𝓔_{λ∖μ}(q0)` and the whole set checked to be a basis of `S^λ`.
pub fn build_eigenbasis(lambda: &Partition, q0: &Rational) -> Result<Vec<EigenvectorRecord>> {
    check_positive(q0)?;
    let n = lambda.size();
    let big = WordModuleRep::new(lambda, q0)?;
    let mut out = Vec::new();
    for mu in horizontal_strips(lambda) {
        let small = SpechtRep::new(&mu, q0)?;
        let t = strip_tableau(lambda, &mu)?;
        let e = eigenvalue_formula(lambda, &mu)?.eval(q0)?;
        for (k, c) in kernel_coords(&small).iter().enumerate() {
            let u = small.to_word_module(c);
            let y = lift(small.word_rep(), &big, &t, &u)?;
            if is_zero_vector(&y) {
                return Err(Error::DegenerateBasis(format!(
                    "𝔅 vector for {lambda}∖{mu} #{k} vanishes"
                )));
            }
            let image = big.act_r2r(&y, n);
            if image.iter().zip(&y).any(|(a, b)| *a != b * &e) {
                return Err(Error::DegenerateBasis(format!(
                    "𝔅 vector for {lambda}∖{mu} #{k} is not an eigenvector with eigenvalue {e}"
                )));
            }
            out.push(EigenvectorRecord {
                lambda: lambda.clone(),
                mu: mu.clone(),
                source_index: k,
                vector: y,
                eigenvalue_at_q0: e.clone(),
            });
        }
    }
    let vectors: Vec<Vector> = out.iter().map(|r| r.vector.clone()).collect();
    let f = count_syt(lambda);
    if vectors.len() != f || rank_of(&vectors) != f {
        return Err(Error::DegenerateBasis(format!(
            "𝔅_{lambda} has {} vectors of rank {}, expected {f}",
            vectors.len(),
            rank_of(&vectors)
        )));
    }
    Ok(out)
}

/// Whether `u Φ_𝔱 C_{|μ|}^{(n)} p_λ = 0` for every seminormal unit `u` of `S^μ`
/// and every `𝔱 ∈ SYT(λ∖μ)`; expected whenever `λ∖μ` is not a horizontal strip.
pub fn strip_vanishing_check(lambda: &Partition, mu: &Partition, q0: &Rational) -> Result<bool> {
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    let small = SpechtRep::new(mu, q0)?;
    let big = WordModuleRep::new(lambda, q0)?;
    for t in enumerate_syt(&shape) {
        for u in small.units() {
            if !is_zero_vector(&lift(small.word_rep(), &big, &t, u)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `deg 𝓔_{λ∖μ} = n + C_{λ∖μ} − 1`, `C` the largest content in the strip.
pub fn degree_check(lambda: &Partition, mu: &Partition) -> Result<bool> {
    let t = strip_tableau(lambda, mu)?;
    if lambda == mu {
        return Err(Error::InvalidInput(format!("{lambda}∖{mu} is empty")));
    }
    let c = (t.first_entry()..=t.n())
        .map(|k| t.content(k))
        .max()
        .unwrap();
    let e = eigenvalue_formula(lambda, mu)?;
    Ok(e.degree().map(i64::from) == Some(lambda.size() as i64 + c - 1))
}

/// For `𝔱 ∈ SYT(λ∖μ)`, the scalar `α` with `w_{𝔱(𝔰)} C_{|μ|}^{(n)} = α w_{𝔱^{λ∖μ}(𝔰)} C_{|μ|}^{(n)}`
/// for every `𝔰 ∈ SYT(μ)`, or `None` if no single `α` works. `λ∖μ` must be a
/// horizontal strip. Returns zero when both sides vanish for every `𝔰`.
pub fn straightening_scalar(t: &StandardTableau, q0: &Rational) -> Result<Option<Rational>> {
    let lambda = t.outer().clone();
    let mu = t.inner().clone();
    let top = strip_tableau(&lambda, &mu)?;
    let big = SpechtRep::new(&lambda, q0)?;
    let position = |x: &StandardTableau| big.tableaux().iter().position(|y| y == x).unwrap();
    let j = mu.size();
    let mut alpha: Option<Rational> = None;
    for s in enumerate_syt(&SkewShape::straight(mu.clone())) {
        let a = big
            .word_rep()
            .act_c(&big.units()[position(&StandardTableau::extend(&s, t)?)], j);
        let b = big.word_rep().act_c(
            &big.units()[position(&StandardTableau::extend(&s, &top)?)],
            j,
        );
        if is_zero_vector(&b) {
            if !is_zero_vector(&a) {
                return Ok(None);
            }
            continue;
        }
        let Some(c) = crate::linalg::proportionality(&a, &b) else {
            return Ok(None);
        };
        match &alpha {
            Some(prev) if *prev != c => return Ok(None),
            _ => alpha = Some(c),
        }
    }
    Ok(Some(alpha.unwrap_or_else(Rational::zero)))
}

/// The vectors `m_{(1^j, n−j)} u` on the `T_w` basis of `H_n(q0)`, `u` running
/// over a basis of the right kernel of `B*_j(q0)` in `H_j(q0)`.
pub fn b_star_kernel_lifts(j: usize, n: usize, q0: &Rational) -> Result<Vec<Vector>> {
    if j > n {
        return Err(Error::IndexOutOfRange { index: j, n });
    }
    AdmissibleQ::new(q0.clone(), n)?;
    let kernel: Vec<(Vec<Permutation>, Vector)> = if j == 0 {
        vec![(vec![Permutation::identity(1)], vec![Rational::one()])]
    } else {
        let perms = Permutation::all(j);
        regular_rep_matrix(&r2b(j), q0)?
            .left_kernel()
            .into_iter()
            .map(|u| (perms.clone(), u))
            .collect()
    };
    let reg = RegularRep::new(n, q0.clone())?;
    let m = to_vector(&m_alpha(&ones_then_rest(j, n)), q0)?;
    Ok(kernel
        .into_iter()
        .map(|(perms, u)| {
            let mut acc = vec![Rational::zero(); reg.dim()];
            for (w, c) in perms.iter().zip(&u) {
                if !c.is_zero() {
                    crate::linalg::add_assign_scaled(&mut acc, &reg.act_perm(&m, &w.embed(n)), c);
                }
            }
            acc
        })
        .collect())
}

/// Every lift from [`b_star_kernel_lifts`] is a nonzero `B*_n(q0)`-eigenvector
/// with eigenvalue `[n−j]_{q0}`.
pub fn b_star_eigenvector_check(j: usize, n: usize, q0: &Rational) -> Result<bool> {
    let reg = RegularRep::new(n, q0.clone())?;
    let e = qint_at((n - j) as i64, q0);
    Ok(b_star_kernel_lifts(j, n, q0)?.iter().all(|v| {
        !is_zero_vector(v) && reg.act_bstar(v, n).iter().zip(v).all(|(a, b)| *a == b * &e)
    }))
}

/// One step of the recursive construction: for each `λ' ⋖ λ` and each vector
/// `u'` of `𝔅_{λ'}` with eigenvalue `𝓔`, `u' Φ_{λ∖λ'} B_n p_λ` is zero or an
/// `R_n(q0)`-eigenvector with eigenvalue `q0 𝓔 + [n] + q0^n 𝔠_{λ∖λ'}(q0)`.
/// Returns the number of nonzero vectors produced, or `None` on failure.
pub fn recursive_step_check(lambda: &Partition, q0: &Rational) -> Result<Option<usize>> {
    let n = lambda.size();
    let big = WordModuleRep::new(lambda, q0)?;
    let mut nonzero = 0;
    for sub in lambda.remove_corners() {
        let small = WordModuleRep::new(&sub, q0)?;
        let shape = SkewShape::new(lambda.clone(), sub.clone())?;
        let t = StandardTableau::row_filled(&shape);
        let phi = phi_map(&small, &big, &t)?;
        let shift = rational_pow(q0, n as i32) * shape.q_content().eval(q0)?;
        for rec in build_eigenbasis(&sub, q0)? {
            let x = big.act_b(&phi.apply(&rec.vector), n);
            let u = apply_central_idempotent(&big, &x, lambda)?;
            if is_zero_vector(&u) {
                continue;
            }
            let e = q0 * &rec.eigenvalue_at_q0 + qint_at(n as i64, q0) + &shift;
            if big.act_r2r(&u, n).iter().zip(&u).any(|(a, b)| *a != b * &e) {
                return Ok(None);
            }
            nonzero += 1;
        }
    }
    Ok(Some(nonzero))
}

/// Geometric multiplicity equals algebraic multiplicity for every eigenvalue of
/// `R_n(q0)` on `H_n(q0)`.
pub fn diagonalizable_check(n: usize, q0: &Rational) -> Result<bool> {
    let m = regular_rep_matrix(&r2r(n), q0)?;
    let dim = m.rows();
    for (e, mult) in evaluated_spectrum(n, q0)? {
        let shifted = m.sub(&Matrix::scalar(dim, &e));
        if dim - shifted.rank() != mult {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `n!` as a sanity total for multiplicity tables.
pub fn total_multiplicity(rows: &[SpectrumRow]) -> usize {
    rows.iter().map(|r| r.multiplicity).sum()
}

/// `d_n = Σ_λ f^λ d^λ`.
pub fn kernel_dimension_formula(n: usize) -> usize {
    Partition::all(n)
        .iter()
        .map(|l| count_syt(l) * desarrangement_count(l))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{int, rat};
    use crate::symmetric::factorial;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn qi(k: i64) -> LaurentPoly {
        LaurentPoly::qint(k)
    }

    #[test]
    fn formula_examples() {
        for n in 2..=7 {
            let top = eigenvalue_formula(&p(&[n]), &Partition::empty()).unwrap();
            assert_eq!(top, &qi(n as i64) * &qi(n as i64));
            if n >= 3 {
                let second = eigenvalue_formula(&p(&[n - 1, 1]), &p(&[1, 1])).unwrap();
                assert_eq!(second, second_eigenvalue(n));
            }
            let ones = vec![1; n];
            let e = eigenvalue_formula(&p(&ones), &p(&ones[1..])).unwrap();
            assert_eq!(e, LaurentPoly::one());
        }
        for lam in Partition::all(5) {
            assert!(eigenvalue_formula(&lam, &lam).unwrap().is_zero());
        }
        let e = eigenvalue_formula(&p(&[2, 1, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(e, &qi(5) + &LaurentPoly::q_pow(1));
        assert_eq!(
            eigenvalue_formula(&p(&[2, 1]), &p(&[1, 1])).unwrap(),
            &qi(1) * &qi(4)
        );
        assert!(matches!(
            eigenvalue_formula(&p(&[2, 2]), &p(&[1, 1])),
            Err(Error::NotAHorizontalStrip { .. })
        ));
        assert!(eigenvalue_formula(&p(&[2]), &p(&[1, 1])).is_err());
    }

    #[test]
    fn positivity_and_degree_up_to_eight() {
        for n in 1..=8 {
            let rows = spectrum_table(n);
            assert_eq!(total_multiplicity(&rows), factorial(n));
            for row in &rows {
                let e = &row.eigenvalue;
                assert_eq!(*e, eigenvalue_positive_form(&row.lambda, &row.mu).unwrap());
                assert!(e.is_nonneg_integer_poly(), "{e}");
                if row.lambda != row.mu {
                    assert!(degree_check(&row.lambda, &row.mu).unwrap());
                }
            }
        }
        assert!(degree_check(&p(&[3]), &p(&[3])).is_err());
    }

    #[test]
    fn table_examples() {
        let all_two = spectrum_table(2);
        assert_eq!(all_two.len(), 5);
        let two: Vec<&SpectrumRow> = all_two.iter().filter(|r| r.d_mu > 0).collect();
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].eigenvalue, &qi(2) * &qi(2));
        assert_eq!(
            (two[0].d_mu, two[0].f_lambda, two[0].multiplicity),
            (1, 1, 1)
        );
        assert_eq!(two[1].mu, p(&[1, 1]));
        assert!(two[1].eigenvalue.is_zero());
        let three = spectrum_table(3);
        let row = three
            .iter()
            .find(|r| r.lambda == p(&[2, 1]) && r.mu == p(&[1, 1]))
            .unwrap();
        assert_eq!(row.eigenvalue, &qi(1) * &qi(4));
        assert_eq!(row.multiplicity, 2);
        let five = spectrum_table(5);
        let row = five
            .iter()
            .find(|r| r.lambda == p(&[3, 2]) && r.mu == p(&[3, 2]))
            .unwrap();
        assert!(row.eigenvalue.is_zero());
        assert_eq!((row.d_mu, row.multiplicity), (2, 10));
        assert_eq!(five.iter().filter(|r| r.d_mu > 0).count(), 22);
        assert_eq!(row.strip_contents(), Vec::<i64>::new());
        let r = five
            .iter()
            .find(|r| r.lambda == p(&[3, 1, 1]) && r.mu == p(&[1, 1]))
            .unwrap();
        assert_eq!(r.strip_contents(), vec![1, 2, -2]);
    }

    #[test]
    fn factored_char_polys() {
        let two = r2r_charpoly_factored(2).unwrap();
        assert_eq!(two, vec![(&qi(2) * &qi(2), 1), (LaurentPoly::zero(), 1)]);
        let three: Vec<usize> = r2r_charpoly_factored(3)
            .unwrap()
            .iter()
            .map(|x| x.1)
            .collect();
        assert_eq!(three, vec![1, 2, 2, 1]);
        for n in 1..=8 {
            let f = r2r_charpoly_factored(n).unwrap();
            assert_eq!(f.iter().map(|x| x.1).sum::<usize>(), factorial(n));
            let zero = f.iter().find(|x| x.0.is_zero()).map_or(0, |x| x.1);
            assert_eq!(zero, derangement_count(n) as usize);
            assert_eq!(zero, kernel_dimension_formula(n));
        }
        assert_eq!(kernel_dimension_formula(5), 44);
        assert!(r2r_charpoly_factored(9).is_err());
        let b2 = b_charpoly_factored(2).unwrap();
        assert_eq!(b2, vec![(qi(2), 1), (qi(1), 0), (qi(0), 1)]);
        for n in 1..=6 {
            let b = b_charpoly_factored(n).unwrap();
            assert_eq!(b.iter().map(|x| x.1).sum::<usize>(), factorial(n));
            let support: Vec<LaurentPoly> =
                b.iter().filter(|x| x.1 > 0).map(|x| x.0.clone()).collect();
            let mut expected: Vec<LaurentPoly> = (0..=n as i64 - 2).map(qi).collect();
            expected.push(qi(n as i64));
            expected.reverse();
            assert_eq!(support, expected);
        }
    }

    #[test]
    fn brute_force_matches_closed_form() {
        for n in 1..=4 {
            let id = bruteforce_charpoly(&HeckeElement::one(n), &int(2)).unwrap();
            assert_eq!(id, poly_from_roots([(&int(1), factorial(n))]));
        }
        let q0 = int(2);
        let r3 = bruteforce_charpoly(&r2r(3), &q0).unwrap();
        assert_eq!(
            r3,
            evaluate_factored(&r2r_charpoly_factored(3).unwrap(), &q0).unwrap()
        );
        let q0 = int(3);
        let b4 = bruteforce_charpoly(&r2b(4), &q0).unwrap();
        assert_eq!(
            b4,
            evaluate_factored(&b_charpoly_factored(4).unwrap(), &q0).unwrap()
        );
        assert!(bruteforce_charpoly(&r2r(2), &int(-1)).is_err());
    }

    #[test]
    fn specht_spectra() {
        let q0 = int(2);
        for n in 1..=4 {
            let top = specht_spectrum(&p(&[n]), &q0).unwrap();
            let v = qint_at(n as i64, &q0);
            assert_eq!(top, vec![(&v * &v, 1)]);
        }
        assert_eq!(
            specht_spectrum(&p(&[1, 1, 1]), &q0).unwrap(),
            vec![(int(1), 1)]
        );
        assert_eq!(
            specht_spectrum(&p(&[2, 1]), &q0).unwrap(),
            vec![(int(15), 1), (int(0), 1)]
        );
        for q0 in [int(2), rat(1, 2)] {
            for n in 1..=4 {
                for lam in Partition::all(n) {
                    assert_eq!(
                        specht_spectrum(&lam, &q0).unwrap(),
                        expected_specht_spectrum(&lam, &q0).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn specht_route_agrees_with_regular_representation() {
        let q0 = rat(1, 2);
        for op in [
            ShuffleOp::RandomToRandom,
            ShuffleOp::BottomToRandom,
            ShuffleOp::RandomToBottom,
        ] {
            for n in 1..=3 {
                let direct = bruteforce_charpoly(&op.element(n), &q0).unwrap();
                assert_eq!(direct, specht_route_charpoly(op, n, &q0).unwrap());
                assert_eq!(
                    direct,
                    evaluate_factored(&op.factored(n).unwrap(), &q0).unwrap()
                );
            }
        }
    }

    #[test]
    fn kernel_bases() {
        let q0 = int(2);
        assert!(kernel_basis(&p(&[3]), &q0).unwrap().is_empty());
        let k = kernel_basis(&p(&[1, 1]), &q0).unwrap();
        assert_eq!(k.len(), 1);
        assert!(crate::linalg::proportionality(&k[0], &[q0.clone(), int(-1)]).is_some());
        assert_eq!(kernel_basis(&p(&[3, 2]), &q0).unwrap().len(), 2);
        assert_eq!(
            kernel_basis(&Partition::empty(), &q0).unwrap(),
            vec![vec![int(1)]]
        );
        for n in 1..=4 {
            let mut total = 0;
            for lam in Partition::all(n) {
                let rep = SpechtRep::new(&lam, &q0).unwrap();
                let kr = ShuffleOp::RandomToRandom.matrix(&rep).left_kernel();
                let kb = ShuffleOp::RandomToBottom.matrix(&rep).left_kernel();
                assert_eq!(kr.len(), desarrangement_count(&lam));
                assert_eq!(kr.len(), kb.len());
                let mut both = kr.clone();
                both.extend(kb);
                assert_eq!(rank_of(&both), kr.len());
                total += count_syt(&lam) * kr.len();
            }
            assert_eq!(total, derangement_count(n) as usize);
        }
    }

    #[test]
    fn eigenbases() {
        for q0 in [int(2), int(3)] {
            for n in 1..=4 {
                for lam in Partition::all(n) {
                    let basis = build_eigenbasis(&lam, &q0).unwrap();
                    assert_eq!(basis.len(), count_syt(&lam));
                }
            }
            let top = build_eigenbasis(&p(&[4]), &q0).unwrap();
            let v = qint_at(4, &q0);
            assert_eq!(top[0].eigenvalue_at_q0, &v * &v);
        }
        let q0 = int(2);
        let basis = build_eigenbasis(&p(&[2, 1, 1]), &q0).unwrap();
        let from_pair: Vec<_> = basis.iter().filter(|r| r.mu == p(&[1, 1])).collect();
        assert_eq!(from_pair.len(), 1);
        let expected = (&qi(5) + &LaurentPoly::q_pow(1)).eval(&q0).unwrap();
        assert_eq!(from_pair[0].eigenvalue_at_q0, expected);
        assert!(build_eigenbasis(&p(&[2, 1]), &int(-2)).is_err());
    }

    #[test]
    fn non_strips_vanish() {
        let q0 = int(2);
        assert!(strip_vanishing_check(&p(&[2, 2]), &p(&[1, 1]), &q0).unwrap());
        assert!(strip_vanishing_check(&p(&[2, 2, 1]), &p(&[1, 1, 1]), &q0).unwrap());
        assert!(!strip_vanishing_check(&p(&[2, 1]), &p(&[1, 1]), &q0).unwrap());
        assert!(!strip_vanishing_check(&p(&[3]), &Partition::empty(), &q0).unwrap());
        for n in 1..=4 {
            for lam in Partition::all(n) {
                for j in 0..n {
                    for mu in Partition::all(j) {
                        let Ok(shape) = SkewShape::new(lam.clone(), mu.clone()) else {
                            continue;
                        };
                        if !shape.is_horizontal_strip() {
                            assert!(strip_vanishing_check(&lam, &mu, &q0).unwrap(), "{lam}∖{mu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn straightening_up_to_three() {
        let q0 = int(2);
        for n in 1..=3 {
            for lam in Partition::all(n) {
                for mu in horizontal_strips(&lam) {
                    for t in enumerate_syt(&SkewShape::new(lam.clone(), mu.clone()).unwrap()) {
                        assert!(straightening_scalar(&t, &q0).unwrap().is_some(), "{t:?}");
                    }
                }
            }
        }
        let top = strip_tableau(&p(&[2, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(straightening_scalar(&top, &q0).unwrap(), Some(int(1)));
    }

    #[test]
    fn b_star_eigenvectors_from_kernels() {
        for q0 in [int(2), rat(1, 2)] {
            for n in 1..=4 {
                let mut total = 0;
                for j in 0..=n {
                    assert!(b_star_eigenvector_check(j, n, &q0).unwrap(), "j={j} n={n}");
                    let lifts = b_star_kernel_lifts(j, n, &q0).unwrap();
                    assert_eq!(lifts.len(), derangement_count(j) as usize);
                    total += lifts.len() * binomial(n, j);
                }
                assert_eq!(total, factorial(n));
            }
        }
    }

    #[test]
    fn recursive_step() {
        for n in 2..=4 {
            for lam in Partition::all(n) {
                assert!(
                    recursive_step_check(&lam, &int(2)).unwrap().is_some(),
                    "{lam}"
                );
            }
        }
    }

    #[test]
    fn diagonalizable_and_second_eigenvalue() {
        for q0 in [int(2), int(3)] {
            for n in 1..=3 {
                assert!(diagonalizable_check(n, &q0).unwrap());
            }
            for n in 3..=5 {
                let spec = evaluated_spectrum(n, &q0).unwrap();
                assert_eq!(spec[1], (second_eigenvalue(n).eval(&q0).unwrap(), n - 1));
            }
            for n in 3..=4 {
                let roots = rational_roots(&bruteforce_charpoly(&r2r(n), &q0).unwrap())
                    .unwrap()
                    .unwrap();
                assert_eq!(roots, evaluated_spectrum(n, &q0).unwrap());
            }
        }
    }

    #[test]
    fn row_json_roundtrip() {
        let rows = spectrum_table(3);
        let s = serde_json::to_string(&rows).unwrap();
        let back: Vec<SpectrumRow> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, rows);
    }
}
