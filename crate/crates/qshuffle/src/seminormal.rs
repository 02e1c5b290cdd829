//! Specht modules realized inside word modules `W^λ` at a rational point `q0`.
//!
//! `W^λ` has the words of content λ as basis, with
//! `w·T_{s_i} = q w` if `w_i = w_{i+1}`, `w s_i` if `w_i < w_{i+1}`, and
//! `q w s_i + (q-1) w` otherwise. Young idempotents are Lagrange
//! interpolation polynomials in the Jucys–Murphy elements, and the seminormal
//! units are `w_t = word(t) p_t`.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{HeckeElement, RightAction};
use crate::linalg::{add_assign_scaled, is_zero_vector, rank_of, solve_in_span, Matrix, Vector};
use crate::qpoly::{qint_at, rational_compact, Rational};
use crate::tableaux::{dominance_leq, enumerate_syt, Partition, SkewShape, StandardTableau};

/// A rational evaluation point at which `H_n(q0)` is semisimple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleQ {
    value: Rational,
}

impl AdmissibleQ {
    pub fn new(value: Rational, n: usize) -> Result<Self> {
        if value.is_zero() {
            return Err(Error::InadmissibleQ("q0 = 0".into()));
        }
        for m in 2..=n as i64 {
            if qint_at(m, &value).is_zero() {
                return Err(Error::InadmissibleQ(format!(
                    "[{m}]_q vanishes at q0 = {value}"
                )));
            }
        }
        Ok(Self { value })
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }
}

/// The possible contents of the cell holding `m` in a standard tableau:
/// `-m < k < m`, without 0 when `m` is 2 or 3.
pub fn content_set(m: usize) -> Vec<i64> {
    let m = m as i64;
    (1 - m..m)
        .filter(|&k| !(k == 0 && (m == 2 || m == 3)))
        .collect()
}

/// The word module `W^λ` at `q0`.
#[derive(Clone, Debug)]
pub struct WordModuleRep {
    lambda: Partition,
    q0: Rational,
    basis: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    next: Vec<Vec<usize>>,
    order: Vec<Vec<Ordering>>,
}

fn words_of_content(lambda: &Partition) -> Vec<Vec<usize>> {
    fn rec(left: &mut Vec<usize>, cur: &mut Vec<usize>, total: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for r in 0..left.len() {
            if left[r] > 0 {
                left[r] -= 1;
                cur.push(r + 1);
                rec(left, cur, total, out);
                cur.pop();
                left[r] += 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut left = lambda.parts().to_vec();
    rec(&mut left, &mut Vec::new(), lambda.size(), &mut out);
    out
}

impl WordModuleRep {
    pub fn new(lambda: &Partition, q0: &Rational) -> Result<Self> {
        let n = lambda.size();
        AdmissibleQ::new(q0.clone(), n)?;
        let basis = words_of_content(lambda);
        let index: HashMap<Vec<usize>, usize> = basis
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        let mut next = Vec::with_capacity(basis.len());
        let mut order = Vec::with_capacity(basis.len());
        for w in &basis {
            let mut nx = Vec::with_capacity(n.saturating_sub(1));
            let mut ord = Vec::with_capacity(n.saturating_sub(1));
            for i in 1..n {
                let mut s = w.clone();
                s.swap(i - 1, i);
                nx.push(index[&s]);
                ord.push(w[i - 1].cmp(&w[i]));
            }
            next.push(nx);
            order.push(ord);
        }
        Ok(Self {
            lambda: lambda.clone(),
            q0: q0.clone(),
            basis,
            index,
            next,
            order,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn index_of(&self, word: &[usize]) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// The basis vector of a word of content λ.
    pub fn word_vector(&self, word: &[usize]) -> Result<Vector> {
        let k = self.index_of(word).ok_or_else(|| {
            Error::ShapeMismatch(format!("{word:?} does not have content {}", self.lambda))
        })?;
        Ok(self.unit(k))
    }
}

/// `W^λ` at `q0` with its three-case generator action.
pub fn word_action(lambda: &Partition, q0: &Rational) -> Result<WordModuleRep> {
    WordModuleRep::new(lambda, q0)
}

impl RightAction for WordModuleRep {
    fn n(&self) -> usize {
        self.lambda.size()
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn q0(&self) -> &Rational {
        &self.q0
    }

    fn act_gen(&self, v: &[Rational], i: usize) -> Vector {
        let mut out = vec![Rational::zero(); v.len()];
        let qm1 = &self.q0 - Rational::one();
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match self.order[k][i - 1] {
                Ordering::Equal => out[k] += c * &self.q0,
                Ordering::Less => out[self.next[k][i - 1]] += c,
                Ordering::Greater => {
                    out[self.next[k][i - 1]] += c * &self.q0;
                    out[k] += c * &qm1;
                }
            }
        }
        out
    }
}

/// Matrix of `J_m(q0)` in any module.
pub fn jm_matrix<R: RightAction>(rep: &R, m: usize) -> Matrix {
    rep.matrix_from(|v| rep.act_jm(v, m))
}

/// Matrix of right multiplication by a Hecke element in any module.
pub fn hecke_to_matrix<R: RightAction>(rep: &R, a: &HeckeElement) -> Result<Matrix> {
    rep.matrix_of(a)
}

/// `v · Π_{d ∈ content_set(m), d ≠ c} (J_m − [d]) / ([c] − [d])`.
pub fn apply_content_projector<R: RightAction>(
    rep: &R,
    v: &[Rational],
    m: usize,
    c: i64,
) -> Result<Vector> {
    lagrange_factors(rep, v, m, c, content_set(m))
}

/// Contents of the cells that can be added to `shape` (parts in row order).
fn addable_contents(shape: &[usize]) -> Vec<i64> {
    (0..=shape.len())
        .filter(|&r| r == 0 || shape[r - 1] > shape.get(r).copied().unwrap_or(0))
        .map(|r| shape.get(r).copied().unwrap_or(0) as i64 - r as i64)
        .collect()
}

// On the image of p_{t|m-1}, J_m only takes the values [c] for addable cells
// c of shape(t|m-1), so the factors for other contents act as the identity.
fn lagrange_factors<R: RightAction>(
    rep: &R,
    v: &[Rational],
    m: usize,
    c: i64,
    others: impl IntoIterator<Item = i64>,
) -> Result<Vector> {
    let mut cur = v.to_vec();
    if is_zero_vector(&cur) {
        return Ok(cur);
    }
    let q0 = rep.q0();
    let qc = qint_at(c, q0);
    for d in others {
        if d == c {
            continue;
        }
        let qd = qint_at(d, q0);
        let denom = &qc - &qd;
        if denom.is_zero() {
            return Err(Error::InadmissibleQ(format!(
                "[{c}]_q = [{d}]_q at q0 = {q0}"
            )));
        }
        let mut next = rep.act_jm(&cur, m);
        add_assign_scaled(&mut next, &cur, &-qd);
        let inv = Rational::one() / denom;
        cur = next.into_iter().map(|x| x * &inv).collect();
        if is_zero_vector(&cur) {
            break;
        }
    }
    Ok(cur)
}

/// `v · p_t` for a straight tableau `t` with at most `n` cells.
pub fn apply_young_idempotent<R: RightAction>(
    rep: &R,
    v: &[Rational],
    t: &StandardTableau,
) -> Result<Vector> {
    if !t.is_straight() || t.n() > rep.n() {
        return Err(Error::ShapeMismatch(format!(
            "cannot apply p_t for t of shape {}",
            t.shape()
        )));
    }
    let mut cur = v.to_vec();
    for m in 1..=t.n() {
        cur = apply_content_projector(rep, &cur, m, t.content(m))?;
    }
    Ok(cur)
}

/// Matrix of `p_t`.
pub fn young_idempotent<R: RightAction>(rep: &R, t: &StandardTableau) -> Result<Matrix> {
    let rows = (0..rep.dim())
        .map(|k| apply_young_idempotent(rep, &rep.unit(k), t))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(rows))
}

/// Matrices of `p_t` for every `t ∈ SYT(n)`, sharing the work of common
/// prefixes `t|_k`. Returned in the order of [`enumerate_syt`] per shape,
/// shapes in the order of [`Partition::all`].
pub fn all_young_idempotents<R: RightAction>(rep: &R) -> Result<Vec<(StandardTableau, Matrix)>> {
    let n = rep.n();
    let dim = rep.dim();
    // Each node stores p_{t|m} = coeffs · basis, with basis the reduced row
    // echelon basis of its image, so deeper levels only push rank-many rows.
    struct Node {
        rows: Vec<Vec<usize>>,
        shape: Vec<usize>,
        coeffs: Vec<Vector>,
        basis: Vec<Vector>,
    }
    let mut level = vec![Node {
        rows: Vec::new(),
        shape: Vec::new(),
        coeffs: (0..dim).map(|k| rep.unit(k)).collect(),
        basis: (0..dim).map(|k| rep.unit(k)).collect(),
    }];
    for m in 1..=n {
        let mut next_level = Vec::new();
        for node in &level {
            let others = addable_contents(&node.shape);
            for r in 0..=node.shape.len() {
                let len = node.shape.get(r).copied().unwrap_or(0);
                if r > 0 && node.shape[r - 1] <= len {
                    continue;
                }
                let content = len as i64 - r as i64;
                let mut shape = node.shape.clone();
                let mut rows = node.rows.clone();
                if r == shape.len() {
                    shape.push(0);
                    rows.push(Vec::new());
                }
                shape[r] += 1;
                rows[r].push(m);
                let image = node
                    .basis
                    .iter()
                    .map(|v| lagrange_factors(rep, v, m, content, others.iter().copied()))
                    .collect::<Result<Vec<_>>>()?;
                let (basis, pivots) = crate::linalg::rref(&image);
                let coeffs = node
                    .coeffs
                    .iter()
                    .map(|c| {
                        pivots
                            .iter()
                            .map(|&p| {
                                c.iter()
                                    .zip(&image)
                                    .filter(|(x, row)| !x.is_zero() && !row[p].is_zero())
                                    .map(|(x, row)| x * &row[p])
                                    .sum()
                            })
                            .collect()
                    })
                    .collect();
                next_level.push(Node {
                    rows,
                    shape,
                    coeffs,
                    basis,
                });
            }
        }
        level = next_level;
    }
    let expand = |node: &Node| -> Matrix {
        let rows = node
            .coeffs
            .iter()
            .map(|c| {
                let mut out = vec![Rational::zero(); dim];
                for (x, b) in c.iter().zip(&node.basis) {
                    if !x.is_zero() {
                        add_assign_scaled(&mut out, b, x);
                    }
                }
                out
            })
            .collect();
        Matrix::from_rows(rows)
    };
    let mut out: Vec<(StandardTableau, Matrix)> = level
        .into_iter()
        .map(|node| {
            (
                StandardTableau::from_rows(node.rows.clone()).unwrap(),
                expand(&node),
            )
        })
        .collect();
    let shapes = Partition::all(n);
    let order: HashMap<StandardTableau, (usize, usize)> = shapes
        .iter()
        .enumerate()
        .flat_map(|(a, lam)| {
            enumerate_syt(&SkewShape::straight(lam.clone()))
                .into_iter()
                .enumerate()
                .map(move |(b, t)| (t, (a, b)))
        })
        .collect();
    out.sort_by_key(|(t, _)| order[t]);
    Ok(out)
}

/// `v · p_ν` for the central idempotent of `H_k(q0)`, `ν ⊢ k ≤ n`, computed as
/// `Σ_{s ∈ SYT(ν)} v p_s` with shared prefixes.
pub fn apply_central_idempotent<R: RightAction>(
    rep: &R,
    v: &[Rational],
    nu: &Partition,
) -> Result<Vector> {
    if nu.size() > rep.n() {
        return Err(Error::ShapeMismatch(format!(
            "{nu} is larger than n = {}",
            rep.n()
        )));
    }
    fn rec<R: RightAction>(
        rep: &R,
        v: &[Rational],
        nu: &Partition,
        memo: &mut HashMap<Partition, Vector>,
    ) -> Result<Vector> {
        if nu.size() == 0 {
            return Ok(v.to_vec());
        }
        if let Some(x) = memo.get(nu) {
            return Ok(x.clone());
        }
        let k = nu.size();
        let mut acc = vec![Rational::zero(); v.len()];
        for r in 1..=nu.num_rows() {
            if nu.row(r) > nu.row(r + 1) {
                let mut parts = nu.parts().to_vec();
                parts[r - 1] -= 1;
                let smaller = Partition::new(parts)?;
                let content = nu.row(r) as i64 - r as i64;
                let base = rec(rep, v, &smaller, memo)?;
                let piece =
                    lagrange_factors(rep, &base, k, content, addable_contents(smaller.parts()))?;
                add_assign_scaled(&mut acc, &piece, &Rational::one());
            }
        }
        memo.insert(nu.clone(), acc.clone());
        Ok(acc)
    }
    rec(rep, v, nu, &mut HashMap::new())
}

/// `v · p_t` for a skew tableau: `p_{shape(t|_{|μ|+1})} ⋯ p_{shape(t|_{|λ|})}`.
pub fn apply_skew_idempotent<R: RightAction>(
    rep: &R,
    v: &[Rational],
    t: &StandardTableau,
) -> Result<Vector> {
    let mut cur = v.to_vec();
    for k in t.first_entry()..=t.n() {
        cur = apply_central_idempotent(rep, &cur, &t.shape_at(k))?;
    }
    Ok(cur)
}

/// `Φ_t : W^μ → W^λ`, appending the rows of the entries of a skew tableau.
#[derive(Clone, Debug)]
pub struct PhiMap {
    suffix: Vec<usize>,
    targets: Vec<usize>,
    target_dim: usize,
}

impl PhiMap {
    pub fn suffix(&self) -> &[usize] {
        &self.suffix
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.target_dim];
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out[self.targets[k]] += c;
            }
        }
        out
    }
}

pub fn phi_map(
    src: &WordModuleRep,
    dst: &WordModuleRep,
    t_skew: &StandardTableau,
) -> Result<PhiMap> {
    if t_skew.inner() != src.lambda() || t_skew.outer() != dst.lambda() {
        return Err(Error::ShapeMismatch(format!(
            "Φ_t for t of shape {} between W^{} and W^{}",
            t_skew.shape(),
            src.lambda(),
            dst.lambda()
        )));
    }
    let suffix = t_skew.word();
    let targets = src
        .basis()
        .iter()
        .map(|w| {
            let mut full = w.clone();
            full.extend_from_slice(&suffix);
            dst.index_of(&full).expect("appended word has content λ")
        })
        .collect();
    Ok(PhiMap {
        suffix,
        targets,
        target_dim: dst.dim(),
    })
}

/// `S^λ ⊂ W^λ` with the seminormal units `w_t` as basis.
#[derive(Clone, Debug)]
pub struct SpechtRep {
    word_rep: WordModuleRep,
    tableaux: Vec<StandardTableau>,
    units: Vec<Vector>,
    gens: Vec<Matrix>,
}

impl SpechtRep {
    pub fn new(lambda: &Partition, q0: &Rational) -> Result<Self> {
        let word_rep = WordModuleRep::new(lambda, q0)?;
        let tableaux = enumerate_syt(&SkewShape::straight(lambda.clone()));
        let units = tableaux
            .iter()
            .map(|t| apply_young_idempotent(&word_rep, &word_rep.word_vector(&t.word())?, t))
            .collect::<Result<Vec<_>>>()?;
        if rank_of(&units) != units.len() {
            return Err(Error::DegenerateBasis(format!(
                "seminormal units of {lambda} are dependent"
            )));
        }
        let mut gens = Vec::new();
        for i in 1..lambda.size() {
            let rows = units
                .iter()
                .map(|u| {
                    let image = word_rep.act_gen(u, i);
                    solve_in_span(&units, &image).ok_or_else(|| {
                        Error::DegenerateBasis(format!(
                            "span of units of {lambda} is not T_{{s_{i}}}-stable"
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            gens.push(Matrix::from_rows(rows));
        }
        Ok(Self {
            word_rep,
            tableaux,
            units,
            gens,
        })
    }

    pub fn lambda(&self) -> &Partition {
        self.word_rep.lambda()
    }

    pub fn word_rep(&self) -> &WordModuleRep {
        &self.word_rep
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    /// `w_t` for each tableau, as vectors in `W^λ`.
    pub fn units(&self) -> &[Vector] {
        &self.units
    }

    /// Generator matrices in the unit basis.
    pub fn gen_matrices(&self) -> &[Matrix] {
        &self.gens
    }

    /// `Σ c_t w_t` in `W^λ`.
    pub fn to_word_module(&self, coords: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.word_rep.dim()];
        for (c, u) in coords.iter().zip(&self.units) {
            add_assign_scaled(&mut out, u, c);
        }
        out
    }

    /// Coordinates of a vector of `W^λ` in the unit basis, if it lies in `S^λ`.
    pub fn coords_of(&self, v: &[Rational]) -> Option<Vector> {
        solve_in_span(&self.units, v)
    }
}

/// The Specht module `S^λ` at `q0` in its seminormal basis.
pub fn seminormal_units(lambda: &Partition, q0: &Rational) -> Result<SpechtRep> {
    SpechtRep::new(lambda, q0)
}

impl RightAction for SpechtRep {
    fn n(&self) -> usize {
        self.word_rep.n()
    }

    fn dim(&self) -> usize {
        self.units.len()
    }

    fn q0(&self) -> &Rational {
        self.word_rep.q0()
    }

    fn act_gen(&self, v: &[Rational], i: usize) -> Vector {
        self.gens[i - 1].left_apply(v)
    }
}

/// Matrix of `T_{s_i}` on `S^λ` in the unit basis from the four-case formula,
/// rows and columns indexed by [`enumerate_syt`].
pub fn dipper_james_matrix(lambda: &Partition, q0: &Rational, i: usize) -> Result<Matrix> {
    let n = lambda.size();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    AdmissibleQ::new(q0.clone(), n)?;
    let tabs = enumerate_syt(&SkewShape::straight(lambda.clone()));
    let pos: HashMap<&StandardTableau, usize> =
        tabs.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let f = tabs.len();
    let mut m = Matrix::zeros(f, f);
    for (a, t) in tabs.iter().enumerate() {
        let (ra, ca) = t.cell_of(i);
        let (rb, cb) = t.cell_of(i + 1);
        if ra == rb {
            m.set(a, a, q0.clone());
            continue;
        }
        if ca == cb {
            m.set(a, a, -Rational::one());
            continue;
        }
        let s = t
            .swap_values(i)
            .expect("i, i+1 in different rows and columns");
        let b = pos[&s];
        let rho = t.content(i) - s.content(i);
        let qr = qint_at(rho, q0);
        m.set(a, a, -Rational::one() / &qr);
        if dominance_leq(&s, t)? {
            m.set(a, b, Rational::one());
        } else {
            let num = q0 * qint_at(rho + 1, q0) * qint_at(rho - 1, q0);
            m.set(a, b, num / (&qr * &qr));
        }
    }
    Ok(m)
}

/// For each `μ ⋖ λ`, the restriction of `S^λ` to `H_{n-1}(q0)` contains the
/// `J_n`-eigenspace of eigenvalue `[content of λ∖μ]`, of dimension `f^μ`.
/// Returns `(μ, eigenspace dimension, f^μ)` triples.
pub fn branching_dimensions(rep: &SpechtRep) -> Vec<(Partition, usize, usize)> {
    let lambda = rep.lambda().clone();
    let n = lambda.size();
    let jn = jm_matrix(rep, n);
    let mut out = Vec::new();
    for r in 1..=lambda.num_rows() {
        if lambda.row(r) <= lambda.row(r + 1) {
            continue;
        }
        let mut parts = lambda.parts().to_vec();
        parts[r - 1] -= 1;
        let mu = Partition::new(parts).unwrap();
        let c = lambda.row(r) as i64 - r as i64;
        let shifted = jn.sub(&Matrix::scalar(rep.dim(), &qint_at(c, rep.q0())));
        let dim = rep.dim() - shifted.rank();
        out.push((mu.clone(), dim, crate::tableaux::count_syt(&mu)));
    }
    out
}

/// Outcome of the seminormal checks for one shape at one `q0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeminormalReport {
    pub lambda: String,
    pub q0: String,
    /// Hecke relations for the generator matrices on the units.
    pub relations: bool,
    /// `Σ_t p_t = 1` and `Σ_t rank p_t = dim W^λ` over all `t ∈ SYT(n)`, which together
    /// force `p_s p_t = δ_{st} p_t`.
    pub idempotents: bool,
    /// `w_t J_m = [c_{t,m}] w_t` for all `t`, `m`.
    pub jucys_murphy: bool,
    /// Generator matrices equal [`dipper_james_matrix`].
    pub dipper_james: bool,
}

impl SeminormalReport {
    pub fn passed(&self) -> bool {
        self.relations && self.idempotents && self.jucys_murphy && self.dipper_james
    }
}

/// Runs the seminormal checks for `λ` at `q0`.
pub fn seminormal_suite(lambda: &Partition, q0: &Rational) -> Result<SeminormalReport> {
    let n = lambda.size();
    let sp = seminormal_units(lambda, q0)?;
    let relations = sp.check_relations().is_ok();
    let jucys_murphy = sp.tableaux().iter().zip(sp.units()).all(|(t, u)| {
        (1..=n).all(|m| {
            let c = qint_at(t.content(m), q0);
            sp.word_rep()
                .act_jm(u, m)
                .iter()
                .zip(u)
                .all(|(a, b)| *a == b * &c)
        })
    });
    let mut dipper_james = true;
    for i in 1..n {
        dipper_james &= sp.gen_matrices()[i - 1] == dipper_james_matrix(lambda, q0, i)?;
    }
    let rep = sp.word_rep();
    let all = all_young_idempotents(rep)?;
    let mut sum = Matrix::zeros(rep.dim(), rep.dim());
    let mut rank = 0;
    for (_, m) in &all {
        sum = sum.add(m);
        rank += m.rank();
    }
    let idempotents = sum == Matrix::identity(rep.dim()) && rank == rep.dim();
    Ok(SeminormalReport {
        lambda: lambda.to_string(),
        q0: rational_compact(q0),
        relations,
        idempotents,
        jucys_murphy,
        dipper_james,
    })
}
