//! Complete flags of `F_p^n`, the right Hecke action on their span at `q = p`,
//! and Brown's random-to-top operator `x^(q)`.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{top_ops, HeckeElement};
use crate::symmetric::{binomial, derangement_count};

/// Largest number of flags accepted by [`enumerate_flags`]; `(n, p) = (4, 3)` has 2080.
pub const MAX_FLAGS: u64 = 2080;

/// A subspace of `F_p^n`, stored as the nonzero rows of its reduced row echelon form.
pub type Subspace = Vec<Vec<u32>>;

/// `F_1 ⊂ F_2 ⊂ ⋯ ⊂ F_n`, with `F_i` at index `i - 1`.
pub type Flag = Vec<Subspace>;

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut acc, mut b, mut e) = (1u64, a as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Reduced row echelon form over `F_p`, zero rows dropped.
pub fn rref_mod_p(rows: &[Vec<u32>], p: u32) -> Subspace {
    let mut m: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x % p).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// All vectors of the span of `basis` (the zero vector included).
fn span_vectors(basis: &[Vec<u32>], n: usize, p: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; n]];
    for b in basis {
        let mut next = Vec::with_capacity(out.len() * p as usize);
        for v in &out {
            for c in 0..p {
                next.push(v.iter().zip(b).map(|(x, y)| (x + c * y) % p).collect());
            }
        }
        out = next;
    }
    out
}

fn join(a: &[Vec<u32>], b: &[Vec<u32>], p: u32) -> Subspace {
    let rows: Vec<Vec<u32>> = a.iter().chain(b).cloned().collect();
    rref_mod_p(&rows, p)
}

fn contains(space: &[Vec<u32>], v: &[u32], p: u32) -> bool {
    let mut rows = space.to_vec();
    rows.push(v.to_vec());
    rref_mod_p(&rows, p).len() == space.len()
}

/// Lines inside `big` and not inside `small`.
fn lines_between(small: &[Vec<u32>], big: &[Vec<u32>], n: usize, p: u32) -> Vec<Subspace> {
    let lines: BTreeSet<Subspace> = span_vectors(big, n, p)
        .into_iter()
        .filter(|v| !contains(small, v, p))
        .map(|v| rref_mod_p(&[v], p))
        .collect();
    lines.into_iter().collect()
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// The complete flags of `F_p^n` in lexicographic order of their concatenated echelon forms.
#[derive(Clone, Debug)]
pub struct FlagSpace {
    n: usize,
    p: u32,
    flags: Vec<Flag>,
    index: HashMap<Flag, usize>,
}

impl FlagSpace {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn index_of(&self, flag: &Flag) -> Option<usize> {
        self.index.get(flag).copied()
    }

    /// The standard flag `⟨e_1⟩ ⊂ ⟨e_1, e_2⟩ ⊂ ⋯`.
    pub fn standard_flag(&self) -> Flag {
        (1..=self.n)
            .map(|i| {
                (0..i)
                    .map(|r| (0..self.n).map(|c| u32::from(r == c)).collect())
                    .collect()
            })
            .collect()
    }

    /// The flag `g·F` for an invertible `g` acting on column vectors.
    pub fn act_gl(&self, g: &[Vec<u32>], flag: &Flag) -> Flag {
        let p = self.p;
        flag.iter()
            .map(|space| {
                let images: Vec<Vec<u32>> = space
                    .iter()
                    .map(|v| {
                        (0..self.n)
                            .map(|r| g[r].iter().zip(v).map(|(a, b)| a * b).sum::<u32>() % p)
                            .collect()
                    })
                    .collect();
                rref_mod_p(&images, p)
            })
            .collect()
    }
}

/// `[n]!_p`.
pub fn flag_count(n: usize, p: u32) -> u64 {
    (1..=n as u32)
        .map(|k| (0..k).map(|e| (p as u64).pow(e)).sum::<u64>())
        .product()
}

/// Every complete flag of `F_p^n`.
pub fn enumerate_flags(n: usize, p: u32) -> Result<FlagSpace> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if n == 0 || flag_count(n, p) > MAX_FLAGS {
        return Err(Error::UnsupportedSize(format!(
            "flags of F_{p}^{n}: need 1 ≤ n and [n]!_p ≤ {MAX_FLAGS}"
        )));
    }
    let full: Subspace = rref_mod_p(
        &(0..n)
            .map(|r| (0..n).map(|c| u32::from(r == c)).collect())
            .collect::<Vec<_>>(),
        p,
    );
    let mut partial: Vec<Flag> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for f in &partial {
            let top: Subspace = f.last().cloned().unwrap_or_default();
            for line in lines_between(&top, &full, n, p) {
                let mut g = f.clone();
                g.push(join(&top, &line, p));
                next.push(g);
            }
        }
        let unique: BTreeSet<Flag> = next.into_iter().collect();
        partial = unique.into_iter().collect();
    }
    let mut flags = partial;
    flags.sort_by_key(|f| f.iter().flatten().flatten().copied().collect::<Vec<u32>>());
    let index = flags
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, f)| (f, i))
        .collect();
    Ok(FlagSpace { n, p, flags, index })
}

/// A square integer matrix with sorted sparse rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparseIntMatrix {
    dim: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl SparseIntMatrix {
    fn from_maps(rows: Vec<HashMap<usize, i64>>) -> Self {
        let dim = rows.len();
        let rows = rows
            .into_iter()
            .map(|m| {
                let mut r: Vec<(usize, i64)> = m.into_iter().filter(|&(_, v)| v != 0).collect();
                r.sort_unstable();
                r
            })
            .collect();
        SparseIntMatrix { dim, rows }
    }

    pub fn identity(dim: usize) -> Self {
        SparseIntMatrix {
            dim,
            rows: (0..dim).map(|i| vec![(i, 1)]).collect(),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        SparseIntMatrix {
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[(usize, i64)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i]
            .binary_search_by_key(&j, |e| e.0)
            .map_or(0, |k| self.rows[i][k].1)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.dim]; self.dim];
        for (i, r) in self.rows.iter().enumerate() {
            for &(j, v) in r {
                d[i][j] = v;
            }
        }
        d
    }

    pub fn mul(&self, other: &Self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = HashMap::new();
                for &(k, a) in r {
                    for &(j, b) in &other.rows[k] {
                        *acc.entry(j).or_insert(0) += a * b;
                    }
                }
                acc
            })
            .collect();
        Self::from_maps(rows)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut acc: HashMap<usize, i64> = a.iter().copied().collect();
                for &(j, v) in b {
                    *acc.entry(j).or_insert(0) += sign * v;
                }
                acc
            })
            .collect();
        Self::from_maps(rows)
    }

    /// `self - c I`.
    pub fn shift(&self, c: i64) -> Self {
        self.sub(&Self::identity(self.dim).scale(c))
    }

    pub fn scale(&self, c: i64) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&(j, v)| (j, v * c))
                    .filter(|e| e.1 != 0)
                    .collect()
            })
            .collect();
        SparseIntMatrix {
            dim: self.dim,
            rows,
        }
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.dim];
        for (i, r) in self.rows.iter().enumerate() {
            for &(j, v) in r {
                rows[j].push((i, v));
            }
        }
        SparseIntMatrix {
            dim: self.dim,
            rows,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|e| e.1).sum())
            .collect()
    }

    /// Rank over `F_ℓ` for a prime `ℓ < 2^32`.
    fn rank_mod(&self, l: u64) -> usize {
        let mut m: Vec<Vec<u64>> = self
            .to_dense()
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|v| v.rem_euclid(l as i64) as u64)
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for c in 0..self.dim {
            let Some(piv) = (rank..self.dim).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = mod_pow(m[rank][c], l - 2, l);
            let pivot_row: Vec<u64> = m[rank].iter().map(|x| x * inv % l).collect();
            for row in m.iter_mut().skip(rank + 1) {
                let f = row[c];
                if f != 0 {
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x = (*x + (l - f) * y) % l;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

fn mod_pow(mut b: u64, mut e: u64, l: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % l;
        }
        b = b * b % l;
        e >>= 1;
    }
    acc
}

/// Matrix of `F ↦ F·T_{s_i}`: row `F` lists the flags that replace `F_i` by another
/// `i`-dimensional `G` with `F_{i-1} ⊂ G ⊂ F_{i+1}`.
pub fn hecke_flag_action(space: &FlagSpace, i: usize) -> Result<SparseIntMatrix> {
    let n = space.n;
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let p = space.p;
    let rows = space
        .flags
        .iter()
        .map(|f| {
            let below: Subspace = if i >= 2 { f[i - 2].clone() } else { Vec::new() };
            let mut acc = HashMap::new();
            for line in lines_between(&below, &f[i], n, p) {
                let g_space = join(&below, &line, p);
                if g_space == f[i - 1] {
                    continue;
                }
                let mut g = f.clone();
                g[i - 1] = g_space;
                acc.insert(space.index[&g], 1);
            }
            acc
        })
        .collect();
    Ok(SparseIntMatrix::from_maps(rows))
}

/// Brown's `x^(q)`: row `F` is `Σ_i Σ_L (L ⊂ L + F_1 ⊂ ⋯ ⊂ L + F_{i-2} ⊂ F_i ⊂ ⋯ ⊂ F_n)`
/// over lines `L ⊆ F_i`, `L ⊄ F_{i-1}`.
pub fn x_operator(space: &FlagSpace) -> SparseIntMatrix {
    let (n, p) = (space.n, space.p);
    let rows = space
        .flags
        .iter()
        .map(|f| {
            let mut acc = HashMap::new();
            for i in 1..=n {
                let below: Subspace = if i >= 2 { f[i - 2].clone() } else { Vec::new() };
                for line in lines_between(&below, &f[i - 1], n, p) {
                    let mut g = Vec::with_capacity(n);
                    g.push(line.clone());
                    for k in 1..i.saturating_sub(1) {
                        g.push(join(&line, &f[k - 1], p));
                    }
                    g.extend(f[i.max(2) - 1..].iter().cloned());
                    *acc.entry(space.index[&g]).or_insert(0) += 1;
                }
            }
            acc
        })
        .collect();
    SparseIntMatrix::from_maps(rows)
}

/// The right action of `h` on the flag span at `q = p`, built from the generator matrices.
pub fn hecke_element_on_flags(space: &FlagSpace, h: &HeckeElement) -> Result<SparseIntMatrix> {
    let gens: Vec<SparseIntMatrix> = (1..space.n)
        .map(|i| hecke_flag_action(space, i))
        .collect::<Result<_>>()?;
    let q0 = crate::qpoly::int(space.p as i64);
    let mut out = SparseIntMatrix::zeros(space.len());
    for (w, c) in h.eval(&q0)? {
        if !c.is_integer() {
            return Err(Error::InvalidInput(format!(
                "coefficient {c} is not an integer at q = {}",
                space.p
            )));
        }
        let c = i64::try_from(c.to_integer())
            .map_err(|_| Error::InvalidInput("coefficient overflow".into()))?;
        let mut m = SparseIntMatrix::identity(space.len());
        for s in w.reduced_word() {
            m = m.mul(&gens[s - 1]);
        }
        out = out.add(&m.scale(c));
    }
    Ok(out)
}

/// Whether `x^(q)` equals the matrix of right multiplication by `T*_n(p)`.
pub fn verify_commutation(space: &FlagSpace) -> Result<bool> {
    let (_, t_star) = top_ops(space.n);
    Ok(x_operator(space) == hecke_element_on_flags(space, &t_star)?)
}

/// Eigenvalue data of `x^(q)` on the flag span.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XSpectrum {
    pub case: String,
    pub passed: bool,
    /// Allowed eigenvalues `[n-j]_p`, `j ∈ [0, n] ∖ {1}`, in decreasing order.
    pub eigenvalues: Vec<i64>,
    pub multiplicities: Vec<usize>,
    /// `Π (x - [n-j]_p) = 0` over the allowed values.
    pub annihilated: bool,
}

/// Prime used for the multiplicity ranks; the allowed eigenvalues stay distinct modulo it.
const RANK_PRIME: u64 = 2_147_483_647;

/// Checks that `x^(q)` is killed by `Π_{j ≠ 1} (y - [n-j]_p)`, which forces every root of its
/// characteristic polynomial into that set, excludes `[n-1]_p`, and makes it semisimple.
/// Multiplicities are nullities of `x - [n-j]_p`, computed over `F_ℓ` for a large prime `ℓ`:
/// the product also vanishes modulo `ℓ`, so the nullities mod `ℓ` sum to the dimension as over
/// the rationals, and since each one can only be larger mod `ℓ`, they agree.
pub fn x_spectrum_check(space: &FlagSpace) -> XSpectrum {
    let (n, p) = (space.n, space.p as i64);
    let qint = |m: usize| (0..m as u32).map(|e| p.pow(e)).sum::<i64>();
    let eigenvalues: Vec<i64> = (0..=n).filter(|&j| j != 1).map(|j| qint(n - j)).collect();
    let x = x_operator(space);
    let annihilated = eigenvalues
        .iter()
        .fold(SparseIntMatrix::identity(space.len()), |acc, &c| {
            acc.mul(&x.shift(c))
        })
        .is_zero();
    let multiplicities: Vec<usize> = eigenvalues
        .iter()
        .map(|&c| space.len() - x.shift(c).rank_mod(RANK_PRIME))
        .collect();
    let total: usize = multiplicities.iter().sum();
    let missing = qint(n - 1);
    XSpectrum {
        case: format!("n={n} p={p}"),
        passed: annihilated && total == space.len() && !eigenvalues.contains(&missing),
        eigenvalues,
        multiplicities,
        annihilated,
    }
}

/// Multiplicity of `[n-j]_p` for `T*_n` acting on the Hecke algebra: `C(n, j) d_j`.
pub fn hecke_multiplicity(n: usize, j: usize) -> usize {
    binomial(n, j) * derangement_count(j) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{poly_from_roots, Matrix};
    use crate::qpoly::int;
    use crate::tableaux::{desarrangement_count, horizontal_strips, Partition};

    fn line(v: &[u32], p: u32) -> Subspace {
        rref_mod_p(&[v.to_vec()], p)
    }

    #[test]
    fn flag_counts() {
        for (n, p, count) in [
            (1, 2, 1),
            (2, 2, 3),
            (3, 2, 21),
            (2, 3, 4),
            (3, 3, 52),
            (4, 2, 315),
        ] {
            let s = enumerate_flags(n, p).unwrap();
            assert_eq!(s.len(), count);
            assert_eq!(flag_count(n, p), count as u64);
            for f in s.flags() {
                for (k, sub) in f.iter().enumerate() {
                    assert_eq!(sub.len(), k + 1);
                    if k > 0 {
                        assert_eq!(join(&f[k - 1], sub, p), *sub);
                    }
                }
            }
        }
        assert!(matches!(enumerate_flags(4, 4), Err(Error::InvalidInput(_))));
        assert!(matches!(
            enumerate_flags(5, 3),
            Err(Error::UnsupportedSize(_))
        ));
    }

    #[test]
    fn lexicographic_order() {
        let s = enumerate_flags(2, 2).unwrap();
        let firsts: Vec<Subspace> = s.flags().iter().map(|f| f[0].clone()).collect();
        assert_eq!(
            firsts,
            vec![line(&[0, 1], 2), line(&[1, 0], 2), line(&[1, 1], 2)]
        );
    }

    #[test]
    fn hecke_relations_at_p() {
        for (n, p) in [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)] {
            let s = enumerate_flags(n, p).unwrap();
            let id = SparseIntMatrix::identity(s.len());
            let m: Vec<SparseIntMatrix> =
                (1..n).map(|i| hecke_flag_action(&s, i).unwrap()).collect();
            let p = p as i64;
            for (a, mi) in m.iter().enumerate() {
                assert!(mi.row_sums().iter().all(|&r| r == p));
                assert_eq!(*mi, mi.transpose());
                assert_eq!(mi.mul(mi), mi.scale(p - 1).add(&id.scale(p)));
                for (b, mj) in m.iter().enumerate() {
                    if a + 1 == b {
                        assert_eq!(mi.mul(mj).mul(mi), mj.mul(mi).mul(mj));
                    } else if a.abs_diff(b) > 1 {
                        assert_eq!(mi.mul(mj), mj.mul(mi));
                    }
                }
            }
        }
        let s = enumerate_flags(2, 2).unwrap();
        assert!(matches!(
            hecke_flag_action(&s, 2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn x_two_by_two_example() {
        let s = enumerate_flags(2, 2).unwrap();
        let full = rref_mod_p(&[vec![1, 0], vec![0, 1]], 2);
        let f: Flag = vec![line(&[1, 1], 2), full.clone()];
        let x = x_operator(&s);
        let row = x.row(s.index_of(&f).unwrap());
        let mut expected: Vec<(usize, i64)> = [&[1, 1], &[1, 0], &[0, 1]]
            .iter()
            .map(|v| (s.index_of(&vec![line(*v, 2), full.clone()]).unwrap(), 1))
            .collect();
        expected.sort_unstable();
        assert_eq!(row, expected.as_slice());
    }

    #[test]
    fn x_row_and_column_sums() {
        for (n, p) in [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)] {
            let s = enumerate_flags(n, p).unwrap();
            let x = x_operator(&s);
            let qn: i64 = (0..n as u32).map(|e| (p as i64).pow(e)).sum();
            assert!(x.row_sums().iter().all(|&r| r == qn));
            assert!(x.transpose().row_sums().iter().all(|&r| r == qn));
        }
    }

    #[test]
    fn x_commutes_with_gl() {
        for (n, p) in [(3, 2), (3, 3), (4, 2)] {
            let s = enumerate_flags(n, p).unwrap();
            let x = x_operator(&s);
            // a cyclic permutation matrix and an elementary transvection
            let mut cyc = vec![vec![0u32; n]; n];
            for r in 0..n {
                cyc[r][(r + 1) % n] = 1;
            }
            let mut transvection: Vec<Vec<u32>> = (0..n)
                .map(|r| (0..n).map(|c| u32::from(r == c)).collect())
                .collect();
            transvection[0][n - 1] = 1;
            for g in [cyc, transvection] {
                let perm: Vec<usize> = s
                    .flags()
                    .iter()
                    .map(|f| s.index_of(&s.act_gl(&g, f)).unwrap())
                    .collect();
                for (a, &ga) in perm.iter().enumerate() {
                    for &(b, v) in x.row(a) {
                        assert_eq!(x.get(ga, perm[b]), v);
                    }
                }
            }
        }
    }

    #[test]
    fn commutation_with_random_to_top() {
        for (n, p) in [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3), (4, 2)] {
            assert!(
                verify_commutation(&enumerate_flags(n, p).unwrap()).unwrap(),
                "n={n} p={p}"
            );
        }
    }

    #[test]
    fn standard_flag_row_of_x() {
        // x(E) = Σ_i E·T_{s_{i-1}}⋯T_{s_1}, checked term by term
        let s = enumerate_flags(3, 3).unwrap();
        let e = s.index_of(&s.standard_flag()).unwrap();
        let m1 = hecke_flag_action(&s, 1).unwrap();
        let m2 = hecke_flag_action(&s, 2).unwrap();
        let total = SparseIntMatrix::identity(s.len())
            .add(&m1)
            .add(&m2.mul(&m1));
        assert_eq!(x_operator(&s).row(e), total.row(e));
        assert_eq!(total.row(e).len(), 1 + 3 + 9);
    }

    /// `f^λ(q) = q^{n(λ)} [n]!_q / Π [h]_q`, evaluated at an integer.
    fn unipotent_dim(lambda: &Partition, q: i64) -> i64 {
        let qint = |m: usize| (0..m as u32).map(|e| q.pow(e)).sum::<i64>();
        let n = lambda.size();
        let b: usize = lambda.parts().iter().enumerate().map(|(r, &l)| r * l).sum();
        let mut num = q.pow(b as u32) * (1..=n).map(qint).product::<i64>();
        let conj = lambda.conjugate();
        for (r, c) in lambda.cells() {
            let hook = lambda.row(r) + conj.row(c) + 1 - r - c;
            assert_eq!(num % qint(hook), 0);
            num /= qint(hook);
        }
        num
    }

    #[test]
    fn x_spectrum() {
        for (n, p) in [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3), (4, 2)] {
            let s = enumerate_flags(n, p).unwrap();
            let spec = x_spectrum_check(&s);
            assert!(spec.passed, "{spec:?}");
            let qn1: i64 = (0..n as u32 - 1).map(|e| (p as i64).pow(e)).sum();
            assert!(n < 2 || !spec.eigenvalues.contains(&qn1));
            // flag multiplicity of [n-j]_p: Σ f^λ(p) d^μ over strips λ∖μ with |μ| = j
            for (k, j) in (0..=n).filter(|&j| j != 1).enumerate() {
                let expected: i64 = Partition::all(n)
                    .iter()
                    .map(|lambda| {
                        let m: usize = horizontal_strips(lambda)
                            .iter()
                            .filter(|mu| mu.size() == j)
                            .map(desarrangement_count)
                            .sum();
                        unipotent_dim(lambda, p as i64) * m as i64
                    })
                    .sum();
                assert_eq!(spec.multiplicities[k] as i64, expected, "n={n} p={p} j={j}");
            }
            if s.len() <= 52 {
                let dense = Matrix::from_rows(
                    x_operator(&s)
                        .to_dense()
                        .into_iter()
                        .map(|r| r.into_iter().map(int).collect())
                        .collect(),
                );
                let roots: Vec<_> = spec.eigenvalues.iter().map(|&c| int(c)).collect();
                let expected =
                    poly_from_roots(roots.iter().zip(spec.multiplicities.iter().copied()));
                assert_eq!(dense.integer_charpoly().unwrap(), expected);
            }
        }
    }

    #[test]
    fn x_examples() {
        let s = enumerate_flags(2, 2).unwrap();
        let spec = x_spectrum_check(&s);
        assert_eq!(spec.eigenvalues, vec![3, 0]);
        assert_eq!(spec.multiplicities, vec![1, 2]);
        let s = enumerate_flags(3, 2).unwrap();
        assert_eq!(x_spectrum_check(&s).eigenvalues, vec![7, 1, 0]);
    }

    #[test]
    fn hecke_multiplicities_sum_to_factorial() {
        for n in 1..=6 {
            let total: usize = (0..=n).map(|j| hecke_multiplicity(n, j)).sum();
            assert_eq!(total, crate::symmetric::factorial(n));
        }
    }
}
