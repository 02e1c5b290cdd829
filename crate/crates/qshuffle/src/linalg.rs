//! Dense exact linear algebra over the rationals.
//!
//! Vectors are row vectors and matrices act on the right (`v · M`), matching
//! the right action of the Hecke algebra used everywhere else.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qpoly::{rational_to_string, LaurentPoly, Rational};

/// Exact rational row vector.
pub type Vector = Vec<Rational>;

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![Rational::zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let b = self.get(i, j);
                if !b.is_zero() {
                    *slot += a * b;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn row_sums(&self) -> Vector {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn rank(&self) -> usize {
        echelon(self).pivots.len()
    }

    /// Basis of `{x : M x = 0}`, one primitive integer vector per free column.
    pub fn right_kernel(&self) -> Vec<Vector> {
        kernel_from_echelon(&echelon(self), self.cols)
    }

    /// Basis of `{v : v M = 0}`.
    pub fn left_kernel(&self) -> Vec<Vector> {
        self.transpose().right_kernel()
    }

    /// Characteristic polynomial `det(y I - M)` as a polynomial in `y`.
    pub fn charpoly(&self) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::SizeMismatch {
                left: self.rows,
                right: self.cols,
            });
        }
        Ok(hessenberg_charpoly(self.clone()))
    }

    /// Characteristic polynomial of a matrix with integer entries, computed modulo
    /// enough primes to pin every coefficient and lifted by the Chinese remainder theorem.
    ///
    /// Coefficients of `det(y I - M)` are elementary symmetric functions of the
    /// eigenvalues, each bounded by the maximal absolute row sum `r`, so
    /// `|c_k| <= C(N, k) r^k <= (1 + r)^N`.
    pub fn integer_charpoly(&self) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::SizeMismatch {
                left: self.rows,
                right: self.cols,
            });
        }
        if self.data.iter().any(|x| !x.is_integer()) {
            return Err(Error::InvalidInput(
                "integer_charpoly needs integer entries".into(),
            ));
        }
        let n = self.rows;
        let row_sum = (0..n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_integer().abs())
                    .sum::<BigInt>()
            })
            .max()
            .unwrap_or_default();
        let bound = num_traits::pow(row_sum + BigInt::one(), n);
        let target = bound * 2u32;
        let mut modulus = BigInt::one();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        let mut prime = 1u64 << 31;
        while modulus <= target {
            prime = previous_prime(prime);
            let residues: Vec<u64> = self
                .data
                .iter()
                .map(|x| mod_reduce(&x.to_integer(), prime))
                .collect();
            let cp = charpoly_mod_p(residues, n, prime);
            // x ≡ c (mod modulus), x ≡ r (mod prime)
            let pm = BigInt::from(prime);
            let inv = BigInt::from(mod_inverse(mod_reduce(&modulus, prime), prime));
            for (c, &r) in coeffs.iter_mut().zip(&cp) {
                let diff = (BigInt::from(r) - &*c).mod_floor(&pm);
                *c += &modulus * ((diff * &inv).mod_floor(&pm));
            }
            modulus *= pm;
        }
        let half = &modulus / 2u32;
        Ok(LaurentPoly::from_terms(coeffs.into_iter().enumerate().map(
            |(k, c)| {
                let c = if c > half { c - &modulus } else { c };
                (k as i32, Rational::from_integer(c))
            },
        )))
    }

    /// Characteristic polynomial of a rational matrix through [`Matrix::integer_charpoly`]:
    /// with `L` the lcm of all denominators, `det(y I - M) = L^{-N} det(L y I - L M)`.
    pub fn modular_charpoly(&self) -> Result<LaurentPoly> {
        let l = lcm_of_denominators(&self.data);
        let lr = Rational::from_integer(l.clone());
        let scaled = Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * &lr).collect(),
        };
        let cp = scaled.integer_charpoly()?;
        let n = self.rows as i32;
        Ok(LaurentPoly::from_terms(cp.terms().map(|(k, c)| {
            (
                k,
                c / Rational::from_integer(num_traits::pow(l.clone(), (n - k) as usize)),
            )
        })))
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(rational_to_string).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// Integer row echelon form produced by fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn lcm_of_denominators(row: &[Rational]) -> BigInt {
    row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Fraction-free (Bareiss) elimination. Pivot choice: the first column with a
/// nonzero entry among the remaining rows, and within it the row of largest index.
fn echelon(m: &Matrix) -> Echelon {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let l = lcm_of_denominators(row);
            row.iter()
                .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).rev().find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        for i in r + 1..m.rows {
            let f = a[i][c].clone();
            for j in c..m.cols {
                let v = &piv * &a[i][j] - &f * &a[r][j];
                debug_assert!((&v % &prev).is_zero());
                a[i][j] = v / &prev;
            }
            for j in 0..c {
                debug_assert!(a[i][j].is_zero());
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    a.truncate(pivots.len());
    Echelon { rows: a, pivots }
}

fn kernel_from_echelon(e: &Echelon, cols: usize) -> Vec<Vector> {
    let free: Vec<usize> = (0..cols).filter(|c| !e.pivots.contains(c)).collect();
    let mut out = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![Rational::zero(); cols];
        x[f] = Rational::one();
        for (r, &pc) in e.pivots.iter().enumerate().rev() {
            let mut s = Rational::zero();
            for j in pc + 1..cols {
                if !x[j].is_zero() && !e.rows[r][j].is_zero() {
                    s += Rational::from_integer(e.rows[r][j].clone()) * &x[j];
                }
            }
            x[pc] = -s / Rational::from_integer(e.rows[r][pc].clone());
        }
        out.push(primitive(x));
    }
    out
}

/// Scales a nonzero vector to coprime integers with a positive first nonzero entry.
pub fn primitive(v: Vector) -> Vector {
    let Some(first) = v.iter().find(|x| !x.is_zero()) else {
        return v;
    };
    let l = lcm_of_denominators(&v);
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if first.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter()
        .map(|x| Rational::from_integer(x * &sign / &g))
        .collect()
}

/// Rank of a list of row vectors.
pub fn rank_of(vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors.to_vec()).rank()
}

/// Coefficients `c` with `Σ c_i basis_i = target`, if any. The basis rows must
/// be linearly independent.
pub fn solve_in_span(basis: &[Vector], target: &[Rational]) -> Option<Vector> {
    let mut rows = basis.to_vec();
    rows.push(target.iter().map(|x| -x).collect());
    let ker = Matrix::from_rows(rows).left_kernel();
    let k = basis.len();
    let v = ker.into_iter().find(|v| !v[k].is_zero())?;
    let last = v[k].clone();
    Some(v[..k].iter().map(|x| x / &last).collect())
}

/// Reduced row echelon form of the span of `rows`: the nonzero rows and
/// their pivot columns. Row `i` of the input equals
/// `Σ_k rows[i][pivots[k]] · rref[k]`.
pub fn rref(rows: &[Vector]) -> (Vec<Vector>, Vec<usize>) {
    let mut work: Vec<Vector> = rows
        .iter()
        .filter(|r| !is_zero_vector(r))
        .cloned()
        .collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..cols {
        if top == work.len() {
            break;
        }
        let Some(p) = (top..work.len()).find(|&i| !work[i][c].is_zero()) else {
            continue;
        };
        work.swap(top, p);
        let inv = Rational::one() / &work[top][c];
        let pivot_row: Vector = work[top].iter().map(|x| x * &inv).collect();
        for (i, row) in work.iter_mut().enumerate() {
            if i != top && !row[c].is_zero() {
                let f = -row[c].clone();
                add_assign_scaled(row, &pivot_row, &f);
            }
        }
        work[top] = pivot_row;
        pivots.push(c);
        top += 1;
    }
    work.truncate(top);
    (work, pivots)
}

pub fn serialize_rational<S: Serializer>(
    x: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_to_string(x))
}

/// Serializes a vector as an array of `"num/den"` strings.
pub fn serialize_vector<S: Serializer>(
    v: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&rational_to_string(x))?;
    }
    seq.end()
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn scale_vector(v: &[Rational], c: &Rational) -> Vector {
    v.iter().map(|x| x * c).collect()
}

pub fn add_assign_scaled(acc: &mut [Rational], v: &[Rational], c: &Rational) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += x * c;
        }
    }
}

/// Returns `Some(c)` when `a = c · b` (with `b` nonzero).
pub fn proportionality(a: &[Rational], b: &[Rational]) -> Option<Rational> {
    let j = b.iter().position(|x| !x.is_zero())?;
    let c = &a[j] / &b[j];
    a.iter().zip(b).all(|(x, y)| *x == y * &c).then_some(c)
}

/// Characteristic polynomial via reduction to upper Hessenberg form.
fn hessenberg_charpoly(mut h: Matrix) -> LaurentPoly {
    let n = h.rows;
    let at = |h: &Matrix, i: usize, j: usize| h.data[i * n + j].clone();
    for m in 1..n.saturating_sub(1) {
        let mm = m;
        let Some(i) = (mm..n).find(|&i| !h.data[i * n + (m - 1)].is_zero()) else {
            continue;
        };
        if i != mm {
            for j in 0..n {
                h.data.swap(i * n + j, mm * n + j);
            }
            for j in 0..n {
                h.data.swap(j * n + i, j * n + mm);
            }
        }
        let t = at(&h, mm, m - 1);
        for r in mm + 1..n {
            let u = at(&h, r, m - 1);
            if u.is_zero() {
                continue;
            }
            let u = u / &t;
            for j in 0..n {
                let v = at(&h, mm, j);
                if !v.is_zero() {
                    h.data[r * n + j] -= &u * v;
                }
            }
            for j in 0..n {
                let v = at(&h, j, r);
                if !v.is_zero() {
                    h.data[j * n + mm] += &u * v;
                }
            }
        }
    }
    // p_k = (y - h_kk) p_{k-1} - Σ_i h_ik (Π h_{j,j-1}) p_{i-1}
    let y = LaurentPoly::q_pow(1);
    let mut p: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    for k in 0..n {
        let mut next = &(&y - &LaurentPoly::constant(at(&h, k, k))) * &p[k];
        let mut t = Rational::one();
        for i in (0..k).rev() {
            t *= at(&h, i + 1, i);
            if t.is_zero() {
                break;
            }
            let c = &t * at(&h, i, k);
            if !c.is_zero() {
                next.add_scaled(&p[i], &-c, 0);
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

fn previous_prime(mut p: u64) -> u64 {
    loop {
        p -= 1;
        if p > 1
            && (2..)
                .take_while(|d| d * d <= p)
                .all(|d| !p.is_multiple_of(d))
        {
            return p;
        }
    }
}

fn mod_reduce(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.iter_u64_digits().next().unwrap_or(0)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

/// Hessenberg reduction over `F_p` for `p < 2^32`; coefficients from degree 0 upwards.
fn charpoly_mod_p(mut h: Vec<u64>, n: usize, p: u64) -> Vec<u64> {
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i * n + m - 1] != 0) else {
            continue;
        };
        if i != m {
            for j in 0..n {
                h.swap(i * n + j, m * n + j);
            }
            for j in 0..n {
                h.swap(j * n + i, j * n + m);
            }
        }
        let t_inv = mod_inverse(h[m * n + m - 1], p);
        for r in m + 1..n {
            let u = h[r * n + m - 1] * t_inv % p;
            if u == 0 {
                continue;
            }
            for j in 0..n {
                h[r * n + j] = (h[r * n + j] + p - u * h[m * n + j] % p) % p;
            }
            for j in 0..n {
                h[j * n + m] = (h[j * n + m] + u * h[j * n + r]) % p;
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        let hkk = h[k * n + k];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - hkk * c % p) % p;
        }
        let mut t = 1u64;
        for i in (0..k).rev() {
            t = t * h[(i + 1) * n + i] % p;
            if t == 0 {
                break;
            }
            let c = t * h[i * n + k] % p;
            for (d, &a) in polys[i].iter().enumerate() {
                next[d] = (next[d] + p - c * a % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// `Π (y - r)^m` over `(r, m)` pairs.
pub fn poly_from_roots<'a, I: IntoIterator<Item = (&'a Rational, usize)>>(roots: I) -> LaurentPoly {
    let y = LaurentPoly::q_pow(1);
    let mut acc = LaurentPoly::one();
    for (r, m) in roots {
        let f = &y - &LaurentPoly::constant(r.clone());
        acc = &acc * &f.pow(m as u32);
    }
    acc
}

// Dense polynomials in y, coefficients from degree 0 upwards, no trailing zeros.
type Dense = Vec<Rational>;

fn trim(mut a: Dense) -> Dense {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn dense_of(p: &LaurentPoly) -> Result<Dense> {
    if p.min_exponent().is_some_and(|k| k < 0) {
        return Err(Error::InvalidInput(format!("{p} has negative powers")));
    }
    let deg = p.degree().map_or(0, |d| d as usize + 1);
    Ok(trim((0..deg).map(|k| p.coeff(k as i32)).collect()))
}

fn dense_eval(a: &[Rational], x: &Rational) -> Rational {
    a.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn dense_rem(a: &[Rational], b: &[Rational]) -> Dense {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lead;
        for (i, x) in b.iter().enumerate() {
            r[k + i] -= &c * x;
        }
        r = trim(r);
    }
    r
}

fn dense_gcd(a: &[Rational], b: &[Rational]) -> Dense {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = dense_rem(&a, &b);
        a = std::mem::replace(&mut b, r);
    }
    let lead = a.last().cloned().unwrap_or_else(Rational::one);
    a.into_iter().map(|c| c / &lead).collect()
}

fn dense_div_exact(a: &[Rational], b: &[Rational]) -> Dense {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut quot = vec![Rational::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &r[k + db] / &b[db];
        for (i, x) in b.iter().enumerate() {
            r[k + i] -= &c * x;
        }
        quot[k] = c;
    }
    trim(quot)
}

fn derivative(a: &[Rational]) -> Dense {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
            .collect(),
    )
}

fn sign_changes(seq: &[Dense], x: &Rational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| dense_eval(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// All roots of a polynomial in `y` when every root is rational, with
/// multiplicities and in decreasing order; `None` if some root is not
/// rational. Roots are isolated with a Sturm sequence and pinned down using
/// the fact that their denominators divide the lcm of the denominators of the
/// monic squarefree part.
pub fn rational_roots(p: &LaurentPoly) -> Result<Option<Vec<(Rational, usize)>>> {
    let a = dense_of(p)?;
    if a.is_empty() {
        return Err(Error::InvalidInput(
            "the zero polynomial has no finite root set".into(),
        ));
    }
    let deg = a.len() - 1;
    if deg == 0 {
        return Ok(Some(Vec::new()));
    }
    let g = dense_div_exact(&a, &dense_gcd(&a, &derivative(&a)));
    let lead = g.last().unwrap().clone();
    let g: Dense = g.into_iter().map(|c| c / &lead).collect();
    let denom = g.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let bound = Rational::one() + g.iter().map(|c| c.abs()).max().unwrap();
    let mut sturm = vec![g.clone(), derivative(&g)];
    while sturm.last().unwrap().len() > 1 {
        let n = sturm.len();
        let r = dense_rem(&sturm[n - 2], &sturm[n - 1]);
        if r.is_empty() {
            break;
        }
        sturm.push(r.into_iter().map(|c| -c).collect());
    }
    let width_limit = Rational::new(BigInt::one(), denom.clone());
    let d = Rational::from_integer(denom.clone());
    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&sturm, &lo) - sign_changes(&sturm, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 && &hi - &lo < width_limit {
            let c = ((&lo * &d).floor() + Rational::one()) / &d;
            if c > hi || !dense_eval(&g, &c).is_zero() {
                return Ok(None);
            }
            roots.push(c);
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    roots.sort_by(|x, y| y.cmp(x));
    let mut out = Vec::new();
    let mut total = 0;
    for r in roots {
        let lin = vec![-r.clone(), Rational::one()];
        let mut cur = a.clone();
        let mut mult = 0;
        while dense_rem(&cur, &lin).is_empty() {
            cur = dense_div_exact(&cur, &lin);
            mult += 1;
        }
        total += mult;
        out.push((r, mult));
    }
    Ok((total == deg).then_some(out))
}
