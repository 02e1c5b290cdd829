//! Permutations of S_n in one-line notation, Coxeter lengths, reduced words,
//! Young subgroups and minimal coset representatives.
//!
//! Right multiplication by the simple transposition `s_i` swaps positions
//! `i` and `i+1`. Products compose as functions: `(u·v)(k) = u(v(k))`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported rank.
pub const MAX_N: usize = 8;

/// A permutation of `[1..n]`, `n ≤ 8`.
///
/// The derived order agrees with the Lehmer-code rank for a fixed `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    w: [u8; MAX_N],
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_N, "n = {n} exceeds {MAX_N}");
        let mut w = [0u8; MAX_N];
        for (i, slot) in w.iter_mut().enumerate().take(n) {
            *slot = (i + 1) as u8;
        }
        Self { n: n as u8, w }
    }

    /// Validates and builds from one-line notation.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        if n > MAX_N {
            return Err(Error::UnsupportedSize(format!("n = {n} exceeds {MAX_N}")));
        }
        let mut seen = [false; MAX_N + 1];
        let mut w = [0u8; MAX_N];
        for (i, &v) in one_line.iter().enumerate() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidInput(format!(
                    "{one_line:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v] = true;
            w[i] = v as u8;
        }
        Ok(Self { n: n as u8, w })
    }

    /// The simple transposition `s_i`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Self::identity(n).apply_gen_right(i)
    }

    /// The transposition `(i, k)`.
    pub fn transposition(n: usize, i: usize, k: usize) -> Self {
        let mut p = Self::identity(n);
        p.w.swap(i - 1, k - 1);
        p
    }

    /// Product of generators `s_{a_1} s_{a_2} ⋯ s_{a_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut p = Self::identity(n);
        for &i in word {
            p = p.apply_gen_right(i)?;
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.w[..self.n()].iter().map(|&v| v as usize).collect()
    }

    /// `w(i)` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> usize {
        self.w[i - 1] as usize
    }

    /// `w · s_i`.
    pub fn apply_gen_right(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n(),
            });
        }
        Ok(self.swap_positions(i))
    }

    pub(crate) fn swap_positions(&self, i: usize) -> Self {
        let mut p = *self;
        p.w.swap(i - 1, i);
        p
    }

    /// True when `ℓ(w s_i) > ℓ(w)`.
    pub fn ascends_at(&self, i: usize) -> bool {
        self.w[i - 1] < self.w[i]
    }

    /// Coxeter length, the inversion count.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.w[i] > self.w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        let mut p = *self;
        for i in 0..self.n() {
            p.w[self.w[i] as usize - 1] = (i + 1) as u8;
        }
        p
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut p = *self;
        for i in 0..self.n() {
            p.w[i] = self.w[other.w[i] as usize - 1];
        }
        p
    }

    /// True when `s_i w < w`, i.e. `i+1` precedes `i` in one-line notation.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.w[i] < inv.w[i - 1]
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.has_left_descent(i))
            .collect()
    }

    /// A reduced word, built by repeatedly moving the largest out-of-place
    /// value rightwards with adjacent swaps and reversing the swap sequence.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut cur = *self;
        let mut swaps = Vec::with_capacity(self.length());
        for v in (1..=self.n()).rev() {
            let mut pos = (0..self.n()).find(|&i| cur.w[i] as usize == v).unwrap();
            while pos + 1 < v {
                cur.w.swap(pos, pos + 1);
                swaps.push(pos + 1);
                pos += 1;
            }
        }
        swaps.reverse();
        swaps
    }

    /// Lehmer-code rank in `0..n!`, equal to the lexicographic rank.
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut r = 0;
        for i in 0..n {
            let smaller = (i + 1..n).filter(|&j| self.w[j] < self.w[i]).count();
            r = r * (n - i) + smaller;
        }
        r
    }

    pub fn unrank(n: usize, mut r: usize) -> Self {
        let mut digits = vec![0usize; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = r % base;
            r /= base;
        }
        let mut avail: Vec<u8> = (1..=n as u8).collect();
        let mut p = Self::identity(n);
        for i in 0..n {
            p.w[i] = avail.remove(digits[i]);
        }
        p
    }

    /// All of S_n in rank order.
    pub fn all(n: usize) -> Vec<Self> {
        (0..factorial(n)).map(|r| Self::unrank(n, r)).collect()
    }

    pub fn longest(n: usize) -> Self {
        let one_line: Vec<usize> = (1..=n).rev().collect();
        Self::from_one_line(&one_line).unwrap()
    }

    /// Embeds into S_m (m ≥ n) by fixing `n+1..m`.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m >= self.n() && m <= MAX_N);
        let mut p = *self;
        for i in self.n()..m {
            p.w[i] = (i + 1) as u8;
        }
        p.n = m as u8;
        p
    }

    pub fn fixed_points(&self) -> usize {
        (0..self.n())
            .filter(|&i| self.w[i] as usize == i + 1)
            .count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

/// A composition of `n`: consecutive blocks of positive sizes. The only
/// composition of 0 has no parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("bad composition {parts:?}")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The partial sums `α_1, α_1+α_2, …` strictly below `n`.
    pub fn j_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in &self.parts[..self.parts.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Block index (0-based) of each position `1..=n`.
    fn block_of(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n());
        for (b, &p) in self.parts.iter().enumerate() {
            out.extend(std::iter::repeat_n(b, p));
        }
        out
    }

    /// All compositions of `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rem == 0 {
                out.push(Composition { parts: cur.clone() });
                return;
            }
            for p in 1..=rem {
                cur.push(p);
                rec(rem - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }
}

/// The Young subgroup S_α: permutations mapping every block of α onto itself.
pub fn young_subgroup(alpha: &Composition) -> Vec<Permutation> {
    let n = alpha.n();
    let blocks = alpha.block_of();
    let mut out = vec![Permutation::identity(n)];
    let mut start = 0;
    for &len in alpha.parts() {
        let mut next = Vec::new();
        for base in &out {
            for local in Permutation::all(len) {
                let mut p = *base;
                for k in 0..len {
                    p.w[start + k] = (start + local.at(k + 1)) as u8;
                }
                next.push(p);
            }
        }
        out = next;
        start += len;
    }
    debug_assert!(out
        .iter()
        .all(|p| (0..n).all(|i| blocks[p.w[i] as usize - 1] == blocks[i])));
    out.sort();
    out
}

/// X_α: minimal-length representatives of the right cosets S_α w,
/// characterised by having all left descents inside J(α).
pub fn min_coset_reps(alpha: &Composition) -> Vec<Permutation> {
    let j = alpha.j_set();
    Permutation::all(alpha.n())
        .into_iter()
        .filter(|w| w.left_descents().iter().all(|d| j.contains(d)))
        .collect()
}

/// Splits `w = u·v` with `u ∈ S_α` and `v ∈ X_α`.
pub fn coset_factor(w: &Permutation, alpha: &Composition) -> (Permutation, Permutation) {
    let n = w.n();
    let blocks = alpha.block_of();
    // v sends positions to values so that values inside each block of α keep
    // the relative order in which w places them, and u reorders them back.
    let mut v = *w;
    let mut next_in_block: Vec<usize> = {
        let mut starts = Vec::new();
        let mut acc = 1;
        for &p in alpha.parts() {
            starts.push(acc);
            acc += p;
        }
        starts
    };
    for i in 0..n {
        let b = blocks[w.w[i] as usize - 1];
        v.w[i] = next_in_block[b] as u8;
        next_in_block[b] += 1;
    }
    let u = w.compose(&v.inverse());
    (u, v)
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// d_j, the number of fixed-point-free permutations of S_j.
pub fn derangement_count(j: usize) -> u64 {
    let (mut a, mut b) = (1u64, 0u64);
    if j == 0 {
        return a;
    }
    for k in 2..=j as u64 {
        let c = (k - 1) * (a + b);
        a = b;
        b = c;
    }
    b
}
