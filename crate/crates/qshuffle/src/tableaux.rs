//! Partitions, skew shapes and standard Young tableaux in English notation
//! (row 1 on top, content of cell `(r, c)` is `c - r`).

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qpoly::LaurentPoly;

/// An integer partition; the empty partition is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidInput(format!("{parts:?} is not a partition")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `r` (1-based); zero beyond the last row.
    pub fn row(&self, r: usize) -> usize {
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.num_rows() <= self.num_rows()
            && other
                .parts
                .iter()
                .enumerate()
                .all(|(i, &p)| p <= self.parts[i])
    }

    /// `self ⊴ other` in dominance order (sizes may differ; compares partial sums).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let rows = self.num_rows().max(other.num_rows());
        let (mut a, mut b) = (0, 0);
        for r in 1..=rows {
            a += self.row(r);
            b += other.row(r);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Cells `(row, col)` in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for c in 1..=p {
                out.push((i + 1, c));
            }
        }
        out
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// f^λ by the hook-length formula.
    pub fn hook_length_count(&self) -> u128 {
        let n = self.size();
        let mut num: u128 = (1..=n as u128).product();
        let conj = self.conjugate();
        let mut den: u128 = 1;
        for (r, c) in self.cells() {
            let arm = self.row(r) - c;
            let leg = conj.row(c) - r;
            den *= (arm + leg + 1) as u128;
        }
        num /= den;
        num
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.row(1);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Partitions obtained by removing one corner cell, largest first.
    pub fn remove_corners(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for r in 1..=self.num_rows() {
            if self.row(r) > self.row(r + 1) {
                let mut parts = self.parts.clone();
                parts[r - 1] -= 1;
                out.push(Partition::new(parts).unwrap());
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// Adds a cell at the end of row `r`, if the result is a partition.
    pub fn add_cell(&self, r: usize) -> Option<Partition> {
        if r > self.num_rows() + 1 || (r > 1 && self.row(r - 1) == self.row(r)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if r == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
        Some(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::<usize>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Parses `"3,1,1"`, `"(3,1,1)"` or `""` for the empty partition.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    if t.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let parts = t
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::InvalidInput(format!("not a partition: {s:?}")))?;
    Partition::new(parts)
}

/// A skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeMismatch(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(Self { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        Self {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells of `outer / inner` in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=self.outer.num_rows() {
            for c in self.inner.row(r) + 1..=self.outer.row(r) {
                out.push((r, c));
            }
        }
        out
    }

    /// At most one cell in each column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..=self.outer.num_rows()).all(|r| self.inner.row(r) >= self.outer.row(r + 1))
    }

    /// Contents `c - r` of the cells in row-major order.
    pub fn contents(&self) -> Vec<i64> {
        self.cells()
            .iter()
            .map(|&(r, c)| c as i64 - r as i64)
            .collect()
    }

    /// The q-content `Σ [c - r]_q` over the cells.
    pub fn q_content(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for k in self.contents() {
            acc += &LaurentPoly::qint(k);
        }
        acc
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// A standard tableau on a (possibly skew) shape `outer / inner`, holding the
/// entries `|inner|+1, …, |outer|`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
    // cell of entry `offset + 1 + k` at index k
    cells: Vec<(usize, usize)>,
}

impl StandardTableau {
    /// Builds a straight-shape tableau from its rows.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        Self::new_skew(outer, Partition::empty(), rows)
    }

    /// Builds a skew tableau; row `r` lists the entries of columns
    /// `inner_r + 1 ..= outer_r`.
    pub fn new_skew(outer: Partition, inner: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = SkewShape::new(outer, inner)?;
        let bad =
            |why: &str| Error::InvalidInput(format!("not a standard tableau ({why}): {rows:?}"));
        let nrows = shape.outer.num_rows();
        let mut padded = rows.clone();
        padded.resize(nrows, Vec::new());
        if rows.len() > nrows.max(1) && rows[nrows..].iter().any(|r| !r.is_empty()) {
            return Err(bad("too many rows"));
        }
        let offset = shape.inner.size();
        let total = shape.outer.size();
        let mut cells = vec![(0, 0); total - offset];
        for (i, row) in padded.iter().enumerate() {
            let r = i + 1;
            if row.len() != shape.outer.row(r) - shape.inner.row(r) {
                return Err(bad("row length"));
            }
            for (j, &v) in row.iter().enumerate() {
                if v <= offset || v > total || cells[v - offset - 1] != (0, 0) {
                    return Err(bad("entries"));
                }
                cells[v - offset - 1] = (r, shape.inner.row(r) + j + 1);
            }
        }
        let t = Self {
            shape,
            rows: padded,
            cells,
        };
        for (r, c) in t.shape.cells() {
            let v = t.entry(r, c).unwrap();
            if let Some(right) = t.entry(r, c + 1) {
                if right <= v {
                    return Err(bad("rows must increase"));
                }
            }
            if let Some(below) = t.entry(r + 1, c) {
                if below <= v {
                    return Err(bad("columns must increase"));
                }
            }
        }
        Ok(t)
    }

    fn from_cells(shape: SkewShape, cells: Vec<(usize, usize)>) -> Self {
        let offset = shape.inner.size();
        let mut rows: Vec<Vec<usize>> = (1..=shape.outer.num_rows())
            .map(|r| vec![0; shape.outer.row(r) - shape.inner.row(r)])
            .collect();
        for (k, &(r, c)) in cells.iter().enumerate() {
            rows[r - 1][c - shape.inner.row(r) - 1] = offset + k + 1;
        }
        Self { shape, rows, cells }
    }

    /// The row-filled tableau `t^{λ/μ}`: rows top to bottom, left to right.
    pub fn row_filled(shape: &SkewShape) -> Self {
        Self::from_cells(shape.clone(), shape.cells())
    }

    /// `t^λ` for a straight shape.
    pub fn row_filled_straight(lambda: &Partition) -> Self {
        Self::row_filled(&SkewShape::straight(lambda.clone()))
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn outer(&self) -> &Partition {
        &self.shape.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.shape.inner
    }

    pub fn is_straight(&self) -> bool {
        self.shape.inner.size() == 0
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Largest entry, `|outer|`.
    pub fn n(&self) -> usize {
        self.shape.outer.size()
    }

    /// Smallest entry, `|inner| + 1`.
    pub fn first_entry(&self) -> usize {
        self.shape.inner.size() + 1
    }

    /// Entry in cell `(r, c)`, if that cell belongs to the skew shape.
    pub fn entry(&self, r: usize, c: usize) -> Option<usize> {
        if r == 0 || r > self.rows.len() || c <= self.shape.inner.row(r) {
            return None;
        }
        self.rows[r - 1]
            .get(c - self.shape.inner.row(r) - 1)
            .copied()
    }

    /// Cell `(row, col)` holding entry `k`.
    pub fn cell_of(&self, k: usize) -> (usize, usize) {
        self.cells[k - self.first_entry()]
    }

    pub fn row_of(&self, k: usize) -> usize {
        self.cell_of(k).0
    }

    /// Content `col - row` of the cell holding `k`.
    pub fn content(&self, k: usize) -> i64 {
        let (r, c) = self.cell_of(k);
        c as i64 - r as i64
    }

    /// `[content(k)]_q`.
    pub fn q_content(&self, k: usize) -> LaurentPoly {
        LaurentPoly::qint(self.content(k))
    }

    /// Rows of the entries `first_entry()..=n()`; for straight shapes this is word(t).
    pub fn word(&self) -> Vec<usize> {
        self.cells.iter().map(|&(r, _)| r).collect()
    }

    /// Des(t): `i` such that `i+1` sits strictly south and weakly west of `i`.
    pub fn descent_set(&self) -> Vec<usize> {
        (self.first_entry()..self.n())
            .filter(|&i| {
                let (r0, c0) = self.cell_of(i);
                let (r1, c1) = self.cell_of(i + 1);
                r1 > r0 && c1 <= c0
            })
            .collect()
    }

    /// True when the smallest element of `[n] \ Des(t)` is even.
    pub fn is_desarrangement(&self) -> bool {
        let des = self.descent_set();
        let m = (1..=self.n())
            .find(|i| !des.contains(i))
            .unwrap_or(self.n());
        m % 2 == 0
    }

    /// Shape occupied by the inner cells together with entries `≤ k`.
    pub fn shape_at(&self, k: usize) -> Partition {
        let mut parts = self.shape.inner.parts.clone();
        parts.resize(self.shape.outer.num_rows(), 0);
        for v in self.first_entry()..=k.min(self.n()) {
            parts[self.row_of(v) - 1] += 1;
        }
        Partition::new(parts).unwrap()
    }

    /// `t|_k`: keep the entries `≤ k`.
    pub fn restrict(&self, k: usize) -> Result<Self> {
        if k + 1 < self.first_entry() || k > self.n() {
            return Err(Error::ShapeMismatch(format!("cannot restrict to {k}")));
        }
        let outer = self.shape_at(k);
        let shape = SkewShape::new(outer, self.shape.inner.clone())?;
        let keep = k + 1 - self.first_entry();
        Ok(Self::from_cells(shape, self.cells[..keep].to_vec()))
    }

    /// The skew tableau of entries `> k`, on `outer / shape(t|_k)`.
    pub fn skew_part(&self, k: usize) -> Result<Self> {
        if k + 1 < self.first_entry() || k > self.n() {
            return Err(Error::ShapeMismatch(format!("cannot split at {k}")));
        }
        let inner = self.shape_at(k);
        let shape = SkewShape::new(self.shape.outer.clone(), inner)?;
        let skip = k + 1 - self.first_entry();
        Ok(Self::from_cells(shape, self.cells[skip..].to_vec()))
    }

    /// `t(s)`: glue `s` (on the inner shape of `self`) under the skew tableau `self`.
    pub fn extend(s: &Self, t_skew: &Self) -> Result<Self> {
        if s.outer() != t_skew.inner() || s.inner() != &Partition::empty() {
            return Err(Error::ShapeMismatch(format!(
                "{} does not match inner shape {}",
                s.outer(),
                t_skew.inner()
            )));
        }
        let shape = SkewShape::straight(t_skew.outer().clone());
        let mut cells = s.cells.clone();
        cells.extend_from_slice(&t_skew.cells);
        Ok(Self::from_cells(shape, cells))
    }

    /// `t · s_i`: swap the values `i` and `i+1`; `None` if not standard.
    pub fn swap_values(&self, i: usize) -> Option<Self> {
        if i < self.first_entry() || i + 1 > self.n() {
            return None;
        }
        let (a, b) = (self.cell_of(i), self.cell_of(i + 1));
        if a.0 == b.0 || a.1 == b.1 {
            return None;
        }
        let mut cells = self.cells.clone();
        let base = self.first_entry();
        cells.swap(i - base, i + 1 - base);
        Some(Self::from_cells(self.shape.clone(), cells))
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let s: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                format!("[{}]", s.join(","))
            })
            .collect();
        if self.is_straight() {
            write!(f, "[{}]", rows.join(","))
        } else {
            write!(f, "{}:[{}]", self.shape, rows.join(","))
        }
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_straight() {
            self.rows.serialize(s)
        } else {
            let mut st = s.serialize_struct("SkewTableau", 3)?;
            st.serialize_field("outer", self.outer())?;
            st.serialize_field("inner", self.inner())?;
            st.serialize_field("rows", &self.rows)?;
            st.end()
        }
    }
}

/// `s ⊴ t` in dominance order on tableaux of a common shape.
pub fn dominance_leq(s: &StandardTableau, t: &StandardTableau) -> Result<bool> {
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch(format!(
            "{} vs {}",
            s.shape(),
            t.shape()
        )));
    }
    Ok((s.first_entry()..=s.n()).all(|k| s.shape_at(k).dominated_by(&t.shape_at(k))))
}

/// All standard tableaux of the shape, ordered lexicographically by word.
pub fn enumerate_syt(shape: &SkewShape) -> Vec<StandardTableau> {
    fn rec(
        shape: &SkewShape,
        cur: &mut Partition,
        cells: &mut Vec<(usize, usize)>,
        out: &mut Vec<StandardTableau>,
    ) {
        if cells.len() == shape.size() {
            out.push(StandardTableau::from_cells(shape.clone(), cells.clone()));
            return;
        }
        for r in 1..=shape.outer.num_rows() {
            if cur.row(r) >= shape.outer.row(r) {
                continue;
            }
            if let Some(next) = cur.add_cell(r) {
                let saved = std::mem::replace(cur, next);
                cells.push((r, cur.row(r)));
                rec(shape, cur, cells, out);
                cells.pop();
                *cur = saved;
            }
        }
    }
    let mut out = Vec::new();
    let mut cur = shape.inner.clone();
    rec(shape, &mut cur, &mut Vec::new(), &mut out);
    out
}

/// f^λ by enumeration.
pub fn count_syt(lambda: &Partition) -> usize {
    enumerate_syt(&SkewShape::straight(lambda.clone())).len()
}

/// d^λ: number of desarrangement tableaux of shape λ.
pub fn desarrangement_count(lambda: &Partition) -> usize {
    enumerate_syt(&SkewShape::straight(lambda.clone()))
        .iter()
        .filter(|t| t.is_desarrangement())
        .count()
}

/// All μ ⊆ λ with λ/μ a horizontal strip, largest μ first (μ = λ included).
pub fn horizontal_strips(lambda: &Partition) -> Vec<Partition> {
    let k = lambda.num_rows();
    let mut out = Vec::new();
    fn rec(lambda: &Partition, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if r > lambda.num_rows() {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        for m in (lambda.row(r + 1)..=lambda.row(r)).rev() {
            cur.push(m);
            rec(lambda, r + 1, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 1, &mut Vec::with_capacity(k), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric::{derangement_count, factorial};

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn tab(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn syt_counts() {
        assert_eq!(count_syt(&part(&[1])), 1);
        assert_eq!(count_syt(&part(&[4, 1])), 4);
        assert_eq!(count_syt(&part(&[3, 2])), 5);
    }

    #[test]
    fn hook_length_matches_enumeration() {
        for n in 0..=6 {
            let mut total = 0u128;
            for lambda in Partition::all(n) {
                let f = lambda.hook_length_count();
                assert_eq!(f, count_syt(&lambda) as u128, "{lambda}");
                total += f * f;
            }
            assert_eq!(total, factorial(n) as u128);
        }
    }

    #[test]
    fn enumeration_is_lexicographic_in_word() {
        for lambda in Partition::all(5) {
            let all = enumerate_syt(&SkewShape::straight(lambda));
            assert!(all.windows(2).all(|w| w[0].word() < w[1].word()));
        }
    }

    #[test]
    fn descents() {
        assert!(StandardTableau::row_filled_straight(&part(&[4]))
            .descent_set()
            .is_empty());
        assert_eq!(
            StandardTableau::row_filled_straight(&part(&[1, 1, 1, 1])).descent_set(),
            vec![1, 2, 3]
        );
        assert_eq!(tab(&[&[1, 3], &[2, 5], &[4]]).descent_set(), vec![1, 3]);
    }

    #[test]
    fn desarrangement_counts() {
        let cases: &[(&[usize], usize)] = &[
            (&[4, 1], 1),
            (&[3, 2], 2),
            (&[3, 1, 1], 2),
            (&[2, 2, 1], 2),
            (&[2, 1, 1, 1], 2),
            (&[1, 1], 1),
            (&[5], 0),
            (&[1, 1, 1, 1, 1], 0),
        ];
        for (l, d) in cases {
            assert_eq!(desarrangement_count(&part(l)), *d, "{l:?}");
        }
    }

    #[test]
    fn desarrangement_identity() {
        for n in 0..=6 {
            let s: u64 = Partition::all(n)
                .iter()
                .map(|l| (desarrangement_count(l) * count_syt(l)) as u64)
                .sum();
            assert_eq!(s, derangement_count(n), "n={n}");
        }
    }

    #[test]
    fn strip_identity() {
        for n in 0..=6 {
            for lambda in Partition::all(n) {
                let s: usize = horizontal_strips(&lambda)
                    .iter()
                    .map(desarrangement_count)
                    .sum();
                assert_eq!(s, count_syt(&lambda), "{lambda}");
            }
        }
    }

    #[test]
    fn strips() {
        let two_two = horizontal_strips(&part(&[2, 2]));
        assert_eq!(two_two, vec![part(&[2, 2]), part(&[2, 1]), part(&[2])]);
        // (2,2)/(2) is a strip with d^(2) = 0, so only two strips carry multiplicity
        let weighted: Vec<_> = two_two
            .into_iter()
            .filter(|m| desarrangement_count(m) > 0)
            .collect();
        assert_eq!(weighted, vec![part(&[2, 2]), part(&[2, 1])]);
        for n in 0..=6 {
            let all = horizontal_strips(&part(&[n]));
            assert_eq!(all.len(), n + 1);
        }
        for n in 1..=6 {
            for lambda in Partition::all(n) {
                let strips = horizontal_strips(&lambda);
                assert!(strips.contains(&lambda));
                // brute-force oracle over all contained partitions
                let brute: usize = (0..=n)
                    .flat_map(Partition::all)
                    .filter(|mu| lambda.contains(mu))
                    .filter(|mu| {
                        let cells = SkewShape::new(lambda.clone(), mu.clone()).unwrap().cells();
                        let mut cols: Vec<usize> = cells.iter().map(|c| c.1).collect();
                        cols.sort();
                        cols.windows(2).all(|w| w[0] != w[1])
                    })
                    .count();
                assert_eq!(strips.len(), brute, "{lambda}");
            }
        }
    }

    #[test]
    fn q_contents() {
        let s = SkewShape::new(part(&[2, 1, 1]), part(&[1, 1])).unwrap();
        assert_eq!(
            s.q_content(),
            &LaurentPoly::qint(1) + &LaurentPoly::qint(-2)
        );
        for n in 0..6 {
            let mut expected = LaurentPoly::zero();
            for i in 0..n {
                expected += &LaurentPoly::qint(i as i64);
            }
            assert_eq!(SkewShape::straight(part(&[n])).q_content(), expected);
        }
        let l = part(&[3, 1]);
        assert!(SkewShape::new(l.clone(), l).unwrap().q_content().is_zero());
    }

    #[test]
    fn words() {
        assert_eq!(
            StandardTableau::row_filled_straight(&part(&[2, 1])).word(),
            vec![1, 1, 2]
        );
        assert_eq!(
            StandardTableau::row_filled_straight(&part(&[3, 2, 2])).word(),
            vec![1, 1, 1, 2, 2, 3, 3]
        );
    }

    fn example_pair() -> (StandardTableau, StandardTableau) {
        let s = tab(&[&[1, 2, 5], &[3, 4]]);
        let t = StandardTableau::new_skew(
            part(&[5, 4, 2]),
            part(&[3, 2]),
            vec![vec![7, 9], vec![8, 10], vec![6, 11]],
        )
        .unwrap();
        (s, t)
    }

    #[test]
    fn extend_example() {
        let (s, t) = example_pair();
        let ts = StandardTableau::extend(&s, &t).unwrap();
        assert_eq!(ts, tab(&[&[1, 2, 5, 7, 9], &[3, 4, 8, 10], &[6, 11]]));
        let word: String = ts.word().iter().map(|d| d.to_string()).collect();
        assert_eq!(word, "11221312123");
        let top = StandardTableau::row_filled(t.shape());
        let word: String = StandardTableau::extend(&s, &top)
            .unwrap()
            .word()
            .iter()
            .map(|d| d.to_string())
            .collect();
        assert_eq!(word, "11221112233");
        assert_eq!(ts.restrict(5).unwrap(), s);
        assert_eq!(ts.skew_part(5).unwrap(), t);
        assert!(StandardTableau::extend(&t, &s).is_err());
    }

    #[test]
    fn extend_restrict_roundtrip() {
        for lambda in Partition::all(5) {
            for t in enumerate_syt(&SkewShape::straight(lambda)) {
                for k in 0..=5 {
                    let s = t.restrict(k).unwrap();
                    let skew = t.skew_part(k).unwrap();
                    assert_eq!(StandardTableau::extend(&s, &skew).unwrap(), t);
                }
                assert_eq!(t.restrict(5).unwrap(), t);
            }
        }
    }

    #[test]
    fn dominance() {
        let t = StandardTableau::row_filled_straight(&part(&[3, 2]));
        assert!(dominance_leq(&t, &t).unwrap());
        assert!(dominance_leq(&tab(&[&[1, 3, 5], &[2, 4]]), &t).unwrap());
        assert!(!dominance_leq(&t, &tab(&[&[1, 3, 5], &[2, 4]])).unwrap());
        assert!(dominance_leq(&t, &tab(&[&[1, 2], &[3]])).is_err());
        // the two middle tableaux of SYT(3,2) are incomparable
        let a = tab(&[&[1, 2, 5], &[3, 4]]);
        let b = tab(&[&[1, 3, 4], &[2, 5]]);
        assert!(!dominance_leq(&a, &b).unwrap() && !dominance_leq(&b, &a).unwrap());
        for n in 1..=6 {
            for lambda in Partition::all(n) {
                let all = enumerate_syt(&SkewShape::straight(lambda.clone()));
                let top = StandardTableau::row_filled_straight(&lambda);
                let maxima: Vec<_> = all
                    .iter()
                    .filter(|x| all.iter().all(|y| dominance_leq(y, x).unwrap()))
                    .collect();
                assert_eq!(maxima, vec![&top]);
            }
        }
    }

    #[test]
    fn skew_row_filled_is_maximal() {
        for n in 1..=5 {
            for lambda in Partition::all(n) {
                for mu in (0..n)
                    .flat_map(Partition::all)
                    .filter(|m| lambda.contains(m))
                {
                    let shape = SkewShape::new(lambda.clone(), mu).unwrap();
                    let all = enumerate_syt(&shape);
                    let top = StandardTableau::row_filled(&shape);
                    assert!(all.contains(&top));
                    assert!(all.iter().all(|x| dominance_leq(x, &top).unwrap()));
                }
            }
        }
    }

    #[test]
    fn swaps() {
        let t = tab(&[&[1, 3, 4], &[2, 5]]);
        assert_eq!(t.swap_values(2).unwrap(), tab(&[&[1, 2, 4], &[3, 5]]));
        assert!(t.swap_values(3).is_none());
        assert!(t.swap_values(5).is_none());
    }

    #[test]
    fn validation() {
        assert!(StandardTableau::from_rows(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 2], vec![3, 4], vec![5]]).is_ok());
        assert!(StandardTableau::from_rows(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(StandardTableau::from_rows(vec![vec![1, 4], vec![2, 3]]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(parse_partition("(3,1,1)").unwrap(), part(&[3, 1, 1]));
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
    }

    #[test]
    fn json() {
        let t = tab(&[&[1, 2], &[3]]);
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[1,2],[3]]");
        assert_eq!(serde_json::to_string(&part(&[2, 1])).unwrap(), "[2,1]");
    }
}
