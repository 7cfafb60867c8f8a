//! Partitions, tableaux, Kostka and Littlewood-Richardson numbers, Pieri expansions and
//! the Weyl dimension of `S_λ C^n`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A weakly decreasing sequence of positive integers, stored without trailing zeros.
///
/// The derived order is the lexicographic order with zero padding.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("parts are not weakly decreasing: {parts:?}"));
        }
        if parts.contains(&0) {
            return invalid(format!("zero part before a positive one: {parts:?}"));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts first, so any multiset of nonnegative integers is accepted.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0) as usize;
        let cols = (0..first)
            .map(|j| self.0.iter().take_while(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition(cols)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        matches!(
            dominance_compare(self.parts(), other.parts()),
            Ok(DominanceOrd::Greater | DominanceOrd::Equal)
        )
    }

    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Concatenation `(a_1..a_p, b_1..b_q)`; requires `a_p ≥ b_1`.
    pub fn concat(&self, other: &Partition) -> Result<Partition> {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::new(v)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[macro_export]
macro_rules! partition {
    ($($x:expr),* $(,)?) => {
        $crate::combinatorics::Partition::new(vec![$($x),*]).expect("valid partition")
    };
}

pub fn lex_compare(a: &Partition, b: &Partition) -> Ordering {
    a.cmp(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominanceOrd {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// Compares prefix sums of two sequences with equal totals (shorter one zero padded).
pub fn dominance_compare(a: &[u32], b: &[u32]) -> Result<DominanceOrd> {
    let sa: u64 = a.iter().map(|&x| x as u64).sum();
    let sb: u64 = b.iter().map(|&x| x as u64).sum();
    if sa != sb {
        return invalid(format!("dominance needs equal sums, got {sa} and {sb}"));
    }
    let (mut pa, mut pb) = (0i64, 0i64);
    let (mut ge, mut le) = (true, true);
    for i in 0..a.len().max(b.len()) {
        pa += a.get(i).copied().unwrap_or(0) as i64;
        pb += b.get(i).copied().unwrap_or(0) as i64;
        ge &= pa >= pb;
        le &= pa <= pb;
    }
    Ok(match (ge, le) {
        (true, true) => DominanceOrd::Equal,
        (true, false) => DominanceOrd::Greater,
        (false, true) => DominanceOrd::Less,
        (false, false) => DominanceOrd::Incomparable,
    })
}

/// All partitions of `total` with at most `max_len` parts, each at most `max_part`,
/// in lexicographically decreasing order.
pub fn partitions(total: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
    fn rec(left: u32, max_len: usize, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        let slots = (max_len - cur.len()) as u64;
        for p in (1..=max_part.min(left)).rev() {
            if (p as u64) * slots < left as u64 {
                break;
            }
            cur.push(p);
            rec(left - p, max_len, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

/// Inner shapes `ν` such that `shape/ν` is a horizontal strip of `size` boxes.
pub fn horizontal_strip_inners(shape: &[u32], size: u32) -> Vec<Vec<u32>> {
    fn rec(shape: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == shape.len() {
            if left == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(v);
            }
            return;
        }
        let lo = shape.get(i + 1).copied().unwrap_or(0);
        let hi = shape[i];
        // capacity of the remaining rows bounds how much this row must take
        let rest: u32 = (i + 1..shape.len()).map(|r| shape[r] - shape.get(r + 1).copied().unwrap_or(0)).sum();
        for v in (lo..=hi).rev() {
            let taken = hi - v;
            if taken > left {
                break;
            }
            if left - taken > rest {
                continue;
            }
            cur.push(v);
            rec(shape, i + 1, left - taken, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(shape, 0, size, &mut Vec::new(), &mut out);
    out
}

/// Outer shapes obtained by adding a horizontal strip of `size` boxes, at most `max_len` rows.
pub fn horizontal_strip_outers(inner: &[u32], size: u32, max_len: usize) -> Vec<Vec<u32>> {
    fn rec(inner: &[u32], rows: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == rows {
            if left == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(v);
            }
            return;
        }
        let base = inner.get(i).copied().unwrap_or(0);
        let cap = if i == 0 { base + left } else { inner[i - 1] };
        for v in (base..=cap.min(base + left)).rev() {
            cur.push(v);
            rec(inner, rows, i + 1, left - (v - base), cur, out);
            cur.pop();
        }
    }
    let rows = (inner.len() + 1).min(max_len.max(inner.len()));
    let mut out = Vec::new();
    rec(inner, rows, 0, size, &mut Vec::new(), &mut out);
    out
}

/// Number of semistandard tableaux of shape `λ` and content `μ`, with a reusable memo.
#[derive(Default)]
pub struct KostkaCache {
    memo: FxHashMap<(Vec<u32>, Vec<u32>), u128>,
}

impl KostkaCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, lambda: &Partition, mu: &[u32]) -> u128 {
        let mut content: Vec<u32> = mu.iter().copied().filter(|&x| x > 0).collect();
        content.sort_unstable_by(|a, b| b.cmp(a));
        if lambda.size() != content.iter().sum::<u32>() {
            return 0;
        }
        self.rec(lambda.parts(), &content)
    }

    fn rec(&mut self, shape: &[u32], content: &[u32]) -> u128 {
        if content.is_empty() {
            return u128::from(shape.is_empty());
        }
        if shape.len() > content.len() {
            return 0;
        }
        if content.len() == 1 {
            return u128::from(shape.len() == 1);
        }
        if !matches!(dominance_compare(shape, content), Ok(DominanceOrd::Greater | DominanceOrd::Equal)) {
            return 0;
        }
        let key = (shape.to_vec(), content.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (last, rest) = content.split_last().expect("nonempty");
        let mut total = 0u128;
        for inner in horizontal_strip_inners(shape, *last) {
            total += self.rec(&inner, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

pub fn kostka(lambda: &Partition, mu: &[u32]) -> u128 {
    KostkaCache::new().get(lambda, mu)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tableau {
    pub shape: Partition,
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| b > a));
        let shape_ok = self.rows.iter().map(|r| r.len() as u32).eq(self.shape.parts().iter().copied());
        rows_ok && cols_ok && shape_ok
    }

    /// Multiplicity of each value `1..=k`.
    pub fn content(&self, k: usize) -> Vec<u32> {
        let mut c = vec![0; k];
        for &v in self.rows.iter().flatten() {
            c[v as usize - 1] += 1;
        }
        c
    }

    /// Sorted column indices occupied by `value`.
    pub fn columns_of(&self, value: u32) -> Vec<usize> {
        let mut cols: Vec<usize> = self
            .rows
            .iter()
            .flat_map(|r| r.iter().enumerate().filter(|(_, &v)| v == value).map(|(j, _)| j))
            .collect();
        cols.sort_unstable();
        cols
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Every semistandard filling of `shape` in which value `i+1` occurs `content[i]` times.
/// Cells are filled row by row, left to right, smallest admissible value first.
pub fn enumerate_ssyt(shape: &Partition, content: &[u32]) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.size() != content.iter().sum::<u32>() {
        return out;
    }
    let k = content.len() as u32;
    let col_len: Vec<u32> = shape.conjugate().parts().to_vec();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&p| Vec::with_capacity(p as usize)).collect();
    let mut left = content.to_vec();
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| (0..p as usize).map(move |c| (r, c)))
        .collect();

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u32>>,
        left: &mut Vec<u32>,
        col_len: &[u32],
        k: u32,
        shape: &Partition,
        out: &mut Vec<Tableau>,
    ) {
        if idx == cells.len() {
            out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        let (r, c) = cells[idx];
        let lo_left = if c > 0 { rows[r][c - 1] } else { 1 };
        let lo_up = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        let below = col_len[c] - r as u32 - 1;
        for v in lo_left.max(lo_up)..=k {
            if v + below > k {
                break;
            }
            if left[v as usize - 1] == 0 {
                continue;
            }
            left[v as usize - 1] -= 1;
            rows[r].push(v);
            rec(idx + 1, cells, rows, left, col_len, k, shape, out);
            rows[r].pop();
            left[v as usize - 1] += 1;
        }
    }
    rec(0, &cells, &mut rows, &mut left, &col_len, k, shape, &mut out);
    out
}

/// Semistandard tableaux of content `k × d` in which no two distinct values occupy
/// exactly the same set of columns.
pub fn ssyt_count_column_condition(shape: &Partition, k: usize, d: u32) -> u64 {
    enumerate_ssyt(shape, &vec![d; k])
        .iter()
        .filter(|t| {
            let mut sets: Vec<Vec<usize>> = (1..=k as u32).map(|v| t.columns_of(v)).collect();
            sets.sort();
            sets.windows(2).all(|w| w[0] != w[1])
        })
        .count() as u64
}

/// Littlewood-Richardson coefficient `c^ν_{π μ}`, counted as LR skew tableaux of shape `ν/π`
/// and content `μ`.
pub fn lr_coefficient(pi: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != pi.size() + mu.size() || !nu.contains(pi) || !nu.contains(mu) {
        return 0;
    }
    let rows = nu.len();
    let cur = pi.padded(rows);
    let prev = vec![0u32; rows];

    fn add_letter(cur: &[u32], nu: &[u32], mu: &[u32], letter: usize, prev: &[u32]) -> u64 {
        if letter == mu.len() {
            return u64::from(cur == nu);
        }
        let mut counts = vec![0u32; nu.len()];
        let mut total = 0;
        rows_rec(cur, nu, mu, letter, prev, 0, mu[letter], 0, 0, &mut counts, &mut total);
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn rows_rec(
        cur: &[u32],
        nu: &[u32],
        mu: &[u32],
        letter: usize,
        prev: &[u32],
        r: usize,
        left: u32,
        cum: u32,
        prev_cum: u32,
        counts: &mut Vec<u32>,
        total: &mut u64,
    ) {
        if r == nu.len() {
            if left == 0 {
                let next: Vec<u32> = cur.iter().zip(counts.iter()).map(|(a, b)| a + b).collect();
                *total += add_letter(&next, nu, mu, letter + 1, counts);
            }
            return;
        }
        let mut cap = nu[r] - cur[r];
        if r > 0 {
            cap = cap.min(cur[r - 1] - cur[r]);
        }
        cap = cap.min(left);
        for c in (0..=cap).rev() {
            // lattice word: letters `letter` up to row r never outnumber letters `letter-1` in rows above
            if letter > 0 && cum + c > prev_cum {
                continue;
            }
            counts[r] = c;
            rows_rec(cur, nu, mu, letter, prev, r + 1, left - c, cum + c, prev_cum + prev[r], counts, total);
        }
        counts[r] = 0;
    }

    add_letter(&cur, &nu.padded(rows), mu.parts(), 0, &prev)
}

/// Pieri rule: every `ν ⊃ λ` with `ν/λ` a horizontal strip of `d` boxes and at most `max_length` rows.
pub fn pieri_expand(lambda: &Partition, d: u32, max_length: usize) -> Decomposition {
    let mut dec = Decomposition::default();
    for v in horizontal_strip_outers(lambda.parts(), d, max_length) {
        dec.add(Partition(v), 1);
    }
    dec
}

/// Dimension of `S_λ C^n` by the hook-content formula.
pub fn weyl_dimension(lambda: &Partition, n: usize) -> Result<BigUint> {
    if lambda.len() > n {
        return invalid(format!("length of {lambda} exceeds n = {n}"));
    }
    let conj = lambda.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            num *= (n + j - i) as u64;
            let hook = (row as usize - j) + (conj.part(j) as usize - i) - 1;
            den *= hook as u64;
        }
    }
    Ok(num / den)
}

/// A multiset of irreducibles, stored sorted lexicographically descending.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Decomposition {
    entries: Vec<DecompEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompEntry {
    pub partition: Partition,
    pub mult: u64,
}

impl Decomposition {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Partition, u64)>) -> Self {
        let mut d = Decomposition::default();
        for (p, m) in pairs {
            d.add(p, m);
        }
        d
    }

    pub fn add(&mut self, p: Partition, mult: u64) {
        if mult == 0 {
            return;
        }
        match self.entries.binary_search_by(|e| p.cmp(&e.partition)) {
            Ok(i) => self.entries[i].mult += mult,
            Err(i) => self.entries.insert(i, DecompEntry { partition: p, mult }),
        }
    }

    pub fn mult(&self, p: &Partition) -> u64 {
        self.entries
            .binary_search_by(|e| p.cmp(&e.partition))
            .map(|i| self.entries[i].mult)
            .unwrap_or(0)
    }

    pub fn entries(&self) -> &[DecompEntry] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.entries.iter().map(|e| (&e.partition, e.mult))
    }

    pub fn partitions(&self) -> Vec<Partition> {
        self.entries.iter().map(|e| e.partition.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total number of irreducible summands counted with multiplicity.
    pub fn total_mult(&self) -> u64 {
        self.entries.iter().map(|e| e.mult).sum()
    }

    /// `Σ mult · dim S_λ C^n` over entries that fit in `n` rows.
    pub fn dimension(&self, n: usize) -> BigUint {
        self.entries
            .iter()
            .filter(|e| e.partition.len() <= n)
            .map(|e| weyl_dimension(&e.partition, n).expect("length checked") * e.mult)
            .sum()
    }

    /// Keeps entries with at most `n` rows.
    pub fn truncate_length(&self, n: usize) -> Decomposition {
        Decomposition { entries: self.entries.iter().filter(|e| e.partition.len() <= n).cloned().collect() }
    }

    /// Multiplicity-wise difference `self − other`, failing if it goes negative.
    pub fn minus(&self, other: &Decomposition) -> Result<Decomposition> {
        let mut map: BTreeMap<Partition, i128> = self.iter().map(|(p, m)| (p.clone(), m as i128)).collect();
        for (p, m) in other.iter() {
            *map.entry(p.clone()).or_default() -= m as i128;
        }
        if let Some((p, m)) = map.iter().find(|(_, &m)| m < 0) {
            return invalid(format!("difference is negative at {p}: {m}"));
        }
        Ok(Decomposition::from_pairs(map.into_iter().map(|(p, m)| (p, m as u64))))
    }

    /// True when every multiplicity of `self` is at most the one in `other`.
    pub fn is_sub_of(&self, other: &Decomposition) -> bool {
        self.iter().all(|(p, m)| other.mult(p) >= m)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.mult > 1 {
                write!(f, "{}", e.mult)?;
            }
            write!(f, "S{}", e.partition)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lex_examples() {
        assert_eq!(lex_compare(&p(&[7, 3, 2]), &p(&[6, 2, 2, 2])), Ordering::Greater);
        assert_eq!(lex_compare(&p(&[4, 2]), &p(&[4, 2])), Ordering::Equal);
        assert_eq!(lex_compare(&p(&[6, 6, 6, 2]), &p(&[6, 6, 4, 4])), Ordering::Greater);
        assert_eq!(lex_compare(&p(&[3]), &p(&[3, 1])), Ordering::Less);
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(dominance_compare(&[3, 0, 0], &[1, 1, 1]).unwrap(), DominanceOrd::Greater);
        assert_eq!(dominance_compare(&[2, 2, 0], &[3, 0, 1]).unwrap(), DominanceOrd::Incomparable);
        assert_eq!(dominance_compare(&[1, 1, 1], &[3]).unwrap(), DominanceOrd::Less);
        assert!(dominance_compare(&[1, 1], &[3]).is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert_eq!("7,3,2".parse::<Partition>().unwrap(), p(&[7, 3, 2]));
        assert_eq!(serde_json::to_string(&p(&[7, 3, 2])).unwrap(), "[7,3,2]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn partition_listing() {
        let all = partitions(5, 5, 5);
        assert_eq!(all.len(), 7);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(partitions(6, 2, 6).len(), 4);
        assert_eq!(partitions(0, 3, 3), vec![Partition::empty()]);
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(enumerate_ssyt(&p(&[1, 1, 1]), &[1, 1, 1]).len(), 1);
        assert_eq!(enumerate_ssyt(&p(&[2, 1]), &[1, 1, 1]).len(), 2);
        let t = enumerate_ssyt(&p(&[6, 6, 6, 6, 6]), &[5; 6]);
        assert_eq!(t.len(), 1);
        let expect = vec![
            vec![1, 1, 1, 1, 1, 2],
            vec![2, 2, 2, 2, 3, 3],
            vec![3, 3, 3, 4, 4, 4],
            vec![4, 4, 5, 5, 5, 5],
            vec![5, 6, 6, 6, 6, 6],
        ];
        assert_eq!(t[0].rows, expect);
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(kostka(&p(&[3, 2]), &[3, 2]), 1);
        assert_eq!(kostka(&p(&[1, 1]), &[2]), 0);
        // weight order does not matter
        assert_eq!(kostka(&p(&[3, 2, 1]), &[1, 2, 3]), kostka(&p(&[3, 2, 1]), &[3, 2, 1]));
        assert_eq!(kostka(&p(&[3, 2, 1]), &[1, 1, 1, 1, 1, 1]), 16);
    }

    #[test]
    fn lr_examples() {
        // two rows
        for a in 0..5u32 {
            for b in 0..5u32 {
                for t in 0..=a.min(b) {
                    let s = a + b - t;
                    assert_eq!(lr_coefficient(&p(&[a]), &p(&[b]), &p(&[s, t])), 1);
                }
            }
        }
        for d in 2..5u32 {
            for j in 0..=d {
                let nu = Partition::new(vec![d * d - j, d, j]).unwrap();
                assert_eq!(lr_coefficient(&p(&[d, d]), &p(&[d * d - d]), &nu), 1, "d={d} j={j}");
            }
        }
        assert_eq!(lr_coefficient(&p(&[4, 4, 4]), &p(&[4, 4, 4]), &p(&[5, 5, 5, 5, 3, 1])), 0);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_expand(&Partition::empty(), 3, 5).partitions(), vec![p(&[3])]);
        let out = pieri_expand(&p(&[4, 4, 4]), 3, 4);
        assert_eq!(out.mult(&p(&[5, 4, 4, 2])), 1);
        assert_eq!(lr_coefficient(&p(&[4, 4, 4]), &p(&[3]), &p(&[5, 4, 4, 2])), 1);
        for nu in pieri_expand(&p(&[3, 3]), 3, 10).partitions() {
            assert_eq!(lr_coefficient(&p(&[3, 3]), &p(&[3]), &nu), 1);
        }
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(weyl_dimension(&p(&[5, 5, 5, 5, 3, 1]), 6).unwrap(), BigUint::from(1134u32));
        assert_eq!(weyl_dimension(&p(&[6, 6, 4, 4, 4, 4, 4, 4]), 8).unwrap(), BigUint::from(336u32));
        assert_eq!(weyl_dimension(&p(&[3]), 4).unwrap(), BigUint::from(20u32));
        assert!(weyl_dimension(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn strips_roundtrip() {
        let outers = horizontal_strip_outers(&[3, 1], 2, 3);
        for o in &outers {
            let inners = horizontal_strip_inners(o, 2);
            assert!(inners.contains(&vec![3, 1]), "{o:?}");
        }
        assert_eq!(horizontal_strip_inners(&[2, 2], 2), vec![vec![2]]);
    }

    #[test]
    fn column_condition_small() {
        assert_eq!(ssyt_count_column_condition(&p(&[2, 2]), 2, 2), 0);
        assert_eq!(ssyt_count_column_condition(&p(&[6]), 2, 3), 1);
        assert_eq!(ssyt_count_column_condition(&p(&[3, 3]), 2, 3), 0);
    }

    #[test]
    fn decomposition_bookkeeping() {
        let mut d = Decomposition::default();
        d.add(p(&[2, 2]), 1);
        d.add(p(&[4]), 1);
        d.add(p(&[2, 2]), 1);
        assert_eq!(d.partitions(), vec![p(&[4]), p(&[2, 2])]);
        assert_eq!(d.mult(&p(&[2, 2])), 2);
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"[{"partition":[4],"mult":1},{"partition":[2,2],"mult":2}]"#);
        assert_eq!(d.to_string(), "S(4) + 2S(2,2)");
    }
}
