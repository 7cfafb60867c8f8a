//! Isotypic decompositions of `S^k(S^d V)`, `S^k(Λ^d V)` and `Λ^k(Λ^d V)`.
//!
//! Weight multiplicities are counted by a dynamic program that peels off one coordinate
//! at a time; decompositions follow by a triangular solve against Kostka numbers, or, for
//! a single partition, by the Weyl alternating sum over weight multiplicities.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{partitions, Decomposition, KostkaCache, Partition};
use crate::config::Config;
use crate::error::{invalid, Error, Result};
use crate::symalg::binomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Space {
    /// `S^k(S^d V)`
    SymSym,
    /// `S^k(Λ^d V)`
    SymExt,
    /// `Λ^k(Λ^d V)`
    ExtExt,
}

impl Space {
    fn max_exponent(self, d: u32) -> u32 {
        match self {
            Space::SymSym => d,
            Space::SymExt | Space::ExtExt => 1,
        }
    }

    fn distinct(self) -> bool {
        self == Space::ExtExt
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::SymSym => "sym-sym",
            Space::SymExt => "sym-ext",
            Space::ExtExt => "ext-ext",
        })
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "sym-sym" => Ok(Space::SymSym),
            "sym-ext" => Ok(Space::SymExt),
            "ext-ext" => Ok(Space::ExtExt),
            other => Err(Error::Parse(format!("unknown space {other:?}; expected sym-sym, sym-ext or ext-ext"))),
        }
    }
}

/// A group of `s` basis vectors that agree on the coordinates peeled so far and still
/// need `e` units from the remaining ones.
type Block = (u32, u32);

/// Memoized weight-space dimensions for one space.
#[derive(Debug)]
pub struct WeightCounter {
    space: Space,
    memo: FxHashMap<(Vec<Block>, Vec<u32>), u128>,
    splits: FxHashMap<(u32, u32, u32), Vec<(u32, Vec<Block>)>>,
}

impl WeightCounter {
    pub fn new(space: Space) -> Self {
        WeightCounter { space, memo: FxHashMap::default(), splits: FxHashMap::default() }
    }

    /// Dimension of the weight-`mu` space of the `k`-th power of the degree-`d` space,
    /// with no constraint on the number of variables beyond `mu`.
    pub fn count(&mut self, k: usize, d: u32, mu: &[u32]) -> Result<u128> {
        if mu.iter().sum::<u32>() != k as u32 * d {
            return Ok(0);
        }
        if k == 0 {
            return Ok(1);
        }
        if d == 0 {
            return Ok(match self.space {
                Space::ExtExt => u128::from(k == 1),
                _ => 1,
            });
        }
        let mut rem: Vec<u32> = mu.iter().copied().filter(|&x| x > 0).collect();
        rem.sort_unstable();
        self.count_state(vec![(k as u32, d)], rem)
    }

    fn split_choices(&mut self, s: u32, e: u32) -> Vec<(u32, Vec<Block>)> {
        let cap = self.space.max_exponent(e).min(e);
        let key = (s, e, cap);
        if let Some(v) = self.splits.get(&key) {
            return v.clone();
        }
        let distinct = self.space.distinct();
        let mut out = Vec::new();
        // counts c_a of vectors taking a units here, a = 0..=cap
        fn rec(a: u32, left: u32, cap: u32, e: u32, distinct: bool, cur: &mut Vec<(u32, u32)>, out: &mut Vec<(u32, Vec<Block>)>) {
            if a == cap {
                let c = left;
                if distinct && e == a && c > 1 {
                    return;
                }
                if c > 0 {
                    cur.push((a, c));
                }
                let taken = cur.iter().map(|&(a, c)| a * c).sum();
                let mut blocks: Vec<Block> = cur.iter().filter(|&&(a, _)| a < e).map(|&(a, c)| (c, e - a)).collect();
                blocks.sort_unstable();
                out.push((taken, blocks));
                if c > 0 {
                    cur.pop();
                }
                return;
            }
            for c in (0..=left).rev() {
                if c > 0 {
                    cur.push((a, c));
                }
                rec(a + 1, left - c, cap, e, distinct, cur, out);
                if c > 0 {
                    cur.pop();
                }
            }
        }
        rec(0, s, cap, e, distinct, &mut Vec::new(), &mut out);
        self.splits.insert(key, out.clone());
        out
    }

    fn count_state(&mut self, state: Vec<Block>, rem: Vec<u32>) -> Result<u128> {
        if rem.is_empty() {
            return Ok(u128::from(state.is_empty()));
        }
        let needed: u64 = state.iter().map(|&(s, e)| s as u64 * e as u64).sum();
        if needed != rem.iter().map(|&x| x as u64).sum::<u64>() {
            return Ok(0);
        }
        if rem.len() == 1 {
            let ok = state
                .iter()
                .all(|&(s, e)| e <= self.space.max_exponent(e) && !(self.space.distinct() && s > 1));
            return Ok(u128::from(ok));
        }
        let key = (state, rem);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let (state, rem) = key;
        let m = rem[0];
        let mut acc: FxHashMap<(Vec<Block>, u32), u128> = FxHashMap::default();
        acc.insert((Vec::new(), 0), 1);
        for &(s, e) in &state {
            let choices = self.split_choices(s, e);
            let mut next: FxHashMap<(Vec<Block>, u32), u128> = FxHashMap::default();
            for ((blocks, t), c) in acc {
                for (taken, nb) in &choices {
                    if t + taken > m {
                        continue;
                    }
                    let mut merged = blocks.clone();
                    merged.extend_from_slice(nb);
                    *next.entry((merged, t + taken)).or_insert(0) += c;
                }
            }
            acc = next;
        }
        let rest = rem[1..].to_vec();
        let mut total: u128 = 0;
        for ((mut blocks, t), c) in acc {
            if t != m {
                continue;
            }
            blocks.sort_unstable();
            let sub = self.count_state(blocks, rest.clone())?;
            let term = c.checked_mul(sub).ok_or_else(|| Error::Invalid("weight multiplicity overflows u128".into()))?;
            total = total.checked_add(term).ok_or_else(|| Error::Invalid("weight multiplicity overflows u128".into()))?;
        }
        self.memo.insert((state, rem), total);
        Ok(total)
    }
}

fn check_space(space: Space, d: u32, n: usize) -> Result<()> {
    if space != Space::SymSym && d as usize > n {
        return invalid(format!("Λ^{d} of a {n}-dimensional space is zero"));
    }
    Ok(())
}

/// Dimension of the weight-`mu` space of `space` with parameters `k, d, n`.
pub fn weight_multiplicity(space: Space, k: usize, d: u32, n: usize, mu: &[u32]) -> Result<u128> {
    check_space(space, d, n)?;
    if mu.len() > n && mu[n..].iter().any(|&x| x > 0) {
        return Ok(0);
    }
    WeightCounter::new(space).count(k, d, mu)
}

pub fn ambient_dimension(space: Space, k: usize, d: u32, n: usize) -> BigUint {
    let inner = match space {
        Space::SymSym => binomial(n as u64 + d as u64 - 1, d as u64),
        Space::SymExt | Space::ExtExt => binomial(n as u64, d as u64),
    };
    let inner: u64 = inner.try_into().unwrap_or(u64::MAX);
    match space {
        Space::SymSym | Space::SymExt => binomial(inner + k as u64 - 1, k as u64),
        Space::ExtExt => binomial(inner, k as u64),
    }
}

/// Largest part a module of `space` can have.
fn max_first_part(space: Space, k: usize, d: u32) -> u32 {
    match space {
        Space::SymSym => k as u32 * d,
        Space::SymExt | Space::ExtExt => k as u32,
    }
}

/// Full decomposition by the triangular solve over all partitions of `kd` with at most `n`
/// parts, processed in lex-descending order.
pub fn decompose(space: Space, k: usize, d: u32, n: usize, cfg: &Config) -> Result<Decomposition> {
    check_space(space, d, n)?;
    let total = k as u32 * d;
    let len = n.min(total as usize);
    let cands = partitions(total, len, max_first_part(space, k, d));
    if cands.len() > cfg.max_candidates {
        return Err(Error::Budget {
            what: format!("candidate list for {space} k={k} d={d} n={n}; use decompose_at"),
            size: cands.len() as u128,
            cap: cfg.max_candidates as u128,
        });
    }
    Ok(triangular_solve(space, k, d, &cands)?.0)
}

/// Triangular solve on a dominance up-closed candidate list sorted lex-descending.
fn triangular_solve(space: Space, k: usize, d: u32, cands: &[Partition]) -> Result<(Decomposition, Vec<u64>)> {
    let mut counter = WeightCounter::new(space);
    let mut kostka = KostkaCache::new();
    let mut found: Vec<(Partition, u64)> = Vec::new();
    let mut mults = Vec::with_capacity(cands.len());
    for lam in cands {
        let wm = counter.count(k, d, lam.parts())?;
        let mut rest: i128 = wm as i128;
        for (mu, m) in &found {
            if mu.dominates(lam) {
                rest -= (*m as i128) * kostka.get(mu, lam.parts()) as i128;
            }
        }
        if rest < 0 {
            return Err(Error::Linalg(format!("negative multiplicity {rest} at {lam}")));
        }
        let r = rest as u64;
        if r > 0 {
            found.push((lam.clone(), r));
        }
        mults.push(r);
    }
    Ok((Decomposition::from_pairs(found), mults))
}

/// All partitions dominating `lambda` with at most `n` parts and first part at most `max_part`,
/// lex-descending.
pub fn dominating_partitions(lambda: &Partition, n: usize, max_part: u32) -> Vec<Partition> {
    let total = lambda.size();
    let lam = lambda.padded(n.max(lambda.len()));
    let mut prefix = vec![0u32; lam.len() + 1];
    for i in 0..lam.len() {
        prefix[i + 1] = prefix[i] + lam[i];
    }
    let mut out = Vec::new();
    fn rec(i: usize, n: usize, left: u32, maxp: u32, sum: u32, prefix: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::new(cur.clone()).expect("partition"));
            return;
        }
        if i == n {
            return;
        }
        let hi = maxp.min(left);
        for p in (1..=hi).rev() {
            let s = sum + p;
            if s < prefix[(i + 1).min(prefix.len() - 1)] {
                break;
            }
            // the rest must fit in the remaining rows
            if (left - p) as u64 > p as u64 * (n - i - 1) as u64 {
                break;
            }
            cur.push(p);
            rec(i + 1, n, left - p, p, s, prefix, cur, out);
            cur.pop();
        }
    }
    rec(0, n, total, max_part, 0, &prefix, &mut Vec::new(), &mut out);
    out
}

/// Up-sets at most this large use the triangular solve in [`decompose_at`].
pub const TRIANGULAR_UPSET_LIMIT: usize = 300;

/// Multiplicity of `S_λ` in `space`.
pub fn decompose_at(space: Space, k: usize, d: u32, n: usize, lambda: &Partition, cfg: &Config) -> Result<u64> {
    check_space(space, d, n)?;
    if lambda.size() != k as u32 * d {
        return invalid(format!("{lambda} is not a partition of {}", k as u32 * d));
    }
    if lambda.len() > n {
        return Ok(0);
    }
    let upset = dominating_partitions(lambda, n, max_first_part(space, k, d));
    if upset.len() <= TRIANGULAR_UPSET_LIMIT.min(cfg.max_candidates) {
        decompose_at_triangular(space, k, d, n, lambda)
    } else {
        decompose_at_alternating(space, k, d, lambda)
    }
}

/// Triangular solve restricted to the dominance up-set of `λ`.
pub fn decompose_at_triangular(space: Space, k: usize, d: u32, n: usize, lambda: &Partition) -> Result<u64> {
    if lambda.len() > n {
        return Ok(0);
    }
    let upset = dominating_partitions(lambda, n, max_first_part(space, k, d));
    let (_, mults) = triangular_solve(space, k, d, &upset)?;
    let pos = upset.iter().position(|p| p == lambda).expect("λ dominates itself");
    Ok(mults[pos])
}

/// `Σ_{w ∈ S_L} sgn(w) · dim W_{λ+ρ−wρ}` with `L` the length of `λ`.
pub fn decompose_at_alternating(space: Space, k: usize, d: u32, lambda: &Partition) -> Result<u64> {
    let l = lambda.len();
    if l == 0 {
        return Ok(u64::from(k == 0 || d == 0));
    }
    let lam = lambda.parts();
    let mut counter = WeightCounter::new(space);
    let mut memo: FxHashMap<Vec<u32>, u128> = FxHashMap::default();
    let mut used = vec![false; l];
    let mut weight = vec![0u32; l];
    let mut total: i128 = 0;

    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        sign: i128,
        lam: &[u32],
        used: &mut [bool],
        weight: &mut [u32],
        counter: &mut WeightCounter,
        memo: &mut FxHashMap<Vec<u32>, u128>,
        k: usize,
        d: u32,
        total: &mut i128,
    ) -> Result<()> {
        let l = lam.len();
        if i == l {
            let mut key = weight.to_vec();
            key.sort_unstable();
            let wm = match memo.get(&key) {
                Some(&v) => v,
                None => {
                    let v = counter.count(k, d, &key)?;
                    memo.insert(key, v);
                    v
                }
            };
            *total += sign * wm as i128;
            return Ok(());
        }
        // coordinate i of λ + ρ − wρ is λ_i − i + w(i) with 0-based positions
        let mut inversions_before = 0i128;
        for j in 0..l {
            if used[j] {
                continue;
            }
            let v = lam[i] as i64 - i as i64 + j as i64;
            if v >= 0 {
                used[j] = true;
                weight[i] = v as u32;
                let s = if inversions_before % 2 == 0 { sign } else { -sign };
                rec(i + 1, s, lam, used, weight, counter, memo, k, d, total)?;
                used[j] = false;
            }
            inversions_before += 1;
        }
        Ok(())
    }
    rec(0, 1, lam, &mut used, &mut weight, &mut counter, &mut memo, k, d, &mut total)?;
    if total < 0 {
        return Err(Error::Linalg(format!("negative multiplicity {total} at {lambda}")));
    }
    Ok(total as u64)
}

/// The lexicographically least partition with positive multiplicity and at most
/// `bound_length` parts, with its multiplicity.
pub fn lex_smallest_module(space: Space, k: usize, d: u32, bound_length: usize, cfg: &Config) -> Result<Option<(Partition, u64)>> {
    check_space(space, d, bound_length)?;
    let mut cands = partitions(k as u32 * d, bound_length, max_first_part(space, k, d));
    cands.reverse();
    for lam in cands {
        let m = decompose_at(space, k, d, bound_length, &lam, cfg)?;
        if m > 0 {
            return Ok(Some((lam, m)));
        }
    }
    Ok(None)
}

/// Adds `u` to each of the first `k` parts.
pub fn shift_partition(lambda: &Partition, k: usize, u: u32) -> Result<Partition> {
    if lambda.len() > k {
        return invalid(format!("{lambda} has more than {k} parts"));
    }
    Partition::new(lambda.padded(k).into_iter().map(|x| x + u).collect())
}

/// Compares `mult(S_λ, S^k(S^d))` with `mult(S_{λ+(u^k)}, S^k(S^{d+u}))`.
pub fn check_shift(lambda: &Partition, k: usize, d: u32, u: u32, n: usize, cfg: &Config) -> Result<bool> {
    if !u.is_multiple_of(2) {
        return invalid(format!("shift {u} is odd"));
    }
    if n < k {
        return invalid(format!("need n ≥ k, got n = {n}, k = {k}"));
    }
    let shifted = shift_partition(lambda, k, u)?;
    let a = decompose_at(Space::SymSym, k, d, n, lambda, cfg)?;
    let b = decompose_at(Space::SymSym, k, d + u, n, &shifted, cfg)?;
    Ok(a == b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    /// `"even"` for `S^k(S^{2l}) ↔ S^k(Λ^{2l})`, `"odd-as-printed"` for
    /// `S^k(S^{2l+1}) ↔ Λ^k(Λ^{2l})`.
    pub identity: &'static str,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

/// Evaluates the transpose duality between symmetric and exterior plethysms at `λ`. The
/// identity is chosen by `|λ|`: `2lk` selects the even one, `(2l+1)k` the odd one, whose
/// right side is taken literally and so has degree `2lk`.
pub fn check_duality(lambda: &Partition, k: usize, l: u32, n: usize, cfg: &Config) -> Result<DualityReport> {
    if n < lambda.size() as usize {
        return invalid(format!("need n ≥ |λ| = {}", lambda.size()));
    }
    let lt = lambda.conjugate();
    let size = lambda.size();
    let two_l = 2 * l;
    if size == k as u32 * two_l {
        let lhs = decompose_at(Space::SymSym, k, two_l, n, lambda, cfg)?;
        let rhs = decompose_at(Space::SymExt, k, two_l, n, &lt, cfg)?;
        Ok(DualityReport { identity: "even", lhs, rhs, holds: lhs == rhs })
    } else if size == k as u32 * (two_l + 1) {
        let lhs = decompose_at(Space::SymSym, k, two_l + 1, n, lambda, cfg)?;
        let rhs = if lt.size() == k as u32 * two_l {
            decompose_at(Space::ExtExt, k, two_l, n, &lt, cfg)?
        } else {
            0
        };
        Ok(DualityReport { identity: "odd-as-printed", lhs, rhs, holds: lhs == rhs })
    } else {
        invalid(format!("|λ| = {size} matches neither {} nor {}", k as u32 * two_l, k as u32 * (two_l + 1)))
    }
}

/// With `d` even and both pieces present, decides whether the concatenation `(a, b)` occurs
/// in `S^{k+l}(S^d V)`. Failing hypotheses are reported as errors.
pub fn check_concat(a: &Partition, b: &Partition, k: usize, l: usize, d: u32, n: usize, cfg: &Config) -> Result<bool> {
    if !d.is_multiple_of(2) {
        return invalid(format!("hypothesis fails: d = {d} is odd"));
    }
    if n < k + l {
        return invalid(format!("hypothesis fails: n = {n} < k + l = {}", k + l));
    }
    let joined = a.concat(b).map_err(|_| Error::Invalid(format!("hypothesis fails: last part of {a} is below the first part of {b}")))?;
    if decompose_at(Space::SymSym, k, d, n, a, cfg)? == 0 {
        return invalid(format!("hypothesis fails: {a} does not occur in S^{k}(S^{d})"));
    }
    if decompose_at(Space::SymSym, l, d, n, b, cfg)? == 0 {
        return invalid(format!("hypothesis fails: {b} does not occur in S^{l}(S^{d})"));
    }
    Ok(decompose_at(Space::SymSym, k + l, d, n, &joined, cfg)? > 0)
}

/// A qualifying pair whose concatenation is missing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConcatFailure {
    pub a: Partition,
    pub b: Partition,
    pub k: usize,
    pub l: usize,
}

/// Searches all qualifying pairs with `|a| + |b| ≤ max_size` for degree `d` (any parity)
/// and returns those whose concatenation does not occur.
pub fn concat_failures(d: u32, max_size: u32, cfg: &Config) -> Result<Vec<ConcatFailure>> {
    let mut out = Vec::new();
    let mut present: FxHashMap<usize, Decomposition> = FxHashMap::default();
    let max_k = (max_size / d) as usize;
    for k in 1..max_k {
        present.insert(k, decompose(Space::SymSym, k, d, k * d as usize, cfg)?);
    }
    for k in 1..max_k {
        for l in 1..max_k {
            if (k + l) as u32 * d > max_size {
                continue;
            }
            for (a, _) in present[&k].iter() {
                for (b, _) in present[&l].iter() {
                    let Ok(joined) = a.concat(b) else { continue };
                    let n = joined.len().max(k + l);
                    if decompose_at(Space::SymSym, k + l, d, n, &joined, cfg)? == 0 {
                        out.push(ConcatFailure { a: a.clone(), b: b.clone(), k, l });
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::weyl_dimension;
    use crate::partition;

    fn cfg() -> Config {
        Config::default()
    }

    /// Direct enumeration of multisets (or sets) of basis vectors.
    fn brute(space: Space, k: usize, d: u32, n: usize, mu: &[u32]) -> u128 {
        let basis: Vec<Vec<u32>> = crate::symalg::exp_vecs(d, n)
            .into_iter()
            .map(|e| e.exps().iter().map(|&x| x as u32).collect::<Vec<u32>>())
            .filter(|v| space == Space::SymSym || v.iter().all(|&x| x <= 1))
            .collect();
        fn rec(start: usize, left: usize, basis: &[Vec<u32>], rem: &mut Vec<i64>, distinct: bool) -> u128 {
            if left == 0 {
                return u128::from(rem.iter().all(|&x| x == 0));
            }
            let mut t = 0;
            for i in start..basis.len() {
                for (r, &a) in rem.iter_mut().zip(&basis[i]) {
                    *r -= a as i64;
                }
                if rem.iter().all(|&x| x >= 0) {
                    t += rec(if distinct { i + 1 } else { i }, left - 1, basis, rem, distinct);
                }
                for (r, &a) in rem.iter_mut().zip(&basis[i]) {
                    *r += a as i64;
                }
            }
            t
        }
        let mut rem: Vec<i64> = mu.iter().map(|&x| x as i64).collect();
        rec(0, k, &basis, &mut rem, space == Space::ExtExt)
    }

    #[test]
    fn weight_counts_match_brute_force() {
        for space in [Space::SymSym, Space::SymExt, Space::ExtExt] {
            for (k, d, n) in [(3, 2, 3), (4, 3, 3), (3, 2, 4), (2, 3, 4), (4, 2, 4)] {
                for mu in partitions(k as u32 * d, n, k as u32 * d) {
                    let mu = mu.padded(n);
                    let fast = weight_multiplicity(space, k, d, n, &mu).unwrap();
                    assert_eq!(fast, brute(space, k, d, n, &mu), "{space} k={k} d={d} μ={mu:?}");
                    let mut perm = mu.clone();
                    perm.reverse();
                    assert_eq!(weight_multiplicity(space, k, d, n, &perm).unwrap(), fast);
                }
            }
        }
    }

    #[test]
    fn weight_count_examples() {
        assert_eq!(weight_multiplicity(Space::SymSym, 4, 3, 3, &[7, 3, 2]).unwrap(), 12);
        assert_eq!(weight_multiplicity(Space::SymSym, 3, 2, 2, &[4, 2]).unwrap(), 2);
        assert_eq!(weight_multiplicity(Space::ExtExt, 1, 4, 4, &[1, 1, 1, 1]).unwrap(), 1);
        assert!(weight_multiplicity(Space::SymExt, 1, 5, 4, &[1, 1, 1, 1]).is_err());
    }

    #[test]
    fn small_decompositions() {
        let d = decompose(Space::SymSym, 2, 2, 4, &cfg()).unwrap();
        assert_eq!(d.to_string(), "S(4) + S(2,2)");
        let d = decompose(Space::SymSym, 2, 3, 2, &cfg()).unwrap();
        assert_eq!(d.to_string(), "S(6) + S(4,2)");
        // S^2(Λ^2) = S_{(1,1,1,1)} + S_{(2,2)}
        let d = decompose(Space::SymExt, 2, 2, 4, &cfg()).unwrap();
        assert_eq!(d.to_string(), "S(2,2) + S(1,1,1,1)");
        // Λ^2(Λ^2) = S_{(2,1,1)}
        let d = decompose(Space::ExtExt, 2, 2, 4, &cfg()).unwrap();
        assert_eq!(d.to_string(), "S(2,1,1)");
    }

    #[test]
    fn dimension_bookkeeping() {
        for space in [Space::SymSym, Space::SymExt, Space::ExtExt] {
            for (k, d, n) in [(3, 2, 3), (3, 3, 3), (2, 2, 4), (3, 2, 5), (4, 2, 4)] {
                let dec = decompose(space, k, d, n, &cfg()).unwrap();
                assert_eq!(dec.dimension(n), ambient_dimension(space, k, d, n), "{space} {k} {d} {n}");
            }
        }
    }

    #[test]
    fn up_sets() {
        let up = dominating_partitions(&partition![2, 2], 4, 4);
        assert_eq!(up, vec![partition![4], partition![3, 1], partition![2, 2]]);
        let all = partitions(8, 4, 8);
        let lam = partition![3, 2, 2, 1];
        let expected: Vec<Partition> = all.into_iter().filter(|p| p.dominates(&lam)).collect();
        assert_eq!(dominating_partitions(&lam, 4, 8), expected);
    }

    #[test]
    fn both_single_module_paths_agree() {
        for (k, d) in [(3, 3), (4, 3), (3, 4), (4, 2)] {
            let n = k * d as usize;
            let full = decompose(Space::SymSym, k, d, n.min(6), &cfg()).unwrap();
            for lam in partitions(k as u32 * d, n.min(6), k as u32 * d) {
                let a = decompose_at_triangular(Space::SymSym, k, d, n.min(6), &lam).unwrap();
                let b = decompose_at_alternating(Space::SymSym, k, d, &lam).unwrap();
                assert_eq!(a, full.mult(&lam), "{lam}");
                assert_eq!(b, full.mult(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn single_module_examples() {
        assert_eq!(decompose_at(Space::SymSym, 4, 5, 4, &partition![6, 6, 6, 2], &cfg()).unwrap(), 1);
        assert_eq!(decompose_at(Space::SymSym, 4, 3, 3, &partition![4, 4, 4], &cfg()).unwrap(), 1);
        assert_eq!(decompose_at(Space::SymSym, 3, 4, 1, &partition![12], &cfg()).unwrap(), 1);
    }

    #[test]
    fn lex_smallest_examples() {
        assert_eq!(lex_smallest_module(Space::SymSym, 2, 3, 2, &cfg()).unwrap(), Some((partition![4, 2], 1)));
        assert_eq!(lex_smallest_module(Space::SymSym, 4, 3, 4, &cfg()).unwrap(), Some((partition![4, 4, 4], 1)));
    }

    #[test]
    fn shift_examples() {
        assert!(check_shift(&partition![4, 2], 2, 3, 2, 2, &cfg()).unwrap());
        assert!(check_shift(&partition![2, 2], 2, 2, 2, 2, &cfg()).unwrap());
        assert!(check_shift(&partition![4, 4, 4], 4, 3, 2, 4, &cfg()).unwrap());
        assert!(check_shift(&partition![4, 2], 2, 3, 1, 2, &cfg()).is_err());
    }

    #[test]
    fn duality_examples() {
        let r = check_duality(&partition![4, 2], 3, 1, 6, &cfg()).unwrap();
        assert_eq!((r.identity, r.lhs, r.rhs, r.holds), ("even", 1, 1, true));
        assert!(check_duality(&partition![2, 2], 2, 1, 4, &cfg()).unwrap().holds);
        assert!(check_duality(&partition![6], 3, 1, 6, &cfg()).unwrap().holds);
        let odd = check_duality(&partition![4, 2], 2, 1, 6, &cfg()).unwrap();
        assert_eq!((odd.identity, odd.lhs, odd.rhs), ("odd-as-printed", 1, 0));
    }

    #[test]
    fn concat_examples() {
        assert!(check_concat(&partition![2], &partition![2], 1, 1, 2, 2, &cfg()).unwrap());
        assert!(check_concat(&partition![4], &partition![2, 2], 2, 2, 2, 4, &cfg()).unwrap());
        assert!(check_concat(&partition![4], &partition![2, 2], 1, 2, 2, 3, &cfg()).is_err());
        assert!(check_concat(&partition![4, 4], &partition![4], 2, 1, 4, 3, &cfg()).unwrap());
        assert!(check_concat(&partition![2], &partition![4], 1, 2, 2, 3, &cfg()).is_err());
        assert!(check_concat(&partition![3], &partition![3], 1, 1, 3, 2, &cfg()).is_err());
    }

    #[test]
    fn weyl_dimension_sum_s3_s3() {
        let dec = decompose(Space::SymSym, 3, 3, 3, &cfg()).unwrap();
        let total: BigUint = dec.iter().map(|(p, m)| weyl_dimension(p, 3).unwrap() * m).sum();
        assert_eq!(total, BigUint::from(220u32));
    }
}
