//! The Foulkes-Howe map `S^δ(S^d V) → S^d(S^δ V)` and its kernel, the degree-δ part of the
//! ideal of the Chow variety of products of `d` linear forms.
//!
//! A monomial `f_1⋯f_δ` is written as a δ×d array whose r-th row lists the variables of
//! `f_r`; the image is the product of the column monomials, averaged over all orderings of
//! every row.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::combinatorics::{Decomposition, Partition};
use crate::config::Config;
use crate::error::{invalid, Error, Result};
use crate::glaction::{apply_operator, hwv_space, Operator};
use crate::linalg::{self, SparseMatrix};
use crate::plethysm::{decompose, Space};
use crate::symalg::{enumerate_all, enumerate_weight_space, exp_vecs, full_dimension, SymMonomial, SymPoly};

fn multinomial(parts: &[u8]) -> Option<u128> {
    let mut acc: u128 = 1;
    let mut total: u128 = 0;
    for &p in parts {
        for i in 1..=p as u128 {
            total += 1;
            acc = acc.checked_mul(total)? / i;
        }
    }
    Some(acc)
}

fn overflow() -> Error {
    Error::Invalid("regrouping count overflows u128".into())
}

/// Distributes the variables `a` of one row over the partial columns, one per column,
/// returning each resulting column multiset with the number of row orderings producing it.
fn distribute(cols: &[Vec<u8>], a: &[u8]) -> Result<Vec<(Vec<Vec<u8>>, u128)>> {
    let mut groups: Vec<(&Vec<u8>, u8)> = Vec::new();
    for c in cols {
        match groups.last_mut() {
            Some((g, m)) if *g == c => *m += 1,
            _ => groups.push((c, 1)),
        }
    }
    let n = a.len();
    let mut out = Vec::new();
    let mut rem = a.to_vec();
    let mut built: Vec<Vec<u8>> = Vec::with_capacity(cols.len());

    #[allow(clippy::too_many_arguments)]
    fn over_groups(
        gi: usize,
        groups: &[(&Vec<u8>, u8)],
        rem: &mut Vec<u8>,
        built: &mut Vec<Vec<u8>>,
        ways: u128,
        n: usize,
        out: &mut Vec<(Vec<Vec<u8>>, u128)>,
    ) -> Result<()> {
        if gi == groups.len() {
            let mut cols = built.clone();
            cols.sort();
            out.push((cols, ways));
            return Ok(());
        }
        let (col, g) = groups[gi];
        let mut b = vec![0u8; n];
        fn choose(
            v: usize,
            left: u8,
            b: &mut Vec<u8>,
            col: &[u8],
            g: u8,
            gi: usize,
            groups: &[(&Vec<u8>, u8)],
            rem: &mut Vec<u8>,
            built: &mut Vec<Vec<u8>>,
            ways: u128,
            n: usize,
            out: &mut Vec<(Vec<Vec<u8>>, u128)>,
        ) -> Result<()> {
            if v == n {
                if left > 0 {
                    return Ok(());
                }
                let w = ways.checked_mul(multinomial(b).ok_or_else(overflow)?).ok_or_else(overflow)?;
                let base = built.len();
                for (var, &cnt) in b.iter().enumerate() {
                    for _ in 0..cnt {
                        let mut c = col.to_vec();
                        c[var] += 1;
                        built.push(c);
                    }
                }
                over_groups(gi + 1, groups, rem, built, w, n, out)?;
                built.truncate(base);
                return Ok(());
            }
            let hi = left.min(rem[v]);
            for t in (0..=hi).rev() {
                b[v] = t;
                rem[v] -= t;
                choose(v + 1, left - t, b, col, g, gi, groups, rem, built, ways, n, out)?;
                rem[v] += t;
            }
            b[v] = 0;
            Ok(())
        }
        choose(0, g, &mut b, col, g, gi, groups, rem, built, ways, n, out)
    }
    over_groups(0, &groups, &mut rem, &mut built, 1, n, &mut out)?;
    Ok(out)
}

/// Image of one monomial of `S^δ(S^d C^n)` in `S^d(S^δ C^n)`.
pub fn fh_apply_monomial(m: &SymMonomial) -> Result<SymPoly> {
    let n = m.n();
    let delta = m.k();
    if delta == 0 {
        return invalid("the Foulkes-Howe map needs δ ≥ 1");
    }
    let first = m.factor(0);
    let d: u32 = first.iter().map(|&a| a as u32).sum();
    let mut start: Vec<Vec<u8>> = Vec::with_capacity(d as usize);
    for (v, &a) in first.iter().enumerate() {
        for _ in 0..a {
            let mut c = vec![0u8; n];
            c[v] = 1;
            start.push(c);
        }
    }
    start.sort();
    let mut states: FxHashMap<Vec<Vec<u8>>, u128> = FxHashMap::default();
    states.insert(start, 1);
    let mut total: u128 = 1;
    for r in 1..delta {
        let a = m.factor(r);
        total = total.checked_mul(multinomial(a).ok_or_else(overflow)?).ok_or_else(overflow)?;
        let mut next: FxHashMap<Vec<Vec<u8>>, u128> = FxHashMap::default();
        for (cols, c) in states {
            for (nc, w) in distribute(&cols, a)? {
                let e = next.entry(nc).or_insert(0);
                *e = e.checked_add(c.checked_mul(w).ok_or_else(overflow)?).ok_or_else(overflow)?;
            }
        }
        states = next;
    }
    let mut out = SymPoly::zero(d as usize, delta as u32, n);
    let total = BigInt::from(total);
    for (cols, c) in states {
        let mono = SymMonomial::from_factors(n, cols.iter().map(|c| c.as_slice()));
        out.add_term(mono, BigRational::new(BigInt::from(c), total.clone()));
    }
    Ok(out)
}

/// Linear extension of [`fh_apply_monomial`].
pub fn fh_apply(f: &SymPoly) -> Result<SymPoly> {
    let mut out = SymPoly::zero(f.d() as usize, f.k() as u32, f.n());
    for (m, c) in f.terms() {
        out.add_scaled(&fh_apply_monomial(m)?, c);
    }
    Ok(out)
}

/// Matrix of the map between two monomial bases; entry `(row, col)` is the coefficient of
/// codomain monomial `row` in the image of domain monomial `col`.
#[derive(Clone, Debug)]
pub struct SparseLinearMap {
    pub domain: Vec<SymMonomial>,
    pub codomain: Vec<SymMonomial>,
    pub entries: Vec<(usize, usize, BigRational)>,
}

impl SparseLinearMap {
    pub fn to_matrix(&self) -> SparseMatrix {
        let mut rows: Vec<Vec<(usize, BigRational)>> = vec![Vec::new(); self.codomain.len()];
        for (r, c, v) in &self.entries {
            rows[*r].push((*c, v.clone()));
        }
        let mut m = SparseMatrix::new(self.domain.len());
        for row in rows {
            m.push_rational_row(row);
        }
        m
    }

    pub fn rank(&self, cfg: &Config) -> Result<usize> {
        linalg::rank(&self.to_matrix(), cfg.primes)
    }

    pub fn is_bijective(&self, cfg: &Config) -> Result<bool> {
        Ok(self.domain.len() == self.codomain.len() && self.rank(cfg)? == self.domain.len())
    }
}

/// Matrix of `FH_{δ,d}` on `S^δ(S^d C^n)`, optionally restricted to one weight space.
pub fn fh_matrix(delta: usize, d: u32, n: usize, weight: Option<&[u32]>, cfg: &Config) -> Result<SparseLinearMap> {
    let (domain, codomain) = match weight {
        Some(w) => {
            if w.len() != n {
                return invalid(format!("weight {w:?} has length other than {n}"));
            }
            let dom = enumerate_weight_space(delta, d, n, w);
            cfg.check_size(format!("weight space {w:?} of S^{delta}(S^{d}C^{n})"), dom.len())?;
            (dom, enumerate_weight_space(d as usize, delta as u32, n, w))
        }
        None => {
            let dim = full_dimension(delta, d, n);
            let dim_usize: usize = dim.clone().try_into().unwrap_or(usize::MAX);
            cfg.check_size(format!("S^{delta}(S^{d}C^{n})"), dim_usize)?;
            (enumerate_all(delta, d, n), enumerate_all(d as usize, delta as u32, n))
        }
    };
    let index: FxHashMap<&SymMonomial, usize> = codomain.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut entries = Vec::new();
    for (col, m) in domain.iter().enumerate() {
        let img = fh_apply_monomial(m)?;
        for (t, c) in img.terms() {
            let row = *index.get(t).ok_or_else(|| Error::Linalg(format!("image monomial {t} outside the codomain")))?;
            entries.push((row, col, c.clone()));
        }
    }
    entries.sort_by_key(|a| (a.1, a.0));
    Ok(SparseLinearMap { domain, codomain, entries })
}

/// Checks bijectivity weight space by weight space; each block is square exactly when the
/// map can be bijective.
pub fn fh_is_bijective(delta: usize, d: u32, n: usize, cfg: &Config) -> Result<bool> {
    let total = delta as u32 * d;
    for w in crate::combinatorics::partitions(total, n, total) {
        let w = w.padded(n);
        let block = fh_matrix(delta, d, n, Some(&w), cfg)?;
        if !block.is_bijective(cfg)? {
            return Ok(false);
        }
    }
    // Permuted weights give isomorphic blocks, so dominant weights suffice.
    Ok(true)
}

/// An isotypic description of one graded piece of an ideal, with highest weight vectors
/// spanning each isotypic component's highest weight space.
#[derive(Clone, Debug, Serialize)]
pub struct IdealComponent {
    pub degree: usize,
    pub d: u32,
    pub n: usize,
    pub content: Decomposition,
    pub certificates: BTreeMap<Partition, Vec<SymPoly>>,
}

impl IdealComponent {
    pub fn empty(degree: usize, d: u32, n: usize) -> Self {
        IdealComponent { degree, d, n, content: Decomposition::default(), certificates: BTreeMap::new() }
    }

    pub fn mult(&self, lambda: &Partition) -> u64 {
        self.content.mult(lambda)
    }

    pub fn certificates_of(&self, lambda: &Partition) -> &[SymPoly] {
        self.certificates.get(lambda).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn is_empty(&self) -> bool {
        self.content.is_empty()
    }
}

/// Highest weight vectors of `λ` computed in `len(λ)` variables.
pub(crate) fn hwv_minimal(k: usize, d: u32, lambda: &Partition, cfg: &Config) -> Result<Vec<SymPoly>> {
    hwv_space(k, d, lambda.len().max(1), lambda, cfg)
}

/// Kernel of a linear map restricted to the span of `basis`, returned as combinations of
/// `basis`.
pub(crate) fn kernel_on_span(basis: &[SymPoly], images: &[SymPoly]) -> Result<Vec<SymPoly>> {
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let mut index: FxHashMap<SymMonomial, usize> = FxHashMap::default();
    let mut rows: Vec<Vec<(usize, BigRational)>> = Vec::new();
    for (col, img) in images.iter().enumerate() {
        for (m, c) in img.terms() {
            let next = index.len();
            let r = *index.entry(m.clone()).or_insert(next);
            if r == rows.len() {
                rows.push(Vec::new());
            }
            rows[r].push((col, c.clone()));
        }
    }
    let mut mat = SparseMatrix::new(basis.len());
    for row in rows {
        mat.push_rational_row(row);
    }
    let ker = linalg::nullspace(&mat)?;
    let b0 = &basis[0];
    Ok(ker
        .iter()
        .map(|coef| {
            let mut f = SymPoly::zero(b0.k(), b0.d(), b0.n());
            for (c, h) in coef.iter().zip(basis) {
                if !c.is_zero() {
                    f.add_scaled(h, c);
                }
            }
            f.primitive()
        })
        .collect())
}

/// `ker FH_{δ,d}` on `S^δ(S^d C^n)`, computed isotypic component by isotypic component.
pub fn chow_ideal_component(delta: usize, d: u32, n: usize, cfg: &Config) -> Result<IdealComponent> {
    let dec = decompose(Space::SymSym, delta, d, n, cfg)?;
    let per = |(lambda, _): (&Partition, u64)| -> Result<(Partition, Vec<SymPoly>)> {
        let hw = hwv_minimal(delta, d, lambda, cfg)?;
        let images = hw.iter().map(fh_apply).collect::<Result<Vec<_>>>()?;
        let ker = kernel_on_span(&hw, &images)?;
        log::debug!("FH kernel at {lambda}: {} of {}", ker.len(), hw.len());
        Ok((lambda.clone(), ker))
    };
    let entries: Vec<(&Partition, u64)> = dec.iter().collect();
    #[cfg(feature = "parallel")]
    let results: Vec<Result<(Partition, Vec<SymPoly>)>> = {
        use rayon::prelude::*;
        entries.par_iter().map(|&e| per(e)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Result<(Partition, Vec<SymPoly>)>> = entries.iter().map(|&e| per(e)).collect();
    let mut out = IdealComponent::empty(delta, d, n);
    for r in results {
        let (lambda, ker) = r?;
        if !ker.is_empty() {
            let ker = ker.iter().map(|f| f.embed(n)).collect::<Result<Vec<_>>>()?;
            out.content.add(lambda.clone(), ker.len() as u64);
            out.certificates.insert(lambda, ker);
        }
    }
    Ok(out)
}

/// `S^δ(S^d) − S^d(S^δ)` as modules, which equals the kernel whenever the map is onto.
pub fn chow_ideal_by_subtraction(delta: usize, d: u32, n: usize, cfg: &Config) -> Result<Decomposition> {
    let a = decompose(Space::SymSym, delta, d, n, cfg)?;
    let b = decompose(Space::SymSym, d as usize, delta as u32, n, cfg)?;
    a.minus(&b)
}

fn equivariant_at(m: &SymMonomial, op: Operator, d: u32) -> Result<bool> {
    let f = SymPoly::monomial(m.clone(), d, BigRational::from_integer(1.into()));
    let lhs = fh_apply(&apply_operator(op, &f))?;
    let rhs = apply_operator(op, &fh_apply(&f)?);
    Ok(lhs == rhs)
}

/// Compares `FH(E·m)` with `E·FH(m)` on random monomials and operators.
pub fn fh_equivariance_check(delta: usize, d: u32, n: usize, trials: usize, seed: u64) -> Result<bool> {
    if n < 2 {
        return Ok(true);
    }
    let basis = exp_vecs(d, n);
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..trials {
        let factors: Vec<&[u8]> = (0..delta).map(|_| basis[rng.gen_range(0..basis.len())].exps()).collect();
        let m = SymMonomial::from_factors(n, factors);
        let i = rng.gen_range(1..=n);
        let mut j = rng.gen_range(1..n);
        if j >= i {
            j += 1;
        }
        if !equivariant_at(&m, Operator { i, j }, d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equivariance on every monomial and every operator.
pub fn fh_equivariance_exhaustive(delta: usize, d: u32, n: usize) -> Result<bool> {
    for m in enumerate_all(delta, d, n) {
        for i in 1..=n {
            for j in 1..=n {
                if i != j && !equivariant_at(&m, Operator { i, j }, d)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn worked_examples() {
        let a = SymPoly::parse("(e1^2)*(e2^2)", 2).unwrap();
        assert_eq!(fh_apply(&a).unwrap().to_text(), "(e1*e2)^2");
        let b = SymPoly::parse("(e1*e2)^2", 2).unwrap();
        assert_eq!(fh_apply(&b).unwrap().to_text(), "1/2*(e1^2)*(e2^2) + 1/2*(e1*e2)^2");
    }

    #[test]
    fn single_variable() {
        let a = SymPoly::parse("(e1^3)^2", 2).unwrap();
        assert_eq!(fh_apply(&a).unwrap().to_text(), "(e1^2)^3");
    }

    #[test]
    fn weight_is_preserved() {
        for m in enumerate_all(3, 2, 3) {
            let img = fh_apply_monomial(&m).unwrap();
            assert!(img.terms().all(|(t, _)| t.weight() == m.weight()));
        }
    }

    #[test]
    fn coefficients_sum_to_one() {
        for m in enumerate_all(3, 3, 3) {
            let img = fh_apply_monomial(&m).unwrap();
            let s: BigRational = img.terms().map(|(_, c)| c.clone()).sum();
            assert_eq!(s, BigRational::from_integer(1.into()));
        }
    }

    #[test]
    fn small_matrices() {
        let full = fh_matrix(2, 2, 2, None, &cfg()).unwrap();
        assert_eq!(full.domain.len(), 6);
        assert_eq!(full.rank(&cfg()).unwrap(), 6);
        let block = fh_matrix(2, 2, 2, Some(&[2, 2]), &cfg()).unwrap();
        assert_eq!((block.domain.len(), block.codomain.len()), (2, 2));
        assert_eq!(block.rank(&cfg()).unwrap(), 2);
        assert!(fh_matrix(3, 3, 2, None, &cfg()).unwrap().is_bijective(&cfg()).unwrap());
    }

    #[test]
    fn equivariance() {
        assert!(fh_equivariance_exhaustive(2, 2, 2).unwrap());
        assert!(fh_equivariance_check(3, 2, 3, 100, 7).unwrap());
    }

    #[test]
    fn cubic_ideal_of_ternary_cubes_vanishes() {
        let c = chow_ideal_component(3, 3, 3, &cfg()).unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn quartic_ideal() {
        let c = chow_ideal_component(4, 3, 4, &cfg()).unwrap();
        assert_eq!(c.content.to_string(), "S(7,3,2) + S(6,2,2,2) + S(5,4,2,1)");
        let by_sub = chow_ideal_by_subtraction(4, 3, 4, &cfg()).unwrap();
        assert_eq!(by_sub, c.content);
        assert_eq!(c.certificates_of(&partition![7, 3, 2]).len(), 1);
    }
}
