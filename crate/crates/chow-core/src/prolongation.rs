//! Prolongations `A^{(p)}` of ideal components and the secant-ideal pieces they produce.
//!
//! A candidate `λ` of degree `k+1` can only occur in `A^{(1)}` if one of its Pieri
//! ancestors `b` (partitions with `λ/b` a horizontal `d`-strip) occurs in `A`. Membership
//! of the highest weight vectors of `λ` is then decided exactly by one of two linear
//! systems:
//!
//! * derivative: `f` lies in `A^{(1)}` iff `∂f/∂e^{λ−b}` is orthogonal, under the invariant
//!   form, to every highest weight vector of weight `b` that is orthogonal to `A`;
//! * polarization: the weight-`λ` highest weight vectors of `A ⊗ S^d V` are built from the
//!   highest weight vectors of `A` by lowering, and `A^{(1)}` is the part of their span
//!   that is symmetric, i.e. lies in the image of `S^{k+1}(S^d V)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::combinatorics::{horizontal_strip_outers, kostka, lr_coefficient, partitions, Decomposition, Partition};
use crate::config::{Config, ProlongRoute};
use crate::error::{invalid, Error, Result};
use crate::foulkes_howe::{chow_ideal_component, hwv_minimal, IdealComponent};
use crate::glaction::{apply_operator, is_highest_weight, Operator};
use crate::linalg::{self, inv_mod, mul_mod, primes, reduce_big, ModEchelon, SparseMatrix};
use crate::plethysm::{decompose, decompose_at, weight_multiplicity, Space};
use crate::symalg::{exp_vecs, ExpVec, SymMonomial, SymPoly};

/// Pieri ancestors of `λ` in degree `k`: partitions `b` with `λ/b` a horizontal `d`-strip.
pub fn pieri_ancestors(lambda: &Partition, d: u32) -> Vec<Partition> {
    crate::combinatorics::horizontal_strip_inners(lambda.parts(), d)
        .into_iter()
        .map(Partition::from_unsorted)
        .collect()
}

fn weight_diff(lambda: &[u32], b: &[u32], n: usize) -> Option<ExpVec> {
    let mut v = vec![0u8; n];
    for i in 0..n {
        let l = lambda.get(i).copied().unwrap_or(0);
        let s = b.get(i).copied().unwrap_or(0);
        v[i] = u8::try_from(l.checked_sub(s)?).ok()?;
    }
    Some(ExpVec::new(v))
}

fn embed_all(fs: &[SymPoly], n: usize) -> Result<Vec<SymPoly>> {
    fs.iter().map(|f| f.embed(n)).collect()
}

/// Highest weight vectors of weight `λ` in `S^{k+1}(S^d)` whose first derivatives lie in `A`,
/// decided through derivative projections. Output lives in `len(λ)` variables.
pub fn prolong_candidate_derivative(a: &IdealComponent, lambda: &Partition, cfg: &Config) -> Result<Vec<SymPoly>> {
    let k = a.degree;
    let d = a.d;
    let n = lambda.len();
    let h_lambda = hwv_minimal(k + 1, d, lambda, cfg)?;
    if h_lambda.is_empty() {
        return Ok(Vec::new());
    }
    let mut rows: Vec<Vec<(usize, BigRational)>> = Vec::new();
    for b in pieri_ancestors(lambda, d) {
        let in_a = a.mult(&b);
        let h_b = embed_all(&hwv_minimal(k, d, &b, cfg)?, n)?;
        if h_b.len() as u64 == in_a {
            continue;
        }
        let certs = embed_all(a.certificates_of(&b), n)?;
        // highest weight vectors of weight b orthogonal to A
        let complement = orthogonal_complement(&h_b, &certs)?;
        let beta = weight_diff(lambda.parts(), b.parts(), n).expect("strip");
        let derivs: Vec<SymPoly> = h_lambda.iter().map(|f| f.partial_derivative(beta.exps())).collect::<Result<_>>()?;
        for c in &complement {
            rows.push(derivs.iter().enumerate().map(|(i, g)| (i, g.inner(c))).filter(|e| !e.1.is_zero()).collect());
        }
    }
    let mut m = SparseMatrix::new(h_lambda.len());
    for r in rows {
        m.push_rational_row(r);
    }
    let ker = linalg::nullspace(&m)?;
    Ok(combine(&h_lambda, &ker))
}

fn combine(basis: &[SymPoly], coefs: &[Vec<BigRational>]) -> Vec<SymPoly> {
    coefs
        .iter()
        .map(|c| {
            let b0 = &basis[0];
            let mut f = SymPoly::zero(b0.k(), b0.d(), b0.n());
            for (x, h) in c.iter().zip(basis) {
                f.add_scaled(h, x);
            }
            f.primitive()
        })
        .collect()
}

/// Vectors of `span(space)` orthogonal to every vector of `sub`.
fn orthogonal_complement(space: &[SymPoly], sub: &[SymPoly]) -> Result<Vec<SymPoly>> {
    if sub.is_empty() {
        return Ok(space.to_vec());
    }
    let mut m = SparseMatrix::new(space.len());
    for s in sub {
        m.push_rational_row(space.iter().enumerate().map(|(j, h)| (j, s.inner(h))).filter(|e| !e.1.is_zero()).collect());
    }
    let ker = linalg::nullspace(&m)?;
    Ok(combine(space, &ker))
}

fn rational_mod(c: &BigRational, p: u64) -> u64 {
    let num = reduce_big(c.numer(), p);
    if c.denom().is_one() {
        num
    } else {
        mul_mod(num, inv_mod(reduce_big(c.denom(), p), p), p)
    }
}

/// Height of `b − ν` in simple roots, or `None` when `ν` is not below `b`.
fn height_below(b: &[u32], nu: &[u32]) -> Option<u64> {
    let mut prefix: i64 = 0;
    let mut h: u64 = 0;
    for i in 0..nu.len() {
        prefix += b.get(i).copied().unwrap_or(0) as i64 - nu[i] as i64;
        if prefix < 0 {
            return None;
        }
        h += prefix as u64;
    }
    (prefix == 0).then_some(h)
}

fn is_below(upper: &[u32], lower: &[u32]) -> bool {
    height_below(upper, lower).is_some()
}

/// Bases of the weight spaces of the module generated by the highest weight vector `h`
/// (of weight `b`) at every weight in `targets`, found by applying simple lowering operators.
fn lowering_span(h: &SymPoly, b: &[u32], targets: &[Vec<u32>]) -> Result<FxHashMap<Vec<u32>, Vec<SymPoly>>> {
    let n = h.n();
    let p = primes()[0];
    let needed = |nu: &[u32]| targets.iter().any(|t| is_below(nu, t));
    struct Slot {
        vecs: Vec<SymPoly>,
        echelon: ModEchelon,
        index: FxHashMap<SymMonomial, usize>,
        cap: usize,
    }
    let mut slots: BTreeMap<(u64, Vec<u32>), Slot> = BTreeMap::new();
    let make_slot = |nu: &[u32]| -> Result<Slot> {
        let cols = weight_multiplicity(Space::SymSym, h.k(), h.d(), n, nu)? as usize;
        Ok(Slot { vecs: Vec::new(), echelon: ModEchelon::new(cols, p), index: FxHashMap::default(), cap: kostka(&Partition::new(b.to_vec())?, nu) as usize })
    };
    let mut top = make_slot(b)?;
    top.vecs.push(h.clone());
    slots.insert((0, b.to_vec()), top);
    let mut out: FxHashMap<Vec<u32>, Vec<SymPoly>> = FxHashMap::default();
    while let Some(((height, nu), slot)) = slots.pop_first() {
        if slot.vecs.len() != slot.cap {
            return Err(Error::Linalg(format!("lowering reached {} of {} vectors at weight {nu:?}", slot.vecs.len(), slot.cap)));
        }
        for i in 1..n {
            if nu[i - 1] == 0 {
                continue;
            }
            let mut next = nu.clone();
            next[i - 1] -= 1;
            next[i] += 1;
            if !needed(&next) {
                continue;
            }
            let key = (height + 1, next.clone());
            if !slots.contains_key(&key) {
                let s = make_slot(&next)?;
                if s.cap == 0 {
                    continue;
                }
                slots.insert(key.clone(), s);
            }
            let target = slots.get_mut(&key).expect("slot");
            for v in &slot.vecs {
                if target.vecs.len() == target.cap {
                    break;
                }
                let w = apply_operator(Operator::lowering(i), v);
                if w.is_zero() {
                    continue;
                }
                let mut row: Vec<(usize, u64)> = Vec::with_capacity(w.len());
                for (m, c) in w.terms() {
                    let next_idx = target.index.len();
                    let col = *target.index.entry(m.clone()).or_insert(next_idx);
                    let r = rational_mod(c, p);
                    if r != 0 {
                        row.push((col, r));
                    }
                }
                row.sort_unstable();
                if target.echelon.insert(row) {
                    target.vecs.push(w);
                }
            }
        }
        if targets.contains(&nu) {
            out.insert(nu, slot.vecs);
        }
    }
    Ok(out)
}

type TensorKey = (SymMonomial, ExpVec);

/// The unique (up to scale) weight-`λ` highest weight vector of `U_h ⊗ S^d V`, as pairs
/// `(β, u_β)` meaning `Σ u_β ⊗ e^β`.
fn pieri_lift(h: &SymPoly, b: &Partition, lambda: &Partition) -> Result<Vec<(ExpVec, SymPoly)>> {
    let n = h.n();
    let d = h.d();
    let bw = b.padded(n);
    let lw = lambda.padded(n);
    let mut pairs: Vec<(ExpVec, Vec<u32>)> = Vec::new();
    for beta in exp_vecs(d, n) {
        let Some(t) = lw.iter().zip(beta.exps()).map(|(&l, &x)| l.checked_sub(x as u32)).collect::<Option<Vec<u32>>>() else {
            continue;
        };
        if is_below(&bw, &t) {
            pairs.push((beta, t));
        }
    }
    let targets: Vec<Vec<u32>> = pairs.iter().map(|(_, t)| t.clone()).collect();
    let spans = lowering_span(h, &bw, &targets)?;
    let mut vars: Vec<(ExpVec, SymPoly)> = Vec::new();
    for (beta, t) in &pairs {
        if let Some(vs) = spans.get(t) {
            for v in vs {
                vars.push((beta.clone(), v.clone()));
            }
        }
    }
    let mut rows: FxHashMap<TensorKey, Vec<(usize, BigInt)>> = FxHashMap::default();
    for (col, (beta, v)) in vars.iter().enumerate() {
        for i in 1..n {
            let op = Operator::raising(i);
            for (m, c) in apply_operator(op, v).terms() {
                rows.entry((m.clone(), beta.clone())).or_default().push((col, c.to_integer()));
            }
            if let Some((nb, mult)) = op.apply_exp(beta.exps()) {
                let nb = ExpVec::new(nb);
                for (m, c) in v.terms() {
                    rows.entry((m.clone(), nb.clone())).or_default().push((col, c.to_integer() * mult));
                }
            }
        }
    }
    let mut keys: Vec<TensorKey> = rows.keys().cloned().collect();
    keys.sort();
    let mut mat = SparseMatrix::new(vars.len());
    for key in keys {
        mat.push_row(rows.remove(&key).expect("row"));
    }
    let ker = linalg::nullspace(&mat)?;
    if ker.len() != 1 {
        return Err(Error::Linalg(format!("expected one highest weight vector of weight {lambda} over {b}, found {}", ker.len())));
    }
    let mut parts: BTreeMap<ExpVec, SymPoly> = BTreeMap::new();
    for ((beta, v), x) in vars.iter().zip(&ker[0]) {
        if x.is_zero() {
            continue;
        }
        parts.entry(beta.clone()).or_insert_with(|| SymPoly::zero(v.k(), v.d(), v.n())).add_scaled(v, x);
    }
    Ok(parts.into_iter().filter(|(_, u)| !u.is_zero()).collect())
}

/// Antisymmetric part `Σ ∂u_β/∂e^γ ⊗ (e^γ ∧ e^β)`; zero exactly when `Σ u_β ⊗ e^β` is a
/// polarization.
fn asymmetry(y: &[(ExpVec, SymPoly)]) -> Result<FxHashMap<(SymMonomial, ExpVec, ExpVec), BigRational>> {
    let mut out: FxHashMap<(SymMonomial, ExpVec, ExpVec), BigRational> = FxHashMap::default();
    for (beta, u) in y {
        let mut gammas: Vec<ExpVec> = Vec::new();
        for (m, _) in u.terms() {
            for f in m.factors() {
                if f != beta.exps() && !gammas.iter().any(|g| g.exps() == f) {
                    gammas.push(ExpVec::new(f.to_vec()));
                }
            }
        }
        for g in gammas {
            let du = u.partial_derivative(g.exps())?;
            let (key_a, key_b, sign) = if g < *beta { (g.clone(), beta.clone(), 1) } else { (beta.clone(), g.clone(), -1) };
            for (m, c) in du.terms() {
                let e = out.entry((m.clone(), key_a.clone(), key_b.clone())).or_insert_with(BigRational::zero);
                if sign > 0 {
                    *e += c;
                } else {
                    *e -= c;
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Same output as [`prolong_candidate_derivative`], computed without any weight space of
/// degree `k+1`.
pub fn prolong_candidate_polarization(a: &IdealComponent, lambda: &Partition, _cfg: &Config) -> Result<Vec<SymPoly>> {
    let k = a.degree;
    let n = lambda.len();
    let mut lifts: Vec<Vec<(ExpVec, SymPoly)>> = Vec::new();
    for b in pieri_ancestors(lambda, a.d) {
        for h in a.certificates_of(&b) {
            let h = h.embed(n)?;
            lifts.push(pieri_lift(&h, &b, lambda)?);
        }
    }
    if lifts.is_empty() {
        return Ok(Vec::new());
    }
    let mut index: FxHashMap<(SymMonomial, ExpVec, ExpVec), usize> = FxHashMap::default();
    let mut rows: Vec<Vec<(usize, BigRational)>> = Vec::new();
    for (col, y) in lifts.iter().enumerate() {
        for (key, c) in asymmetry(y)? {
            let next = index.len();
            let r = *index.entry(key).or_insert(next);
            if r == rows.len() {
                rows.push(Vec::new());
            }
            rows[r].push((col, c));
        }
    }
    let mut mat = SparseMatrix::new(lifts.len());
    for r in rows {
        mat.push_rational_row(r);
    }
    let ker = linalg::nullspace(&mat)?;
    let scale = BigRational::new(BigInt::one(), BigInt::from(k + 1));
    Ok(ker
        .iter()
        .map(|coef| {
            let mut f = SymPoly::zero(k + 1, a.d, n);
            for (x, y) in coef.iter().zip(&lifts) {
                if x.is_zero() {
                    continue;
                }
                for (beta, u) in y {
                    f.add_scaled(&u.mul_factor(beta.exps()), &(x * &scale));
                }
            }
            f.primitive()
        })
        .collect())
}

/// Decides the `λ`-isotypic part of `A^{(1)}` by the configured route.
pub fn prolong_candidate(a: &IdealComponent, lambda: &Partition, cfg: &Config) -> Result<Vec<SymPoly>> {
    let route = match cfg.route {
        ProlongRoute::Auto => {
            let wm = weight_multiplicity(Space::SymSym, a.degree + 1, a.d, lambda.len(), lambda.parts())?;
            if wm <= cfg.derivative_route_limit as u128 {
                ProlongRoute::Derivative
            } else {
                ProlongRoute::Polarization
            }
        }
        r => r,
    };
    match route {
        ProlongRoute::Polarization => prolong_candidate_polarization(a, lambda, cfg),
        _ => prolong_candidate_derivative(a, lambda, cfg),
    }
}

/// Candidates for `A^{(1)}`: partitions with a Pieri ancestor in `A` that occur in
/// `S^{k+1}(S^d C^n)`, lex-descending.
pub fn prolong_candidates(a: &IdealComponent, cfg: &Config) -> Result<Vec<Partition>> {
    let mut set: Vec<Partition> = Vec::new();
    for (b, _) in a.content.iter() {
        for o in horizontal_strip_outers(b.parts(), a.d, a.n) {
            set.push(Partition::from_unsorted(o));
        }
    }
    set.sort_by(|x, y| y.cmp(x));
    set.dedup();
    let mut out = Vec::new();
    for lam in set {
        if decompose_at(Space::SymSym, a.degree + 1, a.d, a.n, &lam, cfg)? > 0 {
            out.push(lam);
        }
    }
    Ok(out)
}

/// `A^{(1)}` in degree `k+1`.
pub fn prolong_once(a: &IdealComponent, cfg: &Config) -> Result<IdealComponent> {
    let cands = prolong_candidates(a, cfg)?;
    log::info!("prolonging degree {} with {} modules: {} candidates", a.degree, a.content.len(), cands.len());
    let run = |lam: &Partition| -> Result<(Partition, Vec<SymPoly>)> {
        let t = std::time::Instant::now();
        let certs = prolong_candidate(a, lam, cfg)?;
        log::info!("  {lam}: multiplicity {} ({} ms)", certs.len(), t.elapsed().as_millis());
        Ok((lam.clone(), certs))
    };
    #[cfg(feature = "parallel")]
    let results: Vec<Result<(Partition, Vec<SymPoly>)>> = {
        use rayon::prelude::*;
        cands.par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Result<(Partition, Vec<SymPoly>)>> = cands.iter().map(run).collect();
    let mut out = IdealComponent::empty(a.degree + 1, a.d, a.n);
    for r in results {
        let (lam, certs) = r?;
        if !certs.is_empty() {
            out.content.add(lam.clone(), certs.len() as u64);
            out.certificates.insert(lam, embed_all(&certs, a.n)?);
        }
    }
    Ok(out)
}

/// `A^{(p)}`, computed as `p` successive first prolongations.
pub fn prolong_isotypic(a: &IdealComponent, p: usize, cfg: &Config) -> Result<IdealComponent> {
    let mut cur = a.clone();
    for _ in 0..p {
        if cur.is_empty() {
            return Ok(IdealComponent::empty(cur.degree + 1, cur.d, cur.n));
        }
        cur = prolong_once(&cur, cfg)?;
    }
    Ok(cur)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivativeProfileEntry {
    /// Index of the highest weight vector in the basis of its space.
    pub vector: usize,
    pub beta: ExpVec,
    pub mu: Partition,
    pub nonzero: bool,
    pub highest_weight: bool,
}

/// For each highest weight vector `f` of `λ` and each `β` with `λ − β` a partition, whether
/// `∂f/∂e^β` is nonzero and whether it is a highest weight vector.
pub fn derivative_hwv_profile(lambda: &Partition, k: usize, d: u32, n: usize, cfg: &Config) -> Result<Vec<DerivativeProfileEntry>> {
    if lambda.len() > n {
        return invalid(format!("{lambda} has more than {n} parts"));
    }
    let hs = hwv_minimal(k, d, lambda, cfg)?;
    if hs.is_empty() {
        return invalid(format!("{lambda} does not occur in S^{k}(S^{d})"));
    }
    let m = lambda.len();
    let mut out = Vec::new();
    for (vi, f) in hs.iter().enumerate() {
        for beta in exp_vecs(d, m) {
            let diff: Option<Vec<u32>> = lambda.parts().iter().zip(beta.exps()).map(|(&l, &b)| l.checked_sub(b as u32)).collect();
            let Some(diff) = diff else { continue };
            if diff.windows(2).any(|w| w[0] < w[1]) {
                continue;
            }
            let g = f.partial_derivative(beta.exps())?;
            let mut padded = beta.exps().to_vec();
            padded.resize(n, 0);
            out.push(DerivativeProfileEntry {
                vector: vi,
                beta: ExpVec::new(padded),
                mu: Partition::from_unsorted(diff),
                nonzero: !g.is_zero(),
                highest_weight: !g.is_zero() && is_highest_weight(&g),
            });
        }
    }
    Ok(out)
}

/// Whether every vector of `small` lies in the span of `big`.
pub fn span_contains(big: &[SymPoly], small: &[SymPoly]) -> Result<bool> {
    if small.is_empty() {
        return Ok(true);
    }
    if big.is_empty() {
        return Ok(small.iter().all(|f| f.is_zero()));
    }
    let mut index: FxHashMap<SymMonomial, usize> = FxHashMap::default();
    for f in big.iter().chain(small) {
        for (m, _) in f.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let to_row = |f: &SymPoly| -> Vec<(usize, BigRational)> { f.terms().map(|(m, c)| (index[m], c.clone())).collect() };
    let mut a = SparseMatrix::new(index.len());
    for f in big {
        a.push_rational_row(to_row(f));
    }
    let mut both = a.clone();
    for f in small {
        both.push_rational_row(to_row(f));
    }
    Ok(linalg::rank(&a, 2)? == linalg::rank(&both, 2)?)
}

/// Isotypic and subspace containment of `A_δ^{(p)}` in `A_{δ+1}^{(p−1)}`.
pub fn nested_prolong_check(a_delta: &IdealComponent, a_next: &IdealComponent, p: usize, cfg: &Config) -> Result<bool> {
    if p == 0 {
        return invalid("p must be at least 1");
    }
    if a_delta.n != a_next.n || a_delta.d != a_next.d || a_next.degree != a_delta.degree + 1 {
        return invalid("components must share d and n and have consecutive degrees");
    }
    let left = prolong_isotypic(a_delta, p, cfg)?;
    let right = prolong_isotypic(a_next, p - 1, cfg)?;
    for (lam, m) in left.content.iter() {
        if right.mult(lam) < m {
            return Ok(false);
        }
        if !span_contains(right.certificates_of(lam), left.certificates_of(lam))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The first nonzero graded piece of the ideal of the `r`-th secant variety of the Chow
/// variety of degree-`d` forms: degree `r(δ₀ − 1) + 1`, computed as `I_{δ₀}^{((r−1)(δ₀−1))}`
/// where `δ₀` is the first degree in which the Chow ideal is nonzero.
pub fn secant_first_nonzero(d: u32, r: usize, n: usize, cfg: &Config) -> Result<(usize, IdealComponent)> {
    if r == 0 {
        return invalid("r must be at least 1");
    }
    let mut delta0 = 1;
    let base = loop {
        if delta0 > 2 * d as usize + 2 {
            return invalid(format!("no nonzero Chow ideal component up to degree {}", 2 * d + 2));
        }
        let c = chow_ideal_component(delta0, d, n, cfg)?;
        if !c.is_empty() {
            break c;
        }
        delta0 += 1;
    };
    let p = (r - 1) * (delta0 - 1);
    let degree = r * (delta0 - 1) + 1;
    Ok((degree, prolong_isotypic(&base, p, cfg)?))
}

/// One nonzero contribution `c^ν_{λμ} m_λ m_μ` to the complement test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub left: Partition,
    pub right: Partition,
    pub lr: u64,
    pub mult_left: u64,
    pub mult_right: u64,
}

pub fn complement_obstructions(nu: &Partition, comp1: &Decomposition, comp2: &Decomposition) -> Vec<Obstruction> {
    let mut out = Vec::new();
    for (l, ml) in comp1.iter() {
        if !nu.contains(l) {
            continue;
        }
        for (m, mm) in comp2.iter() {
            if l.size() + m.size() != nu.size() || !nu.contains(m) {
                continue;
            }
            let c = lr_coefficient(l, m, nu);
            if c > 0 {
                out.push(Obstruction { left: l.clone(), right: m.clone(), lr: c, mult_left: ml, mult_right: mm });
            }
        }
    }
    out
}

/// `Σ c^ν_{λμ} m_λ m_μ = 0` over the two complements, i.e. the whole `ν`-isotypic component
/// lies in the preimage of `A_1 ⊗ S + S ⊗ A_2` under the split polarization.
pub fn secant_membership_by_complement(nu: &Partition, split: (usize, usize), comp1: &Decomposition, comp2: &Decomposition) -> bool {
    let _ = split;
    complement_obstructions(nu, comp1, comp2).is_empty()
}

/// `((2m+2)^m, (2m)^{2mr−m})`.
pub fn even_flagship(m: u32, r: u32) -> Partition {
    let mut parts = vec![2 * m + 2; m as usize];
    parts.extend(std::iter::repeat_n(2 * m, (2 * m * r - m) as usize));
    Partition::new(parts).expect("partition")
}

/// `((2m+2)^{2m−1}, 2)`.
pub fn even_threshold(m: u32) -> Partition {
    let mut parts = vec![2 * m + 2; (2 * m - 1) as usize];
    parts.push(2);
    Partition::new(parts).expect("partition")
}

/// Modules of `S^{2mr+1}(S^{2m} C^n)` certified in the secant ideal by the complement test
/// for the split `(2mr − 2m, 2m + 1)`: the flagship partition and every even partition
/// lexicographically below `((2m+2)^{2m−1}, 2)` that occurs.
pub fn even_secant_component(m: u32, r: u32, n: usize, cfg: &Config) -> Result<Decomposition> {
    if m < 1 || r < 1 {
        return invalid("m and r must be positive");
    }
    let d = 2 * m;
    let degree = (2 * m * r + 1) as usize;
    let k1 = (2 * m * r - 2 * m) as usize;
    let k2 = (2 * m + 1) as usize;
    let comp1 = decompose(Space::SymSym, k1, d, n.min(k1.max(1)), cfg)?;
    let comp2 = decompose(Space::SymSym, d as usize, k2 as u32, n.min(d as usize), cfg)?;
    let threshold = even_threshold(m);
    let flagship = even_flagship(m, r);
    let total = degree as u32 * d;
    let mut cands: Vec<Partition> = partitions(total, n, total).into_iter().filter(|p| p.is_even() && *p < threshold).collect();
    if flagship.len() <= n && !cands.contains(&flagship) {
        cands.push(flagship);
    }
    let mut out = Decomposition::default();
    for nu in cands {
        let mult = decompose_at(Space::SymSym, degree, d, n, &nu, cfg)?;
        if mult == 0 {
            continue;
        }
        if secant_membership_by_complement(&nu, (k1, k2), &comp1, &comp2) {
            out.add(nu, mult);
        }
    }
    Ok(out)
}

/// Balanced split of `δ` into `r` parts: the first `δ mod r` parts are one larger.
pub fn balanced_split(delta: usize, r: usize) -> Vec<usize> {
    let (k, l) = (delta / r, delta % r);
    (0..r).map(|i| if i < l { k + 1 } else { k }).collect()
}

/// Dimensions, inside the highest weight vectors of one module, of the polarization
/// preimage for the balanced split and of the intersection over all splits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitComparison {
    pub partition: Partition,
    pub mult: usize,
    pub balanced: usize,
    pub all_splits: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitDiagnostic {
    pub degree: usize,
    pub d: u32,
    pub r: usize,
    pub n: usize,
    pub balanced_split: Vec<usize>,
    pub splits: Vec<Vec<usize>>,
    pub modules: Vec<SplitComparison>,
    pub agrees: bool,
}

// coordinates of ℓ_1⋯ℓ_d in the monomial basis of S^d, scaled by β! to match the pairing
fn chow_point(d: u32, l: usize, p: u64, rng: &mut StdRng) -> FxHashMap<Vec<u8>, u64> {
    let mut poly: FxHashMap<Vec<u8>, u64> = FxHashMap::default();
    poly.insert(vec![0u8; l], 1);
    for _ in 0..d {
        let form: Vec<u64> = (0..l).map(|_| rng.gen_range(1..p)).collect();
        let mut next: FxHashMap<Vec<u8>, u64> = FxHashMap::default();
        for (e, c) in &poly {
            for (i, &a) in form.iter().enumerate() {
                let mut e2 = e.clone();
                e2[i] += 1;
                let v = next.entry(e2).or_insert(0);
                *v = (*v + mul_mod(*c, a, p)) % p;
            }
        }
        poly = next;
    }
    for (e, c) in poly.iter_mut() {
        for &x in e.iter() {
            for j in 2..=x as u64 {
                *c = mul_mod(*c, j, p);
            }
        }
    }
    poly
}

// all coefficients of f(Σ t_i p_i), indexed in base δ+1
fn split_coefficients(terms: &[(SymMonomial, u64)], points: &[FxHashMap<Vec<u8>, u64>], delta: usize, p: u64) -> Vec<u64> {
    let r = points.len();
    let size = (delta + 1).pow(r as u32);
    let mut total = vec![0u64; size];
    for (m, c) in terms {
        let mut cur = vec![0u64; size];
        cur[0] = *c;
        for f in m.factors() {
            let ys: Vec<u64> = points.iter().map(|pt| pt.get(f).copied().unwrap_or(0)).collect();
            let mut next = vec![0u64; size];
            for (s, &v) in cur.iter().enumerate() {
                if v == 0 {
                    continue;
                }
                let mut stride = 1;
                let mut rest = s;
                for y in &ys {
                    if rest % (delta + 1) < delta {
                        let t = &mut next[s + stride];
                        *t = (*t + mul_mod(v, *y, p)) % p;
                    }
                    rest /= delta + 1;
                    stride *= delta + 1;
                }
            }
            cur = next;
        }
        for (t, v) in total.iter_mut().zip(cur) {
            *t = (*t + v) % p;
        }
    }
    total
}

/// Compares, module by module in `S^δ(S^d C^n)`, the polarization preimage for the balanced
/// split against the intersection over all splits of `δ` into at most `r` parts, both
/// relative to the Chow variety. Membership is sampled at random points of the cone mod a
/// large prime, so a reported dimension is exact with overwhelming probability.
pub fn split_diagnostic(d: u32, r: usize, delta: usize, n: usize, seed: u64, cfg: &Config) -> Result<SplitDiagnostic> {
    if r == 0 || delta == 0 || d == 0 {
        return invalid("d, r and the degree must be positive");
    }
    if r > 4 {
        return invalid("at most 4 summands are supported");
    }
    let p = linalg::primes()[0];
    let mut rng = StdRng::seed_from_u64(seed);
    let balanced = balanced_split(delta, r);
    let splits: Vec<Vec<usize>> = partitions(delta as u32, r, delta as u32)
        .into_iter()
        .map(|s| {
            let mut v: Vec<usize> = s.parts().iter().map(|&x| x as usize).collect();
            v.resize(r, 0);
            v
        })
        .collect();
    let index = |s: &[usize]| s.iter().rev().fold(0, |acc, &x| acc * (delta + 1) + x);
    let balanced_at = splits.iter().position(|s| *s == balanced).expect("balanced split is a split");
    let mut modules = Vec::new();
    for (lambda, _) in decompose(Space::SymSym, delta, d, n, cfg)?.iter() {
        let l = lambda.len();
        let hw = crate::glaction::hwv_space(delta, d, l, lambda, cfg)?;
        let mult = hw.len();
        let residues: Vec<Vec<(SymMonomial, u64)>> = hw
            .iter()
            .map(|f| {
                let f = f.primitive();
                f.terms().map(|(m, c)| (m.clone(), reduce_big(c.numer(), p))).collect()
            })
            .collect();
        let mut per_split: Vec<ModEchelon> = splits.iter().map(|_| ModEchelon::new(mult, p)).collect();
        let mut all = ModEchelon::new(mult, p);
        for _ in 0..2 * mult + 8 {
            let points: Vec<_> = (0..r).map(|_| chow_point(d, l, p, &mut rng)).collect();
            let coeffs: Vec<Vec<u64>> = residues.iter().map(|t| split_coefficients(t, &points, delta, p)).collect();
            for (s, ech) in splits.iter().zip(per_split.iter_mut()) {
                let row: Vec<u64> = coeffs.iter().map(|c| c[index(s)]).collect();
                ech.insert_dense(&row);
                all.insert_dense(&row);
            }
        }
        modules.push(SplitComparison {
            partition: lambda.clone(),
            mult,
            balanced: mult - per_split[balanced_at].rank(),
            all_splits: mult - all.rank(),
        });
    }
    let agrees = modules.iter().all(|m| m.balanced == m.all_splits);
    Ok(SplitDiagnostic { degree: delta, d, r, n, balanced_split: balanced, splits, modules, agrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn ancestors_of_a_strip() {
        let a = pieri_ancestors(&partition![7, 3, 2], 3);
        assert!(a.contains(&partition![4, 3, 2]));
        assert!(a.contains(&partition![7, 2]));
        assert!(!a.contains(&partition![7, 3, 2]));
    }

    #[test]
    fn heights() {
        assert_eq!(height_below(&[2, 0], &[1, 1]), Some(1));
        assert_eq!(height_below(&[1, 1], &[2, 0]), None);
        assert_eq!(height_below(&[2, 1, 0], &[0, 1, 2]), Some(4));
    }

    #[test]
    fn invariant_form_is_contravariant() {
        let f = SymPoly::parse("(e1^2*e2)*(e1*e3^2) + 3*(e1^3)*(e2*e3^2)", 3).unwrap();
        let g = SymPoly::parse("(e1^2*e3)*(e1*e2*e3) - 2*(e1^3)*(e2^2*e3)", 3).unwrap();
        for (i, j) in [(1, 2), (2, 3), (1, 3)] {
            let up = Operator::new(i, j).unwrap();
            let down = Operator::new(j, i).unwrap();
            assert_eq!(apply_operator(up, &f).inner(&g), f.inner(&apply_operator(down, &g)));
        }
    }

    #[test]
    fn profile_of_a_power() {
        let prof = derivative_hwv_profile(&partition![9], 3, 3, 1, &cfg()).unwrap();
        assert_eq!(prof.len(), 1);
        assert_eq!(prof[0].mu, partition![6]);
        assert!(prof[0].nonzero && prof[0].highest_weight);
    }

    #[test]
    fn profile_of_732() {
        let prof = derivative_hwv_profile(&partition![7, 3, 2], 4, 3, 3, &cfg()).unwrap();
        let e = prof.iter().find(|e| e.beta.exps() == [0, 1, 2]).unwrap();
        assert_eq!(e.mu, partition![7, 2]);
        assert!(e.nonzero && e.highest_weight);
    }

    #[test]
    fn second_minors_generate_first_secant_of_quadrics() {
        let (deg, c) = secant_first_nonzero(2, 1, 3, &cfg()).unwrap();
        assert_eq!(deg, 3);
        assert_eq!(c.content.to_string(), "S(2,2,2)");
    }

    #[test]
    fn complement_test_examples() {
        let comp = Decomposition::from_pairs([partition![6], partition![4, 2]].into_iter().map(|p| (p, 1)));
        assert!(!secant_membership_by_complement(&partition![12], (2, 2), &comp, &comp));
        let full = Decomposition::from_pairs([(partition![12], 1)]);
        assert!(secant_membership_by_complement(&partition![6, 6], (4, 4), &full, &full));
    }

    #[test]
    fn flagship_shapes() {
        assert_eq!(even_flagship(2, 2), partition![6, 6, 4, 4, 4, 4, 4, 4]);
        assert_eq!(even_threshold(2), partition![6, 6, 6, 2]);
    }

    #[test]
    fn routes_agree_on_quadric_ideal() {
        // I_3(Ch_2) = S_{(2,2,2)}; its first prolongation in S^4(S^2 C^4)
        let a = chow_ideal_component(3, 2, 4, &cfg()).unwrap();
        for lam in prolong_candidates(&a, &cfg()).unwrap() {
            let x = prolong_candidate_derivative(&a, &lam, &cfg()).unwrap();
            let y = prolong_candidate_polarization(&a, &lam, &cfg()).unwrap();
            assert_eq!(x.len(), y.len(), "{lam}");
            assert!(span_contains(&x, &y).unwrap() && span_contains(&y, &x).unwrap(), "{lam}");
        }
    }

    #[test]
    fn chain_containment_for_quadrics() {
        let a3 = chow_ideal_component(3, 2, 4, &cfg()).unwrap();
        let a4 = chow_ideal_component(4, 2, 4, &cfg()).unwrap();
        assert!(nested_prolong_check(&a3, &a4, 1, &cfg()).unwrap());
        let zero = IdealComponent::empty(3, 2, 4);
        assert!(nested_prolong_check(&zero, &a4, 1, &cfg()).unwrap());
    }
    #[test]
    fn one_summand_split_recovers_the_chow_ideal() {
        let diag = split_diagnostic(3, 1, 4, 4, 7, &cfg()).unwrap();
        let ideal: Vec<_> = diag.modules.iter().filter(|m| m.all_splits > 0).map(|m| m.partition.to_string()).collect();
        assert_eq!(ideal, ["(7,3,2)", "(6,2,2,2)", "(5,4,2,1)"]);
        assert!(diag.agrees);
    }

    #[test]
    fn split_diagnostic_for_quadrics() {
        let diag = split_diagnostic(2, 2, 5, 5, 1, &cfg()).unwrap();
        assert_eq!(diag.balanced_split, [3, 2]);
        assert_eq!(diag.splits.len(), 3);
        let survivors: Vec<_> = diag.modules.iter().filter(|m| m.all_splits > 0).map(|m| (m.partition.to_string(), m.all_splits)).collect();
        assert_eq!(survivors, [("(2,2,2,2,2)".to_string(), 1)]);
        assert!(diag.agrees);
        let low = split_diagnostic(2, 2, 4, 5, 1, &cfg()).unwrap();
        assert!(low.modules.iter().all(|m| m.all_splits == 0 && m.balanced == 0));
    }
}
