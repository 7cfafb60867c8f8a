//! Monomial bases of `S^d V` and `S^k(S^d V)`, exact polynomials over them, weight spaces,
//! partial derivatives and polarization.
//!
//! A basis vector `e^α` of `S^d V` is an [`ExpVec`]; a product of `k` of them is a
//! [`SymMonomial`]. The `e^α` are treated as independent polynomial variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{invalid, Error, Result};

/// Graded reverse lexicographic comparison of exponent vectors.
pub fn grevlex_cmp(a: &[u8], b: &[u8]) -> Ordering {
    let da: u32 = a.iter().map(|&x| x as u32).sum();
    let db: u32 = b.iter().map(|&x| x as u32).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len().min(b.len())).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        a.len().cmp(&b.len())
    })
}

/// Exponent vector of a monomial `e_1^{α_1}⋯e_n^{α_n}` of `S^d V`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExpVec(Vec<u8>);

impl ExpVec {
    pub fn new(exps: Vec<u8>) -> Self {
        ExpVec(exps)
    }

    pub fn from_u32(exps: &[u32]) -> Result<Self> {
        exps.iter()
            .map(|&x| u8::try_from(x).map_err(|_| Error::Invalid(format!("exponent {x} too large"))))
            .collect::<Result<Vec<u8>>>()
            .map(ExpVec)
    }

    /// `e_i` raised to `d`, with 1-based `i`.
    pub fn power(i: usize, d: u8, n: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = d;
        ExpVec(v)
    }

    pub fn exps(&self) -> &[u8] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&x| x as u32).sum()
    }

    /// `α!` = product of factorials of the exponents.
    pub fn factorial(&self) -> BigUint {
        self.0.iter().map(|&a| factorial(a as u32)).product()
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_factor(f, &self.0)
    }
}

pub(crate) fn factorial(n: u32) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

/// All exponent vectors of degree `d` in `n` variables, sorted descending.
pub fn exp_vecs(d: u32, n: usize) -> Vec<ExpVec> {
    fn rec(i: usize, left: u32, n: usize, cur: &mut Vec<u8>, out: &mut Vec<ExpVec>) {
        if i + 1 == n {
            cur.push(left as u8);
            out.push(ExpVec(cur.clone()));
            cur.pop();
            return;
        }
        for a in (0..=left).rev() {
            cur.push(a as u8);
            rec(i + 1, left - a, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(ExpVec(Vec::new()));
        }
        return out;
    }
    rec(0, d, n, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

pub(crate) type Bytes = SmallVec<[u8; 64]>;

/// A product of `k` basis vectors of `S^d V`, kept as a sorted (descending) multiset.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymMonomial {
    n: u8,
    data: Bytes,
}

impl SymMonomial {
    pub fn one(n: usize) -> Self {
        SymMonomial { n: n as u8, data: Bytes::new() }
    }

    pub fn from_factors<'a>(n: usize, factors: impl IntoIterator<Item = &'a [u8]>) -> Self {
        let mut fs: Vec<&[u8]> = factors.into_iter().collect();
        fs.sort_by(|a, b| grevlex_cmp(b, a));
        let mut data = Bytes::with_capacity(fs.len() * n);
        for f in fs {
            debug_assert_eq!(f.len(), n);
            data.extend_from_slice(f);
        }
        SymMonomial { n: n as u8, data }
    }

    pub fn from_expvecs(n: usize, factors: &[ExpVec]) -> Self {
        Self::from_factors(n, factors.iter().map(|e| e.exps()))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn k(&self) -> usize {
        if self.n == 0 {
            0
        } else {
            self.data.len() / self.n as usize
        }
    }

    pub fn factors(&self) -> impl Iterator<Item = &[u8]> + '_ {
        self.data.chunks_exact(self.n.max(1) as usize)
    }

    pub fn factor(&self, i: usize) -> &[u8] {
        let n = self.n as usize;
        &self.data[i * n..(i + 1) * n]
    }

    pub fn to_expvecs(&self) -> Vec<ExpVec> {
        self.factors().map(|f| ExpVec(f.to_vec())).collect()
    }

    /// Distinct factors with their multiplicities, in descending order.
    pub fn grouped(&self) -> Vec<(&[u8], u32)> {
        let mut out: Vec<(&[u8], u32)> = Vec::new();
        for f in self.factors() {
            match out.last_mut() {
                Some((g, m)) if *g == f => *m += 1,
                _ => out.push((f, 1)),
            }
        }
        out
    }

    pub fn multiplicity(&self, f: &[u8]) -> u32 {
        self.factors().filter(|g| *g == f).count() as u32
    }

    pub fn weight(&self) -> Vec<u32> {
        let mut w = vec![0u32; self.n as usize];
        for f in self.factors() {
            for (x, &a) in w.iter_mut().zip(f) {
                *x += a as u32;
            }
        }
        w
    }

    /// Multiplies by one more factor.
    pub fn with_factor(&self, f: &[u8]) -> SymMonomial {
        let n = self.n as usize;
        let k = self.k();
        let pos = (0..k).find(|&i| grevlex_cmp(self.factor(i), f) == Ordering::Less).unwrap_or(k);
        let mut data = Bytes::with_capacity(self.data.len() + n);
        data.extend_from_slice(&self.data[..pos * n]);
        data.extend_from_slice(f);
        data.extend_from_slice(&self.data[pos * n..]);
        SymMonomial { n: self.n, data }
    }

    /// Removes one copy of `f`, if present.
    pub fn without_factor(&self, f: &[u8]) -> Option<SymMonomial> {
        let pos = self.factors().position(|g| g == f)?;
        Some(self.without_index(pos))
    }

    pub fn without_index(&self, pos: usize) -> SymMonomial {
        let n = self.n as usize;
        let mut data = self.data.clone();
        data.drain(pos * n..(pos + 1) * n);
        SymMonomial { n: self.n, data }
    }

    /// Replaces the factor at `pos` by `f` and restores canonical order.
    pub fn replace_index(&self, pos: usize, f: &[u8]) -> SymMonomial {
        self.without_index(pos).with_factor(f)
    }

    /// Squared norm of the monomial under the GL-invariant form, `Π m_α! (α!)^{m_α}`.
    pub fn norm_sq(&self) -> BigUint {
        let mut out = BigUint::one();
        for (f, m) in self.grouped() {
            out *= factorial(m);
            let af: BigUint = f.iter().map(|&a| factorial(a as u32)).product();
            out *= af.pow(m);
        }
        out
    }
}

impl Ord for SymMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.factors().zip(other.factors()) {
            match grevlex_cmp(a, b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.k().cmp(&other.k())
    }
}

impl PartialOrd for SymMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, exps: &[u8]) -> fmt::Result {
    let mut first = true;
    for (i, &a) in exps.iter().enumerate() {
        if a == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if a == 1 {
            write!(f, "e{}", i + 1)?;
        } else {
            write!(f, "e{}^{}", i + 1, a)?;
        }
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

impl fmt::Display for SymMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let groups = self.grouped();
        if groups.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, m)) in groups.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "(")?;
            write_factor(f, g)?;
            write!(f, ")")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

pub fn weight_of(m: &SymMonomial) -> Vec<u32> {
    m.weight()
}

/// All monomials of `S^k(S^d C^n)` of weight `w`, in descending monomial order.
pub fn enumerate_weight_space(k: usize, d: u32, n: usize, w: &[u32]) -> Vec<SymMonomial> {
    let mut out = Vec::new();
    if w.len() != n || w.iter().sum::<u32>() != k as u32 * d {
        return out;
    }
    let basis: Vec<ExpVec> = exp_vecs(d, n).into_iter().filter(|e| e.exps().iter().zip(w).all(|(&a, &b)| a as u32 <= b)).collect();
    let mut rem: Vec<u32> = w.to_vec();
    let mut chosen: Vec<usize> = Vec::with_capacity(k);

    fn rec(start: usize, left: usize, basis: &[ExpVec], rem: &mut Vec<u32>, chosen: &mut Vec<usize>, n: usize, out: &mut Vec<SymMonomial>) {
        if left == 0 {
            if rem.iter().all(|&x| x == 0) {
                let mut data = Bytes::with_capacity(chosen.len() * n);
                for &i in chosen.iter() {
                    data.extend_from_slice(basis[i].exps());
                }
                out.push(SymMonomial { n: n as u8, data });
            }
            return;
        }
        for i in start..basis.len() {
            let e = basis[i].exps();
            if e.iter().zip(rem.iter()).any(|(&a, &r)| a as u32 > r) {
                continue;
            }
            for (r, &a) in rem.iter_mut().zip(e) {
                *r -= a as u32;
            }
            chosen.push(i);
            rec(i, left - 1, basis, rem, chosen, n, out);
            chosen.pop();
            for (r, &a) in rem.iter_mut().zip(e) {
                *r += a as u32;
            }
        }
    }
    rec(0, k, &basis, &mut rem, &mut chosen, n, &mut out);
    out
}

/// Every monomial of `S^k(S^d C^n)`, in descending order.
pub fn enumerate_all(k: usize, d: u32, n: usize) -> Vec<SymMonomial> {
    let basis = exp_vecs(d, n);
    let mut out = Vec::new();
    fn rec(start: usize, left: usize, basis: &[ExpVec], cur: &mut Vec<usize>, n: usize, out: &mut Vec<SymMonomial>) {
        if left == 0 {
            let mut data = Bytes::with_capacity(cur.len() * n);
            for &i in cur.iter() {
                data.extend_from_slice(basis[i].exps());
            }
            out.push(SymMonomial { n: n as u8, data });
            return;
        }
        for i in start..basis.len() {
            cur.push(i);
            rec(i, left - 1, basis, cur, n, out);
            cur.pop();
        }
    }
    rec(0, k, &basis, &mut Vec::new(), n, &mut out);
    out
}

/// `dim S^k(S^d C^n)` = binom(binom(n+d−1, d) + k − 1, k).
pub fn full_dimension(k: usize, d: u32, n: usize) -> BigUint {
    let inner = binomial(n as u64 + d as u64 - 1, d as u64);
    let inner = inner.to_u64().expect("inner dimension fits");
    binomial(inner + k as u64 - 1, k as u64)
}

pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The exponent vector formed by the last `d` units of `weight`, read from the right.
pub fn lowest_derivative_index(weight: &[u32], d: u32) -> Result<ExpVec> {
    if weight.iter().sum::<u32>() < d {
        return invalid("weight has fewer than d units");
    }
    let mut out = vec![0u8; weight.len()];
    let mut left = d;
    for i in (0..weight.len()).rev() {
        let take = weight[i].min(left);
        out[i] = take as u8;
        left -= take;
        if left == 0 {
            break;
        }
    }
    Ok(ExpVec(out))
}

/// A sparse exact linear combination of monomials of `S^k(S^d C^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    k: usize,
    d: u32,
    n: usize,
    terms: FxHashMap<SymMonomial, BigRational>,
}

impl SymPoly {
    pub fn zero(k: usize, d: u32, n: usize) -> Self {
        SymPoly { k, d, n, terms: FxHashMap::default() }
    }

    pub fn monomial(m: SymMonomial, d: u32, c: BigRational) -> Self {
        let mut p = SymPoly::zero(m.k(), d, m.n());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(k: usize, d: u32, n: usize, terms: impl IntoIterator<Item = (SymMonomial, BigRational)>) -> Self {
        let mut p = SymPoly::zero(k, d, n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn from_int_terms(k: usize, d: u32, n: usize, terms: impl IntoIterator<Item = (SymMonomial, BigInt)>) -> Self {
        Self::from_terms(k, d, n, terms.into_iter().map(|(m, c)| (m, BigRational::from_integer(c))))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &SymMonomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymMonomial, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in descending monomial order.
    pub fn sorted_terms(&self) -> Vec<(&SymMonomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp(a.0));
        v
    }

    pub fn leading(&self) -> Option<(&SymMonomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| a.0.cmp(b.0))
    }

    pub fn add_term(&mut self, m: SymMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SymPoly, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        for (m, a) in other.terms.iter() {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.add_scaled(other, &BigRational::one());
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.add_scaled(other, &-BigRational::one());
        out
    }

    pub fn scale(&self, c: &BigRational) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.k, self.d, self.n);
        }
        SymPoly { k: self.k, d: self.d, n: self.n, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// The common weight of all terms, if there is one.
    pub fn weight(&self) -> Option<Vec<u32>> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight();
        it.all(|m| m.weight() == w).then_some(w)
    }

    /// Scales to integer coefficients with gcd 1 and a positive leading coefficient.
    pub fn primitive(&self) -> SymPoly {
        let Some((_, lead)) = self.leading() else {
            return self.clone();
        };
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(&(c.numer() * (&den / c.denom())));
        }
        let mut scale = BigRational::new(den, g);
        if lead.is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }

    /// Integer coefficients, if all coefficients are integers.
    pub fn int_terms(&self) -> Option<Vec<(SymMonomial, BigInt)>> {
        self.terms.iter().map(|(m, c)| c.is_integer().then(|| (m.clone(), c.to_integer()))).collect()
    }

    /// The same polynomial read in `n` variables; the dropped variables must not occur.
    pub fn embed(&self, n: usize) -> Result<SymPoly> {
        let mut out = SymPoly::zero(self.k, self.d, n);
        for (m, c) in self.terms.iter() {
            let mut fs: Vec<Vec<u8>> = Vec::with_capacity(m.k());
            for f in m.factors() {
                if f.len() > n && f[n..].iter().any(|&a| a > 0) {
                    return invalid(format!("{m} uses a variable beyond e{n}"));
                }
                let mut g = f[..f.len().min(n)].to_vec();
                g.resize(n, 0);
                fs.push(g);
            }
            out.add_term(SymMonomial::from_factors(n, fs.iter().map(|f| f.as_slice())), c.clone());
        }
        Ok(out)
    }

    /// Formal derivative with respect to the variable `e^α`.
    pub fn partial_derivative(&self, alpha: &[u8]) -> Result<SymPoly> {
        if self.k == 0 {
            return invalid("cannot differentiate a constant");
        }
        if alpha.len() != self.n || alpha.iter().map(|&a| a as u32).sum::<u32>() != self.d {
            return invalid("derivative index has the wrong degree or length");
        }
        let mut out = SymPoly::zero(self.k - 1, self.d, self.n);
        for (m, c) in self.terms.iter() {
            let mult = m.multiplicity(alpha);
            if mult > 0 {
                let rest = m.without_factor(alpha).expect("factor present");
                out.add_term(rest, c * BigRational::from_integer(BigInt::from(mult)));
            }
        }
        Ok(out)
    }

    /// Multiplication by the variable `e^α`.
    pub fn mul_factor(&self, alpha: &[u8]) -> SymPoly {
        let mut out = SymPoly::zero(self.k + 1, self.d, self.n);
        for (m, c) in self.terms.iter() {
            out.add_term(m.with_factor(alpha), c.clone());
        }
        out
    }

    /// The GL-invariant bilinear form in which monomials are orthogonal.
    pub fn inner(&self, other: &SymPoly) -> BigRational {
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = BigRational::zero();
        for (m, a) in small.terms.iter() {
            if let Some(b) = big.terms.get(m) {
                acc += a * b * BigRational::from_integer(BigInt::from(m.norm_sq()));
            }
        }
        acc
    }

    /// Polarization into a tensor product of symmetric powers of `S^d V`, one slot per
    /// entry of `split`. Two slots give `Σ_T ∂^T f ⊗ e^T` with no prefactor; more slots
    /// iterate that rule on the left slot.
    pub fn polarize(&self, split: &[usize]) -> Result<Polarization> {
        if split.is_empty() || split.iter().sum::<usize>() != self.k {
            return invalid(format!("split {split:?} does not sum to {}", self.k));
        }
        let mut cur: BTreeMap<Vec<SymMonomial>, BigRational> = BTreeMap::new();
        for (m, c) in self.terms.iter() {
            cur.insert(vec![m.clone()], c.clone());
        }
        for &p in split[1..].iter().rev() {
            let mut next: BTreeMap<Vec<SymMonomial>, BigRational> = BTreeMap::new();
            for (slots, c) in cur {
                let (head, tail) = slots.split_first().expect("nonempty");
                for (rest, sub, coef) in sub_multisets(head, p) {
                    let mut key = Vec::with_capacity(tail.len() + 2);
                    key.push(rest);
                    key.push(sub);
                    key.extend_from_slice(tail);
                    let e = next.entry(key).or_insert_with(BigRational::zero);
                    *e += &c * BigRational::from_integer(coef);
                }
            }
            next.retain(|_, c| !c.is_zero());
            cur = next;
        }
        Ok(Polarization { split: split.to_vec(), terms: cur })
    }

    /// Text form `c*(e1^3)^2*(e1*e2^2) + …` with terms in descending order.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.to_string();
            if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format_rational(&abs));
                if m.k() > 0 {
                    s.push('*');
                    s.push_str(&mono);
                }
            }
        }
        s
    }

    /// Parses the text form; `k` and `d` are read off the terms.
    pub fn parse(text: &str, n: usize) -> Result<SymPoly> {
        parse_poly(text, n)
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.sorted_terms()
            .into_iter()
            .map(|(m, c)| JsonTerm {
                coeff: format_rational(c),
                factors: m.factors().map(|f| f.iter().map(|&x| x as u32).collect()).collect(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm], k: usize, d: u32, n: usize) -> Result<SymPoly> {
        let mut p = SymPoly::zero(k, d, n);
        for t in terms {
            let c = parse_rational(&t.coeff)?;
            if t.factors.len() != k {
                return invalid(format!("term has {} factors, expected {k}", t.factors.len()));
            }
            let fs = t
                .factors
                .iter()
                .map(|f| {
                    if f.len() != n || f.iter().sum::<u32>() != d {
                        return invalid(format!("factor {f:?} is not a degree-{d} exponent vector in {n} variables"));
                    }
                    ExpVec::from_u32(f)
                })
                .collect::<Result<Vec<_>>>()?;
            p.add_term(SymMonomial::from_expvecs(n, &fs), c);
        }
        Ok(p)
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for SymPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub factors: Vec<Vec<u32>>,
}

/// Output of [`SymPoly::polarize`]: coefficients indexed by one monomial per slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    pub split: Vec<usize>,
    pub terms: BTreeMap<Vec<SymMonomial>, BigRational>,
}

impl Polarization {
    /// Left-slot polynomial paired with a fixed monomial in the remaining slots.
    pub fn slice(&self, right: &[SymMonomial], d: u32, n: usize) -> SymPoly {
        let mut p = SymPoly::zero(self.split[0], d, n);
        for (key, c) in self.terms.iter() {
            if &key[1..] == right {
                p.add_term(key[0].clone(), c.clone());
            }
        }
        p
    }
}

/// Splits `m` into (rest, sub) with `sub` of size `p`, weighted by the falling factorials
/// produced by differentiating `m` by `sub`.
fn sub_multisets(m: &SymMonomial, p: usize) -> Vec<(SymMonomial, SymMonomial, BigInt)> {
    let groups: Vec<(Vec<u8>, u32)> = m.grouped().into_iter().map(|(f, c)| (f.to_vec(), c)).collect();
    let n = m.n();
    let mut out = Vec::new();
    fn rec(
        i: usize,
        left: usize,
        groups: &[(Vec<u8>, u32)],
        take: &mut Vec<u32>,
        n: usize,
        out: &mut Vec<(SymMonomial, SymMonomial, BigInt)>,
    ) {
        if i == groups.len() {
            if left == 0 {
                let mut rest: Vec<&[u8]> = Vec::new();
                let mut sub: Vec<&[u8]> = Vec::new();
                let mut coef = BigInt::one();
                for ((f, c), &t) in groups.iter().zip(take.iter()) {
                    for _ in 0..t {
                        sub.push(f);
                    }
                    for _ in 0..(c - t) {
                        rest.push(f);
                    }
                    for j in 0..t {
                        coef *= c - j;
                    }
                }
                out.push((SymMonomial::from_factors(n, rest), SymMonomial::from_factors(n, sub), coef));
            }
            return;
        }
        for t in 0..=groups[i].1.min(left as u32) {
            take.push(t);
            rec(i + 1, left - t as usize, groups, take, n, out);
            take.pop();
        }
    }
    rec(0, p, &groups, &mut Vec::new(), n, &mut out);
    out
}

pub fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_poly(text: &str, n: usize) -> Result<SymPoly> {
    let text = text.trim();
    if text == "0" {
        return invalid("the zero polynomial has no ambient degree; build it with SymPoly::zero");
    }
    // split into signed terms at top-level + and -
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    let mut prev_exp = false;
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && !prev_exp {
            if !cur.trim().is_empty() {
                terms.push((neg, std::mem::take(&mut cur)));
            } else if !cur.is_empty() {
                cur.clear();
            }
            neg = ch == '-';
            continue;
        }
        if !ch.is_whitespace() {
            prev_exp = ch == '^';
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() {
        terms.push((neg, cur));
    }
    if terms.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut shape: Option<(usize, u32)> = None;
    let mut out: Vec<(SymMonomial, BigRational)> = Vec::new();
    for (neg, t) in terms {
        let (m, mut c) = parse_term(t.trim(), n)?;
        if neg {
            c = -c;
        }
        let d = m.factors().next().map(|f| f.iter().map(|&a| a as u32).sum()).unwrap_or(0);
        let sh = (m.k(), d);
        if m.factors().any(|f| f.iter().map(|&a| a as u32).sum::<u32>() != d) {
            return Err(Error::Parse(format!("factors of unequal degree in {t:?}")));
        }
        match shape {
            None => shape = Some(sh),
            Some(s) if s != sh => return Err(Error::Parse(format!("term {t:?} has shape {sh:?}, expected {s:?}"))),
            _ => {}
        }
        out.push((m, c));
    }
    let (k, d) = shape.expect("nonempty");
    Ok(SymPoly::from_terms(k, d, n, out))
}

fn parse_term(t: &str, n: usize) -> Result<(SymMonomial, BigRational)> {
    let mut pieces: Vec<String> = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in t.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if ch == '*' && depth == 0 {
            pieces.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    pieces.push(cur);
    let mut coeff = BigRational::one();
    let mut factors: Vec<Vec<u8>> = Vec::new();
    for p in pieces {
        if p.is_empty() {
            return Err(Error::Parse(format!("empty factor in {t:?}")));
        }
        if let Some(body) = p.strip_prefix('(') {
            let close = body.rfind(')').ok_or_else(|| Error::Parse(format!("unbalanced {p:?}")))?;
            let inner = &body[..close];
            let after = &body[close + 1..];
            let power: u32 = if after.is_empty() {
                1
            } else {
                after.strip_prefix('^').and_then(|s| s.parse().ok()).ok_or_else(|| Error::Parse(format!("bad power in {p:?}")))?
            };
            let f = parse_factor(inner, n)?;
            for _ in 0..power {
                factors.push(f.clone());
            }
        } else if p == "1" && factors.is_empty() {
            continue;
        } else {
            coeff *= parse_rational(&p)?;
        }
    }
    Ok((SymMonomial::from_factors(n, factors.iter().map(|f| f.as_slice())), coeff))
}

fn parse_factor(s: &str, n: usize) -> Result<Vec<u8>> {
    let mut out = vec![0u8; n];
    if s == "1" {
        return Ok(out);
    }
    for var in s.split('*') {
        let rest = var.strip_prefix('e').ok_or_else(|| Error::Parse(format!("bad variable {var:?}")))?;
        let (idx, pow) = match rest.split_once('^') {
            Some((i, p)) => (i, p),
            None => (rest, "1"),
        };
        let idx: usize = idx.parse().map_err(|_| Error::Parse(format!("bad index in {var:?}")))?;
        let pow: u8 = pow.parse().map_err(|_| Error::Parse(format!("bad exponent in {var:?}")))?;
        if idx == 0 || idx > n {
            return Err(Error::Parse(format!("variable e{idx} outside 1..={n}")));
        }
        out[idx - 1] += pow;
    }
    Ok(out)
}
