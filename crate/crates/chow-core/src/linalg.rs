//! Exact sparse linear algebra over the rationals.
//!
//! Small systems are eliminated fraction-free over the integers. Larger ones are solved
//! modulo several 62-bit primes, lifted by CRT and rational reconstruction, and then
//! verified exactly against the original matrix.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest column count handled by exact elimination.
pub const EXACT_COLS: usize = 500;
/// Largest nonzero count for which a modular rank is certified exactly.
pub const EXACT_RANK_NNZ: usize = 2000;

const MAX_PRIMES: usize = 48;

/// Sparse integer matrix stored by rows; rows are sorted by column with no zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<Vec<(usize, BigInt)>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn rows(&self) -> &[Vec<(usize, BigInt)>] {
        &self.rows
    }

    /// Adds a row given as unsorted (column, value) pairs; repeated columns are summed.
    pub fn push_row(&mut self, mut entries: Vec<(usize, BigInt)>) {
        entries.sort_by_key(|e| e.0);
        let mut row: Vec<(usize, BigInt)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            debug_assert!(c < self.ncols);
            match row.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => row.push((c, v)),
            }
        }
        row.retain(|e| !e.1.is_zero());
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    /// Adds a rational row, scaled to primitive integers.
    pub fn push_rational_row(&mut self, entries: Vec<(usize, BigRational)>) {
        let mut den = BigInt::one();
        for (_, v) in &entries {
            den = den.lcm(v.denom());
        }
        self.push_row(entries.into_iter().map(|(c, v)| (c, v.numer() * (&den / v.denom()))).collect());
    }

    /// Exact test that `x` lies in the kernel.
    pub fn annihilates(&self, x: &[BigRational]) -> bool {
        let mut den = BigInt::one();
        for v in x {
            den = den.lcm(v.denom());
        }
        let xi: Vec<BigInt> = x.iter().map(|v| v.numer() * (&den / v.denom())).collect();
        self.annihilates_int(&xi)
    }

    fn annihilates_int(&self, x: &[BigInt]) -> bool {
        self.rows.iter().all(|row| {
            let mut acc = BigInt::zero();
            for (c, v) in row {
                if !x[*c].is_zero() {
                    acc += v * &x[*c];
                }
            }
            acc.is_zero()
        })
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

#[inline]
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Descending list of the largest primes below `2^62`.
pub fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(MAX_PRIMES);
        let mut c = (1u64 << 62) - 1;
        while out.len() < MAX_PRIMES {
            if is_prime_u64(c) {
                out.push(c);
            }
            c -= 2;
        }
        out
    })
}

pub(crate) fn reduce_big(v: &BigInt, p: u64) -> u64 {
    let r = (v % BigInt::from(p)).to_i128().expect("residue fits");
    if r < 0 {
        (r + p as i128) as u64
    } else {
        r as u64
    }
}

type ModRow = Vec<(usize, u64)>;

/// Incremental row echelon form modulo a prime, with monic pivot rows.
#[derive(Clone, Debug)]
pub struct ModEchelon {
    p: u64,
    ncols: usize,
    pivots: Vec<Option<ModRow>>,
    rank: usize,
}

impl ModEchelon {
    pub fn new(ncols: usize, p: u64) -> Self {
        ModEchelon { p, ncols, pivots: vec![None; ncols], rank: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    fn reduce(&self, mut row: ModRow) -> ModRow {
        let p = self.p;
        let mut start = 0;
        loop {
            let Some(pos) = (start..row.len()).find(|&i| self.pivots[row[i].0].is_some()) else {
                return row;
            };
            let (col, coef) = row[pos];
            let piv = self.pivots[col].as_ref().expect("pivot");
            let f = p - coef;
            // row += f * piv, over columns >= col
            let mut merged: ModRow = Vec::with_capacity(row.len() + piv.len());
            merged.extend_from_slice(&row[..pos]);
            let (mut i, mut j) = (pos, 0);
            while i < row.len() || j < piv.len() {
                let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
                let cj = piv.get(j).map(|e| e.0).unwrap_or(usize::MAX);
                if ci < cj {
                    merged.push(row[i]);
                    i += 1;
                } else if cj < ci {
                    merged.push((cj, mul_mod(f, piv[j].1, p)));
                    j += 1;
                } else {
                    let v = (row[i].1 + mul_mod(f, piv[j].1, p)) % p;
                    if v != 0 {
                        merged.push((ci, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            row = merged;
            start = pos;
        }
    }

    /// Inserts a row; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, row: ModRow) -> bool {
        let row = self.reduce(row);
        let Some(&(lead, c)) = row.first() else {
            return false;
        };
        let inv = inv_mod(c, self.p);
        let row: ModRow = row.into_iter().map(|(j, v)| (j, mul_mod(v, inv, self.p))).collect();
        self.pivots[lead] = Some(row);
        self.rank += 1;
        true
    }

    pub fn insert_dense(&mut self, v: &[u64]) -> bool {
        self.insert(v.iter().enumerate().filter(|e| *e.1 != 0).map(|(j, &x)| (j, x)).collect())
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivots[c].is_some()).collect()
    }

    /// Kernel basis with an identity block on the free columns, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let free: Vec<usize> = (0..self.ncols).filter(|&c| self.pivots[c].is_none()).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![0u64; self.ncols];
                x[f] = 1;
                for c in (0..self.ncols).rev() {
                    if let Some(row) = &self.pivots[c] {
                        let mut acc = 0u64;
                        for &(j, v) in &row[1..] {
                            if x[j] != 0 {
                                acc = (acc + mul_mod(v, x[j], p)) % p;
                            }
                        }
                        x[c] = (p - acc) % p;
                    }
                }
                x
            })
            .collect()
    }
}

fn echelon_mod(m: &SparseMatrix, p: u64) -> ModEchelon {
    let mut e = ModEchelon::new(m.ncols, p);
    for row in &m.rows {
        if e.rank == m.ncols {
            break;
        }
        let r: ModRow = row.iter().map(|(c, v)| (*c, reduce_big(v, p))).filter(|e| e.1 != 0).collect();
        e.insert(r);
    }
    e
}

pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    echelon_mod(m, p).rank
}

/// Fraction-free integer echelon form, pivots indexed by column.
struct IntEchelon {
    pivots: Vec<Option<Vec<(usize, BigInt)>>>,
    rank: usize,
}

fn make_primitive(row: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

impl IntEchelon {
    fn new(ncols: usize) -> Self {
        IntEchelon { pivots: vec![None; ncols], rank: 0 }
    }

    fn insert(&mut self, mut row: Vec<(usize, BigInt)>) -> bool {
        loop {
            let Some(pos) = row.iter().position(|e| self.pivots[e.0].is_some()) else {
                break;
            };
            let col = row[pos].0;
            let piv = self.pivots[col].as_ref().expect("pivot");
            let a = piv[0].1.clone();
            let b = row[pos].1.clone();
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            // row = a*row - b*piv
            let mut merged = Vec::with_capacity(row.len() + piv.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < piv.len() {
                let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
                let cj = piv.get(j).map(|e| e.0).unwrap_or(usize::MAX);
                if ci < cj {
                    merged.push((ci, &a * &row[i].1));
                    i += 1;
                } else if cj < ci {
                    merged.push((cj, -(&b * &piv[j].1)));
                    j += 1;
                } else {
                    let v = &a * &row[i].1 - &b * &piv[j].1;
                    if !v.is_zero() {
                        merged.push((ci, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            make_primitive(&mut merged);
            row = merged;
        }
        let Some(lead) = row.first().map(|e| e.0) else {
            return false;
        };
        self.pivots[lead] = Some(row);
        self.rank += 1;
        true
    }

    fn kernel(&self) -> Vec<Vec<BigRational>> {
        let ncols = self.pivots.len();
        let free: Vec<usize> = (0..ncols).filter(|&c| self.pivots[c].is_none()).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![BigRational::zero(); ncols];
                x[f] = BigRational::one();
                for c in (0..ncols).rev() {
                    if let Some(row) = &self.pivots[c] {
                        let mut acc = BigRational::zero();
                        for (j, v) in &row[1..] {
                            if !x[*j].is_zero() {
                                acc += &x[*j] * BigRational::from_integer(v.clone());
                            }
                        }
                        if !acc.is_zero() {
                            x[c] = -acc / BigRational::from_integer(row[0].1.clone());
                        }
                    }
                }
                x
            })
            .collect()
    }
}

/// Kernel basis, identity on the free columns, ordered by free column.
pub fn nullspace(m: &SparseMatrix) -> Result<Vec<Vec<BigRational>>> {
    if m.ncols <= EXACT_COLS {
        Ok(nullspace_exact(m))
    } else {
        nullspace_modular(m)
    }
}

pub fn nullspace_exact(m: &SparseMatrix) -> Vec<Vec<BigRational>> {
    let mut e = IntEchelon::new(m.ncols);
    for row in &m.rows {
        if e.rank == m.ncols {
            break;
        }
        e.insert(row.clone());
    }
    e.kernel()
}

/// Reconstructs `r/s ≡ a (mod m)` with `|r|, |s| ≤ sqrt(m/2)`.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, s1))
}

pub fn nullspace_modular(m: &SparseMatrix) -> Result<Vec<Vec<BigRational>>> {
    let mut best_pivots: Option<Vec<usize>> = None;
    let mut residues: Vec<Vec<BigInt>> = Vec::new();
    let mut modulus = BigInt::one();
    let mut agreeing = 0usize;
    for &p in primes() {
        let e = echelon_mod(m, p);
        let piv = e.pivot_columns();
        let better = match &best_pivots {
            None => true,
            Some(b) => piv.len() > b.len() || (piv.len() == b.len() && piv < *b),
        };
        if better {
            best_pivots = Some(piv.clone());
            residues = e.kernel().into_iter().map(|v| v.into_iter().map(BigInt::from).collect()).collect();
            modulus = BigInt::from(p);
            agreeing = 1;
        } else if best_pivots.as_ref() == Some(&piv) {
            let ker = e.kernel();
            let pb = BigInt::from(p);
            let minv = BigInt::from(inv_mod(reduce_big(&modulus, p), p));
            for (acc, v) in residues.iter_mut().zip(ker) {
                for (a, b) in acc.iter_mut().zip(v) {
                    // a + M * ((b - a) * M^{-1} mod p)
                    let t = ((BigInt::from(b) - &*a) * &minv).mod_floor(&pb);
                    *a += &modulus * t;
                }
            }
            modulus *= &pb;
            agreeing += 1;
        } else {
            continue;
        }
        if agreeing < 2 {
            continue;
        }
        if let Some(basis) = lift(&residues, &modulus) {
            if basis.iter().all(|x| m.annihilates(x)) {
                log::debug!("modular nullspace: {} cols, {} vectors, {agreeing} primes", m.ncols, basis.len());
                return Ok(basis);
            }
        }
    }
    Err(Error::Linalg(format!("modular nullspace did not stabilize after {MAX_PRIMES} primes")))
}

fn lift(residues: &[Vec<BigInt>], modulus: &BigInt) -> Option<Vec<Vec<BigRational>>> {
    residues
        .iter()
        .map(|v| {
            v.iter()
                .map(|a| if a.is_zero() { Some(BigRational::zero()) } else { rational_reconstruct(a, modulus) })
                .collect::<Option<Vec<_>>>()
        })
        .collect()
}

/// Rank over the rationals: two primes must agree, and small matrices are certified exactly.
pub fn rank(m: &SparseMatrix, min_primes: usize) -> Result<usize> {
    let mut counts: Vec<usize> = Vec::new();
    let mut best = 0usize;
    for &p in primes() {
        let r = rank_mod_p(m, p);
        counts.push(r);
        best = best.max(r);
        let agree = counts.iter().filter(|&&c| c == best).count();
        if agree >= min_primes.max(2) {
            break;
        }
    }
    if m.nnz() <= EXACT_RANK_NNZ {
        let mut e = IntEchelon::new(m.ncols);
        for row in &m.rows {
            e.insert(row.clone());
        }
        if e.rank != best {
            return Err(Error::Linalg(format!("modular rank {best} disagrees with exact rank {}", e.rank)));
        }
    }
    Ok(best)
}

/// Clears denominators of a rational vector; the result has gcd 1 and keeps the sign.
pub fn primitive_int(v: &[BigRational]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for x in v {
        den = den.lcm(x.denom());
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &out {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in out.iter_mut() {
            *x /= &g;
        }
    }
    out
}
