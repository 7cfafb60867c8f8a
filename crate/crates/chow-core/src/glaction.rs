//! Action of the Lie algebra of GL(V) on `S^k(S^d V)` and highest weight vectors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use crate::combinatorics::Partition;
use crate::config::Config;
use crate::error::{invalid, Result};
use crate::linalg::{self, SparseMatrix};
use crate::plethysm::{weight_multiplicity, Space};
use crate::symalg::{enumerate_weight_space, ExpVec, SymMonomial, SymPoly};

/// The operator `E^i_j` sending `e_j` to `e_i`; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Operator {
    pub i: usize,
    pub j: usize,
}

impl Operator {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 {
            return invalid(format!("E^{i}_{j} is not an off-diagonal operator"));
        }
        Ok(Operator { i, j })
    }

    /// The simple raising operator `E^i_{i+1}`.
    pub fn raising(i: usize) -> Self {
        Operator { i, j: i + 1 }
    }

    /// The simple lowering operator `E^{i+1}_i`.
    pub fn lowering(i: usize) -> Self {
        Operator { i: i + 1, j: i }
    }

    pub fn is_raising(&self) -> bool {
        self.i < self.j
    }

    /// Image of one factor: `α_j · e^{α − ε_j + ε_i}`, or nothing when `α_j = 0`.
    pub fn apply_exp(&self, alpha: &[u8]) -> Option<(Vec<u8>, u32)> {
        let a = alpha[self.j - 1];
        if a == 0 {
            return None;
        }
        let mut out = alpha.to_vec();
        out[self.j - 1] -= 1;
        out[self.i - 1] += 1;
        Some((out, a as u32))
    }
}

/// Leibniz action on a single monomial; the output monomials are distinct.
pub fn apply_to_monomial(op: Operator, m: &SymMonomial) -> Vec<(SymMonomial, u64)> {
    let mut out = Vec::new();
    for (f, mult) in m.grouped() {
        if let Some((g, a)) = op.apply_exp(f) {
            let rest = m.without_factor(f).expect("factor present");
            out.push((rest.with_factor(&g), mult as u64 * a as u64));
        }
    }
    out
}

pub fn apply_operator(op: Operator, f: &SymPoly) -> SymPoly {
    let mut out = SymPoly::zero(f.k(), f.d(), f.n());
    if op.i > f.n() || op.j > f.n() {
        return out;
    }
    for (m, c) in f.terms() {
        for (img, a) in apply_to_monomial(op, m) {
            out.add_term(img, c * BigRational::from_integer(BigInt::from(a)));
        }
    }
    out
}

/// Whether every simple raising operator kills `f`.
pub fn is_highest_weight(f: &SymPoly) -> bool {
    (1..f.n()).all(|i| apply_operator(Operator::raising(i), f).is_zero())
}

/// Whether every raising operator `E^i_j`, `i < j`, kills `f`.
pub fn killed_by_all_raising(f: &SymPoly) -> bool {
    (1..=f.n()).all(|j| (1..j).all(|i| apply_operator(Operator { i, j }, f).is_zero()))
}

/// Moves one unit of `α` from slot `j` to slot `j + 1` (1-based).
pub fn normalized_lower(alpha: &ExpVec, j: usize) -> Result<ExpVec> {
    let e = alpha.exps();
    if j == 0 || j >= e.len() {
        return invalid(format!("slot {j} has no successor in {} variables", e.len()));
    }
    if e[j - 1] == 0 {
        return invalid(format!("exponent {j} of {alpha} is zero"));
    }
    let mut v = e.to_vec();
    v[j - 1] -= 1;
    v[j] += 1;
    Ok(ExpVec::new(v))
}

/// Checks `∂_α(E f) − E(∂_α f) = (1 + α_{j+1}) ∂f/∂(Ẽ α)` for `E = E^j_{j+1}`, the right side
/// being zero when `α_j = 0`.
pub fn commutator_check(f: &SymPoly, alpha: &ExpVec, j: usize) -> Result<bool> {
    let e = alpha.exps();
    if e.len() != f.n() || alpha.degree() != f.d() {
        return invalid("derivative index does not match the ambient space");
    }
    if j == 0 || j >= f.n() {
        return invalid(format!("no operator E^{j}_{} in {} variables", j + 1, f.n()));
    }
    if f.k() == 0 {
        return Ok(true);
    }
    let op = Operator::raising(j);
    let lhs = apply_operator(op, f)
        .partial_derivative(e)?
        .sub(&apply_operator(op, &f.partial_derivative(e)?));
    let rhs = match normalized_lower(alpha, j) {
        Ok(lowered) => f
            .partial_derivative(lowered.exps())?
            .scale(&BigRational::from_integer(BigInt::from(1 + e[j] as u32))),
        Err(_) => SymPoly::zero(f.k() - 1, f.d(), f.n()),
    };
    Ok(lhs == rhs)
}

/// Monomial basis of one weight space with an index for coordinates.
#[derive(Clone, Debug)]
pub struct WeightBasis {
    pub k: usize,
    pub d: u32,
    pub n: usize,
    pub weight: Vec<u32>,
    pub monos: Vec<SymMonomial>,
    index: FxHashMap<SymMonomial, usize>,
}

impl WeightBasis {
    pub fn new(k: usize, d: u32, n: usize, weight: &[u32], cfg: &Config) -> Result<Self> {
        if weight.len() != n {
            return invalid(format!("weight {weight:?} has length other than {n}"));
        }
        let size = weight_multiplicity(Space::SymSym, k, d, n, weight)?;
        cfg.check_size(format!("weight space {weight:?} of S^{k}(S^{d}C^{n})"), size.min(usize::MAX as u128) as usize)?;
        let monos = enumerate_weight_space(k, d, n, weight);
        let index = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Ok(WeightBasis { k, d, n, weight: weight.to_vec(), monos, index })
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn index_of(&self, m: &SymMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn to_poly(&self, coords: &[BigRational]) -> SymPoly {
        SymPoly::from_terms(
            self.k,
            self.d,
            self.n,
            self.monos.iter().zip(coords).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn coords(&self, f: &SymPoly) -> Result<Vec<BigRational>> {
        let mut v = vec![BigRational::zero(); self.len()];
        for (m, c) in f.terms() {
            match self.index_of(m) {
                Some(i) => v[i] = c.clone(),
                None => return invalid(format!("monomial {m} is outside weight space {:?}", self.weight)),
            }
        }
        Ok(v)
    }
}

/// Matrix of the simple raising operators on the weight space `basis`; one row per
/// (operator, target monomial).
pub fn raising_matrix(basis: &WeightBasis) -> SparseMatrix {
    let mut m = SparseMatrix::new(basis.len());
    for i in 1..basis.n {
        if basis.weight[i] == 0 {
            continue;
        }
        let op = Operator::raising(i);
        let mut rows: FxHashMap<SymMonomial, Vec<(usize, BigInt)>> = FxHashMap::default();
        for (col, mono) in basis.monos.iter().enumerate() {
            for (img, a) in apply_to_monomial(op, mono) {
                rows.entry(img).or_default().push((col, BigInt::from(a)));
            }
        }
        let mut keys: Vec<SymMonomial> = rows.keys().cloned().collect();
        keys.sort();
        for key in keys.into_iter().rev() {
            m.push_row(rows.remove(&key).expect("row"));
        }
    }
    m
}

/// Basis of highest weight vectors of weight `λ` in `S^k(S^d C^n)`, each primitive with a
/// positive leading coefficient.
pub fn hwv_space(k: usize, d: u32, n: usize, lambda: &Partition, cfg: &Config) -> Result<Vec<SymPoly>> {
    if lambda.size() != k as u32 * d {
        return invalid(format!("{lambda} is not a partition of {}", k as u32 * d));
    }
    if lambda.len() > n {
        return invalid(format!("{lambda} has more than {n} parts"));
    }
    let basis = WeightBasis::new(k, d, n, &lambda.padded(n), cfg)?;
    hwv_in_basis(&basis)
}

pub fn hwv_in_basis(basis: &WeightBasis) -> Result<Vec<SymPoly>> {
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let m = raising_matrix(basis);
    let ker = linalg::nullspace(&m)?;
    Ok(ker.iter().map(|v| basis.to_poly(v).primitive()).collect())
}

/// `det(e_i e_j)_{1≤i,j≤k}` expanded in `S^k(S^2 C^n)`.
pub fn hwv_chow2_det(k: usize, n: usize) -> Result<SymPoly> {
    if n < k {
        return invalid(format!("need n ≥ k, got n = {n}, k = {k}"));
    }
    let entry = |i: usize, j: usize| {
        let mut v = vec![0u8; n];
        v[i] += 1;
        v[j] += 1;
        v
    };
    let mut out = SymPoly::zero(k, 2, n);
    let mut perm: Vec<usize> = (0..k).collect();
    let mut sign = 1i64;
    // Heap's algorithm tracks the sign by transposition parity.
    let mut c = vec![0usize; k];
    let push = |perm: &[usize], sign: i64, out: &mut SymPoly| {
        let factors: Vec<Vec<u8>> = (0..k).map(|i| entry(i, perm[i])).collect();
        let m = SymMonomial::from_factors(n, factors.iter().map(|f| f.as_slice()));
        out.add_term(m, BigRational::from_integer(BigInt::from(sign)));
    };
    push(&perm, sign, &mut out);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            push(&perm, sign, &mut out);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(out)
}

const H4_PRINTED: &str = "(e1^2*e2)*(e2^3)*(e1*e3^2) - (e1*e2^2)^2*(e1*e3^2) - (e1^2*e2)*(e1*e2*e3)*(e2^2*e3) \
     + (e1^2*e3)*(e1*e2^2)*(e2^2*e3) - (e1*e2^2)*(e1*e2*e3)^2 - (e1^2*e3)*(e1*e2*e3)*(e2^3)";

/// The seed `h_4` with the sign of its `(e1e2²)(e1e2e3)²` term reversed, which is the
/// version for which the construction below yields a highest weight vector.
const H4: &str = "(e1^2*e2)*(e2^3)*(e1*e3^2) - (e1*e2^2)^2*(e1*e3^2) - (e1^2*e2)*(e1*e2*e3)*(e2^2*e3) \
     + (e1^2*e3)*(e1*e2^2)*(e2^2*e3) + (e1*e2^2)*(e1*e2*e3)^2 - (e1^2*e3)*(e1*e2*e3)*(e2^3)";

/// The four pieces `h_1, h_2, h_3, h_4` in `S^3(S^3 C^4)` built from a seed `h_4`:
/// `h_3 = −E^1_2 h_4`, `h_1 = ½(E^1_2)² h_4`, `h_2 = E^2_3 E^1_2 h_4`.
pub fn parts_5421_from(h4: &SymPoly) -> [SymPoly; 4] {
    let e12 = Operator::raising(1);
    let e23 = Operator::raising(2);
    let r1 = apply_operator(e12, h4);
    let h3 = r1.scale(&-BigRational::one());
    let h1 = apply_operator(e12, &r1).scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
    let h2 = apply_operator(e23, &r1);
    [h1, h2, h3, h4.clone()]
}

/// `e_2²e_4 h_1 + e_1e_3e_4 h_2 + e_1e_2e_4 h_3 + e_1²e_4 h_4`.
pub fn assemble_5421(parts: &[SymPoly; 4]) -> SymPoly {
    let mults: [&[u8]; 4] = [&[0, 2, 0, 1], &[1, 0, 1, 1], &[1, 1, 0, 1], &[2, 0, 0, 1]];
    let mut f = SymPoly::zero(4, 3, 4);
    for (h, m) in parts.iter().zip(mults) {
        f = f.add(&h.mul_factor(m));
    }
    f
}

pub fn h4_seed() -> SymPoly {
    SymPoly::parse(H4, 4).expect("valid seed")
}

pub fn h4_seed_printed() -> SymPoly {
    SymPoly::parse(H4_PRINTED, 4).expect("valid seed")
}

/// Highest weight vector of `S_{(5,4,2,1)} ⊂ S^4(S^3 C^4)` assembled from `h_1, …, h_4`.
pub fn hwv_5421() -> SymPoly {
    assemble_5421(&parts_5421_from(&h4_seed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn raising_on_two_vector_example() {
        let v = SymPoly::parse("3*(e1^2)^2*(e2^2) + 5*(e1^2)*(e1*e2)^2", 2).unwrap();
        let out = apply_operator(Operator::raising(1), &v);
        assert_eq!(out.to_text(), "16*(e1^2)^2*(e1*e2)");
        let zero = SymPoly::zero(3, 2, 2);
        assert!(apply_operator(Operator::raising(1), &zero).is_zero());
    }

    #[test]
    fn operator_preserves_weight_shift() {
        let f = SymPoly::parse("(e1*e2*e3)*(e2^2*e3) + 2*(e2^3)*(e1*e3^2)", 3).unwrap();
        let g = apply_operator(Operator::new(1, 3).unwrap(), &f);
        assert_eq!(g.weight().unwrap(), vec![2, 3, 1]);
    }

    #[test]
    fn lowered_indices() {
        let a = normalized_lower(&ExpVec::new(vec![1, 2, 0]), 1).unwrap();
        assert_eq!(a.exps(), &[0, 3, 0]);
        let b = normalized_lower(&ExpVec::new(vec![0, 0, 2, 1]), 3).unwrap();
        assert_eq!(b.exps(), &[0, 0, 1, 2]);
        assert!(normalized_lower(&ExpVec::new(vec![0, 3, 0]), 1).is_err());
    }

    #[test]
    fn hwv_of_s42() {
        let hs = hwv_space(3, 2, 2, &partition![4, 2], &cfg()).unwrap();
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].to_text(), "(e1^2)^2*(e2^2) - (e1^2)*(e1*e2)^2");
    }

    #[test]
    fn hwv_multiplicity_two() {
        let hs = hwv_space(5, 3, 3, &partition![9, 4, 2], &cfg()).unwrap();
        assert_eq!(hs.len(), 2);
        assert!(hs.iter().all(killed_by_all_raising));
    }

    #[test]
    fn hwv_dimension_is_stable_in_n() {
        for n in 3..=5 {
            assert_eq!(hwv_space(4, 3, n, &partition![7, 3, 2], &cfg()).unwrap().len(), 1);
        }
    }

    #[test]
    fn determinant_vectors() {
        assert_eq!(hwv_chow2_det(2, 2).unwrap().to_text(), "(e1^2)*(e2^2) - (e1*e2)^2");
        let d3 = hwv_chow2_det(3, 3).unwrap();
        assert_eq!(d3.weight().unwrap(), vec![2, 2, 2]);
        assert!(is_highest_weight(&d3));
        assert_eq!(d3.len(), 5);
        assert!(hwv_chow2_det(3, 2).is_err());
    }

    #[test]
    fn assembled_5421_is_highest_weight() {
        let [h1, h2, _, _] = parts_5421_from(&h4_seed());
        assert!(is_highest_weight(&h1) && h1.weight().unwrap() == vec![5, 2, 2, 0]);
        assert!(is_highest_weight(&h2) && h2.weight().unwrap() == vec![4, 4, 1, 0]);
        let f = hwv_5421();
        assert!(killed_by_all_raising(&f));
        assert_eq!(f.len(), 23);
        let solved = hwv_space(4, 3, 4, &partition![5, 4, 2, 1], &cfg()).unwrap();
        assert_eq!(solved.len(), 1);
        assert_eq!(f.primitive(), solved[0]);
    }

    #[test]
    fn printed_seed_is_not_highest_weight() {
        let f = assemble_5421(&parts_5421_from(&h4_seed_printed()));
        assert!(!is_highest_weight(&f));
    }

    #[test]
    fn commutator_identity_on_monomials() {
        let f = SymPoly::parse("(e1*e2^2)^2*(e1^2*e3)*(e2*e3^2)^3", 3).unwrap();
        for alpha in crate::symalg::exp_vecs(3, 3) {
            for j in 1..3 {
                assert!(commutator_check(&f, &alpha, j).unwrap());
            }
        }
        assert!(commutator_check(&SymPoly::zero(2, 3, 3), &ExpVec::new(vec![3, 0, 0]), 1).unwrap());
    }
}
