//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::time::{Duration, Instant};

use chow_core::checks::{chow3_deg4, chow3_deg4_complement, expected_chow3_prolongations};
use chow_core::combinatorics::{dominance_compare, kostka, lr_coefficient, partitions, ssyt_count_column_condition, weyl_dimension, DominanceOrd};
use chow_core::foulkes_howe::{fh_apply, fh_is_bijective};
use chow_core::glaction::{commutator_check, hwv_space};
use chow_core::plethysm::{ambient_dimension, check_shift, concat_failures, decompose, decompose_at, lex_smallest_module, Space};
use chow_core::prolongation::{derivative_hwv_profile, even_flagship, prolong_isotypic, secant_membership_by_complement};
use chow_core::symalg::{enumerate_all, enumerate_weight_space, exp_vecs};
use chow_core::{partition, Config, Decomposition, Partition, SymPoly};
use num_bigint::BigUint;
use num_rational::BigRational;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cfg() -> Config {
    Config::default()
}

fn quartic_cubics() -> Outcome {
    let got = decompose(Space::SymSym, 4, 3, 4, &cfg()).map_err(err)?;
    let want = "S(12) + S(10,2) + S(9,3) + S(8,4) + S(8,2,2) + S(7,4,1) + S(7,3,2) + S(6,6) + S(6,4,2) + S(6,2,2,2) + S(5,4,2,1) + S(4,4,4)";
    ensure(got.to_string() == want, || format!("got {got}"))
}

fn quintic_cubics() -> Outcome {
    let got = decompose(Space::SymSym, 5, 3, 5, &cfg()).map_err(err)?;
    let listed: [&[u32]; 28] = [
        &[15], &[13, 2], &[12, 3], &[11, 4], &[11, 2, 2], &[10, 5], &[10, 4, 1], &[10, 3, 2],
        &[9, 6], &[9, 4, 2], &[9, 2, 2, 2], &[8, 6, 1], &[8, 5, 2], &[8, 4, 3], &[8, 4, 2, 1],
        &[8, 3, 2, 2], &[7, 6, 2], &[7, 5, 2, 1], &[7, 4, 4], &[7, 4, 3, 1], &[7, 4, 2, 2],
        &[7, 2, 2, 2, 2], &[6, 6, 3], &[6, 5, 2, 2], &[6, 4, 4, 1], &[6, 4, 2, 2, 1], &[5, 5, 3, 1, 1], &[5, 4, 4, 2],
    ];
    let want = Decomposition::from_pairs(listed.iter().map(|p| {
        let p = Partition::new(p.to_vec()).unwrap();
        let m = if p == partition![9, 4, 2] { 2 } else { 1 };
        (p, m)
    }));
    ensure(got == want, || format!("got {got}"))
}

fn hwv_732() -> Outcome {
    let basis = hwv_space(4, 3, 3, &partition![7, 3, 2], &cfg()).map_err(err)?;
    ensure(basis.len() == 1, || format!("dimension {}", basis.len()))?;
    let printed = SymPoly::parse(
        "(e1^3)^2*(e1*e2^2)*(e2*e3^2) - 2*(e1^3)^2*(e1*e2*e3)*(e2^2*e3) + (e1^3)^2*(e1*e3^2)*(e2^3) \
         - (e1^3)*(e1^2*e2)^2*(e2*e3^2) + 2*(e1^3)*(e1^2*e2)*(e1^2*e3)*(e2^2*e3) \
         - 4*(e1^3)*(e1^2*e2)*(e1*e2^2)*(e1*e3^2) + 3*(e1^2*e2)^3*(e1*e3^2) \
         + 4*(e1*e2*e3)^2*(e1^2*e2)*(e1^3) - (e1^3)*(e1^2*e3)^2*(e2^3) \
         + 3*(e1^2*e2)*(e1*e2^2)*(e1^2*e3)^2 - 6*(e1^2*e2)^2*(e1^2*e3)*(e1*e2*e3)",
        3,
    )
    .map_err(err)?;
    let f = &basis[0];
    let neg = printed.scale(&BigRational::from_integer((-1).into()));
    ensure(*f == printed || *f == neg, || format!("got {}", f.to_text()))?;
    ensure(f.len() == 11, || format!("{} terms", f.len()))?;
    let zero_term = SymPoly::parse("(e1^3)*(e1^2*e3)*(e1*e2^2)*(e1*e2*e3)", 3).map_err(err)?;
    let (m, _) = zero_term.terms().next().unwrap();
    let in_space = enumerate_weight_space(4, 3, 3, &[7, 3, 2]).contains(m);
    ensure(in_space && f.coeff(m) == BigRational::from_integer(0.into()), || "zero term".into())
}

fn fh_examples() -> Outcome {
    let a = fh_apply(&SymPoly::parse("(e1^2)*(e2^2)", 2).map_err(err)?).map_err(err)?;
    ensure(a == SymPoly::parse("(e1*e2)^2", 2).map_err(err)?, || format!("first: {}", a.to_text()))?;
    let b = fh_apply(&SymPoly::parse("(e1*e2)^2", 2).map_err(err)?).map_err(err)?;
    let want = SymPoly::parse("1/2*(e1^2)*(e2^2) + 1/2*(e1*e2)^2", 2).map_err(err)?;
    ensure(b == want, || format!("second: {}", b.to_text()))
}

fn quartic_chow_ideal() -> Outcome {
    let c = chow3_deg4(4, &cfg()).map_err(err)?;
    ensure(c.content.to_string() == "S(7,3,2) + S(6,2,2,2) + S(5,4,2,1)", || format!("got {}", c.content))?;
    let f = &hwv_space(4, 3, 3, &partition![7, 3, 2], &cfg()).map_err(err)?[0];
    ensure(fh_apply(f).map_err(err)?.is_zero(), || "(7,3,2) vector not in kernel".into())?;
    let g = &hwv_space(4, 3, 2, &partition![6, 6], &cfg()).map_err(err)?[0];
    ensure(!fh_apply(g).map_err(err)?.is_zero(), || "(6,6) vector in kernel".into())
}

fn hermite() -> Outcome {
    for k in 2..=5 {
        ensure(fh_is_bijective(k, k as u32, 2, &cfg()).map_err(err)?, || format!("FH_{k},{k} not bijective"))?;
    }
    Ok(())
}

fn prolongation_chain() -> Outcome {
    let want = expected_chow3_prolongations();
    let p1 = prolong_isotypic(&chow3_deg4(5, &cfg()).map_err(err)?, 1, &cfg()).map_err(err)?;
    ensure(p1.content == want[0], || format!("p=1, n=5: {}", p1.content))?;
    let mut cur = chow3_deg4(6, &cfg()).map_err(err)?;
    for (p, w) in want.iter().enumerate() {
        cur = prolong_isotypic(&cur, 1, &cfg()).map_err(err)?;
        ensure(cur.content == *w, || format!("p={}, n=6: {}", p + 1, cur.content))?;
    }
    Ok(())
}

fn complement_octic() -> Outcome {
    let comp = chow3_deg4_complement();
    let nu = partition![5, 5, 5, 5, 3, 1];
    ensure(secant_membership_by_complement(&nu, (4, 4), &comp, &comp), || "obstructed".into())?;
    let c = lr_coefficient(&partition![4, 4, 4], &partition![4, 4, 4], &nu);
    ensure(c == 0, || format!("c = {c}"))
}

fn lex_smallest() -> Outcome {
    let got = lex_smallest_module(Space::SymSym, 4, 5, 4, &cfg()).map_err(err)?;
    ensure(got == Some((partition![6, 6, 6, 2], 1)), || format!("got {got:?}"))?;
    let threshold = partition![6, 6, 6, 2];
    for p in partitions(20, 4, 20).into_iter().filter(|p| *p < threshold) {
        let m = decompose_at(Space::SymSym, 4, 5, 4, &p, &cfg()).map_err(err)?;
        ensure(m == 0, || format!("{p} has multiplicity {m}"))?;
    }
    let comp1 = decompose(Space::SymSym, 4, 4, 4, &cfg()).map_err(err)?;
    let comp2 = decompose(Space::SymSym, 4, 5, 4, &cfg()).map_err(err)?;
    let flagship = even_flagship(2, 2);
    ensure(secant_membership_by_complement(&flagship, (4, 5), &comp1, &comp2), || format!("{flagship} obstructed"))
}

fn profile_5442() -> Outcome {
    let prof = derivative_hwv_profile(&partition![5, 4, 4, 2], 5, 3, 4, &cfg()).map_err(err)?;
    for (beta, mu) in [([1u8, 0, 0, 2], partition![4, 4, 4]), ([0, 0, 2, 1], partition![5, 4, 2, 1])] {
        let e = prof.iter().find(|e| e.beta.exps() == beta).ok_or_else(|| format!("{beta:?} missing"))?;
        ensure(e.mu == mu && e.nonzero && e.highest_weight, || format!("{e:?}"))?;
    }
    Ok(())
}

fn property_suites() -> Outcome {
    // commutator identity, exhaustive on monomials of S^3(S^3 C^3)
    let one = BigRational::from_integer(1.into());
    for m in enumerate_all(3, 3, 3) {
        let f = SymPoly::monomial(m, 3, one.clone());
        for alpha in exp_vecs(3, 3) {
            for j in 1..3 {
                ensure(commutator_check(&f, &alpha, j).map_err(err)?, || format!("commutator at {} {alpha} {j}", f.to_text()))?;
            }
        }
    }
    // Kostka triangularity
    for n in 1..=8 {
        let ps = partitions(n, n as usize, n);
        for l in &ps {
            for m in &ps {
                let k = kostka(l, m.parts());
                if l == m {
                    ensure(k == 1, || format!("K({l},{l}) = {k}"))?;
                } else if k > 0 {
                    let dom = dominance_compare(l.parts(), m.parts()).map_err(err)?;
                    ensure(dom == DominanceOrd::Greater, || format!("K({l},{m}) = {k} without dominance"))?;
                }
            }
        }
    }
    // dimension bookkeeping and hwv/plethysm agreement
    for (k, d) in [(2, 2), (3, 2), (4, 2), (5, 2), (6, 2), (2, 3), (3, 3), (4, 3), (2, 4), (3, 4), (2, 5), (2, 6)] {
        let n = k;
        let dec = decompose(Space::SymSym, k, d, n, &cfg()).map_err(err)?;
        let total: BigUint = dec.iter().map(|(p, m)| weyl_dimension(p, n).unwrap() * m).sum();
        ensure(total == ambient_dimension(Space::SymSym, k, d, n), || format!("dimension of S^{k}(S^{d})"))?;
        for lam in partitions(k as u32 * d, k, k as u32 * d) {
            let h = hwv_space(k, d, lam.len(), &lam, &cfg()).map_err(err)?.len() as u64;
            ensure(h == dec.mult(&lam), || format!("{lam} in S^{k}(S^{d}): {h} vs {}", dec.mult(&lam)))?;
        }
    }
    for space in [Space::SymExt, Space::ExtExt] {
        for (k, d) in [(2, 2), (3, 2), (2, 3)] {
            let n = k * d as usize;
            let dec = decompose(space, k, d, n, &cfg()).map_err(err)?;
            let total: BigUint = dec.iter().map(|(p, m)| weyl_dimension(p, n).unwrap() * m).sum();
            ensure(total == ambient_dimension(space, k, d, n), || format!("dimension of {space} {k} {d}"))?;
        }
    }
    // shifts by even u
    for k in 1..=3usize {
        for d in 1..=(8 / k as u32) {
            for lam in partitions(k as u32 * d, k, k as u32 * d) {
                for u in [2, 4] {
                    ensure(check_shift(&lam, k, d, u, k, &cfg()).map_err(err)?, || format!("shift {lam} k={k} d={d} u={u}"))?;
                }
            }
        }
    }
    // concatenation for even degree
    for d in [2, 4] {
        let f = concat_failures(d, 12, &cfg()).map_err(err)?;
        ensure(f.is_empty(), || format!("concat failures for d = {d}: {f:?}"))?;
    }
    // column-condition bound for odd degree
    for k in 1..=4usize {
        let dec = decompose(Space::SymSym, k, 3, k, &cfg()).map_err(err)?;
        for lam in partitions(3 * k as u32, k, 3 * k as u32) {
            let bound = ssyt_count_column_condition(&lam, k, 3);
            ensure(bound >= dec.mult(&lam), || format!("{lam}: bound {bound} < {}", dec.mult(&lam)))?;
        }
    }
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "S^4(S^3) decomposition", budget: Duration::from_secs(5), run: quartic_cubics },
        Criterion { id: 2, name: "S^5(S^3) decomposition", budget: Duration::from_secs(60), run: quintic_cubics },
        Criterion { id: 3, name: "highest weight vector of (7,3,2)", budget: Duration::from_secs(5), run: hwv_732 },
        Criterion { id: 4, name: "FH_{2,2} examples", budget: Duration::from_secs(5), run: fh_examples },
        Criterion { id: 5, name: "I_4 of cubics and kernel certificates", budget: Duration::from_secs(120), run: quartic_chow_ideal },
        Criterion { id: 6, name: "binary Foulkes-Howe maps bijective", budget: Duration::from_secs(60), run: hermite },
        Criterion { id: 7, name: "prolongations of I_4 of cubics", budget: Duration::from_secs(1800), run: prolongation_chain },
        Criterion { id: 8, name: "complement test for (5,5,5,5,3,1)", budget: Duration::from_secs(10), run: complement_octic },
        Criterion { id: 9, name: "lex-smallest module of S^4(S^5) and (6,6,4^6)", budget: Duration::from_secs(600), run: lex_smallest },
        Criterion { id: 10, name: "derivative profile of (5,4,4,2)", budget: Duration::from_secs(60), run: profile_5442 },
        Criterion { id: 11, name: "property suites", budget: Duration::from_secs(900), run: property_suites },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut res = (c.run)();
        let t = start.elapsed();
        if res.is_ok() && t > c.budget {
            res = Err(format!("over budget of {:?}", c.budget));
        }
        match &res {
            Ok(()) => println!("PASS  {:>2}. {} ({:.2?})", c.id, c.name, t),
            Err(e) => {
                failed += 1;
                println!("FAIL  {:>2}. {} ({:.2?}): {e}", c.id, c.name, t);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
