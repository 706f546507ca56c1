//! Explicit differential matrices for the generalized Koszul strand
//! `C_i(φ*)` and the spliced family `D_i(φ*)`, over exact rationals at a
//! seeded random specialization, with `d∘d = 0` and generic-point rank
//! verification.
//!
//! Basis orders are bit-exact and recorded in `basis_tags`: subsets of the
//! `G*`-basis in lexicographic order of their sorted index lists, symmetric
//! exponent vectors in lexicographic order; tensor bases combine
//! subset-major. Signs: subset deletion by 0-based position parity, splice
//! shuffle sign by the inversion count of the `(T, S∖T)` interleave. The
//! `d∘d = 0` checks pin these choices (any inconsistent pair fails loudly);
//! a global unit per position stays undetermined, which is harmless for
//! rank verification.
//!
//! Rank conditions at a random rational point are a necessary condition for
//! acyclicity, not a proof; the report says which.

use std::collections::HashMap;

use num::rational::BigRational;
use num::{BigInt, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::graded::MorphismSpec;
use crate::ratmat::RatMat;

/// `φ*` evaluated at a rational point: a `t × (t+c−1)` rational matrix,
/// reproducible from the seed.
#[derive(Debug, Clone)]
pub struct SpecializedMatrix {
    pub spec: MorphismSpec,
    pub seed: u64,
    pub point: Vec<BigRational>,
    /// rows = rank F, cols = rank G.
    pub entries: RatMat,
}

/// Monomial exponent vectors of total degree `d` in `n` variables, lex order.
fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(n: usize, pos: usize, left: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == n - 1 {
            acc.push(left);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for e in 0..=left {
            acc.push(e);
            rec(n, pos + 1, left - e, acc, out);
            acc.pop();
        }
    }
    if n == 0 {
        return out;
    }
    rec(n, 0, d, &mut Vec::new(), &mut out);
    out
}

/// Draw a generic homogeneous form for each entry (degree `a_j − b_i`,
/// small integer coefficients), then evaluate everything at a small random
/// rational point. Same seed, same output, byte for byte.
pub fn random_specialization(spec: &MorphismSpec, seed: u64) -> SpecializedMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = spec.nvars() as usize;
    let point: Vec<BigRational> = (0..n)
        .map(|_| {
            let mut num = 0i64;
            while num == 0 {
                num = rng.random_range(-9..=9);
            }
            let den = rng.random_range(1..=9i64);
            BigRational::new(BigInt::from(num), BigInt::from(den))
        })
        .collect();
    let mut entries = RatMat::zeros(spec.rank_f(), spec.rank_g());
    for row in 0..spec.rank_f() {
        for col in 0..spec.rank_g() {
            let degree = (spec.a()[col] - spec.b()[row]) as u32;
            let mut value = BigRational::zero();
            for mono in monomials(n, degree) {
                let coeff = rng.random_range(-9..=9i64);
                if coeff == 0 {
                    continue;
                }
                let mut term = BigRational::from(BigInt::from(coeff));
                for (v, &e) in mono.iter().enumerate() {
                    for _ in 0..e {
                        term *= &point[v];
                    }
                }
                value += term;
            }
            entries.set(row, col, value);
        }
    }
    SpecializedMatrix {
        spec: spec.clone(),
        seed,
        point,
        entries,
    }
}

/// The chain of differential matrices for `D_i(φ*)` (positions `0..=c`);
/// `matrices[k]` is `d_{k+1}: position k+1 → position k`.
#[derive(Debug, Clone)]
pub struct RationalMatrixChain {
    pub matrices: Vec<RatMat>,
    pub basis_tags: Vec<Vec<String>>,
}

/// A basis element of one position: a subset of the `G*`-basis plus either a
/// symmetric exponent vector on `F*` (right strand) or one on `F` together
/// with the top form of `∧^t F` (left strand).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum BasisElem {
    Right { subset: Vec<usize>, expo: Vec<u32> },
    Left { subset: Vec<usize>, expo: Vec<u32> },
}

impl BasisElem {
    fn tag(&self) -> String {
        fn join(s: &[usize]) -> String {
            s.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
        fn joinu(e: &[u32]) -> String {
            e.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
        match self {
            BasisElem::Right { subset, expo } => {
                let total: u32 = expo.iter().sum();
                match (subset.is_empty(), total == 0) {
                    (true, true) => "1".to_string(),
                    (false, true) => format!("e({})", join(subset)),
                    (true, false) => format!("x^({})", joinu(expo)),
                    (false, false) => format!("e({})⊗x^({})", join(subset), joinu(expo)),
                }
            }
            BasisElem::Left { subset, expo } => {
                let total: u32 = expo.iter().sum();
                if total == 0 {
                    format!("e({})⊗f", join(subset))
                } else {
                    format!("e({})⊗y^({})⊗f", join(subset), joinu(expo))
                }
            }
        }
    }
}

/// Subsets of `0..n` of size `k`, lexicographic on the sorted index lists.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(n: usize, start: usize, left: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for v in start..n {
            if n - v < left {
                break;
            }
            acc.push(v);
            rec(n, v + 1, left - 1, acc, out);
            acc.pop();
        }
    }
    if k <= n {
        rec(n, 0, k, &mut Vec::new(), &mut out);
    }
    out
}

fn position_basis(spec: &MorphismSpec, i: i64, k: i64) -> Vec<BasisElem> {
    let t = spec.t() as i64;
    let g = spec.rank_g();
    let f = spec.rank_f();
    let mut out = Vec::new();
    if k <= i {
        // right strand: ∧^k G* ⊗ S_{i−k} F*
        for subset in subsets(g, k as usize) {
            for expo in monomials(f, (i - k) as u32) {
                out.push(BasisElem::Right {
                    subset: subset.clone(),
                    expo,
                });
            }
        }
    } else {
        // left strand: ∧^{t+k−1} G* ⊗ S_{k−1−i} F ⊗ ∧^t F
        for subset in subsets(g, (t + k - 1) as usize) {
            for expo in monomials(f, (k - 1 - i) as u32) {
                out.push(BasisElem::Left {
                    subset: subset.clone(),
                    expo,
                });
            }
        }
    }
    out
}

/// `(−1)^position` for deleting `elem` from the sorted `subset` (0-based).
fn deletion_sign(subset: &[usize], elem: usize) -> i64 {
    let pos = subset.iter().position(|&x| x == elem).expect("member");
    if pos % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the shuffle sorting the concatenation `(T, S∖T)` back into `S`:
/// parity of the inversion count between the two blocks.
fn shuffle_sign(t_set: &[usize], rest: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for &x in t_set {
        inversions += rest.iter().filter(|&&y| y < x).count();
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Minor of the specialized matrix on all `t` rows and the columns `cols`.
fn maximal_minor(sm: &SpecializedMatrix, cols: &[usize]) -> BigRational {
    let t = sm.spec.rank_f();
    assert_eq!(cols.len(), t);
    let mut m = RatMat::zeros(t, t);
    for (cj, &col) in cols.iter().enumerate() {
        for row in 0..t {
            m.set(row, cj, sm.entries.get(row, col).clone());
        }
    }
    m.det()
}

/// Size-`k` subsets of a sorted index list (as sorted index lists).
fn subsets_of(list: &[usize], k: usize) -> Vec<Vec<usize>> {
    subsets(list.len(), k)
        .into_iter()
        .map(|pick| pick.into_iter().map(|p| list[p]).collect())
        .collect()
}

/// Build every differential of `D_i(φ*)` at the given specialization.
///
/// Right strand (multiplication): `e_S ⊗ x^α ↦ Σ_{g∈S} ± e_{S∖g} ⊗ (φ*(g)·x^α)`.
/// Left strand (contraction): `e_S ⊗ y^β ⊗ f ↦ Σ_{g∈S} ± e_{S∖g} ⊗ ∂_{φ*(g)}(y^β) ⊗ f`.
/// Splice `ε_i`: `e_S ⊗ f ↦ Σ_{T⊂S, |T|=t} shuffle(T,S)·det(A_T)·e_{S∖T}`.
pub fn build_d_complex_matrices(
    spec: &MorphismSpec,
    i: i64,
    sm: &SpecializedMatrix,
) -> Result<RationalMatrixChain, Error> {
    if sm.spec != *spec {
        return Err(Error::SpecMismatch);
    }
    let c = spec.c() as i64;
    if !(-1..=c).contains(&i) {
        return Err(Error::OutOfRange {
            what: "i",
            value: i,
            lo: -1,
            hi: c,
        });
    }
    let f_rank = spec.rank_f();
    let bases: Vec<Vec<BasisElem>> = (0..=c).map(|k| position_basis(spec, i, k)).collect();
    let index: Vec<HashMap<BasisElem, usize>> = bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(n, e)| (e.clone(), n)).collect())
        .collect();

    let mut matrices = Vec::new();
    for k in 1..=c {
        let src = &bases[k as usize];
        let dst_index = &index[(k - 1) as usize];
        let mut mat = RatMat::zeros(bases[(k - 1) as usize].len(), src.len());
        for (col, elem) in src.iter().enumerate() {
            match elem {
                BasisElem::Right { subset, expo } => {
                    for &gidx in subset {
                        let sign = deletion_sign(subset, gidx);
                        let smaller: Vec<usize> =
                            subset.iter().copied().filter(|&x| x != gidx).collect();
                        for m in 0..f_rank {
                            let coeff = sm.entries.get(m, gidx);
                            if coeff.is_zero() {
                                continue;
                            }
                            let mut expo2 = expo.clone();
                            expo2[m] += 1;
                            let target = BasisElem::Right {
                                subset: smaller.clone(),
                                expo: expo2,
                            };
                            let row = dst_index[&target];
                            let signed = if sign > 0 {
                                coeff.clone()
                            } else {
                                -coeff.clone()
                            };
                            mat.add_to(row, col, &signed);
                        }
                    }
                }
                BasisElem::Left { subset, expo } if k == i + 1 => {
                    // splice into the right strand
                    debug_assert!(expo.iter().all(|&e| e == 0));
                    for t_set in subsets_of(subset, f_rank) {
                        let rest: Vec<usize> = subset
                            .iter()
                            .copied()
                            .filter(|x| !t_set.contains(x))
                            .collect();
                        let sign = shuffle_sign(&t_set, &rest);
                        let minor = maximal_minor(sm, &t_set);
                        if minor.is_zero() {
                            continue;
                        }
                        let target = BasisElem::Right {
                            subset: rest,
                            expo: vec![0; f_rank],
                        };
                        let row = dst_index[&target];
                        let signed = if sign > 0 { minor } else { -minor };
                        mat.add_to(row, col, &signed);
                    }
                }
                BasisElem::Left { subset, expo } => {
                    for &gidx in subset {
                        let sign = deletion_sign(subset, gidx);
                        let smaller: Vec<usize> =
                            subset.iter().copied().filter(|&x| x != gidx).collect();
                        for m in 0..f_rank {
                            if expo[m] == 0 {
                                continue;
                            }
                            let coeff = sm.entries.get(m, gidx);
                            if coeff.is_zero() {
                                continue;
                            }
                            let mut expo2 = expo.clone();
                            expo2[m] -= 1;
                            let target = BasisElem::Left {
                                subset: smaller.clone(),
                                expo: expo2,
                            };
                            let row = dst_index[&target];
                            let scaled = coeff * BigRational::from(BigInt::from(expo[m]));
                            let signed = if sign > 0 { scaled } else { -scaled };
                            mat.add_to(row, col, &signed);
                        }
                    }
                }
            }
        }
        matrices.push(mat);
    }

    Ok(RationalMatrixChain {
        matrices,
        basis_tags: bases
            .iter()
            .map(|b| b.iter().map(BasisElem::tag).collect())
            .collect(),
    })
}

/// Verification outcome for one chain.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AcyclicityReport {
    pub dd_zero: bool,
    pub ranks: Vec<usize>,
    pub rank_conditions: bool,
    pub h0_corank: usize,
}

/// Check `d∘d = 0` exactly, compute exact ranks by fraction-free
/// elimination, and test the generic-point exactness shadow
/// `r_k + r_{k+1} = dim(position k)` for `k ≥ 1` (reading the rank past the
/// top as 0). The corank at position 0 is reported, not judged.
pub fn verify_acyclicity(chain: &RationalMatrixChain) -> AcyclicityReport {
    let n = chain.matrices.len();
    let mut dd_zero = true;
    for k in 1..n {
        let prod = chain.matrices[k - 1]
            .mul(&chain.matrices[k])
            .expect("adjacent dimensions compose");
        if !prod.is_zero() {
            dd_zero = false;
        }
    }
    let ranks: Vec<usize> = chain.matrices.iter().map(RatMat::rank).collect();
    let mut rank_conditions = true;
    for k in 1..=n {
        let dim_k = chain.matrices[k - 1].cols();
        let r_k = ranks[k - 1];
        let r_next = if k < n { ranks[k] } else { 0 };
        if r_k + r_next != dim_k {
            rank_conditions = false;
        }
    }
    let h0_corank = if n == 0 {
        0
    } else {
        chain.matrices[0].rows() - ranks[0]
    };
    AcyclicityReport {
        dd_zero,
        ranks,
        rank_conditions,
        h0_corank,
    }
}

/// Stated in every report: what a generic-point check can and cannot prove.
pub const RANK_CONDITION_NOTE: &str = "d.d = 0 is an exact identity; the rank conditions at a \
random rational point are a necessary condition for acyclicity, not a proof";

/// One verification job: specialize, build the chain, verify, report.
#[derive(Debug, Clone, Serialize)]
pub struct KoszulReport {
    pub spec: MorphismSpec,
    pub i: i64,
    pub seed: u64,
    pub dd_zero: bool,
    pub ranks: Vec<usize>,
    pub rank_conditions: bool,
    pub h0_corank: usize,
    /// What the rank conditions do and do not establish.
    pub note: &'static str,
}

impl KoszulReport {
    pub fn passed(&self) -> bool {
        self.dd_zero && self.rank_conditions
    }
}

/// ```
/// use schur_resolve::{koszul::verify_koszul, MorphismSpec};
///
/// let spec = MorphismSpec::linear(2, 2, 3).unwrap();
/// let report = verify_koszul(&spec, 0, 42).unwrap();
/// assert!(report.passed());
/// assert_eq!(report.ranks, vec![1, 2]);
/// ```
pub fn verify_koszul(spec: &MorphismSpec, i: i64, seed: u64) -> Result<KoszulReport, Error> {
    let sm = random_specialization(spec, seed);
    let chain = build_d_complex_matrices(spec, i, &sm)?;
    let report = verify_acyclicity(&chain);
    Ok(KoszulReport {
        spec: spec.clone(),
        i,
        seed,
        dd_zero: report.dd_zero,
        ranks: report.ranks,
        rank_conditions: report.rank_conditions,
        h0_corank: report.h0_corank,
        note: RANK_CONDITION_NOTE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lascoux::eagon_northcott_family;
    use crate::schur::ratio;

    fn linear(t: u32, c: u32) -> MorphismSpec {
        MorphismSpec::linear(t, c, 3).unwrap()
    }

    #[test]
    fn specialization_is_deterministic() {
        let sp = linear(2, 2);
        let a = random_specialization(&sp, 42);
        let b = random_specialization(&sp, 42);
        assert_eq!(a.entries, b.entries);
        assert_eq!(a.point, b.point);
        let c = random_specialization(&sp, 43);
        assert_ne!(a.entries, c.entries);
    }

    #[test]
    fn specialization_single_variable() {
        let sp = MorphismSpec::new(2, 2, vec![1, 1, 1], vec![0, 0], 1).unwrap();
        let sm = random_specialization(&sp, 7);
        assert_eq!(sm.point.len(), 1);
        assert_eq!(sm.entries.rows(), 2);
        assert_eq!(sm.entries.cols(), 3);
    }

    #[test]
    fn hilbert_burch_minors() {
        // d_1 of D_0 for a 2x3 matrix is the row of maximal minors.
        let sp = linear(2, 2);
        for seed in [1u64, 42, 2024] {
            let sm = random_specialization(&sp, seed);
            let chain = build_d_complex_matrices(&sp, 0, &sm).unwrap();
            assert_eq!(chain.matrices[0].rows(), 1);
            assert_eq!(chain.matrices[0].cols(), 3);
            // cofactor-expansion oracle, independent of RatMat::det
            let ent = |r: usize, c: usize| sm.entries.get(r, c).clone();
            let minor = |c1: usize, c2: usize| ent(0, c1) * ent(1, c2) - ent(0, c2) * ent(1, c1);
            let minors = [minor(0, 1), minor(0, 2), minor(1, 2)];
            for (col, expected) in minors.iter().enumerate() {
                let got = chain.matrices[0].get(0, col).clone();
                assert!(
                    got == *expected || got == -expected.clone(),
                    "seed {seed} col {col}"
                );
            }
            let report = verify_acyclicity(&chain);
            assert!(report.dd_zero);
            assert_eq!(report.ranks, vec![1, 2]);
            assert!(report.rank_conditions);
            assert_eq!(report.h0_corank, 0);
        }
    }

    #[test]
    fn splice_minors_for_three_rows() {
        // Laplace-expansion oracle for 3x3 minors, independent of Bareiss
        for c in 2..=3u32 {
            let sp = linear(3, c);
            let sm = random_specialization(&sp, 17);
            let chain = build_d_complex_matrices(&sp, 0, &sm).unwrap();
            let cols = subsets(sp.rank_g(), 3);
            assert_eq!(chain.matrices[0].cols(), cols.len());
            for (col, pick) in cols.iter().enumerate() {
                let e = |r: usize, j: usize| sm.entries.get(r, pick[j]).clone();
                let two = |c1: usize, c2: usize| e(1, c1) * e(2, c2) - e(1, c2) * e(2, c1);
                let expected = e(0, 0) * two(1, 2) - e(0, 1) * two(0, 2) + e(0, 2) * two(0, 1);
                let got = chain.matrices[0].get(0, col).clone();
                assert!(
                    got == expected || got == -expected.clone(),
                    "c={c} columns {pick:?}"
                );
            }
        }
    }

    #[test]
    fn pure_strand_composes_to_zero() {
        let sp = linear(2, 2);
        let sm = random_specialization(&sp, 5);
        let chain = build_d_complex_matrices(&sp, 2, &sm).unwrap();
        let report = verify_acyclicity(&chain);
        assert!(report.dd_zero);
        assert_eq!(report.ranks[0] + report.ranks[1], 6);
    }

    #[test]
    fn chain_dimensions_match_betti_tables() {
        for t in 1..=3u32 {
            for c in 1..=3u32 {
                let sp = linear(t, c);
                let sm = random_specialization(&sp, 11);
                for i in -1..=i64::from(c) {
                    let chain = build_d_complex_matrices(&sp, i, &sm).unwrap();
                    let table = eagon_northcott_family(&sp, i).unwrap();
                    for (k, tags) in chain.basis_tags.iter().enumerate() {
                        let expected = table.position(k).map(|m| m.rank()).unwrap_or(0) as usize;
                        assert_eq!(tags.len(), expected, "t={t} c={c} i={i} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn corrupted_chain_detected() {
        let sp = linear(2, 2);
        let sm = random_specialization(&sp, 42);
        let mut chain = build_d_complex_matrices(&sp, 0, &sm).unwrap();
        let v = chain.matrices[1].get(0, 0).clone();
        chain.matrices[1].set(0, 0, -v + ratio(1, 3));
        let report = verify_acyclicity(&chain);
        assert!(!report.dd_zero);
    }

    #[test]
    fn report_serializes_with_fixed_key_order() {
        let sp = linear(2, 2);
        let report = verify_koszul(&sp, 0, 42).unwrap();
        assert!(report.passed());
        let json = serde_json::to_string(&report).unwrap();
        let spec_pos = json.find("\"spec\"").unwrap();
        let i_pos = json.find("\"i\"").unwrap();
        let dd_pos = json.find("\"dd_zero\"").unwrap();
        assert!(spec_pos < i_pos && i_pos < dd_pos);
        // determinism: byte-identical reports for identical seeds
        let again = serde_json::to_string(&verify_koszul(&sp, 0, 42).unwrap()).unwrap();
        assert_eq!(json, again);
    }
}
