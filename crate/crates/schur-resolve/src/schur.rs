//! Pieri expansions, semistandard-tableau enumeration and Schur polynomial
//! evaluation.
//!
//! SSYT enumeration is the single source of truth for graded generator
//! degrees of a Schur module; the Jacobi–Trudi determinant exists as an
//! independent cross-check oracle. Everything is exact (integers and
//! rationals, never floats).

use num::rational::BigRational;
use num::{BigInt, One, Zero};

use crate::error::Error;
use crate::graded::GradedFreeModule;
use crate::partitions::{binomial, schur_rank, Partition};

/// Multiplicity-free Pieri decomposition of `Σ^I E ⊗ (∧^n or S_n) E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieriExpansion {
    pub terms: Vec<Partition>,
    pub ambient_rank: usize,
}

impl PieriExpansion {
    /// Total Schur rank of the expansion over the ambient rank.
    pub fn total_rank(&self) -> u64 {
        self.terms
            .iter()
            .map(|j| schur_rank(j, self.ambient_rank))
            .sum()
    }
}

/// `∧^nboxes E ⊗ Σ^I E`: add `nboxes` boxes to `I`, no two in the same row.
/// Slotwise this means `i_v ≤ j_v ≤ i_v + 1` per given slot, plus one extra
/// slot `0 ≤ j_0 ≤ 1` exactly when `I` is presented with fewer slots than `r`.
pub fn pieri_wedge(i_part: &Partition, nboxes: u32, r: usize) -> Result<PieriExpansion, Error> {
    let s = i_part.slots();
    if s > r {
        return Err(Error::WrongSlotCount {
            expected: r,
            got: s,
        });
    }
    if u64::from(nboxes) > r as u64 {
        return Err(Error::OutOfRange {
            what: "nboxes",
            value: i64::from(nboxes),
            lo: 0,
            hi: r as i64,
        });
    }
    let parts = i_part.parts();
    let extra_slot = s < r;
    let mut terms = Vec::new();
    // One bit per slot, optionally one for the new shortest row.
    let nbits = s + usize::from(extra_slot);
    for mask in 0u64..(1u64 << nbits) {
        if mask.count_ones() != nboxes {
            continue;
        }
        let j0 = extra_slot && (mask & (1 << s)) != 0;
        let mut j: Vec<u32> = (0..s)
            .map(|v| parts[v] + u32::from(mask & (1 << v) != 0))
            .collect();
        if j0 {
            j.insert(0, 1);
        }
        if j.windows(2).all(|w| w[0] <= w[1]) {
            terms.push(Partition::new(j).expect("checked increasing"));
        }
    }
    terms.sort();
    Ok(PieriExpansion {
        terms,
        ambient_rank: r,
    })
}

/// `S_nboxes E ⊗ Σ^I E`: add a horizontal strip of `nboxes` boxes (no two in
/// the same column). Slotwise: `i_v ≤ j_v` and `j_{v−1} ≤ i_v`, with at most
/// one new shortest row `0 ≤ j_0 ≤ i_1` when the presentation has fewer slots
/// than `r`.
pub fn pieri_sym(i_part: &Partition, nboxes: u32, r: usize) -> Result<PieriExpansion, Error> {
    let s = i_part.slots();
    if s > r {
        return Err(Error::WrongSlotCount {
            expected: r,
            got: s,
        });
    }
    let parts = i_part.parts();
    let mut terms = Vec::new();
    if s == 0 {
        if nboxes == 0 {
            terms.push(Partition::empty());
        } else if r > 0 {
            terms.push(Partition::new(vec![nboxes]).unwrap());
        }
        return Ok(PieriExpansion {
            terms,
            ambient_rank: r,
        });
    }
    let budget = nboxes as i64;
    let j0_max = if s < r { parts[0] } else { 0 };
    for j0 in 0..=j0_max {
        // remaining slots v = 1..=s with i_v ≤ j_v ≤ i_{v+1} (last unbounded)
        let mut stack: Vec<(usize, i64, Vec<u32>)> = vec![(0, budget - i64::from(j0), Vec::new())];
        while let Some((v, rem, acc)) = stack.pop() {
            if rem < 0 {
                continue;
            }
            if v == s {
                if rem == 0 {
                    let mut j = acc.clone();
                    if j0 > 0 {
                        j.insert(0, j0);
                    }
                    terms.push(Partition::new(j).expect("increasing by construction"));
                }
                continue;
            }
            let lo = parts[v];
            let hi = if v + 1 < s {
                parts[v + 1]
            } else {
                // last slot takes whatever budget is left
                (i64::from(parts[v]) + rem) as u32
            };
            for jv in lo..=hi {
                let spent = i64::from(jv) - i64::from(lo);
                let mut next = acc.clone();
                next.push(jv);
                stack.push((v + 1, rem - spent, next));
            }
        }
    }
    terms.sort();
    terms.dedup();
    Ok(PieriExpansion {
        terms,
        ambient_rank: r,
    })
}

/// Walk all SSYT of the given shape (decreasing row lengths) with entries in
/// `1..=r`, folding a per-cell accumulator. Rows weakly increase left to
/// right, columns strictly increase top to bottom.
fn ssyt_fold<T: Clone>(
    shape: &[u32],
    r: usize,
    init: T,
    cell: &impl Fn(&T, usize) -> T,
    emit: &mut impl FnMut(&T),
) {
    if shape.is_empty() {
        emit(&init);
        return;
    }
    // entries of the previous row (for column strictness) and current row
    #[allow(clippy::too_many_arguments)]
    fn rec<T: Clone>(
        shape: &[u32],
        r: usize,
        row: usize,
        col: usize,
        prev_row: &[usize],
        cur_row: &mut Vec<usize>,
        acc: T,
        cell: &impl Fn(&T, usize) -> T,
        emit: &mut impl FnMut(&T),
    ) {
        if row == shape.len() {
            emit(&acc);
            return;
        }
        let width = shape[row] as usize;
        if col == width {
            let prev: Vec<usize> = cur_row.clone();
            rec(
                shape,
                r,
                row + 1,
                0,
                &prev,
                &mut Vec::new(),
                acc,
                cell,
                emit,
            );
            return;
        }
        let mut lo = 1usize;
        if col > 0 {
            lo = lo.max(cur_row[col - 1]);
        }
        if col < prev_row.len() {
            lo = lo.max(prev_row[col] + 1);
        }
        for entry in lo..=r {
            cur_row.push(entry);
            let next = cell(&acc, entry);
            rec(shape, r, row, col + 1, prev_row, cur_row, next, cell, emit);
            cur_row.pop();
        }
    }
    rec(shape, r, 0, 0, &[], &mut Vec::new(), init, cell, emit);
}

/// Decreasing-convention shape of a partition (stripped, reversed).
fn decreasing_shape(p: &Partition) -> Vec<u32> {
    let mut shape: Vec<u32> = p.stripped().parts().to_vec();
    shape.reverse();
    shape
}

/// Graded generator degrees of `Σ^P E` for `E = ⊕ R(d_k)`, `d_k` the `twists`:
/// one generator per SSYT `T`, at twist `Σ_cells d_{T(cell)}`. The total
/// multiplicity equals the Schur rank; a shape with more rows than the rank
/// yields the zero module.
pub fn schur_generator_degrees(p: &Partition, twists: &[i64]) -> GradedFreeModule {
    let r = twists.len();
    let mut out = GradedFreeModule::empty();
    if p.length() > r {
        return out;
    }
    let shape = decreasing_shape(p);
    ssyt_fold(
        &shape,
        r,
        0i64,
        &|acc, entry| acc + twists[entry - 1],
        &mut |twist| out.insert(*twist, "", 1),
    );
    out
}

/// Number of SSYT of shape `P` with entries `1..=r` — the enumeration-side
/// rank oracle.
pub fn ssyt_count(p: &Partition, r: usize) -> u64 {
    if p.length() > r {
        return 0;
    }
    let shape = decreasing_shape(p);
    let mut n = 0u64;
    ssyt_fold(&shape, r, (), &|_, _| (), &mut |_| n += 1);
    n
}

/// Complete homogeneous symmetric polynomial `h_k` at the given point.
pub fn complete_homogeneous(values: &[BigRational], k: i64) -> BigRational {
    if k < 0 {
        return BigRational::zero();
    }
    let k = k as usize;
    // h[d] over the first m variables, built one variable at a time
    let mut h = vec![BigRational::zero(); k + 1];
    h[0] = BigRational::one();
    for v in values {
        for d in 1..=k {
            let add = v * &h[d - 1];
            h[d] += add;
        }
    }
    h[k].clone()
}

/// Elementary symmetric polynomial `e_k` at the given point.
pub fn elementary(values: &[BigRational], k: i64) -> BigRational {
    if k < 0 || k as usize > values.len() {
        return BigRational::zero();
    }
    let k = k as usize;
    let mut e = vec![BigRational::zero(); k + 1];
    e[0] = BigRational::one();
    for v in values {
        for d in (1..=k).rev() {
            let add = v * &e[d - 1];
            e[d] += add;
        }
    }
    e[k].clone()
}

/// Schur polynomial `s_P` at a rational point, by the Jacobi–Trudi
/// determinant `det(h_{λ_u − u + v})` in complete homogeneous polynomials.
pub fn schur_eval(p: &Partition, values: &[BigRational]) -> BigRational {
    if p.length() > values.len() {
        return BigRational::zero();
    }
    let shape = decreasing_shape(p);
    let k = shape.len();
    if k == 0 {
        return BigRational::one();
    }
    let mut m = crate::ratmat::RatMat::zeros(k, k);
    for (u, &row_len) in shape.iter().enumerate() {
        for v in 0..k {
            let idx = i64::from(row_len) - u as i64 + v as i64;
            m.set(u, v, complete_homogeneous(values, idx));
        }
    }
    m.det()
}

/// Schur polynomial by direct SSYT monomial summation — the oracle side of
/// the Jacobi–Trudi cross-check.
pub fn schur_eval_ssyt(p: &Partition, values: &[BigRational]) -> BigRational {
    if p.length() > values.len() {
        return BigRational::zero();
    }
    let shape = decreasing_shape(p);
    let mut sum = BigRational::zero();
    ssyt_fold(
        &shape,
        values.len(),
        BigRational::one(),
        &|acc, entry| acc * &values[entry - 1],
        &mut |term| sum += term,
    );
    sum
}

/// Index set of the plethysm `S_m(∧²F) = ⊕ Σ^I F`: partitions of weight `2m`
/// with at most `r` nonzero parts whose *conjugate* has all parts even (the
/// parity reading validated by the rank oracle; the literal parts-even
/// reading fails it already at m = 1). Terms are zero-padded to `r` slots.
pub fn sym_wedge2_plethysm(m: u32, r: usize) -> Result<Vec<Partition>, Error> {
    if r < 2 {
        return Err(Error::OutOfRange {
            what: "r",
            value: r as i64,
            lo: 2,
            hi: i64::MAX,
        });
    }
    let weight = 2 * u64::from(m);
    let candidates = partitions_of_weight(weight, r);
    let even_parts: Vec<Partition> = candidates
        .iter()
        .filter(|p| p.parts().iter().all(|&x| x % 2 == 0))
        .cloned()
        .collect();
    let even_conj: Vec<Partition> = candidates
        .iter()
        .filter(|p| p.conjugate().parts().iter().all(|&x| x % 2 == 0))
        .cloned()
        .collect();
    let wedge2_rank = binomial(r as u64, 2);
    let expected = binomial(wedge2_rank + u64::from(m) - 1, u64::from(m));
    let rank_sum = |set: &[Partition]| -> u64 { set.iter().map(|p| schur_rank(p, r)).sum() };
    let conj_ok = rank_sum(&even_conj) == expected;
    let literal_ok = rank_sum(&even_parts) == expected;
    let chosen = match (conj_ok, literal_ok) {
        (true, false) => even_conj,
        (false, true) => even_parts,
        (true, true) => {
            if even_conj == even_parts {
                even_conj
            } else {
                return Err(Error::Inconsistency(format!(
                    "both parity readings validate differently for m={m}, r={r}"
                )));
            }
        }
        (false, false) => {
            return Err(Error::Inconsistency(format!(
                "no parity reading matches rank {expected} for m={m}, r={r}"
            )))
        }
    };
    let mut padded = chosen
        .into_iter()
        .map(|p| p.padded(r))
        .collect::<Result<Vec<_>, _>>()?;
    padded.sort();
    Ok(padded)
}

/// All partitions of the given weight with at most `max_parts` nonzero parts,
/// zero-stripped, sorted.
fn partitions_of_weight(weight: u64, max_parts: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    // decreasing composition, then reversed into the increasing convention
    fn rec(rem: u64, max_next: u64, left: usize, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            let mut parts = acc.clone();
            parts.reverse();
            out.push(Partition::new(parts).expect("increasing"));
            return;
        }
        if left == 0 {
            return;
        }
        let top = rem.min(max_next);
        for v in (1..=top).rev() {
            acc.push(v as u32);
            rec(rem - v, v, left - 1, acc, out);
            acc.pop();
        }
    }
    rec(weight, weight.max(1), max_parts, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Exact rational from an integer pair, for tests and specializations.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
