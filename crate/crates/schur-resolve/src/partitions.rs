//! Partition arithmetic in the weakly increasing convention
//! `0 ≤ i_1 ≤ i_2 ≤ ⋯ ≤ i_r`.
//!
//! Leading zeros are allowed and meaningful as padding: the surgery and the
//! Pieri rules are sensitive to the slot count, so slot counts are always
//! explicit parameters and never inferred. Conjugation, Durfee squares,
//! containment, the `I → I'` surgery with its homological bookkeeping, the
//! Weyl rank product and the hook ranks `L_p^q` all live here.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::{One, ToPrimitive};

use crate::error::Error;

/// A partition, stored exactly as given (leading zeros preserved).
///
/// ```
/// use schur_resolve::Partition;
///
/// let p: Partition = "2,2,3,5,8".parse().unwrap();
/// assert_eq!(p.conjugate().to_string(), "1,1,1,2,2,3,5,5");
/// assert_eq!(p.durfee(), 3);
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from a weakly increasing sequence; leading zeros are kept.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotWeaklyIncreasing(format!("{parts:?}")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of stored slots, counting leading zeros.
    pub fn slots(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// Drop leading zeros.
    pub fn stripped(&self) -> Self {
        let first = self.parts.iter().position(|&p| p > 0);
        match first {
            Some(k) => Self {
                parts: self.parts[k..].to_vec(),
            },
            None => Self::empty(),
        }
    }

    /// Left-pad with zeros to exactly `slots` entries.
    pub fn padded(&self, slots: usize) -> Result<Self, Error> {
        let core = self.stripped();
        if core.slots() > slots {
            return Err(Error::WrongSlotCount {
                expected: slots,
                got: core.slots(),
            });
        }
        let mut parts = vec![0u32; slots - core.slots()];
        parts.extend_from_slice(&core.parts);
        Ok(Self { parts })
    }

    /// Column lengths of the Young diagram, emitted weakly increasing
    /// (no leading zeros).
    pub fn conjugate(&self) -> Self {
        let max = self.parts.iter().copied().max().unwrap_or(0);
        let mut cols: Vec<u32> = (1..=max)
            .map(|x| self.parts.iter().filter(|&&p| p >= x).count() as u32)
            .collect();
        cols.reverse();
        Self { parts: cols }
    }

    /// Side of the largest square inside the Young diagram: the largest `s`
    /// such that the `s` largest parts are all ≥ `s`.
    pub fn durfee(&self) -> u32 {
        let n = self.parts.len();
        let mut best = 0u32;
        for s in 1..=n {
            if self.parts[n - s] >= s as u32 {
                best = s as u32;
            } else {
                break;
            }
        }
        best
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parse a comma-separated increasing list, e.g. `"2,2,3,5,8"`.
    /// The empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::BadPartitionEntry(tok.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}

/// Containment of Young diagrams: the shorter partition is right-aligned
/// against the longer (largest parts matched), zeros padded on the left.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    let a = inner.parts();
    let b = outer.parts();
    for k in 1..=a.len() {
        let x = a[a.len() - k];
        let y = if k <= b.len() { b[b.len() - k] } else { 0 };
        if x > y {
            return false;
        }
    }
    true
}

/// All weakly increasing tuples of length `slots` with entries in
/// `0..=maxpart` (the `slots × maxpart` box, all-zero tuple included).
pub fn partitions_in_box(slots: usize, maxpart: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; slots];
    fn rec(cur: &mut Vec<u32>, pos: usize, lo: u32, maxpart: u32, out: &mut Vec<Partition>) {
        if pos == cur.len() {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for v in lo..=maxpart {
            cur[pos] = v;
            rec(cur, pos + 1, v, maxpart, out);
        }
    }
    rec(&mut cur, 0, 0, maxpart, &mut out);
    out
}

/// Outcome of the `I → I'` surgery at ideal size `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryResult {
    /// The derived partition `I'` (exactly `t` slots), or `None` when the
    /// guard fails.
    pub derived: Option<Partition>,
    /// Durfee square `p_I`.
    pub durfee: u32,
    /// The shift `n(I) = (i−1)·p_I`.
    pub shift: i64,
    /// Homological degree `j = −|I| + n(I)`.
    pub homdeg: i64,
}

/// The surgery on an `I` with exactly `q = t−i+1` slots and parts ≤ `t+c−1`:
/// splice `i−1` copies of the Durfee side `p_I` between positions `q−p_I`
/// and `q−p_I+1` and subtract `i−1` from the top `p_I` parts, provided
/// `i_{q−p_I+1} ≥ p_I + i − 1`; otherwise the derived partition is absent.
pub fn lascoux_surgery(input: &Partition, i: u32, t: u32, c: u32) -> Result<SurgeryResult, Error> {
    if i < 1 || i > t {
        return Err(Error::OutOfRange {
            what: "i",
            value: i64::from(i),
            lo: 1,
            hi: i64::from(t),
        });
    }
    let q = (t - i + 1) as usize;
    if input.slots() != q {
        return Err(Error::WrongSlotCount {
            expected: q,
            got: input.slots(),
        });
    }
    let maxpart = t + c - 1;
    if let Some(&p) = input.parts().iter().find(|&&p| p > maxpart) {
        return Err(Error::PartTooLarge {
            part: p,
            max: maxpart,
        });
    }

    let p = input.durfee();
    let shift = i64::from(i - 1) * i64::from(p);
    let homdeg = -(input.weight() as i64) + shift;

    if input.is_zero() {
        return Ok(SurgeryResult {
            derived: None,
            durfee: 0,
            shift: 0,
            homdeg: 0,
        });
    }

    let parts = input.parts();
    let cut = q - p as usize; // 0-based index of i_{q-p_I+1}
    if parts[cut] < p + i - 1 {
        return Ok(SurgeryResult {
            derived: None,
            durfee: p,
            shift,
            homdeg,
        });
    }

    // Maximality of the Durfee square forces the part just below the top
    // block to be at most p_I; the splice would not be increasing otherwise.
    if cut >= 1 {
        assert!(
            parts[cut - 1] <= p,
            "durfee maximality violated for {input}: part {} > {p}",
            parts[cut - 1]
        );
    }

    let mut derived = Vec::with_capacity(t as usize);
    derived.extend_from_slice(&parts[..cut]);
    derived.extend(std::iter::repeat_n(p, (i - 1) as usize));
    derived.extend(parts[cut..].iter().map(|&v| v - (i - 1)));
    debug_assert_eq!(derived.len(), t as usize);
    let derived = Partition::new(derived)?;

    Ok(SurgeryResult {
        derived: Some(derived),
        durfee: p,
        shift,
        homdeg,
    })
}

/// How two admissible partitions at consecutive homological degrees sit
/// relative to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adjacency {
    /// `H ⊄ I`: the differential block is zero.
    NotContained,
    /// `H ⊂ I`, coinciding except in one slot; `rho` is the difference there.
    OneSpot { rho: u32 },
    /// `H ⊂ I` but differing in two or more slots — flagged for inspection.
    MultiSpot,
}

impl Adjacency {
    pub fn rho(&self) -> Option<u32> {
        match self {
            Adjacency::OneSpot { rho } => Some(*rho),
            _ => None,
        }
    }
}

/// Classify the differential block between the terms indexed by `upper`
/// (deeper position, homdeg `j`) and `lower` (homdeg `j+1`). Both must be
/// admissible with nonempty derived partitions. In the one-spot case the
/// derived conjugates are checked to differ in one spot by the same amount.
pub fn adjacency(
    upper: &Partition,
    lower: &Partition,
    i: u32,
    t: u32,
    c: u32,
) -> Result<Adjacency, Error> {
    let su = lascoux_surgery(upper, i, t, c)?;
    let sl = lascoux_surgery(lower, i, t, c)?;
    let (du, dl) = match (&su.derived, &sl.derived) {
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        _ => return Err(Error::DerivedAbsent),
    };
    if su.homdeg != sl.homdeg - 1 {
        return Err(Error::NotConsecutive {
            left: su.homdeg,
            right: sl.homdeg,
        });
    }
    if !contains(lower, upper) {
        return Ok(Adjacency::NotContained);
    }
    let diffs: Vec<usize> = (0..upper.slots())
        .filter(|&v| upper.parts()[v] != lower.parts()[v])
        .collect();
    match diffs.len() {
        1 => {
            let v = diffs[0];
            let rho = upper.parts()[v] - lower.parts()[v];
            let cu = du.conjugate();
            let cl = dl.conjugate();
            let n = cu.slots().max(cl.slots());
            let cu = cu.padded(n).expect("pad conjugate");
            let cl = cl.padded(n).expect("pad conjugate");
            let cdiffs: Vec<usize> = (0..n).filter(|&v| cu.parts()[v] != cl.parts()[v]).collect();
            if cdiffs.len() != 1
                || cu.parts()[cdiffs[0]] < cl.parts()[cdiffs[0]]
                || cu.parts()[cdiffs[0]] - cl.parts()[cdiffs[0]] != rho
            {
                return Err(Error::Inconsistency(format!(
                    "one-spot difference {rho} between {upper} and {lower} not mirrored \
                     by the derived conjugates {cu} and {cl}"
                )));
            }
            Ok(Adjacency::OneSpot { rho })
        }
        0 => Err(Error::Inconsistency(format!(
            "equal partitions {upper} at consecutive homological degrees"
        ))),
        _ => Ok(Adjacency::MultiSpot),
    }
}

/// Exact binomial coefficient (0 when `k > n`).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc.to_u64().expect("binomial overflows u64")
}

/// Rank of the Schur module with exponent `P` on a free module of rank `r`:
/// the Weyl product `∏_{u<v} (i_v − i_u + v − u)/(v − u)` over `r` slots.
/// A partition with more than `r` nonzero parts has rank 0.
pub fn schur_rank(p: &Partition, r: usize) -> u64 {
    if p.length() > r {
        return 0;
    }
    let padded = p.padded(r).expect("length checked");
    let v = padded.parts();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for x in 0..r {
        for y in (x + 1)..r {
            num *= BigInt::from(i64::from(v[y]) - i64::from(v[x]) + (y as i64 - x as i64));
            den *= BigInt::from(y as i64 - x as i64);
        }
    }
    (num / den).to_u64().expect("schur rank overflows u64")
}

/// Rank of `L_p^q` on a free module of rank `n`:
/// `C(n+p−1, q+p−1)·C(q+p−2, p−1)` with the degenerate conventions
/// `L_p^0 = 0`, `L_0^q = 0 (q ≠ 1)`, `L_0^1 = R`, and 0 whenever `q > n`.
pub fn lpq_rank(p: u64, q: u64, n: u64) -> u64 {
    if q == 0 || q > n {
        return 0;
    }
    if p == 0 {
        return if q == 1 { 1 } else { 0 };
    }
    binomial(n + p - 1, q + p - 1) * binomial(q + p - 2, p - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(
            pt(&[2, 2, 3, 5, 8]).conjugate(),
            pt(&[1, 1, 1, 2, 2, 3, 5, 5])
        );
        assert_eq!(pt(&[1, 2, 4]).conjugate(), pt(&[1, 1, 2, 3]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_involution_in_box() {
        for p in partitions_in_box(6, 6) {
            assert_eq!(p.conjugate().conjugate(), p.stripped(), "p = {p}");
        }
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(pt(&[2, 2, 3, 5, 8]).durfee(), 3);
        assert_eq!(pt(&[7]).durfee(), 1);
        assert_eq!(pt(&[3, 3, 3]).durfee(), 3);
        assert_eq!(Partition::empty().durfee(), 0);
    }

    #[test]
    fn durfee_conjugation_symmetric_in_box() {
        for p in partitions_in_box(6, 6) {
            assert_eq!(p.durfee(), p.conjugate().durfee(), "p = {p}");
        }
    }

    #[test]
    fn containment() {
        assert!(contains(&pt(&[3, 4]), &pt(&[4, 4])));
        assert!(!contains(&pt(&[4, 4]), &pt(&[3, 4])));
        assert!(contains(&Partition::empty(), &pt(&[5])));
        // right alignment: largest parts matched
        assert!(contains(&pt(&[3]), &pt(&[1, 3])));
    }

    #[test]
    fn parse_and_display() {
        let p: Partition = "2,2,3,5,8".parse().unwrap();
        assert_eq!(p, pt(&[2, 2, 3, 5, 8]));
        assert_eq!(p.to_string(), "2,2,3,5,8");
        assert!("3,2".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn surgery_rectangle() {
        let s = lascoux_surgery(&pt(&[4, 4]), 2, 3, 2).unwrap();
        assert_eq!(s.derived, Some(pt(&[2, 3, 3])));
        assert_eq!(s.durfee, 2);
        assert_eq!(s.shift, 2);
        assert_eq!(s.homdeg, -6);
    }

    #[test]
    fn surgery_near_rectangle() {
        let s = lascoux_surgery(&pt(&[3, 4]), 2, 3, 2).unwrap();
        assert_eq!(s.derived, Some(pt(&[2, 2, 3])));
        assert_eq!(s.durfee, 2);
        assert_eq!(s.shift, 2);
        assert_eq!(s.homdeg, -5);
    }

    #[test]
    fn surgery_guard_fails() {
        let s = lascoux_surgery(&pt(&[1, 1]), 2, 3, 2).unwrap();
        assert_eq!(s.derived, None);
    }

    #[test]
    fn surgery_rejects_bad_inputs() {
        assert!(lascoux_surgery(&pt(&[5, 5]), 2, 3, 2).is_err()); // part > t+c-1
        assert!(lascoux_surgery(&pt(&[1, 1, 1]), 2, 3, 2).is_err()); // wrong slots
        assert!(lascoux_surgery(&pt(&[1, 1]), 4, 3, 2).is_err()); // i > t
    }

    #[test]
    fn surgery_guarantees_exhaustive() {
        // Derived partition has length t and is weakly increasing; homdeg in
        // range; the Durfee-maximality assert never trips.
        for t in 1..=4u32 {
            for c in 1..=4u32 {
                for i in 1..=t {
                    let q = (t - i + 1) as usize;
                    let codim = i64::from(t - i + 1) * i64::from(t + c - i);
                    for p in partitions_in_box(q, t + c - 1) {
                        let s = lascoux_surgery(&p, i, t, c).unwrap();
                        if let Some(d) = &s.derived {
                            assert_eq!(d.slots(), t as usize);
                            assert!(!p.is_zero());
                            assert!(s.homdeg >= -codim && s.homdeg <= -1, "{p} at {i},{t},{c}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn adjacency_one_spot() {
        let a = adjacency(&pt(&[4, 4]), &pt(&[3, 4]), 2, 3, 2).unwrap();
        assert_eq!(a.rho(), Some(1));
    }

    #[test]
    fn adjacency_guard_blocks_pair() {
        // (2,4) fails the surgery guard, so the pair is rejected outright.
        let s = lascoux_surgery(&pt(&[2, 4]), 2, 3, 2).unwrap();
        assert_eq!(s.derived, None);
        assert!(matches!(
            adjacency(&pt(&[4, 4]), &pt(&[2, 4]), 2, 3, 2),
            Err(Error::DerivedAbsent)
        ));
    }

    #[test]
    fn adjacency_rejects_non_partition() {
        assert!(Partition::new(vec![4, 3]).is_err());
    }

    #[test]
    fn adjacency_case1_zero_block() {
        // (4,4) at homdeg -6 and (1,5) at homdeg -5 (t = c = 3, i = 2) are
        // consecutive but (1,5) ⊄ (4,4): the block is zero.
        assert_eq!(lascoux_surgery(&pt(&[4, 4]), 2, 3, 3).unwrap().homdeg, -6);
        assert_eq!(lascoux_surgery(&pt(&[1, 5]), 2, 3, 3).unwrap().homdeg, -5);
        assert_eq!(
            adjacency(&pt(&[4, 4]), &pt(&[1, 5]), 2, 3, 3).unwrap(),
            Adjacency::NotContained
        );
        // a non-consecutive pair is rejected
        assert!(matches!(
            adjacency(&pt(&[3, 4]), &pt(&[0, 4]), 2, 3, 2),
            Err(Error::NotConsecutive { .. })
        ));
        // a bigger one-spot gap carries over to the derived conjugates
        assert_eq!(
            adjacency(&pt(&[3, 4]), &pt(&[1, 4]), 2, 3, 2)
                .unwrap()
                .rho(),
            Some(2)
        );
    }

    #[test]
    fn schur_rank_examples() {
        assert_eq!(schur_rank(&pt(&[0, 0, 1, 2, 4]), 5), 700);
        for r in 1..=6usize {
            for m in 1..=r {
                let ones = Partition::new(vec![1; m]).unwrap();
                assert_eq!(schur_rank(&ones, r), binomial(r as u64, m as u64));
            }
            for m in 1..=4u32 {
                let row = Partition::new(vec![m]).unwrap();
                assert_eq!(
                    schur_rank(&row, r),
                    binomial(r as u64 + u64::from(m) - 1, u64::from(m))
                );
            }
        }
        assert_eq!(schur_rank(&pt(&[1, 1, 1]), 2), 0); // more rows than rank
        assert_eq!(schur_rank(&Partition::empty(), 3), 1);
    }

    #[test]
    fn lpq_rank_examples() {
        assert_eq!(lpq_rank(2, 1, 5), 15); // S_2 of rank 5
        assert_eq!(lpq_rank(1, 3, 5), 10); // wedge^3 of rank 5
        assert_eq!(lpq_rank(3, 2, 4), 45); // hook (3,1) on rank 4
    }

    #[test]
    fn lpq_rank_properties() {
        for n in 0..=6u64 {
            for p in 0..=6u64 {
                // (2) L_p^1 = S_p
                if n >= 1 {
                    assert_eq!(lpq_rank(p, 1, n), binomial(n + p - 1, p));
                }
                // (4) L_p^0 = 0
                assert_eq!(lpq_rank(p, 0, n), 0);
                for q in 0..=6u64 {
                    // (5) vanishing above the rank
                    if q > n {
                        assert_eq!(lpq_rank(p, q, n), 0);
                    }
                    // (4) L_0^q = 0 for q != 1
                    if q != 1 {
                        assert_eq!(lpq_rank(0, q, n), 0);
                    }
                }
                // (3) L_1^q = wedge^q for q != 0
                for q in 1..=6u64 {
                    assert_eq!(lpq_rank(1, q, n), binomial(n, q));
                }
                // (6) L_p^n = S_{p-1} ⊗ wedge^n
                if n >= 1 && p >= 1 {
                    assert_eq!(lpq_rank(p, n, n), binomial(n + p - 2, p - 1));
                }
            }
        }
        assert_eq!(lpq_rank(0, 1, 5), 1);
    }

    #[test]
    fn lpq_rank_is_the_hook_rank() {
        // L_p^q on rank n is the Schur module of hook shape (1^{q-1}, p)
        for n in 1..=5usize {
            for p in 1..=5u32 {
                for q in 1..=5usize {
                    let mut hook = vec![1u32; q - 1];
                    hook.push(p);
                    let hook = Partition::new(hook).unwrap();
                    assert_eq!(
                        lpq_rank(u64::from(p), q as u64, n as u64),
                        schur_rank(&hook, n),
                        "p={p} q={q} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn lpq_rank_nullity_of_defining_map() {
        // rank L_p^q + rank L_{p+1}^{q-1} = rank(S_p ⊗ wedge^{q-1}), q ≥ 2.
        for n in 1..=6u64 {
            for p in 0..=6u64 {
                for q in 2..=6u64 {
                    let lhs = lpq_rank(p, q, n) + lpq_rank(p + 1, q - 1, n);
                    let sp = if p == 0 { 1 } else { binomial(n + p - 1, p) };
                    let rhs = sp * binomial(n, q - 1);
                    assert_eq!(lhs, rhs, "p={p} q={q} n={n}");
                }
            }
        }
    }

    #[test]
    fn box_enumeration_count() {
        // C(slots + maxpart, slots) weakly increasing tuples
        assert_eq!(partitions_in_box(2, 4).len(), 15);
        assert_eq!(partitions_in_box(3, 3).len(), 20);
    }
}
