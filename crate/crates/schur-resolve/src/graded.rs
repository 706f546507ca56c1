//! Graded free modules as twist multisets, complexes of them, Hilbert
//! numerators and rendering.
//!
//! Convention, fixed once: a stored integer `d` means a copy of `R(d)`,
//! whose generator sits in degree `−d`. Printed tables transcribe with their
//! printed signs (`R(-2)^30` is `{-2: 30}`). No automatic cancellation ever
//! happens between adjacent positions; a diagnostic lists candidates.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// `⊕ R(d)^m` with optional provenance labels per summand.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedFreeModule {
    /// twist → (source label → multiplicity); the empty label is "unlabeled".
    summands: BTreeMap<i64, BTreeMap<String, u64>>,
}

impl GradedFreeModule {
    pub fn empty() -> Self {
        Self::default()
    }

    /// A single `R(twist)^rank`, unlabeled.
    pub fn generator(twist: i64, rank: u64) -> Self {
        let mut m = Self::empty();
        m.insert(twist, "", rank);
        m
    }

    /// One `R(d)` per entry of `twists` (e.g. `F = ⊕ R(b_i)`).
    pub fn from_twists(twists: &[i64]) -> Self {
        let mut m = Self::empty();
        for &d in twists {
            m.insert(d, "", 1);
        }
        m
    }

    pub fn insert(&mut self, twist: i64, source: &str, rank: u64) {
        if rank == 0 {
            return;
        }
        *self
            .summands
            .entry(twist)
            .or_default()
            .entry(source.to_string())
            .or_insert(0) += rank;
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn rank(&self) -> u64 {
        self.summands
            .values()
            .flat_map(|by_src| by_src.values())
            .sum()
    }

    /// Twist → total multiplicity, labels aggregated away.
    pub fn twist_multiset(&self) -> BTreeMap<i64, u64> {
        self.summands
            .iter()
            .map(|(&d, by_src)| (d, by_src.values().sum()))
            .collect()
    }

    /// Same underlying graded module, labels ignored.
    pub fn same_twists(&self, other: &Self) -> bool {
        self.twist_multiset() == other.twist_multiset()
    }

    /// `(twist, source, rank)` triples, twist ascending then source ascending.
    pub fn iter_summands(&self) -> impl Iterator<Item = (i64, &str, u64)> {
        self.summands
            .iter()
            .flat_map(|(&d, by_src)| by_src.iter().map(move |(s, &r)| (d, s.as_str(), r)))
    }

    /// Dual then twist by `s`: each `R(d)` becomes `R(−d+s)`.
    pub fn dual_twist(&self, s: i64) -> Self {
        let mut m = Self::empty();
        for (d, src, r) in self.iter_summands() {
            m.insert(-d + s, src, r);
        }
        m
    }

    /// Twist by `s`: each `R(d)` becomes `R(d+s)`.
    pub fn twisted(&self, s: i64) -> Self {
        let mut m = Self::empty();
        for (d, src, r) in self.iter_summands() {
            m.insert(d + s, src, r);
        }
        m
    }

    /// Tensor product: twists add, ranks multiply. Labels combine with `⊗`
    /// (the empty label is neutral).
    pub fn tensor(&self, other: &Self) -> Self {
        let mut m = Self::empty();
        for (d1, s1, r1) in self.iter_summands() {
            for (d2, s2, r2) in other.iter_summands() {
                let label = match (s1.is_empty(), s2.is_empty()) {
                    (true, true) => String::new(),
                    (false, true) => s1.to_string(),
                    (true, false) => s2.to_string(),
                    (false, false) => format!("{s1}⊗{s2}"),
                };
                m.insert(d1 + d2, &label, r1 * r2);
            }
        }
        m
    }

    /// Direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut m = self.clone();
        for (d, s, r) in other.iter_summands() {
            m.insert(d, s, r);
        }
        m
    }

    /// Stamp one label over every summand.
    pub fn labeled(&self, label: &str) -> Self {
        let mut m = Self::empty();
        for (d, r) in self.twist_multiset() {
            m.insert(d, label, r);
        }
        m
    }

    /// Rename one source label.
    pub fn relabel(&self, from: &str, to: &str) -> Self {
        let mut m = Self::empty();
        for (d, s, r) in self.iter_summands() {
            m.insert(d, if s == from { to } else { s }, r);
        }
        m
    }

    /// Drop every summand carrying the given label.
    pub fn without_label(&self, label: &str) -> Self {
        let mut m = Self::empty();
        for (d, s, r) in self.iter_summands() {
            if s != label {
                m.insert(d, s, r);
            }
        }
        m
    }

    /// Restrict to the summands carrying the given label.
    pub fn only_label(&self, label: &str) -> Self {
        let mut m = Self::empty();
        for (d, s, r) in self.iter_summands() {
            if s == label {
                m.insert(d, s, r);
            }
        }
        m
    }

    /// Multiset difference by twist (labels of `other` ignored; ranks are
    /// removed from this module's sources in ascending label order).
    /// Errors if any multiplicity would go negative.
    pub fn minus_twists(&self, other: &Self) -> Result<Self, Error> {
        let mut m = self.clone();
        for (d, need) in other.twist_multiset() {
            let mut need = need;
            let by_src = m.summands.entry(d).or_default();
            let labels: Vec<String> = by_src.keys().cloned().collect();
            for label in labels {
                if need == 0 {
                    break;
                }
                let have = by_src.get_mut(&label).expect("label present");
                let take = (*have).min(need);
                *have -= take;
                need -= take;
                if *have == 0 {
                    by_src.remove(&label);
                }
            }
            if by_src.is_empty() {
                m.summands.remove(&d);
            }
            if need > 0 {
                return Err(Error::NegativeMultiplicity { twist: d });
            }
        }
        Ok(m)
    }

    /// Remove exactly `rank` copies of `R(twist)` carrying `source`.
    pub fn remove_summand(&mut self, twist: i64, source: &str, rank: u64) -> Result<(), Error> {
        let missing = || Error::MissingSummand {
            twist,
            label: source.to_string(),
            rank,
        };
        let by_src = self.summands.get_mut(&twist).ok_or_else(missing)?;
        let have = by_src.get_mut(source).ok_or_else(missing)?;
        if *have < rank {
            return Err(missing());
        }
        *have -= rank;
        if *have == 0 {
            by_src.remove(source);
        }
        if self.summands.get(&twist).is_some_and(|m| m.is_empty()) {
            self.summands.remove(&twist);
        }
        Ok(())
    }

    /// Remove a whole labeled summand (all twists with that source).
    pub fn remove_labeled(&mut self, source: &str) -> GradedFreeModule {
        let removed = self.only_label(source);
        *self = self.without_label(source);
        removed
    }
}

/// All `k`-subset twist sums of the given generators: `∧^k` of `⊕R(d)`.
pub fn wedge_power(twists: &[i64], k: usize) -> GradedFreeModule {
    let mut m = GradedFreeModule::empty();
    fn rec(twists: &[i64], start: usize, left: usize, sum: i64, m: &mut GradedFreeModule) {
        if left == 0 {
            m.insert(sum, "", 1);
            return;
        }
        for v in start..twists.len() {
            if twists.len() - v < left {
                break;
            }
            rec(twists, v + 1, left - 1, sum + twists[v], m);
        }
    }
    if k <= twists.len() {
        rec(twists, 0, k, 0, &mut m);
    }
    m
}

/// All `k`-multiset twist sums: `S_k` of `⊕R(d)`.
pub fn sym_power(twists: &[i64], k: usize) -> GradedFreeModule {
    let mut m = GradedFreeModule::empty();
    fn rec(twists: &[i64], start: usize, left: usize, sum: i64, m: &mut GradedFreeModule) {
        if left == 0 {
            m.insert(sum, "", 1);
            return;
        }
        for v in start..twists.len() {
            rec(twists, v, left - 1, sum + twists[v], m);
        }
    }
    if !twists.is_empty() || k == 0 {
        rec(twists, 0, k, 0, &mut m);
    }
    m
}

/// Minimality claim attached to a complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Minimality {
    #[serde(rename = "claimed-minimal")]
    ClaimedMinimal,
    #[serde(rename = "possibly-non-minimal")]
    PossiblyNonMinimal,
}

impl fmt::Display for Minimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Minimality::ClaimedMinimal => write!(f, "claimed-minimal"),
            Minimality::PossiblyNonMinimal => write!(f, "possibly-non-minimal"),
        }
    }
}

/// An ordered list of graded free modules, homological position 0 upward.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSpec {
    pub resolved_name: String,
    pub minimality: Minimality,
    pub positions: Vec<GradedFreeModule>,
    /// Recorded hypotheses (depth assumptions, convention extensions).
    pub assumptions: Vec<String>,
}

impl ComplexSpec {
    pub fn new(resolved_name: impl Into<String>, minimality: Minimality) -> Self {
        Self {
            resolved_name: resolved_name.into(),
            minimality,
            positions: Vec::new(),
            assumptions: Vec::new(),
        }
    }

    /// Insert `module` as a direct summand at `position`, growing as needed.
    pub fn add_at(&mut self, position: usize, module: GradedFreeModule) {
        if self.positions.len() <= position {
            self.positions
                .resize(position + 1, GradedFreeModule::empty());
        }
        self.positions[position] = self.positions[position].direct_sum(&module);
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn position(&self, k: usize) -> Option<&GradedFreeModule> {
        self.positions.get(k)
    }

    /// Drop empty positions at the tail.
    pub fn trim(&mut self) {
        while self.positions.last().is_some_and(|m| m.is_empty()) {
            self.positions.pop();
        }
    }

    /// Alternating rank sum `Σ (−1)^k rank_k`.
    pub fn euler_rank(&self) -> i64 {
        self.positions
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let r = m.rank() as i64;
                if k % 2 == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    /// Reverse the positions and dualize every term with shift `s`.
    pub fn dual_twist(&self, s: i64) -> Self {
        let mut out = self.clone();
        out.positions = self
            .positions
            .iter()
            .rev()
            .map(|m| m.dual_twist(s))
            .collect();
        out
    }

    /// Twist every position by `s`.
    pub fn twisted(&self, s: i64) -> Self {
        let mut out = self.clone();
        out.positions = self.positions.iter().map(|m| m.twisted(s)).collect();
        out
    }

    /// Tensor every position with a fixed graded free module.
    pub fn tensored(&self, m: &GradedFreeModule) -> Self {
        let mut out = self.clone();
        out.positions = self.positions.iter().map(|p| m.tensor(p)).collect();
        out
    }

    /// Drop summands labeled `label` at every position (trailing positions
    /// that become empty are trimmed).
    pub fn without_label(&self, label: &str) -> Self {
        let mut out = self.clone();
        out.positions = self
            .positions
            .iter()
            .map(|p| p.without_label(label))
            .collect();
        out.trim();
        out
    }

    /// Positionwise equality of the underlying graded modules (labels and
    /// metadata ignored).
    pub fn same_tables(&self, other: &Self) -> bool {
        self.positions.len() == other.positions.len()
            && self
                .positions
                .iter()
                .zip(&other.positions)
                .all(|(a, b)| a.same_twists(b))
    }

    /// `Σ_k (−1)^k Σ_{d,m} m·T^{−d}` — the Hilbert-series numerator of the
    /// resolved module. Two resolutions of the same module agree here.
    pub fn hilbert_numerator(&self) -> LaurentPoly {
        let mut terms: BTreeMap<i64, i64> = BTreeMap::new();
        for (k, m) in self.positions.iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            for (d, mult) in m.twist_multiset() {
                *terms.entry(-d).or_insert(0) += sign * mult as i64;
            }
        }
        LaurentPoly::from_terms(terms)
    }

    /// Twist/rank overlaps between consecutive positions — candidates for
    /// Betti-level cancellation. Reported, never applied.
    pub fn cancellation_candidates(&self) -> Vec<(usize, i64, u64)> {
        let mut out = Vec::new();
        for k in 0..self.positions.len().saturating_sub(1) {
            let a = self.positions[k].twist_multiset();
            let b = self.positions[k + 1].twist_multiset();
            for (d, &ra) in &a {
                if let Some(&rb) = b.get(d) {
                    out.push((k, *d, ra.min(rb)));
                }
            }
        }
        out
    }

    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Text => self.render_text(),
            RenderFormat::Json => self.render_json(),
            RenderFormat::Csv => self.render_csv(),
        }
    }

    /// Betti diagram: rows indexed by `generator degree − position`,
    /// columns by position.
    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}  [{}]\n", self.resolved_name, self.minimality));
        for a in &self.assumptions {
            out.push_str(&format!("assumption: {a}\n"));
        }
        if self.positions.is_empty() {
            out.push_str("(zero complex)\n");
            return out;
        }
        let mut rows: Vec<i64> = Vec::new();
        let mut grid: BTreeMap<(i64, usize), u64> = BTreeMap::new();
        for (k, m) in self.positions.iter().enumerate() {
            for (d, r) in m.twist_multiset() {
                let row = -d - k as i64;
                grid.insert((row, k), r);
                if !rows.contains(&row) {
                    rows.push(row);
                }
            }
        }
        rows.sort_unstable();
        let ncols = self.positions.len();
        let width = grid
            .values()
            .map(|r| r.to_string().len())
            .chain(rows.iter().map(|r| r.to_string().len() + 1))
            .chain((0..ncols).map(|k| k.to_string().len()))
            .max()
            .unwrap_or(1)
            .max(3);
        let mut line = " ".repeat(width + 2);
        for k in 0..ncols {
            line.push_str(&format!("{k:>width$} "));
        }
        out.push_str(line.trim_end());
        out.push('\n');
        for row in rows {
            let mut line = format!("{:>width$}: ", row);
            for k in 0..ncols {
                match grid.get(&(row, k)) {
                    Some(r) => line.push_str(&format!("{r:>width$} ")),
                    None => line.push_str(&format!("{:>width$} ", ".")),
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        #[derive(Serialize)]
        struct SummandJson<'a> {
            twist: i64,
            rank: u64,
            source: &'a str,
        }
        #[derive(Serialize)]
        struct PositionJson<'a> {
            index: usize,
            summands: Vec<SummandJson<'a>>,
        }
        #[derive(Serialize)]
        struct ComplexJson<'a> {
            resolved_name: &'a str,
            minimality: Minimality,
            positions: Vec<PositionJson<'a>>,
            assumptions: &'a [String],
        }
        let positions = self
            .positions
            .iter()
            .enumerate()
            .map(|(index, m)| {
                let mut summands: Vec<SummandJson> = m
                    .iter_summands()
                    .map(|(twist, source, rank)| SummandJson {
                        twist,
                        rank,
                        source,
                    })
                    .collect();
                // twists descending, then source ascending
                summands.sort_by(|x, y| y.twist.cmp(&x.twist).then(x.source.cmp(y.source)));
                PositionJson { index, summands }
            })
            .collect();
        let doc = ComplexJson {
            resolved_name: &self.resolved_name,
            minimality: self.minimality,
            positions,
            assumptions: &self.assumptions,
        };
        serde_json::to_string_pretty(&doc).expect("serialization cannot fail")
    }

    fn render_csv(&self) -> String {
        let mut out = String::from("position,twist,multiplicity,source\n");
        for (k, m) in self.positions.iter().enumerate() {
            let mut rows: Vec<(i64, &str, u64)> = m.iter_summands().collect();
            rows.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(y.1)));
            for (d, src, r) in rows {
                let quoted = if src.contains(',') || src.contains('"') {
                    format!("\"{}\"", src.replace('"', "\"\""))
                } else {
                    src.to_string()
                };
                out.push_str(&format!("{k},{d},{r},{quoted}\n"));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Json,
    Csv,
}

impl FromStr for RenderFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Self::Text),
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// `φ: F = ⊕_{i=1}^t R(b_i) → G = ⊕_{j=1}^{t+c−1} R(a_j)` over
/// `R = k[x_0..x_n]`, entries of positive degree (minimal morphism).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MorphismSpec {
    t: u32,
    c: u32,
    a: Vec<i64>,
    b: Vec<i64>,
    nvars: u32,
}

impl MorphismSpec {
    pub fn new(t: u32, c: u32, a: Vec<i64>, b: Vec<i64>, nvars: u32) -> Result<Self, Error> {
        if t < 1 {
            return Err(Error::OutOfRange {
                what: "t",
                value: i64::from(t),
                lo: 1,
                hi: i64::MAX,
            });
        }
        if c < 1 {
            return Err(Error::OutOfRange {
                what: "c",
                value: i64::from(c),
                lo: 1,
                hi: i64::MAX,
            });
        }
        if nvars < 1 {
            return Err(Error::OutOfRange {
                what: "nvars",
                value: i64::from(nvars),
                lo: 1,
                hi: i64::MAX,
            });
        }
        let want_a = (t + c - 1) as usize;
        if a.len() != want_a {
            return Err(Error::LengthMismatch {
                what: "degree vector a",
                expected: want_a,
                got: a.len(),
            });
        }
        if b.len() != t as usize {
            return Err(Error::LengthMismatch {
                what: "degree vector b",
                expected: t as usize,
                got: b.len(),
            });
        }
        for (row, &bi) in b.iter().enumerate() {
            for (col, &aj) in a.iter().enumerate() {
                if aj - bi < 1 {
                    return Err(Error::NonMinimalDegree {
                        row,
                        col,
                        degree: aj - bi,
                    });
                }
            }
        }
        Ok(Self { t, c, a, b, nvars })
    }

    /// The all-linear spec: `a = (1,…,1)`, `b = (0,…,0)`.
    pub fn linear(t: u32, c: u32, nvars: u32) -> Result<Self, Error> {
        Self::new(
            t,
            c,
            vec![1; (t + c - 1) as usize],
            vec![0; t as usize],
            nvars,
        )
    }

    pub fn t(&self) -> u32 {
        self.t
    }
    pub fn c(&self) -> u32 {
        self.c
    }
    pub fn a(&self) -> &[i64] {
        &self.a
    }
    pub fn b(&self) -> &[i64] {
        &self.b
    }
    pub fn nvars(&self) -> u32 {
        self.nvars
    }
    pub fn rank_f(&self) -> usize {
        self.t as usize
    }
    pub fn rank_g(&self) -> usize {
        (self.t + self.c - 1) as usize
    }

    /// `ℓ = Σ a_j − Σ b_i`, always recomputed from the degree vectors.
    pub fn ell(&self) -> i64 {
        self.a.iter().sum::<i64>() - self.b.iter().sum::<i64>()
    }

    /// Twists of the dual generators of `G*` (resp. `F*`).
    pub fn a_dual(&self) -> Vec<i64> {
        self.a.iter().map(|&x| -x).collect()
    }
    pub fn b_dual(&self) -> Vec<i64> {
        self.b.iter().map(|&x| -x).collect()
    }

    /// Expected codimension of `I_i(φ)`: `(t−i+1)(t+c−i)`.
    pub fn codim(&self, i: u32) -> i64 {
        i64::from(self.t - i + 1) * i64::from(self.t + self.c - i)
    }
}

/// Dense Laurent polynomial over the integers (exponent range is tiny here).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<i64>, // coeffs[k] is the coefficient of T^(min_exp + k)
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self {
            min_exp: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn from_terms(terms: BTreeMap<i64, i64>) -> Self {
        let terms: BTreeMap<i64, i64> = terms.into_iter().filter(|&(_, c)| c != 0).collect();
        let Some((&lo, _)) = terms.first_key_value() else {
            return Self::zero();
        };
        let (&hi, _) = terms.last_key_value().expect("nonempty");
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] = c;
        }
        Self {
            min_exp: lo,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        if exp < self.min_exp {
            return 0;
        }
        self.coeffs
            .get((exp - self.min_exp) as usize)
            .copied()
            .unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (self.min_exp + k as i64, c))
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i64, i64> = self.terms().collect();
        for (e, c) in other.terms() {
            *terms.entry(e).or_insert(0) += c;
        }
        Self::from_terms(terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i64, i64> = self.terms().collect();
        for (e, c) in other.terms() {
            *terms.entry(e).or_insert(0) -= c;
        }
        Self::from_terms(terms)
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, -c)).collect())
    }

    /// Substitute `T → 1/T`.
    pub fn inverse_var(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c)).collect())
    }

    /// Multiply by `T^s`.
    pub fn shifted(&self, s: i64) -> Self {
        let mut out = self.clone();
        if !out.is_zero() {
            out.min_exp += s;
        }
        out
    }

    /// Exact quotient by `(1−T)`, or `None` if not divisible
    /// (divisible iff the coefficient sum vanishes).
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // p = (1−T)·q means p_k = q_k − q_{k−1}; accumulate prefix sums.
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut acc = 0i64;
        for &c in &self.coeffs {
            acc += c;
            q.push(acc);
        }
        if acc != 0 {
            return None;
        }
        Some(
            Self {
                min_exp: self.min_exp,
                coeffs: q,
            }
            .normalized(),
        )
    }

    /// Is the polynomial divisible by `(1−T)^k`?
    pub fn divisible_by_one_minus_t_pow(&self, k: u32) -> bool {
        let mut cur = self.clone();
        for _ in 0..k {
            match cur.div_one_minus_t() {
                Some(next) => cur = next,
                None => return false,
            }
        }
        true
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                1 if mag == 1 => write!(f, "T")?,
                1 => write!(f, "{mag}*T")?,
                _ if mag == 1 => write!(f, "T^{e}")?,
                _ => write!(f, "{mag}*T^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gmod(pairs: &[(i64, u64)]) -> GradedFreeModule {
        let mut m = GradedFreeModule::empty();
        for &(d, r) in pairs {
            m.insert(d, "", r);
        }
        m
    }

    #[test]
    fn dual_twist_examples() {
        assert!(gmod(&[(-10, 6)])
            .dual_twist(0)
            .same_twists(&gmod(&[(10, 6)])));
        // the dual-table head R(-1)^6 from the quotient-table tail R(-10)^6
        assert!(gmod(&[(-10, 6)])
            .dual_twist(-11)
            .same_twists(&gmod(&[(-1, 6)])));
        assert!(gmod(&[(0, 1)]).dual_twist(0).same_twists(&gmod(&[(0, 1)])));
    }

    #[test]
    fn tensor_examples() {
        assert!(gmod(&[(-1, 5)])
            .tensor(&gmod(&[(0, 3)]))
            .same_twists(&gmod(&[(-1, 15)])));
        assert!(gmod(&[(0, 1), (-1, 1)])
            .tensor(&gmod(&[(0, 1), (-1, 1)]))
            .same_twists(&gmod(&[(0, 1), (-1, 2), (-2, 1)])));
        // the position-2 summand of the 3x5 linear dual table
        assert!(gmod(&[(-3, 10)])
            .tensor(&gmod(&[(0, 6)]))
            .same_twists(&gmod(&[(-3, 60)])));
    }

    #[test]
    fn tensor_commutative_associative_small() {
        let xs = [
            gmod(&[(0, 1), (-2, 3)]),
            gmod(&[(1, 2), (-1, 1)]),
            gmod(&[(-3, 4)]),
        ];
        for x in &xs {
            for y in &xs {
                assert!(x.tensor(y).same_twists(&y.tensor(x)));
                assert_eq!(x.tensor(y).rank(), x.rank() * y.rank());
                for z in &xs {
                    assert!(x.tensor(y).tensor(z).same_twists(&x.tensor(&y.tensor(z))));
                }
            }
        }
    }

    #[test]
    fn minus_twists_errors_on_deficit() {
        let m = gmod(&[(0, 2)]);
        assert!(m.minus_twists(&gmod(&[(0, 3)])).is_err());
        assert!(m.minus_twists(&gmod(&[(1, 1)])).is_err());
        let d = m.minus_twists(&gmod(&[(0, 1)])).unwrap();
        assert_eq!(d.rank(), 1);
    }

    #[test]
    fn wedge_and_sym_powers() {
        assert!(wedge_power(&[0, 0, 0], 2).same_twists(&gmod(&[(0, 3)])));
        assert!(sym_power(&[0, -1], 2).same_twists(&gmod(&[(0, 1), (-1, 1), (-2, 1)])));
        assert!(wedge_power(&[1, 1, 1, 1, 1], 2).same_twists(&gmod(&[(2, 10)])));
        assert!(wedge_power(&[0, 0], 3).is_empty());
        assert!(sym_power(&[5, 7], 0).same_twists(&gmod(&[(0, 1)])));
    }

    fn hilbert_burch() -> ComplexSpec {
        let mut cx = ComplexSpec::new("R/I", Minimality::ClaimedMinimal);
        cx.add_at(0, gmod(&[(0, 1)]));
        cx.add_at(1, gmod(&[(-2, 3)]));
        cx.add_at(2, gmod(&[(-3, 2)]));
        cx
    }

    #[test]
    fn complex_dual_twist_examples() {
        let dual = hilbert_burch().dual_twist(-3);
        assert!(dual.positions[0].same_twists(&gmod(&[(0, 2)])));
        assert!(dual.positions[1].same_twists(&gmod(&[(-1, 3)])));
        assert!(dual.positions[2].same_twists(&gmod(&[(-3, 1)])));
        // involution with matching shifts
        let back = dual.dual_twist(-3);
        assert!(back.same_tables(&hilbert_burch()));
    }

    #[test]
    fn euler_rank_examples() {
        assert_eq!(hilbert_burch().euler_rank(), 0);
        let mut single = ComplexSpec::new("R", Minimality::ClaimedMinimal);
        single.add_at(0, gmod(&[(0, 1)]));
        assert_eq!(single.euler_rank(), 1);
    }

    #[test]
    fn hilbert_numerator_examples() {
        let n = hilbert_burch().hilbert_numerator();
        // 1 - 3T^2 + 2T^3, divisible by (1-T)^2 with quotient 1 + 2T
        assert_eq!(n.coeff(0), 1);
        assert_eq!(n.coeff(2), -3);
        assert_eq!(n.coeff(3), 2);
        assert!(n.divisible_by_one_minus_t_pow(2));
        let q = n.div_one_minus_t().unwrap().div_one_minus_t().unwrap();
        assert_eq!(q.coeff(0), 1);
        assert_eq!(q.coeff(1), 2);
        assert!(!n.divisible_by_one_minus_t_pow(3));
        assert!(ComplexSpec::new("0", Minimality::ClaimedMinimal)
            .hilbert_numerator()
            .is_zero());
    }

    #[test]
    fn laurent_display_and_reciprocal() {
        let p = LaurentPoly::from_terms([(0, 1), (2, -3), (3, 2)].into_iter().collect());
        assert_eq!(p.to_string(), "1 - 3*T^2 + 2*T^3");
        let r = p.inverse_var().shifted(3);
        assert_eq!(r.to_string(), "2 - 3*T + T^3");
        assert_eq!(p.sub(&p), LaurentPoly::zero());
    }

    #[test]
    fn render_formats() {
        let cx = hilbert_burch();
        let text = cx.render(RenderFormat::Text);
        assert!(text.contains("R/I"));
        assert!(text.contains("claimed-minimal"));
        let json = cx.render(RenderFormat::Json);
        assert!(json.contains("\"resolved_name\": \"R/I\""));
        assert!(json.contains("\"twist\": -2"));
        let csv = cx.render(RenderFormat::Csv);
        assert_eq!(csv.lines().count(), 4); // header + 3 rows
        assert_eq!(csv.lines().nth(1).unwrap(), "0,0,1,");
        // determinism
        assert_eq!(json, cx.render(RenderFormat::Json));
    }

    #[test]
    fn render_empty_complex_json_shell() {
        let cx = ComplexSpec::new("nothing", Minimality::PossiblyNonMinimal);
        let json = cx.render(RenderFormat::Json);
        assert!(json.contains("\"resolved_name\": \"nothing\""));
        assert!(json.contains("\"positions\": []"));
        assert!(cx.render(RenderFormat::Text).contains("(zero complex)"));
    }

    #[test]
    fn render_text_grid_rows() {
        // Hilbert-Burch diagram has rows 0 and 1 with entries 1; 3 2
        let text = hilbert_burch().render(RenderFormat::Text);
        let grid: Vec<&str> = text.lines().skip(1).collect();
        assert!(grid.iter().any(|l| l.trim_start().starts_with("0:")));
        assert!(grid.iter().any(|l| l.trim_start().starts_with("1:")));
    }

    #[test]
    fn morphism_spec_validation() {
        assert!(MorphismSpec::linear(3, 3, 14).is_ok());
        let sp = MorphismSpec::linear(2, 2, 4).unwrap();
        assert_eq!(sp.ell(), 3);
        assert_eq!(sp.codim(2), 2);
        assert_eq!(sp.codim(1), 6);
        // a_j - b_i must be >= 1
        assert!(MorphismSpec::new(2, 2, vec![1, 1, 0], vec![0, 0], 4).is_err());
        assert!(MorphismSpec::new(2, 2, vec![1, 1], vec![0, 0], 4).is_err());
    }

    #[test]
    fn labels_survive_the_right_operations() {
        let mut m = GradedFreeModule::empty();
        m.insert(-4, "H", 15);
        m.insert(-4, "other", 5);
        assert_eq!(m.only_label("H").rank(), 15);
        assert_eq!(m.without_label("H").rank(), 5);
        let t = m.tensor(&GradedFreeModule::generator(0, 1));
        // unlabeled factor is neutral
        assert_eq!(t.only_label("H").rank(), 15);
        let l = m.labeled("all");
        assert_eq!(l.only_label("all").rank(), 20);
    }
}
