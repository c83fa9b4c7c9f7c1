//! Finite descriptors for the infinite subsets of `C⁰` that the topologies are built from.
//!
//! Everything here lives on diagonals `x - y = r`. An up-set `↑(a,b)` is the ray of its
//! diagonal running down-left from the apex. The removed set `D` is a union of such rays,
//! exactly one per diagonal, parameterised by a pair of increasing sequences.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::element::{Element, Pair};
use crate::error::{Error, Result};

/// `↑(a,b) = {(x,y) : x - y = a - b, x <= a}`. Never contains zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UpSet {
    pub apex: Pair,
}

impl UpSet {
    pub const fn new(apex: Pair) -> Self {
        Self { apex }
    }

    pub const fn diff(self) -> i64 {
        self.apex.diff()
    }

    pub fn contains_pair(self, p: Pair) -> bool {
        p.diff() == self.diff() && p.a <= self.apex.a
    }

    pub fn contains(self, x: Element) -> bool {
        x.as_pair().is_some_and(|p| self.contains_pair(p))
    }

    /// `↑self ⊆ ↑other`.
    pub fn is_within(self, other: UpSet) -> bool {
        other.contains_pair(self.apex)
    }

    /// The exact intersection with a quadrant set, as a segment of the apex diagonal.
    pub fn trace(self, q: QuadrantSet) -> DiagonalSegment {
        let r = self.diff();
        let x_lo = match q {
            QuadrantSet::RightHalf(a) => a,
            QuadrantSet::UpperHalf(b) => b + r,
            QuadrantSet::Corner(a, b) => a.max(b + r),
        };
        DiagonalSegment::new(r, x_lo, self.apex.a)
    }
}

impl fmt::Display for UpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "↑{}", self.apex)
    }
}

/// `{(x, x - diff) : x_lo <= x <= x_hi}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagonalSegment {
    pub diff: i64,
    pub x_lo: i64,
    pub x_hi: i64,
}

impl DiagonalSegment {
    pub const fn new(diff: i64, x_lo: i64, x_hi: i64) -> Self {
        Self { diff, x_lo, x_hi }
    }

    pub const fn is_empty(&self) -> bool {
        self.x_lo > self.x_hi
    }

    pub fn len(&self) -> u64 {
        if self.is_empty() {
            0
        } else {
            (self.x_hi - self.x_lo) as u64 + 1
        }
    }

    pub fn contains(&self, x: Element) -> bool {
        x.as_pair()
            .is_some_and(|p| p.diff() == self.diff && self.x_lo <= p.a && p.a <= self.x_hi)
    }

    /// Points in increasing `x` order.
    pub fn points(&self) -> impl Iterator<Item = Pair> + '_ {
        (self.x_lo..=self.x_hi).map(move |x| Pair::new(x, x - self.diff))
    }
}

/// The half-planes `S^{→|a}`, `S^{b↑}` and their intersection. Each contains zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadrantSet {
    /// `{(x,y) : x >= a} ∪ {0}`
    RightHalf(i64),
    /// `{(x,y) : y >= b} ∪ {0}`
    UpperHalf(i64),
    Corner(i64, i64),
}

impl QuadrantSet {
    pub fn contains(self, x: Element) -> bool {
        match x {
            Element::Zero => true,
            Element::Pair(p) => match self {
                QuadrantSet::RightHalf(a) => p.a >= a,
                QuadrantSet::UpperHalf(b) => p.b >= b,
                QuadrantSet::Corner(a, b) => p.a >= a && p.b >= b,
            },
        }
    }

    /// Whether the quadrant meets `↑u`.
    pub fn meets(self, u: UpSet) -> bool {
        match self {
            QuadrantSet::RightHalf(a) => u.apex.a >= a,
            QuadrantSet::UpperHalf(b) => u.apex.b >= b,
            QuadrantSet::Corner(a, b) => u.apex.a >= a && u.apex.b >= b,
        }
    }
}

/// A strictly increasing sequence `s_1, s_2, ...` given by a finite prefix and then a
/// constant step: `s_{n+1} = s_n + step` once `n` passes the prefix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sequence {
    pub prefix: Vec<i64>,
    pub step: i64,
}

impl Sequence {
    pub fn new(prefix: Vec<i64>, step: i64) -> Self {
        Self { prefix, step }
    }

    fn last(&self) -> (u64, i64) {
        let len = self.prefix.len() as u64;
        (
            len,
            *self
                .prefix
                .last()
                .expect("validated sequences are non-empty"),
        )
    }

    /// `s_n`, one-based.
    pub fn term(&self, n: u64) -> i64 {
        assert!(n >= 1, "sequences are indexed from 1");
        let (len, last) = self.last();
        if n <= len {
            self.prefix[(n - 1) as usize]
        } else {
            last + (n - len) as i64 * self.step
        }
    }

    /// The index `j` with `s_j <= v < s_{j+1}`, or `None` when `v < s_1`.
    pub fn bracket(&self, v: i64) -> Option<u64> {
        if v < self.prefix[0] {
            return None;
        }
        let (len, last) = self.last();
        if v >= last {
            return Some(len + ((v - last) / self.step) as u64);
        }
        // prefix[k] <= v < prefix[k + 1]
        let k = self.prefix.partition_point(|&s| s <= v);
        Some(k as u64)
    }

    /// The shortest encoding of the same sequence.
    pub fn canonical(&self) -> Sequence {
        let mut prefix = self.prefix.clone();
        while prefix.len() >= 2 && prefix[prefix.len() - 1] - prefix[prefix.len() - 2] == self.step
        {
            prefix.pop();
        }
        Sequence::new(prefix, self.step)
    }

    /// Whether both encodings denote the same sequence.
    pub fn same_terms(&self, other: &Sequence) -> bool {
        self.canonical() == other.canonical()
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.prefix.iter().map(i64::to_string).collect();
        write!(f, "[{}]+{}", terms.join(","), self.step)
    }
}

/// Parses the display form `[3,7,10]+4`. Only the syntax is checked here; the ordering
/// constraints belong to [`SequencePair::new`].
impl std::str::FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSequence(format!("expected `[s1,s2,...]+step`, got {s:?}"));
        let s = s.trim();
        let (list, step) = s
            .strip_prefix('[')
            .and_then(|r| r.split_once("]+"))
            .ok_or_else(bad)?;
        let prefix = list
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        let step = step.trim().parse::<i64>().map_err(|_| bad())?;
        Ok(Sequence::new(prefix, step))
    }
}

/// The two sequences `{x_n}`, `{y_n}` that parameterise `D`.
///
/// Construction validates `x_1 > 1`, `y_1 > 1`, `x_n + 1 < x_{n+1}` and
/// `2 < y_n + 1 < y_{n+1}` for every `n`, tail included.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSequencePair", into = "RawSequencePair")]
pub struct SequencePair {
    x: Sequence,
    y: Sequence,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSequencePair {
    x: Sequence,
    y: Sequence,
}

impl TryFrom<RawSequencePair> for SequencePair {
    type Error = Error;

    fn try_from(raw: RawSequencePair) -> Result<Self> {
        SequencePair::new(raw.x, raw.y)
    }
}

impl From<SequencePair> for RawSequencePair {
    fn from(s: SequencePair) -> Self {
        RawSequencePair { x: s.x, y: s.y }
    }
}

fn validate(seq: &Sequence, name: char, constraint: &str) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidSequence(msg));
    if seq.prefix.is_empty() {
        return bad(format!("{name} prefix must be non-empty"));
    }
    if seq.prefix[0] <= 1 {
        return bad(format!("{name}_1>1 violated"));
    }
    for (i, w) in seq.prefix.windows(2).enumerate() {
        if w[0] + 1 >= w[1] {
            return bad(format!("{constraint} violated at n={}", i + 1));
        }
    }
    if seq.step < 2 {
        return bad(format!(
            "{constraint} violated at n={} (tail step {} < 2)",
            seq.prefix.len(),
            seq.step
        ));
    }
    Ok(())
}

impl SequencePair {
    pub fn new(x: Sequence, y: Sequence) -> Result<Self> {
        validate(&x, 'x', "x_n+1<x_{n+1}")?;
        validate(&y, 'y', "2<y_n+1<y_{n+1}")?;
        Ok(Self { x, y })
    }

    /// Both sequences from one prefix and step.
    pub fn symmetric(prefix: Vec<i64>, step: i64) -> Result<Self> {
        let s = Sequence::new(prefix, step);
        Self::new(s.clone(), s)
    }

    pub fn x(&self) -> &Sequence {
        &self.x
    }

    pub fn y(&self) -> &Sequence {
        &self.y
    }

    /// `x_n = y_n` for every `n`.
    pub fn is_symmetric(&self) -> bool {
        self.x.same_terms(&self.y)
    }

    pub fn same_terms(&self, other: &SequencePair) -> bool {
        self.x.same_terms(&other.x) && self.y.same_terms(&other.y)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidSequence(e.to_string()))
    }
}

impl fmt::Display for SequencePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={} y={}", self.x, self.y)
    }
}

/// The set `D = A_0 ∪ ⋃_n (A_n^d ∪ A_n^l)` with
///
/// ```text
/// A_0   = ↑(0,0) ∪ ⋃_{i=1}^{x_1-1} ↑(0,-i) ∪ ⋃_{j=1}^{y_1-1} ↑(-j,0)
/// A_n^d = ⋃_{i=x_n}^{x_{n+1}-1} ↑(-n, -n-i)
/// A_n^l = ⋃_{j=y_n}^{y_{n+1}-1} ↑(-n-j, -n)
/// ```
///
/// Every diagonal carries exactly one component, so on diagonal `r` the set `D` is the
/// ray `{x <= cutoff(r)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DSet {
    seqs: SequencePair,
}

impl DSet {
    pub fn new(seqs: SequencePair) -> Self {
        Self { seqs }
    }

    pub fn seqs(&self) -> &SequencePair {
        &self.seqs
    }

    /// The component of `D` lying on diagonal `r`.
    pub fn component_on(&self, r: i64) -> UpSet {
        let apex = match r.cmp(&0) {
            std::cmp::Ordering::Equal => Pair::new(0, 0),
            std::cmp::Ordering::Greater => match self.seqs.x.bracket(r) {
                None => Pair::new(0, -r),
                Some(n) => {
                    let n = n as i64;
                    Pair::new(-n, -n - r)
                }
            },
            std::cmp::Ordering::Less => {
                let s = -r;
                match self.seqs.y.bracket(s) {
                    None => Pair::new(-s, 0),
                    Some(n) => {
                        let n = n as i64;
                        Pair::new(-n - s, -n)
                    }
                }
            }
        };
        UpSet::new(apex)
    }

    /// Largest `x` with `(x, x - r)` in `D`.
    pub fn cutoff(&self, r: i64) -> i64 {
        self.component_on(r).apex.a
    }

    pub fn contains_pair(&self, p: Pair) -> bool {
        self.component_on(p.diff()).contains_pair(p)
    }

    pub fn contains(&self, x: Element) -> bool {
        x.as_pair().is_some_and(|p| self.contains_pair(p))
    }

    /// All components with sequence index at most `n_max` (`A_0` has index 0).
    pub fn components_through(&self, n_max: i64) -> Vec<UpSet> {
        let (x, y) = (&self.seqs.x, &self.seqs.y);
        let mut out = vec![UpSet::new(Pair::new(0, 0))];
        out.extend((1..x.term(1)).map(|i| UpSet::new(Pair::new(0, -i))));
        out.extend((1..y.term(1)).map(|j| UpSet::new(Pair::new(-j, 0))));
        for n in 1..=n_max {
            let k = n as u64;
            out.extend((x.term(k)..x.term(k + 1)).map(|i| UpSet::new(Pair::new(-n, -n - i))));
            out.extend((y.term(k)..y.term(k + 1)).map(|j| UpSet::new(Pair::new(-n - j, -n))));
        }
        out
    }

    /// The components of `D` that meet `q`, sorted by apex.
    ///
    /// Components of index `n` have both apex coordinates `<= -n`, so only indices up to
    /// the quadrant's bound can contribute.
    pub fn components_meeting(&self, q: QuadrantSet) -> Vec<UpSet> {
        let bound = match q {
            QuadrantSet::RightHalf(a) => a,
            QuadrantSet::UpperHalf(b) => b,
            QuadrantSet::Corner(a, b) => a.max(b),
        };
        let mut out: Vec<UpSet> = self
            .components_through((-bound).max(0))
            .into_iter()
            .filter(|&u| q.meets(u))
            .collect();
        out.sort();
        out
    }

    /// `↑u ∖ D`, in increasing `x` order.
    ///
    /// Splits by the sign of `a - b` and locates the gap of the relevant sequence that
    /// contains `|a - b|`.
    pub fn upset_minus(&self, u: UpSet) -> Vec<Pair> {
        let Pair { a, b } = u.apex;
        if self.contains_pair(u.apex) {
            return Vec::new();
        }
        if a == b {
            return (1..=a).map(|k| Pair::new(k, k)).collect();
        }
        if a < b {
            let s = b - a;
            let lo = match self.seqs.y.bracket(s) {
                Some(i) => -(i as i64) + 1,
                None => 1,
            };
            (lo..=b).map(|k| Pair::new(k - s, k)).collect()
        } else {
            let r = a - b;
            let lo = match self.seqs.x.bracket(r) {
                Some(j) => -(j as i64) + 1,
                None => 1,
            };
            (lo..=a).map(|k| Pair::new(k, k - r)).collect()
        }
    }
}
