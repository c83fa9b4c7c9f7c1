//! Basic neighbourhoods of zero for the shift-continuous topologies on `C⁰`.
//!
//! In every family here the non-zero points are isolated, so a topology is pinned down by
//! its base at zero:
//!
//! * `LcShift(seqs)`: `U_{(a_1,b_1),…} = C⁰ ∖ (D ∪ ↑(a_1,b_1) ∪ …)`
//! * `MinShift`: `U^↑_{(a_1,b_1),…} = C⁰ ∖ (↑(a_1,b_1) ∪ …)`
//! * `MinInverse`: `S^{→|a} ∩ S^{b↑}`
//! * `Discrete`: `{0}`

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::element::{Element, Pair};
use crate::error::{Error, Result};
use crate::sets::{DSet, QuadrantSet, SequencePair, UpSet};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum TopologySpec {
    #[serde(rename = "discrete")]
    Discrete,
    #[serde(rename = "lcshift")]
    LcShift { seqs: SequencePair },
    #[serde(rename = "min_sh")]
    MinShift,
    #[serde(rename = "min_i")]
    MinInverse,
}

impl TopologySpec {
    pub fn lc_shift(seqs: SequencePair) -> Self {
        TopologySpec::LcShift { seqs }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TopologySpec::Discrete => "discrete",
            TopologySpec::LcShift { .. } => "lcshift",
            TopologySpec::MinShift => "min_sh",
            TopologySpec::MinInverse => "min_i",
        }
    }

    /// The removed set `D`, for the locally compact family.
    pub fn d_set(&self) -> Option<DSet> {
        match self {
            TopologySpec::LcShift { seqs } => Some(DSet::new(seqs.clone())),
            _ => None,
        }
    }

    /// Equality of the denoted topologies (sequence encodings compared by their terms).
    pub fn same_as(&self, other: &TopologySpec) -> bool {
        match (self, other) {
            (TopologySpec::LcShift { seqs: s }, TopologySpec::LcShift { seqs: t }) => {
                s.same_terms(t)
            }
            _ => std::mem::discriminant(self) == std::mem::discriminant(other),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidDescriptor(e.to_string()))
    }
}

impl fmt::Display for TopologySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologySpec::LcShift { seqs } => write!(f, "lcshift({seqs})"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BaseSet {
    ZeroOnly,
    /// Canonical apex list: sorted, one apex per diagonal, none inside `D`.
    Apexes(Vec<Pair>),
    Thresholds {
        a: i64,
        b: i64,
    },
}

/// The parameters of a basic neighbourhood, as they appear on the wire:
/// `{"apexes":[[1,1],[0,3]]}`, `{"a":-1,"b":2}` or `{}` for the discrete base.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NbhdPayload {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub apexes: Option<Vec<Pair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<i64>,
}

/// A basic open neighbourhood of zero in one of the topology families.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawNbhd", into = "RawNbhd")]
pub struct Nbhd {
    topology: TopologySpec,
    base: BaseSet,
}

#[derive(Serialize, Deserialize)]
struct RawNbhd {
    topology: TopologySpec,
    #[serde(flatten)]
    payload: NbhdPayload,
}

impl TryFrom<RawNbhd> for Nbhd {
    type Error = Error;

    fn try_from(raw: RawNbhd) -> Result<Self> {
        Nbhd::from_payload(raw.topology, raw.payload)
    }
}

impl From<Nbhd> for RawNbhd {
    fn from(n: Nbhd) -> Self {
        let payload = n.payload();
        RawNbhd {
            topology: n.topology,
            payload,
        }
    }
}

fn canonical_apexes(mut apexes: Vec<Pair>, d: Option<&DSet>) -> Vec<Pair> {
    if let Some(d) = d {
        apexes.retain(|&p| !d.contains_pair(p));
    }
    // keep the top apex of each diagonal; the others lie in its up-set
    apexes.sort_by_key(|p| (p.diff(), std::cmp::Reverse(p.a)));
    apexes.dedup_by_key(|p| p.diff());
    apexes.sort();
    apexes
}

impl Nbhd {
    pub fn discrete() -> Self {
        Self {
            topology: TopologySpec::Discrete,
            base: BaseSet::ZeroOnly,
        }
    }

    pub fn thresholds(a: i64, b: i64) -> Self {
        Self {
            topology: TopologySpec::MinInverse,
            base: BaseSet::Thresholds { a, b },
        }
    }

    /// A neighbourhood `C⁰ ∖ (D? ∪ ⋃ ↑apex)` for the `LcShift` or `MinShift` family.
    pub fn apexes(topology: TopologySpec, apexes: Vec<Pair>) -> Result<Self> {
        match &topology {
            TopologySpec::MinShift if apexes.is_empty() => Err(Error::InvalidDescriptor(
                "a min_sh neighbourhood needs at least one apex".into(),
            )),
            TopologySpec::MinShift | TopologySpec::LcShift { .. } => {
                let apexes = canonical_apexes(apexes, topology.d_set().as_ref());
                Ok(Self {
                    topology,
                    base: BaseSet::Apexes(apexes),
                })
            }
            other => Err(Error::UnsupportedTopology {
                expected: "lcshift or min_sh",
                found: other.name(),
            }),
        }
    }

    pub fn from_payload(topology: TopologySpec, payload: NbhdPayload) -> Result<Self> {
        match (&topology, payload) {
            (
                TopologySpec::Discrete,
                NbhdPayload {
                    apexes: None,
                    a: None,
                    b: None,
                },
            ) => Ok(Self::discrete()),
            (
                TopologySpec::MinInverse,
                NbhdPayload {
                    apexes: None,
                    a: Some(a),
                    b: Some(b),
                },
            ) => Ok(Self::thresholds(a, b)),
            (
                TopologySpec::MinShift | TopologySpec::LcShift { .. },
                NbhdPayload {
                    apexes: Some(apexes),
                    a: None,
                    b: None,
                },
            ) => Self::apexes(topology, apexes),
            (t, _) => Err(Error::InvalidDescriptor(format!(
                "payload does not match topology {}: expected {}",
                t.name(),
                match t {
                    TopologySpec::Discrete => "{}",
                    TopologySpec::MinInverse => "{\"a\":..,\"b\":..}",
                    _ => "{\"apexes\":[..]}",
                }
            ))),
        }
    }

    pub fn topology(&self) -> &TopologySpec {
        &self.topology
    }

    pub fn base(&self) -> &BaseSet {
        &self.base
    }

    pub fn payload(&self) -> NbhdPayload {
        match &self.base {
            BaseSet::ZeroOnly => NbhdPayload::default(),
            BaseSet::Apexes(v) => NbhdPayload {
                apexes: Some(v.clone()),
                ..Default::default()
            },
            BaseSet::Thresholds { a, b } => NbhdPayload {
                apexes: None,
                a: Some(*a),
                b: Some(*b),
            },
        }
    }

    /// The listed apexes, empty for the threshold and discrete bases.
    pub fn apex_list(&self) -> &[Pair] {
        match &self.base {
            BaseSet::Apexes(v) => v,
            _ => &[],
        }
    }

    pub fn d_set(&self) -> Option<DSet> {
        self.topology.d_set()
    }

    pub fn contains(&self, x: Element) -> bool {
        let Element::Pair(p) = x else {
            return true;
        };
        match &self.base {
            BaseSet::ZeroOnly => false,
            BaseSet::Thresholds { a, b } => p.a >= *a && p.b >= *b,
            BaseSet::Apexes(apexes) => {
                !apexes.iter().any(|&q| UpSet::new(q).contains_pair(p))
                    && !self.d_set().is_some_and(|d| d.contains_pair(p))
            }
        }
    }

    /// A neighbourhood with the extra apexes removed as well.
    pub fn with_more_apexes(&self, extra: &[Pair]) -> Result<Nbhd> {
        let mut all = self.apex_list().to_vec();
        all.extend_from_slice(extra);
        Nbhd::apexes(self.topology.clone(), all)
    }
}

impl fmt::Display for Nbhd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            BaseSet::ZeroOnly => write!(f, "{{0}}"),
            BaseSet::Thresholds { a, b } => write!(f, "S^(->|{a}) ∩ S^({b}↑)"),
            BaseSet::Apexes(v) => {
                let list: Vec<String> = v.iter().map(Pair::to_string).collect();
                let head = if matches!(self.topology, TopologySpec::LcShift { .. }) {
                    "U"
                } else {
                    "U^↑"
                };
                write!(f, "{head}_{{{}}}", list.join(","))
            }
        }
    }
}

/// Decides `inner ⊆ outer` where it can be decided exactly; `None` otherwise.
///
/// The only undecided case is two locally compact bases over different sequence pairs.
pub fn subset_of(inner: &Nbhd, outer: &Nbhd) -> Option<bool> {
    use BaseSet::*;
    match (&inner.base, &outer.base) {
        (ZeroOnly, _) => Some(true),
        (_, ZeroOnly) => Some(false),
        (Thresholds { a, b }, Thresholds { a: a2, b: b2 }) => Some(a >= a2 && b >= b2),
        (Thresholds { a, b }, Apexes(removed)) => {
            let q = QuadrantSet::Corner(*a, *b);
            let hits_listed = removed.iter().any(|&p| q.meets(UpSet::new(p)));
            let hits_d = outer
                .d_set()
                .is_some_and(|d| !d.components_meeting(q).is_empty());
            Some(!hits_listed && !hits_d)
        }
        // a co-finite-diagonal set never fits in a quadrant
        (Apexes(_), Thresholds { .. }) => Some(false),
        (Apexes(inner_removed), Apexes(outer_removed)) => {
            let inner_d = inner.d_set();
            match (&inner_d, outer.d_set()) {
                (None, Some(_)) => return Some(false),
                (Some(d), Some(e)) if !d.seqs().same_terms(e.seqs()) => return None,
                _ => {}
            }
            let covered = |u: UpSet| match &inner_d {
                None => inner_removed.iter().any(|&q| u.is_within(UpSet::new(q))),
                Some(d) => d.upset_minus(u).into_iter().all(|p| {
                    inner_removed
                        .iter()
                        .any(|&q| UpSet::new(q).contains_pair(p))
                }),
            };
            Some(outer_removed.iter().all(|&p| covered(UpSet::new(p))))
        }
    }
}

/// `U ∖ V` for nested locally compact bases `V ⊆ U`; always finite.
pub fn nbhd_difference(u: &Nbhd, v: &Nbhd) -> Result<Vec<Pair>> {
    let (Some(d), Some(d2)) = (u.d_set(), v.d_set()) else {
        return Err(Error::UnsupportedTopology {
            expected: "lcshift",
            found: if u.d_set().is_none() {
                u.topology.name()
            } else {
                v.topology.name()
            },
        });
    };
    if !d.seqs().same_terms(d2.seqs()) {
        return Err(Error::TopologyMismatch);
    }
    // V ⊆ U iff every point U removes is removed by V too
    for &apex in u.apex_list() {
        if let Some(p) = d
            .upset_minus(UpSet::new(apex))
            .into_iter()
            .find(|&p| v.contains(p.into()))
        {
            return Err(Error::NotNested(p));
        }
    }
    let mut out: Vec<Pair> = v
        .apex_list()
        .iter()
        .flat_map(|&apex| d.upset_minus(UpSet::new(apex)))
        .filter(|&p| u.contains(p.into()))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// The members of `U` outside the corner `C[n]`, when there are finitely many.
///
/// When the tail is infinite the error carries an arithmetic progression of members with a
/// coordinate below `n`.
pub fn corner_tail(u: &Nbhd, n: i64) -> Result<Vec<Pair>> {
    let infinite = |start: Pair, step: (i64, i64)| Err(Error::InfiniteTail { n, start, step });
    match &u.base {
        BaseSet::ZeroOnly => Ok(Vec::new()),
        BaseSet::Thresholds { a, b } => {
            if *a < n {
                infinite(Pair::new(*a, *b), (0, 1))
            } else if *b < n {
                infinite(Pair::new(*a, *b), (1, 0))
            } else {
                Ok(Vec::new())
            }
        }
        BaseSet::Apexes(apexes) => {
            // Diagonals above every listed apex keep (x, x - r) for all x past the cutoff of
            // D there, and D ⊆ {x <= 0}; so (1, 1 - r) is a member once r clears the apexes
            // and 1 - r < n.
            let top = apexes.iter().map(|p| p.diff()).max().unwrap_or(0);
            let r0 = top.max(1 - n).max(0) + 1;
            infinite(Pair::new(1, 1 - r0), (0, -1))
        }
    }
}

/// A basic neighbourhood of zero that misses `p`.
pub fn separating_nbhd(topology: &TopologySpec, p: Pair) -> Nbhd {
    match topology {
        TopologySpec::Discrete => Nbhd::discrete(),
        TopologySpec::MinInverse => Nbhd::thresholds(p.a + 1, p.b),
        _ => Nbhd::apexes(topology.clone(), vec![p]).expect("apex topologies accept one apex"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComparisonVerdict {
    /// A fine basic neighbourhood proven to lie inside the probe.
    ContainsWitness(Nbhd),
    /// A point outside the probe that every fine basic neighbourhood with parameters in the
    /// window contains.
    SeparatedBy(Pair),
    InconclusiveAtWindow(i64),
}

/// Whether `p` lies in every basic neighbourhood of `fine` whose parameters are bounded by
/// `window` in absolute value.
pub fn in_every_candidate(fine: &TopologySpec, p: Pair, window: i64) -> bool {
    let w = window;
    match fine {
        TopologySpec::Discrete => false,
        TopologySpec::MinInverse => p.a >= w && p.b >= w,
        TopologySpec::MinShift | TopologySpec::LcShift { .. } => {
            // apexes (u, u - r) on p's diagonal with |u|, |u - r| <= w
            let r = p.diff();
            let hi = w.min(w + r);
            let lo = (-w).max(-w + r);
            let removable = lo <= hi && p.a <= hi;
            !removable && !fine.d_set().is_some_and(|d| d.contains_pair(p))
        }
    }
}

fn exact_witness(coarse: &TopologySpec, fine: &TopologySpec, probe: &Nbhd) -> Option<Nbhd> {
    let apexes = probe.apex_list();
    let candidate = match (coarse, fine) {
        (_, TopologySpec::Discrete) => Nbhd::discrete(),
        (c, f) if c.same_as(f) => probe.clone(),
        (TopologySpec::MinShift, TopologySpec::LcShift { .. }) => {
            Nbhd::apexes(fine.clone(), apexes.to_vec()).ok()?
        }
        (TopologySpec::MinShift, TopologySpec::MinInverse) => {
            let a = apexes.iter().map(|p| p.a).max()? + 1;
            let b = apexes.iter().map(|p| p.b).max()? + 1;
            Nbhd::thresholds(a, b)
        }
        (TopologySpec::LcShift { .. }, TopologySpec::MinInverse) => {
            // D lies in x <= 0
            let a = apexes.iter().map(|p| p.a).max().unwrap_or(0).max(0) + 1;
            let b = apexes.iter().map(|p| p.b).max().unwrap_or(0).max(0) + 1;
            Nbhd::thresholds(a, b)
        }
        _ => return None,
    };
    (subset_of(&candidate, probe) == Some(true)).then_some(candidate)
}

fn probe_extent(probe: &Nbhd) -> i64 {
    match probe.base() {
        BaseSet::ZeroOnly => 0,
        BaseSet::Thresholds { a, b } => a.abs().max(b.abs()),
        BaseSet::Apexes(v) => v
            .iter()
            .map(|p| p.a.abs().max(p.b.abs()))
            .max()
            .unwrap_or(0),
    }
}

/// Tries to fit a basic neighbourhood of `fine` inside the `coarse` basic neighbourhood `probe`.
pub fn compare_at_zero(
    coarse: &TopologySpec,
    fine: &TopologySpec,
    probe: &Nbhd,
    window: i64,
) -> Result<ComparisonVerdict> {
    if !probe.topology().same_as(coarse) {
        return Err(Error::Precondition(format!(
            "probe belongs to {}, not to the coarse topology {}",
            probe.topology(),
            coarse
        )));
    }
    if window < 1 {
        return Err(Error::WindowTooSmall {
            window,
            reason: "window must be positive".into(),
        });
    }
    if let Some(w) = exact_witness(coarse, fine, probe) {
        return Ok(ComparisonVerdict::ContainsWitness(w));
    }
    let radius = 4 * window + 4 + 2 * probe_extent(probe);
    for a in -radius..=radius {
        for b in -radius..=radius {
            let p = Pair::new(a, b);
            if !probe.contains(p.into()) && in_every_candidate(fine, p, window) {
                return Ok(ComparisonVerdict::SeparatedBy(p));
            }
        }
    }
    Ok(ComparisonVerdict::InconclusiveAtWindow(window))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distinctness {
    /// A point in exactly one of the two `D` sets.
    Separated(Pair),
    NotFound {
        window: i64,
    },
}

/// Searches the window for a point whose `D`-membership differs between the two sequence
/// pairs; the canonical basic neighbourhoods then differ at that point.
pub fn distinctness_certificate(
    s1: &SequencePair,
    s2: &SequencePair,
    window: i64,
) -> Result<Distinctness> {
    if s1.same_terms(s2) {
        return Err(Error::IdenticalSequences);
    }
    let (d1, d2) = (DSet::new(s1.clone()), DSet::new(s2.clone()));
    for a in -window..=window {
        for b in -window..=window {
            let p = Pair::new(a, b);
            if d1.contains_pair(p) != d2.contains_pair(p) {
                return Ok(Distinctness::Separated(p));
            }
        }
    }
    Ok(Distinctness::NotFound { window })
}
