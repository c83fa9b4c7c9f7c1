//! Translation equations and constructive continuity certificates at zero.
//!
//! A left shift by `(a,b)` maps `C⁰` onto `S^{→|a}`, a right shift onto `S^{b↑}`. A basic
//! neighbourhood `U` meets that half-plane in the complement of finitely many up-sets
//! `↑(e_i,f_i)`, and the preimage of each `↑(e_i,f_i)` is again an up-set whose apex is the
//! minimal solution of `(a,b)·w = (e_i,f_i)` (resp. `w·(a,b) = (e_i,f_i)`). Removing those
//! apexes gives a `V` with `(a,b)·V ⊆ U`.

use serde::{Deserialize, Serialize};

use crate::element::{Element, Pair};
use crate::error::{Error, Result};
use crate::sets::{QuadrantSet, UpSet};
use crate::topology::{BaseSet, Nbhd, TopologySpec};

/// The solutions of a translation equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolutionSet {
    Empty,
    Singleton(Pair),
    /// Every element above the apex; the apex is the minimal solution.
    UpSetAll(UpSet),
}

impl SolutionSet {
    pub fn contains(&self, w: Element) -> bool {
        match (self, w) {
            (SolutionSet::Singleton(p), Element::Pair(q)) => *p == q,
            (SolutionSet::UpSetAll(u), w) => u.contains(w),
            _ => false,
        }
    }

    /// The `≼`-minimal solution.
    pub fn minimal(&self) -> Option<Pair> {
        match self {
            SolutionSet::Empty => None,
            SolutionSet::Singleton(p) => Some(*p),
            SolutionSet::UpSetAll(u) => Some(u.apex),
        }
    }

    pub fn inverse(self) -> SolutionSet {
        match self {
            SolutionSet::Empty => SolutionSet::Empty,
            SolutionSet::Singleton(p) => SolutionSet::Singleton(p.inverse()),
            SolutionSet::UpSetAll(u) => SolutionSet::UpSetAll(UpSet::new(u.apex.inverse())),
        }
    }
}

/// All `w` with `w·right_factor = target`.
pub fn solve_right(right_factor: Pair, target: Pair) -> SolutionSet {
    let Pair { a: c, b: d } = right_factor;
    let Pair { a: e, b: f } = target;
    match f.cmp(&d) {
        std::cmp::Ordering::Equal => SolutionSet::UpSetAll(UpSet::new(Pair::new(e, c))),
        std::cmp::Ordering::Greater => SolutionSet::Singleton(Pair::new(e, c + f - d)),
        std::cmp::Ordering::Less => SolutionSet::Empty,
    }
}

/// All `w` with `left_factor·w = target`, obtained from [`solve_right`] through inversion:
/// `x·w = t` iff `w⁻¹·x⁻¹ = t⁻¹`.
pub fn solve_left(left_factor: Pair, target: Pair) -> SolutionSet {
    solve_right(left_factor.inverse(), target.inverse()).inverse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(format!("side must be `left` or `right`, got {other:?}")),
        }
    }
}

/// `element·v` on the left, `v·element` on the right.
pub fn translate(element: Pair, v: Element, side: Side) -> Element {
    match side {
        Side::Left => Element::Pair(element) * v,
        Side::Right => v * Element::Pair(element),
    }
}

/// Evidence that the shift by `element` is continuous at zero: `translate(element, V) ⊆ U`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftWitness {
    pub element: Pair,
    pub side: Side,
    #[serde(rename = "U")]
    pub u: Nbhd,
    #[serde(rename = "V")]
    pub v: Nbhd,
    /// Apexes of the up-sets cut out of `U` inside the image half-plane.
    pub trace: Vec<Pair>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verified_window: Option<i64>,
}

impl ShiftWitness {
    /// Checks the inclusion at every member of `V` in the window. On failure returns the
    /// offending member of `V`.
    pub fn check(&self, window: i64) -> std::result::Result<(), Pair> {
        for a in -window..=window {
            for b in -window..=window {
                let v = Pair::new(a, b);
                if self.v.contains(v.into())
                    && !self
                        .u
                        .contains(translate(self.element, v.into(), self.side))
                {
                    return Err(v);
                }
            }
        }
        Ok(())
    }

    /// [`check`](Self::check), recording the window on success.
    pub fn verified(mut self, window: i64) -> std::result::Result<Self, Pair> {
        self.check(window)?;
        self.verified_window = Some(window);
        Ok(self)
    }
}

/// Builds `V` with `translate(element, V, side) ⊆ U`.
pub fn shift_witness(element: Pair, side: Side, u: &Nbhd) -> Result<ShiftWitness> {
    let topology = u.topology();
    if !matches!(
        topology,
        TopologySpec::LcShift { .. } | TopologySpec::MinShift
    ) {
        return Err(Error::UnsupportedTopology {
            expected: "lcshift or min_sh",
            found: topology.name(),
        });
    }
    let image = match side {
        Side::Left => QuadrantSet::RightHalf(element.a),
        Side::Right => QuadrantSet::UpperHalf(element.b),
    };
    let mut trace: Vec<Pair> = u
        .apex_list()
        .iter()
        .copied()
        .filter(|&p| image.meets(UpSet::new(p)))
        .collect();
    if let Some(d) = u.d_set() {
        trace.extend(d.components_meeting(image).into_iter().map(|c| c.apex));
    }
    trace.sort();
    trace.dedup();

    let mut apexes: Vec<Pair> = trace
        .iter()
        .filter_map(|&t| {
            match side {
                Side::Left => solve_left(element, t),
                Side::Right => solve_right(element, t),
            }
            .minimal()
        })
        .collect();
    if apexes.is_empty() {
        apexes.push(match side {
            Side::Left => element.right_unit(),
            Side::Right => element.left_unit(),
        });
    }
    let v = Nbhd::apexes(topology.clone(), apexes)?;
    Ok(ShiftWitness {
        element,
        side,
        u: u.clone(),
        v,
        trace,
        verified_window: None,
    })
}

/// Largest `x` removed from `U` on diagonal `r`; `None` if nothing on it is removed.
fn removed_cutoff(u: &Nbhd, r: i64) -> Option<i64> {
    let listed = u.apex_list().iter().find(|p| p.diff() == r).map(|p| p.a);
    let d = u.d_set().map(|d| d.cutoff(r));
    listed.max(d)
}

/// The swapped descriptor `U'` with `U⁻¹ = U'`.
///
/// For the locally compact family this needs `D⁻¹ = D` on every diagonal the listed
/// apexes leave uncovered, which holds whenever `x_n = y_n`. Otherwise the error carries a
/// point `p` for which exactly one of `p ∈ U`, `p⁻¹ ∈ U'` holds.
pub fn inversion_image(u: &Nbhd) -> Result<Nbhd> {
    let swapped = match u.base() {
        BaseSet::ZeroOnly => return Ok(u.clone()),
        BaseSet::Thresholds { a, b } => return Ok(Nbhd::thresholds(*b, *a)),
        BaseSet::Apexes(v) => Nbhd::apexes(
            u.topology().clone(),
            v.iter().map(|p| p.inverse()).collect(),
        )?,
    };
    let TopologySpec::LcShift { seqs } = u.topology() else {
        return Ok(swapped);
    };
    if seqs.is_symmetric() {
        return Ok(swapped);
    }
    // Past both prefixes the sequences are affine; if they agree there, every mismatch
    // sits below `settle`, otherwise mismatches recur with period at most the product of
    // the steps.
    let (x, y) = (seqs.x(), seqs.y());
    let idx = x.prefix.len().max(y.prefix.len()) as u64 + 1;
    let settle = x.term(idx).max(y.term(idx));
    let extent = u
        .apex_list()
        .iter()
        .map(|p| p.a.abs().max(p.b.abs()))
        .max()
        .unwrap_or(0);
    let limit = settle.max(2 * extent + 1) + 4 * x.step * y.step + 4;

    let mut fallback = None;
    for r in (0..=limit).flat_map(|r| [r, -r]) {
        // U⁻¹ on diagonal r keeps x > cut(-r) + r, U' keeps x > its own cutoff
        let inverse_cut = removed_cutoff(u, -r).map(|c| c + r);
        let swapped_cut = removed_cutoff(&swapped, r);
        match inverse_cut.cmp(&swapped_cut) {
            std::cmp::Ordering::Equal => {}
            std::cmp::Ordering::Less => {
                // q ∈ U⁻¹ ∖ U', so p = q⁻¹ ∈ U while p⁻¹ ∉ U'
                let x = inverse_cut.map_or(swapped_cut.unwrap_or(0), |c| c + 1);
                let q = Pair::new(x, x - r);
                return Err(Error::NotInversionSymmetric { point: q.inverse() });
            }
            std::cmp::Ordering::Greater => {
                if fallback.is_none() {
                    let x = swapped_cut.map_or(inverse_cut.unwrap_or(0), |c| c + 1);
                    fallback = Some(Pair::new(x, x - r).inverse());
                }
            }
        }
    }
    match fallback {
        Some(point) => Err(Error::NotInversionSymmetric { point }),
        None => Ok(swapped),
    }
}

/// Which up-sets the complement identity for `S^{→|a} ∩ S^{b↑}` is evaluated with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplementForm {
    /// `↑(a-1,a-1)` and `↑(b-1,b-1)`.
    Exact,
    /// `↑(a,a)` and `↑(b,b)`; off by one on the boundary diagonals.
    Perturbed,
}

/// First window point where `C⁰ ∖ (S^{→|a} ∩ S^{b↑})` differs from
/// `{p : p·p⁻¹ ∈ ↑(a',a')} ∪ {p : p⁻¹·p ∈ ↑(b',b')}`.
pub fn complement_counterexample(
    a: i64,
    b: i64,
    window: i64,
    form: ComplementForm,
) -> Option<Element> {
    let shift = match form {
        ComplementForm::Exact => 1,
        ComplementForm::Perturbed => 0,
    };
    let left = UpSet::new(Pair::new(a - shift, a - shift));
    let right = UpSet::new(Pair::new(b - shift, b - shift));
    let quadrant = QuadrantSet::Corner(a, b);
    std::iter::once(Element::Zero)
        .chain(
            (-window..=window).flat_map(|x| (-window..=window).map(move |y| Element::pair(x, y))),
        )
        .find(|&p| {
            let in_complement = !quadrant.contains(p);
            let in_rhs = match p {
                Element::Zero => false,
                Element::Pair(_) => {
                    left.contains(p * p.inverse()) || right.contains(p.inverse() * p)
                }
            };
            in_complement != in_rhs
        })
}

/// Verifies the complement identity for `S^{→|a} ∩ S^{b↑}` on the window.
pub fn min_i_complement_check(a: i64, b: i64, window: i64) -> Result<bool> {
    if window <= a.abs().max(b.abs()) + 2 {
        return Err(Error::WindowTooSmall {
            window,
            reason: format!(
                "need window > max(|a|,|b|) + 2 = {}",
                a.abs().max(b.abs()) + 2
            ),
        });
    }
    Ok(complement_counterexample(a, b, window, ComplementForm::Exact).is_none())
}
