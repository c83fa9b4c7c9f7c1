//! Oracle/symbolic agreement checks, one report per property.

use serde::{Deserialize, Serialize};

use crate::continuity::{
    inversion_image, min_i_complement_check, shift_witness, solve_left, solve_right, translate,
    Side,
};
use crate::element::{
    bicyclic_multiply, corner_contains, leq, leq_algebraic, to_bicyclic, Element, Pair,
};
use crate::oracle::{brute_membership, brute_solutions, enumerate, SetKind, Window};
use crate::sets::{DSet, SequencePair, UpSet};
use crate::topology::{Nbhd, TopologySpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub name: String,
    pub passed: bool,
    /// Number of individual comparisons made.
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<String>,
}

struct Check {
    name: &'static str,
    checked: u64,
    counterexample: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            checked: 0,
            counterexample: None,
        }
    }

    /// Records one comparison; keeps the first failure only.
    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn report(self) -> PropertyReport {
        PropertyReport {
            name: self.name.to_string(),
            passed: self.counterexample.is_none(),
            checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}

/// Runs every agreement check with sets and solvers compared on windows of radius `window`
/// (the cubic checks use at most radius 4).
pub fn agreement_suite(window: i64, seqs: &[SequencePair]) -> Vec<PropertyReport> {
    let w = window.max(1);
    let small = Window::new(w.min(4));
    let win = Window::new(w);
    let mut reports = Vec::new();

    let elems = enumerate(small);
    let mut c = Check::new("associativity");
    for &x in &elems {
        for &y in &elems {
            let xy = x * y;
            for &z in &elems {
                c.expect(xy * z == x * (y * z), || format!("{x} {y} {z}"));
            }
        }
    }
    reports.push(c.report());

    let mut c = Check::new("inverse axioms");
    for x in enumerate(win) {
        let inv = x.inverse();
        c.expect(x * inv * x == x && inv * x * inv == inv, || format!("{x}"));
    }
    reports.push(c.report());

    let mut c = Check::new("natural order");
    for &x in &elems {
        for &y in &elems {
            c.expect(leq(x, y) == leq_algebraic(x, y), || format!("{x} ≼ {y}"));
        }
    }
    reports.push(c.report());

    let mut c = Check::new("corner isomorphism");
    for n in -1..=1 {
        let corner: Vec<Element> = elems
            .iter()
            .copied()
            .filter(|&x| corner_contains(n, x))
            .collect();
        for &x in &corner {
            for &y in &corner {
                let lhs = to_bicyclic(n, x * y).ok();
                let rhs = match (to_bicyclic(n, x), to_bicyclic(n, y)) {
                    (Ok(u), Ok(v)) => Some(bicyclic_multiply(u, v)),
                    _ => None,
                };
                c.expect(lhs.is_some() && lhs == rhs, || format!("n={n} {x} {y}"));
            }
        }
    }
    reports.push(c.report());

    let pairs: Vec<Pair> = small.pairs().collect();
    let mut c = Check::new("translation solvers");
    for &fixed in &pairs {
        for &target in &pairs {
            for side in [Side::Left, Side::Right] {
                let sym = match side {
                    Side::Left => solve_left(fixed, target),
                    Side::Right => solve_right(fixed, target),
                };
                let brute = brute_solutions(win, side, fixed, target);
                let agree = enumerate(win)
                    .into_iter()
                    .all(|x| sym.contains(x) == brute.contains(&x));
                c.expect(agree, || format!("{side:?} {fixed} -> {target}"));
            }
        }
    }
    reports.push(c.report());

    let mut c = Check::new("D membership");
    for s in seqs {
        let d = DSet::new(s.clone());
        let brute = brute_membership(win, SetKind::D(s));
        for p in win.pairs() {
            c.expect(d.contains_pair(p) == brute.contains(p.into()), || {
                format!("{p} for {s}")
            });
        }
    }
    reports.push(c.report());

    // every point of ↑apex ∖ D has coordinates >= -3 max(|a|,|b|) - 2
    let wide = Window::new(6 * w + 2);
    let mut c = Check::new("up-set minus D");
    for s in seqs {
        let d = DSet::new(s.clone());
        for apex in win.pairs() {
            let sym = d.upset_minus(UpSet::new(apex));
            let brute = brute_membership(wide, SetKind::UpSetMinusD(apex, s));
            let inside = sym.iter().all(|&p| wide.contains(p.into()));
            let agree = inside
                && brute.members().len() == sym.len()
                && sym.iter().all(|&p| brute.contains(p.into()));
            c.expect(agree, || format!("↑{apex} for {s}"));
        }
    }
    reports.push(c.report());

    let probes = probe_nbhds(seqs);
    let mut c = Check::new("neighbourhood membership");
    for u in &probes {
        let brute = brute_membership(win, SetKind::Nbhd(u));
        for x in enumerate(win) {
            c.expect(u.contains(x) == brute.contains(x), || format!("{x} in {u}"));
        }
    }
    reports.push(c.report());

    // the witness V is checked against a bitmap of U large enough for every product
    let mut c = Check::new("shift witnesses");
    let elems3: Vec<Pair> = Window::new(w.min(3)).pairs().collect();
    let v_win = Window::new(w);
    let u_win = Window::new(2 * w + 2 * w.min(3));
    for u in probes
        .iter()
        .filter(|u| !u.apex_list().is_empty() || u.d_set().is_some())
    {
        let u_bits = brute_membership(u_win, SetKind::Nbhd(u));
        for &e in &elems3 {
            for side in [Side::Left, Side::Right] {
                let ok = match shift_witness(e, side, u) {
                    Ok(wit) => {
                        let v_bits = brute_membership(v_win, SetKind::Nbhd(&wit.v));
                        enumerate(v_win)
                            .into_iter()
                            .filter(|&v| v_bits.contains(v))
                            .all(|v| u_bits.contains(translate(e, v, side)))
                    }
                    Err(_) => false,
                };
                c.expect(ok, || format!("{side:?} {e} into {u}"));
            }
        }
    }
    reports.push(c.report());

    let mut c = Check::new("inversion image");
    for u in &probes {
        let symmetric = match u.topology() {
            TopologySpec::LcShift { seqs } => seqs.is_symmetric(),
            _ => true,
        };
        match inversion_image(u) {
            Ok(image) => {
                let brute = brute_membership(win, SetKind::Nbhd(&image));
                let original = brute_membership(win, SetKind::Nbhd(u));
                for x in enumerate(win) {
                    c.expect(original.contains(x) == brute.contains(x.inverse()), || {
                        format!("{x} for {u}")
                    });
                }
            }
            Err(e) => c.expect(!symmetric, || format!("{u}: {e}")),
        }
    }
    reports.push(c.report());

    let mut c = Check::new("quadrant complement identity");
    let bound = (w - 3).clamp(0, 2);
    for a in -bound..=bound {
        for b in -bound..=bound {
            c.expect(min_i_complement_check(a, b, w).unwrap_or(false), || {
                format!("a={a} b={b}")
            });
        }
    }
    reports.push(c.report());

    reports
}

fn probe_nbhds(seqs: &[SequencePair]) -> Vec<Nbhd> {
    let apex_sets: Vec<Vec<Pair>> = vec![
        vec![Pair::new(0, 0)],
        vec![Pair::new(1, 1)],
        vec![Pair::new(-1, 2)],
        vec![Pair::new(2, -1), Pair::new(0, 3)],
        vec![Pair::new(-2, -2), Pair::new(1, 0), Pair::new(0, 1)],
    ];
    let mut out = vec![
        Nbhd::discrete(),
        Nbhd::thresholds(0, 0),
        Nbhd::thresholds(-1, 2),
    ];
    for apexes in &apex_sets {
        out.push(
            Nbhd::apexes(TopologySpec::MinShift, apexes.clone()).expect("non-empty apex list"),
        );
        for s in seqs {
            out.push(
                Nbhd::apexes(TopologySpec::lc_shift(s.clone()), apexes.clone())
                    .expect("apex topology"),
            );
        }
    }
    out
}
