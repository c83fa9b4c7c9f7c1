//! Exhaustive evaluation over finite windows `[-w, w]² ∪ {0}`.
//!
//! Nothing here goes through the symbolic shortcuts in [`crate::sets`] or
//! [`crate::topology`]: `D` is painted component by component from its defining unions, and
//! every other set is tested point by point against its defining inequalities.

use crate::continuity::Side;
use crate::element::{Element, Pair};
use crate::sets::{QuadrantSet, SequencePair};
use crate::topology::{BaseSet, Nbhd, TopologySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Window(i64);

impl Window {
    pub fn new(w: i64) -> Self {
        assert!(w >= 0, "window radius must be non-negative");
        Window(w)
    }

    pub fn radius(self) -> i64 {
        self.0
    }

    pub fn contains(self, x: Element) -> bool {
        match x {
            Element::Zero => true,
            Element::Pair(p) => p.a.abs() <= self.0 && p.b.abs() <= self.0,
        }
    }

    pub fn len(self) -> usize {
        let side = (2 * self.0 + 1) as usize;
        side * side + 1
    }

    pub fn is_empty(self) -> bool {
        false
    }

    /// Pairs in lexicographic order.
    pub fn pairs(self) -> impl Iterator<Item = Pair> {
        let w = self.0;
        (-w..=w).flat_map(move |a| (-w..=w).map(move |b| Pair::new(a, b)))
    }

    fn index(self, p: Pair) -> Option<usize> {
        let w = self.0;
        if p.a.abs() > w || p.b.abs() > w {
            return None;
        }
        let side = 2 * w + 1;
        Some(((p.a + w) * side + (p.b + w)) as usize)
    }
}

/// Zero first, then pairs in lexicographic order.
pub fn enumerate(win: Window) -> Vec<Element> {
    std::iter::once(Element::Zero)
        .chain(win.pairs().map(Element::Pair))
        .collect()
}

/// Apexes of every component of `D` that can reach the window, straight from the unions
/// defining `A_0`, `A_n^d` and `A_n^l`.
pub fn d_component_apexes(seqs: &SequencePair, win: Window) -> Vec<Pair> {
    let w = win.radius();
    let (x, y) = (seqs.x(), seqs.y());
    let mut out = vec![Pair::new(0, 0)];
    for i in 1..=x.term(1) - 1 {
        out.push(Pair::new(0, -i));
    }
    for j in 1..=y.term(1) - 1 {
        out.push(Pair::new(-j, 0));
    }
    // components of index n have both apex coordinates <= -n
    let mut n = 1i64;
    while -n >= -w {
        let k = n as u64;
        for i in x.term(k)..=x.term(k + 1) - 1 {
            out.push(Pair::new(-n, -n - i));
        }
        for j in y.term(k)..=y.term(k + 1) - 1 {
            out.push(Pair::new(-n - j, -n));
        }
        n += 1;
    }
    assert!(
        out.iter().all(|p| p.a <= 0 && p.b <= 0),
        "component apexes of D lie in the third quadrant"
    );
    out
}

/// Membership bitmap of one set over a window.
#[derive(Debug, Clone)]
pub struct WindowSet {
    win: Window,
    zero: bool,
    bits: Vec<bool>,
}

impl WindowSet {
    fn empty(win: Window) -> Self {
        let side = (2 * win.radius() + 1) as usize;
        WindowSet {
            win,
            zero: false,
            bits: vec![false; side * side],
        }
    }

    pub fn window(&self) -> Window {
        self.win
    }

    /// `None` outside the window.
    pub fn get(&self, x: Element) -> Option<bool> {
        match x {
            Element::Zero => Some(self.zero),
            Element::Pair(p) => self.win.index(p).map(|i| self.bits[i]),
        }
    }

    /// Panics outside the window.
    pub fn contains(&self, x: Element) -> bool {
        self.get(x)
            .unwrap_or_else(|| panic!("{x} lies outside window {}", self.win.radius()))
    }

    pub fn members(&self) -> Vec<Element> {
        enumerate(self.win)
            .into_iter()
            .filter(|&x| self.contains(x))
            .collect()
    }

    fn paint_ray(&mut self, apex: Pair) {
        let w = self.win.radius();
        // walk down-left from the apex until the ray leaves the window
        let mut p = apex;
        let drop = (p.a - w).max(p.b - w).max(0);
        p = Pair::new(p.a - drop, p.b - drop);
        while let Some(i) = self.win.index(p) {
            self.bits[i] = true;
            p = Pair::new(p.a - 1, p.b - 1);
        }
    }
}

fn in_upset(apex: Pair, p: Pair) -> bool {
    p.a - p.b == apex.a - apex.b && p.a <= apex.a
}

/// The set `D` on the window.
pub fn brute_d(seqs: &SequencePair, win: Window) -> WindowSet {
    let mut set = WindowSet::empty(win);
    for apex in d_component_apexes(seqs, win) {
        set.paint_ray(apex);
    }
    set
}

/// The sets the oracle knows how to evaluate.
#[derive(Debug, Clone, Copy)]
pub enum SetKind<'a> {
    UpSet(Pair),
    Quadrant(QuadrantSet),
    D(&'a SequencePair),
    /// `↑apex ∖ D`
    UpSetMinusD(Pair, &'a SequencePair),
    Nbhd(&'a Nbhd),
}

pub fn brute_membership(win: Window, kind: SetKind<'_>) -> WindowSet {
    let mut set = WindowSet::empty(win);
    let d = match kind {
        SetKind::D(s) | SetKind::UpSetMinusD(_, s) => Some(brute_d(s, win)),
        SetKind::Nbhd(n) => match n.topology() {
            TopologySpec::LcShift { seqs } => Some(brute_d(seqs, win)),
            _ => None,
        },
        _ => None,
    };
    let in_d = |p: Pair| d.as_ref().is_some_and(|d| d.contains(p.into()));
    set.zero = matches!(kind, SetKind::Quadrant(_) | SetKind::Nbhd(_));
    for p in win.pairs() {
        let member = match kind {
            SetKind::UpSet(apex) => in_upset(apex, p),
            SetKind::Quadrant(q) => match q {
                QuadrantSet::RightHalf(a) => p.a >= a,
                QuadrantSet::UpperHalf(b) => p.b >= b,
                QuadrantSet::Corner(a, b) => p.a >= a && p.b >= b,
            },
            SetKind::D(_) => in_d(p),
            SetKind::UpSetMinusD(apex, _) => in_upset(apex, p) && !in_d(p),
            SetKind::Nbhd(n) => match n.base() {
                BaseSet::ZeroOnly => false,
                BaseSet::Thresholds { a, b } => p.a >= *a && p.b >= *b,
                BaseSet::Apexes(apexes) => !in_d(p) && !apexes.iter().any(|&q| in_upset(q, p)),
            },
        };
        set.bits[win.index(p).expect("window point")] = member;
    }
    set
}

/// The window members of a set, in [`enumerate`] order.
pub fn brute_set(win: Window, kind: SetKind<'_>) -> Vec<Element> {
    brute_membership(win, kind).members()
}

/// Every window element `w` with `w·fixed = target` (right) or `fixed·w = target` (left).
pub fn brute_solutions(win: Window, side: Side, fixed: Pair, target: Pair) -> Vec<Element> {
    let (fixed, target) = (Element::Pair(fixed), Element::Pair(target));
    enumerate(win)
        .into_iter()
        .filter(|&w| {
            let product = match side {
                Side::Right => w * fixed,
                Side::Left => fixed * w,
            };
            product == target
        })
        .collect()
}
