//! Arithmetic of the extended bicyclic semigroup `Z x Z` with an adjoined zero.
//!
//! A non-zero element is a [`Pair`] `(a, b)`. Pairs multiply by
//!
//! ```text
//! (a,b)·(c,d) = (a-b+c, d)   if b < c
//!               (a, d)       if b = c
//!               (a, d+b-c)   if b > c
//! ```
//!
//! and [`Element::Zero`] absorbs everything. The corner `C[n]` of pairs with both
//! coordinates `>= n` is a copy of the bicyclic monoid `<p, q | pq = 1>`, reached
//! through [`to_bicyclic`].

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A non-zero element `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct Pair {
    pub a: i64,
    pub b: i64,
}

impl Pair {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// `a - b`, the index of the diagonal the pair lies on.
    pub const fn diff(self) -> i64 {
        self.a - self.b
    }

    pub const fn inverse(self) -> Self {
        Self::new(self.b, self.a)
    }

    pub const fn is_idempotent(self) -> bool {
        self.a == self.b
    }

    /// Natural partial order on pairs: `self ≼ other`.
    ///
    /// Same diagonal, and `other` sits weakly down-left of `self`.
    pub const fn leq(self, other: Pair) -> bool {
        self.diff() == other.diff() && other.a <= self.a
    }

    /// `self·self⁻¹ = (a, a)`.
    pub const fn left_unit(self) -> Self {
        Self::new(self.a, self.a)
    }

    /// `self⁻¹·self = (b, b)`.
    pub const fn right_unit(self) -> Self {
        Self::new(self.b, self.b)
    }

    pub const fn shift(self, k: i64) -> Self {
        Self::new(self.a + k, self.b + k)
    }
}

impl From<(i64, i64)> for Pair {
    fn from((a, b): (i64, i64)) -> Self {
        Self::new(a, b)
    }
}

impl From<Pair> for (i64, i64) {
    fn from(p: Pair) -> Self {
        (p.a, p.b)
    }
}

impl Mul for Pair {
    type Output = Pair;

    fn mul(self, rhs: Pair) -> Pair {
        let Pair { a, b } = self;
        let Pair { a: c, b: d } = rhs;
        match b.cmp(&c) {
            std::cmp::Ordering::Less => Pair::new(a - b + c, d),
            std::cmp::Ordering::Equal => Pair::new(a, d),
            std::cmp::Ordering::Greater => Pair::new(a, d + b - c),
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// An element of the semigroup: a pair or the adjoined zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Zero,
    Pair(Pair),
}

impl Element {
    pub const fn pair(a: i64, b: i64) -> Self {
        Element::Pair(Pair::new(a, b))
    }

    pub const fn as_pair(self) -> Option<Pair> {
        match self {
            Element::Zero => None,
            Element::Pair(p) => Some(p),
        }
    }

    pub const fn is_zero(self) -> bool {
        matches!(self, Element::Zero)
    }

    pub fn inverse(self) -> Self {
        invert(self)
    }
}

impl From<Pair> for Element {
    fn from(p: Pair) -> Self {
        Element::Pair(p)
    }
}

impl Mul for Element {
    type Output = Element;

    fn mul(self, rhs: Element) -> Element {
        multiply(self, rhs)
    }
}

pub fn multiply(x: Element, y: Element) -> Element {
    match (x, y) {
        (Element::Pair(p), Element::Pair(q)) => Element::Pair(p * q),
        _ => Element::Zero,
    }
}

pub fn invert(x: Element) -> Element {
    match x {
        Element::Zero => Element::Zero,
        Element::Pair(p) => Element::Pair(p.inverse()),
    }
}

pub fn is_idempotent(x: Element) -> bool {
    match x {
        Element::Zero => true,
        Element::Pair(p) => p.is_idempotent(),
    }
}

/// `x ≼ y` in the natural partial order, via the coordinate characterisation.
pub fn leq(x: Element, y: Element) -> bool {
    match (x, y) {
        (Element::Zero, _) => true,
        (Element::Pair(_), Element::Zero) => false,
        (Element::Pair(p), Element::Pair(q)) => p.leq(q),
    }
}

/// `x ≼ y` via the inverse-semigroup definition `x = (x·x⁻¹)·y`.
pub fn leq_algebraic(x: Element, y: Element) -> bool {
    x == x * invert(x) * y
}

pub fn corner_contains(n: i64, x: Element) -> bool {
    match x {
        Element::Zero => true,
        Element::Pair(p) => p.a >= n && p.b >= n,
    }
}

/// A normal form `q^i p^j` of the bicyclic monoid, or the adjoined zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BicyclicWord {
    Zero,
    Word { i: u64, j: u64 },
}

impl BicyclicWord {
    pub const IDENTITY: BicyclicWord = BicyclicWord::Word { i: 0, j: 0 };
}

impl Mul for BicyclicWord {
    type Output = BicyclicWord;

    fn mul(self, rhs: BicyclicWord) -> BicyclicWord {
        bicyclic_multiply(self, rhs)
    }
}

impl fmt::Display for BicyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BicyclicWord::Zero => f.write_str("0"),
            BicyclicWord::Word { i: 0, j: 0 } => f.write_str("1"),
            BicyclicWord::Word { i, j } => {
                let mut parts = Vec::with_capacity(2);
                if i > 0 {
                    parts.push(format!("q^{i}"));
                }
                if j > 0 {
                    parts.push(format!("p^{j}"));
                }
                f.write_str(&parts.join(" "))
            }
        }
    }
}

/// `q^i p^j · q^k p^l`, cancelling `pq = 1` across the seam.
pub fn bicyclic_multiply(u: BicyclicWord, v: BicyclicWord) -> BicyclicWord {
    match (u, v) {
        (BicyclicWord::Word { i, j }, BicyclicWord::Word { i: k, j: l }) => {
            if j < k {
                BicyclicWord::Word { i: i + k - j, j: l }
            } else {
                BicyclicWord::Word { i, j: l + j - k }
            }
        }
        _ => BicyclicWord::Zero,
    }
}

/// The isomorphism `C⁰[n] -> C⁰`, `(a,b) ↦ q^(a-n) p^(b-n)`, `0 ↦ 0`.
pub fn to_bicyclic(n: i64, x: Element) -> Result<BicyclicWord> {
    match x {
        Element::Zero => Ok(BicyclicWord::Zero),
        Element::Pair(p) if corner_contains(n, x) => Ok(BicyclicWord::Word {
            i: (p.a - n) as u64,
            j: (p.b - n) as u64,
        }),
        Element::Pair(_) => Err(Error::OutsideCorner { n, element: x }),
    }
}

/// Inverse of [`to_bicyclic`].
pub fn from_bicyclic(n: i64, w: BicyclicWord) -> Element {
    match w {
        BicyclicWord::Zero => Element::Zero,
        BicyclicWord::Word { i, j } => {
            let a = n + i64::try_from(i).expect("word exponent exceeds i64");
            let b = n + i64::try_from(j).expect("word exponent exceeds i64");
            Element::pair(a, b)
        }
    }
}

/// The automorphism `(a,b) ↦ (a+k, b+k)`.
pub fn shift_automorphism(k: i64, x: Element) -> Element {
    match x {
        Element::Zero => Element::Zero,
        Element::Pair(p) => Element::Pair(p.shift(k)),
    }
}

/// The homomorphism onto `(Z, +)` realising the group quotient.
pub fn difference_hom(x: Element) -> Result<i64> {
    x.as_pair()
        .map(Pair::diff)
        .ok_or(Error::ZeroHasNoDifference)
}

/// [`difference_hom`] reduced into `Z/m`, as a residue in `0..m`.
pub fn quotient_mod(m: i64, x: Element) -> Result<i64> {
    if m <= 0 {
        return Err(Error::NonPositiveModulus(m));
    }
    Ok(difference_hom(x)?.rem_euclid(m))
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Zero => f.write_str("0"),
            Element::Pair(p) => p.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse element literal {token:?}: {reason}")]
pub struct ParseElementError {
    pub token: String,
    pub reason: &'static str,
}

impl FromStr for Element {
    type Err = ParseElementError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = |reason| ParseElementError {
            token: s.to_string(),
            reason,
        };
        let t = s.trim();
        if t == "0" {
            return Ok(Element::Zero);
        }
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| err("expected `0` or `(a,b)`"))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| err("expected two comma-separated integers"))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<i64>()
                .map_err(|_| err("coordinate is not a 64-bit signed integer"))
        };
        Ok(Element::pair(parse(a)?, parse(b)?))
    }
}

impl FromStr for Pair {
    type Err = ParseElementError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.parse::<Element>()?.as_pair().ok_or(ParseElementError {
            token: s.to_string(),
            reason: "expected a pair, not zero",
        })
    }
}

/// Parses a comma-separated list of pair literals such as `(1,1),(0,3)`.
pub fn parse_pair_list(s: &str) -> std::result::Result<Vec<Pair>, ParseElementError> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let close = rest.find(')').ok_or(ParseElementError {
            token: rest.to_string(),
            reason: "unterminated pair literal",
        })?;
        out.push(rest[..=close].parse::<Pair>()?);
        rest = rest[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            if rest.is_empty() {
                return Err(ParseElementError {
                    token: s.to_string(),
                    reason: "trailing comma",
                });
            }
        } else if !rest.is_empty() {
            return Err(ParseElementError {
                token: rest.to_string(),
                reason: "expected `,` between pair literals",
            });
        }
    }
    Ok(out)
}

// Zero is encoded as the JSON number 0, pairs as two-element arrays.
impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Element::Zero => serializer.serialize_u8(0),
            Element::Pair(p) => p.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Zero(u8),
            Pair(Pair),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Zero(0) => Ok(Element::Zero),
            Repr::Zero(v) => Err(serde::de::Error::custom(format!(
                "expected 0 or [a, b], got {v}"
            ))),
            Repr::Pair(p) => Ok(Element::Pair(p)),
        }
    }
}
