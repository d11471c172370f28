//! Tangle diagrams built from slice words, Kauffman skein normalization into
//! the canonical matching basis, and closures.

mod diagram;
mod engine;
mod matching;
mod skein;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::coeff::RingElem;

pub use engine::{basis, Basis, Expansion};
pub(crate) use diagram::width_after;
pub(crate) use engine::{close_last, compose, normalize_ops, trace_of};
pub use matching::Matching;
pub use skein::{SkeinExp, SkeinPoly};

pub(crate) use diagram::Diagram;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("invalid matching {0}")]
    InvalidMatching(String),
    #[error("slice index {index} out of range for {n} strands")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("cannot parse tangle word token {0:?}")]
    Parse(String),
}

/// Elementary slice of a tangle, acting on positions `i, i+1` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Op {
    /// Crossing; `true` when the strand from the lower left passes over.
    Cross(usize, bool),
    Cap(usize),
    Cup(usize),
}

/// Generator of `K_n`, with 1-based strand index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    PosCross(usize),
    NegCross(usize),
    Hook(usize),
    Id,
}

impl Slice {
    pub fn index(&self) -> Option<usize> {
        match *self {
            Slice::PosCross(i) | Slice::NegCross(i) | Slice::Hook(i) => Some(i),
            Slice::Id => None,
        }
    }

    pub(crate) fn ops(&self) -> Vec<Op> {
        match *self {
            Slice::PosCross(i) => vec![Op::Cross(i - 1, true)],
            Slice::NegCross(i) => vec![Op::Cross(i - 1, false)],
            Slice::Hook(i) => vec![Op::Cap(i - 1), Op::Cup(i - 1)],
            Slice::Id => vec![],
        }
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slice::PosCross(i) => write!(f, "e{i}"),
            Slice::NegCross(i) => write!(f, "E{i}"),
            Slice::Hook(i) => write!(f, "h{i}"),
            Slice::Id => write!(f, "1"),
        }
    }
}

impl FromStr for Slice {
    type Err = TangleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || TangleError::Parse(s.to_string());
        if s == "1" || s == "id" {
            return Ok(Slice::Id);
        }
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(err)?;
        let i: usize = chars.as_str().parse().map_err(|_| err())?;
        if i == 0 {
            return Err(err());
        }
        match kind {
            'e' => Ok(Slice::PosCross(i)),
            'E' => Ok(Slice::NegCross(i)),
            'h' => Ok(Slice::Hook(i)),
            _ => Err(err()),
        }
    }
}

/// A word of slices on `n` strands. The first slice is at the bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TangleWord {
    n: usize,
    slices: Vec<Slice>,
}

impl TangleWord {
    pub fn new(n: usize, slices: Vec<Slice>) -> Result<Self, TangleError> {
        for s in &slices {
            if let Some(i) = s.index() {
                if i == 0 || i >= n {
                    return Err(TangleError::IndexOutOfRange { index: i, n });
                }
            }
        }
        Ok(Self { n, slices })
    }

    pub fn identity(n: usize) -> Self {
        Self { n, slices: Vec::new() }
    }

    /// Parse space-separated tokens such as `e1 E2 h1`.
    pub fn parse(n: usize, text: &str) -> Result<Self, TangleError> {
        let slices = text.split_whitespace().map(str::parse).collect::<Result<Vec<Slice>, _>>()?;
        Self::new(n, slices)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    /// `self` followed by `other` on top.
    pub fn then(&self, other: &TangleWord) -> TangleWord {
        assert_eq!(self.n, other.n, "strand counts differ");
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&other.slices);
        TangleWord { n: self.n, slices }
    }

    pub(crate) fn ops(&self) -> Vec<Op> {
        self.slices.iter().flat_map(Slice::ops).collect()
    }

    /// Expand into the canonical basis of `K_n`.
    pub fn normalize(&self) -> HashMap<Matching, RingElem> {
        Diagram::from_word(self.n, &self.ops()).normalize().into_iter().map(|(m, p)| (m, p.to_ring())).collect()
    }

    /// Kauffman polynomial of the closure, normalized so the empty diagram is 1.
    pub fn close_trace(&self) -> RingElem {
        let word = closure_ops(self.n, &self.ops());
        let out = Diagram::from_word(0, &word).normalize();
        out.get(&Matching::new(0, 0, vec![]).expect("empty matching"))
            .map(SkeinPoly::to_ring)
            .unwrap_or_else(RingElem::zero)
    }
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slices.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.slices.iter().map(Slice::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `w` with `k` vertical strands appended on the right.
pub fn tensor_word(w: &TangleWord, k: usize) -> TangleWord {
    TangleWord { n: w.n + k, slices: w.slices.clone() }
}

/// All canonical basis tangles of `K_n`, one per perfect matching.
pub fn enumerate_basis(n: usize) -> Vec<Matching> {
    basis(n, n).matchings().to_vec()
}

/// Close every strand on the right: nested cups, the word, nested caps.
pub(crate) fn closure_ops(n: usize, word: &[Op]) -> Vec<Op> {
    let mut out: Vec<Op> = (0..n).map(Op::Cup).collect();
    out.extend_from_slice(word);
    out.extend((0..n).rev().map(Op::Cap));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::loop_value;

    fn word(n: usize, s: &str) -> TangleWord {
        TangleWord::parse(n, s).unwrap()
    }

    fn single(m: Matching, c: RingElem) -> HashMap<Matching, RingElem> {
        HashMap::from([(m, c)])
    }

    fn hook(n: usize, i: usize) -> Matching {
        let mut pairs = vec![(i as i32, i as i32 + 1), (-(i as i32), -(i as i32 + 1))];
        for j in 1..=n as i32 {
            if j != i as i32 && j != i as i32 + 1 {
                pairs.push((j, -j));
            }
        }
        Matching::from_pairs(n, n, &pairs).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let w = word(3, "e1 E2 h1");
        assert_eq!(w.to_string(), "e1 E2 h1");
        assert!(TangleWord::parse(2, "e2").is_err());
        assert!(TangleWord::parse(2, "x1").is_err());
    }

    #[test]
    fn basic_normal_forms() {
        assert_eq!(word(2, "e1 E1").normalize(), single(Matching::identity(2), RingElem::one()));
        assert_eq!(word(2, "h1 h1").normalize(), single(hook(2, 1), loop_value()));
        let ainv = RingElem::alpha().inv().unwrap();
        assert_eq!(word(2, "h1 e1").normalize(), single(hook(2, 1), ainv.clone()));
        assert_eq!(word(2, "e1 h1").normalize(), single(hook(2, 1), ainv));
        assert_eq!(word(3, "h1 h2 h1").normalize(), single(hook(3, 1), RingElem::one()));
    }

    #[test]
    fn closures() {
        let delta = loop_value();
        assert_eq!(TangleWord::identity(1).close_trace(), delta.clone());
        assert_eq!(TangleWord::identity(3).close_trace(), delta.pow(3));
        assert_eq!(word(2, "e1").close_trace(), RingElem::alpha() * &delta);
        assert_eq!(word(2, "E1").close_trace(), RingElem::alpha().inv().unwrap() * &delta);
        assert_eq!(word(2, "h1").close_trace(), delta);
        assert_eq!(TangleWord::identity(0).close_trace(), RingElem::one());
    }

    #[test]
    fn trefoil() {
        let (a, z, d) = (RingElem::alpha(), RingElem::z(), loop_value());
        let ai = a.inv().unwrap();
        let expect = &z * d.pow(2) + (RingElem::one() + z.pow(2)) * &a * &d
            - (z.pow(2) * &ai + &z * ai.pow(2)) * &d;
        assert_eq!(word(2, "e1 e1 e1").close_trace(), expect);
    }

    #[test]
    fn relations() {
        let eq = |n: usize, l: &str, r: &str| assert_eq!(word(n, l).normalize(), word(n, r).normalize(), "{l} = {r}");
        eq(3, "e1 e2 e1", "e2 e1 e2");
        eq(4, "e1 e3", "e3 e1");
        eq(4, "h1 E3", "E3 h1");
        let alpha = RingElem::alpha();
        let lhs = word(3, "h2 e1 h2").normalize();
        assert_eq!(lhs, single(hook(3, 2), alpha));
        let lhs = word(3, "h2 E1 h2").normalize();
        assert_eq!(lhs, single(hook(3, 2), RingElem::alpha().inv().unwrap()));
        eq(3, "h2 h1 h2", "h2");
    }

    #[test]
    fn lifts_are_normal() {
        for n in 0..=4 {
            for m in Matching::enumerate(n, n) {
                let mut ops = m.lift_word();
                diagram::fix_lift_signs(n, &mut ops);
                let out = Diagram::from_word(n, &ops).normalize();
                assert_eq!(out.len(), 1);
                assert_eq!(out.get(&m), Some(&SkeinPoly::one()), "{m:?}");
            }
        }
    }
}
