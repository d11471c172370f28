//! Shared caches: canonical bases and normalized structure constants.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;

use super::diagram::{fix_lift_signs, width_after, Diagram};
use super::matching::Matching;
use super::skein::SkeinPoly;
use super::{closure_ops, Op};
use crate::coeff::LaurentPoly;

/// Canonical basis of tangles from `bottom` to `top` points.
#[derive(Debug)]
pub struct Basis {
    bottom: usize,
    top: usize,
    matchings: Vec<Matching>,
    index: HashMap<Matching, usize>,
    lifts: Vec<Vec<Op>>,
}

impl Basis {
    fn build(bottom: usize, top: usize) -> Basis {
        let matchings = Matching::enumerate(bottom, top);
        let index = matchings.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let lifts = matchings
            .iter()
            .map(|m| {
                let mut w = m.lift_word();
                fix_lift_signs(bottom, &mut w);
                w
            })
            .collect();
        Basis { bottom, top, matchings, index, lifts }
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    pub fn matching(&self, i: usize) -> &Matching {
        &self.matchings[i]
    }

    pub fn index_of(&self, m: &Matching) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub(crate) fn lift(&self, i: usize) -> &[Op] {
        &self.lifts[i]
    }
}

/// A normalized linear combination `Σ P_k / z^E · b_k` over a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub z_exp: u32,
    pub terms: Vec<(usize, LaurentPoly)>,
}

impl Expansion {
    fn from_skein(basis: &Basis, raw: HashMap<Matching, SkeinPoly>) -> Expansion {
        let mut parts: Vec<(usize, LaurentPoly, u32)> = raw
            .into_iter()
            .map(|(m, p)| {
                let (num, e) = p.to_fraction();
                (basis.index_of(&m).expect("normal form lies in the basis"), num, e)
            })
            .collect();
        parts.sort_by_key(|t| t.0);
        let z_exp = parts.iter().map(|t| t.2).max().unwrap_or(0);
        let z = LaurentPoly::from_terms([((0, 2), 1.into()), ((0, -2), (-1).into())]);
        let terms = parts
            .into_iter()
            .map(|(k, num, e)| (k, if e < z_exp { num.mul(&z.pow(z_exp - e)) } else { num }))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        Expansion { z_exp, terms }
    }
}

type Cache<K, V> = RwLock<HashMap<K, Arc<V>>>;

#[derive(Default)]
struct Engine {
    bases: Cache<(usize, usize), Basis>,
    products: Cache<(usize, usize, usize, usize, usize), Expansion>,
    closes: Cache<(usize, usize), Expansion>,
    traces: Cache<(usize, usize), Expansion>,
}

fn engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(Engine::default)
}

fn cached<K: Eq + Hash + Clone, V>(cache: &Cache<K, V>, key: K, build: impl FnOnce() -> V) -> Arc<V> {
    if let Some(v) = cache.read().get(&key) {
        return v.clone();
    }
    let v = Arc::new(build());
    cache.write().entry(key).or_insert(v).clone()
}

/// Canonical basis of tangles from `bottom` to `top` points (cached).
pub fn basis(bottom: usize, top: usize) -> Arc<Basis> {
    cached(&engine().bases, (bottom, top), || Basis::build(bottom, top))
}

/// Normalize a slice word on `bottom` strands into the canonical basis.
pub(crate) fn normalize_ops(bottom: usize, ops: &[Op]) -> Expansion {
    let d = Diagram::from_word(bottom, ops);
    let top = width_after(bottom, ops);
    Expansion::from_skein(&basis(bottom, top), d.normalize())
}

/// Product of basis element `i` of `(b, t)` followed by basis element `j` of `(t, r)`.
pub(crate) fn compose(b: usize, t: usize, r: usize, i: usize, j: usize) -> Arc<Expansion> {
    cached(&engine().products, (b, t, r, i, j), || {
        let (lo, hi) = (basis(b, t), basis(t, r));
        let mut ops = lo.lift(i).to_vec();
        ops.extend_from_slice(hi.lift(j));
        normalize_ops(b, &ops)
    })
}

/// Close the last strand of basis element `i` of `K_n` on the right, landing in `K_{n-1}`.
pub(crate) fn close_last(n: usize, i: usize) -> Arc<Expansion> {
    cached(&engine().closes, (n, i), || {
        let m = n - 1;
        let mut ops = vec![Op::Cup(m)];
        ops.extend_from_slice(basis(n, n).lift(i));
        ops.push(Op::Cap(m));
        normalize_ops(m, &ops)
    })
}

/// Closure of basis element `i` of `K_n`, as an expansion over the empty basis.
pub(crate) fn trace_of(n: usize, i: usize) -> Arc<Expansion> {
    cached(&engine().traces, (n, i), || normalize_ops(0, &closure_ops(n, basis(n, n).lift(i))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_products() {
        let b = basis(3, 3);
        let id = b.index_of(&Matching::identity(3)).unwrap();
        for i in 0..b.len() {
            let e = compose(3, 3, 3, id, i);
            assert_eq!(e.z_exp, 0);
            assert_eq!(e.terms, vec![(i, LaurentPoly::one())]);
            assert_eq!(*compose(3, 3, 3, i, id), *e);
        }
    }
}
