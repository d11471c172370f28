//! Elements of the Kauffman skein category: linear combinations of canonical
//! basis tangles with scalar coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::coeff::{div_exact, gcd, loop_value, CoeffError, LaurentPoly, RingElem};
use crate::tangle::{self, basis, Matching, Op, TangleError, TangleWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BmwError {
    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error(transparent)]
    Tangle(#[from] TangleError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("bad element JSON: {0}")]
    Json(String),
}

/// Morphism from `bottom` to `top` points; an element of `K_n` when both are `n`.
/// Terms are keyed by index into the canonical basis.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElem {
    bottom: usize,
    top: usize,
    terms: BTreeMap<usize, RingElem>,
}

impl AlgElem {
    pub fn zero(bottom: usize, top: usize) -> Self {
        Self { bottom, top, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_matching(&Matching::identity(n))
    }

    pub fn from_matching(m: &Matching) -> Self {
        let b = basis(m.bottom(), m.top());
        let i = b.index_of(m).expect("matching lies in its basis");
        Self { bottom: m.bottom(), top: m.top(), terms: BTreeMap::from([(i, RingElem::one())]) }
    }

    pub(crate) fn from_ops(bottom: usize, ops: &[Op]) -> Self {
        let e = tangle::normalize_ops(bottom, ops);
        let top = tangle::width_after(bottom, ops);
        Self::from_expansion(bottom, top, &e, &RingElem::one())
    }

    fn from_expansion(bottom: usize, top: usize, e: &tangle::Expansion, scale: &RingElem) -> Self {
        let zden = z_power_den(e.z_exp);
        let mut terms = BTreeMap::new();
        for (k, p) in &e.terms {
            let c = scale * &RingElem::from_parts(p.mul(&zden.0), zden.1.clone());
            if !c.is_zero() {
                terms.insert(*k, c);
            }
        }
        Self { bottom, top, terms }
    }

    pub fn from_word(w: &TangleWord) -> Self {
        Self::from_ops(w.strands(), &w.ops())
    }

    /// Parse a slice word such as `e1 E2 h1` on `n` strands.
    pub fn parse_word(n: usize, text: &str) -> Result<Self, BmwError> {
        Ok(Self::from_word(&TangleWord::parse(n, text)?))
    }

    /// Positive crossing `e_i` of `K_n`.
    pub fn e(n: usize, i: usize) -> Self {
        Self::from_ops(n, &[Op::Cross(i - 1, true)])
    }

    /// Negative crossing `e_i^{-1}` of `K_n`.
    pub fn e_inv(n: usize, i: usize) -> Self {
        Self::from_ops(n, &[Op::Cross(i - 1, false)])
    }

    /// Hook `h_i` of `K_n`.
    pub fn h(n: usize, i: usize) -> Self {
        Self::from_ops(n, &[Op::Cap(i - 1), Op::Cup(i - 1)])
    }

    /// Cap joining strands `i, i+1` of `n`: a morphism from `n` to `n - 2` points.
    pub fn cap(n: usize, i: usize) -> Self {
        Self::from_ops(n, &[Op::Cap(i - 1)])
    }

    /// Cup creating strands `i, i+1`: a morphism from `n` to `n + 2` points.
    pub fn cup(n: usize, i: usize) -> Self {
        Self::from_ops(n, &[Op::Cup(i - 1)])
    }

    pub fn scalar(n: usize, c: RingElem) -> Self {
        Self::identity(n).scale(&c)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Strand count of a square element.
    pub fn n(&self) -> usize {
        self.bottom
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Matching, &RingElem)> {
        let b = basis(self.bottom, self.top);
        self.terms.iter().map(move |(i, c)| (b.matching(*i).clone(), c))
    }

    pub fn coeff(&self, m: &Matching) -> RingElem {
        basis(self.bottom, self.top)
            .index_of(m)
            .and_then(|i| self.terms.get(&i).cloned())
            .unwrap_or_else(RingElem::zero)
    }

    fn check_same(&self, other: &Self) -> Result<(), BmwError> {
        if self.bottom != other.bottom {
            return Err(BmwError::StrandMismatch { left: self.bottom, right: other.bottom });
        }
        if self.top != other.top {
            return Err(BmwError::StrandMismatch { left: self.top, right: other.top });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, BmwError> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let sum = terms.get(k).map(|x| x + c).unwrap_or_else(|| c.clone());
            if sum.is_zero() {
                terms.remove(k);
            } else {
                terms.insert(*k, sum);
            }
        }
        Ok(Self { bottom: self.bottom, top: self.top, terms })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, BmwError> {
        self.try_add(&other.neg())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("shapes agree")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("shapes agree")
    }

    pub fn neg(&self) -> Self {
        self.scale(&RingElem::from_int(-1))
    }

    pub fn scale(&self, c: &RingElem) -> Self {
        if c.is_zero() {
            return Self::zero(self.bottom, self.top);
        }
        let terms = self.terms.iter().map(|(k, x)| (*k, x * c)).collect();
        Self { bottom: self.bottom, top: self.top, terms }
    }

    /// Composite with `self` below `other`.
    pub fn try_mul(&self, other: &Self) -> Result<Self, BmwError> {
        Ok(self.cleared().try_mul(&other.cleared())?.reduce())
    }

    /// Fraction-free form over a common denominator of all coefficients.
    pub fn cleared(&self) -> Cleared {
        let mut d = LaurentPoly::one();
        for c in self.terms.values() {
            let q = c.denom();
            if q.is_one() || q == &d || div_exact(&d, q).is_some() {
                continue;
            }
            let g = gcd(&d, q);
            d = d.mul(&div_exact(q, &g).expect("gcd divides"));
        }
        let mut factors: HashMap<&LaurentPoly, LaurentPoly> = HashMap::new();
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let f = factors.entry(c.denom()).or_insert_with(|| div_exact(&d, c.denom()).expect("common denominator"));
                (*k, c.numer().mul(f))
            })
            .collect();
        Cleared { bottom: self.bottom, top: self.top, den: d, z_exp: 0, terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("composable morphisms")
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.bottom);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Append `k` vertical strands on the right.
    pub fn tensor_id(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        let (from, to) = (basis(self.bottom, self.top), basis(self.bottom + k, self.top + k));
        let terms = self
            .terms
            .iter()
            .map(|(i, c)| (to.index_of(&from.matching(*i).tensor_id(k)).expect("tensor matching"), c.clone()))
            .collect();
        Self { bottom: self.bottom + k, top: self.top + k, terms }
    }

    /// Juxtaposition with `other` placed to the right.
    pub fn tensor(&self, other: &Self) -> Self {
        let (l, r) = (basis(self.bottom, self.top), basis(other.bottom, other.top));
        let to = basis(self.bottom + other.bottom, self.top + other.top);
        let mut terms = BTreeMap::new();
        for (i, x) in &self.terms {
            for (j, y) in &other.terms {
                let m = l.matching(*i).tensor(r.matching(*j));
                terms.insert(to.index_of(&m).expect("tensor matching"), x * y);
            }
        }
        Self { bottom: self.bottom + other.bottom, top: self.top + other.top, terms }
    }

    /// Quantum trace: the Kauffman polynomial of the closure, termwise.
    pub fn qtrace(&self) -> RingElem {
        assert_eq!(self.bottom, self.top, "trace of a non-square morphism");
        let mut out = RingElem::zero();
        for (i, c) in &self.terms {
            let e = tangle::trace_of(self.bottom, *i);
            out = out + c * &expansion_scalar(&e);
        }
        out
    }

    /// Close the last strand on the right, from `K_{n+1}` to `K_n`.
    pub fn partial_close(&self) -> Result<Self, BmwError> {
        if self.bottom != self.top || self.bottom == 0 {
            return Err(BmwError::StrandMismatch { left: self.bottom, right: self.top });
        }
        let n = self.bottom - 1;
        let mut out = Self::zero(n, n);
        for (i, c) in &self.terms {
            let e = tangle::close_last(self.bottom, *i);
            out = out.add(&Self::from_expansion(n, n, &e, c));
        }
        Ok(out)
    }

    /// Apply a fallible map to every coefficient, dropping zeros.
    pub fn try_map_coeffs<E>(&self, mut f: impl FnMut(&RingElem) -> Result<RingElem, E>) -> Result<Self, E> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let x = f(c)?;
            if !x.is_zero() {
                terms.insert(*k, x);
            }
        }
        Ok(Self { bottom: self.bottom, top: self.top, terms })
    }

    /// `Some(c)` when `self = c · other`.
    pub fn ratio_to(&self, other: &Self) -> Option<RingElem> {
        if self.bottom != other.bottom || self.top != other.top {
            return None;
        }
        let (k, y) = other.terms.iter().next()?;
        let x = self.terms.get(k).cloned().unwrap_or_else(RingElem::zero);
        let c = x / y;
        (other.scale(&c) == *self).then_some(c)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(m, c)| {
                let pairs: Vec<Value> = m.to_pairs().into_iter().map(|(a, b)| json!([a, b])).collect();
                json!({"matching": pairs, "coeff": c.to_string()})
            })
            .collect();
        if self.bottom == self.top {
            json!({"n": self.bottom, "terms": terms})
        } else {
            json!({"bottom": self.bottom, "top": self.top, "terms": terms})
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, BmwError> {
        let bad = |what: &str| BmwError::Json(what.to_string());
        let count = |key: &str| v.get(key).and_then(Value::as_u64).map(|x| x as usize);
        let (bottom, top) = match (count("n"), count("bottom"), count("top")) {
            (Some(n), _, _) => (n, n),
            (None, Some(b), Some(t)) => (b, t),
            _ => return Err(bad("missing strand count")),
        };
        let mut out = Self::zero(bottom, top);
        for term in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))? {
            let pairs: Vec<(i32, i32)> = term
                .get("matching")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing matching"))?
                .iter()
                .map(|p| {
                    let a = p.get(0).and_then(Value::as_i64).ok_or_else(|| bad("bad pair"))?;
                    let b = p.get(1).and_then(Value::as_i64).ok_or_else(|| bad("bad pair"))?;
                    Ok((a as i32, b as i32))
                })
                .collect::<Result<_, BmwError>>()?;
            let m = Matching::from_pairs(bottom, top, &pairs)?;
            let c: RingElem = term.get("coeff").and_then(Value::as_str).ok_or_else(|| bad("missing coeff"))?.parse()?;
            out = out.add(&Self::from_matching(&m).scale(&c));
        }
        Ok(out)
    }
}

/// `Σ P_k b_k / (D z^e)` with polynomial numerators. Products and
/// proportionality tests on this form need no gcds.
#[derive(Clone, Debug)]
pub struct Cleared {
    bottom: usize,
    top: usize,
    den: LaurentPoly,
    z_exp: u32,
    terms: BTreeMap<usize, LaurentPoly>,
}

fn z_numer() -> LaurentPoly {
    LaurentPoly::from_terms([((0, 2), 1.into()), ((0, -2), (-1).into())])
}

impl Cleared {
    /// Composite with `self` below `other`.
    pub fn try_mul(&self, other: &Self) -> Result<Self, BmwError> {
        if self.top != other.bottom {
            return Err(BmwError::StrandMismatch { left: self.top, right: other.bottom });
        }
        let (b, t, r) = (self.bottom, self.top, other.top);
        let mut acc: BTreeMap<usize, Vec<LaurentPoly>> = BTreeMap::new();
        for (i, x) in &self.terms {
            // Inner sums over the right factor, then scaled by x once.
            let mut inner: BTreeMap<(usize, u32), LaurentPoly> = BTreeMap::new();
            for (j, y) in &other.terms {
                let e = tangle::compose(b, t, r, *i, *j);
                for (k, p) in &e.terms {
                    let term = y.mul(p);
                    inner.entry((*k, e.z_exp)).and_modify(|s| *s = s.add(&term)).or_insert(term);
                }
            }
            for ((k, ez), poly) in inner {
                let slots = acc.entry(k).or_default();
                if slots.len() <= ez as usize {
                    slots.resize(ez as usize + 1, LaurentPoly::zero());
                }
                slots[ez as usize] = slots[ez as usize].add(&poly.mul(x));
            }
        }
        let top_exp = acc.values().map(|v| v.len().saturating_sub(1)).max().unwrap_or(0);
        let z = z_numer();
        let mut terms = BTreeMap::new();
        for (k, slots) in acc {
            let mut num = LaurentPoly::zero();
            for (e, p) in slots.iter().enumerate() {
                if !p.is_zero() {
                    num = num.add(&p.mul(&z.pow((top_exp - e) as u32)));
                }
            }
            if !num.is_zero() {
                terms.insert(k, num);
            }
        }
        let z_exp = self.z_exp + other.z_exp + top_exp as u32;
        Ok(Self { bottom: b, top: r, den: self.den.mul(&other.den), z_exp, terms })
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("composable morphisms")
    }

    fn full_den(&self) -> LaurentPoly {
        self.den.mul(&z_numer().pow(self.z_exp))
    }

    /// Canonical form, reducing every coefficient.
    pub fn reduce(&self) -> AlgElem {
        let den = self.full_den();
        let terms = self.terms.iter().map(|(k, p)| (*k, RingElem::from_parts(p.clone(), den.clone()))).collect();
        AlgElem { bottom: self.bottom, top: self.top, terms }
    }

    /// `Some(c)` when `self = c · other`; zero is a multiple of everything.
    pub fn ratio_to(&self, other: &Self) -> Option<RingElem> {
        if self.bottom != other.bottom || self.top != other.top {
            return None;
        }
        if self.terms.is_empty() {
            return Some(RingElem::zero());
        }
        let (ds, d_o) = (self.full_den(), other.full_den());
        let (k, y) = other.terms.iter().next()?;
        let x = self.terms.get(k)?;
        let c = RingElem::from_parts(x.mul(&d_o), y.mul(&ds));
        // X_k · cd · D_o = cn · Y_k · D_s for every k.
        let (lhs, rhs) = (c.denom().mul(&d_o), c.numer().mul(&ds));
        let keys: std::collections::BTreeSet<&usize> = self.terms.keys().chain(other.terms.keys()).collect();
        let zero = LaurentPoly::zero();
        keys.into_iter()
            .all(|k| {
                let (x, y) = (self.terms.get(k).unwrap_or(&zero), other.terms.get(k).unwrap_or(&zero));
                x.mul(&lhs) == y.mul(&rhs)
            })
            .then_some(c)
    }
}

/// `1 / z^e` written as `num / den` with polynomial parts.
fn z_power_den(e: u32) -> (LaurentPoly, LaurentPoly) {
    let num = LaurentPoly::monomial(1, (0, 2 * e as i32));
    let den = LaurentPoly::from_terms([((0, 4), 1.into()), ((0, 0), (-1).into())]).pow(e);
    (num, den)
}

fn expansion_scalar(e: &tangle::Expansion) -> RingElem {
    match e.terms.first() {
        None => RingElem::zero(),
        Some((_, p)) => {
            let (znum, zden) = z_power_den(e.z_exp);
            RingElem::from_parts(p.mul(&znum), zden)
        }
    }
}

/// The element `τ_n`: strand `n` travelling around strands `1..n-1`, with the
/// framing factor `α` so that it acts on path idempotents by `αs^{2c}` or `α^{-1}s^{-2c}`.
pub fn jm_element(n: usize) -> AlgElem {
    let mut ops: Vec<Op> = (0..n.saturating_sub(1)).rev().map(|i| Op::Cross(i, true)).collect();
    ops.extend((0..n.saturating_sub(1)).map(|i| Op::Cross(i, true)));
    AlgElem::from_ops(n, &ops).scale(&RingElem::alpha())
}

/// `δ`, the value of a free loop.
pub fn delta() -> RingElem {
    loop_value()
}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(m, c)| format!("({c}){m:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
