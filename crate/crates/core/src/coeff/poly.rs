use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exponent pair `(i, j)` of the monomial `A^i v^j`, where `A = α^{1/2}` and `v = s^{1/2}`.
pub type Exp = (i32, i32);

/// Laurent polynomial in `A`, `v` with integer coefficients.
///
/// Terms are kept sorted by exponent (lexicographic, `A` first) with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Exp, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn monomial(c: impl Into<BigInt>, e: Exp) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exp, BigInt)>) -> Self {
        let mut v: Vec<(Exp, BigInt)> = terms.into_iter().collect();
        Self::normalize_vec(&mut v);
        Self { terms: v }
    }

    fn normalize_vec(v: &mut Vec<(Exp, BigInt)>) {
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Exp, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v.drain(..) {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        *v = out;
    }

    pub fn terms(&self) -> &[(Exp, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant value, if the polynomial has no non-trivial monomials.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [((0, 0), c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Term with the largest exponent in lexicographic order.
    pub fn leading(&self) -> Option<&(Exp, BigInt)> {
        self.terms.last()
    }

    pub fn min_exps(&self) -> Exp {
        let mut a = i32::MAX;
        let mut v = i32::MAX;
        for ((i, j), _) in &self.terms {
            a = a.min(*i);
            v = v.min(*j);
        }
        if self.terms.is_empty() {
            (0, 0)
        } else {
            (a, v)
        }
    }

    pub fn max_exps(&self) -> Exp {
        let mut a = i32::MIN;
        let mut v = i32::MIN;
        for ((i, j), _) in &self.terms {
            a = a.max(*i);
            v = v.max(*j);
        }
        if self.terms.is_empty() {
            (0, 0)
        } else {
            (a, v)
        }
    }

    /// Gcd of the integer coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn shift(&self, by: Exp) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((i, j), c)| ((i + by.0, j + by.1), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Divides every coefficient by `k`, which must divide them exactly.
    pub fn div_int(&self, k: &BigInt) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    debug_assert!((c % k).is_zero());
                    (*e, c / k)
                })
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (e, c) = &b[j];
                    out.push((*e, if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            return Self {
                terms: self
                    .terms
                    .iter()
                    .map(|((i, j), d)| ((i + e.0, j + e.1), d * c))
                    .collect(),
            };
        }
        if self.is_monomial() {
            return other.mul(self);
        }
        if let Some(p) = self.mul_small(other) {
            return p;
        }
        let mut v = Vec::with_capacity(self.terms.len() * other.terms.len());
        for ((i, j), c) in &self.terms {
            for ((k, l), d) in &other.terms {
                v.push(((i + k, j + l), c * d));
            }
        }
        Self::normalize_vec(&mut v);
        Self { terms: v }
    }

    /// Product via a dense `i128` grid when all coefficients are below `2^40`.
    fn mul_small(&self, other: &Self) -> Option<Self> {
        const LIMIT: i64 = 1 << 40;
        let small = |p: &Self| -> Option<Vec<i64>> {
            p.terms.iter().map(|(_, c)| c.to_i64().filter(|x| x.abs() < LIMIT)).collect()
        };
        let (ca, cb) = (small(self)?, small(other)?);
        let (lo1, hi1) = (self.min_exps(), self.max_exps());
        let (lo2, hi2) = (other.min_exps(), other.max_exps());
        let (a0, v0) = (lo1.0 + lo2.0, lo1.1 + lo2.1);
        let wa = (hi1.0 + hi2.0 - a0 + 1) as usize;
        let wv = (hi1.1 + hi2.1 - v0 + 1) as usize;
        if wa * wv > 1 << 16 {
            return None;
        }
        let mut grid = vec![0i128; wa * wv];
        for (((i, j), _), x) in self.terms.iter().zip(&ca) {
            for (((k, l), _), y) in other.terms.iter().zip(&cb) {
                let idx = (i + k - a0) as usize * wv + (j + l - v0) as usize;
                grid[idx] += *x as i128 * *y as i128;
            }
        }
        let terms = grid
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(idx, c)| (((idx / wv) as i32 + a0, (idx % wv) as i32 + v0), BigInt::from(c)))
            .collect();
        Some(Self { terms })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes `A ↦ sign · v^k`, yielding a polynomial in `v` alone.
    pub fn subst_a(&self, k: i32, negative: bool) -> Self {
        Self::from_terms(self.terms.iter().map(|((i, j), c)| {
            let c = if negative && i.rem_euclid(2) == 1 { -c } else { c.clone() };
            ((0, j + i * k), c)
        }))
    }

    /// Applies `v ↦ -v` combined with `A ↦ ±A` (both are ring automorphisms).
    pub fn flip_signs(&self, neg_a: bool, neg_v: bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((i, j), c)| {
                    let odd = (neg_a && i.rem_euclid(2) == 1) ^ (neg_v && j.rem_euclid(2) == 1);
                    ((*i, *j), if odd { -c } else { c.clone() })
                })
                .collect(),
        }
    }

    /// Substitutes `A ↦ A^{p}`, `v ↦ v^{q}` (exponent rescaling, `p, q` may be negative).
    pub fn rescale(&self, p: i32, q: i32) -> Self {
        Self::from_terms(self.terms.iter().map(|((i, j), c)| ((i * p, j * q), c.clone())))
    }

    /// True if every exponent of `A` is even.
    pub fn a_exponents_even(&self) -> bool {
        self.terms.iter().all(|((i, _), _)| i.rem_euclid(2) == 0)
    }

    /// Sum of the coefficients (evaluation at `A = v = 1`).
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.clone()).sum()
    }

    /// Leading coefficient is positive.
    pub fn leading_positive(&self) -> bool {
        self.leading().map(|(_, c)| c.is_positive()).unwrap_or(true)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn fmt_monomial(e: Exp) -> String {
    let mut parts = Vec::new();
    if e.0 == 1 {
        parts.push("a".to_string());
    } else if e.0 != 0 {
        parts.push(format!("a^{}", e.0));
    }
    if e.1 == 1 {
        parts.push("v".to_string());
    } else if e.1 != 0 {
        parts.push(format!("v^{}", e.1));
    }
    parts.join("*")
}

/// Terms are printed by descending exponent, e.g. `a^2*v^-4 - 3*v^2 + 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = fmt_monomial(*e);
            if mono.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", abs, mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((i32, i32), i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    #[test]
    fn arithmetic_cancels_and_sorts() {
        let x = p(&[((1, 0), 1), ((0, 2), -1)]);
        let y = p(&[((0, 2), 1), ((1, 0), 1)]);
        assert_eq!(x.add(&y), p(&[((1, 0), 2)]));
        assert_eq!(x.sub(&x), LaurentPoly::zero());
        // (A - v^2)(A + v^2) = A^2 - v^4
        assert_eq!(x.mul(&y), p(&[((2, 0), 1), ((0, 4), -1)]));
    }

    #[test]
    fn display_format() {
        let x = p(&[((2, -4), 1), ((0, 2), -3), ((0, 0), 1)]);
        assert_eq!(x.to_string(), "a^2*v^-4 - 3*v^2 + 1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[((0, 0), -1)]).to_string(), "-1");
    }

    #[test]
    fn substitution() {
        // A - A^-1 with A -> -v^2 gives -v^2 + v^-2
        let x = p(&[((1, 0), 1), ((-1, 0), -1)]);
        assert_eq!(x.subst_a(2, true), p(&[((0, 2), -1), ((0, -2), 1)]));
    }
}
