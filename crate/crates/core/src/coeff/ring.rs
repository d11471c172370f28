use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::{div_exact, gcd};
use super::poly::{Exp, LaurentPoly};
use super::CoeffError;

/// Element of `ℚ(A, v)` with `A = α^{1/2}`, `v = s^{1/2}`, kept in canonical form.
///
/// Canonical form: `num` and `den` are coprime in `ℤ[A^{±1}, v^{±1}]`, the
/// denominator has no monomial factor and a positive leading coefficient, and
/// the integer contents of numerator and denominator are coprime. Two elements
/// are equal iff their canonical forms coincide.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RingElem {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self { num: LaurentPoly::constant(n), den: LaurentPoly::one() }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_parts(LaurentPoly::constant(q.numer().clone()), LaurentPoly::constant(q.denom().clone()))
    }

    /// `c · A^i v^j`
    pub fn monomial(c: i64, e: Exp) -> Self {
        Self { num: LaurentPoly::monomial(c, e), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    /// `α = A²`
    pub fn alpha() -> Self {
        Self::monomial(1, (2, 0))
    }

    /// `s = v²`
    pub fn s() -> Self {
        Self::monomial(1, (0, 2))
    }

    /// `α^i`
    pub fn alpha_pow(i: i32) -> Self {
        Self::monomial(1, (2 * i, 0))
    }

    /// `s^{k/2}` (the exponent is given in half-units).
    pub fn s_half_pow(k: i32) -> Self {
        Self::monomial(1, (0, k))
    }

    /// `s - s^{-1}`
    pub fn z() -> Self {
        Self::from_poly(LaurentPoly::from_terms([((0, 2), BigInt::one()), ((0, -2), -BigInt::one())]))
    }

    /// Reduces `num / den` to canonical form. Panics if `den` is zero.
    pub fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (div_exact(&num, &g).expect("gcd divides"), div_exact(&den, &g).expect("gcd divides"))
        };
        Self::normalize_units(num, den)
    }

    /// Normalizes an already coprime pair (monomial shift, sign, integer content).
    fn normalize_units(mut num: LaurentPoly, mut den: LaurentPoly) -> Self {
        let (ma, mv) = den.min_exps();
        if (ma, mv) != (0, 0) {
            den = den.shift((-ma, -mv));
            num = num.shift((-ma, -mv));
        }
        if !den.leading_positive() {
            den = den.neg();
            num = num.neg();
        }
        let g = num.content().gcd(&den.content());
        if !g.is_one() && !g.is_zero() {
            num = num.div_int(&g);
            den = den.div_int(&g);
        }
        Self { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Rational value if the element is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalize_units(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inv().expect("inverse of zero") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, CoeffError> {
        Ok(self * &other.inv()?)
    }

    /// Applies the automorphism `A ↦ ±A`, `v ↦ ±v`.
    pub fn flip_signs(&self, neg_a: bool, neg_v: bool) -> Self {
        Self::from_parts(self.num.flip_signs(neg_a, neg_v), self.den.flip_signs(neg_a, neg_v))
    }

    /// Applies the ring map `A ↦ A^p`, `v ↦ v^q` for `p, q ∈ {±1}` or any
    /// nonzero rescaling.
    pub fn rescale(&self, p: i32, q: i32) -> Self {
        Self::from_parts(self.num.rescale(p, q), self.den.rescale(p, q))
    }

    pub(crate) fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let n = self.num.add(&other.num);
            if self.den.is_one() {
                return Self { num: n, den: LaurentPoly::one() };
            }
            return Self::from_parts(n, self.den.clone());
        }
        if self.den.is_one() {
            let n = self.num.mul(&other.den).add(&other.num);
            return Self::from_parts(n, other.den.clone());
        }
        if other.den.is_one() {
            let n = other.num.mul(&self.den).add(&self.num);
            return Self::from_parts(n, self.den.clone());
        }
        let g = gcd(&self.den, &other.den);
        let d1 = div_exact(&self.den, &g).expect("gcd divides");
        let d2 = div_exact(&other.den, &g).expect("gcd divides");
        let n = self.num.mul(&d2).add(&other.num.mul(&d1));
        Self::from_parts(n, self.den.mul(&d2))
    }

    pub(crate) fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::normalize_units(self.num.mul(&other.num), LaurentPoly::one());
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n1 = if g1.is_one() { self.num.clone() } else { div_exact(&self.num, &g1).unwrap() };
        let d2 = if g1.is_one() { other.den.clone() } else { div_exact(&other.den, &g1).unwrap() };
        let n2 = if g2.is_one() { other.num.clone() } else { div_exact(&other.num, &g2).unwrap() };
        let d1 = if g2.is_one() { self.den.clone() } else { div_exact(&self.den, &g2).unwrap() };
        Self::normalize_units(n1.mul(&n2), d1.mul(&d2))
    }

    /// Canonicalizes an arbitrary representative (idempotent on canonical input).
    pub fn canonicalize(&self) -> Self {
        Self::from_parts(self.num.clone(), self.den.clone())
    }
}

/// Accumulator for sums of fractions: numerators sharing a denominator are
/// added as polynomials and reduced once.
#[derive(Clone, Default)]
pub struct RingSum {
    groups: HashMap<LaurentPoly, LaurentPoly>,
}

impl RingSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `num / den`; `den` must be nonzero.
    pub fn add_parts(&mut self, num: LaurentPoly, den: LaurentPoly) {
        if num.is_zero() {
            return;
        }
        match self.groups.get_mut(&den) {
            Some(slot) => *slot = slot.add(&num),
            None => {
                self.groups.insert(den, num);
            }
        }
    }

    pub fn add(&mut self, x: &RingElem) {
        self.add_parts(x.num.clone(), x.den.clone());
    }

    /// Adds `a · b · p / q`.
    pub fn add_product(&mut self, a: &RingElem, b: &RingElem, p: &LaurentPoly, q: &LaurentPoly) {
        let num = a.num.mul(&b.num).mul(p);
        let den = a.den.mul(&b.den).mul(q);
        self.add_parts(num, den);
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    /// The grouped `(denominator, numerator)` pairs, unreduced.
    pub fn into_parts(self) -> impl Iterator<Item = (LaurentPoly, LaurentPoly)> {
        self.groups.into_iter().filter(|(_, n)| !n.is_zero())
    }

    pub fn finish(self) -> RingElem {
        let mut parts: Vec<RingElem> = self
            .groups
            .into_iter()
            .filter(|(_, n)| !n.is_zero())
            .map(|(d, n)| RingElem::from_parts(n, d))
            .collect();
        // Pairwise summation keeps intermediate denominators small.
        while parts.len() > 1 {
            let mut next = Vec::with_capacity(parts.len() / 2 + 1);
            let mut it = parts.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(a + b),
                    None => next.push(a),
                }
            }
            parts = next;
        }
        parts.pop().unwrap_or_else(RingElem::zero)
    }
}

impl Default for RingElem {
    fn default() -> Self {
        Self::zero()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&RingElem> for &RingElem {
            type Output = RingElem;
            fn $m(self, rhs: &RingElem) -> RingElem {
                let f: fn(&RingElem, &RingElem) -> RingElem = $body;
                f(self, rhs)
            }
        }
        impl $tr<RingElem> for RingElem {
            type Output = RingElem;
            fn $m(self, rhs: RingElem) -> RingElem {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RingElem> for RingElem {
            type Output = RingElem;
            fn $m(self, rhs: &RingElem) -> RingElem {
                (&self).$m(rhs)
            }
        }
        impl $tr<RingElem> for &RingElem {
            type Output = RingElem;
            fn $m(self, rhs: RingElem) -> RingElem {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&-b));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a.try_div(b).expect("division by zero"));

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

impl From<i64> for RingElem {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentPoly| {
            if p.len() > 1 || p.terms().first().is_some_and(|(_, c)| c.is_negative()) {
                format!("({})", p)
            } else {
                p.to_string()
            }
        };
        write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn parse_poly(s: &str) -> Result<LaurentPoly, CoeffError> {
    let err = || CoeffError::Parse(s.to_string());
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let t = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).map(str::to_string).unwrap_or(t);
    if t.is_empty() {
        return Err(err());
    }
    // Split into signed terms; a '-' directly after '^' belongs to an exponent.
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    let chars: Vec<char> = t.chars().collect();
    for (i, &c) in chars.iter().enumerate() {
        if (c == '+' || c == '-') && i > 0 && chars[i - 1] != '^' {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(c);
    }
    terms.push(cur);
    let mut out = Vec::new();
    for term in terms {
        let (neg, body) = match term.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, term.strip_prefix('+').unwrap_or(&term)),
        };
        let mut coeff = BigInt::one();
        let mut e: Exp = (0, 0);
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(err());
            }
            let (base, exp) = match factor.split_once('^') {
                Some((b, x)) => (b, x.parse::<i32>().map_err(|_| err())?),
                None => (factor, 1),
            };
            match base {
                "a" => e.0 += exp,
                "v" => e.1 += exp,
                _ => coeff *= base.parse::<BigInt>().map_err(|_| err())?,
            }
        }
        out.push((e, if neg { -coeff } else { coeff }));
    }
    Ok(LaurentPoly::from_terms(out))
}

/// Parses the text rendering produced by `Display`.
impl FromStr for RingElem {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(" / ") {
            Some((n, d)) => {
                let den = parse_poly(d)?;
                if den.is_zero() {
                    return Err(CoeffError::DivisionByZero);
                }
                Ok(Self::from_parts(parse_poly(n)?, den))
            }
            None => Ok(Self::from_poly(parse_poly(s)?).canonicalize()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_reduces() {
        let z = RingElem::z();
        let s = RingElem::s();
        // (s^2 - s^-2) / (s - s^-1) = s + s^-1
        let x = (&s * &s - (&s * &s).inv().unwrap()) / z;
        assert_eq!(x, &s + &s.inv().unwrap());
        assert!(x.is_laurent());
    }

    #[test]
    fn inverse_and_sign_normalization() {
        let x = RingElem::from_int(-3) / (RingElem::alpha() - RingElem::one());
        let y = RingElem::from_int(3) / (RingElem::one() - RingElem::alpha());
        assert_eq!(x, y);
        assert_eq!(&x * &x.inv().unwrap(), RingElem::one());
        assert_eq!(RingElem::from_int(2) / RingElem::from_int(4), RingElem::from_int(1) / RingElem::from_int(2));
    }

    #[test]
    fn parse_roundtrip() {
        let x = (RingElem::alpha() - RingElem::alpha().inv().unwrap()) / RingElem::z() + RingElem::one();
        let back: RingElem = x.to_string().parse().unwrap();
        assert_eq!(back, x);
        let y: RingElem = "-2*a^-3*v + 7".parse().unwrap();
        assert_eq!(y.to_string(), "7 - 2*a^-3*v");
    }
}
