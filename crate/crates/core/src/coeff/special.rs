use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::LaurentPoly;
use super::ring::RingElem;
use super::CoeffError;

/// Ring morphisms out of the generic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Specialization {
    Generic,
    /// `α = s^{2n}`
    B(u32),
    /// `α = s^{2n-1}`
    D(u32),
    /// `α = -s^{2n+1}` (only on expressions in integer powers of `α`)
    C(u32),
    /// `α = s^{N-1}`, then `s → 1`
    Brauer(u32),
    /// `v = ζ` a primitive root of unity of the given order, `A = v^{alpha_exp}`.
    /// Values are returned as the reduced representative in `ℚ[v]/Φ(v)`.
    RootOfUnity { order: u32, alpha_exp: i32 },
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialization::Generic => write!(f, "generic"),
            Specialization::B(n) => write!(f, "B:{n}"),
            Specialization::D(n) => write!(f, "D:{n}"),
            Specialization::C(n) => write!(f, "C:{n}"),
            Specialization::Brauer(n) => write!(f, "Brauer:{n}"),
            Specialization::RootOfUnity { order, alpha_exp } => write!(f, "root:{order}:{alpha_exp}"),
        }
    }
}

/// Parses `generic`, `B:n`, `C:n`, `D:n`, `Brauer:N` and `root:K:a`.
impl FromStr for Specialization {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || CoeffError::Parse(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| parts.get(i).ok_or_else(err)?.parse::<u32>().map_err(|_| err());
        let sp = match parts[0].to_ascii_lowercase().as_str() {
            "generic" if parts.len() == 1 => Specialization::Generic,
            "b" if parts.len() == 2 => Specialization::B(num(1)?),
            "c" if parts.len() == 2 => Specialization::C(num(1)?),
            "d" if parts.len() == 2 => Specialization::D(num(1)?),
            "brauer" | "o" if parts.len() == 2 => Specialization::Brauer(num(1)?),
            "root" if parts.len() == 3 => Specialization::RootOfUnity {
                order: num(1)?,
                alpha_exp: parts[2].parse().map_err(|_| err())?,
            },
            _ => return Err(err()),
        };
        match sp {
            Specialization::B(0)
            | Specialization::C(0)
            | Specialization::D(0)
            | Specialization::Brauer(0)
            | Specialization::RootOfUnity { order: 0, .. } => Err(err()),
            sp => Ok(sp),
        }
    }
}

/// Image of `x` under the specialization.
pub fn specialize(x: &RingElem, sp: Specialization) -> Result<RingElem, CoeffError> {
    let pole = || CoeffError::PoleAtSpecialization(sp.to_string());
    let (num, den) = (x.numer(), x.denom());
    let subst = |k: i32| -> Result<RingElem, CoeffError> {
        let d = den.subst_a(k, false);
        if d.is_zero() {
            return Err(pole());
        }
        Ok(RingElem::from_parts(num.subst_a(k, false), d))
    };
    match sp {
        Specialization::Generic => Ok(x.clone()),
        Specialization::B(n) => subst(2 * n as i32),
        Specialization::D(n) => subst(2 * n as i32 - 1),
        Specialization::C(n) => {
            if !num.a_exponents_even() || !den.a_exponents_even() {
                return Err(CoeffError::HalfPowerSign(sp.to_string()));
            }
            // α^k ↦ (-1)^k v^{(4n+2)k}
            let step = 4 * n as i32 + 2;
            let map = |p: &LaurentPoly| {
                LaurentPoly::from_terms(p.terms().iter().map(|((i, j), c)| {
                    let k = i / 2;
                    ((0, j + k * step), if k.rem_euclid(2) == 1 { -c } else { c.clone() })
                }))
            };
            let d = map(den);
            if d.is_zero() {
                return Err(pole());
            }
            Ok(RingElem::from_parts(map(num), d))
        }
        Specialization::Brauer(n) => {
            let r = subst(n as i32 - 1)?;
            let d = r.denom().coefficient_sum();
            if d.is_zero() {
                return Err(pole());
            }
            Ok(RingElem::from_rational(&BigRational::new(r.numer().coefficient_sum(), d)))
        }
        Specialization::RootOfUnity { order, alpha_exp } => {
            let cyc = Cyclotomic::new(order as usize);
            let d = cyc.eval(den, alpha_exp);
            if d.iter().all(Zero::is_zero) {
                return Err(pole());
            }
            let n = cyc.eval(num, alpha_exp);
            let inv = cyc.inverse(&d);
            Ok(cyc.to_ring(&cyc.mul(&n, &inv)))
        }
    }
}

/// Applies `α ↦ -α^{-1}` to an expression in integer powers of `α`.
pub fn alpha_to_neg_inv(x: &RingElem) -> Option<RingElem> {
    let map = |p: &LaurentPoly| -> Option<LaurentPoly> {
        if !p.a_exponents_even() {
            return None;
        }
        Some(LaurentPoly::from_terms(p.terms().iter().map(|((i, j), c)| {
            ((-i, *j), if (i / 2).rem_euclid(2) == 1 { -c } else { c.clone() })
        })))
    };
    Some(RingElem::from_parts(map(x.numer())?, map(x.denom())?))
}

/// Applies `s ↦ -s^{-1}` to an expression in integer powers of `s`.
pub fn s_to_neg_inv(x: &RingElem) -> Option<RingElem> {
    let map = |p: &LaurentPoly| -> Option<LaurentPoly> {
        if p.terms().iter().any(|((_, j), _)| j.rem_euclid(2) == 1) {
            return None;
        }
        Some(LaurentPoly::from_terms(p.terms().iter().map(|((i, j), c)| {
            ((*i, -j), if (j / 2).rem_euclid(2) == 1 { -c } else { c.clone() })
        })))
    };
    Some(RingElem::from_parts(map(x.numer())?, map(x.denom())?))
}

type QPoly = Vec<BigRational>;

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Arithmetic in `ℚ[x]/Φ_K(x)`.
struct Cyclotomic {
    order: usize,
    phi: QPoly,
}

impl Cyclotomic {
    fn new(order: usize) -> Self {
        Self { order, phi: cyclotomic_poly(order).into_iter().map(BigRational::from_integer).collect() }
    }

    fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn reduce(&self, mut p: QPoly) -> QPoly {
        let d = self.degree();
        // Φ is monic.
        while p.len() > d {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let off = p.len() - d;
            for (k, c) in self.phi[..d].iter().enumerate() {
                p[off + k] -= &top * c;
            }
        }
        p.resize(d, BigRational::zero());
        p
    }

    fn eval(&self, p: &LaurentPoly, alpha_exp: i32) -> QPoly {
        let k = self.order as i64;
        let mut out = vec![BigRational::zero(); self.order];
        for ((i, j), c) in p.terms() {
            let e = (*j as i64 + *i as i64 * alpha_exp as i64).rem_euclid(k) as usize;
            out[e] += BigRational::from_integer(c.clone());
        }
        self.reduce(out)
    }

    fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        let mut out = vec![BigRational::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.reduce(out)
    }

    /// Inverse of a nonzero element via the extended Euclidean algorithm.
    fn inverse(&self, a: &QPoly) -> QPoly {
        let (mut r0, mut r1) = (self.phi.clone(), a.clone());
        trim(&mut r1);
        let (mut t0, mut t1): (QPoly, QPoly) = (vec![], vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let c = r1[0].clone();
        let scaled: QPoly = t1.iter().map(|x| x / &c).collect();
        self.reduce(scaled)
    }

    fn to_ring(&self, p: &QPoly) -> RingElem {
        let den = p.iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
        let num = LaurentPoly::from_terms(
            p.iter().enumerate().map(|(j, c)| ((0, j as i32), c.numer() * (&den / c.denom()))),
        );
        RingElem::from_parts(num, LaurentPoly::constant(den))
    }
}

fn poly_mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(&mut out);
    out
}

fn poly_divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(db).max(1)];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lead;
        for (i, y) in b.iter().enumerate() {
            r[k + i] -= &c * y;
        }
        q[k] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Integer coefficients of the `k`-th cyclotomic polynomial, lowest degree first.
fn cyclotomic_poly(k: usize) -> Vec<BigInt> {
    // x^k - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![BigInt::zero(); k + 1];
    p[0] = BigInt::from(-1);
    p[k] = BigInt::one();
    for d in 1..k {
        if k % d == 0 {
            let q = cyclotomic_poly(d);
            p = int_div_monic(&p, &q);
        }
    }
    p
}

fn int_div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].clone();
        for (i, y) in b.iter().enumerate() {
            r[k + i] -= &c * y;
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{loop_value, qint, ybracket};

    #[test]
    fn loop_value_images() {
        for n in 1..6 {
            assert_eq!(specialize(&loop_value(), Specialization::Brauer(n)).unwrap(), RingElem::from_int(n as i64));
        }
        let s = RingElem::s();
        let expect = &s + RingElem::one() + s.inv().unwrap();
        assert_eq!(specialize(&loop_value(), Specialization::B(1)).unwrap(), expect);
    }

    #[test]
    fn brackets_under_specialization() {
        for n in 1..6 {
            for d in -3..4 {
                let x = specialize(&ybracket(d), Specialization::Brauer(n)).unwrap();
                assert_eq!(x, RingElem::from_int(n as i64 - 1 + d as i64));
            }
            for m in -3..5 {
                assert_eq!(specialize(&qint(m), Specialization::Brauer(n)).unwrap(), RingElem::from_int(m as i64));
            }
        }
        let s = RingElem::s();
        assert_eq!(specialize(&ybracket(0), Specialization::B(1)).unwrap(), &s + s.inv().unwrap());
        let x = RingElem::one() / qint(1);
        assert_eq!(specialize(&x, Specialization::C(2)).unwrap(), RingElem::one());
    }

    #[test]
    fn c_series_rejects_half_powers() {
        let x = RingElem::monomial(1, (1, 0));
        assert!(matches!(specialize(&x, Specialization::C(1)), Err(CoeffError::HalfPowerSign(_))));
    }

    #[test]
    fn brauer_pole() {
        // 1 / (α - 1) at N = 1 has α = 1.
        let x = RingElem::one() / (RingElem::alpha() - RingElem::one());
        assert!(matches!(specialize(&x, Specialization::Brauer(1)), Err(CoeffError::PoleAtSpecialization(_))));
    }

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic_poly(8), vec![1, 0, 0, 0, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
        // v = ζ_8 so s = i and [2] = s + s^{-1} = 0.
        let sp = Specialization::RootOfUnity { order: 8, alpha_exp: 3 };
        assert!(specialize(&qint(2), sp).unwrap().is_zero());
        assert!(!specialize(&qint(3), sp).unwrap().is_zero());
        // Inverse round trip.
        let x = qint(3) + RingElem::alpha();
        let y = specialize(&x, sp).unwrap();
        let yi = specialize(&x.inv().unwrap(), sp).unwrap();
        let cyc = Cyclotomic::new(8);
        let prod = cyc.mul(&cyc.eval(y.numer(), 0), &cyc.eval(yi.numer(), 0));
        let den = y.denom().coefficient_sum() * yi.denom().coefficient_sum();
        assert_eq!(prod[0], BigRational::from_integer(den));
        assert!(prod[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn parse_roundtrip() {
        for sp in [
            Specialization::Generic,
            Specialization::B(2),
            Specialization::C(1),
            Specialization::D(3),
            Specialization::Brauer(4),
            Specialization::RootOfUnity { order: 8, alpha_exp: -1 },
        ] {
            assert_eq!(sp.to_string().parse::<Specialization>().unwrap(), sp);
        }
        assert!("B:0".parse::<Specialization>().is_err());
    }
}
