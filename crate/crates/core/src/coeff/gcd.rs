//! Gcd and exact division in `ℤ[A^{±1}, v^{±1}]`.
//!
//! Polynomials are shifted into `ℤ[A, v]` and viewed as dense polynomials in
//! `A` over `ℤ[v]`. Gcds are computed by a dense modular algorithm: images
//! modulo word-size primes are obtained by evaluation at points of `F_p` and
//! interpolation, combined by Chinese remaindering, and certified by trial
//! division. Units
//! of the Laurent ring are monomials, so results are normalized to have no
//! monomial factor, positive leading coefficient, and full integer content.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::{Exp, LaurentPoly};

/// Dense univariate polynomial over ℤ, index = degree, no trailing zeros.
type Zp = Vec<BigInt>;
/// Dense polynomial in the main variable with `Zp` coefficients.
type Bp = Vec<Zp>;

fn zp_trim(p: &mut Zp) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}




fn zp_mul(a: &Zp, b: &Zp) -> Zp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zp_trim(&mut out);
    out
}

fn zp_sub(a: &Zp, b: &Zp) -> Zp {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    zp_trim(&mut out);
    out
}


fn zp_content(a: &Zp) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn zp_div_int(a: &Zp, k: &BigInt) -> Zp {
    a.iter().map(|c| c / k).collect()
}

/// Exact division in ℤ[y]; `None` if `b` does not divide `a`.
fn zp_divexact(a: &Zp, b: &Zp) -> Option<Zp> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    if b.len() == 1 {
        let k = &b[0];
        if a.iter().all(|c| (c % k).is_zero()) {
            return Some(zp_div_int(a, k));
        }
        return None;
    }
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    let lb = b.last().unwrap();
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let (qc, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &qc * c;
        }
        q[shift] = qc;
        zp_trim(&mut r);
    }
    if r.is_empty() {
        zp_trim(&mut q);
        Some(q)
    } else {
        None
    }
}

mod modular;

fn bp_trim(p: &mut Bp) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn bp_divexact(a: &Bp, b: &Bp) -> Option<Bp> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.clone();
    let mut q: Bp = vec![Vec::new(); a.len() - b.len() + 1];
    let lb = b.last().unwrap();
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let qc = zp_divexact(r.last().unwrap(), lb)?;
        for (i, c) in b.iter().enumerate() {
            let t = zp_mul(&qc, c);
            r[i + shift] = zp_sub(&r[i + shift], &t);
        }
        q[shift] = qc;
        bp_trim(&mut r);
    }
    if r.is_empty() {
        bp_trim(&mut q);
        Some(q)
    } else {
        None
    }
}

/// Dense form of a Laurent polynomial after removing its monomial factor `A^e.0 v^e.1`.
fn to_dense(p: &LaurentPoly) -> (Bp, Exp) {
    let (ma, mv) = p.min_exps();
    let (xa, _) = p.max_exps();
    let mut out: Bp = vec![Vec::new(); (xa - ma + 1) as usize];
    for ((i, j), c) in p.terms() {
        let row = &mut out[(i - ma) as usize];
        let col = (j - mv) as usize;
        if row.len() <= col {
            row.resize(col + 1, BigInt::zero());
        }
        row[col] = c.clone();
    }
    (out, (ma, mv))
}

fn from_dense(p: &Bp, shift: Exp) -> LaurentPoly {
    let mut terms = Vec::new();
    for (i, row) in p.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                terms.push(((i as i32 + shift.0, j as i32 + shift.1), c.clone()));
            }
        }
    }
    LaurentPoly::from_terms(terms)
}

/// Gcd in the Laurent ring, normalized: no monomial factor, positive leading
/// coefficient. `gcd(0, 0) = 0`.
pub fn gcd(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return normalize_unit(q);
    }
    if q.is_zero() {
        return normalize_unit(p);
    }
    if p.is_monomial() || q.is_monomial() {
        return LaurentPoly::constant(p.content().gcd(&q.content()));
    }
    if p == q {
        return normalize_unit(p);
    }
    let (dp, _) = to_dense(p);
    let (dq, _) = to_dense(q);
    let g = modular::bz_gcd(&dp, &dq);
    normalize_unit(&from_dense(&g, (0, 0)))
}

/// Removes the monomial factor and makes the leading coefficient positive.
pub fn normalize_unit(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let (ma, mv) = p.min_exps();
    let q = p.shift((-ma, -mv));
    if q.leading_positive() {
        q
    } else {
        q.neg()
    }
}

/// Exact quotient `p / q` in the Laurent ring, or `None` if `q` does not divide `p`.
pub fn div_exact(p: &LaurentPoly, q: &LaurentPoly) -> Option<LaurentPoly> {
    assert!(!q.is_zero(), "division by zero");
    if p.is_zero() {
        return Some(LaurentPoly::zero());
    }
    if q.is_monomial() {
        let ((i, j), c) = &q.terms()[0];
        if p.terms().iter().all(|(_, d)| (d % c).is_zero()) {
            return Some(p.div_int(c).shift((-i, -j)));
        }
        return None;
    }
    let (dp, sp) = to_dense(p);
    let (dq, sq) = to_dense(q);
    let d = bp_divexact(&dp, &dq)?;
    Some(from_dense(&d, (sp.0 - sq.0, sp.1 - sq.1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((i32, i32), i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    #[test]
    fn gcd_of_products() {
        // f = A^2 v - 1, g = A + v^3 + 2, h = v^2 + 1
        let f = p(&[((2, 1), 1), ((0, 0), -1)]);
        let g = p(&[((1, 0), 1), ((0, 3), 1), ((0, 0), 2)]);
        let h = p(&[((0, 2), 1), ((0, 0), 1)]);
        let x = f.mul(&g).mul(&h).scale(&BigInt::from(6));
        let y = f.mul(&h).mul(&h).scale(&BigInt::from(4)).shift((-3, 5));
        let d = gcd(&x, &y);
        assert_eq!(d, f.mul(&h).scale(&BigInt::from(2)));
    }

    #[test]
    fn gcd_coprime_is_content() {
        let f = p(&[((1, 0), 3), ((0, 1), 3)]);
        let g = p(&[((1, 0), 6), ((0, 0), 9)]);
        assert_eq!(gcd(&f, &g), LaurentPoly::constant(3));
    }

    #[test]
    fn exact_division() {
        let f = p(&[((2, 1), 1), ((0, 0), -1)]);
        let g = p(&[((1, -1), 1), ((0, 3), -2)]);
        let x = f.mul(&g);
        assert_eq!(div_exact(&x, &g), Some(f.clone()));
        assert_eq!(div_exact(&f, &g), None);
    }
}
