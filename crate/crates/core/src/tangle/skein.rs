use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::coeff::{loop_value, LaurentPoly, RingElem};

/// Monomial exponent `(a, k, d)` of `α^a z^k δ^d`, with `z = s - s^{-1}`.
pub type SkeinExp = (i32, u32, u32);

/// Integer polynomial in `α^{±1}`, `z`, `δ`: the coefficients produced by
/// skein normalization before they are mapped into the scalar field.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SkeinPoly {
    terms: BTreeMap<SkeinExp, i64>,
}

impl SkeinPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::mono(1, (0, 0, 0))
    }

    pub fn mono(c: i64, e: SkeinExp) -> Self {
        let mut p = Self::default();
        p.add_mono(c, e);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SkeinExp, &i64)> {
        self.terms.iter()
    }

    pub fn add_mono(&mut self, c: i64, e: SkeinExp) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(e).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn add(&mut self, other: &SkeinPoly) {
        for (e, c) in &other.terms {
            self.add_mono(*c, *e);
        }
    }

    pub fn mul(&self, other: &SkeinPoly) -> SkeinPoly {
        let mut out = SkeinPoly::zero();
        for ((a1, k1, d1), c1) in &self.terms {
            for ((a2, k2, d2), c2) in &other.terms {
                out.add_mono(c1 * c2, (a1 + a2, k1 + k2, d1 + d2));
            }
        }
        out
    }

    pub fn mul_mono(&self, c: i64, e: SkeinExp) -> SkeinPoly {
        SkeinPoly {
            terms: self.terms.iter().map(|((a, k, d), x)| ((a + e.0, k + e.1, d + e.2), x * c)).collect(),
        }
    }

    /// Value as `P / z^E` with `P` a Laurent polynomial in `A`, `v`.
    pub fn to_fraction(&self) -> (LaurentPoly, u32) {
        let e = self.terms.keys().map(|(_, k, d)| d.saturating_sub(*k)).max().unwrap_or(0);
        let z = LaurentPoly::from_terms([((0, 2), 1.into()), ((0, -2), (-1).into())]);
        // δ z = α - α^{-1} + z
        let dz = LaurentPoly::from_terms([((2, 0), 1.into()), ((-2, 0), (-1).into()), ((0, 2), 1.into()), ((0, -2), (-1).into())]);
        let mut out = LaurentPoly::zero();
        for ((a, k, d), c) in &self.terms {
            // α^a z^k δ^d z^E = α^a (δz)^d z^{k - d + E}
            let t = LaurentPoly::monomial(BigInt::from(*c), (2 * a, 0))
                .mul(&dz.pow(*d))
                .mul(&z.pow(k + e - d));
            out = out.add(&t);
        }
        (out, e)
    }

    pub fn to_ring(&self) -> RingElem {
        let delta = loop_value();
        let z = RingElem::z();
        let mut out = RingElem::zero();
        for ((a, k, d), c) in &self.terms {
            out = out + RingElem::from_int(*c) * RingElem::alpha_pow(*a) * z.pow(*k as i32) * delta.pow(*d as i32);
        }
        out
    }
}

impl fmt::Debug for SkeinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.terms.iter().map(|((a, k, d), c)| format!("{c}*α^{a}*z^{k}*δ^{d}")).collect();
        write!(f, "{}", if parts.is_empty() { "0".to_string() } else { parts.join(" + ") })
    }
}
