//! Exact scalars: rational functions in `A = α^{1/2}` and `v = s^{1/2}`.

mod gcd;
mod poly;
mod ring;
mod special;
mod upoly;

pub use gcd::{div_exact, gcd};
pub use poly::{Exp, LaurentPoly};
pub use ring::{RingElem, RingSum};
pub use special::{alpha_to_neg_inv, s_to_neg_inv, specialize, Specialization};
pub use upoly::{RatFunU, UPoly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("specialization {0} has a pole at this element")]
    PoleAtSpecialization(String),
    #[error("specialization {0} needs integer powers of alpha")]
    HalfPowerSign(String),
    #[error("cannot parse scalar: {0:?}")]
    Parse(String),
}

/// Quantum integer `[m]` for `m = k/2`, i.e. `(v^k - v^{-k}) / (v^2 - v^{-2})`.
pub fn qint_half(k: i32) -> RingElem {
    let num = LaurentPoly::from_terms([((0, k), 1.into()), ((0, -k), (-1).into())]);
    RingElem::from_parts(num, z_poly())
}

/// Quantum integer `[m] = (s^m - s^{-m}) / (s - s^{-1})`.
pub fn qint(m: i32) -> RingElem {
    qint_half(2 * m)
}

/// `[y+d]` for `d = k/2`: `(α s^d - α^{-1} s^{-d}) / (s - s^{-1})`.
pub fn ybracket_half(k: i32) -> RingElem {
    let num = LaurentPoly::from_terms([((2, k), 1.into()), ((-2, -k), (-1).into())]);
    RingElem::from_parts(num, z_poly())
}

/// `[y+d] = (α s^d - α^{-1} s^{-d}) / (s - s^{-1})`.
pub fn ybracket(d: i32) -> RingElem {
    ybracket_half(2 * d)
}

/// Value of a free loop, `δ = (α - α^{-1}) / (s - s^{-1}) + 1`.
pub fn loop_value() -> RingElem {
    ybracket(0) + RingElem::one()
}

/// Value of a closed strand in the oriented (Hecke) theory, `(α - α^{-1}) / (s - s^{-1})`.
pub fn hecke_loop_value() -> RingElem {
    ybracket(0)
}

fn z_poly() -> LaurentPoly {
    LaurentPoly::from_terms([((0, 2), 1.into()), ((0, -2), (-1).into())])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(((-3i32..=3, -4i32..=4), -3i64..=3), 1..4)
            .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, c.into()))))
    }

    fn elem() -> impl Strategy<Value = RingElem> {
        (small_poly(), small_poly()).prop_map(|(n, d)| {
            if d.is_zero() {
                RingElem::from_poly(n)
            } else {
                RingElem::from_parts(n, d)
            }
        })
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(qint(0), RingElem::zero());
        assert_eq!(qint(1), RingElem::one());
        assert_eq!(qint(2), RingElem::s() + RingElem::s().inv().unwrap());
        for k in -12..=12 {
            let lhs = qint_half(k) * RingElem::z();
            let rhs = RingElem::s_half_pow(k) - RingElem::s_half_pow(-k);
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn brackets() {
        let a = RingElem::alpha();
        let expect = (&a - a.inv().unwrap()) / RingElem::z();
        assert_eq!(ybracket(0), expect);
        assert_eq!(loop_value(), expect + RingElem::one());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn canonical_idempotent(x in elem()) {
            prop_assert_eq!(x.canonicalize(), x.clone());
            prop_assert_eq!(x.canonicalize().canonicalize(), x.canonicalize());
        }

        #[test]
        fn field_axioms(a in elem(), b in elem(), c in elem()) {
            prop_assert_eq!((&a + &b) * &c, &a * &c + &b * &c);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a - &a, RingElem::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), RingElem::one());
            }
        }

        #[test]
        fn specialize_is_multiplicative(a in elem(), b in elem()) {
            for sp in [Specialization::B(1), Specialization::D(2), Specialization::Brauer(3)] {
                if let (Ok(x), Ok(y), Ok(xy)) = (specialize(&a, sp), specialize(&b, sp), specialize(&(&a * &b), sp)) {
                    prop_assert_eq!(xy, &x * &y);
                }
                if let (Ok(x), Ok(y), Ok(s)) = (specialize(&a, sp), specialize(&b, sp), specialize(&(&a + &b), sp)) {
                    prop_assert_eq!(s, &x + &y);
                }
            }
        }

        #[test]
        fn text_roundtrip(a in elem()) {
            let back: RingElem = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
