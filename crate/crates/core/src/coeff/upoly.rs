use std::fmt;

use super::ring::RingElem;
use super::CoeffError;

/// Polynomial in an auxiliary variable `u` with coefficients in the generic field.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<RingElem>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<RingElem>) -> Self {
        while coeffs.last().is_some_and(RingElem::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: RingElem) -> Self {
        Self::new(vec![c])
    }

    /// `u - b`
    pub fn linear(b: &RingElem) -> Self {
        Self::new(vec![-b, RingElem::one()])
    }

    pub fn u() -> Self {
        Self::new(vec![RingElem::zero(), RingElem::one()])
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = RingElem::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn scale(&self, c: &RingElem) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![RingElem::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + x * y;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, u: &RingElem) -> RingElem {
        self.coeffs.iter().rev().fold(RingElem::zero(), |acc, c| acc * u + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * RingElem::from_int(i as i64))
                .collect(),
        )
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})*u^{i}"))
            .collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

/// Rational function `num(u) / den(u)`, kept unreduced.
#[derive(Clone, Debug)]
pub struct RatFunU {
    pub num: UPoly,
    pub den: UPoly,
}

impl RatFunU {
    pub fn from_poly(p: UPoly) -> Self {
        Self { num: p, den: UPoly::constant(RingElem::one()) }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { num: self.num.mul(&other.num), den: self.den.mul(&other.den) }
    }

    pub fn eval(&self, u: &RingElem) -> Result<RingElem, CoeffError> {
        self.num.eval(u).try_div(&self.den.eval(u))
    }

    /// Residue at a simple zero `b` of the denominator: `num(b) / den'(b)`.
    pub fn residue_simple(&self, b: &RingElem) -> Result<RingElem, CoeffError> {
        debug_assert!(self.den.eval(b).is_zero());
        self.num.eval(b).try_div(&self.den.derivative().eval(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_of_simple_fraction() {
        // 3 / ((u - 2)(u + 1)) has residue 1 at u = 2.
        let two = RingElem::from_int(2);
        let f = RatFunU {
            num: UPoly::constant(RingElem::from_int(3)),
            den: UPoly::linear(&two).mul(&UPoly::linear(&RingElem::from_int(-1))),
        };
        assert_eq!(f.residue_simple(&two).unwrap(), RingElem::one());
        assert_eq!(f.eval(&RingElem::from_int(5)).unwrap(), RingElem::from_int(1) / RingElem::from_int(6));
    }
}
