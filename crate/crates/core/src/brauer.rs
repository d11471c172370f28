//! Classical limit: Brauer diagrams acting on tensor powers of `V = ℚ^N`.

use std::collections::BTreeMap;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::bmw::AlgElem;
use crate::coeff::{specialize, CoeffError, Specialization};
use crate::idem::{ptilde, qdim, IdemError};
use crate::tangle::Matching;
use crate::young::StdTableau;

/// Largest matrix side `N^n` that [`phi`] will build.
pub const MAX_SIDE: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrauerError {
    #[error("coefficient has a pole at the Brauer specialization N = {0}")]
    PoleAtSpecialization(u32),
    #[error("matrix side {n_dim}^{n} exceeds {MAX_SIDE}")]
    SizeBound { n_dim: u32, n: usize },
    #[error("expected an element of an algebra, got a morphism {bottom} -> {top}")]
    NotSquare { bottom: usize, top: usize },
    #[error("trace {0} is not a positive integer")]
    NotPositiveInteger(BigRational),
    #[error("matrix trace {matrix} differs from the specialized dimension {formula}")]
    TraceMismatch { matrix: BigRational, formula: String },
    #[error(transparent)]
    Idem(#[from] IdemError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Element of the Brauer algebra `D_n(N)` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerElem {
    n: usize,
    terms: BTreeMap<Matching, BigRational>,
}

impl BrauerElem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Specialize `α = s^{N-1}`, then `s = 1`, coefficient by coefficient.
pub fn brauer_specialize(a: &AlgElem, n_dim: u32) -> Result<BrauerElem, BrauerError> {
    if a.bottom() != a.top() {
        return Err(BrauerError::NotSquare { bottom: a.bottom(), top: a.top() });
    }
    let mut terms = BTreeMap::new();
    for (m, c) in a.terms() {
        let v = specialize(c, Specialization::Brauer(n_dim)).map_err(|e| match e {
            CoeffError::PoleAtSpecialization(_) => BrauerError::PoleAtSpecialization(n_dim),
            e => BrauerError::Coeff(e),
        })?;
        let q = v.as_rational().expect("Brauer specialization yields rationals");
        if !q.is_zero() {
            terms.insert(m, q);
        }
    }
    Ok(BrauerElem { n: a.n(), terms })
}

/// Square matrix over `ℚ`, row-major. Rows index the input basis vector, so
/// products compose left to right like tangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    side: usize,
    data: Vec<BigRational>,
}

impl DenseMatrix {
    pub fn zero(side: usize) -> Self {
        Self { side, data: vec![BigRational::zero(); side * side] }
    }

    pub fn identity(side: usize) -> Self {
        let mut m = Self::zero(side);
        for i in 0..side {
            m.data[i * side + i] = BigRational::one();
        }
        m
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.side + j]
    }

    pub fn trace(&self) -> BigRational {
        (0..self.side).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { side: self.side, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.side, other.side, "matrix sides differ");
        Self { side: self.side, data: self.data.iter().zip(&other.data).map(|(x, y)| x + y).collect() }
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;

    fn mul(self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.side, other.side, "matrix sides differ");
        let n = self.side;
        let mut out = DenseMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = other.get(k, j);
                    if !y.is_zero() {
                        out.data[i * n + j] += x * y;
                    }
                }
            }
        }
        out
    }
}

/// Digits of `index` in base `n_dim`, most significant first.
fn digits(mut index: usize, n_dim: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for d in out.iter_mut().rev() {
        *d = index % n_dim;
        index /= n_dim;
    }
    out
}

/// Action of a Brauer diagram on `V^{⊗n}`: crossings swap tensor factors,
/// a cap contracts `u_i ⊗ u_j ↦ δ_{ij}`, a cup inserts `Σ_ν u_ν ⊗ u_ν`.
fn diagram_matrix(m: &Matching, n_dim: usize) -> DenseMatrix {
    let n = m.bottom();
    let side = n_dim.pow(n as u32);
    let mut out = DenseMatrix::zero(side);
    // Each pair of endpoints carries one label; enumerate all labelings.
    let pairs: Vec<(usize, usize)> = (0..m.len()).filter(|&i| i < m.partner(i)).map(|i| (i, m.partner(i))).collect();
    let mut labels = vec![0usize; 2 * n];
    for code in 0..side {
        for ((a, b), l) in pairs.iter().zip(digits(code, n_dim, n)) {
            labels[*a] = l;
            labels[*b] = l;
        }
        let row = labels[..n].iter().fold(0, |acc, &l| acc * n_dim + l);
        let col = labels[n..].iter().fold(0, |acc, &l| acc * n_dim + l);
        out.data[row * side + col] = BigRational::one();
    }
    out
}

/// `Φ_n(x)` on `(ℚ^N)^{⊗n}`.
pub fn phi(x: &BrauerElem, n_dim: u32) -> Result<DenseMatrix, BrauerError> {
    let side = (n_dim as usize).checked_pow(x.n as u32).filter(|&s| s <= MAX_SIDE);
    let side = side.ok_or(BrauerError::SizeBound { n_dim, n: x.n })?;
    let mut out = DenseMatrix::zero(side);
    for (m, c) in &x.terms {
        out = out.add(&diagram_matrix(m, n_dim as usize).scale(c));
    }
    Ok(out)
}

/// `trace Φ(p̃_t)` at `α = s^{N-1}, s = 1`, checked to be a positive integer equal to the specialized `⟨λ⟩`.
pub fn integer_trace_check(t: &StdTableau, n_dim: u32) -> Result<BigInt, BrauerError> {
    let x = brauer_specialize(&ptilde(t)?, n_dim)?;
    let tr = phi(&x, n_dim)?.trace();
    if !tr.is_integer() || tr <= BigRational::zero() {
        return Err(BrauerError::NotPositiveInteger(tr));
    }
    let formula = specialize(&qdim(t.shape()), Specialization::Brauer(n_dim))?;
    if formula.as_rational().as_ref() != Some(&tr) {
        return Err(BrauerError::TraceMismatch { matrix: tr, formula: formula.to_string() });
    }
    Ok(tr.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RingElem;
    use crate::young::{enumerate_standard, Partition};

    fn rat(k: i64) -> BigRational {
        BigRational::from_integer(k.into())
    }

    fn phi_of(a: &AlgElem, n_dim: u32) -> DenseMatrix {
        phi(&brauer_specialize(a, n_dim).unwrap(), n_dim).unwrap()
    }

    #[test]
    fn specialization_examples() {
        let x = AlgElem::e(2, 1).sub(&AlgElem::e_inv(2, 1));
        assert!(brauer_specialize(&x, 3).unwrap().is_zero());
        let one = brauer_specialize(&AlgElem::identity(2), 3).unwrap();
        assert_eq!(one.terms().collect::<Vec<_>>(), vec![(&Matching::identity(2), &rat(1))]);
        let d = brauer_specialize(&AlgElem::scalar(1, crate::bmw::delta()), 4).unwrap();
        assert_eq!(d.terms().next().unwrap().1, &rat(4));
        let z = AlgElem::scalar(1, RingElem::z().inv().unwrap());
        assert_eq!(brauer_specialize(&z, 3), Err(BrauerError::PoleAtSpecialization(3)));
    }

    #[test]
    fn generator_matrices() {
        for n_dim in 1..=4u32 {
            let n3 = n_dim.pow(3) as usize;
            assert_eq!(phi_of(&AlgElem::identity(3), n_dim), DenseMatrix::identity(n3));
            let h = phi_of(&AlgElem::h(2, 1), n_dim);
            assert_eq!(h.trace(), rat(n_dim as i64));
            assert_eq!(&h * &h, h.scale(&rat(n_dim as i64)));
            for i in 1..3 {
                let e = phi_of(&AlgElem::e(3, i), n_dim);
                let h = phi_of(&AlgElem::h(3, i), n_dim);
                assert_eq!(&e * &e, DenseMatrix::identity(n3));
                assert_eq!(&h * &e, h);
                let j = 3 - i;
                let hj = phi_of(&AlgElem::h(3, j), n_dim);
                let ej = phi_of(&AlgElem::e(3, j), n_dim);
                assert_eq!(&(&h * &ej) * &h, h);
                assert_eq!(&(&h * &hj) * &h, h);
            }
        }
    }

    #[test]
    fn homomorphism_on_words() {
        for (a, b) in [("e1 h2", "E2 e1"), ("h1 e2 h1", "e1 e2"), ("E1 E2 h1", "h2")] {
            let (x, y) = (AlgElem::parse_word(3, a).unwrap(), AlgElem::parse_word(3, b).unwrap());
            for n_dim in [2, 3] {
                assert_eq!(phi_of(&x.mul(&y), n_dim), &phi_of(&x, n_dim) * &phi_of(&y, n_dim));
                assert_eq!(phi_of(&x.mul(&y), n_dim).trace(), phi_of(&y.mul(&x), n_dim).trace());
            }
        }
    }

    #[test]
    fn integer_traces() {
        assert_eq!(integer_trace_check(&StdTableau::single(), 3).unwrap(), 3.into());
        for n_dim in [3, 4] {
            for n in 1..=3 {
                for l in Partition::all(n) {
                    for t in enumerate_standard(&l) {
                        let v = integer_trace_check(&t, n_dim).unwrap();
                        assert!(v > BigInt::zero());
                    }
                }
            }
        }
        assert!(matches!(phi(&brauer_specialize(&AlgElem::identity(6), 4).unwrap(), 4), Err(BrauerError::SizeBound { .. })));
    }
}
