//! Closed forms for quantum dimensions and the generating series `Q(μ, u)`.

use crate::coeff::{qint, qint_half, specialize, ybracket, LaurentPoly, RatFunU, RingElem, Specialization, UPoly};
use crate::young::{Cell, Partition};

use super::IdemError;

/// Which closed form of Wenzl's dimension formula to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QdimForm {
    /// Products of `[y+d]` over hook lengths, with a corrected diagonal.
    Wen,
    /// Product of two half-power factors `ψ_λ ψ'_λ`.
    WenzlTwo,
}

/// `A^a v^b + sign · A^{-a} v^{-b}`
fn binomial(a: i32, b: i32, sign: i64) -> LaurentPoly {
    LaurentPoly::from_terms([((a, b), 1.into()), ((-a, -b), sign.into())])
}

/// Quantum dimension `⟨λ⟩` in the generic field.
pub fn qdim_wenzl(lambda: &Partition, form: QdimForm) -> RingElem {
    let mut out = RingElem::one();
    for c in lambda.cells() {
        let hl = lambda.hook_length(c).expect("cell in shape") as i32;
        let d = lambda.dfun(c, false).expect("cell in shape");
        match form {
            QdimForm::Wen => {
                let num = if c.row == c.col {
                    let j = c.row;
                    ybracket(lambda.row(j) as i32 - lambda.col(j) as i32) + qint(hl)
                } else {
                    ybracket(d)
                };
                out = out * num / qint(hl);
            }
            QdimForm::WenzlTwo => {
                let dp = lambda.dfun(c, true).expect("cell in shape");
                let minus = RingElem::from_parts(binomial(1, d, -1), binomial(0, hl, -1));
                let plus = RingElem::from_parts(binomial(1, dp, 1), binomial(0, hl, 1));
                out = out * minus * plus;
            }
        }
    }
    out
}

/// `⟨λ⟩` by the default closed form.
pub fn qdim(lambda: &Partition) -> RingElem {
    qdim_wenzl(lambda, QdimForm::Wen)
}

/// Eigenvalue of `τ` attached to a cell: `αs^{2c}` for an added cell, `α^{-1}s^{-2c}` for a removed one.
pub fn cell_eigenvalue(c: Cell, added: bool) -> RingElem {
    let k = c.content();
    if added {
        RingElem::monomial(1, (2, 4 * k))
    } else {
        RingElem::monomial(1, (-2, -4 * k))
    }
}

/// All eigenvalues `b_j` for `μ`: added cells first, then removed cells.
pub fn eigenvalues(mu: &Partition) -> Vec<RingElem> {
    let (add, rem) = mu.corners();
    add.into_iter().map(|c| cell_eigenvalue(c, true)).chain(rem.into_iter().map(|c| cell_eigenvalue(c, false))).collect()
}

/// `⟨λ⟩ / ⟨μ⟩` from the eigenvalue product, for `λ` obtained from `μ` by adding or removing one cell.
pub fn qdim_ratio(lambda: &Partition, mu: &Partition) -> Result<RingElem, IdemError> {
    let b = if let Some(c) = lambda.diff_cell(mu) {
        cell_eigenvalue(c, true)
    } else if let Some(c) = mu.diff_cell(lambda) {
        cell_eigenvalue(c, false)
    } else {
        return Err(IdemError::ShapeMismatch(format!("{lambda} and {mu} differ by more than one cell")));
    };
    let binv = b.inv()?;
    let z = RingElem::z();
    let mut out = RingElem::alpha() * &binv * ((&b - &binv) / &z + RingElem::one());
    for bj in eigenvalues(mu) {
        if bj != b {
            out = out * (&b - &bj.inv()?) / (&b - &bj);
        }
    }
    Ok(out)
}

/// `Q(μ, u) = (α/(s-s^{-1}) + uα/(u²-1)) ∏_j (u - b_j^{-1})/(u - b_j)`.
pub fn q_series(mu: &Partition) -> Result<RatFunU, IdemError> {
    let a = RingElem::alpha();
    let z = RingElem::z();
    let one = RingElem::one();
    // α/z + uα/(u²-1) = (α(u²-1) + zαu) / (z(u²-1))
    let u2m1 = UPoly::new(vec![-&one, RingElem::zero(), one.clone()]);
    let num = u2m1.scale(&a).add(&UPoly::u().scale(&(&z * &a)));
    let mut q = RatFunU { num, den: u2m1.scale(&z) };
    for bj in eigenvalues(mu) {
        let factor = RatFunU { num: UPoly::linear(&bj.inv()?), den: UPoly::linear(&bj) };
        q = q.mul(&factor);
    }
    Ok(q)
}

/// `res_{u=b} Q(μ,u)/u` for the eigenvalue `b` of the cell added to `μ` to give `λ`.
pub fn q_residue(lambda: &Partition, mu: &Partition) -> Result<RingElem, IdemError> {
    let c = lambda
        .diff_cell(mu)
        .ok_or_else(|| IdemError::ShapeMismatch(format!("{lambda} does not grow {mu} by one cell")))?;
    let q = q_series(mu)?;
    let over_u = RatFunU { num: q.num, den: q.den.mul(&UPoly::u()) };
    Ok(over_u.residue_simple(&cell_eigenvalue(c, true))?)
}

fn padded(lambda: &Partition, n: u32, sp: Specialization) -> Result<Vec<i32>, IdemError> {
    let n = n as usize;
    if lambda.len() > n {
        return Err(IdemError::RowBound { shape: lambda.to_string(), spec: sp.to_string() });
    }
    Ok((1..=n).map(|i| lambda.row(i) as i32).collect())
}

/// `∏_{i<j} [shift + l_i - i + l_j - j][l_i - i - l_j + j] / ([shift - i - j][j - i])`, 1-based.
fn pair_product(l: &[i32], shift: i32) -> RingElem {
    let mut out = RingElem::one();
    for i in 1..=l.len() as i32 {
        for j in i + 1..=l.len() as i32 {
            let (li, lj) = (l[i as usize - 1], l[j as usize - 1]);
            out = out * qint(shift + li - i + lj - j) * qint(li - i - lj + j) / (qint(shift - i - j) * qint(j - i));
        }
    }
    out
}

/// `⟨λ⟩` at a specialization, by the classical closed forms for the B, C and D series.
/// Other specializations evaluate the generic formula.
pub fn qdim_specialized(lambda: &Partition, sp: Specialization) -> Result<RingElem, IdemError> {
    match sp {
        Specialization::B(n) => {
            let l = padded(lambda, n, sp)?;
            let n = n as i32;
            let mut out = pair_product(&l, 2 * n + 1);
            for j in 1..=n {
                out = out * qint_half(2 * (n + l[j as usize - 1] - j) + 1) / qint_half(2 * (n - j) + 1);
            }
            Ok(out)
        }
        Specialization::D(n) => {
            let l = padded(lambda, n, sp)?;
            let out = pair_product(&l, 2 * n as i32);
            Ok(if l[n as usize - 1] != 0 { out * RingElem::from_int(2) } else { out })
        }
        Specialization::C(n) => {
            let l = padded(lambda, n, sp)?;
            let n = n as i32;
            let mut out = pair_product(&l, 2 * n + 2);
            for j in 1..=n {
                out = out * qint(2 * n + 2 + 2 * l[j as usize - 1] - 2 * j) / qint(2 * n + 2 - 2 * j);
            }
            Ok(if lambda.size() % 2 == 1 { -out } else { out })
        }
        _ => Ok(specialize(&qdim(lambda), sp)?),
    }
}
