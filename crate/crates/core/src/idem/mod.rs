//! Minimal idempotents, path idempotents and matrix units of `K_n`, the
//! section `H_n → K_n`, quantum dimensions, and twist/braiding eigenvalues.

mod build;
mod coeffs;
mod feasibility;
mod qdim;

use std::collections::HashMap;
use std::sync::OnceLock;

use parking_lot::RwLock;
use thiserror::Error;

use crate::bmw::{AlgElem, BmwError};
use crate::coeff::CoeffError;
use crate::hecke::{HeckeElem, HeckeError};
use crate::tangle::Op;

pub use build::{
    central_idempotent, matrix_units, path_unit, ptilde, ptilde_pair, ptilde_plus, section, section_projector, ytilde,
    ytilde_pair, MatrixUnitDB, MatrixUnitLevel, PathUnit,
};
pub use coeffs::{
    braiding_coefficient, braiding_eigenvalue, cable_loop, framed_full_twist, twist_coefficient, twist_eigenvalue,
    Direction,
};
pub use feasibility::{feasibility, Bullet, FeasibilityReport, Target};
pub use qdim::{
    cell_eigenvalue, eigenvalues, q_residue, q_series, qdim, qdim_ratio, qdim_specialized, qdim_wenzl, QdimForm,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdemError {
    #[error("element has no braid-word certificate")]
    MissingCertificate,
    #[error("quantum dimension of {0} vanishes")]
    ZeroQuantumDimension(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("feasibility condition {bullet} fails: {detail}")]
    FeasibilityViolated { bullet: usize, detail: String },
    #[error("{shape} has too many rows for {spec}")]
    RowBound { shape: String, spec: String },
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Bmw(#[from] BmwError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Braid word (signed 1-based generators, bottom first) as a tangle in `K_n`.
pub fn braid_to_bmw(n: usize, word: &[i32]) -> AlgElem {
    static CACHE: OnceLock<RwLock<HashMap<(usize, Vec<i32>), AlgElem>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (n, word.to_vec());
    if let Some(x) = cache.read().get(&key) {
        return x.clone();
    }
    let ops: Vec<Op> = word.iter().map(|&g| Op::Cross(g.unsigned_abs() as usize - 1, g > 0)).collect();
    let x = AlgElem::from_ops(n, &ops);
    cache.write().insert(key, x.clone());
    x
}

/// Lift a Hecke element to `K_n` by reading its certificate words as braids.
pub fn lift_to_bmw(h: &HeckeElem) -> Result<AlgElem, IdemError> {
    let n = h.n();
    if h.certificate().is_empty() {
        return if h.is_zero() { Ok(AlgElem::zero(n, n)) } else { Err(IdemError::MissingCertificate) };
    }
    let mut out = AlgElem::zero(n, n);
    for (w, c) in h.certificate().words() {
        out = out.add(&braid_to_bmw(n, w).scale(c));
    }
    Ok(out)
}

/// The quotient map `K_n → H_n`: drops tangles with fewer than `n` through strands.
pub fn project_to_hecke(x: &AlgElem) -> HeckeElem {
    let n = x.n();
    assert_eq!(x.bottom(), x.top(), "projection of a non-square morphism");
    let mut out = HeckeElem::zero(n);
    for (m, c) in x.terms() {
        if m.through_count() == n {
            let p = (0..n).map(|i| (m.partner(i) - n) as u8).collect();
            out = out.add(&HeckeElem::perm(p).scale(c));
        }
    }
    out
}
