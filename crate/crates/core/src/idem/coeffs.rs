//! Twist and braiding eigenvalues, as closed forms and as engine computations.

use crate::bmw::{AlgElem, Cleared};
use crate::coeff::RingElem;
use crate::tangle::Op;
use crate::young::Partition;

use super::build::{ytilde, ytilde_pair};
use super::{lift_to_bmw, IdemError};
use crate::hecke::{insertion_braid, insertion_braid_inv};

/// Whether the second shape of a braiding pair has one cell more or one cell less.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Grow,
    Shrink,
}

/// `α^{|μ|} s^{2 Σ cn(c)}`
pub fn twist_coefficient(mu: &Partition) -> RingElem {
    RingElem::monomial(1, (2 * mu.size() as i32, 4 * mu.content_sum()))
}

/// `s^{2cn(c)}` for `Grow` (`λ ⊂ μ`), `α^{-2} s^{-2cn(c)}` for `Shrink` (`μ ⊂ λ`).
pub fn braiding_coefficient(lambda: &Partition, mu: &Partition, dir: Direction) -> Result<RingElem, IdemError> {
    let mismatch = || IdemError::ShapeMismatch(format!("{lambda} and {mu} for {dir:?}"));
    match dir {
        Direction::Grow => {
            let c = mu.diff_cell(lambda).ok_or_else(mismatch)?;
            Ok(RingElem::monomial(1, (0, 4 * c.content())))
        }
        Direction::Shrink => {
            let c = lambda.diff_cell(mu).ok_or_else(mismatch)?;
            Ok(RingElem::monomial(1, (-4, -4 * c.content())))
        }
    }
}

fn full_twist_ops(k: usize) -> Vec<Op> {
    let mut ops = Vec::new();
    for _ in 0..k {
        ops.extend((0..k.saturating_sub(1)).map(|i| Op::Cross(i, true)));
    }
    ops
}

fn cable_loop_ops(k: usize) -> Vec<Op> {
    let m = k.saturating_sub(1);
    (0..m).rev().chain(0..m).map(|i| Op::Cross(i, true)).collect()
}

/// Full positive twist of `k` parallel strands: the braid `(e_1⋯e_{k-1})^k`
/// followed by a positive curl on every strand.
pub fn framed_full_twist(k: usize) -> AlgElem {
    let mut ops = full_twist_ops(k);
    for p in 0..k {
        ops.extend([Op::Cup(p + 1), Op::Cross(p, true), Op::Cap(p + 1)]);
    }
    AlgElem::from_ops(k, &ops)
}

/// The last of `k` strands passing around the other `k − 1`: `e_{k-1}⋯e_1 e_1⋯e_{k-1}`.
pub fn cable_loop(k: usize) -> AlgElem {
    AlgElem::from_ops(k, &cable_loop_ops(k))
}

/// `w · y` for a braid `w`, one crossing at a time. A crossing is a single
/// basis tangle while the expanded braid can have hundreds of terms.
fn braid_times(k: usize, ops: &[Op], y: &Cleared) -> Cleared {
    ops.iter().rev().fold(y.clone(), |acc, op| AlgElem::from_ops(k, &[*op]).cleared().mul(&acc))
}

/// Engine value of the twist on `ỹ_μ`, if the composite is proportional to `ỹ_μ`.
pub fn twist_eigenvalue(mu: &Partition) -> Result<Option<RingElem>, IdemError> {
    let y = ytilde(mu)?;
    // Each curl contributes α; the braid part is applied crossing by crossing.
    let k = mu.size();
    let yc = y.cleared();
    let c = braid_times(k, &full_twist_ops(k), &yc).ratio_to(&yc);
    Ok(c.map(|c| c * RingElem::alpha().pow(k as i32)))
}

/// Engine value of the cable-strand double crossing on `ỹ_μ` (`Grow`) or on `ỹ_{(λ,μ)}` (`Shrink`).
pub fn braiding_eigenvalue(lambda: &Partition, mu: &Partition, dir: Direction) -> Result<Option<RingElem>, IdemError> {
    braiding_coefficient(lambda, mu, dir)?;
    match dir {
        Direction::Grow => {
            let k = mu.size();
            let c = mu.diff_cell(lambda).expect("checked above");
            let r = mu.reading_index(c).expect("cell in shape");
            let rho = lift_to_bmw(&insertion_braid(k, r))?;
            let rho_inv = lift_to_bmw(&insertion_braid_inv(k, r))?;
            let y = ytilde(mu)?;
            let yc = y.cleared();
            let x = yc.mul(&rho_inv.cleared()).mul(&braid_times(k, &cable_loop_ops(k), &rho.cleared().mul(&yc)));
            Ok(x.ratio_to(&yc))
        }
        Direction::Shrink => {
            let y = ytilde_pair(lambda, mu)?;
            let k = lambda.size() + 1;
            let yc = y.cleared();
            Ok(braid_times(k, &cable_loop_ops(k), &yc).ratio_to(&yc))
        }
    }
}
