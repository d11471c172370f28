//! Conditions under which the recursive formulas for `ỹ_λ` and `p̃_t` define
//! minimal idempotents after specializing the parameters.

use serde_json::{json, Value};

use crate::coeff::{qint, specialize, RingElem, Specialization};
use crate::young::Partition;

use super::qdim::qdim_ratio;

/// Which construction a condition belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Ytilde,
    Ptilde,
}

/// One condition: `index` 1 is quantum integers, 2 the smaller idempotent, 3 the dimension ratios.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bullet {
    pub target: Target,
    pub index: usize,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub shape: Partition,
    pub spec: Specialization,
    pub bullets: Vec<Bullet>,
}

impl FeasibilityReport {
    pub fn passed(&self) -> bool {
        self.bullets.iter().all(|b| b.passed)
    }

    pub fn first_failure(&self) -> Option<&Bullet> {
        self.bullets.iter().find(|b| !b.passed)
    }

    pub fn to_json(&self) -> Value {
        let bullets: Vec<Value> = self
            .bullets
            .iter()
            .map(|b| {
                json!({
                    "target": match b.target { Target::Ytilde => "ytilde", Target::Ptilde => "ptilde" },
                    "bullet": b.index,
                    "passed": b.passed,
                    "witness": b.witness,
                })
            })
            .collect();
        json!({"shape": self.shape.to_string(), "spec": self.spec.to_string(), "passed": self.passed(), "bullets": bullets})
    }
}

/// `None` when `x` specializes to a nonzero finite value, otherwise the reason.
fn nonzero(x: &RingElem, sp: Specialization) -> Option<&'static str> {
    match specialize(x, sp) {
        Ok(v) if v.is_zero() => Some("vanishes"),
        Ok(_) => None,
        Err(_) => Some("has a pole"),
    }
}

/// First `m < λ_1 + λ^∨_1` with `[m]` vanishing or undefined.
fn qint_witness(lambda: &Partition, sp: Specialization) -> Option<String> {
    let bound = lambda.row(1) + lambda.col(1);
    (1..bound).find_map(|m| nonzero(&qint(m as i32), sp).map(|why| format!("[{m}] {why}")))
}

/// First pair `ν ⊂ μ` with `⟨μ⟩/⟨ν⟩` vanishing or undefined, over the given `μ`.
fn ratio_witness<'a>(mus: impl IntoIterator<Item = &'a Partition>, sp: Specialization) -> Option<String> {
    for mu in mus {
        for c in mu.removable() {
            let nu = mu.remove_cell(c).expect("removable cell");
            let r = qdim_ratio(mu, &nu).expect("one-cell difference");
            if let Some(why) = nonzero(&r, sp) {
                return Some(format!("<{mu}>/<{nu}> {why}"));
            }
        }
    }
    None
}

fn subshapes(lambda: &Partition) -> Vec<Partition> {
    lambda.removable().into_iter().map(|c| lambda.remove_cell(c).expect("removable cell")).collect()
}

fn ytilde_feasible(lambda: &Partition, sp: Specialization) -> bool {
    ytilde_bullets(lambda, sp).iter().all(|b| b.passed)
}

fn bullet(target: Target, index: usize, witness: Option<String>) -> Bullet {
    Bullet { target, index, passed: witness.is_none(), witness }
}

fn ytilde_bullets(lambda: &Partition, sp: Specialization) -> Vec<Bullet> {
    let t = Target::Ytilde;
    let mus = subshapes(lambda);
    let smaller = if lambda.size() <= 1 || mus.iter().any(|mu| ytilde_feasible(mu, sp)) {
        None
    } else {
        Some(format!("no feasible shape below {lambda}"))
    };
    vec![bullet(t, 1, qint_witness(lambda, sp)), bullet(t, 2, smaller), bullet(t, 3, ratio_witness(&mus, sp))]
}

/// Growth chain obtained by removing the last cell in reading order, largest first.
fn reading_chain(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = lambda.clone();
    while let Some(&c) = cur.removable().last() {
        cur = cur.remove_cell(c).expect("removable cell");
        out.push(cur.clone());
    }
    out
}

/// Evaluate the three conditions for `ỹ_λ` and for `p̃_t`, `t` the tableau filling `λ` in reading order.
pub fn feasibility(lambda: &Partition, sp: Specialization) -> FeasibilityReport {
    let mut bullets = ytilde_bullets(lambda, sp);
    let t = Target::Ptilde;
    let chain = reading_chain(lambda);
    let smaller = match chain.first() {
        Some(mu) if !ytilde_feasible(mu, sp) => Some(format!("ytilde {mu} is not defined")),
        _ => None,
    };
    bullets.push(bullet(t, 1, qint_witness(lambda, sp)));
    bullets.push(bullet(t, 2, smaller));
    bullets.push(bullet(t, 3, ratio_witness(&chain, sp)));
    FeasibilityReport { shape: lambda.clone(), spec: sp, bullets }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_and_brauer_pass() {
        for n in 0..=5 {
            for l in Partition::all(n) {
                assert!(feasibility(&l, Specialization::Generic).passed(), "{l}");
                assert!(feasibility(&l, Specialization::Brauer(n.max(1) as u32)).passed(), "{l}");
            }
        }
    }

    #[test]
    fn root_of_unity_witness() {
        // s = v² = i makes [2] = s + s^{-1} vanish.
        let sp = Specialization::RootOfUnity { order: 8, alpha_exp: 3 };
        let r = feasibility(&Partition::of(&[2, 1]), sp);
        let f = r.first_failure().unwrap();
        assert_eq!((f.target, f.index), (Target::Ytilde, 1));
        assert_eq!(f.witness.as_deref(), Some("[2] vanishes"));
        assert!(specialize(&qint(2), sp).unwrap().is_zero());
    }
}
