//! Verification suites: each runs the invariants of one area up to a size bound
//! and records every check with enough detail to reproduce a failure.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};
use thiserror::Error;

use crate::bmw::{delta, AlgElem};
use crate::brauer::{integer_trace_check, BrauerError};
use crate::coeff::RingElem;
use crate::hecke::{all_perms, tableau_morphisms, young_idem, HeckeElem, HeckeError};
use crate::idem::{
    braiding_coefficient, braiding_eigenvalue, matrix_units, project_to_hecke, q_residue, qdim_ratio, qdim_wenzl,
    section, twist_coefficient, twist_eigenvalue, ytilde, Direction, IdemError, QdimForm,
};
use crate::tangle::Matching;
use crate::young::{enumerate_standard, factorial, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Idem(#[from] IdemError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Brauer(#[from] BrauerError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Relations,
    Hecke,
    Section,
    Units,
    Branching,
    Dims,
    Twist,
    Residue,
    Brauer,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Relations,
        Suite::Hecke,
        Suite::Section,
        Suite::Units,
        Suite::Branching,
        Suite::Dims,
        Suite::Twist,
        Suite::Residue,
        Suite::Brauer,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Hecke => "hecke",
            Suite::Section => "section",
            Suite::Units => "units",
            Suite::Branching => "branching",
            Suite::Dims => "dims",
            Suite::Twist => "twist",
            Suite::Residue => "residue",
            Suite::Brauer => "brauer",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// One verified statement.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: Value) -> Self {
        Self { name: name.into(), passed, detail }
    }

    /// Equality of two elements; both sides are kept only on failure.
    fn equal(name: impl Into<String>, lhs: &AlgElem, rhs: &AlgElem) -> Self {
        let passed = lhs == rhs;
        let detail = if passed { Value::Null } else { json!({"lhs": lhs.to_json(), "rhs": rhs.to_json()}) };
        Self::new(name, passed, detail)
    }

    fn equal_hecke(name: impl Into<String>, lhs: &HeckeElem, rhs: &HeckeElem) -> Self {
        let passed = lhs == rhs;
        let detail = if passed { Value::Null } else { json!({"lhs": lhs.to_json(), "rhs": rhs.to_json()}) };
        Self::new(name, passed, detail)
    }

    fn equal_scalar(name: impl Into<String>, lhs: &RingElem, rhs: &RingElem) -> Self {
        let detail = json!({"lhs": lhs.to_string(), "rhs": rhs.to_string()});
        Self::new(name, lhs == rhs, detail)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_size: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = json!({"name": c.name, "passed": c.passed});
                if !c.detail.is_null() {
                    v["detail"] = c.detail.clone();
                }
                v
            })
            .collect();
        json!({
            "suite": self.suite.name(),
            "max_size": self.max_size,
            "passed": self.passed(),
            "count": self.checks.len(),
            "checks": checks,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_size: usize,
    /// Vector space dimension for the Brauer suite.
    pub n_dim: u32,
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport, VerifyError> {
    let m = opts.max_size;
    let checks = match suite {
        Suite::Relations => relations(m),
        Suite::Hecke => hecke(m)?,
        Suite::Section => section_checks(m)?,
        Suite::Units => units(m)?,
        Suite::Branching => branching(m)?,
        Suite::Dims => dims(m)?,
        Suite::Twist => twist(m)?,
        Suite::Residue => residue(m)?,
        Suite::Brauer => brauer(m, opts.n_dim)?,
    };
    Ok(SuiteReport { suite, max_size: m, checks })
}

fn word(n: usize, text: &str) -> AlgElem {
    AlgElem::parse_word(n, text).expect("generated word is valid")
}

fn relations(max: usize) -> Vec<Check> {
    let a = RingElem::alpha();
    let ainv = a.inv().expect("alpha is a unit");
    let mut out = Vec::new();
    for n in 2..=max {
        let one = AlgElem::identity(n);
        for i in 1..n {
            let (e, ei, h) = (AlgElem::e(n, i), AlgElem::e_inv(n, i), AlgElem::h(n, i));
            let tag = |r: &str| format!("{r} n={n} i={i}");
            out.push(Check::equal(tag("K"), &e.sub(&ei), &one.sub(&h).scale(&RingElem::z())));
            out.push(Check::equal(tag("inverse"), &e.mul(&ei), &one));
            out.push(Check::equal(tag("R1 he"), &h.mul(&e), &h.scale(&ainv)));
            out.push(Check::equal(tag("R1 eh"), &e.mul(&h), &h.scale(&ainv)));
            out.push(Check::equal(tag("R1 hE"), &h.mul(&ei), &h.scale(&a)));
            out.push(Check::equal(tag("hook square"), &h.mul(&h), &h.scale(&delta())));
            if i + 1 < n {
                let j = i + 1;
                let w = |s: String| word(n, &s);
                out.push(Check::equal(tag("braid"), &w(format!("e{i} e{j} e{i}")), &w(format!("e{j} e{i} e{j}"))));
                for (x, y) in [(i, j), (j, i)] {
                    let hx = AlgElem::h(n, x);
                    out.push(Check::equal(tag(&format!("R2 h{x} e{y} h{x}")), &w(format!("h{x} e{y} h{x}")), &hx.scale(&a)));
                    out.push(Check::equal(tag(&format!("R2 h{x} E{y} h{x}")), &w(format!("h{x} E{y} h{x}")), &hx.scale(&ainv)));
                    out.push(Check::equal(tag(&format!("hook h{x} h{y} h{x}")), &w(format!("h{x} h{y} h{x}")), &hx));
                }
            }
            for j in i + 2..n {
                for (x, y) in [("e", "e"), ("h", "e"), ("e", "h"), ("h", "h")] {
                    let lhs = word(n, &format!("{x}{i} {y}{j}"));
                    let rhs = word(n, &format!("{y}{j} {x}{i}"));
                    out.push(Check::equal(tag(&format!("B2 {x}{i} {y}{j}")), &lhs, &rhs));
                }
            }
        }
    }
    out
}

fn hecke(max: usize) -> Result<Vec<Check>, VerifyError> {
    let mut out = Vec::new();
    for n in 1..=max {
        let shapes = Partition::all(n);
        let f: u128 = shapes.iter().map(|l| (enumerate_standard(l).len() as u128).pow(2)).sum();
        out.push(Check::new(format!("sum of squares n={n}"), f == factorial(n), json!({"sum": f.to_string()})));
        for i in 1..n {
            let lhs = HeckeElem::sigma(n, i).sub(&HeckeElem::sigma_inv(n, i));
            out.push(Check::equal_hecke(format!("quadratic n={n} i={i}"), &lhs, &HeckeElem::scalar(n, RingElem::z())));
        }
        for l in &shapes {
            let y = young_idem(l)?;
            out.push(Check::equal_hecke(format!("idempotent {l}"), &y.mul(&y), &y));
            for m in shapes.iter().filter(|m| *m != l) {
                out.push(Check::equal_hecke(format!("orthogonal {l} {m}"), &y.mul(&young_idem(m)?), &HeckeElem::zero(n)));
            }
        }
        let mut ps = Vec::new();
        for l in &shapes {
            for t in enumerate_standard(l) {
                ps.push((t.to_string(), tableau_morphisms(&t)?.2));
            }
        }
        let total = ps.iter().fold(HeckeElem::zero(n), |acc, (_, p)| acc.add(p));
        out.push(Check::equal_hecke(format!("tableau idempotents sum n={n}"), &total, &HeckeElem::identity(n)));
        for (s, p) in &ps {
            for (u, q) in &ps {
                let want = if s == u { p.clone() } else { HeckeElem::zero(n) };
                out.push(Check::equal_hecke(format!("p[{s}] p[{u}]"), &p.mul(q), &want));
            }
        }
    }
    Ok(out)
}

fn section_checks(max: usize) -> Result<Vec<Check>, VerifyError> {
    let mut out = Vec::new();
    for n in 1..=max {
        let perms = all_perms(n);
        let ideal: Vec<AlgElem> = Matching::enumerate(n, n)
            .into_iter()
            .filter(|m| m.through_count() < n)
            .map(|m| AlgElem::from_matching(&m))
            .collect();
        let zero = AlgElem::zero(n, n);
        let mut lifts = Vec::new();
        for p in &perms {
            let w = HeckeElem::perm(p.clone());
            let s = section(&w)?;
            let tag = format!("n={n} w={p:?}");
            out.push(Check::equal_hecke(format!("projection {tag}"), &project_to_hecke(&s), &w));
            for (k, y) in ideal.iter().enumerate() {
                out.push(Check::equal(format!("kills ideal left {tag} y={k}"), &s.mul(y), &zero));
                out.push(Check::equal(format!("kills ideal right {tag} y={k}"), &y.mul(&s), &zero));
            }
            lifts.push((w, s));
        }
        for (w1, s1) in &lifts {
            for (w2, s2) in &lifts {
                let name = format!("multiplicative n={n} {w1} * {w2}");
                out.push(Check::equal(name, &section(&w1.mul(w2))?, &s1.mul(s2)));
            }
        }
    }
    Ok(out)
}

fn units(max: usize) -> Result<Vec<Check>, VerifyError> {
    let db = matrix_units(max)?;
    let mut out = Vec::new();
    for level in &db.levels {
        let n = level.n;
        let one = AlgElem::identity(n);
        let mut total = AlgElem::zero(n, n);
        for (path, u) in &level.units {
            let y = &ytilde(&path.shape())?;
            out.push(Check::equal(format!("b a {path}"), &u.b.mul(&u.a), y));
            for (other, v) in &level.units {
                let want = if other == path { y.clone() } else { AlgElem::zero(path.shape().size(), other.shape().size()) };
                out.push(Check::equal(format!("orthogonal b[{path}] a[{other}]"), &u.b.mul(&v.a), &want));
            }
            total = total.add(&u.q);
        }
        out.push(Check::equal(format!("completeness n={n}"), &total, &one));
        for (lambda, z) in &level.central {
            for i in 1..n {
                for g in [AlgElem::e(n, i), AlgElem::h(n, i)] {
                    out.push(Check::equal(format!("central {lambda} n={n} i={i}"), &z.mul(&g), &g.mul(z)));
                }
            }
        }
    }
    Ok(out)
}

fn branching(max: usize) -> Result<Vec<Check>, VerifyError> {
    let db = matrix_units(max)?;
    let mut out = Vec::new();
    for k in 0..max {
        let (low, high) = (&db.levels[k], &db.levels[k + 1]);
        for (path, u) in &low.units {
            let mut sum = AlgElem::zero(k + 1, k + 1);
            for (child, v) in &high.units {
                if child.parent().as_ref() == Some(path) || (k == 0 && child.len() == 1) {
                    sum = sum.add(&v.q);
                }
            }
            out.push(Check::equal(format!("branching {path}"), &u.q.tensor_id(1), &sum));
        }
    }
    Ok(out)
}

/// `⟨λ⟩` as a product of one-cell ratios along the chain that removes cells in reverse reading order.
pub fn chain_product(lambda: &Partition) -> Result<RingElem, IdemError> {
    let mut out = RingElem::one();
    let mut cur = lambda.clone();
    while let Some(&c) = cur.removable().last() {
        let next = cur.remove_cell(c).expect("removable cell");
        out = out * qdim_ratio(&cur, &next)?;
        cur = next;
    }
    Ok(out)
}

fn dims(max: usize) -> Result<Vec<Check>, VerifyError> {
    let mut out = Vec::new();
    for n in 0..=max {
        let basis = Matching::enumerate(n, n).len() as u128;
        let want = crate::young::double_factorial_odd(n);
        out.push(Check::new(format!("basis size n={n}"), basis == want, json!({"basis": basis.to_string()})));
        let shapes = crate::young::updown_shapes(n);
        let squares: u128 = shapes.iter().map(|l| crate::young::count_updown(n, l).pow(2)).sum();
        out.push(Check::new(format!("up-down squares n={n}"), squares == want, json!({"sum": squares.to_string()})));
        for l in Partition::all(n) {
            let engine = ytilde(&l)?.qtrace();
            let routes = [
                ("wen", qdim_wenzl(&l, QdimForm::Wen)),
                ("wenzltwo", qdim_wenzl(&l, QdimForm::WenzlTwo)),
                ("chain", chain_product(&l)?),
            ];
            let passed = routes.iter().all(|(_, v)| *v == engine);
            let mut detail = json!({"shape": l.to_string(), "qtrace": engine.to_string()});
            for (k, v) in &routes {
                detail[*k] = json!(v.to_string());
            }
            out.push(Check::new(format!("dimension {l}"), passed, detail));
        }
    }
    Ok(out)
}

fn eigen_check(name: String, got: Option<RingElem>, want: RingElem) -> Check {
    let detail = json!({"engine": got.as_ref().map(|g| g.to_string()), "closed_form": want.to_string()});
    Check::new(name, got.as_ref() == Some(&want), detail)
}

fn twist(max: usize) -> Result<Vec<Check>, VerifyError> {
    let mut out = Vec::new();
    for n in 1..=max {
        for mu in Partition::all(n) {
            out.push(eigen_check(format!("twist {mu}"), twist_eigenvalue(&mu)?, twist_coefficient(&mu)));
            for c in mu.removable() {
                let lambda = mu.remove_cell(c).expect("removable cell");
                let got = braiding_eigenvalue(&lambda, &mu, Direction::Grow)?;
                let want = braiding_coefficient(&lambda, &mu, Direction::Grow)?;
                out.push(eigen_check(format!("braiding grow {lambda} -> {mu}"), got, want));
            }
        }
    }
    for n in 0..=max {
        for mu in Partition::all(n) {
            for c in mu.addable() {
                let lambda = mu.add_cell(c).expect("addable cell");
                let got = braiding_eigenvalue(&lambda, &mu, Direction::Shrink)?;
                let want = braiding_coefficient(&lambda, &mu, Direction::Shrink)?;
                out.push(eigen_check(format!("braiding shrink {lambda} -> {mu}"), got, want));
            }
        }
    }
    Ok(out)
}

fn residue(max: usize) -> Result<Vec<Check>, VerifyError> {
    let mut out = Vec::new();
    for n in 0..=max {
        for mu in Partition::all(n) {
            for c in mu.addable() {
                let lambda = mu.add_cell(c).expect("addable cell");
                let name = format!("residue {mu} -> {lambda}");
                out.push(Check::equal_scalar(name, &q_residue(&lambda, &mu)?, &qdim_ratio(&lambda, &mu)?));
            }
        }
    }
    Ok(out)
}

fn brauer(max: usize, n_dim: u32) -> Result<Vec<Check>, VerifyError> {
    let mut out = Vec::new();
    for n in 1..=max {
        for l in Partition::all(n) {
            for t in enumerate_standard(&l) {
                let name = format!("integer trace {t} N={n_dim}");
                match integer_trace_check(&t, n_dim) {
                    Ok(v) => out.push(Check::new(name, true, json!({"shape": l.to_string(), "trace": v.to_string()}))),
                    Err(e @ (BrauerError::NotPositiveInteger(_) | BrauerError::TraceMismatch { .. })) => {
                        out.push(Check::new(name, false, json!({"shape": l.to_string(), "error": e.to_string()})))
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    Ok(out)
}
