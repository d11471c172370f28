//! Recursive constructions of `ỹ_λ`, `ỹ_{(λ,ν)}`, path idempotents, matrix units and the section.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;
use serde_json::{json, Map, Value};

use crate::bmw::AlgElem;
use crate::coeff::RingElem;
use crate::hecke::{insertion_braid, insertion_braid_inv, young_idem, HeckeElem};
use crate::young::{all_updown, enumerate_standard, updown_shapes, Partition, StdTableau, UpDownTableau};

use super::qdim::qdim;
use super::{lift_to_bmw, IdemError};

/// `𝔞_Λ: n → |Λ_n|`, `𝔟_Λ: |Λ_n| → n` and the path idempotent `q_Λ = 𝔞_Λ 𝔟_Λ`.
#[derive(Clone, Debug)]
pub struct PathUnit {
    pub a: AlgElem,
    pub b: AlgElem,
    pub q: AlgElem,
}

type Memo<K, V> = RwLock<HashMap<K, V>>;

#[derive(Default)]
struct Store {
    ytilde: Memo<Partition, AlgElem>,
    pairs: Memo<(Partition, Partition), AlgElem>,
    units: Memo<UpDownTableau, Arc<PathUnit>>,
    plus: Memo<StdTableau, AlgElem>,
    projectors: Memo<usize, AlgElem>,
}

fn store() -> &'static Store {
    static STORE: OnceLock<Store> = OnceLock::new();
    STORE.get_or_init(Store::default)
}

fn memo<K: Eq + Hash + Clone, V: Clone>(
    cache: &Memo<K, V>,
    key: &K,
    build: impl FnOnce() -> Result<V, IdemError>,
) -> Result<V, IdemError> {
    if let Some(v) = cache.read().get(key) {
        return Ok(v.clone());
    }
    let v = build()?;
    cache.write().insert(key.clone(), v.clone());
    Ok(v)
}

/// `⟨ν⟩ / ⟨λ⟩`, failing if `⟨λ⟩` vanishes.
fn qdim_quotient(nu: &Partition, lambda: &Partition) -> Result<RingElem, IdemError> {
    let d = qdim(lambda);
    if d.is_zero() {
        return Err(IdemError::ZeroQuantumDimension(lambda.to_string()));
    }
    Ok(qdim(nu) / d)
}

/// Product of the factors in order, reduced once at the end.
fn chain(factors: &[&AlgElem]) -> AlgElem {
    let mut it = factors.iter();
    let first = it.next().expect("at least one factor").cleared();
    it.fold(first, |acc, x| acc.mul(&x.cleared())).reduce()
}

/// Lifts of the insertion braid moving the last of `k` strands to position `r`, and its inverse.
fn insertion(k: usize, r: usize) -> Result<(AlgElem, AlgElem), IdemError> {
    Ok((lift_to_bmw(&insertion_braid(k, r))?, lift_to_bmw(&insertion_braid_inv(k, r))?))
}

/// Reading index of the cell `big / small`, for shapes differing by one cell.
fn removed_index(big: &Partition, small: &Partition) -> Result<usize, IdemError> {
    let c = big
        .diff_cell(small)
        .ok_or_else(|| IdemError::ShapeMismatch(format!("{small} is not {big} minus one cell")))?;
    Ok(big.reading_index(c).expect("cell in shape"))
}

/// Minimal idempotent `ỹ_λ ∈ K_{|λ|}` whose image in the Hecke quotient is `y_λ`.
pub fn ytilde(lambda: &Partition) -> Result<AlgElem, IdemError> {
    memo(&store().ytilde, lambda, || {
        let m = lambda.size();
        if m <= 1 {
            return Ok(AlgElem::identity(m));
        }
        // Removing the last cell in reading order keeps strand positions fixed.
        let c = *lambda.removable().last().expect("nonempty shape");
        let mu = lambda.remove_cell(c).expect("removable cell");
        let mut mid = ytilde(&mu)?.tensor_id(1);
        for d in mu.removable() {
            let nu = mu.remove_cell(d).expect("removable cell");
            mid = mid.sub(&ytilde_pair(&mu, &nu)?);
        }
        let yhat = lift_to_bmw(&young_idem(lambda)?)?;
        Ok(chain(&[&yhat, &mid, &yhat]))
    })
}

/// `ỹ_{(λ,ν)} = ⟨ν⟩/⟨λ⟩ (ỹ_λ⊗1)(ỹ_ν⊗h)(ỹ_λ⊗1)` on `|λ|+1` strands, for `ν = λ` minus one cell.
/// The cell's strand is moved next to the hook by a positive permutation braid.
pub fn ytilde_pair(lambda: &Partition, nu: &Partition) -> Result<AlgElem, IdemError> {
    memo(&store().pairs, &(lambda.clone(), nu.clone()), || {
        let r = removed_index(lambda, nu)?;
        let k = lambda.size();
        let (rho, rho_inv) = insertion(k, r)?;
        let x = ytilde(lambda)?.tensor_id(1);
        let y = ytilde(nu)?;
        let scale = qdim_quotient(nu, lambda)?;
        // ỹ_ν⊗h = (ỹ_ν⊗cap)(ỹ_ν⊗cup), so the product factors through |λ|−1 points.
        let down = chain(&[&x, &rho_inv.tensor_id(1), &y.tensor(&AlgElem::cap(2, 1))]);
        let up = chain(&[&y.tensor(&AlgElem::cup(0, 1)), &rho.tensor_id(1), &x]);
        Ok(down.mul(&up).scale(&scale))
    })
}

/// Matrix-unit data of an up-down tableau.
pub fn path_unit(path: &UpDownTableau) -> Result<Arc<PathUnit>, IdemError> {
    memo(&store().units, path, || {
        let n = path.len();
        let Some(parent) = path.parent().filter(|_| n > 1) else {
            let one = AlgElem::identity(n);
            return Ok(Arc::new(PathUnit { a: one.clone(), b: one.clone(), q: one }));
        };
        let up = path_unit(&parent)?;
        let (prev, cur) = (path.prev_shape(), path.shape());
        let (a1, b1) = (up.a.tensor_id(1), up.b.tensor_id(1));
        let (a, b) = if path.last_step_grows() {
            let (rho, rho_inv) = insertion(cur.size(), removed_index(&cur, &prev)?)?;
            let y = ytilde(&cur)?;
            (a1.mul(&rho).mul(&y), y.mul(&rho_inv).mul(&b1))
        } else {
            let (rho, rho_inv) = insertion(prev.size(), removed_index(&prev, &cur)?)?;
            let y = ytilde(&cur)?;
            let scale = qdim_quotient(&cur, &prev)?;
            let cap = y.tensor(&AlgElem::cap(2, 1));
            let cup = y.tensor(&AlgElem::cup(0, 1));
            (a1.mul(&rho_inv.tensor_id(1)).mul(&cap).scale(&scale), cup.mul(&rho.tensor_id(1)).mul(&b1))
        };
        let q = a.mul(&b);
        Ok(Arc::new(PathUnit { a, b, q }))
    })
}

fn tableau_path(t: &StdTableau) -> UpDownTableau {
    t.to_updown().expect("standard tableaux are up-down tableaux")
}

/// Path idempotent `p̃_t ∈ K_{|t|}` of a standard tableau.
pub fn ptilde(t: &StdTableau) -> Result<AlgElem, IdemError> {
    Ok(path_unit(&tableau_path(t))?.q.clone())
}

/// `p̃_{(t,ν)} = (𝔞_t⊗1) ỹ_{(λ,ν)} (𝔟_t⊗1)` on `|t|+1` strands.
pub fn ptilde_pair(t: &StdTableau, nu: &Partition) -> Result<AlgElem, IdemError> {
    let u = path_unit(&tableau_path(t))?;
    let pair = ytilde_pair(t.shape(), nu)?;
    Ok(u.a.tensor_id(1).mul(&pair).mul(&u.b.tensor_id(1)))
}

/// `p̃⁺_t = p̃_t⊗1 − Σ_ν p̃_{(t,ν)}` on `|t|+1` strands.
pub fn ptilde_plus(t: &StdTableau) -> Result<AlgElem, IdemError> {
    memo(&store().plus, t, || {
        let mut out = ptilde(t)?.tensor_id(1);
        for c in t.shape().removable() {
            let nu = t.shape().remove_cell(c).expect("removable cell");
            out = out.sub(&ptilde_pair(t, &nu)?);
        }
        Ok(out)
    })
}

/// `Σ_t p̃⁺_t` over standard tableaux with `n − 1` cells: the section applied to `1`.
pub fn section_projector(n: usize) -> Result<AlgElem, IdemError> {
    memo(&store().projectors, &n, || {
        if n == 0 {
            return Ok(AlgElem::identity(0));
        }
        let mut out = AlgElem::zero(n, n);
        for lambda in Partition::all(n - 1) {
            for t in enumerate_standard(&lambda) {
                out = out.add(&ptilde_plus(&t)?);
            }
        }
        Ok(out)
    })
}

/// The section `s_n(x) = Σ_{t,τ} p̃⁺_t x̂ p̃⁺_τ` of the quotient map `K_n → H_n`.
pub fn section(x: &HeckeElem) -> Result<AlgElem, IdemError> {
    let p = section_projector(x.n())?;
    Ok(p.mul(&lift_to_bmw(x)?).mul(&p))
}

/// `z^{(n)}_λ = Σ_{Λ_n = λ} q_Λ`.
pub fn central_idempotent(n: usize, lambda: &Partition) -> Result<AlgElem, IdemError> {
    let mut out = AlgElem::zero(n, n);
    for path in crate::young::enumerate_updown(n, lambda) {
        out = out.add(&path_unit(&path)?.q);
    }
    Ok(out)
}

/// Everything built at strand count `n`.
#[derive(Clone, Debug, Default)]
pub struct MatrixUnitLevel {
    pub n: usize,
    /// `ỹ_λ` for `|λ| = n`.
    pub ytilde: BTreeMap<Partition, AlgElem>,
    /// `ỹ_{(λ,ν)}` for `|λ| = n − 1`.
    pub pairs: BTreeMap<(Partition, Partition), AlgElem>,
    /// `p̃_t` for `|t| = n`.
    pub ptilde: BTreeMap<StdTableau, AlgElem>,
    /// `p̃⁺_t` for `|t| = n − 1`.
    pub ptilde_plus: BTreeMap<StdTableau, AlgElem>,
    pub units: BTreeMap<UpDownTableau, Arc<PathUnit>>,
    pub central: BTreeMap<Partition, AlgElem>,
    pub qdims: BTreeMap<Partition, RingElem>,
}

/// Matrix units and idempotents for every strand count up to a bound.
#[derive(Clone, Debug, Default)]
pub struct MatrixUnitDB {
    pub levels: Vec<MatrixUnitLevel>,
}

/// Build all levels `0..=n`. Levels are filled in increasing order and
/// the shapes of one level are built on separate threads.
pub fn matrix_units(n: usize) -> Result<MatrixUnitDB, IdemError> {
    let mut db = MatrixUnitDB::default();
    for k in 0..=n {
        db.levels.push(build_level(k)?);
    }
    Ok(db)
}

fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    std::thread::scope(|s| {
        let handles: Vec<_> = items.iter().map(|x| s.spawn(|| f(x))).collect();
        handles.into_iter().map(|h| h.join().expect("worker thread")).collect()
    })
}

fn build_level(n: usize) -> Result<MatrixUnitLevel, IdemError> {
    let mut level = MatrixUnitLevel { n, ..Default::default() };
    let full = Partition::all(n);
    for (lambda, y) in full.iter().zip(par_map(&full, ytilde)) {
        level.ytilde.insert(lambda.clone(), y?);
    }
    if n > 0 {
        for lambda in Partition::all(n - 1) {
            for c in lambda.removable() {
                let nu = lambda.remove_cell(c).expect("removable cell");
                level.pairs.insert((lambda.clone(), nu.clone()), ytilde_pair(&lambda, &nu)?);
            }
            for t in enumerate_standard(&lambda) {
                level.ptilde_plus.insert(t.clone(), ptilde_plus(&t)?);
            }
        }
    }
    let paths = all_updown(n);
    for (path, u) in paths.iter().zip(par_map(&paths, path_unit)) {
        level.units.insert(path.clone(), u?);
    }
    for lambda in &full {
        for t in enumerate_standard(lambda) {
            let q = level.units[&tableau_path(&t)].q.clone();
            level.ptilde.insert(t, q);
        }
    }
    for lambda in updown_shapes(n) {
        let mut z = AlgElem::zero(n, n);
        for (path, u) in &level.units {
            if path.shape() == lambda {
                z = z.add(&u.q);
            }
        }
        level.central.insert(lambda.clone(), z);
        level.qdims.insert(lambda.clone(), qdim(&lambda));
    }
    Ok(level)
}

impl MatrixUnitDB {
    pub fn level(&self, n: usize) -> Option<&MatrixUnitLevel> {
        self.levels.get(n)
    }

    pub fn to_json(&self) -> Value {
        let levels: Vec<Value> = self.levels.iter().map(MatrixUnitLevel::to_json).collect();
        json!({ "levels": levels })
    }
}

fn keyed<K>(map: &BTreeMap<K, AlgElem>, key: impl Fn(&K) -> String) -> Value {
    Value::Object(map.iter().map(|(k, v)| (key(k), v.to_json())).collect::<Map<_, _>>())
}

impl MatrixUnitLevel {
    pub fn to_json(&self) -> Value {
        let units: Map<String, Value> = self
            .units
            .iter()
            .map(|(p, u)| (p.path_string(), json!({"a": u.a.to_json(), "b": u.b.to_json(), "q": u.q.to_json()})))
            .collect();
        let qdims: Map<String, Value> = self.qdims.iter().map(|(l, d)| (l.to_string(), json!(d.to_string()))).collect();
        json!({
            "n": self.n,
            "ytilde": keyed(&self.ytilde, Partition::to_string),
            "pairs": keyed(&self.pairs, |(l, v)| format!("{l}|{v}")),
            "ptilde": keyed(&self.ptilde, |t| t.to_string()),
            "ptilde_plus": keyed(&self.ptilde_plus, |t| t.to_string()),
            "units": units,
            "central": keyed(&self.central, Partition::to_string),
            "qdim": qdims,
        })
    }
}
