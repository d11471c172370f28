//! The Hecke algebra `H_n` on the basis of positive permutation braids,
//! with braid-word certificates for lifting elements to `K_n`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;
use serde_json::{json, Value};
use thiserror::Error;

use crate::coeff::{hecke_loop_value, qint, ybracket, CoeffError, LaurentPoly, RingElem, RingSum};
use crate::young::{Cell, Partition, StdTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("quantum integer [{0}] is not invertible")]
    NonInvertibleQuantumInteger(i32),
    #[error("normalization of the idempotent for {0} vanishes")]
    NormalizationVanishes(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("bad element JSON: {0}")]
    Json(String),
}

/// Permutation of `0..n`: the strand starting at bottom position `i` ends at top position `p[i]`.
pub type Perm = Vec<u8>;

/// Signed braid word, bottom first: `i` for `σ_i`, `-i` for `σ_i^{-1}` (1-based).
pub type BraidWord = Vec<i32>;

/// Number of inversions.
pub fn length(p: &[u8]) -> usize {
    let mut l = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                l += 1;
            }
        }
    }
    l
}

/// Reduced word of the positive permutation braid of `p`.
pub fn reduced_word(p: &[u8]) -> BraidWord {
    let mut cur = p.to_vec();
    let mut word = Vec::new();
    let mut changed = true;
    while changed {
        changed = false;
        for k in 0..cur.len().saturating_sub(1) {
            if cur[k] > cur[k + 1] {
                cur.swap(k, k + 1);
                word.push(k as i32 + 1);
                changed = true;
            }
        }
    }
    word
}

fn identity_perm(n: usize) -> Perm {
    (0..n as u8).collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(cur: &mut Perm, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v as u8);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn z_poly() -> LaurentPoly {
    LaurentPoly::from_terms([((0, 2), 1.into()), ((0, -2), (-1).into())])
}

/// Right multiplication of `Σ c_π w_π` (integer polynomial coefficients) by `σ_{i+1}`.
fn times_sigma(x: &BTreeMap<Perm, LaurentPoly>, i: usize) -> BTreeMap<Perm, LaurentPoly> {
    let z = z_poly();
    let mut out: BTreeMap<Perm, LaurentPoly> = BTreeMap::new();
    let mut add = |p: Perm, c: LaurentPoly| {
        let e = out.entry(p).or_insert_with(LaurentPoly::zero);
        *e = e.add(&c);
    };
    for (p, c) in x {
        let q: Perm = p.iter().map(|&v| if v as usize == i { v + 1 } else if v as usize == i + 1 { v - 1 } else { v }).collect();
        let a = p.iter().position(|&v| v as usize == i).unwrap();
        let b = p.iter().position(|&v| v as usize == i + 1).unwrap();
        if a < b {
            add(q, c.clone());
        } else {
            add(q, c.clone());
            add(p.clone(), c.mul(&z));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

type ProductKey = (Perm, Perm);

#[derive(Default)]
struct Tables {
    products: RwLock<HashMap<ProductKey, Arc<Vec<(Perm, LaurentPoly)>>>>,
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(Tables::default)
}

/// `w_π · w_ρ` in the permutation basis, with coefficients in `ℤ[v^{±1}]`.
fn basis_product(p: &Perm, r: &Perm) -> Arc<Vec<(Perm, LaurentPoly)>> {
    let key = (p.clone(), r.clone());
    if let Some(v) = tables().products.read().get(&key) {
        return v.clone();
    }
    let mut x = BTreeMap::from([(p.clone(), LaurentPoly::one())]);
    for g in reduced_word(r) {
        x = times_sigma(&x, g as usize - 1);
    }
    let v = Arc::new(x.into_iter().collect::<Vec<_>>());
    tables().products.write().entry(key).or_insert(v).clone()
}

/// Formal combination of signed braid words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Certificate {
    words: BTreeMap<BraidWord, RingElem>,
}

/// Above this many words a product certificate is replaced by the
/// permutation-braid words of the element's support.
const CERT_LIMIT: usize = 4096;

impl Certificate {
    pub fn word(w: BraidWord) -> Self {
        Self { words: BTreeMap::from([(w, RingElem::one())]) }
    }

    pub fn words(&self) -> impl Iterator<Item = (&BraidWord, &RingElem)> {
        self.words.iter()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let mut words = self.words.clone();
        for (w, c) in &other.words {
            let sum = words.get(w).map(|x| x + c).unwrap_or_else(|| c.clone());
            if sum.is_zero() {
                words.remove(w);
            } else {
                words.insert(w.clone(), sum);
            }
        }
        Self { words }
    }

    fn scale(&self, c: &RingElem) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Self { words: self.words.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    fn concat(&self, other: &Self) -> Self {
        let mut words: BTreeMap<BraidWord, RingElem> = BTreeMap::new();
        for (w1, c1) in &self.words {
            for (w2, c2) in &other.words {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                let c = c1 * c2;
                match words.get_mut(&w) {
                    Some(x) => *x = &*x + &c,
                    None => {
                        words.insert(w, c);
                    }
                }
            }
        }
        words.retain(|_, c| !c.is_zero());
        Self { words }
    }

    fn shift(&self, by: i32) -> Self {
        Self {
            words: self
                .words
                .iter()
                .map(|(w, c)| (w.iter().map(|&g| if g > 0 { g + by } else { g - by }).collect(), c.clone()))
                .collect(),
        }
    }
}

/// Element of `H_n`: coefficients on positive permutation braids, plus a certificate.
#[derive(Clone)]
pub struct HeckeElem {
    n: usize,
    terms: BTreeMap<Perm, RingElem>,
    cert: Certificate,
}

impl PartialEq for HeckeElem {
    /// Equality in `H_n`; certificates are not compared.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.terms == other.terms
    }
}

impl Eq for HeckeElem {}

impl HeckeElem {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new(), cert: Certificate::default() }
    }

    pub fn identity(n: usize) -> Self {
        Self::perm(identity_perm(n))
    }

    pub fn scalar(n: usize, c: RingElem) -> Self {
        Self::identity(n).scale(&c)
    }

    /// Positive permutation braid `w_π`.
    pub fn perm(p: Perm) -> Self {
        let word = reduced_word(&p);
        Self { n: p.len(), terms: BTreeMap::from([(p, RingElem::one())]), cert: Certificate::word(word) }
    }

    /// `σ_i` (1-based).
    pub fn sigma(n: usize, i: usize) -> Self {
        let mut p = identity_perm(n);
        p.swap(i - 1, i);
        Self::perm(p)
    }

    /// `σ_i^{-1} = σ_i - (s - s^{-1})`.
    pub fn sigma_inv(n: usize, i: usize) -> Self {
        let mut x = Self::sigma(n, i).sub(&Self::identity(n).scale(&RingElem::z()));
        x.cert = Certificate::word(vec![-(i as i32)]);
        x
    }

    /// Element of a signed braid word.
    pub fn braid(n: usize, word: &[i32]) -> Self {
        let mut x = Self::identity(n);
        for &g in word {
            let gen = if g > 0 { Self::sigma(n, g as usize) } else { Self::sigma_inv(n, (-g) as usize) };
            x = x.mul(&gen);
        }
        x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &RingElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &[u8]) -> RingElem {
        self.terms.get(p).cloned().unwrap_or_else(RingElem::zero)
    }

    pub fn certificate(&self) -> &Certificate {
        &self.cert
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Replace the certificate by the reduced words of the support.
    pub fn with_basis_certificate(&self) -> Self {
        let mut cert = Certificate::default();
        for (p, c) in &self.terms {
            cert = cert.add(&Certificate::word(reduced_word(p)).scale(c));
        }
        Self { n: self.n, terms: self.terms.clone(), cert }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, HeckeError> {
        if self.n != other.n {
            return Err(HeckeError::StrandMismatch { left: self.n, right: other.n });
        }
        let mut terms = self.terms.clone();
        for (p, c) in &other.terms {
            let sum = terms.get(p).map(|x| x + c).unwrap_or_else(|| c.clone());
            if sum.is_zero() {
                terms.remove(p);
            } else {
                terms.insert(p.clone(), sum);
            }
        }
        Ok(Self { n: self.n, terms, cert: self.cert.add(&other.cert) })
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("strand counts agree")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&RingElem::from_int(-1))
    }

    pub fn scale(&self, c: &RingElem) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
            cert: self.cert.scale(c),
        }
    }

    /// Product with `self` below `other`; certificates concatenate.
    pub fn try_mul(&self, other: &Self) -> Result<Self, HeckeError> {
        if self.n != other.n {
            return Err(HeckeError::StrandMismatch { left: self.n, right: other.n });
        }
        let mut acc: BTreeMap<Perm, RingSum> = BTreeMap::new();
        for (p, x) in &self.terms {
            for (r, y) in &other.terms {
                for (q, c) in basis_product(p, r).iter() {
                    acc.entry(q.clone()).or_default().add_product(x, y, c, &LaurentPoly::one());
                }
            }
        }
        let terms: BTreeMap<Perm, RingElem> =
            acc.into_iter().map(|(p, s)| (p, s.finish())).filter(|(_, c)| !c.is_zero()).collect();
        let out = Self { n: self.n, terms, cert: Certificate::default() };
        if self.cert.len() * other.cert.len() > CERT_LIMIT {
            return Ok(out.with_basis_certificate());
        }
        Ok(Self { cert: self.cert.concat(&other.cert), ..out })
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("strand counts agree")
    }

    /// `self ⊗ other`: `other` placed to the right.
    pub fn tensor(&self, other: &Self) -> Self {
        let k = self.n as u8;
        let mut terms = BTreeMap::new();
        for (p, x) in &self.terms {
            for (r, y) in &other.terms {
                let mut q = p.clone();
                q.extend(r.iter().map(|v| v + k));
                terms.insert(q, x * y);
            }
        }
        let cert = self.cert.concat(&other.cert.shift(self.n as i32));
        Self { n: self.n + other.n, terms, cert }
    }

    /// `self ⊗ 1_k`.
    pub fn tensor_id(&self, k: usize) -> Self {
        self.tensor(&Self::identity(k))
    }

    /// Markov trace: `tr(1_1) = (α - α^{-1})/(s - s^{-1})`, closing a positive crossing gives `α`.
    pub fn trace(&self) -> RingElem {
        let mut x = self.clone();
        while x.n > 0 {
            x = x.conditional_expectation();
        }
        x.coeff(&[])
    }

    /// Close the last strand: `H_n → H_{n-1}`.
    pub fn conditional_expectation(&self) -> Self {
        let n = self.n;
        assert!(n > 0, "no strand to close");
        let m = n - 1;
        let mut out = Self::zero(m);
        for (p, c) in &self.terms {
            let k = p[m] as usize;
            // p = ρ then c, with c moving the last strand to position k.
            let rho: Perm = p[..m]
                .iter()
                .map(|&v| if (v as usize) > k { v - 1 } else { v })
                .collect();
            let base = Self::perm(rho);
            let term = if k == m {
                base.scale(&(c * &hecke_loop_value()))
            } else {
                let tail: Vec<i32> = ((k + 1)..m).rev().map(|g| g as i32).collect();
                base.mul(&Self::braid(m, &tail)).scale(&(c * &RingElem::alpha()))
            };
            out = out.add(&term);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(p, c)| json!({"perm": p.iter().map(|v| v + 1).collect::<Vec<_>>(), "coeff": c.to_string()}))
            .collect();
        let cert: Vec<Value> = self
            .cert
            .words()
            .map(|(w, c)| {
                let text: Vec<String> = w.iter().map(|&g| if g > 0 { format!("s{g}") } else { format!("S{}", -g) }).collect();
                json!({"word": text.join(" "), "coeff": c.to_string()})
            })
            .collect();
        json!({"n": self.n, "terms": terms, "certificate": cert})
    }

    pub fn from_json(v: &Value) -> Result<Self, HeckeError> {
        let bad = |w: &str| HeckeError::Json(w.to_string());
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing n"))? as usize;
        let mut terms = BTreeMap::new();
        for t in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))? {
            let p: Perm = t
                .get("perm")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing perm"))?
                .iter()
                .map(|x| x.as_u64().filter(|&x| x >= 1 && x as usize <= n).map(|x| (x - 1) as u8).ok_or_else(|| bad("bad perm")))
                .collect::<Result<_, _>>()?;
            let mut sorted = p.clone();
            sorted.sort();
            if sorted != identity_perm(n) {
                return Err(bad("bad perm"));
            }
            let c: RingElem = t.get("coeff").and_then(Value::as_str).ok_or_else(|| bad("missing coeff"))?.parse()?;
            terms.insert(p, c);
        }
        let mut cert = Certificate::default();
        for t in v.get("certificate").and_then(Value::as_array).into_iter().flatten() {
            let w: BraidWord = t
                .get("word")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("missing word"))?
                .split_whitespace()
                .map(|tok| {
                    let (sign, rest) = match tok.chars().next() {
                        Some('s') => (1, &tok[1..]),
                        Some('S') => (-1, &tok[1..]),
                        _ => return Err(bad("bad generator")),
                    };
                    rest.parse::<i32>().map(|i| sign * i).map_err(|_| bad("bad generator"))
                })
                .collect::<Result<_, _>>()?;
            let c: RingElem = t.get("coeff").and_then(Value::as_str).ok_or_else(|| bad("missing coeff"))?.parse()?;
            cert = cert.add(&Certificate { words: BTreeMap::from([(w, c)]) });
        }
        let x = Self { n, terms, cert };
        Ok(if x.cert.is_empty() && !x.terms.is_empty() { x.with_basis_certificate() } else { x })
    }
}

impl fmt::Debug for HeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| format!("({c})w{:?}", p.iter().map(|v| v + 1).collect::<Vec<_>>()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn factorial_q(n: usize) -> Result<RingElem, HeckeError> {
    let mut out = RingElem::one();
    for j in 1..=n as i32 {
        let q = qint(j);
        if q.is_zero() {
            return Err(HeckeError::NonInvertibleQuantumInteger(j));
        }
        out = out * q;
    }
    Ok(out)
}

fn weighted_sum(n: usize, weight: impl Fn(usize) -> RingElem) -> HeckeElem {
    let mut x = HeckeElem::zero(n);
    for p in all_perms(n) {
        let l = length(&p);
        x = x.add(&HeckeElem::perm(p).scale(&weight(l)));
    }
    x
}

/// Symmetrizer `f_n = [n]!^{-1} s^{-n(n-1)/2} Σ s^{l(π)} w_π`.
pub fn symmetrizer_f(n: usize) -> Result<HeckeElem, HeckeError> {
    let pre = RingElem::s().pow(-((n * n.saturating_sub(1) / 2) as i32)) / factorial_q(n)?;
    Ok(weighted_sum(n, |l| &pre * &RingElem::s().pow(l as i32)))
}

/// Antisymmetrizer `g_n = [n]!^{-1} s^{n(n-1)/2} Σ (-s)^{-l(π)} w_π`.
pub fn antisymmetrizer_g(n: usize) -> Result<HeckeElem, HeckeError> {
    let pre = RingElem::s().pow((n * n.saturating_sub(1) / 2) as i32) / factorial_q(n)?;
    Ok(weighted_sum(n, |l| &pre * &(-RingElem::s()).pow(-(l as i32))))
}

/// Permutation taking the row-reading position of each cell of `λ` to its column-reading position.
fn row_to_column(lambda: &Partition) -> Perm {
    let cells = lambda.cells();
    let mut by_col = cells.clone();
    by_col.sort_by_key(|c| (c.col, c.row));
    cells.iter().map(|c| by_col.iter().position(|d| d == c).unwrap() as u8).collect()
}

fn tensor_all(parts: impl Iterator<Item = Result<HeckeElem, HeckeError>>) -> Result<HeckeElem, HeckeError> {
    let mut x = HeckeElem::identity(0);
    for p in parts {
        x = x.tensor(&p?);
    }
    Ok(x)
}

/// Row symmetrizers composed with column antisymmetrizers, before normalization.
pub fn young_quasi_idem(lambda: &Partition) -> Result<HeckeElem, HeckeError> {
    let rows = tensor_all(lambda.parts().iter().map(|&r| symmetrizer_f(r)))?;
    let cols = tensor_all(lambda.transpose().parts().iter().map(|&c| antisymmetrizer_g(c)))?;
    let w = row_to_column(lambda);
    let mut back = vec![0u8; w.len()];
    for (i, &v) in w.iter().enumerate() {
        back[v as usize] = i as u8;
    }
    Ok(rows.mul(&HeckeElem::perm(w)).mul(&cols).mul(&HeckeElem::perm(back)))
}

/// Minimal idempotent `y_λ`, normalized so that `y_λ² = y_λ`. Strands follow row-reading order.
pub fn young_idem(lambda: &Partition) -> Result<HeckeElem, HeckeError> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, HeckeElem>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(y) = cache.read().get(lambda) {
        return Ok(y.clone());
    }
    let p = young_quasi_idem(lambda)?;
    let sq = p.mul(&p);
    let (key, val) = p.terms.iter().next().ok_or_else(|| HeckeError::NormalizationVanishes(lambda.to_string()))?;
    let c = sq.coeff(key) / val;
    if c.is_zero() || p.scale(&c) != sq {
        return Err(HeckeError::NormalizationVanishes(lambda.to_string()));
    }
    let y = p.scale(&c.inv()?);
    cache.write().insert(lambda.clone(), y.clone());
    Ok(y)
}

/// Positive permutation braid moving the last strand of `n` to position `r` (0-based).
pub fn insertion_braid(n: usize, r: usize) -> HeckeElem {
    let p: Perm = (0..n)
        .map(|i| if i == n - 1 { r as u8 } else if i >= r { i as u8 + 1 } else { i as u8 })
        .collect();
    HeckeElem::perm(p)
}

/// Inverse of [`insertion_braid`], as a product of negative crossings.
pub fn insertion_braid_inv(n: usize, r: usize) -> HeckeElem {
    let word: Vec<i32> = (r + 1..n).map(|g| -(g as i32)).collect();
    HeckeElem::braid(n, &word)
}

/// `(α_t, β_t, p_t)` for a standard tableau `t`.
pub fn tableau_morphisms(t: &StdTableau) -> Result<(HeckeElem, HeckeElem, HeckeElem), HeckeError> {
    let n = t.size();
    if n <= 1 {
        let one = HeckeElem::identity(n);
        return Ok((one.clone(), one.clone(), one));
    }
    let parent = t.parent().expect("nonempty tableau");
    let (a1, b1, _) = tableau_morphisms(&parent)?;
    let y = young_idem(t.shape())?;
    let c: Cell = t.last_cell().expect("nonempty tableau");
    let r = t.shape().reading_index(c).expect("cell in shape");
    let a = a1.tensor_id(1).mul(&insertion_braid(n, r)).mul(&y);
    let b = y.mul(&insertion_braid_inv(n, r)).mul(&b1.tensor_id(1));
    let p = a.mul(&b);
    Ok((a, b, p))
}

/// `∏_cells (α s^{cn} - α^{-1} s^{-cn}) / (s^{hl} - s^{-hl})`.
pub fn hecke_qdim(lambda: &Partition) -> RingElem {
    let mut out = RingElem::one();
    for c in lambda.cells() {
        let hl = lambda.hook_length(c).expect("cell in shape") as i32;
        out = out * ybracket(c.content()) / qint(hl);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::s_to_neg_inv;
    use crate::young::enumerate_standard;

    fn z() -> RingElem {
        RingElem::z()
    }

    #[test]
    fn quadratic_and_braid_relations() {
        let s1 = HeckeElem::sigma(2, 1);
        assert_eq!(s1.mul(&s1), HeckeElem::identity(2).add(&s1.scale(&z())));
        assert_eq!(s1.mul(&HeckeElem::sigma_inv(2, 1)), HeckeElem::identity(2));
        let a = HeckeElem::braid(3, &[1, 2, 1]);
        let b = HeckeElem::braid(3, &[2, 1, 2]);
        assert_eq!(a, b);
        assert_eq!(a, HeckeElem::perm(vec![2, 1, 0]));
    }

    #[test]
    fn length_additive_products() {
        for p in all_perms(3) {
            for r in all_perms(3) {
                let pr: Perm = p.iter().map(|&v| r[v as usize]).collect();
                if length(&pr) == length(&p) + length(&r) {
                    assert_eq!(HeckeElem::perm(p.clone()).mul(&HeckeElem::perm(r.clone())), HeckeElem::perm(pr));
                }
            }
        }
    }

    #[test]
    fn symmetrizers() {
        let s = RingElem::s();
        let f2 = symmetrizer_f(2).unwrap();
        let expect = HeckeElem::identity(2).scale(&s.inv().unwrap()).add(&HeckeElem::sigma(2, 1)).scale(&qint(2).inv().unwrap());
        assert_eq!(f2, expect);
        let g2 = antisymmetrizer_g(2).unwrap();
        let expect = HeckeElem::identity(2).scale(&s).sub(&HeckeElem::sigma(2, 1)).scale(&qint(2).inv().unwrap());
        assert_eq!(g2, expect);
        for n in 1..=4 {
            let f = symmetrizer_f(n).unwrap();
            let g = antisymmetrizer_g(n).unwrap();
            assert_eq!(f.mul(&f), f);
            assert_eq!(g.mul(&g), g);
            for i in 1..n {
                let si = HeckeElem::sigma(n, i);
                assert_eq!(f.mul(&si), f.scale(&s));
                assert_eq!(g.mul(&si), g.scale(&-s.inv().unwrap()));
            }
        }
        assert_eq!(symmetrizer_f(1).unwrap(), HeckeElem::identity(1));
    }

    #[test]
    fn young_idempotents() {
        for n in 1..=4 {
            for lambda in Partition::all(n) {
                let y = young_idem(&lambda).unwrap();
                assert_eq!(y.mul(&y), y, "{lambda}");
                assert_eq!(y.trace(), hecke_qdim(&lambda), "{lambda}");
            }
        }
        assert_eq!(young_idem(&Partition::of(&[3])).unwrap(), symmetrizer_f(3).unwrap());
        assert_eq!(young_idem(&Partition::of(&[1, 1, 1])).unwrap(), antisymmetrizer_g(3).unwrap());
    }

    #[test]
    fn markov_trace() {
        let d = hecke_loop_value();
        assert_eq!(HeckeElem::identity(3).trace(), d.pow(3));
        assert_eq!(HeckeElem::sigma(2, 1).trace(), RingElem::alpha() * &d);
        let x = HeckeElem::braid(3, &[1, -2, 1]);
        assert_eq!(x.tensor_id(1).mul(&HeckeElem::sigma(4, 3)).trace(), RingElem::alpha() * x.trace());
    }

    #[test]
    fn matrix_units_n3() {
        let mut sum = HeckeElem::zero(3);
        let mut units = Vec::new();
        for lambda in Partition::all(3) {
            for t in enumerate_standard(&lambda) {
                let (a, b, p) = tableau_morphisms(&t).unwrap();
                let y = young_idem(&lambda).unwrap();
                assert_eq!(b.mul(&a), y);
                assert_eq!(p.mul(&p), p);
                sum = sum.add(&p);
                units.push((lambda.clone(), a, b));
            }
        }
        assert_eq!(sum, HeckeElem::identity(3));
        for (i, (l1, _, b1)) in units.iter().enumerate() {
            for (j, (l2, a2, _)) in units.iter().enumerate() {
                if l1 == l2 && i != j {
                    assert!(b1.mul(a2).is_zero());
                }
            }
        }
    }

    #[test]
    fn qdim_values() {
        assert_eq!(hecke_qdim(&Partition::of(&[1])), hecke_loop_value());
        let a = RingElem::alpha();
        let s = RingElem::s();
        let ai = a.inv().unwrap();
        let si = s.inv().unwrap();
        let expect = (&a - &ai) * (&a * &s - &ai * &si) / (z() * (s.pow(2) - si.pow(2)));
        assert_eq!(hecke_qdim(&Partition::of(&[2])), expect);
        for lambda in Partition::all(4) {
            assert_eq!(s_to_neg_inv(&hecke_qdim(&lambda)).unwrap(), hecke_qdim(&lambda.transpose()));
        }
    }

    #[test]
    fn json_roundtrip() {
        let f = symmetrizer_f(2).unwrap();
        let back = HeckeElem::from_json(&f.to_json()).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.certificate(), f.certificate());
    }
}
