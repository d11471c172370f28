//! Partitions, cells, standard and up-down tableaux.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YoungError {
    #[error("cell ({0}, {1}) is outside the diagram")]
    CellOutsideDiagram(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

/// Box `(row, col)` of a Young diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// `j - i`
    pub fn content(&self) -> i32 {
        self.col as i32 - self.row as i32
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = YoungError;

    fn try_from(parts: Vec<usize>) -> Result<Self, YoungError> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Trailing zeros are dropped; the remaining parts must be weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, YoungError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(YoungError::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Convenience constructor for literals; panics on invalid input.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (1-based), zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based).
    pub fn col(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn transpose(&self) -> Self {
        let w = self.row(1);
        Self { parts: (1..=w).map(|j| self.col(j)).collect() }
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.row(c.row)
    }

    /// Cells in row-reading order: row 1 left to right, then row 2, ...
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push(Cell::new(i + 1, j));
            }
        }
        out
    }

    /// Position of `c` in row-reading order (0-based).
    pub fn reading_index(&self, c: Cell) -> Option<usize> {
        if !self.contains(c) {
            return None;
        }
        Some(self.parts[..c.row - 1].iter().sum::<usize>() + c.col - 1)
    }

    pub fn hook_length(&self, c: Cell) -> Result<usize, YoungError> {
        self.check(c)?;
        Ok(self.row(c.row) + self.col(c.col) + 1 - c.row - c.col)
    }

    /// `d_λ(i, j)`, or `d'_λ(i, j)` when `primed`.
    pub fn dfun(&self, c: Cell, primed: bool) -> Result<i32, YoungError> {
        self.check(c)?;
        let (i, j) = (c.row, c.col);
        let upper = if primed { i < j } else { i <= j };
        Ok(if upper {
            self.row(i) as i32 + self.row(j) as i32 - i as i32 - j as i32 + 1
        } else {
            -(self.col(i) as i32) - self.col(j) as i32 + i as i32 + j as i32 - 1
        })
    }

    fn check(&self, c: Cell) -> Result<(), YoungError> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(YoungError::CellOutsideDiagram(c.row, c.col))
        }
    }

    /// Cells that can be added, from top to bottom.
    pub fn addable(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 1..=self.len() + 1 {
            let c = Cell::new(i, self.row(i) + 1);
            if i == 1 || self.row(i - 1) > self.row(i) {
                out.push(c);
            }
        }
        out
    }

    /// Cells that can be removed, from top to bottom.
    pub fn removable(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.row(i) > self.row(i + 1))
            .map(|i| Cell::new(i, self.row(i)))
            .collect()
    }

    /// `(addable, removable)`
    pub fn corners(&self) -> (Vec<Cell>, Vec<Cell>) {
        (self.addable(), self.removable())
    }

    pub fn add_cell(&self, c: Cell) -> Option<Self> {
        if !self.addable().contains(&c) {
            return None;
        }
        let mut parts = self.parts.clone();
        if c.row > parts.len() {
            parts.push(1);
        } else {
            parts[c.row - 1] += 1;
        }
        Some(Self { parts })
    }

    pub fn remove_cell(&self, c: Cell) -> Option<Self> {
        if !self.removable().contains(&c) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[c.row - 1] -= 1;
        Self::new(parts).ok()
    }

    /// The single cell of `self` not in `smaller`, if they differ by one cell.
    pub fn diff_cell(&self, smaller: &Partition) -> Option<Cell> {
        if self.size() != smaller.size() + 1 {
            return None;
        }
        self.removable().into_iter().find(|&c| self.remove_cell(c).as_ref() == Some(smaller))
    }

    /// `Σ_{c ∈ λ} cn(c)`
    pub fn content_sum(&self) -> i32 {
        self.cells().iter().map(Cell::content).sum()
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for k in (1..=n.min(max)).rev() {
                cur.push(k);
                rec(n - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses `2,1`; the empty partition is `0`, `()` or the empty string.
impl FromStr for Partition {
    type Err = YoungError;

    fn from_str(s: &str) -> Result<Self, YoungError> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "0" || t == "∅" {
            return Ok(Self::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| YoungError::InvalidPartition(s.to_string()))?;
        if parts.contains(&0) {
            return Err(YoungError::InvalidPartition(s.to_string()));
        }
        Self::new(parts).map_err(|_| YoungError::InvalidPartition(s.to_string()))
    }
}

/// Standard tableau, stored as the chain of shapes it grows through.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StdTableau {
    /// `cells[k]` holds the entry `k + 1`.
    cells: Vec<Cell>,
    shape: Partition,
}

impl StdTableau {
    /// Builds a tableau from the cells of the entries `1, 2, ...` in order.
    pub fn from_cells(cells: Vec<Cell>) -> Option<Self> {
        let mut shape = Partition::empty();
        for &c in &cells {
            shape = shape.add_cell(c)?;
        }
        Some(Self { cells, shape })
    }

    pub fn single() -> Self {
        Self::from_cells(vec![Cell::new(1, 1)]).unwrap()
    }

    pub fn empty() -> Self {
        Self { cells: Vec::new(), shape: Partition::empty() }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Cell holding the largest entry.
    pub fn last_cell(&self) -> Option<Cell> {
        self.cells.last().copied()
    }

    /// Tableau with the largest entry removed.
    pub fn parent(&self) -> Option<Self> {
        let mut cells = self.cells.clone();
        cells.pop()?;
        Self::from_cells(cells)
    }

    pub fn child(&self, c: Cell) -> Option<Self> {
        let mut cells = self.cells.clone();
        cells.push(c);
        Self::from_cells(cells)
    }

    /// Rows of entries.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = self.shape.parts().iter().map(|&p| vec![0; p]).collect();
        for (k, c) in self.cells.iter().enumerate() {
            rows[c.row - 1][c.col - 1] = k + 1;
        }
        rows
    }

    /// Chain of shapes `λ(t_1), ..., λ(t_n)`.
    pub fn shapes(&self) -> Vec<Partition> {
        let mut out = Vec::with_capacity(self.cells.len());
        let mut shape = Partition::empty();
        for &c in &self.cells {
            shape = shape.add_cell(c).unwrap();
            out.push(shape.clone());
        }
        out
    }

    pub fn to_updown(&self) -> Option<UpDownTableau> {
        UpDownTableau::new(self.shapes()).ok()
    }
}

impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

impl fmt::Debug for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All standard tableaux of shape `λ`.
pub fn enumerate_standard(shape: &Partition) -> Vec<StdTableau> {
    fn rec(target: &Partition, t: StdTableau, out: &mut Vec<StdTableau>) {
        if t.shape() == target {
            out.push(t);
            return;
        }
        for c in t.shape().addable() {
            if target.contains(c) {
                rec(target, t.child(c).unwrap(), out);
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, StdTableau::empty(), &mut out);
    out
}

/// Sequence of shapes `Λ_1 = (1), Λ_2, ..., Λ_n`, each differing from the
/// previous by one added or removed cell.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpDownTableau {
    shapes: Vec<Partition>,
}

impl UpDownTableau {
    pub fn new(shapes: Vec<Partition>) -> Result<Self, YoungError> {
        let bad = || YoungError::InvalidPartition(format!("{shapes:?} is not an up-down tableau"));
        if shapes.is_empty() {
            return Ok(Self { shapes });
        }
        if shapes[0] != Partition::of(&[1]) {
            return Err(bad());
        }
        for w in shapes.windows(2) {
            if w[1].diff_cell(&w[0]).is_none() && w[0].diff_cell(&w[1]).is_none() {
                return Err(bad());
            }
        }
        Ok(Self { shapes })
    }

    pub fn empty() -> Self {
        Self { shapes: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// `Λ_n` (the empty partition for the empty tableau).
    pub fn shape(&self) -> Partition {
        self.shapes.last().cloned().unwrap_or_default()
    }

    /// `Λ_{n-1}`
    pub fn prev_shape(&self) -> Partition {
        if self.shapes.len() < 2 {
            Partition::empty()
        } else {
            self.shapes[self.shapes.len() - 2].clone()
        }
    }

    /// `Λ'`, the tableau with the last step removed.
    pub fn parent(&self) -> Option<Self> {
        let mut s = self.shapes.clone();
        s.pop()?;
        Some(Self { shapes: s })
    }

    pub fn child(&self, next: Partition) -> Option<Self> {
        let mut s = self.shapes.clone();
        s.push(next);
        Self::new(s).ok()
    }

    /// True if the last step adds a cell.
    pub fn last_step_grows(&self) -> bool {
        self.shape().size() > self.prev_shape().size()
    }

    /// Path string such as `1>2>1` or `1>1,1>0`.
    pub fn path_string(&self) -> String {
        self.shapes.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(">")
    }

    /// All shapes reachable from `self` in one step.
    pub fn children(&self) -> Vec<Self> {
        let last = self.shape();
        let mut out = Vec::new();
        for c in last.addable() {
            out.push(self.child(last.add_cell(c).unwrap()).unwrap());
        }
        for c in last.removable() {
            out.push(self.child(last.remove_cell(c).unwrap()).unwrap());
        }
        out.sort();
        out
    }
}

impl fmt::Display for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.path_string())
    }
}

impl fmt::Debug for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for UpDownTableau {
    type Err = YoungError;

    fn from_str(s: &str) -> Result<Self, YoungError> {
        let shapes = s.split('>').map(str::parse).collect::<Result<Vec<Partition>, _>>()?;
        Self::new(shapes)
    }
}

/// All up-down tableaux of length `n` (any final shape), sorted.
pub fn all_updown(n: usize) -> Vec<UpDownTableau> {
    if n == 0 {
        return vec![UpDownTableau::empty()];
    }
    let mut level = vec![UpDownTableau::new(vec![Partition::of(&[1])]).unwrap()];
    for _ in 1..n {
        level = level.iter().flat_map(|t| t.children()).collect();
    }
    level.sort();
    level
}

/// Up-down tableaux of length `n` ending at `shape`.
pub fn enumerate_updown(n: usize, shape: &Partition) -> Vec<UpDownTableau> {
    all_updown(n).into_iter().filter(|t| &t.shape() == shape).collect()
}

/// Shapes reachable by up-down tableaux of length `n`, sorted by size then lexicographically descending.
pub fn updown_shapes(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut k = n % 2;
    while k <= n {
        out.extend(Partition::all(k));
        k += 2;
    }
    out
}

/// `(2n - 1)!!`
pub fn double_factorial_odd(n: usize) -> u128 {
    (1..=n as u128).map(|k| 2 * k - 1).product()
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of up-down tableaux of length `n` and shape `λ`, by dynamic programming.
pub fn count_updown(n: usize, shape: &Partition) -> u128 {
    use std::collections::HashMap;
    let mut level: HashMap<Partition, u128> = HashMap::new();
    if n == 0 {
        return u128::from(shape.is_empty());
    }
    level.insert(Partition::of(&[1]), 1);
    for _ in 1..n {
        let mut next: HashMap<Partition, u128> = HashMap::new();
        for (p, c) in &level {
            for a in p.addable() {
                *next.entry(p.add_cell(a).unwrap()).or_default() += c;
            }
            for r in p.removable() {
                *next.entry(p.remove_cell(r).unwrap()).or_default() += c;
            }
        }
        level = next;
    }
    level.get(shape).copied().unwrap_or(0)
}
