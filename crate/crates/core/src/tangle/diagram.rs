//! Port-graph tangle diagrams and descending skein normalization.

use std::collections::HashMap;

use super::matching::Matching;
use super::skein::{SkeinExp, SkeinPoly};
use super::Op;

const SW: usize = 0;
const SE: usize = 1;
const NW: usize = 2;
const NE: usize = 3;
const NONE: u32 = u32::MAX;

/// A tangle diagram: boundary ports first (bottom row then top row), then
/// four ports per crossing. `link` joins ports along arcs of the diagram.
#[derive(Clone, Debug)]
pub(crate) struct Diagram {
    nb: usize,
    nt: usize,
    link: Vec<u32>,
    over_sw: Vec<bool>,
    alive: Vec<bool>,
    loops: u32,
}

#[derive(Clone, Copy)]
enum End {
    Open,
    At(u32),
}

struct Builder {
    pieces: Vec<[End; 2]>,
    link: Vec<u32>,
}

impl Builder {
    fn attach(&mut self, (p, s): (usize, usize), port: u32) {
        self.pieces[p][s] = End::At(port);
        if let End::At(q) = self.pieces[p][1 - s] {
            self.link[port as usize] = q;
            self.link[q as usize] = port;
        }
    }

    fn piece(&mut self, ends: [End; 2]) -> usize {
        self.pieces.push(ends);
        self.pieces.len() - 1
    }
}

pub(crate) fn width_after(start: usize, word: &[Op]) -> usize {
    word.iter().fold(start, |w, op| match op {
        Op::Cap(_) => w - 2,
        Op::Cup(_) => w + 2,
        Op::Cross(..) => w,
    })
}

impl Diagram {
    /// Build the diagram of a slice word on `bottom` strands.
    pub(crate) fn from_word(bottom: usize, word: &[Op]) -> Diagram {
        let nt = width_after(bottom, word);
        let nbd = bottom + nt;
        let ncross = word.iter().filter(|op| matches!(op, Op::Cross(..))).count();
        let mut b = Builder { pieces: Vec::new(), link: vec![NONE; nbd + 4 * ncross] };
        let mut over_sw = Vec::with_capacity(ncross);
        let mut loops = 0;
        // Each level entry is the open end (piece, side) currently at that position.
        let mut level: Vec<(usize, usize)> = Vec::new();
        for i in 0..bottom {
            let p = b.piece([End::At(i as u32), End::Open]);
            level.push((p, 1));
        }
        for op in word {
            match *op {
                Op::Cross(i, positive) => {
                    let c = over_sw.len();
                    over_sw.push(positive);
                    let port = |k: usize| (nbd + 4 * c + k) as u32;
                    b.attach(level[i], port(SW));
                    b.attach(level[i + 1], port(SE));
                    let p1 = b.piece([End::At(port(NW)), End::Open]);
                    let p2 = b.piece([End::At(port(NE)), End::Open]);
                    level[i] = (p1, 1);
                    level[i + 1] = (p2, 1);
                }
                Op::Cup(i) => {
                    let p = b.piece([End::Open, End::Open]);
                    level.insert(i, (p, 0));
                    level.insert(i + 1, (p, 1));
                }
                Op::Cap(i) => {
                    let (p, sp) = level[i];
                    let (q, sq) = level[i + 1];
                    level.drain(i..i + 2);
                    if p == q {
                        loops += 1;
                        continue;
                    }
                    let ep = b.pieces[p][1 - sp];
                    let eq = b.pieces[q][1 - sq];
                    match (ep, eq) {
                        (End::At(x), End::At(y)) => {
                            b.link[x as usize] = y;
                            b.link[y as usize] = x;
                        }
                        _ => {
                            let r = b.piece([ep, eq]);
                            for entry in level.iter_mut() {
                                if *entry == (p, 1 - sp) {
                                    *entry = (r, 0);
                                } else if *entry == (q, 1 - sq) {
                                    *entry = (r, 1);
                                }
                            }
                        }
                    }
                }
            }
        }
        for (j, entry) in level.clone().into_iter().enumerate() {
            b.attach(entry, (bottom + j) as u32);
        }
        debug_assert!(b.link.iter().all(|&l| l != NONE));
        Diagram { nb: bottom, nt, link: b.link, over_sw, alive: vec![true; ncross], loops }
    }

    fn nbd(&self) -> usize {
        self.nb + self.nt
    }

    fn port(&self, c: usize, k: usize) -> usize {
        self.nbd() + 4 * c + k
    }

    fn crossing_of(&self, p: usize) -> (usize, usize) {
        let q = p - self.nbd();
        (q / 4, q % 4)
    }

    fn on_over(&self, c: usize, k: usize) -> bool {
        if self.over_sw[c] {
            k == SW || k == NE
        } else {
            k == SE || k == NW
        }
    }

    /// Walk every component in the canonical order. Arcs go first, ordered by
    /// their smaller boundary point; closed components follow.
    /// Calls `visit(crossing, entry_port, component)` at each crossing pass.
    fn walk(&self, mut visit: impl FnMut(usize, usize, usize) -> bool) -> Option<(Vec<usize>, u32)> {
        let nbd = self.nbd();
        let mut seen = vec![false; self.link.len()];
        let mut partner = vec![0; nbd];
        let mut comp = 0;
        for start in 0..nbd {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut cur = self.link[start] as usize;
            loop {
                if cur < nbd {
                    seen[cur] = true;
                    partner[start] = cur;
                    partner[cur] = start;
                    break;
                }
                let (c, k) = self.crossing_of(cur);
                if !visit(c, k, comp) {
                    return None;
                }
                let out = self.port(c, 3 - k);
                seen[cur] = true;
                seen[out] = true;
                cur = self.link[out] as usize;
            }
            comp += 1;
        }
        let mut closed = 0;
        for c in 0..self.alive.len() {
            if !self.alive[c] {
                continue;
            }
            for k in 0..4 {
                let start = self.port(c, k);
                if seen[start] {
                    continue;
                }
                let mut cur = start;
                loop {
                    let (c, k) = self.crossing_of(cur);
                    if !visit(c, k, comp) {
                        return None;
                    }
                    let out = self.port(c, 3 - k);
                    seen[cur] = true;
                    seen[out] = true;
                    cur = self.link[out] as usize;
                    if cur == start {
                        break;
                    }
                }
                closed += 1;
                comp += 1;
            }
        }
        Some((partner, closed))
    }

    /// First crossing met on its under strand, or the value of a descending diagram.
    fn classify(&self) -> Result<(Matching, i32, u32), usize> {
        let mut first: Vec<Option<(usize, usize)>> = vec![None; self.alive.len()];
        let mut bad = None;
        let mut writhe = 0;
        let res = self.walk(|c, k, comp| match first[c] {
            None => {
                if !self.on_over(c, k) {
                    bad = Some(c);
                    return false;
                }
                first[c] = Some((k, comp));
                true
            }
            Some((k0, comp0)) => {
                if comp0 == comp {
                    writhe += self_sign(k0, k);
                }
                true
            }
        });
        match res {
            Some((partner, closed)) => {
                let m = Matching::new(self.nb, self.nt, partner).expect("diagram boundary is a matching");
                Ok((m, writhe, closed + self.loops))
            }
            None => Err(bad.expect("walk stopped at a crossing")),
        }
    }

    /// Remove crossing `c`, joining its ports in the given pairs.
    fn smooth(&mut self, c: usize, pairs: [(usize, usize); 2]) {
        for (a, b) in pairs {
            let (x, y) = (self.port(c, a), self.port(c, b));
            let px = self.link[x] as usize;
            let py = self.link[y] as usize;
            if px == y {
                self.loops += 1;
            } else {
                self.link[px] = py as u32;
                self.link[py] = px as u32;
            }
        }
        for k in 0..4 {
            let p = self.port(c, k);
            self.link[p] = NONE;
        }
        self.alive[c] = false;
    }

    /// Expand into the canonical basis: `matching -> α^a z^k δ^d` coefficients.
    pub(crate) fn normalize(self) -> HashMap<Matching, SkeinPoly> {
        let mut out: HashMap<Matching, SkeinPoly> = HashMap::new();
        let mut stack: Vec<(Diagram, i64, SkeinExp)> = vec![(self, 1, (0, 0, 0))];
        while let Some((d, coeff, (a, k, dl))) = stack.pop() {
            match d.classify() {
                Ok((m, writhe, loops)) => {
                    out.entry(m).or_default().add_mono(coeff, (a + writhe, k, dl + loops));
                }
                Err(c) => {
                    // D = D' ± z (V - H), D' the diagram with crossing c switched.
                    let sign = if d.over_sw[c] { 1 } else { -1 };
                    let mut v = d.clone();
                    v.smooth(c, [(SW, NW), (SE, NE)]);
                    let mut h = d.clone();
                    h.smooth(c, [(SW, SE), (NW, NE)]);
                    let mut sw = d;
                    sw.over_sw[c] = !sw.over_sw[c];
                    stack.push((v, sign * coeff, (a, k + 1, dl)));
                    stack.push((h, -sign * coeff, (a, k + 1, dl)));
                    stack.push((sw, coeff, (a, k, dl)));
                }
            }
        }
        out.retain(|_, p| !p.is_zero());
        out
    }
}

/// Sign of a self-crossing whose first pass entered at port `k0` and second at `k1`.
fn self_sign(k0: usize, k1: usize) -> i32 {
    let dir = |k: usize| -> (i32, i32) {
        match k {
            SW => (1, 1),
            SE => (-1, 1),
            NW => (1, -1),
            _ => (-1, -1),
        }
    };
    let (o, u) = (dir(k0), dir(k1));
    (o.0 * u.1 - o.1 * u.0).signum()
}

/// Set crossing signs so that at each crossing the strand with the smaller
/// boundary endpoint passes over. Only meaningful for words with no closed
/// components and no self-crossings.
pub(crate) fn fix_lift_signs(bottom: usize, word: &mut [Op]) {
    let d = Diagram::from_word(bottom, word);
    let nbd = d.nbd();
    let mut strand_of = vec![usize::MAX; d.link.len()];
    for start in 0..nbd {
        if strand_of[start] != usize::MAX {
            continue;
        }
        strand_of[start] = start;
        let mut cur = d.link[start] as usize;
        while cur >= nbd {
            let (c, k) = d.crossing_of(cur);
            let out = d.port(c, 3 - k);
            strand_of[cur] = start;
            strand_of[out] = start;
            cur = d.link[out] as usize;
        }
        strand_of[cur] = start;
    }
    let mut c = 0;
    for op in word.iter_mut() {
        if let Op::Cross(_, positive) = op {
            let a = strand_of[d.port(c, SW)];
            let b = strand_of[d.port(c, SE)];
            debug_assert_ne!(a, b, "canonical lift has a self-crossing");
            *positive = a < b;
            c += 1;
        }
    }
}
