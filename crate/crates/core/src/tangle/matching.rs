use std::fmt;

use super::{Op, TangleError};

/// Perfect matching on the boundary of a `(bottom, top)` tangle.
///
/// Points are numbered `0..bottom` along the bottom, then `bottom..bottom+top`
/// along the top, each row left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    bottom: u8,
    top: u8,
    partner: Vec<u8>,
}

impl Matching {
    pub fn new(bottom: usize, top: usize, partner: Vec<usize>) -> Result<Self, TangleError> {
        let n = bottom + top;
        if partner.len() != n || n % 2 != 0 || n > 250 {
            return Err(TangleError::InvalidMatching(format!("{partner:?}")));
        }
        for (i, &p) in partner.iter().enumerate() {
            if p >= n || p == i || partner[p] != i {
                return Err(TangleError::InvalidMatching(format!("{partner:?}")));
            }
        }
        Ok(Self { bottom: bottom as u8, top: top as u8, partner: partner.into_iter().map(|p| p as u8).collect() })
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|i| if i < n { i + n } else { i - n }).collect();
        Self::new(n, n, partner).expect("identity matching")
    }

    pub fn bottom(&self) -> usize {
        self.bottom as usize
    }

    pub fn top(&self) -> usize {
        self.top as usize
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i] as usize
    }

    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    fn is_bottom(&self, i: usize) -> bool {
        i < self.bottom()
    }

    /// Number of strands joining the bottom row to the top row.
    pub fn through_count(&self) -> usize {
        (0..self.bottom()).filter(|&i| !self.is_bottom(self.partner(i))).count()
    }

    /// All perfect matchings on `bottom + top` points, in lexicographic order of partner arrays.
    pub fn enumerate(bottom: usize, top: usize) -> Vec<Matching> {
        let n = bottom + top;
        let mut out = Vec::new();
        if n % 2 != 0 {
            return out;
        }
        let mut partner = vec![usize::MAX; n];
        fn rec(partner: &mut Vec<usize>, bottom: usize, top: usize, out: &mut Vec<Matching>) {
            let Some(i) = partner.iter().position(|&p| p == usize::MAX) else {
                out.push(Matching::new(bottom, top, partner.clone()).expect("valid matching"));
                return;
            };
            for j in i + 1..partner.len() {
                if partner[j] == usize::MAX {
                    partner[i] = j;
                    partner[j] = i;
                    rec(partner, bottom, top, out);
                    partner[i] = usize::MAX;
                    partner[j] = usize::MAX;
                }
            }
        }
        rec(&mut partner, bottom, top, &mut out);
        out.sort();
        out
    }

    /// Pairs with 1-based labels: bottom points positive, top points negative.
    pub fn to_pairs(&self) -> Vec<(i32, i32)> {
        let label = |i: usize| if self.is_bottom(i) { i as i32 + 1 } else { -((i - self.bottom()) as i32 + 1) };
        (0..self.len()).filter(|&i| i < self.partner(i)).map(|i| (label(i), label(self.partner(i)))).collect()
    }

    pub fn from_pairs(bottom: usize, top: usize, pairs: &[(i32, i32)]) -> Result<Self, TangleError> {
        let bad = || TangleError::InvalidMatching(format!("{pairs:?}"));
        let index = |l: i32| -> Result<usize, TangleError> {
            match l {
                l if l > 0 && (l as usize) <= bottom => Ok(l as usize - 1),
                l if l < 0 && ((-l) as usize) <= top => Ok(bottom + (-l) as usize - 1),
                _ => Err(bad()),
            }
        };
        let mut partner = vec![usize::MAX; bottom + top];
        for &(a, b) in pairs {
            let (i, j) = (index(a)?, index(b)?);
            if partner[i] != usize::MAX || partner[j] != usize::MAX {
                return Err(bad());
            }
            partner[i] = j;
            partner[j] = i;
        }
        Self::new(bottom, top, partner)
    }

    /// Append `k` vertical strands on the right.
    pub fn tensor_id(&self, k: usize) -> Matching {
        let (b, t) = (self.bottom(), self.top());
        let map = |i: usize| if i < b { i } else { i + k };
        let mut partner = vec![0; b + t + 2 * k];
        for i in 0..self.len() {
            partner[map(i)] = map(self.partner(i));
        }
        for j in 0..k {
            partner[b + j] = b + k + t + j;
            partner[b + k + t + j] = b + j;
        }
        Matching::new(b + k, t + k, partner).expect("tensor of a matching")
    }

    /// Juxtapose `other` to the right of `self`.
    pub fn tensor(&self, other: &Matching) -> Matching {
        let (b1, t1, b2, t2) = (self.bottom(), self.top(), other.bottom(), other.top());
        let left = |i: usize| if i < b1 { i } else { i + b2 };
        let right = |i: usize| if i < b2 { b1 + i } else { b1 + b2 + t1 + (i - b2) };
        let mut partner = vec![0; b1 + b2 + t1 + t2];
        for i in 0..self.len() {
            partner[left(i)] = left(self.partner(i));
        }
        for i in 0..other.len() {
            partner[right(i)] = right(other.partner(i));
        }
        Matching::new(b1 + b2, t1 + t2, partner).expect("tensor of matchings")
    }

    /// Slice word (time upward) realizing the canonical lift of this matching:
    /// every pair of strands crosses at most once, no strand crosses itself,
    /// and at each crossing the strand whose smaller endpoint comes first passes over.
    pub(crate) fn lift_word(&self) -> Vec<Op> {
        let (b, t) = (self.bottom(), self.top());
        let mut word = Vec::new();

        // Close bottom caps, shortest first. Positions carry bottom labels.
        let mut bottom_caps: Vec<(usize, usize)> =
            (0..b).filter(|&i| i < self.partner(i) && self.partner(i) < b).map(|i| (i, self.partner(i))).collect();
        bottom_caps.sort_by_key(|&(i, j)| (j - i, i));
        let mut pos: Vec<usize> = (0..b).collect();
        for &(i, j) in &bottom_caps {
            close_pair(&mut pos, i, j, &mut word);
        }

        // Top cups, built as caps of the reflected tangle then reversed.
        let mut top_caps: Vec<(usize, usize)> = (b..b + t)
            .filter(|&i| i < self.partner(i))
            .map(|i| (i, self.partner(i)))
            .collect();
        top_caps.sort_by_key(|&(i, j)| (j - i, i));
        let mut tpos: Vec<usize> = (b..b + t).collect();
        let mut upper = Vec::new();
        for &(i, j) in &top_caps {
            close_pair(&mut tpos, i, j, &mut upper);
        }

        // Permute through strands: pos holds the bottom ends, tpos the top ends.
        let target: Vec<usize> = pos.iter().map(|&i| tpos.iter().position(|&x| x == self.partner(i)).unwrap()).collect();
        let mut cur = target;
        let mut changed = true;
        while changed {
            changed = false;
            for k in 0..cur.len().saturating_sub(1) {
                if cur[k] > cur[k + 1] {
                    cur.swap(k, k + 1);
                    word.push(Op::Cross(k, true));
                    changed = true;
                }
            }
        }

        for op in upper.into_iter().rev() {
            word.push(match op {
                Op::Cap(i) => Op::Cup(i),
                other => other,
            });
        }
        word
    }
}

/// Move the right end of the pair next to the left end with crossings, then cap.
/// Crossing signs are placeholders; the engine fixes over/under afterwards.
fn close_pair(pos: &mut Vec<usize>, i: usize, j: usize, word: &mut Vec<Op>) {
    let pi = pos.iter().position(|&x| x == i).unwrap();
    let mut pj = pos.iter().position(|&x| x == j).unwrap();
    while pj > pi + 1 {
        word.push(Op::Cross(pj - 1, true));
        pos.swap(pj - 1, pj);
        pj -= 1;
    }
    word.push(Op::Cap(pi));
    pos.drain(pi..pi + 2);
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_pairs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=5).map(|n| Matching::enumerate(n, n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 15, 105, 945]);
        assert_eq!(Matching::enumerate(3, 1).len(), 3);
    }

    #[test]
    fn pairs_roundtrip() {
        for m in Matching::enumerate(3, 3) {
            let back = Matching::from_pairs(3, 3, &m.to_pairs()).unwrap();
            assert_eq!(back, m);
        }
        let id = Matching::identity(3);
        assert_eq!(id.to_pairs(), vec![(1, -1), (2, -2), (3, -3)]);
    }

    #[test]
    fn tensor_identity() {
        assert_eq!(Matching::identity(1).tensor_id(1), Matching::identity(2));
        let h = Matching::from_pairs(2, 2, &[(1, 2), (-1, -2)]).unwrap();
        let h3 = Matching::from_pairs(3, 3, &[(1, 2), (-1, -2), (3, -3)]).unwrap();
        assert_eq!(h.tensor_id(1), h3);
        assert_eq!(h.tensor(&Matching::identity(1)), h3);
        let cap = Matching::from_pairs(2, 0, &[(1, 2)]).unwrap();
        let m = Matching::identity(1).tensor(&cap);
        assert_eq!(m, Matching::from_pairs(3, 1, &[(1, -1), (2, 3)]).unwrap());
    }
}
