//! Lexicographically least color sequence over all vertex orderings.
//!
//! The sequence of an ordering `v_0, v_1, ...` lists the colors of the pairs
//! `(v_0,v_1), (v_0,v_2), (v_1,v_2), (v_0,v_3), ...`, i.e. column by column.
//! Column `t` only depends on which vertex is placed at position `t`, so at
//! each depth only the vertices whose column is smallest can lead to the
//! minimum. Twins (vertices with equal colors to every other vertex) are
//! interchangeable, so one per twin class is tried.
//!
//! With `relabel` set, colors are renamed by first occurrence before
//! comparing, which makes the result invariant under color permutations too.

use alloc::vec;
use alloc::vec::Vec;

const NONE: u16 = u16::MAX;

#[derive(Debug, Clone)]
pub(crate) struct Canon {
    /// Least sequence, length `k(k-1)/2`.
    pub seq: Vec<u16>,
    /// `order[p]` is the vertex placed at position `p`.
    pub order: Vec<usize>,
    /// Color renaming used by `seq` (identity unless relabeling).
    pub color_map: Vec<u16>,
}

/// `m` is a row-major `k × k` color matrix; the diagonal is ignored.
pub(crate) fn lexmin(k: usize, m: &[u16], relabel: bool) -> Canon {
    debug_assert_eq!(m.len(), k * k);
    let colors = m
        .iter()
        .enumerate()
        .filter(|(i, _)| i / k.max(1) != i % k.max(1))
        .map(|(_, &c)| c as usize + 1)
        .max()
        .unwrap_or(0);
    let mut twin = vec![0usize; k];
    for v in 0..k {
        twin[v] = (0..v)
            .find(|&u| twin[u] == u && are_twins(k, m, u, v))
            .unwrap_or(v);
    }
    let mut s = Search {
        k,
        m,
        relabel,
        twin,
        order: Vec::with_capacity(k),
        used: vec![false; k],
        cur: Vec::with_capacity(k * k.saturating_sub(1) / 2),
        map: vec![NONE; colors],
        next: 0,
        best: Vec::new(),
        best_order: (0..k).collect(),
        best_map: Vec::new(),
    };
    s.seed_identity();
    s.dfs();
    let color_map = if relabel {
        s.best_map
    } else {
        (0..colors as u16).collect()
    };
    Canon {
        seq: s.best,
        order: s.best_order,
        color_map,
    }
}

fn are_twins(k: usize, m: &[u16], u: usize, v: usize) -> bool {
    (0..k).all(|w| w == u || w == v || m[u * k + w] == m[v * k + w])
}

struct Search<'a> {
    k: usize,
    m: &'a [u16],
    relabel: bool,
    twin: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    cur: Vec<u16>,
    map: Vec<u16>,
    next: u16,
    best: Vec<u16>,
    best_order: Vec<usize>,
    best_map: Vec<u16>,
}

impl Search<'_> {
    fn seed_identity(&mut self) {
        let mut map = vec![NONE; self.map.len()];
        let mut next = 0;
        let mut seq = Vec::with_capacity(self.cur.capacity());
        for j in 1..self.k {
            for i in 0..j {
                let c = self.m[i * self.k + j];
                seq.push(if self.relabel {
                    if map[c as usize] == NONE {
                        map[c as usize] = next;
                        next += 1;
                    }
                    map[c as usize]
                } else {
                    c
                });
            }
        }
        self.best = seq;
        self.best_map = map;
    }

    /// Column for placing `v` next, relabeled against the current map
    /// without committing new labels.
    fn column(&self, v: usize, out: &mut Vec<u16>) {
        out.clear();
        let mut fresh: Vec<(u16, u16)> = Vec::new();
        for &u in &self.order {
            let c = self.m[u * self.k + v];
            if !self.relabel {
                out.push(c);
                continue;
            }
            let mapped = self.map[c as usize];
            if mapped != NONE {
                out.push(mapped);
            } else if let Some(&(_, l)) = fresh.iter().find(|(fc, _)| *fc == c) {
                out.push(l);
            } else {
                let l = self.next + fresh.len() as u16;
                fresh.push((c, l));
                out.push(l);
            }
        }
    }

    fn dfs(&mut self) {
        let t = self.order.len();
        if t == self.k {
            if self.cur < self.best {
                self.best.clone_from(&self.cur);
                self.best_order.clone_from(&self.order);
                self.best_map.clone_from(&self.map);
            }
            return;
        }
        let mut best_col: Vec<u16> = Vec::new();
        let mut col = Vec::with_capacity(t);
        let mut cands: Vec<usize> = Vec::new();
        for v in 0..self.k {
            if self.used[v] {
                continue;
            }
            // one unused vertex per twin class
            let class = self.twin[v];
            if (0..v).any(|u| !self.used[u] && self.twin[u] == class) {
                continue;
            }
            self.column(v, &mut col);
            if cands.is_empty() || col < best_col {
                cands.clear();
                core::mem::swap(&mut best_col, &mut col);
                cands.push(v);
            } else if col == best_col {
                cands.push(v);
            }
        }
        let len = self.cur.len();
        let prefix = &self.best[..len + t];
        let ord = self.cur[..]
            .cmp(&prefix[..len])
            .then_with(|| best_col[..].cmp(&prefix[len..]));
        if ord == core::cmp::Ordering::Greater {
            return;
        }
        for v in cands {
            self.used[v] = true;
            self.order.push(v);
            let mark = self.next;
            for p in 0..t {
                let c = self.m[self.order[p] * self.k + v];
                let l = if self.relabel {
                    if self.map[c as usize] == NONE {
                        self.map[c as usize] = self.next;
                        self.next += 1;
                    }
                    self.map[c as usize]
                } else {
                    c
                };
                self.cur.push(l);
            }
            self.dfs();
            self.cur.truncate(len);
            if self.relabel && self.next != mark {
                for slot in self.map.iter_mut() {
                    if *slot != NONE && *slot >= mark {
                        *slot = NONE;
                    }
                }
                self.next = mark;
            }
            self.order.pop();
            self.used[v] = false;
            // the best may have improved below; recheck before the next sibling
            if self.cur[..] > self.best[..len] {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn matrix(k: usize, seq: &[u16]) -> Vec<u16> {
        let mut m = vec![0; k * k];
        let mut idx = 0;
        for j in 1..k {
            for i in 0..j {
                m[i * k + j] = seq[idx];
                m[j * k + i] = seq[idx];
                idx += 1;
            }
        }
        m
    }

    fn permutations(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in permutations(k - 1) {
            for pos in 0..k {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute(k: usize, m: &[u16], relabel: bool) -> Vec<u16> {
        let mut best: Option<Vec<u16>> = None;
        for p in permutations(k) {
            let mut seq = Vec::new();
            let mut map = std::collections::BTreeMap::new();
            for j in 1..k {
                for i in 0..j {
                    let c = m[p[i] * k + p[j]];
                    let l = if relabel {
                        let n = map.len() as u16;
                        *map.entry(c).or_insert(n)
                    } else {
                        c
                    };
                    seq.push(l);
                }
            }
            if best.as_ref().is_none_or(|b| seq < *b) {
                best = Some(seq);
            }
        }
        best.unwrap()
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for k in 1..=6 {
            for _ in 0..60 {
                let len = k * (k - 1) / 2;
                let colors = 1 + (state % 3) as u16;
                let seq: Vec<u16> = (0..len)
                    .map(|_| {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        (state % colors as u64) as u16
                    })
                    .collect();
                let m = matrix(k, &seq);
                for relabel in [false, true] {
                    let c = lexmin(k, &m, relabel);
                    assert_eq!(
                        c.seq,
                        brute(k, &m, relabel),
                        "k={k} seq={seq:?} relabel={relabel}"
                    );
                    // the order and map reproduce the sequence
                    let mut idx = 0;
                    for j in 1..k {
                        for i in 0..j {
                            let orig = m[c.order[i] * k + c.order[j]];
                            assert_eq!(c.color_map[orig as usize], c.seq[idx]);
                            idx += 1;
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_representatives_are_unique() {
        // all 2-colorings of K_4 fall into 11 graph classes
        let mut keys = BTreeSet::new();
        for bits in 0u32..64 {
            let seq: Vec<u16> = (0..6).map(|i| ((bits >> i) & 1) as u16).collect();
            keys.insert(lexmin(4, &matrix(4, &seq), false).seq);
        }
        assert_eq!(keys.len(), 11);
    }
}
