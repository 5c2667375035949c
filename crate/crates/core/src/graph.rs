//! Simple graphs formed by one color class, and the shape predicates the
//! classifiers need.

use alloc::vec;
use alloc::vec::Vec;

/// Undirected simple graph on `0..n` stored as a dense adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorGraph {
    n: usize,
    adj: Vec<bool>,
}

impl ColorGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Self {
        let mut g = Self::empty(n);
        for (i, j) in pairs {
            g.add_edge(i, j);
        }
        g
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j && i < self.n && j < self.n);
        self.adj[i * self.n + j] = true;
        self.adj[j * self.n + i] = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x * self.n..(x + 1) * self.n]
            .iter()
            .filter(|&&b| b)
            .count()
    }

    pub fn neighbors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&y| self.has_edge(x, y))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        let mut adj = vec![false; self.n * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                adj[i * self.n + j] = i != j && !self.has_edge(i, j);
            }
        }
        Self { n: self.n, adj }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let x = comp[head];
                head += 1;
                for y in 0..self.n {
                    if self.has_edge(x, y) && !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(a, &x)| vertices[a + 1..].iter().all(|&y| self.has_edge(x, y)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(a, &x)| vertices[a + 1..].iter().all(|&y| !self.has_edge(x, y)))
    }

    /// Every vertex has degree at most one.
    pub fn is_matching(&self) -> bool {
        (0..self.n).all(|x| self.degree(x) <= 1)
    }

    pub fn is_triangle_free(&self) -> bool {
        for x in 0..self.n {
            for y in (x + 1)..self.n {
                if !self.has_edge(x, y) {
                    continue;
                }
                if ((y + 1)..self.n).any(|z| self.has_edge(x, z) && self.has_edge(y, z)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_union_of_cliques(&self) -> bool {
        self.components().iter().all(|c| self.is_clique(c))
    }

    /// The two sides when the graph is complete bipartite with both sides
    /// nonempty and covering every vertex.
    pub fn complete_bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        if self.n < 2 {
            return None;
        }
        let parts = self.complement().components();
        if parts.len() != 2 {
            return None;
        }
        let (a, b) = (&parts[0], &parts[1]);
        let ok = self.is_independent(a)
            && self.is_independent(b)
            && a.iter().all(|&x| b.iter().all(|&y| self.has_edge(x, y)));
        ok.then(|| (a.clone(), b.clone()))
    }

    /// Center of a spanning star `K_{1, n-1}`; the smallest one when `n = 2`.
    pub fn star_center(&self) -> Option<usize> {
        if self.n < 2 || self.edge_count() != self.n - 1 {
            return None;
        }
        (0..self.n).find(|&x| self.degree(x) == self.n - 1)
    }

    /// The 5-cycle on exactly five vertices.
    pub fn is_pentagon(&self) -> bool {
        self.n == 5 && (0..5).all(|x| self.degree(x) == 2) && self.components().len() == 1
    }

    /// The single missing pair when the graph is `K_n` minus one edge.
    pub fn missing_pair(&self) -> Option<(usize, usize)> {
        if self.n < 2 || self.edge_count() + 1 != self.n * (self.n - 1) / 2 {
            return None;
        }
        self.complement().edges().first().copied()
    }

    /// Edges of the complement when that complement is a nonempty matching.
    pub fn complement_matching(&self) -> Option<Vec<(usize, usize)>> {
        let c = self.complement();
        (c.edge_count() > 0 && c.is_matching()).then(|| c.edges())
    }

    /// Whether the map `perm` (old vertex to new vertex) carries `self` onto
    /// `other`.
    pub fn maps_onto(&self, other: &Self, perm: &[usize]) -> bool {
        self.n == other.n
            && (0..self.n).all(|i| {
                (0..self.n).all(|j| self.has_edge(i, j) == other.has_edge(perm[i], perm[j]))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> ColorGraph {
        ColorGraph::from_pairs(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn pentagon_is_recognized() {
        assert!(cycle(5).is_pentagon());
        assert!(!cycle(6).is_pentagon());
        let two_parts = ColorGraph::from_pairs(5, [(0, 1), (1, 2), (2, 0), (3, 4)]);
        assert!(!two_parts.is_pentagon());
    }

    #[test]
    fn bipartition_of_k33() {
        let g = ColorGraph::from_pairs(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j))));
        let (a, b) = g.complete_bipartition().unwrap();
        assert_eq!((a, b), (vec![0, 1, 2], vec![3, 4, 5]));
        assert!(cycle(6).complete_bipartition().is_none());
    }

    #[test]
    fn star_and_missing_edge() {
        let star = ColorGraph::from_pairs(6, (1..6).map(|j| (0, j)));
        assert_eq!(star.star_center(), Some(0));
        let mut k = ColorGraph::empty(5);
        for (i, j) in (1..5).flat_map(|j| (0..j).map(move |i| (i, j))) {
            if (i, j) != (3, 4) {
                k.add_edge(i, j);
            }
        }
        assert_eq!(k.missing_pair(), Some((3, 4)));
        assert_eq!(k.complement_matching(), Some(vec![(3, 4)]));
    }

    #[test]
    fn triangle_free_and_cliques() {
        assert!(cycle(5).is_triangle_free());
        assert!(!cycle(3).is_triangle_free());
        let g = ColorGraph::from_pairs(5, [(0, 1), (1, 2), (0, 2), (3, 4)]);
        assert!(g.is_union_of_cliques());
        assert!(!cycle(4).is_union_of_cliques());
        assert!(ColorGraph::from_pairs(4, [(0, 1), (2, 3)]).is_matching());
    }
}
