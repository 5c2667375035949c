//! Named configurations.
//!
//! Colors come out in a fixed order. For two-color graph families the named
//! graph is color `alpha` and its complement `beta`. The three-color example
//! families use `alpha`, `beta`, `gamma` in the roles described on each
//! variant. Geometric families (cube, half-cube, Johnson) order colors by
//! increasing distance.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::config::{pair_count, ColorId, DistanceConfiguration};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// One color on `K_n`.
    Complete { n: usize },
    /// `alpha` = `K_{left,right}` across the sides `0..left` and the rest.
    CompleteBipartite { left: usize, right: usize },
    /// `alpha` = `K_{1,n-1}` centered at 0.
    Star { n: usize },
    /// `beta` = matching `(0,1), (2,3), ...` with `m` edges, `alpha` = its
    /// complement.
    MatchingComplement { n: usize, m: usize },
    /// `alpha` = the cycle `0-1-2-3-4`, `beta` = the diagonals.
    Pentagon,
    /// `beta` = the single pair `(n-2, n-1)`, `alpha` = everything else.
    KnMinusK2 { n: usize },
    /// Graph distances of a connected graph, colors named `1`, `2`, ...
    GraphMetric {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
    /// First `n` points (`5 ≤ n ≤ 8`) of two 4-cycles `0-1-2-3` and
    /// `4-5-6-7`: `gamma` = opposite corners of each cycle, `beta` = cycle
    /// edges, `alpha` = pairs across.
    Example1 { n: usize },
    /// Parts `Y = 0..y` and `Z = y..y+z`; `alpha` = pairs inside a part,
    /// `gamma` = matching `(i, y+i)` for `i < g`, `beta` = remaining pairs
    /// across.
    Example2 { y: usize, z: usize, g: usize },
    /// `beta` = `p` disjoint pairs, `gamma` = `q` further disjoint pairs,
    /// `free` unmatched points, `alpha` = everything else.
    /// Requires `p ≥ max(2, q)` and `q ≥ 1`.
    Example3 { p: usize, q: usize, free: usize },
    /// `alpha` = clique on `0..n-2`, `gamma` = the pair `(n-2, n-1)`,
    /// `beta` = pairs across.
    Example4 { n: usize },
    /// `±e_i` in `R^m` as points `2i` and `2i+1`; `alpha` = non-antipodal,
    /// `beta` = antipodal.
    CrossPolytope { m: usize },
    /// `{0,1}^d` by Hamming distance, colors `h1..hd`.
    Cube { d: usize },
    /// Even-weight words of length 5 by Hamming distance (`h2`, `h4`).
    HalfCube5,
    /// 2-subsets of a 5-set; `meet` = sharing an element, `disjoint`.
    JohnsonJ52,
    /// Every pair gets its own color `e0, e1, ...` (colex order).
    Discrete { n: usize },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Complete { .. } => "complete",
            Self::CompleteBipartite { .. } => "complete_bipartite",
            Self::Star { .. } => "star",
            Self::MatchingComplement { .. } => "matching_complement",
            Self::Pentagon => "pentagon",
            Self::KnMinusK2 { .. } => "kn_minus_k2",
            Self::GraphMetric { .. } => "graph_metric",
            Self::Example1 { .. } => "example1",
            Self::Example2 { .. } => "example2",
            Self::Example3 { .. } => "example3",
            Self::Example4 { .. } => "example4",
            Self::CrossPolytope { .. } => "cross_polytope",
            Self::Cube { .. } => "cube",
            Self::HalfCube5 => "half_cube5",
            Self::JohnsonJ52 => "johnson_j52",
            Self::Discrete { .. } => "discrete",
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

/// Builds a configuration whose color `f(i, j)` indexes `names`.
fn build<F: Fn(usize, usize) -> usize>(
    n: usize,
    names: &[&str],
    f: F,
) -> Result<DistanceConfiguration> {
    let mut edges = Vec::with_capacity(pair_count(n));
    for j in 1..n {
        for i in 0..j {
            edges.push(ColorId(f(i, j) as u16));
        }
    }
    let names = names.iter().map(|s| s.to_string()).collect();
    DistanceConfiguration::from_parts(n, names, edges).map_err(|e| match e {
        Error::EmptyColorClass(c) => invalid(format!("color `{c}` would be empty")),
        other => other,
    })
}

const ABG: [&str; 3] = ["alpha", "beta", "gamma"];
const AB: [&str; 2] = ["alpha", "beta"];

pub fn construct_family(spec: &FamilySpec) -> Result<DistanceConfiguration> {
    match *spec {
        FamilySpec::Complete { n } => {
            if n < 2 {
                return Err(invalid("complete needs n ≥ 2"));
            }
            build(n, &["alpha"], |_, _| 0)
        }
        FamilySpec::CompleteBipartite { left, right } => {
            if left == 0 || right == 0 || left + right < 3 {
                return Err(invalid(
                    "complete_bipartite needs nonempty sides and at least 3 points",
                ));
            }
            build(left + right, &AB, |i, j| {
                usize::from((i < left) == (j < left))
            })
        }
        FamilySpec::Star { n } => {
            if n < 3 {
                return Err(invalid("star needs n ≥ 3"));
            }
            build(n, &AB, |i, _| usize::from(i != 0))
        }
        FamilySpec::MatchingComplement { n, m } => {
            if m == 0 || 2 * m > n || n < 3 {
                return Err(invalid("matching_complement needs 1 ≤ m, 2m ≤ n and n ≥ 3"));
            }
            build(n, &AB, |i, j| usize::from(j < 2 * m && i / 2 == j / 2))
        }
        FamilySpec::Pentagon => build(5, &AB, |i, j| usize::from(!(j - i == 1 || j - i == 4))),
        FamilySpec::KnMinusK2 { n } => {
            if n < 3 {
                return Err(invalid("kn_minus_k2 needs n ≥ 3"));
            }
            build(n, &AB, |i, j| usize::from(i == n - 2 && j == n - 1))
        }
        FamilySpec::GraphMetric { n, ref edges } => graph_metric(n, edges),
        FamilySpec::Example1 { n } => {
            if !(5..=8).contains(&n) {
                return Err(invalid("example1 needs 5 ≤ n ≤ 8"));
            }
            build(n, &ABG, |i, j| {
                if i / 4 != j / 4 {
                    0
                } else if (j - i) % 2 == 0 {
                    2
                } else {
                    1
                }
            })
        }
        FamilySpec::Example2 { y, z, g } => example2(y, z, g),
        FamilySpec::Example3 { p, q, free } => {
            if q == 0 || p < 2 || p < q {
                return Err(invalid("example3 needs p ≥ max(2, q) and q ≥ 1"));
            }
            example3(p, q, free)
        }
        FamilySpec::Example4 { n } => example4(n),
        FamilySpec::CrossPolytope { m } => {
            if m < 2 {
                return Err(invalid("cross_polytope needs m ≥ 2"));
            }
            build(2 * m, &AB, |i, j| usize::from(i / 2 == j / 2))
        }
        FamilySpec::Cube { d } => {
            if !(1..=10).contains(&d) {
                return Err(invalid("cube needs 1 ≤ d ≤ 10"));
            }
            let names: Vec<String> = (1..=d).map(|h| format!("h{h}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            build(1 << d, &refs, |i, j| (i ^ j).count_ones() as usize - 1)
        }
        FamilySpec::HalfCube5 => {
            let words: Vec<u32> = (0u32..32).filter(|w| w.count_ones() % 2 == 0).collect();
            build(16, &["h2", "h4"], |i, j| {
                (words[i] ^ words[j]).count_ones() as usize / 2 - 1
            })
        }
        FamilySpec::JohnsonJ52 => {
            let sets = johnson_pairs();
            build(10, &["meet", "disjoint"], |i, j| {
                usize::from(sets[i] & sets[j] == 0)
            })
        }
        FamilySpec::Discrete { n } => {
            if n < 2 {
                return Err(invalid("discrete needs n ≥ 2"));
            }
            let names: Vec<String> = (0..pair_count(n)).map(|e| format!("e{e}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            build(n, &refs, |i, j| j * (j - 1) / 2 + i)
        }
    }
}

/// The ten 2-subsets of `{0..4}` as bit masks, in colex order.
pub(crate) fn johnson_pairs() -> Vec<u32> {
    (1..5)
        .flat_map(|j| (0..j).map(move |i| (1u32 << i) | (1u32 << j)))
        .collect()
}

pub(crate) fn example2(y: usize, z: usize, g: usize) -> Result<DistanceConfiguration> {
    if y == 0 || z == 0 || g == 0 || g > y.min(z) || y + z < 3 || y * z == g {
        return Err(invalid(
            "example2 needs 1 ≤ g ≤ min(y, z), y + z ≥ 3 and a nonmatched cross pair",
        ));
    }
    build(y + z, &ABG, |i, j| {
        if (i < y) == (j < y) {
            0
        } else if i < g && j == y + i {
            2
        } else {
            1
        }
    })
}

/// Example 3 with only `p ≥ q ≥ 1` required.
pub(crate) fn example3(p: usize, q: usize, free: usize) -> Result<DistanceConfiguration> {
    if q == 0 || p < q {
        return Err(invalid("example3 needs p ≥ q ≥ 1"));
    }
    let n = 2 * (p + q) + free;
    if n < 3 {
        return Err(invalid("example3 needs at least 3 points"));
    }
    build(n, &ABG, |i, j| {
        if i / 2 != j / 2 || j >= 2 * (p + q) {
            0
        } else if j < 2 * p {
            1
        } else {
            2
        }
    })
}

pub(crate) fn example4(n: usize) -> Result<DistanceConfiguration> {
    if n < 4 {
        return Err(invalid("example4 needs n ≥ 4"));
    }
    build(n, &ABG, |i, j| {
        if j < n - 2 {
            0
        } else if i >= n - 2 {
            2
        } else {
            1
        }
    })
}

fn graph_metric(n: usize, edges: &[(usize, usize)]) -> Result<DistanceConfiguration> {
    if n < 2 {
        return Err(invalid("graph_metric needs n ≥ 2"));
    }
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in edges {
        if i == j || i >= n || j >= n {
            return Err(Error::InvalidPair { i, j, n });
        }
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut dist = vec![usize::MAX; n * n];
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if row[y] == usize::MAX {
                    row[y] = row[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if row.contains(&usize::MAX) {
            return Err(Error::Disconnected);
        }
    }
    let mut present: Vec<usize> = dist.iter().copied().filter(|&d| d > 0).collect();
    present.sort_unstable();
    present.dedup();
    let names: Vec<String> = present.iter().map(|d| format!("{d}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    build(n, &refs, |i, j| {
        present
            .binary_search(&dist[i * n + j])
            .expect("present distance")
    })
}
