//! Isometry classes of subsets: canonical keys, the isometric sequence,
//! profile vectors, `M_k` and closed color sets.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::lexmin;
use crate::config::{check_subset, ColorId, DistanceConfiguration};
use crate::error::{Error, Result};
use crate::graph::ColorGraph;

/// Largest subset size accepted by [`canonical_key`].
pub const MAX_SUBSET_SIZE: usize = 12;

/// Canonical form of a subset: the least colex color sequence over all
/// orderings of its points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetKey {
    pub k: usize,
    pub key: Vec<u16>,
}

/// `(a_1, ..., a_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsometricSequence(pub Vec<usize>);

impl IsometricSequence {
    /// `a_k` for `1 ≤ k ≤ n`.
    pub fn get(&self, k: usize) -> Option<usize> {
        k.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for IsometricSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Number of ordered pairs `(s, t)`, `s ≠ t`, per color.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProfileVector(pub Vec<usize>);

impl ProfileVector {
    pub fn get(&self, c: ColorId) -> usize {
        self.0[c.index()]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl core::ops::Add for &ProfileVector {
    type Output = ProfileVector;

    fn add(self, rhs: &ProfileVector) -> ProfileVector {
        ProfileVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

pub type ColorSet = BTreeSet<ColorId>;

/// One isometry class of `k`-subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub key: SubsetKey,
    /// Lexicographically least member.
    pub representative: Vec<usize>,
    pub size: usize,
}

fn subset_matrix(config: &DistanceConfiguration, points: &[usize]) -> Vec<u16> {
    let k = points.len();
    let mut m = vec![0u16; k * k];
    for a in 0..k {
        for b in (a + 1)..k {
            let c = config.color(points[a], points[b]).0;
            m[a * k + b] = c;
            m[b * k + a] = c;
        }
    }
    m
}

pub(crate) fn key_unchecked(config: &DistanceConfiguration, points: &[usize]) -> SubsetKey {
    let k = points.len();
    SubsetKey {
        k,
        key: lexmin(k, &subset_matrix(config, points), false).seq,
    }
}

/// Canonical key of the subset `s`. Equal keys mean isometric subsets.
pub fn canonical_key(config: &DistanceConfiguration, s: &[usize]) -> Result<SubsetKey> {
    check_subset(config.n(), s)?;
    if s.len() > MAX_SUBSET_SIZE {
        return Err(Error::SubsetSizeOutOfRange {
            k: s.len(),
            max: MAX_SUBSET_SIZE,
        });
    }
    Ok(key_unchecked(config, s))
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_subset<F: FnMut(&[usize])>(n: usize, k: usize, mut f: F) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn check_k(config: &DistanceConfiguration, k: usize) -> Result<()> {
    let max = config.n().min(MAX_SUBSET_SIZE);
    if k == 0 || k > max {
        return Err(Error::SubsetSizeOutOfRange { k, max });
    }
    Ok(())
}

/// All isometry classes of `k`-subsets, sorted by key.
pub fn class_representatives(config: &DistanceConfiguration, k: usize) -> Result<Vec<ClassInfo>> {
    check_k(config, k)?;
    let mut classes: BTreeMap<Vec<u16>, (Vec<usize>, usize)> = BTreeMap::new();
    for_each_subset(config.n(), k, |s| {
        let key = key_unchecked(config, s).key;
        classes.entry(key).or_insert_with(|| (s.to_vec(), 0)).1 += 1;
    });
    Ok(classes
        .into_iter()
        .map(|(key, (representative, size))| ClassInfo {
            key: SubsetKey { k, key },
            representative,
            size,
        })
        .collect())
}

/// `a_k`, by canonicalizing every `k`-subset.
pub fn count_classes(config: &DistanceConfiguration, k: usize) -> Result<usize> {
    check_k(config, k)?;
    let mut keys = BTreeSet::new();
    for_each_subset(config.n(), k, |s| {
        keys.insert(key_unchecked(config, s).key);
    });
    Ok(keys.len())
}

/// The full isometric sequence. Every subset is visited once; `n` is limited
/// to [`MAX_SUBSET_SIZE`].
pub fn isometric_sequence(config: &DistanceConfiguration) -> Result<IsometricSequence> {
    let n = config.n();
    if n > MAX_SUBSET_SIZE {
        return Err(Error::SubsetSizeOutOfRange {
            k: n,
            max: MAX_SUBSET_SIZE,
        });
    }
    let mut buckets: Vec<BTreeSet<Vec<u16>>> = vec![BTreeSet::new(); n + 1];
    let mut points = Vec::with_capacity(n);
    for mask in 1u32..(1u32 << n) {
        points.clear();
        points.extend((0..n).filter(|&i| mask >> i & 1 == 1));
        buckets[points.len()].insert(key_unchecked(config, &points).key);
    }
    Ok(IsometricSequence(
        buckets[1..].iter().map(BTreeSet::len).collect(),
    ))
}

/// `v(S, T)`: ordered pairs `(s, t) ∈ S × T` with `s ≠ t`, counted per color.
pub fn profile(config: &DistanceConfiguration, s: &[usize], t: &[usize]) -> Result<ProfileVector> {
    check_subset(config.n(), s)?;
    check_subset(config.n(), t)?;
    let mut counts = vec![0; config.color_count()];
    for &x in s {
        for &y in t {
            if x != y {
                counts[config.color(x, y).index()] += 1;
            }
        }
    }
    Ok(ProfileVector(counts))
}

/// `M_k`: colors with at least `k` incident pairs at some point.
pub fn m_set(config: &DistanceConfiguration, k: usize) -> Result<ColorSet> {
    let n = config.n();
    if k == 0 || k > n {
        return Err(Error::SubsetSizeOutOfRange { k, max: n });
    }
    let mut out = ColorSet::new();
    for x in 0..n {
        let mut deg = vec![0usize; config.color_count()];
        for y in 0..n {
            if y != x {
                deg[config.color(x, y).index()] += 1;
            }
        }
        out.extend(
            deg.iter()
                .enumerate()
                .filter(|(_, &d)| d >= k)
                .map(|(c, _)| ColorId(c as u16)),
        );
    }
    Ok(out)
}

/// Triangle types present, each as a sorted color triple.
pub fn triangle_types(config: &DistanceConfiguration) -> BTreeSet<[ColorId; 3]> {
    let mut out = BTreeSet::new();
    for_each_subset(config.n(), 3, |s| {
        let mut t = [
            config.color(s[0], s[1]),
            config.color(s[1], s[2]),
            config.color(s[0], s[2]),
        ];
        t.sort_unstable();
        out.insert(t);
    });
    out
}

fn check_color_set(config: &DistanceConfiguration, gamma: &ColorSet) -> Result<()> {
    if gamma.is_empty() {
        return Err(Error::EmptyColorSet);
    }
    if let Some(c) = gamma.iter().find(|c| c.index() >= config.color_count()) {
        return Err(Error::ColorOutOfRange {
            index: c.index(),
            count: config.color_count(),
        });
    }
    Ok(())
}

/// Closedness by triangles: two sides in `gamma` force the third into it.
pub fn closed_by_triangles(config: &DistanceConfiguration, gamma: &ColorSet) -> Result<bool> {
    check_color_set(config, gamma)?;
    Ok(triangle_types(config).iter().all(|t| {
        let inside = t.iter().filter(|c| gamma.contains(c)).count();
        inside != 2
    }))
}

/// Closedness by structure: the union graph of `gamma` is a disjoint union
/// of cliques.
pub fn closed_by_cliques(config: &DistanceConfiguration, gamma: &ColorSet) -> Result<bool> {
    check_color_set(config, gamma)?;
    let g = ColorGraph::from_pairs(
        config.n(),
        config
            .pairs()
            .filter(|p| gamma.contains(&p.2))
            .map(|(i, j, _)| (i, j)),
    );
    Ok(g.is_union_of_cliques())
}

/// Whether `gamma` is closed. Both characterizations are evaluated and must
/// agree.
pub fn is_closed(config: &DistanceConfiguration, gamma: &ColorSet) -> Result<bool> {
    let a = closed_by_triangles(config, gamma)?;
    let b = closed_by_cliques(config, gamma)?;
    assert_eq!(a, b, "closedness characterizations disagree");
    Ok(a)
}

/// A vertex bijection together with a color bijection between two
/// configurations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    /// Point `i` of the source goes to `vertex_map[i]`.
    pub vertex_map: Vec<usize>,
    /// Color `c` of the source goes to `color_map[c]`.
    pub color_map: Vec<ColorId>,
}

impl Isomorphism {
    /// Checks the map pair by pair.
    pub fn verify(&self, from: &DistanceConfiguration, to: &DistanceConfiguration) -> bool {
        let n = from.n();
        if to.n() != n || self.vertex_map.len() != n || self.color_map.len() != from.color_count() {
            return false;
        }
        let mut hit = vec![false; n];
        for &v in &self.vertex_map {
            if v >= n || hit[v] {
                return false;
            }
            hit[v] = true;
        }
        from.pairs().all(|(i, j, c)| {
            self.color_map[c.index()] == to.color(self.vertex_map[i], self.vertex_map[j])
        })
    }
}

pub(crate) fn config_matrix(config: &DistanceConfiguration) -> Vec<u16> {
    let all: Vec<usize> = (0..config.n()).collect();
    subset_matrix(config, &all)
}

/// Canonical form of a whole configuration up to point and color
/// relabeling.
pub fn canonical_form(config: &DistanceConfiguration) -> Vec<u16> {
    lexmin(config.n(), &config_matrix(config), true).seq
}

/// An isomorphism from `a` onto `b`, found by comparing canonical forms.
pub fn find_isomorphism(
    a: &DistanceConfiguration,
    b: &DistanceConfiguration,
) -> Option<Isomorphism> {
    if a.n() != b.n() || a.color_count() != b.color_count() {
        return None;
    }
    let n = a.n();
    let ca = lexmin(n, &config_matrix(a), true);
    let cb = lexmin(n, &config_matrix(b), true);
    if ca.seq != cb.seq {
        return None;
    }
    let mut vertex_map = vec![0; n];
    for p in 0..n {
        vertex_map[ca.order[p]] = cb.order[p];
    }
    let mut by_label = vec![ColorId(0); b.color_count()];
    for (c, &l) in cb.color_map.iter().enumerate() {
        if (l as usize) < by_label.len() {
            by_label[l as usize] = ColorId(c as u16);
        }
    }
    let color_map = ca.color_map.iter().map(|&l| by_label[l as usize]).collect();
    let iso = Isomorphism {
        vertex_map,
        color_map,
    };
    debug_assert!(iso.verify(a, b));
    Some(iso)
}
