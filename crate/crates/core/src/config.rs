//! Distance configurations, metric realizations and point sets.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::ColorGraph;

/// Relative gap used by [`from_points`] when no tolerance is given.
pub const DEFAULT_GROUPING_TOL: f64 = 1e-9;

/// Relative slack allowed when checking the triangle inequality on floats.
const TRIANGLE_SLACK: f64 = 1e-9;

/// Index of a color inside one [`DistanceConfiguration`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorId(pub u16);

impl ColorId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Position of the unordered pair `{i, j}` in colex order
/// `(0,1), (0,2), (1,2), (0,3), ...`.
#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    b * (b - 1) / 2 + a
}

#[inline]
pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// An edge coloring of the complete graph on `n` points.
///
/// Edges are stored in colex pair order. Every listed color colors at least
/// one pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistanceConfiguration {
    n: usize,
    colors: Vec<String>,
    edges: Vec<ColorId>,
}

impl DistanceConfiguration {
    /// Builds a configuration from color names and the colex-ordered edge
    /// colors, keeping the given color order.
    pub fn from_parts(n: usize, colors: Vec<String>, edges: Vec<ColorId>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoPoints);
        }
        if edges.len() != pair_count(n) {
            return Err(Error::InvalidParameters(format!(
                "expected {} edge colors for n = {n}, got {}",
                pair_count(n),
                edges.len()
            )));
        }
        if colors.len() > u16::MAX as usize {
            return Err(Error::InvalidParameters("too many colors".into()));
        }
        for (i, name) in colors.iter().enumerate() {
            if colors[..i].contains(name) {
                return Err(Error::DuplicateColorName(name.clone()));
            }
        }
        let mut used = vec![false; colors.len()];
        for c in &edges {
            match used.get_mut(c.index()) {
                Some(u) => *u = true,
                None => {
                    return Err(Error::ColorOutOfRange {
                        index: c.index(),
                        count: colors.len(),
                    })
                }
            }
        }
        if let Some(idx) = used.iter().position(|u| !u) {
            return Err(Error::EmptyColorClass(colors[idx].clone()));
        }
        Ok(Self { n, colors, edges })
    }

    /// Configuration from first-occurrence labels `0, 1, 2, ...`; colors are
    /// named `c0`, `c1`, ...
    pub(crate) fn from_labels(n: usize, labels: &[u16]) -> Self {
        let count = labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        Self {
            n,
            colors: (0..count).map(|i| format!("c{i}")).collect(),
            edges: labels.iter().map(|&l| ColorId(l)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn color_count(&self) -> usize {
        self.colors.len()
    }

    pub fn color_names(&self) -> &[String] {
        &self.colors
    }

    pub fn color_name(&self, c: ColorId) -> &str {
        &self.colors[c.index()]
    }

    pub fn color_by_name(&self, name: &str) -> Option<ColorId> {
        self.colors
            .iter()
            .position(|c| c == name)
            .map(|i| ColorId(i as u16))
    }

    pub fn color_ids(&self) -> impl Iterator<Item = ColorId> + '_ {
        (0..self.colors.len()).map(|i| ColorId(i as u16))
    }

    /// Color of the pair `{i, j}`. Panics when `i == j`.
    #[inline]
    pub fn color(&self, i: usize, j: usize) -> ColorId {
        assert!(i != j, "a point has no color with itself");
        self.edges[pair_index(i, j)]
    }

    /// Edge colors in colex pair order.
    pub fn edges(&self) -> &[ColorId] {
        &self.edges
    }

    /// All pairs `(i, j, color)` with `i < j`, in colex order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, ColorId)> + '_ {
        (1..self.n).flat_map(move |j| (0..j).map(move |i| (i, j, self.edges[pair_index(i, j)])))
    }

    /// The simple graph formed by the pairs of color `c`.
    pub fn color_graph(&self, c: ColorId) -> ColorGraph {
        ColorGraph::from_pairs(
            self.n,
            self.pairs().filter(|p| p.2 == c).map(|(i, j, _)| (i, j)),
        )
    }

    /// Number of `c`-colored pairs at `x`.
    pub fn degree(&self, x: usize, c: ColorId) -> usize {
        (0..self.n)
            .filter(|&y| y != x && self.color(x, y) == c)
            .count()
    }

    /// Number of pairs per color.
    pub fn color_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.colors.len()];
        for c in &self.edges {
            sizes[c.index()] += 1;
        }
        sizes
    }

    /// Sub-configuration on `points` (in the given order). Colors that do not
    /// survive are dropped; the rest keep their relative order and names.
    pub fn induced(&self, points: &[usize]) -> Result<Self> {
        check_subset(self.n, points)?;
        let k = points.len();
        let mut edges = Vec::with_capacity(pair_count(k));
        for j in 1..k {
            for i in 0..j {
                edges.push(self.color(points[i], points[j]));
            }
        }
        let mut present = vec![false; self.colors.len()];
        for c in &edges {
            present[c.index()] = true;
        }
        let mut remap = vec![u16::MAX; self.colors.len()];
        let mut names = Vec::new();
        for (idx, &p) in present.iter().enumerate() {
            if p {
                remap[idx] = names.len() as u16;
                names.push(self.colors[idx].clone());
            }
        }
        let edges = edges
            .into_iter()
            .map(|c| ColorId(remap[c.index()]))
            .collect();
        Ok(Self {
            n: k,
            colors: names,
            edges,
        })
    }

    /// Moves point `v` to position `perm[v]`.
    pub fn permute_points(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(self.n, perm)?;
        let mut edges = vec![ColorId(0); self.edges.len()];
        for (i, j, c) in self.pairs() {
            edges[pair_index(perm[i], perm[j])] = c;
        }
        Ok(Self {
            n: self.n,
            colors: self.colors.clone(),
            edges,
        })
    }

    /// Moves color `c` to position `perm[c]` (names travel with their class).
    pub fn permute_colors(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(self.colors.len(), perm)?;
        let mut colors = vec![String::new(); self.colors.len()];
        for (c, name) in self.colors.iter().enumerate() {
            colors[perm[c]] = name.clone();
        }
        let edges = self
            .edges
            .iter()
            .map(|c| ColorId(perm[c.index()] as u16))
            .collect();
        Ok(Self {
            n: self.n,
            colors,
            edges,
        })
    }

    /// Same classes under new names.
    pub fn with_color_names(&self, names: Vec<String>) -> Result<Self> {
        Self::from_parts(self.n, names, self.edges.clone())
    }
}

pub(crate) fn check_subset(n: usize, points: &[usize]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut seen = vec![false; n];
    for &p in points {
        if p >= n {
            return Err(Error::PointOutOfRange { index: p, n });
        }
        if seen[p] {
            return Err(Error::RepeatedPoint(p));
        }
        seen[p] = true;
    }
    Ok(())
}

fn check_permutation(len: usize, perm: &[usize]) -> Result<()> {
    if perm.len() != len {
        return Err(Error::InvalidParameters(format!(
            "permutation has length {}, expected {len}",
            perm.len()
        )));
    }
    let mut seen = vec![false; len];
    for &p in perm {
        if p >= len || seen[p] {
            return Err(Error::InvalidParameters("not a permutation".into()));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Builds a configuration from `(i, j, color)` triples with `i < j`.
///
/// Every pair must appear exactly once. Colors are ordered by their first
/// occurrence in colex pair order, so the result does not depend on the
/// order of `pairs`.
pub fn make_config<S: AsRef<str>>(
    n: usize,
    pairs: &[(usize, usize, S)],
) -> Result<DistanceConfiguration> {
    if n == 0 {
        return Err(Error::NoPoints);
    }
    let mut slots: Vec<Option<&str>> = vec![None; pair_count(n)];
    for (i, j, color) in pairs {
        let (i, j) = (*i, *j);
        if i >= j || j >= n {
            return Err(Error::InvalidPair { i, j, n });
        }
        let slot = &mut slots[pair_index(i, j)];
        if slot.is_some() {
            return Err(Error::DuplicatePair(i, j));
        }
        *slot = Some(color.as_ref());
    }
    let mut names: Vec<String> = Vec::new();
    let mut edges = Vec::with_capacity(slots.len());
    for j in 1..n {
        for i in 0..j {
            let name = slots[pair_index(i, j)].ok_or(Error::MissingPair(i, j))?;
            let id = match names.iter().position(|c| c == name) {
                Some(p) => p,
                None => {
                    names.push(name.to_string());
                    names.len() - 1
                }
            };
            edges.push(ColorId(id as u16));
        }
    }
    DistanceConfiguration::from_parts(n, names, edges)
}

/// A configuration together with an injective color → distance assignment
/// that satisfies the triangle inequality.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricRealization {
    config: DistanceConfiguration,
    values: Vec<f64>,
}

impl MetricRealization {
    /// `values[c]` is the distance of color `c`.
    pub fn new(config: DistanceConfiguration, values: Vec<f64>) -> Result<Self> {
        if values.len() != config.color_count() {
            return Err(Error::InvalidParameters(format!(
                "{} values for {} colors",
                values.len(),
                config.color_count()
            )));
        }
        for (c, &v) in values.iter().enumerate() {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::NonPositive(config.colors[c].clone()));
            }
            if let Some(prev) = values[..c].iter().position(|&w| w == v) {
                return Err(Error::NotInjective(
                    config.colors[prev].clone(),
                    config.colors[c].clone(),
                ));
            }
        }
        let real = Self { config, values };
        real.check_triangles()?;
        Ok(real)
    }

    fn check_triangles(&self) -> Result<()> {
        let n = self.config.n;
        let max = self.values.iter().cloned().fold(0.0, f64::max);
        let slack = TRIANGLE_SLACK * max;
        for x in 0..n {
            for y in (x + 1)..n {
                let dxy = self.distance(x, y);
                for z in 0..n {
                    if z == x || z == y {
                        continue;
                    }
                    if dxy > self.distance(x, z) + self.distance(z, y) + slack {
                        let (a, b) = if x < y { (x, y) } else { (y, x) };
                        return Err(Error::TriangleInequality(a, b, z));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn config(&self) -> &DistanceConfiguration {
        &self.config
    }

    pub fn into_config(self) -> DistanceConfiguration {
        self.config
    }

    pub fn n(&self) -> usize {
        self.config.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, c: ColorId) -> f64 {
        self.values[c.index()]
    }

    #[inline]
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        if i == j {
            0.0
        } else {
            self.values[self.config.color(i, j).index()]
        }
    }

    /// Row-major `n × n` matrix of squared distances.
    pub fn squared_distances(&self) -> Vec<f64> {
        let n = self.config.n;
        let mut d = vec![0.0; n * n];
        for (i, j, c) in self.config.pairs() {
            let v = self.values[c.index()];
            d[i * n + j] = v * v;
            d[j * n + i] = v * v;
        }
        d
    }

    /// Restriction to `points`.
    pub fn induced(&self, points: &[usize]) -> Result<Self> {
        let sub = self.config.induced(points)?;
        let values = sub
            .color_names()
            .iter()
            .map(|name| {
                self.values[self
                    .config
                    .color_by_name(name)
                    .expect("induced keeps names")
                    .index()]
            })
            .collect();
        Ok(Self {
            config: sub,
            values,
        })
    }
}

/// Attaches distances to a configuration.
///
/// With `values == None` color `i` (0-based, `c` colors) receives
/// `1 + (i + 1) / (2c)`. Those values lie in `(1, 1.5]`, so the largest is
/// below twice the smallest and every triangle inequality holds.
pub fn realize(
    config: DistanceConfiguration,
    values: Option<&BTreeMap<String, f64>>,
) -> Result<MetricRealization> {
    let c = config.color_count();
    let vals = match values {
        None => (0..c)
            .map(|i| 1.0 + (i as f64 + 1.0) / (2.0 * c as f64))
            .collect(),
        Some(map) => {
            for key in map.keys() {
                if config.color_by_name(key).is_none() {
                    return Err(Error::UnknownColor(key.clone()));
                }
            }
            config
                .color_names()
                .iter()
                .map(|name| {
                    map.get(name)
                        .copied()
                        .ok_or_else(|| Error::MissingValue(name.clone()))
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    MetricRealization::new(config, vals)
}

/// Points in `R^dim`, one coordinate vector per point.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    dim: usize,
    coords: Vec<Vec<f64>>,
}

impl PointSet {
    pub fn new(dim: usize, coords: Vec<Vec<f64>>) -> Result<Self> {
        for (index, p) in coords.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    index,
                    found: p.len(),
                    expected: dim,
                });
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidParameters(format!(
                    "point {index} has a non-finite coordinate"
                )));
            }
        }
        Ok(Self { dim, coords })
    }

    /// Rows of a row-major `rows × cols` matrix.
    pub fn from_rows(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        assert_eq!(data.len(), rows * cols);
        Self::new(
            cols,
            data.chunks(cols.max(1))
                .take(rows)
                .map(|r| r[..cols].to_vec())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.coords
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        let s: f64 = self.coords[i]
            .iter()
            .zip(&self.coords[j])
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        libm::sqrt(s)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            coords: self
                .coords
                .iter()
                .map(|p| p.iter().map(|x| x * factor).collect())
                .collect(),
        }
    }
}

/// Groups the pairwise distances of `pts` into colors.
///
/// Sorted distances are split wherever the relative gap to the previous
/// distance exceeds `tol` (single linkage). Each color gets the mean of its
/// group as value; colors are ordered by increasing distance and named
/// `d0`, `d1`, ...
pub fn from_points(pts: &PointSet, tol: f64) -> Result<MetricRealization> {
    let n = pts.len();
    if n == 0 {
        return Err(Error::NoPoints);
    }
    let mut dists = Vec::with_capacity(pair_count(n));
    for j in 1..n {
        for i in 0..j {
            dists.push(pts.distance(i, j));
        }
    }
    group_distances(n, dists, tol)
}

/// Same as [`from_points`] for a row-major `n × n` distance matrix, which
/// must be symmetric with a zero diagonal (both up to `tol` relative to the
/// largest entry).
pub fn from_distance_matrix(n: usize, matrix: &[f64], tol: f64) -> Result<MetricRealization> {
    if n == 0 {
        return Err(Error::NoPoints);
    }
    if matrix.len() != n * n {
        return Err(Error::InvalidMatrix(format!(
            "expected {} entries, got {}",
            n * n,
            matrix.len()
        )));
    }
    if matrix.iter().any(|x| !x.is_finite() || *x < 0.0) {
        return Err(Error::InvalidMatrix(
            "entries must be finite and nonnegative".into(),
        ));
    }
    let max = matrix.iter().cloned().fold(0.0, f64::max);
    let slack = tol * max;
    for i in 0..n {
        if matrix[i * n + i] > slack {
            return Err(Error::InvalidMatrix(format!(
                "nonzero diagonal entry at {i}"
            )));
        }
        for j in 0..i {
            if (matrix[i * n + j] - matrix[j * n + i]).abs() > slack {
                return Err(Error::InvalidMatrix(format!("not symmetric at ({j}, {i})")));
            }
        }
    }
    let mut dists = Vec::with_capacity(pair_count(n));
    for j in 1..n {
        for i in 0..j {
            dists.push(0.5 * (matrix[i * n + j] + matrix[j * n + i]));
        }
    }
    group_distances(n, dists, tol)
}

fn group_distances(n: usize, dists: Vec<f64>, tol: f64) -> Result<MetricRealization> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidParameters(
            "tolerance must be positive".into(),
        ));
    }
    if n == 1 {
        return MetricRealization::new(
            DistanceConfiguration::from_parts(1, Vec::new(), Vec::new())?,
            Vec::new(),
        );
    }
    let max = dists.iter().cloned().fold(0.0, f64::max);
    for j in 1..n {
        for i in 0..j {
            if dists[pair_index(i, j)] <= tol * max {
                return Err(Error::CoincidentPoints(i, j));
            }
        }
    }
    let mut order: Vec<usize> = (0..dists.len()).collect();
    order.sort_by(|&a, &b| dists[a].total_cmp(&dists[b]).then(a.cmp(&b)));
    let mut edges = vec![ColorId(0); dists.len()];
    let mut sums: Vec<(f64, usize)> = Vec::new();
    let mut prev = f64::NAN;
    for &e in &order {
        let d = dists[e];
        if sums.is_empty() || d - prev > tol * prev {
            sums.push((0.0, 0));
        }
        let g = sums.len() - 1;
        sums[g].0 += d;
        sums[g].1 += 1;
        edges[e] = ColorId(g as u16);
        prev = d;
    }
    let names = (0..sums.len()).map(|g| format!("d{g}")).collect();
    let values = sums.iter().map(|(s, k)| s / *k as f64).collect();
    MetricRealization::new(DistanceConfiguration::from_parts(n, names, edges)?, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> DistanceConfiguration {
        make_config(
            4,
            &[
                (0, 1, "a"),
                (2, 3, "a"),
                (0, 2, "b"),
                (0, 3, "b"),
                (1, 2, "b"),
                (1, 3, "b"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn smallest_configuration() {
        let c = make_config(2, &[(0, 1, "a")]).unwrap();
        assert_eq!(c.color_count(), 1);
        assert_eq!(c.color(1, 0), ColorId(0));
    }

    #[test]
    fn square_has_two_colors_in_first_occurrence_order() {
        let c = square();
        assert_eq!(c.color_names(), &["a".to_string(), "b".to_string()]);
        assert_eq!(c.color(2, 3), c.color(0, 1));
        assert_ne!(c.color(0, 2), c.color(0, 1));
    }

    #[test]
    fn color_order_ignores_input_order() {
        let c = make_config(3, &[(1, 2, "y"), (0, 2, "x"), (0, 1, "x")]).unwrap();
        assert_eq!(c.color_names()[0], "x");
    }

    #[test]
    fn malformed_pairs_are_rejected() {
        assert_eq!(
            make_config(3, &[(0, 1, "a"), (0, 2, "a")]),
            Err(Error::MissingPair(1, 2))
        );
        assert_eq!(
            make_config(2, &[(0, 1, "a"), (0, 1, "b")]),
            Err(Error::DuplicatePair(0, 1))
        );
        assert_eq!(
            make_config(2, &[(0, 2, "a")]),
            Err(Error::InvalidPair { i: 0, j: 2, n: 2 })
        );
        assert_eq!(
            make_config(2, &[(1, 1, "a")]),
            Err(Error::InvalidPair { i: 1, j: 1, n: 2 })
        );
    }

    #[test]
    fn unused_color_is_rejected() {
        let err =
            DistanceConfiguration::from_parts(2, vec!["a".into(), "b".into()], vec![ColorId(0)]);
        assert_eq!(err, Err(Error::EmptyColorClass("b".into())));
    }

    #[test]
    fn realize_planar_square() {
        let mut values = BTreeMap::new();
        values.insert("a".to_string(), core::f64::consts::SQRT_2);
        values.insert("b".to_string(), 1.0);
        let r = realize(square(), Some(&values)).unwrap();
        assert_eq!(r.distance(0, 1), core::f64::consts::SQRT_2);
        assert_eq!(r.distance(1, 3), 1.0);
        let d = r.squared_distances();
        assert!((d[1] - 2.0).abs() < 1e-12 && d[0] == 0.0 && d[4] == d[1]);
    }

    #[test]
    fn default_values_for_one_color() {
        // 1 + (0 + 1) / (2 * 1)
        let c = make_config(
            4,
            &[
                (0, 1, "a"),
                (0, 2, "a"),
                (0, 3, "a"),
                (1, 2, "a"),
                (1, 3, "a"),
                (2, 3, "a"),
            ],
        )
        .unwrap();
        let r = realize(c, None).unwrap();
        assert_eq!(r.values(), &[1.5]);
    }

    #[test]
    fn default_values_lie_in_range() {
        let c = DistanceConfiguration::from_labels(5, &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let r = realize(c, None).unwrap();
        assert!(r.values().iter().all(|&v| v > 1.0 && v <= 1.5));
    }

    #[test]
    fn triangle_violation_is_reported() {
        let mut values = BTreeMap::new();
        values.insert("a".to_string(), 10.0);
        values.insert("b".to_string(), 1.0);
        assert!(matches!(
            realize(square(), Some(&values)),
            Err(Error::TriangleInequality(..))
        ));
    }

    #[test]
    fn value_errors() {
        let mut values = BTreeMap::new();
        values.insert("a".to_string(), 1.0);
        values.insert("b".to_string(), 1.0);
        assert!(matches!(
            realize(square(), Some(&values)),
            Err(Error::NotInjective(..))
        ));
        values.insert("b".to_string(), -1.0);
        assert_eq!(
            realize(square(), Some(&values)),
            Err(Error::NonPositive("b".into()))
        );
        values.remove("b");
        assert_eq!(
            realize(square(), Some(&values)),
            Err(Error::MissingValue("b".into()))
        );
        values.insert("z".to_string(), 3.0);
        assert_eq!(
            realize(square(), Some(&values)),
            Err(Error::UnknownColor("z".into()))
        );
    }

    #[test]
    fn unit_square_points() {
        let pts = PointSet::new(
            2,
            vec![
                vec![0.0, 0.0],
                vec![1.0, 1.0],
                vec![1.0, 0.0],
                vec![0.0, 1.0],
            ],
        )
        .unwrap();
        let r = from_points(&pts, DEFAULT_GROUPING_TOL).unwrap();
        assert_eq!(r.config().color_count(), 2);
        assert_eq!(r.config().color(0, 1), r.config().color(2, 3));
        assert!((r.values()[0] - 1.0).abs() < 1e-12);
        assert!((r.values()[1] - core::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn cube_has_three_distance_groups() {
        let mut coords = Vec::new();
        for b in 0..8u32 {
            coords.push((0..3).map(|i| ((b >> i) & 1) as f64).collect());
        }
        let r = from_points(&PointSet::new(3, coords).unwrap(), DEFAULT_GROUPING_TOL).unwrap();
        let sq: Vec<f64> = r.values().iter().map(|v| v * v).collect();
        assert_eq!(sq.len(), 3);
        for (got, want) in sq.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        // 12 edges, 12 face diagonals, 4 body diagonals
        assert_eq!(r.config().color_sizes(), vec![12, 12, 4]);
    }

    #[test]
    fn coincident_points_are_rejected() {
        let pts = PointSet::new(1, vec![vec![0.0], vec![1.0], vec![0.0]]).unwrap();
        assert_eq!(from_points(&pts, 1e-9), Err(Error::CoincidentPoints(0, 2)));
    }

    #[test]
    fn mismatched_dimensions_are_rejected() {
        assert!(matches!(
            PointSet::new(2, vec![vec![0.0, 1.0], vec![1.0]]),
            Err(Error::DimensionMismatch {
                index: 1,
                found: 1,
                expected: 2
            })
        ));
    }

    #[test]
    fn distance_matrix_ingestion() {
        let m = [0.0, 1.0, 2.0, 1.0, 0.0, 1.0, 2.0, 1.0, 0.0];
        let r = from_distance_matrix(3, &m, 1e-9).unwrap();
        assert_eq!(r.config().color_count(), 2);
        assert_eq!(r.values(), &[1.0, 2.0]);
        let bad = [0.0, 1.0, 2.0, 1.5, 0.0, 1.0, 2.0, 1.0, 0.0];
        assert!(matches!(
            from_distance_matrix(3, &bad, 1e-9),
            Err(Error::InvalidMatrix(_))
        ));
    }

    #[test]
    fn induced_and_permuted() {
        let c = square();
        let sub = c.induced(&[0, 1, 2]).unwrap();
        assert_eq!(sub.color_count(), 2);
        let sub = c.induced(&[0, 1]).unwrap();
        assert_eq!(sub.color_names(), &["a".to_string()]);
        let p = c.permute_points(&[1, 2, 3, 0]).unwrap();
        assert_eq!(p.color(1, 2), c.color(0, 1));
        assert!(c.induced(&[0, 0]).is_err());
    }
}
