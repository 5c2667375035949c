//! Euclidean embeddability through the centered Gram matrix.
//!
//! `G = -(I - J/n) D (I - J/n)` with `D` the squared distances. The space
//! embeds in Euclidean space iff `G` is positive semidefinite, and then the
//! least dimension is `rank G`. Coordinates come from `G / 2`, whose
//! factorization reproduces the distances exactly.

use alloc::vec;
use alloc::vec::Vec;

use crate::config::{check_subset, DistanceConfiguration, MetricRealization, PointSet};
use crate::error::{Error, Result};
use crate::linalg::symmetric_eigen;

/// Relative eigenvalue tolerance: the absolute cutoff is
/// `tol * max(1, max |λ|)`.
pub const DEFAULT_EIGEN_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct GramAnalysis {
    pub n: usize,
    /// Row-major `n × n`.
    pub g: Vec<f64>,
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Absolute cutoff applied to the eigenvalues.
    pub tol: f64,
}

impl GramAnalysis {
    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn is_psd(&self) -> bool {
        self.min_eigenvalue() >= -self.tol
    }

    pub fn rank(&self) -> usize {
        self.eigenvalues.iter().filter(|&&l| l > self.tol).count()
    }

    pub fn report(&self) -> EmbedReport {
        let psd = self.is_psd();
        EmbedReport {
            is_euclidean: psd,
            m_x: psd.then(|| self.rank()),
            negative_mass: self.min_eigenvalue().min(0.0),
            eigenvalues: self.eigenvalues.clone(),
            tol: self.tol,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EmbedReport {
    pub is_euclidean: bool,
    /// Least embedding dimension, present iff Euclidean.
    pub m_x: Option<usize>,
    /// Most negative eigenvalue of `G`, or 0.
    pub negative_mass: f64,
    pub eigenvalues: Vec<f64>,
    pub tol: f64,
}

fn centered(n: usize, d2: &[f64], factor: f64) -> Vec<f64> {
    let mut row = vec![0.0; n];
    for i in 0..n {
        row[i] = d2[i * n..(i + 1) * n].iter().sum::<f64>() / n as f64;
    }
    let total = row.iter().sum::<f64>() / n as f64;
    let mut g = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            g[i * n + j] = -factor * (d2[i * n + j] - row[i] - row[j] + total);
        }
    }
    g
}

fn analyse(n: usize, g: Vec<f64>, rel_tol: f64) -> GramAnalysis {
    let eigenvalues = symmetric_eigen(n, &g).values;
    let scale = eigenvalues.iter().fold(1.0f64, |m, l| m.max(l.abs()));
    GramAnalysis {
        n,
        g,
        eigenvalues,
        tol: rel_tol * scale,
    }
}

/// Gram analysis of a row-major `n × n` squared-distance matrix.
pub fn gram_from_squared(n: usize, d2: &[f64], rel_tol: f64) -> GramAnalysis {
    assert_eq!(d2.len(), n * n, "matrix must be n × n");
    analyse(n, centered(n, d2, 1.0), rel_tol)
}

/// Gram analysis of a realization with the default tolerance.
pub fn gram(real: &MetricRealization) -> GramAnalysis {
    gram_from_squared(real.n(), &real.squared_distances(), DEFAULT_EIGEN_TOL)
}

pub fn embeddability(real: &MetricRealization, rel_tol: f64) -> EmbedReport {
    gram_from_squared(real.n(), &real.squared_distances(), rel_tol).report()
}

/// Points in `R^{m_X}` realizing the squared distances `d2`.
pub fn coordinates_from_squared(n: usize, d2: &[f64], rel_tol: f64) -> Result<PointSet> {
    let half = centered(n, d2, 0.5);
    let eig = symmetric_eigen(n, &half);
    let scale = eig.values.iter().fold(1.0f64, |m, l| m.max(l.abs()));
    let tol = rel_tol * scale;
    let min = eig.values.first().copied().unwrap_or(0.0);
    if min < -tol {
        return Err(Error::NotEuclidean(2.0 * min));
    }
    // largest eigenvalues first
    let axes: Vec<usize> = (0..n).rev().filter(|&k| eig.values[k] > tol).collect();
    let coords = (0..n)
        .map(|i| {
            axes.iter()
                .map(|&k| libm::sqrt(eig.values[k]) * eig.vectors[i * n + k])
                .collect()
        })
        .collect();
    PointSet::new(axes.len(), coords)
}

pub fn coordinates(real: &MetricRealization, rel_tol: f64) -> Result<PointSet> {
    coordinates_from_squared(real.n(), &real.squared_distances(), rel_tol)
}

/// `m_A + m_B` for a split of the points whose cross distances are all
/// equal. Any embedding of the whole space needs at least this many
/// dimensions.
pub fn ns_bound(real: &MetricRealization, a: &[usize], b: &[usize]) -> Result<usize> {
    let n = real.n();
    check_subset(n, a)?;
    check_subset(n, b)?;
    if a.len() + b.len() != n || a.iter().any(|x| b.contains(x)) {
        return Err(Error::InvalidSplit);
    }
    let cross = real.config().color(a[0], b[0]);
    if a.iter()
        .any(|&x| b.iter().any(|&y| real.config().color(x, y) != cross))
    {
        return Err(Error::NonConstantCross);
    }
    let dim = |part: &[usize]| -> Result<usize> {
        let rep = embeddability(&real.induced(part)?, DEFAULT_EIGEN_TOL);
        rep.m_x.ok_or(Error::NotEuclidean(rep.negative_mass))
    };
    Ok(dim(a)? + dim(b)?)
}

/// One evaluated value assignment.
#[derive(Clone, Debug, PartialEq)]
pub struct DimCandidate {
    /// Distance per color, in configuration color order.
    pub values: Vec<f64>,
    pub report: EmbedReport,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinDimSearch {
    /// Least `m_X` found; ties go to the lexicographically least values.
    pub best: Option<DimCandidate>,
    /// Points on the border of the Euclidean region found by bisection.
    pub boundary: Vec<DimCandidate>,
    pub grid_points: usize,
    pub euclidean_points: usize,
}

const BISECTION_STEPS: usize = 40;

/// Scans distance assignments for the least embedding dimension.
///
/// The first color is fixed to 1 and every other color ranges over
/// `2i / resolution`, `i = 1..=resolution`, skipping assignments that are not
/// injective. Wherever two neighboring grid points disagree on
/// embeddability, the crossing is bisected and the border point is
/// evaluated with a tolerance of `100 * rel_tol`, since rank drops happen
/// exactly there.
pub fn search_min_dim(
    config: &DistanceConfiguration,
    resolution: usize,
    rel_tol: f64,
) -> Result<MinDimSearch> {
    let c = config.color_count();
    if c > 3 {
        return Err(Error::InvalidParameters(
            "dimension search supports at most 3 colors".into(),
        ));
    }
    if resolution < 8 {
        return Err(Error::InvalidParameters(
            "grid resolution must be at least 8".into(),
        ));
    }
    let n = config.n();
    let free = c.saturating_sub(1);
    let step = 2.0 / resolution as f64;
    let grid_value = |i: usize| step * (i + 1) as f64;
    let eval = |values: &[f64], tol: f64| -> EmbedReport {
        let mut d2 = vec![0.0; n * n];
        for (i, j, col) in config.pairs() {
            let v = values[col.index()];
            d2[i * n + j] = v * v;
            d2[j * n + i] = v * v;
        }
        gram_from_squared(n, &d2, tol).report()
    };
    let injective = |values: &[f64]| {
        values
            .iter()
            .enumerate()
            .all(|(i, v)| !values[..i].contains(v))
    };
    let assignment = |idx: &[usize]| -> Vec<f64> {
        let mut v = Vec::with_capacity(c);
        if c > 0 {
            v.push(1.0);
        }
        v.extend(idx.iter().map(|&i| grid_value(i)));
        v
    };

    let dims = [resolution; 2];
    let total: usize = dims[..free].iter().product();
    let mut grid: Vec<Option<EmbedReport>> = vec![None; total];
    let index_of = |idx: &[usize]| idx.iter().fold(0, |acc, &i| acc * resolution + i);
    let mut idx = vec![0usize; free];
    let mut out = MinDimSearch {
        best: None,
        boundary: Vec::new(),
        grid_points: 0,
        euclidean_points: 0,
    };
    let consider = |cand: DimCandidate, best: &mut Option<DimCandidate>| {
        if let Some(m) = cand.report.m_x {
            let better = match best {
                None => true,
                Some(b) => {
                    let bm = b.report.m_x.expect("best is Euclidean");
                    m < bm
                        || (m == bm
                            && cand
                                .values
                                .iter()
                                .zip(&b.values)
                                .map(|(x, y)| x.total_cmp(y))
                                .find(|o| o.is_ne())
                                == Some(core::cmp::Ordering::Less))
                }
            };
            if better {
                *best = Some(cand);
            }
        }
    };
    for flat in 0..total {
        let mut rem = flat;
        for slot in idx.iter_mut().rev() {
            *slot = rem % resolution;
            rem /= resolution;
        }
        let values = assignment(&idx);
        if !injective(&values) {
            continue;
        }
        let report = eval(&values, rel_tol);
        out.grid_points += 1;
        if report.is_euclidean {
            out.euclidean_points += 1;
        }
        grid[flat] = Some(report.clone());
        consider(DimCandidate { values, report }, &mut out.best);
    }
    // bisect every sign change between axis neighbours
    for flat in 0..total {
        let Some(here) = &grid[flat] else { continue };
        let mut rem = flat;
        for slot in idx.iter_mut().rev() {
            *slot = rem % resolution;
            rem /= resolution;
        }
        for axis in 0..free {
            if idx[axis] + 1 >= resolution {
                continue;
            }
            let mut next = idx.clone();
            next[axis] += 1;
            let Some(there) = &grid[index_of(&next)] else {
                continue;
            };
            if here.is_euclidean == there.is_euclidean {
                continue;
            }
            let (mut inside, mut outside) = if here.is_euclidean {
                (grid_value(idx[axis]), grid_value(next[axis]))
            } else {
                (grid_value(next[axis]), grid_value(idx[axis]))
            };
            let mut values = assignment(&idx);
            for _ in 0..BISECTION_STEPS {
                let mid = 0.5 * (inside + outside);
                values[axis + 1] = mid;
                if eval(&values, rel_tol).is_euclidean {
                    inside = mid;
                } else {
                    outside = mid;
                }
            }
            values[axis + 1] = inside;
            if !injective(&values) {
                continue;
            }
            let report = eval(&values, 100.0 * rel_tol);
            let cand = DimCandidate { values, report };
            out.boundary.push(cand.clone());
            consider(cand, &mut out.best);
        }
    }
    Ok(out)
}
