//! Explicit point sets for the configurations of interest, their self-checks,
//! and the witnesses for the largest known sets with few triangle classes.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{PI, SQRT_2};

use crate::config::{from_points, DistanceConfiguration, PointSet, DEFAULT_GROUPING_TOL};
use crate::embed::{embeddability, ns_bound, DEFAULT_EIGEN_TOL};
use crate::error::{Error, Result};
use crate::family::{construct_family, example2, example3, johnson_pairs, FamilySpec};
use crate::isometry::{count_classes, find_isomorphism, Isomorphism};

#[derive(Clone, Debug, PartialEq)]
pub enum EmbeddingKind {
    /// Rows of `I_n - J_n / n`: the regular simplex, dimension `n - 1`.
    Simplex { n: usize },
    /// Two simplices in orthogonal subspaces: `K_{m, n-m}` plus its
    /// complement, dimension `n - 2`.
    BipartiteSimplices { m: usize, n: usize },
    /// A simplex on `n - 1` points plus the point `-n/(n-2)` times its first
    /// vertex: every pair but one at the same distance, dimension `n - 2`.
    OneEdge { n: usize },
    /// `e_1..e_{n-m}` and `-e_1..-e_m`: complement of an `m`-matching,
    /// dimension `n - m`.
    MatchingComplement { n: usize, m: usize },
    /// Regular pentagon.
    Pentagon,
    /// Two unit squares in orthogonal planes, both centred at the origin.
    TwoSquares,
    /// `±(e_i - J/m)`: two antipodal simplices, dimension `m - 1`.
    AntipodalSimplices { m: usize },
    /// The cross-polytope pair construction for matchings of sizes `p` and
    /// `q`, with second-block shift `t` (default `sqrt((2 - c) / (4q))`).
    CrossPairs {
        p: usize,
        q: usize,
        c: f64,
        t: Option<f64>,
    },
    /// A simplex on `n - 2` points and a segment in an orthogonal line.
    SimplexPlusSegment { n: usize },
    /// Vertices of the regular `m`-gon.
    Circle { m: usize },
    /// Even-weight words of `{0,1}^5`.
    HalfCube5,
    /// Characteristic vectors of the 2-subsets of a 5-set.
    JohnsonJ52,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn centered_simplex(n: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { 1.0 } else { 0.0 } - 1.0 / n as f64)
                .collect()
        })
        .collect()
}

fn direct_sum(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let da = a.first().map_or(0, Vec::len);
    let db = b.first().map_or(0, Vec::len);
    let mut out = Vec::with_capacity(a.len() + b.len());
    for r in a {
        let mut row = r.clone();
        row.resize(da + db, 0.0);
        out.push(row);
    }
    for r in b {
        let mut row = vec![0.0; da];
        row.extend_from_slice(r);
        out.push(row);
    }
    out
}

fn circle(m: usize) -> Vec<Vec<f64>> {
    (1..=m)
        .map(|i| {
            let a = 2.0 * PI * i as f64 / m as f64;
            vec![libm::cos(a), libm::sin(a)]
        })
        .collect()
}

/// The `2p × 2p` block
/// `1/(2p) [[p s I - 2 s J, c p I], [p s I - 2 s J, -c p I]]`, `s = sqrt(2 - c²)`,
/// with `t/p` added to the first `p` columns of every row.
fn cross_pair_block(p: usize, c: f64, t: f64) -> Vec<Vec<f64>> {
    let s = libm::sqrt((2.0 - c * c).max(0.0));
    let pf = p as f64;
    let mut rows = Vec::with_capacity(2 * p);
    for sign in [1.0, -1.0] {
        for i in 0..p {
            let mut row = vec![0.0; 2 * p];
            for j in 0..p {
                let id = if i == j { 1.0 } else { 0.0 };
                row[j] = (pf * s * id - 2.0 * s) / (2.0 * pf) + t / pf;
                row[p + j] = sign * c * pf * id / (2.0 * pf);
            }
            rows.push(row);
        }
    }
    rows
}

impl EmbeddingKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Simplex { .. } => "simplex",
            Self::BipartiteSimplices { .. } => "bipartite_simplices",
            Self::OneEdge { .. } => "one_edge",
            Self::MatchingComplement { .. } => "matching_complement",
            Self::Pentagon => "pentagon",
            Self::TwoSquares => "two_squares",
            Self::AntipodalSimplices { .. } => "antipodal_simplices",
            Self::CrossPairs { .. } => "cross_pairs",
            Self::SimplexPlusSegment { .. } => "simplex_plus_segment",
            Self::Circle { .. } => "circle",
            Self::HalfCube5 => "half_cube5",
            Self::JohnsonJ52 => "johnson_j52",
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            Self::Simplex { n } => n >= 2,
            Self::BipartiteSimplices { m, n } => m >= 1 && n > m && n >= 3,
            Self::OneEdge { n } => n >= 3,
            Self::MatchingComplement { n, m } => m >= 2 && 2 * m <= n,
            Self::AntipodalSimplices { m } => m >= 3,
            Self::CrossPairs { p, q, c, t } => {
                q >= 1 && p >= q.max(2) && c > 0.0 && c <= SQRT_2 && t.is_none_or(f64::is_finite)
            }
            Self::SimplexPlusSegment { n } => n >= 4,
            Self::Circle { m } => m >= 3,
            Self::Pentagon | Self::TwoSquares | Self::HalfCube5 | Self::JohnsonJ52 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(format!(
                "parameters out of range for {}",
                self.name()
            )))
        }
    }

    /// The configuration these points are meant to realize.
    pub fn intended(&self) -> Result<DistanceConfiguration> {
        self.validate()?;
        match *self {
            Self::Simplex { n } => construct_family(&FamilySpec::Complete { n }),
            Self::BipartiteSimplices { m, n } => construct_family(&FamilySpec::CompleteBipartite {
                left: m,
                right: n - m,
            }),
            Self::OneEdge { n } => construct_family(&FamilySpec::MatchingComplement { n, m: 1 }),
            Self::MatchingComplement { n, m } => {
                construct_family(&FamilySpec::MatchingComplement { n, m })
            }
            Self::Pentagon => construct_family(&FamilySpec::Pentagon),
            Self::TwoSquares => construct_family(&FamilySpec::Example1 { n: 8 }),
            Self::AntipodalSimplices { m } => example2(m, m, m),
            Self::CrossPairs { p, q, .. } => example3(p, q, 0),
            Self::SimplexPlusSegment { n } => construct_family(&FamilySpec::Example4 { n }),
            Self::Circle { m } => construct_family(&FamilySpec::GraphMetric {
                n: m,
                edges: (0..m).map(|i| (i, (i + 1) % m)).collect(),
            }),
            Self::HalfCube5 => construct_family(&FamilySpec::HalfCube5),
            Self::JohnsonJ52 => construct_family(&FamilySpec::JohnsonJ52),
        }
    }

    /// Least embedding dimension claimed for the intended configuration.
    pub fn claimed_dim(&self) -> usize {
        match *self {
            Self::Simplex { n } => n - 1,
            Self::BipartiteSimplices { n, .. }
            | Self::OneEdge { n }
            | Self::SimplexPlusSegment { n } => n - 2,
            Self::MatchingComplement { n, m } => n - m,
            Self::Pentagon | Self::Circle { .. } => 2,
            Self::TwoSquares => 4,
            Self::AntipodalSimplices { m } => m - 1,
            Self::CrossPairs { p, q, .. } => p + 2 * q,
            Self::HalfCube5 => 5,
            Self::JohnsonJ52 => 4,
        }
    }

    /// The split with constant cross distance used for the lower bound
    /// `m_A + m_B`, where one is designated.
    pub fn split(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let halves = |a: usize, n: usize| Some(((0..a).collect(), (a..n).collect()));
        match *self {
            Self::BipartiteSimplices { m, n } => halves(m, n),
            Self::TwoSquares => halves(4, 8),
            Self::CrossPairs { p, q, .. } => halves(2 * p, 2 * p + 2 * q),
            Self::SimplexPlusSegment { n } => halves(n - 2, n),
            _ => None,
        }
    }
}

/// Coordinates for `kind`.
pub fn generate_embedding(kind: &EmbeddingKind) -> Result<PointSet> {
    kind.validate()?;
    let rows = match *kind {
        EmbeddingKind::Simplex { n } => centered_simplex(n),
        EmbeddingKind::BipartiteSimplices { m, n } => {
            direct_sum(&centered_simplex(m), &centered_simplex(n - m))
        }
        EmbeddingKind::OneEdge { n } => {
            let mut rows = centered_simplex(n - 1);
            let scale = -(n as f64) / (n as f64 - 2.0);
            let h = rows[0].iter().map(|x| scale * x).collect();
            rows.insert(0, h);
            rows
        }
        EmbeddingKind::MatchingComplement { n, m } => {
            let d = n - m;
            let mut rows: Vec<Vec<f64>> = (0..d)
                .map(|i| (0..d).map(|j| f64::from(u8::from(i == j))).collect())
                .collect();
            rows.extend((0..m).map(|i| (0..d).map(|j| -f64::from(u8::from(i == j))).collect()));
            rows
        }
        EmbeddingKind::Pentagon => circle(5),
        EmbeddingKind::TwoSquares => direct_sum(&circle(4), &circle(4)),
        EmbeddingKind::AntipodalSimplices { m } => {
            let mut rows = centered_simplex(m);
            let neg: Vec<Vec<f64>> = rows
                .iter()
                .map(|r| r.iter().map(|x| -x).collect())
                .collect();
            rows.extend(neg);
            rows
        }
        EmbeddingKind::CrossPairs { p, q, c, t } => {
            let t = t.unwrap_or_else(|| libm::sqrt((2.0 - c) / (4.0 * q as f64)));
            direct_sum(
                &cross_pair_block(p, SQRT_2, 0.0),
                &cross_pair_block(q, c, t),
            )
        }
        EmbeddingKind::SimplexPlusSegment { n } => direct_sum(&centered_simplex(n - 2), &circle(2)),
        EmbeddingKind::Circle { m } => circle(m),
        EmbeddingKind::HalfCube5 => (0u32..32)
            .filter(|w| w.count_ones() % 2 == 0)
            .map(|w| (0..5).map(|b| f64::from((w >> b) & 1)).collect())
            .collect(),
        EmbeddingKind::JohnsonJ52 => johnson_pairs()
            .into_iter()
            .map(|s| (0..5).map(|b| f64::from((s >> b) & 1)).collect())
            .collect(),
    };
    let dim = rows.first().map_or(0, Vec::len);
    PointSet::new(dim, rows)
}

/// Outcome of checking a generated point set against its intended
/// configuration and claimed dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingCheck {
    pub kind: EmbeddingKind,
    pub points: PointSet,
    /// Number of distinct distances among the generated points.
    pub realized_colors: usize,
    pub intended_colors: usize,
    /// Point and color bijection onto the intended configuration.
    pub isomorphism: Option<Isomorphism>,
    /// Gram rank of the points.
    pub rank: usize,
    pub claimed: usize,
    /// `m_A + m_B` over the designated split, when its cross distances are
    /// constant.
    pub ns_bound: Option<usize>,
    /// Human-readable account of every failed comparison.
    pub discrepancies: Vec<String>,
}

impl EmbeddingCheck {
    pub fn configuration_matches(&self) -> bool {
        self.isomorphism.is_some()
    }

    pub fn rank_matches(&self) -> bool {
        self.rank == self.claimed
    }

    pub fn ns_matches(&self) -> bool {
        self.ns_bound.is_none_or(|b| b == self.rank)
    }

    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Generates `kind`, regroups its distances and compares the result with the
/// intended configuration, the claimed dimension and the split bound.
pub fn check_embedding(kind: &EmbeddingKind) -> Result<EmbeddingCheck> {
    let points = generate_embedding(kind)?;
    let intended = kind.intended()?;
    let real = from_points(&points, DEFAULT_GROUPING_TOL)?;
    let report = embeddability(&real, DEFAULT_EIGEN_TOL);
    let rank = report
        .m_x
        .ok_or(Error::NotEuclidean(report.negative_mass))?;
    let isomorphism = find_isomorphism(&intended, real.config());
    let ns = match kind.split() {
        Some((a, b)) => match ns_bound(&real, &a, &b) {
            Ok(v) => Some(v),
            Err(Error::NonConstantCross) => None,
            Err(e) => return Err(e),
        },
        None => None,
    };
    let mut check = EmbeddingCheck {
        kind: kind.clone(),
        realized_colors: real.config().color_count(),
        intended_colors: intended.color_count(),
        isomorphism,
        rank,
        claimed: kind.claimed_dim(),
        ns_bound: ns,
        discrepancies: Vec::new(),
        points,
    };
    if !check.configuration_matches() {
        let mut sq: Vec<f64> = real.values().iter().map(|v| v * v).collect();
        sq.sort_by(f64::total_cmp);
        check.discrepancies.push(format!(
            "points realize {} distances (squared {:?}), not the intended {}-color configuration",
            check.realized_colors, sq, check.intended_colors
        ));
    }
    if !check.rank_matches() {
        check.discrepancies.push(format!(
            "Gram rank {} differs from claimed dimension {}",
            rank, check.claimed
        ));
    }
    if !check.ns_matches() {
        check.discrepancies.push(format!(
            "split bound {:?} differs from rank {}",
            check.ns_bound, rank
        ));
    }
    if kind.split().is_some() && check.ns_bound.is_none() {
        check.discrepancies.push(String::from(
            "distances across the designated split are not constant",
        ));
    }
    Ok(check)
}

/// A lower-bound witness for the largest set in `R^m` with `a_3 = t`.
#[derive(Clone, Debug, PartialEq)]
pub struct FTableEntry {
    pub m: usize,
    pub k: usize,
    pub t: usize,
    pub claimed: usize,
    pub kind: EmbeddingKind,
    pub witness: PointSet,
    /// `a_3` of the witness, by canonicalizing every triple.
    pub a_k: usize,
    pub rank: usize,
}

impl FTableEntry {
    pub fn holds(&self) -> bool {
        self.witness.len() == self.claimed && self.a_k == self.t && self.rank <= self.m
    }
}

/// Largest `t = 2` dimension accepted.
const MAX_TABLE_DIM: usize = 64;

pub fn f_table(m: usize, t: usize) -> Result<FTableEntry> {
    let (kind, claimed) = match (m, t) {
        (2, 2) => (EmbeddingKind::Pentagon, 5),
        (3..=MAX_TABLE_DIM, 2) => (EmbeddingKind::MatchingComplement { n: 2 * m, m }, 2 * m),
        (2..=4, 3) => (EmbeddingKind::AntipodalSimplices { m: m + 1 }, 2 * m + 2),
        (5, 3) => (EmbeddingKind::HalfCube5, 16),
        _ => return Err(Error::TableOutOfRange { m, t }),
    };
    let witness = generate_embedding(&kind)?;
    let real = from_points(&witness, DEFAULT_GROUPING_TOL)?;
    let report = embeddability(&real, DEFAULT_EIGEN_TOL);
    let rank = report
        .m_x
        .ok_or(Error::NotEuclidean(report.negative_mass))?;
    let a_k = count_classes(real.config(), 3)?;
    Ok(FTableEntry {
        m,
        k: 3,
        t,
        claimed,
        kind,
        witness,
        a_k,
        rank,
    })
}
