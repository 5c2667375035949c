//! Shape recognition for color classes and verifiers for the structure
//! theorems on sequences with small `a_k`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::config::{ColorId, DistanceConfiguration};
use crate::error::{Error, Result};
use crate::family::{construct_family, example2, example3, example4, FamilySpec};
use crate::graph::ColorGraph;
use crate::isometry::{
    canonical_form, count_classes, find_isomorphism, for_each_subset, triangle_types, Isomorphism,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    Pentagon,
    Star,
    CompleteBipartite,
    KnMinusK2,
    ComplementOfMatching,
    Matching,
    UnionOfCliques,
    Other,
}

impl Shape {
    pub fn name(self) -> &'static str {
        match self {
            Shape::Pentagon => "pentagon",
            Shape::Star => "star",
            Shape::CompleteBipartite => "complete_bipartite",
            Shape::KnMinusK2 => "kn_minus_k2",
            Shape::ComplementOfMatching => "complement_of_matching",
            Shape::Matching => "matching",
            Shape::UnionOfCliques => "union_of_cliques",
            Shape::Other => "other",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeWitness {
    /// Cycle order starting at the smallest vertex.
    Pentagon {
        cycle: [usize; 5],
    },
    Star {
        center: usize,
    },
    CompleteBipartite {
        left: Vec<usize>,
        right: Vec<usize>,
    },
    KnMinusK2 {
        missing: (usize, usize),
    },
    ComplementOfMatching {
        matching: Vec<(usize, usize)>,
    },
    Matching {
        edges: Vec<(usize, usize)>,
    },
    UnionOfCliques {
        cliques: Vec<Vec<usize>>,
    },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeVerdict {
    pub shape: Shape,
    pub witness: ShapeWitness,
}

impl ShapeVerdict {
    /// Re-checks the witness against `g` edge by edge, without the
    /// recognizers.
    pub fn validate(&self, g: &ColorGraph) -> bool {
        let n = g.n();
        let all_pairs = || (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
        match &self.witness {
            ShapeWitness::Pentagon { cycle } => {
                let mut seen = [false; 5];
                n == 5
                    && cycle
                        .iter()
                        .all(|&v| v < 5 && !core::mem::replace(&mut seen[v], true))
                    && all_pairs().all(|(i, j)| {
                        let pi = cycle.iter().position(|&v| v == i).unwrap();
                        let pj = cycle.iter().position(|&v| v == j).unwrap();
                        let gap = (pi + 5 - pj) % 5;
                        g.has_edge(i, j) == (gap == 1 || gap == 4)
                    })
            }
            ShapeWitness::Star { center } => {
                *center < n
                    && all_pairs().all(|(i, j)| g.has_edge(i, j) == (i == *center || j == *center))
            }
            ShapeWitness::CompleteBipartite { left, right } => {
                let mut side = vec![0u8; n];
                for &v in left {
                    if v < n {
                        side[v] |= 1;
                    }
                }
                for &v in right {
                    if v < n {
                        side[v] |= 2;
                    }
                }
                !left.is_empty()
                    && !right.is_empty()
                    && left.len() + right.len() == n
                    && side.iter().all(|&s| s == 1 || s == 2)
                    && all_pairs().all(|(i, j)| g.has_edge(i, j) == (side[i] != side[j]))
            }
            ShapeWitness::KnMinusK2 { missing } => {
                all_pairs().all(|(i, j)| g.has_edge(i, j) == ((i, j) != *missing))
                    && missing.0 < missing.1
            }
            ShapeWitness::ComplementOfMatching { matching } => {
                disjoint_pairs(n, matching)
                    && !matching.is_empty()
                    && all_pairs().all(|(i, j)| g.has_edge(i, j) != matching.contains(&(i, j)))
            }
            ShapeWitness::Matching { edges } => {
                disjoint_pairs(n, edges)
                    && all_pairs().all(|(i, j)| g.has_edge(i, j) == edges.contains(&(i, j)))
            }
            ShapeWitness::UnionOfCliques { cliques } => {
                let mut part = vec![usize::MAX; n];
                for (idx, c) in cliques.iter().enumerate() {
                    for &v in c {
                        if v >= n || part[v] != usize::MAX {
                            return false;
                        }
                        part[v] = idx;
                    }
                }
                part.iter().all(|&p| p != usize::MAX)
                    && all_pairs().all(|(i, j)| g.has_edge(i, j) == (part[i] == part[j]))
            }
            ShapeWitness::None => self.shape == Shape::Other,
        }
    }
}

fn disjoint_pairs(n: usize, pairs: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    pairs.iter().all(|&(i, j)| {
        i < j
            && j < n
            && !core::mem::replace(&mut seen[i], true)
            && !core::mem::replace(&mut seen[j], true)
    })
}

fn pentagon_cycle(g: &ColorGraph) -> [usize; 5] {
    let mut cycle = [0usize; 5];
    let mut prev = usize::MAX;
    for slot in 1..5 {
        let cur = cycle[slot - 1];
        let next = g.neighbors(cur).find(|&y| y != prev).expect("2-regular");
        prev = cur;
        cycle[slot] = next;
    }
    cycle
}

/// Classifies a graph by the first matching shape in the order pentagon,
/// star, complete bipartite, `K_n` minus an edge, complement of a matching,
/// matching, union of cliques, other.
pub fn recognize_graph(g: &ColorGraph) -> ShapeVerdict {
    let verdict = |shape, witness| ShapeVerdict { shape, witness };
    if g.is_pentagon() {
        return verdict(
            Shape::Pentagon,
            ShapeWitness::Pentagon {
                cycle: pentagon_cycle(g),
            },
        );
    }
    if let Some(center) = g.star_center() {
        return verdict(Shape::Star, ShapeWitness::Star { center });
    }
    if let Some((left, right)) = g.complete_bipartition() {
        return verdict(
            Shape::CompleteBipartite,
            ShapeWitness::CompleteBipartite { left, right },
        );
    }
    if let Some(missing) = g.missing_pair() {
        return verdict(Shape::KnMinusK2, ShapeWitness::KnMinusK2 { missing });
    }
    if let Some(matching) = g.complement_matching() {
        return verdict(
            Shape::ComplementOfMatching,
            ShapeWitness::ComplementOfMatching { matching },
        );
    }
    if g.edge_count() > 0 && g.is_matching() {
        return verdict(Shape::Matching, ShapeWitness::Matching { edges: g.edges() });
    }
    if g.is_union_of_cliques() {
        return verdict(
            Shape::UnionOfCliques,
            ShapeWitness::UnionOfCliques {
                cliques: g.components(),
            },
        );
    }
    verdict(Shape::Other, ShapeWitness::None)
}

/// Shape of the graph of color `color`.
pub fn recognize_shape(config: &DistanceConfiguration, color: ColorId) -> Result<ShapeVerdict> {
    if color.index() >= config.color_count() {
        return Err(Error::ColorOutOfRange {
            index: color.index(),
            count: config.color_count(),
        });
    }
    Ok(recognize_graph(&config.color_graph(color)))
}

/// The four possible sets of triangle types when `a_2 = a_3 = 3`, written
/// with colors `a`, `b`, `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriangleShape {
    /// `{aab, aac, bbc}`: two 4-cycle parts joined completely.
    SplitCycles,
    /// `{aaa, abc, bba}`: two cliques joined by a matching.
    TwoCliquesMatching,
    /// `{aaa, aab, aac}`: two disjoint matchings.
    DisjointMatchings,
    /// `{aaa, bba, bbc}`: a clique plus a separate pair.
    CliquePlusPair,
}

impl TriangleShape {
    pub const ALL: [TriangleShape; 4] = [
        TriangleShape::SplitCycles,
        TriangleShape::TwoCliquesMatching,
        TriangleShape::DisjointMatchings,
        TriangleShape::CliquePlusPair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TriangleShape::SplitCycles => "aab,aac,bbc",
            TriangleShape::TwoCliquesMatching => "aaa,abc,bba",
            TriangleShape::DisjointMatchings => "aaa,aab,aac",
            TriangleShape::CliquePlusPair => "aaa,bba,bbc",
        }
    }

    /// Triangle types over the color positions 0, 1, 2.
    pub fn pattern(self) -> [[usize; 3]; 3] {
        match self {
            TriangleShape::SplitCycles => [[0, 0, 1], [0, 0, 2], [1, 1, 2]],
            TriangleShape::TwoCliquesMatching => [[0, 0, 0], [0, 1, 2], [0, 1, 1]],
            TriangleShape::DisjointMatchings => [[0, 0, 0], [0, 0, 1], [0, 0, 2]],
            TriangleShape::CliquePlusPair => [[0, 0, 0], [0, 1, 1], [1, 1, 2]],
        }
    }
}

const PERMS3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Finds the shape and the color order `(a, b, c)` under which `types`
/// is one of the four shapes. Every color bijection is tried.
pub fn match_triangle_shape(
    types: &BTreeSet<[ColorId; 3]>,
) -> Option<(TriangleShape, [ColorId; 3])> {
    let colors: BTreeSet<ColorId> = types.iter().flatten().copied().collect();
    if colors.len() != 3 || types.len() != 3 {
        return None;
    }
    let colors: Vec<ColorId> = colors.into_iter().collect();
    for shape in TriangleShape::ALL {
        for perm in PERMS3 {
            let order = [colors[perm[0]], colors[perm[1]], colors[perm[2]]];
            let mapped: BTreeSet<[ColorId; 3]> = shape
                .pattern()
                .iter()
                .map(|t| {
                    let mut m = [order[t[0]], order[t[1]], order[t[2]]];
                    m.sort_unstable();
                    m
                })
                .collect();
            if &mapped == types {
                return Some((shape, order));
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// `a_k = 1` for some `2 ≤ k ≤ n-2` forces `a_2 = 1`.
    ThmA1,
    /// `a_k = 2` for some `4 ≤ k` with `k² - k ≤ n` forces `a_2 = 2` and a
    /// color class `K_n - K_2` or `K_{1,n-1}`.
    ThmA2,
    /// `a_3 ≤ 3` and `n ≥ 5` force `a_2 ≤ a_3`.
    Thm3,
    /// `a_3 = 2` and `n ≥ 5` force a color class that is complete
    /// bipartite, the complement of a matching, or the pentagon.
    Thm25,
    /// `a_2 = a_3 = 3` and `n ≥ 5` force one of four triangle shapes.
    Cor40,
    /// `a_2 = a_3 = 3` and `n ≥ 5` force isomorphism to a listed example.
    ThmA4,
}

impl Theorem {
    pub fn id(self) -> &'static str {
        match self {
            Theorem::ThmA1 => "thm:a1",
            Theorem::ThmA2 => "thm:a2",
            Theorem::Thm3 => "thm:3",
            Theorem::Thm25 => "thm:25",
            Theorem::Cor40 => "cor:40",
            Theorem::ThmA4 => "thm:a4",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// Hypotheses fail; the reason.
    NotApplicable(String),
    /// The relevant entries of the sequence.
    Counts {
        k: usize,
        a_k: usize,
        a_2: usize,
        a_3: Option<usize>,
    },
    /// A color class with the required shape.
    Shape {
        color: ColorId,
        verdict: ShapeVerdict,
    },
    /// Triangle shape and color order `(a, b, c)`.
    Triangles {
        shape: TriangleShape,
        order: [ColorId; 3],
    },
    /// Isomorphism onto a listed example.
    Example {
        instance: ExampleInstance,
        isomorphism: Isomorphism,
    },
    /// Why the conclusion fails.
    Counterexample(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub applicable: bool,
    /// Always true when not applicable.
    pub holds: bool,
    pub witness: Witness,
}

impl TheoremReport {
    fn not_applicable(theorem: Theorem, reason: impl Into<String>) -> Self {
        Self {
            theorem,
            applicable: false,
            holds: true,
            witness: Witness::NotApplicable(reason.into()),
        }
    }
}

/// Memoized `a_k` values of one configuration.
#[derive(Debug)]
pub(crate) struct Counts<'a> {
    config: &'a DistanceConfiguration,
    known: BTreeMap<usize, usize>,
}

impl<'a> Counts<'a> {
    pub(crate) fn new(config: &'a DistanceConfiguration) -> Self {
        let mut known = BTreeMap::new();
        known.insert(1, 1);
        if config.n() >= 2 {
            known.insert(2, config.color_count());
        }
        Self { config, known }
    }

    pub(crate) fn from_sequence(config: &'a DistanceConfiguration, seq: &[usize]) -> Self {
        Self {
            config,
            known: seq.iter().enumerate().map(|(i, &a)| (i + 1, a)).collect(),
        }
    }

    pub(crate) fn a(&mut self, k: usize) -> Result<usize> {
        if let Some(&v) = self.known.get(&k) {
            return Ok(v);
        }
        let v = count_classes(self.config, k)?;
        self.known.insert(k, v);
        Ok(v)
    }
}

pub fn verify_thm_a1(config: &DistanceConfiguration) -> Result<TheoremReport> {
    thm_a1(&mut Counts::new(config))
}

pub(crate) fn thm_a1(counts: &mut Counts<'_>) -> Result<TheoremReport> {
    let n = counts.config.n();
    if n < 4 {
        return Ok(TheoremReport::not_applicable(Theorem::ThmA1, "needs n ≥ 4"));
    }
    let a2 = counts.a(2)?;
    for k in 2..=n - 2 {
        let ak = counts.a(k)?;
        if ak == 1 {
            return Ok(TheoremReport {
                theorem: Theorem::ThmA1,
                applicable: true,
                holds: a2 == 1,
                witness: Witness::Counts {
                    k,
                    a_k: ak,
                    a_2: a2,
                    a_3: None,
                },
            });
        }
    }
    Ok(TheoremReport::not_applicable(
        Theorem::ThmA1,
        "no a_k = 1 with 2 ≤ k ≤ n - 2",
    ))
}

/// `k` with `4 ≤ k` and `k² - k ≤ n`.
pub fn thm_a2_window(n: usize) -> core::ops::RangeInclusive<usize> {
    let mut hi = 3;
    while (hi + 1) * hi <= n {
        hi += 1;
    }
    4..=hi
}

pub fn verify_thm_a2(config: &DistanceConfiguration) -> Result<TheoremReport> {
    thm_a2(&mut Counts::new(config))
}

pub(crate) fn thm_a2(counts: &mut Counts<'_>) -> Result<TheoremReport> {
    let config = counts.config;
    let window = thm_a2_window(config.n());
    if window.is_empty() {
        return Ok(TheoremReport::not_applicable(
            Theorem::ThmA2,
            "k window empty (needs n ≥ 12)",
        ));
    }
    for k in window {
        let ak = counts.a(k)?;
        if ak != 2 {
            continue;
        }
        let a2 = counts.a(2)?;
        let found = config.color_ids().find_map(|c| {
            let g = config.color_graph(c);
            let witness = if let Some(missing) = g.missing_pair() {
                ShapeVerdict {
                    shape: Shape::KnMinusK2,
                    witness: ShapeWitness::KnMinusK2 { missing },
                }
            } else if let Some(center) = g.star_center() {
                ShapeVerdict {
                    shape: Shape::Star,
                    witness: ShapeWitness::Star { center },
                }
            } else {
                return None;
            };
            Some((c, witness))
        });
        let report = match found {
            Some((color, verdict)) if a2 == 2 => TheoremReport {
                theorem: Theorem::ThmA2,
                applicable: true,
                holds: true,
                witness: Witness::Shape { color, verdict },
            },
            _ => TheoremReport {
                theorem: Theorem::ThmA2,
                applicable: true,
                holds: false,
                witness: Witness::Counterexample(format!(
                    "a_{k} = 2 but a_2 = {a2} and no color class is K_n - K_2 or a spanning star"
                )),
            },
        };
        return Ok(report);
    }
    Ok(TheoremReport::not_applicable(
        Theorem::ThmA2,
        "no a_k = 2 in the k window",
    ))
}

pub fn verify_thm_3(config: &DistanceConfiguration) -> Result<TheoremReport> {
    thm_3(&mut Counts::new(config))
}

pub(crate) fn thm_3(counts: &mut Counts<'_>) -> Result<TheoremReport> {
    let n = counts.config.n();
    if n < 5 {
        return Ok(TheoremReport::not_applicable(Theorem::Thm3, "needs n ≥ 5"));
    }
    let a3 = counts.a(3)?;
    if a3 > 3 {
        return Ok(TheoremReport::not_applicable(Theorem::Thm3, "a_3 > 3"));
    }
    let a2 = counts.a(2)?;
    Ok(TheoremReport {
        theorem: Theorem::Thm3,
        applicable: true,
        holds: a2 <= a3,
        witness: Witness::Counts {
            k: 3,
            a_k: a3,
            a_2: a2,
            a_3: Some(a3),
        },
    })
}

/// With `a_3 ≤ 3` checks `a_2 ≤ a_3`; when `a_2 = a_3 = 3` also identifies
/// the triangle shape (the report is then about [`Theorem::Cor40`]).
pub fn classify_a3(config: &DistanceConfiguration) -> Result<TheoremReport> {
    let mut counts = Counts::new(config);
    let base = thm_3(&mut counts)?;
    if !base.applicable || !base.holds {
        return Ok(base);
    }
    if counts.a(2)? == 3 && counts.a(3)? == 3 {
        return cor_40(&mut counts);
    }
    Ok(base)
}

pub(crate) fn cor_40(counts: &mut Counts<'_>) -> Result<TheoremReport> {
    let config = counts.config;
    if config.n() < 5 {
        return Ok(TheoremReport::not_applicable(Theorem::Cor40, "needs n ≥ 5"));
    }
    if counts.a(2)? != 3 || counts.a(3)? != 3 {
        return Ok(TheoremReport::not_applicable(
            Theorem::Cor40,
            "needs a_2 = a_3 = 3",
        ));
    }
    let types = triangle_types(config);
    Ok(match match_triangle_shape(&types) {
        Some((shape, order)) => TheoremReport {
            theorem: Theorem::Cor40,
            applicable: true,
            holds: true,
            witness: Witness::Triangles { shape, order },
        },
        None => TheoremReport {
            theorem: Theorem::Cor40,
            applicable: true,
            holds: false,
            witness: Witness::Counterexample(format!(
                "triangle types {types:?} match none of the four shapes"
            )),
        },
    })
}

pub fn classify_a3_eq_2(config: &DistanceConfiguration) -> Result<TheoremReport> {
    thm_25(&mut Counts::new(config))
}

pub(crate) fn thm_25(counts: &mut Counts<'_>) -> Result<TheoremReport> {
    let config = counts.config;
    if config.n() < 5 {
        return Ok(TheoremReport::not_applicable(Theorem::Thm25, "needs n ≥ 5"));
    }
    if counts.a(3)? != 2 {
        return Ok(TheoremReport::not_applicable(
            Theorem::Thm25,
            "needs a_3 = 2",
        ));
    }
    for c in config.color_ids() {
        let g = config.color_graph(c);
        let verdict = if g.is_pentagon() {
            ShapeVerdict {
                shape: Shape::Pentagon,
                witness: ShapeWitness::Pentagon {
                    cycle: pentagon_cycle(&g),
                },
            }
        } else if let Some((left, right)) = g.complete_bipartition() {
            ShapeVerdict {
                shape: Shape::CompleteBipartite,
                witness: ShapeWitness::CompleteBipartite { left, right },
            }
        } else if let Some(matching) = g.complement_matching() {
            ShapeVerdict {
                shape: Shape::ComplementOfMatching,
                witness: ShapeWitness::ComplementOfMatching { matching },
            }
        } else {
            continue;
        };
        return Ok(TheoremReport {
            theorem: Theorem::Thm25,
            applicable: true,
            holds: true,
            witness: Witness::Shape { color: c, verdict },
        });
    }
    Ok(TheoremReport {
        theorem: Theorem::Thm25,
        applicable: true,
        holds: false,
        witness: Witness::Counterexample(String::from(
            "no color class is complete bipartite, the complement of a matching, or the pentagon",
        )),
    })
}

/// One configuration from the list of examples with `a_2 = a_3 = 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExampleInstance {
    /// The subconfiguration of the 8-point example on `points`.
    Example1 {
        points: Vec<usize>,
    },
    Example2 {
        y: usize,
        z: usize,
        g: usize,
    },
    /// Only `p ≥ q ≥ 1` is required here.
    Example3 {
        p: usize,
        q: usize,
        free: usize,
    },
    Example4 {
        n: usize,
    },
}

impl ExampleInstance {
    pub fn config(&self) -> Result<DistanceConfiguration> {
        match self {
            ExampleInstance::Example1 { points } => {
                construct_family(&FamilySpec::Example1 { n: 8 })?.induced(points)
            }
            ExampleInstance::Example2 { y, z, g } => example2(*y, *z, *g),
            ExampleInstance::Example3 { p, q, free } => example3(*p, *q, *free),
            ExampleInstance::Example4 { n } => example4(*n),
        }
    }

    pub fn label(&self) -> String {
        match self {
            ExampleInstance::Example1 { points } => format!("example1 on points {points:?}"),
            ExampleInstance::Example2 { y, z, g } => format!("example2 y={y} z={z} g={g}"),
            ExampleInstance::Example3 { p, q, free } => format!("example3 p={p} q={q} free={free}"),
            ExampleInstance::Example4 { n } => format!("example4 n={n}"),
        }
    }
}

/// Every example instance on `n` points with three colors, keyed by
/// canonical form.
#[derive(Clone, Debug)]
pub struct ExampleCatalog {
    n: usize,
    entries: BTreeMap<Vec<u16>, (ExampleInstance, DistanceConfiguration)>,
}

impl ExampleCatalog {
    pub fn new(n: usize) -> Self {
        let mut instances = Vec::new();
        if (5..=8).contains(&n) {
            for_each_subset(8, n, |s| {
                instances.push(ExampleInstance::Example1 { points: s.to_vec() })
            });
        }
        for y in 1..=n / 2 {
            for g in 1..=y {
                instances.push(ExampleInstance::Example2 { y, z: n - y, g });
            }
        }
        for q in 1..=n / 4 {
            for p in q..=(n / 2 - q) {
                instances.push(ExampleInstance::Example3 {
                    p,
                    q,
                    free: n - 2 * (p + q),
                });
            }
        }
        instances.push(ExampleInstance::Example4 { n });
        let mut entries = BTreeMap::new();
        for inst in instances {
            let Ok(config) = inst.config() else { continue };
            if config.color_count() != 3 {
                continue;
            }
            entries
                .entry(canonical_form(&config))
                .or_insert((inst, config));
        }
        Self { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn instances(&self) -> impl Iterator<Item = &ExampleInstance> {
        self.entries.values().map(|(i, _)| i)
    }

    /// The listed example isomorphic to `config`, with the isomorphism.
    pub fn find(&self, config: &DistanceConfiguration) -> Option<(ExampleInstance, Isomorphism)> {
        if config.n() != self.n {
            return None;
        }
        let (inst, target) = self.entries.get(&canonical_form(config))?;
        let iso = find_isomorphism(config, target)?;
        iso.verify(config, target).then(|| (inst.clone(), iso))
    }
}

pub fn verify_thm_a4(config: &DistanceConfiguration) -> Result<TheoremReport> {
    thm_a4(&mut Counts::new(config), &ExampleCatalog::new(config.n()))
}

pub(crate) fn thm_a4(counts: &mut Counts<'_>, catalog: &ExampleCatalog) -> Result<TheoremReport> {
    let config = counts.config;
    if config.n() < 5 {
        return Ok(TheoremReport::not_applicable(Theorem::ThmA4, "needs n ≥ 5"));
    }
    if counts.a(2)? != 3 || counts.a(3)? != 3 {
        return Ok(TheoremReport::not_applicable(
            Theorem::ThmA4,
            "needs a_2 = a_3 = 3",
        ));
    }
    Ok(match catalog.find(config) {
        Some((instance, isomorphism)) => TheoremReport {
            theorem: Theorem::ThmA4,
            applicable: true,
            holds: true,
            witness: Witness::Example {
                instance,
                isomorphism,
            },
        },
        None => TheoremReport {
            theorem: Theorem::ThmA4,
            applicable: true,
            holds: false,
            witness: Witness::Counterexample(String::from("not isomorphic to any listed example")),
        },
    })
}
