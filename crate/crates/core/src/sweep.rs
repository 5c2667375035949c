//! Runs invariant and theorem checks over configurations.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::classify::{self, Counts, ExampleCatalog, TheoremReport, Witness};
use crate::config::{ColorId, DistanceConfiguration};
use crate::enumerate::{for_each_config, EnumSpec};
use crate::error::{Error, Result};
use crate::isometry::{
    closed_by_cliques, closed_by_triangles, isometric_sequence, key_unchecked, m_set,
    triangle_types, ColorSet, ProfileVector, MAX_SUBSET_SIZE,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Profile symmetry, additivity over disjoint unions, and equal profiles
    /// of isometric subsets.
    ProfileLaws,
    /// Bounds on the number of distinct profiles by `a_k`.
    ProfileCounts,
    /// `M_k` by its subset definition equals `M_k` by degrees; monotone
    /// chain; matching and triangle-free characterizations.
    MajorSets,
    /// `|M_{k-1}| ≤ a_k`.
    MajorBound,
    /// Spanning forests of a color outside `M_{k-1}` have at most `a_k - 1`
    /// edges when `k² - k ≤ n`.
    ForestBound,
    /// Permutations moving only points with full color degree inside `S`
    /// preserve `S`.
    FullDegreeSwaps,
    /// Both closedness characterizations agree on every color set.
    Closedness,
    ThmA1,
    ThmA2,
    Thm3,
    Thm25,
    Cor40,
    ThmA4,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::ProfileLaws,
        Check::ProfileCounts,
        Check::MajorSets,
        Check::MajorBound,
        Check::ForestBound,
        Check::FullDegreeSwaps,
        Check::Closedness,
        Check::ThmA1,
        Check::ThmA2,
        Check::Thm3,
        Check::Thm25,
        Check::Cor40,
        Check::ThmA4,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Check::ProfileLaws => "lem:ST",
            Check::ProfileCounts => "lem:SS",
            Check::MajorSets => "lem:mk",
            Check::MajorBound => "lem:major",
            Check::ForestBound => "lem:bound",
            Check::FullDegreeSwaps => "lem:max",
            Check::Closedness => "lem:closed",
            Check::ThmA1 => "thm:a1",
            Check::ThmA2 => "thm:a2",
            Check::Thm3 => "thm:3",
            Check::Thm25 => "thm:25",
            Check::Cor40 => "cor:40",
            Check::ThmA4 => "thm:a4",
        }
    }

    /// Parses a comma separated list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        let mut out = BTreeSet::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Check::ALL);
            } else {
                out.insert(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::NoChecks);
        }
        Ok(out.into_iter().collect())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownCheck(String::from(s)))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CheckOutcome {
    Pass {
        /// Short classification of how it passed, tallied in the report.
        note: Option<String>,
    },
    NotApplicable,
    Fail(String),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
}

impl CheckTally {
    fn add(&mut self, other: &CheckTally) {
        self.passed += other.passed;
        self.failed += other.failed;
        self.not_applicable += other.not_applicable;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub config: DistanceConfiguration,
    pub check: Check,
    pub details: String,
}

impl Counterexample {
    fn sort_key(&self) -> (Check, usize, Vec<u16>, &str) {
        (
            self.check,
            self.config.n(),
            self.config.edges().iter().map(|c| c.0).collect(),
            &self.details,
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub total: usize,
    pub tallies: BTreeMap<Check, CheckTally>,
    /// Passing outcomes by `(check, note)`.
    pub notes: BTreeMap<(Check, String), usize>,
    /// Sorted by check, then configuration.
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn new(checks: &[Check]) -> Self {
        Self {
            tallies: checks.iter().map(|&c| (c, CheckTally::default())).collect(),
            ..Self::default()
        }
    }

    pub fn all_passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn record(&mut self, config: &DistanceConfiguration, check: Check, outcome: CheckOutcome) {
        let tally = self.tallies.entry(check).or_default();
        match outcome {
            CheckOutcome::Pass { note } => {
                tally.passed += 1;
                if let Some(note) = note {
                    *self.notes.entry((check, note)).or_default() += 1;
                }
            }
            CheckOutcome::NotApplicable => tally.not_applicable += 1,
            CheckOutcome::Fail(details) => {
                tally.failed += 1;
                let cx = Counterexample {
                    config: config.clone(),
                    check,
                    details,
                };
                let pos = self
                    .counterexamples
                    .partition_point(|c| c.sort_key() <= cx.sort_key());
                self.counterexamples.insert(pos, cx);
            }
        }
    }

    /// Combines two reports; the result does not depend on the order.
    pub fn merge(&mut self, other: SweepReport) {
        self.total += other.total;
        for (check, t) in &other.tallies {
            self.tallies.entry(*check).or_default().add(t);
        }
        for (key, count) in other.notes {
            *self.notes.entry(key).or_default() += count;
        }
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples
            .sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    }
}

/// Enumerates `spec` and runs `checks` on every configuration.
pub fn sweep(spec: &EnumSpec, checks: &[Check]) -> Result<SweepReport> {
    if checks.is_empty() {
        return Err(Error::NoChecks);
    }
    let mut ctx = SweepContext::new(checks);
    let mut report = SweepReport::new(checks);
    let mut err = None;
    for_each_config(spec, |c| {
        if err.is_some() {
            return;
        }
        if let Err(e) = ctx.run(&c, &mut report) {
            err = Some(e);
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

/// Runs `checks` on one configuration.
pub fn sweep_config(config: &DistanceConfiguration, checks: &[Check]) -> Result<SweepReport> {
    if checks.is_empty() {
        return Err(Error::NoChecks);
    }
    let mut report = SweepReport::new(checks);
    SweepContext::new(checks).run(config, &mut report)?;
    Ok(report)
}

/// Reusable state for running checks over many configurations.
#[derive(Debug)]
pub struct SweepContext {
    checks: Vec<Check>,
    catalogs: BTreeMap<usize, ExampleCatalog>,
}

impl SweepContext {
    pub fn new(checks: &[Check]) -> Self {
        let mut checks = checks.to_vec();
        checks.sort_unstable();
        checks.dedup();
        Self {
            checks,
            catalogs: BTreeMap::new(),
        }
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    /// Runs every check on `config` and records the outcomes.
    pub fn run(&mut self, config: &DistanceConfiguration, report: &mut SweepReport) -> Result<()> {
        let n = config.n();
        if n > MAX_SUBSET_SIZE {
            return Err(Error::SubsetSizeOutOfRange {
                k: n,
                max: MAX_SUBSET_SIZE,
            });
        }
        let seq = isometric_sequence(config)?.0;
        report.total += 1;
        for i in 0..self.checks.len() {
            let check = self.checks[i];
            let outcome = self.run_one(config, &seq, check)?;
            report.record(config, check, outcome);
        }
        Ok(())
    }

    fn run_one(
        &mut self,
        config: &DistanceConfiguration,
        seq: &[usize],
        check: Check,
    ) -> Result<CheckOutcome> {
        let mut counts = Counts::from_sequence(config, seq);
        let report = match check {
            Check::ProfileLaws => return Ok(profile_laws(config)),
            Check::ProfileCounts => return Ok(profile_counts(config, seq)),
            Check::MajorSets => return major_sets(config),
            Check::MajorBound => return major_bound(config, seq),
            Check::ForestBound => return forest_bound(config, seq),
            Check::FullDegreeSwaps => return Ok(full_degree_swaps(config)),
            Check::Closedness => return closedness(config),
            Check::ThmA1 => classify::thm_a1(&mut counts)?,
            Check::ThmA2 => classify::thm_a2(&mut counts)?,
            Check::Thm3 => classify::thm_3(&mut counts)?,
            Check::Thm25 => classify::thm_25(&mut counts)?,
            Check::Cor40 => classify::cor_40(&mut counts)?,
            Check::ThmA4 => {
                let catalog = self
                    .catalogs
                    .entry(config.n())
                    .or_insert_with(|| ExampleCatalog::new(config.n()));
                classify::thm_a4(&mut counts, catalog)?
            }
        };
        Ok(theorem_outcome(report))
    }
}

fn theorem_outcome(r: TheoremReport) -> CheckOutcome {
    if !r.applicable {
        return CheckOutcome::NotApplicable;
    }
    if !r.holds {
        let details = match r.witness {
            Witness::Counterexample(s) => s,
            other => format!("{other:?}"),
        };
        return CheckOutcome::Fail(details);
    }
    let note = match &r.witness {
        Witness::Shape { verdict, .. } => Some(String::from(verdict.shape.name())),
        Witness::Triangles { shape, .. } => Some(String::from(shape.name())),
        Witness::Example { instance, .. } => Some(String::from(match instance {
            classify::ExampleInstance::Example1 { .. } => "example1",
            classify::ExampleInstance::Example2 { .. } => "example2",
            classify::ExampleInstance::Example3 { .. } => "example3",
            classify::ExampleInstance::Example4 { .. } => "example4",
        })),
        _ => None,
    };
    CheckOutcome::Pass { note }
}

fn points_of(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

fn profile_of(config: &DistanceConfiguration, s: &[usize], t: &[usize]) -> ProfileVector {
    let mut counts = vec![0; config.color_count()];
    for &x in s {
        for &y in t {
            if x != y {
                counts[config.color(x, y).index()] += 1;
            }
        }
    }
    ProfileVector(counts)
}

fn fail(check: &str, msg: String) -> CheckOutcome {
    CheckOutcome::Fail(format!("{check}: {msg}"))
}

fn profile_laws(config: &DistanceConfiguration) -> CheckOutcome {
    let n = config.n();
    let full = (1u32 << n) - 1;
    let mut by_key: BTreeMap<Vec<u16>, ProfileVector> = BTreeMap::new();
    for mask in 1..=full {
        let s = points_of(mask, n);
        let rotated = ((mask << 1) | (mask >> (n - 1))) & full;
        let t = points_of(rotated, n);
        let st = profile_of(config, &s, &t);
        if st != profile_of(config, &t, &s) {
            return fail("symmetry", format!("S = {s:?}, T = {t:?}"));
        }
        let (s1, s2) = s.split_at(s.len() / 2);
        if st != &profile_of(config, s1, &t) + &profile_of(config, s2, &t) {
            return fail("additivity", format!("S = {s1:?} + {s2:?}, U = {t:?}"));
        }
        let ss = profile_of(config, &s, &s);
        let key = key_unchecked(config, &s);
        let mut tagged = key.key;
        tagged.insert(0, s.len() as u16);
        match by_key.get(&tagged) {
            Some(prev) if *prev != ss => return fail("isometric subsets", format!("S = {s:?}")),
            Some(_) => {}
            None => {
                by_key.insert(tagged, ss);
            }
        }
    }
    CheckOutcome::Pass { note: None }
}

fn profile_counts(config: &DistanceConfiguration, seq: &[usize]) -> CheckOutcome {
    let n = config.n();
    let full = (1u32 << n) - 1;
    let mut self_profiles: Vec<BTreeSet<ProfileVector>> = vec![BTreeSet::new(); n + 1];
    for mask in 1..=full {
        let s = points_of(mask, n);
        self_profiles[s.len()].insert(profile_of(config, &s, &s));
        // a (k-1)-subset bounds the point profiles by a_k
        if s.len() < n {
            let outside: BTreeSet<ProfileVector> = (0..n)
                .filter(|x| mask >> x & 1 == 0)
                .map(|x| profile_of(config, &[x], &s))
                .collect();
            if outside.len() > seq[s.len()] {
                return fail(
                    "point profiles",
                    format!("S = {s:?}: {} > a_{}", outside.len(), s.len() + 1),
                );
            }
        }
        // pigeonhole over S
        if mask != full {
            let rest = points_of(full & !mask, n);
            let cross = profile_of(config, &rest, &s);
            for c in config.color_ids() {
                let ok = s
                    .iter()
                    .any(|&y| profile_of(config, &rest, &[y]).get(c) * s.len() >= cross.get(c));
                if !ok {
                    return fail("pigeonhole", format!("S = {s:?}, color {}", c.index()));
                }
            }
        }
    }
    for k in 1..=n {
        if self_profiles[k].len() > seq[k - 1] {
            return fail(
                "subset profiles",
                format!("k = {k}: {} > a_k = {}", self_profiles[k].len(), seq[k - 1]),
            );
        }
    }
    CheckOutcome::Pass { note: None }
}

fn major_sets(config: &DistanceConfiguration) -> Result<CheckOutcome> {
    let n = config.n();
    let full = (1u32 << n) - 1;
    let all: ColorSet = config.color_ids().collect();
    let mut prev = all.clone();
    for k in 1..=n {
        let by_degree = m_set(config, k)?;
        let mut by_subsets = ColorSet::new();
        for mask in 1..full {
            let s = points_of(mask, n);
            let rest = points_of(full & !mask, n);
            let cross = profile_of(config, &rest, &s);
            by_subsets.extend(config.color_ids().filter(|&c| cross.get(c) >= k * s.len()));
        }
        if by_degree != by_subsets {
            return Ok(fail(
                "definitions",
                format!("k = {k}: {by_degree:?} vs {by_subsets:?}"),
            ));
        }
        if !by_degree.is_subset(&prev) {
            return Ok(fail(
                "monotone",
                format!("M_{k} not inside M_{}", k.saturating_sub(1)),
            ));
        }
        prev = by_degree;
    }
    if m_set(config, 1)? != all || !m_set(config, n)?.is_empty() {
        return Ok(fail(
            "ends",
            String::from("M_1 must be all colors and M_n empty"),
        ));
    }
    let m2 = if n >= 2 {
        m_set(config, 2)?
    } else {
        ColorSet::new()
    };
    let types = triangle_types(config);
    for c in config.color_ids() {
        let g = config.color_graph(c);
        if m2.contains(&c) == g.is_matching() {
            return Ok(fail("matching", format!("color {}", c.index())));
        }
        if types.contains(&[c, c, c]) == g.is_triangle_free() {
            return Ok(fail("triangle-free", format!("color {}", c.index())));
        }
    }
    Ok(CheckOutcome::Pass { note: None })
}

fn major_bound(config: &DistanceConfiguration, seq: &[usize]) -> Result<CheckOutcome> {
    for k in 2..=config.n() {
        let m = m_set(config, k - 1)?.len();
        if m > seq[k - 1] {
            return Ok(fail(
                "major",
                format!("|M_{}| = {m} > a_{k} = {}", k - 1, seq[k - 1]),
            ));
        }
    }
    Ok(CheckOutcome::Pass { note: None })
}

fn forest_bound(config: &DistanceConfiguration, seq: &[usize]) -> Result<CheckOutcome> {
    let n = config.n();
    let mut applied = false;
    for k in 2..=n {
        if k * k - k > n {
            break;
        }
        let m = m_set(config, k - 1)?;
        let ak = seq[k - 1];
        for gamma in config.color_ids().filter(|c| !m.contains(c)) {
            let mut bad = None;
            crate::isometry::for_each_subset(n, k, |s| {
                if bad.is_some() {
                    return;
                }
                applied = true;
                let edges = forest_edges(config, s, gamma);
                if edges + 1 > ak {
                    bad = Some(format!(
                        "k = {k}, S = {s:?}: forest with {edges} edges, a_k = {ak}"
                    ));
                }
            });
            if let Some(msg) = bad {
                return Ok(fail("forest", msg));
            }
        }
    }
    Ok(if applied {
        CheckOutcome::Pass { note: None }
    } else {
        CheckOutcome::NotApplicable
    })
}

/// Edges of a maximal spanning forest of color `gamma` inside `s`.
fn forest_edges(config: &DistanceConfiguration, s: &[usize], gamma: ColorId) -> usize {
    let mut root: Vec<usize> = (0..s.len()).collect();
    fn find(root: &mut [usize], mut x: usize) -> usize {
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    let mut edges = 0;
    for b in 1..s.len() {
        for a in 0..b {
            if config.color(s[a], s[b]) == gamma {
                let (ra, rb) = (find(&mut root, a), find(&mut root, b));
                if ra != rb {
                    root[ra] = rb;
                    edges += 1;
                }
            }
        }
    }
    edges
}

fn full_degree_swaps(config: &DistanceConfiguration) -> CheckOutcome {
    let n = config.n();
    for mask in 1u32..(1u32 << n) {
        let s = points_of(mask, n);
        let k = s.len();
        for c in config.color_ids() {
            let movable: Vec<usize> = s
                .iter()
                .copied()
                .filter(|&x| profile_of(config, &[x], &s).get(c) == k - 1)
                .collect();
            // transpositions generate every permutation of the movable points
            for (a, &x) in movable.iter().enumerate() {
                for &y in &movable[a + 1..] {
                    let swap = |z: usize| {
                        if z == x {
                            y
                        } else if z == y {
                            x
                        } else {
                            z
                        }
                    };
                    let preserved = s.iter().enumerate().all(|(i, &u)| {
                        s[i + 1..]
                            .iter()
                            .all(|&v| config.color(u, v) == config.color(swap(u), swap(v)))
                    });
                    if !preserved {
                        return fail(
                            "swap",
                            format!("S = {s:?}, color {}, swapping {x} and {y}", c.index()),
                        );
                    }
                }
            }
        }
    }
    CheckOutcome::Pass { note: None }
}

fn closedness(config: &DistanceConfiguration) -> Result<CheckOutcome> {
    let c = config.color_count();
    if c > 16 {
        return Ok(CheckOutcome::NotApplicable);
    }
    for mask in 1u32..(1u32 << c) {
        let gamma: ColorSet = (0..c)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| ColorId(i as u16))
            .collect();
        let a = closed_by_triangles(config, &gamma)?;
        let b = closed_by_cliques(config, &gamma)?;
        if a != b {
            return Ok(fail(
                "closed",
                format!("{gamma:?}: triangles say {a}, cliques say {b}"),
            ));
        }
    }
    Ok(CheckOutcome::Pass { note: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{construct_family, FamilySpec};

    #[test]
    fn parse_checks() {
        assert_eq!("lem:major".parse::<Check>().unwrap(), Check::MajorBound);
        assert_eq!(
            Check::parse_list("thm:25, lem:ST").unwrap(),
            vec![Check::ProfileLaws, Check::Thm25]
        );
        assert_eq!(Check::parse_list("all").unwrap().len(), 13);
        assert!(matches!(
            Check::parse_list("lem:nope"),
            Err(Error::UnknownCheck(_))
        ));
        assert!(matches!(Check::parse_list(""), Err(Error::NoChecks)));
        for c in Check::ALL {
            assert_eq!(c.id().parse::<Check>().unwrap(), c);
        }
    }

    #[test]
    fn families_pass_everything() {
        let specs = [
            FamilySpec::Pentagon,
            FamilySpec::Example1 { n: 8 },
            FamilySpec::Example4 { n: 6 },
            FamilySpec::CrossPolytope { m: 3 },
            FamilySpec::JohnsonJ52,
        ];
        for spec in specs {
            let c = construct_family(&spec).unwrap();
            let r = sweep_config(&c, &Check::ALL).unwrap();
            assert!(r.all_passed(), "{spec:?}: {:?}", r.counterexamples);
            assert_eq!(r.total, 1);
        }
    }

    #[test]
    fn detects_a_false_closedness_claim() {
        // a 5-cycle color is not closed; both characterizations agree on that
        let p = construct_family(&FamilySpec::Pentagon).unwrap();
        let gamma: ColorSet = [ColorId(0)].into_iter().collect();
        assert!(!closed_by_triangles(&p, &gamma).unwrap());
        assert!(!closed_by_cliques(&p, &gamma).unwrap());
    }

    #[test]
    fn merge_is_order_independent() {
        let checks = [Check::Thm3, Check::Closedness];
        let a = sweep(&EnumSpec::exact(4, 2), &checks).unwrap();
        let b = sweep(&EnumSpec::exact(5, 2), &checks).unwrap();
        let mut ab = a.clone();
        ab.merge(b.clone());
        let mut ba = b;
        ba.merge(a);
        assert_eq!(ab, ba);
    }

    #[test]
    fn failures_become_counterexamples() {
        let c = construct_family(&FamilySpec::Pentagon).unwrap();
        let mut r = SweepReport::new(&[Check::Thm3]);
        r.record(&c, Check::Thm3, CheckOutcome::Fail(String::from("forced")));
        assert!(!r.all_passed());
        assert_eq!(r.tallies[&Check::Thm3].failed, 1);
    }

    #[test]
    fn theorem_sweeps_small() {
        let r = sweep(&EnumSpec::exact(5, 2), &[Check::Thm25]).unwrap();
        assert!(r.all_passed(), "{:?}", r.counterexamples);
        assert!(r.tallies[&Check::Thm25].passed > 0);
        let r = sweep(&EnumSpec::up_to(5, 3), &[Check::MajorBound]).unwrap();
        assert!(r.all_passed());
    }
}
