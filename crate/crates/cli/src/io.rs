//! File formats: configuration / realization JSON, point set JSON, CSV
//! distance matrices.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use isoseq_core::{
    from_distance_matrix, from_points, ColorId, DistanceConfiguration, MetricRealization, PointSet,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigJson {
    pub n: usize,
    pub colors: Vec<String>,
    /// `[i, j, color index]`.
    pub edges: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<BTreeMap<String, f64>>,
}

impl ConfigJson {
    pub fn from_config(config: &DistanceConfiguration) -> Self {
        Self {
            n: config.n(),
            colors: config.color_names().to_vec(),
            edges: config.pairs().map(|(i, j, c)| [i, j, c.index()]).collect(),
            values: None,
        }
    }

    pub fn from_realization(real: &MetricRealization) -> Self {
        let mut out = Self::from_config(real.config());
        out.values = Some(
            real.config()
                .color_ids()
                .map(|c| (real.config().color_name(c).to_string(), real.value(c)))
                .collect(),
        );
        out
    }

    pub fn to_config(&self) -> Result<DistanceConfiguration> {
        if self.n == 0 {
            bail!("configuration has no points");
        }
        let m = self.n * (self.n - 1) / 2;
        let mut slots: Vec<Option<ColorId>> = vec![None; m];
        for &[i, j, c] in &self.edges {
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            if a == b || b >= self.n {
                bail!(
                    "edge ({i}, {j}) is not a pair of distinct points below n = {}",
                    self.n
                );
            }
            if c >= self.colors.len() {
                bail!(
                    "edge ({i}, {j}) uses color index {c}, but only {} colors are listed",
                    self.colors.len()
                );
            }
            let slot = &mut slots[b * (b - 1) / 2 + a];
            if slot.is_some() {
                bail!("pair ({a}, {b}) listed twice");
            }
            *slot = Some(ColorId(c as u16));
        }
        let mut edges = Vec::with_capacity(m);
        for (idx, s) in slots.into_iter().enumerate() {
            match s {
                Some(c) => edges.push(c),
                None => {
                    let b = (1..self.n).find(|&b| b * (b + 1) / 2 > idx).unwrap_or(1);
                    bail!("pair ({}, {b}) has no color", idx - b * (b - 1) / 2);
                }
            }
        }
        Ok(DistanceConfiguration::from_parts(
            self.n,
            self.colors.clone(),
            edges,
        )?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSetJson {
    pub dim: usize,
    pub points: Vec<Vec<f64>>,
}

impl PointSetJson {
    pub fn from_points(p: &PointSet) -> Self {
        Self {
            dim: p.dim(),
            points: p.points().to_vec(),
        }
    }

    pub fn to_points(&self) -> Result<PointSet> {
        Ok(PointSet::new(self.dim, self.points.clone())?)
    }
}

/// What an input file holds.
#[derive(Clone, Debug)]
pub enum Input {
    Config {
        config: DistanceConfiguration,
        values: Option<BTreeMap<String, f64>>,
    },
    Realization(MetricRealization),
}

impl Input {
    pub fn config(&self) -> &DistanceConfiguration {
        match self {
            Input::Config { config, .. } => config,
            Input::Realization(r) => r.config(),
        }
    }
}

/// Reads a configuration JSON (with optional values), a point set JSON, or
/// a CSV distance matrix (by `.csv` extension). Point sets and matrices
/// are grouped into distances with `tol`.
pub fn load_input(path: &Path, tol: f64) -> Result<Input> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_csv = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    parse_input(&text, is_csv, tol).with_context(|| format!("parsing {}", path.display()))
}

pub fn parse_input(text: &str, is_csv: bool, tol: f64) -> Result<Input> {
    if is_csv {
        let (n, m) = parse_csv_matrix(text)?;
        return Ok(Input::Realization(from_distance_matrix(n, &m, tol)?));
    }
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("points").is_some() {
        let p: PointSetJson = serde_json::from_value(value)?;
        return Ok(Input::Realization(from_points(&p.to_points()?, tol)?));
    }
    let c: ConfigJson = serde_json::from_value(value)?;
    Ok(Input::Config {
        config: c.to_config()?,
        values: c.values,
    })
}

/// `n` rows of `n` comma separated numbers.
pub fn parse_csv_matrix(text: &str) -> Result<(usize, Vec<f64>)> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (r, record) in reader.records().enumerate() {
        let record = record?;
        let row = record
            .iter()
            .enumerate()
            .map(|(c, f)| {
                f.parse::<f64>()
                    .with_context(|| format!("row {}, column {}: `{f}`", r + 1, c + 1))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 {
        bail!("empty distance matrix");
    }
    if let Some((r, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != n) {
        bail!("row {} has {} entries, expected {n}", r + 1, row.len());
    }
    Ok((n, rows.into_iter().flatten().collect()))
}

pub fn points_csv(p: &PointSet) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in p.points() {
        w.write_record(row.iter().map(|x| crate::report::format_float(*x)))
            .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is utf-8")
}

/// `name=value,name=value`.
pub fn parse_values(s: &str) -> Result<BTreeMap<String, f64>> {
    let mut out = BTreeMap::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let Some((k, v)) = part.split_once('=') else {
            bail!("expected name=value, got `{part}`");
        };
        let v: f64 = v
            .trim()
            .parse()
            .with_context(|| format!("value for `{k}`"))?;
        if out.insert(k.trim().to_string(), v).is_some() {
            bail!("value for `{k}` given twice");
        }
    }
    Ok(out)
}

/// `0,1,2:3,4` into two index lists.
pub fn parse_split(s: &str) -> Result<(Vec<usize>, Vec<usize>)> {
    let Some((a, b)) = s.split_once(':') else {
        bail!("expected a split like 0,1:2,3");
    };
    let list = |x: &str| -> Result<Vec<usize>> {
        x.split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| Ok(p.parse()?))
            .collect()
    };
    Ok((list(a)?, list(b)?))
}

/// `0-1,1-2` into pairs.
pub fn parse_edges(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (a, b) = p
                .split_once('-')
                .with_context(|| format!("expected i-j, got `{p}`"))?;
            Ok((a.trim().parse()?, b.trim().parse()?))
        })
        .collect()
}
