//! Argument parsing and verb dispatch.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use isoseq_core::{
    check_embedding, class_representatives, construct_family, coordinates, embeddability, f_table,
    isometric_sequence, ns_bound, realize, search_min_dim, sweep_config, Check,
    DistanceConfiguration, EmbeddingKind, EnumSpec, FamilySpec, MetricRealization, SweepReport,
    DEFAULT_EIGEN_TOL, DEFAULT_GROUPING_TOL,
};
use serde_json::{json, Value};

use crate::io::{self, ConfigJson, Input};
use crate::parallel::{parallel_enumerate, parallel_sweep, resolve_jobs};
use crate::report;

#[derive(Debug, Parser)]
#[command(
    name = "isoseq",
    version,
    about = "Isometric sequences of finite metric spaces"
)]
pub struct Cli {
    /// Print aligned text tables instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Worker threads for enumeration sweeps (ISOSEQ_JOBS overrides).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Isometric sequence (a_1, ..., a_n) of a configuration.
    Seq {
        input: PathBuf,
        /// Print a JSON array instead of space separated numbers.
        #[arg(long)]
        json: bool,
        /// Relative tolerance for grouping distances of point sets and CSV
        /// matrices.
        #[arg(long, default_value_t = DEFAULT_GROUPING_TOL)]
        group_tol: f64,
    },
    /// Isometry classes of k-subsets with representatives.
    Classes {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_GROUPING_TOL)]
        group_tol: f64,
    },
    /// Euclidean embeddability and least dimension of a realization.
    Embed(EmbedArgs),
    /// Emit a named configuration, or with --points a generated point set
    /// and its self-check.
    Construct(ConstructArgs),
    /// Enumerate all configurations up to isomorphism.
    Enumerate(EnumArgs),
    /// Run invariant and theorem checks on an input or on an enumeration.
    Verify(VerifyArgs),
    /// Lower-bound witnesses for the largest sets with a_3 = t in R^m.
    Ftable {
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct EmbedArgs {
    pub input: PathBuf,
    /// Distance per color, e.g. `a=2,b=1`; overrides values in the file.
    #[arg(long)]
    pub values: Option<String>,
    /// Treat --values as squared distances.
    #[arg(long)]
    pub squared: bool,
    /// Relative eigenvalue tolerance.
    #[arg(long, default_value_t = DEFAULT_EIGEN_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = DEFAULT_GROUPING_TOL)]
    pub group_tol: f64,
    /// Include coordinates in R^{m_X}.
    #[arg(long)]
    pub coords: bool,
    /// Also write the coordinates as CSV to this file.
    #[arg(long)]
    pub coords_csv: Option<PathBuf>,
    /// Split `A:B` (e.g. `0,1:2,3`) with constant cross distance; reports
    /// the lower bound m_A + m_B.
    #[arg(long)]
    pub split: Option<String>,
    /// Scan distance values on a grid of this resolution for the least
    /// dimension (at most 3 colors).
    #[arg(long)]
    pub search: Option<usize>,
}

#[derive(Debug, Args, Default)]
pub struct Params {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub left: Option<usize>,
    #[arg(long)]
    pub right: Option<usize>,
    #[arg(long)]
    pub y: Option<usize>,
    #[arg(long)]
    pub z: Option<usize>,
    #[arg(long)]
    pub g: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub free: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    /// Graph edges for graph_metric, e.g. `0-1,1-2`.
    #[arg(long)]
    pub edges: Option<String>,
    /// Cross-pair scale `c` for cross_pairs.
    #[arg(long)]
    pub c: Option<f64>,
    /// Second-block shift `t` for cross_pairs.
    #[arg(long)]
    pub t: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Family or generator name.
    pub name: String,
    #[command(flatten)]
    pub params: Params,
    /// Attach distance values, e.g. `alpha=1,beta=1.5`.
    #[arg(long)]
    pub values: Option<String>,
    /// Generate coordinates and check them against the intended
    /// configuration.
    #[arg(long)]
    pub points: bool,
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    #[arg(long)]
    pub n: Option<usize>,
    /// Exact number of colors.
    #[arg(long, conflicts_with = "max_colors")]
    pub colors: Option<usize>,
    /// Maximum number of colors.
    #[arg(long)]
    pub max_colors: Option<usize>,
}

impl SpecArgs {
    fn spec(&self) -> Result<EnumSpec> {
        let n = self.n.ok_or_else(|| anyhow!("--n is required"))?;
        let spec = match (self.colors, self.max_colors) {
            (Some(c), _) => EnumSpec::exact(n, c),
            (None, Some(c)) => EnumSpec::up_to(n, c),
            (None, None) => bail!("one of --colors or --max-colors is required"),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Run these checks (comma separated, or `all`) and print a sweep
    /// report instead of the configurations.
    #[arg(long)]
    pub checks: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Configuration to check; without it, every enumerated configuration
    /// is checked.
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Comma separated check ids, or `all`.
    #[arg(long, default_value = "all")]
    pub checks: String,
    #[arg(long, default_value_t = DEFAULT_GROUPING_TOL)]
    pub group_tol: f64,
}

/// Result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    /// 0 success, 1 a check failed.
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self { code: 0, output }
    }
}

fn render(v: &Value, pretty: bool) -> String {
    if pretty {
        report::pretty(v)
    } else {
        let mut s = report::to_json_string(v);
        s.push('\n');
        s
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Seq {
            input,
            json,
            group_tol,
        } => {
            let inp = io::load_input(input, *group_tol)?;
            let seq = isometric_sequence(inp.config())?;
            Ok(Outcome::ok(if *json || pretty {
                render(&json!(seq.0), pretty)
            } else {
                format!("{seq}\n")
            }))
        }
        Command::Classes {
            input,
            k,
            group_tol,
        } => {
            let inp = io::load_input(input, *group_tol)?;
            let classes = class_representatives(inp.config(), *k)?;
            Ok(Outcome::ok(render(
                &report::classes_value(*k, &classes),
                pretty,
            )))
        }
        Command::Embed(args) => embed(args, pretty),
        Command::Construct(args) => construct(args, pretty),
        Command::Enumerate(args) => {
            let spec = args.spec.spec()?;
            let jobs = resolve_jobs(cli.jobs)?;
            match &args.checks {
                Some(list) => sweep_outcome(
                    parallel_sweep(&spec, &Check::parse_list(list)?, jobs)?,
                    pretty,
                ),
                None => {
                    let all = parallel_enumerate(&spec, jobs)?;
                    let v = json!({
                        "total": all.len(),
                        "configurations": all.iter().map(report::config_value).collect::<Vec<_>>(),
                    });
                    Ok(Outcome::ok(render(&v, pretty)))
                }
            }
        }
        Command::Verify(args) => {
            let checks = Check::parse_list(&args.checks)?;
            match &args.input {
                Some(path) => {
                    let inp = io::load_input(path, args.group_tol)?;
                    verify_one(inp.config(), &checks, pretty)
                }
                None => {
                    let spec = args.spec.spec()?;
                    sweep_outcome(
                        parallel_sweep(&spec, &checks, resolve_jobs(cli.jobs)?)?,
                        pretty,
                    )
                }
            }
        }
        Command::Ftable { m, t } => {
            let rows: Vec<(usize, usize)> = match (m, t) {
                (Some(m), Some(t)) => vec![(*m, *t)],
                (None, None) => {
                    let mut r = vec![(2, 2), (3, 2), (4, 2), (5, 2)];
                    r.extend([(2, 3), (3, 3), (4, 3), (5, 3)]);
                    r
                }
                _ => bail!("give both --m and --t, or neither"),
            };
            let entries = rows
                .iter()
                .map(|&(m, t)| f_table(m, t))
                .collect::<isoseq_core::Result<Vec<_>>>()?;
            let holds = entries.iter().all(|e| e.holds());
            let v = if entries.len() == 1 {
                report::ftable_value(&entries[0])
            } else {
                Value::Array(entries.iter().map(report::ftable_value).collect())
            };
            Ok(Outcome {
                code: if holds { 0 } else { 1 },
                output: render(&v, pretty),
            })
        }
    }
}

fn sweep_outcome(r: SweepReport, pretty: bool) -> Result<Outcome> {
    Ok(Outcome {
        code: if r.all_passed() { 0 } else { 1 },
        output: render(&report::sweep_value(&r), pretty),
    })
}

fn verify_one(config: &DistanceConfiguration, checks: &[Check], pretty: bool) -> Result<Outcome> {
    let sweep = sweep_config(config, checks)?;
    let mut theorems = Vec::new();
    for c in checks {
        let r = match c {
            Check::ThmA1 => isoseq_core::verify_thm_a1(config)?,
            Check::ThmA2 => isoseq_core::verify_thm_a2(config)?,
            Check::Thm3 => isoseq_core::verify_thm_3(config)?,
            Check::Thm25 => isoseq_core::classify_a3_eq_2(config)?,
            Check::Cor40 => isoseq_core::classify_a3(config)?,
            Check::ThmA4 => isoseq_core::verify_thm_a4(config)?,
            _ => continue,
        };
        theorems.push(report::theorem_value(&r));
    }
    let mut v = report::sweep_value(&sweep);
    v.as_object_mut()
        .expect("object")
        .insert("theorems".into(), Value::Array(theorems));
    Ok(Outcome {
        code: if sweep.all_passed() { 0 } else { 1 },
        output: render(&v, pretty),
    })
}

fn realization(inp: Input, values: Option<&str>, squared: bool) -> Result<MetricRealization> {
    let mut given: Option<BTreeMap<String, f64>> = values.map(io::parse_values).transpose()?;
    if squared {
        let g = given
            .as_mut()
            .ok_or_else(|| anyhow!("--squared needs --values"))?;
        for (k, v) in g.iter_mut() {
            if *v <= 0.0 {
                bail!("squared distance for `{k}` must be positive");
            }
            *v = v.sqrt();
        }
    }
    match inp {
        Input::Config {
            config,
            values: file_values,
        } => {
            let merged = match (file_values, given) {
                (Some(mut f), Some(g)) => {
                    f.extend(g);
                    Some(f)
                }
                (f, g) => g.or(f),
            };
            if let Some(m) = &merged {
                if let Some(unknown) = m.keys().find(|k| config.color_by_name(k).is_none()) {
                    bail!(isoseq_core::Error::UnknownColor(unknown.clone()));
                }
            }
            Ok(realize(config, merged.as_ref())?)
        }
        Input::Realization(r) => match given {
            None => Ok(r),
            Some(g) => {
                let mut vals = BTreeMap::new();
                for c in r.config().color_ids() {
                    vals.insert(r.config().color_name(c).to_string(), r.value(c));
                }
                if let Some(unknown) = g.keys().find(|k| !vals.contains_key(*k)) {
                    bail!(isoseq_core::Error::UnknownColor(unknown.clone()));
                }
                vals.extend(g);
                Ok(realize(r.into_config(), Some(&vals))?)
            }
        },
    }
}

fn embed(args: &EmbedArgs, pretty: bool) -> Result<Outcome> {
    let inp = io::load_input(&args.input, args.group_tol)?;
    let real = realization(inp, args.values.as_deref(), args.squared)?;
    let rep = embeddability(&real, args.tol);
    let mut v = report::embed_value(&rep);
    let obj = v.as_object_mut().expect("object");
    let values: serde_json::Map<String, Value> = real
        .config()
        .color_ids()
        .map(|c| {
            (
                real.config().color_name(c).to_string(),
                report::num(real.value(c)),
            )
        })
        .collect();
    obj.insert("values".into(), Value::Object(values));
    if args.coords || args.coords_csv.is_some() {
        let pts = coordinates(&real, args.tol)?;
        if let Some(path) = &args.coords_csv {
            fs::write(path, io::points_csv(&pts))
                .with_context(|| format!("writing {}", path.display()))?;
        }
        if args.coords {
            obj.insert("coordinates".into(), report::points_value(&pts));
        }
    }
    if let Some(split) = &args.split {
        let (a, b) = io::parse_split(split)?;
        obj.insert("ns_bound".into(), json!(ns_bound(&real, &a, &b)?));
    }
    if let Some(res) = args.search {
        let s = search_min_dim(real.config(), res, args.tol)?;
        obj.insert("search".into(), report::search_value(&s));
    }
    Ok(Outcome::ok(render(&v, pretty)))
}

fn need(v: Option<usize>, name: &str) -> Result<usize> {
    v.ok_or_else(|| anyhow!("--{name} is required"))
}

pub fn family_from(name: &str, p: &Params) -> Result<FamilySpec> {
    Ok(match name {
        "complete" => FamilySpec::Complete { n: need(p.n, "n")? },
        "complete_bipartite" => FamilySpec::CompleteBipartite {
            left: need(p.left, "left")?,
            right: need(p.right, "right")?,
        },
        "star" => FamilySpec::Star { n: need(p.n, "n")? },
        "matching_complement" => FamilySpec::MatchingComplement {
            n: need(p.n, "n")?,
            m: need(p.m, "m")?,
        },
        "pentagon" => FamilySpec::Pentagon,
        "kn_minus_k2" => FamilySpec::KnMinusK2 { n: need(p.n, "n")? },
        "graph_metric" => FamilySpec::GraphMetric {
            n: need(p.n, "n")?,
            edges: io::parse_edges(
                p.edges
                    .as_deref()
                    .ok_or_else(|| anyhow!("--edges is required"))?,
            )?,
        },
        "example1" => FamilySpec::Example1 { n: need(p.n, "n")? },
        "example2" => FamilySpec::Example2 {
            y: need(p.y, "y")?,
            z: need(p.z, "z")?,
            g: need(p.g, "g")?,
        },
        "example3" => FamilySpec::Example3 {
            p: need(p.p, "p")?,
            q: need(p.q, "q")?,
            free: p.free.unwrap_or(0),
        },
        "example4" => FamilySpec::Example4 { n: need(p.n, "n")? },
        "cross_polytope" => FamilySpec::CrossPolytope { m: need(p.m, "m")? },
        "cube" => FamilySpec::Cube { d: need(p.d, "d")? },
        "half_cube5" => FamilySpec::HalfCube5,
        "johnson_j52" | "johnson_J52" => FamilySpec::JohnsonJ52,
        "discrete" => FamilySpec::Discrete { n: need(p.n, "n")? },
        other => bail!("unknown family `{other}`"),
    })
}

pub fn generator_from(name: &str, p: &Params) -> Result<EmbeddingKind> {
    Ok(match name {
        "simplex" => EmbeddingKind::Simplex { n: need(p.n, "n")? },
        "bipartite_simplices" => EmbeddingKind::BipartiteSimplices {
            m: need(p.m, "m")?,
            n: need(p.n, "n")?,
        },
        "one_edge" => EmbeddingKind::OneEdge { n: need(p.n, "n")? },
        "matching_complement" => EmbeddingKind::MatchingComplement {
            n: need(p.n, "n")?,
            m: need(p.m, "m")?,
        },
        "pentagon" => EmbeddingKind::Pentagon,
        "two_squares" => EmbeddingKind::TwoSquares,
        "antipodal_simplices" => EmbeddingKind::AntipodalSimplices { m: need(p.m, "m")? },
        "cross_pairs" => EmbeddingKind::CrossPairs {
            p: need(p.p, "p")?,
            q: need(p.q, "q")?,
            c: p.c.ok_or_else(|| anyhow!("--c is required"))?,
            t: p.t,
        },
        "simplex_plus_segment" => EmbeddingKind::SimplexPlusSegment { n: need(p.n, "n")? },
        "circle" => EmbeddingKind::Circle { m: need(p.m, "m")? },
        "half_cube5" => EmbeddingKind::HalfCube5,
        "johnson_j52" | "johnson_J52" => EmbeddingKind::JohnsonJ52,
        other => bail!("unknown generator `{other}`"),
    })
}

fn construct(args: &ConstructArgs, pretty: bool) -> Result<Outcome> {
    if args.points {
        let kind = generator_from(&args.name, &args.params)?;
        let check = check_embedding(&kind)?;
        let code = if check.passed() { 0 } else { 1 };
        return Ok(Outcome {
            code,
            output: render(&report::embedding_check_value(&check), pretty),
        });
    }
    let config = construct_family(&family_from(&args.name, &args.params)?)?;
    let j = match &args.values {
        Some(v) => ConfigJson::from_realization(&realize(config, Some(&io::parse_values(v)?))?),
        None => ConfigJson::from_config(&config),
    };
    let mut v = serde_json::to_value(j)?;
    if let Some(vals) = v.get_mut("values").and_then(Value::as_object_mut) {
        for x in vals.values_mut() {
            *x = report::num(x.as_f64().unwrap_or(f64::NAN));
        }
    }
    Ok(Outcome::ok(render(&v, pretty)))
}
