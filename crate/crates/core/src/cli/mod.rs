//! Command-line front end. Every command builds one JSON document holding
//! its result and a check report; the exit code is 0 when every check
//! passes, 1 when one fails and 2 when the input is rejected.

pub mod render;

use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chaos::{
    dense_orbit_check, dense_orbit_word, make_system, periodic_point, realize_witness, sensitivity_check,
    transitivity_check, ChaosError, ChaosKind,
};
use crate::embed::{PeanoModel, RefinementTree};
use crate::fintop::{
    decomposition_topology, is_continuous, is_topology, sweep_report, verify_lemma7, verify_prop5, FiniteMap,
    FiniteTopSpace, Partition,
};
use crate::geometry::{Address, Point, Rational};
use crate::report::CheckReport;
use crate::surject::{
    block_surjection, check_cover, verify_block_surjection, CantorMap, ClopenBlock, WaypointMap, WaypointTarget,
};

pub use render::{flatten, render, summary};

pub const MAX_DEPTH_ENV: &str = "PRIMCHAOS_MAX_DEPTH";
pub const DEFAULT_MAX_DEPTH: usize = 12;

const CSV_HELP: &str = "\
Output: one document per run, to stdout or to --out (then a short summary
goes to stdout). --format csv flattens the JSON document into rows with
columns `path,value`: path joins object keys and array indices with '.',
value is the leaf text (rationals stay exact p/q). --decimal N adds an
`approx_decimal` column (CSV) or object (JSON) with truncated decimals;
those values are approximate and for plotting only.

Exit codes: 0 all checks pass, 1 a check failed, 2 input rejected.
Environment: PRIMCHAOS_MAX_DEPTH caps `embed --depth` (default 12).";

#[derive(Debug, Parser)]
#[command(name = "primchaos", version, about = "Exact Cantor-set, quotient and chaos-witness constructions", after_help = CSV_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Document encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Add truncated decimals with this many digits (approximate).
    #[arg(long, global = true, value_name = "N")]
    pub decimal: Option<usize>,
    /// Write the document here and print only a summary.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the nested Cantor refinement tree inside a continuum model.
    Embed(EmbedArgs),
    /// Primitive-chaos witnesses and certificates.
    #[command(subcommand)]
    Chaos(ChaosCommand),
    /// Continuous surjections from the Cantor set.
    Surject(SurjectArgs),
    /// Finite topological spaces and decomposition spaces.
    #[command(subcommand)]
    Fintop(FintopCommand),
}

#[derive(Debug, Args)]
pub struct EmbedArgs {
    #[arg(long, value_parser = parse_model)]
    pub model: PeanoModel,
    #[arg(long, allow_negative_numbers = true)]
    pub depth: usize,
}

fn parse_model(s: &str) -> Result<PeanoModel, String> {
    s.parse().map_err(|e: crate::embed::EmbedError| e.to_string())
}

fn parse_system(s: &str) -> Result<ChaosKind, String> {
    s.parse().map_err(|e: ChaosError| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum ChaosCommand {
    /// Initial point whose orbit follows a finite word.
    Realize {
        #[arg(long, value_parser = parse_system)]
        system: ChaosKind,
        #[arg(long)]
        word: String,
    },
    /// Exact periodic point with the word as its repeating itinerary.
    Periodic {
        #[arg(long, value_parser = parse_system)]
        system: ChaosKind,
        #[arg(long)]
        word: String,
    },
    /// Witness for the concatenation of all words up to a depth.
    Dense {
        #[arg(long, value_parser = parse_system)]
        system: ChaosKind,
        #[arg(long)]
        depth: usize,
    },
    /// Separation by 1/4 from perturbations within delta.
    Sensitivity {
        #[arg(long, value_parser = parse_system)]
        system: ChaosKind,
        #[arg(long)]
        delta: Rational,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Connections between every ordered pair of cells at a depth.
    Transitivity {
        #[arg(long, value_parser = parse_system)]
        system: ChaosKind,
        #[arg(long)]
        depth: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SurjectKind {
    Binary,
    Interleave,
    Block,
    Waypoint,
}

#[derive(Debug, Args)]
pub struct SurjectArgs {
    #[arg(long, value_enum)]
    pub kind: SurjectKind,
    /// Address depth (binary, interleave, block) or enclosure depth (waypoint).
    #[arg(long, default_value_t = 8)]
    pub depth: usize,
    /// Block kind: A = {0, 1}, B = {1, 0}.
    #[arg(long, conflicts_with_all = ["domain_blocks", "target_blocks"])]
    pub swap_halves: bool,
    /// Block kind: domain blocks separated by ';', cylinders by ',' (e.g. `00;1`).
    #[arg(long, requires = "target_blocks")]
    pub domain_blocks: Option<String>,
    /// Block kind: target blocks, same syntax; `*` is the whole space.
    #[arg(long, requires = "domain_blocks")]
    pub target_blocks: Option<String>,
    /// Waypoint kind: interval or square.
    #[arg(long, value_parser = parse_target)]
    pub target: Option<WaypointTarget>,
    /// Waypoint kind: `x=y` or `x=y1,y2`, repeatable, increasing in x.
    #[arg(long = "point")]
    pub points: Vec<String>,
}

fn parse_target(s: &str) -> Result<WaypointTarget, String> {
    s.parse()
}

#[derive(Debug, Subcommand)]
pub enum FintopCommand {
    /// Decomposition space of a partition (`ab|c`).
    Quotient {
        #[arg(long, default_value = "chain3")]
        space: String,
        #[arg(long)]
        blocks: String,
    },
    /// Representative subspace versus decomposition space.
    #[command(name = "verify-prop5")]
    VerifyProp5 {
        #[arg(long)]
        space: String,
        #[arg(long)]
        blocks: String,
        /// One representative label per block, comma-separated, in block order.
        #[arg(long)]
        reps: String,
    },
    /// Fiber decomposition of a map versus its codomain.
    #[command(name = "verify-lemma7")]
    VerifyLemma7 {
        #[arg(long)]
        space: String,
        #[arg(long)]
        codomain: String,
        /// `a=x,b=y,...` from domain labels to codomain labels.
        #[arg(long)]
        map: String,
    },
    /// Exhaustive suites over all small spaces.
    Sweep {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=5))]
        points: u8,
    },
}

/// Result of a command: the full document and the report that decides the
/// exit code.
pub struct Outcome {
    pub document: Value,
    pub report: CheckReport,
}

/// Input rejected before any check ran.
#[derive(Debug)]
pub struct InputError(pub anyhow::Error);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, InputError> {
    let outcome = match &cli.command {
        Command::Embed(a) => cmd_embed(a),
        Command::Chaos(c) => cmd_chaos(c),
        Command::Surject(a) => cmd_surject(a),
        Command::Fintop(c) => cmd_fintop(c),
    };
    outcome.map_err(InputError)
}

fn finish(command: &str, payload: Vec<(&str, Value)>, report: CheckReport) -> Result<Outcome> {
    let mut doc = serde_json::Map::new();
    doc.insert("command".into(), Value::String(command.into()));
    for (k, v) in payload {
        doc.insert(k.into(), v);
    }
    doc.insert("report".into(), serde_json::to_value(&report)?);
    Ok(Outcome {
        document: Value::Object(doc),
        report,
    })
}

fn max_depth() -> Result<usize> {
    match std::env::var(MAX_DEPTH_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{MAX_DEPTH_ENV}={v:?} is not a depth")),
        Err(_) => Ok(DEFAULT_MAX_DEPTH),
    }
}

fn cmd_embed(a: &EmbedArgs) -> Result<Outcome> {
    let cap = max_depth()?;
    if a.depth > cap {
        bail!(
            "depth {} exceeds the cap {cap} (set {MAX_DEPTH_ENV} to raise it)",
            a.depth
        );
    }
    let tree = RefinementTree::build(a.model, a.depth)?;
    let mut report = tree.check_all_levels();
    report.instance = format!("embed model={} depth={}", a.model, a.depth);
    finish(
        "embed",
        vec![
            ("leaves", json!(tree.level(a.depth).count())),
            ("tree", serde_json::to_value(&tree)?),
        ],
        report,
    )
}

fn parse_word(word: &str) -> Result<Address> {
    Address::parse_with_arity(word, 2).with_context(|| format!("bad word {word:?}"))
}

fn cmd_chaos(c: &ChaosCommand) -> Result<Outcome> {
    match c {
        ChaosCommand::Realize { system, word } => {
            let s = make_system(*system);
            let w = parse_word(word)?;
            if w.is_empty() {
                bail!(ChaosError::EmptyWord);
            }
            let mut report = CheckReport::new(format!("chaos realize system={system} word={w}"));
            match realize_witness(&s, &w) {
                Ok(res) => {
                    report.push(
                        "witness_in_enclosure",
                        res.enclosure.contains_point(&res.witness),
                        format!("{:?} in {:?}", res.witness, res.enclosure),
                    );
                    report.push(
                        "orbit_membership",
                        s.follows(&res.orbit, &w),
                        format!("orbit[i] in event w[i] for i < {}", w.len()),
                    );
                    finish("chaos realize", vec![("result", serde_json::to_value(&res)?)], report)
                }
                Err(e) => {
                    report.push("realize", false, e.to_string());
                    finish("chaos realize", vec![], report)
                }
            }
        }
        ChaosCommand::Periodic { system, word } => {
            let s = make_system(*system);
            let w = parse_word(word)?;
            if w.is_empty() {
                bail!(ChaosError::EmptyWord);
            }
            match periodic_point(&s, &w) {
                Ok(res) => {
                    let report = res.certificate.clone();
                    finish("chaos periodic", vec![("result", serde_json::to_value(&res)?)], report)
                }
                Err(e) => {
                    let mut report = CheckReport::new(format!("chaos periodic system={system} word={w}"));
                    report.push("fixed_point", false, e.to_string());
                    finish("chaos periodic", vec![], report)
                }
            }
        }
        ChaosCommand::Dense { system, depth } => {
            let s = make_system(*system);
            let word = dense_orbit_word(*depth)?;
            let witness = realize_witness(&s, &word)?;
            let report = dense_orbit_check(&s, *depth)?;
            finish(
                "chaos dense",
                vec![
                    ("word", json!(word.to_string())),
                    ("witness", serde_json::to_value(&witness.witness)?),
                ],
                report,
            )
        }
        ChaosCommand::Sensitivity { system, delta, samples } => {
            let report = sensitivity_check(&make_system(*system), delta, *samples)?;
            finish("chaos sensitivity", vec![], report)
        }
        ChaosCommand::Transitivity { system, depth } => {
            let report = transitivity_check(&make_system(*system), *depth)?;
            finish("chaos transitivity", vec![], report)
        }
    }
}

fn parse_blocks(s: &str) -> Result<Vec<ClopenBlock>> {
    s.split(';')
        .map(|b| b.parse::<ClopenBlock>().with_context(|| format!("bad block {b:?}")))
        .collect()
}

fn cantor_transcripts(map: &CantorMap, depth: usize) -> Result<Value> {
    let ends = [Address::binary(vec![0; depth])?, Address::binary(vec![1; depth])?];
    let t = ends.iter().map(|a| map.transcript(a)).collect::<Result<Vec<_>, _>>()?;
    Ok(serde_json::to_value(t)?)
}

fn cmd_surject(a: &SurjectArgs) -> Result<Outcome> {
    match a.kind {
        SurjectKind::Binary | SurjectKind::Interleave => {
            if a.depth > 20 {
                bail!("depth {} exceeds 20 for {:?} maps", a.depth, a.kind);
            }
            let map = if a.kind == SurjectKind::Binary {
                CantorMap::BinaryExpansion
            } else {
                CantorMap::Interleave
            };
            let mut report = CheckReport::new(format!("surject kind={} depth={}", map.kind(), a.depth));
            report.push(
                "cover",
                check_cover(&map, a.depth)?,
                format!(
                    "{} depth-{} images cover the {:?} target",
                    1u64 << a.depth,
                    a.depth,
                    map.target()
                ),
            );
            let eps = map.modulus(a.depth);
            for bit in [0u8, 1] {
                let w = Address::binary(vec![bit; a.depth])?;
                let e = map.evaluate(&w)?;
                report.push(
                    format!("modulus/{bit}^{}", a.depth),
                    e.diameter() <= eps,
                    format!("diameter {} <= {eps}", e.diameter()),
                );
                if let Some(parent) = w.parent() {
                    report.push(
                        format!("nesting/{bit}^{}", a.depth),
                        e.is_subset_of(&map.evaluate(&parent)?),
                        "enclosure inside the parent enclosure",
                    );
                }
            }
            finish(
                "surject",
                vec![
                    ("descriptor", serde_json::to_value(map.descriptor())?),
                    ("transcript", cantor_transcripts(&map, a.depth)?),
                ],
                report,
            )
        }
        SurjectKind::Block => {
            if a.depth > 16 {
                bail!("depth {} exceeds 16 for block maps", a.depth);
            }
            let (domain, target) = if a.swap_halves {
                (parse_blocks("0;1")?, parse_blocks("1;0")?)
            } else {
                match (&a.domain_blocks, &a.target_blocks) {
                    (Some(d), Some(t)) => (parse_blocks(d)?, parse_blocks(t)?),
                    _ => bail!("block maps need --swap-halves or --domain-blocks with --target-blocks"),
                }
            };
            let map = block_surjection(&domain, &target)?;
            let report = verify_block_surjection(&map, &domain, &target, a.depth);
            finish(
                "surject",
                vec![
                    ("descriptor", serde_json::to_value(map.descriptor())?),
                    ("modulus", json!(map.modulus(a.depth).to_string())),
                    ("transcript", cantor_transcripts(&map, a.depth)?),
                ],
                report,
            )
        }
        SurjectKind::Waypoint => {
            let target = a.target.ok_or_else(|| anyhow!("waypoint maps need --target"))?;
            if a.points.is_empty() {
                bail!("waypoint maps need at least one --point");
            }
            let depth = u32::try_from(a.depth)
                .ok()
                .filter(|&d| d <= 30)
                .ok_or_else(|| anyhow!("depth {} exceeds 30", a.depth))?;
            let waypoints = a
                .points
                .iter()
                .map(|p| {
                    let (x, y) = p.split_once('=').ok_or_else(|| anyhow!("point {p:?} is not x=y"))?;
                    let x: Rational = x.trim().parse().with_context(|| format!("bad parameter in {p:?}"))?;
                    let y = Point::parse(y.trim()).with_context(|| format!("bad target point in {p:?}"))?;
                    Ok((x, y))
                })
                .collect::<Result<Vec<_>>>()?;
            let map = WaypointMap::new(target, waypoints)?;
            let mut report = map.check_waypoints(depth);
            report.absorb("coverage", map.check_sweep_coverage(8));
            let mut params: Vec<Rational> = map.waypoints().iter().map(|w| w.x.clone()).collect();
            params.extend(map.sweep_segments().iter().map(|(lo, hi)| lo.midpoint(hi)));
            let transcript = params
                .iter()
                .map(|t| {
                    Ok(json!({
                        "input": t.to_string(),
                        "depth": depth,
                        "enclosure": map.evaluate(t, depth)?,
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            finish(
                "surject",
                vec![
                    ("descriptor", serde_json::to_value(&map)?),
                    ("transcript", Value::Array(transcript)),
                ],
                report,
            )
        }
    }
}

fn labels_to_indices(space: &FiniteTopSpace, s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|l| Ok(space.index_of(l.trim())?)).collect()
}

fn cmd_fintop(c: &FintopCommand) -> Result<Outcome> {
    match c {
        FintopCommand::Quotient { space, blocks } => {
            let x = FiniteTopSpace::named(space)?;
            let d = Partition::parse(&x, blocks)?;
            let q = decomposition_topology(&x, &d);
            let mut report = CheckReport::new(format!("fintop quotient space={space} blocks={}", d.describe(&x)));
            report.push(
                "decomposition_is_topology",
                is_topology(q.len(), q.opens()),
                format!("{} open families over {} blocks", q.opens().len(), q.len()),
            );
            let projection = (0..x.len()).map(|p| d.block_of(p)).collect();
            let pi = FiniteMap::new(x.clone(), q.clone(), projection)?;
            report.push(
                "projection_continuous",
                is_continuous(&pi),
                "preimage of each open family is open",
            );
            finish(
                "fintop quotient",
                vec![
                    ("space", serde_json::to_value(&x)?),
                    ("blocks", json!(d.describe(&x))),
                    ("quotient", serde_json::to_value(&q)?),
                ],
                report,
            )
        }
        FintopCommand::VerifyProp5 { space, blocks, reps } => {
            let x = FiniteTopSpace::named(space)?;
            let d = Partition::parse(&x, blocks)?;
            let reps = labels_to_indices(&x, reps)?;
            let r = verify_prop5(&x, &d, &reps)?;
            let mut report = CheckReport::new(format!("fintop verify-prop5 space={space} blocks={}", d.describe(&x)));
            report.push("homeomorphism", r.holds, r.note.clone());
            let rep_labels: Vec<&str> = reps.iter().map(|&i| x.labels()[i].as_str()).collect();
            finish(
                "fintop verify-prop5",
                vec![
                    ("representatives", json!(rep_labels)),
                    ("hypotheses_met", json!(r.hypotheses_met)),
                    ("holds", json!(r.holds)),
                ],
                report,
            )
        }
        FintopCommand::VerifyLemma7 { space, codomain, map } => {
            let x = FiniteTopSpace::named(space)?;
            let y = FiniteTopSpace::named(codomain)?;
            let mut assignment = vec![None; x.len()];
            for pair in map.split(',') {
                let (from, to) = pair
                    .split_once('=')
                    .ok_or_else(|| anyhow!("map entry {pair:?} is not a=b"))?;
                let i = x.index_of(from.trim())?;
                if assignment[i].is_some() {
                    bail!("point {from} mapped twice");
                }
                assignment[i] = Some(y.index_of(to.trim())?);
            }
            let assignment = assignment
                .into_iter()
                .enumerate()
                .map(|(i, t)| t.ok_or_else(|| anyhow!("point {} is not mapped", x.labels()[i])))
                .collect::<Result<Vec<_>>>()?;
            let f = FiniteMap::new(x, y, assignment)?;
            let r = verify_lemma7(&f);
            let mut report = CheckReport::new(format!(
                "fintop verify-lemma7 space={space} codomain={codomain} map={map}"
            ));
            report.push("homeomorphism", r.holds, r.note.clone());
            finish(
                "fintop verify-lemma7",
                vec![
                    ("continuous", json!(is_continuous(&f))),
                    ("surjective", json!(f.is_surjective())),
                    ("hypotheses_met", json!(r.hypotheses_met)),
                    ("holds", json!(r.holds)),
                ],
                report,
            )
        }
        FintopCommand::Sweep { points } => finish("fintop sweep", vec![], sweep_report(*points as usize)),
    }
}

/// Runs the parsed command and emits its output; returns the exit code.
pub fn execute(cli: &Cli) -> i32 {
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let text = match render(&outcome.document, cli.format, cli.decimal) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e:#}");
            return 2;
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
            print!("{}", summary(&outcome.report));
        }
        None => print!("{text}"),
    }
    if outcome.report.all_pass() {
        0
    } else {
        1
    }
}
