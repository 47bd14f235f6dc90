//! Command line interface to the path-ideal toolkit.
//!
//! Graphs come in three ways: `--partition 1,2,3` builds the complete
//! multipartite graph with those block sizes, `--graph FILE` reads a JSON
//! object `{"vertices": N, "edges": [[1,2], ...]}`, and
//! `--vertices N --edges 1-2,2-3` spells a small graph inline. Vertices
//! are 1-based everywhere on the surface; the library works 0-based.
//!
//! Exit codes: 0 success, 1 usage or computation error, 2 time budget
//! exhausted, 3 exchange property fails, 4 no arrangement exists, 5 not
//! Cohen-Macaulay, 6 verification suite failure.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pathroid_core::verify::{run_all, run_suite, SweepOptions, SweepReport, SUITE_NAMES};
use pathroid_core::{
    arrange, betti_numbers, check_basis_exchange, check_polymatroidal_exchange,
    classify_path_ideal_cm, closed_form_dstab, depth_of_quotient, depth_profile,
    linear_relation_graph, path_ideal, CmKind, ColorCounts, Error, MonomialIdeal, PartitionSpec,
    SetSystem, SimpleGraph,
};
use serde::Deserialize;
use serde_json::json;

const EXIT_OK: u8 = 0;
const EXIT_INTERNAL: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_NOT_MATROIDAL: u8 = 3;
const EXIT_INFEASIBLE: u8 = 4;
const EXIT_NOT_CM: u8 = 5;
const EXIT_SUITE_FAILED: u8 = 6;

#[derive(Parser)]
#[command(
    name = "pathroid",
    version,
    about = "Path ideals of graphs: generators, matroidality, and depth of powers"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for verification sweeps (0 or 1 = sequential).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,

    /// Abort verification sweeps after this many seconds.
    #[arg(long, global = true, value_name = "SECONDS")]
    budget_seconds: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the minimal generators of the t-path ideal.
    Gens {
        #[command(flatten)]
        graph: GraphArgs,
        /// Number of vertices on a path.
        #[arg(long)]
        t: usize,
    },
    /// Arrange color counts in a row with no equal neighbors, if possible.
    Arrange {
        /// Count per color, e.g. "3,2,2".
        #[arg(long, value_name = "COUNTS")]
        counts: String,
    },
    /// Check the exchange properties of the t-path ideal.
    CheckMatroidal {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        t: usize,
    },
    /// Classify the quotient by a t-path ideal of a complete multipartite
    /// graph as Cohen-Macaulay or not, from the block sizes alone.
    IsCm {
        /// Block sizes, e.g. "1,2,3".
        #[arg(long, value_name = "SIZES")]
        partition: String,
        #[arg(long)]
        t: usize,
    },
    /// Multigraded Betti numbers of a power of the t-path ideal.
    Betti {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        t: usize,
        /// Which power of the ideal to resolve.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        power: u64,
    },
    /// Depth of the quotient by a power of the t-path ideal.
    Depth {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        power: u64,
    },
    /// Depth profile of successive powers: values, limit, and the power
    /// where the depth stabilizes.
    Dstab {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        t: usize,
        /// Largest power to try (default: number of vertices).
        #[arg(long, value_name = "K")]
        k_max: Option<usize>,
    },
    /// Closed-form prediction of the stabilization index for a complete
    /// multipartite graph.
    DstabFormula {
        /// Block sizes, e.g. "1,2,3".
        #[arg(long, value_name = "SIZES")]
        partition: String,
        #[arg(long)]
        t: usize,
    },
    /// Linear relation graph and analytic spread of the t-path ideal.
    /// Refuses ideals that fail the exchange property.
    Lrg {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        t: usize,
    },
    /// Run verification sweeps and write a JSON report.
    Verify {
        /// Run a single suite by name (default: all).
        #[arg(long, value_name = "NAME")]
        suite: Option<String>,
        /// Where to write the JSON report.
        #[arg(long, value_name = "FILE", default_value = "pathroid-verify.json")]
        report: PathBuf,
    },
}

/// One graph, three spellings; exactly one must be given.
#[derive(Args)]
struct GraphArgs {
    /// Block sizes of a complete multipartite graph, e.g. "1,2,3".
    #[arg(long, value_name = "SIZES", conflicts_with_all = ["graph", "vertices", "edges"])]
    partition: Option<String>,

    /// JSON graph file: {"vertices": N, "edges": [[1,2], ...]} (1-based).
    #[arg(long, value_name = "FILE", conflicts_with_all = ["vertices", "edges"])]
    graph: Option<PathBuf>,

    /// Vertex count for an inline graph.
    #[arg(long, requires = "edges")]
    vertices: Option<usize>,

    /// Inline edge list, e.g. "1-2,2-3" (1-based).
    #[arg(long, value_name = "LIST", requires = "vertices")]
    edges: Option<String>,

    /// Refuse graphs with more vertices than this.
    #[arg(long, default_value_t = 16, value_name = "N")]
    max_vertices: usize,
}

#[derive(Deserialize)]
struct GraphFile {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphArgs {
    fn build(&self) -> anyhow::Result<SimpleGraph> {
        let graph = if let Some(sizes) = &self.partition {
            parse_partition(sizes)?.complete_multipartite()
        } else if let Some(path) = &self.graph {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let file: GraphFile = serde_json::from_str(&text)
                .with_context(|| format!("parsing {}", path.display()))?;
            let edges = file
                .edges
                .iter()
                .map(|&(u, v)| zero_base_edge(u, v))
                .collect::<anyhow::Result<Vec<_>>>()?;
            SimpleGraph::new(file.vertices, &edges)?
        } else if let (Some(n), Some(list)) = (self.vertices, &self.edges) {
            SimpleGraph::new(n, &parse_edges(list)?)?
        } else {
            bail!("give a graph with --partition, --graph, or --vertices/--edges");
        };
        if graph.vertex_count() > self.max_vertices {
            return Err(Error::GraphTooLarge {
                vertices: graph.vertex_count(),
                limit: self.max_vertices,
            }
            .into());
        }
        Ok(graph)
    }
}

fn parse_partition(text: &str) -> anyhow::Result<PartitionSpec> {
    let sizes = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| anyhow!("bad block size {part:?} in partition {text:?}"))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(PartitionSpec::new(sizes)?)
}

fn parse_counts(text: &str) -> anyhow::Result<Vec<usize>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| anyhow!("bad count {part:?} in {text:?}"))
        })
        .collect()
}

fn parse_edges(text: &str) -> anyhow::Result<Vec<(usize, usize)>> {
    text.split(',')
        .map(|pair| {
            let (u, v) = pair
                .trim()
                .split_once('-')
                .ok_or_else(|| anyhow!("bad edge {pair:?}, expected like 1-2"))?;
            zero_base_edge(
                u.trim().parse().map_err(|_| anyhow!("bad vertex {u:?}"))?,
                v.trim().parse().map_err(|_| anyhow!("bad vertex {v:?}"))?,
            )
        })
        .collect()
}

fn zero_base_edge(u: usize, v: usize) -> anyhow::Result<(usize, usize)> {
    let shift = |x: usize| {
        x.checked_sub(1)
            .ok_or_else(|| anyhow!("vertices are numbered from 1, got {x}"))
    };
    Ok((shift(u)?, shift(v)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let code = if err
                .downcast_ref::<Error>()
                .is_some_and(|e| matches!(e, Error::BudgetExceeded(_)))
            {
                EXIT_BUDGET
            } else {
                EXIT_INTERNAL
            };
            eprintln!("error: {err:#}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let format = cli.format;
    match cli.command {
        Command::Gens { graph, t } => gens(format, &graph.build()?, t),
        Command::Arrange { counts } => arrange_cmd(format, &parse_counts(&counts)?),
        Command::CheckMatroidal { graph, t } => check_matroidal(format, &graph.build()?, t),
        Command::IsCm { partition, t } => is_cm(format, &parse_partition(&partition)?, t),
        Command::Betti { graph, t, power } => betti(format, &graph.build()?, t, power),
        Command::Depth { graph, t, power } => depth(format, &graph.build()?, t, power),
        Command::Dstab { graph, t, k_max } => dstab(format, &graph.build()?, t, k_max),
        Command::DstabFormula { partition, t } => {
            dstab_formula(format, &parse_partition(&partition)?, t)
        }
        Command::Lrg { graph, t } => lrg(format, &graph.build()?, t),
        Command::Verify { suite, report } => {
            let mut opts = SweepOptions::new().with_workers(cli.workers);
            if let Some(seconds) = cli.budget_seconds {
                opts = opts.with_budget(Duration::from_secs(seconds));
            }
            verify(format, suite.as_deref(), &report, &opts)
        }
    }
}

fn emit(format: Format, value: serde_json::Value, text: String) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    let written = match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&value)?),
        Format::Text => writeln!(out, "{text}"),
    };
    match written {
        // A closed pipe (e.g. piping into `head`) is not an error.
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::process::exit(0),
        other => Ok(other?),
    }
}

fn build_power(graph: &SimpleGraph, t: usize, power: u64) -> anyhow::Result<MonomialIdeal> {
    let ideal = path_ideal(graph, t)?;
    if ideal.is_zero() {
        bail!("the graph has no path on {t} vertices; the ideal is zero");
    }
    Ok(ideal.power(power)?)
}

fn gens(format: Format, graph: &SimpleGraph, t: usize) -> anyhow::Result<u8> {
    let ideal = path_ideal(graph, t)?;
    let gens: Vec<String> = ideal.gens().iter().map(|g| g.to_string()).collect();
    let text = if gens.is_empty() {
        "0".to_string()
    } else {
        gens.join("\n")
    };
    emit(
        format,
        json!({
            "vertices": graph.vertex_count(),
            "t": t,
            "count": gens.len(),
            "generators": gens,
        }),
        text,
    )?;
    Ok(EXIT_OK)
}

fn arrange_cmd(format: Format, counts: &[usize]) -> anyhow::Result<u8> {
    let colors = ColorCounts::new(counts.to_vec())?;
    let arrangement = arrange(&colors);
    let code = if arrangement.is_some() {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    };
    let one_based: Option<Vec<usize>> = arrangement
        .as_ref()
        .map(|seq| seq.iter().map(|&c| c + 1).collect());
    let text = match &one_based {
        Some(seq) => seq
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        None => {
            let total: usize = counts.iter().sum();
            let max = counts.iter().copied().max().unwrap_or(0);
            format!("infeasible: a color fills {max} of {total} slots, more than ceil({total}/2)")
        }
    };
    emit(
        format,
        json!({
            "counts": counts,
            "feasible": one_based.is_some(),
            "arrangement": one_based,
        }),
        text,
    )?;
    Ok(code)
}

fn check_matroidal(format: Format, graph: &SimpleGraph, t: usize) -> anyhow::Result<u8> {
    let ideal = path_ideal(graph, t)?;
    if ideal.is_zero() {
        bail!("the graph has no path on {t} vertices; the ideal is zero");
    }
    let supports: Vec<Vec<usize>> = ideal.gens().iter().map(|g| g.support()).collect();
    let system = SetSystem::from_sets(ideal.ring_dim(), &supports)?;
    let set_verdict = check_basis_exchange(&system);
    let monomial_verdict = check_polymatroidal_exchange(&ideal)?;
    let matroidal = set_verdict.holds() && monomial_verdict.holds();

    let witness = monomial_verdict.witness().map(|w| {
        json!({
            "u": w.u.to_string(),
            "v": w.v.to_string(),
            "variable": w.variable + 1,
        })
    });
    let text = match monomial_verdict.witness() {
        None if matroidal => format!(
            "matroidal: exchange holds across {} generators",
            ideal.num_gens()
        ),
        None => "not matroidal: set exchange fails".to_string(),
        Some(w) => format!(
            "not matroidal: exchange fails for u={}, v={} at x{}",
            w.u,
            w.v,
            w.variable + 1
        ),
    };
    emit(
        format,
        json!({
            "vertices": graph.vertex_count(),
            "t": t,
            "generators": ideal.num_gens(),
            "matroidal": matroidal,
            "setExchange": set_verdict.holds(),
            "monomialExchange": monomial_verdict.holds(),
            "witness": witness,
        }),
        text,
    )?;
    Ok(if matroidal {
        EXIT_OK
    } else {
        EXIT_NOT_MATROIDAL
    })
}

fn is_cm(format: Format, spec: &PartitionSpec, t: usize) -> anyhow::Result<u8> {
    let verdict = classify_path_ideal_cm(spec, t)?;
    let cap = t.div_ceil(2);
    let text = match verdict.kind {
        CmKind::Zero => format!("Cohen-Macaulay: no {t}-path, the ideal is zero"),
        CmKind::SquarefreeVeronese => format!(
            "Cohen-Macaulay: every block fits under {cap}, the ideal is squarefree Veronese of degree {t}"
        ),
        CmKind::OversizeBlock => {
            let block = verdict.failing_block.expect("oversize verdict names a block");
            format!(
                "not Cohen-Macaulay: block {} has {} vertices, more than {cap}",
                block + 1,
                spec.sizes()[block]
            )
        }
    };
    emit(
        format,
        json!({
            "partition": spec.sizes(),
            "t": t,
            "verdict": verdict,
        }),
        text,
    )?;
    Ok(if verdict.is_cm { EXIT_OK } else { EXIT_NOT_CM })
}

fn betti(format: Format, graph: &SimpleGraph, t: usize, power: u64) -> anyhow::Result<u8> {
    let ideal = build_power(graph, t, power)?;
    let table = betti_numbers(&ideal)?;
    let mut lines = vec![
        format!("totals: {:?}", table.totals()),
        format!(
            "projective dimension: {}",
            table
                .projective_dimension()
                .map_or("none".to_string(), |p| p.to_string())
        ),
        format!(
            "depth of quotient: {}",
            table
                .quotient_depth()
                .map_or("none".to_string(), |d| d.to_string())
        ),
    ];
    for (i, a, b) in table.iter() {
        lines.push(format!("b[{i}, {a}] = {b}"));
    }
    emit(
        format,
        json!({
            "vertices": graph.vertex_count(),
            "t": t,
            "power": power,
            "totals": table.totals(),
            "projectiveDimension": table.projective_dimension(),
            "quotientDepth": table.quotient_depth(),
            "table": table,
        }),
        lines.join("\n"),
    )?;
    Ok(EXIT_OK)
}

fn depth(format: Format, graph: &SimpleGraph, t: usize, power: u64) -> anyhow::Result<u8> {
    let ideal = build_power(graph, t, power)?;
    let value = depth_of_quotient(&ideal)?;
    emit(
        format,
        json!({
            "vertices": graph.vertex_count(),
            "t": t,
            "power": power,
            "depth": value,
        }),
        value.to_string(),
    )?;
    Ok(EXIT_OK)
}

fn dstab(
    format: Format,
    graph: &SimpleGraph,
    t: usize,
    k_max: Option<usize>,
) -> anyhow::Result<u8> {
    let ideal = path_ideal(graph, t)?;
    if ideal.is_zero() {
        bail!("the graph has no path on {t} vertices; the ideal is zero");
    }
    let k_max = k_max.unwrap_or_else(|| graph.vertex_count().max(2));
    let profile = depth_profile(&ideal, k_max)?;
    let depths = profile
        .depths()
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let stab = profile.dstab().map_or_else(
        || format!("not reached within {k_max} powers (raise --k-max)"),
        |k| k.to_string(),
    );
    let text = format!(
        "depths: {depths}\nlimit: {}\ndstab: {stab}",
        profile.limit()
    );
    emit(
        format,
        json!({
            "vertices": graph.vertex_count(),
            "t": t,
            "kMax": k_max,
            "profile": profile,
        }),
        text,
    )?;
    Ok(EXIT_OK)
}

fn dstab_formula(format: Format, spec: &PartitionSpec, t: usize) -> anyhow::Result<u8> {
    let prediction = closed_form_dstab(spec, t)?;
    let text = match serde_json::to_value(prediction)? {
        serde_json::Value::Object(map) => match map.get("kind").and_then(|k| k.as_str()) {
            Some("exact") => format!("exact: {}", map["value"]),
            Some("bounds") => format!("bounds: {}..={}", map["lo"], map["hi"]),
            _ => "uncovered".to_string(),
        },
        _ => "uncovered".to_string(),
    };
    emit(
        format,
        json!({
            "partition": spec.sizes(),
            "t": t,
            "prediction": prediction,
        }),
        text,
    )?;
    Ok(EXIT_OK)
}

fn lrg(format: Format, graph: &SimpleGraph, t: usize) -> anyhow::Result<u8> {
    let ideal = path_ideal(graph, t)?;
    if ideal.is_zero() {
        bail!("the graph has no path on {t} vertices; the ideal is zero");
    }
    let verdict = check_polymatroidal_exchange(&ideal)?;
    if let Some(w) = verdict.witness() {
        eprintln!(
            "the linear relation graph describes depth of powers only for ideals with the \
             exchange property, and this one fails it: u={}, v={} at x{}",
            w.u,
            w.v,
            w.variable + 1
        );
        return Ok(EXIT_NOT_MATROIDAL);
    }
    let relation = linear_relation_graph(&ideal)?;
    let n = ideal.ring_dim();
    let vertices = relation
        .vertices()
        .iter()
        .map(|v| format!("x{}", v + 1))
        .collect::<Vec<_>>()
        .join(" ");
    let edges = relation
        .edges()
        .iter()
        .map(|&(a, b)| format!("x{}-x{}", a + 1, b + 1))
        .collect::<Vec<_>>()
        .join(" ");
    let text = format!(
        "vertices: {vertices}\nedges: {edges}\ncomponents: {}\nspread: {}\nlimit depth: {}",
        relation.component_count(),
        relation.spread(),
        n - relation.spread(),
    );
    emit(
        format,
        json!({
            "vertices": graph.vertex_count(),
            "t": t,
            "relationGraph": relation,
            "limitDepth": n - relation.spread(),
        }),
        text,
    )?;
    Ok(EXIT_OK)
}

fn verify(
    format: Format,
    suite: Option<&str>,
    report_path: &PathBuf,
    opts: &SweepOptions,
) -> anyhow::Result<u8> {
    let reports: Vec<SweepReport> = match suite {
        Some(name) => vec![run_suite(name, opts)
            .with_context(|| format!("available suites: {}", SUITE_NAMES.join(", ")))?],
        None => run_all(opts)?,
    };
    let passed = reports.iter().all(SweepReport::passed);
    let report = json!({
        "passed": passed,
        "suites": reports,
    });
    fs::write(report_path, serde_json::to_string_pretty(&report)?)
        .with_context(|| format!("writing {}", report_path.display()))?;
    let text = reports
        .iter()
        .map(|r| r.to_string().trim_end().to_string())
        .collect::<Vec<_>>()
        .join("\n")
        + &format!("\nreport written to {}", report_path.display());
    emit(format, report, text)?;
    Ok(if passed { EXIT_OK } else { EXIT_SUITE_FAILED })
}
