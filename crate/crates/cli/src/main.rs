//! `stw`: subtree and cycle search from the command line.
//!
//! Exit codes: 0 found or true, 2 not found, not applicable or false, 1 error.

mod dot;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use subtree_weight::planar::{
    check_cycle_hypotheses, dense_square_cycle, find_cycle_near, find_half_cycle_3conn, malkevitch, medial_prism,
    mohr_params, parse_graph, random_plane_hamiltonian, square_cycle, validate_cycle, HamiltonCycle, PlaneGraph,
};
use subtree_weight::subset_sum::{
    oracle_subset_sum, partition_dense, subset_sum_dense, subset_sum_via_partition, Dense, Multiset, SubsetWitness,
};
use subtree_weight::tree::{parse_tree, random_tree};
use subtree_weight::{
    check_conditions, find_subtree, oracle_subtree_weights, verify_subtree, SearchError, SearchParams, TightFamily,
};

#[derive(Parser)]
#[command(name = "stw", version, about = "Weighted subtree search, plane cycle search and dense subset sums")]
struct Cli {
    /// Print one JSON report instead of plain lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search a tree file for a subtree of weight in [k - g + 1, k].
    FindSubtree {
        file: PathBuf,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        g: u64,
        /// Stop of the Euler cycle where the window starts.
        #[arg(long)]
        start: Option<usize>,
        /// Only evaluate the sufficient conditions.
        #[arg(long)]
        check_only: bool,
        /// Cross-check the answer against the exact achievable-weight table.
        #[arg(long)]
        oracle: bool,
    },
    /// Search a plane graph file with a `hamilton:` line for a cycle of length in [k - g + 1, k].
    FindCycle {
        file: PathBuf,
        #[arg(long, required_unless_present_any = ["half3conn", "mohr"])]
        k: Option<u64>,
        #[arg(long, default_value_t = 1)]
        g: u64,
        /// Cycle of length n/2 - 2 or n/2 - 1 in a 3-connected graph of minimum degree 4.
        #[arg(long, conflicts_with = "mohr")]
        half3conn: bool,
        /// Cycle of length between n/3 and 2n/3.
        #[arg(long)]
        mohr: bool,
        /// Only evaluate the sufficient conditions.
        #[arg(long)]
        check_only: bool,
    },
    /// Dense subset-sum or partition on a list of positive integers.
    SubsetSum {
        /// Comma-separated values, e.g. 3,1,1,1.
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<u64>,
        #[arg(long, required_unless_present = "partition")]
        k: Option<u64>,
        /// Split into two halves of equal sum.
        #[arg(long, conflicts_with = "via_partition")]
        partition: bool,
        /// Solve subset-sum through a padded partition instance.
        #[arg(long)]
        via_partition: bool,
        /// Run the exact DP when the dense criterion does not apply.
        #[arg(long)]
        fallback_oracle: bool,
    },
    /// Print a generated instance.
    Gen {
        /// tight-star, tight-path-lower, tight-path-upper, tight-star-cap, random-tree,
        /// malkevitch, square-cycle, dense-square-cycle, medial-prism, random-plane
        family: String,
        params: Vec<u64>,
    },
    /// Render a tree or graph file as Graphviz DOT.
    Dot {
        file: PathBuf,
        /// Comma-separated vertex ids: a subtree, or a cycle in order.
        #[arg(long, value_delimiter = ',')]
        highlight: Vec<usize>,
    },
    /// Exact achievable subtree weights of a tree file.
    Oracle {
        file: PathBuf,
        /// With --k, report whether some weight lies in [k - g + 1, k].
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, default_value_t = 1)]
        g: u64,
    },
}

#[derive(Serialize)]
struct RunReport {
    subcommand: &'static str,
    input_digest: String,
    outcome: &'static str,
    payload: Value,
    step_count: Option<usize>,
    wall_time_ms: f64,
}

/// What a command produced: exit status, plain text lines and the JSON payload.
struct Run {
    outcome: &'static str,
    lines: String,
    payload: Value,
    steps: Option<usize>,
}

impl Run {
    fn new(outcome: &'static str, lines: String, payload: Value, steps: Option<usize>) -> Self {
        Self { outcome, lines, payload, steps }
    }

    fn exit_code(&self) -> u8 {
        match self.outcome {
            "found" | "true" => 0,
            _ => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = match &cli.command {
        Command::FindSubtree { .. } => "find-subtree",
        Command::FindCycle { .. } => "find-cycle",
        Command::SubsetSum { .. } => "subset-sum",
        Command::Gen { .. } => "gen",
        Command::Dot { .. } => "dot",
        Command::Oracle { .. } => "oracle",
    };
    let t0 = Instant::now();
    let mut digest = String::new();
    let result = dispatch(cli.command, &mut digest);
    let wall_time_ms = t0.elapsed().as_secs_f64() * 1e3;
    match result {
        Ok(run) => {
            if cli.json {
                let report = RunReport {
                    subcommand: name,
                    input_digest: digest,
                    outcome: run.outcome,
                    payload: run.payload.clone(),
                    step_count: run.steps,
                    wall_time_ms,
                };
                println!("{}", serde_json::to_string(&report).expect("report serializes"));
            } else {
                print!("{}", run.lines);
            }
            ExitCode::from(run.exit_code())
        }
        Err(e) => {
            if cli.json {
                let report = RunReport {
                    subcommand: name,
                    input_digest: digest,
                    outcome: "error",
                    payload: json!({ "message": format!("{e:#}") }),
                    step_count: None,
                    wall_time_ms,
                };
                println!("{}", serde_json::to_string(&report).expect("report serializes"));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn read_input(path: &PathBuf, digest: &mut String) -> Result<String> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    *digest = sha256_hex(text.as_bytes());
    Ok(text)
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

fn join(ids: &[usize]) -> String {
    ids.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn dispatch(command: Command, digest: &mut String) -> Result<Run> {
    match command {
        Command::FindSubtree { file, k, g, start, check_only, oracle } => {
            let tree = parse_tree(&read_input(&file, digest)?)?;
            cmd_find_subtree(&tree, k, g, start, check_only, oracle)
        }
        Command::FindCycle { file, k, g, half3conn, mohr, check_only } => {
            let (graph, ham) = parse_graph(&read_input(&file, digest)?)?;
            let ham = ham.ok_or_else(|| anyhow!("{} has no `hamilton:` line", file.display()))?;
            cmd_find_cycle(&graph, &ham, k, g, half3conn, mohr, check_only)
        }
        Command::SubsetSum { values, k, partition, via_partition, fallback_oracle } => {
            *digest = sha256_hex(join_u64(&values).as_bytes());
            cmd_subset_sum(values, k, partition, via_partition, fallback_oracle)
        }
        Command::Gen { family, params } => {
            *digest = sha256_hex(format!("{family} {}", join_u64(&params)).as_bytes());
            let text = cmd_gen(&family, &params)?;
            Ok(Run::new("found", text.clone(), json!({ "text": text }), None))
        }
        Command::Dot { file, highlight } => {
            let text = read_input(&file, digest)?;
            let first = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("");
            let out = if first.starts_with("tree") {
                dot::tree_dot(&parse_tree(&text)?, &highlight)?
            } else {
                dot::graph_dot(&parse_graph(&text)?.0, &highlight)?
            };
            Ok(Run::new("found", out.clone(), json!({ "dot": out }), None))
        }
        Command::Oracle { file, k, g } => {
            let tree = parse_tree(&read_input(&file, digest)?)?;
            let weights = oracle_subtree_weights(&tree)?;
            let list: Vec<u64> = weights.iter().copied().collect();
            let mut lines = format!("WEIGHTS {}\n", join_u64(&list));
            let outcome = match k {
                Some(k) => {
                    if g == 0 || k == 0 {
                        bail!("k and g must be positive");
                    }
                    let params = SearchParams::new(k, g);
                    match weights.iter().find(|&&w| params.accepts(w)) {
                        Some(w) => {
                            writeln!(lines, "ACHIEVABLE weight={w}")?;
                            "found"
                        }
                        None => {
                            lines.push_str("UNACHIEVABLE\n");
                            "not-found"
                        }
                    }
                }
                None => "found",
            };
            Ok(Run::new(outcome, lines, json!({ "weights": list }), None))
        }
    }
}

fn join_u64(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_find_subtree(
    tree: &subtree_weight::WeightedTree,
    k: u64,
    g: u64,
    start: Option<usize>,
    check_only: bool,
    oracle: bool,
) -> Result<Run> {
    let report = check_conditions(tree, k, g);
    let conditions = json!({
        "n1": report.n1, "n2": report.n2, "h": report.h.to_string(), "k": k, "g": g,
        "range": report.range_ok, "slack": report.slack_ok, "lower": report.lower_ok,
        "upper": report.upper_ok, "cap": report.cap_ok, "overall": report.overall,
    });
    if check_only {
        let outcome = if report.overall { "true" } else { "false" };
        return Ok(Run::new(outcome, format!("CONDITIONS {report}\n"), json!({ "conditions": conditions }), None));
    }
    let outcome = match find_subtree(tree, k, g, start) {
        Ok(o) => Some(o),
        // A vertex heavier than k rules out every subtree in the band.
        Err(SearchError::WeightExceedsTarget { .. }) if g <= k => None,
        Err(e) => return Err(e.into()),
    };
    let steps = outcome.as_ref().map(|o| o.steps());
    let found = outcome.and_then(|o| o.into_found());
    let mut lines = String::new();
    let mut payload = json!({ "conditions": conditions });
    if oracle {
        let params = SearchParams::new(k, g);
        let exists = oracle_subtree_weights(tree)?.into_iter().any(|w| params.accepts(w));
        if let Some(r) = &found {
            if !exists {
                bail!("oracle disagrees: search found weight {} but no weight is achievable", r.weight);
            }
        }
        if report.overall && !exists {
            bail!("oracle disagrees: conditions hold but no weight in the band is achievable");
        }
        writeln!(lines, "ORACLE achievable={exists}")?;
        payload["oracle_achievable"] = json!(exists);
    }
    match found {
        Some(r) => {
            if !verify_subtree(tree, &r, k, g) {
                bail!("internal error: result failed verification");
            }
            writeln!(lines, "SUBTREE weight={} vertices={}", r.weight, join(&r.vertices))?;
            payload["subtree"] = json!({ "weight": r.weight, "vertices": r.vertices, "window": r.window });
            Ok(Run::new("found", lines, payload, steps))
        }
        None => {
            lines.push_str("NOTFOUND\n");
            Ok(Run::new("not-found", lines, payload, steps))
        }
    }
}

fn cmd_find_cycle(
    graph: &PlaneGraph,
    ham: &HamiltonCycle,
    k: Option<u64>,
    g: u64,
    half3conn: bool,
    mohr: bool,
    check_only: bool,
) -> Result<Run> {
    let cycle_run = |vertices: Vec<usize>, steps: usize, extra: Value| -> Result<Run> {
        if !validate_cycle(graph, &vertices) {
            bail!("internal error: result is not a cycle of the graph");
        }
        let lines = format!("CYCLE length={} vertices={}\n", vertices.len(), join(&vertices));
        let payload = json!({ "cycle": { "length": vertices.len(), "vertices": vertices }, "detail": extra });
        Ok(Run::new("found", lines, payload, Some(steps)))
    };
    if half3conn {
        let r = find_half_cycle_3conn(graph, ham)?;
        return cycle_run(r.cycle.vertices, r.cycle.steps, json!({ "branch": r.branch.name() }));
    }
    let (k, g) = if mohr { mohr_params(graph.len()) } else { (k.expect("clap requires k"), g) };
    let report = check_cycle_hypotheses(graph, k, g);
    let hyp = json!({
        "n": report.n, "m": report.m, "k": k, "g": g, "density": report.density_ok, "slack": report.slack_ok,
        "range": report.range_ok, "lower": report.lower_ok, "upper": report.upper_ok, "overall": report.overall,
    });
    if check_only {
        let outcome = if report.overall { "true" } else { "false" };
        return Ok(Run::new(outcome, format!("HYPOTHESES {report}\n"), json!({ "hypotheses": hyp }), None));
    }
    match find_cycle_near(graph, ham, k, g)?.into_found() {
        Some(c) => cycle_run(c.vertices, c.steps, json!({ "hypotheses": hyp })),
        None => Ok(Run::new("not-found", "NOTFOUND\n".into(), json!({ "hypotheses": hyp }), None)),
    }
}

fn cmd_subset_sum(
    values: Vec<u64>,
    k: Option<u64>,
    partition: bool,
    via_partition: bool,
    fallback_oracle: bool,
) -> Result<Run> {
    let set = Multiset::new(values)?;
    let target = if partition {
        if set.total() % 2 == 1 {
            bail!("partition needs an even total, got {}", set.total());
        }
        set.total() / 2
    } else {
        k.expect("clap requires k")
    };
    let dense = if partition {
        partition_dense(&set)?
    } else if via_partition {
        subset_sum_via_partition(&set, target)?
    } else {
        subset_sum_dense(&set, target)
    };
    let (answer, method) = match dense {
        Dense::NotApplicable if fallback_oracle => match oracle_subset_sum(&set, target)? {
            Some(w) => (Dense::True(w), "oracle"),
            None => (Dense::False, "oracle"),
        },
        d => (d, "dense"),
    };
    let witness_json = |w: &SubsetWitness| json!({ "indices": w.indices, "sum": w.sum });
    match answer {
        Dense::True(w) => {
            if !w.is_valid_for(&set, target) {
                bail!("internal error: witness does not sum to {target}");
            }
            let lines = format!("TRUE sum={} indices={} method={method}\n", w.sum, join(&w.indices));
            Ok(Run::new("true", lines, json!({ "method": method, "witness": witness_json(&w) }), None))
        }
        Dense::False => Ok(Run::new("false", format!("FALSE method={method}\n"), json!({ "method": method }), None)),
        Dense::NotApplicable => Ok(Run::new("not-applicable", "NOTAPPLICABLE\n".into(), json!({}), None)),
    }
}

fn cmd_gen(family: &str, params: &[u64]) -> Result<String> {
    let arg = |i: usize, what: &str| -> Result<u64> {
        params.get(i).copied().ok_or_else(|| anyhow!("{family}: missing parameter {what}"))
    };
    let usize_arg = |i: usize, what: &str| -> Result<usize> { Ok(usize::try_from(arg(i, what)?)?) };
    let graph_text = |(g, h): (PlaneGraph, HamiltonCycle)| -> String {
        format!("# {family} {}\n{}", join_u64(params), g.to_text(Some(&h)))
    };
    Ok(match family {
        "random-tree" => {
            let (n, w, seed) = (usize_arg(0, "n")?, arg(1, "max-weight")?, arg(2, "seed")?);
            format!("# random-tree n={n} max-weight={w} seed={seed}\n{}", random_tree(n, w, seed)?.to_text())
        }
        "malkevitch" => graph_text(malkevitch(usize_arg(0, "p")?)?),
        "square-cycle" => graph_text(square_cycle(usize_arg(0, "n")?)?),
        "dense-square-cycle" => graph_text(dense_square_cycle(usize_arg(0, "n")?, arg(1, "seed")?)?),
        "medial-prism" => graph_text(medial_prism(usize_arg(0, "t")?)?),
        "random-plane" => {
            let keep = u32::try_from(arg(1, "keep-percent")?)?;
            graph_text(random_plane_hamiltonian(usize_arg(0, "n")?, keep, arg(2, "seed")?)?)
        }
        other => {
            let fam: TightFamily = other.parse().map_err(|e: String| anyhow!(e))?;
            let p = arg(0, "p")?;
            let q = if fam.uses_q() { Some(arg(1, "q")?) } else { None };
            let inst = fam.generate(p, q)?;
            let q_text = q.map(|q| format!(" q={q}")).unwrap_or_default();
            format!("# {} p={p}{q_text} k={} g={}\n{}", fam.name(), inst.k, inst.g, inst.tree.to_text())
        }
    })
}
