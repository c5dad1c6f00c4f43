/*!
Command-line front end.

Every graph-reading command consumes a planar_code file and prints one
JSON object per record (JSON lines). Exit codes: `0` all checks passed,
`1` at least one negative finding (an uncolorable graph, a violated
coloring, a broken charge bound, a refuted occurrence, a failed
colorability claim), `2` unusable input.

Set `DISCHARGE_LAB_WORKERS` to pin the worker-thread count used by the
corpus-level commands.
*/

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use discharge_lab::corpus::{generate, CorpusSpec, GenSpec};
use discharge_lab::discharge::{apply_rules, audit, RuleSetId};
use discharge_lab::planar_code::{decode_graphs, encode_graphs};
use discharge_lab::plane_graph::PlaneGraph;
use discharge_lab::reducible::{scan, test_reducibility, ScanScope, DEFAULT_ORACLE_CAP};
use discharge_lab::report::{
    verdict_str, DischargeReport, GraphRecord, MatchReport, OracleOutcome, OracleReport,
    ScanReport, SolveReport, TheoremReport, VerifyReport,
};
use discharge_lab::solver::{parse_coloring, solve, verify, DefectProfile};
use rayon::prelude::*;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "discharge-lab",
    version,
    about = "Plane-graph workbench: exact defective coloring, configuration scanning, and charge-discharging audits"
)]
struct Cli {
    /// Attach per-graph wall-clock timings (makes output run-dependent).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color every graph in a planar_code file, or prove it impossible.
    Solve {
        file: PathBuf,
        /// Defect profile, e.g. 110, 300, 000 or 1,1,0.
        #[arg(long, default_value = "110")]
        profile: DefectProfile,
        /// Fixed colors as v:c pairs (comma or space separated).
        #[arg(long)]
        precolor: Option<String>,
    },
    /// Check colorings (one line of v:c pairs per graph) against a profile.
    Verify {
        file: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, default_value = "110")]
        profile: DefectProfile,
    },
    /// Run a discharging rule set and audit the resulting charges.
    Discharge {
        file: PathBuf,
        /// Rule set: 110 (banked) or 300 (bankless).
        #[arg(long, default_value = "110", value_parser = parse_rules)]
        rules: RuleSetId,
        /// Include the full per-element audit table.
        #[arg(long)]
        audit: bool,
        /// Include the complete transfer log.
        #[arg(long)]
        log_transfers: bool,
    },
    /// List configuration occurrences in every graph.
    Scan {
        file: PathBuf,
        /// Configuration family: 110, 300 or both.
        #[arg(long, default_value = "both", value_parser = parse_scope)]
        profile: ScanScope,
    },
    /// Scan, then test every occurrence against the exact solver.
    Oracle {
        file: PathBuf,
        /// Skip occurrences in graphs larger than this.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
    },
    /// Check both colorability claims over a whole corpus.
    Theorem {
        /// file:PATH or gen:A..B,count=K,seed=S[,nofilter]
        #[arg(long)]
        corpus: String,
    },
    /// Grow a seeded corpus and write it to stdout as planar_code.
    Gen {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        /// Keep graphs containing 4- or 5-cycles too.
        #[arg(long)]
        no_filter: bool,
    },
}

fn parse_rules(s: &str) -> Result<RuleSetId, String> {
    match s {
        "110" => Ok(RuleSetId::R110),
        "300" => Ok(RuleSetId::R300),
        _ => Err(format!("unknown rule set {s:?}; expected 110 or 300")),
    }
}

fn parse_scope(s: &str) -> Result<ScanScope, String> {
    match s {
        "110" => Ok(ScanScope::For110),
        "300" => Ok(ScanScope::For300),
        "both" => Ok(ScanScope::Both),
        _ => Err(format!("unknown family {s:?}; expected 110, 300 or both")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_workers() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_workers() -> Result<()> {
    if let Ok(raw) = std::env::var("DISCHARGE_LAB_WORKERS") {
        let workers: usize = raw
            .parse()
            .ok()
            .filter(|&w| w >= 1)
            .ok_or_else(|| anyhow!("DISCHARGE_LAB_WORKERS={raw:?} is not a positive integer"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .context("worker pool already configured")?;
    }
    Ok(())
}

fn read_graphs(path: &PathBuf) -> Result<Vec<PlaneGraph>> {
    let bytes =
        std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let graphs = decode_graphs(&bytes)
        .with_context(|| format!("{} is not a planar_code file", path.display()))?;
    if graphs.is_empty() {
        bail!("{} holds no graph records", path.display());
    }
    Ok(graphs)
}

/// Writes to stdout, treating a closed pipe as a clean early exit.
fn emit(write: impl FnOnce(&mut dyn Write) -> std::io::Result<()>) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match write(&mut out) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        other => Ok(other?),
    }
}

fn print_records(records: Vec<GraphRecord>) -> Result<()> {
    emit(|out| {
        for r in records {
            writeln!(out, "{}", r.to_json())?;
        }
        Ok(())
    })
}

/// Runs one command; `Ok(true)` means every check came out clean.
fn run(cli: Cli) -> Result<bool> {
    let timings = cli.timings;
    let timed = |record: &mut GraphRecord, started: Instant| {
        if timings {
            record.wall_ms = Some(started.elapsed().as_millis());
        }
    };
    match cli.command {
        Command::Solve { file, profile, precolor } => {
            let graphs = read_graphs(&file)?;
            let mut all_colorable = true;
            let mut records = Vec::new();
            for g in &graphs {
                let started = Instant::now();
                let fixed = match &precolor {
                    Some(s) => parse_coloring(&s.replace(',', " "), g.vertex_count())
                        .context("unusable --precolor")?,
                    None => vec![None; g.vertex_count()],
                };
                let solution = solve(g, &profile, &fixed)?;
                all_colorable &= solution.is_some();
                let mut record = GraphRecord::new(g);
                record.solve = Some(SolveReport::new(&profile, &solution));
                timed(&mut record, started);
                records.push(record);
            }
            print_records(records)?;
            Ok(all_colorable)
        }
        Command::Verify { file, coloring, profile } => {
            let graphs = read_graphs(&file)?;
            let text = std::fs::read_to_string(&coloring)
                .with_context(|| format!("cannot read {}", coloring.display()))?;
            let lines: Vec<&str> = text.lines().collect();
            if lines.len() != graphs.len() {
                bail!(
                    "{} colorings for {} graphs",
                    lines.len(),
                    graphs.len()
                );
            }
            let mut all_valid = true;
            let mut records = Vec::new();
            for (g, line) in graphs.iter().zip(lines) {
                let started = Instant::now();
                let coloring = parse_coloring(&line.replace(',', " "), g.vertex_count())
                    .context("unusable coloring line")?;
                let violations = verify(g, &profile, &coloring)?;
                all_valid &= violations.is_empty();
                let mut record = GraphRecord::new(g);
                record.verify = Some(VerifyReport::new(&profile, violations));
                timed(&mut record, started);
                records.push(record);
            }
            print_records(records)?;
            Ok(all_valid)
        }
        Command::Discharge { file, rules, audit: full_audit, log_transfers } => {
            let graphs = read_graphs(&file)?;
            let mut all_clean = true;
            let mut records = Vec::new();
            for g in &graphs {
                let started = Instant::now();
                let report = audit(g, rules);
                let ledger = apply_rules(g, rules);
                all_clean &= report.conserved && report.all_bounds_hold();
                let mut record = GraphRecord::new(g);
                record.discharge =
                    Some(DischargeReport::new(&report, &ledger, full_audit, log_transfers));
                timed(&mut record, started);
                records.push(record);
            }
            print_records(records)?;
            Ok(all_clean)
        }
        Command::Scan { file, profile } => {
            let graphs = read_graphs(&file)?;
            let mut records = Vec::new();
            for g in &graphs {
                let started = Instant::now();
                let matches = scan(g, profile);
                let mut record = GraphRecord::new(g);
                record.scan = Some(ScanReport {
                    scope: match profile {
                        ScanScope::For110 => "110",
                        ScanScope::For300 => "300",
                        ScanScope::Both => "both",
                    }
                    .to_string(),
                    matches: matches.iter().map(MatchReport::new).collect(),
                });
                timed(&mut record, started);
                records.push(record);
            }
            print_records(records)?;
            Ok(true)
        }
        Command::Oracle { file, cap } => {
            let graphs = read_graphs(&file)?;
            let records: Vec<(GraphRecord, bool)> = graphs
                .par_iter()
                .map(|g| -> Result<(GraphRecord, bool)> {
                    let started = Instant::now();
                    let mut outcomes = Vec::new();
                    for m in scan(g, ScanScope::Both) {
                        let mut profiles = Vec::new();
                        if m.config.for_110() {
                            profiles.push(DefectProfile::d110());
                        }
                        if m.config.for_300() {
                            profiles.push(DefectProfile::d300());
                        }
                        for profile in profiles {
                            let verdict = match test_reducibility(g, &m, &profile, cap) {
                                Ok(v) => verdict_str(v).to_string(),
                                Err(e) => format!("skipped: {e}"),
                            };
                            outcomes.push(OracleOutcome {
                                config: m.config.name().to_string(),
                                profile: discharge_lab::report::profile_str(&profile),
                                deletion_set: m.h.iter().copied().collect(),
                                verdict,
                            });
                        }
                    }
                    let oracle = OracleReport::new(cap, outcomes);
                    let clean = oracle.clean;
                    let mut record = GraphRecord::new(g);
                    record.oracle = Some(oracle);
                    timed(&mut record, started);
                    Ok((record, clean))
                })
                .collect::<Result<_>>()?;
            let all_clean = records.iter().all(|(_, clean)| *clean);
            print_records(records.into_iter().map(|(r, _)| r).collect())?;
            Ok(all_clean)
        }
        Command::Theorem { corpus } => {
            let graphs = CorpusSpec::parse(&corpus)?.load()?;
            let records: Vec<(GraphRecord, bool)> = graphs
                .par_iter()
                .map(|g| -> Result<(GraphRecord, bool)> {
                    let started = Instant::now();
                    let blank = vec![None; g.vertex_count()];
                    let mut record = GraphRecord::new(g);
                    let (theorem, holds) = if g.in_class() {
                        let c110 = solve(g, &DefectProfile::d110(), &blank)?.is_some();
                        let c300 = solve(g, &DefectProfile::d300(), &blank)?.is_some();
                        (
                            TheoremReport {
                                in_class: true,
                                colorable_110: Some(c110),
                                colorable_300: Some(c300),
                                holds: Some(c110 && c300),
                            },
                            c110 && c300,
                        )
                    } else {
                        (
                            TheoremReport {
                                in_class: false,
                                colorable_110: None,
                                colorable_300: None,
                                holds: None,
                            },
                            true,
                        )
                    };
                    record.theorem = Some(theorem);
                    timed(&mut record, started);
                    Ok((record, holds))
                })
                .collect::<Result<_>>()?;
            let all_hold = records.iter().all(|(_, holds)| *holds);
            print_records(records.into_iter().map(|(r, _)| r).collect())?;
            Ok(all_hold)
        }
        Command::Gen { n_min, n_max, count, seed, no_filter } => {
            let graphs = generate(&GenSpec {
                n_min,
                n_max,
                count,
                seed,
                filter: !no_filter,
            })?;
            emit(|out| out.write_all(&encode_graphs(&graphs, true)))?;
            Ok(true)
        }
    }
}
