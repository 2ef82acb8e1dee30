//! `crosscap` — batch front end for verifying, evaluating, and enumerating
//! crossed graded Frobenius algebras with crosscap structure.
//!
//! Exit codes: `0` success / all checks passed, `1` a verification or relation
//! check failed, `2` input or parse error, `3` a search was refused as too
//! large. All inputs and outputs are the UTF-8 JSON formats of the core
//! library's codec.

use clap::{Parser, Subcommand};
use crosscap_core::algebra::AlgebraData;
use crosscap_core::census::{dedup_isomorphism, enumerate, CensusError, DEFAULT_SEARCH_BOUND};
use crosscap_core::cobordism::{
    evaluate, extract_underlying, relation_suite, surface_cross_check, surface_invariant,
};
use crosscap_core::codec;
use crosscap_core::{CensusQuery, GroupElement, RingDesc, SurfaceSpec, Tier};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "crosscap", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify an algebra file against one of the three axiom tiers.
    Verify {
        /// Path to the algebra JSON file.
        algebra: PathBuf,
        /// Axiom tier to check: frobenius, crossed, or extended.
        #[arg(long, default_value = "extended")]
        tier: String,
        /// Print the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a cobordism word to an exact matrix.
    Eval {
        /// Path to the algebra JSON file.
        algebra: PathBuf,
        /// Path to the word JSON file (a list of layers of generators).
        word: PathBuf,
    },
    /// Compute closed-surface invariants, singly or as a table.
    Invariant {
        /// Path to the algebra JSON file.
        algebra: PathBuf,
        /// Path to a surface JSON file (handles and crosscaps).
        #[arg(required_unless_present = "table", conflicts_with = "table")]
        surface: Option<PathBuf>,
        /// Tabulate all surfaces with handles + crosscaps ≤ N, under every
        /// label assignment, cross-checking each entry against its dual
        /// presentation.
        #[arg(long, value_name = "N")]
        table: Option<usize>,
        /// Acknowledge a table size beyond the default caps (N ≤ 4, at most
        /// 4 grades).
        #[arg(long)]
        allow_large: bool,
    },
    /// Enumerate all algebras with a given rank profile over a finite ring.
    Census {
        /// Coefficient ring, e.g. Z/5.
        #[arg(long)]
        ring: String,
        /// Number of generators of the grading group (inferred from --ranks
        /// when omitted).
        #[arg(long)]
        pi: Option<u8>,
        /// Comma-separated rank per grade, in label order, e.g. 1,1.
        #[arg(long)]
        ranks: String,
        /// Axiom tier the results must satisfy.
        #[arg(long, default_value = "extended")]
        tier: String,
        /// Directory to create and fill with one file per result plus a
        /// summary; must not already exist. Without it only the summary is
        /// printed.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
        /// Refuse searches larger than this many candidates.
        #[arg(long, value_name = "N", default_value_t = DEFAULT_SEARCH_BOUND)]
        max_search: u64,
    },
    /// Re-extract an algebra through the evaluator and run the relation suite.
    Roundtrip {
        /// Path to the algebra JSON file.
        algebra: PathBuf,
    },
}

/// Errors that abort a command: bad input (exit 2) or refused search (exit 3).
enum CliError {
    Input(String),
    Refused(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Refused(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Refused(m) => m,
        }
    }
}

fn input_err(context: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{context}: {e}"))
}

/// Writes to stdout, treating a vanished reader (broken pipe) as success: by
/// the time output is printed the command's outcome is already decided, and
/// `crosscap ... | head` must not look like a crash.
fn emit(text: std::fmt::Arguments) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    match out.write_fmt(text) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(input_err("stdout", e)),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| input_err(&path.display().to_string(), e))
}

fn load_algebra(path: &Path) -> Result<AlgebraData, CliError> {
    codec::parse_algebra(&read_file(path)?).map_err(|e| input_err(&path.display().to_string(), e))
}

fn parse_tier(text: &str) -> Result<Tier, CliError> {
    Tier::from_str(text).map_err(|e| input_err("--tier", e))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Verify { algebra, tier, json } => cmd_verify(&algebra, &tier, json),
        Command::Eval { algebra, word } => cmd_eval(&algebra, &word),
        Command::Invariant { algebra, surface, table, allow_large } => match (surface, table) {
            (Some(surface), None) => cmd_invariant(&algebra, &surface),
            (None, Some(n)) => cmd_table(&algebra, n, allow_large),
            _ => unreachable!("clap enforces exactly one of SURFACE and --table"),
        },
        Command::Census { ring, pi, ranks, tier, out, max_search } => {
            cmd_census(&ring, pi, &ranks, &tier, out.as_deref(), max_search)
        }
        Command::Roundtrip { algebra } => cmd_roundtrip(&algebra),
    }
}

fn cmd_verify(algebra: &Path, tier: &str, json: bool) -> Result<ExitCode, CliError> {
    let alg = load_algebra(algebra)?;
    let report = crosscap_core::axioms::verify(&alg, parse_tier(tier)?);
    if json {
        emit(format_args!("{}", codec::report_json(&report)))?;
    } else {
        emit(format_args!("{report}\n"))?;
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_eval(algebra: &Path, word: &Path) -> Result<ExitCode, CliError> {
    let alg = load_algebra(algebra)?;
    let word_text = read_file(word)?;
    let parsed = codec::parse_word(&word_text, alg.pi_rank())
        .map_err(|e| input_err(&word.display().to_string(), e))?;
    let map = evaluate(&alg, &parsed).map_err(|e| input_err("evaluation", e))?;
    emit(format_args!(
        "input:  {}\noutput: {}\nmatrix: {}\n",
        map.input, map.output, map.matrix
    ))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_invariant(algebra: &Path, surface: &Path) -> Result<ExitCode, CliError> {
    let alg = load_algebra(algebra)?;
    let text = read_file(surface)?;
    let presentation = codec::parse_surface(&text, alg.pi_rank())
        .map_err(|e| input_err(&surface.display().to_string(), e))?;
    let value = surface_invariant(&alg, &presentation).map_err(|e| input_err("evaluation", e))?;
    emit(format_args!("{}\n", alg.ring().format_scalar(&value)))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(algebra: &Path, n: usize, allow_large: bool) -> Result<ExitCode, CliError> {
    let alg = load_algebra(algebra)?;
    let labels: Vec<GroupElement> = alg.grades().collect();
    if !allow_large && (n > 4 || labels.len() > 4) {
        return Err(CliError::Refused(format!(
            "a table of complexity {n} over {} grades exceeds the default caps \
             (N ≤ 4, at most 4 grades); pass --allow-large to acknowledge the size",
            labels.len()
        )));
    }
    let ring = alg.ring();
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    let mut mismatches = 0usize;
    'rows: for handles in 0..=n {
        for crosscaps in 0..=(n - handles) {
            let slots = 2 * handles + crosscaps;
            let assignments = (labels.len() as u64)
                .checked_pow(slots as u32)
                .ok_or_else(|| {
                    CliError::Refused(format!(
                        "the table would contain more than u64::MAX entries at \
                         {handles} handles and {crosscaps} crosscaps"
                    ))
                })?;
            for idx in 0..assignments {
                let mut digits = idx;
                let mut next = || {
                    let l = labels[(digits % labels.len() as u64) as usize];
                    digits /= labels.len() as u64;
                    l
                };
                let entry = SurfaceSpec {
                    handles: (0..handles).map(|_| (next(), next())).collect(),
                    crosscaps: (0..crosscaps).map(|_| next()).collect(),
                };
                let (direct, dual) =
                    surface_cross_check(&alg, &entry).map_err(|e| input_err("evaluation", e))?;
                let handles_text: Vec<String> = entry
                    .handles
                    .iter()
                    .map(|(a, b)| format!("({a}, {b})"))
                    .collect();
                let crosscaps_text: Vec<String> =
                    entry.crosscaps.iter().map(|g| g.to_string()).collect();
                let marker = if direct == dual {
                    String::new()
                } else {
                    mismatches += 1;
                    format!("  MISMATCH: dual presentation gives {}", ring.format_scalar(&dual))
                };
                let row = format!(
                    "handles=[{}] crosscaps=[{}] invariant={}{marker}",
                    handles_text.join(", "),
                    crosscaps_text.join(", "),
                    ring.format_scalar(&direct)
                );
                match writeln!(out, "{row}") {
                    Ok(()) => {}
                    // The reader went away (e.g. piped into `head`); stop
                    // producing rows but still report the status seen so far.
                    Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => break 'rows,
                    Err(e) => return Err(input_err("stdout", e)),
                }
            }
        }
    }
    let _ = out.flush();
    if mismatches > 0 {
        eprintln!("{mismatches} dual cross-check(s) disagreed");
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_census(
    ring: &str,
    pi: Option<u8>,
    ranks: &str,
    tier: &str,
    out: Option<&Path>,
    max_search: u64,
) -> Result<ExitCode, CliError> {
    let ring = RingDesc::from_str(ring).map_err(|e| input_err("--ring", e))?;
    let ranks: Vec<usize> = ranks
        .split(',')
        .map(|part| part.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| input_err("--ranks", e))?;
    let inferred = ranks.len().trailing_zeros() as u8;
    if ranks.len() != 1usize << inferred {
        return Err(CliError::Input(format!(
            "--ranks: expected one rank per grade (a power of two), found {}",
            ranks.len()
        )));
    }
    let pi_rank = pi.unwrap_or(inferred);
    if pi_rank != inferred {
        return Err(CliError::Input(format!(
            "--pi {pi_rank} expects {} ranks, but --ranks lists {}",
            1u64 << pi_rank,
            ranks.len()
        )));
    }
    let query = CensusQuery {
        ring,
        pi_rank,
        ranks,
        tier: parse_tier(tier)?,
    };

    let start = Instant::now();
    let results = enumerate(&query, max_search).map_err(census_err)?;
    let deduped = dedup_isomorphism(&results, max_search).map_err(census_err)?;
    let elapsed_ms = start.elapsed().as_millis();
    let summary =
        codec::census_summary_json(&query, results.len() as u64, deduped.len() as u64, elapsed_ms);

    if let Some(out) = out {
        // Everything is computed before anything is written, and the staging
        // directory is renamed into place in one step, so a failed run never
        // leaves a partial result set behind.
        let files: Vec<(String, String)> = results
            .iter()
            .enumerate()
            .map(|(i, alg)| (format!("algebra_{i:04}.json"), codec::serialize_algebra(alg)))
            .chain(std::iter::once(("summary.json".to_string(), summary.clone())))
            .collect();
        if out.exists() {
            return Err(CliError::Input(format!(
                "{}: already exists; refusing to overwrite",
                out.display()
            )));
        }
        let staging = out.with_file_name(format!(
            ".{}.staging-{}",
            out.file_name().map(|n| n.to_string_lossy()).unwrap_or_default(),
            std::process::id()
        ));
        let io = |e: std::io::Error| input_err(&staging.display().to_string(), e);
        std::fs::create_dir_all(&staging).map_err(io)?;
        for (name, content) in &files {
            std::fs::write(staging.join(name), content).map_err(io)?;
        }
        std::fs::rename(&staging, out).map_err(io)?;
    }
    emit(format_args!("{summary}"))?;
    Ok(ExitCode::SUCCESS)
}

fn census_err(e: CensusError) -> CliError {
    match e {
        CensusError::SearchSpaceTooLarge { .. } => CliError::Refused(e.to_string()),
        other => CliError::Input(other.to_string()),
    }
}

fn cmd_roundtrip(algebra: &Path) -> Result<ExitCode, CliError> {
    let alg = load_algebra(algebra)?;
    let extracted = extract_underlying(&alg);
    let matches = match &extracted {
        Ok(back) => {
            let ok = back == &alg;
            emit(format_args!(
                "extraction: {}\n",
                if ok { "matches the input" } else { "DIFFERS from the input" }
            ))?;
            ok
        }
        Err(e) => {
            emit(format_args!("extraction: failed ({e})\n"))?;
            false
        }
    };
    let report = relation_suite(&alg);
    emit(format_args!("{report}\n"))?;
    Ok(if matches && report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
