//! The `pda` command line.
//!
//! Exit codes: 0 success, 1 a negative answer (invalid array, failed decode,
//! undecided search), 2 bad usage or unreadable input.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::time::Duration;

use clap::{Parser, Subcommand};

use crate::bounds::{lower_bound, lower_bound_basic, lower_bound_frequency, lower_bound_full_rows, lower_bound_nested};
use crate::constructions::{build_named, family_builder};
use crate::error::{PdaError, Result};
use crate::format::{read_pda_file, write_pda};
use crate::grid::{check_fkz, PdaGrid};
use crate::known::best_known_s;
use crate::sim::{run_scheme, ServerDb, DEFAULT_PACKET_LEN};
use crate::solver::{adjudicate, min_s_exact, SearchBudget, SolveStatus};
use crate::verify::verify;

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Parser)]
#[command(name = "pda", version, about = "Placement delivery arrays for coded caching")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a PDA(F, K, Z) and print it.
    Construct {
        f: usize,
        k: usize,
        z: usize,
        /// Recipe name, or `fixed:<id>` for a catalog array.
        #[arg(long)]
        method: Option<String>,
    },
    /// Check a PDA file (`-` for standard input).
    Verify { path: String },
    /// Print every lower bound and the known value.
    Bound { f: usize, k: usize, z: usize },
    /// Compute s(F, K, Z) by exhaustive search.
    Solve {
        f: usize,
        k: usize,
        z: usize,
        /// e.g. `nodes=1000000,time=30,threads=4`; time in seconds or with an `ms` suffix.
        #[arg(long, value_parser = parse_budget)]
        budget: Option<SearchBudget>,
    },
    /// Run the caching scheme of a PDA file with N files.
    Simulate {
        path: String,
        n: usize,
        /// Comma-separated 0-based file index per node; defaults to node k asking for file k mod N.
        #[arg(long, value_delimiter = ',')]
        demands: Option<Vec<usize>>,
        /// Database seed; the PDA_SEED environment variable overrides the default.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_PACKET_LEN)]
        packet_len: usize,
    },
    /// Known values of s as tab-separated lines.
    Table {
        /// One of the names printed by `table list`; all families when omitted.
        family: Option<String>,
    },
    /// Compare an exact search with every recorded claim.
    Adjudicate {
        f: usize,
        k: usize,
        z: usize,
        #[arg(long, value_parser = parse_budget)]
        budget: Option<SearchBudget>,
    },
}

fn parse_duration(v: &str) -> std::result::Result<Duration, String> {
    let (num, scale) = match v.strip_suffix("ms") {
        Some(n) => (n, 1),
        None => (v.strip_suffix('s').unwrap_or(v), 1000),
    };
    num.parse::<u64>()
        .map(|n| Duration::from_millis(n * scale))
        .map_err(|_| format!("bad duration `{v}`"))
}

pub fn parse_budget(text: &str) -> std::result::Result<SearchBudget, String> {
    let mut b = SearchBudget::default();
    for part in text.split(',').filter(|p| !p.is_empty()) {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        let bad = |_| format!("bad value for {key}: `{val}`");
        match key {
            "nodes" => b.node_limit = val.parse().map_err(bad)?,
            "time" => b.time_limit = parse_duration(val)?,
            "threads" => b.thread_hint = val.parse().map_err(bad)?,
            _ => return Err(format!("unknown budget key `{key}`")),
        }
    }
    SearchBudget::new(b.node_limit, b.time_limit, b.thread_hint).map_err(|e| e.to_string())
}

/// `(name, instances)` for `table`.
pub type Family = (&'static str, Vec<(usize, usize, usize)>);

pub fn table_families() -> Vec<Family> {
    vec![
        ("f4k3", (4..=20).map(|f| (f, 4, 3)).collect()),
        ("s66", (1..=5).map(|z| (6, 6, z)).collect()),
        ("s77", (1..=6).map(|z| (7, 7, z)).collect()),
        ("4k2", (1..=24).map(|k| (4, k, 2)).collect()),
        ("5k3", (1..=20).map(|k| (5, k, 3)).collect()),
        ("5k2", (3..=20).map(|k| (5, k, 2)).collect()),
        ("ff2", (3..=15).map(|f| (f, f, 2)).collect()),
        ("3t", (1..=5).map(|t| (3 * t, 3 * t, 3 * t - 2)).collect()),
        ("blow-up", vec![(8, 8, 5), (8, 12, 6), (10, 20, 8), (12, 12, 9)]),
    ]
}

/// Tab-separated rows `family F K Z s provenance note`.
pub fn table(family: Option<&str>) -> Result<String> {
    let families = table_families();
    let chosen: Vec<_> = match family {
        None => families.iter().collect(),
        Some(name) => {
            let hit: Vec<_> = families.iter().filter(|(n, _)| *n == name).collect();
            if hit.is_empty() {
                let names: Vec<&str> = families.iter().map(|(n, _)| *n).collect();
                return Err(PdaError::InvalidArgument(format!(
                    "unknown family `{name}`; choose from {}",
                    names.join(", ")
                )));
            }
            hit
        }
    };
    let mut out = String::from("family\tF\tK\tZ\ts\tprovenance\tnote\n");
    for (name, rows) in chosen {
        for &(f, k, z) in rows {
            let (s, prov, note) = match best_known_s(f, k, z) {
                Some(v) => (
                    v.s.to_string(),
                    v.provenance,
                    v.conflict_note.unwrap_or_else(|| "-".into()),
                ),
                None => ("?".into(), "-".into(), "-".into()),
            };
            out.push_str(&format!("{name}\t{f}\t{k}\t{z}\t{s}\t{prov}\t{note}\n"));
        }
    }
    Ok(out)
}

fn read_input(path: &str) -> io::Result<Vec<u8>> {
    if path == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read(path)
    }
}

fn load(path: &str) -> std::result::Result<crate::format::PdaFile, String> {
    let bytes = read_input(path).map_err(|e| format!("{path}: {e}"))?;
    read_pda_file(&bytes).map_err(|e| format!("{path}: {e}"))
}

fn bound_report(f: usize, k: usize, z: usize) -> Result<String> {
    let mut out = String::new();
    let basic = lower_bound_basic(f, k, z)?;
    out.push_str(&format!("basic\t{}\n", basic.value));
    if z < f {
        out.push_str(&format!("nested\t{}\n", lower_bound_nested(f, k, z)?.value));
        let freq = lower_bound_frequency(f, z);
        out.push_str(&format!(
            "frequency-conditional\t{}\t{}\n",
            freq.value,
            freq.assumptions.join("; ")
        ));
    }
    let sub = |r: usize| {
        if z < r {
            lower_bound(r, k, z).map_or(0, |b| b.value)
        } else {
            0
        }
    };
    if let Some(b) = lower_bound_full_rows(f, k, z, sub)? {
        out.push_str(&format!("full-rows\t{}\n", b.value));
    }
    out.push_str(&format!("lower\t{}\n", lower_bound(f, k, z)?.value));
    match best_known_s(f, k, z) {
        Some(v) => {
            out.push_str(&format!("known\t{}\t{}\n", v.s, v.provenance));
            if let Some(note) = v.conflict_note {
                out.push_str(&format!("note\t{note}\n"));
            }
        }
        None => out.push_str("known\t?\n"),
    }
    Ok(out)
}

fn seed_from_env() -> std::result::Result<u64, String> {
    match std::env::var("PDA_SEED") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("PDA_SEED is not an integer: `{v}`")),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// exit code.
/// Output closed early, as in `pda table | head`.
const CLOSED: &str = "output closed";

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(msg) if msg == CLOSED => 0,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> std::result::Result<i32, String> {
    let io = |e: io::Error| {
        if e.kind() == io::ErrorKind::BrokenPipe {
            CLOSED.to_owned()
        } else {
            e.to_string()
        }
    };
    match cmd {
        Command::Construct { f, k, z, method } => {
            check_fkz(f, k, z).map_err(|e| e.to_string())?;
            let (grid, prov) = match method {
                Some(m) => build_named(&m, f, k, z).map_err(|e| e.to_string())?,
                None => match family_builder(f, k, z) {
                    Some(built) => built,
                    None => {
                        writeln!(out, "# no construction for ({f}, {k}, {z})").map_err(io)?;
                        return Ok(1);
                    }
                },
            };
            writeln!(
                out,
                "# method={} s={} optimality={}",
                prov.name, prov.claimed_s, prov.optimality
            )
            .map_err(io)?;
            out.write_all(&write_pda(&grid)).map_err(io)?;
            Ok(0)
        }
        Command::Verify { path } => {
            let file = load(&path)?;
            let report = verify(&file.grid, Some(&file.header));
            write!(out, "{report}").map_err(io)?;
            Ok(if report.valid { 0 } else { 1 })
        }
        Command::Bound { f, k, z } => {
            check_fkz(f, k, z).map_err(|e| e.to_string())?;
            out.write_all(bound_report(f, k, z).map_err(|e| e.to_string())?.as_bytes())
                .map_err(io)?;
            Ok(0)
        }
        Command::Solve { f, k, z, budget } => {
            let res = min_s_exact(f, k, z, &budget.unwrap_or_default()).map_err(|e| e.to_string())?;
            write!(out, "{res}").map_err(io)?;
            if let Some(w) = &res.witness {
                out.write_all(&write_pda(w)).map_err(io)?;
            }
            Ok(if res.status == SolveStatus::Exact { 0 } else { 1 })
        }
        Command::Simulate {
            path,
            n,
            demands,
            seed,
            packet_len,
        } => {
            let file = load(&path)?;
            let report = verify(&file.grid, Some(&file.header));
            if !report.valid {
                return Err(format!("{path}: {}", report.summary()));
            }
            let seed = match seed {
                Some(s) => s,
                None => seed_from_env()?,
            };
            let grid: PdaGrid = file.grid;
            let demands = demands.unwrap_or_else(|| (0..grid.cols()).map(|k| k % n.max(1)).collect());
            let db = ServerDb::random(n, grid.rows(), packet_len, seed).map_err(|e| e.to_string())?;
            let run = run_scheme(&grid, &db, &demands).map_err(|e| e.to_string())?;
            write!(out, "{}", run.manifest()).map_err(io)?;
            Ok(if run.all_decoded() { 0 } else { 1 })
        }
        Command::Table { family } => {
            if family.as_deref() == Some("list") {
                for (name, _) in table_families() {
                    writeln!(out, "{name}").map_err(io)?;
                }
                return Ok(0);
            }
            let t = table(family.as_deref()).map_err(|e| e.to_string())?;
            out.write_all(t.as_bytes()).map_err(io)?;
            Ok(0)
        }
        Command::Adjudicate { f, k, z, budget } => {
            let a = adjudicate(f, k, z, &budget.unwrap_or_default()).map_err(|e| e.to_string())?;
            write!(out, "{a}").map_err(io)?;
            Ok(if a.conclusive() { 0 } else { 1 })
        }
    }
}
