//! Exact `s(F, K, Z)` by pruned backtracking.

mod search;

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bounds::{lower_bound, max_multiplicity, min_share_demand, share_capacity};
use crate::error::{PdaError, Result};
use crate::grid::{check_fkz, PdaGrid};
use crate::known::{best_known_s, KnownS, KnownValue};
use crate::verify::verify;
use search::{Cut, Flow, Limits, Problem, Search, State};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
    pub thread_hint: usize,
}

impl SearchBudget {
    pub fn new(node_limit: u64, time_limit: Duration, thread_hint: usize) -> Result<Self> {
        if node_limit == 0 || time_limit.is_zero() || thread_hint == 0 {
            return Err(PdaError::InvalidArgument("budget limits must be positive".into()));
        }
        Ok(Self {
            node_limit,
            time_limit,
            thread_hint,
        })
    }

    pub fn with_threads(self, thread_hint: usize) -> Self {
        Self {
            thread_hint: thread_hint.max(1),
            ..self
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            node_limit: 20_000_000_000,
            time_limit: Duration::from_secs(60),
            thread_hint: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

/// Answer of a single feasibility search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Existence {
    Found(PdaGrid),
    /// No array exists; the string names the argument.
    Infeasible(String),
    Timeout,
}

#[derive(Clone, Debug)]
pub struct ExistsOutcome {
    pub existence: Existence,
    pub nodes: u64,
    /// How often each pruning rule fired.
    pub cuts: Vec<(&'static str, u64)>,
}

impl ExistsOutcome {
    pub fn witness(&self) -> Option<&PdaGrid> {
        match &self.existence {
            Existence::Found(g) => Some(g),
            _ => None,
        }
    }

    fn root(existence: Existence) -> Self {
        Self {
            existence,
            nodes: 0,
            cuts: Vec::new(),
        }
    }
}

/// Is there a PDA`(F, K, Z)` with at most `s` symbols?
///
/// The witness is the first one in search order, which does not depend on
/// the thread count. Its symbols are numbered by first use, column-major.
pub fn exists_pda(f: usize, k: usize, z: usize, s: usize, budget: &SearchBudget) -> Result<ExistsOutcome> {
    check_fkz(f, k, z)?;
    if f > 31 {
        return Err(PdaError::InvalidArgument(format!(
            "search supports at most 31 rows, got {f}"
        )));
    }
    if z == f {
        let grid = PdaGrid::empty(f, k)?;
        return Ok(ExistsOutcome::root(Existence::Found(grid)));
    }
    let per_col = f - z;
    if s < per_col {
        return Ok(ExistsOutcome::root(Existence::Infeasible(format!(
            "a column needs {per_col} distinct symbols"
        ))));
    }
    let cap = max_multiplicity(f, k, z, s);
    let cells = k * per_col;
    if s * cap < cells {
        return Ok(ExistsOutcome::root(Existence::Infeasible(format!(
            "multiplicity at most {cap}, {s} symbols cover {} < {cells} cells",
            s * cap
        ))));
    }
    let share_cap = share_capacity(f, k, z);
    if let Some(demand) = min_share_demand(cells, s, cap) {
        if demand > share_cap {
            return Ok(ExistsOutcome::root(Existence::Infeasible(format!(
                "shares needed {demand} exceed capacity {share_cap}"
            ))));
        }
    }
    let problem = Problem::new(f, k, z, s, cap);
    let limits = Limits {
        node_limit: budget.node_limit,
        deadline: Instant::now().checked_add(budget.time_limit),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
    };
    let (flow, grid, cuts) = run_search(&problem, &limits, budget.thread_hint)?;
    let existence = match flow {
        Flow::Found => {
            let grid = grid.expect("found carries a grid");
            let report = verify(&grid, None);
            if !report.valid || grid.symbol_count() > s {
                return Err(PdaError::InvalidGrid(Box::new(report)));
            }
            Existence::Found(grid)
        }
        Flow::Exhausted => Existence::Infeasible("exhausted search".into()),
        Flow::Stopped => Existence::Timeout,
    };
    Ok(ExistsOutcome {
        existence,
        nodes: limits.nodes.load(Ordering::Relaxed),
        cuts: Cut::ALL.iter().map(|c| (c.name(), cuts[*c as usize])).collect(),
    })
}

fn run_search(p: &Problem, limits: &Limits, threads: usize) -> Result<(Flow, Option<PdaGrid>, [u64; 4])> {
    let mut root = State::root(p);
    let mut cuts = [0u64; 4];
    let add = |cuts: &mut [u64; 4], st: &State| {
        for (a, b) in cuts.iter_mut().zip(st.cuts) {
            *a += b;
        }
    };
    if threads <= 1 || p.k <= 3 {
        let flow = Search::new(p, limits, None).run(&mut root);
        add(&mut cuts, &root);
        let grid = (flow == Flow::Found).then(|| root.to_grid(p));
        return Ok((flow, grid, cuts));
    }
    // Split the tree into subtrees, in search order, until there are enough
    // to keep every thread busy.
    let mut tasks = vec![root];
    let mut level = 1;
    while tasks.len() < 32 * threads && level + 2 < p.k {
        level += 1;
        let mut next = Vec::new();
        for mut st in tasks {
            let mut s = Search::new(p, limits, Some(level));
            if s.run(&mut st) == Flow::Stopped {
                return Ok((Flow::Stopped, None, cuts));
            }
            add(&mut cuts, &st);
            next.append(&mut s.collected);
        }
        tasks = next;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| PdaError::InvalidArgument(format!("thread pool: {e}")))?;
    let fired: Vec<AtomicU64> = (0..4).map(|_| AtomicU64::new(0)).collect();
    let first = pool.install(|| {
        tasks.into_par_iter().find_map_first(|mut st| {
            let flow = Search::new(p, limits, None).run(&mut st);
            for (a, b) in fired.iter().zip(st.cuts) {
                a.fetch_add(b, Ordering::Relaxed);
            }
            match flow {
                Flow::Exhausted => None,
                Flow::Found => Some((Flow::Found, Some(st.to_grid(p)))),
                Flow::Stopped => Some((Flow::Stopped, None)),
            }
        })
    });
    for (a, b) in cuts.iter_mut().zip(&fired) {
        *a += b.load(Ordering::Relaxed);
    }
    Ok(match first {
        Some((flow, grid)) => (flow, grid, cuts),
        None => (Flow::Exhausted, None, cuts),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Exact,
    LowerBoundOnly,
    Timeout,
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolveStatus::Exact => "exact",
            SolveStatus::LowerBoundOnly => "lower-bound-only",
            SolveStatus::Timeout => "timeout",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub f: usize,
    pub k: usize,
    pub z: usize,
    pub status: SolveStatus,
    pub s_min: Option<usize>,
    /// Largest `s` such that no array with fewer symbols exists.
    pub proven_lower: usize,
    pub witness: Option<PdaGrid>,
    pub nodes_explored: u64,
    /// One line per ruled-out `s`, then the outcome at the last `s` tried.
    pub certificate: Vec<String>,
}

impl fmt::Display for SolveResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F={} K={} Z={}", self.f, self.k, self.z)?;
        writeln!(f, "status: {}", self.status)?;
        match self.s_min {
            Some(s) => writeln!(f, "s_min: {s}")?,
            None => writeln!(f, "s >= {}", self.proven_lower)?,
        }
        writeln!(f, "nodes: {}", self.nodes_explored)?;
        for line in &self.certificate {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

fn cut_summary(cuts: &[(&str, u64)]) -> String {
    let fired: Vec<String> = cuts
        .iter()
        .filter(|c| c.1 > 0)
        .map(|(n, c)| format!("{n} {c}"))
        .collect();
    if fired.is_empty() {
        String::new()
    } else {
        format!("; cuts: {}", fired.join(", "))
    }
}

/// Smallest `s` admitting a PDA`(F, K, Z)`, counting up from the lower bound.
///
/// The node and time limits cover the whole call.
pub fn min_s_exact(f: usize, k: usize, z: usize, budget: &SearchBudget) -> Result<SolveResult> {
    check_fkz(f, k, z)?;
    let mut res = SolveResult {
        f,
        k,
        z,
        status: SolveStatus::Timeout,
        s_min: None,
        proven_lower: 0,
        witness: None,
        nodes_explored: 0,
        certificate: Vec::new(),
    };
    if z == f {
        res.status = SolveStatus::Exact;
        res.s_min = Some(0);
        res.witness = Some(PdaGrid::empty(f, k)?);
        res.certificate.push("s = 0: every cell empty".into());
        return Ok(res);
    }
    let bound = lower_bound(f, k, z)?;
    res.proven_lower = bound.value;
    if bound.value > 0 {
        res.certificate
            .push(format!("s < {}: {} bound", bound.value, bound.source));
    }
    let start = Instant::now();
    let mut s = bound.value.max(1);
    loop {
        let elapsed = start.elapsed();
        if res.nodes_explored >= budget.node_limit || elapsed >= budget.time_limit {
            res.certificate.push(format!("s = {s}: budget spent"));
            break;
        }
        let step = SearchBudget {
            node_limit: budget.node_limit - res.nodes_explored,
            time_limit: budget.time_limit - elapsed,
            thread_hint: budget.thread_hint,
        };
        let out = exists_pda(f, k, z, s, &step)?;
        res.nodes_explored += out.nodes;
        let cuts = cut_summary(&out.cuts);
        match out.existence {
            Existence::Found(grid) => {
                res.certificate
                    .push(format!("s = {s}: witness found ({} nodes)", out.nodes));
                res.status = SolveStatus::Exact;
                res.s_min = Some(s);
                res.proven_lower = s;
                res.witness = Some(grid);
                break;
            }
            Existence::Infeasible(why) => {
                res.certificate
                    .push(format!("s = {s}: {why} ({} nodes{cuts})", out.nodes));
                res.proven_lower = s + 1;
                res.status = SolveStatus::LowerBoundOnly;
                s += 1;
            }
            Existence::Timeout => {
                res.certificate
                    .push(format!("s = {s}: timeout after {} nodes{cuts}", out.nodes));
                break;
            }
        }
    }
    Ok(res)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Agrees,
    Disagrees,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Agrees => "agrees",
            Verdict::Disagrees => "disagrees",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ClaimVerdict {
    pub provenance: &'static str,
    pub claimed: KnownS,
    pub verdict: Verdict,
}

/// A solver run set against every claim on record. The oracle itself is
/// left untouched.
#[derive(Clone, Debug)]
pub struct Adjudication {
    pub known: Option<KnownValue>,
    pub solve: SolveResult,
    pub verdicts: Vec<ClaimVerdict>,
}

impl Adjudication {
    pub fn conclusive(&self) -> bool {
        self.solve.status == SolveStatus::Exact
    }
}

impl fmt::Display for Adjudication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.solve;
        writeln!(f, "F={} K={} Z={}", r.f, r.k, r.z)?;
        match &self.known {
            Some(v) => {
                writeln!(f, "oracle: {} [{}]", v.s, v.provenance)?;
                if let Some(note) = &v.conflict_note {
                    writeln!(f, "note: {note}")?;
                }
            }
            None => writeln!(f, "oracle: none")?,
        }
        match r.s_min {
            Some(s) => writeln!(f, "solver: exact {s}")?,
            None => writeln!(f, "solver: {} (s >= {})", r.status, r.proven_lower)?,
        }
        for v in &self.verdicts {
            writeln!(f, "{}\t{}\t{}", v.provenance, v.claimed, v.verdict)?;
        }
        Ok(())
    }
}

fn judge(claimed: KnownS, solve: &SolveResult) -> Verdict {
    match solve.s_min {
        Some(s) if claimed.lo() <= s && s <= claimed.hi() => Verdict::Agrees,
        Some(_) => Verdict::Disagrees,
        None if claimed.hi() < solve.proven_lower => Verdict::Disagrees,
        None => Verdict::Inconclusive,
    }
}

pub fn adjudicate(f: usize, k: usize, z: usize, budget: &SearchBudget) -> Result<Adjudication> {
    let solve = min_s_exact(f, k, z, budget)?;
    let verdicts = crate::known::claims(f, k, z)
        .into_iter()
        .map(|c| ClaimVerdict {
            provenance: c.provenance,
            claimed: c.value,
            verdict: judge(c.value, &solve),
        })
        .collect();
    Ok(Adjudication {
        known: best_known_s(f, k, z),
        solve,
        verdicts,
    })
}
