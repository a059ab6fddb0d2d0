//! Column-by-column backtracking for `exists_pda`.
//!
//! Symmetry breaking. Let the occupancy pattern of a grid be its 0/1 matrix
//! with 1 for empty. Among all row and column permutations, the one with the
//! lexicographically smallest row-major occupancy string has both its rows
//! and its columns in nondecreasing lexicographic order: swapping an
//! out-of-order adjacent pair would make that string smaller. So we may
//! require
//!
//! * columns nondecreasing, read top to bottom (which forces the first column
//!   to be `[symbols.., empties..]`);
//! * adjacent rows that agree on every placed column to stay ordered;
//! * symbol ids assigned in first-use order, column-major.
//!
//! Columns with equal empty sets have equal occupancy, so they can be
//! permuted freely. No symbol can sit in two of them, which makes the vector
//! "old symbol id, or infinity for a symbol introduced inside the run" a
//! rename-invariant key; runs of equal columns are kept sorted by it.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use crate::grid::{Cell, PdaGrid};

pub(crate) const FRESH: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Cut {
    Capacity,
    DeadSymbols,
    Uncovered,
    RowOrder,
}

impl Cut {
    pub(crate) const ALL: [Cut; 4] = [Cut::Capacity, Cut::DeadSymbols, Cut::Uncovered, Cut::RowOrder];

    pub(crate) fn name(self) -> &'static str {
        match self {
            Cut::Capacity => "capacity",
            Cut::DeadSymbols => "dead-symbols",
            Cut::Uncovered => "uncovered-rows",
            Cut::RowOrder => "row-order",
        }
    }
}

/// Shared stop conditions.
pub(crate) struct Limits {
    pub node_limit: u64,
    pub deadline: Option<Instant>,
    pub nodes: AtomicU64,
    pub stop: AtomicBool,
}

impl Limits {
    /// Returns false once the budget is spent.
    fn charge(&self, local: &mut u64) -> bool {
        *local += 1;
        if *local & 1023 == 0 {
            let total = self.nodes.fetch_add(1024, Ordering::Relaxed) + 1024;
            if total >= self.node_limit {
                self.stop.store(true, Ordering::Relaxed);
            }
            if *local & 4095 == 0 {
                if let Some(d) = self.deadline {
                    if Instant::now() >= d {
                        self.stop.store(true, Ordering::Relaxed);
                    }
                }
            }
        }
        !self.stop.load(Ordering::Relaxed)
    }

    fn flush(&self, local: u64) {
        self.nodes.fetch_add(local & 1023, Ordering::Relaxed);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Flow {
    Found,
    Exhausted,
    Stopped,
}

#[derive(Clone, Copy, Debug, Default)]
struct Sym {
    rows: u32,
    allowed: u32,
    m: u32,
    first_col: u32,
    last_col: u32,
}

#[derive(Clone)]
pub(crate) struct Problem {
    pub f: usize,
    pub k: usize,
    pub z: usize,
    pub s: usize,
    pub cap: usize,
    /// All `Z`-subsets of rows, ascending by [`Problem::value`].
    empties: Vec<u32>,
}

impl Problem {
    pub(crate) fn new(f: usize, k: usize, z: usize, s: usize, cap: usize) -> Self {
        assert!(f <= 31 && z < f);
        let mut empties: Vec<u32> = (0u32..1 << f).filter(|m| m.count_ones() as usize == z).collect();
        let p = Self {
            f,
            k,
            z,
            s,
            cap,
            empties: Vec::new(),
        };
        empties.sort_by_key(|&e| p.value(e));
        Self { empties, ..p }
    }

    /// Reads row 0 as the most significant digit.
    fn value(&self, e: u32) -> u32 {
        e.reverse_bits() >> (32 - self.f)
    }
}

/// Search state. Cloned to hand subtrees to worker threads.
#[derive(Clone)]
pub(crate) struct State {
    /// `cells[c * F + r]`, 0 for empty.
    cells: Vec<u32>,
    empty: Vec<u32>,
    run_start: Vec<usize>,
    syms: Vec<Sym>,
    used: usize,
    tied: u32,
    /// Columns placed so far.
    pub depth: usize,
    pub cuts: [u64; 4],
    local_nodes: u64,
}

impl State {
    pub(crate) fn root(p: &Problem) -> Self {
        let (f, z) = (p.f, p.z);
        let mut st = Self {
            cells: vec![0; p.k * f],
            empty: vec![0; p.k],
            run_start: vec![0; p.k],
            syms: vec![Sym::default(); p.s + 1],
            used: 0,
            tied: (1u32 << (f - 1)) - 1,
            depth: 0,
            cuts: [0; 4],
            local_nodes: 0,
        };
        let e0: u32 = ((1u32 << z) - 1) << (f - z);
        st.apply_order(e0);
        st.empty[0] = e0;
        for r in 0..f - z {
            st.used += 1;
            let t = st.used;
            st.cells[r] = t as u32;
            st.syms[t] = Sym {
                rows: 1 << r,
                allowed: e0,
                m: 1,
                first_col: 0,
                last_col: 0,
            };
        }
        st.depth = 1;
        st
    }

    /// Updates the tie mask for a new column; false if rows fall out of order.
    fn apply_order(&mut self, e: u32) -> bool {
        let next = e >> 1;
        if self.tied & e & !next != 0 {
            return false;
        }
        self.tied &= e | !next;
        true
    }

    pub(crate) fn to_grid(&self, p: &Problem) -> PdaGrid {
        PdaGrid::from_fn(p.f, p.k, |r, c| match self.cells[c * p.f + r] {
            0 => Cell::Empty,
            t => Cell::Symbol(t),
        })
        .expect("positive dimensions")
    }
}

pub(crate) struct Search<'a> {
    pub p: &'a Problem,
    pub limits: &'a Limits,
    /// When set, stop at this depth and record the state instead of descending.
    pub split_at: Option<usize>,
    pub collected: Vec<State>,
}

impl<'a> Search<'a> {
    pub(crate) fn new(p: &'a Problem, limits: &'a Limits, split_at: Option<usize>) -> Self {
        Self {
            p,
            limits,
            split_at,
            collected: Vec::new(),
        }
    }

    pub(crate) fn run(&mut self, st: &mut State) -> Flow {
        let flow = self.column(st);
        self.limits.flush(st.local_nodes);
        flow
    }

    fn capacity_ok(&self, st: &mut State) -> bool {
        let p = self.p;
        let rem_cols = p.k - st.depth;
        if rem_cols == 0 {
            return true;
        }
        let need = rem_cols * (p.f - p.z);
        let last_v = p.value(st.empty[st.depth - 1]);
        let mut reach = 0usize;
        let mut dead_loss = 0usize;
        for t in 1..=st.used {
            let sy = st.syms[t];
            let m = sy.m as usize;
            if m >= p.cap {
                continue;
            }
            let r = (p.cap - m).min(rem_cols).min(sy.allowed.count_ones() as usize);
            if r == 0 {
                continue;
            }
            if self.alive(sy, last_v) {
                reach += r;
            } else {
                dead_loss += r;
            }
        }
        reach += (p.s - st.used) * p.cap.min(rem_cols);
        if reach >= need {
            return true;
        }
        let idx = if reach + dead_loss >= need {
            Cut::DeadSymbols
        } else {
            Cut::Capacity
        };
        st.cuts[idx as usize] += 1;
        false
    }

    /// Some later column (value at least `last_v`) could still take the symbol.
    fn alive(&self, sy: Sym, last_v: u32) -> bool {
        let p = self.p;
        let m = sy.rows.count_ones() as usize;
        if m > p.z {
            return false;
        }
        let a = 31 - sy.allowed.leading_zeros();
        let mut e = sy.rows;
        let mut need = p.z - m;
        for r in 0..p.f as u32 {
            if need == 0 {
                break;
            }
            if r != a && e & (1 << r) == 0 {
                e |= 1 << r;
                need -= 1;
            }
        }
        need == 0 && p.value(e) >= last_v
    }

    fn column(&mut self, st: &mut State) -> Flow {
        let p = self.p;
        let c = st.depth;
        if c == p.k {
            return Flow::Found;
        }
        if self.split_at == Some(c) {
            let mut task = st.clone();
            task.cuts = [0; 4];
            task.local_nodes = 0;
            self.collected.push(task);
            return Flow::Exhausted;
        }
        let prev = st.empty[c - 1];
        let start = p.empties.iter().position(|&e| e == prev).expect("listed");
        for &e in &p.empties[start..] {
            if !self.limits.charge(&mut st.local_nodes) {
                return Flow::Stopped;
            }
            let saved_tied = st.tied;
            if !st.apply_order(e) {
                st.cuts[Cut::RowOrder as usize] += 1;
                st.tied = saved_tied;
                continue;
            }
            st.empty[c] = e;
            st.run_start[c] = if e == prev { st.run_start[c - 1] } else { c };
            let cands: Vec<usize> = (1..=st.used)
                .filter(|&t| {
                    let sy = &st.syms[t];
                    (sy.m as usize) < p.cap && sy.rows & !e == 0
                })
                .collect();
            let rows: Vec<u32> = (0..p.f as u32).filter(|r| e & (1 << r) == 0).collect();
            let uncovered = rows
                .iter()
                .filter(|&&r| !cands.iter().any(|&t| st.syms[t].allowed & (1 << r) != 0))
                .count();
            let flow = if uncovered > p.s - st.used {
                st.cuts[Cut::Uncovered as usize] += 1;
                Flow::Exhausted
            } else {
                self.assign(st, c, &rows, 0, &cands, e == prev)
            };
            st.tied = saved_tied;
            match flow {
                Flow::Exhausted => {}
                other => return other,
            }
        }
        Flow::Exhausted
    }

    /// Key of a symbol within the run of equal columns starting at `run`.
    fn key(st: &State, t: u32, run: usize) -> u32 {
        if (st.syms[t as usize].first_col as usize) < run {
            t
        } else {
            FRESH
        }
    }

    fn assign(&mut self, st: &mut State, c: usize, rows: &[u32], i: usize, cands: &[usize], tie: bool) -> Flow {
        let p = self.p;
        if i == rows.len() {
            st.depth += 1;
            let flow = if self.capacity_ok(st) {
                self.column(st)
            } else {
                Flow::Exhausted
            };
            st.depth -= 1;
            return flow;
        }
        let r = rows[i];
        let bit = 1u32 << r;
        let run = st.run_start[c];
        let floor = if tie {
            Self::key(st, st.cells[(c - 1) * p.f + r as usize], run)
        } else {
            0
        };
        for &t in cands {
            let sy = st.syms[t];
            if sy.last_col as usize == c || sy.allowed & bit == 0 {
                continue;
            }
            let key = Self::key(st, t as u32, run);
            if key < floor {
                continue;
            }
            if !self.limits.charge(&mut st.local_nodes) {
                return Flow::Stopped;
            }
            let e = st.empty[c];
            st.syms[t] = Sym {
                rows: sy.rows | bit,
                allowed: sy.allowed & e,
                m: sy.m + 1,
                first_col: sy.first_col,
                last_col: c as u32,
            };
            st.cells[c * p.f + r as usize] = t as u32;
            let flow = self.assign(st, c, rows, i + 1, cands, tie && key == floor);
            if flow == Flow::Found {
                return flow;
            }
            st.cells[c * p.f + r as usize] = 0;
            st.syms[t] = sy;
            if flow != Flow::Exhausted {
                return flow;
            }
        }
        if st.used < p.s {
            if !self.limits.charge(&mut st.local_nodes) {
                return Flow::Stopped;
            }
            st.used += 1;
            let t = st.used;
            let e = st.empty[c];
            st.syms[t] = Sym {
                rows: bit,
                allowed: e,
                m: 1,
                first_col: c as u32,
                last_col: c as u32,
            };
            st.cells[c * p.f + r as usize] = t as u32;
            // a fresh symbol has the largest possible key
            let flow = self.assign(st, c, rows, i + 1, cands, tie && floor == FRESH);
            if flow == Flow::Found {
                return flow;
            }
            st.cells[c * p.f + r as usize] = 0;
            st.syms[t] = Sym::default();
            st.used -= 1;
            if flow != Flow::Exhausted {
                return flow;
            }
        }
        Flow::Exhausted
    }
}
