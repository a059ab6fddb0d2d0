//! A PDA run as a coded caching scheme: placement, XOR delivery, decoding.
//!
//! Files and nodes are 0-based. Each node decodes from its own cache and the
//! broadcast only.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{PdaError, Result};
use crate::grid::{Cell, PdaGrid, PdaParams};
use crate::verify::ensure_valid;

pub const DEFAULT_PACKET_LEN: usize = 64;

/// `N` files, each cut into `F` packets of equal length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ServerDb {
    files: Vec<Vec<u8>>,
    f: usize,
    packet_len: usize,
    seed: Option<u64>,
}

impl ServerDb {
    pub fn from_files(files: Vec<Vec<u8>>, f: usize) -> Result<Self> {
        let size = files.first().map_or(0, Vec::len);
        if files.is_empty() || f == 0 {
            return Err(PdaError::InvalidArgument(
                "need at least one file and one packet".into(),
            ));
        }
        if files.iter().any(|x| x.len() != size) {
            return Err(PdaError::InvalidArgument("files differ in size".into()));
        }
        if size == 0 || !size.is_multiple_of(f) {
            return Err(PdaError::InvalidArgument(format!(
                "file size {size} is not a positive multiple of F = {f}"
            )));
        }
        Ok(Self {
            files,
            f,
            packet_len: size / f,
            seed: None,
        })
    }

    /// Pseudorandom contents from `seed`.
    pub fn random(n: usize, f: usize, packet_len: usize, seed: u64) -> Result<Self> {
        if packet_len == 0 {
            return Err(PdaError::InvalidArgument("zero-length packets".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let files = (0..n)
            .map(|_| {
                let mut buf = vec![0u8; f * packet_len];
                rng.fill(&mut buf[..]);
                buf
            })
            .collect();
        let mut db = Self::from_files(files, f)?;
        db.seed = Some(seed);
        Ok(db)
    }

    pub fn n(&self) -> usize {
        self.files.len()
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn packet_len(&self) -> usize {
        self.packet_len
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn file(&self, i: usize) -> &[u8] {
        &self.files[i]
    }

    pub fn packet(&self, file: usize, row: usize) -> &[u8] {
        &self.files[file][row * self.packet_len..(row + 1) * self.packet_len]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeCache {
    /// Rows with an empty cell in this node's column.
    pub rows: Vec<usize>,
    /// `(file, row)` to packet.
    pub packets: BTreeMap<(usize, usize), Vec<u8>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CachePlacement {
    pub nodes: Vec<NodeCache>,
}

/// Fills every cache. Reads only the grid and the database.
pub fn place(grid: &PdaGrid, db: &ServerDb) -> Result<CachePlacement> {
    ensure_valid(grid)?;
    if db.f() != grid.rows() {
        return Err(PdaError::InvalidArgument(format!(
            "database has {} packets per file, grid has {} rows",
            db.f(),
            grid.rows()
        )));
    }
    let nodes = (0..grid.cols())
        .map(|k| {
            let rows: Vec<usize> = (0..grid.rows()).filter(|&j| grid.get(j, k).is_empty()).collect();
            let mut packets = BTreeMap::new();
            for file in 0..db.n() {
                for &j in &rows {
                    packets.insert((file, j), db.packet(file, j).to_vec());
                }
            }
            NodeCache { rows, packets }
        })
        .collect();
    Ok(CachePlacement { nodes })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodedPacket {
    pub symbol: u32,
    /// `(row, node)` of every cell holding the symbol.
    pub cells: Vec<(usize, usize)>,
    pub bytes: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BroadcastSet {
    pub packets: Vec<CodedPacket>,
}

fn check_demands(grid: &PdaGrid, db: &ServerDb, demands: &[usize]) -> Result<()> {
    if demands.len() != grid.cols() {
        return Err(PdaError::InvalidArgument(format!(
            "{} demands for {} nodes",
            demands.len(),
            grid.cols()
        )));
    }
    if let Some(d) = demands.iter().find(|&&d| d >= db.n()) {
        return Err(PdaError::InvalidArgument(format!(
            "demand {d} out of range for {} files",
            db.n()
        )));
    }
    Ok(())
}

fn xor_into(acc: &mut [u8], other: &[u8]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a ^= b;
    }
}

/// One coded packet per symbol, in symbol order.
pub fn deliver(grid: &PdaGrid, db: &ServerDb, demands: &[usize]) -> Result<BroadcastSet> {
    ensure_valid(grid)?;
    check_demands(grid, db, demands)?;
    let mut by_symbol: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for j in 0..grid.rows() {
        for k in 0..grid.cols() {
            if let Cell::Symbol(t) = grid.get(j, k) {
                by_symbol.entry(t).or_default().push((j, k));
            }
        }
    }
    let packets = by_symbol
        .into_iter()
        .map(|(symbol, cells)| {
            let mut bytes = vec![0u8; db.packet_len()];
            for &(j, k) in &cells {
                xor_into(&mut bytes, db.packet(demands[k], j));
            }
            CodedPacket { symbol, cells, bytes }
        })
        .collect();
    Ok(BroadcastSet { packets })
}

/// Rebuilds the file requested by `node` from its cache and the broadcast.
pub fn decode(
    node: usize,
    placement: &CachePlacement,
    broadcasts: &BroadcastSet,
    demands: &[usize],
    grid: &PdaGrid,
) -> Result<Vec<u8>> {
    let cache = placement
        .nodes
        .get(node)
        .ok_or_else(|| PdaError::InvalidArgument(format!("no node {node}")))?;
    let want = demands[node];
    let mut out = Vec::new();
    for j in 0..grid.rows() {
        if let Some(p) = cache.packets.get(&(want, j)) {
            out.extend_from_slice(p);
            continue;
        }
        let coded = broadcasts
            .packets
            .iter()
            .find(|p| p.cells.contains(&(j, node)))
            .ok_or_else(|| PdaError::ProtocolViolation {
                node,
                row: j,
                message: "no coded packet carries this row".into(),
            })?;
        let mut bytes = coded.bytes.clone();
        for &(jj, kk) in &coded.cells {
            if (jj, kk) == (j, node) {
                continue;
            }
            let other = cache
                .packets
                .get(&(demands[kk], jj))
                .ok_or_else(|| PdaError::ProtocolViolation {
                    node,
                    row: j,
                    message: format!("packet {jj} of file {} is not cached", demands[kk]),
                })?;
            xor_into(&mut bytes, other);
        }
        out.extend_from_slice(&bytes);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Metrics {
    pub broadcasts: usize,
    /// Traffic in files: `s / F`.
    pub rate: Ratio<usize>,
    /// Share of each file held by a node: `Z / F`.
    pub cache_fraction: Ratio<usize>,
    pub bytes_on_wire: usize,
}

pub fn measure(grid: &PdaGrid, packet_len: usize) -> Result<Metrics> {
    let p = ensure_valid(grid)?;
    Ok(Metrics {
        broadcasts: p.s,
        rate: Ratio::new(p.s, p.f),
        cache_fraction: Ratio::new(p.z, p.f),
        bytes_on_wire: p.s * packet_len,
    })
}

/// Every demand vector when there are at most 4096, else `samples` drawn
/// from `seed`.
pub fn demand_vectors(n: usize, k: usize, samples: usize, seed: u64) -> Vec<Vec<usize>> {
    let total = u32::try_from(k).ok().and_then(|k| n.checked_pow(k));
    match total {
        Some(total) if total <= 4096 => (0..total)
            .map(|mut i| {
                (0..k)
                    .map(|_| {
                        let d = i % n;
                        i /= n;
                        d
                    })
                    .collect()
            })
            .collect(),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..samples)
                .map(|_| (0..k).map(|_| rng.gen_range(0..n)).collect())
                .collect()
        }
    }
}

/// One delivery round and its outcome at every node.
#[derive(Clone, Debug)]
pub struct SchemeRun {
    pub params: PdaParams,
    pub n: usize,
    pub seed: Option<u64>,
    pub demands: Vec<usize>,
    pub broadcasts: BroadcastSet,
    /// Whether each node recovered its file byte for byte.
    pub decoded: Vec<bool>,
    pub metrics: Metrics,
}

impl SchemeRun {
    pub fn all_decoded(&self) -> bool {
        self.decoded.iter().all(|&ok| ok)
    }

    /// Line-oriented record of the run.
    pub fn manifest(&self) -> String {
        let p = &self.params;
        let mut out = String::new();
        let _ = writeln!(out, "params F={} K={} Z={} S={} N={}", p.f, p.k, p.z, p.s, self.n);
        match self.seed {
            Some(seed) => {
                let _ = writeln!(out, "seed {seed}");
            }
            None => out.push_str("seed none\n"),
        }
        let d: Vec<String> = self.demands.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "demands {}", d.join(" "));
        for pkt in &self.broadcasts.packets {
            let cells: Vec<String> = pkt.cells.iter().map(|(j, k)| format!("{j}:{k}")).collect();
            let _ = writeln!(out, "symbol {} cells {}", pkt.symbol, cells.join(" "));
        }
        for (k, ok) in self.decoded.iter().enumerate() {
            let _ = writeln!(out, "node {k} {}", if *ok { "pass" } else { "fail" });
        }
        let m = &self.metrics;
        let _ = writeln!(
            out,
            "broadcasts {} rate {} cache {} bytes {}",
            m.broadcasts, m.rate, m.cache_fraction, m.bytes_on_wire
        );
        out
    }
}

/// Place, deliver and decode at every node.
pub fn run_scheme(grid: &PdaGrid, db: &ServerDb, demands: &[usize]) -> Result<SchemeRun> {
    let params = ensure_valid(grid)?;
    let placement = place(grid, db)?;
    let broadcasts = deliver(grid, db, demands)?;
    let decoded = (0..grid.cols())
        .map(|k| decode(k, &placement, &broadcasts, demands, grid).map(|bytes| bytes == db.file(demands[k])))
        .collect::<Result<Vec<bool>>>()?;
    Ok(SchemeRun {
        params,
        n: db.n(),
        seed: db.seed(),
        demands: demands.to_vec(),
        broadcasts,
        decoded,
        metrics: measure(grid, db.packet_len())?,
    })
}
