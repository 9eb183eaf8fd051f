use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::CatalogError;
use crate::algebra::{FiniteBirack, Permutation, SwitchMap};

/// What to enumerate. Racks have identity down rows; biquandles are
/// biracks whose twitch fixes the diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Rack,
    Birack,
    Biquandle,
}

impl Mode {
    pub fn max_size(self) -> usize {
        match self {
            Mode::Rack => 5,
            Mode::Birack | Mode::Biquandle => 4,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Rack => "rack",
            Mode::Birack => "birack",
            Mode::Biquandle => "biquandle",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rack" => Ok(Mode::Rack),
            "birack" => Ok(Mode::Birack),
            "biquandle" => Ok(Mode::Biquandle),
            _ => Err(format!("unknown mode {s:?} (expected rack, birack or biquandle)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub mode: Mode,
    /// Keep one representative per relabeling class.
    pub dedup: bool,
    /// Maximum number of search nodes before giving up.
    pub node_budget: u64,
}

impl EnumerateOptions {
    pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

    pub fn new(mode: Mode) -> Self {
        Self { mode, dedup: true, node_budget: Self::DEFAULT_NODE_BUDGET }
    }
}

/// All structures of size `n` in `mode`, one per relabeling class, sorted
/// by canonical form. The stored rows are read as the twitch.
pub fn enumerate_biracks(n: usize, mode: Mode) -> Result<Vec<FiniteBirack>, CatalogError> {
    enumerate_biracks_with(n, &EnumerateOptions::new(mode))
}

pub fn enumerate_biracks_with(n: usize, opts: &EnumerateOptions) -> Result<Vec<FiniteBirack>, CatalogError> {
    let max = opts.mode.max_size();
    if n == 0 || n > max {
        return Err(CatalogError::SizeLimit { size: n, max });
    }
    let perms = all_permutations(n);
    let relabelings = if opts.dedup { perms.clone() } else { vec![(0..n as u8).collect()] };
    let search = Search {
        n,
        mode: opts.mode,
        perms,
        nodes: AtomicU64::new(0),
        budget: opts.node_budget,
        stop: AtomicBool::new(false),
    };

    let mut found: Vec<Vec<u8>> = search
        .candidates(0)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut state = State::new(n, opts.mode);
            let mut out = Vec::new();
            state.assign(0, first.clone());
            if state.consistent() {
                search.dfs(&mut state, 1, &mut out);
            }
            out.into_iter().map(|s| canonical(&s, &relabelings))
        })
        .collect();
    found.sort();
    found.dedup();

    let mode = opts.mode;
    let biracks: Vec<FiniteBirack> =
        found.iter().enumerate().map(|(i, key)| to_birack(n, key, format!("{mode}{n}_{}", i + 1))).collect();
    if search.stop.load(Ordering::Relaxed) {
        return Err(CatalogError::Budget { size: n, nodes: opts.node_budget, found: biracks.len(), partial: biracks });
    }
    Ok(biracks)
}

struct Search {
    n: usize,
    mode: Mode,
    perms: Vec<Vec<u8>>,
    nodes: AtomicU64,
    budget: u64,
    stop: AtomicBool,
}

/// Rows assigned so far. Level `2x` fills up row `x`, level `2x + 1` down
/// row `x`; rack mode skips the down levels.
#[derive(Clone)]
struct State {
    n: usize,
    up: Vec<Option<Vec<u8>>>,
    down: Vec<Option<Vec<u8>>>,
}

impl State {
    fn new(n: usize, mode: Mode) -> Self {
        let down = match mode {
            Mode::Rack => vec![Some((0..n as u8).collect()); n],
            _ => vec![None; n],
        };
        Self { n, up: vec![None; n], down }
    }

    fn assign(&mut self, level: usize, row: Vec<u8>) {
        if level % 2 == 0 {
            self.up[level / 2] = Some(row);
        } else {
            self.down[level / 2] = Some(row);
        }
    }

    fn clear(&mut self, level: usize) {
        if level % 2 == 0 {
            self.up[level / 2] = None;
        } else {
            self.down[level / 2] = None;
        }
    }

    /// `a^b`, when row `b` is known.
    fn u(&self, a: usize, b: usize) -> Option<usize> {
        self.up[b].as_ref().map(|r| r[a] as usize)
    }

    /// `a_b`, when row `b` is known.
    fn d(&self, a: usize, b: usize) -> Option<usize> {
        self.down[b].as_ref().map(|r| r[a] as usize)
    }

    /// The three Yang–Baxter identities on every triple where both sides
    /// are already determined.
    fn consistent(&self) -> bool {
        let n = self.n;
        let differ = |l: Option<usize>, r: Option<usize>| matches!((l, r), (Some(l), Some(r)) if l != r);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let l1 = (|| self.d(self.d(z, x)?, self.d(y, x)?))();
                    let r1 = (|| self.d(self.d(z, y)?, self.u(x, y)?))();
                    let l2 = (|| self.u(self.u(x, z)?, self.u(y, z)?))();
                    let r2 = (|| self.u(self.u(x, y)?, self.d(z, y)?))();
                    let l3 = (|| self.u(self.d(y, x)?, self.d(z, x)?))();
                    let r3 = (|| self.d(self.u(y, z)?, self.u(x, z)?))();
                    if differ(l1, r1) || differ(l2, r2) || differ(l3, r3) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn rows(&self) -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
        let take = |v: &[Option<Vec<u8>>]| v.iter().map(|r| r.clone().expect("complete")).collect();
        (take(&self.up), take(&self.down))
    }
}

impl Search {
    fn levels(&self) -> usize {
        2 * self.n
    }

    fn skip(&self, level: usize) -> bool {
        self.mode == Mode::Rack && level % 2 == 1
    }

    fn candidates(&self, level: usize) -> Vec<Vec<u8>> {
        let x = level / 2;
        self.perms.iter().filter(|p| self.mode != Mode::Biquandle || p[x] as usize == x).cloned().collect()
    }

    fn dfs(&self, state: &mut State, level: usize, out: &mut Vec<(Vec<Vec<u8>>, Vec<Vec<u8>>)>) {
        if self.stop.load(Ordering::Relaxed) {
            return;
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.stop.store(true, Ordering::Relaxed);
            return;
        }
        if level == self.levels() {
            let (up, down) = state.rows();
            if fully_formed(&up, &down) {
                out.push((up, down));
            }
            return;
        }
        if self.skip(level) {
            return self.dfs(state, level + 1, out);
        }
        for row in self.candidates(level) {
            state.assign(level, row);
            if state.consistent() {
                self.dfs(state, level + 1, out);
            }
            state.clear(level);
        }
    }
}

fn fully_formed(up: &[Vec<u8>], down: &[Vec<u8>]) -> bool {
    let n = up.len();
    let mut seen = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            let image = down[x][y] as usize * n + up[y][x] as usize;
            if std::mem::replace(&mut seen[image], true) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest `up ++ down` row listing over `relabelings`.
fn canonical((up, down): &(Vec<Vec<u8>>, Vec<Vec<u8>>), relabelings: &[Vec<u8>]) -> Vec<u8> {
    let n = up.len();
    let mut best: Option<Vec<u8>> = None;
    let mut key = vec![0u8; 2 * n * n];
    for sigma in relabelings {
        for (m, rows) in [up, down].into_iter().enumerate() {
            for b in 0..n {
                for a in 0..n {
                    key[m * n * n + sigma[b] as usize * n + sigma[a] as usize] = sigma[rows[b][a] as usize];
                }
            }
        }
        if best.as_ref().map_or(true, |b| key < *b) {
            best = Some(key.clone());
        }
    }
    best.expect("at least one relabeling")
}

fn to_birack(n: usize, key: &[u8], name: String) -> FiniteBirack {
    let rows = |m: usize| -> Vec<Permutation> {
        (0..n)
            .map(|b| {
                let start = m * n * n + b * n;
                let images: Vec<usize> = key[start..start + n].iter().map(|&v| v as usize).collect();
                Permutation::from_images(&images).expect("search only emits permutations")
            })
            .collect()
    };
    let map = SwitchMap::new(rows(0), rows(1)).expect("rows are permutations");
    FiniteBirack::classical(Some(name), map)
}

fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    fn rec(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x as u8);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
