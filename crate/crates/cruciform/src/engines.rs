//! Exact counting engines.
//!
//! Three independent routes to the number of domino tilings (equivalently,
//! perfect matchings of the dual graph):
//!
//! * [`count_brute`] — exhaustive branching on the lowest-indexed unmatched
//!   vertex; the reference oracle, also used by [`enumerate_tilings`];
//! * [`count_transfer`] — broken-profile dynamic programming over the
//!   bounding box, column by column; handles gaps and holes;
//! * [`count_kasteleyn`] — exact integer determinant of the signed
//!   white-by-black adjacency matrix, for simply connected regions.
//!
//! All arithmetic is arbitrary precision; the engines agree exactly wherever
//! more than one applies, and the verifier sweeps that property.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::dualgraph::{dual_graph, reduce_forced, DualGraph};
use crate::geometry::{Cell, Color, Region, Transform};

/// Exact tiling count.
pub type BigCount = BigUint;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("node budget of {0} exceeded in brute-force search")]
    BudgetExceeded(u64),
    #[error("tiling enumeration limit of {0} exceeded")]
    LimitExceeded(usize),
    #[error("column height {0} exceeds transfer-matrix width bound {1}")]
    WidthBound(usize, usize),
    #[error("region is not simply connected; Kasteleyn gauge unavailable")]
    NotSimplyConnected,
}

type Result<T> = std::result::Result<T, EngineError>;

/// Default branch-node budget for the brute-force engine.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// Default bound on the scan height of the transfer engine.
pub const DEFAULT_WIDTH_BOUND: usize = 28;

/// A tiling: disjoint dominoes covering the region exactly. Dominoes are
/// stored as ordered cell pairs (smaller cell first) in sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    pub dominoes: Vec<(Cell, Cell)>,
}

impl Tiling {
    fn from_matching(g: &DualGraph, matched_to: &[usize]) -> Tiling {
        let mut dominoes: Vec<(Cell, Cell)> = matched_to
            .iter()
            .enumerate()
            .filter(|&(v, &w)| v < w)
            .map(|(v, &w)| (g.vertices()[v], g.vertices()[w]))
            .collect();
        dominoes.sort();
        Tiling { dominoes }
    }

    /// True when the tiling covers exactly the given region.
    pub fn covers(&self, region: &Region) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        for (a, b) in &self.dominoes {
            if !a.is_adjacent(b) || !seen.insert(*a) || !seen.insert(*b) {
                return false;
            }
        }
        seen.len() == region.len() && seen.iter().all(|c| region.contains(c))
    }
}

const UNMATCHED: usize = usize::MAX;

struct BruteSearch<'a> {
    g: &'a DualGraph,
    matched_to: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> BruteSearch<'a> {
    fn new(g: &'a DualGraph, budget: u64) -> Self {
        BruteSearch {
            g,
            matched_to: vec![UNMATCHED; g.vertex_count()],
            nodes: 0,
            budget,
        }
    }

    /// Count matchings extending the current partial matching, branching on
    /// the lowest-indexed unmatched vertex at or after `from`.
    fn count(&mut self, from: usize) -> Result<BigCount> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(EngineError::BudgetExceeded(self.budget));
        }
        let mut v = from;
        while v < self.matched_to.len() && self.matched_to[v] != UNMATCHED {
            v += 1;
        }
        if v == self.matched_to.len() {
            return Ok(BigCount::one());
        }
        let mut total = BigCount::zero();
        let neighbors: Vec<usize> = self.g.neighbors(v).to_vec();
        for w in neighbors {
            if self.matched_to[w] != UNMATCHED {
                continue;
            }
            self.matched_to[v] = w;
            self.matched_to[w] = v;
            total += self.count(v + 1)?;
            self.matched_to[v] = UNMATCHED;
            self.matched_to[w] = UNMATCHED;
        }
        Ok(total)
    }

    fn enumerate(&mut self, from: usize, limit: usize, out: &mut Vec<Tiling>) -> Result<()> {
        let mut v = from;
        while v < self.matched_to.len() && self.matched_to[v] != UNMATCHED {
            v += 1;
        }
        if v == self.matched_to.len() {
            if out.len() >= limit {
                return Err(EngineError::LimitExceeded(limit));
            }
            out.push(Tiling::from_matching(self.g, &self.matched_to));
            return Ok(());
        }
        let neighbors: Vec<usize> = self.g.neighbors(v).to_vec();
        for w in neighbors {
            if self.matched_to[w] != UNMATCHED {
                continue;
            }
            self.matched_to[v] = w;
            self.matched_to[w] = v;
            self.enumerate(v + 1, limit, out)?;
            self.matched_to[v] = UNMATCHED;
            self.matched_to[w] = UNMATCHED;
        }
        Ok(())
    }
}

/// Exhaustive matching count with the default node budget.
pub fn count_brute(g: &DualGraph) -> Result<BigCount> {
    count_brute_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn count_brute_with_budget(g: &DualGraph, budget: u64) -> Result<BigCount> {
    if !g.is_color_balanced() {
        return Ok(BigCount::zero());
    }
    BruteSearch::new(g, budget).count(0)
}

/// All perfect matchings of `g`, in the deterministic branching order.
/// Errors if more than `limit` exist.
pub fn enumerate_tilings(g: &DualGraph, limit: usize) -> Result<Vec<Tiling>> {
    let mut out = Vec::new();
    if !g.is_color_balanced() {
        return Ok(out);
    }
    BruteSearch::new(g, u64::MAX).enumerate(0, limit, &mut out)?;
    Ok(out)
}

/// Broken-profile transfer-matrix count, scanning the bounding box column by
/// column (or row by row, whichever is narrower). The scan height must stay
/// within `width_bound` profile bits.
pub fn count_transfer(region: &Region) -> Result<BigCount> {
    count_transfer_bounded(region, DEFAULT_WIDTH_BOUND)
}

pub fn count_transfer_bounded(region: &Region, width_bound: usize) -> Result<BigCount> {
    let Some((min_col, min_row, max_col, max_row)) = region.bounding_box() else {
        return Ok(BigCount::one()); // empty region: one empty tiling
    };
    if region.len() % 2 == 1 || !region.is_balanced() {
        return Ok(BigCount::zero());
    }
    let width = (max_col - min_col + 1) as usize;
    let height = (max_row - min_row + 1) as usize;
    let scan = if height <= width_bound {
        region.clone()
    } else if width <= width_bound {
        region.transform(Transform::Rot90)
    } else {
        return Err(EngineError::WidthBound(height.min(width), width_bound));
    };
    Ok(transfer_scan(&scan))
}

fn transfer_scan(region: &Region) -> BigCount {
    let (min_col, min_row, max_col, max_row) = region.bounding_box().expect("nonempty");
    let height = (max_row - min_row + 1) as usize;
    let present = |col: i64, row: i64| -> bool {
        row >= min_row && row <= max_row && region.contains(&Cell::new(col, row))
    };
    // profile bit i = scan position (current + i) already covered
    let mut states: HashMap<u64, BigCount> = HashMap::new();
    states.insert(0, BigCount::one());
    for col in min_col..=max_col {
        for row in min_row..=max_row {
            let mut next: HashMap<u64, BigCount> = HashMap::with_capacity(states.len());
            let mut bump = |mask: u64, count: &BigCount| {
                next.entry(mask)
                    .and_modify(|c| *c += count)
                    .or_insert_with(|| count.clone());
            };
            for (&mask, count) in &states {
                let covered = mask & 1 == 1;
                if !present(col, row) {
                    if !covered {
                        bump(mask >> 1, count);
                    }
                    continue;
                }
                if covered {
                    bump(mask >> 1, count);
                    continue;
                }
                // vertical domino to (col, row+1)
                if present(col, row + 1) && mask & 2 == 0 {
                    bump((mask | 2) >> 1, count);
                }
                // horizontal domino to (col+1, row)
                if present(col + 1, row) {
                    bump((mask | (1 << height)) >> 1, count);
                }
            }
            states = next;
        }
    }
    states.remove(&0).unwrap_or_else(BigCount::zero)
}

/// Kasteleyn count for balanced, simply connected regions: absolute integer
/// determinant of the white-by-black adjacency matrix under the flat
/// alternating gauge (horizontal edges `+1`, vertical edges `(-1)^col`).
pub fn count_kasteleyn(region: &Region) -> Result<BigCount> {
    if !region.is_simply_connected() {
        return Err(EngineError::NotSimplyConnected);
    }
    if region.is_empty() {
        return Ok(BigCount::one());
    }
    if !region.is_balanced() {
        return Ok(BigCount::zero());
    }
    let mut whites = Vec::new();
    let mut blacks = Vec::new();
    for &cell in region.cell_set() {
        match cell.color() {
            Color::White => whites.push(cell),
            Color::Black => blacks.push(cell),
        }
    }
    let black_index: HashMap<Cell, usize> =
        blacks.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let k = whites.len();
    let mut matrix = vec![vec![BigInt::zero(); k]; k];
    for (i, w) in whites.iter().enumerate() {
        for nb in w.neighbors() {
            if let Some(&j) = black_index.get(&nb) {
                let sign = if nb.row == w.row {
                    BigInt::one() // horizontal edge
                } else if w.col.rem_euclid(2) == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                matrix[i][j] = sign;
            }
        }
    }
    Ok(bareiss_determinant(matrix).magnitude().clone())
}

/// Fraction-free (Bareiss) determinant over exact integers. Every division
/// in the elimination is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        // pivot on any nonzero entry in column k
        let Some(pivot_row) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if pivot_row != k {
            m.swap(pivot_row, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Engine selection for [`count`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    Auto,
    Brute,
    Transfer,
    Kasteleyn,
}

impl std::str::FromStr for Engine {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(Engine::Auto),
            "brute" => Ok(Engine::Brute),
            "transfer" => Ok(Engine::Transfer),
            "kasteleyn" => Ok(Engine::Kasteleyn),
            other => Err(format!("unknown engine '{other}'")),
        }
    }
}

/// Count the domino tilings of a region.
///
/// `Auto` short-circuits unbalanced regions, strips forced dominoes, splits
/// into connected components and picks per component: transfer matrix for
/// narrow pieces, Kasteleyn for larger simply connected ones, brute force
/// otherwise. The result is independent of the engine choice.
pub fn count(region: &Region, engine: Engine) -> Result<BigCount> {
    match engine {
        Engine::Brute => count_brute(&dual_graph(region)),
        Engine::Transfer => count_transfer(region),
        Engine::Kasteleyn => count_kasteleyn(region),
        Engine::Auto => {
            if !region.is_balanced() {
                return Ok(BigCount::zero());
            }
            let reduction = reduce_forced(&dual_graph(region));
            if reduction.infeasible {
                return Ok(BigCount::zero());
            }
            let mut total = BigCount::one();
            for component in reduction.reduced.split_components() {
                total *= count_component(&component)?;
                if total.is_zero() {
                    break;
                }
            }
            Ok(total)
        }
    }
}

fn count_component(g: &DualGraph) -> Result<BigCount> {
    let region = g.to_region("component");
    let (min_col, min_row, max_col, max_row) = match region.bounding_box() {
        Some(b) => b,
        None => return Ok(BigCount::one()),
    };
    let width = (max_col - min_col + 1) as usize;
    let height = (max_row - min_row + 1) as usize;
    if width.min(height) <= 24 {
        return count_transfer(&region);
    }
    if region.is_simply_connected() {
        return count_kasteleyn(&region);
    }
    count_brute(g)
}
