//! Bipartite adjacency structure on the cells of a region.
//!
//! Vertices are the region's cells in lexicographic `(row, col)` order, so
//! engine traces and serialized graphs are reproducible byte for byte.
//! Edges join cells sharing a unit edge; every edge joins opposite colors.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::geometry::{build_cruciform, Cell, Color, CruciformParams, Region};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Planar dual (adjacency) graph of a region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    vertices: Vec<Cell>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    colors: Vec<Color>,
}

impl DualGraph {
    fn from_vertices(vertices: Vec<Cell>) -> Self {
        let index: BTreeMap<Cell, usize> =
            vertices.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (i, cell) in vertices.iter().enumerate() {
            for nb in cell.neighbors() {
                if let Some(&j) = index.get(&nb) {
                    if i < j {
                        edges.push((i, j));
                        adjacency[i].push(j);
                        adjacency[j].push(i);
                    }
                }
            }
        }
        edges.sort_unstable();
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        let colors = vertices.iter().map(|c| c.color()).collect();
        DualGraph {
            vertices,
            edges,
            adjacency,
            colors,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Cell] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn is_color_balanced(&self) -> bool {
        let black = self.colors.iter().filter(|&&c| c == Color::Black).count();
        2 * black == self.vertices.len()
    }

    /// The region spanned by this graph's vertices.
    pub fn to_region(&self, label: impl Into<String>) -> Region {
        Region::from_cells(self.vertices.iter().copied(), label)
    }

    /// Connected components, each as its own graph (deterministic order by
    /// smallest vertex).
    pub fn split_components(&self) -> Vec<DualGraph> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut cells = Vec::new();
            while let Some(v) = stack.pop() {
                cells.push(self.vertices[v]);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            cells.sort();
            components.push(DualGraph::from_vertices(cells));
        }
        components
    }

    /// Deterministic export document (vertex coordinates plus index pairs).
    pub fn export(&self) -> GraphDoc {
        GraphDoc {
            vertices: self.vertices.iter().map(|c| (c.col, c.row)).collect(),
            edges: self.edges.clone(),
        }
    }
}

/// Serialized graph: vertex list with coordinates plus edge list, in the
/// deterministic vertex order.
#[derive(Debug, Clone, Serialize)]
pub struct GraphDoc {
    pub vertices: Vec<(i64, i64)>,
    pub edges: Vec<(usize, usize)>,
}

/// Dual graph of a region: one vertex per cell, one edge per shared unit
/// edge.
pub fn dual_graph(region: &Region) -> DualGraph {
    let mut cells: Vec<Cell> = region.cells().copied().collect();
    cells.sort();
    DualGraph::from_vertices(cells)
}

/// The doubly intruded Aztec rectangle graph `AR_{M,N}^k(p,q)`: the dual of
/// `AR_{M,N}` minus the `p` smallest-`s` and `q` largest-`s` cells of the
/// diagonal `d = 2k+2` (which has `M+1` cells; its removal leaves `AR_{M,k}`
/// on the small-`d` side).
///
/// Equals `dual_graph(build_cruciform(M, 0, k, -q, N-1-k, -p))`, which is how
/// it is built; the equality is covered by tests.
pub fn intruded_ar_graph(m: i64, n: i64, k: i64, p: i64, q: i64) -> Result<DualGraph, GraphError> {
    if !(0..=n - 1).contains(&k) {
        return Err(GraphError::InvalidParameter(format!(
            "need 0 <= k <= N-1, got k={k}, N={n}"
        )));
    }
    if p < 0 || q < 0 || p + q > m + 1 {
        return Err(GraphError::InvalidParameter(format!(
            "need p,q >= 0 and p+q <= M+1, got p={p}, q={q}, M={m}"
        )));
    }
    let params = CruciformParams::new(m, 0, k, -q, n - 1 - k, -p).map_err(|e| {
        GraphError::InvalidParameter(format!("intruded graph parameters out of range: {e}"))
    })?;
    let region = build_cruciform(params)
        .map_err(|e| GraphError::InvalidParameter(e.to_string()))?;
    Ok(dual_graph(&region))
}

/// Result of iterated forced-edge elimination.
#[derive(Debug, Clone)]
pub struct ForcedReduction {
    pub reduced: DualGraph,
    pub forced_edges: Vec<(Cell, Cell)>,
    pub infeasible: bool,
}

/// Repeatedly match degree-1 vertices to their unique neighbor and delete
/// both. Sets `infeasible` when an unmatched vertex loses its last
/// neighbor (isolated vertices count immediately). Preserves the number of
/// perfect matchings: `count(g) = count(reduced)` when feasible, `0`
/// otherwise.
pub fn reduce_forced(g: &DualGraph) -> ForcedReduction {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.neighbors(v).len()).collect();
    let mut forced = Vec::new();
    let mut infeasible = false;
    let mut queue: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = queue.pop() {
        if !alive[v] {
            continue;
        }
        if degree[v] == 0 {
            infeasible = true;
            break;
        }
        let Some(&w) = g.neighbors(v).iter().find(|&&w| alive[w]) else {
            infeasible = true;
            break;
        };
        forced.push((g.vertices()[v].min(g.vertices()[w]), g.vertices()[v].max(g.vertices()[w])));
        alive[v] = false;
        alive[w] = false;
        for &u in g.neighbors(w) {
            if alive[u] {
                degree[u] -= 1;
                if degree[u] <= 1 {
                    queue.push(u);
                }
            }
        }
        for &u in g.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
                if degree[u] <= 1 {
                    queue.push(u);
                }
            }
        }
    }
    let mut cells: Vec<Cell> = (0..n).filter(|&v| alive[v]).map(|v| g.vertices()[v]).collect();
    cells.sort();
    forced.sort();
    ForcedReduction {
        reduced: DualGraph::from_vertices(cells),
        forced_edges: forced,
        infeasible,
    }
}
