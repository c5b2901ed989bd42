//! Lattice regions and their constructors.
//!
//! Every region family is built in one fixed coordinate frame. A [`Cell`]
//! `(col, row)` denotes the unit square `[col, col+1] × [row, row+1]`. The
//! diagonal coordinates
//!
//! ```text
//! s = col + row + 1        (southwest-to-northeast level)
//! d = col - row            (northwest-to-southeast level)
//! ```
//!
//! always have `s + d` odd. The Aztec rectangle `AR_{m,n}` is the set of
//! cells with `1 <= s <= 2m+1` and `1 <= d <= 2n+1`; all other constructors
//! are expressed on top of it. In this frame a southwest-to-northeast
//! diagonal of cells is a constant-`d` set, which is what the intruded
//! rectangle construction in [`crate::dualgraph`] relies on.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

type Result<T> = std::result::Result<T, GeometryError>;

/// Chessboard color of a cell. `Black` is the class with `col + row` even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Black,
    White,
}

/// A unit lattice square `[col, col+1] x [row, row+1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub col: i64,
    pub row: i64,
}

impl Cell {
    pub fn new(col: i64, row: i64) -> Self {
        Cell { col, row }
    }

    /// Southwest-to-northeast diagonal level `col + row + 1`.
    pub fn s(&self) -> i64 {
        self.col + self.row + 1
    }

    /// Northwest-to-southeast diagonal level `col - row`.
    pub fn d(&self) -> i64 {
        self.col - self.row
    }

    /// Inverse of the `(s, d)` map. `s + d` must be odd.
    pub fn from_sd(s: i64, d: i64) -> Self {
        debug_assert!((s + d).rem_euclid(2) == 1, "(s,d)=({s},{d}) is not a cell");
        Cell {
            col: (s + d - 1) / 2,
            row: (s - d - 1) / 2,
        }
    }

    pub fn color(&self) -> Color {
        if (self.col + self.row).rem_euclid(2) == 0 {
            Color::Black
        } else {
            Color::White
        }
    }

    /// The four edge-adjacent cells.
    pub fn neighbors(&self) -> [Cell; 4] {
        [
            Cell::new(self.col + 1, self.row),
            Cell::new(self.col - 1, self.row),
            Cell::new(self.col, self.row + 1),
            Cell::new(self.col, self.row - 1),
        ]
    }

    pub fn is_adjacent(&self, other: &Cell) -> bool {
        (self.col - other.col).abs() + (self.row - other.row).abs() == 1
    }
}

// Cells order by (row, col); this is the vertex order used by the dual graph.
impl Ord for Cell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.row, self.col).cmp(&(other.row, other.col))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// A finite set of cells with a provenance label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    cells: BTreeSet<Cell>,
    label: String,
}

/// Exact census of a region, see [`Region::stats`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionStats {
    pub cell_count: usize,
    pub black_count: usize,
    pub white_count: usize,
    pub is_balanced: bool,
    /// `(min_col, min_row, max_col, max_row)`; `None` for the empty region.
    pub bounding_box: Option<(i64, i64, i64, i64)>,
    pub component_count: usize,
}

/// A lattice isometry (or translation) acting on cells.
///
/// `ReflectV` mirrors across the vertical axis (negates columns), `ReflectH`
/// across the horizontal axis (negates rows). `Rot90` is a counterclockwise
/// quarter turn about the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    Rot90,
    Rot180,
    ReflectH,
    ReflectV,
    Translate(i64, i64),
}

impl Transform {
    pub fn apply(&self, c: Cell) -> Cell {
        match *self {
            Transform::Rot90 => Cell::new(-c.row - 1, c.col),
            Transform::Rot180 => Cell::new(-c.col - 1, -c.row - 1),
            Transform::ReflectH => Cell::new(c.col, -c.row - 1),
            Transform::ReflectV => Cell::new(-c.col - 1, c.row),
            Transform::Translate(dx, dy) => Cell::new(c.col + dx, c.row + dy),
        }
    }
}

impl Region {
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I, label: impl Into<String>) -> Self {
        Region {
            cells: cells.into_iter().collect(),
            label: label.into(),
        }
    }

    pub fn empty(label: impl Into<String>) -> Self {
        Region {
            cells: BTreeSet::new(),
            label: label.into(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter()
    }

    pub fn cell_set(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.contains(c)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn black_count(&self) -> usize {
        self.cells.iter().filter(|c| c.color() == Color::Black).count()
    }

    pub fn white_count(&self) -> usize {
        self.len() - self.black_count()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.black_count() == self.len()
    }

    pub fn bounding_box(&self) -> Option<(i64, i64, i64, i64)> {
        if self.cells.is_empty() {
            return None;
        }
        let mut min_col = i64::MAX;
        let mut min_row = i64::MAX;
        let mut max_col = i64::MIN;
        let mut max_row = i64::MIN;
        for c in &self.cells {
            min_col = min_col.min(c.col);
            min_row = min_row.min(c.row);
            max_col = max_col.max(c.col);
            max_row = max_row.max(c.row);
        }
        Some((min_col, min_row, max_col, max_row))
    }

    /// Remove two cells (used for occupation probabilities). The cells must
    /// belong to the region.
    pub fn without(&self, a: &Cell, b: &Cell) -> Region {
        debug_assert!(self.contains(a) && self.contains(b));
        let mut cells = self.cells.clone();
        cells.remove(a);
        cells.remove(b);
        Region {
            cells,
            label: format!("{} \\ {{{},{}}}", self.label, a, b),
        }
    }

    pub fn transform(&self, t: Transform) -> Region {
        Region {
            cells: self.cells.iter().map(|&c| t.apply(c)).collect(),
            label: format!("{:?}({})", t, self.label),
        }
    }

    /// Translate so the bounding box corner sits at the origin. Shifts by an
    /// even vector sum when `preserve_colors` is set, so the chessboard
    /// coloring is unchanged.
    pub fn normalized(&self, preserve_colors: bool) -> Region {
        match self.bounding_box() {
            None => self.clone(),
            Some((min_col, min_row, _, _)) => {
                let (dx, mut dy) = (-min_col, -min_row);
                if preserve_colors && (dx + dy).rem_euclid(2) == 1 {
                    dy += 1;
                }
                self.transform(Transform::Translate(dx, dy))
            }
        }
    }

    /// True when the two regions coincide after translating bounding boxes
    /// to a common corner.
    pub fn congruent_by_translation(&self, other: &Region) -> bool {
        self.normalized(false).cells == other.normalized(false).cells
    }

    pub fn stats(&self) -> RegionStats {
        let black = self.black_count();
        RegionStats {
            cell_count: self.len(),
            black_count: black,
            white_count: self.len() - black,
            is_balanced: 2 * black == self.len(),
            bounding_box: self.bounding_box(),
            component_count: self.component_count(),
        }
    }

    /// Number of edge-adjacency connected components.
    pub fn component_count(&self) -> usize {
        let mut seen: BTreeSet<Cell> = BTreeSet::new();
        let mut components = 0;
        for start in &self.cells {
            if seen.contains(start) {
                continue;
            }
            components += 1;
            let mut stack = vec![*start];
            seen.insert(*start);
            while let Some(c) = stack.pop() {
                for nb in c.neighbors() {
                    if self.cells.contains(&nb) && seen.insert(nb) {
                        stack.push(nb);
                    }
                }
            }
        }
        components
    }

    /// True when the complement has no bounded component (no holes), with the
    /// complement taken 4-connected. Regions failing this cannot use the flat
    /// Kasteleyn gauge.
    pub fn is_simply_connected(&self) -> bool {
        let Some((min_col, min_row, max_col, max_row)) = self.bounding_box() else {
            return true;
        };
        // Flood the complement from outside a 1-cell margin.
        let w = (max_col - min_col + 3) as usize;
        let h = (max_row - min_row + 3) as usize;
        let idx = |col: i64, row: i64| -> usize {
            ((row - min_row + 1) as usize) * w + ((col - min_col + 1) as usize)
        };
        let mut open = vec![false; w * h]; // reachable complement
        let in_region = |col: i64, row: i64| self.cells.contains(&Cell::new(col, row));
        let mut stack = vec![(min_col - 1, min_row - 1)];
        open[idx(min_col - 1, min_row - 1)] = true;
        while let Some((col, row)) = stack.pop() {
            for (dc, dr) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let (nc, nr) = (col + dc, row + dr);
                if nc < min_col - 1 || nc > max_col + 1 || nr < min_row - 1 || nr > max_row + 1 {
                    continue;
                }
                if !in_region(nc, nr) && !open[idx(nc, nr)] {
                    open[idx(nc, nr)] = true;
                    stack.push((nc, nr));
                }
            }
        }
        for row in min_row..=max_row {
            for col in min_col..=max_col {
                if !in_region(col, row) && !open[idx(col, row)] {
                    return false;
                }
            }
        }
        true
    }
}

/// Parameters of the cruciform region `C_{m,n}^{a,b,c,d}`.
///
/// `a, b, c, d` are the pier lengths toward NW, NE, SE, SW; `b` and `d` may
/// be negative (bays). Negative `a` or `c` must be normalized away first via
/// the quarter-turn symmetry `(m,n,a,b,c,d) -> (n,m,b,a,d,c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CruciformParams {
    pub m: i64,
    pub n: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl CruciformParams {
    pub fn new(m: i64, n: i64, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let p = CruciformParams { m, n, a, b, c, d };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let CruciformParams { m, n, a, b, c, d } = *self;
        if m < 0 || n < 0 {
            return Err(GeometryError::InvalidParameter(format!(
                "cruciform needs m,n >= 0, got m={m}, n={n}"
            )));
        }
        if a < 0 || c < 0 {
            return Err(GeometryError::InvalidParameter(format!(
                "cruciform needs a,c >= 0 (apply (m,n,a,b,c,d) -> (n,m,b,a,d,c) first), got a={a}, c={c}"
            )));
        }
        if a > m || c > m {
            return Err(GeometryError::InvalidParameter(format!(
                "pier exceeds body: a={a}, c={c} must be <= m={m}"
            )));
        }
        if b > n || d > n {
            return Err(GeometryError::InvalidParameter(format!(
                "pier exceeds body: b={b}, d={d} must be <= n={n}"
            )));
        }
        // A bay of depth |k| removes 2|k|-1 anti-diagonals; it must not eat
        // through the whole body.
        if b < 0 && -b > m {
            return Err(GeometryError::InvalidParameter(format!(
                "bay too deep: b={b} with m={m}"
            )));
        }
        if d < 0 && -d > m {
            return Err(GeometryError::InvalidParameter(format!(
                "bay too deep: d={d} with m={m}"
            )));
        }
        // Opposite bays must not collide inside the body: the northeastern
        // bay removes the anti-diagonals 2m+3-2|b|..2m+1 and the
        // southwestern one removes 1..2|d|-1.
        if b < 0 && d < 0 && -b - d > m + 1 {
            return Err(GeometryError::InvalidParameter(format!(
                "opposite bays overlap: |b|+|d| = {} exceeds m+1 = {}",
                -b - d,
                m + 1
            )));
        }
        Ok(())
    }

    /// Balance criterion: the region has equal color classes iff
    /// `a + b + c + d = m + n - 1`.
    pub fn is_balanced(&self) -> bool {
        self.a + self.b + self.c + self.d == self.m + self.n - 1
    }
}

/// `AR_{m,n}`: cells with `1 <= s <= 2m+1` and `1 <= d <= 2n+1`.
///
/// `AR_{n,n}` is the Aztec diamond `AD_n`; `AR_{0,n}` is a string of `n`
/// diagonally adjacent cells.
pub fn build_aztec_rectangle(m: i64, n: i64) -> Result<Region> {
    if m < 0 || n < 0 {
        return Err(GeometryError::InvalidParameter(format!(
            "aztec rectangle needs m,n >= 0, got ({m},{n})"
        )));
    }
    let mut cells = Vec::new();
    for s in 1..=2 * m + 1 {
        for d in 1..=2 * n + 1 {
            if (s + d).rem_euclid(2) == 1 {
                cells.push(Cell::from_sd(s, d));
            }
        }
    }
    Ok(Region::from_cells(cells, format!("AR_{{{m},{n}}}")))
}

/// The Aztec diamond `AD_n = AR_{n,n}`.
pub fn build_aztec_diamond(n: i64) -> Result<Region> {
    let mut r = build_aztec_rectangle(n, n)?;
    r.label = format!("AD_{n}");
    Ok(r)
}

/// The cruciform region `C_{m,n}^{a,b,c,d}`.
///
/// Construction in `(s,d)` coordinates: with `K = a + n + c + 1`, start from
/// the body `AR_{m,K}` (`1 <= s <= 2m+1`, `1 <= d <= 2K+1`); the NW pier of
/// length `a` and the SE pier of length `c` are already part of the body.
/// The NE/SW piers live on the band `2a+2 <= d <= 2a+2n+2`: for `b >= 0` add
/// `2m+2 <= s <= 2m+2b+2`, for `b < 0` remove `2m+3-2|b| <= s <= 2m+1`, and
/// symmetrically for `d` at small `s`.
pub fn build_cruciform(p: CruciformParams) -> Result<Region> {
    p.validate()?;
    let CruciformParams { m, n, a, b, c, d } = p;
    let k = a + n + c + 1;
    let mut cells: BTreeSet<Cell> = BTreeSet::new();
    for s in 1..=2 * m + 1 {
        for dd in 1..=2 * k + 1 {
            if (s + dd).rem_euclid(2) == 1 {
                cells.insert(Cell::from_sd(s, dd));
            }
        }
    }
    let band = (2 * a + 2)..=(2 * a + 2 * n + 2);
    let mut paint = |s_lo: i64, s_hi: i64, add: bool| {
        for s in s_lo..=s_hi {
            for dd in band.clone() {
                if (s + dd).rem_euclid(2) == 1 {
                    let cell = Cell::from_sd(s, dd);
                    if add {
                        cells.insert(cell);
                    } else {
                        cells.remove(&cell);
                    }
                }
            }
        }
    };
    if b >= 0 {
        paint(2 * m + 2, 2 * m + 2 * b + 2, true);
    } else {
        paint(2 * m + 3 + 2 * b, 2 * m + 1, false);
    }
    if d >= 0 {
        paint(-2 * d, 0, true);
    } else {
        paint(1, -2 * d - 1, false);
    }
    Ok(Region {
        cells,
        label: format!("C_{{{m},{n}}}^{{{a},{b},{c},{d}}}"),
    })
}

/// The elbow region `E_n^{a,b}`: the part of `C_{n,n}^{a,b,b,a-1}` above its
/// distinguished horizontal row `L` (the cells at `s - d = -(2a+1)`, i.e.
/// `row = -a-1`). Balanced iff `a + b = n`.
pub fn build_elbow(n: i64, a: i64, b: i64) -> Result<Region> {
    if n < 1 || a < 0 || b < 0 {
        return Err(GeometryError::InvalidParameter(format!(
            "elbow needs n >= 1 and a,b >= 0, got ({n},{a},{b})"
        )));
    }
    if a > n || b > n {
        return Err(GeometryError::InvalidParameter(format!(
            "elbow needs a,b <= n, got ({n},{a},{b})"
        )));
    }
    let c = build_cruciform(CruciformParams::new(n, n, a, b, b, a - 1)?)?;
    let cells: Vec<Cell> = c.cells.into_iter().filter(|cell| cell.row >= -a).collect();
    Ok(Region::from_cells(cells, format!("E_{{{n}}}^{{{a},{b}}}")))
}

/// The T-region `T_{m,n}^{b,c,d}`: the part of `C_{m,n}^{m,b,c,d}` on the
/// large-`d` side of the forced Aztec diamond `AD_m` (cells with
/// `d >= 2m+2`).
pub fn build_t_region(m: i64, n: i64, b: i64, c: i64, d: i64) -> Result<Region> {
    if m < 1 {
        return Err(GeometryError::InvalidParameter(format!(
            "t-region needs m >= 1, got {m}"
        )));
    }
    let cr = build_cruciform(CruciformParams::new(m, n, m, b, c, d)?)?;
    let cells: Vec<Cell> = cr
        .cells
        .into_iter()
        .filter(|cell| cell.d() >= 2 * m + 2)
        .collect();
    Ok(Region::from_cells(
        cells,
        format!("T_{{{m},{n}}}^{{{b},{c},{d}}}"),
    ))
}

/// The zigzag half-square `HS_{2n}`: cells `(i,j)` with `0 <= i <= 2n-2` and
/// `2*ceil(i/2) <= j <= 2n-1`; `2n^2` cells, bottom-left square included.
pub fn build_half_square(n: i64) -> Result<Region> {
    if n < 1 {
        return Err(GeometryError::InvalidParameter(format!(
            "half-square needs n >= 1, got {n}"
        )));
    }
    let mut cells = Vec::new();
    for i in 0..=2 * n - 2 {
        let j_lo = 2 * ((i + 1) / 2);
        for j in j_lo..=2 * n - 1 {
            cells.push(Cell::new(i, j));
        }
    }
    Ok(Region::from_cells(cells, format!("HS_{{{}}}", 2 * n)))
}

/// The top half `HD_{n-1}` of the Aztec diamond `AD_{n-1}`: rows
/// `j' = 0..n-2` of widths `2(n-1-j')`, each inset one unit on both sides
/// from the row below. `HD_0` is empty.
pub fn build_half_diamond(n: i64) -> Result<Region> {
    if n < 1 {
        return Err(GeometryError::InvalidParameter(format!(
            "half-diamond needs n >= 1, got {n}"
        )));
    }
    let mut cells = Vec::new();
    for j in 0..n - 1 {
        for i in j..=2 * (n - 1) - 1 - j {
            cells.push(Cell::new(i, j));
        }
    }
    Ok(Region::from_cells(cells, format!("HD_{{{}}}", n - 1)))
}

/// Di Francesco's hybrid region `T_n`: `HS_{2n}` with `HD_{n-1}` stacked on
/// top, right edges aligned at column `2n-2`. Row `j'` of the half diamond
/// occupies columns `j'+1 ..= 2n-2-j'` at height `2n+j'`.
pub fn build_di_francesco(n: i64) -> Result<Region> {
    let hs = build_half_square(n)?;
    let mut cells: BTreeSet<Cell> = hs.cells;
    for j in 0..n - 1 {
        for i in j + 1..=2 * n - 2 - j {
            cells.insert(Cell::new(i, 2 * n + j));
        }
    }
    Ok(Region {
        cells,
        label: format!("T_{n} (Di Francesco)"),
    })
}

/// A plain `w x h` rectangle with corner at the origin; used for engine
/// cross-checks against the Temperley-Fisher-Kasteleyn product.
pub fn build_rectangle(w: i64, h: i64) -> Result<Region> {
    if w < 0 || h < 0 {
        return Err(GeometryError::InvalidParameter(format!(
            "rectangle needs w,h >= 0, got ({w},{h})"
        )));
    }
    let mut cells = Vec::new();
    for col in 0..w {
        for row in 0..h {
            cells.push(Cell::new(col, row));
        }
    }
    Ok(Region::from_cells(cells, format!("{w}x{h} rectangle")))
}

// ---------------------------------------------------------------------------
// Region file format
// ---------------------------------------------------------------------------

/// Constructor part of the region document format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConstructorSpec {
    Cruciform { m: i64, n: i64, a: i64, b: i64, c: i64, d: i64 },
    AztecRectangle { m: i64, n: i64 },
    AztecDiamond { n: i64 },
    Elbow { n: i64, a: i64, b: i64 },
    TRegion { m: i64, n: i64, b: i64, c: i64, d: i64 },
    HalfSquare { n: i64 },
    HalfDiamond { n: i64 },
    DiFrancesco { n: i64 },
    Rectangle { w: i64, h: i64 },
}

impl ConstructorSpec {
    pub fn build(&self) -> Result<Region> {
        match *self {
            ConstructorSpec::Cruciform { m, n, a, b, c, d } => {
                build_cruciform(CruciformParams::new(m, n, a, b, c, d)?)
            }
            ConstructorSpec::AztecRectangle { m, n } => build_aztec_rectangle(m, n),
            ConstructorSpec::AztecDiamond { n } => build_aztec_diamond(n),
            ConstructorSpec::Elbow { n, a, b } => build_elbow(n, a, b),
            ConstructorSpec::TRegion { m, n, b, c, d } => build_t_region(m, n, b, c, d),
            ConstructorSpec::HalfSquare { n } => build_half_square(n),
            ConstructorSpec::HalfDiamond { n } => build_half_diamond(n),
            ConstructorSpec::DiFrancesco { n } => build_di_francesco(n),
            ConstructorSpec::Rectangle { w, h } => build_rectangle(w, h),
        }
    }
}

/// The canonical region document: either an explicit sorted cell list or a
/// named constructor with parameters. Round-trips losslessly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionDoc {
    #[serde(rename = "cells")]
    Cells(Vec<(i64, i64)>),
    #[serde(rename = "constructor")]
    Constructor(ConstructorSpec),
}

impl RegionDoc {
    pub fn from_region(r: &Region) -> Self {
        let mut cells: Vec<(i64, i64)> = r.cells().map(|c| (c.col, c.row)).collect();
        cells.sort(); // lexicographic by (col, row)
        RegionDoc::Cells(cells)
    }

    pub fn to_region(&self) -> Result<Region> {
        match self {
            RegionDoc::Cells(cells) => Ok(Region::from_cells(
                cells.iter().map(|&(col, row)| Cell::new(col, row)),
                "cells",
            )),
            RegionDoc::Constructor(spec) => spec.build(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("region doc serializes")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
