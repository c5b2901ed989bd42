//! Text and SVG rendering of regions and tilings.
//!
//! ASCII output uses `#` for cells of a bare region, and `<>` / `^v` pairs
//! for the two halves of horizontal/vertical dominoes. Rows are printed from
//! the top (largest row index) down, so the pictures match the usual
//! mathematical orientation. SVG output is fully deterministic: fixed cell
//! size, fixed palette.

use std::fmt::Write as _;

use crate::engines::Tiling;
use crate::geometry::{Cell, Region};

const CELL_PX: i64 = 20;
const REGION_FILL: &str = "#d7e3f4";
const GRID_STROKE: &str = "#5b7897";
const HORIZONTAL_FILL: &str = "#f2c14e";
const VERTICAL_FILL: &str = "#6daedb";

/// ASCII picture of a region: `#` for cells, `.` for bounding-box gaps.
pub fn ascii_region(region: &Region) -> String {
    grid(region, |_| '#')
}

/// ASCII picture of a tiling. Horizontal dominoes render as `<>`, vertical
/// ones as `v` (lower half) and `^` (upper half).
pub fn ascii_tiling(region: &Region, tiling: &Tiling) -> String {
    let mut glyphs = std::collections::BTreeMap::new();
    for (a, b) in &tiling.dominoes {
        if a.row == b.row {
            glyphs.insert(*a, '<');
            glyphs.insert(*b, '>');
        } else {
            glyphs.insert(*a, 'v');
            glyphs.insert(*b, '^');
        }
    }
    grid(region, |cell| *glyphs.get(cell).unwrap_or(&'?'))
}

fn grid(region: &Region, glyph: impl Fn(&Cell) -> char) -> String {
    let Some((min_col, min_row, max_col, max_row)) = region.bounding_box() else {
        return String::from("(empty)\n");
    };
    let mut out = String::new();
    for row in (min_row..=max_row).rev() {
        for col in min_col..=max_col {
            let cell = Cell::new(col, row);
            out.push(if region.contains(&cell) {
                glyph(&cell)
            } else {
                '.'
            });
        }
        out.push('\n');
    }
    out
}

/// SVG picture of a region as a flat grid of filled unit squares.
pub fn svg_region(region: &Region) -> String {
    svg_document(region, |out, cell, x, y| {
        let _ = writeln!(
            out,
            r#"  <rect x="{x}" y="{y}" width="{CELL_PX}" height="{CELL_PX}" fill="{REGION_FILL}" stroke="{GRID_STROKE}" stroke-width="1"><title>({},{})</title></rect>"#,
            cell.col, cell.row
        );
    })
}

/// SVG picture of a tiling: each domino is one 2x1 rounded rectangle,
/// horizontal and vertical dominoes in distinct fixed colors.
pub fn svg_tiling(region: &Region, tiling: &Tiling) -> String {
    let Some((min_col, _min_row, _max_col, max_row)) = region.bounding_box() else {
        return empty_svg();
    };
    let mut out = svg_header(region);
    for (a, b) in &tiling.dominoes {
        let horizontal = a.row == b.row;
        let (w, h, fill) = if horizontal {
            (2 * CELL_PX, CELL_PX, HORIZONTAL_FILL)
        } else {
            (CELL_PX, 2 * CELL_PX, VERTICAL_FILL)
        };
        // SVG y grows downward; anchor at the higher-row cell of the pair
        let top = if horizontal { a.row } else { b.row };
        let x = (a.col - min_col) * CELL_PX;
        let y = (max_row - top) * CELL_PX;
        let _ = writeln!(
            out,
            r#"  <rect x="{x}" y="{y}" width="{w}" height="{h}" rx="3" fill="{fill}" stroke="{GRID_STROKE}" stroke-width="1"/>"#
        );
    }
    out.push_str("</svg>\n");
    out
}

fn svg_header(region: &Region) -> String {
    let (min_col, min_row, max_col, max_row) = region.bounding_box().expect("nonempty");
    let w = (max_col - min_col + 1) * CELL_PX;
    let h = (max_row - min_row + 1) * CELL_PX;
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    )
}

fn empty_svg() -> String {
    String::from("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"/>\n")
}

fn svg_document(region: &Region, mut draw: impl FnMut(&mut String, &Cell, i64, i64)) -> String {
    let Some((min_col, _min_row, _max_col, max_row)) = region.bounding_box() else {
        return empty_svg();
    };
    let mut out = svg_header(region);
    for cell in region.cells() {
        let x = (cell.col - min_col) * CELL_PX;
        let y = (max_row - cell.row) * CELL_PX;
        draw(&mut out, cell, x, y);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualgraph::dual_graph;
    use crate::engines::enumerate_tilings;
    use crate::geometry::{build_aztec_diamond, build_rectangle};

    #[test]
    fn ascii_region_shapes() {
        let ad1 = build_aztec_diamond(1).unwrap();
        assert_eq!(ascii_region(&ad1), "##\n##\n");
        let ad2 = build_aztec_diamond(2).unwrap();
        assert_eq!(ascii_region(&ad2), ".##.\n####\n####\n.##.\n");
    }

    #[test]
    fn ascii_tiling_glyphs() {
        let strip = build_rectangle(2, 1).unwrap();
        let t = &enumerate_tilings(&dual_graph(&strip), 4).unwrap()[0];
        assert_eq!(ascii_tiling(&strip, t), "<>\n");
        let column = build_rectangle(1, 2).unwrap();
        let t = &enumerate_tilings(&dual_graph(&column), 4).unwrap()[0];
        assert_eq!(ascii_tiling(&column, t), "^\nv\n");
    }

    #[test]
    fn svg_is_deterministic_and_wellformed() {
        let ad2 = build_aztec_diamond(2).unwrap();
        let svg = svg_region(&ad2);
        assert_eq!(svg, svg_region(&ad2));
        assert!(svg.starts_with("<svg "));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<rect").count(), ad2.len());

        let tilings = enumerate_tilings(&dual_graph(&ad2), 16).unwrap();
        let svg = svg_tiling(&ad2, &tilings[0]);
        assert_eq!(svg.matches("<rect").count(), ad2.len() / 2);
    }
}
