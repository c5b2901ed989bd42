//! Tiling statistics: exact domino occupation probabilities and uniform
//! random sampling.
//!
//! Probabilities are exact rationals: the probability that a uniformly
//! random tiling contains a given domino equals the tiling count of the
//! region with that domino's two cells removed, divided by the count of the
//! full region. Sampling places dominoes one at a time, always covering the
//! lowest remaining cell, with the partner chosen in proportion to the exact
//! number of completions — so the final tiling is exactly uniform.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::{BigInt, RandBigInt};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::engines::{count, BigCount, Engine, Tiling};
use crate::geometry::{Cell, Region};

/// A potential domino position: an ordered pair of adjacent cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DominoSite {
    pub a: Cell,
    pub b: Cell,
}

impl DominoSite {
    /// Orders the pair; `None` if the cells are not edge-adjacent.
    pub fn new(a: Cell, b: Cell) -> Option<Self> {
        if !a.is_adjacent(&b) {
            return None;
        }
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Some(DominoSite { a, b })
    }

    pub fn is_horizontal(&self) -> bool {
        self.a.row == self.b.row
    }
}

/// All domino sites inside a region, sorted.
pub fn domino_sites(region: &Region) -> Vec<DominoSite> {
    let mut sites = Vec::new();
    for cell in region.cells() {
        let right = Cell::new(cell.col + 1, cell.row);
        let up = Cell::new(cell.col, cell.row + 1);
        if region.contains(&right) {
            sites.push(DominoSite { a: *cell, b: right });
        }
        if region.contains(&up) {
            sites.push(DominoSite { a: *cell, b: up });
        }
    }
    sites
}

/// Exact probability that a uniformly random tiling of `region` contains a
/// domino on `site`. Returns `None` when the region has no tilings.
pub fn occupation_probability(region: &Region, site: &DominoSite) -> Option<BigRational> {
    let mut cache = CountCache::default();
    occupation_probability_cached(region, site, &mut cache)
}

fn occupation_probability_cached(
    region: &Region,
    site: &DominoSite,
    cache: &mut CountCache,
) -> Option<BigRational> {
    let total = cache.count(region.cell_set().clone());
    if total.is_zero() {
        return None;
    }
    if !region.contains(&site.a) || !region.contains(&site.b) {
        return Some(BigRational::zero());
    }
    let without = cache.count(minus(region.cell_set(), site));
    Some(BigRational::new(
        BigInt::from(without),
        BigInt::from(total),
    ))
}

fn minus(cells: &BTreeSet<Cell>, site: &DominoSite) -> BTreeSet<Cell> {
    let mut remaining = cells.clone();
    remaining.remove(&site.a);
    remaining.remove(&site.b);
    remaining
}

/// Memoized tiling counts keyed by exact cell set, shared by the heatmap
/// and the sampler.
#[derive(Default)]
pub struct CountCache {
    counts: HashMap<BTreeSet<Cell>, BigCount>,
}

impl CountCache {
    fn count(&mut self, cells: BTreeSet<Cell>) -> BigCount {
        if let Some(c) = self.counts.get(&cells) {
            return c.clone();
        }
        let region = Region::from_cells(cells.iter().copied(), "sub");
        let c = count(&region, Engine::Auto).expect("auto engine is total on finite regions");
        self.counts.insert(cells, c.clone());
        c
    }
}

/// Exact occupation probability for every domino site of the region, in
/// site order. Empty when the region has no tilings.
pub fn occupation_heatmap(region: &Region) -> Vec<(DominoSite, BigRational)> {
    let mut cache = CountCache::default();
    let total = cache.count(region.cell_set().clone());
    if total.is_zero() {
        return Vec::new();
    }
    domino_sites(region)
        .into_iter()
        .map(|site| {
            let p = occupation_probability_cached(region, &site, &mut cache)
                .expect("total is nonzero");
            (site, p)
        })
        .collect()
}

/// CSV form of the heatmap: one row per site with exact rational and a
/// decimal approximation.
pub fn heatmap_csv(heatmap: &[(DominoSite, BigRational)]) -> String {
    let mut out = String::from("col_a,row_a,col_b,row_b,orientation,probability,decimal\n");
    for (site, p) in heatmap {
        let orient = if site.is_horizontal() { "horizontal" } else { "vertical" };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{:.6}",
            site.a.col,
            site.a.row,
            site.b.col,
            site.b.row,
            orient,
            p,
            p.to_f64().unwrap_or(f64::NAN)
        );
    }
    out
}

/// SVG form of the heatmap: one translucent bar per site, opacity equal to
/// the occupation probability.
pub fn heatmap_svg(region: &Region, heatmap: &[(DominoSite, BigRational)]) -> String {
    let Some((min_col, min_row, max_col, max_row)) = region.bounding_box() else {
        return String::from("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"/>\n");
    };
    const PX: i64 = 20;
    let w = (max_col - min_col + 1) * PX;
    let h = (max_row - min_row + 1) * PX;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    );
    for cell in region.cells() {
        let x = (cell.col - min_col) * PX;
        let y = (max_row - cell.row) * PX;
        let _ = writeln!(
            out,
            r##"  <rect x="{x}" y="{y}" width="{PX}" height="{PX}" fill="none" stroke="#c0c8d4" stroke-width="1"/>"##
        );
    }
    for (site, p) in heatmap {
        let opacity = p.to_f64().unwrap_or(0.0).clamp(0.0, 1.0);
        let (bw, bh, fill) = if site.is_horizontal() {
            (2 * PX - 4, PX - 4, "#f2c14e")
        } else {
            (PX - 4, 2 * PX - 4, "#6daedb")
        };
        let top = if site.is_horizontal() { site.a.row } else { site.b.row };
        let x = (site.a.col - min_col) * PX + 2;
        let y = (max_row - top) * PX + 2;
        let _ = writeln!(
            out,
            r#"  <rect x="{x}" y="{y}" width="{bw}" height="{bh}" rx="3" fill="{fill}" fill-opacity="{opacity:.6}"/>"#
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Exactly uniform sampler over the tilings of one region. Sub-region
/// counts are cached, so drawing many samples from the same region reuses
/// the arithmetic.
pub struct Sampler {
    region: Region,
    cache: CountCache,
}

impl Sampler {
    pub fn new(region: Region) -> Self {
        Sampler {
            region,
            cache: CountCache::default(),
        }
    }

    /// One uniform tiling, or `None` when the region has none.
    pub fn sample(&mut self, rng: &mut ChaCha12Rng) -> Option<Tiling> {
        let total = self.cache.count(self.region.cell_set().clone());
        if total.is_zero() {
            return None;
        }
        let mut remaining = self.region.cell_set().clone();
        let mut dominoes = Vec::with_capacity(remaining.len() / 2);
        while let Some(&low) = remaining.iter().next() {
            // partner candidates in fixed order, weighted by completions
            let partners: Vec<Cell> = low
                .neighbors()
                .into_iter()
                .filter(|n| remaining.contains(n))
                .collect();
            let mut weights = Vec::with_capacity(partners.len());
            let mut total_here = BigCount::zero();
            for p in &partners {
                let mut sub = remaining.clone();
                sub.remove(&low);
                sub.remove(p);
                let w = self.cache.count(sub);
                total_here += &w;
                weights.push(w);
            }
            debug_assert!(!total_here.is_zero(), "partial placement must extend");
            let mut draw = rng.gen_biguint_below(&total_here);
            let mut chosen = partners.len() - 1;
            for (i, w) in weights.iter().enumerate() {
                if draw < *w {
                    chosen = i;
                    break;
                }
                draw -= w;
            }
            let partner = partners[chosen];
            remaining.remove(&low);
            remaining.remove(&partner);
            let (a, b) = if low <= partner { (low, partner) } else { (partner, low) };
            dominoes.push((a, b));
        }
        dominoes.sort();
        Some(Tiling { dominoes })
    }
}

/// One uniform tiling from a fixed seed; deterministic across runs.
pub fn sample_uniform(region: &Region, seed: u64) -> Option<Tiling> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    Sampler::new(region.clone()).sample(&mut rng)
}

/// Many uniform tilings from one seeded stream.
pub fn sample_many(region: &Region, seed: u64, count: usize) -> Vec<Tiling> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut sampler = Sampler::new(region.clone());
    (0..count)
        .map_while(|_| sampler.sample(&mut rng))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_aztec_diamond, build_rectangle};
    use num_rational::BigRational;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn probability_2x2() {
        // 2x2 square: 2 tilings; every site appears in exactly one
        let sq = build_rectangle(2, 2).unwrap();
        for site in domino_sites(&sq) {
            assert_eq!(occupation_probability(&sq, &site), Some(ratio(1, 2)));
        }
    }

    #[test]
    fn heatmap_conservation() {
        // each tiling has |cells|/2 dominoes, so probabilities over all
        // sites sum to exactly that
        for region in [
            build_aztec_diamond(2).unwrap(),
            build_rectangle(4, 3).unwrap(),
        ] {
            let hm = occupation_heatmap(&region);
            let sum: BigRational = hm.iter().map(|(_, p)| p.clone()).sum();
            assert_eq!(sum, ratio(region.len() as i64 / 2, 1));
        }
    }

    #[test]
    fn heatmap_artifacts() {
        let ad2 = build_aztec_diamond(2).unwrap();
        let hm = occupation_heatmap(&ad2);
        let csv = heatmap_csv(&hm);
        assert!(csv.starts_with("col_a,row_a,"));
        assert_eq!(csv.lines().count(), hm.len() + 1);
        let svg = heatmap_svg(&ad2, &hm);
        assert!(svg.starts_with("<svg "));
        assert_eq!(svg, heatmap_svg(&ad2, &hm));
    }

    #[test]
    fn sampling_is_valid_and_deterministic() {
        let ad2 = build_aztec_diamond(2).unwrap();
        let t1 = sample_uniform(&ad2, 42).unwrap();
        let t2 = sample_uniform(&ad2, 42).unwrap();
        assert_eq!(t1, t2);
        assert!(t1.covers(&ad2));
        let t3 = sample_uniform(&ad2, 43).unwrap();
        assert!(t3.covers(&ad2));
    }

    #[test]
    fn sampling_hits_every_tiling() {
        // AD_2 has 8 tilings; 400 draws should see them all
        let ad2 = build_aztec_diamond(2).unwrap();
        let samples = sample_many(&ad2, 7, 400);
        assert_eq!(samples.len(), 400);
        let distinct: std::collections::BTreeSet<_> =
            samples.iter().map(|t| t.dominoes.clone()).collect();
        assert_eq!(distinct.len(), 8);
    }

    #[test]
    fn untileable_region_samples_none() {
        let odd = build_rectangle(3, 1).unwrap();
        assert!(sample_uniform(&odd, 1).is_none());
    }
}
