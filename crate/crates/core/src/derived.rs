//! End-to-end applications of IPBD/GDD templates: incomplete mutually
//! orthogonal latin squares, and packings/coverings with deficiency and
//! excess accounting.

use std::collections::BTreeMap;

use crate::compose::{IngredientRequest, RequestShape, Resolver};
use crate::error::{Error, Result};
use crate::gen::{self, tabulated, CatalogObject};
use crate::model::{normalize, BlockSizeSet, Design, DesignKind, LatinSquareSet};
use crate::verify::{
    packing_stats, verify_design, verify_latin, verify_orthogonal, CoverageMatrix, PackingStats,
};

/// Assemble t pairwise-orthogonal incomplete latin squares of side n with
/// hole m from an IPBD((n;m), K) template: points index rows, columns and
/// symbols identically, hole symbols are the trailing m indices, and each
/// template block carries idempotent MOLS of its size mapped onto its
/// points. Requires t idempotent MOLS of every block size (so every
/// k in K must be a prime or tabulated prime power with t <= k - 2).
pub fn imols_from_ipbd(template: &Design, t: usize) -> Result<LatinSquareSet> {
    if t == 0 {
        return Err(Error::Precondition("need at least one square".into()));
    }
    let template = normalize(template)?;
    let n = template.n_points;
    let w = match &template.kind {
        DesignKind::Ipbd { hole, .. } => hole.len(),
        DesignKind::Pbd { .. } => 0,
        _ => {
            return Err(Error::Precondition(
                "template must be an IPBD or PBD".into(),
            ))
        }
    };
    // a hole of size <= 1 produces ordinary (complete) latin squares
    let m = if w >= 2 { w } else { 0 };
    let hole: Vec<usize> = (n - m..n).collect();

    let mut by_size: BTreeMap<usize, LatinSquareSet> = BTreeMap::new();
    for size in template.block_size_profile().keys() {
        let squares = gen::idempotent_mols(*size, t).map_err(|e| {
            Error::Resolution(format!("no {t} idempotent MOLS of order {size}: {e}"))
        })?;
        by_size.insert(*size, squares);
    }

    let mut squares: Vec<Vec<Option<usize>>> = vec![vec![None; n * n]; t];
    // idempotent diagonal outside the hole
    for sq in squares.iter_mut() {
        for i in 0..n - m {
            sq[i * n + i] = Some(i);
        }
    }
    for block in &template.blocks {
        let q = by_size.get(&block.len()).expect("prepared above");
        for s in 0..t {
            for (bi, &i) in block.iter().enumerate() {
                for (bj, &j) in block.iter().enumerate() {
                    if bi == bj {
                        continue;
                    }
                    let symbol = q.cell(s, bi, bj).expect("complete square");
                    squares[s][i * n + j] = Some(block[symbol]);
                }
            }
        }
    }
    let set = LatinSquareSet::new(n, hole, squares)?;
    let cert = verify_latin(&set);
    if !cert.valid {
        return Err(Error::Certification(format!(
            "imols_from_ipbd: {}",
            cert.summary()
        )));
    }
    let cert = verify_orthogonal(&set);
    if !cert.valid {
        return Err(Error::Certification(format!(
            "imols_from_ipbd: {}",
            cert.summary()
        )));
    }
    Ok(set)
}

/// How the template's hole is completed in a packing construction.
#[derive(Debug, Clone)]
pub enum HoleFiller {
    /// Leave the hole pairs uncovered (they join the leave).
    None,
    /// A catalog key naming a packing on the hole.
    Catalog(String),
    /// An explicit design on the hole points.
    Design(Design),
}

#[derive(Debug, Clone)]
pub enum PackingTemplate {
    /// An IPBD((v; w), {k}); the hole receives the filler.
    Ipbd { v: usize, w: usize },
    /// A GDD of type g^n h^1 (h = 0 for uniform); groups join the leave,
    /// the h-group receives the filler.
    Gdd { g: usize, n: usize, h: usize },
}

/// Recipe for a (v, k, 1)-packing built from a template with structured
/// leave. Unfilled groups contribute complete-graph components to the
/// leave.
#[derive(Debug, Clone)]
pub struct PackingRecipe {
    pub v: usize,
    pub k: usize,
    pub template: PackingTemplate,
    pub hole_filler: HoleFiller,
    /// Fill each group with a sub-packing instead of leaving K_g leaves.
    pub fill_groups: bool,
}

fn filler_blocks(filler: &HoleFiller, hole_size: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    match filler {
        HoleFiller::None => Ok(Vec::new()),
        HoleFiller::Catalog(key) => match tabulated(key)? {
            CatalogObject::Design(d) => {
                if d.n_points != hole_size {
                    return Err(Error::Precondition(format!(
                        "filler {key} has {} points, hole has {hole_size}",
                        d.n_points
                    )));
                }
                Ok(d.blocks)
            }
            _ => Err(Error::Precondition(format!(
                "catalog entry {key} is not a design"
            ))),
        },
        HoleFiller::Design(d) => {
            if d.n_points != hole_size {
                return Err(Error::Precondition(format!(
                    "filler has {} points, hole has {hole_size}",
                    d.n_points
                )));
            }
            if d.blocks.iter().any(|b| b.len() != k) {
                return Err(Error::Precondition(
                    "filler block sizes must equal k".into(),
                ));
            }
            Ok(d.blocks.clone())
        }
    }
}

/// Build a (v, k, 1)-packing from the recipe: template blocks, plus the
/// hole filler, plus optional per-group sub-packings. The output is
/// verified as a packing and returned with its deficiency statistics.
pub fn packing_from_template(
    recipe: &PackingRecipe,
    resolver: &Resolver,
) -> Result<(Design, PackingStats)> {
    let k = recipe.k;
    let sizes = BlockSizeSet::new([k])?;
    let (template, hole_points, group_ranges): (Design, Vec<usize>, Vec<(usize, usize)>) =
        match recipe.template {
            PackingTemplate::Ipbd { v, w } => {
                let req = IngredientRequest::new(RequestShape::Ipbd { v, w }, &sizes)
                    .noting("packing template");
                let d = normalize(&*resolver.resolve(&req)?)?;
                (d, (v - w..v).collect(), Vec::new())
            }
            PackingTemplate::Gdd { g, n, h } => {
                let mut group_sizes = vec![g; n];
                if h > 0 {
                    group_sizes.push(h);
                }
                let req = IngredientRequest::new(RequestShape::Gdd { group_sizes }, &sizes)
                    .noting("packing template");
                let d = normalize(&*resolver.resolve(&req)?)?;
                let v = d.n_points;
                let hole = if h > 0 {
                    (v - h..v).collect()
                } else {
                    Vec::new()
                };
                let ranges = (0..n).map(|i| (i * g, (i + 1) * g)).collect();
                (d, hole, ranges)
            }
        };
    if template.n_points != recipe.v {
        return Err(Error::Precondition(format!(
            "template has {} points, recipe wants v = {}",
            template.n_points, recipe.v
        )));
    }

    let mut blocks = template.blocks.clone();
    let base = recipe.v - hole_points.len();
    for b in filler_blocks(&recipe.hole_filler, hole_points.len(), k)? {
        blocks.push(b.iter().map(|&p| base + p).collect());
    }
    if recipe.fill_groups {
        for &(start, end) in &group_ranges {
            let g = end - start;
            if g >= k {
                let key = format!("packing({g},{k},1)");
                if let Ok(CatalogObject::Design(d)) = tabulated(&key) {
                    for b in &d.blocks {
                        blocks.push(b.iter().map(|&p| start + p).collect());
                    }
                }
            }
        }
    }

    let d = Design::new(
        DesignKind::Packing { v: recipe.v, k },
        1,
        sizes,
        blocks,
        None,
    )?;
    let cert = verify_design(&d);
    if !cert.valid {
        return Err(Error::Certification(format!(
            "packing_from_template: {}",
            cert.summary()
        )));
    }
    let stats = packing_stats(&d)?;
    Ok((d, stats))
}

/// Excess accounting for coverings: pairs covered more than once, with
/// multiplicities.
#[derive(Debug, Clone)]
pub struct CoveringStats {
    pub b: u64,
    /// (pair, multiplicity - 1) for every multiply covered pair.
    pub excess: Vec<((usize, usize), u8)>,
    pub total_excess: u64,
}

fn covering_stats(design: &Design) -> CoveringStats {
    let cov = CoverageMatrix::of(design);
    let mut excess = Vec::new();
    let mut total = 0u64;
    for y in 1..design.n_points {
        for x in 0..y {
            let c = cov.get(x, y);
            if c > 1 {
                excess.push(((x, y), c - 1));
                total += (c - 1) as u64;
            }
        }
    }
    CoveringStats {
        b: design.blocks.len() as u64,
        excess,
        total_excess: total,
    }
}

/// Build a verified (v, 3, 1)-covering at desk scale:
///
/// * v = 1, 3 (mod 6): a Steiner triple system (zero excess);
/// * v in {4, 5, 6, 8}: the tabulated optimal covering;
/// * v = 5 (mod 6): an IPBD((v;5), {3}) with the tabulated (5,3,1)-covering
///   on the hole;
/// * v = 4 (mod 6): a {3}-GDD of type 2^((v-4)/2) 4^1 with the tabulated
///   (4,3,1)-covering on the hole and one completing triple per 2-group;
/// * v = 0, 2 (mod 6): a {3}-GDD of type 2^(v/2) (a deleted-point triple
///   system) with one completing triple per 2-group.
pub fn covering_from_template(v: usize, resolver: &Resolver) -> Result<(Design, CoveringStats)> {
    let k = 3usize;
    if v < k {
        return Err(Error::Precondition(format!("covering needs v >= {k}")));
    }
    let sizes = BlockSizeSet::new([k])?;
    let finish = |blocks: Vec<Vec<usize>>| -> Result<(Design, CoveringStats)> {
        let d = Design::new(
            DesignKind::Covering { v, k },
            1,
            BlockSizeSet::new([k])?,
            blocks,
            None,
        )?;
        let cert = verify_design(&d);
        if !cert.valid {
            return Err(Error::Certification(format!(
                "covering_from_template: {}",
                cert.summary()
            )));
        }
        let stats = covering_stats(&d);
        Ok((d, stats))
    };

    if v % 6 == 1 || v % 6 == 3 {
        return finish(gen::steiner_triple(v)?.blocks);
    }
    if let Ok(CatalogObject::Design(d)) = tabulated(&format!("covering({v},3,1)")) {
        return finish(d.blocks);
    }
    if v % 6 == 5 {
        let req = IngredientRequest::new(RequestShape::Ipbd { v, w: 5 }, &sizes)
            .noting("covering template");
        let ipbd = normalize(&*resolver.resolve(&req)?)?;
        let mut blocks = ipbd.blocks;
        match tabulated("covering(5,3,1)")? {
            CatalogObject::Design(hole_cover) => {
                for b in &hole_cover.blocks {
                    blocks.push(b.iter().map(|&p| v - 5 + p).collect());
                }
            }
            _ => unreachable!("covering(5,3,1) is a design"),
        }
        return finish(blocks);
    }
    if v % 6 == 4 {
        // GDD(2^n 4^1, {3}) + (4,3,1)-covering + one triple per 2-group
        let n = (v - 4) / 2;
        let mut group_sizes = vec![2; n];
        group_sizes.push(4);
        let req = IngredientRequest::new(RequestShape::Gdd { group_sizes }, &sizes)
            .noting("covering template");
        let gdd = normalize(&*resolver.resolve(&req)?)?;
        let mut blocks = gdd.blocks;
        match tabulated("covering(4,3,1)")? {
            CatalogObject::Design(hole_cover) => {
                for b in &hole_cover.blocks {
                    blocks.push(b.iter().map(|&p| v - 4 + p).collect());
                }
            }
            _ => unreachable!("covering(4,3,1) is a design"),
        }
        for i in 0..n {
            // complete each 2-group with a hole point
            blocks.push(vec![2 * i, 2 * i + 1, v - 4 + (i % 4)]);
        }
        return finish(blocks);
    }
    // v = 0, 2 (mod 6): delete a point from a triple system of order v+1
    let gdd = gen::gdd_2u_from_triple_system(v / 2)?;
    let mut blocks = gdd.blocks;
    for i in 0..v / 2 {
        let third = (2 * i + 2) % v;
        blocks.push({
            let mut b = vec![2 * i, 2 * i + 1, third];
            b.sort_unstable();
            b
        });
    }
    finish(blocks)
}
