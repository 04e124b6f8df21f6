//! The recursive constructions as verified operators: weighting (Wilson's
//! Fundamental Construction), block breaking, hole and group filling,
//! projective extension, truncated-transversal-design weighting, point
//! inflation, holey-GDD filling, and index expansion — plus best-effort
//! pipelines that chain them through the ingredient resolver.
//!
//! Every operator certifies its output with the pair-coverage verifier
//! before returning; composition never bypasses certification.

mod resolver;

pub use resolver::{IngredientRequest, RequestShape, Resolver};

use crate::arith::realizable_hole_sums;
use crate::error::{Error, Result};
use crate::gen;
use crate::model::{normalize, BlockSizeSet, Design, DesignKind};
use crate::verify::verify_design;

fn certify(d: Design, what: &str) -> Result<Design> {
    let cert = verify_design(&d);
    if !cert.valid {
        return Err(Error::Certification(format!("{what}: {}", cert.summary())));
    }
    Ok(d)
}

/// View a PBD as an IPBD with a hole of size 1 on its last point.
pub fn pbd_as_ipbd(design: &Design) -> Result<Design> {
    let d = normalize(design)?;
    match d.kind {
        DesignKind::Pbd { v } => Design::new(
            DesignKind::ipbd(v, 1),
            d.lambda,
            d.block_sizes,
            d.blocks,
            d.resolution,
        ),
        _ => Err(Error::Precondition("expected a PBD".into())),
    }
}

/// Group view of a master design for weighting constructions: groups of a
/// GDD/TD, unit groups for a PBD, unit groups plus the hole as final group
/// for an IPBD.
fn master_groups(design: &Design) -> Result<Vec<Vec<usize>>> {
    let explicit = design.kind.group_sets();
    if !explicit.is_empty() {
        return Ok(explicit);
    }
    match &design.kind {
        DesignKind::Pbd { v } => Ok((0..*v).map(|p| vec![p]).collect()),
        DesignKind::Ipbd { v, hole } => {
            let hs: std::collections::BTreeSet<usize> = hole.iter().copied().collect();
            let mut groups: Vec<Vec<usize>> = (0..*v)
                .filter(|p| !hs.contains(p))
                .map(|p| vec![p])
                .collect();
            groups.push(hole.clone());
            Ok(groups)
        }
        _ => Err(Error::Precondition(format!(
            "no group structure for kind {}",
            design.kind.tag()
        ))),
    }
}

/// Wilson's Fundamental Construction: assign nonnegative weights to the
/// points of a master GDD and replace each block B by an ingredient
/// GDD([w(x) : x in B], K). The result is a GDD whose group sizes are the
/// weight sums over the master groups.
pub fn wfc(
    master: &Design,
    weights: &[usize],
    sizes: &BlockSizeSet,
    resolver: &Resolver,
) -> Result<Design> {
    if weights.len() != master.n_points {
        return Err(Error::Precondition(format!(
            "{} weights for {} points",
            weights.len(),
            master.n_points
        )));
    }
    let groups_in = master_groups(master)?;
    let mut offset = vec![0usize; master.n_points + 1];
    for p in 0..master.n_points {
        offset[p + 1] = offset[p] + weights[p];
    }

    let groups: Vec<Vec<usize>> = groups_in
        .iter()
        .map(|g| {
            g.iter()
                .flat_map(|&p| offset[p]..offset[p] + weights[p])
                .collect::<Vec<_>>()
        })
        .filter(|g: &Vec<usize>| !g.is_empty())
        .collect();

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for block in &master.blocks {
        let loaded: Vec<usize> = block.iter().copied().filter(|&p| weights[p] > 0).collect();
        if loaded.len() < 2 {
            continue;
        }
        let multiset: Vec<usize> = {
            let mut m: Vec<usize> = loaded.iter().map(|&p| weights[p]).collect();
            m.sort_unstable();
            m
        };
        let req = IngredientRequest::new(
            RequestShape::Gdd {
                group_sizes: multiset.clone(),
            },
            sizes,
        )
        .noting("weighting ingredient");
        let ingredient = resolver.resolve(&req).map_err(|e| {
            Error::Resolution(format!("weight multiset {multiset:?} unresolvable: {e}"))
        })?;
        // match ingredient groups (contiguous, sorted sizes) to block points
        let ing_groups = ingredient.kind.group_sets();
        let mut assigned: Vec<Option<usize>> = vec![None; ing_groups.len()];
        let mut used = vec![false; loaded.len()];
        for (gi, g) in ing_groups.iter().enumerate() {
            let want = g.len();
            let slot = loaded
                .iter()
                .enumerate()
                .find(|(li, &p)| !used[*li] && weights[p] == want)
                .map(|(li, _)| li)
                .ok_or_else(|| {
                    Error::Resolution(format!(
                        "ingredient group of size {want} has no matching weight"
                    ))
                })?;
            used[slot] = true;
            assigned[gi] = Some(loaded[slot]);
        }
        // map ingredient point -> (its group, rank within group) -> new point
        let mut point_map = vec![0usize; ingredient.n_points];
        for (gi, g) in ing_groups.iter().enumerate() {
            let target = assigned[gi].expect("every group assigned");
            for (rank, &q) in g.iter().enumerate() {
                point_map[q] = offset[target] + rank;
            }
        }
        for b in &ingredient.blocks {
            blocks.push(b.iter().map(|&q| point_map[q]).collect());
        }
    }

    let d = Design::new(DesignKind::Gdd { groups }, 1, sizes.clone(), blocks, None)?;
    certify(normalize(&d)?, "wfc")
}

/// Replace every block by a PBD on its points with sizes in `target`,
/// preserving the kind (and any resolution, since each replacement
/// partitions the pairs of its block and keeps its point set).
pub fn break_blocks(design: &Design, target: &BlockSizeSet, resolver: &Resolver) -> Result<Design> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut replacement: Vec<Vec<usize>> = Vec::with_capacity(design.blocks.len());
    for block in &design.blocks {
        let req = IngredientRequest::new(RequestShape::Pbd { v: block.len() }, target)
            .noting("block breaking");
        let pbd = resolver.resolve(&req).map_err(|e| {
            Error::Resolution(format!(
                "no PBD({},{target}) to break a block: {e}",
                block.len()
            ))
        })?;
        let mut ids = Vec::new();
        for b in &pbd.blocks {
            ids.push(blocks.len());
            blocks.push(b.iter().map(|&q| block[q]).collect());
        }
        replacement.push(ids);
    }
    let resolution = design
        .resolution
        .as_ref()
        .map(|r| crate::model::Resolution {
            classes: r
                .classes
                .iter()
                .map(|c| crate::model::ResolutionClass {
                    blocks: c
                        .blocks
                        .iter()
                        .flat_map(|&bi| replacement[bi].iter().copied())
                        .collect(),
                    kind: c.kind,
                })
                .collect(),
        });
    let d = Design::new(
        design.kind.clone(),
        design.lambda,
        target.clone(),
        blocks,
        resolution,
    )?;
    certify(d, "break_blocks")
}

/// Fill the hole of an IPBD((v;w), K) with a PBD(w) or an IPBD((w;w')) on
/// the hole points. The result is a PBD(v) or an IPBD((v;w')).
pub fn fill_hole(outer: &Design, inner: &Design) -> Result<Design> {
    let outer = normalize(outer)?;
    let inner = normalize(inner)?;
    let w = match &outer.kind {
        DesignKind::Ipbd { hole, .. } => hole.len(),
        _ => return Err(Error::Precondition("outer design must be an IPBD".into())),
    };
    if inner.n_points != w {
        return Err(Error::Precondition(format!(
            "inner design has {} points, hole has {w}",
            inner.n_points
        )));
    }
    if inner.lambda != outer.lambda {
        return Err(Error::Precondition(
            "index mismatch between outer and inner".into(),
        ));
    }
    for b in &inner.blocks {
        if !outer.block_sizes.contains(b.len()) {
            return Err(Error::Precondition(format!(
                "inner block size {} outside K = {}",
                b.len(),
                outer.block_sizes
            )));
        }
    }
    let v = outer.n_points;
    let base = v - w;
    let kind = match &inner.kind {
        DesignKind::Pbd { .. } => DesignKind::Pbd { v },
        DesignKind::Ipbd { hole, .. } => DesignKind::ipbd(v, hole.len()),
        _ => {
            return Err(Error::Precondition(
                "inner design must be a PBD or IPBD".into(),
            ))
        }
    };
    let mut blocks = outer.blocks.clone();
    for b in &inner.blocks {
        blocks.push(b.iter().map(|&p| base + p).collect());
    }
    let d = Design::new(kind, outer.lambda, outer.block_sizes.clone(), blocks, None)?;
    certify(d, "fill_hole")
}

fn igdd_shape(design: &Design) -> Result<(usize, usize, usize)> {
    match &design.kind {
        DesignKind::Igdd { groups, holes } => {
            let u = groups.len();
            let g = groups.first().map(|x| x.len()).unwrap_or(0);
            let h = holes.first().map(|x| x.len()).unwrap_or(0);
            if groups.iter().any(|x| x.len() != g) || holes.iter().any(|x| x.len() != h) {
                return Err(Error::Precondition("IGDD must be uniform (g;h)^u".into()));
            }
            Ok((g, h, u))
        }
        _ => Err(Error::Precondition("expected an IGDD".into())),
    }
}

/// Fill the groups of an IGDD((g;h)^u, K) with an IPBD((x;y), K) where
/// g - h = x - y and y >= h. Each group receives a copy of the filler over
/// its points plus y - h new common points; the holes and new points merge
/// into the hole of the resulting IPBD((v;w), K) with v - w = u(x - y) and
/// w = (u-1)h + y.
pub fn igdd_fill(igdd: &Design, filler: &Design) -> Result<Design> {
    let igdd = normalize(igdd)?;
    let filler = normalize(&match filler.kind {
        DesignKind::Pbd { .. } => pbd_as_ipbd(filler)?,
        _ => filler.clone(),
    })?;
    let (g, h, u) = igdd_shape(&igdd)?;
    let (x, y) = match &filler.kind {
        DesignKind::Ipbd { v, hole } => (*v, hole.len()),
        _ => return Err(Error::Precondition("filler must be an IPBD".into())),
    };
    if g - h != x - y {
        return Err(Error::Precondition(format!(
            "size mismatch: g-h = {} but x-y = {}",
            g - h,
            x - y
        )));
    }
    if y < h {
        return Err(Error::Precondition(format!(
            "need y >= h, got y = {y}, h = {h}"
        )));
    }

    let side = g - h;
    let v_out = u * side + (u - 1) * h + y;
    let w_out = (u - 1) * h + y;
    // non-hole block of new indices: group i non-hole part -> [i*side, (i+1)*side)
    // holes -> [u*side + i*h, ...), new points at the very end
    let old_to_new = |p: usize| -> usize {
        let (i, r) = (p / g, p % g);
        if r < side {
            i * side + r
        } else {
            u * side + i * h + (r - side)
        }
    };
    let mut blocks: Vec<Vec<usize>> = igdd
        .blocks
        .iter()
        .map(|b| b.iter().map(|&p| old_to_new(p)).collect())
        .collect();
    for i in 0..u {
        // filler non-hole [0, x-y) -> group i non-hole; filler hole: first h
        // points onto the group hole, the rest onto the new points
        let map = |q: usize| -> usize {
            if q < x - y {
                i * side + q
            } else {
                let j = q - (x - y);
                if j < h {
                    u * side + i * h + j
                } else {
                    u * side + u * h + (j - h)
                }
            }
        };
        for b in &filler.blocks {
            blocks.push(b.iter().map(|&q| map(q)).collect());
        }
    }
    let sizes = union_sizes(&igdd.block_sizes, &filler.block_sizes)?;
    let d = Design::new(DesignKind::ipbd(v_out, w_out), 1, sizes, blocks, None)?;
    debug_assert_eq!(v_out - w_out, u * (x - y));
    certify(d, "igdd_fill")
}

/// Fill the groups of an IGDD((g;h)^u, K) with a GDD(alpha^x (alpha*y)^1, K)
/// where g - h = alpha*x and h <= alpha*y. The result is a
/// GDD(alpha^n w^1, K) with n = u*x and w = h(u-1) + alpha*y.
pub fn igdd_fill_gdd(igdd: &Design, filler: &Design) -> Result<Design> {
    let igdd = normalize(igdd)?;
    let filler = normalize(filler)?;
    let (g, h, u) = igdd_shape(&igdd)?;
    let fsizes: Vec<usize> = match &filler.kind {
        DesignKind::Gdd { groups } => groups.iter().map(|x| x.len()).collect(),
        _ => return Err(Error::Precondition("filler must be a GDD".into())),
    };
    let (alpha, x) = {
        let x = fsizes.len() - 1;
        if x == 0 {
            return Err(Error::Precondition(
                "filler needs at least two groups".into(),
            ));
        }
        let alpha = fsizes[0];
        if fsizes[..x].iter().any(|&s| s != alpha) {
            return Err(Error::Precondition(
                "filler must have type alpha^x (alpha*y)^1".into(),
            ));
        }
        (alpha, x)
    };
    let last = *fsizes.last().unwrap();
    if !last.is_multiple_of(alpha) {
        return Err(Error::Precondition(format!(
            "filler last group {last} not a multiple of alpha = {alpha}"
        )));
    }
    let y = last / alpha;
    if g - h != alpha * x {
        return Err(Error::Precondition(format!(
            "size mismatch: g-h = {} but alpha*x = {}",
            g - h,
            alpha * x
        )));
    }
    if h > alpha * y {
        return Err(Error::Precondition(format!(
            "need h <= alpha*y, got h = {h}, alpha*y = {}",
            alpha * y
        )));
    }

    let side = g - h;
    let n = u * x;
    let w = h * (u - 1) + alpha * y;
    // output groups: u*x groups of size alpha (the filler groups placed on
    // group slices), then one group of size w (all holes plus new points)
    let old_to_new = |p: usize| -> usize {
        let (i, r) = (p / g, p % g);
        if r < side {
            i * side + r
        } else {
            u * side + i * h + (r - side)
        }
    };
    let mut blocks: Vec<Vec<usize>> = igdd
        .blocks
        .iter()
        .map(|b| b.iter().map(|&p| old_to_new(p)).collect())
        .collect();
    for i in 0..u {
        let map = |q: usize| -> usize {
            if q < side {
                i * side + q
            } else {
                let j = q - side;
                if j < h {
                    u * side + i * h + j
                } else {
                    u * side + u * h + (j - h)
                }
            }
        };
        for b in &filler.blocks {
            blocks.push(b.iter().map(|&q| map(q)).collect());
        }
    }
    let mut group_sizes = vec![alpha; n];
    group_sizes.push(w);
    let sizes = union_sizes(&igdd.block_sizes, &filler.block_sizes)?;
    let d = Design::new(
        DesignKind::gdd_of_sizes(&group_sizes),
        1,
        sizes,
        blocks,
        None,
    )?;
    certify(d, "igdd_fill_gdd")
}

fn union_sizes(a: &BlockSizeSet, b: &BlockSizeSet) -> Result<BlockSizeSet> {
    BlockSizeSet::new(a.sizes().chain(b.sizes()))
}

/// Projective extension: each full parallel class defines one new point
/// appended to all of its blocks. A resolvable PBD(x, K) with r classes
/// becomes an IPBD((x+r; r), K+1); a resolvable GDD gains an extra group
/// of size r.
pub fn projective_extend(design: &Design) -> Result<Design> {
    let d = normalize(design)?;
    let res = d
        .resolution
        .as_ref()
        .ok_or_else(|| Error::Precondition("projective extension needs a resolution".into()))?;
    if res
        .classes
        .iter()
        .any(|c| c.kind != crate::model::ClassKind::Full)
    {
        return Err(Error::Precondition(
            "all parallel classes must be full".into(),
        ));
    }
    let r = res.classes.len();
    let v = d.n_points;
    let mut blocks = d.blocks.clone();
    for (ci, class) in res.classes.iter().enumerate() {
        for &bi in &class.blocks {
            blocks[bi].push(v + ci);
        }
    }
    let kind = match &d.kind {
        DesignKind::Pbd { .. } => DesignKind::ipbd(v + r, r),
        DesignKind::Gdd { groups } => {
            let mut groups = groups.clone();
            groups.push((v..v + r).collect());
            DesignKind::Gdd { groups }
        }
        DesignKind::Td { k, n } => {
            let mut groups: Vec<Vec<usize>> =
                (0..*k).map(|i| (i * n..(i + 1) * n).collect()).collect();
            groups.push((v..v + r).collect());
            DesignKind::Gdd { groups }
        }
        other => {
            return Err(Error::Precondition(format!(
                "projective extension undefined for kind {}",
                other.tag()
            )))
        }
    };
    let d = Design::new(kind, d.lambda, d.block_sizes.shifted_up()?, blocks, None)?;
    certify(d, "projective_extend")
}

/// Fill all but the last group of a GDD with IPBDs sharing alpha*z + 1 new
/// points as their common hole; the last group plus the new points become
/// the hole of the resulting IPBD((v; w), K) with w = |G_last| + alpha*z + 1.
pub fn fill_groups_with_ipbds(gdd: &Design, z: usize, resolver: &Resolver) -> Result<Design> {
    let gdd = normalize(gdd)?;
    let gdd = match &gdd.kind {
        DesignKind::Td { k, n } => {
            let sizes: Vec<usize> = vec![*n; *k];
            Design::new(
                DesignKind::gdd_of_sizes(&sizes),
                gdd.lambda,
                gdd.block_sizes.clone(),
                gdd.blocks,
                None,
            )?
        }
        _ => gdd,
    };
    let groups = match &gdd.kind {
        DesignKind::Gdd { groups } => groups.clone(),
        _ => return Err(Error::Precondition("expected a GDD".into())),
    };
    if groups.is_empty() {
        return Err(Error::Precondition("GDD has no groups".into()));
    }
    let s = gdd.block_sizes.alpha() as usize * z + 1;
    let v_in = gdd.n_points;
    let v = v_in + s;
    let w = groups.last().unwrap().len() + s;
    let mut blocks = gdd.blocks.clone();
    for g in &groups[..groups.len() - 1] {
        let req = IngredientRequest::new(
            RequestShape::Ipbd {
                v: g.len() + s,
                w: s,
            },
            &gdd.block_sizes,
        )
        .noting("group filler");
        let filler = resolver
            .resolve(&req)
            .map_err(|e| Error::Resolution(format!("missing filler {}: {e}", req.describe())))?;
        let filler = normalize(&filler)?;
        let start = g[0];
        debug_assert!(
            g.windows(2).all(|w| w[1] == w[0] + 1),
            "normalized groups are contiguous"
        );
        let map = |q: usize| -> usize {
            if q < g.len() {
                start + q
            } else {
                v_in + (q - g.len())
            }
        };
        for b in &filler.blocks {
            blocks.push(b.iter().map(|&q| map(q)).collect());
        }
    }
    let d = Design::new(
        DesignKind::ipbd(v, w),
        1,
        gdd.block_sizes.clone(),
        blocks,
        None,
    )?;
    certify(d, "fill_groups_with_ipbds")
}

/// Truncate the second-last group of a TD(t+2, A) to B points, give weight
/// alpha to all points outside the last group and the given weights (from
/// {alpha, alpha+beta, alpha*x_star}) to the last group, then weight. The
/// result is a GDD of type (alpha*A)^t (alpha*B)^1 (alpha*C)^1 with
/// alpha*C the weight sum of the last group.
pub fn truncate_weight_td(
    td: &Design,
    keep_b: usize,
    last_weights: &[usize],
    x_star: u64,
    sizes: &BlockSizeSet,
    resolver: &Resolver,
) -> Result<Design> {
    let (k, n) = match td.kind {
        DesignKind::Td { k, n } => (k, n),
        _ => return Err(Error::Precondition("expected a transversal design".into())),
    };
    if k < 3 {
        return Err(Error::Precondition("need a TD(t+2, A) with t >= 1".into()));
    }
    let (t, a) = (k - 2, n);
    if keep_b > a {
        return Err(Error::Precondition(format!(
            "cannot keep {keep_b} of {a} points"
        )));
    }
    if last_weights.len() != a {
        return Err(Error::Precondition(format!(
            "{} weights for a group of {a}",
            last_weights.len()
        )));
    }
    let alpha = sizes.alpha() as usize;
    let beta = sizes.beta() as usize;
    let allowed = [alpha, alpha + beta, alpha * x_star as usize];
    if let Some(bad) = last_weights.iter().find(|w| !allowed.contains(w)) {
        return Err(Error::Precondition(format!(
            "weight {bad} outside the allowed set {{{}, {}, {}}}",
            allowed[0], allowed[1], allowed[2]
        )));
    }
    let c_total: usize = last_weights.iter().sum();
    if !c_total.is_multiple_of(alpha) {
        return Err(Error::Precondition(
            "last-group weights must sum to a multiple of alpha".into(),
        ));
    }
    let c = (c_total / alpha) as u64;
    debug_assert!(
        realizable_hole_sums(a as u64, sizes.gamma(), x_star).contains(&c),
        "C = {c} must be a realizable hole sum"
    );

    // build the truncated master: drop the last A-B points of group t
    let drop_start = t * a + keep_b;
    let drop_end = (t + 1) * a;
    let remap = |p: usize| -> Option<usize> {
        if p < drop_start {
            Some(p)
        } else if p < drop_end {
            None
        } else {
            Some(p - (a - keep_b))
        }
    };
    let blocks: Vec<Vec<usize>> = td
        .blocks
        .iter()
        .map(|b| b.iter().filter_map(|&p| remap(p)).collect())
        .collect();
    let mut group_sizes = vec![a; t];
    group_sizes.push(keep_b);
    group_sizes.push(a);
    let master_sizes = BlockSizeSet::new([t + 1, t + 2])?;
    let master = Design::new(
        DesignKind::gdd_of_sizes(&group_sizes),
        1,
        master_sizes,
        blocks.into_iter().filter(|b| b.len() >= 2).collect(),
        None,
    )?;

    let mut weights = vec![alpha; master.n_points];
    for (j, &w) in last_weights.iter().enumerate() {
        weights[t * a + keep_b + j] = w;
    }
    let out = wfc(&master, &weights, sizes, resolver)?;

    // check the advertised type (alpha*A)^t (alpha*B)^1 (alpha*C)^1
    let got: Vec<usize> = match &out.kind {
        DesignKind::Gdd { groups } => groups.iter().map(|g| g.len()).collect(),
        _ => unreachable!("wfc returns a GDD"),
    };
    let mut expect = vec![alpha * a; t];
    if keep_b > 0 {
        expect.push(alpha * keep_b);
    }
    expect.push(c_total);
    if got != expect {
        return Err(Error::Certification(format!(
            "unexpected output type {got:?}, wanted {expect:?}"
        )));
    }
    Ok(out)
}

/// Blow up each point of an IPBD((n+s; s), M) template into g points,
/// replacing each block of size m by a GDD(g^m, K). The hole inflates to
/// the distinguished group: the result is a GDD(g^n (g*s)^1, K).
pub fn inflate(
    template: &Design,
    g: usize,
    sizes: &BlockSizeSet,
    resolver: &Resolver,
) -> Result<Design> {
    let template = normalize(template)?;
    let s = match &template.kind {
        DesignKind::Ipbd { hole, .. } => hole.len(),
        DesignKind::Pbd { .. } => 0,
        _ => {
            return Err(Error::Precondition(
                "template must be an IPBD or PBD".into(),
            ))
        }
    };
    let n = template.n_points - s;
    if g == 0 {
        return Err(Error::Precondition(
            "inflation factor must be positive".into(),
        ));
    }
    let master = template;
    let out = wfc(&master, &vec![g; master.n_points], sizes, resolver).map_err(|e| match e {
        Error::Resolution(msg) => Error::Resolution(format!("inflate: {msg}")),
        other => other,
    })?;
    let got: Vec<usize> = match &out.kind {
        DesignKind::Gdd { groups } => groups.iter().map(|x| x.len()).collect(),
        _ => unreachable!("wfc returns a GDD"),
    };
    let mut expect = vec![g; n];
    if s > 0 {
        expect.push(g * s);
    }
    if got != expect {
        return Err(Error::Certification(format!(
            "inflate output type {got:?}, wanted g^{n} ({})^1",
            g * s
        )));
    }
    Ok(out)
}

/// Fill the groups of an HGDD(u x h^m, K) with a GDD(h^m a^1, K): the holes
/// become groups of size h*u, the filler's trailing group contributes a new
/// points, and the result is a GDD((h*u)^m a^1, K). A filler of uniform
/// type h^m (a = 0) drops the extra group.
pub fn fill_hgdd(hgdd: &Design, filler: &Design) -> Result<Design> {
    let (u, h, m) = match hgdd.kind {
        DesignKind::Hgdd { u, h, m } => (u, h, m),
        _ => return Err(Error::Precondition("expected an HGDD".into())),
    };
    let filler = normalize(filler)?;
    let fsizes: Vec<usize> = match &filler.kind {
        DesignKind::Gdd { groups } => groups.iter().map(|x| x.len()).collect(),
        _ => return Err(Error::Precondition("filler must be a GDD".into())),
    };
    let a = if fsizes.len() == m {
        0
    } else if fsizes.len() == m + 1 {
        *fsizes.last().unwrap()
    } else {
        return Err(Error::Precondition(format!(
            "filler has {} groups, expected {m} or {}",
            fsizes.len(),
            m + 1
        )));
    };
    if fsizes[..m].iter().any(|&s| s != h) {
        return Err(Error::Precondition(format!(
            "filler must have type {h}^{m} a^1"
        )));
    }

    // relabel: old (group i, hole j, cell rank l) -> j*(h*u) + i*h + l
    let relabel = |p: usize| -> usize {
        let (i, r) = (p / (h * m), p % (h * m));
        let (j, l) = (r / h, r % h);
        j * (h * u) + i * h + l
    };
    let mut blocks: Vec<Vec<usize>> = hgdd
        .blocks
        .iter()
        .map(|b| b.iter().map(|&p| relabel(p)).collect())
        .collect();
    let new_base = u * h * m;
    for i in 0..u {
        let map = |q: usize| -> usize {
            if q < m * h {
                let (j, l) = (q / h, q % h);
                j * (h * u) + i * h + l
            } else {
                new_base + (q - m * h)
            }
        };
        for b in &filler.blocks {
            blocks.push(b.iter().map(|&q| map(q)).collect());
        }
    }
    let mut group_sizes = vec![h * u; m];
    if a > 0 {
        group_sizes.push(a);
    }
    let sizes = union_sizes(&hgdd.block_sizes, &filler.block_sizes)?;
    let d = Design::new(
        DesignKind::gdd_of_sizes(&group_sizes),
        1,
        sizes,
        blocks,
        None,
    )?;
    certify(d, "fill_hgdd")
}

/// Replace each block of an index-1 IPBD((v;w), L) template by a
/// PBD_lambda(|B|, K) on its points, producing an IPBD_lambda((v;w), K).
pub fn expand_index(
    template: &Design,
    lambda: u32,
    sizes: &BlockSizeSet,
    resolver: &Resolver,
) -> Result<Design> {
    if template.lambda != 1 {
        return Err(Error::Precondition(
            "index expansion starts from a lambda = 1 template".into(),
        ));
    }
    let mut blocks = Vec::new();
    for block in &template.blocks {
        let req = IngredientRequest::new(
            RequestShape::PbdLambda {
                v: block.len(),
                lambda,
            },
            sizes,
        )
        .noting("index expansion ingredient");
        let ing = resolver
            .resolve(&req)
            .map_err(|e| Error::Resolution(format!("missing {}: {e}", req.describe())))?;
        for b in &ing.blocks {
            blocks.push(b.iter().map(|&q| block[q]).collect());
        }
    }
    let d = Design::new(template.kind.clone(), lambda, sizes.clone(), blocks, None)?;
    certify(d, "expand_index")
}

/// A construction attempt log: which strategies ran and how each ended.
#[derive(Debug, Default)]
pub struct ConstructReport {
    pub design: Option<Design>,
    pub trace: Vec<String>,
}

impl ConstructReport {
    fn attempt(&mut self, line: String) {
        self.trace.push(line);
    }
}

/// Best-effort construction of an IPBD((v;w), K) at desk scale: direct
/// resolution (catalog / generators / search / projective extension), then
/// group filling over a truncated-TD product, then IGDD filling. Returns
/// the first verified design, or a report tracing every failed attempt.
pub fn construct_ipbd(
    v: usize,
    w: usize,
    sizes: &BlockSizeSet,
    resolver: &Resolver,
) -> Result<ConstructReport> {
    let adm = crate::arith::admissible_ipbd(v as u64, w as u64, sizes);
    if !adm.ok {
        return Err(Error::Inadmissible(format!(
            "IPBD(({v};{w}),{sizes}): {}",
            adm.reason()
        )));
    }
    let mut report = ConstructReport::default();

    // direct: catalog, generators, search, resolver recipes
    let req = IngredientRequest::new(RequestShape::Ipbd { v, w }, sizes).noting("direct");
    match resolver.resolve(&req) {
        Ok(d) => {
            report.attempt(format!("direct resolution of {}: ok", req.describe()));
            report.design = Some((*d).clone());
            return Ok(report);
        }
        Err(e) => report.attempt(format!("direct resolution of {}: {e}", req.describe())),
    }

    // group filling over a truncated-TD product
    if let Some(d) = truncated_td_route(v, w, sizes, resolver, &mut report) {
        report.design = Some(d);
        return Ok(report);
    }

    // IGDD filling
    if let Some(d) = igdd_fill_route(v, w, sizes, resolver, &mut report) {
        report.design = Some(d);
        return Ok(report);
    }

    Ok(report)
}

/// v - w = alpha(tA + B), w = alpha(C + z) + 1: build the
/// (alpha*A)^t (alpha*B)^1 (alpha*C)^1 GDD by truncation and weighting,
/// then fill groups with IPBDs over alpha*z + 1 common points.
fn truncated_td_route(
    v: usize,
    w: usize,
    sizes: &BlockSizeSet,
    resolver: &Resolver,
    report: &mut ConstructReport,
) -> Option<Design> {
    let alpha = sizes.alpha() as usize;
    let gamma = sizes.gamma() as usize;
    if !(v - w).is_multiple_of(alpha) || !(w - 1).is_multiple_of(alpha) {
        report.attempt("truncated-TD route: divisibility precheck failed".into());
        return None;
    }
    let z = ((w - 1) / alpha) % gamma;
    let s = alpha * z + 1;
    if w < s {
        report.attempt("truncated-TD route: hole too small for any z".into());
        return None;
    }
    let c = (w - 1) / alpha - z;
    debug_assert_eq!(c % gamma, 0);
    if c == 0 {
        report.attempt("truncated-TD route: C = 0 leaves no trailing group".into());
        return None;
    }
    let m = (v - w) / alpha;
    for t in 2..=5usize {
        // tA + B = m with 1 <= B <= A, gamma | A
        let mut a_val = m / (t + 1);
        while a_val * t < m {
            a_val += 1;
        }
        for a in [a_val, a_val + 1, a_val + 2] {
            if a == 0 || a % gamma != 0 || t * a >= m {
                continue;
            }
            let b = m - t * a;
            if b > a {
                continue;
            }
            // C must be a sum of A terms from {1, 1+gamma, x*}
            for x_star in 2..=((c / a).max(2) + gamma) as u64 {
                if !realizable_hole_sums(a as u64, gamma as u64, x_star).contains(&(c as u64)) {
                    continue;
                }
                match try_truncated_td(v, w, t, a, b, c, x_star, z, sizes, resolver) {
                    Ok(d) => {
                        report.attempt(format!(
                            "truncated-TD route (t={t}, A={a}, B={b}, C={c}, x*={x_star}, z={z}): ok"
                        ));
                        return Some(d);
                    }
                    Err(e) => {
                        report.attempt(format!(
                            "truncated-TD route (t={t}, A={a}, B={b}, C={c}, x*={x_star}, z={z}): {e}"
                        ));
                    }
                }
            }
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn try_truncated_td(
    v: usize,
    w: usize,
    t: usize,
    a: usize,
    b: usize,
    c: usize,
    x_star: u64,
    z: usize,
    sizes: &BlockSizeSet,
    resolver: &Resolver,
) -> Result<Design> {
    let alpha = sizes.alpha() as usize;
    let gamma = sizes.gamma() as usize;
    let td = gen::transversal_design(t + 2, a)?;
    // choose last-group weights: c1 ones, c2 of 1+gamma, c3 of x*
    let (mut c1, mut c2, mut c3) = (0usize, 0usize, 0usize);
    'outer: for k3 in 0..=a {
        for k2 in 0..=(a - k3) {
            let k1 = a - k3 - k2;
            if k1 + k2 * (1 + gamma) + k3 * x_star as usize == c {
                (c1, c2, c3) = (k1, k2, k3);
                break 'outer;
            }
        }
    }
    if c1 + c2 + c3 != a {
        return Err(Error::Precondition("no weight split realizes C".into()));
    }
    let mut last_weights = vec![alpha; c1];
    last_weights.extend(std::iter::repeat_n(alpha * (1 + gamma), c2));
    last_weights.extend(std::iter::repeat_n(alpha * x_star as usize, c3));
    let gdd = truncate_weight_td(&td, b, &last_weights, x_star, sizes, resolver)?;
    let filled = fill_groups_with_ipbds(&gdd, z, resolver)?;
    if filled.n_points != v || filled.hole_size() != w {
        return Err(Error::Certification(format!(
            "route produced IPBD(({};{})), wanted (({v};{w}))",
            filled.n_points,
            filled.hole_size()
        )));
    }
    Ok(filled)
}

fn igdd_fill_route(
    v: usize,
    w: usize,
    sizes: &BlockSizeSet,
    resolver: &Resolver,
    report: &mut ConstructReport,
) -> Option<Design> {
    for u in 2..=6usize {
        if !(v - w).is_multiple_of(u) {
            continue;
        }
        let side = (v - w) / u;
        for h in 0..=3usize {
            if w < (u - 1) * h {
                continue;
            }
            let y = w - (u - 1) * h;
            if y < h {
                continue;
            }
            let (g, x) = (side + h, side + y);
            if g * u > resolver.point_cap {
                continue;
            }
            let igdd_req =
                IngredientRequest::new(RequestShape::Igdd { g, h, u }, sizes).noting("igdd route");
            let filler_req = IngredientRequest::new(RequestShape::Ipbd { v: x, w: y }, sizes)
                .noting("igdd route filler");
            let igdd = match resolver.resolve(&igdd_req) {
                Ok(d) => d,
                Err(e) => {
                    report.attempt(format!("igdd route (u={u}, g={g}, h={h}): {e}"));
                    continue;
                }
            };
            let filler = match resolver.resolve(&filler_req) {
                Ok(d) => d,
                Err(e) => {
                    report.attempt(format!("igdd route filler {}: {e}", filler_req.describe()));
                    continue;
                }
            };
            match igdd_fill(&igdd, &filler) {
                Ok(d) => {
                    report.attempt(format!(
                        "igdd route (u={u}, g={g}, h={h}, x={x}, y={y}): ok"
                    ));
                    return Some(d);
                }
                Err(e) => report.attempt(format!("igdd route (u={u}, g={g}, h={h}): {e}")),
            }
        }
    }
    None
}

/// Best-effort construction of a GDD(g^n h^1, K): direct resolution, then
/// point inflation of an IPBD template when g divides h.
pub fn construct_gdd_gnh1(
    g: usize,
    n: usize,
    h: usize,
    sizes: &BlockSizeSet,
    resolver: &Resolver,
) -> Result<ConstructReport> {
    let adm = crate::arith::admissible_gdd_gnh1(g as u64, n as u64, h as u64, sizes);
    if !adm.ok {
        return Err(Error::Inadmissible(format!(
            "GDD({g}^{n} {h}^1,{sizes}): {}",
            adm.reason()
        )));
    }
    let mut report = ConstructReport::default();
    let mut group_sizes = vec![g; n];
    group_sizes.push(h);
    let req = IngredientRequest::new(RequestShape::Gdd { group_sizes }, sizes).noting("direct");
    match resolver.resolve(&req) {
        Ok(d) => {
            report.attempt(format!("direct resolution of {}: ok", req.describe()));
            report.design = Some((*d).clone());
            return Ok(report);
        }
        Err(e) => report.attempt(format!("direct resolution of {}: {e}", req.describe())),
    }

    if h.is_multiple_of(g) && h > 0 {
        let s = h / g;
        // template sizes: block sizes m with a usable GDD(g^m, K)
        let mut template_sizes = Vec::new();
        for m in 3..=9usize {
            if g * m > resolver.point_cap {
                continue;
            }
            let probe = IngredientRequest::new(
                RequestShape::Gdd {
                    group_sizes: vec![g; m],
                },
                sizes,
            );
            if resolver.resolve(&probe).is_ok() {
                template_sizes.push(m);
            }
        }
        if template_sizes.is_empty() {
            report.attempt("inflation route: no ingredient GDD(g^m, K) available".into());
        } else {
            match BlockSizeSet::new(template_sizes.iter().copied()) {
                Ok(m_sizes) => match construct_ipbd(n + s, s, &m_sizes, resolver) {
                    Ok(inner) => {
                        report
                            .trace
                            .extend(inner.trace.into_iter().map(|l| format!("template: {l}")));
                        if let Some(template) = inner.design {
                            match inflate(&template, g, sizes, resolver) {
                                Ok(d) => {
                                    report.attempt(format!(
                                        "inflation of IPBD(({};{s}),{m_sizes}) by g={g}: ok",
                                        n + s
                                    ));
                                    report.design = Some(d);
                                    return Ok(report);
                                }
                                Err(e) => report.attempt(format!("inflation route: {e}")),
                            }
                        } else {
                            report.attempt("inflation route: no template IPBD found".into());
                        }
                    }
                    Err(e) => report.attempt(format!("inflation route template: {e}")),
                },
                Err(e) => report.attempt(format!("inflation route sizes: {e}")),
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::verify::{extremal_hole_property, CoverageMatrix};

    fn k(sizes: &[usize]) -> BlockSizeSet {
        BlockSizeSet::new(sizes.iter().copied()).unwrap()
    }

    #[test]
    fn wfc_unit_weights_reproduce_the_master() {
        let resolver = Resolver::new();
        let fano = gen::projective_plane(2).unwrap();
        let master = normalize(&fano).unwrap();
        let out = wfc(&master, &[1; 7], &k(&[3]), &resolver).unwrap();
        assert_eq!(out.n_points, 7);
        // same pair coverage as the master under the identity relabeling
        let a = CoverageMatrix::of(&master);
        let b = CoverageMatrix::of(&out);
        for y in 1..7 {
            for x in 0..y {
                assert_eq!(a.get(x, y), b.get(x, y));
            }
        }
    }

    #[test]
    fn wfc_doubles_the_fano_plane() {
        let resolver = Resolver::new();
        let fano = gen::projective_plane(2).unwrap();
        let out = wfc(&fano, &[2; 7], &k(&[3]), &resolver).unwrap();
        assert_eq!(out.n_points, 14);
        match &out.kind {
            DesignKind::Gdd { groups } => {
                assert_eq!(groups.len(), 7);
                assert!(groups.iter().all(|g| g.len() == 2));
            }
            _ => panic!("expected a GDD"),
        }
    }

    #[test]
    fn wfc_zero_weight_drops_a_point() {
        let resolver = Resolver::new();
        let td = gen::transversal_design(3, 3).unwrap();
        let mut weights = vec![1; 9];
        weights[8] = 0;
        let out = wfc(&td, &weights, &k(&[2, 3]), &resolver).unwrap();
        match &out.kind {
            DesignKind::Gdd { groups } => {
                let mut sizes: Vec<usize> = groups.iter().map(|g| g.len()).collect();
                sizes.sort_unstable();
                assert_eq!(sizes, vec![2, 3, 3]);
            }
            _ => panic!("expected a GDD"),
        }
    }

    #[test]
    fn break_one_block_into_a_fano() {
        let resolver = Resolver::new();
        let single = Design::new(
            DesignKind::Pbd { v: 7 },
            1,
            k(&[7]),
            vec![(0..7).collect()],
            None,
        )
        .unwrap();
        let out = break_blocks(&single, &k(&[3]), &resolver).unwrap();
        assert_eq!(out.blocks.len(), 7);
    }

    #[test]
    fn fill_hole_examples() {
        let resolver = Resolver::new();
        // IPBD((7;3),{3}) + the hole as a single block
        let outer =
            match gen::search(&gen::SearchProblem::new(DesignKind::ipbd(7, 3), k(&[3]))).unwrap() {
                gen::SearchOutcome::Found(d) => d,
                other => panic!("expected IPBD((7;3)), got {other:?}"),
            };
        let inner = resolver
            .resolve(&IngredientRequest::new(
                RequestShape::Pbd { v: 3 },
                &k(&[3]),
            ))
            .unwrap();
        let filled = fill_hole(&outer, &inner).unwrap();
        assert_eq!(filled.blocks.len(), 7);
        assert!(matches!(filled.kind, DesignKind::Pbd { v: 7 }));

        // w = 1 hole with the empty design on one point
        let ipbd71 = resolver
            .resolve(&IngredientRequest::new(
                RequestShape::Ipbd { v: 7, w: 1 },
                &k(&[3]),
            ))
            .unwrap();
        let trivial = Design::new(DesignKind::Pbd { v: 1 }, 1, k(&[3]), vec![], None).unwrap();
        let out = fill_hole(&ipbd71, &trivial).unwrap();
        assert!(matches!(out.kind, DesignKind::Pbd { v: 7 }));

        // size mismatch is a precondition error
        assert!(fill_hole(&outer, &trivial).is_err());
    }

    #[test]
    fn igdd_fill_small_instance() {
        let resolver = Resolver::new();
        let igdd = resolver
            .resolve(&IngredientRequest::new(
                RequestShape::Igdd { g: 3, h: 1, u: 3 },
                &k(&[3]),
            ))
            .unwrap();
        let filler = resolver
            .resolve(&IngredientRequest::new(
                RequestShape::Ipbd { v: 3, w: 1 },
                &k(&[3]),
            ))
            .unwrap();
        let out = igdd_fill(&igdd, &filler).unwrap();
        assert_eq!(out.n_points, 9);
        assert_eq!(out.hole_size(), 3);
        // v - w = u(x - y) and w = (u-1)h + y
        assert_eq!(out.n_points - out.hole_size(), 3 * 2);
        assert_eq!(out.hole_size(), 2 + 1);

        // g - h != x - y is rejected
        let bad = resolver
            .resolve(&IngredientRequest::new(
                RequestShape::Ipbd { v: 7, w: 3 },
                &k(&[3]),
            ))
            .unwrap();
        assert!(igdd_fill(&igdd, &bad).is_err());
    }

    #[test]
    fn igdd_fill_gdd_small_instance() {
        let resolver = Resolver::new();
        let sizes = k(&[3, 4, 5]);
        let igdd = resolver
            .resolve(&IngredientRequest::new(
                RequestShape::Igdd { g: 3, h: 1, u: 3 },
                &sizes,
            ))
            .unwrap();
        // alpha = 1: filler GDD(1^2 1^1) is a triangle
        let filler = resolver
            .resolve(&IngredientRequest::new(
                RequestShape::Gdd {
                    group_sizes: vec![1, 1, 1],
                },
                &sizes,
            ))
            .unwrap();
        let out = igdd_fill_gdd(&igdd, &filler).unwrap();
        // n = ux = 6, w = h(u-1) + alpha*y = 3
        match &out.kind {
            DesignKind::Gdd { groups } => {
                let sizes_out: Vec<usize> = groups.iter().map(|g| g.len()).collect();
                assert_eq!(sizes_out, vec![1, 1, 1, 1, 1, 1, 3]);
            }
            _ => panic!("expected a GDD"),
        }
    }

    #[test]
    fn projective_extension_of_affine_planes() {
        let ag3 = gen::affine_plane(3).unwrap();
        let out = projective_extend(&ag3).unwrap();
        assert_eq!(out.n_points, 13);
        assert_eq!(out.hole_size(), 4);
        assert!(out.blocks.iter().all(|b| b.len() == 4));
        assert!(extremal_hole_property(&out));

        let ag2 = gen::affine_plane(2).unwrap();
        let out = projective_extend(&ag2).unwrap();
        assert_eq!((out.n_points, out.hole_size()), (7, 3));

        // resolvable GDD input gains an extra group
        let td = gen::transversal_design(3, 3).unwrap();
        let out = projective_extend(&td).unwrap();
        match &out.kind {
            DesignKind::Gdd { groups } => assert_eq!(groups.len(), 4),
            _ => panic!("expected a GDD"),
        }
    }

    #[test]
    fn fill_groups_examples() {
        let resolver = Resolver::new();
        // GDD(2^3,{3}) with z = 0: fillers IPBD((3;1),{3})
        let gdd = resolver
            .resolve(&IngredientRequest::new(
                RequestShape::Gdd {
                    group_sizes: vec![2, 2, 2],
                },
                &k(&[3]),
            ))
            .unwrap();
        let out = fill_groups_with_ipbds(&gdd, 0, &resolver).unwrap();
        assert_eq!((out.n_points, out.hole_size()), (7, 3));

        // TD(4,3) filled with IPBD((4;1),{4}) fillers: the projective plane
        // parameters IPBD((13;4),{4})
        let td = gen::transversal_design(4, 3).unwrap();
        let out = fill_groups_with_ipbds(&td, 0, &resolver).unwrap();
        assert_eq!((out.n_points, out.hole_size()), (13, 4));
    }

    #[test]
    fn truncate_weight_td_type_arithmetic() {
        let resolver = Resolver::new();
        // K = {3}: alpha 2, gamma 3; TD(4,3), keep 2 points, uniform weights
        let td = gen::transversal_design(4, 3).unwrap();
        let out = truncate_weight_td(&td, 2, &[2, 2, 2], 1, &k(&[3]), &resolver).unwrap();
        match &out.kind {
            DesignKind::Gdd { groups } => {
                let sizes_out: Vec<usize> = groups.iter().map(|g| g.len()).collect();
                assert_eq!(sizes_out, vec![6, 6, 4, 6]);
            }
            _ => panic!("expected a GDD"),
        }

        // a weight outside {alpha, alpha+beta, alpha x*} is rejected
        assert!(truncate_weight_td(&td, 2, &[2, 2, 4], 1, &k(&[3]), &resolver).is_err());
    }

    #[test]
    fn inflating_a_small_template() {
        let resolver = Resolver::new();
        let template =
            match gen::search(&gen::SearchProblem::new(DesignKind::ipbd(7, 3), k(&[3]))).unwrap() {
                gen::SearchOutcome::Found(d) => d,
                other => panic!("expected IPBD((7;3)), got {other:?}"),
            };
        let out = inflate(&template, 2, &k(&[3]), &resolver).unwrap();
        match &out.kind {
            DesignKind::Gdd { groups } => {
                let sizes_out: Vec<usize> = groups.iter().map(|g| g.len()).collect();
                assert_eq!(sizes_out, vec![2, 2, 2, 2, 6]);
            }
            _ => panic!("expected a GDD"),
        }
        // g = 1 keeps the block structure
        let same = inflate(&template, 1, &k(&[3]), &resolver).unwrap();
        assert_eq!(same.blocks, normalize(&template).unwrap().blocks);
    }

    #[test]
    fn fill_hgdd_grid_design() {
        let resolver = Resolver::new();
        let sizes = k(&[3]);
        let hgdd = match gen::search(&gen::SearchProblem::new(
            DesignKind::Hgdd { u: 3, h: 1, m: 3 },
            sizes.clone(),
        ))
        .unwrap()
        {
            gen::SearchOutcome::Found(d) => d,
            other => panic!("expected a grid design, got {other:?}"),
        };
        let filler = resolver
            .resolve(&IngredientRequest::new(
                RequestShape::Gdd {
                    group_sizes: vec![1, 1, 1],
                },
                &sizes,
            ))
            .unwrap();
        let out = fill_hgdd(&hgdd, &filler).unwrap();
        match &out.kind {
            DesignKind::Gdd { groups } => {
                let sizes_out: Vec<usize> = groups.iter().map(|g| g.len()).collect();
                assert_eq!(sizes_out, vec![3, 3, 3]);
            }
            _ => panic!("expected a GDD"),
        }
    }

    #[test]
    fn index_expansion_doubles_an_ipbd() {
        let resolver = Resolver::new();
        let template =
            match gen::search(&gen::SearchProblem::new(DesignKind::ipbd(7, 3), k(&[3]))).unwrap() {
                gen::SearchOutcome::Found(d) => d,
                other => panic!("expected IPBD((7;3)), got {other:?}"),
            };
        let out = expand_index(&template, 2, &k(&[3]), &resolver).unwrap();
        assert_eq!(out.lambda, 2);
        assert_eq!(out.blocks.len(), 12);
        let cov = CoverageMatrix::of(&out);
        assert_eq!(cov.get(0, 1), 2);
        assert_eq!(cov.get(4, 5), 0, "hole pairs stay uncovered");
    }

    #[test]
    fn construct_ipbd_pipeline() {
        let resolver = Resolver::new();
        let r = construct_ipbd(13, 4, &k(&[4]), &resolver).unwrap();
        let d = r.design.expect("IPBD((13;4),{4}) constructible");
        assert!(extremal_hole_property(&d));

        let r = construct_ipbd(7, 3, &k(&[3]), &resolver).unwrap();
        assert!(r.design.is_some());

        assert!(construct_ipbd(6, 3, &k(&[3]), &resolver).is_err());
    }

    #[test]
    fn resolver_examples() {
        let resolver = Resolver::new();
        // generator hit
        assert!(resolver
            .resolve(&IngredientRequest::new(
                RequestShape::Td { k: 3, n: 3 },
                &k(&[3])
            ))
            .is_ok());
        // catalog hit
        assert!(resolver
            .resolve(&IngredientRequest::new(
                RequestShape::Gdd {
                    group_sizes: vec![2, 2, 2]
                },
                &k(&[3])
            ))
            .is_ok());
        // proven nonexistent
        let missing =
            IngredientRequest::new(RequestShape::Ipbd { v: 7, w: 2 }, &k(&[3, 4, 5, 6, 7]));
        let err = resolver.resolve(&missing).unwrap_err();
        assert!(err.to_string().contains("nonexistent"), "{err}");
    }

    #[test]
    fn fill_hole_with_a_single_block_gives_pg23_parameters() {
        let resolver = Resolver::new();
        let r = construct_ipbd(13, 4, &k(&[4]), &resolver).unwrap();
        let outer = r.design.unwrap();
        let inner = resolver
            .resolve(&IngredientRequest::new(
                RequestShape::Pbd { v: 4 },
                &k(&[4]),
            ))
            .unwrap();
        let filled = fill_hole(&outer, &inner).unwrap();
        assert!(matches!(filled.kind, DesignKind::Pbd { v: 13 }));
        assert_eq!(filled.blocks.len(), 13);
    }

    #[test]
    fn break_blocks_into_the_small_size_set() {
        let resolver = Resolver::new();
        let found = gen::search(&gen::SearchProblem::new(
            DesignKind::ipbd(11, 2),
            k(&[3, 4, 5, 6, 7, 8, 9, 10, 11]),
        ))
        .unwrap();
        let d = match found {
            gen::SearchOutcome::Found(d) => d,
            other => panic!("IPBD((11;2)) should exist, got {other:?}"),
        };
        let broken = break_blocks(&d, &k(&[3, 4, 5, 6, 8]), &resolver).unwrap();
        assert!(broken
            .blocks
            .iter()
            .all(|b| [3, 4, 5, 6, 8].contains(&b.len())));
        assert_eq!(broken.hole_size(), 2);
    }

    #[test]
    fn expand_index_identity_when_lambda_one() {
        let resolver = Resolver::new();
        let template =
            match gen::search(&gen::SearchProblem::new(DesignKind::ipbd(7, 3), k(&[3]))).unwrap() {
                gen::SearchOutcome::Found(d) => d,
                other => panic!("expected IPBD((7;3)), got {other:?}"),
            };
        let out = expand_index(&template, 1, &k(&[3]), &resolver).unwrap();
        assert_eq!(
            normalize(&out).unwrap().blocks,
            normalize(&template).unwrap().blocks
        );
    }

    #[test]
    fn construct_gdd_gnh1_routes() {
        let resolver = Resolver::new();
        // direct: 2^3 2^1 is the uniform 2^4
        let r = construct_gdd_gnh1(2, 3, 2, &k(&[3]), &resolver).unwrap();
        assert!(r.design.is_some());
        // inflation: 2^4 6^1 from an IPBD((7;3)) template blown up by 2
        let r = construct_gdd_gnh1(2, 4, 6, &k(&[3]), &resolver).unwrap();
        let d = r.design.expect("GDD(2^4 6^1,{3}) constructible");
        match &d.kind {
            DesignKind::Gdd { groups } => {
                let sizes_out: Vec<usize> = groups.iter().map(|g| g.len()).collect();
                assert_eq!(sizes_out, vec![2, 2, 2, 2, 6]);
            }
            _ => panic!("expected a GDD"),
        }
        // inadmissible parameters are rejected up front
        assert!(construct_gdd_gnh1(2, 5, 4, &k(&[3]), &resolver).is_err());
    }
}
