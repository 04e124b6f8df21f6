//! Design interchange files (JSON).
//!
//! Designs are serialized in the normalized layout: groups are contiguous
//! index ranges in listed order, the IPBD hole / distinguished group is the
//! trailing range, and `groups`/`holes` carry sizes only. Latin square files
//! store row-major cell lists with `null` for empty cells.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    normalize, BlockSizeSet, ClassKind, Design, DesignKind, LatinSquareSet, Resolution,
    ResolutionClass,
};

#[derive(Debug, Serialize, Deserialize)]
struct ResolutionClassFile {
    blocks: Vec<usize>,
    class: ClassKind,
}

#[derive(Debug, Serialize, Deserialize)]
struct DesignFile {
    kind: String,
    v: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    w: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    groups: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    holes: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    u: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    lambda: u32,
    #[serde(rename = "K")]
    sizes: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    resolution: Option<Vec<ResolutionClassFile>>,
}

pub fn design_to_json(design: &Design) -> Result<String> {
    let d = normalize(design)?;
    let (w, groups, holes, u, h, m, k, n) = match &d.kind {
        DesignKind::Pbd { .. } | DesignKind::Packing { .. } | DesignKind::Covering { .. } => {
            let k = match &d.kind {
                DesignKind::Packing { k, .. } | DesignKind::Covering { k, .. } => Some(*k),
                _ => None,
            };
            (None, None, None, None, None, None, k, None)
        }
        DesignKind::Ipbd { hole, .. } => {
            (Some(hole.len()), None, None, None, None, None, None, None)
        }
        DesignKind::Gdd { groups } => {
            let sizes: Vec<usize> = groups.iter().map(|g| g.len()).collect();
            (None, Some(sizes), None, None, None, None, None, None)
        }
        DesignKind::Igdd { groups, holes } => {
            let gs: Vec<usize> = groups.iter().map(|g| g.len()).collect();
            let hs: Vec<usize> = holes.iter().map(|h| h.len()).collect();
            (None, Some(gs), Some(hs), None, None, None, None, None)
        }
        DesignKind::Hgdd { u, h, m } => {
            (None, None, None, Some(*u), Some(*h), Some(*m), None, None)
        }
        DesignKind::Td { k, n } => (None, None, None, None, None, None, Some(*k), Some(*n)),
    };
    let file = DesignFile {
        kind: d.kind.tag().to_string(),
        v: d.n_points,
        w,
        groups,
        holes,
        u,
        h,
        m,
        k,
        n,
        lambda: d.lambda,
        sizes: d.block_sizes.to_vec(),
        blocks: d.blocks.clone(),
        resolution: d.resolution.as_ref().map(|r| {
            r.classes
                .iter()
                .map(|c| ResolutionClassFile {
                    blocks: c.blocks.clone(),
                    class: c.kind,
                })
                .collect()
        }),
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

pub fn design_from_json(text: &str) -> Result<Design> {
    let file: DesignFile = serde_json::from_str(text)?;
    let need = |opt: Option<usize>, name: &str| {
        opt.ok_or_else(|| {
            Error::Structure(format!("missing field `{name}` for kind {}", file.kind))
        })
    };
    let kind = match file.kind.as_str() {
        "pbd" => DesignKind::Pbd { v: file.v },
        "ipbd" => DesignKind::ipbd(file.v, need(file.w, "w")?),
        "gdd" => {
            let sizes = file
                .groups
                .clone()
                .ok_or_else(|| Error::Structure("missing field `groups` for gdd".into()))?;
            DesignKind::gdd_of_sizes(&sizes)
        }
        "igdd" => {
            let gs = file
                .groups
                .clone()
                .ok_or_else(|| Error::Structure("missing field `groups` for igdd".into()))?;
            let hs = file
                .holes
                .clone()
                .ok_or_else(|| Error::Structure("missing field `holes` for igdd".into()))?;
            if gs.len() != hs.len() {
                return Err(Error::Structure("groups/holes length mismatch".into()));
            }
            let mut groups = Vec::new();
            let mut holes = Vec::new();
            let mut at = 0;
            for (&g, &h) in gs.iter().zip(&hs) {
                if h > g {
                    return Err(Error::Structure("hole larger than its group".into()));
                }
                groups.push((at..at + g).collect::<Vec<_>>());
                holes.push((at + g - h..at + g).collect::<Vec<_>>());
                at += g;
            }
            DesignKind::Igdd { groups, holes }
        }
        "hgdd" => DesignKind::Hgdd {
            u: need(file.u, "u")?,
            h: need(file.h, "h")?,
            m: need(file.m, "m")?,
        },
        "td" => DesignKind::Td {
            k: need(file.k, "k")?,
            n: need(file.n, "n")?,
        },
        "packing" => DesignKind::Packing {
            v: file.v,
            k: need(file.k, "k")?,
        },
        "covering" => DesignKind::Covering {
            v: file.v,
            k: need(file.k, "k")?,
        },
        other => return Err(Error::Structure(format!("unknown kind tag `{other}`"))),
    };
    if kind.n_points() != file.v {
        return Err(Error::Structure(format!(
            "declared v = {} does not match kind point count {}",
            file.v,
            kind.n_points()
        )));
    }
    let resolution = file.resolution.map(|classes| Resolution {
        classes: classes
            .into_iter()
            .map(|c| ResolutionClass {
                blocks: c.blocks,
                kind: c.class,
            })
            .collect(),
    });
    Design::new(
        kind,
        file.lambda,
        BlockSizeSet::new(file.sizes)?,
        file.blocks,
        resolution,
    )
}

#[derive(Debug, Serialize, Deserialize)]
struct LatinFile {
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    hole: Option<Vec<usize>>,
    squares: Vec<Vec<Option<usize>>>,
}

pub fn latin_to_json(set: &LatinSquareSet) -> Result<String> {
    let file = LatinFile {
        n: set.n,
        m: set.m(),
        hole: if set.hole.is_empty() {
            None
        } else {
            Some(set.hole.clone())
        },
        squares: set.squares.clone(),
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

pub fn latin_from_json(text: &str) -> Result<LatinSquareSet> {
    let file: LatinFile = serde_json::from_str(text)?;
    let hole = match file.hole {
        Some(h) => h,
        None if file.m >= 2 => {
            // infer the hole from the empty diagonal cells of the first square
            let sq = file
                .squares
                .first()
                .ok_or_else(|| Error::Structure("no squares in file".into()))?;
            if sq.len() != file.n * file.n {
                return Err(Error::Structure("square size mismatch".into()));
            }
            (0..file.n)
                .filter(|&i| sq[i * file.n + i].is_none())
                .collect()
        }
        None => Vec::new(),
    };
    if hole.len() != file.m {
        return Err(Error::Structure(format!(
            "declared m = {} does not match hole of size {}",
            file.m,
            hole.len()
        )));
    }
    LatinSquareSet::new(file.n, hole, file.squares)
}

/// Decide whether a JSON text looks like a latin square file rather than a
/// design file (used by the CLI `verify` command).
pub fn looks_like_latin(text: &str) -> bool {
    serde_json::from_str::<serde_json::Value>(text)
        .map(|v| v.get("squares").is_some())
        .unwrap_or(false)
}
