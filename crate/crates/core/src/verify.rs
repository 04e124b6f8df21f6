//! Independent certification of design objects against their definitions:
//! lambda-fold pair coverage with holes and groups, resolvability, class
//! uniformity, latin conditions, orthogonality, and packing/covering stats.
//!
//! Pair counts live in a triangular byte array indexed by pair rank, so the
//! verifier assumes lambda <= 255 (documented limit; lambda is tiny in
//! practice).

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::johnson_bound;
use crate::error::{Error, Result};
use crate::model::{ClassKind, CoverageMode, Design, DesignKind, LatinSquareSet};

/// Symmetric pair-count matrix stored as a triangular byte array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageMatrix {
    v: usize,
    counts: Vec<u8>,
}

#[inline]
fn pair_rank(x: usize, y: usize) -> usize {
    debug_assert!(x < y);
    y * (y - 1) / 2 + x
}

impl CoverageMatrix {
    pub fn zero(v: usize) -> Self {
        CoverageMatrix {
            v,
            counts: vec![0; v * v.saturating_sub(1) / 2],
        }
    }

    pub fn of(design: &Design) -> Self {
        let mut m = CoverageMatrix::zero(design.n_points);
        for b in &design.blocks {
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    m.bump(b[i], b[j]);
                }
            }
        }
        m
    }

    pub fn v(&self) -> usize {
        self.v
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        if x == y {
            return 0;
        }
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        self.counts[pair_rank(x, y)]
    }

    #[inline]
    fn bump(&mut self, x: usize, y: usize) {
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        let c = &mut self.counts[pair_rank(x, y)];
        *c = c.saturating_add(1);
    }

    /// Pairs with count zero (the leave of a packing).
    pub fn uncovered_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for y in 1..self.v {
            for x in 0..y {
                if self.counts[pair_rank(x, y)] == 0 {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone)]
pub enum Violation {
    Structure {
        detail: String,
    },
    BlockSize {
        index: usize,
        size: usize,
    },
    PairCoverage {
        x: usize,
        y: usize,
        expected: String,
        actual: u8,
    },
    Resolution {
        class: usize,
        detail: String,
    },
    ClassMultiset {
        class: usize,
        detail: String,
    },
    Latin {
        square: usize,
        detail: String,
    },
    Orthogonality {
        first: usize,
        second: usize,
        detail: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Structure { detail } => write!(f, "structure: {detail}"),
            Violation::BlockSize { index, size } => {
                write!(f, "block {index} has size {size} outside K")
            }
            Violation::PairCoverage {
                x,
                y,
                expected,
                actual,
            } => {
                write!(
                    f,
                    "pair ({x},{y}) covered {actual} times, expected {expected}"
                )
            }
            Violation::Resolution { class, detail } => write!(f, "class {class}: {detail}"),
            Violation::ClassMultiset { class, detail } => write!(f, "class {class}: {detail}"),
            Violation::Latin { square, detail } => write!(f, "square {square}: {detail}"),
            Violation::Orthogonality {
                first,
                second,
                detail,
            } => {
                write!(f, "squares ({first},{second}): {detail}")
            }
        }
    }
}

/// Verification outcome. Violations are data, not errors; the report keeps
/// the first `MAX_REPORTED` while `total` counts them all.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub total: usize,
}

pub const MAX_REPORTED: usize = 10;

impl Certificate {
    fn new() -> Self {
        Certificate {
            valid: true,
            violations: Vec::new(),
            total: 0,
        }
    }

    fn push(&mut self, v: Violation) {
        self.valid = false;
        self.total += 1;
        if self.violations.len() < MAX_REPORTED {
            self.violations.push(v);
        }
    }

    pub fn summary(&self) -> String {
        if self.valid {
            "valid".to_string()
        } else {
            let lines: Vec<String> = self.violations.iter().map(|v| format!("  {v}")).collect();
            format!("INVALID ({} violations)\n{}", self.total, lines.join("\n"))
        }
    }
}

/// Check a design against the pairwise specification of its kind: block
/// sizes belong to K; required pairs are covered exactly lambda times and
/// forbidden pairs (hole-by-hole, intra-group, corresponding-hole,
/// intra-hole) zero times; packings stay at most lambda and coverings at
/// least lambda everywhere.
pub fn verify_design(design: &Design) -> Certificate {
    let mut cert = Certificate::new();
    let v = design.n_points;

    for (i, b) in design.blocks.iter().enumerate() {
        if b.len() < 2 || !design.block_sizes.contains(b.len()) {
            cert.push(Violation::BlockSize {
                index: i,
                size: b.len(),
            });
        }
        if b.windows(2).any(|w| w[0] >= w[1]) || b.iter().any(|&p| p >= v) {
            cert.push(Violation::Structure {
                detail: format!("block {i} malformed: {b:?}"),
            });
        }
    }

    let st = design.kind.point_structure();
    let cov = CoverageMatrix::of(design);
    let lambda = design.lambda.min(255) as u8;
    let mode = design.kind.coverage_mode();
    for y in 1..v {
        for x in 0..y {
            let c = cov.get(x, y);
            let bad = match mode {
                CoverageMode::Exact => {
                    if design.kind.pair_forbidden(&st, x, y) {
                        (c != 0).then(|| "0 (forbidden)".to_string())
                    } else {
                        (c != lambda).then(|| format!("{lambda}"))
                    }
                }
                CoverageMode::AtMost => (c > lambda).then(|| format!("<= {lambda}")),
                CoverageMode::AtLeast => (c < lambda).then(|| format!(">= {lambda}")),
            };
            if let Some(expected) = bad {
                cert.push(Violation::PairCoverage {
                    x,
                    y,
                    expected,
                    actual: c,
                });
            }
        }
    }
    cert
}

/// Check a declared resolution: every class is a partition of the declared
/// point set (full classes cover all points, partial classes the points
/// outside the hole) and every block lies in exactly one class.
pub fn verify_resolution(design: &Design) -> Certificate {
    let mut cert = Certificate::new();
    let res = match &design.resolution {
        Some(r) => r,
        None => {
            cert.push(Violation::Structure {
                detail: "no resolution declared".into(),
            });
            return cert;
        }
    };
    let v = design.n_points;
    let hole = design.kind.hole();
    let mut in_hole = vec![false; v];
    for &p in hole {
        in_hole[p] = true;
    }

    let mut placed = vec![0usize; design.blocks.len()];
    for (ci, class) in res.classes.iter().enumerate() {
        let mut seen = vec![false; v];
        let mut ok = true;
        for &bi in &class.blocks {
            if bi >= design.blocks.len() {
                cert.push(Violation::Resolution {
                    class: ci,
                    detail: format!("block index {bi} out of range"),
                });
                ok = false;
                continue;
            }
            placed[bi] += 1;
            for &p in &design.blocks[bi] {
                if seen[p] {
                    cert.push(Violation::Resolution {
                        class: ci,
                        detail: format!("point {p} covered twice within the class"),
                    });
                    ok = false;
                }
                seen[p] = true;
            }
        }
        if !ok {
            continue;
        }
        for p in 0..v {
            let expected = match class.kind {
                ClassKind::Full => true,
                ClassKind::Partial => !in_hole[p],
            };
            if seen[p] != expected {
                cert.push(Violation::Resolution {
                    class: ci,
                    detail: format!(
                        "point {p} {} the class but the class is {:?}",
                        if seen[p] { "inside" } else { "missing from" },
                        class.kind
                    ),
                });
                break;
            }
        }
    }
    for (bi, &count) in placed.iter().enumerate() {
        if count != 1 {
            cert.push(Violation::Resolution {
                class: usize::MAX,
                detail: format!("block {bi} appears in {count} classes"),
            });
        }
    }
    cert
}

/// Check class uniformity: all parallel classes share one block-size
/// multiset. Returns the common multiset when uniform.
pub fn verify_class_uniform(design: &Design) -> (Certificate, Option<BTreeMap<usize, usize>>) {
    let mut cert = Certificate::new();
    let res = match &design.resolution {
        Some(r) => r,
        None => {
            cert.push(Violation::Structure {
                detail: "no resolution declared".into(),
            });
            return (cert, None);
        }
    };
    let mut common: Option<BTreeMap<usize, usize>> = None;
    for (ci, class) in res.classes.iter().enumerate() {
        let mut ms = BTreeMap::new();
        for &bi in &class.blocks {
            if let Some(b) = design.blocks.get(bi) {
                *ms.entry(b.len()).or_insert(0usize) += 1;
            }
        }
        match &common {
            None => common = Some(ms),
            Some(c) if *c == ms => {}
            Some(c) => {
                cert.push(Violation::ClassMultiset {
                    class: ci,
                    detail: format!("block sizes {ms:?} differ from {c:?}"),
                });
            }
        }
    }
    let ms = if cert.valid { common } else { None };
    (cert, ms)
}

/// Check the incomplete-latin-square axioms for every square in the set:
/// cells are empty exactly on hole-by-hole positions, every row and column
/// holds each symbol at most once, and hole symbols stay out of hole rows
/// and columns. A hole of size 0 or 1 reduces to an ordinary latin square.
pub fn verify_latin(set: &LatinSquareSet) -> Certificate {
    let mut cert = Certificate::new();
    let n = set.n;
    let mut in_hole = vec![false; n];
    if set.m() >= 2 {
        for &p in &set.hole {
            in_hole[p] = true;
        }
    }
    for (si, sq) in set.squares.iter().enumerate() {
        if sq.len() != n * n {
            cert.push(Violation::Latin {
                square: si,
                detail: "wrong cell count".into(),
            });
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                match sq[i * n + j] {
                    None => {
                        if !(in_hole[i] && in_hole[j]) {
                            cert.push(Violation::Latin {
                                square: si,
                                detail: format!("cell ({i},{j}) empty outside the hole"),
                            });
                        }
                    }
                    Some(s) => {
                        if s >= n {
                            cert.push(Violation::Latin {
                                square: si,
                                detail: format!("cell ({i},{j}) symbol {s} out of range"),
                            });
                        } else if in_hole[i] && in_hole[j] {
                            cert.push(Violation::Latin {
                                square: si,
                                detail: format!("cell ({i},{j}) inside the hole is filled"),
                            });
                        } else if in_hole[s] && (in_hole[i] || in_hole[j]) {
                            cert.push(Violation::Latin {
                                square: si,
                                detail: format!(
                                    "hole symbol {s} appears in hole-indexed row/column at ({i},{j})"
                                ),
                            });
                        }
                    }
                }
            }
        }
        // row and column multiplicity
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                if let Some(s) = sq[i * n + j] {
                    if s < n {
                        if row_seen[s] {
                            cert.push(Violation::Latin {
                                square: si,
                                detail: format!("row {i} repeats symbol {s}"),
                            });
                        }
                        row_seen[s] = true;
                    }
                }
                if let Some(s) = sq[j * n + i] {
                    if s < n {
                        if col_seen[s] {
                            cert.push(Violation::Latin {
                                square: si,
                                detail: format!("column {i} repeats symbol {s}"),
                            });
                        }
                        col_seen[s] = true;
                    }
                }
            }
        }
    }
    cert
}

/// Check pairwise orthogonality: for every pair of squares, the ordered
/// symbol pairs outside hole x hole occur exactly once over the common
/// nonblank cells (which forces hole-by-hole symbol pairs to occur never).
pub fn verify_orthogonal(set: &LatinSquareSet) -> Certificate {
    let mut cert = Certificate::new();
    let n = set.n;
    let mut in_hole = vec![false; n];
    if set.m() >= 2 {
        for &p in &set.hole {
            in_hole[p] = true;
        }
    }
    for a in 0..set.t() {
        for b in a + 1..set.t() {
            let mut counts = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    if let (Some(s), Some(t)) = (set.cell(a, i, j), set.cell(b, i, j)) {
                        counts[s * n + t] += 1;
                    }
                }
            }
            for s in 0..n {
                for t in 0..n {
                    let c = counts[s * n + t];
                    let expected = if in_hole[s] && in_hole[t] { 0 } else { 1 };
                    if c != expected {
                        cert.push(Violation::Orthogonality {
                            first: a,
                            second: b,
                            detail: format!(
                                "ordered pair ({s},{t}) occurs {c} times, expected {expected}"
                            ),
                        });
                    }
                }
            }
        }
    }
    cert
}

/// Block count, Johnson bound, deficiency and leave of a (v,k,1)-packing.
/// The leave is reported as an edge list; isolated vertices are discarded
/// by construction of that representation.
#[derive(Debug, Clone)]
pub struct PackingStats {
    pub b: u64,
    pub johnson: u64,
    pub deficiency: i64,
    pub leave: Vec<(usize, usize)>,
}

impl PackingStats {
    /// Degree sequence of the leave graph (isolated vertices omitted).
    pub fn leave_degrees(&self) -> Vec<usize> {
        let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
        for &(x, y) in &self.leave {
            *deg.entry(x).or_insert(0) += 1;
            *deg.entry(y).or_insert(0) += 1;
        }
        let mut out: Vec<usize> = deg.values().copied().collect();
        out.sort_unstable();
        out
    }
}

pub fn packing_stats(design: &Design) -> Result<PackingStats> {
    let k = match design.kind {
        DesignKind::Packing { k, .. } => k,
        _ => {
            return Err(Error::Precondition(
                "packing_stats requires a design of packing kind".into(),
            ))
        }
    };
    let cov = CoverageMatrix::of(design);
    let johnson = johnson_bound(design.n_points as u64, k as u64);
    let b = design.blocks.len() as u64;
    Ok(PackingStats {
        b,
        johnson,
        deficiency: johnson as i64 - b as i64,
        leave: cov.uncovered_pairs(),
    })
}

/// The extremal-hole property: every block has size min K and meets the
/// hole. Holds exactly for IPBDs attaining v = (k-1)w + 1.
pub fn extremal_hole_property(design: &Design) -> bool {
    let hole = design.kind.hole();
    if hole.is_empty() {
        return false;
    }
    let k = design.block_sizes.k_min();
    design
        .blocks
        .iter()
        .all(|b| b.len() == k && b.iter().any(|p| hole.contains(p)))
}
