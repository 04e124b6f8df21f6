//! Canonical data model for designs: block size sets, design kinds,
//! resolutions, latin square sets, and relabeling/normalization utilities.
//!
//! Points are 0-based contiguous integers. The hole of an IPBD and the
//! distinguished group of a GDD always occupy the trailing index range
//! after normalization, which turns the filling constructions into index
//! arithmetic instead of set arithmetic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// A finite set of admissible block sizes K together with its derived
/// divisibility invariants:
///
///   alpha = gcd { k - 1   : k in K }
///   beta  = gcd { k(k-1)  : k in K }
///   gamma = beta / alpha     (always an integer, coprime to alpha)
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSizeSet {
    sizes: BTreeSet<usize>,
    alpha: u64,
    beta: u64,
    gamma: u64,
    k_min: usize,
}

impl BlockSizeSet {
    pub fn new<I: IntoIterator<Item = usize>>(sizes: I) -> Result<Self> {
        let sizes: BTreeSet<usize> = sizes.into_iter().collect();
        if sizes.is_empty() {
            return Err(Error::Structure("block size set must be nonempty".into()));
        }
        if let Some(&s) = sizes.iter().find(|&&s| s < 2) {
            return Err(Error::Structure(format!("block size {s} < 2")));
        }
        let alpha = sizes.iter().fold(0u64, |g, &k| gcd(g, (k - 1) as u64));
        let beta = sizes
            .iter()
            .fold(0u64, |g, &k| gcd(g, (k * (k - 1)) as u64));
        debug_assert_eq!(beta % alpha, 0);
        let gamma = beta / alpha;
        debug_assert_eq!(gcd(alpha, gamma), 1);
        let k_min = *sizes.iter().next().unwrap();
        Ok(BlockSizeSet {
            sizes,
            alpha,
            beta,
            gamma,
            k_min,
        })
    }

    pub fn sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.sizes.iter().copied()
    }

    pub fn contains(&self, s: usize) -> bool {
        self.sizes.contains(&s)
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    pub fn gamma(&self) -> u64 {
        self.gamma
    }

    pub fn k_min(&self) -> usize {
        self.k_min
    }

    pub fn k_max(&self) -> usize {
        *self.sizes.iter().next_back().unwrap()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.sizes.iter().copied().collect()
    }

    /// The size set shifted by +1, as used when extending every block of a
    /// resolvable design by one point.
    pub fn shifted_up(&self) -> Result<Self> {
        BlockSizeSet::new(self.sizes.iter().map(|&k| k + 1))
    }
}

impl fmt::Display for BlockSizeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.sizes.iter().map(|k| k.to_string()).collect();
        write!(f, "{{{}}}", list.join(","))
    }
}

/// How pair coverage is interpreted for a design kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverageMode {
    /// Every required pair exactly lambda times; forbidden pairs zero times.
    Exact,
    /// Every pair at most lambda times.
    AtMost,
    /// Every pair at least lambda times.
    AtLeast,
}

/// Structural descriptor of a design. Groups and holes are stored as
/// explicit point sets; `normalize` relabels them into the canonical
/// trailing/contiguous layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DesignKind {
    Pbd {
        v: usize,
    },
    Ipbd {
        v: usize,
        hole: Vec<usize>,
    },
    Gdd {
        groups: Vec<Vec<usize>>,
    },
    /// Uniform IGDD: `holes[i]` is a subset of `groups[i]`.
    Igdd {
        groups: Vec<Vec<usize>>,
        holes: Vec<Vec<usize>>,
    },
    /// Holey GDD of type u x h^m on u*h*m points in the canonical grid
    /// layout: point p belongs to group p / (h*m) and hole (p % (h*m)) / h.
    Hgdd {
        u: usize,
        h: usize,
        m: usize,
    },
    Td {
        k: usize,
        n: usize,
    },
    Packing {
        v: usize,
        k: usize,
    },
    Covering {
        v: usize,
        k: usize,
    },
}

impl DesignKind {
    /// Convenience constructor with the trailing-hole convention.
    pub fn ipbd(v: usize, w: usize) -> Self {
        DesignKind::Ipbd {
            v,
            hole: (v - w..v).collect(),
        }
    }

    /// Uniform GDD type g^u in the contiguous layout.
    pub fn gdd_uniform(g: usize, u: usize) -> Self {
        DesignKind::Gdd {
            groups: (0..u).map(|i| (i * g..(i + 1) * g).collect()).collect(),
        }
    }

    /// GDD from a list of group sizes, laid out contiguously in order.
    pub fn gdd_of_sizes(sizes: &[usize]) -> Self {
        let mut groups = Vec::with_capacity(sizes.len());
        let mut at = 0;
        for &s in sizes {
            groups.push((at..at + s).collect());
            at += s;
        }
        DesignKind::Gdd { groups }
    }

    /// Uniform IGDD type (g;h)^u in the contiguous layout, holes trailing
    /// within each group.
    pub fn igdd_uniform(g: usize, h: usize, u: usize) -> Self {
        let groups: Vec<Vec<usize>> = (0..u).map(|i| (i * g..(i + 1) * g).collect()).collect();
        let holes: Vec<Vec<usize>> = (0..u)
            .map(|i| (i * g + (g - h)..(i + 1) * g).collect())
            .collect();
        DesignKind::Igdd { groups, holes }
    }

    pub fn n_points(&self) -> usize {
        match self {
            DesignKind::Pbd { v }
            | DesignKind::Ipbd { v, .. }
            | DesignKind::Packing { v, .. }
            | DesignKind::Covering { v, .. } => *v,
            DesignKind::Gdd { groups } | DesignKind::Igdd { groups, .. } => {
                groups.iter().map(|g| g.len()).sum()
            }
            DesignKind::Hgdd { u, h, m } => u * h * m,
            DesignKind::Td { k, n } => k * n,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            DesignKind::Pbd { .. } => "pbd",
            DesignKind::Ipbd { .. } => "ipbd",
            DesignKind::Gdd { .. } => "gdd",
            DesignKind::Igdd { .. } => "igdd",
            DesignKind::Hgdd { .. } => "hgdd",
            DesignKind::Td { .. } => "td",
            DesignKind::Packing { .. } => "packing",
            DesignKind::Covering { .. } => "covering",
        }
    }

    pub fn coverage_mode(&self) -> CoverageMode {
        match self {
            DesignKind::Packing { .. } => CoverageMode::AtMost,
            DesignKind::Covering { .. } => CoverageMode::AtLeast,
            _ => CoverageMode::Exact,
        }
    }

    /// Hole of an IPBD, empty for other kinds.
    pub fn hole(&self) -> &[usize] {
        match self {
            DesignKind::Ipbd { hole, .. } => hole,
            _ => &[],
        }
    }

    /// Group view: groups of a GDD/IGDD, the k groups of size n of a TD,
    /// the grid groups of an HGDD. Empty for point-symmetric kinds.
    pub fn group_sets(&self) -> Vec<Vec<usize>> {
        match self {
            DesignKind::Gdd { groups } | DesignKind::Igdd { groups, .. } => groups.clone(),
            DesignKind::Td { k, n } => (0..*k).map(|i| (i * n..(i + 1) * n).collect()).collect(),
            DesignKind::Hgdd { u, h, m } => (0..*u)
                .map(|i| (i * h * m..(i + 1) * h * m).collect())
                .collect(),
            _ => Vec::new(),
        }
    }

    /// Validate internal consistency of the descriptor itself.
    fn validate(&self) -> Result<()> {
        let v = self.n_points();
        match self {
            DesignKind::Ipbd { v, hole } => {
                let mut seen = BTreeSet::new();
                for &p in hole {
                    if p >= *v {
                        return Err(Error::Structure(format!("hole point {p} out of range")));
                    }
                    if !seen.insert(p) {
                        return Err(Error::Structure(format!("duplicated hole point {p}")));
                    }
                }
                if hole.is_empty() || hole.len() >= *v {
                    return Err(Error::Structure(format!(
                        "hole size {} must satisfy 1 <= w < v = {v}",
                        hole.len()
                    )));
                }
            }
            DesignKind::Gdd { groups } => validate_partition(groups, v)?,
            DesignKind::Igdd { groups, holes } => {
                validate_partition(groups, v)?;
                if holes.len() != groups.len() {
                    return Err(Error::Structure("one hole per group required".into()));
                }
                for (g, h) in groups.iter().zip(holes) {
                    let gs: BTreeSet<usize> = g.iter().copied().collect();
                    if !h.iter().all(|p| gs.contains(p)) {
                        return Err(Error::Structure("hole not a subset of its group".into()));
                    }
                    let hs: BTreeSet<usize> = h.iter().copied().collect();
                    if hs.len() != h.len() {
                        return Err(Error::Structure("duplicated hole point".into()));
                    }
                }
            }
            DesignKind::Hgdd { u, h, m } => {
                if *u == 0 || *h == 0 || *m == 0 {
                    return Err(Error::Structure("hgdd parameters must be positive".into()));
                }
            }
            DesignKind::Packing { v, k } | DesignKind::Covering { v, k } if (*k < 2 || *k > *v) => {
                return Err(Error::Structure(format!(
                    "block size {k} out of range for v={v}"
                )));
            }
            _ => {}
        }
        Ok(())
    }
}

fn validate_partition(groups: &[Vec<usize>], v: usize) -> Result<()> {
    let mut seen = vec![false; v];
    for g in groups {
        for &p in g {
            if p >= v {
                return Err(Error::Structure(format!("group point {p} out of range")));
            }
            if seen[p] {
                return Err(Error::Structure(format!(
                    "overlapping groups: point {p} appears twice"
                )));
            }
            seen[p] = true;
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::Structure("groups do not cover all points".into()));
    }
    Ok(())
}

/// Per-point structural labels, shared by the verifier and the searcher.
/// `group_of[p]` / `hole_of[p]` are `usize::MAX` when not applicable.
pub struct PointStructure {
    pub group_of: Vec<usize>,
    pub hole_of: Vec<usize>,
}

pub const NO_LABEL: usize = usize::MAX;

impl DesignKind {
    pub fn point_structure(&self) -> PointStructure {
        let v = self.n_points();
        let mut group_of = vec![NO_LABEL; v];
        let mut hole_of = vec![NO_LABEL; v];
        match self {
            DesignKind::Pbd { .. } | DesignKind::Packing { .. } | DesignKind::Covering { .. } => {}
            DesignKind::Ipbd { hole, .. } => {
                for &p in hole {
                    hole_of[p] = 0;
                }
            }
            DesignKind::Gdd { groups } => {
                for (i, g) in groups.iter().enumerate() {
                    for &p in g {
                        group_of[p] = i;
                    }
                }
            }
            DesignKind::Igdd { groups, holes } => {
                for (i, g) in groups.iter().enumerate() {
                    for &p in g {
                        group_of[p] = i;
                    }
                }
                for (i, h) in holes.iter().enumerate() {
                    for &p in h {
                        hole_of[p] = i;
                    }
                }
            }
            DesignKind::Hgdd { u: _, h, m } => {
                for p in 0..v {
                    group_of[p] = p / (h * m);
                    hole_of[p] = (p % (h * m)) / h;
                }
            }
            DesignKind::Td { k, n } => {
                for i in 0..*k {
                    for p in i * n..(i + 1) * n {
                        group_of[p] = i;
                    }
                }
            }
        }
        PointStructure { group_of, hole_of }
    }

    /// Whether the pair {x,y} must stay uncovered for this kind.
    pub fn pair_forbidden(&self, st: &PointStructure, x: usize, y: usize) -> bool {
        match self {
            DesignKind::Pbd { .. } | DesignKind::Packing { .. } | DesignKind::Covering { .. } => {
                false
            }
            DesignKind::Ipbd { .. } => st.hole_of[x] == 0 && st.hole_of[y] == 0,
            DesignKind::Gdd { .. } | DesignKind::Td { .. } => st.group_of[x] == st.group_of[y],
            DesignKind::Igdd { .. } => {
                st.group_of[x] == st.group_of[y]
                    || (st.hole_of[x] != NO_LABEL
                        && st.hole_of[y] != NO_LABEL
                        && st.hole_of[x] != st.hole_of[y])
            }
            DesignKind::Hgdd { .. } => {
                st.group_of[x] == st.group_of[y] || st.hole_of[x] == st.hole_of[y]
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    /// Partitions the whole point set.
    Full,
    /// Partitions the points outside the hole.
    Partial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionClass {
    pub blocks: Vec<usize>,
    pub kind: ClassKind,
}

/// A partition of the block list into (full or partial) parallel classes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Resolution {
    pub classes: Vec<ResolutionClass>,
}

impl Resolution {
    pub fn full(classes: Vec<Vec<usize>>) -> Self {
        Resolution {
            classes: classes
                .into_iter()
                .map(|blocks| ResolutionClass {
                    blocks,
                    kind: ClassKind::Full,
                })
                .collect(),
        }
    }

    pub fn n_full(&self) -> usize {
        self.classes
            .iter()
            .filter(|c| c.kind == ClassKind::Full)
            .count()
    }
}

/// A block design: a point set, a block family, a kind descriptor, the
/// admissible block sizes, and an optional resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Design {
    pub n_points: usize,
    pub blocks: Vec<Vec<usize>>,
    pub kind: DesignKind,
    pub lambda: u32,
    pub block_sizes: BlockSizeSet,
    pub resolution: Option<Resolution>,
}

impl Design {
    /// Build a design, validating structure: point ranges, strictly
    /// increasing blocks of admissible sizes, kind consistency, resolution
    /// index sanity, and simplicity when lambda = 1.
    pub fn new(
        kind: DesignKind,
        lambda: u32,
        block_sizes: BlockSizeSet,
        mut blocks: Vec<Vec<usize>>,
        resolution: Option<Resolution>,
    ) -> Result<Self> {
        kind.validate()?;
        let n_points = kind.n_points();
        for b in blocks.iter_mut() {
            b.sort_unstable();
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Structure(format!("duplicated point in block {b:?}")));
            }
            if let Some(&p) = b.iter().find(|&&p| p >= n_points) {
                return Err(Error::Structure(format!("block point {p} out of range")));
            }
            if !block_sizes.contains(b.len()) {
                return Err(Error::Structure(format!(
                    "block size {} not in K = {}",
                    b.len(),
                    block_sizes
                )));
            }
        }
        if lambda <= 1 {
            let mut sorted: Vec<&Vec<usize>> = blocks.iter().collect();
            sorted.sort();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Structure(
                    "repeated blocks are only allowed when lambda > 1".into(),
                ));
            }
        }
        if let Some(res) = &resolution {
            let mut seen = vec![false; blocks.len()];
            for c in &res.classes {
                for &i in &c.blocks {
                    if i >= blocks.len() {
                        return Err(Error::Structure(format!(
                            "resolution block index {i} out of range"
                        )));
                    }
                    if seen[i] {
                        return Err(Error::Structure(format!(
                            "block {i} appears in more than one parallel class"
                        )));
                    }
                    seen[i] = true;
                }
            }
            if seen.iter().any(|&s| !s) {
                return Err(Error::Structure(
                    "resolution does not place every block in a class".into(),
                ));
            }
        }
        Ok(Design {
            n_points,
            blocks,
            kind,
            lambda,
            block_sizes,
            resolution,
        })
    }

    /// The multiset of block sizes, as size -> count.
    pub fn block_size_profile(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for b in &self.blocks {
            *out.entry(b.len()).or_insert(0) += 1;
        }
        out
    }

    /// IPBD hole size (1 for a plain PBD viewed as IPBD, 0 otherwise n/a).
    pub fn hole_size(&self) -> usize {
        self.kind.hole().len()
    }
}

/// Relabel points so the hole / distinguished structure occupies the
/// trailing index range, sort blocks lexicographically, and remap the
/// resolution accordingly. Idempotent, and preserves the pair coverage
/// matrix up to the relabeling permutation.
pub fn normalize(design: &Design) -> Result<Design> {
    let v = design.n_points;
    // old index -> new index
    let mut perm: Vec<usize> = (0..v).collect();
    let kind = match &design.kind {
        DesignKind::Ipbd { v, hole } => {
            let holeset: BTreeSet<usize> = hole.iter().copied().collect();
            let mut next = 0;
            for p in 0..*v {
                if !holeset.contains(&p) {
                    perm[p] = next;
                    next += 1;
                }
            }
            for &p in &holeset {
                perm[p] = next;
                next += 1;
            }
            DesignKind::ipbd(*v, hole.len())
        }
        DesignKind::Gdd { groups } => {
            let mut next = 0;
            let mut sizes = Vec::new();
            for g in groups {
                let mut g: Vec<usize> = g.clone();
                g.sort_unstable();
                sizes.push(g.len());
                for p in g {
                    perm[p] = next;
                    next += 1;
                }
            }
            DesignKind::gdd_of_sizes(&sizes)
        }
        DesignKind::Igdd { groups, holes } => {
            let mut next = 0;
            let mut new_groups = Vec::new();
            let mut new_holes = Vec::new();
            for (g, h) in groups.iter().zip(holes) {
                let hs: BTreeSet<usize> = h.iter().copied().collect();
                let start = next;
                let mut non_hole: Vec<usize> =
                    g.iter().copied().filter(|p| !hs.contains(p)).collect();
                non_hole.sort_unstable();
                for p in non_hole {
                    perm[p] = next;
                    next += 1;
                }
                let hole_start = next;
                for &p in &hs {
                    perm[p] = next;
                    next += 1;
                }
                new_groups.push((start..next).collect());
                new_holes.push((hole_start..next).collect());
            }
            DesignKind::Igdd {
                groups: new_groups,
                holes: new_holes,
            }
        }
        other => other.clone(),
    };

    let mut blocks: Vec<Vec<usize>> = design
        .blocks
        .iter()
        .map(|b| {
            let mut nb: Vec<usize> = b.iter().map(|&p| perm[p]).collect();
            nb.sort_unstable();
            nb
        })
        .collect();

    // stable sort with index tracking so the resolution can be remapped
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by(|&a, &b| blocks[a].cmp(&blocks[b]));
    let mut where_is = vec![0usize; blocks.len()];
    for (new_i, &old_i) in order.iter().enumerate() {
        where_is[old_i] = new_i;
    }
    let mut sorted_blocks = Vec::with_capacity(blocks.len());
    for &i in &order {
        sorted_blocks.push(std::mem::take(&mut blocks[i]));
    }

    let resolution = design.resolution.as_ref().map(|res| Resolution {
        classes: res
            .classes
            .iter()
            .map(|c| {
                let mut idx: Vec<usize> = c.blocks.iter().map(|&i| where_is[i]).collect();
                idx.sort_unstable();
                ResolutionClass {
                    blocks: idx,
                    kind: c.kind,
                }
            })
            .collect(),
    });

    Design::new(
        kind,
        design.lambda,
        design.block_sizes.clone(),
        sorted_blocks,
        resolution,
    )
}

/// One or more (incomplete) latin squares over a common symbol set and hole,
/// stored row-major with `None` on the hole-by-hole cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquareSet {
    pub n: usize,
    /// Hole symbol/index subset M, sorted. Empty for ordinary squares.
    pub hole: Vec<usize>,
    pub squares: Vec<Vec<Option<usize>>>,
}

impl LatinSquareSet {
    /// Structural validation: square shapes, symbol ranges, and the empty
    /// pattern (cells empty exactly on hole x hole when m >= 2; no empty
    /// cells when m <= 1, where the object is an ordinary latin square).
    pub fn new(n: usize, hole: Vec<usize>, squares: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let mut hole = hole;
        hole.sort_unstable();
        hole.dedup();
        if hole.iter().any(|&p| p >= n) {
            return Err(Error::Structure("hole symbol out of range".into()));
        }
        if squares.is_empty() {
            return Err(Error::Structure("at least one square required".into()));
        }
        let in_hole: Vec<bool> = {
            let mut v = vec![false; n];
            for &p in &hole {
                v[p] = true;
            }
            v
        };
        let m = hole.len();
        for sq in &squares {
            if sq.len() != n * n {
                return Err(Error::Structure(format!(
                    "square has {} cells, expected {}",
                    sq.len(),
                    n * n
                )));
            }
            for i in 0..n {
                for j in 0..n {
                    match sq[i * n + j] {
                        Some(s) if s >= n => {
                            return Err(Error::Structure(format!("symbol {s} out of range")))
                        }
                        Some(_) if m >= 2 && in_hole[i] && in_hole[j] => {
                            return Err(Error::Structure(format!(
                                "cell ({i},{j}) inside the hole must be empty"
                            )))
                        }
                        None if m < 2 || !(in_hole[i] && in_hole[j]) => {
                            return Err(Error::Structure(format!(
                                "cell ({i},{j}) outside the hole must be filled"
                            )))
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(LatinSquareSet { n, hole, squares })
    }

    pub fn m(&self) -> usize {
        self.hole.len()
    }

    pub fn t(&self) -> usize {
        self.squares.len()
    }

    pub fn cell(&self, s: usize, i: usize, j: usize) -> Option<usize> {
        self.squares[s][i * self.n + j]
    }
}
