//! Generic backtracking searcher over uncovered pairs, with optional
//! resolvability and class-uniformity side constraints.
//!
//! The plain searcher always branches on the lexicographically smallest
//! uncovered required pair and enumerates candidate blocks in sorted
//! order, so single-worker runs are deterministic. `Nonexistent` is
//! reported only when the whole branch tree has been exhausted within
//! budget; otherwise the outcome is `BudgetExhausted`.
//!
//! Symmetry reduction: points are kept partitioned into interchangeability
//! cells — the atoms generated by the initial structure (hole, groups),
//! the placed blocks, and the branch points. Permuting points within a
//! cell is an automorphism of the current state, so every candidate block
//! is fixed to take a prefix of each cell it meets; this keeps exactly one
//! representative per within-cell relabeling class at every level.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::model::{BlockSizeSet, Design, DesignKind, Resolution};
use crate::verify::{verify_design, verify_resolution};

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;
pub const DEFAULT_TIME_BUDGET: Duration = Duration::from_secs(60);
pub const DEFAULT_POINT_CAP: usize = 24;

#[derive(Debug, Clone)]
pub struct SearchProblem {
    pub kind: DesignKind,
    pub sizes: BlockSizeSet,
    pub require_resolution: bool,
    /// Required block-size multiset per parallel class (size -> count).
    pub class_uniform: Option<BTreeMap<usize, usize>>,
    pub node_budget: u64,
    pub time_budget: Duration,
    pub point_cap: usize,
    pub workers: usize,
}

impl SearchProblem {
    pub fn new(kind: DesignKind, sizes: BlockSizeSet) -> Self {
        SearchProblem {
            kind,
            sizes,
            require_resolution: false,
            class_uniform: None,
            node_budget: DEFAULT_NODE_BUDGET,
            time_budget: DEFAULT_TIME_BUDGET,
            point_cap: DEFAULT_POINT_CAP,
            workers: 1,
        }
    }
}

#[derive(Debug)]
pub enum SearchOutcome {
    Found(Design),
    Nonexistent,
    BudgetExhausted,
}

enum Flow {
    Exhausted,
    Found,
    Stop,
}

/// Shared budget across workers.
struct Budget {
    nodes: AtomicU64,
    node_budget: u64,
    deadline: Instant,
    stop: AtomicBool,
}

impl Budget {
    fn new(node_budget: u64, time_budget: Duration) -> Self {
        Budget {
            nodes: AtomicU64::new(0),
            node_budget,
            deadline: Instant::now() + time_budget,
            stop: AtomicBool::new(false),
        }
    }

    /// Returns false when the budget is exhausted.
    fn spend(&self, local: &mut u64) -> bool {
        *local += 1;
        if (*local).is_multiple_of(1024) {
            let total = self.nodes.fetch_add(1024, Ordering::Relaxed) + 1024;
            if total > self.node_budget || Instant::now() >= self.deadline {
                self.stop.store(true, Ordering::Relaxed);
            }
        }
        !self.stop.load(Ordering::Relaxed)
    }
}

struct Searcher<'a> {
    v: usize,
    /// unc[x]: bitmask of partners y with the pair {x,y} required and
    /// still uncovered.
    unc: Vec<u32>,
    size_ok: u64,
    k_max: usize,
    triangle_prune: bool,
    /// interchangeability cells (bitmasks, stable order)
    cells: Vec<u32>,
    /// cell index per point
    cell_of: [u8; 32],
    chosen: Vec<u32>,
    budget: &'a Budget,
    local_nodes: u64,
    solution: Option<Vec<u32>>,
}

fn mask_points(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let z = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(z)
        }
    })
}

impl<'a> Searcher<'a> {
    fn new(
        v: usize,
        unc: Vec<u32>,
        sizes: &BlockSizeSet,
        cells: Vec<u32>,
        budget: &'a Budget,
    ) -> Self {
        let mut size_ok = 0u64;
        for s in sizes.sizes() {
            if s <= 63 {
                size_ok |= 1 << s;
            }
        }
        let mut s = Searcher {
            v,
            unc,
            size_ok,
            k_max: sizes.k_max().min(v),
            triangle_prune: sizes.k_min() >= 3,
            cells: Vec::new(),
            cell_of: [0; 32],
            chosen: Vec::new(),
            budget,
            local_nodes: 0,
            solution: None,
        };
        s.set_cells(cells);
        s
    }

    fn set_cells(&mut self, cells: Vec<u32>) {
        self.cells = cells;
        for (ci, &c) in self.cells.iter().enumerate() {
            for p in mask_points(c) {
                self.cell_of[p] = ci as u8;
            }
        }
    }

    /// Split every cell along the mask, keeping stable order.
    fn refine(&mut self, mask: u32) {
        let mut out = Vec::with_capacity(self.cells.len() + 2);
        for &c in &self.cells {
            let a = c & mask;
            let b = c & !mask;
            if a != 0 {
                out.push(a);
            }
            if b != 0 {
                out.push(b);
            }
        }
        self.set_cells(out);
    }

    /// A point may join a candidate only if the earlier points of its cell
    /// are already in; together with ascending extension this enumerates
    /// exactly the cell-prefix representatives.
    #[inline]
    fn prefix_ok(&self, s: u32, z: usize) -> bool {
        let cell = self.cells[self.cell_of[z] as usize];
        cell & ((1u32 << z) - 1) & !s == 0
    }

    /// Every uncovered pair must extend to a block: with min K >= 3 the
    /// pair {x,y} needs a common partner z with {x,z} and {y,z} uncovered.
    fn triangle_consistent(&self, touched: u32) -> bool {
        if !self.triangle_prune {
            return true;
        }
        for x in mask_points(touched) {
            let ux = self.unc[x];
            for y in mask_points(ux) {
                if ux & self.unc[y] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn place(&mut self, b: u32) {
        for x in mask_points(b) {
            self.unc[x] &= !b;
        }
        self.chosen.push(b);
    }

    fn unplace(&mut self, b: u32) {
        self.chosen.pop();
        for x in mask_points(b) {
            self.unc[x] |= b & !(1 << x);
        }
    }

    fn try_block(&mut self, b: u32) -> Flow {
        if !self.budget.spend(&mut self.local_nodes) {
            return Flow::Stop;
        }
        self.place(b);
        let flow = if self.triangle_consistent(b) {
            let saved = (self.cells.clone(), self.cell_of);
            self.refine(b);
            let flow = self.dfs();
            if matches!(flow, Flow::Exhausted) {
                self.cells = saved.0;
                self.cell_of = saved.1;
            }
            flow
        } else {
            Flow::Exhausted
        };
        match flow {
            Flow::Exhausted => {
                self.unplace(b);
                Flow::Exhausted
            }
            other => other,
        }
    }

    fn dfs(&mut self) -> Flow {
        let x = match (0..self.v).find(|&x| self.unc[x] != 0) {
            Some(x) => x,
            None => {
                self.solution = Some(self.chosen.clone());
                return Flow::Found;
            }
        };
        let y = self.unc[x].trailing_zeros() as usize;
        let common = self.unc[x] & self.unc[y];
        // the branch pair must be fixed (setwise) by the cell symmetries
        let saved = (self.cells.clone(), self.cell_of);
        self.refine((1 << x) | (1 << y));
        let flow = self.extend((1 << x) | (1 << y), common, 2);
        if matches!(flow, Flow::Exhausted) {
            self.cells = saved.0;
            self.cell_of = saved.1;
        }
        flow
    }

    /// Enumerate candidate blocks extending `s` (ascending extension
    /// points, so each candidate set is visited once, in sorted order),
    /// trying each size in K as it is reached. Only cell-prefix
    /// representatives are generated.
    fn extend(&mut self, s: u32, common: u32, size: usize) -> Flow {
        if size >= 2 && (self.size_ok >> size) & 1 == 1 {
            match self.try_block(s) {
                Flow::Exhausted => {}
                other => return other,
            }
        }
        if size < self.k_max {
            let mut rest = common;
            while rest != 0 {
                let z = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if !self.prefix_ok(s, z) {
                    continue;
                }
                let above = !(((1u64 << (z + 1)) - 1) as u32);
                match self.extend(s | (1 << z), common & self.unc[z] & above, size + 1) {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
        }
        Flow::Exhausted
    }

    /// Enumerate the candidates `extend` would try, without trying them
    /// (used to split first-level branches across workers).
    fn collect(&self, s: u32, common: u32, size: usize, out: &mut Vec<u32>) {
        if size >= 2 && (self.size_ok >> size) & 1 == 1 {
            out.push(s);
        }
        if size < self.k_max {
            let mut rest = common;
            while rest != 0 {
                let z = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if !self.prefix_ok(s, z) {
                    continue;
                }
                let above = !(((1u64 << (z + 1)) - 1) as u32);
                self.collect(s | (1 << z), common & self.unc[z] & above, size + 1, out);
            }
        }
    }
}

/// Structural cells whose internal point order is immaterial in the empty
/// state: hole/non-hole for an IPBD, groups for a GDD, group-minus-hole and
/// hole per group for an IGDD, grid cells for an HGDD.
fn symmetry_cells(kind: &DesignKind) -> Vec<u32> {
    let v = kind.n_points();
    match kind {
        DesignKind::Pbd { .. } | DesignKind::Packing { .. } | DesignKind::Covering { .. } => {
            vec![low_mask(v)]
        }
        DesignKind::Ipbd { hole, .. } => {
            let hole_mask = hole.iter().fold(0u32, |m, &p| m | (1 << p));
            vec![low_mask(v) & !hole_mask, hole_mask]
        }
        DesignKind::Gdd { groups } => groups
            .iter()
            .map(|g| g.iter().fold(0u32, |m, &p| m | (1 << p)))
            .collect(),
        DesignKind::Igdd { groups, holes } => {
            let mut out = Vec::new();
            for (g, h) in groups.iter().zip(holes) {
                let gm = g.iter().fold(0u32, |m, &p| m | (1 << p));
                let hm = h.iter().fold(0u32, |m, &p| m | (1 << p));
                out.push(gm & !hm);
                out.push(hm);
            }
            out
        }
        DesignKind::Hgdd { u, h, m } => {
            let mut out = Vec::new();
            for i in 0..*u {
                for j in 0..*m {
                    let base = i * h * m + j * h;
                    out.push(((1u64 << h) - 1) as u32);
                    let last = out.len() - 1;
                    out[last] <<= base;
                }
            }
            out
        }
        DesignKind::Td { k, n } => (0..*k).map(|i| low_mask(*n) << (i * n)).collect(),
    }
}

fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Required-pair adjacency of the empty state.
fn required_masks(kind: &DesignKind) -> Vec<u32> {
    let v = kind.n_points();
    let st = kind.point_structure();
    let mut unc = vec![0u32; v];
    for x in 0..v {
        for y in 0..v {
            if x != y && !kind.pair_forbidden(&st, x, y) {
                unc[x] |= 1 << y;
            }
        }
    }
    unc
}

fn blocks_from_masks(masks: &[u32]) -> Vec<Vec<usize>> {
    masks
        .iter()
        .map(|&m| {
            let mut b: Vec<usize> = mask_points(m).collect();
            b.sort_unstable();
            b
        })
        .collect()
}

pub fn search(problem: &SearchProblem) -> Result<SearchOutcome> {
    let v = problem.kind.n_points();
    if v > problem.point_cap || v > 32 {
        return Err(Error::CapExceeded(format!(
            "{v} points exceeds the configured cap {}",
            problem.point_cap
        )));
    }
    match problem.kind {
        DesignKind::Packing { .. } | DesignKind::Covering { .. } => {
            return Err(Error::Unavailable(
                "search handles exact-coverage kinds, not packings/coverings".into(),
            ));
        }
        _ => {}
    }
    if problem.require_resolution || problem.class_uniform.is_some() {
        return search_resolvable(problem);
    }

    let budget = Budget::new(problem.node_budget, problem.time_budget);
    let unc = required_masks(&problem.kind);
    let cells = symmetry_cells(&problem.kind);

    // nothing to cover: the empty design is the answer
    if unc.iter().all(|&m| m == 0) {
        let d = Design::new(problem.kind.clone(), 1, problem.sizes.clone(), vec![], None)?;
        return Ok(SearchOutcome::Found(d));
    }

    let probe = Searcher::new(v, unc.clone(), &problem.sizes, cells.clone(), &budget);
    if !probe.triangle_consistent(low_mask(v)) {
        return Ok(SearchOutcome::Nonexistent);
    }

    let workers = problem.workers.max(1);
    if workers <= 1 {
        let mut s = Searcher::new(v, unc, &problem.sizes, cells, &budget);
        return match s.dfs() {
            Flow::Found => finish(problem, s.solution.expect("solution recorded")),
            Flow::Stop => Ok(SearchOutcome::BudgetExhausted),
            Flow::Exhausted => Ok(SearchOutcome::Nonexistent),
        };
    }

    // parallel exploration of first-level branches; deterministic runs
    // require workers = 1
    let x = (0..v).find(|&x| unc[x] != 0).expect("some pair uncovered");
    let y = unc[x].trailing_zeros() as usize;
    let pair = (1u32 << x) | (1 << y);
    let first = {
        let mut s = Searcher::new(v, unc.clone(), &problem.sizes, cells.clone(), &budget);
        s.refine(pair);
        let mut out = Vec::new();
        s.collect(pair, unc[x] & unc[y], 2, &mut out);
        out
    };
    let workers = workers.min(first.len().max(1));
    let found: Vec<Option<Vec<u32>>> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers {
            let unc = unc.clone();
            let cells = cells.clone();
            let sizes = &problem.sizes;
            let budget = &budget;
            let first = &first;
            handles.push(scope.spawn(move || {
                let mut s = Searcher::new(v, unc, sizes, cells, budget);
                s.refine(pair);
                let mut best = None;
                for (i, &b) in first.iter().enumerate() {
                    if i % workers != w {
                        continue;
                    }
                    match s.try_block(b) {
                        Flow::Found => {
                            best = s.solution.clone();
                            budget.stop.store(true, Ordering::Relaxed);
                            break;
                        }
                        Flow::Stop => break,
                        Flow::Exhausted => {}
                    }
                }
                best
            }));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    if let Some(sol) = found.into_iter().flatten().next() {
        return finish(problem, sol);
    }
    if budget.stop.load(Ordering::Relaxed) {
        // stop flag without a solution means budget/time ran out
        return Ok(SearchOutcome::BudgetExhausted);
    }
    Ok(SearchOutcome::Nonexistent)
}

fn finish(problem: &SearchProblem, solution: Vec<u32>) -> Result<SearchOutcome> {
    let blocks = blocks_from_masks(&solution);
    let d = Design::new(problem.kind.clone(), 1, problem.sizes.clone(), blocks, None)?;
    let cert = verify_design(&d);
    if !cert.valid {
        return Err(Error::Certification(format!(
            "search output: {}",
            cert.summary()
        )));
    }
    Ok(SearchOutcome::Found(d))
}

// ---------- resolvable search ----------

struct ClassSearcher<'a> {
    v: usize,
    unc: Vec<u32>,
    sizes: BlockSizeSet,
    /// remaining multiset for the current class (by size), when class
    /// uniformity is requested
    remaining: Option<Vec<usize>>,
    template: Option<Vec<usize>>,
    /// achievable residual point counts for a class (subset sums of K)
    feasible_count: Vec<bool>,
    class_used: u32,
    class_blocks: Vec<u32>,
    done_classes: Vec<Vec<u32>>,
    prev_first: u32,
    budget: &'a Budget,
    local_nodes: u64,
    solution: Option<Vec<Vec<u32>>>,
}

impl<'a> ClassSearcher<'a> {
    fn feasible_counts(v: usize, sizes: &BlockSizeSet) -> Vec<bool> {
        let mut dp = vec![false; v + 1];
        dp[0] = true;
        for n in 1..=v {
            dp[n] = sizes.sizes().any(|s| s <= n && dp[n - s]);
        }
        dp
    }

    fn dfs(&mut self) -> Flow {
        if self.class_used == low_mask(self.v) {
            // class complete
            if let Some(rem) = &self.remaining {
                if rem.iter().any(|&c| c != 0) {
                    return Flow::Exhausted;
                }
            }
            let first = *self.class_blocks.first().expect("class nonempty");
            let saved_prev = self.prev_first;
            self.prev_first = first;
            self.done_classes
                .push(std::mem::take(&mut self.class_blocks));
            self.class_used = 0;
            let saved_rem = std::mem::replace(&mut self.remaining, self.template.clone());
            let flow = if self.unc.iter().all(|&m| m == 0) {
                self.solution = Some(self.done_classes.clone());
                Flow::Found
            } else {
                self.dfs()
            };
            if matches!(flow, Flow::Exhausted) {
                self.remaining = saved_rem;
                self.class_blocks = self.done_classes.pop().expect("just pushed");
                self.class_used = self.class_blocks.iter().fold(0, |m, &b| m | b);
                self.prev_first = saved_prev;
            }
            return flow;
        }

        let p = (!self.class_used & low_mask(self.v)).trailing_zeros() as usize;
        let avail = self.unc[p] & !self.class_used;
        self.extend_class(1 << p, avail, 1)
    }

    fn extend_class(&mut self, s: u32, common: u32, size: usize) -> Flow {
        if size >= 2 && self.sizes.contains(size) && self.size_allowed(size) {
            // canonical class order: the block through the least point of
            // the first class slot must increase across classes
            let ok = !self.class_blocks.is_empty() || s > self.prev_first;
            if ok {
                match self.try_class_block(s, size) {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
        }
        if size < self.sizes.k_max().min(self.v) {
            let mut rest = common;
            while rest != 0 {
                let z = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let above = !(((1u64 << (z + 1)) - 1) as u32);
                match self.extend_class(s | (1 << z), common & self.unc[z] & above, size + 1) {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
        }
        Flow::Exhausted
    }

    fn size_allowed(&self, size: usize) -> bool {
        match &self.remaining {
            Some(rem) => rem.get(size).copied().unwrap_or(0) > 0,
            None => true,
        }
    }

    fn try_class_block(&mut self, b: u32, size: usize) -> Flow {
        if !self.budget.spend(&mut self.local_nodes) {
            return Flow::Stop;
        }
        // residual points of the class must still be partitionable
        let residual = (low_mask(self.v) & !self.class_used & !b).count_ones() as usize;
        let residual_ok = match &self.remaining {
            Some(_) => true, // multiset bookkeeping handles it
            None => self.feasible_count[residual],
        };
        if !residual_ok {
            return Flow::Exhausted;
        }
        for x in mask_points(b) {
            self.unc[x] &= !b;
        }
        self.class_used |= b;
        self.class_blocks.push(b);
        if let Some(rem) = &mut self.remaining {
            rem[size] -= 1;
        }
        let flow = self.dfs();
        if matches!(flow, Flow::Exhausted) {
            if let Some(rem) = &mut self.remaining {
                rem[size] += 1;
            }
            self.class_blocks.pop();
            self.class_used &= !b;
            for x in mask_points(b) {
                self.unc[x] |= b & !(1 << x);
            }
        }
        flow
    }
}

fn search_resolvable(problem: &SearchProblem) -> Result<SearchOutcome> {
    let v = problem.kind.n_points();
    if !problem.kind.hole().is_empty() {
        return Err(Error::Unavailable(
            "resolvable search supports full parallel classes only (no holes)".into(),
        ));
    }
    let template = problem.class_uniform.as_ref().map(|ms| {
        let mut t = vec![0usize; v + 1];
        for (&s, &c) in ms {
            if s <= v {
                t[s] = c;
            }
        }
        t
    });
    if let Some(t) = &template {
        let total: usize = t.iter().enumerate().map(|(s, c)| s * c).sum();
        if total != v {
            return Err(Error::Precondition(format!(
                "class multiset covers {total} points, need {v}"
            )));
        }
        for (s, &c) in t.iter().enumerate() {
            if c > 0 && !problem.sizes.contains(s) {
                return Err(Error::Precondition(format!(
                    "class multiset size {s} outside K"
                )));
            }
        }
    }
    let budget = Budget::new(problem.node_budget, problem.time_budget);
    let unc = required_masks(&problem.kind);
    let mut cs = ClassSearcher {
        v,
        unc,
        sizes: problem.sizes.clone(),
        remaining: template.clone(),
        template,
        feasible_count: ClassSearcher::feasible_counts(v, &problem.sizes),
        class_used: 0,
        class_blocks: Vec::new(),
        done_classes: Vec::new(),
        prev_first: 0,
        budget: &budget,
        local_nodes: 0,
        solution: None,
    };
    match cs.dfs() {
        Flow::Stop => Ok(SearchOutcome::BudgetExhausted),
        Flow::Exhausted => Ok(SearchOutcome::Nonexistent),
        Flow::Found => {
            let classes = cs.solution.expect("solution recorded");
            let mut blocks = Vec::new();
            let mut res_classes = Vec::new();
            for cls in &classes {
                let mut idx = Vec::new();
                for &b in cls {
                    idx.push(blocks.len());
                    blocks.push(b);
                }
                res_classes.push(idx);
            }
            let d = Design::new(
                problem.kind.clone(),
                1,
                problem.sizes.clone(),
                blocks_from_masks(&blocks),
                Some(Resolution::full(res_classes)),
            )?;
            let cert = verify_design(&d);
            if !cert.valid {
                return Err(Error::Certification(format!(
                    "search output: {}",
                    cert.summary()
                )));
            }
            let cert = verify_resolution(&d);
            if !cert.valid {
                return Err(Error::Certification(format!(
                    "search resolution: {}",
                    cert.summary()
                )));
            }
            Ok(SearchOutcome::Found(d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(kind: DesignKind, sizes: &[usize]) -> SearchOutcome {
        let problem = SearchProblem::new(kind, BlockSizeSet::new(sizes.iter().copied()).unwrap());
        search(&problem).unwrap()
    }

    #[test]
    fn finds_triple_systems() {
        match run(DesignKind::Pbd { v: 7 }, &[3]) {
            SearchOutcome::Found(d) => assert_eq!(d.blocks.len(), 7),
            other => panic!("expected STS(7), got {other:?}"),
        }
        match run(DesignKind::Pbd { v: 9 }, &[3]) {
            SearchOutcome::Found(d) => assert_eq!(d.blocks.len(), 12),
            other => panic!("expected STS(9), got {other:?}"),
        }
    }

    #[test]
    fn rejects_sts6() {
        assert!(matches!(
            run(DesignKind::Pbd { v: 6 }, &[3]),
            SearchOutcome::Nonexistent
        ));
    }

    #[test]
    fn finds_small_ipbd() {
        match run(DesignKind::ipbd(7, 3), &[3]) {
            SearchOutcome::Found(d) => assert_eq!(d.blocks.len(), 6),
            other => panic!("expected IPBD((7;3)), got {other:?}"),
        }
    }

    #[test]
    fn ipbd_7_2_all_sizes_nonexistent() {
        assert!(matches!(
            run(DesignKind::ipbd(7, 2), &[3, 4, 5, 6, 7]),
            SearchOutcome::Nonexistent
        ));
    }

    #[test]
    fn cap_respected() {
        let problem =
            SearchProblem::new(DesignKind::Pbd { v: 31 }, BlockSizeSet::new([3]).unwrap());
        assert!(search(&problem).is_err());
    }

    #[test]
    fn resolvable_kirkman_9() {
        let mut problem =
            SearchProblem::new(DesignKind::Pbd { v: 9 }, BlockSizeSet::new([3]).unwrap());
        problem.require_resolution = true;
        match search(&problem).unwrap() {
            SearchOutcome::Found(d) => {
                assert_eq!(d.resolution.as_ref().unwrap().classes.len(), 4);
            }
            other => panic!("expected KTS(9), got {other:?}"),
        }
    }

    #[test]
    fn resolvable_one_factorization() {
        let mut problem =
            SearchProblem::new(DesignKind::Pbd { v: 6 }, BlockSizeSet::new([2]).unwrap());
        problem.require_resolution = true;
        match search(&problem).unwrap() {
            SearchOutcome::Found(d) => {
                assert_eq!(d.resolution.as_ref().unwrap().classes.len(), 5);
            }
            other => panic!("expected 1-factorization of K_6, got {other:?}"),
        }
    }

    #[test]
    fn class_uniform_multiset_respected() {
        let mut problem =
            SearchProblem::new(DesignKind::Pbd { v: 9 }, BlockSizeSet::new([2, 3]).unwrap());
        problem.require_resolution = true;
        problem.class_uniform = Some([(3, 3)].into_iter().collect());
        match search(&problem).unwrap() {
            SearchOutcome::Found(d) => {
                let (cert, ms) = crate::verify::verify_class_uniform(&d);
                assert!(cert.valid);
                assert_eq!(ms.unwrap(), [(3, 3)].into_iter().collect());
            }
            other => panic!("expected class-uniform design, got {other:?}"),
        }
        // 15 pairs are not a multiple of the 6 pairs a 3^2 class covers
        let mut problem =
            SearchProblem::new(DesignKind::Pbd { v: 6 }, BlockSizeSet::new([3]).unwrap());
        problem.require_resolution = true;
        problem.class_uniform = Some([(3, 2)].into_iter().collect());
        assert!(matches!(
            search(&problem).unwrap(),
            SearchOutcome::Nonexistent
        ));
        // a multiset that does not tile the point set is a precondition error
        let mut problem =
            SearchProblem::new(DesignKind::Pbd { v: 9 }, BlockSizeSet::new([3]).unwrap());
        problem.class_uniform = Some([(3, 2)].into_iter().collect());
        assert!(search(&problem).is_err());
    }
}
