//! Ingredient requests and the resolver that satisfies them by chaining
//! the catalog, direct generators, exact-cover search, and one level of
//! recursive recipes. Successful resolutions are memoized; proven
//! nonexistence is remembered too.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use std::time::Duration;

use crate::arith::{
    admissible_gdd_gnh1, admissible_gdd_uniform, admissible_igdd, admissible_ipbd,
    admissible_ipbd_lambda, admissible_pbd, admissible_rgdd, Admissibility,
};
use crate::error::{Error, Result};
use crate::gen::{
    self, search, tabulated, CatalogObject, SearchOutcome, SearchProblem, DEFAULT_NODE_BUDGET,
    DEFAULT_POINT_CAP, DEFAULT_TIME_BUDGET,
};
use crate::model::{BlockSizeSet, Design, DesignKind};
use crate::verify::verify_design;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RequestShape {
    Pbd {
        v: usize,
    },
    PbdLambda {
        v: usize,
        lambda: u32,
    },
    Ipbd {
        v: usize,
        w: usize,
    },
    /// Group type as a sorted multiset of group sizes.
    Gdd {
        group_sizes: Vec<usize>,
    },
    Igdd {
        g: usize,
        h: usize,
        u: usize,
    },
    Hgdd {
        u: usize,
        h: usize,
        m: usize,
    },
    Td {
        k: usize,
        n: usize,
    },
}

/// A concrete ingredient request: a shape, the admissible block sizes, and
/// whether a resolution is required. The provenance note is free-form
/// documentation and takes no part in resolution.
#[derive(Debug, Clone)]
pub struct IngredientRequest {
    pub shape: RequestShape,
    pub sizes: Vec<usize>,
    pub resolvable: bool,
    pub provenance: String,
}

impl IngredientRequest {
    pub fn new(shape: RequestShape, sizes: &BlockSizeSet) -> Self {
        let shape = match shape {
            RequestShape::Gdd { mut group_sizes } => {
                group_sizes.sort_unstable();
                RequestShape::Gdd { group_sizes }
            }
            other => other,
        };
        IngredientRequest {
            shape,
            sizes: sizes.to_vec(),
            resolvable: false,
            provenance: String::new(),
        }
    }

    pub fn resolvable(mut self) -> Self {
        self.resolvable = true;
        self
    }

    pub fn noting(mut self, provenance: &str) -> Self {
        self.provenance = provenance.to_string();
        self
    }

    fn memo_key(&self) -> (RequestShape, Vec<usize>, bool) {
        (self.shape.clone(), self.sizes.clone(), self.resolvable)
    }

    pub fn describe(&self) -> String {
        let sizes: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        let k = format!("{{{}}}", sizes.join(","));
        let body = match &self.shape {
            RequestShape::Pbd { v } => format!("PBD({v},{k})"),
            RequestShape::PbdLambda { v, lambda } => format!("PBD_{lambda}({v},{k})"),
            RequestShape::Ipbd { v, w } => format!("IPBD(({v};{w}),{k})"),
            RequestShape::Gdd { group_sizes } => {
                let mut parts: Vec<String> = Vec::new();
                let mut i = 0;
                while i < group_sizes.len() {
                    let s = group_sizes[i];
                    let mut c = 0;
                    while i < group_sizes.len() && group_sizes[i] == s {
                        c += 1;
                        i += 1;
                    }
                    parts.push(if c == 1 {
                        format!("{s}^1")
                    } else {
                        format!("{s}^{c}")
                    });
                }
                format!("GDD({},{k})", parts.join(" "))
            }
            RequestShape::Igdd { g, h, u } => format!("IGDD(({g};{h})^{u},{k})"),
            RequestShape::Hgdd { u, h, m } => format!("HGDD({u}x{h}^{m},{k})"),
            RequestShape::Td { k: kk, n } => format!("TD({kk},{n})"),
        };
        if self.resolvable {
            format!("resolvable {body}")
        } else {
            body
        }
    }

    fn sizeset(&self) -> Result<BlockSizeSet> {
        BlockSizeSet::new(self.sizes.iter().copied())
    }

    fn n_points(&self) -> usize {
        match &self.shape {
            RequestShape::Pbd { v }
            | RequestShape::PbdLambda { v, .. }
            | RequestShape::Ipbd { v, .. } => *v,
            RequestShape::Gdd { group_sizes } => group_sizes.iter().sum(),
            RequestShape::Igdd { g, u, .. } => g * u,
            RequestShape::Hgdd { u, h, m } => u * h * m,
            RequestShape::Td { k, n } => k * n,
        }
    }

    /// The matching necessary-condition predicate; shapes without a stated
    /// predicate (general GDD multisets, TDs, HGDDs) pass trivially.
    pub fn admissible(&self) -> Result<Option<Admissibility>> {
        let ks = self.sizeset()?;
        Ok(match &self.shape {
            RequestShape::Pbd { v } => {
                let base = admissible_pbd(*v as u64, &ks);
                if self.resolvable && self.sizes.len() == 1 {
                    let k = self.sizes[0] as u64;
                    let r = admissible_rgdd(1, *v as u64, k);
                    if !r.ok {
                        return Ok(Some(r));
                    }
                }
                Some(base)
            }
            RequestShape::PbdLambda { v, lambda } => {
                Some(admissible_ipbd_lambda(*v as u64, 1, &ks, *lambda as u64))
            }
            RequestShape::Ipbd { v, w } => Some(admissible_ipbd(*v as u64, *w as u64, &ks)),
            RequestShape::Gdd { group_sizes } => {
                let distinct: std::collections::BTreeSet<usize> =
                    group_sizes.iter().copied().collect();
                if group_sizes.len() < 2 {
                    None
                } else if distinct.len() == 1 {
                    Some(admissible_gdd_uniform(
                        group_sizes[0] as u64,
                        group_sizes.len() as u64,
                        &ks,
                    ))
                } else if distinct.len() == 2 {
                    // g^n h^1 pattern when one size occurs once
                    let mut iter = distinct.iter();
                    let (&a, &b) = (iter.next().unwrap(), iter.next().unwrap());
                    let ca = group_sizes.iter().filter(|&&s| s == a).count();
                    let cb = group_sizes.iter().filter(|&&s| s == b).count();
                    if cb == 1 {
                        Some(admissible_gdd_gnh1(a as u64, ca as u64, b as u64, &ks))
                    } else if ca == 1 {
                        Some(admissible_gdd_gnh1(b as u64, cb as u64, a as u64, &ks))
                    } else {
                        None
                    }
                } else {
                    None
                }
            }
            RequestShape::Igdd { g, h, u } => {
                Some(admissible_igdd(*g as u64, *h as u64, *u as u64, &ks))
            }
            RequestShape::Hgdd { .. } | RequestShape::Td { .. } => None,
        })
    }

    fn design_kind(&self) -> DesignKind {
        match &self.shape {
            RequestShape::Pbd { v } | RequestShape::PbdLambda { v, .. } => {
                DesignKind::Pbd { v: *v }
            }
            RequestShape::Ipbd { v, w } => DesignKind::ipbd(*v, *w),
            RequestShape::Gdd { group_sizes } => DesignKind::gdd_of_sizes(group_sizes),
            RequestShape::Igdd { g, h, u } => DesignKind::igdd_uniform(*g, *h, *u),
            RequestShape::Hgdd { u, h, m } => DesignKind::Hgdd {
                u: *u,
                h: *h,
                m: *m,
            },
            RequestShape::Td { k, n } => DesignKind::Td { k: *k, n: *n },
        }
    }
}

type MemoKey = (RequestShape, Vec<usize>, bool);

/// Resolution order: catalog, direct generators, exact-cover search within
/// budget, then one level of recursive recipes, with a global depth cap.
pub struct Resolver {
    memo: Mutex<HashMap<MemoKey, Arc<Design>>>,
    nonexistent: Mutex<HashMap<MemoKey, ()>>,
    pub node_budget: u64,
    pub time_budget: Duration,
    pub point_cap: usize,
    pub depth_cap: usize,
    pub workers: usize,
}

impl Default for Resolver {
    fn default() -> Self {
        Resolver {
            memo: Mutex::new(HashMap::new()),
            nonexistent: Mutex::new(HashMap::new()),
            node_budget: DEFAULT_NODE_BUDGET,
            time_budget: DEFAULT_TIME_BUDGET,
            point_cap: DEFAULT_POINT_CAP,
            depth_cap: 3,
            workers: 1,
        }
    }
}

impl Resolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn resolve(&self, req: &IngredientRequest) -> Result<Arc<Design>> {
        self.resolve_depth(req, self.depth_cap)
    }

    pub fn resolve_depth(&self, req: &IngredientRequest, depth: usize) -> Result<Arc<Design>> {
        if let Some(adm) = req.admissible()? {
            if !adm.ok {
                return Err(Error::Resolution(format!(
                    "{} is inadmissible: {}",
                    req.describe(),
                    adm.reason()
                )));
            }
        }
        let key = req.memo_key();
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        if self.nonexistent.lock().unwrap().contains_key(&key) {
            return Err(Error::Resolution(format!(
                "{}: proven nonexistent by exhaustive search",
                req.describe()
            )));
        }

        if let Some(d) = self.try_catalog(req)? {
            return Ok(self.remember(key, d));
        }
        if let Some(d) = self.try_generators(req)? {
            return Ok(self.remember(key, d));
        }
        match self.try_search(req)? {
            Some(SearchOutcome::Found(d)) => return Ok(self.remember(key, d)),
            Some(SearchOutcome::Nonexistent) => {
                self.nonexistent.lock().unwrap().insert(key, ());
                return Err(Error::Resolution(format!(
                    "{}: proven nonexistent by exhaustive search",
                    req.describe()
                )));
            }
            Some(SearchOutcome::BudgetExhausted) => {
                // fall through to recipes; budget exhaustion is not proof
            }
            None => {}
        }
        if depth > 0 {
            if let Some(d) = self.try_recipes(req, depth - 1)? {
                return Ok(self.remember(key, d));
            }
        }
        Err(Error::Resolution(format!(
            "{}: no catalog entry, generator, search result, or recipe applies",
            req.describe()
        )))
    }

    fn remember(&self, key: MemoKey, d: Design) -> Arc<Design> {
        let arc = Arc::new(d);
        self.memo.lock().unwrap().insert(key, arc.clone());
        arc
    }

    fn certified(&self, d: Design, what: &str) -> Result<Design> {
        let cert = verify_design(&d);
        if !cert.valid {
            return Err(Error::Certification(format!("{what}: {}", cert.summary())));
        }
        Ok(d)
    }

    fn try_catalog(&self, req: &IngredientRequest) -> Result<Option<Design>> {
        let keys: Vec<String> = match (&req.shape, req.sizes.as_slice()) {
            (RequestShape::Pbd { v: 9 }, [3]) => vec!["kts(9)".into()],
            (RequestShape::Pbd { v: 15 }, [3]) => vec!["kts(15)".into()],
            (RequestShape::Gdd { group_sizes }, [3]) if group_sizes == &vec![2, 2, 2] => {
                vec!["gdd(2^3,{3})".into()]
            }
            _ => Vec::new(),
        };
        for key in keys {
            if let Ok(CatalogObject::Design(d)) = tabulated(&key) {
                if req.resolvable && d.resolution.is_none() {
                    continue;
                }
                return Ok(Some(d));
            }
        }
        Ok(None)
    }

    fn try_generators(&self, req: &IngredientRequest) -> Result<Option<Design>> {
        let ks = req.sizeset()?;
        match &req.shape {
            RequestShape::Td { k, n } => {
                if ks.contains(*k) {
                    if let Ok(d) = gen::transversal_design(*k, *n) {
                        if !req.resolvable || d.resolution.is_some() {
                            return Ok(Some(d));
                        }
                    }
                }
                Ok(None)
            }
            RequestShape::Pbd { v } => self.generate_pbd(*v, &ks, req.resolvable),
            RequestShape::PbdLambda { v, lambda } => {
                // lambda copies of a PBD(v, K), when one resolves
                let base = IngredientRequest::new(RequestShape::Pbd { v: *v }, &ks);
                if let Ok(b) = self.resolve_depth(&base, 0) {
                    let mut blocks = Vec::new();
                    for _ in 0..*lambda {
                        blocks.extend(b.blocks.iter().cloned());
                    }
                    let d = Design::new(DesignKind::Pbd { v: *v }, *lambda, ks, blocks, None)?;
                    return Ok(Some(self.certified(d, "lambda-fold copies")?));
                }
                Ok(None)
            }
            RequestShape::Ipbd { v, w } => {
                if *w == 1 {
                    // a PBD with a relabeled kind
                    if let Some(p) = self.generate_pbd(*v, &ks, false)? {
                        let d = Design::new(DesignKind::ipbd(*v, 1), 1, ks, p.blocks, None)?;
                        return Ok(Some(self.certified(d, "pbd as ipbd")?));
                    }
                }
                Ok(None)
            }
            RequestShape::Gdd { group_sizes } => {
                if group_sizes.len() == 1 {
                    let d = Design::new(req.design_kind(), 1, ks, vec![], None)?;
                    return Ok(Some(d));
                }
                let uniform = group_sizes.windows(2).all(|w| w[0] == w[1]);
                let g = group_sizes[0];
                let u = group_sizes.len();
                if group_sizes.len() == 2 && ks.contains(2) && !req.resolvable {
                    // complete bipartite pair blocks
                    let (a, b) = (group_sizes[0], group_sizes[1]);
                    let blocks = (0..a)
                        .flat_map(|i| (0..b).map(move |j| vec![i, a + j]))
                        .collect();
                    let d = Design::new(req.design_kind(), 1, ks, blocks, None)?;
                    return Ok(Some(self.certified(d, "bipartite pairs")?));
                }
                if uniform {
                    if ks.contains(u) {
                        if let Ok(td) = gen::transversal_design(u, g) {
                            if !req.resolvable || td.resolution.is_some() {
                                let d = Design::new(
                                    DesignKind::gdd_uniform(g, u),
                                    1,
                                    ks.clone(),
                                    td.blocks,
                                    td.resolution,
                                )?;
                                return Ok(Some(self.certified(d, "td as gdd")?));
                            }
                        }
                    }
                    if !req.resolvable
                        && g == 2
                        && ks.contains(3)
                        && ((2 * u + 1) % 6 == 1 || (2 * u + 1) % 6 == 3)
                    {
                        if let Ok(d) = gen::gdd_2u_from_triple_system(u) {
                            let d = Design::new(d.kind, 1, ks, d.blocks, d.resolution)?;
                            return Ok(Some(self.certified(d, "sts-deletion gdd")?));
                        }
                    }
                    if !req.resolvable && u == 3 && ks.contains(3) {
                        if let Ok(d) = gen::gdd_n3_from_latin(g) {
                            let d = Design::new(d.kind, 1, ks, d.blocks, None)?;
                            return Ok(Some(self.certified(d, "latin-square gdd")?));
                        }
                    }
                }
                Ok(None)
            }
            RequestShape::Igdd { g, h, u } => {
                if *h == 0 {
                    // empty holes: a uniform GDD rewrapped
                    let inner = IngredientRequest::new(
                        RequestShape::Gdd {
                            group_sizes: vec![*g; *u],
                        },
                        &ks,
                    );
                    if let Ok(d) = self.resolve_depth(&inner, 0) {
                        let d = Design::new(
                            DesignKind::igdd_uniform(*g, 0, *u),
                            1,
                            ks,
                            d.blocks.clone(),
                            None,
                        )?;
                        return Ok(Some(self.certified(d, "gdd as igdd")?));
                    }
                }
                Ok(None)
            }
            RequestShape::Hgdd { .. } => Ok(None),
        }
    }

    fn generate_pbd(
        &self,
        v: usize,
        ks: &BlockSizeSet,
        resolvable: bool,
    ) -> Result<Option<Design>> {
        if ks.contains(v) {
            // the single-block design; its one block is a full class
            let res = Some(crate::model::Resolution::full(vec![vec![0]]));
            let d = Design::new(
                DesignKind::Pbd { v },
                1,
                ks.clone(),
                vec![(0..v).collect()],
                res,
            )?;
            return Ok(Some(d));
        }
        if resolvable && ks.contains(2) && v.is_multiple_of(2) {
            if let Ok(d) = gen::one_factorization(v) {
                let d = Design::new(d.kind, 1, ks.clone(), d.blocks, d.resolution)?;
                return Ok(Some(self.certified(d, "one-factorization")?));
            }
        }
        // affine plane when v = q^2 with q in K
        let q = (1..=v).find(|q| q * q == v);
        if let Some(q) = q {
            if ks.contains(q) {
                if let Ok(d) = gen::affine_plane(q) {
                    let d = Design::new(d.kind, 1, ks.clone(), d.blocks, d.resolution)?;
                    return Ok(Some(self.certified(d, "affine plane")?));
                }
            }
        }
        if !resolvable {
            if ks.contains(3) && (v % 6 == 1 || v % 6 == 3) {
                if let Ok(d) = gen::steiner_triple(v) {
                    let d = Design::new(d.kind, 1, ks.clone(), d.blocks, None)?;
                    return Ok(Some(self.certified(d, "triple system")?));
                }
            }
            let q = (1..=v).find(|q| q * q + q + 1 == v);
            if let Some(q) = q {
                if ks.contains(q + 1) {
                    if let Ok(d) = gen::projective_plane(q) {
                        let d = Design::new(d.kind, 1, ks.clone(), d.blocks, None)?;
                        return Ok(Some(self.certified(d, "projective plane")?));
                    }
                }
            }
            if ks.contains(2) {
                // complete pair decomposition always works when 2 is allowed
                let blocks = (0..v)
                    .flat_map(|i| (i + 1..v).map(move |j| vec![i, j]))
                    .collect();
                let d = Design::new(DesignKind::Pbd { v }, 1, ks.clone(), blocks, None)?;
                return Ok(Some(self.certified(d, "all pairs")?));
            }
        }
        Ok(None)
    }

    fn try_search(&self, req: &IngredientRequest) -> Result<Option<SearchOutcome>> {
        let v = req.n_points();
        if v > self.point_cap {
            return Ok(None);
        }
        // lambda-fold search is out of scope for the searcher
        if matches!(req.shape, RequestShape::PbdLambda { .. }) {
            return Ok(None);
        }
        let mut problem = SearchProblem::new(req.design_kind(), req.sizeset()?);
        problem.require_resolution = req.resolvable;
        problem.node_budget = self.node_budget;
        problem.time_budget = self.time_budget;
        problem.point_cap = self.point_cap;
        problem.workers = self.workers;
        Ok(Some(search(&problem)?))
    }

    fn try_recipes(&self, req: &IngredientRequest, depth: usize) -> Result<Option<Design>> {
        let ks = req.sizeset()?;
        match &req.shape {
            RequestShape::Ipbd { v, w } if *w >= 2 => {
                // projective extension of a resolvable design with w classes:
                // for k in K with (v-w-1) = (k-2)w, extend a resolvable
                // PBD(v-w, {k-1}) by one new point per class
                for k in ks.sizes() {
                    if k < 3 {
                        continue;
                    }
                    let n = v - w;
                    if n >= 2 && (n - 1) == (k - 2) * w {
                        let base = IngredientRequest::new(
                            RequestShape::Pbd { v: n },
                            &BlockSizeSet::new([k - 1])?,
                        )
                        .resolvable();
                        if let Ok(b) = self.resolve_depth(&base, depth) {
                            if let Ok(d) = super::projective_extend(&b) {
                                if d.blocks.iter().all(|b| ks.contains(b.len())) {
                                    let d = Design::new(d.kind, 1, ks.clone(), d.blocks, None)?;
                                    return Ok(Some(self.certified(d, "projective extension")?));
                                }
                            }
                        }
                    }
                }
                Ok(None)
            }
            _ => Ok(None),
        }
    }
}
