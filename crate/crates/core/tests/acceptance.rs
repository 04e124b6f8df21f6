//! Acceptance suite: exact small-instance checks for every concrete datum
//! the engine is expected to reproduce, one pass/fail line per criterion.
//!
//! Run with `cargo test --test acceptance` (add `-- --nocapture` to see the
//! pass lines).

#![allow(clippy::type_complexity)]

use std::collections::BTreeSet;

use ipbd_core::arith::{
    admissible_ipbd, alpha_star, crt_plan, derive_params, johnson_bound, mod_inverse,
    realizable_hole_sums, residues_admissible,
};
use ipbd_core::compose::{
    construct_ipbd, igdd_fill, igdd_fill_gdd, inflate, projective_extend, IngredientRequest,
    RequestShape, Resolver,
};
use ipbd_core::derived::{
    imols_from_ipbd, packing_from_template, HoleFiller, PackingRecipe, PackingTemplate,
};
use ipbd_core::gen::{self, search, tabulated, CatalogObject, SearchOutcome, SearchProblem};
use ipbd_core::model::{BlockSizeSet, Design, DesignKind, LatinSquareSet};
use ipbd_core::verify::{
    extremal_hole_property, packing_stats, verify_design, verify_latin, verify_orthogonal,
    verify_resolution,
};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn sizes(list: &[usize]) -> BlockSizeSet {
    BlockSizeSet::new(list.iter().copied()).unwrap()
}

fn pass(n: usize, what: &str) {
    println!("acceptance criterion {n}: PASS - {what}");
}

// ---------- criterion 1: admissibility arithmetic ----------

#[test]
fn criterion_1_admissibility() {
    let cases: &[(&[usize], u64, u64, u64)] = &[
        (&[3], 2, 6, 3),
        (&[4], 3, 12, 4),
        (&[3, 4, 5], 1, 2, 2),
        (&[4, 7], 3, 6, 2),
        (&[3, 5], 2, 2, 1),
    ];
    for (list, a, b, g) in cases {
        let ks = derive_params(list.iter().copied()).unwrap();
        assert_eq!(
            (ks.alpha(), ks.beta(), ks.gamma()),
            (*a, *b, *g),
            "derive_params({list:?})"
        );
    }

    // direct-arithmetic oracle for K = {3}: odd v and w, global congruence
    // mod 6, and the hole inequality v >= 2w + 1
    let k3 = sizes(&[3]);
    for v in 1u64..=100 {
        for w in 1..=v {
            let oracle =
                v % 2 == 1 && w % 2 == 1 && (v * (v - 1)) % 6 == (w * (w - 1)) % 6 && v > 2 * w;
            assert_eq!(
                admissible_ipbd(v, w, &k3).ok,
                oracle,
                "admissible_ipbd({v},{w},{{3}})"
            );
        }
    }
    pass(
        1,
        "derive_params hand values and the v >= 2w+1 oracle for K={3}, v,w <= 100",
    );
}

// ---------- criterion 2: the exception list by exhaustive search ----------

fn all_sizes_up_to(v: usize) -> BlockSizeSet {
    BlockSizeSet::new(3..=v).unwrap()
}

#[test]
fn criterion_2_exception_list() {
    let exceptions = [(7, 2), (8, 2), (9, 2), (10, 2), (11, 4), (12, 2), (13, 2)];
    for (v, w) in exceptions {
        let problem = SearchProblem::new(DesignKind::ipbd(v, w), all_sizes_up_to(v));
        match search(&problem).unwrap() {
            SearchOutcome::Nonexistent => {}
            SearchOutcome::Found(d) => {
                panic!("acceptance criterion 2: FAIL - IPBD(({v};{w})) unexpectedly found: {d:?}")
            }
            SearchOutcome::BudgetExhausted => {
                panic!("acceptance criterion 2: FAIL - budget exhausted on IPBD(({v};{w}))")
            }
        }
    }
    // neighboring admissible parameters with v >= 2w + 3 and v <= 13
    let neighbors = [
        (11, 2),
        (9, 3),
        (10, 3),
        (11, 3),
        (12, 3),
        (13, 3),
        (12, 4),
        (13, 4),
        (13, 5),
    ];
    for (v, w) in neighbors {
        assert!(v >= 2 * w + 3);
        let problem = SearchProblem::new(DesignKind::ipbd(v, w), all_sizes_up_to(v));
        match search(&problem).unwrap() {
            SearchOutcome::Found(d) => {
                let cert = verify_design(&d);
                assert!(cert.valid, "IPBD(({v};{w})): {}", cert.summary());
            }
            other => {
                panic!("acceptance criterion 2: FAIL - IPBD(({v};{w})) expected, got {other:?}")
            }
        }
    }
    pass(
        2,
        "all 7 exception pairs NONEXISTENT, neighbors with v >= 2w+3 found, no budget exhaustion",
    );
}

// ---------- criterion 3: generators ----------

#[test]
fn criterion_3_generators() {
    let fano = gen::projective_plane(2).unwrap();
    assert_eq!((fano.n_points, fano.blocks.len()), (7, 7));
    let pg3 = gen::projective_plane(3).unwrap();
    assert_eq!((pg3.n_points, pg3.blocks.len()), (13, 13));
    for q in [2, 3] {
        let plane = gen::affine_plane(q).unwrap();
        assert!(verify_design(&plane).valid);
        assert!(verify_resolution(&plane).valid);
        assert_eq!(plane.resolution.as_ref().unwrap().classes.len(), q + 1);
    }
    for v in [7, 9, 13, 15] {
        let sts = gen::steiner_triple(v).unwrap();
        assert!(verify_design(&sts).valid);
        assert_eq!(sts.blocks.len(), v * (v - 1) / 6);
    }
    for (k, q) in [(3, 3), (4, 3), (5, 4)] {
        let td = gen::transversal_design(k, q).unwrap();
        assert!(verify_design(&td).valid);
        assert_eq!(td.blocks.len(), q * q);
    }
    for q in [3, 4, 5, 7, 8, 9] {
        let set = gen::mols(q, q - 1).unwrap();
        assert_eq!(set.t(), q - 1);
        assert!(verify_latin(&set).valid);
        assert!(verify_orthogonal(&set).valid);
    }
    pass(
        3,
        "planes, triple systems, TDs and full MOLS sets all verify",
    );
}

// ---------- criterion 4: construction bookkeeping over 50 random runs ----------

#[test]
fn criterion_4_construction_bookkeeping() {
    let resolver = Resolver::new();
    let mut rng = ChaCha8Rng::seed_from_u64(20210521);
    let mut applications = 0usize;

    let gdd_type = |d: &Design| -> Vec<usize> {
        match &d.kind {
            DesignKind::Gdd { groups } => groups.iter().map(|g| g.len()).collect(),
            _ => panic!("expected a GDD"),
        }
    };

    while applications < 50 {
        match rng.gen_range(0..4) {
            0 => {
                // igdd_fill: uniform IGDD plus IPBD filler
                let pool: &[(usize, usize, usize, &[usize], usize)] = &[
                    (3, 1, 3, &[3], 1),
                    (3, 1, 3, &[3, 4, 5], 1),
                    (3, 1, 4, &[3, 4, 5], 1),
                    (3, 1, 5, &[3, 4, 5], 1),
                    (2, 0, 3, &[3], 1),
                    (2, 0, 4, &[3], 1),
                    (2, 0, 6, &[3], 1),
                    (2, 0, 7, &[3], 1),
                ];
                let (g, h, u, k, y) = pool[rng.gen_range(0..pool.len())];
                let ks = sizes(k);
                let igdd = resolver
                    .resolve(&IngredientRequest::new(RequestShape::Igdd { g, h, u }, &ks))
                    .unwrap_or_else(|e| panic!("IGDD(({g};{h})^{u}) ingredient: {e}"));
                let x = y + (g - h);
                let filler = resolver
                    .resolve(&IngredientRequest::new(
                        RequestShape::Ipbd { v: x, w: y },
                        &ks,
                    ))
                    .unwrap_or_else(|e| panic!("IPBD(({x};{y})) filler: {e}"));
                let out = igdd_fill(&igdd, &filler).unwrap();
                let (v, w) = (out.n_points, out.hole_size());
                assert_eq!(v - w, u * (x - y), "v-w = u(x-y)");
                assert_eq!(w, (u - 1) * h + y, "w = (u-1)h + y");
                assert!(verify_design(&out).valid);
            }
            1 => {
                // igdd_fill_gdd: IGDD plus GDD(alpha^x (alpha y)^1) filler
                let pool: &[(usize, usize, usize, &[usize], Vec<usize>)] = &[
                    (3, 1, 3, &[3, 4, 5], vec![1, 1, 1]),
                    (3, 1, 4, &[3, 4, 5], vec![1, 1, 1]),
                    (3, 1, 5, &[3, 4, 5], vec![1, 1, 1]),
                    (4, 0, 3, &[3], vec![2, 2, 2]),
                ];
                let (g, h, u, k, fsizes) = pool[rng.gen_range(0..pool.len())].clone();
                let ks = sizes(k);
                let alpha = ks.alpha() as usize;
                let x = fsizes.len() - 1;
                let y = fsizes.last().unwrap() / alpha;
                let igdd = resolver
                    .resolve(&IngredientRequest::new(RequestShape::Igdd { g, h, u }, &ks))
                    .unwrap_or_else(|e| panic!("IGDD(({g};{h})^{u}) ingredient: {e}"));
                let filler = resolver
                    .resolve(&IngredientRequest::new(
                        RequestShape::Gdd {
                            group_sizes: fsizes.clone(),
                        },
                        &ks,
                    ))
                    .unwrap_or_else(|e| panic!("GDD filler {fsizes:?}: {e}"));
                let out = igdd_fill_gdd(&igdd, &filler).unwrap();
                let ty = gdd_type(&out);
                let n = u * x;
                let w = h * (u - 1) + alpha * y;
                let mut expect = vec![alpha; n];
                expect.push(w);
                assert_eq!(
                    ty, expect,
                    "type alpha^n w^1 with n = ux, w = h(u-1)+alpha*y"
                );
                assert!(verify_design(&out).valid);
            }
            2 => {
                // inflate: IPBD template blown up by g
                let pool: &[(usize, usize, &[usize], usize, &[usize])] = &[
                    (7, 3, &[3], 2, &[3]),
                    (9, 3, &[3], 2, &[3]),
                    (7, 3, &[3], 3, &[3]),
                    (7, 3, &[3], 1, &[3]),
                    (13, 4, &[4], 3, &[4]),
                ];
                let (v, w, tk, g, k) = pool[rng.gen_range(0..pool.len())];
                let tks = sizes(tk);
                let ks = sizes(k);
                let template = resolver
                    .resolve(&IngredientRequest::new(RequestShape::Ipbd { v, w }, &tks))
                    .unwrap_or_else(|e| panic!("IPBD(({v};{w})) template: {e}"));
                let out = inflate(&template, g, &ks, &resolver)
                    .unwrap_or_else(|e| panic!("inflate g={g} of IPBD(({v};{w})): {e}"));
                let ty = gdd_type(&out);
                let mut expect = vec![g; v - w];
                expect.push(g * w);
                assert_eq!(ty, expect, "type g^n (gs)^1");
                assert!(verify_design(&out).valid);
            }
            _ => {
                // projective_extend over resolvable bases, some searched
                let out = match rng.gen_range(0..4) {
                    0 => {
                        let v = 2 * rng.gen_range(2..=6);
                        let base = gen::one_factorization(v).unwrap();
                        let out = projective_extend(&base).unwrap();
                        assert_eq!(out.n_points, 2 * v - 1, "r = v-1 new points");
                        assert_eq!(out.hole_size(), v - 1);
                        out
                    }
                    1 => {
                        let q = [2usize, 3][rng.gen_range(0..2)];
                        let base = gen::affine_plane(q).unwrap();
                        let out = projective_extend(&base).unwrap();
                        assert_eq!(out.n_points, q * q + q + 1);
                        assert_eq!(out.hole_size(), q + 1);
                        out
                    }
                    2 => {
                        let mut problem = SearchProblem::new(DesignKind::Pbd { v: 9 }, sizes(&[3]));
                        problem.require_resolution = true;
                        let base = match search(&problem).unwrap() {
                            SearchOutcome::Found(d) => d,
                            other => panic!("resolvable PBD(9,{{3}}): {other:?}"),
                        };
                        let r = base.resolution.as_ref().unwrap().classes.len();
                        let out = projective_extend(&base).unwrap();
                        assert_eq!(out.n_points, 9 + r);
                        out
                    }
                    _ => {
                        let mut problem =
                            SearchProblem::new(DesignKind::gdd_of_sizes(&[2, 2, 2]), sizes(&[2]));
                        problem.require_resolution = true;
                        let base = match search(&problem).unwrap() {
                            SearchOutcome::Found(d) => d,
                            other => panic!("resolvable GDD(2^3,{{2}}): {other:?}"),
                        };
                        let r = base.resolution.as_ref().unwrap().classes.len();
                        let before = base.blocks.iter().map(|b| b.len()).sum::<usize>();
                        let out = projective_extend(&base).unwrap();
                        let after = out.blocks.iter().map(|b| b.len()).sum::<usize>();
                        assert_eq!(after - before, out.blocks.len(), "every block grew by one");
                        assert_eq!(out.n_points, 6 + r);
                        out
                    }
                };
                assert!(verify_design(&out).valid);
            }
        }
        applications += 1;
    }
    pass(
        4,
        "50 randomized operator applications satisfy the parameter equations and verify",
    );
}

// ---------- criterion 5: the equality case of the hole bound ----------

#[test]
fn criterion_5_equality_case() {
    let ag3 = gen::affine_plane(3).unwrap();
    let out = projective_extend(&ag3).unwrap();
    assert_eq!((out.n_points, out.hole_size()), (13, 4));
    assert_eq!(out.block_sizes.to_vec(), vec![4]);
    assert!(
        out.blocks.iter().all(|b| b.len() == 4),
        "every block has size 4"
    );
    let hole: BTreeSet<usize> = (9..13).collect();
    assert!(
        out.blocks
            .iter()
            .all(|b| b.iter().any(|p| hole.contains(p))),
        "every block meets the hole"
    );
    assert!(extremal_hole_property(&out));
    assert!(verify_design(&out).valid);
    // 13 = (4-1)*4 + 1: the bound holds with equality
    assert_eq!(13, 3 * 4 + 1);
    pass(
        5,
        "projective extension of AG(2,3) attains v = (k-1)w+1 with every block meeting the hole",
    );
}

// ---------- criterion 6: alpha* and hole-sum arithmetic ----------

/// Brute-force small-a lattice scan: is a(1, n/2m) an integral combination
/// of the grouped degree vectors? Degrees are grouped by value (at most
/// three distinct values for clique unions on <= 12 vertices).
fn representable(a: u64, values: &[i64], n: i64, two_m: i64) -> bool {
    if (a as i64 * n) % two_m != 0 {
        return false;
    }
    let t = a as i64 * n / two_m;
    let a = a as i64;
    match values.len() {
        1 => a == t * values[0],
        2 => {
            let d = values[0] - values[1];
            let rhs = a - t * values[1];
            d != 0 && rhs % d == 0
        }
        3 => {
            let bound = 600i64;
            for x1 in -bound..=bound {
                let d = values[1] - values[2];
                let rhs = a - t * values[2] - x1 * (values[0] - values[2]);
                if d != 0 && rhs % d == 0 {
                    return true;
                }
            }
            false
        }
        _ => unreachable!("clique unions on <= 12 vertices have <= 3 distinct degrees"),
    }
}

fn partitions_into_parts_ge2(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (2..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_6_alpha_star_and_hole_sums() {
    for n in 2..=12 {
        for parts in partitions_into_parts_ge2(n) {
            let mut degrees = Vec::new();
            let mut m = 0u64;
            for &c in &parts {
                degrees.extend(std::iter::repeat_n((c - 1) as u64, c));
                m += (c * (c - 1) / 2) as u64;
            }
            let a_star = alpha_star(&degrees, m).unwrap();
            let values: Vec<i64> = {
                let mut v: Vec<i64> = parts.iter().map(|&c| (c - 1) as i64).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            assert!(
                representable(a_star, &values, n as i64, 2 * m as i64),
                "alpha* = {a_star} must be representable for parts {parts:?}"
            );
            for a in 1..a_star {
                assert!(
                    !representable(a, &values, n as i64, 2 * m as i64),
                    "a = {a} < alpha* = {a_star} representable for parts {parts:?}"
                );
            }
        }
    }

    // hole sums against exhaustive enumeration
    for a in 1..=8u64 {
        for gamma in 1..=4 {
            for x_star in 1..=12 {
                let mut brute = BTreeSet::new();
                for c1 in 0..=a {
                    for c2 in 0..=(a - c1) {
                        let c3 = a - c1 - c2;
                        brute.insert(c1 + c2 * (1 + gamma) + c3 * x_star);
                    }
                }
                assert_eq!(
                    realizable_hole_sums(a, gamma, x_star),
                    brute,
                    "A={a} gamma={gamma} x*={x_star}"
                );
            }
        }
    }
    pass(
        6,
        "alpha* matches the brute-force lattice scan; hole sums match enumeration",
    );
}

// ---------- criterion 7: the congruence planner ----------

#[test]
fn criterion_7_crt_planner() {
    let prime_powers = |mut m: u64| -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= m {
            if m.is_multiple_of(p) {
                let mut q = 1;
                while m.is_multiple_of(p) {
                    m /= p;
                    q *= p;
                }
                out.push((p, q));
            }
            p += 1;
        }
        if m > 1 {
            out.push((m, m));
        }
        out
    };

    for (alpha, gamma) in [(2u64, 3u64), (3, 2)] {
        for m1 in [6u64, 12] {
            for n0 in 0..m1 {
                for s0 in 0..m1 {
                    let admissible = residues_admissible(n0, s0, alpha, gamma);
                    let plan = crt_plan(n0, s0, m1, alpha, gamma);
                    if !admissible {
                        assert!(plan.is_err(), "inadmissible ({n0},{s0}) must be rejected");
                        continue;
                    }
                    let plan = plan.unwrap_or_else(|e| {
                        panic!("plan for ({n0},{s0}) mod {m1}, alpha={alpha}: {e}")
                    });
                    plan.verify().unwrap();
                    // exhaustive residue cross-check per prime power
                    for (p, q) in prime_powers(m1) {
                        if p == 2 {
                            let inv = mod_inverse(1 - 2 * s0 as i128, q).unwrap();
                            assert_eq!(plan.u % q, (n0 % q) * inv % q, "u mod {q}");
                            assert_eq!(plan.h % q, 0, "h mod {q}");
                        } else {
                            let inv2 = mod_inverse(2, q).unwrap();
                            assert_eq!(plan.u % q, inv2, "u = 1/2 mod {q}");
                            let expect = (alpha as i128 * (1 - 2 * s0 as i128 - 2 * n0 as i128))
                                .rem_euclid(q as i128)
                                as u64;
                            assert_eq!(plan.h % q, expect, "h mod {q}");
                        }
                    }
                    // the planner congruence, by direct arithmetic mod gamma
                    let lhs = (alpha as i128 * n0 as i128
                        - alpha as i128 * plan.u as i128 * (1 - 2 * s0 as i128))
                        .rem_euclid(gamma as i128);
                    let rhs = (2 * plan.u as i128 * (plan.u as i128 - 1) * plan.h as i128)
                        .rem_euclid(gamma as i128);
                    assert_eq!(lhs, rhs, "planner congruence for ({n0},{s0})");
                }
            }
        }
    }
    pass(
        7,
        "all admissible residue pairs mod 6 and 12 plan correctly for K={3} and K={4,7}",
    );
}

// ---------- criterion 8: applications ----------

fn is_four_cycle(edges: &[(usize, usize)]) -> bool {
    if edges.len() != 4 {
        return false;
    }
    let verts: BTreeSet<usize> = edges.iter().flat_map(|&(x, y)| [x, y]).collect();
    if verts.len() != 4 {
        return false;
    }
    verts
        .iter()
        .all(|&v| edges.iter().filter(|&&(x, y)| x == v || y == v).count() == 2)
}

#[test]
fn criterion_8_applications() {
    let resolver = Resolver::new();

    // (11,3,1)-packing via IPBD((11;5),{3}) and the two-triangle packing
    let recipe = PackingRecipe {
        v: 11,
        k: 3,
        template: PackingTemplate::Ipbd { v: 11, w: 5 },
        hole_filler: HoleFiller::Catalog("packing(5,3,1)".into()),
        fill_groups: false,
    };
    let (d, stats) = packing_from_template(&recipe, &resolver).unwrap();
    assert!(verify_design(&d).valid);
    assert_eq!(johnson_bound(11, 3), 18);
    assert_eq!(stats.b, 17);
    assert_eq!(stats.deficiency, 1);
    assert!(
        is_four_cycle(&stats.leave),
        "leave must be a 4-cycle: {:?}",
        stats.leave
    );

    // the (5,3,1) two-triangle datum
    match tabulated("packing(5,3,1)").unwrap() {
        CatalogObject::Design(d) => {
            let stats = packing_stats(&d).unwrap();
            assert_eq!(stats.b, 2);
            assert!(is_four_cycle(&stats.leave));
        }
        _ => panic!("expected a design"),
    }

    // 2-IMOLS(13;4) from the IPBD((13;4),{4}) template
    let report = construct_ipbd(13, 4, &sizes(&[4]), &resolver).unwrap();
    let template = report.design.expect("IPBD((13;4),{4}) constructible");
    let set = imols_from_ipbd(&template, 2).unwrap();
    assert_eq!((set.n, set.m(), set.t()), (13, 4, 2));
    assert!(verify_latin(&set).valid);
    assert!(verify_orthogonal(&set).valid);

    // the 5x5 side, hole-2 incomplete latin square (cells 0-based)
    let rows: [[i32; 5]; 5] = [
        [-1, -1, 2, 3, 4],
        [-1, -1, 3, 4, 2],
        [2, 3, 4, 1, 0],
        [3, 4, 0, 2, 1],
        [4, 2, 1, 0, 3],
    ];
    let square: Vec<Option<usize>> = rows
        .iter()
        .flat_map(|r| {
            r.iter()
                .map(|&c| if c < 0 { None } else { Some(c as usize) })
        })
        .collect();
    let ils = LatinSquareSet::new(5, vec![0, 1], vec![square]).unwrap();
    let cert = verify_latin(&ils);
    assert!(cert.valid, "{}", cert.summary());

    // a column repeat is caught
    let mut bad = ils.clone();
    bad.squares[0][2 * 5 + 2] = Some(1);
    assert!(!verify_latin(&bad).valid);

    pass(8, "packing data (b=17, e=1, C4 leave; b=2, C4 leave), 2-IMOLS(13;4), and the 5x5 hole-2 square verify");
}

// ---------- criterion 9: oracle independence ----------

/// A second, naive implementation of the design axioms: a per-pair loop
/// over the block list, with the required/forbidden classification derived
/// directly from the kind's point sets. Kept free of CoverageMatrix and
/// PointStructure on purpose.
fn naive_valid(design: &Design) -> bool {
    let v = design.n_points;
    for b in &design.blocks {
        if !design.block_sizes.contains(b.len()) {
            return false;
        }
        if b.iter().any(|&p| p >= v) {
            return false;
        }
        let set: BTreeSet<usize> = b.iter().copied().collect();
        if set.len() != b.len() {
            return false;
        }
    }
    let lambda = design.lambda;
    for x in 0..v {
        for y in x + 1..v {
            let count = design
                .blocks
                .iter()
                .filter(|b| b.contains(&x) && b.contains(&y))
                .count() as u32;
            let ok = match &design.kind {
                DesignKind::Pbd { .. } => count == lambda,
                DesignKind::Ipbd { hole, .. } => {
                    if hole.contains(&x) && hole.contains(&y) {
                        count == 0
                    } else {
                        count == lambda
                    }
                }
                DesignKind::Gdd { groups } => {
                    let same = groups.iter().any(|g| g.contains(&x) && g.contains(&y));
                    if same {
                        count == 0
                    } else {
                        count == lambda
                    }
                }
                DesignKind::Igdd { groups, holes } => {
                    let same = groups.iter().any(|g| g.contains(&x) && g.contains(&y));
                    let hx = holes.iter().position(|h| h.contains(&x));
                    let hy = holes.iter().position(|h| h.contains(&y));
                    let bihole = matches!((hx, hy), (Some(a), Some(b)) if a != b);
                    if same || bihole {
                        count == 0
                    } else {
                        count == lambda
                    }
                }
                DesignKind::Hgdd { u: _, h, m } => {
                    let (gx, gy) = (x / (h * m), y / (h * m));
                    let (hx, hy) = ((x % (h * m)) / h, (y % (h * m)) / h);
                    if gx == gy || hx == hy {
                        count == 0
                    } else {
                        count == lambda
                    }
                }
                DesignKind::Td { k: _, n } => {
                    if x / n == y / n {
                        count == 0
                    } else {
                        count == lambda
                    }
                }
                DesignKind::Packing { .. } => count <= lambda,
                DesignKind::Covering { .. } => count >= lambda,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

#[test]
fn criterion_9_oracle_independence() {
    let mut rng = ChaCha8Rng::seed_from_u64(411);
    let mut pool: Vec<Design> = Vec::new();
    for v in [7, 9, 13, 15] {
        pool.push(gen::steiner_triple(v).unwrap());
    }
    for q in [2, 3, 4] {
        pool.push(gen::affine_plane(q).unwrap());
    }
    pool.push(gen::projective_plane(2).unwrap());
    pool.push(gen::projective_plane(3).unwrap());
    for (k, q) in [(3, 3), (4, 3), (2, 5), (5, 4)] {
        pool.push(gen::transversal_design(k, q).unwrap());
    }
    for v in [4, 6, 8, 10, 12] {
        pool.push(gen::one_factorization(v).unwrap());
    }
    for u in [4, 6, 7, 9] {
        pool.push(gen::gdd_2u_from_triple_system(u).unwrap());
    }
    pool.push(gen::gdd_n3_from_latin(4).unwrap());
    for key in [
        "packing(5,3,1)",
        "covering(4,3,1)",
        "covering(6,3,1)",
        "covering(8,3,1)",
    ] {
        match tabulated(key).unwrap() {
            CatalogObject::Design(d) => pool.push(d),
            _ => unreachable!(),
        }
    }
    match search(&SearchProblem::new(DesignKind::ipbd(7, 3), sizes(&[3]))).unwrap() {
        SearchOutcome::Found(d) => pool.push(d),
        other => panic!("IPBD((7;3)): {other:?}"),
    }
    match search(&SearchProblem::new(
        DesignKind::igdd_uniform(3, 1, 3),
        sizes(&[3]),
    ))
    .unwrap()
    {
        SearchOutcome::Found(d) => pool.push(d),
        other => panic!("IGDD((3;1)^3): {other:?}"),
    }
    assert!(pool.iter().all(|d| d.n_points <= 20));

    let mut checked = 0;
    let mut valid_seen = 0;
    let mut invalid_seen = 0;
    while checked < 200 {
        let mut d = pool[rng.gen_range(0..pool.len())].clone();
        d.resolution = None;
        // half the time, mutate the block list
        if rng.gen_bool(0.5) && !d.blocks.is_empty() {
            match rng.gen_range(0..3) {
                0 => {
                    let i = rng.gen_range(0..d.blocks.len());
                    d.blocks.remove(i);
                }
                1 => {
                    let i = rng.gen_range(0..d.blocks.len());
                    let b = d.blocks[i].clone();
                    d.blocks.push(b);
                }
                _ => {
                    let i = rng.gen_range(0..d.blocks.len());
                    let j = rng.gen_range(0..d.blocks[i].len());
                    let p = rng.gen_range(0..d.n_points);
                    if !d.blocks[i].contains(&p) {
                        d.blocks[i][j] = p;
                        d.blocks[i].sort_unstable();
                    }
                }
            }
        }
        let fast = verify_design(&d).valid;
        let slow = naive_valid(&d);
        assert_eq!(fast, slow, "verdicts differ on {:?}", d.kind);
        if fast {
            valid_seen += 1;
        } else {
            invalid_seen += 1;
        }
        checked += 1;
    }
    assert!(
        valid_seen >= 30,
        "want a healthy mix, got {valid_seen} valid"
    );
    assert!(
        invalid_seen >= 30,
        "want a healthy mix, got {invalid_seen} invalid"
    );
    pass(
        9,
        "verify_design agrees with the naive per-pair oracle on 200 randomized designs",
    );
}
