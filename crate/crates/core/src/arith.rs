//! Number-theoretic admissibility predicates and the congruence machinery:
//! divisibility checks for PBDs, IPBDs, GDDs, IGDDs and resolvable GDDs,
//! the alpha* lattice computation for resolvable graph decompositions, the
//! congruence-class planner, hole-sum arithmetic, and the Johnson bound.
//!
//! All arithmetic is exact over machine integers (i128 internally);
//! instances are desk scale by design.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::BlockSizeSet;

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Extended gcd: returns (d, x, y) with a*x + b*y = d = gcd(a, b).
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (d, x, y) = egcd(b, a % b);
        (d, y, x - (a / b) * y)
    }
}

/// Inverse of a modulo m, when it exists.
pub fn mod_inverse(a: i128, m: u64) -> Option<u64> {
    let m = m as i128;
    let (d, x, _) = egcd(a.rem_euclid(m), m);
    if d != 1 {
        None
    } else {
        Some(x.rem_euclid(m) as u64)
    }
}

fn umod(a: i128, m: u64) -> u64 {
    a.rem_euclid(m as i128) as u64
}

/// Derive a `BlockSizeSet` (alpha, beta, gamma, min) from raw sizes.
pub fn derive_params<I: IntoIterator<Item = usize>>(sizes: I) -> Result<BlockSizeSet> {
    BlockSizeSet::new(sizes)
}

/// Outcome of an admissibility check, with the failed conditions spelled
/// out so the CLI can explain a negative verdict.
#[derive(Debug, Clone)]
pub struct Admissibility {
    pub ok: bool,
    pub failures: Vec<String>,
}

impl Admissibility {
    fn from_failures(failures: Vec<String>) -> Self {
        Admissibility {
            ok: failures.is_empty(),
            failures,
        }
    }

    pub fn reason(&self) -> String {
        if self.ok {
            "all conditions hold".to_string()
        } else {
            self.failures.join("; ")
        }
    }
}

macro_rules! check {
    ($fails:ident, $cond:expr, $($msg:tt)*) => {
        if !($cond) {
            $fails.push(format!($($msg)*));
        }
    };
}

/// Divisibility conditions for a PBD(v, K):
/// v-1 = 0 (mod alpha) and v(v-1) = 0 (mod beta).
pub fn admissible_pbd(v: u64, k: &BlockSizeSet) -> Admissibility {
    let mut fails = Vec::new();
    check!(
        fails,
        (v - 1).is_multiple_of(k.alpha()),
        "v-1 = {} not divisible by alpha = {}",
        v - 1,
        k.alpha()
    );
    check!(
        fails,
        (v * (v - 1)).is_multiple_of(k.beta()),
        "v(v-1) = {} not divisible by beta = {}",
        v * (v - 1),
        k.beta()
    );
    Admissibility::from_failures(fails)
}

/// Divisibility and hole-size conditions for an IPBD((v;w), K):
/// v-1 = w-1 = 0 (mod alpha), v(v-1)-w(w-1) = 0 (mod beta), and
/// v >= (k-1)w + 1 for k = min K. A hole of size 1 contains no pairs, so
/// w = 1 imposes nothing beyond v >= k; w = v is always rejected by the
/// inequality.
pub fn admissible_ipbd(v: u64, w: u64, k: &BlockSizeSet) -> Admissibility {
    let mut fails = Vec::new();
    let (a, b) = (k.alpha(), k.beta());
    check!(
        fails,
        (v - 1).is_multiple_of(a),
        "v-1 = {} not divisible by alpha = {a}",
        v - 1
    );
    check!(
        fails,
        (w - 1).is_multiple_of(a),
        "w-1 = {} not divisible by alpha = {a}",
        w - 1
    );
    check!(
        fails,
        (v * (v - 1)) % b == (w * (w - 1)) % b,
        "v(v-1)-w(w-1) = {} not divisible by beta = {b}",
        v as i128 * (v as i128 - 1) - w as i128 * (w as i128 - 1)
    );
    let km = k.k_min() as u64;
    check!(
        fails,
        v > (km - 1) * w,
        "v = {v} < (k-1)w+1 = {}",
        (km - 1) * w + 1
    );
    Admissibility::from_failures(fails)
}

/// Index-lambda variant: lambda(v-1) = lambda(w-1) = 0 (mod alpha) and
/// lambda(v(v-1) - w(w-1)) = 0 (mod beta). lambda = 0 is vacuously true.
pub fn admissible_ipbd_lambda(v: u64, w: u64, k: &BlockSizeSet, lambda: u64) -> Admissibility {
    if lambda == 0 {
        return Admissibility::from_failures(Vec::new());
    }
    let mut fails = Vec::new();
    let (a, b) = (k.alpha(), k.beta());
    check!(
        fails,
        (lambda * (v - 1)).is_multiple_of(a),
        "lambda(v-1) = {} not divisible by alpha = {a}",
        lambda * (v - 1)
    );
    check!(
        fails,
        (lambda * (w - 1)).is_multiple_of(a),
        "lambda(w-1) = {} not divisible by alpha = {a}",
        lambda * (w - 1)
    );
    let diff = lambda as i128 * (v as i128 * (v as i128 - 1) - w as i128 * (w as i128 - 1));
    check!(
        fails,
        diff.rem_euclid(b as i128) == 0,
        "lambda(v(v-1)-w(w-1)) = {diff} not divisible by beta = {b}"
    );
    Admissibility::from_failures(fails)
}

/// Conditions for a uniform GDD(g^u, K):
/// g(u-1) = 0 (mod alpha) and g^2 u(u-1) = 0 (mod beta).
pub fn admissible_gdd_uniform(g: u64, u: u64, k: &BlockSizeSet) -> Admissibility {
    let mut fails = Vec::new();
    check!(
        fails,
        (g * (u - 1)).is_multiple_of(k.alpha()),
        "g(u-1) = {} not divisible by alpha = {}",
        g * (u - 1),
        k.alpha()
    );
    check!(
        fails,
        ((g * g % k.beta()) * (u % k.beta()) * ((u - 1) % k.beta())).is_multiple_of(k.beta()),
        "g^2 u(u-1) not divisible by beta = {}",
        k.beta()
    );
    Admissibility::from_failures(fails)
}

/// Conditions for a GDD(g^n h^1, K): gn = 0 (mod alpha), h - g = 0 (mod
/// alpha), gn(g(n-1) + 2h) = 0 (mod beta), and g(n-1) >= (k-2)h.
pub fn admissible_gdd_gnh1(g: u64, n: u64, h: u64, k: &BlockSizeSet) -> Admissibility {
    let mut fails = Vec::new();
    let (a, b) = (k.alpha(), k.beta());
    check!(
        fails,
        (g * n).is_multiple_of(a),
        "gn = {} not divisible by alpha = {a}",
        g * n
    );
    check!(
        fails,
        (h as i128 - g as i128).rem_euclid(a as i128) == 0,
        "h-g = {} not divisible by alpha = {a}",
        h as i128 - g as i128
    );
    let global = (g as i128 * n as i128) * (g as i128 * (n as i128 - 1) + 2 * h as i128);
    check!(
        fails,
        global.rem_euclid(b as i128) == 0,
        "gn(g(n-1)+2h) = {global} not divisible by beta = {b}"
    );
    let km = k.k_min() as i128;
    check!(
        fails,
        g as i128 * (n as i128 - 1) >= (km - 2) * h as i128,
        "g(n-1) = {} < (k-2)h = {}",
        g as i128 * (n as i128 - 1),
        (km - 2) * h as i128
    );
    Admissibility::from_failures(fails)
}

/// Conditions for a uniform IGDD((g;h)^u, K): g(u-1) = h(u-1) = 0 (mod
/// alpha), (g^2 - h^2) u(u-1) = 0 (mod beta), and g >= (k-1)h.
pub fn admissible_igdd(g: u64, h: u64, u: u64, k: &BlockSizeSet) -> Admissibility {
    let mut fails = Vec::new();
    let (a, b) = (k.alpha(), k.beta());
    check!(
        fails,
        (g * (u - 1)).is_multiple_of(a),
        "g(u-1) = {} not divisible by alpha = {a}",
        g * (u - 1)
    );
    check!(
        fails,
        (h * (u - 1)).is_multiple_of(a),
        "h(u-1) = {} not divisible by alpha = {a}",
        h * (u - 1)
    );
    let global = (g as i128 * g as i128 - h as i128 * h as i128) * u as i128 * (u as i128 - 1);
    check!(
        fails,
        global.rem_euclid(b as i128) == 0,
        "(g^2-h^2)u(u-1) = {global} not divisible by beta = {b}"
    );
    let km = k.k_min() as u64;
    check!(
        fails,
        g >= (km - 1) * h,
        "g = {g} < (k-1)h = {}",
        (km - 1) * h
    );
    Admissibility::from_failures(fails)
}

/// Conditions for a resolvable GDD(g^u, {k}): gu = 0 (mod k) and
/// g(u-1) = 0 (mod k-1).
pub fn admissible_rgdd(g: u64, u: u64, block: u64) -> Admissibility {
    let mut fails = Vec::new();
    check!(
        fails,
        (g * u).is_multiple_of(block),
        "gu = {} not divisible by k = {block}",
        g * u
    );
    check!(
        fails,
        (g * (u - 1)).is_multiple_of(block - 1),
        "g(u-1) = {} not divisible by k-1 = {}",
        g * (u - 1),
        block - 1
    );
    Admissibility::from_failures(fails)
}

/// Degree profile of a graph, with the least positive integer a for which
/// a(1, n/2m) lies in the integer span of the vectors (d_i, 1).
#[derive(Debug, Clone)]
pub struct GraphProfile {
    pub n_vertices: usize,
    pub n_edges: u64,
    pub degrees: Vec<u64>,
    pub alpha_star: u64,
}

impl GraphProfile {
    pub fn new(degrees: Vec<u64>) -> Result<Self> {
        let total: u64 = degrees.iter().sum();
        if !total.is_multiple_of(2) {
            return Err(Error::Structure("degree sum must be even".into()));
        }
        let m = total / 2;
        let a = alpha_star(&degrees, m)?;
        Ok(GraphProfile {
            n_vertices: degrees.len(),
            n_edges: m,
            degrees,
            alpha_star: a,
        })
    }
}

/// Exact computation of alpha*: clear denominators by 2m (a must be a
/// multiple of 2m / gcd(n, 2m) for integrality), then solve the two-row
/// integer lattice membership problem by gcd elimination. The span of
/// {(d_i, 1)} is Z*(D, 0) + Z*(d_0, 1) with D = gcd of degree differences.
pub fn alpha_star(degrees: &[u64], m: u64) -> Result<u64> {
    if m == 0 || degrees.is_empty() {
        return Err(Error::Structure("graph must have edges".into()));
    }
    let total: u64 = degrees.iter().sum();
    if total != 2 * m {
        return Err(Error::Structure(format!(
            "inconsistent degree sum: {total} != 2m = {}",
            2 * m
        )));
    }
    let n = degrees.len() as u64;
    let two_m = 2 * m;
    let g0 = gcd(n, two_m);
    let np = (n / g0) as i128;
    let mp = (two_m / g0) as i128;
    let d0 = degrees[0] as i128;
    let dd = degrees
        .iter()
        .fold(0u64, |g, &d| gcd(g, (d as i128 - d0).unsigned_abs() as u64));
    if dd == 0 {
        // regular graph: (mp*b, np*b) = np*b * (d, 1) works for every b
        Ok(mp as u64)
    } else {
        // need dd | b*(mp - np*d0)
        let r = (mp - np * d0).unsigned_abs() as u64;
        let b = dd / gcd(dd, r);
        Ok(mp as u64 * b)
    }
}

/// A residue plan for a GDD of type alpha^n (alpha*s)^1 hitting congruence
/// classes (n0, s0) modulo M1, produced by the parameter table: u = 1/2 and
/// h = alpha(1 - 2 s0 - 2 n0) modulo odd prime powers, u = n0 (1-2 s0)^{-1}
/// and h = 0 modulo powers of two, combined by the Chinese remainder
/// theorem; then alpha*y = alpha*s0 - (u-1)h, x = 1 - 2y, g = alpha*x + h.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruencePlan {
    pub m1: u64,
    pub u: u64,
    pub h: u64,
    pub x: u64,
    pub y: u64,
    pub g: u64,
    pub n0: u64,
    pub s0: u64,
    pub alpha: u64,
    pub gamma: u64,
}

fn prime_power_factors(mut m: u64) -> Vec<(u64, u64)> {
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
}

/// Whether residues (n0, s0) mod M1 are admissible for a GDD of type
/// alpha^{n0} (alpha s0)^1: the global divisibility condition
/// alpha * n0 * (n0 - 1 + 2 s0) = 0 (mod gamma). Well defined on residues
/// because gamma divides M1.
pub fn residues_admissible(n0: u64, s0: u64, alpha: u64, gamma: u64) -> bool {
    let e = alpha as i128 * n0 as i128 * (n0 as i128 - 1 + 2 * s0 as i128);
    e.rem_euclid(gamma as i128) == 0
}

pub fn crt_plan(n0: u64, s0: u64, m1: u64, alpha: u64, gamma: u64) -> Result<CongruencePlan> {
    if m1 == 0 || gamma == 0 || !m1.is_multiple_of(gamma) {
        return Err(Error::Precondition(format!(
            "gamma = {gamma} must divide M1 = {m1}"
        )));
    }
    let n0 = n0 % m1;
    let s0 = s0 % m1;
    if !residues_admissible(n0, s0, alpha, gamma) {
        return Err(Error::Inadmissible(format!(
            "residues (n0, s0) = ({n0}, {s0}) fail alpha*n0*(n0-1+2*s0) = 0 (mod {gamma})"
        )));
    }

    // residues of (u, h, y) modulo each prime power, then CRT
    let mut u_parts = Vec::new();
    let mut h_parts = Vec::new();
    let mut y_parts = Vec::new();
    for (p, q) in prime_power_factors(m1) {
        if p == 2 {
            let inv = mod_inverse(1 - 2 * s0 as i128, q).ok_or(Error::PlanInfeasible {
                modulus: q,
                detail: format!("1-2*s0 = {} has no inverse", 1 - 2 * s0 as i128),
            })?;
            u_parts.push((umod(n0 as i128 * inv as i128, q), q));
            h_parts.push((0, q));
            y_parts.push((s0 % q, q));
        } else {
            let inv2 = mod_inverse(2, q).ok_or(Error::PlanInfeasible {
                modulus: q,
                detail: "2 has no inverse".into(),
            })?;
            u_parts.push((inv2, q));
            h_parts.push((
                umod(alpha as i128 * (1 - 2 * s0 as i128 - 2 * n0 as i128), q),
                q,
            ));
            y_parts.push((umod(inv2 as i128 * (1 - 2 * n0 as i128), q), q));
        }
    }
    let u = crt_combine(&u_parts)?;
    let h = crt_combine(&h_parts)?;
    let y = crt_combine(&y_parts)?;
    let x = umod(1 - 2 * y as i128, m1);
    let g = umod(alpha as i128 * x as i128 + h as i128, m1);

    let plan = CongruencePlan {
        m1,
        u,
        h,
        x,
        y,
        g,
        n0,
        s0,
        alpha,
        gamma,
    };
    plan.verify()?;
    Ok(plan)
}

/// Combine pairwise-coprime residue constraints (r_i mod q_i).
fn crt_combine(parts: &[(u64, u64)]) -> Result<u64> {
    let mut r: i128 = 0;
    let mut m: i128 = 1;
    for &(ri, qi) in parts {
        let (d, a, _) = egcd(m, qi as i128);
        debug_assert_eq!(d, 1);
        let diff = (ri as i128 - r).rem_euclid(qi as i128);
        r += m * ((a * diff).rem_euclid(qi as i128));
        m *= qi as i128;
        r = r.rem_euclid(m);
    }
    Ok(r as u64)
}

impl CongruencePlan {
    /// Check the parameter-table identities modulo M1 and the planner
    /// congruence alpha*n0 - alpha*u(1-2*s0) = 2u(u-1)h modulo gamma.
    pub fn verify(&self) -> Result<()> {
        let m = self.m1;
        let (a, u, h, x, y, g) = (
            self.alpha as i128,
            self.u as i128,
            self.h as i128,
            self.x as i128,
            self.y as i128,
            self.g as i128,
        );
        if umod(a * y, m) != umod(a * self.s0 as i128 - (u - 1) * h, m) {
            return Err(Error::PlanInfeasible {
                modulus: m,
                detail: "alpha*y != alpha*s0 - (u-1)h".into(),
            });
        }
        if umod(x, m) != umod(1 - 2 * y, m) || umod(g, m) != umod(a * x + h, m) {
            return Err(Error::PlanInfeasible {
                modulus: m,
                detail: "x/g identities fail".into(),
            });
        }
        let lhs = a * self.n0 as i128 - a * u * (1 - 2 * self.s0 as i128);
        let rhs = 2 * u * (u - 1) * h;
        if umod(lhs, self.gamma) != umod(rhs, self.gamma) {
            return Err(Error::PlanInfeasible {
                modulus: self.gamma,
                detail: "alpha*n0 - alpha*u(1-2s0) != 2u(u-1)h (mod gamma)".into(),
            });
        }
        Ok(())
    }
}

/// The hole-size arithmetic for the truncated-transversal-design weighting:
/// which totals are sums of exactly `a` terms from {1, 1+gamma, x_star}.
#[derive(Debug, Clone, Copy)]
pub struct HoleSumProblem {
    pub a: u64,
    pub gamma: u64,
    pub x_star: u64,
}

impl HoleSumProblem {
    /// The arithmetic progression of sums using exactly a-i terms equal to
    /// x_star: {i + (a-i) x_star + gamma*j : 0 <= j <= i}.
    pub fn progression(&self, i: u64) -> impl Iterator<Item = u64> + '_ {
        let base = i + (self.a - i) * self.x_star;
        (0..=i).map(move |j| base + self.gamma * j)
    }

    /// Exact set of achievable sums (union of the progressions).
    pub fn realizable(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for i in 0..=self.a {
            out.extend(self.progression(i));
        }
        out
    }
}

/// Exact set of sums of `a` terms from {1, 1 + gamma, x_star}.
pub fn realizable_hole_sums(a: u64, gamma: u64, x_star: u64) -> BTreeSet<u64> {
    HoleSumProblem { a, gamma, x_star }.realizable()
}

/// The Johnson bound floor((v/k) floor((v-1)/(k-1))) on the number of
/// blocks of a (v,k,1)-packing.
pub fn johnson_bound(v: u64, k: u64) -> u64 {
    assert!(v >= k && k >= 2, "johnson_bound requires v >= k >= 2");
    v * ((v - 1) / (k - 1)) / k
}
