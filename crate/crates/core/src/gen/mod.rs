//! Base-design production: finite-field arithmetic, MOLS / transversal
//! design / plane / triple-system generators, the tabulated catalog of
//! small designs, and the exact-cover backtracking searcher.
//!
//! Every generator certifies its own output against the verifier before
//! returning it.

mod catalog;
mod search;
mod tables;

pub use catalog::{builtin_keys, catalog_dir, catalog_dir_entries, tabulated, CatalogObject};
pub use search::{
    search, SearchOutcome, SearchProblem, DEFAULT_NODE_BUDGET, DEFAULT_POINT_CAP,
    DEFAULT_TIME_BUDGET,
};

use crate::error::{Error, Result};
use crate::model::{BlockSizeSet, Design, DesignKind, LatinSquareSet, Resolution};
use crate::verify::{verify_design, verify_latin, verify_orthogonal, verify_resolution};

/// Arithmetic for GF(q): modular for primes, tabulated for the prime
/// powers 4, 8, 9, 16, 25, 27.
#[derive(Clone, Copy)]
pub enum PrimeField {
    Prime(u64),
    Table {
        q: usize,
        add: &'static [u8],
        mul: &'static [u8],
    },
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

macro_rules! table_field {
    ($q:expr, $add:ident, $mul:ident) => {
        PrimeField::Table {
            q: $q,
            add: &tables::$add,
            mul: &tables::$mul,
        }
    };
}

impl PrimeField {
    /// The field of order q, if q is prime or one of the tabulated prime
    /// powers.
    pub fn new(q: usize) -> Result<Self> {
        match q {
            4 => Ok(table_field!(4, ADD_4, MUL_4)),
            8 => Ok(table_field!(8, ADD_8, MUL_8)),
            9 => Ok(table_field!(9, ADD_9, MUL_9)),
            16 => Ok(table_field!(16, ADD_16, MUL_16)),
            25 => Ok(table_field!(25, ADD_25, MUL_25)),
            27 => Ok(table_field!(27, ADD_27, MUL_27)),
            q if is_prime(q as u64) => Ok(PrimeField::Prime(q as u64)),
            q => Err(Error::Unavailable(format!(
                "order {q} is neither prime nor a tabulated prime power"
            ))),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            PrimeField::Prime(q) => *q as usize,
            PrimeField::Table { q, .. } => *q,
        }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match self {
            PrimeField::Prime(q) => ((a as u64 + b as u64) % q) as usize,
            PrimeField::Table { q, add, .. } => add[a * q + b] as usize,
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            PrimeField::Prime(q) => ((a as u64 * b as u64) % q) as usize,
            PrimeField::Table { q, mul, .. } => mul[a * q + b] as usize,
        }
    }

    pub fn neg(&self, a: usize) -> usize {
        match self {
            PrimeField::Prime(q) => ((*q - a as u64) % q) as usize,
            PrimeField::Table { q, add, .. } => (0..*q).find(|&b| add[a * q + b] == 0).unwrap(),
        }
    }

    pub fn inv(&self, a: usize) -> Result<usize> {
        if a == 0 {
            return Err(Error::Precondition("0 has no inverse".into()));
        }
        match self {
            PrimeField::Prime(q) => crate::arith::mod_inverse(a as i128, *q)
                .map(|x| x as usize)
                .ok_or_else(|| Error::Precondition("no inverse".into())),
            PrimeField::Table { q, mul, .. } => Ok((0..*q)
                .find(|&b| mul[a * q + b] == 1)
                .expect("field element has an inverse")),
        }
    }
}

fn certify_design(design: Design, what: &str) -> Result<Design> {
    let cert = verify_design(&design);
    if !cert.valid {
        return Err(Error::Certification(format!("{what}: {}", cert.summary())));
    }
    if design.resolution.is_some() {
        let cert = verify_resolution(&design);
        if !cert.valid {
            return Err(Error::Certification(format!(
                "{what} resolution: {}",
                cert.summary()
            )));
        }
    }
    Ok(design)
}

fn certify_squares(set: LatinSquareSet, what: &str) -> Result<LatinSquareSet> {
    let cert = verify_latin(&set);
    if !cert.valid {
        return Err(Error::Certification(format!("{what}: {}", cert.summary())));
    }
    let cert = verify_orthogonal(&set);
    if !cert.valid {
        return Err(Error::Certification(format!("{what}: {}", cert.summary())));
    }
    Ok(set)
}

/// t mutually orthogonal latin squares of order q from the field squares
/// L_a(i,j) = a*i + j, a != 0. Requires t <= q - 1.
pub fn mols(q: usize, t: usize) -> Result<LatinSquareSet> {
    let f = PrimeField::new(q)?;
    if t == 0 || t > q - 1 {
        return Err(Error::Unavailable(format!(
            "only {} MOLS of order {q} available, requested {t}",
            q - 1
        )));
    }
    let squares = (1..=t)
        .map(|a| {
            (0..q * q)
                .map(|cell| Some(f.add(f.mul(a, cell / q), cell % q)))
                .collect()
        })
        .collect();
    certify_squares(LatinSquareSet::new(q, vec![], squares)?, "mols")
}

/// t mutually orthogonal idempotent latin squares of order q, obtained by
/// relabeling the field squares with a not in {0, -1}:
/// L(i,j) = (a+1)^{-1} (a*i + j) has L(i,i) = i. Requires t <= q - 2.
pub fn idempotent_mols(q: usize, t: usize) -> Result<LatinSquareSet> {
    let f = PrimeField::new(q)?;
    if t == 0 || t + 2 > q {
        return Err(Error::Unavailable(format!(
            "only {} idempotent MOLS of order {q} available, requested {t}",
            q.saturating_sub(2)
        )));
    }
    let minus_one = f.neg(1);
    let mut squares = Vec::with_capacity(t);
    for a in 1..q {
        if a == minus_one {
            continue;
        }
        let scale = f.inv(f.add(a, 1))?;
        squares.push(
            (0..q * q)
                .map(|cell| Some(f.mul(scale, f.add(f.mul(a, cell / q), cell % q))))
                .collect::<Vec<_>>(),
        );
        if squares.len() == t {
            break;
        }
    }
    let set = LatinSquareSet::new(q, vec![], squares)?;
    for s in 0..set.t() {
        for i in 0..q {
            if set.cell(s, i, i) != Some(i) {
                return Err(Error::Certification(format!(
                    "square {s} not idempotent at {i}"
                )));
            }
        }
    }
    certify_squares(set, "idempotent_mols")
}

/// TD(k, q): a GDD(q^k, {k}) with q^2 transversal blocks, built from k-2
/// MOLS. Point r*q + i is element i of group r. A resolution into q
/// parallel classes is attached when one extra square is available
/// (k - 1 <= q - 1).
pub fn transversal_design(k: usize, q: usize) -> Result<Design> {
    if k < 2 {
        return Err(Error::Precondition(
            "transversal designs need k >= 2".into(),
        ));
    }
    if k > 2 && !(PrimeField::new(q).is_ok() && k - 2 < q) {
        return Err(Error::Unavailable(format!(
            "not enough MOLS of order {q} for TD({k},{q})"
        )));
    }
    let f = if k > 2 || PrimeField::new(q).is_ok() {
        PrimeField::new(q).ok()
    } else {
        None
    };
    let mut blocks = Vec::with_capacity(q * q);
    for i in 0..q {
        for j in 0..q {
            let mut b = vec![i, q + j];
            for a in 1..=(k - 2) {
                let f = f.as_ref().expect("field available");
                b.push((a + 1) * q + f.add(f.mul(a, i), j));
            }
            blocks.push(b);
        }
    }
    // parallel classes from one more field square, when available
    let resolution = match &f {
        Some(f) if k - 2 < q - 1 => {
            let a = k - 1;
            let mut classes = vec![Vec::new(); q];
            for (bi, _) in blocks.iter().enumerate() {
                let (i, j) = (bi / q, bi % q);
                classes[f.add(f.mul(a, i), j)].push(bi);
            }
            Some(Resolution::full(classes))
        }
        _ if k == 2 => {
            // K_{q,q}: classes are the q perfect matchings j - i = c (mod q)
            let mut classes = vec![Vec::new(); q];
            for bi in 0..q * q {
                let (i, j) = (bi / q, bi % q);
                classes[(j + q - i) % q].push(bi);
            }
            Some(Resolution::full(classes))
        }
        _ => None,
    };
    let d = Design::new(
        DesignKind::Td { k, n: q },
        1,
        BlockSizeSet::new([k])?,
        blocks,
        resolution,
    )?;
    certify_design(d, "transversal_design")
}

/// The affine plane AG(2, q) as a resolvable PBD(q^2, {q}) with q + 1 full
/// parallel classes: the q slope classes and the vertical lines.
pub fn affine_plane(q: usize) -> Result<Design> {
    let f = PrimeField::new(q)?;
    let mut blocks = Vec::with_capacity(q * q + q);
    let mut classes = Vec::with_capacity(q + 1);
    for a in 0..q {
        let mut class = Vec::with_capacity(q);
        for b in 0..q {
            class.push(blocks.len());
            blocks.push((0..q).map(|x| x * q + f.add(f.mul(a, x), b)).collect());
        }
        classes.push(class);
    }
    let mut vertical = Vec::with_capacity(q);
    for c in 0..q {
        vertical.push(blocks.len());
        blocks.push((c * q..(c + 1) * q).collect());
    }
    classes.push(vertical);
    let d = Design::new(
        DesignKind::Pbd { v: q * q },
        1,
        BlockSizeSet::new([q])?,
        blocks,
        Some(Resolution::full(classes)),
    )?;
    certify_design(d, "affine_plane")
}

/// The projective plane PG(2, q) as a PBD(q^2 + q + 1, {q + 1}): the affine
/// plane with one ideal point per parallel class and the line at infinity.
pub fn projective_plane(q: usize) -> Result<Design> {
    let affine = affine_plane(q)?;
    let v = q * q + q + 1;
    let mut blocks = Vec::with_capacity(v);
    let res = affine
        .resolution
        .as_ref()
        .expect("affine plane is resolvable");
    for (ci, class) in res.classes.iter().enumerate() {
        for &bi in &class.blocks {
            let mut b = affine.blocks[bi].clone();
            b.push(q * q + ci);
            blocks.push(b);
        }
    }
    blocks.push((q * q..v).collect());
    let d = Design::new(
        DesignKind::Pbd { v },
        1,
        BlockSizeSet::new([q + 1])?,
        blocks,
        None,
    )?;
    certify_design(d, "projective_plane")
}

/// Steiner triple system of order v.
///
/// v = 3 (mod 6): points Z_n x Z_3 for n = v/3, triples {(i,0),(i,1),(i,2)}
/// and {(i,r),(j,r),((i+j)/2, r+1)} for i < j (the odd-order commutative
/// idempotent quasigroup (i+j)/2 mod n).
///
/// v = 1 (mod 6): one extra point over Z_{2t} x Z_3, using a
/// half-idempotent commutative quasigroup built by relabeling the Z_{2t}
/// addition table.
pub fn steiner_triple(v: usize) -> Result<Design> {
    if v < 3 || (v % 6 != 1 && v % 6 != 3) {
        return Err(Error::Inadmissible(format!(
            "no triple system of order {v}: need v = 1, 3 (mod 6)"
        )));
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    if v % 6 == 3 {
        let n = v / 3;
        let half = n.div_ceil(2); // 1/2 mod n for odd n
        let pt = |i: usize, r: usize| r * n + i;
        for i in 0..n {
            blocks.push(vec![pt(i, 0), pt(i, 1), pt(i, 2)]);
        }
        for i in 0..n {
            for j in i + 1..n {
                let q = (i + j) * half % n;
                for r in 0..3 {
                    blocks.push(vec![pt(i, r), pt(j, r), pt(q, (r + 1) % 3)]);
                }
            }
        }
    } else {
        let t = v / 6;
        let n = 2 * t;
        // half-idempotent commutative quasigroup: relabel i+j (mod 2t) by
        // sigma(2x) = x, sigma(2x+1) = t + x, so that L(i,i) = i for i < t
        let sigma: Vec<usize> = (0..n)
            .map(|s| if s % 2 == 0 { s / 2 } else { t + s / 2 })
            .collect();
        let inf = v - 1;
        let pt = |i: usize, r: usize| r * n + i;
        for i in 0..t {
            blocks.push(vec![pt(i, 0), pt(i, 1), pt(i, 2)]);
        }
        for i in 0..t {
            for r in 0..3 {
                blocks.push(vec![inf, pt(t + i, r), pt(i, (r + 1) % 3)]);
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let q = sigma[(i + j) % n];
                for r in 0..3 {
                    blocks.push(vec![pt(i, r), pt(j, r), pt(q, (r + 1) % 3)]);
                }
            }
        }
    }
    let d = Design::new(
        DesignKind::Pbd { v },
        1,
        BlockSizeSet::new([3])?,
        blocks,
        None,
    )?;
    certify_design(d, "steiner_triple")
}

/// Round-robin one-factorization of K_v (v even): a resolvable PBD(v, {2})
/// with v - 1 full parallel classes, by the circle method.
pub fn one_factorization(v: usize) -> Result<Design> {
    if v < 2 || !v.is_multiple_of(2) {
        return Err(Error::Inadmissible(format!(
            "one-factorization needs even v, got {v}"
        )));
    }
    let n = v - 1;
    let mut blocks = Vec::new();
    let mut classes = Vec::new();
    for round in 0..n {
        let mut class = Vec::new();
        class.push(blocks.len());
        blocks.push({
            let mut b = vec![round, v - 1];
            b.sort_unstable();
            b
        });
        for j in 1..v / 2 {
            let x = (round + j) % n;
            let y = (round + n - j) % n;
            class.push(blocks.len());
            let mut b = vec![x, y];
            b.sort_unstable();
            blocks.push(b);
        }
        classes.push(class);
    }
    let d = Design::new(
        DesignKind::Pbd { v },
        1,
        BlockSizeSet::new([2])?,
        blocks,
        Some(Resolution::full(classes)),
    )?;
    certify_design(d, "one_factorization")
}

/// GDD(2^u, {3}) by deleting one point (and its blocks) from a Steiner
/// triple system of order 2u + 1; the deleted point's triples leave a
/// perfect matching of group pairs.
pub fn gdd_2u_from_triple_system(u: usize) -> Result<Design> {
    let v = 2 * u + 1;
    let sts = steiner_triple(v)?;
    let deleted = v - 1;
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut blocks = Vec::new();
    for b in &sts.blocks {
        if b.contains(&deleted) {
            groups.push(b.iter().copied().filter(|&p| p != deleted).collect());
        } else {
            blocks.push(b.clone());
        }
    }
    debug_assert_eq!(groups.len(), u);
    let d = Design::new(
        DesignKind::Gdd { groups },
        1,
        BlockSizeSet::new([3])?,
        blocks,
        None,
    )?;
    let d = crate::model::normalize(&d)?;
    certify_design(d, "gdd_2u_from_triple_system")
}

/// GDD(n^3, {3}) from the cyclic latin square of order n: the triangle
/// decomposition of K_{n,n,n}.
pub fn gdd_n3_from_latin(n: usize) -> Result<Design> {
    let mut blocks = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            blocks.push(vec![i, n + j, 2 * n + (i + j) % n]);
        }
    }
    let d = Design::new(
        DesignKind::gdd_uniform(n, 3),
        1,
        BlockSizeSet::new([3])?,
        blocks,
        None,
    )?;
    certify_design(d, "gdd_n3_from_latin")
}
