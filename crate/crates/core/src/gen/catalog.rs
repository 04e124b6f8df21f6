//! Shipped catalog of small designs, re-verified on every load.
//!
//! Built-in entries are embedded interchange files; additional entries can
//! be dropped as `<key>.json` files into the directory named by the
//! `IPBD_CATALOG_DIR` environment variable.

use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::io::{design_from_json, latin_from_json, looks_like_latin};
use crate::model::{Design, LatinSquareSet};
use crate::verify::{verify_design, verify_latin, verify_orthogonal, verify_resolution};

pub enum CatalogObject {
    Design(Design),
    Squares(LatinSquareSet),
}

static BUILTIN: &[(&str, &str)] = &[
    ("kts(9)", include_str!("../../data/kts9.json")),
    ("kts(15)", include_str!("../../data/kts15.json")),
    ("gdd(2^3,{3})", include_str!("../../data/gdd_2x3.json")),
    (
        "packing(5,3,1)",
        include_str!("../../data/packing_5_3.json"),
    ),
    (
        "covering(4,3,1)",
        include_str!("../../data/covering_4_3.json"),
    ),
    (
        "covering(5,3,1)",
        include_str!("../../data/covering_5_3.json"),
    ),
    (
        "covering(6,3,1)",
        include_str!("../../data/covering_6_3.json"),
    ),
    (
        "covering(8,3,1)",
        include_str!("../../data/covering_8_3.json"),
    ),
];

const MOLS_TABLE_ORDERS: &[usize] = &[4, 8, 9, 16, 25, 27];

pub fn builtin_keys() -> Vec<String> {
    let mut keys: Vec<String> = BUILTIN.iter().map(|(k, _)| k.to_string()).collect();
    keys.extend(MOLS_TABLE_ORDERS.iter().map(|q| format!("mols({q})")));
    keys.sort();
    keys
}

pub fn catalog_dir() -> Option<PathBuf> {
    std::env::var_os("IPBD_CATALOG_DIR").map(PathBuf::from)
}

/// Keys of the entries stored in the local catalog directory, if any.
pub fn catalog_dir_entries() -> Option<Vec<String>> {
    let dir = catalog_dir()?;
    let mut keys = Vec::new();
    for entry in std::fs::read_dir(dir).ok()? {
        let path = entry.ok()?.path();
        if path.extension().and_then(|e| e.to_str()) == Some("json") {
            if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                keys.push(stem.to_string());
            }
        }
    }
    keys.sort();
    Some(keys)
}

fn load_object(text: &str, key: &str) -> Result<CatalogObject> {
    if looks_like_latin(text) {
        let set = latin_from_json(text)?;
        let cert = verify_latin(&set);
        if !cert.valid {
            return Err(Error::Certification(format!(
                "catalog entry {key}: {}",
                cert.summary()
            )));
        }
        Ok(CatalogObject::Squares(set))
    } else {
        let design = design_from_json(text)?;
        let cert = verify_design(&design);
        if !cert.valid {
            return Err(Error::Certification(format!(
                "catalog entry {key}: {}",
                cert.summary()
            )));
        }
        if design.resolution.is_some() {
            let cert = verify_resolution(&design);
            if !cert.valid {
                return Err(Error::Certification(format!(
                    "catalog entry {key} resolution: {}",
                    cert.summary()
                )));
            }
        }
        Ok(CatalogObject::Design(design))
    }
}

/// Fetch a stored object by key. Every object is re-verified on load:
/// designs against their kind (and resolution when declared), latin square
/// sets against the latin and orthogonality conditions.
pub fn tabulated(key: &str) -> Result<CatalogObject> {
    // MOLS tables for the tabulated prime powers
    if let Some(q) = key.strip_prefix("mols(").and_then(|s| s.strip_suffix(')')) {
        if let Ok(q) = q.parse::<usize>() {
            if MOLS_TABLE_ORDERS.contains(&q) {
                let set = super::mols(q, q - 1)?;
                let cert = verify_orthogonal(&set);
                if !cert.valid {
                    return Err(Error::Certification(format!(
                        "mols({q}): {}",
                        cert.summary()
                    )));
                }
                return Ok(CatalogObject::Squares(set));
            }
        }
    }
    for (k, text) in BUILTIN {
        if *k == key {
            return load_object(text, key);
        }
    }
    if let Some(dir) = catalog_dir() {
        let path = dir.join(format!("{key}.json"));
        if path.exists() {
            let text = std::fs::read_to_string(path)?;
            return load_object(&text, key);
        }
    }
    Err(Error::UnknownKey(key.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::packing_stats;

    #[test]
    fn kirkman_systems_load_verified() {
        for (key, v, classes) in [("kts(9)", 9, 4), ("kts(15)", 15, 7)] {
            match tabulated(key).unwrap() {
                CatalogObject::Design(d) => {
                    assert_eq!(d.n_points, v);
                    assert_eq!(d.resolution.as_ref().unwrap().classes.len(), classes);
                }
                _ => panic!("expected a design for {key}"),
            }
        }
    }

    #[test]
    fn two_triangle_packing_has_cycle_leave() {
        match tabulated("packing(5,3,1)").unwrap() {
            CatalogObject::Design(d) => {
                let stats = packing_stats(&d).unwrap();
                assert_eq!(stats.b, 2);
                assert_eq!(stats.leave_degrees(), vec![2, 2, 2, 2]);
            }
            _ => panic!("expected a design"),
        }
    }

    #[test]
    fn small_coverings_load() {
        for (v, b) in [(4, 3), (5, 4), (6, 6), (8, 11)] {
            match tabulated(&format!("covering({v},3,1)")).unwrap() {
                CatalogObject::Design(d) => assert_eq!(d.blocks.len(), b),
                _ => panic!("expected a design"),
            }
        }
    }

    #[test]
    fn mols_tables_served() {
        match tabulated("mols(9)").unwrap() {
            CatalogObject::Squares(s) => assert_eq!(s.t(), 8),
            _ => panic!("expected squares"),
        }
        assert!(tabulated("mols(6)").is_err());
        assert!(tabulated("nonsense").is_err());
    }
}
