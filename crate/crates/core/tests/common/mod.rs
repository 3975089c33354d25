#![allow(dead_code)]

use slicetorus::catalog::{shipped_catalog, CatalogEntry};
use slicetorus::diagram::PlanarDiagram;

pub fn crossing_number(name: &str) -> usize {
    name.split('_')
        .next()
        .and_then(|c| c.parse().ok())
        .unwrap_or(0)
}

pub fn entries_upto(n: usize) -> Vec<CatalogEntry> {
    shipped_catalog()
        .into_iter()
        .filter(|e| crossing_number(&e.name) <= n)
        .collect()
}

pub fn knot(name: &str) -> PlanarDiagram {
    slicetorus::catalog::lookup(name).unwrap()
}

/// All knots up to seven crossings plus 8_19, 9_42 and 9_46.
pub fn property_set() -> Vec<(String, PlanarDiagram)> {
    let mut v: Vec<_> = entries_upto(7)
        .into_iter()
        .map(|e| (e.name.clone(), e.diagram().unwrap()))
        .collect();
    for n in ["8_19", "9_42", "9_46"] {
        v.push((n.to_string(), knot(n)));
    }
    v
}
