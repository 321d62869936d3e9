//! A minimal interface shared by simplicial and cube complexes so that chains,
//! boundaries, links and Betti numbers can be computed uniformly.
//!
//! Cells are addressed by `(dim, index)`. Dimension `-1` always holds exactly
//! one cell, the empty cell, which is the single facet of every vertex. This
//! makes the augmented (reduced) chain complex the native one.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::simplicial::{Simplex, SimplicialComplex};

/// Facet list shared by every vertex: the empty cell.
pub(crate) const VERTEX_FACETS: [usize; 1] = [0];

pub trait CellComplex {
    /// Largest dimension with at least one cell, `-1` if there are no vertices.
    fn top_dim(&self) -> isize;

    /// Number of cells of dimension `dim`. Dimension `-1` has one cell.
    fn cell_count(&self, dim: isize) -> usize;

    /// Codimension-one faces of a cell, as indices into dimension `dim - 1`.
    fn facets(&self, dim: isize, cell: usize) -> &[usize];

    /// Human-readable identifier of a cell.
    fn cell_label(&self, dim: isize, cell: usize) -> String;
}

/// Cofacet lists for every dimension, indexed `[dim + 1][cell]`.
pub fn cofacets<C: CellComplex + ?Sized>(host: &C) -> Vec<Vec<Vec<usize>>> {
    let top = host.top_dim();
    let mut out: Vec<Vec<Vec<usize>>> = (-1..=top)
        .map(|d| vec![Vec::new(); host.cell_count(d)])
        .collect();
    for d in 0..=top {
        for c in 0..host.cell_count(d) {
            for &f in host.facets(d, c) {
                out[d as usize][f].push(c);
            }
        }
    }
    out
}

/// Vertex sets of every cell, indexed `[dim + 1][cell]`.
pub fn vertex_sets<C: CellComplex + ?Sized>(host: &C) -> Vec<Vec<BTreeSet<usize>>> {
    let top = host.top_dim();
    let mut out: Vec<Vec<BTreeSet<usize>>> = vec![vec![BTreeSet::new()]];
    if top >= 0 {
        out.push((0..host.cell_count(0)).map(|v| BTreeSet::from([v])).collect());
    }
    for d in 1..=top {
        let level: Vec<BTreeSet<usize>> = (0..host.cell_count(d))
            .map(|c| {
                host.facets(d, c)
                    .iter()
                    .flat_map(|&f| out[d as usize][f].iter().copied())
                    .collect()
            })
            .collect();
        out.push(level);
    }
    out
}

/// Whether every cell lies in some cell of the top dimension.
pub fn is_pure<C: CellComplex + ?Sized>(host: &C) -> bool {
    let top = host.top_dim();
    if top < 0 {
        return true;
    }
    let mut covered: Vec<Vec<bool>> = (-1..=top).map(|d| vec![false; host.cell_count(d)]).collect();
    covered[(top + 1) as usize].iter_mut().for_each(|c| *c = true);
    for d in (0..=top).rev() {
        for c in 0..host.cell_count(d) {
            if covered[(d + 1) as usize][c] {
                for &f in host.facets(d, c) {
                    covered[d as usize][f] = true;
                }
            }
        }
    }
    covered.iter().all(|level| level.iter().all(|&c| c))
}

/// Alternating sum of cell counts in non-negative dimensions.
pub fn euler_characteristic<C: CellComplex + ?Sized>(host: &C) -> i64 {
    (0..=host.top_dim())
        .map(|d| {
            let count = host.cell_count(d) as i64;
            if d % 2 == 0 {
                count
            } else {
                -count
            }
        })
        .sum()
}

/// Link of a cell read off the coface relation. Link vertices are the
/// cofacets of the cell, labelled by their cell labels; every coface of
/// dimension `dim + k` becomes a `(k - 1)`-simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellLink {
    pub complex: SimplicialComplex,
    /// `(coface dimension, coface index, simplex)` for every coface.
    pub cofaces: Vec<(isize, usize, Simplex)>,
}

/// Link of cell `(dim, cell)`; `up` comes from [`cofacets`]. Fails when two
/// cofaces span the same vertex set or a coface meets the cell twice.
pub fn cell_link<C: CellComplex + ?Sized>(host: &C, up: &[Vec<Vec<usize>>], dim: isize, cell: usize) -> Result<CellLink> {
    if dim < -1 || cell >= host.cell_count(dim) {
        return Err(Error::MissingCube(format!("{dim}-cell #{cell}")));
    }
    let mut level: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::from([(cell, BTreeSet::new())]);
    let mut first: Vec<usize> = Vec::new();
    let mut cofaces: Vec<(isize, usize, Simplex)> = Vec::new();
    let mut d = dim;
    while d < host.top_dim() {
        let mut next: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for &c in level.keys() {
            for &u in &up[(d + 1) as usize][c] {
                next.entry(u).or_default();
            }
        }
        if next.is_empty() {
            break;
        }
        if d == dim {
            first = next.keys().copied().collect();
            for (pos, set) in next.values_mut().enumerate() {
                set.insert(pos);
            }
        } else {
            for (&u, set) in next.iter_mut() {
                for f in host.facets(d + 1, u) {
                    if let Some(s) = level.get(f) {
                        set.extend(s.iter().copied());
                    }
                }
            }
        }
        let k = (d + 1 - dim) as usize;
        let mut seen = HashSet::new();
        for (&u, set) in &next {
            if set.len() != k || !seen.insert(set.clone()) {
                return Err(Error::NonSimplicialLink(format!(
                    "coface `{}` of `{}`",
                    host.cell_label(d + 1, u),
                    host.cell_label(dim, cell)
                )));
            }
            cofaces.push((d + 1, u, Simplex::new(set.iter().copied().collect())));
        }
        level = next;
        d += 1;
    }
    let labels = first.iter().map(|&c| host.cell_label(dim + 1, c)).collect();
    let complex = SimplicialComplex::from_simplices(labels, cofaces.iter().map(|(_, _, s)| s.clone()).collect())?;
    Ok(CellLink { complex, cofaces })
}
