//! Z₂ chains on cell complexes: boundaries, Betti numbers, localization at a
//! cell, joins of simplicial chains and the cycle `𝕏(Ω_A, Ω_B)` of a CLCC.
//!
//! Chains live in the augmented complex: a chain of dimension `-1` is the
//! augmentation bit, and the boundary of a vertex is that bit.

use std::collections::BTreeSet;

use crate::cells::{self, CellComplex, CellLink};
use crate::clcc::{build_clcc, Clcc};
use crate::error::{Error, Result};
use crate::gf2::{self, BitRow};
use crate::simplicial::{ColoredComplex, Simplex, SimplicialComplex};

/// A Z₂ chain: a set of cells of one dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Chain {
    pub dim: isize,
    pub cells: BTreeSet<usize>,
}

impl Chain {
    pub fn new(dim: isize, cells: impl IntoIterator<Item = usize>) -> Self {
        Chain { dim, cells: cells.into_iter().collect() }
    }

    pub fn zero(dim: isize) -> Self {
        Chain { dim, cells: BTreeSet::new() }
    }

    /// The chain `1` of dimension `-1`.
    pub fn augmentation() -> Self {
        Chain::new(-1, [0])
    }

    /// Sum of every cell of dimension `dim`.
    pub fn all<C: CellComplex + ?Sized>(host: &C, dim: isize) -> Self {
        Chain::new(dim, 0..host.cell_count(dim))
    }

    pub fn is_zero(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: usize) -> bool {
        self.cells.contains(&cell)
    }

    /// Z₂ sum.
    pub fn add(&self, other: &Chain) -> Result<Chain> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("adding a {}-chain to a {}-chain", other.dim, self.dim)));
        }
        Ok(Chain { dim: self.dim, cells: self.cells.symmetric_difference(&other.cells).copied().collect() })
    }

    /// Checks that every cell exists in `host`.
    pub fn validate<C: CellComplex + ?Sized>(&self, host: &C) -> Result<()> {
        if self.dim < -1 {
            return Err(Error::InvalidChain(format!("dimension {}", self.dim)));
        }
        let count = host.cell_count(self.dim);
        match self.cells.iter().find(|&&c| c >= count) {
            Some(c) => Err(Error::InvalidChain(format!("no {}-cell #{c}", self.dim))),
            None => Ok(()),
        }
    }

    /// Labels of the cells, in index order.
    pub fn labels<C: CellComplex + ?Sized>(&self, host: &C) -> Vec<String> {
        self.cells.iter().map(|&c| host.cell_label(self.dim, c)).collect()
    }
}

/// Betti numbers over Z₂, `ranks[k] = b_k` for `0 ≤ k ≤ dim`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BettiVector {
    pub reduced: bool,
    pub ranks: Vec<usize>,
}

impl BettiVector {
    /// `Σ (-1)^k b_k`; for reduced numbers this is `χ - 1`.
    pub fn alternating_sum(&self) -> i64 {
        self.ranks.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }
}

pub fn boundary<C: CellComplex + ?Sized>(host: &C, c: &Chain) -> Result<Chain> {
    c.validate(host)?;
    if c.dim < 0 {
        return Err(Error::DimensionMismatch("the augmentation has no boundary".into()));
    }
    let mut out = BTreeSet::new();
    for &cell in &c.cells {
        for &f in host.facets(c.dim, cell) {
            if !out.insert(f) {
                out.remove(&f);
            }
        }
    }
    Ok(Chain { dim: c.dim - 1, cells: out })
}

pub fn is_cycle<C: CellComplex + ?Sized>(host: &C, c: &Chain) -> Result<bool> {
    Ok(boundary(host, c)?.is_zero())
}

/// Rank of `d_dim : C_dim → C_{dim-1}`, with `d_0` the augmentation.
fn boundary_rank<C: CellComplex + ?Sized>(host: &C, dim: isize) -> usize {
    let cols = host.cell_count(dim - 1);
    gf2::rank((0..host.cell_count(dim)).map(|c| BitRow::from_indices(cols, host.facets(dim, c).iter().copied())))
}

/// Z₂ Betti numbers through GF(2) ranks of the boundary matrices.
pub fn betti<C: CellComplex + ?Sized>(host: &C, reduced: bool) -> BettiVector {
    let top = host.top_dim();
    // r[k] = rank d_k for 0 ≤ k ≤ top + 1
    let r: Vec<usize> = (0..=top + 1).map(|k| if k > top { 0 } else { boundary_rank(host, k) }).collect();
    let ranks = (0..=top)
        .map(|k| {
            let i = k as usize;
            let b = host.cell_count(k) - r[i] - r[i + 1];
            if k == 0 && !reduced {
                b + r[0]
            } else {
                b
            }
        })
        .collect();
    BettiVector { reduced, ranks }
}

/// Precomputed cofaces of a host, for repeated localization.
pub struct Localizer<'a, C: CellComplex + ?Sized> {
    host: &'a C,
    up: Vec<Vec<Vec<usize>>>,
}

impl<'a, C: CellComplex + ?Sized> Localizer<'a, C> {
    pub fn new(host: &'a C) -> Self {
        Localizer { host, up: cells::cofacets(host) }
    }

    pub fn link(&self, dim: isize, cell: usize) -> Result<CellLink> {
        cells::cell_link(self.host, &self.up, dim, cell)
    }

    /// Restriction of an `n`-chain to the link of the `k`-cell `(dim, cell)`:
    /// the `(n-k-1)`-chain of link simplices whose coface lies in `c`.
    pub fn localize(&self, c: &Chain, dim: isize, cell: usize) -> Result<(CellLink, Chain)> {
        c.validate(self.host)?;
        if dim > c.dim {
            return Err(Error::DimensionMismatch(format!("cannot localize a {}-chain at a {dim}-cell", c.dim)));
        }
        let link = self.link(dim, cell)?;
        if dim == c.dim {
            let bit = if c.contains(cell) { Chain::augmentation() } else { Chain::zero(-1) };
            return Ok((link, bit));
        }
        let out_dim = c.dim - dim - 1;
        let cells = link
            .cofaces
            .iter()
            .filter(|(d, u, _)| *d == c.dim && c.contains(*u))
            .map(|(_, _, s)| link.complex.index_of(s).expect("coface simplex lies in the link"))
            .collect();
        Ok((link, Chain { dim: out_dim, cells }))
    }
}

pub fn localize<C: CellComplex + ?Sized>(host: &C, c: &Chain, dim: isize, cell: usize) -> Result<(CellLink, Chain)> {
    Localizer::new(host).localize(c, dim, cell)
}

/// `Σ ∗ Ω` inside `Λ ∗ Δ`, returned together with the join complex.
pub fn join_chains(
    lambda: &SimplicialComplex,
    sigma: &Chain,
    delta: &SimplicialComplex,
    omega: &Chain,
) -> Result<(SimplicialComplex, Chain)> {
    sigma.validate(lambda)?;
    omega.validate(delta)?;
    let join = lambda.join(delta);
    let dim = sigma.dim + omega.dim + 1;
    let mut cells = BTreeSet::new();
    for &s in &sigma.cells {
        for &t in &omega.cells {
            let st = lambda.join_simplex(&lambda.simplices(sigma.dim)[s], &delta.simplices(omega.dim)[t]);
            cells.insert(join.index_of(&st).expect("join of simplices lies in the join"));
        }
    }
    Ok((join, Chain { dim, cells }))
}

/// Sum of all top-dimensional cells.
pub fn fundamental_chain<C: CellComplex + ?Sized>(host: &C) -> Chain {
    Chain::all(host, host.top_dim())
}

/// Whether the sum of all top cells is a cycle. The complex with no vertices
/// counts as having one.
pub fn fundamental_class<C: CellComplex + ?Sized>(host: &C) -> Result<bool> {
    if !cells::is_pure(host) {
        return Err(Error::NotPure);
    }
    if host.top_dim() < 0 {
        return Ok(true);
    }
    is_cycle(host, &fundamental_chain(host))
}

/// `∅` when the cells of `c` already cover every colour; otherwise the
/// complement must fit inside some simplex of `other`'s support.
fn first_unpaired(
    k: &ColoredComplex,
    c: &Chain,
    other: &ColoredComplex,
    oc: &Chain,
) -> Option<Simplex> {
    let full = k.full_mask();
    let support: Vec<u64> = oc.cells.iter().map(|&t| other.colour_mask(&other.simplices(oc.dim)[t])).collect();
    c.cells
        .iter()
        .map(|&s| &k.simplices(c.dim)[s])
        .find(|s| {
            let need = full & !k.colour_mask(s);
            need != 0 && !support.iter().any(|m| need & !m == 0)
        })
        .cloned()
}

/// Every simplex in either support has a complementary face of some simplex
/// in the other support.
pub fn smartly_paired_chains(a: &ColoredComplex, oa: &Chain, b: &ColoredComplex, ob: &Chain) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::MismatchedColourCount(a.n(), b.n()));
    }
    oa.validate(a.complex())?;
    ob.validate(b.complex())?;
    Ok(first_unpaired(a, oa, b, ob).is_none() && first_unpaired(b, ob, a, oa).is_none())
}

/// Subcomplex generated by the support of `c`.
fn support(k: &ColoredComplex, c: &Chain) -> Result<ColoredComplex> {
    let simplices: Vec<&Simplex> = c.cells.iter().map(|&s| &k.simplices(c.dim)[s]).collect();
    let vertices: BTreeSet<usize> = simplices.iter().flat_map(|s| s.vertices().iter().copied()).collect();
    let coloured: Vec<(&str, usize)> = vertices.iter().map(|&v| (k.id(v), k.colour(v))).collect();
    let maximal: Vec<Vec<&str>> = simplices.iter().map(|s| s.vertices().iter().map(|&v| k.id(v)).collect()).collect();
    ColoredComplex::new(k.n(), &coloured, &maximal)
}

/// `𝕏(Ω_A, Ω_B)`: the top cubes of the CLCC of the two supports, pushed
/// into `x`. A cycle whenever both inputs are.
pub fn clcc_cycle(x: &Clcc, oa: &Chain, ob: &Chain) -> Result<Chain> {
    let (a, b) = (x.a(), x.b());
    if !smartly_paired_chains(a, oa, b, ob)? {
        let culprit = first_unpaired(a, oa, b, ob)
            .map(|s| format!("A simplex {:?}", a.ids(&s)))
            .or_else(|| first_unpaired(b, ob, a, oa).map(|s| format!("B simplex {:?}", b.ids(&s))))
            .unwrap_or_default();
        return Err(Error::NotSmartlyPaired(format!("{culprit} has no complement in the other support")));
    }
    let dim = oa.dim + ob.dim + 2 - x.n() as isize;
    if dim < -1 {
        return Err(Error::DimensionMismatch(format!("chains of dimensions {} and {} give dimension {dim}", oa.dim, ob.dim)));
    }
    if oa.is_zero() || ob.is_zero() || dim < 0 {
        return Ok(Chain::zero(dim));
    }
    let (sa, sb) = (support(a, oa)?, support(b, ob)?);
    let sub = build_clcc(&sa, &sb)?;
    let mut cells = BTreeSet::new();
    for (ka, kb) in sub.keys(dim as usize) {
        let ta = a.simplex_from_entries(&sa.entries(ka))?;
        let tb = b.simplex_from_entries(&sb.entries(kb))?;
        let (d, i) = x.find(&ta, &tb).ok_or_else(|| Error::Internal("sub-CLCC cube missing from host".into()))?;
        debug_assert_eq!(d as isize, dim);
        cells.insert(i);
    }
    Ok(Chain { dim, cells })
}
