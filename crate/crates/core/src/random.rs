//! Seeded random inputs for property checks and the acceptance corpus.
//!
//! Every generator takes an explicit RNG; [`seed`] reads `CLCC_SEED` so that a
//! failing corpus can be replayed.

use std::collections::BTreeSet;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cells::CellComplex;
use crate::clcc::prune_to_smart_pair;
use crate::cube::CubeComplex;
use crate::error::Result;
use crate::homology::Chain;
use crate::pocset::{element, Pocset};
use crate::simplicial::{Colour, ColoredComplex, Simplex, SimplicialComplex};

pub type CorpusRng = ChaCha8Rng;

/// `CLCC_SEED` if set and numeric, else `default`.
pub fn seed(default: u64) -> u64 {
    std::env::var("CLCC_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(default)
}

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Flag complex of a graph on `0..vertices`, vertex labels `{prefix}{i}`.
pub fn clique_complex(prefix: &str, vertices: usize, edges: &[(usize, usize)]) -> SimplicialComplex {
    let mut adj = vec![BTreeSet::new(); vertices];
    for &(u, v) in edges {
        if u != v {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    // Bron–Kerbosch without pivoting; inputs are tiny
    fn expand(r: Vec<usize>, mut p: BTreeSet<usize>, mut x: BTreeSet<usize>, adj: &[BTreeSet<usize>], out: &mut Vec<Simplex>) {
        if p.is_empty() && x.is_empty() {
            out.push(Simplex::new(r));
            return;
        }
        while let Some(v) = p.pop_first() {
            let mut r2 = r.clone();
            r2.push(v);
            expand(r2, p.intersection(&adj[v]).copied().collect(), x.intersection(&adj[v]).copied().collect(), adj, out);
            x.insert(v);
        }
    }
    let mut cliques = Vec::new();
    expand(Vec::new(), (0..vertices).collect(), BTreeSet::new(), &adj, &mut cliques);
    let labels = (0..vertices).map(|i| format!("{prefix}{i}")).collect();
    SimplicialComplex::from_simplices(labels, cliques).expect("clique complex")
}

/// Erdős–Rényi edges on `0..vertices`.
pub fn random_edges(rng: &mut CorpusRng, vertices: usize, p: f64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..vertices {
        for v in u + 1..vertices {
            if rng.random_bool(p) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Random flag complex on `vertices` vertices.
pub fn random_flag_complex(rng: &mut CorpusRng, prefix: &str, vertices: usize, p: f64) -> SimplicialComplex {
    let edges = random_edges(rng, vertices, p);
    clique_complex(prefix, vertices, &edges)
}

/// Random `n`-coloured complex: vertices get random colours and
/// `simplices` random colour-transversal generators.
pub fn random_colored_complex(
    rng: &mut CorpusRng,
    prefix: &str,
    n: usize,
    vertices: usize,
    simplices: usize,
) -> Result<ColoredComplex> {
    let colours: Vec<Colour> = (0..vertices).map(|_| rng.random_range(1..=n)).collect();
    let ids: Vec<String> = (0..vertices).map(|i| format!("{prefix}{i}")).collect();
    let mut gens: Vec<Vec<String>> = Vec::with_capacity(simplices);
    for _ in 0..simplices {
        let mut by_colour: Vec<Option<usize>> = vec![None; n + 1];
        let mut order: Vec<usize> = (0..vertices).collect();
        order.shuffle(rng);
        for v in order {
            if by_colour[colours[v]].is_none() && rng.random_bool(0.6) {
                by_colour[colours[v]] = Some(v);
            }
        }
        gens.push(by_colour.into_iter().flatten().map(|v| ids[v].clone()).collect());
    }
    let vs: Vec<(String, Colour)> = ids.iter().cloned().zip(colours).collect();
    ColoredComplex::new(n, &vs, &gens)
}

/// A random pair pruned until it is smartly paired.
pub fn random_smart_pair(rng: &mut CorpusRng, n: usize, max_vertices: usize) -> Result<(ColoredComplex, ColoredComplex)> {
    let va = rng.random_range(1..=max_vertices);
    let vb = rng.random_range(1..=max_vertices);
    let sa = rng.random_range(1..=2 * va);
    let sb = rng.random_range(1..=2 * vb);
    let a = random_colored_complex(rng, "a", n, va, sa)?;
    let b = random_colored_complex(rng, "b", n, vb, sb)?;
    prune_to_smart_pair(&a, &b)
}

/// Up to `max_triangles` random triangles on at most `vertices` vertices,
/// plus possibly a few free edges.
pub fn random_2_complex(rng: &mut CorpusRng, vertices: usize, max_triangles: usize) -> SimplicialComplex {
    let vertices = vertices.max(3);
    let all: Vec<usize> = (0..vertices).collect();
    let mut gens: Vec<Vec<String>> = Vec::new();
    for _ in 0..rng.random_range(1..=max_triangles) {
        let t: Vec<String> = all.choose_multiple(rng, 3).map(|v| format!("v{v}")).collect();
        gens.push(t);
    }
    for _ in 0..rng.random_range(0..=2) {
        gens.push(all.choose_multiple(rng, 2).map(|v| format!("v{v}")).collect());
    }
    SimplicialComplex::from_facets(&gens)
}

/// A random chain of dimension `dim`, each cell kept with probability 1/2.
pub fn random_chain<C: CellComplex + ?Sized>(rng: &mut CorpusRng, host: &C, dim: isize) -> Chain {
    Chain::new(dim, (0..host.cell_count(dim)).filter(|_| rng.random_bool(0.5)))
}

/// A random valid pocset on `pairs` pairs: relations are added one at a time
/// and dropped when they break the axioms.
pub fn random_pocset(rng: &mut CorpusRng, pairs: usize) -> Pocset {
    let ids: Vec<String> = (0..pairs).map(|i| format!("h{i}")).collect();
    let mut relations = Vec::new();
    let attempts = if pairs < 2 { 0 } else { rng.random_range(0..=2 * pairs) };
    for _ in 0..attempts {
        let i = rng.random_range(0..pairs);
        let j = (i + rng.random_range(1..pairs)) % pairs;
        let r = (element(i, rng.random_bool(0.5)), element(j, rng.random_bool(0.5)));
        relations.push(r);
        if Pocset::new(ids.clone(), &relations).is_err() {
            relations.pop();
        }
    }
    Pocset::new(ids, &relations).expect("only valid relations were kept")
}

/// A uniformly random labelled tree on `edges + 1` vertices (random parent
/// for each vertex), as a 1-dimensional cube complex.
pub fn random_tree(rng: &mut CorpusRng, edges: usize) -> CubeComplex {
    let vs: Vec<String> = (0..=edges).map(|i| format!("t{i}")).collect();
    let es: Vec<(String, String)> = (1..=edges).map(|i| (vs[rng.random_range(0..i)].clone(), vs[i].clone())).collect();
    CubeComplex::from_graph(&vs, &es).expect("trees are cube complexes")
}
