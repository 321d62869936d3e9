//! Inputs shared by the criterion benches.

use clcc_core::pocset::Pocset;
use clcc_core::{generators, random, ColoredComplex};

/// Surface pairs of increasing size.
pub fn surface_pairs() -> Vec<(String, (ColoredComplex, ColoredComplex))> {
    [(2, 2), (3, 3), (4, 5), (6, 6)]
        .into_iter()
        .map(|(ka, kb)| (format!("{ka}x{kb}"), generators::surface_pair(ka, kb).expect("surface pair")))
        .collect()
}

/// The barycentric pair of two tetrahedron boundaries: a 3-dimensional CLCC.
pub fn tetrahedra_pair() -> (ColoredComplex, ColoredComplex) {
    generators::barycentric_pair(
        &generators::tetrahedron_boundary(),
        clcc_core::simplicial::BarycentricColours::new(1, 2, 3),
        &generators::tetrahedron_boundary(),
        clcc_core::simplicial::BarycentricColours::new(2, 1, 3),
    )
    .expect("barycentric pair")
}

/// Seeded random pocsets with `pairs` pairs.
pub fn pocsets(pairs: usize, count: usize) -> Vec<Pocset> {
    let mut rng = random::rng(7);
    (0..count).map(|_| random::random_pocset(&mut rng, pairs)).collect()
}
