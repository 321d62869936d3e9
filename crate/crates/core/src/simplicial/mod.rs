//! Simplicial complexes, colourings and the combinatorial predicates on them.

mod colored;
mod complex;
mod subdivision;

pub use colored::{pairwise_5_large, Colour, ColoredComplex, CoordSimplex, PairwiseCheck, PairwiseWitness, SquareWitness};
pub use complex::{Simplex, SimplicialComplex};
pub use subdivision::{barycentre_id, barycentric_subdivision_2d, face_counts, BarycentricColours};
