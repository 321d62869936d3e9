//! Cube complexes with coupled links (CLCCs) built from pairs of
//! `n`-coloured simplicial complexes.
//!
//! Simplicial complexes, cube complexes and CLCCs all implement
//! [`cells::CellComplex`], so chains and Betti numbers are computed the same
//! way on every kind of complex.

pub mod cells;
pub mod clcc;
pub mod cube;
mod error;
pub mod generators;
mod gf2;
pub mod homology;
pub mod hyperbolicity;
pub mod io;
pub mod pocset;
pub mod random;
pub mod simplicial;

pub use cells::CellComplex;
pub use clcc::{build_clcc, Clcc};
pub use cube::{CubeComplex, CubeKey};
pub use error::{Error, Result};
pub use homology::{BettiVector, Chain};
pub use hyperbolicity::{Certificate, Verdict};
pub use pocset::{Hyperplane, Pocset};
pub use simplicial::{Colour, ColoredComplex, Simplex, SimplicialComplex, SquareWitness};
