use std::collections::BTreeMap;

use super::colored::{Colour, ColoredComplex};
use super::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Which colour each kind of barycentre receives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BarycentricColours {
    pub vertex: Colour,
    pub edge: Colour,
    pub face: Colour,
}

impl BarycentricColours {
    pub const fn new(vertex: Colour, edge: Colour, face: Colour) -> Self {
        BarycentricColours { vertex, edge, face }
    }

    fn validate(&self) -> Result<()> {
        let mut cs = [self.vertex, self.edge, self.face];
        cs.sort_unstable();
        if cs != [1, 2, 3] {
            return Err(Error::InvalidColourMap(format!(
                "(V, E, F) -> ({}, {}, {}) is not a bijection onto {{1, 2, 3}}",
                self.vertex, self.edge, self.face
            )));
        }
        Ok(())
    }

    fn of_dim(&self, d: isize) -> Colour {
        match d {
            0 => self.vertex,
            1 => self.edge,
            _ => self.face,
        }
    }
}

/// Id of the barycentre of a simplex: its vertex labels in brackets.
pub fn barycentre_id(k: &SimplicialComplex, s: &Simplex) -> String {
    format!("[{}]", k.simplex_labels(s).join(","))
}

/// Barycentric subdivision of a complex of dimension at most 2, coloured by
/// the dimension of the simplex each barycentre sits on.
///
/// Vertices are the non-empty simplices of `k`; simplices are chains of
/// proper inclusions.
pub fn barycentric_subdivision_2d(k: &SimplicialComplex, colours: BarycentricColours) -> Result<ColoredComplex> {
    if k.dim() > 2 {
        return Err(Error::DimensionTooHigh(k.dim()));
    }
    colours.validate()?;
    let vertices: Vec<(String, Colour)> = k
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| (barycentre_id(k, s), colours.of_dim(s.dim())))
        .collect();
    let mut chains: Vec<Vec<String>> = Vec::new();
    for top in k.maximal_simplices() {
        // all maximal flags below `top`
        let mut flags: Vec<Vec<Simplex>> = vec![vec![top.clone()]];
        while flags[0].last().is_some_and(|s| s.len() > 1) {
            flags = flags
                .into_iter()
                .flat_map(|f| {
                    let last = f.last().unwrap().clone();
                    last.facets().map(move |face| {
                        let mut g = f.clone();
                        g.push(face);
                        g
                    }).collect::<Vec<_>>()
                })
                .collect();
        }
        chains.extend(flags.into_iter().map(|f| f.iter().map(|s| barycentre_id(k, s)).collect()));
    }
    ColoredComplex::new(3, &vertices, &chains)
}

/// Per-dimension simplex counts, handy for sanity checks of subdivisions.
pub fn face_counts(k: &SimplicialComplex) -> BTreeMap<isize, usize> {
    (0..=k.dim()).map(|d| (d, k.simplices(d).len())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const VEF: BarycentricColours = BarycentricColours::new(1, 2, 3);

    fn tetra_boundary() -> SimplicialComplex {
        SimplicialComplex::from_facets(&[
            vec!["0", "1", "2"],
            vec!["0", "1", "3"],
            vec!["0", "2", "3"],
            vec!["1", "2", "3"],
        ])
    }

    #[test]
    fn one_triangle() {
        let t = SimplicialComplex::from_facets(&[vec!["a", "b", "c"]]);
        let sd = barycentric_subdivision_2d(&t, VEF).unwrap();
        assert_eq!(face_counts(sd.complex()), BTreeMap::from([(0, 7), (1, 12), (2, 6)]));
        assert!(sd.is_flag());
        assert!(sd.is_5_large());
    }

    #[test]
    fn one_edge() {
        let e = SimplicialComplex::from_facets(&[vec!["a", "b"]]);
        let sd = barycentric_subdivision_2d(&e, VEF).unwrap();
        assert_eq!(face_counts(sd.complex()), BTreeMap::from([(0, 3), (1, 2)]));
    }

    #[test]
    fn tetrahedron_boundary() {
        let sd = barycentric_subdivision_2d(&tetra_boundary(), VEF).unwrap();
        assert_eq!(face_counts(sd.complex()), BTreeMap::from([(0, 14), (1, 36), (2, 24)]));
        assert!(sd.is_flag());
        assert!(sd.is_obes());
    }

    #[test]
    fn rejects_bad_input() {
        let solid = SimplicialComplex::from_facets(&[vec!["0", "1", "2", "3"]]);
        assert_eq!(barycentric_subdivision_2d(&solid, VEF), Err(Error::DimensionTooHigh(3)));
        let t = tetra_boundary();
        assert!(matches!(
            barycentric_subdivision_2d(&t, BarycentricColours::new(1, 1, 3)),
            Err(Error::InvalidColourMap(_))
        ));
    }
}
