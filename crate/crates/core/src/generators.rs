//! Ready-made coloured complexes and pairs.

use crate::error::{Error, Result};
use crate::simplicial::{barycentric_subdivision_2d, BarycentricColours, Colour, ColoredComplex, SimplicialComplex};

/// Cycle of length `2k` on vertices `{prefix}0..{prefix}{2k-1}`, with colours
/// alternating `colours.0`, `colours.1`.
pub fn cycle(prefix: &str, k: usize, colours: (Colour, Colour), n: usize) -> Result<ColoredComplex> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("cycle half-length must be at least 2, got {k}")));
    }
    if colours.0 == colours.1 {
        return Err(Error::InvalidParameter("cycle colours must differ".into()));
    }
    let len = 2 * k;
    let id = |i: usize| format!("{prefix}{i}");
    let vertices: Vec<(String, Colour)> =
        (0..len).map(|i| (id(i), if i % 2 == 0 { colours.0 } else { colours.1 })).collect();
    let edges: Vec<Vec<String>> = (0..len).map(|i| vec![id(i), id((i + 1) % len)]).collect();
    ColoredComplex::new(n, &vertices, &edges)
}

/// Cycle with an explicit colour per vertex; consecutive colours must differ.
pub fn coloured_cycle(prefix: &str, colours: &[Colour], n: usize) -> Result<ColoredComplex> {
    let len = colours.len();
    if len < 4 {
        return Err(Error::InvalidParameter(format!("cycle length must be at least 4, got {len}")));
    }
    let id = |i: usize| format!("{prefix}{i}");
    let vertices: Vec<(String, Colour)> = colours.iter().enumerate().map(|(i, &c)| (id(i), c)).collect();
    let edges: Vec<Vec<String>> = (0..len).map(|i| vec![id(i), id((i + 1) % len)]).collect();
    ColoredComplex::new(n, &vertices, &edges)
}

/// Boundary of the `n`-dimensional cross-polytope, `∗ⁿ S⁰`, with vertices
/// `{prefix}{i}+`, `{prefix}{i}-` of colour `i`.
pub fn cross_polytope(prefix: &str, n: usize) -> Result<ColoredComplex> {
    if n == 0 || n > 16 {
        return Err(Error::UnsupportedColourCount(n));
    }
    let vertices: Vec<(String, Colour)> = (1..=n)
        .flat_map(|i| [(format!("{prefix}{i}+"), i), (format!("{prefix}{i}-"), i)])
        .collect();
    let facets: Vec<Vec<String>> = (0..1u32 << n)
        .map(|signs| {
            (1..=n)
                .map(|i| format!("{prefix}{i}{}", if signs >> (i - 1) & 1 == 1 { '-' } else { '+' }))
                .collect()
        })
        .collect();
    ColoredComplex::new(n, &vertices, &facets)
}

/// Two cycles of lengths `2k_A` and `2k_B`, both coloured `1, 2`.
pub fn surface_pair(ka: usize, kb: usize) -> Result<(ColoredComplex, ColoredComplex)> {
    Ok((cycle("a", ka, (1, 2), 2)?, cycle("b", kb, (1, 2), 2)?))
}

fn check_flag(g: &SimplicialComplex) -> Result<()> {
    match g.flag_witness() {
        Some(w) => Err(Error::NotFlag(g.simplex_labels(&w))),
        None => Ok(()),
    }
}

/// `(Γ̂, 𝔹)` for a flag complex `Γ` whose `i`-th vertex (in label order) is
/// the `i`-th coordinate: for every simplex `σ` of `Γ`, including `∅`, `Γ̂`
/// has the top simplex with `a{i}+` on the coordinates of `σ` and `a{i}-`
/// elsewhere; `𝔹` is the full cross-polytope on `b`-vertices.
pub fn salvetti_pair(g: &SimplicialComplex) -> Result<(ColoredComplex, ColoredComplex)> {
    check_flag(g)?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::UnsupportedColourCount(0));
    }
    let vertices: Vec<(String, Colour)> = (1..=n)
        .flat_map(|i| [(format!("a{i}+"), i), (format!("a{i}-"), i)])
        .collect();
    let facets: Vec<Vec<String>> = g
        .iter()
        .map(|s| {
            (1..=n)
                .map(|i| format!("a{i}{}", if s.contains(i - 1) { '+' } else { '-' }))
                .collect()
        })
        .collect();
    Ok((ColoredComplex::new(n, &vertices, &facets)?, cross_polytope("b", n)?))
}

/// `(𝔸, Γ)` for a flag complex `Γ` whose `i`-th vertex (in label order) gets
/// colour `i`; `𝔸` is the full cross-polytope on `a`-vertices.
pub fn racg_pair(g: &SimplicialComplex) -> Result<(ColoredComplex, ColoredComplex)> {
    check_flag(g)?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::UnsupportedColourCount(0));
    }
    let vertices: Vec<(String, Colour)> = g.labels().iter().enumerate().map(|(i, l)| (l.clone(), i + 1)).collect();
    let maximal: Vec<Vec<String>> = g.maximal_simplices().iter().map(|s| g.simplex_labels(s)).collect();
    Ok((cross_polytope("a", n)?, ColoredComplex::new(n, &vertices, &maximal)?))
}

/// Tripartite barycentric subdivisions of two complexes of dimension at most
/// two, whose edge barycentres get different colours.
pub fn barycentric_pair(
    g: &SimplicialComplex,
    cg: BarycentricColours,
    l: &SimplicialComplex,
    cl: BarycentricColours,
) -> Result<(ColoredComplex, ColoredComplex)> {
    if cg.edge == cl.edge {
        return Err(Error::InvalidColourMap(format!("both edge-barycentre colours are {}", cg.edge)));
    }
    Ok((barycentric_subdivision_2d(g, cg)?, barycentric_subdivision_2d(l, cl)?))
}

/// Boundary of the tetrahedron.
pub fn tetrahedron_boundary() -> SimplicialComplex {
    SimplicialComplex::from_facets(&[vec!["0", "1", "2"], vec!["0", "1", "3"], vec!["0", "2", "3"], vec!["1", "2", "3"]])
}

/// A single triangle.
pub fn triangle() -> SimplicialComplex {
    SimplicialComplex::from_facets(&[vec!["0", "1", "2"]])
}

/// A single edge.
pub fn edge() -> SimplicialComplex {
    SimplicialComplex::from_facets(&[vec!["0", "1"]])
}

/// The 7-vertex triangulation of the torus.
pub fn torus7() -> SimplicialComplex {
    let facets: Vec<Vec<String>> = (0..7)
        .flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]])
        .map(|t| t.iter().map(|v| v.to_string()).collect())
        .collect();
    SimplicialComplex::from_facets(&facets)
}

/// Uncoloured complexes available by name.
pub fn named(name: &str) -> Option<SimplicialComplex> {
    match name {
        "tetrahedron" => Some(tetrahedron_boundary()),
        "triangle" => Some(triangle()),
        "edge" => Some(edge()),
        "torus" => Some(torus7()),
        _ => None,
    }
}

pub const NAMED: [&str; 4] = ["tetrahedron", "triangle", "edge", "torus"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clcc::build_clcc;

    #[test]
    fn cycles() {
        let c4 = cycle("v", 2, (1, 2), 2).unwrap();
        assert_eq!((c4.vertex_count(), c4.simplices(1).len()), (4, 4));
        assert!(c4.is_flag() && !c4.is_5_large());
        let c6 = cycle("v", 3, (1, 2), 2).unwrap();
        assert!(c6.is_flag() && c6.is_5_large());
        let c8 = cycle("v", 4, (1, 3), 3).unwrap();
        assert_eq!(c8.vertex_count(), 8);
        assert!(c8.coloured_vertices().all(|(_, c)| c == 1 || c == 3));
        assert!(cycle("v", 1, (1, 2), 2).is_err());
    }

    #[test]
    fn cross_polytopes() {
        let s0 = cross_polytope("a", 1).unwrap();
        assert_eq!((s0.vertex_count(), s0.dim()), (2, 0));
        let o2 = cross_polytope("a", 2).unwrap();
        assert_eq!((o2.vertex_count(), o2.simplices(1).len(), o2.empty_squares(None).len()), (4, 4, 1));
        let o3 = cross_polytope("a", 3).unwrap();
        assert_eq!(o3.simplices(2).len(), 8);
        assert!(o3.is_flag());
    }

    #[test]
    fn salvetti() {
        let point = SimplicialComplex::from_facets(&[vec!["v"]]);
        let (gh, bb) = salvetti_pair(&point).unwrap();
        assert_eq!(gh.vertex_count(), 2);
        assert_eq!(gh.dim(), 0);
        let x = build_clcc(&gh, &bb).unwrap();
        assert_eq!(x.cubes().counts(), vec![4, 4]);

        let (gh, _) = salvetti_pair(&edge()).unwrap();
        assert_eq!((gh.vertex_count(), gh.simplices(1).len(), gh.empty_squares(None).len()), (4, 4, 1));

        let twopt = SimplicialComplex::from_facets(&[vec!["v1"], vec!["v2"]]);
        let (gh, _) = salvetti_pair(&twopt).unwrap();
        assert_eq!((gh.vertex_count(), gh.simplices(1).len()), (4, 3));
        assert!(gh.complex().is_connected());
        assert_eq!(gh.complex().adjacency().iter().filter(|n| n.len() == 1).count(), 2);
    }

    #[test]
    fn racg() {
        let twopt = SimplicialComplex::from_facets(&[vec!["v1"], vec!["v2"]]);
        let (a, b) = racg_pair(&twopt).unwrap();
        let x = build_clcc(&a, &b).unwrap();
        assert_eq!(x.cubes().counts(), vec![8, 8]);
        assert!(x.is_connected());
        let empty_triangle = SimplicialComplex::from_facets(&[vec!["1", "2"], vec!["2", "3"], vec!["1", "3"]]);
        assert!(matches!(racg_pair(&empty_triangle), Err(Error::NotFlag(_))));
    }

    #[test]
    fn barycentric_pairs() {
        let t = tetrahedron_boundary();
        let ok = barycentric_pair(&t, BarycentricColours::new(1, 2, 3), &t, BarycentricColours::new(2, 1, 3));
        assert!(ok.is_ok());
        let bad = barycentric_pair(&t, BarycentricColours::new(1, 2, 3), &t, BarycentricColours::new(3, 2, 1));
        assert!(matches!(bad, Err(Error::InvalidColourMap(_))));
        assert_eq!(torus7().euler_characteristic(), 0);
        assert_eq!(torus7().simplices(2).len(), 14);
    }
}
