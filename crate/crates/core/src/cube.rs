//! Finite cube complexes given combinatorially by their facet relation.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::cells::{self, CellComplex, VERTEX_FACETS};
use crate::error::{Error, Result};
use crate::simplicial::{Colour, SimplicialComplex};

/// Colour-indexed description of a cube `Q(a, b)` of a coupled-link complex.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CubeKey {
    pub a: BTreeMap<Colour, String>,
    pub b: BTreeMap<Colour, String>,
}

impl CubeKey {
    /// Colours carried by both coordinates; their number is the cube dimension.
    pub fn overlap(&self) -> Vec<Colour> {
        self.a.keys().filter(|c| self.b.contains_key(c)).copied().collect()
    }

    pub fn dim(&self) -> usize {
        self.overlap().len()
    }

    /// Canonical cube id, e.g. `A{1:x,2:y}B{2:z}`.
    pub fn id(&self) -> String {
        let side = |m: &BTreeMap<Colour, String>| {
            m.iter().map(|(c, v)| format!("{c}:{v}")).collect::<Vec<_>>().join(",")
        };
        format!("A{{{}}}B{{{}}}", side(&self.a), side(&self.b))
    }
}

/// Back-reference from cubes to the coloured pair that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeOrigin {
    pub n: usize,
    /// `keys[d][i]` describes cube `i` of dimension `d`.
    pub keys: Vec<Vec<CubeKey>>,
}

/// A finite cube complex. Cells are indexed per dimension; every `d`-cube
/// with `d ≥ 1` has exactly `2d` distinct facets and `2^d` distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeComplex {
    ids: Vec<Vec<String>>,
    facets: Vec<Vec<Vec<usize>>>,
    index: HashMap<String, (usize, usize)>,
    origin: Option<CubeOrigin>,
}

impl CubeComplex {
    pub fn empty() -> Self {
        CubeComplex { ids: Vec::new(), facets: Vec::new(), index: HashMap::new(), origin: None }
    }

    /// Builds a complex from levels of `(id, facet indices)`; `levels[0]` are
    /// vertices and their facet lists are ignored. Validated.
    pub fn from_levels(levels: Vec<Vec<(String, Vec<usize>)>>, origin: Option<CubeOrigin>) -> Result<Self> {
        let mut ids = Vec::with_capacity(levels.len());
        let mut facets = Vec::with_capacity(levels.len());
        let mut index = HashMap::new();
        for (d, level) in levels.into_iter().enumerate() {
            let mut lids = Vec::with_capacity(level.len());
            let mut lfacets = Vec::with_capacity(level.len());
            for (i, (id, fs)) in level.into_iter().enumerate() {
                if index.insert(id.clone(), (d, i)).is_some() {
                    return Err(Error::MalformedCubeComplex(format!("cell id `{id}` used twice")));
                }
                lids.push(id);
                lfacets.push(if d == 0 { Vec::new() } else { fs });
            }
            ids.push(lids);
            facets.push(lfacets);
        }
        while ids.last().is_some_and(|l| l.is_empty()) {
            ids.pop();
            facets.pop();
        }
        let out = CubeComplex { ids, facets, index, origin };
        out.validate()?;
        Ok(out)
    }

    /// Builds a complex from vertex ids and cubes given as `(id, facet ids)`.
    /// A cube's dimension is half its facet count.
    pub fn from_cells(vertices: &[String], cubes: &[(String, Vec<String>)]) -> Result<Self> {
        let mut dim_of: HashMap<&str, usize> = vertices.iter().map(|v| (v.as_str(), 0)).collect();
        for (id, fs) in cubes {
            if fs.is_empty() || fs.len() % 2 == 1 {
                return Err(Error::MalformedCubeComplex(format!("cube `{id}` has {} facets", fs.len())));
            }
            if dim_of.insert(id.as_str(), fs.len() / 2).is_some() {
                return Err(Error::MalformedCubeComplex(format!("cell id `{id}` used twice")));
            }
        }
        let top = dim_of.values().copied().max().unwrap_or(0);
        let mut levels: Vec<Vec<(String, Vec<String>)>> = vec![Vec::new(); top + 1];
        levels[0] = vertices.iter().map(|v| (v.clone(), Vec::new())).collect();
        for (id, fs) in cubes {
            levels[fs.len() / 2].push((id.clone(), fs.clone()));
        }
        let pos: HashMap<&str, usize> = levels
            .iter()
            .flat_map(|l| l.iter().enumerate().map(|(i, (id, _))| (id.as_str(), i)))
            .collect();
        let mut resolved = Vec::with_capacity(levels.len());
        for (d, level) in levels.iter().enumerate() {
            let mut out = Vec::with_capacity(level.len());
            for (id, fs) in level {
                let mut idx = Vec::with_capacity(fs.len());
                for f in fs {
                    match dim_of.get(f.as_str()) {
                        Some(&fd) if fd + 1 == d => idx.push(pos[f.as_str()]),
                        Some(_) => {
                            return Err(Error::MalformedCubeComplex(format!(
                                "facet `{f}` of `{id}` has the wrong dimension"
                            )))
                        }
                        None => return Err(Error::MalformedCubeComplex(format!("unknown facet `{f}` of `{id}`"))),
                    }
                }
                out.push((id.clone(), idx));
            }
            resolved.push(out);
        }
        Self::from_levels(resolved, None)
    }

    /// The 1-dimensional complex of a simple graph.
    pub fn from_graph<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let vs: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let es: Vec<(String, Vec<String>)> = edges
            .iter()
            .map(|(u, v)| (format!("{}-{}", u.as_ref(), v.as_ref()), vec![u.as_ref().to_string(), v.as_ref().to_string()]))
            .collect();
        Self::from_cells(&vs, &es)
    }

    /// Cartesian product; cell `(x, y)` gets id `x*y`.
    pub fn product(&self, other: &CubeComplex) -> CubeComplex {
        if self.top_dim() < 0 || other.top_dim() < 0 {
            return CubeComplex::empty();
        }
        let (p, q) = (self.ids.len(), other.ids.len());
        let mut pos: HashMap<(usize, usize, usize, usize), usize> = HashMap::new();
        let mut levels: Vec<Vec<(String, Vec<usize>)>> = vec![Vec::new(); p + q - 1];
        for d in 0..(p + q - 1) {
            for dx in 0..p {
                let Some(dy) = d.checked_sub(dx) else { continue };
                if dy >= q {
                    continue;
                }
                for x in 0..self.ids[dx].len() {
                    for y in 0..other.ids[dy].len() {
                        let mut fs = Vec::new();
                        if dx > 0 {
                            fs.extend(self.facets[dx][x].iter().map(|&f| pos[&(dx - 1, f, dy, y)]));
                        }
                        if dy > 0 {
                            fs.extend(other.facets[dy][y].iter().map(|&g| pos[&(dx, x, dy - 1, g)]));
                        }
                        pos.insert((dx, x, dy, y), levels[d].len());
                        levels[d].push((format!("{}*{}", self.ids[dx][x], other.ids[dy][y]), fs));
                    }
                }
            }
        }
        Self::from_levels(levels, None).expect("product of cube complexes")
    }

    fn validate(&self) -> Result<()> {
        for d in 1..self.ids.len() {
            for (i, fs) in self.facets[d].iter().enumerate() {
                if fs.iter().any(|&f| f >= self.ids[d - 1].len()) {
                    return Err(Error::MalformedCubeComplex(format!("cube `{}` has a facet out of range", self.ids[d][i])));
                }
            }
        }
        let vsets = cells::vertex_sets(self);
        for d in 1..self.ids.len() {
            for (i, fs) in self.facets[d].iter().enumerate() {
                let id = &self.ids[d][i];
                if fs.len() != 2 * d {
                    return Err(Error::MalformedCubeComplex(format!("{d}-cube `{id}` has {} facets", fs.len())));
                }
                if fs.iter().collect::<HashSet<_>>().len() != fs.len() {
                    return Err(Error::MalformedCubeComplex(format!("cube `{id}` repeats a facet")));
                }
                let vs = &vsets[d + 1][i];
                if vs.len() != 1 << d {
                    return Err(Error::MalformedCubeComplex(format!("cube `{id}` has {} vertices", vs.len())));
                }
                // each vertex of a d-cube lies on exactly d of its facets
                for v in vs {
                    let k = fs.iter().filter(|&&f| vsets[d][f].contains(v)).count();
                    if k != d {
                        return Err(Error::MalformedCubeComplex(format!("cube `{id}` is not cube-shaped")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Rebuilds a coupled-link complex from its cube keys. Facets of `Q(a, b)`
    /// are `Q(a - i, b)` and `Q(a, b - i)` for each overlap colour `i`; all
    /// of them must be listed. Cubes are sorted by key within each dimension.
    pub fn from_keys(n: usize, keys: impl IntoIterator<Item = CubeKey>) -> Result<Self> {
        let mut by_dim: Vec<BTreeSet<CubeKey>> = Vec::new();
        for k in keys {
            let covered: BTreeSet<Colour> = k.a.keys().chain(k.b.keys()).copied().collect();
            if covered != (1..=n).collect() {
                return Err(Error::MalformedCubeComplex(format!("cube `{}` does not cover colours 1..={n}", k.id())));
            }
            let d = k.dim();
            if by_dim.len() <= d {
                by_dim.resize(d + 1, BTreeSet::new());
            }
            by_dim[d].insert(k);
        }
        let pos: HashMap<&CubeKey, usize> =
            by_dim.iter().flat_map(|l| l.iter().enumerate().map(|(i, k)| (k, i))).collect();
        let mut levels = Vec::with_capacity(by_dim.len());
        for level in &by_dim {
            let mut out = Vec::with_capacity(level.len());
            for k in level {
                let mut fs = Vec::new();
                for c in k.overlap() {
                    for face in [
                        CubeKey { a: k.a.iter().filter(|e| *e.0 != c).map(|(x, y)| (*x, y.clone())).collect(), b: k.b.clone() },
                        CubeKey { a: k.a.clone(), b: k.b.iter().filter(|e| *e.0 != c).map(|(x, y)| (*x, y.clone())).collect() },
                    ] {
                        let i = pos.get(&face).ok_or_else(|| {
                            Error::MalformedCubeComplex(format!("facet `{}` of `{}` is missing", face.id(), k.id()))
                        })?;
                        fs.push(*i);
                    }
                }
                out.push((k.id(), fs));
            }
            levels.push(out);
        }
        let keys = by_dim.into_iter().map(|l| l.into_iter().collect()).collect();
        Self::from_levels(levels, Some(CubeOrigin { n, keys }))
    }

    pub fn origin(&self) -> Option<&CubeOrigin> {
        self.origin.as_ref()
    }

    pub fn id(&self, dim: usize, cell: usize) -> &str {
        &self.ids[dim][cell]
    }

    pub fn ids(&self, dim: usize) -> &[String] {
        self.ids.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn find(&self, id: &str) -> Option<(usize, usize)> {
        self.index.get(id).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.ids(0).len()
    }

    /// Number of cubes per dimension `0..=top`.
    pub fn counts(&self) -> Vec<usize> {
        self.ids.iter().map(Vec::len).collect()
    }

    /// Endpoints of an edge.
    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        let fs = &self.facets[1][edge];
        (fs[0], fs[1])
    }

    /// Sorted vertex indices of a cube.
    pub fn cube_vertices(&self, dim: usize, cell: usize) -> Vec<usize> {
        let mut frontier: BTreeSet<usize> = BTreeSet::from([cell]);
        for d in (1..=dim).rev() {
            frontier = frontier.iter().flat_map(|&c| self.facets[d][c].iter().copied()).collect();
        }
        frontier.into_iter().collect()
    }

    /// Sorted neighbour lists of the 1-skeleton.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in 0..self.ids(1).len() {
            let (u, v) = self.endpoints(e);
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        adj
    }

    /// Connected components of the 1-skeleton as a vertex labelling.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; adj.len()];
        let mut count = 0;
        for s in 0..adj.len() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = count;
                        stack.push(v);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    /// The empty complex is not connected.
    pub fn is_connected(&self) -> bool {
        self.components().0 == 1
    }

    /// `(dim, is_pure)`, with dimension `-1` for the empty complex.
    pub fn dimension(&self) -> (isize, bool) {
        (self.top_dim(), cells::is_pure(self))
    }

    pub fn euler_characteristic(&self) -> i64 {
        cells::euler_characteristic(self)
    }

    /// Link of a cube read off the coface relation. Its vertices are the
    /// `(d+1)`-cubes containing the cube, labelled by their ids.
    pub fn link(&self, dim: usize, cell: usize) -> Result<SimplicialComplex> {
        let up = cells::cofacets(self);
        self.link_with(&up, dim, cell)
    }

    /// [`CubeComplex::link`] with precomputed cofacets (see [`cells::cofacets`]).
    pub fn link_with(&self, up: &[Vec<Vec<usize>>], dim: usize, cell: usize) -> Result<SimplicialComplex> {
        Ok(cells::cell_link(self, up, dim as isize, cell)?.complex)
    }
}

impl CellComplex for CubeComplex {
    fn top_dim(&self) -> isize {
        self.ids.len() as isize - 1
    }

    fn cell_count(&self, dim: isize) -> usize {
        match dim {
            -1 => 1,
            d if d < 0 => 0,
            d => self.ids(d as usize).len(),
        }
    }

    fn facets(&self, dim: isize, cell: usize) -> &[usize] {
        match dim {
            0 => &VERTEX_FACETS,
            d if d > 0 => &self.facets[d as usize][cell],
            _ => &[],
        }
    }

    fn cell_label(&self, dim: isize, cell: usize) -> String {
        if dim < 0 {
            "()".to_string()
        } else {
            self.ids[dim as usize][cell].clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(len: usize) -> CubeComplex {
        let vs: Vec<String> = (0..=len).map(|i| format!("p{i}")).collect();
        let es: Vec<(String, String)> = (0..len).map(|i| (vs[i].clone(), vs[i + 1].clone())).collect();
        CubeComplex::from_graph(&vs, &es).unwrap()
    }

    fn square() -> CubeComplex {
        path(1).product(&path(1))
    }

    #[test]
    fn products() {
        assert_eq!(square().counts(), vec![4, 4, 1]);
        assert_eq!(path(2).product(&path(2)).counts(), vec![9, 12, 4]);
        let cube = square().product(&path(1));
        assert_eq!(cube.counts(), vec![8, 12, 6, 1]);
        assert_eq!(cube.euler_characteristic(), 1);
        assert_eq!(cube.cube_vertices(3, 0).len(), 8);
    }

    #[test]
    fn validation() {
        let vs: Vec<String> = ["a", "b"].map(String::from).to_vec();
        let loop_edge = [("e".to_string(), vec!["a".to_string(), "a".to_string()])];
        assert!(matches!(CubeComplex::from_cells(&vs, &loop_edge), Err(Error::MalformedCubeComplex(_))));
        let bad = [("e".to_string(), vec!["a".to_string()])];
        assert!(CubeComplex::from_cells(&vs, &bad).is_err());
        let unknown = [("e".to_string(), vec!["a".to_string(), "z".to_string()])];
        assert!(CubeComplex::from_cells(&vs, &unknown).is_err());
        // four edges of a square glued as a "square" whose vertex set is a triangle
        let vs: Vec<String> = ["a", "b", "c"].map(String::from).to_vec();
        let e = |n: &str, u: &str, v: &str| (n.to_string(), vec![u.to_string(), v.to_string()]);
        let cells = [
            e("ab", "a", "b"),
            e("bc", "b", "c"),
            e("ca", "c", "a"),
            e("ab2", "a", "b"),
            ("q".to_string(), ["ab", "bc", "ca", "ab2"].map(String::from).to_vec()),
        ];
        assert!(CubeComplex::from_cells(&vs, &cells).is_err());
    }

    #[test]
    fn links_in_a_grid() {
        let g = path(2).product(&path(2));
        let centre = g.find("p1*p1").unwrap();
        let l = g.link(centre.0, centre.1).unwrap();
        assert_eq!((l.vertex_count(), l.simplices(1).len()), (4, 4));
        let corner = g.find("p0*p0").unwrap();
        let l = g.link(corner.0, corner.1).unwrap();
        assert_eq!((l.vertex_count(), l.simplices(1).len()), (2, 1));
        let e = g.find("p0-p1*p1").unwrap();
        assert_eq!(g.link(e.0, e.1).unwrap().vertex_count(), 2);
    }

    #[test]
    fn dimension_and_connectivity() {
        assert_eq!(CubeComplex::empty().dimension(), (-1, true));
        assert!(!CubeComplex::empty().is_connected());
        assert_eq!(square().dimension(), (2, true));
        assert!(square().is_connected());
        let vs: Vec<String> = ["a", "b", "c"].map(String::from).to_vec();
        let g = CubeComplex::from_graph(&vs, &[("a".to_string(), "b".to_string())]).unwrap();
        assert_eq!(g.dimension(), (1, false));
        assert_eq!(g.components().0, 2);
    }
}
