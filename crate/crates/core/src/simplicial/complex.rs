use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::cells::{CellComplex, VERTEX_FACETS};
use crate::error::{Error, Result};

/// A simplex identified with its sorted vertex set. The empty simplex has no
/// vertices and dimension `-1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        Simplex::new(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        !self.0.iter().any(|v| other.contains(*v))
    }

    pub fn without(&self, v: usize) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    pub fn with(&self, v: usize) -> Simplex {
        let mut vs = self.0.clone();
        if let Err(pos) = vs.binary_search(&v) {
            vs.insert(pos, v);
        }
        Simplex(vs)
    }

    /// Codimension-one faces, in the order obtained by dropping each vertex.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut vs = self.0.clone();
            vs.remove(i);
            Simplex(vs)
        })
    }
}

impl From<Vec<usize>> for Simplex {
    fn from(v: Vec<usize>) -> Self {
        Simplex::new(v)
    }
}

/// A finite abstract simplicial complex with labelled vertices.
///
/// The family of simplices is downward closed and always contains the empty
/// simplex. Every declared vertex is a 0-simplex. Simplices are stored per
/// dimension in lexicographic order, which fixes the cell indices used by the
/// homology code.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    by_dim: Vec<Vec<Simplex>>,
    index: HashMap<Simplex, usize>,
    facets: Vec<Vec<Vec<usize>>>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.labels)
            .field("maximal", &self.maximal_simplices().iter().map(|s| self.simplex_labels(s)).collect::<Vec<_>>())
            .finish()
    }
}

impl SimplicialComplex {
    /// The complex with no vertices; its only simplex is the empty one.
    pub fn empty() -> Self {
        Self::from_simplices(Vec::new(), Vec::new()).expect("empty complex is valid")
    }

    /// Builds the downward closure of `generators` over vertices `0..labels.len()`.
    pub fn from_simplices(labels: Vec<String>, generators: Vec<Simplex>) -> Result<Self> {
        let mut label_index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if label_index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let mut all: HashSet<Simplex> = HashSet::new();
        all.insert(Simplex::empty());
        for v in 0..labels.len() {
            all.insert(Simplex(vec![v]));
        }
        let mut stack = Vec::new();
        for g in generators {
            if let Some(&bad) = g.vertices().iter().find(|&&v| v >= labels.len()) {
                return Err(Error::UnknownVertex(format!("#{bad}")));
            }
            stack.push(g);
        }
        while let Some(s) = stack.pop() {
            if s.len() <= 1 || all.contains(&s) {
                continue;
            }
            stack.extend(s.facets());
            all.insert(s);
        }
        let top = all.iter().map(Simplex::len).max().unwrap_or(0);
        let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new(); top + 1];
        for s in all {
            by_dim[s.len()].push(s);
        }
        for level in &mut by_dim {
            level.sort_unstable();
        }
        let mut index = HashMap::new();
        for level in &by_dim {
            for (i, s) in level.iter().enumerate() {
                index.insert(s.clone(), i);
            }
        }
        let facets = by_dim
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|s| s.facets().map(|f| index[&f]).collect())
                    .collect()
            })
            .collect();
        Ok(SimplicialComplex { labels, label_index, by_dim, index, facets })
    }

    /// Builds a complex from maximal simplices given by vertex labels. Vertex
    /// labels are collected from the lists and sorted.
    pub fn from_facets<S: AsRef<str>>(maximal: &[Vec<S>]) -> Self {
        let labels: BTreeSet<String> =
            maximal.iter().flatten().map(|s| s.as_ref().to_string()).collect();
        let labels: Vec<String> = labels.into_iter().collect();
        let idx: HashMap<&str, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let gens = maximal
            .iter()
            .map(|m| Simplex::new(m.iter().map(|s| idx[s.as_ref()]).collect()))
            .collect();
        Self::from_simplices(labels, gens).expect("labels are unique by construction")
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn dim(&self) -> isize {
        self.by_dim.len() as isize - 2
    }

    /// Simplices of dimension `dim` (`-1` gives the empty simplex).
    pub fn simplices(&self, dim: isize) -> &[Simplex] {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.by_dim.get(i))
            .map_or(&[], Vec::as_slice)
    }

    /// All simplices, by increasing dimension.
    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    pub fn simplex_count(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    /// Index of `s` within its dimension.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn simplex_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Simplex> {
        labels
            .iter()
            .map(|l| self.vertex(l.as_ref()).ok_or_else(|| Error::UnknownVertex(l.as_ref().to_string())))
            .collect::<Result<Vec<_>>>()
            .map(Simplex::new)
    }

    pub fn simplex_labels(&self, s: &Simplex) -> Vec<String> {
        s.vertices().iter().map(|&v| self.labels[v].clone()).collect()
    }

    /// Simplices that are not a proper face of another simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut has_coface: Vec<Vec<bool>> = self.by_dim.iter().map(|l| vec![false; l.len()]).collect();
        for (d, level) in self.facets.iter().enumerate().skip(1) {
            for fs in level {
                for &f in fs {
                    has_coface[d - 1][f] = true;
                }
            }
        }
        let mut out = Vec::new();
        for (d, level) in self.by_dim.iter().enumerate() {
            for (i, s) in level.iter().enumerate() {
                if !has_coface[d][i] {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Whether every maximal simplex has the top dimension.
    pub fn is_pure(&self) -> bool {
        let top = self.dim();
        self.maximal_simplices().iter().all(|s| s.dim() == top)
    }

    /// Sorted neighbour lists of the 1-skeleton.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.labels.len()];
        for e in self.simplices(1) {
            let (u, v) = (e.vertices()[0], e.vertices()[1]);
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.contains(&Simplex::new(vec![u, v]))
    }

    /// A smallest clique of the 1-skeleton that spans no simplex, if any.
    ///
    /// Every proper subset of the returned clique is a simplex.
    pub fn flag_witness(&self) -> Option<Simplex> {
        let adj = self.adjacency();
        for d in 1..=self.dim() {
            for s in self.simplices(d) {
                let last = *s.vertices().last().expect("d >= 1");
                for &v in adj[s.vertices()[0]].iter().filter(|&&v| v > last) {
                    if s.vertices().iter().all(|&u| adj[u].binary_search(&v).is_ok()) {
                        let candidate = s.with(v);
                        if !self.contains(&candidate) {
                            return Some(candidate);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_flag(&self) -> bool {
        self.flag_witness().is_none()
    }

    /// Restriction to the simplices in `keep`, re-indexed onto the vertices
    /// they use. Labels are preserved; vertex order follows the old order.
    pub(crate) fn restrict<'a>(&self, vertices: &BTreeSet<usize>, keep: impl Iterator<Item = &'a Simplex>) -> (SimplicialComplex, Vec<usize>) {
        let old: Vec<usize> = vertices.iter().copied().collect();
        let remap: HashMap<usize, usize> = old.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = old.iter().map(|&v| self.labels[v].clone()).collect();
        let gens = keep
            .map(|s| Simplex::new(s.vertices().iter().map(|v| remap[v]).collect()))
            .collect();
        let k = SimplicialComplex::from_simplices(labels, gens).expect("sub-family of a valid complex");
        (k, old)
    }

    /// The link `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`. The link of the empty simplex is `K`.
    pub fn link(&self, sigma: &Simplex) -> Result<SimplicialComplex> {
        Ok(self.link_with_map(sigma)?.0)
    }

    /// Link plus, for each link vertex, its index in `self`.
    pub fn link_with_map(&self, sigma: &Simplex) -> Result<(SimplicialComplex, Vec<usize>)> {
        if !self.contains(sigma) {
            return Err(Error::MissingSimplex(self.simplex_labels(sigma)));
        }
        let members: Vec<&Simplex> = self
            .iter()
            .filter(|t| t.is_disjoint(sigma) && self.contains(&t.union(sigma)))
            .collect();
        let vertices: BTreeSet<usize> = members.iter().filter(|t| t.len() == 1).map(|t| t.vertices()[0]).collect();
        Ok(self.restrict(&vertices, members.into_iter()))
    }

    /// The full subcomplex spanned by `vertices`.
    pub fn full_subcomplex(&self, vertices: &BTreeSet<usize>) -> SimplicialComplex {
        self.full_subcomplex_with_map(vertices).0
    }

    pub fn full_subcomplex_with_map(&self, vertices: &BTreeSet<usize>) -> (SimplicialComplex, Vec<usize>) {
        let keep = self.iter().filter(|s| s.vertices().iter().all(|v| vertices.contains(v)));
        self.restrict(vertices, keep)
    }

    /// Simplicial join. Vertices of `self` come first, then those of `other`.
    /// Labels are kept when the two label sets are disjoint; otherwise they
    /// are prefixed with `L:` and `R:`.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let clash = other.labels.iter().any(|l| self.label_index.contains_key(l));
        let labels: Vec<String> = if clash {
            self.labels
                .iter()
                .map(|l| format!("L:{l}"))
                .chain(other.labels.iter().map(|l| format!("R:{l}")))
                .collect()
        } else {
            self.labels.iter().chain(other.labels.iter()).cloned().collect()
        };
        let shift = self.labels.len();
        let left_max = self.maximal_simplices();
        let right_max = other.maximal_simplices();
        let mut gens = Vec::with_capacity(left_max.len() * right_max.len());
        for s in &left_max {
            for t in &right_max {
                let mut vs = s.vertices().to_vec();
                vs.extend(t.vertices().iter().map(|v| v + shift));
                gens.push(Simplex(vs));
            }
        }
        SimplicialComplex::from_simplices(labels, gens).expect("join of valid complexes")
    }

    /// Join of simplices `s ⊂ self` and `t ⊂ other` inside `self.join(other)`.
    pub fn join_simplex(&self, s: &Simplex, t: &Simplex) -> Simplex {
        let shift = self.labels.len();
        let mut vs = s.vertices().to_vec();
        vs.extend(t.vertices().iter().map(|v| v + shift));
        Simplex(vs)
    }

    /// All chordless 4-cycles of the 1-skeleton as `[v, u₊, w, u₋]`, where
    /// `v` is the smallest of the four vertices and `u₊ < u₋`. Sorted.
    ///
    /// Scans non-adjacent pairs `(v, w)` with at least two common neighbours
    /// and then non-adjacent pairs among those neighbours.
    pub fn empty_squares(&self) -> Vec<[usize; 4]> {
        let adj = self.adjacency();
        let adjacent = |a: usize, b: usize| adj[a].binary_search(&b).is_ok();
        let mut out = Vec::new();
        let n = self.labels.len();
        for v in 0..n {
            for w in (v + 1)..n {
                if adjacent(v, w) {
                    continue;
                }
                let common: Vec<usize> = adj[v]
                    .iter()
                    .copied()
                    .filter(|&u| u > v && adj[w].binary_search(&u).is_ok())
                    .collect();
                for (i, &x) in common.iter().enumerate() {
                    for &y in &common[i + 1..] {
                        if !adjacent(x, y) {
                            out.push([v, x, w, y]);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        crate::cells::euler_characteristic(self)
    }

    /// Same complex with every label passed through `f`.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<SimplicialComplex> {
        let labels = self.labels.iter().map(|l| f(l)).collect();
        SimplicialComplex::from_simplices(labels, self.maximal_simplices())
    }

    /// Label-level description: sorted label lists of all non-empty simplices.
    pub fn label_simplices(&self) -> BTreeSet<Vec<String>> {
        self.iter()
            .filter(|s| !s.is_empty())
            .map(|s| {
                let mut l = self.simplex_labels(s);
                l.sort();
                l
            })
            .collect()
    }

    /// Whether the 1-skeleton is connected. The complex with no vertices is not.
    pub fn is_connected(&self) -> bool {
        let n = self.labels.len();
        if n == 0 {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl CellComplex for SimplicialComplex {
    fn top_dim(&self) -> isize {
        self.dim()
    }

    fn cell_count(&self, dim: isize) -> usize {
        self.simplices(dim).len()
    }

    fn facets(&self, dim: isize, cell: usize) -> &[usize] {
        if dim == 0 {
            return &VERTEX_FACETS;
        }
        &self.facets[(dim + 1) as usize][cell]
    }

    fn cell_label(&self, dim: isize, cell: usize) -> String {
        format!("[{}]", self.simplex_labels(&self.simplices(dim)[cell]).join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(len: usize) -> SimplicialComplex {
        let edges: Vec<Vec<String>> =
            (0..len).map(|i| vec![format!("v{i}"), format!("v{}", (i + 1) % len)]).collect();
        SimplicialComplex::from_facets(&edges)
    }

    #[test]
    fn closure_contains_empty_and_all_faces() {
        let k = SimplicialComplex::from_facets(&[vec!["a", "b", "c"]]);
        assert_eq!(k.simplices(-1).len(), 1);
        assert_eq!(k.simplices(0).len(), 3);
        assert_eq!(k.simplices(1).len(), 3);
        assert_eq!(k.simplices(2).len(), 1);
        assert_eq!(k.dim(), 2);
    }

    #[test]
    fn empty_triangle_is_not_flag() {
        let k = cycle(3);
        let w = k.flag_witness().unwrap();
        assert_eq!(k.simplex_labels(&w), vec!["v0", "v1", "v2"]);
        assert!(cycle(4).is_flag());
    }

    #[test]
    fn flag_witness_is_minimal() {
        // boundary of a tetrahedron: the 4-clique is missing, all triangles present
        let k = SimplicialComplex::from_facets(&[
            vec!["a", "b", "c"],
            vec!["a", "b", "d"],
            vec!["a", "c", "d"],
            vec!["b", "c", "d"],
        ]);
        assert_eq!(k.flag_witness().unwrap().len(), 4);
    }

    #[test]
    fn squares_of_small_cycles() {
        assert_eq!(cycle(4).empty_squares().len(), 1);
        assert!(cycle(5).empty_squares().is_empty());
        let mut edges: Vec<Vec<&str>> = vec![vec!["v0", "v1"], vec!["v1", "v2"], vec!["v2", "v3"], vec!["v3", "v0"]];
        edges.push(vec!["v0", "v2"]);
        assert!(SimplicialComplex::from_facets(&edges).empty_squares().is_empty());
    }

    #[test]
    fn link_of_empty_simplex_is_whole_complex() {
        let k = cycle(6);
        assert_eq!(k.link(&Simplex::empty()).unwrap(), k);
    }

    #[test]
    fn link_of_missing_simplex_errors() {
        let k = cycle(6);
        let s = Simplex::new(vec![0, 3]);
        assert!(matches!(k.link(&s), Err(Error::MissingSimplex(_))));
    }

    #[test]
    fn join_with_empty_complex_is_identity() {
        let k = cycle(5);
        assert_eq!(k.join(&SimplicialComplex::empty()), k);
    }

    #[test]
    fn join_of_two_point_pairs_is_square() {
        let s0 = SimplicialComplex::from_facets(&[vec!["p"], vec!["q"]]);
        let t0 = SimplicialComplex::from_facets(&[vec!["x"], vec!["y"]]);
        let j = s0.join(&t0);
        assert_eq!(j.simplices(0).len(), 4);
        assert_eq!(j.simplices(1).len(), 4);
        assert_eq!(j.dim(), 1);
        assert_eq!(j.empty_squares().len(), 1);
    }

    #[test]
    fn clashing_labels_are_prefixed_in_joins() {
        let k = SimplicialComplex::from_facets(&[vec!["p"], vec!["q"]]);
        let j = k.join(&k);
        assert!(j.vertex("L:p").is_some() && j.vertex("R:q").is_some());
    }

    #[test]
    fn duplicate_labels_are_rejected() {
        let r = SimplicialComplex::from_simplices(vec!["a".into(), "a".into()], vec![]);
        assert_eq!(r, Err(Error::DuplicateVertex("a".into())));
    }
}
