//! Hyperplanes of finite cube complexes, half-space pocsets, and Sageev's
//! cube complex of a finite pocset.
//!
//! Pocset elements are indexed `2 * pair + side`, side `0` for `+` and `1`
//! for `-`, so the involution is `e ^ 1`. An ultrafilter on at most 64 pairs
//! is a bitmask whose bit `i` is set when it contains `(i, +)`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use petgraph::unionfind::UnionFind;

use crate::cells::CellComplex;
use crate::cube::CubeComplex;
use crate::error::{Error, Result};
use crate::simplicial::Colour;

/// A class of parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub id: usize,
    /// Sorted edge indices; the smallest fixes the order of the classes.
    pub edges: Vec<usize>,
}

/// The edge of a square sharing no endpoint with `e`.
fn opposite(x: &CubeComplex, square: usize, e: usize) -> usize {
    let (u, v) = x.endpoints(e);
    *x.facets(2, square)
        .iter()
        .find(|&&f| {
            let (a, b) = x.endpoints(f);
            f != e && a != u && a != v && b != u && b != v
        })
        .expect("validated squares have opposite edges")
}

/// Parallelism classes of edges, ordered by their smallest edge.
pub fn hyperplanes(x: &CubeComplex) -> Vec<Hyperplane> {
    let m = x.cell_count(1);
    let mut uf = UnionFind::<usize>::new(m);
    for s in 0..x.cell_count(2) {
        for &e in x.facets(2, s) {
            uf.union(e, opposite(x, s, e));
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let labels = uf.into_labeling();
    let mut first: HashMap<usize, usize> = HashMap::new();
    for e in 0..m {
        let head = *first.entry(labels[e]).or_insert(e);
        classes.entry(head).or_default().push(e);
    }
    classes.into_values().enumerate().map(|(id, edges)| Hyperplane { id, edges }).collect()
}

/// Hyperplane of every edge.
fn edge_classes(x: &CubeComplex, hs: &[Hyperplane]) -> Vec<usize> {
    let mut of = vec![0; x.cell_count(1)];
    for h in hs {
        for &e in &h.edges {
            of[e] = h.id;
        }
    }
    of
}

/// The coordinate colour of each hyperplane of a CLCC.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Directions {
    /// `None` when a class mixes colours.
    pub colours: Vec<Option<Colour>>,
    pub valid: bool,
}

impl Directions {
    /// Hyperplane ids per colour.
    pub fn buckets(&self) -> BTreeMap<Colour, Vec<usize>> {
        let mut out: BTreeMap<Colour, Vec<usize>> = BTreeMap::new();
        for (h, c) in self.colours.iter().enumerate() {
            if let Some(c) = c {
                out.entry(*c).or_default().push(h);
            }
        }
        out
    }
}

/// Assigns each hyperplane the single colour its edges change.
pub fn directions(x: &CubeComplex, hs: &[Hyperplane]) -> Result<Directions> {
    let origin = x.origin().ok_or(Error::MissingOrigin)?;
    let edge_colour = |e: usize| origin.keys[1][e].overlap()[0];
    let colours: Vec<Option<Colour>> = hs
        .iter()
        .map(|h| {
            let cs: BTreeSet<Colour> = h.edges.iter().map(|&e| edge_colour(e)).collect();
            (cs.len() == 1).then(|| *cs.first().unwrap())
        })
        .collect();
    let valid = colours.iter().all(Option::is_some);
    Ok(Directions { colours, valid })
}

/// Hyperplanes crossing in some square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingGraph {
    pub hyperplanes: usize,
    pub edges: BTreeSet<(usize, usize)>,
    /// Hyperplanes crossing themselves.
    pub self_crossings: BTreeSet<usize>,
}

impl CrossingGraph {
    /// No edge joins two hyperplanes of the same part.
    pub fn respects(&self, part: impl Fn(usize) -> Option<Colour>) -> bool {
        self.self_crossings.is_empty() && self.edges.iter().all(|&(g, h)| part(g) != part(h))
    }
}

pub fn crossing_graph(x: &CubeComplex, hs: &[Hyperplane]) -> CrossingGraph {
    let of = edge_classes(x, hs);
    let mut edges = BTreeSet::new();
    let mut self_crossings = BTreeSet::new();
    for s in 0..x.cell_count(2) {
        let e = x.facets(2, s)[0];
        let f = *x.facets(2, s).iter().find(|&&f| f != e && f != opposite(x, s, e)).expect("square");
        let (g, h) = (of[e], of[f]);
        match g.cmp(&h) {
            std::cmp::Ordering::Equal => {
                self_crossings.insert(g);
            }
            std::cmp::Ordering::Less => {
                edges.insert((g, h));
            }
            std::cmp::Ordering::Greater => {
                edges.insert((h, g));
            }
        }
    }
    CrossingGraph { hyperplanes: hs.len(), edges, self_crossings }
}

/// A finite pocset. `less[e]` holds every `f` with `e < f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pocset {
    ids: Vec<String>,
    less: Vec<BTreeSet<usize>>,
}

pub const fn element(pair: usize, minus: bool) -> usize {
    2 * pair + minus as usize
}

pub const fn star(e: usize) -> usize {
    e ^ 1
}

impl Pocset {
    /// Closes `relations` under transitivity and `s < t ⇒ t* < s*`, then
    /// checks that the result is a strict order in which no element is
    /// comparable to its complement.
    pub fn new(ids: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        if ids.iter().collect::<HashSet<_>>().len() != ids.len() {
            return Err(Error::InvalidPocset("pair ids must be distinct".into()));
        }
        if ids.len() > 64 {
            return Err(Error::InvalidPocset(format!("{} pairs; at most 64 are supported", ids.len())));
        }
        let m = 2 * ids.len();
        let mut rel = vec![vec![false; m]; m];
        for &(s, t) in relations {
            if s >= m || t >= m {
                return Err(Error::InvalidPocset(format!("relation ({s}, {t}) mentions an unknown element")));
            }
            rel[s][t] = true;
            rel[star(t)][star(s)] = true;
        }
        for k in 0..m {
            for i in 0..m {
                if rel[i][k] {
                    for j in 0..m {
                        if rel[k][j] {
                            rel[i][j] = true;
                        }
                    }
                }
            }
        }
        let p = Pocset { less: rel.iter().map(|r| (0..m).filter(|&j| r[j]).collect()).collect(), ids };
        for e in 0..m {
            if rel[e][e] {
                return Err(Error::InvalidPocset(format!("{} lies in a cycle of the order", p.element_name(e))));
            }
            if rel[e][star(e)] {
                return Err(Error::InvalidPocset(format!(
                    "{} is comparable to its complement",
                    p.element_name(e)
                )));
            }
        }
        Ok(p)
    }

    pub fn pair_count(&self) -> usize {
        self.ids.len()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn element_name(&self, e: usize) -> String {
        format!("{}{}", self.ids[e / 2], if e.is_multiple_of(2) { '+' } else { '-' })
    }

    pub fn is_less(&self, s: usize, t: usize) -> bool {
        self.less[s].contains(&t)
    }

    /// All strict relations `(s, t)` with `s < t`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        self.less.iter().enumerate().flat_map(|(s, ts)| ts.iter().map(move |&t| (s, t))).collect()
    }

    /// Whether `u` contains `e`.
    pub fn holds(u: u64, e: usize) -> bool {
        (u >> (e / 2) & 1 == 1) == e.is_multiple_of(2)
    }

    /// Exactly one of each pair is chosen by construction; checks that the
    /// chosen set is upward closed.
    pub fn is_ultrafilter(&self, u: u64) -> bool {
        (0..self.pair_count() * 2)
            .filter(|&e| Self::holds(u, e))
            .all(|e| self.less[e].iter().all(|&t| Self::holds(u, t)))
    }

    /// Every ultrafilter, sorted. Backtracks over pairs; choosing `e` is
    /// rejected when `e < f*` or `f < e*` for an earlier choice `f`.
    pub fn ultrafilters(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(self.pair_count());
        self.extend(&mut chosen, 0, &mut out);
        out.sort_unstable();
        out
    }

    fn extend(&self, chosen: &mut Vec<usize>, u: u64, out: &mut Vec<u64>) {
        let i = chosen.len();
        if i == self.pair_count() {
            out.push(u);
            return;
        }
        for minus in [false, true] {
            let e = element(i, minus);
            if chosen.iter().all(|&f| !self.is_less(e, star(f)) && !self.is_less(f, star(e))) {
                chosen.push(e);
                self.extend(chosen, if minus { u } else { u | 1 << i }, out);
                chosen.pop();
            }
        }
    }

    /// Name of an ultrafilter, e.g. `{h+,k-}`.
    pub fn ultrafilter_name(&self, u: u64) -> String {
        let parts: Vec<String> = (0..self.pair_count()).map(|i| self.element_name(element(i, u >> i & 1 == 0))).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Half-spaces of a hyperplane-separated complex, `sides[h] = [plus, minus]`
/// as sorted vertex sets. The minus side contains the first endpoint of the
/// first edge of the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfspaces {
    pub hyperplanes: Vec<Hyperplane>,
    pub sides: Vec<[BTreeSet<usize>; 2]>,
    pub pocset: Pocset,
}

/// The pocset of half-spaces ordered by inclusion. Every hyperplane must cut
/// the 1-skeleton into exactly two components.
pub fn halfspace_pocset(x: &CubeComplex) -> Result<Halfspaces> {
    let hs = hyperplanes(x);
    let of = edge_classes(x, &hs);
    let n = x.vertex_count();
    let mut sides = Vec::with_capacity(hs.len());
    for h in &hs {
        let mut uf = UnionFind::<usize>::new(n);
        for e in 0..x.cell_count(1) {
            if of[e] != h.id {
                let (u, v) = x.endpoints(e);
                uf.union(u, v);
            }
        }
        let labels = uf.into_labeling();
        let components: BTreeSet<usize> = labels.iter().copied().collect();
        if components.len() != 2 {
            return Err(Error::NotTwoSided { hyperplane: h.id, components: components.len() });
        }
        let (u, _) = x.endpoints(h.edges[0]);
        let minus: BTreeSet<usize> = (0..n).filter(|&v| labels[v] == labels[u]).collect();
        let plus: BTreeSet<usize> = (0..n).filter(|&v| labels[v] != labels[u]).collect();
        sides.push([plus, minus]);
    }
    let mut relations = Vec::new();
    for (g, sg) in sides.iter().enumerate() {
        for (h, sh) in sides.iter().enumerate() {
            if g == h {
                continue;
            }
            for (a, va) in sg.iter().enumerate() {
                for (b, vb) in sh.iter().enumerate() {
                    if va.is_subset(vb) {
                        relations.push((element(g, a == 1), element(h, b == 1)));
                    }
                }
            }
        }
    }
    let ids = hs.iter().map(|h| format!("h{}", h.id)).collect();
    let pocset = Pocset::new(ids, &relations)?;
    Ok(Halfspaces { hyperplanes: hs, sides, pocset })
}

/// `X(S)`: vertices are the ultrafilters, cubes are filled wherever their
/// 1-skeleton is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sageev {
    pub complex: CubeComplex,
    /// Ultrafilter of each vertex, in vertex order.
    pub ultrafilters: Vec<u64>,
}

pub fn sageev(s: &Pocset) -> Result<Sageev> {
    let us = s.ultrafilters();
    let m = s.pair_count();
    let pairs_name = |p: &[usize]| p.iter().map(|&i| s.ids()[i].as_str()).collect::<Vec<_>>().join(",");
    // a cube is (base, flipped pairs) with the base minus on every flipped pair
    let mut levels: Vec<Vec<(String, Vec<usize>)>> =
        vec![us.iter().map(|&u| (s.ultrafilter_name(u), Vec::new())).collect()];
    let mut cubes: Vec<(u64, Vec<usize>)> = us.iter().map(|&u| (u, Vec::new())).collect();
    let mut pos: HashMap<(u64, Vec<usize>), usize> = cubes.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    while !cubes.is_empty() {
        let mut next = Vec::new();
        let mut next_level = Vec::new();
        for (u, p) in &cubes {
            let lo = p.last().map_or(0, |&l| l + 1);
            for i in lo..m {
                let bit = 1u64 << i;
                if u & bit != 0 || !pos.contains_key(&(u | bit, p.clone())) {
                    continue;
                }
                let mut q = p.clone();
                q.push(i);
                let facets: Vec<usize> = q
                    .iter()
                    .flat_map(|&j| {
                        let rest: Vec<usize> = q.iter().copied().filter(|&k| k != j).collect();
                        [pos[&(*u, rest.clone())], pos[&(u | 1 << j, rest)]]
                    })
                    .collect();
                next_level.push((format!("{}[{}]", s.ultrafilter_name(*u), pairs_name(&q)), facets));
                next.push((*u, q));
            }
        }
        if next.is_empty() {
            break;
        }
        pos = next.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        levels.push(next_level);
        cubes = next;
    }
    Ok(Sageev { complex: CubeComplex::from_levels(levels, None)?, ultrafilters: us })
}

impl Sageev {
    /// Whether the half-space pocset of `X(S)` is `S` again: each hyperplane
    /// flips a single pair and half-space inclusion reproduces the order.
    pub fn recovers(&self, s: &Pocset) -> Result<bool> {
        let h = halfspace_pocset(&self.complex)?;
        if h.hyperplanes.len() != s.pair_count() {
            return Ok(false);
        }
        let x = &self.complex;
        // element of S for each half-space element of X(S)
        let mut to_s = vec![usize::MAX; 2 * s.pair_count()];
        for (hp, sides) in h.hyperplanes.iter().zip(&h.sides) {
            let (u, v) = x.endpoints(hp.edges[0]);
            let flip = self.ultrafilters[u] ^ self.ultrafilters[v];
            if flip.count_ones() != 1 {
                return Ok(false);
            }
            let pair = flip.trailing_zeros() as usize;
            if hp.edges.iter().any(|&e| {
                let (a, b) = x.endpoints(e);
                self.ultrafilters[a] ^ self.ultrafilters[b] != flip
            }) {
                return Ok(false);
            }
            for (side, vs) in sides.iter().enumerate() {
                let plus = vs.iter().all(|&w| self.ultrafilters[w] & flip != 0);
                to_s[element(hp.id, side == 1)] = element(pair, !plus);
            }
        }
        let mut seen = to_s.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != to_s.len() {
            return Ok(false);
        }
        let m = to_s.len();
        Ok((0..m).all(|e| (0..m).all(|f| h.pocset.is_less(e, f) == s.is_less(to_s[e], to_s[f]))))
    }
}

/// Number of hyperplanes separating two ultrafilters.
pub fn l1_distance(u: u64, v: u64) -> u32 {
    (u ^ v).count_ones()
}

/// Result of rebuilding a complex from its half-spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Duality {
    pub holds: bool,
    /// `(vertex id, ultrafilter name)` for every vertex.
    pub bijection: Vec<(String, String)>,
}

/// Checks `X(𝒞ℋ(X)) ≅ X` through the map sending a vertex to the set of
/// half-spaces containing it: it must be a bijection on vertices carrying
/// the vertex sets of cubes onto those of `X(𝒞ℋ(X))` in every dimension.
pub fn roller_duality_check(x: &CubeComplex) -> Result<Duality> {
    let h = halfspace_pocset(x)?;
    let y = sageev(&h.pocset)?;
    let image: Vec<u64> = (0..x.vertex_count())
        .map(|v| h.sides.iter().enumerate().filter(|(_, s)| s[0].contains(&v)).fold(0, |u, (i, _)| u | 1 << i))
        .collect();
    let bijection = image.iter().enumerate().map(|(v, &u)| (x.id(0, v).to_string(), h.pocset.ultrafilter_name(u))).collect();
    let index: HashMap<u64, usize> = y.ultrafilters.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let mut holds = image.len() == y.ultrafilters.len() && image.iter().all(|u| index.contains_key(u));
    if holds {
        let mapped: Vec<usize> = image.iter().map(|u| index[u]).collect();
        holds = mapped.iter().collect::<HashSet<_>>().len() == mapped.len() && x.top_dim() == y.complex.top_dim();
        for d in 1..=x.top_dim().max(0) as usize {
            if !holds {
                break;
            }
            let ours: BTreeSet<Vec<usize>> = (0..x.cell_count(d as isize))
                .map(|c| {
                    let mut vs: Vec<usize> = x.cube_vertices(d, c).iter().map(|&v| mapped[v]).collect();
                    vs.sort_unstable();
                    vs
                })
                .collect();
            let theirs: BTreeSet<Vec<usize>> =
                (0..y.complex.cell_count(d as isize)).map(|c| y.complex.cube_vertices(d, c)).collect();
            holds = ours == theirs && ours.len() == x.cell_count(d as isize);
        }
    }
    Ok(Duality { holds, bijection })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clcc::build_clcc;
    use crate::generators::surface_pair;

    fn path(len: usize) -> CubeComplex {
        let vs: Vec<String> = (0..=len).map(|i| format!("p{i}")).collect();
        let es: Vec<(String, String)> = (0..len).map(|i| (vs[i].clone(), vs[i + 1].clone())).collect();
        CubeComplex::from_graph(&vs, &es).unwrap()
    }

    fn c4() -> CubeComplex {
        CubeComplex::from_graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap()
    }

    fn square() -> CubeComplex {
        path(1).product(&path(1))
    }

    fn star_tree() -> CubeComplex {
        CubeComplex::from_graph(&["o", "x", "y", "z"], &[("o", "x"), ("o", "y"), ("o", "z")]).unwrap()
    }

    fn sizes(hs: &[Hyperplane]) -> Vec<usize> {
        hs.iter().map(|h| h.edges.len()).collect()
    }

    #[test]
    fn hyperplane_classes() {
        assert_eq!(sizes(&hyperplanes(&c4())), vec![1, 1, 1, 1]);
        assert_eq!(sizes(&hyperplanes(&square())), vec![2, 2]);
        let (a, b) = surface_pair(2, 2).unwrap();
        let torus = build_clcc(&a, &b).unwrap();
        assert_eq!(sizes(&hyperplanes(torus.cubes())), vec![4; 8]);
    }

    #[test]
    fn squares_pair_opposite_edges() {
        let (a, b) = surface_pair(2, 2).unwrap();
        let torus = build_clcc(&a, &b).unwrap();
        let hs = hyperplanes(torus.cubes());
        for s in 0..torus.cell_count(2) {
            let of = edge_classes(torus.cubes(), &hs);
            let fs = torus.facets(2, s);
            let e = fs[0];
            assert_eq!(of[e], of[opposite(torus.cubes(), s, e)]);
            let classes: BTreeSet<usize> = fs.iter().map(|&f| of[f]).collect();
            assert_eq!(classes.len(), 2);
        }
    }

    #[test]
    fn clcc_directions() {
        let (a, b) = surface_pair(2, 2).unwrap();
        let torus = build_clcc(&a, &b).unwrap();
        let hs = hyperplanes(torus.cubes());
        let dirs = directions(torus.cubes(), &hs).unwrap();
        assert!(dirs.valid);
        assert_eq!(dirs.buckets().values().map(Vec::len).collect::<Vec<_>>(), vec![4, 4]);
        let g = crossing_graph(torus.cubes(), &hs);
        assert_eq!(g.edges.len(), 16);
        assert!(g.respects(|h| dirs.colours[h]));

        let (a, b) = surface_pair(2, 3).unwrap();
        let x = build_clcc(&a, &b).unwrap();
        let hs = hyperplanes(x.cubes());
        let dirs = directions(x.cubes(), &hs).unwrap();
        assert!(dirs.valid);
        assert_eq!(dirs.buckets().len(), 2);
        assert!(crossing_graph(x.cubes(), &hs).respects(|h| dirs.colours[h]));

        assert_eq!(directions(&square(), &hyperplanes(&square())), Err(Error::MissingOrigin));
    }

    #[test]
    fn crossing_graphs() {
        let sq = square();
        assert_eq!(crossing_graph(&sq, &hyperplanes(&sq)).edges, BTreeSet::from([(0, 1)]));
        assert!(crossing_graph(&c4(), &hyperplanes(&c4())).edges.is_empty());
    }

    #[test]
    fn halfspaces() {
        let p = halfspace_pocset(&path(2)).unwrap();
        assert_eq!(p.pocset.pair_count(), 2);
        // h0 separates p0, h1 separates p2; minus sides contain p0 and p1
        let (h0m, h1m) = (element(0, true), element(1, true));
        assert!(p.pocset.is_less(h0m, h1m));
        assert!(p.pocset.is_less(star(h1m), star(h0m)));
        assert_eq!(p.pocset.relations().len(), 2);

        let p = halfspace_pocset(&square()).unwrap();
        assert_eq!(p.pocset.pair_count(), 2);
        assert!(p.pocset.relations().is_empty());

        let (a, b) = surface_pair(2, 2).unwrap();
        let torus = build_clcc(&a, &b).unwrap();
        assert!(matches!(
            halfspace_pocset(torus.cubes()),
            Err(Error::NotTwoSided { components: 1, .. })
        ));
    }

    fn pocset(pairs: &[&str], rel: &[(usize, usize)]) -> Pocset {
        Pocset::new(pairs.iter().map(|s| s.to_string()).collect(), rel).unwrap()
    }

    #[test]
    fn sageev_complexes() {
        let one = pocset(&["h"], &[]);
        assert_eq!(sageev(&one).unwrap().complex.counts(), vec![2, 1]);

        let two = pocset(&["h", "k"], &[]);
        assert_eq!(sageev(&two).unwrap().complex.counts(), vec![4, 4, 1]);

        let nested = pocset(&["h", "k"], &[(element(0, false), element(1, false))]);
        let x = sageev(&nested).unwrap();
        assert_eq!(x.complex.counts(), vec![3, 2]);
        let names: BTreeSet<String> = x.ultrafilters.iter().map(|&u| nested.ultrafilter_name(u)).collect();
        assert_eq!(names, BTreeSet::from(["{h+,k+}".into(), "{h-,k+}".into(), "{h-,k-}".into()]));
        for p in [&one, &two, &nested] {
            assert!(sageev(p).unwrap().recovers(p).unwrap());
        }
    }

    #[test]
    fn invalid_pocsets() {
        let ids = || vec!["h".to_string(), "k".to_string()];
        let cyclic = [(element(0, false), element(1, false)), (element(1, false), element(0, false))];
        assert!(matches!(Pocset::new(ids(), &cyclic), Err(Error::InvalidPocset(_))));
        let self_dual = [(element(0, false), element(0, true))];
        assert!(matches!(Pocset::new(ids(), &self_dual), Err(Error::InvalidPocset(_))));
        assert!(matches!(Pocset::new(vec!["h".into(), "h".into()], &[]), Err(Error::InvalidPocset(_))));
    }

    #[test]
    fn duality() {
        for x in [path(2), square(), star_tree(), path(3).product(&path(2)), square().product(&path(1))] {
            let d = roller_duality_check(&x).unwrap();
            assert!(d.holds, "{:?}", x.counts());
            assert_eq!(d.bijection.len(), x.vertex_count());
        }
        assert!(roller_duality_check(&c4()).is_err());
    }

    #[test]
    fn distances_count_separating_hyperplanes() {
        let s = pocset(&["a", "b", "c"], &[(element(0, false), element(1, false))]);
        let x = sageev(&s).unwrap();
        let adj = x.complex.adjacency();
        for start in 0..adj.len() {
            let mut dist = vec![usize::MAX; adj.len()];
            dist[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            for (v, &d) in dist.iter().enumerate() {
                assert_eq!(d as u32, l1_distance(x.ultrafilters[start], x.ultrafilters[v]));
            }
        }
    }
}
