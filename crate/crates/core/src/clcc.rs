//! Cube complexes with coupled links.
//!
//! For `n`-coloured complexes `Γ_A`, `Γ_B`, the `d`-cubes of `X = X(Γ_A, Γ_B)`
//! are the pairs `Q(a, b)` with `a ∈ Γ_A`, `b ∈ Γ_B`, whose colour sets
//! cover `{1..n}` and share exactly `d` colours. Vertices are complementary
//! pairs; `∅` is a simplex of both sides.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::cells::{self, CellComplex};
use crate::cube::{CubeComplex, CubeKey, CubeOrigin};
use crate::error::{Error, Result};
use crate::simplicial::{ColoredComplex, Simplex, SimplicialComplex};

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Whether colour sets `a` and `b` (as bitmasks) partition `{1..n}`.
pub fn complementary(a: u64, b: u64, n: usize) -> bool {
    a & b == 0 && a | b == full_mask(n)
}

/// Simplices of `k` bucketed by colour mask.
fn by_mask(k: &ColoredComplex) -> HashMap<u64, Vec<Simplex>> {
    let mut out: HashMap<u64, Vec<Simplex>> = HashMap::new();
    for s in k.iter() {
        out.entry(k.colour_mask(s)).or_default().push(s.clone());
    }
    out
}

/// A coupled-link cube complex together with its defining pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clcc {
    a: ColoredComplex,
    b: ColoredComplex,
    keys: Vec<Vec<(Simplex, Simplex)>>,
    lookup: HashMap<(Simplex, Simplex), usize>,
    cubes: CubeComplex,
}

/// Builds `X(Γ_A, Γ_B)`. Cubes of each dimension are sorted by `(a, b)`.
pub fn build_clcc(a: &ColoredComplex, b: &ColoredComplex) -> Result<Clcc> {
    let n = a.n();
    if b.n() != n {
        return Err(Error::MismatchedColourCount(n, b.n()));
    }
    let full = full_mask(n);
    let b_masks = by_mask(b);
    let mut keys: Vec<Vec<(Simplex, Simplex)>> = Vec::new();
    for sa in a.iter() {
        let ma = a.colour_mask(sa);
        let need = full & !ma;
        for (&mb, bs) in &b_masks {
            if mb & need != need {
                continue;
            }
            let d = (ma & mb).count_ones() as usize;
            if keys.len() <= d {
                keys.resize(d + 1, Vec::new());
            }
            keys[d].extend(bs.iter().map(|sb| (sa.clone(), sb.clone())));
        }
    }
    for level in &mut keys {
        level.sort();
    }
    let mut lookup = HashMap::new();
    for level in &keys {
        for (i, k) in level.iter().enumerate() {
            lookup.insert(k.clone(), i);
        }
    }
    let mut levels: Vec<Vec<(String, Vec<usize>)>> = Vec::with_capacity(keys.len());
    let mut origin_keys = Vec::with_capacity(keys.len());
    for level in &keys {
        let mut out = Vec::with_capacity(level.len());
        let mut okeys = Vec::with_capacity(level.len());
        for (sa, sb) in level {
            let key = CubeKey { a: a.entries(sa), b: b.entries(sb) };
            let mut fs = Vec::new();
            for c in key.overlap() {
                let va = a.vertex_of_colour(sa, c).expect("overlap colour");
                let vb = b.vertex_of_colour(sb, c).expect("overlap colour");
                fs.push(lookup[&(sa.without(va), sb.clone())]);
                fs.push(lookup[&(sa.clone(), sb.without(vb))]);
            }
            out.push((key.id(), fs));
            okeys.push(key);
        }
        levels.push(out);
        origin_keys.push(okeys);
    }
    let cubes = CubeComplex::from_levels(levels, Some(CubeOrigin { n, keys: origin_keys }))?;
    Ok(Clcc { a: a.clone(), b: b.clone(), keys, lookup, cubes })
}

/// Label of a link vertex coming from `Γ_A` or `Γ_B`.
pub fn side_label(side: Side, id: &str) -> String {
    match side {
        Side::A => format!("A:{id}"),
        Side::B => format!("B:{id}"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Clcc {
    pub fn a(&self) -> &ColoredComplex {
        &self.a
    }

    pub fn b(&self) -> &ColoredComplex {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn cubes(&self) -> &CubeComplex {
        &self.cubes
    }

    /// `(a, b)` of cube `cell` in dimension `dim`.
    pub fn key(&self, dim: usize, cell: usize) -> &(Simplex, Simplex) {
        &self.keys[dim][cell]
    }

    pub fn keys(&self, dim: usize) -> &[(Simplex, Simplex)] {
        self.keys.get(dim).map_or(&[], Vec::as_slice)
    }

    /// `(dim, index)` of `Q(a, b)`, if it is a cube of `X`.
    pub fn find(&self, a: &Simplex, b: &Simplex) -> Option<(usize, usize)> {
        let key = (a.clone(), b.clone());
        let d = (self.a.colour_mask(a) & self.b.colour_mask(b)).count_ones() as usize;
        self.lookup.get(&key).map(|&i| (d, i)).filter(|&(d, i)| self.keys.get(d).is_some_and(|l| l.get(i) == Some(&key)))
    }

    pub fn find_ids<S: AsRef<str>>(&self, a: &[S], b: &[S]) -> Result<(usize, usize)> {
        let sa = self.a.simplex_from_ids(a)?;
        let sb = self.b.simplex_from_ids(b)?;
        self.find(&sa, &sb).ok_or_else(|| Error::MissingCube(self.describe(&sa, &sb)))
    }

    fn describe(&self, a: &Simplex, b: &Simplex) -> String {
        CubeKey { a: self.a.entries(a), b: self.b.entries(b) }.id()
    }

    pub fn vertex_count(&self) -> usize {
        self.keys(0).len()
    }

    /// Link of `Q(a, b)` as `lk(a, Γ_A) ∗ lk(b, Γ_B)`; vertices are labelled
    /// `A:<id>` and `B:<id>`.
    pub fn link_of_cube(&self, a: &Simplex, b: &Simplex) -> Result<SimplicialComplex> {
        if self.find(a, b).is_none() {
            return Err(Error::MissingCube(self.describe(a, b)));
        }
        let la = self.a.link_simplex(a)?.relabelled(|id| side_label(Side::A, id));
        let lb = self.b.link_simplex(b)?.relabelled(|id| side_label(Side::B, id));
        Ok(la.join(&lb))
    }

    /// Link of a cube read off the coface relation of the cube complex, with
    /// each `(d+1)`-coface `Q(a + v, b)` or `Q(a, b + w)` relabelled `A:v` or
    /// `B:w`. Independent of the join formula.
    pub fn direct_link(&self, dim: usize, cell: usize) -> Result<SimplicialComplex> {
        let up = cells::cofacets(&self.cubes);
        self.direct_link_with(&up, dim, cell)
    }

    pub(crate) fn direct_link_with(&self, up: &[Vec<Vec<usize>>], dim: usize, cell: usize) -> Result<SimplicialComplex> {
        let raw = self.cubes.link_with(up, dim, cell)?;
        let (sa, sb) = &self.keys[dim][cell];
        let rename: HashMap<String, String> = up[dim + 1][cell]
            .iter()
            .map(|&c| {
                let (ca, cb) = &self.keys[dim + 1][c];
                let label = if ca != sa {
                    let v = ca.vertices().iter().find(|v| !sa.contains(**v)).expect("grown coordinate");
                    side_label(Side::A, self.a.id(*v))
                } else {
                    let w = cb.vertices().iter().find(|w| !sb.contains(**w)).expect("grown coordinate");
                    side_label(Side::B, self.b.id(*w))
                };
                (self.cubes.id(dim + 1, c).to_string(), label)
            })
            .collect();
        raw.relabel(|id| rename[id].clone())
    }

    /// Link of vertex `v` via the join formula.
    pub fn vertex_link(&self, v: usize) -> SimplicialComplex {
        let (a, b) = &self.keys[0][v];
        self.link_of_cube(a, b).expect("vertex of X")
    }

    /// `(dim, is_pure)`; dimension `-1` for the empty complex.
    pub fn dimension(&self) -> (isize, bool) {
        self.cubes.dimension()
    }

    pub fn is_connected(&self) -> bool {
        self.cubes.is_connected()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cubes.euler_characteristic()
    }

    /// Endpoints of edge `e = Q(a, b)` with overlap colour `i`, oriented from
    /// the vertex where `i` is an `A`-coordinate to the one where it is a
    /// `B`-coordinate: `(a, b − i) → (a − i, b)`.
    pub fn edge_orientation(&self, e: usize) -> (usize, usize) {
        let (sa, sb) = &self.keys[1][e];
        let shared = self.a.colour_mask(sa) & self.b.colour_mask(sb);
        let c = shared.trailing_zeros() as usize + 1;
        let va = self.a.vertex_of_colour(sa, c).expect("overlap colour");
        let vb = self.b.vertex_of_colour(sb, c).expect("overlap colour");
        (
            self.lookup[&(sa.clone(), sb.without(vb))],
            self.lookup[&(sa.without(va), sb.clone())],
        )
    }

    /// The coordinate colour changed along edge `e`.
    pub fn edge_colour(&self, e: usize) -> usize {
        let (sa, sb) = &self.keys[1][e];
        (self.a.colour_mask(sa) & self.b.colour_mask(sb)).trailing_zeros() as usize + 1
    }

    /// Cube id of `Q(a, b)` in dimension `dim`.
    pub fn cube_key(&self, dim: usize, cell: usize) -> CubeKey {
        let (a, b) = &self.keys[dim][cell];
        CubeKey { a: self.a.entries(a), b: self.b.entries(b) }
    }
}

impl CellComplex for Clcc {
    fn top_dim(&self) -> isize {
        self.cubes.top_dim()
    }

    fn cell_count(&self, dim: isize) -> usize {
        self.cubes.cell_count(dim)
    }

    fn facets(&self, dim: isize, cell: usize) -> &[usize] {
        self.cubes.facets(dim, cell)
    }

    fn cell_label(&self, dim: isize, cell: usize) -> String {
        self.cubes.cell_label(dim, cell)
    }
}

/// How [`is_npc`] reached its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NpcPath {
    /// Both defining complexes are flag.
    Flagness,
    /// Every vertex link of the built complex was checked directly.
    DirectLinks,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NpcReport {
    pub npc: bool,
    pub path: NpcPath,
    /// A vertex whose link is not a flag simplicial complex.
    pub witness: Option<String>,
}

/// Non-positive curvature of `X(Γ_A, Γ_B)`: immediate when both inputs are
/// flag, otherwise decided by checking that every vertex link, computed from
/// the cube structure, is a flag simplicial complex.
pub fn is_npc(a: &ColoredComplex, b: &ColoredComplex) -> Result<NpcReport> {
    if a.n() != b.n() {
        return Err(Error::MismatchedColourCount(a.n(), b.n()));
    }
    if a.is_flag() && b.is_flag() {
        return Ok(NpcReport { npc: true, path: NpcPath::Flagness, witness: None });
    }
    let x = build_clcc(a, b)?;
    let up = cells::cofacets(x.cubes());
    for v in 0..x.vertex_count() {
        let ok = match x.cubes().link_with(&up, 0, v) {
            Ok(l) => l.is_flag(),
            Err(Error::NonSimplicialLink(_)) => false,
            Err(e) => return Err(e),
        };
        if !ok {
            return Ok(NpcReport {
                npc: false,
                path: NpcPath::DirectLinks,
                witness: Some(x.cubes().id(0, v).to_string()),
            });
        }
    }
    Ok(NpcReport { npc: true, path: NpcPath::DirectLinks, witness: None })
}

/// Outcome of a smart-pairing test; the witness is a simplex lacking a
/// complementary partner on the other side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pairing {
    pub holds: bool,
    pub witness: Option<(Side, Vec<String>)>,
}

impl Pairing {
    fn ok() -> Self {
        Pairing { holds: true, witness: None }
    }
}

fn masks(k: &ColoredComplex) -> HashSet<u64> {
    k.iter().map(|s| k.colour_mask(s)).collect()
}

/// Non-empty maximal simplices. A complex without vertices has none.
fn nonempty_maximal(k: &ColoredComplex) -> Vec<Simplex> {
    k.maximal_simplices().into_iter().filter(|s| !s.is_empty()).collect()
}

fn first_unpaired<'a>(
    k: &ColoredComplex,
    candidates: impl IntoIterator<Item = &'a Simplex>,
    other: &HashSet<u64>,
) -> Option<&'a Simplex> {
    let full = k.full_mask();
    candidates.into_iter().find(|s| !other.contains(&(full & !k.colour_mask(s))))
}

/// Every non-empty maximal simplex on each side has a complementary simplex
/// on the other side.
pub fn smartly_paired(a: &ColoredComplex, b: &ColoredComplex) -> Result<Pairing> {
    if a.n() != b.n() {
        return Err(Error::MismatchedColourCount(a.n(), b.n()));
    }
    let (ma, mb) = (masks(a), masks(b));
    let max_a = nonempty_maximal(a);
    if let Some(s) = first_unpaired(a, &max_a, &mb) {
        return Ok(Pairing { holds: false, witness: Some((Side::A, a.ids(s))) });
    }
    let max_b = nonempty_maximal(b);
    if let Some(s) = first_unpaired(b, &max_b, &ma) {
        return Ok(Pairing { holds: false, witness: Some((Side::B, b.ids(s))) });
    }
    Ok(Pairing::ok())
}

fn codim_one_faces(max: &[Simplex]) -> Vec<Simplex> {
    let set: BTreeSet<Simplex> = max.iter().flat_map(|s| s.facets()).collect();
    set.into_iter().collect()
}

/// Smartly paired, and every codimension-one face of a non-empty maximal
/// simplex also has a complementary simplex.
pub fn doubly_smartly_paired(a: &ColoredComplex, b: &ColoredComplex) -> Result<Pairing> {
    let p = smartly_paired(a, b)?;
    if !p.holds {
        return Ok(p);
    }
    let (ma, mb) = (masks(a), masks(b));
    let fa = codim_one_faces(&nonempty_maximal(a));
    if let Some(s) = first_unpaired(a, &fa, &mb) {
        return Ok(Pairing { holds: false, witness: Some((Side::A, a.ids(s))) });
    }
    let fb = codim_one_faces(&nonempty_maximal(b));
    if let Some(s) = first_unpaired(b, &fb, &ma) {
        return Ok(Pairing { holds: false, witness: Some((Side::B, b.ids(s))) });
    }
    Ok(Pairing::ok())
}

/// Removes `junk` maximal simplices from `k`, keeping their proper faces and
/// dropping vertices that no longer occur.
fn remove_maximal(k: &ColoredComplex, junk: &HashSet<Simplex>) -> Result<ColoredComplex> {
    let mut gens: Vec<Simplex> = Vec::new();
    for s in k.maximal_simplices() {
        if junk.contains(&s) {
            gens.extend(s.facets());
        } else {
            gens.push(s);
        }
    }
    let used: BTreeSet<usize> = gens.iter().flat_map(|s| s.vertices().iter().copied()).collect();
    let vertices: Vec<(String, usize)> = used.iter().map(|&v| (k.id(v).to_string(), k.colour(v))).collect();
    let maximal: Vec<Vec<String>> = gens.iter().filter(|s| !s.is_empty()).map(|s| k.ids(s)).collect();
    ColoredComplex::new(k.n(), &vertices, &maximal)
}

/// Repeatedly strips maximal simplices without a complementary partner.
/// The result is smartly paired and has the same coupled-link complex.
pub fn prune_to_smart_pair(a: &ColoredComplex, b: &ColoredComplex) -> Result<(ColoredComplex, ColoredComplex)> {
    if a.n() != b.n() {
        return Err(Error::MismatchedColourCount(a.n(), b.n()));
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        let (ma, mb) = (masks(&a), masks(&b));
        let ja: HashSet<Simplex> = nonempty_maximal(&a)
            .into_iter()
            .filter(|s| !mb.contains(&(a.full_mask() & !a.colour_mask(s))))
            .collect();
        let jb: HashSet<Simplex> = nonempty_maximal(&b)
            .into_iter()
            .filter(|s| !ma.contains(&(b.full_mask() & !b.colour_mask(s))))
            .collect();
        if ja.is_empty() && jb.is_empty() {
            return Ok((a, b));
        }
        if !ja.is_empty() {
            a = remove_maximal(&a, &ja)?;
        }
        if !jb.is_empty() {
            b = remove_maximal(&b, &jb)?;
        }
    }
}

/// Node `(ā, b̲)` of the connectivity graph: `ā` maximal in `Γ_A`, `b̲`
/// complementary to it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConnNode {
    pub a: Simplex,
    pub b: Simplex,
}

/// The graph `𝒢_A` on vertices of `X` with maximal `A`-coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnGraph {
    pub nodes: Vec<ConnNode>,
    pub edges: Vec<(usize, usize)>,
}

impl ConnGraph {
    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return false;
        }
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// `(ā, b̲) ∼ (ā′, b̲′)` iff some `b″ ∈ Γ_B` complementary to `ā ∩ ā′`
/// contains `b̲ ∪ b̲′`.
pub fn conn_graph(a: &ColoredComplex, b: &ColoredComplex) -> Result<ConnGraph> {
    if a.n() != b.n() {
        return Err(Error::MismatchedColourCount(a.n(), b.n()));
    }
    let full = a.full_mask();
    let b_masks = by_mask(b);
    let mut nodes = Vec::new();
    for abar in a.maximal_simplices() {
        let need = full & !a.colour_mask(&abar);
        for bl in b_masks.get(&need).into_iter().flatten() {
            nodes.push(ConnNode { a: abar.clone(), b: bl.clone() });
        }
    }
    nodes.sort();
    let mut edges = Vec::new();
    for i in 0..nodes.len() {
        for j in (i + 1)..nodes.len() {
            let (p, q) = (&nodes[i], &nodes[j]);
            let meet = full & !a.colour_mask(&p.a.intersection(&q.a));
            let u = p.b.union(&q.b);
            if b_masks.get(&meet).into_iter().flatten().any(|b2| u.is_face_of(b2)) {
                edges.push((i, j));
            }
        }
    }
    Ok(ConnGraph { nodes, edges })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConnEngine {
    /// Breadth-first search on the 1-skeleton of the built complex.
    Bfs,
    /// Connectivity of `𝒢_A`; requires a smartly paired input.
    Criterion,
}

pub fn is_connected(a: &ColoredComplex, b: &ColoredComplex, engine: ConnEngine) -> Result<bool> {
    match engine {
        ConnEngine::Bfs => Ok(build_clcc(a, b)?.is_connected()),
        ConnEngine::Criterion => {
            let p = smartly_paired(a, b)?;
            if let Some((side, s)) = p.witness {
                return Err(Error::NotSmartlyPaired(format!("{side:?}-simplex {s:?} has no complementary simplex")));
            }
            Ok(conn_graph(a, b)?.is_connected())
        }
    }
}

/// Combinatorial type of a vertex link.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LinkType {
    Circle,
    #[serde(rename = "2-sphere")]
    TwoSphere,
    Other,
    /// Dimension 3 or more.
    Unknown,
}

impl LinkType {
    pub fn as_str(&self) -> &'static str {
        match self {
            LinkType::Circle => "circle",
            LinkType::TwoSphere => "2-sphere",
            LinkType::Other => "other",
            LinkType::Unknown => "unknown",
        }
    }
}

fn is_circle(k: &SimplicialComplex) -> bool {
    k.dim() == 1 && k.is_connected() && k.adjacency().iter().all(|n| n.len() == 2)
}

/// Classifies a simplicial complex as a circle, a 2-sphere, something else,
/// or unknown when its dimension is at least 3.
pub fn classify_link(k: &SimplicialComplex) -> LinkType {
    match k.dim() {
        d if d >= 3 => LinkType::Unknown,
        1 if is_circle(k) => LinkType::Circle,
        2 => {
            let closed = k.is_connected()
                && k.is_pure()
                && (0..k.simplices(1).len()).all(|e| {
                    let edge = &k.simplices(1)[e];
                    k.simplices(2).iter().filter(|t| edge.is_face_of(t)).count() == 2
                })
                && k.simplices(0).iter().all(|v| k.link(v).is_ok_and(|l| is_circle(&l)));
            if closed && k.euler_characteristic() == 2 {
                LinkType::TwoSphere
            } else {
                LinkType::Other
            }
        }
        _ => LinkType::Other,
    }
}

/// Link type of every vertex of `X`, keyed by vertex id.
pub fn classify_vertex_links(x: &Clcc) -> BTreeMap<String, LinkType> {
    (0..x.vertex_count())
        .map(|v| (x.cubes().id(0, v).to_string(), classify_link(&x.vertex_link(v))))
        .collect()
}

/// A colour-preserving simplicial map between coloured complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: ColoredComplex,
    target: ColoredComplex,
    map: Vec<usize>,
}

impl SimplicialMap {
    /// Map given by vertex ids. Every source vertex must be assigned.
    pub fn new(source: &ColoredComplex, target: &ColoredComplex, assignment: &BTreeMap<String, String>) -> Result<Self> {
        if source.n() != target.n() {
            return Err(Error::MismatchedColourCount(source.n(), target.n()));
        }
        let mut map = Vec::with_capacity(source.vertex_count());
        for (id, c) in source.coloured_vertices() {
            let img = assignment.get(id).ok_or_else(|| Error::NotSimplicial(format!("vertex `{id}` has no image")))?;
            let w = target.vertex(img).ok_or_else(|| Error::UnknownVertex(img.clone()))?;
            if target.colour(w) != c {
                return Err(Error::NotColourPreserving(format!(
                    "`{id}` has colour {c} but `{img}` has colour {}",
                    target.colour(w)
                )));
            }
            map.push(w);
        }
        let f = SimplicialMap { source: source.clone(), target: target.clone(), map };
        for s in source.maximal_simplices() {
            let img = f.apply(&s);
            if !target.contains(&img) {
                return Err(Error::NotSimplicial(format!("image of {:?} is not a simplex", source.ids(&s))));
            }
        }
        Ok(f)
    }

    pub fn identity(k: &ColoredComplex) -> Self {
        SimplicialMap { source: k.clone(), target: k.clone(), map: (0..k.vertex_count()).collect() }
    }

    /// Inclusion of `sub` into `sup` matching vertex ids.
    pub fn inclusion(sub: &ColoredComplex, sup: &ColoredComplex) -> Result<Self> {
        let assignment = sub.coloured_vertices().map(|(id, _)| (id.to_string(), id.to_string())).collect();
        Self::new(sub, sup, &assignment)
    }

    pub fn source(&self) -> &ColoredComplex {
        &self.source
    }

    pub fn target(&self) -> &ColoredComplex {
        &self.target
    }

    pub fn image_of_vertex(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn apply(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|&v| self.map[v]).collect())
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &SimplicialMap) -> Result<SimplicialMap> {
        if self.target != g.source {
            return Err(Error::NotSimplicial("maps are not composable".into()));
        }
        Ok(SimplicialMap {
            source: self.source.clone(),
            target: g.target.clone(),
            map: self.map.iter().map(|&v| g.map[v]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        self.map.iter().collect::<HashSet<_>>().len() == self.map.len()
    }

    /// Every simplex of the target is the image of a simplex.
    pub fn is_surjective(&self) -> bool {
        let image: HashSet<Simplex> = self.source.iter().map(|s| self.apply(s)).collect();
        self.target.iter().all(|t| image.contains(t))
    }

    /// Injective with image a full subcomplex.
    pub fn is_full_inclusion(&self) -> bool {
        if !self.is_injective() {
            return false;
        }
        let image: BTreeSet<usize> = self.map.iter().copied().collect();
        self.target.full_subcomplex_on(&image).complex().simplex_count() == self.source.complex().simplex_count()
    }
}

/// The cubical map `X(f_A, f_B)`: `Q(a, b) ↦ Q(f_A(a), f_B(b))`, sending
/// `d`-cubes to `d`-cubes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicalMap {
    fa: SimplicialMap,
    fb: SimplicialMap,
    source: Clcc,
    target: Clcc,
    cells: Vec<Vec<usize>>,
}

pub fn induced_map(fa: &SimplicialMap, fb: &SimplicialMap) -> Result<CubicalMap> {
    let source = build_clcc(fa.source(), fb.source())?;
    let target = build_clcc(fa.target(), fb.target())?;
    let mut cells = Vec::with_capacity(source.keys.len());
    for (d, level) in source.keys.iter().enumerate() {
        let mut out = Vec::with_capacity(level.len());
        for (a, b) in level {
            let (td, ti) = target
                .find(&fa.apply(a), &fb.apply(b))
                .ok_or_else(|| Error::Internal("image cube missing".into()))?;
            if td != d {
                return Err(Error::Internal("image cube has the wrong dimension".into()));
            }
            out.push(ti);
        }
        cells.push(out);
    }
    Ok(CubicalMap { fa: fa.clone(), fb: fb.clone(), source, target, cells })
}

impl CubicalMap {
    pub fn source(&self) -> &Clcc {
        &self.source
    }

    pub fn target(&self) -> &Clcc {
        &self.target
    }

    /// Index of the image of a `dim`-cube; images keep their dimension.
    pub fn image(&self, dim: usize, cell: usize) -> usize {
        self.cells[dim][cell]
    }

    /// Vertex assignment by cube id.
    pub fn vertex_assignment(&self) -> BTreeMap<String, String> {
        (0..self.source.vertex_count())
            .map(|v| (self.source.cubes().id(0, v).to_string(), self.target.cubes().id(0, self.cells[0][v]).to_string()))
            .collect()
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &CubicalMap) -> Result<CubicalMap> {
        if self.target != g.source {
            return Err(Error::Internal("cubical maps are not composable".into()));
        }
        let cells = self
            .cells
            .iter()
            .enumerate()
            .map(|(d, level)| level.iter().map(|&c| g.cells[d][c]).collect())
            .collect();
        Ok(CubicalMap {
            fa: self.fa.then(&g.fa)?,
            fb: self.fb.then(&g.fb)?,
            source: self.source.clone(),
            target: g.target.clone(),
            cells,
        })
    }

    /// Taking images commutes with taking facets.
    pub fn is_cubical(&self) -> bool {
        (1..self.cells.len()).all(|d| {
            (0..self.cells[d].len()).all(|c| {
                let img: BTreeSet<usize> =
                    self.source.cubes().facets(d as isize, c).iter().map(|&f| self.cells[d - 1][f]).collect();
                let tgt: BTreeSet<usize> =
                    self.target.cubes().facets(d as isize, self.cells[d][c]).iter().copied().collect();
                img == tgt
            })
        })
    }

    pub fn is_injective(&self) -> bool {
        self.cells.iter().all(|l| l.iter().collect::<HashSet<_>>().len() == l.len())
    }

    pub fn is_surjective(&self) -> bool {
        let tc = self.target.cubes().counts();
        tc.len() <= self.cells.len()
            && tc.iter().enumerate().all(|(d, &n)| self.cells[d].iter().collect::<HashSet<_>>().len() == n)
    }

    /// Every induced vertex-link map is injective with image a full
    /// subcomplex, the combinatorial local-isometry condition.
    pub fn is_local_isometry(&self) -> bool {
        let rename = |side: Side, label: &str| -> Option<String> {
            let (f, id) = match side {
                Side::A => (&self.fa, label.strip_prefix("A:")?),
                Side::B => (&self.fb, label.strip_prefix("B:")?),
            };
            let u = f.source().vertex(id)?;
            Some(side_label(side, f.target().id(f.image_of_vertex(u))))
        };
        (0..self.source.vertex_count()).all(|v| {
            let ls = self.source.vertex_link(v);
            let lt = self.target.vertex_link(self.cells[0][v]);
            let mut image = BTreeSet::new();
            for l in ls.labels() {
                let side = if l.starts_with("A:") { Side::A } else { Side::B };
                match rename(side, l).and_then(|m| lt.vertex(&m)) {
                    Some(w) if image.insert(w) => {}
                    _ => return false,
                }
            }
            lt.full_subcomplex(&image).simplex_count() == ls.simplex_count()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{coloured_cycle, cross_polytope, cycle};
    use crate::simplicial::Colour;

    fn c(k: usize, prefix: &str) -> ColoredComplex {
        cycle(prefix, k, (1, 2), 2).unwrap()
    }

    fn s0(prefix: &str) -> ColoredComplex {
        cross_polytope(prefix, 1).unwrap()
    }

    fn complex(n: usize, vertices: &[(&str, Colour)], maximal: &[&[&str]]) -> ColoredComplex {
        let m: Vec<Vec<&str>> = maximal.iter().map(|s| s.to_vec()).collect();
        ColoredComplex::new(n, vertices, &m).unwrap()
    }

    /// Cube counts by brute force over pairs of vertex subsets.
    fn brute_counts(a: &ColoredComplex, b: &ColoredComplex) -> Vec<usize> {
        let subsets = |k: &ColoredComplex| -> Vec<(u64, Vec<usize>)> {
            (0u32..1 << k.vertex_count())
                .map(|bits| (0..k.vertex_count()).filter(|v| bits >> v & 1 == 1).collect::<Vec<_>>())
                .filter(|vs| k.contains(&Simplex::new(vs.clone())))
                .map(|vs| (vs.iter().fold(0u64, |m, &v| m | 1 << (k.colour(v) - 1)), vs))
                .collect()
        };
        let full = (1u64 << a.n()) - 1;
        let mut counts = Vec::new();
        for (ma, _) in subsets(a) {
            for (mb, _) in subsets(b) {
                if ma | mb == full {
                    let d = (ma & mb).count_ones() as usize;
                    if counts.len() <= d {
                        counts.resize(d + 1, 0);
                    }
                    counts[d] += 1;
                }
            }
        }
        counts
    }

    #[test]
    fn complementary_masks() {
        assert!(complementary(0b11, 0, 2));
        assert!(!complementary(0b01, 0b01, 2));
        assert!(!complementary(0, 0, 1));
        assert!(complementary(0b01, 0b10, 2));
    }

    #[test]
    fn cube_counts() {
        let x = build_clcc(&c(2, "a"), &c(3, "b")).unwrap();
        assert_eq!(x.cubes().counts(), vec![22, 48, 24]);
        assert_eq!(brute_counts(&c(2, "a"), &c(3, "b")), vec![22, 48, 24]);
        let x = build_clcc(&c(2, "a"), &c(2, "b")).unwrap();
        assert_eq!(x.cubes().counts(), vec![16, 32, 16]);
        let x = build_clcc(&s0("a"), &s0("b")).unwrap();
        assert_eq!(x.cubes().counts(), vec![4, 4]);
        assert!(x.cubes().adjacency().iter().all(|n| n.len() == 2));
        assert!(x.is_connected());
        assert!(matches!(build_clcc(&s0("a"), &c(2, "b")), Err(Error::MismatchedColourCount(1, 2))));
    }

    #[test]
    fn cubes_have_faces_of_their_key() {
        let x = build_clcc(&cross_polytope("a", 3).unwrap(), &cross_polytope("b", 3).unwrap()).unwrap();
        for d in 1..x.cubes().counts().len() {
            for i in 0..x.cubes().counts()[d] {
                let (a, b) = x.key(d, i);
                let vs = x.cubes().cube_vertices(d, i);
                assert_eq!(vs.len(), 1 << d);
                for v in vs {
                    let (va, vb) = x.key(0, v);
                    assert!(va.is_face_of(a) && vb.is_face_of(b));
                }
            }
        }
    }

    #[test]
    fn links_of_surface_vertices() {
        let (a, b) = (c(2, "a"), c(3, "b"));
        let x = build_clcc(&a, &b).unwrap();
        let v = x.find_ids(&["a0", "a1"], &[] as &[&str]).unwrap();
        let (sa, sb) = x.key(v.0, v.1).clone();
        let l = x.link_of_cube(&sa, &sb).unwrap();
        assert_eq!(l.label_simplices(), b.relabelled(|id| format!("B:{id}")).label_simplices());
        let v = x.find_ids(&["a0"], &["b1"]).unwrap();
        let (sa, sb) = x.key(v.0, v.1).clone();
        let l = x.link_of_cube(&sa, &sb).unwrap();
        assert_eq!((l.vertex_count(), l.simplices(1).len(), l.empty_squares().len()), (4, 4, 1));

        let y = build_clcc(&c(2, "a"), &c(2, "b")).unwrap();
        for e in 0..y.cubes().counts()[1] {
            let (sa, sb) = y.key(1, e).clone();
            let l = y.link_of_cube(&sa, &sb).unwrap();
            assert_eq!((l.vertex_count(), l.dim()), (2, 0));
        }
        assert!(matches!(
            x.link_of_cube(&Simplex::empty(), &Simplex::empty()),
            Err(Error::MissingCube(_))
        ));
    }

    #[test]
    fn join_formula_matches_cube_structure() {
        let pairs = [
            (c(2, "a"), c(3, "b")),
            (cross_polytope("a", 3).unwrap(), cross_polytope("b", 3).unwrap()),
            (cross_polytope("a", 3).unwrap(), coloured_cycle("b", &[1, 2, 3, 1, 2, 3], 3).unwrap()),
        ];
        for (a, b) in pairs {
            let x = build_clcc(&a, &b).unwrap();
            let up = cells::cofacets(x.cubes());
            for d in 0..x.cubes().counts().len() {
                for i in 0..x.cubes().counts()[d] {
                    let (sa, sb) = x.key(d, i).clone();
                    let joined = x.link_of_cube(&sa, &sb).unwrap();
                    let direct = x.direct_link_with(&up, d, i).unwrap();
                    assert_eq!(joined.label_simplices(), direct.label_simplices());
                    assert_eq!(joined.vertex_count(), direct.vertex_count());
                }
            }
        }
    }

    #[test]
    fn npc() {
        let r = is_npc(&c(2, "a"), &c(3, "b")).unwrap();
        assert_eq!((r.npc, r.path), (true, NpcPath::Flagness));

        // octahedron minus one triangle, against one point per colour
        let o3 = cross_polytope("a", 3).unwrap();
        let mut tri: Vec<Vec<String>> = o3.maximal_simplices().iter().map(|s| o3.ids(s)).collect();
        tri.retain(|t| t != &vec!["a1-".to_string(), "a2-".to_string(), "a3-".to_string()]);
        let verts: Vec<(String, Colour)> = o3.coloured_vertices().map(|(i, c)| (i.to_string(), c)).collect();
        let holed = ColoredComplex::new(3, &verts, &tri).unwrap();
        assert!(!holed.is_flag());
        let points = complex(3, &[("b1", 1), ("b2", 2), ("b3", 3)], &[]);
        let r = is_npc(&holed, &points).unwrap();
        assert_eq!((r.npc, r.path), (true, NpcPath::DirectLinks));
        let x = build_clcc(&holed, &points).unwrap();
        assert_eq!(x.dimension().0, 1);
        assert!(x.is_connected());

        let empty_triangle = complex(3, &[("1", 1), ("2", 2), ("3", 3)], &[&["1", "2"], &["2", "3"], &["1", "3"]]);
        let r = is_npc(&empty_triangle, &o3).unwrap();
        assert_eq!((r.npc, r.path), (false, NpcPath::DirectLinks));
        assert!(r.witness.is_some());
    }

    #[test]
    fn smart_pairing() {
        assert!(smartly_paired(&c(2, "a"), &c(3, "b")).unwrap().holds);
        // an isolated colour-1 vertex is paired with a colour-2 vertex
        let c4_plus = complex(
            2,
            &[("a0", 1), ("a1", 2), ("a2", 1), ("a3", 2), ("x", 1)],
            &[&["a0", "a1"], &["a1", "a2"], &["a2", "a3"], &["a3", "a0"], &["x"]],
        );
        assert!(smartly_paired(&c(2, "b"), &c4_plus).unwrap().holds);
        // edges covering every colour pair with the empty simplex
        let o2 = cross_polytope("a", 2).unwrap();
        let point1 = complex(2, &[("b", 1)], &[&["b"]]);
        assert!(smartly_paired(&o2, &point1).unwrap().holds);
        let o3 = cross_polytope("a", 3).unwrap();
        let edge3 = complex(3, &[("v1", 1), ("v2", 2), ("v3", 3)], &[&["v1", "v2"], &["v3"]]);
        assert!(smartly_paired(&o3, &edge3).unwrap().holds);
        // a square on colours 1, 2 with n = 3 needs a colour-3 partner
        let sq = cycle("a", 2, (1, 2), 3).unwrap();
        let point = complex(3, &[("b", 1)], &[&["b"]]);
        let p = smartly_paired(&sq, &point).unwrap();
        assert!(!p.holds);
        assert_eq!(p.witness.unwrap().0, Side::A);
    }

    #[test]
    fn pruning() {
        let (a, b) = (c(2, "a"), c(3, "b"));
        assert_eq!(prune_to_smart_pair(&a, &b).unwrap(), (a.clone(), b.clone()));

        let sq = cycle("a", 2, (1, 2), 3).unwrap();
        let point = complex(3, &[("b", 1)], &[&["b"]]);
        let (pa, pb) = prune_to_smart_pair(&sq, &point).unwrap();
        assert!(smartly_paired(&pa, &pb).unwrap().holds);
        assert_eq!(pa.vertex_count(), 0);
        assert_eq!(pb.vertex_count(), 0);

        let p1 = complex(2, &[("a", 1)], &[&["a"]]);
        let q1 = complex(2, &[("b", 1)], &[&["b"]]);
        let (pa, pb) = prune_to_smart_pair(&p1, &q1).unwrap();
        assert_eq!((pa.vertex_count(), pb.vertex_count()), (0, 0));
        assert!(build_clcc(&pa, &pb).unwrap().cubes().counts().is_empty());

        // junk removal keeps the coupled-link complex
        let mixed = complex(
            3,
            &[("a1", 1), ("a2", 2), ("a3", 3), ("x", 1), ("y", 2)],
            &[&["a1", "a2", "a3"], &["x", "y"]],
        );
        let other = complex(3, &[("b1", 1), ("b3", 3)], &[&["b1"], &["b3"]]);
        let (pa, pb) = prune_to_smart_pair(&mixed, &other).unwrap();
        assert!(smartly_paired(&pa, &pb).unwrap().holds);
        let ids = |x: &Clcc| -> Vec<Vec<String>> { (0..x.cubes().counts().len()).map(|d| x.cubes().ids(d).to_vec()).collect() };
        assert_eq!(ids(&build_clcc(&pa, &pb).unwrap()), ids(&build_clcc(&mixed, &other).unwrap()));
    }

    #[test]
    fn double_pairing() {
        assert!(doubly_smartly_paired(&c(2, "a"), &c(3, "b")).unwrap().holds);
        assert!(doubly_smartly_paired(&s0("a"), &s0("b")).unwrap().holds);
        let o2 = cross_polytope("a", 2).unwrap();
        let point2 = complex(2, &[("b", 2)], &[&["b"]]);
        assert!(smartly_paired(&o2, &point2).unwrap().holds);
        assert!(!doubly_smartly_paired(&o2, &point2).unwrap().holds);
    }

    #[test]
    fn dimensions() {
        assert_eq!(build_clcc(&c(2, "a"), &c(3, "b")).unwrap().dimension(), (2, true));
        assert_eq!(build_clcc(&s0("a"), &s0("b")).unwrap().dimension(), (1, true));
        let c4_plus = complex(
            2,
            &[("a0", 1), ("a1", 2), ("a2", 1), ("a3", 2), ("x", 1)],
            &[&["a0", "a1"], &["a1", "a2"], &["a2", "a3"], &["a3", "a0"], &["x"]],
        );
        assert_eq!(build_clcc(&c4_plus, &c(3, "b")).unwrap().dimension(), (2, false));
        let p1 = complex(2, &[("a", 1)], &[&["a"]]);
        assert_eq!(build_clcc(&p1, &p1).unwrap().dimension(), (-1, true));
    }

    #[test]
    fn connectivity() {
        let (a, b) = (c(2, "a"), c(3, "b"));
        assert!(is_connected(&a, &b, ConnEngine::Bfs).unwrap());
        assert!(is_connected(&a, &b, ConnEngine::Criterion).unwrap());
        let g = conn_graph(&a, &b).unwrap();
        assert!(g.nodes.iter().all(|n| a.maximal_simplices().contains(&n.a)));

        let o3 = cross_polytope("a", 3).unwrap();
        let cyc = coloured_cycle("b", &[1, 2, 3, 1, 2, 3], 3).unwrap();
        let alt = coloured_cycle("b", &[1, 2, 1, 2, 1, 2], 3).unwrap();
        for engine in [ConnEngine::Bfs, ConnEngine::Criterion] {
            assert!(is_connected(&o3, &cyc, engine).unwrap());
            assert!(!is_connected(&o3, &alt, engine).unwrap());
        }
        let x = build_clcc(&o3, &cyc).unwrap();
        assert_eq!(x.euler_characteristic(), -4);
        assert!(classify_vertex_links(&x).values().all(|t| *t == LinkType::Circle));

        let sq = cycle("a", 2, (1, 2), 3).unwrap();
        let point = complex(3, &[("b", 1)], &[&["b"]]);
        assert!(matches!(is_connected(&sq, &point, ConnEngine::Criterion), Err(Error::NotSmartlyPaired(_))));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(build_clcc(&c(2, "a"), &c(2, "b")).unwrap().euler_characteristic(), 0);
        assert_eq!(build_clcc(&c(2, "a"), &c(3, "b")).unwrap().euler_characteristic(), -2);
        assert_eq!(build_clcc(&s0("a"), &c(2, "b")).err(), Some(Error::MismatchedColourCount(1, 2)));
        let eight = build_clcc(&s0("a"), &cross_polytope("b", 1).unwrap()).unwrap();
        assert_eq!(eight.euler_characteristic(), 0);
    }

    #[test]
    fn link_classification() {
        let x = build_clcc(&c(2, "a"), &c(3, "b")).unwrap();
        assert!(classify_vertex_links(&x).values().all(|t| *t == LinkType::Circle));
        let o3 = build_clcc(&cross_polytope("a", 3).unwrap(), &cross_polytope("b", 3).unwrap()).unwrap();
        assert_eq!(o3.dimension(), (3, true));
        assert!(classify_vertex_links(&o3).values().all(|t| *t == LinkType::TwoSphere));
        let star = complex(2, &[("c", 1), ("l1", 2), ("l2", 2), ("l3", 2)], &[&["c", "l1"], &["c", "l2"], &["c", "l3"]]);
        let y = build_clcc(&c(2, "a"), &star).unwrap();
        assert!(classify_vertex_links(&y).values().any(|t| *t == LinkType::Other));
        let big = build_clcc(&cross_polytope("a", 4).unwrap(), &cross_polytope("b", 4).unwrap()).unwrap();
        let (sa, sb) = big.key(0, 0).clone();
        assert_eq!(classify_link(&big.link_of_cube(&sa, &sb).unwrap()), LinkType::Unknown);
    }

    #[test]
    fn induced_maps() {
        let (a, b) = (c(2, "a"), c(3, "b"));
        let id = induced_map(&SimplicialMap::identity(&a), &SimplicialMap::identity(&b)).unwrap();
        assert!(id.is_injective() && id.is_surjective() && id.is_cubical() && id.is_local_isometry());
        for d in 0..id.source().cubes().counts().len() {
            assert!((0..id.source().cubes().counts()[d]).all(|i| id.image(d, i) == i));
        }

        let pts = a.full_subcomplex(&["a0", "a2"]).unwrap();
        let inc = SimplicialMap::inclusion(&pts, &a).unwrap();
        assert!(inc.is_full_inclusion());
        let f = induced_map(&inc, &SimplicialMap::identity(&b)).unwrap();
        assert!(f.is_injective() && !f.is_surjective() && f.is_cubical() && f.is_local_isometry());

        // collapse b0 and b2
        let quotient = complex(
            2,
            &[("b0", 1), ("b1", 2), ("b3", 2), ("b4", 1), ("b5", 2)],
            &[&["b0", "b1"], &["b0", "b3"], &["b3", "b4"], &["b4", "b5"], &["b5", "b0"]],
        );
        let assignment: BTreeMap<String, String> = (0..6)
            .map(|i| (format!("b{i}"), format!("b{}", if i == 2 { 0 } else { i })))
            .collect();
        let q = SimplicialMap::new(&b, &quotient, &assignment).unwrap();
        assert!(q.is_surjective() && !q.is_injective());
        let g = induced_map(&SimplicialMap::identity(&a), &q).unwrap();
        assert!(g.is_surjective() && !g.is_injective() && g.is_cubical());

        let composed = induced_map(&inc, &q).unwrap();
        assert_eq!(f.then(&g).unwrap().vertex_assignment(), composed.vertex_assignment());

        let bad: BTreeMap<String, String> = (0..6).map(|i| (format!("b{i}"), "b1".to_string())).collect();
        assert!(matches!(SimplicialMap::new(&b, &quotient, &bad), Err(Error::NotColourPreserving(_))));
    }

    #[test]
    fn orientation() {
        let x = build_clcc(&c(2, "a"), &c(3, "b")).unwrap();
        for e in 0..x.cubes().counts()[1] {
            let (from, to) = x.edge_orientation(e);
            let (u, v) = x.cubes().endpoints(e);
            assert_eq!(BTreeSet::from([from, to]), BTreeSet::from([u, v]));
            let colour = x.edge_colour(e);
            assert!(x.a().vertex_of_colour(&x.key(0, from).0, colour).is_some());
            assert!(x.b().vertex_of_colour(&x.key(0, to).1, colour).is_some());
        }
    }
}
