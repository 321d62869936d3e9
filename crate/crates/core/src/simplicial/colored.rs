use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Colours are `1..=n`.
pub type Colour = usize;

/// A simplex of a [`ColoredComplex`]. Vertices of a coloured complex are
/// indexed in `(colour, id)` order, so the sorted vertex list of a simplex is
/// also its colour-ordered coordinate list.
pub type CoordSimplex = Simplex;

/// A finite simplicial complex whose vertices are partitioned into `n` colour
/// classes, with at most one vertex of each colour per simplex.
///
/// Colour classes may be empty.
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredComplex {
    n: usize,
    colours: Vec<Colour>,
    complex: SimplicialComplex,
}

impl fmt::Debug for ColoredComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColoredComplex")
            .field("n", &self.n)
            .field("vertices", &self.complex.labels().iter().zip(&self.colours).collect::<Vec<_>>())
            .field(
                "maximal",
                &self.maximal_simplices().iter().map(|s| self.ids(s)).collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// A chordless 4-cycle `v – u₊ – w – u₋ – v`: consecutive vertices are
/// adjacent, the diagonals `{v, w}` and `{u₊, u₋}` are not.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SquareWitness {
    pub vertices: [String; 4],
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub colours: Option<[Colour; 4]>,
}

impl SquareWitness {
    /// Number of distinct colours on the square, if coloured.
    pub fn colour_count(&self) -> Option<usize> {
        self.colours.map(|c| c.iter().collect::<BTreeSet<_>>().len())
    }
}

impl fmt::Display for SquareWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [v, up, w, um] = &self.vertices;
        write!(f, "({v}, {up}, {w}, {um})")
    }
}

/// Outcome of [`pairwise_5_large`]. When the condition fails, `witness` holds
/// the first colour pair for which both sides have an empty square.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairwiseCheck {
    pub holds: bool,
    pub witness: Option<PairwiseWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairwiseWitness {
    pub colours: (Colour, Colour),
    pub a: SquareWitness,
    pub b: SquareWitness,
}

impl ColoredComplex {
    /// Downward closure of `maximal` over the given coloured vertices.
    pub fn new<S: AsRef<str>>(n: usize, vertices: &[(S, Colour)], maximal: &[Vec<S>]) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::UnsupportedColourCount(n));
        }
        let mut verts: Vec<(Colour, String)> = Vec::with_capacity(vertices.len());
        for (id, c) in vertices {
            if *c == 0 || *c > n {
                return Err(Error::ColourOutOfRange { colour: *c, n });
            }
            verts.push((*c, id.as_ref().to_string()));
        }
        verts.sort();
        let labels: Vec<String> = verts.iter().map(|(_, id)| id.clone()).collect();
        let colours: Vec<Colour> = verts.iter().map(|(c, _)| *c).collect();
        let lookup: HashMap<&str, usize> = {
            let mut m = HashMap::with_capacity(labels.len());
            for (i, l) in labels.iter().enumerate() {
                if m.insert(l.as_str(), i).is_some() {
                    return Err(Error::DuplicateVertex(l.clone()));
                }
            }
            m
        };
        let mut gens = Vec::with_capacity(maximal.len());
        for m in maximal {
            let mut seen: BTreeSet<Colour> = BTreeSet::new();
            let mut vs = Vec::with_capacity(m.len());
            for id in m {
                let v = *lookup
                    .get(id.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(id.as_ref().to_string()))?;
                if !seen.insert(colours[v]) {
                    return Err(Error::DuplicateColour {
                        colour: colours[v],
                        simplex: m.iter().map(|s| s.as_ref().to_string()).collect(),
                    });
                }
                vs.push(v);
            }
            gens.push(Simplex::new(vs));
        }
        let complex = SimplicialComplex::from_simplices(labels, gens)?;
        Ok(ColoredComplex { n, colours, complex })
    }

    /// The complex with `n` colours and no vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new::<&str>(n, &[], &[])
    }

    /// Wraps a complex whose vertex order is already sorted by colour and
    /// whose simplices respect the colouring.
    pub(crate) fn from_parts(n: usize, colours: Vec<Colour>, complex: SimplicialComplex) -> Self {
        debug_assert!(colours.windows(2).all(|w| w[0] <= w[1]));
        ColoredComplex { n, colours, complex }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn vertex_count(&self) -> usize {
        self.colours.len()
    }

    pub fn colour(&self, v: usize) -> Colour {
        self.colours[v]
    }

    pub fn id(&self, v: usize) -> &str {
        self.complex.label(v)
    }

    pub fn vertex(&self, id: &str) -> Option<usize> {
        self.complex.vertex(id)
    }

    /// `(id, colour)` for every vertex, in index order.
    pub fn coloured_vertices(&self) -> impl Iterator<Item = (&str, Colour)> {
        self.complex.labels().iter().map(String::as_str).zip(self.colours.iter().copied())
    }

    pub fn dim(&self) -> isize {
        self.complex.dim()
    }

    pub fn simplices(&self, dim: isize) -> &[Simplex] {
        self.complex.simplices(dim)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.complex.iter()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.complex.contains(s)
    }

    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        self.complex.maximal_simplices()
    }

    pub fn is_pure(&self) -> bool {
        self.complex.is_pure()
    }

    /// Bit `i - 1` is set iff the simplex has a vertex of colour `i`.
    pub fn colour_mask(&self, s: &Simplex) -> u64 {
        s.vertices().iter().fold(0, |m, &v| m | 1 << (self.colours[v] - 1))
    }

    /// Mask with all `n` colours set.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Vertex of colour `c` in `s`, if any.
    pub fn vertex_of_colour(&self, s: &Simplex, c: Colour) -> Option<usize> {
        s.vertices().iter().copied().find(|&v| self.colours[v] == c)
    }

    pub fn ids(&self, s: &Simplex) -> Vec<String> {
        self.complex.simplex_labels(s)
    }

    /// The colour → vertex-id map of a simplex.
    pub fn entries(&self, s: &Simplex) -> BTreeMap<Colour, String> {
        s.vertices().iter().map(|&v| (self.colours[v], self.id(v).to_string())).collect()
    }

    pub fn simplex_from_ids<S: AsRef<str>>(&self, ids: &[S]) -> Result<Simplex> {
        self.complex.simplex_from_labels(ids)
    }

    pub fn simplex_from_entries(&self, entries: &BTreeMap<Colour, String>) -> Result<Simplex> {
        let mut vs = Vec::with_capacity(entries.len());
        for (c, id) in entries {
            let v = self.vertex(id).ok_or_else(|| Error::UnknownVertex(id.clone()))?;
            if self.colours[v] != *c {
                return Err(Error::NotColourPreserving(format!("vertex `{id}` has colour {}, not {c}", self.colours[v])));
            }
            vs.push(v);
        }
        Ok(Simplex::new(vs))
    }

    /// A smallest clique spanning no simplex, as vertex ids.
    pub fn flag_witness(&self) -> Option<Vec<String>> {
        self.complex.flag_witness().map(|s| self.ids(&s))
    }

    pub fn is_flag(&self) -> bool {
        self.complex.is_flag()
    }

    fn sub(&self, complex: SimplicialComplex, old: &[usize]) -> ColoredComplex {
        let colours = old.iter().map(|&v| self.colours[v]).collect();
        ColoredComplex::from_parts(self.n, colours, complex)
    }

    /// Link of `sigma` with the ambient colouring. The link of ∅ is `self`.
    pub fn link_simplex(&self, sigma: &Simplex) -> Result<ColoredComplex> {
        let (k, old) = self.complex.link_with_map(sigma)?;
        Ok(self.sub(k, &old))
    }

    /// Full subcomplex spanned by the given vertex ids.
    pub fn full_subcomplex<S: AsRef<str>>(&self, ids: &[S]) -> Result<ColoredComplex> {
        let vs = self.simplex_from_ids(ids)?;
        Ok(self.full_subcomplex_on(&vs.vertices().iter().copied().collect()))
    }

    pub(crate) fn full_subcomplex_on(&self, vertices: &BTreeSet<usize>) -> ColoredComplex {
        let (k, old) = self.complex.full_subcomplex_with_map(vertices);
        self.sub(k, &old)
    }

    /// Full subcomplex spanned by the vertices whose colour is in `colours`.
    pub fn colour_subcomplex(&self, colours: &[Colour]) -> ColoredComplex {
        let vs = (0..self.vertex_count()).filter(|&v| colours.contains(&self.colours[v])).collect();
        self.full_subcomplex_on(&vs)
    }

    fn witness(&self, q: [usize; 4]) -> SquareWitness {
        SquareWitness {
            vertices: q.map(|v| self.id(v).to_string()),
            colours: Some(q.map(|v| self.colours[v])),
        }
    }

    /// Empty squares of the whole complex, or of the full subcomplex on the
    /// two colour classes of `filter`. Lexicographic in vertex order.
    pub fn empty_squares(&self, filter: Option<(Colour, Colour)>) -> Vec<SquareWitness> {
        match filter {
            None => self.complex.empty_squares().into_iter().map(|q| self.witness(q)).collect(),
            Some((i, j)) => self.colour_subcomplex(&[i, j]).empty_squares(None),
        }
    }

    /// First empty square, if any; `None` means the complex is 5-large.
    pub fn five_large_witness(&self) -> Option<SquareWitness> {
        self.empty_squares(None).into_iter().next()
    }

    pub fn is_5_large(&self) -> bool {
        self.five_large_witness().is_none()
    }

    /// First empty square using more than two colours, if any.
    pub fn obes_witness(&self) -> Option<SquareWitness> {
        self.complex
            .empty_squares()
            .into_iter()
            .find(|&[v, up, w, um]| self.colours[v] != self.colours[w] || self.colours[up] != self.colours[um])
            .map(|q| self.witness(q))
    }

    /// Only bicolour empty squares.
    pub fn is_obes(&self) -> bool {
        self.obes_witness().is_none()
    }

    /// Uncoloured copy with labels passed through `f`.
    pub fn relabelled(&self, f: impl Fn(&str) -> String) -> SimplicialComplex {
        self.complex.relabel(f).expect("relabelling keeps labels distinct")
    }
}

/// For every colour pair `i < j`, at least one of the two bicoloured full
/// subcomplexes has no empty square.
pub fn pairwise_5_large(a: &ColoredComplex, b: &ColoredComplex) -> Result<PairwiseCheck> {
    if a.n() != b.n() {
        return Err(Error::MismatchedColourCount(a.n(), b.n()));
    }
    for i in 1..=a.n() {
        for j in (i + 1)..=a.n() {
            let sa = a.empty_squares(Some((i, j)));
            if sa.is_empty() {
                continue;
            }
            let sb = b.empty_squares(Some((i, j)));
            if let (Some(wa), Some(wb)) = (sa.into_iter().next(), sb.into_iter().next()) {
                return Ok(PairwiseCheck {
                    holds: false,
                    witness: Some(PairwiseWitness { colours: (i, j), a: wa, b: wb }),
                });
            }
        }
    }
    Ok(PairwiseCheck { holds: true, witness: None })
}
