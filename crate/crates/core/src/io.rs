//! Canonical JSON documents: keys sorted, id lists sorted, pretty-printed
//! with a trailing newline, so that export after import is byte-identical.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::cells::CellComplex;
use crate::cube::{CubeComplex, CubeKey};
use crate::error::{Error, Result};
use crate::homology::Chain;
use crate::pocset::{element, Pocset};
use crate::simplicial::{Colour, ColoredComplex, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexJson {
    pub id: String,
    pub color: Colour,
}

/// `{"n", "vertices": [{"id", "color"}], "maximal_simplices"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoredJson {
    pub n: usize,
    pub vertices: Vec<VertexJson>,
    pub maximal_simplices: Vec<Vec<String>>,
}

fn sorted_simplices(mut simplices: Vec<Vec<String>>) -> Vec<Vec<String>> {
    simplices.iter_mut().for_each(|s| s.sort());
    simplices.sort();
    simplices
}

impl From<&ColoredComplex> for ColoredJson {
    fn from(k: &ColoredComplex) -> Self {
        let mut vertices: Vec<VertexJson> =
            k.coloured_vertices().map(|(id, color)| VertexJson { id: id.to_string(), color }).collect();
        vertices.sort_by(|x, y| x.id.cmp(&y.id));
        let maximal = k.maximal_simplices().iter().filter(|s| !s.is_empty()).map(|s| k.ids(s)).collect();
        ColoredJson { n: k.n(), vertices, maximal_simplices: sorted_simplices(maximal) }
    }
}

impl ColoredJson {
    pub fn to_complex(&self) -> Result<ColoredComplex> {
        let vs: Vec<(String, Colour)> = self.vertices.iter().map(|v| (v.id.clone(), v.color)).collect();
        ColoredComplex::new(self.n, &vs, &self.maximal_simplices)
    }
}

/// `{"a": coloured complex, "b": coloured complex}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairJson {
    pub a: ColoredJson,
    pub b: ColoredJson,
}

impl PairJson {
    pub fn new(a: &ColoredComplex, b: &ColoredComplex) -> Self {
        PairJson { a: a.into(), b: b.into() }
    }

    pub fn to_pair(&self) -> Result<(ColoredComplex, ColoredComplex)> {
        Ok((self.a.to_complex()?, self.b.to_complex()?))
    }
}

/// An uncoloured complex, `{"vertices": [id], "maximal_simplices"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialJson {
    pub vertices: Vec<String>,
    pub maximal_simplices: Vec<Vec<String>>,
}

impl From<&SimplicialComplex> for SimplicialJson {
    fn from(k: &SimplicialComplex) -> Self {
        let mut vertices = k.labels().to_vec();
        vertices.sort();
        let maximal = k.maximal_simplices().iter().filter(|s| !s.is_empty()).map(|s| k.simplex_labels(s)).collect();
        SimplicialJson { vertices, maximal_simplices: sorted_simplices(maximal) }
    }
}

impl SimplicialJson {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let mut gens = Vec::with_capacity(self.maximal_simplices.len());
        let probe = SimplicialComplex::from_simplices(self.vertices.clone(), Vec::new())?;
        for s in &self.maximal_simplices {
            gens.push(probe.simplex_from_labels(s)?);
        }
        SimplicialComplex::from_simplices(self.vertices.clone(), gens)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubeKeyJson {
    pub a: BTreeMap<Colour, String>,
    pub b: BTreeMap<Colour, String>,
    pub dim: usize,
}

/// A coupled-link complex by its cube keys, `{"n", "cubes": [{"a", "b", "dim"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClccJson {
    pub n: usize,
    pub cubes: Vec<CubeKeyJson>,
}

impl ClccJson {
    pub fn new(x: &CubeComplex) -> Result<Self> {
        let origin = x.origin().ok_or(Error::MissingOrigin)?;
        let mut cubes: Vec<CubeKeyJson> = origin
            .keys
            .iter()
            .flatten()
            .map(|k| CubeKeyJson { a: k.a.clone(), b: k.b.clone(), dim: k.dim() })
            .collect();
        cubes.sort_by(|x, y| (x.dim, &x.a, &x.b).cmp(&(y.dim, &y.a, &y.b)));
        Ok(ClccJson { n: origin.n, cubes })
    }

    pub fn to_complex(&self) -> Result<CubeComplex> {
        let mut keys = Vec::with_capacity(self.cubes.len());
        for c in &self.cubes {
            let key = CubeKey { a: c.a.clone(), b: c.b.clone() };
            if key.dim() != c.dim {
                return Err(Error::MalformedCubeComplex(format!("cube `{}` declares dimension {}", key.id(), c.dim)));
            }
            keys.push(key);
        }
        CubeComplex::from_keys(self.n, keys)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellJson {
    pub id: String,
    pub facets: Vec<String>,
}

/// Any cube complex, `{"vertices": [id], "cubes": [{"id", "facets"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubesJson {
    pub vertices: Vec<String>,
    pub cubes: Vec<CellJson>,
}

impl From<&CubeComplex> for CubesJson {
    fn from(x: &CubeComplex) -> Self {
        let mut vertices = x.ids(0).to_vec();
        vertices.sort();
        let mut cubes: Vec<CellJson> = (1..=x.top_dim().max(0) as usize)
            .flat_map(|d| {
                (0..x.ids(d).len()).map(move |c| {
                    let mut facets: Vec<String> = x.facets(d as isize, c).iter().map(|&f| x.id(d - 1, f).to_string()).collect();
                    facets.sort();
                    CellJson { id: x.id(d, c).to_string(), facets }
                })
            })
            .collect();
        cubes.sort_by(|p, q| (p.facets.len(), &p.id).cmp(&(q.facets.len(), &q.id)));
        CubesJson { vertices, cubes }
    }
}

impl CubesJson {
    pub fn to_complex(&self) -> Result<CubeComplex> {
        let cubes: Vec<(String, Vec<String>)> = self.cubes.iter().map(|c| (c.id.clone(), c.facets.clone())).collect();
        CubeComplex::from_cells(&self.vertices, &cubes)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairIdJson {
    pub id: String,
}

/// `{"pairs": [{"id"}], "less": [["h+", "k-"]]}`; sides are `+` and `-`
/// (`−` is accepted on input).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PocsetJson {
    pub pairs: Vec<PairIdJson>,
    pub less: Vec<[String; 2]>,
}

impl From<&Pocset> for PocsetJson {
    fn from(p: &Pocset) -> Self {
        let mut pairs: Vec<PairIdJson> = p.ids().iter().map(|id| PairIdJson { id: id.clone() }).collect();
        pairs.sort_by(|x, y| x.id.cmp(&y.id));
        let mut less: Vec<[String; 2]> =
            p.relations().into_iter().map(|(s, t)| [p.element_name(s), p.element_name(t)]).collect();
        less.sort();
        PocsetJson { pairs, less }
    }
}

impl PocsetJson {
    pub fn to_pocset(&self) -> Result<Pocset> {
        let ids: Vec<String> = self.pairs.iter().map(|p| p.id.clone()).collect();
        let parse = |name: &str| -> Result<usize> {
            let (id, minus) = if let Some(id) = name.strip_suffix('+') {
                (id, false)
            } else if let Some(id) = name.strip_suffix('-').or_else(|| name.strip_suffix('−')) {
                (id, true)
            } else {
                return Err(Error::InvalidPocset(format!("element `{name}` lacks a side")));
            };
            let pair = ids
                .iter()
                .position(|p| p == id)
                .ok_or_else(|| Error::InvalidPocset(format!("unknown pair `{id}`")))?;
            Ok(element(pair, minus))
        };
        let relations = self.less.iter().map(|[s, t]| Ok((parse(s)?, parse(t)?))).collect::<Result<Vec<_>>>()?;
        Pocset::new(ids, &relations)
    }
}

/// `{"dim", "cells"}`. Simplices are id lists, cubes are cube ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainJson {
    pub dim: isize,
    pub cells: Vec<Value>,
}

impl ChainJson {
    pub fn from_simplicial(k: &SimplicialComplex, c: &Chain) -> Self {
        let mut cells: Vec<Vec<String>> = c
            .cells
            .iter()
            .map(|&i| {
                let mut ids = k.simplex_labels(&k.simplices(c.dim)[i]);
                ids.sort();
                ids
            })
            .collect();
        cells.sort();
        ChainJson { dim: c.dim, cells: cells.into_iter().map(Value::from).collect() }
    }

    pub fn from_cubes(x: &CubeComplex, c: &Chain) -> Self {
        let mut cells: Vec<String> = if c.dim < 0 {
            c.cells.iter().map(|_| String::new()).collect()
        } else {
            c.cells.iter().map(|&i| x.id(c.dim as usize, i).to_string()).collect()
        };
        cells.sort();
        ChainJson { dim: c.dim, cells: cells.into_iter().map(Value::from).collect() }
    }

    pub fn to_simplicial_chain(&self, k: &SimplicialComplex) -> Result<Chain> {
        let mut cells = BTreeSet::new();
        for v in &self.cells {
            let ids: Vec<String> = serde_json::from_value(v.clone())
                .map_err(|e| Error::InvalidChain(format!("cell {v}: {e}")))?;
            if ids.len() as isize != self.dim + 1 {
                return Err(Error::InvalidChain(format!("cell {ids:?} is not a {}-simplex", self.dim)));
            }
            let s = k.simplex_from_labels(&ids)?;
            let i = k.index_of(&s).ok_or_else(|| Error::MissingSimplex(ids.clone()))?;
            if !cells.insert(i) {
                return Err(Error::InvalidChain(format!("cell {ids:?} listed twice")));
            }
        }
        Ok(Chain { dim: self.dim, cells })
    }

    pub fn to_cube_chain(&self, x: &CubeComplex) -> Result<Chain> {
        let mut cells = BTreeSet::new();
        for v in &self.cells {
            let id = v.as_str().ok_or_else(|| Error::InvalidChain(format!("cell {v} is not a cube id")))?;
            if self.dim == -1 && id.is_empty() {
                cells.insert(0);
                continue;
            }
            let (d, i) = x.find(id).ok_or_else(|| Error::MissingCube(id.to_string()))?;
            if d as isize != self.dim {
                return Err(Error::InvalidChain(format!("`{id}` has dimension {d}, not {}", self.dim)));
            }
            if !cells.insert(i) {
                return Err(Error::InvalidChain(format!("cell `{id}` listed twice")));
            }
        }
        Ok(Chain { dim: self.dim, cells })
    }
}

/// Any document this crate reads, told apart by its keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Pair(PairJson),
    Colored(ColoredJson),
    Simplicial(SimplicialJson),
    Clcc(ClccJson),
    Cubes(CubesJson),
    Pocset(PocsetJson),
    Chain(ChainJson),
}

fn schema<T: for<'de> Deserialize<'de>>(v: Value, what: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::InvalidParameter(format!("not a valid {what}: {e}")))
}

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("malformed JSON: {e}")))?;
        let obj = v.as_object().ok_or_else(|| Error::InvalidParameter("expected a JSON object".into()))?;
        let has = |k: &str| obj.contains_key(k);
        if has("a") && has("b") {
            Ok(Document::Pair(schema(v, "pair")?))
        } else if has("pairs") {
            Ok(Document::Pocset(schema(v, "pocset")?))
        } else if has("dim") && has("cells") {
            Ok(Document::Chain(schema(v, "chain")?))
        } else if has("cubes") && has("n") {
            Ok(Document::Clcc(schema(v, "coupled-link complex")?))
        } else if has("cubes") {
            Ok(Document::Cubes(schema(v, "cube complex")?))
        } else if has("n") {
            Ok(Document::Colored(schema(v, "coloured complex")?))
        } else if has("maximal_simplices") {
            Ok(Document::Simplicial(schema(v, "simplicial complex")?))
        } else {
            Err(Error::InvalidParameter("unrecognised document".into()))
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::Pair(_) => "pair",
            Document::Colored(_) => "coloured complex",
            Document::Simplicial(_) => "simplicial complex",
            Document::Clcc(_) => "coupled-link complex",
            Document::Cubes(_) => "cube complex",
            Document::Pocset(_) => "pocset",
            Document::Chain(_) => "chain",
        }
    }

    pub fn to_canonical(&self) -> String {
        match self {
            Document::Pair(d) => canonical(d),
            Document::Colored(d) => canonical(d),
            Document::Simplicial(d) => canonical(d),
            Document::Clcc(d) => canonical(d),
            Document::Cubes(d) => canonical(d),
            Document::Pocset(d) => canonical(d),
            Document::Chain(d) => canonical(d),
        }
    }
}

/// Pretty JSON with object keys sorted, ending in a newline.
pub fn canonical<T: Serialize + ?Sized>(x: &T) -> String {
    let v = serde_json::to_value(x).expect("document serializes");
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}

/// Hex SHA-256 of a string.
pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn pair_digest(a: &ColoredComplex, b: &ColoredComplex) -> String {
    digest(&canonical(&PairJson::new(a, b)))
}
