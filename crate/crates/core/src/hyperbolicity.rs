//! Sufficient conditions for hyperbolicity of the fundamental group of a
//! CLCC, and the exact criterion for right-angled Coxeter groups.
//!
//! Verdicts are three-valued: `Unknown` only means that no implemented rule
//! applies.

use serde::Serialize;

use crate::clcc::build_clcc;
use crate::error::{Error, Result};
use crate::generators::barycentric_pair;
use crate::io::pair_digest;
use crate::simplicial::{pairwise_5_large, BarycentricColours, Colour, ColoredComplex, SimplicialComplex, SquareWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Hyperbolic,
    NotHyperbolic,
    Unknown,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Hyperbolic => "Hyperbolic",
            Verdict::NotHyperbolic => "NotHyperbolic",
            Verdict::Unknown => "Unknown",
        }
    }
}

pub const RULE_FIVE_LARGE: &str = "5-large-factor";
pub const RULE_PAIRWISE: &str = "pairwise-5-large+obes";
pub const RULE_RACG: &str = "racg-empty-square";
pub const RULE_LINKS: &str = "vertex-links-5-large";
pub const RULE_BARYCENTRIC: &str = "barycentric-2-complexes";
pub const RULE_NONE: &str = "none";

/// Evidence attached to a verdict; every field can be re-checked directly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// This side has no empty square.
    FiveLargeSide { side: char },
    /// For each colour pair, a side whose bicoloured full subcomplex has no
    /// empty square; both sides have only bicolour empty squares.
    PairwiseObes { pairs: Vec<((Colour, Colour), char)> },
    /// The full cross-polytope is on `cross_polytope_side`; the other side
    /// contains `square`.
    EmptySquare { cross_polytope_side: char, square: SquareWitness },
    /// Number of CLCC vertices whose links were checked.
    VertexLinks { vertices: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub rule: String,
    pub witness: Option<Witness>,
    /// Rules tried, in order, up to and including the deciding one.
    pub attempted: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// SHA-256 of the canonical JSON of the input pair.
    pub digest: String,
}

/// Whether `k` is the whole cross-polytope: two vertices of each colour and
/// every transversal a simplex.
pub fn is_full_cross_polytope(k: &ColoredComplex) -> bool {
    let n = k.n();
    let per_colour = (1..=n).all(|c| k.coloured_vertices().filter(|(_, col)| *col == c).count() == 2);
    per_colour && n < 64 && k.simplices(n as isize - 1).len() == 1 << n
}

/// At most one vertex of each colour, as for a graph whose `i`-th vertex
/// carries colour `i`.
pub fn is_racg_shaped(k: &ColoredComplex) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    k.coloured_vertices().all(|(_, c)| seen.insert(c))
}

fn side_name(side: usize) -> char {
    if side == 0 {
        'A'
    } else {
        'B'
    }
}

/// Applies the rules in order: `Γ_A` 5-large; pairwise 5-large with only
/// bicolour empty squares; `Γ_B` 5-large; a full cross-polytope against a
/// complex with one vertex per colour and an empty square (negative); all
/// vertex links of the CLCC 5-large. The verdict is symmetric in the two sides, the rule need not be.
pub fn certify(a: &ColoredComplex, b: &ColoredComplex) -> Result<Certificate> {
    if a.n() != b.n() {
        return Err(Error::MismatchedColourCount(a.n(), b.n()));
    }
    let digest = pair_digest(a, b);
    let mut attempted: Vec<String> = Vec::new();
    let done = |verdict, rule: &str, witness, attempted: Vec<String>| Certificate {
        verdict,
        rule: rule.to_string(),
        witness,
        attempted,
        reason: None,
        digest: digest.clone(),
    };
    if !a.is_flag() || !b.is_flag() {
        return Ok(Certificate {
            reason: Some("NPC hypothesis unverified by flagness".into()),
            ..done(Verdict::Unknown, RULE_NONE, None, attempted)
        });
    }
    let sides = [a, b];
    attempted.push(RULE_FIVE_LARGE.into());
    if a.is_5_large() {
        return Ok(done(Verdict::Hyperbolic, RULE_FIVE_LARGE, Some(Witness::FiveLargeSide { side: 'A' }), attempted));
    }

    attempted.push(RULE_PAIRWISE.into());
    if pairwise_5_large(a, b)?.holds && a.is_obes() && b.is_obes() {
        let n = a.n();
        let pairs = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let s = if a.empty_squares(Some((i, j))).is_empty() { 0 } else { 1 };
                ((i, j), side_name(s))
            })
            .collect();
        return Ok(done(Verdict::Hyperbolic, RULE_PAIRWISE, Some(Witness::PairwiseObes { pairs }), attempted));
    }

    if b.is_5_large() {
        attempted.push(RULE_FIVE_LARGE.into());
        return Ok(done(Verdict::Hyperbolic, RULE_FIVE_LARGE, Some(Witness::FiveLargeSide { side: 'B' }), attempted));
    }

    attempted.push(RULE_RACG.into());
    for s in 0..2 {
        if is_full_cross_polytope(sides[s]) && is_racg_shaped(sides[1 - s]) {
            if let Some(square) = sides[1 - s].five_large_witness() {
                let w = Witness::EmptySquare { cross_polytope_side: side_name(s), square };
                return Ok(done(Verdict::NotHyperbolic, RULE_RACG, Some(w), attempted));
            }
        }
    }

    attempted.push(RULE_LINKS.into());
    let x = build_clcc(a, b)?;
    let vertices = x.vertex_count();
    if vertices > 0 && (0..vertices).all(|v| is_5_large(&x.vertex_link(v))) {
        return Ok(done(Verdict::Hyperbolic, RULE_LINKS, Some(Witness::VertexLinks { vertices }), attempted));
    }

    Ok(done(Verdict::Unknown, RULE_NONE, None, attempted))
}

/// Flag with no empty square.
pub fn is_5_large(k: &SimplicialComplex) -> bool {
    k.is_flag() && k.empty_squares().is_empty()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoussongVerdict {
    pub verdict: Verdict,
    pub square: Option<[String; 4]>,
}

/// The right-angled Coxeter group of a flag complex is hyperbolic exactly
/// when the complex has no empty square.
pub fn moussong(g: &SimplicialComplex) -> Result<MoussongVerdict> {
    if let Some(w) = g.flag_witness() {
        return Err(Error::NotFlag(g.simplex_labels(&w)));
    }
    Ok(match g.empty_squares().first() {
        Some(q) => MoussongVerdict { verdict: Verdict::NotHyperbolic, square: Some(q.map(|v| g.label(v).to_string())) },
        None => MoussongVerdict { verdict: Verdict::Hyperbolic, square: None },
    })
}

/// Subdivides two complexes of dimension at most two with distinct
/// edge-barycentre colours and certifies the pair. The o.b.e.s. and
/// pairwise 5-large checks always hold for such pairs; a failure is reported
/// as an internal error.
pub fn certify_barycentric(
    g: &SimplicialComplex,
    cg: BarycentricColours,
    l: &SimplicialComplex,
    cl: BarycentricColours,
) -> Result<Certificate> {
    let (a, b) = barycentric_pair(g, cg, l, cl)?;
    for (name, k) in [("A", &a), ("B", &b)] {
        if let Some(w) = k.obes_witness() {
            return Err(Error::Internal(format!("subdivision {name} has the multicolour empty square {w}")));
        }
    }
    let pairwise = pairwise_5_large(&a, &b)?;
    if let Some(w) = pairwise.witness {
        return Err(Error::Internal(format!(
            "both subdivisions have empty squares on colours {:?}: {} and {}",
            w.colours, w.a, w.b
        )));
    }
    let pairs = [(1, 2), (1, 3), (2, 3)]
        .into_iter()
        .map(|(i, j)| ((i, j), if a.empty_squares(Some((i, j))).is_empty() { 'A' } else { 'B' }))
        .collect();
    Ok(Certificate {
        verdict: Verdict::Hyperbolic,
        rule: RULE_BARYCENTRIC.into(),
        witness: Some(Witness::PairwiseObes { pairs }),
        attempted: vec![RULE_BARYCENTRIC.into()],
        reason: None,
        digest: pair_digest(&a, &b),
    })
}
