use std::collections::BTreeMap;
use std::fs;
use std::io::{Read, Write};
use std::time::Instant;

use serde_json::{json, Map, Value};

use clcc_core::cells::{self, CellComplex};
use clcc_core::clcc::{self, classify_link, ConnEngine};
use clcc_core::homology::{self, betti};
use clcc_core::hyperbolicity::{certify, moussong};
use clcc_core::io::{
    canonical, digest, ChainJson, ClccJson, CubesJson, Document, PairJson, PocsetJson, SimplicialJson,
};
use clcc_core::pocset::{crossing_graph, directions, hyperplanes, roller_duality_check, sageev};
use clcc_core::simplicial::BarycentricColours;
use clcc_core::{build_clcc, generators, Clcc, ColoredComplex, CubeComplex, Error, SimplicialComplex};

use crate::{
    BuildArgs, CertifyArgs, CheckArgs, Command, ConnectArgs, CycleArgs, Engine, ExportArgs, Family, GenerateArgs,
    HomologyArgs, InputArgs, InvariantsArgs, LinkArgs, OutputArgs,
};

pub enum Failure {
    /// Bad arguments or unreadable input: exit 2.
    Usage(String),
    /// A domain error from the library: exit 1.
    Domain(Error),
    /// A check ran and failed; its report is already printed: exit 1.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(m) => Failure::Usage(m),
            e => Failure::Domain(e),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

pub fn run(cmd: Command) -> u8 {
    let start = Instant::now();
    let name = command_name(&cmd);
    let result = dispatch(cmd);
    let ms = start.elapsed().as_millis();
    match result {
        Ok(()) => {
            eprintln!("clcc {name}: ok ({ms} ms)");
            0
        }
        Err(Failure::Usage(m)) => {
            eprintln!("clcc {name}: {m}");
            2
        }
        Err(Failure::Domain(e)) => {
            print!("{}", canonical(&json!({"command": name, "error": {"kind": e.kind(), "message": e.to_string()}})));
            eprintln!("clcc {name}: {e}");
            1
        }
        Err(Failure::Check) => {
            eprintln!("clcc {name}: check failed ({ms} ms)");
            1
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Generate(_) => "generate",
        Command::Build(_) => "build",
        Command::Check(_) => "check",
        Command::Link(_) => "link",
        Command::Connect(_) => "connect",
        Command::Invariants(_) => "invariants",
        Command::Homology(_) => "homology",
        Command::Cycle(_) => "cycle",
        Command::Hyperplanes(_) => "hyperplanes",
        Command::Sageev(_) => "sageev",
        Command::Duality(_) => "duality",
        Command::Certify(_) => "certify",
        Command::Export(_) => "export",
    }
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Generate(a) => generate(a),
        Command::Build(a) => build(a),
        Command::Check(a) => check(a),
        Command::Link(a) => link(a),
        Command::Connect(a) => connect(a),
        Command::Invariants(a) => invariants(a),
        Command::Homology(a) => homology_cmd(a),
        Command::Cycle(a) => cycle(a),
        Command::Hyperplanes(a) => hyperplanes_cmd(a),
        Command::Sageev(a) => sageev_cmd(a),
        Command::Duality(a) => duality(a),
        Command::Certify(a) => certify_cmd(a),
        Command::Export(a) => export(a),
    }
}

fn read_text(path: &str) -> std::result::Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading `{path}`: {e}")))
    }
}

fn write_text(out: &Option<String>, text: &str) -> Outcome {
    match out {
        Some(path) if path != "-" => fs::write(path, text).map_err(|e| Failure::Usage(format!("writing `{path}`: {e}"))),
        _ => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::Usage(format!("writing stdout: {e}")))
        }
    }
}

/// Prints `{"command", "input_digest", ...fields}`.
fn report(command: &str, input: &str, fields: Value) -> Outcome {
    let mut obj = Map::new();
    obj.insert("command".into(), command.into());
    obj.insert("input_digest".into(), digest(input).into());
    if let Value::Object(m) = fields {
        obj.extend(m);
    }
    write_text(&None, &canonical(&Value::Object(obj)))
}

fn parse(text: &str) -> std::result::Result<Document, Failure> {
    Ok(Document::parse(text)?)
}

fn wrong_kind(doc: &Document, wanted: &str) -> Failure {
    Failure::Usage(format!("expected {wanted}, got a {}", doc.kind()))
}

fn load_pair(text: &str) -> std::result::Result<(ColoredComplex, ColoredComplex), Failure> {
    match parse(text)? {
        Document::Pair(p) => Ok(p.to_pair()?),
        other => Err(wrong_kind(&other, "a pair")),
    }
}

/// Anything with cells.
enum Host {
    Simplicial(SimplicialComplex),
    Cubes(CubeComplex),
}

fn load_host(doc: Document) -> std::result::Result<Host, Failure> {
    Ok(match doc {
        Document::Pair(p) => {
            let (a, b) = p.to_pair()?;
            Host::Cubes(build_clcc(&a, &b)?.cubes().clone())
        }
        Document::Clcc(c) => Host::Cubes(c.to_complex()?),
        Document::Cubes(c) => Host::Cubes(c.to_complex()?),
        Document::Colored(c) => Host::Simplicial(c.to_complex()?.complex().clone()),
        Document::Simplicial(s) => Host::Simplicial(s.to_complex()?),
        other => return Err(wrong_kind(&other, "a complex")),
    })
}

fn load_cubes(doc: Document) -> std::result::Result<CubeComplex, Failure> {
    match doc {
        Document::Pair(_) | Document::Clcc(_) | Document::Cubes(_) => match load_host(doc)? {
            Host::Cubes(x) => Ok(x),
            Host::Simplicial(_) => unreachable!("cube documents load as cube complexes"),
        },
        other => Err(wrong_kind(&other, "a cube complex or pair")),
    }
}

/// A named fixture or a JSON file holding a simplicial or coloured complex.
fn load_simplicial(source: &str) -> std::result::Result<SimplicialComplex, Failure> {
    if let Some(k) = generators::named(source) {
        return Ok(k);
    }
    let text = read_text(source).map_err(|_| {
        Failure::Usage(format!("`{source}` is neither a file nor one of {}", generators::NAMED.join(", ")))
    })?;
    match parse(&text)? {
        Document::Simplicial(s) => Ok(s.to_complex()?),
        Document::Colored(c) => Ok(c.to_complex()?.complex().clone()),
        other => Err(wrong_kind(&other, "a simplicial complex")),
    }
}

fn barycentric_colours(cs: &[usize]) -> std::result::Result<BarycentricColours, Failure> {
    match cs {
        [v, e, f] => Ok(BarycentricColours::new(*v, *e, *f)),
        _ => Err(Failure::Usage(format!("expected three colours V,E,F, got {cs:?}"))),
    }
}

fn generate(args: GenerateArgs) -> Outcome {
    let need = |x: &Option<String>, flag: &str| x.clone().ok_or_else(|| Failure::Usage(format!("--{flag} is required")));
    let text = match args.family {
        Family::Surface => {
            let (a, b) = generators::surface_pair(args.ka, args.kb)?;
            canonical(&PairJson::new(&a, &b))
        }
        Family::Salvetti => {
            let (a, b) = generators::salvetti_pair(&load_simplicial(&need(&args.graph, "graph")?)?)?;
            canonical(&PairJson::new(&a, &b))
        }
        Family::Racg => {
            let (a, b) = generators::racg_pair(&load_simplicial(&need(&args.graph, "graph")?)?)?;
            canonical(&PairJson::new(&a, &b))
        }
        Family::Barycentric => {
            let g = load_simplicial(&need(&args.g, "g")?)?;
            let l = load_simplicial(&need(&args.l, "l")?)?;
            let (a, b) = generators::barycentric_pair(
                &g,
                barycentric_colours(&args.g_colours)?,
                &l,
                barycentric_colours(&args.l_colours)?,
            )?;
            canonical(&PairJson::new(&a, &b))
        }
        Family::Cycle => {
            let [i, j] = args.colours[..] else {
                return Err(Failure::Usage("--colours takes two colours".into()));
            };
            let c = generators::cycle(&args.prefix, args.k, (i, j), args.n)?;
            canonical(&clcc_core::io::ColoredJson::from(&c))
        }
        Family::Crosspolytope => {
            let c = generators::cross_polytope(&args.prefix, args.n)?;
            canonical(&clcc_core::io::ColoredJson::from(&c))
        }
    };
    write_text(&args.out, &text)
}

fn build(args: BuildArgs) -> Outcome {
    let path = args.pair_flag.as_deref().unwrap_or(&args.pair);
    let (a, b) = load_pair(&read_text(path)?)?;
    let x = build_clcc(&a, &b)?;
    let counts = x.cubes().counts();
    eprintln!("cubes per dimension: {counts:?}");
    let text = if args.cells { canonical(&CubesJson::from(x.cubes())) } else { canonical(&ClccJson::new(x.cubes())?) };
    write_text(&args.out, &text)
}

fn check(args: CheckArgs) -> Outcome {
    let text = read_text(&args.input)?;
    let doc = parse(&text)?;
    let k = &args.kind;
    let (name, holds, witness): (&str, bool, Value) = if k.pairwise || k.smart || k.double_smart || k.npc {
        let (a, b) = match doc {
            Document::Pair(p) => p.to_pair()?,
            other => return Err(wrong_kind(&other, "a pair")),
        };
        if k.pairwise {
            let r = clcc_core::simplicial::pairwise_5_large(&a, &b)?;
            ("pairwise", r.holds, json!(r.witness))
        } else if k.npc {
            let r = clcc::is_npc(&a, &b)?;
            ("npc", r.npc, json!({"path": r.path, "vertex": r.witness}))
        } else {
            let (name, r) =
                if k.smart { ("smart", clcc::smartly_paired(&a, &b)?) } else { ("double-smart", clcc::doubly_smartly_paired(&a, &b)?) };
            let w = r.witness.map(|(side, s)| json!({"side": format!("{side:?}"), "simplex": s}));
            (name, r.holds, json!(w))
        }
    } else {
        let sides: Vec<(&str, ColoredOrPlain)> = match doc {
            Document::Pair(p) => {
                let (a, b) = p.to_pair()?;
                vec![("A", ColoredOrPlain::Colored(a)), ("B", ColoredOrPlain::Colored(b))]
            }
            Document::Colored(c) => vec![("", ColoredOrPlain::Colored(c.to_complex()?))],
            Document::Simplicial(s) => vec![("", ColoredOrPlain::Plain(s.to_complex()?))],
            other => return Err(wrong_kind(&other, "a complex or pair")),
        };
        let name = if k.flag { "flag" } else if k.five_large { "5large" } else { "obes" };
        let mut witness = Value::Null;
        for (side, c) in &sides {
            let w = c.witness(name)?;
            if !w.is_null() {
                witness = if side.is_empty() { w } else { json!({"side": side, "witness": w}) };
                break;
            }
        }
        (name, witness.is_null(), witness)
    };
    report("check", &text, json!({"check": name, "holds": holds, "witness": witness}))?;
    if holds {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

enum ColoredOrPlain {
    Colored(ColoredComplex),
    Plain(SimplicialComplex),
}

impl ColoredOrPlain {
    fn plain(&self) -> &SimplicialComplex {
        match self {
            ColoredOrPlain::Colored(c) => c.complex(),
            ColoredOrPlain::Plain(k) => k,
        }
    }

    /// `null` when the property holds.
    fn witness(&self, property: &str) -> std::result::Result<Value, Failure> {
        let k = self.plain();
        if let Some(w) = k.flag_witness() {
            return Ok(json!({"clique": k.simplex_labels(&w)}));
        }
        Ok(match (property, self) {
            ("flag", _) => Value::Null,
            ("5large", _) => match k.empty_squares().first() {
                Some(q) => json!({"square": q.map(|v| k.label(v).to_string())}),
                None => Value::Null,
            },
            (_, ColoredOrPlain::Colored(c)) => json!(c.obes_witness()),
            (_, ColoredOrPlain::Plain(_)) => {
                return Err(Failure::Usage("--obes needs a coloured complex".into()));
            }
        })
    }
}

fn link(args: LinkArgs) -> Outcome {
    let text = read_text(&args.input)?;
    let doc = parse(&text)?;
    let k = match (&args.cell, doc) {
        (Some(id), doc) => {
            let x = load_cubes(doc)?;
            let (d, i) = x.find(id).ok_or_else(|| Error::MissingCube(id.clone()))?;
            x.link(d, i)?
        }
        (None, Document::Pair(p)) => {
            let (a, b) = p.to_pair()?;
            let x = build_clcc(&a, &b)?;
            let sa = a.simplex_from_ids(&args.a)?;
            let sb = b.simplex_from_ids(&args.b)?;
            x.link_of_cube(&sa, &sb)?
        }
        (None, other) => return Err(wrong_kind(&other, "a pair (or pass --cell)")),
    };
    write_text(&args.out, &canonical(&SimplicialJson::from(&k)))
}

fn connect(args: ConnectArgs) -> Outcome {
    let text = read_text(&args.input)?;
    let (a, b) = load_pair(&text)?;
    let (engine, name) = match args.engine {
        Engine::Bfs => (ConnEngine::Bfs, "bfs"),
        Engine::Criterion => (ConnEngine::Criterion, "criterion"),
    };
    let connected = clcc::is_connected(&a, &b, engine)?;
    let components = build_clcc(&a, &b)?.cubes().components().0;
    report("connect", &text, json!({"engine": name, "connected": connected, "components": components}))
}

fn link_types<C: CellComplex + ?Sized>(host: &C) -> std::result::Result<BTreeMap<String, String>, Failure> {
    let up = cells::cofacets(host);
    let mut out = BTreeMap::new();
    for v in 0..host.cell_count(0) {
        let kind = match cells::cell_link(host, &up, 0, v) {
            Ok(l) => classify_link(&l.complex).as_str().to_string(),
            Err(Error::NonSimplicialLink(_)) => "non-simplicial".to_string(),
            Err(e) => return Err(e.into()),
        };
        out.insert(host.cell_label(0, v), kind);
    }
    Ok(out)
}

fn invariants(args: InvariantsArgs) -> Outcome {
    let text = read_text(&args.input)?;
    let host = load_host(parse(&text)?)?;
    let all = !(args.chi || args.dim || args.links);
    let mut fields = Map::new();
    let h: &dyn CellComplex = match &host {
        Host::Simplicial(k) => k,
        Host::Cubes(x) => x,
    };
    if all || args.chi {
        fields.insert("euler_characteristic".into(), cells::euler_characteristic(h).into());
    }
    if all || args.dim {
        fields.insert("dimension".into(), h.top_dim().into());
        fields.insert("pure".into(), cells::is_pure(h).into());
        let counts: Vec<usize> = (0..=h.top_dim()).map(|d| h.cell_count(d)).collect();
        fields.insert("cell_counts".into(), json!(counts));
        if let Host::Cubes(x) = &host {
            fields.insert("components".into(), x.components().0.into());
        }
    }
    if all || args.links {
        let types = link_types(h)?;
        let mut tally: BTreeMap<&str, usize> = BTreeMap::new();
        for t in types.values() {
            *tally.entry(t).or_default() += 1;
        }
        fields.insert("link_types".into(), json!(tally));
        fields.insert("vertex_links".into(), json!(types));
    }
    report("invariants", &text, Value::Object(fields))
}

fn homology_cmd(args: HomologyArgs) -> Outcome {
    let text = read_text(&args.input)?;
    let host = load_host(parse(&text)?)?;
    let (red, unred) = match &host {
        Host::Simplicial(k) => (betti(k, true), betti(k, false)),
        Host::Cubes(x) => (betti(x, true), betti(x, false)),
    };
    let chosen = if args.reduced { &red.ranks } else { &unred.ranks };
    eprintln!("betti: {chosen:?}");
    report(
        "homology",
        &text,
        json!({"reduced": args.reduced, "betti": chosen, "reduced_betti": red.ranks, "unreduced_betti": unred.ranks}),
    )
}

fn load_chain(path: &Option<String>, k: &ColoredComplex) -> std::result::Result<homology::Chain, Failure> {
    match path {
        None => Ok(homology::fundamental_chain(k.complex())),
        Some(p) => match parse(&read_text(p)?)? {
            Document::Chain(c) => Ok(c.to_simplicial_chain(k.complex())?),
            other => Err(wrong_kind(&other, "a chain")),
        },
    }
}

fn cycle(args: CycleArgs) -> Outcome {
    let text = read_text(&args.pair)?;
    let (a, b) = load_pair(&text)?;
    let x: Clcc = build_clcc(&a, &b)?;
    let oa = load_chain(&args.omega_a, &a)?;
    let ob = load_chain(&args.omega_b, &b)?;
    let c = homology::clcc_cycle(&x, &oa, &ob)?;
    let is_cycle = c.dim < 0 || homology::is_cycle(&x, &c)?;
    report(
        "cycle",
        &text,
        json!({"chain": ChainJson::from_cubes(x.cubes(), &c), "is_cycle": is_cycle, "cells": c.len()}),
    )
}

fn hyperplanes_cmd(args: InputArgs) -> Outcome {
    let text = read_text(&args.input)?;
    let x = load_cubes(parse(&text)?)?;
    let hs = hyperplanes(&x);
    let dirs = directions(&x, &hs).ok();
    let crossing = crossing_graph(&x, &hs);
    let list: Vec<Value> = hs
        .iter()
        .map(|h| {
            let edges: Vec<&str> = h.edges.iter().map(|&e| x.id(1, e)).collect();
            let direction = dirs.as_ref().and_then(|d| d.colours[h.id]);
            json!({"id": format!("h{}", h.id), "edges": edges, "direction": direction})
        })
        .collect();
    let crossings: Vec<[String; 2]> = crossing.edges.iter().map(|(g, h)| [format!("h{g}"), format!("h{h}")]).collect();
    report(
        "hyperplanes",
        &text,
        json!({
            "hyperplanes": list,
            "crossings": crossings,
            "self_crossing": crossing.self_crossings.iter().map(|h| format!("h{h}")).collect::<Vec<_>>(),
            "directions_valid": dirs.as_ref().map(|d| d.valid),
        }),
    )
}

fn sageev_cmd(args: OutputArgs) -> Outcome {
    let text = read_text(&args.input)?;
    let p = match parse(&text)? {
        Document::Pocset(p) => p.to_pocset()?,
        other => return Err(wrong_kind(&other, "a pocset")),
    };
    let x = sageev(&p)?;
    eprintln!("cubes per dimension: {:?}", x.complex.counts());
    write_text(&args.out, &canonical(&CubesJson::from(&x.complex)))
}

fn duality(args: InputArgs) -> Outcome {
    let text = read_text(&args.input)?;
    let x = load_cubes(parse(&text)?)?;
    let d = roller_duality_check(&x)?;
    let h = clcc_core::pocset::halfspace_pocset(&x)?;
    let bijection: BTreeMap<String, String> = d.bijection.into_iter().collect();
    report(
        "duality",
        &text,
        json!({"holds": d.holds, "bijection": bijection, "pocset": PocsetJson::from(&h.pocset)}),
    )?;
    if d.holds {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn certify_cmd(args: CertifyArgs) -> Outcome {
    let text = read_text(&args.input)?;
    let doc = parse(&text)?;
    if args.moussong {
        let g = match doc {
            Document::Simplicial(s) => s.to_complex()?,
            Document::Colored(c) => c.to_complex()?.complex().clone(),
            other => return Err(wrong_kind(&other, "a simplicial complex")),
        };
        let m = moussong(&g)?;
        eprintln!("verdict: {}", m.verdict.as_str());
        return report("certify", &text, json!({"verdict": m.verdict, "rule": "moussong", "witness": m.square}));
    }
    let (a, b) = match doc {
        Document::Pair(p) => p.to_pair()?,
        other => return Err(wrong_kind(&other, "a pair")),
    };
    let c = certify(&a, &b)?;
    eprintln!("verdict: {} ({})", c.verdict.as_str(), c.rule);
    report("certify", &text, serde_json::to_value(&c).expect("certificate serializes"))
}

fn export(args: ExportArgs) -> Outcome {
    let text = read_text(&args.input)?;
    let doc = parse(&text)?;
    let out = if args.cells {
        canonical(&CubesJson::from(&load_cubes(doc)?))
    } else {
        // parse the contents fully so that invalid documents are rejected
        match &doc {
            Document::Pair(p) => drop(p.to_pair()?),
            Document::Colored(c) => drop(c.to_complex()?),
            Document::Simplicial(s) => drop(s.to_complex()?),
            Document::Clcc(c) => drop(c.to_complex()?),
            Document::Cubes(c) => drop(c.to_complex()?),
            Document::Pocset(p) => drop(p.to_pocset()?),
            Document::Chain(_) => {}
        }
        doc.to_canonical()
    };
    write_text(&args.out, &out)
}
