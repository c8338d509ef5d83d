//! JSON and DOT forms of a dessin, and JSON for Belyi verification reports.

use std::fmt::Write as _;

use hecke::belyi::VerificationReport;
use hecke::dessin::{genus_euler, vertex_sets, Dessin};
use hecke::projline::{normalize, to_lattice_label, LatticeLabel};
use hecke::Error;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct LatticeJson {
    #[serde(rename = "M")]
    m: String,
    b: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct EdgeJson {
    index: usize,
    c: u64,
    d: u64,
    lattice: LatticeJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct DessinJson {
    level: u64,
    edges: Vec<EdgeJson>,
    x: Vec<usize>,
    y: Vec<usize>,
    faces: Vec<Vec<usize>>,
    white: Vec<Vec<usize>>,
    black: Vec<Vec<usize>>,
    genus: u64,
}

fn to_json_value(d: &Dessin) -> Result<DessinJson, Error> {
    let vs = vertex_sets(d);
    let edges = d
        .edges()
        .iter()
        .enumerate()
        .map(|(index, p)| {
            let label = to_lattice_label(p);
            EdgeJson {
                index,
                c: p.c(),
                d: p.d(),
                lattice: LatticeJson {
                    m: label.m().to_fraction_string(),
                    b: label.b().to_fraction_string(),
                },
            }
        })
        .collect();
    Ok(DessinJson {
        level: d.level(),
        edges,
        x: d.x().to_vec(),
        y: d.y().to_vec(),
        faces: vs.faces,
        white: vs.white,
        black: vs.black,
        genus: genus_euler(d)?,
    })
}

pub fn export_dessin(d: &Dessin, format: Format) -> Result<String, Error> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&to_json_value(d)?)
                .map_err(|e| Error::Parse(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Dot => Ok(dessin_to_dot(d)),
    }
}

/// Parses the JSON form and checks every derived field against the
/// permutations it carries.
pub fn import_dessin(json: &str) -> Result<Dessin, Error> {
    let raw: DessinJson = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    let mut edges = Vec::with_capacity(raw.edges.len());
    for (i, e) in raw.edges.iter().enumerate() {
        if e.index != i {
            return Err(Error::Parse(format!("edge {i} carries index {}", e.index)));
        }
        let p = normalize(to_i64(e.c)?, to_i64(e.d)?, raw.level)?;
        if (p.c(), p.d()) != (e.c, e.d) {
            return Err(Error::Parse(format!(
                "edge {i} ({}:{}) is not in canonical form",
                e.c, e.d
            )));
        }
        let label = LatticeLabel::new(e.lattice.m.parse()?, e.lattice.b.parse()?)?;
        if label != to_lattice_label(&p) {
            return Err(Error::Parse(format!("edge {i} has lattice label {label}")));
        }
        edges.push(p);
    }
    let d = Dessin::from_parts(raw.level, edges, raw.x.clone(), raw.y.clone())?;
    if to_json_value(&d)? != raw {
        return Err(Error::Parse(
            "faces, vertices or genus disagree with the permutations".into(),
        ));
    }
    Ok(d)
}

fn to_i64(v: u64) -> Result<i64, Error> {
    i64::try_from(v).map_err(|_| Error::Parse(format!("coordinate {v} out of range")))
}

/// White vertices `w{i}` and black vertices `b{j}` are numbered by their
/// cycles in the order of `vertex_sets`.
pub fn dessin_to_dot(d: &Dessin) -> String {
    let vs = vertex_sets(d);
    let owner = |cycles: &[Vec<usize>]| {
        let mut out = vec![0; d.len()];
        for (k, c) in cycles.iter().enumerate() {
            for &e in c {
                out[e] = k;
            }
        }
        out
    };
    let white_of = owner(&vs.white);
    let black_of = owner(&vs.black);
    let mut s = String::new();
    let _ = writeln!(s, "graph dessin_{} {{", d.level());
    s.push_str("  node [shape=circle, label=\"\", width=0.2];\n");
    for i in 0..vs.white.len() {
        let _ = writeln!(s, "  w{i} [style=solid, fillcolor=white];");
    }
    for j in 0..vs.black.len() {
        let _ = writeln!(s, "  b{j} [style=filled, fillcolor=black];");
    }
    for (e, p) in d.edges().iter().enumerate() {
        let _ = writeln!(
            s,
            "  w{} -- b{} [label=\"{}:{}\"];",
            white_of[e],
            black_of[e],
            p.c(),
            p.d()
        );
    }
    s.push_str("}\n");
    s
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    pass: bool,
    expected: &'a str,
    got: &'a str,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    #[serde(rename = "N")]
    level: u64,
    checks: Vec<CheckJson<'a>>,
}

pub fn report_to_json(r: &VerificationReport) -> String {
    let json = ReportJson {
        level: r.level,
        checks: r
            .checks
            .iter()
            .map(|c| CheckJson {
                name: &c.name,
                pass: c.pass,
                expected: &c.expected,
                got: &c.got,
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&json).expect("report serializes");
    s.push('\n');
    s
}
