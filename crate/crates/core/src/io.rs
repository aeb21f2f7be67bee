//! Instance and solution file formats.
//!
//! A CSV instance has one line per grid row and comma-separated non-negative
//! decimal (or `p/q`) costs, optionally preceded by a `# m n` header. Other
//! lines starting with `#` and blank lines are ignored. A JSON instance is
//! `{"m": .., "n": .., "costs": [[..], ..]}` with costs as strings or numbers.

use std::fmt::Write as _;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::candidate::{Candidate, Category, Provenance, ZigzagWitness};
use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::grid::{Grid, Vertex};
use crate::solver::{LandmarkSolution, SolveReport};

/// Reads a CSV or JSON instance, telling them apart by the first character.
pub fn parse_instance(text: &str) -> Result<Grid> {
    if text.trim_start().starts_with('{') {
        parse_json_instance(text)
    } else {
        parse_csv_instance(text)
    }
}

pub fn parse_csv_instance(text: &str) -> Result<Grid> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut rows: Vec<Vec<Cost>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if rows.is_empty() && header.is_none() {
                header = parse_header(comment).map(|(m, n)| (m, n, line_no));
            }
            continue;
        }
        let mut row = Vec::new();
        let mut column = 1;
        for field in line.split(',') {
            let lead = field.len() - field.trim_start().len();
            let cost: Cost = field.trim().parse().map_err(|e| Error::Parse {
                line: line_no,
                column: column + lead,
                message: format!("{e}"),
            })?;
            row.push(cost);
            column += field.chars().count() + 1;
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: format!("row has {} entries, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Input("instance has no cost rows".into()));
    }
    if let Some((m, n, line)) = header {
        if (m, n) != (rows.len(), rows[0].len()) {
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!(
                    "header says {m}x{n} but the matrix is {}x{}",
                    rows.len(),
                    rows[0].len()
                ),
            });
        }
    }
    Grid::new(rows)
}

fn parse_header(comment: &str) -> Option<(usize, usize)> {
    let mut it = comment.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(m)), Some(Ok(n)), None) => Some((m, n)),
        _ => None,
    }
}

#[derive(Serialize, Deserialize)]
struct JsonInstance {
    m: usize,
    n: usize,
    costs: Vec<Vec<Value>>,
}

pub fn parse_json_instance(text: &str) -> Result<Grid> {
    let doc: JsonInstance = serde_json::from_str(text).map_err(|e| json_error(&e))?;
    if doc.costs.len() != doc.m || doc.costs.iter().any(|r| r.len() != doc.n) {
        return Err(Error::Input(format!(
            "costs do not form the declared {}x{} matrix",
            doc.m, doc.n
        )));
    }
    let rows = doc
        .costs
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| {
                    let text = match v {
                        Value::String(s) => s.clone(),
                        Value::Number(x) => x.to_string(),
                        other => {
                            return Err(Error::Input(format!(
                                "cost ({},{}) is not a number: {other}",
                                i + 1,
                                j + 1
                            )))
                        }
                    };
                    text.parse::<Cost>()
                        .map_err(|e| Error::Input(format!("cost ({},{}): {e}", i + 1, j + 1)))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Grid::new(rows)
}

fn json_error(e: &serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// CSV with a `# m n` header and canonical cost strings.
pub fn to_csv(g: &Grid) -> String {
    let mut out = format!("# {} {}\n", g.m(), g.n());
    for row in g.rows() {
        let line: Vec<String> = row.iter().map(Cost::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json_instance(g: &Grid) -> String {
    let costs = g
        .rows()
        .iter()
        .map(|r| r.iter().map(|c| Value::String(c.to_string())).collect())
        .collect();
    let doc = JsonInstance {
        m: g.m(),
        n: g.n(),
        costs,
    };
    serde_json::to_string(&doc).expect("plain data") + "\n"
}

/// Best set of one category in a solution report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryBest {
    pub cost: Cost,
    pub cardinality: usize,
    pub vertices: Vec<Vertex>,
}

impl From<&Candidate> for CategoryBest {
    fn from(c: &Candidate) -> Self {
        CategoryBest {
            cost: c.cost.clone(),
            cardinality: c.vertices.len(),
            vertices: c.vertices.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct ReportSection {
    pub card2: CategoryBest,
    pub card3_aligned: Option<CategoryBest>,
    pub card3_flanked: Option<CategoryBest>,
    pub zigzag: Option<CategoryBest>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub m: usize,
    pub n: usize,
    pub cost: Cost,
    pub cardinality: usize,
    pub category: Category,
    pub vertices: Vec<Vertex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ZigzagWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportSection>,
}

impl SolutionFile {
    pub fn new(s: &LandmarkSolution) -> Self {
        SolutionFile {
            m: s.m,
            n: s.n,
            cost: s.cost.clone(),
            cardinality: s.cardinality,
            category: s.category,
            vertices: s.vertices.clone(),
            provenance: s.provenance,
            witness: s.witness.clone(),
            report: None,
        }
    }

    pub fn with_report(r: &SolveReport) -> Self {
        let mut f = SolutionFile::new(&r.winner);
        f.report = Some(ReportSection {
            card2: (&r.card2).into(),
            card3_aligned: r.card3_aligned.as_ref().map(Into::into),
            card3_flanked: r.card3_flanked.as_ref().map(Into::into),
            zigzag: r.zigzag.as_ref().map(Into::into),
        });
        f
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| json_error(&e))
    }

    /// One `row,col` line per vertex.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let _ = writeln!(out, "{},{}", v.row, v.col);
        }
        out
    }
}

/// A vertex set given as `[[r,c],..]` or `{"vertices": [[r,c],..]}`.
pub fn parse_vertex_set(text: &str) -> Result<Vec<Vertex>> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum SetDoc {
        Bare(Vec<[usize; 2]>),
        Wrapped { vertices: Vec<[usize; 2]> },
    }
    let doc: SetDoc = serde_json::from_str(text).map_err(|e| json_error(&e))?;
    let (SetDoc::Bare(vs) | SetDoc::Wrapped { vertices: vs }) = doc;
    Ok(vs.into_iter().map(|[r, c]| Vertex::new(r, c)).collect())
}

/// The `chacha8-uniform` generator: a ChaCha8 stream seeded with `seed`
/// draws every cost uniformly from `0..=max_cost`, row by row.
pub fn generate(m: usize, n: usize, max_cost: u64, seed: u64) -> Result<Grid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Grid::from_fn(m, n, |_| Cost::from_integer(rng.gen_range(0..=max_cost)))
}
