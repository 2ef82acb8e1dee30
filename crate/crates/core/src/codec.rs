//! JSON codecs for algebras, cobordism words, surfaces, reports, and census
//! summaries.
//!
//! All formats are UTF-8 JSON with every scalar written as a string (`"3"`,
//! `"-1/2"`), so that exact values survive any JSON tooling. Serialization is
//! canonical: object keys are emitted in a fixed order, maps are sorted, output
//! is pretty-printed, and a trailing newline is appended. Parsing a canonical
//! file and re-serializing reproduces it byte for byte.
//!
//! The algebra format:
//!
//! ```json
//! {
//!   "ring": "Z/5",
//!   "pi_rank": 1,
//!   "ranks": { "0": 1, "1": 1 },
//!   "mult": { "0,0": [["1"]], "0,1": [["1"]], "1,0": [["1"]], "1,1": [["2"]] },
//!   "unit": ["1"],
//!   "eta": { "0": [["1"]], "1": [["2"]] },
//!   "phi": { "0,0": [["1"]], "0,1": [["1"]], "1,0": [["1"]], "1,1": [["1"]] },
//!   "theta": { "0": ["4"], "1": ["4"] },
//!   "Phi": { "0": [["1"]], "1": [["1"]] }
//! }
//! ```
//!
//! Grades are keyed by their bitstring labels (the empty string for a trivial
//! grading group); `mult` is keyed by `"a,b"` pairs; `phi` is keyed by
//! `"actor,grade"` pairs (the acting label first). Matrices are row-major
//! nested arrays.
//!
//! A word file is a JSON list of layers, each layer a list of generators
//! `{"gen": name, "labels": [bitstrings]}` with names `id`, `swap`, `cup`,
//! `cap`, `mult`, `comult`, `pair`, `copair`, `hol`, `flip`, `moebius`. A
//! surface file is `{"handles": [[a, b], …], "crosscaps": [g, …]}`.

use crate::algebra::AlgebraData;
use crate::axioms::AxiomReport;
use crate::census::CensusQuery;
use crate::cobordism::{CobordismWord, Generator, SurfaceSpec};
use crate::group::{GroupElement, MAX_RANK};
use crate::linalg::{Matrix, Vector};
use crate::ring::{RingDesc, Scalar};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;
use thiserror::Error;

/// Errors from parsing or validating the JSON formats.
#[derive(Debug, Error)]
pub enum CodecError {
    /// The input is not well-formed JSON or lacks the required fields.
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    /// The JSON is well-formed but the content is invalid; the message names
    /// the offending field.
    #[error("{0}")]
    Invalid(String),
}

fn invalid(msg: impl Into<String>) -> CodecError {
    CodecError::Invalid(msg.into())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDto {
    ring: String,
    pi_rank: u8,
    ranks: BTreeMap<String, usize>,
    mult: BTreeMap<String, Vec<Vec<String>>>,
    unit: Vec<String>,
    eta: BTreeMap<String, Vec<Vec<String>>>,
    phi: BTreeMap<String, Vec<Vec<String>>>,
    theta: BTreeMap<String, Vec<String>>,
    #[serde(rename = "Phi")]
    invol: BTreeMap<String, Vec<Vec<String>>>,
}

fn render(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn parse_scalar_at(ring: RingDesc, text: &str, context: &str) -> Result<Scalar, CodecError> {
    ring.parse_scalar(text)
        .map_err(|e| invalid(format!("{context}: {e}")))
}

fn parse_vector_at(
    ring: RingDesc,
    entries: &[String],
    len: usize,
    context: &str,
) -> Result<Vector, CodecError> {
    if entries.len() != len {
        return Err(invalid(format!(
            "{context}: expected {len} entries, found {}",
            entries.len()
        )));
    }
    let mut out = Vec::with_capacity(len);
    for (i, t) in entries.iter().enumerate() {
        out.push(parse_scalar_at(ring, t, &format!("{context}[{i}]"))?);
    }
    Ok(Vector::new(ring, out))
}

fn parse_matrix_at(
    ring: RingDesc,
    rows: &[Vec<String>],
    nrows: usize,
    ncols: usize,
    context: &str,
) -> Result<Matrix, CodecError> {
    if rows.len() != nrows {
        return Err(invalid(format!(
            "{context}: expected {nrows} rows, found {}",
            rows.len()
        )));
    }
    let mut entries = Vec::with_capacity(nrows * ncols);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != ncols {
            return Err(invalid(format!(
                "{context}: row {i} has {} entries, expected {ncols}",
                row.len()
            )));
        }
        for (j, t) in row.iter().enumerate() {
            entries.push(parse_scalar_at(ring, t, &format!("{context}[{i}][{j}]"))?);
        }
    }
    Ok(Matrix::new(ring, nrows, ncols, entries))
}

/// Parses a matrix whose dimensions are read off the JSON itself (rows must be
/// rectangular). Used for involution blocks, whose expected shape is itself an
/// axiom — grade preservation — so shape errors are left for the structural
/// validator to report rather than being rejected as malformed JSON.
fn parse_matrix_inferred(
    ring: RingDesc,
    rows: &[Vec<String>],
    empty_cols: usize,
    context: &str,
) -> Result<Matrix, CodecError> {
    let ncols = rows.first().map_or(empty_cols, Vec::len);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != ncols {
            return Err(invalid(format!(
                "{context}: row {i} has {} entries but row 0 has {ncols}",
                row.len()
            )));
        }
    }
    let mut entries = Vec::with_capacity(rows.len() * ncols);
    for (i, row) in rows.iter().enumerate() {
        for (j, t) in row.iter().enumerate() {
            entries.push(parse_scalar_at(ring, t, &format!("{context}[{i}][{j}]"))?);
        }
    }
    Ok(Matrix::new(ring, rows.len(), ncols, entries))
}

fn format_vector(ring: RingDesc, v: &Vector) -> Vec<String> {
    v.iter().map(|s| ring.format_scalar(s)).collect()
}

fn format_matrix(ring: RingDesc, m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| ring.format_scalar(m.get(i, j)))
                .collect()
        })
        .collect()
}

/// Looks up `key` in a map whose key set must be exactly the expected label
/// set; the caller iterates over the expected labels and then checks the size.
fn fetch<'m, V>(
    map: &'m BTreeMap<String, V>,
    key: &str,
    field: &str,
) -> Result<&'m V, CodecError> {
    map.get(key)
        .ok_or_else(|| invalid(format!("{field}: missing key {}", render(key))))
}

fn check_no_extra_keys<V>(
    map: &BTreeMap<String, V>,
    expected: usize,
    field: &str,
    describe: &str,
) -> Result<(), CodecError> {
    if map.len() != expected {
        return Err(invalid(format!(
            "{field}: expected exactly {expected} keys ({describe}), found {}",
            map.len()
        )));
    }
    Ok(())
}

/// Parses an algebra from its JSON format, validating every field exhaustively.
pub fn parse_algebra(text: &str) -> Result<AlgebraData, CodecError> {
    let dto: AlgebraDto = serde_json::from_str(text)?;
    let ring = RingDesc::from_str(&dto.ring).map_err(|e| invalid(format!("ring: {e}")))?;
    if dto.pi_rank > MAX_RANK {
        return Err(invalid(format!(
            "pi_rank: {} exceeds the supported maximum {MAX_RANK}",
            dto.pi_rank
        )));
    }
    let k = dto.pi_rank;
    let grades: Vec<GroupElement> = GroupElement::all(k).collect();

    let mut ranks = Vec::with_capacity(grades.len());
    for &g in &grades {
        ranks.push(*fetch(&dto.ranks, &g.label(), "ranks")?);
    }
    check_no_extra_keys(&dto.ranks, grades.len(), "ranks", "one per grade label")?;
    let rank_of = |g: GroupElement| ranks[g.bits() as usize];
    let e = GroupElement::identity(k).map_err(|e| invalid(e.to_string()))?;

    let mut mult = Vec::new();
    let mut phi = Vec::new();
    for &a in &grades {
        for &b in &grades {
            let key = format!("{},{}", a.label(), b.label());
            let block = fetch(&dto.mult, &key, "mult")?;
            mult.push(parse_matrix_at(
                ring,
                block,
                rank_of(a * b),
                rank_of(a) * rank_of(b),
                &format!("mult[{}]", render(&key)),
            )?);
            let block = fetch(&dto.phi, &key, "phi")?;
            phi.push(parse_matrix_at(
                ring,
                block,
                rank_of(b),
                rank_of(b),
                &format!("phi[{}]", render(&key)),
            )?);
        }
    }
    let pairs = grades.len() * grades.len();
    check_no_extra_keys(&dto.mult, pairs, "mult", "one per grade pair")?;
    check_no_extra_keys(&dto.phi, pairs, "phi", "one per (actor, grade) pair")?;

    let unit = parse_vector_at(ring, &dto.unit, rank_of(e), "unit")?;

    let mut eta = Vec::new();
    let mut theta = Vec::new();
    let mut invol = Vec::new();
    for &g in &grades {
        let key = g.label();
        let block = fetch(&dto.eta, &key, "eta")?;
        eta.push(parse_matrix_at(
            ring,
            block,
            rank_of(g),
            rank_of(g),
            &format!("eta[{}]", render(&key)),
        )?);
        let vec = fetch(&dto.theta, &key, "theta")?;
        theta.push(parse_vector_at(
            ring,
            vec,
            rank_of(e),
            &format!("theta[{}]", render(&key)),
        )?);
        let block = fetch(&dto.invol, &key, "Phi")?;
        invol.push(parse_matrix_inferred(
            ring,
            block,
            rank_of(g),
            &format!("Phi[{}]", render(&key)),
        )?);
    }
    check_no_extra_keys(&dto.eta, grades.len(), "eta", "one per grade label")?;
    check_no_extra_keys(&dto.theta, grades.len(), "theta", "one per grade label")?;
    check_no_extra_keys(&dto.invol, grades.len(), "Phi", "one per grade label")?;

    let alg = AlgebraData {
        ring,
        pi_rank: k,
        ranks,
        mult,
        unit,
        eta,
        phi,
        theta,
        invol,
    };
    alg.validate().map_err(|e| invalid(e.to_string()))?;
    Ok(alg)
}

/// Serializes an algebra to its canonical JSON form (pretty-printed, sorted
/// keys, trailing newline).
pub fn serialize_algebra(alg: &AlgebraData) -> String {
    let ring = alg.ring();
    let grades: Vec<GroupElement> = alg.grades().collect();
    let mut ranks = BTreeMap::new();
    let mut eta = BTreeMap::new();
    let mut theta = BTreeMap::new();
    let mut invol = BTreeMap::new();
    for &g in &grades {
        ranks.insert(g.label(), alg.rank_of(g));
        eta.insert(g.label(), format_matrix(ring, alg.eta_block(g)));
        theta.insert(g.label(), format_vector(ring, alg.theta_vec(g)));
        invol.insert(g.label(), format_matrix(ring, alg.invol_block(g)));
    }
    let mut mult = BTreeMap::new();
    let mut phi = BTreeMap::new();
    for &a in &grades {
        for &b in &grades {
            let key = format!("{},{}", a.label(), b.label());
            mult.insert(key.clone(), format_matrix(ring, alg.mult_block(a, b)));
            phi.insert(key, format_matrix(ring, alg.phi_block(a, b)));
        }
    }
    let dto = AlgebraDto {
        ring: ring.to_string(),
        pi_rank: alg.pi_rank(),
        ranks,
        mult,
        unit: format_vector(ring, alg.unit_vec()),
        eta,
        phi,
        theta,
        invol,
    };
    finish(&dto)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorDto {
    gen: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    labels: Vec<String>,
}

fn generator_to_dto(g: &Generator) -> GeneratorDto {
    let (name, labels) = match *g {
        Generator::Id(a) => ("id", vec![a]),
        Generator::Swap(a, b) => ("swap", vec![a, b]),
        Generator::Cup => ("cup", vec![]),
        Generator::Cap => ("cap", vec![]),
        Generator::Mult(a, b) => ("mult", vec![a, b]),
        Generator::Comult(a, b) => ("comult", vec![a, b]),
        Generator::Pair(a) => ("pair", vec![a]),
        Generator::Copair(a) => ("copair", vec![a]),
        Generator::Hol(a, b) => ("hol", vec![a, b]),
        Generator::Flip(a) => ("flip", vec![a]),
        Generator::Moebius(a) => ("moebius", vec![a]),
    };
    GeneratorDto {
        gen: name.to_owned(),
        labels: labels.into_iter().map(|l| l.label()).collect(),
    }
}

fn generator_from_dto(
    dto: &GeneratorDto,
    pi_rank: u8,
    context: &str,
) -> Result<Generator, CodecError> {
    let arity = |n: usize| -> Result<Vec<GroupElement>, CodecError> {
        if dto.labels.len() != n {
            return Err(invalid(format!(
                "{context}: generator {} takes {n} label(s), found {}",
                render(&dto.gen),
                dto.labels.len()
            )));
        }
        dto.labels
            .iter()
            .map(|l| {
                GroupElement::parse(l, pi_rank)
                    .map_err(|e| invalid(format!("{context}: {e}")))
            })
            .collect()
    };
    Ok(match dto.gen.as_str() {
        "id" => Generator::Id(arity(1)?[0]),
        "swap" => {
            let l = arity(2)?;
            Generator::Swap(l[0], l[1])
        }
        "cup" => {
            arity(0)?;
            Generator::Cup
        }
        "cap" => {
            arity(0)?;
            Generator::Cap
        }
        "mult" => {
            let l = arity(2)?;
            Generator::Mult(l[0], l[1])
        }
        "comult" => {
            let l = arity(2)?;
            Generator::Comult(l[0], l[1])
        }
        "pair" => Generator::Pair(arity(1)?[0]),
        "copair" => Generator::Copair(arity(1)?[0]),
        "hol" => {
            let l = arity(2)?;
            Generator::Hol(l[0], l[1])
        }
        "flip" => Generator::Flip(arity(1)?[0]),
        "moebius" => Generator::Moebius(arity(1)?[0]),
        other => {
            return Err(invalid(format!(
                "{context}: unknown generator {}",
                render(other)
            )))
        }
    })
}

/// Parses a cobordism word (a JSON list of layers of generators) whose labels
/// must have the given group rank.
pub fn parse_word(text: &str, pi_rank: u8) -> Result<CobordismWord, CodecError> {
    let dto: Vec<Vec<GeneratorDto>> = serde_json::from_str(text)?;
    let mut layers = Vec::with_capacity(dto.len());
    for (i, layer) in dto.iter().enumerate() {
        let mut gens = Vec::with_capacity(layer.len());
        for (j, g) in layer.iter().enumerate() {
            gens.push(generator_from_dto(
                g,
                pi_rank,
                &format!("layer {i}, generator {j}"),
            )?);
        }
        layers.push(gens);
    }
    Ok(CobordismWord::new(layers))
}

/// Serializes a cobordism word to its canonical JSON form.
pub fn serialize_word(word: &CobordismWord) -> String {
    let dto: Vec<Vec<GeneratorDto>> = word
        .layers
        .iter()
        .map(|layer| layer.iter().map(generator_to_dto).collect())
        .collect();
    finish(&dto)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SurfaceDto {
    #[serde(default)]
    handles: Vec<(String, String)>,
    #[serde(default)]
    crosscaps: Vec<String>,
}

/// Parses a surface presentation `{"handles": [[a, b], …], "crosscaps": […]}`
/// whose labels must have the given group rank. Omitted lists default to empty,
/// so `{}` is the sphere.
pub fn parse_surface(text: &str, pi_rank: u8) -> Result<SurfaceSpec, CodecError> {
    let dto: SurfaceDto = serde_json::from_str(text)?;
    let parse_label = |l: &str, context: String| {
        GroupElement::parse(l, pi_rank).map_err(|e| invalid(format!("{context}: {e}")))
    };
    let mut handles = Vec::with_capacity(dto.handles.len());
    for (i, (a, b)) in dto.handles.iter().enumerate() {
        handles.push((
            parse_label(a, format!("handles[{i}][0]"))?,
            parse_label(b, format!("handles[{i}][1]"))?,
        ));
    }
    let mut crosscaps = Vec::with_capacity(dto.crosscaps.len());
    for (i, g) in dto.crosscaps.iter().enumerate() {
        crosscaps.push(parse_label(g, format!("crosscaps[{i}]"))?);
    }
    Ok(SurfaceSpec { handles, crosscaps })
}

/// Serializes a surface presentation to its canonical JSON form.
pub fn serialize_surface(s: &SurfaceSpec) -> String {
    let dto = SurfaceDto {
        handles: s
            .handles
            .iter()
            .map(|&(a, b)| (a.label(), b.label()))
            .collect(),
        crosscaps: s.crosscaps.iter().map(|g| g.label()).collect(),
    };
    finish(&dto)
}

#[derive(Serialize)]
struct ViolationDto<'a> {
    axiom: &'a str,
    witness: &'a str,
    lhs: &'a str,
    rhs: &'a str,
}

#[derive(Serialize)]
struct ReportDto<'a> {
    kind: String,
    passed: bool,
    violations: Vec<ViolationDto<'a>>,
}

/// Serializes a verification or relation report to machine-readable JSON:
/// `{"kind": …, "passed": …, "violations": [{axiom, witness, lhs, rhs}, …]}`.
pub fn report_json(report: &AxiomReport) -> String {
    let dto = ReportDto {
        kind: report.kind.to_string(),
        passed: report.passed(),
        violations: report
            .violations
            .iter()
            .map(|v| ViolationDto {
                axiom: &v.axiom,
                witness: &v.witness,
                lhs: &v.lhs,
                rhs: &v.rhs,
            })
            .collect(),
    };
    finish(&dto)
}

#[derive(Serialize)]
struct QueryDto {
    ring: String,
    pi_rank: u8,
    ranks: BTreeMap<String, usize>,
    tier: String,
}

#[derive(Serialize)]
struct SummaryDto {
    query: QueryDto,
    raw_count: u64,
    iso_count: u64,
    elapsed: u128,
}

/// Serializes a census summary `{query, raw_count, iso_count, elapsed}`; the
/// `elapsed` field is wall-clock milliseconds and is the only
/// run-to-run-varying field.
pub fn census_summary_json(
    query: &CensusQuery,
    raw_count: u64,
    iso_count: u64,
    elapsed_ms: u128,
) -> String {
    let mut ranks = BTreeMap::new();
    for g in GroupElement::all(query.pi_rank) {
        ranks.insert(g.label(), query.ranks[g.bits() as usize]);
    }
    let dto = SummaryDto {
        query: QueryDto {
            ring: query.ring.to_string(),
            pi_rank: query.pi_rank,
            ranks,
            tier: query.tier.to_string(),
        },
        raw_count,
        iso_count,
        elapsed: elapsed_ms,
    };
    finish(&dto)
}

fn finish<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("in-memory serialization");
    s.push('\n');
    s
}
