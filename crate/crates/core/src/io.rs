//! JSON formats for sequences, Lie algebras, coalgebras and collision
//! structures.
//!
//! A sequence is
//! `{"W": 3, "weights": {"1": {"basis": [{"deg": 0}], "d": [[row, col, value]], "transpositions": [[...]]}}}`.
//! Missing weights are zero, a missing `d` is zero and missing
//! transpositions mean the trivial action. Values are integers or `"p/q"`
//! strings. Lie algebras add `"brackets": [{"i": 1, "j": 1, "entries": [...]}]`
//! on the standard shuffle, coalgebras add `"comults"` in the same shape.

use std::collections::BTreeMap;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::liealg::{validate_coalg, validate_lie, TwistedCoalg, TwistedLie};
use crate::linalg::{format_q, q_from_json, SparseMat};
use crate::partitions::{cs_from_complex, cs_from_graph, CollisionStructure, Partition};
use crate::twisted::{validate, Piece, SymSeq};

#[derive(Debug, Serialize, Deserialize)]
pub struct Triple(pub usize, pub usize, pub Value);

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawBasis {
    pub deg: i32,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPiece {
    pub basis: Vec<RawBasis>,
    #[serde(default)]
    pub d: Vec<Triple>,
    #[serde(default)]
    pub transpositions: Vec<Vec<Triple>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawBlock {
    pub i: usize,
    pub j: usize,
    pub entries: Vec<Triple>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSeq {
    #[serde(rename = "W")]
    pub max_weight: usize,
    #[serde(default)]
    pub weights: BTreeMap<String, RawPiece>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brackets: Option<Vec<RawBlock>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comults: Option<Vec<RawBlock>>,
}

/// Collision structure by generators, graph edges or simplicial faces.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCs {
    pub n: usize,
    #[serde(default)]
    pub generators: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub edges: Option<Vec<(usize, usize)>>,
    #[serde(default)]
    pub faces: Option<Vec<Vec<usize>>>,
}

/// Parses JSON text; syntax and shape errors carry line and column.
pub fn parse_json<T: DeserializeOwned>(text: &str, path: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Schema {
        path: path.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    parse_json(&text, &path.display().to_string())
}

fn matrix(nrows: usize, ncols: usize, entries: &[Triple], what: &str) -> Result<SparseMat> {
    let triples = entries
        .iter()
        .map(|Triple(r, c, v)| Ok((*r, *c, q_from_json(v)?)))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Validation(format!("{what}: {e}")))?;
    SparseMat::from_triples(nrows, ncols, &triples).map_err(|e| Error::Validation(format!("{what}: {e}")))
}

fn entries(m: &SparseMat) -> Vec<Triple> {
    m.triples().into_iter().map(|(r, c, v)| Triple(r, c, q_value(&v))).collect()
}

fn q_value(v: &crate::linalg::Q) -> Value {
    if v.is_integer() {
        if let Ok(i) = v.numer().to_string().parse::<i64>() {
            return json!(i);
        }
    }
    json!(format_q(v))
}

fn seq_from_raw(raw: &RawSeq) -> Result<SymSeq> {
    let w = raw.max_weight;
    let mut seq = SymSeq::zero(w);
    for (key, piece) in &raw.weights {
        let k: usize = key.parse().map_err(|_| Error::Validation(format!("weight key {key:?} is not an integer")))?;
        if k > w {
            return Err(Error::Validation(format!("weight {k} exceeds W = {w}")));
        }
        let n = piece.basis.len();
        let d = matrix(n, n, &piece.d, &format!("d in weight {k}"))?;
        let needed = k.saturating_sub(1);
        let transpositions = if piece.transpositions.is_empty() {
            vec![SparseMat::identity(n); needed]
        } else if piece.transpositions.len() == needed {
            piece
                .transpositions
                .iter()
                .enumerate()
                .map(|(i, t)| matrix(n, n, t, &format!("transposition {i} in weight {k}")))
                .collect::<Result<_>>()?
        } else {
            return Err(Error::Validation(format!(
                "weight {k} needs {needed} transpositions, found {}",
                piece.transpositions.len()
            )));
        };
        seq.pieces[k] = Piece { degrees: piece.basis.iter().map(|b| b.deg).collect(), d, transpositions };
    }
    Ok(seq)
}

fn seq_to_raw(seq: &SymSeq) -> RawSeq {
    let weights = seq
        .pieces
        .iter()
        .enumerate()
        .filter(|(_, p)| p.dim() > 0)
        .map(|(k, p)| {
            let trivial = p.transpositions.iter().all(|t| *t == SparseMat::identity(p.dim()));
            let raw = RawPiece {
                basis: p.degrees.iter().map(|&deg| RawBasis { deg }).collect(),
                d: entries(&p.d),
                transpositions: if trivial { Vec::new() } else { p.transpositions.iter().map(entries).collect() },
            };
            (k.to_string(), raw)
        })
        .collect();
    RawSeq { max_weight: seq.max_weight, weights, brackets: None, comults: None }
}

fn blocks_from_raw(
    seq: &SymSeq,
    blocks: &[RawBlock],
    shape: impl Fn(usize, usize) -> (usize, usize),
    what: &str,
) -> Result<BTreeMap<(usize, usize), SparseMat>> {
    let w = seq.max_weight;
    let mut out = BTreeMap::new();
    for i in 1..w {
        for j in 1..=w - i {
            let (r, c) = shape(i, j);
            out.insert((i, j), SparseMat::zeros(r, c));
        }
    }
    for b in blocks {
        if b.i == 0 || b.j == 0 || b.i + b.j > w {
            return Err(Error::Validation(format!("{what} block ({}, {}) is outside 1 ≤ i, j and i + j ≤ W", b.i, b.j)));
        }
        let (r, c) = shape(b.i, b.j);
        out.insert((b.i, b.j), matrix(r, c, &b.entries, &format!("{what} ({}, {})", b.i, b.j))?);
    }
    Ok(out)
}

fn blocks_to_raw(blocks: &BTreeMap<(usize, usize), SparseMat>) -> Vec<RawBlock> {
    blocks
        .iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(&(i, j), m)| RawBlock { i, j, entries: entries(m) })
        .collect()
}

pub fn seq_from_json(text: &str, path: &str) -> Result<SymSeq> {
    let raw: RawSeq = parse_json(text, path)?;
    let seq = seq_from_raw(&raw)?;
    validate(&seq).into_result()?;
    Ok(seq)
}

pub fn seq_to_json(seq: &SymSeq) -> Value {
    serde_json::to_value(seq_to_raw(seq)).expect("serializable")
}

pub fn lie_from_json(text: &str, path: &str) -> Result<TwistedLie> {
    let raw: RawSeq = parse_json(text, path)?;
    let seq = seq_from_raw(&raw)?;
    let brackets = blocks_from_raw(
        &seq,
        raw.brackets.as_deref().unwrap_or_default(),
        |i, j| (seq.dim(i + j), seq.dim(i) * seq.dim(j)),
        "bracket",
    )?;
    let l = TwistedLie { seq, brackets };
    validate_lie(&l).into_result()?;
    Ok(l)
}

pub fn lie_to_json(l: &TwistedLie) -> Value {
    let mut raw = seq_to_raw(&l.seq);
    raw.brackets = Some(blocks_to_raw(&l.brackets));
    serde_json::to_value(raw).expect("serializable")
}

/// A coalgebra; weight 0 defaults to the unit.
pub fn coalg_from_json(text: &str, path: &str) -> Result<TwistedCoalg> {
    let raw: RawSeq = parse_json(text, path)?;
    let mut seq = seq_from_raw(&raw)?;
    if !raw.weights.contains_key("0") {
        seq.pieces[0] = Piece::trivial(0, vec![0]);
    }
    let comults = blocks_from_raw(
        &seq,
        raw.comults.as_deref().unwrap_or_default(),
        |i, j| (seq.dim(i) * seq.dim(j), seq.dim(i + j)),
        "comultiplication",
    )?;
    let k = TwistedCoalg { seq, comults };
    validate_coalg(&k).into_result()?;
    Ok(k)
}

pub fn coalg_to_json(k: &TwistedCoalg) -> Value {
    let mut raw = seq_to_raw(&k.seq);
    raw.comults = Some(blocks_to_raw(&k.comults));
    serde_json::to_value(raw).expect("serializable")
}

pub fn cs_from_json(text: &str, path: &str) -> Result<CollisionStructure> {
    let raw: RawCs = parse_json(text, path)?;
    match (&raw.generators, &raw.edges, &raw.faces) {
        (Some(gens), None, None) => {
            let parts = gens
                .iter()
                .map(|labels| {
                    if labels.len() != raw.n {
                        return Err(Error::Validation(format!("generator {labels:?} does not have {} labels", raw.n)));
                    }
                    Ok(Partition::from_labels(labels))
                })
                .collect::<Result<_>>()?;
            CollisionStructure::new(raw.n, parts)
        }
        (None, Some(edges), None) => cs_from_graph(raw.n, edges),
        (None, None, Some(faces)) => cs_from_complex(raw.n, faces),
        (None, None, None) => Ok(CollisionStructure::trivial(raw.n)),
        _ => Err(Error::Validation("give exactly one of generators, edges or faces".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::free::free_lie;
    use crate::models::discrete_conf_coalgebra;
    use crate::random::{rep_piece, Rep};

    #[test]
    fn sequence_round_trip() {
        let mut s = SymSeq::zero(3);
        s.pieces[2] = rep_piece(2, Rep::Regular, 1).direct_sum(&rep_piece(2, Rep::Sign, 0));
        s.pieces[3] = rep_piece(3, Rep::Trivial, -1);
        let text = seq_to_json(&s).to_string();
        assert_eq!(seq_from_json(&text, "mem").unwrap(), s);
    }

    #[test]
    fn lie_and_coalgebra_round_trip() {
        let l = free_lie(&SymSeq::generator(3, 1, 1), 3).unwrap().lie;
        assert_eq!(lie_from_json(&lie_to_json(&l).to_string(), "mem").unwrap(), l);
        let k = discrete_conf_coalgebra(2, 2).unwrap();
        assert_eq!(coalg_from_json(&coalg_to_json(&k).to_string(), "mem").unwrap(), k);
    }

    #[test]
    fn malformed_input_reports_position() {
        let err = seq_from_json("{\n  \"W\": 2,\n  \"weights\": {\"1\": {\"basis\": [{\"deg\": \"x\"}]}}\n}", "h.json").unwrap_err();
        match err {
            Error::Schema { path, line, .. } => {
                assert_eq!(path, "h.json");
                assert_eq!(line, 3);
            }
            other => panic!("unexpected {other}"),
        }
        assert!(matches!(seq_from_json("{\"W\": 1, \"extra\": 0}", "x"), Err(Error::Schema { .. })));
    }

    #[test]
    fn invalid_structure_is_a_validation_error() {
        let text = r#"{"W": 2, "weights": {"2": {"basis": [{"deg": 0}], "transpositions": [[[0, 0, 2]]]}}}"#;
        assert!(matches!(seq_from_json(text, "x"), Err(Error::Validation(_))));
        let bad = r#"{"W": 2, "weights": {"1": {"basis": [{"deg": 0}]}}, "brackets": [{"i": 1, "j": 1, "entries": [[0, 0, 1]]}]}"#;
        assert!(lie_from_json(bad, "x").is_err());
    }

    #[test]
    fn collision_structures() {
        let g = cs_from_json(r#"{"n": 3, "edges": [[0, 1], [1, 2]]}"#, "g").unwrap();
        assert_eq!(g.generators().len(), 2);
        assert!(cs_from_json(r#"{"n": 2}"#, "t").unwrap().is_trivial());
        assert!(cs_from_json(r#"{"n": 2, "edges": [], "faces": []}"#, "x").is_err());
    }
}
