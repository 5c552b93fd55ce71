//! JSON documents for functors, homomorphisms and matrices.
//!
//! Matrices are `{"rows": r, "cols": c, "entries": [[...], ...]}` with exact
//! integers (arbitrarily large values stay JSON numbers). `entries` has `r`
//! rows of `c` numbers; a matrix with zero rows has `entries: []`.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

use crate::abgrp::{FgAbGroup, IntegerMatrix};
use crate::error::{Error, Result};
use crate::mackey::{CpMackeyFunctor, MackeyHom};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixDoc(pub IntegerMatrix);

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Number>>,
}

impl Serialize for MatrixDoc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m = &self.0;
        let entries = m
            .to_nested()
            .into_iter()
            .map(|row| {
                row.iter()
                    .map(|x| Number::from_str(&x.to_string()).expect("integer literal"))
                    .collect()
            })
            .collect();
        RawMatrix {
            rows: m.rows(),
            cols: m.cols(),
            entries,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MatrixDoc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawMatrix::deserialize(d)?;
        if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
            return Err(D::Error::custom(format!(
                "entries do not form a {}x{} matrix",
                raw.rows, raw.cols
            )));
        }
        let mut entries = Vec::with_capacity(raw.rows * raw.cols);
        for x in raw.entries.iter().flatten() {
            let v = BigInt::from_str(&x.to_string())
                .map_err(|_| D::Error::custom(format!("{x} is not an integer")))?;
            entries.push(v);
        }
        Ok(MatrixDoc(IntegerMatrix::new(raw.rows, raw.cols, entries)))
    }
}

/// Serde adapter writing `Vec<BigInt>` as a list of exact JSON numbers.
pub mod int_list {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
        v.iter()
            .map(|x| Number::from_str(&x.to_string()).expect("integer literal"))
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<BigInt>, D::Error> {
        Vec::<Number>::deserialize(d)?
            .iter()
            .map(|x| {
                BigInt::from_str(&x.to_string())
                    .map_err(|_| D::Error::custom(format!("{x} is not an integer")))
            })
            .collect()
    }
}

/// A functor as stored on disk; `to_functor` runs all axiom checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MackeyDocument {
    pub schema: u32,
    pub prime: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub fixed_relations: MatrixDoc,
    pub underlying_relations: MatrixDoc,
    pub res: MatrixDoc,
    pub tr: MatrixDoc,
    pub conj: MatrixDoc,
}

impl MackeyDocument {
    pub fn from_functor(m: &CpMackeyFunctor, name: Option<String>) -> Self {
        MackeyDocument {
            schema: SCHEMA_VERSION,
            prime: m.prime(),
            name,
            fixed_relations: MatrixDoc(m.fixed().relations().clone()),
            underlying_relations: MatrixDoc(m.underlying().relations().clone()),
            res: MatrixDoc(m.res().matrix().clone()),
            tr: MatrixDoc(m.tr().matrix().clone()),
            conj: MatrixDoc(m.conj().matrix().clone()),
        }
    }

    pub fn to_functor(&self) -> Result<CpMackeyFunctor> {
        check_schema(self.schema)?;
        CpMackeyFunctor::from_matrices(
            self.prime,
            FgAbGroup::from_relations(self.fixed_relations.0.clone()),
            FgAbGroup::from_relations(self.underlying_relations.0.clone()),
            self.res.0.clone(),
            self.tr.0.clone(),
            self.conj.0.clone(),
        )
    }
}

/// A homomorphism with both endpoints inlined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HomDocument {
    pub schema: u32,
    pub source: MackeyDocument,
    pub target: MackeyDocument,
    pub fixed: MatrixDoc,
    pub underlying: MatrixDoc,
}

impl HomDocument {
    pub fn from_hom(f: &MackeyHom) -> Self {
        HomDocument {
            schema: SCHEMA_VERSION,
            source: MackeyDocument::from_functor(f.source(), None),
            target: MackeyDocument::from_functor(f.target(), None),
            fixed: MatrixDoc(f.fixed_map().matrix().clone()),
            underlying: MatrixDoc(f.underlying_map().matrix().clone()),
        }
    }

    pub fn to_hom(&self) -> Result<MackeyHom> {
        check_schema(self.schema)?;
        MackeyHom::from_matrices(
            self.source.to_functor()?,
            self.target.to_functor()?,
            self.fixed.0.clone(),
            self.underlying.0.clone(),
        )
    }
}

/// A `C_p`-module `(X, c)` for the fixed-point and orbit constructors;
/// `relations` defaults to none (free `X`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDocument {
    pub conj: MatrixDoc,
    #[serde(default)]
    pub relations: Option<MatrixDoc>,
}

fn check_schema(v: u32) -> Result<()> {
    if v != SCHEMA_VERSION {
        return Err(Error::Document(format!("unsupported schema version {v}")));
    }
    Ok(())
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Document(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Document(format!("{}: {e}", path.display())))
}

pub fn read_functor(path: &Path) -> Result<CpMackeyFunctor> {
    read_json::<MackeyDocument>(path)?.to_functor()
}

pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

/// Parses `"1 2; 3 4"` or a JSON nested array such as `[[1,2],[3,4]]`.
pub fn parse_matrix(text: &str) -> Result<IntegerMatrix> {
    let t = text.trim();
    let rows: Vec<Vec<BigInt>> = if t.starts_with("[[") || t == "[]" {
        let nested: Vec<Vec<Number>> =
            serde_json::from_str(t).map_err(|e| Error::Document(format!("matrix {t:?}: {e}")))?;
        nested
            .iter()
            .map(|r| r.iter().map(|x| parse_int(&x.to_string())).collect())
            .collect::<Result<_>>()?
    } else {
        let body = t.trim_start_matches('[').trim_end_matches(']');
        body.split(';')
            .map(|r| r.split_whitespace().map(parse_int).collect())
            .collect::<Result<_>>()?
    };
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Document(format!("ragged matrix {t:?}")));
    }
    let n = rows.len();
    Ok(IntegerMatrix::new(
        n,
        cols,
        rows.into_iter().flatten().collect(),
    ))
}

fn parse_int(s: &str) -> Result<BigInt> {
    BigInt::from_str(s).map_err(|_| Error::Document(format!("{s:?} is not an integer")))
}
