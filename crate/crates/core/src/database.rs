//! The embedded table of 21 ribbon knots with their tangle values, and
//! reference invariants for the same knots.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{DatabaseError, PdError, TangleError};
use crate::pd::{parse_pd, PlanarDiagram};
use crate::poly::{Grid, LaurentPolynomial};
use crate::tangle::{self, EndAssignment, TangleValues};

pub const TABLE_SCHEMA: &str = "ribbondb-table/1";
pub const REFERENCES_SCHEMA: &str = "ribbondb-references/1";

const TABLE_JSON: &str = include_str!("../data/ribbon_tangles.json");
const REFERENCES_JSON: &str = include_str!("../data/references.json");

/// One table row, stored exactly as tabulated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleRecord {
    pub name: String,
    pub pd: String,
    pub tangle_values: TangleValues,
}

impl TangleRecord {
    pub fn diagram(&self) -> Result<PlanarDiagram, PdError> {
        parse_pd(&self.pd)
    }

    /// `(β∘τ)` of the tangle cut out along `[1, v1, v2, v3]`.
    pub fn unlink_candidate(
        &self,
        assignment: EndAssignment,
    ) -> Result<PlanarDiagram, TangleError> {
        tangle::unlink_candidate(&self.diagram()?, &self.tangle_values, assignment)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErratumKind {
    DegenerateTangleValues,
    DuplicatePd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErratumStatus {
    Unconfirmed,
    Confirmed,
}

/// A known-suspect row, annotated rather than corrected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub id: String,
    pub rows: Vec<String>,
    pub kind: ErratumKind,
    pub status: ErratumStatus,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleTable {
    pub schema: String,
    pub records: Vec<TangleRecord>,
    #[serde(default)]
    pub errata: Vec<Erratum>,
}

impl TangleTable {
    pub fn parse(text: &str) -> Result<Self, DatabaseError> {
        let table: TangleTable = serde_json::from_str(text)?;
        if table.schema != TABLE_SCHEMA {
            return Err(DatabaseError::Schema(table.schema));
        }
        Ok(table)
    }

    pub fn get(&self, name: &str) -> Option<&TangleRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.records.iter().map(|r| r.name.as_str())
    }

    /// One line per row: name, PD tokens, tangle values, tab-separated.
    pub fn export_text(&self) -> String {
        self.records
            .iter()
            .map(|r| format!("{}\t{}\t{}\n", r.name, r.pd, r.tangle_values))
            .collect()
    }
}

/// The embedded table.
pub fn builtin_table() -> &'static TangleTable {
    static TABLE: OnceLock<TangleTable> = OnceLock::new();
    TABLE.get_or_init(|| TangleTable::parse(TABLE_JSON).expect("embedded table is valid"))
}

/// The 21 embedded records, in table order.
pub fn load_builtin() -> Vec<TangleRecord> {
    builtin_table().records.clone()
}

/// Reference invariants of one knot, computed from an independent diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceInvariants {
    pub name: String,
    pub pd: Option<String>,
    pub jones: LaurentPolynomial,
    pub alexander: LaurentPolynomial,
    pub determinant: u64,
    pub source: String,
}

#[derive(Deserialize)]
struct ReferenceFile {
    schema: String,
    knots: Vec<ReferenceEntry>,
}

#[derive(Deserialize)]
struct ReferenceEntry {
    name: String,
    #[serde(default)]
    pd: Option<String>,
    jones: Vec<[i64; 3]>,
    alexander: Vec<[i64; 3]>,
    determinant: u64,
    #[serde(default)]
    source: String,
}

/// Parses and validates a reference file against the names of `table`.
pub fn parse_references(
    text: &str,
    table: &TangleTable,
) -> Result<BTreeMap<String, ReferenceInvariants>, DatabaseError> {
    let file: ReferenceFile = serde_json::from_str(text)?;
    if file.schema != REFERENCES_SCHEMA {
        return Err(DatabaseError::Schema(file.schema));
    }
    let known: BTreeSet<&str> = table.names().collect();
    let mut out = BTreeMap::new();
    for e in file.knots {
        if !known.contains(e.name.as_str()) {
            return Err(DatabaseError::UnknownKnot(e.name));
        }
        let jones = LaurentPolynomial::from_json_terms(Grid::HalfT, &e.jones)
            .ok_or_else(|| DatabaseError::BadTerm(format!("{} jones", e.name)))?;
        let alexander = LaurentPolynomial::from_json_terms(Grid::T, &e.alexander)
            .ok_or_else(|| DatabaseError::BadTerm(format!("{} alexander", e.name)))?;
        if !alexander.is_symmetric() {
            return Err(DatabaseError::AsymmetricAlexander(e.name));
        }
        let computed = alexander.eval_at_minus_one().unsigned_abs();
        if computed != e.determinant {
            return Err(DatabaseError::DeterminantMismatch {
                name: e.name,
                stored: e.determinant,
                computed,
            });
        }
        let name = e.name.clone();
        let entry = ReferenceInvariants {
            name: e.name,
            pd: e.pd,
            jones,
            alexander,
            determinant: e.determinant,
            source: e.source,
        };
        if out.insert(name.clone(), entry).is_some() {
            return Err(DatabaseError::DuplicateKnot(name));
        }
    }
    if let Some(missing) = known.iter().find(|n| !out.contains_key(**n)) {
        return Err(DatabaseError::MissingKnot(missing.to_string()));
    }
    Ok(out)
}

/// Loads a reference file, validated against the embedded table.
pub fn load_references(
    path: impl AsRef<Path>,
) -> Result<BTreeMap<String, ReferenceInvariants>, DatabaseError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| DatabaseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_references(&text, builtin_table())
}

/// The embedded reference invariants.
pub fn builtin_references() -> &'static BTreeMap<String, ReferenceInvariants> {
    static REFS: OnceLock<BTreeMap<String, ReferenceInvariants>> = OnceLock::new();
    REFS.get_or_init(|| {
        parse_references(REFERENCES_JSON, builtin_table()).expect("embedded references are valid")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_rows() {
        let records = load_builtin();
        assert_eq!(records.len(), 21);
        let six = builtin_table().get("6_1").unwrap();
        assert_eq!(six.diagram().unwrap().crossing_count(), 11);
        assert_eq!(six.tangle_values, TangleValues::new(9, 13, 17).unwrap());
        let nine = builtin_table().get("9_46").unwrap();
        assert_eq!(nine.tangle_values, TangleValues::new(11, 17, 21).unwrap());
        assert_eq!(
            builtin_table()
                .get("10_42")
                .unwrap()
                .diagram()
                .unwrap()
                .crossing_count(),
            21
        );
    }

    #[test]
    fn suspect_rows_are_stored_as_given() {
        let t = builtin_table();
        assert_eq!(
            t.get("10_3").unwrap().tangle_values,
            TangleValues::new(9, 15, 1).unwrap()
        );
        assert_eq!(t.get("10_48").unwrap().pd, t.get("10_75").unwrap().pd);
        assert_eq!(t.errata.len(), 2);
        assert!(t
            .errata
            .iter()
            .all(|e| e.status == ErratumStatus::Unconfirmed));
    }

    #[test]
    fn builtin_references_validate() {
        let refs = builtin_references();
        assert_eq!(refs.len(), 21);
        assert_eq!(refs["6_1"].determinant, 9);
        assert_eq!(refs["8_20"].determinant, 9);
        assert_eq!(refs["6_1"].alexander.to_string(), "2t^-1 - 5 + 2t");
    }

    fn refs_with(
        edit: impl FnOnce(&mut serde_json::Value),
    ) -> Result<BTreeMap<String, ReferenceInvariants>, DatabaseError> {
        let mut v: serde_json::Value = serde_json::from_str(REFERENCES_JSON).unwrap();
        edit(&mut v);
        parse_references(&v.to_string(), builtin_table())
    }

    #[test]
    fn reference_validation_errors() {
        assert!(matches!(
            refs_with(|v| v["knots"][0]["name"] = "3_1".into()),
            Err(DatabaseError::UnknownKnot(n)) if n == "3_1"
        ));
        assert!(matches!(
            refs_with(|v| {
                v["knots"].as_array_mut().unwrap().pop();
            }),
            Err(DatabaseError::MissingKnot(n)) if n == "10_155"
        ));
        assert!(matches!(
            refs_with(|v| v["knots"][0]["alexander"] = serde_json::json!([[0, 1, 3], [1, 1, -1]])),
            Err(DatabaseError::AsymmetricAlexander(_))
        ));
        assert!(matches!(
            refs_with(|v| v["knots"][0]["determinant"] = 7.into()),
            Err(DatabaseError::DeterminantMismatch {
                stored: 7,
                computed: 9,
                ..
            })
        ));
        assert!(matches!(
            refs_with(|v| v["schema"] = "other/9".into()),
            Err(DatabaseError::Schema(_))
        ));
        assert!(matches!(
            refs_with(|v| v["knots"][0]["jones"] = serde_json::json!([[1, 3, 1]])),
            Err(DatabaseError::BadTerm(_))
        ));
    }

    #[test]
    fn load_from_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("refs.json");
        std::fs::write(&path, REFERENCES_JSON).unwrap();
        assert_eq!(load_references(&path).unwrap().len(), 21);
        assert!(matches!(
            load_references(dir.path().join("absent.json")),
            Err(DatabaseError::Io { .. })
        ));
    }

    #[test]
    fn text_export_round_trips_pd() {
        let text = builtin_table().export_text();
        assert_eq!(text.lines().count(), 21);
        let first = text.lines().next().unwrap();
        let pd_field = first.split('\t').nth(1).unwrap();
        assert_eq!(
            parse_pd(pd_field).unwrap(),
            builtin_table().records[0].diagram().unwrap()
        );
    }
}
