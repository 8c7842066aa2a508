//! Per-knot verification of the table: the closed diagram against reference
//! invariants, and the `(β∘τ)` closure of its cut tangle against the
//! 2-component unlink.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::database::{ReferenceInvariants, TangleRecord, TangleTable};
use crate::error::TangleError;
use crate::invariants::{self, compare_jones, ChiralMatch};
use crate::pd::PlanarDiagram;
use crate::simplify::{simplify_greedy, Move};
use crate::tangle::{self, EndAssignment};

pub const REPORT_SCHEMA: &str = "ribbondb-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KnotCheck {
    Match,
    MirrorMatch,
    Mismatch,
    Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnlinkCheck {
    Degenerate,
    Inconsistent,
    InvariantConsistent,
    Certified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Flag {
    /// The PD code is identical to another row's.
    DuplicatePd {
        other: String,
    },
    /// The cut set `[1, v1, v2, v3]` repeats a label.
    DegenerateValues {
        label: u32,
    },
    NotAKnot {
        components: usize,
    },
    NonPlanar,
    /// Labels do not run `1..=n` increasing along the orientation.
    NonIncrementingLabels,
    /// The cut tangle's strands do not join `t_k` to `b_k`.
    NotPureBraid,
    /// Re-stitching the cut tangle does not give back the diagram.
    RestitchMismatch,
    /// Neither Jones nor its mirror matches the reference.
    JonesMismatch,
    AlexanderMismatch,
    /// The row carries a stored erratum annotation.
    Annotated {
        erratum: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateDetails {
    pub assignment: EndAssignment,
    pub crossings: usize,
    pub components: Option<usize>,
    pub jones: Option<String>,
    pub remaining_crossings: usize,
    pub remaining_loops: usize,
    pub incomplete: bool,
    pub moves: Vec<Move>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Details {
    pub crossings: Option<usize>,
    pub components: Option<usize>,
    pub jones: Option<String>,
    pub alexander: Option<String>,
    pub determinant: Option<u64>,
    pub reference_jones: Option<String>,
    pub reference_alexander: Option<String>,
    pub candidate: Option<CandidateDetails>,
    pub move_log_len: usize,
    pub errors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotReport {
    pub name: String,
    pub knot_check: KnotCheck,
    pub unlink_check: UnlinkCheck,
    pub details: Details,
    pub flags: Vec<Flag>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErratumKind {
    DuplicatePd,
    DegenerateTangleValues,
    KnotMismatch,
    UnlinkInconsistent,
}

/// A table problem found by the run, linked to a stored annotation when one
/// covers the same rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetectedErratum {
    pub kind: ErratumKind,
    pub rows: Vec<String>,
    pub annotation: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub rows: usize,
    pub knot_match: usize,
    pub knot_mirror_match: usize,
    pub knot_mismatch: usize,
    pub knot_error: usize,
    pub unlink_certified: usize,
    pub unlink_invariant_consistent: usize,
    pub unlink_inconsistent: usize,
    pub unlink_degenerate: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub max_steps: Option<usize>,
    pub entries: Vec<KnotReport>,
    pub errata: Vec<DetectedErratum>,
    pub summary: Summary,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Move budget for reduction; `None` means 10 × the candidate's crossings.
    pub max_steps: Option<usize>,
}

impl VerificationReport {
    /// Whether any row failed a check (degenerate rows excluded).
    pub fn has_failures(&self) -> bool {
        self.entries.iter().any(|e| {
            matches!(e.knot_check, KnotCheck::Mismatch | KnotCheck::Error)
                || e.unlink_check == UnlinkCheck::Inconsistent
        })
    }

    pub fn entry(&self, name: &str) -> Option<&KnotReport> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let flags: Vec<String> = e.flags.iter().map(flag_text).collect();
            let line = format!(
                "{:<8} knot: {:<13} unlink: {:<20}{}",
                e.name,
                serde_name(&e.knot_check),
                serde_name(&e.unlink_check),
                if flags.is_empty() {
                    String::new()
                } else {
                    format!(" flags: {}", flags.join(", "))
                }
            );
            out.push_str(line.trim_end());
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} rows | knot: {} match, {} mirror_match, {} mismatch, {} error | unlink: {} certified, {} invariant_consistent, {} inconsistent, {} degenerate",
            s.rows,
            s.knot_match,
            s.knot_mirror_match,
            s.knot_mismatch,
            s.knot_error,
            s.unlink_certified,
            s.unlink_invariant_consistent,
            s.unlink_inconsistent,
            s.unlink_degenerate
        );
        for d in &self.errata {
            let _ = writeln!(
                out,
                "erratum: {} [{}]{}",
                serde_name(&d.kind),
                d.rows.join(", "),
                d.annotation
                    .as_ref()
                    .map(|a| format!(" (annotation {a})"))
                    .unwrap_or_default()
            );
        }
        out
    }
}

fn serde_name<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn flag_text(f: &Flag) -> String {
    match f {
        Flag::DuplicatePd { other } => format!("duplicate_pd({other})"),
        Flag::DegenerateValues { label } => format!("degenerate_values({label})"),
        Flag::NotAKnot { components } => format!("not_a_knot({components})"),
        Flag::Annotated { erratum } => format!("annotated({erratum})"),
        other => serde_json::to_value(other)
            .ok()
            .and_then(|v| v["kind"].as_str().map(str::to_string))
            .unwrap_or_default(),
    }
}

/// Groups of rows whose PD codes parse to the same diagram.
fn duplicate_groups(table: &TangleTable) -> Vec<Vec<String>> {
    let mut by_diagram: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for r in &table.records {
        let key = r
            .diagram()
            .map(|d| d.to_string())
            .unwrap_or_else(|_| r.pd.clone());
        by_diagram.entry(key).or_default().push(r.name.clone());
    }
    by_diagram.into_values().filter(|g| g.len() > 1).collect()
}

fn check_knot(
    pd: &PlanarDiagram,
    reference: &ReferenceInvariants,
    details: &mut Details,
    flags: &mut Vec<Flag>,
) -> KnotCheck {
    details.reference_jones = Some(reference.jones.to_string());
    details.reference_alexander = Some(reference.alexander.to_string());
    let jones = match invariants::jones(pd) {
        Ok(v) => v,
        Err(e) => {
            details.errors.push(e.to_string());
            return KnotCheck::Error;
        }
    };
    details.jones = Some(jones.to_string());
    let alexander = match invariants::alexander(pd) {
        Ok(a) => a,
        Err(e) => {
            details.errors.push(e.to_string());
            return KnotCheck::Error;
        }
    };
    details.alexander = Some(alexander.to_string());
    details.determinant = Some(alexander.eval_at_minus_one().unsigned_abs());
    let alexander_ok = alexander == reference.alexander;
    if !alexander_ok {
        flags.push(Flag::AlexanderMismatch);
    }
    let chirality = compare_jones(&jones, &reference.jones);
    if chirality == ChiralMatch::Different {
        flags.push(Flag::JonesMismatch);
    }
    match (chirality, alexander_ok) {
        (ChiralMatch::Same, true) => KnotCheck::Match,
        (ChiralMatch::Mirror, true) => KnotCheck::MirrorMatch,
        _ => KnotCheck::Mismatch,
    }
}

fn check_candidate(
    pd: &PlanarDiagram,
    record: &TangleRecord,
    assignment: EndAssignment,
    opts: VerifyOptions,
) -> Result<(UnlinkCheck, CandidateDetails), TangleError> {
    let candidate = tangle::unlink_candidate(pd, &record.tangle_values, assignment)?;
    let components = candidate.trace_components().ok().map(|c| c.count);
    let jones = invariants::jones(&candidate).ok();
    let consistent = components == Some(2) && jones.as_ref() == Some(&invariants::unlink_jones(2));
    let budget = opts.max_steps.unwrap_or(10 * candidate.crossing_count());
    let reduced = simplify_greedy(&candidate, budget);
    let check = if !consistent {
        UnlinkCheck::Inconsistent
    } else if reduced.diagram.crossing_count() == 0 && reduced.diagram.free_loops() == 2 {
        UnlinkCheck::Certified
    } else {
        UnlinkCheck::InvariantConsistent
    };
    Ok((
        check,
        CandidateDetails {
            assignment,
            crossings: candidate.crossing_count(),
            components,
            jones: jones.map(|j| j.to_string()),
            remaining_crossings: reduced.diagram.crossing_count(),
            remaining_loops: reduced.diagram.free_loops(),
            incomplete: reduced.incomplete,
            moves: reduced.moves,
        },
    ))
}

fn check_unlink(
    pd: &PlanarDiagram,
    record: &TangleRecord,
    opts: VerifyOptions,
    details: &mut Details,
    flags: &mut Vec<Flag>,
) -> UnlinkCheck {
    if let Some(label) = record.tangle_values.repeated_label() {
        flags.push(Flag::DegenerateValues { label });
        return UnlinkCheck::Degenerate;
    }
    match tangle::cut(
        pd,
        &record.tangle_values.cut_labels(),
        EndAssignment::Forward,
    ) {
        Ok(t) => {
            if !t.is_pure_braid() {
                flags.push(Flag::NotPureBraid);
            }
            if !tangle::restitch(&t).is_ok_and(|d| d.same_up_to_relabel(pd)) {
                flags.push(Flag::RestitchMismatch);
            }
        }
        Err(e) => {
            details.errors.push(e.to_string());
            return UnlinkCheck::Inconsistent;
        }
    }
    let mut best: Option<(UnlinkCheck, CandidateDetails)> = None;
    for assignment in [EndAssignment::Forward, EndAssignment::Mirrored] {
        match check_candidate(pd, record, assignment, opts) {
            Ok(result) => {
                if best.as_ref().is_none_or(|b| result.0 > b.0) {
                    best = Some(result);
                }
            }
            Err(e) => details.errors.push(e.to_string()),
        }
        if best.as_ref().is_some_and(|b| b.0 == UnlinkCheck::Certified) {
            break;
        }
    }
    match best {
        Some((check, candidate)) => {
            details.move_log_len = candidate.moves.len();
            details.candidate = Some(candidate);
            check
        }
        None => UnlinkCheck::Inconsistent,
    }
}

/// Verifies one row. `duplicates` names other rows with the same PD code.
pub fn verify_record(
    record: &TangleRecord,
    reference: &ReferenceInvariants,
    duplicates: &[String],
    annotations: &[String],
    opts: VerifyOptions,
) -> KnotReport {
    let mut details = Details::default();
    let mut flags: Vec<Flag> = duplicates
        .iter()
        .map(|other| Flag::DuplicatePd {
            other: other.clone(),
        })
        .collect();
    flags.extend(annotations.iter().map(|id| Flag::Annotated {
        erratum: id.clone(),
    }));
    let pd = match record.diagram() {
        Ok(pd) => pd,
        Err(e) => {
            details.errors.push(e.to_string());
            return KnotReport {
                name: record.name.clone(),
                knot_check: KnotCheck::Error,
                unlink_check: UnlinkCheck::Inconsistent,
                details,
                flags,
            };
        }
    };
    details.crossings = Some(pd.crossing_count());
    if !pd.is_planar() {
        flags.push(Flag::NonPlanar);
    }
    if !pd.has_incrementing_labels() {
        flags.push(Flag::NonIncrementingLabels);
    }
    let components = match pd.trace_components() {
        Ok(c) => c.count,
        Err(e) => {
            details.errors.push(e.to_string());
            return KnotReport {
                name: record.name.clone(),
                knot_check: KnotCheck::Error,
                unlink_check: UnlinkCheck::Inconsistent,
                details,
                flags,
            };
        }
    };
    details.components = Some(components);
    let (knot_check, unlink_check) = if components != 1 {
        flags.push(Flag::NotAKnot { components });
        (KnotCheck::Error, UnlinkCheck::Inconsistent)
    } else {
        (
            check_knot(&pd, reference, &mut details, &mut flags),
            check_unlink(&pd, record, opts, &mut details, &mut flags),
        )
    };
    KnotReport {
        name: record.name.clone(),
        knot_check,
        unlink_check,
        details,
        flags,
    }
}

/// Verifies the rows named in `only` (all rows when `None`), in table order.
/// Rows missing from `references` are reported as errors.
pub fn verify_table(
    table: &TangleTable,
    references: &BTreeMap<String, ReferenceInvariants>,
    only: Option<&[String]>,
    opts: VerifyOptions,
) -> VerificationReport {
    let groups = duplicate_groups(table);
    let selected: Vec<&TangleRecord> = table
        .records
        .iter()
        .filter(|r| only.is_none_or(|names| names.contains(&r.name)))
        .collect();
    let entries: Vec<KnotReport> = selected
        .par_iter()
        .map(|r| {
            let duplicates: Vec<String> = groups
                .iter()
                .filter(|g| g.contains(&r.name))
                .flatten()
                .filter(|n| **n != r.name)
                .cloned()
                .collect();
            let annotations: Vec<String> = table
                .errata
                .iter()
                .filter(|e| e.rows.contains(&r.name))
                .map(|e| e.id.clone())
                .collect();
            match references.get(&r.name) {
                Some(reference) => verify_record(r, reference, &duplicates, &annotations, opts),
                None => KnotReport {
                    name: r.name.clone(),
                    knot_check: KnotCheck::Error,
                    unlink_check: UnlinkCheck::Inconsistent,
                    details: Details {
                        errors: vec![format!("no reference invariants for {}", r.name)],
                        ..Details::default()
                    },
                    flags: Vec::new(),
                },
            }
        })
        .collect();

    let annotation_for = |rows: &[String]| {
        table
            .errata
            .iter()
            .find(|e| rows.iter().all(|r| e.rows.contains(r)))
            .map(|e| e.id.clone())
    };
    let in_scope = |n: &String| entries.iter().any(|e| &e.name == n);
    let mut errata = Vec::new();
    for g in &groups {
        if g.iter().any(in_scope) {
            errata.push(DetectedErratum {
                kind: ErratumKind::DuplicatePd,
                rows: g.clone(),
                annotation: annotation_for(g),
            });
        }
    }
    for e in &entries {
        let rows = vec![e.name.clone()];
        let kind = match (e.unlink_check, e.knot_check) {
            (UnlinkCheck::Degenerate, _) => Some(ErratumKind::DegenerateTangleValues),
            (UnlinkCheck::Inconsistent, _) => Some(ErratumKind::UnlinkInconsistent),
            _ => None,
        };
        if let Some(kind) = kind {
            errata.push(DetectedErratum {
                kind,
                annotation: annotation_for(&rows),
                rows: rows.clone(),
            });
        }
        if matches!(e.knot_check, KnotCheck::Mismatch | KnotCheck::Error) {
            errata.push(DetectedErratum {
                kind: ErratumKind::KnotMismatch,
                annotation: annotation_for(&rows),
                rows,
            });
        }
    }

    let mut summary = Summary {
        rows: entries.len(),
        ..Summary::default()
    };
    for e in &entries {
        match e.knot_check {
            KnotCheck::Match => summary.knot_match += 1,
            KnotCheck::MirrorMatch => summary.knot_mirror_match += 1,
            KnotCheck::Mismatch => summary.knot_mismatch += 1,
            KnotCheck::Error => summary.knot_error += 1,
        }
        match e.unlink_check {
            UnlinkCheck::Certified => summary.unlink_certified += 1,
            UnlinkCheck::InvariantConsistent => summary.unlink_invariant_consistent += 1,
            UnlinkCheck::Inconsistent => summary.unlink_inconsistent += 1,
            UnlinkCheck::Degenerate => summary.unlink_degenerate += 1,
        }
    }
    VerificationReport {
        schema: REPORT_SCHEMA.to_string(),
        max_steps: opts.max_steps,
        entries,
        errata,
        summary,
    }
}
