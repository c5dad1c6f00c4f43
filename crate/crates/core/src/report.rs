/*!
Machine-readable run records.

Every CLI command emits one JSON object per input graph (JSON lines).
Records are deterministic — rationals print exactly (`"9/4"`, `"-1/2"`,
`"3"`), maps are avoided in favor of ordered arrays, and wall-clock
timings are attached only on request — so identical inputs produce
byte-identical reports.
*/

use crate::corpus::digest;
use crate::discharge::{AuditReport, ChargeLedger, Transfer};
use crate::plane_graph::{PlaneGraph, VertexId};
use crate::planar_code::encode_graph;
use crate::reducible::{ConfigMatch, ConfirmedBy, Verdict};
use crate::solver::{Coloring, DefectProfile, Violation};
use num_rational::Rational64;
use serde::Serialize;

/// Exact decimal-free rendering: integers bare, otherwise `numer/denom`.
pub fn rational_str(q: Rational64) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn profile_str(profile: &DefectProfile) -> String {
    profile
        .caps()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// One line of a report: identity of the graph plus whichever command
/// sections were produced for it.
#[derive(Serialize)]
pub struct GraphRecord {
    pub digest: String,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    /// Free of 4- and 5-cycles.
    pub in_class: bool,
    pub encoding_hex: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solve: Option<SolveReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discharge: Option<DischargeReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan: Option<ScanReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u128>,
}

impl GraphRecord {
    pub fn new(g: &PlaneGraph) -> Self {
        GraphRecord {
            digest: digest(g),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            faces: g.face_count(),
            in_class: g.in_class(),
            encoding_hex: hex::encode(encode_graph(g)),
            solve: None,
            verify: None,
            discharge: None,
            scan: None,
            oracle: None,
            theorem: None,
            wall_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}

#[derive(Serialize)]
pub struct SolveReport {
    pub profile: String,
    pub colorable: bool,
    /// Space-separated `v:color` pairs when a coloring exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<String>,
}

impl SolveReport {
    pub fn new(profile: &DefectProfile, solution: &Option<Coloring>) -> Self {
        SolveReport {
            profile: profile_str(profile),
            colorable: solution.is_some(),
            coloring: solution.as_ref().map(|c| crate::solver::format_coloring(c)),
        }
    }
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub profile: String,
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn new(profile: &DefectProfile, violations: Vec<Violation>) -> Self {
        VerifyReport {
            profile: profile_str(profile),
            valid: violations.is_empty(),
            violations,
        }
    }
}

#[derive(Serialize)]
pub struct ChargeEntryReport {
    pub element: String,
    pub label: String,
    pub final_charge: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub satisfied: Option<bool>,
}

#[derive(Serialize)]
pub struct TransferReport {
    pub from: String,
    pub to: String,
    pub amount: String,
    pub rule: String,
}

impl TransferReport {
    fn new(t: &Transfer) -> Self {
        TransferReport {
            from: t.from.to_string(),
            to: t.to.to_string(),
            amount: rational_str(t.amount),
            rule: t.rule.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct DischargeReport {
    pub rules: String,
    pub total: String,
    /// Total equals 2·V − 6 + F − 6·… — concretely, −12 for every plane
    /// graph — both before and after the rules run.
    pub conserved: bool,
    pub bank: String,
    pub bank_ok: bool,
    pub bounds_hold: bool,
    pub violations: Vec<ChargeEntryReport>,
    /// Full per-element audit, on request.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<Vec<ChargeEntryReport>>,
    /// Complete transfer log, on request.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transfers: Option<Vec<TransferReport>>,
}

impl DischargeReport {
    pub fn new(
        audit: &AuditReport,
        ledger: &ChargeLedger,
        full_audit: bool,
        log_transfers: bool,
    ) -> Self {
        let entry = |e: &crate::discharge::AuditEntry| ChargeEntryReport {
            element: e.element.to_string(),
            label: e.label.clone(),
            final_charge: rational_str(e.final_charge),
            bound: e.bound.map(rational_str),
            satisfied: e.satisfied,
        };
        DischargeReport {
            rules: audit.ruleset.to_string(),
            total: rational_str(audit.total),
            conserved: audit.conserved,
            bank: rational_str(audit.bank),
            bank_ok: audit.bank_ok,
            bounds_hold: audit.all_bounds_hold(),
            violations: audit.violations().into_iter().map(entry).collect(),
            audit: full_audit.then(|| audit.entries.iter().map(entry).collect()),
            transfers: log_transfers
                .then(|| ledger.transfers.iter().map(TransferReport::new).collect()),
        }
    }
}

#[derive(Serialize)]
pub struct MatchReport {
    pub config: String,
    pub structural: bool,
    /// Role-name/element pairs in declaration order.
    pub bindings: Vec<(String, String)>,
    pub deletion_set: Vec<VertexId>,
}

impl MatchReport {
    pub fn new(m: &ConfigMatch) -> Self {
        MatchReport {
            config: m.config.name().to_string(),
            structural: m.config.is_structural(),
            bindings: m
                .bindings
                .iter()
                .map(|(role, b)| (role.clone(), b.to_string()))
                .collect(),
            deletion_set: m.h.iter().copied().collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ScanReport {
    pub scope: String,
    pub matches: Vec<MatchReport>,
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Confirmed(ConfirmedBy::DeletionUncolorable) => "confirmed-deletion-uncolorable",
        Verdict::Confirmed(ConfirmedBy::HostColorable) => "confirmed-host-colorable",
        Verdict::Refuted => "refuted",
    }
}

#[derive(Serialize)]
pub struct OracleOutcome {
    pub config: String,
    pub profile: String,
    pub deletion_set: Vec<VertexId>,
    /// `confirmed-…`, `refuted`, or `skipped: reason`.
    pub verdict: String,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub cap: usize,
    pub outcomes: Vec<OracleOutcome>,
    pub confirmed: usize,
    pub refuted: usize,
    pub skipped: usize,
    /// No occurrence was refuted (skips are not refutations).
    pub clean: bool,
}

impl OracleReport {
    pub fn new(cap: usize, outcomes: Vec<OracleOutcome>) -> Self {
        let confirmed = outcomes
            .iter()
            .filter(|o| o.verdict.starts_with("confirmed"))
            .count();
        let refuted = outcomes.iter().filter(|o| o.verdict == "refuted").count();
        let skipped = outcomes.len() - confirmed - refuted;
        OracleReport {
            cap,
            outcomes,
            confirmed,
            refuted,
            skipped,
            clean: refuted == 0,
        }
    }
}

/// Per-graph colorability check for both theorems; out-of-class graphs
/// are recorded but make no claim.
#[derive(Serialize)]
pub struct TheoremReport {
    pub in_class: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colorable_110: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colorable_300: Option<bool>,
    /// Both colorings exist (in-class graphs only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discharge::{apply_rules, audit, ChargeNode, RuleSetId};
    use crate::grow::triangle;

    #[test]
    fn rationals_render_exactly() {
        assert_eq!(rational_str(Rational64::new(9, 4)), "9/4");
        assert_eq!(rational_str(Rational64::new(-1, 2)), "-1/2");
        assert_eq!(rational_str(Rational64::new(6, 2)), "3");
        assert_eq!(rational_str(Rational64::new(0, 5)), "0");
    }

    #[test]
    fn records_are_reproducible_and_sectioned() {
        let g = crate::fixtures::bad_345_host();
        let build = || {
            let mut r = GraphRecord::new(&g);
            let report = audit(&g, RuleSetId::R110);
            let ledger = apply_rules(&g, RuleSetId::R110);
            r.discharge = Some(DischargeReport::new(&report, &ledger, false, true));
            r.to_json()
        };
        let a = build();
        assert_eq!(a, build(), "identical runs must serialize identically");
        assert!(a.contains("\"digest\""));
        assert!(a.contains("\"discharge\""));
        assert!(!a.contains("\"solve\""), "unused sections must be absent");
        assert!(!a.contains("\"wall_ms\""));
        assert!(a.contains("\"-12\""), "exact total expected");
    }

    #[test]
    fn solve_sections_render_profiles_and_colorings() {
        let g = triangle();
        let profile = DefectProfile::d110();
        let solution = crate::solver::solve(&g, &profile, &vec![None; 3]).unwrap();
        let s = SolveReport::new(&profile, &solution);
        assert!(s.colorable);
        assert_eq!(s.profile, "1,1,0");
        let text = serde_json::to_string(&s).unwrap();
        assert!(text.contains("1:"), "coloring pairs expected, got {text}");
    }

    #[test]
    fn charge_node_and_verdict_strings_are_stable() {
        assert_eq!(ChargeNode::Vertex(3).to_string(), "v3");
        assert_eq!(ChargeNode::Face(0).to_string(), "f0");
        assert_eq!(ChargeNode::Bank.to_string(), "bank");
        assert_eq!(
            verdict_str(Verdict::Confirmed(ConfirmedBy::HostColorable)),
            "confirmed-host-colorable"
        );
        assert_eq!(verdict_str(Verdict::Refuted), "refuted");
    }
}
