/*!
Charge discharging over plane graphs with exact rational arithmetic.

Every vertex starts with charge `2·d(v) − 6` and every face with
`d(f) − 6`; on a sphere these always sum to −12. A rule set moves charge
along a fixed schedule of transfers whose amounts depend only on the
static classification of the graph (no rule observes another rule's
effect), so the total is conserved bit-exactly. Two built-in rule sets are
provided: [`RuleSetId::R110`] (used for (1,1,0)-coloring, with a bank that
buffers quarter-charges between triangles) and [`RuleSetId::R300`] (used
for (3,0,0)-coloring, bankless). The [`audit`] labels each element with
the proof case its shape falls under and checks the claimed lower bound on
its final charge.
*/

use crate::classify::{
    self, chain_terminals, face_signature, has_poor_pendant_portfolio, pendant_3faces,
    special_or_good_4vertex, FaceSignature, FourVertexKind, PoorClass,
};
use crate::plane_graph::{FaceId, PlaneGraph, VertexId};
use num_rational::Rational64;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DischargeError {
    #[error("ledger has no bank flow: rule set {0:?} does not use the bank")]
    NoBank(Option<RuleSetId>),
}

/// The two built-in discharging rule sets, named for the defect profile
/// whose proof they serve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleSetId {
    /// Rules for (1,1,0)-coloring; uses the bank.
    R110,
    /// Rules for (3,0,0)-coloring; no bank.
    R300,
}

impl std::fmt::Display for RuleSetId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RuleSetId::R110 => "110",
            RuleSetId::R300 => "300",
        })
    }
}

/// A charge holder: a vertex, a face, or the bank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ChargeNode {
    Vertex(VertexId),
    Face(FaceId),
    Bank,
}

impl std::fmt::Display for ChargeNode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChargeNode::Vertex(v) => write!(f, "v{v}"),
            ChargeNode::Face(id) => write!(f, "f{id}"),
            ChargeNode::Bank => f.write_str("bank"),
        }
    }
}

/// One logged movement of charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transfer {
    pub from: ChargeNode,
    pub to: ChargeNode,
    pub amount: Rational64,
    pub rule: &'static str,
}

/// Exact charge state of one graph, plus the complete transfer log that
/// produced it from the initial assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    ruleset: Option<RuleSetId>,
    vertex: Vec<Rational64>,
    face: Vec<Rational64>,
    bank: Rational64,
    pub transfers: Vec<Transfer>,
}

impl ChargeLedger {
    fn initial(g: &PlaneGraph) -> Self {
        ChargeLedger {
            ruleset: None,
            vertex: g
                .vertices()
                .map(|v| Rational64::from_integer(2 * g.degree(v) as i64 - 6))
                .collect(),
            face: g
                .faces()
                .iter()
                .map(|f| Rational64::from_integer(f.degree() as i64 - 6))
                .collect(),
            bank: Rational64::zero(),
            transfers: Vec::new(),
        }
    }

    pub fn ruleset(&self) -> Option<RuleSetId> {
        self.ruleset
    }

    pub fn vertex_charge(&self, v: VertexId) -> Rational64 {
        self.vertex[v - 1]
    }

    pub fn face_charge(&self, f: FaceId) -> Rational64 {
        self.face[f]
    }

    pub fn bank(&self) -> Rational64 {
        self.bank
    }

    /// Sum over vertices, faces, and the bank; always −12 on a sphere.
    pub fn total(&self) -> Rational64 {
        self.vertex.iter().chain(self.face.iter()).sum::<Rational64>() + self.bank
    }

    /// Elements whose final charge is negative, vertices first.
    pub fn negative_elements(&self) -> Vec<(ChargeNode, Rational64)> {
        let mut out = Vec::new();
        for (i, &c) in self.vertex.iter().enumerate() {
            if c < Rational64::zero() {
                out.push((ChargeNode::Vertex(i + 1), c));
            }
        }
        for (i, &c) in self.face.iter().enumerate() {
            if c < Rational64::zero() {
                out.push((ChargeNode::Face(i), c));
            }
        }
        if self.bank < Rational64::zero() {
            out.push((ChargeNode::Bank, self.bank));
        }
        out
    }

    fn slot(&mut self, node: ChargeNode) -> &mut Rational64 {
        match node {
            ChargeNode::Vertex(v) => &mut self.vertex[v - 1],
            ChargeNode::Face(f) => &mut self.face[f],
            ChargeNode::Bank => &mut self.bank,
        }
    }

    fn transfer(&mut self, from: ChargeNode, to: ChargeNode, amount: Rational64, rule: &'static str) {
        if amount.is_zero() {
            return;
        }
        *self.slot(from) -= amount;
        *self.slot(to) += amount;
        self.transfers.push(Transfer { from, to, amount, rule });
    }

    /// Rebuilds a ledger by replaying a transfer log on the initial
    /// charges; reproducing `self` this way is the log-completeness check.
    pub fn replay(g: &PlaneGraph, ruleset: Option<RuleSetId>, log: &[Transfer]) -> ChargeLedger {
        let mut fresh = ChargeLedger::initial(g);
        fresh.ruleset = ruleset;
        for t in log {
            fresh.transfer(t.from, t.to, t.amount, t.rule);
        }
        fresh
    }
}

/// Charge before any rule runs: `2d(v) − 6` per vertex, `d(f) − 6` per
/// face, empty bank.
pub fn initial_charges(g: &PlaneGraph) -> ChargeLedger {
    ChargeLedger::initial(g)
}

/// Net bank flow of a banked ledger; errors when the ledger's rule set has
/// no bank (the bankless rules and the initial assignment).
pub fn bank_balance(ledger: &ChargeLedger) -> Result<Rational64, DischargeError> {
    match ledger.ruleset {
        Some(RuleSetId::R110) => Ok(ledger.bank),
        other => Err(DischargeError::NoBank(other)),
    }
}

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// Static classification shared by the rules and the audit.
struct FaceProfile {
    sig: Vec<Option<FaceSignature>>,
    bad345p: Vec<bool>,
    poor: Vec<Option<PoorClass>>,
}

impl FaceProfile {
    fn new(g: &PlaneGraph) -> Self {
        let n_faces = g.face_count();
        let mut sig = vec![None; n_faces];
        let mut bad345p = vec![false; n_faces];
        let mut poor = vec![None; n_faces];
        for f in 0..n_faces {
            sig[f] = face_signature(g, f).ok();
            if sig[f].is_some() {
                bad345p[f] = classify::is_bad_345p_face(g, f).unwrap_or(false);
                poor[f] = classify::poor_class(g, f).ok();
            }
        }
        FaceProfile { sig, bad345p, poor }
    }
}

fn has_good_4vertex(g: &PlaneGraph, f: FaceId) -> bool {
    g.face(f)
        .distinct_vertices()
        .into_iter()
        .any(|v| special_or_good_4vertex(g, v) == Ok(FourVertexKind::Good))
}

/// Runs one rule set as a single simultaneous pass: every amount is
/// decided by the graph's static classification, then all transfers are
/// applied and logged. Total charge is unchanged. The rules are total —
/// on graphs outside the 4-/5-cycle-free class the guards simply match or
/// don't.
pub fn apply_rules(g: &PlaneGraph, ruleset: RuleSetId) -> ChargeLedger {
    let mut ledger = ChargeLedger::initial(g);
    ledger.ruleset = Some(ruleset);
    let profile = FaceProfile::new(g);
    match ruleset {
        RuleSetId::R110 => apply_110(g, &profile, &mut ledger),
        RuleSetId::R300 => apply_300(g, &profile, &mut ledger),
    }
    ledger
}

fn apply_110(g: &PlaneGraph, profile: &FaceProfile, ledger: &mut ChargeLedger) {
    let terminals = chain_terminals(g);

    for v in g.vertices() {
        let node = ChargeNode::Vertex(v);
        let k = g.degree(v);
        let incident = g.incident_3faces(v);
        let pendant = pendant_3faces(g, v);
        match k {
            // A 4-vertex pays each pendant 3-face 1/2 and splits what is
            // left of its charge 2 evenly over its incident 3-faces.
            4 => {
                for &f in &pendant {
                    ledger.transfer(node, ChargeNode::Face(f), q(1, 2), "R1");
                }
                if !incident.is_empty() {
                    let mut rest = q(2, 1) - q(pendant.len() as i64, 2);
                    if rest < Rational64::zero() {
                        rest = Rational64::zero();
                    }
                    let share = rest / Rational64::from_integer(incident.len() as i64);
                    for &f in &incident {
                        ledger.transfer(node, ChargeNode::Face(f), share, "R1");
                    }
                }
            }
            // A 5-vertex pays incident 3-faces by shape, with discounts
            // when it is stretched across a bad (3,4,5)-face, and pays
            // its pendant 3-faces 1/2 or 1/4.
            5 => {
                let has_bad345 = incident
                    .iter()
                    .any(|&f| profile.sig[f] == Some(FaceSignature([3, 4, 5])) && profile.bad345p[f]);
                let has_pendant_lean = pendant
                    .iter()
                    .any(|&f| profile.sig[f].is_some_and(|s| s.matches("3,4-,4-")));
                for &f in &incident {
                    let Some(sig) = profile.sig[f] else { continue };
                    let fnode = ChargeNode::Face(f);
                    if sig.0 == [3, 3, 5] {
                        ledger.transfer(node, fnode, q(2, 1), "R6a");
                    } else if sig.0 == [3, 4, 5] && profile.bad345p[f] {
                        ledger.transfer(node, fnode, q(9, 4), "R6a");
                    } else if sig.0 == [3, 4, 5] {
                        let amt = if has_bad345 { q(7, 4) } else { q(2, 1) };
                        ledger.transfer(node, fnode, amt, "R6b");
                    } else if sig.matches("3,5+,5+") {
                        let amt = if has_bad345 && has_pendant_lean { q(5, 4) } else { q(3, 2) };
                        ledger.transfer(node, fnode, amt, "R6c");
                    } else if sig.0[0] >= 4 {
                        let amt = if terminals.contains(&f) { q(3, 2) } else { q(1, 1) };
                        ledger.transfer(node, fnode, amt, "R6d");
                    }
                }
                for &f in &pendant {
                    let Some(sig) = profile.sig[f] else { continue };
                    let amt = if sig.matches("3,4-,4-") || sig.matches("3,3,3+") {
                        q(1, 2)
                    } else {
                        q(1, 4)
                    };
                    ledger.transfer(node, ChargeNode::Face(f), amt, "R6e");
                }
            }
            // A 6-vertex pays 9/4 to bad (3,4,6)-faces, 2 to the other
            // (3,4⁻,6)-faces, and 3/2 to its remaining 3-faces.
            6 => {
                for &f in &incident {
                    let Some(sig) = profile.sig[f] else { continue };
                    let amt = if sig.0 == [3, 4, 6] && profile.bad345p[f] {
                        q(9, 4)
                    } else if sig.matches("3,4-,6") {
                        q(2, 1)
                    } else {
                        q(3, 2)
                    };
                    ledger.transfer(node, ChargeNode::Face(f), amt, "R2");
                }
            }
            _ if k >= 7 => {
                for &f in &incident {
                    ledger.transfer(node, ChargeNode::Face(f), q(9, 4), "R2");
                }
            }
            _ => {}
        }
        if k >= 6 {
            for &f in &pendant {
                ledger.transfer(node, ChargeNode::Face(f), q(1, 2), "R3");
            }
        }
    }

    // Faces with surplus pay the bank; the bank refloats (3,4,4)-faces
    // that have no good 4-vertex.
    for f in 0..g.face_count() {
        let Some(sig) = profile.sig[f] else { continue };
        let fnode = ChargeNode::Face(f);
        if sig.matches("4+,4+,5+") || (sig.0 == [4, 4, 4] && has_good_4vertex(g, f)) {
            ledger.transfer(fnode, ChargeNode::Bank, q(1, 2), "R4");
        }
        if profile.bad345p[f] {
            ledger.transfer(fnode, ChargeNode::Bank, q(1, 4), "R4");
        }
    }
    for f in 0..g.face_count() {
        let Some(sig) = profile.sig[f] else { continue };
        if sig.0 == [3, 4, 4] && !has_good_4vertex(g, f) {
            ledger.transfer(ChargeNode::Bank, ChargeNode::Face(f), q(1, 2), "R5");
        }
    }
}

fn apply_300(g: &PlaneGraph, profile: &FaceProfile, ledger: &mut ChargeLedger) {
    for v in g.vertices() {
        let node = ChargeNode::Vertex(v);
        let k = g.degree(v);
        let incident = g.incident_3faces(v);
        match k {
            4 => {
                for &f in &incident {
                    ledger.transfer(node, ChargeNode::Face(f), q(1, 1), "R1");
                }
            }
            5 | 6 => {
                for &f in &incident {
                    ledger.transfer(node, ChargeNode::Face(f), q(2, 1), "R2");
                }
            }
            7..=10 => {
                // 3 to poor faces, 2 to semi-poor ones — except that a
                // 7-vertex already tied down by two poor faces and a
                // pendant 3-face pays a semi-poor (3,7,7⁺)-face only 1 —
                // and 1 to every other incident 3-face.
                let discounted = k == 7 && has_poor_pendant_portfolio(g, v);
                for &f in &incident {
                    let amt = match profile.poor[f] {
                        Some(PoorClass::Poor) => q(3, 1),
                        Some(PoorClass::SemiPoor) => {
                            let special = discounted
                                && profile.sig[f].is_some_and(|s| s.matches("3,7,7+"));
                            if special {
                                q(1, 1)
                            } else {
                                q(2, 1)
                            }
                        }
                        _ => q(1, 1),
                    };
                    ledger.transfer(node, ChargeNode::Face(f), amt, "R4");
                }
            }
            _ if k >= 11 => {
                for &f in &incident {
                    ledger.transfer(node, ChargeNode::Face(f), q(3, 1), "R5");
                }
            }
            _ => {}
        }
        if k >= 6 {
            for &f in &pendant_3faces(g, v) {
                ledger.transfer(node, ChargeNode::Face(f), q(1, 1), "R3");
            }
        }
    }
}

/// Audit outcome for one vertex or face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditEntry {
    pub element: ChargeNode,
    /// Proof case the element's shape falls under, or `unmatched-case`.
    pub label: String,
    pub final_charge: Rational64,
    /// Claimed lower bound on the final charge; `None` for unmatched
    /// elements, which carry no claim.
    pub bound: Option<Rational64>,
    pub satisfied: Option<bool>,
}

/// Per-element case labels and bound checks after one rule set has run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub ruleset: RuleSetId,
    pub entries: Vec<AuditEntry>,
    pub bank: Rational64,
    /// Bank claim: non-negative after the banked rules (trivially true
    /// for the bankless set, whose bank never moves).
    pub bank_ok: bool,
    pub total: Rational64,
    pub conserved: bool,
}

impl AuditReport {
    /// True when every labeled element meets its claimed bound and the
    /// bank claim holds.
    pub fn all_bounds_hold(&self) -> bool {
        self.bank_ok && self.entries.iter().all(|e| e.satisfied != Some(false))
    }

    pub fn violations(&self) -> Vec<&AuditEntry> {
        self.entries.iter().filter(|e| e.satisfied == Some(false)).collect()
    }

    pub fn entry(&self, element: ChargeNode) -> &AuditEntry {
        self.entries
            .iter()
            .find(|e| e.element == element)
            .expect("audit covers every vertex and face")
    }
}

pub const UNMATCHED: &str = "unmatched-case";

fn vertex_label_110(k: usize) -> Option<String> {
    match k {
        0..=2 => None,
        3..=6 => Some(format!("k={k}")),
        _ => Some("k=7+".to_string()),
    }
}

fn vertex_label_300(k: usize) -> Option<String> {
    match k {
        0..=2 => None,
        3..=10 => Some(format!("k={k}")),
        _ => Some("k=11+".to_string()),
    }
}

fn face_case_110(sig: FaceSignature, bad: bool) -> Option<(String, Rational64)> {
    let [a, b, c] = sig.0;
    let zero = Rational64::zero();
    if a <= 2 {
        return None;
    }
    let case = if a == 3 && b == 3 {
        if c >= 5 {
            "Case 1: (3,3,5+)-face"
        } else {
            return None; // (3,3,4⁻)-faces have no case; they are reducible outright.
        }
    } else if a == 3 && b == 4 {
        match c {
            4 => "Case 2: (3,4,4)-face",
            5 if bad => "Case 3: bad (3,4,5)-face",
            5 => "Case 4: non-bad (3,4,5)-face",
            6 => "Case 5: (3,4,6)-face",
            _ => return Some(("Case 6: (3,4,7+)-face".to_string(), q(1, 4))),
        }
    } else if a == 3 && b == 5 {
        if c == 5 {
            "Case 7: (3,5,5)-face"
        } else {
            "Case 8: (3,5,6+)-face"
        }
    } else if a == 3 {
        "Case 9: (3,6+,6+)-face"
    } else if sig.0 == [4, 4, 4] {
        "Case 10: (4,4,4)-face"
    } else {
        "Case 11: (4+,4+,5+)-face"
    };
    Some((case.to_string(), zero))
}

fn face_case_300(sig: FaceSignature) -> Option<(String, Rational64)> {
    let [a, b, _c] = sig.0;
    if a <= 2 {
        return None;
    }
    let case = if a >= 4 {
        "Case 1: (4+,4+,4+)-face"
    } else if b >= 4 {
        "Case 2: (3,4+,4+)-face"
    } else if sig.0 == [3, 3, 3] {
        "Case 4: (3,3,3)-face"
    } else {
        "Case 3: (3,3,4+)-face"
    };
    Some((case.to_string(), Rational64::zero()))
}

/// Runs the rule set, then labels every vertex and face with its proof
/// case and checks the claimed final-charge bound. Elements whose shape
/// fits no case (2⁻-vertices, 4- and 5-faces, (3,3,4⁻)-faces under the
/// banked rules) are labeled `unmatched-case` and carry no claim.
pub fn audit(g: &PlaneGraph, ruleset: RuleSetId) -> AuditReport {
    let ledger = apply_rules(g, ruleset);
    let profile = FaceProfile::new(g);
    let mut entries = Vec::new();

    for v in g.vertices() {
        let label = match ruleset {
            RuleSetId::R110 => vertex_label_110(g.degree(v)),
            RuleSetId::R300 => vertex_label_300(g.degree(v)),
        };
        let final_charge = ledger.vertex_charge(v);
        let (label, bound) = match label {
            Some(l) => (l, Some(Rational64::zero())),
            None => (UNMATCHED.to_string(), None),
        };
        entries.push(AuditEntry {
            element: ChargeNode::Vertex(v),
            satisfied: bound.map(|b| final_charge >= b),
            label,
            final_charge,
            bound,
        });
    }

    for f in 0..g.face_count() {
        let degree = g.face(f).degree();
        let final_charge = ledger.face_charge(f);
        let case = if degree >= 6 {
            Some(("6+-face".to_string(), Rational64::zero()))
        } else if let Some(sig) = profile.sig[f] {
            match ruleset {
                RuleSetId::R110 => face_case_110(sig, profile.bad345p[f]),
                RuleSetId::R300 => face_case_300(sig),
            }
        } else {
            None // 4-faces, 5-faces, degenerate boundaries
        };
        let (label, bound) = match case {
            Some((l, b)) => (l, Some(b)),
            None => (UNMATCHED.to_string(), None),
        };
        entries.push(AuditEntry {
            element: ChargeNode::Face(f),
            satisfied: bound.map(|b| final_charge >= b),
            label,
            final_charge,
            bound,
        });
    }

    let total = ledger.total();
    AuditReport {
        ruleset,
        bank: ledger.bank(),
        bank_ok: ledger.bank() >= Rational64::zero(),
        total,
        conserved: total == Rational64::from_integer(-12),
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grow::{self, attach_triangle_at, pad_to_degree, triangle};
    use crate::plane_graph::PlaneGraph;

    fn k4() -> PlaneGraph {
        PlaneGraph::from_rotation(vec![vec![2, 3, 4], vec![1, 4, 3], vec![1, 2, 4], vec![1, 3, 2]])
            .unwrap()
    }

    fn bowtie() -> PlaneGraph {
        PlaneGraph::from_rotation(vec![
            vec![5, 2],
            vec![1, 5],
            vec![5, 4],
            vec![3, 5],
            vec![2, 1, 4, 3],
        ])
        .unwrap()
    }

    fn minus12() -> Rational64 {
        Rational64::from_integer(-12)
    }

    #[test]
    fn initial_charges_match_degree_formulas() {
        let tri = triangle();
        let ledger = initial_charges(&tri);
        for v in 1..=3 {
            assert_eq!(ledger.vertex_charge(v), Rational64::from_integer(-2));
        }
        for f in 0..2 {
            assert_eq!(ledger.face_charge(f), Rational64::from_integer(-3));
        }
        assert_eq!(ledger.total(), minus12());

        let bt = bowtie();
        let ledger = initial_charges(&bt);
        assert_eq!(ledger.vertex_charge(5), Rational64::from_integer(2));
        for v in 1..=4 {
            assert_eq!(ledger.vertex_charge(v), Rational64::from_integer(-2));
        }
        let mut faces: Vec<i64> = (0..bt.face_count())
            .map(|f| *ledger.face_charge(f).numer())
            .collect();
        faces.sort_unstable();
        assert_eq!(faces, vec![-3, -3, 0]);
        assert_eq!(ledger.total(), minus12());
        assert_eq!(ledger.ruleset(), None);
        assert!(bank_balance(&ledger).is_err());
    }

    #[test]
    fn no_triangles_means_no_transfers() {
        let c7 = grow::cycle(7);
        for ruleset in [RuleSetId::R110, RuleSetId::R300] {
            let ledger = apply_rules(&c7, ruleset);
            assert!(ledger.transfers.is_empty());
            assert_eq!(ledger.total(), minus12());
            for v in 1..=7 {
                assert_eq!(ledger.vertex_charge(v), Rational64::from_integer(-2));
            }
        }
        assert_eq!(bank_balance(&apply_rules(&c7, RuleSetId::R110)), Ok(Rational64::zero()));
        assert!(bank_balance(&apply_rules(&c7, RuleSetId::R300)).is_err());
    }

    #[test]
    fn bowtie_center_pays_one_per_triangle_under_both_rule_sets() {
        let bt = bowtie();
        for ruleset in [RuleSetId::R110, RuleSetId::R300] {
            let ledger = apply_rules(&bt, ruleset);
            assert_eq!(ledger.vertex_charge(5), Rational64::zero(), "{ruleset}");
            let mut tri_charges: Vec<Rational64> = bt
                .faces()
                .iter()
                .filter(|f| f.degree() == 3)
                .map(|f| ledger.face_charge(f.id))
                .collect();
            tri_charges.sort();
            assert_eq!(tri_charges, vec![Rational64::from_integer(-2); 2]);
            assert_eq!(ledger.total(), minus12());
            assert_eq!(ledger.transfers.len(), 2);
            assert!(ledger.transfers.iter().all(|t| t.amount == Rational64::from_integer(1)));
        }
    }

    #[test]
    fn tetrahedral_map_moves_nothing_under_banked_rules() {
        // Every vertex has degree 3, so no rule pays and no face qualifies
        // for the bank: the ledger stays at the initial assignment.
        let ledger = apply_rules(&k4(), RuleSetId::R110);
        assert!(ledger.transfers.is_empty());
        for f in 0..4 {
            assert_eq!(ledger.face_charge(f), Rational64::from_integer(-3));
        }
    }

    /// A (3,4,5)-face {1,2,3} made bad by the (3,4,4)-face {2,4,5}; pads
    /// bring every named vertex to its target degree.
    fn bad_345_host() -> PlaneGraph {
        let mut g = attach_triangle_at(&triangle(), 2).unwrap();
        g = pad_to_degree(&g, 1, 3).unwrap();
        g = pad_to_degree(&g, 3, 5).unwrap();
        g = pad_to_degree(&g, 4, 4).unwrap();
        g = pad_to_degree(&g, 5, 3).unwrap();
        g
    }

    #[test]
    fn bad_345_face_balances_to_zero_exactly() {
        let g = bad_345_host();
        let ledger = apply_rules(&g, RuleSetId::R110);
        let f = g.face_with_vertices(&[1, 2, 3]).unwrap();
        let f3 = g.face_with_vertices(&[2, 4, 5]).unwrap();
        // Income: 1 from the shared 4-vertex, 9/4 from the 5-vertex;
        // outgo: 1/4 to the bank.
        assert_eq!(ledger.face_charge(f), Rational64::zero());
        // The second face gets 1 from the shared 4-vertex and 2 from its
        // own good 4-vertex.
        assert_eq!(ledger.face_charge(f3), Rational64::zero());
        assert_eq!(ledger.vertex_charge(2), Rational64::zero());
        assert_eq!(ledger.vertex_charge(3), q(7, 4));
        assert_eq!(bank_balance(&ledger), Ok(q(1, 4)));
        assert_eq!(ledger.total(), minus12());
    }

    #[test]
    fn lone_all_heavy_triangle_pays_the_bank() {
        // A (4,4,5)-face with no (3,4,4)-faces anywhere: it pays 1/2 to
        // the bank and nothing refloats it.
        let mut g = triangle();
        g = pad_to_degree(&g, 1, 4).unwrap();
        g = pad_to_degree(&g, 2, 4).unwrap();
        g = pad_to_degree(&g, 3, 5).unwrap();
        let ledger = apply_rules(&g, RuleSetId::R110);
        assert_eq!(bank_balance(&ledger), Ok(q(1, 2)));
        let f = g.face_with_vertices(&[1, 2, 3]).unwrap();
        // Income 2 + 2 + 1 (the 5-vertex sees no chain), outgo 1/2.
        assert_eq!(ledger.face_charge(f), q(3, 2));
    }

    #[test]
    fn replaying_the_log_reproduces_the_ledger() {
        for g in [k4(), bowtie(), bad_345_host(), grow::cycle(7)] {
            for ruleset in [RuleSetId::R110, RuleSetId::R300] {
                let ledger = apply_rules(&g, ruleset);
                let replayed = ChargeLedger::replay(&g, Some(ruleset), &ledger.transfers);
                assert_eq!(ledger, replayed);
            }
        }
    }

    #[test]
    fn transfer_amounts_stay_in_quarter_units_on_these_hosts() {
        let allowed: Vec<Rational64> = [(1, 4), (1, 2), (3, 4), (1, 1), (5, 4), (3, 2), (7, 4), (2, 1), (9, 4), (3, 1)]
            .iter()
            .map(|&(n, d)| q(n, d))
            .collect();
        for g in [k4(), bowtie(), bad_345_host()] {
            for ruleset in [RuleSetId::R110, RuleSetId::R300] {
                for t in &apply_rules(&g, ruleset).transfers {
                    assert!(allowed.contains(&t.amount), "{} via {}", t.amount, t.rule);
                }
            }
        }
    }

    #[test]
    fn audit_labels_cycle_vertices_unmatched_but_checks_big_faces() {
        let report = audit(&grow::cycle(7), RuleSetId::R110);
        for v in 1..=7 {
            let e = report.entry(ChargeNode::Vertex(v));
            assert_eq!(e.label, UNMATCHED);
            assert_eq!(e.satisfied, None);
            assert_eq!(e.final_charge, Rational64::from_integer(-2));
        }
        for f in 0..2 {
            let e = report.entry(ChargeNode::Face(f));
            assert_eq!(e.label, "6+-face");
            assert_eq!(e.final_charge, Rational64::from_integer(1));
            assert_eq!(e.satisfied, Some(true));
        }
        assert!(report.conserved);
        assert!(report.bank_ok);
        assert!(report.all_bounds_hold());
    }

    #[test]
    fn audit_labels_bowtie_triangles_unmatched_under_bankless_rules() {
        let bt = bowtie();
        let report = audit(&bt, RuleSetId::R300);
        for face in bt.faces() {
            let e = report.entry(ChargeNode::Face(face.id));
            if face.degree() == 3 {
                // Signature (2,2,4) fits no triangle case.
                assert_eq!(e.label, UNMATCHED);
                assert_eq!(e.satisfied, None);
            } else {
                assert_eq!(e.label, "6+-face");
            }
        }
        let center = report.entry(ChargeNode::Vertex(5));
        assert_eq!(center.label, "k=4");
        assert_eq!(center.satisfied, Some(true));
        assert_eq!(report.entry(ChargeNode::Vertex(1)).label, UNMATCHED);
    }

    #[test]
    fn audit_cases_cover_the_shapes_they_name() {
        let g = bad_345_host();
        let report = audit(&g, RuleSetId::R110);
        let f = g.face_with_vertices(&[1, 2, 3]).unwrap();
        let f3 = g.face_with_vertices(&[2, 4, 5]).unwrap();
        assert_eq!(report.entry(ChargeNode::Face(f)).label, "Case 3: bad (3,4,5)-face");
        assert_eq!(report.entry(ChargeNode::Face(f3)).label, "Case 2: (3,4,4)-face");
        assert_eq!(report.entry(ChargeNode::Vertex(3)).label, "k=5");
        assert_eq!(report.entry(ChargeNode::Face(f)).satisfied, Some(true));

        // The tetrahedral map's (3,3,3)-faces fit no banked-rules case.
        let k4 = k4();
        let r110 = audit(&k4, RuleSetId::R110);
        for f in 0..4 {
            assert_eq!(r110.entry(ChargeNode::Face(f)).label, UNMATCHED);
        }
        // The bankless rules do have a (3,3,3) case, and it is violated
        // here: the faces keep charge −3 because no 6⁺ pendant pays.
        let r300 = audit(&k4, RuleSetId::R300);
        for f in 0..4 {
            let e = r300.entry(ChargeNode::Face(f));
            assert_eq!(e.label, "Case 4: (3,3,3)-face");
            assert_eq!(e.satisfied, Some(false));
        }
        assert!(!r300.all_bounds_hold());
        assert_eq!(r300.violations().len(), 4);
    }

    #[test]
    fn case_six_keeps_its_quarter_surplus() {
        // (3,4,7)-face: income 1 + 9/4, no outgo → exactly 1/4 over. The
        // 4-vertex needs a second incident triangle so that its surplus
        // of 2 is split and this face receives the minimal share of 1.
        let mut g = attach_triangle_at(&triangle(), 2).unwrap();
        g = pad_to_degree(&g, 1, 3).unwrap();
        g = pad_to_degree(&g, 3, 7).unwrap();
        let report = audit(&g, RuleSetId::R110);
        let f = g.face_with_vertices(&[1, 2, 3]).unwrap();
        let e = report.entry(ChargeNode::Face(f));
        assert_eq!(e.label, "Case 6: (3,4,7+)-face");
        assert_eq!(e.bound, Some(q(1, 4)));
        assert_eq!(e.final_charge, q(1, 4));
        assert_eq!(e.satisfied, Some(true));
    }

    #[test]
    fn bankless_triple_three_face_with_high_pendants_balances() {
        // (3,3,3)-face whose three 3-vertices all have 6⁺ pendant
        // neighbors: each pays 1, landing the face exactly at zero.
        let mut g = triangle();
        let mut pendants = Vec::new();
        for v in 1..=3 {
            let p = g.vertex_count() + 1;
            g = pad_to_degree(&g, v, 3).unwrap();
            pendants.push(p);
        }
        for &p in &pendants {
            g = pad_to_degree(&g, p, 6).unwrap();
        }
        let report = audit(&g, RuleSetId::R300);
        let f = g.face_with_vertices(&[1, 2, 3]).unwrap();
        let e = report.entry(ChargeNode::Face(f));
        assert_eq!(e.label, "Case 4: (3,3,3)-face");
        assert_eq!(e.final_charge, Rational64::zero());
        assert_eq!(e.satisfied, Some(true));
    }

    #[test]
    fn bankless_semi_poor_faces_get_two_plus_one() {
        // (3,3,7)-face, one pendant neighbor of degree 4 (poor 3-vertex),
        // the other of degree 6: semi-poor, so the 7-vertex pays 2 and
        // the 6-vertex pays 1 through the high pendant.
        let mut g = pad_to_degree(&triangle(), 3, 7).unwrap();
        let p1 = g.vertex_count() + 1;
        g = pad_to_degree(&g, 1, 3).unwrap();
        let p2 = g.vertex_count() + 1;
        g = pad_to_degree(&g, 2, 3).unwrap();
        g = pad_to_degree(&g, p1, 4).unwrap();
        g = pad_to_degree(&g, p2, 6).unwrap();
        let ledger = apply_rules(&g, RuleSetId::R300);
        let f = g.face_with_vertices(&[1, 2, 3]).unwrap();
        assert_eq!(ledger.face_charge(f), Rational64::zero());
        let report = audit(&g, RuleSetId::R300);
        assert_eq!(report.entry(ChargeNode::Face(f)).label, "Case 3: (3,3,4+)-face");
        assert_eq!(report.entry(ChargeNode::Face(f)).satisfied, Some(true));
    }

    #[test]
    fn bankless_non_poor_small_hub_face_keeps_one_extra() {
        // Non-poor (3,3,5)-face with both pendant neighbors of degree 6:
        // the 5-vertex pays 2 and both pendants pay 1 each, so the face
        // ends at +1 — comfortably above its claimed bound of 0.
        let mut g = pad_to_degree(&triangle(), 3, 5).unwrap();
        let p1 = g.vertex_count() + 1;
        g = pad_to_degree(&g, 1, 3).unwrap();
        let p2 = g.vertex_count() + 1;
        g = pad_to_degree(&g, 2, 3).unwrap();
        g = pad_to_degree(&g, p1, 6).unwrap();
        g = pad_to_degree(&g, p2, 6).unwrap();
        let ledger = apply_rules(&g, RuleSetId::R300);
        let f = g.face_with_vertices(&[1, 2, 3]).unwrap();
        assert_eq!(ledger.face_charge(f), Rational64::from_integer(1));
        assert!(audit(&g, RuleSetId::R300).entry(ChargeNode::Face(f)).satisfied == Some(true));
    }

    #[test]
    fn conservation_holds_across_assorted_hosts() {
        let hosts = vec![
            k4(),
            bowtie(),
            triangle(),
            grow::cycle(6),
            bad_345_host(),
            attach_triangle_at(&pad_to_degree(&triangle(), 1, 4).unwrap(), 4).unwrap(),
        ];
        for g in hosts {
            for ruleset in [RuleSetId::R110, RuleSetId::R300] {
                let ledger = apply_rules(&g, ruleset);
                assert_eq!(ledger.total(), minus12());
            }
        }
    }
}
