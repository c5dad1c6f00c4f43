/*!
Structural classification of plane-graph elements.

Everything here is a pure function of an immutable [`PlaneGraph`]: degree
signatures of 3-faces, bad 3-vertices and pendant incidences, the
special/good taxonomy of 4-vertices, "bad" (3,4,5⁺)-faces, chains of
triangles glued at 4-vertices, and the poor / semi-poor / non-poor grading
of 3-faces by the degrees of their 3-vertices' pendant neighbors.

Degree-bound patterns such as `(3,4⁻,5⁺)` are written as strings —
`"3,4-,5+"` — and evaluated by one shared matcher instead of hand-rolled
comparisons; see [`FaceSignature::matches`].
*/

use crate::plane_graph::{FaceId, PlaneGraph, VertexId};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("face {0} is not a 3-face")]
    NotA3Face(FaceId),
    #[error("face {0} has a degenerate boundary (repeated vertex)")]
    DegenerateBoundary(FaceId),
    #[error("vertex {0} is not a 4-vertex")]
    NotA4Vertex(VertexId),
    #[error("face {0} is not semi-poor")]
    NotSemiPoor(FaceId),
    #[error("face {0} is not a (3,4,4)-face")]
    NotA344Face(FaceId),
}

/// Sorted degree triple of a 3-face's boundary vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FaceSignature(pub [usize; 3]);

impl FaceSignature {
    pub fn degrees(&self) -> [usize; 3] {
        self.0
    }

    /// Matches the signature against a degree-bound pattern: three
    /// comma-separated entries, each a degree with an optional `-` (at
    /// most) or `+` (at least) suffix, e.g. `"3,4-,5+"`. The match tries
    /// every assignment of the three degrees to the three slots. Panics on
    /// a malformed pattern (patterns are compile-time constants).
    pub fn matches(&self, pattern: &str) -> bool {
        let bounds = parse_pattern(pattern);
        const PERMS: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        PERMS.iter().any(|perm| {
            perm.iter()
                .zip(&bounds)
                .all(|(&i, bound)| bound.admits(self.0[i]))
        })
    }
}

impl std::fmt::Display for FaceSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

#[derive(Debug, Clone, Copy)]
enum DegreeBound {
    Exact(usize),
    AtMost(usize),
    AtLeast(usize),
}

impl DegreeBound {
    fn admits(&self, d: usize) -> bool {
        match *self {
            DegreeBound::Exact(b) => d == b,
            DegreeBound::AtMost(b) => d <= b,
            DegreeBound::AtLeast(b) => d >= b,
        }
    }
}

fn parse_pattern(pattern: &str) -> [DegreeBound; 3] {
    let parts: Vec<DegreeBound> = pattern
        .split(',')
        .map(|p| {
            let p = p.trim();
            if let Some(num) = p.strip_suffix('-') {
                DegreeBound::AtMost(num.parse().expect("pattern degree"))
            } else if let Some(num) = p.strip_suffix('+') {
                DegreeBound::AtLeast(num.parse().expect("pattern degree"))
            } else {
                DegreeBound::Exact(p.parse().expect("pattern degree"))
            }
        })
        .collect();
    parts
        .try_into()
        .unwrap_or_else(|_| panic!("pattern {pattern:?} must have three entries"))
}

/// Degree triple of a 3-face; errors on non-3-faces and on boundaries that
/// repeat a vertex.
pub fn face_signature(g: &PlaneGraph, f: FaceId) -> Result<FaceSignature, ClassifyError> {
    let face = g.face(f);
    if face.degree() != 3 {
        return Err(ClassifyError::NotA3Face(f));
    }
    let vs = face.distinct_vertices();
    if vs.len() != 3 {
        return Err(ClassifyError::DegenerateBoundary(f));
    }
    let mut degs = [g.degree(vs[0]), g.degree(vs[1]), g.degree(vs[2])];
    degs.sort_unstable();
    Ok(FaceSignature(degs))
}

/// A bad 3-vertex: degree exactly 3 and on at least one 3-face.
pub fn is_bad_3vertex(g: &PlaneGraph, v: VertexId) -> bool {
    g.degree(v) == 3 && g.is_on_3face(v)
}

/// All bad 3-vertices, ascending.
pub fn bad_3vertices(g: &PlaneGraph) -> Vec<VertexId> {
    g.vertices().filter(|&v| is_bad_3vertex(g, v)).collect()
}

/// One pendant contact of a host vertex: a bad 3-vertex `bad3` adjacent to
/// `host`, on the 3-face `face` that avoids `host`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PendantIncidence {
    pub host: VertexId,
    pub bad3: VertexId,
    pub face: FaceId,
}

/// Every pendant contact of `v`, one entry per (bad 3-vertex neighbor,
/// 3-face) pair. The same face may appear through two different neighbors;
/// the distinct faces are [`pendant_3faces`].
pub fn pendant_incidences(g: &PlaneGraph, v: VertexId) -> Vec<PendantIncidence> {
    let mut out = Vec::new();
    for &u in g.neighbors(v) {
        if g.degree(u) != 3 {
            continue;
        }
        for f in g.incident_3faces(u) {
            if !g.face(f).contains(v) {
                out.push(PendantIncidence { host: v, bad3: u, face: f });
            }
        }
    }
    out
}

/// The distinct pendant 3-faces of `v`, ascending.
pub fn pendant_3faces(g: &PlaneGraph, v: VertexId) -> Vec<FaceId> {
    let mut fs: Vec<FaceId> = pendant_incidences(g, v).iter().map(|i| i.face).collect();
    fs.sort_unstable();
    fs.dedup();
    fs
}

/// The neighbor of a 3-vertex `u` that is not on its 3-face `f` (unique in
/// a simple graph); `None` only for degenerate inputs.
pub fn pendant_neighbor(g: &PlaneGraph, u: VertexId, f: FaceId) -> Option<VertexId> {
    let face = g.face(f);
    g.neighbors(u).iter().copied().find(|&w| !face.contains(w))
}

/// Taxonomy of a 4-vertex by its incident and pendant 3-faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourVertexKind {
    /// Exactly one incident 3-face and exactly two pendant 3-faces.
    Special,
    /// Exactly one incident 3-face and at most one pendant 3-face.
    Good,
    Neither,
}

pub fn special_or_good_4vertex(
    g: &PlaneGraph,
    v: VertexId,
) -> Result<FourVertexKind, ClassifyError> {
    if g.degree(v) != 4 {
        return Err(ClassifyError::NotA4Vertex(v));
    }
    if g.incident_3faces(v).len() != 1 {
        return Ok(FourVertexKind::Neither);
    }
    Ok(match pendant_3faces(g, v).len() {
        2 => FourVertexKind::Special,
        0 | 1 => FourVertexKind::Good,
        _ => FourVertexKind::Neither,
    })
}

/// True iff `f` is a (3,4,5⁺)-face whose 4-vertex also lies on a
/// (3,4,4)-face other than `f`.
pub fn is_bad_345p_face(g: &PlaneGraph, f: FaceId) -> Result<bool, ClassifyError> {
    let sig = face_signature(g, f)?;
    if !sig.matches("3,4,5+") {
        return Ok(false);
    }
    for v in g.face(f).distinct_vertices() {
        if g.degree(v) != 4 {
            continue;
        }
        for f2 in g.incident_3faces(v) {
            if f2 != f && face_signature(g, f2).map(|s| s.0 == [3, 4, 4]) == Ok(true) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// A chain of triangles `T₀ … Tₙ`, consecutive ones sharing exactly the
/// 4-vertex `tᵢ`; `faces.len() == connectors.len() + 1` and `n ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleChain {
    pub faces: Vec<FaceId>,
    pub connectors: Vec<VertexId>,
}

impl TriangleChain {
    /// Chain length `n` (number of steps from `T₀`).
    pub fn n(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn terminal(&self) -> FaceId {
        *self.faces.last().expect("chains are nonempty")
    }
}

/// Why a chain walk ended somewhere no well-formed chain may end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ChainAnomalyKind {
    /// The walk stepped back onto a triangle already in the chain.
    ClosedLoop,
    /// The terminal is a (4,4,4)-face containing a special 4-vertex.
    SpecialTerminal,
    /// A length-1 chain ending on a (3,4,4⁻)-face.
    ShortTerminal344,
    /// A chain of length ≥ 2 ending on a face with a 3-vertex.
    LongTerminal34k,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainAnomaly {
    pub kind: ChainAnomalyKind,
    pub chain: TriangleChain,
}

/// Everything the chain walk from one (3,4,4)-face finds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChainScan {
    /// Chains ending at a qualifying terminal: a bad (3,4,5⁺)-face at
    /// `n = 1`, a face with all degrees ≥ 4 other than (4,4,4), or a
    /// (4,4,4)-face containing a good 4-vertex.
    pub chains: Vec<TriangleChain>,
    pub anomalies: Vec<ChainAnomaly>,
}

/// Walks every chain of triangles out of the (3,4,4)-face `t0`: steps move
/// through degree-4 vertices to a triangle sharing exactly that vertex,
/// interiors must be (4,4,4)-faces, and each qualifying terminal or
/// anomalous ending is reported. Deterministic (vertices and faces visited
/// ascending). Errors if `t0` is not a (3,4,4)-face.
pub fn find_chains(g: &PlaneGraph, t0: FaceId) -> Result<ChainScan, ClassifyError> {
    if face_signature(g, t0)?.0 != [3, 4, 4] {
        return Err(ClassifyError::NotA344Face(t0));
    }
    let mut scan = ChainScan::default();
    let mut faces = vec![t0];
    let mut connectors = Vec::new();
    chain_dfs(g, &mut faces, &mut connectors, None, &mut scan);
    Ok(scan)
}

fn chain_dfs(
    g: &PlaneGraph,
    faces: &mut Vec<FaceId>,
    connectors: &mut Vec<VertexId>,
    entered: Option<VertexId>,
    scan: &mut ChainScan,
) {
    let last = *faces.last().expect("walk starts at t0");
    let last_verts = g.face(last).distinct_vertices();
    for &c in &last_verts {
        if g.degree(c) != 4 || Some(c) == entered {
            continue;
        }
        for t in g.incident_3faces(c) {
            if t == last {
                continue;
            }
            let t_verts = g.face(t).distinct_vertices();
            let shared = t_verts.iter().filter(|v| last_verts.contains(v)).count();
            if shared != 1 {
                continue;
            }
            faces.push(t);
            connectors.push(c);
            let snapshot = || TriangleChain { faces: faces.clone(), connectors: connectors.clone() };
            if faces[..faces.len() - 1].contains(&t) {
                scan.anomalies.push(ChainAnomaly { kind: ChainAnomalyKind::ClosedLoop, chain: snapshot() });
            } else if let Ok(sig) = face_signature(g, t) {
                let n = faces.len() - 1;
                if sig.0 == [4, 4, 4] {
                    let kinds: Vec<FourVertexKind> = t_verts
                        .iter()
                        .map(|&x| special_or_good_4vertex(g, x).expect("all degree 4"))
                        .collect();
                    if kinds.contains(&FourVertexKind::Special) {
                        scan.anomalies.push(ChainAnomaly {
                            kind: ChainAnomalyKind::SpecialTerminal,
                            chain: snapshot(),
                        });
                    }
                    if kinds.contains(&FourVertexKind::Good) {
                        scan.chains.push(snapshot());
                    }
                    chain_dfs(g, faces, connectors, Some(c), scan);
                } else if sig.0[0] == 3 {
                    // Every face reached through a degree-4 connector
                    // contains that 4-vertex, so these are (3,4,k)-faces.
                    if n >= 2 {
                        scan.anomalies.push(ChainAnomaly {
                            kind: ChainAnomalyKind::LongTerminal34k,
                            chain: snapshot(),
                        });
                    } else if n == 1 && sig.matches("3,4,4-") {
                        scan.anomalies.push(ChainAnomaly {
                            kind: ChainAnomalyKind::ShortTerminal344,
                            chain: snapshot(),
                        });
                    } else if n == 1 && sig.matches("3,4,5+") {
                        // The terminal's only 4-vertex is the connector,
                        // which lies on the (3,4,4)-face t0, so this
                        // terminal is a bad (3,4,5⁺)-face by construction.
                        scan.chains.push(snapshot());
                    }
                } else if sig.0[0] >= 4 {
                    scan.chains.push(snapshot());
                }
            }
            faces.pop();
            connectors.pop();
        }
    }
}

/// Terminals of qualifying chains from every (3,4,4)-face of the graph.
pub fn chain_terminals(g: &PlaneGraph) -> BTreeSet<FaceId> {
    let mut out = BTreeSet::new();
    for face in g.faces() {
        if face_signature(g, face.id).map(|s| s.0 == [3, 4, 4]) == Ok(true) {
            let scan = find_chains(g, face.id).expect("signature checked");
            out.extend(scan.chains.iter().map(TriangleChain::terminal));
        }
    }
    out
}

/// Grading of a 3-face by its 3-vertices' pendant neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoorClass {
    /// At least two 3-vertices whose pendant neighbors have degree ≤ 5.
    Poor,
    /// Exactly one 3-vertex with a pendant neighbor of degree ≤ 5.
    SemiPoor,
    /// Has 3-vertices, but each one's pendant neighbor has degree ≥ 6.
    NonPoor,
    /// No 3-vertex on the face.
    NotApplicable,
}

impl PoorClass {
    pub fn label(&self) -> &'static str {
        match self {
            PoorClass::Poor => "poor",
            PoorClass::SemiPoor => "semi_poor",
            PoorClass::NonPoor => "non_poor",
            PoorClass::NotApplicable => "not_applicable",
        }
    }
}

/// The distinct degree-3 vertices on a 3-face, ascending.
pub fn three_vertices_of(g: &PlaneGraph, f: FaceId) -> Vec<VertexId> {
    g.face(f)
        .distinct_vertices()
        .into_iter()
        .filter(|&v| g.degree(v) == 3)
        .collect()
}

/// Poor / semi-poor / non-poor grading. A 3-vertex with no off-face
/// neighbor (degenerate inputs only) counts as having a high pendant
/// neighbor, since nothing is available to recolor.
pub fn poor_class(g: &PlaneGraph, f: FaceId) -> Result<PoorClass, ClassifyError> {
    face_signature(g, f)?;
    let threes = three_vertices_of(g, f);
    if threes.is_empty() {
        return Ok(PoorClass::NotApplicable);
    }
    let low = threes
        .iter()
        .filter(|&&u| pendant_neighbor(g, u, f).is_some_and(|w| g.degree(w) <= 5))
        .count();
    Ok(match low {
        0 => PoorClass::NonPoor,
        1 => PoorClass::SemiPoor,
        _ => PoorClass::Poor,
    })
}

/// A poor 3-vertex: on a poor or semi-poor 3-face, with a pendant neighbor
/// of degree ≤ 5 there.
pub fn is_poor_3vertex(g: &PlaneGraph, u: VertexId) -> bool {
    g.degree(u) == 3
        && g.incident_3faces(u).into_iter().any(|f| {
            matches!(poor_class(g, f), Ok(PoorClass::Poor | PoorClass::SemiPoor))
                && pendant_neighbor(g, u, f).is_some_and(|w| g.degree(w) <= 5)
        })
}

/// True iff `v` is incident to at least two poor 3-faces and has at least
/// one pendant 3-face — the portfolio that downgrades a 7-vertex's payment
/// to a semi-poor (3,7,7⁺)-face.
pub fn has_poor_pendant_portfolio(g: &PlaneGraph, v: VertexId) -> bool {
    let poor = g
        .incident_3faces(v)
        .into_iter()
        .filter(|&f| poor_class(g, f) == Ok(PoorClass::Poor))
        .count();
    poor >= 2 && !pendant_3faces(g, v).is_empty()
}

/// True iff the semi-poor face `f` is a (3,7,7⁺)-face one of whose
/// 7-vertices carries the poor-plus-pendant portfolio. Errors when `f` is
/// not semi-poor.
pub fn is_special_semipoor_377(g: &PlaneGraph, f: FaceId) -> Result<bool, ClassifyError> {
    if poor_class(g, f)? != PoorClass::SemiPoor {
        return Err(ClassifyError::NotSemiPoor(f));
    }
    if !face_signature(g, f)?.matches("3,7,7+") {
        return Ok(false);
    }
    Ok(g.face(f)
        .distinct_vertices()
        .into_iter()
        .any(|v| g.degree(v) == 7 && has_poor_pendant_portfolio(g, v)))
}
