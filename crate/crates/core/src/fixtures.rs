/*!
Named host graphs for tests and demonstrations.

Two catalogs, both deterministic:

* [`config_hosts`] — for every known configuration, a small plane graph
  containing at least one occurrence of it, built so the occurrence
  survives the scanner's exact guards.
* [`charge_cases`] — hosts that realize the audit's per-case shapes with
  hand-computed final charges, frozen to the quarter. Cases whose bound
  genuinely needs structure the host lacks are frozen as violations
  (`meets_bound: Some(false)`), never patched to look green.

All constructions grow from a triangle by hanging triangles off single
vertices and padding degrees with pendant edges, so each builder documents
the vertex ids it creates.
*/

use crate::discharge::{ChargeNode, RuleSetId};
use crate::grow::{attach_triangle_at, connect, cycle, insert_vertex_in_face, pad_to_degree, triangle};
use crate::plane_graph::{PlaneGraph, VertexId};
use crate::reducible::ConfigId;
use num_rational::Rational64;

fn pad(g: &PlaneGraph, v: VertexId, d: usize) -> PlaneGraph {
    pad_to_degree(g, v, d).expect("fixture padding is valid")
}

fn tri_at(g: &PlaneGraph, v: VertexId) -> PlaneGraph {
    attach_triangle_at(g, v).expect("fixture triangle attachment is valid")
}

/// K4 as a plane graph: four mutually adjacent 3-vertices.
pub fn k4() -> PlaneGraph {
    PlaneGraph::from_rotation(vec![
        vec![2, 3, 4],
        vec![1, 4, 3],
        vec![1, 2, 4],
        vec![1, 3, 2],
    ])
    .expect("K4 is a valid plane graph")
}

/// Triangle 1–2–3 padded with pendant edges to the given degrees.
/// Pad ids follow vertex order: 1's pads first, then 2's, then 3's.
pub fn padded_triangle(d1: usize, d2: usize, d3: usize) -> PlaneGraph {
    let mut g = triangle();
    for (v, d) in [(1, d1), (2, d2), (3, d3)] {
        g = pad(&g, v, d);
    }
    g
}

/// (3,4,5)-face {1,2,3} made bad by the (3,4,4)-face {2,4,5}; vertex 3
/// is the 5-vertex, vertex 2 the shared 4-vertex.
pub fn bad_345_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 2); // 4, 5; face {2,4,5}
    for (v, d) in [(1, 3), (3, 5), (4, 4), (5, 3)] {
        g = pad(&g, v, d);
    }
    g
}

/// (3,4,4)-face {1,2,3} chained to the (4,4,5)-face {3,4,5} through the
/// 4-vertex 3; the terminal qualifies, no anomalies.
pub fn chain_pair_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 3); // 4, 5; face {3,4,5}
    for (v, d) in [(1, 3), (2, 4), (4, 4), (5, 5)] {
        g = pad(&g, v, d);
    }
    g
}

/// Triangle necklace A = {1,2,3}, B = {3,4,5}, C = {1,5,6}: consecutive
/// triangles share one 4-vertex and the walk closes back onto A.
pub fn chain_loop_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 3); // B = {3,4,5}
    g = connect(&g, 1, 5).expect("outer face holds 1 and 5");
    // The chord just created the 3-face {1,3,5}; flood it with vertex 6
    // joined to 1 and 5 so the only 3-faces left are A, B and C = {1,5,6}.
    let d = g
        .face_with_vertices(&[1, 3, 5])
        .expect("chord face exists");
    let walk = g.face(d).boundary.clone();
    let mut positions: Vec<usize> = walk
        .iter()
        .enumerate()
        .filter(|&(_, &v)| v == 1 || v == 5)
        .map(|(i, _)| i)
        .collect();
    positions.sort_unstable();
    g = insert_vertex_in_face(&g, d, &positions).expect("valid insertion");
    for (v, d) in [(2, 3), (4, 4), (6, 4)] {
        g = pad(&g, v, d);
    }
    g
}

/// Chain A = {1,2,3} → B = {3,4,5} whose terminal (4,4,4)-face carries
/// the special 4-vertex 4 (one incident 3-face, two pendant ones).
pub fn chain_special_terminal_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 3); // B = {3,4,5}
    for (v, d) in [(1, 4), (2, 3), (4, 4), (5, 4)] {
        g = pad(&g, v, d);
    }
    // 4's pads are 9 and 10; turning each into a 3-vertex on its own
    // triangle gives 4 exactly two pendant 3-faces.
    g = tri_at(&g, 9);
    g = tri_at(&g, 10);
    g
}

/// Two (3,4,4)-faces {1,2,3} and {3,4,5} sharing the 4-vertex 3: a
/// length-1 chain ending on a face with a 3-vertex.
pub fn chain_short_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 3);
    for (v, d) in [(1, 4), (2, 3), (4, 4), (5, 3)] {
        g = pad(&g, v, d);
    }
    g
}

/// Chain A = {1,2,3} → B = {3,4,5} → C = {5,6,7} where C still has a
/// 3-vertex at distance two from the origin.
pub fn chain_long_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 3); // B = {3,4,5}
    g = tri_at(&g, 5); // C = {5,6,7}
    for (v, d) in [(1, 4), (2, 3), (4, 4), (6, 3), (7, 4)] {
        g = pad(&g, v, d);
    }
    g
}

/// (3,4,4)-face {1,2,3} whose 4-vertices both sit on second triangles,
/// leaving no good 4-vertex and no qualifying chain.
pub fn chain_missing_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 1); // {1,4,5}
    g = tri_at(&g, 3); // {3,6,7}
    pad(&g, 2, 3)
}

/// Two origins {1,4,5} and {2,6,7} whose chains pass through the middle
/// (4,4,4)-face {1,2,3} and enter the terminal {3,8,9} through the same
/// connector 3.
pub fn chain_clash_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 1); // A  = {1,4,5}
    g = tri_at(&g, 2); // A' = {2,6,7}
    g = tri_at(&g, 3); // T  = {3,8,9}
    for (v, d) in [(4, 3), (5, 4), (6, 3), (7, 4), (8, 4), (9, 5)] {
        g = pad(&g, v, d);
    }
    g
}

/// 5-vertex 1 on the two light triangles {1,2,3} and {1,4,5} with the
/// 3-valent fifth neighbor 6.
pub fn five_vertex_double_345_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 1); // {1,4,5}
    g = pad(&g, 1, 5); // fifth neighbor 6
    for (v, d) in [(6, 3), (2, 3), (3, 4), (4, 3), (5, 4)] {
        g = pad(&g, v, d);
    }
    g
}

/// 5-vertex 1 on two bad (3,4,5)-faces {1,2,3} and {1,6,7}, certified by
/// the (3,4,4)-faces {2,4,5} and {6,8,9}.
pub fn five_vertex_two_bad_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 2); // {2,4,5}
    g = tri_at(&g, 1); // {1,6,7}
    g = tri_at(&g, 6); // {6,8,9}
    g = pad(&g, 1, 5); // 10
    for (v, d) in [(3, 3), (4, 3), (5, 4), (7, 3), (8, 3), (9, 4)] {
        g = pad(&g, v, d);
    }
    g
}

/// 5-vertex 1 on the bad (3,4,5)-face {1,2,3} and the (3,3,5)-face
/// {1,6,7}.
pub fn five_vertex_bad_plus_335_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 2); // {2,4,5}
    g = tri_at(&g, 1); // {1,6,7}
    g = pad(&g, 1, 5); // 8
    for (v, d) in [(3, 3), (4, 3), (5, 4), (6, 3), (7, 3)] {
        g = pad(&g, v, d);
    }
    g
}

/// (3,5,6)-face {1,6,7} whose 3-vertex leans on a 1-valent neighbor while
/// the 5-vertex 1 carries the bad (3,4,5)-face {1,2,3} and the light
/// pendant face {8,9,10}.
pub fn face_35k_pendant_light_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 2); // {2,4,5}
    g = tri_at(&g, 1); // {1,6,7}
    g = pad(&g, 1, 5); // 8
    g = tri_at(&g, 8); // {8,9,10}
    for (v, d) in [(3, 3), (4, 3), (5, 4), (6, 3), (7, 6)] {
        g = pad(&g, v, d);
    }
    g
}

/// (3,5,5)-face {1,2,3} with both 5-vertices tied to bad (3,4,5)-faces
/// and pendant (3,4,4)-faces.
pub fn face_355_double_bad_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 2); // {2,4,5}
    g = tri_at(&g, 4); // {4,6,7}: the (3,4,4)-witness making {2,4,5} bad
    g = tri_at(&g, 3); // {3,8,9}
    g = tri_at(&g, 8); // {8,10,11}
    g = pad(&g, 2, 5); // 12
    g = tri_at(&g, 12); // {12,13,14}
    g = pad(&g, 3, 5); // 15
    g = tri_at(&g, 15); // {15,16,17}
    for (v, d) in [(1, 3), (5, 3), (6, 3), (7, 4), (9, 3), (10, 3), (11, 4), (13, 4), (14, 4), (16, 4), (17, 4)] {
        g = pad(&g, v, d);
    }
    g
}

/// 5-vertex 1 with the bad (3,4,5)-face {1,2,3}, the pendant
/// (3,4,4)-face {10,11,12}, and the chained (4,4,5)-face {1,6,7}.
pub fn five_vertex_chain_clash_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 2); // {2,4,5}
    g = tri_at(&g, 1); // T = {1,6,7}
    g = tri_at(&g, 6); // origin {6,8,9}
    g = pad(&g, 1, 5); // 10
    g = tri_at(&g, 10); // {10,11,12}
    for (v, d) in [(3, 3), (4, 3), (5, 4), (7, 4), (8, 3), (9, 4), (11, 4), (12, 4)] {
        g = pad(&g, v, d);
    }
    g
}

/// 6-vertex 1 with the bad (3,4,6)-face {1,2,3} plus two more light
/// (3,4⁻,6)-faces {1,4,5} and {1,6,7}.
pub fn six_vertex_triple_346_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 1); // {1,4,5}
    g = tri_at(&g, 1); // {1,6,7}
    g = tri_at(&g, 2); // witness {2,8,9}
    for (v, d) in [(3, 3), (4, 3), (5, 4), (6, 3), (7, 3), (8, 3), (9, 4)] {
        g = pad(&g, v, d);
    }
    g
}

/// 4-vertex 1 whose two incident 3-faces {1,2,3} and {1,4,5} are both
/// poor: the saturation ceiling ⌊4/2⌋ is reached.
pub fn poor_saturation_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 1); // {1,4,5}
    for (v, d) in [(2, 3), (3, 3), (4, 3), (5, 3)] {
        g = pad(&g, v, d);
    }
    g
}

/// 8-vertex 1 with three poor (3,3,8)-faces and two pendant 3-faces.
pub fn eight_vertex_overload_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 1); // {1,4,5}
    g = tri_at(&g, 1); // {1,6,7}
    g = pad(&g, 1, 8); // 8, 9
    g = tri_at(&g, 8); // {8,10,11}
    g = tri_at(&g, 9); // {9,12,13}
    for (v, d) in [(2, 3), (3, 3), (4, 3), (5, 3), (6, 3), (7, 3)] {
        g = pad(&g, v, d);
    }
    g
}

/// 7-vertex 1 with two poor (3,3,7)-faces, the semi-poor (3,6,7)-face
/// {1,6,7}, and one pendant 3-face.
pub fn seven_vertex_overload_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 1); // {1,4,5}
    g = tri_at(&g, 1); // {1,6,7}
    g = pad(&g, 1, 7); // 8
    g = tri_at(&g, 8); // {8,9,10}
    for (v, d) in [(2, 3), (3, 3), (4, 3), (5, 3), (6, 3), (7, 6)] {
        g = pad(&g, v, d);
    }
    g
}

/// Semi-poor (3,7,7)-face {1,2,3} whose 7-vertices both carry two poor
/// faces and a pendant 3-face.
pub fn face_377_symmetric_host() -> PlaneGraph {
    let mut g = tri_at(&triangle(), 2); // {2,4,5}
    g = tri_at(&g, 2); // {2,6,7}
    g = tri_at(&g, 3); // {3,8,9}
    g = tri_at(&g, 3); // {3,10,11}
    g = pad(&g, 1, 3); // 12
    g = pad(&g, 2, 7); // 13
    g = tri_at(&g, 13); // {13,14,15}
    g = pad(&g, 3, 7); // 16
    g = tri_at(&g, 16); // {16,17,18}
    for v in [4, 5, 6, 7, 8, 9, 10, 11] {
        g = pad(&g, v, 3);
    }
    g
}

/// (3,4,4)-face {1,2,3} whose special 4-vertex 2 has two pendant 3-faces
/// {4,6,7} and {5,8,9}.
pub fn face_344_special_host() -> PlaneGraph {
    let mut g = pad(&triangle(), 2, 4); // 4, 5
    g = tri_at(&g, 4); // {4,6,7}
    g = tri_at(&g, 5); // {5,8,9}
    g = pad(&g, 1, 3); // 10
    g = pad(&g, 3, 4); // 11, 12
    g
}

/// One host per configuration (a couple of configurations get two).
pub struct ConfigHost {
    pub name: &'static str,
    pub config: ConfigId,
    pub graph: PlaneGraph,
}

pub fn config_hosts() -> Vec<ConfigHost> {
    let host = |name, config, graph| ConfigHost { name, config, graph };
    vec![
        host("pentagon", ConfigId::Degree2Vertex, cycle(5)),
        host("tetrahedron", ConfigId::IncidenceOverflow, k4()),
        host("triangle-334", ConfigId::Face334, padded_triangle(3, 3, 4)),
        host(
            "five-wings",
            ConfigId::FiveVertexDouble345,
            five_vertex_double_345_host(),
        ),
        host(
            "cubic-corner",
            ConfigId::Adjacent3Vertices,
            padded_triangle(3, 3, 3),
        ),
        host(
            "lean-344",
            ConfigId::Face344PendantLight,
            padded_triangle(3, 4, 4),
        ),
        host("special-344", ConfigId::Face344Special, face_344_special_host()),
        host(
            "special-terminal",
            ConfigId::ChainSpecialTerminal,
            chain_special_terminal_host(),
        ),
        host("long-to-34k", ConfigId::ChainLongTo34k, chain_long_host()),
        host("short-to-344", ConfigId::ChainShortTo344, chain_short_host()),
        host("necklace", ConfigId::ChainClosed, chain_loop_host()),
        host("no-chains", ConfigId::ChainMissing, chain_missing_host()),
        host("shared-terminal", ConfigId::ChainOriginClash, chain_clash_host()),
        host(
            "two-bad-wings",
            ConfigId::FiveVertexDoubleBad,
            five_vertex_two_bad_host(),
        ),
        host(
            "bad-plus-335",
            ConfigId::FiveVertexDoubleBad,
            five_vertex_bad_plus_335_host(),
        ),
        host(
            "lean-35k",
            ConfigId::Face35kPendantLight,
            face_35k_pendant_light_host(),
        ),
        host(
            "tied-355",
            ConfigId::Face355DoubleBad,
            face_355_double_bad_host(),
        ),
        host(
            "bad-chain-five",
            ConfigId::FiveVertexChainClash,
            five_vertex_chain_clash_host(),
        ),
        host(
            "loaded-six",
            ConfigId::SixVertexTriple346,
            six_vertex_triple_346_host(),
        ),
        host(
            "low-neighborhood",
            ConfigId::ThreeVertexLowNbrs,
            padded_triangle(3, 3, 3),
        ),
        host(
            "poor-336",
            ConfigId::Face336Poorish,
            padded_triangle(3, 3, 6),
        ),
        host("poor-ceiling", ConfigId::PoorSaturation, poor_saturation_host()),
        host(
            "overloaded-eight",
            ConfigId::EightVertexOverload,
            eight_vertex_overload_host(),
        ),
        host(
            "overloaded-seven",
            ConfigId::SevenVertexOverload,
            seven_vertex_overload_host(),
        ),
        host(
            "symmetric-377",
            ConfigId::Face377Symmetric,
            face_377_symmetric_host(),
        ),
    ]
}

/// A frozen expected audit outcome for one element of one host.
pub struct ChargeCase {
    pub name: &'static str,
    pub ruleset: RuleSetId,
    pub graph: PlaneGraph,
    pub element: ChargeNode,
    pub label: &'static str,
    /// Hand-computed final charge after the rules run.
    pub expected_final: Rational64,
    /// Whether the final charge meets the audited bound; `Some(false)`
    /// entries document shapes whose bound needs structure these minimal
    /// hosts lack.
    pub meets_bound: Option<bool>,
}

fn face_node(g: &PlaneGraph, vs: &[VertexId]) -> ChargeNode {
    ChargeNode::Face(
        g.face_with_vertices(vs)
            .expect("fixture face exists by construction"),
    )
}

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

pub fn charge_cases() -> Vec<ChargeCase> {
    let mut cases = Vec::new();
    let mut case = |name: &'static str,
                    ruleset: RuleSetId,
                    graph: PlaneGraph,
                    element: ChargeNode,
                    label: &'static str,
                    expected_final: Rational64,
                    meets_bound: Option<bool>| {
        cases.push(ChargeCase {
            name,
            ruleset,
            graph,
            element,
            label,
            expected_final,
            meets_bound,
        });
    };

    // ---- Banked rule set, face cases ----

    // (3,3,5)-face fed by its 5-vertex and by both 3-vertices' 4-valent
    // off-face neighbors (pads 4 and 5 padded up to degree 4):
    // −3 + 2 + ½ + ½ = 0.
    let g = {
        let g = padded_triangle(3, 3, 5);
        let g = pad(&g, 4, 4);
        pad(&g, 5, 4)
    };
    case(
        "banked-face-335-fed",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 1: (3,3,5+)-face",
        q(0, 1),
        Some(true),
    );

    // The same face without the off-face feeders: −3 + 2 = −1, an honest
    // violation showing the bound leans on neighborhood structure.
    let g = padded_triangle(3, 3, 5);
    case(
        "banked-face-335-bare",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 1: (3,3,5+)-face",
        q(-1, 1),
        Some(false),
    );

    // (3,4,4)-face whose 4-vertices have no other triangles: each pays
    // its full 2 here: −3 + 2 + 2 = 1.
    let g = padded_triangle(3, 4, 4);
    case(
        "banked-face-344-plain",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 2: (3,4,4)-face",
        q(1, 1),
        Some(true),
    );

    // (3,4,4)-face with both 4-vertices split across two triangles and no
    // good 4-vertex: −3 + 1 + 1 + ½ (refloat) = −½; the refloat's funding
    // needs chains this host lacks, so the bank goes negative too.
    let g = chain_missing_host();
    case(
        "banked-face-344-refloated",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 2: (3,4,4)-face",
        q(-1, 2),
        Some(false),
    );

    // Bad (3,4,5)-face: −3 + 9/4 + 1 − ¼ (bank) = 0.
    let g = bad_345_host();
    case(
        "banked-face-345-bad",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 3: bad (3,4,5)-face",
        q(0, 1),
        Some(true),
    );
    // Its certifying (3,4,4)-face: −3 + 1 + 2 = 0.
    case(
        "banked-face-344-witness",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[2, 4, 5]),
        "Case 2: (3,4,4)-face",
        q(0, 1),
        Some(true),
    );
    // The 5-vertex behind the bad face: 4 − 9/4 = 7/4.
    case(
        "banked-vertex-5-bad",
        RuleSetId::R110,
        g,
        ChargeNode::Vertex(3),
        "k=5",
        q(7, 4),
        Some(true),
    );

    // Non-bad (3,4,5)-face alone: −3 + 2 + 2 = 1.
    let g = padded_triangle(3, 4, 5);
    case(
        "banked-face-345-plain",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 4: non-bad (3,4,5)-face",
        q(1, 1),
        Some(true),
    );

    // Non-bad (3,4,5)-face {1,6,7} starved by discounts: its 5-vertex
    // also serves a bad face (7/4 by the discount) and its 4-vertex is
    // split (1): −3 + 7/4 + 1 = −¼.
    let g = {
        let g = tri_at(&triangle(), 2); // {2,4,5} certifies {1,2,3}
        let g = tri_at(&g, 1); // {1,6,7}
        let g = tri_at(&g, 6); // {6,8,9}, a (4,4,4)-face
        let g = pad(&g, 1, 5);
        let mut g = g;
        for (v, d) in [(3, 3), (4, 3), (5, 4), (7, 3), (8, 4), (9, 4)] {
            g = pad(&g, v, d);
        }
        g
    };
    case(
        "banked-face-345-starved",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 6, 7]),
        "Case 4: non-bad (3,4,5)-face",
        q(-1, 4),
        Some(false),
    );

    // (3,4,6)-face, non-bad: −3 + 2 + 2 = 1.
    let g = padded_triangle(3, 4, 6);
    case(
        "banked-face-346-plain",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 5: (3,4,6)-face",
        q(1, 1),
        Some(true),
    );

    // Bad (3,4,6)-face: −3 + 9/4 + 1 − ¼ = 0.
    let g = {
        let g = tri_at(&triangle(), 2); // {2,4,5}
        let mut g = g;
        for (v, d) in [(1, 3), (3, 6), (4, 3), (5, 4)] {
            g = pad(&g, v, d);
        }
        g
    };
    case(
        "banked-face-346-bad",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 5: (3,4,6)-face",
        q(0, 1),
        Some(true),
    );

    // (3,4,7⁺)-face with a split 4-vertex: −3 + 1 + 9/4 = ¼ exactly.
    let g = {
        let g = tri_at(&triangle(), 2);
        let g = pad(&g, 1, 3);
        pad(&g, 3, 7)
    };
    case(
        "banked-face-347-quarter",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 6: (3,4,7+)-face",
        q(1, 4),
        Some(true),
    );

    // (3,5,5)-face: −3 + 3/2 + 3/2 = 0.
    let g = padded_triangle(3, 5, 5);
    case(
        "banked-face-355",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 7: (3,5,5)-face",
        q(0, 1),
        Some(true),
    );

    // (3,5,6)-face: −3 + 3/2 + 3/2 = 0.
    let g = padded_triangle(3, 5, 6);
    case(
        "banked-face-356",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 8: (3,5,6+)-face",
        q(0, 1),
        Some(true),
    );

    // (3,6,6)-face: −3 + 3/2 + 3/2 = 0.
    let g = padded_triangle(3, 6, 6);
    case(
        "banked-face-366",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 9: (3,6+,6+)-face",
        q(0, 1),
        Some(true),
    );

    // (4,4,4)-face with good 4-vertices: −3 + 6 − ½ (bank) = 5/2.
    let g = padded_triangle(4, 4, 4);
    case(
        "banked-face-444",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 10: (4,4,4)-face",
        q(5, 2),
        Some(true),
    );

    // (4,4,5)-face that is no chain terminal: −3 + 4 + 1 − ½ = 3/2.
    let g = padded_triangle(4, 4, 5);
    case(
        "banked-face-445-loose",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 11: (4+,4+,5+)-face",
        q(3, 2),
        Some(true),
    );

    // (4,4,5)-face as a chain terminal: −3 + 1 + 2 + 3/2 − ½ = 1; and the
    // chain's origin lands exactly on zero.
    let g = chain_pair_host();
    case(
        "banked-face-445-terminal",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[3, 4, 5]),
        "Case 11: (4+,4+,5+)-face",
        q(1, 1),
        Some(true),
    );
    case(
        "banked-face-344-origin",
        RuleSetId::R110,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 2: (3,4,4)-face",
        q(0, 1),
        Some(true),
    );

    // A 4-vertex serving one incident and one pendant 3-face keeps
    // 2 − ½ − 3/2 = 0… here with no incident faces it keeps 2 − ½ = 3/2.
    let g = {
        let g = padded_triangle(3, 3, 5);
        let g = pad(&g, 4, 4);
        pad(&g, 5, 4)
    };
    case(
        "banked-vertex-4-pendant",
        RuleSetId::R110,
        g,
        ChargeNode::Vertex(4),
        "k=4",
        q(3, 2),
        Some(true),
    );

    // ---- Bankless rule set, face cases ----

    // (4,4,4)-face: −3 + 1 + 1 + 1 = 0.
    let g = padded_triangle(4, 4, 4);
    case(
        "bankless-face-444",
        RuleSetId::R300,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 1: (4+,4+,4+)-face",
        q(0, 1),
        Some(true),
    );

    // (3,4,4)-face whose 3-vertex leans on a 6-vertex: −3 + 1 + 1 + 1 = 0.
    let g = {
        let g = padded_triangle(3, 4, 4);
        pad(&g, 4, 6) // 1's pendant neighbor grows to degree 6
    };
    case(
        "bankless-face-344-fed",
        RuleSetId::R300,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 2: (3,4+,4+)-face",
        q(0, 1),
        Some(true),
    );

    // (3,3,4)-face, both pendant neighbors 6-vertices: −3 + 1 + 1 + 1 = 0.
    let g = {
        let g = padded_triangle(3, 3, 4);
        let g = pad(&g, 4, 6);
        pad(&g, 5, 6)
    };
    case(
        "bankless-face-334-fed",
        RuleSetId::R300,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 3: (3,3,4+)-face",
        q(0, 1),
        Some(true),
    );

    // (3,3,5)-face under the same feeding: −3 + 2 + 1 + 1 = 1, strictly
    // above the bound.
    let g = {
        let g = padded_triangle(3, 3, 5);
        let g = pad(&g, 4, 6);
        pad(&g, 5, 6)
    };
    case(
        "bankless-face-335-surplus",
        RuleSetId::R300,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 3: (3,3,4+)-face",
        q(1, 1),
        Some(true),
    );

    // (3,3,11)-face: 3 from the big vertex, 1 + 1 from the pendant
    // feeders: −3 + 5 = 2.
    let g = {
        let g = padded_triangle(3, 3, 11);
        let g = pad(&g, 4, 6);
        pad(&g, 5, 6)
    };
    case(
        "bankless-face-33-11",
        RuleSetId::R300,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 3: (3,3,4+)-face",
        q(2, 1),
        Some(true),
    );
    // The 11-vertex itself: 16 − 3 = 13.
    case(
        "bankless-vertex-11",
        RuleSetId::R300,
        g,
        ChargeNode::Vertex(3),
        "k=11+",
        q(13, 1),
        Some(true),
    );

    // (3,3,3)-face with all three pendant neighbors 6-valent:
    // −3 + 1 + 1 + 1 = 0.
    let g = {
        let mut g = padded_triangle(3, 3, 3);
        for v in [4, 5, 6] {
            g = pad(&g, v, 6);
        }
        g
    };
    case(
        "bankless-face-333-fed",
        RuleSetId::R300,
        g.clone(),
        face_node(&g, &[1, 2, 3]),
        "Case 4: (3,3,3)-face",
        q(0, 1),
        Some(true),
    );

    // A 7-vertex with two poor faces, a semi-poor (3,7,7)-face and a
    // pendant 3-face pays 3 + 3 + 1 + 1 = 8 and lands exactly on zero —
    // the discounted semi-poor payment is what saves it.
    let g = face_377_symmetric_host();
    case(
        "bankless-vertex-7-discounted",
        RuleSetId::R300,
        g,
        ChargeNode::Vertex(2),
        "k=7",
        q(0, 1),
        Some(true),
    );

    // The overloaded 7-vertex: its semi-poor face is (3,6,7), too narrow
    // for the discount, so it pays 3 + 3 + 2 + 1 = 9 > 8 and sinks to −1.
    // Exactly the shape the scanner reports as reducible.
    let g = seven_vertex_overload_host();
    case(
        "bankless-vertex-7-overloaded",
        RuleSetId::R300,
        g,
        ChargeNode::Vertex(1),
        "k=7",
        q(-1, 1),
        Some(false),
    );

    cases
}

/// Graphs written out as planar_code fixture files (one record each).
pub fn code_samples() -> Vec<(&'static str, PlaneGraph)> {
    vec![
        ("triangle", triangle()),
        ("k4", k4()),
        ("hexagon", cycle(6)),
        ("bad-345-host", bad_345_host()),
        ("chain-pair", chain_pair_host()),
    ]
}
