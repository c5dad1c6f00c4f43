/*!
Splice operations for growing plane graphs.

Both operations edit the rotation table and rebuild the graph, so the
spherical-embedding check at construction certifies every result:

* [`insert_vertex_in_face`] places a new vertex inside a face and joins it
  to chosen boundary-walk positions;
* [`split_face`] draws a chord between two boundary-walk positions.

The geometry is encoded purely combinatorially. A face walk visits
`…, b_{p-1}, b_p, b_{p+1}, …`, and the corner of the face at position `p`
sits between the neighbors `b_{p-1}` and `b_{p+1}` in the rotation at
`b_p`; anything drawn into that corner is spliced into the rotation
immediately after `b_{p-1}`. A new interior vertex sees its attachment
points in reverse walk order.
*/

use crate::plane_graph::{FaceId, GraphError, PlaneGraph, VertexId, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrowError {
    #[error("face id {0} out of range")]
    UnknownFace(usize),
    #[error("position {pos} out of range for face {face}")]
    BadPosition { face: FaceId, pos: usize },
    #[error("at least one attachment position is required")]
    NoAttachments,
    #[error("attachment positions must be strictly ascending")]
    UnsortedPositions,
    #[error("two attachment positions land on the same vertex {0}")]
    RepeatedAttachmentVertex(VertexId),
    #[error("vertices {0} and {1} are already adjacent")]
    AlreadyAdjacent(VertexId, VertexId),
    #[error("both positions name the same vertex {0}")]
    SameVertex(VertexId),
    #[error("graph is at the {MAX_VERTICES}-vertex format limit")]
    TooLarge,
    #[error("no face hosts the requested anchors {0:?}")]
    NoHostFace(Vec<VertexId>),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Inserts a new vertex (id `old vertex count + 1`) inside `face`, joined
/// to the boundary-walk positions in `positions` (strictly ascending; the
/// walk vertices there must be distinct). One position makes a pendant;
/// `m ≥ 2` positions split the face into `m` faces.
pub fn insert_vertex_in_face(
    g: &PlaneGraph,
    face: FaceId,
    positions: &[usize],
) -> Result<PlaneGraph, GrowError> {
    if face >= g.face_count() {
        return Err(GrowError::UnknownFace(face));
    }
    if positions.is_empty() {
        return Err(GrowError::NoAttachments);
    }
    if g.vertex_count() >= MAX_VERTICES {
        return Err(GrowError::TooLarge);
    }
    let walk = &g.face(face).boundary;
    if positions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(GrowError::UnsortedPositions);
    }
    if let Some(&p) = positions.iter().find(|&&p| p >= walk.len()) {
        return Err(GrowError::BadPosition { face, pos: p });
    }
    let mut attach_vertices: Vec<VertexId> = positions.iter().map(|&p| walk[p]).collect();
    {
        let mut sorted = attach_vertices.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GrowError::RepeatedAttachmentVertex(w[0]));
        }
    }

    let z = g.vertex_count() + 1;
    let mut rotation = g.rotation_table().to_vec();
    for &p in positions {
        let b = walk[p];
        let pred = walk[(p + walk.len() - 1) % walk.len()];
        let idx = rotation[b - 1]
            .iter()
            .position(|&x| x == pred)
            .expect("walk predecessor is a neighbor");
        rotation[b - 1].insert(idx + 1, z);
    }
    attach_vertices.reverse();
    rotation.push(attach_vertices);
    Ok(PlaneGraph::from_rotation(rotation)?)
}

/// Draws a chord of `face` between boundary-walk positions `i` and `j`,
/// splitting it into two faces. The endpoints must be distinct vertices
/// that are not yet adjacent.
pub fn split_face(
    g: &PlaneGraph,
    face: FaceId,
    i: usize,
    j: usize,
) -> Result<PlaneGraph, GrowError> {
    if face >= g.face_count() {
        return Err(GrowError::UnknownFace(face));
    }
    let walk = &g.face(face).boundary;
    if let Some(&p) = [i, j].iter().find(|&&p| p >= walk.len()) {
        return Err(GrowError::BadPosition { face, pos: p });
    }
    let (u, v) = (walk[i], walk[j]);
    if u == v {
        return Err(GrowError::SameVertex(u));
    }
    if g.has_edge(u, v) {
        return Err(GrowError::AlreadyAdjacent(u, v));
    }
    let mut rotation = g.rotation_table().to_vec();
    for (pos, at, other) in [(i, u, v), (j, v, u)] {
        let pred = walk[(pos + walk.len() - 1) % walk.len()];
        let idx = rotation[at - 1]
            .iter()
            .position(|&x| x == pred)
            .expect("walk predecessor is a neighbor");
        rotation[at - 1].insert(idx + 1, other);
    }
    Ok(PlaneGraph::from_rotation(rotation)?)
}

/// Inserts a new vertex joined to the given anchor vertices, hosted by the
/// first face (in id order) whose boundary holds all anchors at distinct
/// positions in a consistent cyclic order. Deterministic.
pub fn attach(g: &PlaneGraph, anchors: &[VertexId]) -> Result<PlaneGraph, GrowError> {
    if anchors.is_empty() {
        return Err(GrowError::NoAttachments);
    }
    for face in g.faces() {
        if let Some(positions) = anchor_positions(&face.boundary, anchors) {
            return insert_vertex_in_face(g, face.id, &positions);
        }
    }
    Err(GrowError::NoHostFace(anchors.to_vec()))
}

/// First (lexicographic over occurrence choices) set of distinct walk
/// positions holding `anchors` in the given cyclic order or its reverse;
/// returned ascending.
fn anchor_positions(walk: &[VertexId], anchors: &[VertexId]) -> Option<Vec<usize>> {
    let occurrences: Vec<Vec<usize>> = anchors
        .iter()
        .map(|&a| {
            walk.iter()
                .enumerate()
                .filter(|&(_, &w)| w == a)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    if occurrences.iter().any(Vec::is_empty) {
        return None;
    }
    let mut choice = vec![0usize; anchors.len()];
    loop {
        let tuple: Vec<usize> = choice
            .iter()
            .zip(&occurrences)
            .map(|(&c, occ)| occ[c])
            .collect();
        let mut sorted = tuple.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let distinct = sorted.len() == tuple.len();
        if distinct {
            let mut reversed = tuple.clone();
            reversed.reverse();
            if cyclically_increasing(&tuple) || cyclically_increasing(&reversed) {
                return Some(sorted);
            }
        }
        // Odometer over occurrence choices.
        let mut k = anchors.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < occurrences[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// True iff the distinct values read as ascending after some rotation
/// (at most one circular descent).
fn cyclically_increasing(t: &[usize]) -> bool {
    let descents = (0..t.len())
        .filter(|&i| t[i] > t[(i + 1) % t.len()])
        .count();
    descents <= 1
}

/// Adds the chord `u`–`v` inside the first face whose boundary holds both.
pub fn connect(g: &PlaneGraph, u: VertexId, v: VertexId) -> Result<PlaneGraph, GrowError> {
    if u == v {
        return Err(GrowError::SameVertex(u));
    }
    if g.has_edge(u, v) {
        return Err(GrowError::AlreadyAdjacent(u, v));
    }
    for face in g.faces() {
        let pu = face.boundary.iter().position(|&x| x == u);
        let pv = face.boundary.iter().position(|&x| x == v);
        if let (Some(i), Some(j)) = (pu, pv) {
            return split_face(g, face.id, i, j);
        }
    }
    Err(GrowError::NoHostFace(vec![u, v]))
}

/// Adds pendant vertices at `v` until its degree reaches `d`. Each pendant
/// goes into the largest-degree face at `v` (smallest id on ties), so
/// existing 3-faces are never stretched when a larger face is available.
pub fn pad_to_degree(g: &PlaneGraph, v: VertexId, d: usize) -> Result<PlaneGraph, GrowError> {
    let mut g = g.clone();
    while g.degree(v) < d {
        let mut fs: Vec<FaceId> = g.faces_at(v).to_vec();
        fs.sort_unstable();
        fs.dedup();
        let host = fs
            .into_iter()
            .min_by_key(|&f| (std::cmp::Reverse(g.face(f).degree()), f))
            .expect("every vertex lies on a face");
        let pos = g
            .face(host)
            .boundary
            .iter()
            .position(|&x| x == v)
            .expect("host face contains v");
        g = insert_vertex_in_face(&g, host, &[pos])?;
    }
    Ok(g)
}

/// Hangs a fresh triangle off `v`: two new vertices `z1 = n+1`, `z2 = n+2`
/// forming the 3-face `{v, z1, z2}`, with `z1`, `z2` of degree 2.
pub fn attach_triangle_at(g: &PlaneGraph, v: VertexId) -> Result<PlaneGraph, GrowError> {
    let g1 = pad_to_degree(g, v, g.degree(v) + 1)?;
    let z1 = g1.vertex_count();
    let f = g1.faces_at(z1)[0];
    let walk = &g1.face(f).boundary;
    let q = walk.iter().position(|&x| x == z1).expect("pendant is on its face");
    let p = (q + walk.len() - 1) % walk.len();
    debug_assert_eq!(walk[p], v, "the walk enters a pendant from its anchor");
    insert_vertex_in_face(&g1, f, &[p.min(q), p.max(q)])
}

/// The 2-vertex graph with a single edge.
pub fn k2() -> PlaneGraph {
    PlaneGraph::from_rotation(vec![vec![2], vec![1]]).expect("valid")
}

/// The triangle on vertices 1, 2, 3.
pub fn triangle() -> PlaneGraph {
    cycle(3)
}

/// The cycle on vertices 1..=n (n ≥ 3).
pub fn cycle(n: usize) -> PlaneGraph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let rotation = (1..=n)
        .map(|v| {
            let prev = if v == 1 { n } else { v - 1 };
            let next = if v == n { 1 } else { v + 1 };
            vec![prev, next]
        })
        .collect();
    PlaneGraph::from_rotation(rotation).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inserting_a_hub_into_a_triangle_face_yields_the_tetrahedral_map() {
        let g = triangle();
        let g = insert_vertex_in_face(&g, 0, &[0, 1, 2]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (4, 6, 4));
        assert!(g.faces().iter().all(|f| f.degree() == 3));
        assert_eq!(g.degree(4), 3);
    }

    #[test]
    fn pendant_insertion_keeps_face_count() {
        let g = triangle();
        let before = g.face_count();
        let g = insert_vertex_in_face(&g, 0, &[1]).unwrap();
        assert_eq!(g.face_count(), before);
        assert_eq!(g.degree(4), 1);
        assert_eq!(g.face(0).degree(), 5);
    }

    #[test]
    fn splitting_a_path_face_closes_the_triangle() {
        let p3 = PlaneGraph::from_rotation(vec![vec![2], vec![1, 3], vec![2]]).unwrap();
        let g = split_face(&p3, 0, 0, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (3, 3, 2));
        assert!(g.faces().iter().all(|f| f.degree() == 3));
    }

    #[test]
    fn attach_triangle_builds_a_bowtie_from_a_triangle() {
        let g = attach_triangle_at(&triangle(), 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (5, 6, 3));
        let mut degs: Vec<usize> = g.faces().iter().map(|f| f.degree()).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 3, 6]);
        assert_eq!(g.degree(3), 4);
        assert_eq!(g.face_with_vertices(&[3, 4, 5]).map(|f| g.face(f).degree()), Some(3));
        assert!(g.in_class());
    }

    #[test]
    fn padding_raises_degree_without_touching_3faces() {
        let g = pad_to_degree(&triangle(), 1, 4).unwrap();
        assert_eq!(g.degree(1), 4);
        assert_eq!(g.vertex_count(), 5);
        // One original 3-face survives; the pads stretched the other face.
        let mut degs: Vec<usize> = g.faces().iter().map(|f| f.degree()).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 7]);
    }

    #[test]
    fn connect_splits_a_hexagon() {
        let g = connect(&cycle(6), 1, 4).unwrap();
        assert_eq!(g.face_count(), 3);
        let mut degs: Vec<usize> = g.faces().iter().map(|f| f.degree()).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![4, 4, 6]);
    }

    #[test]
    fn attach_finds_cyclically_ordered_anchors() {
        let g = attach(&cycle(6), &[1, 3, 5]).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.degree(7), 3);
        let mut degs: Vec<usize> = g.faces().iter().map(|f| f.degree()).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![4, 4, 4, 6]);
    }

    #[test]
    fn rejects_bad_splices() {
        let g = triangle();
        assert_eq!(
            insert_vertex_in_face(&g, 9, &[0]).unwrap_err(),
            GrowError::UnknownFace(9)
        );
        assert_eq!(
            insert_vertex_in_face(&g, 0, &[]).unwrap_err(),
            GrowError::NoAttachments
        );
        assert_eq!(
            insert_vertex_in_face(&g, 0, &[1, 1]).unwrap_err(),
            GrowError::UnsortedPositions
        );
        assert_eq!(
            insert_vertex_in_face(&g, 0, &[0, 7]).unwrap_err(),
            GrowError::BadPosition { face: 0, pos: 7 }
        );
        let p3 = PlaneGraph::from_rotation(vec![vec![2], vec![1, 3], vec![2]]).unwrap();
        assert_eq!(
            insert_vertex_in_face(&p3, 0, &[1, 3]).unwrap_err(),
            GrowError::RepeatedAttachmentVertex(2)
        );
        // The triangle's first face walk is [1, 3, 2].
        assert_eq!(split_face(&g, 0, 0, 1).unwrap_err(), GrowError::AlreadyAdjacent(1, 3));
        assert_eq!(split_face(&p3, 0, 1, 3).unwrap_err(), GrowError::SameVertex(2));
        assert_eq!(connect(&g, 1, 1).unwrap_err(), GrowError::SameVertex(1));
        assert_eq!(connect(&p3, 1, 9).unwrap_err(), GrowError::NoHostFace(vec![1, 9]));
    }

    #[test]
    fn every_splice_preserves_the_euler_identity() {
        // Drive a fixed mixed sequence of splices; construction re-checks
        // V - E + F = 2 each time, so reaching the end certifies all steps.
        let mut g = triangle();
        for step in 0..20 {
            let f = step % g.face_count();
            let walk_len = g.face(f).degree();
            g = match insert_vertex_in_face(&g, f, &[step % walk_len]) {
                Ok(next) => next,
                Err(_) => attach_triangle_at(&g, (step % g.vertex_count()) + 1).unwrap(),
            };
        }
        assert!(g.vertex_count() >= 23);
    }
}
