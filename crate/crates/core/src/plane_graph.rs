/*!
Combinatorial plane graphs.

A graph is given by a rotation system: for every vertex, the cyclic
clockwise order of its neighbors. Faces are derived at construction by
walking directed edges (the walk from `(u, v)` continues with `(v, w)`
where `w` is the successor of `u` in the rotation at `v`) and the
construction rejects any rotation system that does not describe a sphere
embedding (Euler check `V - E + F = 2`). Faces are spherical: there is no
distinguished outer face.

Vertex ids are dense and 1-based, matching the planar_code interchange
format. Face ids are 0-based in discovery order, which is deterministic.
*/

use std::collections::HashMap;
use thiserror::Error;

/// 1-based dense vertex identifier.
pub type VertexId = usize;
/// 0-based face identifier (discovery order during face tracing).
pub type FaceId = usize;

/// Largest vertex count representable in single-byte planar_code.
pub const MAX_VERTICES: usize = 255;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("vertex {v} lists neighbor {n}, outside 1..={max}")]
    BadVertexRef { v: VertexId, n: usize, max: usize },
    #[error("vertex {0} lists itself as a neighbor")]
    SelfLoop(VertexId),
    #[error("vertex {v} lists neighbor {n} more than once")]
    RepeatedNeighbor { v: VertexId, n: VertexId },
    #[error("adjacency is not symmetric: {u} lists {v} but {v} does not list {u}")]
    Asymmetric { u: VertexId, v: VertexId },
    #[error("graph is not connected: vertex {0} is unreachable from vertex 1")]
    Disconnected(VertexId),
    #[error(
        "rotation system is not spherical: V={v}, E={e}, F={f} gives V-E+F={euler}, expected 2"
    )]
    NotSpherical { v: usize, e: usize, f: usize, euler: i64 },
    #[error("unknown vertex id {0}")]
    UnknownVertex(usize),
    #[error("unknown face id {0}")]
    UnknownFace(usize),
    #[error("cycle length {0} is unsupported: only lengths 3..=5 are checked")]
    BadCycleLength(usize),
}

/// One face of the embedding: the closed boundary walk, as the cyclic
/// sequence of vertices visited. Cut vertices may repeat on the walk; the
/// face degree is the walk length, not the number of distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    pub boundary: Vec<VertexId>,
}

impl Face {
    /// Length of the boundary walk.
    pub fn degree(&self) -> usize {
        self.boundary.len()
    }

    /// Distinct vertices on the boundary, ascending.
    pub fn distinct_vertices(&self) -> Vec<VertexId> {
        let mut vs = self.boundary.clone();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.boundary.contains(&v)
    }
}

/// An immutable plane graph: simple, connected, with a spherical rotation
/// system. All faces and incidence tables are computed at construction.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    /// `rotation[i]` is the clockwise neighbor order of vertex `i + 1`.
    rotation: Vec<Vec<VertexId>>,
    faces: Vec<Face>,
    /// Directed edge `(u, v)` -> id of the face whose boundary walk uses it.
    edge_face: HashMap<(VertexId, VertexId), FaceId>,
    /// `vertex_faces[i]` lists face ids at vertex `i + 1`, one entry per
    /// occurrence of the vertex on the face boundary (multiplicity).
    vertex_faces: Vec<Vec<FaceId>>,
    edge_count: usize,
}

impl PlaneGraph {
    /// Builds a plane graph from a rotation table: `rotation[i]` is the
    /// clockwise cyclic neighbor sequence of vertex `i + 1`. Checks
    /// simplicity, symmetry, connectivity, and the Euler condition.
    pub fn from_rotation(rotation: Vec<Vec<VertexId>>) -> Result<Self, GraphError> {
        let n = rotation.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }

        // Simplicity: neighbor ids in range, no loops, no repeats.
        let mut directed_edges = 0usize;
        for (i, nbrs) in rotation.iter().enumerate() {
            let v = i + 1;
            for &w in nbrs {
                if w == 0 || w > n {
                    return Err(GraphError::BadVertexRef { v, n: w, max: n });
                }
                if w == v {
                    return Err(GraphError::SelfLoop(v));
                }
            }
            let mut seen = nbrs.clone();
            seen.sort_unstable();
            for pair in seen.windows(2) {
                if pair[0] == pair[1] {
                    return Err(GraphError::RepeatedNeighbor { v, n: pair[0] });
                }
            }
            directed_edges += nbrs.len();
        }

        // Symmetry.
        for (i, nbrs) in rotation.iter().enumerate() {
            let u = i + 1;
            for &v in nbrs {
                if !rotation[v - 1].contains(&u) {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        let edge_count = directed_edges / 2;

        // Connectivity (BFS from vertex 1).
        let mut reached = vec![false; n + 1];
        reached[1] = true;
        let mut queue = vec![1];
        while let Some(u) = queue.pop() {
            for &w in &rotation[u - 1] {
                if !reached[w] {
                    reached[w] = true;
                    queue.push(w);
                }
            }
        }
        if let Some(v) = (1..=n).find(|&v| !reached[v]) {
            return Err(GraphError::Disconnected(v));
        }

        // Face tracing: every directed edge belongs to exactly one boundary
        // walk. From (u, v) the walk continues with (v, w) where w follows u
        // in the rotation at v.
        let mut edge_face: HashMap<(VertexId, VertexId), FaceId> = HashMap::new();
        let mut faces: Vec<Face> = Vec::new();
        for u in 1..=n {
            for &v in &rotation[u - 1] {
                if edge_face.contains_key(&(u, v)) {
                    continue;
                }
                let fid = faces.len();
                let mut boundary = Vec::new();
                let (mut a, mut b) = (u, v);
                loop {
                    boundary.push(a);
                    edge_face.insert((a, b), fid);
                    let rot_b = &rotation[b - 1];
                    let pos = rot_b
                        .iter()
                        .position(|&x| x == a)
                        .expect("symmetry was checked");
                    let w = rot_b[(pos + 1) % rot_b.len()];
                    a = b;
                    b = w;
                    if (a, b) == (u, v) {
                        break;
                    }
                }
                faces.push(Face { id: fid, boundary });
            }
        }
        // A single isolated vertex embeds on the sphere with one face whose
        // boundary walk is empty.
        if n == 1 {
            faces.push(Face {
                id: 0,
                boundary: Vec::new(),
            });
        }

        let euler = n as i64 - edge_count as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(GraphError::NotSpherical {
                v: n,
                e: edge_count,
                f: faces.len(),
                euler,
            });
        }

        let mut vertex_faces = vec![Vec::new(); n];
        for face in &faces {
            for &v in &face.boundary {
                vertex_faces[v - 1].push(face.id);
            }
        }

        Ok(PlaneGraph {
            rotation,
            faces,
            edge_face,
            vertex_faces,
            edge_count,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        1..=self.rotation.len()
    }

    /// Undirected edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The full rotation table; entry `i` belongs to vertex `i + 1`.
    pub fn rotation_table(&self) -> &[Vec<VertexId>] {
        &self.rotation
    }

    /// Neighbors of `v` in clockwise rotation order. Panics on an unknown
    /// vertex id; external ids must be validated with [`check_vertex`].
    ///
    /// [`check_vertex`]: PlaneGraph::check_vertex
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v - 1]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v - 1].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rotation[u - 1].contains(&v)
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    /// Face ids at `v`, one entry per occurrence of `v` on the boundary.
    pub fn faces_at(&self, v: VertexId) -> &[FaceId] {
        &self.vertex_faces[v - 1]
    }

    /// Distinct ids of 3-faces containing `v`, ascending.
    pub fn incident_3faces(&self, v: VertexId) -> Vec<FaceId> {
        let mut fs: Vec<FaceId> = self.vertex_faces[v - 1]
            .iter()
            .copied()
            .filter(|&f| self.faces[f].degree() == 3)
            .collect();
        fs.sort_unstable();
        fs.dedup();
        fs
    }

    pub fn is_on_3face(&self, v: VertexId) -> bool {
        self.vertex_faces[v - 1]
            .iter()
            .any(|&f| self.faces[f].degree() == 3)
    }

    /// The face whose boundary walk uses the directed edge `(u, v)`.
    pub fn face_of_directed_edge(&self, u: VertexId, v: VertexId) -> Option<FaceId> {
        self.edge_face.get(&(u, v)).copied()
    }

    /// Finds the face whose distinct vertex set equals `set`, if any.
    pub fn face_with_vertices(&self, set: &[VertexId]) -> Option<FaceId> {
        let mut want = set.to_vec();
        want.sort_unstable();
        want.dedup();
        self.faces
            .iter()
            .find(|f| f.distinct_vertices() == want)
            .map(|f| f.id)
    }

    pub fn check_vertex(&self, v: usize) -> Result<VertexId, GraphError> {
        if v >= 1 && v <= self.vertex_count() {
            Ok(v)
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    pub fn check_face(&self, f: usize) -> Result<FaceId, GraphError> {
        if f < self.faces.len() {
            Ok(f)
        } else {
            Err(GraphError::UnknownFace(f))
        }
    }

    /// True iff the graph contains a simple cycle on exactly `len` vertices.
    /// Only lengths 3..=5 are supported. Each candidate cycle is searched
    /// from its minimum vertex, over paths through larger vertices only.
    pub fn has_cycle_of_length(&self, len: usize) -> Result<bool, GraphError> {
        if !(3..=5).contains(&len) {
            return Err(GraphError::BadCycleLength(len));
        }
        let mut path = Vec::with_capacity(len);
        for s in self.vertices() {
            path.clear();
            path.push(s);
            if self.cycle_dfs(s, len, &mut path) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn cycle_dfs(&self, s: VertexId, len: usize, path: &mut Vec<VertexId>) -> bool {
        let last = *path.last().expect("path starts nonempty");
        if path.len() == len {
            return self.has_edge(last, s);
        }
        for &w in self.neighbors(last) {
            if w > s && !path.contains(&w) {
                path.push(w);
                if self.cycle_dfs(s, len, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }

    /// True iff the graph has no 4-cycle and no 5-cycle (the graph class all
    /// structural lemmas and charge bounds are stated for).
    pub fn in_class(&self) -> bool {
        !self.has_cycle_of_length(4).expect("4 is supported")
            && !self.has_cycle_of_length(5).expect("5 is supported")
    }
}
