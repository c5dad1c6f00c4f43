/*!
Reader and writer for planar_code, the de-facto binary interchange format
for plane graphs.

Layout: an optional ASCII header `>>planar_code<<`, then one or more graph
records back to back. A record is one byte `n` (vertex count, 1..=255),
followed for each vertex `v = 1..n` by its neighbor ids in clockwise
rotation order, one byte each, terminated by a `0` byte. Decoding feeds the
rotation table straight into [`PlaneGraph::from_rotation`], so every graph
that comes out of this module satisfies all plane-graph invariants.
*/

use crate::plane_graph::{GraphError, PlaneGraph};
use thiserror::Error;

/// Optional file header.
pub const HEADER: &[u8] = b">>planar_code<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("input ended early: {0}")]
    Truncated(&'static str),
    #[error("vertex count byte is 0")]
    ZeroVertexCount,
    #[error("input holds no graph record")]
    NoGraph,
    #[error("expected exactly one graph record, found {0} trailing bytes")]
    TrailingBytes(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Decodes every graph record in `bytes` (skipping one optional header).
pub fn decode_graphs(bytes: &[u8]) -> Result<Vec<PlaneGraph>, CodeError> {
    let mut rest = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    let mut graphs = Vec::new();
    while !rest.is_empty() {
        let (g, used) = decode_record(rest)?;
        graphs.push(g);
        rest = &rest[used..];
    }
    Ok(graphs)
}

/// Decodes exactly one graph record (optional header allowed); trailing
/// bytes are an error.
pub fn decode_graph(bytes: &[u8]) -> Result<PlaneGraph, CodeError> {
    let rest = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    if rest.is_empty() {
        return Err(CodeError::NoGraph);
    }
    let (g, used) = decode_record(rest)?;
    if used != rest.len() {
        return Err(CodeError::TrailingBytes(rest.len() - used));
    }
    Ok(g)
}

/// Decodes one record from the front of `bytes`; returns the graph and the
/// number of bytes consumed.
fn decode_record(bytes: &[u8]) -> Result<(PlaneGraph, usize), CodeError> {
    let n = *bytes.first().ok_or(CodeError::Truncated("vertex count"))? as usize;
    if n == 0 {
        return Err(CodeError::ZeroVertexCount);
    }
    let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut pos = 1usize;
    for _ in 0..n {
        let mut nbrs = Vec::new();
        loop {
            let b = *bytes
                .get(pos)
                .ok_or(CodeError::Truncated("neighbor list"))?;
            pos += 1;
            if b == 0 {
                break;
            }
            nbrs.push(b as usize);
        }
        rotation.push(nbrs);
    }
    Ok((PlaneGraph::from_rotation(rotation)?, pos))
}

/// Encodes one graph as a headerless record.
pub fn encode_graph(g: &PlaneGraph) -> Vec<u8> {
    let mut out = Vec::with_capacity(1 + 2 * g.edge_count() + g.vertex_count());
    out.push(g.vertex_count() as u8);
    for v in g.vertices() {
        for &w in g.neighbors(v) {
            out.push(w as u8);
        }
        out.push(0);
    }
    out
}

/// Encodes a sequence of records, optionally preceded by the header.
pub fn encode_graphs(graphs: &[PlaneGraph], with_header: bool) -> Vec<u8> {
    let mut out = Vec::new();
    if with_header {
        out.extend_from_slice(HEADER);
    }
    for g in graphs {
        out.extend_from_slice(&encode_graph(g));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    // Hand-encoded records, written out byte by byte from the format rules.
    const TRIANGLE: &[u8] = &[3, 2, 3, 0, 3, 1, 0, 1, 2, 0];
    const K4: &[u8] = &[4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0];
    const BOWTIE: &[u8] = &[5, 5, 2, 0, 1, 5, 0, 5, 4, 0, 3, 5, 0, 2, 1, 4, 3, 0];

    #[test]
    fn decodes_triangle() {
        let g = decode_graph(TRIANGLE).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (3, 3, 2));
        assert_eq!(TRIANGLE.len(), 1 + 3 * (2 + 1));
    }

    #[test]
    fn decodes_k4() {
        let g = decode_graph(K4).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (4, 6, 4));
    }

    #[test]
    fn decodes_bowtie() {
        let g = decode_graph(BOWTIE).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (5, 6, 3));
        assert_eq!(BOWTIE.len(), 1 + (4 + 1) + 4 * (2 + 1));
    }

    #[test]
    fn round_trips_are_byte_identical() {
        for body in [TRIANGLE, K4, BOWTIE] {
            let g = decode_graph(body).unwrap();
            assert_eq!(encode_graph(&g), body);
        }
    }

    #[test]
    fn header_is_optional_and_stripped() {
        let mut with_header = HEADER.to_vec();
        with_header.extend_from_slice(TRIANGLE);
        let g = decode_graph(&with_header).unwrap();
        assert_eq!(g.vertex_count(), 3);
    }

    #[test]
    fn concatenated_records_decode_in_order() {
        let mut bytes = HEADER.to_vec();
        bytes.extend_from_slice(TRIANGLE);
        bytes.extend_from_slice(BOWTIE);
        bytes.extend_from_slice(K4);
        let gs = decode_graphs(&bytes).unwrap();
        let counts: Vec<usize> = gs.iter().map(|g| g.vertex_count()).collect();
        assert_eq!(counts, vec![3, 5, 4]);
        // Re-encoding reproduces the stream byte for byte.
        assert_eq!(encode_graphs(&gs, true), bytes);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(decode_graph(&[]).unwrap_err(), CodeError::NoGraph);
        assert_eq!(decode_graph(&[0]).unwrap_err(), CodeError::ZeroVertexCount);
        assert_eq!(
            decode_graph(&[3, 2, 3, 0, 3, 1]).unwrap_err(),
            CodeError::Truncated("neighbor list")
        );
        let mut trailing = TRIANGLE.to_vec();
        trailing.push(7);
        assert_eq!(decode_graph(&trailing).unwrap_err(), CodeError::TrailingBytes(1));
        // Neighbor id beyond the vertex count.
        let bad = [2u8, 3, 0, 1, 0];
        assert!(matches!(decode_graph(&bad).unwrap_err(), CodeError::Graph(_)));
        // Structurally invalid graphs are rejected by construction.
        let disconnected = [4u8, 2, 0, 1, 0, 4, 0, 3, 0];
        assert!(matches!(
            decode_graph(&disconnected).unwrap_err(),
            CodeError::Graph(GraphError::Disconnected(3))
        ));
    }

    #[test]
    fn empty_stream_decodes_to_no_graphs() {
        assert_eq!(decode_graphs(HEADER).unwrap().len(), 0);
        assert_eq!(decode_graphs(&[]).unwrap().len(), 0);
    }
}
