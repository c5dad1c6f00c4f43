/*!
Workbench for plane graphs: exact defective-coloring search, structural
configuration scanning with subgraph-removal oracles, and exact rational
charge-discharging with conservation and per-case audits.

Everything is deterministic: graphs are plane graphs given by rotation
systems, colorings are found by ordered backtracking, charges are exact
rationals, and corpus generation is seeded.
*/

pub mod classify;
pub mod corpus;
pub mod discharge;
pub mod extend;
pub mod fixtures;
pub mod grow;
pub mod planar_code;
pub mod plane_graph;
pub mod reducible;
pub mod report;
pub mod solver;
